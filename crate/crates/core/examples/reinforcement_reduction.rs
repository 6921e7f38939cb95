//! The reinforcement gadget: build it for the five-variable example, compute
//! its outer-connected domination number and a single edge that lowers it,
//! then do the same for an unsatisfiable formula.

use ocdom::alteration::reinforcement_ocd;
use ocdom::reduction::{assignment_from_witness, build_reinforcement_instance, witness_from_assignment};
use ocdom::sat::{brute_force_sat, parse_dimacs_cnf, saturated_3cnf, CnfFormula, EXAMPLE_5VAR};
use ocdom::solver::{gamma_tilde, is_ocd, SolverConfig};

fn report(label: &str, f: &CnfFormula, cfg: &SolverConfig) {
    let a = build_reinforcement_instance(f).unwrap();
    let g = &a.graph;
    let gamma = gamma_tilde(g, cfg).unwrap();
    println!(
        "{label}: {} vertices, {} edges, gamma~_c={}",
        g.order(),
        g.size(),
        gamma.value
    );
    println!(
        "  witness {:?}",
        a.roles_of(&gamma.witness)
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
    );

    let model = brute_force_sat(f, 24).unwrap();
    println!(
        "  satisfiable: {}",
        model.as_ref().map_or("no".to_string(), |m| m.to_string())
    );
    let r = reinforcement_ocd(g, Some(1), cfg).unwrap();
    if let Some(found) = r.found() {
        let e = found.witness_edges[0];
        println!(
            "  adding {}-{} lowers it to {}",
            a.role(e.u()),
            a.role(e.v()),
            found.gamma_after
        );
        let after = gamma_tilde(&found.apply(g), cfg).unwrap();
        println!(
            "  new witness {:?}",
            a.roles_of(&after.witness)
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
        );
    } else {
        println!("  no single edge lowers it");
    }

    if let Some(model) = model {
        let (d, e) = witness_from_assignment(&a, &model).unwrap();
        let h = g.add_edges(&[e.unwrap()]).unwrap();
        println!(
            "  model set {:?} is an OCD set of G+e: {}, decodes back: {}",
            a.roles_of(&d).iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            is_ocd(&h, &d),
            assignment_from_witness(&a, &d).unwrap() == model
        );
    }
}

fn main() {
    let cfg = SolverConfig::default();
    report("five-variable example", &parse_dimacs_cnf(EXAMPLE_5VAR).unwrap(), &cfg);
    report("all sign patterns", &saturated_3cnf(3, [1, 2, 3]).unwrap(), &cfg);
}
