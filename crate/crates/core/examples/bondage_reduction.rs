//! The bondage gadget for a small satisfiable formula: its outer-connected
//! domination number, the largest value after a single edge removal, and an
//! edge whose removal raises it.

use ocdom::alteration::{bondage_ocd, gamma_after_each_single_removal};
use ocdom::reduction::{build_bondage_instance, Role};
use ocdom::sat::{brute_force_sat, CnfFormula};
use ocdom::solver::{gamma_tilde, SolverConfig};

fn main() {
    let cfg = SolverConfig::default();
    let f = CnfFormula::from_signed(3, &[[1, 2, 3], [-1, 2, -3], [1, -2, 3]]).unwrap();
    let a = build_bondage_instance(&f).unwrap();
    let g = &a.graph;
    let gamma = gamma_tilde(g, &cfg).unwrap();
    println!(
        "{} vertices, {} edges, gamma~_c={} (3n+1={})",
        g.order(),
        g.size(),
        gamma.value,
        3 * f.num_vars() + 1
    );
    println!(
        "witness {:?}",
        a.roles_of(&gamma.witness)
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
    );
    println!("t in witness: {}", gamma.witness.contains(a.vertex(Role::T)));
    println!("satisfiable: {}", brute_force_sat(&f, 24).unwrap().is_some());

    let singles = gamma_after_each_single_removal(g, &cfg).unwrap();
    let worst = singles.iter().map(|&(_, v)| v).max().unwrap();
    println!("max gamma~_c over single removals: {worst}");

    let b = bondage_ocd(g, Some(1), &cfg).unwrap();
    let found = b.found().unwrap();
    let e = found.witness_edges[0];
    println!(
        "removing {}-{} raises it to {}",
        a.role(e.u()),
        a.role(e.v()),
        found.gamma_after
    );
}
