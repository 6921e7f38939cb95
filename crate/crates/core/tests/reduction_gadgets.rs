mod common;

use common::Naive;
use ocdom::alteration::{bondage_ocd, reinforcement_ocd, Alteration};
use ocdom::reduction::{
    assignment_from_witness, build_bondage_instance, build_reinforcement_instance, parse_roles,
    witness_from_assignment, Role,
};
use ocdom::sat::{brute_force_sat, parse_dimacs_cnf, random_3cnf, saturated_3cnf, CnfFormula, EXAMPLE_5VAR};
use ocdom::solver::{gamma_tilde, minimum_ocd_sets, SolverConfig};
use ocdom::{Edge, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ids(n: usize, v: &[usize]) -> Vec<bool> {
    (0..n).map(|i| v.contains(&i)).collect()
}

fn naive_ocd(g: &Naive, d: &[usize]) -> bool {
    let inside = ids(g.n, d);
    let outside: Vec<bool> = inside.iter().map(|b| !b).collect();
    g.dominates(&inside) && g.induced_connected(&outside)
}

#[test]
fn gadget_counts_follow_the_formulas() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..50 {
        let n = rng.gen_range(3..=6);
        let m = rng.gen_range(1..=8);
        let f = random_3cnf(&mut rng, n, m);
        let r = build_reinforcement_instance(&f).unwrap();
        assert_eq!((r.graph.order(), r.graph.size()), (3 * n + m + 2, 5 * n + 5 * m + 1));
        let b = build_bondage_instance(&f).unwrap();
        assert_eq!((b.graph.order(), b.graph.size()), (5 * n + m + 5, 6 * n + 6 * m + 6));
        let t = b.vertex(Role::T);
        assert_eq!(b.graph.degree(t), 2 * n + 3);
        for (v, role) in b.roles.iter().enumerate() {
            assert_eq!(b.vertex(*role), v);
        }
        assert_eq!(parse_roles(&b.roles_string()).unwrap(), b.roles);
    }
}

#[test]
fn five_variable_reinforcement_gadget() {
    let f = parse_dimacs_cnf(EXAMPLE_5VAR).unwrap();
    let a = build_reinforcement_instance(&f).unwrap();
    let cfg = SolverConfig::default();
    assert_eq!((a.graph.order(), a.graph.size()), (21, 46));
    assert_eq!(gamma_tilde(&a.graph, &cfg).unwrap().value, 6);
    let r = reinforcement_ocd(&a.graph, Some(1), &cfg).unwrap();
    assert_eq!(r.k(), Some(1));

    let model = brute_force_sat(&f, 24).unwrap().unwrap();
    let (d, e) = witness_from_assignment(&a, &model).unwrap();
    let h = a.graph.add_edges(&[e.unwrap()]).unwrap();
    assert_eq!(d.len(), 5);
    assert!(naive_ocd(&Naive::from_graph(&h), &d.to_vec()));
    assert_eq!(assignment_from_witness(&a, &d).unwrap(), model);
}

#[test]
fn reinforcement_gadget_gamma_is_n_plus_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let cfg = SolverConfig::default();
    for _ in 0..30 {
        let n = rng.gen_range(3..=4);
        let m = rng.gen_range(1..=4);
        let f = random_3cnf(&mut rng, n, m);
        let a = build_reinforcement_instance(&f).unwrap();
        assert_eq!(gamma_tilde(&a.graph, &cfg).unwrap().value, n + 1);
    }
}

/// With every literal in some clause, adding `{u1, v2}` lets `{u1, u3, ..., un, y}`
/// dominate with a connected remainder, whether or not the formula is satisfiable.
#[test]
fn unsatisfiable_formula_still_has_reinforcement_one() {
    let f = saturated_3cnf(3, [1, 2, 3]).unwrap();
    assert!(brute_force_sat(&f, 24).unwrap().is_none());
    let a = build_reinforcement_instance(&f).unwrap();
    let e = Edge::of(a.vertex(Role::PosLit(1)), a.vertex(Role::Mid(2)));
    let h = a.graph.add_edges(&[e]).unwrap();
    let d = [a.vertex(Role::PosLit(1)), a.vertex(Role::PosLit(3)), a.vertex(Role::Y)];
    let naive = Naive::from_graph(&h);
    assert!(naive_ocd(&naive, &d));
    assert_eq!(Naive::from_graph(&a.graph).gamma_tilde().0, 4);

    let cfg = SolverConfig::default();
    match reinforcement_ocd(&a.graph, Some(1), &cfg).unwrap() {
        Alteration::Found(r) => assert_eq!((r.gamma_before, r.gamma_after), (4, 3)),
        other => panic!("expected a single-edge reinforcement, got {other:?}"),
    }
}

#[test]
fn bondage_gadget_small_instance() {
    let f = CnfFormula::from_signed(3, &[[1, 2, 3], [-1, 2, -3], [1, -2, 3]]).unwrap();
    let a = build_bondage_instance(&f).unwrap();
    let cfg = SolverConfig::default();
    assert_eq!((a.graph.order(), a.graph.size()), (23, 42));
    let g = gamma_tilde(&a.graph, &cfg).unwrap();
    assert_eq!(g.value, 10);
    assert_eq!(
        assignment_from_witness(&a, &g.witness).map(|m| f.is_satisfied_by(&m)),
        Ok(true)
    );
    let b = bondage_ocd(&a.graph, Some(1), &cfg).unwrap();
    assert_eq!(b.k(), Some(1));
}

/// Every minimum set, not just the canonical one, has the structure the
/// bondage argument relies on.
#[test]
fn every_minimum_bondage_set_avoids_t_and_clauses() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let cfg = SolverConfig::default();
    for _ in 0..3 {
        let f = random_3cnf(&mut rng, 3, 2);
        let a = build_bondage_instance(&f).unwrap();
        let sets = minimum_ocd_sets(&a.graph, &cfg).unwrap();
        assert!(!sets.is_empty());
        for d in &sets {
            assert_eq!(d.len(), 10);
            assert!(!d.contains(a.vertex(Role::T)));
            assert!((1..=2).all(|j| !d.contains(a.vertex(Role::Clause(j)))));
            let s: Vec<usize> = (1..=4).filter(|&k| d.contains(a.vertex(Role::S(k)))).collect();
            assert_eq!(s, [2]);
            for i in 1..=3 {
                let h = [
                    Role::PosLit(i),
                    Role::Mid(i),
                    Role::NegLit(i),
                    Role::LeafX(i),
                    Role::LeafY(i),
                ];
                assert_eq!(h.iter().filter(|&&r| d.contains(a.vertex(r))).count(), 3);
            }
        }
    }
}

#[test]
fn bondage_model_witness_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..30 {
        let m = rng.gen_range(1..=5);
        let f = random_3cnf(&mut rng, 4, m);
        let Some(model) = brute_force_sat(&f, 24).unwrap() else {
            continue;
        };
        let a = build_bondage_instance(&f).unwrap();
        let (d, e) = witness_from_assignment(&a, &model).unwrap();
        assert!(e.is_none());
        assert_eq!(d.len(), 13);
        assert!(naive_ocd(&Naive::from_graph(&a.graph), &d.to_vec()));
        assert_eq!(assignment_from_witness(&a, &d).unwrap(), model);
    }
}

#[test]
fn witness_decoding_rejects_bad_sets() {
    let f = parse_dimacs_cnf(EXAMPLE_5VAR).unwrap();
    let a = build_reinforcement_instance(&f).unwrap();
    let both = VertexSet::from_ids(21, [a.vertex(Role::PosLit(1)), a.vertex(Role::NegLit(1))]).unwrap();
    assert!(assignment_from_witness(&a, &both).is_err());
    assert!(assignment_from_witness(&a, &VertexSet::empty(5)).is_err());
}
