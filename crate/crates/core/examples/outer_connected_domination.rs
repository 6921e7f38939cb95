//! Minimum outer-connected dominating sets of a few small graphs, next to the
//! plain domination number.

use ocdom::graph::{generate_family, Family};
use ocdom::solver::{gamma_plain, gamma_tilde, minimum_ocd_sets, SolverConfig};

fn main() {
    let cfg = SolverConfig::default();
    for (family, n) in [
        (Family::Path, 6),
        (Family::Cycle, 7),
        (Family::Complete, 5),
        (Family::Star, 6),
    ] {
        let g = generate_family(family, n).unwrap();
        let ocd = gamma_tilde(&g, &cfg).unwrap();
        let plain = gamma_plain(&g, &cfg).unwrap();
        println!(
            "{family:>8} n={n}: gamma~_c={} witness={:?}  gamma={} witness={:?}",
            ocd.value,
            ocd.witness.to_vec(),
            plain.value,
            plain.witness.to_vec()
        );
    }

    let c4 = generate_family(Family::Cycle, 4).unwrap();
    let all: Vec<Vec<usize>> = minimum_ocd_sets(&c4, &cfg)
        .unwrap()
        .iter()
        .map(|s| s.to_vec())
        .collect();
    println!("all minimum sets of C_4: {all:?}");
}
