//! Galaxies have bondage number equal to their size; other connected graphs
//! fall short.

use ocdom::alteration::bondage_ocd;
use ocdom::closed_forms::{galaxy_bondage, is_galaxy};
use ocdom::graph::{generate_family, generate_galaxy, Family};
use ocdom::solver::SolverConfig;

fn main() {
    let cfg = SolverConfig::default();
    for stars in [vec![2, 2], vec![5], vec![3, 2, 2], vec![4, 3, 3]] {
        let g = generate_galaxy(&stars).unwrap();
        let k = bondage_ocd(&g, None, &cfg).unwrap().k().unwrap();
        println!(
            "galaxy {stars:?}: |E|={} formula={} computed={k}",
            g.size(),
            galaxy_bondage(&g).unwrap()
        );
    }
    for (family, n) in [(Family::Path, 5), (Family::Cycle, 5), (Family::Complete, 4)] {
        let g = generate_family(family, n).unwrap();
        let k = bondage_ocd(&g, None, &cfg).unwrap().k().unwrap();
        println!("{family} n={n}: galaxy={} |E|={} computed={k}", is_galaxy(&g), g.size());
    }
}
