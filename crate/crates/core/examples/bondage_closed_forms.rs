//! Exact bondage numbers of complete graphs, cycles and paths beside their
//! closed forms.

use ocdom::alteration::bondage_ocd;
use ocdom::closed_forms::{FamilyFormula, FormulaFamily};
use ocdom::solver::SolverConfig;

fn main() {
    let cfg = SolverConfig::default();
    let rows = [
        (FormulaFamily::Complete, 3..=8),
        (FormulaFamily::Cycle, 3..=10),
        (FormulaFamily::Path, 2..=10),
    ];
    for (family, range) in rows {
        for n in range {
            let f = FamilyFormula::predict(family, n).unwrap();
            let g = f.graph().unwrap();
            let res = bondage_ocd(&g, None, &cfg).unwrap();
            let found = res.found().unwrap();
            let edges: Vec<String> = found.witness_edges.iter().map(|e| e.to_string()).collect();
            println!(
                "{family:>8} n={n:>2}  formula={}  computed={}  remove {}  ({} -> {})",
                f.value,
                found.k,
                edges.join(" "),
                found.gamma_before,
                found.gamma_after
            );
        }
    }
}
