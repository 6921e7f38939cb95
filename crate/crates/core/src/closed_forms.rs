//! Closed-form bondage values for complete graphs, cycles, paths and
//! galaxies, plus the exhaustive check that a complete graph survives a small
//! number of edge removals connected.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{generate_family, Family, Graph};

/// Largest complete graph the exhaustive connectivity check accepts.
pub const LEMMA_MAX_ORDER: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("{family} formula is defined for order at least {min}, got {n}")]
    OutOfDomain {
        family: FormulaFamily,
        n: usize,
        min: usize,
    },
    #[error("no closed form for the {0} family")]
    UnsupportedFamily(Family),
    #[error("not a galaxy")]
    NotGalaxy,
    #[error("galaxy formula needs order at least 4, got {0}")]
    GalaxyTooSmall(usize),
    #[error("exhaustive check capped at order {cap}, got {n}")]
    OverCap { n: usize, cap: usize },
    #[error("removal budget {budget} exceeds the {edges} edges of K_{n}")]
    BudgetTooLarge { n: usize, budget: usize, edges: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormulaFamily {
    Complete,
    Cycle,
    Path,
    Galaxy,
}

impl std::fmt::Display for FormulaFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FormulaFamily::Complete => "complete",
            FormulaFamily::Cycle => "cycle",
            FormulaFamily::Path => "path",
            FormulaFamily::Galaxy => "galaxy",
        })
    }
}

/// A predicted bondage number. For galaxies `n` is the edge count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyFormula {
    pub family: FormulaFamily,
    pub n: usize,
    pub value: usize,
}

impl FamilyFormula {
    pub fn predict(family: FormulaFamily, n: usize) -> Result<Self, FormulaError> {
        let value = match family {
            FormulaFamily::Complete => b_ocd_complete(n)?,
            FormulaFamily::Cycle => b_ocd_cycle(n)?,
            FormulaFamily::Path => b_ocd_path(n)?,
            FormulaFamily::Galaxy if n >= 1 => n,
            FormulaFamily::Galaxy => return Err(FormulaError::OutOfDomain { family, n, min: 1 }),
        };
        Ok(FamilyFormula { family, n, value })
    }

    /// The canonical member of the family this formula talks about; galaxies
    /// have no canonical member.
    pub fn graph(&self) -> Option<Graph> {
        let fam = match self.family {
            FormulaFamily::Complete => Family::Complete,
            FormulaFamily::Cycle => Family::Cycle,
            FormulaFamily::Path => Family::Path,
            FormulaFamily::Galaxy => return None,
        };
        generate_family(fam, self.n).ok()
    }
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

fn domain(family: FormulaFamily, n: usize, min: usize) -> Result<(), FormulaError> {
    if n < min {
        Err(FormulaError::OutOfDomain { family, n, min })
    } else {
        Ok(())
    }
}

pub fn b_ocd_complete(n: usize) -> Result<usize, FormulaError> {
    domain(FormulaFamily::Complete, n, 3)?;
    Ok(if n == 3 { 1 } else { ceil_div(n, 2) })
}

pub fn b_ocd_cycle(n: usize) -> Result<usize, FormulaError> {
    domain(FormulaFamily::Cycle, n, 3)?;
    Ok(if n == 3 { 1 } else { ceil_div(n, 3) })
}

pub fn b_ocd_path(n: usize) -> Result<usize, FormulaError> {
    domain(FormulaFamily::Path, n, 2)?;
    Ok(match n {
        2 => 1,
        3 => 2,
        _ => ceil_div(n, 3) - 1,
    })
}

/// Outer-connected domination number of `P_n` or `C_n`.
pub fn gamma_tilde_path_cycle(family: Family, n: usize) -> Result<usize, FormulaError> {
    match family {
        Family::Path => {
            domain(FormulaFamily::Path, n, 1)?;
            Ok(match n {
                1 | 2 => 1,
                3 => 2,
                _ => n - 2,
            })
        }
        Family::Cycle => {
            domain(FormulaFamily::Cycle, n, 3)?;
            Ok(if n == 3 { 1 } else { n - 2 })
        }
        other => Err(FormulaError::UnsupportedFamily(other)),
    }
}

/// Every component is a star `K_{1,k}` with `k >= 1`. Isolated vertices disqualify.
pub fn is_galaxy(g: &Graph) -> bool {
    g.components().iter().all(|comp| {
        let k = comp.len();
        let edges: usize = comp.iter().map(|v| g.degree(v)).sum::<usize>() / 2;
        let hubs = comp.iter().filter(|&v| g.degree(v) > 1).count();
        k >= 2 && edges == k - 1 && hubs <= 1
    })
}

/// The bondage number of a galaxy of order at least 4, namely its size.
pub fn galaxy_bondage(g: &Graph) -> Result<usize, FormulaError> {
    if !is_galaxy(g) {
        return Err(FormulaError::NotGalaxy);
    }
    if g.order() < 4 {
        return Err(FormulaError::GalaxyTooSmall(g.order()));
    }
    Ok(g.size())
}

/// Default removal budget `ceil((n + 1) / 2) - 1`.
pub fn lemma_budget(n: usize) -> usize {
    ceil_div(n + 1, 2) - 1
}

/// Whether `K_n` minus every edge subset of size `budget` stays connected.
pub fn check_complete_minus_edges_connected(n: usize, budget: Option<usize>) -> Result<bool, FormulaError> {
    domain(FormulaFamily::Complete, n, 3)?;
    if n > LEMMA_MAX_ORDER {
        return Err(FormulaError::OverCap {
            n,
            cap: LEMMA_MAX_ORDER,
        });
    }
    let budget = budget.unwrap_or_else(|| lemma_budget(n));
    let kn = generate_family(Family::Complete, n).expect("n >= 3");
    let edges = kn.edges();
    if budget > edges.len() {
        return Err(FormulaError::BudgetTooLarge {
            n,
            budget,
            edges: edges.len(),
        });
    }
    // Subsets of edge positions as bit masks with exactly `budget` bits.
    let m = edges.len();
    let mut mask: u64 = (1u64 << budget) - 1;
    let limit = 1u64 << m;
    while mask < limit {
        let removed: Vec<_> = crate::graph::BitIter(mask).map(|i| edges[i]).collect();
        if !kn.remove_edges(&removed).expect("edges of K_n").is_connected() {
            return Ok(false);
        }
        if mask == 0 {
            break;
        }
        // next pattern with the same popcount
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = ripple | (((mask ^ ripple) >> 2) / low);
    }
    Ok(true)
}
