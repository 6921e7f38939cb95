//! Outer-connected bondage and reinforcement numbers.
//!
//! Both searches enumerate edge subsets by increasing size and, within a size,
//! lexicographically over positions in the sorted candidate edge list. The
//! first subset that moves the outer-connected domination number in the
//! required direction is the witness. Subsets of one size are evaluated in
//! parallel in fixed-size chunks; the reduction keeps the earliest hit, so the
//! answer does not depend on the worker count.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::solver::{gamma_tilde, gamma_tilde_at_most, SolveError, SolverConfig};

const CHUNK: usize = 2048;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlterationError {
    #[error("vertex {0} is isolated; the parameter is defined for isolate-free graphs only")]
    IsolatedVertex(usize),
    #[error("graph has no edges")]
    Edgeless,
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AlterationKind {
    Removal,
    Addition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlterationResult {
    pub kind: AlterationKind,
    pub k: usize,
    pub witness_edges: Vec<Edge>,
    pub gamma_before: usize,
    pub gamma_after: usize,
    /// Edge subsets evaluated; a statistic, not part of the result.
    pub examined_subsets: u64,
}

impl AlterationResult {
    /// The input graph with the witness applied.
    pub fn apply(&self, g: &Graph) -> Graph {
        match self.kind {
            AlterationKind::Removal => g.remove_edges(&self.witness_edges),
            AlterationKind::Addition => g.add_edges(&self.witness_edges),
        }
        .expect("witness edges come from the graph they are applied to")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Alteration {
    Found(AlterationResult),
    /// No subset of size up to `k_max` works.
    BoundExceeded {
        k_max: usize,
        gamma_before: usize,
        examined_subsets: u64,
    },
    /// No alteration can lower the number (it is already 1, or no edge can be added).
    Undefined {
        gamma_before: usize,
    },
}

impl Alteration {
    pub fn found(&self) -> Option<&AlterationResult> {
        match self {
            Alteration::Found(r) => Some(r),
            _ => None,
        }
    }

    pub fn k(&self) -> Option<usize> {
        self.found().map(|r| r.k)
    }
}

fn require_isolate_free(g: &Graph) -> Result<(), AlterationError> {
    match g.isolated_vertices().iter().next() {
        Some(v) => Err(AlterationError::IsolatedVertex(v)),
        None => Ok(()),
    }
}

/// Lexicographic k-combinations of `0..n`.
struct Combinations {
    idx: Vec<usize>,
    n: usize,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            idx: (0..k).collect(),
            n,
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// First subset (in size-then-lexicographic order) of `candidates` with
/// `accept`; returns the subset and the number of subsets evaluated.
fn first_subset<F>(
    candidates: &[Edge],
    max_k: usize,
    cfg: &SolverConfig,
    accept: F,
) -> Result<(Option<Vec<Edge>>, u64), SolveError>
where
    F: Fn(&[Edge]) -> Result<bool, SolveError> + Sync,
{
    let examined = AtomicU64::new(0);
    for k in 1..=max_k.min(candidates.len()) {
        let mut combos = Combinations::new(candidates.len(), k);
        loop {
            let chunk: Vec<Vec<Edge>> = combos
                .by_ref()
                .take(CHUNK)
                .map(|c| c.into_iter().map(|i| candidates[i]).collect())
                .collect();
            if chunk.is_empty() {
                break;
            }
            let eval = |subset: &Vec<Edge>| -> Option<Result<Vec<Edge>, SolveError>> {
                examined.fetch_add(1, Ordering::Relaxed);
                match accept(subset) {
                    Ok(true) => Some(Ok(subset.clone())),
                    Ok(false) => None,
                    Err(e) => Some(Err(e)),
                }
            };
            let hit = if cfg.parallel {
                chunk.par_iter().find_map_first(eval)
            } else {
                chunk.iter().find_map(eval)
            };
            if let Some(hit) = hit {
                return Ok((Some(hit?), examined.into_inner()));
            }
        }
    }
    Ok((None, examined.into_inner()))
}

/// Minimum number of edge removals that raise the outer-connected domination number.
pub fn bondage_ocd(g: &Graph, k_max: Option<usize>, cfg: &SolverConfig) -> Result<Alteration, AlterationError> {
    cfg.check(g)?;
    require_isolate_free(g)?;
    let edges = g.edges();
    if edges.is_empty() {
        return Err(AlterationError::Edgeless);
    }
    let before = gamma_tilde(g, cfg)?.value;
    let limit = k_max.unwrap_or(edges.len());
    let (hit, examined) = first_subset(&edges, limit, cfg, |b| {
        let h = g.remove_edges(b).expect("subset of existing edges");
        Ok(gamma_tilde_at_most(&h, before, cfg)?.is_none())
    })?;
    match hit {
        Some(witness) => {
            let after = gamma_tilde(&g.remove_edges(&witness).expect("subset of existing edges"), cfg)?.value;
            Ok(Alteration::Found(AlterationResult {
                kind: AlterationKind::Removal,
                k: witness.len(),
                witness_edges: witness,
                gamma_before: before,
                gamma_after: after,
                examined_subsets: examined,
            }))
        }
        None => Ok(Alteration::BoundExceeded {
            k_max: limit,
            gamma_before: before,
            examined_subsets: examined,
        }),
    }
}

/// Minimum number of edge additions that lower the outer-connected domination number.
pub fn reinforcement_ocd(g: &Graph, k_max: Option<usize>, cfg: &SolverConfig) -> Result<Alteration, AlterationError> {
    cfg.check(g)?;
    require_isolate_free(g)?;
    let before = gamma_tilde(g, cfg)?.value;
    let non_edges = g.complement_non_edges();
    if before == 1 || non_edges.is_empty() {
        return Ok(Alteration::Undefined { gamma_before: before });
    }
    let limit = k_max.unwrap_or(non_edges.len());
    let (hit, examined) = first_subset(&non_edges, limit, cfg, |a| {
        let h = g.add_edges(a).expect("subset of non-edges");
        Ok(gamma_tilde_at_most(&h, before - 1, cfg)?.is_some())
    })?;
    match hit {
        Some(witness) => {
            let after = gamma_tilde(&g.add_edges(&witness).expect("subset of non-edges"), cfg)?.value;
            Ok(Alteration::Found(AlterationResult {
                kind: AlterationKind::Addition,
                k: witness.len(),
                witness_edges: witness,
                gamma_before: before,
                gamma_after: after,
                examined_subsets: examined,
            }))
        }
        // Adding every non-edge gives a complete graph, so an unbounded search always hits.
        None if k_max.is_none() => Ok(Alteration::Undefined { gamma_before: before }),
        None => Ok(Alteration::BoundExceeded {
            k_max: limit,
            gamma_before: before,
            examined_subsets: examined,
        }),
    }
}

/// Exact outer-connected domination number of `G - e` for every edge, in edge order.
pub fn gamma_after_each_single_removal(g: &Graph, cfg: &SolverConfig) -> Result<Vec<(Edge, usize)>, AlterationError> {
    cfg.check(g)?;
    require_isolate_free(g)?;
    let edges = g.edges();
    if edges.is_empty() {
        return Err(AlterationError::Edgeless);
    }
    let inner = SolverConfig {
        parallel: cfg.parallel && edges.len() < 8,
        ..*cfg
    };
    let run = |e: &Edge| -> Result<(Edge, usize), AlterationError> {
        let h = g.remove_edges(&[*e]).expect("edge of g");
        Ok((*e, gamma_tilde(&h, &inner)?.value))
    };
    if cfg.parallel {
        edges.par_iter().map(run).collect()
    } else {
        edges.iter().map(run).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, generate_galaxy, Family};

    fn fam(f: Family, n: usize) -> Graph {
        generate_family(f, n).unwrap()
    }

    #[test]
    fn combinations_are_lexicographic() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(
            all,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(Combinations::new(3, 4).count(), 0);
        assert_eq!(Combinations::new(5, 5).count(), 1);
    }

    #[test]
    fn bondage_examples() {
        let cfg = SolverConfig::default();
        let k = |g: &Graph| bondage_ocd(g, None, &cfg).unwrap().k().unwrap();
        assert_eq!(k(&fam(Family::Complete, 3)), 1);
        assert_eq!(k(&fam(Family::Cycle, 7)), 3);
        assert_eq!(k(&fam(Family::Path, 7)), 2);
        assert_eq!(k(&fam(Family::Complete, 6)), 3);
        assert_eq!(k(&generate_galaxy(&[3, 3]).unwrap()), 4);
    }

    #[test]
    fn bondage_witness_is_first_in_order() {
        let cfg = SolverConfig::default();
        let r = bondage_ocd(&fam(Family::Complete, 3), None, &cfg).unwrap();
        let r = r.found().unwrap();
        assert_eq!(r.witness_edges, vec![Edge::of(0, 1)]);
        assert_eq!((r.gamma_before, r.gamma_after), (1, 2));
    }

    #[test]
    fn bondage_bound_and_errors() {
        let cfg = SolverConfig::default();
        let r = bondage_ocd(&fam(Family::Cycle, 4), Some(1), &cfg).unwrap();
        assert!(matches!(
            r,
            Alteration::BoundExceeded {
                k_max: 1,
                gamma_before: 2,
                ..
            }
        ));
        let with_isolate = Graph::from_pairs(3, &[(0, 1)]).unwrap();
        assert_eq!(
            bondage_ocd(&with_isolate, None, &cfg),
            Err(AlterationError::IsolatedVertex(2))
        );
        assert_eq!(
            bondage_ocd(&Graph::empty(1).unwrap(), None, &cfg),
            Err(AlterationError::IsolatedVertex(0))
        );
    }

    #[test]
    fn reinforcement_examples() {
        let cfg = SolverConfig::default();
        assert_eq!(
            reinforcement_ocd(&fam(Family::Complete, 5), None, &cfg).unwrap(),
            Alteration::Undefined { gamma_before: 1 }
        );
        let r = reinforcement_ocd(&fam(Family::Path, 4), None, &cfg).unwrap();
        let r = r.found().unwrap();
        assert_eq!(r.k, 2);
        // non-edges of P_4: {0,2},{0,3},{1,3}; {0,2}+{0,3} makes 0 universal
        assert_eq!(r.witness_edges, vec![Edge::of(0, 2), Edge::of(0, 3)]);
        assert_eq!((r.gamma_before, r.gamma_after), (2, 1));
        assert!(matches!(
            reinforcement_ocd(&fam(Family::Path, 4), Some(1), &cfg).unwrap(),
            Alteration::BoundExceeded { k_max: 1, .. }
        ));
    }

    #[test]
    fn single_removal_profiles() {
        let cfg = SolverConfig::default();
        let c4 = gamma_after_each_single_removal(&fam(Family::Cycle, 4), &cfg).unwrap();
        assert_eq!(c4.len(), 4);
        assert!(c4.iter().all(|&(_, v)| v == 2));
        let k3 = gamma_after_each_single_removal(&fam(Family::Complete, 3), &cfg).unwrap();
        assert!(k3.iter().all(|&(_, v)| v == 2));
        assert_eq!(
            gamma_after_each_single_removal(&fam(Family::Path, 2), &cfg).unwrap(),
            vec![(Edge::of(0, 1), 2)]
        );
    }

    #[test]
    fn witness_application_reproduces_gamma_after() {
        let cfg = SolverConfig::default();
        for g in [fam(Family::Cycle, 6), fam(Family::Complete, 5), fam(Family::Path, 5)] {
            let r = bondage_ocd(&g, None, &cfg).unwrap();
            let r = r.found().unwrap();
            assert_eq!(gamma_tilde(&r.apply(&g), &cfg).unwrap().value, r.gamma_after);
            assert!(r.gamma_after > r.gamma_before);
        }
    }
}
