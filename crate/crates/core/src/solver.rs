//! Exact domination and outer-connected domination numbers.
//!
//! The search walks candidate sets by increasing cardinality. Within one
//! cardinality the sets are visited in increasing order of their bit pattern
//! (vertex 0 least significant), so the first accepted set is the canonical
//! witness. Isolated vertices belong to every dominating set and are fixed up
//! front; only the remaining vertices are enumerated.
//!
//! Each candidate is checked for domination first (a handful of word ORs,
//! accumulated along the enumeration path) and only then for connectivity of
//! the complement. A branch is cut as soon as the vertices still available
//! below it cannot complete the cover.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{connected_within, full_mask, BitIter, Graph, VertexSet, MAX_ORDER};

pub const DEFAULT_MAX_ORDER: usize = 30;

/// Levels with at least this many free vertices are split across rayon workers.
const PARALLEL_MIN_FREE: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest order accepted by the exact solvers.
    pub max_order: usize,
    /// Split large cardinality levels across the current rayon pool.
    pub parallel: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_order: DEFAULT_MAX_ORDER,
            parallel: true,
        }
    }
}

impl SolverConfig {
    pub fn sequential() -> Self {
        SolverConfig {
            parallel: false,
            ..Default::default()
        }
    }

    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = max_order;
        self
    }

    pub(crate) fn check(&self, g: &Graph) -> Result<(), SolveError> {
        if g.order() == 0 {
            return Err(SolveError::EmptyGraph);
        }
        let cap = self.max_order.min(MAX_ORDER);
        if g.order() > cap {
            return Err(SolveError::OrderExceedsCap { order: g.order(), cap });
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("order {order} exceeds the solver cap of {cap}")]
    OrderExceedsCap { order: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: usize,
    #[serde(serialize_with = "serialize_set")]
    pub witness: VertexSet,
    /// Candidate sets tested; a statistic, not part of the result.
    pub examined: u64,
}

fn serialize_set<S: serde::Serializer>(set: &VertexSet, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(set.iter())
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    let rows = g.rows();
    let cover = BitIter(s.bits()).fold(s.bits(), |acc, v| acc | rows[v]);
    cover & full_mask(g.order()) == full_mask(g.order())
}

pub fn is_ocd(g: &Graph, s: &VertexSet) -> bool {
    is_dominating(g, s) && connected_within(g.rows(), !s.bits() & full_mask(g.order()))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Dominating,
    OuterConnected,
}

struct Search<'a> {
    adj: &'a [u64],
    full: u64,
    /// Bit and closed neighbourhood of each free vertex, by free position.
    bit: Vec<u64>,
    closed: Vec<u64>,
    /// `prefix_cover[i]` is the union of `closed[..i]`.
    prefix_cover: Vec<u64>,
    fixed: u64,
    fixed_cover: u64,
    mode: Mode,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, mode: Mode) -> Self {
        let adj = g.rows();
        let fixed = g.isolated_vertices().bits();
        let free: Vec<usize> = BitIter(full_mask(g.order()) & !fixed).collect();
        let bit: Vec<u64> = free.iter().map(|&v| 1u64 << v).collect();
        let closed: Vec<u64> = free.iter().map(|&v| adj[v] | 1 << v).collect();
        let mut prefix_cover = Vec::with_capacity(free.len() + 1);
        let mut acc = 0u64;
        prefix_cover.push(acc);
        for &c in &closed {
            acc |= c;
            prefix_cover.push(acc);
        }
        Search {
            adj,
            full: full_mask(g.order()),
            bit,
            closed,
            prefix_cover,
            fixed,
            // isolated vertices dominate exactly themselves
            fixed_cover: fixed,
            mode,
        }
    }

    fn free_count(&self) -> usize {
        self.bit.len()
    }

    #[inline]
    fn accept(&self, mask: u64, cover: u64) -> bool {
        cover == self.full && (self.mode == Mode::Dominating || connected_within(self.adj, self.full & !mask))
    }

    /// Visits every way of adding `r` free vertices with positions below
    /// `upper`, in increasing bit-pattern order.
    fn walk<F>(&self, r: usize, upper: usize, mask: u64, cover: u64, examined: &mut u64, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(u64) -> ControlFlow<()>,
    {
        if r == 0 {
            *examined += 1;
            if self.accept(mask, cover) {
                return f(mask);
            }
            return ControlFlow::Continue(());
        }
        if cover | self.prefix_cover[upper] != self.full {
            return ControlFlow::Continue(());
        }
        for idx in r - 1..upper {
            self.walk(r - 1, idx, mask | self.bit[idx], cover | self.closed[idx], examined, f)?;
        }
        ControlFlow::Continue(())
    }

    /// Subtrees of level `k`, one per highest free position; in order.
    fn subtree_first(&self, k: usize, top: usize, examined: &mut u64) -> Option<u64> {
        let mut found = None;
        let _ = self.walk(
            k - 1,
            top,
            self.fixed | self.bit[top],
            self.fixed_cover | self.closed[top],
            examined,
            &mut |mask| {
                found = Some(mask);
                ControlFlow::Break(())
            },
        );
        found
    }

    /// Smallest accepted pattern using exactly `k` free vertices.
    fn level_first(&self, k: usize, parallel: bool, examined: &AtomicU64) -> Option<u64> {
        if k == 0 {
            examined.fetch_add(1, Ordering::Relaxed);
            return self.accept(self.fixed, self.fixed_cover).then_some(self.fixed);
        }
        let n = self.free_count();
        if k > n {
            return None;
        }
        if parallel && n >= PARALLEL_MIN_FREE && k >= 2 {
            (k - 1..n).into_par_iter().find_map_first(|top| {
                let mut local = 0;
                let hit = self.subtree_first(k, top, &mut local);
                examined.fetch_add(local, Ordering::Relaxed);
                hit
            })
        } else {
            let mut local = 0;
            let hit = (k - 1..n).find_map(|top| self.subtree_first(k, top, &mut local));
            examined.fetch_add(local, Ordering::Relaxed);
            hit
        }
    }

    fn level_all(&self, k: usize, out: &mut Vec<u64>) {
        let mut examined = 0;
        if k == 0 {
            if self.accept(self.fixed, self.fixed_cover) {
                out.push(self.fixed);
            }
            return;
        }
        let _ = self.walk(
            k,
            self.free_count(),
            self.fixed,
            self.fixed_cover,
            &mut examined,
            &mut |mask| {
                out.push(mask);
                ControlFlow::Continue(())
            },
        );
    }
}

fn solve(g: &Graph, mode: Mode, bound: Option<usize>, cfg: &SolverConfig) -> Result<Option<SolveResult>, SolveError> {
    cfg.check(g)?;
    let search = Search::new(g, mode);
    let fixed = search.fixed.count_ones() as usize;
    let examined = AtomicU64::new(0);
    let last = bound.unwrap_or(g.order()).min(g.order());
    for total in fixed.max(1)..=last {
        if let Some(mask) = search.level_first(total - fixed, cfg.parallel, &examined) {
            return Ok(Some(SolveResult {
                value: total,
                witness: VertexSet::from_bits(g.order(), mask).expect("mask within order"),
                examined: examined.into_inner(),
            }));
        }
    }
    Ok(None)
}

/// The outer-connected domination number with its canonical witness.
pub fn gamma_tilde(g: &Graph, cfg: &SolverConfig) -> Result<SolveResult, SolveError> {
    Ok(solve(g, Mode::OuterConnected, None, cfg)?.expect("the whole vertex set is always outer-connected dominating"))
}

/// Like [`gamma_tilde`], but gives up (returning `None`) once every set of
/// size at most `bound` has been rejected.
pub fn gamma_tilde_at_most(g: &Graph, bound: usize, cfg: &SolverConfig) -> Result<Option<SolveResult>, SolveError> {
    solve(g, Mode::OuterConnected, Some(bound), cfg)
}

/// The ordinary domination number with its canonical witness.
pub fn gamma_plain(g: &Graph, cfg: &SolverConfig) -> Result<SolveResult, SolveError> {
    Ok(solve(g, Mode::Dominating, None, cfg)?.expect("the whole vertex set is always dominating"))
}

/// Every minimum outer-connected dominating set, in increasing bit-pattern order.
pub fn minimum_ocd_sets(g: &Graph, cfg: &SolverConfig) -> Result<Vec<VertexSet>, SolveError> {
    let best = gamma_tilde(g, cfg)?;
    let search = Search::new(g, Mode::OuterConnected);
    let mut masks = Vec::new();
    search.level_all(best.value - search.fixed.count_ones() as usize, &mut masks);
    Ok(masks
        .into_iter()
        .map(|m| VertexSet::from_bits(g.order(), m).expect("mask within order"))
        .collect())
}
