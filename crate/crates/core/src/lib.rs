//! Exact outer-connected domination.
//!
//! A set `D` of vertices is an outer-connected dominating set when every
//! vertex outside `D` has a neighbour in `D` and the vertices outside `D`
//! induce a connected subgraph. This crate computes the smallest such set,
//! the bondage and reinforcement numbers of that parameter (fewest edge
//! removals that raise it, fewest edge additions that lower it), builds the
//! two 3-SAT gadget graphs used to show those numbers are hard to compute,
//! and checks the known closed forms on small graph families.
//!
//! ```
//! use ocdom::graph::{generate_family, Family};
//! use ocdom::solver::{gamma_tilde, SolverConfig};
//!
//! let c7 = generate_family(Family::Cycle, 7).unwrap();
//! let r = gamma_tilde(&c7, &SolverConfig::default()).unwrap();
//! assert_eq!(r.value, 5);
//! ```

pub mod alteration;
pub mod cli;
pub mod closed_forms;
pub mod edgelist;
pub mod graph;
pub mod reduction;
pub mod sat;
pub mod solver;
pub mod verify;

pub use alteration::{bondage_ocd, reinforcement_ocd, Alteration, AlterationResult};
pub use graph::{Edge, Graph, VertexSet};
pub use solver::{gamma_plain, gamma_tilde, is_dominating, is_ocd, SolveResult, SolverConfig};
