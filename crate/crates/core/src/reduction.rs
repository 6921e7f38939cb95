//! Graph gadgets built from 3-CNF formulas.
//!
//! Reinforcement gadget: a triangle `u_i, v_i, nu_i` per variable, a vertex
//! `c_j` per clause joined to its literal vertices, and two hubs `x`, `y`
//! joined to every `c_j`, with `x y` and `y` joined to every literal vertex.
//! Layout: triples `u_i v_i nu_i` for `i = 1..n`, then `c_1..c_m`, then `x`, `y`.
//!
//! Bondage gadget: a quintuple `u_i, v_i, nu_i, x_i, y_i` per variable with
//! edges `x_i u_i`, `y_i nu_i`, `u_i v_i`, `nu_i v_i`; clause vertices as
//! above; `s_1, s_3, s_4` each joined to every `c_j`, to `s_2` and to `t`;
//! `t` joined to every literal vertex.
//! Layout: quintuples for `i = 1..n`, then `c_1..c_m`, then `s_1..s_4`, then `t`.

use std::collections::HashMap;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph, VertexSet};
use crate::sat::{Assignment, CnfFormula, Literal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    PosLit(usize),
    NegLit(usize),
    Mid(usize),
    LeafX(usize),
    LeafY(usize),
    Clause(usize),
    X,
    Y,
    S(usize),
    T,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::PosLit(i) => write!(f, "u{i}"),
            Role::NegLit(i) => write!(f, "nu{i}"),
            Role::Mid(i) => write!(f, "v{i}"),
            Role::LeafX(i) => write!(f, "x{i}"),
            Role::LeafY(i) => write!(f, "y{i}"),
            Role::Clause(j) => write!(f, "c{j}"),
            Role::X => f.write_str("x"),
            Role::Y => f.write_str("y"),
            Role::S(k) => write!(f, "s{k}"),
            Role::T => f.write_str("t"),
        }
    }
}

impl Serialize for Role {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("unknown role tag `{s}`");
        match s {
            "x" => return Ok(Role::X),
            "y" => return Ok(Role::Y),
            "t" => return Ok(Role::T),
            _ => {}
        }
        let (prefix, digits) = s
            .find(|c: char| c.is_ascii_digit())
            .map(|at| s.split_at(at))
            .ok_or_else(bad)?;
        if digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let k: usize = digits.parse().map_err(|_| bad())?;
        match prefix {
            "u" => Ok(Role::PosLit(k)),
            "nu" => Ok(Role::NegLit(k)),
            "v" => Ok(Role::Mid(k)),
            "x" => Ok(Role::LeafX(k)),
            "y" => Ok(Role::LeafY(k)),
            "c" => Ok(Role::Clause(k)),
            "s" if (1..=4).contains(&k) => Ok(Role::S(k)),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReductionMode {
    Reinforcement,
    Bondage,
}

impl FromStr for ReductionMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "reinforcement" => Ok(ReductionMode::Reinforcement),
            "bondage" => Ok(ReductionMode::Bondage),
            _ => Err(format!("unknown mode `{s}` (expected reinforcement or bondage)")),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("gadget {index}: expected exactly one of u{index}, v{index}, nu{index} in the set, found {found}")]
    GadgetSelection { index: usize, found: usize },
    #[error("vertex set has order {found}, gadget has order {expected}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("assignment covers {found} variables, formula has {expected}")]
    AssignmentLength { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub graph: Graph,
    /// `roles[v]` is the role played by vertex `v`.
    pub roles: Vec<Role>,
    pub num_vars: usize,
    pub num_clauses: usize,
    pub mode: ReductionMode,
}

impl ReductionArtifact {
    /// Vertex id of `role`, following the fixed layout.
    pub fn vertex(&self, role: Role) -> usize {
        let (n, m) = (self.num_vars, self.num_clauses);
        match (self.mode, role) {
            (ReductionMode::Reinforcement, Role::PosLit(i)) => 3 * (i - 1),
            (ReductionMode::Reinforcement, Role::Mid(i)) => 3 * (i - 1) + 1,
            (ReductionMode::Reinforcement, Role::NegLit(i)) => 3 * (i - 1) + 2,
            (ReductionMode::Reinforcement, Role::Clause(j)) => 3 * n + j - 1,
            (ReductionMode::Reinforcement, Role::X) => 3 * n + m,
            (ReductionMode::Reinforcement, Role::Y) => 3 * n + m + 1,
            (ReductionMode::Bondage, Role::PosLit(i)) => 5 * (i - 1),
            (ReductionMode::Bondage, Role::Mid(i)) => 5 * (i - 1) + 1,
            (ReductionMode::Bondage, Role::NegLit(i)) => 5 * (i - 1) + 2,
            (ReductionMode::Bondage, Role::LeafX(i)) => 5 * (i - 1) + 3,
            (ReductionMode::Bondage, Role::LeafY(i)) => 5 * (i - 1) + 4,
            (ReductionMode::Bondage, Role::Clause(j)) => 5 * n + j - 1,
            (ReductionMode::Bondage, Role::S(k)) => 5 * n + m + k - 1,
            (ReductionMode::Bondage, Role::T) => 5 * n + m + 4,
            (mode, role) => panic!("role {role} does not occur in the {mode:?} gadget"),
        }
    }

    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }

    fn literal_vertex(&self, l: Literal) -> usize {
        self.vertex(if l.positive {
            Role::PosLit(l.var)
        } else {
            Role::NegLit(l.var)
        })
    }

    pub fn expected_order(&self) -> usize {
        match self.mode {
            ReductionMode::Reinforcement => 3 * self.num_vars + self.num_clauses + 2,
            ReductionMode::Bondage => 5 * self.num_vars + self.num_clauses + 5,
        }
    }

    pub fn expected_size(&self) -> usize {
        match self.mode {
            ReductionMode::Reinforcement => 5 * self.num_vars + 5 * self.num_clauses + 1,
            ReductionMode::Bondage => 6 * self.num_vars + 6 * self.num_clauses + 6,
        }
    }

    /// Roles of the members of `d`, by ascending vertex id.
    pub fn roles_of(&self, d: &VertexSet) -> Vec<Role> {
        d.iter().map(|v| self.roles[v]).collect()
    }

    /// One `<vertex-id> <role-tag>` line per vertex.
    pub fn write_roles<W: Write>(&self, mut out: W) -> io::Result<()> {
        for (v, r) in self.roles.iter().enumerate() {
            writeln!(out, "{v} {r}")?;
        }
        Ok(())
    }

    pub fn roles_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_roles(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("role tags are ASCII")
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("roles line {line}: {msg}")]
pub struct RolesParseError {
    pub line: usize,
    pub msg: String,
}

/// Reads a roles sidecar; vertex ids must run `0, 1, 2, ...` in order.
pub fn parse_roles(text: &str) -> Result<Vec<Role>, RolesParseError> {
    let mut roles = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |msg: String| RolesParseError { line, msg };
        let (id, tag) = raw
            .split_once(' ')
            .ok_or_else(|| err("expected `<vertex-id> <role-tag>`".into()))?;
        let id: usize = id.parse().map_err(|_| err(format!("bad vertex id `{id}`")))?;
        if id != roles.len() {
            return Err(err(format!("expected vertex {}, found {id}", roles.len())));
        }
        roles.push(tag.parse().map_err(err)?);
    }
    Ok(roles)
}

fn assemble(f: &CnfFormula, mode: ReductionMode) -> ReductionArtifact {
    let (n, m) = (f.num_vars(), f.num_clauses());
    let mut roles = Vec::new();
    match mode {
        ReductionMode::Reinforcement => {
            for i in 1..=n {
                roles.extend([Role::PosLit(i), Role::Mid(i), Role::NegLit(i)]);
            }
            roles.extend((1..=m).map(Role::Clause));
            roles.extend([Role::X, Role::Y]);
        }
        ReductionMode::Bondage => {
            for i in 1..=n {
                roles.extend([
                    Role::PosLit(i),
                    Role::Mid(i),
                    Role::NegLit(i),
                    Role::LeafX(i),
                    Role::LeafY(i),
                ]);
            }
            roles.extend((1..=m).map(Role::Clause));
            roles.extend((1..=4).map(Role::S));
            roles.push(Role::T);
        }
    }
    ReductionArtifact {
        graph: Graph::empty(roles.len()).expect("checked by caller"),
        roles,
        num_vars: n,
        num_clauses: m,
        mode,
    }
}

fn clause_edges(a: &ReductionArtifact, f: &CnfFormula, edges: &mut Vec<Edge>) {
    for (j, clause) in f.clauses().iter().enumerate() {
        let c = a.vertex(Role::Clause(j + 1));
        let mut lits = *clause;
        lits.sort_by_key(|l| (l.var, !l.positive));
        for l in lits {
            edges.push(Edge::of(c, a.literal_vertex(l)));
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("gadget of order {order} exceeds the 64-vertex graph representation")]
pub struct GadgetTooLarge {
    pub order: usize,
}

pub fn build_reinforcement_instance(f: &CnfFormula) -> Result<ReductionArtifact, GadgetTooLarge> {
    let order = 3 * f.num_vars() + f.num_clauses() + 2;
    if order > crate::graph::MAX_ORDER {
        return Err(GadgetTooLarge { order });
    }
    let mut a = assemble(f, ReductionMode::Reinforcement);
    let (x, y) = (a.vertex(Role::X), a.vertex(Role::Y));
    let mut edges = Vec::new();
    for i in 1..=f.num_vars() {
        let (u, v, nu) = (
            a.vertex(Role::PosLit(i)),
            a.vertex(Role::Mid(i)),
            a.vertex(Role::NegLit(i)),
        );
        edges.extend([Edge::of(u, v), Edge::of(v, nu), Edge::of(u, nu)]);
    }
    clause_edges(&a, f, &mut edges);
    for j in 1..=f.num_clauses() {
        let c = a.vertex(Role::Clause(j));
        edges.extend([Edge::of(x, c), Edge::of(y, c)]);
    }
    edges.push(Edge::of(x, y));
    for i in 1..=f.num_vars() {
        edges.push(Edge::of(y, a.vertex(Role::PosLit(i))));
        edges.push(Edge::of(y, a.vertex(Role::NegLit(i))));
    }
    a.graph = Graph::new(order, &edges).expect("gadget edges are distinct and in range");
    Ok(a)
}

pub fn build_bondage_instance(f: &CnfFormula) -> Result<ReductionArtifact, GadgetTooLarge> {
    let order = 5 * f.num_vars() + f.num_clauses() + 5;
    if order > crate::graph::MAX_ORDER {
        return Err(GadgetTooLarge { order });
    }
    let mut a = assemble(f, ReductionMode::Bondage);
    let mut edges = Vec::new();
    for i in 1..=f.num_vars() {
        let v = |r| a.vertex(r);
        edges.extend([
            Edge::of(v(Role::LeafX(i)), v(Role::PosLit(i))),
            Edge::of(v(Role::LeafY(i)), v(Role::NegLit(i))),
            Edge::of(v(Role::PosLit(i)), v(Role::Mid(i))),
            Edge::of(v(Role::NegLit(i)), v(Role::Mid(i))),
        ]);
    }
    clause_edges(&a, f, &mut edges);
    let t = a.vertex(Role::T);
    let s2 = a.vertex(Role::S(2));
    for k in [1, 3, 4] {
        let s = a.vertex(Role::S(k));
        for j in 1..=f.num_clauses() {
            edges.push(Edge::of(s, a.vertex(Role::Clause(j))));
        }
        edges.push(Edge::of(s, s2));
        edges.push(Edge::of(t, s));
    }
    for i in 1..=f.num_vars() {
        edges.push(Edge::of(t, a.vertex(Role::PosLit(i))));
        edges.push(Edge::of(t, a.vertex(Role::NegLit(i))));
    }
    a.graph = Graph::new(order, &edges).expect("gadget edges are distinct and in range");
    Ok(a)
}

pub fn build_instance(f: &CnfFormula, mode: ReductionMode) -> Result<ReductionArtifact, GadgetTooLarge> {
    match mode {
        ReductionMode::Reinforcement => build_reinforcement_instance(f),
        ReductionMode::Bondage => build_bondage_instance(f),
    }
}

/// Reads a truth assignment off a vertex set that meets every variable
/// gadget in exactly one of `u_i`, `v_i`, `nu_i`: `u_i` or `v_i` means true,
/// `nu_i` means false. Leaf vertices `x_i`, `y_i` are ignored.
pub fn assignment_from_witness(a: &ReductionArtifact, d: &VertexSet) -> Result<Assignment, ReductionError> {
    if d.order() != a.graph.order() {
        return Err(ReductionError::OrderMismatch {
            expected: a.graph.order(),
            found: d.order(),
        });
    }
    let mut values = Vec::with_capacity(a.num_vars);
    for i in 1..=a.num_vars {
        let pos = d.contains(a.vertex(Role::PosLit(i)));
        let mid = d.contains(a.vertex(Role::Mid(i)));
        let neg = d.contains(a.vertex(Role::NegLit(i)));
        let found = [pos, mid, neg].iter().filter(|&&b| b).count();
        if found != 1 {
            return Err(ReductionError::GadgetSelection { index: i, found });
        }
        values.push(pos || mid);
    }
    Ok(Assignment::new(values))
}

/// The vertex set (and, for the reinforcement gadget, the added edge) that a
/// satisfying assignment induces. Certification is left to the caller.
///
/// Reinforcement: the true literal vertices, plus the edge from `x` to the
/// true literal vertex of variable 1. Bondage: the true literal vertices,
/// every leaf `x_i`, `y_i`, and `s_2`.
pub fn witness_from_assignment(
    a: &ReductionArtifact,
    f: &Assignment,
) -> Result<(VertexSet, Option<Edge>), ReductionError> {
    if f.num_vars() != a.num_vars {
        return Err(ReductionError::AssignmentLength {
            expected: a.num_vars,
            found: f.num_vars(),
        });
    }
    let order = a.graph.order();
    let true_literal = |i: usize| a.vertex(if f.value(i) { Role::PosLit(i) } else { Role::NegLit(i) });
    let mut ids: Vec<usize> = (1..=a.num_vars).map(true_literal).collect();
    match a.mode {
        ReductionMode::Reinforcement => {
            let d = VertexSet::from_ids(order, ids).expect("ids within gadget");
            let edge = Edge::of(a.vertex(Role::X), true_literal(1));
            Ok((d, Some(edge)))
        }
        ReductionMode::Bondage => {
            for i in 1..=a.num_vars {
                ids.push(a.vertex(Role::LeafX(i)));
                ids.push(a.vertex(Role::LeafY(i)));
            }
            ids.push(a.vertex(Role::S(2)));
            Ok((VertexSet::from_ids(order, ids).expect("ids within gadget"), None))
        }
    }
}

/// Multiset of role tags, for checking that a roles table is a bijection
/// onto the layout.
pub fn role_counts(roles: &[Role]) -> HashMap<Role, usize> {
    let mut counts = HashMap::new();
    for r in roles {
        *counts.entry(*r).or_insert(0) += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::{parse_dimacs_cnf, EXAMPLE_5VAR};

    fn single() -> CnfFormula {
        CnfFormula::from_signed(3, &[[1, 2, 3]]).unwrap()
    }

    #[test]
    fn reinforcement_counts_on_five_variable_example() {
        let f = parse_dimacs_cnf(EXAMPLE_5VAR).unwrap();
        let a = build_reinforcement_instance(&f).unwrap();
        assert_eq!((a.graph.order(), a.graph.size()), (21, 46));
    }

    #[test]
    fn reinforcement_single_clause() {
        let a = build_reinforcement_instance(&single()).unwrap();
        assert_eq!((a.graph.order(), a.graph.size()), (12, 21));
        let c1 = a.vertex(Role::Clause(1));
        assert_eq!(c1, 9);
        let nbrs: Vec<Role> = a.graph.neighbors(c1).iter().map(|v| a.role(v)).collect();
        assert_eq!(
            nbrs,
            vec![Role::PosLit(1), Role::PosLit(2), Role::PosLit(3), Role::X, Role::Y]
        );
        // y: m clause vertices, 2n literal vertices, x
        assert_eq!(a.graph.degree(a.vertex(Role::Y)), 1 + 2 * 3 + 1);
    }

    #[test]
    fn bondage_counts_and_degrees() {
        let f = CnfFormula::from_signed(3, &[[1, 2, 3], [-1, 2, -3], [1, -2, 3]]).unwrap();
        let a = build_bondage_instance(&f).unwrap();
        assert_eq!((a.graph.order(), a.graph.size()), (23, 42));
        for i in 1..=3 {
            assert_eq!(a.graph.degree(a.vertex(Role::LeafX(i))), 1);
            assert_eq!(a.graph.degree(a.vertex(Role::LeafY(i))), 1);
        }
        assert_eq!(a.graph.degree(a.vertex(Role::T)), 3 + 2 * 3);
        let s2 = a.vertex(Role::S(2));
        let s2_nbrs: Vec<Role> = a.graph.neighbors(s2).iter().map(|v| a.role(v)).collect();
        assert_eq!(s2_nbrs, vec![Role::S(1), Role::S(3), Role::S(4)]);
        for k in [1, 3, 4] {
            let s = a.vertex(Role::S(k));
            assert_eq!(a.graph.degree(s), 3 + 2);
            assert!(a.graph.has_edge(Edge::of(s, a.vertex(Role::T))));
        }
    }

    #[test]
    fn layout_matches_roles_table() {
        let f = parse_dimacs_cnf(EXAMPLE_5VAR).unwrap();
        for a in [
            build_reinforcement_instance(&f).unwrap(),
            build_bondage_instance(&f).unwrap(),
        ] {
            assert_eq!(a.roles.len(), a.expected_order());
            for (v, &r) in a.roles.iter().enumerate() {
                assert_eq!(a.vertex(r), v);
            }
            assert!(role_counts(&a.roles).values().all(|&c| c == 1));
        }
    }

    #[test]
    fn role_tags_round_trip() {
        let f = parse_dimacs_cnf(EXAMPLE_5VAR).unwrap();
        let a = build_bondage_instance(&f).unwrap();
        let text = a.roles_string();
        assert!(text.starts_with("0 u1\n1 v1\n2 nu1\n3 x1\n4 y1\n"));
        assert!(text.ends_with("32 s4\n33 t\n"));
        assert_eq!(parse_roles(&text).unwrap(), a.roles);
        assert!(parse_roles("0 q1\n").is_err());
        assert!(parse_roles("1 u1\n").is_err());
        assert!(parse_roles("0 s5\n").is_err());
        assert!(parse_roles("0 u01\n").is_err());
    }

    #[test]
    fn assignment_from_witness_examples() {
        let f = parse_dimacs_cnf(EXAMPLE_5VAR).unwrap();
        let a = build_reinforcement_instance(&f).unwrap();
        let pick = |roles: &[Role]| VertexSet::from_ids(21, roles.iter().map(|&r| a.vertex(r))).unwrap();
        let d = pick(&[
            Role::NegLit(1),
            Role::PosLit(2),
            Role::Mid(3),
            Role::NegLit(4),
            Role::PosLit(5),
            Role::X,
        ]);
        let f = assignment_from_witness(&a, &d).unwrap();
        assert_eq!(f.values(), &[false, true, true, false, true]);

        let d = pick(&[Role::PosLit(1), Role::NegLit(1), Role::PosLit(2)]);
        assert_eq!(
            assignment_from_witness(&a, &d),
            Err(ReductionError::GadgetSelection { index: 1, found: 2 })
        );
    }

    #[test]
    fn assignment_from_bondage_witness_ignores_leaves() {
        let a = build_bondage_instance(&single()).unwrap();
        let mut ids = vec![
            a.vertex(Role::Mid(3)),
            a.vertex(Role::NegLit(2)),
            a.vertex(Role::PosLit(1)),
        ];
        for i in 1..=3 {
            ids.push(a.vertex(Role::LeafX(i)));
            ids.push(a.vertex(Role::LeafY(i)));
        }
        let d = VertexSet::from_ids(a.graph.order(), ids).unwrap();
        let f = assignment_from_witness(&a, &d).unwrap();
        assert_eq!(f.values(), &[true, false, true]);
    }

    #[test]
    fn witness_from_assignment_examples() {
        let f = single();
        let b = build_bondage_instance(&f).unwrap();
        for bits in 0..8u32 {
            let asg = Assignment::new((0..3).map(|k| bits >> k & 1 == 1).collect());
            let (d, e) = witness_from_assignment(&b, &asg).unwrap();
            assert_eq!(d.len(), 10);
            assert!(e.is_none());
            assert!(d.contains(b.vertex(Role::S(2))));
        }

        let fig = parse_dimacs_cnf(EXAMPLE_5VAR).unwrap();
        let r = build_reinforcement_instance(&fig).unwrap();
        let asg = Assignment::new(vec![true, false, true, true, false]);
        let (d, e) = witness_from_assignment(&r, &asg).unwrap();
        assert_eq!(d.len(), 5);
        let e = e.unwrap();
        assert_eq!(e, Edge::of(r.vertex(Role::PosLit(1)), r.vertex(Role::X)));
        assert!(!r.graph.has_edge(e));

        let asg = Assignment::new(vec![false, false, true, true, false]);
        let (_, e) = witness_from_assignment(&r, &asg).unwrap();
        assert_eq!(e.unwrap(), Edge::of(r.vertex(Role::NegLit(1)), r.vertex(Role::X)));
    }
}
