//! Verification suites: the closed forms against the exact solvers, the
//! complete-graph connectivity bound, and the behaviour of both gadget
//! constructions on small random formulas.
//!
//! Each suite returns one [`CheckItem`] per checked fact. A failing item
//! carries the counterexample in its `detail` payload.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::alteration::{bondage_ocd, gamma_after_each_single_removal, reinforcement_ocd, Alteration, AlterationError};
use crate::closed_forms::{
    b_ocd_complete, b_ocd_cycle, b_ocd_path, check_complete_minus_edges_connected, gamma_tilde_path_cycle,
    lemma_budget, LEMMA_MAX_ORDER,
};
use crate::graph::{generate_family, Family, Graph};
use crate::reduction::{
    assignment_from_witness, build_bondage_instance, build_reinforcement_instance, witness_from_assignment,
    ReductionArtifact, Role,
};
use crate::sat::{brute_force_sat, random_3cnf, saturated_3cnf, CnfFormula, DEFAULT_MAX_VARS};
use crate::solver::{gamma_tilde, is_ocd, SolveError, SolverConfig};

/// Largest order for the family suite.
pub const FAMILIES_MAX_N: usize = 12;
/// Complete graphs beyond this order make the bondage search too wide.
pub const FAMILIES_MAX_COMPLETE: usize = 10;
/// Largest variable count for the gadget suites.
pub const GADGET_MAX_VARS: usize = 5;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("{what} = {value} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("{what} must be at least {min}")]
    TooSmall { what: &'static str, min: usize },
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Alteration(#[from] AlterationError),
}

fn cap(what: &'static str, value: usize, cap: usize) -> Result<(), VerifyError> {
    if value > cap {
        Err(VerifyError::CapExceeded { what, value, cap })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

impl CheckItem {
    fn new(name: impl Into<String>, passed: bool, detail: Value) -> Self {
        CheckItem {
            name: name.into(),
            passed,
            detail,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub items: Vec<CheckItem>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.passed)
    }
}

fn bondage_k(g: &Graph, cfg: &SolverConfig) -> Result<usize, VerifyError> {
    Ok(bondage_ocd(g, None, cfg)?
        .k()
        .expect("unbounded bondage search on an isolate-free graph always finds a witness"))
}

/// Bondage numbers of `K_n`, `C_n`, `P_n` against their closed forms, and the
/// outer-connected domination numbers of paths and cycles.
pub fn families(max_n: usize, cfg: &SolverConfig) -> Result<SuiteReport, VerifyError> {
    cap("max-n", max_n, FAMILIES_MAX_N)?;
    let mut items = Vec::new();
    let mut push_bondage = |family: Family, n: usize, predicted: usize| -> Result<(), VerifyError> {
        let g = generate_family(family, n).expect("within family domain");
        let k = bondage_k(&g, cfg)?;
        items.push(CheckItem::new(
            format!("bondage {family} n={n}"),
            k == predicted,
            json!({ "computed": k, "predicted": predicted }),
        ));
        Ok(())
    };
    for n in 3..=max_n.min(FAMILIES_MAX_COMPLETE) {
        push_bondage(Family::Complete, n, b_ocd_complete(n).expect("n >= 3"))?;
    }
    for n in 3..=max_n {
        push_bondage(Family::Cycle, n, b_ocd_cycle(n).expect("n >= 3"))?;
    }
    for n in 2..=max_n {
        push_bondage(Family::Path, n, b_ocd_path(n).expect("n >= 2"))?;
    }
    for (family, lo) in [(Family::Path, 1), (Family::Cycle, 3)] {
        for n in lo..=max_n {
            let g = generate_family(family, n).expect("within family domain");
            let r = gamma_tilde(&g, cfg)?;
            let predicted = gamma_tilde_path_cycle(family, n).expect("within family domain");
            items.push(CheckItem::new(
                format!("gamma {family} n={n}"),
                r.value == predicted,
                json!({ "computed": r.value, "predicted": predicted, "witness": r.witness.to_vec() }),
            ));
        }
    }
    Ok(SuiteReport {
        suite: "families".into(),
        items,
    })
}

/// `K_n` minus any `ceil((n+1)/2) - 1` edges stays connected, for `n = 3..=max_n`.
pub fn complete_graph_connectivity(max_n: usize) -> Result<SuiteReport, VerifyError> {
    cap("max-n", max_n, LEMMA_MAX_ORDER)?;
    let items = (3..=max_n)
        .map(|n| {
            let budget = lemma_budget(n);
            let ok = check_complete_minus_edges_connected(n, Some(budget)).expect("within cap");
            CheckItem::new(
                format!("K_{n} minus {budget} edges connected"),
                ok,
                json!({ "n": n, "budget": budget }),
            )
        })
        .collect();
    Ok(SuiteReport {
        suite: "lemma1".into(),
        items,
    })
}

/// Instance generation shared by the gadget suites.
#[derive(Debug, Clone, Copy)]
pub struct InstancePlan {
    pub vars: usize,
    /// Random instances draw their clause count uniformly from `1..=clauses`.
    pub clauses: usize,
    pub samples: usize,
    /// Extra unsatisfiable instances: all eight sign patterns over three
    /// variables, plus `k` random clauses for the `k`-th one.
    pub saturated: usize,
    pub seed: u64,
}

impl InstancePlan {
    pub fn instances(&self) -> Vec<CnfFormula> {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut out: Vec<CnfFormula> = (0..self.samples)
            .map(|_| {
                let m = rng.gen_range(1..=self.clauses.max(1));
                random_3cnf(&mut rng, self.vars, m)
            })
            .collect();
        for k in 0..self.saturated {
            let mut triple = [0usize; 3];
            for (slot, i) in triple
                .iter_mut()
                .zip(rand::seq::index::sample(&mut rng, self.vars, 3).into_vec())
            {
                *slot = i + 1;
            }
            triple.sort_unstable();
            let base = saturated_3cnf(self.vars, triple).expect("distinct variables");
            let extra = random_3cnf(&mut rng, self.vars, k);
            let clauses = base
                .clauses()
                .iter()
                .chain(extra.clauses())
                .map(|c| c.to_vec())
                .collect();
            out.push(CnfFormula::new(self.vars, clauses).expect("valid clauses"));
        }
        out
    }

    fn check(&self, extra_vertices: usize, per_var: usize) -> Result<(), VerifyError> {
        if self.vars < 3 {
            return Err(VerifyError::TooSmall { what: "vars", min: 3 });
        }
        if self.clauses < 1 {
            return Err(VerifyError::TooSmall {
                what: "clauses",
                min: 1,
            });
        }
        cap("vars", self.vars, GADGET_MAX_VARS)?;
        let worst_clauses = self
            .clauses
            .max(if self.saturated > 0 { 8 + self.saturated - 1 } else { 0 });
        let order = per_var * self.vars + worst_clauses + extra_vertices;
        cap("gadget order", order, crate::solver::DEFAULT_MAX_ORDER)
    }
}

fn formula_json(f: &CnfFormula) -> Value {
    json!({ "num_vars": f.num_vars(), "clauses": f.clauses() })
}

fn roles_json(a: &ReductionArtifact, ids: impl IntoIterator<Item = usize>) -> Value {
    json!(ids.into_iter().map(|v| a.role(v).to_string()).collect::<Vec<_>>())
}

/// Reinforcement gadget: its outer-connected domination number is `n + 1`,
/// and the formula is satisfiable exactly when one added edge lowers it.
pub fn reinforcement_gadgets(plan: &InstancePlan, cfg: &SolverConfig) -> Result<SuiteReport, VerifyError> {
    plan.check(2, 3)?;
    let mut items = Vec::new();
    for (idx, f) in plan.instances().iter().enumerate() {
        items.extend(check_reinforcement_gadget(&format!("instance {idx}"), f, cfg)?);
    }
    Ok(SuiteReport {
        suite: "claims3".into(),
        items,
    })
}

/// All checks on one reinforcement gadget.
pub fn check_reinforcement_gadget(
    label: &str,
    f: &CnfFormula,
    cfg: &SolverConfig,
) -> Result<Vec<CheckItem>, VerifyError> {
    let n = f.num_vars();
    let a = build_reinforcement_instance(f).map_err(|e| VerifyError::CapExceeded {
        what: "gadget order",
        value: e.order,
        cap: crate::graph::MAX_ORDER,
    })?;
    let g = &a.graph;
    let mut items = Vec::new();
    items.push(CheckItem::new(
        format!("{label}: order and size"),
        g.order() == a.expected_order() && g.size() == a.expected_size(),
        json!({ "order": g.order(), "size": g.size(), "expected": [a.expected_order(), a.expected_size()] }),
    ));

    let gamma = gamma_tilde(g, cfg)?;
    items.push(CheckItem::new(
        format!("{label}: gamma = n+1"),
        gamma.value == n + 1,
        json!({ "gamma": gamma.value, "n": n, "witness": roles_json(&a, gamma.witness.iter()) }),
    ));

    let model = brute_force_sat(f, DEFAULT_MAX_VARS).expect("vars within cap");
    let r = reinforcement_ocd(g, Some(1), cfg)?;
    let r_is_one = matches!(r, Alteration::Found(_));
    let mut detail = json!({
        "formula": formula_json(f),
        "satisfiable": model.is_some(),
        "reinforcement_is_1": r_is_one,
    });
    if let Alteration::Found(res) = &r {
        let h = res.apply(g);
        let w = gamma_tilde(&h, cfg)?;
        detail["added_edge"] = roles_json(&a, [res.witness_edges[0].u(), res.witness_edges[0].v()]);
        detail["gamma_after"] = json!(res.gamma_after);
        detail["witness_after"] = roles_json(&a, w.witness.iter());
    }
    items.push(CheckItem::new(
        format!("{label}: satisfiable iff reinforcement = 1"),
        model.is_some() == r_is_one,
        detail,
    ));

    if let Some(model) = &model {
        let (d, e) = witness_from_assignment(&a, model).expect("assignment length matches");
        let e = e.expect("reinforcement witness carries an edge");
        let h = g.add_edges(&[e]).expect("constructed edge is a non-edge");
        let ok = d.len() == n && is_ocd(&h, &d) && assignment_from_witness(&a, &d).as_ref() == Ok(model);
        items.push(CheckItem::new(
            format!("{label}: model yields an n-vertex set for G + e"),
            ok,
            json!({ "set": roles_json(&a, d.iter()), "edge": roles_json(&a, [e.u(), e.v()]) }),
        ));
    }
    Ok(items)
}

/// Bondage gadget: lower bound `3n + 1`, satisfiable exactly at that bound,
/// every single removal stays at or below `3n + 2`, satisfiable exactly when
/// one removal suffices, and the canonical witness avoids `t`, every clause
/// vertex and every `s_k` other than `s_2`.
pub fn bondage_gadgets(plan: &InstancePlan, cfg: &SolverConfig) -> Result<SuiteReport, VerifyError> {
    plan.check(5, 5)?;
    let mut items = Vec::new();
    for (idx, f) in plan.instances().iter().enumerate() {
        items.extend(check_bondage_gadget(&format!("instance {idx}"), f, cfg)?);
    }
    Ok(SuiteReport {
        suite: "claims5".into(),
        items,
    })
}

/// All checks on one bondage gadget.
pub fn check_bondage_gadget(label: &str, f: &CnfFormula, cfg: &SolverConfig) -> Result<Vec<CheckItem>, VerifyError> {
    let n = f.num_vars();
    let a = build_bondage_instance(f).map_err(|e| VerifyError::CapExceeded {
        what: "gadget order",
        value: e.order,
        cap: crate::graph::MAX_ORDER,
    })?;
    let g = &a.graph;
    let mut items = Vec::new();
    items.push(CheckItem::new(
        format!("{label}: order and size"),
        g.order() == a.expected_order() && g.size() == a.expected_size(),
        json!({ "order": g.order(), "size": g.size(), "expected": [a.expected_order(), a.expected_size()] }),
    ));

    let gamma = gamma_tilde(g, cfg)?;
    let model = brute_force_sat(f, DEFAULT_MAX_VARS).expect("vars within cap");
    let base = json!({
        "formula": formula_json(f),
        "satisfiable": model.is_some(),
        "gamma": gamma.value,
        "witness": roles_json(&a, gamma.witness.iter()),
    });
    items.push(CheckItem::new(
        format!("{label}: gamma >= 3n+1"),
        gamma.value > 3 * n,
        base.clone(),
    ));
    items.push(CheckItem::new(
        format!("{label}: satisfiable iff gamma = 3n+1"),
        model.is_some() == (gamma.value == 3 * n + 1),
        base.clone(),
    ));

    let singles = gamma_after_each_single_removal(g, cfg)?;
    let worst = singles
        .iter()
        .max_by_key(|&&(_, v)| v)
        .copied()
        .expect("gadget has edges");
    items.push(CheckItem::new(
        format!("{label}: every single removal keeps gamma <= 3n+2"),
        worst.1 <= 3 * n + 2,
        json!({ "max_gamma_after": worst.1, "edge": roles_json(&a, [worst.0.u(), worst.0.v()]) }),
    ));

    let b_is_one = matches!(bondage_ocd(g, Some(1), cfg)?, Alteration::Found(_));
    let single_raises = singles.iter().any(|&(_, v)| v > gamma.value);
    items.push(CheckItem::new(
        format!("{label}: satisfiable iff bondage = 1"),
        model.is_some() == b_is_one && b_is_one == single_raises,
        json!({ "satisfiable": model.is_some(), "bondage_is_1": b_is_one }),
    ));

    if gamma.value == 3 * n + 1 {
        let w = &gamma.witness;
        let hits_t = w.contains(a.vertex(Role::T));
        let hits_clause = (1..=a.num_clauses).any(|j| w.contains(a.vertex(Role::Clause(j))));
        let s_part: Vec<usize> = (1..=4).filter(|&k| w.contains(a.vertex(Role::S(k)))).collect();
        items.push(CheckItem::new(
            format!("{label}: witness avoids t and clause vertices, meets S in s2"),
            !hits_t && !hits_clause && s_part == [2],
            json!({ "witness": roles_json(&a, w.iter()) }),
        ));
    }

    if let Some(model) = &model {
        let (d, _) = witness_from_assignment(&a, model).expect("assignment length matches");
        let ok = d.len() == 3 * n + 1 && is_ocd(g, &d) && assignment_from_witness(&a, &d).as_ref() == Ok(model);
        items.push(CheckItem::new(
            format!("{label}: model yields a (3n+1)-vertex set"),
            ok,
            json!({ "set": roles_json(&a, d.iter()) }),
        ));
    }
    Ok(items)
}
