//! 3-CNF formulas, a DIMACS reader and an exhaustive satisfiability oracle.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// A satisfiable five-variable, four-clause instance used throughout the
/// examples and tests.
pub const EXAMPLE_5VAR: &str = "p cnf 5 4\n-1 -2 3 0\n1 3 5 0\n-3 -4 5 0\n-1 -3 4 0\n";

/// Default cap on variables for [`brute_force_sat`].
pub const DEFAULT_MAX_VARS: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    /// 1-based variable index.
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    /// DIMACS-style signed integer.
    pub fn from_dimacs(x: i64) -> Option<Self> {
        if x == 0 {
            return None;
        }
        Some(Literal {
            var: x.unsigned_abs() as usize,
            positive: x > 0,
        })
    }

    pub fn to_dimacs(self) -> i64 {
        if self.positive {
            self.var as i64
        } else {
            -(self.var as i64)
        }
    }

    pub fn satisfied_by(self, f: &Assignment) -> bool {
        f.value(self.var) == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

impl Serialize for Literal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i64(self.to_dimacs())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CnfError {
    #[error("formula needs at least one variable")]
    NoVariables,
    #[error("clause {clause}: variable {var} outside 1..={num_vars}")]
    VariableOutOfRange { clause: usize, var: usize, num_vars: usize },
    #[error("clause {clause} has {len} literals; exactly 3 are required")]
    ClauseSize { clause: usize, len: usize },
    #[error("clause {clause} contains variable {var} in both polarities")]
    ComplementaryPair { clause: usize, var: usize },
    #[error("clause {clause} repeats literal {literal}")]
    DuplicateLiteral { clause: usize, literal: Literal },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DimacsError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: CnfError,
    },
    #[error("missing `p cnf <vars> <clauses>` header")]
    MissingHeader,
    #[error("header declares {declared} clauses but {found} were read")]
    ClauseCount { declared: usize, found: usize },
}

/// A 3-CNF formula; clause `j` (0-based here) corresponds to `C_{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self, CnfError> {
        if num_vars == 0 {
            return Err(CnfError::NoVariables);
        }
        let mut out = Vec::with_capacity(clauses.len());
        for (j, clause) in clauses.into_iter().enumerate() {
            out.push(validate_clause(num_vars, j + 1, &clause)?);
        }
        Ok(CnfFormula { num_vars, clauses: out })
    }

    /// Convenience constructor from DIMACS-style signed integers.
    pub fn from_signed(num_vars: usize, clauses: &[[i64; 3]]) -> Result<Self, CnfError> {
        let lits = clauses
            .iter()
            .enumerate()
            .map(|(j, c)| {
                c.iter()
                    .map(|&x| {
                        Literal::from_dimacs(x).ok_or(CnfError::VariableOutOfRange {
                            clause: j + 1,
                            var: 0,
                            num_vars,
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        CnfFormula::new(num_vars, lits)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, f: &Assignment) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|l| l.satisfied_by(f)))
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            s.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
        }
        s
    }
}

fn validate_clause(num_vars: usize, clause: usize, lits: &[Literal]) -> Result<[Literal; 3], CnfError> {
    for l in lits {
        if l.var == 0 || l.var > num_vars {
            return Err(CnfError::VariableOutOfRange {
                clause,
                var: l.var,
                num_vars,
            });
        }
    }
    for (a, la) in lits.iter().enumerate() {
        for lb in &lits[a + 1..] {
            if la.var == lb.var {
                return Err(if la.positive == lb.positive {
                    CnfError::DuplicateLiteral { clause, literal: *la }
                } else {
                    CnfError::ComplementaryPair { clause, var: la.var }
                });
            }
        }
    }
    match lits {
        [a, b, c] => Ok([*a, *b, *c]),
        _ => Err(CnfError::ClauseSize {
            clause,
            len: lits.len(),
        }),
    }
}

/// Parses DIMACS CNF. Comment lines start with `c`; clauses may span lines
/// and are terminated by `0`; a lone `%` ends the clause section.
pub fn parse_dimacs_cnf(text: &str) -> Result<CnfFormula, DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<[Literal; 3]> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut clause_line = 0;

    'lines: for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(DimacsError::Syntax {
                    line,
                    msg: "duplicate header".into(),
                });
            }
            let toks: Vec<&str> = trimmed.split_whitespace().collect();
            let parsed = match toks.as_slice() {
                ["p", "cnf", n, m] => n.parse::<usize>().ok().zip(m.parse::<usize>().ok()),
                _ => None,
            };
            let (n, m) = parsed.ok_or_else(|| DimacsError::Syntax {
                line,
                msg: format!("malformed header `{trimmed}`"),
            })?;
            if n == 0 {
                return Err(DimacsError::Invalid {
                    line,
                    source: CnfError::NoVariables,
                });
            }
            header = Some((n, m));
            continue;
        }
        let (n, _) = header.ok_or(DimacsError::MissingHeader)?;
        for tok in trimmed.split_whitespace() {
            if tok == "%" {
                break 'lines;
            }
            let x: i64 = tok.parse().map_err(|_| DimacsError::Syntax {
                line,
                msg: format!("expected an integer literal, found `{tok}`"),
            })?;
            if current.is_empty() {
                clause_line = line;
            }
            match Literal::from_dimacs(x) {
                Some(l) => {
                    if l.var > n {
                        return Err(DimacsError::Invalid {
                            line,
                            source: CnfError::VariableOutOfRange {
                                clause: clauses.len() + 1,
                                var: l.var,
                                num_vars: n,
                            },
                        });
                    }
                    current.push(l);
                }
                None => {
                    let c = validate_clause(n, clauses.len() + 1, &current).map_err(|source| DimacsError::Invalid {
                        line: clause_line,
                        source,
                    })?;
                    clauses.push(c);
                    current.clear();
                }
            }
        }
    }

    let (n, m) = header.ok_or(DimacsError::MissingHeader)?;
    if !current.is_empty() {
        return Err(DimacsError::Syntax {
            line: clause_line,
            msg: "clause not terminated by 0".into(),
        });
    }
    if clauses.len() != m {
        return Err(DimacsError::ClauseCount {
            declared: m,
            found: clauses.len(),
        });
    }
    Ok(CnfFormula { num_vars: n, clauses })
}

/// A total truth assignment; `values[i]` is the value of variable `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    /// Value of the 1-based variable `var`.
    pub fn value(&self, var: usize) -> bool {
        self.values[var - 1]
    }

    pub fn num_vars(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }
}

impl Serialize for Assignment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.values.iter().map(|&b| if b { "T" } else { "F" }))
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &b) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "u{}={}", i + 1, if b { 'T' } else { 'F' })?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{num_vars} variables exceed the enumeration cap of {cap}")]
pub struct TooManyVariables {
    pub num_vars: usize,
    pub cap: usize,
}

/// The first satisfying assignment in lexicographic order (variable 1 most
/// significant, F before T), or `None` when the formula is unsatisfiable.
pub fn brute_force_sat(f: &CnfFormula, max_vars: usize) -> Result<Option<Assignment>, TooManyVariables> {
    let n = f.num_vars;
    if n > max_vars || n >= 63 {
        return Err(TooManyVariables {
            num_vars: n,
            cap: max_vars,
        });
    }
    // Variable i is bit n - i of the counter, so counting up walks the
    // assignments lexicographically. Clauses become (care, want) masks.
    let masks: Vec<(u64, u64)> = f
        .clauses
        .iter()
        .map(|c| {
            c.iter().fold((0, 0), |(care, want), l| {
                let bit = 1u64 << (n - l.var);
                (care | bit, if l.positive { want | bit } else { want })
            })
        })
        .collect();
    let hit = (0u64..1 << n).find(|&x| masks.iter().all(|&(care, want)| (!(x ^ want) & care) != 0));
    Ok(hit.map(|x| Assignment::new((1..=n).map(|var| x >> (n - var) & 1 == 1).collect())))
}

/// A uniformly random 3-CNF: each clause takes three distinct variables with
/// independent random signs.
pub fn random_3cnf<R: rand::Rng + ?Sized>(rng: &mut R, num_vars: usize, num_clauses: usize) -> CnfFormula {
    assert!(num_vars >= 3, "3-CNF needs at least three variables");
    let clauses = (0..num_clauses)
        .map(|_| {
            rand::seq::index::sample(rng, num_vars, 3)
                .into_iter()
                .map(|i| Literal {
                    var: i + 1,
                    positive: rng.gen(),
                })
                .collect()
        })
        .collect();
    CnfFormula::new(num_vars, clauses).expect("distinct variables per clause")
}

/// All eight sign patterns over variables `vars`; unsatisfiable by construction.
pub fn saturated_3cnf(num_vars: usize, vars: [usize; 3]) -> Result<CnfFormula, CnfError> {
    let clauses = (0..8u32)
        .map(|bits| {
            vars.iter()
                .enumerate()
                .map(|(k, &var)| Literal {
                    var,
                    positive: bits >> k & 1 == 1,
                })
                .collect()
        })
        .collect();
    CnfFormula::new(num_vars, clauses)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn saturated() -> CnfFormula {
        saturated_3cnf(3, [1, 2, 3]).unwrap()
    }

    #[test]
    fn parses_examples() {
        let f = parse_dimacs_cnf("p cnf 3 1\n1 -2 3 0\n").unwrap();
        assert_eq!(f.num_vars(), 3);
        assert_eq!(f.clauses(), &[[Literal::pos(1), Literal::neg(2), Literal::pos(3)]]);

        let f = parse_dimacs_cnf(EXAMPLE_5VAR).unwrap();
        assert_eq!((f.num_vars(), f.num_clauses()), (5, 4));
        assert_eq!(f.clauses()[2], [Literal::neg(3), Literal::neg(4), Literal::pos(5)]);
    }

    #[test]
    fn parses_comments_and_multiline_clauses() {
        let f = parse_dimacs_cnf("c hello\np cnf 4 2\n1 2\n3 0 -4 -1 2 0\n%\n0\n").unwrap();
        assert_eq!(f.num_clauses(), 2);
        assert_eq!(f.clauses()[1], [Literal::neg(4), Literal::neg(1), Literal::pos(2)]);
    }

    #[test]
    fn reports_errors_with_lines() {
        assert_eq!(
            parse_dimacs_cnf("p cnf 2 1\n1 -1 2 0\n"),
            Err(DimacsError::Invalid {
                line: 2,
                source: CnfError::ComplementaryPair { clause: 1, var: 1 }
            })
        );
        assert_eq!(
            parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n1 2 0\n"),
            Err(DimacsError::Invalid {
                line: 3,
                source: CnfError::ClauseSize { clause: 2, len: 2 }
            })
        );
        assert!(matches!(
            parse_dimacs_cnf("p cnf 3 1\n1 2 4 0\n"),
            Err(DimacsError::Invalid {
                line: 2,
                source: CnfError::VariableOutOfRange { var: 4, .. }
            })
        ));
        assert!(matches!(
            parse_dimacs_cnf("p cnf x 1\n"),
            Err(DimacsError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_dimacs_cnf("p dnf 3 1\n1 2 3 0\n"),
            Err(DimacsError::Syntax { line: 1, .. })
        ));
        assert_eq!(parse_dimacs_cnf("1 2 3 0\n"), Err(DimacsError::MissingHeader));
        assert_eq!(
            parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n"),
            Err(DimacsError::ClauseCount { declared: 2, found: 1 })
        );
        assert!(matches!(
            parse_dimacs_cnf("p cnf 3 1\n1 1 2 0\n"),
            Err(DimacsError::Invalid {
                source: CnfError::DuplicateLiteral { .. },
                ..
            })
        ));
    }

    /// Straight enumeration with per-literal evaluation, kept apart from the
    /// bit-mask fast path.
    fn naive_first_model(f: &CnfFormula) -> Option<Vec<bool>> {
        let n = f.num_vars();
        let mut values = vec![false; n];
        loop {
            let a = Assignment::new(values.clone());
            if f.is_satisfied_by(&a) {
                return Some(values);
            }
            // increment with variable n as least significant digit
            let mut i = n;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                if values[i] {
                    values[i] = false;
                } else {
                    values[i] = true;
                    break;
                }
            }
        }
    }

    #[test]
    fn brute_force_examples() {
        let fig = parse_dimacs_cnf(EXAMPLE_5VAR).unwrap();
        let model = brute_force_sat(&fig, DEFAULT_MAX_VARS).unwrap().unwrap();
        assert!(fig.is_satisfied_by(&model));
        // first model: u1..u4 = F, u5 = T satisfies C1 (not u1), C2 (u5), C3, C4
        assert_eq!(model.values(), &[false, false, false, false, true]);
        assert_eq!(Some(model.values().to_vec()), naive_first_model(&fig));

        assert_eq!(brute_force_sat(&saturated(), DEFAULT_MAX_VARS).unwrap(), None);

        let single = CnfFormula::from_signed(3, &[[1, 2, 3]]).unwrap();
        let model = brute_force_sat(&single, DEFAULT_MAX_VARS).unwrap().unwrap();
        assert_eq!(model.values(), &[false, false, true]);
    }

    #[test]
    fn brute_force_respects_cap() {
        let f = CnfFormula::from_signed(25, &[[1, 2, 3]]).unwrap();
        assert_eq!(
            brute_force_sat(&f, DEFAULT_MAX_VARS),
            Err(TooManyVariables { num_vars: 25, cap: 24 })
        );
    }

    #[test]
    fn brute_force_matches_naive_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(3..=6);
            let m = rng.gen_range(1..=20);
            let clauses: Vec<[i64; 3]> = (0..m)
                .map(|_| {
                    let mut vars: Vec<i64> = (1..=n as i64).collect();
                    let mut c = [0i64; 3];
                    for slot in &mut c {
                        let v = vars.swap_remove(rng.gen_range(0..vars.len()));
                        *slot = if rng.gen() { v } else { -v };
                    }
                    c
                })
                .collect();
            let f = CnfFormula::from_signed(n, &clauses).unwrap();
            let fast = brute_force_sat(&f, DEFAULT_MAX_VARS).unwrap();
            assert_eq!(fast.map(|a| a.values().to_vec()), naive_first_model(&f));
        }
    }
}
