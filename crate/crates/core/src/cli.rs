//! Command-line front end.
//!
//! Every run produces one [`Report`]. With `--json` it is printed as a single
//! JSON object with sorted keys; otherwise as `key: value` lines. Result
//! payloads depend only on the inputs; `stats` carries timing and counters.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 cap or bound exceeded.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::alteration::{bondage_ocd, reinforcement_ocd, Alteration, AlterationError};
use crate::edgelist::{read_edge_list, write_edge_list, EdgeListError};
use crate::reduction::{build_instance, ReductionMode};
use crate::sat::{brute_force_sat, parse_dimacs_cnf, CnfFormula, DEFAULT_MAX_VARS};
use crate::solver::{gamma_plain, gamma_tilde, SolveError, SolverConfig, DEFAULT_MAX_ORDER};
use crate::verify::{self, InstancePlan, SuiteReport, VerifyError};
use crate::Graph;

/// Environment variable that sets the default worker count.
pub const THREADS_ENV: &str = "OCDOM_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "ocdom",
    version,
    about = "Exact outer-connected domination, bondage and reinforcement"
)]
pub struct Cli {
    /// Print one JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads (default: $OCDOM_THREADS, else available parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Largest graph order the exact solvers accept.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: usize,
    /// Largest variable count for brute-force satisfiability.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VARS)]
    pub max_vars: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Outer-connected domination number of an edge-list graph.
    Gamma {
        graph: PathBuf,
        /// Compute the plain domination number instead.
        #[arg(long)]
        plain: bool,
    },
    /// Fewest edge removals that raise the number.
    Bondage {
        graph: PathBuf,
        #[arg(long)]
        max_k: Option<usize>,
    },
    /// Fewest edge additions that lower the number.
    Reinforce {
        graph: PathBuf,
        #[arg(long)]
        max_k: Option<usize>,
    },
    /// Build a gadget graph from a DIMACS 3-CNF file.
    Reduce {
        #[arg(long, value_enum)]
        mode: ModeArg,
        cnf: PathBuf,
        /// Edge-list output path.
        #[arg(long)]
        out: PathBuf,
        /// Vertex-role output path.
        #[arg(long)]
        roles: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Brute-force satisfiability of a DIMACS 3-CNF file.
    Sat { cnf: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Reinforcement,
    Bondage,
}

impl From<ModeArg> for ReductionMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Reinforcement => ReductionMode::Reinforcement,
            ModeArg::Bondage => ReductionMode::Bondage,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Families,
    Lemma1,
    Claims3,
    Claims5,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Largest order (families: 12 max, default 9; lemma1: 8 max, default 7).
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long, default_value_t = 3)]
    pub vars: usize,
    /// Random instances use 1..=clauses clauses.
    #[arg(long, default_value_t = 3)]
    pub clauses: usize,
    /// Random instances (default: 25 for claims3, 10 for claims5).
    #[arg(long)]
    pub samples: Option<usize>,
    /// Extra unsatisfiable instances (default: 5 for claims3, 0 for claims5).
    #[arg(long)]
    pub saturated: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Undefined,
    BoundExceeded,
    Fail,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct Stats {
    pub examined: u64,
    pub wall_ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub stats: Stats,
    pub status: Status,
}

impl Report {
    /// Canonical JSON: object keys sorted, no whitespace.
    pub fn to_json(&self) -> String {
        serde_json::to_value(self).expect("report is plain data").to_string()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("command: {}\nstatus: {}\n", self.command, json_str(&json!(self.status)));
        push_fields(&mut s, "", &self.inputs);
        push_fields(&mut s, "", &self.result);
        s.push_str(&format!(
            "examined: {}\nwall_ms: {}\n",
            self.stats.examined, self.stats.wall_ms
        ));
        s
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok | Status::Undefined => EXIT_OK,
            Status::Fail => EXIT_FAILED,
            Status::BoundExceeded => EXIT_CAP,
            Status::Error => {
                if self.result.get("kind").and_then(Value::as_str) == Some("cap") {
                    EXIT_CAP
                } else {
                    EXIT_INPUT
                }
            }
        }
    }
}

fn json_str(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn push_fields(out: &mut String, prefix: &str, v: &Value) {
    let Value::Object(map) = v else {
        return;
    };
    for (k, val) in map {
        match val {
            Value::Array(items) if k == "items" => {
                for item in items {
                    let mark = if item["passed"] == json!(true) { "PASS" } else { "FAIL" };
                    out.push_str(&format!("[{mark}] {}", json_str(&item["name"])));
                    if mark == "FAIL" {
                        out.push_str(&format!(" {}", item["detail"]));
                    }
                    out.push('\n');
                }
            }
            _ => out.push_str(&format!("{prefix}{k}: {}\n", json_str(val))),
        }
    }
}

/// Failure of a subcommand, classified for the exit code.
#[derive(Debug)]
enum Failure {
    Input(String),
    Cap(String),
}

impl From<EdgeListError> for Failure {
    fn from(e: EdgeListError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::OrderExceedsCap { .. } => Failure::Cap(e.to_string()),
            SolveError::EmptyGraph => Failure::Input(e.to_string()),
        }
    }
}

impl From<AlterationError> for Failure {
    fn from(e: AlterationError) -> Self {
        match e {
            AlterationError::Solve(s) => s.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Solve(s) => s.into(),
            VerifyError::Alteration(a) => a.into(),
            VerifyError::CapExceeded { .. } => Failure::Cap(e.to_string()),
            VerifyError::TooSmall { .. } => Failure::Input(e.to_string()),
        }
    }
}

struct Outcome {
    result: Value,
    status: Status,
    examined: u64,
}

impl Outcome {
    fn ok(result: Value, examined: u64) -> Self {
        Outcome {
            result,
            status: Status::Ok,
            examined,
        }
    }
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn read_cnf(path: &Path) -> Result<CnfFormula, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_dimacs_cnf(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    read_edge_list(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, f: impl FnOnce(&mut Vec<u8>) -> std::io::Result<()>) -> Result<(), Failure> {
    let mut buf = Vec::new();
    f(&mut buf).expect("writing to a Vec cannot fail");
    std::fs::write(path, buf).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn alteration_outcome(a: Alteration) -> Outcome {
    match a {
        Alteration::Found(r) => Outcome::ok(
            json!({
                "k": r.k,
                "witness_edges": r.witness_edges,
                "gamma_before": r.gamma_before,
                "gamma_after": r.gamma_after,
            }),
            r.examined_subsets,
        ),
        Alteration::BoundExceeded {
            k_max,
            gamma_before,
            examined_subsets,
        } => Outcome {
            result: json!({ "k_max": k_max, "gamma_before": gamma_before }),
            status: Status::BoundExceeded,
            examined: examined_subsets,
        },
        Alteration::Undefined { gamma_before } => Outcome {
            result: json!({ "gamma_before": gamma_before }),
            status: Status::Undefined,
            examined: 0,
        },
    }
}

fn suite_outcome(r: SuiteReport) -> Outcome {
    let failed = r.failures().count();
    Outcome {
        result: json!({
            "suite": r.suite,
            "checked": r.items.len(),
            "failed": failed,
            "items": r.items,
        }),
        status: if failed == 0 { Status::Ok } else { Status::Fail },
        examined: r.items.len() as u64,
    }
}

fn inputs_of(cli: &Cli) -> Value {
    match &cli.command {
        Command::Gamma { graph, plain } => json!({ "graph": path_str(graph), "plain": plain }),
        Command::Bondage { graph, max_k } | Command::Reinforce { graph, max_k } => {
            json!({ "graph": path_str(graph), "max_k": max_k })
        }
        Command::Reduce { mode, cnf, out, roles } => json!({
            "mode": ReductionMode::from(*mode),
            "cnf": path_str(cnf),
            "out": path_str(out),
            "roles": roles.as_deref().map(path_str),
        }),
        Command::Verify(v) => json!({
            "suite": v.suite,
            "max_n": v.max_n,
            "vars": v.vars,
            "clauses": v.clauses,
            "samples": v.samples,
            "saturated": v.saturated,
            "seed": v.seed,
        }),
        Command::Sat { cnf } => json!({ "cnf": path_str(cnf) }),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Gamma { .. } => "gamma",
        Command::Bondage { .. } => "bondage",
        Command::Reinforce { .. } => "reinforce",
        Command::Reduce { .. } => "reduce",
        Command::Verify(_) => "verify",
        Command::Sat { .. } => "sat",
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    let cfg = SolverConfig::default().with_max_order(cli.max_order);
    match &cli.command {
        Command::Gamma { graph, plain } => {
            let g = read_graph(graph)?;
            let r = if *plain {
                gamma_plain(&g, &cfg)?
            } else {
                gamma_tilde(&g, &cfg)?
            };
            Ok(Outcome::ok(
                json!({ "value": r.value, "witness": r.witness.to_vec(), "order": g.order(), "size": g.size() }),
                r.examined,
            ))
        }
        Command::Bondage { graph, max_k } => {
            let g = read_graph(graph)?;
            Ok(alteration_outcome(bondage_ocd(&g, *max_k, &cfg)?))
        }
        Command::Reinforce { graph, max_k } => {
            let g = read_graph(graph)?;
            Ok(alteration_outcome(reinforcement_ocd(&g, *max_k, &cfg)?))
        }
        Command::Reduce { mode, cnf, out, roles } => {
            let f = read_cnf(cnf)?;
            let a = build_instance(&f, (*mode).into()).map_err(|e| Failure::Cap(e.to_string()))?;
            write_file(out, |buf| write_edge_list(&a.graph, buf))?;
            if let Some(roles) = roles {
                write_file(roles, |buf| a.write_roles(buf))?;
            }
            Ok(Outcome::ok(
                json!({
                    "order": a.graph.order(),
                    "size": a.graph.size(),
                    "num_vars": a.num_vars,
                    "num_clauses": a.num_clauses,
                }),
                0,
            ))
        }
        Command::Verify(v) => {
            let report = match v.suite {
                Suite::Families => verify::families(v.max_n.unwrap_or(9), &cfg)?,
                Suite::Lemma1 => verify::complete_graph_connectivity(v.max_n.unwrap_or(7))?,
                Suite::Claims3 | Suite::Claims5 => {
                    let reinforcement = v.suite == Suite::Claims3;
                    let plan = InstancePlan {
                        vars: v.vars,
                        clauses: v.clauses,
                        samples: v.samples.unwrap_or(if reinforcement { 25 } else { 10 }),
                        saturated: v.saturated.unwrap_or(if reinforcement { 5 } else { 0 }),
                        seed: v.seed,
                    };
                    if reinforcement {
                        verify::reinforcement_gadgets(&plan, &cfg)?
                    } else {
                        verify::bondage_gadgets(&plan, &cfg)?
                    }
                }
            };
            Ok(suite_outcome(report))
        }
        Command::Sat { cnf } => {
            let f = read_cnf(cnf)?;
            let model = brute_force_sat(&f, cli.max_vars).map_err(|e| Failure::Cap(e.to_string()))?;
            Ok(Outcome::ok(
                json!({
                    "satisfiable": model.is_some(),
                    "model": model,
                    "num_vars": f.num_vars(),
                    "num_clauses": f.num_clauses(),
                }),
                0,
            ))
        }
    }
}

fn thread_count(cli: &Cli) -> Result<Option<usize>, String> {
    if let Some(n) = cli.threads {
        return Ok(Some(n));
    }
    match std::env::var(THREADS_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| format!("{THREADS_ENV}=`{s}` is not a thread count")),
        Err(_) => Ok(None),
    }
}

/// Runs a parsed command line and builds its report.
pub fn execute(cli: &Cli) -> Report {
    let start = Instant::now();
    let outcome = thread_count(cli).map_err(Failure::Input).and_then(|threads| {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = threads {
            if n == 0 {
                return Err(Failure::Input("thread count must be positive".into()));
            }
            builder = builder.num_threads(n);
        }
        let pool = builder.build().map_err(|e| Failure::Input(e.to_string()))?;
        pool.install(|| dispatch(cli))
    });
    let outcome = outcome.unwrap_or_else(|f| {
        let (kind, message) = match f {
            Failure::Input(m) => ("input", m),
            Failure::Cap(m) => ("cap", m),
        };
        Outcome {
            result: json!({ "kind": kind, "error": message }),
            status: Status::Error,
            examined: 0,
        }
    });
    Report {
        command: command_name(&cli.command).into(),
        inputs: inputs_of(cli),
        result: outcome.result,
        stats: Stats {
            examined: outcome.examined,
            wall_ms: start.elapsed().as_millis() as u64,
        },
        status: outcome.status,
    }
}

/// Parses `args`, runs the command and prints the report; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let report = execute(&cli);
    let text = if cli.json {
        report.to_json() + "\n"
    } else {
        report.to_text()
    };
    let _ = out.write_all(text.as_bytes());
    if report.status == Status::Error {
        let _ = writeln!(err, "error: {}", json_str(&report.result["error"]));
    }
    report.exit_code()
}
