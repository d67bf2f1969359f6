//! Command-line front end.
//!
//! Exit codes:
//! - `0` the closure is normal (or the command succeeded)
//! - `10` the closure is not normal
//! - `11` the verdict is undetermined
//! - `1` internal error, or a `verify` check that failed
//! - `2` invalid input
//! - `3` a size bound was exceeded
//!
//! CSV output is semicolon-delimited with a header row; partitions are
//! comma-joined.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cache::VerdictCache;
use crate::classification::{annotate, classify_minimal_degeneration};
use crate::degeneration::{hasse_within, minimal_degenerations_within, DegenPair, PosetGraph};
use crate::error::Error;
use crate::matrix_oracle::{
    algebra_dim, build_nilpotent_model_within, centralizer_dim, restrict_to_image, OrbitDims,
};
use crate::normality::{decide_within, NormalityVerdict, Survey, Verdict};
use crate::partitions::{
    enumerate_eps_diagrams_within, parse_partition, EpsDiagram, FormType, Limits,
};
use crate::reduction::{irreducible_core, ReductionResult};

pub const EXIT_NORMAL: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;
pub const EXIT_NOT_NORMAL: i32 = 10;
pub const EXIT_UNDETERMINED: i32 = 11;

/// Environment variable overriding the enumeration bound.
pub const MAX_SIZE_ENV: &str = "ORBIT_MAX_SIZE";

#[derive(Debug, Parser)]
#[command(
    name = "orbit-normality",
    version,
    about = "Normality of orthogonal and symplectic nilpotent orbit closures"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide normality of one orbit closure.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        partition: String,
    },
    /// Decide every orbit of a given size.
    Survey {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        size: usize,
    },
    /// Hasse diagram of the degeneration order with classified edges.
    Hasse {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        size: usize,
    },
    /// Cancel common rows and columns of a degeneration.
    Reduce {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Classify a minimal degeneration.
    Classify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Orbit dimension of a partition, or codimension of a pair.
    Dim {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with_all = ["top", "bottom"], required_unless_present_all = ["top", "bottom"])]
        partition: Option<String>,
        #[arg(long, requires = "bottom", allow_hyphen_values = true)]
        top: Option<String>,
        #[arg(long, requires = "top", allow_hyphen_values = true)]
        bottom: Option<String>,
    },
    /// Check that restricting to the image of D erases the first column.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        partition: String,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Form type: +1 orthogonal, -1 symplectic.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_eps)]
    pub eps: FormType,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// JSONL verdict cache.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    /// Enumeration bound (overrides ORBIT_MAX_SIZE).
    #[arg(long)]
    pub max_size: Option<usize>,
    /// Cross-check codimensions with the matrix oracle.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long)]
    pub top: String,
    #[arg(long)]
    pub bottom: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
    Dot,
}

fn parse_eps(s: &str) -> Result<FormType, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::InvalidDiagram { .. } | Error::Contract(_) => EXIT_INPUT,
        Error::Capacity { .. } => EXIT_CAPACITY,
        Error::NotMinimalIrreducible { .. } | Error::Internal(_) | Error::Io(_) | Error::Json(_) => {
            EXIT_INTERNAL
        }
    }
}

pub fn verdict_exit_code(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::Normal => EXIT_NORMAL,
        Verdict::NotNormal => EXIT_NOT_NORMAL,
        Verdict::Undetermined => EXIT_UNDETERMINED,
    }
}

/// Parses arguments and runs; `env_max_size` stands in for `ORBIT_MAX_SIZE`.
pub fn run<I, T>(args: I, env_max_size: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_NORMAL };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(code, text)
            };
        }
    };
    let mut warnings = Vec::new();
    match execute(&cli.command, env_max_size, &mut warnings) {
        Ok(mut outcome) => {
            outcome.stderr = join_lines(&warnings) + &outcome.stderr;
            outcome
        }
        Err(e) => Outcome {
            code: exit_code_for(&e),
            stdout: String::new(),
            stderr: join_lines(&warnings) + &format!("error: {e}\n"),
        },
    }
}

fn join_lines(lines: &[String]) -> String {
    lines.iter().map(|l| format!("warning: {l}\n")).collect()
}

fn limits_for(common: &Common, env_max_size: Option<&str>, warnings: &mut Vec<String>) -> Limits {
    if let Some(max) = common.max_size {
        return Limits::with_max_size(max);
    }
    match env_max_size.map(str::trim) {
        Some(text) => match text.parse() {
            Ok(max) => Limits::with_max_size(max),
            Err(_) => {
                warnings.push(format!("ignoring {MAX_SIZE_ENV}={text:?}: not a size"));
                Limits::default()
            }
        },
        None => Limits::default(),
    }
}

fn diagram(text: &str, eps: FormType) -> Result<EpsDiagram, Error> {
    EpsDiagram::new(parse_partition(text)?, eps)
}

fn pair_from(args: &PairArgs, eps: FormType) -> Result<DegenPair, Error> {
    DegenPair::new(eps, parse_partition(&args.bottom)?, parse_partition(&args.top)?)
}

fn unsupported(format: Format, command: &str) -> Error {
    Error::Parse {
        token: format!("{format:?}").to_lowercase(),
        reason: format!("format not available for {command}"),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Error> {
    Ok(serde_json::to_string(value)? + "\n")
}

fn execute(command: &Command, env_max_size: Option<&str>, warnings: &mut Vec<String>) -> Result<Outcome, Error> {
    match command {
        Command::Check { common, partition } => {
            let limits = limits_for(common, env_max_size, warnings);
            let eta = diagram(partition, common.eps)?;
            let mut verdicts = verdicts_with_cache(vec![eta], common, &limits, warnings)?;
            let verdict = verdicts.remove(0);
            let code = verdict_exit_code(verdict.verdict);
            let out = match common.format.unwrap_or(Format::Text) {
                Format::Json => to_json(&verdict)?,
                Format::Text => verdict_text(&verdict),
                Format::Csv => survey_csv(std::slice::from_ref(&verdict)),
                Format::Dot => return Err(unsupported(Format::Dot, "check")),
            };
            Ok(Outcome::ok(code, out))
        }
        Command::Survey { common, size } => {
            let limits = limits_for(common, env_max_size, warnings);
            let diagrams = enumerate_eps_diagrams_within(*size, common.eps, &limits)?;
            let verdicts = verdicts_with_cache(diagrams, common, &limits, warnings)?;
            let survey = Survey::from_verdicts(common.eps, *size, verdicts);
            let out = match common.format.unwrap_or(Format::Text) {
                Format::Json => to_json(&survey)?,
                Format::Csv => survey_csv(&survey.verdicts),
                Format::Text => survey_text(&survey),
                Format::Dot => return Err(unsupported(Format::Dot, "survey")),
            };
            Ok(Outcome::ok(EXIT_NORMAL, out))
        }
        Command::Hasse { common, size } => {
            let limits = limits_for(common, env_max_size, warnings);
            let mut graph = hasse_within(*size, common.eps, &limits)?;
            annotate(&mut graph)?;
            if common.oracle {
                check_edges_with_oracle(&graph, &limits, warnings)?;
            }
            let out = match common.format.unwrap_or(Format::Dot) {
                Format::Dot => hasse_dot(&graph),
                Format::Json => to_json(&graph)?,
                Format::Text => hasse_text(&graph),
                Format::Csv => hasse_csv(&graph),
            };
            Ok(Outcome::ok(EXIT_NORMAL, out))
        }
        Command::Reduce { common, pair } => {
            let pair = pair_from(pair, common.eps)?;
            let reduction = irreducible_core(&pair)?;
            let out = match common.format.unwrap_or(Format::Text) {
                Format::Json => to_json(&reduction)?,
                Format::Text => reduction_text(&pair, &reduction),
                other => return Err(unsupported(other, "reduce")),
            };
            Ok(Outcome::ok(EXIT_NORMAL, out))
        }
        Command::Classify { common, pair } => {
            let limits = limits_for(common, env_max_size, warnings);
            let pair = pair_from(pair, common.eps)?;
            let eta = EpsDiagram::new(pair.top().clone(), pair.eps())?;
            if !minimal_degenerations_within(&eta, &limits)?.contains(&pair) {
                return Err(Error::contract(format!(
                    "[{}] is not a minimal degeneration of [{}]",
                    pair.bottom(),
                    pair.top()
                )));
            }
            let classified = classify_minimal_degeneration(&pair)?;
            let oracle = if common.oracle {
                Some(OrbitDims::new(limits).codim(&pair)?)
            } else {
                None
            };
            let out = match common.format.unwrap_or(Format::Text) {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Report<'a> {
                        pair: &'a DegenPair,
                        reduction: &'a ReductionResult,
                        #[serde(rename = "type")]
                        degen_type: crate::classification::DegenType,
                        algebra: String,
                        #[serde(skip_serializing_if = "Option::is_none")]
                        oracle_codim: Option<usize>,
                    }
                    to_json(&Report {
                        pair: &pair,
                        reduction: &classified.reduction,
                        degen_type: classified.degen_type,
                        algebra: classified.degen_type.algebra_label(),
                        oracle_codim: oracle,
                    })?
                }
                Format::Text => {
                    let mut s = reduction_text(&pair, &classified.reduction);
                    let t = classified.degen_type;
                    let _ = writeln!(s, "type {t} in {}, codim {}", t.algebra_label(), t.codim());
                    if t.codim_disagrees_with_table() {
                        let _ = writeln!(s, "table prints codim {}", t.table_codim());
                    }
                    if let Some(c) = oracle {
                        let _ = writeln!(s, "oracle codim {c}");
                    }
                    s
                }
                other => return Err(unsupported(other, "classify")),
            };
            Ok(Outcome::ok(EXIT_NORMAL, out))
        }
        Command::Dim {
            common,
            partition,
            top,
            bottom,
        } => {
            let limits = limits_for(common, env_max_size, warnings);
            let format = common.format.unwrap_or(Format::Text);
            if let Some(partition) = partition {
                let eta = diagram(partition, common.eps)?;
                let model = build_nilpotent_model_within(eta.partition(), eta.eps(), &limits)?;
                let algebra = algebra_dim(model.dim, eta.eps())?;
                let centralizer = centralizer_dim(&model);
                let orbit = algebra - centralizer;
                let out = match format {
                    Format::Json => to_json(&serde_json::json!({
                        "eps": eta.eps(),
                        "partition": eta.partition(),
                        "algebra_dim": algebra,
                        "centralizer_dim": centralizer,
                        "orbit_dim": orbit,
                    }))?,
                    Format::Text => format!(
                        "[{}] ({:+}): orbit dim {orbit}, centralizer dim {centralizer}, algebra dim {algebra}\n",
                        eta.partition(),
                        eta.eps().sign()
                    ),
                    other => return Err(unsupported(other, "dim")),
                };
                return Ok(Outcome::ok(EXIT_NORMAL, out));
            }
            let args = PairArgs {
                top: top.clone().unwrap_or_default(),
                bottom: bottom.clone().unwrap_or_default(),
            };
            let pair = pair_from(&args, common.eps)?;
            let codim = OrbitDims::new(limits).codim(&pair)?;
            let out = match format {
                Format::Json => to_json(&serde_json::json!({
                    "eps": pair.eps(),
                    "top": pair.top(),
                    "bottom": pair.bottom(),
                    "codim": codim,
                }))?,
                Format::Text => format!("[{}] < [{}]: codim {codim}\n", pair.bottom(), pair.top()),
                other => return Err(unsupported(other, "dim")),
            };
            Ok(Outcome::ok(EXIT_NORMAL, out))
        }
        Command::Verify { common, partition } => {
            let limits = limits_for(common, env_max_size, warnings);
            let eta = diagram(partition, common.eps)?;
            let model = build_nilpotent_model_within(eta.partition(), eta.eps(), &limits)?;
            let restricted = restrict_to_image(&model)?;
            restricted.check_invariants().map_err(|e| Error::Internal(e.to_string()))?;
            let got = restricted.jordan_type()?;
            let expected = eta.partition().erase_first_column();
            let pass = got == expected && restricted.eps == eta.eps().flip();
            let out = match common.format.unwrap_or(Format::Text) {
                Format::Json => to_json(&serde_json::json!({
                    "eps": eta.eps(),
                    "partition": eta.partition(),
                    "restricted_eps": restricted.eps,
                    "restricted_type": got,
                    "expected": expected,
                    "pass": pass,
                }))?,
                Format::Text => format!(
                    "restriction type [{got}], expected [{expected}]: {}\n",
                    if pass { "PASS" } else { "FAIL" }
                ),
                other => return Err(unsupported(other, "verify")),
            };
            Ok(Outcome::ok(if pass { EXIT_NORMAL } else { EXIT_INTERNAL }, out))
        }
    }
}

/// Decides each diagram, reading and extending the cache when one is given.
fn verdicts_with_cache(
    diagrams: Vec<EpsDiagram>,
    common: &Common,
    limits: &Limits,
    warnings: &mut Vec<String>,
) -> Result<Vec<NormalityVerdict>, Error> {
    let mut cache = match &common.cache {
        Some(path) => {
            let cache = VerdictCache::open(path)?;
            warnings.extend(cache.warnings().iter().cloned());
            Some(cache)
        }
        None => None,
    };
    let lookup = |eta: &EpsDiagram| cache.as_ref().and_then(|c| c.get(eta)).cloned();
    let cached: Vec<Option<NormalityVerdict>> = diagrams.iter().map(lookup).collect();

    use rayon::prelude::*;
    let mut verdicts = diagrams
        .par_iter()
        .zip(cached)
        .map(|(eta, hit)| match hit {
            Some(v) => Ok(v),
            None => decide_within(eta, limits),
        })
        .collect::<Result<Vec<_>, Error>>()?;

    if let Some(cache) = cache.as_mut() {
        cache.insert_all(verdicts.iter())?;
    }
    if common.oracle {
        let mut dims = OrbitDims::new(*limits);
        for v in &mut verdicts {
            if v.eta.size() > limits.oracle {
                warnings.push(format!(
                    "[{}] exceeds the oracle bound {}; codimensions not cross-checked",
                    v.eta.partition(),
                    limits.oracle
                ));
                continue;
            }
            v.attach_oracle_codims(&mut dims)?;
        }
    }
    Ok(verdicts)
}

fn check_edges_with_oracle(graph: &PosetGraph, limits: &Limits, warnings: &mut Vec<String>) -> Result<(), Error> {
    if graph.n > limits.oracle {
        warnings.push(format!("size {} exceeds the oracle bound {}", graph.n, limits.oracle));
        return Ok(());
    }
    let mut dims = OrbitDims::new(*limits);
    for edge in &graph.edges {
        let pair = DegenPair::new(graph.eps, edge.bottom.clone(), edge.top.clone())?;
        let codim = dims.codim(&pair)?;
        let claimed = edge.class.map(|t| t.codim());
        if claimed != Some(codim) {
            return Err(Error::Internal(format!(
                "edge [{}] -> [{}]: oracle codim {codim}, classified {claimed:?}",
                edge.top, edge.bottom
            )));
        }
    }
    Ok(())
}

fn families_joined(v: &NormalityVerdict) -> String {
    v.witnesses
        .iter()
        .map(|w| w.family().letter())
        .collect::<Vec<_>>()
        .join(",")
}

/// `partition;verdict;families`, one row per diagram.
pub fn survey_csv(verdicts: &[NormalityVerdict]) -> String {
    let mut out = String::from("partition;verdict;families\n");
    for v in verdicts {
        let _ = writeln!(out, "{};{};{}", v.eta.partition(), v.verdict, families_joined(v));
    }
    out
}

fn verdict_text(v: &NormalityVerdict) -> String {
    let mut out = format!("{}: {}\n", v.eta, v.verdict);
    for w in &v.witnesses {
        let core = &w.reduction.core;
        let _ = write!(
            out,
            "  [{}]  core [{}] < [{}] ({:+})  r={} s={}  type {}  codim {}",
            w.sigma,
            core.bottom(),
            core.top(),
            core.eps().sign(),
            w.reduction.r,
            w.reduction.s,
            w.degen_type,
            w.codim()
        );
        if let Some(c) = w.oracle_codim {
            let _ = write!(out, "  oracle {c}");
        }
        out.push('\n');
    }
    out
}

fn survey_text(s: &Survey) -> String {
    let mut out = String::new();
    for v in &s.verdicts {
        let _ = writeln!(out, "[{}]  {}  {}", v.eta.partition(), v.verdict, families_joined(v));
    }
    let _ = writeln!(
        out,
        "{} diagrams: {} normal, {} not normal, {} undetermined",
        s.verdicts.len(),
        s.summary.normal,
        s.summary.not_normal,
        s.summary.undetermined
    );
    out
}

fn reduction_text(pair: &DegenPair, r: &ReductionResult) -> String {
    let core = &r.core;
    let rows: Vec<String> = r.erased_rows.iter().map(ToString::to_string).collect();
    let cols: Vec<String> = r.erased_columns.iter().map(ToString::to_string).collect();
    format!(
        "[{}] < [{}] ({:+})\ncore [{}] < [{}] eps'={:+}\nr={} rows [{}]\ns={} columns [{}]\n",
        pair.bottom(),
        pair.top(),
        pair.eps().sign(),
        core.bottom(),
        core.top(),
        core.eps().sign(),
        r.r,
        rows.join(","),
        r.s,
        cols.join(",")
    )
}

fn edge_label(class: Option<crate::classification::DegenType>) -> String {
    match class {
        Some(t) => format!("{},{}", t.family(), t.codim()),
        None => String::new(),
    }
}

/// DOT digraph; nodes in enumeration order, edges grouped by top node.
pub fn hasse_dot(graph: &PosetGraph) -> String {
    let mut out = String::from("digraph hasse {\n");
    for (i, node) in graph.nodes.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{node}\"];");
    }
    for edge in &graph.edges {
        let top = graph.node_index(&edge.top).expect("edge endpoints are nodes");
        let bottom = graph.node_index(&edge.bottom).expect("edge endpoints are nodes");
        let _ = writeln!(out, "  n{top} -> n{bottom} [label=\"{}\"];", edge_label(edge.class));
    }
    out.push_str("}\n");
    out
}

fn hasse_text(graph: &PosetGraph) -> String {
    let mut out = format!(
        "{} nodes, {} edges ({:+}, n={})\n",
        graph.nodes.len(),
        graph.edges.len(),
        graph.eps.sign(),
        graph.n
    );
    for edge in &graph.edges {
        let _ = writeln!(out, "[{}] -> [{}]  {}", edge.top, edge.bottom, edge_label(edge.class));
    }
    out
}

fn hasse_csv(graph: &PosetGraph) -> String {
    let mut out = String::from("top;bottom;family;codim\n");
    for edge in &graph.edges {
        let (family, codim) = match edge.class {
            Some(t) => (t.family().letter().to_string(), t.codim().to_string()),
            None => (String::new(), String::new()),
        };
        let _ = writeln!(out, "{};{};{family};{codim}", edge.top, edge.bottom);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let mut full = vec!["orbit-normality"];
        full.extend_from_slice(args);
        run(full, None)
    }

    #[test]
    fn check_exit_codes() {
        let out = run_args(&["check", "--eps", "+1", "--partition", "7,2,2"]);
        assert_eq!(out.code, EXIT_NOT_NORMAL, "{}", out.stderr);
        assert!(out.stdout.contains("NotNormal"));

        assert_eq!(run_args(&["check", "--eps", "-1", "--partition", "6,1,1"]).code, EXIT_NORMAL);
        assert_eq!(
            run_args(&["check", "--eps", "-1", "--partition", "4,4,3,3"]).code,
            EXIT_UNDETERMINED
        );

        let out = run_args(&["check", "--eps", "-1", "--partition", "3,1"]);
        assert_eq!(out.code, EXIT_INPUT);
        assert!(out.stderr.contains("odd part 3 has odd multiplicity"), "{}", out.stderr);
    }

    #[test]
    fn bad_arguments_are_input_errors() {
        assert_eq!(run_args(&["check", "--eps", "2", "--partition", "1"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["check", "--eps", "-1", "--partition", "6,0"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["frobnicate"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["--help"]).code, EXIT_NORMAL);
    }

    #[test]
    fn capacity_errors() {
        assert_eq!(run_args(&["survey", "--eps", "-1", "--size", "41"]).code, EXIT_CAPACITY);
        assert_eq!(
            run_args(&["survey", "--eps", "-1", "--size", "8", "--max-size", "6"]).code,
            EXIT_CAPACITY
        );
        let out = run(["orbit-normality", "survey", "--eps", "-1", "--size", "8"], Some("6"));
        assert_eq!(out.code, EXIT_CAPACITY);
        assert_eq!(run_args(&["dim", "--eps", "+1", "--partition", "25"]).code, EXIT_CAPACITY);
    }

    #[test]
    fn survey_csv_rows() {
        let out = run_args(&["survey", "--eps", "-1", "--size", "8", "--format", "csv"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.starts_with("partition;verdict;families\n"));
        assert!(out.stdout.lines().any(|l| l == "6,1,1;Normal;c"));

        let out = run_args(&["survey", "--eps", "+1", "--size", "2", "--format", "csv"]);
        assert_eq!(out.stdout, "partition;verdict;families\n1,1;Normal;\n");
    }

    #[test]
    fn hasse_dot_output() {
        let out = run_args(&["hasse", "--eps", "-1", "--size", "2"]);
        assert_eq!(
            out.stdout,
            "digraph hasse {\n  n0 [label=\"2\"];\n  n1 [label=\"1,1\"];\n  n0 -> n1 [label=\"a,2\"];\n}\n"
        );
        let out = run_args(&["hasse", "--eps", "-1", "--size", "0"]);
        assert_eq!(out.stdout, "digraph hasse {\n  n0 [label=\"\"];\n}\n");
    }

    #[test]
    fn reduce_and_verify() {
        let out = run_args(&["reduce", "--eps", "-1", "--top", "6,1,1", "--bottom", "4,2,2"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("core [3,1,1] < [5] eps'=+1"), "{}", out.stdout);
        assert!(out.stdout.contains("s=1"));

        let out = run_args(&["verify", "--eps", "-1", "--partition", "6,1,1"]);
        assert_eq!(out.stdout, "restriction type [5], expected [5]: PASS\n");
        assert_eq!(out.code, 0);

        let out = run_args(&["dim", "--eps", "-1", "--partition", "1,1"]);
        assert!(out.stdout.contains("orbit dim 0"), "{}", out.stdout);
    }

    #[test]
    fn classify_rejects_non_minimal_pairs() {
        let out = run_args(&["classify", "--eps", "-1", "--top", "4", "--bottom", "2,1,1"]);
        assert_eq!(out.code, EXIT_INPUT);
        let out = run_args(&["classify", "--eps", "+1", "--top", "7,2,2", "--bottom", "7,1,1,1,1"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("type e (n=1) in so4, codim 2"), "{}", out.stdout);
    }
}
