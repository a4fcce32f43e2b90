//! Command-line front end: argument definitions and the four subcommands.
//!
//! Exit status: 0 when the command succeeded (and, for `verify`, found no
//! counterexample or violation), 1 when `verify` found one, 2 for usage,
//! parse and range errors.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::enumeration::{
    fixtures_dir, sweep_theorem, verify_charpoly_identities, verify_lemma, GraphSource, LemmaGrid, LemmaId,
    LemmaReport, SweepFilters, SweepReport, MAX_BUILTIN_ORDER, SCHEMA_VERSION,
};
use crate::error::{Error, Result};
use crate::families::{build, parse_family};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};
use crate::matching::{
    has_perfect_matching, is_1_excludable, is_1_excludable_criterion, is_k_extendable, is_k_extendable_chen,
    matching_number, SUBSET_SCAN_CAP,
};
use crate::spectral::spectral_radius;
use crate::theorems::{
    size_threshold_excludable, size_threshold_extendable, spectral_threshold_excludable,
    spectral_threshold_extendable, Threshold, TheoremContext, TheoremId, TheoremVerdict, SPECTRAL_TOLERANCE,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    G6,
    Edgelist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "matchspec", version, about = "Matching extension and exclusion of small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub out: OutputFormat,

    /// Absolute tolerance for spectral comparisons.
    #[arg(long, global = true, default_value_t = SPECTRAL_TOLERANCE)]
    pub tolerance: f64,

    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structural, matching and spectral summary of one graph, with theorem
    /// verdicts.
    Analyze {
        /// File holding the graph (`-` for stdin).
        #[arg(long, conflicts_with_all = ["graph", "family"])]
        input: Option<PathBuf>,
        /// The graph itself, inline.
        #[arg(long, conflicts_with = "family")]
        graph: Option<String>,
        /// A family expression to build and analyze.
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum, default_value_t = InputFormat::G6)]
        format: InputFormat,
        /// Largest k for the extendability rows.
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Build a family expression and print it as graph6.
    Construct {
        #[arg(long)]
        family: String,
        /// Also print the edge list.
        #[arg(long)]
        edges: bool,
    },
    /// Sweep a theorem, check a lemma, or run the polynomial identity suite.
    Verify {
        /// t11, t13, t14, t16, c12 or c15.
        #[arg(long, conflicts_with_all = ["lemma", "charpolys"])]
        theorem: Option<String>,
        /// l2.1 ... l2.11.
        #[arg(long, conflicts_with = "charpolys")]
        lemma: Option<String>,
        #[arg(long)]
        charpolys: bool,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Order of the built-in enumeration (n <= 7; n = 8 uses the fixture).
        #[arg(long)]
        n: Option<usize>,
        /// graph6 file to sweep instead of the built-in enumeration.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Minimum-degree filter; defaults to 2 for the exclusion theorems.
        #[arg(long)]
        min_degree: Option<usize>,
        /// Parameter grid, e.g. `n=6..14,samples=100,seed=1`.
        #[arg(long)]
        grid: Option<String>,
    },
    /// Size and spectral thresholds over a range of orders.
    Thresholds {
        /// Even orders, e.g. `6..12` or `10`.
        #[arg(long, default_value = "6..12")]
        n: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
}

/// Runs a parsed command, writing the report to `w`. Returns `Ok(false)`
/// when a verification found a counterexample or violation.
pub fn run(cli: &Cli, w: &mut dyn Write) -> Result<bool> {
    if cli.jobs == 0 {
        return Err(Error::InvalidParameters("--jobs must be at least 1".into()));
    }
    if cli.tolerance.is_nan() || cli.tolerance <= 0.0 {
        return Err(Error::InvalidParameters("--tolerance must be positive".into()));
    }
    match &cli.command {
        Command::Analyze { input, graph, family, format, k } => {
            let g = load_graph(input.as_ref(), graph.as_deref(), family.as_deref(), *format)?;
            let report = analyze(&g, *k, cli.tolerance)?;
            emit_analyze(&report, cli.out, w)?;
            Ok(true)
        }
        Command::Construct { family, edges } => {
            let spec = parse_family(family)?;
            let g = build(&spec)?;
            let report = ConstructReport {
                kind: "construct",
                schema_version: SCHEMA_VERSION,
                family: spec.to_string(),
                n: g.order(),
                m: g.size(),
                graph6: to_graph6(&g)?,
                edges: edges.then(|| g.edges()),
            };
            match cli.out {
                OutputFormat::Json => json(w, &report)?,
                OutputFormat::Csv => {
                    writeln!(w, "family,n,m,graph6")?;
                    writeln!(w, "\"{}\",{},{},{}", report.family, report.n, report.m, report.graph6)?;
                }
                OutputFormat::Text => {
                    writeln!(w, "{}", report.graph6)?;
                    if *edges {
                        write!(w, "{}", g.to_edge_list())?;
                    }
                }
            }
            Ok(true)
        }
        Command::Verify { theorem, lemma, charpolys, k, n, input, min_degree, grid } => {
            if let Some(t) = theorem {
                let t = TheoremId::parse(t, *k)?;
                let src = match (input, n) {
                    (Some(p), _) => GraphSource::File(p.clone()),
                    (None, Some(n)) if *n <= MAX_BUILTIN_ORDER => GraphSource::BuiltIn(*n),
                    (None, Some(8)) => GraphSource::File(fixtures_dir().join("con8.g6")),
                    (None, Some(n)) => {
                        return Err(Error::InvalidParameters(format!(
                            "no built-in source for n = {n}; pass --input with a graph6 file"
                        )))
                    }
                    (None, None) => return Err(Error::InvalidParameters("verify --theorem needs --n or --input".into())),
                };
                let filters = SweepFilters { min_degree: min_degree.or(t.is_exclusion().then_some(2)) };
                let report = sweep_theorem(&src, t, &filters, cli.jobs, cli.tolerance)?;
                if let (Some(n), GraphSource::File(_)) = (n, &src) {
                    if *n != report.n {
                        return Err(Error::MixedOrder { expected: *n, found: report.n });
                    }
                }
                emit_sweep(&report, cli.out, w)?;
                Ok(report.passed())
            } else if let Some(l) = lemma {
                let id: LemmaId = l.parse()?;
                let g = match grid {
                    Some(text) => LemmaGrid::parse(text)?,
                    None => id.default_grid(),
                };
                let report = verify_lemma(id, &g)?;
                emit_lemma(&report, cli.out, w)?;
                Ok(report.passed())
            } else if *charpolys {
                let g = match grid {
                    Some(text) => LemmaGrid::parse(text)?,
                    None => LemmaGrid::new(4, 14),
                };
                let report = verify_charpoly_identities(&g);
                emit_lemma(&report, cli.out, w)?;
                Ok(report.passed())
            } else {
                Err(Error::InvalidParameters("verify needs --theorem, --lemma or --charpolys".into()))
            }
        }
        Command::Thresholds { n, k } => {
            let rows = thresholds(n, *k)?;
            emit_thresholds(&rows, *k, cli.out, w)?;
            Ok(true)
        }
    }
}

fn load_graph(input: Option<&PathBuf>, inline: Option<&str>, family: Option<&str>, format: InputFormat) -> Result<Graph> {
    if let Some(f) = family {
        return build(&parse_family(f)?);
    }
    let text = match (input, inline) {
        (_, Some(t)) => t.to_string(),
        (Some(p), None) if p.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
        (Some(p), None) => std::fs::read_to_string(p)?,
        (None, None) => return Err(Error::InvalidParameters("analyze needs --input, --graph or --family".into())),
    };
    match format {
        InputFormat::Edgelist => Graph::parse_edge_list(&text),
        InputFormat::G6 => {
            let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
            let first = lines.next().ok_or_else(|| Error::Graph6("no graph in input".into()))?;
            if lines.next().is_some() {
                return Err(Error::InvalidParameters("analyze expects a single graph".into()));
            }
            parse_graph6(first)
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ExtendabilityRow {
    pub k: usize,
    /// `None` when the order rules the property out (odd n or n < 2k+2).
    pub direct: Option<bool>,
    /// `None` when the criterion scan is over its size cap.
    pub criterion: Option<bool>,
    pub agree: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct ExcludabilityRow {
    pub direct: Option<bool>,
    pub criterion: Option<bool>,
    pub agree: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub kind: &'static str,
    pub schema_version: u32,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub connected: bool,
    pub rho: f64,
    pub residual: f64,
    pub matching_number: usize,
    pub perfect_matching: bool,
    pub extendable: Vec<ExtendabilityRow>,
    pub excludable: ExcludabilityRow,
    pub theorems: Vec<TheoremVerdict>,
}

/// Everything `analyze` reports about one graph.
pub fn analyze(g: &Graph, k_max: usize, tolerance: f64) -> Result<AnalyzeReport> {
    if g.order() == 0 {
        return Err(Error::InvalidParameters("graph has no vertices".into()));
    }
    let n = g.order();
    let spec = spectral_radius(g);
    let small = n <= SUBSET_SCAN_CAP;
    let extendable = (1..=k_max)
        .map(|k| {
            if n % 2 == 1 || n < 2 * k + 2 {
                return Ok(ExtendabilityRow { k, direct: None, criterion: None, agree: None });
            }
            let direct = is_k_extendable(g, k).holds;
            let criterion = small.then(|| is_k_extendable_chen(g, k).map(|v| v.holds)).transpose()?;
            Ok(ExtendabilityRow { k, direct: Some(direct), criterion, agree: criterion.map(|c| c == direct) })
        })
        .collect::<Result<Vec<_>>>()?;
    let excludable = if n % 2 == 1 {
        ExcludabilityRow { direct: None, criterion: None, agree: None }
    } else {
        let direct = is_1_excludable(g).holds;
        let criterion = if small && g.is_connected() { Some(is_1_excludable_criterion(g)?.holds) } else { None };
        ExcludabilityRow { direct: Some(direct), criterion, agree: criterion.map(|c| c == direct) }
    };
    let mut candidates: Vec<TheoremId> = (1..=k_max).flat_map(|k| [TheoremId::T11 { k }, TheoremId::T14 { k }]).collect();
    candidates.extend([TheoremId::T13, TheoremId::T16]);
    let theorems = candidates
        .into_iter()
        .filter(|t| t.check_order(n).is_ok())
        .map(|t| TheoremContext::new(t, n, tolerance)?.verdict(g))
        .collect::<Result<Vec<_>>>()?;
    Ok(AnalyzeReport {
        kind: "analyze",
        schema_version: SCHEMA_VERSION,
        graph6: to_graph6(g)?,
        n,
        m: g.size(),
        min_degree: g.min_degree(),
        connected: g.is_connected(),
        rho: spec.rho,
        residual: spec.residual,
        matching_number: matching_number(g),
        perfect_matching: has_perfect_matching(g),
        extendable,
        excludable,
        theorems,
    })
}

#[derive(Debug, Serialize)]
struct ConstructReport {
    kind: &'static str,
    schema_version: u32,
    family: String,
    n: usize,
    m: usize,
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<(usize, usize)>>,
}

#[derive(Debug, Serialize)]
pub struct ThresholdRow {
    pub n: usize,
    pub size_extendable: usize,
    pub spectral_extendable: f64,
    pub size_excludable: Option<usize>,
    pub spectral_excludable: Option<f64>,
}

#[derive(Serialize)]
struct ThresholdReport<'a> {
    kind: &'static str,
    schema_version: u32,
    k: usize,
    rows: &'a [ThresholdRow],
}

fn parse_range(text: &str) -> Result<(usize, usize)> {
    let num = |s: &str| {
        s.trim().parse::<usize>().map_err(|_| Error::InvalidParameters(format!("bad order {s:?} in range {text:?}")))
    };
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(text)?, num(text)?),
    };
    if a > b {
        return Err(Error::InvalidParameters(format!("empty range {text:?}")));
    }
    Ok((a, b))
}

/// Threshold rows for the even orders of `range` with `n >= 2k+2`.
pub fn thresholds(range: &str, k: usize) -> Result<Vec<ThresholdRow>> {
    let (a, b) = parse_range(range)?;
    if b > 64 {
        return Err(Error::SizeCap { n: b, cap: 64 });
    }
    (a..=b)
        .filter(|n| n % 2 == 0 && *n >= 2 * k + 2)
        .map(|n| {
            let excl = n >= 6;
            Ok(ThresholdRow {
                n,
                size_extendable: size_threshold_extendable(n, k)?,
                spectral_extendable: spectral_threshold_extendable(n, k)?,
                size_excludable: excl.then(|| size_threshold_excludable(n)).transpose()?,
                spectral_excludable: excl.then(|| spectral_threshold_excludable(n)).transpose()?,
            })
        })
        .collect::<Result<Vec<_>>>()
        .and_then(|rows| {
            if rows.is_empty() {
                Err(Error::InvalidParameters(format!("no even order >= {} in {range:?}", 2 * k + 2)))
            } else {
                Ok(rows)
            }
        })
}

fn json<T: Serialize>(w: &mut dyn Write, value: &T) -> Result<()> {
    let s = serde_json::to_string_pretty(value).map_err(|e| Error::InvalidParameters(e.to_string()))?;
    writeln!(w, "{s}")?;
    Ok(())
}

fn flag(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "n/a",
    }
}

fn opt6(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.6}")).unwrap_or_default()
}

fn threshold_text(t: &Threshold) -> String {
    match t {
        Threshold::Size(m) => format!("m >= {m}"),
        Threshold::Spectral(r) => format!("rho >= {r:.6}"),
    }
}

fn emit_analyze(r: &AnalyzeReport, out: OutputFormat, w: &mut dyn Write) -> Result<()> {
    match out {
        OutputFormat::Json => json(w, r),
        OutputFormat::Csv => {
            writeln!(w, "graph6,n,m,min_degree,connected,rho,matching_number,perfect_matching,1_extendable,1_excludable")?;
            writeln!(
                w,
                "{},{},{},{},{},{:.6},{},{},{},{}",
                r.graph6,
                r.n,
                r.m,
                r.min_degree,
                r.connected,
                r.rho,
                r.matching_number,
                r.perfect_matching,
                flag(r.extendable.first().and_then(|e| e.direct)),
                flag(r.excludable.direct)
            )?;
            Ok(())
        }
        OutputFormat::Text => {
            writeln!(w, "graph6: {}", r.graph6)?;
            writeln!(w, "n = {}, m = {}, min degree = {}, connected: {}", r.n, r.m, r.min_degree, r.connected)?;
            writeln!(w, "rho = {:.6} (residual {:.1e})", r.rho, r.residual)?;
            writeln!(w, "matching number = {}, perfect matching: {}", r.matching_number, r.perfect_matching)?;
            for e in &r.extendable {
                writeln!(
                    w,
                    "{}-extendable: {} (criterion {}, agree {})",
                    e.k,
                    flag(e.direct),
                    flag(e.criterion),
                    flag(e.agree)
                )?;
            }
            let x = &r.excludable;
            writeln!(w, "1-excludable: {} (criterion {}, agree {})", flag(x.direct), flag(x.criterion), flag(x.agree))?;
            for v in &r.theorems {
                let status = if !v.hypothesis_met {
                    "hypothesis not met".to_string()
                } else if v.conclusion_met {
                    "holds".to_string()
                } else if let Some(id) = v.exception {
                    format!("listed exception {id}")
                } else {
                    "COUNTEREXAMPLE".to_string()
                };
                let gap = match (v.threshold, v.rho) {
                    (Threshold::Spectral(t), Some(rho)) => format!(", rho - threshold = {:.3e}", rho - t),
                    _ => String::new(),
                };
                writeln!(w, "{}: {} [{}{}]", v.theorem, status, threshold_text(&v.threshold), gap)?;
            }
            Ok(())
        }
    }
}

fn emit_sweep(r: &SweepReport, out: OutputFormat, w: &mut dyn Write) -> Result<()> {
    match out {
        OutputFormat::Json => json(w, &Tagged { kind: "sweep", inner: r }),
        OutputFormat::Csv => {
            writeln!(w, "{}", SweepReport::csv_header())?;
            writeln!(w, "{}", r.csv_row())?;
            Ok(())
        }
        OutputFormat::Text => {
            writeln!(w, "{} at n = {} over {} [{}]", r.theorem, r.n, r.source, threshold_text(&r.threshold))?;
            writeln!(
                w,
                "scanned {}, filtered {}, hypothesis met {}, exceptions {}, counterexamples {}",
                r.graphs_scanned,
                r.filtered_out,
                r.hypothesis_count,
                r.exceptions_found.len(),
                r.counterexamples.len()
            )?;
            for e in &r.exceptions_found {
                writeln!(
                    w,
                    "  {}  m = {}{}  {}  gap {:.3e}{}",
                    e.graph6,
                    e.size,
                    e.rho.map(|x| format!(", rho = {x:.6}")).unwrap_or_default(),
                    e.family.as_deref().unwrap_or("UNLISTED"),
                    e.threshold_gap,
                    if e.witness_rechecked { "" } else { "  (witness did not recheck)" }
                )?;
            }
            if !r.listed_not_found.is_empty() {
                writeln!(w, "listed but not found: {}", r.listed_not_found.join(", "))?;
            }
            writeln!(w, "wall time {:.3} s", r.wall_time.as_secs_f64())?;
            writeln!(w, "{}", if r.passed() { "PASS" } else { "FAIL" })?;
            Ok(())
        }
    }
}

fn emit_lemma(r: &LemmaReport, out: OutputFormat, w: &mut dyn Write) -> Result<()> {
    match out {
        OutputFormat::Json => json(w, &Tagged { kind: "lemma", inner: r }),
        OutputFormat::Csv => {
            writeln!(w, "{}", LemmaReport::csv_header())?;
            writeln!(w, "{}", r.csv_row())?;
            Ok(())
        }
        OutputFormat::Text => {
            writeln!(w, "{} over {}: {} instances, {} violations", r.lemma, r.grid, r.instances, r.violations.len())?;
            writeln!(w, "max equality gap {:.3e}", r.max_equality_gap)?;
            if let Some(m) = r.min_strict_margin {
                writeln!(w, "min strict margin {m:.6}")?;
            }
            for v in &r.violations {
                writeln!(w, "  {v}")?;
            }
            writeln!(w, "{}", if r.passed() { "PASS" } else { "FAIL" })?;
            Ok(())
        }
    }
}

fn emit_thresholds(rows: &[ThresholdRow], k: usize, out: OutputFormat, w: &mut dyn Write) -> Result<()> {
    match out {
        OutputFormat::Json => json(w, &ThresholdReport { kind: "thresholds", schema_version: SCHEMA_VERSION, k, rows }),
        OutputFormat::Csv | OutputFormat::Text => {
            let sep = if out == OutputFormat::Csv { "," } else { "\t" };
            writeln!(w, "{}", ["n", "size_extendable", "spectral_extendable", "size_excludable", "spectral_excludable"].join(sep))?;
            for r in rows {
                writeln!(
                    w,
                    "{}",
                    [
                        r.n.to_string(),
                        r.size_extendable.to_string(),
                        format!("{:.6}", r.spectral_extendable),
                        r.size_excludable.map(|m| m.to_string()).unwrap_or_default(),
                        opt6(r.spectral_excludable),
                    ]
                    .join(sep)
                )?;
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct Tagged<'a, T: Serialize> {
    kind: &'static str,
    #[serde(flatten)]
    inner: &'a T,
}
