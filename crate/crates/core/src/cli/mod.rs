//! Command-line front end.
//!
//! Every subcommand is a plain function over paths and flags so it can be
//! driven from tests; [`run`] only parses arguments and maps failures to exit
//! codes. Reports are `key: value` lines.
//!
//! | exit | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | internal error (a construction failed its own validation) |
//! | 2 | unreadable or invalid input |
//! | 3 | requested class not achievable, or undecided within budget |
//! | 4 | assignment does not satisfy the formula |

mod svg;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::decide::{classify, decide_full, decide_strong, NegativeCertificate, StrongDecision, Verdict, DEFAULT_BUDGET};
use crate::embed::{
    full_embedding, strong_embedding, validate_embedding, weak_embedding, EmbedError, EmbeddingArtifact, Level,
    ValidationReport,
};
use crate::geometry::{parse_rational, Point};
use crate::graph::{bipartite_map, is_support};
use crate::pair::{
    gen_all_pairs_instance, gen_k5_subdivision_instance, gen_random_pair, parse_pair_file, write_pair_file,
    PartitionPair, Side,
};
use crate::planarity::is_planar;
use crate::reduction::{base_grid, brute_force_sat, canonical_support, parse_mrr, reduce, Assignment, ReductionError};

pub use svg::{render_svg, RenderStyle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    NotAchievable(String),
    #[error("{0}")]
    Assignment(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Input(_) => 2,
            CliError::NotAchievable(_) => 3,
            CliError::Assignment(_) => 4,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "simembed", version, about = "Embeddings of two partitions of one universe")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a pair as weakly, strongly and fully embeddable.
    Analyze {
        pair: PathBuf,
        /// Maximum number of planarity tests for the strong decision.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Draw an embedding of the requested class as SVG.
    Embed(EmbedArgs),
    /// Write a generated pair file.
    Gen(GenArgs),
    /// Reduce a planar monotone 3SAT layout to a pair.
    Reduce(ReduceArgs),
}

#[derive(Debug, Clone, clap::Args)]
pub struct EmbedArgs {
    pub pair: PathBuf,
    #[arg(long = "class")]
    pub class: Level,
    /// SVG destination; the validation report goes to `<out>.report.txt`.
    #[arg(long)]
    pub out: PathBuf,
    /// Element positions for a weak embedding, one `x y` pair per line.
    #[arg(long)]
    pub points: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Example {
    AllPairs,
    K5sub,
    Random,
    BaseGrid,
}

#[derive(Debug, Clone, clap::Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub example: Example,
    /// Blocks of partition 0 (all-pairs).
    #[arg(short = 'a', default_value_t = 3)]
    pub a: usize,
    /// Blocks of partition 1 (all-pairs).
    #[arg(short = 'b', default_value_t = 3)]
    pub b: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Elements (random, default 10) or variables (base-grid, default 3).
    #[arg(short = 'n')]
    pub n: Option<usize>,
    /// Largest block size (random).
    #[arg(long, default_value_t = 3)]
    pub max_block: usize,
    /// Clauses (base-grid).
    #[arg(short = 'm', default_value_t = 2)]
    pub m: usize,
    /// Destination; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, clap::Args)]
pub struct ReduceArgs {
    pub mrr: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    /// Bit string such as `0110`, or `auto` to search for one.
    #[arg(long)]
    pub assignment: Option<String>,
    /// Where to write the canonical support; needs `--assignment`.
    #[arg(long)]
    pub support_out: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn load_pair(path: &Path) -> Result<PartitionPair, CliError> {
    parse_pair_file(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Parses one `x y` pair of rationals per line; `#` starts a comment line.
pub fn parse_points(text: &str) -> Result<Vec<Point>, CliError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let parsed = match tokens.as_slice() {
            [x, y] => parse_rational(x).zip(parse_rational(y)),
            _ => None,
        };
        let (x, y) = parsed.ok_or_else(|| CliError::Input(format!("line {}: expected `x y` rationals", i + 1)))?;
        out.push(Point { x, y });
    }
    Ok(out)
}

fn strong_summary(d: &StrongDecision, budget: u64) -> String {
    match (d.verdict, &d.witness, &d.certificate) {
        (Verdict::Yes, Some(w), _) => format!("yes (witness: {}-edge support)", w.graph().edge_count()),
        (Verdict::No, _, Some(c)) => format!("no (certificate: {})", certificate_text(c)),
        _ => format!("unknown (budget of {budget} planarity tests exhausted)"),
    }
}

fn certificate_text(c: &NegativeCertificate) -> String {
    match c {
        NegativeCertificate::NonPlanarSubdivisionCore(core) => {
            format!("non-planar subdivision core {}", core.describe())
        }
        NegativeCertificate::ExhaustedSearch => "exhaustive search found no planar support".to_string(),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Classification report of a pair.
pub fn analyze_report(pair: &PartitionPair, budget: u64) -> String {
    let report = classify(pair, budget);
    let map = bipartite_map(pair);
    let s = &report.strong;
    let mut out = String::new();
    let _ = writeln!(out, "elements: {}", pair.len());
    let _ = writeln!(out, "blocks_p0: {}", pair.partition(Side::P0).len());
    let _ = writeln!(out, "blocks_p1: {}", pair.partition(Side::P1).len());
    let _ = writeln!(out, "bipartite_map_vertices: {}", map.graph.vertex_count());
    let _ = writeln!(out, "bipartite_map_edges: {}", map.graph.edge_count());
    let _ = writeln!(out, "weak: {}", yes_no(report.weak));
    let _ = writeln!(out, "strong: {}", s.verdict);
    if let Some(w) = &s.witness {
        let _ = writeln!(out, "strong_witness_edges: {}", w.graph().edge_count());
    }
    if let Some(c) = &s.certificate {
        let _ = writeln!(out, "strong_certificate: {}", certificate_text(c));
    }
    let _ = writeln!(out, "planarity_tests: {}", s.budget_spent);
    let _ = writeln!(out, "full: {}", yes_no(report.full));
    let _ = writeln!(
        out,
        "summary: weak: {}; strong: {}; full: {}",
        yes_no(report.weak),
        strong_summary(s, budget),
        yes_no(report.full)
    );
    out
}

pub fn cmd_analyze(path: &Path, budget: u64) -> Result<String, CliError> {
    Ok(analyze_report(&load_pair(path)?, budget))
}

/// Builds and validates an artifact of the requested class.
pub fn build_embedding(
    pair: &PartitionPair,
    class: Level,
    points: Option<&[Point]>,
    budget: u64,
) -> Result<(EmbeddingArtifact, ValidationReport), CliError> {
    if points.is_some() && class != Level::Weak {
        return Err(CliError::Input("--points applies to weak embeddings only".into()));
    }
    let built = match class {
        Level::Weak => weak_embedding(pair, points),
        Level::Strong => {
            let d = decide_strong(pair, budget);
            match d.witness {
                Some(w) => strong_embedding(pair, &w),
                None => {
                    return Err(CliError::NotAchievable(format!(
                        "strong embedding not available: strong: {}",
                        strong_summary(&d, budget)
                    )))
                }
            }
        }
        Level::Full => {
            if !decide_full(pair) {
                return Err(CliError::NotAchievable("full embedding impossible: bipartite map non-planar".into()));
            }
            full_embedding(pair)
        }
    };
    let artifact = built.map_err(|e| match e {
        EmbedError::SizeMismatch { .. } | EmbedError::DuplicatePoint(..) | EmbedError::CollinearPoints(..) => {
            CliError::Input(format!("points: {e}"))
        }
        e => CliError::Internal(e.to_string()),
    })?;
    let report = validate_embedding(&artifact, pair, class).map_err(|e| CliError::Internal(e.to_string()))?;
    if !report.passed() {
        return Err(CliError::Internal(format!("{class} embedding failed validation\n{report}")));
    }
    Ok((artifact, report))
}

/// Sidecar path for the validation report of an SVG.
pub fn report_path(svg: &Path) -> PathBuf {
    let mut s = svg.as_os_str().to_owned();
    s.push(".report.txt");
    PathBuf::from(s)
}

pub fn cmd_embed(args: &EmbedArgs) -> Result<String, CliError> {
    let pair = load_pair(&args.pair)?;
    let points = match &args.points {
        Some(p) => Some(parse_points(&read(p)?)?),
        None => None,
    };
    let (artifact, report) = build_embedding(&pair, args.class, points.as_deref(), args.budget)?;
    write(&args.out, &render_svg(&artifact, &RenderStyle::default()))?;
    let mut text = String::new();
    let _ = writeln!(text, "class: {}", args.class);
    let _ = writeln!(text, "elements: {}", artifact.points.len());
    let _ = writeln!(text, "regions: {}", artifact.regions.len());
    let _ = writeln!(
        text,
        "region_vertices: {}",
        artifact.regions.iter().map(|(_, r)| r.len()).sum::<usize>()
    );
    let _ = write!(text, "{report}");
    let sidecar = report_path(&args.out);
    write(&sidecar, &text)?;
    Ok(format!(
        "{} embedding written to {} (report: {})\n",
        args.class,
        args.out.display(),
        sidecar.display()
    ))
}

pub fn generate(args: &GenArgs) -> Result<PartitionPair, CliError> {
    Ok(match args.example {
        Example::AllPairs => {
            if args.a == 0 || args.b == 0 {
                return Err(CliError::Input("all-pairs needs -a >= 1 and -b >= 1".into()));
            }
            gen_all_pairs_instance(args.a, args.b)
        }
        Example::K5sub => gen_k5_subdivision_instance(),
        Example::Random => {
            let n = args.n.unwrap_or(10);
            if n == 0 || args.max_block == 0 {
                return Err(CliError::Input("random needs -n >= 1 and --max-block >= 1".into()));
            }
            gen_random_pair(args.seed, n, args.max_block)
        }
        Example::BaseGrid => base_grid(args.m, args.n.unwrap_or(3))
            .map_err(|e| CliError::Input(e.to_string()))?
            .pair,
    })
}

/// Returns the pair file text; writes it to `--out` when given.
pub fn cmd_gen(args: &GenArgs) -> Result<String, CliError> {
    let text = write_pair_file(&generate(args)?);
    if let Some(out) = &args.out {
        write(out, &text)?;
    }
    Ok(text)
}

pub fn cmd_reduce(args: &ReduceArgs) -> Result<String, CliError> {
    if args.support_out.is_some() && args.assignment.is_none() {
        return Err(CliError::Input("--support-out needs --assignment".into()));
    }
    let input = |e: ReductionError| CliError::Input(format!("{}: {e}", args.mrr.display()));
    let mrr = parse_mrr(&read(&args.mrr)?).map_err(input)?;
    let red = reduce(&mrr).map_err(input)?;
    write(&args.out, &write_pair_file(&red.pair))?;

    let (cols, rows) = red.grid_size();
    let mut out = String::new();
    let _ = writeln!(out, "variables: {}", mrr.n_vars);
    let _ = writeln!(out, "clauses: {}", mrr.clauses.len());
    let _ = writeln!(out, "grid_columns: {cols}");
    let _ = writeln!(out, "grid_rows: {rows}");
    let _ = writeln!(out, "elements: {}", red.pair.len());
    let _ = writeln!(out, "blocks_p0: {}", red.pair.partition(Side::P0).len());
    let _ = writeln!(out, "blocks_p1: {}", red.pair.partition(Side::P1).len());
    let _ = writeln!(out, "fixing_elements: {}", red.fixing_count());
    let _ = writeln!(out, "home_elements: {}", red.home_elements.len());

    let Some(spec) = &args.assignment else {
        return Ok(out);
    };
    let assignment = if spec == "auto" {
        brute_force_sat(&mrr)
            .map_err(|e| CliError::Input(e.to_string()))?
            .ok_or_else(|| CliError::Assignment("formula is unsatisfiable".into()))?
    } else {
        Assignment::parse(spec).ok_or_else(|| CliError::Input(format!("bad assignment {spec:?}: expected 0/1 per variable")))?
    };
    let support = canonical_support(&red, &assignment).map_err(|e| match e {
        ReductionError::AssignmentDoesNotSatisfy(_) | ReductionError::AssignmentLength { .. } => {
            CliError::Assignment(e.to_string())
        }
        e => CliError::Internal(e.to_string()),
    })?;
    let g = support.graph();
    let verified = is_support(g, &red.pair).map(|c| c.is_support()).unwrap_or(false) && is_planar(g);
    if !verified {
        return Err(CliError::Internal("canonical support failed verification".into()));
    }
    if let Some(path) = &args.support_out {
        write(path, &g.to_exchange())?;
    }
    let _ = writeln!(out, "assignment: {assignment}");
    let _ = writeln!(out, "support_edges: {}", g.edge_count());
    let _ = writeln!(out, "planar support verified");
    Ok(out)
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                2
            } else {
                let _ = write!(stdout, "{}", e.render());
                0
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Analyze { pair, budget } => cmd_analyze(pair, *budget),
        Command::Embed(a) => cmd_embed(a),
        Command::Gen(a) => cmd_gen(a).map(|text| if a.out.is_some() { String::new() } else { text }),
        Command::Reduce(a) => cmd_reduce(a),
    };
    match result {
        Ok(text) => {
            let _ = write!(stdout, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
