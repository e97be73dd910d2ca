//! Argument parsing, command dispatch, and output shaping.
//!
//! Every command prints either a fixed plain-text layout or a single-line
//! JSON record ([`crate::output::OutputRecord`]); both are byte-identical
//! across runs for the same arguments. Timing is reported on stderr only.
//!
//! Exit codes: 0 success, 1 usage error, 2 computation error, 3 cross-check
//! mismatch, 4 fetch failure.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use polycat_core::catalan::{super_catalan, tree_count_full};
use polycat_core::lagrange::{
    decompose_super_catalan, reversion_coefficient, reversion_series, type_count,
};
use polycat_core::series::{iterate_to_fixpoint, polynomial_string};
use polycat_core::tree::{dissection_to_tree, tree_to_dissection};
use polycat_core::{
    dissection::enumerate_dissections, DowndegreeSequence, Dissection, Error as CoreError, Nat,
    PartitionType, PlaneTree, SeedPolynomial,
};
use serde_json::{json, Value};

use crate::oeis::{self, FetchSource, OeisError, Verdict};
use crate::output::OutputRecord;
use crate::svg::dissection_svg;

const DEFAULT_BASE_URL: &str = "https://oeis.org";
const DEFAULT_TIMEOUT_SECS: u64 = 10;
const DEFAULT_ENUMERATION_CAP: usize = 12;

/// An error carrying its exit code: usage 1, computation 2, fetch 4.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Computation(String),
    #[error("{0}")]
    Fetch(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Computation(_) => 2,
            CliError::Fetch(_) => 4,
        }
    }
}

/// Core errors raised while computing (as opposed to while reading
/// arguments) are computation errors; argument-parsing call sites map
/// through [`usage`] instead.
impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Computation(e.to_string())
    }
}

impl From<OeisError> for CliError {
    fn from(e: OeisError) -> Self {
        match e {
            OeisError::InvalidId(_) => CliError::Usage(e.to_string()),
            _ => CliError::Fetch(e.to_string()),
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// What a command produced: stdout text plus the exit code (a cross-check
/// mismatch exits 3 without being an error).
struct Outcome {
    stdout: String,
    code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

#[derive(Parser)]
#[command(
    name = "polycat",
    version,
    about = "Exact counts, enumerations, and power series for polygon dissections",
    long_about = "Exact counts, enumerations, and power series for dissections of a convex \
polygon by noncrossing diagonals, and for the plane trees dual to them. All arithmetic is \
arbitrary-precision and all stdout output is deterministic: same arguments, same bytes."
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Revert x = z - g(z): print coefficients a_0..a_{N-1} of z = sum a_n x^{n+1}
    Revert(RevertArgs),
    /// Iterate z <- g(z) + x to its fixpoint (same as revert --method iterate)
    Iterate(IterateArgs),
    /// Exact counts: per type, totals, decompositions, dissections, trees
    #[command(subcommand)]
    Count(CountCommand),
    /// List every dissection of an m-gon built from the allowed piece sizes
    Enumerate(EnumerateArgs),
    /// Convert a dissection to its dual plane tree, or a tree back
    Biject(BijectArgs),
    /// Cross-check locally computed terms against a reference sequence
    Oeis(OeisArgs),
    /// Render one dissection as an SVG document
    Render(RenderArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Closed-form coefficients summed over partition types
    Lagrange,
    /// Substitute z <- g(z) + x until the truncation stabilizes
    Iterate,
    /// Run both and insist they agree
    Both,
}

impl Method {
    fn as_str(self) -> &'static str {
        match self {
            Method::Lagrange => "lagrange",
            Method::Iterate => "iterate",
            Method::Both => "both",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Fixed plain-text layout
    Text,
    /// One JSON record per invocation
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumerateFormat {
    /// One canonical dissection string per line
    Text,
    /// One JSON record listing every dissection
    Json,
    /// One SVG file per dissection, written under --out-dir
    Svg,
}

#[derive(Args)]
struct RevertArgs {
    /// Seed polynomial as degree:count terms, e.g. 2:1,3:1 (bare degree
    /// means count 1; empty string means the zero seed)
    #[arg(long, default_value = "2:1")]
    seed: String,
    /// How many coefficients a_0..a_{N-1} to compute
    #[arg(long, default_value_t = 12)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Method::Lagrange)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct IterateArgs {
    /// Seed polynomial as degree:count terms, e.g. 2:1,3:1
    #[arg(long, default_value = "2:1")]
    seed: String,
    /// How many coefficients a_0..a_{N-1} to compute
    #[arg(long, default_value_t = 12)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum CountCommand {
    /// Dissections of one type, given as a partition like 1^2,3^1
    Type {
        /// Partition in multiplicity notation: j^k terms joined by commas
        /// (bare j means j^1)
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Total dissections of an (n+2)-gon, every piece size allowed
    Super {
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The same total, split into one row per dissection type
    Decompose {
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Dissections of an m-gon using only the given piece sizes
    Dissections {
        /// Number of polygon vertices (at least 2)
        m: usize,
        /// Comma-separated piece sizes, each at least 3 (default: 3..=m)
        #[arg(long)]
        pieces: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Plane trees with the given downdegree census r_0,r_1,...
    Trees {
        /// Comma-separated counts of vertices with 0, 1, 2, ... children
        downdegrees: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct EnumerateArgs {
    /// Number of polygon vertices (at least 2)
    m: usize,
    /// Comma-separated piece sizes, each at least 3 (default: 3..=m)
    #[arg(long)]
    pieces: Option<String>,
    #[arg(long, value_enum, default_value_t = EnumerateFormat::Text)]
    format: EnumerateFormat,
    /// Directory for SVG files (required with --format svg)
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// Refuse to enumerate polygons larger than this; raising it past the
    /// default prints a warning, since counts grow exponentially
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: usize,
}

#[derive(Args)]
struct BijectArgs {
    /// Either a dissection, e.g. m=6;diags=(0,3), or a tree in
    /// parenthesis form, e.g. ((()())())
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct OeisArgs {
    /// Sequence identifier: 'A' followed by six digits, e.g. A000108
    id: String,
    /// Seed polynomial whose reversion coefficients are compared
    #[arg(long, default_value = "2:1")]
    seed: String,
    /// How many local terms a_0..a_{N-1} to compute
    #[arg(long, default_value_t = 15)]
    order: usize,
    /// Index in the reference sequence that local term 0 lines up with
    #[arg(long, default_value_t = 0)]
    offset: usize,
    /// Drop zero terms from the local series before comparing, for
    /// references that omit them
    #[arg(long)]
    nonzero: bool,
    /// Fetch from the network instead of local fixture files
    #[arg(long)]
    online: bool,
    /// Directory with fixture files (default: $POLYCAT_FIXTURE_DIR,
    /// else ./fixtures)
    #[arg(long)]
    fixture_dir: Option<PathBuf>,
    /// Search endpoint base URL (default: $POLYCAT_OEIS_BASE_URL,
    /// else https://oeis.org)
    #[arg(long)]
    base_url: Option<String>,
    /// Network timeout in seconds (default: $POLYCAT_OEIS_TIMEOUT, else 10)
    #[arg(long)]
    timeout: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct RenderArgs {
    /// The dissection to draw, e.g. m=6;diags=(0,3)
    dissection: String,
    /// Write the SVG here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses the process arguments, runs the command, prints the result, and
/// maps it to an exit code.
pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Requested help/version is a success; anything else is usage.
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let result = execute(cli.command);
    eprintln!("elapsed: {:.1?}", start.elapsed());
    match result {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn execute(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Revert(a) => revert("revert", &a.seed, a.order, a.method, a.format),
        Command::Iterate(a) => revert("iterate", &a.seed, a.order, Method::Iterate, a.format),
        Command::Count(c) => count(c),
        Command::Enumerate(a) => enumerate(&a),
        Command::Biject(a) => biject(&a.input, a.format),
        Command::Oeis(a) => oeis_check(&a),
        Command::Render(a) => render(&a),
    }
}

fn parse_seed(text: &str) -> Result<SeedPolynomial, CliError> {
    SeedPolynomial::parse(text).map_err(usage)
}

/// Shapes a finished command's output for the chosen format.
fn finish(
    format: Format,
    text: String,
    record: impl FnOnce() -> OutputRecord,
) -> Result<Outcome, CliError> {
    Ok(Outcome::ok(match format {
        Format::Text => text,
        Format::Json => format!("{}\n", record().to_json_line()),
    }))
}

/// `lambda` in the machine-readable multiplicity form, with the empty
/// partition spelled out for text layouts.
fn lambda_label(lambda: &PartitionType) -> String {
    let s = lambda.to_multiplicity_string();
    if s.is_empty() {
        "(empty)".to_owned()
    } else {
        s
    }
}

fn revert(
    name: &str,
    seed: &str,
    order: usize,
    method: Method,
    format: Format,
) -> Result<Outcome, CliError> {
    let g = parse_seed(seed)?;
    let (series, substitutions) = match method {
        Method::Lagrange => (reversion_series(&g, order), None),
        Method::Iterate => {
            let (z, steps) = iterate_to_fixpoint(&g, order);
            (z, Some(steps))
        }
        Method::Both => {
            let closed = reversion_series(&g, order);
            let (iterated, steps) = iterate_to_fixpoint(&g, order);
            if closed != iterated {
                return Err(CliError::Computation(
                    "the closed-form reversion and the fixpoint iteration disagree".to_owned(),
                ));
            }
            (iterated, Some(steps))
        }
    };
    let coefficients: Vec<String> = series.coeffs()[1..].iter().map(|c| c.to_string()).collect();
    let text = {
        let mut t = String::new();
        t += &format!("seed: {g}\n");
        t += &format!("order: {order}\n");
        t += &format!("method: {}\n", method.as_str());
        if let Some(steps) = substitutions {
            t += &format!("substitutions: {steps}\n");
        }
        if method == Method::Both {
            t += "methods agree\n";
        }
        t += &format!("series: {}\n", polynomial_string(series.coeffs()));
        t += &format!("coefficients: {}\n", coefficients.join(","));
        t
    };
    finish(format, text, || {
        let mut results = serde_json::Map::new();
        results.insert("coefficients".to_owned(), json!(coefficients));
        if method == Method::Both {
            results.insert("methods_agree".to_owned(), json!(true));
        }
        if let Some(steps) = substitutions {
            results.insert("substitutions".to_owned(), json!(steps.to_string()));
        }
        OutputRecord::new(name)
            .param("method", method.as_str())
            .param("order", order.to_string())
            .param("seed", g.to_string())
            .results(Value::Object(results))
    })
}

fn count(command: CountCommand) -> Result<Outcome, CliError> {
    match command {
        CountCommand::Type { lambda, format } => {
            let lambda = PartitionType::parse_multiplicity_string(&lambda).map_err(usage)?;
            let count = type_count(&lambda);
            let text = format!(
                "lambda: {}\nn: {}\nm: {}\ncount: {count}\n",
                lambda_label(&lambda),
                lambda.n(),
                lambda.n() + 2,
            );
            finish(format, text, || {
                OutputRecord::new("count-type")
                    .param("lambda", lambda.to_multiplicity_string())
                    .results(json!({
                        "count": count.to_string(),
                        "n": lambda.n().to_string(),
                    }))
            })
        }
        CountCommand::Super { n, format } => {
            let count = super_catalan(n);
            let text = format!("n: {n}\nm: {}\ncount: {count}\n", n + 2);
            finish(format, text, || {
                OutputRecord::new("count-super")
                    .param("n", n.to_string())
                    .results(json!({ "count": count.to_string() }))
            })
        }
        CountCommand::Decompose { n, format } => {
            let rows = decompose_super_catalan(n);
            let total = super_catalan(n);
            let mut text = format!("n: {n}\n");
            for row in &rows {
                text += &format!("{}: {}\n", lambda_label(&row.lambda), row.count);
            }
            text += &format!("total: {total}\n");
            finish(format, text, || {
                let terms: Vec<Value> = rows
                    .iter()
                    .map(|row| {
                        json!({
                            "count": row.count.to_string(),
                            "lambda": row.lambda.to_multiplicity_string(),
                        })
                    })
                    .collect();
                OutputRecord::new("count-decompose")
                    .param("n", n.to_string())
                    .results(json!({ "terms": terms, "total": total.to_string() }))
            })
        }
        CountCommand::Dissections { m, pieces, format } => {
            check_polygon(m)?;
            let sizes = parse_pieces(pieces.as_deref(), m)?;
            let g = seed_for_pieces(&sizes);
            let count = reversion_coefficient(&g, (m - 2) as u64);
            let label = join_sizes(&sizes);
            let text = format!("m: {m}\npieces: {label}\ncount: {count}\n");
            finish(format, text, || {
                OutputRecord::new("count-dissections")
                    .param("m", m.to_string())
                    .param("pieces", label.clone())
                    .results(json!({ "count": count.to_string() }))
            })
        }
        CountCommand::Trees {
            downdegrees,
            format,
        } => {
            let seq = DowndegreeSequence::parse(&downdegrees).map_err(usage)?;
            let count = tree_count_full(&seq)?;
            let text = format!("downdegrees: {seq}\ncount: {count}\n");
            finish(format, text, || {
                OutputRecord::new("count-trees")
                    .param("downdegrees", seq.to_string())
                    .results(json!({ "count": count.to_string() }))
            })
        }
    }
}

fn check_polygon(m: usize) -> Result<(), CliError> {
    if m < 2 {
        Err(CliError::Usage(format!(
            "a polygon needs at least 2 vertices, got m = {m}"
        )))
    } else {
        Ok(())
    }
}

/// Parses `--pieces 3,4` into a size set; omitted means every size from 3
/// through m.
fn parse_pieces(pieces: Option<&str>, m: usize) -> Result<BTreeSet<usize>, CliError> {
    let Some(text) = pieces else {
        return Ok((3..=m).collect());
    };
    let mut sizes = BTreeSet::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let size: usize = piece.parse().map_err(|_| {
            CliError::Usage(format!("cannot parse piece size {piece:?} as an integer"))
        })?;
        if size < 3 {
            return Err(CliError::Usage(format!(
                "piece size {size} is too small: pieces are polygons with at least 3 sides"
            )));
        }
        sizes.insert(size);
    }
    Ok(sizes)
}

/// The uncolored seed whose degree-(s-1) terms stand for pieces of size s.
fn seed_for_pieces(sizes: &BTreeSet<usize>) -> SeedPolynomial {
    let colors = sizes.iter().map(|&s| (s as u64 - 1, 1)).collect();
    SeedPolynomial::new(colors).expect("piece sizes >= 3 give degrees >= 2")
}

fn join_sizes(sizes: &BTreeSet<usize>) -> String {
    sizes
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn enumerate(args: &EnumerateArgs) -> Result<Outcome, CliError> {
    check_polygon(args.m)?;
    if args.m > args.cap {
        return Err(CliError::Usage(format!(
            "m = {} exceeds the enumeration cap ({}); pass --cap {} to proceed",
            args.m, args.cap, args.m
        )));
    }
    if args.m > DEFAULT_ENUMERATION_CAP {
        eprintln!(
            "warning: enumerating all dissections of a {}-gon; counts grow exponentially with m",
            args.m
        );
    }
    let sizes = parse_pieces(args.pieces.as_deref(), args.m)?;
    let dissections = enumerate_dissections(args.m, &sizes);
    match args.format {
        EnumerateFormat::Text => {
            let mut text = String::new();
            for d in &dissections {
                text += &d.canonical_string();
                text.push('\n');
            }
            Ok(Outcome::ok(text))
        }
        EnumerateFormat::Json => {
            let listed: Vec<String> = dissections.iter().map(|d| d.canonical_string()).collect();
            let record = OutputRecord::new("enumerate")
                .param("m", args.m.to_string())
                .param("pieces", join_sizes(&sizes))
                .results(json!({
                    "dissections": listed,
                    "total": dissections.len().to_string(),
                }));
            Ok(Outcome::ok(format!("{}\n", record.to_json_line())))
        }
        EnumerateFormat::Svg => {
            let out_dir = args.out_dir.as_ref().ok_or_else(|| {
                CliError::Usage("--format svg needs --out-dir to put the files in".to_owned())
            })?;
            std::fs::create_dir_all(out_dir).map_err(|e| {
                CliError::Computation(format!("cannot create {}: {e}", out_dir.display()))
            })?;
            let mut text = String::new();
            for (i, d) in dissections.iter().enumerate() {
                let path = out_dir.join(format!("dissection-{i:06}.svg"));
                std::fs::write(&path, dissection_svg(d)).map_err(|e| {
                    CliError::Computation(format!("cannot write {}: {e}", path.display()))
                })?;
                text += &format!("{}\n", path.display());
            }
            Ok(Outcome::ok(text))
        }
    }
}

fn biject(input: &str, format: Format) -> Result<Outcome, CliError> {
    let input = input.trim();
    let (direction, dissection, tree) = if input.starts_with("m=") {
        let d = Dissection::parse(input).map_err(usage)?;
        let t = dissection_to_tree(&d);
        ("dissection-to-tree", d, t)
    } else if input.starts_with('(') {
        let t = PlaneTree::from_parens(input).map_err(usage)?;
        let d = tree_to_dissection(&t)?;
        ("tree-to-dissection", d, t)
    } else {
        return Err(CliError::Usage(
            "input must be a dissection like m=6;diags=(0,3) or a tree like ((()())())".to_owned(),
        ));
    };
    let census = tree.downdegree_sequence();
    let lambda = dissection.type_of();
    let text = format!(
        "direction: {direction}\ndissection: {}\ntree: {}\ndowndegrees: {census}\ntype: {}\n",
        dissection.canonical_string(),
        tree.to_parens(),
        lambda_label(&lambda),
    );
    finish(format, text, || {
        OutputRecord::new("biject")
            .param("input", input)
            .results(json!({
                "direction": direction,
                "dissection": dissection.canonical_string(),
                "downdegrees": census.to_string(),
                "tree": tree.to_parens(),
                "type": lambda.to_multiplicity_string(),
            }))
    })
}

/// Environment variable fallback for a flag, with a final default.
fn env_or(flag: Option<String>, var: &str, default: &str) -> String {
    flag.or_else(|| std::env::var(var).ok())
        .unwrap_or_else(|| default.to_owned())
}

fn oeis_check(args: &OeisArgs) -> Result<Outcome, CliError> {
    let g = parse_seed(&args.seed)?;
    oeis::validate_id(&args.id)?;

    let mut local: Vec<Nat> = (0..args.order)
        .map(|n| reversion_coefficient(&g, n as u64))
        .collect();
    if args.nonzero {
        local.retain(|term| *term != Nat::from(0u32));
    }

    let source = if args.online {
        let base_url = env_or(args.base_url.clone(), "POLYCAT_OEIS_BASE_URL", DEFAULT_BASE_URL);
        let timeout = args
            .timeout
            .or_else(|| {
                std::env::var("POLYCAT_OEIS_TIMEOUT")
                    .ok()
                    .and_then(|v| v.parse().ok())
            })
            .unwrap_or(DEFAULT_TIMEOUT_SECS);
        FetchSource::Network {
            base_url,
            timeout: Duration::from_secs(timeout),
        }
    } else {
        let dir = args
            .fixture_dir
            .clone()
            .or_else(|| std::env::var_os("POLYCAT_FIXTURE_DIR").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from("fixtures"));
        FetchSource::Fixture { dir }
    };

    let record = oeis::fetch_sequence(&args.id, &source)?;
    let report = oeis::cross_check(&local, &record, args.offset);
    let code = match report.verdict {
        Verdict::Mismatch => 3,
        Verdict::Match | Verdict::InsufficientRemoteTerms => 0,
    };

    let stdout = match args.format {
        Format::Text => {
            let mut t = String::new();
            t += &format!("id: {}\n", record.id);
            t += &format!("source: {}\n", record.source);
            t += &format!("local terms: {}\n", local.len());
            t += &format!("remote terms: {}\n", record.terms.len());
            t += &format!("verdict: {}\n", report.verdict);
            t += &format!("matched prefix: {}\n", report.matched_prefix_length);
            if let Some(mm) = &report.first_mismatch {
                t += &format!(
                    "first mismatch at index {}: local {}, remote {}\n",
                    mm.index, mm.local, mm.remote
                );
            }
            t
        }
        Format::Json => {
            let mut results = serde_json::Map::new();
            if let Some(mm) = &report.first_mismatch {
                results.insert(
                    "first_mismatch".to_owned(),
                    json!({
                        "index": mm.index.to_string(),
                        "local": mm.local.to_string(),
                        "remote": mm.remote.to_string(),
                    }),
                );
            }
            results.insert(
                "matched_prefix_length".to_owned(),
                json!(report.matched_prefix_length.to_string()),
            );
            results.insert("verdict".to_owned(), json!(report.verdict.as_str()));
            let record = OutputRecord::new("oeis")
                .param("id", args.id.clone())
                .param("nonzero", args.nonzero.to_string())
                .param("offset", args.offset.to_string())
                .param("order", args.order.to_string())
                .param("seed", g.to_string())
                .param("source", record.source.to_string())
                .results(Value::Object(results));
            format!("{}\n", record.to_json_line())
        }
    };
    Ok(Outcome { stdout, code })
}

fn render(args: &RenderArgs) -> Result<Outcome, CliError> {
    let d = Dissection::parse(args.dissection.trim()).map_err(usage)?;
    let svg = dissection_svg(&d);
    match &args.out {
        None => Ok(Outcome::ok(svg)),
        Some(path) => {
            std::fs::write(path, svg).map_err(|e| {
                CliError::Computation(format!("cannot write {}: {e}", path.display()))
            })?;
            Ok(Outcome::ok(format!("wrote {}\n", path.display())))
        }
    }
}
