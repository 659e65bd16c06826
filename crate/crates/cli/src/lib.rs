//! Command-line frontend for the path-ideal Betti engines.
//!
//! Every command is a pure function from parsed arguments to an
//! [`Outcome`]; `main` only prints and exits.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pathbetti::betti::{graded_betti_table_with, BettiError, OracleOptions};
use pathbetti::field::check_prime;
use pathbetti::formula::{formula_betti_table, omega_homology_dims_formula, supported, Coverage, FormulaError};
use pathbetti::graph::{standard_graph, Graph, GraphKind};
use pathbetti::homology::{reduced_homology_dims, HomologyError};
use pathbetti::path_ideal::path_ideal;
use pathbetti::simplicial::{omega_complex, ComplexError};
use pathbetti::{BettiTable, DEFAULT_PRIME};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "pathbetti", version, about = "Betti numbers of path ideals of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Betti table of S/I_t(G).
    Betti(BettiArgs),
    /// Compare the homology oracle against the closed-form formulas.
    Compare(CompareArgs),
    /// Reduced homology of the sliding-window complex on n vertices.
    Omega(OmegaArgs),
    /// List the generators of I_t(G).
    Paths(PathsArgs),
    /// Reduced homology of the strict Taylor subcomplex at a multidegree.
    Homology(HomologyArgs),
}

#[derive(Debug, Args)]
#[group(id = "graph", required = true, multiple = false)]
pub struct GraphSource {
    /// Line with N vertices.
    #[arg(long, value_name = "N", group = "graph")]
    pub line: Option<usize>,
    /// Cycle with N edges.
    #[arg(long, value_name = "N", group = "graph")]
    pub cycle: Option<usize>,
    /// Star with N edges, centre labelled 1.
    #[arg(long, value_name = "N", group = "graph")]
    pub star: Option<usize>,
    /// Graph JSON file: {"n": .., "edges": [[u, v], ..]}.
    #[arg(long, value_name = "FILE", group = "graph")]
    pub edges: Option<PathBuf>,
}

impl GraphSource {
    fn family(&self) -> Option<(GraphKind, usize)> {
        self.line
            .map(|n| (GraphKind::Line, n))
            .or(self.cycle.map(|n| (GraphKind::Cycle, n)))
            .or(self.star.map(|n| (GraphKind::Star, n)))
    }

    fn load(&self) -> Result<Graph, Failure> {
        match (&self.edges, self.family()) {
            (Some(path), _) => Graph::from_json_file(path).map_err(Failure::usage),
            (None, Some((kind, n))) => standard_graph(kind, n).map_err(Failure::usage),
            (None, None) => Err(Failure::usage("no graph given")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Formula,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

fn parse_prime(s: &str) -> Result<u32, String> {
    let p: u64 = s.parse().map_err(|e| format!("{e}"))?;
    check_prime(p).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct BettiArgs {
    #[command(flatten)]
    pub graph: GraphSource,
    /// Number of vertices on each path.
    #[arg(long)]
    pub t: usize,
    #[arg(long, value_enum, default_value_t = Method::Oracle)]
    pub method: Method,
    #[arg(long, default_value_t = DEFAULT_PRIME, value_parser = parse_prime)]
    pub prime: u32,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Cache oracle results across multidegrees with equal induced subgraphs.
    #[arg(long)]
    pub memo: bool,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub graph: GraphSource,
    #[arg(long)]
    pub t: usize,
    #[arg(long, default_value_t = DEFAULT_PRIME, value_parser = parse_prime)]
    pub prime: u32,
    #[arg(long)]
    pub memo: bool,
}

#[derive(Debug, Args)]
pub struct OmegaArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub t: usize,
    #[arg(long, default_value_t = DEFAULT_PRIME, value_parser = parse_prime)]
    pub prime: u32,
}

#[derive(Debug, Args)]
pub struct PathsArgs {
    #[command(flatten)]
    pub graph: GraphSource,
    #[arg(long)]
    pub t: usize,
}

#[derive(Debug, Args)]
pub struct HomologyArgs {
    #[command(flatten)]
    pub graph: GraphSource,
    #[arg(long)]
    pub t: usize,
    /// Comma-separated multidegree support; defaults to the lcm of I_t(G).
    #[arg(long, value_delimiter = ',')]
    pub support: Option<Vec<u32>>,
    #[arg(long, default_value_t = DEFAULT_PRIME, value_parser = parse_prime)]
    pub prime: u32,
}

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(e: impl ToString) -> Self {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }
}

impl From<BettiError> for Failure {
    fn from(e: BettiError) -> Self {
        match e {
            BettiError::Homology(HomologyError::Complex(ComplexError::TooManyFaces { cap })) => Failure {
                code: EXIT_RESOURCE,
                message: format!("a Taylor subcomplex exceeds {cap} faces; try --method formula"),
            },
            other => Failure::usage(other),
        }
    }
}

impl From<FormulaError> for Failure {
    fn from(e: FormulaError) -> Self {
        Failure::usage(e)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Betti(a) => cmd_betti(a),
        Command::Compare(a) => cmd_compare(a),
        Command::Omega(a) => cmd_omega(a),
        Command::Paths(a) => cmd_paths(a),
        Command::Homology(a) => cmd_homology(a),
    };
    result.unwrap_or_else(|f| Outcome { code: f.code, stdout: String::new(), stderr: format!("error: {}\n", f.message) })
}

fn formula_table(source: &GraphSource, t: usize) -> Result<(BettiTable, Coverage), Failure> {
    let (kind, n) = source.family().ok_or_else(|| Failure::usage("formula method requires a named family"))?;
    if !supported(kind, t as u64) {
        return Err(Failure::usage(format!("no closed form for the {} family with t = {t}", kind.name())));
    }
    // validates the size range
    standard_graph(kind, n).map_err(Failure::usage)?;
    Ok(formula_betti_table(kind, n as u64, t as u64)?)
}

fn cmd_betti(a: &BettiArgs) -> Result<Outcome, Failure> {
    if a.t == 0 {
        return Err(Failure::usage("--t must be at least 1"));
    }
    let table = match a.method {
        Method::Formula => formula_table(&a.graph, a.t)?.0,
        Method::Oracle => {
            let g = a.graph.load()?;
            graded_betti_table_with(&g, a.t, &OracleOptions { prime: a.prime, memo: a.memo })?
        }
    };
    let out = match a.format {
        Format::Table => render_table(&table, a.t),
        Format::Json => table.to_json() + "\n",
        Format::Csv => table.to_csv(),
    };
    Ok(Outcome::ok(out))
}

fn cmd_compare(a: &CompareArgs) -> Result<Outcome, Failure> {
    if a.t == 0 {
        return Err(Failure::usage("--t must be at least 1"));
    }
    let (formula, coverage) = formula_table(&a.graph, a.t)?;
    let g = a.graph.load()?;
    let oracle = graded_betti_table_with(&g, a.t, &OracleOptions { prime: a.prime, memo: a.memo })?;
    let (oracle, formula) = match coverage {
        Coverage::Full => (oracle, formula),
        Coverage::DegreesBelow(bound) => (oracle.degrees_below(bound), formula.degrees_below(bound)),
    };
    let report = diff_tables(&oracle, &formula);
    let scope = match coverage {
        Coverage::Full => String::new(),
        Coverage::DegreesBelow(bound) => format!("j<{bound}, "),
    };
    if report.is_empty() {
        Ok(Outcome::ok(format!("MATCH ({scope}{} entries)\n", oracle.len())))
    } else {
        let mut out = String::new();
        for (i, j, o, f) in &report {
            writeln!(out, "i={i} j={j}: oracle={o} formula={f}").unwrap();
        }
        writeln!(out, "MISMATCH ({scope}{} entries differ)", report.len()).unwrap();
        Ok(Outcome { code: EXIT_MISMATCH, stdout: out, stderr: String::new() })
    }
}

/// Every `(i, j)` where the tables disagree, with both values.
pub fn diff_tables(oracle: &BettiTable, formula: &BettiTable) -> Vec<(usize, usize, u64, u64)> {
    let keys: std::collections::BTreeSet<_> =
        oracle.entries().keys().chain(formula.entries().keys()).copied().collect();
    keys.into_iter()
        .filter_map(|(i, j)| {
            let (o, f) = (oracle.get(i, j), formula.get(i, j));
            (o != f).then_some((i, j, o, f))
        })
        .collect()
}

fn cmd_omega(a: &OmegaArgs) -> Result<Outcome, Failure> {
    let complex = omega_complex(a.n, a.t).map_err(Failure::usage)?;
    let oracle = reduced_homology_dims(&complex, a.prime)
        .map_err(BettiError::Homology)
        .map_err(Failure::from)?;
    let formula = omega_homology_dims_formula(a.n as u64, a.t as u64)?;
    let degrees: std::collections::BTreeSet<i64> =
        oracle.dims().keys().chain(formula.keys()).copied().collect();
    if degrees.is_empty() {
        return Ok(Outcome::ok("all zero, MATCH\n".into()));
    }
    let mut out = String::new();
    let mut agree = true;
    for p in degrees {
        let (o, f) = (oracle.dim(p), formula.get(&p).copied().unwrap_or(0));
        agree &= o == f;
        let verdict = if o == f { "MATCH" } else { "MISMATCH" };
        writeln!(out, "p={p}: {o} (oracle) / {f} (formula) {verdict}").unwrap();
    }
    let code = if agree { EXIT_OK } else { EXIT_MISMATCH };
    Ok(Outcome { code, stdout: out, stderr: String::new() })
}

fn cmd_paths(a: &PathsArgs) -> Result<Outcome, Failure> {
    let g = a.graph.load()?;
    let ideal = path_ideal(&g, a.t);
    let mut out = String::new();
    for gen in ideal.generators() {
        writeln!(out, "{gen}").unwrap();
    }
    let count = ideal.generators().len();
    writeln!(out, "{count} generator{}", if count == 1 { "" } else { "s" }).unwrap();
    Ok(Outcome::ok(out))
}

fn cmd_homology(a: &HomologyArgs) -> Result<Outcome, Failure> {
    let g = a.graph.load()?;
    let ideal = path_ideal(&g, a.t);
    let m = match &a.support {
        Some(vs) => {
            if vs.iter().any(|&v| !g.vertices().contains(v)) {
                return Err(Failure::usage("--support names a vertex outside the graph"));
            }
            vs.iter().copied().collect()
        }
        None => ideal.lcm(),
    };
    let sub = ideal.taylor_strict_sub(m).map_err(Failure::usage)?;
    let dims = reduced_homology_dims(&sub, a.prime).map_err(BettiError::Homology)?;
    let mut out = String::new();
    writeln!(out, "strict Taylor subcomplex at m = {m} ({} generators)", ideal.generators().len()).unwrap();
    for (k, gen) in ideal.generators().iter().enumerate() {
        if gen.is_subset(m) {
            writeln!(out, "  g{} = {gen}", k + 1).unwrap();
        }
    }
    writeln!(out, "facets:").unwrap();
    for line in sub.to_string().lines() {
        writeln!(out, "  {line}").unwrap();
    }
    if !ideal.is_lcm_closed(m) {
        writeln!(out, "note: m is not lcm-closed; its Betti numbers vanish").unwrap();
    }
    if dims.is_acyclic() {
        writeln!(out, "reduced homology: all zero").unwrap();
    } else {
        for (p, d) in dims.dims() {
            writeln!(out, "p={p}: {d}").unwrap();
        }
    }
    Ok(Outcome::ok(out))
}

/// Rows indexed by `i`, columns by `j`; zeros shown as `.`.
pub fn render_table(table: &BettiTable, t: usize) -> String {
    let max_i = table.max_i();
    let max_j = table.max_j();
    let width = table.entries().values().map(|b| b.to_string().len()).max().unwrap_or(1).max(max_j.to_string().len());
    let mut out = format!("Betti numbers of S/I_{t}(G)\n");
    write!(out, "{:>4}", "i\\j").unwrap();
    for j in 0..=max_j {
        write!(out, " {:>width$}", j).unwrap();
    }
    out.push('\n');
    for i in 0..=max_i {
        write!(out, "{:>4}", i).unwrap();
        for j in 0..=max_j {
            let b = table.get(i, j);
            if b == 0 {
                write!(out, " {:>width$}", ".").unwrap();
            } else {
                write!(out, " {:>width$}", b).unwrap();
            }
        }
        out.push('\n');
    }
    out
}
