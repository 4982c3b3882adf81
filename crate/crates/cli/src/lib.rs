//! Argument handling for the `prefrev` binary.
//!
//! Exit codes: 0 success / solved / PASS, 1 usage or parse error, 2
//! verification failed or instance proven unreachable, 3 budget exhausted.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use prefrev::analysis::{self, Policy, Verdict};
use prefrev::io::{self, Format, ResultDocument};
use prefrev::solve::{self, SearchFailure};
use prefrev::{Dims, Mode, MultiArray, SearchBudget};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "prefrev",
    version,
    about = "Prefix-reversal rearrangement of 1D/2D/3D arrays"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve an instance file
    Solve(SolveArgs),
    /// Replay a move sequence on an instance
    Verify(VerifyArgs),
    /// Rearrangeability verdict for an instance file or for rank-2 dims
    Decide(DecideArgs),
    /// Orbit size, eccentricity and distance histogram of the standard array
    Orbit(OrbitArgs),
    /// Print a seeded random instance
    Random(RandomArgs),
    /// Compare orbit sizes against the rank-2 rearrangeability theorem
    TheoremCheck(TheoremArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ExactSolver {
    Bfs,
    Bibfs,
    Ida,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Machine,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Machine => Format::Machine,
        }
    }
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Omit wall-clock fields so repeated runs print identical bytes
    #[arg(long)]
    deterministic: bool,

    /// Worker threads for frontier expansion
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args, Debug, Clone)]
struct BudgetArgs {
    #[arg(long)]
    max_nodes: Option<u64>,

    /// Seconds
    #[arg(long)]
    max_time: Option<f64>,

    #[arg(long)]
    max_depth: Option<u32>,
}

impl BudgetArgs {
    fn budget(&self) -> Result<SearchBudget> {
        let mut b = SearchBudget::unlimited();
        b.max_nodes = self.max_nodes;
        b.max_depth = self.max_depth;
        if let Some(secs) = self.max_time {
            b.max_time = Some(
                Duration::try_from_secs_f64(secs)
                    .map_err(|_| anyhow!("invalid --max-time {secs}"))?,
            );
        }
        Ok(b)
    }
}

#[derive(Args, Debug)]
struct SolveArgs {
    file: PathBuf,

    /// Exact solver (default bfs)
    #[arg(long, value_enum, conflicts_with = "greedy")]
    exact: Option<ExactSolver>,

    /// Greedy rank-1 solver; the result is not optimal
    #[arg(long)]
    greedy: bool,

    #[command(flatten)]
    budget: BudgetArgs,

    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    file: PathBuf,

    /// Move sequence, e.g. "H1 V2 H2"
    #[arg(long, allow_hyphen_values = true)]
    moves: String,

    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct DecideArgs {
    /// Instance file (unsigned rank-2 for a parity verdict)
    #[arg(required_unless_present = "dims", conflicts_with = "dims")]
    file: Option<PathBuf>,

    /// Rank-2 dims, e.g. "4 4"
    #[arg(long)]
    dims: Option<String>,

    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct OrbitArgs {
    /// Dims, e.g. "2 2 2"
    #[arg(long)]
    dims: String,

    #[arg(long)]
    mode: String,

    #[command(flatten)]
    budget: BudgetArgs,

    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct RandomArgs {
    #[arg(long)]
    dims: String,

    #[arg(long)]
    mode: String,

    /// Required: there is no time-based default
    #[arg(long)]
    seed: u64,

    /// `uniform` or `walk:K`
    #[arg(long, default_value = "uniform")]
    policy: String,

    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct TheoremArgs {
    #[arg(long)]
    max_cells: usize,

    #[command(flatten)]
    budget: BudgetArgs,

    #[command(flatten)]
    common: Common,
}

/// What the process should print and return.
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

    fn usage(message: String) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome::ok(EXIT_OK, text)
                }
                _ => Outcome::usage(text),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::usage(format!("error: {e:#}\n")),
    }
}

fn parse_dims(text: &str) -> Result<Dims> {
    let extents = text
        .split(|c: char| c.is_whitespace() || c == ',' || c == 'x')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .with_context(|| format!("invalid extent {s:?} in --dims"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Dims::new(&extents)?)
}

fn parse_mode(text: &str) -> Result<Mode> {
    Ok(text.parse::<Mode>()?)
}

fn read_instance(path: &PathBuf) -> Result<MultiArray> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::parse_instance(&text).with_context(|| format!("parsing {}", path.display()))
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(0) => bail!("--threads must be at least 1"),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build()?;
            Ok(pool.install(f))
        }
    }
}

fn render(doc: ResultDocument, common: &Common) -> String {
    let doc = if common.deterministic {
        doc.without_timing()
    } else {
        doc
    };
    io::emit_result(&doc, common.format.into())
}

fn dispatch(command: Command) -> Result<Outcome> {
    match command {
        Command::Solve(args) => solve_cmd(args),
        Command::Verify(args) => verify_cmd(args),
        Command::Decide(args) => decide_cmd(args),
        Command::Orbit(args) => orbit_cmd(args),
        Command::Random(args) => random_cmd(args),
        Command::TheoremCheck(args) => theorem_cmd(args),
    }
}

fn solve_cmd(args: SolveArgs) -> Result<Outcome> {
    let ma = read_instance(&args.file)?;
    let budget = args.budget.budget()?;
    let (name, result) = if args.greedy {
        if ma.dims().rank() != 1 {
            bail!("--greedy needs a rank-1 instance, got dims {}", ma.dims());
        }
        let sol = match ma.mode() {
            Mode::Unsigned => solve::greedy_unsigned_1d(&ma)?,
            Mode::Signed => solve::greedy_signed_1d(&ma)?,
        };
        ("greedy", Ok(sol))
    } else {
        let solver = args.exact.unwrap_or(ExactSolver::Bfs);
        let result = with_threads(args.common.threads, || match solver {
            ExactSolver::Bfs => solve::bfs_solve(&ma, &budget),
            ExactSolver::Bibfs => solve::bidirectional_bfs_solve(&ma, &budget),
            ExactSolver::Ida => solve::ida_solve(&ma, &budget),
        })?;
        let name = match solver {
            ExactSolver::Bfs => "bfs",
            ExactSolver::Bibfs => "bibfs",
            ExactSolver::Ida => "ida",
        };
        (name, result)
    };
    if let Err(SearchFailure::Model(e)) = &result {
        bail!("{e}");
    }
    let code = match &result {
        Ok(_) => EXIT_OK,
        Err(SearchFailure::Unreachable { .. }) => EXIT_FAILED,
        Err(SearchFailure::BudgetExhausted { .. }) => EXIT_BUDGET,
        Err(SearchFailure::Model(_)) => EXIT_USAGE,
    };
    if let Ok(sol) = &result {
        // every printed certificate is replayed first
        let check = solve::verify(&ma, &sol.moves);
        if !(check.valid && check.solved) {
            bail!("internal error: solver output does not replay to the standard array");
        }
    }
    Ok(Outcome::ok(
        code,
        render(io::solve_document(&ma, name, &result), &args.common),
    ))
}

fn verify_cmd(args: VerifyArgs) -> Result<Outcome> {
    let ma = read_instance(&args.file)?;
    let moves = io::parse_moves(&args.moves)?;
    let v = solve::verify(&ma, &moves);
    let code = if v.valid && v.solved {
        EXIT_OK
    } else {
        EXIT_FAILED
    };
    Ok(Outcome::ok(
        code,
        render(io::verify_document(&ma, &moves, &v), &args.common),
    ))
}

fn decide_cmd(args: DecideArgs) -> Result<Outcome> {
    let (dims, mode, mut r) = match (&args.file, &args.dims) {
        (Some(path), None) => {
            let ma = read_instance(path)?;
            (ma.dims(), ma.mode(), analysis::decide_instance(&ma))
        }
        (None, Some(text)) => {
            let dims = parse_dims(text)?;
            (dims, Mode::Unsigned, analysis::decide_dims(dims))
        }
        _ => bail!("decide takes either an instance file or --dims"),
    };
    if r.verdict == Verdict::EvenParityUndetermined
        && !r.reason.contains(analysis::SUFFICIENCY_CAVEAT)
    {
        r.reason = format!("{}; {}", r.reason, analysis::SUFFICIENCY_CAVEAT);
    }
    let code = if r.verdict == Verdict::UnreachableOddParity {
        EXIT_FAILED
    } else {
        EXIT_OK
    };
    let mut out = render(io::decide_document(dims, mode, &r), &args.common);
    if args.common.format == OutputFormat::Text {
        out.push_str(&format!("theorem: {}\n", analysis::THEOREM));
    }
    Ok(Outcome::ok(code, out))
}

fn orbit_cmd(args: OrbitArgs) -> Result<Outcome> {
    let dims = parse_dims(&args.dims)?;
    let mode = parse_mode(&args.mode)?;
    let budget = args.budget.budget()?;
    let report = with_threads(args.common.threads, || {
        analysis::orbit_stats(dims, mode, &budget)
    })??;
    let code = if report.complete {
        EXIT_OK
    } else {
        EXIT_BUDGET
    };
    let mut out = render(io::orbit_document(&report), &args.common);
    if args.common.format == OutputFormat::Text && dims.rank() == 1 && mode == Mode::Unsigned {
        out.push_str(
            "note: by vertex-transitivity the eccentricity equals the pancake network diameter\n",
        );
    }
    Ok(Outcome::ok(code, out))
}

fn random_cmd(args: RandomArgs) -> Result<Outcome> {
    let dims = parse_dims(&args.dims)?;
    let mode = parse_mode(&args.mode)?;
    let policy: Policy = args.policy.parse().map_err(|e: String| anyhow!(e))?;
    let ma = analysis::random_instance(dims, mode, args.seed, policy);
    let out = match args.common.format {
        OutputFormat::Text => io::write_instance(&ma),
        OutputFormat::Machine => render(io::random_document(&ma, args.seed, policy), &args.common),
    };
    Ok(Outcome::ok(EXIT_OK, out))
}

fn theorem_cmd(args: TheoremArgs) -> Result<Outcome> {
    let budget = args.budget.budget()?;
    let report = with_threads(args.common.threads, || {
        analysis::theorem_experiment(args.max_cells, &budget)
    })??;
    let code = if report.all_pass() {
        EXIT_OK
    } else {
        EXIT_FAILED
    };
    Ok(Outcome::ok(
        code,
        render(io::theorem_document(&report), &args.common),
    ))
}
