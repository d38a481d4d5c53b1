use std::fs::{self, OpenOptions};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use minorlab_core::{
    check_theorem, graph6, has_family_minor, has_minor, spot_check_theorem2, verify_lemma,
    verify_lemma8, Caps, EnumFilter, Error, Family, Graph, Lemma8Options, LemmaRun,
    MinDegreeEnumeration, NamedGraph,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "minorlab", version, about = "Exhaustive checks of K_t^= minor statements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct RunOpts {
    /// Worker threads; MINORLAB_JOBS takes precedence. Defaults to all cores.
    #[arg(long)]
    jobs: Option<usize>,
    /// Directory receiving reports.jsonl and witnesses/.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run one lemma verifier (1-7, 9-11; 8 is forwarded to `lemma8`).
    Verify {
        #[arg(long)]
        lemma: u32,
        /// Size cap for lemmas 1-7.
        #[arg(long)]
        cap: Option<usize>,
        /// Order for lemma 8.
        #[arg(long, default_value_t = 9)]
        n: usize,
        #[arg(long)]
        long_run: bool,
        /// Continue a chunked run from the checkpoint in --out.
        #[arg(long)]
        resume: bool,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Exceptional graphs of minimum degree 6 without a K7^= u K1 minor.
    Lemma8 {
        #[arg(long)]
        n: usize,
        /// Required for n = 11.
        #[arg(long)]
        long_run: bool,
        #[arg(long)]
        resume: bool,
        /// Stop after this many chunks (leaves a resumable checkpoint).
        #[arg(long, hide = true)]
        stop_after: Option<usize>,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Desk check of the K_t^= dichotomy for t in 5..=6 up to nmax vertices.
    Theorem {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        nmax: usize,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Sampling check of the K9^= dichotomy.
    Spot2 {
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Test a host graph for a minor; prints the model or "none".
    Minor {
        /// graph6 string.
        #[arg(long)]
        host: String,
        /// A graph name (K5, K9=shared, petersen, ...), a family (K9=,
        /// K7=+K1) or a graph6 string.
        #[arg(long)]
        pattern: String,
    },
    /// Stream graphs with the given order and minimum degree as graph6.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        min_degree: usize,
        #[command(flatten)]
        run: RunOpts,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("minorlab: {e}");
            ExitCode::from(2)
        }
    }
}

fn pool(opts: &RunOpts) -> Result<rayon::ThreadPool, Error> {
    let from_env = std::env::var("MINORLAB_JOBS")
        .ok()
        .map(|v| {
            v.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("MINORLAB_JOBS must be a number, got '{v}'")))
        })
        .transpose()?;
    let jobs = from_env.or(opts.jobs).unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Verify { lemma: 8, n, long_run, resume, run, .. } => lemma8(n, long_run, resume, None, &run),
        Command::Verify { lemma, cap, resume, run, .. } => {
            if resume {
                eprintln!("minorlab: --resume only affects chunked runs (lemma 8); running from scratch");
            }
            let caps = match cap {
                Some(c) => Caps::default().with_cap(lemma, c)?,
                None => Caps::default(),
            };
            emit(pool(&run)?.install(|| verify_lemma(lemma, &caps))?, run.out.as_deref())
        }
        Command::Lemma8 { n, long_run, resume, stop_after, run } => lemma8(n, long_run, resume, stop_after, &run),
        Command::Theorem { t, nmax, run } => {
            emit(pool(&run)?.install(|| check_theorem(t, nmax))?, run.out.as_deref())
        }
        Command::Spot2 { samples, seed, run } => {
            emit(pool(&run)?.install(|| spot_check_theorem2(samples, seed))?, run.out.as_deref())
        }
        Command::Minor { host, pattern } => {
            println!("{}", minor(&host, &pattern)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { n, min_degree, run } => {
            let stdout = io::stdout();
            pool(&run)?.install(|| generate(n, min_degree, BufWriter::new(stdout.lock())))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn generate(n: usize, min_degree: usize, mut w: impl Write) -> Result<(), Error> {
    let e = MinDegreeEnumeration::new(EnumFilter::new(n, min_degree))?;
    for g in e.stream() {
        if writeln!(w, "{}", graph6::encode(&g)).is_err() {
            // closed pipe: the consumer has what it wanted
            return Ok(());
        }
    }
    w.flush().map_err(io_err)
}

fn lemma8(n: usize, long_run: bool, resume: bool, stop_after: Option<usize>, run: &RunOpts) -> Result<ExitCode, Error> {
    let checkpoint = match &run.out {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(io_err)?;
            Some(dir.join(format!("lemma8-n{n}.checkpoint.jsonl")))
        }
        None if resume => {
            return Err(Error::InvalidParameter("--resume needs --out".into()));
        }
        None => None,
    };
    let options = Lemma8Options { checkpoint, resume, long_run, stop_after };
    emit(pool(run)?.install(|| verify_lemma8(n, &options))?, run.out.as_deref())
}

fn io_err(e: io::Error) -> Error {
    Error::Io(e.to_string())
}

/// Prints the report line, persists it and its witnesses under `out`.
fn emit(run: LemmaRun, out: Option<&Path>) -> Result<ExitCode, Error> {
    let line = run.report.to_json_line();
    println!("{line}");
    if let Some(dir) = out {
        let wdir = dir.join("witnesses");
        fs::create_dir_all(&wdir).map_err(io_err)?;
        let mut reports = OpenOptions::new()
            .create(true)
            .append(true)
            .open(dir.join("reports.jsonl"))
            .map_err(io_err)?;
        writeln!(reports, "{line}").map_err(io_err)?;
        let path = wdir.join(format!("{}.jsonl", witness_stem(&run)));
        let mut w = BufWriter::new(fs::File::create(path).map_err(io_err)?);
        for wit in &run.witnesses {
            writeln!(w, "{}", serde_json::to_string(wit).expect("witness serializes")).map_err(io_err)?;
        }
        w.flush().map_err(io_err)?;
    }
    Ok(if run.report.is_verified() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

/// `lemma-<id>` plus the scalar parameters, so runs with different
/// parameters keep separate witness files.
fn witness_stem(run: &LemmaRun) -> String {
    let mut stem = format!("lemma-{}", run.report.lemma);
    for (k, v) in &run.report.parameters {
        if let Some(x) = v.as_u64() {
            stem.push_str(&format!("_{k}-{x}"));
        }
    }
    stem
}

enum Pattern {
    Graph(Box<Graph>),
    Family(Family),
}

fn parse_pattern(s: &str) -> Result<Pattern, Error> {
    let lower = s.trim().to_ascii_lowercase();
    let family_order = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| Error::InvalidParameter(format!("bad family pattern '{s}'")))
    };
    if let Some(rest) = lower.strip_prefix('k') {
        if let Some(t) = rest.strip_suffix("=+k1") {
            return Ok(Pattern::Family(Family::KtEqPlusK1(family_order(t)?)));
        }
        if let Some(t) = rest.strip_suffix('=') {
            return Ok(Pattern::Family(Family::KtEq(family_order(t)?)));
        }
    }
    match s.parse::<NamedGraph>() {
        Ok(name) => Ok(Pattern::Graph(Box::new(name.build()?))),
        Err(_) => graph6::decode(s.trim()).map(|g| Pattern::Graph(Box::new(g))),
    }
}

/// The model as a JSON line, or "none".
fn minor(host: &str, pattern: &str) -> Result<String, Error> {
    let g = graph6::decode(host.trim())?;
    let found = match parse_pattern(pattern)? {
        Pattern::Graph(h) => has_minor(&g, &h).map(|m| (*h, m)),
        Pattern::Family(f) => has_family_minor(&g, f).map(|w| (f.pattern(w.shared), w.model)),
    };
    match found {
        Some((h, model)) => {
            if let Err(e) = model.validate(&g, &h) {
                return Err(Error::InvalidParameter(format!("internal error: witness rejected: {e}")));
            }
            let sets: Vec<Vec<usize>> = model.branch_sets.iter().map(|b| b.to_vec()).collect();
            Ok(json!({ "pattern": graph6::encode(&h), "branch_sets": sets }).to_string())
        }
        None => Ok("none".into()),
    }
}
