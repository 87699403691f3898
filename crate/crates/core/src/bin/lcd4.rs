use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lcd4::search::{self, Checkpoint, SearchConfig, SearchMode};
use lcd4::{bounds, catalog, io, Error};

/// Quaternary Hermitian LCD codes: verification, search and bounds.
#[derive(Parser)]
#[command(name = "lcd4", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rebuild named codes and check their claimed properties.
    Verify {
        /// Code name, e.g. C15 or E12.
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        name: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
    },
    /// Search for Hermitian LCD codes with systematic generators.
    Search(SearchArgs),
    /// Print what is known about d4(n,k) and dQ(n,k).
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print a named code in the code file format.
    Dump { name: String },
    /// Shorten or puncture a code read from a file (1-based coordinates).
    Transform {
        #[arg(
            long,
            conflicts_with = "puncture",
            required_unless_present = "puncture"
        )]
        shorten: Option<usize>,
        #[arg(long)]
        puncture: Option<usize>,
        file: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    First,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    d: usize,
    #[arg(long, value_enum, default_value = "exhaustive")]
    mode: Mode,
    /// Depth-2 branches searched concurrently; defaults to available cores.
    #[arg(long)]
    jobs: Option<usize>,
    /// Stop after this many nodes. Budgeted runs are sequential.
    #[arg(long)]
    budget: Option<u64>,
    /// Resume from this file if it exists, and write the final state to it.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Number of found codes to print.
    #[arg(long, default_value_t = 1)]
    show: usize,
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameters(format!("cannot read {}: {e}", path.display())))
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn verify(name: Option<String>, as_json: bool) -> Result<bool, Error> {
    let reports = match &name {
        Some(name) => vec![catalog::verify(name)?],
        None => catalog::verify_all()?,
    };
    if as_json {
        match &reports[..] {
            [one] if name.is_some() => println!("{}", json(one)),
            all => println!("{}", json(&all)),
        }
    } else {
        for r in &reports {
            let we = match r.enumerator_ok {
                Some(true) => "enumerator ok",
                Some(false) => "enumerator MISMATCH",
                None => "no enumerator claimed",
            };
            println!(
                "{:<6} [{},{},{}]_4 (expected {}) lcd={} {we}: {}",
                r.name,
                r.n,
                r.k,
                r.d,
                r.expected,
                r.lcd,
                if r.pass { "PASS" } else { "FAIL" }
            );
        }
    }
    Ok(reports.iter().all(|r| r.pass))
}

fn run_search(args: SearchArgs) -> Result<bool, Error> {
    let mode = match args.mode {
        Mode::Exhaustive => SearchMode::Exhaustive,
        Mode::First => SearchMode::FirstHit,
    };
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let mut cfg = SearchConfig::new(args.n, args.k, args.d)
        .mode(mode)
        .parallel_width(jobs);
    if let Some(b) = args.budget {
        cfg = cfg.node_budget(b);
    }
    let outcome = match args.checkpoint.as_deref().filter(|p| p.exists()) {
        Some(path) => {
            let ckpt = Checkpoint::parse(&read(path)?)?;
            eprintln!(
                "resuming from {} ({} nodes visited)",
                path.display(),
                ckpt.nodes_visited
            );
            search::resume(&cfg, &ckpt)?
        }
        None => search::run_search(&cfg)?,
    };
    if let Some(path) = &args.checkpoint {
        fs::write(path, outcome.checkpoint().to_text())
            .map_err(|e| Error::Checkpoint(format!("cannot write {}: {e}", path.display())))?;
    }
    if outcome.certifies_nonexistence() {
        println!("no code exists; complete=true");
    } else {
        println!(
            "found {} code(s); complete={}",
            outcome.found.len(),
            outcome.complete
        );
    }
    println!("nodes_visited={}", outcome.nodes_visited);
    for code in outcome.found.iter().take(args.show) {
        print!("{}", io::format_code(code));
    }
    if !outcome.complete && outcome.found.is_empty() {
        match &args.checkpoint {
            Some(path) => println!("stopped on budget; frontier saved to {}", path.display()),
            None => println!("stopped on budget; pass --checkpoint FILE to keep the frontier"),
        }
    }
    Ok(true)
}

fn show_bounds(n: usize, k: usize, as_json: bool) -> Result<bool, Error> {
    let records = bounds::bounds(n, k)?;
    if as_json {
        println!("{}", json(&records));
    } else {
        for r in &records {
            println!("{r}");
        }
    }
    Ok(true)
}

fn transform(shorten: Option<usize>, puncture: Option<usize>, file: &Path) -> Result<bool, Error> {
    let code = io::parse_code(&read(file)?)?;
    let out = match (shorten, puncture) {
        (Some(i), _) => code.shorten(i)?,
        (None, Some(i)) => code.puncture(i)?,
        (None, None) => unreachable!("clap requires one of the two"),
    };
    print!("{}", io::format_code(&out));
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { name, all: _, json } => verify(name, json),
        Command::Search(args) => run_search(args),
        Command::Bounds { n, k, json } => show_bounds(n, k, json),
        Command::Dump { name } => catalog::build(&name).map(|c| {
            print!("{}", io::format_code(&c));
            true
        }),
        Command::Transform {
            shorten,
            puncture,
            file,
        } => transform(shorten, puncture, &file),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
