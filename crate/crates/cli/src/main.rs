mod commands;
mod render;

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

/// Exit codes: scripts must be able to tell "unknown" from "wrong".
pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_VERIFY: u8 = 4;
pub const EXIT_DOMAIN: u8 = 5;

#[derive(Parser)]
#[command(
    name = "strengthlab",
    version,
    about = "Strength of graphs, generalized Ramsey search and Nordhaus-Gaddum bounds",
    after_help = "Results go to stdout as JSON/CSV/markdown and are byte-stable \
across runs; progress and timing go to stderr."
)]
struct Cli {
    /// Worker threads (default: STRENGTHLAB_THREADS or available cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Characterization,
    Bruteforce,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Md,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Strength,
    Theorems,
    Tables,
    Enumeration,
}

#[derive(Subcommand)]
enum Command {
    /// Compute str(G) with witness numbering and bounds
    Strength {
        /// Edge-list input: "n; u v; u v; ..." (1-based)
        #[arg(long, conflicts_with = "graph6")]
        edges: Option<String>,
        /// graph6 input
        #[arg(long)]
        graph6: Option<String>,
        #[arg(long, value_enum, default_value = "characterization")]
        method: Method,
        /// Report edgeless graphs (strength undefined) instead of failing
        #[arg(long)]
        allow_empty_report: bool,
    },
    /// Compute r(F_s, F_t) by exhaustive search up to --max-n
    Ramsey {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Checkpoint file: written after every work chunk, resumed when
        /// present
        #[arg(long)]
        checkpoint: Option<std::path::PathBuf>,
    },
    /// Compute f(n) = max str(G) + str(complement) by full enumeration
    Fmax {
        #[arg(long)]
        n: usize,
        /// Include the witness pair as graph6
        #[arg(long)]
        witnesses: bool,
    },
    /// Emit one of the published tables (1: small r(F_s,F_t); 2: f(n);
    /// 3: sigma_n; 4: bounds)
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        which: u8,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// Run the verification suites and exit nonzero on any failure
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Largest order for the exhaustive suites (2..=7)
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(usize))]
        max_order: usize,
    },
    /// Stream the isomorphism classes of an order as graph6 lines
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, requires = "shard_count")]
        shard: Option<usize>,
        #[arg(long, requires = "shard")]
        shard_count: Option<usize>,
        /// Count classes without printing them
        #[arg(long)]
        count_only: bool,
        /// Cursor file: resumed when present, updated on exit
        #[arg(long, conflicts_with = "shard")]
        cursor: Option<std::path::PathBuf>,
        /// Stop after this many classes
        #[arg(long)]
        limit: Option<u64>,
    },
}

/// Errors carry the exit code they should produce.
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: msg.into(),
        }
    }

    pub fn budget(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_BUDGET,
            message: msg.into(),
        }
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_DOMAIN,
            message: msg.into(),
        }
    }
}

impl From<strengthlab::Error> for CliError {
    fn from(e: strengthlab::Error) -> Self {
        use strengthlab::Error::*;
        let code = match &e {
            OrderTooLarge(_)
            | CombinedOrderTooLarge(_)
            | EnumerationOrder { .. }
            | CanonicalOrder { .. }
            | InsufficientRamseyData(_) => EXIT_BUDGET,
            EdgelessGraph | NoVertices | IsolatedVertex => EXIT_DOMAIN,
            _ => EXIT_INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: format!("io error: {e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .or_else(|| {
            std::env::var("STRENGTHLAB_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .filter(|&t| t > 0);
    if let Some(t) = threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("warning: could not size the worker pool: {e}");
        }
    }

    let outcome = match cli.command {
        Command::Strength {
            edges,
            graph6,
            method,
            allow_empty_report,
        } => commands::strength(edges, graph6, method, allow_empty_report),
        Command::Ramsey {
            s,
            t,
            max_n,
            checkpoint,
        } => commands::ramsey(s, t, max_n, checkpoint),
        Command::Fmax { n, witnesses } => commands::fmax(n, witnesses),
        Command::Tables { which, format } => commands::tables(which, format),
        Command::Verify { suite, max_order } => commands::verify(suite, max_order),
        Command::Enumerate {
            n,
            shard,
            shard_count,
            count_only,
            cursor,
            limit,
        } => commands::enumerate(n, shard.zip(shard_count), count_only, cursor, limit),
    };

    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
