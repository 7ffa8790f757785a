use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use circulant::search::BoundMode;
use circulant_cli::commands::{self, CmdError, ExportFormat};

#[derive(Parser)]
#[command(
    name = "circulant",
    version,
    about = "Build circulant digraphs, decide directed Hamiltonicity, and search for counterexamples to Jackson's conjecture"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Re-check every claim about the counterexample Cay(Z_12; {2,3,8})
    Verify,
    /// Decide directed Hamiltonicity of one circulant
    Ham {
        /// Modulus (vertex count)
        #[arg(long)]
        n: usize,
        /// Connection set as comma-separated integers, e.g. 2,3,8
        #[arg(long, value_parser = parse_set)]
        set: SetArg,
        /// Cross-check the verdict with the Held-Karp oracle
        #[arg(long)]
        oracle: bool,
        /// Print the Hamiltonian circuit when one exists
        #[arg(long)]
        witness: bool,
    },
    /// Search a vertex-count range for non-hamiltonian circulants within
    /// Jackson's hypotheses, one multiplier class at a time
    Search {
        #[arg(long)]
        min_n: usize,
        #[arg(long)]
        max_n: usize,
        /// Vertex-count bound: the conjectured 4k+1 or the weaker 4k
        #[arg(long, default_value = "4k+1", value_parser = parse_bound)]
        bound: BoundMode,
        /// Also scan the k = 2 case the hypotheses exclude
        #[arg(long)]
        include_k2: bool,
        /// Also scan digon-carrying (non-oriented) connection sets
        #[arg(long)]
        allow_digons: bool,
        /// Write a machine-readable report to this path
        #[arg(long)]
        json: Option<PathBuf>,
        /// Solver thread count (defaults to one thread per core)
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Compare two circulants on one modulus: multiplier equivalence and
    /// digraph isomorphism
    Iso {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_set)]
        set_a: SetArg,
        #[arg(long, value_parser = parse_set)]
        set_b: SetArg,
    },
    /// Exhaustively find isomorphic-but-not-multiplier-equivalent pairs
    /// of size-k connection sets (counterexamples to Adam's conjecture)
    Adam {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Restrict to pairs involving this set's multiplier class
        #[arg(long, value_parser = parse_set)]
        anchor: Option<SetArg>,
    },
    /// Print a circulant as a dot or edge-list document
    Export {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_set)]
        set: SetArg,
        #[arg(long, value_enum)]
        format: ExportFormat,
    },
}

#[derive(Clone, Debug)]
struct SetArg(Vec<usize>);

/// Comma-separated positive integers; whitespace and signs rejected.
fn parse_set(raw: &str) -> Result<SetArg, String> {
    raw.split(',')
        .map(|token| {
            if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
                return Err(format!("invalid connection-set element {token:?}"));
            }
            token
                .parse::<usize>()
                .map_err(|e| format!("invalid connection-set element {token:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(SetArg)
}

fn parse_bound(raw: &str) -> Result<BoundMode, String> {
    raw.parse()
}

fn run(cli: Cli) -> Result<ExitCode, CmdError> {
    match cli.command {
        Command::Verify => commands::cmd_verify(),
        Command::Ham {
            n,
            set,
            oracle,
            witness,
        } => commands::cmd_ham(n, set.0, oracle, witness),
        Command::Search {
            min_n,
            max_n,
            bound,
            include_k2,
            allow_digons,
            json,
            workers,
        } => commands::cmd_search(
            min_n,
            max_n,
            bound,
            include_k2,
            allow_digons,
            json.as_deref(),
            workers,
        ),
        Command::Iso { n, set_a, set_b } => commands::cmd_iso(n, set_a.0, set_b.0),
        Command::Adam { n, k, anchor } => commands::cmd_adam(n, k, anchor.map(|a| a.0)),
        Command::Export { n, set, format } => commands::cmd_export(n, set.0, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CmdError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CmdError::Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
