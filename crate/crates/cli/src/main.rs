mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact refined quantum invariants of plumbed 3-manifolds.
#[derive(Debug, Parser)]
#[command(name = "spinmod", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Inspect, check and derive category data.
    #[command(subcommand)]
    Category(CategoryCommand),
    /// Inspect plumbing forests.
    #[command(subcommand)]
    Manifold(ManifoldCommand),
    /// Enumerate a structure set of a linking matrix.
    Structures(StructuresArgs),
    /// Compute the WRT invariant, optionally refined.
    Invariant(InvariantArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
enum CategoryCommand {
    /// Check the premodular and modular axioms.
    Check {
        /// Builtin spec (`sl2:8`, `abelian:3:2`, `sl2:5*sl2:6`) or a category JSON file.
        category: String,
    },
    /// Print the category as JSON together with its invertibles and refinable structures.
    Show { category: String },
    /// Build a derived category and print it as JSON.
    Derive {
        category: String,
        #[command(subcommand)]
        how: DeriveCommand,
    },
    /// Search extensions of sl2(r) for categories with large cyclic spin subgroups.
    Search {
        #[arg(long, default_value_t = 9)]
        max_r: u32,
        #[arg(long, default_value_t = 4)]
        max_alpha: usize,
        #[arg(long, default_value_t = 4)]
        min_spin_order: usize,
    },
}

#[derive(Debug, Subcommand)]
enum DeriveCommand {
    /// Restriction to labels whose degree is divisible by m.
    Reduce {
        /// Label of the invertible object generating the grading.
        #[arg(long)]
        t: String,
        #[arg(long)]
        m: usize,
        #[arg(long = "e_d", default_value_t = 1)]
        e_d: i64,
    },
    /// Quotient by the transparent invertibles.
    Modularize,
}

#[derive(Debug, Subcommand)]
enum ManifoldCommand {
    /// Linking matrix, signature and the forest in canonical text form.
    Show {
        /// Forest file, or `e8`, `lens:<p>:<q>`, `chain:<m1>,<m2>,...`.
        manifold: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Spin,
    Coh,
    Chern,
    Hom,
}

#[derive(Debug, Args)]
struct StructuresArgs {
    kind: KindArg,
    /// Matrix as `[[a, b], [b, c]]`, or a file holding one.
    #[arg(long, conflicts_with = "manifold", required_unless_present = "manifold")]
    matrix: Option<String>,
    /// Forest file or builtin manifold spec.
    #[arg(long)]
    manifold: Option<String>,
    #[arg(long)]
    d: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RefineArg {
    Spin,
    Coh,
    Spinc,
    Hom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Args)]
struct InvariantArgs {
    #[arg(long)]
    category: String,
    #[arg(long)]
    manifold: String,
    #[arg(long, requires = "d")]
    refine: Option<RefineArg>,
    #[arg(long)]
    d: Option<u64>,
    /// Use e_D = ζ_D^k for the grading group of order D.
    #[arg(long = "e_d", default_value_t = 1)]
    e_d: i64,
    /// Allow refinements outside the theorem hypotheses (spin^c with odd d).
    #[arg(long = "override")]
    allow_override: bool,
    /// Evaluate coset sums by full enumeration instead of character sums.
    #[arg(long)]
    enumerate: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Sum,
    Kirby,
    Lemmas,
    Decomposition,
    Oracle,
    Moo,
    Spinc,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    suite: Suite,
    #[arg(long, default_value_t = 50)]
    corpus_size: usize,
    #[arg(long, env = "SPINMOD_SEED", default_value_t = 1)]
    seed: u64,
    /// Random move sequences per manifold (kirby suite).
    #[arg(long, default_value_t = 200)]
    sequences: usize,
    #[arg(long, default_value_t = 6)]
    sequence_length: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(commands::Outcome { text, ok }) => {
            // a closed pipe downstream is not an error
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
