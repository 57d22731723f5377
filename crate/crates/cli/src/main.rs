//! `ltm`: tables of coloring counts, characteristic-function censuses and
//! classification counts for locally standard 2-torus manifolds.

mod commands;
mod error;
mod space;
mod table;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ltm_core::Budget;

use commands::{Context, Sequence, SurfaceArg, SurfaceParams};
use error::CliError;
use space::Space;
use table::Format;

#[derive(Parser)]
#[command(name = "ltm", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    /// Largest s^m of raw color sequences to enumerate.
    #[arg(long, global = true, value_name = "N")]
    max_sequences: Option<u128>,

    /// Largest facet count for characteristic-function enumeration.
    #[arg(long, global = true, value_name = "N")]
    max_facets: Option<usize>,

    /// Largest facet count for brute-force automorphism search.
    #[arg(long, global = true, value_name = "N")]
    max_permutation_facets: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form values of A, B or C.
    Count {
        #[arg(value_enum, ignore_case = true)]
        which: Sequence,
        #[arg(long)]
        m: usize,
        /// Number of colors (A and B only).
        #[arg(long, default_value_t = 3)]
        s: usize,
        /// Emit every m up to this value.
        #[arg(long)]
        max: Option<usize>,
    },
    /// Brute-force A, B, C against the closed forms; exit 4 on mismatch.
    Oracle {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        max: Option<usize>,
    },
    /// Characteristic functions on an orbit space and their orbit counts.
    Charfns {
        /// polygon:M, disk:M, simplex:N, prism or file:PATH
        #[arg(long)]
        space: Space,
        /// Torus rank; defaults to the dimension of the space.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Euler characteristic of the manifold over an orbit space.
    Euler {
        /// A polytope-like space whose faces are all balls.
        #[arg(long, conflicts_with_all = ["genus", "orientable"])]
        space: Option<Space>,
        /// Genus of a surface with one boundary circle.
        #[arg(long, requires = "m")]
        genus: Option<usize>,
        #[arg(long, requires = "m", action = clap::ArgAction::Set)]
        orientable: Option<bool>,
        /// Vertices on the boundary circle.
        #[arg(long, conflicts_with = "space")]
        m: Option<usize>,
    },
    /// h(Q), B(m) and the number h(Q) B(m) of equivariant classes.
    Classify {
        /// disk, rp2, torus or custom:FILE
        #[arg(long)]
        surface: SurfaceArg,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        max: Option<usize>,
        /// Also enumerate: equivalence, direct equivariant and weak counts.
        #[arg(long)]
        full: bool,
    },
    /// Small covers over the m-gon as cell complexes.
    Cover {
        #[arg(long)]
        m: usize,
        /// One coloring, e.g. 0,1,0,2; without it, a census over all.
        #[arg(long)]
        lambda: Option<String>,
        /// Print the cell list of the complex instead of the summary.
        #[arg(long)]
        cells: bool,
    },
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    let defaults = Budget::default();
    let budget = Budget {
        coloring_sequences: cli.max_sequences.unwrap_or(defaults.coloring_sequences),
        facets: cli.max_facets.unwrap_or(defaults.facets),
        permutation_facets: cli
            .max_permutation_facets
            .unwrap_or(defaults.permutation_facets),
    };
    let mut ctx = Context {
        format: cli.format,
        budget,
        out,
    };
    match cli.command {
        Command::Count { which, m, s, max } => commands::count(&mut ctx, which, m, s, max),
        Command::Oracle { m, max } => commands::oracle(&mut ctx, m, max),
        Command::Charfns { space, n } => commands::charfns(&mut ctx, &space, n),
        Command::Euler {
            space,
            genus,
            orientable,
            m,
        } => {
            let surface = m.map(|m| SurfaceParams {
                genus: genus.unwrap_or(0),
                orientable: orientable.unwrap_or(true),
                m,
            });
            commands::euler(&mut ctx, space.as_ref(), surface)
        }
        Command::Classify {
            surface,
            m,
            max,
            full,
        } => commands::classify(&mut ctx, &surface, m, max, full),
        Command::Cover { m, lambda, cells } => {
            commands::cover(&mut ctx, m, lambda.as_deref(), cells)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(e), _) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
        (Ok(()), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
