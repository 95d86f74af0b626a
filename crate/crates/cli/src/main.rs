//! Command-line front end for the semiring workbench: proof search over
//! finitely presented semirings, finite-table analysis and enumeration, the
//! conjecture harness, and the table-level constructions.

/// stdout writers that treat a closed pipe as an orderly end of output
/// (exit 141, the conventional SIGPIPE status) rather than a panic.
macro_rules! outln {
    ($($arg:tt)*) => {{
        use ::std::io::Write as _;
        if writeln!(::std::io::stdout(), $($arg)*).is_err() {
            ::std::process::exit(141);
        }
    }};
}

macro_rules! outp {
    ($($arg:tt)*) => {{
        use ::std::io::Write as _;
        if write!(::std::io::stdout(), $($arg)*).is_err() {
            ::std::process::exit(141);
        }
    }};
}

mod census;
mod construct_cmd;
mod formats;
mod query;
mod record;

use anyhow::Result;
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use semiring_core::engine::Budget;
use semiring_core::finite::enumerate::SemiringFilter;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exit codes are a stable contract: 0 found/ok, 1 error, 2 not-found,
/// 3 budget exhausted.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Exit {
    Found,
    NotFound,
    Exhausted,
}

impl Exit {
    fn code(self) -> ExitCode {
        match self {
            Exit::Found => ExitCode::from(0),
            Exit::NotFound => ExitCode::from(2),
            Exit::Exhausted => ExitCode::from(3),
        }
    }
}

/// Search budget; the defaults are the reference budget every regression
/// derivation is pinned at.
#[derive(Args, Debug)]
pub(crate) struct BudgetArgs {
    /// Largest monomial degree the search may touch.
    #[arg(long, default_value_t = Budget::REFERENCE.max_degree)]
    max_degree: u64,
    /// Largest coefficient the search may touch.
    #[arg(long, default_value_t = Budget::REFERENCE.max_coeff)]
    max_coeff: u64,
    /// Cap on the number of distinct terms registered.
    #[arg(long, default_value_t = Budget::REFERENCE.max_universe)]
    max_universe: usize,
    /// Cap on saturation rounds.
    #[arg(long, default_value_t = Budget::REFERENCE.max_rounds)]
    max_rounds: u64,
}

impl BudgetArgs {
    pub(crate) fn to_budget(&self) -> Budget {
        Budget {
            max_degree: self.max_degree,
            max_coeff: self.max_coeff,
            max_universe: self.max_universe,
            max_rounds: self.max_rounds,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "semiring",
    version,
    about = "Workbench for commutative semirings: bounded proof search over \
             finite presentations, finite-table analysis and census, and the \
             classical constructions."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Search for a derivation proving lhs = rhs in a presented semiring.
    Prove {
        /// Presentation file.
        file: PathBuf,
        /// Left-hand term.
        #[arg(long)]
        lhs: String,
        /// Right-hand term.
        #[arg(long)]
        rhs: String,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the proof text here (otherwise it goes to stdout).
        #[arg(long)]
        proof: Option<PathBuf>,
        /// Append a JSON run record here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find m < n with m·target = n·target, i.e. a finite additive order.
    Order {
        /// Presentation file.
        file: PathBuf,
        /// The term whose additive orbit is searched.
        #[arg(long)]
        target: String,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the proof text here (otherwise it goes to stdout).
        #[arg(long)]
        proof: Option<PathBuf>,
        /// Append a JSON run record here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find a term y with n·y = target.
    Divisible {
        /// Presentation file.
        file: PathBuf,
        /// The divisor n (at least 2).
        #[arg(long)]
        n: u64,
        /// The term to divide.
        #[arg(long)]
        target: String,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the proof text here (otherwise it goes to stdout).
        #[arg(long)]
        proof: Option<PathBuf>,
        /// Append a JSON run record here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// On a one-generated presentation, find u with w·u = w.
    Unit {
        /// Presentation file.
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the proof text here (otherwise it goes to stdout).
        #[arg(long)]
        proof: Option<PathBuf>,
        /// Append a JSON run record here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a finite table and report every predicate it tracks.
    Analyze {
        /// Table file.
        file: PathBuf,
        /// Append a JSON run record here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Stream a census of finite commutative semirings (or semigroups).
    Enumerate {
        /// Order of the tables to enumerate.
        #[arg(long)]
        order: usize,
        /// Enumerate additive semigroups only, not full semirings.
        #[arg(long)]
        semigroups: bool,
        /// One record per isomorphism class instead of per labelled table.
        #[arg(long)]
        up_to_iso: bool,
        /// Keep only tables whose additive idempotency matches.
        #[arg(long)]
        idempotent: Option<bool>,
        /// Keep only tables whose additive divisibility matches.
        #[arg(long)]
        divisible: Option<bool>,
        /// Keep only tables whose unique additive divisibility matches.
        #[arg(long)]
        uniquely_divisible: Option<bool>,
        /// Keep only tables whose additive torsion matches (every finite
        /// table is torsion; false therefore matches nothing).
        #[arg(long)]
        torsion: Option<bool>,
        /// Keep only tables with (or without) a multiplicative unit.
        #[arg(long)]
        unital: Option<bool>,
        /// Keep only tables that are (or are not) generated by one element.
        #[arg(long)]
        one_generated: Option<bool>,
        /// Shard the sweep across this many threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also write the census lines to this file.
        #[arg(long)]
        census: Option<PathBuf>,
        /// Append a JSON run record here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep every semiring up to a given order for conjecture
    /// counterexamples; any hit is a hard failure.
    Harness {
        /// Which conjecture to test (available: conjA, additively divisible
        /// but not additively idempotent).
        target: String,
        /// Largest order to sweep.
        #[arg(long, default_value_t = 3)]
        max_order: usize,
        /// Shard the sweep across this many threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Append a JSON run record here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Materialize one of the classical constructions as a table file.
    Construct {
        #[command(subcommand)]
        kind: construct_cmd::Kind,
    },
    /// The uniform torsion bound: r = (M+1)! and order bound 2r-1 for
    /// subsemirings generated by elements of additive order at most M
    /// (M is capped at 20 to keep the factorial printable).
    Bound {
        /// Largest additive order among the generators (1 ..= 20).
        #[arg(long)]
        max_ord: u64,
    },
}

fn run(cli: Cli) -> Result<Exit> {
    match cli.command {
        Command::Prove {
            file,
            lhs,
            rhs,
            budget,
            proof,
            out,
        } => {
            let ctx = query::load(&file, &budget, out.as_deref(), proof.as_deref())?;
            query::prove(ctx, &lhs, &rhs)
        }
        Command::Order {
            file,
            target,
            budget,
            proof,
            out,
        } => {
            let ctx = query::load(&file, &budget, out.as_deref(), proof.as_deref())?;
            query::order(ctx, &target)
        }
        Command::Divisible {
            file,
            n,
            target,
            budget,
            proof,
            out,
        } => {
            let ctx = query::load(&file, &budget, out.as_deref(), proof.as_deref())?;
            query::divisible(ctx, n, &target)
        }
        Command::Unit {
            file,
            budget,
            proof,
            out,
        } => {
            let ctx = query::load(&file, &budget, out.as_deref(), proof.as_deref())?;
            query::unit(ctx)
        }
        Command::Analyze { file, out } => census::analyze(&file, out.as_deref()),
        Command::Enumerate {
            order,
            semigroups,
            up_to_iso,
            idempotent,
            divisible,
            uniquely_divisible,
            torsion,
            unital,
            one_generated,
            jobs,
            census,
            out,
        } => {
            let opts = census::EnumerateOpts {
                order,
                semigroups,
                up_to_iso,
                filter: SemiringFilter {
                    idempotent,
                    divisible,
                    uniquely_divisible,
                    torsion,
                    unital,
                    one_generated,
                },
                jobs,
                census,
            };
            census::enumerate(opts, out.as_deref())
        }
        Command::Harness {
            target,
            max_order,
            jobs,
            out,
        } => census::harness(&target, max_order, jobs, out.as_deref()),
        Command::Construct { kind } => construct_cmd::run(kind),
        Command::Bound { max_ord } => construct_cmd::bound(max_ord),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Keep exit 2 reserved for NOT-FOUND: help/version exit 0,
            // anything else is an ordinary error.
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(exit) => exit.code(),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
