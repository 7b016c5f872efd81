use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sp2g::catalog::{Catalog, GroupId};
use sp2g::report::{self, ReportDocument};

/// Exact checks on finite simple groups below Sp_2g(2), their exclusion
/// pipeline, and invariant flags over finite fields.
#[derive(Parser)]
#[command(name = "sp2g", version, after_help = GRAMMAR)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// List every witness in text mode, not only failing ones.
    #[arg(long, short, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

const GRAMMAR: &str = "\
Group names:
  Lie type      A(3,2)  2A(5,2)  A_3(2)  A3(2)  G2(3)  2F4(8)  3D4(2)
  classical     Sp(2g,q) = C_g(q)   L(n,q) = A_{n-1}(q)   U(n,q) = 2A_{n-1}(q)
                O(2n+1,q) = B_n(q)  O+(2n,q) = D_n(q)     O-(2n,q) = 2D_n(q)
  alternating   Alt(n)  Alt_n
  cyclic        Z(p)  Z_p
  sporadic      M11 ... M, with Fi24' and O'N
  Tits group    Tits
A trailing ~univ selects the universal version of a group of Lie type.";

#[derive(Subcommand)]
enum Command {
    /// Order, simplicity, canonical name and g(K) of a group.
    Order { name: String },
    /// Run every verification; exits 1 if any check fails.
    VerifyPaper {
        /// Sporadic data file to use instead of the embedded one.
        #[arg(long, value_name = "FILE")]
        sporadic_data: Option<PathBuf>,
    },
    /// List the simple groups of order at most N (`N` or `sp:g`).
    Enumerate {
        #[arg(value_name = "N|sp:g")]
        bound: String,
    },
    /// Classify every simple group of order at most |Sp_2g(2)|.
    Pipeline {
        #[arg(long, short)]
        genus: u32,
        #[arg(long)]
        sporadic_data: Option<PathBuf>,
    },
    /// Check the invariant flag of every element of GL_n(q).
    FlagScan { n: usize, q: u64 },
    /// p-rank bounds over the family, field and prime grid.
    RankGrid,
}

const MAX_GENUS: u32 = 16;

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn load_catalog(path: Option<&PathBuf>) -> Result<Catalog, String> {
    match path {
        None => Ok(Catalog::embedded().clone()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            Catalog::parse(&text).map_err(|e| format!("{}: {e}", p.display()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let doc: ReportDocument = match &cli.command {
        Command::Order { name } => {
            let k: GroupId = match name.parse() {
                Ok(k) => k,
                Err(e) => return usage(e),
            };
            match report::order_document(Catalog::embedded(), &k, argv) {
                Ok(d) => d,
                Err(e) => return usage(e),
            }
        }
        Command::VerifyPaper { sporadic_data } => match load_catalog(sporadic_data.as_ref()) {
            Ok(c) => report::verify_all(&c, argv),
            Err(e) => return usage(e),
        },
        Command::Enumerate { bound } => {
            let Some(n) = report::parse_bound(bound) else {
                return usage(format!("bound must be a positive integer or sp:g with 1 <= g <= 64, got {bound:?}"));
            };
            match report::enumerate_document(&n, argv) {
                Ok(d) => d,
                Err(e) => return usage(e),
            }
        }
        Command::Pipeline { genus, sporadic_data } => {
            if !(3..=MAX_GENUS).contains(genus) {
                return usage(format!("genus must be in 3..={MAX_GENUS}"));
            }
            let catalog = match load_catalog(sporadic_data.as_ref()) {
                Ok(c) => c,
                Err(e) => return usage(e),
            };
            match report::pipeline_document(&catalog, *genus, argv) {
                Ok(d) => d,
                Err(e) => return usage(e),
            }
        }
        Command::FlagScan { n, q } => {
            if let Err(e) = sp2g::flag::flag_scan_bounds(*n, *q) {
                return usage(e);
            }
            report::flag_scan_document(*n, *q, argv)
        }
        Command::RankGrid => report::rank_grid_document(argv),
    };
    if cli.json {
        println!("{}", doc.to_json());
    } else {
        print!("{}", doc.render_text(cli.verbose));
    }
    if doc.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
