mod commands;
mod source;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::Output;

/// Exact invariants, characters and link polynomials of reflection groups.
#[derive(Parser, Debug)]
#[command(name = "reflgroup", version, about)]
pub struct Cli {
    /// Emit a version-stamped JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(flatten)]
    budgets: Budgets,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Budgets {
    /// Maximum number of group elements to enumerate.
    #[arg(
        long,
        global = true,
        env = "REFLGROUP_BUDGET",
        default_value_t = 1_000_000
    )]
    pub budget: usize,

    /// Largest d·n accepted by `chartable`.
    #[arg(long, global = true, env = "REFLGROUP_MAX_TABLE", default_value_t = 24)]
    pub max_table: u32,
}

/// A Coxeter type (`H3`, `B4`, `I2(5)`), a Coxeter matrix file, or an
/// inline matrix with rows separated by `;` (`"1 3; 3 1"`).
#[derive(Args, Debug, Clone)]
pub struct CoxeterArg {
    pub spec: String,
}

/// A group: a Coxeter specification or `--imprim m p n` for G(m,p,n).
#[derive(Args, Debug, Clone)]
pub struct GroupArg {
    #[arg(required_unless_present = "imprim")]
    pub spec: Option<String>,
    #[arg(long, num_args = 3, value_names = ["M", "P", "N"], conflicts_with = "spec")]
    pub imprim: Option<Vec<u32>>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a Coxeter matrix and report its type, finiteness and order.
    Coxeter(CoxeterArg),
    /// Count (or list) the roots of a finite Coxeter system.
    Roots {
        #[command(flatten)]
        group: CoxeterArg,
        #[arg(long)]
        list: bool,
    },
    /// Length and canonical reduced word of an element given by a word (1-based letters).
    Length {
        #[command(flatten)]
        group: CoxeterArg,
        word: Vec<usize>,
    },
    /// Whether y ≤ w in the Bruhat order; words are quoted, e.g. "1 2".
    Bruhat {
        #[command(flatten)]
        group: CoxeterArg,
        y: String,
        w: String,
    },
    /// Conjugacy classes sorted by minimal length, size and representative.
    Classes(GroupArg),
    /// Length-decreasing conjugation path from an element to a minimal-length class member.
    Descent {
        #[command(flatten)]
        group: CoxeterArg,
        word: Vec<usize>,
    },
    /// Order, reflections, hyperplanes and generators of G(m,p,n).
    Group {
        #[arg(long, num_args = 3, value_names = ["M", "P", "N"], required = true)]
        imprim: Vec<u32>,
    },
    /// Degrees of the basic invariants, read off the Molien series.
    Degrees {
        #[command(flatten)]
        group: GroupArg,
        /// Use the closed form for G(m,p,n) instead of enumerating.
        #[arg(long)]
        closed_form: bool,
    },
    /// The Molien series as a reduced rational function.
    Molien(GroupArg),
    /// The Poincaré polynomial ∏ (x^{d_i} − 1)/(x − 1).
    Poincare {
        #[arg(required_unless_present_any = ["imprim", "degrees"])]
        spec: Option<String>,
        #[arg(long, num_args = 3, value_names = ["M", "P", "N"], conflicts_with = "spec")]
        imprim: Option<Vec<u32>>,
        /// Degrees given directly, comma separated.
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["spec", "imprim"])]
        degrees: Option<Vec<u32>>,
    },
    /// Fake degree of χ_α by the β-set formula; with --imprim m p n the
    /// restriction to G(m,p,n) is used.
    Fakedeg {
        /// A d-partition such as "(2,1)" or "(21,-)".
        alpha: String,
        #[arg(long, num_args = 3, value_names = ["M", "P", "N"])]
        imprim: Option<Vec<u32>>,
    },
    /// Character table of G(d,1,n) by the Murnaghan–Nakayama rule.
    Chartable { d: u32, n: u32 },
    /// Regular numbers, and with --order a search for a regular element.
    Regular {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        order: Option<u32>,
    },
    /// HOMFLY-PT polynomial X(u, v) of a braid closure, e.g. "2: 1 1 1".
    Homfly {
        /// Strand count and 1-based signed letters, e.g. "3: 1 -2 1 -2".
        braid: String,
        /// The Jones polynomial: u = t², v = √t·(t − 1).
        #[arg(long, group = "spec")]
        jones: bool,
        /// The Alexander polynomial: u = 1, v = √t − 1/√t.
        #[arg(long, group = "spec")]
        alexander: bool,
        /// The (t, x) form with u = t², v = t·x.
        #[arg(long, group = "spec")]
        tx: bool,
    },
    /// Degrees, codegrees and fields: G4…G37, G(m,p,n) or S<n>; all exceptional rows if omitted.
    Table { label: Option<String> },
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(e) = err.downcast_ref::<reflgroup::Error>() {
        return match e {
            reflgroup::Error::Budget { .. } => 3,
            reflgroup::Error::Invariant(_) => 4,
            _ => 2,
        };
    }
    match err.downcast_ref::<commands::CliError>() {
        Some(commands::CliError::Budget(_)) => 3,
        Some(commands::CliError::Usage(_)) => 2,
        None => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command, cli.budgets) {
        Ok(Output { text, json }) => {
            if cli.json {
                let doc = serde_json::json!({
                    "version": env!("CARGO_PKG_VERSION"),
                    "command": commands::name(&cli.command),
                    "result": json,
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("JSON values serialize")
                );
            } else {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
