//! `lacunary` — exact irreducibility analysis for sparse integer
//! polynomials whose constant term is plus or minus a prime power.
//!
//! Every subcommand prints one JSON document. Exit code 0 means a
//! definitive result, 1 an input error (reported on stderr), 2 a clean run
//! whose verdict is inconclusive.

mod commands;
mod parse;
mod scan;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "lacunary",
    version,
    about = "Exact irreducibility analysis for sparse integer polynomials",
    long_about = "Decides irreducibility of sparse integer polynomials whose constant term \
                  is plus or minus a prime power, splits off cyclotomic parts in the \
                  boundary case where the constant term magnitude equals the sum of the \
                  other coefficient magnitudes, classifies trinomials, and cross-checks \
                  every verdict against an exhaustive factorization engine on demand. \
                  All arithmetic is exact."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the direct irreducibility tests and report a certificate
    Classify {
        /// Polynomial in x, e.g. "x^5 + 2x - 27"
        poly: String,
        /// Cross-check the verdict against the factorization engine
        #[arg(long)]
        verify: bool,
    },
    /// Split off the cyclotomic part when the constant term magnitude
    /// equals the sum of the other coefficient magnitudes
    Decompose {
        /// Polynomial in x, e.g. "x^3 + 5x + 6"
        poly: String,
        /// Cross-check the decomposition against the factorization engine
        #[arg(long)]
        verify: bool,
    },
    /// Closed-form discriminant, separability and equality analysis for
    /// trinomials with prime-power constant term
    Trinomial {
        /// Trinomial in x, e.g. "x^7 + 2x^2 - 27"
        poly: String,
        /// Cross-check discriminant and verdict against the engine
        #[arg(long)]
        verify: bool,
    },
    /// Factor into irreducibles by exhaustive search (small degrees only)
    Factor {
        /// Polynomial in x, e.g. "x^12 + x^8 + x^4 - 16"
        poly: String,
        /// Largest factor degree searched for (hard engine limit 28)
        #[arg(long, default_value_t = lacunary::oracle::RECOMMENDED_DEGREE_CAP)]
        max_degree: u64,
    },
    /// Exhaustively hunt for counterexamples to strict-dominance
    /// irreducibility at a prime lowest exponent
    Scan {
        /// Lowest exponent of the instances (must be prime)
        #[arg(long)]
        q: u64,
        /// Largest instance degree to enumerate
        #[arg(long, default_value_t = 10)]
        max_degree: u64,
        /// Coefficient magnitudes range over 1..=coeff-bound
        #[arg(long, default_value_t = 3)]
        coeff_bound: u64,
        /// Constant term magnitudes range over prime powers up to this bound
        #[arg(long, default_value_t = 27)]
        pp_bound: u64,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not errors; everything else is
            // an input problem and shares the input-error exit code.
            let code = if e.use_stderr() { commands::EXIT_INPUT } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let outcome = match cli.command {
        Command::Classify { poly, verify } => commands::classify(&poly, verify),
        Command::Decompose { poly, verify } => commands::decompose(&poly, verify),
        Command::Trinomial { poly, verify } => commands::trinomial_cmd(&poly, verify),
        Command::Factor { poly, max_degree } => commands::factor(&poly, max_degree),
        Command::Scan { q, max_degree, coeff_bound, pp_bound } => {
            scan::scan(&scan::ScanParams { q, max_degree, coeff_bound, pp_bound })
        }
    };
    let rendered =
        serde_json::to_string_pretty(&outcome.report).expect("reports serialize to JSON");
    if outcome.exit == commands::EXIT_INPUT {
        eprintln!("{rendered}");
    } else {
        println!("{rendered}");
    }
    std::process::exit(outcome.exit);
}
