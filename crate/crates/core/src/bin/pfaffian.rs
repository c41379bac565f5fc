use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pfaffian::gaussian::gaussian_binomial_pow;
use pfaffian::lyubeznik::{build_table, l_closed};
use pfaffian::origin::{h0_d_even, h0_d_odd, h0_pf_pole, h0_q};
use pfaffian::verify::verify_all;
use pfaffian::weights::{bott, BottResult};
use pfaffian::{Exec, Poly};

#[derive(Parser)]
#[command(
    name = "pfaffian",
    version,
    about = "Lyubeznik numbers and local cohomology of Pfaffian rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Table of λ_{i,j}(R^k) for n x n skew-symmetric matrices
    Lyubeznik {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// L_k(q, w) as a polynomial
    Genfun {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// print as a JSON term list
        #[arg(long)]
        json: bool,
    },
    /// Local cohomology at the origin, Σ_j [H^j_0(M)] q^j
    Localcoh {
        #[arg(long, value_enum)]
        parity: Parity,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum)]
        object: Object,
        #[arg(long)]
        index: usize,
    },
    /// Gaussian binomial binom(a, b) evaluated at q^power
    Gaussian {
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[arg(long, default_value_t = 1)]
        power: i64,
    },
    /// Bott's algorithm on a weight, e.g. --gamma 0,-1,2
    Bott {
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        gamma: Vec<i64>,
    },
    /// Run every identity sweep
    Verify {
        #[arg(long, default_value_t = 13)]
        n_max: usize,
        /// worker threads; 1 runs sequentially
        #[arg(long)]
        jobs: Option<usize>,
        /// print the report as JSON
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    #[value(name = "Q", alias = "q")]
    Q,
    #[value(name = "D", alias = "d")]
    D,
    #[value(name = "pfpole")]
    PfPole,
}

fn arg_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn print_poly(result: pfaffian::Result<Poly>) -> ExitCode {
    match result {
        Ok(p) => {
            println!("{p}");
            ExitCode::SUCCESS
        }
        Err(e) => arg_error(e),
    }
}

fn run_verify(n_max: usize, jobs: Option<usize>, json: bool) -> ExitCode {
    let exec = match jobs {
        Some(0) => return arg_error("--jobs must be at least 1"),
        Some(1) => Exec::Sequential,
        _ => Exec::Parallel,
    };
    let run = || verify_all(n_max, exec);
    #[cfg(feature = "parallel")]
    let report = match jobs {
        Some(j) if j > 1 => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(run),
            Err(e) => return arg_error(e),
        },
        _ => run(),
    };
    #[cfg(not(feature = "parallel"))]
    let report = run();

    let report = match report {
        Ok(r) => r,
        Err(e) => return arg_error(e),
    };
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        for s in &report.suites {
            let status = if s.pass { "PASS" } else { "FAIL" };
            println!("{status} {:<11} {:>8} checks", s.name, s.checked);
            if let Some(f) = &s.failure {
                println!("     {f}");
            }
        }
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Lyubeznik { n, k, format } => match build_table(n, k) {
            Ok(t) => {
                match format {
                    Format::Json => println!("{}", t.to_json()),
                    Format::Csv => print!("{}", t.to_csv()),
                    Format::Latex => print!("{}", t.to_latex()),
                }
                ExitCode::SUCCESS
            }
            Err(e @ pfaffian::Error::PathMismatch { .. })
            | Err(e @ pfaffian::Error::Invariant { .. }) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
            Err(e) => arg_error(e),
        },
        Command::Genfun { n, k, json } => match l_closed(n, k) {
            Ok(p) if json => {
                println!("{}", serde_json::to_string(&p).expect("poly serializes"));
                ExitCode::SUCCESS
            }
            other => print_poly(other),
        },
        Command::Localcoh {
            parity,
            m,
            object,
            index,
        } => match (parity, object) {
            (Parity::Even, Object::Q) => print_poly(h0_q(m, index)),
            (Parity::Even, Object::D) => print_poly(h0_d_even(m, index)),
            (Parity::Even, Object::PfPole) => print_poly(h0_pf_pole(m, index)),
            (Parity::Odd, Object::D) => print_poly(h0_d_odd(m, index)),
            (Parity::Odd, _) => arg_error("only D is defined for odd n"),
        },
        Command::Gaussian { a, b, power } => print_poly(gaussian_binomial_pow(a, b, power)),
        Command::Bott { gamma } => {
            match bott(&gamma) {
                BottResult::Zero => println!("zero"),
                BottResult::Cohomology { degree, weight } => {
                    println!("degree {degree} weight {weight}")
                }
            }
            ExitCode::SUCCESS
        }
        Command::Verify { n_max, jobs, json } => run_verify(n_max, jobs, json),
    }
}
