use std::process::ExitCode;

use cdalg_cli::{
    cmd_classify, cmd_eval, cmd_matrix, cmd_norm_violation, cmd_subalgebra, cmd_table, cmd_verify, Format, Side, Span,
    WARN_LEVEL,
};
use clap::{Parser, Subcommand};

/// Exact arithmetic and structure checks in the Cayley-Dickson algebras A_n.
#[derive(Parser)]
#[command(name = "cdalg", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Basis multiplication table of A_n.
    Table {
        #[arg(long)]
        n: u32,
    },
    /// Evaluate an expression such as "(e1+e10)*e15" or "assoc(e1, e2, e4)".
    Eval {
        #[arg(long)]
        n: u32,
        expr: String,
    },
    /// Alternative / strongly alternative status of an element.
    Classify {
        #[arg(long)]
        n: u32,
        element: String,
    },
    /// H_a, or the quaternion / octonion span of a pair.
    Subalgebra {
        #[arg(long)]
        n: u32,
        a: String,
        b: Option<String>,
        #[arg(long, value_enum, default_value = "octonion")]
        span: Span,
        /// Normalize `a` when its norm is rational (H_a only).
        #[arg(long)]
        rescale: bool,
    },
    /// Run the statement registry; repeat --n for several levels.
    Verify {
        #[arg(long = "n", default_values_t = [3, 4])]
        levels: Vec<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = cdalg::harness::DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long)]
        theorem: Option<String>,
    },
    /// First two-term pair whose product breaks the norm.
    NormViolation {
        #[arg(long)]
        n: u32,
    },
    /// Left or right multiplication matrix as CSV.
    Matrix {
        #[arg(long)]
        n: u32,
        element: String,
        #[arg(long, value_enum, default_value = "left")]
        side: Side,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let levels: Vec<u32> = match &cli.command {
        Command::Verify { levels, .. } => levels.clone(),
        Command::Table { n }
        | Command::Eval { n, .. }
        | Command::Classify { n, .. }
        | Command::Subalgebra { n, .. }
        | Command::NormViolation { n }
        | Command::Matrix { n, .. } => vec![*n],
    };
    if let Some(n) = levels.iter().find(|&&n| n > WARN_LEVEL) {
        eprintln!("warning: level {n} has dimension 2^{n}; this may be slow");
    }
    let f = cli.format;
    let result = match &cli.command {
        Command::Table { n } => cmd_table(*n, f),
        Command::Eval { n, expr } => cmd_eval(*n, expr, f),
        Command::Classify { n, element } => cmd_classify(*n, element, f),
        Command::Subalgebra { n, a, b, span, rescale } => cmd_subalgebra(*n, a, b.as_deref(), *span, *rescale, f),
        Command::Verify { levels, seed, trials, theorem } => cmd_verify(levels, *seed, *trials, theorem.as_deref(), f),
        Command::NormViolation { n } => cmd_norm_violation(*n, f),
        Command::Matrix { n, element, side } => cmd_matrix(*n, element, *side),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
