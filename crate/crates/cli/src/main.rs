mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "quiverhom", version, about = "Homological computations over bound quiver algebras")]
pub struct Cli {
    /// Field override: `Q` or `F<p>` (e.g. `F2`).
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Minimum resolution length before a dimension is reported as cut off.
    #[arg(long, global = true, default_value_t = 0)]
    pub cutoff: usize,
    /// Search budget for decompositions and orbits.
    #[arg(long, global = true, default_value_t = 32)]
    pub budget: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct Input {
    /// Algebra description file.
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct SubcategoryArgs {
    /// A subcategory declared in the input file.
    #[arg(long, conflicts_with = "generators")]
    pub subcategory: Option<String>,
    /// Generators as a module expression.
    #[arg(long)]
    pub generators: Option<String>,
    /// `nakayama`, `standard`, or a `+`-separated list of indecomposables.
    #[arg(long)]
    pub ambient: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension, global and selfinjective dimensions, Gorenstein and Auslander flags.
    Summary(Input),
    /// Minimal projective resolution of a module.
    Resolve {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 4)]
        length: usize,
    },
    /// Table of `dim Ext^i(from, to)`.
    Ext {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 3)]
        max: usize,
    },
    /// pd, id, grade and reduced grade of a module.
    Dims {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        module: String,
    },
    /// The (m,n)-condition, n-Gorenstein and Auslander-Gorenstein checks.
    Gorenstein {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Whether the algebra is n-Auslander.
    Auslander {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: usize,
    },
    /// Maximal n-orthogonality of add(generators) against an ambient list.
    Orthogonal {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        sub: SubcategoryArgs,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Homological data of the simples of an (n-1)-Auslander algebra of gl.dim n.
    ClassifySimples {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        sub: SubcategoryArgs,
    },
    /// Whether add(Lambda + DLambda) is the maximal (n-1)-orthogonal subcategory.
    TrivialMaximal {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: usize,
    },
    /// Almost hereditary algebras of gl.dim 2: the reduced grade criterion.
    AlmostHereditary {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        ambient: Option<String>,
    },
    /// Cotilting test for a module.
    Cotilting {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        module: String,
    },
    /// Gorenstein symmetry and basic module of a cotilting T in the left Ext-perpendicular of Lambda.
    #[command(name = "theorem-4-3")]
    Theorem43 {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        module: String,
    },
    /// Orbit of a module under Omega^n tau.
    Orbit {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Dimension sequence and complexity of M (x) N over the ground field.
    TensorCx {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        module: String,
        /// Second algebra file; defaults to the first.
        #[arg(long)]
        with: Option<PathBuf>,
        #[arg(long)]
        with_module: String,
        #[arg(long, default_value_t = 15)]
        length: usize,
        /// Write the tensor dimension sequence as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// No-go for maximal orthogonal subcategories of a tensor product algebra.
    #[command(name = "prop-5-1")]
    Prop51 {
        #[command(flatten)]
        input: Input,
        /// The second tensor factor.
        #[arg(long)]
        gamma: PathBuf,
    },
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli, argv[1..].to_vec()) {
        Ok(report) => {
            let out = match cli.format {
                Format::Text => report.to_string(),
                Format::Json => serde_json::to_string_pretty(&report).expect("report serialises") + "\n",
            };
            print!("{out}");
            ExitCode::from(if report.undecided { 2 } else { 0 })
        }
        Err(commands::Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(commands::Failure::Undecided(e)) => {
            eprintln!("undecided: {e}");
            ExitCode::from(2)
        }
    }
}
