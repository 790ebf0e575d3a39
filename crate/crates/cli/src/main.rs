//! `mfcat`: batch front end over the factorization, module and catalogue engines.
//!
//! Exit status: 0 when every check passes, 1 on a mathematical failure, 2 on
//! bad input or usage.

mod commands;
mod witness;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mfcat::andyn::AnError;
use mfcat::io::IoError;
use mfcat::mfcat::MfError;
use mfcat::polyring::{Field, PolyError};
use mfcat::quotmod::QmError;

#[derive(Parser, Debug)]
#[command(
    name = "mfcat",
    version,
    about = "Exact computations with matrix factorizations and their singularity categories"
)]
pub struct Cli {
    /// Ground field for catalogue commands and polynomial arguments: `Q` or `Fp:<p>`.
    #[arg(long, global = true, default_value = "Q", value_parser = parse_field)]
    pub field: Field,
    /// Output file for commands that produce an object; directory for witness files.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a factorization, morphism (and its homotopy, if any) or module file.
    Validate { file: PathBuf },
    /// The shift `(−p0, −p1)`.
    Shift { mf: PathBuf },
    /// Mapping cone of a morphism.
    Cone { morphism: PathBuf },
    /// Knörrer's functor: tensor with the factorization `(x, y)` of `x·y`.
    Knorrer {
        mf: PathBuf,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Dimension of Hom in the homotopy category.
    Hom {
        source: PathBuf,
        target: PathBuf,
        /// Degree-by-degree exact computation (the default).
        #[arg(long, conflicts_with_all = ["bound", "bounded"])]
        graded: bool,
        /// Uncertified estimate with ansatz degree at most D.
        #[arg(long, value_name = "D")]
        bound: Option<u32>,
        /// Uncertified estimate with the default bound (or `MFCAT_DEFAULT_BOUND`).
        #[arg(long, conflicts_with = "bound")]
        bounded: bool,
        /// Trailing zero degrees required before the graded scan stops.
        #[arg(long, default_value_t = 3)]
        window: usize,
    },
    /// Hom and stable Hom between two modules.
    StableHom { source: PathBuf, target: PathBuf },
    /// Cokernel module of a one-variable factorization.
    Cok { mf: PathBuf },
    /// A factorization with the given module as cokernel.
    Stabilize { module: PathBuf },
    /// Jordan type of a module over `k[z]/(c·z^n)`.
    Decompose { module: PathBuf },
    /// Critical values of a one-variable superpotential over Q.
    CriticalValues {
        w: String,
        #[arg(long, default_value = "z")]
        var: String,
    },
    /// Hom-dimension grid of the `A_{n−1}` catalogue.
    AnTable {
        n: usize,
        #[arg(long)]
        csv: bool,
    },
    /// Cross-check the catalogue against modules and factorizations.
    AnVerify { n: usize },
    /// Compare Hom between Knörrer images with the catalogue.
    VerifyKnorrer {
        n: usize,
        #[arg(long, value_enum, default_value_t = Pairs::All)]
        pairs: Pairs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Pairs {
    All,
    Diag,
}

fn parse_field(s: &str) -> Result<Field, String> {
    match s {
        "Q" => Ok(Field::Rational),
        _ => {
            let p = s
                .strip_prefix("Fp:")
                .ok_or_else(|| format!("expected Q or Fp:<p>, got `{s}`"))?
                .parse::<u64>()
                .map_err(|e| format!("bad modulus in `{s}`: {e}"))?;
            Field::prime(p).map_err(|e| e.to_string())
        }
    }
}

/// What went wrong, and which exit status it maps to.
#[derive(Debug)]
pub enum CliError {
    /// Bad input, unsupported request or infeasible policy.
    Usage(String),
    /// The input parsed, but an identity fails or a check did not pass.
    Math(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Math(_) => 1,
        }
    }
}

fn mf_is_math(e: &MfError) -> bool {
    matches!(e, MfError::NotAFactorization { .. } | MfError::NotAMorphism { .. } | MfError::NotAHomotopy { .. })
}

fn qm_is_math(e: &QmError) -> bool {
    match e {
        QmError::RelationViolated { .. } | QmError::NotIntertwining => true,
        QmError::Mf(m) => mf_is_math(m),
        _ => false,
    }
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        let math = match &e {
            IoError::Mf { source, .. } => mf_is_math(source),
            IoError::Qm { source, .. } => qm_is_math(source),
            _ => false,
        };
        if math {
            CliError::Math(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl From<MfError> for CliError {
    fn from(e: MfError) -> Self {
        if mf_is_math(&e) {
            CliError::Math(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl From<QmError> for CliError {
    fn from(e: QmError) -> Self {
        if qm_is_math(&e) {
            CliError::Math(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl From<AnError> for CliError {
    fn from(e: AnError) -> Self {
        match e {
            AnError::Mf(m) => m.into(),
            AnError::Qm(q) => q.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let (CliError::Usage(msg) | CliError::Math(msg)) = &e;
            eprintln!("mfcat: {msg}");
            ExitCode::from(e.code())
        }
    }
}
