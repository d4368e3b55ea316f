use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hodge_gt::gt_basis::{gmt_basis, gt_basis_hodge, verify_basis, Basis};
use hodge_gt::selftest::{self, Options};
use hodge_gt::verify::nullspace_dim_hodge;
use hodge_gt::{AlgebraMode, Error};

#[derive(Parser)]
#[command(
    name = "hodge-gt",
    version,
    about = "Gelfand-Tsetlin bases of Hodge-de Rham solution spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a basis of H_k^s(R^m), or of the solutions with values in a set of grades.
    Generate(GenerateArgs),
    /// Check membership, orthogonality and cardinality of a stored basis.
    Verify { path: PathBuf },
    /// Print dim H_k^s(R^m) for s = 0..m.
    Dims {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        degree: u32,
    },
    /// Run the built-in property matrix.
    Selftest {
        /// Restrict to m ≤ 3.
        #[arg(long)]
        quick: bool,
        /// Corrupt one basis before verifying it.
        #[arg(long)]
        inject_fault: bool,
    },
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    degree: u32,
    #[arg(long, conflicts_with = "set", required_unless_present = "set")]
    grade: Option<usize>,
    /// Comma-separated grades.
    #[arg(long, value_delimiter = ',')]
    set: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = Algebra::Complex)]
    algebra: Algebra,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Scale each element so its leading coefficient is 1.
    #[arg(long)]
    normalize: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algebra {
    Complex,
    Real,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
    Latex,
}

enum Failure {
    Verification(String),
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) | Failure::Io(_) => 1,
            Failure::Lib(Error::SizeCap { .. }) => 3,
            Failure::Lib(
                Error::DimensionUnsupported(_)
                | Error::GradeOutOfRange { .. }
                | Error::InvalidArgument(_),
            ) => 2,
            Failure::Lib(_) => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Verification(s) | Failure::Io(s) => f.write_str(s),
            Failure::Lib(e) => write!(f, "{e}"),
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn generate(a: &GenerateArgs) -> Result<(), Failure> {
    let mode = match a.algebra {
        Algebra::Complex => AlgebraMode::Complex,
        Algebra::Real => AlgebraMode::Real,
    };
    let mut basis = match (&a.set, a.grade) {
        (Some(set), _) => gmt_basis(a.dim, a.degree, set, mode)?,
        (None, Some(s)) => gt_basis_hodge(a.dim, a.degree, s, mode)?,
        (None, None) => unreachable!("clap requires --grade or --set"),
    };
    if a.normalize {
        basis = basis.normalized();
    }
    let text = match a.format {
        Format::Json => pretty(&basis.to_json()?),
        Format::Text => basis.to_text(),
        Format::Latex => basis.to_latex(),
    };
    emit(&text, a.out.as_deref())
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

fn verify(path: &Path) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let basis = Basis::from_json(&value)?;
    let report = verify_basis(&basis)?;
    print!("{}", pretty(&report.to_json()));
    if report.ok {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "{}: verification failed",
            path.display()
        )))
    }
}

fn dims(m: usize, k: u32) -> Result<(), Failure> {
    let mut row = Vec::with_capacity(m + 1);
    for s in 0..=m {
        row.push(nullspace_dim_hodge(m, k, s)?);
    }
    println!("s\tdim H_{k}^s(R^{m})");
    for (s, d) in row.iter().enumerate() {
        println!("{s}\t{d}");
    }
    Ok(())
}

fn run_selftest(opts: Options) -> Result<(), Failure> {
    let report = selftest::run(&opts)?;
    for c in &report.checks {
        let status = if c.ok() { "ok" } else { "FAIL" };
        println!("{status:4} {} ({} cases)", c.name, c.cases);
        for f in &c.failures {
            println!("     {f}");
        }
    }
    if report.ok() {
        Ok(())
    } else {
        Err(Failure::Verification("self-test failed".into()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let dim = match &cli.command {
        Command::Generate(a) => Some(a.dim),
        Command::Dims { dim, .. } => Some(*dim),
        _ => None,
    };
    if dim.is_some_and(|m| m < 2) {
        eprintln!("error: --dim must be at least 2");
        return ExitCode::from(2);
    }
    let result = match &cli.command {
        Command::Generate(a) => generate(a),
        Command::Verify { path } => verify(path),
        Command::Dims { dim, degree } => dims(*dim, *degree),
        Command::Selftest {
            quick,
            inject_fault,
        } => run_selftest(Options {
            quick: *quick,
            inject_fault: *inject_fault,
        }),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
