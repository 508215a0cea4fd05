//! Argument parsing and dispatch. `run` is the whole program minus the
//! process boundary, so tests can drive it in-process.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use lietriple::catalog::WittSpec;
use lietriple::exactlin::parse_rational;
use lietriple::mlin::DEFAULT_BUDGET;
use lietriple::{Budget, Rational};
use serde_json::json;

use crate::commands::{self, CmdResult, ComplexKind, Failure, Induced};
use crate::format;
use crate::output::{render_json, render_text, Outcome};

/// Optional override for the default coefficient budget.
pub const BUDGET_VAR: &str = "LIETRIPLE_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "lietriple", version, about = "Exact checks for Lie triple systems and generalized Reynolds operators")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    /// Largest number of coefficients a dense object may have.
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    /// Seed for randomized constructions.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_levels(s: &str) -> Result<Vec<usize>, String> {
    s.split(',').map(|p| p.trim().parse::<usize>().map_err(|_| format!("invalid level {p:?}"))).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComplexArg {
    Yamaguti,
    Reynolds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InduceArg {
    Lts,
    Ns,
    Rep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BlockVariant {
    /// The coefficient `(n(i+q) − m(j+q))(p(i+j+q) − (m+n)(p+q))`.
    Printed,
    /// `(n(i+q) − m(j+q))(p(i+j+q) − (m+n)(k+q))`, from the Block Lie algebra.
    LieDerived,
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// Truncated Witt algebra `l_0 … l_N`.
    Witt {
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        lambda: Rational,
    },
    /// Block-type triple system on `L_{m,i}`, `m+i ≤ N`.
    Block {
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        lambda: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        q: Rational,
        #[arg(long, value_enum, default_value_t = BlockVariant::Printed)]
        variant: BlockVariant,
        /// Emit the structure even when it fails its axioms.
        #[arg(long)]
        unchecked: bool,
    },
    /// A seeded generalized Reynolds operator (uses --seed).
    Random {
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every structure the file declares.
    Verify { file: PathBuf },
    /// Cohomology dimensions of the pair (arities 1,3,…) or of the operator (levels 0,1,…).
    Cohomology {
        file: PathBuf,
        /// Comma-separated, e.g. `1,3`.
        #[arg(long)]
        levels: String,
        #[arg(long, value_enum, default_value_t = ComplexArg::Yamaguti)]
        complex: ComplexArg,
    },
    /// Weighted and generalized Reynolds identities, graph and Maurer-Cartan forms.
    ReynoldsCheck { file: PathBuf },
    /// Maurer-Cartan residual of `map_t`.
    Mc { file: PathBuf },
    /// Twisted Maurer-Cartan residual of `perturbation` around `map_t`.
    TwistedMc { file: PathBuf },
    /// Obstruction of the declared deformation.
    Obstruction { file: PathBuf },
    /// Extend the declared deformation by one order.
    Extend { file: PathBuf },
    /// Structures induced by `map_t`.
    Induce {
        #[arg(value_enum)]
        what: InduceArg,
        file: PathBuf,
    },
    /// Emit an example as an algebra file.
    Catalog {
        #[command(subcommand)]
        which: CatalogCommand,
    },
    /// Check a morphism and push cochains along it.
    Transport {
        source: PathBuf,
        target: PathBuf,
        witness: PathBuf,
        #[arg(long, default_value_t = 1)]
        level: usize,
    },
    /// Compare two deformations of the same operator.
    Equivalence { first: PathBuf, second: PathBuf, witness: Option<PathBuf> },
}

/// Exit status and the bytes written to stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn budget_of(cli: &Cli) -> Budget {
    let from_env = std::env::var(BUDGET_VAR).ok().and_then(|v| v.parse().ok());
    Budget(cli.budget.or(from_env).unwrap_or(DEFAULT_BUDGET))
}

fn render(cli: &Cli, o: &Outcome) -> String {
    match cli.output {
        OutputFormat::Text => render_text(o),
        OutputFormat::Json => render_json(o),
    }
}

fn catalog(cli: &Cli, which: &CatalogCommand, o: &mut Outcome) -> CmdResult<Option<String>> {
    let file = match which {
        CatalogCommand::Witt { max_degree, lambda } => {
            commands::witt_file(&WittSpec { max_degree: *max_degree, lambda: lambda.clone() })
        }
        CatalogCommand::Block { max_degree, lambda, q, variant, unchecked } => {
            let spec = commands::block_spec(q.clone(), *max_degree, lambda.clone(), *variant == BlockVariant::LieDerived);
            commands::block_file(&spec, !unchecked)
        }
        CatalogCommand::Random { max_dim } => commands::random_file(cli.seed, *max_dim).map(|(_, f)| f),
    };
    match file {
        Ok(f) => Ok(Some(format::emit(&f))),
        Err(Failure::Core(lietriple::Error::PostconditionFailed { what, report })) => {
            o.blocked("catalog construction", what, *report);
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

fn dispatch(cli: &Cli, o: &mut Outcome) -> CmdResult<Option<String>> {
    let budget = budget_of(cli);
    match &cli.command {
        Command::Verify { file } => commands::verify(o, &commands::load(file)?)?,
        Command::Cohomology { file, levels, complex } => {
            let kind = match complex {
                ComplexArg::Yamaguti => ComplexKind::Yamaguti,
                ComplexArg::Reynolds => ComplexKind::Reynolds,
            };
            let levels = parse_levels(levels).map_err(Failure::Usage)?;
            commands::cohomology(o, &commands::load(file)?, &levels, kind, budget)?
        }
        Command::ReynoldsCheck { file } => commands::reynolds_check(o, &commands::load(file)?)?,
        Command::Mc { file } => commands::mc(o, &commands::load(file)?)?,
        Command::TwistedMc { file } => commands::twisted_mc(o, &commands::load(file)?)?,
        Command::Obstruction { file } => commands::obstruction(o, &commands::load(file)?, budget)?,
        Command::Extend { file } => commands::extend(o, &commands::load(file)?, budget)?,
        Command::Induce { what, file } => {
            let what = match what {
                InduceArg::Lts => Induced::Lts,
                InduceArg::Ns => Induced::Ns,
                InduceArg::Rep => Induced::Rep,
            };
            commands::induce(o, &commands::load(file)?, what)?
        }
        Command::Catalog { which } => return catalog(cli, which, o),
        Command::Transport { source, target, witness, level } => {
            let (s, t, w) = (commands::load(source)?, commands::load(target)?, commands::load(witness)?);
            commands::transport(o, &s, &t, &w, *level, budget)?
        }
        Command::Equivalence { first, second, witness } => {
            let w = witness.as_ref().map(|p| commands::load(p)).transpose()?;
            commands::equivalence(o, &commands::load(first)?, &commands::load(second)?, w.as_ref())?
        }
    }
    Ok(None)
}

/// Runs one invocation; `args` excludes the program name.
pub fn run<I, S>(args: I) -> Run
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(std::iter::once("lietriple".to_string()).chain(args.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Run { code, stdout: text, stderr: String::new() }
            } else {
                Run { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut o = Outcome::new(args.join(" "));
    match dispatch(&cli, &mut o) {
        Ok(Some(file)) => {
            let stdout = match cli.output {
                OutputFormat::Text => file,
                OutputFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&json!({ "command": o.command, "status": "ok", "file": file })).expect("serializable");
                    s.push('\n');
                    s
                }
            };
            Run { code: 0, stdout, stderr: String::new() }
        }
        Ok(None) => Run { code: if o.passed() { 0 } else { 1 }, stdout: render(&cli, &o), stderr: String::new() },
        Err(e) => {
            let code = e.exit_code();
            let stderr = match cli.output {
                OutputFormat::Text => format!("error: {e}\n"),
                OutputFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&json!({ "command": o.command, "status": "error", "exit_code": code, "error": e.to_string() }))
                        .expect("serializable");
                    s.push('\n');
                    s
                }
            };
            Run { code, stdout: String::new(), stderr }
        }
    }
}
