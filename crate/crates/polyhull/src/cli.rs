//! `polyhull` subcommands.
//!
//! Exit status: `0` for success or a "yes" answer, `1` for a "no" answer,
//! `2` for usage, input or dimension errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use polyhull_core::hull::{convex_hull_closure_raw, hull_many_raw};
use polyhull_core::lp::is_empty;
use polyhull_core::oracle::cross_polytope_pair;
use polyhull_core::projection::project_raw;
use polyhull_core::{
    convex_hull_closure, entails, hull_many, minimize_system, project, set_equal, Polyhedron,
};

use crate::format::{format_poly, normalize_all, parse_constraint, parse_poly, ParseError};

pub const EXIT_YES: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "polyhull",
    version,
    about = "Exact operations on closed convex polyhedra"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print `sat` (exit 0) or `unsat` (exit 1).
    Sat { file: PathBuf },
    /// Eliminate every variable not listed in `--onto`.
    Project {
        file: PathBuf,
        /// Comma-separated variables to keep, in output order.
        #[arg(long, value_delimiter = ',', required = true)]
        onto: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Skip redundancy removal.
        #[arg(long)]
        raw: bool,
    },
    /// Closure of the convex hull of all given polyhedra.
    Hull {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        raw: bool,
    },
    /// Print `yes` (exit 0) if every point of FILE satisfies CONSTRAINT, else `no` (exit 1).
    Entails { file: PathBuf, constraint: String },
    /// Remove redundant constraints and print the canonical form.
    Minimize {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print `equal` (exit 0) or `different` (exit 1).
    Equal { first: PathBuf, second: PathBuf },
    /// Emit the cross-polytope test pair or its hull.
    Crosspoly {
        #[arg(short = 'n', long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Emit::Hull)]
        emit: Emit,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        raw: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    P1,
    P2,
    Hull,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Core(#[from] polyhull_core::Error),
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = Result<T, CliError>;

fn read_poly(path: &Path) -> CliResult<Polyhedron> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    parse_poly(&text).map_err(|source| CliError::Parse {
        path: shown,
        source,
    })
}

fn emit(p: &Polyhedron, output: Option<&Path>, out: &mut dyn Write) -> CliResult<u8> {
    let text = format_poly(p);
    match output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            })?,
    }
    Ok(EXIT_YES)
}

fn answer(yes: bool, words: [&str; 2], out: &mut dyn Write) -> CliResult<u8> {
    let word = if yes { words[0] } else { words[1] };
    writeln!(out, "{word}").map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })?;
    Ok(if yes { EXIT_YES } else { EXIT_NO })
}

fn minimized(p: &Polyhedron) -> CliResult<Polyhedron> {
    if is_empty(p) {
        return Ok(Polyhedron::empty(p.vars().clone()));
    }
    let sys = minimize_system(p.system().expect("nonempty"))?;
    Ok(Polyhedron::new(p.vars().clone(), sys)?)
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<u8> {
    match cmd {
        Command::Sat { file } => answer(!is_empty(&read_poly(&file)?), ["sat", "unsat"], out),
        Command::Project {
            file,
            onto,
            output,
            raw,
        } => {
            let p = read_poly(&file)?;
            let q = if raw {
                project_raw(&p, &onto)?
            } else {
                project(&p, &onto)?
            };
            emit(&q, output.as_deref(), out)
        }
        Command::Hull { files, output, raw } => {
            let ps = files
                .iter()
                .map(|f| read_poly(f))
                .collect::<CliResult<Vec<_>>>()?;
            let h = if raw {
                hull_many_raw(&ps)?
            } else {
                hull_many(&ps)?
            };
            emit(&h, output.as_deref(), out)
        }
        Command::Entails { file, constraint } => {
            let p = read_poly(&file)?;
            let raws =
                parse_constraint(&constraint, p.vars()).map_err(|source| CliError::Parse {
                    path: "<constraint>".into(),
                    source,
                })?;
            let yes = match (p.system().filter(|_| !is_empty(&p)), normalize_all(&raws)) {
                (None, _) => true,
                (Some(_), None) => false,
                (Some(sys), Some(cs)) => {
                    let mut all = true;
                    for c in &cs {
                        all = all && entails(sys, c)?;
                    }
                    all
                }
            };
            answer(yes, ["yes", "no"], out)
        }
        Command::Minimize { file, output } => {
            emit(&minimized(&read_poly(&file)?)?, output.as_deref(), out)
        }
        Command::Equal { first, second } => {
            let p = read_poly(&first)?;
            let q = read_poly(&second)?;
            answer(set_equal(&p, &q)?, ["equal", "different"], out)
        }
        Command::Crosspoly {
            n,
            emit: which,
            output,
            raw,
        } => {
            if n == 0 {
                return Err(CliError::Usage("-n must be at least 1".into()));
            }
            let (p1, p2) = cross_polytope_pair(n);
            let p = match which {
                Emit::P1 => p1,
                Emit::P2 => p2,
                Emit::Hull if raw => convex_hull_closure_raw(&p1, &p2)?,
                Emit::Hull => convex_hull_closure(&p1, &p2)?,
            };
            if which == Emit::Hull {
                let k = p.system().map_or(0, |s| s.len());
                let _ = writeln!(err, "facets: {k}");
            }
            emit(&p, output.as_deref(), out)
        }
    }
}

/// Parse `args` (including the program name) and run the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_YES };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
