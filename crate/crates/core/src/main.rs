//! `tagsub`: command-line front end.
//!
//! Verdicts are reported through the exit status as well as on stdout, so
//! commands can be used as shell predicates: 0 for true, 1 for false, 2 for
//! errors. `dispatch` uses 3 for "no applicable method" and 4 for ambiguity.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tagsub::derivation::synthesize;
use tagsub::dispatch::{DispatchOutcome, MethodTable};
use tagsub::files::{parse_call, parse_hierarchy, parse_methods};
use tagsub::normalize::{nf, nf_atomic};
use tagsub::semantics::{interp, matches};
use tagsub::subtyping::{equivalent, reductive_sub};
use tagsub::syntax::{parse_type, print_type_grouped};
use tagsub::{Mode, NominalHierarchy, Strategy, TypeExpr};

#[derive(Parser)]
#[command(
    name = "tagsub",
    version,
    about = "Tag-based semantic subtyping and multiple dispatch"
)]
struct Cli {
    /// Hierarchy file; defaults to the built-in numeric tower
    /// (Num, Real <: Num, Int/Flt <: Real, Cmplx <: Num, Str).
    #[arg(long, global = true, value_name = "FILE")]
    hierarchy: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide T1 <: T2.
    Check {
        t1: String,
        t2: String,
        #[arg(long, default_value_t = Mode::Semantic)]
        mode: Mode,
        #[arg(long, default_value_t = Strategy::NormalizeFirst)]
        strategy: Strategy,
        /// Print the reductive derivation.
        #[arg(long)]
        trace: bool,
        /// Print a declarative derivation built from the reductive one.
        #[arg(long)]
        derivation: bool,
    },
    /// Print the normal form of T.
    Nf {
        t: String,
        /// Keep abstract names instead of expanding them.
        #[arg(long)]
        atomic: bool,
    },
    /// Print the set of tags T denotes.
    Interp {
        t: String,
        #[arg(long, default_value_t = Mode::Semantic)]
        mode: Mode,
    },
    /// Decide whether value type V matches T.
    Match { v: String, t: String },
    /// Decide whether T1 and T2 are subtypes of each other.
    Eq {
        t1: String,
        t2: String,
        #[arg(long, default_value_t = Mode::Semantic)]
        mode: Mode,
    },
    /// Resolve a call against a method file.
    Dispatch {
        #[arg(long, value_name = "FILE")]
        methods: PathBuf,
        /// The call, `<fn> <type>`, e.g. "add Flt*Int".
        #[arg(long)]
        call: String,
        /// Overrides the method file's `mode` line.
        #[arg(long)]
        mode: Option<Mode>,
    },
    /// Hierarchy file utilities.
    Hierarchy {
        #[command(subcommand)]
        command: HierarchyCommand,
    },
}

#[derive(Subcommand)]
enum HierarchyCommand {
    /// Check that a hierarchy file is well formed.
    Validate {
        #[arg(long, value_name = "FILE")]
        file: PathBuf,
    },
}

type CliResult = Result<ExitCode, String>;

fn verdict(b: bool) -> ExitCode {
    println!("{b}");
    if b {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_hierarchy(path: Option<&Path>) -> Result<NominalHierarchy, String> {
    match path {
        None => Ok(NominalHierarchy::builtin()),
        Some(path) => parse_hierarchy(&read(path)?).map_err(|e| format!("{}: {e}", path.display())),
    }
}

fn ty(src: &str, h: &NominalHierarchy) -> Result<TypeExpr, String> {
    parse_type(src, h).map_err(|e| format!("in `{src}`: {e}"))
}

fn run(cli: Cli) -> CliResult {
    if let Command::Hierarchy {
        command: HierarchyCommand::Validate { file },
    } = &cli.command
    {
        let h = load_hierarchy(Some(file))?;
        println!("ok: {} names", h.len());
        return Ok(ExitCode::SUCCESS);
    }
    let h = load_hierarchy(cli.hierarchy.as_deref())?;
    let err = |e: tagsub::Error| e.to_string();
    match cli.command {
        Command::Check {
            t1,
            t2,
            mode,
            strategy,
            trace,
            derivation,
        } => {
            let (t1, t2) = (ty(&t1, &h)?, ty(&t2, &h)?);
            let (holds, tr) = reductive_sub(&h, &t1, &t2, mode, strategy).map_err(err)?;
            let code = verdict(holds);
            if let Some(tr) = tr {
                if trace {
                    print!("{tr}");
                }
                if derivation {
                    print!("{}", synthesize(&h, &tr, mode).map_err(err)?);
                }
            }
            Ok(code)
        }
        Command::Nf { t, atomic } => {
            let t = ty(&t, &h)?;
            let n = if atomic {
                nf_atomic(&t)
            } else {
                nf(&h, &t).map_err(err)?
            };
            println!("{}", print_type_grouped(&n));
            Ok(ExitCode::SUCCESS)
        }
        Command::Interp { t, mode } => {
            println!("{}", interp(&h, &ty(&t, &h)?, mode).map_err(err)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Match { v, t } => Ok(verdict(
            matches(&h, &ty(&v, &h)?, &ty(&t, &h)?).map_err(err)?,
        )),
        Command::Eq { t1, t2, mode } => Ok(verdict(
            equivalent(&h, &ty(&t1, &h)?, &ty(&t2, &h)?, mode).map_err(err)?,
        )),
        Command::Dispatch {
            methods,
            call,
            mode,
        } => {
            let file = parse_methods(&read(&methods)?, &h)
                .map_err(|e| format!("{}: {e}", methods.display()))?;
            let mode = mode.or(file.mode).unwrap_or_default();
            let table = MethodTable::from_program(h.clone(), mode, file.methods).map_err(err)?;
            let (function, call) = parse_call(&call, &h).map_err(|e| format!("in call: {e}"))?;
            Ok(match table.resolve(&function, &call).map_err(err)? {
                DispatchOutcome::Selected(m) => {
                    println!("selected: {}", m.body);
                    ExitCode::SUCCESS
                }
                DispatchOutcome::NoApplicableMethod => {
                    println!("error: no-method");
                    ExitCode::from(3)
                }
                DispatchOutcome::Ambiguous(ms) => {
                    let labels: Vec<&str> = ms.iter().map(|m| m.body.as_str()).collect();
                    println!("error: ambiguous [{}]", labels.join(", "));
                    ExitCode::from(4)
                }
            })
        }
        Command::Hierarchy { .. } => unreachable!("handled above"),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
