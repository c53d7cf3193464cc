use clap::{Args, Parser, Subcommand};
use mcd_cli::{crosscheck, params_from_cli, InstanceSpaceSpec};
use mcd_core::cayley::build_mixed;
use mcd_core::error::Error;
use mcd_core::report::{analyze, classify, ParamsDocument, SCHEMA_VERSION};
use mcd_core::DEFAULT_GROUP_CAP;
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_USAGE: u8 = 1;
const EXIT_NOT_STRONG: u8 = 2;
const EXIT_CAPACITY: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

#[derive(Parser)]
#[command(name = "mcd", about = "Mixed Cayley digraph analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InstanceArgs {
    /// Group spec: Zn, Dn, Sn, or `A x B`.
    #[arg(long)]
    group: String,
    /// Comma-separated element indices; `none` for the empty set.
    #[arg(long, default_value = "none")]
    s0: String,
    #[arg(long, default_value = "none")]
    s1: String,
    #[arg(long)]
    t0: String,
    #[arg(long)]
    t1: String,
}

#[derive(Subcommand)]
enum Command {
    /// Build the digraph and report connectivity, atoms, and labels.
    Analyze {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Vertex cap for exhaustive atom/fragment search.
        #[arg(long, default_value_t = 20)]
        atom_cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run only the group-theoretic checkers (no flow computation).
    Classify {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate an instance space and cross-validate the theorem
    /// verdicts against direct computation.
    Crosscheck {
        /// Comma-separated group specs.
        #[arg(long, conflicts_with = "space_file")]
        groups: Option<String>,
        #[arg(long, default_value_t = 2)]
        s_max: usize,
        #[arg(long, default_value_t = 2)]
        t_max: usize,
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// JSON file holding a full InstanceSpaceSpec.
        #[arg(long)]
        space_file: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the digraph as DOT or a params+graph JSON document.
    Export {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, default_value = "dot")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct ExportDocument {
    schema_version: u32,
    params: ParamsDocument,
    vertex_count: usize,
    vertex_labels: Vec<String>,
    arcs: Vec<(usize, usize)>,
}

fn error_exit(e: &Error) -> ExitCode {
    let code = match e {
        Error::NotStronglyConnected => EXIT_NOT_STRONG,
        Error::Capacity { .. } => EXIT_CAPACITY,
        _ => EXIT_USAGE,
    };
    eprintln!("error: {e}");
    ExitCode::from(code)
}

fn emit(content: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.exit_code() == 0 { 0 } else { EXIT_USAGE });
        }
    };
    match cli.command {
        Command::Analyze {
            instance,
            atom_cap,
            out,
        } => {
            let p = match params_from_cli(
                &instance.group,
                &instance.s0,
                &instance.s1,
                &instance.t0,
                &instance.t1,
            ) {
                Ok(p) => p,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return ExitCode::from(EXIT_USAGE);
                }
            };
            match analyze(&p, atom_cap) {
                Ok(doc) => {
                    let json = serde_json::to_string_pretty(&doc).expect("serializable");
                    emit(&json, out.as_ref()).expect("write output");
                    ExitCode::SUCCESS
                }
                Err(e) => error_exit(&e),
            }
        }
        Command::Classify { instance, out } => {
            let p = match params_from_cli(
                &instance.group,
                &instance.s0,
                &instance.s1,
                &instance.t0,
                &instance.t1,
            ) {
                Ok(p) => p,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return ExitCode::from(EXIT_USAGE);
                }
            };
            match classify(&p, DEFAULT_GROUP_CAP) {
                Ok(doc) => {
                    let json = serde_json::to_string_pretty(&doc).expect("serializable");
                    emit(&json, out.as_ref()).expect("write output");
                    ExitCode::SUCCESS
                }
                Err(e) => error_exit(&e),
            }
        }
        Command::Crosscheck {
            groups,
            s_max,
            t_max,
            sample,
            seed,
            space_file,
            out,
        } => {
            let spec = if let Some(path) = space_file {
                let content = match std::fs::read_to_string(&path) {
                    Ok(c) => c,
                    Err(e) => {
                        eprintln!("error: cannot read {}: {e}", path.display());
                        return ExitCode::from(EXIT_USAGE);
                    }
                };
                match serde_json::from_str::<InstanceSpaceSpec>(&content) {
                    Ok(s) => s,
                    Err(e) => {
                        eprintln!("error: bad space file: {e}");
                        return ExitCode::from(EXIT_USAGE);
                    }
                }
            } else {
                let names: Vec<&str> = groups
                    .as_deref()
                    .unwrap_or("")
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .collect();
                let mut spec = InstanceSpaceSpec::exhaustive(&names, s_max, t_max);
                spec.sample_limit = sample;
                spec.seed = seed;
                spec
            };
            match crosscheck(&spec) {
                Ok(result) => {
                    let json = serde_json::to_string_pretty(&result).expect("serializable");
                    emit(&json, out.as_ref()).expect("write output");
                    if result.mismatches.is_empty() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(EXIT_MISMATCH)
                    }
                }
                Err(e) => error_exit(&e),
            }
        }
        Command::Export {
            instance,
            format,
            out,
        } => {
            let p = match params_from_cli(
                &instance.group,
                &instance.s0,
                &instance.s1,
                &instance.t0,
                &instance.t1,
            ) {
                Ok(p) => p,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return ExitCode::from(EXIT_USAGE);
                }
            };
            let x = match build_mixed(&p) {
                Ok(x) => x,
                Err(e) => return error_exit(&e),
            };
            match format.as_str() {
                "dot" => {
                    emit(&x.to_dot(), out.as_ref()).expect("write output");
                    ExitCode::SUCCESS
                }
                "json" => {
                    let doc = ExportDocument {
                        schema_version: SCHEMA_VERSION,
                        params: ParamsDocument::from_params(&p),
                        vertex_count: x.vertex_count,
                        vertex_labels: p.vertex_labels(),
                        arcs: x.arcs(),
                    };
                    let json = serde_json::to_string_pretty(&doc).expect("serializable");
                    emit(&json, out.as_ref()).expect("write output");
                    ExitCode::SUCCESS
                }
                other => {
                    eprintln!("error: unknown format `{other}` (expected dot or json)");
                    ExitCode::from(EXIT_USAGE)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    run()
}
