//! Command-line front end behind the `fcolor` binary.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 out of scope, 4 resource cap.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::admissible::{greedy_partition, PartitionError};
use crate::composer::{pipeline, verify, ColoringCertificate, PipelineConfig, PipelineError};
use crate::graph::generate::{random_subcubic_triangle_free, GenConfig};
use crate::graph::{catalog, io, Graph, GraphError, DEFAULT_MIS_CAP};
use crate::lp::fractional_chromatic_number_with_cap;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_OUT_OF_SCOPE: i32 = 3;
pub const EXIT_RESOURCE_CAP: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "fcolor", version, about = "Exact fractional chromatic numbers and a:b coloring certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the exact fractional chromatic number.
    Chif {
        /// Edge-list file or builtin name (see `catalog`).
        input: String,
        #[arg(long, default_value_t = DEFAULT_MIS_CAP)]
        mis_cap: usize,
        /// Write the optimal set weights as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and check an a:b coloring certificate.
    Certify {
        input: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 32)]
        retries: usize,
        #[arg(long, default_value_t = DEFAULT_MIS_CAP)]
        mis_cap: usize,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Fail instead of solving the LP when no composed certificate is found.
        #[arg(long)]
        no_fallback: bool,
        /// Certificate path; printed to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against a graph.
    Verify { graph: String, certificate: PathBuf },
    /// Generate a random connected triangle-free graph of maximum degree 3.
    Gen {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        girth_max: Option<usize>,
        #[arg(long)]
        two_connected: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the greedy admissible partition of a block.
    Partition {
        input: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List builtin graph names, or print one as an edge list.
    Catalog { name: Option<String> },
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        let code = match e {
            GraphError::TooLarge { .. } => EXIT_RESOURCE_CAP,
            _ => EXIT_INVALID_INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        let code = match e {
            PipelineError::TooLarge(_) => EXIT_RESOURCE_CAP,
            PipelineError::Internal(_) => EXIT_VERIFY_FAILED,
            _ => EXIT_OUT_OF_SCOPE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<PartitionError> for Failure {
    fn from(e: PartitionError) -> Self {
        let code = match e {
            PartitionError::NoFeasibleColor { .. } => EXIT_VERIFY_FAILED,
            PartitionError::ReservedNotAdjacent(..) => EXIT_INVALID_INPUT,
            _ => EXIT_OUT_OF_SCOPE,
        };
        Failure::new(code, e.to_string())
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::new(EXIT_INVALID_INPUT, format!("{}: {e}", path.display()))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| io_failure(p, e)),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::new(EXIT_INVALID_INPUT, e.to_string())),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_INVALID_INPUT;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    let say = |out: &mut dyn Write, line: String| -> Result<(), Failure> {
        writeln!(out, "{line}").map_err(|e| Failure::new(EXIT_INVALID_INPUT, e.to_string()))
    };
    match command {
        Command::Chif { input, mis_cap, out: path } => {
            let g = io::load(&input)?;
            let (value, sol) = fractional_chromatic_number_with_cap(&g, mis_cap).map_err(|e| match e {
                crate::lp::LpError::Graph(ge) => Failure::from(ge),
                other => Failure::new(EXIT_VERIFY_FAILED, other.to_string()),
            })?;
            if let Some(p) = path {
                let json = serde_json::to_string_pretty(&sol).expect("solution serializes");
                std::fs::write(&p, json + "\n").map_err(|e| io_failure(&p, e))?;
            }
            say(out, value.to_string())
        }
        Command::Certify {
            input,
            seed,
            retries,
            mis_cap,
            jobs,
            no_fallback,
            out: path,
        } => {
            let g = io::load(&input)?;
            let config = PipelineConfig {
                seed,
                max_retries: retries,
                lp_fallback: !no_fallback,
                mis_cap,
                jobs,
                ..PipelineConfig::default()
            };
            let cert = pipeline(&g, &config)?;
            let json = cert.to_json() + "\n";
            let path_name = match cert.provenance.path {
                crate::composer::PipelinePath::Composed => "composed",
                crate::composer::PipelinePath::LpFallback => "lp_fallback",
            };
            let summary = format!("{} {path_name} a={} b={} retries={}", cert.ratio, cert.a, cert.b, cert.provenance.retries);
            match path {
                Some(p) => {
                    emit(out, Some(&p), &json)?;
                    say(out, summary)
                }
                None => emit(out, None, &json),
            }
        }
        Command::Verify { graph, certificate } => {
            let g = io::load(&graph)?;
            let text = std::fs::read_to_string(&certificate).map_err(|e| io_failure(&certificate, e))?;
            let cert = ColoringCertificate::from_json(&text)
                .map_err(|e| Failure::new(EXIT_INVALID_INPUT, format!("{}: {e}", certificate.display())))?;
            verify(&g, &cert).map_err(|e| Failure::new(EXIT_VERIFY_FAILED, e.to_string()))?;
            say(out, format!("ok {}", cert.ratio))
        }
        Command::Gen {
            n,
            seed,
            girth_max,
            two_connected,
            out: path,
        } => {
            let cfg = GenConfig {
                n,
                seed,
                girth_max,
                two_connected,
            };
            let g: Graph = random_subcubic_triangle_free(&cfg)
                .ok_or_else(|| Failure::new(EXIT_INVALID_INPUT, format!("no graph found for {cfg:?}")))?;
            emit(out, path.as_deref(), &io::write_edge_list(&g))
        }
        Command::Partition { input, seed, out: path } => {
            let g = io::load(&input)?;
            let gp = greedy_partition(&g, seed)?;
            let json = serde_json::to_string_pretty(&gp.partition.triples).expect("partition serializes") + "\n";
            emit(out, path.as_deref(), &json)
        }
        Command::Catalog { name } => match name {
            Some(name) => {
                let g = catalog::builtin(&name)?;
                emit(out, None, &io::write_edge_list(&g))
            }
            None => catalog::BUILTIN_NAMES.iter().try_for_each(|n| say(out, n.to_string())),
        },
    }
}
