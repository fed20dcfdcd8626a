//! Command-line front end. Every subcommand prints one JSON document on stdout.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::algebra::{check_odd_prime, PolyJson};
use crate::error::Error;
use crate::graph::{Graph, GraphDoc};
use crate::json::to_pretty;
use crate::linalg::{charpoly_int, laplacian_charpoly, PsiSign};
use crate::obstruct::{run_report, verify_action, Conventions, GraphSummary, ReportEntry};
use crate::rank_poly::DEFAULT_EDGE_CAP;
use crate::symmetry::{
    edge_orbit_graph, find_free_actions, generate_periodic, quotient_graph, validate_action,
    ActionDoc, CyclicAction, DEFAULT_SEARCH_CAP,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Exact graph polynomials and obstructions to free cyclic symmetry.
///
/// Primes must be odd; p = 2 is rejected. Exit codes: 0 on completion
/// (whatever the verdicts), 2 on bad input, 3 when a size cap is exceeded.
#[derive(Debug, Parser)]
#[command(name = "graphpoly", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Adjacency and Laplacian characteristic polynomials.
    Polys {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "plus")]
        psi_sign: PsiSign,
    },
    /// Screening report: obstructions to a free order-p automorphism.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        #[arg(long, default_value = "plus")]
        psi_sign: PsiSign,
        #[arg(long, default_value_t = DEFAULT_EDGE_CAP)]
        edge_cap: usize,
    },
    /// Congruences between a graph and its quotient under a given action.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        action: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EDGE_CAP)]
        edge_cap: usize,
    },
    /// Quotient graph under a given action, as graph JSON.
    Quotient {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        action: PathBuf,
    },
    /// Random graph with a free Z/p action on p*s vertices.
    Generate {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_weight: u64,
    },
    /// All free automorphisms of order p (exhaustive, small graphs only).
    Search {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
        cap: usize,
    },
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_cap_exceeded() {
                EXIT_CAP
            } else {
                EXIT_INPUT
            },
            message: e.to_string(),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(Graph::from_json(&read(path)?)?)
}

fn load_action(g: &Graph, path: &Path) -> Result<CyclicAction, Failure> {
    let doc = ActionDoc::from_json(&read(path)?)?;
    Ok(validate_action(g, &doc.perm, doc.p)?)
}

#[derive(Serialize)]
struct PolysOut {
    n: usize,
    conventions: Conventions,
    phi: PolyJson,
    psi: PolyJson,
    phi_text: String,
    psi_text: String,
}

#[derive(Serialize)]
struct VerifyOut {
    graph: GraphSummary,
    action: ActionDoc,
    quotient: GraphDoc,
    edge_orbit_quotient: GraphDoc,
    checks: Vec<ReportEntry>,
}

#[derive(Serialize)]
struct GenerateOut {
    graph: GraphDoc,
    action: ActionDoc,
}

/// Runs one command and returns its stdout text.
pub fn execute(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Polys { input, psi_sign } => {
            let g = load_graph(&input)?;
            let phi = charpoly_int(&g.adjacency_matrix());
            let psi = laplacian_charpoly(&g, psi_sign);
            Ok(to_pretty(&PolysOut {
                n: g.n(),
                conventions: Conventions::new(psi_sign, DEFAULT_EDGE_CAP),
                phi: phi.to_json(),
                psi: psi.to_json(),
                phi_text: phi.to_string(),
                psi_text: psi.to_string(),
            }))
        }
        Command::Check {
            input,
            primes,
            psi_sign,
            edge_cap,
        } => {
            let g = load_graph(&input)?;
            for &p in &primes {
                check_odd_prime(p)?;
            }
            Ok(run_report(&g, &primes, psi_sign, edge_cap).to_json())
        }
        Command::Verify {
            input,
            action,
            edge_cap,
        } => {
            let g = load_graph(&input)?;
            let a = load_action(&g, &action)?;
            Ok(to_pretty(&VerifyOut {
                graph: GraphSummary::of(&g),
                action: a.to_doc(),
                quotient: quotient_graph(&g, &a).to_doc(),
                edge_orbit_quotient: edge_orbit_graph(&g, &a).to_doc(),
                checks: verify_action(&g, &a, edge_cap),
            }))
        }
        Command::Quotient { input, action } => {
            let g = load_graph(&input)?;
            let a = load_action(&g, &action)?;
            Ok(format!("{}\n", quotient_graph(&g, &a).to_json()))
        }
        Command::Generate {
            s,
            p,
            seed,
            max_weight,
        } => {
            let (g, a) = generate_periodic(s, p, seed, max_weight)?;
            Ok(to_pretty(&GenerateOut {
                graph: g.to_doc(),
                action: a.to_doc(),
            }))
        }
        Command::Search { input, p, cap } => {
            let g = load_graph(&input)?;
            Ok(to_pretty(&find_free_actions(&g, p, cap)?))
        }
    }
}

/// Parses `args`, runs, prints, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(cli) {
        Ok(out) => {
            print!("{out}");
            EXIT_OK
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}
