//! The `detloci` command line: graph reports, τ checks, classes, the
//! wheel tables and point-count verification.

mod classes_cmd;
mod corpus_cmd;
mod error;
mod graph_cmd;
mod oracle_cmd;
pub mod report;
mod tau_cmd;
pub mod wheel;

use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};
use detloci_oracle::DEFAULT_BUDGET;

pub use error::CliError;
pub use report::{Format, Report, Table};

#[derive(Debug, Parser)]
#[command(name = "detloci", version, about = "Graph polynomials, τ maps and determinant-locus classes")]
pub struct Cli {
    /// Omit the version header line.
    #[arg(long, global = true)]
    pub no_header: bool,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Largest number of candidate tuples an enumeration may visit.
    #[arg(long, global = true, env = "DETLOCI_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reports on a graph file.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// The map τ and its injectivity.
    Tau {
        #[command(subcommand)]
        cmd: TauCmd,
    },
    /// Classes in the Grothendieck ring as polynomials in L.
    Classes {
        #[command(subcommand)]
        cmd: ClassesCmd,
    },
    /// Both 64-row tables of the wheel with three spokes, with a summary.
    Wheel3,
    /// Compares classes with brute-force point counts.
    Oracle {
        #[command(subcommand)]
        cmd: OracleCmd,
    },
    /// The built-in example graphs and seeded random graphs.
    Corpus {
        #[command(subcommand)]
        cmd: CorpusCmd,
    },
}

#[derive(Debug, Subcommand)]
pub enum GraphCmd {
    Validate {
        file: PathBuf,
    },
    Info {
        file: PathBuf,
    },
    /// Ψ from spanning trees and from det M_Γ.
    Psi {
        file: PathBuf,
    },
    /// P_Γ from the momenta stored in the file.
    Pgamma {
        file: PathBuf,
    },
    Connectivity {
        file: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct BasisArgs {
    pub file: PathBuf,
    /// Index of the face treated as external (default: the last one).
    #[arg(long)]
    pub external_face: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum TauCmd {
    Matrix {
        #[command(flatten)]
        basis: BasisArgs,
    },
    /// Rank verdict, certificate chain and the selection Σ̂_Γ.
    Check {
        #[command(flatten)]
        basis: BasisArgs,
        /// Only the rank verdict; works without a rotation system.
        #[arg(long)]
        rank_only: bool,
    },
}

#[derive(Debug, Args)]
pub struct SelectionArgs {
    #[arg(long)]
    pub loops: usize,
    #[arg(long, default_value_t = 0)]
    pub genus: usize,
    /// Components as a bit string in canonical order, e.g. 110001.
    #[arg(long)]
    pub selection: String,
}

#[derive(Debug, Subcommand)]
pub enum ClassesCmd {
    /// [𝔸^{ℓ²} ∖ D̂_ℓ], or its projective version.
    DetComplement {
        #[arg(long)]
        loops: usize,
        #[arg(long)]
        projective: bool,
        /// Primes at which to compare with point counts.
        #[arg(long, value_delimiter = ',')]
        verify: Vec<u64>,
    },
    /// [D̂_ℓ], or its projective version.
    DetHypersurface {
        #[arg(long)]
        loops: usize,
        #[arg(long)]
        projective: bool,
    },
    /// Invertible matrices on every selected component.
    Frames {
        #[command(flatten)]
        sel: SelectionArgs,
        #[arg(long, value_delimiter = ',')]
        verify: Vec<u64>,
    },
    /// Invertible matrices on exactly the selected components.
    Stratum {
        #[command(flatten)]
        sel: SelectionArgs,
        #[arg(long, value_delimiter = ',')]
        verify: Vec<u64>,
    },
    /// Invertible matrices on at least one selected component.
    SigmaComplement {
        #[command(flatten)]
        sel: SelectionArgs,
    },
    /// Two-frame class from d1,d2,d12.
    R2 {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
    },
    /// Three-frame class from d1,d2,d3,d12,d13,d23,d123,D.
    R3 {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        /// Also evaluate the symmetric closed expression.
        #[arg(long)]
        closed: bool,
    },
    /// Frames in a nested chain with the given dimensions.
    Chain {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCmd {
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("target").required(true).args(["wheel3", "det", "grf3_closed"])))]
pub struct VerifyArgs {
    /// All 64 intersections and 64 strata of the wheel sweep.
    #[arg(long)]
    pub wheel3: bool,
    /// The determinant complement for --loops.
    #[arg(long)]
    pub det: bool,
    /// The closed three-frame expression on its registered fixtures.
    #[arg(long)]
    pub grf3_closed: bool,
    #[arg(long, default_value_t = 3)]
    pub loops: usize,
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    pub q: Vec<u64>,
}

#[derive(Debug, Subcommand)]
pub enum CorpusCmd {
    List,
    /// Prints a named graph in the graph file format.
    Show {
        name: String,
    },
    /// Prints seeded random graphs, one JSON object per line.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Embedded plane graphs instead of multigraphs.
        #[arg(long)]
        planar: bool,
        #[arg(long, default_value_t = 10)]
        max_edges: usize,
    },
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Graph { cmd } => graph_cmd::run(cmd),
        Command::Tau { cmd } => tau_cmd::run(cmd),
        Command::Classes { cmd } => classes_cmd::run(cmd, cli.budget),
        Command::Wheel3 => wheel::report(),
        Command::Oracle { cmd: OracleCmd::Verify(args) } => oracle_cmd::verify(args, cli.budget),
        Command::Corpus { cmd } => corpus_cmd::run(cmd),
    }
}

/// Parses arguments, runs the command and returns `(stdout, stderr, exit code)`.
pub fn execute<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (text, String::new(), 0) } else { (String::new(), text, 2) };
        }
    };
    match run(&cli) {
        Ok(r) => (r.render(cli.format, !cli.no_header), String::new(), r.code),
        Err(e) => (String::new(), format!("error: {e}\n"), e.exit_code()),
    }
}

pub(crate) fn load_graph(path: &std::path::Path) -> Result<detloci_graph::FeynmanGraph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    detloci_graph::FeynmanGraph::from_json(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}
