mod commands;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{render, RunManifest};

#[derive(Parser, Debug)]
#[command(name = "geomgraph", version, about = "Graph minors, dimension-raising complexes, sphere certificates and discharging")]
pub struct Cli {
    /// Worker threads; every command is currently sequential.
    #[arg(long, global = true, env = "GEOMGRAPH_THREADS", default_value_t = 1)]
    pub threads: usize,

    #[command(subcommand)]
    pub group: Group,
}

#[derive(Subcommand, Debug)]
pub enum Group {
    /// Connectivity, contraction, bridges, ears, separations, layers.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Minor containment and sampling of minor-free graphs.
    #[command(subcommand)]
    Minor(MinorCmd),
    /// Dimension raising, regions, closedness, face vectors.
    #[command(subcommand)]
    Complex(ComplexCmd),
    /// Homology, fundamental group and sphere certificates.
    #[command(subcommand)]
    Certify(CertifyCmd),
    /// Vertex coloring and average degree audits.
    #[command(subcommand)]
    Color(ColorCmd),
    /// Discharging ledgers, cell colorings, dual graphs.
    #[command(subcommand)]
    Discharge(DischargeCmd),
}

#[derive(Args, Debug)]
pub struct GraphFile {
    /// Graph in edge-list or JSON form.
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct ComplexFile {
    /// Complex in JSON form.
    pub file: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum GraphCmd {
    /// Vertex connectivity, or local connectivity between --s and --t.
    Connectivity {
        #[command(flatten)]
        input: GraphFile,
        #[arg(long, requires = "t")]
        s: Option<usize>,
        #[arg(long, requires = "s")]
        t: Option<usize>,
    },
    /// Contract one edge.
    Contract {
        #[command(flatten)]
        input: GraphFile,
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        edge: Vec<usize>,
    },
    /// Find an edge whose contraction keeps the graph k-connected.
    Contractible {
        #[command(flatten)]
        input: GraphFile,
        #[arg(long)]
        k: usize,
    },
    /// Bridges of a cycle and how each pair of them relates.
    Bridges {
        #[command(flatten)]
        input: GraphFile,
        /// Cycle vertices in order, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        cycle: Vec<usize>,
    },
    /// Ear decomposition of a 2-connected graph, or check a given one.
    Ears {
        #[command(flatten)]
        input: GraphFile,
        /// JSON `{"cycle": [...], "ears": [[...], ...]}` to verify instead.
        #[arg(long)]
        verify: Option<PathBuf>,
    },
    /// Marked decomposition at a separating set.
    Sdecomp {
        #[command(flatten)]
        input: GraphFile,
        #[arg(long, value_delimiter = ',', required = true)]
        cut: Vec<usize>,
    },
    /// Breadth-first layers from a root.
    Layers {
        #[command(flatten)]
        input: GraphFile,
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// Random stacked planar triangulation.
    StackedPlanar {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum MinorCmd {
    /// Search for a K_t minor; exit 1 when there is none.
    Clique {
        #[command(flatten)]
        input: GraphFile,
        #[arg(long)]
        t: usize,
    },
    /// Search for a K_{s,t} minor; exit 1 when there is none.
    Bipartite {
        #[command(flatten)]
        input: GraphFile,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// Search for an arbitrary pattern graph as a minor.
    Pattern {
        #[command(flatten)]
        input: GraphFile,
        pattern: PathBuf,
    },
    /// Check a minor model against a host graph.
    Verify {
        #[command(flatten)]
        input: GraphFile,
        model: PathBuf,
    },
    /// Sample random graphs without K_{d+3} and K_{3,d+1} minors.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        budget: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Triangulated,
    General2,
    Certified,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum WitnessKind {
    Complete,
    Bipartite,
}

#[derive(Subcommand, Debug)]
pub enum ComplexCmd {
    /// Raise a graph to a complex of dimension at most x.
    Raise {
        #[command(flatten)]
        input: GraphFile,
        #[arg(long)]
        x: usize,
        #[arg(long, value_enum, default_value = "triangulated")]
        mode: ModeArg,
    },
    /// Sharpness examples built from K_{d+3} or K_{3,d+1}.
    Witness {
        #[arg(long, value_enum)]
        kind: WitnessKind,
        #[arg(long)]
        d: usize,
    },
    /// Add region cells; planar faces are found for graphs.
    Regions {
        #[command(flatten)]
        input: ComplexFile,
        /// JSON `{"regions": [[facet indices], ...]}`.
        #[arg(long)]
        regions: Option<PathBuf>,
        /// Read the input as a graph instead of a complex.
        #[arg(long)]
        graph: bool,
    },
    /// Pendant facets for an ambient dimension d.
    Closed {
        #[command(flatten)]
        input: ComplexFile,
        #[arg(long)]
        d: usize,
    },
    /// Face vector and Euler characteristic.
    Faces {
        #[command(flatten)]
        input: ComplexFile,
    },
    /// Check a sequence of stages as a decomposition into balls.
    Ears {
        #[command(flatten)]
        input: ComplexFile,
        /// JSON list of stages, each a list of `{"dim", "index"}` cell ids.
        stages: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum CertifyCmd {
    /// Betti numbers over GF(2) and the rationals.
    Betti {
        #[command(flatten)]
        input: ComplexFile,
    },
    /// Triviality of the fundamental group.
    Pi1 {
        #[command(flatten)]
        input: ComplexFile,
        #[arg(long, default_value_t = geomgraph::topo::DEFAULT_PI1_BUDGET)]
        budget: usize,
    },
    /// Certify a subcomplex as an i-sphere inside the complex.
    Sphere {
        #[command(flatten)]
        input: ComplexFile,
        #[arg(long)]
        dim: usize,
        /// Use the cells induced on these vertices.
        #[arg(long, value_delimiter = ',', conflicts_with = "cells")]
        vertices: Option<Vec<usize>>,
        /// JSON list of `{"dim", "index"}` cell ids.
        #[arg(long)]
        cells: Option<PathBuf>,
        #[arg(long, default_value_t = geomgraph::topo::DEFAULT_PI1_BUDGET)]
        budget: usize,
    },
    /// Certify the whole complex as an i-sphere.
    Standalone {
        #[command(flatten)]
        input: ComplexFile,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = geomgraph::topo::DEFAULT_PI1_BUDGET)]
        budget: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum ColorCmd {
    /// Greedy coloring along a degeneracy order.
    Greedy {
        #[command(flatten)]
        input: GraphFile,
    },
    /// Exact chromatic number.
    Exact {
        #[command(flatten)]
        input: GraphFile,
    },
    /// Exact average degree.
    AverageDegree {
        #[command(flatten)]
        input: GraphFile,
    },
    /// chi <= d(d+1) for graphs without K_{d+3} and K_{3,d+1} minors.
    Bound {
        #[command(flatten)]
        input: GraphFile,
        #[arg(long)]
        d: usize,
    },
    /// Average degree of a complex's skeleton with layer statistics.
    Audit {
        #[command(flatten)]
        input: ComplexFile,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ScopeArg {
    Joint,
    PerDim,
}

#[derive(Subcommand, Debug)]
pub enum DischargeCmd {
    /// Initial weights, R1 and R2, with conservation checks.
    Run {
        #[command(flatten)]
        input: ComplexFile,
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value = "joint")]
        r1_scope: ScopeArg,
    },
    /// i-dimensional coloring: the minimum, or a k-coloring with --k.
    Color {
        #[command(flatten)]
        input: ComplexFile,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Dual graph of the top cells.
    Dual {
        #[command(flatten)]
        input: ComplexFile,
    },
    /// |A_d| - |A_{d-1}| + |A_{d-2}| >= 1 with the dual cycle rank.
    Quanhe {
        #[command(flatten)]
        input: ComplexFile,
    },
    /// (d-2)-cells lying in at most d+2 cells of dimension d-1.
    Reducibility {
        #[command(flatten)]
        input: ComplexFile,
        #[arg(long)]
        d: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    let start = Instant::now();
    let group = commands::group_name(&cli.group);
    let mut manifest = RunManifest::new(&commands::command_name(&cli.group), cli.threads);
    let outcome = match commands::run(&cli.group, &mut manifest) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            output::error_outcome(group, &e)
        }
    };
    let text = render(outcome.body, &manifest);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes());
    let _ = stdout.flush();
    eprintln!(
        "{} finished in {:.3}s with exit code {}",
        manifest.command,
        start.elapsed().as_secs_f64(),
        outcome.code
    );
    std::process::exit(outcome.code);
}
