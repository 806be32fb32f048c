use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nedindex::core::clustering::{hierarchical, KMeans, Linkage};
use nedindex::core::{datasets, metrics, Graph, Partition};
use nedindex::harness::{self, Method, SweepConfig};
use nedindex::io::{read_partition, write_edge_list, write_metric_csv, write_partition};
use nedindex::source::{parse_k_range, Dataset, GeneratorSpec, GraphSource};
use nedindex::Error;

/// Graph-clustering quality metrics: NEDindex, modularity, NMI and conductance.
#[derive(Debug, Parser)]
#[command(name = "nedindex", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Edge-list file, one `u v` pair per line, `#`/`%` comments
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Generated graph: complete:N, wheel:N, figure2, figure3, gnm:N:M[:SEED], er:N:P[:SEED]
    #[arg(long, value_name = "SPEC")]
    generate: Option<String>,
    /// Embedded dataset (see `nedindex datasets`)
    #[arg(long, value_name = "NAME")]
    dataset: Option<String>,
}

impl SourceArgs {
    fn source(&self) -> Result<GraphSource, Error> {
        Ok(match (&self.input, &self.generate, &self.dataset) {
            (Some(path), _, _) => GraphSource::File(path.clone()),
            (_, Some(spec), _) => GraphSource::Generate(spec.parse()?),
            (_, _, Some(name)) => GraphSource::Dataset(name.parse()?),
            _ => unreachable!("clap enforces exactly one source"),
        })
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Hierarchical,
    Kmeans,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LinkageArg {
    Single,
    Complete,
    Average,
}

impl From<LinkageArg> for Linkage {
    fn from(l: LinkageArg) -> Self {
        match l {
            LinkageArg::Single => Linkage::Single,
            LinkageArg::Complete => Linkage::Complete,
            LinkageArg::Average => Linkage::Average,
        }
    }
}

#[derive(Debug, Args)]
struct ClusterArgs {
    /// Clustering back-end
    #[arg(long, value_enum, default_value_t = MethodArg::Hierarchical)]
    method: MethodArg,
    /// Linkage criterion for hierarchical clustering
    #[arg(long, value_enum, default_value_t = LinkageArg::Single)]
    linkage: LinkageArg,
    /// Seed for k-means
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Lloyd iteration cap for k-means
    #[arg(long, default_value_t = 300)]
    max_iter: usize,
}

impl ClusterArgs {
    fn method(&self) -> Method {
        match self.method {
            MethodArg::Hierarchical => Method::Hierarchical(self.linkage.into()),
            MethodArg::Kmeans => Method::KMeans {
                max_iter: self.max_iter,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Score a partition of a graph
    Metrics {
        #[command(flatten)]
        source: SourceArgs,
        /// Partition file, one `vertex cluster` pair per line
        #[arg(long, value_name = "PATH")]
        partition: PathBuf,
        /// Reference partition for NMI
        #[arg(long, value_name = "PATH")]
        reference: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Output file (default: stdout)
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Cluster at every k in a range and score each result
    Sweep {
        #[command(flatten)]
        source: SourceArgs,
        /// Cluster counts, `a..b` inclusive or a single `k` (default: 1..|V|)
        #[arg(long = "k", value_name = "RANGE")]
        k_range: Option<String>,
        #[command(flatten)]
        cluster: ClusterArgs,
        /// Repeats per k; repeat r uses seed + r
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        /// Reference partition for NMI
        #[arg(long, value_name = "PATH")]
        reference: Option<PathBuf>,
        /// Fill the elapsed_ms column (makes output timing-dependent)
        #[arg(long)]
        timing: bool,
        /// CSV output file (default: stdout)
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Cluster a graph once and write the partition
    Cluster {
        #[command(flatten)]
        source: SourceArgs,
        /// Requested cluster count
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        cluster: ClusterArgs,
        /// Partition output file (default: stdout)
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Write a generated graph as a canonical edge list
    Generate {
        /// complete:N, wheel:N, figure2, figure3, gnm:N:M[:SEED], er:N:P[:SEED]
        spec: String,
        /// Output file (default: stdout)
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// List embedded datasets, or export one
    Datasets {
        /// Dataset to export
        name: Option<String>,
        /// Write the dataset's edge list here (default: stdout)
        #[arg(long, value_name = "PATH")]
        edges: Option<PathBuf>,
        /// Write the dataset's ground-truth partition here
        #[arg(long, value_name = "PATH")]
        factions: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        use nedindex::core::Error as Core;
        match &e {
            Error::Parse { .. } | Error::Io(_) | Error::Csv(_) => Failure::Input(e.to_string()),
            Error::Config(_) => Failure::Usage(e.to_string()),
            Error::Graph(Core::InvalidSize { .. } | Core::KOutOfRange { .. }) => {
                Failure::Usage(e.to_string())
            }
            Error::Graph(Core::InvalidPair { .. } | Core::InvalidAssignment { .. }) => {
                Failure::Input(e.to_string())
            }
            Error::Graph(_) | Error::Sweep { .. } => Failure::Internal(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn load_graph(source: &SourceArgs) -> Result<Graph, Failure> {
    let g = source.source()?.load()?;
    g.check_invariants()
        .map_err(|what| Failure::Internal(format!("graph invariant violated: {what}")))?;
    Ok(g)
}

fn load_partition(g: &Graph, path: &Path) -> Result<Partition, Failure> {
    let file = File::open(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    read_partition(g, BufReader::new(file))
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Metrics {
            source,
            partition,
            reference,
            format,
            out,
        } => {
            let g = load_graph(&source)?;
            let p = load_partition(&g, &partition)?;
            let reference = reference.map(|r| load_partition(&g, &r)).transpose()?;
            let report = metrics::report(&g, &p, reference.as_ref()).map_err(Error::from)?;
            let mut w = output(out.as_deref())?;
            match format {
                Format::Csv => write_metric_csv([(report.cluster_count, &report)], &mut w)?,
                Format::Text => {
                    writeln!(w, "clusters     {}", report.cluster_count)?;
                    writeln!(w, "nedindex     {:.6}", report.nedindex)?;
                    writeln!(w, "modularity   {:.6}", report.modularity)?;
                    match report.nmi {
                        Some(x) => writeln!(w, "nmi          {x:.6}")?,
                        None => writeln!(w, "nmi          -")?,
                    }
                    writeln!(w, "conductance  {:.6}", report.conductance)?;
                }
            }
            w.flush()?;
        }
        Command::Sweep {
            source,
            k_range,
            cluster,
            repeats,
            reference,
            timing,
            out,
        } => {
            let g = load_graph(&source)?;
            let k_range = match k_range {
                Some(text) => parse_k_range(&text)?,
                None => 1..=g.vertex_count(),
            };
            let mut cfg = SweepConfig::new(k_range);
            cfg.repeats = repeats;
            cfg.method = cluster.method();
            cfg.base_seed = cluster.seed;
            cfg.reference = reference.map(|r| load_partition(&g, &r)).transpose()?;
            let records = harness::sweep(&g, &cfg)?;
            harness::write_sweep_csv(&records, output(out.as_deref())?, timing)?;
            let averaged = records.iter().filter(|r| r.is_average()).count();
            let summary = format!(
                "{} rows: {} repeat rows and {averaged} averaged rows over k={}..{}",
                records.len(),
                records.len() - averaged,
                cfg.k_range.start(),
                cfg.k_range.end()
            );
            if out.is_some() {
                println!("{summary}");
            } else {
                eprintln!("{summary}");
            }
        }
        Command::Cluster {
            source,
            k,
            cluster,
            out,
        } => {
            let g = load_graph(&source)?;
            let p = match cluster.method() {
                Method::Hierarchical(linkage) => hierarchical(&g, linkage, k),
                Method::KMeans { max_iter } => KMeans::new(k)
                    .seed(cluster.seed)
                    .max_iter(max_iter)
                    .fit(&g)
                    .map(|r| r.partition),
            }
            .map_err(Error::from)?;
            write_partition(&g, &p, output(out.as_deref())?)?;
        }
        Command::Generate { spec, out } => {
            let g = spec.parse::<GeneratorSpec>()?.generate()?;
            write_edge_list(&g, output(out.as_deref())?)?;
        }
        Command::Datasets {
            name,
            edges,
            factions,
        } => match name {
            None => {
                for d in Dataset::ALL {
                    println!("{:<8} {}", d.name(), d.description());
                }
            }
            Some(name) => {
                let d: Dataset = name.parse()?;
                let g = d.graph();
                if let Some(path) = &factions {
                    let truth = match d {
                        Dataset::Karate => datasets::karate_factions(),
                    };
                    write_partition(&g, &truth, output(Some(path))?)?;
                }
                if edges.is_some() || factions.is_none() {
                    write_edge_list(&g, output(edges.as_deref())?)?;
                }
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
