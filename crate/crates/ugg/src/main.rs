use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ugg::format::{self, Host, HostKind, Input};
use ugg::selftest::{self, Config};
use ugg::svg::{self, Layout, Overlay};
use ugg::{Result, WorkbenchError};
use ugg_core::convex::{embed_caterpillar, embed_twochord};
use ugg_core::embedder::embed_forest;
use ugg_core::enumerate::{enumerate_caterpillars, enumerate_chorded_cycles, enumerate_forests};
use ugg_core::{Caterpillar, Embedding};

/// Sparse universal geometric graphs: build hosts, embed inputs, verify
/// embeddings and run the acceptance checks.
#[derive(Parser)]
#[command(name = "ugg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildKind {
    Universal,
    Caterpillar,
    Twochord,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Forests,
    Caterpillars,
    Chorded,
}

#[derive(Clone, Copy, ValueEnum)]
enum LayoutArg {
    Schematic,
    Exact,
}

#[derive(Subcommand)]
enum Command {
    /// Write a host graph file.
    Build {
        #[arg(long, value_enum)]
        kind: BuildKind,
        #[arg(long)]
        n: usize,
        /// Also list every edge.
        #[arg(long)]
        explicit: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Embed a forest, caterpillar or chorded cycle into a host.
    Embed {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check an embedding; the exit code carries the verdict.
    Verify {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        embedding: PathBuf,
    },
    /// Write one representative per isomorphism class.
    Enumerate {
        #[arg(long, value_enum)]
        what: Family,
        #[arg(long)]
        n: usize,
        /// Number of chords, for `chorded`.
        #[arg(long)]
        h: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the acceptance checks.
    Selftest {
        /// Largest forest size in the exhaustive sweeps.
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Seed of the random-tree generator.
        #[arg(long, default_value_t = Config::default().seed)]
        seed: u64,
    },
    /// Draw a host, optionally with an embedding on top.
    Render {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        embedding: Option<PathBuf>,
        /// Input graph whose edges are highlighted with the embedding.
        #[arg(long, requires = "embedding")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = LayoutArg::Schematic)]
        layout: LayoutArg,
        #[arg(long)]
        out: PathBuf,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| WorkbenchError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| WorkbenchError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn check_sizes(host: &Host, input: &Input) -> Result<()> {
    if host.n() != input.n() {
        return Err(WorkbenchError::Input(ugg_core::Error::SizeMismatch {
            expected: host.n(),
            got: input.n(),
        }));
    }
    Ok(())
}

fn embed(host: &Host, input: &Input) -> Result<Embedding> {
    check_sizes(host, input)?;
    let phi = match (host, input) {
        (Host::Universal(g), Input::Forest(f)) => embed_forest(g, f)?,
        (Host::Convex(c), Input::Forest(f)) if host.kind() == HostKind::Caterpillar => {
            embed_caterpillar(c, &Caterpillar::from_forest(f)?)?
        }
        (Host::Convex(c), Input::Chorded(g)) if host.kind() == HostKind::TwoChord => embed_twochord(c, g)?,
        _ => {
            return Err(WorkbenchError::Input(ugg_core::Error::PreconditionViolated(
                "input family does not match the host kind",
            )))
        }
    };
    Ok(phi)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Build { kind, n, explicit, out } => {
            let kind = match kind {
                BuildKind::Universal => HostKind::Universal,
                BuildKind::Caterpillar => HostKind::Caterpillar,
                BuildKind::Twochord => HostKind::TwoChord,
            };
            let host = Host::build(kind, n)?;
            write(&out, &format::write_host(&host, explicit)?)
        }
        Command::Embed { host, input, out } => {
            let host = format::parse_host(&read(&host)?)?;
            let input = format::parse_input(&read(&input)?)?;
            let phi = embed(&host, &input)?;
            let report = host.validate(input.n(), &input.edges(), &phi);
            if !report.is_ok() {
                return Err(WorkbenchError::Failed(format!("embedding failed validation: {:?}", report.failures)));
            }
            write(&out, &format::write_embedding(&phi))
        }
        Command::Verify { host, input, embedding } => {
            let host = format::parse_host(&read(&host)?)?;
            let input = format::parse_input(&read(&input)?)?;
            let phi = format::parse_embedding(&read(&embedding)?, host.host_ref())?;
            let report = host.validate(input.n(), &input.edges(), &phi);
            if report.is_ok() {
                println!("ok");
                return Ok(());
            }
            for f in &report.failures {
                println!("{:?}: {f:?}", f.kind());
            }
            if report.truncated {
                println!("(more failures not shown)");
            }
            Err(WorkbenchError::Failed(format!("{} failure(s)", report.failures.len())))
        }
        Command::Enumerate { what, n, h, out } => {
            let inputs: Vec<Input> = match what {
                Family::Forests => enumerate_forests(n)?.into_iter().map(Input::Forest).collect(),
                Family::Caterpillars => enumerate_caterpillars(n)?
                    .iter()
                    .map(|c| Input::Forest(c.to_forest()))
                    .collect(),
                Family::Chorded => {
                    let h = h.ok_or({
                        WorkbenchError::Input(ugg_core::Error::PreconditionViolated("`chorded` needs --h"))
                    })?;
                    enumerate_chorded_cycles(n, h)?.into_iter().map(Input::Chorded).collect()
                }
            };
            eprintln!("{} instance(s)", inputs.len());
            write(&out, &format::write_inputs(&inputs))
        }
        Command::Selftest { max_n, seed } => {
            let cfg = Config {
                max_n,
                seed,
                ..Config::default()
            };
            let outcomes = selftest::run_all(&cfg);
            for o in &outcomes {
                println!("{o}");
            }
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            if failed > 0 {
                return Err(WorkbenchError::Failed(format!("{failed} criterion(s) failed")));
            }
            Ok(())
        }
        Command::Render {
            host,
            embedding,
            input,
            layout,
            out,
        } => {
            let host = format::parse_host(&read(&host)?)?;
            let phi = match &embedding {
                Some(p) => Some(format::parse_embedding(&read(p)?, host.host_ref())?),
                None => None,
            };
            let edges = match &input {
                Some(p) => Some(format::parse_input(&read(p)?)?.edges()),
                None => None,
            };
            if let (Some(phi), Some(edges)) = (&phi, &edges) {
                if let Some(&(u, w)) = edges.iter().find(|&&(u, w)| u.max(w) >= phi.len()) {
                    return Err(WorkbenchError::Input(ugg_core::Error::IndexOutOfRange {
                        index: u.max(w),
                        bound: phi.len(),
                    }));
                }
            }
            let overlay = phi.as_ref().map(|phi| Overlay {
                phi,
                edges: edges.as_deref(),
            });
            let layout = match layout {
                LayoutArg::Schematic => Layout::Schematic,
                LayoutArg::Exact => Layout::Exact,
            };
            write(&out, &svg::render_svg(&host, layout, overlay)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // deep recursion on path-like inputs
    let worker = std::thread::Builder::new()
        .stack_size(512 << 20)
        .spawn(move || run(cli))
        .expect("spawn worker thread");
    match worker.join() {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(_) => ExitCode::from(1),
    }
}
