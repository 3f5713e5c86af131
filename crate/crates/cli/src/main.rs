use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use twbound::boundedness::{
    check_profile_bounded, compose_h, empirical_binding_profile, nondecreasing_majorant, Polynomial,
};
use twbound::families::wall;
use twbound::harness::{
    obs7_experiment, theorem5_pipeline, verify_lemma4_with, ExperimentReport, Lemma4Params,
    PlantingParams, Status,
};
use twbound::io::{dot::to_dot, read_graph, write_graph, Format};
use twbound::minors::{
    find_model_with, is_minimal, lsg_canonical_model, minimize_minor_model, InducedMinorModel,
    MinorModel, SearchLimits,
};
use twbound::treewidth::{exact_treewidth, to_pace};
use twbound::{maximum_clique, Graph};

/// Exact treewidth, cliques and induced minors for (tw, ω)-boundedness
/// experiments.
#[derive(Parser)]
#[command(name = "twbound", version)]
struct Cli {
    /// Graph file format; input is auto-detected when omitted, output
    /// defaults to graph6.
    #[arg(long, global = true)]
    format: Option<Format>,

    /// Also write the main graph of the command as Graphviz DOT.
    #[arg(long, global = true, value_name = "OUT")]
    dot: Option<PathBuf>,

    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact treewidth of a graph.
    Treewidth {
        file: PathBuf,
        /// Write the witness decomposition in PACE .td format.
        #[arg(long, value_name = "OUT")]
        td: Option<PathBuf>,
    },
    /// Clique number and a maximum clique.
    Clique { file: PathBuf },
    /// Search for a minor model of PATTERN in HOST.
    Minor {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        host: PathBuf,
        /// Require an induced minor model.
        #[arg(long)]
        induced: bool,
        /// Write the model, if found, to this file.
        #[arg(long, value_name = "OUT")]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = SearchLimits::default().max_steps)]
        max_steps: usize,
    },
    /// Minimize a minor model read from a model file.
    Minimize {
        #[arg(long)]
        model: PathBuf,
    },
    /// Print the k×k wall.
    Wall { k: usize },
    /// Print L(S(G)), the line graph of the subdivision of G.
    Lsg {
        file: PathBuf,
        /// Write the canonical induced minor model of G in L(S(G)).
        #[arg(long, value_name = "OUT")]
        model: Option<PathBuf>,
    },
    /// (ω, tw) pairs over all induced subgraphs, as CSV.
    Profile {
        file: PathBuf,
        /// Check the profile against tw <= f(ω); coefficients constant first.
        #[arg(long, allow_hyphen_values = true, value_name = "COEFFS")]
        bound: Option<Polynomial>,
    },
    /// Nondecreasing majorant of an integer polynomial.
    Majorant {
        /// Coefficients, constant term first, e.g. `2,-3,1`.
        #[arg(long, allow_hyphen_values = true)]
        poly: Polynomial,
        /// Also print h(x) = g(r(3x) + 1) for this g.
        #[arg(long, allow_hyphen_values = true, value_name = "COEFFS")]
        compose: Option<Polynomial>,
    },
    /// Run an experiment suite.
    #[command(subcommand)]
    Verify(Suite),
}

#[derive(Subcommand)]
enum Suite {
    /// Minimal models of random subcubic patterns in planted hosts.
    Lemma4(Lemma4Args),
    /// The wall argument on one host/pattern pair.
    Theorem5 {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Use this induced minor model instead of searching.
        #[arg(long)]
        model: Option<PathBuf>,
    },
    /// Triangle-free induced subgraphs of L(S(K_{ℓ,ℓ})).
    Obs7 {
        #[arg(long, default_value_t = 2)]
        ell: usize,
        #[arg(long, default_value_t = 0)]
        trials: usize,
    },
}

#[derive(Args)]
struct Lemma4Args {
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 12)]
    host_n: usize,
    #[arg(long, default_value_t = 6)]
    pattern_n: usize,
    #[arg(long, default_value_t = PlantingParams::default().noise_probability)]
    noise: f64,
    #[arg(long, default_value_t = PlantingParams::default().max_blob)]
    max_blob: usize,
    #[arg(long, default_value_t = PlantingParams::default().max_extra_vertices)]
    max_extra: usize,
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read `{}`", path.display()))
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write `{}`", path.display()))
}

impl Cli {
    fn load(&self, path: &Path) -> Result<Graph> {
        let text = read_text(path)?;
        read_graph(&text, self.format)
            .with_context(|| format!("cannot parse a graph from `{}`", path.display()))
    }

    fn load_model(&self, path: &Path) -> Result<MinorModel> {
        MinorModel::from_text(&read_text(path)?)
            .with_context(|| format!("cannot parse a model from `{}`", path.display()))
    }

    fn emit_dot(&self, g: &Graph) -> Result<()> {
        match &self.dot {
            Some(path) => write_text(path, &to_dot(g)),
            None => Ok(()),
        }
    }

    fn output_format(&self) -> Format {
        self.format.unwrap_or(Format::Graph6)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` is a negative answer or a verdict other than pass.
fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Treewidth { file, td } => {
            let g = cli.load(file)?;
            cli.emit_dot(&g)?;
            let (width, decomposition) = exact_treewidth(&g)?;
            let pace = to_pace(&decomposition, g.n());
            if let Some(path) = td {
                write_text(path, &pace)?;
            }
            if cli.json {
                println!("{}", json!({ "treewidth": width, "decomposition": pace }));
            } else {
                println!("{width}");
            }
        }
        Command::Clique { file } => {
            let g = cli.load(file)?;
            cli.emit_dot(&g)?;
            let clique = maximum_clique(&g)?;
            if cli.json {
                println!(
                    "{}",
                    json!({ "clique_number": clique.len(), "clique": clique })
                );
            } else {
                println!("{}", clique.len());
            }
        }
        Command::Minor {
            pattern,
            host,
            induced,
            out,
            max_steps,
        } => {
            let pattern = cli.load(pattern)?;
            let host = cli.load(host)?;
            cli.emit_dot(&host)?;
            let limits = SearchLimits {
                max_steps: *max_steps,
            };
            let found = find_model_with(&host, &pattern, *induced, limits)?;
            if let (Some(path), Some(m)) = (out, &found) {
                write_text(path, &m.to_text())?;
            }
            if cli.json {
                let sets = found.as_ref().map(|m| m.branch_sets().to_vec());
                println!(
                    "{}",
                    json!({ "found": found.is_some(), "induced": induced, "branch_sets": sets })
                );
            } else {
                match &found {
                    Some(m) => print!("{}", m.to_text()),
                    None => println!("no model"),
                }
            }
            return Ok(found.is_some());
        }
        Command::Minimize { model } => {
            let m = cli.load_model(model)?;
            cli.emit_dot(m.host())?;
            let minimal = minimize_minor_model(&m)?;
            if cli.json {
                println!(
                    "{}",
                    json!({ "branch_sets": minimal.branch_sets(), "minimal": is_minimal(&minimal) })
                );
            } else {
                print!("{}", minimal.to_text());
            }
        }
        Command::Wall { k } => {
            let w = wall(*k)?;
            cli.emit_dot(&w)?;
            print!("{}", write_graph(&w, cli.output_format()));
        }
        Command::Lsg { file, model } => {
            let g = cli.load(file)?;
            let m = lsg_canonical_model(&g)?;
            cli.emit_dot(m.host())?;
            if let Some(path) = model {
                write_text(path, &m.to_text())?;
            }
            print!("{}", write_graph(m.host(), cli.output_format()));
        }
        Command::Profile { file, bound } => {
            let g = cli.load(file)?;
            cli.emit_dot(&g)?;
            let profile = empirical_binding_profile(&g)?;
            let violations = match bound {
                Some(f) => check_profile_bounded(&profile, f)?,
                None => Vec::new(),
            };
            if cli.json {
                let envelope: Vec<_> = profile
                    .envelope()
                    .iter()
                    .map(|(o, t)| json!([o, t]))
                    .collect();
                let bad: Vec<_> = violations
                    .iter()
                    .map(|v| json!({ "omega": v.omega, "treewidth": v.treewidth, "bound": v.bound.to_string() }))
                    .collect();
                println!("{}", json!({ "envelope": envelope, "violations": bad }));
            } else {
                print!("{}", profile.to_csv());
                for v in &violations {
                    eprintln!(
                        "violation: omega {} has treewidth {} > {}",
                        v.omega, v.treewidth, v.bound
                    );
                }
            }
            return Ok(violations.is_empty());
        }
        Command::Majorant { poly, compose } => {
            let r = nondecreasing_majorant(poly);
            let h = compose.as_ref().map(|g| compose_h(&r, g)).transpose()?;
            let coeffs = |p: &Polynomial| {
                p.coefficients()
                    .iter()
                    .map(i128::to_string)
                    .collect::<Vec<_>>()
            };
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "majorant": coeffs(&r),
                        "display": r.to_string(),
                        "h": h.as_ref().map(coeffs),
                    })
                );
            } else {
                println!("{r}");
                if let Some(h) = h {
                    println!("{h}");
                }
            }
        }
        Command::Verify(suite) => {
            let report = run_suite(cli, suite)?;
            if cli.json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.summary());
            }
            return Ok(report.verdict == Status::Pass);
        }
    }
    Ok(true)
}

fn run_suite(cli: &Cli, suite: &Suite) -> Result<ExperimentReport> {
    Ok(match suite {
        Suite::Lemma4(a) => {
            if !(0.0..=1.0).contains(&a.noise) {
                bail!("--noise must be a probability, got {}", a.noise);
            }
            let params = Lemma4Params {
                trials: a.trials,
                seed: cli.seed,
                host_n: a.host_n,
                pattern_n: a.pattern_n,
                planting: PlantingParams {
                    max_blob: a.max_blob.max(1),
                    noise_probability: a.noise,
                    max_extra_vertices: a.max_extra,
                },
            };
            verify_lemma4_with(params)?
        }
        Suite::Theorem5 {
            host,
            pattern,
            k,
            model,
        } => {
            let host = cli.load(host)?;
            let pattern = cli.load(pattern)?;
            cli.emit_dot(&host)?;
            let supplied = match model {
                Some(path) => Some(InducedMinorModel::new(cli.load_model(path)?)?),
                None => None,
            };
            theorem5_pipeline(&host, &pattern, *k, supplied.as_ref())?
        }
        Suite::Obs7 { ell, trials } => obs7_experiment(*ell, *trials, cli.seed)?,
    })
}
