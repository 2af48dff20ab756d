//! Command-line surface: graph ingestion, dispatch to the coloring
//! constructions and oracles, independent verification, and JSON reports.
//!
//! Exit codes: 0 success; 1 verification or hypothesis failure (a report
//! is still emitted); 2 input or usage error; 3 resource cap exceeded;
//! 4 internal defect.

mod input;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use earcolor::acyclic::acyclic_color;
use earcolor::bounds::{
    color_by_circumference, color_by_longest_path, color_by_odd_circumference, color_undirected,
    erdos_hajnal, gyarfas, mihok_schiermeyer, tuza, undirected_cycle_stats,
    undirected_hypothesis, undirected_residue_census, BoundReport,
};
use earcolor::clique_cycle::cycle_through_clique;
use earcolor::coloring::{check_acyclic, check_proper};
use earcolor::digraph::{underlying_graph, Digraph, UndirectedGraph};
use earcolor::oracle::{cycle_stats, hypothesis_holds, residue_census, HypothesisVerdict};
use earcolor::proper::color_mod1;
use earcolor::{Error, Limits};

use input::{parse_coloring, parse_graph, GraphInput};
use report::{
    BoundSection, CensusReport, CertificateSection, DecompositionSummary, HypothesisReport, Report,
};

#[derive(Parser)]
#[command(name = "earcolor", version, about = "Residue-constrained digraph coloring")]
struct Cli {
    /// Emit key/value lines instead of JSON.
    #[arg(long, global = true)]
    plain: bool,
    /// Abort (exit 3) if cycle enumeration exceeds this many cycles.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_cycles: usize,
    /// Abort (exit 3) if ear search expands more than this many paths.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_ear_paths: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Which cycle-length residues mod k are realized, with witnesses.
    Census {
        #[arg(long)]
        k: usize,
        file: PathBuf,
    },
    /// Whether the graph avoids cycles of length r mod k.
    Check {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        file: PathBuf,
    },
    /// Proper k-coloring of a strong digraph with no cycle of length 1 mod k.
    Color1 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        skip_check: bool,
        file: PathBuf,
    },
    /// Acyclic k-coloring of a digraph with no cycle of length r mod k.
    Acyclic {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        skip_check: bool,
        file: PathBuf,
    },
    /// Proper coloring of an undirected graph with no cycle of length r mod k.
    Undirected {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        file: PathBuf,
    },
    /// Coloring bounds from classical graph parameters.
    Bound {
        #[arg(long)]
        theorem: TheoremArg,
        /// Modulus for --theorem tuza.
        #[arg(long)]
        k: Option<usize>,
        file: PathBuf,
    },
    /// A cycle through a set of pairwise adjacent vertices.
    CliqueCycle {
        /// Comma-separated vertex ids.
        #[arg(long)]
        set: String,
        file: PathBuf,
    },
    /// Verify an externally supplied coloring.
    Verify {
        /// File of `vertex color` lines.
        #[arg(long)]
        coloring: PathBuf,
        /// Check acyclic classes instead of proper coloring.
        #[arg(long)]
        acyclic: bool,
        file: PathBuf,
    },
    /// Circumference, odd circumference, and longest-path statistics.
    Stats { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    OddCirc,
    Circ,
    LongestPath,
    ErdosHajnal,
    Tuza,
    Gyarfas,
    MihokSchiermeyer,
}

enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

fn exit_code(e: &CliError) -> u8 {
    match e {
        CliError::Usage(_) => 2,
        CliError::Lib(err) => match err {
            Error::HypothesisViolated { .. } => 1,
            Error::CycleCapExceeded(_) | Error::EarCapExceeded(_) | Error::OracleBound { .. } => 3,
            Error::Defect(_) => 4,
            _ => 2,
        },
    }
}

struct Outcome {
    report: Report,
    failed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits {
        max_cycles: cli.max_cycles,
        max_ear_paths: cli.max_ear_paths,
    };
    let start = Instant::now();
    match run(&cli.command, limits) {
        Ok(mut outcome) => {
            outcome.report.timing_ms = start.elapsed().as_millis() as u64;
            print!("{}", outcome.report.render(cli.plain));
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn load(path: &Path) -> Result<GraphInput, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(CliError::Usage)
}

fn require_directed(input: &GraphInput) -> Result<&Digraph, CliError> {
    match input {
        GraphInput::Directed(d) => Ok(d),
        GraphInput::Undirected(_) => Err(CliError::Usage(
            "this command requires a directed input (mode directed)".into(),
        )),
    }
}

fn require_undirected(input: &GraphInput) -> Result<&UndirectedGraph, CliError> {
    match input {
        GraphInput::Undirected(g) => Ok(g),
        GraphInput::Directed(_) => Err(CliError::Usage(
            "this command requires an undirected input (mode undirected)".into(),
        )),
    }
}

fn run(command: &Command, limits: Limits) -> Result<Outcome, CliError> {
    match command {
        Command::Census { k, file } => census(*k, file, limits),
        Command::Check { k, r, file } => check(*k, *r, file, limits),
        Command::Color1 { k, skip_check, file } => color1(*k, *skip_check, file, limits),
        Command::Acyclic {
            k,
            r,
            skip_check,
            file,
        } => acyclic(*k, *r, *skip_check, file, limits),
        Command::Undirected { k, r, file } => undirected(*k, *r, file, limits),
        Command::Bound { theorem, k, file } => bound(*theorem, *k, file, limits),
        Command::CliqueCycle { set, file } => clique_cycle(set, file),
        Command::Verify {
            coloring,
            acyclic,
            file,
        } => verify(coloring, *acyclic, file),
        Command::Stats { file } => stats(file, limits),
    }
}

fn census(k: usize, file: &Path, limits: Limits) -> Result<Outcome, CliError> {
    let input = load(file)?;
    let mut report = Report::new("census", &input);
    report.param("k", k);
    let census = match &input {
        GraphInput::Directed(d) => residue_census(d, k, limits.max_cycles)?,
        GraphInput::Undirected(g) => undirected_residue_census(g, k, limits)?,
    };
    report.census = Some(CensusReport::of(census));
    Ok(Outcome {
        report,
        failed: false,
    })
}

fn check(k: usize, r: usize, file: &Path, limits: Limits) -> Result<Outcome, CliError> {
    let input = load(file)?;
    let mut report = Report::new("check", &input);
    report.param("k", k);
    report.param("r", r);
    let verdict = match &input {
        GraphInput::Directed(d) => hypothesis_holds(d, k, r, limits.max_cycles)?,
        GraphInput::Undirected(g) => undirected_hypothesis(g, k, r, limits)?,
    };
    let (holds, witness) = match verdict {
        HypothesisVerdict::Holds => (true, None),
        HypothesisVerdict::Violated { witness } => (false, Some(witness.vertices().to_vec())),
    };
    report.hypothesis = Some(HypothesisReport {
        modulus: k,
        residue: r % k,
        holds,
        witness,
    });
    Ok(Outcome {
        report,
        failed: !holds,
    })
}

fn violated_outcome(
    mut report: Report,
    modulus: usize,
    residue: usize,
    witness: Vec<usize>,
) -> Outcome {
    report.hypothesis = Some(HypothesisReport {
        modulus,
        residue,
        holds: false,
        witness: Some(witness),
    });
    Outcome {
        report,
        failed: true,
    }
}

fn color1(k: usize, skip_check: bool, file: &Path, limits: Limits) -> Result<Outcome, CliError> {
    let input = load(file)?;
    let d = require_directed(&input)?;
    let mut report = Report::new("color1", &input);
    report.param("k", k);
    report.param("skip_check", skip_check);
    match color_mod1(d, k, !skip_check, limits) {
        Ok(run) => {
            report.hypothesis = Some(HypothesisReport {
                modulus: k,
                residue: 1 % k,
                holds: true,
                witness: None,
            });
            report.set_coloring(&run.coloring);
            report.decomposition = Some(DecompositionSummary {
                components: 1,
                steps: run.steps.len(),
                seed_residues: vec![run.seed_residue],
            });
            let verified = check_proper(&underlying_graph(d), &run.coloring.colors).is_none()
                && run.coloring.colors.iter().all(|&c| c < k);
            report.verified = Some(verified);
            Ok(Outcome {
                report,
                failed: !verified,
            })
        }
        Err(Error::HypothesisViolated {
            modulus,
            residue,
            witness,
        }) => Ok(violated_outcome(
            report,
            modulus,
            residue,
            witness.vertices().to_vec(),
        )),
        Err(e) => Err(e.into()),
    }
}

fn acyclic(
    k: usize,
    r: usize,
    skip_check: bool,
    file: &Path,
    limits: Limits,
) -> Result<Outcome, CliError> {
    let input = load(file)?;
    let d = require_directed(&input)?;
    let mut report = Report::new("acyclic", &input);
    report.param("k", k);
    report.param("r", r);
    report.param("skip_check", skip_check);
    match acyclic_color(d, k, r, !skip_check, limits) {
        Ok(run) => {
            report.hypothesis = Some(HypothesisReport {
                modulus: k,
                residue: r % k,
                holds: true,
                witness: None,
            });
            report.set_coloring(&run.coloring);
            report.decomposition = Some(DecompositionSummary {
                components: run.components.len(),
                steps: run
                    .components
                    .iter()
                    .map(|c| c.run.as_ref().map_or(0, |r| r.steps.len()))
                    .sum(),
                seed_residues: run
                    .components
                    .iter()
                    .filter_map(|c| c.run.as_ref().map(|r| r.seed_residue))
                    .collect(),
            });
            let verified = check_acyclic(d, &run.coloring.colors).is_none()
                && run.coloring.colors.iter().all(|&c| c < k);
            report.verified = Some(verified);
            Ok(Outcome {
                report,
                failed: !verified,
            })
        }
        Err(Error::HypothesisViolated {
            modulus,
            residue,
            witness,
        }) => Ok(violated_outcome(
            report,
            modulus,
            residue,
            witness.vertices().to_vec(),
        )),
        Err(e) => Err(e.into()),
    }
}

fn undirected(k: usize, r: usize, file: &Path, limits: Limits) -> Result<Outcome, CliError> {
    let input = load(file)?;
    let g = require_undirected(&input)?;
    let mut report = Report::new("undirected", &input);
    report.param("k", k);
    report.param("r", r);
    match color_undirected(g, k, r, limits) {
        Ok(run) => {
            report.hypothesis = Some(HypothesisReport {
                modulus: k,
                residue: r % k,
                holds: true,
                witness: None,
            });
            report.param("method", &run.method);
            report.param("bound", run.bound);
            report.set_coloring(&run.coloring);
            let verified = check_proper(g, &run.coloring.colors).is_none()
                && run.coloring.color_count() <= run.bound;
            report.verified = Some(verified);
            Ok(Outcome {
                report,
                failed: !verified,
            })
        }
        Err(Error::HypothesisViolated {
            modulus,
            residue,
            witness,
        }) => Ok(violated_outcome(
            report,
            modulus,
            residue,
            witness.vertices().to_vec(),
        )),
        Err(e) => Err(e.into()),
    }
}

fn bound(
    theorem: TheoremArg,
    k: Option<usize>,
    file: &Path,
    limits: Limits,
) -> Result<Outcome, CliError> {
    let input = load(file)?;
    let mut report = Report::new("bound", &input);

    let result: Result<BoundReport, Error> = match theorem {
        TheoremArg::OddCirc => color_by_odd_circumference(require_directed(&input)?, limits),
        TheoremArg::Circ => color_by_circumference(require_directed(&input)?, limits),
        TheoremArg::LongestPath => color_by_longest_path(require_directed(&input)?, limits),
        TheoremArg::ErdosHajnal => erdos_hajnal(require_undirected(&input)?, limits),
        TheoremArg::Tuza => {
            let k = k.ok_or(CliError::Usage("--theorem tuza requires --k".into()))?;
            report.param("k", k);
            tuza(require_undirected(&input)?, k, limits)
        }
        TheoremArg::Gyarfas => gyarfas(require_undirected(&input)?, limits),
        TheoremArg::MihokSchiermeyer => mihok_schiermeyer(require_undirected(&input)?, limits),
    };
    match result {
        Ok(bound_report) => {
            let verified = match &input {
                GraphInput::Directed(d) => {
                    check_proper(&underlying_graph(d), &bound_report.coloring.colors).is_none()
                }
                GraphInput::Undirected(g) => {
                    check_proper(g, &bound_report.coloring.colors).is_none()
                }
            } && bound_report.coloring.color_count() <= bound_report.bound;
            report.set_coloring(&bound_report.coloring);
            report.bound = Some(BoundSection {
                theorem: bound_report.theorem,
                parameter_name: bound_report.parameter_name,
                parameter: bound_report.parameter,
                bound: bound_report.bound,
                method: bound_report.method,
            });
            report.verified = Some(verified);
            Ok(Outcome {
                report,
                failed: !verified,
            })
        }
        Err(Error::HypothesisViolated {
            modulus,
            residue,
            witness,
        }) => Ok(violated_outcome(
            report,
            modulus,
            residue,
            witness.vertices().to_vec(),
        )),
        Err(e) => Err(e.into()),
    }
}

fn clique_cycle(set: &str, file: &Path) -> Result<Outcome, CliError> {
    let input = load(file)?;
    let d = require_directed(&input)?;
    let covered: Vec<usize> = set
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad vertex id '{t}' in --set")))
        })
        .collect::<Result<_, _>>()?;
    let mut report = Report::new("clique-cycle", &input);
    report.param("set", &covered);
    let cert = cycle_through_clique(d, &covered)?;
    // Independent re-check: the certificate cycle is simple, uses host
    // arcs, and covers the set.
    let verified = earcolor::digraph::VertexCycle::new(d, cert.cycle.vertices().to_vec()).is_ok()
        && covered.iter().all(|&v| cert.cycle.contains(v));
    report.certificate = Some(CertificateSection {
        cycle: cert.cycle.vertices().to_vec(),
        covered: cert.covered.clone(),
        detours: cert.detours.clone(),
        hamiltonian_core: cert.hamiltonian_core.vertices().to_vec(),
    });
    report.verified = Some(verified);
    Ok(Outcome {
        report,
        failed: !verified,
    })
}

fn verify(coloring_file: &Path, acyclic: bool, file: &Path) -> Result<Outcome, CliError> {
    let input = load(file)?;
    let text = std::fs::read_to_string(coloring_file)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", coloring_file.display())))?;
    let colors = parse_coloring(&text, input.n()).map_err(CliError::Usage)?;
    let mut report = Report::new("verify", &input);
    report.param("acyclic", acyclic);
    report.coloring = Some(colors.clone());

    let detail = match (&input, acyclic) {
        (GraphInput::Undirected(_), true) => {
            return Err(CliError::Usage(
                "--acyclic applies to directed inputs only".into(),
            ))
        }
        (GraphInput::Undirected(g), false) => {
            check_proper(g, &colors).map(|v| format!("monochromatic edge ({}, {})", v.u, v.v))
        }
        (GraphInput::Directed(d), false) => check_proper(&underlying_graph(d), &colors)
            .map(|v| format!("monochromatic edge ({}, {})", v.u, v.v)),
        (GraphInput::Directed(d), true) => check_acyclic(d, &colors)
            .map(|v| format!("class {} induces the cycle {:?}", v.color, v.cycle)),
    };
    let verified = detail.is_none();
    report.verified = Some(verified);
    report.verification_detail = detail;
    Ok(Outcome {
        report,
        failed: !verified,
    })
}

fn stats(file: &Path, limits: Limits) -> Result<Outcome, CliError> {
    let input = load(file)?;
    let mut report = Report::new("stats", &input);
    let stats = match &input {
        GraphInput::Directed(d) => cycle_stats(d, limits.max_cycles)?,
        GraphInput::Undirected(g) => undirected_cycle_stats(g, limits)?,
    };
    report.stats = Some(stats);
    Ok(Outcome {
        report,
        failed: false,
    })
}
