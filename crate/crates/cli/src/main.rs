//! Command-line front end: classification, toughness, closures, spectra,
//! catalog constructions, single-graph theorem verification, exhaustive
//! sweeps and graph6 stream scans.
//!
//! Exit codes: 0 on success with no counterexample, 1 when a counterexample
//! was found, 2 on usage or input errors.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use pancyc_core::catalog;
use pancyc_core::closure::bondy_chvatal_closure;
use pancyc_core::cycles::cycle_spectrum;
use pancyc_core::degseq::DegreeSequence;
use pancyc_core::format::{edge_list_decode, edge_list_encode, graph6_decode, graph6_encode};
use pancyc_core::graph::Graph;
use pancyc_core::spectral::{
    adjacency_spectral_radius, signless_laplacian_radius, thresholds_csv, DEFAULT_TOL,
};
use pancyc_core::toughness::{
    is_t_tough, is_t_tough_unguarded, toughness, toughness_unguarded, Rational,
};
use pancyc_core::verify::{
    check_theorem, classify, exhaustive_sweep, scan_graph6_lines, ScanReport, TheoremId,
    TheoremVerdict, VerifyConfig,
};

#[derive(Parser)]
#[command(
    name = "pancyc",
    version,
    about = "Toughness, cycle spectra, closures and spectral thresholds for small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full structural classification of one graph, with per-theorem verdicts.
    Classify {
        #[command(flatten)]
        input: GraphInput,
        /// Toughness level of the hypotheses (1, 2 or 3).
        #[arg(long = "t", default_value_t = 1)]
        t: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Run exact cutset searches above their order guard.
        #[arg(long)]
        allow_large: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exact toughness of one graph.
    Toughness {
        #[command(flatten)]
        input: GraphInput,
        /// Instead of the exact value, decide whether the graph is t-tough
        /// for this exact fraction (e.g. "3/2" or "2").
        #[arg(long)]
        check: Option<String>,
        #[arg(long)]
        allow_large: bool,
    },
    /// Bondy-Chvatal k-closure; prints the added edges in scan order.
    Closure {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Cycle spectrum and certified spectral radii of one graph, or the
    /// threshold table as CSV.
    Spectrum {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Print the threshold table (CSV) for all n up to this bound
        /// instead of reading a graph.
        #[arg(long, value_name = "N_MAX")]
        thresholds_csv: Option<usize>,
    },
    /// Build a cataloged construction (or realize a degree sequence).
    Construct {
        /// Catalog id, e.g. 2.2.1, 1.1.1-adjacent, fig3, S, table1-07.
        #[arg(long, conflicts_with = "degseq")]
        id: Option<String>,
        /// Degree sequence in multiplicity notation, e.g. "8^11,14^1,16^5";
        /// builds the canonical realization.
        #[arg(long)]
        degseq: Option<String>,
        /// Order, for the parameterized families.
        #[arg(long)]
        n: Option<usize>,
        /// Cycle-type partition for the 2-factor entries, e.g. "5,6".
        #[arg(long)]
        cycle_type: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Graph6)]
        format: OutputFormat,
        /// Re-verify the entry's claimed facts and print the report.
        #[arg(long)]
        check: bool,
    },
    /// Verify one theorem hypothesis/conclusion on one graph.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        theorem: TheoremFlag,
        #[arg(long = "t", default_value_t = 1)]
        t: usize,
        /// Which signless-Laplacian threshold form `--theorem q` uses.
        #[arg(long, value_enum, default_value_t = QModeFlag::Corrected)]
        q_mode: QModeFlag,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        allow_large: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively sweep all labeled graphs on n <= 7 vertices.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long = "t", default_value_t = 1)]
        t: usize,
        #[arg(long)]
        theorem: TheoremFlag,
        #[arg(long, value_enum, default_value_t = QModeFlag::Corrected)]
        q_mode: QModeFlag,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Scan a graph6 stream (file or stdin), one graph per line.
    Scan {
        /// Input file; stdin when omitted.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long = "t", default_value_t = 1)]
        t: usize,
        #[arg(long)]
        theorem: TheoremFlag,
        #[arg(long, value_enum, default_value_t = QModeFlag::Corrected)]
        q_mode: QModeFlag,
        /// Worker threads (0 = all cores). The report is identical for any
        /// worker count.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Recorded in the report for reproducibility bookkeeping.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct GraphInput {
    /// Graph as a graph6 string.
    #[arg(long)]
    g6: Option<String>,
    /// Read the graph from this file; stdin when neither --g6 nor --file is
    /// given.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Format of --file/stdin input.
    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    format: InputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QModeFlag {
    Printed,
    Corrected,
}

/// Theorem selector; bare `q` resolves through --q-mode.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremFlag {
    Edges,
    Rho,
    Q,
    QPrinted,
    QCorrected,
    HamRho,
}

impl TheoremFlag {
    fn resolve(self, q_mode: QModeFlag) -> TheoremId {
        match self {
            TheoremFlag::Edges => TheoremId::EdgeCount,
            TheoremFlag::Rho => TheoremId::SpectralRadius,
            TheoremFlag::QPrinted => TheoremId::SignlessPrinted,
            TheoremFlag::QCorrected => TheoremId::SignlessCorrected,
            TheoremFlag::Q => match q_mode {
                QModeFlag::Printed => TheoremId::SignlessPrinted,
                QModeFlag::Corrected => TheoremId::SignlessCorrected,
            },
            TheoremFlag::HamRho => TheoremId::HamiltonSpectral,
        }
    }
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        if let Some(g6) = &self.g6 {
            return Ok(graph6_decode(g6)?);
        }
        let text = match &self.file {
            Some(path) => std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?,
            None => {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .context("reading stdin")?;
                buf
            }
        };
        let g = match self.format {
            InputFormat::Graph6 => {
                let line = text
                    .lines()
                    .map(str::trim)
                    .find(|l| !l.is_empty())
                    .context("empty graph6 input")?;
                graph6_decode(line)?
            }
            InputFormat::Edgelist => edge_list_decode(&text)?,
        };
        Ok(g)
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn scan_exit(report: &ScanReport, json: bool) -> ExitCode {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{report}");
    }
    if report.counts.counterexamples > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run() -> Result<ExitCode> {
    match Cli::parse().command {
        Command::Classify {
            input,
            t,
            tol,
            allow_large,
            json,
        } => {
            let g = input.load()?;
            let config = VerifyConfig {
                tol,
                allow_large_toughness: allow_large,
            };
            let report = classify(&g, t, &config)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{report}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Toughness {
            input,
            check,
            allow_large,
        } => {
            let g = input.load()?;
            match check {
                Some(t) => {
                    let t: Rational = t.parse()?;
                    let tough = if allow_large {
                        is_t_tough_unguarded(&g, t)?
                    } else {
                        is_t_tough(&g, t)?
                    };
                    println!("{t}-tough: {tough}");
                }
                None => {
                    let value = if allow_large {
                        toughness_unguarded(&g)?
                    } else {
                        toughness(&g)?
                    };
                    println!("toughness = {value}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Closure { input, k, json } => {
            let g = input.load()?;
            let result = bondy_chvatal_closure(&g, k);
            if json {
                let value = serde_json::json!({
                    "k": k,
                    "added_edges": result.added_edges,
                    "is_complete": result.is_complete,
                    "graph6": graph6_encode(&result.graph)?,
                });
                println!("{}", serde_json::to_string_pretty(&value)?);
            } else {
                println!("{}-closure: {} edges added", k, result.added_edges.len());
                for (u, v) in &result.added_edges {
                    println!("  + {u} {v}");
                }
                println!("complete: {}", result.is_complete);
                println!("graph6: {}", graph6_encode(&result.graph)?);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum {
            input,
            tol,
            thresholds_csv: csv,
        } => {
            if let Some(n_max) = csv {
                print!("{}", thresholds_csv(n_max));
                return Ok(ExitCode::SUCCESS);
            }
            let g = input.load()?;
            let spectrum = cycle_spectrum(&g);
            let lengths: Vec<String> = spectrum.lengths().map(|l| l.to_string()).collect();
            println!("cycle spectrum: {{{}}}", lengths.join(","));
            let rho = adjacency_spectral_radius(&g, tol)?;
            let q = signless_laplacian_radius(&g, tol)?;
            println!(
                "rho = {:.10} (+/- {:.1e}, {} iterations)",
                rho.value, rho.tolerance, rho.iterations
            );
            println!(
                "q   = {:.10} (+/- {:.1e}, {} iterations)",
                q.value, q.tolerance, q.iterations
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct {
            id,
            degseq,
            n,
            cycle_type,
            format,
            check,
        } => {
            let g = match (&id, &degseq) {
                (Some(id), None) => {
                    let parts: Option<Vec<usize>> = match &cycle_type {
                        None => None,
                        Some(text) => Some(
                            text.split(',')
                                .map(|p| p.trim().parse::<usize>())
                                .collect::<std::result::Result<_, _>>()
                                .context("parsing --cycle-type")?,
                        ),
                    };
                    catalog::build_with_cycle_type(id, n, parts.as_deref())?
                }
                (None, Some(seq)) => {
                    let seq = DegreeSequence::parse(seq)?;
                    pancyc_core::degseq::realize(&seq)?
                }
                _ => bail!("give exactly one of --id or --degseq"),
            };
            match format {
                OutputFormat::Graph6 => println!("{}", graph6_encode(&g)?),
                OutputFormat::Edgelist => print!("{}", edge_list_encode(&g)),
            }
            if check {
                if let Some(id) = &id {
                    print!("{}", catalog::check_entry(id, n)?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            input,
            theorem,
            t,
            q_mode,
            tol,
            allow_large,
            json,
        } => {
            let g = input.load()?;
            let config = VerifyConfig {
                tol,
                allow_large_toughness: allow_large,
            };
            let outcome = check_theorem(&g, t, theorem.resolve(q_mode), &config)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&outcome)?);
            } else {
                println!(
                    "theorem {} at t = {}: {}{}",
                    outcome.theorem,
                    outcome.t,
                    outcome.verdict,
                    if outcome.detail.is_empty() {
                        String::new()
                    } else {
                        format!(" ({})", outcome.detail)
                    }
                );
            }
            Ok(if outcome.verdict == TheoremVerdict::Counterexample {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Sweep {
            n,
            t,
            theorem,
            q_mode,
            tol,
            json,
        } => {
            let config = VerifyConfig {
                tol,
                allow_large_toughness: false,
            };
            let report = exhaustive_sweep(n, t, theorem.resolve(q_mode), &config)?;
            Ok(scan_exit(&report, json))
        }
        Command::Scan {
            file,
            t,
            theorem,
            q_mode,
            workers,
            seed,
            tol,
            json,
        } => {
            let text = match &file {
                Some(path) => std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?,
                None => {
                    let mut buf = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buf)
                        .context("reading stdin")?;
                    buf
                }
            };
            let config = VerifyConfig {
                tol,
                allow_large_toughness: false,
            };
            let mut report =
                scan_graph6_lines(text.lines(), t, theorem.resolve(q_mode), workers, &config)?;
            report.params.seed = seed;
            Ok(scan_exit(&report, json))
        }
    }
}
