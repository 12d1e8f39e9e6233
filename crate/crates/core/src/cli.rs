//! The `bipcycles` command line.
//!
//! Exit codes: 0 success, 2 expansion witness found, 3 cycle misses,
//! 64 usage or input error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::degeneracy::prune_to_min_degree;
use crate::error::{invalid, Result};
use crate::expansion::{check_expansion_exact, check_expansion_sampled, ExpansionCheck};
use crate::graph::{read_edge_list, write_edge_list, BipartiteGraph};
use crate::harness::{
    brute_force_cycle_oracle, format_length_set, run_experiment, AdversaryKind, EdgeTarget,
    ExperimentCell, Probability, Timing,
};
use crate::pipeline::{find_all_even_cycles, BridgeMode, PipelineConfig};
use crate::random_model::{sample_gnnp, ModelParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_WITNESS: i32 = 2;
pub const EXIT_MISSES: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    /// Only meaningful for `resilience`.
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "bipcycles",
    version,
    about = "Even cycles in dense subgraphs of random bipartite graphs",
    arg_required_else_help = true
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOptions,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOptions {
    /// Master seed.
    #[arg(long, global = true, env = "BIPCYCLES_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,
    /// Suppress the text report; exit codes are unchanged.
    #[arg(long, short, global = true)]
    pub quiet: bool,
}

impl GlobalOptions {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

#[derive(Debug, Args)]
struct ProbabilityArgs {
    /// Edge probability.
    #[arg(long, conflicts_with = "c")]
    p: Option<f64>,
    /// Sets `p = C n^(-2/3)`.
    #[arg(long)]
    c: Option<f64>,
}

impl ProbabilityArgs {
    fn params(&self, n: usize, seed: u64) -> Result<Option<ModelParams>> {
        match (self.p, self.c) {
            (Some(p), _) => ModelParams::with_p(n, p, seed).map(Some),
            (None, Some(c)) => ModelParams::with_c(n, c, seed).map(Some),
            (None, None) => Ok(None),
        }
    }

    fn probability(&self) -> Result<Probability> {
        match (self.p, self.c) {
            (Some(p), _) => Ok(Probability::P(p)),
            (None, Some(c)) => Ok(Probability::C(c)),
            (None, None) => Err(invalid("one of --p or --c is required")),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample G(n, n, p) and write it as an edge list.
    Gen {
        /// Vertices per side.
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        prob: ProbabilityArgs,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find a cycle of every even length in [4, t_max].
    Cycles {
        /// Edge-list file.
        #[arg(long = "in")]
        input: PathBuf,
        /// Density slack in (0, 0.4]: the subgraph keeps more than (1 + eps) n^2 p / 2 edges.
        #[arg(long)]
        eps: f64,
        /// Longest cycle length searched; derived from n, p and eps when absent.
        #[arg(long)]
        t_max: Option<usize>,
        /// Model parameters; `p` defaults to `m / n^2`.
        #[command(flatten)]
        prob: ProbabilityArgs,
        /// Treat the bridge-set density and union bounds as hard errors.
        #[arg(long)]
        strict: bool,
        /// Print the vertices of every cycle.
        #[arg(long)]
        show_cycles: bool,
    },
    /// Look for a set X with |N(X) \ X| < 2|X| and |X| <= limit.
    Expand {
        /// Edge-list file.
        #[arg(long = "in")]
        input: PathBuf,
        /// Largest set size to test.
        #[arg(long)]
        limit: usize,
        /// Enumerate every set instead of sampling (small graphs only).
        #[arg(long)]
        exact: bool,
        /// Random sets per size when sampling.
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        /// Restrict to the minimum-degree core of this order first.
        #[arg(long)]
        min_degree: Option<usize>,
    },
    /// Seeded Monte Carlo resilience experiment.
    Resilience {
        /// Vertices per side.
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        prob: ProbabilityArgs,
        /// Density slack in (0, 0.4]: the subgraph keeps more than (1 + eps) n^2 p / 2 edges.
        #[arg(long)]
        eps: f64,
        /// RandomDelete, StarKill or ShortCycleBreaker.
        #[arg(long, default_value = "RandomDelete")]
        strategy: AdversaryKind,
        /// Independent graphs to sample.
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Absolute edge count for G' instead of just above the threshold.
        #[arg(long)]
        edges_after: Option<usize>,
        /// Longest cycle length searched; derived when absent.
        #[arg(long)]
        t_max: Option<usize>,
        /// Treat the bridge-set density and union bounds as hard errors.
        #[arg(long)]
        strict: bool,
        /// CSV output file.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write 0 in the runtime column for byte-identical output.
        #[arg(long)]
        no_timing: bool,
    },
    /// Exhaustive list of cycle lengths (at most 6 vertices per side).
    Oracle {
        /// Edge-list file.
        #[arg(long = "in")]
        input: PathBuf,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn read_graph(path: &Path) -> Result<BipartiteGraph> {
    read_edge_list(BufReader::new(File::open(path)?))
}

fn emit_json(out: &mut dyn Write, value: serde_json::Value) -> Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&value).expect("json values serialize")
    )?;
    Ok(())
}

fn reject_csv(format: Format) -> Result<()> {
    if format == Format::Csv {
        return Err(invalid("--format csv is only supported by resilience"));
    }
    Ok(())
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let g = &cli.global;
    let format = g.format();
    match &cli.command {
        Command::Gen { n, prob, out: path } => {
            reject_csv(format)?;
            let params = prob
                .params(*n, g.seed)?
                .ok_or_else(|| invalid("gen needs --p or --c"))?;
            let graph = sample_gnnp(&params)?;
            match path {
                Some(path) => {
                    let mut w = BufWriter::new(File::create(path)?);
                    write_edge_list(&graph, &mut w)?;
                    w.flush()?;
                    match format {
                        Format::Json => emit_json(
                            out,
                            json!({"n": n, "p": params.p, "seed": g.seed, "edges": graph.edge_count(), "out": path}),
                        )?,
                        _ if !g.quiet => writeln!(
                            out,
                            "n = {n}, p = {}, seed = {}: {} edges written to {}",
                            params.p,
                            g.seed,
                            graph.edge_count(),
                            path.display()
                        )?,
                        _ => {}
                    }
                }
                None => write_edge_list(&graph, &mut *out)?,
            }
            Ok(EXIT_OK)
        }

        Command::Cycles {
            input,
            eps,
            t_max,
            prob,
            strict,
            show_cycles,
        } => {
            reject_csv(format)?;
            let graph = read_graph(input)?;
            let n = graph.n();
            let (params, estimated) = match prob.params(n, g.seed)? {
                Some(params) => (params, false),
                None => {
                    let p = graph.edge_count() as f64 / (n as f64 * n as f64);
                    (ModelParams::with_p(n, p, g.seed)?, true)
                }
            };
            let mut config = PipelineConfig::new(*eps)?;
            if let Some(t) = t_max {
                config = config.with_t_max(*t)?;
            }
            if *strict {
                config = config.with_bridge_mode(BridgeMode::Strict);
            }
            let catalog = find_all_even_cycles(&graph, &config, &params)?;
            let misses: std::collections::BTreeMap<usize, String> = catalog
                .misses
                .iter()
                .map(|(t, r)| (*t, r.to_string()))
                .collect();
            let found = catalog.cycles.len();
            let wanted = catalog.lengths().count();

            match format {
                Format::Json => {
                    let lengths: Vec<_> = catalog
                        .lengths()
                        .map(|t| match catalog.cycles.get(&t) {
                            Some(c) => {
                                let mut entry = json!({"t": t, "found": true});
                                if *show_cycles {
                                    let vs: Vec<String> =
                                        c.0.iter().map(|v| v.to_string()).collect();
                                    entry["cycle"] = json!(vs);
                                }
                                entry
                            }
                            None => json!({"t": t, "found": false, "reason": misses.get(&t)}),
                        })
                        .collect();
                    emit_json(
                        out,
                        json!({
                            "n": n,
                            "edges": graph.edge_count(),
                            "p": params.p,
                            "p_estimated": estimated,
                            "eps": eps,
                            "t_max": catalog.t_max,
                            "below_edge_threshold": catalog.below_edge_threshold,
                            "notice": catalog.notice.as_ref().map(|_| "degenerate scale: t_max < 4"),
                            "lengths": lengths,
                            "found": found,
                            "complete": catalog.is_complete(),
                        }),
                    )?;
                }
                _ if !g.quiet => {
                    writeln!(
                        out,
                        "n = {n}, edges = {}, p = {}{}, eps = {eps}, t_max = {}",
                        graph.edge_count(),
                        params.p,
                        if estimated {
                            " (estimated as m/n^2)"
                        } else {
                            ""
                        },
                        catalog.t_max
                    )?;
                    if catalog.below_edge_threshold {
                        writeln!(
                            out,
                            "warning: edge count is at or below (1 + eps) n^2 p / 2"
                        )?;
                    }
                    if catalog.notice.is_some() {
                        writeln!(out, "degenerate scale: t_max < 4, nothing to search")?;
                    }
                    for t in catalog.lengths() {
                        match catalog.cycles.get(&t) {
                            Some(c) if *show_cycles => writeln!(out, "t={t} found: {c}")?,
                            Some(_) => writeln!(out, "t={t} found")?,
                            None => writeln!(
                                out,
                                "t={t} miss: {}",
                                misses
                                    .get(&t)
                                    .map(String::as_str)
                                    .unwrap_or("not attempted")
                            )?,
                        }
                    }
                    writeln!(out, "found {found} of {wanted} lengths")?;
                }
                _ => {}
            }
            Ok(if catalog.is_complete() {
                EXIT_OK
            } else {
                EXIT_MISSES
            })
        }

        Command::Expand {
            input,
            limit,
            exact,
            trials,
            min_degree,
        } => {
            reject_csv(format)?;
            let graph = read_graph(input)?;
            let members = match min_degree {
                Some(d) => prune_to_min_degree(&graph, &graph.all_vertices(), *d),
                None => graph.all_vertices(),
            };
            let view = graph.induced_subgraph(&members);
            let result = if *exact {
                check_expansion_exact(&view, *limit)?
            } else {
                check_expansion_sampled(&view, *limit, *trials, g.seed)?
            };
            match format {
                Format::Json => emit_json(
                    out,
                    json!({
                        "vertices": view.vertex_count(),
                        "limit": limit,
                        "exact": exact,
                        "result": &result,
                    }),
                )?,
                _ if !g.quiet => {
                    writeln!(
                        out,
                        "view has {} vertices, limit {limit}",
                        view.vertex_count()
                    )?;
                    match &result {
                        ExpansionCheck::Ok {
                            sets_checked,
                            exhaustive,
                        } => writeln!(
                            out,
                            "no witness among {sets_checked} {} sets",
                            if *exhaustive { "enumerated" } else { "sampled" }
                        )?,
                        ExpansionCheck::Witness(w) => {
                            let xs: Vec<String> = w.x.iter().map(|v| v.to_string()).collect();
                            writeln!(
                                out,
                                "witness: |X| = {}, |N(X) \\ X| = {}",
                                w.size(),
                                w.neighborhood_size
                            )?;
                            writeln!(out, "X = {}", xs.join(" "))?;
                        }
                    }
                }
                _ => {}
            }
            Ok(if result.is_ok() {
                EXIT_OK
            } else {
                EXIT_WITNESS
            })
        }

        Command::Resilience {
            n,
            prob,
            eps,
            strategy,
            trials,
            edges_after,
            t_max,
            strict,
            csv,
            no_timing,
        } => {
            let mut cell = ExperimentCell::new(*n, prob.probability()?, *eps, *strategy, *trials);
            cell.t_max_override = *t_max;
            if let Some(k) = edges_after {
                cell.target = EdgeTarget::Absolute(*k);
            }
            if *strict {
                cell.bridge_mode = BridgeMode::Strict;
            }
            let timing = if *no_timing {
                Timing::Omit
            } else {
                Timing::Measure
            };
            let report = run_experiment(&[cell], g.seed, timing)?;
            if let Some(path) = csv {
                let file = BufWriter::new(File::create(path)?);
                report.write_csv(file)?;
            }
            let clean = report.rows.iter().filter(|r| r.misses == 0).count();
            match format {
                Format::Csv => report.write_csv(&mut *out)?,
                Format::Json => {
                    let rows: Vec<_> = report
                        .rows
                        .iter()
                        .map(|r| serde_json::to_value(r).expect("rows serialize"))
                        .collect();
                    emit_json(
                        out,
                        json!({"rows": rows, "miss_free": clean, "trials": report.rows.len()}),
                    )?;
                }
                Format::Text if !g.quiet => {
                    for r in &report.rows {
                        writeln!(
                            out,
                            "seed {} edges_after {} t {} misses {} ({} ms)",
                            r.seed, r.edges_after, r.t_range, r.misses, r.runtime_ms
                        )?;
                    }
                    writeln!(out, "{clean} of {} trials miss-free", report.rows.len())?;
                }
                Format::Text => {}
            }
            Ok(if clean == report.rows.len() {
                EXIT_OK
            } else {
                EXIT_MISSES
            })
        }

        Command::Oracle { input } => {
            reject_csv(format)?;
            let graph = read_graph(input)?;
            let lengths = brute_force_cycle_oracle(&graph)?;
            match format {
                Format::Json => emit_json(out, json!({ "lengths": lengths }))?,
                _ => writeln!(out, "{}", format_length_set(&lengths))?,
            }
            Ok(EXIT_OK)
        }
    }
}
