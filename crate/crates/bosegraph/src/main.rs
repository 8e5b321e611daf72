use std::path::PathBuf;

use clap::{Parser, Subcommand};

use bosegraph::cli::{
    gnuplot_script, resolve_graph, run_enumerate, run_predict, run_sweep, run_trace, PlotKind,
    PredictConfig, SweepConfig, TraceConfig,
};
use bosegraph::error::{Error, Result};
use bosegraph::fock::parse_occupations;
use bosegraph::sweep::StateFamily;
use bosegraph::verify;

/// Bose-Hubbard dynamics and root-mode entanglement on small rooted graphs.
#[derive(Parser)]
#[command(name = "bosegraph", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List every rooted connected graph on the given number of sites.
    Enumerate {
        /// Number of sites L (2 through 6).
        #[arg(long)]
        sites: usize,
    },
    /// Scan the interaction strength and record the entangling power.
    Sweep {
        /// Graph: a census ID (needs a site count from --psi) or a JSON file.
        #[arg(long)]
        graph: String,
        /// Initial occupations, e.g. `111` or `3,0,0`.
        #[arg(long)]
        psi: String,
        /// Largest |ε| on the grid.
        #[arg(long, default_value_t = 20.0)]
        eps_max: f64,
        /// Grid spacing.
        #[arg(long, default_value_t = 0.1)]
        eps_step: f64,
        /// Hop amplitude τ.
        #[arg(long, default_value_t = 1.0)]
        tau: f64,
        /// Peak-search horizon T.
        #[arg(long, default_value_t = 15.0)]
        horizon: f64,
        /// Trajectory sampling interval.
        #[arg(long, default_value_t = 0.01)]
        dt: f64,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Sweep −ε_max..0 instead of 0..ε_max.
        #[arg(long)]
        negative: bool,
        /// Polish each grid peak with a golden-section search.
        #[arg(long)]
        refine: bool,
        /// Also emit a gnuplot script for the CSV (requires --out).
        #[arg(long)]
        plot_script: Option<PathBuf>,
        /// Free-form note copied into the CSV as a leading `#` comment.
        #[arg(long)]
        paper_label: Option<String>,
    },
    /// Record the full entropy trace at one interaction strength.
    Trace {
        /// Graph: a census ID (needs a site count from --psi) or a JSON file.
        #[arg(long)]
        graph: String,
        /// Initial occupations, e.g. `111` or `3,0,0`.
        #[arg(long)]
        psi: String,
        /// Interaction strength ε.
        #[arg(long, default_value_t = 0.0)]
        eps: f64,
        /// Hop amplitude τ.
        #[arg(long, default_value_t = 1.0)]
        tau: f64,
        /// Trace length T.
        #[arg(long, default_value_t = 15.0)]
        horizon: f64,
        /// Trajectory sampling interval.
        #[arg(long, default_value_t = 0.01)]
        dt: f64,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also emit a gnuplot script for the CSV (requires --out).
        #[arg(long)]
        plot_script: Option<PathBuf>,
        /// Free-form note copied into the CSV as a leading `#` comment.
        #[arg(long)]
        paper_label: Option<String>,
    },
    /// Compare exact dynamics against the two-level model across a grid.
    Predict {
        /// Graph: a census ID (needs --sites) or a JSON file.
        #[arg(long)]
        graph: String,
        /// Initial-state family: `uniform` or `localized` (N = L bosons).
        #[arg(long)]
        family: String,
        /// Site count, required when --graph is a census ID.
        #[arg(long)]
        sites: Option<usize>,
        /// Largest |ε| on the grid.
        #[arg(long, default_value_t = 20.0)]
        eps_max: f64,
        /// Grid spacing.
        #[arg(long, default_value_t = 0.1)]
        eps_step: f64,
        /// Hop amplitude τ.
        #[arg(long, default_value_t = 1.0)]
        tau: f64,
        /// Peak-search horizon T.
        #[arg(long, default_value_t = 15.0)]
        horizon: f64,
        /// Trajectory sampling interval.
        #[arg(long, default_value_t = 0.01)]
        dt: f64,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Sweep −ε_max..0 instead of 0..ε_max.
        #[arg(long)]
        negative: bool,
        /// Polish each grid peak with a golden-section search.
        #[arg(long)]
        refine: bool,
        /// Also emit a gnuplot script for the CSV (requires --out).
        #[arg(long)]
        plot_script: Option<PathBuf>,
        /// Free-form note copied into the CSV as a leading `#` comment.
        #[arg(long)]
        paper_label: Option<String>,
    },
    /// Run the built-in cross-validation battery.
    Verify,
}

fn emit(
    csv: String,
    out: Option<&PathBuf>,
    plot: Option<(&PathBuf, PlotKind, String)>,
) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, csv)?,
        None => print!("{csv}"),
    }
    if let Some((script_path, kind, title)) = plot {
        let csv_path = out.ok_or_else(|| {
            Error::InvalidConfig("--plot-script needs --out so the script can reference the CSV".into())
        })?;
        let script = gnuplot_script(kind, &csv_path.display().to_string(), &title);
        std::fs::write(script_path, script)?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Enumerate { sites } => {
            print!("{}", run_enumerate(sites)?);
            Ok(0)
        }
        Cmd::Sweep {
            graph,
            psi,
            eps_max,
            eps_step,
            tau,
            horizon,
            dt,
            out,
            negative,
            refine,
            plot_script,
            paper_label,
        } => {
            let psi_in = parse_occupations(&psi)?;
            let graph = resolve_graph(&graph, Some(psi_in.site_count()))?;
            let title = format!("sweep: psi = {psi_in}");
            let cfg = SweepConfig {
                graph,
                psi_in,
                eps_max,
                eps_step,
                tau,
                horizon,
                dt_sample: dt,
                negative,
                refine,
                label: paper_label,
            };
            let csv = run_sweep(&cfg)?;
            emit(csv, out.as_ref(), plot_script.as_ref().map(|p| (p, PlotKind::Sweep, title)))?;
            Ok(0)
        }
        Cmd::Trace { graph, psi, eps, tau, horizon, dt, out, plot_script, paper_label } => {
            let psi_in = parse_occupations(&psi)?;
            let graph = resolve_graph(&graph, Some(psi_in.site_count()))?;
            let title = format!("trace: psi = {psi_in}, eps = {eps}");
            let cfg = TraceConfig {
                graph,
                psi_in,
                eps,
                tau,
                horizon,
                dt_sample: dt,
                label: paper_label,
            };
            let csv = run_trace(&cfg)?;
            emit(csv, out.as_ref(), plot_script.as_ref().map(|p| (p, PlotKind::Trace, title)))?;
            Ok(0)
        }
        Cmd::Predict {
            graph,
            family,
            sites,
            eps_max,
            eps_step,
            tau,
            horizon,
            dt,
            out,
            negative,
            refine,
            plot_script,
            paper_label,
        } => {
            let family: StateFamily = family.parse()?;
            let graph = resolve_graph(&graph, sites)?;
            if let Some(sites) = sites {
                if sites != graph.sites() {
                    return Err(Error::SiteCountMismatch { got: graph.sites(), expected: sites });
                }
            }
            let title = format!("predict: {family} start");
            let cfg = PredictConfig {
                graph,
                family,
                eps_max,
                eps_step,
                tau,
                horizon,
                dt_sample: dt,
                negative,
                refine,
                label: paper_label,
            };
            let csv = run_predict(&cfg)?;
            emit(csv, out.as_ref(), plot_script.as_ref().map(|p| (p, PlotKind::Predict, title)))?;
            Ok(0)
        }
        Cmd::Verify => {
            let reports = verify::run_all()?;
            for r in &reports {
                let mark = if r.passed { " ok " } else { "FAIL" };
                println!("[{mark}] {:<28} {}", r.name, r.detail);
            }
            if verify::all_passed(&reports) {
                println!("all {} checks passed", reports.len());
                Ok(0)
            } else {
                let failed = reports.iter().filter(|r| !r.passed).count();
                println!("{failed} of {} checks failed", reports.len());
                Ok(3)
            }
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
