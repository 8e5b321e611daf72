//! Textual frontend shared by the thin binary and the examples: deterministic
//! CSV rendering, graph-argument resolution, and optional gnuplot script
//! emission.
//!
//! Every float is printed with 12 significant digits through one formatter,
//! and every row is assembled in grid order, so a given configuration always
//! produces byte-identical output — CSV artifacts are diff-able across runs
//! and machines.

use std::path::Path;

use crate::entanglement::TraceSample;
use crate::error::{Error, Result};
use crate::fock::FockState;
use crate::graphs::{enumerate_rooted_graphs, RootedGraph};
use crate::sweep::{
    eps_grid, predict_rows, sweep_rows, PredictRow, StateFamily, SweepRow,
};

/// Format with 12 significant digits, trimming trailing zeros; fixed notation
/// in the human range, scientific outside it. `0` stays `0`.
pub fn fmt_float(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("{:e} always contains an exponent");
    let exp: i32 = exp.parse().expect("{:e} exponent is an integer");
    if (-4..=11).contains(&exp) {
        let decimals = (11 - exp) as usize;
        strip_trailing_zeros(format!("{x:.decimals$}"))
    } else {
        let mantissa = strip_trailing_zeros(mantissa.to_string());
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    }
}

fn strip_trailing_zeros(mut s: String) -> String {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

fn push_label(out: &mut String, label: Option<&str>) {
    if let Some(note) = label {
        out.push_str("# ");
        out.push_str(note);
        out.push('\n');
    }
}

/// `eps,ep,t_star` rows, optionally preceded by a `# note` comment line.
pub fn render_sweep_csv(rows: &[SweepRow], label: Option<&str>) -> String {
    let mut out = String::new();
    push_label(&mut out, label);
    out.push_str("eps,ep,t_star\n");
    for r in rows {
        out.push_str(&fmt_float(r.eps));
        out.push(',');
        out.push_str(&fmt_float(r.ep));
        out.push(',');
        out.push_str(&fmt_float(r.t_star));
        out.push('\n');
    }
    out
}

/// `t,entropy,rho_0..rho_N,norm` rows.
pub fn render_trace_csv(samples: &[TraceSample], label: Option<&str>) -> String {
    let mut out = String::new();
    push_label(&mut out, label);
    let levels = samples.first().map_or(0, |s| s.distribution.probs().len());
    out.push_str("t,entropy");
    for n in 0..levels {
        out.push_str(&format!(",rho_{n}"));
    }
    out.push_str(",norm\n");
    for s in samples {
        out.push_str(&fmt_float(s.t));
        out.push(',');
        out.push_str(&fmt_float(s.entropy));
        for &p in s.distribution.probs() {
            out.push(',');
            out.push_str(&fmt_float(p));
        }
        out.push(',');
        out.push_str(&fmt_float(s.norm));
        out.push('\n');
    }
    out
}

/// `eps,ep_exact,ep_surrogate,p_closed,p_matrix` rows.
pub fn render_predict_csv(rows: &[PredictRow], label: Option<&str>) -> String {
    let mut out = String::new();
    push_label(&mut out, label);
    out.push_str("eps,ep_exact,ep_surrogate,p_closed,p_matrix\n");
    for r in rows {
        for (i, v) in [r.eps, r.ep_exact, r.ep_surrogate, r.p_closed, r.p_matrix]
            .into_iter()
            .enumerate()
        {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&fmt_float(v));
        }
        out.push('\n');
    }
    out
}

/// Census table: one row per rooted-graph class with its stable ID, edge list,
/// and the invariants that drive the closed-form predictions.
pub fn render_census_csv(graphs: &[RootedGraph]) -> String {
    let mut out = String::from("id,edges,edge_count,root_degree,triangles,root_triangles,bipartite\n");
    for (id, g) in graphs.iter().enumerate() {
        let inv = g.invariants();
        let edges: Vec<String> =
            g.edges().iter().map(|&(i, j)| format!("{i}-{j}")).collect();
        out.push_str(&format!(
            "{id},{},{},{},{},{},{}\n",
            edges.join(";"),
            inv.edge_count,
            inv.root_degree,
            inv.triangle_count,
            inv.root_triangle_count,
            inv.bipartition.is_some(),
        ));
    }
    out
}

/// Which quantity a generated gnuplot script should draw.
#[derive(Clone, Copy, Debug)]
pub enum PlotKind {
    Sweep,
    Trace,
    Predict,
}

/// A minimal gnuplot script that plots the given CSV. Comment lines starting
/// with `#` are skipped by gnuplot automatically.
pub fn gnuplot_script(kind: PlotKind, csv_path: &str, title: &str) -> String {
    let mut out = String::new();
    out.push_str("set datafile separator ','\n");
    out.push_str(&format!("set title '{title}'\n"));
    out.push_str("set key autotitle columnhead\n");
    match kind {
        PlotKind::Sweep => {
            out.push_str("set xlabel 'eps'\nset ylabel 'entangling power'\n");
            out.push_str(&format!("plot '{csv_path}' using 1:2 with lines\n"));
        }
        PlotKind::Trace => {
            out.push_str("set xlabel 't'\nset ylabel 'entropy (bits)'\n");
            out.push_str(&format!("plot '{csv_path}' using 1:2 with lines\n"));
        }
        PlotKind::Predict => {
            out.push_str("set xlabel 'eps'\nset ylabel 'entangling power'\n");
            out.push_str(&format!(
                "plot '{csv_path}' using 1:2 with lines, '{csv_path}' using 1:3 with lines\n"
            ));
        }
    }
    out
}

/// Resolve a graph argument: a bare integer picks that stable ID out of the
/// census (which needs a site count from elsewhere — the initial state or an
/// explicit flag), anything else is read as a JSON graph file.
pub fn resolve_graph(spec: &str, sites_hint: Option<usize>) -> Result<RootedGraph> {
    if let Ok(id) = spec.parse::<usize>() {
        let sites = sites_hint.ok_or_else(|| {
            Error::InvalidConfig(
                "a numeric graph ID needs a site count (from the initial state or --sites)".into(),
            )
        })?;
        let graphs = enumerate_rooted_graphs(sites)?;
        let count = graphs.len();
        return graphs
            .into_iter()
            .nth(id)
            .ok_or(Error::UnknownGraphId { id, sites, count });
    }
    RootedGraph::from_file(Path::new(spec))
}

/// Everything an entangling-power sweep needs.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub graph: RootedGraph,
    pub psi_in: FockState,
    pub eps_max: f64,
    pub eps_step: f64,
    pub tau: f64,
    pub horizon: f64,
    pub dt_sample: f64,
    pub negative: bool,
    pub refine: bool,
    pub label: Option<String>,
}

/// Run a sweep and render its CSV.
pub fn run_sweep(cfg: &SweepConfig) -> Result<String> {
    let grid = eps_grid(cfg.eps_max, cfg.eps_step, cfg.negative)?;
    let rows = sweep_rows(
        &cfg.graph,
        &cfg.psi_in,
        &grid,
        cfg.tau,
        cfg.horizon,
        cfg.dt_sample,
        cfg.refine,
    )?;
    Ok(render_sweep_csv(&rows, cfg.label.as_deref()))
}

/// Everything an entropy trace needs.
#[derive(Clone, Debug)]
pub struct TraceConfig {
    pub graph: RootedGraph,
    pub psi_in: FockState,
    pub eps: f64,
    pub tau: f64,
    pub horizon: f64,
    pub dt_sample: f64,
    pub label: Option<String>,
}

/// Run a single-ε trace and render its CSV.
pub fn run_trace(cfg: &TraceConfig) -> Result<String> {
    let basis = crate::fock::FockBasis::new(cfg.psi_in.particle_count(), cfg.psi_in.site_count());
    let a = basis.require_index(&cfg.psi_in)?;
    let psi0 = basis.basis_vector(a);
    let samples = crate::entanglement::entropy_trace(
        &cfg.graph,
        cfg.eps,
        cfg.tau,
        &psi0,
        &basis,
        cfg.horizon,
        cfg.dt_sample,
    )?;
    Ok(render_trace_csv(&samples, cfg.label.as_deref()))
}

/// Everything a model-comparison run needs.
#[derive(Clone, Debug)]
pub struct PredictConfig {
    pub graph: RootedGraph,
    pub family: StateFamily,
    pub eps_max: f64,
    pub eps_step: f64,
    pub tau: f64,
    pub horizon: f64,
    pub dt_sample: f64,
    pub negative: bool,
    pub refine: bool,
    pub label: Option<String>,
}

/// Run the exact-versus-two-level comparison and render its CSV.
pub fn run_predict(cfg: &PredictConfig) -> Result<String> {
    let grid = eps_grid(cfg.eps_max, cfg.eps_step, cfg.negative)?;
    let rows = predict_rows(
        &cfg.graph,
        cfg.family,
        &grid,
        cfg.tau,
        cfg.horizon,
        cfg.dt_sample,
        cfg.refine,
    )?;
    Ok(render_predict_csv(&rows, cfg.label.as_deref()))
}

/// Render the census for a site count.
pub fn run_enumerate(sites: usize) -> Result<String> {
    Ok(render_census_csv(&enumerate_rooted_graphs(sites)?))
}
