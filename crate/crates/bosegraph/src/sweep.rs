//! Parameter sweeps: entangling power across an interaction grid, and the
//! side-by-side comparison of exact dynamics against the two-level model.
//!
//! Grids are generated as i·Δε (never by cumulative addition), each grid point
//! is evaluated independently, and parallel evaluation preserves grid order —
//! together that makes sweep output reproducible to the byte.

use rayon::prelude::*;

use crate::entanglement::{entangling_power, entangling_power_refined};
use crate::error::{Error, Result};
use crate::fock::{FockBasis, FockState};
use crate::graphs::RootedGraph;
use crate::perturbation::{
    ep_surrogate, pmax_closed_form_localized, pmax_closed_form_uniform, two_level,
};

/// Default hop amplitude.
pub const DEFAULT_TAU: f64 = 1.0;
/// Default evolution horizon for peak searches.
pub const DEFAULT_HORIZON: f64 = 15.0;
/// Default trajectory sampling interval.
pub const DEFAULT_DT_SAMPLE: f64 = 0.01;
/// Default extent of the interaction grid.
pub const DEFAULT_EPS_MAX: f64 = 20.0;
/// Default spacing of the interaction grid.
pub const DEFAULT_EPS_STEP: f64 = 0.1;

/// The two initial-state families the closed forms cover, with N = L bosons.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StateFamily {
    /// One boson on every site, |1,1,…,1⟩.
    Uniform,
    /// Everything stacked on the root, |N,0,…,0⟩.
    Localized,
}

impl StateFamily {
    pub fn initial_state(self, sites: usize) -> FockState {
        match self {
            StateFamily::Uniform => FockState::uniform(sites),
            StateFamily::Localized => FockState::localized(sites as u32, sites),
        }
    }
}

impl std::str::FromStr for StateFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "uniform" => Ok(StateFamily::Uniform),
            "localized" => Ok(StateFamily::Localized),
            other => Err(Error::InvalidConfig(format!(
                "unknown state family '{other}' (expected 'uniform' or 'localized')"
            ))),
        }
    }
}

impl std::fmt::Display for StateFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            StateFamily::Uniform => "uniform",
            StateFamily::Localized => "localized",
        })
    }
}

/// Ascending interaction grid: 0, Δε, …, ε_max, or its mirror image
/// −ε_max, …, 0 when `negative` is set. Each value is i·Δε exactly.
pub fn eps_grid(eps_max: f64, eps_step: f64, negative: bool) -> Result<Vec<f64>> {
    if !eps_max.is_finite() || eps_max <= 0.0 {
        return Err(Error::InvalidConfig(format!("grid extent must be positive, got {eps_max}")));
    }
    if !eps_step.is_finite() || eps_step <= 0.0 {
        return Err(Error::InvalidConfig(format!("grid step must be positive, got {eps_step}")));
    }
    if eps_step > eps_max {
        return Err(Error::InvalidConfig(format!(
            "grid step {eps_step} exceeds the grid extent {eps_max}"
        )));
    }
    let count = (eps_max / eps_step).round() as i64;
    let values = if negative {
        (-count..=0).map(|i| i as f64 * eps_step).collect()
    } else {
        (0..=count).map(|i| i as f64 * eps_step).collect()
    };
    Ok(values)
}

/// One sweep output row.
#[derive(Clone, Copy, Debug)]
pub struct SweepRow {
    pub eps: f64,
    pub ep: f64,
    pub t_star: f64,
}

/// Entangling power of (`graph`, `psi_in`) at every grid value, in grid order.
#[allow(clippy::too_many_arguments)]
pub fn sweep_rows(
    graph: &RootedGraph,
    psi_in: &FockState,
    eps_values: &[f64],
    tau: f64,
    horizon: f64,
    dt_sample: f64,
    refine: bool,
) -> Result<Vec<SweepRow>> {
    let basis = FockBasis::new(psi_in.particle_count(), psi_in.site_count());
    let a = basis.require_index(psi_in)?;
    let psi0 = basis.basis_vector(a);
    eps_values
        .par_iter()
        .map(|&eps| {
            let result = if refine {
                entangling_power_refined(graph, eps, tau, &psi0, &basis, horizon, dt_sample)?
            } else {
                entangling_power(graph, eps, tau, &psi0, &basis, horizon, dt_sample)?
            };
            Ok(SweepRow { eps, ep: result.ep, t_star: result.t_star })
        })
        .collect()
}

/// One row of the model-comparison output: exact peak, two-level surrogate
/// peak, and the transfer probability from the closed form and from the
/// matrix elements.
#[derive(Clone, Copy, Debug)]
pub struct PredictRow {
    pub eps: f64,
    pub ep_exact: f64,
    pub ep_surrogate: f64,
    pub p_closed: f64,
    pub p_matrix: f64,
}

/// Compare exact dynamics against the two-level model across a grid, for one
/// of the closed-form initial-state families (N = L bosons).
#[allow(clippy::too_many_arguments)]
pub fn predict_rows(
    graph: &RootedGraph,
    family: StateFamily,
    eps_values: &[f64],
    tau: f64,
    horizon: f64,
    dt_sample: f64,
    refine: bool,
) -> Result<Vec<PredictRow>> {
    let sites = graph.sites();
    let psi_in = family.initial_state(sites);
    let basis = FockBasis::new(psi_in.particle_count(), sites);
    let a = basis.require_index(&psi_in)?;
    let psi0 = basis.basis_vector(a);
    let inv = graph.invariants();
    eps_values
        .par_iter()
        .map(|&eps| {
            let exact = if refine {
                entangling_power_refined(graph, eps, tau, &psi0, &basis, horizon, dt_sample)?
            } else {
                entangling_power(graph, eps, tau, &psi0, &basis, horizon, dt_sample)?
            };
            let surrogate = ep_surrogate(graph, &psi_in, eps, tau, &basis)?;
            let p_matrix = two_level(graph, &psi_in, eps, tau, &basis)?.rabi_pmax();
            let p_closed = match family {
                StateFamily::Uniform => pmax_closed_form_uniform(&inv, eps, tau),
                StateFamily::Localized => {
                    pmax_closed_form_localized(&inv, psi_in.particle_count(), eps, tau)
                }
            };
            Ok(PredictRow { eps, ep_exact: exact.ep, ep_surrogate: surrogate, p_closed, p_matrix })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn triangle() -> RootedGraph {
        RootedGraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn grid_covers_zero_to_max_inclusive() {
        let g = eps_grid(1.0, 0.5, false).unwrap();
        assert_eq!(g, vec![0.0, 0.5, 1.0]);
        let full = eps_grid(20.0, 0.1, false).unwrap();
        assert_eq!(full.len(), 201);
        assert_eq!(full[0], 0.0);
        assert_eq!(full[200], 20.0);
    }

    #[test]
    fn negative_grid_is_the_mirror_image_ascending() {
        let g = eps_grid(1.0, 0.5, true).unwrap();
        assert_eq!(g, vec![-1.0, -0.5, 0.0]);
        for w in g.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn grid_rejects_degenerate_parameters() {
        assert!(eps_grid(0.0, 0.1, false).is_err());
        assert!(eps_grid(-1.0, 0.1, false).is_err());
        assert!(eps_grid(1.0, 0.0, false).is_err());
        assert!(eps_grid(1.0, -0.1, false).is_err());
        assert!(eps_grid(0.1, 0.5, false).is_err());
        assert!(eps_grid(f64::NAN, 0.1, false).is_err());
    }

    #[test]
    fn family_names_roundtrip() {
        for f in [StateFamily::Uniform, StateFamily::Localized] {
            assert_eq!(f.to_string().parse::<StateFamily>().unwrap(), f);
        }
        assert_eq!("UNIFORM".parse::<StateFamily>().unwrap(), StateFamily::Uniform);
        assert!("thermal".parse::<StateFamily>().is_err());
    }

    #[test]
    fn family_states_have_matching_particle_counts() {
        let u = StateFamily::Uniform.initial_state(4);
        let l = StateFamily::Localized.initial_state(4);
        assert_eq!(u.occupations(), &[1, 1, 1, 1]);
        assert_eq!(l.occupations(), &[4, 0, 0, 0]);
        assert_eq!(u.particle_count(), l.particle_count());
    }

    #[test]
    fn parallel_rows_match_a_serial_evaluation_bit_for_bit() {
        let g = triangle();
        let psi = FockState::uniform(3);
        let grid = [0.0, 1.5, 10.0];
        let rows = sweep_rows(&g, &psi, &grid, 1.0, 15.0, 0.01, false).unwrap();
        let basis = FockBasis::new(3, 3);
        let psi0 = basis.basis_vector(basis.require_index(&psi).unwrap());
        for (row, &eps) in rows.iter().zip(grid.iter()) {
            let solo = entangling_power(&g, eps, 1.0, &psi0, &basis, 15.0, 0.01).unwrap();
            assert_eq!(row.eps, eps);
            assert_eq!(row.ep, solo.ep);
            assert_eq!(row.t_star, solo.t_star);
        }
        assert_relative_eq!(rows[0].ep, 0.921485098999, epsilon = 1e-6);
        assert_relative_eq!(rows[2].ep, 0.184432092714, epsilon = 1e-6);
    }

    #[test]
    fn comparison_rows_agree_with_their_components() {
        let rows =
            predict_rows(&triangle(), StateFamily::Uniform, &[10.0], 1.0, 15.0, 0.01, false)
                .unwrap();
        assert_eq!(rows.len(), 1);
        let r = &rows[0];
        assert_relative_eq!(r.ep_exact, 0.184432092714, epsilon = 1e-6);
        assert_relative_eq!(r.ep_surrogate, 0.182304509334, epsilon = 1e-6);
        assert_relative_eq!(r.p_closed, 48.0 / 577.0, epsilon = 1e-12);
        assert_relative_eq!(r.p_matrix, r.p_closed, epsilon = 1e-12);
    }
}
