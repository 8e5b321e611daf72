//! Two-level reduction of the early-time dynamics.
//!
//! Starting from a Fock state |ψin⟩, the hopping term funnels all first-order
//! leakage into a single *bright state* |I⟩ ∝ H_τ|ψin⟩. Truncating the
//! Hamiltonian to span{|ψin⟩, |I⟩} gives a Rabi problem whose peak transfer
//!
//! ```text
//! P = 4W² / (4W² + ΔE²),   W = ‖H_τ|ψin⟩‖,   ΔE = E₁ − E₂
//! ```
//!
//! predicts how strongly the interaction ε throttles (or, with the favorable
//! sign, revives) entanglement generation. For the two initial states of
//! interest the matrix elements collapse to counting: edges, the root degree,
//! triangles, and triangles through the root.

use nalgebra::DVector;
use num_complex::Complex64;

use crate::entanglement::{max_entropy_bits, reduced_distribution};
use crate::error::{Error, Result};
use crate::fock::{FockBasis, FockState, StateVector};
use crate::graphs::{GraphInvariants, RootedGraph};
use crate::hamiltonian;

/// Matrix elements of the truncated two-state problem.
#[derive(Clone, Copy, Debug)]
pub struct TwoLevelParams {
    /// ⟨ψin|H|ψin⟩ — for a Fock state, just the interaction energy.
    pub e1: f64,
    /// ⟨I|H|I⟩ — interaction energy of the bright state plus its hopping
    /// self-coupling, which counts triangles.
    pub e2: f64,
    /// Coupling W = ‖H_τ|ψin⟩‖ = ⟨I|H_τ|ψin⟩.
    pub w: f64,
    /// Number of Fock states the bright state spreads over.
    pub bright_support: usize,
}

impl TwoLevelParams {
    pub fn detuning(&self) -> f64 {
        self.e1 - self.e2
    }

    /// Peak population transferred to the bright state over one Rabi cycle.
    pub fn rabi_pmax(&self) -> f64 {
        let w2 = 4.0 * self.w * self.w;
        w2 / (w2 + self.detuning() * self.detuning())
    }
}

/// Normalized bright state |I⟩ = H_τ|ψin⟩ / ‖·‖ at unit hop amplitude,
/// together with that norm. For τ ≠ 1 the direction is unchanged and the
/// coupling scales linearly.
pub fn bright_state(
    graph: &RootedGraph,
    psi_in: &FockState,
    basis: &FockBasis,
) -> Result<(StateVector, f64)> {
    let a = basis.require_index(psi_in)?;
    let ht = hamiltonian::build_hopping(graph, 1.0, basis)?;
    let v = ht.matrix.column(a).clone_owned();
    let w = v.norm();
    if w == 0.0 {
        // Connected graphs with at least one boson always couple somewhere.
        return Err(Error::InvalidConfig("initial state does not couple to the hopping term".into()));
    }
    let u = v / w;
    let state = StateVector::from_iterator(u.len(), u.iter().map(|&x| Complex64::new(x, 0.0)));
    Ok((state, w))
}

/// Evaluate the two-level matrix elements for |ψin⟩ on `graph` at (ε, τ).
pub fn two_level(
    graph: &RootedGraph,
    psi_in: &FockState,
    eps: f64,
    tau: f64,
    basis: &FockBasis,
) -> Result<TwoLevelParams> {
    let a = basis.require_index(psi_in)?;
    let ht = hamiltonian::build_hopping(graph, tau, basis)?;
    let v = ht.matrix.column(a).clone_owned();
    let w = v.norm();
    if w == 0.0 {
        return Err(Error::InvalidConfig("initial state does not couple to the hopping term".into()));
    }
    let u = &v / w;
    let interaction = |k: usize| eps * f64::from(basis.state(k).occupation_square_sum());
    let e1 = interaction(a);
    let hu = &ht.matrix * &u;
    let e2_hop: f64 = u.dot(&hu);
    let e2_int: f64 = u.iter().enumerate().map(|(k, &x)| x * x * interaction(k)).sum();
    let bright_support = v.iter().filter(|&&x| x != 0.0).count();
    Ok(TwoLevelParams { e1, e2: e2_int + e2_hop, w, bright_support })
}

/// Closed form of [`TwoLevelParams::rabi_pmax`] for the uniform start
/// |1,1,…,1⟩, written in graph counts: k edges and l₃ triangles.
pub fn pmax_closed_form_uniform(inv: &GraphInvariants, eps: f64, tau: f64) -> f64 {
    let k = inv.edge_count as f64;
    let l3 = inv.triangle_count as f64;
    let coupling = 16.0 * tau * tau * k;
    let detuning = 2.0 * eps + 9.0 * tau * l3 / k;
    coupling / (coupling + detuning * detuning)
}

/// Closed form of [`TwoLevelParams::rabi_pmax`] for the localized start
/// |N,0,…,0⟩: k₀ is the root degree and l₃⁰ counts triangles through the root.
pub fn pmax_closed_form_localized(
    inv: &GraphInvariants,
    particles: u32,
    eps: f64,
    tau: f64,
) -> f64 {
    let k0 = inv.root_degree as f64;
    let l30 = inv.root_triangle_count as f64;
    let n = f64::from(particles);
    let coupling = 4.0 * tau * tau * k0 * n;
    let detuning = 2.0 * (n - 1.0) * eps - 2.0 * tau * l30 / k0;
    coupling / (coupling + detuning * detuning)
}

/// The stationary surrogate for the state at peak transfer,
/// |φ⟩ = √(1−P)|ψin⟩ + √P|I⟩. The two components are orthogonal Fock-basis
/// vectors, so |φ⟩ is normalized by construction.
pub fn surrogate_state(
    graph: &RootedGraph,
    psi_in: &FockState,
    eps: f64,
    tau: f64,
    basis: &FockBasis,
) -> Result<StateVector> {
    let params = two_level(graph, psi_in, eps, tau, basis)?;
    let p = params.rabi_pmax();
    let (bright, _) = bright_state(graph, psi_in, basis)?;
    let a = basis.require_index(psi_in)?;
    let mut phi: DVector<Complex64> = bright * Complex64::new(p.sqrt(), 0.0);
    phi[a] += Complex64::new((1.0 - p).sqrt(), 0.0);
    Ok(phi)
}

/// Normalized root-mode entropy of the surrogate state — the two-level
/// stand-in for the exact entangling power.
pub fn ep_surrogate(
    graph: &RootedGraph,
    psi_in: &FockState,
    eps: f64,
    tau: f64,
    basis: &FockBasis,
) -> Result<f64> {
    let phi = surrogate_state(graph, psi_in, eps, tau, basis)?;
    let dist = reduced_distribution(&phi, basis);
    Ok(dist.entropy_bits() / max_entropy_bits(basis.particles()))
}
