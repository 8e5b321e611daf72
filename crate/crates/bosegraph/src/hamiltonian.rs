//! The Bose-Hubbard Hamiltonian on a rooted graph,
//!
//! ```text
//! H = ε Σ_i n_i² + τ Σ_{(i,j)∈E} (c_i† c_j + c_j† c_i)
//! ```
//!
//! assembled as a dense real symmetric matrix in the fixed-N Fock basis. Density
//! never pays a price here: the largest system this crate targets is 35
//! dimensional, where sparse machinery is pure overhead.
//!
//! Also defines the occupation-parity operator over one side of a bipartition,
//! the ingredient of the sign-flip identity P·H_τ·P = −H_τ that makes the
//! dynamics of bipartite graphs even in ε.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{hop_matrix_element, FockBasis, StateVector};
use crate::graphs::RootedGraph;

/// Dense real symmetric Hamiltonian with the parameters it was built from.
#[derive(Clone, Debug)]
pub struct Hamiltonian {
    pub matrix: DMatrix<f64>,
    pub graph: RootedGraph,
    /// Self-interaction strength ε.
    pub eps: f64,
    /// Hopping amplitude τ.
    pub tau: f64,
    pub particles: u32,
}

impl Hamiltonian {
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// H|v⟩.
    pub fn apply(&self, v: &StateVector) -> StateVector {
        apply_real_matrix(&self.matrix, v)
    }

    /// ⟨v|H|v⟩ for a normalized state; real because H is symmetric.
    pub fn expectation(&self, v: &StateVector) -> f64 {
        let hv = self.apply(v);
        v.iter().zip(hv.iter()).map(|(a, b)| (a.conj() * b).re).sum()
    }
}

/// Build H(ε, τ) for `graph` in `basis`. The two must agree on the site count.
///
/// Each off-diagonal entry receives exactly one hop contribution per direction
/// of one edge, and the reversed hop produces the identical float product, so
/// the matrix is symmetric exactly, not just up to round-off.
pub fn build(graph: &RootedGraph, eps: f64, tau: f64, basis: &FockBasis) -> Result<Hamiltonian> {
    if graph.sites() != basis.sites() {
        return Err(Error::SiteCountMismatch { got: graph.sites(), expected: basis.sites() });
    }
    let d = basis.dim();
    let mut m = DMatrix::zeros(d, d);
    for a in 0..d {
        let state = basis.state(a);
        m[(a, a)] = eps * f64::from(state.occupation_square_sum());
        if tau == 0.0 {
            continue;
        }
        for &(i, j) in graph.edges() {
            for (dst, src) in [(i, j), (j, i)] {
                let (image, amp) = hop_matrix_element(state, dst, src)?;
                if amp > 0.0 {
                    let b = basis
                        .index_of(&image)
                        .expect("hop conserves particle number, image stays in basis");
                    m[(b, a)] += tau * amp;
                }
            }
        }
    }
    Ok(Hamiltonian {
        matrix: m,
        graph: graph.clone(),
        eps,
        tau,
        particles: basis.particles(),
    })
}

/// The hopping part alone, H(0, τ).
pub fn build_hopping(graph: &RootedGraph, tau: f64, basis: &FockBasis) -> Result<Hamiltonian> {
    build(graph, 0.0, tau, basis)
}

/// Diagonal parity operator (−1)^(Σ_{j∈side} n_j) over one side of a bipartition.
///
/// For a bipartite graph either side works: every hop moves one boson across
/// the cut, so conjugation flips the sign of the hopping term either way.
#[derive(Clone, Debug)]
pub struct ParityOperator {
    signs: DVector<f64>,
}

impl ParityOperator {
    /// The ±1 sign attached to basis state `a`.
    pub fn sign(&self, a: usize) -> f64 {
        self.signs[a]
    }

    pub fn signs(&self) -> &DVector<f64> {
        &self.signs
    }

    /// P|v⟩.
    pub fn apply(&self, v: &StateVector) -> StateVector {
        StateVector::from_iterator(v.len(), v.iter().zip(self.signs.iter()).map(|(z, s)| z * *s))
    }

    /// P·M·P (P is its own inverse).
    pub fn conjugate(&self, m: &DMatrix<f64>) -> DMatrix<f64> {
        let d = m.nrows();
        DMatrix::from_fn(d, d, |a, b| self.signs[a] * m[(a, b)] * self.signs[b])
    }
}

/// Build the parity operator for the given sites (typically one side of
/// [`RootedGraph::bipartition`]). Fails on out-of-range site indices.
pub fn parity_operator(side: &[usize], basis: &FockBasis) -> Result<ParityOperator> {
    for &site in side {
        if site >= basis.sites() {
            return Err(Error::SiteOutOfRange { site, sites: basis.sites() });
        }
    }
    let signs = DVector::from_iterator(
        basis.dim(),
        basis.states().iter().map(|s| {
            let total: u32 = side.iter().map(|&j| s.occupations()[j]).sum();
            if total.is_multiple_of(2) {
                1.0
            } else {
                -1.0
            }
        }),
    );
    Ok(ParityOperator { signs })
}

/// Multiply a real matrix into a complex vector (real and imaginary parts
/// separately, so the real-valued BLAS path is used for both).
pub(crate) fn apply_real_matrix(m: &DMatrix<f64>, v: &StateVector) -> StateVector {
    let re = DVector::from_iterator(v.len(), v.iter().map(|z| z.re));
    let im = DVector::from_iterator(v.len(), v.iter().map(|z| z.im));
    let mre = m * re;
    let mim = m * im;
    StateVector::from_iterator(
        v.len(),
        mre.iter().zip(mim.iter()).map(|(&r, &i)| Complex64::new(r, i)),
    )
}
