//! Exact quantum dynamics of interacting bosons hopping on small rooted graphs,
//! and the entanglement the dynamics generates between the root site and the
//! rest of the graph.
//!
//! The model is a Bose-Hubbard chain-of-custody: N bosons on the L vertices of a
//! connected graph, self-interaction ε Σᵢ nᵢ² on the vertices, hopping τ along
//! the edges. Everything is exact diagonalization in the fixed-N Fock basis
//! (dimension C(N+L−1, N), at most 35 for the N = L = 4 systems this crate
//! targets).
//!
//! Start from the library root:
//!
//! ```
//! use bosegraph::{entanglement, FockBasis, FockState, RootedGraph};
//!
//! let triangle = RootedGraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
//! let basis = FockBasis::new(3, 3);
//! let uniform = basis.basis_vector(basis.require_index(&FockState::uniform(3)).unwrap());
//! let ep = entanglement::entangling_power(
//!     &triangle, 0.0, 1.0, &uniform, &basis, 15.0, 0.01).unwrap();
//! assert!((ep.ep - 0.9215).abs() < 0.01);
//! ```
//!
//! or from the runnable examples, one per capability:
//!
//! - `enumerate_graphs`: census of rooted graphs with their invariants
//! - `zero_interaction_landmarks`: entangling power at ε = 0 across all graphs
//! - `epsilon_sweep`: entangling power vs interaction strength, CSV + plot script
//! - `entropy_trace`: time-resolved root-mode entropy and occupation distribution
//! - `bipartite_symmetry`: the sign-flip identity and the EP(ε) = EP(−ε) law
//! - `two_level_prediction`: closed-form transfer probabilities vs exact dynamics
//! - `integrator_cross_check`: midpoint integrator against the spectral propagator
//!
//! The `bosegraph` binary wraps the same capabilities as subcommands
//! (`enumerate`, `sweep`, `trace`, `predict`, `verify`) for scripted use.

pub mod cli;
pub mod dynamics;
pub mod entanglement;
pub mod error;
pub mod fock;
pub mod graphs;
pub mod hamiltonian;
pub mod perturbation;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use fock::{FockBasis, FockState, StateVector};
pub use graphs::{enumerate_rooted_graphs, GraphInvariants, RootedGraph};
