//! Fock space of N bosons on L sites.
//!
//! A basis state is an occupation vector (n_0, ..., n_{L-1}) with Σ nᵢ = N; there
//! are C(N+L−1, N) of them. States are ordered lexicographically descending, so
//! |N,0,...,0⟩ comes first and |0,...,0,N⟩ last. The ordering is a plain sort on
//! the occupation tuples and does not depend on hash state, which keeps every
//! downstream artifact (matrices, eigenvectors, CSV files) reproducible.

use std::collections::HashMap;
use std::fmt;

use nalgebra::DVector;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex amplitude vector over a [`FockBasis`], indexed like [`FockBasis::states`].
pub type StateVector = DVector<Complex64>;

/// One bosonic occupation configuration.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FockState {
    occ: Vec<u32>,
}

impl FockState {
    pub fn new(occ: Vec<u32>) -> Self {
        Self { occ }
    }

    /// All N particles on site 0: |N,0,...,0⟩.
    pub fn localized(particles: u32, sites: usize) -> Self {
        let mut occ = vec![0; sites];
        occ[0] = particles;
        Self { occ }
    }

    /// One particle per site: |1,1,...,1⟩ (so N = L).
    pub fn uniform(sites: usize) -> Self {
        Self { occ: vec![1; sites] }
    }

    pub fn occupations(&self) -> &[u32] {
        &self.occ
    }

    pub fn site_count(&self) -> usize {
        self.occ.len()
    }

    pub fn particle_count(&self) -> u32 {
        self.occ.iter().sum()
    }

    /// Σ nᵢ², the weight the self-interaction term assigns to this state.
    pub fn occupation_square_sum(&self) -> u32 {
        self.occ.iter().map(|&n| n * n).sum()
    }
}

impl fmt::Debug for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}⟩", self)
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.occ.iter().map(|n| n.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parse an occupation vector from CLI text: either one digit per site ("111",
/// "4000") or comma-separated counts ("4,0,0,0").
pub fn parse_occupations(text: &str) -> Result<FockState> {
    let bad = |msg: String| Error::InvalidConfig(msg);
    let occ: Vec<u32> = if text.contains(',') {
        text.split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| bad(format!("bad occupation entry {p:?} in {text:?}")))
            })
            .collect::<Result<_>>()?
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| bad(format!("bad occupation digit {c:?} in {text:?}")))
            })
            .collect::<Result<_>>()?
    };
    if occ.is_empty() {
        return Err(bad("empty occupation vector".into()));
    }
    if occ.iter().all(|&n| n == 0) {
        return Err(bad("occupation vector has no particles".into()));
    }
    Ok(FockState::new(occ))
}

/// The full fixed-N basis, with a bidirectional state/index map.
///
/// Immutable after construction, so it can be shared freely across parallel
/// sweep workers.
pub struct FockBasis {
    states: Vec<FockState>,
    index: HashMap<Vec<u32>, usize>,
    sites: usize,
    particles: u32,
}

impl FockBasis {
    /// Enumerate all occupation vectors of `particles` bosons on `sites` sites,
    /// in descending lexicographic order.
    pub fn new(particles: u32, sites: usize) -> Self {
        assert!(sites >= 1, "need at least one site");
        let mut states = Vec::with_capacity(dimension(particles, sites));
        let mut occ = vec![0u32; sites];
        fill(&mut states, &mut occ, 0, particles);
        let index = states
            .iter()
            .enumerate()
            .map(|(a, s)| (s.occ.clone(), a))
            .collect();
        Self { states, index, sites, particles }
    }

    pub fn dim(&self) -> usize {
        self.states.len()
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn particles(&self) -> u32 {
        self.particles
    }

    pub fn states(&self) -> &[FockState] {
        &self.states
    }

    pub fn state(&self, a: usize) -> &FockState {
        &self.states[a]
    }

    pub fn index_of(&self, state: &FockState) -> Option<usize> {
        self.index.get(&state.occ).copied()
    }

    /// Unit basis vector |a⟩ as a complex amplitude vector.
    pub fn basis_vector(&self, a: usize) -> StateVector {
        let mut v = StateVector::zeros(self.dim());
        v[a] = Complex64::new(1.0, 0.0);
        v
    }

    /// Index of `state`, or an error naming the offending occupations.
    pub fn require_index(&self, state: &FockState) -> Result<usize> {
        if state.site_count() != self.sites {
            return Err(Error::SiteCountMismatch { got: state.site_count(), expected: self.sites });
        }
        self.index_of(state)
            .ok_or_else(|| Error::StateNotInBasis(state.occ.clone()))
    }
}

/// Emit, in descending lexicographic order, every way to drop `remaining` bosons
/// on the sites from `site` onward.
fn fill(out: &mut Vec<FockState>, occ: &mut Vec<u32>, site: usize, remaining: u32) {
    if site + 1 == occ.len() {
        occ[site] = remaining;
        out.push(FockState::new(occ.clone()));
        return;
    }
    for n in (0..=remaining).rev() {
        occ[site] = n;
        fill(out, occ, site + 1, remaining - n);
    }
    occ[site] = 0;
}

/// Basis size C(particles + sites − 1, particles).
pub fn dimension(particles: u32, sites: usize) -> usize {
    let n = particles as u64 + sites as u64 - 1;
    let k = (particles as u64).min(n - particles as u64);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc as usize
}

/// Matrix element of the hop cᵢ†cⱼ that moves one boson from site `j` to site `i`.
///
/// Returns the image state together with the amplitude √(nⱼ)·√(nᵢ+1). When site
/// `j` is empty the amplitude is 0 and the input state is returned unchanged.
/// Fails if either index is out of range or the endpoints coincide.
pub fn hop_matrix_element(state: &FockState, i: usize, j: usize) -> Result<(FockState, f64)> {
    let sites = state.site_count();
    for site in [i, j] {
        if site >= sites {
            return Err(Error::SiteOutOfRange { site, sites });
        }
    }
    if i == j {
        return Err(Error::HopOnSameSite(i));
    }
    let n_j = state.occ[j];
    if n_j == 0 {
        return Ok((state.clone(), 0.0));
    }
    let n_i = state.occ[i];
    let mut occ = state.occ.clone();
    occ[j] -= 1;
    occ[i] += 1;
    let amp = ((n_j as f64) * (n_i as f64 + 1.0)).sqrt();
    Ok((FockState::new(occ), amp))
}
