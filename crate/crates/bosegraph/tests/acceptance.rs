//! End-to-end acceptance gate.
//!
//! Nine independent checks covering the census, the zero-interaction
//! landmarks, near-maximal entanglement on the interaction grid, the
//! bipartite sign symmetry, the triangle counting identity, the closed-form
//! transfer probabilities, the perturbative sign laws, surrogate accuracy,
//! and the built-in diagnostic battery. One line is printed per check; the
//! test fails if any check fails, with the failing sub-cases in the panic
//! message.

use bosegraph::entanglement::entangling_power;
use bosegraph::fock::{FockBasis, FockState};
use bosegraph::graphs::{enumerate_rooted_graphs, RootedGraph};
use bosegraph::hamiltonian::{build_hopping, parity_operator};
use bosegraph::perturbation::{
    ep_surrogate, pmax_closed_form_localized, pmax_closed_form_uniform, two_level,
};
use bosegraph::sweep::StateFamily;
use bosegraph::verify;

struct Criterion {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn ep_of(g: &RootedGraph, family: StateFamily, eps: f64) -> f64 {
    let sites = g.sites();
    let basis = FockBasis::new(sites as u32, sites);
    let psi_in = family.initial_state(sites);
    let psi0 = basis.basis_vector(basis.require_index(&psi_in).unwrap());
    entangling_power(g, eps, 1.0, &psi0, &basis, 15.0, 0.01).unwrap().ep
}

/// Rooted-graph census sizes and bipartite counts.
fn graph_census() -> Criterion {
    let mut ok = true;
    let mut parts = Vec::new();
    for (sites, classes, bipartite) in [(3usize, 3usize, 2usize), (4, 11, 5)] {
        let graphs = enumerate_rooted_graphs(sites).unwrap();
        let bip = graphs.iter().filter(|g| g.invariants().bipartition.is_some()).count();
        ok &= graphs.len() == classes && bip == bipartite;
        parts.push(format!("L={sites}: {}/{} classes ({bip}/{bipartite} bipartite)",
            graphs.len(), classes));
    }
    Criterion { name: "graph census", passed: ok, detail: parts.join("; ") }
}

/// Free-dynamics peaks sit on the known plateaus, graph-independently.
fn free_landmarks() -> Criterion {
    let mut ok = true;
    let mut parts = Vec::new();
    for (sites, family, landmark) in [
        (3usize, StateFamily::Uniform, 0.92),
        (3, StateFamily::Localized, 0.91),
        (4, StateFamily::Uniform, 0.83),
        (4, StateFamily::Localized, 0.87),
    ] {
        let eps_values: Vec<f64> = enumerate_rooted_graphs(sites)
            .unwrap()
            .iter()
            .map(|g| ep_of(g, family, 0.0))
            .collect();
        let lo = eps_values.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = eps_values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let near = eps_values.iter().all(|v| (v - landmark).abs() <= 0.01);
        let tight = hi - lo < 0.01;
        ok &= near && tight;
        parts.push(format!("L={sites} {family}: {lo:.4}..{hi:.4} vs {landmark} (spread {:.1e})",
            hi - lo));
    }
    Criterion { name: "free-dynamics landmarks", passed: ok, detail: parts.join("; ") }
}

/// Somewhere on the interaction grid the localized start entangles > 0.99.
fn near_maximal_on_grid() -> Criterion {
    let mut ok = true;
    let mut worst_eps: f64 = 0.0;
    let mut detail = String::new();
    for sites in [3usize, 4] {
        for (id, g) in enumerate_rooted_graphs(sites).unwrap().iter().enumerate() {
            // Outward scan of the ±20 grid; the peak always sits near 0.
            let mut found = None;
            'scan: for step in 0..=200i64 {
                let signs: &[i64] = if step == 0 { &[1] } else { &[1, -1] };
                for &s in signs {
                    let eps = (s * step) as f64 * 0.1;
                    let v = ep_of(g, StateFamily::Localized, eps);
                    if v > 0.99 {
                        found = Some(eps);
                        break 'scan;
                    }
                }
            }
            match found {
                Some(eps) => worst_eps = worst_eps.max(eps.abs()),
                None => {
                    ok = false;
                    detail.push_str(&format!("L={sites} id {id} never exceeds 0.99; "));
                }
            }
        }
    }
    if ok {
        detail = format!("every localized start exceeds 0.99 by |eps| <= {worst_eps:.1}");
    }
    Criterion { name: "near-maximal entanglement on the grid", passed: ok, detail }
}

/// Bipartite graphs: hop-sign conjugation exact, EP even in ε to 1e−6.
fn bipartite_symmetry() -> Criterion {
    let mut ok = true;
    let mut bad_entries = 0usize;
    let mut worst: f64 = 0.0;
    let mut count = 0usize;
    for sites in [3usize, 4] {
        let basis = FockBasis::new(sites as u32, sites);
        for g in enumerate_rooted_graphs(sites).unwrap() {
            let Some((side_a, _)) = g.bipartition() else { continue };
            count += 1;
            let p = parity_operator(&side_a, &basis).unwrap();
            let hop = build_hopping(&g, 1.0, &basis).unwrap();
            let conj = p.conjugate(&hop.matrix);
            for a in 0..hop.dim() {
                for b in 0..hop.dim() {
                    if conj[(a, b)] != -hop.matrix[(a, b)] {
                        bad_entries += 1;
                    }
                }
            }
            for family in [StateFamily::Uniform, StateFamily::Localized] {
                for eps in [0.5, 1.0, 5.0, 10.0, 20.0] {
                    let diff = (ep_of(&g, family, eps) - ep_of(&g, family, -eps)).abs();
                    worst = worst.max(diff);
                }
            }
        }
    }
    ok &= bad_entries == 0 && worst < 1e-6 && count == 7;
    Criterion {
        name: "bipartite sign symmetry",
        passed: ok,
        detail: format!(
            "{count} bipartite graphs; conjugation mismatches {bad_entries}; worst |EP(+)−EP(−)| = {worst:.2e}"
        ),
    }
}

/// Bright-state hopping self-coupling equals the triangle count formula.
fn triangle_identity() -> Criterion {
    let mut worst: f64 = 0.0;
    let mut worst_bip: f64 = 0.0;
    for sites in 2..=4usize {
        let basis = FockBasis::new(sites as u32, sites);
        for g in enumerate_rooted_graphs(sites).unwrap() {
            let inv = g.invariants();
            let p = two_level(&g, &FockState::uniform(sites), 0.0, 1.0, &basis).unwrap();
            let expected = 18.0 * inv.triangle_count as f64 / (2.0 * inv.edge_count as f64);
            worst = worst.max((p.e2 - expected).abs());
            if inv.bipartition.is_some() {
                worst_bip = worst_bip.max(p.e2.abs());
            }
        }
    }
    Criterion {
        name: "triangle counting identity",
        passed: worst < 1e-9,
        detail: format!(
            "⟨I|H_hop|I⟩ vs 18·l3/(2k): worst |Δ| = {worst:.2e}; bipartite residue {worst_bip:.2e}"
        ),
    }
}

/// Closed-form transfer probabilities equal the matrix elements.
fn closed_forms() -> Criterion {
    let mut worst: f64 = 0.0;
    for sites in 2..=4usize {
        let n = sites as u32;
        let basis = FockBasis::new(n, sites);
        for g in enumerate_rooted_graphs(sites).unwrap() {
            let inv = g.invariants();
            for eps in [-20.0, -10.0, -5.0, -1.0, -0.5, 0.5, 1.0, 5.0, 10.0, 20.0] {
                let uni = two_level(&g, &FockState::uniform(sites), eps, 1.0, &basis)
                    .unwrap()
                    .rabi_pmax();
                worst = worst.max((uni - pmax_closed_form_uniform(&inv, eps, 1.0)).abs());
                let loc = two_level(&g, &FockState::localized(n, sites), eps, 1.0, &basis)
                    .unwrap()
                    .rabi_pmax();
                worst = worst.max((loc - pmax_closed_form_localized(&inv, n, eps, 1.0)).abs());
            }
        }
    }
    Criterion {
        name: "closed-form transfer probabilities",
        passed: worst < 1e-9,
        detail: format!("counting formulas vs matrix elements: worst |Δ| = {worst:.2e}"),
    }
}

/// Perturbative sign laws on non-bipartite graphs.
fn sign_laws() -> Criterion {
    let mut violations = Vec::new();
    let mut checked = 0usize;
    for sites in [3usize, 4] {
        for (id, g) in enumerate_rooted_graphs(sites).unwrap().iter().enumerate() {
            if g.invariants().bipartition.is_some() {
                continue;
            }
            for mag in [10.0, 20.0] {
                let loc_p = ep_of(g, StateFamily::Localized, mag);
                let loc_m = ep_of(g, StateFamily::Localized, -mag);
                let uni_p = ep_of(g, StateFamily::Uniform, mag);
                let uni_m = ep_of(g, StateFamily::Uniform, -mag);
                checked += 1;
                if loc_p < loc_m {
                    violations.push(format!(
                        "L={sites} id {id} localized at |eps|={mag:.0}: Δ = {:+.1e}",
                        loc_p - loc_m
                    ));
                }
                if uni_m <= uni_p {
                    violations.push(format!(
                        "L={sites} id {id} uniform at |eps|={mag:.0}: Δ = {:+.1e}",
                        uni_m - uni_p
                    ));
                }
                if mag == 20.0 {
                    for (eps, u, l) in [(mag, uni_p, loc_p), (-mag, uni_m, loc_m)] {
                        if u <= l {
                            violations.push(format!(
                                "L={sites} id {id} uniform ≤ localized at eps={eps:+.0}"
                            ));
                        }
                    }
                }
            }
        }
    }
    let passed = violations.is_empty();
    let detail = if passed {
        format!("{checked} graph/magnitude cases, all ordered as predicted")
    } else {
        violations.join("; ")
    };
    Criterion { name: "perturbative sign laws", passed, detail }
}

/// Two-level surrogate tracks the exact peak within 0.05 deep in the
/// perturbative regime.
fn surrogate_accuracy() -> Criterion {
    let mut violations = Vec::new();
    let mut worst: f64 = 0.0;
    let mut cases = 0usize;
    for sites in [3usize, 4] {
        let basis = FockBasis::new(sites as u32, sites);
        for (id, g) in enumerate_rooted_graphs(sites).unwrap().iter().enumerate() {
            for family in [StateFamily::Uniform, StateFamily::Localized] {
                let psi_in = family.initial_state(sites);
                for eps in [-20.0, -15.0, -10.0, 10.0, 15.0, 20.0] {
                    cases += 1;
                    let exact = ep_of(g, family, eps);
                    let sur = ep_surrogate(g, &psi_in, eps, 1.0, &basis).unwrap();
                    let diff = (sur - exact).abs();
                    worst = worst.max(diff);
                    if diff > 0.05 {
                        violations.push(format!(
                            "L={sites} id {id} {family} eps={eps:+.0}: |Δ| = {diff:.4}"
                        ));
                    }
                }
            }
        }
    }
    let passed = violations.is_empty();
    let detail = if passed {
        format!("{cases} cases, worst |Δ| = {worst:.4}")
    } else {
        format!("worst |Δ| = {worst:.4}; over tolerance: {}", violations.join("; "))
    };
    Criterion { name: "surrogate accuracy", passed, detail }
}

/// The built-in diagnostic battery must be green.
fn diagnostics() -> Criterion {
    let reports = verify::run_all().unwrap();
    let failed: Vec<&str> =
        reports.iter().filter(|r| !r.passed).map(|r| r.name).collect();
    Criterion {
        name: "diagnostic battery",
        passed: failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{} checks green", reports.len())
        } else {
            format!("failing: {}", failed.join(", "))
        },
    }
}

#[test]
fn acceptance_gate() {
    let criteria = [
        graph_census(),
        free_landmarks(),
        near_maximal_on_grid(),
        bipartite_symmetry(),
        triangle_identity(),
        closed_forms(),
        sign_laws(),
        surrogate_accuracy(),
        diagnostics(),
    ];
    let mut failures = Vec::new();
    for (i, c) in criteria.iter().enumerate() {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        println!("[{mark}] {}/9 {} — {}", i + 1, c.name, c.detail);
        if !c.passed {
            failures.push(format!("{} ({})", c.name, c.detail));
        }
    }
    assert!(
        failures.is_empty(),
        "{} of 9 acceptance checks failed:\n  {}",
        failures.len(),
        failures.join("\n  ")
    );
}
