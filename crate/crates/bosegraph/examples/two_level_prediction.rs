//! How much dynamics does a two-state truncation capture?
//!
//! At strong |ε| the initial Fock state only leaks into the single bright
//! state |I⟩ ∝ H_hop|ψin⟩, and the leakage is a detuned Rabi oscillation with
//! peak transfer P = 4W²/(4W² + ΔE²). Both W and ΔE reduce to graph counting
//! (edges, root degree, triangles), so the *entire* ε-dependence of the
//! entangling power collapses onto closed-form curves — one per initial-state
//! family. This example puts the exact peak, the two-level surrogate, and the
//! closed form side by side on the L = 4 census.
//!
//! ```text
//! cargo run --example two_level_prediction
//! ```

use bosegraph::sweep::{predict_rows, StateFamily};
use bosegraph::{enumerate_rooted_graphs, Result};

fn main() -> Result<()> {
    let graphs = enumerate_rooted_graphs(4)?;

    println!("uniform start |1111>, eps = 10, tau = 1\n");
    println!(
        "{:>2} {:>3} {:>4}   {:>9} {:>12} {:>9} {:>9}",
        "id", "k", "l3", "ep_exact", "ep_surrogate", "p_closed", "p_matrix"
    );
    for (id, g) in graphs.iter().enumerate() {
        let inv = g.invariants();
        let r = &predict_rows(g, StateFamily::Uniform, &[10.0], 1.0, 15.0, 0.01, false)?[0];
        println!(
            "{id:>2} {:>3} {:>4}   {:>9.5} {:>12.5} {:>9.5} {:>9.5}",
            inv.edge_count, inv.triangle_count, r.ep_exact, r.ep_surrogate, r.p_closed, r.p_matrix
        );
    }

    println!("\nlocalized start |4000>, eps = 10: transfer grows with the root degree\n");
    println!("{:>2} {:>3} {:>4}   {:>9} {:>12} {:>9}", "id", "k0", "l3r", "ep_exact", "ep_surrogate", "p_closed");
    for (id, g) in graphs.iter().enumerate() {
        let inv = g.invariants();
        let r = &predict_rows(g, StateFamily::Localized, &[10.0], 1.0, 15.0, 0.01, false)?[0];
        println!(
            "{id:>2} {:>3} {:>4}   {:>9.5} {:>12.5} {:>9.5}",
            inv.root_degree, inv.root_triangle_count, r.ep_exact, r.ep_surrogate, r.p_closed
        );
    }

    println!("\np_matrix equals p_closed to 1e-12 on every class: the closed form is exact,");
    println!("not a fit; ep_surrogate tracks ep_exact to a few percent once |eps| detunes the");
    println!("bright state, which is where the truncation is justified");
    Ok(())
}
