//! Binary acceptance refuses any move through an out-of-bounds state: moving
//! a clique edge onto the tail drops clustering below the band, so that
//! direct relocation is never taken.
//!
//! `cargo run --example ergodicity_trap`

use congraph::sampler::{mh_step, validate_seed, StepOutcome};
use congraph::{recount_triangles_triplets, Constraints, Graph, Swap};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> congraph::Result<()> {
    let mut edges: Vec<_> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    edges.extend([(4, 5), (5, 6), (6, 7), (7, 8), (6, 8)]);
    let g = Graph::from_edges(9, edges)?;
    let c = Constraints {
        n: 9,
        m: g.m(),
        cc_min: 0.7,
        cc_max: 0.9,
        diam_min: 1,
        diam_max: 8,
    };
    let ledger = recount_triangles_triplets(&g);
    let moved = g.preview_swap(ledger, &Swap::new((0, 1), (4, 6)))?;
    println!(
        "seed cc {:.3}; moving edge (0,1) to (4,6) would give cc {:.3}, outside [0.7, 0.9]",
        ledger.clustering_coefficient(),
        moved.clustering_coefficient()
    );

    let mut state = validate_seed(g, &c)?;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut distinct = std::collections::HashSet::new();
    let mut clique_broken = 0;
    for _ in 0..20_000 {
        if mh_step(&mut state, &c, &mut rng)? == StepOutcome::Accepted {
            distinct.insert(state.graph.canonical_edges());
            let intact = (0..5).all(|a| (a + 1..5).all(|b| state.graph.has_edge(a, b)));
            clique_broken += usize::from(!intact);
        }
    }
    println!(
        "20000 steps: {} accepted, {} rejected on cc, {} distinct states visited",
        state.accepted,
        state.rejected_cc,
        distinct.len()
    );
    println!("accepted states missing a clique edge: {clique_broken}");
    Ok(())
}
