//! Incremental triangle/triplet bookkeeping under edge swaps.
//!
//! `cargo run --example triangle_ledger`

use congraph::{recount_triangles_triplets, Graph, Swap};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> congraph::Result<()> {
    // a 5-clique with a short tail and one chord
    let mut edges: Vec<_> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    edges.extend([(4, 5), (5, 6), (6, 7), (7, 8), (6, 8)]);
    let mut g = Graph::from_edges(9, edges)?;
    let mut ledger = recount_triangles_triplets(&g);
    println!(
        "start: triangles {}, triplets {}, cc {:.4}",
        ledger.triangles,
        ledger.triplets,
        ledger.clustering_coefficient()
    );

    let swap = Swap::new((0, 1), (4, 6));
    let preview = g.preview_swap(ledger, &swap)?;
    println!(
        "preview {:?} -> {:?}: triangles {}, triplets {}, cc {:.4} (graph untouched)",
        swap.remove,
        swap.insert,
        preview.triangles,
        preview.triplets,
        preview.clustering_coefficient()
    );

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let s = Swap::new(g.sample_random_edge(&mut rng)?, g.sample_random_non_edge(&mut rng)?);
        g.apply_swap_with_ledger(&mut ledger, &s)?;
    }
    let recount = recount_triangles_triplets(&g);
    println!(
        "after 1000 random swaps: ledger {:?}, recount {:?}, equal: {}",
        ledger,
        recount,
        ledger == recount
    );
    Ok(())
}
