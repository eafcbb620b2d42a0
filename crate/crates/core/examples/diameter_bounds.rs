//! Double-sweep diameter estimate against the exact all-pairs diameter.
//!
//! `cargo run --example diameter_bounds`

use congraph::{double_sweep_estimate, exact_diameter, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> congraph::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    println!("{:>4} {:>4} {:>6} {:>6}", "n", "m", "D^", "exact");
    for &(n, m) in &[(30, 40), (40, 80), (60, 90), (100, 150)] {
        let mut g = Graph::new(n);
        // spanning path keeps the graph connected, then random chords
        for v in 1..n {
            g.add_edge(v - 1, v)?;
        }
        while g.m() < m {
            let (a, b) = (rng.random_range(0..n), rng.random_range(0..n));
            if a != b && !g.has_edge(a, b) {
                g.add_edge(a, b)?;
            }
        }
        let est = double_sweep_estimate(&g, &mut rng);
        let exact = exact_diameter(&g);
        println!(
            "{n:>4} {m:>4} {:>6} {:>6}",
            est.lower.unwrap(),
            exact.exact.unwrap()
        );
    }
    let split = Graph::from_edges(4, [(0, 1), (2, 3)])?;
    println!(
        "two components: connected = {}, within [1, 3] = {}",
        exact_diameter(&split).connected,
        exact_diameter(&split).within(1, 3)
    );
    Ok(())
}
