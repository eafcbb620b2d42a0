mod common;

use congraph::diameter::{bfs_eccentricity, exact_diameter, Bfs};
use congraph::double_sweep_estimate;
use congraph::Graph;
use proptest::prelude::*;

use common::*;

fn any_graph() -> impl Strategy<Value = Graph> {
    (1usize..30, 0.0f64..0.5, any::<u64>()).prop_map(|(n, d, seed)| {
        let pairs = n * (n - 1) / 2;
        random_gnm(n, (d * pairs as f64) as usize, &mut rng(seed))
    })
}

fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..40, 0.0f64..0.3, any::<u64>()).prop_map(|(n, d, seed)| {
        let pairs = n * (n - 1) / 2;
        random_connected(n, (d * pairs as f64) as usize, &mut rng(seed))
    })
}

proptest! {
    #[test]
    fn exact_diameter_matches_floyd_warshall(g in any_graph()) {
        let est = exact_diameter(&g);
        let want = fw_diameter(&g);
        prop_assert_eq!(est.exact, want);
        prop_assert_eq!(est.connected, want.is_some());
    }

    #[test]
    fn eccentricities_match_floyd_warshall(g in connected_graph()) {
        let ecc = fw_eccentricities(&g).unwrap();
        for (v, &e) in ecc.iter().enumerate() {
            let got = bfs_eccentricity(&g, v);
            prop_assert_eq!(got.ecc, e);
            prop_assert_eq!(got.reached, g.n());
        }
    }

    #[test]
    fn double_sweep_brackets_the_diameter(g in connected_graph(), seed in any::<u64>()) {
        let diam = fw_diameter(&g).unwrap();
        let est = double_sweep_estimate(&g, &mut rng(seed));
        let d_hat = est.lower.unwrap();
        prop_assert!(d_hat <= diam && diam <= 2 * d_hat);
        prop_assert!(est.connected);
    }

    #[test]
    fn disconnected_graphs_never_pass_bounds(g in any_graph(), seed in any::<u64>()) {
        let est = double_sweep_estimate(&g, &mut rng(seed));
        if fw_diameter(&g).is_none() {
            prop_assert!(!est.connected);
            prop_assert!(!est.within(0, usize::MAX));
            prop_assert!(!exact_diameter(&g).within(0, usize::MAX));
        }
    }

    #[test]
    fn double_sweep_is_exact_on_trees(n in 2usize..150, seed in any::<u64>()) {
        let mut r = rng(seed);
        let t = random_tree(n, &mut r);
        prop_assert_eq!(Bfs::new().double_sweep(&t, &mut r).lower, bfs_diameter(&t));
    }
}

#[test]
fn closed_forms() {
    for n in 2..20 {
        assert_eq!(exact_diameter(&path(n)).exact, Some(n - 1));
        assert_eq!(exact_diameter(&complete(n)).exact, Some(1));
    }
    for n in 3..20 {
        assert_eq!(exact_diameter(&cycle(n)).exact, Some(n / 2));
    }
    assert_eq!(exact_diameter(&Graph::new(1)).exact, Some(0));
    assert!(!exact_diameter(&Graph::new(2)).connected);
}
