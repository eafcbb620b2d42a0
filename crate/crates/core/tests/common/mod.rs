//! Brute-force oracles and graph builders shared by the integration tests.
//! Nothing here calls into the library's own counting or BFS code.
#![allow(dead_code)]

use congraph::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// Uniform random labelled tree via a Prüfer sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n < 2 {
        return Graph::new(n);
    }
    if n == 2 {
        return Graph::from_edges(2, [(0, 1)]).unwrap();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).unwrap()
}

/// Random spanning tree plus uniformly chosen extra edges, `max(m, n-1)` edges in total.
pub fn random_connected<R: Rng>(n: usize, m: usize, rng: &mut R) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::new(n);
    for i in 1..n {
        let j = rng.random_range(0..i);
        g.add_edge(order[i], order[j]).unwrap();
    }
    let target = m.min(n * (n - 1) / 2);
    while g.m() < target {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a != b && !g.has_edge(a, b) {
            g.add_edge(a, b).unwrap();
        }
    }
    g
}

/// Erdős–Rényi G(n, m); may be disconnected.
pub fn random_gnm<R: Rng>(n: usize, m: usize, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    while g.m() < m {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a != b && !g.has_edge(a, b) {
            g.add_edge(a, b).unwrap();
        }
    }
    g
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Triangles by enumerating every vertex triple.
pub fn brute_triangles(g: &Graph) -> u64 {
    let a = adjacency(g);
    let n = g.n();
    let mut t = 0;
    for i in 0..n {
        for j in i + 1..n {
            if !a[i][j] {
                continue;
            }
            for k in j + 1..n {
                if a[i][k] && a[j][k] {
                    t += 1;
                }
            }
        }
    }
    t
}

/// Connected triplets (paths of length two, counted by centre).
pub fn brute_triplets(g: &Graph) -> u64 {
    let a = adjacency(g);
    let n = g.n();
    let mut t = 0;
    for c in 0..n {
        for i in 0..n {
            for j in i + 1..n {
                if i != c && j != c && a[c][i] && a[c][j] {
                    t += 1;
                }
            }
        }
    }
    t
}

pub fn brute_cc(g: &Graph) -> f64 {
    let l = brute_triplets(g);
    if l == 0 {
        0.0
    } else {
        3.0 * brute_triangles(g) as f64 / l as f64
    }
}

/// All-pairs shortest paths; `usize::MAX` marks unreachable pairs.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let inf = usize::MAX;
    let mut d = vec![vec![inf; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == inf {
                continue;
            }
            for j in 0..n {
                if d[k][j] != inf && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// `None` when disconnected.
pub fn fw_diameter(g: &Graph) -> Option<usize> {
    let d = floyd_warshall(g);
    let mut best = 0;
    for row in &d {
        for &x in row {
            if x == usize::MAX {
                return None;
            }
            best = best.max(x);
        }
    }
    Some(best)
}

pub fn fw_eccentricities(g: &Graph) -> Option<Vec<usize>> {
    let d = floyd_warshall(g);
    d.iter()
        .map(|row| {
            if row.contains(&usize::MAX) {
                None
            } else {
                row.iter().copied().max()
            }
        })
        .collect()
}

/// Relabels nodes by `perm` (node `v` becomes `perm[v]`).
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.n(), g.edges().iter().map(|&(a, b)| (perm[a], perm[b]))).unwrap()
}

/// Normalized-Laplacian eigenvalues via Sturm-sequence bisection on the
/// characteristic polynomial of a Householder tridiagonalisation. Independent
/// of the library's dense eigensolver; intended for n ≤ 8.
pub fn bisection_spectrum(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let deg: Vec<f64> = g.degrees().map(|d| d as f64).collect();
    let mut a = vec![vec![0.0f64; n]; n];
    for v in 0..n {
        if deg[v] > 0.0 {
            a[v][v] = 1.0;
        }
    }
    for &(u, v) in g.edges() {
        let w = -1.0 / (deg[u] * deg[v]).sqrt();
        a[u][v] = w;
        a[v][u] = w;
    }
    let (diag, off) = tridiagonalize(a);
    let count_below = |x: f64| -> usize {
        // Sturm count: number of eigenvalues < x.
        let mut c = 0;
        let mut q = diag[0] - x;
        if q < 0.0 {
            c += 1;
        }
        for i in 1..n {
            let denom = if q == 0.0 { f64::EPSILON } else { q };
            q = diag[i] - x - off[i - 1] * off[i - 1] / denom;
            if q < 0.0 {
                c += 1;
            }
        }
        c
    };
    (0..n)
        .map(|k| {
            let (mut lo, mut hi) = (-0.5f64, 2.5f64);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if count_below(mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect()
}

fn tridiagonalize(mut a: Vec<Vec<f64>>) -> (Vec<f64>, Vec<f64>) {
    let n = a.len();
    for k in 0..n.saturating_sub(2) {
        let alpha_sq: f64 = (k + 1..n).map(|i| a[i][k] * a[i][k]).sum();
        if alpha_sq < 1e-300 {
            continue;
        }
        let sign = if a[k + 1][k] >= 0.0 { 1.0 } else { -1.0 };
        let alpha = -sign * alpha_sq.sqrt();
        let mut v = vec![0.0; n];
        v[k + 1] = a[k + 1][k] - alpha;
        for i in k + 2..n {
            v[i] = a[i][k];
        }
        let vnorm_sq: f64 = v.iter().map(|x| x * x).sum();
        if vnorm_sq < 1e-300 {
            continue;
        }
        // A <- H A H with H = I - 2 v vᵀ / (vᵀv)
        let p: Vec<f64> = (0..n)
            .map(|i| (0..n).map(|j| a[i][j] * v[j]).sum::<f64>() * 2.0 / vnorm_sq)
            .collect();
        let kfac: f64 = (0..n).map(|i| v[i] * p[i]).sum::<f64>() / vnorm_sq;
        let q: Vec<f64> = (0..n).map(|i| p[i] - kfac * v[i]).collect();
        for i in 0..n {
            for j in 0..n {
                a[i][j] -= v[i] * q[j] + q[i] * v[j];
            }
        }
    }
    let diag = (0..n).map(|i| a[i][i]).collect();
    let off = (1..n).map(|i| a[i][i - 1]).collect();
    (diag, off)
}

/// Exact diameter from one plain BFS per source; `None` when disconnected.
pub fn bfs_diameter(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best = 0;
    let mut dist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        for &d in &dist {
            if d == usize::MAX {
                return None;
            }
            best = best.max(d);
        }
    }
    Some(best)
}
