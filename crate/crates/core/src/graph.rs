//! Simple undirected graphs with exact triangle and triplet bookkeeping.
//!
//! [`Graph`] keeps sorted adjacency arrays next to an indexed edge list, so a
//! uniform edge can be drawn in O(1) and an edge can be relocated in
//! O(δ_max). [`TriangleLedger`] carries the triangle count Δ and the triplet
//! (path of length two) count Λ; the global clustering coefficient is
//! `3Δ / Λ`.
//!
//! Relocating an edge `(u,v) -> (x,y)` only touches triangles through the
//! four active nodes:
//!
//! ```text
//! Δ' = Δ - |N_u ∩ N_v| + |N'_x ∩ N'_y|
//! Λ' = Λ - (δ_u + δ_v - 2) + (δ'_x + δ'_y)
//! ```
//!
//! where primed quantities are taken on the intermediate graph with `(u,v)`
//! already removed. When the two edges share an endpoint the order matters;
//! deletion always comes first here, which keeps the ledger equal to a full
//! recount in every case.

use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::path::Path;

use rand::Rng;

use crate::error::{Error, Result};

/// Unordered node pair, always stored with the smaller label first.
pub type Edge = (usize, usize);

#[inline]
pub fn normalize(a: usize, b: usize) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Above this edge density non-edges are enumerated instead of rejection-sampled.
const DENSE_ENUMERATION_THRESHOLD: f64 = 0.95;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    index: HashMap<Edge, usize>,
}

/// Running triangle (Δ) and triplet (Λ) counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TriangleLedger {
    pub triangles: u64,
    pub triplets: u64,
}

impl TriangleLedger {
    /// `3Δ/Λ`, defined as 0 for graphs without any triplet.
    pub fn clustering_coefficient(&self) -> f64 {
        clustering_coefficient(*self)
    }
}

pub fn clustering_coefficient(ledger: TriangleLedger) -> f64 {
    if ledger.triplets == 0 {
        0.0
    } else {
        3.0 * ledger.triangles as f64 / ledger.triplets as f64
    }
}

/// Move one edge: delete `remove`, then insert `insert`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Swap {
    pub remove: Edge,
    pub insert: Edge,
}

impl Swap {
    pub fn new(remove: Edge, insert: Edge) -> Self {
        Swap {
            remove: normalize(remove.0, remove.1),
            insert: normalize(insert.0, insert.1),
        }
    }

    pub fn inverse(&self) -> Self {
        Swap {
            remove: self.insert,
            insert: self.remove,
        }
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Graph::new(n);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Number of unordered node pairs, `C(n, 2)`.
    pub fn pair_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.iter().map(Vec::len)
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edges in internal index order. The order changes with swaps.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edges sorted lexicographically; identical for graphs with equal edge sets.
    pub fn canonical_edges(&self) -> Vec<Edge> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let e = normalize(a, b);
        if a == b {
            return Err(Error::InvalidEdge(e, "self-loop"));
        }
        if e.1 >= self.n {
            return Err(Error::InvalidEdge(e, "node out of range"));
        }
        if self.index.contains_key(&e) {
            return Err(Error::InvalidEdge(e, "duplicate edge"));
        }
        self.index.insert(e, self.edges.len());
        self.edges.push(e);
        self.link(e);
        Ok(())
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let e = normalize(a, b);
        let idx = self
            .index
            .remove(&e)
            .ok_or(Error::InvalidEdge(e, "edge not present"))?;
        self.edges.swap_remove(idx);
        if idx < self.edges.len() {
            self.index.insert(self.edges[idx], idx);
        }
        self.unlink(e);
        Ok(())
    }

    fn link(&mut self, (a, b): Edge) {
        let pos = self.adj[a].binary_search(&b).unwrap_err();
        self.adj[a].insert(pos, b);
        let pos = self.adj[b].binary_search(&a).unwrap_err();
        self.adj[b].insert(pos, a);
    }

    fn unlink(&mut self, (a, b): Edge) {
        let pos = self.adj[a].binary_search(&b).unwrap();
        self.adj[a].remove(pos);
        let pos = self.adj[b].binary_search(&a).unwrap();
        self.adj[b].remove(pos);
    }

    /// `|N_a ∩ N_b|` by merging the two sorted neighbor lists.
    pub fn common_neighbor_count(&self, a: usize, b: usize) -> usize {
        sorted_intersection_count(&self.adj[a], &self.adj[b])
    }

    fn check_swap(&self, s: &Swap) -> Result<()> {
        let fail = |reason| {
            Err(Error::InvalidSwap {
                remove: s.remove,
                insert: s.insert,
                reason,
            })
        };
        if s.remove == s.insert {
            return fail("remove and insert are the same pair");
        }
        if s.insert.0 == s.insert.1 {
            return fail("insert is a self-loop");
        }
        if s.insert.1 >= self.n {
            return fail("insert endpoint out of range");
        }
        if !self.index.contains_key(&s.remove) {
            return fail("remove is not an edge");
        }
        if self.index.contains_key(&s.insert) {
            return fail("insert is already an edge");
        }
        Ok(())
    }

    /// Ledger after `s` without touching the graph.
    pub fn preview_swap(&self, ledger: TriangleLedger, s: &Swap) -> Result<TriangleLedger> {
        self.check_swap(s)?;
        let (u, v) = s.remove;
        let (x, y) = s.insert;

        let removed_triangles = self.common_neighbor_count(u, v) as u64;
        let removed_triplets = (self.degree(u) + self.degree(v) - 2) as u64;

        // On the intermediate graph (u,v) is gone. The two pairs share at most
        // one node; if they do, that node no longer sees the other removed
        // endpoint.
        let mut created_triangles = self.common_neighbor_count(x, y);
        let shared = [x, y].into_iter().find(|w| *w == u || *w == v);
        if let Some(s_node) = shared {
            let lost = if s_node == u { v } else { u };
            let other = if s_node == x { y } else { x };
            if self.has_edge(other, lost) {
                created_triangles -= 1;
            }
        }
        let deg_after = |w: usize| self.degree(w) - usize::from(w == u || w == v);
        let created_triplets = (deg_after(x) + deg_after(y)) as u64;

        Ok(TriangleLedger {
            triangles: ledger.triangles - removed_triangles + created_triangles as u64,
            triplets: ledger.triplets - removed_triplets + created_triplets,
        })
    }

    /// Applies `s` in place, updates `ledger` incrementally and returns the new
    /// clustering coefficient. The inserted edge takes over the removed edge's
    /// slot in the edge list, so applying [`Swap::inverse`] restores the graph
    /// exactly.
    pub fn apply_swap_with_ledger(&mut self, ledger: &mut TriangleLedger, s: &Swap) -> Result<f64> {
        let next = self.preview_swap(*ledger, s)?;
        self.apply_swap_unchecked(s);
        *ledger = next;
        Ok(next.clustering_coefficient())
    }

    /// Applies a swap already known to be valid.
    pub(crate) fn apply_swap_unchecked(&mut self, s: &Swap) {
        let idx = self.index.remove(&s.remove).expect("validated swap");
        self.unlink(s.remove);
        self.edges[idx] = s.insert;
        self.index.insert(s.insert, idx);
        self.link(s.insert);
    }

    pub fn sample_random_edge<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Edge> {
        if self.edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(self.edges[rng.random_range(0..self.edges.len())])
    }

    /// Uniform draw from the node pairs that are not edges.
    pub fn sample_random_non_edge<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Edge> {
        let pairs = self.pair_count();
        let free = pairs - self.m();
        if free == 0 {
            return Err(Error::CompleteGraph);
        }
        if self.m() as f64 / pairs as f64 > DENSE_ENUMERATION_THRESHOLD {
            let k = rng.random_range(0..free);
            return Ok(self.non_edges().nth(k).expect("free > k"));
        }
        loop {
            let a = rng.random_range(0..self.n);
            let mut b = rng.random_range(0..self.n - 1);
            if b >= a {
                b += 1;
            }
            if !self.has_edge(a, b) {
                return Ok(normalize(a, b));
            }
        }
    }

    /// All node pairs that are not edges, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |a| {
            ((a + 1)..self.n)
                .filter(move |&b| !self.has_edge(a, b))
                .map(move |b| (a, b))
        })
    }

    pub fn read_edge_list<R: BufRead>(reader: R, source: &Path) -> Result<Self> {
        let mut declared_n = None;
        let mut pairs = Vec::new();
        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            let parse_err = |msg: String| Error::Parse {
                path: source.to_path_buf(),
                line: lineno + 1,
                msg,
            };
            if let Some(comment) = line.strip_prefix('#') {
                let mut it = comment.split_whitespace();
                if it.next() == Some("nodes") {
                    let n = it
                        .next()
                        .and_then(|s| s.parse::<usize>().ok())
                        .ok_or_else(|| parse_err("malformed `# nodes` header".into()))?;
                    declared_n = Some(n);
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let mut next = || -> Result<usize> {
                it.next()
                    .ok_or_else(|| parse_err("expected two node labels".into()))?
                    .parse::<usize>()
                    .map_err(|e| parse_err(e.to_string()))
            };
            let a = next()?;
            let b = next()?;
            pairs.push((a, b, lineno + 1));
        }
        let n = declared_n.unwrap_or_else(|| {
            pairs
                .iter()
                .map(|&(a, b, _)| a.max(b) + 1)
                .max()
                .unwrap_or(0)
        });
        let mut g = Graph::new(n);
        for (a, b, line) in pairs {
            g.add_edge(a, b).map_err(|e| Error::Parse {
                path: source.to_path_buf(),
                line,
                msg: e.to_string(),
            })?;
        }
        Ok(g)
    }

    /// Writes a `# nodes <n>` header followed by the canonical edge list.
    pub fn write_edge_list<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "# nodes {}", self.n)?;
        for (a, b) in self.canonical_edges() {
            writeln!(w, "{a} {b}")?;
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let f = std::fs::File::open(path)?;
        Graph::read_edge_list(std::io::BufReader::new(f), path)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
        self.write_edge_list(&mut f)?;
        f.flush()?;
        Ok(())
    }
}

pub(crate) fn sorted_intersection_count(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// Exact (Δ, Λ) from scratch: per-edge neighborhood intersections for Δ,
/// `Σ C(δ_i, 2)` for Λ.
pub fn recount_triangles_triplets(g: &Graph) -> TriangleLedger {
    let closed: u64 = g
        .edges()
        .iter()
        .map(|&(a, b)| g.common_neighbor_count(a, b) as u64)
        .sum();
    TriangleLedger {
        triangles: closed / 3,
        triplets: triplet_count(g),
    }
}

pub fn triplet_count(g: &Graph) -> u64 {
    g.degrees()
        .map(|d| (d as u64) * (d as u64).saturating_sub(1) / 2)
        .sum()
}

/// `tr(A³)` from a dense integer adjacency matrix; equals six times the
/// triangle count.
pub fn adjacency_cube_trace(g: &Graph) -> u64 {
    let n = g.n();
    let mut a = vec![0u64; n * n];
    for &(u, v) in g.edges() {
        a[u * n + v] = 1;
        a[v * n + u] = 1;
    }
    let mut a2 = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                a2[i * n + j] += aik * a[k * n + j];
            }
        }
    }
    (0..n)
        .map(|i| (0..n).map(|k| a2[i * n + k] * a[k * n + i]).sum::<u64>())
        .sum()
}

/// Clustering coefficient as `½ tr(A³) / Σ C(δ_i, 2)`.
pub fn clustering_via_trace(g: &Graph) -> f64 {
    let triplets = triplet_count(g);
    if triplets == 0 {
        return 0.0;
    }
    0.5 * adjacency_cube_trace(g) as f64 / triplets as f64
}
