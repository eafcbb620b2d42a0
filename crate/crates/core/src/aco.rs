//! Layered ant-colony construction of graphs with a target diameter and
//! clustering coefficient.
//!
//! Nodes are split at random into `diam_min + 1` layers and edges may only
//! join nodes in the same or in adjacent layers. Any connected graph built
//! this way needs at least `diam_min` hops from the first layer to the last,
//! so the diameter floor holds by construction.
//!
//! Each iteration, every ant draws `m` distinct edges, one at a time, with
//! probability proportional to the pheromone `τ_e` of the edges still left.
//! Its graph `G` is rewarded by
//!
//! ```text
//! R = r / (ε + |C* − cc(G)|),   r = reward_valid if D̂ ≤ diam_max else reward_invalid
//! ```
//!
//! with `C*` the midpoint of the clustering interval. Pheromone evaporates on
//! every available edge and the elite ants deposit `R · W` on the edges of
//! their graphs, where `W = boost` for intra-layer and `hinder` for
//! inter-layer edges when `cc(G) < C*`, and the other way round when
//! `cc(G) > C*`. Intra-layer edges close triangles, inter-layer edges open
//! them, so the colony is pushed towards `C*`.

use std::collections::{HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::diameter::{exact_diameter, Bfs};
use crate::error::{Error, Result};
use crate::graph::{normalize, recount_triangles_triplets, Edge, Graph};
use crate::sampler::Constraints;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerAssignment {
    /// Zero-based layer index of every node.
    pub layer_of: Vec<usize>,
    pub layer_sizes: Vec<usize>,
}

impl LayerAssignment {
    pub fn layer_count(&self) -> usize {
        self.layer_sizes.len()
    }
}

/// Random permutation of the nodes cut into `diam_min + 1` blocks whose sizes
/// differ by at most one.
pub fn build_layers<R: Rng + ?Sized>(
    n: usize,
    diam_min: usize,
    rng: &mut R,
) -> Result<LayerAssignment> {
    let layers = diam_min + 1;
    if n < layers {
        return Err(Error::TooFewNodes { n, layers });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let (base, extra) = (n / layers, n % layers);
    let layer_sizes: Vec<usize> = (0..layers).map(|l| base + usize::from(l < extra)).collect();
    let mut layer_of = vec![0; n];
    let mut it = order.into_iter();
    for (l, &size) in layer_sizes.iter().enumerate() {
        for v in it.by_ref().take(size) {
            layer_of[v] = l;
        }
    }
    Ok(LayerAssignment {
        layer_of,
        layer_sizes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    IntraLayer,
    InterLayer,
}

/// All node pairs at most one layer apart.
#[derive(Debug, Clone)]
pub struct EdgeUniverse {
    edges: Vec<Edge>,
    kinds: Vec<EdgeKind>,
    lookup: HashMap<Edge, usize>,
}

impl EdgeUniverse {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn kind(&self, idx: usize) -> EdgeKind {
        self.kinds[idx]
    }

    pub fn index_of(&self, a: usize, b: usize) -> Option<usize> {
        self.lookup.get(&normalize(a, b)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, EdgeKind)> + '_ {
        self.edges.iter().copied().zip(self.kinds.iter().copied())
    }
}

pub fn available_edge_universe(layers: &LayerAssignment) -> EdgeUniverse {
    let n = layers.layer_of.len();
    let mut edges = Vec::new();
    let mut kinds = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let (la, lb) = (layers.layer_of[a], layers.layer_of[b]);
            let kind = match la.abs_diff(lb) {
                0 => EdgeKind::IntraLayer,
                1 => EdgeKind::InterLayer,
                _ => continue,
            };
            edges.push((a, b));
            kinds.push(kind);
        }
    }
    let lookup = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    EdgeUniverse {
        edges,
        kinds,
        lookup,
    }
}

/// Pheromone per available edge.
#[derive(Debug, Clone)]
pub struct PheromoneMap {
    pub universe: EdgeUniverse,
    pub tau: Vec<f64>,
    pub floor: f64,
}

impl PheromoneMap {
    /// Uniform `τ = 1` over the universe.
    pub fn uniform(universe: EdgeUniverse, floor: f64) -> Self {
        let tau = vec![1.0; universe.len()];
        PheromoneMap {
            universe,
            tau,
            floor,
        }
    }

    pub fn min_tau(&self) -> f64 {
        self.tau.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Share of the total pheromone sitting on intra-layer edges.
    pub fn intra_share(&self) -> f64 {
        let total: f64 = self.tau.iter().sum();
        let intra: f64 = self
            .tau
            .iter()
            .enumerate()
            .filter(|(i, _)| self.universe.kind(*i) == EdgeKind::IntraLayer)
            .map(|(_, t)| t)
            .sum();
        intra / total
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct AcoParams {
    pub ants: usize,
    pub iterations: usize,
    pub rho: f64,
    pub boost: f64,
    pub hinder: f64,
    pub reward_valid: f64,
    pub reward_invalid: f64,
    pub epsilon: f64,
    pub elite_fraction: f64,
    /// Lower clamp for τ, relative to the initial value of 1.
    pub tau_floor: f64,
}

impl Default for AcoParams {
    fn default() -> Self {
        AcoParams {
            ants: 40,
            iterations: 50,
            rho: 0.1,
            boost: 2.0,
            hinder: 0.5,
            reward_valid: 1.0,
            reward_invalid: 0.1,
            epsilon: 1e-3,
            elite_fraction: 0.1,
            tau_floor: 1e-4,
        }
    }
}

impl AcoParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::Config(format!("aco: {msg}")));
        if self.ants == 0 || self.iterations == 0 {
            return bad("ants and iterations must be positive");
        }
        if !(self.rho > 0.0 && self.rho < 1.0) {
            return bad("rho must lie in (0, 1)");
        }
        if !(self.boost > 1.0 && self.hinder > 0.0 && self.hinder < 1.0) {
            return bad("need boost > 1 > hinder > 0");
        }
        if !(self.epsilon > 0.0) {
            return bad("epsilon must be positive");
        }
        if !(self.elite_fraction > 0.0 && self.elite_fraction <= 1.0) {
            return bad("elite_fraction must lie in (0, 1]");
        }
        if !(self.tau_floor > 0.0) {
            return bad("tau_floor must be positive");
        }
        Ok(())
    }

    pub fn elite_count(&self, ants: usize) -> usize {
        if ants == 0 {
            0
        } else {
            ((self.elite_fraction * ants as f64).ceil() as usize).clamp(1, ants)
        }
    }
}

/// Binary sum tree over non-negative weights for proportional draws with
/// removal.
struct SumTree {
    size: usize,
    nodes: Vec<f64>,
}

impl SumTree {
    fn new(weights: &[f64]) -> Self {
        let size = weights.len().next_power_of_two().max(1);
        let mut nodes = vec![0.0; 2 * size];
        nodes[size..size + weights.len()].copy_from_slice(weights);
        for i in (1..size).rev() {
            nodes[i] = nodes[2 * i] + nodes[2 * i + 1];
        }
        SumTree { size, nodes }
    }

    fn total(&self) -> f64 {
        self.nodes[1]
    }

    fn zero(&mut self, idx: usize) {
        let mut i = idx + self.size;
        self.nodes[i] = 0.0;
        while i > 1 {
            i /= 2;
            self.nodes[i] = self.nodes[2 * i] + self.nodes[2 * i + 1];
        }
    }

    /// Leaf whose cumulative range contains `target`; never lands on a zero
    /// weight while the total is positive.
    fn find(&self, mut target: f64) -> usize {
        let mut i = 1;
        while i < self.size {
            let (l, r) = (self.nodes[2 * i], self.nodes[2 * i + 1]);
            if l > 0.0 && (target < l || r <= 0.0) {
                i *= 2;
            } else {
                target -= l;
                i = 2 * i + 1;
            }
        }
        i - self.size
    }
}

/// Draws `m` distinct available edges, each proportional to τ among the
/// edges not yet taken. Returns universe indices in draw order.
pub fn sample_ant_edges<R: Rng + ?Sized>(
    pher: &PheromoneMap,
    m: usize,
    rng: &mut R,
) -> Result<Vec<usize>> {
    let available = pher.universe.len();
    if m > available {
        return Err(Error::InfeasibleEdgeCount { m, available });
    }
    let mut tree = SumTree::new(&pher.tau);
    let mut picked = Vec::with_capacity(m);
    for _ in 0..m {
        let target = rng.random::<f64>() * tree.total();
        let idx = tree.find(target);
        tree.zero(idx);
        picked.push(idx);
    }
    Ok(picked)
}

pub fn construct_ant_graph<R: Rng + ?Sized>(
    pher: &PheromoneMap,
    n: usize,
    m: usize,
    rng: &mut R,
) -> Result<Graph> {
    let picked = sample_ant_edges(pher, m, rng)?;
    Graph::from_edges(n, picked.iter().map(|&i| pher.universe.edges()[i]))
}

#[derive(Debug, Clone)]
pub struct AntSolution {
    pub graph: Graph,
    /// Universe indices of the graph's edges.
    pub edge_ids: Vec<usize>,
    pub reward: f64,
    pub cc: f64,
    pub d_hat: Option<usize>,
    /// Clustering within bounds, `D̂` within bounds, connected.
    pub valid: bool,
    /// Exact diameter, set once the solution has been verified.
    pub exact_diameter: Option<usize>,
}

pub fn reward(cc: f64, d_hat: Option<usize>, params: &AcoParams, c: &Constraints) -> f64 {
    let numer = match d_hat {
        Some(d) if d <= c.diam_max => params.reward_valid,
        _ => params.reward_invalid,
    };
    numer / (params.epsilon + (c.cc_target() - cc).abs())
}

pub fn score_reward<R: Rng + ?Sized>(
    graph: Graph,
    edge_ids: Vec<usize>,
    params: &AcoParams,
    c: &Constraints,
    bfs: &mut Bfs,
    rng: &mut R,
) -> AntSolution {
    let cc = recount_triangles_triplets(&graph).clustering_coefficient();
    let est = bfs.double_sweep(&graph, rng);
    let d_hat = est.lower;
    AntSolution {
        reward: reward(cc, d_hat, params, c),
        valid: c.cc_ok(cc) && est.within(c.diam_min, c.diam_max),
        graph,
        edge_ids,
        cc,
        d_hat,
        exact_diameter: None,
    }
}

fn deposit_weight(kind: EdgeKind, cc: f64, target: f64, params: &AcoParams) -> f64 {
    use std::cmp::Ordering::*;
    match (cc.partial_cmp(&target).unwrap_or(Equal), kind) {
        (Less, EdgeKind::IntraLayer) | (Greater, EdgeKind::InterLayer) => params.boost,
        (Less, EdgeKind::InterLayer) | (Greater, EdgeKind::IntraLayer) => params.hinder,
        // exactly on target: neither direction needs help
        (Equal, _) => 1.0,
    }
}

/// Evaporates every available edge, lets the top-ranked ants deposit on their
/// own edges, then clamps at the floor. `ranked` must be sorted by reward,
/// best first.
pub fn update_pheromones(
    pher: &mut PheromoneMap,
    ranked: &[AntSolution],
    params: &AcoParams,
    cc_target: f64,
) {
    for t in &mut pher.tau {
        *t *= 1.0 - params.rho;
    }
    let elite = params.elite_count(ranked.len());
    for ant in &ranked[..elite] {
        for &e in &ant.edge_ids {
            let w = deposit_weight(pher.universe.kind(e), ant.cc, cc_target, params);
            pher.tau[e] += ant.reward * w;
        }
    }
    for t in &mut pher.tau {
        if *t < pher.floor {
            *t = pher.floor;
        }
    }
}

#[derive(Debug, Clone)]
pub struct AcoRun {
    pub layers: LayerAssignment,
    /// Distinct valid graphs in discovery order, each exactly verified.
    pub solutions: Vec<AntSolution>,
    pub iterations_run: usize,
    /// Valid-by-estimate graphs dropped because the exact diameter was out of
    /// bounds.
    pub exact_rejections: usize,
}

/// One ant-colony instance: fresh layers, uniform pheromone, up to
/// `params.iterations` rounds, stopping early once `target_count` distinct
/// valid graphs are collected.
pub fn run_aco<R: Rng + ?Sized>(
    c: &Constraints,
    params: &AcoParams,
    target_count: usize,
    rng: &mut R,
) -> Result<AcoRun> {
    params.validate()?;
    let layers = build_layers(c.n, c.diam_min, rng)?;
    let universe = available_edge_universe(&layers);
    if c.m > universe.len() {
        return Err(Error::InfeasibleEdgeCount {
            m: c.m,
            available: universe.len(),
        });
    }
    let mut pher = PheromoneMap::uniform(universe, params.tau_floor);
    let target = c.cc_target();
    let mut bfs = Bfs::new();
    let mut seen: HashSet<Vec<Edge>> = HashSet::new();
    let mut solutions = Vec::new();
    let mut exact_rejections = 0;
    let mut iterations_run = 0;

    while iterations_run < params.iterations && solutions.len() < target_count {
        iterations_run += 1;
        let mut ants = Vec::with_capacity(params.ants);
        for _ in 0..params.ants {
            let ids = sample_ant_edges(&pher, c.m, rng)?;
            let g = Graph::from_edges(c.n, ids.iter().map(|&i| pher.universe.edges()[i]))?;
            ants.push(score_reward(g, ids, params, c, &mut bfs, rng));
        }
        for ant in &ants {
            if !ant.valid || solutions.len() >= target_count {
                continue;
            }
            let key = ant.graph.canonical_edges();
            if seen.contains(&key) {
                continue;
            }
            match exact_diameter(&ant.graph).exact {
                Some(d) if d >= c.diam_min && d <= c.diam_max => {
                    seen.insert(key);
                    let mut verified = ant.clone();
                    verified.exact_diameter = Some(d);
                    solutions.push(verified);
                }
                _ => exact_rejections += 1,
            }
        }
        ants.sort_by(|a, b| b.reward.total_cmp(&a.reward));
        update_pheromones(&mut pher, &ants, params, target);
    }

    Ok(AcoRun {
        layers,
        solutions,
        iterations_run,
        exact_rejections,
    })
}
