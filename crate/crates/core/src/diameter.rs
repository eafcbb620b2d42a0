//! Eccentricity, exact diameter and the double-sweep lower bound.
//!
//! For a connected graph and any node `v`, `ecc(v) <= diam <= 2 ecc(v)`. The
//! double sweep runs one BFS from a random start, a second one from the node
//! it found farthest away, and reports that node's eccentricity `D̂`. The
//! bracket `D̂ <= diam <= 2 D̂` follows, and on trees `D̂` is exact.
//!
//! Disconnected graphs have infinite diameter: the estimate carries
//! `connected == false` and no value, and every bounded check rejects it.

use rand::Rng;

use crate::graph::Graph;

const UNSEEN: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Eccentricity {
    /// Largest finite BFS distance from the source.
    pub ecc: usize,
    /// Smallest label among nodes at distance `ecc`.
    pub farthest: usize,
    /// Nodes visited, source included.
    pub reached: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiameterEstimate {
    /// Double-sweep lower bound `D̂` (unset when disconnected or when only the
    /// exact value was computed).
    pub lower: Option<usize>,
    pub exact: Option<usize>,
    pub connected: bool,
}

impl DiameterEstimate {
    pub fn disconnected() -> Self {
        DiameterEstimate {
            lower: None,
            exact: None,
            connected: false,
        }
    }

    pub fn exact_known(&self) -> bool {
        self.exact.is_some()
    }

    /// Exact diameter if known, else the lower bound; `None` means infinite.
    pub fn value(&self) -> Option<usize> {
        self.exact.or(self.lower)
    }

    /// Whether the best known value lies in `[min, max]`. Disconnected graphs
    /// never do.
    pub fn within(&self, min: usize, max: usize) -> bool {
        self.value().is_some_and(|d| (min..=max).contains(&d))
    }
}

/// Reusable BFS buffers. Keeping one per chain avoids an allocation per step.
#[derive(Debug, Default, Clone)]
pub struct Bfs {
    dist: Vec<u32>,
    queue: Vec<usize>,
}

impl Bfs {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn eccentricity(&mut self, g: &Graph, source: usize) -> Eccentricity {
        let n = g.n();
        self.dist.clear();
        self.dist.resize(n, UNSEEN);
        self.queue.clear();
        self.dist[source] = 0;
        self.queue.push(source);
        let (mut ecc, mut farthest) = (0u32, source);
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            let du = self.dist[u];
            if du > ecc || (du == ecc && u < farthest) {
                ecc = du;
                farthest = u;
            }
            for &w in g.neighbors(u) {
                if self.dist[w] == UNSEEN {
                    self.dist[w] = du + 1;
                    self.queue.push(w);
                }
            }
        }
        Eccentricity {
            ecc: ecc as usize,
            farthest,
            reached: self.queue.len(),
        }
    }

    /// Double sweep from a fixed start node.
    pub fn double_sweep_from(&mut self, g: &Graph, start: usize) -> DiameterEstimate {
        let first = self.eccentricity(g, start);
        if first.reached < g.n() {
            return DiameterEstimate::disconnected();
        }
        let second = self.eccentricity(g, first.farthest);
        DiameterEstimate {
            lower: Some(second.ecc),
            exact: None,
            connected: true,
        }
    }

    pub fn double_sweep<R: Rng + ?Sized>(&mut self, g: &Graph, rng: &mut R) -> DiameterEstimate {
        if g.n() == 0 {
            return DiameterEstimate {
                lower: Some(0),
                exact: None,
                connected: true,
            };
        }
        let start = rng.random_range(0..g.n());
        self.double_sweep_from(g, start)
    }
}

pub fn bfs_eccentricity(g: &Graph, v: usize) -> Eccentricity {
    Bfs::new().eccentricity(g, v)
}

/// BFS from every node; `O(n (n + m))`.
pub fn exact_diameter(g: &Graph) -> DiameterEstimate {
    let mut bfs = Bfs::new();
    let mut diam = 0;
    for v in 0..g.n() {
        let e = bfs.eccentricity(g, v);
        if e.reached < g.n() {
            return DiameterEstimate::disconnected();
        }
        diam = diam.max(e.ecc);
    }
    DiameterEstimate {
        lower: None,
        exact: Some(diam),
        connected: true,
    }
}

pub fn double_sweep_estimate<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> DiameterEstimate {
    Bfs::new().double_sweep(g, rng)
}
