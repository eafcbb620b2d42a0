//! Constraint-checking Metropolis-Hastings rewiring.
//!
//! A step proposes moving a uniformly drawn edge onto a uniformly drawn
//! non-edge. Every graph with `n` nodes and `m` edges offers the same
//! `m · (C(n,2) − m)` proposals, so the proposal kernel is symmetric and with
//! a uniform target over valid graphs the acceptance probability is 1 for a
//! valid candidate and 0 otherwise.
//!
//! The clustering check is exact and runs on the incremental ledger before the
//! graph is touched. The diameter check applies the move, runs a double sweep
//! and reverts the move if `D̂` falls outside the bounds. Rejected steps leave
//! graph and ledger unchanged.
//!
//! The chain is not irreducible in general: narrow clustering windows can
//! separate valid graphs by invalid intermediates. Diversity across the valid
//! set has to come from distinct seeds.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::diameter::{exact_diameter, Bfs};
use crate::error::{Error, Result, Violation};
use crate::graph::{recount_triangles_triplets, Graph, Swap, TriangleLedger};

/// Fixed node/edge counts plus clustering and diameter intervals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Constraints {
    pub n: usize,
    pub m: usize,
    pub cc_min: f64,
    pub cc_max: f64,
    pub diam_min: usize,
    pub diam_max: usize,
}

impl Constraints {
    pub fn validate(&self) -> Result<()> {
        let pairs = self.n * self.n.saturating_sub(1) / 2;
        let bad = |msg: String| Err(Error::Config(msg));
        if !(0.0..=1.0).contains(&self.cc_min) || !(0.0..=1.0).contains(&self.cc_max) {
            return bad(format!(
                "clustering bounds [{}, {}] must lie in [0, 1]",
                self.cc_min, self.cc_max
            ));
        }
        if self.cc_min > self.cc_max {
            return bad(format!("cc_min {} > cc_max {}", self.cc_min, self.cc_max));
        }
        if self.diam_min < 1 || self.diam_min > self.diam_max || self.diam_max + 1 > self.n {
            return bad(format!(
                "diameter bounds [{}, {}] must satisfy 1 <= min <= max <= n-1 = {}",
                self.diam_min,
                self.diam_max,
                self.n.saturating_sub(1)
            ));
        }
        if self.m == 0 || self.m >= pairs {
            return bad(format!("edge count {} must be in (0, {pairs})", self.m));
        }
        Ok(())
    }

    /// Midpoint of the clustering interval.
    pub fn cc_target(&self) -> f64 {
        0.5 * (self.cc_min + self.cc_max)
    }

    pub fn cc_ok(&self, cc: f64) -> bool {
        cc >= self.cc_min && cc <= self.cc_max
    }

    /// Exact check of every constraint: recounted clustering, APSP diameter.
    pub fn violations(&self, g: &Graph) -> Vec<Violation> {
        let mut out = Vec::new();
        if g.n() != self.n {
            out.push(Violation::NodeCount {
                expected: self.n,
                found: g.n(),
            });
        }
        if g.m() != self.m {
            out.push(Violation::EdgeCount {
                expected: self.m,
                found: g.m(),
            });
        }
        let cc = recount_triangles_triplets(g).clustering_coefficient();
        if !self.cc_ok(cc) {
            out.push(Violation::ClusteringOutOfBounds {
                cc,
                min: self.cc_min,
                max: self.cc_max,
            });
        }
        match exact_diameter(g).exact {
            None => out.push(Violation::Disconnected),
            Some(d) if d < self.diam_min || d > self.diam_max => {
                out.push(Violation::DiameterOutOfBounds {
                    diameter: d,
                    min: self.diam_min,
                    max: self.diam_max,
                })
            }
            Some(_) => {}
        }
        out
    }
}

/// Probability of proposing one particular relocation from a graph with `m`
/// edges on `n` nodes. Depends only on `(n, m)`, which every swap preserves.
pub fn proposal_probability(n: usize, m: usize) -> f64 {
    let pairs = n * n.saturating_sub(1) / 2;
    1.0 / (m as f64 * (pairs - m) as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepOutcome {
    Accepted,
    RejectedClustering,
    RejectedDiameter,
}

#[derive(Debug, Clone)]
pub struct ChainState {
    pub graph: Graph,
    pub ledger: TriangleLedger,
    pub step: u64,
    pub accepted: u64,
    pub rejected_cc: u64,
    pub rejected_diam: u64,
    /// `D̂` of the current graph as last measured.
    pub d_hat: Option<usize>,
    bfs: Bfs,
}

impl ChainState {
    pub fn cc(&self) -> f64 {
        self.ledger.clustering_coefficient()
    }
}

/// Checks `g` exactly against `c` and wraps it in a fresh chain state.
pub fn validate_seed(g: Graph, c: &Constraints) -> Result<ChainState> {
    let violations = c.violations(&g);
    if !violations.is_empty() {
        return Err(Error::SeedViolation(violations));
    }
    let ledger = recount_triangles_triplets(&g);
    let mut bfs = Bfs::new();
    let d_hat = bfs.double_sweep_from(&g, 0).lower;
    Ok(ChainState {
        graph: g,
        ledger,
        step: 0,
        accepted: 0,
        rejected_cc: 0,
        rejected_diam: 0,
        d_hat,
        bfs,
    })
}

/// One Metropolis-Hastings step with binary acceptance.
pub fn mh_step<R: Rng + ?Sized>(
    state: &mut ChainState,
    c: &Constraints,
    rng: &mut R,
) -> Result<StepOutcome> {
    let remove = state.graph.sample_random_edge(rng)?;
    let insert = state.graph.sample_random_non_edge(rng)?;
    let swap = Swap::new(remove, insert);
    state.step += 1;

    let next = state.graph.preview_swap(state.ledger, &swap)?;
    if !c.cc_ok(next.clustering_coefficient()) {
        state.rejected_cc += 1;
        return Ok(StepOutcome::RejectedClustering);
    }

    state.graph.apply_swap_unchecked(&swap);
    let est = state.bfs.double_sweep(&state.graph, rng);
    if !est.within(c.diam_min, c.diam_max) {
        state.graph.apply_swap_unchecked(&swap.inverse());
        state.rejected_diam += 1;
        return Ok(StepOutcome::RejectedDiameter);
    }

    state.ledger = next;
    state.d_hat = est.lower;
    state.accepted += 1;
    Ok(StepOutcome::Accepted)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainOptions {
    pub steps: u64,
    pub burn_in: u64,
    pub thinning: u64,
    /// Recompute the exact diameter of every emitted sample and count the
    /// ones out of bounds.
    pub audit_exact_diameter: bool,
    /// Only emit states whose exact diameter is within bounds: a scheduled
    /// snapshot that fails is deferred to the next step that passes. The
    /// chain itself is unaffected.
    pub exact_snapshots: bool,
}

impl ChainOptions {
    /// `burn_in = 10 m`, `thinning = m`.
    pub fn with_defaults(m: usize, steps: u64) -> Self {
        ChainOptions {
            steps,
            burn_in: 10 * m as u64,
            thinning: (m as u64).max(1),
            audit_exact_diameter: false,
            exact_snapshots: false,
        }
    }

    /// Options that emit exactly `samples` snapshots.
    pub fn for_samples(burn_in: u64, thinning: u64, samples: u64) -> Self {
        ChainOptions {
            steps: burn_in + samples.saturating_sub(1) * thinning,
            burn_in,
            thinning,
            audit_exact_diameter: false,
            exact_snapshots: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.thinning == 0 {
            return Err(Error::Config("thinning must be at least 1".into()));
        }
        if self.burn_in > self.steps {
            return Err(Error::Config(format!(
                "burn-in {} exceeds step count {}",
                self.burn_in, self.steps
            )));
        }
        Ok(())
    }

    /// Number of snapshots a run with these options emits.
    pub fn sample_count(&self) -> u64 {
        if self.burn_in > self.steps || self.thinning == 0 {
            0
        } else {
            (self.steps - self.burn_in) / self.thinning + 1
        }
    }
}

/// A deep copy of the chain state at one step.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainSample {
    pub step: u64,
    pub graph: Graph,
    pub cc: f64,
    pub d_hat: Option<usize>,
    pub exact_diameter: Option<usize>,
    /// Emitted later than scheduled because the scheduled state failed the
    /// exact diameter check.
    pub deferred: bool,
}

#[derive(Debug, Clone)]
pub struct ChainRun {
    pub samples: Vec<ChainSample>,
    pub accepted: u64,
    pub rejected_cc: u64,
    pub rejected_diam: u64,
    /// Scheduled snapshots whose exact diameter was out of bounds (audit or
    /// exact-snapshot mode only).
    pub exact_violations: u64,
}

/// Extra steps allowed for deferred snapshots, in units of the thinning
/// interval, before the run is abandoned.
const MAX_DEFERRAL_INTERVALS: u64 = 1000;

/// Runs `opts.steps` steps from `seed`; snapshots are scheduled after step
/// `t` whenever `t >= burn_in` and `(t - burn_in) % thinning == 0`, with
/// `t = 0` standing for the seed itself.
pub fn run_chain<R: Rng + ?Sized>(
    seed: Graph,
    c: &Constraints,
    opts: &ChainOptions,
    rng: &mut R,
) -> Result<ChainRun> {
    opts.validate()?;
    let mut state = validate_seed(seed, c)?;
    let mut samples = Vec::with_capacity(opts.sample_count() as usize);
    let check_exact = opts.audit_exact_diameter || opts.exact_snapshots;
    let mut exact_violations = 0;
    let mut owed = 0u64;
    let mut late = false;
    let limit = opts.steps + MAX_DEFERRAL_INTERVALS * opts.thinning;

    let mut t = 0;
    loop {
        if t > 0 {
            mh_step(&mut state, c, rng)?;
        }
        let scheduled = t <= opts.steps && t >= opts.burn_in && (t - opts.burn_in).is_multiple_of(opts.thinning);
        if scheduled {
            owed += 1;
        }
        if owed > 0 {
            let exact = check_exact
                .then(|| exact_diameter(&state.graph).exact)
                .flatten();
            let exact_ok = exact.is_some_and(|d| d >= c.diam_min && d <= c.diam_max);
            if scheduled && check_exact && !exact_ok {
                exact_violations += 1;
            }
            if !opts.exact_snapshots || exact_ok {
                samples.push(ChainSample {
                    step: state.step,
                    graph: state.graph.clone(),
                    cc: state.cc(),
                    d_hat: state.d_hat,
                    exact_diameter: exact,
                    deferred: late,
                });
                owed -= 1;
                late = owed > 0;
            } else {
                late = true;
            }
        }
        t += 1;
        if t > opts.steps && owed == 0 {
            break;
        }
        if t > limit {
            return Err(Error::Config(format!(
                "chain could not reach an exactly valid state within {} extra steps",
                limit - opts.steps
            )));
        }
    }
    Ok(ChainRun {
        samples,
        accepted: state.accepted,
        rejected_cc: state.rejected_cc,
        rejected_diam: state.rejected_diam,
        exact_violations,
    })
}
