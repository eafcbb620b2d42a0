//! Experiment orchestration: success-ratio grids, pure-MCMC vs. hybrid drift
//! comparison, ensemble generation, manifest verification and spectra export.
//!
//! Output layout under the output directory:
//!
//! ```text
//! constraints.json        constraints of the generated ensemble
//! manifest.jsonl          one EnsembleRecord per line
//! graphs/<id>.edges       edge list of every record
//! grid.csv                one row per (diam, cc) cell
//! cells/*.json            finished grid cells, reused on rerun
//! drift_mcmc.csv          drift from seed, pure MCMC
//! drift_hybrid.csv        drift from first seed, hybrid
//! compare_summary.json    means, variances and diversities of both arms
//! distances.csv           pairwise spectral distances of a manifest
//! spectra.json            spectra of a manifest
//! ```
//!
//! All parallel work is keyed by RNG stream id and collected in index order,
//! so the thread count never changes any output.

use std::fs;
use std::io::{BufRead, BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::aco::{run_aco, AcoParams};
use crate::error::{Error, Result};
use crate::graph::{recount_triangles_triplets, Graph};
use crate::rng::{stream, ACO_STREAMS, CHAIN_STREAMS};
use crate::sampler::{run_chain, ChainOptions, ChainSample, Constraints};
use crate::spectral::{distance_matrix, ensemble_diversity, spectral_distance, spectrum, Spectrum};

pub const GRID_CSV_HEADER: &str = "# congraph grid v1";
pub const DRIFT_CSV_HEADER: &str = "# congraph drift v1";
pub const DISTANCES_CSV_HEADER: &str = "# congraph distances v1";

/// Stream offset separating the pure-MCMC chain from the hybrid chains.
const PURE_CHAIN_STREAM: u64 = CHAIN_STREAMS + (1 << 20);

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct McmcConfig {
    /// Defaults to `10 m`.
    pub burn_in: Option<u64>,
    /// Defaults to `m`.
    pub thinning: Option<u64>,
}

/// JSON experiment configuration.
///
/// Exactly one of `density` and `m` must be given; `density · C(n,2)` is
/// rounded to the nearest integer. Grid targets become intervals
/// `[d − diam_half_width, d + diam_half_width]` and
/// `[c − cc_half_width, c + cc_half_width]` (clamped to `[0, 1]`). Single-target
/// commands (`generate`, `compare`) use the first entry of each target list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub density: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub diam_targets: Vec<usize>,
    pub cc_targets: Vec<f64>,
    #[serde(default = "default_cc_half_width")]
    pub cc_half_width: f64,
    #[serde(default)]
    pub diam_half_width: usize,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default)]
    pub aco: AcoParams,
    #[serde(default)]
    pub mcmc: McmcConfig,
    /// Ensemble size `L`.
    #[serde(default = "default_ensemble_size")]
    pub ensemble_size: usize,
    /// Number of ACO seeds feeding the hybrid pipeline.
    #[serde(default = "default_seed_count")]
    pub seed_count: usize,
    /// ACO instances tried before giving up on finding seeds; defaults to
    /// `4 · seed_count`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_aco_instances: Option<usize>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out_dir: Option<PathBuf>,
}

fn default_cc_half_width() -> f64 {
    0.05
}
fn default_trials() -> usize {
    100
}
fn default_ensemble_size() -> usize {
    50
}
fn default_seed_count() -> usize {
    5
}

impl Default for ExperimentConfig {
    /// 40 nodes at density 0.2 over a 4×4 grid.
    fn default() -> Self {
        ExperimentConfig {
            n: 40,
            density: Some(0.2),
            m: None,
            diam_targets: vec![3, 4, 5, 6],
            cc_targets: vec![0.2, 0.3, 0.4, 0.5],
            cc_half_width: default_cc_half_width(),
            diam_half_width: 0,
            trials: default_trials(),
            aco: AcoParams::default(),
            mcmc: McmcConfig::default(),
            ensemble_size: default_ensemble_size(),
            seed_count: default_seed_count(),
            max_aco_instances: None,
            seed: 0,
            out_dir: None,
        }
    }
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        let cfg: ExperimentConfig = serde_json::from_str(&text)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if self.n < 2 {
            return bad(format!("n = {} is too small", self.n));
        }
        match (self.density, self.m) {
            (Some(_), Some(_)) | (None, None) => {
                return bad("exactly one of `density` and `m` must be set".into())
            }
            (Some(d), None) if !(d > 0.0 && d < 1.0) => {
                return bad(format!("density {d} must lie in (0, 1)"))
            }
            _ => {}
        }
        if self.diam_targets.is_empty() || self.cc_targets.is_empty() {
            return bad("target grids must be non-empty".into());
        }
        if !(self.cc_half_width >= 0.0) {
            return bad("cc_half_width must be non-negative".into());
        }
        if self.trials == 0 || self.ensemble_size == 0 || self.seed_count == 0 {
            return bad("trials, ensemble_size and seed_count must be positive".into());
        }
        if self.max_instances() < self.seed_count {
            return bad("max_aco_instances must be at least seed_count".into());
        }
        if self.mcmc.thinning == Some(0) {
            return bad("mcmc.thinning must be at least 1".into());
        }
        self.aco.validate()
    }

    pub fn edge_count(&self) -> usize {
        match (self.m, self.density) {
            (Some(m), _) => m,
            (None, Some(d)) => {
                let pairs = self.n * (self.n - 1) / 2;
                (d * pairs as f64).round() as usize
            }
            (None, None) => 0,
        }
    }

    pub fn density(&self) -> f64 {
        self.edge_count() as f64 / (self.n * (self.n - 1) / 2) as f64
    }

    pub fn max_instances(&self) -> usize {
        self.max_aco_instances.unwrap_or(4 * self.seed_count)
    }

    pub fn constraints_for(&self, diam: usize, cc: f64) -> Constraints {
        Constraints {
            n: self.n,
            m: self.edge_count(),
            cc_min: (cc - self.cc_half_width).max(0.0),
            cc_max: (cc + self.cc_half_width).min(1.0),
            diam_min: diam.saturating_sub(self.diam_half_width).max(1),
            diam_max: diam + self.diam_half_width,
        }
    }

    /// Constraints of the first grid target.
    pub fn primary_constraints(&self) -> Constraints {
        self.constraints_for(self.diam_targets[0], self.cc_targets[0])
    }

    pub fn chain_options(&self, samples: u64) -> ChainOptions {
        let m = self.edge_count() as u64;
        let burn_in = self.mcmc.burn_in.unwrap_or(10 * m);
        let thinning = self.mcmc.thinning.unwrap_or(m.max(1));
        ChainOptions::for_samples(burn_in, thinning, samples)
    }
}

/// A valid ACO graph used to start a chain.
#[derive(Debug, Clone)]
pub struct Seed {
    pub id: usize,
    /// RNG stream of the ACO instance that produced it.
    pub stream: u64,
    pub graph: Graph,
}

/// Runs independent single-target ACO instances, `seed_count` at a time, and
/// keeps the first `seed_count` successes in instance order.
pub fn find_seeds(cfg: &ExperimentConfig, c: &Constraints) -> Result<Vec<Seed>> {
    c.validate()?;
    let want = cfg.seed_count;
    let max = cfg.max_instances();
    let mut seeds = Vec::with_capacity(want);
    let mut next = 0;
    while seeds.len() < want && next < max {
        let batch: Vec<u64> = (next..(next + want).min(max)).map(|i| i as u64).collect();
        next += batch.len();
        let found: Vec<Option<Graph>> = batch
            .par_iter()
            .map(|&i| {
                let mut rng = stream(cfg.seed, ACO_STREAMS + i);
                run_aco(c, &cfg.aco, 1, &mut rng)
                    .map(|run| run.solutions.into_iter().next().map(|s| s.graph))
            })
            .collect::<Result<_>>()?;
        for (i, g) in batch.into_iter().zip(found) {
            if let Some(graph) = g {
                if seeds.len() < want {
                    seeds.push(Seed {
                        id: seeds.len(),
                        stream: ACO_STREAMS + i,
                        graph,
                    });
                }
            }
        }
    }
    if seeds.is_empty() {
        return Err(Error::NoSeedFound(max));
    }
    Ok(seeds)
}

// ----------------------------------------------------------------------------
// success grid

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridCell {
    pub diam: usize,
    pub cc: f64,
    pub density: f64,
    pub m: usize,
    pub trials: usize,
    pub successes: usize,
    pub success_ratio: f64,
    /// Mean pairwise spectral distance of the successful graphs; absent with
    /// fewer than two successes.
    pub diversity: Option<f64>,
    /// Why the cell could not be attempted at all.
    pub reason: Option<String>,
}

/// Outcome of one grid cell, including the graph found by every successful
/// trial in trial order.
#[derive(Debug, Clone)]
pub struct CellRun {
    pub cell: GridCell,
    pub graphs: Vec<Graph>,
}

/// `trials` independent ACO instances on one cell. Trial `t` always uses
/// stream `t`, so cells share their random streams.
pub fn run_cell(cfg: &ExperimentConfig, diam: usize, cc: f64) -> Result<CellRun> {
    let c = cfg.constraints_for(diam, cc);
    let mut cell = GridCell {
        diam,
        cc,
        density: cfg.density(),
        m: c.m,
        trials: cfg.trials,
        successes: 0,
        success_ratio: 0.0,
        diversity: None,
        reason: None,
    };
    if let Err(Error::Config(msg)) = c.validate() {
        cell.reason = Some(msg);
        return Ok(CellRun {
            cell,
            graphs: Vec::new(),
        });
    }
    let outcomes: Vec<Result<Option<Graph>>> = (0..cfg.trials as u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = stream(cfg.seed, ACO_STREAMS + t);
            run_aco(&c, &cfg.aco, 1, &mut rng)
                .map(|run| run.solutions.into_iter().next().map(|s| s.graph))
        })
        .collect();
    let mut graphs = Vec::new();
    for o in outcomes {
        match o {
            Ok(Some(g)) => graphs.push(g),
            Ok(None) => {}
            Err(e @ (Error::InfeasibleEdgeCount { .. } | Error::TooFewNodes { .. })) => {
                cell.reason = Some(e.to_string());
                return Ok(CellRun { cell, graphs });
            }
            Err(e) => return Err(e),
        }
    }
    cell.successes = graphs.len();
    cell.success_ratio = graphs.len() as f64 / cfg.trials as f64;
    if graphs.len() >= 2 {
        let specs = graphs.par_iter().map(spectrum).collect::<Result<Vec<_>>>()?;
        cell.diversity = Some(ensemble_diversity(&specs)?);
    }
    Ok(CellRun { cell, graphs })
}

fn cell_file(dir: &Path, diam: usize, cc: f64) -> PathBuf {
    dir.join("cells").join(format!("d{diam}_cc{cc:.4}.json"))
}

/// Runs every (diam, cc) cell. With an output directory, finished cells are
/// stored under `cells/` and skipped on rerun, and `grid.csv` is rewritten
/// from all cells at the end.
pub fn run_success_grid(cfg: &ExperimentConfig, out: Option<&Path>) -> Result<Vec<GridCell>> {
    cfg.validate()?;
    if let Some(dir) = out {
        fs::create_dir_all(dir.join("cells"))?;
    }
    let mut cells = Vec::new();
    for &diam in &cfg.diam_targets {
        for &cc in &cfg.cc_targets {
            if let Some(dir) = out {
                let path = cell_file(dir, diam, cc);
                if let Ok(text) = fs::read_to_string(&path) {
                    if let Ok(cell) = serde_json::from_str::<GridCell>(&text) {
                        if cell.trials == cfg.trials && cell.m == cfg.edge_count() {
                            cells.push(cell);
                            continue;
                        }
                    }
                }
            }
            let run = run_cell(cfg, diam, cc)?;
            if let Some(dir) = out {
                fs::write(cell_file(dir, diam, cc), serde_json::to_string_pretty(&run.cell)?)?;
            }
            cells.push(run.cell);
        }
    }
    cells.sort_by(|a, b| a.diam.cmp(&b.diam).then(a.cc.total_cmp(&b.cc)));
    if let Some(dir) = out {
        write_grid_csv(&dir.join("grid.csv"), &cells)?;
    }
    Ok(cells)
}

pub fn write_grid_csv(path: &Path, cells: &[GridCell]) -> Result<()> {
    let mut w = BufWriter::new(fs::File::create(path)?);
    writeln!(w, "{GRID_CSV_HEADER}")?;
    writeln!(w, "diam,cc,density,success_ratio,diversity,trials,reason")?;
    for c in cells {
        let diversity = c.diversity.map(|d| d.to_string()).unwrap_or_default();
        let reason = c.reason.as_deref().unwrap_or("").replace([',', '\n'], ";");
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            c.diam, c.cc, c.density, c.success_ratio, diversity, c.trials, reason
        )?;
    }
    w.flush()?;
    Ok(())
}

// ----------------------------------------------------------------------------
// method comparison

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DriftSample {
    pub sample: usize,
    pub seed_id: usize,
    pub step: u64,
    pub drift: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub count: usize,
    pub mean: f64,
    /// Unbiased sample variance.
    pub variance: f64,
}

impl Summary {
    pub fn of(xs: &[f64]) -> Self {
        let count = xs.len();
        let mean = xs.iter().sum::<f64>() / count.max(1) as f64;
        let variance = if count > 1 {
            xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (count - 1) as f64
        } else {
            0.0
        };
        Summary {
            count,
            mean,
            variance,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MethodComparison {
    pub constraints: Constraints,
    pub seeds_used: usize,
    pub mcmc: Vec<DriftSample>,
    pub hybrid: Vec<DriftSample>,
    pub mcmc_summary: Summary,
    pub hybrid_summary: Summary,
    pub mcmc_diversity: f64,
    pub hybrid_diversity: f64,
}

/// Splits `total` into `parts` near-equal shares, larger shares first.
fn partition(total: usize, parts: usize) -> Vec<usize> {
    (0..parts)
        .map(|i| total / parts + usize::from(i < total % parts))
        .collect()
}

/// Chains started from each seed, run in parallel; results in seed order.
fn run_seed_chains(
    cfg: &ExperimentConfig,
    c: &Constraints,
    seeds: &[Seed],
    shares: &[usize],
    stream_base: u64,
    exact_snapshots: bool,
) -> Result<Vec<Vec<ChainSample>>> {
    seeds
        .par_iter()
        .zip(shares.par_iter())
        .map(|(seed, &share)| {
            let mut opts = cfg.chain_options(share as u64);
            opts.exact_snapshots = exact_snapshots;
            opts.audit_exact_diameter = exact_snapshots;
            let mut rng = stream(cfg.seed, stream_base + seed.id as u64);
            run_chain(seed.graph.clone(), c, &opts, &mut rng).map(|r| r.samples)
        })
        .collect()
}

/// Pure MCMC (one seed, `L` samples) against the hybrid pipeline (up to
/// `seed_count` ACO seeds sharing the `L` samples). Drift is the spectral
/// distance to the first seed in both arms; samples still equal to the
/// starting seed (step 0) are left out.
pub fn run_method_comparison(cfg: &ExperimentConfig) -> Result<MethodComparison> {
    cfg.validate()?;
    let c = cfg.primary_constraints();
    let seeds = find_seeds(cfg, &c)?;
    let reference = spectrum(&seeds[0].graph)?;
    let l = cfg.ensemble_size;

    let pure = run_seed_chains(cfg, &c, &seeds[..1], &[l], PURE_CHAIN_STREAM, false)?;
    let hybrid = run_seed_chains(
        cfg,
        &c,
        &seeds,
        &partition(l, seeds.len()),
        CHAIN_STREAMS,
        false,
    )?;

    let drift_of = |chains: Vec<Vec<ChainSample>>, seeds: &[Seed]| -> Result<(Vec<DriftSample>, Vec<Spectrum>)> {
        let flat: Vec<(usize, ChainSample)> = chains
            .into_iter()
            .zip(seeds)
            .flat_map(|(samples, seed)| samples.into_iter().map(move |s| (seed.id, s)))
            .filter(|(_, s)| s.step > 0)
            .collect();
        let specs = flat
            .par_iter()
            .map(|(_, s)| spectrum(&s.graph))
            .collect::<Result<Vec<_>>>()?;
        let drift = flat
            .iter()
            .zip(&specs)
            .enumerate()
            .map(|(i, ((seed_id, s), sp))| {
                Ok(DriftSample {
                    sample: i,
                    seed_id: *seed_id,
                    step: s.step,
                    drift: spectral_distance(sp, &reference)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((drift, specs))
    };

    let (mcmc, mcmc_specs) = drift_of(pure, &seeds[..1])?;
    let (hybrid, hybrid_specs) = drift_of(hybrid, &seeds)?;
    if mcmc.is_empty() || hybrid.is_empty() {
        return Err(Error::Config(
            "no post-burn-in samples; increase ensemble_size or burn-in".into(),
        ));
    }
    let diversity = |specs: &[Spectrum]| ensemble_diversity(specs).unwrap_or(0.0);
    let values = |d: &[DriftSample]| d.iter().map(|s| s.drift).collect::<Vec<_>>();
    Ok(MethodComparison {
        constraints: c,
        seeds_used: seeds.len(),
        mcmc_summary: Summary::of(&values(&mcmc)),
        hybrid_summary: Summary::of(&values(&hybrid)),
        mcmc_diversity: diversity(&mcmc_specs),
        hybrid_diversity: diversity(&hybrid_specs),
        mcmc,
        hybrid,
    })
}

pub fn write_drift_csv(path: &Path, drift: &[DriftSample]) -> Result<()> {
    let mut w = BufWriter::new(fs::File::create(path)?);
    writeln!(w, "{DRIFT_CSV_HEADER}")?;
    writeln!(w, "sample,seed_id,step,drift")?;
    for d in drift {
        writeln!(w, "{},{},{},{}", d.sample, d.seed_id, d.step, d.drift)?;
    }
    w.flush()?;
    Ok(())
}

/// Writes `drift_mcmc.csv`, `drift_hybrid.csv` and `compare_summary.json`.
pub fn write_comparison(dir: &Path, cmp: &MethodComparison) -> Result<()> {
    fs::create_dir_all(dir)?;
    write_drift_csv(&dir.join("drift_mcmc.csv"), &cmp.mcmc)?;
    write_drift_csv(&dir.join("drift_hybrid.csv"), &cmp.hybrid)?;
    let summary = serde_json::json!({
        "constraints": cmp.constraints,
        "seeds_used": cmp.seeds_used,
        "mcmc": { "summary": cmp.mcmc_summary, "diversity": cmp.mcmc_diversity },
        "hybrid": { "summary": cmp.hybrid_summary, "diversity": cmp.hybrid_diversity },
    });
    fs::write(
        dir.join("compare_summary.json"),
        serde_json::to_string_pretty(&summary)? + "\n",
    )?;
    Ok(())
}

// ----------------------------------------------------------------------------
// ensemble generation

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Aco,
    Mcmc,
    Hybrid,
}

/// One line of `manifest.jsonl`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleRecord {
    pub id: usize,
    /// Path of the edge-list file, relative to the manifest.
    pub graph_file: String,
    pub method: Method,
    pub seed_id: usize,
    pub step: u64,
    pub cc: f64,
    pub d_hat: Option<usize>,
    pub exact_diameter: Option<usize>,
    pub rng_stream: u64,
}

#[derive(Debug, Clone)]
pub struct Ensemble {
    pub constraints: Constraints,
    pub records: Vec<EnsembleRecord>,
    pub graphs: Vec<Graph>,
    /// Scheduled snapshots whose exact diameter was out of bounds and had to
    /// be deferred (double-sweep false accepts).
    pub deferred_snapshots: usize,
}

/// Hybrid pipeline: ACO seeds, one chain per seed, `L` records in total split
/// evenly across the chains. Every emitted graph is checked exactly; a
/// snapshot that fails the exact diameter check is deferred to the next step
/// where it passes.
pub fn generate(cfg: &ExperimentConfig) -> Result<Ensemble> {
    cfg.validate()?;
    let c = cfg.primary_constraints();
    let seeds = find_seeds(cfg, &c)?;
    let shares = partition(cfg.ensemble_size, seeds.len());
    let chains = run_seed_chains(cfg, &c, &seeds, &shares, CHAIN_STREAMS, true)?;

    let mut records = Vec::with_capacity(cfg.ensemble_size);
    let mut graphs = Vec::with_capacity(cfg.ensemble_size);
    let mut deferred = 0;
    for (seed, samples) in seeds.iter().zip(chains) {
        for s in samples {
            let violations = c.violations(&s.graph);
            if !violations.is_empty() {
                return Err(Error::SeedViolation(violations));
            }
            if s.deferred {
                deferred += 1;
            }
            let id = records.len();
            records.push(EnsembleRecord {
                id,
                graph_file: format!("graphs/{id:05}.edges"),
                method: Method::Hybrid,
                seed_id: seed.id,
                step: s.step,
                cc: s.cc,
                d_hat: s.d_hat,
                exact_diameter: s.exact_diameter,
                rng_stream: CHAIN_STREAMS + seed.id as u64,
            });
            graphs.push(s.graph);
        }
    }
    Ok(Ensemble {
        constraints: c,
        records,
        graphs,
        deferred_snapshots: deferred,
    })
}

/// Writes `constraints.json`, `manifest.jsonl` and the graph files.
pub fn write_ensemble(dir: &Path, ens: &Ensemble) -> Result<()> {
    fs::create_dir_all(dir.join("graphs"))?;
    fs::write(
        dir.join("constraints.json"),
        serde_json::to_string_pretty(&ens.constraints)? + "\n",
    )?;
    let mut w = BufWriter::new(fs::File::create(dir.join("manifest.jsonl"))?);
    for (rec, g) in ens.records.iter().zip(&ens.graphs) {
        g.save(&dir.join(&rec.graph_file))?;
        writeln!(w, "{}", serde_json::to_string(rec)?)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_manifest(path: &Path) -> Result<Vec<EnsembleRecord>> {
    let f = std::io::BufReader::new(fs::File::open(path)?);
    let mut out = Vec::new();
    for (i, line) in f.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec = serde_json::from_str(&line).map_err(|e| Error::Parse {
            path: path.to_path_buf(),
            line: i + 1,
            msg: e.to_string(),
        })?;
        out.push(rec);
    }
    Ok(out)
}

/// Constraints stored next to a manifest.
pub fn read_constraints(manifest: &Path) -> Result<Constraints> {
    let path = manifest
        .parent()
        .unwrap_or(Path::new("."))
        .join("constraints.json");
    let c: Constraints = serde_json::from_str(&fs::read_to_string(&path)?)?;
    c.validate()?;
    Ok(c)
}

// ----------------------------------------------------------------------------
// verification and spectra

#[derive(Debug, Clone, PartialEq)]
pub struct RecordFailure {
    pub id: usize,
    pub problems: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub checked: usize,
    pub failures: Vec<RecordFailure>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Re-checks every record from its stored graph: node and edge counts,
/// recounted clustering, APSP diameter, connectivity, and agreement with the
/// recorded metrics.
pub fn verify_manifest(manifest: &Path, c: &Constraints) -> Result<VerifyReport> {
    let records = read_manifest(manifest)?;
    let base = manifest.parent().unwrap_or(Path::new("."));
    let failures: Vec<RecordFailure> = records
        .par_iter()
        .filter_map(|rec| {
            let problems = check_record(base, rec, c);
            (!problems.is_empty()).then_some(RecordFailure {
                id: rec.id,
                problems,
            })
        })
        .collect();
    Ok(VerifyReport {
        checked: records.len(),
        failures,
    })
}

fn check_record(base: &Path, rec: &EnsembleRecord, c: &Constraints) -> Vec<String> {
    let g = match Graph::load(&base.join(&rec.graph_file)) {
        Ok(g) => g,
        Err(e) => return vec![format!("unreadable graph: {e}")],
    };
    let mut problems: Vec<String> = c.violations(&g).iter().map(ToString::to_string).collect();
    let cc = recount_triangles_triplets(&g).clustering_coefficient();
    if (cc - rec.cc).abs() > 1e-12 {
        problems.push(format!("recorded cc {} but graph has {cc}", rec.cc));
    }
    if let Some(d) = rec.exact_diameter {
        let actual = crate::diameter::exact_diameter(&g).exact;
        if actual != Some(d) {
            problems.push(format!("recorded diameter {d} but graph has {actual:?}"));
        }
    }
    problems
}

/// Spectra of every record in manifest order.
pub fn manifest_spectra(manifest: &Path) -> Result<(Vec<EnsembleRecord>, Vec<Spectrum>)> {
    let records = read_manifest(manifest)?;
    let base = manifest.parent().unwrap_or(Path::new("."));
    let specs = records
        .par_iter()
        .map(|r| spectrum(&Graph::load(&base.join(&r.graph_file))?))
        .collect::<Result<Vec<_>>>()?;
    Ok((records, specs))
}

/// Writes `spectra.json` and `distances.csv` for a manifest and returns the
/// ensemble diversity (absent for fewer than two records).
pub fn export_spectra(manifest: &Path, out: &Path) -> Result<Option<f64>> {
    let (records, specs) = manifest_spectra(manifest)?;
    fs::create_dir_all(out)?;
    let json: Vec<_> = records
        .iter()
        .zip(&specs)
        .map(|(r, s)| serde_json::json!({ "id": r.id, "eigenvalues": s }))
        .collect();
    fs::write(out.join("spectra.json"), serde_json::to_string(&json)? + "\n")?;

    let d = distance_matrix(&specs)?;
    let mut w = BufWriter::new(fs::File::create(out.join("distances.csv"))?);
    writeln!(w, "{DISTANCES_CSV_HEADER}")?;
    let ids: Vec<String> = records.iter().map(|r| r.id.to_string()).collect();
    writeln!(w, "id,{}", ids.join(","))?;
    for (r, row) in records.iter().zip(&d) {
        let cells: Vec<String> = row.iter().map(f64::to_string).collect();
        writeln!(w, "{},{}", r.id, cells.join(","))?;
    }
    w.flush()?;
    Ok(if specs.len() >= 2 {
        Some(ensemble_diversity(&specs)?)
    } else {
        None
    })
}
