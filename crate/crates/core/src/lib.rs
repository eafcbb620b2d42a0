//! Ensembles of simple graphs with fixed node and edge counts whose diameter
//! and global clustering coefficient lie in prescribed intervals.
//!
//! The pipeline has two stages. A layered ant colony ([`aco`]) builds valid
//! graphs from scratch; those graphs then seed a constraint-checking
//! Metropolis-Hastings rewiring chain ([`sampler`]) that samples around each
//! of them. Ensemble diversity is measured with the normalized-Laplacian
//! spectral distance ([`spectral`]). [`harness`] wires everything into the
//! experiments exposed by the `congraph` binary.

pub mod aco;
pub mod diameter;
pub mod error;
pub mod graph;
pub mod harness;
pub mod rng;
pub mod sampler;
pub mod spectral;

pub use aco::{run_aco, AcoParams, AcoRun, AntSolution};
pub use diameter::{double_sweep_estimate, exact_diameter, DiameterEstimate};
pub use error::{Error, Result, Violation};
pub use graph::{recount_triangles_triplets, Edge, Graph, Swap, TriangleLedger};
pub use sampler::{run_chain, validate_seed, ChainOptions, Constraints};
pub use spectral::{ensemble_diversity, spectral_distance, spectrum, Spectrum};
