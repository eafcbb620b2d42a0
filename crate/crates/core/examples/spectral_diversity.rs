//! Normalized-Laplacian spectra, spectral distance and ensemble diversity.
//!
//! `cargo run --example spectral_diversity`

use congraph::{ensemble_diversity, spectral_distance, spectrum, Graph};

fn main() -> congraph::Result<()> {
    let n = 8;
    let complete = Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))?;
    let cycle = Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?;
    let path = Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?;
    let star = Graph::from_edges(n, (1..n).map(|i| (0, i)))?;

    let specs = [&complete, &cycle, &path, &star]
        .iter()
        .map(|g| spectrum(g))
        .collect::<congraph::Result<Vec<_>>>()?;
    for (name, s) in ["K8", "C8", "P8", "S8"].iter().zip(&specs) {
        let vals: Vec<String> = s.eigenvalues.iter().map(|x| format!("{x:.3}")).collect();
        println!("{name}: [{}]", vals.join(", "));
    }
    println!("d(K8, C8) = {:.4}", spectral_distance(&specs[0], &specs[1])?);
    println!("d(C8, P8) = {:.4}", spectral_distance(&specs[1], &specs[2])?);
    println!("diversity of all four = {:.4}", ensemble_diversity(&specs)?);
    Ok(())
}
