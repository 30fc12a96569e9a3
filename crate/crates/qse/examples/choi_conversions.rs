//! Kraus and Choi representations of a channel: conversions in both
//! directions, recovering the channel action from the dynamical matrix, and
//! the spectrum of a tensor product.
//!
//! Run with: cargo run --example choi_conversions

use qse::linalg::{matrix_unit, max_abs};
use qse::{random_channel, random_density};

fn main() -> qse::Result<()> {
    let chan = random_channel(2, 3, 11)?;
    let choi = chan.to_choi()?;
    println!("channel '{}' with {} Kraus operators", chan.label(), chan.len());
    println!("choi spectrum: {:?}", choi.sigma().eigenvalues());

    // Choi -> Kraus recovers a minimal set realizing the same channel.
    let minimal = choi.to_kraus()?;
    let round_trip = minimal.to_choi()?;
    println!(
        "round trip: {} operators, residual {:.3e}",
        minimal.len(),
        max_abs(&(round_trip.sigma().matrix() - choi.sigma().matrix()))
    );

    // The dynamical matrix reconstructs the channel action.
    let mut worst: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            let e = matrix_unit(2, i, j);
            let via_kraus = chan.apply_matrix(&e)?;
            let via_choi = choi.apply(&e)?;
            worst = worst.max(max_abs(&(via_kraus - via_choi)));
        }
    }
    println!("representation agreement on matrix units: {worst:.3e}");

    // Channel action on a state through both representations.
    let rho = random_density(2, 12)?;
    let out = chan.apply(&rho)?;
    let recovered = choi.apply(rho.matrix())?;
    println!("state output agreement: {:.3e}", max_abs(&(out.matrix() - recovered)));

    // Tensor products: the joint Choi spectrum is the product of spectra.
    let other = random_channel(2, 2, 13)?.to_choi()?;
    let joint = choi.tensor(&other)?;
    let mut products: Vec<f64> = choi
        .sigma()
        .eigenvalues()
        .iter()
        .flat_map(|&a| other.sigma().eigenvalues().iter().map(move |&b| a * b))
        .collect();
    products.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let worst = joint
        .sigma()
        .eigenvalues()
        .iter()
        .zip(&products)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    println!("tensor spectrum vs products of spectra: {worst:.3e}");
    Ok(())
}
