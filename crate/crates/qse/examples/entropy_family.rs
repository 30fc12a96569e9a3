//! The unified (q,s)-entropy family on distributions and density operators:
//! special cases, exact limits, and the Rényi/Tsallis bridge.
//!
//! Run with: cargo run --example entropy_family

use qse::{
    renyi_tsallis_bridge, unified_entropy, unified_entropy_spectrum, DensityOperator,
    EntropyParams, ProbabilityVector,
};

fn main() -> qse::Result<()> {
    // A skewed three-outcome distribution.
    let p = ProbabilityVector::new(&[0.6, 0.3, 0.1])?;

    println!("classical entropies of p = [0.6, 0.3, 0.1]:");
    let shannon = unified_entropy_spectrum(&p, &EntropyParams::von_neumann());
    println!("  shannon            {shannon:.12}");
    for q in [0.5, 2.0, 3.0] {
        let tsallis = unified_entropy_spectrum(&p, &EntropyParams::tsallis(q)?);
        let renyi = unified_entropy_spectrum(&p, &EntropyParams::renyi(q)?);
        let generic = unified_entropy_spectrum(&p, &EntropyParams::new(q, -1.0)?);
        println!("  q={q}: tsallis {tsallis:.12}, renyi {renyi:.12}, (q,s=-1) {generic:.12}");
        // The bridge maps Tsallis values to Rényi values exactly.
        let bridged = renyi_tsallis_bridge(tsallis, q)?;
        println!("       bridge(tsallis) - renyi = {:+.3e}", bridged - renyi);
    }

    // The generic formula converges to both limits.
    let near_vn = unified_entropy_spectrum(&p, &EntropyParams::new(1.0 + 1e-9, 1.0)?);
    println!("\nq -> 1 limit: |H_(1+1e-9) - shannon| = {:.3e}", (near_vn - shannon).abs());
    let renyi2 = unified_entropy_spectrum(&p, &EntropyParams::renyi(2.0)?);
    let near_renyi = unified_entropy_spectrum(&p, &EntropyParams::new(2.0, 1e-9)?);
    println!("s -> 0 limit: |H_2^(1e-9) - renyi_2|  = {:.3e}", (near_renyi - renyi2).abs());

    // Quantum states: entropies depend only on the spectrum.
    let mixed = DensityOperator::maximally_mixed(4);
    println!("\nmaximally mixed state on d=4:");
    for (q, s) in [(1.0, 0.0), (2.0, 1.0), (2.0, 0.0), (0.5, -1.0)] {
        let params = EntropyParams::new(q, s)?;
        println!("  H_{q}^({s}) = {:.12}  (ln 4 = {:.12})", unified_entropy(&mixed, &params), 4.0f64.ln());
    }

    let pure = DensityOperator::pure(&qse::linalg::basis_vector(4, 0))?;
    println!("pure state entropy at (q=0.5, s=2): {:.3e}", unified_entropy(&pure, &EntropyParams::new(0.5, 2.0)?));
    Ok(())
}
