//! Map entropies of channels and their behaviour under tensor products: the
//! exact combination identity, strict sub/superadditivity regions, and the
//! two-sided bounds on the output entropy of a maximally entangled input.
//!
//! Run with: cargo run --example map_entropy_additivity

use qse::bounds::additivity_combination;
use qse::{
    additivity_residual, check_entangled_output_bounds, classify_additivity, map_entropy,
    random_channel, standard_channel, ChannelKind, EntropyParams,
};

fn main() -> qse::Result<()> {
    let dep1 = standard_channel(ChannelKind::Depolarizing { d: 2, p: 0.5 })?.to_choi()?;
    let dep2 = standard_channel(ChannelKind::Depolarizing { d: 2, p: 0.9 })?.to_choi()?;
    let unitary = random_channel(2, 1, 41)?.to_choi()?;

    // Map entropy is zero exactly for unitary channels.
    let params = EntropyParams::new(2.0, 1.0)?;
    println!("map entropies at (q=2, s=1):");
    println!("  depolarizing p=0.5: {:.12}", map_entropy(&dep1, &params));
    println!("  depolarizing p=0.9: {:.12}", map_entropy(&dep2, &params));
    println!("  unitary:            {:.3e}", map_entropy(&unitary, &params));

    // The product-channel map entropy obeys an exact combination rule.
    let m1 = map_entropy(&dep1, &params);
    let m2 = map_entropy(&dep2, &params);
    let joint = dep1.tensor(&dep2)?;
    println!("\ncombination identity:");
    println!("  M(joint)      = {:.15}", map_entropy(&joint, &params));
    println!("  combination   = {:.15}", additivity_combination(m1, m2, &params));
    println!("  residual      = {:+.3e}", additivity_residual(&dep1, &dep2, &params)?);

    // Classification across parameter regions.
    println!("\nadditivity classification for two depolarizing channels:");
    for (q, s) in [(2.0, 1.0), (0.5, 1.0), (2.0, -1.0), (0.5, -1.0), (2.0, 0.0), (1.0, 1.0)] {
        let p = EntropyParams::new(q, s)?;
        let joint = map_entropy(&dep1.tensor(&dep2)?, &p);
        let sum = map_entropy(&dep1, &p) + map_entropy(&dep2, &p);
        println!(
            "  q={q:3}, s={s:4}: {:25} (M12 - M1 - M2 = {:+.6e})",
            classify_additivity(&dep1, &dep2, &p).to_string(),
            joint - sum
        );
    }
    println!("  unitary factor:  {}", classify_additivity(&unitary, &dep2, &params));

    // Output entropy of a maximally entangled input is pinned between
    // |M1 - M2| and M1 + M2 for q > 1, s >= 1/q.
    let k1 = random_channel(2, 2, 42)?;
    let k2 = random_channel(2, 3, 43)?;
    let report = check_entangled_output_bounds(&k1, &k2, &params)?;
    println!("\nentangled-input output entropy bounds (pass = {}):", report.pass);
    for ineq in &report.inequalities {
        println!("  {:.6} <= {:.6} <= {:.6}   [{}]", ineq.lhs, ineq.mid, ineq.rhs, ineq.label);
    }
    Ok(())
}
