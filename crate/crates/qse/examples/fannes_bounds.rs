//! Continuity bounds for map entropies: how far two channels' map entropies
//! can drift apart, bounded by the trace or Frobenius distance between
//! their rescaled dynamical matrices.
//!
//! Run with: cargo run --example fannes_bounds

use qse::bounds::{choi_frobenius_distance, choi_trace_distance};
use qse::{
    fannes_frobenius_global_bound, fannes_frobenius_small_bound, fannes_trace_bound,
    frobenius_distance_as_2mean, map_entropy, random_channel, EntropyParams, QseError,
};

fn main() -> qse::Result<()> {
    let k1 = random_channel(2, 2, 51)?;
    let k2 = random_channel(2, 4, 52)?;
    let c1 = k1.to_choi()?;
    let c2 = k2.to_choi()?;

    let t = choi_trace_distance(&c1, &c2)?;
    let tau = choi_frobenius_distance(&c1, &c2)?;
    println!("half trace distance t = {t:.12}");
    println!("half Frobenius distance tau = {tau:.12}");

    // The Frobenius distance is also the 2-mean of the distances between the
    // channel images of the d² matrix units.
    let two_mean = frobenius_distance_as_2mean(&k1, &k2)?;
    println!("2-mean identity residual: {:+.3e}", two_mean - 2.0 * tau);

    println!("\nbounds vs observed |ΔM| across parameters:");
    for (q, s) in [(0.5, 1.0), (0.5, -2.0), (2.0, 1.0), (2.0, -0.5), (3.0, 2.0), (1.0, 1.0)] {
        let params = EntropyParams::new(q, s)?;
        let delta = (map_entropy(&c1, &params) - map_entropy(&c2, &params)).abs();
        print!("  q={q:3}, s={s:4}: |ΔM| = {delta:.6}");
        let evaluations = [
            ("trace", fannes_trace_bound(&params, 2, t)),
            ("frob-small", fannes_frobenius_small_bound(&params, 2, tau)),
            ("frob-global", fannes_frobenius_global_bound(&params, 2, tau)),
        ];
        for (name, evaluation) in evaluations {
            match evaluation {
                Ok(b) if b.valid => print!("  {name} {:.6}", b.bound_value),
                Ok(_) => print!("  {name} (distance out of range)"),
                Err(QseError::NotApplicable(_)) => print!("  {name} n/a"),
                Err(e) => return Err(e),
            }
        }
        println!();
    }

    // The small-distance Frobenius bound has a dimension-dependent validity
    // window; the global bound holds for every distance up to sqrt(2)/2.
    let params = EntropyParams::new(0.5, 1.0)?;
    let small = fannes_frobenius_small_bound(&params, 2, tau)?;
    println!("\nsmall-distance bound at q=0.5: valid = {} ({})", small.valid, small.validity_condition);
    let global = fannes_frobenius_global_bound(&params, 2, tau)?;
    println!("global bound at q=0.5:         valid = {} ({})", global.valid, global.validity_condition);
    Ok(())
}
