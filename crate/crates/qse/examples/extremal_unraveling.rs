//! Extremal unravelings: the effect Gram matrix, the unraveling that
//! diagonalizes it, its minimality among remixings, and the input-entropy
//! lower bound for pinching channels.
//!
//! Run with: cargo run --example extremal_unraveling

use qse::{
    check_extremal_minimality, check_input_entropy_bound, effect_gram, extremal_unraveling,
    haar_random_unitary, random_channel, random_density, unified_entropy, unraveling_entropy,
    EntropyParams,
};

fn main() -> qse::Result<()> {
    let chan = random_channel(3, 4, 21)?;
    let rho = random_density(3, 22)?;
    let params = EntropyParams::new(2.0, 1.0)?;

    // Different unravelings of one channel give different effect statistics.
    let gram = effect_gram(&chan, &rho)?;
    println!("effect probabilities of the sampled unraveling:");
    println!("  {:?}", gram.probabilities()?.probabilities());
    println!("  entropy {:.12}", unraveling_entropy(&chan, &rho, &params)?);

    let remixed = chan.transform(&haar_random_unitary(chan.len(), 23)?)?;
    println!("after a random remix:");
    println!("  {:?}", effect_gram(&remixed, &rho)?.probabilities()?.probabilities());
    println!("  entropy {:.12}", unraveling_entropy(&remixed, &rho, &params)?);

    // The extremal unraveling diagonalizes the Gram matrix; its effect
    // distribution consists of the Gram eigenvalues.
    let ex = extremal_unraveling(&chan, &rho)?;
    println!("extremal unraveling:");
    println!("  {:?}", ex.lambdas().probabilities());
    println!("  entropy {:.12}", ex.entropy(&params));

    // Minimality against 500 random remixings.
    let report = check_extremal_minimality(&chan, &rho, &params, 500, 24)?;
    println!(
        "\nminimality over {} remixings: pass = {}, max violation {:+.3e}",
        report.trials, report.pass, report.max_violation
    );

    // For a basis pinching, the extremal entropy dominates the state entropy.
    let pinch = qse::channel::computational_pinching(3)?;
    let report = check_input_entropy_bound(&pinch, &rho, &params)?;
    println!(
        "pinching input-entropy bound: H(rho) = {:.6} <= {:.6} = extremal entropy (pass = {})",
        unified_entropy(&rho, &params),
        extremal_unraveling(&pinch, &rho)?.entropy(&params),
        report.pass
    );

    // For Rényi entropies of order q > 1 minimality is not asserted; the
    // check runs as an exploratory scan.
    let renyi = EntropyParams::renyi(2.0)?;
    let report = check_extremal_minimality(&chan, &rho, &renyi, 500, 25)?;
    println!(
        "Rényi q=2 exploratory scan: applicable = {}, worst gap {:+.3e}",
        report.applicable, report.max_violation
    );
    Ok(())
}
