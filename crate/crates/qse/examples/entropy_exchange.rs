//! Entropy exchange of a channel: the environment (W matrix) route against
//! the purification route, and the triangle relations tying input entropy,
//! output entropy and exchange together.
//!
//! Run with: cargo run --example entropy_exchange

use qse::{
    check_triangle_relations, entropy_exchange, entropy_exchange_via_purification,
    exchange_matrix, purify, random_channel, random_density, stinespring_isometry,
    DensityOperator, EntropyParams,
};

fn main() -> qse::Result<()> {
    let chan = random_channel(2, 3, 31)?;
    let rho = random_density(2, 32)?;
    let params = EntropyParams::new(2.0, 1.0)?;

    // The W matrix is the environment marginal of the Stinespring dilation.
    let v = stinespring_isometry(&chan);
    println!("stinespring isometry: {}x{}", v.nrows(), v.ncols());
    let w = exchange_matrix(&rho, &chan)?;
    println!("W matrix trace: {:.12}", w.trace().re);

    // Both routes agree; the W route works on a k x k matrix instead of d².
    let via_w = entropy_exchange(&rho, &chan, &params)?;
    let via_pure = entropy_exchange_via_purification(&rho, &chan, &params)?;
    println!("exchange via W:            {via_w:.12}");
    println!("exchange via purification: {via_pure:.12}");

    // The canonical purification has the input state as its marginal.
    let psi = purify(&rho)?;
    println!("purification norm: {:.12}", psi.vector().norm());

    // Triangle relations between the three entropies (q > 1, s >= 1/q).
    let report = check_triangle_relations(&rho, &chan, &params)?;
    println!("\ntriangle relations (pass = {}):", report.pass);
    for ineq in &report.inequalities {
        println!("  {:.6} <= {:.6} <= {:.6}   [{}]", ineq.lhs, ineq.mid, ineq.rhs, ineq.label);
    }

    // At the maximally mixed input the exchange equals the map entropy.
    let mixed = DensityOperator::maximally_mixed(2);
    let exch = entropy_exchange(&mixed, &chan, &params)?;
    let map = qse::map_entropy(&chan.to_choi()?, &params);
    println!("\nexchange at I/d: {exch:.12}");
    println!("map entropy:     {map:.12}");
    Ok(())
}
