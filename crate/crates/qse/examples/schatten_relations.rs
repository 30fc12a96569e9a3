//! Schatten norms and the support-dimension inequality
//! ‖x‖_p <= d^{(q-1)/(pq)} ‖x‖_{pq}, tight exactly on operators that act as
//! a multiple of a unitary on their support.
//!
//! Run with: cargo run --example schatten_relations

use num_complex::Complex64;
use qse::linalg::CMatrix;
use qse::{
    haar_random_unitary, q_mean, schatten_bound_factor, schatten_norm, singular_values,
    support_dim,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

fn main() -> qse::Result<()> {
    let mut rng = ChaCha12Rng::seed_from_u64(61);
    let x = CMatrix::from_fn(4, 4, |_, _| {
        Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
    });

    println!("singular values: {:?}", singular_values(&x));
    println!("support dimension: {}", support_dim(&x));
    for p in [1.0, 2.0, 4.0, f64::INFINITY] {
        println!("  ‖x‖_{p:3} = {:.12}", schatten_norm(&x, p)?);
    }
    println!("q-mean (order 2) of the singular values: {:.12}", q_mean(&singular_values(&x), 2.0)?);

    // The norm bound with the support dimension.
    println!("\nnorm bounds ‖x‖_p <= d^((q-1)/(pq)) ‖x‖_pq, d = support dim:");
    let d = support_dim(&x);
    for (p, q) in [(1.0, 2.0), (1.0, 3.0), (2.0, 2.0), (1.0, f64::INFINITY)] {
        let lhs = schatten_norm(&x, p)?;
        let pq = if q.is_infinite() { f64::INFINITY } else { p * q };
        let factor = schatten_bound_factor(d, p, q)?;
        let rhs = factor * schatten_norm(&x, pq)?;
        println!("  p={p}, q={q:3}: {lhs:.6} <= {factor:.4} x {:.6} = {rhs:.6}", schatten_norm(&x, pq)?);
    }

    // Equality holds exactly for multiples of unitaries restricted to their
    // support (all nonzero singular values equal).
    let u = haar_random_unitary(5, 62)?;
    let w = haar_random_unitary(5, 63)?;
    let rank = 3;
    let mut iso = CMatrix::zeros(5, 5);
    for j in 0..rank {
        iso += CMatrix::from_columns(&[u.matrix().column(j).into_owned()])
            * CMatrix::from_columns(&[w.matrix().column(j).into_owned()]).adjoint();
    }
    let iso = iso.scale(0.8);
    println!("\nscaled rank-{rank} partial isometry (support dim {}):", support_dim(&iso));
    for (p, q) in [(1.0, 2.0), (2.0, 3.0), (1.0, f64::INFINITY)] {
        let lhs = schatten_norm(&iso, p)?;
        let pq = if q.is_infinite() { f64::INFINITY } else { p * q };
        let rhs = schatten_bound_factor(rank, p, q)? * schatten_norm(&iso, pq)?;
        println!("  p={p}, q={q:3}: gap = {:+.3e}", lhs - rhs);
    }
    Ok(())
}
