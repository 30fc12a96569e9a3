//! Entropy exchange of a channel acting on a state, via two routes.
//!
//! The primary route evaluates the k×k matrix W_ij = tr(A_i ρ A_j†): the
//! environment output tr_sys(VρV†) of the Stinespring dilation V, which is
//! small and well conditioned. The purification route — unified entropy of
//! (Φ ⊗ id) applied to a purification of ρ on the d²-dimensional space —
//! is kept as the independent oracle; the two share their nonzero spectrum
//! because the tripartite output state is pure.

use crate::bounds::map_entropy;
use crate::channel::{maximally_entangled_state, KrausSet};
use crate::entropy::{entropy_of_weights, unified_entropy, DensityOperator, EntropyParams};
use crate::error::{QseError, Result};
use crate::linalg::{
    cr, hermitian_eig, hermitian_eigenvalues, identity, kron, max_abs, CMatrix,
    CVector,
};
use crate::report::{assertion_tolerance, CheckReport, IneqMargin};

/// Unit vector on system ⊗ reference whose reference marginal is `source`.
#[derive(Debug, Clone)]
pub struct Purification {
    vector: CVector,
    source: DensityOperator,
}

impl Purification {
    pub fn vector(&self) -> &CVector {
        &self.vector
    }

    pub fn source(&self) -> &DensityOperator {
        &self.source
    }

    /// |ψ⟩⟨ψ| on the doubled space.
    pub fn projector(&self) -> CMatrix {
        &self.vector * self.vector.adjoint()
    }
}

/// Canonical purification Σ_j √λ_j |e_j⟩ ⊗ |j⟩ from the eigendecomposition
/// of ρ (descending eigenvalues, deterministic phases; system factor first).
pub fn purify(rho: &DensityOperator) -> Result<Purification> {
    let d = rho.dim();
    let spec = hermitian_eig(rho.matrix())?;
    let mut vector = CVector::zeros(d * d);
    for (j, &lam) in spec.eigenvalues.iter().enumerate() {
        let amp = cr(lam.max(0.0).sqrt());
        for i in 0..d {
            vector[i * d + j] += amp * spec.eigenvectors[(i, j)];
        }
    }
    let norm = vector.norm();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(QseError::Validation(format!("purification norm is {norm}, expected 1")));
    }
    // marginal check: tr_ref |ψ⟩⟨ψ| must reproduce ρ
    let proj = &vector * vector.adjoint();
    let marginal = crate::linalg::partial_trace(&proj, crate::linalg::Subsystem::First, (d, d))?;
    if max_abs(&(marginal - rho.matrix())) > 1e-9 {
        return Err(QseError::Validation("purification marginal deviates from the source".into()));
    }
    Ok(Purification { vector, source: rho.clone() })
}

/// Stinespring isometry V = Σ_j |e_j⟩ ⊗ A_j (a kd×d matrix with V†V = I).
/// tr_sys(VρV†) is the W matrix and tr_env(VρV†) = Φ(ρ).
pub fn stinespring_isometry(kraus: &KrausSet) -> CMatrix {
    let d = kraus.dim();
    let k = kraus.len();
    let mut v = CMatrix::zeros(k * d, d);
    for (e, a) in kraus.operators().iter().enumerate() {
        for i in 0..d {
            for j in 0..d {
                v[(e * d + i, j)] = a[(i, j)];
            }
        }
    }
    v
}

/// Environment output W_ij = tr(A_i ρ A_j†): Hermitian, PSD, unit trace.
pub fn exchange_matrix(rho: &DensityOperator, kraus: &KrausSet) -> Result<CMatrix> {
    if kraus.dim() != rho.dim() {
        return Err(QseError::DimensionMismatch(format!(
            "channel dimension {} vs state dimension {}",
            kraus.dim(),
            rho.dim()
        )));
    }
    let k = kraus.len();
    let products: Vec<CMatrix> =
        kraus.operators().iter().map(|a| a * rho.matrix()).collect();
    let w = CMatrix::from_fn(k, k, |i, j| {
        // tr(A_i ρ A_j†) = Σ_{mn} (A_i ρ)_{mn} conj(A_j)_{mn}
        products[i]
            .iter()
            .zip(kraus.operators()[j].iter())
            .map(|(x, a)| x * a.conj())
            .sum()
    });
    Ok(w)
}

/// (q,s)-entropy exchange: unified entropy injected into an initially pure
/// environment. Computed from the spectrum of the W matrix.
pub fn entropy_exchange(
    rho: &DensityOperator,
    kraus: &KrausSet,
    params: &EntropyParams,
) -> Result<f64> {
    let w = exchange_matrix(rho, kraus)?;
    let eigs = hermitian_eigenvalues(&w)?;
    if let Some(&min) = eigs.last() {
        if min < -1e-10 {
            return Err(QseError::Validation(format!("W matrix has negative eigenvalue {min}")));
        }
    }
    Ok(entropy_of_weights(&crate::entropy::clip_spectrum(eigs), params))
}

/// Joint output (Φ ⊗ id)(|ψ⟩⟨ψ|) of the channel on a canonical purification.
pub fn joint_output(rho: &DensityOperator, kraus: &KrausSet) -> Result<DensityOperator> {
    let d = rho.dim();
    let psi = purify(rho)?;
    let mut out = CMatrix::zeros(d * d, d * d);
    let proj = psi.projector();
    let id = identity(d);
    for a in kraus.operators() {
        let big = kron(a, &id);
        out += &big * &proj * big.adjoint();
    }
    DensityOperator::new(out)
}

/// Oracle route for [`entropy_exchange`]: entropy of the joint output on the
/// d²-dimensional doubled space.
pub fn entropy_exchange_via_purification(
    rho: &DensityOperator,
    kraus: &KrausSet,
    params: &EntropyParams,
) -> Result<f64> {
    Ok(unified_entropy(&joint_output(rho, kraus)?, params))
}

/// Whether the triangle/subadditivity relations are asserted at (q, s).
fn triangle_asserted(params: &EntropyParams) -> bool {
    let q = params.q();
    let s = params.s();
    q > 1.0 && s >= 1.0 / q - 1e-12
}

fn triangle_margins(a: f64, b: f64, c: f64, labels: [&str; 3]) -> Vec<IneqMargin> {
    // each entropy bounded by |difference| and sum of the other two
    vec![
        IneqMargin::new(labels[0], (a - c).abs(), b, a + c),
        IneqMargin::new(labels[1], (b - c).abs(), a, b + c),
        IneqMargin::new(labels[2], (a - b).abs(), c, a + b),
    ]
}

/// Triangle and subadditivity relations between H(ρ), H(Φ(ρ)) and the
/// exchange entropy, asserted for q > 1 with s >= 1/q; outside that region
/// the relations are evaluated in exploratory mode and never fail.
pub fn check_triangle_relations(
    rho: &DensityOperator,
    kraus: &KrausSet,
    params: &EntropyParams,
) -> Result<CheckReport> {
    let h_in = unified_entropy(rho, params);
    let h_out = unified_entropy(&kraus.apply(rho)?, params);
    let exch = entropy_exchange(rho, kraus, params)?;

    let inequalities = triangle_margins(
        h_in,
        h_out,
        exch,
        ["|H(in)-S| <= H(out) <= H(in)+S", "|H(out)-S| <= H(in) <= H(out)+S", "|H(in)-H(out)| <= S <= H(in)+H(out)"],
    );
    let max_violation =
        inequalities.iter().map(IneqMargin::violation).fold(f64::NEG_INFINITY, f64::max);

    let mut report = CheckReport::new("theorem4", params);
    report.trials = 1;
    report.max_violation = max_violation;
    report.applicable = triangle_asserted(params);
    report.pass = !report.applicable || max_violation <= assertion_tolerance();
    report.inequalities = inequalities;
    if !report.applicable {
        report.note = Some("outside q > 1, s >= 1/q: exploratory evaluation".into());
    }
    Ok(report)
}

/// Output of Φ₁ ⊗ Φ₂ on the maximally entangled input state.
pub fn entangled_output(k1: &KrausSet, k2: &KrausSet) -> Result<DensityOperator> {
    if k1.dim() != k2.dim() {
        return Err(QseError::DimensionMismatch(format!(
            "channels act on different dimensions: {} vs {}",
            k1.dim(),
            k2.dim()
        )));
    }
    let product = k1.tensor(k2)?;
    product.apply(&maximally_entangled_state(k1.dim())?)
}

/// Two-sided estimate of the output entropy of a maximally entangled state
/// under Φ₁ ⊗ Φ₂ in terms of the two map entropies, asserted for q > 1 with
/// s >= 1/q. Also verifies the factorization consistency: applying Φ₁ ⊗ id
/// after id ⊗ Φ₂ reproduces the direct product output.
pub fn check_entangled_output_bounds(
    k1: &KrausSet,
    k2: &KrausSet,
    params: &EntropyParams,
) -> Result<CheckReport> {
    let d = k1.dim();
    if d != k2.dim() {
        return Err(QseError::DimensionMismatch(format!(
            "channels act on different dimensions: {} vs {}",
            d,
            k2.dim()
        )));
    }
    let m1 = map_entropy(&k1.to_choi()?, params);
    let m2 = map_entropy(&k2.to_choi()?, params);
    let output = entangled_output(k1, k2)?;
    let h_out = unified_entropy(&output, params);

    // factorization consistency: (Φ₁⊗id) ∘ (id⊗Φ₂) on |φ+⟩⟨φ+|
    let id = identity(d);
    let phi = maximally_entangled_state(d)?;
    let mut stage = CMatrix::zeros(d * d, d * d);
    for b in k2.operators() {
        let big = kron(&id, b);
        stage += &big * phi.matrix() * big.adjoint();
    }
    let mut two_step = CMatrix::zeros(d * d, d * d);
    for a in k1.operators() {
        let big = kron(a, &id);
        two_step += &big * &stage * big.adjoint();
    }
    let consistency = max_abs(&(&two_step - output.matrix()));

    let inequalities = triangle_margins(
        m1,
        h_out,
        m2,
        ["|M1-M2| <= H(out) <= M1+M2", "|H(out)-M2| <= M1 <= H(out)+M2", "|M1-H(out)| <= M2 <= M1+H(out)"],
    );
    let mut max_violation =
        inequalities.iter().map(IneqMargin::violation).fold(f64::NEG_INFINITY, f64::max);
    max_violation = max_violation.max(consistency - 1e-9);

    let mut report = CheckReport::new("theorem5", params);
    report.trials = 1;
    report.max_violation = max_violation;
    report.applicable = triangle_asserted(params);
    report.pass = !report.applicable || max_violation <= assertion_tolerance();
    report.inequalities = inequalities;
    report.note = Some(format!("factorization residual {consistency:.3e}"));
    if !report.applicable {
        report.note = Some(format!(
            "outside q > 1, s >= 1/q: exploratory evaluation; factorization residual {consistency:.3e}"
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::{
        computational_pinching, haar_random_unitary, random_channel, random_density,
        standard_channel, ChannelKind, UnitaryMatrix,
    };
    use crate::linalg::basis_vector;
    use crate::linalg::{partial_trace, Subsystem};

    fn approx(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn purify_examples() {
        // pure state purifies to a product vector
        let e0 = basis_vector(2, 0);
        let rho = DensityOperator::pure(&e0).unwrap();
        let psi = purify(&rho).unwrap();
        let marg =
            partial_trace(&psi.projector(), Subsystem::Second, (2, 2)).unwrap();
        // reference marginal of a product purification is pure as well
        let eigs = hermitian_eigenvalues(&marg).unwrap();
        assert!(approx(eigs[0], 1.0, 1e-12));

        // maximally mixed purifies to a maximally entangled vector
        let mixed = DensityOperator::maximally_mixed(2);
        let psi = purify(&mixed).unwrap();
        let marg = partial_trace(&psi.projector(), Subsystem::Second, (2, 2)).unwrap();
        assert!(max_abs(&(marg - identity(2).scale(0.5))) < 1e-12);

        // random states: marginal residual below 1e-9
        for seed in 0..10u64 {
            let rho = random_density(3, seed).unwrap();
            let psi = purify(&rho).unwrap();
            let marg = partial_trace(&psi.projector(), Subsystem::First, (3, 3)).unwrap();
            assert!(max_abs(&(marg - rho.matrix())) < 1e-9);
        }
    }

    #[test]
    fn stinespring_contract() {
        // single identity operator: V = |e0⟩ ⊗ I
        let chan = standard_channel(ChannelKind::Identity { d: 2 }).unwrap();
        let v = stinespring_isometry(&chan);
        assert_eq!(v.shape(), (2, 2));
        assert!(max_abs(&(v.adjoint() * &v - identity(2))) < 1e-12);

        for seed in 0..5u64 {
            let d = 2 + (seed as usize) % 2;
            let chan = random_channel(d, 1 + (seed as usize) % (d * d), seed).unwrap();
            let rho = random_density(d, 100 + seed).unwrap();
            let v = stinespring_isometry(&chan);
            assert!(max_abs(&(v.adjoint() * &v - identity(d))) < 1e-10);
            let joint = &v * rho.matrix() * v.adjoint();
            let k = chan.len();
            // environment marginal is W, system marginal is the channel output
            let env = partial_trace(&joint, Subsystem::First, (k, d)).unwrap();
            let w = exchange_matrix(&rho, &chan).unwrap();
            assert!(max_abs(&(env - w)) < 1e-9);
            let sys = partial_trace(&joint, Subsystem::Second, (k, d)).unwrap();
            let out = chan.apply(&rho).unwrap();
            assert!(max_abs(&(sys - out.matrix())) < 1e-9);
        }
    }

    #[test]
    fn exchange_zero_for_unitary_channels() {
        let u = haar_random_unitary(3, 1).unwrap();
        let chan = standard_channel(ChannelKind::Unitary(u)).unwrap();
        let rho = random_density(3, 2).unwrap();
        for (q, s) in [(0.5, 1.0), (1.0, 0.0), (2.0, 1.0), (2.0, -1.0)] {
            let params = EntropyParams::new(q, s).unwrap();
            assert!(approx(entropy_exchange(&rho, &chan, &params).unwrap(), 0.0, 1e-12));
        }
    }

    #[test]
    fn exchange_of_pinching_on_plus_state() {
        let chan = computational_pinching(2).unwrap();
        let plus = DensityOperator::pure(&CVector::from_vec(vec![
            cr(1.0 / 2.0f64.sqrt()),
            cr(1.0 / 2.0f64.sqrt()),
        ]))
        .unwrap();
        let w = exchange_matrix(&plus, &chan).unwrap();
        assert!(max_abs(&(&w - &identity(2).scale(0.5))) < 1e-12);
        let h = entropy_exchange(&plus, &chan, &EntropyParams::von_neumann()).unwrap();
        assert!(approx(h, 2.0f64.ln(), 1e-12));
    }

    #[test]
    fn both_routes_share_nonzero_spectrum() {
        for seed in 0..10u64 {
            let d = 2 + (seed as usize) % 2;
            let rank = 1 + (seed as usize) % (d * d);
            let chan = random_channel(d, rank, 200 + seed).unwrap();
            let rho = random_density(d, 300 + seed).unwrap();
            let w = exchange_matrix(&rho, &chan).unwrap();
            let mut a = hermitian_eigenvalues(&w).unwrap();
            let mut b = joint_output(&rho, &chan).unwrap().eigenvalues().to_vec();
            let n = a.len().max(b.len());
            a.resize(n, 0.0);
            b.resize(n, 0.0);
            a.sort_by(|x, y| y.partial_cmp(x).unwrap());
            b.sort_by(|x, y| y.partial_cmp(x).unwrap());
            for (x, y) in a.iter().zip(&b) {
                assert!((x - y).abs() < 1e-9, "seed={seed}: {x} vs {y}");
            }
        }
    }

    #[test]
    fn exchange_routes_agree() {
        for seed in 0..5u64 {
            let chan = random_channel(2, 3, 400 + seed).unwrap();
            let rho = random_density(2, 500 + seed).unwrap();
            for (q, s) in [(0.5, 1.0), (1.0, 0.0), (2.0, 1.0), (3.0, -0.5)] {
                let params = EntropyParams::new(q, s).unwrap();
                let a = entropy_exchange(&rho, &chan, &params).unwrap();
                let b = entropy_exchange_via_purification(&rho, &chan, &params).unwrap();
                assert!(approx(a, b, 1e-9), "seed={seed} q={q} s={s}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn exchange_invariant_under_purification_rotation() {
        let chan = random_channel(2, 3, 600).unwrap();
        let rho = random_density(2, 601).unwrap();
        let d = 2;
        let psi = purify(&rho).unwrap();
        let params = EntropyParams::new(2.0, 1.0).unwrap();
        let reference = entropy_exchange(&rho, &chan, &params).unwrap();
        for seed in 0..5 {
            let u = haar_random_unitary(d, 700 + seed).unwrap();
            let rotated = kron(&identity(d), u.matrix()) * psi.vector();
            let mut out = CMatrix::zeros(d * d, d * d);
            let proj = &rotated * rotated.adjoint();
            for a in chan.operators() {
                let big = kron(a, &identity(d));
                out += &big * &proj * big.adjoint();
            }
            let h = unified_entropy(&DensityOperator::new(out).unwrap(), &params);
            assert!(approx(h, reference, 1e-9));
        }
    }

    #[test]
    fn exchange_invariant_under_remixing() {
        let chan = random_channel(2, 3, 800).unwrap();
        let rho = random_density(2, 801).unwrap();
        let params = EntropyParams::new(2.0, 0.5).unwrap();
        let reference = entropy_exchange(&rho, &chan, &params).unwrap();
        for seed in 0..5 {
            let u = haar_random_unitary(chan.len(), 900 + seed).unwrap();
            let remixed = chan.transform(&u).unwrap();
            let h = entropy_exchange(&rho, &remixed, &params).unwrap();
            assert!(approx(h, reference, 1e-10));
        }
    }

    #[test]
    fn exchange_at_maximally_mixed_equals_map_entropy() {
        for seed in 0..5u64 {
            let d = 2 + (seed as usize) % 2;
            let chan = random_channel(d, 1 + (seed as usize) % (d * d), 1000 + seed).unwrap();
            let mixed = DensityOperator::maximally_mixed(d);
            let choi = chan.to_choi().unwrap();
            for (q, s) in [(0.5, 1.0), (1.0, 0.0), (2.0, 1.0), (2.0, -1.0)] {
                let params = EntropyParams::new(q, s).unwrap();
                let a = entropy_exchange(&mixed, &chan, &params).unwrap();
                let b = map_entropy(&choi, &params);
                assert!(approx(a, b, 1e-9), "seed={seed} q={q} s={s}");
            }
        }
    }

    #[test]
    fn triangle_relations_spot_case() {
        // pure input through a unitary: all three entropies vanish
        let u = haar_random_unitary(2, 1100).unwrap();
        let chan = standard_channel(ChannelKind::Unitary(u)).unwrap();
        let rho = DensityOperator::pure(&basis_vector(2, 0)).unwrap();
        let params = EntropyParams::new(2.0, 1.0).unwrap();
        let report = check_triangle_relations(&rho, &chan, &params).unwrap();
        assert!(report.pass && report.applicable);
        for m in &report.inequalities {
            assert!(approx(m.lhs, 0.0, 1e-12) && approx(m.mid, 0.0, 1e-12));
        }

        // maximally mixed through full depolarizing at q=2, s=1:
        // H(in) = 1/2, H(out) = 1/2, S = 3/4
        let chan = standard_channel(ChannelKind::Depolarizing { d: 2, p: 1.0 }).unwrap();
        let mixed = DensityOperator::maximally_mixed(2);
        let report = check_triangle_relations(&mixed, &chan, &params).unwrap();
        assert!(report.pass);
        let m = &report.inequalities[0];
        assert!(approx(m.lhs, 0.25, 1e-12));
        assert!(approx(m.mid, 0.5, 1e-12));
        assert!(approx(m.rhs, 1.25, 1e-12));
    }

    #[test]
    fn triangle_relations_randomized() {
        let qs = [(1.5, 1.0), (2.0, 0.5), (2.0, 1.0), (3.0, 1.0), (1.25, 0.8)];
        for seed in 0..25u64 {
            let d = 2 + (seed as usize) % 2;
            let chan = random_channel(d, 1 + (seed as usize) % (d * d), 1200 + seed).unwrap();
            let rho = random_density(d, 1300 + seed).unwrap();
            for (q, s) in qs {
                let params = EntropyParams::new(q, s).unwrap();
                let report = check_triangle_relations(&rho, &chan, &params).unwrap();
                assert!(report.applicable);
                assert!(report.pass, "seed={seed} q={q} s={s}: {:.3e}", report.max_violation);
            }
        }
    }

    #[test]
    fn entangled_output_identity_pair() {
        let id = standard_channel(ChannelKind::Identity { d: 2 }).unwrap();
        let params = EntropyParams::new(2.0, 1.0).unwrap();
        let report = check_entangled_output_bounds(&id, &id, &params).unwrap();
        assert!(report.pass);
        let m = &report.inequalities[0];
        assert!(approx(m.lhs, 0.0, 1e-12));
        assert!(approx(m.mid, 0.0, 1e-12));
        assert!(approx(m.rhs, 0.0, 1e-12));
    }

    #[test]
    fn entangled_output_tight_for_identity_times_channel() {
        let id = standard_channel(ChannelKind::Identity { d: 2 }).unwrap();
        let dep = standard_channel(ChannelKind::Depolarizing { d: 2, p: 1.0 }).unwrap();
        let params = EntropyParams::new(2.0, 1.0).unwrap();
        let m2 = map_entropy(&dep.to_choi().unwrap(), &params);
        let output = entangled_output(&id, &dep).unwrap();
        let h = unified_entropy(&output, &params);
        assert!(approx(h, m2, 1e-12));
        assert!(approx(h, 0.75, 1e-12));
        let report = check_entangled_output_bounds(&id, &dep, &params).unwrap();
        assert!(report.pass);
    }

    #[test]
    fn entangled_output_randomized_pairs() {
        let qs = [(1.5, 1.0), (2.0, 0.5), (2.0, 1.0), (3.0, 1.0)];
        for seed in 0..15u64 {
            let k1 = random_channel(2, 1 + (seed as usize) % 4, 1400 + seed).unwrap();
            let k2 = random_channel(2, 1 + (seed as usize * 7) % 4, 1500 + seed).unwrap();
            for (q, s) in qs {
                let params = EntropyParams::new(q, s).unwrap();
                let report = check_entangled_output_bounds(&k1, &k2, &params).unwrap();
                assert!(report.pass, "seed={seed} q={q} s={s}: {:.3e}", report.max_violation);
            }
        }
    }

    #[test]
    fn entangled_output_dimension_mismatch() {
        let a = standard_channel(ChannelKind::Identity { d: 2 }).unwrap();
        let b = standard_channel(ChannelKind::Identity { d: 3 }).unwrap();
        assert!(check_entangled_output_bounds(&a, &b, &EntropyParams::new(2.0, 1.0).unwrap())
            .is_err());
    }

    #[test]
    fn padded_unraveling_keeps_exchange() {
        let chan = random_channel(2, 2, 1600).unwrap();
        let rho = random_density(2, 1601).unwrap();
        let params = EntropyParams::new(2.0, 1.0).unwrap();
        let reference = entropy_exchange(&rho, &chan, &params).unwrap();
        let pad = UnitaryMatrix::new(identity(4)).unwrap();
        let padded = chan.transform(&pad).unwrap();
        assert_eq!(padded.len(), 4);
        let h = entropy_exchange(&rho, &padded, &params).unwrap();
        assert!(approx(h, reference, 1e-10));
    }
}
