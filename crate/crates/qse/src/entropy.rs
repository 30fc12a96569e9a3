//! The unified (q,s)-entropy family for spectra, classical distributions and
//! density operators.
//!
//! The two-parameter family [(Σ p_i^q)^s − 1] / ((1−q)s) contains the common
//! entropies as exact special cases: von Neumann/Shannon at q = 1, Rényi in
//! the limit s → 0, Tsallis at s = 1. Limits are dispatched on exact
//! parameter equality; the generic formula is numerically stable for
//! |1−q|·|s| down to about 1e-8, beyond which precision degrades.

use num_complex::Complex64;

use crate::error::{QseError, Result};
use crate::linalg::{
    all_finite, hermiticity_error, hermitian_eigenvalues, max_abs, CMatrix, CVector,
};

/// Hermiticity / trace tolerance for density-operator validation.
pub const DENSITY_TOL: f64 = 1e-10;
/// Eigenvalues of a validated density operator may round below zero by this much.
pub const DENSITY_EIG_TOL: f64 = 1e-10;
/// Spectrum entries of unit-trace operators below this value are numerically
/// indistinguishable from zero and are clipped; fractional powers q < 1 would
/// otherwise amplify decomposition noise (1e-16 noise gives 2e-5 at q = 0.3).
pub const EIG_ZERO_CLIP: f64 = 1e-12;

/// Clip rounding noise in a spectrum of a unit-trace positive operator.
pub(crate) fn clip_spectrum(raw: Vec<f64>) -> Vec<f64> {
    raw.into_iter().map(|l| if l < EIG_ZERO_CLIP { 0.0 } else { l }).collect()
}
/// Probability entries may round below zero by this much before being clipped.
pub const PROB_CLIP_TOL: f64 = 1e-12;
/// Tolerance on Σ p_i = 1.
pub const PROB_SUM_TOL: f64 = 1e-10;

/// Which member of the (q,s) family a parameter pair selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntropyMode {
    /// q = 1 (any s): von Neumann / Shannon.
    VonNeumann,
    /// s = 0, q ≠ 1: Rényi.
    Renyi,
    /// s = 1, q ≠ 1: Tsallis.
    Tsallis,
    Generic,
}

/// Validated parameter pair (q, s) with its exact-limit mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyParams {
    q: f64,
    s: f64,
    mode: EntropyMode,
}

impl EntropyParams {
    pub fn new(q: f64, s: f64) -> Result<Self> {
        if !q.is_finite() || q <= 0.0 {
            return Err(QseError::InvalidParameter(format!("entropy order q must be > 0, got {q}")));
        }
        if !s.is_finite() {
            return Err(QseError::InvalidParameter(format!("entropy degree s must be finite, got {s}")));
        }
        let mode = if q == 1.0 {
            EntropyMode::VonNeumann
        } else if s == 0.0 {
            EntropyMode::Renyi
        } else if s == 1.0 {
            EntropyMode::Tsallis
        } else {
            EntropyMode::Generic
        };
        Ok(Self { q, s, mode })
    }

    pub fn von_neumann() -> Self {
        Self { q: 1.0, s: 0.0, mode: EntropyMode::VonNeumann }
    }

    pub fn renyi(q: f64) -> Result<Self> {
        Self::new(q, 0.0)
    }

    pub fn tsallis(q: f64) -> Result<Self> {
        Self::new(q, 1.0)
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn mode(&self) -> EntropyMode {
        self.mode
    }
}

impl std::fmt::Display for EntropyParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "q={}, s={}", self.q, self.s)
    }
}

/// q-logarithm ln_q(x) = (x^{1−q} − 1)/(1−q), with ln_1 = ln.
pub fn q_log(x: f64, q: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(QseError::Domain(format!("q_log requires x > 0, got {x}")));
    }
    Ok(if q == 1.0 { x.ln() } else { (x.powf(1.0 - q) - 1.0) / (1.0 - q) })
}

/// η_q(x) = (x^q − x)/(1−q) on [0, 1], with η_1(x) = −x ln x and η(0) = 0.
pub fn eta_q(x: f64, q: f64) -> Result<f64> {
    if !q.is_finite() || q <= 0.0 {
        return Err(QseError::InvalidParameter(format!("eta_q requires q > 0, got {q}")));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(QseError::Domain(format!("eta_q requires 0 <= x <= 1, got {x}")));
    }
    Ok(if q == 1.0 {
        if x == 0.0 {
            0.0
        } else {
            -x * x.ln()
        }
    } else {
        (x.powf(q) - x) / (1.0 - q)
    })
}

/// Binary Tsallis entropy T_q(t, 1−t) = η_q(t) + η_q(1−t).
pub fn binary_tsallis(t: f64, q: f64) -> Result<f64> {
    Ok(eta_q(t, q)? + eta_q(1.0 - t, q)?)
}

/// Rényi value (1−q)^{-1} ln(1 + (1−q)·T) from a Tsallis value T.
pub fn renyi_tsallis_bridge(tsallis_value: f64, q: f64) -> Result<f64> {
    if !q.is_finite() || q <= 0.0 || q == 1.0 {
        return Err(QseError::InvalidParameter(format!(
            "bridge requires q > 0, q != 1, got {q}"
        )));
    }
    let arg = 1.0 + (1.0 - q) * tsallis_value;
    if arg.is_nan() || arg <= 0.0 {
        return Err(QseError::Domain(format!("bridge log argument must be positive, got {arg}")));
    }
    Ok(arg.ln() / (1.0 - q))
}

/// Probability distribution: nonnegative entries summing to one.
///
/// Entries in [−1e-12, 0) are treated as rounding and clipped to zero;
/// anything lower is rejected.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector(Vec<f64>);

impl ProbabilityVector {
    pub fn new(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(QseError::InvalidInput("empty probability vector".into()));
        }
        let mut probs = Vec::with_capacity(values.len());
        for &v in values {
            if !v.is_finite() || v < -PROB_CLIP_TOL {
                return Err(QseError::Validation(format!("probability entry {v} out of range")));
            }
            probs.push(v.max(0.0));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > PROB_SUM_TOL {
            return Err(QseError::Validation(format!(
                "probabilities sum to {sum}, expected 1 within {PROB_SUM_TOL:e}"
            )));
        }
        Ok(Self(probs))
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(QseError::InvalidInput("uniform distribution needs n >= 1".into()));
        }
        Ok(Self(vec![1.0 / n as f64; n]))
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Entropy of nonnegative weights treated as a probability distribution.
/// Zero entries are dropped before powering (0^q = 0 convention for q > 0).
pub(crate) fn entropy_of_weights(weights: &[f64], params: &EntropyParams) -> f64 {
    let q = params.q;
    let s = params.s;
    let value = match params.mode {
        EntropyMode::VonNeumann => {
            -weights.iter().filter(|&&p| p > 0.0).map(|&p| p * p.ln()).sum::<f64>()
        }
        EntropyMode::Renyi => {
            let sum_q: f64 = weights.iter().filter(|&&p| p > 0.0).map(|&p| p.powf(q)).sum();
            sum_q.ln() / (1.0 - q)
        }
        EntropyMode::Tsallis | EntropyMode::Generic => {
            let sum_q: f64 = weights.iter().filter(|&&p| p > 0.0).map(|&p| p.powf(q)).sum();
            (sum_q.powf(s) - 1.0) / ((1.0 - q) * s)
        }
    };
    // The family is nonnegative on distributions; absorb rounding at zero.
    if value < 0.0 && value > -1e-12 {
        0.0
    } else {
        value
    }
}

/// Unified (q,s)-entropy of a classical distribution:
/// [(Σ p_i^q)^s − 1] / ((1−q)s), Shannon at q = 1, Rényi at s = 0.
pub fn unified_entropy_spectrum(p: &ProbabilityVector, params: &EntropyParams) -> f64 {
    entropy_of_weights(p.probabilities(), params)
}

/// Density operator: Hermitian, positive semidefinite, unit trace.
///
/// The eigenvalues (descending, clipped at zero) are computed during
/// validation and stored, so repeated entropy evaluations at different
/// parameters reuse one decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    mat: CMatrix,
    eigs: Vec<f64>,
}

impl DensityOperator {
    pub fn new(mat: CMatrix) -> Result<Self> {
        if !mat.is_square() || mat.nrows() == 0 {
            return Err(QseError::DimensionMismatch(format!(
                "density operator must be square and nonempty, got {}x{}",
                mat.nrows(),
                mat.ncols()
            )));
        }
        if !all_finite(&mat) {
            return Err(QseError::Validation("density operator has non-finite entries".into()));
        }
        let deviation = hermiticity_error(&mat);
        let tolerance = DENSITY_TOL * max_abs(&mat).max(1.0);
        if deviation > tolerance {
            return Err(QseError::NotHermitian { deviation, tolerance });
        }
        let sym = (&mat + mat.adjoint()).scale(0.5);
        let tr = sym.trace();
        if (tr - Complex64::new(1.0, 0.0)).norm() > DENSITY_TOL {
            return Err(QseError::Validation(format!("density operator trace is {tr}, expected 1")));
        }
        let raw = hermitian_eigenvalues(&sym)?;
        if let Some(&min) = raw.last() {
            if min < -DENSITY_EIG_TOL {
                return Err(QseError::Validation(format!(
                    "density operator has negative eigenvalue {min}"
                )));
            }
        }
        let eigs = clip_spectrum(raw);
        Ok(Self { mat: sym, eigs })
    }

    /// Rank-one projector |v⟩⟨v| from a (normalized) state vector.
    pub fn pure(state: &CVector) -> Result<Self> {
        let n = state.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(QseError::InvalidInput("pure state vector must be nonzero and finite".into()));
        }
        let v = state.scale(1.0 / n);
        Self::new(&v * v.adjoint())
    }

    pub fn maximally_mixed(d: usize) -> Self {
        let mat = CMatrix::identity(d, d).scale(1.0 / d as f64);
        Self { mat, eigs: vec![1.0 / d as f64; d] }
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    /// Eigenvalues in descending order, clipped at zero.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigs
    }

    pub fn purity(&self) -> f64 {
        self.eigs.iter().map(|l| l * l).sum()
    }
}

/// Unified (q,s)-entropy of a density operator, evaluated on its spectrum.
pub fn unified_entropy(rho: &DensityOperator, params: &EntropyParams) -> f64 {
    entropy_of_weights(rho.eigenvalues(), params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{cr, hermitian_eig, identity, kron, CMatrix};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn approx(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn random_density(rng: &mut ChaCha12Rng, d: usize) -> DensityOperator {
        let g = CMatrix::from_fn(d, d, |_, _| {
            Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
        });
        let m = &g * g.adjoint();
        let t = m.trace().re;
        DensityOperator::new(m.scale(1.0 / t)).unwrap()
    }

    fn random_prob(rng: &mut ChaCha12Rng, n: usize) -> ProbabilityVector {
        let raw: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
        let sum: f64 = raw.iter().sum();
        ProbabilityVector::new(&raw.iter().map(|x| x / sum).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn params_modes() {
        assert_eq!(EntropyParams::new(1.0, 2.0).unwrap().mode(), EntropyMode::VonNeumann);
        assert_eq!(EntropyParams::new(2.0, 0.0).unwrap().mode(), EntropyMode::Renyi);
        assert_eq!(EntropyParams::new(2.0, 1.0).unwrap().mode(), EntropyMode::Tsallis);
        assert_eq!(EntropyParams::new(2.0, -1.5).unwrap().mode(), EntropyMode::Generic);
        assert!(EntropyParams::new(0.0, 1.0).is_err());
        assert!(EntropyParams::new(-1.0, 1.0).is_err());
    }

    #[test]
    fn q_log_examples() {
        for q in [0.5, 1.0, 2.0, 3.0] {
            assert!(approx(q_log(1.0, q).unwrap(), 0.0, 1e-15));
        }
        assert!(approx(q_log(2.5, 1.0).unwrap(), 2.5f64.ln(), 1e-15));
        assert!(approx(q_log(2.0, 2.0).unwrap(), 0.5, 1e-15));
        assert!(q_log(0.0, 2.0).is_err());
        assert!(q_log(-1.0, 2.0).is_err());
    }

    #[test]
    fn q_log_continuous_at_one() {
        for x in [0.3, 1.7, 4.2] {
            let l = q_log(x, 1.0).unwrap();
            for eps in [1e-6, -1e-6] {
                let near = q_log(x, 1.0 + eps).unwrap();
                assert!(approx(l, near, 1e-4), "x={x} eps={eps}");
            }
        }
    }

    #[test]
    fn eta_q_examples() {
        for q in [0.5, 1.0, 2.0] {
            assert!(approx(eta_q(0.0, q).unwrap(), 0.0, 1e-15));
            assert!(approx(eta_q(1.0, q).unwrap(), 0.0, 1e-15));
        }
        assert!(approx(eta_q(0.5, 1.0).unwrap(), 0.5 * 2.0f64.ln(), 1e-15));
        assert!(approx(eta_q(0.5, 2.0).unwrap(), 0.25, 1e-15));
        assert!(eta_q(1.5, 2.0).is_err());
        assert!(eta_q(-0.1, 2.0).is_err());
    }

    #[test]
    fn binary_tsallis_examples() {
        assert!(approx(binary_tsallis(0.0, 2.0).unwrap(), 0.0, 1e-15));
        assert!(approx(binary_tsallis(0.5, 1.0).unwrap(), 2.0f64.ln(), 1e-15));
        assert!(approx(binary_tsallis(0.5, 2.0).unwrap(), 0.5, 1e-15));
    }

    #[test]
    fn bridge_examples() {
        assert!(approx(renyi_tsallis_bridge(0.0, 2.0).unwrap(), 0.0, 1e-15));
        assert!(approx(renyi_tsallis_bridge(0.5, 2.0).unwrap(), 2.0f64.ln(), 1e-15));
    }

    #[test]
    fn bridge_recovers_renyi_from_tsallis() {
        // T_q and R_q of the uniform distribution on d = 3 at q = 2.
        let p = ProbabilityVector::uniform(3).unwrap();
        let tsallis = unified_entropy_spectrum(&p, &EntropyParams::tsallis(2.0).unwrap());
        let renyi = unified_entropy_spectrum(&p, &EntropyParams::renyi(2.0).unwrap());
        let bridged = renyi_tsallis_bridge(tsallis, 2.0).unwrap();
        assert!(approx(bridged, renyi, 1e-14));
        assert!(approx(renyi, 3.0f64.ln(), 1e-14));
    }

    #[test]
    fn bridge_identity_random_spectra() {
        let mut rng = ChaCha12Rng::seed_from_u64(21);
        for _ in 0..30 {
            let n = rng.gen_range(2..=6);
            let p = random_prob(&mut rng, n);
            for q in [0.3, 0.7, 1.5, 2.0, 3.0] {
                let t = unified_entropy_spectrum(&p, &EntropyParams::tsallis(q).unwrap());
                let r = unified_entropy_spectrum(&p, &EntropyParams::renyi(q).unwrap());
                assert!(approx(renyi_tsallis_bridge(t, q).unwrap(), r, 1e-12));
            }
        }
    }

    #[test]
    fn spectrum_entropy_examples() {
        let degenerate = ProbabilityVector::new(&[1.0, 0.0, 0.0]).unwrap();
        for (q, s) in [(0.5, 1.0), (1.0, 0.0), (2.0, -1.0), (3.0, 2.0)] {
            let params = EntropyParams::new(q, s).unwrap();
            assert!(approx(unified_entropy_spectrum(&degenerate, &params), 0.0, 1e-15));
        }

        let uniform4 = ProbabilityVector::uniform(4).unwrap();
        let shannon = unified_entropy_spectrum(&uniform4, &EntropyParams::von_neumann());
        assert!(approx(shannon, 4.0f64.ln(), 1e-14));

        let uniform2 = ProbabilityVector::uniform(2).unwrap();
        let t2 = unified_entropy_spectrum(&uniform2, &EntropyParams::new(2.0, 1.0).unwrap());
        assert!(approx(t2, 0.5, 1e-14));
    }

    #[test]
    fn probability_vector_validation() {
        assert!(ProbabilityVector::new(&[]).is_err());
        assert!(ProbabilityVector::new(&[0.5, 0.4]).is_err());
        assert!(ProbabilityVector::new(&[1.1, -0.1]).is_err());
        // clipped rounding noise
        let p = ProbabilityVector::new(&[1.0, -1e-13]).unwrap();
        assert_eq!(p.probabilities()[1], 0.0);
    }

    #[test]
    fn density_validation() {
        // not unit trace
        assert!(DensityOperator::new(identity(2)).is_err());
        // not Hermitian
        let m = CMatrix::from_row_slice(2, 2, &[cr(0.5), cr(0.3), cr(0.0), cr(0.5)]);
        assert!(DensityOperator::new(m).is_err());
        // negative eigenvalue
        let m = CMatrix::from_row_slice(2, 2, &[cr(1.01), cr(0.0), cr(0.0), cr(-0.01)]);
        assert!(DensityOperator::new(m).is_err());
        // valid
        let rho = DensityOperator::maximally_mixed(3);
        assert_eq!(rho.dim(), 3);
        assert!(approx(rho.purity(), 1.0 / 3.0, 1e-15));
    }

    #[test]
    fn density_entropy_examples() {
        let mut rng = ChaCha12Rng::seed_from_u64(22);
        // pure states have zero entropy at every parameter pair
        let v = CVector::from_vec(vec![cr(0.6), Complex64::new(0.0, 0.8)]);
        let pure = DensityOperator::pure(&v).unwrap();
        for (q, s) in [(0.5, -1.0), (1.0, 0.0), (2.0, 1.0), (3.0, 0.5)] {
            let h = unified_entropy(&pure, &EntropyParams::new(q, s).unwrap());
            assert!(approx(h, 0.0, 1e-12), "q={q} s={s} h={h}");
        }

        let mixed2 = DensityOperator::maximally_mixed(2);
        assert!(approx(unified_entropy(&mixed2, &EntropyParams::von_neumann()), 2.0f64.ln(), 1e-14));

        // maximally mixed in dimension d: (d^{(1-q)s} - 1)/((1-q)s)
        for d in [2usize, 3, 4] {
            let rho = DensityOperator::maximally_mixed(d);
            for (q, s) in [(0.5, 1.0), (2.0, -1.0), (3.0, 0.5), (0.3, -2.0)] {
                let params = EntropyParams::new(q, s).unwrap();
                let expect = ((d as f64).powf((1.0 - q) * s) - 1.0) / ((1.0 - q) * s);
                assert!(approx(unified_entropy(&rho, &params), expect, 1e-12));
            }
        }
        let _ = &mut rng;
    }

    #[test]
    fn entropy_unitary_invariance() {
        let mut rng = ChaCha12Rng::seed_from_u64(23);
        for _ in 0..5 {
            let rho = random_density(&mut rng, 4);
            // unitary from the eigenbasis of an unrelated random Hermitian
            let g = CMatrix::from_fn(4, 4, |_, _| {
                Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
            });
            let u = hermitian_eig(&(&g + g.adjoint())).unwrap().eigenvectors;
            let rotated = DensityOperator::new(&u * rho.matrix() * u.adjoint()).unwrap();
            for (q, s) in [(0.5, 1.0), (1.0, 0.0), (2.0, 0.0), (2.0, -2.0)] {
                let params = EntropyParams::new(q, s).unwrap();
                assert!(approx(
                    unified_entropy(&rho, &params),
                    unified_entropy(&rotated, &params),
                    1e-10
                ));
            }
        }
    }

    #[test]
    fn entropy_nondecreasing_under_pinching() {
        let mut rng = ChaCha12Rng::seed_from_u64(24);
        let grid_q = [0.3, 0.5, 0.7, 1.0, 1.5, 2.0, 3.0];
        let grid_s = [-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0];
        for _ in 0..5 {
            let d = rng.gen_range(2..=4);
            let rho = random_density(&mut rng, d);
            // random orthonormal basis, coarse-grained into two projectors
            let g = CMatrix::from_fn(d, d, |_, _| {
                Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
            });
            let basis = hermitian_eig(&(&g + g.adjoint())).unwrap().eigenvectors;
            let cut = rng.gen_range(1..d.max(2));
            let mut p0 = CMatrix::zeros(d, d);
            let mut p1 = CMatrix::zeros(d, d);
            for j in 0..d {
                let col = CMatrix::from_columns(&[basis.column(j).into_owned()]);
                let proj = &col * col.adjoint();
                if j < cut {
                    p0 += proj;
                } else {
                    p1 += proj;
                }
            }
            let pinched =
                DensityOperator::new(&p0 * rho.matrix() * &p0 + &p1 * rho.matrix() * &p1).unwrap();
            for &q in &grid_q {
                for &s in &grid_s {
                    let params = EntropyParams::new(q, s).unwrap();
                    let before = unified_entropy(&rho, &params);
                    let after = unified_entropy(&pinched, &params);
                    assert!(after >= before - 1e-10, "q={q} s={s}: {before} > {after}");
                }
            }
        }
    }

    #[test]
    fn entropy_maximized_at_maximally_mixed() {
        let mut rng = ChaCha12Rng::seed_from_u64(25);
        let grid_q = [0.3, 0.5, 0.7, 1.0, 1.5, 2.0, 3.0];
        let grid_s = [-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0];
        for d in [2usize, 3] {
            let mixed = DensityOperator::maximally_mixed(d);
            for _ in 0..10 {
                let rho = random_density(&mut rng, d);
                for &q in &grid_q {
                    for &s in &grid_s {
                        let params = EntropyParams::new(q, s).unwrap();
                        assert!(
                            unified_entropy(&rho, &params)
                                <= unified_entropy(&mixed, &params) + 1e-10
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn entropy_nonnegative_and_limit_continuous() {
        let mut rng = ChaCha12Rng::seed_from_u64(26);
        for _ in 0..20 {
            let n = rng.gen_range(2..=6);
            let p = random_prob(&mut rng, n);
            for s in [-2.0, -0.5, 0.5, 1.0, 2.0] {
                let exact = unified_entropy_spectrum(&p, &EntropyParams::von_neumann());
                for eps in [1e-6, -1e-6] {
                    let near =
                        unified_entropy_spectrum(&p, &EntropyParams::new(1.0 + eps, s).unwrap());
                    assert!(approx(exact, near, 1e-4), "s={s} eps={eps}");
                }
            }
            for q in [0.3, 0.7, 1.5, 2.0, 3.0] {
                let exact = unified_entropy_spectrum(&p, &EntropyParams::renyi(q).unwrap());
                for eps in [1e-6, -1e-6] {
                    let near = unified_entropy_spectrum(&p, &EntropyParams::new(q, eps).unwrap());
                    assert!(approx(exact, near, 1e-4), "q={q} eps={eps}");
                }
            }
            for (q, s) in [(0.3, -2.0), (0.7, 0.5), (1.0, 0.0), (2.0, 2.0), (3.0, -1.0)] {
                assert!(unified_entropy_spectrum(&p, &EntropyParams::new(q, s).unwrap()) >= 0.0);
            }
        }
    }

    #[test]
    fn product_spectrum_entropy_combination() {
        // On product states the family combines as H(ρ⊗ω) = H(ρ) + H(ω) + (1−q)s·H(ρ)H(ω).
        let mut rng = ChaCha12Rng::seed_from_u64(27);
        let rho = random_density(&mut rng, 2);
        let omega = random_density(&mut rng, 3);
        let joint = DensityOperator::new(kron(rho.matrix(), omega.matrix())).unwrap();
        for (q, s) in [(0.5, 1.0), (2.0, 1.0), (2.0, -1.0), (3.0, 0.5), (2.0, 0.0), (1.0, 0.0)] {
            let params = EntropyParams::new(q, s).unwrap();
            let a = unified_entropy(&rho, &params);
            let b = unified_entropy(&omega, &params);
            let ab = unified_entropy(&joint, &params);
            assert!(approx(ab, a + b + (1.0 - q) * s * a * b, 1e-10), "q={q} s={s}");
        }
    }
}
