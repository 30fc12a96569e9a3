//! Effect-probability analysis of channel unravelings.
//!
//! Fixing an input state ρ, a Kraus set {A_i} induces the Gram matrix
//! Π_ij = tr(A_i†A_j ρ) of its effects; the diagonal entries are the effect
//! probabilities. All unravelings of one channel give unitarily similar Π,
//! so diagonalizing Π produces the *extremal* unraveling whose effect
//! distribution minimizes the unified (q,s)-entropy over remixings (for
//! every q > 0 with s ≠ 0, and in the Rényi case s = 0 only for q < 1).

use crate::channel::{haar_unitary_with, rng_from, KrausSet, UnitaryMatrix};
use crate::entropy::{
    entropy_of_weights, unified_entropy, DensityOperator, EntropyParams, ProbabilityVector,
};
use crate::error::{QseError, Result};
use crate::linalg::{hermitian_eig, hermiticity_error, hs_inner, CMatrix};
use crate::report::{assertion_tolerance, CheckReport};

/// Tolerance on the Hermiticity / trace / positivity of an effect Gram matrix.
pub const GRAM_TOL: f64 = 1e-10;
/// Tolerance on the unit-trace condition of Theorem-2-type applicability.
pub const TRACE_CONDITION_TOL: f64 = 1e-8;

/// The Hermitian PSD matrix Π_ij = tr(A_i†A_j ρ) of pairwise effect overlaps.
#[derive(Debug, Clone)]
pub struct EffectGram {
    pi: CMatrix,
    rho: DensityOperator,
    kraus_label: String,
}

impl EffectGram {
    pub fn matrix(&self) -> &CMatrix {
        &self.pi
    }

    pub fn len(&self) -> usize {
        self.pi.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.pi.nrows() == 0
    }

    pub fn rho(&self) -> &DensityOperator {
        &self.rho
    }

    pub fn kraus_label(&self) -> &str {
        &self.kraus_label
    }

    /// Effect probabilities p_i = Π_ii.
    pub fn probabilities(&self) -> Result<ProbabilityVector> {
        let diag: Vec<f64> = (0..self.len()).map(|i| self.pi[(i, i)].re.max(0.0)).collect();
        ProbabilityVector::new(&diag)
    }

    /// Eigenvalues of Π, descending, clipped at zero; these are the effect
    /// probabilities of the extremal unraveling.
    pub fn eigen_probabilities(&self) -> Result<(ProbabilityVector, UnitaryMatrix)> {
        let spec = hermitian_eig(&self.pi)?;
        if let Some(&min) = spec.eigenvalues.last() {
            if min < -GRAM_TOL {
                return Err(QseError::Validation(format!(
                    "effect Gram matrix has negative eigenvalue {min}"
                )));
            }
        }
        let clipped = crate::entropy::clip_spectrum(spec.eigenvalues.clone());
        Ok((ProbabilityVector::new(&clipped)?, UnitaryMatrix::new(spec.eigenvectors)?))
    }
}

/// Π(A|ρ): the effect Gram matrix of an unraveling at the given input state.
pub fn effect_gram(kraus: &KrausSet, rho: &DensityOperator) -> Result<EffectGram> {
    if kraus.dim() != rho.dim() {
        return Err(QseError::DimensionMismatch(format!(
            "channel dimension {} vs state dimension {}",
            kraus.dim(),
            rho.dim()
        )));
    }
    let k = kraus.len();
    // Π_ij = tr(A_i† A_j ρ) = ⟨A_i, A_j ρ⟩_hs; build the products A_j ρ once.
    let products: Vec<CMatrix> = kraus.operators().iter().map(|a| a * rho.matrix()).collect();
    let mut pi = CMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            pi[(i, j)] = hs_inner(&kraus.operators()[i], &products[j])?;
        }
    }
    let dev = hermiticity_error(&pi);
    if dev > GRAM_TOL {
        return Err(QseError::NotHermitian { deviation: dev, tolerance: GRAM_TOL });
    }
    let trace = pi.trace();
    if (trace.re - 1.0).abs() > GRAM_TOL || trace.im.abs() > GRAM_TOL {
        return Err(QseError::Validation(format!(
            "effect probabilities sum to {trace}, expected 1"
        )));
    }
    Ok(EffectGram { pi, rho: rho.clone(), kraus_label: kraus.label().to_string() })
}

/// Unified (q,s)-entropy of the effect probabilities of an unraveling.
pub fn unraveling_entropy(
    kraus: &KrausSet,
    rho: &DensityOperator,
    params: &EntropyParams,
) -> Result<f64> {
    let gram = effect_gram(kraus, rho)?;
    Ok(entropy_of_weights(gram.probabilities()?.probabilities(), params))
}

/// The unraveling whose effect Gram matrix is diagonal, together with its
/// effect distribution (the eigenvalues of Π) and the diagonalizer used.
#[derive(Debug, Clone)]
pub struct ExtremalUnraveling {
    kraus: KrausSet,
    lambdas: ProbabilityVector,
    diagonalizer: UnitaryMatrix,
}

impl ExtremalUnraveling {
    pub fn kraus(&self) -> &KrausSet {
        &self.kraus
    }

    /// Effect probabilities of the extremal unraveling, descending.
    pub fn lambdas(&self) -> &ProbabilityVector {
        &self.lambdas
    }

    pub fn diagonalizer(&self) -> &UnitaryMatrix {
        &self.diagonalizer
    }

    /// H_q^{(s)} of the extremal effect distribution.
    pub fn entropy(&self, params: &EntropyParams) -> f64 {
        entropy_of_weights(self.lambdas.probabilities(), params)
    }
}

/// Build the extremal unraveling A_i^{ex} = Σ_j A_j v_{ji} from the
/// diagonalizer V of Π(A|ρ).
pub fn extremal_unraveling(kraus: &KrausSet, rho: &DensityOperator) -> Result<ExtremalUnraveling> {
    let gram = effect_gram(kraus, rho)?;
    let (lambdas, diagonalizer) = gram.eigen_probabilities()?;
    let transformed = kraus.transform(&diagonalizer)?;
    Ok(ExtremalUnraveling { kraus: transformed, lambdas, diagonalizer })
}

/// Whether the extremality statement is asserted at (q, s): everywhere
/// except the Rényi line s = 0 with q > 1.
fn extremality_asserted(params: &EntropyParams) -> bool {
    !(params.s() == 0.0 && params.q() > 1.0)
}

/// Randomized minimality check: the extremal unraveling entropy must not
/// exceed the entropy of the original set nor of `trials` random remixings.
///
/// Outside the asserted (q,s) region (Rényi with q > 1) the check runs in
/// exploratory mode: violations are recorded but do not fail the report.
pub fn check_extremal_minimality(
    kraus: &KrausSet,
    rho: &DensityOperator,
    params: &EntropyParams,
    trials: usize,
    seed: u64,
) -> Result<CheckReport> {
    let ex = extremal_unraveling(kraus, rho)?;
    let h_ex = ex.entropy(params);
    let mut max_violation = h_ex - unraveling_entropy(kraus, rho, params)?;
    let mut rng = rng_from(seed);
    for _ in 0..trials {
        let u = haar_unitary_with(&mut rng, kraus.len());
        let remixed = kraus.transform(&u)?;
        let h = unraveling_entropy(&remixed, rho, params)?;
        max_violation = max_violation.max(h_ex - h);
    }
    let mut report = CheckReport::new("theorem1", params);
    report.trials = trials;
    report.max_violation = max_violation;
    report.applicable = extremality_asserted(params);
    report.pass = !report.applicable || max_violation <= assertion_tolerance();
    if !report.applicable {
        report.note = Some("Rényi order q > 1: exploratory scan, not asserted".into());
    }
    Ok(report)
}

/// Whether every extremal Kraus operator has unit Hilbert-Schmidt norm,
/// tr(A_i^{ex}† A_i^{ex}) = 1; the input-entropy lower bound needs this.
pub fn trace_condition_holds(ex: &ExtremalUnraveling) -> bool {
    ex.kraus()
        .operators()
        .iter()
        .all(|a| (hs_inner(a, a).map(|z| z.re).unwrap_or(f64::NAN) - 1.0).abs() <= TRACE_CONDITION_TOL)
}

/// Input-entropy lower bound: when the unit-trace condition holds, the
/// extremal unraveling entropy dominates the entropy of the input state,
/// H(ρ) <= H(A_ρ^{ex}|ρ), for q > 0 with s ≠ 0 and for the Rényi case with
/// q < 1. Reports "not applicable" when the condition fails.
pub fn check_input_entropy_bound(
    kraus: &KrausSet,
    rho: &DensityOperator,
    params: &EntropyParams,
) -> Result<CheckReport> {
    let ex = extremal_unraveling(kraus, rho)?;
    let condition = trace_condition_holds(&ex);
    let h_rho = unified_entropy(rho, params);
    let h_ex = ex.entropy(params);

    let mut report = CheckReport::new("theorem2", params);
    report.trials = 1;
    report.max_violation = h_rho - h_ex;
    report.applicable = condition && extremality_asserted(params);
    report.pass = !report.applicable || report.max_violation <= assertion_tolerance();
    if !condition {
        report.note = Some("unit-trace condition fails for this unraveling".into());
    } else if !extremality_asserted(params) {
        report.note = Some("Rényi order q > 1: bound not asserted".into());
    }
    Ok(report)
}
