//! Map (q,s)-entropies, their exact additivity identity and sub/super-
//! additivity classification, and Fannes-type continuity bounds on the map
//! entropy difference in terms of trace or Frobenius distance between the
//! rescaled dynamical matrices.
//!
//! The bound formulas are stated for states on a `dim`-dimensional space.
//! Because σ(Φ) lives on the doubled space, the map-level evaluators
//! substitute dim = d² for channels on d-dimensional states; the
//! `*_for_states` forms take the dimension explicitly so either convention
//! can be exercised.

use serde::Serialize;

use crate::channel::{ChoiMatrix, KrausSet};
use crate::entropy::{binary_tsallis, eta_q, q_log, unified_entropy, EntropyParams};
use crate::error::{QseError, Result};
use crate::linalg::{matrix_unit, q_mean, schatten_norm};

/// Norm used for the distance carried by a [`BoundResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NormKind {
    Trace,
    Frobenius,
}

impl std::fmt::Display for NormKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NormKind::Trace => write!(f, "trace"),
            NormKind::Frobenius => write!(f, "frobenius"),
        }
    }
}

/// Evaluated continuity bound. `valid` is false whenever the supplied
/// distance exceeds the bound's stated range; the numeric value is then
/// reported for inspection only (NaN when the formula leaves its domain).
#[derive(Debug, Clone, Serialize)]
pub struct BoundResult {
    pub bound_value: f64,
    pub valid: bool,
    pub validity_condition: String,
    pub distance_used: f64,
    pub norm_kind: NormKind,
}

/// Unified (q,s)-entropy of the rescaled dynamical matrix σ(Φ); zero exactly
/// when the channel is a unitary evolution (rank-one σ).
pub fn map_entropy(choi: &ChoiMatrix, params: &EntropyParams) -> f64 {
    unified_entropy(choi.sigma(), params)
}

/// Exact combination rule for the map entropy of a product channel:
/// M(Φ₁⊗Φ₂) = M₁ + M₂ + (1−q)s·M₁·M₂.
pub fn additivity_combination(m1: f64, m2: f64, params: &EntropyParams) -> f64 {
    // at q = 1 the family is the von Neumann entropy and the cross term vanishes
    let cross = if params.q() == 1.0 { 0.0 } else { (1.0 - params.q()) * params.s() };
    m1 + m2 + cross * m1 * m2
}

/// Residual M(Φ₁⊗Φ₂) − [M₁ + M₂ + (1−q)s·M₁M₂]; an exact identity, so the
/// residual is rounding noise (|residual| < 1e-9 at desk scale).
pub fn additivity_residual(
    choi1: &ChoiMatrix,
    choi2: &ChoiMatrix,
    params: &EntropyParams,
) -> Result<f64> {
    let joint = choi1.tensor(choi2)?;
    let m1 = map_entropy(choi1, params);
    let m2 = map_entropy(choi2, params);
    Ok(map_entropy(&joint, params) - additivity_combination(m1, m2, params))
}

/// How the map entropy of a product channel relates to the sum of the parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AdditivityClass {
    /// Exactly additive: a unitary factor (rank-one σ) or the Rényi line s = 0.
    Additive,
    /// M(Φ₁⊗Φ₂) < M₁ + M₂: both ranks >= 2 and (0<q<1, s<0) ∪ (q>1, s>0).
    StrictlySubadditive,
    /// M(Φ₁⊗Φ₂) > M₁ + M₂: both ranks >= 2 and (0<q<1, s>0) ∪ (q>1, s<0).
    StrictlySuperadditive,
    /// Only the combination identity applies (q = 1 with non-unitary factors).
    IdentityOnly,
}

impl std::fmt::Display for AdditivityClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            AdditivityClass::Additive => "additive",
            AdditivityClass::StrictlySubadditive => "strictly_subadditive",
            AdditivityClass::StrictlySuperadditive => "strictly_superadditive",
            AdditivityClass::IdentityOnly => "identity_only",
        };
        write!(f, "{s}")
    }
}

/// Classify the additivity behaviour of a channel pair at (q, s).
pub fn classify_additivity(
    choi1: &ChoiMatrix,
    choi2: &ChoiMatrix,
    params: &EntropyParams,
) -> AdditivityClass {
    let q = params.q();
    let s = params.s();
    if choi1.rank() == 1 || choi2.rank() == 1 || s == 0.0 {
        AdditivityClass::Additive
    } else if (q < 1.0 && s < 0.0) || (q > 1.0 && s > 0.0) {
        AdditivityClass::StrictlySubadditive
    } else if (q < 1.0 && s > 0.0) || (q > 1.0 && s < 0.0) {
        AdditivityClass::StrictlySuperadditive
    } else {
        AdditivityClass::IdentityOnly
    }
}

/// Half trace distance t = (1/2)‖σ(Φ) − σ(Ψ)‖₁ between two channels.
pub fn choi_trace_distance(choi1: &ChoiMatrix, choi2: &ChoiMatrix) -> Result<f64> {
    ensure_same_d(choi1, choi2)?;
    Ok(0.5 * schatten_norm(&(choi1.sigma().matrix() - choi2.sigma().matrix()), 1.0)?)
}

/// Half Frobenius distance τ = (1/2)‖σ(Φ) − σ(Ψ)‖₂ between two channels.
pub fn choi_frobenius_distance(choi1: &ChoiMatrix, choi2: &ChoiMatrix) -> Result<f64> {
    ensure_same_d(choi1, choi2)?;
    Ok(0.5 * schatten_norm(&(choi1.sigma().matrix() - choi2.sigma().matrix()), 2.0)?)
}

fn ensure_same_d(choi1: &ChoiMatrix, choi2: &ChoiMatrix) -> Result<()> {
    if choi1.d() != choi2.d() {
        return Err(QseError::DimensionMismatch(format!(
            "channels act on different dimensions: {} vs {}",
            choi1.d(),
            choi2.d()
        )));
    }
    Ok(())
}

/// Parameter range {0 < q < 1, s ∈ (−∞, −1] ∪ [0, 1]}.
fn in_low_range(q: f64, s: f64) -> bool {
    q > 0.0 && q < 1.0 && (s <= -1.0 || (0.0..=1.0).contains(&s))
}

/// Parameter range {q > 1, s ∈ [−1, 0] ∪ [1, ∞)}.
fn in_high_range(q: f64, s: f64) -> bool {
    q > 1.0 && ((-1.0..=0.0).contains(&s) || s >= 1.0)
}

/// κ_s = dim^{2(q−1)} for s ∈ [−1, 0] (the branch taken at s = 0 exactly)
/// and 1 for s ∈ [1, ∞); only meaningful inside the q > 1 range.
fn kappa(q: f64, s: f64, dim: f64) -> f64 {
    if s <= 0.0 {
        dim.powf(2.0 * (q - 1.0))
    } else {
        1.0
    }
}

fn check_params_in_range(params: &EntropyParams) -> Result<()> {
    let q = params.q();
    let s = params.s();
    if in_low_range(q, s) || in_high_range(q, s) {
        Ok(())
    } else {
        Err(QseError::NotApplicable(format!(
            "no continuity bound is proved at q={q}, s={s}"
        )))
    }
}

fn eta_or_nan(x: f64, q: f64) -> f64 {
    eta_q(x, q).unwrap_or(f64::NAN)
}

fn binary_tsallis_or_nan(t: f64, q: f64) -> f64 {
    binary_tsallis(t, q).unwrap_or(f64::NAN)
}

/// Trace-distance continuity bound for unified entropies of states on a
/// `dim`-dimensional space, at half trace distance `t`.
pub fn fannes_trace_for_states(params: &EntropyParams, dim: usize, t: f64) -> Result<BoundResult> {
    check_params_in_range(params)?;
    if dim < 2 {
        return Err(QseError::InvalidParameter("state dimension must be >= 2".into()));
    }
    if !(0.0..=1.0 + 1e-12).contains(&t) {
        return Err(QseError::InvalidParameter(format!(
            "half trace distance must lie in [0, 1], got {t}"
        )));
    }
    let q = params.q();
    let s = params.s();
    let df = dim as f64;
    let (bound_value, valid, validity_condition) = if in_low_range(q, s) {
        let threshold = q.powf(1.0 / (1.0 - q));
        let valid = 2.0 * t <= threshold + 1e-15;
        let value = (2.0 * t).powf(q) * q_log(df, q)? + eta_or_nan(2.0 * t, q);
        (value, valid, format!("2t <= q^(1/(1-q)) = {threshold:.6e}"))
    } else {
        let threshold = (df - 1.0) / df;
        let valid = t <= threshold + 1e-15;
        let value = kappa(q, s, df)
            * (t.powf(q) * q_log(df - 1.0, q)? + binary_tsallis_or_nan(t, q));
        (value, valid, format!("t <= (dim-1)/dim = {threshold:.6e}"))
    };
    Ok(BoundResult { bound_value, valid, validity_condition, distance_used: t, norm_kind: NormKind::Trace })
}

/// Frobenius-distance continuity bound (small-distance form) for states on a
/// `dim`-dimensional space, at half Frobenius distance `tau`.
pub fn fannes_frobenius_small_for_states(
    params: &EntropyParams,
    dim: usize,
    tau: f64,
) -> Result<BoundResult> {
    check_params_in_range(params)?;
    if dim < 2 {
        return Err(QseError::InvalidParameter("state dimension must be >= 2".into()));
    }
    check_tau(tau)?;
    let q = params.q();
    let s = params.s();
    let df = dim as f64;
    let root = df.sqrt();
    let (bound_value, valid, validity_condition) = if in_low_range(q, s) {
        let threshold = q.powf(1.0 / (1.0 - q)) / root;
        let valid = 2.0 * tau <= threshold + 1e-15;
        let value =
            df.powf(q / 2.0) * (2.0 * tau).powf(q) * q_log(df, q)? + eta_or_nan(root * 2.0 * tau, q);
        (value, valid, format!("2tau <= q^(1/(1-q))/sqrt(dim) = {threshold:.6e}"))
    } else {
        let threshold = (df - 1.0) / (df * root);
        let valid = tau <= threshold + 1e-15;
        let value = kappa(q, s, df)
            * (df.powf(q / 2.0) * tau.powf(q) * q_log(df - 1.0, q)?
                + binary_tsallis_or_nan(root * tau, q));
        (value, valid, format!("tau <= (dim-1)*dim^(-3/2) = {threshold:.6e}"))
    };
    Ok(BoundResult { bound_value, valid, validity_condition, distance_used: tau, norm_kind: NormKind::Frobenius })
}

/// Frobenius-distance continuity bound valid for every τ up to √2/2 (the
/// largest Frobenius distance between unit-trace states); somewhat weaker
/// than the small-distance form but with no dimension-dependent range.
pub fn fannes_frobenius_global_for_states(
    params: &EntropyParams,
    dim: usize,
    tau: f64,
) -> Result<BoundResult> {
    check_params_in_range(params)?;
    if dim < 2 {
        return Err(QseError::InvalidParameter("state dimension must be >= 2".into()));
    }
    check_tau(tau)?;
    let q = params.q();
    let s = params.s();
    let df = dim as f64;
    let root = df.sqrt();
    let bound_value = if in_low_range(q, s) {
        (df.powf(1.0 - q / 2.0) * (df - 1.0).powf(1.0 - q) * tau.powf(q) - q * root * tau)
            / (1.0 - q)
    } else {
        kappa(q, s, df) * (q * root * tau - (df - 1.0).powf(1.0 - q) * df.powf(q / 2.0) * tau.powf(q))
            / (q - 1.0)
    };
    Ok(BoundResult {
        bound_value,
        valid: true,
        validity_condition: "all tau in [0, sqrt(2)/2]".into(),
        distance_used: tau,
        norm_kind: NormKind::Frobenius,
    })
}

fn check_tau(tau: f64) -> Result<()> {
    let max = std::f64::consts::SQRT_2 / 2.0;
    if !(0.0..=max + 1e-12).contains(&tau) {
        return Err(QseError::InvalidParameter(format!(
            "half Frobenius distance must lie in [0, {max:.6}], got {tau}"
        )));
    }
    Ok(())
}

/// Trace-distance bound on |M(Φ) − M(Ψ)| for channels on d-dimensional
/// states; substitutes dim = d² since σ matrices live on the doubled space.
pub fn fannes_trace_bound(params: &EntropyParams, d: usize, t: f64) -> Result<BoundResult> {
    fannes_trace_for_states(params, d * d, t)
}

/// Small-distance Frobenius bound on |M(Φ) − M(Ψ)| with dim = d².
pub fn fannes_frobenius_small_bound(
    params: &EntropyParams,
    d: usize,
    tau: f64,
) -> Result<BoundResult> {
    fannes_frobenius_small_for_states(params, d * d, tau)
}

/// All-distance Frobenius bound on |M(Φ) − M(Ψ)| with dim = d².
pub fn fannes_frobenius_global_bound(
    params: &EntropyParams,
    d: usize,
    tau: f64,
) -> Result<BoundResult> {
    fannes_frobenius_global_for_states(params, d * d, tau)
}

/// ‖σ(Φ) − σ(Ψ)‖₂ computed as the 2-mean of ‖(Φ−Ψ)(E_{μν})‖₂ over the d²
/// matrix units, without forming the Choi matrices.
pub fn frobenius_distance_as_2mean(kraus1: &KrausSet, kraus2: &KrausSet) -> Result<f64> {
    let d = kraus1.dim();
    if d != kraus2.dim() {
        return Err(QseError::DimensionMismatch(format!(
            "channels act on different dimensions: {} vs {}",
            d,
            kraus2.dim()
        )));
    }
    let mut norms = Vec::with_capacity(d * d);
    for mu in 0..d {
        for nu in 0..d {
            let e = matrix_unit(d, mu, nu);
            let diff = kraus1.apply_matrix(&e)? - kraus2.apply_matrix(&e)?;
            norms.push(schatten_norm(&diff, 2.0)?);
        }
    }
    q_mean(&norms, 2.0)
}
