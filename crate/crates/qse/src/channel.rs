//! Quantum channel representations: Kraus sets (unravelings), Choi matrices,
//! conversions between them, tensor products, validation, and a factory of
//! standard and random channels.
//!
//! Conventions. The composite space carrying a Choi matrix is ordered
//! (output ⊗ reference) with row-major composite index a·d + b. Operator
//! vectorization is matched to that ordering: vec(A)[i·d + j] = A[i, j], so
//! that σ(Φ) = (1/d) Σ_j vec(A_j) vec(A_j)† for any Kraus set {A_j}, and
//! Kraus↔Choi conversions are mutually inverse.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::entropy::DensityOperator;
use crate::error::{QseError, Result};
use crate::linalg::{
    all_finite, c, cr, hermitian_eig, hermiticity_error, identity, kron, max_abs,
    partial_trace, CMatrix, CVector, Subsystem,
};

/// Tolerance on the Kraus completeness relation Σ A†A = I.
pub const COMPLETENESS_TOL: f64 = 1e-10;
/// Tolerance on U†U = I for validated unitaries.
pub const UNITARITY_TOL: f64 = 1e-10;
/// Tolerance on trace preservation of a Choi matrix.
pub const TP_TOL: f64 = 1e-8;
/// Eigenvalues of σ(Φ) above this absolute cutoff count towards the Choi rank.
pub const CHOI_RANK_CUTOFF: f64 = 1e-10;

/// Row-major vectorization: vec(A)[i·d + j] = A[i, j].
pub fn vec_operator(a: &CMatrix) -> CVector {
    let (r, cls) = a.shape();
    CVector::from_fn(r * cls, |k, _| a[(k / cls, k % cls)])
}

/// Inverse of [`vec_operator`] for square operators of dimension d.
pub fn unvec_operator(v: &CVector, d: usize) -> Result<CMatrix> {
    if v.len() != d * d {
        return Err(QseError::DimensionMismatch(format!(
            "unvec: vector length {} is not {d}x{d}",
            v.len()
        )));
    }
    Ok(CMatrix::from_fn(d, d, |i, j| v[i * d + j]))
}

/// Validated unitary matrix (U†U = I within `UNITARITY_TOL`).
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix(CMatrix);

impl UnitaryMatrix {
    pub fn new(mat: CMatrix) -> Result<Self> {
        if !mat.is_square() || mat.nrows() == 0 {
            return Err(QseError::DimensionMismatch("unitary must be square and nonempty".into()));
        }
        if !all_finite(&mat) {
            return Err(QseError::Validation("unitary has non-finite entries".into()));
        }
        let dev = max_abs(&(mat.adjoint() * &mat - identity(mat.nrows())));
        if dev > UNITARITY_TOL {
            return Err(QseError::Validation(format!(
                "matrix is not unitary: deviation {dev:.3e}"
            )));
        }
        Ok(Self(mat))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }
}

/// An ordered Kraus set {A_j} realizing a deterministic channel
/// Φ(ρ) = Σ_j A_j ρ A_j† with Σ_j A_j† A_j = I.
///
/// A concrete Kraus set is one *unraveling* of its channel; all unravelings
/// of the same channel are related by unitary remixing ([`KrausSet::transform`]).
#[derive(Debug, Clone, PartialEq)]
pub struct KrausSet {
    ops: Vec<CMatrix>,
    label: String,
}

impl KrausSet {
    pub fn new(ops: Vec<CMatrix>, label: impl Into<String>) -> Result<Self> {
        if ops.is_empty() {
            return Err(QseError::InvalidInput("Kraus set must be nonempty".into()));
        }
        let shape = ops[0].shape();
        if shape.0 != shape.1 || shape.0 == 0 {
            return Err(QseError::DimensionMismatch(format!(
                "Kraus operators must be square and nonempty, got {}x{}",
                shape.0, shape.1
            )));
        }
        for (i, op) in ops.iter().enumerate() {
            if op.shape() != shape {
                return Err(QseError::DimensionMismatch(format!(
                    "Kraus operator {i} has shape {:?}, expected {shape:?}",
                    op.shape()
                )));
            }
            if !all_finite(op) {
                return Err(QseError::Validation(format!("Kraus operator {i} has non-finite entries")));
            }
        }
        let d = shape.0;
        let mut completeness = CMatrix::zeros(d, d);
        for op in &ops {
            completeness += op.adjoint() * op;
        }
        let dev = max_abs(&(completeness - identity(d)));
        if dev > COMPLETENESS_TOL {
            return Err(QseError::Validation(format!(
                "Kraus completeness violated: deviation {dev:.3e}"
            )));
        }
        Ok(Self { ops, label: label.into() })
    }

    pub fn dim(&self) -> usize {
        self.ops[0].nrows()
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn operators(&self) -> &[CMatrix] {
        &self.ops
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Σ_j A_j x A_j† for an arbitrary operator x.
    pub fn apply_matrix(&self, x: &CMatrix) -> Result<CMatrix> {
        let d = self.dim();
        if x.shape() != (d, d) {
            return Err(QseError::DimensionMismatch(format!(
                "channel acts on {d}x{d}, input is {}x{}",
                x.nrows(),
                x.ncols()
            )));
        }
        let mut out = CMatrix::zeros(d, d);
        for a in &self.ops {
            out += a * x * a.adjoint();
        }
        Ok(out)
    }

    /// Channel action on a density operator; output is validated.
    pub fn apply(&self, rho: &DensityOperator) -> Result<DensityOperator> {
        DensityOperator::new(self.apply_matrix(rho.matrix())?)
    }

    /// σ(Φ) = (Φ ⊗ id)(|φ+⟩⟨φ+|), assembled as (1/d) Σ_j vec(A_j) vec(A_j)†.
    pub fn to_choi(&self) -> Result<ChoiMatrix> {
        let d = self.dim();
        let mut sigma = CMatrix::zeros(d * d, d * d);
        for a in &self.ops {
            let v = vec_operator(a);
            sigma += &v * v.adjoint();
        }
        ChoiMatrix::new(DensityOperator::new(sigma.scale(1.0 / d as f64))?, d)
    }

    /// Remixed unraveling B_i = Σ_j A_j u_{ji} of the same channel.
    ///
    /// `u` must be k'×k' with k' >= len(); the set is padded with zero
    /// operators when k' exceeds the current length.
    pub fn transform(&self, u: &UnitaryMatrix) -> Result<KrausSet> {
        let k = self.len();
        let ku = u.dim();
        if ku < k {
            return Err(QseError::DimensionMismatch(format!(
                "mixing unitary is {ku}x{ku} but the set has {k} operators"
            )));
        }
        let d = self.dim();
        let um = u.matrix();
        let mut out = Vec::with_capacity(ku);
        for i in 0..ku {
            let mut b = CMatrix::zeros(d, d);
            for (j, a) in self.ops.iter().enumerate() {
                b += a.scale_complex(um[(j, i)]);
            }
            out.push(b);
        }
        KrausSet::new(out, self.label.clone())
    }

    /// Kraus set {A_i ⊗ B_j} of the product channel Φ ⊗ Ψ.
    pub fn tensor(&self, other: &KrausSet) -> Result<KrausSet> {
        let mut ops = Vec::with_capacity(self.len() * other.len());
        for a in &self.ops {
            for b in &other.ops {
                ops.push(kron(a, b));
            }
        }
        KrausSet::new(ops, format!("{} ⊗ {}", self.label, other.label))
    }
}

trait ScaleComplex {
    fn scale_complex(&self, z: Complex64) -> CMatrix;
}

impl ScaleComplex for CMatrix {
    fn scale_complex(&self, z: Complex64) -> CMatrix {
        self.map(|w| w * z)
    }
}

/// CPTP validation report for a candidate Choi matrix.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CptpReport {
    /// Smallest eigenvalue of σ (complete positivity requires >= -tol).
    pub min_eigenvalue: f64,
    /// ‖tr_out(D) − I‖_max (trace preservation).
    pub tp_deviation: f64,
    /// |tr σ − 1|.
    pub trace_deviation: f64,
    pub cp_pass: bool,
    pub tp_pass: bool,
    pub pass: bool,
}

/// Check a raw σ candidate for the CPTP properties at tolerance `TP_TOL`.
pub fn validate_cptp(sigma: &CMatrix, d: usize) -> Result<CptpReport> {
    if sigma.nrows() != d * d || sigma.ncols() != d * d {
        return Err(QseError::DimensionMismatch(format!(
            "sigma is {}x{}, expected {}x{}",
            sigma.nrows(),
            sigma.ncols(),
            d * d,
            d * d
        )));
    }
    let dev = hermiticity_error(sigma);
    if dev > 1e-8 {
        return Err(QseError::NotHermitian { deviation: dev, tolerance: 1e-8 });
    }
    let sym = (sigma + sigma.adjoint()).scale(0.5);
    let eigs = crate::linalg::hermitian_eigenvalues(&sym)?;
    let min_eigenvalue = eigs.last().copied().unwrap_or(0.0);
    let dynamical = sym.scale(d as f64);
    let reduced = partial_trace(&dynamical, Subsystem::Second, (d, d))?;
    let tp_deviation = max_abs(&(reduced - identity(d)));
    let trace_deviation = (sym.trace() - cr(1.0)).norm();
    let cp_pass = min_eigenvalue >= -TP_TOL;
    let tp_pass = tp_deviation <= TP_TOL && trace_deviation <= TP_TOL;
    Ok(CptpReport { min_eigenvalue, tp_deviation, trace_deviation, cp_pass, tp_pass, pass: cp_pass && tp_pass })
}

/// Rescaled dynamical matrix σ(Φ) = D(Φ)/d of a channel on d-dimensional
/// states: a density operator on the doubled space whose first factor is the
/// channel output and second factor the reference.
#[derive(Debug, Clone, PartialEq)]
pub struct ChoiMatrix {
    sigma: DensityOperator,
    d: usize,
}

impl ChoiMatrix {
    pub fn new(sigma: DensityOperator, d: usize) -> Result<Self> {
        if sigma.dim() != d * d {
            return Err(QseError::DimensionMismatch(format!(
                "sigma dimension {} is not d^2 = {}",
                sigma.dim(),
                d * d
            )));
        }
        let reduced =
            partial_trace(&sigma.matrix().scale(d as f64), Subsystem::Second, (d, d))?;
        let tp_deviation = max_abs(&(reduced - identity(d)));
        if tp_deviation > TP_TOL {
            return Err(QseError::Validation(format!(
                "Choi matrix is not trace-preserving: deviation {tp_deviation:.3e}"
            )));
        }
        Ok(Self { sigma, d })
    }

    /// Validate a raw matrix and wrap it.
    pub fn from_matrix(sigma: CMatrix, d: usize) -> Result<Self> {
        Self::new(DensityOperator::new(sigma)?, d)
    }

    /// Input/output dimension d of the channel.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Dimension d² of the carrier space.
    pub fn dim(&self) -> usize {
        self.d * self.d
    }

    pub fn sigma(&self) -> &DensityOperator {
        &self.sigma
    }

    /// Dynamical matrix D(Φ) = d·σ(Φ).
    pub fn dynamical(&self) -> CMatrix {
        self.sigma.matrix().scale(self.d as f64)
    }

    /// Number of eigenvalues of σ above `CHOI_RANK_CUTOFF`; equals the
    /// minimal number of Kraus operators.
    pub fn rank(&self) -> usize {
        self.sigma.eigenvalues().iter().filter(|&&l| l > CHOI_RANK_CUTOFF).count()
    }

    /// CPTP report for this (already validated) matrix.
    pub fn validate(&self) -> Result<CptpReport> {
        validate_cptp(self.sigma.matrix(), self.d)
    }

    /// Minimal Kraus set from the spectral decomposition of D(Φ): one
    /// operator per eigenvalue above `CHOI_RANK_CUTOFF`, scaled by √eigenvalue.
    pub fn to_kraus(&self) -> Result<KrausSet> {
        let d = self.d;
        let spec = hermitian_eig(self.sigma.matrix())?;
        let mut ops = Vec::new();
        for (idx, &lam) in spec.eigenvalues.iter().enumerate() {
            if lam > CHOI_RANK_CUTOFF {
                let scale = (lam * d as f64).sqrt();
                let col: CVector = spec.eigenvectors.column(idx).into();
                ops.push(unvec_operator(&col.scale(scale), d)?);
            }
        }
        KrausSet::new(ops, "from-choi")
    }

    /// Channel action recovered from the dynamical matrix:
    /// Φ(x) = tr_ref(D(Φ)·(I ⊗ xᵀ)).
    pub fn apply(&self, x: &CMatrix) -> Result<CMatrix> {
        let d = self.d;
        if x.shape() != (d, d) {
            return Err(QseError::DimensionMismatch(format!(
                "channel acts on {d}x{d}, input is {}x{}",
                x.nrows(),
                x.ncols()
            )));
        }
        let prod = self.dynamical() * kron(&identity(d), &x.transpose());
        partial_trace(&prod, Subsystem::First, (d, d))
    }

    /// Choi matrix of Φ₁ ⊗ Φ₂, built by explicit index reshuffling of
    /// σ(Φ₁) ⊗ σ(Φ₂): the two matrices are permutation-similar, so their
    /// spectra coincide as multisets.
    pub fn tensor(&self, other: &ChoiMatrix) -> Result<ChoiMatrix> {
        let d1 = self.d;
        let d2 = other.d;
        let s1 = self.sigma.matrix();
        let s2 = other.sigma.matrix();
        let d12 = d1 * d2;
        let n = d12 * d12;
        // Composite row index of σ(Φ₁⊗Φ₂): ((a1 a2),(b1 b2)) with the output
        // pair first; σ₁ ⊗ σ₂ carries ((a1 b1),(a2 b2)).
        let decode = |k: usize| {
            let b2 = k % d2;
            let b1 = (k / d2) % d1;
            let a2 = (k / (d1 * d2)) % d2;
            let a1 = k / (d2 * d1 * d2);
            (a1, a2, b1, b2)
        };
        let sigma = CMatrix::from_fn(n, n, |r, cidx| {
            let (a1, a2, b1, b2) = decode(r);
            let (a1p, a2p, b1p, b2p) = decode(cidx);
            s1[(a1 * d1 + b1, a1p * d1 + b1p)] * s2[(a2 * d2 + b2, a2p * d2 + b2p)]
        });
        ChoiMatrix::from_matrix(sigma, d12)
    }
}

/// |φ+⟩⟨φ+| with |φ+⟩ = d^{-1/2} Σ_ν |ν⟩⊗|ν⟩; both marginals are I/d.
pub fn maximally_entangled_state(d: usize) -> Result<DensityOperator> {
    if d < 2 {
        return Err(QseError::InvalidParameter(format!("need dimension d >= 2, got {d}")));
    }
    DensityOperator::pure(&maximally_entangled_vector(d))
}

/// The vector |φ+⟩ itself.
pub fn maximally_entangled_vector(d: usize) -> CVector {
    let mut v = CVector::zeros(d * d);
    let amp = cr(1.0 / (d as f64).sqrt());
    for nu in 0..d {
        v[nu * d + nu] = amp;
    }
    v
}

/// Families of standard channels.
#[derive(Debug, Clone)]
pub enum ChannelKind {
    Identity { d: usize },
    Unitary(UnitaryMatrix),
    /// Φ(ρ) = (1−p)ρ + p·I/d.
    Depolarizing { d: usize, p: f64 },
    /// ρ → Σ_j P_j ρ P_j for mutually orthogonal projectors summing to I.
    Pinching(Vec<CMatrix>),
    /// Qubit amplitude damping with decay probability γ.
    AmplitudeDamping { gamma: f64 },
    /// Qubit phase damping with dephasing probability λ.
    PhaseDamping { lambda: f64 },
}

/// Build a standard channel as a Kraus set.
pub fn standard_channel(kind: ChannelKind) -> Result<KrausSet> {
    match kind {
        ChannelKind::Identity { d } => {
            if d == 0 {
                return Err(QseError::InvalidParameter("identity channel needs d >= 1".into()));
            }
            KrausSet::new(vec![identity(d)], format!("identity(d={d})"))
        }
        ChannelKind::Unitary(u) => {
            let d = u.dim();
            KrausSet::new(vec![u.matrix().clone()], format!("unitary(d={d})"))
        }
        ChannelKind::Depolarizing { d, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(QseError::InvalidParameter(format!("depolarizing needs 0 <= p <= 1, got {p}")));
            }
            if d < 2 {
                return Err(QseError::InvalidParameter("depolarizing needs d >= 2".into()));
            }
            let label = format!("depolarizing(d={d},p={p})");
            if d == 2 {
                let x = CMatrix::from_row_slice(2, 2, &[cr(0.0), cr(1.0), cr(1.0), cr(0.0)]);
                let y = CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)]);
                let z = CMatrix::from_row_slice(2, 2, &[cr(1.0), cr(0.0), cr(0.0), cr(-1.0)]);
                let w = (p / 4.0).sqrt();
                KrausSet::new(
                    vec![
                        identity(2).scale((1.0 - 3.0 * p / 4.0).sqrt()),
                        x.scale(w),
                        y.scale(w),
                        z.scale(w),
                    ],
                    label,
                )
            } else {
                // General d: minimal Kraus set from the Choi matrix
                // (1−p)|φ+⟩⟨φ+| + p·I/d².
                let n = d * d;
                let phi = maximally_entangled_state(d)?;
                let sigma = phi.matrix().scale(1.0 - p) + identity(n).scale(p / n as f64);
                let mut set = ChoiMatrix::from_matrix(sigma, d)?.to_kraus()?;
                set.label = label;
                Ok(set)
            }
        }
        ChannelKind::Pinching(projectors) => {
            if projectors.is_empty() {
                return Err(QseError::InvalidInput("pinching needs at least one projector".into()));
            }
            let d = projectors[0].nrows();
            for (i, p) in projectors.iter().enumerate() {
                if p.shape() != (d, d) {
                    return Err(QseError::DimensionMismatch(format!("projector {i} has wrong shape")));
                }
                if hermiticity_error(p) > 1e-10 || max_abs(&(p * p - p)) > 1e-10 {
                    return Err(QseError::Validation(format!("operator {i} is not an orthogonal projector")));
                }
            }
            KrausSet::new(projectors, format!("pinching(d={d})"))
        }
        ChannelKind::AmplitudeDamping { gamma } => {
            if !(0.0..=1.0).contains(&gamma) {
                return Err(QseError::InvalidParameter(format!(
                    "amplitude damping needs 0 <= gamma <= 1, got {gamma}"
                )));
            }
            let k0 = CMatrix::from_row_slice(2, 2, &[cr(1.0), cr(0.0), cr(0.0), cr((1.0 - gamma).sqrt())]);
            let k1 = CMatrix::from_row_slice(2, 2, &[cr(0.0), cr(gamma.sqrt()), cr(0.0), cr(0.0)]);
            KrausSet::new(vec![k0, k1], format!("amplitude_damping(gamma={gamma})"))
        }
        ChannelKind::PhaseDamping { lambda } => {
            if !(0.0..=1.0).contains(&lambda) {
                return Err(QseError::InvalidParameter(format!(
                    "phase damping needs 0 <= lambda <= 1, got {lambda}"
                )));
            }
            let k0 = identity(2).scale((1.0 - lambda).sqrt());
            let k1 = CMatrix::from_row_slice(2, 2, &[cr(lambda.sqrt()), cr(0.0), cr(0.0), cr(0.0)]);
            let k2 = CMatrix::from_row_slice(2, 2, &[cr(0.0), cr(0.0), cr(0.0), cr(lambda.sqrt())]);
            KrausSet::new(vec![k0, k1, k2], format!("phase_damping(lambda={lambda})"))
        }
    }
}

/// Pinching onto the computational basis: d rank-one projectors.
pub fn computational_pinching(d: usize) -> Result<KrausSet> {
    let projectors = (0..d).map(|i| crate::linalg::matrix_unit(d, i, i)).collect();
    standard_channel(ChannelKind::Pinching(projectors))
}

// --- deterministic sampling -------------------------------------------------

/// SplitMix64 step, used to derive independent per-trial seeds.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub(crate) fn rng_from(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

/// Standard normal via Box-Muller, deterministic given the stream.
fn gaussian(rng: &mut ChaCha12Rng) -> f64 {
    let u1: f64 = loop {
        let u = rng.gen::<f64>();
        if u > 0.0 {
            break u;
        }
    };
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

pub(crate) fn ginibre(rng: &mut ChaCha12Rng, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| c(gaussian(rng), gaussian(rng)))
}

pub(crate) fn haar_unitary_with(rng: &mut ChaCha12Rng, d: usize) -> UnitaryMatrix {
    let g = ginibre(rng, d, d);
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    // Fix column phases by the R diagonal so the distribution is Haar.
    for j in 0..d {
        let rjj = r[(j, j)];
        let phase = if rjj.norm() > 0.0 { rjj / rjj.norm() } else { cr(1.0) };
        for i in 0..d {
            q[(i, j)] *= phase;
        }
    }
    UnitaryMatrix::new(q).expect("QR of a Ginibre matrix yields a unitary")
}

/// Haar-distributed random unitary, deterministic per seed.
pub fn haar_random_unitary(d: usize, seed: u64) -> Result<UnitaryMatrix> {
    if d == 0 {
        return Err(QseError::InvalidParameter("unitary dimension must be >= 1".into()));
    }
    Ok(haar_unitary_with(&mut rng_from(seed), d))
}

pub(crate) fn random_density_with(rng: &mut ChaCha12Rng, d: usize) -> DensityOperator {
    let g = ginibre(rng, d, d);
    let m = &g * g.adjoint();
    let t = m.trace().re;
    DensityOperator::new(m.scale(1.0 / t)).expect("Wishart matrix normalizes to a density operator")
}

/// Hilbert-Schmidt-random density operator, deterministic per seed.
pub fn random_density(d: usize, seed: u64) -> Result<DensityOperator> {
    if d == 0 {
        return Err(QseError::InvalidParameter("state dimension must be >= 1".into()));
    }
    Ok(random_density_with(&mut rng_from(seed), d))
}

pub(crate) fn random_channel_with(rng: &mut ChaCha12Rng, d: usize, rank: usize) -> Result<KrausSet> {
    if rank == 0 || rank > d * d {
        return Err(QseError::InvalidParameter(format!(
            "channel rank must lie in 1..=d^2 = {}, got {rank}",
            d * d
        )));
    }
    // Stinespring picture: isometrize a (d·rank)×d Gaussian matrix, then
    // slice it into `rank` Kraus blocks. Trace preservation is exact by
    // construction: W†W = I.
    let g = ginibre(rng, d * rank, d);
    let gram = g.adjoint() * &g;
    let spec = hermitian_eig(&gram)?;
    let inv_sqrt = {
        let vals = CVector::from_iterator(
            d,
            spec.eigenvalues.iter().map(|&l| cr(1.0 / l.max(1e-300).sqrt())),
        );
        &spec.eigenvectors * CMatrix::from_diagonal(&vals) * spec.eigenvectors.adjoint()
    };
    let w = g * inv_sqrt;
    let ops = (0..rank).map(|k| w.rows(k * d, d).into_owned()).collect();
    KrausSet::new(ops, format!("random(d={d},rank={rank})"))
}

/// Random channel with the requested Choi rank, deterministic per seed.
pub fn random_channel(d: usize, rank: usize, seed: u64) -> Result<KrausSet> {
    if d == 0 {
        return Err(QseError::InvalidParameter("channel dimension must be >= 1".into()));
    }
    random_channel_with(&mut rng_from(seed), d, rank)
}
