//! Dense complex linear algebra: Hilbert-Schmidt inner products, Schatten
//! norms, Hermitian spectral decompositions and tensor-space helpers.
//!
//! Every quantity in this crate is ultimately a function of singular values
//! or of a Hermitian spectrum, so the conventions fixed here (descending
//! eigenvalue order, deterministic eigenvector phases, row-major composite
//! indices for tensor factors) propagate through all higher modules.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{QseError, Result};

/// Dense complex matrix used throughout the crate.
pub type CMatrix = DMatrix<Complex64>;
/// Dense complex column vector.
pub type CVector = DVector<Complex64>;

/// Tolerance for treating a matrix as Hermitian, relative to max(1, ‖h‖_max).
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Singular values below this fraction of the largest one lie outside the support.
pub const SUPPORT_CUTOFF: f64 = 1e-12;

#[inline]
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[inline]
pub fn cr(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn identity(d: usize) -> CMatrix {
    CMatrix::identity(d, d)
}

/// Matrix unit E_{ij}: 1 at (i, j), zero elsewhere.
pub fn matrix_unit(d: usize, i: usize, j: usize) -> CMatrix {
    let mut m = CMatrix::zeros(d, d);
    m[(i, j)] = cr(1.0);
    m
}

/// Computational basis vector |i⟩ in dimension d.
pub fn basis_vector(d: usize, i: usize) -> CVector {
    let mut v = CVector::zeros(d);
    v[i] = cr(1.0);
    v
}

/// Largest entry modulus.
pub fn max_abs(x: &CMatrix) -> f64 {
    x.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn all_finite(x: &CMatrix) -> bool {
    x.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

/// ‖x − x†‖_max, the absolute deviation from Hermiticity.
pub fn hermiticity_error(x: &CMatrix) -> f64 {
    max_abs(&(x - x.adjoint()))
}

fn check_finite(x: &CMatrix) -> Result<()> {
    if all_finite(x) {
        Ok(())
    } else {
        Err(QseError::InvalidInput("matrix contains NaN or Inf entries".into()))
    }
}

/// Hilbert-Schmidt inner product tr(x†y).
pub fn hs_inner(x: &CMatrix, y: &CMatrix) -> Result<Complex64> {
    if x.shape() != y.shape() {
        return Err(QseError::DimensionMismatch(format!(
            "hs_inner: {:?} vs {:?}",
            x.shape(),
            y.shape()
        )));
    }
    Ok(x.iter().zip(y.iter()).map(|(a, b)| a.conj() * b).sum())
}

/// Singular values in descending order; count is min(rows, cols).
pub fn singular_values(x: &CMatrix) -> Vec<f64> {
    let mut sv: Vec<f64> = x
        .clone()
        .svd(false, false)
        .singular_values
        .iter()
        .map(|&s| s.max(0.0))
        .collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    sv
}

/// Dimension of the support: number of singular values above
/// `SUPPORT_CUTOFF` times the largest.
pub fn support_dim(x: &CMatrix) -> usize {
    let sv = singular_values(x);
    let top = sv.first().copied().unwrap_or(0.0);
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > SUPPORT_CUTOFF * top).count()
}

/// Schatten p-norm (Σ_j σ_j^p)^{1/p}; `p = f64::INFINITY` gives the spectral norm.
///
/// Computed from singular values for uniform accuracy across p.
pub fn schatten_norm(x: &CMatrix, p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(QseError::InvalidParameter(format!(
            "Schatten norm requires p >= 1 or infinity, got {p}"
        )));
    }
    let sv = singular_values(x);
    let top = sv.first().copied().unwrap_or(0.0);
    if top == 0.0 {
        return Ok(0.0);
    }
    if p.is_infinite() {
        return Ok(top);
    }
    // Scale by the largest value so large p cannot overflow.
    let sum: f64 = sv.iter().map(|&s| (s / top).powf(p)).sum();
    Ok(top * sum.powf(1.0 / p))
}

/// Power mean ((1/n) Σ_j x_j^q)^{1/q} of nonnegative values, q >= 1.
pub fn q_mean(values: &[f64], q: f64) -> Result<f64> {
    if values.is_empty() {
        return Err(QseError::InvalidInput("q_mean of an empty list".into()));
    }
    if q.is_nan() || q < 1.0 {
        return Err(QseError::InvalidParameter(format!("q_mean requires q >= 1, got {q}")));
    }
    if values.iter().any(|&v| v < 0.0 || !v.is_finite()) {
        return Err(QseError::InvalidInput("q_mean requires finite nonnegative values".into()));
    }
    let top = values.iter().cloned().fold(0.0, f64::max);
    if top == 0.0 {
        return Ok(0.0);
    }
    let n = values.len() as f64;
    let sum: f64 = values.iter().map(|&v| (v / top).powf(q)).sum();
    Ok(top * (sum / n).powf(1.0 / q))
}

/// Spectral decomposition of a Hermitian matrix.
///
/// Eigenvalues are sorted in descending order; the columns of `eigenvectors`
/// are the matching orthonormal eigenvectors, each with its first
/// significant component rotated to the positive real axis so repeated runs
/// produce identical output.
#[derive(Debug, Clone)]
pub struct HermitianSpectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: CMatrix,
}

impl HermitianSpectrum {
    /// V diag(λ) V†, for verifying the decomposition.
    pub fn reconstruct(&self) -> CMatrix {
        let v = &self.eigenvectors;
        let lam = CMatrix::from_diagonal(&CVector::from_iterator(
            self.eigenvalues.len(),
            self.eigenvalues.iter().map(|&l| cr(l)),
        ));
        v * lam * v.adjoint()
    }
}

/// Eigendecomposition of a Hermitian matrix (symmetrized internally).
///
/// Errors if the input deviates from Hermiticity by more than
/// `HERMITICITY_TOL` relative to max(1, ‖h‖_max).
pub fn hermitian_eig(h: &CMatrix) -> Result<HermitianSpectrum> {
    if !h.is_square() {
        return Err(QseError::DimensionMismatch(format!(
            "hermitian_eig on a {}x{} matrix",
            h.nrows(),
            h.ncols()
        )));
    }
    check_finite(h)?;
    let tolerance = HERMITICITY_TOL * max_abs(h).max(1.0);
    let deviation = hermiticity_error(h);
    if deviation > tolerance {
        return Err(QseError::NotHermitian { deviation, tolerance });
    }
    let sym = (h + h.adjoint()).scale(0.5);
    let n = sym.nrows();
    let se = sym.symmetric_eigen();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| se.eigenvalues[b].partial_cmp(&se.eigenvalues[a]).unwrap());

    let eigenvalues: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let mut eigenvectors = CMatrix::zeros(n, n);
    for (col, &i) in order.iter().enumerate() {
        let mut v: CVector = se.eigenvectors.column(i).into();
        if let Some(first) = v.iter().find(|z| z.norm() > 1e-8) {
            let phase = first.conj() / first.norm();
            v *= phase;
        }
        eigenvectors.set_column(col, &v);
    }
    Ok(HermitianSpectrum { eigenvalues, eigenvectors })
}

/// Eigenvalues only, descending. Same Hermiticity contract as [`hermitian_eig`].
pub fn hermitian_eigenvalues(h: &CMatrix) -> Result<Vec<f64>> {
    if !h.is_square() {
        return Err(QseError::DimensionMismatch(format!(
            "hermitian_eigenvalues on a {}x{} matrix",
            h.nrows(),
            h.ncols()
        )));
    }
    check_finite(h)?;
    let tolerance = HERMITICITY_TOL * max_abs(h).max(1.0);
    let deviation = hermiticity_error(h);
    if deviation > tolerance {
        return Err(QseError::NotHermitian { deviation, tolerance });
    }
    let sym = (h + h.adjoint()).scale(0.5);
    let mut ev: Vec<f64> = sym.symmetric_eigenvalues().iter().cloned().collect();
    ev.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(ev)
}

/// Kronecker product. Composite indices are row-major in the factors:
/// (x ⊗ y)[(a·r_y + c), (b·c_y + d)] = x[a,b] · y[c,d].
pub fn kron(x: &CMatrix, y: &CMatrix) -> CMatrix {
    x.kronecker(y)
}

/// Which tensor factor `partial_trace` keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    First,
    Second,
}

/// Partial trace of a square matrix on a bipartite space with factor
/// dimensions `dims = (d_a, d_b)`, composite index a·d_b + b.
pub fn partial_trace(x: &CMatrix, keep: Subsystem, dims: (usize, usize)) -> Result<CMatrix> {
    let (da, db) = dims;
    let n = da * db;
    if da == 0 || db == 0 || x.nrows() != n || x.ncols() != n {
        return Err(QseError::DimensionMismatch(format!(
            "partial_trace: matrix is {}x{}, expected {n}x{n} = ({da}x{db})^2",
            x.nrows(),
            x.ncols()
        )));
    }
    let out = match keep {
        Subsystem::First => CMatrix::from_fn(da, da, |a, a2| {
            (0..db).map(|b| x[(a * db + b, a2 * db + b)]).sum()
        }),
        Subsystem::Second => CMatrix::from_fn(db, db, |b, b2| {
            (0..da).map(|a| x[(a * db + b, a * db + b2)]).sum()
        }),
    };
    Ok(out)
}

/// Factor F(d, p, q) = d^{(q-1)/(pq)} such that ‖x‖_p ≤ F·‖x‖_{pq} for every
/// operator x with d-dimensional support; q = ∞ gives d^{1/p} (the bound on
/// ‖x‖_p in terms of the spectral norm).
pub fn schatten_bound_factor(d: usize, p: f64, q: f64) -> Result<f64> {
    if d == 0 {
        return Err(QseError::InvalidParameter("support dimension must be >= 1".into()));
    }
    if p.is_nan() || p < 1.0 {
        return Err(QseError::InvalidParameter(format!("requires p >= 1, got {p}")));
    }
    if q.is_nan() || q < 1.0 {
        return Err(QseError::InvalidParameter(format!("requires q >= 1 or infinity, got {q}")));
    }
    let df = d as f64;
    if p.is_infinite() {
        return Ok(1.0);
    }
    if q.is_infinite() {
        return Ok(df.powf(1.0 / p));
    }
    Ok(df.powf((q - 1.0) / (p * q)))
}
