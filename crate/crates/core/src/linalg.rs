//! Dense complex matrix arithmetic and the spectral primitives the rest of
//! the crate builds on.
//!
//! Hermitian eigenproblems and singular values are delegated to `nalgebra`;
//! eigenvalues of general (non-Hermitian) matrices come from a small complex
//! Hessenberg QR iteration in this module. Every routine runs a fixed,
//! single-threaded schedule, so results are bit-reproducible for fixed input.

use std::fmt;

use nalgebra::{DMatrix, DVector, SymmetricEigen, SVD};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Relative Hermitian defect accepted by [`herm_eig_extremes`].
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Largest [`normality_defect`] for which a matrix is treated as normal.
pub const NORMALITY_TOL: f64 = 1e-10;

/// Dense square complex matrix with finite entries.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix(DMatrix<C64>);

/// Dense complex vector with finite entries.
#[derive(Clone, PartialEq)]
pub struct ComplexVector(DVector<C64>);

impl ComplexMatrix {
    pub fn new(inner: DMatrix<C64>) -> Result<Self> {
        let (rows, cols) = inner.shape();
        if rows != cols || rows == 0 {
            return Err(Error::NotSquare { rows, cols });
        }
        for c in 0..cols {
            for r in 0..rows {
                let z = inner[(r, c)];
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFinite { row: r, col: c });
                }
            }
        }
        Ok(Self(inner))
    }

    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let n = rows.len();
        for row in rows {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
        }
        Self::new(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
    }

    /// Row-major construction from real parts only.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let rows: Vec<Vec<C64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize, usize) -> C64) -> Result<Self> {
        Self::new(DMatrix::from_fn(n, n, f))
    }

    pub fn identity(n: usize) -> Self {
        assert!(n > 0, "identity of dimension zero");
        Self(DMatrix::identity(n, n))
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n > 0, "zero matrix of dimension zero");
        Self(DMatrix::zeros(n, n))
    }

    pub fn diag(values: &[C64]) -> Result<Self> {
        let n = values.len();
        Self::new(DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                values[i]
            } else {
                C64::new(0.0, 0.0)
            }
        }))
    }

    pub fn diag_real(values: &[f64]) -> Result<Self> {
        let v: Vec<C64> = values.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::diag(&v)
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.0[(row, col)]
    }

    pub fn inner(&self) -> &DMatrix<C64> {
        &self.0
    }

    pub fn into_inner(self) -> DMatrix<C64> {
        self.0
    }

    /// Entries in row-major order.
    pub fn entries_row_major(&self) -> Vec<C64> {
        let n = self.dim();
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                out.push(self.0[(i, j)]);
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn apply(&self, x: &ComplexVector) -> Result<ComplexVector> {
        check_dim(self.dim(), x.dim())?;
        Ok(ComplexVector(&self.0 * &x.0))
    }

    /// The quadratic form `<Ax, x>`.
    pub fn quad_form(&self, x: &ComplexVector) -> Result<C64> {
        let ax = self.apply(x)?;
        Ok(ax.inner_product(x))
    }

    /// Bit-exact comparison (used by reproducibility checks).
    pub fn bits_eq(&self, other: &Self) -> bool {
        self.dim() == other.dim()
            && self
                .0
                .iter()
                .zip(other.0.iter())
                .all(|(a, b)| a.re.to_bits() == b.re.to_bits() && a.im.to_bits() == b.im.to_bits())
    }

    pub(crate) fn from_inner_unchecked(inner: DMatrix<C64>) -> Self {
        Self(inner)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComplexMatrix{}", self.0)
    }
}

impl ComplexVector {
    pub fn new(inner: DVector<C64>) -> Result<Self> {
        for (i, z) in inner.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite { row: i, col: 0 });
            }
        }
        Ok(Self(inner))
    }

    pub fn from_slice(values: &[C64]) -> Result<Self> {
        Self::new(DVector::from_column_slice(values))
    }

    pub fn from_real(values: &[f64]) -> Result<Self> {
        let v: Vec<C64> = values.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::from_slice(&v)
    }

    /// The `k`-th standard basis vector of dimension `n`.
    pub fn basis(n: usize, k: usize) -> Self {
        let mut v = DVector::zeros(n);
        v[k] = C64::new(1.0, 0.0);
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize) -> C64 {
        self.0[i]
    }

    pub fn inner(&self) -> &DVector<C64> {
        &self.0
    }

    pub fn as_slice(&self) -> &[C64] {
        self.0.as_slice()
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `<self, other> = sum self_i * conj(other_i)`, linear in the first slot.
    pub fn inner_product(&self, other: &Self) -> C64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .fold(C64::new(0.0, 0.0), |acc, (a, b)| acc + a * b.conj())
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        Self(self.0.map(|z| z / n))
    }

    pub fn scaled(&self, c: C64) -> Self {
        Self(self.0.map(|z| z * c))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(Self(&self.0 + &other.0))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(Self(&self.0 - &other.0))
    }

    pub(crate) fn from_inner_unchecked(inner: DVector<C64>) -> Self {
        Self(inner)
    }
}

impl fmt::Debug for ComplexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComplexVector{:?}", self.0.as_slice())
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Extreme eigenpairs of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermEigExtremes {
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub v_min: ComplexVector,
    pub v_max: ComplexVector,
}

/// Extreme singular values with their right singular vectors.
#[derive(Debug, Clone)]
pub struct SvdExtremes {
    pub sigma_max: f64,
    pub sigma_min: f64,
    pub v_max: ComplexVector,
    pub v_min: ComplexVector,
}

pub fn adjoint(a: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix(a.0.adjoint())
}

pub fn matmul(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_dim(a.dim(), b.dim())?;
    Ok(ComplexMatrix(&a.0 * &b.0))
}

pub fn matadd(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_dim(a.dim(), b.dim())?;
    Ok(ComplexMatrix(&a.0 + &b.0))
}

pub fn matsub(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_dim(a.dim(), b.dim())?;
    Ok(ComplexMatrix(&a.0 - &b.0))
}

pub fn scale(a: &ComplexMatrix, c: C64) -> ComplexMatrix {
    ComplexMatrix(a.0.map(|z| z * c))
}

/// `A - zI`.
pub fn shift(a: &ComplexMatrix, z: C64) -> ComplexMatrix {
    let mut m = a.0.clone();
    for i in 0..a.dim() {
        m[(i, i)] -= z;
    }
    ComplexMatrix(m)
}

/// `(A + A*) / 2`.
pub fn hermitian_part(a: &ComplexMatrix) -> ComplexMatrix {
    let adj = a.0.adjoint();
    ComplexMatrix((&a.0 + adj).map(|z| z * 0.5))
}

/// `‖H − H*‖_F / max(‖H‖_F, tiny)`; zero for exactly Hermitian input.
pub fn hermitian_defect(h: &ComplexMatrix) -> f64 {
    let n = h.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            acc += (h.0[(i, j)] - h.0[(j, i)].conj()).norm_sqr();
        }
    }
    let fro = h.frobenius_norm();
    if fro == 0.0 {
        0.0
    } else {
        acc.sqrt() / fro
    }
}

/// Smallest and largest eigenvalues of a Hermitian matrix with unit
/// eigenvector witnesses.
pub fn herm_eig_extremes(h: &ComplexMatrix) -> Result<HermEigExtremes> {
    let defect = hermitian_defect(h);
    if defect > HERMITIAN_TOL {
        return Err(Error::NotHermitian { defect });
    }
    Ok(herm_eig_extremes_unchecked(&hermitian_part(h)))
}

/// Eigen-extremes of a matrix already known to be exactly Hermitian.
pub(crate) fn herm_eig_extremes_unchecked(h: &ComplexMatrix) -> HermEigExtremes {
    let n = h.dim();
    if n == 1 {
        let v = ComplexVector::basis(1, 0);
        let l = h.0[(0, 0)].re;
        return HermEigExtremes {
            lambda_min: l,
            lambda_max: l,
            v_min: v.clone(),
            v_max: v,
        };
    }
    let eig = SymmetricEigen::new(h.0.clone());
    let mut imin = 0;
    let mut imax = 0;
    for i in 1..n {
        if eig.eigenvalues[i] < eig.eigenvalues[imin] {
            imin = i;
        }
        if eig.eigenvalues[i] > eig.eigenvalues[imax] {
            imax = i;
        }
    }
    let col = |k: usize| ComplexVector(eig.eigenvectors.column(k).into_owned()).normalized();
    HermEigExtremes {
        lambda_min: eig.eigenvalues[imin],
        lambda_max: eig.eigenvalues[imax],
        v_min: col(imin),
        v_max: col(imax),
    }
}

/// Largest eigenvalue only; cheaper bookkeeping for sweeps.
pub(crate) fn lambda_max_with_vector(h: &ComplexMatrix) -> (f64, ComplexVector) {
    let e = herm_eig_extremes_unchecked(h);
    (e.lambda_max, e.v_max)
}

pub fn svd_extremes(a: &ComplexMatrix) -> SvdExtremes {
    // Values come from the values-only SVD: requesting vectors from the
    // complex SVD perturbs the values near clusters at the 1e-11 level.
    // The vectors are eigenvectors of A*A.
    let values = singular_values(a);
    let sigma_max = values.iter().cloned().fold(0.0, f64::max);
    let sigma_min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let gram = ComplexMatrix(a.0.adjoint() * &a.0);
    let e = herm_eig_extremes_unchecked(&hermitian_part(&gram));
    SvdExtremes {
        sigma_max,
        sigma_min,
        v_max: e.v_max,
        v_min: e.v_min,
    }
}

fn singular_values(a: &ComplexMatrix) -> DVector<f64> {
    SVD::new(a.0.clone(), false, false).singular_values
}

/// `‖A‖ = σ_max(A)`.
pub fn operator_norm(a: &ComplexMatrix) -> f64 {
    singular_values(a).iter().cloned().fold(0.0, f64::max)
}

/// `ξ(A) = inf_{‖x‖=1} ‖Ax‖ = σ_min(A)`.
pub fn min_gain(a: &ComplexMatrix) -> f64 {
    singular_values(a)
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min)
}

/// `‖A*A − AA*‖_F / max(1, ‖A‖_F²)`.
pub fn normality_defect(a: &ComplexMatrix) -> f64 {
    let adj = a.0.adjoint();
    let comm = &adj * &a.0 - &a.0 * &adj;
    let num = comm.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let fro2 = a.frobenius_norm().powi(2);
    num / fro2.max(1.0)
}

pub fn is_normal(a: &ComplexMatrix) -> bool {
    normality_defect(a) <= NORMALITY_TOL
}

/// Returns `Err(NotNormal)` unless the normality defect is within tolerance.
pub fn require_normal(a: &ComplexMatrix) -> Result<()> {
    let defect = normality_defect(a);
    if defect <= NORMALITY_TOL {
        Ok(())
    } else {
        Err(Error::NotNormal { defect })
    }
}

/// Eigenvalues of a general complex matrix (complex Schur form by shifted
/// Hessenberg QR). Order follows deflation order and is deterministic.
pub fn eigenvalues(a: &ComplexMatrix) -> Vec<C64> {
    let n = a.dim();
    let mut h: Vec<C64> = a.entries_row_major();
    let scale = h.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return vec![C64::new(0.0, 0.0); n];
    }
    for z in h.iter_mut() {
        *z /= scale;
    }
    hessenberg_in_place(&mut h, n);
    let mut eig = schur_eigenvalues(&mut h, n);
    for z in eig.iter_mut() {
        *z *= scale;
    }
    eig
}

#[inline]
fn at(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

fn hessenberg_in_place(h: &mut [C64], n: usize) {
    if n < 3 {
        return;
    }
    for k in 0..n - 2 {
        // Householder reflector zeroing h[k+2.., k].
        let col: Vec<C64> = (k + 1..n).map(|i| h[at(n, i, k)]).collect();
        let alpha_norm = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if alpha_norm == 0.0 {
            continue;
        }
        let x0 = col[0];
        let phase = if x0.norm() == 0.0 {
            C64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let mut v = col;
        v[0] += phase * alpha_norm;
        let vnorm2 = v.iter().map(|z| z.norm_sqr()).sum::<f64>();
        if vnorm2 == 0.0 {
            continue;
        }
        // P = I - 2 v v* / (v* v); apply H <- P H P.
        for j in 0..n {
            let mut s = C64::new(0.0, 0.0);
            for (t, vi) in v.iter().enumerate() {
                s += vi.conj() * h[at(n, k + 1 + t, j)];
            }
            let f = s * (2.0 / vnorm2);
            for (t, vi) in v.iter().enumerate() {
                h[at(n, k + 1 + t, j)] -= vi * f;
            }
        }
        for i in 0..n {
            let mut s = C64::new(0.0, 0.0);
            for (t, vi) in v.iter().enumerate() {
                s += h[at(n, i, k + 1 + t)] * vi;
            }
            let f = s * (2.0 / vnorm2);
            for (t, vi) in v.iter().enumerate() {
                h[at(n, i, k + 1 + t)] -= f * vi.conj();
            }
        }
        for i in k + 2..n {
            h[at(n, i, k)] = C64::new(0.0, 0.0);
        }
    }
}

/// Givens pair `(c, s)` with `[c s; -conj(s) c] [a; b] = [r; 0]`.
fn givens(a: C64, b: C64) -> (f64, C64) {
    let bn = b.norm();
    if bn == 0.0 {
        return (1.0, C64::new(0.0, 0.0));
    }
    let an = a.norm();
    if an == 0.0 {
        return (0.0, b.conj() / bn);
    }
    let rho = an.hypot(bn);
    (an / rho, (a / an) * b.conj() / rho)
}

fn wilkinson_shift(a: C64, b: C64, c: C64, d: C64) -> C64 {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let mean = (a + d) * 0.5;
    let l1 = mean + disc;
    let l2 = mean - disc;
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

fn schur_eigenvalues(h: &mut [C64], n: usize) -> Vec<C64> {
    let eps = f64::EPSILON;
    let mut hi = n - 1;
    let mut iter_since_deflation = 0usize;
    let max_iter = 100 * n.max(1);
    let mut total_iter = 0usize;
    while hi > 0 {
        // Find the start of the active unreduced block.
        let mut lo = hi;
        while lo > 0 {
            let sub = h[at(n, lo, lo - 1)].norm();
            let diag = h[at(n, lo, lo)].norm() + h[at(n, lo - 1, lo - 1)].norm();
            let thresh = if diag == 0.0 { eps } else { eps * diag };
            if sub <= thresh {
                h[at(n, lo, lo - 1)] = C64::new(0.0, 0.0);
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            hi -= 1;
            iter_since_deflation = 0;
            continue;
        }
        total_iter += 1;
        iter_since_deflation += 1;
        if total_iter > max_iter {
            break;
        }
        let mut sigma = wilkinson_shift(
            h[at(n, hi - 1, hi - 1)],
            h[at(n, hi - 1, hi)],
            h[at(n, hi, hi - 1)],
            h[at(n, hi, hi)],
        );
        if iter_since_deflation % 11 == 10 {
            // Exceptional shift to break cycles.
            sigma = h[at(n, hi, hi)] + C64::new(0.75, 0.5) * h[at(n, hi, hi - 1)].norm();
        }
        for i in lo..=hi {
            h[at(n, i, i)] -= sigma;
        }
        let mut rots = Vec::with_capacity(hi - lo);
        for k in lo..hi {
            let (c, s) = givens(h[at(n, k, k)], h[at(n, k + 1, k)]);
            for j in k..=hi {
                let x = h[at(n, k, j)];
                let y = h[at(n, k + 1, j)];
                h[at(n, k, j)] = x * c + s * y;
                h[at(n, k + 1, j)] = -s.conj() * x + y * c;
            }
            h[at(n, k + 1, k)] = C64::new(0.0, 0.0);
            rots.push((c, s));
        }
        for (off, &(c, s)) in rots.iter().enumerate() {
            let k = lo + off;
            let top = (k + 2).min(hi);
            for i in lo..=top {
                let x = h[at(n, i, k)];
                let y = h[at(n, i, k + 1)];
                h[at(n, i, k)] = x * c + y * s.conj();
                h[at(n, i, k + 1)] = -x * s + y * c;
            }
        }
        for i in lo..=hi {
            h[at(n, i, i)] += sigma;
        }
    }
    (0..n).map(|i| h[at(n, i, i)]).collect()
}

/// Unit vector minimizing `‖(A − λI)x‖`; an eigenvector when `λ` is an
/// eigenvalue.
pub fn approximate_eigenvector(a: &ComplexMatrix, lambda: C64) -> ComplexVector {
    svd_extremes(&shift(a, lambda)).v_min
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn adjoint_of_diagonal_conjugates() {
        let a = ComplexMatrix::diag(&[c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
        let expected = ComplexMatrix::diag(&[c(1.0, 0.0), c(0.0, -1.0)]).unwrap();
        assert_eq!(adjoint(&a), expected);
    }

    #[test]
    fn adjoint_of_real_is_transpose() {
        let a = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        let t = ComplexMatrix::from_real_rows(&[vec![0.0, 0.0], vec![1.0, 0.0]]).unwrap();
        assert_eq!(adjoint(&a), t);
    }

    #[test]
    fn adjoint_fixes_hermitian() {
        let h = ComplexMatrix::from_rows(&[
            vec![c(2.0, 0.0), c(1.0, -1.0)],
            vec![c(1.0, 1.0), c(-3.0, 0.0)],
        ])
        .unwrap();
        assert_eq!(adjoint(&h), h);
    }

    #[test]
    fn herm_extremes_small_cases() {
        let e = herm_eig_extremes(&ComplexMatrix::diag_real(&[3.0, -1.0]).unwrap()).unwrap();
        assert_eq!((e.lambda_min, e.lambda_max), (-1.0, 3.0));
        let x = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let e = herm_eig_extremes(&x).unwrap();
        assert!((e.lambda_min + 1.0).abs() < 1e-14);
        assert!((e.lambda_max - 1.0).abs() < 1e-14);
    }

    #[test]
    fn herm_extremes_rejects_non_hermitian() {
        let a = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(
            herm_eig_extremes(&a),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn norms_of_small_matrices() {
        assert!((operator_norm(&ComplexMatrix::diag_real(&[3.0, -1.0]).unwrap()) - 3.0).abs() < 1e-15);
        let n2 = ComplexMatrix::from_real_rows(&[vec![0.0, 2.0], vec![0.0, 0.0]]).unwrap();
        assert!((operator_norm(&n2) - 2.0).abs() < 1e-15);
        let d = ComplexMatrix::diag(&[c(1.0, 1.0), c(2.0, 2.0)]).unwrap();
        assert!((operator_norm(&d) - 8f64.sqrt()).abs() < 1e-14);
        assert!((min_gain(&ComplexMatrix::diag_real(&[3.0, 1.0]).unwrap()) - 1.0).abs() < 1e-15);
        let nil = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(min_gain(&nil).abs() < 1e-15);
    }

    #[test]
    fn normality_defect_of_nilpotent() {
        let nil = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        // A*A − AA* = diag(1, −1): Frobenius √2, ‖A‖_F² = 1.
        assert!((normality_defect(&nil) - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(normality_defect(&ComplexMatrix::diag(&[c(1.0, 2.0), c(-3.0, 0.5)]).unwrap()), 0.0);
    }

    #[test]
    fn ring_operations() {
        let a = ComplexMatrix::from_rows(&[
            vec![c(1.0, 2.0), c(0.5, 0.0)],
            vec![c(-1.0, 1.0), c(0.0, -3.0)],
        ])
        .unwrap();
        assert_eq!(matmul(&ComplexMatrix::identity(2), &a).unwrap(), a);
        assert_eq!(matsub(&a, &a).unwrap(), ComplexMatrix::zeros(2));
        let t = ComplexMatrix::diag(&[c(1.0, 1.0), c(2.0, 2.0)]).unwrap();
        let lt = scale(&adjoint(&t), c(0.0, 1.0));
        assert_eq!(lt, t);
        assert!(matches!(
            matmul(&a, &ComplexMatrix::identity(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn eigenvalues_of_jordan_and_diagonal() {
        let j = ComplexMatrix::from_real_rows(&[vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap();
        for z in eigenvalues(&j) {
            assert!((z - c(1.0, 0.0)).norm() < 1e-12);
        }
        let d = ComplexMatrix::diag(&[c(2.0, 0.0), c(0.0, -3.0)]).unwrap();
        let mut mods: Vec<f64> = eigenvalues(&d).iter().map(|z| z.norm()).collect();
        mods.sort_by(f64::total_cmp);
        assert!((mods[0] - 2.0).abs() < 1e-14 && (mods[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn eigenvalues_of_companion_matrix() {
        // Companion matrix of (z−1)(z−2i)(z+3)(z−0.5−0.5i).
        let roots = [c(1.0, 0.0), c(0.0, 2.0), c(-3.0, 0.0), c(0.5, 0.5)];
        let mut coeffs = vec![c(1.0, 0.0)];
        for r in roots {
            let mut next = vec![c(0.0, 0.0); coeffs.len() + 1];
            for (k, &a) in coeffs.iter().enumerate() {
                next[k] += a;
                next[k + 1] -= a * r;
            }
            coeffs = next;
        }
        let n = roots.len();
        let comp = ComplexMatrix::from_fn(n, |i, j| {
            if i == 0 {
                -coeffs[j + 1]
            } else if i == j + 1 {
                c(1.0, 0.0)
            } else {
                c(0.0, 0.0)
            }
        })
        .unwrap();
        let eig = eigenvalues(&comp);
        for r in roots {
            let best = eig.iter().map(|z| (z - r).norm()).fold(f64::INFINITY, f64::min);
            assert!(best < 1e-10, "root {r} missed by {best}");
        }
    }

    #[test]
    fn approximate_eigenvector_of_nilpotent_is_e1() {
        let nil = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        let v = approximate_eigenvector(&nil, c(0.0, 0.0));
        assert!((v.get(0).norm() - 1.0).abs() < 1e-14);
        assert!(v.get(1).norm() < 1e-14);
    }
}
