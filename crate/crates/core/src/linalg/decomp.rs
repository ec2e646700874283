//! Polar decomposition, square roots, pseudo-inverses and positive
//! factorization of Hermitian matrices.

use super::eigen::{hermitian_eigen, svd};
use super::matrix::CMatrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// `A = U H` with `U` a partial isometry, `H = (A*A)^{1/2}` and `ker U = ker H`.
#[derive(Debug, Clone)]
pub struct Polar<T: Real = f64> {
    pub u: CMatrix<T>,
    pub h: CMatrix<T>,
}

/// Polar decomposition. Singular values at or below `eps` times the largest
/// are treated as zero, so `U` vanishes on the numerical kernel of `A`.
pub fn polar_decompose_eps<T: Real>(a: &CMatrix<T>, eps: T) -> Polar<T> {
    let d = svd(a);
    let n = a.cols();
    let r = d.rank(eps);
    let s = &d.s;
    let h = CMatrix::from_fn(n, n, |i, j| {
        (0..n).map(|k| d.v[(i, k)] * d.v[(j, k)].conj() * s[k]).sum()
    });
    let u = CMatrix::from_fn(a.rows(), n, |i, j| {
        (0..r).map(|k| d.u[(i, k)] * d.v[(j, k)].conj()).sum()
    });
    Polar { u, h }
}

pub fn polar_decompose<T: Real>(a: &CMatrix<T>) -> Polar<T> {
    polar_decompose_eps(a, T::default_eps())
}

/// Moore-Penrose pseudo-inverse with relative cutoff `eps`.
pub fn pinv<T: Real>(a: &CMatrix<T>, eps: T) -> CMatrix<T> {
    let d = svd(a);
    let r = d.rank(eps);
    CMatrix::from_fn(a.cols(), a.rows(), |i, j| {
        (0..r).map(|k| d.v[(i, k)] * d.u[(j, k)].conj() / d.s[k]).sum()
    })
}

/// Square root of the positive part of the Hermitian part of `a`.
pub fn sqrt_psd<T: Real>(a: &CMatrix<T>) -> CMatrix<T> {
    hermitian_eigen(a).apply(|x| x.max(T::zero()).sqrt())
}

/// Counts of positive, negative and zero eigenvalues of a Hermitian matrix;
/// eigenvalues within `eps` times the spectral radius count as zero.
pub fn signature<T: Real>(a: &CMatrix<T>, eps: T) -> (usize, usize, usize) {
    let e = hermitian_eigen(a);
    let radius = e.values.iter().fold(T::zero(), |m, x| m.max(x.abs()));
    let thr = eps * radius;
    let p = e.values.iter().filter(|&&x| x > thr).count();
    let q = e.values.iter().filter(|&&x| x < -thr).count();
    (p, q, e.values.len() - p - q)
}

fn check_hermitian<T: Real>(a: &CMatrix<T>) -> Result<()> {
    let tol = T::lit(1e-10).max(T::default_eps()) * (T::one() + a.norm());
    let defect = a.hermitian_defect();
    // Written to reject NaN as well.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(defect <= tol) {
        return Err(Error::NotHermitian(defect.to_f64().unwrap_or(f64::INFINITY)));
    }
    Ok(())
}

/// `B` with `B B* = A`, namely `B = A^{1/2}`, for positive definite `A`.
pub fn positive_factor<T: Real>(a: &CMatrix<T>) -> Result<CMatrix<T>> {
    positive_factor_eps(a, T::default_eps())
}

pub fn positive_factor_eps<T: Real>(a: &CMatrix<T>, eps: T) -> Result<CMatrix<T>> {
    check_hermitian(a)?;
    let e = hermitian_eigen(a);
    let radius = e.values.iter().fold(T::zero(), |m, x| m.max(x.abs()));
    let thr = eps * radius;
    let p = e.values.iter().filter(|&&x| x > thr).count();
    if p < e.values.len() || radius == T::zero() && !e.values.is_empty() {
        let q = e.values.iter().filter(|&&x| x < -thr).count();
        return Err(Error::Indefinite {
            positive: p,
            negative: q,
        });
    }
    Ok(e.apply(|x| x.sqrt()))
}
