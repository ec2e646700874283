//! Cyclic Jacobi methods: Hermitian eigendecomposition and one-sided
//! (Hestenes) singular value decomposition.

use super::matrix::CMatrix;
use crate::scalar::{c, Real, C};

const MAX_SWEEPS: usize = 100;

/// 2x2 unitary `[[c, s], [-s·ph, c·ph]]` that diagonalizes the Hermitian
/// block `[[app, apq], [conj(apq), aqq]]`.
fn jacobi_rotation<T: Real>(app: T, aqq: T, apq: C<T>) -> (T, T, C<T>) {
    let r = apq.norm();
    let ph = c(apq.re / r, -apq.im / r);
    let theta = (aqq - app) / (T::lit(2.0) * r);
    let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
    let cs = T::one() / (t * t + T::one()).sqrt();
    (cs, t * cs, ph)
}

/// Right-multiplies columns `p`, `q` of `m` by the rotation block.
fn rotate_columns<T: Real>(m: &mut CMatrix<T>, p: usize, q: usize, cs: T, sn: T, ph: C<T>) {
    let (gpp, gpq) = (c(cs, T::zero()), c(sn, T::zero()));
    let (gqp, gqq) = (ph * (-sn), ph * cs);
    for k in 0..m.rows() {
        let (x, y) = (m[(k, p)], m[(k, q)]);
        m[(k, p)] = x * gpp + y * gqp;
        m[(k, q)] = x * gpq + y * gqq;
    }
}

/// Left-multiplies rows `p`, `q` of `m` by the adjoint of the rotation block.
fn rotate_rows_adjoint<T: Real>(m: &mut CMatrix<T>, p: usize, q: usize, cs: T, sn: T, ph: C<T>) {
    let (gpp, gpq) = (c(cs, T::zero()), c(sn, T::zero()));
    let (gqp, gqq) = (ph * (-sn), ph * cs);
    for k in 0..m.cols() {
        let (x, y) = (m[(p, k)], m[(q, k)]);
        m[(p, k)] = gpp.conj() * x + gqp.conj() * y;
        m[(q, k)] = gpq.conj() * x + gqq.conj() * y;
    }
}

/// Eigenvalues in ascending order with orthonormal eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen<T: Real = f64> {
    pub values: Vec<T>,
    pub vectors: CMatrix<T>,
}

/// Eigendecomposition of the Hermitian part `(A + A*)/2` of a square matrix.
pub fn hermitian_eigen<T: Real>(a: &CMatrix<T>) -> HermitianEigen<T> {
    assert!(a.is_square(), "eigendecomposition needs a square matrix");
    let n = a.rows();
    let half = T::lit(0.5);
    let mut m = CMatrix::from_fn(n, n, |i, j| (a[(i, j)] + a[(j, i)].conj()) * half);
    let mut v = CMatrix::identity(n);
    let scale = m.norm();

    for _ in 0..MAX_SWEEPS {
        let off: T = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[(i, j)].norm_sqr())
            .sum::<T>()
            .sqrt();
        if off <= T::epsilon() * scale || off == T::zero() {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if apq.norm() <= T::min_positive_value() / T::epsilon() {
                    continue;
                }
                let (cs, sn, ph) = jacobi_rotation(m[(p, p)].re, m[(q, q)].re, apq);
                rotate_columns(&mut m, p, q, cs, sn, ph);
                rotate_rows_adjoint(&mut m, p, q, cs, sn, ph);
                m[(p, q)] = c(T::zero(), T::zero());
                m[(q, p)] = c(T::zero(), T::zero());
                m[(p, p)].im = T::zero();
                m[(q, q)].im = T::zero();
                rotate_columns(&mut v, p, q, cs, sn, ph);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.partial_cmp(&m[(j, j)].re).expect("finite eigenvalues"));
    HermitianEigen {
        values: order.iter().map(|&i| m[(i, i)].re).collect(),
        vectors: v.select_columns(&order),
    }
}

impl<T: Real> HermitianEigen<T> {
    /// `V f(Λ) V*`.
    pub fn apply(&self, f: impl Fn(T) -> T) -> CMatrix<T> {
        let n = self.values.len();
        let fv: Vec<T> = self.values.iter().map(|&x| f(x)).collect();
        CMatrix::from_fn(n, n, |i, j| {
            (0..n)
                .map(|k| self.vectors[(i, k)] * self.vectors[(j, k)].conj() * fv[k])
                .sum()
        })
    }

    /// Groups eigenvalues into clusters of consecutive values no more than
    /// `tol` apart. Returns the cluster mean and the member column indices.
    pub fn clusters(&self, tol: T) -> Vec<(T, Vec<usize>)> {
        let mut out: Vec<(T, Vec<usize>)> = Vec::new();
        for (k, &x) in self.values.iter().enumerate() {
            match out.last_mut() {
                Some((_, idx)) if x - self.values[*idx.last().expect("nonempty")] <= tol => idx.push(k),
                _ => out.push((x, vec![k])),
            }
        }
        for (mean, idx) in &mut out {
            *mean = idx.iter().map(|&k| self.values[k]).sum::<T>() / T::lit(idx.len() as f64);
        }
        out
    }
}

/// Thin singular value decomposition `A = U diag(s) V*`, singular values in
/// descending order. `U` is `m x n`; columns belonging to zero singular values
/// are zero. `V` is `n x n` unitary.
#[derive(Debug, Clone)]
pub struct Svd<T: Real = f64> {
    pub u: CMatrix<T>,
    pub s: Vec<T>,
    pub v: CMatrix<T>,
}

/// One-sided Jacobi SVD. Small singular values come out with absolute
/// accuracy near machine precision times the norm of `A`, which keeps rank
/// decisions at tight tolerances meaningful.
pub fn svd<T: Real>(a: &CMatrix<T>) -> Svd<T> {
    let (m, n) = a.shape();
    let mut w = a.clone();
    let mut v = CMatrix::identity(n);
    let tol = T::epsilon() * T::lit(m.max(1) as f64);

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let (mut alpha, mut beta, mut gamma) = (T::zero(), T::zero(), c(T::zero(), T::zero()));
                for k in 0..m {
                    let (x, y) = (w[(k, p)], w[(k, q)]);
                    alpha += x.norm_sqr();
                    beta += y.norm_sqr();
                    gamma += x.conj() * y;
                }
                if gamma.norm() <= tol * (alpha * beta).sqrt() || gamma.norm() == T::zero() {
                    continue;
                }
                rotated = true;
                let (cs, sn, ph) = jacobi_rotation(alpha, beta, gamma);
                rotate_columns(&mut w, p, q, cs, sn, ph);
                rotate_columns(&mut v, p, q, cs, sn, ph);
            }
        }
        if !rotated {
            break;
        }
    }

    let norms: Vec<T> = (0..n)
        .map(|j| (0..m).map(|k| w[(k, j)].norm_sqr()).sum::<T>().sqrt())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).expect("finite norms"));
    let s: Vec<T> = order.iter().map(|&j| norms[j]).collect();
    let u = CMatrix::from_fn(m, n, |i, jj| {
        let j = order[jj];
        if norms[j] > T::zero() {
            w[(i, j)] / norms[j]
        } else {
            c(T::zero(), T::zero())
        }
    });
    Svd {
        u,
        s,
        v: v.select_columns(&order),
    }
}

impl<T: Real> Svd<T> {
    pub fn max(&self) -> T {
        self.s.first().copied().unwrap_or_else(T::zero)
    }

    /// Number of singular values above `eps` times the largest.
    pub fn rank(&self, eps: T) -> usize {
        let thr = eps * self.max();
        self.s.iter().filter(|&&x| x > thr && x > T::zero()).count()
    }

    /// Orthonormal basis of the kernel, as columns of `V`.
    pub fn kernel(&self, eps: T) -> Vec<Vec<C<T>>> {
        let r = self.rank(eps);
        (r..self.s.len()).map(|j| self.v.column(j)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cone;

    fn hermitian_sample() -> CMatrix<f64> {
        CMatrix::from_rows(&[
            vec![c(2.0, 0.0), c(1.0, 1.0), c(0.0, -0.5)],
            vec![c(1.0, -1.0), c(3.0, 0.0), c(0.25, 0.0)],
            vec![c(0.0, 0.5), c(0.25, 0.0), c(-1.0, 0.0)],
        ])
    }

    #[test]
    fn eigen_reconstructs_hermitian_matrix() {
        let a = hermitian_sample();
        let e = hermitian_eigen(&a);
        assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
        assert!(e.apply(|x| x).approx_eq(&a, 1e-12));
        let vv = &e.vectors.adjoint() * &e.vectors;
        assert!(vv.approx_eq(&CMatrix::identity(3), 1e-12));
        let tr: f64 = e.values.iter().sum();
        assert!((tr - a.trace().re).abs() < 1e-12);
    }

    #[test]
    fn eigen_of_diagonal_is_sorted() {
        let e = hermitian_eigen(&CMatrix::<f64>::real_diagonal(&[3.0, -1.0, 2.0]));
        assert_eq!(e.values, vec![-1.0, 2.0, 3.0]);
    }

    #[test]
    fn clusters_merge_close_values() {
        let e = hermitian_eigen(&CMatrix::<f64>::real_diagonal(&[1.0, 1.0 + 1e-12, 2.0]));
        let cl = e.clusters(1e-9);
        assert_eq!(cl.len(), 2);
        assert_eq!(cl[0].1.len(), 2);
    }

    #[test]
    fn svd_reconstructs() {
        let a = CMatrix::<f64>::from_rows(&[
            vec![c(1.0, 0.0), c(2.0, 1.0)],
            vec![c(0.0, 1.0), c(0.0, 0.0)],
            vec![c(3.0, 0.0), c(-1.0, 0.0)],
        ]);
        let d = svd(&a);
        let sigma = CMatrix::real_diagonal(&d.s);
        let back = &(&d.u * &sigma) * &d.v.adjoint();
        assert!(back.approx_eq(&a, 1e-12));
        assert!(d.s.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn svd_resolves_exact_zero_singular_values() {
        let a = CMatrix::<f64>::from_real_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]);
        let d = svd(&a);
        assert!((d.s[0] - 2.0).abs() < 1e-14);
        assert!(d.s[1] < 1e-15);
        assert_eq!(d.rank(1e-9), 1);
        let k = d.kernel(1e-9);
        assert_eq!(k.len(), 1);
        let ax = a.mul_vec(&k[0]);
        assert!(ax.iter().all(|z| z.norm() < 1e-14));
    }

    #[test]
    fn svd_of_wide_matrix() {
        let a = CMatrix::<f64>::from_rows(&[vec![cone(), c(0.0, 1.0), c(2.0, 0.0)]]);
        let d = svd(&a);
        assert_eq!(d.rank(1e-9), 1);
        assert!((d.s[0] - 6f64.sqrt()).abs() < 1e-12);
        assert_eq!(d.kernel(1e-9).len(), 2);
    }

    #[test]
    fn single_precision_eigen() {
        let a = CMatrix::<f32>::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
        let e = hermitian_eigen(&a);
        assert!((e.values[0] - 1.0).abs() < 1e-5);
        assert!((e.values[1] - 3.0).abs() < 1e-5);
    }
}
