//! Intertwiner spaces `{X : A_s X = X B_s for all s}` of two matrix families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::eigen::svd;
use super::matrix::CMatrix;
use crate::scalar::{c, czero, Real, C};

/// Orthonormal (Frobenius) basis of an intertwiner space.
#[derive(Debug, Clone)]
pub struct IntertwinerSpace<T: Real = f64> {
    pub rows: usize,
    pub cols: usize,
    pub basis: Vec<CMatrix<T>>,
}

/// Householder QR of `m`, returning the `n x n` triangular factor
/// (zero-padded when `m` has fewer rows than columns).
fn triangular_factor<T: Real>(mut a: CMatrix<T>) -> CMatrix<T> {
    let (m, n) = a.shape();
    for k in 0..n.min(m) {
        let xnorm = (k..m).map(|i| a[(i, k)].norm_sqr()).sum::<T>().sqrt();
        if xnorm == T::zero() {
            continue;
        }
        let x0 = a[(k, k)];
        let phase = if x0.norm() > T::zero() {
            x0 / x0.norm()
        } else {
            c(T::one(), T::zero())
        };
        let alpha = -phase * xnorm;
        let mut v: Vec<C<T>> = (k..m).map(|i| a[(i, k)]).collect();
        v[0] -= alpha;
        let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        if vnorm == T::zero() {
            continue;
        }
        for z in &mut v {
            *z /= vnorm;
        }
        for j in k..n {
            let dot: C<T> = (k..m).map(|i| v[i - k].conj() * a[(i, j)]).sum();
            for i in k..m {
                let d = v[i - k] * dot * T::lit(2.0);
                a[(i, j)] -= d;
            }
        }
    }
    CMatrix::from_fn(n, n, |i, j| if i < m && j >= i { a[(i, j)] } else { czero() })
}

/// Accumulates the rows of a tall linear system into an `n x n` triangular
/// factor with the same kernel, keeping memory bounded.
struct RowCompressor<T: Real> {
    n: usize,
    r: Option<CMatrix<T>>,
    pending: Vec<C<T>>,
}

impl<T: Real> RowCompressor<T> {
    fn new(n: usize) -> Self {
        RowCompressor {
            n,
            r: None,
            pending: Vec::new(),
        }
    }

    fn push_row(&mut self, row: &[C<T>]) {
        self.pending.extend_from_slice(row);
        if self.pending.len() >= 4 * self.n * self.n.max(1) {
            self.flush();
        }
    }

    fn flush(&mut self) {
        if self.pending.is_empty() {
            return;
        }
        let mut data = self.r.take().map(|r| r.data().to_vec()).unwrap_or_default();
        data.append(&mut self.pending);
        let rows = data.len() / self.n.max(1);
        let stacked = CMatrix::new(rows, self.n, data).expect("finite system");
        self.r = Some(triangular_factor(stacked));
    }

    fn finish(mut self) -> CMatrix<T> {
        self.flush();
        self.r.unwrap_or_else(|| CMatrix::zeros(self.n, self.n))
    }
}

/// Solves `A_s X = X B_s` for all `s`, with `A_s` of size `d1 x d1` and `B_s`
/// of size `d2 x d2`. Singular values of the stacked system below `eps`
/// times the largest are treated as zero.
pub fn solve_intertwiners<T: Real>(
    a: &[CMatrix<T>],
    b: &[CMatrix<T>],
    d1: usize,
    d2: usize,
    eps: T,
) -> IntertwinerSpace<T> {
    assert_eq!(a.len(), b.len(), "families must be indexed by the same set");
    let n = d1 * d2;
    let mut comp = RowCompressor::new(n);
    let mut row = vec![czero(); n];
    for (am, bm) in a.iter().zip(b) {
        assert_eq!(am.shape(), (d1, d1));
        assert_eq!(bm.shape(), (d2, d2));
        for i in 0..d1 {
            for j in 0..d2 {
                row.iter_mut().for_each(|z| *z = czero());
                for k in 0..d1 {
                    row[k * d2 + j] += am[(i, k)];
                }
                for k in 0..d2 {
                    row[i * d2 + k] -= bm[(k, j)];
                }
                comp.push_row(&row);
            }
        }
    }
    let r = comp.finish();
    let d = svd(&r);
    // Threshold relative to the input scale, so rounding residue in an
    // otherwise vanishing system is not mistaken for rank.
    let scale = a.iter().chain(b).map(|m| m.norm()).fold(d.max(), T::max);
    let thr = eps * scale;
    let rank = d.s.iter().filter(|&&x| x > thr).count();
    let kernel: Vec<Vec<C<T>>> = (rank..n).map(|j| d.v.column(j)).collect();
    IntertwinerSpace {
        rows: d1,
        cols: d2,
        basis: kernel
            .into_iter()
            .map(|v| CMatrix::new(d1, d2, v).expect("finite kernel vector"))
            .collect(),
    }
}

impl<T: Real> IntertwinerSpace<T> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Random combinations of basis elements, deterministic in `seed`.
    pub fn generic_element(&self, seed: u64) -> CMatrix<T> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut x = CMatrix::zeros(self.rows, self.cols);
        for b in &self.basis {
            let w = c(T::lit(rng.gen_range(-1.0..1.0)), T::lit(rng.gen_range(-1.0..1.0)));
            x = &x + &b.scale(w);
        }
        x
    }

    /// An invertible element, if the space contains one. A generic
    /// combination is invertible whenever any element is, so a few draws
    /// decide the question with overwhelming probability.
    pub fn invertible_element(&self, eps: T) -> Option<CMatrix<T>> {
        if self.rows != self.cols || self.basis.is_empty() {
            return (self.rows == 0 && self.cols == 0).then(|| CMatrix::zeros(0, 0));
        }
        (0..4).map(|seed| self.generic_element(seed)).find(|x| {
            let d = svd(x);
            d.rank(eps.sqrt()) == self.rows
        })
    }
}

/// Largest defect `max_s ‖A_s X − X B_s‖`.
pub fn intertwining_defect<T: Real>(a: &[CMatrix<T>], b: &[CMatrix<T>], x: &CMatrix<T>) -> T {
    a.iter()
        .zip(b)
        .map(|(am, bm)| (am * x).distance(&(x * bm)))
        .fold(T::zero(), T::max)
}
