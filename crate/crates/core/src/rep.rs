//! Matrix representations of a finite semigroup.

use serde::Serialize;

use crate::linalg::{is_preunitary, CMatrix, PreunitaryReport};
use crate::scalar::{Real, C};
use crate::semigroup::SemigroupTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RepKind {
    LeftStandard,
    RightStandard,
    SchutzenbergerLeft,
    SchutzenbergerRight,
    Irreducible,
    Contragredient,
    /// `s ↦ π(s*)ᵀ`.
    DualStar,
    /// An equivalent representation with `π(s*) = π(s)*`.
    StarForm,
    Other,
}

/// Images `π(s)` for every element `s` of the source semigroup, by index.
#[derive(Debug, Clone)]
pub struct MatrixRep<T: Real = f64> {
    pub dim: usize,
    pub images: Vec<CMatrix<T>>,
    pub kind: RepKind,
    /// J-class index of the apex, when known.
    pub apex: Option<usize>,
}

impl<T: Real> MatrixRep<T> {
    pub fn new(kind: RepKind, dim: usize, images: Vec<CMatrix<T>>) -> Self {
        debug_assert!(images.iter().all(|m| m.shape() == (dim, dim)));
        MatrixRep {
            dim,
            images,
            kind,
            apex: None,
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, s: usize) -> &CMatrix<T> {
        &self.images[s]
    }

    /// `max_{a,b} ‖π(a)π(b) − π(ab)‖`.
    pub fn multiplicativity_defect(&self, s: &SemigroupTable) -> T {
        let mut worst = T::zero();
        for a in s.elements() {
            for b in s.elements() {
                let d = (&self.images[a] * &self.images[b]).distance(&self.images[s.mul(a, b)]);
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Norm of the image of the declared zero (0 when there is none).
    pub fn zero_defect(&self, s: &SemigroupTable) -> T {
        s.zero().map_or(T::zero(), |z| self.images[z].norm())
    }

    /// Multiplicative and proper within `tol`, relative to the image scale.
    pub fn is_representation(&self, s: &SemigroupTable, tol: T) -> bool {
        let scale = self.images.iter().map(|m| m.norm()).fold(T::one(), T::max);
        self.multiplicativity_defect(s) <= tol * scale * scale && self.zero_defect(s) <= tol * scale
    }

    pub fn preunitary_reports(&self, eps: T) -> Vec<PreunitaryReport> {
        self.images.iter().map(|m| is_preunitary(m, eps)).collect()
    }

    /// First element whose image is not preunitary (`AA*A ≠ A`).
    pub fn first_non_preunitary(&self, eps: T) -> Option<usize> {
        self.images.iter().position(|m| !is_preunitary(m, eps).preunitary)
    }

    pub fn is_semiunitary(&self, eps: T) -> bool {
        self.first_non_preunitary(eps).is_none()
    }

    /// `max_s ‖π(s*) − π(s)*‖`.
    pub fn star_defect(&self, star: &[usize]) -> T {
        crate::group_repr::star_defect(&self.images, star)
    }

    pub fn character(&self) -> Vec<C<T>> {
        self.images.iter().map(|m| m.trace()).collect()
    }

    /// `s ↦ B π(s) B⁻¹`.
    pub fn conjugated(&self, b: &CMatrix<T>, b_inv: &CMatrix<T>, kind: RepKind) -> Self {
        let mut out = MatrixRep::new(kind, self.dim, self.images.iter().map(|m| &(b * m) * b_inv).collect());
        out.apex = self.apex;
        out
    }

    /// `s ↦ π(s*)ᵀ`, a representation whenever `star` is an involution.
    pub fn dual_star(&self, star: &[usize]) -> Self {
        let mut out = MatrixRep::new(
            RepKind::DualStar,
            self.dim,
            star.iter().map(|&t| self.images[t].transpose()).collect(),
        );
        out.apex = self.apex;
        out
    }

    pub fn direct_sum(reps: &[MatrixRep<T>]) -> Self {
        let n = reps.first().map_or(0, |r| r.len());
        let dim = reps.iter().map(|r| r.dim).sum();
        let images = (0..n)
            .map(|s| CMatrix::block_diag(&reps.iter().map(|r| r.images[s].clone()).collect::<Vec<_>>()))
            .collect();
        MatrixRep::new(RepKind::Other, dim, images)
    }
}
