//! The four equivalent characterizations of a preunitary matrix.

use serde::Serialize;

use super::eigen::svd;
use super::matrix::CMatrix;
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PreunitaryReport {
    /// `A A* A = A`.
    pub preunitary: bool,
    /// Every singular value is 0 or 1.
    pub partial_isometry: bool,
    /// `A*A` is idempotent.
    pub astar_a_idempotent: bool,
    /// `A A*` is idempotent.
    pub a_astar_idempotent: bool,
}

impl PreunitaryReport {
    pub fn all(&self) -> bool {
        self.preunitary && self.partial_isometry && self.astar_a_idempotent && self.a_astar_idempotent
    }

    pub fn none(&self) -> bool {
        !(self.preunitary || self.partial_isometry || self.astar_a_idempotent || self.a_astar_idempotent)
    }

    /// Whether the four verdicts coincide.
    pub fn consistent(&self) -> bool {
        self.all() || self.none()
    }
}

fn is_idempotent<T: Real>(m: &CMatrix<T>, eps: T) -> bool {
    let nm = m.norm();
    (m * m).distance(m) <= eps * (T::one() + nm * nm)
}

/// Evaluates each condition independently at relative tolerance `eps`.
pub fn is_preunitary<T: Real>(a: &CMatrix<T>, eps: T) -> PreunitaryReport {
    let adj = a.adjoint();
    let na = a.norm();
    let aaa = &(a * &adj) * a;
    let preunitary = aaa.distance(a) <= eps * (T::one() + na * na * na);
    let d = svd(a);
    let partial_isometry = d.s.iter().all(|&x| x <= eps || (x - T::one()).abs() <= eps);
    PreunitaryReport {
        preunitary,
        partial_isometry,
        astar_a_idempotent: is_idempotent(&(&adj * a), eps),
        a_astar_idempotent: is_idempotent(&(a * &adj), eps),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projection_passes() {
        let r = is_preunitary(&CMatrix::<f64>::real_diagonal(&[1.0, 0.0]), 1e-9);
        assert!(r.all());
    }

    #[test]
    fn scaled_unit_fails() {
        let a = CMatrix::<f64>::from_real_rows(&[vec![0.0, 2.0], vec![0.0, 0.0]]);
        let r = is_preunitary(&a, 1e-9);
        assert!(r.none());
        assert!((&(&a * &a.adjoint()) * &a).approx_eq(&a.scale_real(4.0), 1e-12));
    }

    #[test]
    fn matrix_unit_passes() {
        let a = CMatrix::<f64>::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]);
        assert!(is_preunitary(&a, 1e-9).all());
    }

    #[test]
    fn rank_one_projection_sum_fails() {
        let a = CMatrix::<f64>::from_real_rows(&[vec![1.0, 1.0], vec![0.0, 0.0]]);
        assert!(is_preunitary(&a, 1e-9).none());
    }

    #[test]
    fn zero_matrix_passes() {
        assert!(is_preunitary(&CMatrix::<f64>::zeros(3, 2), 1e-9).all());
    }
}
