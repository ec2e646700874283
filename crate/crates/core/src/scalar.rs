//! Scalar abstractions.
//!
//! Numerical kernels are generic over a real floating type `T` and work on
//! `Complex<T>` entries. Exact decisions (ranks of integer matrices) are
//! generic over an exact field; [`Rational`] is the one used in practice.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Real floating point type backing the complex matrix kernel: f32 or f64.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + NumAssign + Sum + Default + Debug + Display + Send + Sync + 'static
{
    /// Relative tolerance used when the caller does not supply one.
    fn default_eps() -> Self;

    /// Lossy conversion from `f64`, used for literals and random draws.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }
}

impl Real for f32 {
    fn default_eps() -> Self {
        1e-4
    }
}

impl Real for f64 {
    fn default_eps() -> Self {
        1e-9
    }
}

/// Exact field used for rank decisions.
pub trait ExactField: Clone + PartialEq + Debug + num_traits::Zero + num_traits::One + num_traits::Num {
    fn from_int(v: i64) -> Self;
}

/// Arbitrary precision rational numbers.
pub type Rational = Ratio<BigInt>;

impl ExactField for Rational {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }
}

impl ExactField for Ratio<i128> {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(v as i128)
    }
}

pub type C<T> = Complex<T>;

#[inline]
pub(crate) fn c<T: Real>(re: T, im: T) -> C<T> {
    Complex::new(re, im)
}

#[inline]
pub(crate) fn czero<T: Real>() -> C<T> {
    Complex::new(T::zero(), T::zero())
}

#[inline]
pub(crate) fn cone<T: Real>() -> C<T> {
    Complex::new(T::one(), T::zero())
}

/// `exp(2πi k / n)`.
pub fn root_of_unity<T: Real>(k: i64, n: i64) -> C<T> {
    let theta = T::TAU() * T::lit(k as f64) / T::lit(n as f64);
    c(theta.cos(), theta.sin())
}

/// Rank of a dense matrix over an exact field by Gaussian elimination.
pub fn exact_rank<F: ExactField>(rows: &[Vec<F>]) -> usize {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = F::one() / m[rank][col].clone();
        for k in col..ncols {
            m[rank][k] = m[rank][k].clone() * inv.clone();
        }
        for r in 0..nrows {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for k in col..ncols {
                    let delta = factor.clone() * m[rank][k].clone();
                    m[r][k] = m[r][k].clone() - delta;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Rank of an integer matrix, computed exactly over the rationals.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let q: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| Rational::from_int(v)).collect())
        .collect();
    exact_rank(&q)
}
