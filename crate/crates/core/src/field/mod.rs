//! Exact scalar fields.
//!
//! Every algebraic object in the crate is generic over [`Field`]. Three
//! implementations are provided: [`Rational`], [`Fp`] and [`QSqrt`].

mod prime;
mod quadratic;
mod rational;

pub use prime::Fp;
pub use quadratic::QSqrt;
pub use rational::Rational;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// Field descriptor as it appears in structure-constant files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldSpec {
    Q,
    Fp { p: u64 },
    Qsqrt { d: i64 },
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "Q"),
            FieldSpec::Fp { p } => write!(f, "F_{p}"),
            FieldSpec::Qsqrt { d } => write!(f, "Q(sqrt {d})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad scalar {text}: {reason}")]
pub struct ScalarError {
    pub text: String,
    pub reason: String,
}

impl ScalarError {
    pub(crate) fn new(text: impl fmt::Display, reason: impl Into<String>) -> Self {
        ScalarError { text: text.to_string(), reason: reason.into() }
    }
}

/// An exact field.
///
/// Arithmetic is by value; implementations keep `clone` cheap for the
/// common small case.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + for<'a> AddAssign<&'a Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// 0 for fields of characteristic zero.
    fn characteristic() -> u64;

    fn from_i64(n: i64) -> Self;

    fn spec() -> FieldSpec;

    /// Text encoding used by the file format.
    fn encode(&self) -> Value;

    fn decode(v: &Value) -> Result<Self, ScalarError>;

    /// A square root inside the field, if one exists.
    fn sqrt(&self) -> Option<Self>;

    /// Candidate roots of `poly` (coefficients, constant term first) that
    /// the rational-root stage should try. Callers test each candidate.
    fn root_candidates(poly: &[Self]) -> Vec<Self>;

    fn from_rational(num: i64, den: i64) -> Self {
        Self::from_i64(num) * Self::from_i64(den).inv().expect("denominator vanishes in field")
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|o| self.clone() * o)
    }

    /// Adds `a * b` to `self`.
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self += a.clone() * b;
    }
}

/// Roots of `poly` in `F` by candidate testing plus the quadratic formula on
/// what remains. Returns `None` when the polynomial does not split into
/// distinct linear factors over `F`.
pub fn split_roots<F: Field>(poly: &[F]) -> Option<Vec<F>> {
    let mut p = trim(poly.to_vec());
    let mut roots = Vec::new();
    if p.len() <= 1 {
        return Some(roots);
    }
    for c in F::root_candidates(&p) {
        if p.len() <= 1 {
            break;
        }
        if eval(&p, &c).is_zero() {
            p = deflate(&p, &c);
            if eval(&p, &c).is_zero() {
                return None;
            }
            roots.push(c);
        }
    }
    match p.len() {
        0 | 1 => {}
        2 => {
            let r = -(p[0].clone() * p[1].inv()?);
            if roots.contains(&r) {
                return None;
            }
            roots.push(r);
        }
        3 => {
            let two = F::from_i64(2);
            let inv_two_a = (two.clone() * &p[2]).inv()?;
            let disc = p[1].clone() * &p[1] - F::from_i64(4) * &p[2] * &p[0];
            if disc.is_zero() {
                return None;
            }
            let s = disc.sqrt()?;
            for r in [(-p[1].clone() + &s) * &inv_two_a, (-p[1].clone() - &s) * &inv_two_a] {
                if roots.contains(&r) {
                    return None;
                }
                roots.push(r);
            }
        }
        _ => return None,
    }
    Some(roots)
}

fn trim<F: Field>(mut p: Vec<F>) -> Vec<F> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub(crate) fn eval<F: Field>(p: &[F], x: &F) -> F {
    let mut acc = F::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Divides by (x - c), assuming c is a root.
fn deflate<F: Field>(p: &[F], c: &F) -> Vec<F> {
    let n = p.len();
    let mut q = vec![F::zero(); n - 1];
    let mut carry = F::zero();
    for i in (1..n).rev() {
        carry = carry * c + &p[i];
        q[i - 1] = carry.clone();
    }
    trim(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn splits_rational_cubic() {
        // (x-1)(x+2)(x-3) = x^3 - 2x^2 - 5x + 6
        let mut r = split_roots(&[q(6), q(-5), q(-2), q(1)]).unwrap();
        r.sort_by_key(|x| x.to_string());
        assert_eq!(r.len(), 3);
        assert!(r.contains(&q(1)) && r.contains(&q(-2)) && r.contains(&q(3)));
    }

    #[test]
    fn irreducible_quadratic_over_q_is_non_split() {
        assert!(split_roots(&[q(-2), q(0), q(1)]).is_none());
    }

    #[test]
    fn quadratic_splits_over_q_sqrt2() {
        let p = [QSqrt::<2>::from_i64(-2), QSqrt::zero(), QSqrt::one()];
        let r = split_roots(&p).unwrap();
        assert_eq!(r.len(), 2);
        for x in r {
            assert_eq!(x.clone() * &x, QSqrt::from_i64(2));
        }
    }

    #[test]
    fn repeated_root_is_rejected() {
        assert!(split_roots(&[q(1), q(-2), q(1)]).is_none());
    }

    #[test]
    fn roots_over_f5() {
        // x^2 - 1 over F_5
        let p = [Fp::<5>::from_i64(-1), Fp::zero(), Fp::one()];
        let r = split_roots(&p).unwrap();
        assert_eq!(r.len(), 2);
    }
}
