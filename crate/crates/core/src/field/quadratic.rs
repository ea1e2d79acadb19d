use super::rational::{forward_binop, rational_root_candidates};
use super::{Field, FieldSpec, Rational, ScalarError};
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

pub(crate) const fn is_squarefree_nontrivial(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    let m = d.unsigned_abs();
    let mut i = 2u64;
    while i * i <= m {
        if m % (i * i) == 0 {
            return false;
        }
        i += 1;
    }
    true
}

/// Element a + b·√D of the quadratic field Q(√D).
#[derive(Clone, PartialEq, Eq)]
pub struct QSqrt<const D: i64> {
    pub a: Rational,
    pub b: Rational,
}

impl<const D: i64> QSqrt<D> {
    const VALID: () = assert!(is_squarefree_nontrivial(D), "d must be squarefree and not 0 or 1");

    pub fn new(a: Rational, b: Rational) -> QSqrt<D> {
        #[allow(clippy::let_unit_value)]
        let _ = Self::VALID;
        QSqrt { a, b }
    }

    /// The generator √D.
    pub fn root() -> QSqrt<D> {
        QSqrt::new(Rational::zero(), Rational::one())
    }

    pub fn conj(&self) -> QSqrt<D> {
        QSqrt::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm a² - D b².
    pub fn norm(&self) -> Rational {
        self.a.clone() * &self.a - Rational::integer(D) * &self.b * &self.b
    }

    fn add_ref(&self, o: &QSqrt<D>) -> QSqrt<D> {
        QSqrt::new(self.a.clone() + &o.a, self.b.clone() + &o.b)
    }

    fn sub_ref(&self, o: &QSqrt<D>) -> QSqrt<D> {
        QSqrt::new(self.a.clone() - &o.a, self.b.clone() - &o.b)
    }

    fn mul_ref(&self, o: &QSqrt<D>) -> QSqrt<D> {
        let a = self.a.clone() * &o.a + Rational::integer(D) * &self.b * &o.b;
        let b = self.a.clone() * &o.b + self.b.clone() * &o.a;
        QSqrt::new(a, b)
    }
}

forward_binop!([const D: i64] QSqrt<D>, Add, add, AddAssign, add_assign, QSqrt::<D>::add_ref);
forward_binop!([const D: i64] QSqrt<D>, Sub, sub, SubAssign, sub_assign, QSqrt::<D>::sub_ref);
forward_binop!([const D: i64] QSqrt<D>, Mul, mul, MulAssign, mul_assign, QSqrt::<D>::mul_ref);

impl<const D: i64> Neg for QSqrt<D> {
    type Output = QSqrt<D>;
    fn neg(self) -> QSqrt<D> {
        QSqrt::new(-self.a, -self.b)
    }
}

impl<const D: i64> Zero for QSqrt<D> {
    fn zero() -> QSqrt<D> {
        QSqrt::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<const D: i64> One for QSqrt<D> {
    fn one() -> QSqrt<D> {
        QSqrt::new(Rational::one(), Rational::zero())
    }
}

impl<const D: i64> fmt::Display for QSqrt<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt({D})", self.b)
        } else {
            write!(f, "{}+{}*sqrt({D})", self.a, self.b)
        }
    }
}

impl<const D: i64> fmt::Debug for QSqrt<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const D: i64> Field for QSqrt<D> {
    fn inv(&self) -> Option<QSqrt<D>> {
        let n = self.norm().inv()?;
        let c = self.conj();
        Some(QSqrt::new(c.a * &n, c.b * &n))
    }

    fn characteristic() -> u64 {
        0
    }

    fn from_i64(n: i64) -> QSqrt<D> {
        QSqrt::new(Rational::integer(n), Rational::zero())
    }

    fn spec() -> FieldSpec {
        FieldSpec::Qsqrt { d: D }
    }

    fn encode(&self) -> Value {
        json!({"a": self.a.to_string(), "b": self.b.to_string()})
    }

    fn decode(v: &Value) -> Result<QSqrt<D>, ScalarError> {
        let obj = v.as_object().ok_or_else(|| ScalarError::new(v, "expected {\"a\":..,\"b\":..}"))?;
        let part = |k: &str| -> Result<Rational, ScalarError> {
            match obj.get(k) {
                Some(x) => Rational::decode(x),
                None => Err(ScalarError::new(v, format!("missing component {k}"))),
            }
        };
        Ok(QSqrt::new(part("a")?, part("b")?))
    }

    fn sqrt(&self) -> Option<QSqrt<D>> {
        let d = Rational::integer(D);
        let check = |r: QSqrt<D>| if r.clone() * &r == *self { Some(r) } else { None };
        if self.b.is_zero() {
            if let Some(r) = self.a.sqrt() {
                return check(QSqrt::new(r, Rational::zero()));
            }
            let r = (self.a.clone() * d.inv()?).sqrt()?;
            return check(QSqrt::new(Rational::zero(), r));
        }
        let s = self.norm().sqrt()?;
        let half = Rational::new(1, 2);
        for x2 in [(self.a.clone() + &s) * &half, (self.a.clone() - &s) * &half] {
            if let Some(x) = x2.sqrt() {
                if x.is_zero() {
                    continue;
                }
                let y = self.b.clone() * (Rational::integer(2) * &x).inv()?;
                if let Some(r) = check(QSqrt::new(x, y)) {
                    return Some(r);
                }
            }
        }
        None
    }

    fn root_candidates(poly: &[QSqrt<D>]) -> Vec<QSqrt<D>> {
        if poly.iter().any(|c| !c.b.is_zero()) {
            return Vec::new();
        }
        let rat: Vec<Rational> = poly.iter().map(|c| c.a.clone()).collect();
        rational_root_candidates(&rat)
            .into_iter()
            .map(|r| QSqrt::new(r, Rational::zero()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type K = QSqrt<2>;

    fn k(a: i64, b: i64) -> K {
        K::new(Rational::integer(a), Rational::integer(b))
    }

    #[test]
    fn root_squares_to_d() {
        assert_eq!(K::root() * K::root(), K::from_i64(2));
    }

    #[test]
    fn conjugation_inverse() {
        let x = k(1, 1);
        assert_eq!(x.inv().unwrap(), k(-1, 1));
        assert_eq!(x.clone() * x.inv().unwrap(), K::one());
    }

    #[test]
    fn square_roots() {
        // (1+√2)² = 3+2√2
        let r = k(3, 2).sqrt().unwrap();
        assert_eq!(r.clone() * &r, k(3, 2));
        assert_eq!(k(8, 0).sqrt().unwrap() * k(8, 0).sqrt().unwrap(), k(8, 0));
        assert!(k(3, 0).sqrt().is_none());
    }

    #[test]
    fn encode_round_trip() {
        let x = K::new(Rational::new(1, 2), Rational::new(-3, 4));
        assert_eq!(x.encode(), json!({"a": "1/2", "b": "-3/4"}));
        assert_eq!(K::decode(&x.encode()).unwrap(), x);
    }

    proptest! {
        #[test]
        fn field_laws(a in -50i64..50, b in -50i64..50, c in -50i64..50, e in -50i64..50) {
            let x = k(a, b);
            let y = k(c, e);
            prop_assert_eq!(x.clone() * &y, y.clone() * &x);
            if !x.is_zero() {
                prop_assert_eq!(x.clone() * x.inv().unwrap(), K::one());
                prop_assert_eq!((x.clone() * &y) * x.inv().unwrap(), y);
            }
        }
    }
}
