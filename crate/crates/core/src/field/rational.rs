use super::{Field, FieldSpec, ScalarError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Exact rational number.
///
/// Values that fit an `i64` numerator and denominator stay on a small
/// fast path; larger values fall back to [`BigRational`]. The representation
/// is canonical (lowest terms, positive denominator, small whenever possible),
/// so structural equality is value equality.
#[derive(Clone)]
pub struct Rational(Repr);

#[derive(Clone)]
enum Repr {
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        Rational::from_i128(num as i128, den as i128)
    }

    pub fn integer(n: i64) -> Rational {
        Rational(Repr::Small(n, 1))
    }

    fn from_i128(mut n: i128, mut d: i128) -> Rational {
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) => Rational(Repr::Small(a, b)),
            _ => Rational(Repr::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))),
        }
    }

    pub fn from_big(r: BigRational) -> Rational {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(a), Some(b)) => Rational(Repr::Small(a, b)),
            _ => Rational(Repr::Big(Box::new(r))),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(a, b) => BigRational::new_raw(BigInt::from(*a), BigInt::from(*b)),
            Repr::Big(r) => (**r).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(a, _) => BigInt::from(*a),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, b) => BigInt::from(*b),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, b) => *b == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    fn add_ref(&self, o: &Rational) -> Rational {
        match (&self.0, &o.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if b == d {
                    Rational::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    match (a * d).checked_add(c * b) {
                        Some(n) => Rational::from_i128(n, b * d),
                        None => Rational::from_big(self.to_big() + o.to_big()),
                    }
                }
            }
            _ => Rational::from_big(self.to_big() + o.to_big()),
        }
    }

    fn mul_ref(&self, o: &Rational) -> Rational {
        match (&self.0, &o.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *a == 0 || *c == 0 {
                    return Rational::zero();
                }
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * o.to_big()),
        }
    }

    fn neg_ref(&self) -> Rational {
        match &self.0 {
            Repr::Small(a, b) if *a != i64::MIN => Rational(Repr::Small(-a, *b)),
            _ => Rational::from_big(-self.to_big()),
        }
    }
}

impl PartialEq for Rational {
    fn eq(&self, o: &Rational) -> bool {
        match (&self.0, &o.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl PartialOrd for Rational {
    fn partial_cmp(&self, o: &Rational) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Rational {
    fn cmp(&self, o: &Rational) -> std::cmp::Ordering {
        match (&self.0, &o.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&o.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(a, 1) => write!(f, "{a}"),
            Repr::Small(a, b) => write!(f, "{a}/{b}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Rational, ScalarError> {
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n = BigInt::from_str(n).map_err(|_| ScalarError::new(s, "numerator is not an integer"))?;
        let d = BigInt::from_str(d).map_err(|_| ScalarError::new(s, "denominator is not an integer"))?;
        if d.is_zero() {
            return Err(ScalarError::new(s, "zero denominator"));
        }
        Ok(Rational::from_big(BigRational::new(n, d)))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Rational {
        Rational::integer(n)
    }
}

impl Zero for Rational {
    fn zero() -> Rational {
        Rational(Repr::Small(0, 1))
    }

    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }
}

impl One for Rational {
    fn one() -> Rational {
        Rational(Repr::Small(1, 1))
    }
}

macro_rules! forward_binop {
    ([$($g:tt)*] $t:ty, $tr:ident, $m:ident, $tra:ident, $ma:ident, $f:expr) => {
        impl<$($g)*> $tr for $t {
            type Output = $t;
            fn $m(self, o: $t) -> $t {
                $f(&self, &o)
            }
        }
        impl<'a, $($g)*> $tr<&'a $t> for $t {
            type Output = $t;
            fn $m(self, o: &'a $t) -> $t {
                $f(&self, o)
            }
        }
        impl<$($g)*> $tra for $t {
            fn $ma(&mut self, o: $t) {
                *self = $f(self, &o);
            }
        }
        impl<'a, $($g)*> $tra<&'a $t> for $t {
            fn $ma(&mut self, o: &'a $t) {
                *self = $f(self, o);
            }
        }
    };
    ($t:ty, $tr:ident, $m:ident, $tra:ident, $ma:ident, $f:expr) => {
        forward_binop!([] $t, $tr, $m, $tra, $ma, $f);
    };
}
pub(crate) use forward_binop;

forward_binop!(Rational, Add, add, AddAssign, add_assign, Rational::add_ref);
forward_binop!(Rational, Sub, sub, SubAssign, sub_assign, |a: &Rational, b: &Rational| a
    .add_ref(&b.neg_ref()));
forward_binop!(Rational, Mul, mul, MulAssign, mul_assign, Rational::mul_ref);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_ref()
    }
}

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i * i != n {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    Some(out)
}

/// Rational root theorem candidates for a polynomial with rational
/// coefficients.
pub(crate) fn rational_root_candidates(poly: &[Rational]) -> Vec<Rational> {
    let mut lcm = BigInt::one();
    for c in poly {
        lcm = lcm.lcm(&c.denom());
    }
    let ints: Vec<BigInt> = poly
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut out = Vec::new();
    let low = match ints.iter().position(|c| !c.is_zero()) {
        Some(i) => i,
        None => return out,
    };
    let high = ints.iter().rposition(|c| !c.is_zero()).unwrap();
    if low > 0 {
        out.push(Rational::zero());
    }
    if low == high {
        return out;
    }
    let ps = divisors(&ints[low]).unwrap_or_else(|| vec![1]);
    let qs = divisors(&ints[high]).unwrap_or_else(|| vec![1]);
    let mut seen = Vec::new();
    for q in &qs {
        for p in &ps {
            let r = Rational::from_i128(*p as i128, *q as i128);
            if !seen.contains(&r) {
                seen.push(r.clone());
                out.push(r.clone());
                out.push(-r);
            }
        }
    }
    out
}

impl Field for Rational {
    fn inv(&self) -> Option<Rational> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(a, b) => Some(Rational::from_i128(*b as i128, *a as i128)),
            Repr::Big(r) => Some(Rational::from_big(r.recip())),
        }
    }

    fn characteristic() -> u64 {
        0
    }

    fn from_i64(n: i64) -> Rational {
        Rational::integer(n)
    }

    fn from_rational(num: i64, den: i64) -> Rational {
        Rational::new(num, den)
    }

    fn spec() -> FieldSpec {
        FieldSpec::Q
    }

    fn encode(&self) -> Value {
        Value::String(self.to_string())
    }

    fn decode(v: &Value) -> Result<Rational, ScalarError> {
        match v {
            Value::String(s) => s.parse(),
            Value::Number(n) if n.is_i64() => Ok(Rational::integer(n.as_i64().unwrap())),
            other => Err(ScalarError::new(other, "expected \"p/q\" string")),
        }
    }

    fn sqrt(&self) -> Option<Rational> {
        let (n, d) = (self.numer(), self.denom());
        if n.is_negative() {
            return None;
        }
        let (rn, rd) = (n.sqrt(), d.sqrt());
        if &rn * &rn == n && &rd * &rd == d {
            Some(Rational::from_big(BigRational::new(rn, rd)))
        } else {
            None
        }
    }

    fn root_candidates(poly: &[Rational]) -> Vec<Rational> {
        rational_root_candidates(poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_form() {
        assert_eq!(Rational::new(2, -4), Rational::new(-1, 2));
        assert_eq!(Rational::new(0, -7), Rational::zero());
        assert_eq!(Rational::new(6, 3).to_string(), "2");
        assert_eq!(Rational::new(-6, 4).to_string(), "-3/2");
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rational::integer(i64::MAX);
        let sq = big.clone() * &big;
        assert!(matches!(sq.0, Repr::Big(_)));
        let back = sq * big.inv().unwrap();
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(..)));
        let m = Rational::integer(i64::MIN);
        assert_eq!(-(-m.clone()), m);
    }

    #[test]
    fn parse_and_encode() {
        let r: Rational = "-10/4".parse().unwrap();
        assert_eq!(r.encode(), Value::String("-5/2".into()));
        assert_eq!(Rational::decode(&Value::String("7".into())).unwrap(), Rational::integer(7));
        assert!(Rational::decode(&Value::String("1/0".into())).is_err());
        assert!(Rational::decode(&Value::String("x".into())).is_err());
    }

    #[test]
    fn sqrt_exact_only() {
        assert_eq!(Rational::new(9, 4).sqrt(), Some(Rational::new(3, 2)));
        assert_eq!(Rational::integer(2).sqrt(), None);
        assert_eq!(Rational::integer(-4).sqrt(), None);
    }

    fn rat() -> impl Strategy<Value = Rational> {
        (any::<i64>(), 1i64..i64::MAX).prop_map(|(a, b)| Rational::new(a, b))
    }

    proptest! {
        #[test]
        fn field_laws(a in rat(), b in rat(), c in rat()) {
            prop_assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
            prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + a.clone() * &c);
            prop_assert_eq!(a.clone() - &a, Rational::zero());
            if !a.is_zero() {
                prop_assert_eq!(a.clone() * a.inv().unwrap(), Rational::one());
            }
        }

        #[test]
        fn matches_bigrational(a in rat(), b in rat()) {
            prop_assert_eq!((a.clone() * &b).to_big(), a.to_big() * b.to_big());
            prop_assert_eq!((a.clone() + &b).to_big(), a.to_big() + b.to_big());
        }

        #[test]
        fn text_round_trip(a in rat()) {
            prop_assert_eq!(Rational::decode(&a.encode()).unwrap(), a);
        }
    }
}
