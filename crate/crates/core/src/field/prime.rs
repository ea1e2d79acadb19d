use super::rational::forward_binop;
use super::{Field, FieldSpec, ScalarError};
use num_traits::{One, Zero};
use serde_json::Value;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

pub(crate) const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= p {
        if p % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

/// Element of the prime field F_P, stored in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const VALID: () = assert!(is_prime(P) && P < (1 << 32), "modulus must be a prime below 2^32");

    pub fn new(v: i64) -> Fp<P> {
        #[allow(clippy::let_unit_value)]
        let _ = Self::VALID;
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Fp<P> {
        let mut base = self.0;
        let mut acc = 1u64 % P;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Fp(acc)
    }

    fn add_ref(&self, o: &Fp<P>) -> Fp<P> {
        Fp((self.0 + o.0) % P)
    }

    fn sub_ref(&self, o: &Fp<P>) -> Fp<P> {
        Fp((self.0 + P - o.0) % P)
    }

    fn mul_ref(&self, o: &Fp<P>) -> Fp<P> {
        Fp(self.0 * o.0 % P)
    }

    fn tonelli_shanks(self) -> Option<Fp<P>> {
        if self.0 == 0 || P == 2 {
            return Some(self);
        }
        if self.pow((P - 1) / 2).0 != 1 {
            return None;
        }
        if P % 4 == 3 {
            return Some(self.pow((P + 1) / 4));
        }
        let (mut q, mut s) = (P - 1, 0u32);
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = Fp::<P>(2);
        while z.pow((P - 1) / 2).0 != P - 1 {
            z = Fp(z.0 + 1);
        }
        let mut m = s;
        let mut c = z.pow(q);
        let mut t = self.pow(q);
        let mut r = self.pow(q.div_ceil(2));
        while t.0 != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2.0 != 1 {
                t2 = t2 * t2;
                i += 1;
            }
            let b = c.pow(1 << (m - i - 1));
            m = i;
            c = b * b;
            t = t * c;
            r = r * b;
        }
        Some(r)
    }
}

forward_binop!([const P: u64] Fp<P>, Add, add, AddAssign, add_assign, Fp::<P>::add_ref);
forward_binop!([const P: u64] Fp<P>, Sub, sub, SubAssign, sub_assign, Fp::<P>::sub_ref);
forward_binop!([const P: u64] Fp<P>, Mul, mul, MulAssign, mul_assign, Fp::<P>::mul_ref);

impl<const P: u64> Neg for Fp<P> {
    type Output = Fp<P>;
    fn neg(self) -> Fp<P> {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Fp<P> {
        Fp::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Fp<P> {
        Fp::new(1)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.0, P)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn inv(&self) -> Option<Fp<P>> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn characteristic() -> u64 {
        P
    }

    fn from_i64(n: i64) -> Fp<P> {
        Fp::new(n)
    }

    fn spec() -> FieldSpec {
        FieldSpec::Fp { p: P }
    }

    fn encode(&self) -> Value {
        Value::String(self.0.to_string())
    }

    fn decode(v: &Value) -> Result<Fp<P>, ScalarError> {
        let n = match v {
            Value::String(s) => s.trim().parse::<u64>().map_err(|_| ScalarError::new(s, "expected a decimal residue"))?,
            Value::Number(n) => n.as_u64().ok_or_else(|| ScalarError::new(n, "expected a decimal residue"))?,
            other => return Err(ScalarError::new(other, "expected a decimal residue")),
        };
        if n >= P {
            return Err(ScalarError::new(n, format!("residue outside [0, {P})")));
        }
        Ok(Fp::new(n as i64))
    }

    fn sqrt(&self) -> Option<Fp<P>> {
        self.tonelli_shanks()
    }

    fn root_candidates(_poly: &[Fp<P>]) -> Vec<Fp<P>> {
        if P <= 100_000 {
            (0..P).map(|v| Fp(v)).collect()
        } else {
            Vec::new()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn arithmetic_mod_7() {
        let a = Fp::<7>::new(5);
        let b = Fp::<7>::new(4);
        assert_eq!((a + b).value(), 2);
        assert_eq!((a - b).value(), 1);
        assert_eq!((b - a).value(), 6);
        assert_eq!((a * b).value(), 6);
        assert_eq!(a * a.inv().unwrap(), Fp::one());
        assert_eq!(Fp::<7>::new(-1).value(), 6);
    }

    #[test]
    fn characteristic_two() {
        let one = Fp::<2>::one();
        assert!((one + one).is_zero());
        assert_eq!(-one, one);
    }

    #[test]
    fn decode_rejects_out_of_range() {
        assert!(Fp::<5>::decode(&Value::String("5".into())).is_err());
        assert_eq!(Fp::<5>::decode(&Value::String("3".into())).unwrap().value(), 3);
    }

    proptest! {
        #[test]
        fn sqrt_is_a_square_root(v in 0i64..1000) {
            let x = Fp::<13>::new(v);
            if let Some(r) = x.sqrt() {
                prop_assert_eq!(r * r, x);
            } else {
                prop_assert!((0..13).all(|k| Fp::<13>::new(k) * Fp::<13>::new(k) != x));
            }
            let y = Fp::<97>::new(v);
            if let Some(r) = y.sqrt() {
                prop_assert_eq!(r * r, y);
            }
        }
    }
}
