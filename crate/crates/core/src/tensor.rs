//! Sparse helpers for flattened tensors.

use crate::field::Field;
use std::collections::HashMap;

/// Sparse element of A⊗A: (left index, right index, coefficient).
pub type Tensor2<F> = Vec<(usize, usize, F)>;

/// Sparse accumulator over a flattened index space.
#[derive(Clone, Debug)]
pub(crate) struct Acc<F> {
    map: HashMap<usize, F>,
}

impl<F: Field> Acc<F> {
    pub fn new() -> Acc<F> {
        Acc { map: HashMap::new() }
    }

    pub fn add(&mut self, k: usize, c: F) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&k) {
            Some(v) => *v += c,
            None => {
                self.map.insert(k, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.map.values().all(|v| v.is_zero())
    }

    pub fn clear(&mut self) {
        self.map.clear();
    }

    pub fn into_sorted(self) -> Vec<(usize, F)> {
        let mut v: Vec<(usize, F)> = self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by_key(|e| e.0);
        v
    }
}

pub(crate) fn nonzero<F: Field>(v: &[F]) -> impl Iterator<Item = (usize, &F)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero())
}

pub(crate) fn basis_vec<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

pub(crate) fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    let mut s = F::zero();
    for (x, y) in a.iter().zip(b) {
        s.add_mul(x, y);
    }
    s
}

pub(crate) fn axpy<F: Field>(y: &mut [F], a: &F, x: &[F]) {
    if a.is_zero() {
        return;
    }
    for (u, v) in y.iter_mut().zip(x) {
        u.add_mul(a, v);
    }
}

pub(crate) fn sub_vec<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y).collect()
}

pub(crate) fn scale_vec<F: Field>(c: &F, a: &[F]) -> Vec<F> {
    a.iter().map(|x| c.clone() * x).collect()
}

/// Flattens a sparse two-leg tensor with right factor dimension `m`.
pub fn flatten2<F: Field>(t: &[(usize, usize, F)], n: usize, m: usize) -> Vec<F> {
    let mut out = vec![F::zero(); n * m];
    for (i, j, c) in t {
        out[i * m + j] += c;
    }
    out
}

/// Merges duplicate entries and drops zeros.
pub fn normalize2<F: Field>(t: impl IntoIterator<Item = (usize, usize, F)>, m: usize) -> Tensor2<F> {
    let mut acc = Acc::new();
    for (i, j, c) in t {
        acc.add(i * m + j, c);
    }
    acc.into_sorted().into_iter().map(|(k, c)| (k / m, k % m, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    #[test]
    fn accumulator_cancels() {
        let mut a: Acc<Q> = Acc::new();
        a.add(3, Q::from_i64(2));
        a.add(3, Q::from_i64(-2));
        assert!(a.is_zero());
        a.add(1, Q::from_i64(5));
        assert_eq!(a.into_sorted(), vec![(1, Q::from_i64(5))]);
    }

    #[test]
    fn normalize_merges() {
        let t = vec![(0, 1, Q::from_i64(1)), (0, 1, Q::from_i64(2)), (1, 0, Q::from_i64(0))];
        assert_eq!(normalize2(t, 2), vec![(0, 1, Q::from_i64(3))]);
    }
}
