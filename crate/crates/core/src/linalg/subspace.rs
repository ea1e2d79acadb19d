use super::Matrix;
use crate::field::Field;
use std::fmt;

/// A linear subspace of F^ambient, stored as the RREF of a basis.
///
/// The RREF matrix is canonical, so derived equality is subspace equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Subspace<F> {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Subspace<F> {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn from_vectors(ambient: usize, vecs: impl IntoIterator<Item = Vec<F>>) -> Subspace<F> {
        let rows: Vec<Vec<F>> = vecs.into_iter().collect();
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        for r in &rows {
            assert_eq!(r.len(), ambient, "vector length differs from ambient dimension");
        }
        let (red, pivots) = Matrix::from_rows(rows).rref_pivots();
        let k = pivots.len();
        let data = red.data()[..k * ambient].to_vec();
        Subspace { ambient, basis: Matrix::from_vec(k, ambient, data), pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// The canonical RREF basis matrix (one basis vector per row).
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vector(&self, i: usize) -> Vec<F> {
        self.basis.row(i).to_vec()
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vecs()
    }

    /// Coordinates with respect to the RREF basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.ambient, "vector length differs from ambient dimension");
        let coords: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    rest[j] -= c.clone() * b;
                }
            }
        }
        if rest.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Linear combination of the basis vectors.
    pub fn combine(&self, coords: &[F]) -> Vec<F> {
        assert_eq!(coords.len(), self.dim(), "coordinate length");
        let mut v = vec![F::zero(); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                v[j].add_mul(c, b);
            }
        }
        v
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> bool {
        self.ambient == other.ambient && self.basis_vectors().iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_vectors(self.ambient, self.basis_vectors().into_iter().chain(other.basis_vectors()))
    }

    pub fn intersect(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient, other.ambient);
        let (k, l) = (self.dim(), other.dim());
        if k == 0 || l == 0 {
            return Subspace::zero(self.ambient);
        }
        let mut cols = self.basis_vectors();
        cols.extend(other.basis_vectors().into_iter().map(|v| v.into_iter().map(|x| -x).collect()));
        let rel = Matrix::from_cols(self.ambient, &cols).kernel();
        let vecs = rel.basis_vectors().into_iter().map(|c| self.combine(&c[..k]));
        Subspace::from_vectors(self.ambient, vecs)
    }

    /// Functionals vanishing on the subspace, as a subspace of the dual.
    pub fn annihilator(&self) -> Subspace<F> {
        if self.dim() == 0 {
            return Subspace::full(self.ambient);
        }
        self.basis.kernel()
    }

    /// Image of the subspace under a linear map.
    pub fn map(&self, m: &Matrix<F>) -> Subspace<F> {
        Subspace::from_vectors(m.rows(), self.basis_vectors().iter().map(|v| m.apply(v)))
    }

    /// Matrix with the basis vectors as columns (ambient × dim).
    pub fn inclusion(&self) -> Matrix<F> {
        self.basis.transpose()
    }
}

impl<F: fmt::Debug> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) {:?}", self.pivots.len(), self.ambient, self.basis)
    }
}

/// Vectors `v` of F^n with `apply(i, v) = 0` for every map index `i < count`.
///
/// The kernel is shrunk one map at a time, so later maps act on a small
/// basis only.
pub fn common_kernel<F: Field>(
    n: usize,
    count: usize,
    mut apply: impl FnMut(usize, &[F]) -> Vec<F>,
) -> Subspace<F> {
    let mut basis: Vec<Vec<F>> = (0..n)
        .map(|i| {
            let mut e = vec![F::zero(); n];
            e[i] = F::one();
            e
        })
        .collect();
    for i in 0..count {
        if basis.is_empty() {
            break;
        }
        let images: Vec<Vec<F>> = basis.iter().map(|b| apply(i, b)).collect();
        if images.iter().all(|v| v.iter().all(|x| x.is_zero())) {
            continue;
        }
        let rows = images[0].len();
        let rel = Matrix::from_cols(rows, &images).kernel();
        basis = rel
            .basis_vectors()
            .iter()
            .map(|c| {
                let mut v = vec![F::zero(); n];
                for (coef, b) in c.iter().zip(&basis) {
                    if coef.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(b) {
                        x.add_mul(coef, y);
                    }
                }
                v
            })
            .collect();
    }
    Subspace::from_vectors(n, basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_i64(x)).collect()
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::from_vectors(3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::from_vectors(3, vec![v(&[1, 2, 1]), v(&[1, 0, -1]), v(&[2, 2, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::from_vectors(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::from_vectors(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersect(&b), Subspace::from_vectors(3, vec![v(&[0, 1, 0])]));
        assert_eq!(a.sum(&b), Subspace::full(3));
    }

    #[test]
    fn coordinates_and_annihilator() {
        let a = Subspace::from_vectors(3, vec![v(&[1, 2, 3])]);
        assert_eq!(a.coordinates(&v(&[2, 4, 6])), Some(v(&[2])));
        assert_eq!(a.coordinates(&v(&[1, 0, 0])), None);
        let ann = a.annihilator();
        assert_eq!(ann.dim(), 2);
        for f in ann.basis_vectors() {
            let s: Rational = f.iter().zip(a.vector(0)).fold(Rational::from_i64(0), |acc, (x, y)| acc + x.clone() * &y);
            assert_eq!(s, Rational::from_i64(0));
        }
    }

    #[test]
    fn common_kernel_matches_stacked_kernel() {
        let m1 = Matrix::from_rows(vec![v(&[1, -1, 0])]);
        let m2 = Matrix::from_rows(vec![v(&[0, 1, -1])]);
        let k = common_kernel(3, 2, |i, x| if i == 0 { m1.apply(x) } else { m2.apply(x) });
        assert_eq!(k, Subspace::from_vectors(3, vec![v(&[1, 1, 1])]));
    }

    proptest! {
        #[test]
        fn span_equality_agrees_with_membership(
            a in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 3), 1..4),
            b in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 3), 1..4),
        ) {
            let sa = Subspace::from_vectors(3, a.iter().map(|x| v(x)));
            let sb = Subspace::from_vectors(3, b.iter().map(|x| v(x)));
            let mutual = sa.is_subspace_of(&sb) && sb.is_subspace_of(&sa);
            prop_assert_eq!(sa == sb, mutual);
            let meet = sa.intersect(&sb);
            prop_assert!(meet.is_subspace_of(&sa) && meet.is_subspace_of(&sb));
            prop_assert_eq!(meet.dim() + sa.sum(&sb).dim(), sa.dim() + sb.dim());
        }
    }
}
