use super::Subspace;
use crate::field::Field;
use std::fmt;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Result of [`solve`].
#[derive(Clone)]
pub struct Solution<F> {
    pub particular: Option<Vec<F>>,
    pub kernel: Subspace<F>,
}

impl<F: fmt::Debug> fmt::Debug for Solution<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.particular.as_ref().map(|v| v.iter().map(|x| format!("{x:?}")).collect::<Vec<_>>());
        write!(f, "Solution {{ particular: {:?}, kernel: {:?} }}", p, self.kernel)
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Matrix<F> {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix<F> {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Matrix<F> {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Matrix<F> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Matrix whose `j`-th column is `cols[j]`, with `rows` rows.
    pub fn from_cols(rows: usize, cols: &[Vec<F>]) -> Matrix<F> {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, v) in c.iter().enumerate() {
                if !v.is_zero() {
                    m.data[i * cols.len() + j] = v.clone();
                }
            }
        }
        m
    }

    /// Builds the matrix of a linear map from its action on basis vectors.
    pub fn from_fn_cols(rows: usize, cols: usize, mut f: impl FnMut(usize) -> Vec<F>) -> Matrix<F> {
        let cs: Vec<Vec<F>> = (0..cols).map(&mut f).collect();
        Matrix::from_cols(rows, &cs)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col_vecs(&self) -> Vec<Vec<F>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j { v.is_one() } else { v.is_zero() }
                })
            })
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    t.data[j * self.rows + i] = v.clone();
                }
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, o.cols);
        let o_nnz: Vec<Vec<usize>> = (0..o.rows)
            .map(|k| (0..o.cols).filter(|&j| !o.get(k, j).is_zero()).collect())
            .collect();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for &j in &o_nnz[k] {
                    out.data[i * o.cols + j].add_mul(a, o.get(k, j));
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let mut out = vec![F::zero(); self.rows];
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                o.add_mul(self.get(i, k), x);
            }
        }
        out
    }

    pub fn add(&self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix sum shape");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix difference shape");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        let data = self.data.iter().map(|a| a.clone() * c).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn pow(&self, e: usize) -> Matrix<F> {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// self += c·o.
    pub fn add_scaled(&mut self, c: &F, o: &Matrix<F>) {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix sum shape");
        if c.is_zero() {
            return;
        }
        for (x, y) in self.data.iter_mut().zip(&o.data) {
            x.add_mul(c, y);
        }
    }

    /// self += c·(a ⊗ b), without forming the Kronecker product.
    pub fn add_kron_scaled(&mut self, c: &F, a: &Matrix<F>, b: &Matrix<F>) {
        assert_eq!((self.rows, self.cols), (a.rows * b.rows, a.cols * b.cols), "kron sum shape");
        let b_nnz: Vec<(usize, usize)> =
            (0..b.rows).flat_map(|k| (0..b.cols).map(move |l| (k, l))).filter(|&(k, l)| !b.get(k, l).is_zero()).collect();
        for i in 0..a.rows {
            for j in 0..a.cols {
                let x = a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let cx = c.clone() * x;
                for &(k, l) in &b_nnz {
                    self.data[(i * b.rows + k) * self.cols + j * b.cols + l].add_mul(&cx, b.get(k, l));
                }
            }
        }
    }

    /// Kronecker product; index (i, j) of the factors maps to i·dim_b + j.
    pub fn kron(&self, b: &Matrix<F>) -> Matrix<F> {
        let (r, c) = (self.rows * b.rows, self.cols * b.cols);
        let mut out = Matrix::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        let v = b.get(k, l);
                        if !v.is_zero() {
                            out.data[(i * b.rows + k) * c + j * b.cols + l] = a.clone() * v;
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row-echelon form with pivot columns.
    pub fn rref_pivots(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in c..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            let mut nz = Vec::new();
            for j in c..m.cols {
                let idx = r * m.cols + j;
                if !m.data[idx].is_zero() {
                    m.data[idx] = m.data[idx].clone() * &inv;
                    nz.push(j);
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for &j in &nz {
                    let delta = f.clone() * &m.data[r * m.cols + j];
                    m.data[i * m.cols + j] -= delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref_pivots().1.len()
    }

    /// Null space as a subspace of F^cols.
    pub fn kernel(&self) -> Subspace<F> {
        let (r, pivots) = self.rref_pivots();
        let mut vecs = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for f in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![F::zero(); self.cols];
            v[f] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            vecs.push(v);
        }
        Subspace::from_vectors(self.cols, vecs)
    }

    /// Column space as a subspace of F^rows.
    pub fn image(&self) -> Subspace<F> {
        Subspace::from_vectors(self.rows, self.col_vecs())
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j).clone();
            }
            aug.data[i * 2 * n + n + i] = F::one();
        }
        let (r, pivots) = aug.rref_pivots();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = r.get(i, n + j).clone();
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn trace(&self) -> F {
        let mut t = F::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i).clone();
        }
        t
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols].iter().map(|x| format!("{x:?}")).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row-echelon form and rank.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, usize) {
    let (r, p) = m.rref_pivots();
    (r, p.len())
}

/// Solves `m x = rhs`: a particular solution with free variables set to zero
/// (if the system is consistent) together with the full kernel.
pub fn solve<F: Field>(m: &Matrix<F>, rhs: &[F]) -> Solution<F> {
    assert_eq!(m.rows(), rhs.len(), "right-hand side length");
    let (r, c) = (m.rows(), m.cols());
    let mut aug = Matrix::zeros(r, c + 1);
    for i in 0..r {
        for j in 0..c {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, c, rhs[i].clone());
    }
    let (red, pivots) = aug.rref_pivots();
    let kernel = m.kernel();
    if pivots.last() == Some(&c) {
        return Solution { particular: None, kernel };
    }
    let mut x = vec![F::zero(); c];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = red.get(i, c).clone();
    }
    Solution { particular: Some(x), kernel }
}

/// Kronecker product of two matrices.
pub fn kron<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    a.kron(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use num_traits::Zero;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn rref_identity_and_zero() {
        let i2 = Matrix::<Rational>::identity(2);
        assert_eq!(rref(&i2), (i2.clone(), 2));
        let z = Matrix::<Rational>::zeros(3, 3);
        assert_eq!(rref(&z), (z.clone(), 0));
    }

    #[test]
    fn rref_rank_one() {
        let (r, k) = rref(&qm(&[&[1, 2], &[2, 4]]));
        assert_eq!(r, qm(&[&[1, 2], &[0, 0]]));
        assert_eq!(k, 1);
    }

    #[test]
    fn solve_examples() {
        let v = vec![q(3), q(-5)];
        let s = solve(&Matrix::identity(2), &v);
        assert_eq!(s.particular, Some(v));
        assert_eq!(s.kernel.dim(), 0);

        let s = solve(&Matrix::<Rational>::zeros(2, 2), &[q(1), q(0)]);
        assert!(s.particular.is_none());

        let s = solve(&qm(&[&[1, 1], &[0, 0]]), &[q(3), q(0)]);
        assert_eq!(s.particular, Some(vec![q(3), q(0)]));
        assert_eq!(s.kernel, Subspace::from_vectors(2, vec![vec![q(1), q(-1)]]));
    }

    #[test]
    fn kron_examples() {
        let i2 = Matrix::<Rational>::identity(2);
        let i3 = Matrix::<Rational>::identity(3);
        assert_eq!(kron(&i2, &i3), Matrix::identity(6));
        assert!(kron(&i2, &Matrix::zeros(2, 3)).is_zero());
        assert_eq!(kron(&qm(&[&[0, 1], &[1, 0]]), &qm(&[&[2]])), qm(&[&[0, 2], &[2, 0]]));
    }

    #[test]
    fn inverse_over_f2() {
        let t = Matrix::from_rows(vec![
            vec![Fp::<2>::new(1), Fp::new(1)],
            vec![Fp::new(1), Fp::new(0)],
        ]);
        let inv = t.inverse().unwrap();
        assert!(t.mul(&inv).is_identity());
        assert!(Matrix::from_rows(vec![vec![Fp::<2>::new(1), Fp::new(1)]; 2]).inverse().is_none());
    }

    fn small_matrix(r: usize, c: usize) -> impl Strategy<Value = Matrix<Rational>> {
        proptest::collection::vec(-3i64..=3, r * c)
            .prop_map(move |v| Matrix::from_vec(r, c, v.into_iter().map(q).collect()))
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in small_matrix(3, 4)) {
            let (r, _) = rref(&m);
            prop_assert_eq!(rref(&r).0, r);
        }

        #[test]
        fn solve_is_exact(m in small_matrix(3, 3), rhs in proptest::collection::vec(-4i64..=4, 3)) {
            let rhs: Vec<Rational> = rhs.into_iter().map(q).collect();
            let s = solve(&m, &rhs);
            if let Some(x) = s.particular {
                prop_assert_eq!(m.apply(&x), rhs);
            }
            for k in s.kernel.basis_vectors() {
                prop_assert!(m.apply(&k).iter().all(|x| x.is_zero()));
            }
            prop_assert_eq!(s.kernel.dim() + m.rank(), 3);
        }

        #[test]
        fn kron_mixed_product(a in small_matrix(2, 2), b in small_matrix(2, 3), c in small_matrix(2, 2), d in small_matrix(3, 2)) {
            prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
        }

        #[test]
        fn inverse_is_two_sided(m in small_matrix(3, 3)) {
            if let Some(inv) = m.inverse() {
                prop_assert!(m.mul(&inv).is_identity());
                prop_assert!(inv.mul(&m).is_identity());
            } else {
                prop_assert!(m.rank() < 3);
            }
        }
    }
}
