//! Weak bialgebras given by structure constants.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{common_kernel, Matrix, Subspace};
use crate::report::{first_failure, pairs, singles, Report};
use crate::tensor::{basis_vec, dot, nonzero, normalize2, Acc, Tensor2};

/// A finite-dimensional weak bialgebra over `F`.
///
/// `mult[i * n + j]` lists the nonzero (k, μ[i][j][k]) and `comult[i]` the
/// nonzero (j, k, Δ[i][j][k]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakBialgebra<F> {
    labels: Vec<String>,
    mult: Vec<Vec<(usize, F)>>,
    unit: Vec<F>,
    comult: Vec<Tensor2<F>>,
    counit: Vec<F>,
    delta_one: Tensor2<F>,
    eps_form: Matrix<F>,
}

/// The four Sweedler arrows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arrow {
    /// φ⇀a = a1⟨φ,a2⟩
    FunctionalOnElement,
    /// a⟵φ = ⟨φ,a1⟩a2
    ElementByFunctional,
    /// a⇀φ, with ⟨a⇀φ,x⟩ = φ(xa)
    ElementOnFunctional,
    /// φ⟵a, with ⟨φ⟵a,x⟩ = φ(ax)
    FunctionalByElement,
}

/// Matrices of Π^L, Π^R, Π̄^L, Π̄^R (column j is the image of e_j).
#[derive(Clone, Debug)]
pub struct Projections<F> {
    pub pi_l: Matrix<F>,
    pub pi_r: Matrix<F>,
    pub pibar_l: Matrix<F>,
    pub pibar_r: Matrix<F>,
}

#[derive(Clone, Debug)]
pub struct CanonicalSubalgebras<F> {
    pub left: Subspace<F>,
    pub right: Subspace<F>,
    pub trivial: Subspace<F>,
    pub center: Subspace<F>,
    pub z_left: Subspace<F>,
    pub z_right: Subspace<F>,
    pub z: Subspace<F>,
    pub hypercenter: Subspace<F>,
}

impl<F: Field> WeakBialgebra<F> {
    /// Builds the structure from sparse (i, j, k, value) entries. Repeated
    /// entries are summed.
    pub fn new(
        labels: Vec<String>,
        mult: impl IntoIterator<Item = (usize, usize, usize, F)>,
        unit: Vec<F>,
        comult: impl IntoIterator<Item = (usize, usize, usize, F)>,
        counit: Vec<F>,
    ) -> Result<WeakBialgebra<F>> {
        let n = labels.len();
        if unit.len() != n || counit.len() != n {
            return Err(Error::Dimension(format!(
                "dim {n} but unit has {} and counit {} entries",
                unit.len(),
                counit.len()
            )));
        }
        let mut m: Vec<Acc<F>> = (0..n * n).map(|_| Acc::new()).collect();
        for (i, j, k, c) in mult {
            if i >= n || j >= n || k >= n {
                return Err(Error::Dimension(format!("mult index ({i},{j},{k}) out of range for dim {n}")));
            }
            m[i * n + j].add(k, c);
        }
        let mut d: Vec<Vec<(usize, usize, F)>> = vec![Vec::new(); n];
        for (i, j, k, c) in comult {
            if i >= n || j >= n || k >= n {
                return Err(Error::Dimension(format!("comult index ({i},{j},{k}) out of range for dim {n}")));
            }
            d[i].push((j, k, c));
        }
        let mult = m.into_iter().map(|a| a.into_sorted()).collect();
        let comult = d.into_iter().map(|t| normalize2(t, n)).collect();
        Ok(WeakBialgebra::assemble(labels, mult, unit, comult, counit))
    }

    /// Builds the structure from basis-level closures.
    pub fn from_fns(
        labels: Vec<String>,
        mult: impl Fn(usize, usize) -> Vec<(usize, F)>,
        unit: Vec<F>,
        comult: impl Fn(usize) -> Vec<(usize, usize, F)>,
        counit: Vec<F>,
    ) -> Result<WeakBialgebra<F>> {
        let n = labels.len();
        let m = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).flat_map(|(i, j)| {
            mult(i, j).into_iter().map(move |(k, c)| (i, j, k, c))
        });
        let m: Vec<_> = m.collect();
        let d: Vec<_> = (0..n).flat_map(|i| comult(i).into_iter().map(move |(j, k, c)| (i, j, k, c))).collect();
        WeakBialgebra::new(labels, m, unit, d, counit)
    }

    fn assemble(
        labels: Vec<String>,
        mult: Vec<Vec<(usize, F)>>,
        unit: Vec<F>,
        comult: Vec<Tensor2<F>>,
        counit: Vec<F>,
    ) -> WeakBialgebra<F> {
        let n = labels.len();
        let mut w = WeakBialgebra {
            labels,
            mult,
            unit,
            comult,
            counit,
            delta_one: Vec::new(),
            eps_form: Matrix::zeros(n, n),
        };
        let one = w.unit.clone();
        w.delta_one = w.coproduct(&one);
        let mut e = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut s = F::zero();
                for (k, c) in w.basis_product(i, j) {
                    s.add_mul(c, &w.counit[*k]);
                }
                e.set(i, j, s);
            }
        }
        w.eps_form = e;
        w
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn counit(&self) -> &[F] {
        &self.counit
    }

    /// Nonzero (k, μ[i][j][k]).
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.mult[i * self.dim() + j]
    }

    /// Nonzero (j, k, Δ[i][j][k]).
    pub fn basis_coproduct(&self, i: usize) -> &[(usize, usize, F)] {
        &self.comult[i]
    }

    /// All nonzero structure constants of μ, sorted.
    pub fn mult_entries(&self) -> Vec<(usize, usize, usize, F)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_product(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    /// All nonzero structure constants of Δ, sorted.
    pub fn comult_entries(&self) -> Vec<(usize, usize, usize, F)> {
        let mut out = Vec::new();
        for (i, t) in self.comult.iter().enumerate() {
            for (j, k, c) in t {
                out.push((i, *j, *k, c.clone()));
            }
        }
        out
    }

    pub fn basis(&self, i: usize) -> Vec<F> {
        basis_vec(self.dim(), i)
    }

    pub fn one(&self) -> Vec<F> {
        self.unit.clone()
    }

    /// Δ(1).
    pub fn delta_one(&self) -> &[(usize, usize, F)] {
        &self.delta_one
    }

    /// The bilinear form ε(e_i e_j).
    pub fn counit_form(&self) -> &Matrix<F> {
        &self.eps_form
    }

    pub fn eps(&self, a: &[F]) -> F {
        dot(&self.counit, a)
    }

    /// ⟨φ, a⟩.
    pub fn pair(&self, phi: &[F], a: &[F]) -> F {
        dot(phi, a)
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for (i, x) in nonzero(a) {
            for (j, y) in nonzero(b) {
                let xy = x.clone() * y;
                for (k, c) in self.basis_product(i, j) {
                    out[*k].add_mul(&xy, c);
                }
            }
        }
        out
    }

    /// Product of several elements, left to right.
    pub fn mul_all(&self, xs: &[&[F]]) -> Vec<F> {
        let mut acc = self.one();
        for x in xs {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn coproduct(&self, a: &[F]) -> Tensor2<F> {
        let n = self.dim();
        let mut acc = Acc::new();
        for (i, x) in nonzero(a) {
            for (j, k, c) in &self.comult[i] {
                acc.add(j * n + k, x.clone() * c);
            }
        }
        acc.into_sorted().into_iter().map(|(k, c)| (k / n, k % n, c)).collect()
    }

    /// Product in A⊗A of two sparse tensors.
    pub fn mul2(&self, x: &[(usize, usize, F)], y: &[(usize, usize, F)]) -> Tensor2<F> {
        let n = self.dim();
        let mut acc = Acc::new();
        for (a, b, c) in x {
            for (a2, b2, c2) in y {
                let cc = c.clone() * c2;
                for (p, u) in self.basis_product(*a, *a2) {
                    let cu = cc.clone() * u;
                    for (q, v) in self.basis_product(*b, *b2) {
                        acc.add(p * n + q, cu.clone() * v);
                    }
                }
            }
        }
        acc.into_sorted().into_iter().map(|(k, c)| (k / n, k % n, c)).collect()
    }

    /// Applies `f ⊗ g` to a sparse tensor, where `f` and `g` act on basis indices.
    pub fn map2(&self, x: &[(usize, usize, F)], f: &Matrix<F>, g: &Matrix<F>) -> Tensor2<F> {
        let n = self.dim();
        let mut acc = Acc::new();
        for (a, b, c) in x {
            for p in 0..n {
                let fp = f.get(p, *a);
                if fp.is_zero() {
                    continue;
                }
                let cf = c.clone() * fp;
                for q in 0..n {
                    let gq = g.get(q, *b);
                    if !gq.is_zero() {
                        acc.add(p * n + q, cf.clone() * gq);
                    }
                }
            }
        }
        acc.into_sorted().into_iter().map(|(k, c)| (k / n, k % n, c)).collect()
    }

    /// Matrix with columns `f(e_j)`.
    pub fn matrix_of(&self, mut f: impl FnMut(&[F]) -> Vec<F>) -> Matrix<F> {
        let n = self.dim();
        Matrix::from_fn_cols(n, n, |j| f(&basis_vec(n, j)))
    }

    /// Left multiplication x ↦ a x.
    pub fn left_mul_matrix(&self, a: &[F]) -> Matrix<F> {
        self.matrix_of(|x| self.mul(a, x))
    }

    /// Right multiplication x ↦ x a.
    pub fn right_mul_matrix(&self, a: &[F]) -> Matrix<F> {
        self.matrix_of(|x| self.mul(x, a))
    }

    /// φ⇀a = a1⟨φ,a2⟩.
    pub fn hit(&self, phi: &[F], a: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, x) in nonzero(a) {
            for (j, k, c) in &self.comult[i] {
                if !phi[*k].is_zero() {
                    out[*j].add_mul(&(x.clone() * c), &phi[*k]);
                }
            }
        }
        out
    }

    /// a⟵φ = ⟨φ,a1⟩a2.
    pub fn hit_r(&self, a: &[F], phi: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, x) in nonzero(a) {
            for (j, k, c) in &self.comult[i] {
                if !phi[*j].is_zero() {
                    out[*k].add_mul(&(x.clone() * c), &phi[*j]);
                }
            }
        }
        out
    }

    /// a⇀φ ∈ Â, ⟨a⇀φ, x⟩ = φ(xa).
    pub fn dual_hit(&self, a: &[F], phi: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for (x, o) in out.iter_mut().enumerate() {
            for (i, ai) in nonzero(a) {
                for (k, c) in self.basis_product(x, i) {
                    if !phi[*k].is_zero() {
                        o.add_mul(&(ai.clone() * c), &phi[*k]);
                    }
                }
            }
        }
        out
    }

    /// φ⟵a ∈ Â, ⟨φ⟵a, x⟩ = φ(ax).
    pub fn dual_hit_r(&self, phi: &[F], a: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for (x, o) in out.iter_mut().enumerate() {
            for (i, ai) in nonzero(a) {
                for (k, c) in self.basis_product(i, x) {
                    if !phi[*k].is_zero() {
                        o.add_mul(&(ai.clone() * c), &phi[*k]);
                    }
                }
            }
        }
        out
    }

    /// Arrow dispatch: `x` is the left operand, `y` the right one.
    pub fn sweedler(&self, arrow: Arrow, x: &[F], y: &[F]) -> Result<Vec<F>> {
        if x.len() != self.dim() || y.len() != self.dim() {
            return Err(Error::Dimension(format!("operands of length {} and {} for dim {}", x.len(), y.len(), self.dim())));
        }
        Ok(match arrow {
            Arrow::FunctionalOnElement => self.hit(x, y),
            Arrow::ElementByFunctional => self.hit_r(x, y),
            Arrow::ElementOnFunctional => self.dual_hit(x, y),
            Arrow::FunctionalByElement => self.dual_hit_r(x, y),
        })
    }

    /// Product in Â: ⟨φψ, a⟩ = ⟨φ,a1⟩⟨ψ,a2⟩.
    pub fn dual_mul(&self, phi: &[F], psi: &[F]) -> Vec<F> {
        self.comult
            .iter()
            .map(|t| {
                let mut s = F::zero();
                for (j, k, c) in t {
                    if !phi[*j].is_zero() && !psi[*k].is_zero() {
                        s.add_mul(&(c.clone() * &phi[*j]), &psi[*k]);
                    }
                }
                s
            })
            .collect()
    }

    /// The dual weak bialgebra Â, with structure maps transposed through ⟨ , ⟩.
    pub fn dualize(&self) -> WeakBialgebra<F> {
        let n = self.dim();
        let labels = self.labels.iter().map(|l| format!("{l}*")).collect();
        let labels = strip_double_star(labels);
        let mut mult: Vec<Acc<F>> = (0..n * n).map(|_| Acc::new()).collect();
        for (k, t) in self.comult.iter().enumerate() {
            for (i, j, c) in t {
                mult[i * n + j].add(k, c.clone());
            }
        }
        let mut comult: Vec<Tensor2<F>> = vec![Vec::new(); n];
        for j in 0..n {
            for k in 0..n {
                for (i, c) in self.basis_product(j, k) {
                    comult[*i].push((j, k, c.clone()));
                }
            }
        }
        let mult = mult.into_iter().map(|a| a.into_sorted()).collect();
        let comult = comult.into_iter().map(|t| normalize2(t, n)).collect();
        WeakBialgebra::assemble(labels, mult, self.counit.clone(), comult, self.unit.clone())
    }

    pub fn check_wba(&self) -> Report {
        let n = self.dim();
        let mut r = Report::new();
        r.record("associativity", "(ab)c = a(bc)", self.check_associativity());
        r.record(
            "unit",
            "1a = a = a1",
            first_failure(singles(n), |w| {
                let e = self.basis(w[0]);
                self.mul(&self.unit, &e) == e && self.mul(&e, &self.unit) == e
            }),
        );
        r.record("coassociativity", "(Δ⊗id)Δ(a) = (id⊗Δ)Δ(a)", self.check_coassociativity());
        r.record(
            "counit",
            "(ε⊗id)Δ(a) = a = (id⊗ε)Δ(a)",
            first_failure(singles(n), |w| {
                let mut left = vec![F::zero(); n];
                let mut right = vec![F::zero(); n];
                for (j, k, c) in &self.comult[w[0]] {
                    left[*k].add_mul(c, &self.counit[*j]);
                    right[*j].add_mul(c, &self.counit[*k]);
                }
                let e = self.basis(w[0]);
                left == e && right == e
            }),
        );
        r.record("multiplicativity", "Δ(ab) = Δ(a)Δ(b)", self.check_multiplicativity());
        let (b1, b2) = self.check_weak_counit();
        r.record("weak counit (first)", "ε(ab1)ε(b2c) = ε(abc)", b1);
        r.record("weak counit (second)", "ε(ab2)ε(b1c) = ε(abc)", b2);
        let (c1, c2) = self.check_weak_unit();
        r.record("weak unit (first)", "Δ²(1) = (Δ(1)⊗1)(1⊗Δ(1))", c1);
        r.record("weak unit (second)", "Δ²(1) = (1⊗Δ(1))(Δ(1)⊗1)", c2);
        r
    }

    fn check_associativity(&self) -> std::result::Result<(), Vec<usize>> {
        let n = self.dim();
        let mut acc = Acc::new();
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    acc.clear();
                    for (p, c) in ij {
                        for (q, d) in self.basis_product(*p, k) {
                            acc.add(*q, c.clone() * d);
                        }
                    }
                    for (p, c) in self.basis_product(j, k) {
                        for (q, d) in self.basis_product(i, *p) {
                            acc.add(*q, -(c.clone() * d));
                        }
                    }
                    if !acc.is_zero() {
                        return Err(vec![i, j, k]);
                    }
                }
            }
        }
        Ok(())
    }

    fn check_coassociativity(&self) -> std::result::Result<(), Vec<usize>> {
        let n = self.dim();
        for i in 0..n {
            let mut acc = Acc::new();
            for (j, k, c) in &self.comult[i] {
                for (p, q, d) in &self.comult[*j] {
                    acc.add((p * n + q) * n + k, c.clone() * d);
                }
                for (p, q, d) in &self.comult[*k] {
                    acc.add((j * n + p) * n + q, -(c.clone() * d));
                }
            }
            if !acc.is_zero() {
                return Err(vec![i]);
            }
        }
        Ok(())
    }

    fn check_multiplicativity(&self) -> std::result::Result<(), Vec<usize>> {
        let n = self.dim();
        let mut acc = Acc::new();
        for i in 0..n {
            for j in 0..n {
                acc.clear();
                for (k, c) in self.basis_product(i, j) {
                    for (p, q, d) in &self.comult[*k] {
                        acc.add(p * n + q, c.clone() * d);
                    }
                }
                for (a, b, c) in &self.comult[i] {
                    for (a2, b2, c2) in &self.comult[j] {
                        let cc = c.clone() * c2;
                        for (p, u) in self.basis_product(*a, *a2) {
                            let cu = cc.clone() * u;
                            for (q, v) in self.basis_product(*b, *b2) {
                                acc.add(p * n + q, -(cu.clone() * v));
                            }
                        }
                    }
                }
                if !acc.is_zero() {
                    return Err(vec![i, j]);
                }
            }
        }
        Ok(())
    }

    /// Both weak counit equalities, checked as n×n matrices in (a, c) for each b.
    fn check_weak_counit(&self) -> (std::result::Result<(), Vec<usize>>, std::result::Result<(), Vec<usize>>) {
        let n = self.dim();
        let e = &self.eps_form;
        let cols: Vec<Vec<(usize, F)>> =
            (0..n).map(|j| (0..n).filter_map(|a| nz_entry(e.get(a, j)).map(|v| (a, v))).collect()).collect();
        let rows: Vec<Vec<(usize, F)>> =
            (0..n).map(|k| (0..n).filter_map(|c| nz_entry(e.get(k, c)).map(|v| (c, v))).collect()).collect();
        let mut first = Ok(());
        let mut second = Ok(());
        for b in 0..n {
            // ε(abc) = Σ_k μ[a][b][k] ε(e_k c)
            let mut target = vec![F::zero(); n * n];
            for a in 0..n {
                for (k, c) in self.basis_product(a, b) {
                    for (cc, v) in &rows[*k] {
                        target[a * n + cc].add_mul(c, v);
                    }
                }
            }
            let mut m1 = target.clone();
            let mut m2 = target;
            for (j, k, c) in &self.comult[b] {
                for (a, x) in &cols[*j] {
                    let cx = c.clone() * x;
                    for (cc, y) in &rows[*k] {
                        m1[a * n + cc] -= cx.clone() * y;
                    }
                }
                for (a, x) in &cols[*k] {
                    let cx = c.clone() * x;
                    for (cc, y) in &rows[*j] {
                        m2[a * n + cc] -= cx.clone() * y;
                    }
                }
            }
            if first.is_ok() {
                if let Some(p) = m1.iter().position(|x| !x.is_zero()) {
                    first = Err(vec![p / n, b, p % n]);
                }
            }
            if second.is_ok() {
                if let Some(p) = m2.iter().position(|x| !x.is_zero()) {
                    second = Err(vec![p / n, b, p % n]);
                }
            }
        }
        (first, second)
    }

    fn check_weak_unit(&self) -> (std::result::Result<(), Vec<usize>>, std::result::Result<(), Vec<usize>>) {
        let n = self.dim();
        let d1 = &self.delta_one;
        let mut target = Acc::new();
        for (j, k, c) in d1 {
            for (p, q, d) in &self.comult[*j] {
                target.add((p * n + q) * n + k, c.clone() * d);
            }
        }
        let target = target.into_sorted();
        let compare = |lhs: Acc<F>| -> std::result::Result<(), Vec<usize>> {
            let mut diff = lhs;
            for (k, c) in &target {
                diff.add(*k, -c.clone());
            }
            match diff.into_sorted().first() {
                None => Ok(()),
                Some((k, _)) => Err(vec![k / (n * n), (k / n) % n, k % n]),
            }
        };
        // (Δ(1)⊗1)(1⊗Δ(1)) = 1(1) ⊗ 1(2)1(1') ⊗ 1(2')
        let mut a = Acc::new();
        let mut b = Acc::new();
        for (u, v, c) in d1 {
            for (u2, v2, c2) in d1 {
                let cc = c.clone() * c2;
                for (m, w) in self.basis_product(*v, *u2) {
                    a.add((u * n + m) * n + v2, cc.clone() * w);
                }
                // (1⊗Δ(1))(Δ(1)⊗1) = 1(1') ⊗ 1(1)1(2') ⊗ 1(2) with primed = first factor here
                for (m, w) in self.basis_product(*u, *v2) {
                    b.add((u2 * n + m) * n + v, cc.clone() * w);
                }
            }
        }
        (compare(a), compare(b))
    }

    /// Π^L, Π^R, Π̄^L, Π̄^R as matrices.
    pub fn projections(&self) -> Projections<F> {
        let n = self.dim();
        let e = &self.eps_form;
        let mut pi_l = Matrix::zeros(n, n);
        let mut pi_r = Matrix::zeros(n, n);
        let mut pibar_l = Matrix::zeros(n, n);
        let mut pibar_r = Matrix::zeros(n, n);
        for j in 0..n {
            for (u, v, c) in &self.delta_one {
                // Π^L(a) = ε(1(1)a)1(2), Π̄^L(a) = ε(a1(1))1(2)
                add_entry(&mut pi_l, *v, j, c, e.get(*u, j));
                add_entry(&mut pibar_l, *v, j, c, e.get(j, *u));
                // Π^R(a) = 1(1)ε(a1(2)), Π̄^R(a) = 1(1)ε(1(2)a)
                add_entry(&mut pi_r, *u, j, c, e.get(j, *v));
                add_entry(&mut pibar_r, *u, j, c, e.get(*v, j));
            }
        }
        Projections { pi_l, pi_r, pibar_l, pibar_r }
    }

    /// The canonical subalgebras A^L, A^R, A^T, the center and its
    /// intersections.
    pub fn canonical_subalgebras(&self) -> CanonicalSubalgebras<F> {
        let p = self.projections();
        let left = p.pi_l.image();
        let right = p.pi_r.image();
        let trivial = self.generated_subalgebra(&left.sum(&right));
        let center = self.center();
        let z_left = left.intersect(&center);
        let z_right = right.intersect(&center);
        let z = left.intersect(&right);
        let hypercenter = z.intersect(&center);
        CanonicalSubalgebras { left, right, trivial, center, z_left, z_right, z, hypercenter }
    }

    /// The unital subalgebra generated by `gens`.
    pub fn generated_subalgebra(&self, gens: &Subspace<F>) -> Subspace<F> {
        let n = self.dim();
        let g = gens.basis_vectors();
        let mut span = Subspace::from_vectors(n, std::iter::once(self.one()).chain(g.iter().cloned()));
        for _ in 0..=n {
            let prods: Vec<Vec<F>> =
                span.basis_vectors().iter().flat_map(|x| g.iter().map(move |y| self.mul(x, y))).collect();
            let next = Subspace::from_vectors(n, span.basis_vectors().into_iter().chain(prods));
            if next.dim() == span.dim() {
                return span;
            }
            span = next;
        }
        panic!("subalgebra closure did not stabilize within dim iterations");
    }

    /// Center, as the common kernel of the commutators with basis elements.
    pub fn center(&self) -> Subspace<F> {
        let n = self.dim();
        common_kernel(n, n, |i, x| {
            let e = self.basis(i);
            let a = self.mul(&e, x);
            let b = self.mul(x, &e);
            a.into_iter().zip(b).map(|(u, v)| u - v).collect()
        })
    }

    /// Left integrals {l : al = Π^L(a)l} or right integrals {r : ra = rΠ^R(a)}.
    pub fn integral_space(&self, side: Side) -> Subspace<F> {
        let n = self.dim();
        let p = self.projections();
        common_kernel(n, n, |i, x| {
            let e = self.basis(i);
            match side {
                Side::Left => {
                    let pe = p.pi_l.col(i);
                    crate::tensor::sub_vec(&self.mul(&e, x), &self.mul(&pe, x))
                }
                Side::Right => {
                    let pe = p.pi_r.col(i);
                    crate::tensor::sub_vec(&self.mul(x, &e), &self.mul(x, &pe))
                }
            }
        })
    }

    pub fn check_wba_identities(&self) -> Report {
        let n = self.dim();
        let mut r = Report::new();
        let p = self.projections();
        let sub = self.canonical_subalgebras();
        let dual = self.dualize();
        let dp = dual.projections();
        let (al, ar) = (&sub.left, &sub.right);

        for (name, m) in [("Π^L", &p.pi_l), ("Π^R", &p.pi_r), ("Π̄^L", &p.pibar_l), ("Π̄^R", &p.pibar_r)] {
            r.assert_that(format!("{name} idempotent"), format!("{name}∘{name} = {name}"), &m.mul(m) == m);
        }
        r.assert_that("images left", "Π^L(A) = Π̄^L(A)", p.pibar_l.image() == *al);
        r.assert_that("images right", "Π^R(A) = Π̄^R(A)", p.pibar_r.image() == *ar);
        for (name, s) in [("A^L", al), ("A^R", ar)] {
            r.record(format!("{name} unital subalgebra"), "1 ∈ A^{L/R}, closed under products", self.check_subalgebra(s));
        }
        r.record(
            "A^L and A^R commute",
            "x^L x^R = x^R x^L",
            first_failure(pairs_of(al.dim(), ar.dim()), |w| {
                let (x, y) = (al.vector(w[0]), ar.vector(w[1]));
                self.mul(&x, &y) == self.mul(&y, &x)
            }),
        );
        let d1 = self.delta_one.clone();
        r.assert_that("Δ(1) ∈ A^R⊗A^L", "Δ(1) ∈ A^R⊗A^L", self.map2(&d1, &p.pi_r, &p.pi_l) == d1);

        // coproduct on A^L and A^R
        r.record(
            "coproduct on A^L",
            "Δ(x^L) = 1(1)x^L⊗1(2)",
            first_failure(singles(al.dim()), |w| {
                let x = al.vector(w[0]);
                self.coproduct(&x) == self.left_leg_mul_right(&d1, &x)
            }),
        );
        r.record(
            "coproduct on A^R",
            "Δ(x^R) = 1(1)⊗x^R1(2)",
            first_failure(singles(ar.dim()), |w| {
                let x = ar.vector(w[0]);
                self.coproduct(&x) == self.right_leg_mul_left(&d1, &x)
            }),
        );

        // κ maps
        let (dl, dr) = (dp.pi_l.image(), dp.pi_r.image());
        let one_hat = self.counit.clone();
        let one = self.one();
        r.record(
            "κ_L",
            "κ_L(x^L) = x^L⇀1̂ ∈ Â^R, κ̂_R(κ_L(x^L)) = x^L",
            first_failure(singles(al.dim()), |w| {
                let x = al.vector(w[0]);
                let k = self.dual_hit(&x, &one_hat);
                dr.contains(&k) && self.hit_r(&one, &k) == x
            }),
        );
        r.record(
            "κ_R",
            "κ_R(x^R) = 1̂⟵x^R ∈ Â^L, κ̂_L(κ_R(x^R)) = x^R",
            first_failure(singles(ar.dim()), |w| {
                let x = ar.vector(w[0]);
                let k = self.dual_hit_r(&one_hat, &x);
                dl.contains(&k) && self.hit(&k, &one) == x
            }),
        );
        r.record(
            "κ multiplicative",
            "κ_L(xy) = κ_L(x)κ_L(y), κ_R(xy) = κ_R(x)κ_R(y)",
            first_failure(pairs(al.dim().max(ar.dim())), |w| {
                let mut ok = true;
                if w[0] < al.dim() && w[1] < al.dim() {
                    let (x, y) = (al.vector(w[0]), al.vector(w[1]));
                    let k = |z: &[F]| self.dual_hit(z, &one_hat);
                    ok &= k(&self.mul(&x, &y)) == self.dual_mul(&k(&x), &k(&y));
                }
                if w[0] < ar.dim() && w[1] < ar.dim() {
                    let (x, y) = (ar.vector(w[0]), ar.vector(w[1]));
                    let k = |z: &[F]| self.dual_hit_r(&one_hat, z);
                    ok &= k(&self.mul(&x, &y)) == self.dual_mul(&k(&x), &k(&y));
                }
                ok
            }),
        );

        // arrows by A^L and A^R on Â
        let kl: Vec<Vec<F>> = (0..al.dim()).map(|i| self.dual_hit(&al.vector(i), &one_hat)).collect();
        let kl_r: Vec<Vec<F>> = (0..al.dim()).map(|i| self.dual_hit_r(&one_hat, &al.vector(i))).collect();
        let kr: Vec<Vec<F>> = (0..ar.dim()).map(|i| self.dual_hit(&ar.vector(i), &one_hat)).collect();
        let kr_r: Vec<Vec<F>> = (0..ar.dim()).map(|i| self.dual_hit_r(&one_hat, &ar.vector(i))).collect();
        r.record(
            "x^L⇀φ",
            "x^L⇀φ = (x^L⇀1̂)φ",
            first_failure(pairs_of(al.dim(), n), |w| {
                let phi = self.basis(w[1]);
                self.dual_hit(&al.vector(w[0]), &phi) == self.dual_mul(&kl[w[0]], &phi)
            }),
        );
        r.record(
            "x^R⇀φ",
            "x^R⇀φ = φ(x^R⇀1̂)",
            first_failure(pairs_of(ar.dim(), n), |w| {
                let phi = self.basis(w[1]);
                self.dual_hit(&ar.vector(w[0]), &phi) == self.dual_mul(&phi, &kr[w[0]])
            }),
        );
        r.record(
            "φ⟵x^L",
            "φ⟵x^L = (1̂⟵x^L)φ",
            first_failure(pairs_of(al.dim(), n), |w| {
                let phi = self.basis(w[1]);
                self.dual_hit_r(&phi, &al.vector(w[0])) == self.dual_mul(&kl_r[w[0]], &phi)
            }),
        );
        r.record(
            "φ⟵x^R",
            "φ⟵x^R = φ(1̂⟵x^R)",
            first_failure(pairs_of(ar.dim(), n), |w| {
                let phi = self.basis(w[1]);
                self.dual_hit_r(&phi, &ar.vector(w[0])) == self.dual_mul(&phi, &kr_r[w[0]])
            }),
        );

        // transposition relations
        r.assert_that("Π^L transposed", "⟨φ,Π^L(a)⟩ = ⟨Π̂^L(φ),a⟩", dp.pi_l == p.pi_l.transpose());
        r.assert_that("Π^R transposed", "⟨φ,Π^R(a)⟩ = ⟨Π̂^R(φ),a⟩", dp.pi_r == p.pi_r.transpose());
        r.assert_that("Π̄^L transposed", "⟨φ,Π̄^L(a)⟩ = ⟨Π̂̄^R(φ),a⟩", dp.pibar_r == p.pibar_l.transpose());
        r.assert_that("Π̄^R transposed", "⟨φ,Π̄^R(a)⟩ = ⟨Π̂̄^L(φ),a⟩", dp.pibar_l == p.pibar_r.transpose());

        // leg identities
        let id = Matrix::identity(n);
        r.record(
            "Π^R leg identity",
            "Π^R(a1)⊗a2 = 1(1)⊗a1(2)",
            first_failure(singles(n), |w| {
                let a = self.basis(w[0]);
                self.map2(&self.coproduct(&a), &p.pi_r, &id) == self.right_leg_mul_left(&d1, &a)
            }),
        );
        r.record(
            "Π^L leg identity",
            "a1⊗Π^L(a2) = 1(1)a⊗1(2)",
            first_failure(singles(n), |w| {
                let a = self.basis(w[0]);
                self.map2(&self.coproduct(&a), &id, &p.pi_l) == self.left_leg_mul_right(&d1, &a)
            }),
        );
        r.record(
            "Π̄^R leg identity",
            "Π̄^R(a1)⊗a2 = 1(1)⊗1(2)a",
            first_failure(singles(n), |w| {
                let a = self.basis(w[0]);
                self.map2(&self.coproduct(&a), &p.pibar_r, &id) == self.right_leg_mul_right(&d1, &a)
            }),
        );
        r.record(
            "Π̄^L leg identity",
            "a1⊗Π̄^L(a2) = a1(1)⊗1(2)",
            first_failure(singles(n), |w| {
                let a = self.basis(w[0]);
                self.map2(&self.coproduct(&a), &id, &p.pibar_l) == self.left_leg_mul_left(&d1, &a)
            }),
        );

        // restricted pairings
        for (name, dsub, sub) in [("Â^L×A^L", &dl, al), ("Â^R×A^R", &dr, ar), ("Â^L×A^R", &dl, ar), ("Â^R×A^L", &dr, al)] {
            let g = dsub.basis().mul(&sub.inclusion());
            let ok = dsub.dim() == sub.dim() && g.rank() == sub.dim();
            r.assert_that(format!("pairing {name} non-degenerate"), "rank ⟨Â^{L/R}, A^{L/R}⟩ = dim", ok);
        }
        r
    }

    fn check_subalgebra(&self, s: &Subspace<F>) -> std::result::Result<(), Vec<usize>> {
        if !s.contains(&self.unit) {
            return Err(Vec::new());
        }
        first_failure(pairs(s.dim()), |w| s.contains(&self.mul(&s.vector(w[0]), &s.vector(w[1]))))
    }

    /// Σ (u x) ⊗ v for t = Σ u ⊗ v.
    pub fn left_leg_mul_right(&self, t: &[(usize, usize, F)], x: &[F]) -> Tensor2<F> {
        self.leg_mul(t, x, true, false)
    }

    /// Σ (x u) ⊗ v.
    pub fn left_leg_mul_left(&self, t: &[(usize, usize, F)], x: &[F]) -> Tensor2<F> {
        self.leg_mul(t, x, true, true)
    }

    /// Σ u ⊗ (v x).
    pub fn right_leg_mul_right(&self, t: &[(usize, usize, F)], x: &[F]) -> Tensor2<F> {
        self.leg_mul(t, x, false, false)
    }

    /// Σ u ⊗ (x v).
    pub fn right_leg_mul_left(&self, t: &[(usize, usize, F)], x: &[F]) -> Tensor2<F> {
        self.leg_mul(t, x, false, true)
    }

    fn leg_mul(&self, t: &[(usize, usize, F)], x: &[F], first_leg: bool, from_left: bool) -> Tensor2<F> {
        let n = self.dim();
        let mut acc = Acc::new();
        for (u, v, c) in t {
            let leg = if first_leg { *u } else { *v };
            for (i, xi) in nonzero(x) {
                let prod = if from_left { self.basis_product(i, leg) } else { self.basis_product(leg, i) };
                let cx = c.clone() * xi;
                for (k, d) in prod {
                    let idx = if first_leg { k * n + v } else { u * n + k };
                    acc.add(idx, cx.clone() * d);
                }
            }
        }
        acc.into_sorted().into_iter().map(|(k, c)| (k / n, k % n, c)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

fn strip_double_star(labels: Vec<String>) -> Vec<String> {
    labels.into_iter().map(|l| l.strip_suffix("**").map(str::to_string).unwrap_or(l)).collect()
}

fn nz_entry<F: Field>(x: &F) -> Option<F> {
    if x.is_zero() {
        None
    } else {
        Some(x.clone())
    }
}

fn add_entry<F: Field>(m: &mut Matrix<F>, i: usize, j: usize, c: &F, e: &F) {
    if e.is_zero() {
        return;
    }
    let v = m.get(i, j).clone() + c.clone() * e;
    m.set(i, j, v);
}

pub(crate) fn pairs_of(a: usize, b: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..a).flat_map(move |i| (0..b).map(move |j| vec![i, j]))
}
