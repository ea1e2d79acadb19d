//! Weak Hopf algebras: antipode axioms, projection identities, separability
//! and the Nakayama automorphisms of the counit on A^L and A^R.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::report::{first_failure, pairs, singles, Report};
use crate::tensor::{nonzero, normalize2, Acc, Tensor2};
use crate::wba::{Projections, WeakBialgebra};
use std::ops::Deref;

/// A weak bialgebra together with an antipode matrix (column j = S(e_j)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakHopfAlgebra<F> {
    base: WeakBialgebra<F>,
    antipode: Matrix<F>,
    antipode_inv: Option<Matrix<F>>,
    s_cols: Vec<Vec<(usize, F)>>,
}

impl<F> Deref for WeakHopfAlgebra<F> {
    type Target = WeakBialgebra<F>;
    fn deref(&self) -> &WeakBialgebra<F> {
        &self.base
    }
}

/// Counit-dual bases {e_i}, {f_i} of a subalgebra: ε(e_i f_j) = δ_ij.
#[derive(Clone, Debug)]
pub struct DualBases<F> {
    pub e: Vec<Vec<F>>,
    pub f: Vec<Vec<F>>,
}

#[derive(Clone, Debug)]
pub struct SeparabilityData<F> {
    /// S(1(1))⊗1(2)
    pub q_l: Tensor2<F>,
    /// 1(1)⊗S(1(2))
    pub q_r: Tensor2<F>,
    pub left: Option<DualBases<F>>,
    pub right: Option<DualBases<F>>,
}

/// θ_L and θ_R as matrices in the RREF bases of A^L and A^R.
#[derive(Clone, Debug)]
pub struct NakayamaLR<F> {
    pub left_basis: Subspace<F>,
    pub right_basis: Subspace<F>,
    pub theta_l: Option<Matrix<F>>,
    pub theta_r: Option<Matrix<F>>,
}

impl<F: Field> WeakHopfAlgebra<F> {
    pub fn new(base: WeakBialgebra<F>, antipode: Matrix<F>) -> Result<WeakHopfAlgebra<F>> {
        let n = base.dim();
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::Dimension(format!(
                "antipode is {}x{} for dim {n}",
                antipode.rows(),
                antipode.cols()
            )));
        }
        let antipode_inv = antipode.inverse();
        let s_cols = (0..n)
            .map(|j| (0..n).filter(|&i| !antipode.get(i, j).is_zero()).map(|i| (i, antipode.get(i, j).clone())).collect())
            .collect();
        Ok(WeakHopfAlgebra { base, antipode, antipode_inv, s_cols })
    }

    pub fn base(&self) -> &WeakBialgebra<F> {
        &self.base
    }

    pub fn into_base(self) -> WeakBialgebra<F> {
        self.base
    }

    pub fn antipode(&self) -> &Matrix<F> {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> Option<&Matrix<F>> {
        self.antipode_inv.as_ref()
    }

    /// S⁻¹, panicking if S is singular. Only call after check_wha passed.
    pub fn s_inv_matrix(&self) -> &Matrix<F> {
        self.antipode_inv.as_ref().expect("antipode is not invertible")
    }

    pub fn s(&self, a: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (j, x) in nonzero(a) {
            for (i, c) in &self.s_cols[j] {
                out[*i].add_mul(c, x);
            }
        }
        out
    }

    pub fn s_inv(&self, a: &[F]) -> Vec<F> {
        self.s_inv_matrix().apply(a)
    }

    /// Ŝ(φ) = φ∘S.
    pub fn s_hat(&self, phi: &[F]) -> Vec<F> {
        (0..self.dim()).map(|j| self.s_cols[j].iter().fold(F::zero(), |acc, (i, c)| acc + c.clone() * &phi[*i])).collect()
    }

    /// Ŝ⁻¹(φ) = φ∘S⁻¹.
    pub fn s_hat_inv(&self, phi: &[F]) -> Vec<F> {
        self.s_inv_matrix().transpose().apply(phi)
    }

    /// The dual weak Hopf algebra with Ŝ = Sᵀ.
    pub fn dual(&self) -> WeakHopfAlgebra<F> {
        WeakHopfAlgebra::new(self.base.dualize(), self.antipode.transpose()).expect("square antipode")
    }

    pub fn check_wha(&self) -> Report {
        let n = self.dim();
        let p = self.projections();
        let mut r = Report::new();
        r.record(
            "antipode left",
            "a1S(a2) = Π^L(a)",
            first_failure(singles(n), |w| self.sweep_left(w[0]) == p.pi_l.col(w[0])),
        );
        r.record(
            "antipode right",
            "S(a1)a2 = Π^R(a)",
            first_failure(singles(n), |w| self.sweep_right(w[0]) == p.pi_r.col(w[0])),
        );
        r.record(
            "antipode triple",
            "S(a1)a2S(a3) = S(a)",
            first_failure(singles(n), |w| {
                let mut out = vec![F::zero(); n];
                for (j, k, c) in self.basis_coproduct(w[0]) {
                    let sj = self.s(&self.basis(*j));
                    for (p2, q, d) in self.basis_coproduct(*k) {
                        let cd = c.clone() * d;
                        let x = self.mul(&sj, &self.basis(*p2));
                        let y = self.mul(&x, &self.s(&self.basis(*q)));
                        crate::tensor::axpy(&mut out, &cd, &y);
                    }
                }
                out == self.antipode.col(w[0])
            }),
        );
        r.assert_that("antipode invertible", "S∘S⁻¹ = id", self.antipode_inv.is_some());
        r.record(
            "antipode antimultiplicative",
            "S(ab) = S(b)S(a)",
            first_failure(pairs(n), |w| {
                let (a, b) = (self.basis(w[0]), self.basis(w[1]));
                self.s(&self.mul(&a, &b)) == self.mul(&self.s(&b), &self.s(&a))
            }),
        );
        r.record(
            "antipode anticomultiplicative",
            "Δ(S(a)) = S(a2)⊗S(a1)",
            first_failure(singles(n), |w| {
                let lhs = self.coproduct(&self.antipode.col(w[0]));
                let mut acc = Acc::new();
                for (j, k, c) in self.basis_coproduct(w[0]) {
                    for (u, x) in &self.s_cols[*k] {
                        for (v, y) in &self.s_cols[*j] {
                            acc.add(u * n + v, c.clone() * x * y);
                        }
                    }
                }
                let rhs: Tensor2<F> = acc.into_sorted().into_iter().map(|(k, c)| (k / n, k % n, c)).collect();
                lhs == rhs
            }),
        );
        r.record(
            "antipode counit",
            "ε∘S = ε",
            first_failure(singles(n), |w| self.eps(&self.antipode.col(w[0])) == self.counit()[w[0]]),
        );
        r
    }

    /// a1S(a2) for a basis element.
    fn sweep_left(&self, i: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (j, k, c) in self.basis_coproduct(i) {
            for (q, d) in &self.s_cols[*k] {
                let cd = c.clone() * d;
                for (m, e) in self.basis_product(*j, *q) {
                    out[*m].add_mul(&cd, e);
                }
            }
        }
        out
    }

    /// S(a1)a2 for a basis element.
    fn sweep_right(&self, i: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (j, k, c) in self.basis_coproduct(i) {
            for (q, d) in &self.s_cols[*j] {
                let cd = c.clone() * d;
                for (m, e) in self.basis_product(*q, *k) {
                    out[*m].add_mul(&cd, e);
                }
            }
        }
        out
    }

    pub fn check_projection_identities(&self) -> Report {
        let n = self.dim();
        let p = self.projections();
        let s = &self.antipode;
        let mut r = Report::new();
        let Projections { pi_l, pi_r, pibar_l, pibar_r } = &p;
        r.assert_that("Π^L∘S = Π^L∘Π^R", "Π^L∘S = Π^L∘Π^R", pi_l.mul(s) == pi_l.mul(pi_r));
        r.assert_that("Π^L∘Π^R = S∘Π^R", "Π^L∘Π^R = S∘Π^R", pi_l.mul(pi_r) == s.mul(pi_r));
        r.assert_that("Π^R∘S = Π^R∘Π^L", "Π^R∘S = Π^R∘Π^L", pi_r.mul(s) == pi_r.mul(pi_l));
        r.assert_that("Π^R∘Π^L = S∘Π^L", "Π^R∘Π^L = S∘Π^L", pi_r.mul(pi_l) == s.mul(pi_l));
        let left = Matrix::from_fn_cols(n, n, |j| self.sweep_left(j));
        let right = Matrix::from_fn_cols(n, n, |j| self.sweep_right(j));
        r.assert_that("Π^L as a1S(a2)", "Π^L(a) = a1S(a2)", &left == pi_l);
        r.assert_that("Π^R as S(a1)a2", "Π^R(a) = S(a1)a2", &right == pi_r);
        match &self.antipode_inv {
            Some(si) => {
                r.assert_that("Π̄^L = S⁻¹∘Π^R", "Π̄^L(a) = S⁻¹(Π^R(a))", &si.mul(pi_r) == pibar_l);
                r.assert_that("Π̄^R = S⁻¹∘Π^L", "Π̄^R(a) = S⁻¹(Π^L(a))", &si.mul(pi_l) == pibar_r);
            }
            None => {
                r.assert_that("Π̄^L = S⁻¹∘Π^R", "Π̄^L(a) = S⁻¹(Π^R(a))", false);
                r.assert_that("Π̄^R = S⁻¹∘Π^L", "Π̄^R(a) = S⁻¹(Π^L(a))", false);
            }
        }
        // ε(abc) = ε(aΠ^L(bc)) = ε(Π^R(ab)c), checked through the counit form
        let e = self.counit_form();
        let id = Matrix::identity(n);
        let k1 = e.mul(&id.sub(pi_l));
        let k2 = e.transpose().mul(&id.sub(pi_r));
        r.record(
            "counit through Π^L",
            "ε(abc) = ε(aΠ^L(bc))",
            first_failure(pairs(n), |w| {
                let bc = self.basis_product(w[0], w[1]);
                (0..n).all(|a| bc.iter().fold(F::zero(), |acc, (k, c)| acc + c.clone() * k1.get(a, *k)).is_zero())
            }),
        );
        r.record(
            "counit through Π^R",
            "ε(abc) = ε(Π^R(ab)c)",
            first_failure(pairs(n), |w| {
                let ab = self.basis_product(w[0], w[1]);
                (0..n).all(|c| ab.iter().fold(F::zero(), |acc, (k, x)| acc + x.clone() * k2.get(c, *k)).is_zero())
            }),
        );
        r
    }

    pub fn separability(&self) -> (SeparabilityData<F>, Report) {
        let n = self.dim();
        let mut r = Report::new();
        let d1 = self.delta_one().to_vec();
        let id = Matrix::identity(n);
        let q_l = self.map2(&d1, &self.antipode, &id);
        let q_r = self.map2(&d1, &id, &self.antipode);
        let p = self.projections();
        let (al, ar) = (p.pi_l.image(), p.pi_r.image());
        let one = self.one();

        r.record(
            "q^L separability",
            "x^LS(1(1))⊗1(2) = S(1(1))⊗1(2)x^L",
            first_failure(singles(al.dim()), |w| {
                let x = al.vector(w[0]);
                self.left_leg_mul_left(&q_l, &x) == self.right_leg_mul_right(&q_l, &x)
            }),
        );
        r.record(
            "q^R separability",
            "x^R1(1)⊗S(1(2)) = 1(1)⊗S(1(2))x^R",
            first_failure(singles(ar.dim()), |w| {
                let x = ar.vector(w[0]);
                self.left_leg_mul_left(&q_r, &x) == self.right_leg_mul_right(&q_r, &x)
            }),
        );
        let contract = |t: &[(usize, usize, F)], x: &[F], pair_first: bool, x_left: bool| -> Vec<F> {
            // pair_first: pair ε with the first leg and keep the second
            let mut out = vec![F::zero(); n];
            for (u, v, c) in t {
                let (paired, kept) = if pair_first { (*u, *v) } else { (*v, *u) };
                let e = self.basis(paired);
                let val = if x_left { self.eps(&self.mul(x, &e)) } else { self.eps(&self.mul(&e, x)) };
                if !val.is_zero() {
                    out[kept].add_mul(c, &val);
                }
            }
            out
        };
        r.record(
            "quasibasis on A^L",
            "S(1(1))ε(1(2)x^L) = x^L = ε(x^LS(1(1)))1(2)",
            first_failure(singles(al.dim()), |w| {
                let x = al.vector(w[0]);
                contract(&q_l, &x, false, false) == x && contract(&q_l, &x, true, true) == x
            }),
        );
        r.record(
            "quasibasis on A^R",
            "1(1)ε(S(1(2))x^R) = x^R = ε(x^R1(1))S(1(2))",
            first_failure(singles(ar.dim()), |w| {
                let x = ar.vector(w[0]);
                contract(&q_r, &x, false, false) == x && contract(&q_r, &x, true, true) == x
            }),
        );
        let collapse = |t: &[(usize, usize, F)]| -> Vec<F> {
            let mut out = vec![F::zero(); n];
            for (u, v, c) in t {
                for (k, d) in self.basis_product(*u, *v) {
                    out[*k].add_mul(c, d);
                }
            }
            out
        };
        r.assert_that("index of q^L", "S(1(1))1(2) = 1", collapse(&q_l) == one);
        r.assert_that("index of q^R", "1(1)S(1(2)) = 1", collapse(&q_r) == one);

        let left = self.dual_bases(&al);
        let right = self.dual_bases(&ar);
        r.assert_that("counit non-degenerate on A^L", "det ε(e_i e_j) ≠ 0 on A^L", left.is_some());
        r.assert_that("counit non-degenerate on A^R", "det ε(e_i e_j) ≠ 0 on A^R", right.is_some());
        for (name, db, q) in [("A^L", &left, &q_l), ("A^R", &right, &q_r)] {
            if let Some(db) = db {
                let index = db.f.iter().zip(&db.e).fold(vec![F::zero(); n], |acc, (f, e)| {
                    acc.into_iter().zip(self.mul(f, e)).map(|(x, y)| x + y).collect()
                });
                r.assert_that(format!("index on {name}"), "Σ_i f_i e_i = 1", index == one);
                let t = normalize2(
                    db.f.iter().zip(&db.e).flat_map(|(f, e)| {
                        nonzero(f).flat_map(move |(i, x)| nonzero(e).map(move |(j, y)| (i, j, x.clone() * y))).collect::<Vec<_>>()
                    }),
                    n,
                );
                r.assert_that(format!("separating idempotent of {name}"), "q = Σ_i f_i⊗e_i", &t == q);
            }
        }
        (SeparabilityData { q_l, q_r, left, right }, r)
    }

    /// Counit-dual bases of a subalgebra from its RREF basis, or `None` if
    /// the Gram matrix is singular.
    pub fn dual_bases(&self, sub: &Subspace<F>) -> Option<DualBases<F>> {
        let g = self.gram(sub);
        let gi = g.inverse()?;
        let e = sub.basis_vectors();
        let f = (0..sub.dim()).map(|j| sub.combine(&gi.col(j))).collect();
        Some(DualBases { e, f })
    }

    fn gram(&self, sub: &Subspace<F>) -> Matrix<F> {
        let k = sub.dim();
        let b = sub.basis_vectors();
        let mut g = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                g.set(i, j, self.eps(&self.mul(&b[i], &b[j])));
            }
        }
        g
    }

    /// θ_L, θ_R from ε(y θ(x)) = ε(xy), compared against S^{±2} and the
    /// arrow expressions.
    pub fn nakayama_lr(&self) -> (NakayamaLR<F>, Report) {
        let p = self.projections();
        let (al, ar) = (p.pi_l.image(), p.pi_r.image());
        let mut r = Report::new();
        let theta = |sub: &Subspace<F>| -> Option<Matrix<F>> {
            let g = self.gram(sub);
            Some(g.inverse()?.mul(&g.transpose()))
        };
        let theta_l = theta(&al);
        let theta_r = theta(&ar);
        let coords = |sub: &Subspace<F>, v: &[F]| sub.coordinates(v);
        let one = self.one();
        let one_hat = self.counit().to_vec();
        let s2 = self.antipode.mul(&self.antipode);
        match &theta_l {
            Some(t) => {
                r.record(
                    "θ_L = S² on A^L",
                    "θ_L(x^L) = S²(x^L)",
                    first_failure(singles(al.dim()), |w| coords(&al, &s2.apply(&al.vector(w[0]))) == Some(t.col(w[0]))),
                );
                r.record(
                    "θ_L by arrows",
                    "θ_L(x^L) = 1⟵Ŝ⁻¹(1̂⟵x^L)",
                    first_failure(singles(al.dim()), |w| {
                        if self.antipode_inv.is_none() {
                            return false;
                        }
                        let k = self.dual_hit_r(&one_hat, &al.vector(w[0]));
                        coords(&al, &self.hit_r(&one, &self.s_hat_inv(&k))) == Some(t.col(w[0]))
                    }),
                );
            }
            None => r.assert_that("θ_L = S² on A^L", "θ_L(x^L) = S²(x^L)", false),
        }
        match (&theta_r, &self.antipode_inv) {
            (Some(t), Some(si)) => {
                let si2 = si.mul(si);
                r.record(
                    "θ_R = S⁻² on A^R",
                    "θ_R(x^R) = S⁻²(x^R)",
                    first_failure(singles(ar.dim()), |w| coords(&ar, &si2.apply(&ar.vector(w[0]))) == Some(t.col(w[0]))),
                );
                r.record(
                    "θ_R by arrows",
                    "θ_R(x^R) = Ŝ(1̂⟵x^R)⇀1",
                    first_failure(singles(ar.dim()), |w| {
                        let k = self.dual_hit_r(&one_hat, &ar.vector(w[0]));
                        coords(&ar, &self.hit(&self.s_hat(&k), &one)) == Some(t.col(w[0]))
                    }),
                );
            }
            _ => r.assert_that("θ_R = S⁻² on A^R", "θ_R(x^R) = S⁻²(x^R)", false),
        }
        (NakayamaLR { left_basis: al, right_basis: ar, theta_l, theta_r }, r)
    }

    /// Applies θ_L to an element of A^L, in ambient coordinates.
    pub fn theta_l_apply(nak: &NakayamaLR<F>, x: &[F]) -> Option<Vec<F>> {
        let c = nak.left_basis.coordinates(x)?;
        Some(nak.left_basis.combine(&nak.theta_l.as_ref()?.apply(&c)))
    }
}
