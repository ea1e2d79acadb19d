//! The Drinfeld double D(A) on the image of the projection P of A⊗Â, with
//! its unimodular integral D(l⊗Ŝ(λ)).
//!
//! Ambient index of e_a⊗f_φ is a·n + φ. Basis element k of D(A) is the class
//! of the pure tensor `reps[k]`; all equality tests are done in D-coordinates.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::integrals::{self, DualPair};
use crate::linalg::{Matrix, Subspace};
use crate::report::Report;
use crate::tensor::{basis_vec, Acc};
use crate::wba::{Side, WeakBialgebra};
use crate::wha::WeakHopfAlgebra;
use serde::Serialize;

/// Which legs the two pairings of the product formula act on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reading {
    /// D(a2 b ⊗ φ2ψ)⟨a1, Ŝ⁻¹(φ3)⟩⟨a3, φ1⟩.
    Literal,
    /// D(a b2 ⊗ φ2ψ)⟨b1, Ŝ⁻¹(φ3)⟩⟨b3, φ1⟩.
    LegsOfB,
}

/// The reading that passes the axiom suites on the reference entries.
pub const DEFAULT_READING: Reading = Reading::LegsOfB;

#[derive(Clone, Debug)]
pub struct DoubleAlgebra<F> {
    pub reading: Reading,
    /// P on A⊗Â.
    pub p: Matrix<F>,
    /// P̂ on Â⊗A (index φ·n + a).
    pub p_hat: Matrix<F>,
    /// Pure tensors whose classes form the basis of D(A).
    pub reps: Vec<usize>,
    /// Coordinates in D(A) of the class of each pure tensor (d × n²).
    pub coords: Matrix<F>,
    pub wha: WeakHopfAlgebra<F>,
    /// D(l⊗Ŝ(λ)) in D-coordinates.
    pub integral: Vec<F>,
}

/// Ambient dimension above which the double is refused.
pub const MAX_AMBIENT: usize = 1024;

struct Ambient<'a, F> {
    w: &'a WeakHopfAlgebra<F>,
    dual: WeakHopfAlgebra<F>,
    n: usize,
}

impl<F: Field> Ambient<'_, F> {
    fn eps_hat(&self) -> Vec<F> {
        self.w.counit().to_vec()
    }

    /// Σ c·(x ↦ x L) ⊗ (ψ ↦ R ψ) over the two copies of Δ(1), with
    /// L = 1(1)S(1(1')) and R = (1(2')⇀1̂)(1̂⟵S(1(2))).
    fn projection(&self) -> Matrix<F> {
        let (w, n) = (self.w, self.n);
        let eps = self.eps_hat();
        let d1 = w.delta_one();
        let mut p = Matrix::zeros(n * n, n * n);
        for (u, v, c) in d1 {
            for (u2, v2, c2) in d1 {
                let left = w.mul(&w.basis(*u), &w.s(&w.basis(*u2)));
                let right = self.dual.mul(&w.dual_hit(&w.basis(*v2), &eps), &w.dual_hit_r(&eps, &w.s(&w.basis(*v))));
                let rm = w.right_mul_matrix(&left);
                let lm = self.dual.left_mul_matrix(&right);
                add_kron(&mut p, &(c.clone() * c2), &rm, &lm);
            }
        }
        p
    }

    /// P̂(φ⊗a) = (1(1')⇀1̂)φ(1(1)⇀1̂) ⊗ 1(2) a 1(2').
    fn projection_hat(&self) -> Matrix<F> {
        let (w, n) = (self.w, self.n);
        let eps = self.eps_hat();
        let d1 = w.delta_one();
        let mut p = Matrix::zeros(n * n, n * n);
        for (u, v, c) in d1 {
            for (u2, v2, c2) in d1 {
                let x = w.dual_hit(&w.basis(*u2), &eps);
                let y = w.dual_hit(&w.basis(*u), &eps);
                let dm = self.dual.matrix_of(|phi| self.dual.mul_all(&[&x[..], phi, &y[..]]));
                let am = w.matrix_of(|a| w.mul_all(&[&w.basis(*v)[..], a, &w.basis(*v2)[..]]));
                add_kron(&mut p, &(c.clone() * c2), &dm, &am);
            }
        }
        p
    }

    /// X(b⊗φ) = Σ b2 ⊗ (y ↦ φ(b3 y S⁻¹(b1))), the middle legs left over
    /// after both pairings, for all pure b⊗φ.
    fn middle(&self) -> Vec<Vec<(usize, usize, F)>> {
        let (w, n) = (self.w, self.n);
        let mut out: Vec<Acc<F>> = (0..n * n).map(|_| Acc::new()).collect();
        let s_inv = w.s_inv_matrix();
        for g in 0..n {
            for (j, k, c) in w.basis_coproduct(g).to_vec() {
                for (p, q, c2) in w.basis_coproduct(j).to_vec() {
                    let cc = c.clone() * &c2;
                    let right = s_inv.col(p);
                    for y in 0..n {
                        let z = w.mul(&w.mul(&w.basis(k), &w.basis(y)), &right);
                        for (beta, zb) in crate::tensor::nonzero(&z) {
                            out[g * n + beta].add(q * n + y, cc.clone() * zb);
                        }
                    }
                }
            }
        }
        out.into_iter().map(|a| a.into_sorted().into_iter().map(|(k, c)| (k / n, k % n, c)).collect()).collect()
    }
}

fn add_kron<F: Field>(p: &mut Matrix<F>, c: &F, a: &Matrix<F>, b: &Matrix<F>) {
    let nb = b.rows();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            let cx = c.clone() * x;
            for k in 0..nb {
                for l in 0..b.cols() {
                    let y = b.get(k, l);
                    if !y.is_zero() {
                        let (r, s) = (i * nb + k, j * b.cols() + l);
                        let v = p.get(r, s).clone() + cx.clone() * y;
                        p.set(r, s, v);
                    }
                }
            }
        }
    }
}

fn sparse_cols<F: Field>(m: &Matrix<F>) -> Vec<Vec<(usize, F)>> {
    (0..m.cols())
        .map(|j| crate::tensor::nonzero(&m.col(j)).map(|(i, c)| (i, c.clone())).collect())
        .collect()
}

/// f∘P = f for a map given by its values on pure tensors.
fn respects_p<F: Field>(pcols: &[Vec<(usize, F)>], values: &[Vec<F>]) -> std::result::Result<(), Vec<usize>> {
    for (u, col) in pcols.iter().enumerate() {
        let mut acc = vec![F::zero(); values[u].len()];
        for (w, c) in col {
            crate::tensor::axpy(&mut acc, c, &values[*w]);
        }
        if acc != values[u] {
            return Err(vec![u]);
        }
    }
    Ok(())
}

/// Builds D(A) with [`DEFAULT_READING`], falling back to the other reading
/// if the default does not give a weak Hopf algebra.
pub fn build_double<F: Field>(w: &WeakHopfAlgebra<F>, pair: &DualPair<F>) -> Result<(DoubleAlgebra<F>, Report)> {
    let other = match DEFAULT_READING {
        Reading::Literal => Reading::LegsOfB,
        Reading::LegsOfB => Reading::Literal,
    };
    let (d, rep) = build_double_with(w, pair, DEFAULT_READING)?;
    if rep.passed() {
        return Ok((d, rep));
    }
    let (d2, rep2) = build_double_with(w, pair, other)?;
    if rep2.passed() {
        return Ok((d2, rep2));
    }
    let names = |r: &Report| r.failures().iter().map(|c| c.identity.clone()).collect::<Vec<_>>().join(", ");
    Err(Error::Internal(format!(
        "neither product reading gives a weak Hopf algebra; {:?}: {}; {:?}: {}",
        DEFAULT_READING,
        names(&rep),
        other,
        names(&rep2)
    )))
}

pub fn build_double_with<F: Field>(w: &WeakHopfAlgebra<F>, pair: &DualPair<F>, reading: Reading) -> Result<(DoubleAlgebra<F>, Report)> {
    let n = w.dim();
    let big = n * n;
    if big > MAX_AMBIENT {
        return Err(Error::Input(format!("A⊗Â has dimension {big}, above the limit {MAX_AMBIENT}")));
    }
    let amb = Ambient { w, dual: w.dual(), n };
    let dual = &amb.dual;
    let mut rep = Report::new();

    let p = amb.projection();
    rep.assert_that("P idempotent", "P∘P = P", p.mul(&p) == p);
    let p_hat = amb.projection_hat();
    rep.assert_that("P̂ idempotent", "P̂∘P̂ = P̂", p_hat.mul(&p_hat) == p_hat);
    rep.assert_that("P̂ transpose of P", "⟨φ⊗a, P(b⊗ψ)⟩ = ⟨P̂(φ⊗a), b⊗ψ⟩", p_hat == p.transpose());

    let (_, reps) = p.rref_pivots();
    let d = reps.len();
    let b = Matrix::from_cols(big, &reps.iter().map(|&r| p.col(r)).collect::<Vec<_>>());
    let (_, rows) = b.transpose().rref_pivots();
    let sub = Matrix::from_rows(rows.iter().map(|&r| b.row(r).to_vec()).collect());
    let sub_inv = sub.inverse().ok_or_else(|| Error::Internal("representative block is singular".into()))?;
    let p_rows = Matrix::from_rows(rows.iter().map(|&r| p.row(r).to_vec()).collect());
    let coords = sub_inv.mul(&p_rows);
    let qcols = coords.col_vecs();
    let pcols = sparse_cols(&p);
    let q = |v: &[(usize, F)]| {
        let mut out = vec![F::zero(); d];
        for (i, c) in v {
            crate::tensor::axpy(&mut out, c, &qcols[*i]);
        }
        out
    };
    let pure = |a: &[F], phi: &[F]| -> Vec<(usize, F)> {
        let mut v = Vec::new();
        for (i, x) in crate::tensor::nonzero(a) {
            for (j, y) in crate::tensor::nonzero(phi) {
                v.push((i * n + j, x.clone() * y));
            }
        }
        v
    };

    // relations: D(a x_L ⊗ φ) = D(a ⊗ (x_L⇀1̂)φ), D(a x_R ⊗ φ) = D(a ⊗ (1̂⟵x_R)φ)
    let proj = w.projections();
    let eps = amb.eps_hat();
    let mut rel_ok = Ok(());
    'outer: for (side, sub) in [(0, proj.pi_l.image()), (1, proj.pi_r.image())] {
        for x in sub.basis_vectors() {
            let f = if side == 0 { w.dual_hit(&x, &eps) } else { w.dual_hit_r(&eps, &x) };
            for a in 0..n {
                let ax = w.mul(&w.basis(a), &x);
                for phi in 0..n {
                    let lhs = q(&pure(&ax, &basis_vec(n, phi)));
                    let rhs = q(&pure(&w.basis(a), &dual.mul(&f, &dual.basis(phi))));
                    if lhs != rhs {
                        rel_ok = Err(vec![side, a, phi]);
                        break 'outer;
                    }
                }
            }
        }
    }
    rep.record("balanced over A^L and A^R", "D(a x_L x_R ⊗ φ) = D(a ⊗ (x_L⇀1̂)(1̂⟵x_R)φ)", rel_ok);

    // products of all pure tensors, in D-coordinates
    let x = amb.middle();
    let raw = |u: usize, v: usize| -> Vec<F> {
        let (al, be) = (u / n, u % n);
        let (ga, de) = (v / n, v % n);
        let mut out = vec![F::zero(); d];
        let terms = match reading {
            Reading::LegsOfB => &x[ga * n + be],
            Reading::Literal => &x[al * n + be],
        };
        for (qq, y, c) in terms {
            let left = match reading {
                Reading::LegsOfB => w.basis_product(al, *qq),
                Reading::Literal => w.basis_product(*qq, ga),
            };
            for (i, ci) in left {
                let cci = c.clone() * ci;
                for (j, cj) in dual.basis_product(*y, de) {
                    crate::tensor::axpy(&mut out, &(cci.clone() * cj), &qcols[i * n + j]);
                }
            }
        }
        out
    };
    let table: Vec<Vec<Vec<F>>> = (0..big).map(|u| (0..big).map(|v| raw(u, v)).collect()).collect();
    let mut left_ok = Ok(());
    for v in 0..big {
        let col: Vec<Vec<F>> = (0..big).map(|u| table[u][v].clone()).collect();
        if let Err(wit) = respects_p(&pcols, &col) {
            left_ok = Err(vec![wit[0], v]);
            break;
        }
    }
    let right_ok = (0..big).try_for_each(|u| respects_p(&pcols, &table[u]).map_err(|wit| vec![u, wit[0]]));
    rep.record("product well defined (left)", "D(P(u))D(v) = D(u)D(v)", left_ok);
    rep.record("product well defined (right)", "D(u)D(P(v)) = D(u)D(v)", right_ok);

    // coproduct D(a1⊗φ2)⊗D(a2⊗φ1) and counit ε(a(φ⇀1))
    let mut dual_co: Vec<Vec<(usize, usize, F)>> = vec![Vec::new(); n];
    for (xx, yy, k, c) in w.mult_entries() {
        dual_co[k].push((xx, yy, c));
    }
    let co_raw: Vec<Vec<F>> = (0..big)
        .map(|u| {
            let (al, be) = (u / n, u % n);
            let mut out = vec![F::zero(); d * d];
            for (i, j, c) in w.basis_coproduct(al) {
                for (fx, fy, c2) in &dual_co[be] {
                    let cc = c.clone() * c2;
                    let (l, r) = (&qcols[i * n + fy], &qcols[j * n + fx]);
                    for (s, ls) in crate::tensor::nonzero(l) {
                        let cl = cc.clone() * ls;
                        for (t, rt) in crate::tensor::nonzero(r) {
                            out[s * d + t].add_mul(&cl, rt);
                        }
                    }
                }
            }
            out
        })
        .collect();
    rep.record("coproduct well defined", "Δ_D∘D∘P = Δ_D∘D", respects_p(&pcols, &co_raw));
    let one = w.one();
    let eps_raw: Vec<Vec<F>> = (0..big).map(|u| vec![w.eps(&w.mul(&w.basis(u / n), &w.hit(&dual.basis(u % n), &one)))]).collect();
    rep.record("counit well defined", "ε_D∘D∘P = ε_D∘D", respects_p(&pcols, &eps_raw));

    let labels: Vec<String> = reps.iter().map(|&r| format!("{}⊗{}", w.labels()[r / n], dual.labels()[r % n])).collect();
    let mut mult = Vec::new();
    for (k, &rk) in reps.iter().enumerate() {
        for (l, &rl) in reps.iter().enumerate() {
            for (m, c) in crate::tensor::nonzero(&table[rk][rl]) {
                mult.push((k, l, m, c.clone()));
            }
        }
    }
    let mut comult = Vec::new();
    for (k, &rk) in reps.iter().enumerate() {
        for (st, c) in crate::tensor::nonzero(&co_raw[rk]) {
            comult.push((k, st / d, st % d, c.clone()));
        }
    }
    let unit = q(&pure(&one, &eps));
    let counit: Vec<F> = reps.iter().map(|&r| eps_raw[r][0].clone()).collect();
    let base = WeakBialgebra::new(labels, mult, unit, comult, counit)?;

    // S_D(D(a⊗φ)) = D(1⊗Ŝ⁻¹(φ))D(S(a)⊗1̂)
    let s_raw: Vec<Vec<F>> = (0..big)
        .map(|u| {
            let left = q(&pure(&one, &w.s_hat_inv(&dual.basis(u % n))));
            let right = q(&pure(&w.s(&w.basis(u / n)), &eps));
            base.mul(&left, &right)
        })
        .collect();
    rep.record("antipode well defined", "S_D∘D∘P = S_D∘D", respects_p(&pcols, &s_raw));
    let s = Matrix::from_cols(d, &reps.iter().map(|&r| s_raw[r].clone()).collect::<Vec<_>>());

    rep.extend_prefixed("D", base.check_wba());
    let wha = match WeakHopfAlgebra::new(base, s) {
        Ok(x) => x,
        Err(e) => return Err(Error::Internal(format!("double antipode: {e}"))),
    };
    rep.extend_prefixed("D", wha.check_wha());

    let s_lambda = w.s_hat(&pair.lambda);
    let integral = q(&pure(&pair.l, &s_lambda));
    rep.assert_that("D(l⊗Ŝ(λ)) left integral", "D(l⊗Ŝ(λ)) ∈ I^L(D)", integrals::is_left_integral(&wha, &integral));
    rep.assert_that("D(l⊗Ŝ(λ)) right integral", "D(l⊗Ŝ(λ)) ∈ I^R(D)", integrals::is_right_integral(&wha, &integral));
    rep.assert_that(
        "D(l⊗Ŝ(λ)) non-degenerate",
        "R and L at D(l⊗Ŝ(λ)) bijective",
        integrals::is_nondegenerate(&wha, &integral).nondegenerate,
    );
    let r_l = w.matrix_of(|phi| w.hit(phi, &pair.l));
    let lhat = w.matrix_of(|a| w.dual_hit_r(&s_lambda, a));
    let k = r_l.kron(&lhat);
    let rank_hat = p_hat.rank();
    rep.assert_that("rank P̂ = rank P", "P̂(Â⊗A) ≅ D(A)", rank_hat == d);
    rep.assert_that("R_l⊗L̂_{Ŝ(λ)} injective on P̂(Â⊗A)", "(R_l⊗L̂_{Ŝ(λ)})∘P̂ has rank dim D", k.mul(&p_hat).rank() == rank_hat);

    Ok((DoubleAlgebra { reading, p, p_hat, reps, coords, wha, integral }, rep))
}

impl<F: Field> DoubleAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// The image of P as a subspace of A⊗Â.
    pub fn underlying(&self) -> Subspace<F> {
        self.p.image()
    }

    /// Whether the integral spans I^L ∩ I^R.
    pub fn integral_is_two_sided(&self) -> bool {
        let both = self.wha.integral_space(Side::Left).intersect(&self.wha.integral_space(Side::Right));
        both.contains(&self.integral)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;
    use crate::Q;

    fn pair_of<F: Field>(w: &WeakHopfAlgebra<F>) -> DualPair<F> {
        let l = integrals::find_nondegenerate_left_integral(w, integrals::DEFAULT_BOUND).unwrap();
        integrals::dual_pair(w, &l).unwrap()
    }

    fn names(r: &Report) -> Vec<String> {
        r.failures().iter().map(|c| c.identity.clone()).collect()
    }

    #[test]
    fn double_of_z2_and_z3() {
        for (n, dim) in [(2, 4), (3, 9)] {
            let w = zoo::cyclic_group(n);
            let (d, rep) = build_double(&w, &pair_of(&w)).unwrap();
            assert!(rep.passed(), "{:?}", names(&rep));
            assert_eq!(d.dim(), dim);
            assert!(d.integral_is_two_sided());
        }
    }

    #[test]
    fn h4_double() {
        let w = zoo::sweedler_h4();
        let (d, rep) = build_double(&w, &pair_of(&w)).unwrap();
        assert!(rep.passed(), "{:?}", names(&rep));
        assert_eq!(d.dim(), 16);
    }

    #[test]
    fn literal_reading_fails_on_s3() {
        let w = zoo::s3();
        let (_, rep) = build_double_with(&w, &pair_of(&w), Reading::Literal).unwrap();
        assert!(!rep.get("D/associativity").unwrap().pass);
        let (d, rep) = build_double(&w, &pair_of(&w)).unwrap();
        assert!(rep.passed(), "{:?}", names(&rep));
        assert_eq!(d.reading, Reading::LegsOfB);
        assert_eq!(d.dim(), 36);
    }

    #[test]
    fn double_of_z2_over_f3() {
        let w = zoo::cyclic_group_over::<crate::Fp<3>>(2);
        let (d, rep) = build_double(&w, &pair_of(&w)).unwrap();
        assert!(rep.passed(), "{:?}", names(&rep));
        assert_eq!(d.dim(), 4);
    }

    #[test]
    fn double_of_m2q() {
        let w = zoo::m2q();
        let (d, rep) = build_double(&w, &pair_of(&w)).unwrap();
        assert!(rep.passed(), "{:?}", names(&rep));
        assert_eq!(d.dim(), d.p.rank());
        assert_eq!(d.dim(), 16);
        assert!(d.integral_is_two_sided());
        let _ = Q::from_i64(0);
    }
}
