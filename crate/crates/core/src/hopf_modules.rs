//! Weak Hopf modules: actions, coactions, (co)invariants, the projections
//! onto them, the ★-action on coinvariants and the structure theorem.
//!
//! A right coaction is stored as matrices D_k with δ_R(m) = Σ_k D_k m ⊗ e_k,
//! a left coaction as E_k with δ_L(m) = Σ_k e_k ⊗ E_k m. Right actions are
//! matrices of m ↦ m·e_i.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::integrals::integral_projections;
use crate::linalg::{common_kernel, Matrix, Subspace};
use crate::modules::{self, LeftModule};
use crate::report::{first_failure, pairs, singles, Report};
use crate::wba::{Side, WeakBialgebra};
use crate::wha::WeakHopfAlgebra;
use std::fmt;

/// Above this value of dim M · dim A the second-route and morphism checks
/// are skipped; they are quadratic in dim A.
pub const CHECK_MAX: usize = 4096;

/// Which action/coaction pair forms the weak Hopf module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Variant {
    /// M^A_A: right action, right coaction.
    RightRight,
    /// _AM^A: left action, right coaction.
    LeftRight,
    /// ^A_AM: left action, left coaction.
    LeftLeft,
    /// ^AM_A: right action, left coaction.
    RightLeft,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::RightRight => "M^A_A",
            Variant::LeftRight => "_AM^A",
            Variant::LeftLeft => "^A_AM",
            Variant::RightLeft => "^AM_A",
        })
    }
}

/// A comodule given by the tensor δ[v][w][k]: δ_R(f_v) = Σ f_w ⊗ e_k, or
/// δ_L(f_v) = Σ e_k ⊗ f_w on the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule<F> {
    pub side: Side,
    pub coaction: Vec<Matrix<F>>,
}

impl<F: Field> Comodule<F> {
    pub fn from_tensor(side: Side, dim: usize, n: usize, delta: &[(usize, usize, usize, F)]) -> Result<Comodule<F>> {
        let mut coaction = vec![Matrix::zeros(dim, dim); n];
        for (v, w, k, c) in delta {
            if *v >= dim || *w >= dim || *k >= n {
                return Err(Error::Input(format!("coaction index ({v},{w},{k}) out of range")));
            }
            add_at(&mut coaction[*k], *w, *v, c);
        }
        Ok(Comodule { side, coaction })
    }

    pub fn dim(&self) -> usize {
        self.coaction.first().map_or(0, |m| m.rows())
    }

    /// Nonzero entries (v, w, k, c) in lexicographic order.
    pub fn tensor(&self) -> Vec<(usize, usize, usize, F)> {
        let dim = self.dim();
        let mut out = Vec::new();
        for v in 0..dim {
            for w in 0..dim {
                for (k, d) in self.coaction.iter().enumerate() {
                    if !d.get(w, v).is_zero() {
                        out.push((v, w, k, d.get(w, v).clone()));
                    }
                }
            }
        }
        out
    }
}

/// Coassociativity and counitality of a comodule.
pub fn check_comodule<F: Field>(a: &WeakBialgebra<F>, c: &Comodule<F>) -> Report {
    check_coaction(a, &c.coaction, c.dim(), c.side == Side::Right)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakHopfModule<F> {
    pub dim: usize,
    pub left: Option<Vec<Matrix<F>>>,
    pub right: Option<Vec<Matrix<F>>>,
    pub right_coaction: Option<Vec<Matrix<F>>>,
    pub left_coaction: Option<Vec<Matrix<F>>>,
}

impl<F: Field> WeakHopfModule<F> {
    /// The WHM variants formed by the structures present.
    pub fn variants(&self) -> Vec<Variant> {
        let mut v = Vec::new();
        if self.right.is_some() && self.right_coaction.is_some() {
            v.push(Variant::RightRight);
        }
        if self.left.is_some() && self.right_coaction.is_some() {
            v.push(Variant::LeftRight);
        }
        if self.left.is_some() && self.left_coaction.is_some() {
            v.push(Variant::LeftLeft);
        }
        if self.right.is_some() && self.left_coaction.is_some() {
            v.push(Variant::RightLeft);
        }
        v
    }

    fn need<'a>(&self, part: &'a Option<Vec<Matrix<F>>>, what: &str) -> Result<&'a [Matrix<F>]> {
        part.as_deref().ok_or_else(|| Error::Input(format!("module has no {what}")))
    }

    pub fn left_action(&self) -> Result<&[Matrix<F>]> {
        self.need(&self.left, "left action")
    }

    pub fn right_action(&self) -> Result<&[Matrix<F>]> {
        self.need(&self.right, "right action")
    }

    pub fn right_coaction(&self) -> Result<&[Matrix<F>]> {
        self.need(&self.right_coaction, "right coaction")
    }

    pub fn left_coaction(&self) -> Result<&[Matrix<F>]> {
        self.need(&self.left_coaction, "left coaction")
    }
}

/// Σ_i a_i X_i.
fn combo<F: Field>(xs: &[Matrix<F>], a: &[F], dim: usize) -> Matrix<F> {
    let mut out = Matrix::zeros(dim, dim);
    for (x, c) in xs.iter().zip(a) {
        out.add_scaled(c, x);
    }
    out
}

/// The multiple WHM (A, μ, μ, Δ, Δ).
pub fn regular_whm<F: Field>(a: &WeakBialgebra<F>) -> WeakHopfModule<F> {
    let n = a.dim();
    let left = (0..n).map(|i| a.left_mul_matrix(&a.basis(i))).collect();
    let right = (0..n).map(|i| a.right_mul_matrix(&a.basis(i))).collect();
    let mut d = vec![Matrix::zeros(n, n); n];
    let mut e = vec![Matrix::zeros(n, n); n];
    for v in 0..n {
        for (x, y, c) in a.basis_coproduct(v) {
            add_at(&mut d[*y], *x, v, c);
            add_at(&mut e[*x], *y, v, c);
        }
    }
    WeakHopfModule { dim: n, left: Some(left), right: Some(right), right_coaction: Some(d), left_coaction: Some(e) }
}

fn add_at<F: Field>(m: &mut Matrix<F>, i: usize, j: usize, c: &F) {
    let v = m.get(i, j).clone() + c;
    m.set(i, j, v);
}

/// Â with a·φ = φ⟵S⁻¹(a), φ·a = S(a)⇀φ and δ_R(φ) = β_iφ ⊗ b_i.
pub fn dual_whm<F: Field>(w: &WeakHopfAlgebra<F>) -> WeakHopfModule<F> {
    let n = w.dim();
    let s_inv = w.s_inv_matrix();
    let left = (0..n).map(|i| w.matrix_of(|phi| w.dual_hit_r(phi, &s_inv.col(i)))).collect();
    let right = (0..n).map(|i| {
        let sa = w.s(&w.basis(i));
        w.matrix_of(|phi| w.dual_hit(&sa, phi))
    });
    let d = (0..n).map(|k| {
        let fk = w.basis(k);
        w.matrix_of(|phi| w.dual_mul(&fk, phi))
    });
    WeakHopfModule { dim: n, left: Some(left), right: Some(right.collect()), right_coaction: Some(d.collect()), left_coaction: None }
}

fn check_right_module<F: Field>(a: &WeakBialgebra<F>, r: &[Matrix<F>], dim: usize) -> Report {
    let mut rep = Report::new();
    rep.record(
        "right module multiplicative",
        "(m·a)·b = m·(ab)",
        first_failure(pairs(a.dim()), |ij| {
            let mut prod = Matrix::zeros(dim, dim);
            for (k, c) in a.basis_product(ij[0], ij[1]) {
                prod.add_scaled(c, &r[*k]);
            }
            r[ij[1]].mul(&r[ij[0]]) == prod
        }),
    );
    rep.assert_that("right module unital", "m·1 = m", combo(r, a.unit(), dim).is_identity());
    rep
}

fn check_coaction<F: Field>(a: &WeakBialgebra<F>, d: &[Matrix<F>], dim: usize, right: bool) -> Report {
    let n = a.dim();
    let mut rep = Report::new();
    // D_j D_k = Σ_i Δ_i^{jk} D_i for a right coaction, Δ_i^{kj} for a left one
    let mut sums = vec![Matrix::zeros(dim, dim); n * n];
    for i in 0..n {
        for (j, k, c) in a.basis_coproduct(i) {
            let idx = if right { j * n + k } else { k * n + j };
            sums[idx].add_scaled(c, &d[i]);
        }
    }
    let (anchor, name) = if right {
        ("(δ⊗id)δ = (id⊗Δ)δ", "right coaction coassociative")
    } else {
        ("(id⊗δ)δ = (Δ⊗id)δ", "left coaction coassociative")
    };
    rep.record(name, anchor, first_failure(pairs(n), |jk| d[jk[0]].mul(&d[jk[1]]) == sums[jk[0] * n + jk[1]]));
    let counit_name = if right { "right coaction counital" } else { "left coaction counital" };
    rep.assert_that(counit_name, "(id⊗ε)δ = id", combo(d, a.counit(), dim).is_identity());
    rep
}

/// Comodule and module axioms, the compatibility and non-degeneracy
/// identities of every variant present, and commutation of the actions and
/// of the coactions.
pub fn check_whm<F: Field>(a: &WeakBialgebra<F>, m: &WeakHopfModule<F>) -> Report {
    let n = a.dim();
    let dim = m.dim;
    let mut rep = Report::new();
    let p = a.projections();
    if let Some(l) = &m.left {
        match LeftModule::new(dim, l.clone()) {
            Ok(lm) => rep.extend(modules::check_module(a, &lm)),
            Err(_) => rep.assert_that("left action shape", "dim × dim matrices", false),
        }
    }
    if let Some(r) = &m.right {
        rep.extend(check_right_module(a, r, dim));
    }
    if let Some(d) = &m.right_coaction {
        rep.extend(check_coaction(a, d, dim, true));
    }
    if let Some(e) = &m.left_coaction {
        rep.extend(check_coaction(a, e, dim, false));
    }
    if let (Some(l), Some(r)) = (&m.left, &m.right) {
        rep.record("bimodule", "(a·m)·b = a·(m·b)", first_failure(pairs(n), |ij| l[ij[0]].mul(&r[ij[1]]) == r[ij[1]].mul(&l[ij[0]])));
    }
    if let (Some(d), Some(e)) = (&m.right_coaction, &m.left_coaction) {
        rep.record("bicomodule", "(δ_L⊗id)δ_R = (id⊗δ_R)δ_L", first_failure(pairs(n), |jk| e[jk[0]].mul(&d[jk[1]]) == d[jk[1]].mul(&e[jk[0]])));
    }
    for v in m.variants() {
        let tag = v.to_string();
        let (act, co) = match v {
            Variant::RightRight => (m.right.as_ref(), m.right_coaction.as_ref()),
            Variant::LeftRight => (m.left.as_ref(), m.right_coaction.as_ref()),
            Variant::LeftLeft => (m.left.as_ref(), m.left_coaction.as_ref()),
            Variant::RightLeft => (m.right.as_ref(), m.left_coaction.as_ref()),
        };
        let (Some(act), Some(co)) = (act, co) else { continue };
        let anchor = match v {
            Variant::RightRight => "(m·a)_0⊗(m·a)_1 = m_0·a(1)⊗m_1a(2)",
            Variant::LeftRight => "(a·m)_0⊗(a·m)_1 = a(1)·m_0⊗a(2)m_1",
            Variant::LeftLeft => "(a·m)_-1⊗(a·m)_0 = a(1)m_-1⊗a(2)·m_0",
            Variant::RightLeft => "(m·a)_-1⊗(m·a)_0 = m_-1a(1)⊗m_0·a(2)",
        };
        rep.record(
            format!("{tag} compatibility"),
            anchor,
            first_failure(pairs(n), |ik| {
                let (i, k) = (ik[0], ik[1]);
                let lhs = co[k].mul(&act[i]);
                let mut rhs = Matrix::zeros(dim, dim);
                for (x, y, c) in a.basis_coproduct(i) {
                    // the acting leg and the leg multiplied into the coaction
                    let (acting, mult_leg) = match v {
                        Variant::RightRight | Variant::LeftRight => (*x, *y),
                        Variant::LeftLeft | Variant::RightLeft => (*y, *x),
                    };
                    for j in 0..n {
                        let prod = match v {
                            Variant::RightRight => a.basis_product(j, mult_leg),
                            Variant::LeftRight => a.basis_product(mult_leg, j),
                            Variant::LeftLeft => a.basis_product(mult_leg, j),
                            Variant::RightLeft => a.basis_product(j, mult_leg),
                        };
                        let Some((_, mu)) = prod.iter().find(|(kk, _)| *kk == k) else { continue };
                        rhs.add_scaled(&(c.clone() * mu), &act[acting].mul(&co[j]));
                    }
                }
                lhs == rhs
            }),
        );
        let (proj, anchor) = match v {
            Variant::RightRight => (&p.pi_r, "m = m_0·Π^R(m_1)"),
            Variant::LeftRight => (&p.pibar_r, "m = Π̄^R(m_1)·m_0"),
            Variant::LeftLeft => (&p.pi_l, "m = Π^L(m_-1)·m_0"),
            Variant::RightLeft => (&p.pibar_l, "m = m_0·Π̄^L(m_-1)"),
        };
        let mut total = Matrix::zeros(dim, dim);
        for k in 0..n {
            total.add_scaled(&F::one(), &combo(act, &proj.col(k), dim).mul(&co[k]));
        }
        rep.assert_that(format!("{tag} non-degeneracy"), anchor, total.is_identity());
    }
    rep
}

fn kernel_of_maps<F: Field>(dim: usize, maps: &[Matrix<F>]) -> Subspace<F> {
    common_kernel(dim, maps.len(), |i, v| maps[i].apply(v))
}

/// Coinvariants of the right (`Side::Right`) or left coaction.
///
/// The defining form δ_R(m) ∈ M⊗A^L is solved when dim M · dim A is at most
/// [`CHECK_MAX`], and compared with δ_R(m) = m·1(1)⊗1(2) or
/// 1(1)·m⊗1(2) for each variant present, and for the right coaction with
/// the invariants of the dual Â-action φ·m = m_0⟨φ, m_1⟩.
pub fn coinvariants<F: Field>(w: &WeakHopfAlgebra<F>, m: &WeakHopfModule<F>, side: Side) -> Result<(Subspace<F>, Report)> {
    let n = w.dim();
    let dim = m.dim;
    let co = match side {
        Side::Right => m.right_coaction()?,
        Side::Left => m.left_coaction()?,
    };
    let mut rep = Report::new();
    let mut routes: Vec<(String, Subspace<F>)> = Vec::new();
    // δ(m) = 1(1)-leg acting ⊗ 1(2), or 1(1) ⊗ 1(2)-leg acting
    let mut legs: Vec<(Variant, &[Matrix<F>])> = Vec::new();
    match side {
        Side::Right => {
            if let Some(r) = &m.right {
                legs.push((Variant::RightRight, r));
            }
            if let Some(l) = &m.left {
                legs.push((Variant::LeftRight, l));
            }
        }
        Side::Left => {
            if let Some(l) = &m.left {
                legs.push((Variant::LeftLeft, l));
            }
            if let Some(r) = &m.right {
                legs.push((Variant::RightLeft, r));
            }
        }
    }
    for (v, act) in &legs {
        let mut maps: Vec<Matrix<F>> = co.to_vec();
        for (x, y, c) in w.delta_one() {
            let (acting, slot) = if side == Side::Right { (*x, *y) } else { (*y, *x) };
            maps[slot].add_scaled(&-c.clone(), &act[acting]);
        }
        routes.push((format!("{v} unit form"), kernel_of_maps(dim, &maps)));
    }
    if dim * n <= CHECK_MAX || routes.is_empty() {
        let p = w.projections();
        let proj = if side == Side::Right { &p.pi_l } else { &p.pi_r };
        let comp = Matrix::identity(n).sub(proj);
        let maps: Vec<Matrix<F>> = (0..n).map(|j| combo(co, comp.row(j), dim)).collect();
        routes.push(("defining form".into(), kernel_of_maps(dim, &maps)));
        if side == Side::Right {
            // invariants of the Â-action f_k·m = D_k m
            let pl_hat = w.dual().projections().pi_l;
            let maps: Vec<Matrix<F>> = (0..n).map(|k| co[k].sub(&combo(co, &pl_hat.col(k), dim))).collect();
            routes.push(("dual action invariants".into(), kernel_of_maps(dim, &maps)));
        }
    }
    let (first_name, first) = routes[0].clone();
    for (name, s) in &routes[1..] {
        rep.assert_that(format!("coinvariants: {first_name} = {name}"), "C(M) by equivalent characterizations", *s == first);
    }
    Ok((first, rep))
}

/// Invariants of the left (`Side::Left`) or right action, by the defining
/// form and, for small modules, by the coaction form of each variant.
pub fn invariants<F: Field>(w: &WeakHopfAlgebra<F>, m: &WeakHopfModule<F>, side: Side) -> Result<(Subspace<F>, Report)> {
    let n = w.dim();
    let dim = m.dim;
    let p = w.projections();
    let act = match side {
        Side::Left => m.left_action()?,
        Side::Right => m.right_action()?,
    };
    let proj = if side == Side::Left { &p.pi_l } else { &p.pi_r };
    let maps: Vec<Matrix<F>> = (0..n).map(|i| act[i].sub(&combo(act, &proj.col(i), dim))).collect();
    let base = kernel_of_maps(dim, &maps);
    let mut rep = Report::new();
    if dim * n > CHECK_MAX {
        return Ok((base, rep));
    }
    let s = w.antipode();
    let variants: Vec<(Variant, &[Matrix<F>])> = match side {
        Side::Right => [(Variant::RightRight, &m.right_coaction), (Variant::RightLeft, &m.left_coaction)]
            .into_iter()
            .filter_map(|(v, c)| c.as_deref().map(|c| (v, c)))
            .collect(),
        Side::Left => [(Variant::LeftRight, &m.right_coaction), (Variant::LeftLeft, &m.left_coaction)]
            .into_iter()
            .filter_map(|(v, c)| c.as_deref().map(|c| (v, c)))
            .collect(),
    };
    for (v, co) in variants {
        let mut maps = Vec::with_capacity(n * n);
        for i in 0..n {
            let sa = s.col(i);
            let ea = w.basis(i);
            let s_act = combo(act, &sa, dim);
            for k in 0..n {
                // coefficient of e_k in the product on the coalgebra leg
                let coef = |j: usize| -> F {
                    let ej = w.basis(j);
                    let prod = match v {
                        Variant::RightRight => w.mul(&ej, &sa),
                        Variant::LeftRight => w.mul(&ea, &ej),
                        Variant::LeftLeft => w.mul(&sa, &ej),
                        Variant::RightLeft => w.mul(&ej, &ea),
                    };
                    prod[k].clone()
                };
                let mut sum = Matrix::zeros(dim, dim);
                for (j, d) in co.iter().enumerate() {
                    sum.add_scaled(&coef(j), d);
                }
                let acted = match v {
                    Variant::RightRight | Variant::LeftLeft => act[i].mul(&co[k]),
                    Variant::LeftRight | Variant::RightLeft => s_act.mul(&co[k]),
                };
                maps.push(acted.sub(&sum));
            }
        }
        let route = kernel_of_maps(dim, &maps);
        rep.assert_that(format!("invariants: defining form = {v} coaction form"), "I(M) by equivalent characterizations", route == base);
    }
    Ok((base, rep))
}

/// A projection onto (co)invariants with its name.
#[derive(Clone, Debug)]
pub struct WhmProjection<F> {
    pub name: &'static str,
    pub matrix: Matrix<F>,
    pub target: Subspace<F>,
}

/// The projections onto coinvariants (m_0·S(m_1) and its mirrors) and onto
/// invariants (m_0·R(m_1) and its mirrors) for every variant present.
pub fn whm_projections<F: Field>(w: &WeakHopfAlgebra<F>, m: &WeakHopfModule<F>) -> Result<(Vec<WhmProjection<F>>, Report)> {
    let n = w.dim();
    let dim = m.dim;
    let (ip, mut rep) = integral_projections(w);
    let s = w.antipode();
    let si = w.s_inv_matrix();
    let mut out = Vec::new();
    for v in m.variants() {
        let (act, co, co_side, act_side) = match v {
            Variant::RightRight => (m.right_action()?, m.right_coaction()?, Side::Right, Side::Right),
            Variant::LeftRight => (m.left_action()?, m.right_coaction()?, Side::Right, Side::Left),
            Variant::LeftLeft => (m.left_action()?, m.left_coaction()?, Side::Left, Side::Left),
            Variant::RightLeft => (m.right_action()?, m.left_coaction()?, Side::Left, Side::Right),
        };
        let (c_name, c_map, i_name, i_map) = match v {
            Variant::RightRight => ("m_0·S(m_1)", s, "m_0·R(m_1)", &ip.r),
            Variant::LeftRight => ("S⁻¹(m_1)·m_0", si, "L̄(m_1)·m_0", &ip.lbar),
            Variant::LeftLeft => ("S(m_-1)·m_0", s, "L(m_-1)·m_0", &ip.l),
            Variant::RightLeft => ("m_0·S⁻¹(m_-1)", si, "m_0·R̄(m_-1)", &ip.rbar),
        };
        let (coinv, r1) = coinvariants(w, m, co_side)?;
        rep.extend(r1);
        let (inv, r2) = invariants(w, m, act_side)?;
        rep.extend(r2);
        for (name, f, target) in [(c_name, c_map, coinv), (i_name, i_map, inv)] {
            let mut total = Matrix::zeros(dim, dim);
            for k in 0..n {
                total.add_scaled(&F::one(), &combo(act, &f.col(k), dim).mul(&co[k]));
            }
            let image = total.image();
            rep.assert_that(format!("{v} {name} lands in target"), format!("{name} ∈ target subspace"), image == target);
            rep.assert_that(
                format!("{v} {name} fixes target"),
                format!("{name} = m on the target"),
                target.basis_vectors().iter().all(|x| total.apply(x) == *x),
            );
            rep.assert_that(format!("{v} {name} idempotent"), format!("{name} twice = {name}"), total.mul(&total) == total);
            out.push(WhmProjection { name, matrix: total, target });
        }
    }
    Ok((out, rep))
}

/// a★m = a(1)·m·S(a(2)) on the coinvariants of a multiple WHM _AM^A_A.
pub fn star_action<F: Field>(w: &WeakHopfAlgebra<F>, m: &WeakHopfModule<F>, coinv: &Subspace<F>) -> Result<(LeftModule<F>, Report)> {
    let n = w.dim();
    let dim = m.dim;
    let l = m.left_action()?;
    let r = m.right_action()?;
    let s = w.antipode();
    let full: Vec<Matrix<F>> = (0..n)
        .map(|i| {
            let mut t = Matrix::zeros(dim, dim);
            for (x, y, c) in w.basis_coproduct(i) {
                t.add_scaled(c, &l[*x].mul(&combo(r, &s.col(*y), dim)));
            }
            t
        })
        .collect();
    let mut rep = Report::new();
    let closed = LeftModule::new(dim, full)?.restrict(coinv);
    rep.assert_that("★ preserves coinvariants", "δ_R(a★m) ∈ M⊗A^L", closed.is_ok());
    let star = closed?;
    rep.extend_prefixed("★", modules::check_module(w, &star));
    rep.assert_that("1★m = m", "1(1)·m·S(1(2)) = m on C(M)", star.rho(w.unit()).is_identity());
    Ok((star, rep))
}

/// U: M → C(M)⊗A and V: C(M)⊗A → M, with C(M) in RREF coordinates.
#[derive(Clone, Debug)]
pub struct StructureMaps<F> {
    pub coinvariants: Subspace<F>,
    pub star: LeftModule<F>,
    pub u: Matrix<F>,
    pub v: Matrix<F>,
    /// (★⊗L)(Δ(1)) on C(M)⊗A; its image is C(M)×A.
    pub projector: Matrix<F>,
}

/// U(m) = m_0·S(m_1)⊗m_2 and V(n⊗b) = n·b for a multiple WHM _AM^A_A.
///
/// Certifies V∘U = id_M, that U lands in C(M)×A and that C(M)×A has
/// dimension dim M (together: U∘V = id on C(M)×A). For small modules also
/// the left/right module and comodule map properties of U and V.
pub fn structure_theorem<F: Field>(w: &WeakHopfAlgebra<F>, m: &WeakHopfModule<F>) -> Result<(StructureMaps<F>, Report)> {
    let n = w.dim();
    let dim = m.dim;
    let r = m.right_action()?;
    let d = m.right_coaction()?;
    let (coinv, mut rep) = coinvariants(w, m, Side::Right)?;
    let (star, srep) = star_action(w, m, &coinv)?;
    rep.extend(srep);
    let c = coinv.dim();
    let s = w.antipode();
    let mut pa = Matrix::zeros(dim, dim);
    for k in 0..n {
        pa.add_scaled(&F::one(), &combo(r, &s.col(k), dim).mul(&d[k]));
    }
    let piv = coinv.pivots();
    let mut u = Matrix::zeros(c * n, dim);
    let mut in_c = true;
    for k in 0..n {
        let block = pa.mul(&d[k]);
        for col in 0..dim {
            let x = block.col(col);
            if !in_c || !coinv.contains(&x) {
                in_c = false;
                continue;
            }
            for (i, &p) in piv.iter().enumerate() {
                u.set(i * n + k, col, x[p].clone());
            }
        }
    }
    rep.assert_that("U lands in C(M)⊗A", "m_0·S(m_1) ∈ C(M)", in_c);
    let basis = coinv.basis_vectors();
    let mut v = Matrix::zeros(dim, c * n);
    for (i, b) in basis.iter().enumerate() {
        for k in 0..n {
            let x = r[k].apply(b);
            for (row, val) in x.into_iter().enumerate() {
                v.set(row, i * n + k, val);
            }
        }
    }
    let mut proj = Matrix::zeros(c * n, c * n);
    let lmul: Vec<Matrix<F>> = (0..n).map(|i| w.left_mul_matrix(&w.basis(i))).collect();
    for (x, y, coef) in w.delta_one() {
        proj.add_kron_scaled(coef, star.action(*x), &lmul[*y]);
    }
    let vu = v.mul(&u).is_identity();
    let pu = proj.mul(&u) == u;
    rep.assert_that("V∘U = id", "V(U(m)) = m", vu);
    rep.assert_that("U lands in C(M)×A", "Δ(1)·U(m) = U(m)", pu);
    let rank = proj.rank();
    rep.assert_that("dim C(M)×A = dim M", "rank (★⊗L)(Δ(1)) = dim M", rank == dim);
    if dim * n <= CHECK_MAX {
        let basis_c: Vec<Vec<F>> = proj.col_vecs();
        rep.assert_that(
            "U∘V = id",
            "U(V(x)) = x on C(M)×A",
            basis_c.iter().all(|x| u.apply(&v.apply(x)) == *x),
        );
        let l = m.left_action()?;
        let id_c = Matrix::identity(c);
        let mut right_ok = Ok(());
        let mut left_ok = Ok(());
        let mut co_ok = Ok(());
        for i in 0..n {
            let mut lact = Matrix::zeros(c * n, c * n);
            for (x, y, coef) in w.basis_coproduct(i) {
                lact.add_kron_scaled(coef, star.action(*x), &lmul[*y]);
            }
            let ract = id_c.kron(&w.right_mul_matrix(&w.basis(i)));
            if left_ok.is_ok() && (u.mul(&l[i]) != lact.mul(&u) || v.mul(&lact).mul(&u) != l[i]) {
                left_ok = Err(vec![i]);
            }
            if right_ok.is_ok() && (u.mul(&r[i]) != ract.mul(&u) || v.mul(&ract).mul(&u) != r[i]) {
                right_ok = Err(vec![i]);
            }
            // δ(n⊗b) = n⊗b(1)⊗b(2): coefficient of e_i on the last leg
            let mut t = Matrix::zeros(n, n);
            for b in 0..n {
                for (j, k, coef) in w.basis_coproduct(b) {
                    if *k == i {
                        add_at(&mut t, *j, b, coef);
                    }
                }
            }
            let dco = id_c.kron(&t);
            if co_ok.is_ok() && (u.mul(&d[i]) != dco.mul(&u) || v.mul(&dco).mul(&u) != d[i]) {
                co_ok = Err(vec![i]);
            }
        }
        rep.record("U, V left module maps", "U(a·m) = a·U(m)", left_ok);
        rep.record("U, V right module maps", "U(m·a) = U(m)·a", right_ok);
        rep.record("U, V comodule maps", "(U⊗id)δ = δU", co_ok);
        // C(M)×A is spanned by n·S(1(1)) ⊗ 1(2)b; the sum over Δ(1) is
        // formed in M⊗A before passing to C(M) coordinates
        let mut gens = Vec::new();
        let mut closed = true;
        for cb in &basis {
            for b in 0..n {
                let mut x = Matrix::<F>::zeros(dim, n);
                for (p, q, coef) in w.delta_one() {
                    let left = combo(r, &s.col(*p), dim).apply(cb);
                    let right = w.mul(&w.basis(*q), &w.basis(b));
                    for (row, lc) in left.iter().enumerate() {
                        for (k, rc) in right.iter().enumerate() {
                            let val = x.get(row, k).clone() + coef.clone() * lc * rc;
                            x.set(row, k, val);
                        }
                    }
                }
                let mut g = vec![F::zero(); c * n];
                for k in 0..n {
                    match coinv.coordinates(&x.col(k)) {
                        Some(cc) => cc.into_iter().enumerate().for_each(|(i, v)| g[i * n + k] = v),
                        None => closed = false,
                    }
                }
                gens.push(g);
            }
        }
        rep.assert_that(
            "C(M)×A = C(M)·S(1(1))⊗1(2)A",
            "image of the Δ(1)-projector equals the spanned subspace",
            closed && Subspace::from_vectors(c * n, gens) == proj.image(),
        );
        rep.record(
            "C(M)×A is a right module summand",
            "Δ(1)-projector commutes with the right action",
            first_failure(singles(n), |i| {
                let ract = id_c.kron(&w.right_mul_matrix(&w.basis(i[0])));
                proj.mul(&ract) == ract.mul(&proj)
            }),
        );
    } else {
        // U injective with image inside C(M)×A of the same dimension, so U
        // is onto it and UVU = U gives UV = id there.
        rep.assert_that("U∘V = id", "V∘U = id, im U ⊂ C(M)×A, rank agrees", vu && pu && rank == dim);
    }
    Ok((StructureMaps { coinvariants: coinv, star, u, v, projector: proj }, rep))
}

/// Certificates about the integrals as modules: (Î^L, ★) and I^R are free
/// of rank one over A^L and A^R, Î^L is the right conjugate of I^R through
/// the pairing, Ŝ∘κ_L is a module map A^L → Â^L, and Ŝ⁻¹ intertwines ⟵
/// with the right action of Â.
pub fn freeness_certificates<F: Field>(w: &WeakHopfAlgebra<F>, bound: usize) -> Result<Report> {
    let n = w.dim();
    let dual = dual_whm(w);
    let (coinv, mut rep) = coinvariants(w, &dual, Side::Right)?;
    let hat = w.dual();
    let il_hat = hat.integral_space(Side::Left);
    rep.assert_that("C(Â) = Î^L", "coinvariants of Â are the left integrals of Â", coinv == il_hat);
    let (star, srep) = star_action(w, &dual, &coinv)?;
    rep.extend(srep);
    let ir = w.integral_space(Side::Right);
    let irm = modules::left_ideal_module(w, &ir)?;
    let inv_star = modules::is_invertible_module(w, &star, bound);
    let inv_ir = modules::is_invertible_module(w, &irm, bound);
    rep.assert_that("Î^L free of rank one", "x ↦ x★λ₀ injective on A^L and A^R", inv_star.invertible);
    rep.assert_that("I^R free of rank one", "x ↦ x r₀ injective on A^L and A^R", inv_ir.invertible);
    // ⟨a★λ, r⟩ = ⟨λ, S⁻¹(a) r⟩
    let lam = coinv.basis_vectors();
    let rs = ir.basis_vectors();
    let gram = Matrix::from_fn_cols(lam.len(), rs.len(), |j| lam.iter().map(|l| w.pair(l, &rs[j])).collect());
    rep.assert_that("Î^L, I^R pairing non-degenerate", "⟨Î^L, I^R⟩ non-degenerate", gram.is_invertible());
    let s_inv = w.s_inv_matrix();
    rep.record(
        "Î^L = Cr(I^R)",
        "⟨a★λ, r⟩ = ⟨λ, S⁻¹(a)r⟩",
        first_failure(singles(n), |i| {
            let a_star = star.action(i[0]);
            let left = a_star.transpose().mul(&gram);
            let right = gram.mul(&irm.rho(&s_inv.col(i[0])));
            left == right
        }),
    );
    let subs = w.canonical_subalgebras();
    // Hom(_A I^R, _A A) consists of right multiplications by A^R
    let hom = modules::hom_space(&irm, &modules::regular_module(w));
    rep.assert_that("Hom(I^R, A) ≅ A^R", "dim Hom_A(I^R, A) = dim A^R", hom.dim() == subs.right.dim());
    // block decompositions along the primitive idempotents of Z^R
    if let Some(zs) = modules::primitive_idempotents(w, &subs.z_right) {
        let mut dims_ok = true;
        let (mut sum_r, mut sum_l) = (0, 0);
        for z in &zs {
            let zr = Subspace::from_vectors(n, rs.iter().map(|r| w.mul(z, r)));
            let zl = star.rho(z).image().dim();
            dims_ok &= zr.dim() > 0 && zr.dim() == zl && zr.is_subspace_of(&ir);
            sum_r += zr.dim();
            sum_l += zl;
        }
        rep.assert_that(
            "I^R, Î^L split along Z^R",
            "I^R = ⊕ z_p I^R and Î^L = ⊕ z_p★Î^L with matching block dimensions",
            dims_ok && sum_r == ir.dim() && sum_l == coinv.dim(),
        );
    }
    let hat_left = hat.projections().pi_l.image();
    let eps = w.counit().to_vec();
    let pi_l = w.projections().pi_l;
    rep.record(
        "Ŝ∘κ_L module map",
        "Ŝ(Π^L(ax)⇀1̂) = Ŝ(x⇀1̂)⟵S⁻¹(a)",
        first_failure(pairs(n).filter(|ij| ij[1] < subs.left.dim()), |ij| {
            let x = subs.left.vector(ij[1]);
            let lhs = w.s_hat(&w.dual_hit(&pi_l.apply(&w.mul(&w.basis(ij[0]), &x)), &eps));
            let rhs = w.dual_hit_r(&w.s_hat(&w.dual_hit(&x, &eps)), &s_inv.col(ij[0]));
            lhs == rhs
        }),
    );
    rep.assert_that(
        "Ŝ∘κ_L onto Â^L",
        "Ŝ(A^L⇀1̂) = Â^L",
        Subspace::from_vectors(n, subs.left.basis_vectors().iter().map(|x| w.s_hat(&w.dual_hit(x, &eps)))) == hat_left,
    );
    let (inv_r, _) = invariants(w, &dual, Side::Right)?;
    rep.assert_that("I(Â_A) = Â^L", "invariants of (Â, μ_R) are Â^L", inv_r == hat_left);
    // Ŝ⁻¹(φ⟵a) = S(a)⇀Ŝ⁻¹(φ)
    let r = dual.right_action()?;
    rep.record(
        "Ŝ⁻¹ right module isomorphism",
        "Ŝ⁻¹(φ⟵a) = Ŝ⁻¹(φ)·a",
        first_failure(singles(n), |i| {
            let hit = w.matrix_of(|phi| w.dual_hit_r(phi, &w.basis(i[0])));
            let s_hat_inv = s_inv.transpose();
            s_hat_inv.mul(&hit) == r[i[0]].mul(&s_hat_inv)
        }),
    );
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn regular_whm_passes() {
        for w in [zoo::cyclic_group(2), zoo::m2q(), zoo::sweedler_h4()] {
            let m = regular_whm(&w);
            assert_eq!(m.variants().len(), 4);
            let rep = check_whm(&w, &m);
            assert!(rep.passed(), "{:?}", rep.failures());
        }
    }

    #[test]
    fn dual_whm_passes() {
        for w in [zoo::cyclic_group(3), zoo::m2q(), zoo::s3()] {
            let rep = check_whm(&w, &dual_whm(&w));
            assert!(rep.passed(), "{:?}", rep.failures());
        }
    }

    #[test]
    fn corrupted_coaction_fails() {
        let w = zoo::m2q();
        let mut m = regular_whm(&w);
        m.left_coaction = None;
        let d = m.right_coaction.as_mut().unwrap();
        let z = d[0].clone();
        d[0] = d[1].clone();
        d[1] = z;
        let rep = check_whm(&w, &m);
        assert!(!rep.passed());
        assert!(rep.failures().iter().any(|c| c.identity.contains("compatibility") && !c.witness.is_empty()));
    }

    #[test]
    fn regular_coinvariants_and_invariants() {
        let w = zoo::m2q();
        let m = regular_whm(&w);
        let subs = w.canonical_subalgebras();
        let (c, rep) = coinvariants(&w, &m, Side::Right).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures());
        assert_eq!(c, subs.left);
        let (c, rep) = coinvariants(&w, &m, Side::Left).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures());
        assert_eq!(c, subs.right);
        let (i, rep) = invariants(&w, &m, Side::Left).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures());
        assert_eq!(i, w.integral_space(Side::Left));
        let (i, rep) = invariants(&w, &m, Side::Right).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures());
        assert_eq!(i, w.integral_space(Side::Right));
    }

    #[test]
    fn z2_coinvariants_are_scalars() {
        let w = zoo::cyclic_group(2);
        let (c, _) = coinvariants(&w, &regular_whm(&w), Side::Right).unwrap();
        assert_eq!(c, Subspace::from_vectors(2, [w.one()]));
    }

    #[test]
    fn projections_on_z2_and_m2q() {
        let w = zoo::cyclic_group(2);
        let (ps, rep) = whm_projections(&w, &regular_whm(&w)).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures());
        let pa = ps.iter().find(|p| p.name == "m_0·S(m_1)").unwrap();
        assert_eq!(pa.matrix, w.projections().pi_l);
        let w = zoo::m2q();
        let (ps, rep) = whm_projections(&w, &dual_whm(&w)).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures());
        assert_eq!(ps[0].matrix.rank(), 4);
    }

    #[test]
    fn star_on_regular_is_unit_module() {
        let w = zoo::m2q();
        let m = regular_whm(&w);
        let (c, _) = coinvariants(&w, &m, Side::Right).unwrap();
        let (star, rep) = star_action(&w, &m, &c).unwrap();
        assert!(rep.passed());
        let (u, _) = modules::unit_module(&w).unwrap();
        assert_eq!(star, u.module);
    }

    #[test]
    fn structure_theorem_on_regular_and_dual() {
        for w in [zoo::cyclic_group(2), zoo::m2q(), zoo::sweedler_h4()] {
            let (_, rep) = structure_theorem(&w, &regular_whm(&w)).unwrap();
            assert!(rep.passed(), "{:?}", rep.failures());
            let (s, rep) = structure_theorem(&w, &dual_whm(&w)).unwrap();
            assert!(rep.passed(), "{:?}", rep.failures());
            assert_eq!(s.coinvariants, w.dual().integral_space(Side::Left));
        }
    }

    #[test]
    fn freeness_on_z2_and_m2q() {
        for w in [zoo::cyclic_group(2), zoo::m2q()] {
            let rep = freeness_certificates(&w, 3).unwrap();
            assert!(rep.passed(), "{:?}", rep.failures());
        }
    }
}
