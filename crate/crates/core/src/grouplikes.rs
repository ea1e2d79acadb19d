//! Left, right and two-sided grouplikes, trivial grouplikes, cosets modulo
//! A^T, distinguished grouplikes and the implementer of S² on A^T.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::integrals::{self, DualPair};
use crate::linalg::{Matrix, Subspace};
use crate::report::Report;
use crate::tensor::Tensor2;
use crate::wba::{Side, WeakBialgebra};
use crate::wha::WeakHopfAlgebra;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Left,
    Right,
    Both,
}

impl Kind {
    pub fn is_left(self) -> bool {
        matches!(self, Kind::Left | Kind::Both)
    }

    pub fn is_right(self) -> bool {
        matches!(self, Kind::Right | Kind::Both)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrouplikeWitness<F> {
    pub g: Vec<F>,
    pub kind: Kind,
    pub inverse: Vec<F>,
    pub pi_l: Vec<F>,
    pub pi_r: Vec<F>,
}

/// Two-sided inverse by solving g x = 1 and checking x g = 1.
pub fn inverse<F: Field>(a: &WeakBialgebra<F>, g: &[F]) -> Option<Vec<F>> {
    let lm = a.left_mul_matrix(g);
    let sol = crate::linalg::solve(&lm, &a.one());
    let x = sol.particular?;
    (a.mul(&x, g) == a.one() && a.mul(g, &x) == a.one()).then_some(x)
}

fn pure_tensor<F: Field>(n: usize, x: &[F], y: &[F]) -> Tensor2<F> {
    crate::tensor::normalize2(
        crate::tensor::nonzero(x).flat_map(|(i, u)| crate::tensor::nonzero(y).map(move |(j, v)| (i, j, u.clone() * v))).collect::<Vec<_>>(),
        n,
    )
}

/// Classifies `g` as a right (Δ(g) = (g⊗g)Δ(1)), left (Δ(g) = Δ(1)(g⊗g))
/// or two-sided grouplike, or `None`.
pub fn classify_grouplike<F: Field>(a: &WeakBialgebra<F>, g: &[F]) -> Option<GrouplikeWitness<F>> {
    let inv = inverse(a, g)?;
    let n = a.dim();
    let gg = pure_tensor(n, g, g);
    let d1 = a.delta_one().to_vec();
    let dg = a.coproduct(g);
    let right = dg == a.mul2(&gg, &d1);
    let left = dg == a.mul2(&d1, &gg);
    let kind = match (left, right) {
        (true, true) => Kind::Both,
        (true, false) => Kind::Left,
        (false, true) => Kind::Right,
        (false, false) => return None,
    };
    let p = a.projections();
    Some(GrouplikeWitness { g: g.to_vec(), kind, inverse: inv, pi_l: p.pi_l.apply(g), pi_r: p.pi_r.apply(g) })
}

pub fn trivial_subalgebra<F: Field>(a: &WeakBialgebra<F>) -> Subspace<F> {
    let p = a.projections();
    a.generated_subalgebra(&p.pi_l.image().sum(&p.pi_r.image()))
}

pub fn in_trivial_subalgebra<F: Field>(a: &WeakBialgebra<F>, x: &[F]) -> bool {
    trivial_subalgebra(a).contains(x)
}

/// x_L S(x_L⁻¹) (right) or x_L S⁻¹(x_L⁻¹) (left) for invertible x_L ∈ A^L.
pub fn trivial_grouplike<F: Field>(w: &WeakHopfAlgebra<F>, x_l: &[F], side: Side) -> Result<(GrouplikeWitness<F>, Report)> {
    let p = w.projections();
    if !p.pi_l.image().contains(x_l) {
        return Err(Error::Input("x_L is not in A^L".into()));
    }
    let inv = inverse(w, x_l).ok_or_else(|| Error::Input("x_L is not invertible".into()))?;
    let g = match side {
        Side::Right => w.mul(x_l, &w.s(&inv)),
        Side::Left => {
            if w.antipode_inv().is_none() {
                return Err(Error::Input("antipode is not invertible".into()));
            }
            w.mul(x_l, &w.s_inv(&inv))
        }
    };
    let witness = classify_grouplike(w, &g);
    let mut rep = Report::new();
    let kind_ok = witness.as_ref().is_some_and(|wt| match side {
        Side::Right => wt.kind.is_right(),
        Side::Left => wt.kind.is_left(),
    });
    let anchor = match side {
        Side::Right => "x_L S(x_L⁻¹) ∈ G^T_R(A)",
        Side::Left => "x_L S⁻¹(x_L⁻¹) ∈ G^T_L(A)",
    };
    rep.assert_that("trivial grouplike kind", anchor, kind_ok);
    rep.assert_that("trivial grouplike in A^T", "g ∈ A^T", in_trivial_subalgebra(w, &g));
    let witness = witness.unwrap_or(GrouplikeWitness {
        g: g.clone(),
        kind: match side {
            Side::Right => Kind::Right,
            Side::Left => Kind::Left,
        },
        inverse: inverse(w, &g).unwrap_or_default(),
        pi_l: p.pi_l.apply(&g),
        pi_r: p.pi_r.apply(&g),
    });
    Ok((witness, rep))
}

/// g h⁻¹ ∈ A^T.
pub fn same_coset<F: Field>(a: &WeakBialgebra<F>, g: &GrouplikeWitness<F>, h: &GrouplikeWitness<F>) -> bool {
    in_trivial_subalgebra(a, &a.mul(&g.g, &h.inverse))
}

/// Like [`same_coset`] with a precomputed A^T.
pub fn same_coset_in<F: Field>(a: &WeakBialgebra<F>, at: &Subspace<F>, g: &GrouplikeWitness<F>, h: &GrouplikeWitness<F>) -> bool {
    at.contains(&a.mul(&g.g, &h.inverse))
}

/// s_L = l⟵λ and σ_L = λ⟵l.
pub fn distinguished_left<F: Field>(a: &WeakBialgebra<F>, pair: &DualPair<F>) -> (Vec<F>, Vec<F>) {
    (a.hit_r(&pair.l, &pair.lambda), a.dual_hit_r(&pair.lambda, &pair.l))
}

/// s_R = ρ⇀r and σ_R = r⇀ρ.
pub fn distinguished_right<F: Field>(a: &WeakBialgebra<F>, pair: &DualPair<F>) -> (Vec<F>, Vec<F>) {
    (a.hit(&pair.rho, &pair.r), a.dual_hit(&pair.r, &pair.rho))
}

#[derive(Clone, Debug)]
pub struct Distinguished<F> {
    pub s_l: GrouplikeWitness<F>,
    pub sigma_l: GrouplikeWitness<F>,
    pub s_r: Vec<F>,
    pub sigma_r: Vec<F>,
}

pub fn distinguished<F: Field>(w: &WeakHopfAlgebra<F>, pair: &DualPair<F>) -> Result<(Distinguished<F>, Report)> {
    let dual = w.dual();
    let (s_l, sigma_l) = distinguished_left(w, pair);
    let (s_r, sigma_r) = distinguished_right(w, pair);
    let mut rep = Report::new();
    let ws = classify_grouplike(w, &s_l);
    let wsig = classify_grouplike(&dual, &sigma_l);
    rep.assert_that("s_L left grouplike", "Δ(s_L) = Δ(1)(s_L⊗s_L)", ws.as_ref().is_some_and(|x| x.kind.is_left()));
    rep.assert_that("σ_L left grouplike", "Δ̂(σ_L) = Δ̂(1̂)(σ_L⊗σ_L)", wsig.as_ref().is_some_and(|x| x.kind.is_left()));
    let wsr = classify_grouplike(w, &s_r);
    rep.assert_that("s_R right grouplike", "Δ(s_R) = (s_R⊗s_R)Δ(1)", wsr.as_ref().is_some_and(|x| x.kind.is_right()));
    rep.assert_that("Π^R(s_R) = 1", "Π^R(ρ⇀r) = 1", w.projections().pi_r.apply(&s_r) == w.one());
    let wsigr = classify_grouplike(&dual, &sigma_r);
    rep.assert_that("σ_R right grouplike", "Δ̂(σ_R) = (σ_R⊗σ_R)Δ̂(1̂)", wsigr.as_ref().is_some_and(|x| x.kind.is_right()));
    match (ws, wsig) {
        (Some(s_l), Some(sigma_l)) => Ok((Distinguished { s_l, sigma_l, s_r, sigma_r }, rep)),
        _ => Err(Error::Input(format!(
            "distinguished elements failed to classify: {:?}",
            rep.failures().iter().map(|c| c.identity.clone()).collect::<Vec<_>>()
        ))),
    }
}

/// Π^L_γ(a) = Π^L(γ⇀a) for left γ, Π^R_γ(a) = Π^R(a⟵γ) for right γ, with
/// γ a grouplike of Â.
pub fn grouplike_projection<F: Field>(a: &WeakBialgebra<F>, gamma: &GrouplikeWitness<F>, side: Side) -> Result<(Matrix<F>, Report)> {
    let p = a.projections();
    let m = match side {
        Side::Left if gamma.kind.is_left() => a.matrix_of(|x| p.pi_l.apply(&a.hit(&gamma.g, x))),
        Side::Right if gamma.kind.is_right() => a.matrix_of(|x| p.pi_r.apply(&a.hit_r(x, &gamma.g))),
        _ => return Err(Error::Input("grouplike kind does not match the projection side".into())),
    };
    let target = match side {
        Side::Left => p.pi_l.image(),
        Side::Right => p.pi_r.image(),
    };
    let mut rep = Report::new();
    rep.assert_that("grouplike projection idempotent", "Π_γ∘Π_γ = Π_γ", m.mul(&m) == m);
    rep.assert_that("grouplike projection image", "Π_γ(A) = A^L or A^R", m.image() == target);
    Ok((m, rep))
}

/// la = lΠ^R_{Ŝ(σ_L⁻¹)}(a) and ar = Π^L_{Ŝ(σ_R⁻¹)}(a)r on basis elements.
pub fn check_integral_modules<F: Field>(w: &WeakHopfAlgebra<F>, pair: &DualPair<F>) -> Report {
    let dual = w.dual();
    let mut rep = Report::new();
    let (_, sigma_l) = distinguished_left(w, pair);
    let (_, sigma_r) = distinguished_right(w, pair);
    for (name, sigma, side) in [("left", sigma_l, Side::Right), ("right", sigma_r, Side::Left)] {
        let Some(inv) = inverse(&dual, &sigma) else {
            rep.assert_that(format!("σ_{name} invertible"), "σσ⁻¹ = 1̂", false);
            continue;
        };
        let gamma = dual.s(&inv);
        let Some(wt) = classify_grouplike(&dual, &gamma) else {
            rep.assert_that(format!("Ŝ(σ⁻¹) grouplike ({name})"), "Ŝ(σ⁻¹) ∈ G(Â)", false);
            continue;
        };
        let Ok((proj, _)) = grouplike_projection(w, &wt, side) else {
            rep.assert_that(format!("Ŝ(σ⁻¹) kind ({name})"), "Ŝ maps G_L to G_R", false);
            continue;
        };
        let ok = (0..w.dim()).all(|i| {
            let a = w.basis(i);
            match side {
                Side::Right => w.mul(&pair.l, &a) == w.mul(&pair.l, &proj.apply(&a)),
                Side::Left => w.mul(&a, &pair.r) == w.mul(&proj.apply(&a), &pair.r),
            }
        });
        let anchor = if side == Side::Right { "la = lΠ^R_{Ŝ(σ_L⁻¹)}(a)" } else { "ar = Π^L_{Ŝ(σ_R⁻¹)}(a)r" };
        rep.assert_that(format!("{name} integral module structure"), anchor, ok);
    }
    rep
}

/// An invertible t ∈ A^T with S²(x) = t x t⁻¹ on A^T, found by solving
/// S²(x)t = tx and searching the solution space, certified grouplike.
pub fn s2_implementer_on_at<F: Field>(w: &WeakHopfAlgebra<F>, bound: usize) -> Option<GrouplikeWitness<F>> {
    let at = trivial_subalgebra(w);
    let s2 = w.antipode().mul(w.antipode());
    implementer_in(w, &at, &s2, &at.basis_vectors(), bound)
}

/// A grouplike y ∈ `space` with m(x)y = yx for every x in `xs`, searched
/// with coefficients bounded by `bound` over a basis of the solution space.
pub fn implementer_in<F: Field>(
    w: &WeakHopfAlgebra<F>,
    space: &Subspace<F>,
    m: &Matrix<F>,
    xs: &[Vec<F>],
    bound: usize,
) -> Option<GrouplikeWitness<F>> {
    let inc = space.inclusion();
    let k = space.dim();
    let images: Vec<Vec<F>> = xs.iter().map(|x| m.apply(x)).collect();
    let cols: Vec<Vec<F>> = (0..k)
        .map(|j| {
            let t = inc.col(j);
            xs.iter()
                .zip(&images)
                .flat_map(|(x, mx)| crate::tensor::sub_vec(&w.mul(mx, &t), &w.mul(&t, x)))
                .collect()
        })
        .collect();
    let sys = Matrix::from_cols(xs.len() * w.dim(), &cols);
    let ker = sys.kernel();
    let sol = Subspace::from_vectors(w.dim(), ker.basis_vectors().iter().map(|c| inc.apply(c)));
    let pi_r = w.projections().pi_r;
    let mut hit = None;
    integrals::search(&sol, bound, |t| {
        hit = normalized_grouplike(w, &pi_r, t);
        hit.is_some()
    })?;
    hit
}

/// `t` itself if grouplike, else t·Π^R(t)⁻¹, which fixes the scaling freedom
/// of the solution space.
fn normalized_grouplike<F: Field>(w: &WeakHopfAlgebra<F>, pi_r: &Matrix<F>, t: &[F]) -> Option<GrouplikeWitness<F>> {
    if let Some(g) = classify_grouplike(w, t) {
        return Some(g);
    }
    let z = inverse(w, &pi_r.apply(t))?;
    classify_grouplike(w, &w.mul(t, &z))
}

/// Checks S²(x) = t x t⁻¹ for x in A^T.
pub fn implements_s2_on_at<F: Field>(w: &WeakHopfAlgebra<F>, t: &GrouplikeWitness<F>) -> bool {
    let at = trivial_subalgebra(w);
    let s2 = w.antipode().mul(w.antipode());
    at.basis_vectors().iter().all(|x| s2.apply(x) == w.mul_all(&[&t.g[..], x, &t.inverse[..]]))
}
