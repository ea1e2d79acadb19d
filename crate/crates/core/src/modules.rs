//! Left A-modules: the unit module, monoidal products, unit constraints,
//! conjugates with evaluation and coevaluation, the (p, q) class
//! decomposition and invertibility.
//!
//! Tensor products of modules use the same flattening as [`Matrix::kron`]:
//! e_i ⊗ e_j sits at index i·dim N + j.

use crate::error::{Error, Result};
use crate::field::{split_roots, Field};
use crate::integrals;
use crate::linalg::{common_kernel, solve, Matrix, Subspace};
use crate::report::{first_failure, pairs, singles, Report};
use crate::tensor::{axpy, basis_vec};
use crate::wba::WeakBialgebra;
use crate::wha::WeakHopfAlgebra;

/// Rigidity composites go through explicit tensor maps up to this module
/// dimension (the maps live on M⊗M⊗M); larger modules use the contracted
/// form, an element of A acting on M.
pub const RIGIDITY_EXPLICIT_MAX: usize = 24;

/// Evaluation and coevaluation are certified as module maps up to this
/// module dimension (the product projector lives on M⊗M).
pub const MODULE_MAP_MAX: usize = 32;

/// A left module given by one action matrix per basis element of A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule<F> {
    dim: usize,
    action: Vec<Matrix<F>>,
}

impl<F: Field> LeftModule<F> {
    pub fn new(dim: usize, action: Vec<Matrix<F>>) -> Result<LeftModule<F>> {
        if let Some(i) = action.iter().position(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Dimension(format!("action matrix {i} is not {dim}×{dim}")));
        }
        Ok(LeftModule { dim, action })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// ρ(e_i).
    pub fn action(&self, i: usize) -> &Matrix<F> {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix<F>] {
        &self.action
    }

    /// ρ(a) for an arbitrary element.
    pub fn rho(&self, a: &[F]) -> Matrix<F> {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (i, c) in a.iter().enumerate() {
            out.add_scaled(c, &self.action[i]);
        }
        out
    }

    pub fn act(&self, a: &[F], m: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, &self.action[i].apply(m));
            }
        }
        out
    }

    /// The submodule on `sub` in the coordinates of its RREF basis.
    pub fn restrict(&self, sub: &Subspace<F>) -> Result<LeftModule<F>> {
        let basis = sub.basis_vectors();
        let mut action = Vec::with_capacity(self.action.len());
        for (i, r) in self.action.iter().enumerate() {
            let cols = basis
                .iter()
                .map(|b| sub.coordinates(&r.apply(b)))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::Input(format!("subspace is not stable under e_{i}")))?;
            action.push(Matrix::from_cols(sub.dim(), &cols));
        }
        LeftModule::new(sub.dim(), action)
    }
}

/// Module axioms: ρ(e_i)ρ(e_j) = Σ_k μ_ij^k ρ(e_k) and ρ(1) = id.
pub fn check_module<F: Field>(a: &WeakBialgebra<F>, m: &LeftModule<F>) -> Report {
    let mut r = Report::new();
    if m.action.len() != a.dim() {
        r.assert_that("module size", "one action matrix per basis element", false);
        return r;
    }
    r.record(
        "module multiplicative",
        "ρ(e_i)ρ(e_j) = ρ(e_i e_j)",
        first_failure(pairs(a.dim()), |ij| {
            let mut prod = Matrix::zeros(m.dim, m.dim);
            for (k, c) in a.basis_product(ij[0], ij[1]) {
                prod.add_scaled(c, &m.action[*k]);
            }
            m.action[ij[0]].mul(&m.action[ij[1]]) == prod
        }),
    );
    r.assert_that("module unital", "ρ(1) = id", m.rho(a.unit()).is_identity());
    r
}

/// Whether `t` intertwines the actions; `Err` carries the first failing
/// basis index.
pub fn is_module_map<F: Field>(src: &LeftModule<F>, tgt: &LeftModule<F>, t: &Matrix<F>) -> std::result::Result<(), Vec<usize>> {
    if t.rows() != tgt.dim || t.cols() != src.dim {
        return Err(Vec::new());
    }
    first_failure(singles(src.action.len()), |i| t.mul(&src.action[i[0]]) == tgt.action[i[0]].mul(t))
}

/// A ↦ A with left multiplication.
pub fn regular_module<F: Field>(a: &WeakBialgebra<F>) -> LeftModule<F> {
    let n = a.dim();
    LeftModule { dim: n, action: (0..n).map(|i| a.left_mul_matrix(&a.basis(i))).collect() }
}

/// A left ideal of A with left multiplication, e.g. the right integrals.
pub fn left_ideal_module<F: Field>(a: &WeakBialgebra<F>, ideal: &Subspace<F>) -> Result<LeftModule<F>> {
    regular_module(a).restrict(ideal)
}

/// The unit module A^L with a·x = Π^L(ax), in the RREF basis of A^L.
#[derive(Clone, Debug)]
pub struct UnitModule<F> {
    pub module: LeftModule<F>,
    pub left: Subspace<F>,
}

impl<F: Field> UnitModule<F> {
    /// Coordinates of x ∈ A^L.
    pub fn coords(&self, x: &[F]) -> Option<Vec<F>> {
        self.left.coordinates(x)
    }

    pub fn element(&self, coords: &[F]) -> Vec<F> {
        self.left.combine(coords)
    }
}

pub fn unit_module<F: Field>(a: &WeakBialgebra<F>) -> Result<(UnitModule<F>, Report)> {
    let pi_l = a.projections().pi_l;
    let left = pi_l.image();
    let basis = left.basis_vectors();
    let mut action = Vec::with_capacity(a.dim());
    for i in 0..a.dim() {
        let e = a.basis(i);
        let cols = basis
            .iter()
            .map(|x| left.coordinates(&pi_l.apply(&a.mul(&e, x))))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Internal("Π^L leaves A^L".into()))?;
        action.push(Matrix::from_cols(left.dim(), &cols));
    }
    let module = LeftModule::new(left.dim(), action)?;
    let rep = check_module(a, &module);
    Ok((UnitModule { module, left }, rep))
}

/// ρ_M ⊗ ρ_N applied to a two-leg tensor.
pub fn tensor_action<F: Field>(m: &LeftModule<F>, n: &LeftModule<F>, t: &[(usize, usize, F)]) -> Matrix<F> {
    let mut out = Matrix::zeros(m.dim * n.dim, m.dim * n.dim);
    for (i, j, c) in t {
        out.add_kron_scaled(c, &m.action[*i], &n.action[*j]);
    }
    out
}

/// ρ_{M⊗N}(Δ(e_i)) for every basis element.
fn tensor_actions<F: Field>(a: &WeakBialgebra<F>, m: &LeftModule<F>, n: &LeftModule<F>) -> Vec<Matrix<F>> {
    (0..a.dim()).map(|i| tensor_action(m, n, a.basis_coproduct(i))).collect()
}

/// M×N = 1(1)M ⊗ 1(2)N with the diagonal action, together with its
/// position inside M⊗N.
#[derive(Clone, Debug)]
pub struct Product<F> {
    pub module: LeftModule<F>,
    pub space: Subspace<F>,
    /// (ρ_M⊗ρ_N)(Δ(1)).
    pub projector: Matrix<F>,
    /// Coordinates of the projection onto M×N; a left inverse of the inclusion.
    pub retraction: Matrix<F>,
}

impl<F: Field> Product<F> {
    pub fn inclusion(&self) -> Matrix<F> {
        self.space.inclusion()
    }
}

pub fn monoidal_product<F: Field>(a: &WeakBialgebra<F>, m: &LeftModule<F>, n: &LeftModule<F>) -> Result<(Product<F>, Report)> {
    let p = tensor_action(m, n, a.delta_one());
    let space = p.image();
    let retraction = Matrix::from_rows(space.pivots().iter().map(|&k| p.row(k).to_vec()).collect());
    let retraction = if space.dim() == 0 { Matrix::zeros(0, p.cols()) } else { retraction };
    let inc = space.inclusion();
    let full = tensor_actions(a, m, n);
    let mut rep = Report::new();
    rep.assert_that("product projector idempotent", "Δ(1)Δ(1) = Δ(1) on M⊗N", p.mul(&p) == p);
    rep.record(
        "product action stays in M×N",
        "Δ(1)Δ(a) = Δ(a) = Δ(a)Δ(1) on M⊗N",
        first_failure(singles(a.dim()), |i| p.mul(&full[i[0]]) == full[i[0]] && full[i[0]].mul(&p) == full[i[0]]),
    );
    let action = full.iter().map(|t| retraction.mul(t).mul(&inc)).collect();
    let module = LeftModule::new(space.dim(), action)?;
    rep.extend_prefixed("M×N", check_module(a, &module));
    Ok((Product { module, space, projector: p, retraction }, rep))
}

/// (M×N)×K and M×(N×K) as subspaces of M⊗N⊗K.
pub fn associativity<F: Field>(a: &WeakBialgebra<F>, m: &LeftModule<F>, n: &LeftModule<F>, k: &LeftModule<F>) -> Result<(Subspace<F>, Subspace<F>)> {
    let (mn, _) = monoidal_product(a, m, n)?;
    let (mn_k, _) = monoidal_product(a, &mn.module, k)?;
    let (nk, _) = monoidal_product(a, n, k)?;
    let (m_nk, _) = monoidal_product(a, m, &nk.module)?;
    let left = mn_k.space.map(&mn.inclusion().kron(&Matrix::identity(k.dim)));
    let right = m_nk.space.map(&Matrix::identity(m.dim).kron(&nk.inclusion()));
    Ok((left, right))
}

pub fn check_associativity<F: Field>(a: &WeakBialgebra<F>, m: &LeftModule<F>, n: &LeftModule<F>, k: &LeftModule<F>) -> Result<Report> {
    let (l, r) = associativity(a, m, n, k)?;
    let mut rep = Report::new();
    rep.assert_that("associator is the identity", "(M×N)×K = M×(N×K) in M⊗N⊗K", l == r);
    Ok(rep)
}

fn coords_in<F: Field>(unit: &UnitModule<F>, x: &[F]) -> Result<Vec<F>> {
    unit.coords(x).ok_or_else(|| Error::Internal("element expected in A^L".into()))
}

/// Δ(1) = Σ_k r_k ⊗ x_k with x_k the basis of A^L and r_k ∈ A^R, plus the
/// A^L coordinates of S(r_k).
struct DeltaOneLegs<F> {
    first: Vec<Vec<F>>,
    s_first: Vec<Vec<F>>,
    second: Vec<Vec<F>>,
    unit_basis: Vec<Vec<F>>,
}

fn delta_one_legs<F: Field>(w: &WeakHopfAlgebra<F>, unit: &UnitModule<F>) -> Result<DeltaOneLegs<F>> {
    let n = w.dim();
    let l = unit.left.dim();
    let mut first = vec![vec![F::zero(); n]; l];
    let mut rows: Vec<Vec<F>> = vec![vec![F::zero(); n]; n];
    for (u, v, c) in w.delta_one() {
        rows[*u][*v] += c;
    }
    for (u, y) in rows.iter().enumerate() {
        if y.iter().all(|c| c.is_zero()) {
            continue;
        }
        let beta = coords_in(unit, y)?;
        for (k, b) in beta.iter().enumerate() {
            first[k][u] += b;
        }
    }
    let s_first = first.iter().map(|r| coords_in(unit, &w.s(r))).collect::<Result<Vec<_>>>()?;
    let second = (0..l).map(|k| basis_vec(l, k)).collect();
    Ok(DeltaOneLegs { first, s_first, second, unit_basis: unit.left.basis_vectors() })
}

/// X^L_M(m) = S(1(1)) ⊗ 1(2)·m as a map M → A^L⊗M.
fn xl_full<F: Field>(legs: &DeltaOneLegs<F>, l: usize, m: &LeftModule<F>) -> Matrix<F> {
    let mut out = Matrix::zeros(l * m.dim, m.dim);
    for (t, s) in legs.s_first.iter().enumerate() {
        let s = Matrix::from_cols(l, &[s.clone()]);
        out.add_kron_scaled(&F::one(), &s, &m.rho(&legs.unit_basis[t]));
    }
    out
}

/// X^R_M(m) = 1(1)·m ⊗ 1(2) as a map M → M⊗A^L.
fn xr_full<F: Field>(legs: &DeltaOneLegs<F>, l: usize, m: &LeftModule<F>) -> Matrix<F> {
    let mut out = Matrix::zeros(m.dim * l, m.dim);
    for (t, r) in legs.first.iter().enumerate() {
        let s = Matrix::from_cols(l, &[legs.second[t].clone()]);
        out.add_kron_scaled(&F::one(), &m.rho(r), &s);
    }
    out
}

/// x ⊗ m ↦ x·m on A^L⊗M.
fn xl_inv_full<F: Field>(unit: &UnitModule<F>, m: &LeftModule<F>) -> Matrix<F> {
    let l = unit.left.dim();
    let mut out = Matrix::zeros(m.dim, l * m.dim);
    for k in 0..l {
        let r = m.rho(&unit.left.vector(k));
        for j in 0..m.dim {
            for i in 0..m.dim {
                out.set(i, k * m.dim + j, r.get(i, j).clone());
            }
        }
    }
    out
}

/// m ⊗ x ↦ S⁻¹(x)·m on M⊗A^L.
fn xr_inv_full<F: Field>(w: &WeakHopfAlgebra<F>, unit: &UnitModule<F>, m: &LeftModule<F>) -> Matrix<F> {
    let l = unit.left.dim();
    let mut out = Matrix::zeros(m.dim, m.dim * l);
    for k in 0..l {
        let r = m.rho(&w.s_inv(&unit.left.vector(k)));
        for j in 0..m.dim {
            for i in 0..m.dim {
                out.set(i, j * l + k, r.get(i, j).clone());
            }
        }
    }
    out
}

/// The unit constraints in product coordinates: X^L: M → A^L×M,
/// X^R: M → M×A^L and their inverses.
#[derive(Clone, Debug)]
pub struct UnitConstraints<F> {
    pub xl: Matrix<F>,
    pub xl_inv: Matrix<F>,
    pub xr: Matrix<F>,
    pub xr_inv: Matrix<F>,
    pub left_product: Product<F>,
    pub right_product: Product<F>,
}

pub fn unit_constraints<F: Field>(w: &WeakHopfAlgebra<F>, unit: &UnitModule<F>, m: &LeftModule<F>) -> Result<(UnitConstraints<F>, Report)> {
    let l = unit.left.dim();
    let legs = delta_one_legs(w, unit)?;
    let (lp, mut rep) = monoidal_product(w, &unit.module, m)?;
    let (rp, rrep) = monoidal_product(w, m, &unit.module)?;
    rep = prefixed("A^L×M", rep);
    rep.extend_prefixed("M×A^L", rrep);
    let xl_f = xl_full(&legs, l, m);
    let xr_f = xr_full(&legs, l, m);
    rep.assert_that("X^L lands in A^L×M", "S(1(1))⊗1(2)m ∈ A^L×M", lp.projector.mul(&xl_f) == xl_f);
    rep.assert_that("X^R lands in M×A^L", "1(1)m⊗1(2) ∈ M×A^L", rp.projector.mul(&xr_f) == xr_f);
    let xl = lp.retraction.mul(&xl_f);
    let xr = rp.retraction.mul(&xr_f);
    let xl_inv = xl_inv_full(unit, m).mul(&lp.inclusion());
    let xr_inv = xr_inv_full(w, unit, m).mul(&rp.inclusion());
    rep.record("X^L module map", "X^L(a·m) = a·X^L(m)", is_module_map(m, &lp.module, &xl));
    rep.record("X^R module map", "X^R(a·m) = a·X^R(m)", is_module_map(m, &rp.module, &xr));
    rep.record("X^L inverse module map", "(X^L)⁻¹(a·(x⊗m)) = a·(X^L)⁻¹(x⊗m)", is_module_map(&lp.module, m, &xl_inv));
    rep.record("X^R inverse module map", "(X^R)⁻¹(a·(m⊗x)) = a·(X^R)⁻¹(m⊗x)", is_module_map(&rp.module, m, &xr_inv));
    let both = |x: &Matrix<F>, y: &Matrix<F>| x.mul(y).is_identity() && y.mul(x).is_identity();
    rep.assert_that("X^L invertible", "(X^L)⁻¹X^L = 1, X^L(X^L)⁻¹ = 1", both(&xl, &xl_inv));
    rep.assert_that("X^R invertible", "(X^R)⁻¹X^R = 1, X^R(X^R)⁻¹ = 1", both(&xr, &xr_inv));
    Ok((UnitConstraints { xl, xl_inv, xr, xr_inv, left_product: lp, right_product: rp }, rep))
}

fn prefixed(prefix: &str, r: Report) -> Report {
    let mut out = Report::new();
    out.extend_prefixed(prefix, r);
    out
}

/// The triangle identity, as X^R_M×1_N = 1_M×X^L_N on M×N inside M⊗A^L⊗N.
pub fn triangle<F: Field>(w: &WeakHopfAlgebra<F>, unit: &UnitModule<F>, m: &LeftModule<F>, n: &LeftModule<F>) -> Result<Report> {
    let l = unit.left.dim();
    let legs = delta_one_legs(w, unit)?;
    let (mn, _) = monoidal_product(w, m, n)?;
    let inc = mn.inclusion();
    let lhs = xr_full(&legs, l, m).kron(&Matrix::identity(n.dim)).mul(&inc);
    let rhs = Matrix::identity(m.dim).kron(&xl_full(&legs, l, n)).mul(&inc);
    let mut rep = Report::new();
    rep.assert_that("triangle identity", "(X^R_M×1_N)(1_M×(X^L_N)⁻¹) = 1 on M×A^L×N", lhs == rhs);
    Ok(rep)
}

/// Naturality of X^L and X^R along a module map T: M → N.
pub fn naturality<F: Field>(w: &WeakHopfAlgebra<F>, unit: &UnitModule<F>, m: &LeftModule<F>, n: &LeftModule<F>, t: &Matrix<F>) -> Result<Report> {
    let l = unit.left.dim();
    let legs = delta_one_legs(w, unit)?;
    let mut rep = Report::new();
    rep.record("T module map", "T(a·m) = a·T(m)", is_module_map(m, n, t));
    let id_l = Matrix::identity(l);
    rep.assert_that(
        "X^L natural",
        "X^L_N T = (1×T)X^L_M",
        xl_full(&legs, l, n).mul(t) == id_l.kron(t).mul(&xl_full(&legs, l, m)),
    );
    rep.assert_that(
        "X^R natural",
        "X^R_N T = (T×1)X^R_M",
        xr_full(&legs, l, n).mul(t) == t.kron(&id_l).mul(&xr_full(&legs, l, m)),
    );
    Ok(rep)
}

/// Cl M: ⟨a·m̂, m⟩ = ⟨m̂, S(a)·m⟩, so ρ_Cl(a) = ρ(S(a))ᵀ.
pub fn left_conjugate<F: Field>(w: &WeakHopfAlgebra<F>, m: &LeftModule<F>) -> LeftModule<F> {
    let action = (0..w.dim()).map(|i| m.rho(&w.s(&w.basis(i))).transpose()).collect();
    LeftModule { dim: m.dim, action }
}

/// Cr M: ρ_Cr(a) = ρ(S⁻¹(a))ᵀ.
pub fn right_conjugate<F: Field>(w: &WeakHopfAlgebra<F>, m: &LeftModule<F>) -> LeftModule<F> {
    let s_inv = w.s_inv_matrix();
    let action = (0..w.dim()).map(|i| m.rho(&s_inv.col(i)).transpose()).collect();
    LeftModule { dim: m.dim, action }
}

pub fn conjugates<F: Field>(w: &WeakHopfAlgebra<F>, m: &LeftModule<F>) -> (LeftModule<F>, LeftModule<F>, Report) {
    let cl = left_conjugate(w, m);
    let cr = right_conjugate(w, m);
    let mut rep = prefixed("Cl M", check_module(w, &cl));
    rep.extend_prefixed("Cr M", check_module(w, &cr));
    rep.assert_that("Cl(Cr M) = M", "S∘S⁻¹ = id on action matrices", left_conjugate(w, &cr) == *m);
    rep.assert_that("Cr(Cl M) = M", "S⁻¹∘S = id on action matrices", right_conjugate(w, &cl) == *m);
    (cl, cr, rep)
}

/// E^l(m̂⊗m) = 1(2)⟨m̂, 1(1)·m⟩ as a map M̂⊗M → A^L.
fn ev_l<F: Field>(legs: &DeltaOneLegs<F>, m: &LeftModule<F>) -> Matrix<F> {
    let d = m.dim;
    let l = legs.second.first().map_or(0, Vec::len);
    let mut out = Matrix::zeros(l, d * d);
    for (t, u) in legs.first.iter().enumerate() {
        let r = m.rho(u);
        for i in 0..d {
            for j in 0..d {
                let x = r.get(i, j).clone();
                add_col(&mut out, i * d + j, &x, &legs.second[t]);
            }
        }
    }
    out
}

/// E^r(m⊗m̂) = 1(2)⟨1(1)·m̂, m⟩ with the Cr action, M⊗M̂ → A^L.
fn ev_r<F: Field>(w: &WeakHopfAlgebra<F>, legs: &DeltaOneLegs<F>, m: &LeftModule<F>) -> Matrix<F> {
    let d = m.dim;
    let l = legs.second.first().map_or(0, Vec::len);
    let mut out = Matrix::zeros(l, d * d);
    for (t, u) in legs.first.iter().enumerate() {
        let r = m.rho(&w.s_inv(u));
        for j in 0..d {
            for i in 0..d {
                let x = r.get(i, j).clone();
                add_col(&mut out, j * d + i, &x, &legs.second[t]);
            }
        }
    }
    out
}

fn add_col<F: Field>(out: &mut Matrix<F>, col: usize, c: &F, v: &[F]) {
    if c.is_zero() {
        return;
    }
    for (k, x) in v.iter().enumerate() {
        if !x.is_zero() {
            let cur = out.get(k, col).clone();
            out.set(k, col, cur + c.clone() * x);
        }
    }
}

/// C^l(x) = x·m_i ⊗ m̂_i, A^L → M⊗M̂.
fn coev_l<F: Field>(unit: &UnitModule<F>, m: &LeftModule<F>) -> Matrix<F> {
    let d = m.dim;
    let l = unit.left.dim();
    let mut out = Matrix::zeros(d * d, l);
    for k in 0..l {
        let r = m.rho(&unit.left.vector(k));
        for a in 0..d {
            for i in 0..d {
                out.set(a * d + i, k, r.get(a, i).clone());
            }
        }
    }
    out
}

/// C^r(x) = x·m̂_i ⊗ m_i with the Cr action, A^L → M̂⊗M.
fn coev_r<F: Field>(w: &WeakHopfAlgebra<F>, unit: &UnitModule<F>, m: &LeftModule<F>) -> Matrix<F> {
    let d = m.dim;
    let l = unit.left.dim();
    let mut out = Matrix::zeros(d * d, l);
    for k in 0..l {
        let r = m.rho(&w.s_inv(&unit.left.vector(k)));
        for a in 0..d {
            for i in 0..d {
                out.set(a * d + i, k, r.get(i, a).clone());
            }
        }
    }
    out
}

/// Σ S⁻¹(1(2'))S(1(1))1(1')1(2): the element of A that the left rigidity
/// composite on M, and the right one on Cr M, reduce to.
pub fn rigidity_element_a<F: Field>(w: &WeakHopfAlgebra<F>) -> Vec<F> {
    let d1 = w.delta_one();
    let mut z = vec![F::zero(); w.dim()];
    for (u, v, c) in d1 {
        for (u2, v2, c2) in d1 {
            let p = w.mul_all(&[&w.s_inv(&w.basis(*v2)), &w.s(&w.basis(*u)), &w.basis(*u2), &w.basis(*v)]);
            axpy(&mut z, &(c.clone() * c2), &p);
        }
    }
    z
}

/// Σ 1(2')S⁻¹(1(1')1(2))1(1): the element for the left rigidity composite
/// on Cl M and the right one on M.
pub fn rigidity_element_b<F: Field>(w: &WeakHopfAlgebra<F>) -> Vec<F> {
    let d1 = w.delta_one();
    let mut z = vec![F::zero(); w.dim()];
    for (u, v, c) in d1 {
        for (u2, v2, c2) in d1 {
            let inner = w.s_inv(&w.mul(&w.basis(*u2), &w.basis(*v)));
            let p = w.mul_all(&[&w.basis(*v2), &inner, &w.basis(*u)]);
            axpy(&mut z, &(c.clone() * c2), &p);
        }
    }
    z
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RigidityRoute {
    Explicit,
    Contracted,
}

/// The four rigidity composites as matrices, plus the route used.
#[derive(Clone, Debug)]
pub struct Rigidity<F> {
    pub route: RigidityRoute,
    pub left_on_m: Matrix<F>,
    pub left_on_cl: Matrix<F>,
    pub right_on_m: Matrix<F>,
    pub right_on_cr: Matrix<F>,
    pub module_maps_checked: bool,
}

/// The composites through explicit tensor maps.
pub fn rigidity_composites_explicit<F: Field>(w: &WeakHopfAlgebra<F>, unit: &UnitModule<F>, m: &LeftModule<F>) -> Result<[Matrix<F>; 4]> {
    let l = unit.left.dim();
    let legs = delta_one_legs(w, unit)?;
    let cl = left_conjugate(w, m);
    let cr = right_conjugate(w, m);
    let id = Matrix::identity(m.dim);
    let el = ev_l(&legs, m);
    let cl_ = coev_l(unit, m);
    let er = ev_r(w, &legs, m);
    let cr_ = coev_r(w, unit, m);
    let a = xr_inv_full(w, unit, m).mul(&id.kron(&el).mul(&cl_.kron(&id).mul(&xl_full(&legs, l, m))));
    let b = xl_inv_full(unit, &cl).mul(&el.kron(&id).mul(&id.kron(&cl_).mul(&xr_full(&legs, l, &cl))));
    let c = xl_inv_full(unit, m).mul(&er.kron(&id).mul(&id.kron(&cr_).mul(&xr_full(&legs, l, m))));
    let d = xr_inv_full(w, unit, &cr).mul(&id.kron(&er).mul(&cr_.kron(&id).mul(&xl_full(&legs, l, &cr))));
    Ok([a, b, c, d])
}

/// The composites as ρ(z) for the contracted elements.
pub fn rigidity_composites_contracted<F: Field>(w: &WeakHopfAlgebra<F>, m: &LeftModule<F>) -> [Matrix<F>; 4] {
    let za = rigidity_element_a(w);
    let zb = rigidity_element_b(w);
    [m.rho(&za), left_conjugate(w, m).rho(&zb), m.rho(&zb), right_conjugate(w, m).rho(&za)]
}

/// Builds E^l, C^l, E^r, C^r, checks that they are module maps on the
/// product modules (when M is small enough) and that the four rigidity
/// composites are the identity.
pub fn rigidity<F: Field>(w: &WeakHopfAlgebra<F>, unit: &UnitModule<F>, m: &LeftModule<F>) -> Result<(Rigidity<F>, Report)> {
    let mut rep = Report::new();
    let route = if m.dim <= RIGIDITY_EXPLICIT_MAX { RigidityRoute::Explicit } else { RigidityRoute::Contracted };
    let [a, b, c, d] = match route {
        RigidityRoute::Explicit => rigidity_composites_explicit(w, unit, m)?,
        RigidityRoute::Contracted => rigidity_composites_contracted(w, m),
    };
    rep.assert_that("left rigidity on M", "(X^R)⁻¹(1×E^l)(C^l×1)X^L = 1_M", a.is_identity());
    rep.assert_that("left rigidity on Cl M", "(X^L)⁻¹(E^l×1)(1×C^l)X^R = 1_{Cl M}", b.is_identity());
    rep.assert_that("right rigidity on M", "(X^L)⁻¹(E^r×1)(1×C^r)X^R = 1_M", c.is_identity());
    rep.assert_that("right rigidity on Cr M", "(X^R)⁻¹(1×E^r)(C^r×1)X^L = 1_{Cr M}", d.is_identity());
    let module_maps_checked = m.dim <= MODULE_MAP_MAX;
    if module_maps_checked {
        rep.extend(evaluation_module_maps(w, unit, m)?);
    }
    Ok((Rigidity { route, left_on_m: a, left_on_cl: b, right_on_m: c, right_on_cr: d, module_maps_checked }, rep))
}

/// E^l, C^l, E^r, C^r intertwine the actions on the product modules.
pub fn evaluation_module_maps<F: Field>(w: &WeakHopfAlgebra<F>, unit: &UnitModule<F>, m: &LeftModule<F>) -> Result<Report> {
    let legs = delta_one_legs(w, unit)?;
    let cl = left_conjugate(w, m);
    let cr = right_conjugate(w, m);
    let mut rep = Report::new();
    let (cl_m, _) = monoidal_product(w, &cl, m)?;
    let (m_cl, _) = monoidal_product(w, m, &cl)?;
    let (m_cr, _) = monoidal_product(w, m, &cr)?;
    let (cr_m, _) = monoidal_product(w, &cr, m)?;
    let el = ev_l(&legs, m).mul(&cl_m.inclusion());
    let er = ev_r(w, &legs, m).mul(&m_cr.inclusion());
    let cl_f = coev_l(unit, m);
    let cr_f = coev_r(w, unit, m);
    rep.assert_that("C^l lands in M×Cl M", "x·m_i⊗m̂_i ∈ M×Cl M", m_cl.projector.mul(&cl_f) == cl_f);
    rep.assert_that("C^r lands in Cr M×M", "x·m̂_i⊗m_i ∈ Cr M×M", cr_m.projector.mul(&cr_f) == cr_f);
    rep.record("E^l module map", "E^l(a·(m̂⊗m)) = a·E^l(m̂⊗m)", is_module_map(&cl_m.module, &unit.module, &el));
    rep.record("C^l module map", "C^l(a·x) = a·C^l(x)", is_module_map(&unit.module, &m_cl.module, &m_cl.retraction.mul(&cl_f)));
    rep.record("E^r module map", "E^r(a·(m⊗m̂)) = a·E^r(m⊗m̂)", is_module_map(&m_cr.module, &unit.module, &er));
    rep.record("C^r module map", "C^r(a·x) = a·C^r(x)", is_module_map(&unit.module, &cr_m.module, &cr_m.retraction.mul(&cr_f)));
    Ok(rep)
}

/// Minimal polynomial of x inside the unital algebra with unit `e`,
/// constant term first.
fn minimal_polynomial<F: Field>(a: &WeakBialgebra<F>, e: &[F], x: &[F]) -> Vec<F> {
    let n = a.dim();
    let mut powers = vec![e.to_vec()];
    loop {
        let next = a.mul(powers.last().expect("nonempty"), x);
        let m = Matrix::from_cols(n, &powers);
        if let Some(c) = solve(&m, &next).particular {
            let mut poly: Vec<F> = c.into_iter().map(|v| -v).collect();
            poly.push(F::one());
            return poly;
        }
        powers.push(next);
    }
}

/// Primitive orthogonal idempotents of a commutative semisimple subalgebra
/// `z`, or `None` when some minimal polynomial does not split over F.
pub fn primitive_idempotents<F: Field>(a: &WeakBialgebra<F>, z: &Subspace<F>) -> Option<Vec<Vec<F>>> {
    let basis = z.basis_vectors();
    let mut idem = vec![a.one()];
    loop {
        let mut changed = false;
        let mut next = Vec::new();
        for e in &idem {
            let mut split = None;
            for b in &basis {
                let x = a.mul(b, e);
                let poly = minimal_polynomial(a, e, &x);
                if poly.len() <= 2 {
                    continue;
                }
                let roots = split_roots(&poly)?;
                if roots.len() + 1 != poly.len() {
                    return None;
                }
                split = Some((x, roots));
                break;
            }
            match split {
                None => next.push(e.clone()),
                Some((x, roots)) => {
                    changed = true;
                    for (i, ri) in roots.iter().enumerate() {
                        let mut f = e.clone();
                        for (j, rj) in roots.iter().enumerate() {
                            if i == j {
                                continue;
                            }
                            let denom = (ri.clone() - rj).inv()?;
                            let mut factor = x.clone();
                            axpy(&mut factor, &-rj.clone(), e);
                            f = crate::tensor::scale_vec(&denom, &a.mul(&f, &factor));
                        }
                        next.push(f);
                    }
                }
            }
        }
        idem = next;
        if !changed {
            return Some(idem);
        }
    }
}

/// One (p, q) block of a module.
#[derive(Clone, Debug)]
pub struct ModuleClass<F> {
    pub p: usize,
    pub q: usize,
    pub projector: Matrix<F>,
    pub space: Subspace<F>,
}

#[derive(Clone, Debug)]
pub struct ClassDecomposition<F> {
    pub z_left: Vec<Vec<F>>,
    pub z_right: Vec<Vec<F>>,
    /// Nonzero classes only.
    pub classes: Vec<ModuleClass<F>>,
}

impl<F: Field> ClassDecomposition<F> {
    /// Every nonzero summand sits in a diagonal class (p, p).
    pub fn is_diagonal(&self) -> bool {
        self.classes.iter().all(|c| c.p == c.q)
    }
}

#[derive(Clone, Debug)]
pub enum Classes<F> {
    Split(ClassDecomposition<F>, Report),
    NonSplit,
}

/// M = ⊕ z_p^L z_q^R·M with z_q^R = S(z_q^L).
pub fn class_decomposition<F: Field>(w: &WeakHopfAlgebra<F>, m: &LeftModule<F>) -> Classes<F> {
    let subs = w.canonical_subalgebras();
    let Some(z_left) = primitive_idempotents(w, &subs.z_left) else {
        return Classes::NonSplit;
    };
    let z_right: Vec<Vec<F>> = z_left.iter().map(|z| w.s(z)).collect();
    let mut rep = Report::new();
    let k = z_left.len();
    rep.assert_that("idempotent count", "#{z_p^L} = dim Z^L", k == subs.z_left.dim());
    rep.record(
        "z^L orthogonal idempotents",
        "z_p^L z_q^L = δ_pq z_p^L",
        first_failure(pairs(k), |pq| {
            let prod = w.mul(&z_left[pq[0]], &z_left[pq[1]]);
            if pq[0] == pq[1] {
                prod == z_left[pq[0]]
            } else {
                prod.iter().all(|x| x.is_zero())
            }
        }),
    );
    let mut sum = vec![F::zero(); w.dim()];
    for z in &z_left {
        axpy(&mut sum, &F::one(), z);
    }
    rep.assert_that("z^L complete", "Σ_p z_p^L = 1", sum == w.one());
    rep.assert_that(
        "z^R central in A^R",
        "S(z_q^L) ∈ Z^R",
        z_right.iter().all(|z| subs.z_right.contains(z)),
    );
    let left = subs.left.basis_vectors();
    let part_dim = |z: &[F]| Subspace::from_vectors(w.dim(), left.iter().map(|x| w.mul(x, z))).dim();
    let part_dims: Vec<usize> = z_left.iter().map(|z| part_dim(z)).collect();
    let mut classes = Vec::new();
    let mut total = Matrix::zeros(m.dim, m.dim);
    for p in 0..k {
        for q in 0..k {
            let proj = m.rho(&w.mul(&z_left[p], &z_right[q]));
            total = total.add(&proj);
            let space = proj.image();
            if space.dim() > 0 {
                classes.push(ModuleClass { p, q, projector: proj, space });
            }
        }
    }
    rep.assert_that("classes exhaust M", "Σ_{p,q} z_p^L z_q^R = id_M", total.is_identity());
    rep.record(
        "classes are submodules",
        "ρ(a) commutes with ρ(z_p^L z_q^R)",
        first_failure(singles(classes.len()), |c| {
            let pr = &classes[c[0]].projector;
            m.actions().iter().all(|r| r.mul(pr) == pr.mul(r))
        }),
    );
    rep.record(
        "class dimension bound",
        "dim M_(p,q) ≥ max(dim A^L_p, dim A^L_q)",
        first_failure(singles(classes.len()), |c| {
            let cl = &classes[c[0]];
            cl.space.dim() >= part_dims[cl.p].max(part_dims[cl.q])
        }),
    );
    Classes::Split(ClassDecomposition { z_left, z_right, classes }, rep)
}

/// Generators witnessing that M is free of rank one over A^L and A^R.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invertibility<F> {
    pub invertible: bool,
    pub generator_left: Option<Vec<F>>,
    pub generator_right: Option<Vec<F>>,
}

fn generates_freely<F: Field>(m: &LeftModule<F>, sub: &Subspace<F>, v: &[F]) -> bool {
    let cols: Vec<Vec<F>> = sub.basis_vectors().iter().map(|x| m.act(x, v)).collect();
    Matrix::from_cols(m.dim, &cols).rank() == sub.dim()
}

/// dim M = dim A^L and some m₁, m₂ make x ↦ x·m₁ injective on A^L and
/// x ↦ x·m₂ injective on A^R.
pub fn is_invertible_module<F: Field>(a: &WeakBialgebra<F>, m: &LeftModule<F>, bound: usize) -> Invertibility<F> {
    let subs = a.canonical_subalgebras();
    if m.dim != subs.left.dim() {
        return Invertibility { invertible: false, generator_left: None, generator_right: None };
    }
    let full = Subspace::full(m.dim);
    let generator_left = integrals::search(&full, bound, |v| generates_freely(m, &subs.left, v));
    let generator_right = integrals::search(&full, bound, |v| generates_freely(m, &subs.right, v));
    let invertible = generator_left.is_some() && generator_right.is_some();
    Invertibility { invertible, generator_left, generator_right }
}

/// Dimension of the commutant of ρ(sub) in End(M).
pub fn commutant_dim<F: Field>(m: &LeftModule<F>, sub: &Subspace<F>) -> usize {
    let d = m.dim;
    let gens: Vec<Matrix<F>> = sub.basis_vectors().iter().map(|x| m.rho(x)).collect();
    let space = common_kernel(d * d, gens.len(), |i, t| {
        let t = Matrix::from_vec(d, d, t.to_vec());
        t.mul(&gens[i]).sub(&gens[i].mul(&t)).data().to_vec()
    });
    space.dim()
}

/// Module maps M → N, as a subspace of flattened dim N × dim M matrices.
pub fn hom_space<F: Field>(m: &LeftModule<F>, n: &LeftModule<F>) -> Subspace<F> {
    let (dm, dn) = (m.dim, n.dim);
    common_kernel(dn * dm, m.action.len(), |i, t| {
        let t = Matrix::from_vec(dn, dm, t.to_vec());
        t.mul(&m.action[i]).sub(&n.action[i].mul(&t)).data().to_vec()
    })
}

/// An invertible module map M → N found by bounded search over Hom(M, N).
pub fn find_isomorphism<F: Field>(m: &LeftModule<F>, n: &LeftModule<F>, bound: usize) -> Option<Matrix<F>> {
    if m.dim != n.dim {
        return None;
    }
    let hom = hom_space(m, n);
    integrals::search(&hom, bound, |t| Matrix::from_vec(n.dim, m.dim, t.to_vec()).is_invertible())
        .map(|t| Matrix::from_vec(n.dim, m.dim, t))
}

/// For an invertible M: A^L ≅ M×Cl M as modules, and then the A^R
/// endomorphisms of M form an algebra of dimension dim A^L.
pub fn self_dual_unit_check<F: Field>(w: &WeakHopfAlgebra<F>, unit: &UnitModule<F>, m: &LeftModule<F>, bound: usize) -> Result<Report> {
    let cl = left_conjugate(w, m);
    let (p, _) = monoidal_product(w, m, &cl)?;
    let mut rep = Report::new();
    let iso = find_isomorphism(&unit.module, &p.module, bound);
    rep.assert_that("A^L ≅ M×Cl M", "invertible module map A^L → M×Cl M", iso.is_some());
    let right = w.canonical_subalgebras().right;
    rep.assert_that("End over A^R", "dim End_{A^R}(M) = dim A^L", commutant_dim(m, &right) == unit.left.dim());
    Ok(rep)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RadicalOutcome<F> {
    Checked { radical: Subspace<F>, annihilates: bool },
    /// The trace-form criterion needs characteristic zero.
    Unavailable,
}

/// rad A = {x : tr(L_x L_y) = 0 for all y}; then whether Π^L(rad A) = 0.
pub fn radical_annihilates_unit<F: Field>(a: &WeakBialgebra<F>) -> RadicalOutcome<F> {
    if F::characteristic() != 0 {
        return RadicalOutcome::Unavailable;
    }
    let n = a.dim();
    let traces: Vec<F> = (0..n)
        .map(|k| (0..n).fold(F::zero(), |acc, j| {
            let c = a.basis_product(k, j).iter().find(|(i, _)| *i == j).map(|(_, c)| c.clone());
            acc + c.unwrap_or_else(F::zero)
        }))
        .collect();
    let form = Matrix::from_fn_cols(n, n, |j| {
        (0..n)
            .map(|i| a.basis_product(i, j).iter().fold(F::zero(), |acc, (k, c)| acc + c.clone() * &traces[*k]))
            .collect()
    });
    let radical = form.kernel();
    let pi_l = a.projections().pi_l;
    let annihilates = radical.basis_vectors().iter().all(|x| pi_l.apply(x).iter().all(|c| c.is_zero()));
    RadicalOutcome::Checked { radical, annihilates }
}

/// The one-dimensional module of a character χ: A → F.
pub fn character_module<F: Field>(chi: &[F]) -> LeftModule<F> {
    LeftModule { dim: 1, action: chi.iter().map(|c| Matrix::from_vec(1, 1, vec![c.clone()])).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;
    use crate::Q;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    #[test]
    fn z2_unit_module_is_trivial() {
        let w = zoo::cyclic_group(2);
        let (u, rep) = unit_module(&w).unwrap();
        assert!(rep.passed());
        assert_eq!(u.module.dim(), 1);
        assert!(u.module.actions().iter().all(|m| m.is_identity()));
    }

    #[test]
    fn z2_product_is_full_tensor() {
        let w = zoo::cyclic_group(2);
        let reg = regular_module(&w);
        let (p, rep) = monoidal_product(&w, &reg, &reg).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures());
        assert_eq!(p.module.dim(), 4);
    }

    #[test]
    fn m2q_modules() {
        let w = zoo::m2q();
        let (u, rep) = unit_module(&w).unwrap();
        assert!(rep.passed());
        assert_eq!(u.module.dim(), 4);
        let reg = regular_module(&w);
        let (p, rep) = monoidal_product(&w, &reg, &reg).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures());
        assert_eq!(p.module.dim(), p.projector.rank());
        let (_, rep) = unit_constraints(&w, &u, &reg).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures());
        let rep = triangle(&w, &u, &reg, &reg).unwrap();
        assert!(rep.passed());
        let (_, rep) = unit_constraints(&w, &u, &u.module).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures());
    }

    #[test]
    fn explicit_and_contracted_rigidity_agree() {
        for w in [zoo::cyclic_group(3), zoo::m2q(), zoo::sweedler_h4()] {
            let (u, _) = unit_module(&w).unwrap();
            for m in [regular_module(&w), u.module.clone()] {
                let e = rigidity_composites_explicit(&w, &u, &m).unwrap();
                let c = rigidity_composites_contracted(&w, &m);
                assert_eq!(e, c);
                let (r, rep) = rigidity(&w, &u, &m).unwrap();
                assert!(rep.passed(), "{:?}", rep.failures());
                assert!(r.module_maps_checked);
            }
        }
    }

    #[test]
    fn conjugation_cancels() {
        let w = zoo::m2q();
        let reg = regular_module(&w);
        let (cl, cr, rep) = conjugates(&w, &reg);
        assert!(rep.passed(), "{:?}", rep.failures());
        assert_ne!(cl, reg);
        assert_ne!(cr, reg);
    }

    #[test]
    fn associativity_on_small_modules() {
        let w = zoo::m2q();
        let (u, _) = unit_module(&w).unwrap();
        let rep = check_associativity(&w, &u.module, &u.module, &u.module).unwrap();
        assert!(rep.passed());
        let w = zoo::s3();
        let (u, _) = unit_module(&w).unwrap();
        let reg = regular_module(&w);
        assert!(check_associativity(&w, &u.module, &reg, &u.module).unwrap().passed());
    }

    #[test]
    fn unit_classes_are_diagonal() {
        for w in [zoo::cyclic_group(2), zoo::m2q(), zoo::direct_sum(&zoo::cyclic_group(2), &zoo::cyclic_group(3))] {
            let (u, _) = unit_module(&w).unwrap();
            match class_decomposition(&w, &u.module) {
                Classes::Split(d, rep) => {
                    assert!(rep.passed(), "{:?}", rep.failures());
                    assert!(d.is_diagonal());
                }
                Classes::NonSplit => panic!("Z^L splits over Q here"),
            }
        }
    }

    #[test]
    fn direct_sum_has_two_blocks() {
        let w = zoo::direct_sum(&zoo::cyclic_group(2), &zoo::cyclic_group(3));
        let Classes::Split(d, rep) = class_decomposition(&w, &regular_module(&w)) else { panic!() };
        assert!(rep.passed());
        assert_eq!(d.z_left.len(), 2);
        assert_eq!(d.classes.len(), 2);
    }

    #[test]
    fn z2_characters_are_invertible() {
        let w = zoo::cyclic_group(2);
        for s in [1, -1] {
            let m = character_module(&[q(1), q(s)]);
            assert!(check_module(&w, &m).passed());
            assert!(is_invertible_module(&w, &m, 3).invertible);
        }
        assert!(!is_invertible_module(&w, &regular_module(&w), 3).invertible);
    }

    #[test]
    fn unit_module_is_invertible() {
        let w = zoo::m2q();
        let (u, _) = unit_module(&w).unwrap();
        let inv = is_invertible_module(&w, &u.module, 3);
        assert!(inv.invertible);
        assert!(self_dual_unit_check(&w, &u, &u.module, 3).unwrap().passed());
    }

    #[test]
    fn right_integrals_of_m2q_are_invertible() {
        let w = zoo::m2q();
        let ir = w.integral_space(crate::wba::Side::Right);
        let m = left_ideal_module(&w, &ir).unwrap();
        assert!(check_module(&w, &m).passed());
        assert!(is_invertible_module(&w, &m, 3).invertible);
    }

    #[test]
    fn radical_of_semisimple_entries_vanishes() {
        for w in [zoo::cyclic_group(3), zoo::m2q()] {
            let RadicalOutcome::Checked { radical, annihilates } = radical_annihilates_unit(&w) else { panic!() };
            assert_eq!(radical.dim(), 0);
            assert!(annihilates);
        }
        assert_eq!(radical_annihilates_unit(&zoo::f2m2()), RadicalOutcome::Unavailable);
    }

    #[test]
    fn radical_of_sweedler_algebra() {
        let w = zoo::sweedler_h4();
        let RadicalOutcome::Checked { radical, annihilates } = radical_annihilates_unit(&w) else { panic!() };
        assert_eq!(radical.dim(), 2);
        assert!(annihilates);
    }

    #[test]
    fn conjugation_reverses_products_in_dimension() {
        let w = zoo::m2q();
        let (u, _) = unit_module(&w).unwrap();
        let reg = regular_module(&w);
        let (p, _) = monoidal_product(&w, &u.module, &reg).unwrap();
        let (rev, _) = monoidal_product(&w, &left_conjugate(&w, &reg), &left_conjugate(&w, &u.module)).unwrap();
        assert_eq!(left_conjugate(&w, &p.module).dim(), rev.module.dim());
    }
}
