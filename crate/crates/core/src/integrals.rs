//! Integrals, non-degeneracy, dual pairs and the Larson–Sweedler antipode.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::grouplikes;
use crate::linalg::{Matrix, Subspace};
use crate::report::{first_failure, singles, Report};
use crate::wba::{Side, WeakBialgebra};
use crate::wha::WeakHopfAlgebra;

/// Default coefficient bound for integral and generator searches.
pub const DEFAULT_BOUND: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralSpace<F> {
    pub side: Side,
    pub basis: Subspace<F>,
}

pub fn integral_space<F: Field>(a: &WeakBialgebra<F>, side: Side) -> IntegralSpace<F> {
    IntegralSpace { side, basis: a.integral_space(side) }
}

/// al = Π^L(a)l for all basis a.
pub fn is_left_integral<F: Field>(a: &WeakBialgebra<F>, l: &[F]) -> bool {
    let p = a.projections();
    (0..a.dim()).all(|i| a.mul(&a.basis(i), l) == a.mul(&p.pi_l.col(i), l))
}

/// ra = rΠ^R(a) for all basis a.
pub fn is_right_integral<F: Field>(a: &WeakBialgebra<F>, r: &[F]) -> bool {
    let p = a.projections();
    (0..a.dim()).all(|i| a.mul(r, &a.basis(i)) == a.mul(r, &p.pi_r.col(i)))
}

/// R_l: φ ↦ φ⇀l and L_l: φ ↦ l⟵φ.
#[derive(Clone, Debug)]
pub struct Nondegeneracy<F> {
    pub r_l: Matrix<F>,
    pub l_l: Matrix<F>,
    pub nondegenerate: bool,
}

pub fn is_nondegenerate<F: Field>(a: &WeakBialgebra<F>, l: &[F]) -> Nondegeneracy<F> {
    let (r_l, l_l) = arrow_matrices(a, l);
    let nondegenerate = r_l.is_invertible() && l_l.is_invertible();
    Nondegeneracy { r_l, l_l, nondegenerate }
}

/// Both arrow matrices read off Δ(l): R_l[u][v] = L_l[v][u] = Δ(l)_uv.
fn arrow_matrices<F: Field>(a: &WeakBialgebra<F>, l: &[F]) -> (Matrix<F>, Matrix<F>) {
    let n = a.dim();
    let mut r_l = Matrix::zeros(n, n);
    for (u, v, c) in a.coproduct(l) {
        r_l.set(u, v, c);
    }
    let l_l = r_l.transpose();
    (r_l, l_l)
}

/// Search values 0, 1, -1, 2, -2, ... for one coefficient.
fn digit_value<F: Field>(d: usize) -> F {
    let m = d.div_ceil(2) as i64;
    if d % 2 == 1 {
        F::from_i64(m)
    } else {
        F::from_i64(-m)
    }
}

/// Nonzero integer coordinate vectors with entries in [-bound, bound], in
/// lexicographic order (first coordinate most significant, values ordered
/// 0, 1, -1, 2, -2, ...).
pub fn candidates<F: Field>(k: usize, bound: usize) -> impl Iterator<Item = Vec<F>> {
    let base = 2 * bound + 1;
    let mut digits = vec![0usize; k];
    let mut done = k == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        // increment, last coordinate fastest
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                return None;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < base {
                break;
            }
            digits[i] = 0;
        }
        Some(digits.iter().map(|&d| digit_value(d)).collect())
    })
}

/// First element of `space` (in [`candidates`] order over its RREF basis)
/// satisfying `ok`.
pub fn search<F: Field>(space: &Subspace<F>, bound: usize, mut ok: impl FnMut(&[F]) -> bool) -> Option<Vec<F>> {
    candidates(space.dim(), bound).map(|c| space.combine(&c)).find(|v| ok(v))
}

pub fn search_nondegenerate<F: Field>(a: &WeakBialgebra<F>, space: &Subspace<F>, bound: usize) -> Option<Vec<F>> {
    search(space, bound, |l| {
        let (r_l, _) = arrow_matrices(a, l);
        // L_l is the transpose, so one rank test covers both
        r_l.is_invertible()
    })
}

pub fn find_nondegenerate_left_integral<F: Field>(a: &WeakBialgebra<F>, bound: usize) -> Option<Vec<F>> {
    search_nondegenerate(a, &a.integral_space(Side::Left), bound)
}

/// A dual pair (l, λ) of left integrals together with the right-handed
/// data: ρ with l⟵ρ = 1, r with ρ⟵r = 1̂, and r_λ with λ⟵r_λ = 1̂.
#[derive(Clone, Debug)]
pub struct DualPair<F> {
    pub l: Vec<F>,
    pub lambda: Vec<F>,
    pub rho: Vec<F>,
    pub r: Vec<F>,
    pub r_lambda: Vec<F>,
    pub report: Report,
}

impl<F> DualPair<F> {
    pub fn certified(&self) -> bool {
        self.report.passed()
    }
}

/// R̂_φ: a ↦ a⇀φ has entries φ(e_x e_a); L̂_φ: a ↦ φ⟵a is its transpose.
pub fn functional_gram<F: Field>(a: &WeakBialgebra<F>, phi: &[F]) -> Matrix<F> {
    let n = a.dim();
    let mut g = Matrix::zeros(n, n);
    for x in 0..n {
        for y in 0..n {
            let v = a.basis_product(x, y).iter().fold(F::zero(), |acc, (k, c)| acc + c.clone() * &phi[*k]);
            g.set(x, y, v);
        }
    }
    g
}

pub fn dual_pair<F: Field>(a: &WeakBialgebra<F>, l: &[F]) -> Result<DualPair<F>> {
    let nd = is_nondegenerate(a, l);
    if !nd.nondegenerate {
        return Err(Error::Input("l is not a non-degenerate element".into()));
    }
    let n = a.dim();
    let one = a.one();
    let one_hat = a.counit().to_vec();
    let r_inv = nd.r_l.inverse().expect("checked");
    let l_inv = nd.l_l.inverse().expect("checked");
    let lambda = r_inv.apply(&one);
    let rho = l_inv.apply(&one);
    let dual = a.dualize();
    let mut rep = Report::new();
    rep.assert_that("l left integral", "al = Π^L(a)l", is_left_integral(a, l));
    rep.assert_that("λ⇀l = 1", "λ⇀l = 1", a.hit(&lambda, l) == one);
    rep.assert_that("l⇀λ = 1̂", "l⇀λ = 1̂", a.dual_hit(l, &lambda) == one_hat);
    rep.assert_that("λ left integral of Â", "ψλ = Π̂^L(ψ)λ", is_left_integral(&dual, &lambda));
    rep.assert_that("l⟵ρ = 1", "l⟵ρ = 1", a.hit_r(l, &rho) == one);
    rep.assert_that("l⇀ρ = 1̂", "l⇀ρ = 1̂", a.dual_hit(l, &rho) == one_hat);
    rep.assert_that("ρ right integral of Â", "ρψ = ρΠ̂^R(ψ)", is_right_integral(&dual, &rho));
    let g_rho = functional_gram(a, &rho);
    let g_lambda = functional_gram(a, &lambda);
    rep.assert_that("λ non-degenerate", "R̂_λ, L̂_λ invertible", g_lambda.is_invertible());
    rep.assert_that("ρ non-degenerate", "R̂_ρ, L̂_ρ invertible", g_rho.is_invertible());
    // ρ⟵r = 1̂ means L̂_ρ(r) = 1̂, L̂_ρ = transpose of the ρ-Gram matrix
    let r = g_rho.transpose().inverse().map(|m| m.apply(&one_hat)).unwrap_or_else(|| vec![F::zero(); n]);
    let r_lambda = g_lambda.transpose().inverse().map(|m| m.apply(&one_hat)).unwrap_or_else(|| vec![F::zero(); n]);
    rep.assert_that("ρ⟵r = 1̂", "ρ⟵r = 1̂", a.dual_hit_r(&rho, &r) == one_hat);
    rep.assert_that("r⟵ρ = 1", "r⟵ρ = 1", a.hit_r(&r, &rho) == one);
    rep.assert_that("r right integral", "ra = rΠ^R(a)", is_right_integral(a, &r));
    rep.assert_that("λ⟵r_λ = 1̂", "λ⟵r = 1̂", a.dual_hit_r(&lambda, &r_lambda) == one_hat);
    rep.assert_that("λ⇀r_λ = 1", "λ⇀r = 1", a.hit(&lambda, &r_lambda) == one);
    rep.assert_that("r_λ right integral", "ra = rΠ^R(a)", is_right_integral(a, &r_lambda));
    Ok(DualPair { l: l.to_vec(), lambda, rho, r, r_lambda, report: rep })
}

/// x ↦ y1⟨x y2, f⟩ over `alg`.
fn sandwich_left<F: Field>(alg: &WeakBialgebra<F>, y: &[F], f: &[F]) -> Matrix<F> {
    let n = alg.dim();
    let dy = alg.coproduct(y);
    Matrix::from_fn_cols(n, n, |x| {
        let mut col = vec![F::zero(); n];
        for (u, v, c) in &dy {
            let val = alg.basis_product(x, *v).iter().fold(F::zero(), |acc, (k, d)| acc + d.clone() * &f[*k]);
            col[*u].add_mul(c, &val);
        }
        col
    })
}

/// x ↦ y1⟨y2 x, f⟩ over `alg`.
fn sandwich_right<F: Field>(alg: &WeakBialgebra<F>, y: &[F], f: &[F]) -> Matrix<F> {
    let n = alg.dim();
    let dy = alg.coproduct(y);
    Matrix::from_fn_cols(n, n, |x| {
        let mut col = vec![F::zero(); n];
        for (u, v, c) in &dy {
            let val = alg.basis_product(*v, x).iter().fold(F::zero(), |acc, (k, d)| acc + d.clone() * &f[*k]);
            col[*u].add_mul(c, &val);
        }
        col
    })
}

/// S(a) = l1⟨al2, λ⟩, Ŝ(ψ) = λ1⟨ψλ2, l⟩ and S⁻¹ = transpose of
/// Ŝ⁻¹(ψ) = ρ1⟨ρ2ψ, l⟩; the upgraded algebra is returned when every
/// certificate and the antipode axioms pass.
pub fn larson_sweedler_antipode<F: Field>(
    a: &WeakBialgebra<F>,
    pair: &DualPair<F>,
) -> (Option<WeakHopfAlgebra<F>>, Report) {
    let n = a.dim();
    let dual = a.dualize();
    let s = sandwich_left(a, &pair.l, &pair.lambda);
    let s_hat = sandwich_left(&dual, &pair.lambda, &pair.l);
    let s_hat_inv = sandwich_right(&dual, &pair.rho, &pair.l);
    let s_inv = s_hat_inv.transpose();
    let mut rep = Report::new();
    rep.extend_prefixed("dual pair", pair.report.clone());
    rep.assert_that("Ŝ transposes S", "Ŝ = Sᵗ", s_hat == s.transpose());
    rep.assert_that("S∘S⁻¹ = id", "S∘S⁻¹ = id", s.mul(&s_inv).is_identity());
    rep.assert_that("S⁻¹∘S = id", "S⁻¹∘S = id", s_inv.mul(&s).is_identity());
    rep.assert_that("Ŝ(ρ) = λ", "Ŝ(ρ) = λ", s_hat.apply(&pair.rho) == pair.lambda);
    // S = L_r∘R̂_ρ: S(a) = r⟵(a⇀ρ)
    rep.record(
        "S = L_r∘R̂_ρ",
        "S(a) = r⟵(a⇀ρ)",
        first_failure(singles(n), |w| a.hit_r(&pair.r, &a.dual_hit(&a.basis(w[0]), &pair.rho)) == s.col(w[0])),
    );
    // S⁻¹ = L_l∘L̂_ρ and S⁻¹ = R_r∘R̂_λ
    rep.record(
        "S⁻¹ = L_l∘L̂_ρ",
        "S⁻¹(a) = l⟵(ρ⟵a)",
        first_failure(singles(n), |w| a.hit_r(&pair.l, &a.dual_hit_r(&pair.rho, &a.basis(w[0]))) == s_inv.col(w[0])),
    );
    rep.record(
        "S⁻¹ = R_r∘R̂_λ",
        "S⁻¹(a) = (a⇀λ)⇀r",
        first_failure(singles(n), |w| {
            a.hit(&a.dual_hit(&a.basis(w[0]), &pair.lambda), &pair.r_lambda) == s_inv.col(w[0])
        }),
    );
    let wha = WeakHopfAlgebra::new(a.clone(), s).expect("square");
    let axioms = wha.check_wha();
    let ok = axioms.passed() && rep.passed();
    rep.extend_prefixed("antipode", axioms);
    (ok.then_some(wha), rep)
}

/// Outcome of the Larson–Sweedler pipeline on a bare weak bialgebra.
#[derive(Clone, Debug)]
pub enum Pipeline<F> {
    Antipode(Box<WeakHopfAlgebra<F>>, Report),
    NoIntegral { bound: usize },
    Failed(Report),
}

pub fn antipode_pipeline<F: Field>(a: &WeakBialgebra<F>, bound: usize) -> Pipeline<F> {
    let Some(l) = find_nondegenerate_left_integral(a, bound) else {
        return Pipeline::NoIntegral { bound };
    };
    let pair = dual_pair(a, &l).expect("search returns non-degenerate elements");
    match larson_sweedler_antipode(a, &pair) {
        (Some(w), r) => Pipeline::Antipode(Box::new(w), r),
        (None, r) => Pipeline::Failed(r),
    }
}

/// The integral projections L, R, L̄, R̄ onto I^L and I^R.
#[derive(Clone, Debug)]
pub struct IntegralProjections<F> {
    pub l: Matrix<F>,
    pub r: Matrix<F>,
    pub lbar: Matrix<F>,
    pub rbar: Matrix<F>,
}

fn projections_raw<F: Field>(w: &WeakHopfAlgebra<F>) -> IntegralProjections<F> {
    let n = w.dim();
    let s2 = w.antipode().mul(w.antipode());
    let si = w.s_inv_matrix();
    let sm2 = si.mul(si);
    let mut l = Matrix::zeros(n, n);
    let mut r = Matrix::zeros(n, n);
    let mut lbar = Matrix::zeros(n, n);
    let mut rbar = Matrix::zeros(n, n);
    let acc = |m: &mut Matrix<F>, row: usize, col: usize, c: &F, d: &F| {
        if !d.is_zero() {
            let v = m.get(row, col).clone() + c.clone() * d;
            m.set(row, col, v);
        }
    };
    for j in 0..n {
        for i in 0..n {
            // b_i a and a b_i with b_i = e_i
            for (k, x) in w.basis_product(i, j) {
                for (u, v, c) in w.basis_coproduct(*k) {
                    let cx = c.clone() * x;
                    // L(a) = Ŝ²(β_i)⇀(b_i a), L̄(a) = (b_i a)⟵Ŝ⁻²(β_i)
                    acc(&mut l, *u, j, &cx, s2.get(i, *v));
                    acc(&mut lbar, *v, j, &cx, sm2.get(i, *u));
                }
            }
            for (k, x) in w.basis_product(j, i) {
                for (u, v, c) in w.basis_coproduct(*k) {
                    let cx = c.clone() * x;
                    // R(a) = (a b_i)⟵Ŝ²(β_i), R̄(a) = Ŝ⁻²(β_i)⇀(a b_i)
                    acc(&mut r, *v, j, &cx, s2.get(i, *u));
                    acc(&mut rbar, *u, j, &cx, sm2.get(i, *v));
                }
            }
        }
    }
    IntegralProjections { l, r, lbar, rbar }
}

pub fn integral_projections<F: Field>(w: &WeakHopfAlgebra<F>) -> (IntegralProjections<F>, Report) {
    let mut rep = Report::new();
    if w.antipode_inv().is_none() {
        rep.assert_that("antipode invertible", "S∘S⁻¹ = id", false);
        let z = Matrix::zeros(w.dim(), w.dim());
        return (IntegralProjections { l: z.clone(), r: z.clone(), lbar: z.clone(), rbar: z }, rep);
    }
    let p = projections_raw(w);
    let dual = w.dual();
    let ph = projections_raw(&dual);
    let il = w.integral_space(Side::Left);
    let ir = w.integral_space(Side::Right);
    let ihl = dual.integral_space(Side::Left);
    let ihr = dual.integral_space(Side::Right);
    for (name, m, target) in [("L", &p.l, &il), ("L̄", &p.lbar, &il), ("R", &p.r, &ir), ("R̄", &p.rbar, &ir)] {
        let side = if target == &il { "I^L" } else { "I^R" };
        rep.assert_that(format!("image of {name}"), format!("{name}(A) ⊆ {side}"), m.image().is_subspace_of(target));
    }
    rep.assert_that("transpose of L̂", "⟨L̂(φ),a⟩ = ⟨φ,R(a)⟩", ph.l.transpose() == p.r);
    rep.assert_that("transpose of R̂", "⟨R̂(φ),a⟩ = ⟨φ,L(a)⟩", ph.r.transpose() == p.l);
    rep.assert_that("transpose of L̂̄", "⟨L̂̄(φ),a⟩ = ⟨φ,L̄(a)⟩", ph.lbar.transpose() == p.lbar);
    rep.assert_that("transpose of R̂̄", "⟨R̂̄(φ),a⟩ = ⟨φ,R̄(a)⟩", ph.rbar.transpose() == p.rbar);
    for (name, hat, plain) in [
        ("Î^L×I^L", &ihl, &il),
        ("Î^R×I^R", &ihr, &ir),
        ("Î^L×I^R", &ihl, &ir),
        ("Î^R×I^L", &ihr, &il),
    ] {
        let m = hat.basis().mul(&plain.basis().transpose());
        let ok = hat.dim() == plain.dim() && m.rank() == plain.dim();
        rep.assert_that(format!("pairing {name} non-degenerate"), format!("rank ⟨{name}⟩ = dim"), ok);
    }
    (p, rep)
}

/// Checks l1⊗al2 = S(a)l1⊗l2 for left integrals and r1a⊗r2 = r1⊗r2S(a)
/// for right integrals, on integral bases.
pub fn check_integral_legs<F: Field>(w: &WeakHopfAlgebra<F>) -> Report {
    let n = w.dim();
    let mut rep = Report::new();
    let il = w.integral_space(Side::Left);
    let ir = w.integral_space(Side::Right);
    rep.record(
        "left integral legs",
        "l1⊗al2 = S(a)l1⊗l2",
        first_failure(crate::wba::pairs_of(il.dim(), n), |x| {
            let l = il.vector(x[0]);
            let a = w.basis(x[1]);
            let d = w.coproduct(&l);
            w.right_leg_mul_left(&d, &a) == w.left_leg_mul_left(&d, &w.s(&a))
        }),
    );
    rep.record(
        "right integral legs",
        "r1a⊗r2 = r1⊗r2S(a)",
        first_failure(crate::wba::pairs_of(ir.dim(), n), |x| {
            let r = ir.vector(x[0]);
            let a = w.basis(x[1]);
            let d = w.coproduct(&r);
            w.left_leg_mul_right(&d, &a) == w.right_leg_mul_right(&d, &w.s(&a))
        }),
    );
    rep
}

/// Unimodularity by a direct search in I^L ∩ I^R and, independently, by
/// testing whether σ_L lies in the trivial subalgebra of Â.
#[derive(Clone, Debug)]
pub struct Unimodularity<F> {
    pub two_sided: Option<Vec<F>>,
    pub criterion: bool,
    pub agree: bool,
}

pub fn unimodularity<F: Field>(w: &WeakHopfAlgebra<F>, pair: &DualPair<F>, bound: usize) -> (Unimodularity<F>, Report) {
    let both = w.integral_space(Side::Left).intersect(&w.integral_space(Side::Right));
    let two_sided = search_nondegenerate(w, &both, bound);
    let (_, sigma) = grouplikes::distinguished_left(w, pair);
    let dual = w.dual();
    let criterion = grouplikes::in_trivial_subalgebra(&dual, &sigma);
    let agree = two_sided.is_some() == criterion;
    let mut rep = Report::new();
    rep.assert_that("unimodularity routes agree", "∃ two-sided l ⟺ σ_L ∈ G^T_L(Â)", agree);
    (Unimodularity { two_sided, criterion, agree }, rep)
}
