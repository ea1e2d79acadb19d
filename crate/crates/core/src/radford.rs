//! The Nakayama automorphism of λ, the S⁴ formula, the antipode order up to
//! inner automorphisms, and the coset behaviour of σ_L under grouplike
//! actions on integrals.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::grouplikes::{self, Distinguished, GrouplikeWitness};
use crate::integrals::{self, functional_gram, DualPair};
use crate::linalg::{solve, Matrix};
use crate::report::{first_failure, pairs, singles, Report};
use crate::wba::Side;
use crate::wha::WeakHopfAlgebra;

/// θ_λ = R̂_λ⁻¹∘L̂_λ, so that λ(ab) = λ(b θ_λ(a)).
pub fn theta_lambda<F: Field>(w: &WeakHopfAlgebra<F>, lambda: &[F]) -> Option<Matrix<F>> {
    let g = functional_gram(w, lambda);
    Some(g.inverse()?.mul(&g.transpose()))
}

/// θ_λ by its definition, compared with σ_L⁻¹⇀S²(a) and
/// s_L⁻¹S⁻²(a)s_L⟵Ŝ⁻¹(σ_L).
pub fn nakayama_lambda<F: Field>(w: &WeakHopfAlgebra<F>, pair: &DualPair<F>) -> Result<(Matrix<F>, Report)> {
    let (dist, mut rep) = grouplikes::distinguished(w, pair)?;
    let theta = theta_lambda(w, &pair.lambda).ok_or_else(|| Error::Internal("λ is degenerate".into()))?;
    let s2 = w.antipode().pow(2);
    let s2inv = w.s_inv_matrix().pow(2);
    let sigma_inv = &dist.sigma_l.inverse;
    let route_a = w.matrix_of(|a| w.hit(sigma_inv, &s2.apply(a)));
    let shat_inv_sigma = w.s_hat_inv(&dist.sigma_l.g);
    let route_b = w.matrix_of(|a| {
        let c = w.mul_all(&[&dist.s_l.inverse[..], &s2inv.apply(a), &dist.s_l.g[..]]);
        w.hit_r(&c, &shat_inv_sigma)
    });
    rep.assert_that("θ_λ = σ_L⁻¹⇀S²", "R̂_λ⁻¹L̂_λ(a) = σ_L⁻¹⇀S²(a)", theta == route_a);
    rep.assert_that("θ_λ = s_L⁻¹S⁻²(·)s_L⟵Ŝ⁻¹(σ_L)", "R̂_λ⁻¹L̂_λ(a) = s_L⁻¹S⁻²(a)s_L⟵Ŝ⁻¹(σ_L)", theta == route_b);
    let n = w.dim();
    let basis: Vec<Vec<F>> = (0..n).map(|i| w.basis(i)).collect();
    let images: Vec<Vec<F>> = (0..n).map(|i| theta.col(i)).collect();
    rep.record(
        "Nakayama identity",
        "λ(ab) = λ(b θ_λ(a))",
        first_failure(pairs(n), |ij| {
            w.pair(&pair.lambda, &w.mul(&basis[ij[0]], &basis[ij[1]])) == w.pair(&pair.lambda, &w.mul(&basis[ij[1]], &images[ij[0]]))
        }),
    );
    rep.record(
        "θ_λ multiplicative",
        "θ_λ(ab) = θ_λ(a)θ_λ(b)",
        first_failure(pairs(n), |ij| theta.apply(&w.mul(&basis[ij[0]], &basis[ij[1]])) == w.mul(&images[ij[0]], &images[ij[1]])),
    );
    rep.assert_that("θ_λ unital", "θ_λ(1) = 1", theta.apply(&w.one()) == w.one());
    rep.assert_that("θ_λ invertible", "θ_λ ∈ Aut(A)", theta.is_invertible());
    Ok((theta, rep))
}

/// a ↦ σ_L⇀s_L⁻¹ a s_L⟵Ŝ⁻¹(σ_L).
pub fn radford_formula<F: Field>(w: &WeakHopfAlgebra<F>, dist: &Distinguished<F>) -> Matrix<F> {
    let shat_inv_sigma = w.s_hat_inv(&dist.sigma_l.g);
    w.matrix_of(|a| {
        let c = w.mul_all(&[&dist.s_l.inverse[..], a, &dist.s_l.g[..]]);
        w.hit(&dist.sigma_l.g, &w.hit_r(&c, &shat_inv_sigma))
    })
}

/// S⁴ against the formula, and S⁸ against its square.
pub fn radford_check<F: Field>(w: &WeakHopfAlgebra<F>, pair: &DualPair<F>) -> Result<Report> {
    let (dist, mut rep) = grouplikes::distinguished(w, pair)?;
    let formula = radford_formula(w, &dist);
    let s4 = w.antipode().pow(4);
    let n = w.dim();
    rep.record(
        "Radford S⁴",
        "S⁴(a) = σ_L⇀s_L⁻¹ a s_L⟵Ŝ⁻¹(σ_L)",
        first_failure(singles(n), |i| s4.col(i[0]) == formula.col(i[0])),
    );
    rep.assert_that("Radford S⁸", "S⁸ = (σ_L⇀s_L⁻¹(·)s_L⟵Ŝ⁻¹(σ_L))²", s4.mul(&s4) == formula.mul(&formula));
    Ok(rep)
}

#[derive(Clone, Debug)]
pub struct AntipodeOrder<F> {
    /// Least m with S^m = id.
    pub strict_order: Option<usize>,
    /// Least m for which S^{4m} is conjugation by a grouplike y ∈ A^T.
    pub inner_witness: Option<(usize, GrouplikeWitness<F>)>,
}

/// Searches m ≤ `max_m` for S^m = id and for y ∈ A^T with S^{4m}(x)y = yx.
pub fn antipode_order<F: Field>(w: &WeakHopfAlgebra<F>, max_m: usize, bound: usize) -> (AntipodeOrder<F>, Report) {
    let s = w.antipode();
    let mut power = Matrix::identity(w.dim());
    let mut strict_order = None;
    for m in 1..=max_m {
        power = power.mul(s);
        if power.is_identity() {
            strict_order = Some(m);
            break;
        }
    }
    let at = grouplikes::trivial_subalgebra(w);
    let xs: Vec<Vec<F>> = (0..w.dim()).map(|i| w.basis(i)).collect();
    let s4 = s.pow(4);
    let mut s4m = Matrix::identity(w.dim());
    let mut inner_witness = None;
    for m in 1..=max_m {
        s4m = s4m.mul(&s4);
        if let Some(y) = grouplikes::implementer_in(w, &at, &s4m, &xs, bound) {
            inner_witness = Some((m, y));
            break;
        }
    }
    let mut rep = Report::new();
    if let Some((m, y)) = &inner_witness {
        let s4m = s4.pow(*m);
        rep.assert_that("inner witness in A^T", "y ∈ A^T", at.contains(&y.g));
        rep.assert_that("inner witness grouplike", "y ∈ G(A)", grouplikes::classify_grouplike(w, &y.g).is_some());
        rep.record(
            "inner witness implements S^{4m}",
            "S^{4m}(x) = y x y⁻¹",
            first_failure(singles(w.dim()), |i| s4m.col(i[0]) == w.mul_all(&[&y.g[..], &xs[i[0]], &y.inverse[..]])),
        );
    }
    if let Some(m) = strict_order {
        rep.assert_that("strict order", "S^m = id", s.pow(m).is_identity());
    }
    (AntipodeOrder { strict_order, inner_witness }, rep)
}

/// B_β(a) = β⇀a⟵Ŝ⁻¹(β) for β ∈ G_L(Â), or Ŝ⁻¹(β)⇀a⟵β for β ∈ G_R(Â).
pub fn grouplike_twist<F: Field>(w: &WeakHopfAlgebra<F>, beta: &GrouplikeWitness<F>, left: bool) -> Matrix<F> {
    let b_inv = w.s_hat_inv(&beta.g);
    if left {
        w.matrix_of(|a| w.hit(&beta.g, &w.hit_r(a, &b_inv)))
    } else {
        w.matrix_of(|a| w.hit(&b_inv, &w.hit_r(a, &beta.g)))
    }
}

/// Transports the integral l (left β) or r (right β) by [`grouplike_twist`]
/// and checks that the new distinguished element of Â lies in the coset of
/// the old one modulo Â^T.
pub fn twisted_coset_check<F: Field>(
    w: &WeakHopfAlgebra<F>,
    pair: &DualPair<F>,
    beta: &GrouplikeWitness<F>,
    left: bool,
) -> Result<Report> {
    if (left && !beta.kind.is_left()) || (!left && !beta.kind.is_right()) {
        return Err(Error::Input("β has the wrong grouplike kind".into()));
    }
    let dual = w.dual();
    let twist = grouplike_twist(w, beta, left);
    let mut rep = Report::new();
    rep.record(
        "twist multiplicative",
        "B_β(ab) = B_β(a)B_β(b)",
        first_failure(pairs(w.dim()), |ij| {
            twist.apply(&w.mul(&w.basis(ij[0]), &w.basis(ij[1]))) == w.mul(&twist.col(ij[0]), &twist.col(ij[1]))
        }),
    );
    let at_dual = grouplikes::trivial_subalgebra(&dual);
    if left {
        let l2 = twist.apply(&pair.l);
        rep.assert_that("B_β(l) left integral", "B_β(I^L) ⊂ I^L", integrals::is_left_integral(w, &l2));
        let nd = integrals::is_nondegenerate(w, &l2).nondegenerate;
        rep.assert_that("B_β(l) non-degenerate", "B_β(l) non-degenerate", nd);
        if !nd {
            return Ok(rep);
        }
        let pair2 = integrals::dual_pair(w, &l2)?;
        let (_, sigma2) = grouplikes::distinguished_left(w, &pair2);
        let (_, sigma) = grouplikes::distinguished_left(w, pair);
        let coset = match (grouplikes::classify_grouplike(&dual, &sigma2), grouplikes::classify_grouplike(&dual, &sigma)) {
            (Some(a), Some(b)) => grouplikes::same_coset_in(&dual, &at_dual, &a, &b),
            _ => false,
        };
        rep.assert_that("σ̃_L coset", "[σ̃_L] = [σ_L] in G_L(Â)/G^T_L(Â)", coset);
        let closed = dual.mul_all(&[&dual.s_inv_matrix().pow(2).apply(&beta.g)[..], &sigma[..], &beta.inverse[..]]);
        rep.assert_that("σ̃_L closed form", "σ̃_L = Ŝ⁻²(β)σ_Lβ⁻¹", closed == sigma2);
    } else {
        let r2 = twist.apply(&pair.r);
        rep.assert_that("B_β(r) right integral", "B_β(I^R) ⊂ I^R", integrals::is_right_integral(w, &r2));
        let nd = integrals::is_nondegenerate(w, &r2).nondegenerate;
        rep.assert_that("B_β(r) non-degenerate", "B_β(r) non-degenerate", nd);
        if !nd {
            return Ok(rep);
        }
        // ρ̃ ∈ Î^R with ρ̃⟵r̃ = 1̂
        let space = dual.integral_space(Side::Right);
        let inc = space.inclusion();
        let m = Matrix::from_fn_cols(w.dim(), space.dim(), |j| w.dual_hit_r(&inc.col(j), &r2));
        let Some(c) = solve(&m, w.counit()).particular else {
            rep.assert_that("ρ̃ exists", "ρ̃⟵r̃ = 1̂", false);
            return Ok(rep);
        };
        let rho2 = inc.apply(&c);
        let rho_ok = integrals::is_right_integral(&dual, &rho2);
        rep.assert_that("ρ̃ right integral", "ρ̃ ∈ Î^R", rho_ok);
        let sigma2 = w.dual_hit(&r2, &rho2);
        let (_, sigma) = grouplikes::distinguished_right(w, pair);
        let coset = match (grouplikes::classify_grouplike(&dual, &sigma2), grouplikes::classify_grouplike(&dual, &sigma)) {
            (Some(a), Some(b)) => grouplikes::same_coset_in(&dual, &at_dual, &a, &b),
            _ => false,
        };
        rep.assert_that("σ̃_R coset", "[σ̃_R] = [σ_R] in G_R(Â)/G^T_R(Â)", coset);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;
    use crate::Q;

    fn pair_of(w: &WeakHopfAlgebra<Q>) -> DualPair<Q> {
        let l = integrals::find_nondegenerate_left_integral(w, integrals::DEFAULT_BOUND).unwrap();
        integrals::dual_pair(w, &l).unwrap()
    }

    #[test]
    fn nakayama_is_identity_on_z2() {
        let w = zoo::cyclic_group(2);
        let (theta, rep) = nakayama_lambda(&w, &pair_of(&w)).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures());
        assert!(theta.is_identity());
    }

    #[test]
    fn nakayama_and_radford_on_small_entries() {
        for w in [zoo::s3(), zoo::sweedler_h4(), zoo::m2q()] {
            let pair = pair_of(&w);
            let (_, rep) = nakayama_lambda(&w, &pair).unwrap();
            assert!(rep.passed(), "{:?}", rep.failures());
            let rep = radford_check(&w, &pair).unwrap();
            assert!(rep.passed(), "{:?}", rep.failures());
        }
    }

    #[test]
    fn nakayama_nontrivial_on_m2q() {
        let w = zoo::m2q();
        let (theta, _) = nakayama_lambda(&w, &pair_of(&w)).unwrap();
        assert!(!theta.is_identity());
    }

    #[test]
    fn orders() {
        let (o, rep) = antipode_order(&zoo::cyclic_group(2), 24, 2);
        assert!(rep.passed());
        assert_eq!(o.strict_order, Some(1));
        let (m, y) = o.inner_witness.unwrap();
        assert_eq!(m, 1);
        assert_eq!(y.g, vec![Q::from_i64(1), Q::from_i64(0)]);
        let (o, _) = antipode_order(&zoo::cyclic_group(3), 24, 2);
        assert_eq!(o.strict_order, Some(2));
        let (o, _) = antipode_order(&zoo::sweedler_h4(), 24, 2);
        assert_eq!(o.strict_order, Some(4));
    }

    #[test]
    fn m2q_order_is_infinite_up_to_inner() {
        let w = zoo::m2q();
        let (o, rep) = antipode_order(&w, 24, 2);
        assert!(rep.passed(), "{:?}", rep.failures());
        assert_eq!(o.strict_order, None);
        assert_eq!(o.inner_witness.map(|x| x.0), Some(1));
    }

    #[test]
    fn f2m2_has_finite_order() {
        let w = zoo::f2m2();
        let (o, rep) = antipode_order(&w, 24, 1);
        assert!(rep.passed());
        assert!(o.strict_order.is_some());
    }

    #[test]
    fn coset_check_trivial_beta() {
        for w in [zoo::cyclic_group(2), zoo::m2q()] {
            let pair = pair_of(&w);
            let dual = w.dual();
            let unit = grouplikes::classify_grouplike(&dual, &dual.one()).unwrap();
            for left in [true, false] {
                let rep = twisted_coset_check(&w, &pair, &unit, left).unwrap();
                assert!(rep.passed(), "{left} {:?}", rep.failures());
            }
        }
    }

    #[test]
    fn coset_check_z2_character() {
        let w = zoo::cyclic_group(2);
        let pair = pair_of(&w);
        let dual = w.dual();
        let chi = vec![Q::from_i64(1), Q::from_i64(-1)];
        let beta = grouplikes::classify_grouplike(&dual, &chi).unwrap();
        for left in [true, false] {
            let rep = twisted_coset_check(&w, &pair, &beta, left).unwrap();
            assert!(rep.passed(), "{:?}", rep.failures());
        }
    }

    #[test]
    fn coset_check_m2q_trivial_grouplike() {
        let w = zoo::m2q();
        let pair = pair_of(&w);
        let dual = w.dual();
        let left_sub = dual.projections().pi_l.image();
        let one = dual.one();
        // a non-scalar invertible element of Â^L
        let x = integrals::search(&left_sub, 2, |x| {
            grouplikes::inverse(&dual, x).is_some() && Matrix::from_cols(dual.dim(), &[x.to_vec(), one.clone()]).rank() == 2
        })
        .unwrap();
        for (side, left) in [(Side::Left, true), (Side::Right, false)] {
            let (beta, rep) = grouplikes::trivial_grouplike(&dual, &x, side).unwrap();
            assert!(rep.passed());
            let rep = twisted_coset_check(&w, &pair, &beta, left).unwrap();
            assert!(rep.passed(), "{:?}", rep.failures());
        }
    }
}
