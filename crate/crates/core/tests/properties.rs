use proptest::prelude::*;
use std::sync::OnceLock;
use whakit::format;
use whakit::grouplikes;
use whakit::zoo;
use whakit::{Field, Side, WeakHopfAlgebra, F2, Q};

fn m2q() -> &'static WeakHopfAlgebra<Q> {
    static W: OnceLock<WeakHopfAlgebra<Q>> = OnceLock::new();
    W.get_or_init(zoo::m2q)
}

fn s3() -> &'static WeakHopfAlgebra<Q> {
    static W: OnceLock<WeakHopfAlgebra<Q>> = OnceLock::new();
    W.get_or_init(zoo::s3)
}

fn f2m2() -> &'static WeakHopfAlgebra<F2> {
    static W: OnceLock<WeakHopfAlgebra<F2>> = OnceLock::new();
    W.get_or_init(zoo::f2m2)
}

fn elem(n: usize) -> impl Strategy<Value = Vec<Q>> {
    proptest::collection::vec(-3i64..=3, n).prop_map(|v| v.into_iter().map(Q::from).collect())
}

fn elem_f2(n: usize) -> impl Strategy<Value = Vec<F2>> {
    proptest::collection::vec(0i64..=1, n).prop_map(|v| v.into_iter().map(F2::new).collect())
}

fn tensor_eq<F: Field>(x: Vec<(usize, usize, F)>, y: Vec<(usize, usize, F)>, n: usize) -> bool {
    whakit::tensor::flatten2(&x, n, n) == whakit::tensor::flatten2(&y, n, n)
}

/// Invariants every weak Hopf algebra satisfies pointwise.
fn pointwise<F: Field>(w: &WeakHopfAlgebra<F>, a: &[F], b: &[F]) -> Result<(), TestCaseError> {
    let n = w.dim();
    let p = w.projections();
    let pl = p.pi_l.apply(a);
    // Π^L is idempotent and Π^L(a) = a(1)S(a(2))
    prop_assert_eq!(p.pi_l.apply(&pl), pl.clone());
    let mut via_s = vec![F::zero(); n];
    for (i, j, c) in w.coproduct(a) {
        let x = w.mul(&w.basis(i), &w.s(&w.basis(j)));
        for (k, v) in x.into_iter().enumerate() {
            via_s[k] = via_s[k].clone() + c.clone() * v;
        }
    }
    prop_assert_eq!(via_s, pl);
    // S is an anti-homomorphism and an anti-cohomomorphism
    prop_assert_eq!(w.s(&w.mul(a, b)), w.mul(&w.s(b), &w.s(a)));
    let sa = w.s(a);
    let lhs = w.coproduct(&sa);
    let rhs: Vec<_> = w
        .coproduct(a)
        .into_iter()
        .flat_map(|(i, j, c)| {
            let (si, sj) = (w.s(&w.basis(i)), w.s(&w.basis(j)));
            let mut out = Vec::new();
            for (x, u) in si.iter().enumerate() {
                for (y, v) in sj.iter().enumerate() {
                    if !u.is_zero() && !v.is_zero() {
                        out.push((y, x, c.clone() * u * v));
                    }
                }
            }
            out
        })
        .collect();
    prop_assert!(tensor_eq(lhs, rhs, n));
    // Δ is multiplicative
    let dab = w.coproduct(&w.mul(a, b));
    let prod = w.mul2(&w.coproduct(a), &w.coproduct(b));
    prop_assert!(tensor_eq(dab, prod, n));
    // ⟨a⇀φ, x⟩ = φ(xa) with φ = the counit
    let phi = w.counit().to_vec();
    let hit = w.dual_hit(a, &phi);
    prop_assert_eq!(w.pair(&hit, b), w.pair(&phi, &w.mul(b, a)));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn m2q_pointwise(a in elem(16), b in elem(16)) {
        pointwise(m2q(), &a, &b)?;
    }

    #[test]
    fn s3_pointwise(a in elem(6), b in elem(6)) {
        pointwise(s3(), &a, &b)?;
    }

    #[test]
    fn f2m2_pointwise(a in elem_f2(16), b in elem_f2(16)) {
        pointwise(f2m2(), &a, &b)?;
    }

    #[test]
    fn left_integrals_absorb(a in elem(16), c in elem(16)) {
        let w = m2q();
        let il = w.integral_space(Side::Left);
        let l = il.combine(&c[..il.dim()]);
        let pl = w.projections().pi_l.apply(&a);
        prop_assert_eq!(w.mul(&a, &l), w.mul(&pl, &l));
    }

    #[test]
    fn trivial_grouplikes_from_invertible_left_elements(c in proptest::collection::vec(-3i64..=3, 4)) {
        let w = m2q();
        let al = w.projections().pi_l.image();
        let c: Vec<Q> = c.into_iter().map(Q::from).collect();
        let x = al.combine(&c[..al.dim()]);
        prop_assume!(grouplikes::inverse(w, &x).is_some());
        for side in [Side::Left, Side::Right] {
            let (g, rep) = grouplikes::trivial_grouplike(w, &x, side).unwrap();
            prop_assert!(rep.passed());
            let kind = grouplikes::classify_grouplike(w, &g.g).unwrap().kind;
            let ok = match side {
                Side::Left => kind.is_left(),
                Side::Right => kind.is_right(),
            };
            prop_assert!(ok);
        }
    }

    #[test]
    fn vectors_roundtrip_through_json(v in elem(7)) {
        let text = format::vector_to_json(&v).to_string();
        prop_assert_eq!(format::read_vector::<Q>(&text, 7).unwrap(), v);
    }

    #[test]
    fn dual_of_dual_is_original(a in elem(6), b in elem(6)) {
        let w = s3();
        let dd = w.dual().dual();
        prop_assert_eq!(dd.mul(&a, &b), w.mul(&a, &b));
        prop_assert_eq!(dd.s(&a), w.s(&a));
    }
}

#[test]
fn structure_files_roundtrip() {
    for name in zoo::NAMES.iter().filter(|n| **n != "F2M2") {
        let w = zoo::entry_q(name).unwrap().wha;
        let text = format::write_wha(&w);
        let back = format::read::<Q>(&text).unwrap().into_wha().unwrap();
        assert_eq!(format::write_wha(&back), text, "{name}");
    }
    let text = format::write_wha(f2m2());
    assert_eq!(format::write_wha(&format::read::<F2>(&text).unwrap().into_wha().unwrap()), text);
}
