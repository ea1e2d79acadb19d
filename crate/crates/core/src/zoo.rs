//! Example generators: group algebras, the matrix-pair family B⊗B^op, the
//! Z_2 crossed product over M_2(Q(√2)) and a few small test fixtures.

use crate::error::{Error, Result};
use crate::field::{Field, Fp, QSqrt};
use crate::linalg::Matrix;
use crate::tensor::nonzero;
use crate::wba::WeakBialgebra;
use crate::wha::WeakHopfAlgebra;
use crate::Q;
use num_traits::{One, Zero};

/// The suites every zoo entry must pass.
pub const FULL_MANIFEST: &[&str] = &[
    "check_wba",
    "check_wba_identities",
    "check_wha",
    "check_projection_identities",
    "separability",
    "nakayama_lr",
];

/// A named example with the suites it is expected to pass.
#[derive(Clone, Debug)]
pub struct ZooEntry<F> {
    pub name: &'static str,
    pub params: String,
    pub wha: WeakHopfAlgebra<F>,
    pub manifest: &'static [&'static str],
}

/// Names accepted by [`entry_q`] plus the F_2 entry.
pub const NAMES: &[&str] = &["Z2", "Z3", "S3", "M2Q", "F2M2", "XP", "H4", "Z2+Z3"];

/// Zoo entries over Q by name. F2M2 lives over F_2, see [`f2m2`].
pub fn entry_q(name: &str) -> Option<ZooEntry<Q>> {
    let (wha, params) = match name {
        "Z2" => (cyclic_group(2), "cyclic group of order 2".to_string()),
        "Z3" => (cyclic_group(3), "cyclic group of order 3".to_string()),
        "S3" => (s3(), "symmetric group on 3 letters".to_string()),
        "M2Q" => (m2q(), "n = 2, t^-1 = [[2,1],[1,-1]]".to_string()),
        "XP" => (crossed_product_example(), "M_2(Q(√2)) pair ⋊ Z_2, t_L = [[2,1],[0,2]]".to_string()),
        "H4" => (sweedler_h4(), "Sweedler's 4-dimensional Hopf algebra".to_string()),
        "Z2+Z3" => (direct_sum(&cyclic_group(2), &cyclic_group(3)), "direct sum of Z2 and Z3".to_string()),
        _ => return None,
    };
    let name = NAMES.iter().copied().find(|n| *n == name)?;
    Some(ZooEntry { name, params, wha, manifest: FULL_MANIFEST })
}

pub fn f2m2_entry() -> ZooEntry<Fp<2>> {
    ZooEntry { name: "F2M2", params: "n = 2 over F_2, t = [[1,1],[1,0]]".to_string(), wha: f2m2(), manifest: FULL_MANIFEST }
}

/// Group algebra from a multiplication table `table[i][j] = index of g_i g_j`.
pub fn group_algebra<F: Field>(table: &[Vec<usize>], labels: Vec<String>) -> Result<WeakHopfAlgebra<F>> {
    let n = table.len();
    if labels.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&k| k >= n)) {
        return Err(Error::Input("group table must be square with entries below its order".into()));
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::Input("group table has no identity".into()))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::Input(format!("group table is not associative at ({a},{b},{c})")));
                }
            }
        }
    }
    let mut inverse = vec![0; n];
    for (a, inv) in inverse.iter_mut().enumerate() {
        *inv = (0..n)
            .find(|&b| table[a][b] == identity)
            .ok_or_else(|| Error::Input(format!("element {a} has no inverse")))?;
    }
    let mut unit = vec![F::zero(); n];
    unit[identity] = F::one();
    let base = WeakBialgebra::from_fns(
        labels,
        |i, j| vec![(table[i][j], F::one())],
        unit,
        |i| vec![(i, i, F::one())],
        vec![F::one(); n],
    )?;
    let s = Matrix::from_fn_cols(n, n, |j| {
        let mut c = vec![F::zero(); n];
        c[inverse[j]] = F::one();
        c
    });
    WeakHopfAlgebra::new(base, s)
}

pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// Labels e, g, g^2, ...
fn cyclic_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect()
}

pub fn cyclic_group_over<F: Field>(n: usize) -> WeakHopfAlgebra<F> {
    group_algebra(&cyclic_group_table(n), cyclic_labels(n)).expect("cyclic table is a group")
}

pub fn cyclic_group(n: usize) -> WeakHopfAlgebra<Q> {
    cyclic_group_over(n)
}

/// S_3 as permutations of {0,1,2} in lexicographic order; composition
/// (στ)(x) = σ(τ(x)).
pub fn s3() -> WeakHopfAlgebra<Q> {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|s| perms.iter().map(|t| idx([s[t[0]], s[t[1]], s[t[2]]])).collect())
        .collect();
    let labels = perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect();
    group_algebra(&table, labels).expect("S3 table is a group")
}

/// Sweedler's Hopf algebra ⟨g, x | g² = 1, x² = 0, xg = -gx⟩ with basis
/// 1, g, x, gx.
pub fn sweedler_h4() -> WeakHopfAlgebra<Q> {
    // basis index = 2b + a for g^a x^b
    let sign = |b: usize, c: usize| if b * c % 2 == 1 { -Q::one() } else { Q::one() };
    let labels = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    let base = WeakBialgebra::from_fns(
        labels,
        |i, j| {
            let (a, b, c, d) = (i % 2, i / 2, j % 2, j / 2);
            if b + d >= 2 {
                return vec![];
            }
            vec![(2 * (b + d) + (a + c) % 2, sign(b, c))]
        },
        vec![Q::one(), Q::zero(), Q::zero(), Q::zero()],
        |i| match i {
            0 => vec![(0, 0, Q::one())],
            1 => vec![(1, 1, Q::one())],
            2 => vec![(2, 0, Q::one()), (1, 2, Q::one())],
            _ => vec![(3, 1, Q::one()), (0, 3, Q::one())],
        },
        vec![Q::one(), Q::one(), Q::zero(), Q::zero()],
    )
    .expect("H4 data is consistent");
    // S(g) = g, S(x) = -gx, S(gx) = x
    let s = Matrix::from_cols(
        4,
        &[
            vec![Q::one(), Q::zero(), Q::zero(), Q::zero()],
            vec![Q::zero(), Q::one(), Q::zero(), Q::zero()],
            vec![Q::zero(), Q::zero(), Q::zero(), -Q::one()],
            vec![Q::zero(), Q::zero(), Q::one(), Q::zero()],
        ],
    );
    WeakHopfAlgebra::new(base, s).expect("square antipode")
}

/// The monoid {1, a, b} with xy = x on {a, b}, as a bialgebra with
/// grouplike basis. Its left integrals vanish, so no antipode exists.
pub fn left_zero_band() -> WeakBialgebra<Q> {
    let labels = ["1", "a", "b"].iter().map(|s| s.to_string()).collect();
    WeakBialgebra::from_fns(
        labels,
        |i, j| vec![(if i == 0 { j } else { i }, Q::one())],
        vec![Q::one(), Q::zero(), Q::zero()],
        |i| vec![(i, i, Q::one())],
        vec![Q::one(); 3],
    )
    .expect("band data is consistent")
}

/// A ⊕ B with Δ(1) = 1_A⊗1_A + 1_B⊗1_B.
pub fn direct_sum<F: Field>(a: &WeakHopfAlgebra<F>, b: &WeakHopfAlgebra<F>) -> WeakHopfAlgebra<F> {
    let (n, m) = (a.dim(), b.dim());
    let mut labels: Vec<String> = a.labels().iter().map(|l| format!("{l}_1")).collect();
    labels.extend(b.labels().iter().map(|l| format!("{l}_2")));
    let mut unit = a.unit().to_vec();
    unit.extend(b.unit().iter().cloned());
    let mut counit = a.counit().to_vec();
    counit.extend(b.counit().iter().cloned());
    let base = WeakBialgebra::from_fns(
        labels,
        |i, j| match (i < n, j < n) {
            (true, true) => a.basis_product(i, j).to_vec(),
            (false, false) => b.basis_product(i - n, j - n).iter().map(|(k, c)| (k + n, c.clone())).collect(),
            _ => vec![],
        },
        unit,
        |i| {
            if i < n {
                a.basis_coproduct(i).to_vec()
            } else {
                b.basis_coproduct(i - n).iter().map(|(j, k, c)| (j + n, k + n, c.clone())).collect()
            }
        },
        counit,
    )
    .expect("direct sum data is consistent");
    let mut s = Matrix::zeros(n + m, n + m);
    for i in 0..n {
        for j in 0..n {
            s.set(i, j, a.antipode().get(i, j).clone());
        }
    }
    for i in 0..m {
        for j in 0..m {
            s.set(n + i, n + j, b.antipode().get(i, j).clone());
        }
    }
    WeakHopfAlgebra::new(base, s).expect("square antipode")
}

/// A finite-dimensional unital algebra by structure constants.
#[derive(Clone, Debug)]
pub struct Algebra<F> {
    pub labels: Vec<String>,
    /// `mult[i * dim + j]` = e_i e_j as sparse (k, c)
    pub mult: Vec<Vec<(usize, F)>>,
    pub unit: Vec<F>,
}

impl<F: Field> Algebra<F> {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vec<F> {
        let d = self.dim();
        let mut out = vec![F::zero(); d];
        for (i, x) in nonzero(a) {
            for (j, y) in nonzero(b) {
                let xy = x.clone() * y;
                for (k, c) in &self.mult[i * d + j] {
                    out[*k].add_mul(&xy, c);
                }
            }
        }
        out
    }

    /// The full matrix algebra M_n(F) with basis E_ab at index a·n + b.
    pub fn matrices(n: usize) -> Algebra<F> {
        let d = n * n;
        let mut mult = vec![Vec::new(); d * d];
        for a in 0..n {
            for b in 0..n {
                for d2 in 0..n {
                    mult[(a * n + b) * d + (b * n + d2)] = vec![(a * n + d2, F::one())];
                }
            }
        }
        let mut unit = vec![F::zero(); d];
        for a in 0..n {
            unit[a * n + a] = F::one();
        }
        let labels = (0..n).flat_map(|a| (0..n).map(move |b| format!("E{}{}", a + 1, b + 1))).collect();
        Algebra { labels, mult, unit }
    }

    /// The matrix of `x` as an element of M_n, x = Σ m_ab E_ab.
    pub fn from_matrix(m: &Matrix<F>) -> Vec<F> {
        m.row_vecs().into_iter().flatten().collect()
    }
}

/// The WHA B⊗B^op of a separable algebra B with an index-1 functional E.
///
/// `e`, `f` are E-dual bases (E(e_i f_j) = δ_ij) and `theta` is the
/// Nakayama automorphism of E (E(xy) = E(yθ(x))). Basis index of b_p⊗b_q is
/// p·dim B + q.
pub fn pair_wha<F: Field>(
    b: &Algebra<F>,
    functional: &[F],
    e: &[Vec<F>],
    f: &[Vec<F>],
    theta: &Matrix<F>,
) -> Result<WeakHopfAlgebra<F>> {
    let d = b.dim();
    let index = e.iter().zip(f).fold(vec![F::zero(); d], |acc, (ei, fi)| {
        acc.into_iter().zip(b.mul(fi, ei)).map(|(x, y)| x + y).collect()
    });
    if index != b.unit {
        return Err(Error::Input("Σ_i f_i e_i ≠ 1: the functional does not have index 1".into()));
    }
    let labels = (0..d).flat_map(|p| (0..d).map(move |q| (p, q))).map(|(p, q)| format!("{}⊗{}", b.labels[p], b.labels[q])).collect();
    let mut unit = vec![F::zero(); d * d];
    for (p, x) in nonzero(&b.unit) {
        for (q, y) in nonzero(&b.unit) {
            unit[p * d + q] = x.clone() * y;
        }
    }
    let counit = (0..d * d)
        .map(|i| {
            let (p, q) = (i / d, i % d);
            b.mult[p * d + q].iter().fold(F::zero(), |acc, (k, c)| acc + c.clone() * &functional[*k])
        })
        .collect();
    let terms: Vec<(usize, usize, F)> = e
        .iter()
        .zip(f)
        .flat_map(|(ei, fi)| {
            nonzero(fi).flat_map(move |(u, x)| nonzero(ei).map(move |(v, y)| (u, v, x.clone() * y))).collect::<Vec<_>>()
        })
        .collect();
    let base = WeakBialgebra::from_fns(
        labels,
        |i, j| {
            let (p, q, r, s) = (i / d, i % d, j / d, j % d);
            let mut out = Vec::new();
            for (k1, c1) in &b.mult[p * d + r] {
                for (k2, c2) in &b.mult[s * d + q] {
                    out.push((k1 * d + k2, c1.clone() * c2));
                }
            }
            out
        },
        unit,
        |i| {
            let (p, q) = (i / d, i % d);
            terms.iter().map(|(u, v, c)| (p * d + u, v * d + q, c.clone())).collect()
        },
        counit,
    )?;
    let n = d * d;
    let s = Matrix::from_fn_cols(n, n, |i| {
        let (p, q) = (i / d, i % d);
        let mut col = vec![F::zero(); n];
        for k in 0..d {
            let c = theta.get(k, p);
            if !c.is_zero() {
                col[q * d + k] = c.clone();
            }
        }
        col
    });
    WeakHopfAlgebra::new(base, s)
}

/// B⊗B^op for B = M_n(F) with E(x) = tr(tx).
pub fn matrix_pair_wha<F: Field>(n: usize, t: &Matrix<F>) -> Result<WeakHopfAlgebra<F>> {
    if t.rows() != n || t.cols() != n {
        return Err(Error::Dimension(format!("t must be {n}x{n}")));
    }
    let ti = t.inverse().ok_or_else(|| Error::Input("t is not invertible".into()))?;
    if !(ti.trace() - F::one()).is_zero() {
        return Err(Error::Input(format!(
            "tr(t^-1) = {} but the dual bases e_i = t^-1 E_ab, f_i = E_ba need tr(t^-1) = 1",
            ti.trace()
        )));
    }
    let b = Algebra::matrices(n);
    let d = n * n;
    let functional: Vec<F> = (0..d).map(|i| t.get(i % n, i / n).clone()).collect();
    let mut e = Vec::new();
    let mut f = Vec::new();
    for a in 0..n {
        for bb in 0..n {
            let mut ei = vec![F::zero(); d];
            for c in 0..n {
                ei[c * n + bb] = ti.get(c, a).clone();
            }
            let mut fi = vec![F::zero(); d];
            fi[bb * n + a] = F::one();
            e.push(ei);
            f.push(fi);
        }
    }
    let theta = conjugation(&b, n, t, &ti);
    pair_wha(&b, &functional, &e, &f, &theta)
}

/// Matrix of x ↦ t x t^-1 on M_n.
fn conjugation<F: Field>(b: &Algebra<F>, n: usize, t: &Matrix<F>, ti: &Matrix<F>) -> Matrix<F> {
    let tv = Algebra::from_matrix(t);
    let tiv = Algebra::from_matrix(ti);
    let d = n * n;
    Matrix::from_fn_cols(d, d, |j| {
        let mut ej = vec![F::zero(); d];
        ej[j] = F::one();
        b.mul(&b.mul(&tv, &ej), &tiv)
    })
}

/// M2Q: n = 2 over Q with t^-1 = [[2,1],[1,-1]].
pub fn m2q_t() -> Matrix<Q> {
    let q = |n, d| Q::new(n, d);
    Matrix::from_rows(vec![vec![q(1, 3), q(1, 3)], vec![q(1, 3), q(-2, 3)]])
}

pub fn m2q() -> WeakHopfAlgebra<Q> {
    matrix_pair_wha(2, &m2q_t()).expect("tr(t^-1) = 1")
}

/// t = [[1,1],[1,0]] over F_2, with t^-1 = [[0,1],[1,1]].
pub fn f2m2_t() -> Matrix<Fp<2>> {
    let f = Fp::<2>::new;
    Matrix::from_rows(vec![vec![f(1), f(1)], vec![f(1), f(0)]])
}

pub fn f2m2() -> WeakHopfAlgebra<Fp<2>> {
    matrix_pair_wha(2, &f2m2_t()).expect("tr(t^-1) = 1 over F_2")
}

type K2 = QSqrt<2>;

/// M_m(Q(√2)) as a Q-algebra with basis E_ab·ω_s, ω = (1, √2), at index
/// (a·m + b)·2 + s. Products are computed in Q(√2) and split back.
pub fn matrices_over_sqrt2(m: usize) -> Algebra<Q> {
    let omega = [K2::one(), K2::root()];
    let dm = m * m;
    let d = 2 * dm;
    let mut mult = vec![Vec::new(); d * d];
    for i in 0..d {
        for j in 0..d {
            let (ab, s) = (i / 2, i % 2);
            let (cd, r) = (j / 2, j % 2);
            let (a, b, c, dd) = (ab / m, ab % m, cd / m, cd % m);
            if b != c {
                continue;
            }
            let w = omega[s].clone() * &omega[r];
            let k = a * m + dd;
            let mut out = Vec::new();
            if !w.a.is_zero() {
                out.push((2 * k, w.a.clone()));
            }
            if !w.b.is_zero() {
                out.push((2 * k + 1, w.b.clone()));
            }
            mult[i * d + j] = out;
        }
    }
    let mut unit = vec![Q::zero(); d];
    for a in 0..m {
        unit[2 * (a * m + a)] = Q::one();
    }
    let labels = (0..d)
        .map(|i| {
            let (ab, s) = (i / 2, i % 2);
            let base = format!("E{}{}", ab / m + 1, ab % m + 1);
            if s == 0 {
                base
            } else {
                format!("√2{base}")
            }
        })
        .collect();
    Algebra { labels, mult, unit }
}

/// Default t_L for the crossed product, rational so that the conjugation of
/// √2 preserves ε.
pub fn xp_t() -> Matrix<Q> {
    let q = Q::integer;
    Matrix::from_rows(vec![vec![q(2), q(1)], vec![q(0), q(2)]])
}

/// A^T = B⊗B^op for B = M_m(Q(√2)) over Q with E = Tr_{Q(√2)/Q}∘tr(t·).
pub fn sqrt2_pair(m: usize, t: &Matrix<Q>) -> Result<WeakHopfAlgebra<Q>> {
    let ti = t.inverse().ok_or_else(|| Error::Input("t is not invertible".into()))?;
    let b = matrices_over_sqrt2(m);
    let d = b.dim();
    // E(E_ab ω_s) = t_ba · Tr(ω_s), Tr(1) = 2, Tr(√2) = 0
    let functional: Vec<Q> = (0..d)
        .map(|i| {
            let (ab, s) = (i / 2, i % 2);
            if s == 0 {
                t.get(ab % m, ab / m).clone() * Q::integer(2)
            } else {
                Q::zero()
            }
        })
        .collect();
    // e = t^-1 E_ab ω_s, f = E_ba ω'_s with ω' = (1/2, √2/4)
    let omega_dual = [Q::new(1, 2), Q::new(1, 4)];
    let mut e = Vec::new();
    let mut f = Vec::new();
    for a in 0..m {
        for bb in 0..m {
            for s in 0..2 {
                let mut ei = vec![Q::zero(); d];
                for c in 0..m {
                    ei[2 * (c * m + bb) + s] = ti.get(c, a).clone();
                }
                let mut fi = vec![Q::zero(); d];
                fi[2 * (bb * m + a) + s] = omega_dual[s].clone();
                e.push(ei);
                f.push(fi);
            }
        }
    }
    let embed = |x: &Matrix<Q>| -> Vec<Q> {
        let mut v = vec![Q::zero(); d];
        for a in 0..m {
            for c in 0..m {
                v[2 * (a * m + c)] = x.get(a, c).clone();
            }
        }
        v
    };
    let (tv, tiv) = (embed(t), embed(&ti));
    let theta = Matrix::from_fn_cols(d, d, |j| {
        let mut ej = vec![Q::zero(); d];
        ej[j] = Q::one();
        b.mul(&b.mul(&tv, &ej), &tiv)
    });
    pair_wha(&b, &functional, &e, &f, &theta)
}

/// A^T ⋊ Z_2 where `alpha` is an involutive automorphism of A^T preserving
/// ε and Δ, and `t_l` ∈ A^L enters S̃(g^n x) = S(x) t_L g^n t_L^-1.
/// Basis index of g^n x is n·dim A^T + x.
pub fn crossed_product<F: Field>(at: &WeakHopfAlgebra<F>, alpha: &Matrix<F>, t_l: &[F]) -> Result<WeakHopfAlgebra<F>> {
    let n = at.dim();
    if !alpha.mul(alpha).is_identity() {
        return Err(Error::Input("the Z_2 action must square to the identity".into()));
    }
    let t_inv = {
        let lm = at.left_mul_matrix(t_l);
        let x = lm.inverse().ok_or_else(|| Error::Input("t_L is not invertible".into()))?;
        x.apply(at.unit())
    };
    let mut labels: Vec<String> = at.labels().to_vec();
    labels.extend(at.labels().iter().map(|l| format!("g·{l}")));
    let mut unit = at.unit().to_vec();
    unit.extend(vec![F::zero(); n]);
    let mut counit = at.counit().to_vec();
    counit.extend(at.counit().iter().cloned());
    let alpha_cols: Vec<Vec<(usize, F)>> =
        (0..n).map(|j| nonzero(&alpha.col(j)).map(|(i, c)| (i, c.clone())).collect()).collect();
    let base = WeakBialgebra::from_fns(
        labels,
        |i, j| {
            let (gi, x, gj, y) = (i / n, i % n, j / n, j % n);
            let shift = ((gi + gj) % 2) * n;
            let xs: Vec<(usize, F)> = if gj == 1 { alpha_cols[x].clone() } else { vec![(x, F::one())] };
            let mut out = Vec::new();
            for (u, c) in xs {
                for (k, d) in at.basis_product(u, y) {
                    out.push((shift + k, c.clone() * d));
                }
            }
            out
        },
        unit,
        |i| {
            let shift = (i / n) * n;
            at.basis_coproduct(i % n).iter().map(|(u, v, c)| (shift + u, shift + v, c.clone())).collect()
        },
        counit,
    )?;
    let lift = |v: &[F], g: usize| -> Vec<F> {
        let mut out = vec![F::zero(); 2 * n];
        for (i, c) in nonzero(v) {
            out[g * n + i] = c.clone();
        }
        out
    };
    let (tl, tli) = (lift(t_l, 0), lift(&t_inv, 0));
    let g = lift(at.unit(), 1);
    let one = lift(at.unit(), 0);
    let tail = [base.mul_all(&[&tl, &one, &tli]), base.mul_all(&[&tl, &g, &tli])];
    let s = Matrix::from_fn_cols(2 * n, 2 * n, |i| {
        let sx = lift(&at.antipode().col(i % n), 0);
        base.mul(&sx, &tail[i / n])
    });
    WeakHopfAlgebra::new(base, s)
}

/// The conjugation of √2 on A^T = B⊗B^op, B = M_m(Q(√2)).
pub fn sqrt2_conjugation(m: usize) -> Matrix<Q> {
    let d = 2 * m * m;
    let n = d * d;
    let mut a = Matrix::zeros(n, n);
    for i in 0..n {
        let s = (i / d) % 2 + (i % d) % 2;
        a.set(i, i, if s % 2 == 0 { Q::one() } else { -Q::one() });
    }
    a
}

/// The Z_2 crossed product over M_2(Q(√2)) with the default t_L.
pub fn crossed_product_example() -> WeakHopfAlgebra<Q> {
    crossed_product_with(2, &xp_t()).expect("default parameters are consistent")
}

pub fn crossed_product_with(m: usize, t: &Matrix<Q>) -> Result<WeakHopfAlgebra<Q>> {
    let at = sqrt2_pair(m, t)?;
    let d = 2 * m * m;
    // t_L = t⊗1
    let mut t_l = vec![Q::zero(); d * d];
    for a in 0..m {
        for c in 0..m {
            let v = t.get(a, c);
            if v.is_zero() {
                continue;
            }
            for (q, u) in nonzero(&matrices_over_sqrt2(m).unit) {
                t_l[2 * (a * m + c) * d + q] = v.clone() * u;
            }
        }
    }
    crossed_product(&at, &sqrt2_conjugation(m), &t_l)
}

/// The generator g of the crossed product.
pub fn xp_generator(xp: &WeakHopfAlgebra<Q>) -> Vec<Q> {
    let n = xp.dim() / 2;
    let mut g = vec![Q::zero(); 2 * n];
    for (i, c) in nonzero(xp.unit()) {
        g[n + i] = c.clone();
    }
    g
}

/// x⊗1 and 1⊗y in a matrix pair B⊗B^op.
pub fn pair_element<F: Field>(d: usize, left: &[F], right: &[F]) -> Vec<F> {
    let mut v = vec![F::zero(); d * d];
    for (p, x) in nonzero(left) {
        for (q, y) in nonzero(right) {
            v[p * d + q] = x.clone() * y;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_table_validation() {
        let bad = vec![vec![0, 1], vec![0, 1]];
        assert!(group_algebra::<Q>(&bad, vec!["a".into(), "b".into()]).is_err());
        assert_eq!(s3().dim(), 6);
    }

    #[test]
    fn trace_condition_enforced() {
        let err = matrix_pair_wha::<Q>(2, &Matrix::identity(2)).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
    }

    #[test]
    fn dimensions() {
        assert_eq!(m2q().dim(), 16);
        assert_eq!(f2m2().dim(), 16);
        assert_eq!(sqrt2_pair(2, &xp_t()).unwrap().dim(), 64);
    }

    #[test]
    fn small_entries_pass_suites() {
        for name in ["Z2", "Z3", "S3", "H4", "Z2+Z3", "M2Q"] {
            let w = entry_q(name).unwrap().wha;
            for (suite, r) in [
                ("wba", w.check_wba()),
                ("ids", w.check_wba_identities()),
                ("wha", w.check_wha()),
                ("proj", w.check_projection_identities()),
                ("sep", w.separability().1),
                ("nak", w.nakayama_lr().1),
            ] {
                assert!(r.passed(), "{name} {suite}: {:?}", r.failures());
            }
        }
    }

    #[test]
    fn f2m2_passes_suites() {
        let w = f2m2();
        for r in [w.check_wba(), w.check_wba_identities(), w.check_wha(), w.check_projection_identities()] {
            assert!(r.passed(), "{:?}", r.failures());
        }
    }

    #[test]
    fn band_is_a_bialgebra() {
        let b = left_zero_band();
        assert!(b.check_wba().passed());
    }
}
