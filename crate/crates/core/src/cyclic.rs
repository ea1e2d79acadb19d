//! Modular pairs (σ, s) ∈ G(Â)×G(A), the cochain spaces
//! C^n = Δ^{n-1}(1)·A^{⊗n} with their face, degeneracy and cyclic
//! operators, and the relations of the cyclic category.
//!
//! Tensors in A^{⊗n} are indexed with the first factor most significant.
//! C^n is held as a sparse reduced echelon basis; the operators are applied
//! to pure tensors and reported as matrices in those coordinates.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::grouplikes::{classify_grouplike, GrouplikeWitness, Kind};
use crate::linalg::{Matrix, Subspace};
use crate::report::Report;
use crate::wha::WeakHopfAlgebra;
use std::collections::{BTreeMap, HashMap};

/// Largest ambient dimension dim A^n accepted.
pub const MAX_AMBIENT: usize = 10_000;

type Sparse<F> = BTreeMap<usize, F>;

fn add_into<F: Field>(v: &mut Sparse<F>, k: usize, c: F) {
    if c.is_zero() {
        return;
    }
    let e = v.entry(k).or_insert_with(F::zero);
    *e += c;
    if e.is_zero() {
        v.remove(&k);
    }
}

fn sparse_of<F: Field>(x: &[F]) -> Vec<(usize, F)> {
    x.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

fn dense<F: Field>(v: &Sparse<F>, len: usize) -> Vec<F> {
    let mut out = vec![F::zero(); len];
    for (k, c) in v {
        out[*k] = c.clone();
    }
    out
}

#[derive(Clone, Debug)]
pub struct ModularPair<F> {
    pub sigma: GrouplikeWitness<F>,
    pub s: GrouplikeWitness<F>,
    /// σ⇀s = s = s⟵σ and s⇀σ = σ = σ⟵s.
    pub modular: bool,
    /// S²(a) = σ⇀s a s⁻¹⟵σ⁻¹ for all a.
    pub involution: bool,
}

impl<F> ModularPair<F> {
    pub fn in_involution(&self) -> bool {
        self.modular && self.involution
    }
}

/// Certifies σ ∈ Â and s ∈ A as two-sided grouplikes, then evaluates the
/// modular pair and involution identities.
pub fn check_modular_pair<F: Field>(w: &WeakHopfAlgebra<F>, sigma: &[F], s: &[F]) -> Result<(ModularPair<F>, Report)> {
    let n = w.dim();
    if sigma.len() != n || s.len() != n {
        return Err(Error::Dimension(format!("σ and s need {n} coordinates")));
    }
    let hat = w.dual();
    let two_sided = |g: Option<GrouplikeWitness<F>>, what: &str| match g {
        Some(g) if g.kind == Kind::Both => Ok(g),
        _ => Err(Error::Input(format!("{what} is not a two-sided grouplike"))),
    };
    let sigma_w = two_sided(classify_grouplike(&hat, sigma), "σ")?;
    let s_w = two_sided(classify_grouplike(w, s), "s")?;
    let mut rep = Report::new();
    rep.assert_that("σ⇀s = s", "modular pair", w.hit(sigma, s) == s);
    rep.assert_that("s⟵σ = s", "modular pair", w.hit_r(s, sigma) == s);
    rep.assert_that("s⇀σ = σ", "modular pair", w.dual_hit(s, sigma) == sigma);
    rep.assert_that("σ⟵s = σ", "modular pair", w.dual_hit_r(sigma, s) == sigma);
    let modular = rep.passed();
    let s2 = w.antipode().mul(w.antipode());
    let involution = (0..n).all(|i| {
        let conj = w.mul_all(&[s, &w.basis(i), &s_w.inverse]);
        w.hit_r(&w.hit(sigma, &conj), &sigma_w.inverse) == s2.col(i)
    });
    let mut inv_rep = Report::new();
    inv_rep.assert_that("S²(a) = σ⇀s a s⁻¹⟵σ⁻¹", "modular pair in involution", involution);
    rep.extend(inv_rep);
    Ok((ModularPair { sigma: sigma_w, s: s_w, modular, involution }, rep))
}

/// A reduced echelon basis held as sparse rows.
#[derive(Clone, Debug)]
pub struct SparseBasis<F> {
    ambient: usize,
    rows: Vec<Sparse<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> SparseBasis<F> {
    fn new(ambient: usize) -> Self {
        SparseBasis { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    fn reduce(&self, v: &mut Sparse<F>) -> Vec<F> {
        let mut coords = vec![F::zero(); self.rows.len()];
        for (r, p) in self.pivots.iter().enumerate() {
            let Some(c) = v.get(p).cloned() else { continue };
            for (k, x) in &self.rows[r] {
                add_into(v, *k, -(c.clone() * x));
            }
            coords[r] = c;
        }
        coords
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    fn insert(&mut self, mut v: Sparse<F>) -> bool {
        self.reduce(&mut v);
        let Some((&p, c)) = v.iter().next() else { return false };
        let inv = c.inv().expect("nonzero pivot");
        for x in v.values_mut() {
            *x *= inv.clone();
        }
        for row in &mut self.rows {
            if let Some(c) = row.get(&p).cloned() {
                for (k, x) in &v {
                    add_into(row, *k, -(c.clone() * x));
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    fn coordinates_sparse(&self, v: &Sparse<F>) -> Option<Vec<F>> {
        let mut r = v.clone();
        let coords = self.reduce(&mut r);
        r.is_empty().then_some(coords)
    }

    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        self.coordinates_sparse(&v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect())
    }

    pub fn vector(&self, i: usize) -> Vec<F> {
        dense(&self.rows[i], self.ambient)
    }

    pub fn to_subspace(&self) -> Subspace<F> {
        Subspace::from_vectors(self.ambient, (0..self.dim()).map(|i| self.vector(i)))
    }
}

#[derive(Clone, Debug)]
pub struct CochainSpace<F> {
    pub degree: usize,
    pub basis: SparseBasis<F>,
}

impl<F: Field> CochainSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }
}

/// Face, degeneracy and cyclic operators of one degree n as matrices in
/// the cochain bases: faces δ_i: C^{n-1} → C^n (empty for n = 0),
/// degeneracies σ_i: C^{n+1} → C^n when C^{n+1} was built, and τ on C^n.
#[derive(Clone, Debug)]
pub struct Operators<F> {
    pub degree: usize,
    pub faces: Vec<Matrix<F>>,
    pub degeneracies: Vec<Matrix<F>>,
    pub tau: Matrix<F>,
}

/// Pure-tensor data shared by all operators.
struct Ctx<'a, F: Field> {
    w: &'a WeakHopfAlgebra<F>,
    d: usize,
    pi_l: Vec<Vec<(usize, F)>>,
    pibar_r: Vec<Vec<(usize, F)>>,
    s: Vec<(usize, F)>,
    /// S(e_i⟵σ).
    twisted: Vec<Vec<(usize, F)>>,
    comult: HashMap<(usize, usize), Sparse<F>>,
}

impl<'a, F: Field> Ctx<'a, F> {
    fn new(w: &'a WeakHopfAlgebra<F>, mp: &ModularPair<F>) -> Self {
        let d = w.dim();
        let p = w.projections();
        let cols = |m: &Matrix<F>| (0..d).map(|i| sparse_of(&m.col(i))).collect::<Vec<_>>();
        let twisted = (0..d).map(|i| sparse_of(&w.s(&w.hit_r(&w.basis(i), &mp.sigma.g)))).collect();
        Ctx { w, d, pi_l: cols(&p.pi_l), pibar_r: cols(&p.pibar_r), s: sparse_of(&mp.s.g), twisted, comult: HashMap::new() }
    }

    fn prod(&self, a: &[(usize, F)], b: &[(usize, F)]) -> Vec<(usize, F)> {
        let mut out = Sparse::new();
        for (i, x) in a {
            for (j, y) in b {
                for (k, c) in self.w.basis_product(*i, *j) {
                    add_into(&mut out, *k, x.clone() * y * c);
                }
            }
        }
        out.into_iter().collect()
    }

    fn unit_vec(&self, i: usize) -> Vec<(usize, F)> {
        vec![(i, F::one())]
    }

    /// Δ^{m}(e_j) in A^{⊗(m+1)}.
    fn iterated(&mut self, m: usize, j: usize) -> Sparse<F> {
        if let Some(v) = self.comult.get(&(m, j)) {
            return v.clone();
        }
        let mut out = Sparse::new();
        if m == 0 {
            out.insert(j, F::one());
        } else {
            let stride = self.d.pow(m as u32);
            for (x, z, c) in self.w.basis_coproduct(j).to_vec() {
                for (k, v) in self.iterated(m - 1, z) {
                    add_into(&mut out, x * stride + k, c.clone() * v);
                }
            }
        }
        self.comult.insert((m, j), out.clone());
        out
    }

    fn iterated_of(&mut self, m: usize, y: &[(usize, F)]) -> Sparse<F> {
        let mut out = Sparse::new();
        for (j, c) in y {
            for (k, v) in self.iterated(m, *j) {
                add_into(&mut out, k, c.clone() * v);
            }
        }
        out
    }

    fn digits(&self, mut idx: usize, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for k in (0..n).rev() {
            out[k] = idx % self.d;
            idx /= self.d;
        }
        out
    }

    /// Tensor product of the factor vectors, added to `out` with weight c.
    fn outer(&self, out: &mut Sparse<F>, c: &F, parts: &[Vec<(usize, F)>]) {
        let mut acc: Vec<(usize, F)> = vec![(0, c.clone())];
        for part in parts {
            let mut next = Vec::with_capacity(acc.len() * part.len());
            for (i, x) in &acc {
                for (j, y) in part {
                    next.push((i * self.d + j, x.clone() * y));
                }
            }
            acc = next;
        }
        for (k, v) in acc {
            add_into(out, k, v);
        }
    }

    /// Δ^{n-1}(y)·(B_1⊗…⊗B_n).
    fn diagonal(&mut self, y: &[(usize, F)], b: &[Vec<(usize, F)>]) -> Sparse<F> {
        let n = b.len();
        let mut out = Sparse::new();
        for (k, c) in self.iterated_of(n - 1, y) {
            let xs = self.digits(k, n);
            let parts: Vec<_> = xs.iter().zip(b).map(|(x, bb)| self.prod(&self.unit_vec(*x), bb)).collect();
            self.outer(&mut out, &c, &parts);
        }
        out
    }
}

#[derive(Clone, Copy, Debug)]
enum Op {
    Face(usize),
    Degeneracy(usize),
    Tau,
}

/// Image of the pure tensor `ix` (in degree `n_in`) under `op` of degree n.
fn apply_pure<F: Field>(ctx: &mut Ctx<F>, op: Op, n: usize, ix: &[usize]) -> Sparse<F> {
    let w = ctx.w;
    let e = |i: usize| vec![(i, F::one())];
    let mut out = Sparse::new();
    let one = F::one();
    match op {
        Op::Face(i) if n == 1 => {
            let x = ix[0];
            let part = if i == 0 { ctx.pibar_r[x].clone() } else { ctx.prod(&e(x), &ctx.s) };
            ctx.outer(&mut out, &one, &[part]);
        }
        Op::Face(0) => {
            for (x, y, c) in w.delta_one() {
                let mut parts = vec![e(*x), ctx.prod(&e(*y), &e(ix[0]))];
                parts.extend(ix[1..].iter().map(|i| e(*i)));
                ctx.outer(&mut out, c, &parts);
            }
        }
        Op::Face(i) if i == n => {
            let last = ix[n - 2];
            for (x, y, c) in w.delta_one() {
                let mut parts: Vec<_> = ix[..n - 2].iter().map(|i| e(*i)).collect();
                parts.push(ctx.prod(&e(*x), &e(last)));
                parts.push(ctx.prod(&e(*y), &ctx.s));
                ctx.outer(&mut out, c, &parts);
            }
        }
        Op::Face(i) => {
            for (x, y, c) in w.basis_coproduct(ix[i - 1]) {
                let mut parts: Vec<_> = ix[..i - 1].iter().map(|i| e(*i)).collect();
                parts.push(e(*x));
                parts.push(e(*y));
                parts.extend(ix[i..].iter().map(|i| e(*i)));
                ctx.outer(&mut out, c, &parts);
            }
        }
        Op::Degeneracy(0) if n == 0 => {
            ctx.outer(&mut out, &one, &[ctx.pi_l[ix[0]].clone()]);
        }
        Op::Degeneracy(i) if i == n => {
            let mut parts: Vec<_> = ix[..n - 1].iter().map(|i| e(*i)).collect();
            parts.push(ctx.prod(&ctx.pibar_r[ix[n]], &e(ix[n - 1])));
            ctx.outer(&mut out, &one, &parts);
        }
        Op::Degeneracy(i) => {
            let mut parts: Vec<_> = ix[..i].iter().map(|i| e(*i)).collect();
            parts.push(ctx.prod(&ctx.pi_l[ix[i]], &e(ix[i + 1])));
            parts.extend(ix[i + 2..].iter().map(|i| e(*i)));
            ctx.outer(&mut out, &one, &parts);
        }
        Op::Tau if n == 0 => {
            out.insert(ix[0], one);
        }
        Op::Tau => {
            let y = ctx.twisted[ix[0]].clone();
            let mut b: Vec<_> = ix[1..].iter().map(|i| e(*i)).collect();
            b.push(ctx.s.clone());
            out = ctx.diagonal(&y, &b);
        }
    }
    out
}

fn apply_sparse<F: Field>(ctx: &mut Ctx<F>, cache: &mut HashMap<usize, Sparse<F>>, op: Op, n: usize, n_in: usize, v: &Sparse<F>) -> Sparse<F> {
    let mut out = Sparse::new();
    for (k, c) in v {
        if !cache.contains_key(k) {
            let ix = ctx.digits(*k, n_in.max(1));
            let img = apply_pure(ctx, op, n, &ix);
            cache.insert(*k, img);
        }
        for (j, x) in &cache[k] {
            add_into(&mut out, *j, c.clone() * x);
        }
    }
    out
}

/// C^0 = A^L and C^n = Δ^{n-1}(1)·A^{⊗n} up to degree `max`.
pub fn cochains<F: Field>(w: &WeakHopfAlgebra<F>, max: usize) -> Result<Vec<CochainSpace<F>>> {
    let d = w.dim();
    let ambient = d.checked_pow(max.max(1) as u32).filter(|a| *a <= MAX_AMBIENT);
    if ambient.is_none() {
        return Err(Error::Input(format!("dim A^{max} exceeds the ambient cap {MAX_AMBIENT}; lower the degree")));
    }
    let mut out = Vec::new();
    let mut c0 = SparseBasis::new(d);
    for v in w.projections().pi_l.image().basis_vectors() {
        c0.insert(sparse_of(&v).into_iter().collect());
    }
    out.push(CochainSpace { degree: 0, basis: c0 });
    if max == 0 {
        return Ok(out);
    }
    let mut c1 = SparseBasis::new(d);
    for i in 0..d {
        c1.insert(Sparse::from([(i, F::one())]));
    }
    out.push(CochainSpace { degree: 1, basis: c1 });
    let traces: Vec<F> = (0..d)
        .map(|x| (0..d).fold(F::zero(), |acc, b| acc + w.mul(&w.basis(x), &w.basis(b))[b].clone()))
        .collect();
    let unit = sparse_of(w.unit());
    for n in 2..=max {
        let ambient = d.pow(n as u32);
        let mut ctx = Ctx { w, d, pi_l: Vec::new(), pibar_r: Vec::new(), s: Vec::new(), twisted: Vec::new(), comult: HashMap::new() };
        let delta1 = ctx.iterated_of(n - 1, &unit);
        // rank of the idempotent Δ^{n-1}(1)·, known in characteristic zero
        let target = (F::characteristic() == 0).then(|| {
            delta1.iter().fold(F::zero(), |acc, (k, c)| acc + ctx.digits(*k, n).iter().fold(c.clone(), |t, x| t * &traces[*x]))
        });
        let terms: Vec<(Vec<usize>, F)> = delta1.iter().map(|(k, c)| (ctx.digits(*k, n), c.clone())).collect();
        let mut basis = SparseBasis::new(ambient);
        let prev = &out[n - 1].basis;
        'gen: for a in 0..d {
            for r in &prev.rows {
                let mut g = Sparse::new();
                for (k, c) in r {
                    let mut ix = vec![a];
                    ix.extend(ctx.digits(*k, n - 1));
                    for (xs, t) in &terms {
                        let parts: Vec<_> = xs.iter().zip(&ix).map(|(x, i)| ctx.prod(&[(*x, F::one())], &[(*i, F::one())])).collect();
                        ctx.outer(&mut g, &(t.clone() * c), &parts);
                    }
                }
                basis.insert(g);
                if let Some(t) = &target {
                    if F::from_i64(basis.dim() as i64) == *t && basis.dim() > 0 {
                        break 'gen;
                    }
                }
            }
        }
        out.push(CochainSpace { degree: n, basis });
    }
    Ok(out)
}

fn op_matrix<F: Field>(
    ctx: &mut Ctx<F>,
    op: Op,
    n: usize,
    src: &CochainSpace<F>,
    tgt: &CochainSpace<F>,
    rep: &mut Report,
    name: String,
) -> Matrix<F> {
    let mut cache = HashMap::new();
    let mut m = Matrix::zeros(tgt.dim(), src.dim());
    let mut bad = None;
    for (j, r) in src.basis.rows.iter().enumerate() {
        let img = apply_sparse(ctx, &mut cache, op, n, src.degree, r);
        match tgt.basis.coordinates_sparse(&img) {
            Some(c) => {
                for (i, x) in c.into_iter().enumerate() {
                    m.set(i, j, x);
                }
            }
            None => {
                bad.get_or_insert(j);
            }
        }
    }
    rep.record(format!("{name} well defined"), "image lies in the target cochain space", bad.map_or(Ok(()), |j| Err(vec![j])));
    m
}

/// Cochain spaces and all operators whose source and target have degree at
/// most `max`, with well-definedness recorded.
pub fn operators<F: Field>(w: &WeakHopfAlgebra<F>, mp: &ModularPair<F>, max: usize) -> Result<(Vec<CochainSpace<F>>, Vec<Operators<F>>, Report)> {
    let spaces = cochains(w, max)?;
    let mut ctx = Ctx::new(w, mp);
    let mut rep = Report::new();
    let mut ops = Vec::new();
    for n in 0..=max {
        let faces = if n == 0 {
            Vec::new()
        } else {
            (0..=n).map(|i| op_matrix(&mut ctx, Op::Face(i), n, &spaces[n - 1], &spaces[n], &mut rep, format!("δ_{i} (n={n})"))).collect()
        };
        let degeneracies = if n < max {
            (0..=n)
                .map(|i| op_matrix(&mut ctx, Op::Degeneracy(i), n, &spaces[n + 1], &spaces[n], &mut rep, format!("σ_{i} (n={n})")))
                .collect()
        } else {
            Vec::new()
        };
        let tau = op_matrix(&mut ctx, Op::Tau, n, &spaces[n], &spaces[n], &mut rep, format!("τ (n={n})"));
        ops.push(Operators { degree: n, faces, degeneracies, tau });
    }
    Ok((spaces, ops, rep))
}

fn first_mismatch<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> std::result::Result<(), Vec<usize>> {
    if a == b {
        return Ok(());
    }
    let col = (0..a.cols()).find(|j| a.col(*j) != b.col(*j)).unwrap_or(0);
    Err(vec![col])
}

/// The cosimplicial identities, the cyclic compatibilities and τ^{n+1} = id,
/// for every relation whose spaces have degree at most `max`. Witnesses are
/// source basis indices.
pub fn verify_lambda_relations<F: Field>(w: &WeakHopfAlgebra<F>, mp: &ModularPair<F>, max: usize) -> Result<Report> {
    let (spaces, ops, mut rep) = operators(w, mp, max)?;
    let delta = |n: usize, i: usize| &ops[n].faces[i];
    let sigma = |n: usize, i: usize| &ops[n].degeneracies[i];
    let tau = |n: usize| &ops[n].tau;
    // δ_j δ_i = δ_i δ_{j-1}, i < j
    for n in 1..max {
        for j in 1..=n + 1 {
            for i in 0..j {
                rep.record(
                    format!("δ_{j}δ_{i} = δ_{i}δ_{} (n={n})", j - 1),
                    "cosimplicial faces",
                    first_mismatch(&delta(n + 1, j).mul(delta(n, i)), &delta(n + 1, i).mul(delta(n, j - 1))),
                );
            }
        }
    }
    // σ_j σ_i = σ_i σ_{j+1}, i ≤ j
    for n in 0..max.saturating_sub(1) {
        for j in 0..=n {
            for i in 0..=j {
                rep.record(
                    format!("σ_{j}σ_{i} = σ_{i}σ_{} (n={n})", j + 1),
                    "cosimplicial degeneracies",
                    first_mismatch(&sigma(n, j).mul(sigma(n + 1, i)), &sigma(n, i).mul(sigma(n + 1, j + 1))),
                );
            }
        }
    }
    // σ_j δ_i on C^n
    for n in 0..max {
        let id = Matrix::identity(spaces[n].dim());
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = sigma(n, j).mul(delta(n + 1, i));
                let (rhs, label) = if i < j {
                    (delta(n, i).mul(sigma(n - 1, j - 1)), format!("δ_{i}σ_{}", j - 1))
                } else if i == j || i == j + 1 {
                    (id.clone(), "id".to_string())
                } else {
                    (delta(n, i - 1).mul(sigma(n - 1, j)), format!("δ_{}σ_{j}", i - 1))
                };
                rep.record(format!("σ_{j}δ_{i} = {label} (n={n})"), "cosimplicial mixed", first_mismatch(&lhs, &rhs));
            }
        }
    }
    for n in 1..=max {
        rep.record(format!("τδ_0 = δ_{n} (n={n})"), "cyclic faces", first_mismatch(&tau(n).mul(delta(n, 0)), delta(n, n)));
        for i in 1..=n {
            rep.record(
                format!("τδ_{i} = δ_{}τ (n={n})", i - 1),
                "cyclic faces",
                first_mismatch(&tau(n).mul(delta(n, i)), &delta(n, i - 1).mul(tau(n - 1))),
            );
        }
    }
    for n in 0..max {
        rep.record(
            format!("τσ_0 = σ_{n}τ² (n={n})"),
            "cyclic degeneracies",
            first_mismatch(&tau(n).mul(sigma(n, 0)), &sigma(n, n).mul(&tau(n + 1).mul(tau(n + 1)))),
        );
        for i in 1..=n {
            rep.record(
                format!("τσ_{i} = σ_{}τ (n={n})", i - 1),
                "cyclic degeneracies",
                first_mismatch(&tau(n).mul(sigma(n, i)), &sigma(n, i - 1).mul(tau(n + 1))),
            );
        }
    }
    for n in 0..=max {
        let mut p = Matrix::identity(spaces[n].dim());
        for _ in 0..=n {
            p = tau(n).mul(&p);
        }
        rep.record(format!("τ^{} = id (n={n})", n + 1), "cyclic order", first_mismatch(&p, &Matrix::identity(spaces[n].dim())));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;
    use crate::Q;

    fn trivial_pair<F: Field>(w: &WeakHopfAlgebra<F>) -> ModularPair<F> {
        check_modular_pair(w, w.counit(), w.unit()).unwrap().0
    }

    /// t⊗t⁻¹ in B⊗B^op.
    pub(crate) fn m2q_pair_s() -> Vec<Q> {
        let t = zoo::m2q_t();
        let a = zoo::Algebra::<Q>::from_matrix(&t);
        let b = zoo::Algebra::<Q>::from_matrix(&t.inverse().unwrap());
        a.iter().flat_map(|x| b.iter().map(move |y| x.clone() * y)).collect()
    }

    #[test]
    fn z2_trivial_pair_in_involution() {
        let w = zoo::cyclic_group(2);
        let (mp, rep) = check_modular_pair(&w, w.counit(), w.unit()).unwrap();
        assert!(rep.passed());
        assert!(mp.in_involution());
    }

    #[test]
    fn non_grouplike_rejected() {
        let w = zoo::cyclic_group(2);
        let two = w.unit().iter().map(|c| c.clone() + c).collect::<Vec<_>>();
        assert!(check_modular_pair(&w, w.counit(), &two).is_err());
    }

    #[test]
    fn m2q_pair_in_involution() {
        let w = zoo::m2q();
        let (mp, rep) = check_modular_pair(&w, w.counit(), &m2q_pair_s()).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures());
        assert!(mp.in_involution());
    }

    #[test]
    fn cochain_dimensions() {
        let w = zoo::cyclic_group(2);
        let c = cochains(&w, 3).unwrap();
        assert_eq!(c.iter().map(|c| c.dim()).collect::<Vec<_>>(), vec![1, 2, 4, 8]);
        let w = zoo::m2q();
        let c = cochains(&w, 2).unwrap();
        assert_eq!(c[0].basis.to_subspace(), w.canonical_subalgebras().left);
        // rank oracle: dense left multiplication by Δ(1) on A⊗A
        let n = w.dim();
        let mut proj = Matrix::zeros(n * n, n * n);
        for (x, y, c) in w.delta_one() {
            proj.add_kron_scaled(c, &w.left_mul_matrix(&w.basis(*x)), &w.left_mul_matrix(&w.basis(*y)));
        }
        assert_eq!(c[2].basis.to_subspace(), proj.image());
    }

    #[test]
    fn low_degree_operators() {
        let w = zoo::cyclic_group(2);
        let mp = trivial_pair(&w);
        let (_, ops, rep) = operators(&w, &mp, 1).unwrap();
        assert!(rep.passed());
        assert_eq!(ops[0].tau, Matrix::identity(1));
        assert_eq!(ops[1].faces[0], ops[1].faces[1]);
        let s = w.antipode();
        assert_eq!(ops[1].tau, *s);
    }

    #[test]
    fn group_algebras_satisfy_relations() {
        for w in [zoo::cyclic_group(2), zoo::cyclic_group(3)] {
            let rep = verify_lambda_relations(&w, &trivial_pair(&w), 3).unwrap();
            assert!(rep.passed(), "{:?}", rep.failures());
        }
    }

    #[test]
    fn m2q_satisfies_relations() {
        let w = zoo::m2q();
        let (mp, _) = check_modular_pair(&w, w.counit(), &m2q_pair_s()).unwrap();
        let rep = verify_lambda_relations(&w, &mp, 2).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures());
    }

    #[test]
    fn non_involutive_pair_breaks_cyclic_order() {
        let w = zoo::sweedler_h4();
        let mp = trivial_pair(&w);
        assert!(mp.modular && !mp.involution);
        let rep = verify_lambda_relations(&w, &mp, 2).unwrap();
        let bad = rep.failures().into_iter().find(|c| c.identity.starts_with("τ^")).expect("τ order fails");
        assert!(!bad.witness.is_empty());
    }

    #[test]
    fn ambient_cap() {
        assert!(cochains(&zoo::m2q(), 4).is_err());
    }
}
