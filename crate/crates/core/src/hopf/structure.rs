//! Subspaces, Hopf maps and the structural predicates built on them.

use std::collections::HashMap;

use serde::Serialize;

use super::{HopfAlg, HopfError};
use crate::groups::FinGroup;
use crate::linalg::{nullspace, Echelon};
use crate::reptheory::decompose;
use crate::scalar::{default_prime, Embedding, Field, Fp};

/// A subspace of H, stored as its reduced row echelon basis.
pub type Subspace<F> = Echelon<F>;

pub fn span<F: Field>(h: &HopfAlg<F>, vecs: impl IntoIterator<Item = Vec<F>>) -> Subspace<F> {
    Echelon::from_rows(h.ctx.clone(), h.dim(), vecs)
}

/// A linear map H → T given by the images of the basis of H.
#[derive(Clone, Debug)]
pub struct HopfMap<F: Field> {
    pub target: HopfAlg<F>,
    pub images: Vec<Vec<F>>,
}

impl<F: Field> HopfMap<F> {
    pub fn apply(&self, v: &[F]) -> Vec<F> {
        let mut out = self.target.zero_vec();
        for (x, img) in v.iter().zip(&self.images) {
            if x.is_zero() {
                continue;
            }
            for (o, y) in out.iter_mut().zip(img) {
                if !y.is_zero() {
                    o.mul_add(x, y);
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        Echelon::from_rows(self.target.ctx.clone(), self.target.dim(), self.images.iter().cloned()).rank()
    }

    pub fn kernel(&self) -> Subspace<F> {
        let d = self.images.len();
        let ctx = self.target.ctx.clone();
        let rows: Vec<Vec<F>> = (0..self.target.dim()).map(|b| self.images.iter().map(|img| img[b].clone()).collect()).collect();
        Echelon::from_rows(ctx.clone(), d, nullspace(&ctx, &rows, d))
    }

    pub fn is_algebra_map(&self, src: &HopfAlg<F>) -> bool {
        let d = src.dim();
        if self.apply(&src.unit) != self.target.unit {
            return false;
        }
        (0..d).all(|i| {
            (0..d).all(|j| {
                let lhs = self.apply(&src.mul(&src.basis_vec(i), &src.basis_vec(j)));
                lhs == self.target.mul(&self.images[i], &self.images[j])
            })
        })
    }

    pub fn is_coalgebra_map(&self, src: &HopfAlg<F>) -> bool {
        let t = self.target.dim();
        (0..src.dim()).all(|i| {
            if self.target.counit_of(&self.images[i]) != src.counit[i] {
                return false;
            }
            let mut lhs = vec![self.target.zero_vec(); t];
            for (j, k, c) in &src.comult[i] {
                let (pj, pk) = (&self.images[*j as usize], &self.images[*k as usize]);
                for (a, x) in pj.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let cx = c.mul(x);
                    for (b, y) in pk.iter().enumerate() {
                        if !y.is_zero() {
                            lhs[a][b].mul_add(&cx, y);
                        }
                    }
                }
            }
            lhs == self.target.comul(&self.images[i])
        })
    }

    pub fn is_hopf_map(&self, src: &HopfAlg<F>) -> bool {
        self.is_algebra_map(src) && self.is_coalgebra_map(src)
    }
}

impl<F: Field> HopfAlg<F> {
    /// The one-dimensional Hopf algebra k.
    pub fn trivial(ctx: F::Ctx) -> HopfAlg<F> {
        let one = F::one(&ctx);
        HopfAlg {
            basis: vec!["1".into()],
            mult: vec![vec![(0, one.clone())]],
            comult: vec![vec![(0, 0, one.clone())]],
            unit: vec![one.clone()],
            counit: vec![one.clone()],
            antipode: vec![vec![(0, one)]],
            provenance: None,
            ctx,
        }
    }

    pub fn counit_map(&self) -> HopfMap<F> {
        HopfMap { target: HopfAlg::trivial(self.ctx.clone()), images: self.counit.iter().map(|e| vec![e.clone()]).collect() }
    }

    pub fn identity_map(&self) -> HopfMap<F> {
        HopfMap { target: self.clone(), images: (0..self.dim()).map(|i| self.basis_vec(i)).collect() }
    }

    /// y ↦ e_j · y, using only the sparse row of e_j.
    pub fn left_basis_mul(&self, j: usize, y: &[F]) -> Vec<F> {
        let mut out = self.zero_vec();
        for (b, yb) in y.iter().enumerate() {
            if yb.is_zero() {
                continue;
            }
            for (k, c) in self.m(j, b) {
                out[*k as usize].mul_add(yb, c);
            }
        }
        out
    }

    pub fn right_basis_mul(&self, y: &[F], j: usize) -> Vec<F> {
        let mut out = self.zero_vec();
        for (b, yb) in y.iter().enumerate() {
            if yb.is_zero() {
                continue;
            }
            for (k, c) in self.m(b, j) {
                out[*k as usize].mul_add(yb, c);
            }
        }
        out
    }
}

/// Smallest unital subalgebra containing the given vectors.
pub fn subalgebra_generated<F: Field>(h: &HopfAlg<F>, gens: &[Vec<F>]) -> Subspace<F> {
    let mut space = span(h, std::iter::empty());
    let mut queue = vec![h.unit_vec()];
    let gens: Vec<Vec<F>> = gens.iter().filter(|g| g.iter().any(|x| !x.is_zero())).cloned().collect();
    while let Some(v) = queue.pop() {
        if !space.insert(v.clone()) {
            continue;
        }
        if space.is_full() {
            break;
        }
        for g in &gens {
            queue.push(h.mul(g, &v));
        }
    }
    space
}

pub fn is_subalgebra<F: Field>(h: &HopfAlg<F>, w: &Subspace<F>) -> bool {
    w.contains(&h.unit) && w.rows.iter().all(|a| w.rows.iter().all(|b| w.contains(&h.mul(a, b))))
}

/// Δ(W) ⊆ W⊗W: every row and column of each Δ(w) lies in W.
pub fn is_subcoalgebra<F: Field>(h: &HopfAlg<F>, w: &Subspace<F>) -> bool {
    let d = h.dim();
    w.rows.iter().all(|r| {
        let m = h.comul(r);
        m.iter().all(|row| w.contains(row)) && (0..d).all(|k| w.contains(&m.iter().map(|row| row[k].clone()).collect::<Vec<_>>()))
    })
}

pub fn is_antipode_stable<F: Field>(h: &HopfAlg<F>, w: &Subspace<F>) -> bool {
    w.rows.iter().all(|r| w.contains(&h.antipode_vec(r)))
}

pub fn is_hopf_subalgebra<F: Field>(h: &HopfAlg<F>, w: &Subspace<F>) -> bool {
    is_subalgebra(h, w) && is_subcoalgebra(h, w) && is_antipode_stable(h, w)
}

/// Stability under the left and right adjoint actions of every basis element.
pub fn is_normal<F: Field>(h: &HopfAlg<F>, k: &Subspace<F>) -> bool {
    let d = h.dim();
    let s: Vec<Vec<F>> = (0..d).map(|i| h.antipode_vec(&h.basis_vec(i))).collect();
    for x in &k.rows {
        // x·S(e_k) and S(e_j)·x for all basis indices
        let x_s: Vec<Vec<F>> = s.iter().map(|sk| h.mul(x, sk)).collect();
        let s_x: Vec<Vec<F>> = s.iter().map(|sj| h.mul(sj, x)).collect();
        for i in 0..d {
            let mut left = h.zero_vec();
            let mut right = h.zero_vec();
            for (j, kk, c) in &h.comult[i] {
                let l = h.left_basis_mul(*j as usize, &x_s[*kk as usize]);
                let r = h.right_basis_mul(&s_x[*j as usize], *kk as usize);
                for (o, v) in left.iter_mut().zip(&l) {
                    if !v.is_zero() {
                        o.mul_add(c, v);
                    }
                }
                for (o, v) in right.iter_mut().zip(&r) {
                    if !v.is_zero() {
                        o.mul_add(c, v);
                    }
                }
            }
            if !k.contains(&left) || !k.contains(&right) {
                return false;
            }
        }
    }
    true
}

/// p(h₁) ⊗ h₂ = p(h₂) ⊗ h₁ for all basis h.
pub fn is_cocentral<F: Field>(h: &HopfAlg<F>, p: &HopfMap<F>) -> Result<bool, HopfError> {
    if !p.is_coalgebra_map(h) {
        return Err(HopfError::NotCoalgebraMap);
    }
    let t = p.target.dim();
    for terms in &h.comult {
        let mut lhs = vec![h.zero_vec(); t];
        let mut rhs = vec![h.zero_vec(); t];
        for (j, k, c) in terms {
            for a in 0..t {
                let pj = &p.images[*j as usize][a];
                if !pj.is_zero() {
                    lhs[a][*k as usize].mul_add(c, pj);
                }
                let pk = &p.images[*k as usize][a];
                if !pk.is_zero() {
                    rhs[a][*j as usize].mul_add(c, pk);
                }
            }
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// H^{co p} = {h : (id⊗p)Δ(h) = h⊗1}.
pub fn coinvariants<F: Field>(h: &HopfAlg<F>, p: &HopfMap<F>) -> Subspace<F> {
    let d = h.dim();
    let t = p.target.dim();
    let one_t = &p.target.unit;
    // column i of the map x ↦ (id⊗p)Δ(x) - x⊗1, flattened over (j, b)
    let cols: Vec<Vec<F>> = (0..d)
        .map(|i| {
            let mut m = vec![F::zero(&h.ctx); d * t];
            for (j, k, c) in &h.comult[i] {
                for (b, y) in p.images[*k as usize].iter().enumerate() {
                    if !y.is_zero() {
                        m[*j as usize * t + b].mul_add(c, y);
                    }
                }
            }
            for (b, u) in one_t.iter().enumerate() {
                m[i * t + b] = m[i * t + b].sub(u);
            }
            m
        })
        .collect();
    let rows: Vec<Vec<F>> = (0..d * t)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect::<Vec<F>>())
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    span(h, nullspace(&h.ctx, &rows, d))
}

/// The left ideal H·K⁺ (two-sided when K is normal).
pub fn hk_plus<F: Field>(h: &HopfAlg<F>, k: &Subspace<F>) -> Subspace<F> {
    let mut out = span(h, std::iter::empty());
    for x in &k.rows {
        let e = h.counit_of(x);
        let xp: Vec<F> = x.iter().zip(&h.unit).map(|(a, u)| a.sub(&e.mul(u))).collect();
        if xp.iter().all(|v| v.is_zero()) {
            continue;
        }
        for j in 0..h.dim() {
            out.insert(h.left_basis_mul(j, &xp));
            if out.is_full() {
                return out;
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub k_hopf_subalgebra: bool,
    pub iota_injective: bool,
    pub p_surjective: bool,
    pub ker_p_eq_hk_plus: bool,
    pub k_eq_coinvariants: bool,
    pub p_iota_trivial: bool,
    pub dim_k: usize,
    pub dim_coinvariants: usize,
    pub dim_ker_p: usize,
    pub dim_hk_plus: usize,
}

impl ExactnessReport {
    pub fn exact(&self) -> bool {
        self.k_hopf_subalgebra && self.iota_injective && self.p_surjective && self.ker_p_eq_hk_plus && self.k_eq_coinvariants && self.p_iota_trivial
    }
}

/// Checks each condition of k → K → H → T → k independently.
pub fn exactness_check<F: Field>(h: &HopfAlg<F>, k: &Subspace<F>, p: &HopfMap<F>) -> ExactnessReport {
    let coinv = coinvariants(h, p);
    let ker = p.kernel();
    let hk = hk_plus(h, k);
    let one_t = &p.target.unit;
    let p_iota_trivial = k.rows.iter().all(|x| {
        let e = h.counit_of(x);
        p.apply(x) == one_t.iter().map(|u| u.mul(&e)).collect::<Vec<_>>()
    });
    ExactnessReport {
        k_hopf_subalgebra: is_hopf_subalgebra(h, k),
        iota_injective: Echelon::from_rows(h.ctx.clone(), h.dim(), k.rows.iter().cloned()).rank() == k.rank(),
        p_surjective: p.rank() == p.target.dim(),
        ker_p_eq_hk_plus: ker.rank() == hk.rank() && hk.rows.iter().all(|r| ker.contains(r)) && ker.rows.iter().all(|r| hk.contains(r)),
        k_eq_coinvariants: coinv.same_span(k),
        p_iota_trivial,
        dim_k: k.rank(),
        dim_coinvariants: coinv.rank(),
        dim_ker_p: ker.rank(),
        dim_hk_plus: hk.rank(),
    }
}

/// Normalized two-sided integral Λ (hΛ = ε(h)Λ = Λh, ε(Λ) = 1).
pub fn integral<F: Field>(h: &HopfAlg<F>) -> Result<Vec<F>, HopfError> {
    let d = h.dim();
    let mut eqs: Echelon<F> = Echelon::new(h.ctx.clone(), d);
    let is_left = |v: &[F]| (0..d).all(|j| h.left_basis_mul(j, v) == v.iter().map(|x| x.mul(&h.counit[j])).collect::<Vec<_>>());
    let mut sol: Option<Vec<F>> = None;
    for j in 0..d {
        // e_j Λ - ε(e_j) Λ = 0, one equation per output coordinate
        let mut rows = vec![vec![F::zero(&h.ctx); d]; d];
        for i in 0..d {
            for (k, c) in h.m(j, i) {
                rows[*k as usize][i].add_assign(c);
            }
            rows[i][i] = rows[i][i].sub(&h.counit[j]);
        }
        for r in rows {
            if r.iter().any(|x| !x.is_zero()) {
                eqs.insert(r);
            }
        }
        if eqs.rank() + 1 == d {
            let ns = crate::linalg::nullspace_of(&eqs);
            if is_left(&ns[0]) {
                sol = Some(ns[0].clone());
                break;
            }
        }
    }
    let lam = sol.ok_or_else(|| HopfError::Integral(format!("space of left integrals has dimension {}", d - eqs.rank())))?;
    let e = h.counit_of(&lam);
    let inv = e.inv().ok_or_else(|| HopfError::Integral("ε(Λ) = 0: not semisimple".into()))?;
    let lam: Vec<F> = lam.iter().map(|x| x.mul(&inv)).collect();
    let right_ok = (0..d).all(|j| h.right_basis_mul(&lam, j) == lam.iter().map(|x| x.mul(&h.counit[j])).collect::<Vec<_>>());
    if !right_ok {
        return Err(HopfError::Integral("left integral is not a right integral".into()));
    }
    Ok(lam)
}

/// The working prime field for decomposition of `h`.
pub fn working_embedding<F: Field>(h: &HopfAlg<F>) -> Result<Embedding, HopfError> {
    let n = F::conductor_of(&h.ctx);
    let q = F::prime_of(&h.ctx).unwrap_or_else(|| default_prime(n, h.dim() as u64));
    Ok(Embedding::new(n, q)?)
}

pub fn reduce_mod<F: Field>(h: &HopfAlg<F>, emb: &Embedding) -> Result<HopfAlg<Fp>, HopfError> {
    Ok(h.map_scalars(emb.q, |c| c.reduce(emb))?)
}

/// Group-likes with the group they form.
#[derive(Clone, Debug)]
pub struct GroupLikes<F: Field> {
    /// Images mod q; index 0 is the unit.
    pub modular: Vec<Vec<Fp>>,
    /// Exact lifts, each re-verified; `None` if some coordinate did not lift.
    pub exact: Option<Vec<Vec<F>>>,
    pub group: FinGroup,
    pub q: u64,
}

pub fn is_grouplike<F: Field>(h: &HopfAlg<F>, g: &[F]) -> bool {
    if !h.counit_of(g).is_one() {
        return false;
    }
    let m = h.comul(g);
    m.iter().enumerate().all(|(a, row)| row.iter().enumerate().all(|(b, x)| *x == g[a].mul(&g[b])))
}

/// All group-likes, from the one-dimensional blocks of the dual algebra.
pub fn grouplikes<F: Field>(h: &HopfAlg<F>, seed: u64) -> Result<GroupLikes<F>, HopfError> {
    let emb = working_embedding(h)?;
    let hm = reduce_mod(h, &emb)?;
    let dual = hm.dual();
    let dec = decompose::decompose(&dual.algebra(), seed).map_err(|e| HopfError::Decomposition(e.to_string()))?;
    let unit_mod = hm.unit_vec();
    let mut modular: Vec<Vec<Fp>> = dec.blocks.iter().filter(|b| b.degree == 1).map(|b| b.character.clone()).collect();
    let pos = modular.iter().position(|g| *g == unit_mod).ok_or_else(|| HopfError::Other("unit is not among the group-likes".into()))?;
    let u = modular.remove(pos);
    modular.insert(0, u);
    let group = group_of(&hm, &modular, "G")?;
    let bound = (h.dim() as u64).max(16);
    let exact = modular
        .iter()
        .map(|g| {
            let v: Option<Vec<F>> = g.iter().map(|x| F::lift(*x, &emb, &h.ctx, bound)).collect();
            v.filter(|v| is_grouplike(h, v))
        })
        .collect();
    Ok(GroupLikes { modular, exact, group, q: emb.q })
}

/// Cayley table of a multiplicatively closed list of vectors (unit first).
fn group_of(h: &HopfAlg<Fp>, elems: &[Vec<Fp>], name: &str) -> Result<FinGroup, HopfError> {
    let index: HashMap<Vec<u64>, usize> = elems.iter().enumerate().map(|(i, g)| (g.iter().map(|x| x.v).collect(), i)).collect();
    let n = elems.len();
    let mut table = Vec::with_capacity(n * n);
    for a in elems {
        for b in elems {
            let key: Vec<u64> = h.mul(a, b).iter().map(|x| x.v).collect();
            table.push(*index.get(&key).ok_or_else(|| HopfError::Other("group-likes not closed under multiplication".into()))?);
        }
    }
    let labels = (0..n).map(|i| format!("g{i}")).collect();
    let mut g = FinGroup::from_table(name, labels, table);
    if let Some(m) = g.catalog_match() {
        g.name = m;
    }
    Ok(g)
}

/// Γ with H ≅ k^Γ, from the algebra characters of a commutative H.
pub fn group_reconstruct<F: Field>(h: &HopfAlg<F>, seed: u64) -> Result<FinGroup, HopfError> {
    if !h.is_commutative() {
        return Err(HopfError::NotCommutative);
    }
    let gl = grouplikes(&h.dual(), seed)?;
    if gl.group.order() != h.dim() {
        return Err(HopfError::Other(format!("{} characters for dimension {}", gl.group.order(), h.dim())));
    }
    Ok(gl.group)
}

/// The Hopf subalgebra W as a Hopf algebra in the basis of its echelon rows.
pub fn restrict<F: Field>(h: &HopfAlg<F>, w: &Subspace<F>) -> Result<HopfAlg<F>, HopfError> {
    if !is_subcoalgebra(h, w) {
        return Err(HopfError::Shape("subspace is not a subcoalgebra".into()));
    }
    let r = w.rank();
    let coords = |v: &[F]| w.coords(v).ok_or_else(|| HopfError::Shape("subspace is not a Hopf subalgebra".into()));
    let mut mult = Vec::with_capacity(r * r);
    for a in &w.rows {
        for b in &w.rows {
            let c = coords(&h.mul(a, b))?;
            mult.push(c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k as u32, x)).collect());
        }
    }
    let mut comult = Vec::with_capacity(r);
    for a in &w.rows {
        let m = h.comul(a);
        let mut t = Vec::new();
        for (x, &pa) in w.pivots.iter().enumerate() {
            for (y, &pb) in w.pivots.iter().enumerate() {
                let c = &m[pa][pb];
                if !c.is_zero() {
                    t.push((x as u32, y as u32, c.clone()));
                }
            }
        }
        comult.push(t);
    }
    let antipode = w
        .rows
        .iter()
        .map(|a| Ok(coords(&h.antipode_vec(a))?.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k as u32, x)).collect()))
        .collect::<Result<Vec<_>, HopfError>>()?;
    let sub = HopfAlg {
        ctx: h.ctx.clone(),
        basis: (0..r).map(|i| format!("w{i}")).collect(),
        mult,
        comult,
        unit: coords(&h.unit)?,
        counit: w.rows.iter().map(|a| h.counit_of(a)).collect(),
        antipode,
        provenance: None,
    };
    Ok(sub)
}

/// H/I for a Hopf ideal I, in the basis of non-pivot coordinates, with the
/// quotient map.
pub fn quotient<F: Field>(h: &HopfAlg<F>, ideal: &Subspace<F>) -> (HopfAlg<F>, HopfMap<F>) {
    let d = h.dim();
    let mut is_pivot = vec![false; d];
    for &p in &ideal.pivots {
        is_pivot[p] = true;
    }
    let keep: Vec<usize> = (0..d).filter(|&i| !is_pivot[i]).collect();
    let pi = |v: Vec<F>| -> Vec<F> {
        let r = ideal.reduce(v);
        keep.iter().map(|&i| r[i].clone()).collect()
    };
    let images: Vec<Vec<F>> = (0..d).map(|i| pi(h.basis_vec(i))).collect();
    let n = keep.len();
    let sparse = |v: Vec<F>| -> Vec<(u32, F)> { v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k as u32, x)).collect() };
    let mut mult = Vec::with_capacity(n * n);
    for &a in &keep {
        for &b in &keep {
            mult.push(sparse(pi(h.mul(&h.basis_vec(a), &h.basis_vec(b)))));
        }
    }
    let comult = keep
        .iter()
        .map(|&a| {
            let mut m = vec![vec![F::zero(&h.ctx); n]; n];
            for (j, k, c) in &h.comult[a] {
                for (x, u) in images[*j as usize].iter().enumerate() {
                    if u.is_zero() {
                        continue;
                    }
                    let cu = c.mul(u);
                    for (y, v) in images[*k as usize].iter().enumerate() {
                        if !v.is_zero() {
                            m[x][y].mul_add(&cu, v);
                        }
                    }
                }
            }
            let mut t = Vec::new();
            for (x, row) in m.into_iter().enumerate() {
                for (y, c) in row.into_iter().enumerate() {
                    if !c.is_zero() {
                        t.push((x as u32, y as u32, c));
                    }
                }
            }
            t
        })
        .collect();
    let q = HopfAlg {
        ctx: h.ctx.clone(),
        basis: keep.iter().map(|&i| format!("[{}]", h.basis[i])).collect(),
        mult,
        comult,
        unit: pi(h.unit_vec()),
        counit: keep.iter().map(|&i| h.counit[i].clone()).collect(),
        antipode: keep.iter().map(|&a| sparse(pi(h.antipode_vec(&h.basis_vec(a))))).collect(),
        provenance: None,
    };
    let map = HopfMap { target: q.clone(), images };
    (q, map)
}

#[derive(Clone, Debug)]
pub struct QuotientGroup<F: Field> {
    pub group: FinGroup,
    pub cyclic: bool,
    pub quotient: HopfAlg<F>,
    pub projection: HopfMap<F>,
}

/// M with H/HK⁺ ≅ kM.
pub fn quotient_group_algebra<F: Field>(h: &HopfAlg<F>, k: &Subspace<F>, seed: u64) -> Result<QuotientGroup<F>, HopfError> {
    let ideal = hk_plus(h, k);
    let (q, projection) = quotient(h, &ideal);
    if !q.is_cocommutative() {
        return Err(HopfError::QuotientNotGroup);
    }
    let gl = grouplikes(&q, seed)?;
    if gl.group.order() != q.dim() {
        return Err(HopfError::QuotientNotGroup);
    }
    let cyclic = gl.group.is_cyclic();
    Ok(QuotientGroup { group: gl.group, cyclic, quotient: q, projection })
}
