//! Wedderburn decomposition of split semisimple algebras over F_q.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::RepError;
use crate::hopf::Algebra;
use crate::linalg::{nullspace, Echelon};
use crate::scalar::fpoly::Poly;
use crate::scalar::{Field, Fp};

pub const MAX_TRIES: usize = 64;

/// One simple block of a semisimple algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Block {
    pub degree: usize,
    /// Central primitive idempotent.
    pub idempotent: Vec<Fp>,
    /// Character values on the algebra basis.
    pub character: Vec<Fp>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub q: u64,
    pub blocks: Vec<Block>,
}

/// An absolutely irreducible representation: one matrix per basis element.
#[derive(Clone, Debug, PartialEq)]
pub struct Irrep {
    pub degree: usize,
    pub matrices: Vec<Vec<Vec<Fp>>>,
    pub multiplicity: usize,
}

impl Decomposition {
    /// Multiset {(degree, count)} sorted by degree.
    pub fn type_multiset(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for b in &self.blocks {
            match out.last_mut() {
                Some((d, n)) if *d == b.degree => *n += 1,
                _ => out.push((b.degree, 1)),
            }
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.degree).collect()
    }
}

fn zero(q: u64) -> Fp {
    Fp { v: 0, q }
}

/// Trace form vector t with tr(L_x) = Σ_k x_k t_k.
fn trace_vector(a: &Algebra<Fp>) -> Vec<Fp> {
    let d = a.dim();
    let q = a.ctx;
    (0..d)
        .map(|k| {
            let mut t = zero(q);
            for i in 0..d {
                for (x, c) in a.m(k, i) {
                    if *x as usize == i {
                        t = t.add(*c);
                    }
                }
            }
            t
        })
        .collect()
}

fn random_vec(rng: &mut ChaCha8Rng, q: u64, n: usize) -> Vec<Fp> {
    (0..n).map(|_| Fp { v: rng.random_range(0..q), q }).collect()
}

fn combine(q: u64, basis: &[Vec<Fp>], coeffs: &[Fp]) -> Vec<Fp> {
    let d = basis.first().map_or(0, |b| b.len());
    let mut out = vec![zero(q); d];
    for (b, c) in basis.iter().zip(coeffs) {
        if c.v == 0 {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            o.mul_add(c, x);
        }
    }
    out
}

/// Basis of the center, as the commutant of random elements verified
/// against every basis element.
pub fn center(a: &Algebra<Fp>, rng: &mut ChaCha8Rng) -> Vec<Vec<Fp>> {
    let d = a.dim();
    let q = a.ctx;
    let mut rows: Vec<Vec<Fp>> = Vec::new();
    let basis: Vec<Vec<Fp>> = (0..d).map(|i| a.basis_vec(i)).collect();
    let mut candidates = (0..2).map(|_| random_vec(rng, q, d)).collect::<Vec<_>>().into_iter().chain(basis.iter().cloned());
    let mut used = 0;
    loop {
        let Some(x) = candidates.next() else {
            return nullspace(&q, &rows, d);
        };
        // column i of the commutator map z ↦ zx - xz
        let cols: Vec<Vec<Fp>> = basis.iter().map(|e| sub(&a.mul(e, &x), &a.mul(&x, e))).collect();
        for k in 0..d {
            rows.push(cols.iter().map(|c| c[k]).collect());
        }
        used += 1;
        if used < 2 {
            continue;
        }
        let z = nullspace(&q, &rows, d);
        if z.iter().all(|v| basis.iter().all(|e| a.mul(v, e) == a.mul(e, v))) {
            return z;
        }
    }
}

fn sub(x: &[Fp], y: &[Fp]) -> Vec<Fp> {
    x.iter().zip(y).map(|(a, b)| (*a).sub(*b)).collect()
}

/// Powers 1, x, …, x^m up to the first linear dependence, and the monic
/// minimal polynomial (coefficients lowest first).
pub fn min_poly(a: &Algebra<Fp>, one: &[Fp], x: &[Fp]) -> (Vec<Vec<Fp>>, Vec<u64>) {
    let d = a.dim();
    let q = a.ctx;
    let cap = d + 1;
    let mut ech: Echelon<Fp> = Echelon::new(q, d + cap);
    let mut powers: Vec<Vec<Fp>> = Vec::new();
    let mut p = one.to_vec();
    loop {
        let k = powers.len();
        let mut aug = p.clone();
        aug.resize(d + cap, zero(q));
        aug[d + k] = Fp { v: 1, q };
        let r = ech.reduce(aug);
        if r[..d].iter().all(|v| v.v == 0) {
            let lead = r[d + k].inv().expect("relation involves the top power");
            let coeffs = (0..=k).map(|j| r[d + j].mul(lead).v).collect();
            powers.push(p);
            return (powers, coeffs);
        }
        ech.insert(r);
        let next = a.mul(x, &p);
        powers.push(p);
        p = next;
    }
}

fn eval_at(q: u64, powers: &[Vec<Fp>], poly: &Poly) -> Vec<Fp> {
    let coeffs: Vec<Fp> = poly.c.iter().map(|&v| Fp { v, q }).collect();
    combine(q, &powers[..coeffs.len()], &coeffs)
}

/// Lagrange idempotents of a split squarefree minimal polynomial.
fn lagrange(q: u64, powers: &[Vec<Fp>], roots: &[u64]) -> Vec<Vec<Fp>> {
    roots
        .iter()
        .map(|&l| {
            let mut p = Poly::new(q, vec![1]);
            let mut den = Fp { v: 1, q };
            for &m in roots {
                if m != l {
                    p = p.mul(&Poly::new(q, vec![(q - m) % q, 1]));
                    den = den.mul(Fp { v: l, q }.sub(Fp { v: m, q }));
                }
            }
            let inv = den.inv().expect("distinct roots");
            let p = Poly::new(q, p.c.iter().map(|&c| Fp { v: c, q }.mul(inv).v).collect());
            eval_at(q, powers, &p)
        })
        .collect()
}

fn dot(x: &[Fp], y: &[Fp], q: u64) -> Fp {
    let mut acc = zero(q);
    for (a, b) in x.iter().zip(y) {
        acc.mul_add(a, b);
    }
    acc
}

fn isqrt_exact(n: u64) -> Option<usize> {
    let r = (n as f64).sqrt().round() as u64;
    (r * r == n).then_some(r as usize)
}

/// Splits A into simple blocks. The result does not depend on `seed`.
pub fn decompose(a: &Algebra<Fp>, seed: u64) -> Result<Decomposition, RepError> {
    let q = a.ctx;
    let d = a.dim();
    if d as u64 % q == 0 {
        return Err(RepError::BadPrime(q));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let z = center(a, &mut rng);
    let r = z.len();
    let one = a.unit_vec();
    let t = trace_vector(a);
    for _ in 0..MAX_TRIES {
        let x = combine(q, &z, &random_vec(&mut rng, q, r));
        let (powers, mp) = min_poly(a, &one, &x);
        if mp.len() != r + 1 {
            continue;
        }
        let roots = Poly::new(q, mp).roots(&mut rng);
        if roots.len() != r {
            return Err(RepError::NotSplit(format!("central element has {} of {} roots in F_{q}", roots.len(), r)));
        }
        let mut blocks = Vec::with_capacity(r);
        for e in lagrange(q, &powers, &roots) {
            let dim = dot(&e, &t, q).v;
            let n = isqrt_exact(dim).ok_or_else(|| RepError::NotSplit(format!("block of dimension {dim} is not a square")))?;
            let ninv = Fp::new(n as i64, q).inv().ok_or(RepError::BadPrime(q))?;
            let character = (0..d).map(|j| dot(&a.mul(&a.basis_vec(j), &e), &t, q).mul(ninv)).collect();
            blocks.push(Block { degree: n, idempotent: e, character });
        }
        if blocks.iter().map(|b| b.degree * b.degree).sum::<usize>() != d {
            return Err(RepError::NotSplit("block dimensions do not add up".into()));
        }
        blocks.sort_by(|x, y| x.degree.cmp(&y.degree).then_with(|| cmp_vec(&x.character, &y.character)));
        return Ok(Decomposition { q, blocks });
    }
    Err(RepError::SplitFailed(MAX_TRIES))
}

pub(crate) fn cmp_vec(x: &[Fp], y: &[Fp]) -> std::cmp::Ordering {
    x.iter().map(|v| v.v).cmp(y.iter().map(|v| v.v))
}

/// Explicit irrep of a block, from a rank-one element of the block.
pub fn irrep(a: &Algebra<Fp>, block: &Block, seed: u64) -> Result<Irrep, RepError> {
    let q = a.ctx;
    let d = a.dim();
    let n = block.degree;
    let e = &block.idempotent;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    for _ in 0..MAX_TRIES {
        let y = if n == 1 {
            e.clone()
        } else {
            let b = a.mul(&random_vec(&mut rng, q, d), e);
            let (powers, mp) = min_poly(a, e, &b);
            if mp.len() != n + 1 {
                continue;
            }
            // mp is the characteristic polynomial of b on the simple module,
            // so a simple root λ gives the rank-one element (mp/(x - λ))(b)
            let mp = Poly::new(q, mp);
            let Some(&lambda) = mp.roots(&mut rng).first() else {
                continue;
            };
            let (p, _) = mp.divrem(&Poly::new(q, vec![(q - lambda) % q, 1]));
            // powers[0] is e, so p(b) stays inside the block
            eval_at(q, &powers, &p)
        };
        let mut space: Echelon<Fp> = Echelon::new(q, d);
        let mut basis = Vec::new();
        for j in 0..d {
            let v = a.mul(&a.basis_vec(j), &y);
            if space.insert(v.clone()) {
                basis.push(v);
            }
        }
        if basis.len() != n {
            continue;
        }
        // coordinates through the reduced echelon form
        let rref = space.clone();
        let coords = |v: &[Fp]| -> Vec<Fp> { rref.coords(v).expect("left ideal is invariant") };
        let basis_coords: Vec<Vec<Fp>> = basis.iter().map(|b| coords(b)).collect();
        let change = crate::linalg::inverse(&q, &transpose(&basis_coords)).ok_or_else(|| RepError::NotSplit("degenerate basis".into()))?;
        let matrices = (0..d)
            .map(|j| {
                let ej = a.basis_vec(j);
                let cols: Vec<Vec<Fp>> = basis.iter().map(|b| mat_vec(&change, &coords(&a.mul(&ej, b)))).collect();
                transpose(&cols)
            })
            .collect();
        return Ok(Irrep { degree: n, matrices, multiplicity: n });
    }
    Err(RepError::SplitFailed(MAX_TRIES))
}

pub(crate) fn transpose(m: &[Vec<Fp>]) -> Vec<Vec<Fp>> {
    if m.is_empty() {
        return vec![];
    }
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

fn mat_vec(m: &[Vec<Fp>], v: &[Fp]) -> Vec<Fp> {
    let q = v.first().map_or(2, |x| x.q);
    m.iter().map(|r| dot(r, v, q)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{polyhedral, Kind};
    use crate::hopf::group_algebra;
    use crate::scalar::Embedding;

    #[test]
    fn s3_group_algebra_mod_7() {
        let g = polyhedral(Kind::Dihedral(3)).unwrap();
        let h = group_algebra(&g, 1);
        let hp = h.modularize(&Embedding::new(1, 7).unwrap()).unwrap().algebra();
        let dec = decompose(&hp, 1).unwrap();
        assert_eq!(dec.type_multiset(), vec![(1, 2), (2, 1)]);
        let ir = irrep(&hp, &dec.blocks[2], 5).unwrap();
        // the matrices satisfy the multiplication table
        for i in 0..6 {
            for j in 0..6 {
                let prod = crate::linalg::matmul(&7, &ir.matrices[i], &ir.matrices[j]);
                let k = hp.m(i, j)[0].0 as usize;
                assert_eq!(prod, ir.matrices[k]);
            }
        }
        let again = decompose(&hp, 99).unwrap();
        assert_eq!(again, dec);
    }
}
