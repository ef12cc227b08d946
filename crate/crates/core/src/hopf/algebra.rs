//! Associative unital algebras given by structure constants.

use super::{compact, HopfAlg};
use crate::scalar::{Field, ScalarError};

/// Product and unit only; `mult[i*d + j]` lists (k, c) with e_i e_j = Σ c e_k.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra<F: Field> {
    pub ctx: F::Ctx,
    pub basis: Vec<String>,
    pub mult: Vec<Vec<(u32, F)>>,
    pub unit: Vec<F>,
}

pub(crate) fn sparse_mul<F: Field>(ctx: &F::Ctx, mult: &[Vec<(u32, F)>], d: usize, a: &[F], b: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(ctx); d];
    let nb: Vec<usize> = (0..b.len()).filter(|&j| !b[j].is_zero()).collect();
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for &j in &nb {
            let c = ai.mul(&b[j]);
            for (k, x) in &mult[i * d + j] {
                out[*k as usize].mul_add(&c, x);
            }
        }
    }
    out
}

impl<F: Field> Algebra<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn zero_vec(&self) -> Vec<F> {
        vec![F::zero(&self.ctx); self.dim()]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<F> {
        let mut v = self.zero_vec();
        v[i] = F::one(&self.ctx);
        v
    }

    #[inline]
    pub fn m(&self, i: usize, j: usize) -> &[(u32, F)] {
        &self.mult[i * self.dim() + j]
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vec<F> {
        sparse_mul(&self.ctx, &self.mult, self.dim(), a, b)
    }

    pub fn unit_vec(&self) -> Vec<F> {
        self.unit.clone()
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (i + 1..d).all(|j| self.m(i, j) == self.m(j, i)))
    }

    /// Associativity and the unit law on basis elements.
    pub fn is_associative_unital(&self) -> bool {
        let d = self.dim();
        let basis: Vec<Vec<F>> = (0..d).map(|i| self.basis_vec(i)).collect();
        let unit_ok = basis.iter().all(|e| self.mul(&self.unit, e) == *e && self.mul(e, &self.unit) == *e);
        unit_ok
            && (0..d).all(|i| {
                (0..d).all(|j| {
                    let ij = self.mul(&basis[i], &basis[j]);
                    (0..d).all(|k| self.mul(&ij, &basis[k]) == self.mul(&basis[i], &self.mul(&basis[j], &basis[k])))
                })
            })
    }

    pub fn map_scalars<G: Field>(&self, ctx: G::Ctx, f: impl Fn(&F) -> Result<G, ScalarError>) -> Result<Algebra<G>, ScalarError> {
        let mult = self
            .mult
            .iter()
            .map(|t| Ok(compact(t.iter().map(|(k, c)| Ok::<_, ScalarError>((*k, f(c)?))).collect::<Result<Vec<_>, _>>()?)))
            .collect::<Result<Vec<_>, ScalarError>>()?;
        let unit = self.unit.iter().map(&f).collect::<Result<Vec<_>, _>>()?;
        Ok(Algebra { ctx, basis: self.basis.clone(), mult, unit })
    }
}

impl<F: Field> HopfAlg<F> {
    /// The underlying algebra.
    pub fn algebra(&self) -> Algebra<F> {
        Algebra { ctx: self.ctx.clone(), basis: self.basis.clone(), mult: self.mult.clone(), unit: self.unit.clone() }
    }
}
