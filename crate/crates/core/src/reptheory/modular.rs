//! A Hopf algebra reduced mod q together with the block decompositions of
//! its dual (simple comodules) and of itself (simple modules).

use super::decompose::{decompose, Decomposition};
use super::RepError;
use crate::hopf::{reduce_mod, subalgebra_generated, working_embedding, HopfAlg, Subspace};
use crate::linalg::Echelon;
use crate::scalar::{Embedding, Field, Fp};

#[derive(Clone, Debug)]
pub struct ModularView {
    pub emb: Embedding,
    pub h: HopfAlg<Fp>,
    pub dual: HopfAlg<Fp>,
    /// Blocks of H*: one per simple comodule.
    pub comodules: Decomposition,
    pub seed: u64,
}

impl ModularView {
    pub fn new<F: Field>(h: &HopfAlg<F>, seed: u64) -> Result<ModularView, RepError> {
        let emb = working_embedding(h).map_err(|e| RepError::Hopf(e.to_string()))?;
        Self::with_embedding(h, emb, seed)
    }

    pub fn with_embedding<F: Field>(h: &HopfAlg<F>, emb: Embedding, seed: u64) -> Result<ModularView, RepError> {
        let hm = reduce_mod(h, &emb).map_err(|e| RepError::Hopf(e.to_string()))?;
        let dual = hm.dual();
        let comodules = decompose(&dual.algebra(), seed)?;
        Ok(ModularView { emb, h: hm, dual, comodules, seed })
    }

    pub fn q(&self) -> u64 {
        self.emb.q
    }

    pub fn coalgebra_type(&self) -> Vec<(usize, usize)> {
        self.comodules.type_multiset()
    }

    pub fn algebra_decomposition(&self) -> Result<Decomposition, RepError> {
        decompose(&self.h.algebra(), self.seed)
    }

    /// Character of the i-th simple comodule as an element of H.
    pub fn character(&self, i: usize) -> &[Fp] {
        &self.comodules.blocks[i].character
    }

    /// The simple subcoalgebra C ⊂ H of the i-th block E of H*: the span of
    /// the coordinate functions h_k with ⟨f, h_k⟩ = (f·E)_k.
    pub fn subcoalgebra(&self, i: usize) -> Subspace<Fp> {
        let e = &self.comodules.blocks[i].idempotent;
        let d = self.h.dim();
        let rows: Vec<Vec<Fp>> = (0..d).map(|j| self.dual.left_basis_mul(j, e)).collect();
        let q = self.q();
        let mut c: Echelon<Fp> = Echelon::new(q, d);
        let target = self.comodules.blocks[i].degree.pow(2);
        for k in 0..d {
            let col: Vec<Fp> = rows.iter().map(|r| r[k]).collect();
            if col.iter().any(|x| x.v != 0) {
                c.insert(col);
                if c.rank() == target {
                    break;
                }
            }
        }
        c
    }

    pub fn is_self_dual(&self, c: &Subspace<Fp>) -> bool {
        let s = Echelon::from_rows(self.q(), self.h.dim(), c.rows.iter().map(|r| self.h.antipode_vec(r)));
        s.same_span(c)
    }

    pub fn generates(&self, c: &Subspace<Fp>) -> bool {
        subalgebra_generated(&self.h, &c.rows).is_full()
    }
}
