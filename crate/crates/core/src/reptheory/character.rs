//! Types, simple characters and stabilizers G[χ].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ModularView, RepError};
use crate::hopf::{reduce_mod, HopfAlg};
use crate::scalar::{is_prime, Embedding, Field, Fp};

/// A multiset {(d_i, n_i)}: n_i simple objects of dimension d_i.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypeMultiset(pub Vec<(usize, usize)>);

impl TypeMultiset {
    /// Σ n_i d_i².
    pub fn total(&self) -> usize {
        self.0.iter().map(|(d, n)| d * d * n).sum()
    }

    pub fn count_of(&self, degree: usize) -> usize {
        self.0.iter().find(|(d, _)| *d == degree).map_or(0, |(_, n)| *n)
    }

    pub fn max_degree(&self) -> usize {
        self.0.iter().map(|(d, _)| *d).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.0.iter().flat_map(|(d, n)| std::iter::repeat_n(*d, *n)).collect()
    }
}

impl fmt::Display for TypeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(d, n)| format!("{d}, {n}")).collect();
        write!(f, "({})", parts.join("; "))
    }
}

impl FromStr for TypeMultiset {
    type Err = RepError;

    /// Accepts "(1, 8; 2, 10)" and the compact "(1,8;2,10)".
    fn from_str(s: &str) -> Result<Self, RepError> {
        let bad = || RepError::Parse(s.to_string());
        let inner = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let mut out = Vec::new();
        for part in inner.split(';') {
            let (d, n) = part.split_once(',').ok_or_else(bad)?;
            out.push((d.trim().parse().map_err(|_| bad())?, n.trim().parse().map_err(|_| bad())?));
        }
        Ok(TypeMultiset(out))
    }
}

/// Reduction of H mod q, with the preconditions checked.
pub fn modularize(h: &HopfAlg<crate::scalar::Cyc>, q: u64) -> Result<HopfAlg<Fp>, RepError> {
    let n = h.conductor();
    if !is_prime(q) || q == 2 {
        return Err(RepError::Precondition(format!("{q} is not an odd prime")));
    }
    if (q - 1) % n as u64 != 0 {
        return Err(RepError::Precondition(format!("{q} is not 1 mod {n}")));
    }
    if h.dim() as u64 % q == 0 {
        return Err(RepError::BadPrime(q));
    }
    let emb = Embedding::new(n, q).map_err(|e| RepError::Precondition(e.to_string()))?;
    reduce_mod(h, &emb).map_err(|e| RepError::Precondition(e.to_string()))
}

pub fn coalgebra_type<F: Field>(h: &HopfAlg<F>, seed: u64) -> Result<TypeMultiset, RepError> {
    Ok(TypeMultiset(ModularView::new(h, seed)?.coalgebra_type()))
}

pub fn algebra_type<F: Field>(h: &HopfAlg<F>, seed: u64) -> Result<TypeMultiset, RepError> {
    Ok(TypeMultiset(ModularView::new(h, seed)?.algebra_decomposition()?.type_multiset()))
}

/// An irreducible character of a simple comodule, as an element of H mod q.
#[derive(Clone, Debug, PartialEq)]
pub struct Character {
    pub degree: usize,
    pub coords: Vec<Fp>,
    /// Index of the block of H* it comes from.
    pub block: usize,
}

pub fn simple_characters(view: &ModularView) -> Vec<Character> {
    view.comodules.blocks.iter().enumerate().map(|(i, b)| Character { degree: b.degree, coords: b.character.clone(), block: i }).collect()
}

/// G[χ] = {g ∈ G(H) : gχ = χ}, as indices into `grouplikes`.
pub fn stabilizer_g_chi(h: &HopfAlg<Fp>, grouplikes: &[Vec<Fp>], chi: &[Fp]) -> Vec<usize> {
    grouplikes.iter().enumerate().filter(|(_, g)| h.mul(g, chi) == chi).map(|(i, _)| i).collect()
}
