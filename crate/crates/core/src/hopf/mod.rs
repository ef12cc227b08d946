//! Finite-dimensional Hopf algebras as sparse structure-constant tensors.

mod algebra;
mod group;
mod structure;
mod verify;

use std::collections::BTreeMap;

use serde_json::{json, Value};
use thiserror::Error;

use crate::scalar::{Cyc, Embedding, Field, Fp, ScalarError};

pub use algebra::Algebra;
pub use group::{function_algebra, group_algebra};
pub use structure::*;
pub use verify::{verify_axioms, AxiomReport};

#[derive(Debug, Error)]
pub enum HopfError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("malformed Hopf algebra: {0}")]
    Shape(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("integral: {0}")]
    Integral(String),
    #[error("not commutative")]
    NotCommutative,
    #[error("quotient is not spanned by grouplikes")]
    QuotientNotGroup,
    #[error("not a coalgebra map")]
    NotCoalgebraMap,
    #[error("decomposition failed: {0}")]
    Decomposition(String),
    #[error("{0}")]
    Other(String),
}

/// Product, coproduct, unit, counit and antipode in a fixed basis.
///
/// `mult[i*d + j]` lists (k, c) with e_i e_j = Σ c e_k; `comult[i]` lists
/// (j, k, c) with Δ(e_i) = Σ c e_j ⊗ e_k; `antipode[i]` lists (j, c) with
/// S(e_i) = Σ c e_j. No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfAlg<F: Field> {
    pub ctx: F::Ctx,
    pub basis: Vec<String>,
    pub mult: Vec<Vec<(u32, F)>>,
    pub comult: Vec<Vec<(u32, u32, F)>>,
    pub unit: Vec<F>,
    pub counit: Vec<F>,
    pub antipode: Vec<Vec<(u32, F)>>,
    pub provenance: Option<Value>,
}

/// Sums duplicate keys and drops zeros.
pub(crate) fn compact<K: Ord + Copy, F: Field>(items: impl IntoIterator<Item = (K, F)>) -> Vec<(K, F)> {
    let mut m: BTreeMap<K, F> = BTreeMap::new();
    for (k, v) in items {
        match m.get_mut(&k) {
            Some(x) => x.add_assign(&v),
            None => {
                m.insert(k, v);
            }
        }
    }
    m.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl<F: Field> HopfAlg<F> {
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
        algebra::sparse_mul(&self.ctx, &self.mult, self.dim(), a, b)
    }

    /// Δ(a) as a dense d×d matrix (row = left tensor factor).
    pub fn comul(&self, a: &[F]) -> Vec<Vec<F>> {
        let mut out = vec![self.zero_vec(); self.dim()];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                out[*j as usize][*k as usize].mul_add(ai, c);
            }
        }
        out
    }

    pub fn antipode_vec(&self, a: &[F]) -> Vec<F> {
        let mut out = self.zero_vec();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, c) in &self.antipode[i] {
                out[*j as usize].mul_add(ai, c);
            }
        }
        out
    }

    pub fn counit_of(&self, a: &[F]) -> F {
        let mut acc = F::zero(&self.ctx);
        for (x, e) in a.iter().zip(&self.counit) {
            if !x.is_zero() && !e.is_zero() {
                acc.mul_add(x, e);
            }
        }
        acc
    }

    pub fn unit_vec(&self) -> Vec<F> {
        self.unit.clone()
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (i + 1..d).all(|j| self.m(i, j) == self.m(j, i)))
    }

    pub fn is_cocommutative(&self) -> bool {
        self.comult.iter().all(|terms| {
            let flipped = compact(terms.iter().map(|(a, b, c)| ((*b, *a), c.clone())));
            let orig = compact(terms.iter().map(|(a, b, c)| ((*a, *b), c.clone())));
            flipped == orig
        })
    }

    /// Structure constants of the dual Hopf algebra in the dual basis.
    pub fn dual(&self) -> HopfAlg<F> {
        let d = self.dim();
        let mut mult = vec![Vec::new(); d * d];
        for (k, terms) in self.comult.iter().enumerate() {
            for (i, j, c) in terms {
                mult[*i as usize * d + *j as usize].push((k as u32, c.clone()));
            }
        }
        for v in mult.iter_mut() {
            v.sort_by_key(|(k, _)| *k);
        }
        let mut comult = vec![Vec::new(); d];
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.m(i, j) {
                    comult[*k as usize].push((i as u32, j as u32, c.clone()));
                }
            }
        }
        let mut antipode = vec![Vec::new(); d];
        for (i, terms) in self.antipode.iter().enumerate() {
            for (j, c) in terms {
                antipode[*j as usize].push((i as u32, c.clone()));
            }
        }
        HopfAlg {
            ctx: self.ctx.clone(),
            basis: self.basis.iter().map(|b| dual_label(b)).collect(),
            mult,
            comult,
            unit: self.counit.clone(),
            counit: self.unit.clone(),
            antipode,
            provenance: self.provenance.as_ref().map(|p| json!({"dual_of": p})),
        }
    }

    /// Applies a coefficient map to every tensor entry.
    pub fn map_scalars<G: Field>(&self, ctx: G::Ctx, f: impl Fn(&F) -> Result<G, ScalarError>) -> Result<HopfAlg<G>, ScalarError> {
        let mult = self
            .mult
            .iter()
            .map(|t| t.iter().map(|(k, c)| Ok((*k, f(c)?))).filter(|r| !matches!(r, Ok((_, x)) if x.is_zero())).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        let comult = self
            .comult
            .iter()
            .map(|t| t.iter().map(|(a, b, c)| Ok((*a, *b, f(c)?))).filter(|r| !matches!(r, Ok((_, _, x)) if x.is_zero())).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        let antipode = self
            .antipode
            .iter()
            .map(|t| t.iter().map(|(k, c)| Ok((*k, f(c)?))).filter(|r| !matches!(r, Ok((_, x)) if x.is_zero())).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        Ok(HopfAlg {
            ctx,
            basis: self.basis.clone(),
            mult,
            comult,
            unit: self.unit.iter().map(&f).collect::<Result<_, _>>()?,
            counit: self.counit.iter().map(&f).collect::<Result<_, _>>()?,
            antipode,
            provenance: self.provenance.clone(),
        })
    }

    pub fn to_json(&self) -> Value {
        let s = |c: &F| c.to_string();
        let mut mult = Vec::new();
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.m(i, j) {
                    mult.push(json!([i, j, k, s(c)]));
                }
            }
        }
        let comult: Vec<Value> = self
            .comult
            .iter()
            .enumerate()
            .flat_map(|(i, t)| t.iter().map(move |(a, b, c)| json!([i, a, b, c.to_string()])))
            .collect();
        let antipode: Vec<Value> = self
            .antipode
            .iter()
            .enumerate()
            .flat_map(|(i, t)| t.iter().map(move |(j, c)| json!([i, j, c.to_string()])))
            .collect();
        let mut v = json!({
            "dim": d,
            "field": F::descriptor(&self.ctx),
            "basis": self.basis,
            "mult": mult,
            "comult": comult,
            "unit": self.unit.iter().map(s).collect::<Vec<_>>(),
            "counit": self.counit.iter().map(s).collect::<Vec<_>>(),
            "antipode": antipode,
        });
        if let Some(p) = &self.provenance {
            v["provenance"] = p.clone();
        }
        v
    }

    /// Parses the JSON schema, validating shape (not axioms).
    pub fn from_json_with(v: &Value, ctx: F::Ctx) -> Result<HopfAlg<F>, HopfError> {
        let bad = |m: &str| HopfError::Shape(m.to_string());
        let d = v["dim"].as_u64().ok_or_else(|| bad("missing dim"))? as usize;
        let basis: Vec<String> = match v.get("basis") {
            Some(b) => serde_json::from_value(b.clone())?,
            None => (0..d).map(|i| format!("e{i}")).collect(),
        };
        if basis.len() != d {
            return Err(bad("basis length differs from dim"));
        }
        let scalar = |x: &Value| -> Result<F, HopfError> {
            let s = x.as_str().ok_or_else(|| bad("coefficients must be strings"))?;
            Ok(F::parse(&ctx, s)?)
        };
        let idx = |x: &Value| -> Result<u32, HopfError> {
            let i = x.as_u64().ok_or_else(|| bad("index must be a non-negative integer"))? as usize;
            if i >= d {
                return Err(HopfError::Shape(format!("index {i} out of range")));
            }
            Ok(i as u32)
        };
        let arr = |key: &str| -> Result<&Vec<Value>, HopfError> { v[key].as_array().ok_or_else(|| HopfError::Shape(format!("missing {key}"))) };
        let mut mult: Vec<Vec<(u32, F)>> = vec![Vec::new(); d * d];
        for e in arr("mult")? {
            let e = e.as_array().filter(|e| e.len() == 4).ok_or_else(|| bad("mult entries are [i,j,k,c]"))?;
            let (i, j, k) = (idx(&e[0])?, idx(&e[1])?, idx(&e[2])?);
            mult[i as usize * d + j as usize].push((k, scalar(&e[3])?));
        }
        let mut comult: Vec<Vec<(u32, u32, F)>> = vec![Vec::new(); d];
        for e in arr("comult")? {
            let e = e.as_array().filter(|e| e.len() == 4).ok_or_else(|| bad("comult entries are [i,j,k,c]"))?;
            let (i, j, k) = (idx(&e[0])?, idx(&e[1])?, idx(&e[2])?);
            comult[i as usize].push((j, k, scalar(&e[3])?));
        }
        let mut antipode: Vec<Vec<(u32, F)>> = vec![Vec::new(); d];
        for e in arr("antipode")? {
            let e = e.as_array().filter(|e| e.len() == 3).ok_or_else(|| bad("antipode entries are [i,j,c]"))?;
            let (i, j) = (idx(&e[0])?, idx(&e[1])?);
            antipode[i as usize].push((j, scalar(&e[2])?));
        }
        let vecf = |key: &str| -> Result<Vec<F>, HopfError> {
            let a = arr(key)?;
            if a.len() != d {
                return Err(HopfError::Shape(format!("{key} has wrong length")));
            }
            a.iter().map(scalar).collect()
        };
        let mult = mult.into_iter().map(|t| compact(t.into_iter())).collect();
        let comult = comult
            .into_iter()
            .map(|t| compact(t.into_iter().map(|(a, b, c)| ((a, b), c))).into_iter().map(|((a, b), c)| (a, b, c)).collect())
            .collect();
        let antipode = antipode.into_iter().map(|t| compact(t.into_iter())).collect();
        Ok(HopfAlg {
            ctx: ctx.clone(),
            basis,
            mult,
            comult,
            unit: vecf("unit")?,
            counit: vecf("counit")?,
            antipode,
            provenance: v.get("provenance").cloned(),
        })
    }
}

fn dual_label(b: &str) -> String {
    match b.strip_suffix('*') {
        Some(x) => x.to_string(),
        None => format!("{b}*"),
    }
}

impl HopfAlg<Cyc> {
    pub fn conductor(&self) -> u32 {
        self.ctx
    }

    pub fn from_json(v: &Value) -> Result<HopfAlg<Cyc>, HopfError> {
        let f = &v["field"];
        if f["type"] != "cyclotomic" {
            return Err(HopfError::Shape("expected a cyclotomic field descriptor".into()));
        }
        let n = f["conductor"].as_u64().ok_or_else(|| HopfError::Shape("missing conductor".into()))? as u32;
        HopfAlg::from_json_with(v, n)
    }

    /// Homomorphic image over F_q.
    pub fn modularize(&self, emb: &Embedding) -> Result<HopfAlg<Fp>, HopfError> {
        if self.dim() as u64 % emb.q == 0 {
            return Err(HopfError::Scalar(ScalarError::DenominatorDivisible { q: emb.q }));
        }
        Ok(self.map_scalars(emb.q, |c| emb.reduce(c))?)
    }

    /// Re-expresses all constants over Q(ζ_m), m a multiple of the conductor.
    pub fn lift_conductor(&self, m: u32) -> HopfAlg<Cyc> {
        self.map_scalars(m, |c| Ok(c.lift_to(m))).expect("lifting is total")
    }

    /// Common denominator of all structure constants, if all are rational.
    pub fn rational_denominator(&self) -> Option<num_bigint::BigInt> {
        let mut den = num_bigint::BigInt::from(1);
        let mut take = |c: &Cyc| -> Option<()> {
            let r = c.as_rational()?;
            den = num_integer::Integer::lcm(&den, &r.denom());
            Some(())
        };
        for t in &self.mult {
            for (_, c) in t {
                take(c)?;
            }
        }
        for t in &self.comult {
            for (_, _, c) in t {
                take(c)?;
            }
        }
        for t in &self.antipode {
            for (_, c) in t {
                take(c)?;
            }
        }
        for c in self.unit.iter().chain(&self.counit) {
            take(c)?;
        }
        Some(den)
    }
}
