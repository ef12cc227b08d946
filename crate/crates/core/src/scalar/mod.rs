//! Exact scalars: cyclotomic fields Q(ζ_N) and prime fields F_q.

mod cyc;
mod fp;
pub mod fpoly;
mod rat;

use std::fmt;

use thiserror::Error;

pub use cyc::{cyclotomic_poly, euler_phi, Cyc};
pub use fp::{fq_embed, is_prime, next_prime_1_mod, rat_to_i64, rational_reconstruct, Embedding, Fp};
pub use rat::Rat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("no element of order {n} in F_{q}: q is not 1 mod {n}")]
    NoEmbedding { n: u32, q: u64 },
    #[error("denominator divisible by {q}")]
    DenominatorDivisible { q: u64 },
    #[error("conductor {have} does not divide embedding conductor {want}")]
    ConductorMismatch { have: u32, want: u32 },
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Field operations shared by the exact and modular scalar types.
///
/// Elements know their field (conductor or modulus); `Ctx` carries it for
/// constructors.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(ctx: &Self::Ctx, v: i64) -> Self;
    fn from_rat(ctx: &Self::Ctx, r: &Rat) -> Result<Self, ScalarError>;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// JSON field descriptor, e.g. `{"type":"cyclotomic","conductor":8}`.
    fn descriptor(ctx: &Self::Ctx) -> serde_json::Value;
    fn parse(ctx: &Self::Ctx, s: &str) -> Result<Self, ScalarError>;
    /// The value as a rational, when it is one.
    fn as_rat(&self) -> Option<Rat>;
    /// Root-of-unity order an embedding into F_q must support.
    fn conductor_of(ctx: &Self::Ctx) -> u32;
    /// The characteristic, for prime fields.
    fn prime_of(ctx: &Self::Ctx) -> Option<u64>;
    fn reduce(&self, emb: &Embedding) -> Result<Fp, ScalarError>;
    /// Inverse of `reduce` on values of the form r·ζ^k with r of height
    /// at most `bound`, choosing the smallest height.
    fn lift(x: Fp, emb: &Embedding, ctx: &Self::Ctx, bound: u64) -> Option<Self>;

    fn div(&self, o: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&o.inv().ok_or(ScalarError::DivisionByZero)?))
    }

    fn add_assign(&mut self, o: &Self) {
        *self = self.add(o);
    }

    /// `self += a * b`
    fn mul_add(&mut self, a: &Self, b: &Self) {
        let p = a.mul(b);
        self.add_assign(&p);
    }
}

impl Field for Cyc {
    type Ctx = u32;

    fn ctx(&self) -> u32 {
        self.conductor()
    }
    fn zero(n: &u32) -> Cyc {
        Cyc::zero(*n)
    }
    fn one(n: &u32) -> Cyc {
        Cyc::one(*n)
    }
    fn from_i64(n: &u32, v: i64) -> Cyc {
        Cyc::int(*n, v)
    }
    fn from_rat(n: &u32, r: &Rat) -> Result<Cyc, ScalarError> {
        Ok(Cyc::rational(*n, r.clone()))
    }
    fn is_zero(&self) -> bool {
        Cyc::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Cyc::is_one(self)
    }
    fn add(&self, o: &Cyc) -> Cyc {
        Cyc::add(self, o)
    }
    fn sub(&self, o: &Cyc) -> Cyc {
        Cyc::sub(self, o)
    }
    fn mul(&self, o: &Cyc) -> Cyc {
        Cyc::mul(self, o)
    }
    fn neg(&self) -> Cyc {
        Cyc::neg(self)
    }
    fn inv(&self) -> Option<Cyc> {
        Cyc::inv(self)
    }
    fn descriptor(n: &u32) -> serde_json::Value {
        serde_json::json!({"type": "cyclotomic", "conductor": n})
    }
    fn parse(n: &u32, s: &str) -> Result<Cyc, ScalarError> {
        Cyc::parse(*n, s)
    }
    fn as_rat(&self) -> Option<Rat> {
        self.as_rational()
    }
    fn conductor_of(n: &u32) -> u32 {
        *n
    }
    fn prime_of(_: &u32) -> Option<u64> {
        None
    }
    fn reduce(&self, emb: &Embedding) -> Result<Fp, ScalarError> {
        emb.reduce(self)
    }
    fn lift(x: Fp, emb: &Embedding, n: &u32, bound: u64) -> Option<Cyc> {
        if x.v == 0 {
            return Some(Cyc::zero(*n));
        }
        let step = emb.n / *n;
        let mut best: Option<(u64, Cyc)> = None;
        for k in 0..*n as i64 {
            let y = x.mul(emb.zeta_pow(-k * step as i64));
            if let Some(r) = rational_reconstruct(y, bound) {
                let h = height(&r);
                if best.as_ref().is_none_or(|(b, _)| h < *b) {
                    best = Some((h, Cyc::zeta_pow(*n, k).scale(&r)));
                }
            }
        }
        best.map(|(_, c)| c)
    }
}

fn height(r: &Rat) -> u64 {
    use num_traits::ToPrimitive;
    r.numer().magnitude().max(&r.denom().magnitude()).to_u64().unwrap_or(u64::MAX)
}

/// Default working prime: the smallest q > 2^30 with q ≡ 1 (mod lcm(n, 120))
/// and q ∤ `dim`.
pub fn default_prime(n: u32, dim: u64) -> u64 {
    let m = num_integer::lcm(n as u64, 120);
    next_prime_1_mod(m, 1 << 30, dim)
}

impl Field for Fp {
    type Ctx = u64;

    fn ctx(&self) -> u64 {
        self.q
    }
    fn zero(q: &u64) -> Fp {
        Fp { v: 0, q: *q }
    }
    fn one(q: &u64) -> Fp {
        Fp { v: 1, q: *q }
    }
    fn from_i64(q: &u64, v: i64) -> Fp {
        Fp::new(v, *q)
    }
    fn from_rat(q: &u64, r: &Rat) -> Result<Fp, ScalarError> {
        Embedding::new(1, *q)?.rat(r)
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn is_one(&self) -> bool {
        self.v == 1
    }
    fn add(&self, o: &Fp) -> Fp {
        Fp::add(*self, *o)
    }
    fn sub(&self, o: &Fp) -> Fp {
        Fp::sub(*self, *o)
    }
    fn mul(&self, o: &Fp) -> Fp {
        Fp::mul(*self, *o)
    }
    fn neg(&self) -> Fp {
        Fp::neg(*self)
    }
    fn inv(&self) -> Option<Fp> {
        Fp::inv(*self)
    }
    fn descriptor(q: &u64) -> serde_json::Value {
        serde_json::json!({"type": "prime", "q": q})
    }
    fn parse(q: &u64, s: &str) -> Result<Fp, ScalarError> {
        let v: i64 = s.trim().parse().map_err(|_| ScalarError::Parse(format!("bad residue {s:?}")))?;
        Ok(Fp::new(v, *q))
    }
    fn as_rat(&self) -> Option<Rat> {
        None
    }
    fn conductor_of(_: &u64) -> u32 {
        1
    }
    fn prime_of(q: &u64) -> Option<u64> {
        Some(*q)
    }
    fn reduce(&self, emb: &Embedding) -> Result<Fp, ScalarError> {
        if emb.q != self.q {
            return Err(ScalarError::Parse(format!("residue mod {} used with F_{}", self.q, emb.q)));
        }
        Ok(*self)
    }
    fn lift(x: Fp, _: &Embedding, _: &u64, _: u64) -> Option<Fp> {
        Some(x)
    }
    fn add_assign(&mut self, o: &Fp) {
        *self = Fp::add(*self, *o);
    }
    fn mul_add(&mut self, a: &Fp, b: &Fp) {
        self.v = (self.v + a.v * b.v) % self.q;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyc_make_examples() {
        let z2 = Cyc::make(4, &[Rat::ZERO, Rat::ZERO, Rat::ONE]);
        assert_eq!(z2, Cyc::int(4, -1));
        let one = Rat::ONE;
        let s = Cyc::make(5, &[Rat::ZERO, one.clone(), one.clone(), one.clone(), one]);
        assert_eq!(s, Cyc::int(5, -1));
    }

    #[test]
    fn golden_ratio_in_q_zeta5() {
        let phi = Cyc::zeta_pow(5, 2).add(&Cyc::zeta_pow(5, 3)).neg();
        let lhs = phi.mul(&phi).sub(&phi).sub(&Cyc::one(5));
        assert!(lhs.is_zero());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Cyc::int(4, 2).inv().unwrap(), Cyc::rational(4, Rat::new(1, 2)));
        assert!(Cyc::zero(4).inv().is_none());
        let i = Cyc::zeta_pow(4, 1);
        assert!(i.mul(&i.inv().unwrap()).is_one());
    }

    #[test]
    fn reduce_examples() {
        let e = Embedding::new(4, 5).unwrap();
        assert_eq!(e.reduce(&Cyc::one(4)).unwrap().v, 1);
        assert_eq!(e.reduce(&Cyc::zeta_pow(4, 1)).unwrap().v, 2);
        let fifth = Cyc::rational(4, Rat::new(1, 5));
        assert_eq!(e.reduce(&fifth), Err(ScalarError::DenominatorDivisible { q: 5 }));
    }
}
