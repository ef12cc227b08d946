//! Prime fields F_q, the embedding ζ_N ↦ w, and reduction/lifting helpers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::cyc::Cyc;
use super::rat::Rat;
use super::ScalarError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    pub v: u64,
    pub q: u64,
}

impl Fp {
    pub fn new(v: i64, q: u64) -> Fp {
        Fp { v: v.rem_euclid(q as i64) as u64, q }
    }

    pub fn add(self, o: Fp) -> Fp {
        let s = self.v + o.v;
        Fp { v: if s >= self.q { s - self.q } else { s }, q: self.q }
    }

    pub fn sub(self, o: Fp) -> Fp {
        Fp { v: if self.v >= o.v { self.v - o.v } else { self.v + self.q - o.v }, q: self.q }
    }

    pub fn neg(self) -> Fp {
        Fp { v: if self.v == 0 { 0 } else { self.q - self.v }, q: self.q }
    }

    pub fn mul(self, o: Fp) -> Fp {
        Fp { v: self.v * o.v % self.q, q: self.q }
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut b = self;
        let mut acc = Fp { v: 1 % self.q, q: self.q };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(b);
            }
            b = b.mul(b);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Option<Fp> {
        if self.v == 0 {
            None
        } else {
            Some(self.pow(self.q - 2))
        }
    }

    /// Symmetric lift to (−q/2, q/2].
    pub fn signed(self) -> i64 {
        if self.v > self.q / 2 {
            self.v as i64 - self.q as i64
        } else {
            self.v as i64
        }
    }

    /// A square root, if one exists (Tonelli–Shanks).
    pub fn sqrt(self) -> Option<Fp> {
        let q = self.q;
        if self.v == 0 {
            return Some(self);
        }
        if self.pow((q - 1) / 2).v != 1 {
            return None;
        }
        let (mut s, mut t) = (0u32, q - 1);
        while t % 2 == 0 {
            t /= 2;
            s += 1;
        }
        let z = (2..q).map(|z| Fp { v: z, q }).find(|z| z.pow((q - 1) / 2).v == q - 1)?;
        let mut m = s;
        let mut c = z.pow(t);
        let mut x = self.pow(t.div_ceil(2));
        let mut b = self.pow(t);
        while b.v != 1 {
            let mut i = 0;
            let mut bb = b;
            while bb.v != 1 {
                bb = bb.mul(bb);
                i += 1;
            }
            let mut f = c;
            for _ in 0..(m - i - 1) {
                f = f.mul(f);
            }
            x = x.mul(f);
            c = f.mul(f);
            b = b.mul(c);
            m = i;
        }
        Some(x)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// r^{(q−1)/N} for r the smallest primitive root mod q: an element of exact order N.
pub fn fq_embed(n: u32, q: u64) -> Result<Fp, ScalarError> {
    if !is_prime(q) {
        return Err(ScalarError::NotPrime(q));
    }
    if (q - 1) % n as u64 != 0 {
        return Err(ScalarError::NoEmbedding { n, q });
    }
    let ps = prime_factors(q - 1);
    let r = (2..q)
        .map(|v| Fp { v, q })
        .find(|r| ps.iter().all(|p| r.pow((q - 1) / p).v != 1))
        .ok_or(ScalarError::NoEmbedding { n, q })?;
    Ok(r.pow((q - 1) / n as u64))
}

/// Ring map Q(ζ_N) → F_q determined by ζ_N ↦ w.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub n: u32,
    pub q: u64,
    pub w: Fp,
    powers: Vec<Fp>,
}

impl Embedding {
    pub fn new(n: u32, q: u64) -> Result<Embedding, ScalarError> {
        let w = fq_embed(n, q)?;
        let powers = (0..n as u64).map(|k| w.pow(k)).collect();
        Ok(Embedding { n, q, w, powers })
    }

    pub fn rat(&self, r: &Rat) -> Result<Fp, ScalarError> {
        let q = self.q;
        let (num, den) = match r {
            Rat::Small(n, d) => (Fp::new(n.rem_euclid(q as i64), q), Fp::new(d.rem_euclid(q as i64), q)),
            Rat::Big(_) => {
                let qb = BigInt::from(q);
                let f = |x: BigInt| Fp { v: x.mod_floor(&qb).to_u64().unwrap(), q };
                (f(r.numer()), f(r.denom()))
            }
        };
        let inv = den.inv().ok_or(ScalarError::DenominatorDivisible { q })?;
        Ok(num.mul(inv))
    }

    pub fn reduce(&self, a: &Cyc) -> Result<Fp, ScalarError> {
        let step = if a.conductor() == self.n {
            1
        } else if self.n % a.conductor() == 0 {
            self.n / a.conductor()
        } else {
            return Err(ScalarError::ConductorMismatch { have: a.conductor(), want: self.n });
        };
        let mut acc = Fp { v: 0, q: self.q };
        for (e, c) in a.terms() {
            let k = (e * step) as usize % self.n as usize;
            acc = acc.add(self.rat(c)?.mul(self.powers[k]));
        }
        Ok(acc)
    }

    pub fn zeta_pow(&self, k: i64) -> Fp {
        self.powers[k.rem_euclid(self.n as i64) as usize]
    }
}

/// Rational reconstruction: the fraction u/v ≡ a (mod q) with |u|, v ≤ bound.
pub fn rational_reconstruct(a: Fp, bound: u64) -> Option<Rat> {
    let q = a.q as i128;
    let (mut r0, mut r1) = (q, a.v as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 as u128 > bound as u128 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (t0, t1) = (t1, t0 - k * t1);
    }
    if t1 == 0 || t1.unsigned_abs() > bound as u128 {
        return None;
    }
    let (u, v) = (r1 as i64, t1 as i64);
    let back = Fp::new(u, a.q).mul(Fp::new(v, a.q).inv()?);
    (back == a).then(|| Rat::new(u, v))
}

/// Smallest prime q > `floor` with q ≡ 1 (mod m) and q ∤ `avoid`.
pub fn next_prime_1_mod(m: u64, floor: u64, avoid: u64) -> u64 {
    let mut q = floor / m * m + 1;
    while q <= floor {
        q += m;
    }
    loop {
        if is_prime(q) && (avoid == 0 || avoid % q != 0) {
            return q;
        }
        q += m;
    }
}

/// Exact integer value of a rational, if it is one and fits.
pub fn rat_to_i64(r: &Rat) -> Option<i64> {
    if !r.is_integer() {
        return None;
    }
    r.numer().to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embed_examples() {
        assert_eq!(fq_embed(4, 5).unwrap().v, 2);
        assert_eq!(fq_embed(1, 7).unwrap().v, 1);
        assert!(fq_embed(4, 7).is_err());
    }

    #[test]
    fn sqrt_mod() {
        let q = 1_048_681;
        for v in [2u64, 3, 5, 10, 12345] {
            let a = Fp { v, q };
            if let Some(r) = a.sqrt() {
                assert_eq!(r.mul(r), a);
            }
        }
        assert_eq!(Fp { v: 4, q: 13 }.sqrt().map(|r| r.mul(r).v), Some(4));
    }

    #[test]
    fn reconstruct_small_fractions() {
        let q = 1_048_681;
        let e = Embedding::new(1, q).unwrap();
        for r in [Rat::new(-3, 7), Rat::new(1, 2), Rat::int(-5), Rat::ZERO] {
            let a = e.rat(&r).unwrap();
            assert_eq!(rational_reconstruct(a, 700).unwrap(), r);
        }
    }

    #[test]
    fn prime_search() {
        let q = next_prime_1_mod(120, 1 << 20, 120);
        assert!(q > 1 << 20 && q % 120 == 1 && is_prime(q));
    }
}
