//! Dense polynomials over F_q and root finding.

use rand::RngExt;

use super::Fp;

/// Coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub q: u64,
    pub c: Vec<u64>,
}

impl Poly {
    pub fn new(q: u64, mut c: Vec<u64>) -> Poly {
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly { q, c }
    }

    pub fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    fn f(&self, v: u64) -> Fp {
        Fp { v, q: self.q }
    }

    pub fn monic(&self) -> Poly {
        let lead = self.f(*self.c.last().expect("zero polynomial"));
        let inv = lead.inv().unwrap();
        Poly::new(self.q, self.c.iter().map(|&x| self.f(x).mul(inv).v).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| {
                let a = self.f(*self.c.get(i).unwrap_or(&0));
                let b = self.f(*o.c.get(i).unwrap_or(&0));
                a.sub(b).v
            })
            .collect();
        Poly::new(self.q, c)
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.c.is_empty() || o.c.is_empty() {
            return Poly::new(self.q, vec![]);
        }
        let mut c = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in o.c.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % self.q;
            }
        }
        Poly::new(self.q, c)
    }

    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.deg().expect("division by zero polynomial");
        let inv = self.f(d.c[dd]).inv().unwrap();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Poly::new(self.q, vec![]), self.clone());
        }
        let mut quo = vec![0u64; r.len() - dd];
        for i in (0..quo.len()).rev() {
            let k = self.f(r[i + dd]).mul(inv);
            quo[i] = k.v;
            if k.v != 0 {
                for (j, &dj) in d.c.iter().enumerate() {
                    r[i + j] = self.f(r[i + j]).sub(k.mul(self.f(dj))).v;
                }
            }
        }
        r.truncate(dd);
        (Poly::new(self.q, quo), Poly::new(self.q, r))
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while b.deg().is_some() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        if a.deg().is_some() {
            a.monic()
        } else {
            a
        }
    }

    /// self^e mod m.
    pub fn powmod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.divrem(m).1;
        let mut acc = Poly::new(self.q, vec![1]).divrem(m).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).divrem(m).1;
            }
            base = base.mul(&base).divrem(m).1;
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: Fp) -> Fp {
        let mut acc = self.f(0);
        for &c in self.c.iter().rev() {
            acc = acc.mul(x).add(self.f(c));
        }
        acc
    }

    pub fn x(q: u64) -> Poly {
        Poly::new(q, vec![0, 1])
    }

    /// Distinct roots in F_q, sorted.
    pub fn roots<R: rand::Rng>(&self, rng: &mut R) -> Vec<u64> {
        let q = self.q;
        if self.deg().unwrap_or(0) == 0 {
            return vec![];
        }
        let m = self.monic();
        // product of the distinct linear factors
        let xq = Poly::x(q).powmod(q, &m);
        let mut lin = m.gcd(&xq.sub(&Poly::x(q)));
        let mut out = Vec::new();
        if lin.c.first() == Some(&0) && lin.deg().unwrap_or(0) >= 1 {
            out.push(0);
            lin = lin.divrem(&Poly::x(q)).0;
        }
        split_linear(&lin, rng, &mut out);
        out.sort_unstable();
        out
    }
}

fn split_linear<R: rand::Rng>(f: &Poly, rng: &mut R, out: &mut Vec<u64>) {
    let q = f.q;
    match f.deg() {
        None | Some(0) => {}
        Some(1) => out.push(Fp { v: f.c[0], q }.neg().mul(Fp { v: f.c[1], q }.inv().unwrap()).v),
        Some(d) => loop {
            let a = rng.random_range(0..q);
            let shifted = Poly::new(q, vec![a, 1]);
            let h = shifted.powmod((q - 1) / 2, f).sub(&Poly::new(q, vec![1]));
            let g = f.gcd(&h);
            if let Some(gd) = g.deg() {
                if gd > 0 && gd < d {
                    let rest = f.divrem(&g).0;
                    split_linear(&g, rng, out);
                    split_linear(&rest, rng, out);
                    return;
                }
            }
        },
    }
}
