//! The cyclotomic field Q(ζ_N) in the power basis modulo Φ_N.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use smallvec::SmallVec;

use super::rat::Rat;
use super::ScalarError;

/// Integer polynomial with `coeffs[i]` the coefficient of x^i.
type IPoly = Vec<i64>;

fn poly_divexact(num: &IPoly, den: &IPoly) -> IPoly {
    let mut rem = num.clone();
    let dd = den.len() - 1;
    let lead = *den.last().unwrap();
    let mut q = vec![0i64; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd] / lead;
        q[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

/// Coefficients of the N-th cyclotomic polynomial.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    let mut p: IPoly = vec![0; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = poly_divexact(&p, &cyclotomic_poly(d));
        }
    }
    p
}

pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count() as u32
}

/// ζ^k in the power basis, for 0 ≤ k < N.
pub(crate) struct Table {
    pub phi: u32,
    pub powers: Vec<Vec<(u32, i64)>>,
}

impl Table {
    fn new(n: u32) -> Table {
        let phi = euler_phi(n) as usize;
        let cp = cyclotomic_poly(n);
        let mut powers = Vec::with_capacity(n as usize);
        let mut v = vec![0i64; phi];
        v[0] = 1;
        for _ in 0..n {
            powers.push(
                v.iter()
                    .enumerate()
                    .filter(|(_, c)| **c != 0)
                    .map(|(i, c)| (i as u32, *c))
                    .collect(),
            );
            // multiply by x and reduce by the monic Φ_N
            let top = v[phi - 1];
            for i in (1..phi).rev() {
                v[i] = v[i - 1];
            }
            v[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    v[i] -= top * cp[i];
                }
            }
        }
        Table { phi: phi as u32, powers }
    }
}

thread_local! {
    static TABLES: RefCell<HashMap<u32, Rc<Table>>> = RefCell::new(HashMap::new());
}

pub(crate) fn table(n: u32) -> Rc<Table> {
    TABLES.with(|t| {
        t.borrow_mut()
            .entry(n)
            .or_insert_with(|| Rc::new(Table::new(n)))
            .clone()
    })
}

type Terms = SmallVec<[(u32, Rat); 1]>;

/// Element of Q(ζ_N): sparse coefficients over 1, ζ, …, ζ^{φ(N)−1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyc {
    n: u32,
    /// Sorted by exponent, no zero coefficients, exponents < φ(N).
    terms: Terms,
}

impl Cyc {
    pub fn zero(n: u32) -> Cyc {
        assert!(n >= 1, "conductor must be positive");
        Cyc { n, terms: SmallVec::new() }
    }

    pub fn rational(n: u32, r: Rat) -> Cyc {
        let mut c = Cyc::zero(n);
        if !r.is_zero() {
            c.terms.push((0, r));
        }
        c
    }

    pub fn int(n: u32, v: i64) -> Cyc {
        Cyc::rational(n, Rat::int(v))
    }

    pub fn one(n: u32) -> Cyc {
        Cyc::int(n, 1)
    }

    /// ζ_N^k for any integer k.
    pub fn zeta_pow(n: u32, k: i64) -> Cyc {
        let k = k.rem_euclid(n as i64) as usize;
        let t = table(n);
        Cyc {
            n,
            terms: t.powers[k].iter().map(|&(e, c)| (e, Rat::int(c))).collect(),
        }
    }

    /// Reduction of Σ poly[i] ζ^i modulo Φ_N.
    pub fn make(n: u32, poly: &[Rat]) -> Cyc {
        let mut acc = Cyc::zero(n);
        for (i, c) in poly.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&Cyc::zeta_pow(n, i as i64).scale(c));
            }
        }
        acc
    }

    /// Builds from power-basis coefficients, which must already be reduced.
    pub fn from_coeffs(n: u32, coeffs: &[Rat]) -> Result<Cyc, ScalarError> {
        let phi = euler_phi(n) as usize;
        if coeffs.len() > phi && coeffs[phi..].iter().any(|c| !c.is_zero()) {
            return Err(ScalarError::Parse(format!(
                "coefficient beyond degree {} for conductor {n}",
                phi - 1
            )));
        }
        Ok(Cyc {
            n,
            terms: coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as u32, c.clone()))
                .collect(),
        })
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// Dense power-basis coefficients of length φ(N).
    pub fn coeffs(&self) -> Vec<Rat> {
        let mut v = vec![Rat::ZERO; euler_phi(self.n) as usize];
        for (e, c) in &self.terms {
            v[*e as usize] = c.clone();
        }
        v
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rat)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn as_rational(&self) -> Option<Rat> {
        match self.terms.as_slice() {
            [] => Some(Rat::ZERO),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn scale(&self, r: &Rat) -> Cyc {
        if r.is_zero() {
            return Cyc::zero(self.n);
        }
        Cyc {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (*e, c.mul(r))).collect(),
        }
    }

    /// Re-expresses the element in Q(ζ_m) for a multiple m of the conductor.
    pub fn lift_to(&self, m: u32) -> Cyc {
        if m == self.n {
            return self.clone();
        }
        assert!(m % self.n == 0, "conductor {m} is not a multiple of {}", self.n);
        let step = (m / self.n) as i64;
        let mut acc = Cyc::zero(m);
        for (e, c) in &self.terms {
            acc = acc.add(&Cyc::zeta_pow(m, *e as i64 * step).scale(c));
        }
        acc
    }

    fn coerce<'a>(a: &'a Cyc, b: &'a Cyc) -> Option<(Cyc, Cyc)> {
        if a.n == b.n {
            return None;
        }
        let l = num_integer::lcm(a.n, b.n);
        Some((a.lift_to(l), b.lift_to(l)))
    }

    pub fn add(&self, o: &Cyc) -> Cyc {
        if let Some((a, b)) = Self::coerce(self, o) {
            return a.add(&b);
        }
        if o.terms.is_empty() {
            return self.clone();
        }
        if self.terms.is_empty() {
            return o.clone();
        }
        let mut terms = Terms::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &o.terms);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                terms.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                terms.push(b[j].clone());
                j += 1;
            } else {
                let s = a[i].1.add(&b[j].1);
                if !s.is_zero() {
                    terms.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
        Cyc { n: self.n, terms }
    }

    pub fn neg(&self) -> Cyc {
        Cyc {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &Cyc) -> Cyc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Cyc) -> Cyc {
        if let Some((a, b)) = Self::coerce(self, o) {
            return a.mul(&b);
        }
        if self.terms.is_empty() || o.terms.is_empty() {
            return Cyc::zero(self.n);
        }
        if let Some(r) = self.as_rational() {
            return o.scale(&r);
        }
        if let Some(r) = o.as_rational() {
            return self.scale(&r);
        }
        let t = table(self.n);
        let mut acc = vec![Rat::ZERO; t.phi as usize];
        for (i, a) in &self.terms {
            for (j, b) in &o.terms {
                let k = ((i + j) % self.n) as usize;
                let c = a.mul(b);
                if (k as u32) < t.phi {
                    acc[k] = acc[k].add(&c);
                } else {
                    for &(l, m) in &t.powers[k] {
                        acc[l as usize] = acc[l as usize].add(&c.mul(&Rat::int(m)));
                    }
                }
            }
        }
        Cyc {
            n: self.n,
            terms: acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as u32, c))
                .collect(),
        }
    }

    /// Multiplicative inverse, by solving the φ×φ system of multiplication by `self`.
    pub fn inv(&self) -> Option<Cyc> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Cyc::rational(self.n, r.inv()?));
        }
        let phi = euler_phi(self.n) as usize;
        // column j = self * ζ^j
        let mut m = vec![vec![Rat::ZERO; phi + 1]; phi];
        for j in 0..phi {
            let col = self.mul(&Cyc::zeta_pow(self.n, j as i64)).coeffs();
            for i in 0..phi {
                m[i][j] = col[i].clone();
            }
        }
        m[0][phi] = Rat::ONE;
        for c in 0..phi {
            let p = (c..phi).find(|&r| !m[r][c].is_zero())?;
            m.swap(c, p);
            let iv = m[c][c].inv()?;
            for x in m[c].iter_mut() {
                *x = x.mul(&iv);
            }
            for r in 0..phi {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    for k in c..=phi {
                        let v = m[c][k].mul(&f);
                        m[r][k] = m[r][k].sub(&v);
                    }
                }
            }
        }
        let sol: Vec<Rat> = m.iter().map(|row| row[phi].clone()).collect();
        Cyc::from_coeffs(self.n, &sol).ok()
    }

    pub fn pow(&self, mut e: u64) -> Cyc {
        let mut base = self.clone();
        let mut acc = Cyc::one(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Parses the `"c0 + c1*z + c2*z^2"` serialization.
    pub fn parse(n: u32, s: &str) -> Result<Cyc, ScalarError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ScalarError::Parse("empty scalar".into()));
        }
        let mut acc = Cyc::zero(n);
        for term in s.split(" + ") {
            let term = term.trim();
            let (coef, exp) = match term.split_once('z') {
                None => (term, 0i64),
                Some((c, rest)) => {
                    let c = c.trim_end_matches('*');
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|x| x.parse().ok())
                            .ok_or_else(|| ScalarError::Parse(format!("bad exponent in {term:?}")))?
                    };
                    (c, e)
                }
            };
            let r: Rat = match coef {
                "" => Rat::ONE,
                "-" => Rat::int(-1),
                c => c.parse().map_err(ScalarError::Parse)?,
            };
            acc = acc.add(&Cyc::zeta_pow(n, exp).scale(&r));
        }
        Ok(acc)
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(20).len() as u32 - 1, euler_phi(20));
    }

    #[test]
    fn display_round_trip() {
        let x = Cyc::make(20, &[Rat::new(1, 2), Rat::ZERO, Rat::int(-3), Rat::ZERO, Rat::ZERO, Rat::ZERO, Rat::ZERO, Rat::ZERO, Rat::ZERO, Rat::int(1)]);
        let s = x.to_string();
        assert_eq!(Cyc::parse(20, &s).unwrap(), x);
        assert_eq!(Cyc::zero(8).to_string(), "0");
    }

    #[test]
    fn conductor_coercion() {
        let i = Cyc::zeta_pow(4, 1);
        let w = Cyc::zeta_pow(8, 1);
        assert_eq!(w.mul(&w), i.lift_to(8));
        assert_eq!(i.add(&w).conductor(), 8);
    }
}
