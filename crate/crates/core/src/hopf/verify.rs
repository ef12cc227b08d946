//! Exhaustive axiom checks on basis tuples.
//!
//! Kernels are generic over [`VScalar`]. When every structure constant is
//! rational they run on integers scaled by a common denominator `D`: a term
//! that is a product of `k` constants carries a factor `D^k`, so each side of
//! an identity is brought to the larger degree with [`VScalar::lift`] before
//! comparison. Otherwise they run on the field elements directly.

use std::cell::Cell;


use num_traits::ToPrimitive;
use serde::Serialize;

use super::HopfAlg;
use crate::scalar::{Cyc, Field, Fp};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub assoc: bool,
    pub unit: bool,
    pub coassoc: bool,
    pub counit: bool,
    pub bialgebra: bool,
    pub antipode: bool,
    pub antipode_sq_id: bool,
}

impl AxiomReport {
    /// All Hopf axioms (S² = id is reported separately).
    pub fn hopf(&self) -> bool {
        self.assoc && self.unit && self.coassoc && self.counit && self.bialgebra && self.antipode
    }

    pub fn all(&self) -> bool {
        self.hopf() && self.antipode_sq_id
    }

    pub fn flags(&self) -> [(&'static str, bool); 7] {
        [
            ("assoc", self.assoc),
            ("unit", self.unit),
            ("coassoc", self.coassoc),
            ("counit", self.counit),
            ("bialgebra", self.bialgebra),
            ("antipode", self.antipode),
            ("antipode_sq_id", self.antipode_sq_id),
        ]
    }
}

pub(crate) trait VScalar: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, o: &Self);
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

thread_local! {
    static OVERFLOW: Cell<bool> = const { Cell::new(false) };
}

/// Integer numerator over an implicit power of the common denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Scaled(i128);

impl VScalar for Scaled {
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add_assign(&mut self, o: &Self) {
        self.0 = self.0.checked_add(o.0).unwrap_or_else(|| {
            OVERFLOW.with(|f| f.set(true));
            0
        });
    }
    fn mul(&self, o: &Self) -> Self {
        Scaled(self.0.checked_mul(o.0).unwrap_or_else(|| {
            OVERFLOW.with(|f| f.set(true));
            0
        }))
    }
    fn neg(&self) -> Self {
        Scaled(-self.0)
    }
}

impl VScalar for Cyc {
    fn is_zero(&self) -> bool {
        Cyc::is_zero(self)
    }
    fn add_assign(&mut self, o: &Self) {
        *self = Cyc::add(self, o);
    }
    fn mul(&self, o: &Self) -> Self {
        Cyc::mul(self, o)
    }
    fn neg(&self) -> Self {
        Cyc::neg(self)
    }
}

impl VScalar for Fp {
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn add_assign(&mut self, o: &Self) {
        *self = Fp::add(*self, *o);
    }
    fn mul(&self, o: &Self) -> Self {
        Fp::mul(*self, *o)
    }
    fn neg(&self) -> Self {
        Fp::neg(*self)
    }
}

/// Structure tensors over a kernel scalar, with `lift[k]` = D^k.
struct Tensors<V> {
    d: usize,
    mult: Vec<Vec<(u32, V)>>,
    comult: Vec<Vec<(u32, u32, V)>>,
    antipode: Vec<Vec<(u32, V)>>,
    unit: Vec<V>,
    counit: Vec<V>,
    zero: V,
    lift: Vec<V>,
}

impl<V: VScalar> Tensors<V> {
    fn from_hopf<F: Field>(h: &HopfAlg<F>, conv: impl Fn(&F) -> V, zero: V, lift: Vec<V>) -> Self {
        Tensors {
            d: h.dim(),
            mult: h.mult.iter().map(|t| t.iter().map(|(k, c)| (*k, conv(c))).collect()).collect(),
            comult: h.comult.iter().map(|t| t.iter().map(|(a, b, c)| (*a, *b, conv(c))).collect()).collect(),
            antipode: h.antipode.iter().map(|t| t.iter().map(|(k, c)| (*k, conv(c))).collect()).collect(),
            unit: h.unit.iter().map(&conv).collect(),
            counit: h.counit.iter().map(&conv).collect(),
            zero,
            lift,
        }
    }

    fn up(&self, v: &V, k: usize) -> V {
        v.mul(&self.lift[k])
    }

    fn m(&self, i: usize, j: usize) -> &[(u32, V)] {
        &self.mult[i * self.d + j]
    }

    fn unit_support(&self) -> Vec<usize> {
        (0..self.d).filter(|&i| !self.unit[i].is_zero()).collect()
    }

    fn assoc(&self) -> bool {
        let d = self.d;
        let mut lhs = vec![self.zero.clone(); d];
        let mut rhs = vec![self.zero.clone(); d];
        for i in 0..d {
            for j in 0..d {
                let ij = self.m(i, j);
                for l in 0..d {
                    for (k, c) in ij {
                        for (x, c2) in self.m(*k as usize, l) {
                            lhs[*x as usize].add_assign(&c.mul(c2));
                        }
                    }
                    for (k, c) in self.m(j, l) {
                        for (x, c2) in self.m(i, *k as usize) {
                            rhs[*x as usize].add_assign(&c.mul(c2));
                        }
                    }
                    if lhs != rhs {
                        return false;
                    }
                    lhs.iter_mut().chain(rhs.iter_mut()).for_each(|v| *v = self.zero.clone());
                }
            }
        }
        true
    }

    fn unit_law(&self) -> bool {
        let d = self.d;
        let us = self.unit_support();
        let one2 = &self.lift[2];
        for j in 0..d {
            for side in 0..2 {
                let mut acc = vec![self.zero.clone(); d];
                for &i in &us {
                    let t = if side == 0 { self.m(i, j) } else { self.m(j, i) };
                    for (k, c) in t {
                        acc[*k as usize].add_assign(&self.unit[i].mul(c));
                    }
                }
                for (k, v) in acc.iter().enumerate() {
                    let want = if k == j { one2 } else { &self.zero };
                    if v != want {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn coassoc(&self) -> bool {
        let d = self.d as u64;
        for terms in &self.comult {
            let mut lhs: Vec<(u64, V)> = Vec::new();
            let mut rhs: Vec<(u64, V)> = Vec::new();
            for (j, k, c) in terms {
                for (a, b, c2) in &self.comult[*j as usize] {
                    lhs.push(((*a as u64 * d + *b as u64) * d + *k as u64, c.mul(c2)));
                }
                for (a, b, c2) in &self.comult[*k as usize] {
                    rhs.push(((*j as u64 * d + *a as u64) * d + *b as u64, c.mul(c2)));
                }
            }
            if merge(lhs) != merge(rhs) {
                return false;
            }
        }
        true
    }

    fn counit_law(&self) -> bool {
        let d = self.d;
        let one2 = &self.lift[2];
        for (i, terms) in self.comult.iter().enumerate() {
            let mut left = vec![self.zero.clone(); d];
            let mut right = vec![self.zero.clone(); d];
            for (j, k, c) in terms {
                left[*k as usize].add_assign(&self.counit[*j as usize].mul(c));
                right[*j as usize].add_assign(&self.counit[*k as usize].mul(c));
            }
            for x in 0..d {
                let want = if x == i { one2 } else { &self.zero };
                if &left[x] != want || &right[x] != want {
                    return false;
                }
            }
        }
        true
    }

    fn bialgebra(&self) -> bool {
        let d = self.d;
        let mut acc = vec![self.zero.clone(); d * d];
        let mut touched: Vec<usize> = Vec::new();
        let mut mark = vec![false; d * d];
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.m(i, j) {
                    for (a, b, c2) in &self.comult[*k as usize] {
                        let key = *a as usize * d + *b as usize;
                        acc[key].add_assign(&self.up(&c.mul(c2), 2));
                        if !mark[key] {
                            mark[key] = true;
                            touched.push(key);
                        }
                    }
                }
                for (a, b, c1) in &self.comult[i] {
                    for (x, y, c2) in &self.comult[j] {
                        let c12 = c1.mul(c2);
                        let ma = self.m(*a as usize, *x as usize);
                        let mb = self.m(*b as usize, *y as usize);
                        for (p, c3) in ma {
                            let c123 = c12.mul(c3);
                            for (r, c4) in mb {
                                let key = *p as usize * d + *r as usize;
                                acc[key] = sub(&acc[key], &c123.mul(c4));
                                if !mark[key] {
                                    mark[key] = true;
                                    touched.push(key);
                                }
                            }
                        }
                    }
                }
                let ok = touched.iter().all(|&t| acc[t].is_zero());
                for &t in &touched {
                    acc[t] = self.zero.clone();
                    mark[t] = false;
                }
                touched.clear();
                if !ok {
                    return false;
                }
            }
        }
        // Δ(1) = 1⊗1, ε(ab) = ε(a)ε(b), ε(1) = 1
        let us = self.unit_support();
        let mut delta1 = vec![self.zero.clone(); d * d];
        for &i in &us {
            for (a, b, c) in &self.comult[i] {
                delta1[*a as usize * d + *b as usize].add_assign(&self.unit[i].mul(c));
            }
        }
        for a in 0..d {
            for b in 0..d {
                if delta1[a * d + b] != self.unit[a].mul(&self.unit[b]) {
                    return false;
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                let mut e = self.zero.clone();
                for (k, c) in self.m(i, j) {
                    e.add_assign(&c.mul(&self.counit[*k as usize]));
                }
                if e != self.counit[i].mul(&self.counit[j]) {
                    return false;
                }
            }
        }
        let mut e1 = self.zero.clone();
        for &i in &us {
            e1.add_assign(&self.unit[i].mul(&self.counit[i]));
        }
        e1 == self.lift[2]
    }

    fn antipode_law(&self) -> bool {
        let d = self.d;
        for (i, terms) in self.comult.iter().enumerate() {
            let mut left = vec![self.zero.clone(); d];
            let mut right = vec![self.zero.clone(); d];
            for (j, k, c) in terms {
                for (s, cs) in &self.antipode[*j as usize] {
                    let cc = c.mul(cs);
                    for (x, cm) in self.m(*s as usize, *k as usize) {
                        left[*x as usize].add_assign(&cc.mul(cm));
                    }
                }
                for (s, cs) in &self.antipode[*k as usize] {
                    let cc = c.mul(cs);
                    for (x, cm) in self.m(*j as usize, *s as usize) {
                        right[*x as usize].add_assign(&cc.mul(cm));
                    }
                }
            }
            for x in 0..d {
                let want = self.up(&self.counit[i].mul(&self.unit[x]), 1);
                if left[x] != want || right[x] != want {
                    return false;
                }
            }
        }
        true
    }

    fn antipode_sq(&self) -> bool {
        let d = self.d;
        for i in 0..d {
            let mut acc = vec![self.zero.clone(); d];
            for (j, c) in &self.antipode[i] {
                for (k, c2) in &self.antipode[*j as usize] {
                    acc[*k as usize].add_assign(&c.mul(c2));
                }
            }
            for (k, v) in acc.iter().enumerate() {
                let want = if k == i { &self.lift[2] } else { &self.zero };
                if v != want {
                    return false;
                }
            }
        }
        true
    }

    fn report(&self) -> AxiomReport {
        AxiomReport {
            assoc: self.assoc(),
            unit: self.unit_law(),
            coassoc: self.coassoc(),
            counit: self.counit_law(),
            bialgebra: self.bialgebra(),
            antipode: self.antipode_law(),
            antipode_sq_id: self.antipode_sq(),
        }
    }
}

fn sub<V: VScalar>(a: &V, b: &V) -> V {
    let mut r = a.clone();
    r.add_assign(&b.neg());
    r
}

fn merge<V: VScalar>(mut v: Vec<(u64, V)>) -> Vec<(u64, V)> {
    v.sort_by_key(|(k, _)| *k);
    let mut out: Vec<(u64, V)> = Vec::with_capacity(v.len());
    for (k, c) in v {
        match out.last_mut() {
            Some((k0, c0)) if *k0 == k => c0.add_assign(&c),
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// Checks every Hopf axiom on all basis tuples.
pub fn verify_axioms<F: Field>(h: &HopfAlg<F>) -> AxiomReport {
    let any: &dyn std::any::Any = h;
    if let Some(hc) = any.downcast_ref::<HopfAlg<Cyc>>() {
        if let Some(r) = scaled_report(hc) {
            return r;
        }
        return Tensors::from_hopf(hc, |c| c.clone(), Cyc::zero(hc.ctx), vec![Cyc::one(hc.ctx); 3]).report();
    }
    if let Some(hf) = any.downcast_ref::<HopfAlg<Fp>>() {
        let one = Fp::new(1, hf.ctx);
        return Tensors::from_hopf(hf, |c| *c, Fp::new(0, hf.ctx), vec![one; 3]).report();
    }
    let one = F::one(&h.ctx);
    Tensors::from_hopf(h, |c| Generic(c.clone()), Generic(F::zero(&h.ctx)), vec![Generic(one); 3]).report()
}

/// Integer route; `None` when some constant is irrational or i128 overflows.
fn scaled_report(h: &HopfAlg<Cyc>) -> Option<AxiomReport> {
    let den = h.rational_denominator()?;
    let dd = den.to_i128()?;
    if dd > 1 << 24 {
        return None;
    }
    let conv = |c: &Cyc| -> Scaled {
        let r = c.as_rational().expect("checked rational");
        let n = (r.numer() * &den / r.denom()).to_i128().expect("bounded numerator");
        Scaled(n)
    };
    OVERFLOW.with(|f| f.set(false));
    let t = Tensors::from_hopf(h, conv, Scaled(0), vec![Scaled(1), Scaled(dd), Scaled(dd * dd)]);
    let r = t.report();
    if OVERFLOW.with(|f| f.get()) {
        return None;
    }
    Some(r)
}

#[derive(Clone, PartialEq)]
struct Generic<F>(F);

impl<F: Field> VScalar for Generic<F> {
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add_assign(&mut self, o: &Self) {
        self.0.add_assign(&o.0);
    }
    fn mul(&self, o: &Self) -> Self {
        Generic(self.0.mul(&o.0))
    }
    fn neg(&self) -> Self {
        Generic(self.0.neg())
    }
}
