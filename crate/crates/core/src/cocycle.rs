//! 2-cocycles on finite groups: F2-valued tables solved by bitset elimination,
//! and root-of-unity valued tables used for the fibres of extensions.

use serde::Serialize;
use thiserror::Error;

use crate::groups::{CentralExt, FinGroup, GroupAut};
use crate::linalg::{BitRow, F2Echelon};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CocycleError {
    #[error("class not θ-stable")]
    NotThetaStable,
    #[error("phase table is not a coboundary of a root-of-unity valued cochain")]
    NotPhaseCoboundary,
    #[error("cocycle table size does not match the group")]
    Shape,
}

/// Normalized 2-cochain Γ×Γ → F2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Cocycle2F2 {
    pub n: usize,
    pub table: Vec<u8>,
}

impl Cocycle2F2 {
    pub fn zero(n: usize) -> Cocycle2F2 {
        Cocycle2F2 { n, table: vec![0; n * n] }
    }

    #[inline]
    pub fn get(&self, g: usize, h: usize) -> u8 {
        self.table[g * self.n + h]
    }

    pub fn set(&mut self, g: usize, h: usize, v: u8) {
        self.table[g * self.n + h] = v & 1;
    }

    pub fn add(&self, o: &Cocycle2F2) -> Cocycle2F2 {
        Cocycle2F2 { n: self.n, table: self.table.iter().zip(&o.table).map(|(a, b)| a ^ b).collect() }
    }

    /// ω ∘ (θ×θ)
    pub fn pullback(&self, theta: &GroupAut) -> Cocycle2F2 {
        let n = self.n;
        let mut t = vec![0; n * n];
        for g in 0..n {
            for h in 0..n {
                t[g * n + h] = self.get(theta.apply(g), theta.apply(h));
            }
        }
        Cocycle2F2 { n, table: t }
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.table.chunks(self.n).map(|c| c.to_vec()).collect()
    }
}

/// ω(g,h) + ω(gh,k) = ω(h,k) + ω(g,hk) for all triples.
pub fn is_cocycle(g: &FinGroup, w: &Cocycle2F2) -> bool {
    let n = g.order();
    w.n == n
        && (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = g.mul(a, b);
                (0..n).all(|c| w.get(a, b) ^ w.get(ab, c) == w.get(b, c) ^ w.get(a, g.mul(b, c)))
            })
        })
}

pub fn is_normalized(g: &FinGroup, w: &Cocycle2F2) -> bool {
    let e = g.identity();
    g.elements().all(|a| w.get(e, a) == 0 && w.get(a, e) == 0)
}

/// δb(g,h) = b(g) + b(h) + b(gh).
pub fn coboundary(g: &FinGroup, b: &[u8]) -> Cocycle2F2 {
    let n = g.order();
    let mut w = Cocycle2F2::zero(n);
    for x in 0..n {
        for y in 0..n {
            w.set(x, y, b[x] ^ b[y] ^ b[g.mul(x, y)]);
        }
    }
    w
}

/// Extension cocycle defined by u(s)u(t) = z^{ω(s,t)} u(st).
pub fn extension_cocycle(ext: &CentralExt) -> Cocycle2F2 {
    let base = &ext.base;
    let n = base.order();
    let mut w = Cocycle2F2::zero(n);
    for s in 0..n {
        for t in 0..n {
            let prod = ext.cover.mul(ext.section[s], ext.section[t]);
            let us = ext.section[base.mul(s, t)];
            w.set(s, t, u8::from(prod != us));
            debug_assert!(prod == us || prod == ext.cover.mul(ext.z, us));
        }
    }
    w
}

/// Rows of the map b ↦ δb on cochains with b(e) = 0; unknown g−1 is b(g).
fn coboundary_system(g: &FinGroup, pairs: impl Iterator<Item = (usize, usize)>) -> Vec<(usize, usize, BitRow)> {
    let n = g.order();
    pairs
        .map(|(x, y)| {
            let mut r = BitRow::zeros(n.saturating_sub(1));
            for v in [x, y, g.mul(x, y)] {
                if v != 0 {
                    r.flip(v - 1);
                }
            }
            (x, y, r)
        })
        .collect()
}

/// b with b(e) = 0 and δb = ω, if ω is a coboundary.
pub fn coboundary_solve(g: &FinGroup, w: &Cocycle2F2) -> Option<Vec<u8>> {
    let n = g.order();
    let sys = coboundary_system(g, (0..n).flat_map(|x| (0..n).map(move |y| (x, y))));
    let rows: Vec<BitRow> = sys.iter().map(|(_, _, r)| r.clone()).collect();
    let rhs: Vec<bool> = sys.iter().map(|(x, y, _)| w.get(*x, *y) == 1).collect();
    let sol = F2Echelon::solve(&rows, &rhs, n - 1)?;
    let mut b = vec![0u8; n];
    for v in 1..n {
        b[v] = u8::from(sol.get(v - 1));
    }
    Some(b)
}

/// ω' = ω + δb with ω'(θg, θh) = ω'(g, h).
pub fn theta_stabilize(g: &FinGroup, w: &Cocycle2F2, theta: &GroupAut) -> Result<(Cocycle2F2, Vec<u8>), CocycleError> {
    let n = g.order();
    // δb(θx,θy) + δb(x,y) = ω(θx,θy) + ω(x,y)
    let mut rows = Vec::with_capacity(n * n);
    let mut rhs = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let (tx, ty) = (theta.apply(x), theta.apply(y));
            let mut r = BitRow::zeros(n - 1);
            for v in [x, y, g.mul(x, y), tx, ty, g.mul(tx, ty)] {
                if v != 0 {
                    r.flip(v - 1);
                }
            }
            rows.push(r);
            rhs.push((w.get(tx, ty) ^ w.get(x, y)) == 1);
        }
    }
    let sol = F2Echelon::solve(&rows, &rhs, n - 1).ok_or(CocycleError::NotThetaStable)?;
    let mut b = vec![0u8; n];
    for v in 1..n {
        b[v] = u8::from(sol.get(v - 1));
    }
    let out = w.add(&coboundary(g, &b));
    debug_assert!(out.pullback(theta) == out);
    Ok((out, b))
}

/// dim H²(Γ, F2) = dim Z² − dim B² over normalized cochains.
///
/// For normalized cochains the cocycle identity on triples (g, h, s) with s
/// in a generating set implies it on all triples, so only those rows are
/// assembled.
pub fn h2_f2_dim(g: &FinGroup) -> usize {
    let n = g.order();
    if n == 1 {
        return 0;
    }
    let m = n - 1;
    let var = |x: usize, y: usize| -> Option<usize> { (x != 0 && y != 0).then(|| (x - 1) * m + (y - 1)) };
    let gens = if g.generators.is_empty() { g.find_generators().unwrap_or_default() } else { g.generators.clone() };
    let mut z = F2Echelon::new(m * m);
    for a in 0..n {
        for b in 0..n {
            for &s in &gens {
                let mut r = BitRow::zeros(m * m);
                for (x, y) in [(b, s), (g.mul(a, b), s), (a, g.mul(b, s)), (a, b)] {
                    if let Some(v) = var(x, y) {
                        r.flip(v);
                    }
                }
                if !r.is_zero() {
                    z.insert(r);
                }
            }
        }
    }
    let dim_z = m * m - z.rank();
    let mut bsp = F2Echelon::new(m * m);
    for s in 1..n {
        let mut e = vec![0u8; n];
        e[s] = 1;
        let d = coboundary(g, &e);
        let mut r = BitRow::zeros(m * m);
        for x in 1..n {
            for y in 1..n {
                if d.get(x, y) == 1 {
                    r.flip(var(x, y).unwrap());
                }
            }
        }
        bsp.insert(r);
    }
    dim_z - bsp.rank()
}

/// Normalized 2-cochain with values ζ_L^{table[g,h]}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PhaseCocycle {
    pub l: u32,
    pub n: usize,
    pub table: Vec<u32>,
}

impl PhaseCocycle {
    pub fn trivial(n: usize) -> PhaseCocycle {
        PhaseCocycle { l: 1, n, table: vec![0; n * n] }
    }

    #[inline]
    pub fn get(&self, g: usize, h: usize) -> u32 {
        self.table[g * self.n + h]
    }

    /// Same values over ζ_m for a multiple m of L.
    pub fn lift(&self, m: u32) -> PhaseCocycle {
        assert!(m % self.l == 0);
        let k = m / self.l;
        PhaseCocycle { l: m, n: self.n, table: self.table.iter().map(|v| v * k).collect() }
    }

    /// Smallest L over which the values are defined.
    pub fn simplify(&self) -> PhaseCocycle {
        let g = self.table.iter().fold(self.l, |a, &v| num_integer::gcd(a, v));
        PhaseCocycle { l: self.l / g, n: self.n, table: self.table.iter().map(|v| v / g).collect() }
    }

    pub fn mul(&self, o: &PhaseCocycle) -> PhaseCocycle {
        let l = num_integer::lcm(self.l, o.l);
        let (a, b) = (self.lift(l), o.lift(l));
        PhaseCocycle { l, n: self.n, table: a.table.iter().zip(&b.table).map(|(x, y)| (x + y) % l).collect() }.simplify()
    }

    pub fn inverse(&self) -> PhaseCocycle {
        PhaseCocycle { l: self.l, n: self.n, table: self.table.iter().map(|v| (self.l - v) % self.l).collect() }
    }

    pub fn pullback(&self, theta: &GroupAut) -> PhaseCocycle {
        let n = self.n;
        let mut t = vec![0; n * n];
        for g in 0..n {
            for h in 0..n {
                t[g * n + h] = self.get(theta.apply(g), theta.apply(h));
            }
        }
        PhaseCocycle { l: self.l, n, table: t }
    }

    pub fn is_cocycle(&self, g: &FinGroup) -> bool {
        let (n, l) = (self.n, self.l);
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = g.mul(a, b);
                (0..n).all(|c| (self.get(a, b) + self.get(ab, c)) % l == (self.get(b, c) + self.get(a, g.mul(b, c))) % l)
            })
        })
    }

    pub fn is_normalized(&self) -> bool {
        (0..self.n).all(|a| self.get(0, a) == 0 && self.get(a, 0) == 0)
    }

    /// θ*τ = τ⁻¹.
    pub fn is_theta_compatible(&self, theta: &GroupAut) -> bool {
        let l = self.l;
        (0..self.n).all(|a| (0..self.n).all(|b| (self.get(theta.apply(a), theta.apply(b)) + self.get(a, b)) % l == 0))
    }

    pub fn is_sign(&self) -> bool {
        self.l <= 2
    }
}

/// τ(s,t) = (−1)^{ω(s,t)}.
pub fn to_sign_cocycle(w: &Cocycle2F2) -> PhaseCocycle {
    PhaseCocycle { l: 2, n: w.n, table: w.table.iter().map(|&v| v as u32).collect() }
}

/// δb for b with values ζ_L^{b(g)}.
pub fn phase_coboundary(g: &FinGroup, b: &[u32], l: u32) -> PhaseCocycle {
    let n = g.order();
    let mut t = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            t[x * n + y] = (b[x] + b[y] + l - b[g.mul(x, y)]) % l;
        }
    }
    PhaseCocycle { l, n, table: t }
}

/// Linear characters Γ → μ_m as exponent tables, for m the exponent of Γ.
/// Returns (m_ab, characters) with values rescaled to Z/m_ab, m_ab the exponent of Γ^ab.
pub fn linear_characters(g: &FinGroup) -> (u32, Vec<Vec<u32>>) {
    let m = g.elements().map(|a| g.elem_order(a)).fold(1, num_integer::lcm) as u32;
    let gens = &g.generators;
    let mut out = Vec::new();
    let mut choice = vec![0u32; gens.len()];
    loop {
        if let Some(ch) = extend_additive(g, gens, &choice, m) {
            out.push(ch);
        }
        // odometer
        let mut i = 0;
        while i < choice.len() {
            choice[i] += 1;
            if choice[i] < m {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == choice.len() {
            break;
        }
    }
    let mab = out
        .iter()
        .map(|ch| ch.iter().map(|&v| m / num_integer::gcd(m, v)).fold(1, num_integer::lcm))
        .fold(1, num_integer::lcm);
    let k = m / mab;
    let mut chars: Vec<Vec<u32>> = out.into_iter().map(|ch| ch.into_iter().map(|v| v / k).collect()).collect();
    chars.sort();
    (mab, chars)
}

fn extend_additive(g: &FinGroup, gens: &[usize], imgs: &[u32], m: u32) -> Option<Vec<u32>> {
    let n = g.order();
    let mut map = vec![u32::MAX; n];
    map[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&s, &v) in gens.iter().zip(imgs) {
            let y = g.mul(x, s);
            let fy = (map[x] + v) % m;
            if map[y] == u32::MAX {
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// b with δb = β, values in μ_{L·m_ab}, if β is a coboundary over the roots of unity.
pub fn phase_coboundary_solve(g: &FinGroup, beta: &PhaseCocycle) -> Option<(u32, Vec<u32>)> {
    let (mab, _) = linear_characters(g);
    let l = beta.l * mab.max(1);
    let beta = beta.lift(l);
    let gens = &g.generators;
    let n = g.order();
    let mut choice = vec![0u32; gens.len()];
    loop {
        // b(x s) = b(x) + b(s) − β(x, s)
        let mut b = vec![u32::MAX; n];
        b[0] = 0;
        let mut ok = true;
        let mut queue = std::collections::VecDeque::from([0usize]);
        'bfs: while let Some(x) = queue.pop_front() {
            for (&s, &v) in gens.iter().zip(&choice) {
                let y = g.mul(x, s);
                let fy = (b[x] + v + l - beta.get(x, s)) % l;
                if b[y] == u32::MAX {
                    b[y] = fy;
                    queue.push_back(y);
                } else if b[y] != fy {
                    ok = false;
                    break 'bfs;
                }
            }
        }
        if ok && phase_coboundary(g, &b, l) == beta {
            return Some((l, b));
        }
        let mut i = 0;
        while i < choice.len() {
            choice[i] += 1;
            if choice[i] < l {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == choice.len() {
            return None;
        }
    }
}

/// Root-of-unity representatives τ = (−1)^ω·δc of the class of ω with
/// θ*τ = τ⁻¹, c: Γ → Z/L.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaCompatible {
    pub l: u32,
    /// Exponent of Γ^ab; characters χ take values in Z/m.
    pub m: u32,
    /// δa = ω + θ*ω over F2.
    pub a: Vec<u8>,
    /// (χ, c): c + θ*c = (L/2)a + (L/m)χ, one entry per admissible χ, sorted by χ.
    pub solutions: Vec<(Vec<u32>, Vec<u32>)>,
}

impl ThetaCompatible {
    pub fn tau(&self, g: &FinGroup, w: &Cocycle2F2, c: &[u32]) -> PhaseCocycle {
        let n = g.order();
        let l = self.l;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + y] = ((l / 2) * w.get(x, y) as u32 + c[x] + c[y] + l - c[g.mul(x, y)]) % l;
            }
        }
        PhaseCocycle { l, n, table }
    }
}

/// All c with c + θ*c = f for f = (L/2)a + (L/m)χ θ-invariant, L = lcm(4, 2m).
///
/// With these values f is even on θ-fixed points, so c exists: on an orbit
/// s < θs put c(s) = 0, c(θs) = f(s); on a fixed point c(s) = f(s)/2. Then
/// θ*τ·τ = (−1)^{ω + θ*ω}·δf = 1.
pub fn theta_compatible(g: &FinGroup, w: &Cocycle2F2, theta: &GroupAut) -> Result<ThetaCompatible, CocycleError> {
    let a = coboundary_solve(g, &w.add(&w.pullback(theta))).ok_or(CocycleError::NotThetaStable)?;
    let (m, chars) = linear_characters(g);
    let l = num_integer::lcm(4, 2 * m);
    let mut solutions = Vec::new();
    for chi in chars {
        let f: Vec<u32> = g.elements().map(|s| ((l / 2) * a[s] as u32 + (l / m) * chi[s]) % l).collect();
        if g.elements().any(|s| f[theta.apply(s)] != f[s]) {
            continue;
        }
        let c = g
            .elements()
            .map(|s| {
                let t = theta.apply(s);
                if t == s {
                    f[s] / 2
                } else if s < t {
                    0
                } else {
                    f[s]
                }
            })
            .collect();
        solutions.push((chi, c));
    }
    if solutions.is_empty() {
        return Err(CocycleError::NotThetaStable);
    }
    Ok(ThetaCompatible { l, m, a, solutions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{polyhedral, Kind};

    #[test]
    fn zero_is_normalized_cocycle() {
        let g = polyhedral(Kind::Dihedral(3)).unwrap();
        let w = Cocycle2F2::zero(6);
        assert!(is_cocycle(&g, &w) && is_normalized(&g, &w));
        assert_eq!(coboundary_solve(&g, &w).unwrap(), vec![0; 6]);
    }

    #[test]
    fn characters_of_small_groups() {
        let (m, ch) = linear_characters(&polyhedral(Kind::Tetra).unwrap());
        assert_eq!((m, ch.len()), (3, 3));
        let (m, ch) = linear_characters(&polyhedral(Kind::Icosa).unwrap());
        assert_eq!((m, ch.len()), (1, 1));
        let (m, ch) = linear_characters(&polyhedral(Kind::Dihedral(4)).unwrap());
        assert_eq!((m, ch.len()), (2, 4));
    }
}
