//! Fusion rings of simple comodules.

use std::collections::VecDeque;

use serde::Serialize;

use super::character::simple_characters;
use super::{ModularView, RepError};
use crate::linalg::Echelon;
use crate::scalar::Fp;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FusionRing {
    pub labels: Vec<String>,
    pub degrees: Vec<usize>,
    /// n[a][b][c] = N_{ab}^c.
    pub n: Vec<Vec<Vec<u32>>>,
    pub unit: usize,
    pub dual: Vec<usize>,
    /// Block of the decomposition each label came from.
    pub blocks: Vec<usize>,
}

impl FusionRing {
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of_block(&self, block: usize) -> Option<usize> {
        self.blocks.iter().position(|&b| b == block)
    }

    pub fn label_index(&self, l: &str) -> Option<usize> {
        self.labels.iter().position(|x| x == l)
    }

    pub fn is_associative(&self) -> bool {
        let r = self.rank();
        let nz: Vec<Vec<Vec<(usize, u64)>>> =
            self.n.iter().map(|row| row.iter().map(|v| v.iter().enumerate().filter(|(_, &k)| k > 0).map(|(c, &k)| (c, k as u64)).collect()).collect()).collect();
        let mut left = vec![0u64; r];
        let mut right = vec![0u64; r];
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    left.fill(0);
                    right.fill(0);
                    for &(x, k) in &nz[a][b] {
                        for &(e, m) in &nz[x][c] {
                            left[e] += k * m;
                        }
                    }
                    for &(x, k) in &nz[b][c] {
                        for &(e, m) in &nz[a][x] {
                            right[e] += k * m;
                        }
                    }
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// N_{ab}^1 = δ_{b,a*}.
    pub fn duality_ok(&self) -> bool {
        let r = self.rank();
        (0..r).all(|a| (0..r).all(|b| self.n[a][b][self.unit] == u32::from(b == self.dual[a])))
            && (0..r).all(|a| self.dual[self.dual[a]] == a)
    }

    pub fn degrees_multiplicative(&self) -> bool {
        let r = self.rank();
        (0..r).all(|a| (0..r).all(|b| self.degrees[a] * self.degrees[b] == (0..r).map(|c| self.n[a][b][c] as usize * self.degrees[c]).sum::<usize>()))
    }

    /// "χ1·χ1 = 1 + a + χ2".
    pub fn render_product(&self, a: usize, b: usize) -> String {
        let terms: Vec<String> = (0..self.rank())
            .filter(|&c| self.n[a][b][c] > 0)
            .map(|c| match self.n[a][b][c] {
                1 => self.labels[c].clone(),
                k => format!("{k}{}", self.labels[c]),
            })
            .collect();
        format!("{}·{} = {}", self.labels[a], self.labels[b], terms.join(" + "))
    }

    /// All products χ_a·χ_b with a ≤ b and both non-unit, one per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for a in 0..self.rank() {
            for b in a..self.rank() {
                if a != self.unit && b != self.unit {
                    out.push_str(&self.render_product(a, b));
                    out.push('\n');
                }
            }
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("a,b,c,n\n");
        for a in 0..self.rank() {
            for b in 0..self.rank() {
                for c in 0..self.rank() {
                    if self.n[a][b][c] > 0 {
                        out.push_str(&format!("{},{},{},{}\n", self.labels[a], self.labels[b], self.labels[c], self.n[a][b][c]));
                    }
                }
            }
        }
        out
    }

    fn permuted(&self, order: &[usize]) -> FusionRing {
        let pos: Vec<usize> = {
            let mut p = vec![0; order.len()];
            for (i, &o) in order.iter().enumerate() {
                p[o] = i;
            }
            p
        };
        FusionRing {
            labels: order.iter().map(|&o| self.labels[o].clone()).collect(),
            degrees: order.iter().map(|&o| self.degrees[o]).collect(),
            n: order.iter().map(|&a| order.iter().map(|&b| order.iter().map(|&c| self.n[a][b][c]).collect()).collect()).collect(),
            unit: pos[self.unit],
            dual: order.iter().map(|&o| pos[self.dual[o]]).collect(),
            blocks: order.iter().map(|&o| self.blocks[o]).collect(),
        }
    }
}

/// Fusion ring of the simple comodules of H. Coefficients are lifted from
/// F_q to integers in [0, dim H].
pub fn fusion_ring(view: &ModularView) -> Result<FusionRing, RepError> {
    let chars = simple_characters(view);
    let h = &view.h;
    let q = view.q();
    let d = h.dim();
    let r = chars.len();
    let zero = Fp { v: 0, q };
    let mut aug: Echelon<Fp> = Echelon::new(q, d + r);
    for (i, c) in chars.iter().enumerate() {
        let mut v = c.coords.clone();
        v.extend((0..r).map(|j| Fp { v: u64::from(i == j), q }));
        aug.insert(v);
    }
    let decompose = |v: Vec<Fp>| -> Result<Vec<u32>, RepError> {
        let mut x = v;
        x.extend(std::iter::repeat_n(zero, r));
        let red = aug.reduce(x);
        if red[..d].iter().any(|x| x.v != 0) {
            return Err(RepError::Fusion("product outside the character span".into()));
        }
        red[d..]
            .iter()
            .map(|c| {
                let v = c.neg().v;
                if v as usize > d {
                    Err(RepError::Fusion(format!("coefficient {} is not a small nonnegative integer", c.neg().signed())))
                } else {
                    Ok(v as u32)
                }
            })
            .collect()
    };
    let mut n = vec![vec![vec![0u32; r]; r]; r];
    for a in 0..r {
        for b in 0..r {
            n[a][b] = decompose(h.mul(&chars[a].coords, &chars[b].coords))?;
        }
    }
    let unit_vec = h.unit_vec();
    let unit = chars.iter().position(|c| c.coords == unit_vec).ok_or_else(|| RepError::Fusion("trivial comodule not found".into()))?;
    let dual = chars
        .iter()
        .map(|c| {
            let s = h.antipode_vec(&c.coords);
            chars.iter().position(|x| x.coords == s).ok_or_else(|| RepError::Fusion("dual character not found".into()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let raw = FusionRing { labels: vec![String::new(); r], degrees: chars.iter().map(|c| c.degree).collect(), n, unit, dual, blocks: (0..r).collect() };
    Ok(label(raw))
}

fn reach(ring: &FusionRing, g: usize) -> Vec<usize> {
    let r = ring.rank();
    let mut seen = vec![false; r];
    let mut order = vec![ring.unit];
    seen[ring.unit] = true;
    let mut queue = VecDeque::from([ring.unit]);
    while let Some(x) = queue.pop_front() {
        for c in 0..r {
            if ring.n[x][g][c] > 0 && !seen[c] {
                seen[c] = true;
                order.push(c);
                queue.push_back(c);
            }
        }
    }
    order
}

/// Orders the simple objects by appearance in the powers of a generator of
/// least degree, then names them 1, a, b, … (degree one) and χ1, χ2, ….
fn label(ring: FusionRing) -> FusionRing {
    let r = ring.rank();
    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    for g in 0..r {
        if ring.degrees[g] < 2 {
            continue;
        }
        let ord = reach(&ring, g);
        let key = (r - ord.len(), ring.degrees[g]);
        if best.as_ref().is_none_or(|(m, dg, _)| key < (*m, *dg)) {
            best = Some((key.0, key.1, ord));
        }
    }
    let mut order = best.map(|b| b.2).unwrap_or_else(|| vec![ring.unit]);
    for i in 0..r {
        if !order.contains(&i) {
            order.push(i);
        }
    }
    let mut ring = ring.permuted(&order);
    let (mut ones, mut highs) = (0usize, 0usize);
    for i in 0..r {
        ring.labels[i] = if i == ring.unit {
            "1".into()
        } else if ring.degrees[i] == 1 {
            ones += 1;
            one_dim_label(ones)
        } else {
            highs += 1;
            format!("χ{highs}")
        };
    }
    let mut pos: Vec<usize> = (0..r).collect();
    pos.sort_by_key(|&i| (i != ring.unit, ring.degrees[i] > 1));
    ring.permuted(&pos)
}

fn one_dim_label(k: usize) -> String {
    if k <= 26 {
        char::from(b'a' + (k - 1) as u8).to_string()
    } else {
        format!("g{k}")
    }
}

/// A bijection f with N1_{ab}^c = N2_{f(a)f(b)}^{f(c)}, preserving degrees,
/// unit and duality.
pub fn fusion_iso(r1: &FusionRing, r2: &FusionRing) -> Option<Vec<usize>> {
    let r = r1.rank();
    if r != r2.rank() {
        return None;
    }
    let sig = |ring: &FusionRing, a: usize| -> (usize, Vec<(usize, u32)>) {
        let mut s: Vec<(usize, u32)> = (0..r).filter(|&c| ring.n[a][a][c] > 0).map(|c| (ring.degrees[c], ring.n[a][a][c])).collect();
        s.sort();
        (ring.degrees[a], s)
    };
    let s1: Vec<_> = (0..r).map(|a| sig(r1, a)).collect();
    let s2: Vec<_> = (0..r).map(|a| sig(r2, a)).collect();
    let mut f = vec![usize::MAX; r];
    let mut used = vec![false; r];
    f[r1.unit] = r2.unit;
    used[r2.unit] = true;
    let order: Vec<usize> = (0..r).filter(|&a| a != r1.unit).collect();
    fn consistent(r1: &FusionRing, r2: &FusionRing, f: &[usize], a: usize) -> bool {
        let r = r1.rank();
        if f[r1.dual[a]] != usize::MAX && f[r1.dual[a]] != r2.dual[f[a]] {
            return false;
        }
        for b in 0..r {
            if f[b] == usize::MAX {
                continue;
            }
            for c in 0..r {
                if f[c] == usize::MAX {
                    continue;
                }
                let triples = [(a, b, c), (b, a, c), (b, c, a), (c, b, a), (a, c, b), (c, a, b)];
                if triples.iter().any(|&(x, y, z)| r1.n[x][y][z] != r2.n[f[x]][f[y]][f[z]]) {
                    return false;
                }
            }
        }
        true
    }
    fn go(k: usize, order: &[usize], r1: &FusionRing, r2: &FusionRing, s1: &[(usize, Vec<(usize, u32)>)], s2: &[(usize, Vec<(usize, u32)>)], f: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if k == order.len() {
            return true;
        }
        let a = order[k];
        for t in 0..r1.rank() {
            if used[t] || s1[a] != s2[t] {
                continue;
            }
            f[a] = t;
            used[t] = true;
            if consistent(r1, r2, f, a) && go(k + 1, order, r1, r2, s1, s2, f, used) {
                return true;
            }
            f[a] = usize::MAX;
            used[t] = false;
        }
        false
    }
    if !consistent(r1, r2, &f, r1.unit) {
        return None;
    }
    go(0, &order, r1, r2, &s1, &s2, &mut f, &mut used).then_some(f)
}
