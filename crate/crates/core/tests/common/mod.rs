//! Brute-force oracles shared by several test targets.
#![allow(dead_code)]

use polyhopf::cocycle::{coboundary, Cocycle2F2};
use polyhopf::groups::FinGroup;

/// All normalized 2-cochains of a group of order at most 5.
pub fn all_normalized(g: &FinGroup) -> Vec<Cocycle2F2> {
    let n = g.order();
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|x| (1..n).map(move |y| (x, y))).collect();
    assert!(cells.len() <= 16);
    (0u32..1 << cells.len())
        .map(|mask| {
            let mut w = Cocycle2F2::zero(n);
            for (i, &(x, y)) in cells.iter().enumerate() {
                w.set(x, y, ((mask >> i) & 1) as u8);
            }
            w
        })
        .collect()
}

pub fn all_normalized_cochains1(n: usize) -> Vec<Vec<u8>> {
    (0u32..1 << (n - 1)).map(|mask| (0..n).map(|v| if v == 0 { 0 } else { ((mask >> (v - 1)) & 1) as u8 }).collect()).collect()
}

pub fn brute_cocycle(g: &FinGroup, w: &Cocycle2F2) -> bool {
    let n = g.order();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| w.get(a, b) ^ w.get(g.mul(a, b), c) == w.get(b, c) ^ w.get(a, g.mul(b, c)))))
}

pub fn brute_coboundary(g: &FinGroup, w: &Cocycle2F2) -> bool {
    all_normalized_cochains1(g.order()).iter().any(|b| coboundary(g, b) == *w)
}

/// dim H² by counting: |Z²| / |B²| = 2^dim.
pub fn brute_h2(g: &FinGroup) -> usize {
    let z = all_normalized(g).into_iter().filter(|w| brute_cocycle(g, w)).count();
    let mut b: Vec<Cocycle2F2> = all_normalized_cochains1(g.order()).iter().map(|b| coboundary(g, b)).collect();
    b.sort_by_key(|w| w.to_rows());
    b.dedup();
    (z / b.len()).trailing_zeros() as usize
}
