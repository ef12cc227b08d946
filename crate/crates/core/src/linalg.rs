//! Dense linear algebra over a [`Field`], plus bit-packed elimination over F2.

use crate::scalar::Field;

/// Row space kept in reduced row echelon form.
///
/// Because the basis is fully reduced, the coordinates of a vector in the
/// span are its entries at the pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    pub ctx: F::Ctx,
    pub ncols: usize,
    pub rows: Vec<Vec<F>>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ctx: F::Ctx, ncols: usize) -> Self {
        Echelon { ctx, ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows<I: IntoIterator<Item = Vec<F>>>(ctx: F::Ctx, ncols: usize, rows: I) -> Self {
        let mut e = Self::new(ctx, ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// v minus its projection onto the span along the pivots.
    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x = x.sub(&f.mul(r));
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| x.is_zero())
    }

    /// Adds v to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    if !r.is_zero() {
                        *x = x.sub(&f.mul(r));
                    }
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    /// Coordinates of v in the row basis, or `None` if v is outside the span.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Rows sorted by pivot column (a canonical basis of the span).
    pub fn canonical(&self) -> Vec<Vec<F>> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&i| self.pivots[i]);
        idx.into_iter().map(|i| self.rows[i].clone()).collect()
    }

    pub fn same_span(&self, o: &Echelon<F>) -> bool {
        self.rank() == o.rank() && o.rows.iter().all(|r| self.contains(r))
    }
}

/// Basis of {x : A x = 0} for A given by rows of length `ncols`.
pub fn nullspace<F: Field>(ctx: &F::Ctx, rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let e = Echelon::from_rows(ctx.clone(), ncols, rows.iter().cloned());
    nullspace_of(&e)
}

pub fn nullspace_of<F: Field>(e: &Echelon<F>) -> Vec<Vec<F>> {
    let ctx = &e.ctx;
    let mut is_pivot = vec![None; e.ncols];
    for (i, &p) in e.pivots.iter().enumerate() {
        is_pivot[p] = Some(i);
    }
    (0..e.ncols)
        .filter(|&c| is_pivot[c].is_none())
        .map(|free| {
            let mut x = vec![F::zero(ctx); e.ncols];
            x[free] = F::one(ctx);
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                x[p] = row[free].neg();
            }
            x
        })
        .collect()
}

/// Some solution of A x = b, if one exists.
pub fn solve<F: Field>(ctx: &F::Ctx, rows: &[Vec<F>], b: &[F], ncols: usize) -> Option<Vec<F>> {
    let aug = rows.iter().zip(b).map(|(r, bi)| {
        let mut v = r.clone();
        v.push(bi.clone());
        v
    });
    let e = Echelon::from_rows(ctx.clone(), ncols + 1, aug);
    if e.pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![F::zero(ctx); ncols];
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

/// Square matrix product over a field.
pub fn matmul<F: Field>(ctx: &F::Ctx, a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![F::zero(ctx); m]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j].mul_add(&a[i][k], &bk[j]);
            }
        }
    }
    out
}

pub fn inverse<F: Field>(ctx: &F::Ctx, a: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = a.len();
    let mut m: Vec<Vec<F>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..n).map(|j| if i == j { F::one(ctx) } else { F::zero(ctx) }));
            v
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].inv()?;
        for x in m[c].iter_mut() {
            *x = x.mul(&inv);
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in 0..2 * n {
                    let v = m[c][k].mul(&f);
                    m[r][k] = m[r][k].sub(&v);
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Bit-packed row over F2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitRow {
    pub words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(n: usize) -> BitRow {
        BitRow { words: vec![0; n.div_ceil(64)] }
    }
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }
    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }
    pub fn set(&mut self, i: usize, b: bool) {
        if self.get(i) != b {
            self.flip(i);
        }
    }
    pub fn xor(&mut self, o: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&o.words) {
            *a ^= b;
        }
    }
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }
}

/// Incremental reduced echelon form over F2.
#[derive(Clone, Debug)]
pub struct F2Echelon {
    pub ncols: usize,
    pub rows: Vec<BitRow>,
    pub pivots: Vec<usize>,
    /// `pivot_row[c]` is the row whose pivot is column c.
    pivot_row: Vec<Option<usize>>,
}

impl F2Echelon {
    pub fn new(ncols: usize) -> F2Echelon {
        F2Echelon { ncols, rows: Vec::new(), pivots: Vec::new(), pivot_row: vec![None; ncols] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, mut v: BitRow) -> BitRow {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor(row);
            }
        }
        v
    }

    pub fn insert(&mut self, v: BitRow) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.first_one() else {
            return false;
        };
        for row in self.rows.iter_mut() {
            if row.get(p) {
                row.xor(&v);
            }
        }
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    /// Some x with A x = b where A has the given rows; columns `ncols`.
    pub fn solve(rows: &[BitRow], b: &[bool], ncols: usize) -> Option<BitRow> {
        let mut e = F2Echelon::new(ncols + 1);
        for (r, &bi) in rows.iter().zip(b) {
            let mut v = r.clone();
            v.words.resize((ncols + 1).div_ceil(64), 0);
            v.set(ncols, bi);
            e.insert(v);
        }
        if e.pivot_row[ncols].is_some() {
            return None;
        }
        let mut x = BitRow::zeros(ncols);
        for (row, &p) in e.rows.iter().zip(&e.pivots) {
            x.set(p, row.get(ncols));
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Cyc, Fp, Rat};

    #[test]
    fn echelon_coords_and_nullspace() {
        let q = 101u64;
        let f = |v: i64| Fp::new(v, q);
        let rows = vec![vec![f(1), f(2), f(3)], vec![f(2), f(4), f(6)], vec![f(0), f(1), f(1)]];
        let e = Echelon::from_rows(q, 3, rows.clone());
        assert_eq!(e.rank(), 2);
        let ns = nullspace(&q, &rows, 3);
        assert_eq!(ns.len(), 1);
        for r in &rows {
            let dot = r.iter().zip(&ns[0]).fold(f(0), |a, (x, y)| a.add((*x).mul(*y)));
            assert_eq!(dot.v, 0);
        }
        let c = e.coords(&[f(1), f(3), f(4)]).unwrap();
        let back: Vec<Fp> = (0..3)
            .map(|j| e.rows.iter().zip(&c).fold(f(0), |a, (r, x)| a.add(r[j].mul(*x))))
            .collect();
        assert_eq!(back, vec![f(1), f(3), f(4)]);
    }

    #[test]
    fn exact_inverse() {
        let n = 8;
        let c = |v: i64| Cyc::int(n, v);
        let a = vec![vec![c(1), Cyc::zeta_pow(n, 1)], vec![c(0), Cyc::rational(n, Rat::new(1, 2))]];
        let inv = inverse(&n, &a).unwrap();
        let id = matmul(&n, &a, &inv);
        assert!(id[0][0].is_one() && id[1][1].is_one() && id[0][1].is_zero() && id[1][0].is_zero());
    }

    #[test]
    fn f2_solve() {
        let mut r1 = BitRow::zeros(3);
        r1.flip(0);
        r1.flip(1);
        let mut r2 = BitRow::zeros(3);
        r2.flip(1);
        r2.flip(2);
        let x = F2Echelon::solve(&[r1.clone(), r2.clone()], &[true, false], 3).unwrap();
        assert!(x.get(0) ^ x.get(1));
        assert!(!(x.get(1) ^ x.get(2)));
        let mut r3 = r1.clone();
        r3.xor(&r2);
        assert!(F2Echelon::solve(&[r1, r2, r3], &[true, false, false], 3).is_none());
    }
}
