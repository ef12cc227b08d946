//! Finite groups as Cayley tables, the polyhedral catalog, binary covers in
//! SL2(Q(ζ_N)) and automorphism groups.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::scalar::{Cyc, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid parameter n = {n} for {kind}")]
    InvalidN { kind: &'static str, n: usize },
    #[error("binary covers of cyclic groups are not supported")]
    CyclicCover,
    #[error("matrix closure exceeded {0} elements")]
    ClosureOverflow(usize),
    #[error("no surjection onto the base group with kernel {{±I}}")]
    NoProjection,
    #[error("no generating set with at most 3 elements")]
    NoGenerators,
    #[error("map is not a group automorphism")]
    NotAutomorphism,
    #[error("unknown group {0:?}")]
    Unknown(String),
}

/// The polyhedral families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Kind {
    Cyclic(usize),
    Dihedral(usize),
    Tetra,
    Octa,
    Icosa,
}

impl Kind {
    pub fn parse(kind: &str, n: Option<usize>) -> Result<Kind, GroupError> {
        let need = |k: &'static str| n.ok_or(GroupError::InvalidN { kind: k, n: 0 });
        Ok(match kind.to_ascii_lowercase().as_str() {
            "cyclic" | "z" => Kind::Cyclic(need("cyclic")?),
            "dihedral" | "d" => Kind::Dihedral(need("dihedral")?),
            "tetra" | "t" | "a4" => Kind::Tetra,
            "octa" | "o" | "s4" => Kind::Octa,
            "icosa" | "i" | "a5" => Kind::Icosa,
            _ => return Err(GroupError::Unknown(kind.to_string())),
        })
    }

    /// Short letter used in catalog names: Dn, T, O, I.
    pub fn letter(&self) -> String {
        match self {
            Kind::Cyclic(n) => format!("Z{n}"),
            Kind::Dihedral(n) => format!("D{n}"),
            Kind::Tetra => "T".into(),
            Kind::Octa => "O".into(),
            Kind::Icosa => "I".into(),
        }
    }

    /// Name of the polyhedral group itself.
    pub fn group_name(&self) -> String {
        match self {
            Kind::Cyclic(n) => format!("Z{n}"),
            Kind::Dihedral(n) => format!("D{n}"),
            Kind::Tetra => "A4".into(),
            Kind::Octa => "S4".into(),
            Kind::Icosa => "A5".into(),
        }
    }

    /// Smallest conductor over which the binary cover, its characters and
    /// the grouplikes of the associated Hopf algebras are defined.
    pub fn default_conductor(&self) -> u32 {
        match self {
            Kind::Cyclic(n) => num_integer::lcm(*n as u32, 4),
            Kind::Dihedral(n) => num_integer::lcm(2 * *n as u32, 4),
            Kind::Tetra => 12,
            Kind::Octa => 8,
            Kind::Icosa => 20,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.group_name())
    }
}

/// Group given by its full multiplication table; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinGroup {
    pub name: String,
    pub labels: Vec<String>,
    table: Vec<usize>,
    inv: Vec<usize>,
    pub generators: Vec<usize>,
}

#[derive(Serialize)]
struct GroupJson<'a> {
    name: &'a str,
    order: usize,
    labels: &'a [String],
    table: Vec<Vec<usize>>,
    generators: &'a [usize],
}

impl FinGroup {
    /// Builds from a multiplication table; the identity must be element 0.
    pub fn from_table(name: impl Into<String>, labels: Vec<String>, table: Vec<usize>) -> FinGroup {
        let n = labels.len();
        assert_eq!(table.len(), n * n);
        let inv = (0..n)
            .map(|a| (0..n).find(|&b| table[a * n + b] == 0).expect("missing inverse"))
            .collect();
        let mut g = FinGroup { name: name.into(), labels, table, inv, generators: vec![] };
        g.generators = g.find_generators().unwrap_or_default();
        g
    }

    /// Closure of `gens` under a multiplication on hashable values.
    pub fn from_closure<T, M, L>(name: &str, identity: T, gens: &[T], mul: M, label: L, cap: usize) -> Result<(FinGroup, Vec<T>), GroupError>
    where
        T: Clone + Eq + std::hash::Hash,
        M: Fn(&T, &T) -> T,
        L: Fn(&T) -> String,
    {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let p = mul(&elems[i], g);
                if !index.contains_key(&p) {
                    if elems.len() >= cap {
                        return Err(GroupError::ClosureOverflow(cap));
                    }
                    index.insert(p.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(p);
                }
            }
        }
        let n = elems.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&mul(&elems[a], &elems[b])];
            }
        }
        let labels = elems.iter().map(label).collect();
        let mut g = FinGroup::from_table(name, labels, table);
        g.generators = gens.iter().map(|x| index[x]).collect();
        Ok((g, elems))
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    pub fn elem_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |x, _| self.mul(x, a))
    }

    /// Exhaustive check of associativity, identity and inverses.
    pub fn verify_axioms(&self) -> bool {
        let n = self.order();
        let ids = (0..n).all(|a| self.mul(0, a) == a && self.mul(a, 0) == a);
        let invs = (0..n).all(|a| self.mul(a, self.inv(a)) == 0 && self.mul(self.inv(a), a) == 0);
        let latin = (0..n).all(|a| {
            let mut seen = vec![false; n];
            (0..n).all(|b| !std::mem::replace(&mut seen[self.mul(a, b)], true))
        });
        let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))));
        ids && invs && latin && assoc
    }

    /// Elements of the subgroup generated by `gens`, sorted.
    pub fn generate(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|&i| seen[i]).collect()
    }

    /// First generating set of size ≤ 3 in index order.
    pub fn find_generators(&self) -> Result<Vec<usize>, GroupError> {
        let n = self.order();
        if n == 1 {
            return Ok(vec![]);
        }
        for a in 1..n {
            if self.generate(&[a]).len() == n {
                return Ok(vec![a]);
            }
        }
        for a in 1..n {
            for b in a + 1..n {
                if self.generate(&[a, b]).len() == n {
                    return Ok(vec![a, b]);
                }
            }
        }
        for a in 1..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if self.generate(&[a, b, c]).len() == n {
                        return Ok(vec![a, b, c]);
                    }
                }
            }
        }
        Err(GroupError::NoGenerators)
    }

    /// Subgroup on the given elements (which must be closed), reindexed in the given order with identity first.
    pub fn subgroup(&self, name: &str, elems: &[usize]) -> (FinGroup, Vec<usize>) {
        let mut els: Vec<usize> = elems.to_vec();
        els.sort_unstable();
        els.dedup();
        assert_eq!(els[0], 0, "subgroup must contain the identity");
        let pos: HashMap<usize, usize> = els.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let m = els.len();
        let mut table = vec![0; m * m];
        for i in 0..m {
            for j in 0..m {
                table[i * m + j] = pos[&self.mul(els[i], els[j])];
            }
        }
        let labels = els.iter().map(|&e| self.labels[e].clone()).collect();
        (FinGroup::from_table(name, labels, table), els)
    }

    pub fn direct_product(&self, o: &FinGroup) -> FinGroup {
        let (n, m) = (self.order(), o.order());
        let mut table = vec![0; n * m * n * m];
        for a in 0..n * m {
            for b in 0..n * m {
                let (a1, a2) = (a / m, a % m);
                let (b1, b2) = (b / m, b % m);
                table[a * n * m + b] = self.mul(a1, b1) * m + o.mul(a2, b2);
            }
        }
        let labels = (0..n * m).map(|a| format!("({},{})", self.labels[a / m], o.labels[a % m])).collect();
        FinGroup::from_table(format!("{}x{}", self.name, o.name), labels, table)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        (0..n).any(|a| self.elem_order(a) == n)
    }

    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        (0..n).filter(|&a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a))).collect()
    }

    /// Sorted multiset of element orders.
    pub fn spectrum(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.elements().map(|a| self.elem_order(a)).collect();
        s.sort_unstable();
        s
    }

    pub fn iso_invariants(&self) -> IsoInvariants {
        IsoInvariants { order: self.order(), abelian: self.is_abelian(), spectrum: self.spectrum() }
    }

    /// Name of the catalog group with the same invariants, if any.
    ///
    /// Cyclic groups, dihedral groups (D2 is reported as "Z2xZ2"), A4, S4 and
    /// A5 are separated by order, abelianness and the order spectrum.
    pub fn catalog_match(&self) -> Option<String> {
        let inv = self.iso_invariants();
        let n = inv.order;
        let mut candidates: Vec<(String, FinGroup)> = vec![(format!("Z{n}"), polyhedral(Kind::Cyclic(n)).ok()?)];
        if n % 2 == 0 && n >= 4 {
            let name = if n == 4 { "Z2xZ2".to_string() } else { format!("D{}", n / 2) };
            candidates.push((name, polyhedral(Kind::Dihedral(n / 2)).ok()?));
        }
        for k in [Kind::Tetra, Kind::Octa, Kind::Icosa] {
            let g = polyhedral(k).ok()?;
            if g.order() == n {
                candidates.push((k.group_name(), g));
            }
        }
        candidates.into_iter().find(|(_, g)| g.iso_invariants() == inv).map(|(name, _)| name)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let n = self.order();
        serde_json::to_value(GroupJson {
            name: &self.name,
            order: n,
            labels: &self.labels,
            table: (0..n).map(|a| (0..n).map(|b| self.mul(a, b)).collect()).collect(),
            generators: &self.generators,
        })
        .expect("serializable")
    }

    /// Conjugacy classes, each sorted, ordered by smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let mut cls: Vec<usize> = (0..n).map(|h| self.conj(h, a)).collect();
            cls.sort_unstable();
            cls.dedup();
            for &c in &cls {
                seen[c] = true;
            }
            out.push(cls);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoInvariants {
    pub order: usize,
    pub abelian: bool,
    pub spectrum: Vec<usize>,
}

fn perm_mul(a: &[u8], b: &[u8]) -> Vec<u8> {
    // (ab)(i) = a(b(i))
    b.iter().map(|&i| a[i as usize]).collect()
}

fn perm_parity(p: &[u8]) -> bool {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 0
}

/// Cycle notation on the points 1..k; the identity is "()".
pub fn cycle_notation(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut s = String::new();
    for i in 0..p.len() {
        if seen[i] || p[i] as usize == i {
            continue;
        }
        let mut cyc = vec![];
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            cyc.push((j + 1).to_string());
            j = p[j] as usize;
        }
        s.push_str(&format!("({})", cyc.join(" ")));
    }
    if s.is_empty() {
        "()".into()
    } else {
        s
    }
}

fn all_perms(k: u8) -> Vec<Vec<u8>> {
    fn rec(prefix: &mut Vec<u8>, left: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let x = left.remove(i);
            prefix.push(x);
            rec(prefix, left, out);
            prefix.pop();
            left.insert(i, x);
        }
    }
    let mut out = vec![];
    rec(&mut vec![], &mut (0..k).collect(), &mut out);
    out
}

/// Permutation group on k points from a sorted list of permutations (identity first).
pub fn perm_group(name: &str, perms: &[Vec<u8>]) -> FinGroup {
    let index: HashMap<&[u8], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let n = perms.len();
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = index[perm_mul(&perms[a], &perms[b]).as_slice()];
        }
    }
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    FinGroup::from_table(name, labels, table)
}

/// The underlying permutations of the permutation models (A4, S4, A5), sorted lexicographically.
pub fn permutations_of(kind: Kind) -> Option<Vec<Vec<u8>>> {
    match kind {
        Kind::Tetra => Some(all_perms(4).into_iter().filter(|p| perm_parity(p)).collect()),
        Kind::Octa => Some(all_perms(4)),
        Kind::Icosa => Some(all_perms(5).into_iter().filter(|p| perm_parity(p)).collect()),
        _ => None,
    }
}

/// Index of the permutation with the given cycle label, e.g. "(1 2)(3 4)".
pub fn find_label(g: &FinGroup, label: &str) -> Option<usize> {
    g.labels.iter().position(|l| l == label)
}

/// Z_n, D_n (order 2n), A4, S4 or A5.
pub fn polyhedral(kind: Kind) -> Result<FinGroup, GroupError> {
    match kind {
        Kind::Cyclic(n) => {
            if n < 1 {
                return Err(GroupError::InvalidN { kind: "cyclic", n });
            }
            let table = (0..n * n).map(|x| (x / n + x % n) % n).collect();
            let labels = (0..n).map(|k| if k == 0 { "e".into() } else { format!("r^{k}") }).collect();
            let mut g = FinGroup::from_table(format!("Z{n}"), labels, table);
            g.generators = if n > 1 { vec![1] } else { vec![] };
            Ok(g)
        }
        Kind::Dihedral(n) => {
            if n < 2 {
                return Err(GroupError::InvalidN { kind: "dihedral", n });
            }
            // index = e·n + k for r^k s^e; (k1,e1)(k2,e2) = (k1 + (−1)^{e1} k2, e1 ⊕ e2)
            let m = 2 * n;
            let mut table = vec![0; m * m];
            for a in 0..m {
                for b in 0..m {
                    let (e1, k1) = (a / n, a % n);
                    let (e2, k2) = (b / n, b % n);
                    let k = if e1 == 0 { k1 + k2 } else { k1 + n - k2 } % n;
                    table[a * m + b] = ((e1 + e2) % 2) * n + k;
                }
            }
            let labels = (0..m)
                .map(|a| match (a / n, a % n) {
                    (0, 0) => "e".to_string(),
                    (0, k) => format!("r^{k}"),
                    (_, 0) => "s".to_string(),
                    (_, k) => format!("r^{k}s"),
                })
                .collect();
            let mut g = FinGroup::from_table(format!("D{n}"), labels, table);
            // s₊ = s, s₋ = r^{-1}s, so s₊s₋ = r
            g.generators = vec![n, n + n - 1];
            Ok(g)
        }
        Kind::Tetra | Kind::Octa | Kind::Icosa => Ok(perm_group(&kind.group_name(), &permutations_of(kind).unwrap())),
    }
}

/// 2×2 matrix over Q(ζ_N), row-major.
pub type Mat2 = [Cyc; 4];

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    [
        a[0].mul(&b[0]).add(&a[1].mul(&b[2])),
        a[0].mul(&b[1]).add(&a[1].mul(&b[3])),
        a[2].mul(&b[0]).add(&a[3].mul(&b[2])),
        a[2].mul(&b[1]).add(&a[3].mul(&b[3])),
    ]
}

pub fn mat2_det(a: &Mat2) -> Cyc {
    a[0].mul(&a[3]).sub(&a[1].mul(&a[2]))
}

pub fn mat2_string(a: &Mat2) -> String {
    format!("[[{}, {}], [{}, {}]]", a[0], a[1], a[2], a[3])
}

/// Central extension 1 → {±I} → Γ̃ → Γ → 1 with Γ̃ ⊂ SL2(Q(ζ_N)).
#[derive(Clone, Debug)]
pub struct CentralExt {
    pub kind: Kind,
    pub conductor: u32,
    pub cover: FinGroup,
    pub matrices: Vec<Mat2>,
    pub base: FinGroup,
    /// Index of −I in the cover.
    pub z: usize,
    pub proj: Vec<usize>,
    pub section: Vec<usize>,
}

impl CentralExt {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind.group_name(),
            "conductor": self.conductor,
            "cover": self.cover.to_json(),
            "base": self.base.to_json(),
            "matrices": self.matrices.iter().map(|m| m.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "z": self.z,
            "proj": self.proj,
            "section": self.section,
        })
    }

    /// Checks the structural invariants: homomorphism, kernel {e, z}, centrality, section, det = 1.
    pub fn verify(&self) -> bool {
        let c = &self.cover;
        let hom = c.elements().all(|a| c.elements().all(|b| self.proj[c.mul(a, b)] == self.base.mul(self.proj[a], self.proj[b])));
        let kernel: Vec<usize> = c.elements().filter(|&a| self.proj[a] == 0).collect();
        let central = c.elements().all(|a| c.mul(a, self.z) == c.mul(self.z, a));
        let section = self.base.elements().all(|s| self.proj[self.section[s]] == s) && self.section[0] == 0;
        let det = self.matrices.iter().all(|m| mat2_det(m).is_one());
        hom && kernel == vec![0, self.z] && central && section && det && c.order() == 2 * self.base.order()
    }
}

fn generator_matrices(kind: Kind, n_cond: u32) -> Result<Vec<Mat2>, GroupError> {
    let z = |k: i64| Cyc::zeta_pow(n_cond, k);
    let c = |v: i64| Cyc::int(n_cond, v);
    let half = Rat::new(1, 2);
    let i = z(n_cond as i64 / 4);
    // a + b i + c j + d k ↦ [[a + b i, c + d i], [−c + d i, a − b i]]
    let quat = |a: &Cyc, b: &Cyc, cc: &Cyc, d: &Cyc| -> Mat2 {
        [a.add(&b.mul(&i)), cc.add(&d.mul(&i)), cc.neg().add(&d.mul(&i)), a.sub(&b.mul(&i))]
    };
    let h = Cyc::rational(n_cond, half.clone());
    let omega = quat(&h, &h, &h, &h);
    Ok(match kind {
        Kind::Cyclic(_) => return Err(GroupError::CyclicCover),
        Kind::Dihedral(n) => {
            let k = n_cond as i64 / (2 * n as i64);
            vec![[z(k), c(0), c(0), z(-k)], [c(0), c(-1), c(1), c(0)]]
        }
        Kind::Tetra => vec![quat(&c(0), &c(1), &c(0), &c(0)), omega],
        Kind::Octa => {
            let w = n_cond as i64 / 8;
            vec![[z(w), c(0), c(0), z(-w)], omega]
        }
        Kind::Icosa => {
            let z5 = |k: i64| z(k * n_cond as i64 / 5);
            let phi = z5(2).add(&z5(3)).neg();
            let phi_inv = phi.sub(&c(1));
            vec![omega, quat(&phi.scale(&half), &phi_inv.scale(&half), &h, &c(0))]
        }
    })
}

/// Conductor divisibility needed by the cover generators.
fn conductor_ok(kind: Kind, n: u32) -> bool {
    match kind {
        Kind::Cyclic(_) => false,
        Kind::Dihedral(m) => n % (2 * m as u32) == 0 && n % 4 == 0,
        Kind::Tetra => n % 4 == 0,
        Kind::Octa => n % 8 == 0,
        Kind::Icosa => n % 20 == 0,
    }
}

/// Γ̃ ⊂ SL2 with projection to the permutation/dihedral model of Γ.
pub fn binary_cover(kind: Kind, conductor: Option<u32>) -> Result<CentralExt, GroupError> {
    let base = polyhedral(kind)?;
    let n_cond = conductor.unwrap_or(kind.default_conductor());
    if !conductor_ok(kind, n_cond) {
        return Err(GroupError::InvalidN { kind: "conductor", n: n_cond as usize });
    }
    let gens = generator_matrices(kind, n_cond)?;
    let one = Cyc::one(n_cond);
    let zero = Cyc::zero(n_cond);
    let id: Mat2 = [one.clone(), zero.clone(), zero.clone(), one.clone()];
    let cap = 2 * base.order();
    let (cover, mats) = FinGroup::from_closure(&format!("2{}", kind.letter()), id, &gens, mat2_mul, mat2_string, cap)?;
    if cover.order() != cap {
        return Err(GroupError::ClosureOverflow(cap));
    }
    let minus: Mat2 = [one.neg(), zero.clone(), zero, one.neg()];
    let z = mats.iter().position(|m| *m == minus).ok_or(GroupError::NoProjection)?;
    let proj = find_projection(&cover, &base, z).ok_or(GroupError::NoProjection)?;
    let strings: Vec<String> = mats.iter().map(mat2_string).collect();
    let mut section = vec![usize::MAX; base.order()];
    for a in cover.elements() {
        let s = proj[a];
        if s == 0 {
            section[0] = 0;
        } else if section[s] == usize::MAX || strings[a] < strings[section[s]] {
            section[s] = a;
        }
    }
    Ok(CentralExt { kind, conductor: n_cond, cover, matrices: mats, base, z, proj, section })
}

/// First surjection (in lexicographic order of generator images) with kernel {e, z}.
fn find_projection(cover: &FinGroup, base: &FinGroup, z: usize) -> Option<Vec<usize>> {
    let gens = &cover.generators;
    let n = base.order();
    let orders: Vec<usize> = gens.iter().map(|&g| cover.elem_order(g)).collect();
    let cands: Vec<Vec<usize>> = orders
        .iter()
        .map(|&o| (0..n).filter(|&x| o % base.elem_order(x) == 0).collect())
        .collect();
    let mut choice = vec![0; gens.len()];
    loop_product(&cands, &mut choice, 0, &mut |imgs| {
        let map = extend_hom(cover, base, gens, imgs)?;
        let kernel: Vec<usize> = cover.elements().filter(|&a| map[a] == 0).collect();
        let onto = {
            let mut hit = vec![false; n];
            map.iter().for_each(|&x| hit[x] = true);
            hit.iter().all(|&h| h)
        };
        (onto && kernel == [0, z]).then_some(map)
    })
}

fn loop_product<T>(cands: &[Vec<usize>], choice: &mut Vec<usize>, depth: usize, f: &mut dyn FnMut(&[usize]) -> Option<T>) -> Option<T> {
    if depth == cands.len() {
        return f(choice);
    }
    for &c in &cands[depth] {
        choice[depth] = c;
        if let Some(t) = loop_product(cands, choice, depth + 1, f) {
            return Some(t);
        }
    }
    None
}

/// The map on `src` sending generator i to `imgs[i]`, if it is a well-defined homomorphism.
pub fn extend_hom(src: &FinGroup, dst: &FinGroup, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; src.order()];
    map[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&g, &h) in gens.iter().zip(imgs) {
            let y = src.mul(x, g);
            let fy = dst.mul(map[x], h);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    map.iter().all(|&m| m != usize::MAX).then_some(map)
}

/// Automorphism as the permutation of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupAut(pub Vec<usize>);

impl GroupAut {
    pub fn identity(n: usize) -> GroupAut {
        GroupAut((0..n).collect())
    }

    pub fn apply(&self, g: usize) -> usize {
        self.0[g]
    }

    /// (self ∘ o)(g) = self(o(g))
    pub fn compose(&self, o: &GroupAut) -> GroupAut {
        GroupAut(o.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> GroupAut {
        let mut v = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x] = i;
        }
        GroupAut(v)
    }

    pub fn is_involution(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| self.0[x] == i)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_automorphism_of(&self, g: &FinGroup) -> bool {
        let n = g.order();
        if self.0.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &x in &self.0 {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
        g.elements().all(|a| g.elements().all(|b| self.0[g.mul(a, b)] == g.mul(self.0[a], self.0[b])))
    }

    /// Inner automorphism g ↦ h g h⁻¹.
    pub fn inner(g: &FinGroup, h: usize) -> GroupAut {
        GroupAut(g.elements().map(|x| g.conj(h, x)).collect())
    }
}

/// All automorphisms, sorted.
pub fn automorphisms(g: &FinGroup) -> Result<Vec<GroupAut>, GroupError> {
    let gens = if g.generators.is_empty() && g.order() > 1 { g.find_generators()? } else { g.generators.clone() };
    let n = g.order();
    let cands: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| (0..n).filter(|&y| g.elem_order(y) == g.elem_order(x)).collect())
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0; gens.len()];
    loop_product::<()>(&cands, &mut choice, 0, &mut |imgs| {
        if let Some(map) = extend_hom(g, g, &gens, imgs) {
            let a = GroupAut(map);
            let mut seen = vec![false; n];
            if a.0.iter().all(|&x| !std::mem::replace(&mut seen[x], true)) {
                out.push(a);
            }
        }
        None
    });
    out.sort();
    Ok(out)
}

/// Aut-conjugacy classes of automorphisms of order 2; each class sorted, classes ordered by representative.
pub fn order2_classes(auts: &[GroupAut]) -> Vec<Vec<GroupAut>> {
    let invols: Vec<&GroupAut> = auts.iter().filter(|a| a.is_involution() && !a.is_identity()).collect();
    let mut assigned: BTreeMap<GroupAut, usize> = BTreeMap::new();
    let mut classes: Vec<Vec<GroupAut>> = Vec::new();
    for t in invols {
        if assigned.contains_key(t) {
            continue;
        }
        let mut cls: Vec<GroupAut> = auts.iter().map(|a| a.compose(t).compose(&a.inverse())).collect();
        cls.sort();
        cls.dedup();
        for c in &cls {
            assigned.insert(c.clone(), classes.len());
        }
        classes.push(cls);
    }
    classes.sort_by(|a, b| a[0].cmp(&b[0]));
    classes
}

/// Elements fixed by θ.
pub fn fixed_points(g: &FinGroup, theta: &GroupAut) -> Vec<usize> {
    g.elements().filter(|&x| theta.apply(x) == x).collect()
}

pub fn fixed_subgroup(g: &FinGroup, theta: &GroupAut) -> FinGroup {
    let pts = fixed_points(g, theta);
    g.subgroup(&format!("{}^theta", g.name), &pts).0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(polyhedral(Kind::Dihedral(3)).unwrap().order(), 6);
        assert_eq!(polyhedral(Kind::Tetra).unwrap().order(), 12);
        assert_eq!(polyhedral(Kind::Octa).unwrap().order(), 24);
        assert_eq!(polyhedral(Kind::Icosa).unwrap().order(), 60);
        assert_eq!(polyhedral(Kind::Cyclic(1)).unwrap().order(), 1);
        assert!(polyhedral(Kind::Dihedral(1)).is_err());
    }

    #[test]
    fn dihedral_generators() {
        let g = polyhedral(Kind::Dihedral(5)).unwrap();
        let (sp, sm) = (g.generators[0], g.generators[1]);
        assert_eq!(g.mul(sp, sp), 0);
        assert_eq!(g.mul(sm, sm), 0);
        assert_eq!(g.elem_order(g.mul(sp, sm)), 5);
        assert_eq!(g.labels[g.mul(sp, sm)], "r^1");
    }
}
