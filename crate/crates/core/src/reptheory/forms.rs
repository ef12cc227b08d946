//! Frobenius–Schur indicators, invariant bilinear forms on comodules and
//! the ℬ(E) / 𝒪_{±1}[SL2] relations.

use serde::Serialize;

use super::decompose::irrep;
use super::{ModularView, RepError};
use crate::hopf::{reduce_mod, HopfAlg};
use crate::linalg::{inverse, nullspace};
use crate::scalar::{next_prime_1_mod, Cyc, Embedding, Field, Fp};

/// Square matrix with entries in H.
pub type HMatrix<F> = Vec<Vec<Vec<F>>>;

/// Tr(L_{e_k}) for every basis element.
pub fn trace_vector<F: Field>(h: &HopfAlg<F>) -> Vec<F> {
    let d = h.dim();
    (0..d)
        .map(|k| {
            let mut t = F::zero(&h.ctx);
            for i in 0..d {
                for (x, c) in h.m(k, i) {
                    if *x as usize == i {
                        t.add_assign(c);
                    }
                }
            }
            t
        })
        .collect()
}

/// The normalized integral of H*, λ = Tr(L_·)/dim H.
pub fn dual_integral<F: Field>(h: &HopfAlg<F>) -> Result<Vec<F>, RepError> {
    let n = F::from_i64(&h.ctx, h.dim() as i64).inv().ok_or_else(|| RepError::Indicator("dim H is zero in the field".into()))?;
    Ok(trace_vector(h).iter().map(|t| t.mul(&n)).collect())
}

/// ν(V) = λ(χ₍₁₎χ₍₂₎) for the character χ ∈ H of a comodule V, with λ the
/// normalized integral of H*.
pub fn fs_indicator<F: Field>(h: &HopfAlg<F>, chi: &[F]) -> Result<i8, RepError> {
    let lam = dual_integral(h)?;
    fs_indicator_with(h, &lam, chi)
}

pub fn fs_indicator_with<F: Field>(h: &HopfAlg<F>, lam: &[F], chi: &[F]) -> Result<i8, RepError> {
    let delta = h.comul(chi);
    let mut nu = F::zero(&h.ctx);
    for (j, row) in delta.iter().enumerate() {
        for (k, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (l, s) in h.m(j, k) {
                nu.add_assign(&c.mul(s).mul(&lam[*l as usize]));
            }
        }
    }
    for v in [-1i8, 0, 1] {
        if nu == F::from_i64(&h.ctx, v as i64) {
            return Ok(v);
        }
    }
    Err(RepError::Indicator(format!("indicator {nu} is not in {{-1, 0, 1}}")))
}

/// Classical (1/|G|) Σ χ(g²) from character values on group elements.
pub fn classical_fs(g: &crate::groups::FinGroup, chi: &[Cyc]) -> Option<i8> {
    let n = chi[0].conductor();
    let mut acc = Cyc::zero(n);
    for a in g.elements() {
        acc = acc.add(&chi[g.mul(a, a)]);
    }
    let v = acc.as_rational()?;
    let v = v.mul(&crate::scalar::Rat::new(1, g.order() as i64));
    [-1i8, 0, 1].into_iter().find(|x| v == crate::scalar::Rat::int(*x as i64))
}

/// Coefficient matrix (α_ik) of the i-th simple comodule of `view`, with
/// Δ(α_ik) = Σ_j α_ij ⊗ α_jk.
pub fn comodule_matrix(view: &ModularView, i: usize) -> Result<HMatrix<Fp>, RepError> {
    let block = &view.comodules.blocks[i];
    let rho = irrep(&view.dual.algebra(), block, view.seed)?;
    let n = block.degree;
    let d = view.h.dim();
    Ok((0..n).map(|r| (0..n).map(|c| (0..d).map(|j| rho.matrices[j][r][c]).collect()).collect()).collect())
}

pub fn is_comultiplicative<F: Field>(h: &HopfAlg<F>, a: &HMatrix<F>) -> bool {
    let n = a.len();
    let d = h.dim();
    (0..n).all(|i| {
        (0..n).all(|k| {
            let lhs = h.comul(&a[i][k]);
            let mut rhs = vec![vec![F::zero(&h.ctx); d]; d];
            for j in 0..n {
                for (x, u) in a[i][j].iter().enumerate() {
                    if u.is_zero() {
                        continue;
                    }
                    for (y, v) in a[j][k].iter().enumerate() {
                        if !v.is_zero() {
                            rhs[x][y].mul_add(u, v);
                        }
                    }
                }
            }
            lhs == rhs
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FormKind {
    Symmetric,
    Skew,
    None,
}

impl FormKind {
    /// The indicator the Frobenius–Schur theorem pairs with this kind.
    pub fn indicator(self) -> i8 {
        match self {
            FormKind::Symmetric => 1,
            FormKind::Skew => -1,
            FormKind::None => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvariantForm<F: Field> {
    pub e: Option<Vec<Vec<F>>>,
    pub kind: FormKind,
    /// Dimension of the space of invariant forms.
    pub solutions: usize,
}

/// Solves ᵗA E A = E·1 for the comodule with coefficient matrix A.
pub fn invariant_form<F: Field>(h: &HopfAlg<F>, a: &HMatrix<F>) -> InvariantForm<F> {
    let n = a.len();
    let d = h.dim();
    let unit = h.unit_vec();
    // unknown E_im at column i*n + m; one equation per (j, l, coordinate)
    let mut rows = Vec::new();
    for j in 0..n {
        for l in 0..n {
            let mut block = vec![vec![F::zero(&h.ctx); n * n]; d];
            for i in 0..n {
                for m in 0..n {
                    let p = h.mul(&a[i][j], &a[m][l]);
                    for (k, x) in p.into_iter().enumerate() {
                        if !x.is_zero() {
                            block[k][i * n + m] = x;
                        }
                    }
                }
            }
            for (k, u) in unit.iter().enumerate() {
                if !u.is_zero() {
                    block[k][j * n + l] = block[k][j * n + l].sub(u);
                }
            }
            rows.extend(block.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
        }
    }
    let ns = nullspace(&h.ctx, &rows, n * n);
    if ns.len() != 1 {
        return InvariantForm { e: None, kind: FormKind::None, solutions: ns.len() };
    }
    let e: Vec<Vec<F>> = (0..n).map(|i| ns[0][i * n..(i + 1) * n].to_vec()).collect();
    let sym = (0..n).all(|i| (0..n).all(|j| e[i][j] == e[j][i]));
    let skew = (0..n).all(|i| (0..n).all(|j| e[i][j] == e[j][i].neg()));
    let kind = if sym {
        FormKind::Symmetric
    } else if skew {
        FormKind::Skew
    } else {
        FormKind::None
    };
    InvariantForm { e: Some(e), kind, solutions: 1 }
}

fn hm_mul<F: Field>(h: &HopfAlg<F>, x: &HMatrix<F>, y: &HMatrix<F>) -> HMatrix<F> {
    let n = x.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = h.zero_vec();
                    for k in 0..n {
                        for (t, v) in acc.iter_mut().zip(h.mul(&x[i][k], &y[k][j])) {
                            t.add_assign(&v);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Scalar matrix times H-matrix, or H-matrix times scalar matrix.
fn scal_left<F: Field>(s: &[Vec<F>], x: &HMatrix<F>) -> HMatrix<F> {
    let n = x.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = vec![F::zero(&s[0][0].ctx()); x[0][0].len()];
                    for k in 0..n {
                        if s[i][k].is_zero() {
                            continue;
                        }
                        for (t, v) in acc.iter_mut().zip(&x[k][j]) {
                            t.mul_add(&s[i][k], v);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn scal_right<F: Field>(x: &HMatrix<F>, s: &[Vec<F>]) -> HMatrix<F> {
    transpose_h(&scal_left(&transpose(s), &transpose_h(x)))
}

fn transpose<F: Clone>(s: &[Vec<F>]) -> Vec<Vec<F>> {
    (0..s[0].len()).map(|j| s.iter().map(|r| r[j].clone()).collect()).collect()
}

fn transpose_h<F: Field>(x: &HMatrix<F>) -> HMatrix<F> {
    transpose(x)
}

fn is_identity<F: Field>(h: &HopfAlg<F>, x: &HMatrix<F>) -> bool {
    let unit = h.unit_vec();
    let zero = h.zero_vec();
    (0..x.len()).all(|i| (0..x.len()).all(|j| x[i][j] == if i == j { unit.clone() } else { zero.clone() }))
}

/// E⁻¹ ᵗA E A = I and A E⁻¹ ᵗA E = I.
pub fn be_relations<F: Field>(h: &HopfAlg<F>, a: &HMatrix<F>, e: &[Vec<F>]) -> bool {
    let Some(einv) = inverse(&h.ctx, e) else {
        return false;
    };
    let at = transpose_h(a);
    let first = hm_mul(h, &scal_left(&einv, &scal_right(&at, e)), a);
    let second = hm_mul(h, a, &scal_right(&scal_left(&einv, &at), e));
    is_identity(h, &first) && is_identity(h, &second)
}

#[derive(Clone, Debug, Serialize)]
pub struct Sl2Report {
    pub kind: FormKind,
    /// ℬ(E) relations, exact.
    pub be_relations: bool,
    /// Skew case: all α_ij commute and α11α22 − α12α21 = 1, exact.
    pub commutative_sl2: Option<bool>,
    /// Symmetric case: the 𝒪_{−1} relations after normalizing E to (0, i; i, 0) mod q.
    pub normalized: Option<NormalizedRelations>,
    /// Why the normalization was not performed.
    pub flag: Option<String>,
}

impl Sl2Report {
    pub fn passed(&self) -> bool {
        self.be_relations
            && self.commutative_sl2.unwrap_or(true)
            && self.normalized.as_ref().is_none_or(|n| n.relations.iter().all(|(_, ok)| *ok))
            && self.flag.is_none()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalizedRelations {
    pub q: u64,
    pub relations: Vec<(String, bool)>,
}

fn entries<F: Field>(a: &[Vec<F>; 4]) -> HMatrix<F> {
    vec![vec![a[0].clone(), a[1].clone()], vec![a[2].clone(), a[3].clone()]]
}

/// Checks of the relations of ℬ(E) and of 𝒪_{±1}[SL2] for a 2-dim comodule
/// with coefficients α11, α12, α21, α22 and invariant form E.
pub fn be_relations_check(h: &HopfAlg<Cyc>, alpha: &[Vec<Cyc>; 4], e: &[Vec<Cyc>]) -> Sl2Report {
    let a = entries(alpha);
    let be = be_relations(h, &a, e);
    let sym = e[0][1] == e[1][0];
    let skew = e[0][1] == e[1][0].neg() && e[0][0].is_zero() && e[1][1].is_zero();
    let kind = if sym {
        FormKind::Symmetric
    } else if skew {
        FormKind::Skew
    } else {
        FormKind::None
    };
    let mut report = Sl2Report { kind, be_relations: be, commutative_sl2: None, normalized: None, flag: None };
    match kind {
        FormKind::Skew => {
            let commute = (0..4).all(|i| (0..4).all(|j| h.mul(&alpha[i], &alpha[j]) == h.mul(&alpha[j], &alpha[i])));
            let det: Vec<Cyc> = h.mul(&alpha[0], &alpha[3]).iter().zip(h.mul(&alpha[1], &alpha[2])).map(|(x, y)| x.sub(&y)).collect();
            report.commutative_sl2 = Some(commute && det == h.unit_vec());
        }
        FormKind::Symmetric => match normalized_relations(h, alpha, e) {
            Ok(n) => report.normalized = Some(n),
            Err(msg) => report.flag = Some(msg),
        },
        FormKind::None => report.flag = Some("E is neither symmetric nor skew".into()),
    }
    report
}

/// Congruence P with ᵗP E P = (0, i; i, 0) over F_q, q advanced until the
/// needed square roots exist.
fn normalized_relations(h: &HopfAlg<Cyc>, alpha: &[Vec<Cyc>; 4], e: &[Vec<Cyc>]) -> Result<NormalizedRelations, String> {
    let n = h.conductor();
    let m = num_integer::lcm(n as u64, 4);
    let mut q = crate::scalar::default_prime(n, h.dim() as u64);
    for _ in 0..16 {
        if (q - 1) % m == 0 {
            if let Some(rel) = try_normalize(h, alpha, e, q)? {
                return Ok(rel);
            }
        }
        q = next_prime_1_mod(m, q + 1, h.dim() as u64);
    }
    Err("no prime with the required square roots".into())
}

fn try_normalize(h: &HopfAlg<Cyc>, alpha: &[Vec<Cyc>; 4], e: &[Vec<Cyc>], q: u64) -> Result<Option<NormalizedRelations>, String> {
    let emb = Embedding::new(h.conductor(), q).map_err(|x| x.to_string())?;
    let hm = reduce_mod(h, &emb).map_err(|x| x.to_string())?;
    let red = |c: &Cyc| emb.reduce(c).map_err(|x| x.to_string());
    let em: Vec<Vec<Fp>> = e.iter().map(|r| r.iter().map(red).collect::<Result<_, _>>()).collect::<Result<_, _>>()?;
    let am: Vec<Vec<Fp>> = alpha.iter().map(|v| v.iter().map(red).collect::<Result<_, _>>()).collect::<Result<_, _>>()?;
    let Some(i) = Fp::new(-1, q).sqrt() else {
        return Ok(None);
    };
    let (e11, e12, e22) = (em[0][0], em[0][1], em[1][1]);
    let two = Fp::new(2, q);
    let (u, w) = if e11.v == 0 {
        let w = if e22.v == 0 { [Fp::new(0, q), Fp::new(1, q)] } else { [e22.neg().mul(two.mul(e12).inv().ok_or("degenerate E")?), Fp::new(1, q)] };
        ([Fp::new(1, q), Fp::new(0, q)], w)
    } else {
        let disc = e12.mul(e12).sub(e11.mul(e22));
        let Some(s) = disc.sqrt() else {
            return Ok(None);
        };
        let inv = e11.inv().ok_or("degenerate E")?;
        ([e12.neg().add(s).mul(inv), Fp::new(1, q)], [e12.neg().sub(s).mul(inv), Fp::new(1, q)])
    };
    let pair = |x: &[Fp; 2], y: &[Fp; 2]| {
        let mut acc = Fp::new(0, q);
        for r in 0..2 {
            for c in 0..2 {
                acc = acc.add(x[r].mul(em[r][c]).mul(y[c]));
            }
        }
        acc
    };
    let s = pair(&u, &w).inv().ok_or("isotropic vectors are dependent")?.mul(i);
    let w = [w[0].mul(s), w[1].mul(s)];
    let p = vec![vec![u[0], w[0]], vec![u[1], w[1]]];
    let pinv = inverse(&q, &p).ok_or("singular congruence")?;
    let a = entries(&[am[0].clone(), am[1].clone(), am[2].clone(), am[3].clone()]);
    let an = scal_right(&scal_left(&pinv, &a), &p);
    let (ea, eb, ec, ed) = (&an[0][0], &an[0][1], &an[1][0], &an[1][1]);
    let mul = |x: &Vec<Fp>, y: &Vec<Fp>| hm.mul(x, y);
    let neg = |v: Vec<Fp>| -> Vec<Fp> { v.into_iter().map(|x| x.neg()).collect() };
    let sum = |x: Vec<Fp>, y: Vec<Fp>| -> Vec<Fp> { x.into_iter().zip(y).map(|(a, b)| a.add(b)).collect() };
    let s = |x: &Vec<Fp>| hm.antipode_vec(x);
    let relations = vec![
        ("bc = cb".to_string(), mul(eb, ec) == mul(ec, eb)),
        ("ad = da".into(), mul(ea, ed) == mul(ed, ea)),
        ("ba = -ab".into(), mul(eb, ea) == neg(mul(ea, eb))),
        ("ca = -ac".into(), mul(ec, ea) == neg(mul(ea, ec))),
        ("db = -bd".into(), mul(ed, eb) == neg(mul(eb, ed))),
        ("dc = -cd".into(), mul(ed, ec) == neg(mul(ec, ed))),
        ("ad + bc = 1".into(), sum(mul(ea, ed), mul(eb, ec)) == hm.unit_vec()),
        ("S(a) = d".into(), s(ea) == *ed),
        ("S(b) = b".into(), s(eb) == *eb),
        ("S(c) = c".into(), s(ec) == *ec),
        ("S(d) = a".into(), s(ed) == *ea),
    ];
    Ok(Some(NormalizedRelations { q, relations }))
}
