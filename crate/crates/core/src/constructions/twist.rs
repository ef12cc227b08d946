//! Twists (kG)^J of group algebras by J lifted from a Klein four-subgroup.

use std::collections::BTreeMap;

use serde_json::json;

use super::ConstructionError;
use crate::groups::FinGroup;
use crate::hopf::{group_algebra, HopfAlg};
use crate::scalar::{Cyc, Rat};

/// σ(x, y) = (−1)^{xᵀ B y} on Â ≅ F2², x = (i, j) for χ(a1^u a2^v) = (−1)^{iu + jv}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KleinForm(pub [[u8; 2]; 2]);

impl KleinForm {
    /// (−1)^{x1 y2}: alternating part (−1)^{x1 y2 + x2 y1}, which is nondegenerate.
    pub const STANDARD: KleinForm = KleinForm([[0, 1], [0, 0]]);
    pub const TRIVIAL: KleinForm = KleinForm([[0, 0], [0, 0]]);

    fn value(&self, x: [u8; 2], y: [u8; 2]) -> u8 {
        let b = &self.0;
        (x[0] * (b[0][0] * y[0] + b[0][1] * y[1]) + x[1] * (b[1][0] * y[0] + b[1][1] * y[1])) % 2
    }

    pub fn is_nondegenerate(&self) -> bool {
        (self.0[0][1] + self.0[1][0]) % 2 == 1
    }
}

/// J = Σ_{χ,ψ} σ(χ,ψ) e_χ ⊗ e_ψ expanded as Σ j(a,b) a ⊗ b over A×A, with
/// A listed as [e, a1, a2, a1a2].
fn twist_coefficients(form: &KleinForm) -> [[Rat; 4]; 4] {
    let bits = |k: usize| [(k & 1) as u8, ((k >> 1) & 1) as u8];
    let chi = |x: [u8; 2], a: [u8; 2]| if (x[0] * a[0] + x[1] * a[1]) % 2 == 0 { 1 } else { -1 };
    std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            let mut s = 0i64;
            for x in 0..4 {
                for y in 0..4 {
                    let sign = if form.value(bits(x), bits(y)) == 0 { 1 } else { -1 };
                    // e_χ = (1/4) Σ χ(a⁻¹) a, and a⁻¹ = a in A
                    s += sign * chi(bits(x), bits(a)) * chi(bits(y), bits(b));
                }
            }
            Rat::new(s, 16)
        })
    })
}

/// (kG)^J with Δ_J = J Δ J⁻¹ and S_J = U S U⁻¹, U = J¹S(J²).
pub fn twist_group_algebra(g: &FinGroup, a1: usize, a2: usize, form: KleinForm, conductor: u32) -> Result<HopfAlg<Cyc>, ConstructionError> {
    let is_klein = a1 != a2
        && a1 != 0
        && a2 != 0
        && g.elem_order(a1) == 2
        && g.elem_order(a2) == 2
        && g.mul(a1, a2) == g.mul(a2, a1);
    if !is_klein {
        return Err(ConstructionError::NotKlein);
    }
    if form != KleinForm::TRIVIAL && !form.is_nondegenerate() {
        return Err(ConstructionError::Degenerate);
    }
    let elems = [0, a1, a2, g.mul(a1, a2)];
    let j = twist_coefficients(&form);
    let c = |r: &Rat| Cyc::rational(conductor, r.clone());
    // σ takes values ±1, so J² = 1⊗1 and J⁻¹ = J.
    let jt: Vec<(usize, usize, Rat)> = (0..4).flat_map(|x| (0..4).map(move |y| (x, y))).filter(|&(x, y)| !j[x][y].is_zero()).map(|(x, y)| (elems[x], elems[y], j[x][y].clone())).collect();
    let mut h = group_algebra(g, conductor);
    for s in g.elements() {
        let mut acc: BTreeMap<(u32, u32), Rat> = BTreeMap::new();
        for (a, b, x) in &jt {
            let (l, r) = (g.mul(*a, s), g.mul(*b, s));
            for (cc, d, y) in &jt {
                let key = (g.mul(l, *cc) as u32, g.mul(r, *d) as u32);
                let v = acc.entry(key).or_default();
                *v = v.add(&x.mul(y));
            }
        }
        h.comult[s] = acc.into_iter().filter(|(_, v)| !v.is_zero()).map(|((x, y), v)| (x, y, c(&v))).collect();
    }
    // U = Σ j(a,b) a b⁻¹ and U⁻¹ = Σ j(a,b) a⁻¹ b lie in kA.
    let u: Vec<(usize, Rat)> = jt.iter().map(|(a, b, x)| (g.mul(*a, g.inv(*b)), x.clone())).collect();
    let u_inv: Vec<(usize, Rat)> = jt.iter().map(|(a, b, x)| (g.mul(g.inv(*a), *b), x.clone())).collect();
    for s in g.elements() {
        let si = g.inv(s);
        let terms = u.iter().flat_map(|(x, cx)| u_inv.iter().map(move |(y, cy)| (g.mul(g.mul(*x, si), *y) as u32, cx.mul(cy))));
        let mut acc: BTreeMap<u32, Rat> = BTreeMap::new();
        for (k, v) in terms {
            let e = acc.entry(k).or_default();
            *e = e.add(&v);
        }
        h.antipode[s] = acc.into_iter().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (k, c(&v))).collect();
    }
    h.provenance = Some(json!({
        "group_algebra": g.name,
        "twist": {"klein": [g.labels[a1].clone(), g.labels[a2].clone()], "form": form.0},
    }));
    Ok(h)
}
