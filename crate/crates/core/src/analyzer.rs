//! Theorem-level pipelines. Each re-derives a structural statement about an
//! abstract H from its structure constants; construction metadata is never
//! consulted.

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::groups::FinGroup;
use crate::hopf::{
    exactness_check, group_reconstruct, grouplikes, hk_plus, is_cocentral, is_hopf_subalgebra, is_normal, quotient, quotient_group_algebra, restrict, span,
    subalgebra_generated, HopfAlg, HopfError, Subspace,
};
use crate::reptheory::{fusion_ring, stabilizer_g_chi, ModularView, RepError};
use crate::scalar::{Field, Fp};

#[derive(Debug, Error)]
pub enum AnalyzerError {
    #[error("no 4-dimensional simple subcoalgebra")]
    NoFourDimSubcoalgebra,
    #[error("precondition: {0}")]
    Precondition(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Claim {
    pub claim: String,
    pub pass: bool,
    pub witness: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub instance: String,
    pub claims: Vec<Claim>,
}

impl TheoremReport {
    fn new(theorem: &str, instance: &str) -> TheoremReport {
        TheoremReport { theorem: theorem.into(), instance: instance.into(), claims: Vec::new() }
    }

    fn claim(&mut self, claim: impl Into<String>, pass: bool, witness: Value) {
        self.claims.push(Claim { claim: claim.into(), pass, witness });
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Claim> {
        self.claims.iter().filter(|c| !c.pass).collect()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("### {}: {}\n\n| claim | result | witness |\n|---|---|---|\n", self.theorem, self.instance);
        for c in &self.claims {
            out.push_str(&format!("| {} | {} | `{}` |\n", c.claim, if c.pass { "pass" } else { "FAIL" }, c.witness));
        }
        out
    }
}

/// Index of the simple comodule used as V: a self-dual faithful 2-dim one if
/// there is one, else a faithful 2-dim one, else any 2-dim one.
pub fn locate_two_dim(view: &ModularView) -> Option<usize> {
    let twos: Vec<usize> = (0..view.comodules.blocks.len()).filter(|&i| view.comodules.blocks[i].degree == 2).collect();
    let subs: Vec<(usize, Subspace<Fp>)> = twos.iter().map(|&i| (i, view.subcoalgebra(i))).collect();
    subs.iter()
        .find(|(_, c)| view.is_self_dual(c) && view.generates(c))
        .or_else(|| subs.iter().find(|(_, c)| view.generates(c)))
        .or_else(|| subs.first())
        .map(|(i, _)| *i)
}

/// k[C·S(C)].
fn adjoint_of(h: &HopfAlg<Fp>, c: &Subspace<Fp>) -> Subspace<Fp> {
    let sc: Vec<Vec<Fp>> = c.rows.iter().map(|x| h.antipode_vec(x)).collect();
    let prods: Vec<Vec<Fp>> = c.rows.iter().flat_map(|x| sc.iter().map(move |y| h.mul(x, y))).collect();
    subalgebra_generated(h, &prods)
}

fn group_name(g: &FinGroup) -> String {
    g.catalog_match().unwrap_or_else(|| format!("order {}", g.order()))
}

fn is_dihedral_name(name: &str) -> bool {
    name.strip_prefix('D').is_some_and(|n| n.parse::<usize>().is_ok_and(|n| n >= 3))
}

/// B = k[C𝒮(C)] for a 4-dim simple subcoalgebra C is a commutative Hopf
/// subalgebra k^Γ, and |G[χ]| determines the shape of Γ.
pub fn verify_nr_theorem<F: Field>(h: &HopfAlg<F>, instance: &str, seed: u64) -> Result<TheoremReport, AnalyzerError> {
    let view = ModularView::new(h, seed)?;
    let i = locate_two_dim(&view).ok_or(AnalyzerError::NoFourDimSubcoalgebra)?;
    let hm = &view.h;
    let mut r = TheoremReport::new("nr-theorem", instance);
    let c = view.subcoalgebra(i);
    let b = adjoint_of(hm, &c);
    r.claim("B = k[C S(C)] is a Hopf subalgebra", is_hopf_subalgebra(hm, &b), json!({"dim_B": b.rank()}));
    let hb = restrict(hm, &b)?;
    r.claim("B is commutative", hb.is_commutative(), json!({}));
    let gamma = group_reconstruct(&hb, seed).ok();
    let gname = gamma.as_ref().map(group_name);
    r.claim(
        "B ≅ k^Γ with Γ non-cyclic of even order",
        gamma.as_ref().is_some_and(|g| !g.is_cyclic() && g.order() % 2 == 0),
        json!({"gamma": gname, "order": gamma.as_ref().map(|g| g.order())}),
    );
    let gl = grouplikes(hm, seed)?;
    let stab = stabilizer_g_chi(hm, &gl.modular, view.character(i));
    let k = stab.len();
    r.claim("|G[χ]| divides 4", 4 % k == 0, json!({"G_chi": k}));
    let name = gname.unwrap_or_default();
    let (case, ok) = match k {
        4 => ("(i)", name == "Z2xZ2"),
        2 => ("(ii)", is_dihedral_name(&name) || name == "Z2xZ2"),
        1 => ("(iii)", ["A4", "S4", "A5"].contains(&name.as_str())),
        _ => ("none", false),
    };
    r.claim(format!("case {case}: Γ has the predicted shape"), ok, json!({"case": case, "gamma": name}));
    Ok(r)
}

/// Smallest n with the trivial comodule in V^{⊗n}, by iterated fusion.
fn comodule_order(view: &ModularView, i: usize) -> Result<Option<usize>, RepError> {
    let ring = fusion_ring(view)?;
    let v = ring.index_of_block(i).expect("every block is labeled");
    let r = ring.rank();
    let mut power = vec![0u64; r];
    power[v] = 1;
    for n in 1..=view.h.dim() {
        if power[ring.unit] > 0 {
            return Ok(Some(n));
        }
        let mut next = vec![0u64; r];
        for (a, &m) in power.iter().enumerate() {
            if m > 0 {
                for (c, x) in next.iter_mut().enumerate() {
                    *x = x.saturating_add(m.saturating_mul(ring.n[a][v][c] as u64));
                }
            }
        }
        power = next;
    }
    Ok(None)
}

/// The cocentral abelian exact sequence k → k^Γ → H → kZ_m → k attached to
/// a faithful 2-dim comodule V, with m dividing the order of V.
pub fn verify_short_exact<F: Field>(h: &HopfAlg<F>, instance: &str, seed: u64) -> Result<TheoremReport, AnalyzerError> {
    let view = ModularView::new(h, seed)?;
    let hm = &view.h;
    let i = (0..view.comodules.blocks.len())
        .find(|&i| view.comodules.blocks[i].degree == 2 && view.generates(&view.subcoalgebra(i)))
        .ok_or_else(|| AnalyzerError::Precondition("no faithful 2-dim comodule".into()))?;
    let chi = view.character(i).to_vec();
    let chi_star = hm.antipode_vec(&chi);
    if hm.mul(&chi, &chi_star) != hm.mul(&chi_star, &chi) {
        return Err(AnalyzerError::Precondition("χχ* ≠ χ*χ".into()));
    }
    let mut r = TheoremReport::new("special-situation", instance);
    let coad = adjoint_of(hm, &view.subcoalgebra(i));
    let hb = restrict(hm, &coad)?;
    let gamma = group_reconstruct(&hb, seed).ok();
    r.claim(
        "H_coad = k[C S(C)] is commutative, ≅ k^Γ",
        hb.is_commutative() && gamma.is_some(),
        json!({"dim": coad.rank(), "gamma": gamma.as_ref().map(group_name)}),
    );
    let m = quotient_group_algebra(hm, &coad, seed);
    let Ok(m) = m else {
        r.claim("H/H(H_coad)⁺ is a group algebra kM", false, json!({"error": m.err().map(|e| e.to_string())}));
        return Ok(r);
    };
    let ex = exactness_check(hm, &coad, &m.projection);
    r.claim("k → H_coad → H → kM → k is exact", ex.exact(), serde_json::to_value(&ex).unwrap_or(Value::Null));
    let cocentral = is_cocentral(hm, &m.projection)?;
    r.claim("the projection is cocentral", cocentral, json!({}));
    r.claim("M is cyclic", m.cyclic, json!({"M": group_name(&m.group), "m": m.group.order()}));
    let ord = comodule_order(&view, i)?;
    r.claim(
        "m divides the order of V",
        ord.is_some_and(|o| o % m.group.order() == 0),
        json!({"m": m.group.order(), "order_V": ord}),
    );
    Ok(r)
}

fn is_central(h: &HopfAlg<Fp>, x: &[Fp]) -> bool {
    (0..h.dim()).all(|j| {
        let e = h.basis_vec(j);
        h.mul(x, &e) == h.mul(&e, x)
    })
}

/// H* has a central group-like of order 2 (for cocommutative H the group
/// center is checked as well).
pub fn central_grouplike_checks<F: Field>(h: &HopfAlg<F>, instance: &str, seed: u64) -> Result<TheoremReport, AnalyzerError> {
    let view = ModularView::new(h, seed)?;
    let mut r = TheoremReport::new("central-grouplike", instance);
    let gl = grouplikes(&view.dual, seed)?;
    let g = &gl.group;
    let central: Vec<usize> = (1..g.order()).filter(|&a| g.elem_order(a) == 2 && is_central(&view.dual, &gl.modular[a])).collect();
    let in_dual = !central.is_empty();
    let twos = (0..view.comodules.blocks.len()).filter(|&i| view.comodules.blocks[i].degree == 2);
    let hyp = twos.map(|i| view.subcoalgebra(i)).any(|c| view.is_self_dual(&c) && view.generates(&c));
    if in_dual || hyp {
        r.claim("H* has a central group-like of order 2", in_dual, json!({"G(H*)": group_name(g), "central_order_2": central.len()}));
    } else if !view.h.is_cocommutative() {
        // Only asserted when H is generated by a self-dual 2-dim simple comodule.
        r.claim(
            "no self-dual generating 2-dim comodule: statement not asserted",
            true,
            json!({"G(H*)": group_name(g), "central_order_2": 0, "hypothesis": false}),
        );
    } else {
        let own = grouplikes(&view.h, seed)?;
        let z: Vec<usize> = (1..own.group.order()).filter(|&a| own.group.elem_order(a) == 2 && is_central(&view.h, &own.modular[a])).collect();
        r.claim("H = kG has a central group-like of order 2", !z.is_empty(), json!({"G(H)": group_name(&own.group), "central_order_2": z.len(), "G(H*)": group_name(g)}));
    }
    Ok(r)
}

/// Alternatives (i)/(ii) for the adjoint subalgebra when every simple
/// comodule has degree ≤ 2, and a lower semisolvability chain. When only
/// the modules have degree ≤ 2 the statement is checked on H*.
pub fn degree_two_structure<F: Field>(h: &HopfAlg<F>, instance: &str, seed: u64) -> Result<TheoremReport, AnalyzerError> {
    let view = ModularView::new(h, seed)?;
    let mut r = TheoremReport::new("degree-two", instance);
    if view.comodules.blocks.iter().all(|b| b.degree <= 2) {
        r.claim("every simple comodule has degree ≤ 2", true, json!({"side": "H"}));
        corollary(&view, seed, &mut r)?;
        return Ok(r);
    }
    let dual_view = ModularView::new(&view.dual, seed)?;
    if dual_view.comodules.blocks.iter().all(|b| b.degree <= 2) {
        r.claim("every simple module has degree ≤ 2", true, json!({"side": "H*"}));
        corollary(&dual_view, seed, &mut r)?;
        return Ok(r);
    }
    Err(AnalyzerError::Precondition("simple comodules and modules of degree > 2".into()))
}

fn corollary(view: &ModularView, seed: u64, r: &mut TheoremReport) -> Result<(), AnalyzerError> {
    let hm = &view.h;
    let gl = grouplikes(hm, seed)?;
    let g = &gl.group;
    let twos: Vec<usize> = (0..view.comodules.blocks.len()).filter(|&i| view.comodules.blocks[i].degree == 2).collect();
    let stabs: Vec<Vec<usize>> = twos.iter().map(|&i| stabilizer_g_chi(hm, &gl.modular, view.character(i))).collect();
    let mut b: Subspace<Fp> = span(hm, [hm.unit_vec()]);
    let mut gens = Vec::new();
    for &i in &twos {
        let c = view.subcoalgebra(i);
        gens.extend(adjoint_of(hm, &c).rows);
    }
    if !gens.is_empty() {
        b = subalgebra_generated(hm, &gens);
    }
    let hb = restrict(hm, &b)?;
    let n2 = stabs.iter().filter(|s| s.len() == 2).count();
    let mut gamma: Vec<usize> = vec![0];
    for s in stabs.iter().filter(|s| s.len() == 2) {
        gamma.extend(s.iter().copied());
    }
    let gamma = g.generate(&gamma);
    let kgamma = span(hm, gamma.iter().map(|&a| gl.modular[a].clone()));
    let witness_b = json!({"dim_B": b.rank(), "dim_H": hm.dim()});
    if gamma.len() > 1 {
        let elem2 = gamma.iter().all(|&a| g.elem_order(a) <= 2);
        let m = gamma.len().trailing_zeros() as usize;
        r.claim(
            "(i) Γ generated by the G[χ] of order 2 is elementary abelian, 1 ≤ m ≤ n",
            elem2 && gamma.len().is_power_of_two() && m >= 1 && m <= n2,
            json!({"order": gamma.len(), "m": m, "n": n2}),
        );
        let central_in_b = gamma.iter().all(|&a| b.rows.iter().all(|x| hm.mul(&gl.modular[a], x) == hm.mul(x, &gl.modular[a])));
        r.claim("(i) kΓ is central in B", central_in_b, witness_b.clone());
        let kg_in_b = span(&hb, gamma.iter().map(|&a| b.coords(&gl.modular[a]).expect("G[χ] ⊂ B")));
        let (qb, _) = quotient(&hb, &hk_plus(&hb, &kg_in_b));
        r.claim("(i) B/B(kΓ)⁺ is cocommutative", qb.is_cocommutative(), json!({"dim_quotient": qb.dim()}));
    } else {
        r.claim("(ii) B is cocommutative", hb.is_cocommutative(), witness_b.clone());
        if !hm.is_cocommutative() {
            let gb = grouplikes(&hb, seed)?;
            let ord2: Vec<usize> = (0..gb.group.order()).filter(|&a| gb.group.elem_order(a) == 2).collect();
            r.claim(
                "(ii) 4 divides dim B and G(B) is generated by elements of order 2",
                b.rank() % 4 == 0 && gb.group.generate(&ord2).len() == gb.group.order(),
                json!({"dim_B": b.rank(), "G(B)": group_name(&gb.group)}),
            );
        }
    }
    // lower semisolvability: k ⊂ K ⊂ H with K normal and both factors
    // commutative or cocommutative
    let chain_ok = |k: &Subspace<Fp>| -> Result<bool, AnalyzerError> {
        if !is_normal(hm, k) {
            return Ok(false);
        }
        let hk = restrict(hm, k)?;
        let (q, _) = quotient(hm, &hk_plus(hm, k));
        Ok((hk.is_commutative() || hk.is_cocommutative()) && (q.is_commutative() || q.is_cocommutative()))
    };
    let (chain, ok) = if b.rank() < hm.dim() && chain_ok(&b)? {
        ("k ⊂ B ⊂ H", true)
    } else if gamma.len() > 1 && is_hopf_subalgebra(hm, &kgamma) && chain_ok(&kgamma)? {
        ("k ⊂ kΓ ⊂ H", true)
    } else {
        ("none found", false)
    };
    r.claim("lower semisolvable: explicit chain", ok, json!({"chain": chain}));
    Ok(())
}
