//! The bicrossed product k^Γ τ# kZ2 with trivial left action and σ = 1, and
//! the twisted group algebras k_τΓ.

use serde_json::json;

use super::ConstructionError;
use crate::cocycle::PhaseCocycle;
use crate::groups::{FinGroup, GroupAut};
use crate::hopf::{Algebra, HopfAlg};
use crate::scalar::Cyc;

/// ζ_L^k inside Q(ζ_N).
pub(crate) fn root(conductor: u32, l: u32, k: u32) -> Cyc {
    Cyc::zeta_pow(conductor, (k % l) as i64 * (conductor / l) as i64)
}

fn check_tau(g: &FinGroup, tau: &PhaseCocycle, conductor: u32) -> Result<(), ConstructionError> {
    if tau.n != g.order() || !tau.is_normalized() || !tau.is_cocycle(g) {
        return Err(ConstructionError::BadCocycle);
    }
    if conductor % tau.l != 0 {
        return Err(ConstructionError::Conductor { conductor, needed: tau.l });
    }
    Ok(())
}

/// Basis e_s#1 (indices 0..n) and e_s#p (indices n..2n).
///
/// (e_s#x)(e_t#y) = δ_{θ^x(s),t} e_s#xy, Δ(e_s#x) = Σ_{gh=s} τ_x(g,h) e_g#x ⊗ e_h#x
/// with τ_1 ≡ 1, τ_p = `tau`, and S(e_g#x) = τ_x(g⁻¹,g)⁻¹ e_{(θ^x g)⁻¹}#x.
pub fn bicrossed_build(g: &FinGroup, theta: &GroupAut, tau: &PhaseCocycle, conductor: u32) -> Result<HopfAlg<Cyc>, ConstructionError> {
    if !theta.is_automorphism_of(g) {
        return Err(ConstructionError::NotAutomorphism);
    }
    if !theta.is_involution() {
        return Err(ConstructionError::NotInvolution);
    }
    check_tau(g, tau, conductor)?;
    if !tau.is_theta_compatible(theta) {
        return Err(ConstructionError::NotThetaCompatible);
    }
    let n = g.order();
    let d = 2 * n;
    let one = Cyc::one(conductor);
    let zero = Cyc::zero(conductor);
    let act = |s: usize, x: usize| if x == 0 { s } else { theta.apply(s) };
    let tau_x = |x: usize, a: usize, b: usize| if x == 0 { 0 } else { tau.get(a, b) };

    let mut mult = vec![Vec::new(); d * d];
    for x in 0..2 {
        for s in 0..n {
            let t = act(s, x);
            for y in 0..2 {
                mult[(x * n + s) * d + y * n + t].push(((((x + y) % 2) * n + s) as u32, one.clone()));
            }
        }
    }
    let mut comult = vec![Vec::new(); d];
    for x in 0..2 {
        for a in 0..n {
            for b in 0..n {
                let c = root(conductor, tau.l, tau_x(x, a, b));
                comult[x * n + g.mul(a, b)].push(((x * n + a) as u32, (x * n + b) as u32, c));
            }
        }
    }
    for t in comult.iter_mut() {
        t.sort_by_key(|(a, b, _)| (*a, *b));
    }
    let antipode = (0..d)
        .map(|i| {
            let (x, s) = (i / n, i % n);
            let c = root(conductor, tau.l, tau.l - tau_x(x, g.inv(s), s));
            vec![((x * n + g.inv(act(s, x))) as u32, c)]
        })
        .collect();
    let basis = (0..d).map(|i| format!("e[{}]#{}", g.labels[i % n], if i < n { "1" } else { "p" })).collect();
    let unit = (0..d).map(|i| if i < n { one.clone() } else { zero.clone() }).collect();
    let counit = (0..d).map(|i| if i % n == g.identity() { one.clone() } else { zero.clone() }).collect();
    Ok(HopfAlg {
        ctx: conductor,
        basis,
        mult,
        comult,
        unit,
        counit,
        antipode,
        provenance: Some(json!({
            "gamma": g.name,
            "theta": theta.0,
            "omega": {"roots_of_unity": tau.l, "table": tau.table},
        })),
    })
}

/// k_τΓ: basis u_s with u_s u_t = τ(s,t) u_{st}.
pub fn twisted_group_algebra(g: &FinGroup, tau: &PhaseCocycle, conductor: u32) -> Result<Algebra<Cyc>, ConstructionError> {
    check_tau(g, tau, conductor)?;
    let n = g.order();
    let mut mult = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mult.push(vec![(g.mul(a, b) as u32, root(conductor, tau.l, tau.get(a, b)))]);
        }
    }
    let unit = (0..n).map(|a| if a == g.identity() { Cyc::one(conductor) } else { Cyc::zero(conductor) }).collect();
    Ok(Algebra { ctx: conductor, basis: g.labels.iter().map(|l| format!("u[{l}]")).collect(), mult, unit })
}
