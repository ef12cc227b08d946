//! Group algebras kG and function algebras k^G.

use super::HopfAlg;
use crate::groups::FinGroup;
use crate::scalar::Cyc;

pub fn group_algebra(g: &FinGroup, conductor: u32) -> HopfAlg<Cyc> {
    let n = g.order();
    let one = Cyc::one(conductor);
    let mut mult = Vec::with_capacity(n * n);
    for a in g.elements() {
        for b in g.elements() {
            mult.push(vec![(g.mul(a, b) as u32, one.clone())]);
        }
    }
    HopfAlg {
        ctx: conductor,
        basis: g.labels.clone(),
        mult,
        comult: g.elements().map(|a| vec![(a as u32, a as u32, one.clone())]).collect(),
        unit: (0..n).map(|a| if a == g.identity() { one.clone() } else { Cyc::zero(conductor) }).collect(),
        counit: vec![one.clone(); n],
        antipode: g.elements().map(|a| vec![(g.inv(a) as u32, one.clone())]).collect(),
        provenance: Some(serde_json::json!({"group_algebra": g.name})),
    }
}

/// k^G in the basis of point indicators δ_s.
pub fn function_algebra(g: &FinGroup, conductor: u32) -> HopfAlg<Cyc> {
    let n = g.order();
    let one = Cyc::one(conductor);
    let mut mult = vec![Vec::new(); n * n];
    for a in g.elements() {
        mult[a * n + a].push((a as u32, one.clone()));
    }
    let mut comult = vec![Vec::new(); n];
    for a in g.elements() {
        for b in g.elements() {
            comult[g.mul(a, b)].push((a as u32, b as u32, one.clone()));
        }
    }
    for t in comult.iter_mut() {
        t.sort_by_key(|(a, b, _)| (*a, *b));
    }
    HopfAlg {
        ctx: conductor,
        basis: g.labels.iter().map(|l| format!("δ({l})")).collect(),
        mult,
        comult,
        unit: vec![one.clone(); n],
        counit: (0..n).map(|a| if a == g.identity() { one.clone() } else { Cyc::zero(conductor) }).collect(),
        antipode: g.elements().map(|a| vec![(g.inv(a) as u32, one.clone())]).collect(),
        provenance: Some(serde_json::json!({"function_algebra": g.name})),
    }
}

