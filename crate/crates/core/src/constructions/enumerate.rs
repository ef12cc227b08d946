//! Enumeration of the deformations of k^{Γ̃} over a base group Γ: one
//! candidate per Aut(Γ)-class of involutions θ and per orbit of the
//! centralizer of θ on the fibre Γ̂^θ / {λ·θ*λ}.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::deform::{deformation, Deformation};
use super::ConstructionError;
use crate::cocycle::{extension_cocycle, linear_characters, phase_coboundary_solve, theta_compatible};
use crate::groups::{automorphisms, binary_cover, fixed_points, order2_classes, CentralExt, FinGroup, GroupAut, Kind};
use crate::hopf::HopfAlg;
use crate::reptheory::ModularView;
use crate::scalar::Cyc;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Outcome {
    Pass,
    Commutative,
    NotStabilizable,
    NoTwoDimComodule,
    NoSelfDualTwoDim,
    NotGenerating,
    Failed(String),
}

impl Outcome {
    pub fn reason(&self) -> String {
        match self {
            Outcome::Pass => "pass".into(),
            Outcome::Commutative => "commutative".into(),
            Outcome::NotStabilizable => "cocycle class not θ-stable".into(),
            Outcome::NoTwoDimComodule => "no 2-dim simple comodule".into(),
            Outcome::NoSelfDualTwoDim => "no self-dual 2-dim".into(),
            Outcome::NotGenerating => "no self-dual 2-dim comodule generates H".into(),
            Outcome::Failed(e) => format!("error: {e}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Candidate {
    /// Smallest element of the Aut-class of θ.
    pub theta: GroupAut,
    pub class_size: usize,
    pub fixed_order: usize,
    pub mu: Vec<u32>,
    pub orbit_size: usize,
    pub deformation: Option<Deformation>,
    pub hopf: Option<HopfAlg<Cyc>>,
    pub outcome: Outcome,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub kind: Kind,
    pub candidates: Vec<Candidate>,
}

impl Enumeration {
    pub fn passing(&self) -> Vec<&Candidate> {
        self.candidates.iter().filter(|c| c.outcome == Outcome::Pass).collect()
    }
}

/// μ + N(Γ̂) in canonical form: the smallest coset element.
fn coset_key(mu: &[u32], norms: &[Vec<u32>], m: u32) -> Vec<u32> {
    norms.iter().map(|nu| mu.iter().zip(nu).map(|(a, b)| (a + b) % m).collect::<Vec<u32>>()).min().unwrap_or_else(|| mu.to_vec())
}

/// Fibre parameters χ up to N(Γ̂), one per orbit of the centralizer of θ,
/// with orbit sizes.
fn fibre_orbits(ext: &CentralExt, theta: &GroupAut, auts: &[GroupAut]) -> Result<Vec<(Vec<u32>, usize)>, ConstructionError> {
    let g = &ext.base;
    let w0 = extension_cocycle(ext);
    let tc = theta_compatible(g, &w0, theta).map_err(|_| ConstructionError::NotStabilizable)?;
    let m = tc.m;
    let (_, chars) = linear_characters(g);
    let mut norms: Vec<Vec<u32>> = chars.iter().map(|l| g.elements().map(|s| (l[s] + l[theta.apply(s)]) % m).collect()).collect();
    norms.sort();
    norms.dedup();
    let chi0 = &tc.solutions[0].0;
    let rel = |chi: &[u32]| -> Vec<u32> { chi.iter().zip(chi0).map(|(a, b)| (a + m - b) % m).collect() };
    // one representative χ per class of χ − χ0 modulo norms
    let mut reps: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
    for (chi, _) in &tc.solutions {
        reps.entry(coset_key(&rel(chi), &norms, m)).or_insert_with(|| chi.clone());
    }
    if reps.len() == 1 {
        return Ok(vec![(chi0.clone(), 1)]);
    }
    let base = deformation(ext, theta, Some(chi0))?;
    let base_tau = base.tau.lift(base.l);
    let cent: Vec<&GroupAut> = auts.iter().filter(|a| a.compose(theta) == theta.compose(a)).collect();
    let mut orbit_of: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut orbits: Vec<(Vec<u32>, usize)> = Vec::new();
    for (key, chi) in &reps {
        if orbit_of.contains_key(key) {
            continue;
        }
        let d = deformation(ext, theta, Some(chi))?;
        let idx = orbits.len();
        let mut size = 0;
        for phi in &cent {
            // φ*τ = τ0·δb, and the class of φ*τ is b + θ*b modulo norms
            let beta = d.tau.lift(d.l).pullback(phi).mul(&base_tau.inverse());
            let (l, b) = phase_coboundary_solve(g, &beta).ok_or(ConstructionError::BadFibre)?;
            let image: Vec<u32> = g.elements().map(|s| ((b[s] + b[theta.apply(s)]) % l) * m / l).collect();
            if orbit_of.insert(coset_key(&image, &norms, m), idx).is_none() {
                size += 1;
            }
        }
        orbits.push((chi.clone(), size));
    }
    Ok(orbits)
}

/// The 2-dim self-dual faithful comodule test, evaluated mod q.
pub fn deformation_filter(h: &HopfAlg<Cyc>, seed: u64) -> Outcome {
    if h.is_commutative() {
        return Outcome::Commutative;
    }
    let view = match ModularView::new(h, seed) {
        Ok(v) => v,
        Err(e) => return Outcome::Failed(e.to_string()),
    };
    let twos: Vec<usize> = (0..view.comodules.blocks.len()).filter(|&i| view.comodules.blocks[i].degree == 2).collect();
    if twos.is_empty() {
        return Outcome::NoTwoDimComodule;
    }
    let self_dual: Vec<_> = twos.iter().map(|&i| view.subcoalgebra(i)).filter(|c| view.is_self_dual(c)).collect();
    if self_dual.is_empty() {
        return Outcome::NoSelfDualTwoDim;
    }
    if self_dual.iter().any(|c| view.generates(c)) {
        Outcome::Pass
    } else {
        Outcome::NotGenerating
    }
}

pub fn enumerate_deformations(kind: Kind, seed: u64) -> Result<Enumeration, ConstructionError> {
    if matches!(kind, Kind::Cyclic(_)) {
        return Err(ConstructionError::CyclicBase);
    }
    let ext = binary_cover(kind, None)?;
    enumerate_over(&ext, seed).map(|candidates| Enumeration { kind, candidates })
}

fn enumerate_over(ext: &CentralExt, seed: u64) -> Result<Vec<Candidate>, ConstructionError> {
    let g: &FinGroup = &ext.base;
    let auts = automorphisms(g)?;
    let mut work = Vec::new();
    for cls in order2_classes(&auts) {
        let theta = cls[0].clone();
        let fixed_order = fixed_points(g, &theta).len();
        match fibre_orbits(ext, &theta, &auts) {
            Ok(orbits) => {
                for (mu, orbit_size) in orbits {
                    work.push((theta.clone(), cls.len(), fixed_order, mu, orbit_size));
                }
            }
            Err(ConstructionError::NotStabilizable) => work.push((theta.clone(), cls.len(), fixed_order, vec![], 0)),
            Err(e) => return Err(e),
        }
    }
    let out = work
        .into_par_iter()
        .map(|(theta, class_size, fixed_order, mu, orbit_size)| {
            let mut c = Candidate { theta: theta.clone(), class_size, fixed_order, mu: mu.clone(), orbit_size, deformation: None, hopf: None, outcome: Outcome::NotStabilizable };
            if mu.is_empty() {
                return c;
            }
            match deformation(ext, &theta, Some(&mu)).and_then(|d| d.build().map(|h| (d, h))) {
                Ok((d, h)) => {
                    c.outcome = deformation_filter(&h, seed);
                    c.deformation = Some(d);
                    c.hopf = Some(h);
                }
                Err(ConstructionError::NotStabilizable) => c.outcome = Outcome::NotStabilizable,
                Err(e) => c.outcome = Outcome::Failed(e.to_string()),
            }
            c
        })
        .collect();
    Ok(out)
}
