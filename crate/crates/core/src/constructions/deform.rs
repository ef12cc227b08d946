//! Deformations of k^{Γ̃}: the data (θ, τ) on the base group and the
//! distinguished 2-dimensional comodule built from the section into Γ̃.

use super::bicrossed::{bicrossed_build, root};
use super::ConstructionError;
use crate::cocycle::{extension_cocycle, theta_compatible, PhaseCocycle};
use crate::groups::{CentralExt, FinGroup, GroupAut};
use crate::hopf::{function_algebra, group_algebra, HopfAlg, HopfMap};
use crate::scalar::Cyc;

/// A deformation: τ(g,h) = (−1)^{ω(g,h)} ζ_L^{c(g)+c(h)−c(gh)} where ω is
/// the extension cocycle of the section u, so that s ↦ ζ_L^{c(s)} u(s) is a
/// projective representation with factor set τ, and θ*τ = τ⁻¹.
#[derive(Clone, Debug)]
pub struct Deformation {
    pub ext: CentralExt,
    pub theta: GroupAut,
    /// Fibre parameter: the character χ: Γ → Z/m_ab with c + θ*c = (L/2)a + (L/m_ab)χ.
    pub mu: Vec<u32>,
    pub m_ab: u32,
    pub l: u32,
    pub phase: Vec<u32>,
    pub tau: PhaseCocycle,
    pub conductor: u32,
}

impl Deformation {
    pub fn gamma(&self) -> &FinGroup {
        &self.ext.base
    }

    pub fn build(&self) -> Result<HopfAlg<Cyc>, ConstructionError> {
        let mut h = bicrossed_build(&self.ext.base, &self.theta, &self.tau, self.conductor)?;
        if let Some(serde_json::Value::Object(p)) = h.provenance.as_mut() {
            p.insert("gamma".into(), self.ext.base.name.clone().into());
            p.insert("cover".into(), self.ext.cover.name.clone().into());
            p.insert("fibre".into(), serde_json::json!(self.mu));
        }
        Ok(h)
    }

    /// The matrix of the projective representation at s: ζ_L^{ph(s)} u(s).
    pub fn rho(&self, s: usize) -> [Cyc; 4] {
        let c = root(self.conductor, self.l, self.phase[s]);
        let m = &self.ext.matrices[self.ext.section[s]];
        std::array::from_fn(|i| m[i].lift_to(self.conductor).mul(&c))
    }

    /// α_ij = Σ_s ρ(s)_ij e_s#p, in row-major order α11, α12, α21, α22.
    pub fn alpha(&self) -> [Vec<Cyc>; 4] {
        let n = self.ext.base.order();
        let mut out: [Vec<Cyc>; 4] = std::array::from_fn(|_| vec![Cyc::zero(self.conductor); 2 * n]);
        for s in 0..n {
            let r = self.rho(s);
            for k in 0..4 {
                out[k][n + s] = r[k].clone();
            }
        }
        out
    }

    /// ι: k^Γ → H, δ_s ↦ e_s#1.
    pub fn iota(&self, h: &HopfAlg<Cyc>) -> (HopfAlg<Cyc>, HopfMap<Cyc>) {
        let n = self.ext.base.order();
        let src = function_algebra(&self.ext.base, self.conductor);
        let images = (0..n).map(|s| h.basis_vec(s)).collect();
        (src, HopfMap { target: h.clone(), images })
    }

    /// p: H → kZ2, e_s#x ↦ δ_{s,e} x.
    pub fn projection(&self, h: &HopfAlg<Cyc>) -> HopfMap<Cyc> {
        let n = self.ext.base.order();
        let z2 = crate::groups::polyhedral(crate::groups::Kind::Cyclic(2)).expect("Z2");
        let target = group_algebra(&z2, self.conductor);
        let images = (0..h.dim())
            .map(|i| {
                let mut v = target.zero_vec();
                if i % n == 0 {
                    v[i / n] = Cyc::one(self.conductor);
                }
                v
            })
            .collect();
        HopfMap { target, images }
    }
}

pub fn deformation(ext: &CentralExt, theta: &GroupAut, chi: Option<&[u32]>) -> Result<Deformation, ConstructionError> {
    let g = &ext.base;
    if !theta.is_automorphism_of(g) {
        return Err(ConstructionError::NotAutomorphism);
    }
    if !theta.is_involution() {
        return Err(ConstructionError::NotInvolution);
    }
    let w0 = extension_cocycle(ext);
    let tc = theta_compatible(g, &w0, theta).map_err(|_| ConstructionError::NotStabilizable)?;
    let (mu, phase) = match chi {
        None => tc.solutions[0].clone(),
        Some(chi) => tc.solutions.iter().find(|(x, _)| x.as_slice() == chi).cloned().ok_or(ConstructionError::BadFibre)?,
    };
    let tau = tc.tau(g, &w0, &phase);
    if !tau.is_theta_compatible(theta) {
        return Err(ConstructionError::NotThetaCompatible);
    }
    let conductor = num_integer::lcm(ext.conductor, tc.l);
    Ok(Deformation { ext: ext.clone(), theta: theta.clone(), mu, m_ab: tc.m, l: tc.l, phase, tau: tau.simplify(), conductor })
}
