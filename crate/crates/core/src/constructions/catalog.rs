//! Named instances.
//!
//! `A2X` / `B2X` for X ∈ {T, O, I}: θ is conjugation by (1 2), resp.
//! (1 2)(3 4). For X = Dn the passing candidates of the enumeration are
//! labelled A, B in order of (θ, fibre); D2 has a single one, also named H8.
//! `FUN2X` = k^{X̃}, `GRP2X` = kX̃, `TWA5` and `TWD3D5` are twists.

use super::deform::Deformation;
use super::enumerate::enumerate_deformations;
use super::twist::{twist_group_algebra, KleinForm};
use super::ConstructionError;
use crate::groups::{binary_cover, find_label, permutations_of, polyhedral, CentralExt, FinGroup, GroupAut, Kind};
use crate::hopf::{function_algebra, group_algebra, HopfAlg, HopfMap};
use crate::scalar::Cyc;

#[derive(Clone, Debug)]
pub enum Family {
    Deformation(Box<Deformation>),
    Function(Box<CentralExt>),
    Group(Box<CentralExt>),
    Twist,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub hopf: HopfAlg<Cyc>,
    /// α11, α12, α21, α22 of the distinguished 2-dim comodule.
    pub alpha: Option<[Vec<Cyc>; 4]>,
    /// k^Γ and ι: k^Γ → H.
    pub iota: Option<(HopfAlg<Cyc>, HopfMap<Cyc>)>,
    /// H → kZ2 (or k^{Z2} ≅ kZ2 for function algebras).
    pub projection: Option<HopfMap<Cyc>>,
    pub family: Family,
}

impl CatalogEntry {
    pub fn kind(&self) -> Option<Kind> {
        match &self.family {
            Family::Deformation(d) => Some(d.ext.kind),
            Family::Function(e) | Family::Group(e) => Some(e.kind),
            Family::Twist => None,
        }
    }

    pub fn is_deformation(&self) -> bool {
        matches!(self.family, Family::Deformation(_))
    }

    /// The base group Γ = Γ̃/{±1}, where defined.
    pub fn gamma(&self) -> Option<&FinGroup> {
        match &self.family {
            Family::Deformation(d) => Some(&d.ext.base),
            Family::Function(e) | Family::Group(e) => Some(&e.base),
            Family::Twist => None,
        }
    }
}

/// Names accepted by `catalog`, in a fixed order.
pub fn catalog_names() -> Vec<String> {
    let mut v = vec!["H8".to_string(), "A2D2".into()];
    for n in 3..=8 {
        v.push(format!("A2D{n}"));
        v.push(format!("B2D{n}"));
    }
    v.extend(["A2T", "B2T", "A2O", "B2O", "B2I", "FUN2T", "FUN2O", "FUN2I", "GRP2T", "GRP2O", "GRP2I", "TWA5", "TWD3D5"].map(String::from));
    v
}

/// θ(x) = π x π⁻¹ on a permutation model, π an involution given in cycle notation.
pub fn conjugation_by(kind: Kind, pi: &[(u8, u8)]) -> Result<GroupAut, ConstructionError> {
    let perms = permutations_of(kind).ok_or(ConstructionError::NotAutomorphism)?;
    let k = perms[0].len();
    let mut p: Vec<u8> = (0..k as u8).collect();
    for &(a, b) in pi {
        p.swap(a as usize - 1, b as usize - 1);
    }
    let conj = |x: &Vec<u8>| -> Vec<u8> { (0..k).map(|i| p[x[p[i] as usize] as usize]).collect() };
    let map = perms.iter().map(|x| perms.iter().position(|y| *y == conj(x)).ok_or(ConstructionError::NotAutomorphism)).collect::<Result<Vec<_>, _>>()?;
    Ok(GroupAut(map))
}

fn parse_kind(s: &str) -> Option<Kind> {
    match s {
        "T" => Some(Kind::Tetra),
        "O" => Some(Kind::Octa),
        "I" => Some(Kind::Icosa),
        _ => {
            let n: usize = s.strip_prefix('D')?.parse().ok()?;
            (n >= 2).then_some(Kind::Dihedral(n))
        }
    }
}

fn from_deformation(name: &str, d: Deformation, h: HopfAlg<Cyc>) -> CatalogEntry {
    let iota = d.iota(&h);
    let projection = d.projection(&h);
    CatalogEntry { name: name.into(), alpha: Some(d.alpha()), iota: Some(iota), projection: Some(projection), hopf: h, family: Family::Deformation(Box::new(d)) }
}

fn dihedral_deformation(name: &str, n: usize, which: usize, seed: u64) -> Result<CatalogEntry, ConstructionError> {
    let en = enumerate_deformations(Kind::Dihedral(n), seed)?;
    let mut pass: Vec<_> = en.candidates.into_iter().filter(|c| c.outcome == super::Outcome::Pass).collect();
    pass.sort_by(|a, b| (&a.theta, &a.mu).cmp(&(&b.theta, &b.mu)));
    let c = pass.into_iter().nth(which).ok_or_else(|| ConstructionError::UnknownName(name.into()))?;
    Ok(from_deformation(name, c.deformation.expect("passing candidate"), c.hopf.expect("passing candidate")))
}

/// k^{Γ̃} with α from the defining 2×2 matrices, ι: k^Γ → k^{Γ̃} by pullback
/// and the restriction k^{Γ̃} → k^{{±1}}.
fn function_entry(name: &str, ext: CentralExt) -> CatalogEntry {
    let nc = ext.conductor;
    let cover = &ext.cover;
    let mut h = function_algebra(cover, nc);
    h.provenance = Some(serde_json::json!({"function_algebra": cover.name, "gamma": ext.base.name}));
    let d = cover.order();
    let alpha: [Vec<Cyc>; 4] = std::array::from_fn(|k| (0..d).map(|g| ext.matrices[g][k].clone()).collect());
    let base = function_algebra(&ext.base, nc);
    let images = (0..ext.base.order())
        .map(|s| (0..d).map(|g| if ext.proj[g] == s { Cyc::one(nc) } else { Cyc::zero(nc) }).collect())
        .collect();
    let iota = (base, HopfMap { target: h.clone(), images });
    let center = crate::groups::FinGroup::from_table("Z2", vec!["e".into(), "z".into()], vec![0, 1, 1, 0]);
    let target = function_algebra(&center, nc);
    let images = (0..d)
        .map(|g| {
            let mut v = target.zero_vec();
            if g == 0 {
                v[0] = Cyc::one(nc);
            } else if g == ext.z {
                v[1] = Cyc::one(nc);
            }
            v
        })
        .collect();
    let projection = HopfMap { target, images };
    CatalogEntry { name: name.into(), hopf: h, alpha: Some(alpha), iota: Some(iota), projection: Some(projection), family: Family::Function(Box::new(ext)) }
}

pub fn catalog(name: &str, seed: u64) -> Result<CatalogEntry, ConstructionError> {
    let unknown = || ConstructionError::UnknownName(name.into());
    if name == "H8" {
        let mut e = dihedral_deformation("H8", 2, 0, seed)?;
        e.name = "H8".into();
        return Ok(e);
    }
    if name == "TWA5" {
        let g = polyhedral(Kind::Icosa)?;
        let a1 = find_label(&g, "(1 2)(3 4)").ok_or_else(unknown)?;
        let a2 = find_label(&g, "(1 3)(2 4)").ok_or_else(unknown)?;
        let h = twist_group_algebra(&g, a1, a2, KleinForm::STANDARD, 1)?;
        return Ok(CatalogEntry { name: name.into(), hopf: h, alpha: None, iota: None, projection: None, family: Family::Twist });
    }
    if name == "TWD3D5" {
        let d3 = polyhedral(Kind::Dihedral(3))?;
        let d5 = polyhedral(Kind::Dihedral(5))?;
        let g = d3.direct_product(&d5);
        let a1 = find_label(&g, "(s,e)").ok_or_else(unknown)?;
        let a2 = find_label(&g, "(e,s)").ok_or_else(unknown)?;
        let h = twist_group_algebra(&g, a1, a2, KleinForm::STANDARD, 1)?;
        return Ok(CatalogEntry { name: name.into(), hopf: h, alpha: None, iota: None, projection: None, family: Family::Twist });
    }
    if let Some(rest) = name.strip_prefix("FUN2") {
        let ext = binary_cover(parse_kind(rest).ok_or_else(unknown)?, None)?;
        return Ok(function_entry(name, ext));
    }
    if let Some(rest) = name.strip_prefix("GRP2") {
        let ext = binary_cover(parse_kind(rest).ok_or_else(unknown)?, None)?;
        let mut h = group_algebra(&ext.cover, ext.conductor);
        h.provenance = Some(serde_json::json!({"group_algebra": ext.cover.name, "gamma": ext.base.name}));
        return Ok(CatalogEntry { name: name.into(), hopf: h, alpha: None, iota: None, projection: None, family: Family::Group(Box::new(ext)) });
    }
    let (label, rest) = (name.get(..2).ok_or_else(unknown)?, name.get(2..).ok_or_else(unknown)?);
    let which = match label {
        "A2" => 0,
        "B2" => 1,
        _ => return Err(unknown()),
    };
    let kind = parse_kind(rest).ok_or_else(unknown)?;
    match kind {
        Kind::Dihedral(n) => dihedral_deformation(name, n, if n == 2 { 0 } else { which }, seed),
        Kind::Icosa if which == 0 => Err(unknown()),
        _ => {
            let pi: &[(u8, u8)] = if which == 0 { &[(1, 2)] } else { &[(1, 2), (3, 4)] };
            let theta = conjugation_by(kind, pi)?;
            let ext = binary_cover(kind, None)?;
            let d = super::deform::deformation(&ext, &theta, None)?;
            let h = d.build()?;
            Ok(from_deformation(name, d, h))
        }
    }
}
