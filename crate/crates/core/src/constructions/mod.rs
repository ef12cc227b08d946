//! Builders: bicrossed products k^Γ τ# kZ2, the named catalog of
//! deformations of k^{Γ̃}, enumeration over involutions of Γ, and twists of
//! group algebras.

mod bicrossed;
mod catalog;
mod deform;
mod enumerate;
mod twist;

use thiserror::Error;

use crate::cocycle::CocycleError;
use crate::groups::GroupError;
use crate::hopf::HopfError;

pub use bicrossed::{bicrossed_build, twisted_group_algebra};
pub use catalog::{catalog, catalog_names, conjugation_by, Family, CatalogEntry};
pub use deform::{deformation, Deformation};
pub use enumerate::{deformation_filter, enumerate_deformations, Candidate, Enumeration, Outcome};
pub use twist::{twist_group_algebra, KleinForm};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("map is not an automorphism of Γ")]
    NotAutomorphism,
    #[error("θ is not an involution")]
    NotInvolution,
    #[error("τ is not a normalized 2-cocycle on Γ")]
    BadCocycle,
    #[error("τ is not compatible with θ: θ*τ ≠ τ⁻¹")]
    NotThetaCompatible,
    #[error("conductor {conductor} does not contain the roots of unity of order {needed}")]
    Conductor { conductor: u32, needed: u32 },
    #[error("no Bockstein shift makes the extension class θ-stable")]
    NotStabilizable,
    #[error("fibre parameter is not a θ-invariant character")]
    BadFibre,
    #[error("subgroup is not a Klein four-group")]
    NotKlein,
    #[error("twisting form is degenerate")]
    Degenerate,
    #[error("cyclic base groups are excluded")]
    CyclicBase,
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}
