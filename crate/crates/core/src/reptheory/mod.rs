//! Representation theory: decomposition mod q, characters, fusion rings,
//! Frobenius–Schur indicators and invariant forms.

pub mod character;
pub mod decompose;
pub mod forms;
pub mod fusion;
pub mod modular;

use thiserror::Error;

pub use decompose::{decompose, irrep, Block, Decomposition, Irrep};
pub use character::{algebra_type, coalgebra_type, modularize, simple_characters, stabilizer_g_chi, Character, TypeMultiset};
pub use forms::{be_relations_check, comodule_matrix, fs_indicator, invariant_form, FormKind, HMatrix, InvariantForm, Sl2Report};
pub use fusion::{fusion_iso, fusion_ring, FusionRing};
pub use modular::ModularView;

#[derive(Debug, Error)]
pub enum RepError {
    #[error("prime {0} divides the dimension")]
    BadPrime(u64),
    #[error("algebra does not split over F_q: {0}")]
    NotSplit(String),
    #[error("no splitting element after {0} tries")]
    SplitFailed(usize),
    #[error("{0}")]
    Hopf(String),
    #[error("precondition: {0}")]
    Precondition(String),
    #[error("cannot parse type {0:?}")]
    Parse(String),
    #[error("fusion: {0}")]
    Fusion(String),
    #[error("indicator: {0}")]
    Indicator(String),
}
