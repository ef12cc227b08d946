//! Exact computations with finite-dimensional Hopf algebras: polyhedral
//! groups and their binary covers, bicrossed-product deformations, and
//! the representation theory used to classify them.

pub mod analyzer;
pub mod cocycle;
pub mod constructions;
pub mod groups;
pub mod hopf;
pub mod linalg;
pub mod reptheory;
pub mod scalar;
