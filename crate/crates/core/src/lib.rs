//! hopfact: exact construction and verification of finite-dimensional Hopf
//! algebras, Hopf-Ore extensions and partial actions on algebras.
//!
//! Everything is computed over cyclotomic fields Q(zeta_N) with exact
//! rational coordinates, so every check in the crate is a proof for the
//! instance at hand rather than a numerical approximation.

pub mod acceptance;
pub mod algebra;
pub mod derived;
pub mod families;
pub mod format;
pub mod hopf;
pub mod linalg;
pub mod oracle;
pub mod ore;
pub mod paction;
pub mod qcomb;
pub mod rat;
pub mod scalar;

pub use algebra::{AlgElement, FinAlgebra};
pub use hopf::FinHopf;
pub use ore::{HopfOreDatum, TruncatedOre};
pub use paction::{ActionHost, PartialActionMap};
pub use rat::Rat;
pub use scalar::Scalar;
