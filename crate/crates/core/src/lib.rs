//! Exact computations on tensor squares of adjoint modules.
//!
//! Everything here works over the rationals: root systems and the Weyl
//! dimension formula, closed-form dimension expressions, Casimir and
//! split-Casimir spectra, explicit matrix realizations of small classical
//! algebras, a Freudenthal-based character oracle, and the tensor-square
//! criterion for highest weight vectors.

pub mod casdecomp;
pub mod dimform;
pub mod error;
pub mod hwv;
pub mod linalg;
pub mod matrep;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod rootsys;

pub use error::{Error, Result};
pub use rational::Q;
pub use rootsys::{AlgebraId, Family, RootSystem, Weight};
