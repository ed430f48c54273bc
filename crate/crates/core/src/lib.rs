//! Higher Specht polynomials over the rationals, the graded quotients they
//! descend to, and the symmetric-function side used to check characters.
//!
//! Tableaux are stored in French notation: `rows()[0]` is the bottom row.
//! Variables are 0-based, so `x1` in printed polynomials is index 0.

pub mod error;
pub mod linalg;
pub mod polyring;
pub mod quotient;
pub mod rational;
pub mod specht;
pub mod symfunc;
pub mod tableaux;

pub use error::{Error, Result};
pub use rational::Rational;
pub use tableaux::{Partition, Tableau, Word};
