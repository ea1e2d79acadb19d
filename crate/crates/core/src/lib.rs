//! Finite-dimensional weak bialgebras and weak Hopf algebras over exact fields.
pub mod cyclic;
pub mod double;
pub mod error;
pub mod field;
pub mod format;
pub mod grouplikes;
pub mod hopf_modules;
pub mod integrals;
pub mod linalg;
pub mod modules;
pub mod radford;
pub mod report;
pub mod tensor;
pub mod wba;
pub mod wha;
pub mod zoo;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, Fp, QSqrt, Rational};
pub use report::{Check, Report};
pub use wba::{Arrow, Side, WeakBialgebra};
pub use wha::WeakHopfAlgebra;

/// The rationals.
pub type Q = Rational;
pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
/// Q(√2).
pub type Q2 = QSqrt<2>;
