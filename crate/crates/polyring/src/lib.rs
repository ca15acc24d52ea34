//! Exact multivariate polynomial arithmetic over the rationals, together with
//! the Groebner-basis machinery and ideal operations (elimination, intersection,
//! saturation, equality, radical membership) needed for computations in Cox
//! rings and quiver coordinate rings.
//!
//! All arithmetic is exact: coefficients are arbitrary-precision rationals and
//! no rounding happens anywhere. Values are immutable after construction and
//! every operation is a pure function, so they are safe to call from
//! concurrent workers.

pub mod budget;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod lp;
pub mod matrix;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod ring;

pub use budget::Budget;
pub use error::AlgebraError;
pub use groebner::{groebner_basis, is_groebner_basis, normal_form, s_polynomial};
pub use ideal::Ideal;
pub use matrix::QMat;
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use poly::{Coef, Polynomial};
pub use ring::Ring;

/// Convenience alias used throughout: arbitrary-precision integers.
pub type Int = num::BigInt;
