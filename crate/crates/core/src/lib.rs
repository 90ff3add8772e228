//! Exact Gröbner bases and Gröbner fans for ideals of two-dimensional affine
//! semigroup rings, and the fans of normalized higher Nash blowups of toric
//! surface singularities built from them.
//!
//! The ring machinery is generic over the coefficient field (see
//! [`scalar::Coefficient`]) and the cone geometry over the integer type (see
//! [`scalar::LatticeInt`]). The aliases below fix the exact instantiation used
//! throughout the CLI: `i64` lattice points and `BigRational` coefficients.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod fan;
pub mod figures;
pub mod groebner;
pub mod json;
pub mod lattice;
pub mod nash;
pub mod scalar;
pub mod semigroup;

use num_rational::BigRational;

pub use algebra::{MatrixOrdering, SemigroupPolynomial};
pub use error::{Error, Result};
pub use fan::GroebnerCone;
pub use groebner::{Ideal, MarkedBasis, MarkedPolynomial};
pub use lattice::{cone_from_inequalities, validate_fan, Cone2, Fan2, Vec2};
pub use nash::laurent::LaurentPolynomial;
pub use semigroup::AffineSemigroup;

pub type LatticeVector = Vec2<i64>;
pub type Cone = Cone2<i64>;
pub type Fan = Fan2<i64>;

/// Exact rational coefficients.
pub type Rational = BigRational;
pub type QPolynomial = SemigroupPolynomial<Rational>;
pub type QIdeal = Ideal<Rational>;
pub type QMarkedBasis = MarkedBasis<Rational>;
pub type QGroebnerCone = GroebnerCone<Rational>;
pub type QLaurent = LaurentPolynomial<Rational>;
