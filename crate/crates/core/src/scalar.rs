//! Scalar traits the geometry and algebra layers are generic over.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Num, Signed};

/// Exact integer type usable for lattice coordinates (`i64`, `BigInt`, ...).
pub trait LatticeInt: Integer + Signed + Clone + Debug + Display + Hash + Send + Sync + 'static {}

impl<T> LatticeInt for T where T: Integer + Signed + Clone + Debug + Display + Hash + Send + Sync + 'static {}

/// Coefficient field of a semigroup ring.
///
/// The Gröbner engine only ever tests coefficients against zero and divides by
/// leading coefficients, so any field works. Exact rationals are the intended
/// instantiation; `f64` satisfies the bounds but cancellation is then only as
/// good as floating point allows.
pub trait Coefficient:
    Num + Clone + Debug + Display + PartialEq + FromPrimitive + std::ops::Neg<Output = Self> + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer coefficient out of range")
    }
}

impl<T> Coefficient for T where
    T: Num + Clone + Debug + Display + PartialEq + FromPrimitive + std::ops::Neg<Output = Self> + Send + Sync + 'static
{
}
