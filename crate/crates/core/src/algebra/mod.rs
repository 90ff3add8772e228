//! The semigroup ring S: polynomials, matrix orderings, initial forms.

mod ordering;
mod polynomial;

pub use ordering::MatrixOrdering;
pub use polynomial::{render_monomial, SemigroupPolynomial};

pub(crate) use polynomial::same_ctx;
