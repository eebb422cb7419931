//! The free associative unital ring `Z{X1, ..., Xk}`.
//!
//! Polynomials are graded by word length. `F^n` denotes the span of words of
//! length at least `n`; [`FreePoly::filtration_split`] separates a polynomial
//! along it. Nothing is ever truncated implicitly.

mod alphabet;
mod poly;
mod word;

pub use alphabet::Alphabet;
pub(crate) use poly::write_signed_sum;
pub use poly::{Degree, FreePoly};
pub use word::{Word, WordDisplay};
