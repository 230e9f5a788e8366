//! Exact multivariate polynomial arithmetic over ℚ with Gröbner-basis ideal
//! operations: normal forms, membership, equality, sums, products,
//! intersections, colon ideals and elimination.
//!
//! Polynomials live in a [`Ring`] (an ordered list of variable names). Terms
//! are stored canonically, sorted by degree reverse lexicographic order, so
//! equal polynomials have identical representations.

mod error;
mod groebner;
mod ideal;
mod monomial;
mod order;
mod parse;
mod poly;
mod ring;

pub use error::PolyError;
pub use groebner::{normal_form, reduced_groebner_basis};
pub use ideal::{GroebnerBasis, Ideal};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::{parse_ideal_list, parse_polynomial, parse_polynomial_with};
pub use poly::Polynomial;
pub use ring::Ring;

/// Exact rational scalar used for every coefficient.
pub type Rational = num_rational::BigRational;

/// Builds the rational `num/den`.
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
