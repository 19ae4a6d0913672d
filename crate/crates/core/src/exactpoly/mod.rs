//! Exact multivariate polynomial algebra over the rationals.
//!
//! Polynomials are sparse maps from exponent vectors to [`Rational`]
//! coefficients. Ideals carry an optional reduced Gröbner basis; everything
//! downstream (colon ideals, saturation, quotient dimensions) is built on
//! [`buchberger`].

mod groebner;
mod ideal;
mod linalg;
mod monomial;
mod order;
mod parse;
mod poly;

pub use groebner::{buchberger, Ideal};
pub use ideal::{gcd, lcm, QuotientDim};
pub use linalg::Matrix;
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::{parse_poly, parse_rational};
pub use poly::{linear_substitute, MultiPoly};

/// Exact rational number, always stored in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `num / den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
