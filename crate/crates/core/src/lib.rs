//! Exact verification of the logarithmic-index residue formula for
//! one-dimensional foliations on projective space.
//!
//! The crate computes both sides of the identity
//!
//! ```text
//! ∫ c_n(T(-log D) - T_F)  =  Σ_{x ∉ D} μ_x(F)  +  Σ_{x ∈ D} Log(F, D, x)
//! ```
//!
//! for a foliation `F` of degree `d` on `P^n` that is tangent to a normal
//! crossing arrangement of hyperplanes `D`. The left side lives in
//! [`chern`] (truncated power series in the hyperplane class), the right
//! side in [`indices`] (Gröbner-basis dimension counts over the rationals).
//! The two pipelines share nothing beyond the input integers.

pub mod chern;
pub mod error;
pub mod exactpoly;
pub mod indices;
pub mod projfol;

pub use error::{Error, Result};
pub use projfol::{AffineField, Arrangement, Foliation, LinearForm, Restriction, Stratum};
pub use exactpoly::{
    buchberger, parse_poly, Ideal, Matrix, Monomial, MonomialOrder, MultiPoly, QuotientDim,
    Rational,
};


pub use indices::{IndexReport, LocalIndices, PointRecord, RationalPoint, StratumTotal};
pub use chern::{ChernInput, TruncatedSeries};
