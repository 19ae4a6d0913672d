//! Projective foliations, hyperplane arrangements and their strata.

mod arrangement;
mod foliation;
mod restrict;

pub use arrangement::{validate_arrangement, Arrangement, LinearForm};
pub use foliation::{chart_coordinates, AffineField, Foliation};
pub(crate) use foliation::dehomogenizer;
pub use restrict::{restrict_to_stratum, Restriction, Stratum};
