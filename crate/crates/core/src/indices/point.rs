use crate::exactpoly::Rational;
use crate::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;

/// Rational point of `P^n`, scaled so that its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint(Vec<Rational>);

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .ok_or_else(|| Error::Domain("all homogeneous coordinates vanish".into()))?;
        Ok(RationalPoint(coords.into_iter().map(|c| c / &lead).collect()))
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    /// Projective dimension `n`.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// Index of the first nonzero coordinate, where the point has value 1.
    pub fn chart(&self) -> usize {
        self.0.iter().position(One::is_one).expect("canonical form")
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{rat, ratio};

    #[test]
    fn canonical_scaling() {
        let p = RationalPoint::new(vec![rat(0), rat(2), rat(-3)]).unwrap();
        assert_eq!(p.coords(), &[rat(0), rat(1), ratio(-3, 2)]);
        assert_eq!(p.chart(), 1);
        assert_eq!(p.to_string(), "[0:1:-3/2]");
        assert_eq!(p, RationalPoint::new(vec![rat(0), rat(-4), rat(6)]).unwrap());
        assert!(RationalPoint::new(vec![rat(0), rat(0)]).is_err());
    }
}
