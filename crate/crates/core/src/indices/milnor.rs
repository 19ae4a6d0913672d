use crate::exactpoly::{Ideal, MultiPoly, QuotientDim, Rational};
use crate::{Error, Result};

fn translated(ideal: &Ideal, p: &[Rational]) -> Result<Ideal> {
    if p.len() != ideal.nvars() {
        return Err(Error::RingMismatch { expected: ideal.nvars(), found: p.len() });
    }
    let gens: Vec<MultiPoly> = ideal.generators().iter().map(|g| g.translate(p)).collect();
    Ideal::new(ideal.nvars(), gens)
}

fn finite(d: QuotientDim) -> Result<usize> {
    d.finite().ok_or(Error::NotZeroDimensional)
}

/// Local length of a zero-dimensional ideal at the rational point `p`:
/// `dim k[x]/I − dim k[x]/(I : m_p^∞)`. Zero iff `p ∉ V(I)`.
pub fn milnor_at_point(ideal: &Ideal, p: &[Rational]) -> Result<usize> {
    let total = finite(ideal.quotient_dimension())?;
    let n = ideal.nvars();
    if n == 0 {
        return Ok(total);
    }
    let moved = translated(ideal, p)?.grevlex();
    let away = moved.saturate(&Ideal::point(&vec![Rational::from_integer(0.into()); n]))?;
    let rest = finite(away.quotient_dimension())?;
    total
        .checked_sub(rest)
        .ok_or_else(|| Error::Internal("saturation increased the quotient dimension".into()))
}

/// Length of `k[x]/I` at the closed point with maximal ideal `m`, which
/// need not be rational. This is the raw scheme length: a point with residue
/// field of degree `r` counts `r` times its geometric multiplicity.
pub fn milnor_at_maximal(ideal: &Ideal, m: &Ideal) -> Result<usize> {
    let total = finite(ideal.quotient_dimension())?;
    let rest = finite(ideal.saturate(m)?.quotient_dimension())?;
    total
        .checked_sub(rest)
        .ok_or_else(|| Error::Internal("saturation increased the quotient dimension".into()))
}

/// Independent local length: `dim k[x]/(I + m_p^N)` for `N = 1, 2, …` until
/// two consecutive values agree. Errors if that does not happen by `max_power`.
pub fn milnor_oracle(ideal: &Ideal, p: &[Rational], max_power: u32) -> Result<usize> {
    let n = ideal.nvars();
    if n == 0 {
        return finite(ideal.quotient_dimension());
    }
    let moved = translated(ideal, p)?;
    let mut previous: Option<usize> = None;
    for k in 1..=max_power {
        let value = finite(moved.sum(&Ideal::origin_power(n, k)).quotient_dimension())?;
        if previous == Some(value) {
            return Ok(value);
        }
        previous = Some(value);
    }
    Err(Error::NoStabilization(max_power))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{buchberger, parse_poly, rat, MonomialOrder};

    fn ideal(src: &[&str]) -> Ideal {
        let names = ["x", "y"];
        let gens: Vec<MultiPoly> = src.iter().map(|s| parse_poly(s, &names).unwrap()).collect();
        buchberger(2, &gens, MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn saturation_route() {
        let o = [rat(0), rat(0)];
        assert_eq!(milnor_at_point(&ideal(&["x", "y"]), &o).unwrap(), 1);
        assert_eq!(milnor_at_point(&ideal(&["x^2", "y"]), &o).unwrap(), 2);
        let four = ideal(&["x*(x - 1)", "y*(y - 1)"]);
        assert_eq!(milnor_at_point(&four, &[rat(1), rat(1)]).unwrap(), 1);
        assert_eq!(milnor_at_point(&four, &[rat(2), rat(1)]).unwrap(), 0);
        assert_eq!(milnor_at_point(&ideal(&["x"]), &o), Err(Error::NotZeroDimensional));
    }

    #[test]
    fn irrational_points() {
        let i = ideal(&["(x^2 - 2)*(x - 1)", "y^2"]);
        assert_eq!(milnor_at_maximal(&i, &ideal(&["x^2 - 2", "y"])).unwrap(), 4);
        assert_eq!(milnor_at_maximal(&i, &ideal(&["x - 1", "y"])).unwrap(), 2);
    }

    #[test]
    fn stabilisation_route() {
        let o = [rat(0), rat(0)];
        assert_eq!(milnor_oracle(&ideal(&["x^2", "y"]), &o, 10).unwrap(), 2);
        assert_eq!(milnor_oracle(&ideal(&["x", "y"]), &o, 10).unwrap(), 1);
        assert_eq!(milnor_oracle(&ideal(&["x^3 - y^2", "y"]), &o, 10).unwrap(), 3);
        assert_eq!(milnor_oracle(&ideal(&["x^5", "y"]), &o, 3), Err(Error::NoStabilization(3)));
    }
}
