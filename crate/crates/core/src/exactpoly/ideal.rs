//! Ideal operations built on elimination: intersections, colon ideals,
//! saturation and the staircase count.

use super::{buchberger, Ideal, Monomial, MonomialOrder, MultiPoly, Rational};
use crate::{Error, Result};
use num_traits::One;
use std::fmt;

/// Vector-space dimension of `k[x]/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuotientDim {
    Finite(usize),
    Infinite,
}

impl QuotientDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            QuotientDim::Finite(n) => Some(n),
            QuotientDim::Infinite => None,
        }
    }
}

impl fmt::Display for QuotientDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientDim::Finite(n) => write!(f, "{n}"),
            QuotientDim::Infinite => write!(f, "infinite"),
        }
    }
}

/// Eliminates the first `k` variables from the ideal generated by `gens`
/// and returns the elimination ideal in the remaining variables, with its
/// reduced grevlex basis cached.
fn eliminate(gens: &[MultiPoly], k: usize) -> Ideal {
    let nvars = gens[0].nvars();
    let gb = buchberger(nvars, gens, MonomialOrder::Elimination(k)).expect("uniform ring");
    let kept: Vec<MultiPoly> = gb
        .basis()
        .expect("cached")
        .iter()
        .filter(|g| g.free_of_leading(k))
        .map(|g| g.drop_leading_vars(k))
        .collect();
    // the block order restricted to the tail is grevlex, so `kept` is already
    // the reduced grevlex basis of the elimination ideal
    Ideal::from_reduced_basis(nvars - k, kept, MonomialOrder::GrevLex)
}

fn basis_or_generators(i: &Ideal) -> Vec<MultiPoly> {
    match i.basis() {
        Some(b) => b.to_vec(),
        None => i.generators().iter().filter(|g| !g.is_zero()).cloned().collect(),
    }
}

impl Ideal {
    pub fn zero(nvars: usize) -> Ideal {
        Ideal::from_reduced_basis(nvars, Vec::new(), MonomialOrder::GrevLex)
    }

    pub fn unit(nvars: usize) -> Ideal {
        Ideal::from_reduced_basis(nvars, vec![MultiPoly::one(nvars)], MonomialOrder::GrevLex)
    }

    /// `I + J`.
    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = basis_or_generators(self);
        gens.extend(basis_or_generators(other));
        Ideal::new(self.nvars(), gens).expect("same ring").grevlex()
    }

    /// `I ∩ J`, as the `t`-free part of `t·I + (1 − t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        let n = self.nvars();
        let a = basis_or_generators(self);
        let b = basis_or_generators(other);
        if a.is_empty() || b.is_empty() {
            return Ideal::zero(n);
        }
        let t = MultiPoly::var(n + 1, 0);
        let one_minus_t = &MultiPoly::one(n + 1) - &t;
        let mut gens: Vec<MultiPoly> = a.iter().map(|f| &t * &f.prepend_vars(1)).collect();
        gens.extend(b.iter().map(|g| &one_minus_t * &g.prepend_vars(1)));
        eliminate(&gens, 1)
    }

    /// Colon ideal `I : (f) = {g : g f ∈ I}`.
    pub fn quotient(&self, f: &MultiPoly) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::Domain("colon by the zero polynomial".into()));
        }
        let n = self.nvars();
        let principal = Ideal::from_reduced_basis(n, vec![f.monic(MonomialOrder::GrevLex)], MonomialOrder::GrevLex);
        let meet = self.intersect(&principal);
        let gens = meet
            .basis()
            .expect("cached")
            .iter()
            .map(|g| g.divide_exact(f).ok_or_else(|| Error::Internal("intersection element not divisible".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(n, gens)?.grevlex())
    }

    /// Saturation by a single polynomial, `I : f^∞`, via `I + (1 − t f)`.
    pub fn saturate_by(&self, f: &MultiPoly) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::Domain("saturation by the zero polynomial".into()));
        }
        if f.is_constant() {
            return Ok(self.grevlex());
        }
        let n = self.nvars();
        let mut gens: Vec<MultiPoly> = basis_or_generators(self).iter().map(|g| g.prepend_vars(1)).collect();
        if gens.is_empty() {
            return Ok(Ideal::zero(n));
        }
        let t = MultiPoly::var(n + 1, 0);
        gens.push(&MultiPoly::one(n + 1) - &(&t * &f.prepend_vars(1)));
        Ok(eliminate(&gens, 1))
    }

    /// Saturation `I : J^∞ = ∩_i (I : f_i^∞)` over the generators `f_i` of `J`.
    pub fn saturate(&self, j: &Ideal) -> Result<Ideal> {
        let gens = basis_or_generators(&j.grevlex());
        if gens.is_empty() {
            return Err(Error::Domain("saturation by the zero ideal".into()));
        }
        let mut acc: Option<Ideal> = None;
        for f in &gens {
            let s = self.saturate_by(f)?;
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersect(&s),
            });
        }
        Ok(acc.expect("nonempty"))
    }

    /// Number of standard monomials of the cached basis, or `Infinite` when
    /// the staircase is unbounded. Computes a grevlex basis if none is cached.
    pub fn quotient_dimension(&self) -> QuotientDim {
        let me;
        let basis = match self.basis() {
            Some(b) => b,
            None => {
                me = self.grevlex();
                me.basis().expect("cached")
            }
        };
        let order = self.order().unwrap_or(MonomialOrder::GrevLex);
        let leads: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial(order).expect("nonzero").clone()).collect();
        staircase_size(self.nvars(), &leads)
    }

    /// `true` when `k[x]/I` is finite-dimensional.
    pub fn is_zero_dimensional(&self) -> bool {
        matches!(self.quotient_dimension(), QuotientDim::Finite(_))
    }

    /// Maximal ideal `(x_i − p_i)` of a rational point.
    pub fn point(p: &[Rational]) -> Ideal {
        let n = p.len();
        let gens = (0..n).map(|i| &MultiPoly::var(n, i) - &MultiPoly::constant(n, p[i].clone())).collect();
        Ideal::from_reduced_basis(n, gens, MonomialOrder::GrevLex)
    }

    /// `m^k` for the maximal ideal at the origin, as the monomials of degree `k`.
    pub fn origin_power(nvars: usize, k: u32) -> Ideal {
        let mut gens = Vec::new();
        let mut exps = vec![0u32; nvars];
        fn rec(i: usize, left: u32, exps: &mut Vec<u32>, gens: &mut Vec<MultiPoly>) {
            let n = exps.len();
            if i + 1 == n {
                exps[i] = left;
                gens.push(MultiPoly::monomial(Monomial::from_exponents(exps), Rational::one()));
                return;
            }
            for e in (0..=left).rev() {
                exps[i] = e;
                rec(i + 1, left - e, exps, gens);
            }
            exps[i] = 0;
        }
        if nvars == 0 {
            return if k == 0 { Ideal::unit(0) } else { Ideal::zero(0) };
        }
        rec(0, k, &mut exps, &mut gens);
        Ideal::from_reduced_basis(nvars, gens, MonomialOrder::GrevLex)
    }
}

/// Counts monomials not divisible by any of `leads`.
fn staircase_size(nvars: usize, leads: &[Monomial]) -> QuotientDim {
    if leads.iter().any(Monomial::is_one) {
        return QuotientDim::Finite(0);
    }
    let mut bounds = vec![None; nvars];
    for m in leads {
        if let Some((i, e)) = m.pure_power() {
            bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
        }
    }
    if bounds.iter().any(Option::is_none) {
        return QuotientDim::Infinite;
    }
    let bounds: Vec<u32> = bounds.into_iter().map(Option::unwrap).collect();
    let mut count = 0usize;
    let mut exps = vec![0u32; nvars];
    loop {
        let m = Monomial::from_exponents(&exps);
        if !leads.iter().any(|l| l.divides(&m)) {
            count += 1;
        }
        // odometer over the bounding box
        let mut i = 0;
        loop {
            if i == nvars {
                return QuotientDim::Finite(count);
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Least common multiple of two polynomials, monic under grevlex.
pub fn lcm(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let n = f.nvars();
    if f.is_zero() || g.is_zero() {
        return MultiPoly::zero(n);
    }
    let a = Ideal::from_reduced_basis(n, vec![f.monic(MonomialOrder::GrevLex)], MonomialOrder::GrevLex);
    let b = Ideal::from_reduced_basis(n, vec![g.monic(MonomialOrder::GrevLex)], MonomialOrder::GrevLex);
    let meet = a.intersect(&b);
    let basis = meet.basis().expect("cached");
    debug_assert_eq!(basis.len(), 1, "intersection of principal ideals is principal");
    basis[0].clone()
}

/// Greatest common divisor, monic under grevlex; `gcd(0, 0) = 0`.
pub fn gcd(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let order = MonomialOrder::GrevLex;
    if f.is_zero() {
        return g.monic(order);
    }
    if g.is_zero() {
        return f.monic(order);
    }
    let l = lcm(f, g);
    (f * g).divide_exact(&l).expect("lcm divides the product").monic(order)
}

#[cfg(test)]
mod tests {
    use super::super::parse_poly;
    use super::*;

    fn ideal(src: &[&str]) -> Ideal {
        let names = ["x", "y"];
        let gens: Vec<MultiPoly> = src.iter().map(|s| parse_poly(s, &names).unwrap()).collect();
        buchberger(2, &gens, MonomialOrder::GrevLex).unwrap()
    }

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &["x", "y"]).unwrap()
    }

    #[test]
    fn quotient_examples() {
        assert!(ideal(&["x*y"]).quotient(&p("x")).unwrap().same_ideal(&ideal(&["y"])));
        assert!(ideal(&["x^2"]).quotient(&p("x")).unwrap().same_ideal(&ideal(&["x"])));
        let q = ideal(&["x*(x - 1)", "y"]).quotient(&p("x - 1")).unwrap();
        assert!(q.same_ideal(&ideal(&["x", "y"])));
        assert!(matches!(ideal(&["x"]).quotient(&MultiPoly::zero(2)), Err(Error::Domain(_))));
    }

    #[test]
    fn saturation_examples() {
        let s = ideal(&["x^2*y"]).saturate(&ideal(&["y"])).unwrap();
        assert!(s.same_ideal(&ideal(&["x^2"])));

        let four = ideal(&["x*(x - 1)", "y*(y - 1)"]);
        assert_eq!(four.quotient_dimension(), QuotientDim::Finite(4));
        let three = four.saturate(&ideal(&["x", "y"])).unwrap();
        assert_eq!(three.quotient_dimension(), QuotientDim::Finite(3));
        for pt in [["1", "0"], ["0", "1"], ["1", "1"]] {
            let m = Ideal::point(&[super::super::parse_rational(pt[0]).unwrap(), super::super::parse_rational(pt[1]).unwrap()]);
            assert!(m.contains_ideal(&three));
        }
        assert!(ideal(&["x^2", "y"]).saturate(&ideal(&["x", "y"])).unwrap().is_unit());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(ideal(&["x^2", "y^3"]).quotient_dimension(), QuotientDim::Finite(6));
        assert_eq!(ideal(&["x", "y"]).quotient_dimension(), QuotientDim::Finite(1));
        assert_eq!(ideal(&["x"]).quotient_dimension(), QuotientDim::Infinite);
        assert_eq!(ideal(&["1"]).quotient_dimension(), QuotientDim::Finite(0));
        assert_eq!(Ideal::zero(0).quotient_dimension(), QuotientDim::Finite(1));
    }

    #[test]
    fn gcd_and_lcm() {
        let g = gcd(&p("x^2 - y^2"), &p("x^2 + 2*x*y + y^2"));
        assert_eq!(g, p("x + y"));
        assert_eq!(gcd(&p("x"), &p("y")), p("1"));
        assert_eq!(gcd(&MultiPoly::zero(2), &p("2*x")), p("x"));
        assert_eq!(lcm(&p("x*y"), &p("x^2")), p("x^2*y"));
    }

    #[test]
    fn origin_powers() {
        let m2 = Ideal::origin_power(2, 2);
        assert_eq!(m2.generators().len(), 3);
        assert_eq!(m2.quotient_dimension(), QuotientDim::Finite(3));
    }
}
