use super::local::{point_record, PointRecord};
use super::RationalPoint;
use crate::chern::{lhs_integral, ChernInput};
use crate::exactpoly::{buchberger, Ideal, MonomialOrder, MultiPoly, Rational};
use crate::projfol::{dehomogenizer, restrict_to_stratum, Arrangement, Foliation, LinearForm};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use std::collections::BTreeSet;

/// Total Milnor number of one arrangement stratum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumTotal {
    pub subset: Vec<usize>,
    pub dim: usize,
    /// Length of the singular scheme of the restricted foliation.
    pub milnor_total: usize,
    /// `Σ_{i≤m} d^i` for the restricted foliation; `None` on point strata.
    pub classical: Option<u64>,
}

impl StratumTotal {
    pub fn sign(&self) -> i64 {
        if self.subset.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Everything the index side knows about an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub points: Vec<PointRecord>,
    pub strata: Vec<StratumTotal>,
    pub rhs_total: i64,
    pub lhs_chern: i64,
    pub verified: bool,
}

/// Length of the singular scheme of `F` off the hyperplanes `avoid`, by
/// inclusion–exclusion over the charts: for nonempty `T ⊆ {0..n}` with
/// smallest element `j`, count chart `j` saturated by `∏_{i∈T∖j} x_i` and
/// by the dehomogenised forms in `avoid`.
fn chart_total(f: &Foliation, avoid: &[LinearForm]) -> Result<usize> {
    let n = f.dim();
    let ideals = (0..=n).map(|j| f.singular_ideal(j)).collect::<Result<Vec<Ideal>>>()?;
    let masks: Vec<u32> = (1u32..(1 << (n + 1))).collect();
    let terms = masks
        .par_iter()
        .map(|&mask| {
            let j = mask.trailing_zeros() as usize;
            let images = dehomogenizer(n, j);
            let mut cut = (j + 1..=n)
                .filter(|i| mask >> i & 1 == 1)
                .fold(MultiPoly::one(n), |acc, i| &acc * &images[i]);
            for l in avoid {
                cut = &cut * &l.to_poly().compose(&images);
            }
            let dim = ideals[j]
                .saturate_by(&cut)?
                .quotient_dimension()
                .finite()
                .ok_or(Error::PositiveDimensional { chart: j })?;
            let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
            Ok(sign * dim as i64)
        })
        .collect::<Result<Vec<i64>>>()?;
    let total: i64 = terms.iter().sum();
    usize::try_from(total).map_err(|_| Error::Internal(format!("negative chart total {total}")))
}

/// Number of singular points of `F` on `P^n` counted with multiplicity.
pub fn total_milnor(f: &Foliation) -> Result<usize> {
    chart_total(f, &[])
}

/// `Σ μ_x(F)` over the singular points off the divisor.
pub fn complement_milnor_sum(f: &Foliation, arrangement: &Arrangement) -> Result<usize> {
    f.check_logarithmic(arrangement)?;
    chart_total(f, arrangement.hyperplanes())
}

/// Total Milnor numbers of `F` restricted to every nonempty stratum.
pub fn stratum_totals(f: &Foliation, arrangement: &Arrangement) -> Result<Vec<StratumTotal>> {
    f.check_logarithmic(arrangement)?;
    let n = f.dim();
    arrangement
        .nonempty_strata()
        .into_par_iter()
        .map(|subset| {
            let dim = n - subset.len();
            if subset.is_empty() {
                return Ok(StratumTotal { subset, dim, milnor_total: total_milnor(f)?, classical: Some(f.expected_singularities()) });
            }
            if dim == 0 {
                let point = crate::projfol::Stratum::new(arrangement, &subset)?.point().expect("point stratum");
                let milnor_total = usize::from(f.is_singular_at(&point));
                return Ok(StratumTotal { subset, dim, milnor_total, classical: None });
            }
            let restriction = restrict_to_stratum(f, arrangement, &subset)?;
            let g = restriction
                .foliation
                .ok_or_else(|| Error::Domain(format!("stratum {subset:?} consists of singular points")))?;
            Ok(StratumTotal { subset, dim, milnor_total: total_milnor(&g)?, classical: Some(g.expected_singularities()) })
        })
        .collect()
}

/// `Σ_S (−1)^{|S|} · (total Milnor number of F on the stratum of S)`, which
/// equals `Σ_{x∉D} μ_x + Σ_{x∈D} Log_x`.
pub fn rhs_total(f: &Foliation, arrangement: &Arrangement) -> Result<i64> {
    Ok(signed_sum(&stratum_totals(f, arrangement)?))
}

fn signed_sum(strata: &[StratumTotal]) -> i64 {
    strata.iter().map(|s| s.sign() * s.milnor_total as i64).sum()
}

/// `Σ_{x∈D} Log(F, D, x)`.
pub fn divisor_log_sum(f: &Foliation, arrangement: &Arrangement) -> Result<i64> {
    Ok(rhs_total(f, arrangement)? - complement_milnor_sum(f, arrangement)? as i64)
}

/// The Chern side for an arrangement of hyperplanes and a foliation of degree `d`.
pub fn chern_side(f: &Foliation, arrangement: &Arrangement) -> Result<i64> {
    let input = ChernInput::new(f.dim(), vec![1; arrangement.len()], f.degree())?;
    lhs_integral(&input)
}

/// Strata totals, the global sums, and per-point records for `points`.
pub fn index_report(f: &Foliation, arrangement: &Arrangement, points: &[RationalPoint]) -> Result<IndexReport> {
    let strata = stratum_totals(f, arrangement)?;
    let rhs_total = signed_sum(&strata);
    let lhs_chern = chern_side(f, arrangement)?;
    let points = points.iter().map(|p| point_record(f, arrangement, p)).collect::<Result<Vec<_>>>()?;
    Ok(IndexReport { points, strata, rhs_total, lhs_chern, verified: rhs_total == lhs_chern })
}

/// The singular points of `F` with rational coordinates, sorted.
pub fn rational_singular_points(f: &Foliation) -> Result<Vec<RationalPoint>> {
    let n = f.dim();
    let mut found = BTreeSet::new();
    for j in 0..=n {
        let gens = f.singular_ideal(j)?.basis().expect("cached").to_vec();
        for local in rational_zeros(n, gens)? {
            let mut coords = local;
            coords.insert(j, Rational::one());
            found.insert(RationalPoint::new(coords)?);
        }
    }
    Ok(found.into_iter().collect())
}

/// Rational zeros of a zero-dimensional system, by lex triangulation.
fn rational_zeros(nvars: usize, gens: Vec<MultiPoly>) -> Result<Vec<Vec<Rational>>> {
    let gb = buchberger(nvars, &gens, MonomialOrder::Lex)?;
    if gb.is_unit() {
        return Ok(Vec::new());
    }
    if nvars == 0 {
        return Ok(vec![Vec::new()]);
    }
    let basis = gb.basis().expect("cached");
    let last = nvars - 1;
    let univariate = basis
        .iter()
        .find(|g| g.terms().all(|(m, _)| m.exponents()[..last].iter().all(|&e| e == 0)))
        .ok_or(Error::NotZeroDimensional)?;
    let mut out = Vec::new();
    for root in rational_roots(univariate, last)? {
        let reduced: Vec<MultiPoly> = basis.iter().map(|g| g.specialize(last, &root).remove_var(last)).collect();
        for mut head in rational_zeros(last, reduced)? {
            head.push(root.clone());
            out.push(head);
        }
    }
    Ok(out)
}

const DIVISOR_SEARCH_LIMIT: u64 = 1 << 24;

fn divisors(a: &BigInt) -> Result<Vec<BigInt>> {
    let a = a.abs();
    let small = a.to_u64().filter(|&v| v <= DIVISOR_SEARCH_LIMIT * DIVISOR_SEARCH_LIMIT);
    let Some(v) = small else {
        return Err(Error::Domain(format!("coefficient {a} too large for rational root search")));
    };
    let mut out = Vec::new();
    let mut k = 1u64;
    while k * k <= v {
        if v % k == 0 {
            out.push(BigInt::from(k));
            if k * k != v {
                out.push(BigInt::from(v / k));
            }
        }
        k += 1;
    }
    Ok(out)
}

/// Rational roots of a polynomial in the single variable `var`.
fn rational_roots(p: &MultiPoly, var: usize) -> Result<Vec<Rational>> {
    let degree = p.degree().unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::zero(); degree + 1];
    for (m, c) in p.terms() {
        coeffs[m.exponents()[var] as usize] = c.clone();
    }
    let scale = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * Rational::from_integer(scale.clone())).to_integer()).collect();
    let mut roots = BTreeSet::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(degree);
    if low > 0 {
        roots.insert(Rational::zero());
    }
    if low < degree {
        let eval = |x: &Rational| coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c);
        for num in divisors(&ints[low])? {
            for den in divisors(&ints[degree])? {
                for sign in [1, -1] {
                    let x = Rational::new(&num * sign, den.clone());
                    if eval(&x).is_zero() {
                        roots.insert(x);
                    }
                }
            }
        }
    }
    Ok(roots.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{parse_poly, rat};

    fn fol(src: &[&str]) -> Foliation {
        let z = ["z0", "z1", "z2"];
        Foliation::new(src.iter().map(|s| parse_poly(s, &z).unwrap()).collect()).unwrap()
    }

    fn triangle() -> (Foliation, Arrangement) {
        (fol(&["0", "z1*(z1 - z0)", "z2*(z2 - z0)"]), Arrangement::coordinate(2, &[0, 1, 2]).unwrap())
    }

    #[test]
    fn triangle_totals() {
        let (f, a) = triangle();
        assert_eq!(total_milnor(&f).unwrap(), 7);
        assert_eq!(complement_milnor_sum(&f, &a).unwrap(), 1);
        let strata = stratum_totals(&f, &a).unwrap();
        let totals: Vec<usize> = strata.iter().map(|s| s.milnor_total).collect();
        assert_eq!(totals, vec![7, 3, 3, 3, 1, 1, 1]);
        assert_eq!(rhs_total(&f, &a).unwrap(), 1);
        assert_eq!(divisor_log_sum(&f, &a).unwrap(), 0);
    }

    #[test]
    fn triangle_points_are_rational() {
        let (f, _) = triangle();
        let pts = rational_singular_points(&f).unwrap();
        assert_eq!(pts.len(), 7);
        assert!(pts.contains(&RationalPoint::new(vec![rat(1), rat(1), rat(1)]).unwrap()));
    }

    #[test]
    fn roots_with_denominators() {
        let p = parse_poly("6*x^3 - 5*x^2 + x", &["x"]).unwrap();
        let r = rational_roots(&p, 0).unwrap();
        assert_eq!(r, vec![rat(0), Rational::new(1.into(), 3.into()), Rational::new(1.into(), 2.into())]);
    }
}
