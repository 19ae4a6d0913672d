use super::milnor::{milnor_at_point, milnor_oracle};
use super::RationalPoint;
use crate::exactpoly::{Ideal, Matrix, MultiPoly, Rational};
use crate::projfol::{chart_coordinates, dehomogenizer, Arrangement, Foliation};
use crate::{Error, Result};
use num_traits::Zero;

/// Bound on `N` when a local length has to fall back to `I + m^N`.
const FALLBACK_POWER: u32 = 64;

/// Indices of a vector field at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalIndices {
    /// Divisor components through the point.
    pub components: Vec<usize>,
    pub milnor: usize,
    pub log: i64,
    /// `μ − Log`; `None` off the divisor, where it is undefined.
    pub hom: Option<i64>,
}

/// Local length at the origin; falls back to the stabilisation count when
/// the ideal has positive-dimensional components away from the origin.
fn length_at_origin(gens: Vec<MultiPoly>, nvars: usize) -> Result<usize> {
    let ideal = Ideal::new(nvars, gens)?;
    let origin = vec![Rational::zero(); nvars];
    match milnor_at_point(&ideal, &origin) {
        Err(Error::NotZeroDimensional) => milnor_oracle(&ideal, &origin, FALLBACK_POWER),
        other => other,
    }
}

/// Milnor number at the origin of the field `v` restricted to the common
/// zero set of the linear forms `rows` (coefficient vectors), which must be
/// independent and invariant under `v`.
fn restricted_length(v: &[MultiPoly], rows: &[Vec<Rational>]) -> Result<Option<usize>> {
    let n = v.len();
    let s = rows.len();
    let m = n - s;
    if m == 0 {
        return Ok(None);
    }
    let coords = Matrix::complete_basis(rows, n).ok_or(Error::SingularMatrix)?;
    let inv = coords.inverse().ok_or(Error::SingularMatrix)?;
    let images: Vec<MultiPoly> = (0..n).map(|k| MultiPoly::linear(&inv.row(k)[..m])).collect();
    let pulled: Vec<MultiPoly> = v.iter().map(|p| p.compose(&images)).collect();
    let restricted = (0..m)
        .map(|i| (0..n).fold(MultiPoly::zero(m), |acc, k| acc + pulled[k].scale(&coords[(i, k)])))
        .collect();
    length_at_origin(restricted, m).map(Some)
}

/// `μ`, `Log` and `Ind_hom` of an affine vector field at `p`, with respect
/// to the affine hyperplanes `divisor` (polynomials of degree at most one).
///
/// `Log` is the alternating sum over subsets `S` of the components through
/// `p` of the Milnor number of the field restricted to `∩_{i∈S} ℓ_i = 0`; a
/// restriction to the point itself counts 1.
pub fn affine_indices(field: &[MultiPoly], divisor: &[MultiPoly], p: &[Rational]) -> Result<LocalIndices> {
    let n = field.len();
    if p.len() != n {
        return Err(Error::RingMismatch { expected: n, found: p.len() });
    }
    if let Some(f) = field.iter().chain(divisor).find(|f| f.nvars() != n) {
        return Err(Error::RingMismatch { expected: n, found: f.nvars() });
    }
    let moved: Vec<MultiPoly> = field.iter().map(|f| f.translate(p)).collect();

    let mut components = Vec::new();
    let mut rows = Vec::new();
    for (index, l) in divisor.iter().enumerate() {
        // a nonzero constant is a hyperplane at infinity for this chart
        let (lin, c) = l
            .affine_coefficients()
            .filter(|(lin, c)| !c.is_zero() || lin.iter().any(|a| !a.is_zero()))
            .ok_or_else(|| Error::Domain(format!("divisor component {index} is not an affine hyperplane")))?;
        let value: Rational = c + lin.iter().zip(p).map(|(a, x)| a * x).sum::<Rational>();
        if !value.is_zero() {
            continue;
        }
        let form = MultiPoly::linear(&lin);
        let derivative = moved.iter().zip(&lin).fold(MultiPoly::zero(n), |acc, (v, a)| acc + v.scale(a));
        if derivative.divide_exact(&form).is_none() {
            return Err(Error::NotLogarithmic { index });
        }
        components.push(index);
        rows.push(lin);
    }

    let milnor = length_at_origin(moved.clone(), n)?;
    if milnor == 0 {
        let hom = (!components.is_empty()).then_some(0);
        return Ok(LocalIndices { components, milnor, log: 0, hom });
    }
    let k = components.len();
    let mut log = 0i64;
    for mask in 0u32..(1 << k) {
        let chosen: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        let subset_rows: Vec<Vec<Rational>> = chosen.iter().map(|&i| rows[i].clone()).collect();
        if Matrix::from_rows(subset_rows.clone()).rank() < chosen.len() || chosen.len() > n {
            return Err(Error::NormalCrossing { subset: chosen.iter().map(|&i| components[i]).collect() });
        }
        let term = if chosen.is_empty() {
            milnor
        } else {
            restricted_length(&moved, &subset_rows)?.unwrap_or(1)
        };
        let sign = if chosen.len().is_multiple_of(2) { 1 } else { -1 };
        log += sign * term as i64;
    }
    let hom = (!components.is_empty()).then(|| milnor as i64 - log);
    Ok(LocalIndices { components, milnor, log, hom })
}

/// Per-point indices of a projective foliation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointRecord {
    pub point: RationalPoint,
    pub indices: LocalIndices,
}

impl PointRecord {
    pub fn on_divisor(&self) -> bool {
        !self.indices.components.is_empty()
    }
}

/// Computes `μ`, `Log` and `Ind_hom` of `F` at `p` in the first chart
/// containing `p`.
pub fn point_record(f: &Foliation, arrangement: &Arrangement, p: &RationalPoint) -> Result<PointRecord> {
    let n = f.dim();
    if p.dim() != n || arrangement.dim() != n {
        return Err(Error::RingMismatch { expected: n + 1, found: p.dim() + 1 });
    }
    let chart = p.chart();
    let field = f.chart_field(chart).components;
    let images = dehomogenizer(n, chart);
    let divisor: Vec<MultiPoly> = arrangement.hyperplanes().iter().map(|l| l.to_poly().compose(&images)).collect();
    let local = chart_coordinates(p.coords(), chart);
    let indices = affine_indices(&field, &divisor, &local)?;
    Ok(PointRecord { point: p.clone(), indices })
}

pub fn milnor_number(f: &Foliation, p: &RationalPoint) -> Result<usize> {
    Ok(point_record(f, &Arrangement::empty(f.dim()), p)?.indices.milnor)
}

pub fn log_index_at_point(f: &Foliation, arrangement: &Arrangement, p: &RationalPoint) -> Result<i64> {
    Ok(point_record(f, arrangement, p)?.indices.log)
}

/// `μ − Log`; only defined on the divisor.
pub fn hom_index_at_point(f: &Foliation, arrangement: &Arrangement, p: &RationalPoint) -> Result<i64> {
    point_record(f, arrangement, p)?
        .indices
        .hom
        .ok_or_else(|| Error::Domain(format!("{p} does not lie on the divisor")))
}
