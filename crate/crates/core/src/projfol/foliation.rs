use super::{Arrangement, LinearForm};
use crate::exactpoly::{Ideal, Matrix, MultiPoly, QuotientDim, Rational};
use crate::{Error, Result};
use num_traits::Zero;

/// One-dimensional foliation of degree `d` on `P^n`, given by a homogeneous
/// vector field `Σ P_i ∂/∂z_i` with all `P_i` of degree `d`.
///
/// The representative is only defined up to adding radial multiples
/// `z_i · Q`; every derived quantity is independent of that choice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Foliation {
    n: usize,
    degree: u32,
    components: Vec<MultiPoly>,
}

/// Vector field of a foliation in the affine chart `z_j ≠ 0`, with
/// coordinates `x_i = z_i / z_j` for `i ≠ j` in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineField {
    pub chart: usize,
    pub components: Vec<MultiPoly>,
}

impl AffineField {
    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    /// Ideal generated by the components.
    pub fn ideal(&self) -> Ideal {
        Ideal::new(self.nvars(), self.components.clone()).expect("uniform ring")
    }
}

/// Chart coordinates of a homogeneous point with `point[chart] ≠ 0`.
pub fn chart_coordinates(point: &[Rational], chart: usize) -> Vec<Rational> {
    let pj = &point[chart];
    assert!(!pj.is_zero(), "point not in chart {chart}");
    (0..point.len()).filter(|&i| i != chart).map(|i| &point[i] / pj).collect()
}

/// Images of the homogeneous variables under dehomogenisation at `z_j = 1`.
pub(crate) fn dehomogenizer(n: usize, j: usize) -> Vec<MultiPoly> {
    (0..=n)
        .map(|k| match k.cmp(&j) {
            std::cmp::Ordering::Equal => MultiPoly::one(n),
            std::cmp::Ordering::Less => MultiPoly::var(n, k),
            std::cmp::Ordering::Greater => MultiPoly::var(n, k - 1),
        })
        .collect()
}

impl Foliation {
    /// Validates and builds a foliation from its `n + 1` components.
    pub fn new(components: Vec<MultiPoly>) -> Result<Self> {
        let f = Self::unchecked(components)?;
        for j in 0..=f.n {
            f.singular_ideal(j)?;
        }
        Ok(f)
    }

    /// Checks shape and homogeneity only, not isolated singularities.
    pub(crate) fn unchecked(components: Vec<MultiPoly>) -> Result<Self> {
        if components.len() < 2 {
            return Err(Error::Domain("a foliation on P^n needs n + 1 ≥ 2 components".into()));
        }
        let nvars = components.len();
        if let Some(p) = components.iter().find(|p| p.nvars() != nvars) {
            return Err(Error::RingMismatch { expected: nvars, found: p.nvars() });
        }
        let degree = components
            .iter()
            .find_map(MultiPoly::degree)
            .ok_or_else(|| Error::Domain("all components vanish".into()))?;
        if let Some(index) = components.iter().position(|p| !p.is_homogeneous_of(degree)) {
            return Err(Error::DegreeMismatch { index, expected: degree });
        }
        if degree == 0 {
            return Err(Error::Domain("foliation degree must be positive".into()));
        }
        Ok(Foliation { n: nvars - 1, degree, components })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    /// `(P_i − x_i P_j)` at `z_j = 1`, for `i ≠ j`.
    pub fn chart_field(&self, j: usize) -> AffineField {
        assert!(j <= self.n, "chart index out of range");
        let images = dehomogenizer(self.n, j);
        let pj = self.components[j].compose(&images);
        let components = (0..=self.n)
            .filter(|&i| i != j)
            .map(|i| {
                let pi = self.components[i].compose(&images);
                &pi - &(&images[i] * &pj)
            })
            .collect();
        AffineField { chart: j, components }
    }

    /// Singular scheme in chart `j`; errors if it is positive-dimensional.
    pub fn singular_ideal(&self, j: usize) -> Result<Ideal> {
        let ideal = self.chart_field(j).ideal().grevlex();
        match ideal.quotient_dimension() {
            QuotientDim::Infinite => Err(Error::PositiveDimensional { chart: j }),
            QuotientDim::Finite(_) => Ok(ideal),
        }
    }

    /// `true` iff `L` divides `Σ P_i ∂L/∂z_i`.
    pub fn is_logarithmic(&self, l: &LinearForm) -> bool {
        let derivative = self
            .components
            .iter()
            .zip(l.coeffs())
            .fold(MultiPoly::zero(self.n + 1), |acc, (p, a)| acc + p.scale(a));
        derivative.divide_exact(&l.to_poly()).is_some()
    }

    /// Errors with the first hyperplane the foliation is not tangent to.
    pub fn check_logarithmic(&self, arrangement: &Arrangement) -> Result<()> {
        match arrangement.hyperplanes().iter().position(|l| !self.is_logarithmic(l)) {
            Some(index) => Err(Error::NotLogarithmic { index }),
            None => Ok(()),
        }
    }

    /// `true` when the field is proportional to the radial field at `point`.
    pub fn is_singular_at(&self, point: &[Rational]) -> bool {
        let values: Vec<Rational> = self.components.iter().map(|p| p.eval(point)).collect();
        (0..=self.n).all(|i| (i + 1..=self.n).all(|j| (&point[i] * &values[j] - &point[j] * &values[i]).is_zero()))
    }

    /// Adds the radial multiple `z_i · q` to every component.
    pub fn add_radial(&self, q: &MultiPoly) -> Result<Foliation> {
        if !q.is_zero() && !q.is_homogeneous_of(self.degree - 1) {
            return Err(Error::DegreeMismatch { index: 0, expected: self.degree - 1 });
        }
        let comps = (0..=self.n)
            .map(|i| &self.components[i] + &(&MultiPoly::var(self.n + 1, i) * q))
            .collect();
        Foliation::new(comps)
    }

    /// The same foliation in coordinates `w = M z`.
    pub fn transform(&self, m: &Matrix) -> Result<Foliation> {
        let inv = m.inverse().ok_or(Error::SingularMatrix)?;
        Foliation::new(self.transformed_components(m, &inv))
    }

    /// `M · P(M⁻¹ w)` without validation.
    pub(crate) fn transformed_components(&self, m: &Matrix, inv: &Matrix) -> Vec<MultiPoly> {
        let nv = self.n + 1;
        let images: Vec<MultiPoly> = (0..nv).map(|i| MultiPoly::linear(inv.row(i))).collect();
        let pulled: Vec<MultiPoly> = self.components.iter().map(|p| p.compose(&images)).collect();
        (0..nv)
            .map(|i| {
                (0..nv).fold(MultiPoly::zero(nv), |acc, k| acc + pulled[k].scale(&m[(i, k)]))
            })
            .collect()
    }

    /// 2×2 minors `z_i P_j − z_j P_i`, which determine the foliation.
    pub fn minors(&self) -> Vec<MultiPoly> {
        minors_of(&self.components)
    }

    /// Equality of foliations: the minors agree up to a nonzero scalar.
    pub fn same_foliation(&self, other: &Foliation) -> bool {
        if self.n != other.n || self.degree != other.degree {
            return false;
        }
        let (a, b) = (self.minors(), other.minors());
        let pivot = a.iter().zip(&b).find(|(x, _)| !x.is_zero());
        let Some((x, y)) = pivot else { return false };
        let Some(lt) = x.terms().next() else { return false };
        let ratio = y.coefficient(lt.0) / lt.1;
        !ratio.is_zero() && a.iter().zip(&b).all(|(x, y)| &x.scale(&ratio) == y)
    }

    /// Classical number of singularities counted with multiplicity, `Σ_{i≤n} d^i`.
    pub fn expected_singularities(&self) -> u64 {
        (0..=self.n as u32).map(|i| (self.degree as u64).pow(i)).sum()
    }

    /// Multiplies every component by the nonzero scalar `c`.
    pub fn scaled(&self, c: &Rational) -> Result<Foliation> {
        if c.is_zero() {
            return Err(Error::Domain("zero scale".into()));
        }
        Foliation::new(self.components.iter().map(|p| p.scale(c)).collect())
    }
}

pub(crate) fn minors_of(components: &[MultiPoly]) -> Vec<MultiPoly> {
    let nv = components.len();
    let mut out = Vec::new();
    for i in 0..nv {
        for j in i + 1..nv {
            let zi = MultiPoly::var(nv, i);
            let zj = MultiPoly::var(nv, j);
            out.push(&(&zi * &components[j]) - &(&zj * &components[i]));
        }
    }
    out
}
