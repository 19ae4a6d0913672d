use super::foliation::minors_of;
use super::{Arrangement, Foliation, LinearForm};
use crate::exactpoly::{Matrix, MultiPoly, Rational};
use crate::{Error, Result};
use num_traits::Zero;

/// Linear stratum `∩_{i∈S} {L_i = 0}` of an arrangement, identified with
/// `P^m`, `m = n − |S|`, through a rational change of coordinates.
///
/// The coordinates `w = M z` have the forms `L_i` (`i ∈ S`) as their last
/// `|S|` entries; the first `m + 1` entries are coordinates on the stratum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    subset: Vec<usize>,
    coords: Matrix,
    inverse: Matrix,
}

impl Stratum {
    pub fn new(arrangement: &Arrangement, subset: &[usize]) -> Result<Stratum> {
        if !arrangement.stratum_nonempty(subset) {
            return Err(Error::Domain(format!("stratum {subset:?} is empty")));
        }
        let n = arrangement.dim();
        let rows: Vec<Vec<Rational>> = subset.iter().map(|&i| arrangement.hyperplanes()[i].coeffs().to_vec()).collect();
        let coords = Matrix::complete_basis(&rows, n + 1).ok_or(Error::SingularMatrix)?;
        let inverse = coords.inverse().ok_or(Error::SingularMatrix)?;
        Ok(Stratum { subset: subset.to_vec(), coords, inverse })
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    /// Projective dimension `m` of the stratum.
    pub fn dim(&self) -> usize {
        self.coords.rows() - 1 - self.subset.len()
    }

    /// The `(n+1) × (m+1)` matrix `B` with `z = B w` on the stratum.
    pub fn parametrization(&self) -> Matrix {
        let m = self.dim() + 1;
        let rows = (0..self.coords.rows()).map(|i| self.inverse.row(i)[..m].to_vec()).collect();
        Matrix::from_rows(rows)
    }

    pub fn to_ambient(&self, w: &[Rational]) -> Vec<Rational> {
        self.parametrization().mul_vec(w)
    }

    /// Stratum coordinates of an ambient point, if it lies on the stratum.
    pub fn to_local(&self, z: &[Rational]) -> Option<Vec<Rational>> {
        let w = self.coords.mul_vec(z);
        let m = self.dim() + 1;
        if w[m..].iter().all(Zero::is_zero) {
            Some(w[..m].to_vec())
        } else {
            None
        }
    }

    /// The single point of a zero-dimensional stratum.
    pub fn point(&self) -> Option<Vec<Rational>> {
        (self.dim() == 0).then(|| self.to_ambient(&[Rational::from_integer(1.into())]))
    }
}

/// A foliation restricted to an arrangement stratum.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub stratum: Stratum,
    /// `None` when the restricted field is radial (including identically
    /// zero), i.e. the whole stratum is singular.
    pub foliation: Option<Foliation>,
    /// Remaining hyperplanes cut down to the stratum.
    pub arrangement: Arrangement,
    /// Original indices of the hyperplanes in `arrangement`.
    pub remaining: Vec<usize>,
    pub effective_degree: u32,
}

/// Restricts `F` to the stratum of `subset`, which must have positive dimension.
///
/// The restricted representative keeps the degree of `F`. Dividing out a
/// common factor would drop singular points of `F` lying on the stratum, and
/// for `m ≥ 2` a common factor of the minors already means a curve of
/// singularities, which the validation rejects.
pub fn restrict_to_stratum(f: &Foliation, arrangement: &Arrangement, subset: &[usize]) -> Result<Restriction> {
    let n = f.dim();
    if arrangement.dim() != n {
        return Err(Error::RingMismatch { expected: n + 1, found: arrangement.dim() + 1 });
    }
    for &i in subset {
        if !f.is_logarithmic(&arrangement.hyperplanes()[i]) {
            return Err(Error::NotLogarithmic { index: i });
        }
    }
    let stratum = Stratum::new(arrangement, subset)?;
    let m = stratum.dim();
    if m == 0 {
        return Err(Error::Domain("restriction to a point stratum".into()));
    }
    let param = stratum.parametrization();
    let images: Vec<MultiPoly> = (0..=n).map(|i| MultiPoly::linear(param.row(i))).collect();
    let pulled: Vec<MultiPoly> = f.components().iter().map(|p| p.compose(&images)).collect();
    let restricted: Vec<MultiPoly> = (0..=m)
        .map(|i| (0..=n).fold(MultiPoly::zero(m + 1), |acc, k| acc + pulled[k].scale(&stratum.coords[(i, k)])))
        .collect();

    let remaining: Vec<usize> = (0..arrangement.len()).filter(|i| !subset.contains(i)).collect();
    let forms = remaining
        .iter()
        .map(|&i| LinearForm::new(arrangement.hyperplanes()[i].pull_back(&param)))
        .collect::<Result<Vec<_>>>()?;
    let restricted_arrangement = Arrangement::new(m, forms)?;

    let foliation = if minors_of(&restricted).iter().all(MultiPoly::is_zero) {
        None
    } else {
        Some(Foliation::new(restricted)?)
    };
    Ok(Restriction {
        stratum,
        effective_degree: foliation.as_ref().map_or(0, Foliation::degree),
        foliation,
        arrangement: restricted_arrangement,
        remaining,
    })
}
