use crate::exactpoly::{Matrix, MultiPoly, Rational};
use crate::{Error, Result};
use num_traits::Zero;

/// Nonzero linear form `Σ a_i z_i` on `P^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm(Vec<Rational>);

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::Domain("zero linear form".into()));
        }
        Ok(LinearForm(coeffs))
    }

    /// The `i`-th coordinate form `z_i` on `P^n`.
    pub fn coordinate(n: usize, i: usize) -> Self {
        let mut c = vec![Rational::zero(); n + 1];
        c[i] = Rational::from_integer(1.into());
        LinearForm(c)
    }

    /// Reads a polynomial of degree exactly one with no constant term.
    pub fn from_poly(p: &MultiPoly) -> Result<Self> {
        match p.affine_coefficients() {
            Some((lin, c)) if c.is_zero() => LinearForm::new(lin),
            _ => Err(Error::Domain(format!("{p} is not a linear form"))),
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn to_poly(&self) -> MultiPoly {
        MultiPoly::linear(&self.0)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.0.iter().zip(point).map(|(a, x)| a * x).sum()
    }

    /// Pulls the form back along `z = B w`, where `B` has `nvars` rows.
    pub(crate) fn pull_back(&self, b: &Matrix) -> Vec<Rational> {
        (0..b.cols()).map(|j| (0..b.rows()).map(|i| &self.0[i] * &b[(i, j)]).sum()).collect()
    }
}

/// Hyperplane arrangement on `P^n` whose union is a normal crossing divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    n: usize,
    hyperplanes: Vec<LinearForm>,
}

/// Checks the normal-crossing condition: every set of hyperplanes with a
/// common point of `P^n` has linearly independent forms. Subsets of size
/// at most `n + 1` suffice, since a dependent subset with a common point
/// always contains a minimal dependent one of size `rank + 1 ≤ n + 1`.
pub fn validate_arrangement(forms: &[LinearForm], n: usize) -> Result<()> {
    if let Some(f) = forms.iter().find(|f| f.nvars() != n + 1) {
        return Err(Error::RingMismatch { expected: n + 1, found: f.nvars() });
    }
    let k = forms.len();
    for size in 2..=(n + 1).min(k) {
        for subset in subsets_of_size(k, size) {
            let rank = subset_rank(forms, &subset);
            // common projective point exists iff the kernel has dimension ≥ 1
            if rank < size && rank <= n {
                return Err(Error::NormalCrossing { subset });
            }
        }
    }
    Ok(())
}

fn subset_rank(forms: &[LinearForm], subset: &[usize]) -> usize {
    Matrix::from_rows(subset.iter().map(|&i| forms[i].0.clone()).collect()).rank()
}

/// All `size`-element subsets of `0..k`, in lexicographic order.
pub(crate) fn subsets_of_size(k: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            rec(i + 1, k, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, k, size, &mut Vec::new(), &mut out);
    out
}

impl Arrangement {
    pub fn new(n: usize, hyperplanes: Vec<LinearForm>) -> Result<Self> {
        validate_arrangement(&hyperplanes, n)?;
        Ok(Arrangement { n, hyperplanes })
    }

    pub fn empty(n: usize) -> Self {
        Arrangement { n, hyperplanes: Vec::new() }
    }

    /// The coordinate hyperplanes `z_i = 0` for the given indices.
    pub fn coordinate(n: usize, indices: &[usize]) -> Result<Self> {
        Self::new(n, indices.iter().map(|&i| LinearForm::coordinate(n, i)).collect())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[LinearForm] {
        &self.hyperplanes
    }

    /// Indices of the hyperplanes through `point`.
    pub fn containing(&self, point: &[Rational]) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.hyperplanes[i].eval(point).is_zero()).collect()
    }

    /// `true` when `∩_{i∈S} L_i` is a nonempty subset of `P^n`.
    pub fn stratum_nonempty(&self, subset: &[usize]) -> bool {
        subset.len() <= self.n && (subset.is_empty() || subset_rank(&self.hyperplanes, subset) == subset.len())
    }

    /// Subsets of hyperplane indices with nonempty intersection, by size.
    pub fn nonempty_strata(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for size in 1..=self.n.min(self.len()) {
            out.extend(subsets_of_size(self.len(), size).into_iter().filter(|s| self.stratum_nonempty(s)));
        }
        out
    }

    /// Drops the hyperplanes whose indices are listed.
    pub fn without(&self, drop: &[usize]) -> Arrangement {
        Arrangement {
            n: self.n,
            hyperplanes: (0..self.len()).filter(|i| !drop.contains(i)).map(|i| self.hyperplanes[i].clone()).collect(),
        }
    }

    /// Applies the coordinate change `w = M z`.
    pub fn transform(&self, m: &Matrix) -> Result<Arrangement> {
        let inv = m.inverse().ok_or(Error::SingularMatrix)?;
        let forms = self
            .hyperplanes
            .iter()
            .map(|l| LinearForm::new(l.pull_back(&inv)))
            .collect::<Result<Vec<_>>>()?;
        Arrangement::new(self.n, forms)
    }
}
