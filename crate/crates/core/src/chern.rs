//! Chern numbers on `P^n` as truncated power series in the hyperplane class.
//!
//! Everything here works in `Q[h]/(h^{n+1})`, where `h^n` integrates to 1.

use crate::exactpoly::Rational;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use std::ops::Mul;

/// Element of `Q[h]/(h^{n+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Series with the given low-order coefficients, truncated at `h^n`.
    pub fn new(n: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(n + 1, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn one(n: usize) -> Self {
        Self::new(n, vec![Rational::one()])
    }

    /// `a + b h`.
    pub fn linear(n: usize, a: i64, b: i64) -> Self {
        Self::new(n, vec![Rational::from_integer(a.into()), Rational::from_integer(b.into())])
    }

    /// Truncation order `n`.
    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.precision()), |acc, _| &acc * self)
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Domain("series with zero constant term is not invertible".into()));
        }
        let n = self.precision();
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = c0.recip();
        for k in 1..=n {
            let s: Rational = (1..=k).map(|i| &self.coeffs[i] * &out[k - i]).sum();
            out[k] = -s / c0;
        }
        Ok(TruncatedSeries { coeffs: out })
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.precision(), rhs.precision(), "mixed truncation orders");
        let n = self.precision();
        let coeffs = (0..=n)
            .map(|k| (0..=k).map(|i| &self.coeffs[i] * &rhs.coeffs[k - i]).sum())
            .collect();
        TruncatedSeries { coeffs }
    }
}

/// Numerical data of the left side: `P^n`, the degrees of the divisor
/// components, and the foliation degree `d` (so `T_F = O(1 − d)`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChernInput {
    n: usize,
    degrees: Vec<u32>,
    d: u32,
}

impl ChernInput {
    pub fn new(n: usize, degrees: Vec<u32>, d: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("projective dimension must be positive".into()));
        }
        if degrees.contains(&0) {
            return Err(Error::Domain("divisor components have positive degree".into()));
        }
        Ok(ChernInput { n, degrees, d })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn foliation_degree(&self) -> u32 {
        self.d
    }
}

/// `c(T(−log D)) = (1+h)^{n+1} / ∏ (1 + d_i h)`.
pub fn chern_log_tangent(input: &ChernInput) -> TruncatedSeries {
    let n = input.n;
    let mut c = TruncatedSeries::linear(n, 1, 1).pow(n as u32 + 1);
    for &di in &input.degrees {
        let inv = TruncatedSeries::linear(n, 1, di as i64).inverse().expect("unit constant term");
        c = &c * &inv;
    }
    c
}

/// Full Chern series of `T(−log D) − T_F`.
fn virtual_series(input: &ChernInput) -> TruncatedSeries {
    let tangent = TruncatedSeries::linear(input.n, 1, 1 - input.d as i64).inverse().expect("unit constant term");
    &chern_log_tangent(input) * &tangent
}

fn integer(value: &Rational) -> Result<i64> {
    if !value.is_integer() {
        return Err(Error::Internal(format!("Chern number {value} is not an integer")));
    }
    value.to_integer().to_i64().ok_or_else(|| Error::Internal(format!("Chern number {value} overflows i64")))
}

/// `∫ c_n(T(−log D) − T_F)`: the coefficient of `h^n`.
pub fn lhs_integral(input: &ChernInput) -> Result<i64> {
    integer(virtual_series(input).coeff(input.n))
}

/// Complete homogeneous symmetric polynomial `h_m` at the given values.
pub fn complete_homogeneous(m: usize, args: &[BigInt]) -> BigInt {
    // h_m(a_1..a_r) = h_m(a_1..a_{r-1}) + a_r h_{m-1}(a_1..a_r)
    let mut row = vec![BigInt::zero(); m + 1];
    row[0] = BigInt::one();
    for a in args {
        for k in 1..=m {
            let prev = row[k - 1].clone();
            row[k] += a * prev;
        }
    }
    row[m].clone()
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

fn sigma_with(input: &ChernInput, args: &[BigInt]) -> Result<i64> {
    let n = input.n;
    let total: BigInt = (0..=n).map(|i| binomial(n + 1, i) * complete_homogeneous(n - i, args)).sum();
    total.to_i64().ok_or_else(|| Error::Internal(format!("sigma value {total} overflows i64")))
}

/// `Σ_i C(n+1, i) · h_{n−i}(−d_1, …, −d_k, d − 1)`, which equals [`lhs_integral`].
pub fn closed_form_sigma(input: &ChernInput) -> Result<i64> {
    let mut args: Vec<BigInt> = input.degrees.iter().map(|&di| -BigInt::from(di)).collect();
    args.push(BigInt::from(input.d as i64 - 1));
    sigma_with(input, &args)
}

/// The same sum with every argument positive, `h_{n−i}(d_1, …, d_k, d − 1)`.
/// It does not agree with [`lhs_integral`] once `k > 0`; kept to report the gap.
pub fn positive_argument_sigma(input: &ChernInput) -> Result<i64> {
    let mut args: Vec<BigInt> = input.degrees.iter().map(|&di| BigInt::from(di)).collect();
    args.push(BigInt::from(input.d as i64 - 1));
    sigma_with(input, &args)
}

/// Checks the deletion relation for component `drop`:
///
/// `∫_{P^n} c_n(T(−log D) − T_F) = ∫_{P^n} c_n(T(−log D̂) − T_F) − ∫_{D_k} c_{n−1}(T_{D_k}(−log D̂|) − T_F|)`.
///
/// The last integral is `d_k · [h^{n−1}]` of the full series; when `D_k` is a
/// hyperplane it is also evaluated independently on `P^{n−1}`.
pub fn recursion_check(input: &ChernInput, drop: usize) -> Result<bool> {
    let n = input.n;
    if n < 2 {
        return Err(Error::Domain("the deletion relation needs n ≥ 2".into()));
    }
    let dk = *input
        .degrees
        .get(drop)
        .ok_or_else(|| Error::Domain(format!("no divisor component {drop}")))?;
    let mut rest = input.degrees.clone();
    rest.remove(drop);
    let without = ChernInput::new(n, rest.clone(), input.d)?;
    let on_component = virtual_series(input).coeff(n - 1) * Rational::from_integer(dk.into());
    let on_component = integer(&on_component)?;
    let mut holds = lhs_integral(input)? == lhs_integral(&without)? - on_component;
    if dk == 1 {
        let restricted = ChernInput::new(n - 1, rest, input.d)?;
        holds &= lhs_integral(&restricted)? == on_component;
    }
    Ok(holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    fn input(n: usize, degrees: &[u32], d: u32) -> ChernInput {
        ChernInput::new(n, degrees.to_vec(), d).unwrap()
    }

    fn ints(s: &TruncatedSeries) -> Vec<Rational> {
        s.coeffs().to_vec()
    }

    #[test]
    fn inverses() {
        assert_eq!(ints(&TruncatedSeries::linear(2, 1, 1).inverse().unwrap()), vec![rat(1), rat(-1), rat(1)]);
        assert_eq!(ints(&TruncatedSeries::linear(2, 1, -1).inverse().unwrap()), vec![rat(1), rat(1), rat(1)]);
        assert_eq!(ints(&TruncatedSeries::linear(2, 1, 2).inverse().unwrap()), vec![rat(1), rat(-2), rat(4)]);
        assert!(TruncatedSeries::linear(2, 0, 1).inverse().is_err());
    }

    #[test]
    fn log_tangent_classes() {
        assert_eq!(chern_log_tangent(&input(2, &[1, 1, 1], 2)), TruncatedSeries::one(2));
        assert_eq!(ints(&chern_log_tangent(&input(2, &[], 2))), vec![rat(1), rat(3), rat(3)]);
        assert_eq!(ints(&chern_log_tangent(&input(2, &[2], 2))), vec![rat(1), rat(1), rat(1)]);
    }

    #[test]
    fn integrals() {
        assert_eq!(lhs_integral(&input(2, &[1, 1, 1], 2)).unwrap(), 1);
        assert_eq!(lhs_integral(&input(2, &[], 2)).unwrap(), 7);
        assert_eq!(lhs_integral(&input(2, &[1], 2)).unwrap(), 4);
    }

    #[test]
    fn sigma_forms() {
        assert_eq!(closed_form_sigma(&input(2, &[], 3)).unwrap(), 13);
        assert_eq!(closed_form_sigma(&input(2, &[1], 2)).unwrap(), 4);
        assert_eq!(closed_form_sigma(&input(1, &[1], 3)).unwrap(), 3);
        assert_eq!(positive_argument_sigma(&input(2, &[1], 2)).unwrap(), 12);
    }

    #[test]
    fn deletion() {
        assert!(recursion_check(&input(2, &[1, 1], 2), 1).unwrap());
        assert!(recursion_check(&input(2, &[1], 3), 0).unwrap());
        assert!(recursion_check(&input(3, &[1, 1, 1], 2), 2).unwrap());
        assert!(recursion_check(&input(3, &[2, 3], 4), 1).unwrap());
    }

    #[test]
    fn symmetric_functions() {
        let args = [BigInt::from(-1), BigInt::from(1)];
        assert_eq!(complete_homogeneous(2, &args), BigInt::from(1));
        assert_eq!(complete_homogeneous(1, &args), BigInt::from(0));
        assert_eq!(complete_homogeneous(0, &[]), BigInt::from(1));
        assert_eq!(complete_homogeneous(3, &[]), BigInt::from(0));
    }
}
