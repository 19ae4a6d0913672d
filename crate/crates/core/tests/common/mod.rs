#![allow(dead_code)]

use logfol_core::exactpoly::{linear_substitute, rat};
use logfol_core::{Matrix, Monomial, MultiPoly, Rational};
use proptest::prelude::*;

pub fn poly(src: &str, names: &[&str]) -> MultiPoly {
    logfol_core::parse_poly(src, names).unwrap()
}

pub fn polys(src: &[&str], names: &[&str]) -> Vec<MultiPoly> {
    src.iter().map(|s| poly(s, names)).collect()
}

/// Random polynomial in `nvars` variables with total degree at most `max_deg`.
pub fn arb_poly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, nvars), -4i64..=4), 0..=max_terms).prop_map(
        move |terms| {
            MultiPoly::from_terms(
                nvars,
                terms
                    .into_iter()
                    .filter(|(e, _)| e.iter().sum::<u32>() <= max_deg)
                    .map(|(e, c)| (Monomial::from_exponents(&e), rat(c))),
            )
        },
    )
}

/// Monomials of total degree at most `d` in `n` variables.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

const PRIMES: [u64; 2] = [2_147_483_647, 2_147_483_629];

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn reduce(c: &Rational, p: u64) -> u64 {
    let m = num_bigint::BigInt::from(p);
    let to_u64 = |x: &num_bigint::BigInt| -> u64 { ((x % &m + &m) % &m).try_into().unwrap() };
    let den = to_u64(c.denom());
    assert!(den != 0, "prime divides a denominator");
    mul_mod(to_u64(c.numer()), pow_mod(den, p - 2, p), p)
}

fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        let head: Vec<u64> = rows[rank].iter().map(|&x| mul_mod(x, inv, p)).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[c];
            if f != 0 {
                for (x, h) in row.iter_mut().zip(&head).skip(c) {
                    *x = (*x + p - mul_mod(f, *h, p)) % p;
                }
            }
        }
        rows[rank] = head;
        rank += 1;
    }
    rank
}

/// `dim P_{≤D} / span{m·g : deg(m·g) ≤ D}` for one truncation degree.
///
/// The rank over Q is at least the rank modulo any prime and equals it for
/// all but finitely many primes; the maximum over two 31-bit primes is used.
fn macaulay_corank(n: usize, gens: &[MultiPoly], d: u32) -> usize {
    let cols = monomials_up_to(n, d);
    let index: std::collections::HashMap<Monomial, usize> = cols.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let gd = g.degree().unwrap();
        if gd > d {
            continue;
        }
        for m in monomials_up_to(n, d - gd) {
            let mut row = vec![Rational::from_integer(0.into()); cols.len()];
            for (t, c) in g.terms() {
                row[index[&t.mul(&m)]] = c.clone();
            }
            rows.push(row);
        }
    }
    let rank = PRIMES
        .iter()
        .map(|&p| rank_mod(rows.iter().map(|r| r.iter().map(|c| reduce(c, p)).collect()).collect(), p))
        .max()
        .unwrap_or(0);
    cols.len() - rank
}

/// Brute-force dimension of `k[x]/I` from Macaulay matrices: the first value
/// repeated over two consecutive truncation degrees, searching up to `max_d`.
pub fn macaulay_dimension(n: usize, gens: &[MultiPoly], max_d: u32) -> Option<usize> {
    let start = gens.iter().filter_map(MultiPoly::degree).max().unwrap_or(0);
    let mut prev = None;
    for d in start..=max_d {
        let q = macaulay_corank(n, gens, d);
        if prev == Some(q) {
            return Some(q);
        }
        prev = Some(q);
    }
    None
}

/// Triangular system `x_i^{e_i} + (terms of lower x_i-degree)` with
/// quotient dimension `Π e_i`, plus the coefficient data it was built from.
pub fn arb_triangular(n: usize, max_product: u32) -> impl Strategy<Value = (Vec<MultiPoly>, usize)> {
    let exps = prop::collection::vec(1u32..=4, n).prop_filter("product bound", move |e| e.iter().product::<u32>() <= max_product);
    let tails = prop::collection::vec(prop::collection::vec((prop::collection::vec(0u32..=2, n), -3i64..=3), 0..=3), n);
    (exps, tails).prop_map(move |(exps, tails)| {
        let gens = (0..n)
            .map(|i| {
                let mut p = MultiPoly::var(n, i).pow(exps[i]);
                for (e, c) in &tails[i] {
                    // only earlier variables and lower powers of x_i
                    let mut e = e.clone();
                    for v in e.iter_mut().skip(i + 1) {
                        *v = 0;
                    }
                    e[i] %= exps[i];
                    if e.iter().sum::<u32>() <= exps[i] {
                        p = p + MultiPoly::monomial(Monomial::from_exponents(&e), rat(*c));
                    }
                }
                p
            })
            .collect();
        (gens, exps.iter().product::<u32>() as usize)
    })
}

/// Unit lower-triangular integer matrix, hence invertible.
pub fn arb_unimodular(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-2i64..=2, n * n).prop_map(move |v| {
        let mut m = Matrix::identity(n);
        for i in 0..n {
            for j in 0..i {
                m[(i, j)] = rat(v[i * n + j]);
            }
        }
        m
    })
}

pub fn substitute_all(gens: &[MultiPoly], m: &Matrix) -> Vec<MultiPoly> {
    gens.iter().map(|g| linear_substitute(g, m).unwrap()).collect()
}
