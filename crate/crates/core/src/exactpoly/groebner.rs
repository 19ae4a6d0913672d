use super::{Monomial, MonomialOrder, MultiPoly, Rational};
use crate::{Error, Result};
use num_traits::{One, Zero};
use std::cmp::Ordering;

/// Terms sorted by decreasing monomial under the active order.
type Terms = Vec<(Monomial, Rational)>;

fn sorted_terms(p: &MultiPoly, order: MonomialOrder) -> Terms {
    let mut t: Terms = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    t
}

fn make_monic(t: &mut Terms) {
    if let Some((_, lc)) = t.first() {
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in t.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

/// `f - c * m * g`, merging two sorted term lists.
fn sub_scaled(f: &[(Monomial, Rational)], c: &Rational, m: &Monomial, g: &[(Monomial, Rational)], order: MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    while i < f.len() || j < g.len() {
        if j == g.len() {
            out.extend_from_slice(&f[i..]);
            break;
        }
        let gm = g[j].0.mul(m);
        if i == f.len() {
            out.push((gm, -(c * &g[j].1)));
            j += 1;
            continue;
        }
        match order.cmp(&f[i].0, &gm) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm, -(c * &g[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = &f[i].1 - c * &g[j].1;
                if !v.is_zero() {
                    out.push((gm, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Remainder of `f` on division by monic `basis`. With `full = false` only
/// the leading term is reduced away (head reduction).
fn reduce(f: Terms, basis: &[&Terms], order: MonomialOrder, full: bool) -> Terms {
    let mut rem: Terms = Vec::new();
    let mut f = f;
    let mut start = 0;
    while start < f.len() {
        let (lm, lc) = (&f[start].0, &f[start].1);
        let divisor = basis.iter().find_map(|b| b[0].0.quotient_of(lm).map(|q| (q, *b)));
        match divisor {
            Some((q, b)) => {
                let c = lc.clone();
                f = sub_scaled(&f[start..], &c, &q, b, order);
                start = 0;
            }
            None => {
                if !full {
                    rem.extend(f.drain(start..));
                    return rem;
                }
                rem.push(f[start].clone());
                start += 1;
            }
        }
    }
    rem
}

fn spoly(f: &Terms, g: &Terms, order: MonomialOrder) -> Terms {
    let lcm = f[0].0.lcm(&g[0].0);
    let mf = f[0].0.quotient_of(&lcm).expect("lcm divisible");
    let mg = g[0].0.quotient_of(&lcm).expect("lcm divisible");
    let left: Terms = f[1..].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    sub_scaled(&left, &Rational::one(), &mg, &g[1..], order)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Gebauer–Möller update of the active set `active` and pair list `pairs`
/// with the new polynomial `h` (index into `polys`).
fn update(polys: &[Terms], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let lh = &polys[h][0].0;
    let mut c: Vec<Pair> = active
        .iter()
        .map(|&g| Pair { i: g, j: h, lcm: lh.lcm(&polys[g][0].0) })
        .collect();
    let mut d: Vec<Pair> = Vec::new();
    while !c.is_empty() {
        let p = c.remove(0);
        let lg = &polys[p.i][0].0;
        let keep = lh.is_coprime(lg)
            || !c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
        if keep {
            d.push(p);
        }
    }
    d.retain(|p| !lh.is_coprime(&polys[p.i][0].0));
    pairs.retain(|p| {
        let l1 = lh.lcm(&polys[p.i][0].0);
        let l2 = lh.lcm(&polys[p.j][0].0);
        !(lh.divides(&p.lcm) && l1 != p.lcm && l2 != p.lcm)
    });
    pairs.extend(d);
    active.retain(|&g| !lh.divides(&polys[g][0].0));
    active.push(h);
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`,
/// sorted by decreasing leading monomial.
fn reduced_basis(gens: &[MultiPoly], order: MonomialOrder) -> Vec<MultiPoly> {
    let nvars = match gens.first() {
        Some(g) => g.nvars(),
        None => return Vec::new(),
    };
    let mut polys: Vec<Terms> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<Terms> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut t = sorted_terms(g, order);
            make_monic(&mut t);
            t
        })
        .collect();
    // smallest leading monomials first keeps early reductions cheap
    inputs.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0).then_with(|| a.len().cmp(&b.len())));

    for t in inputs {
        let basis: Vec<&Terms> = active.iter().map(|&k| &polys[k]).collect();
        let mut r = reduce(t, &basis, order, false);
        if r.is_empty() {
            continue;
        }
        make_monic(&mut r);
        polys.push(r);
        update(&polys, &mut active, &mut pairs, polys.len() - 1);
    }

    while !pairs.is_empty() {
        let (best, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| order.cmp(&a.lcm, &b.lcm).then((a.i, a.j).cmp(&(b.i, b.j))))
            .expect("nonempty");
        let p = pairs.swap_remove(best);
        let s = spoly(&polys[p.i], &polys[p.j], order);
        let basis: Vec<&Terms> = active.iter().map(|&k| &polys[k]).collect();
        let mut r = reduce(s, &basis, order, false);
        if r.is_empty() {
            continue;
        }
        make_monic(&mut r);
        polys.push(r);
        update(&polys, &mut active, &mut pairs, polys.len() - 1);
    }

    // interreduce tails
    let minimal: Vec<Terms> = active.iter().map(|&k| polys[k].clone()).collect();
    let mut reduced: Vec<Terms> = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let others: Vec<&Terms> = minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, t)| t).collect();
        let head = g[0].clone();
        let mut tail = reduce(g[1..].to_vec(), &others, order, true);
        let mut t = vec![head];
        t.append(&mut tail);
        reduced.push(t);
    }
    reduced.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
    reduced.into_iter().map(|t| MultiPoly::from_terms(nvars, t)).collect()
}

/// Polynomial ideal with an optional cached reduced Gröbner basis.
#[derive(Clone, Debug)]
pub struct Ideal {
    nvars: usize,
    generators: Vec<MultiPoly>,
    basis: Option<(MonomialOrder, Vec<MultiPoly>)>,
}

/// Computes the reduced Gröbner basis of `(gens)` and returns the ideal with
/// the basis cached.
pub fn buchberger(nvars: usize, gens: &[MultiPoly], order: MonomialOrder) -> Result<Ideal> {
    let ideal = Ideal::new(nvars, gens.to_vec())?;
    let basis = reduced_basis(&ideal.generators, order);
    Ok(Ideal { basis: Some((order, basis)), ..ideal })
}

impl Ideal {
    pub fn new(nvars: usize, generators: Vec<MultiPoly>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::RingMismatch { expected: nvars, found: g.nvars() });
        }
        Ok(Ideal { nvars, generators, basis: None })
    }

    /// Builds an ideal from a list already known to be a reduced basis.
    pub(crate) fn from_reduced_basis(nvars: usize, basis: Vec<MultiPoly>, order: MonomialOrder) -> Self {
        Ideal { nvars, generators: basis.clone(), basis: Some((order, basis)) }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn basis(&self) -> Option<&[MultiPoly]> {
        self.basis.as_ref().map(|(_, b)| b.as_slice())
    }

    pub fn order(&self) -> Option<MonomialOrder> {
        self.basis.as_ref().map(|(o, _)| *o)
    }

    /// Returns this ideal with a reduced basis under `order` cached,
    /// reusing the existing cache when the order matches.
    pub fn with_basis(&self, order: MonomialOrder) -> Ideal {
        if self.order() == Some(order) {
            return self.clone();
        }
        let gens = match &self.basis {
            Some((_, b)) => b.clone(),
            None => self.generators.clone(),
        };
        Ideal { nvars: self.nvars, generators: self.generators.clone(), basis: Some((order, reduced_basis(&gens, order))) }
    }

    /// Grevlex basis, the default for dimension counts.
    pub fn grevlex(&self) -> Ideal {
        self.with_basis(MonomialOrder::GrevLex)
    }

    /// Unique remainder of `f` modulo the cached reduced basis.
    pub fn normal_form(&self, f: &MultiPoly) -> Result<MultiPoly> {
        let (order, basis) = self.basis.as_ref().ok_or(Error::NoBasis)?;
        if f.nvars() != self.nvars {
            return Err(Error::RingMismatch { expected: self.nvars, found: f.nvars() });
        }
        let sorted: Vec<Terms> = basis.iter().map(|b| sorted_terms(b, *order)).collect();
        let refs: Vec<&Terms> = sorted.iter().collect();
        let r = reduce(sorted_terms(f, *order), &refs, *order, true);
        Ok(MultiPoly::from_terms(self.nvars, r))
    }

    pub fn contains(&self, f: &MultiPoly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn is_unit(&self) -> bool {
        let b = self.grevlex();
        b.basis().map(|b| b.len() == 1 && b[0].is_constant()).unwrap_or(false)
    }

    /// Ideal equality, decided by comparing reduced grevlex bases.
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.nvars == other.nvars && self.grevlex().basis() == other.grevlex().basis()
    }

    /// `true` when every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        let me = self.grevlex();
        other.generators.iter().all(|g| me.contains(g).unwrap_or(false))
    }
}
