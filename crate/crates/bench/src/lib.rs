//! Fixed instances shared by the benchmarks.

use logfol_core::{parse_poly, Arrangement, Foliation, MultiPoly};

fn names(n: usize) -> Vec<String> {
    (0..=n).map(|i| format!("z{i}")).collect()
}

fn foliation(src: &[String]) -> Foliation {
    let owned = names(src.len() - 1);
    let names: Vec<&str> = owned.iter().map(String::as_str).collect();
    Foliation::new(src.iter().map(|s| parse_poly(s, &names).unwrap()).collect()).unwrap()
}

/// `P_i = z_i (z_i − z_0)` on `P^n`, tangent to all coordinate hyperplanes.
pub fn triangle(n: usize) -> (Foliation, Arrangement) {
    let comps: Vec<String> = (0..=n).map(|i| if i == 0 { "0".into() } else { format!("z{i}*(z{i} - z0)") }).collect();
    (foliation(&comps), Arrangement::coordinate(n, &(0..=n).collect::<Vec<_>>()).unwrap())
}

/// Jouanolou's field `Σ z_{i+1}^d ∂/∂z_i` (indices mod n + 1).
pub fn jouanolou(n: usize, d: u32) -> Foliation {
    let comps: Vec<String> = (0..=n).map(|i| format!("z{}^{d}", (i + 1) % (n + 1))).collect();
    foliation(&comps)
}

/// Generators of the cyclic `k`-roots system, a standard Gröbner stress test.
pub fn cyclic(k: usize) -> Vec<MultiPoly> {
    let mut gens = Vec::new();
    for len in 1..k {
        let mut sum = MultiPoly::zero(k);
        for start in 0..k {
            let term = (0..len).fold(MultiPoly::one(k), |acc, j| &acc * &MultiPoly::var(k, (start + j) % k));
            sum = sum + term;
        }
        gens.push(sum);
    }
    let all = (0..k).fold(MultiPoly::one(k), |acc, j| &acc * &MultiPoly::var(k, j));
    gens.push(&all - &MultiPoly::one(k));
    gens
}
