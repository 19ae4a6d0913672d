use criterion::{criterion_group, criterion_main, Criterion};
use logfol_bench::{cyclic, jouanolou, triangle};
use logfol_core::chern::{closed_form_sigma, lhs_integral, ChernInput};
use logfol_core::exactpoly::rat;
use logfol_core::indices::{milnor_at_point, milnor_oracle, rhs_total, total_milnor};
use logfol_core::{buchberger, Ideal, MonomialOrder};
use std::hint::black_box;

fn groebner(c: &mut Criterion) {
    let gens = cyclic(4);
    c.bench_function("buchberger cyclic-4 grevlex", |b| {
        b.iter(|| buchberger(4, black_box(&gens), MonomialOrder::GrevLex).unwrap())
    });
    c.bench_function("buchberger cyclic-4 lex", |b| b.iter(|| buchberger(4, black_box(&gens), MonomialOrder::Lex).unwrap()));
}

fn index_side(c: &mut Criterion) {
    let (f2, a2) = triangle(2);
    c.bench_function("rhs_total triangle P2", |b| b.iter(|| rhs_total(black_box(&f2), &a2).unwrap()));
    let (f3, a3) = triangle(3);
    c.bench_function("rhs_total triangle P3", |b| b.iter(|| rhs_total(black_box(&f3), &a3).unwrap()));
    let j = jouanolou(2, 3);
    c.bench_function("total_milnor jouanolou P2 d=3", |b| b.iter(|| total_milnor(black_box(&j)).unwrap()));

    let ideal = Ideal::new(2, j.chart_field(0).components).unwrap();
    let origin = [rat(0), rat(0)];
    c.bench_function("milnor saturation", |b| b.iter(|| milnor_at_point(black_box(&ideal), &origin).unwrap()));
    c.bench_function("milnor stabilisation", |b| b.iter(|| milnor_oracle(black_box(&ideal), &origin, 40).unwrap()));
}

fn chern_side(c: &mut Criterion) {
    let mut grid = Vec::new();
    for n in 1..=4 {
        for k in 0..=4 {
            for d in 0..=5 {
                grid.push(ChernInput::new(n, vec![2; k], d).unwrap());
            }
        }
    }
    c.bench_function("lhs_integral grid", |b| {
        b.iter(|| grid.iter().map(|i| lhs_integral(black_box(i)).unwrap()).sum::<i64>())
    });
    c.bench_function("closed_form_sigma grid", |b| {
        b.iter(|| grid.iter().map(|i| closed_form_sigma(black_box(i)).unwrap()).sum::<i64>())
    });
}

criterion_group!(benches, groebner, index_side, chern_side);
criterion_main!(benches);
