mod common;

use common::*;
use logfol_core::exactpoly::rat;
use logfol_core::indices::milnor_oracle;
use logfol_core::{buchberger, Ideal, MonomialOrder, MultiPoly, QuotientDim};
use proptest::prelude::*;

const ORDERS: [MonomialOrder; 3] = [MonomialOrder::GrevLex, MonomialOrder::Lex, MonomialOrder::Elimination(1)];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduced_basis_ignores_generator_order(
        gens in prop::collection::vec(arb_poly(3, 2, 3), 1..=3),
        order_pick in 0usize..3,
    ) {
        let order = ORDERS[order_pick];
        let forward = buchberger(3, &gens, order).unwrap();
        let mut reversed = gens.clone();
        reversed.reverse();
        let backward = buchberger(3, &reversed, order).unwrap();
        prop_assert_eq!(forward.basis(), backward.basis());
    }

    #[test]
    fn redundant_generators_change_nothing(
        gens in prop::collection::vec(arb_poly(2, 3, 3), 2..=3),
        mult in arb_poly(2, 1, 2),
    ) {
        let base = buchberger(2, &gens, MonomialOrder::GrevLex).unwrap();
        let mut more = gens.clone();
        more.push(&(&gens[0] * &mult) + &gens[1]);
        let extended = buchberger(2, &more, MonomialOrder::GrevLex).unwrap();
        prop_assert_eq!(base.basis(), extended.basis());
    }

    #[test]
    fn normal_form_is_linear_and_idempotent(
        gens in prop::collection::vec(arb_poly(2, 2, 3), 1..=2),
        f in arb_poly(2, 4, 5),
        g in arb_poly(2, 4, 5),
        a in -5i64..=5,
        b in -5i64..=5,
    ) {
        let ideal = buchberger(2, &gens, MonomialOrder::GrevLex).unwrap();
        let combo = &f.scale(&rat(a)) + &g.scale(&rat(b));
        let lhs = ideal.normal_form(&combo).unwrap();
        let rhs = &ideal.normal_form(&f).unwrap().scale(&rat(a)) + &ideal.normal_form(&g).unwrap().scale(&rat(b));
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(ideal.normal_form(&lhs).unwrap(), lhs.clone());
        prop_assert!(ideal.contains(&(&combo - &lhs)).unwrap());
    }

    #[test]
    fn quotient_dimension_of_triangular_systems(
        ((gens, expected), m) in (1usize..=3).prop_flat_map(|n| (arb_triangular(n, 12), arb_unimodular(n))),
    ) {
        let n = gens[0].nvars();
        let moved = substitute_all(&gens, &m);
        let ideal = Ideal::new(n, moved.clone()).unwrap();
        prop_assert_eq!(ideal.quotient_dimension(), QuotientDim::Finite(expected));
        prop_assert_eq!(macaulay_dimension(n, &moved, 14), Some(expected));
    }

    #[test]
    fn saturation_is_stable(
        gens in prop::collection::vec(arb_poly(2, 2, 3), 1..=2),
        f in arb_poly(2, 1, 3),
    ) {
        prop_assume!(!f.is_zero());
        let ideal = buchberger(2, &gens, MonomialOrder::GrevLex).unwrap();
        let colon = ideal.quotient(&f).unwrap();
        let sat = ideal.saturate_by(&f).unwrap();
        prop_assert!(colon.contains_ideal(&ideal));
        prop_assert!(sat.contains_ideal(&colon));
        prop_assert!(sat.quotient(&f).unwrap().same_ideal(&sat));
    }

    #[test]
    fn intersection_lies_between_product_and_factors(
        a in prop::collection::vec(arb_poly(2, 2, 3), 1..=2),
        b in prop::collection::vec(arb_poly(2, 2, 3), 1..=2),
    ) {
        let i = Ideal::new(2, a.clone()).unwrap();
        let j = Ideal::new(2, b.clone()).unwrap();
        let meet = i.intersect(&j);
        let product: Vec<MultiPoly> = a.iter().flat_map(|f| b.iter().map(move |g| f * g)).collect();
        let product = Ideal::new(2, product).unwrap().grevlex();
        prop_assert!(meet.contains_ideal(&product));
        prop_assert!(i.grevlex().contains_ideal(&meet));
        prop_assert!(j.grevlex().contains_ideal(&meet));
    }

    #[test]
    fn display_round_trips(f in arb_poly(3, 4, 6)) {
        let text = f.to_string();
        prop_assert_eq!(logfol_core::parse_poly(&text, &["x0", "x1", "x2"]).unwrap(), f);
    }

    #[test]
    fn local_lengths_add_up(
        (gens, _) in arb_triangular(2, 8),
        p0 in -2i64..=2,
        p1 in -2i64..=2,
    ) {
        let ideal = Ideal::new(2, gens).unwrap();
        let p = [rat(p0), rat(p1)];
        let away = ideal.saturate(&Ideal::point(&p)).unwrap();
        let total = ideal.quotient_dimension().finite().unwrap();
        let rest = away.quotient_dimension().finite().unwrap();
        prop_assert_eq!(total, rest + milnor_oracle(&ideal, &p, 20).unwrap());
    }
}

#[test]
fn macaulay_oracle_on_fixed_ideals() {
    let xy = ["x", "y"];
    let cases: [(&[&str], usize); 5] = [
        (&["x^2", "y"], 2),
        (&["x*(x - 1)", "y*(y - 1)"], 4),
        (&["x^2 - y", "y^2 - x"], 4),
        (&["x^3", "x*y", "y^2"], 4),
        (&["x^2 + y^2 - 1", "x - y"], 2),
    ];
    for (src, expected) in cases {
        let gens = polys(src, &xy);
        assert_eq!(Ideal::new(2, gens.clone()).unwrap().quotient_dimension(), QuotientDim::Finite(expected));
        assert_eq!(macaulay_dimension(2, &gens, 12), Some(expected), "{src:?}");
    }
}
