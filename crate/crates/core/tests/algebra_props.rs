mod common;

use std::collections::BTreeMap;

use ihs_hodge::equivariant::EquivariantDiamond;
use ihs_hodge::goettsche::TruncatedSeries3;
use ihs_hodge::HodgeDiamond;
use proptest::prelude::*;

fn abstract_diamond(max_deg: u32, max_value: i64) -> impl Strategy<Value = HodgeDiamond> {
    proptest::collection::btree_map((0..=max_deg, 0..=max_deg), 0..=max_value, 0..6)
        .prop_map(|m| HodgeDiamond::new(None, m.into_iter().map(|((p, q), v)| (p, q, v))).unwrap())
}

/// Symmetric diamond of dimension `n`, built from a free choice of the
/// entries with `p <= q` and `p + q <= n`.
fn sized_diamond(n: u32) -> impl Strategy<Value = HodgeDiamond> {
    let cells: Vec<(u32, u32)> = (0..=n).flat_map(|p| (p..=n).map(move |q| (p, q))).filter(|&(p, q)| p + q <= n).collect();
    proptest::collection::vec(0..5i64, cells.len()).prop_map(move |values| {
        let mut m = BTreeMap::new();
        for (&(p, q), &v) in cells.iter().zip(&values) {
            for (a, b) in [(p, q), (q, p), (n - p, n - q), (n - q, n - p)] {
                m.insert((a, b), v);
            }
        }
        m.insert((0, 0), 1);
        m.insert((n, n), 1);
        HodgeDiamond::new(Some(n), m.into_iter().map(|((p, q), v)| (p, q, v))).unwrap()
    })
}

fn even_equivariant() -> impl Strategy<Value = EquivariantDiamond> {
    proptest::collection::btree_map((0..=2u32, 0..=2u32), (0..=4i64, 0..=4i64), 0..4).prop_map(|m| {
        let rows = m.into_iter().filter(|((p, q), _)| (p + q) % 2 == 0).map(|((p, q), (a, b))| (p, q, a, b));
        EquivariantDiamond::new(None, rows).unwrap()
    })
}

fn sparse_series(max_xy: u32, max_t: u32) -> impl Strategy<Value = BTreeMap<(u32, u32, u32), i64>> {
    proptest::collection::btree_map((0..=max_xy, 0..=max_xy, 0..=max_t), -5..=5i64, 0..8)
}

fn to_series(terms: &BTreeMap<(u32, u32, u32), i64>, max_xy: u32, max_t: u32) -> TruncatedSeries3 {
    let mut s = TruncatedSeries3::zero(max_xy, max_t);
    for (&(a, b, m), &c) in terms {
        s.add_term(a, b, m, c);
    }
    s
}

fn from_series(s: &TruncatedSeries3) -> BTreeMap<(u32, u32, u32), i64> {
    s.terms().filter(|&(_, c)| c != 0).collect()
}

proptest! {
    #[test]
    fn sum_is_commutative_and_associative(a in abstract_diamond(4, 9), b in abstract_diamond(4, 9), c in abstract_diamond(4, 9)) {
        prop_assert_eq!(a.direct_sum(&b), b.direct_sum(&a));
        prop_assert_eq!(a.direct_sum(&b).direct_sum(&c), a.direct_sum(&b.direct_sum(&c)));
    }

    #[test]
    fn tensor_is_commutative_and_associative(a in abstract_diamond(3, 5), b in abstract_diamond(3, 5), c in abstract_diamond(3, 5)) {
        prop_assert_eq!(a.tensor(&b), b.tensor(&a));
        prop_assert_eq!(a.tensor(&b).tensor(&c), a.tensor(&b.tensor(&c)));
        prop_assert_eq!(a.tensor(&HodgeDiamond::point().into_abstract()), a.clone());
    }

    #[test]
    fn tensor_distributes_over_sum(a in abstract_diamond(3, 5), b in abstract_diamond(3, 5), c in abstract_diamond(3, 5)) {
        prop_assert_eq!(a.tensor(&b.direct_sum(&c)), a.tensor(&b).direct_sum(&a.tensor(&c)));
    }

    #[test]
    fn betti_is_additive_and_multiplicative(a in sized_diamond(3), b in sized_diamond(2)) {
        let sum = a.direct_sum(&a).betti().unwrap();
        let ba = a.betti().unwrap();
        prop_assert_eq!(sum.as_slice().to_vec(), ba.as_slice().iter().map(|x| 2 * x).collect::<Vec<_>>());
        let prod = a.tensor(&b).betti().unwrap();
        let bb = b.betti().unwrap();
        for k in 0..prod.as_slice().len() {
            let conv: u64 = (0..=k).filter(|&i| i < ba.as_slice().len() && k - i < bb.as_slice().len())
                .map(|i| ba.get(i) * bb.get(k - i)).sum();
            prop_assert_eq!(prod.get(k), conv);
        }
    }

    #[test]
    fn euler_characteristic_from_chi_p(d in sized_diamond(4)) {
        let n = d.complex_dimension().unwrap();
        let from_columns: i64 = (0..=n).map(|p| if p % 2 == 0 { 1 } else { -1 } * d.chi_p(p).unwrap()).sum();
        prop_assert_eq!(from_columns, d.euler_characteristic().unwrap());
        let alternating: i64 = d.betti().unwrap().as_slice().iter().enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        prop_assert_eq!(alternating, d.euler_characteristic().unwrap());
    }

    #[test]
    fn random_symmetric_diamonds_pass_the_check(d in sized_diamond(4)) {
        prop_assert!(ihs_hodge::check_diamond(&d).unwrap().passed());
    }

    #[test]
    fn sym_and_ext_square_fill_the_tensor_square(d in abstract_diamond(3, 4)) {
        let even = HodgeDiamond::new(None, d.entries().filter(|((p, q), _)| (p + q) % 2 == 0).map(|((p, q), v)| (p, q, v as i64))).unwrap();
        let total = even.total_dimension();
        let s = even.sym_power(2).unwrap();
        let e = even.ext_power(2).unwrap();
        prop_assert_eq!(s.total_dimension() + e.total_dimension(), total * total);
        prop_assert_eq!(s.direct_sum(&e), even.tensor(&even));
    }

    #[test]
    fn forget_commutes_with_operations(a in even_equivariant(), b in even_equivariant(), k in 0..=3u32) {
        prop_assert_eq!(a.eq_sym_power(k).unwrap().forget(), a.forget().sym_power(k).unwrap());
        prop_assert_eq!(a.eq_ext_power(k).unwrap().forget(), a.forget().ext_power(k).unwrap());
        prop_assert_eq!(a.eq_tensor(&b).forget(), a.forget().tensor(&b.forget()));
        prop_assert_eq!(a.eq_sum(&b).forget(), a.forget().direct_sum(&b.forget()));
    }

    #[test]
    fn equivariant_powers_match_enumeration(a in even_equivariant(), k in 0..=3usize) {
        let basis = common::basis_of(&a);
        prop_assume!(basis.len() <= 10);
        prop_assert_eq!(common::as_map(&a.eq_sym_power(k as u32).unwrap()), common::brute_power(&basis, k, false));
        prop_assert_eq!(common::as_map(&a.eq_ext_power(k as u32).unwrap()), common::brute_power(&basis, k, true));
    }

    #[test]
    fn tate_twist_round_trips(d in abstract_diamond(4, 9), k in 0..4i32) {
        prop_assert_eq!(d.tate_twist(k).unwrap().tate_twist(-k).unwrap(), d.clone());
    }

    #[test]
    fn json_round_trips(d in sized_diamond(4), e in even_equivariant()) {
        prop_assert_eq!(HodgeDiamond::from_json(&d.to_json()).unwrap(), d);
        prop_assert_eq!(EquivariantDiamond::from_json(&e.to_json()).unwrap(), e);
    }

    #[test]
    fn series_product_matches_naive(a in sparse_series(4, 3), b in sparse_series(4, 3), c in sparse_series(4, 3)) {
        let (sa, sb, sc) = (to_series(&a, 4, 3), to_series(&b, 4, 3), to_series(&c, 4, 3));
        let ab = sa.mul(&sb).unwrap();
        prop_assert_eq!(from_series(&ab), common::naive_series_mul(&a, &b, 4, 3));
        prop_assert_eq!(&ab, &sb.mul(&sa).unwrap());
        prop_assert_eq!(ab.mul(&sc).unwrap(), sa.mul(&sb.mul(&sc).unwrap()).unwrap());
        prop_assert_eq!(sa.mul(&TruncatedSeries3::one(4, 3)).unwrap(), sa);
    }
}
