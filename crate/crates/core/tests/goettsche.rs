use ihs_hodge::goettsche::{
    factor_power, generating_series, hilbert_scheme_diamond, surface_diamond, GoettscheConfig, SurfaceKind,
};
use ihs_hodge::og6::markman_plain;
use ihs_hodge::{HodgeDiamond, HodgeError};

fn k3(n: u32) -> HodgeDiamond {
    hilbert_scheme_diamond(&surface_diamond(SurfaceKind::K3), n, GoettscheConfig::default()).unwrap()
}

/// Coefficients of `prod_k (1 - t^k)^(-24)` by direct expansion of each
/// factor as a geometric series.
fn k3_euler_numbers(max_n: usize) -> Vec<i64> {
    let mut series = vec![0i64; max_n + 1];
    series[0] = 1;
    for k in 1..=max_n {
        for _ in 0..24 {
            for m in k..=max_n {
                series[m] += series[m - k];
            }
        }
    }
    series
}

#[test]
fn euler_numbers_of_k3_hilbert_schemes() {
    let expected = k3_euler_numbers(5);
    assert_eq!(expected, vec![1, 24, 324, 3200, 25650, 176256]);
    for n in 0..=5u32 {
        assert_eq!(k3(n).euler_characteristic(), Ok(expected[n as usize]), "n = {n}");
    }
}

#[test]
fn second_betti_number_stabilises() {
    for n in 2..=5 {
        assert_eq!(k3(n).betti().unwrap().get(2), 23);
        assert_eq!(k3(n).get(1, 0), 0);
    }
}

#[test]
fn k3_squared() {
    let d = k3(2);
    assert_eq!(d.betti().unwrap().as_slice(), &[1, 0, 23, 0, 276, 0, 23, 0, 1]);
    assert_eq!((d.get(2, 0), d.get(1, 1), d.get(3, 1), d.get(2, 2), d.get(4, 0)), (1, 21, 21, 232, 1));
}

#[test]
fn k3_cubed_matches_its_decomposition() {
    let d = k3(3);
    assert_eq!(markman_plain(&d.weight_part(2)).unwrap().complete_by_duality(6).unwrap(), d);
}

#[test]
fn abelian_surface_hilbert_schemes_have_zero_euler_number() {
    for n in 1..=4 {
        let d = hilbert_scheme_diamond(&surface_diamond(SurfaceKind::Abelian), n, GoettscheConfig::default()).unwrap();
        assert_eq!(d.euler_characteristic(), Ok(0));
        assert_eq!(d.get(1, 0), 2);
    }
}

#[test]
fn cap_and_degenerate_factor() {
    let s = surface_diamond(SurfaceKind::K3);
    assert!(matches!(hilbert_scheme_diamond(&s, 6, GoettscheConfig::default()), Err(HodgeError::TruncationExceeded { .. })));
    assert!(hilbert_scheme_diamond(&s, 6, GoettscheConfig { max_n: 6 }).is_ok());
    assert!(matches!(factor_power((0, 0, 0), 1, 1, (2, 1)), Err(HodgeError::DegenerateFactor)));
    assert_eq!(generating_series(&s, 0).unwrap().coefficient(0, 0, 0), 1);
}
