use tcalg_core::bounds::{even_named_witness, odd_named_witness, odd_recipe_factors, Certificate};
use tcalg_core::{
    certify_lower_bound, diagonal_restriction, fn_tc_bounds, oracle_cup_length, DifferencePool,
    Error, Params, Regime,
};

fn grid(ds: &[u32]) -> impl Iterator<Item = Params> + '_ {
    ds.iter().flat_map(|&d| {
        (2..=4).flat_map(move |m| {
            (1..=3).flat_map(move |n| (2..=4).map(move |r| Params::new(d, m, n, r).unwrap()))
        })
    })
}

#[test]
fn named_witnesses_survive_on_the_grid() {
    for params in grid(&[2, 3, 4]) {
        let cert = certify_lower_bound(&params).unwrap();
        let named = if params.is_commutative() {
            odd_named_witness(&params).unwrap()
        } else {
            even_named_witness(&params).unwrap()
        };
        assert_eq!(cert.witness(), &named, "{params}");
        for f in cert.factors() {
            assert!(diagonal_restriction(f).unwrap().is_zero());
        }
    }
}

#[test]
fn lower_never_exceeds_upper_and_is_monotone_in_r() {
    for d in [2, 3, 4, 5] {
        for m in 2..=3 {
            for n in 1..=2 {
                let mut prev: Option<(u64, u64)> = None;
                for r in 2..=4 {
                    let rep = fn_tc_bounds(&Params::new(d, m, n, r).unwrap()).unwrap();
                    assert!(rep.lower <= rep.upper);
                    assert_eq!(rep.exact, rep.regime != Regime::EvenDGe4);
                    if let Some((lo, up)) = prev {
                        assert!(rep.lower >= lo && rep.upper >= up);
                    }
                    prev = Some((rep.lower, rep.upper));
                }
            }
        }
    }
}

#[test]
fn odd_recipe_vanishes_for_even_d() {
    for d in [2, 4] {
        for (m, n, r) in [(2, 1, 2), (3, 2, 2), (2, 2, 3)] {
            let params = Params::new(d, m, n, r).unwrap();
            let res = Certificate::from_factors(&params, odd_recipe_factors(&params).unwrap(), None);
            assert!(matches!(res, Err(Error::CertificateFailure { .. })), "{params}");
        }
    }
}

#[test]
fn oracle_agrees_with_certificates_on_small_params() {
    for d in [2, 3] {
        for (m, n, r) in [(2, 1, 2), (2, 1, 3), (3, 1, 2), (2, 2, 2)] {
            let params = Params::new(d, m, n, r).unwrap();
            let cert = certify_lower_bound(&params).unwrap();
            let pool = DifferencePool::lemma_differences(&params).unwrap();
            let out = oracle_cup_length(&params, &pool, cert.k() + 1).unwrap();
            assert!(out.k >= cert.k(), "{params}: oracle {} < certificate {}", out.k, cert.k());
            assert!(out.k <= params.max_basis_len());
        }
    }
}

#[test]
fn tampered_certificate_fails_verification() {
    let params = Params::new(3, 2, 1, 2).unwrap();
    let cert = certify_lower_bound(&params).unwrap();
    cert.verify().unwrap();
    let mut factors = cert.factors().to_vec();
    factors.pop();
    let shorter = Certificate::from_factors(&params, factors, Some(cert.witness())).unwrap();
    assert_ne!(shorter.product(), cert.product());
}
