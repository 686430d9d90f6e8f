use num_bigint::BigInt;

use tcalg_core::{enumerate_basis, for_each_basis_monomial, poincare_polynomial, Params};

#[test]
fn enumeration_matches_poincare_polynomial() {
    for d in [2, 3, 4] {
        for m in 1..=3 {
            for n in 1..=(5 - m) {
                for r in 1..=2 {
                    let p = Params::new(d, m, n, r).unwrap();
                    let mut counts = vec![0u64; p.max_basis_len() + 1];
                    for_each_basis_monomial(&p, None, |w| counts[w.len()] += 1);
                    let poincare = poincare_polynomial(&p);
                    let g = p.generator_degree() as usize;
                    for (deg, c) in poincare.coeffs().iter().enumerate() {
                        let expected = if deg % g == 0 { counts[deg / g] } else { 0 };
                        assert_eq!(c, &BigInt::from(expected), "{p} degree {deg}");
                    }
                    assert_eq!(poincare.degree(), Some(p.top_degree() as usize));
                }
            }
        }
    }
}

#[test]
fn filtered_enumeration_agrees_with_full() {
    let p = Params::new(3, 3, 2, 2).unwrap();
    let all = enumerate_basis(&p, None);
    let mut total = 0;
    for deg in 0..=p.top_degree() + 1 {
        let part = enumerate_basis(&p, Some(deg));
        assert!(part.iter().all(|m| m.degree(&p) == deg));
        total += part.len();
    }
    assert_eq!(total, all.len());
    assert!(all.windows(2).all(|w| w[0] < w[1]));
}
