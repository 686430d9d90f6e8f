use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;

use tcalg_core::expr::evaluate_str;
use tcalg_core::spaces::enumerate_basis;
use tcalg_core::{
    diagonal_restriction, expand_modifications, make_generator, normal_form, Generator, Layer,
    Monomial, Params, Polynomial,
};

fn all_generators(p: &Params) -> Vec<Generator> {
    let mut out = Vec::new();
    for j in 2..=p.points() {
        for i in 1..j {
            if j <= p.m() {
                out.push(make_generator(Layer::Base, i, j, p).unwrap());
            } else {
                for l in 1..=p.r() {
                    out.push(make_generator(Layer::Fiber(l), i, j, p).unwrap());
                }
            }
        }
    }
    out
}

fn small_params() -> impl Strategy<Value = Params> {
    (2u32..=5, 1u32..=3, 1u32..=2, 1u32..=3).prop_map(|(d, m, n, r)| Params::new(d, m, n, r).unwrap())
}

fn word_in(p: Params, max_len: usize) -> impl Strategy<Value = Vec<Generator>> {
    let gens = all_generators(&p);
    prop::collection::vec(prop::sample::select(gens), 0..=max_len)
}

fn params_and_word(max_len: usize) -> impl Strategy<Value = (Params, Vec<Generator>)> {
    small_params().prop_flat_map(move |p| (Just(p), word_in(p, max_len)))
}

fn poly_in(p: Params) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((word_in(p, 3), -3i64..=3), 0..4).prop_map(move |terms| {
        terms.into_iter().fold(Polynomial::zero(p), |acc, (w, c)| {
            acc + normal_form(&w, BigInt::from(c), &p).unwrap()
        })
    })
}

fn word_product(p: &Params, w: &[Generator]) -> Polynomial {
    w.iter().fold(Polynomial::one(*p), |acc, g| {
        acc.multiply(&Polynomial::from_generator(*p, *g).unwrap()).unwrap()
    })
}

fn word_product_right(p: &Params, w: &[Generator]) -> Polynomial {
    w.iter().rev().fold(Polynomial::one(*p), |acc, g| {
        Polynomial::from_generator(*p, *g).unwrap().multiply(&acc).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn normal_form_is_idempotent((p, w) in params_and_word(6)) {
        let nf = normal_form(&w, BigInt::one(), &p).unwrap();
        for (m, c) in nf.terms() {
            let again = normal_form(m.generators(), c.clone(), &p).unwrap();
            prop_assert_eq!(again, Polynomial::from_monomial(p, m.clone(), c.clone()));
        }
    }

    #[test]
    fn reduction_order_does_not_matter((p, w) in params_and_word(6)) {
        let direct = normal_form(&w, BigInt::one(), &p).unwrap();
        prop_assert_eq!(&word_product(&p, &w), &direct);
        prop_assert_eq!(&word_product_right(&p, &w), &direct);
    }

    #[test]
    fn products_are_graded((p, a, b) in small_params().prop_flat_map(|p| (Just(p), word_in(p, 3), word_in(p, 3)))) {
        let x = normal_form(&a, BigInt::one(), &p).unwrap();
        let y = normal_form(&b, BigInt::one(), &p).unwrap();
        let expected = (a.len() + b.len()) as u64 * u64::from(p.generator_degree());
        for (m, _) in x.multiply(&y).unwrap().terms() {
            prop_assert_eq!(m.degree(&p), expected);
        }
    }

    #[test]
    fn odd_degree_squares_vanish_for_even_d(
        (p, x) in (1u32..=3, 1u32..=2, 1u32..=3)
            .prop_map(|(m, n, r)| Params::new(2, m, n, r).unwrap())
            .prop_flat_map(|p| {
                let gens = all_generators(&p);
                (Just(p), prop::collection::vec((prop::sample::select(gens), -3i64..=3), 1..5))
            })
    ) {
        // Homogeneous of degree 1 in the d = 2 algebra.
        let x = x.into_iter().fold(Polynomial::zero(p), |acc, (g, c)| {
            acc + Polynomial::from_generator(p, g).unwrap().scale(&BigInt::from(c))
        });
        prop_assert!(x.multiply(&x).unwrap().is_zero());
    }

    #[test]
    fn multiplication_is_associative((_p, x, y, z) in small_params().prop_flat_map(|p| (Just(p), poly_in(p), poly_in(p), poly_in(p)))) {
        let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
        let right = x.multiply(&y.multiply(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn diagonal_is_a_ring_map((_p, x, y) in small_params().prop_flat_map(|p| (Just(p), poly_in(p), poly_in(p)))) {
        let lhs = diagonal_restriction(&x.multiply(&y).unwrap()).unwrap();
        let rhs = diagonal_restriction(&x).unwrap().multiply(&diagonal_restriction(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn format_parse_round_trip((p, x) in small_params().prop_flat_map(|p| (Just(p), poly_in(p)))) {
        let text = x.format();
        prop_assert_eq!(evaluate_str(&text, &p).unwrap(), x);
    }

    #[test]
    fn parser_never_panics(text in "[w0-9()\\[\\],+*^ -]{0,24}") {
        let p = Params::new(3, 2, 2, 2).unwrap();
        let _ = evaluate_str(&text, &p);
    }
}

#[test]
fn relation_soundness_everywhere() {
    for d in [2, 3] {
        let p = Params::new(d, 3, 3, 2).unwrap();
        let layers = [Layer::Base, Layer::Fiber(1), Layer::Fiber(2)];
        for pt in 3..=p.points() {
            for j in 2..pt {
                for i in 1..j {
                    for &layer in &layers {
                        if layer == Layer::Base && pt > p.m() {
                            continue;
                        }
                        let g = |a, b| {
                            Polynomial::from_generator(p, make_generator(layer, a, b, &p).unwrap()).unwrap()
                        };
                        let lhs = g(i, pt).multiply(&g(j, pt)).unwrap();
                        let rhs = g(i, j).multiply(&(g(j, pt) - g(i, pt))).unwrap();
                        assert_eq!(lhs, rhs, "d={d} layer={layer:?} ({i},{j},{pt})");
                    }
                }
            }
        }
    }
}

#[test]
fn squares_of_generators_vanish() {
    for d in [2, 3] {
        let p = Params::new(d, 3, 2, 3).unwrap();
        for g in all_generators(&p) {
            assert!(normal_form(&[g, g], BigInt::one(), &p).unwrap().is_zero());
        }
    }
}

#[test]
fn modification_expansion_matches_rewriter_exhaustively() {
    for d in [2, 3] {
        let p = Params::new(d, 2, 4, 2).unwrap();
        let top = p.points();
        for j in 3..=top {
            // all increasing J of length 2..=5 below j
            for mask in 0u32..(1 << (j - 1)) {
                let js: Vec<u32> = (1..j).filter(|s| mask & (1 << (s - 1)) != 0).collect();
                if js.len() < 2 || js.len() > 5 {
                    continue;
                }
                let layers: Vec<Layer> =
                    if j <= p.m() { vec![Layer::Base] } else { (1..=p.r()).map(Layer::Fiber).collect() };
                for layer in layers {
                    let word: Vec<Generator> =
                        js.iter().map(|&s| make_generator(layer, s, j, &p).unwrap()).collect();
                    let rewriter = normal_form(&word, BigInt::one(), &p).unwrap();
                    let closed = expand_modifications(layer, &js, j, &p).unwrap();
                    assert_eq!(closed, rewriter, "d={d} J={js:?} j={j}");
                }
            }
        }
    }
}

#[test]
fn disjoint_basis_products_are_unimodular() {
    for d in [2, 3] {
        let p = Params::new(d, 3, 2, 2).unwrap();
        let basis = enumerate_basis(&p, None);
        let key = |m: &Monomial| -> Vec<(Layer, u32)> {
            m.generators().iter().map(|g| (g.layer(), g.j())).collect()
        };
        let mut checked = 0;
        for a in basis.iter().step_by(7) {
            for b in basis.iter().step_by(5) {
                let (ka, kb) = (key(a), key(b));
                if ka.iter().any(|x| kb.contains(x)) {
                    continue;
                }
                let x = Polynomial::from_monomial(p, a.clone(), BigInt::one());
                let y = Polynomial::from_monomial(p, b.clone(), BigInt::one());
                let prod = x.multiply(&y).unwrap();
                assert_eq!(prod.len(), 1);
                assert!(prod.terms().next().unwrap().1.abs().is_one());
                checked += 1;
            }
        }
        assert!(checked > 100);
    }
}

#[test]
fn straightened_chains_keep_a_target_factor() {
    let p = Params::new(3, 2, 4, 2).unwrap();
    let layer = Layer::Fiber(2);
    let j = 6;
    for js in [vec![1, 2], vec![1, 3, 5], vec![2, 3, 4, 5], vec![1, 2, 3, 4, 5]] {
        let word: Vec<Generator> = js.iter().map(|&s| make_generator(layer, s, j, &p).unwrap()).collect();
        let nf = normal_form(&word, BigInt::one(), &p).unwrap();
        let targets: Vec<Generator> = word.clone();
        let first = word[0];
        let mut with_first = Vec::new();
        for (m, _) in nf.terms() {
            assert!(targets.iter().any(|t| m.contains(t)));
            if m.contains(&first) {
                with_first.push(m.clone());
            }
        }
        assert_eq!(with_first.len(), 1);
        let mut expected: Vec<Generator> =
            js[1..].iter().map(|&s| make_generator(layer, js[0], s, &p).unwrap()).collect();
        expected.push(first);
        expected.sort();
        assert_eq!(with_first[0].generators(), expected.as_slice());
    }
}
