//! The additive basis of `H*(E^r_B)` and its Poincaré polynomial.
//!
//! A basis monomial picks, independently for every block and every admissible
//! second index `j`, either nothing or one generator `ω_{ij}` with `i < j`.
//! Base block: `j in 2..=m`. Fibre block `l`: `j in m+1..=m+n`.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::generator::normalized;
use crate::{Generator, IntegerPolynomialInT, Layer, Monomial, Params, TPoly};

/// Visits every basis monomial with `len` generators (all of them if `None`)
/// as a canonical word, without allocating per monomial.
pub fn for_each_basis_monomial(params: &Params, len: Option<usize>, mut f: impl FnMut(&[Generator])) {
    let slots = slots(params);
    let mut word = Vec::with_capacity(slots.len());
    walk(params, &slots, 0, len, &mut word, &mut f);
}

fn slots(params: &Params) -> Vec<(Layer, u32)> {
    let mut slots: Vec<(Layer, u32)> = (2..=params.m()).map(|j| (Layer::Base, j)).collect();
    for l in 1..=params.r() {
        slots.extend((params.m() + 1..=params.points()).map(|j| (Layer::Fiber(l), j)));
    }
    slots
}

fn walk(
    params: &Params,
    slots: &[(Layer, u32)],
    at: usize,
    len: Option<usize>,
    word: &mut Vec<Generator>,
    f: &mut impl FnMut(&[Generator]),
) {
    if let Some(len) = len {
        if word.len() > len || word.len() + (slots.len() - at) < len {
            return;
        }
    }
    let Some(&(layer, j)) = slots.get(at) else {
        f(word);
        return;
    };
    for i in 1..j {
        word.push(normalized(layer, i, j, params));
        walk(params, slots, at + 1, len, word, f);
        word.pop();
    }
    walk(params, slots, at + 1, len, word, f);
}

/// Basis monomials of the given degree (all degrees if `None`), sorted.
/// Degrees that are not multiples of `d - 1` have no basis elements.
pub fn enumerate_basis(params: &Params, degree: Option<u64>) -> Vec<Monomial> {
    let len = match degree {
        None => None,
        Some(deg) => {
            let g = u64::from(params.generator_degree());
            if deg % g != 0 {
                return Vec::new();
            }
            match usize::try_from(deg / g) {
                Ok(len) => Some(len),
                Err(_) => return Vec::new(),
            }
        }
    };
    let mut out = Vec::new();
    for_each_basis_monomial(params, len, |w| out.push(Monomial::from_canonical_unchecked(w.to_vec())));
    out.sort_unstable();
    out
}

/// `∏_{j=2}^{m} (1 + (j-1) t^{d-1}) · [∏_{j=m+1}^{m+n} (1 + (j-1) t^{d-1})]^r`.
pub fn poincare_polynomial(params: &Params) -> IntegerPolynomialInT {
    let deg = params.generator_degree() as usize;
    let factor = |j: u32| &TPoly::one() + &TPoly::monomial(BigInt::from(j - 1), deg);
    let base = (2..=params.m()).fold(TPoly::one(), |acc, j| &acc * &factor(j));
    let fiber = (params.m() + 1..=params.points()).fold(TPoly::one(), |acc, j| &acc * &factor(j));
    &base * &fiber.pow(params.r())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::normal_form;
    use num_traits::One;

    #[test]
    fn small_case_by_hand() {
        let p = Params::new(3, 2, 1, 2).unwrap();
        assert_eq!(enumerate_basis(&p, Some(0)), alloc::vec![Monomial::unit()]);
        let deg2: Vec<_> = enumerate_basis(&p, Some(2)).iter().map(|m| m.to_string()).collect();
        assert_eq!(deg2, ["w(1,2)", "w[1](1,3)", "w[1](2,3)", "w[2](1,3)", "w[2](2,3)"]);
        assert_eq!(enumerate_basis(&p, None).len(), 18);
        assert!(enumerate_basis(&p, Some(3)).is_empty());
        assert_eq!(poincare_polynomial(&p).to_string(), "1 + 5t^2 + 8t^4 + 4t^6");
    }

    #[test]
    fn planar_single_space() {
        let p = Params::new(2, 2, 1, 1).unwrap();
        assert_eq!(poincare_polynomial(&p).to_string(), "1 + 3t + 2t^2");
    }

    #[test]
    fn single_obstacle_has_empty_base_block() {
        let p = Params::new(3, 1, 2, 2).unwrap();
        assert!(enumerate_basis(&p, None).iter().all(|m| m.generators().iter().all(|g| !g.is_base())));
        assert_eq!(poincare_polynomial(&p).degree(), Some(p.top_degree() as usize));
    }

    #[test]
    fn basis_monomials_are_normal_forms() {
        let p = Params::new(2, 3, 2, 2).unwrap();
        for m in enumerate_basis(&p, None) {
            let nf = normal_form(m.generators(), BigInt::one(), &p).unwrap();
            assert_eq!(nf.len(), 1);
            assert!(nf.coefficient(&m).is_one());
        }
    }
}
