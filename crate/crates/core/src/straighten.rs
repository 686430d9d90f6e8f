//! Reduction of arbitrary generator words to the canonical additive basis.
//!
//! A word is first sorted into canonical order, each adjacent swap costing
//! the factor `(-1)^{d-1}`. A repeated generator kills the word. If two
//! generators of one block share their second index, the leftmost such pair
//! `ω_{ij} ω_{i'j}` (with `i < i'`) is rewritten as
//! `ω_{ii'} ω_{i'j} - ω_{ii'} ω_{ij}` and both words go back on the stack.
//! Each rewrite replaces one second index `j` by the smaller `i'`, so the
//! multiset of second indices strictly decreases and the process terminates.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::generator::normalized;
use crate::{Error, Generator, Monomial, Params, Polynomial, Result};

/// The unique integer combination of basis monomials equal to
/// `coeff * word[0] * word[1] * ...`.
pub fn normal_form(word: &[Generator], coeff: BigInt, params: &Params) -> Result<Polynomial> {
    for g in word {
        g.validate(params)?;
    }
    check_cap(word.len(), params)?;
    let mut terms = BTreeMap::new();
    straighten_into(word.to_vec(), coeff, params, &mut terms);
    Ok(Polynomial::from_terms_unchecked(*params, terms))
}

pub(crate) fn check_cap(len: usize, params: &Params) -> Result<()> {
    if len > params.max_word_len() {
        Err(Error::ResourceLimit { len, cap: params.max_word_len() })
    } else {
        Ok(())
    }
}

/// Adds the normal form of `coeff * word` into `acc`. Generators must already
/// be valid for `params`.
pub(crate) fn straighten_into(
    word: Vec<Generator>,
    coeff: BigInt,
    params: &Params,
    acc: &mut BTreeMap<Monomial, BigInt>,
) {
    if coeff.is_zero() {
        return;
    }
    let anticommuting = !params.is_commutative();
    let mut stack = vec![(word, coeff)];
    while let Some((mut word, mut coeff)) = stack.pop() {
        // Nothing survives above the top degree.
        if word.len() > params.max_basis_len() {
            continue;
        }
        let Some(odd) = sort_with_parity(&mut word) else {
            continue;
        };
        if odd && anticommuting {
            coeff = -coeff;
        }
        match shared_target(&word) {
            None => add_term(acc, Monomial::from_canonical_unchecked(word), coeff),
            Some(k) => {
                let (low, high) = (word[k], word[k + 1]);
                let link = normalized(low.layer(), low.i(), high.i(), params);
                let mut second = word.clone();
                second[k] = link;
                second[k + 1] = low;
                word[k] = link;
                stack.push((second, -coeff.clone()));
                stack.push((word, coeff));
            }
        }
    }
}

pub(crate) fn add_term(acc: &mut BTreeMap<Monomial, BigInt>, m: Monomial, c: BigInt) {
    use alloc::collections::btree_map::Entry;
    match acc.entry(m) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Insertion sort returning the parity of the permutation, or `None` if the
/// word contains a repeated generator.
fn sort_with_parity(word: &mut [Generator]) -> Option<bool> {
    let mut odd = false;
    for k in 1..word.len() {
        let mut p = k;
        while p > 0 && word[p - 1] >= word[p] {
            if word[p - 1] == word[p] {
                return None;
            }
            word.swap(p - 1, p);
            odd = !odd;
            p -= 1;
        }
    }
    Some(odd)
}

/// Index of the first adjacent pair in one block with equal second index.
fn shared_target(word: &[Generator]) -> Option<usize> {
    word.windows(2)
        .position(|w| w[0].layer() == w[1].layer() && w[0].j() == w[1].j())
}
