use alloc::collections::BTreeMap;

use crate::straighten::straighten_into;
use crate::{Layer, Params, Polynomial, Result};

/// `Δ*`: the map induced by the diagonal `E -> E^r_B`, sending every
/// `ω^l_{ij}` to `ω_{ij}` in the single-space algebra (same `d, m, n`,
/// `r = 1`). Differences `ω^l_{ij} - ω^{l'}_{ij}` lie in its kernel.
pub fn diagonal_restriction(x: &Polynomial) -> Result<Polynomial> {
    let params = x.params();
    let target = params.with_r(1)?;
    let mut terms = BTreeMap::new();
    for (m, c) in x.terms() {
        let word = m
            .generators()
            .iter()
            .map(|g| match g.layer() {
                Layer::Base => *g,
                Layer::Fiber(_) => g.relabel(Layer::Fiber(1), &target),
            })
            .collect();
        straighten_into(word, c.clone(), &target, &mut terms);
    }
    Ok(Polynomial::from_terms_unchecked(target, terms))
}

/// Codomain parameters of [`diagonal_restriction`].
pub fn diagonal_codomain(params: &Params) -> Result<Params> {
    params.with_r(1)
}
