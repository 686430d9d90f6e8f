//! Closed-form expansion of `ω^l_{j_1 j} ω^l_{j_2 j} ... ω^l_{j_p j}` over
//! J-modifications.
//!
//! A J-modification of `J = (j_1, ..., j_p)` is a sequence `I` with
//! `i_1 = j_1` and each later `i_s` equal to either `i_{s-1}` or `j_s`. With
//! `J' = (j_2, ..., j_p, j)` the product equals `Σ_I (-1)^{rep(I)} ω^l_{I J'}`,
//! where `rep(I)` counts the positions with `i_s = i_{s-1}`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::{make_generator, normal_form, Error, Layer, Params, Polynomial, Result};

/// All `2^{p-1}` J-modifications of `js`, each with its repetition count.
pub fn j_modifications(js: &[u32]) -> Vec<(Vec<u32>, u32)> {
    let Some((&first, rest)) = js.split_first() else {
        return Vec::new();
    };
    let mut out = alloc::vec![(alloc::vec![first], 0u32)];
    for &js_s in rest {
        let mut next = Vec::with_capacity(out.len() * 2);
        for (seq, reps) in out {
            let prev = *seq.last().expect("nonempty");
            let mut fresh = seq.clone();
            fresh.push(js_s);
            next.push((fresh, reps));
            let mut repeat = seq;
            repeat.push(prev);
            next.push((repeat, reps + 1));
        }
        out = next;
    }
    out
}

pub fn expand_modifications(layer: Layer, js: &[u32], j: u32, params: &Params) -> Result<Polynomial> {
    if js.len() < 2 {
        return Err(Error::InvalidSequence(format!("need p >= 2 entries, got {}", js.len())));
    }
    if js.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidSequence(format!("{js:?} is not increasing")));
    }
    if j <= *js.last().expect("p >= 2") {
        return Err(Error::InvalidSequence(format!("j = {j} must exceed every entry of {js:?}")));
    }
    for &js_s in js {
        make_generator(layer, js_s, j, params)?;
    }

    let mut targets: Vec<u32> = js[1..].to_vec();
    targets.push(j);
    let mut acc = Polynomial::zero(*params);
    for (seq, reps) in j_modifications(js) {
        let word = seq
            .iter()
            .zip(&targets)
            .map(|(&i, &t)| make_generator(layer, i, t, params))
            .collect::<Result<Vec<_>>>()?;
        let sign = if reps % 2 == 0 { 1 } else { -1 };
        acc = acc.try_add(&normal_form(&word, BigInt::from(sign), params)?)?;
    }
    Ok(acc)
}
