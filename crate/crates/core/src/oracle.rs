//! Brute-force cup length over a finite pool of `Δ*`-kernel classes.
//!
//! Serves as an independent check on the certificate recipes: it knows
//! nothing about them and just searches products of pool elements.

use alloc::string::String;
use alloc::vec::Vec;

use crate::{make_generator, Error, Layer, Params, Polynomial, Result};

#[derive(Clone, Debug)]
pub struct DifferencePool {
    params: Params,
    classes: Vec<Polynomial>,
}

impl DifferencePool {
    /// All differences `ω^l_{ij} - ω^{l'}_{ij}` with `l < l'` and `j > m`
    /// (for `j <= m` they vanish), ordered by `(j, i, l, l')`.
    pub fn lemma_differences(params: &Params) -> Result<Self> {
        let mut classes = Vec::new();
        for j in params.m() + 1..=params.points() {
            for i in 1..j {
                for l in 1..=params.r() {
                    for l2 in l + 1..=params.r() {
                        let a = make_generator(Layer::Fiber(l), i, j, params)?;
                        let b = make_generator(Layer::Fiber(l2), i, j, params)?;
                        classes.push(
                            Polynomial::from_generator(*params, a)?
                                - Polynomial::from_generator(*params, b)?,
                        );
                    }
                }
            }
        }
        Ok(DifferencePool { params: *params, classes })
    }

    /// Appends `ω_{ab} · x` for every base generator `ω_{ab}` and every
    /// difference `x` already in the pool. The kernel is an ideal, so these
    /// stay in it.
    pub fn with_base_multiples(mut self) -> Result<Self> {
        let params = self.params;
        let mut extra = Vec::new();
        for b in 2..=params.m() {
            for a in 1..b {
                let g = Polynomial::from_generator(params, make_generator(Layer::Base, a, b, &params)?)?;
                for x in &self.classes {
                    let y = g.multiply(x)?;
                    if !y.is_zero() {
                        extra.push(y);
                    }
                }
            }
        }
        self.classes.extend(extra);
        Ok(self)
    }

    pub fn from_classes(params: &Params, classes: Vec<Polynomial>) -> Result<Self> {
        if classes.iter().any(|c| c.params() != params) {
            return Err(Error::ParamsMismatch);
        }
        Ok(DifferencePool { params: *params, classes })
    }

    pub fn classes(&self) -> &[Polynomial] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn describe(&self, choice: &[usize]) -> Vec<String> {
        choice.iter().map(|&k| self.classes[k].format()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleOutcome {
    /// Largest number of pool factors found with a nonzero product.
    pub k: usize,
    /// Pool indices of the first such product in search order.
    pub choice: Vec<usize>,
    /// The search hit `budget` with a nonzero product that might extend.
    pub truncated: bool,
}

/// Searches all multisets of at most `budget` pool elements in lexicographic
/// order of pool indices, pruning as soon as a partial product vanishes.
/// Multisets suffice: reordering factors changes the product by a sign only.
pub fn oracle_cup_length(params: &Params, pool: &DifferencePool, budget: usize) -> Result<OracleOutcome> {
    if pool.params != *params {
        return Err(Error::ParamsMismatch);
    }
    let mut search = Search {
        pool,
        budget,
        top: params.max_basis_len(),
        best: OracleOutcome { k: 0, choice: Vec::new(), truncated: false },
        choice: Vec::new(),
    };
    search.descend(0, &Polynomial::one(*params))?;
    Ok(search.best)
}

struct Search<'a> {
    pool: &'a DifferencePool,
    budget: usize,
    top: usize,
    best: OracleOutcome,
    choice: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, start: usize, current: &Polynomial) -> Result<()> {
        let depth = self.choice.len();
        if depth > self.best.k {
            self.best.k = depth;
            self.best.choice = self.choice.clone();
        }
        if depth == self.budget {
            if depth < self.top {
                self.best.truncated = true;
            }
            return Ok(());
        }
        for idx in start..self.pool.classes.len() {
            let next = current.multiply(&self.pool.classes[idx])?;
            if next.is_zero() {
                continue;
            }
            self.choice.push(idx);
            self.descend(idx, &next)?;
            self.choice.pop();
        }
        Ok(())
    }
}
