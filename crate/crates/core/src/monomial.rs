use alloc::vec::Vec;
use core::fmt;

use crate::{Generator, Params};

/// A word in the generators. Monomials stored in a [`Polynomial`] are always
/// canonical: sorted block by block, with strictly increasing second indices
/// inside each block.
///
/// [`Polynomial`]: crate::Polynomial
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<Generator>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    /// Wraps `word` if it is already canonical.
    pub fn from_canonical(word: Vec<Generator>) -> Option<Self> {
        is_canonical(&word).then_some(Monomial(word))
    }

    pub(crate) fn from_canonical_unchecked(word: Vec<Generator>) -> Self {
        debug_assert!(is_canonical(&word));
        Monomial(word)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self, params: &Params) -> u64 {
        self.0.len() as u64 * u64::from(params.generator_degree())
    }

    pub fn contains(&self, g: &Generator) -> bool {
        self.0.binary_search(g).is_ok()
    }

    pub fn into_word(self) -> Vec<Generator> {
        self.0
    }
}

/// Sorted by block and `j`, with no two generators of a block sharing `j`.
pub fn is_canonical(word: &[Generator]) -> bool {
    word.windows(2).all(|w| {
        let (a, b) = (w[0], w[1]);
        a.layer() < b.layer() || (a.layer() == b.layer() && a.j() < b.j())
    })
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
