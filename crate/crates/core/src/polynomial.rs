//! Exact integer combinations of canonical monomials.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::straighten::{add_term, check_cap, straighten_into};
use crate::{Error, Generator, Monomial, Params, Result};

/// An element of the cohomology ring, stored as its coordinates in the
/// canonical additive basis. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    params: Params,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(params: Params) -> Self {
        Polynomial { params, terms: BTreeMap::new() }
    }

    pub fn one(params: Params) -> Self {
        Self::constant(params, BigInt::one())
    }

    pub fn constant(params: Params, c: BigInt) -> Self {
        Self::from_monomial(params, Monomial::unit(), c)
    }

    pub fn from_generator(params: Params, g: Generator) -> Result<Self> {
        g.validate(&params)?;
        Ok(Self::from_monomial(params, Monomial::from_canonical_unchecked(alloc::vec![g]), BigInt::one()))
    }

    pub fn from_monomial(params: Params, m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { params, terms }
    }

    pub(crate) fn from_terms_unchecked(params: Params, terms: BTreeMap<Monomial, BigInt>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Polynomial { params, terms }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a canonical monomial (zero if absent).
    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Common degree of all terms, or `None` for zero and inhomogeneous
    /// elements.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut lens = self.terms.keys().map(|m| m.degree(&self.params));
        let first = lens.next()?;
        lens.all(|d| d == first).then_some(first)
    }

    /// Cup product, distributed term by term and straightened.
    pub fn multiply(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.params != other.params {
            return Err(Error::ParamsMismatch);
        }
        let params = self.params;
        let top = params.max_basis_len();
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let len = ma.len() + mb.len();
                if len > top {
                    continue;
                }
                check_cap(len, &params)?;
                let mut word = Vec::with_capacity(len);
                word.extend_from_slice(ma.generators());
                word.extend_from_slice(mb.generators());
                straighten_into(word, ca * cb, &params, &mut terms);
            }
        }
        Ok(Polynomial { params, terms })
    }

    /// `self^exp` by repeated squaring.
    pub fn pow(&self, mut exp: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(self.params);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.multiply(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.multiply(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.params);
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        Polynomial { params: self.params, terms }
    }

    /// Checked sum; `+` panics on mismatched parameters instead.
    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.params != other.params {
            return Err(Error::ParamsMismatch);
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(Polynomial { params: self.params, terms })
    }

    /// Renders in the expression grammar, leading (lexicographically
    /// largest) monomial first.
    pub fn format(&self) -> String {
        alloc::format!("{self}")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        self.try_add(&rhs).expect("adding polynomials of different algebras")
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Polynomial) -> Polynomial {
        self + (-rhs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
