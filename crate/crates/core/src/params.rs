//! The parameters `(d, m, n, r)` of the ambient algebra.

use alloc::format;

use crate::{Error, Result};

/// Default cap on the number of generators in a single word handed to the
/// straightening rewriter.
pub const DEFAULT_MAX_WORD_LEN: usize = 64;

/// The algebra `H*(E^r_B; Z)` for the Fadell–Neuwirth bundle
/// `F(R^d, m+n) -> F(R^d, m)`: `d` is the ambient dimension, `m` the number
/// of obstacles, `n` the number of robots and `r` the number of fibre factors.
///
/// `r = 1` is the single-space algebra `H*(F(R^d, m+n))`.
///
/// Equality compares the quadruple only; the word-length cap is an engine
/// setting and does not change the algebra.
#[derive(Clone, Copy, Debug)]
pub struct Params {
    d: u32,
    m: u32,
    n: u32,
    r: u32,
    max_word_len: usize,
}

impl Params {
    pub fn new(d: u32, m: u32, n: u32, r: u32) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidParams(format!("d = {d}, need d >= 2")));
        }
        if m < 1 || n < 1 || r < 1 {
            return Err(Error::InvalidParams(format!(
                "m = {m}, n = {n}, r = {r}, need all >= 1"
            )));
        }
        // Keep every index and degree computation comfortably inside u32.
        if m.checked_add(n).is_none_or(|p| p > 4096) || r > 4096 || d > 1 << 16 {
            return Err(Error::InvalidParams(format!(
                "(d, m, n, r) = ({d}, {m}, {n}, {r}) is out of the supported range"
            )));
        }
        Ok(Params { d, m, n, r, max_word_len: DEFAULT_MAX_WORD_LEN })
    }

    pub fn with_max_word_len(mut self, cap: usize) -> Self {
        self.max_word_len = cap;
        self
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn max_word_len(&self) -> usize {
        self.max_word_len
    }

    /// Total number of points `m + n`.
    pub fn points(&self) -> u32 {
        self.m + self.n
    }

    /// Degree `d - 1` shared by every generator.
    pub fn generator_degree(&self) -> u32 {
        self.d - 1
    }

    /// Sign picked up when two adjacent generators are swapped: `+1` for odd
    /// `d`, `-1` for even `d`.
    pub fn sign_swap(&self) -> i8 {
        if self.d % 2 == 1 {
            1
        } else {
            -1
        }
    }

    pub fn is_commutative(&self) -> bool {
        self.sign_swap() > 0
    }

    /// Longest nonzero monomial: `m - 1` base generators plus `n` per fibre
    /// layer. Every word longer than this is zero.
    pub fn max_basis_len(&self) -> usize {
        (self.m as usize - 1) + self.r as usize * self.n as usize
    }

    /// Top degree with nonzero cohomology, `(rn + m - 1)(d - 1)`.
    pub fn top_degree(&self) -> u64 {
        self.max_basis_len() as u64 * u64::from(self.generator_degree())
    }

    /// The same `(d, m, n)` with a different number of fibre factors.
    pub fn with_r(&self, r: u32) -> Result<Self> {
        Params::new(self.d, self.m, self.n, r).map(|p| p.with_max_word_len(self.max_word_len))
    }
}

impl PartialEq for Params {
    fn eq(&self, other: &Self) -> bool {
        (self.d, self.m, self.n, self.r) == (other.d, other.m, other.n, other.r)
    }
}

impl Eq for Params {}

impl core::fmt::Display for Params {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "d={} m={} n={} r={}", self.d, self.m, self.n, self.r)
    }
}
