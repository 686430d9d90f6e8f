//! Degree `d - 1` generators `ω^l_{ij}` of the algebra.

use alloc::format;
use alloc::string::String;
use core::fmt;

use crate::{Error, Params, Result};

/// Which block a generator lives in. Classes `ω^l_{ij}` with `j <= m` do not
/// depend on `l` and are collected in the shared base block.
///
/// The derived order (`Base` first, then fibre layers by index) is the block
/// order of canonical monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layer {
    Base,
    Fiber(u32),
}

impl Layer {
    pub fn fiber_index(self) -> Option<u32> {
        match self {
            Layer::Base => None,
            Layer::Fiber(l) => Some(l),
        }
    }
}

/// A single class `ω^l_{ij}` with `i < j`.
///
/// Field order matters: the derived `Ord` sorts by block, then by the second
/// index `j`, then by `i`, which is the canonical word order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    layer: Layer,
    j: u32,
    i: u32,
}

impl Generator {
    pub fn layer(&self) -> Layer {
        self.layer
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn is_base(&self) -> bool {
        self.layer == Layer::Base
    }

    /// Checks that `self` is a generator of the algebra described by `params`.
    pub fn validate(&self, params: &Params) -> Result<()> {
        make_generator(self.layer, self.i, self.j, params).and_then(|g| {
            if g == *self {
                Ok(())
            } else {
                Err(invalid(self.layer, self.i, self.j, "base class stored with a fibre label"))
            }
        })
    }

    /// Same pair `(i, j)` moved to fibre layer `l` (or kept in the base).
    pub(crate) fn relabel(&self, layer: Layer, params: &Params) -> Generator {
        normalized(layer, self.i, self.j, params)
    }
}

/// Builds `ω^l_{ij}`, identifying every fibre request with `j <= m` with the
/// base class `ω_{ij}`.
pub fn make_generator(layer: Layer, i: u32, j: u32, params: &Params) -> Result<Generator> {
    if i < 1 || i >= j {
        return Err(invalid(layer, i, j, "need 1 <= i < j"));
    }
    if j > params.points() {
        return Err(invalid(layer, i, j, "second index exceeds m + n"));
    }
    match layer {
        Layer::Base if j > params.m() => {
            Err(invalid(layer, i, j, "base classes need j <= m"))
        }
        Layer::Fiber(l) if l < 1 || l > params.r() => {
            Err(invalid(layer, i, j, "layer out of range 1..=r"))
        }
        _ => Ok(normalized(layer, i, j, params)),
    }
}

/// Unchecked constructor for index pairs already known to be in range.
pub(crate) fn normalized(layer: Layer, i: u32, j: u32, params: &Params) -> Generator {
    debug_assert!(1 <= i && i < j && j <= params.points());
    let layer = if j <= params.m() { Layer::Base } else { layer };
    Generator { layer, j, i }
}

fn invalid(layer: Layer, i: u32, j: u32, reason: &'static str) -> Error {
    Error::InvalidGenerator { atom: atom_text(layer, i, j), reason }
}

fn atom_text(layer: Layer, i: u32, j: u32) -> String {
    match layer {
        Layer::Base => format!("w({i},{j})"),
        Layer::Fiber(l) => format!("w[{l}]({i},{j})"),
    }
}

/// Renders in the expression grammar: `w(i,j)` or `w[l](i,j)`.
impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.layer {
            Layer::Base => write!(f, "w({},{})", self.i, self.j),
            Layer::Fiber(l) => write!(f, "w[{}]({},{})", l, self.i, self.j),
        }
    }
}
