//! Exact arithmetic in the integral cohomology of the fibred powers of the
//! Fadell–Neuwirth bundle `F(R^d, m+n) -> F(R^d, m)`, together with the
//! certificates it feeds: cup-length lower bounds and dimension/connectivity
//! upper bounds for sequential parametrized topological complexity, and the
//! generating functions of the resulting sequences.
//!
//! The crate is `no_std` and only needs `alloc`. IO, the command line and the
//! structured report formats live in the `tcalg` crate.
#![no_std]

extern crate alloc;

pub mod bounds;
pub mod diagonal;
mod error;
pub mod expr;
pub mod generator;
pub mod genfun;
pub mod modifications;
pub mod monomial;
pub mod oracle;
pub mod params;
pub mod polynomial;
pub mod spaces;
pub mod straighten;
pub mod tpoly;

pub use bounds::{
    certify_lower_bound, fn_tc_bounds, fn_upper_bound, kernel_certificate_factors,
    upper_bound_schwarz, BoundsReport, Certificate, Regime,
};
pub use diagonal::diagonal_restriction;
pub use error::{Error, Result};
pub use expr::{evaluate, parse, Expression};
pub use generator::{make_generator, Generator, Layer};
pub use genfun::{
    expand_series, genfun_of, principal_residues, recurrence_check, PoleForm, RationalFunction,
    TcSequence,
};
pub use modifications::expand_modifications;
pub use monomial::Monomial;
pub use oracle::{oracle_cup_length, DifferencePool, OracleOutcome};
pub use params::Params;
pub use polynomial::Polynomial;
pub use spaces::{enumerate_basis, for_each_basis_monomial, poincare_polynomial};
pub use straighten::normal_form;
pub use tpoly::{IntegerPolynomialInT, RationalPolynomialInT, TPoly};
