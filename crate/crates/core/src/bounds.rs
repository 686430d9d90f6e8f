//! Lower and upper bounds for `TC_r` of the Fadell–Neuwirth bundle.
//!
//! Upper bounds come from the dimension/connectivity estimate
//! `TC_r < (hdim + 1) / (k + 1)`. Lower bounds are certified: a list of
//! classes in the kernel of `Δ*` whose cup product is shown to be nonzero by
//! exhibiting a basis monomial with nonzero coefficient.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::straighten::check_cap;
use crate::{
    diagonal_restriction, make_generator, Error, Generator, Layer, Monomial, Params, Polynomial,
    Result,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Regime {
    /// `d` odd: exact value `rn + m - 1`.
    OddD,
    /// The plane: exact value `rn + m - 2`.
    D2,
    /// `d >= 4` even: only the bracket `[rn + m - 2, rn + m - 1]` is known.
    EvenDGe4,
}

impl Regime {
    pub fn of(params: &Params) -> Regime {
        match params.d() {
            2 => Regime::D2,
            d if d % 2 == 1 => Regime::OddD,
            _ => Regime::EvenDGe4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Regime::OddD => "odd-d",
            Regime::D2 => "d2",
            Regime::EvenDGe4 => "even-d-ge4",
        }
    }
}

/// Largest integer strictly below `(hdim_total + 1) / (k_conn + 1)`, which
/// is `hdim_total div (k_conn + 1)`.
pub fn upper_bound_schwarz(hdim_total: i64, k_conn: i64) -> Result<u64> {
    if hdim_total < 0 || k_conn < 0 {
        return Err(Error::InvalidArgument(format!(
            "hdim = {hdim_total} and connectivity = {k_conn} must be nonnegative"
        )));
    }
    Ok((hdim_total / (k_conn + 1)) as u64)
}

fn check_bundle_params(params: &Params) -> Result<()> {
    if params.m() < 2 || params.r() < 2 {
        return Err(Error::InvalidParams(format!(
            "bundle bounds need m >= 2 and r >= 2, got {params}"
        )));
    }
    Ok(())
}

/// `rn + m - 1` for `d >= 3` (total space of dimension `(rn + m - 1)(d - 1)`,
/// fibre `(d - 2)`-connected); `rn + m - 2` for `d = 2`, where the bundle
/// splits off `F(C, 2)` and the remaining bundle has fibre dimension `n`,
/// base dimension `m - 2` and connected fibre.
pub fn fn_upper_bound(params: &Params) -> Result<u64> {
    check_bundle_params(params)?;
    let (d, m, n, r) = (
        i64::from(params.d()),
        i64::from(params.m()),
        i64::from(params.n()),
        i64::from(params.r()),
    );
    if d == 2 {
        upper_bound_schwarz(r * n + (m - 2), 0)
    } else {
        upper_bound_schwarz((r * n + m - 1) * (d - 1), d - 2)
    }
}

fn difference(params: &Params, a: Layer, b: Layer, i: u32, j: u32) -> Result<Polynomial> {
    let ga = Polynomial::from_generator(*params, make_generator(a, i, j, params)?)?;
    let gb = Polynomial::from_generator(*params, make_generator(b, i, j, params)?)?;
    Ok(ga - gb)
}

/// Factors for odd `d`: `x1 = ∏_{i=2}^{m} (ω^1_{i,m+1} - ω^2_{i,m+1})`,
/// `x2 = ∏_{j>m} (ω^2_{1j} - ω^1_{1j})^2` and
/// `x3 = ∏_{l=3}^{r} ∏_{j>m} (ω^l_{1j} - ω^1_{1j})`, flattened in that order
/// (`rn + m - 1` factors).
pub fn odd_recipe_factors(params: &Params) -> Result<Vec<Polynomial>> {
    check_bundle_params(params)?;
    let (m, top) = (params.m(), params.points());
    let mut out = Vec::new();
    for i in 2..=m {
        out.push(difference(params, Layer::Fiber(1), Layer::Fiber(2), i, m + 1)?);
    }
    for j in m + 1..=top {
        let x = difference(params, Layer::Fiber(2), Layer::Fiber(1), 1, j)?;
        out.push(x.clone());
        out.push(x);
    }
    for l in 3..=params.r() {
        for j in m + 1..=top {
            out.push(difference(params, Layer::Fiber(l), Layer::Fiber(1), 1, j)?);
        }
    }
    Ok(out)
}

/// Factors valid for every `d`: `x1` as in the odd recipe,
/// `x2 = ∏_{j=m+2}^{m+n} (ω^1_{j-1,j} - ω^2_{j-1,j})` (empty for `n = 1`) and
/// `x3 = ∏_{l=2}^{r} ∏_{j>m} (ω^l_{1j} - ω^1_{1j})` (`rn + m - 2` factors).
pub fn even_recipe_factors(params: &Params) -> Result<Vec<Polynomial>> {
    check_bundle_params(params)?;
    let (m, top) = (params.m(), params.points());
    let mut out = Vec::new();
    for i in 2..=m {
        out.push(difference(params, Layer::Fiber(1), Layer::Fiber(2), i, m + 1)?);
    }
    for j in m + 2..=top {
        out.push(difference(params, Layer::Fiber(1), Layer::Fiber(2), j - 1, j)?);
    }
    for l in 2..=params.r() {
        for j in m + 1..=top {
            out.push(difference(params, Layer::Fiber(l), Layer::Fiber(1), 1, j)?);
        }
    }
    Ok(out)
}

/// The recipe matching the parity of `d`.
pub fn kernel_certificate_factors(params: &Params) -> Result<Vec<Polynomial>> {
    if params.is_commutative() {
        odd_recipe_factors(params)
    } else {
        even_recipe_factors(params)
    }
}

/// Witness for the odd recipe:
/// `ω_{I0 J0} ω^1_{IJ} ω^2_{I'J} ∏_{l>=3} ω^l_{IJ}` with `I0 = (1, 2, ..., 2)`,
/// `J0 = (2, ..., m)`, `I = (1, ..., 1)`, `I' = (2, 1, ..., 1)`,
/// `J = (m+1, ..., m+n)`.
pub fn odd_named_witness(params: &Params) -> Result<Monomial> {
    check_bundle_params(params)?;
    let (m, top) = (params.m(), params.points());
    let mut word = Vec::new();
    for j in 2..=m {
        let i = if j == 2 { 1 } else { 2 };
        word.push(make_generator(Layer::Base, i, j, params)?);
    }
    for l in 1..=params.r() {
        for j in m + 1..=top {
            let i = if l == 2 && j == m + 1 { 2 } else { 1 };
            word.push(make_generator(Layer::Fiber(l), i, j, params)?);
        }
    }
    canonical(word)
}

/// Witness for the even recipe:
/// `ω_{I0 J0} ω^1_{KJ} ω^2_{IJ} ... ω^r_{IJ}` with `I0 = (2, ..., 2)`,
/// `J0 = (3, ..., m)`, `K = (2, m+1, ..., m+n-1)`, `I = (1, ..., 1)`.
pub fn even_named_witness(params: &Params) -> Result<Monomial> {
    check_bundle_params(params)?;
    let (m, top) = (params.m(), params.points());
    let mut word = Vec::new();
    for j in 3..=m {
        word.push(make_generator(Layer::Base, 2, j, params)?);
    }
    for j in m + 1..=top {
        let i = if j == m + 1 { 2 } else { j - 1 };
        word.push(make_generator(Layer::Fiber(1), i, j, params)?);
    }
    for l in 2..=params.r() {
        for j in m + 1..=top {
            word.push(make_generator(Layer::Fiber(l), 1, j, params)?);
        }
    }
    canonical(word)
}

fn canonical(word: Vec<Generator>) -> Result<Monomial> {
    Monomial::from_canonical(word)
        .ok_or_else(|| Error::InvalidSequence("witness word is not canonical".to_string()))
}

/// A nonzero cup product of `Δ*`-kernel classes, proving `TC_r >= k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    params: Params,
    factors: Vec<Polynomial>,
    product: Polynomial,
    witness: Monomial,
    coefficient: BigInt,
}

impl Certificate {
    /// Multiplies `factors` left to right and picks a witness: `preferred`
    /// if it occurs in the product, otherwise the lexicographically least
    /// monomial. Fails if a factor is outside `ker Δ*` or the product is zero.
    pub fn from_factors(
        params: &Params,
        factors: Vec<Polynomial>,
        preferred: Option<&Monomial>,
    ) -> Result<Certificate> {
        check_cap(factors.len(), params)?;
        for f in &factors {
            if f.params() != params {
                return Err(Error::ParamsMismatch);
            }
            if !diagonal_restriction(f)?.is_zero() {
                return Err(Error::InvalidArgument(format!("{f} is not in the kernel of the diagonal map")));
            }
        }
        let mut product = Polynomial::one(*params);
        for f in &factors {
            product = product.multiply(f)?;
            if product.is_zero() {
                break;
            }
        }
        let named = preferred.map(|w| (w, product.coefficient(w))).filter(|(_, c)| !c.is_zero());
        let (witness, coefficient) = match named {
            Some((w, c)) => (w.clone(), c),
            None => match product.terms().next() {
                Some((w, c)) => (w.clone(), c.clone()),
                None => {
                    return Err(Error::CertificateFailure {
                        factors: factors.iter().map(ToString::to_string).collect(),
                    })
                }
            },
        };
        Ok(Certificate { params: *params, factors, product, witness, coefficient })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn factors(&self) -> &[Polynomial] {
        &self.factors
    }

    pub fn product(&self) -> &Polynomial {
        &self.product
    }

    pub fn witness(&self) -> &Monomial {
        &self.witness
    }

    pub fn coefficient(&self) -> &BigInt {
        &self.coefficient
    }

    /// Number of factors, i.e. the certified lower bound.
    pub fn k(&self) -> usize {
        self.factors.len()
    }

    /// Re-derives everything from the factor list: each factor lies in
    /// `ker Δ*`, the product is recomputed, and the witness carries the
    /// recorded nonzero coefficient.
    pub fn verify(&self) -> Result<()> {
        let fresh = Certificate::from_factors(&self.params, self.factors.clone(), Some(&self.witness))?;
        if fresh.product != self.product
            || fresh.witness != self.witness
            || fresh.coefficient != self.coefficient
            || self.coefficient.is_zero()
        {
            return Err(Error::CertificateFailure {
                factors: self.factors.iter().map(ToString::to_string).collect(),
            });
        }
        Ok(())
    }
}

/// Certificate for `TC_r >= rn + m - 1` (odd `d`) or `>= rn + m - 2` (even `d`).
pub fn certify_lower_bound(params: &Params) -> Result<Certificate> {
    let factors = kernel_certificate_factors(params)?;
    let named = if params.is_commutative() {
        odd_named_witness(params)?
    } else {
        even_named_witness(params)?
    };
    Certificate::from_factors(params, factors, Some(&named))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub params: Params,
    pub lower: u64,
    pub upper: u64,
    pub exact: bool,
    pub certificate: Certificate,
    pub regime: Regime,
}

/// Certified lower bound and formula upper bound for `TC_r`. For even
/// `d >= 4` the result is a bracket of width one and is never reported exact.
pub fn fn_tc_bounds(params: &Params) -> Result<BoundsReport> {
    let upper = fn_upper_bound(params)?;
    let certificate = certify_lower_bound(params)?;
    let lower = certificate.k() as u64;
    Ok(BoundsReport {
        params: *params,
        lower,
        upper,
        exact: lower == upper,
        certificate,
        regime: Regime::of(params),
    })
}

/// Expected `(lower, upper)` from the closed formulas, used by sweeps.
pub fn expected_bracket(params: &Params) -> (u64, u64) {
    let base = u64::from(params.r()) * u64::from(params.n()) + u64::from(params.m());
    match Regime::of(params) {
        Regime::OddD => (base - 1, base - 1),
        Regime::D2 => (base - 2, base - 2),
        Regime::EvenDGe4 => (base - 2, base - 1),
    }
}
