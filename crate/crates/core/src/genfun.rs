//! TC-generating functions `F(t) = Σ_{r>=1} TC_{r+1} t^r` as exact rational
//! functions, and their pole form `A/(1-t)^2 + B/(1-t) + p(t)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::tpoly::write_term;
use crate::{Error, IntegerPolynomialInT, RationalPolynomialInT, Result, TPoly};

/// A sequence `r -> TC_{r+1}` (`r >= 1`) that is affine in `r` up to
/// finitely many exceptions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TcSequence {
    /// Fadell–Neuwirth bundle, odd `d`: `(r+1)n + m - 1`.
    FadellNeuwirthOdd { m: u32, n: u32 },
    /// Fadell–Neuwirth bundle in the plane: `(r+1)n + m - 2`.
    FadellNeuwirthPlanar { m: u32, n: u32 },
    /// Hopf bundle `S^3 -> S^2`: `TC_{r+1} = r`.
    Hopf,
    /// The fibre `F(R^d - O_m, n)` on its own: `(r+1)n`.
    FnFiber { n: u32 },
    /// `slope * r + offset`, overridden at the listed `r`.
    Custom { slope: BigInt, offset: BigInt, exceptions: Vec<(u32, BigInt)> },
}

impl TcSequence {
    pub fn name(&self) -> &'static str {
        match self {
            TcSequence::FadellNeuwirthOdd { .. } => "fn-odd",
            TcSequence::FadellNeuwirthPlanar { .. } => "fn-planar",
            TcSequence::Hopf => "hopf",
            TcSequence::FnFiber { .. } => "fn-fiber",
            TcSequence::Custom { .. } => "custom",
        }
    }

    /// `(slope, offset, exceptions)` after validation.
    pub fn affine_rule(&self) -> Result<(BigInt, BigInt, BTreeMap<u32, BigInt>)> {
        let fn_check = |m: u32, n: u32, min_m: u32| {
            if m < min_m || n < 1 {
                Err(Error::InvalidRule(format!("need m >= {min_m} and n >= 1, got m = {m}, n = {n}")))
            } else {
                Ok(())
            }
        };
        let big = BigInt::from;
        match self {
            TcSequence::FadellNeuwirthOdd { m, n } => {
                fn_check(*m, *n, 2)?;
                Ok((big(*n), big(*n) + big(*m) - 1, BTreeMap::new()))
            }
            TcSequence::FadellNeuwirthPlanar { m, n } => {
                fn_check(*m, *n, 2)?;
                Ok((big(*n), big(*n) + big(*m) - 2, BTreeMap::new()))
            }
            TcSequence::Hopf => Ok((BigInt::one(), BigInt::zero(), BTreeMap::new())),
            TcSequence::FnFiber { n } => {
                fn_check(1, *n, 1)?;
                Ok((big(*n), big(*n), BTreeMap::new()))
            }
            TcSequence::Custom { slope, offset, exceptions } => {
                let mut map = BTreeMap::new();
                for (r, v) in exceptions {
                    if *r < 1 {
                        return Err(Error::InvalidRule("exceptions must have r >= 1".into()));
                    }
                    if map.insert(*r, v.clone()).is_some() {
                        return Err(Error::InvalidRule(format!("duplicate exception at r = {r}")));
                    }
                }
                Ok((slope.clone(), offset.clone(), map))
            }
        }
    }

    /// `TC_{r+1}` for `r >= 1`.
    pub fn value(&self, r: u32) -> Result<BigInt> {
        if r < 1 {
            return Err(Error::InvalidArgument("sequence index starts at r = 1".into()));
        }
        let (slope, offset, exceptions) = self.affine_rule()?;
        Ok(exceptions.get(&r).cloned().unwrap_or_else(|| slope * BigInt::from(r) + offset))
    }

    pub fn values(&self, count: u32) -> Result<Vec<BigInt>> {
        (1..=count).map(|r| self.value(r)).collect()
    }
}

/// `numerator / denominator` with rational coefficients, reduced by the
/// monic gcd and scaled so the denominator has constant term 1 (or leading
/// coefficient 1 if it vanishes at `t = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: RationalPolynomialInT,
    denominator: RationalPolynomialInT,
}

/// `A/(1-t)^2 + B/(1-t) + p(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleForm {
    pub a: BigRational,
    pub b: BigRational,
    pub p: RationalPolynomialInT,
}

fn one_minus_t() -> RationalPolynomialInT {
    TPoly::new(alloc::vec![BigRational::one(), -BigRational::one()])
}

impl RationalFunction {
    pub fn new(numerator: RationalPolynomialInT, denominator: RationalPolynomialInT) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if numerator.is_zero() {
            return Ok(RationalFunction { numerator, denominator: TPoly::one() });
        }
        let g = numerator.gcd(&denominator);
        let (num, _) = numerator.div_rem(&g).expect("gcd is nonzero");
        let (den, _) = denominator.div_rem(&g).expect("gcd is nonzero");
        let scale = match den.coeffs().iter().find(|c| !c.is_zero()) {
            Some(c0) if !den.coeff(0).is_zero() => c0.clone(),
            _ => den.leading().expect("nonzero").clone(),
        };
        let inv = scale.recip();
        Ok(RationalFunction { numerator: num.scale(&inv), denominator: den.scale(&inv) })
    }

    pub fn from_integer(numerator: &IntegerPolynomialInT, denominator: &IntegerPolynomialInT) -> Result<Self> {
        Self::new(
            RationalPolynomialInT::from_integer(numerator),
            RationalPolynomialInT::from_integer(denominator),
        )
    }

    pub fn numerator(&self) -> &RationalPolynomialInT {
        &self.numerator
    }

    pub fn denominator(&self) -> &RationalPolynomialInT {
        &self.denominator
    }

    /// `k` such that the denominator is `(1-t)^k` with `k <= 2`.
    fn pole_order_at_one(&self) -> Option<u32> {
        (0..=2).find(|&k| self.denominator == one_minus_t().pow(k))
    }

    pub fn pole_form(&self) -> Option<PoleForm> {
        let k = self.pole_order_at_one()?;
        let num = &self.numerator;
        let one = BigRational::one();
        let (a, b) = match k {
            0 => (BigRational::zero(), BigRational::zero()),
            1 => (BigRational::zero(), num.eval(&one)),
            _ => (num.eval(&one), -num.derivative().eval(&one)),
        };
        let p = if k == 0 {
            num.clone()
        } else {
            let singular = if k == 1 {
                TPoly::constant(b.clone())
            } else {
                &TPoly::constant(a.clone()) + &one_minus_t().scale(&b)
            };
            let (q, r) = (num - &singular).div_rem(&one_minus_t().pow(k)).expect("nonzero divisor");
            debug_assert!(r.is_zero());
            q
        };
        Some(PoleForm { a, b, p })
    }
}

impl PoleForm {
    /// Recombines into a single fraction over `(1-t)^2`.
    pub fn to_rational_function(&self) -> Result<RationalFunction> {
        let num = &(&TPoly::constant(self.a.clone()) + &one_minus_t().scale(&self.b))
            + &(&self.p * &one_minus_t().pow(2));
        RationalFunction::new(num, one_minus_t().pow(2))
    }
}

fn write_signed(f: &mut fmt::Formatter<'_>, first: &mut bool, c: &BigRational) -> fmt::Result {
    match (*first, c.is_negative()) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    *first = false;
    Ok(())
}

fn write_over(f: &mut fmt::Formatter<'_>, c: &BigRational, den: &str) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{c}/{den}")
    } else {
        write!(f, "({c})/{den}")
    }
}

impl fmt::Display for PoleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, den) in [(&self.a, "(1-t)^2"), (&self.b, "(1-t)")] {
            if !c.is_zero() {
                write_signed(f, &mut first, c)?;
                write_over(f, &c.abs(), den)?;
            }
        }
        for (k, c) in self.p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                write_signed(f, &mut first, c)?;
                write_term(f, &c.abs(), k)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `t/(1-t)^2` when the denominator is a power of `(1-t)`, otherwise
/// `(numerator)/(denominator)`.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.numerator.coeffs().iter().filter(|c| !c.is_zero()).count();
        let numerator = if terms > 1 {
            format!("({})", self.numerator)
        } else {
            format!("{}", self.numerator)
        };
        match self.pole_order_at_one() {
            Some(0) => write!(f, "{}", self.numerator),
            Some(1) => write!(f, "{numerator}/(1-t)"),
            Some(_) => write!(f, "{numerator}/(1-t)^2"),
            None => {
                let den = if self.denominator.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                    format!("({})", self.denominator)
                } else {
                    format!("{}", self.denominator)
                };
                write!(f, "{numerator}/{den}")
            }
        }
    }
}

/// Exact generating function of an eventually affine sequence.
pub fn genfun_of(seq: &TcSequence) -> Result<RationalFunction> {
    let (slope, offset, exceptions) = seq.affine_rule()?;
    let q = |x: BigInt| BigRational::from_integer(x);
    // Σ_{r>=1} (a r + c) t^r = (a t + c t (1 - t)) / (1-t)^2
    let mut num = TPoly::new(alloc::vec![
        BigRational::zero(),
        q(slope.clone() + offset.clone()),
        -q(offset.clone())
    ]);
    if let Some(&last) = exceptions.keys().next_back() {
        let mut corr = alloc::vec![BigRational::zero(); last as usize + 1];
        for (&r, v) in &exceptions {
            corr[r as usize] = q(v - (&slope * BigInt::from(r) + &offset));
        }
        num = &num + &(&TPoly::new(corr) * &one_minus_t().pow(2));
    }
    RationalFunction::new(num, one_minus_t().pow(2))
}

/// First `count` Taylor coefficients at `t = 0`.
pub fn expand_series(f: &RationalFunction, count: usize) -> Result<Vec<BigRational>> {
    let den = f.denominator();
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(Error::PoleAtZero);
    }
    let mut out: Vec<BigRational> = Vec::with_capacity(count);
    for k in 0..count {
        let mut acc = f.numerator().coeff(k);
        for (i, di) in den.coeffs().iter().enumerate().skip(1).take(k) {
            acc -= di * &out[k - i];
        }
        out.push(acc / &d0);
    }
    Ok(out)
}

/// `(A, B)` of the pole form.
pub fn principal_residues(f: &RationalFunction) -> Result<(BigRational, BigRational)> {
    let pf = f.pole_form().ok_or(Error::NoPoleForm)?;
    Ok((pf.a, pf.b))
}

/// The eventual constant first difference `A` in `TC_{r+1} = TC_r + A`,
/// read off the first `horizon` terms. The difference must be constant over
/// at least the last two steps.
pub fn recurrence_check(seq: &TcSequence, horizon: u32) -> Result<BigInt> {
    if horizon < 3 {
        return Err(Error::InvalidArgument(format!("horizon must be >= 3, got {horizon}")));
    }
    let values = seq.values(horizon)?;
    let differences: Vec<BigInt> = values.windows(2).map(|w| &w[1] - &w[0]).collect();
    let n = differences.len();
    if differences[n - 1] == differences[n - 2] {
        Ok(differences[n - 1].clone())
    } else {
        Err(Error::NoStabilization { differences })
    }
}

/// Text used by reports: the reduced fraction and the pole form.
pub fn describe(f: &RationalFunction) -> (String, Option<String>) {
    (format!("{f}"), f.pole_form().map(|p| format!("{p}")))
}
