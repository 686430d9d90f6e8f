//! Dense univariate polynomials in `t`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients indexed by the power of `t`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TPoly<C> {
    coeffs: Vec<C>,
}

pub type IntegerPolynomialInT = TPoly<BigInt>;
pub type RationalPolynomialInT = TPoly<BigRational>;

impl<C: Clone + Zero> TPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(alloc::vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = alloc::vec![C::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn map<D: Clone + Zero>(&self, f: impl FnMut(&C) -> D) -> TPoly<D> {
        TPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<C: Clone + Zero + One> TPoly<C> {
    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn eval(&self, t: &C) -> C
    where
        C: Mul<Output = C> + Add<Output = C>,
    {
        self.coeffs.iter().rev().fold(C::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self
    where
        C: Mul<Output = C>,
    {
        let mut k = C::zero();
        let coeffs = self
            .coeffs
            .iter()
            .skip(1)
            .map(|c| {
                k = k.clone() + C::one();
                k.clone() * c.clone()
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn pow(&self, exp: u32) -> Self
    where
        C: Mul<Output = C>,
    {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<C: Clone + Zero + Add<Output = C>> Add<&TPoly<C>> for &TPoly<C> {
    type Output = TPoly<C>;

    fn add(self, rhs: &TPoly<C>) -> TPoly<C> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                let a = self.coeffs.get(k).cloned().unwrap_or_else(C::zero);
                let b = rhs.coeffs.get(k).cloned().unwrap_or_else(C::zero);
                a + b
            })
            .collect();
        TPoly::new(coeffs)
    }
}

impl<C: Clone + Zero + Neg<Output = C>> Neg for &TPoly<C> {
    type Output = TPoly<C>;

    fn neg(self) -> TPoly<C> {
        TPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<C: Clone + Zero + Add<Output = C> + Neg<Output = C>> Sub<&TPoly<C>> for &TPoly<C> {
    type Output = TPoly<C>;

    fn sub(self, rhs: &TPoly<C>) -> TPoly<C> {
        self + &(-rhs)
    }
}

impl<C: Clone + Zero + Mul<Output = C>> Mul<&TPoly<C>> for &TPoly<C> {
    type Output = TPoly<C>;

    fn mul(self, rhs: &TPoly<C>) -> TPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = alloc::vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in rhs.coeffs.iter().enumerate() {
                coeffs[a + b] = coeffs[a + b].clone() + x.clone() * y.clone();
            }
        }
        TPoly::new(coeffs)
    }
}

impl RationalPolynomialInT {
    pub fn from_integer(p: &IntegerPolynomialInT) -> Self {
        p.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Euclidean division; `None` when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading()?.clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return Some((TPoly::zero(), self.clone()));
        };
        let mut quot = alloc::vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (s, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + s] = &rem[k + s] - &c * dc;
            }
            quot[k] = c;
        }
        Some((TPoly::new(quot), TPoly::new(rem)))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        match a.leading().cloned() {
            Some(lead) => a.map(|c| c / &lead),
            None => a,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.map(|x| x * c)
    }
}

/// Ascending powers, e.g. `1 + 5t^2 + 8t^4 + 4t^6`. Non-integral rational
/// coefficients are parenthesised: `(3/2)t`.
impl<C> fmt::Display for TPoly<C>
where
    C: Clone + Zero + One + Signed + fmt::Display + PartialEq,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            write_term(f, &c.abs(), k)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Writes `c * t^k` for a positive coefficient `c`.
pub(crate) fn write_term<C>(f: &mut fmt::Formatter<'_>, c: &C, k: usize) -> fmt::Result
where
    C: One + PartialEq + fmt::Display,
{
    let text = alloc::format!("{c}");
    let fraction = text.contains('/');
    if k == 0 {
        return f.write_str(&text);
    }
    if !c.is_one() {
        if fraction {
            write!(f, "({text})")?;
        } else {
            f.write_str(&text)?;
        }
    }
    match k {
        1 => f.write_str("t"),
        _ => write!(f, "t^{k}"),
    }
}
