use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::{fmt_rational, Polynomial, Rational};
use crate::error::{Error, Result};

/// A power series in `u = t - t0` truncated modulo `u^N`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TruncatedSeries {
    base: Rational,
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series from its first coefficients; missing ones are zero, extra ones are dropped.
    pub fn new(base: Rational, order: usize, mut coeffs: Vec<Rational>) -> Self {
        assert!(order > 0, "series order must be positive");
        coeffs.resize(order, Rational::zero());
        TruncatedSeries { base, coeffs }
    }

    pub fn zero(base: Rational, order: usize) -> Self {
        Self::new(base, order, Vec::new())
    }

    pub fn constant(base: Rational, order: usize, c: Rational) -> Self {
        Self::new(base, order, vec![c])
    }

    pub fn one(base: Rational, order: usize) -> Self {
        Self::constant(base, order, Rational::one())
    }

    /// The expansion of `p(t0 + u)`.
    pub fn from_polynomial(p: &Polynomial, base: &Rational, order: usize) -> Self {
        Self::new(base.clone(), order, p.shift(base).coeffs().to_vec())
    }

    pub fn base(&self) -> &Rational {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.base != o.base || self.order() != o.order() {
            return Err(Error::OrderMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(self.add_unchecked(o))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(self.add_unchecked(&o.neg()))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(self.mul_unchecked(o))
    }

    pub(crate) fn add_unchecked(&self, o: &Self) -> Self {
        TruncatedSeries {
            base: self.base.clone(),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub(crate) fn mul_unchecked(&self, o: &Self) -> Self {
        let n = self.order();
        let mut c = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { base: self.base.clone(), coeffs: c }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries { base: self.base.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries { base: self.base.clone(), coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplicative inverse modulo `u^N`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::NotAUnit);
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out = vec![Rational::zero(); n];
        out[0] = inv0.clone();
        for k in 1..n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -acc * &inv0;
        }
        Ok(TruncatedSeries { base: self.base.clone(), coeffs: out })
    }

    /// The same series truncated to a smaller order.
    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.base.clone(), order, self.coeffs[..order.min(self.order())].to_vec())
    }
}

/// Inverts a series, failing when the constant term vanishes.
pub fn series_invert(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    s.inverse()
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", fmt_rational(c))?,
                1 => write!(f, "({})u", fmt_rational(c))?,
                _ => write!(f, "({})u^{}", fmt_rational(c), k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(u^{})", self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64) -> Rational {
        Rational::from_integer(a.into())
    }

    #[test]
    fn invert_examples() {
        let s = TruncatedSeries::new(q(0), 3, vec![q(1), q(-1)]);
        let inv = series_invert(&s).unwrap();
        assert_eq!(inv.coeffs(), &[q(1), q(1), q(1)]);
        assert_eq!(series_invert(&TruncatedSeries::one(q(0), 3)).unwrap(), TruncatedSeries::one(q(0), 3));
        let u = TruncatedSeries::new(q(0), 3, vec![q(0), q(1)]);
        assert_eq!(series_invert(&u), Err(Error::NotAUnit));
    }

    #[test]
    fn mixed_orders_rejected() {
        let a = TruncatedSeries::one(q(0), 3);
        let b = TruncatedSeries::one(q(0), 4);
        let c = TruncatedSeries::one(q(1), 3);
        assert_eq!(a.try_mul(&b), Err(Error::OrderMismatch));
        assert_eq!(a.try_add(&c), Err(Error::OrderMismatch));
    }

    #[test]
    fn polynomial_expansion() {
        let p = Polynomial::from_ints(&[0, 0, 1]);
        let s = TruncatedSeries::from_polynomial(&p, &q(3), 4);
        assert_eq!(s.coeffs(), &[q(9), q(6), q(1), q(0)]);
    }
}
