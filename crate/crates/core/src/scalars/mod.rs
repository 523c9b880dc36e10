//! Exact scalars and the ring objects that drive generic diagram arithmetic.
//!
//! Elements carry no ring context; operations take a ring object that knows how
//! to combine them and what weight a closed loop contributes.

mod matrix;
mod poly;
mod ratfunc;
mod series;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use matrix::{
    det_bareiss, det_rational, inverse_rational, polymatrix_det, rank_rational, series_matrix_invert, solve_rational,
    Matrix, Solution,
};
pub use poly::{lagrange_interpolate, Polynomial};
pub use ratfunc::{ratfunc_eval, RationalFunction};
pub use series::{series_invert, TruncatedSeries};

/// Arbitrary-precision rational numbers in lowest terms.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `a / b`.
pub fn ratio(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

/// Renders `p/q`, or just `p` for integers.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(alloc::format!("invalid rational '{}'", s));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(a, b))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Which tier of the scalar tower a ring object represents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ScalarKind {
    Rational,
    Polynomial,
    RationalFunction,
    Series,
}

impl ScalarKind {
    pub fn name(self) -> &'static str {
        match self {
            ScalarKind::Rational => "rational",
            ScalarKind::Polynomial => "polynomial",
            ScalarKind::RationalFunction => "ratfunc",
            ScalarKind::Series => "series",
        }
    }
}

/// A commutative ring containing the parameter `t`.
pub trait Ring {
    type Elem: Clone + PartialEq + Debug;

    fn kind(&self) -> ScalarKind;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_rational(&self, q: &Rational) -> Self::Elem;
    /// `t^l`, the weight of `l` closed loops.
    fn param_pow(&self, l: usize) -> Self::Elem;

    /// Rejects elements that do not belong to this ring instance.
    fn validate(&self, _a: &Self::Elem) -> Result<()> {
        Ok(())
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rational(&rat(n))
    }

    fn pow(&self, a: &Self::Elem, k: usize) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }
}

/// A ring in which nonzero elements may be inverted.
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
}

/// Rationals with `t` specialised to a fixed value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtValue {
    pub t0: Rational,
}

impl AtValue {
    pub fn new(t0: Rational) -> Self {
        AtValue { t0 }
    }
}

impl Ring for AtValue {
    type Elem = Rational;
    fn kind(&self) -> ScalarKind {
        ScalarKind::Rational
    }
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn from_rational(&self, q: &Rational) -> Rational {
        q.clone()
    }
    fn param_pow(&self, l: usize) -> Rational {
        num_traits::pow(self.t0.clone(), l)
    }
}

impl Field for AtValue {
    fn inv(&self, a: &Rational) -> Option<Rational> {
        (!a.is_zero()).then(|| a.recip())
    }
}

/// Polynomials in the indeterminate `t`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PolyRing;

impl Ring for PolyRing {
    type Elem = Polynomial;
    fn kind(&self) -> ScalarKind {
        ScalarKind::Polynomial
    }
    fn zero(&self) -> Polynomial {
        Polynomial::zero()
    }
    fn one(&self) -> Polynomial {
        Polynomial::one()
    }
    fn is_zero(&self, a: &Polynomial) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a + b
    }
    fn neg(&self, a: &Polynomial) -> Polynomial {
        -a
    }
    fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a * b
    }
    fn from_rational(&self, q: &Rational) -> Polynomial {
        Polynomial::constant(q.clone())
    }
    fn param_pow(&self, l: usize) -> Polynomial {
        Polynomial::monomial(Rational::one(), l)
    }
}

/// Rational functions in `t`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RatFuncField;

impl Ring for RatFuncField {
    type Elem = RationalFunction;
    fn kind(&self) -> ScalarKind {
        ScalarKind::RationalFunction
    }
    fn zero(&self) -> RationalFunction {
        RationalFunction::zero()
    }
    fn one(&self) -> RationalFunction {
        RationalFunction::one()
    }
    fn is_zero(&self, a: &RationalFunction) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a + b
    }
    fn neg(&self, a: &RationalFunction) -> RationalFunction {
        -a
    }
    fn mul(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a * b
    }
    fn from_rational(&self, q: &Rational) -> RationalFunction {
        RationalFunction::from_rational(q.clone())
    }
    fn param_pow(&self, l: usize) -> RationalFunction {
        RationalFunction::from_poly(Polynomial::monomial(Rational::one(), l))
    }
}

impl Field for RatFuncField {
    fn inv(&self, a: &RationalFunction) -> Option<RationalFunction> {
        a.inv()
    }
}

/// Truncated power series in `u = t - t0` modulo `u^N`; `t` itself is `t0 + u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesRing {
    t0: Rational,
    order: usize,
    powers: Vec<TruncatedSeries>,
}

impl SeriesRing {
    pub fn new(t0: Rational, order: usize) -> Self {
        assert!(order > 0, "series order must be positive");
        let t = TruncatedSeries::new(t0.clone(), order, alloc::vec![t0.clone(), Rational::one()]);
        let mut powers = alloc::vec![TruncatedSeries::one(t0.clone(), order)];
        for k in 1..=16 {
            let next = powers[k - 1].mul_unchecked(&t);
            powers.push(next);
        }
        SeriesRing { t0, order, powers }
    }

    pub fn t0(&self) -> &Rational {
        &self.t0
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Expands a polynomial in `t` around `t0`.
    pub fn from_polynomial(&self, p: &Polynomial) -> TruncatedSeries {
        TruncatedSeries::from_polynomial(p, &self.t0, self.order)
    }
}

impl Ring for SeriesRing {
    type Elem = TruncatedSeries;
    fn kind(&self) -> ScalarKind {
        ScalarKind::Series
    }
    fn zero(&self) -> TruncatedSeries {
        TruncatedSeries::zero(self.t0.clone(), self.order)
    }
    fn one(&self) -> TruncatedSeries {
        TruncatedSeries::one(self.t0.clone(), self.order)
    }
    fn is_zero(&self, a: &TruncatedSeries) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
        a.add_unchecked(b)
    }
    fn neg(&self, a: &TruncatedSeries) -> TruncatedSeries {
        a.neg()
    }
    fn mul(&self, a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
        a.mul_unchecked(b)
    }
    fn from_rational(&self, q: &Rational) -> TruncatedSeries {
        TruncatedSeries::constant(self.t0.clone(), self.order, q.clone())
    }
    fn param_pow(&self, l: usize) -> TruncatedSeries {
        match self.powers.get(l) {
            Some(p) => p.clone(),
            None => self.pow(&self.powers[1], l),
        }
    }
    fn validate(&self, a: &TruncatedSeries) -> Result<()> {
        if a.base() != &self.t0 || a.order() != self.order {
            return Err(Error::OrderMismatch);
        }
        Ok(())
    }
}
