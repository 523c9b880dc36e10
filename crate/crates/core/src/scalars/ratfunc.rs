use alloc::format;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{fmt_rational, Polynomial, Rational};
use crate::error::{Error, Result};

/// A quotient of polynomials in lowest terms with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Builds `num / den`, cancelling common factors. Errors on a zero denominator.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::PoleAtPoint("t".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = Polynomial::gcd(&num, &den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let lc = den.leading().recip();
        Ok(RationalFunction { num: num.scale(&lc), den: den.scale(&lc) })
    }

    pub fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this function equals, if the denominator is constant.
    pub fn to_polynomial(&self) -> Option<Polynomial> {
        (self.den.degree() == Some(0)).then(|| self.num.clone())
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Self::new(self.den.clone(), self.num.clone()).ok()
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        Some(self * &o.inv()?)
    }

    /// Evaluates at `t0`.
    pub fn eval(&self, t0: &Rational) -> Result<Rational> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            return Err(Error::PoleAtPoint(fmt_rational(t0)));
        }
        Ok(self.num.eval(t0) / d)
    }
}

/// Evaluates `f` at `t0`, failing at poles.
pub fn ratfunc_eval(f: &RationalFunction, t0: &Rational) -> Result<Rational> {
    f.eval(t0)
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Polynomial| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({})", p)
            } else {
                format!("{}", p)
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return RationalFunction::new(&self.num + &o.num, self.den.clone()).expect("nonzero denominator");
        }
        RationalFunction::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
            .expect("nonzero denominator")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() || o.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero denominator")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(a: i64) -> Rational {
        Rational::from_integer(a.into())
    }

    #[test]
    fn eval_examples() {
        let sq = RationalFunction::from_poly(Polynomial::from_ints(&[0, 0, 1]));
        assert_eq!(ratfunc_eval(&sq, &q(3)).unwrap(), q(9));
        let inv_t = RationalFunction::new(Polynomial::one(), Polynomial::t()).unwrap();
        assert!(matches!(ratfunc_eval(&inv_t, &q(0)), Err(Error::PoleAtPoint(_))));
        let f = RationalFunction::new(Polynomial::linear(&q(1)), Polynomial::linear(&q(2))).unwrap();
        assert_eq!(ratfunc_eval(&f, &q(1)).unwrap(), q(0));
    }

    #[test]
    fn cancellation() {
        let num = Polynomial::from_roots(&[q(1), q(2)]).scale(&q(3));
        let den = Polynomial::from_roots(&[q(1), q(4)]).scale(&q(2));
        let f = RationalFunction::new(num, den).unwrap();
        assert_eq!(f.denominator(), &Polynomial::linear(&q(4)));
        assert_eq!(f.numerator(), &Polynomial::linear(&q(2)).scale(&Rational::new(3.into(), 2.into())));
        let g = &f * &f.inv().unwrap();
        assert!(g.to_polynomial().unwrap().is_one());
        assert_eq!(format!("{}", f), "((3/2)t - 3)/(t - 4)");
        assert!(Rational::one().is_one());
    }
}
