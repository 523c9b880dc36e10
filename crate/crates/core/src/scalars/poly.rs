use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{fmt_rational, Rational};
use crate::error::{Error, Result};

/// A univariate polynomial in `t` with rational coefficients.
///
/// Coefficients are stored in ascending degree with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// `t - a`.
    pub fn linear(a: &Rational) -> Self {
        Self::from_coeffs(vec![-a.clone(), Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// `c · t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant value, if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading().recip())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Coefficients of `p(t0 + u)` as a polynomial in `u`.
    pub fn shift(&self, t0: &Rational) -> Self {
        let mut acc = Self::zero();
        let step = Self::from_coeffs(vec![t0.clone(), Rational::one()]);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &step) + &Self::constant(c.clone());
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        let lc_inv = d.leading().recip();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Product `Π (t - r)` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| &acc * &Self::linear(r))
    }

    /// Rational roots with multiplicities, in increasing order.
    ///
    /// Returns `None` when a coefficient is too large for divisor enumeration.
    pub fn rational_roots(&self) -> Option<Vec<(Rational, usize)>> {
        Some(self.factor_rational()?.1)
    }

    /// Splits off all linear factors: `p = lc · Π (t - r)^k · rest` with `rest` monic.
    pub fn factor_rational(&self) -> Option<(Rational, Vec<(Rational, usize)>, Polynomial)> {
        if self.is_zero() {
            return Some((Rational::zero(), Vec::new(), Self::zero()));
        }
        let lc = self.leading();
        let mut rest = self.monic();
        let mut roots = Vec::new();
        let mut zero_mult = 0;
        while rest.coeff(0).is_zero() && !rest.is_zero() && rest.degree() != Some(0) {
            rest = Self::from_coeffs(rest.coeffs[1..].to_vec());
            zero_mult += 1;
        }
        if zero_mult > 0 {
            roots.push((Rational::zero(), zero_mult));
        }
        if rest.degree().unwrap_or(0) > 0 {
            let ints = integer_coeffs(&rest);
            let a0 = ints[0].abs();
            let an = ints[ints.len() - 1].abs();
            let ps = divisors(&a0)?;
            let qs = divisors(&an)?;
            let mut cands = Vec::new();
            for p in &ps {
                for q in &qs {
                    let r = Rational::new(p.clone(), q.clone());
                    cands.push(r.clone());
                    cands.push(-r);
                }
            }
            cands.sort();
            cands.dedup();
            for r in cands {
                let lin = Self::linear(&r);
                let mut k = 0;
                while rest.degree().unwrap_or(0) > 0 {
                    match rest.exact_div(&lin) {
                        Some(q) => {
                            rest = q;
                            k += 1;
                        }
                        None => break,
                    }
                }
                if k > 0 {
                    roots.push((r, k));
                }
            }
        }
        roots.sort();
        Some((lc, roots, rest))
    }

    /// Renders the polynomial as a product of linear factors where possible,
    /// e.g. `(1/24)·t·(t-1)·(t-5)`.
    pub fn to_factored_string(&self) -> String {
        let Some((lc, roots, rest)) = self.factor_rational() else {
            return self.to_string();
        };
        if self.degree().unwrap_or(0) == 0 {
            return self.to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let lead = if lc.is_one() {
            None
        } else if lc == -Rational::one() {
            Some("-".to_string())
        } else if lc.is_integer() {
            Some(format!("{}·", lc))
        } else {
            Some(format!("({})·", lc))
        };
        for (r, k) in &roots {
            let base = if r.is_zero() {
                "t".to_string()
            } else if r.is_negative() {
                format!("(t+{})", fmt_rational(&-r.clone()))
            } else {
                format!("(t-{})", fmt_rational(r))
            };
            if *k == 1 {
                parts.push(base);
            } else {
                parts.push(format!("{}^{}", base, k));
            }
        }
        if rest.degree().unwrap_or(0) > 0 {
            parts.push(format!("({})", rest));
        }
        let body = parts.join("·");
        match lead {
            None => body,
            Some(l) => format!("{}{}", l, body),
        }
    }
}

/// Scales a nonzero polynomial to a primitive integer polynomial.
fn integer_coeffs(p: &Polynomial) -> Vec<BigInt> {
    let lcm = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

/// Positive divisors of a positive integer, by trial division.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.to_u128()?;
    if n > 1u128 << 80 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d: u128 = 1;
    while d * d <= n {
        if d > 50_000_000 {
            return None;
        }
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Some(small)
}

/// The unique polynomial of degree below `points.len()` through the points.
pub fn lagrange_interpolate(points: &[(Rational, Rational)]) -> Result<Polynomial> {
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(Error::DuplicateAbscissa(fmt_rational(x)));
        }
    }
    let mut acc = Polynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Polynomial::one();
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = &basis * &Polynomial::linear(xj);
                denom *= xi - xj;
            }
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    Ok(acc)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let coeff = if k == 0 {
                fmt_rational(&a)
            } else if a.is_one() {
                String::new()
            } else if a.is_integer() {
                fmt_rational(&a)
            } else {
                format!("({})", fmt_rational(&a))
            };
            match k {
                0 => write!(f, "{}", coeff)?,
                1 => write!(f, "{}t", coeff)?,
                _ => write!(f, "{}t^{}", coeff, k)?,
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= o.coeffs.len() { (self, o) } else { (o, self) };
        let mut c = long.coeffs.clone();
        for (a, b) in c.iter_mut().zip(short.coeffs.iter()) {
            *a += b;
        }
        Polynomial::from_coeffs(c)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        self + &(-o)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(c)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, o: Polynomial) -> Polynomial {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
