//! Sums of r-cycles as central elements of `FP_n(t)` and their eigenvalues.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::diagrams::{all_diagrams_with, Diagram, DiagramStats};
use crate::error::{Error, Result};
use crate::interp::{cycle_weight, for_each_r_cycle, r_cycle_count};
use crate::partalg::{x_basis_terms, AlgebraElement};
use crate::scalars::{rat, PolyRing, Polynomial, Rational, RationalFunction};
use crate::young::{binomial, factorial, YoungDiagram};
use crate::Limits;

pub use crate::interp::OneCycleConvention;

/// `ω_n^r(t)` with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralElement {
    pub n: usize,
    pub r: usize,
    pub value: AlgebraElement<Polynomial>,
}

/// `ξ^{λ(t)}_r` as a polynomial in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusScalar {
    pub lambda: YoungDiagram,
    pub r: usize,
    pub value: Polynomial,
}

/// How `σ(i_j) = i'_j` constrains the colors of the parts.
enum Shape {
    /// Not a partial injection, or two cycles.
    Infeasible,
    /// Exactly one cycle through parts, of the given length, and no open chains.
    Cycle(usize),
    /// Only fixed parts and open chains.
    Chains,
}

fn shape(pi: &Diagram) -> Shape {
    let n = pi.n();
    let a = pi.num_parts();
    let labels = pi.labels();
    let mut next: Vec<Option<usize>> = vec![None; a];
    let mut prev: Vec<Option<usize>> = vec![None; a];
    for j in 0..n {
        let (x, y) = (labels[j] as usize, labels[n + j] as usize);
        match next[x] {
            Some(z) if z != y => return Shape::Infeasible,
            _ => next[x] = Some(y),
        }
        match prev[y] {
            Some(z) if z != x => return Shape::Infeasible,
            _ => prev[y] = Some(x),
        }
    }
    let mut cycles = Vec::new();
    let mut open = 0;
    let mut seen = vec![false; a];
    for start in 0..a {
        if seen[start] || next[start] == Some(start) {
            continue;
        }
        let mut x = start;
        while let Some(p) = prev[x] {
            if p == start {
                break;
            }
            x = p;
        }
        let head = x;
        let mut len = 0;
        let mut cur = head;
        loop {
            seen[cur] = true;
            len += 1;
            match next[cur] {
                Some(nx) if nx == head => {
                    cycles.push(len);
                    break;
                }
                Some(nx) => cur = nx,
                None => {
                    open += 1;
                    break;
                }
            }
        }
    }
    match (cycles.as_slice(), open) {
        ([], _) => Shape::Chains,
        ([len], 0) => Shape::Cycle(*len),
        _ => Shape::Infeasible,
    }
}

/// Whether every part is closed under `j ↔ j'`.
fn identity_like(s: &DiagramStats) -> bool {
    s.c == s.a
}

/// Closed-form count of r-cycles `σ ∈ S_d` with `σ(i_j) = i'_j` for a perfect coloring of `π`.
pub fn s_count(pi: &Diagram, r: usize, d: usize, conv: OneCycleConvention) -> Result<BigInt> {
    let s = pi.stats()?;
    if r == 0 || r > d || s.a > d {
        return Ok(BigInt::zero());
    }
    if r == 1 {
        return Ok(if identity_like(&s) { BigInt::from(cycle_weight(d, 1, conv)) } else { BigInt::zero() });
    }
    match shape(pi) {
        Shape::Infeasible => Ok(BigInt::zero()),
        Shape::Cycle(len) => Ok(if len == r && s.a == r + s.b { BigInt::one() } else { BigInt::zero() }),
        Shape::Chains => {
            let (a, b, c) = (s.a as i64, s.b as i64, s.c as i64);
            let (r, d) = (r as i64, d as i64);
            let k = r - a + b;
            if k < 0 || r - a + c < 1 {
                return Ok(BigInt::zero());
            }
            Ok(factorial((r - a + c - 1) as usize) * binomial(&BigInt::from(d - a), k as usize))
        }
    }
}

/// The same count by enumerating r-cycles against one fixed perfect coloring.
pub fn s_bruteforce(pi: &Diagram, r: usize, d: usize, conv: OneCycleConvention, limits: &Limits) -> Result<BigInt> {
    let (n, a) = (pi.n(), pi.num_parts());
    if pi.m() != n {
        return Err(Error::ArityMismatch { expected: alloc::format!("{}→{}", n, n), found: alloc::format!("{}→{}", n, pi.m()) });
    }
    if r == 0 || r > d || a > d {
        return Ok(BigInt::zero());
    }
    let labels = pi.labels();
    let mut count: u64 = 0;
    for_each_r_cycle(d, r, limits, |sigma| {
        if (0..n).all(|j| sigma[labels[j] as usize] == labels[n + j] as usize) {
            count += 1;
        }
    })?;
    Ok(BigInt::from(count) * BigInt::from(cycle_weight(d, r, conv)))
}

/// The probe point at which a nonzero count is guaranteed to be visible.
pub fn probe_point(s: &DiagramStats, r: usize) -> usize {
    s.a.max(r + s.b).max(r + 1)
}

/// `q_{π,r,t}`: the coefficient of `x_π` in `ω_n^r(t)`.
pub fn q_coefficient(pi: &Diagram, r: usize, conv: OneCycleConvention, limits: &Limits) -> Result<Polynomial> {
    let s = pi.stats()?;
    if r == 1 {
        return Ok(match (identity_like(&s), conv) {
            (false, _) => Polynomial::zero(),
            (true, OneCycleConvention::PerPoint) => Polynomial::t(),
            (true, OneCycleConvention::Identity) => Polynomial::one(),
        });
    }
    let d0 = probe_point(&s, r);
    if s_bruteforce(pi, r, d0, conv, limits)?.is_zero() {
        return Ok(Polynomial::zero());
    }
    let (a, b, c) = (s.a, s.b, s.c);
    let k = r + b - a;
    let lead = Rational::new(factorial(r + c - a - 1), factorial(k));
    let mut p = Polynomial::constant(lead);
    for i in 0..k {
        p = &p * &Polynomial::linear(&rat((a + i) as i64));
    }
    Ok(p)
}

/// `ω_n^r(t) = Σ_π q_{π,r,t} x_π`.
pub fn omega(n: usize, r: usize, conv: OneCycleConvention, limits: &Limits) -> Result<CentralElement> {
    if r == 0 {
        return Err(Error::Internal("r must be positive".into()));
    }
    let ring = PolyRing;
    let mut value = AlgebraElement::zero(n, n);
    for pi in all_diagrams_with(n, n, limits)? {
        let q = q_coefficient(&pi, r, conv, limits)?;
        if q.is_zero() {
            continue;
        }
        for (mu, c) in x_basis_terms(&pi) {
            value.add_term(&ring, mu, q.scale(&c));
        }
    }
    Ok(CentralElement { n, r, value })
}

fn falling(x: &RationalFunction, r: usize, top: i64) -> RationalFunction {
    let mut acc = RationalFunction::one();
    for s in 0..r as i64 {
        acc = &acc * &(x + &RationalFunction::from_rational(rat(top - s)));
    }
    acc
}

/// Evaluates the Frobenius expression on explicit values `μ_0, …, μ_k`.
///
/// `ξ = (1/r) Σ_i (μ_i+k)(μ_i+k-1)…(μ_i+k-r+1) Π_{j≠i} (μ_i-μ_j-r)/(μ_i-μ_j)`.
pub fn frobenius_from_mu(mu: &[RationalFunction], r: usize) -> Result<RationalFunction> {
    let k = mu.len() as i64 - 1;
    let mut acc = RationalFunction::zero();
    let shift = RationalFunction::from_rational(rat(r as i64));
    for (i, mi) in mu.iter().enumerate() {
        let mut term = falling(mi, r, k);
        for (j, mj) in mu.iter().enumerate() {
            if i == j {
                continue;
            }
            let diff = mi - mj;
            let num = &diff - &shift;
            term = &term * &num.div(&diff).ok_or_else(|| Error::Internal("coinciding μ entries".into()))?;
        }
        acc = &acc + &term;
    }
    Ok(&acc * &RationalFunction::from_rational(Rational::new(BigInt::one(), BigInt::from(r))))
}

/// `ξ^{λ(t)}_{r,k}` with `μ_0 = t - |λ|` and `μ_i = λ_i - i` for `1 ≤ i ≤ k`.
pub fn frobenius_xi(lambda: &YoungDiagram, r: usize, k: usize) -> Result<FrobeniusScalar> {
    if k < lambda.num_rows() {
        return Err(Error::CutoffTooSmall { k, rows: lambda.num_rows() });
    }
    if r == 0 {
        return Err(Error::Internal("r must be positive".into()));
    }
    let mut mu = vec![RationalFunction::from_poly(Polynomial::linear(&rat(lambda.size() as i64)))];
    for i in 1..=k {
        mu.push(RationalFunction::from_rational(rat(lambda.row(i - 1) as i64 - i as i64)));
    }
    let value = frobenius_from_mu(&mu, r)?
        .to_polynomial()
        .ok_or_else(|| Error::Internal("Frobenius expression did not reduce to a polynomial".into()))?;
    Ok(FrobeniusScalar { lambda: lambda.clone(), r, value })
}

/// `ξ` with the smallest admissible cutoff.
pub fn xi(lambda: &YoungDiagram, r: usize) -> Result<Polynomial> {
    Ok(frobenius_xi(lambda, r, lambda.num_rows())?.value)
}

/// Character value `χ^λ` on the cycle type `rho`, by Murnaghan–Nakayama.
pub fn character(lambda: &YoungDiagram, rho: &[usize]) -> BigInt {
    let mut memo = BTreeMap::new();
    mn(lambda.rows(), rho, &mut memo)
}

type Memo = BTreeMap<(Vec<usize>, Vec<usize>), BigInt>;

fn mn(shape: &[usize], rho: &[usize], memo: &mut Memo) -> BigInt {
    let Some((&h, rest)) = rho.split_first() else {
        return if shape.is_empty() { BigInt::one() } else { BigInt::zero() };
    };
    let key = (shape.to_vec(), rho.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let len = shape.len();
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &x)| x + len - 1 - i).collect();
    let mut total = BigInt::zero();
    for (i, &b) in beta.iter().enumerate() {
        if b < h || beta.contains(&(b - h)) {
            continue;
        }
        let nb = b - h;
        let height = beta.iter().filter(|&&x| x > nb && x < b).count();
        let mut nbeta = beta.clone();
        nbeta[i] = nb;
        nbeta.sort_unstable_by(|x, y| y.cmp(x));
        let new_shape: Vec<usize> =
            nbeta.iter().enumerate().map(|(j, &x)| x - (len - 1 - j)).filter(|&x| x > 0).collect();
        let v = mn(&new_shape, rest, memo);
        if height % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// The scalar by which the sum of all r-cycles of `S_d` acts on the simple module `L_μ`, `|μ| = d`.
pub fn xi_oracle(mu: &YoungDiagram, r: usize, conv: OneCycleConvention) -> Rational {
    let d = mu.size();
    if r == 0 || r > d {
        return Rational::zero();
    }
    let class = if r == 1 { BigInt::from(cycle_weight(d, 1, conv)) } else { BigInt::from(r_cycle_count(d, r)) };
    let mut rho = vec![r];
    rho.extend(core::iter::repeat_n(1, d - r));
    if r == 1 {
        rho = vec![1; d];
    }
    Rational::new(class * character(mu, &rho), mu.dimension())
}

/// `ξ` values of `λ` at `t0` for `r = 1..=r_max`.
pub fn xi_fingerprint(lambda: &YoungDiagram, t0: &Rational, r_max: usize) -> Result<Vec<Rational>> {
    (1..=r_max).map(|r| Ok(xi(lambda, r)?.eval(t0))).collect()
}

/// Converts a count to `i64` for display.
pub fn count_to_i64(c: &BigInt) -> Option<i64> {
    c.to_i64()
}
