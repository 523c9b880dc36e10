//! Idempotents: Young symmetrizers, primitive idempotents over `Q(t)`,
//! Newton lifting over truncated series and identification of lifts.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::central::{omega, xi, OneCycleConvention};
use crate::diagrams::{all_diagrams_with, Diagram};
use crate::error::{Error, Result};
use crate::partalg::{compose, trace, AlgebraElement};
use crate::scalars::{
    rat, series_matrix_invert, solve_rational, AtValue, Matrix, PolyRing, Polynomial, Rational, RationalFunction, Ring,
    SeriesRing, Solution, TruncatedSeries,
};
use crate::young::{factorial, p_poly, YoungDiagram};
use crate::Limits;

/// An element over truncated series at a fixed base point and order.
pub type SeriesElement = AlgebraElement<TruncatedSeries>;

/// Default series order for lifting.
pub const DEFAULT_ORDER: usize = 8;
/// Largest order tried by [`lift_decompose`].
pub const MAX_ORDER: usize = 32;

/// Largest `|λ|` accepted by the constructions in this module.
pub const MAX_SYMMETRIZER: usize = 7;

/// The summands of `Lift_t([n], e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftDecomposition {
    pub n: usize,
    pub t0: Rational,
    pub order: usize,
    /// Sorted multiset of summands.
    pub summands: Vec<YoungDiagram>,
    /// `tr(ε)` modulo `u^N`.
    pub trace_series: TruncatedSeries,
}

fn sign(p: &[usize]) -> i64 {
    let mut seen = vec![false; p.len()];
    let mut s = 1;
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        if len % 2 == 0 {
            s = -s;
        }
    }
    s
}

/// All permutations of `0..n` that preserve each block setwise.
fn block_group(blocks: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![(0..n).collect::<Vec<usize>>()];
    for block in blocks {
        let mut next = Vec::new();
        for perm in permutations_of(block) {
            for base in &out {
                let mut p = base.clone();
                for (src, dst) in block.iter().zip(&perm) {
                    p[*src] = *dst;
                }
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn permutations_of(xs: &[usize]) -> Vec<Vec<usize>> {
    if xs.len() <= 1 {
        return vec![xs.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut p in permutations_of(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// All permutations of `0..n`.
pub fn symmetric_group(n: usize) -> Vec<Vec<usize>> {
    permutations_of(&(0..n).collect::<Vec<_>>())
}

/// The sign of a permutation.
pub fn permutation_sign(p: &[usize]) -> i64 {
    sign(p)
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_SYMMETRIZER {
        return Err(Error::ResourceLimit { what: format!("symmetric group S_{}", n), limit: MAX_SYMMETRIZER as u64 });
    }
    Ok(())
}

/// The normalised Young symmetrizer `(f_λ/n!) Σ_{p ∈ R, q ∈ C} sgn(q) p q` of the row-reading tableau.
pub fn young_symmetrizer(lambda: &YoungDiagram) -> Result<AlgebraElement<Rational>> {
    let n = lambda.size();
    check_size(n)?;
    let mut rows = Vec::new();
    let mut next = 0;
    for &len in lambda.rows() {
        rows.push((next..next + len).collect::<Vec<usize>>());
        next += len;
    }
    let cols: Vec<Vec<usize>> = (0..lambda.row(0)).map(|j| rows.iter().filter(|r| r.len() > j).map(|r| r[j]).collect()).collect();
    let row_group = block_group(&rows, n);
    let col_group = block_group(&cols, n);
    let mut acc: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    for p in &row_group {
        for q in &col_group {
            let pq: Vec<usize> = (0..n).map(|i| p[q[i]]).collect();
            *acc.entry(pq).or_insert_with(BigInt::zero) += BigInt::from(sign(q));
        }
    }
    let scale = Rational::new(lambda.dimension(), factorial(n));
    let ring = AtValue::new(Rational::zero());
    AlgebraElement::from_terms(
        &ring,
        n,
        n,
        acc.into_iter().map(|(p, c)| (Diagram::from_permutation(&p), Rational::from_integer(c) * &scale)),
    )
}

/// `s_n = (1/n!) Σ sgn(σ) σ`.
pub fn antisymmetrizer(n: usize) -> Result<AlgebraElement<Rational>> {
    check_size(n)?;
    let scale = Rational::new(BigInt::one(), factorial(n));
    let ring = AtValue::new(Rational::zero());
    AlgebraElement::from_terms(
        &ring,
        n,
        n,
        symmetric_group(n).into_iter().map(|p| {
            let s = rat(sign(&p));
            (Diagram::from_permutation(&p), s * &scale)
        }),
    )
}

/// The smallest `r ≤ n + 1` with `ξ_{λ,r} ≠ ξ_{μ,r}`.
fn separating_r(lambda: &YoungDiagram, mu: &YoungDiagram, n: usize) -> Result<(usize, Polynomial, Polynomial)> {
    for r in 1..=n + 1 {
        let (a, b) = (xi(lambda, r)?, xi(mu, r)?);
        if a != b {
            return Ok((r, a, b));
        }
    }
    Err(Error::SeparationFailure(format!("{} and {} share all eigenvalues up to r = {}", lambda, mu, n + 1)))
}

/// A primitive idempotent for `L(λ)` in `FP_{|λ|}(t)` over rational functions.
///
/// Projects the Young symmetrizer with `Π_μ (ω^{r_μ} - ξ_μ)/(ξ_λ - ξ_μ)` over every other `|μ| ≤ |λ|`.
pub fn primitive_idempotent(lambda: &YoungDiagram, limits: &Limits) -> Result<AlgebraElement<RationalFunction>> {
    let n = lambda.size();
    let ring = PolyRing;
    let mut num = young_symmetrizer(lambda)?.lift_into(&ring);
    let mut den = Polynomial::one();
    let mut omegas: BTreeMap<usize, AlgebraElement<Polynomial>> = BTreeMap::new();
    for mu in YoungDiagram::all_up_to(n) {
        if &mu == lambda {
            continue;
        }
        let (r, xl, xm) = separating_r(lambda, &mu, n)?;
        if let alloc::collections::btree_map::Entry::Vacant(slot) = omegas.entry(r) {
            slot.insert(omega(n, r, OneCycleConvention::PerPoint, limits)?.value);
        }
        let w = &omegas[&r];
        let applied = compose(&ring, w, &num)?;
        num = applied.sub(&ring, &num.scale(&ring, &xm))?;
        den = &den * &(&xl - &xm);
    }
    let field = crate::scalars::RatFuncField;
    num.try_convert(&field, |p| RationalFunction::new(p.clone(), den.clone()))
}

/// Newton iteration `a ↦ 3a² - 2a³` from an idempotent at `t0` to one modulo `u^N`.
pub fn newton_lift(e: &AlgebraElement<Rational>, t0: &Rational, order: usize) -> Result<SeriesElement> {
    let at = AtValue::new(t0.clone());
    if e.n() != e.m() {
        return Err(Error::ArityMismatch { expected: format!("{}→{}", e.n(), e.n()), found: format!("{}→{}", e.n(), e.m()) });
    }
    if &compose(&at, e, e)? != e {
        return Err(Error::NotIdempotent);
    }
    let ring = SeriesRing::new(t0.clone(), order);
    let three = ring.from_int(3);
    let minus_two = ring.from_int(-2);
    let mut a = e.lift_into(&ring);
    for _ in 0..=usize::BITS {
        let a2 = compose(&ring, &a, &a)?;
        if a2 == a {
            return Ok(a);
        }
        let a3 = compose(&ring, &a2, &a)?;
        a = a2.scale(&ring, &three).add(&ring, &a3.scale(&ring, &minus_two))?;
    }
    Err(Error::Internal("Newton iteration did not converge".into()))
}

/// The left-multiplication matrix of `a` on the diagram basis of `FP_n`.
fn left_matrix(ring: &SeriesRing, a: &SeriesElement, basis: &[Diagram]) -> Result<Matrix<TruncatedSeries>> {
    let index: BTreeMap<&Diagram, usize> = basis.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let mut m = Matrix::filled(basis.len(), basis.len(), ring.zero());
    for (j, b) in basis.iter().enumerate() {
        let prod = compose(ring, a, &AlgebraElement::from_diagram(ring, b))?;
        for (d, c) in prod.terms() {
            m.set(index[d], j, c.clone());
        }
    }
    Ok(m)
}

/// Inverse of a unit of `FP_n` over truncated series.
pub fn series_element_inverse(ring: &SeriesRing, a: &SeriesElement, limits: &Limits) -> Result<SeriesElement> {
    let n = a.n();
    let basis = all_diagrams_with(n, n, limits)?;
    let inv = series_matrix_invert(&left_matrix(ring, a, &basis)?)?;
    let id_col = basis.iter().position(|d| *d == Diagram::identity(n)).expect("identity in basis");
    AlgebraElement::from_terms(ring, n, n, basis.iter().enumerate().map(|(i, d)| (d.clone(), inv.get(i, id_col).clone())))
}

/// `a = ε₁ε₂ + (1-ε₁)(1-ε₂)` with its inverse; `ε₁ a = a ε₂`.
pub fn conjugator(
    eps1: &SeriesElement,
    eps2: &SeriesElement,
    ring: &SeriesRing,
    limits: &Limits,
) -> Result<(SeriesElement, SeriesElement)> {
    if eps1.n() != eps2.n() || eps1.n() != eps1.m() || eps2.n() != eps2.m() {
        return Err(Error::ArityMismatch { expected: format!("{}→{}", eps1.n(), eps1.n()), found: format!("{}→{}", eps2.n(), eps2.m()) });
    }
    if eps1.constant_part() != eps2.constant_part() {
        return Err(Error::NotAUnit);
    }
    let id = AlgebraElement::identity(ring, eps1.n());
    let c1 = id.sub(ring, eps1)?;
    let c2 = id.sub(ring, eps2)?;
    let a = compose(ring, eps1, eps2)?.add(ring, &compose(ring, &c1, &c2)?)?;
    let inv = series_element_inverse(ring, &a, limits)?;
    Ok((a, inv))
}

/// Chooses coefficients `c_r` so that `Σ_r c_r ξ_{λ,r}` separates all candidates.
fn separating_combination(cands: &[YoungDiagram], n: usize) -> Result<Vec<(usize, Rational)>> {
    let rs: Vec<usize> = (2..=n + 1).collect();
    let table: Vec<Vec<Polynomial>> = cands.iter().map(|l| rs.iter().map(|&r| xi(l, r)).collect()).collect::<Result<_>>()?;
    let distinct = |vals: &[Polynomial]| {
        let mut v = vals.to_vec();
        v.sort();
        v.windows(2).all(|w| w[0] != w[1])
    };
    for (idx, &r) in rs.iter().enumerate() {
        let vals: Vec<Polynomial> = table.iter().map(|row| row[idx].clone()).collect();
        if distinct(&vals) {
            return Ok(vec![(r, Rational::one())]);
        }
    }
    for c in 2..20i64 {
        let coeffs: Vec<Rational> = (0..rs.len()).map(|k| num_traits::pow(rat(c), k)).collect();
        let vals: Vec<Polynomial> = table
            .iter()
            .map(|row| row.iter().zip(&coeffs).fold(Polynomial::zero(), |acc, (p, q)| &acc + &p.scale(q)))
            .collect();
        if distinct(&vals) {
            return Ok(rs.iter().cloned().zip(coeffs).collect());
        }
    }
    Err(Error::SeparationFailure(format!("no combination of ω_{}^r separates the candidates", n)))
}

/// Identifies `Lift_{t0}([n], e)` from the traces `tr(ω^j ε)` modulo `u^N`.
///
/// Starts at `order` and doubles up to [`MAX_ORDER`] while the system is underdetermined.
pub fn lift_decompose(
    e: &AlgebraElement<Rational>,
    t0: &Rational,
    order: usize,
    limits: &Limits,
) -> Result<LiftDecomposition> {
    let mut order = order.max(1);
    loop {
        match lift_decompose_at(e, t0, order, limits) {
            Err(Error::OrderTooSmall(_)) if order * 2 <= MAX_ORDER => order *= 2,
            other => return other,
        }
    }
}

fn lift_decompose_at(
    e: &AlgebraElement<Rational>,
    t0: &Rational,
    order: usize,
    limits: &Limits,
) -> Result<LiftDecomposition> {
    let n = e.n();
    let ring = SeriesRing::new(t0.clone(), order);
    let eps = newton_lift(e, t0, order)?;
    let trace_series = trace(&ring, &eps)?;
    let cands = YoungDiagram::all_up_to(n);
    let dims: Vec<TruncatedSeries> = cands.iter().map(|l| ring.from_polynomial(&p_poly(l))).collect();

    let (etas, traces) = if cands.len() == 1 {
        (vec![ring.one()], vec![trace_series.clone()])
    } else {
        let combo = separating_combination(&cands, n)?;
        let mut w = AlgebraElement::zero(n, n);
        let mut etas_poly = vec![Polynomial::zero(); cands.len()];
        for (r, c) in &combo {
            let om = omega(n, *r, OneCycleConvention::PerPoint, limits)?.value;
            w = w.add(&PolyRing, &om.scale(&PolyRing, &Polynomial::constant(c.clone())))?;
            for (k, l) in cands.iter().enumerate() {
                etas_poly[k] = &etas_poly[k] + &xi(l, *r)?.scale(c);
            }
        }
        let w_series = w.convert(&ring, |p| ring.from_polynomial(p));
        let mut traces = vec![trace_series.clone()];
        let mut v = eps.clone();
        for _ in 1..cands.len() {
            v = compose(&ring, &w_series, &v)?;
            traces.push(trace(&ring, &v)?);
        }
        (etas_poly.iter().map(|p| ring.from_polynomial(p)).collect(), traces)
    };

    let c = cands.len();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let mut powers: Vec<TruncatedSeries> = dims.clone();
    for tr in &traces {
        for k in 0..order {
            rows.push(powers.iter().map(|s| s.coeff(k).clone()).collect::<Vec<_>>());
            rhs.push(tr.coeff(k).clone());
        }
        for (p, eta) in powers.iter_mut().zip(&etas) {
            *p = ring.mul(p, eta);
        }
    }
    let sol = match solve_rational(&Matrix::from_rows(rows), &rhs) {
        Solution::Unique(x) => x,
        Solution::Many(_) => return Err(Error::OrderTooSmall(order)),
        Solution::Inconsistent => {
            return Err(Error::SeparationFailure("trace data is inconsistent with the candidate summands".into()))
        }
    };
    let mut summands = Vec::new();
    let mut check = ring.zero();
    for (k, m) in sol.iter().enumerate() {
        if !m.is_integer() || m.is_negative() {
            return Err(Error::SeparationFailure(format!("non-integral multiplicity {} for {}", m, cands[k])));
        }
        let count = m.to_integer();
        check = ring.add(&check, &dims[k].scale(m));
        let mut i = BigInt::zero();
        while i < count {
            summands.push(cands[k].clone());
            i += 1;
        }
    }
    debug_assert_eq!(c, sol.len());
    if check != trace_series {
        return Err(Error::Internal("summand dimensions do not add up to the trace".into()));
    }
    summands.sort();
    Ok(LiftDecomposition { n, t0: t0.clone(), order, summands, trace_series })
}

/// `dim Hom(A, B) = Σ_λ m_λ(A) m_λ(B)` from two lift decompositions.
pub fn hom_dim_from_lifts(a: &LiftDecomposition, b: &LiftDecomposition) -> usize {
    let count = |v: &[YoungDiagram]| {
        let mut m: BTreeMap<YoungDiagram, usize> = BTreeMap::new();
        for x in v {
            *m.entry(x.clone()).or_default() += 1;
        }
        m
    };
    let (ma, mb) = (count(&a.summands), count(&b.summands));
    ma.iter().map(|(k, x)| x * mb.get(k).copied().unwrap_or(0)).sum()
}
