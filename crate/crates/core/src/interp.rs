//! Diagrams acting on `V_d^{⊗n}`: the matrices `f(π)` indexed by colorings.
//!
//! A coloring of `[n]` with `d` colors is a tuple `(i_1, …, i_n)`; its index is
//! `Σ i_j d^{n-j}`, so colorings are ordered lexicographically.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::diagrams::{all_diagrams_with, compose_star, Diagram};
use crate::error::{Error, Result};
use crate::partalg::AlgebraElement;
use crate::scalars::{rank_rational, rat, Matrix, Polynomial, Rational};
use crate::Limits;

/// How the "sum of all 1-cycles" is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum OneCycleConvention {
    /// One 1-cycle per point of `{1..d}`: the sum is `d` times the identity.
    #[default]
    PerPoint,
    /// The identity permutation counted once.
    Identity,
}

/// A `d^m × d^n` rational matrix commuting with the diagonal `S_d` action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantMatrix {
    pub d: usize,
    pub n: usize,
    pub m: usize,
    pub entries: Matrix<Rational>,
}

fn checked_pow(d: usize, k: usize, limits: &Limits) -> Result<usize> {
    let mut acc: usize = 1;
    for _ in 0..k {
        acc = acc.saturating_mul(d);
        if acc > limits.max_matrix_dim {
            return Err(Error::ResourceLimit { what: format!("{}^{} colorings", d, k), limit: limits.max_matrix_dim as u64 });
        }
    }
    Ok(acc)
}

/// Digits of `idx` in base `d`, most significant first.
fn coloring(idx: usize, d: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    let mut x = idx;
    for j in (0..len).rev() {
        out[j] = x % d;
        x /= d;
    }
    out
}

fn coloring_index(c: &[usize], d: usize) -> usize {
    c.iter().fold(0, |acc, &x| acc * d + x)
}

fn coloring_matrix(pi: &Diagram, d: usize, perfect: bool, limits: &Limits) -> Result<EquivariantMatrix> {
    let (n, m) = (pi.n(), pi.m());
    let cols = checked_pow(d, n, limits)?;
    let rows = checked_pow(d, m, limits)?;
    let labels = pi.labels();
    let parts = pi.num_parts();
    let mut entries = Matrix::filled(rows, cols, Rational::zero());
    let mut colour_of = vec![usize::MAX; parts];
    for c in 0..cols {
        let bottom = coloring(c, d, n);
        for r in 0..rows {
            let top = coloring(r, d, m);
            colour_of.iter_mut().for_each(|x| *x = usize::MAX);
            let mut good = true;
            for (v, &col) in bottom.iter().chain(top.iter()).enumerate() {
                let slot = &mut colour_of[labels[v] as usize];
                if *slot == usize::MAX {
                    *slot = col;
                } else if *slot != col {
                    good = false;
                    break;
                }
            }
            if good && perfect {
                let mut used = colour_of.clone();
                used.sort_unstable();
                good = used.windows(2).all(|w| w[0] != w[1]);
            }
            if good {
                entries.set(r, c, Rational::one());
            }
        }
    }
    Ok(EquivariantMatrix { d, n, m, entries })
}

/// `f(π)`: entry 1 where the coloring is good.
pub fn f_matrix(pi: &Diagram, d: usize, limits: &Limits) -> Result<EquivariantMatrix> {
    coloring_matrix(pi, d, false, limits)
}

/// `f(x_π)`: entry 1 where the coloring is perfect.
pub fn f_x_matrix(pi: &Diagram, d: usize, limits: &Limits) -> Result<EquivariantMatrix> {
    coloring_matrix(pi, d, true, limits)
}

/// `f` applied to a rational combination of diagrams.
pub fn f_element(e: &AlgebraElement<Rational>, d: usize, limits: &Limits) -> Result<EquivariantMatrix> {
    let rows = checked_pow(d, e.m(), limits)?;
    let cols = checked_pow(d, e.n(), limits)?;
    let mut acc = Matrix::filled(rows, cols, Rational::zero());
    for (pi, c) in e.terms() {
        acc = acc.add(&f_matrix(pi, d, limits)?.entries.scale(c));
    }
    Ok(EquivariantMatrix { d, n: e.n(), m: e.m(), entries: acc })
}

/// `f` applied to a polynomial combination with `t` set to `d`.
pub fn f_poly_element(e: &AlgebraElement<Polynomial>, d: usize, limits: &Limits) -> Result<EquivariantMatrix> {
    f_element(&e.eval(&rat(d as i64)), d, limits)
}

/// Checks `f(μ) f(π) = d^ℓ f(μ·π)`.
pub fn verify_comp(pi: &Diagram, mu: &Diagram, d: usize, limits: &Limits) -> Result<bool> {
    let (prod, l) = compose_star(mu, pi)?;
    let lhs = f_matrix(mu, d, limits)?.entries.mul(&f_matrix(pi, d, limits)?.entries);
    let w = num_traits::pow(rat(d as i64), l);
    let rhs = f_matrix(&prod, d, limits)?.entries.scale(&w);
    Ok(lhs == rhs)
}

/// Rank of the span of `{f(π) : π ∈ P_{n,m}}`.
pub fn hom_rank(n: usize, m: usize, d: usize, limits: &Limits) -> Result<usize> {
    let ds = all_diagrams_with(n, m, limits)?;
    let width = checked_pow(d, n, limits)? * checked_pow(d, m, limits)?;
    if width == 0 {
        return Ok(0);
    }
    let flat: Vec<Vec<Rational>> = ds
        .iter()
        .map(|pi| Ok(f_matrix(pi, d, limits)?.entries.to_rows().into_iter().flatten().collect()))
        .collect::<Result<_>>()?;
    Ok(rank_rational(&Matrix::from_rows(flat)))
}

/// Number of r-cycles in `S_d`: `C(d, r)·(r-1)!`.
pub fn r_cycle_count(d: usize, r: usize) -> u128 {
    if r == 0 || r > d {
        return 0;
    }
    let mut binom: u128 = 1;
    for i in 0..r {
        binom = binom * (d - i) as u128 / (i + 1) as u128;
    }
    (1..r as u128).fold(binom, |acc, k| acc * k)
}

/// Calls `visit` with every r-cycle of `S_d` as an image array; `r = 1` yields the identity once.
pub(crate) fn for_each_r_cycle(d: usize, r: usize, limits: &Limits, mut visit: impl FnMut(&[usize])) -> Result<()> {
    if r == 0 || r > d {
        return Ok(());
    }
    let count = if r == 1 { 1 } else { r_cycle_count(d, r) };
    if count > limits.max_cycles as u128 {
        return Err(Error::ResourceLimit { what: format!("{}-cycles in S_{}", r, d), limit: limits.max_cycles });
    }
    if r == 1 {
        let id: Vec<usize> = (0..d).collect();
        visit(&id);
        return Ok(());
    }
    let mut subset: Vec<usize> = (0..r).collect();
    loop {
        let mut rest: Vec<usize> = subset[1..].to_vec();
        permutations(&mut rest, 0, &mut |order| {
            let mut sigma: Vec<usize> = (0..d).collect();
            let mut prev = subset[0];
            for &x in order {
                sigma[prev] = x;
                prev = x;
            }
            sigma[prev] = subset[0];
            visit(&sigma);
        });
        let mut i = r;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if subset[i] < d - r + i {
                subset[i] += 1;
                for j in i + 1..r {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn permutations(xs: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == xs.len() {
        f(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permutations(xs, k + 1, f);
        xs.swap(k, i);
    }
}

/// The multiplicity each enumerated r-cycle carries under a convention.
pub(crate) fn cycle_weight(d: usize, r: usize, conv: OneCycleConvention) -> usize {
    if r == 1 && conv == OneCycleConvention::PerPoint {
        d
    } else {
        1
    }
}

/// The sum of all r-cycles of `S_d` acting diagonally on `V_d^{⊗n}`.
pub fn omega_action_oracle(
    n: usize,
    r: usize,
    d: usize,
    conv: OneCycleConvention,
    limits: &Limits,
) -> Result<EquivariantMatrix> {
    let size = checked_pow(d, n, limits)?;
    let mut entries = Matrix::filled(size, size, Rational::zero());
    let w = rat(cycle_weight(d, r, conv) as i64);
    for_each_r_cycle(d, r, limits, |sigma| {
        for c in 0..size {
            let col = coloring(c, d, n);
            let img: Vec<usize> = col.iter().map(|&x| sigma[x]).collect();
            let r_idx = coloring_index(&img, d);
            let v = entries.get(r_idx, c) + &w;
            entries.set(r_idx, c, v);
        }
    })?;
    Ok(EquivariantMatrix { d, n, m: n, entries })
}

/// The permutation matrix of `σ ∈ S_d` on colorings of length `n`.
pub fn permutation_action(sigma: &[usize], n: usize, limits: &Limits) -> Result<Matrix<Rational>> {
    let d = sigma.len();
    let size = checked_pow(d, n, limits)?;
    let mut out = Matrix::filled(size, size, Rational::zero());
    for c in 0..size {
        let img: Vec<usize> = coloring(c, d, n).iter().map(|&x| sigma[x]).collect();
        out.set(coloring_index(&img, d), c, Rational::one());
    }
    Ok(out)
}
