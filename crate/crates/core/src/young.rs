//! Young diagrams, their `t`-completions, μ-sequences and dimension polynomials.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalars::{lagrange_interpolate, rat, Polynomial, Rational};

/// A weakly decreasing sequence of positive row lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    /// Validates rows; trailing zeros are dropped.
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) || rows.contains(&0) {
            return Err(Error::InvalidYoungDiagram(format!("{:?}", rows)));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Row `i` (0-based), zero beyond the last row.
    pub fn row(&self, i: usize) -> usize {
        self.rows.get(i).copied().unwrap_or(0)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.row(0);
        YoungDiagram { rows: (0..width).map(|j| self.rows.iter().filter(|&&r| r > j).count()).collect() }
    }

    /// Hook lengths, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.rows
            .iter()
            .enumerate()
            .map(|(i, &len)| (0..len).map(|j| (len - j - 1) + (conj.row(j) - i - 1) + 1).collect())
            .collect()
    }

    pub fn hook_product(&self) -> BigInt {
        self.hook_lengths().iter().flatten().fold(BigInt::one(), |acc, &h| acc * BigInt::from(h))
    }

    /// Number of standard tableaux, `|λ|! / Π hooks`.
    pub fn dimension(&self) -> BigInt {
        factorial(self.size()) / self.hook_product()
    }

    /// Whether every row of `other` fits inside this diagram.
    pub fn contains(&self, other: &YoungDiagram) -> bool {
        other.rows.iter().enumerate().all(|(i, &r)| r <= self.row(i))
    }

    /// Rows where a box can be added, in increasing order.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.rows.len()).filter(|&i| i == 0 || self.row(i) < self.row(i - 1)).collect()
    }

    /// Rows whose last box can be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.rows.len()).filter(|&i| self.row(i) > self.row(i + 1)).collect()
    }

    pub fn add_box(&self, i: usize) -> Option<Self> {
        if !self.addable_rows().contains(&i) {
            return None;
        }
        let mut rows = self.rows.clone();
        if i == rows.len() {
            rows.push(1);
        } else {
            rows[i] += 1;
        }
        Some(YoungDiagram { rows })
    }

    pub fn remove_box(&self, i: usize) -> Option<Self> {
        if !self.removable_rows().contains(&i) {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[i] -= 1;
        if rows[i] == 0 {
            rows.pop();
        }
        Some(YoungDiagram { rows })
    }

    /// Dominance comparison of partitions of equal size; `None` when incomparable or sizes differ.
    pub fn dominance(&self, other: &YoungDiagram) -> Option<Ordering> {
        if self.size() != other.size() {
            return None;
        }
        let len = self.rows.len().max(other.rows.len());
        let (mut a, mut b) = (0usize, 0usize);
        let (mut le, mut ge) = (true, true);
        for i in 0..len {
            a += self.row(i);
            b += other.row(i);
            le &= a <= b;
            ge &= a >= b;
        }
        match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }

    /// All partitions of `n`, in reverse lexicographic order starting from `(n)`.
    pub fn all_of_size(n: usize) -> Vec<YoungDiagram> {
        let mut out = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
            if rem == 0 {
                out.push(YoungDiagram { rows: cur.clone() });
                return;
            }
            for r in (1..=rem.min(max)).rev() {
                cur.push(r);
                rec(rem - r, r, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All diagrams with at most `n` boxes, by size.
    pub fn all_up_to(n: usize) -> Vec<YoungDiagram> {
        (0..=n).flat_map(Self::all_of_size).collect()
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "∅");
        }
        let rows: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", rows.join(","))
    }
}

/// Parses comma-separated rows such as `3,2`; the empty string, `0` and `∅` denote `∅`.
impl FromStr for YoungDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() || s == "0" || s == "∅" {
            return Ok(Self::empty());
        }
        let rows = s
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("invalid row '{}'", x))))
            .collect::<Result<Vec<_>>>()?;
        if rows.contains(&0) {
            return Err(Error::InvalidYoungDiagram(s.into()));
        }
        Self::new(rows)
    }
}

/// The completion `λ(t0) = (t0 - |λ|, λ_1, λ_2, …)` and whether it is a Young diagram.
pub fn completion(lambda: &YoungDiagram, t0: &Rational) -> (Vec<Rational>, bool) {
    let first = t0 - rat(lambda.size() as i64);
    let valid = first.is_integer() && first >= rat(lambda.row(0) as i64);
    let mut seq = vec![first];
    seq.extend(lambda.rows.iter().map(|&r| rat(r as i64)));
    (seq, valid)
}

/// The completion as a Young diagram, when valid.
pub fn completion_diagram(lambda: &YoungDiagram, d: usize) -> Option<YoungDiagram> {
    let first = d.checked_sub(lambda.size())?;
    if first < lambda.row(0) {
        return None;
    }
    let mut rows = vec![first];
    rows.extend_from_slice(&lambda.rows);
    YoungDiagram::new(rows).ok()
}

/// `μ_λ(t0) = (t0 - |λ|, λ_1 - 1, λ_2 - 2, …)` stored up to a cutoff `K`; `μ_i = -i` beyond.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuSequence {
    head: Vec<Rational>,
}

impl MuSequence {
    pub fn new(lambda: &YoungDiagram, t0: &Rational) -> Self {
        Self::with_cutoff(lambda, t0, mu_cutoff(lambda, t0))
    }

    pub fn with_cutoff(lambda: &YoungDiagram, t0: &Rational, k: usize) -> Self {
        let mut head = vec![t0 - rat(lambda.size() as i64)];
        for i in 1..=k {
            head.push(rat(lambda.row(i - 1) as i64 - i as i64));
        }
        MuSequence { head }
    }

    /// Largest index stored explicitly.
    pub fn cutoff(&self) -> usize {
        self.head.len() - 1
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.head.get(i) {
            Some(v) => v.clone(),
            None => rat(-(i as i64)),
        }
    }

    /// Entries `μ_0..μ_k`.
    pub fn prefix(&self, k: usize) -> Vec<Rational> {
        (0..=k).map(|i| self.get(i)).collect()
    }
}

/// The cutoff `K = max(rows, |λ|) + max(0, ⌈|t0|⌉) + 1`.
pub fn mu_cutoff(lambda: &YoungDiagram, t0: &Rational) -> usize {
    let ceil = t0.abs().ceil().to_integer().to_usize().unwrap_or(usize::MAX / 4);
    lambda.num_rows().max(lambda.size()) + ceil + 1
}

/// The dimension polynomial: interpolates `d! / Π hooks(λ(d))` at `d = 2|λ| … 3|λ|`.
pub fn p_poly(lambda: &YoungDiagram) -> Polynomial {
    let n = lambda.size();
    let points: Vec<(Rational, Rational)> = (2 * n..=3 * n)
        .map(|d| {
            let full = completion_diagram(lambda, d).expect("completion valid for d ≥ 2|λ|");
            (rat(d as i64), Rational::from_integer(full.dimension()))
        })
        .collect();
    lagrange_interpolate(&points).expect("distinct abscissae")
}

/// The roots `|λ| + λ_i - i` for `1 ≤ i ≤ |λ|`, in decreasing order.
pub fn p_roots(lambda: &YoungDiagram) -> Vec<i64> {
    let n = lambda.size() as i64;
    (1..=n).map(|i| n + lambda.row(i as usize - 1) as i64 - i).collect()
}

/// Number of partitions of `n`.
pub fn partition_count(n: usize) -> usize {
    YoungDiagram::all_of_size(n).len()
}

pub(crate) fn binomial(n: &BigInt, k: usize) -> BigInt {
    if n.is_negative() {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - BigInt::from(i);
        acc = acc.div_floor(&BigInt::from(i + 1));
    }
    acc
}
