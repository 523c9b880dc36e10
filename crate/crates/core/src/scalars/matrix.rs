use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Polynomial, Rational, TruncatedSeries};
use crate::error::{Error, Result};

/// A dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn filled(rows: usize, cols: usize, v: T) -> Self {
        Matrix { rows, cols, data: vec![v; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Reorders rows and columns: entry `(i, j)` of the result is entry `(p[i], p[j])`.
    pub fn permute(&self, p: &[usize]) -> Self {
        Self::from_fn(p.len(), p.len(), |i, j| self.get(p[i], p[j]).clone())
    }
}

impl Matrix<Rational> {
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix shapes do not chain");
        let mut out = Self::filled(self.rows, o.cols, Rational::zero());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * o.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|a| a * c)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    /// Kronecker product.
    pub fn kron(&self, o: &Self) -> Self {
        Self::from_fn(self.rows * o.rows, self.cols * o.cols, |i, j| {
            self.get(i / o.rows, j / o.cols) * o.get(i % o.rows, j % o.cols)
        })
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }
}

/// Row-reduces in place; returns the pivot columns.
fn row_reduce(m: &mut Matrix<Rational>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..m.cols {
                m.data.swap(p * m.cols + j, r * m.cols + j);
            }
        }
        let inv = m.get(r, c).recip();
        for j in c..m.cols {
            let v = m.get(r, j) * &inv;
            m.set(r, j, v);
        }
        for i in 0..m.rows {
            if i == r || m.get(i, c).is_zero() {
                continue;
            }
            let f = m.get(i, c).clone();
            for j in c..m.cols {
                let rv = m.get(r, j);
                if rv.is_zero() {
                    continue;
                }
                let v = m.get(i, j) - &f * rv;
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_rational(m: &Matrix<Rational>) -> usize {
    let mut a = m.clone();
    row_reduce(&mut a).len()
}

pub fn det_rational(m: &Matrix<Rational>) -> Rational {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    let mut a = m.clone();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            for j in 0..n {
                a.data.swap(p * n + j, c * n + j);
            }
            det = -det;
        }
        let piv = a.get(c, c).clone();
        det *= &piv;
        for i in c + 1..n {
            if a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c) / &piv;
            for j in c..n {
                let v = a.get(i, j) - &f * a.get(c, j);
                a.set(i, j, v);
            }
        }
    }
    det
}

pub fn inverse_rational(m: &Matrix<Rational>) -> Option<Matrix<Rational>> {
    let n = m.rows;
    if n != m.cols {
        return None;
    }
    let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let piv = row_reduce(&mut aug);
    if piv.len() < n || piv[n - 1] >= n {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| aug.get(i, n + j).clone()))
}

/// Outcome of solving `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rational>),
    Many(Vec<Rational>),
    Inconsistent,
}

pub fn solve_rational(a: &Matrix<Rational>, b: &[Rational]) -> Solution {
    assert_eq!(a.rows, b.len());
    let n = a.cols;
    let mut aug = Matrix::from_fn(a.rows, n + 1, |i, j| if j < n { a.get(i, j).clone() } else { b[i].clone() });
    let piv = row_reduce(&mut aug);
    if piv.last() == Some(&n) {
        return Solution::Inconsistent;
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &c) in piv.iter().enumerate() {
        x[c] = aug.get(r, n).clone();
    }
    if piv.len() == n {
        Solution::Unique(x)
    } else {
        Solution::Many(x)
    }
}

/// Fraction-free determinant over `Q[t]`.
pub fn det_bareiss(m: &Matrix<Polynomial>) -> Polynomial {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return Polynomial::one();
    }
    let mut a = m.to_rows();
    let mut sign = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Polynomial::zero();
            };
            a.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = Polynomial::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -&d
    } else {
        d
    }
}

/// Determinant of a polynomial matrix.
pub fn polymatrix_det(m: &Matrix<Polynomial>) -> Polynomial {
    det_bareiss(m)
}

/// Inverts a square matrix of truncated series sharing one base point and order.
pub fn series_matrix_invert(m: &Matrix<TruncatedSeries>) -> Result<Matrix<TruncatedSeries>> {
    let n = m.rows;
    if n != m.cols {
        return Err(Error::ArityMismatch { expected: alloc::format!("{}x{}", n, n), found: alloc::format!("{}x{}", n, m.cols) });
    }
    if n == 0 {
        return Ok(m.clone());
    }
    let first = m.get(0, 0);
    let (base, order) = (first.base().clone(), first.order());
    if m.data.iter().any(|s| s.base() != &base || s.order() != order) {
        return Err(Error::OrderMismatch);
    }
    let layer = |k: usize| Matrix::from_fn(n, n, |i, j| m.get(i, j).coeff(k).clone());
    let inv0 = inverse_rational(&layer(0)).ok_or(Error::NotAUnit)?;
    let layers: Vec<Matrix<Rational>> = (0..order).map(layer).collect();
    let mut out: Vec<Matrix<Rational>> = vec![inv0.clone()];
    for k in 1..order {
        let mut acc = Matrix::filled(n, n, Rational::zero());
        for j in 1..=k {
            acc = acc.add(&layers[j].mul(&out[k - j]));
        }
        out.push(inv0.mul(&acc).scale(&-Rational::one()));
    }
    Ok(Matrix::from_fn(n, n, |i, j| {
        TruncatedSeries::new(base.clone(), order, out.iter().map(|x| x.get(i, j).clone()).collect())
    }))
}
