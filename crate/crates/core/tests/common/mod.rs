//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use partcat_core::diagrams::{all_diagrams, Diagram};
use partcat_core::scalars::{rat, Matrix};
use partcat_core::young::YoungDiagram;
use partcat_core::{Polynomial, Rational};
use rand::Rng;

/// Composition by breadth-first search on the stacked graph: `(μ·π, loops)`.
pub fn compose_bfs(mu: &Diagram, pi: &Diagram) -> (Diagram, usize) {
    let (n, k, m) = (pi.n(), pi.m(), mu.m());
    assert_eq!(mu.n(), k);
    // Vertices: top row 0..n, middle n..n+k, bottom n+k..n+k+m.
    let total = n + k + m;
    let mut adj = vec![Vec::new(); total];
    let mut link = |group: Vec<usize>| {
        for w in group.windows(2) {
            adj[w[0]].push(w[1]);
            adj[w[1]].push(w[0]);
        }
    };
    for part in pi.signed_parts() {
        link(part.iter().map(|&v| if v > 0 { v as usize - 1 } else { n + (-v) as usize - 1 }).collect());
    }
    for part in mu.signed_parts() {
        link(part.iter().map(|&v| if v > 0 { n + v as usize - 1 } else { n + k + (-v) as usize - 1 }).collect());
    }
    let mut comp = vec![usize::MAX; total];
    let mut loops = 0;
    let mut next = 0;
    for s in 0..total {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut queue = VecDeque::from([s]);
        comp[s] = next;
        let mut outer = s < n || s >= n + k;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = next;
                    outer |= w < n || w >= n + k;
                    queue.push_back(w);
                }
            }
        }
        if !outer {
            loops += 1;
        }
        next += 1;
    }
    let keys: Vec<usize> = (0..n).chain(n + k..total).map(|v| comp[v]).collect();
    (Diagram::from_labels(n, m, &keys), loops)
}

/// `x_π = π - Σ_{μ > π} x_μ`, by the defining recursion.
pub fn x_basis_recursive(pi: &Diagram) -> BTreeMap<Diagram, Rational> {
    fn go(pi: &Diagram, memo: &mut BTreeMap<Diagram, BTreeMap<Diagram, Rational>>) -> BTreeMap<Diagram, Rational> {
        if let Some(v) = memo.get(pi) {
            return v.clone();
        }
        let mut acc: BTreeMap<Diagram, Rational> = BTreeMap::new();
        acc.insert(pi.clone(), Rational::one());
        for mu in all_diagrams(pi.n(), pi.m()).unwrap() {
            if mu != *pi && pi.is_refined_by(&mu) {
                for (d, c) in go(&mu, memo) {
                    *acc.entry(d).or_insert_with(Rational::zero) -= c;
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        memo.insert(pi.clone(), acc.clone());
        acc
    }
    go(pi, &mut BTreeMap::new())
}

pub fn bell_oracle(k: usize) -> u128 {
    // Bell triangle.
    let mut row = vec![1u128];
    for _ in 0..k {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// Number of set partitions of `k` elements into at most `d` blocks, from Stirling numbers.
pub fn partitions_at_most(k: usize, d: usize) -> u128 {
    let mut s = vec![vec![0u128; k + 1]; k + 1];
    s[0][0] = 1;
    for i in 1..=k {
        for j in 1..=i {
            s[i][j] = s[i - 1][j - 1] + j as u128 * s[i - 1][j];
        }
    }
    (0..=d.min(k)).map(|j| s[k][j]).sum()
}

pub fn integer_partitions(n: usize) -> usize {
    let mut p = vec![0usize; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for i in part..=n {
            p[i] += p[i - part];
        }
    }
    p[n]
}

/// A uniformly random set partition of `n + m` points as a diagram.
pub fn random_diagram<R: Rng>(rng: &mut R, n: usize, m: usize) -> Diagram {
    let mut keys = Vec::with_capacity(n + m);
    let mut blocks = 0usize;
    for _ in 0..n + m {
        let k = rng.gen_range(0..=blocks);
        if k == blocks {
            blocks += 1;
        }
        keys.push(k);
    }
    Diagram::from_labels(n, m, &keys)
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &Matrix<Polynomial>) -> Polynomial {
    let n = m.rows();
    if n == 0 {
        return Polynomial::one();
    }
    let mut acc = Polynomial::zero();
    for j in 0..n {
        let minor = Matrix::from_fn(n - 1, n - 1, |r, c| m.get(r + 1, if c < j { c } else { c + 1 }).clone());
        let term = m.get(0, j) * &cofactor_det(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// `χ^λ(ρ)` as the coefficient of `x^{λ+δ}` in `Δ(x) Π_i p_{ρ_i}(x)`.
pub fn character_frobenius(lambda: &[usize], rho: &[usize]) -> BigInt {
    let l = lambda.len().max(1);
    let target: Vec<usize> = (0..l).map(|i| lambda.get(i).copied().unwrap_or(0) + l - 1 - i).collect();
    let mut poly: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    // Vandermonde Π_{i<j}(x_i - x_j) as Σ_σ sgn(σ) Π x_i^{σ(i)}.
    for perm in permutations(l) {
        let expo: Vec<usize> = perm.iter().map(|&p| l - 1 - p).collect();
        *poly.entry(expo).or_insert_with(BigInt::zero) += BigInt::from(perm_sign(&perm));
    }
    for &r in rho {
        let mut next: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for (e, c) in &poly {
            for i in 0..l {
                let mut e2 = e.clone();
                e2[i] += r;
                *next.entry(e2).or_insert_with(BigInt::zero) += c;
            }
        }
        poly = next;
    }
    poly.get(&target).cloned().unwrap_or_else(BigInt::zero)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn perm_sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

/// `ξ` on `S_d` from characters: `#r-cycles · χ(r-cycle)/χ(1)`; `d` for `r = 1`.
pub fn xi_from_characters(lambda_d: &YoungDiagram, r: usize) -> Rational {
    let d = lambda_d.size();
    if r == 1 {
        return rat(d as i64);
    }
    if r > d {
        return Rational::zero();
    }
    let rows = lambda_d.rows();
    let mut rho = vec![r];
    rho.extend(std::iter::repeat_n(1, d - r));
    let chi = character_frobenius(rows, &rho);
    let dim = character_frobenius(rows, &vec![1; d]);
    let cycles = factorial(d) / (factorial(d - r) * BigInt::from(r));
    Rational::new(cycles * chi, dim)
}

/// Dimension of `S^λ` by the hook length formula, computed from the diagram.
pub fn hook_dimension(rows: &[usize]) -> BigInt {
    let n: usize = rows.iter().sum();
    let mut prod = BigInt::one();
    for (i, &r) in rows.iter().enumerate() {
        for j in 0..r {
            let arm = r - j - 1;
            let leg = rows[i + 1..].iter().filter(|&&x| x > j).count();
            prod *= arm + leg + 1;
        }
    }
    factorial(n) / prod
}

/// `(rows of λ(d))` if it is a Young diagram.
pub fn complete(lambda: &YoungDiagram, d: usize) -> Option<Vec<usize>> {
    let first = d.checked_sub(lambda.size())?;
    if lambda.num_rows() > 0 && first < lambda.row(0) {
        return None;
    }
    let mut rows = vec![first];
    rows.extend_from_slice(lambda.rows());
    rows.retain(|&r| r > 0);
    Some(rows)
}

pub fn yd(s: &str) -> YoungDiagram {
    s.parse().unwrap()
}

pub fn is_nonneg_integer(q: &Rational) -> bool {
    q.is_integer() && !q.is_negative()
}

/// `x_π` for every `π ∈ P_{n,m}` by the recursion, coarsest diagrams first.
pub fn x_basis_table(n: usize, m: usize) -> BTreeMap<Diagram, BTreeMap<Diagram, Rational>> {
    let mut ds = all_diagrams(n, m).unwrap();
    ds.sort_by_key(|d| d.num_parts());
    let mut table: BTreeMap<Diagram, BTreeMap<Diagram, Rational>> = BTreeMap::new();
    for pi in &ds {
        let mut acc: BTreeMap<Diagram, Rational> = BTreeMap::new();
        acc.insert(pi.clone(), Rational::one());
        for (mu, x_mu) in &table {
            if mu != pi && pi.is_refined_by(mu) {
                for (d, c) in x_mu {
                    *acc.entry(d.clone()).or_insert_with(Rational::zero) -= c;
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        table.insert(pi.clone(), acc);
    }
    table
}

/// Sum of all r-cycles of `S_d` acting on colorings of length `n`, most significant digit first.
pub fn r_cycle_sum_action(n: usize, r: usize, d: usize) -> Matrix<Rational> {
    let size = d.pow(n as u32);
    let mut out = Matrix::filled(size, size, Rational::zero());
    if r == 1 {
        for i in 0..size {
            out.set(i, i, rat(d as i64));
        }
        return out;
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    fn extend(cur: &mut Vec<usize>, r: usize, d: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for x in cur[0] + 1..d {
            if !cur.contains(&x) {
                cur.push(x);
                extend(cur, r, d, out);
                cur.pop();
            }
        }
    }
    for first in 0..d {
        extend(&mut vec![first], r, d, &mut cycles);
    }
    for cyc in cycles {
        let mut sigma: Vec<usize> = (0..d).collect();
        for w in 0..r {
            sigma[cyc[w]] = cyc[(w + 1) % r];
        }
        for c in 0..size {
            let mut digits = vec![0; n];
            let mut x = c;
            for j in (0..n).rev() {
                digits[j] = x % d;
                x /= d;
            }
            let img = digits.iter().fold(0, |acc, &x| acc * d + sigma[x]);
            let v = out.get(img, c) + Rational::one();
            out.set(img, c, v);
        }
    }
    out
}
