//! The principal block of `Rep(S_0)`: the morphisms `α_n`, `β_n`, `γ_n` and their relations.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagrams::{all_diagrams_with, Diagram};
use crate::error::{Error, Result};
use crate::idemlift::{antisymmetrizer, permutation_sign, symmetric_group, MAX_SYMMETRIZER};
use crate::partalg::{compose, compose_all, tensor, AlgebraElement};
use crate::scalars::{rat, AtValue, Rational};
use crate::young::factorial;
use crate::Limits;

type Elem = AlgebraElement<Rational>;

/// Outcome of checking the block relations for all `n ≤ n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverReport {
    pub n_max: usize,
    /// `(relation id, holds)`, one entry per relation instance.
    pub relation_results: Vec<(String, bool)>,
    /// `(n, dim End(L_n))` for `1 ≤ n ≤ n_max`.
    pub dim_results: Vec<(usize, usize)>,
}

/// Relations whose literal sign disagrees with the definitions of `α`, `β`, `γ`.
pub const SIGN_SENSITIVE: [&str; 2] = ["beta_alpha_gamma", "alpha_beta_gamma"];

fn base_id(id: &str) -> &str {
    id.split('[').next().unwrap_or(id)
}

impl QuiverReport {
    pub fn all_hold(&self) -> bool {
        self.relation_results.iter().all(|(_, ok)| *ok) && self.dims_hold()
    }

    pub fn dims_hold(&self) -> bool {
        self.dim_results.iter().all(|(_, d)| *d == 2)
    }

    /// Every check except the literal `β_nα_n = γ_n` and `α_{n-1}β_{n-1} = γ_n`.
    pub fn presentation_holds(&self) -> bool {
        self.relation_results.iter().filter(|(id, _)| !SIGN_SENSITIVE.contains(&base_id(id))).all(|(_, ok)| *ok)
            && self.dims_hold()
    }

    pub fn failures(&self) -> Vec<&str> {
        self.relation_results.iter().filter(|(_, ok)| !ok).map(|(id, _)| id.as_str()).collect()
    }
}

/// The morphisms attached to the summand `L_n = S_0^{(1^n)}` of the principal block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMorphisms {
    pub n: usize,
    /// `α_n : [n] → [n+1]`.
    pub alpha: Elem,
    /// `β_n : [n+1] → [n]`.
    pub beta: Elem,
    /// `γ_n : [n] → [n]`, absent for `n = 0`.
    pub gamma: Option<Elem>,
}

fn ring() -> AtValue {
    AtValue::new(Rational::zero())
}

fn check(n: usize) -> Result<()> {
    if n + 1 > MAX_SYMMETRIZER {
        return Err(Error::ResourceLimit { what: "block index n".into(), limit: (MAX_SYMMETRIZER - 1) as u64 });
    }
    Ok(())
}

/// `x^{n+1}_n = id_n ⊗ x^1_0 : [n+1] → [n]`.
pub fn x_down(n: usize) -> Elem {
    let r = ring();
    let cap = Diagram::from_signed_parts(1, 0, &[alloc::vec![1]]).expect("x^1_0");
    tensor(&r, &AlgebraElement::identity(&r, n), &AlgebraElement::from_diagram(&r, &cap))
}

/// `x^n_{n+1} = (x^{n+1}_n)^∨ : [n] → [n+1]`.
pub fn x_up(n: usize) -> Elem {
    x_down(n).dual()
}

/// `s_n`, the sign idempotent of `S_n`.
pub fn s(n: usize) -> Result<Elem> {
    antisymmetrizer(n)
}

fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

fn sign_pow(n: usize) -> Rational {
    if n.is_multiple_of(2) { rat(1) } else { rat(-1) }
}

/// `α_n = (-1)^n (n+1)! s_{n+1} x^n_{n+1} s_n`.
pub fn alpha(n: usize) -> Result<Elem> {
    check(n)?;
    let r = ring();
    let e = compose_all(&r, &[&s(n + 1)?, &x_up(n), &s(n)?])?;
    Ok(e.scale(&r, &(sign_pow(n) * fact(n + 1))))
}

/// `β_n = (1/n!) s_n x^{n+1}_n s_{n+1}`.
pub fn beta(n: usize) -> Result<Elem> {
    check(n)?;
    let r = ring();
    let e = compose_all(&r, &[&s(n)?, &x_down(n), &s(n + 1)?])?;
    Ok(e.scale(&r, &(Rational::one() / fact(n))))
}

/// `γ_n = (-1)^n n s_n x^{n-1}_n x^n_{n-1} s_n` for `n ≥ 1`.
pub fn gamma(n: usize) -> Result<Elem> {
    if n == 0 {
        return Err(Error::ArityTooSmall(1));
    }
    check(n)?;
    let r = ring();
    let e = compose_all(&r, &[&s(n)?, &x_up(n - 1), &x_down(n - 1), &s(n)?])?;
    Ok(e.scale(&r, &(sign_pow(n) * rat(n as i64))))
}

pub fn block_morphisms(n: usize) -> Result<BlockMorphisms> {
    Ok(BlockMorphisms { n, alpha: alpha(n)?, beta: beta(n)?, gamma: if n == 0 { None } else { Some(gamma(n)?) } })
}

fn comp(g: &Elem, f: &Elem) -> Result<Elem> {
    compose(&ring(), g, f)
}

/// Whether `a` and `b` are linearly independent.
fn independent(a: &Elem, b: &Elem) -> bool {
    let rows: Vec<&Elem> = alloc::vec![a, b];
    rank(&rows.iter().map(|e| e.terms().clone()).collect::<Vec<_>>()) == 2
}

/// Rank of a family of sparse vectors over the rationals.
fn rank(vectors: &[BTreeMap<Diagram, Rational>]) -> usize {
    let mut basis: Vec<(Diagram, BTreeMap<Diagram, Rational>)> = Vec::new();
    for v in vectors {
        let mut v = v.clone();
        for (pivot, b) in &basis {
            if let Some(c) = v.get(pivot).cloned() {
                for (d, x) in b {
                    let e = v.entry(d.clone()).or_insert_with(Rational::zero);
                    *e -= &c * x;
                }
                v.retain(|_, x| !x.is_zero());
            }
        }
        if let Some((pivot, lead)) = v.iter().next().map(|(d, x)| (d.clone(), x.clone())) {
            for x in v.values_mut() {
                *x /= &lead;
            }
            for (_, b) in basis.iter_mut() {
                if let Some(c) = b.get(&pivot).cloned() {
                    for (d, x) in &v {
                        let e = b.entry(d.clone()).or_insert_with(Rational::zero);
                        *e -= &c * x;
                    }
                    b.retain(|_, x| !x.is_zero());
                }
            }
            basis.push((pivot, v));
        }
    }
    basis.len()
}

/// `dim End(L_n) = dim s_n FP_n(0) s_n`, spanned by the `s_n π s_n`.
pub fn end_dim(n: usize, limits: &Limits) -> Result<usize> {
    check(n)?;
    let perms: Vec<(Diagram, i64)> =
        symmetric_group(n).into_iter().map(|p| (Diagram::from_permutation(&p), permutation_sign(&p))).collect();
    let mut seen: BTreeSet<Diagram> = BTreeSet::new();
    let mut vectors = Vec::new();
    for pi in all_diagrams_with(n, n, limits)? {
        if seen.contains(&pi) {
            continue;
        }
        // σ π τ only relabels vertices, so no loops arise.
        let mut v: BTreeMap<Diagram, BigInt> = BTreeMap::new();
        for (sigma, ss) in &perms {
            let left = crate::diagrams::compose_star(sigma, &pi)?.0;
            for (tau, st) in &perms {
                let d = crate::diagrams::compose_star(&left, tau)?.0;
                *v.entry(d.clone()).or_insert_with(BigInt::zero) += BigInt::from(ss * st);
                seen.insert(d);
            }
        }
        vectors.push(v.into_iter().filter(|(_, c)| !c.is_zero()).map(|(d, c)| (d, Rational::from_integer(c))).collect());
    }
    Ok(rank(&vectors))
}

/// Checks every relation of the block quiver and the supporting identities for `n ≤ n_max`.
pub fn verify_relations(n_max: usize, limits: &Limits) -> Result<QuiverReport> {
    check(n_max)?;
    let r = ring();
    let mut out: Vec<(String, bool)> = Vec::new();
    let mut push = |id: String, ok: bool| out.push((id, ok));
    let ms: Vec<BlockMorphisms> = (0..=n_max).map(block_morphisms).collect::<Result<_>>()?;

    for n in 0..=n_max {
        push(format!("alpha_nonzero[n={}]", n), !ms[n].alpha.is_zero());
        push(format!("beta_nonzero[n={}]", n), !ms[n].beta.is_zero());
    }
    for n in 1..=n_max {
        let g = ms[n].gamma.as_ref().expect("gamma for n ≥ 1");
        push(format!("gamma_nonzero[n={}]", n), !g.is_zero() && independent(g, &s(n)?));
        push(format!("gamma_squared_zero[n={}]", n), comp(g, g)?.is_zero());
    }
    push("beta0_alpha0_zero".into(), comp(&ms[0].beta, &ms[0].alpha)?.is_zero());
    for n in 1..=n_max {
        let g = ms[n].gamma.as_ref().expect("gamma for n ≥ 1");
        let ba = comp(&ms[n].beta, &ms[n].alpha)?;
        let ab = comp(&ms[n - 1].alpha, &ms[n - 1].beta)?;
        let neg = g.neg(&r);
        push(format!("beta_alpha_gamma[n={}]", n), &ba == g);
        push(format!("alpha_beta_gamma[n={}]", n), &ab == g);
        push(format!("beta_alpha_neg_gamma[n={}]", n), ba == neg);
        push(format!("alpha_beta_neg_gamma[n={}]", n), ab == neg);
        push(format!("beta_alpha_eq_alpha_beta[n={}]", n), ba == ab);
        push(format!("alpha_alpha_zero[n={}]", n), comp(&ms[n].alpha, &ms[n - 1].alpha)?.is_zero());
        push(format!("beta_beta_zero[n={}]", n), comp(&ms[n - 1].beta, &ms[n].beta)?.is_zero());
    }
    for n in 1..=n_max {
        let sn = s(n)?;
        let sn1 = s(n + 1)?;
        let lhs = compose_all(&r, &[&sn, &x_up(n - 1), &x_down(n - 1), &sn])?.scale(&r, &rat(-(n as i64)));
        let rhs = compose_all(&r, &[&x_down(n), &sn1, &x_up(n)])?.scale(&r, &rat(n as i64 + 1));
        push(format!("sandwich_identity[n={}]", n), lhs == rhs);
        let a = compose_all(&r, &[&sn, &x_down(n), &sn1])?;
        push(format!("absorb_identity[n={}]", n), a == comp(&x_down(n), &sn1)?);
        let z = compose_all(&r, &[&x_down(n - 1), &x_down(n), &sn1])?;
        push(format!("double_cap_zero[n={}]", n), z.is_zero());
    }
    let dim_results = (1..=n_max).map(|n| end_dim(n, limits).map(|d| (n, d))).collect::<Result<_>>()?;
    Ok(QuiverReport { n_max, relation_results: out, dim_results })
}
