//! Blocks of indecomposable objects: the `~_t` relation on Young diagrams.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partalg::Param;
use crate::scalars::{rat, Rational};
use crate::young::{completion_diagram, mu_cutoff, p_poly, MuSequence, YoungDiagram};

/// A block: a single diagram, or the chain `λ^(0) ⊂ λ^(1) ⊂ …` at integer `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockClass {
    pub param: Param,
    pub kind: BlockKind,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BlockKind {
    Trivial(YoungDiagram),
    Nontrivial { minimal: YoungDiagram, d: usize },
}

/// Result of comparing two nontrivial blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockOrder {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// The value of `t` as a nonnegative integer, if it is one.
pub fn as_nonneg_int(t: &Param) -> Option<usize> {
    match t {
        Param::At(q) if q.is_integer() && !q.is_negative() => q.to_integer().to_usize(),
        _ => None,
    }
}

fn mu_prefix(lambda: &YoungDiagram, d: usize, k: usize) -> Vec<Rational> {
    MuSequence::with_cutoff(lambda, &rat(d as i64), k).prefix(k)
}

fn shared_cutoff(a: &YoungDiagram, b: &YoungDiagram, d: usize) -> usize {
    let t0 = rat(d as i64);
    mu_cutoff(a, &t0).max(mu_cutoff(b, &t0))
}

/// Whether `λ ~_t λ'`: the μ-sequences agree up to a permutation of positions.
pub fn equivalent(lambda: &YoungDiagram, lambda2: &YoungDiagram, t: &Param) -> bool {
    let Some(d) = as_nonneg_int(t) else {
        return lambda == lambda2;
    };
    let k = shared_cutoff(lambda, lambda2, d);
    let mut a = mu_prefix(lambda, d, k);
    let mut b = mu_prefix(lambda2, d, k);
    a.sort();
    b.sort();
    a == b
}

/// The block containing `λ`.
pub fn class_of(lambda: &YoungDiagram, t: &Param) -> BlockClass {
    let trivial = || BlockClass { param: t.clone(), kind: BlockKind::Trivial(lambda.clone()) };
    let Some(d) = as_nonneg_int(t) else {
        return trivial();
    };
    let k = mu_cutoff(lambda, &rat(d as i64));
    let mut mu = mu_prefix(lambda, d, k);
    mu.sort_by(|a, b| b.cmp(a));
    if mu.windows(2).any(|w| w[0] == w[1]) {
        return trivial();
    }
    let rows: Vec<usize> = (1..=k)
        .map(|i| (&mu[i] + rat(i as i64)).to_integer().to_usize().expect("sorted μ yields rows"))
        .collect();
    let minimal = YoungDiagram::new(rows).expect("sorted μ yields a Young diagram");
    BlockClass { param: t.clone(), kind: BlockKind::Nontrivial { minimal, d } }
}

impl BlockClass {
    pub fn is_trivial(&self) -> bool {
        matches!(self.kind, BlockKind::Trivial(_))
    }

    /// `(λ^(0), d)` of a nontrivial class.
    pub fn nontrivial(&self) -> Result<(&YoungDiagram, usize)> {
        match &self.kind {
            BlockKind::Nontrivial { minimal, d } => Ok((minimal, *d)),
            BlockKind::Trivial(_) => Err(Error::TrivialClass),
        }
    }

    /// The completion `λ^(0)(d)` of the minimal member.
    pub fn minimal_completion(&self) -> Result<YoungDiagram> {
        let (min, d) = self.nontrivial()?;
        Ok(completion_diagram(min, d).expect("minimal completion is a Young diagram"))
    }

    /// The member `λ^(i)`.
    pub fn member(&self, i: usize) -> Result<YoungDiagram> {
        let (min, d) = self.nontrivial()?;
        let k = mu_cutoff(min, &rat(d as i64)) + i + 1;
        let mu = mu_prefix(min, d, k);
        let rows: Vec<usize> = (1..=k)
            .map(|j| {
                let v = if j <= i { &mu[j - 1] + rat(j as i64) } else { &mu[j] + rat(j as i64) };
                v.to_integer().to_usize().expect("member rows are nonnegative")
            })
            .collect();
        YoungDiagram::new(rows)
    }
}

/// `λ^(0) ⊂ λ^(1) ⊂ … ⊂ λ^(count)`.
pub fn block_members(class: &BlockClass, count: usize) -> Result<Vec<YoungDiagram>> {
    (0..=count).map(|i| class.member(i)).collect()
}

/// Dominance of the minimal completions.
pub fn block_compare(c1: &BlockClass, c2: &BlockClass) -> Result<BlockOrder> {
    let (_, d1) = c1.nontrivial()?;
    let (_, d2) = c2.nontrivial()?;
    if d1 != d2 {
        return Err(Error::ParameterMismatch);
    }
    Ok(match c1.minimal_completion()?.dominance(&c2.minimal_completion()?) {
        Some(Ordering::Less) => BlockOrder::Less,
        Some(Ordering::Greater) => BlockOrder::Greater,
        Some(Ordering::Equal) => BlockOrder::Equal,
        None => BlockOrder::Incomparable,
    })
}

/// Summands of `L(λ) ⊗ L(□)`: add a box, delete a box, delete then add. Sorted.
pub fn tensor_box(lambda: &YoungDiagram) -> Vec<YoungDiagram> {
    let mut out = Vec::new();
    for i in lambda.addable_rows() {
        out.extend(lambda.add_box(i));
    }
    for i in lambda.removable_rows() {
        let smaller = lambda.remove_box(i).expect("removable");
        for j in smaller.addable_rows() {
            out.extend(smaller.add_box(j));
        }
        out.push(smaller);
    }
    out.sort();
    out
}

/// Whether `μ_λ(d) - μ_ν(d)` has exactly one `+1`, one `-1` and zeros elsewhere.
pub fn tensor_box_mu_check(lambda: &YoungDiagram, nu: &YoungDiagram, d: usize) -> bool {
    let k = shared_cutoff(lambda, nu, d);
    let a = mu_prefix(lambda, d, k);
    let b = mu_prefix(nu, d, k);
    let (mut plus, mut minus) = (0, 0);
    for (x, y) in a.iter().zip(&b) {
        let diff = x - y;
        if diff == rat(1) {
            plus += 1;
        } else if diff == rat(-1) {
            minus += 1;
        } else if !diff.is_zero() {
            return false;
        }
    }
    plus == 1 && minus == 1
}

/// `dim Hom(L(λ^(i)), L(λ^(j)))` within a nontrivial block.
pub fn hom_dim_predict(i: usize, j: usize) -> usize {
    match i.abs_diff(j) {
        0 if i > 0 => 2,
        0 | 1 => 1,
        _ => 0,
    }
}

/// Whether the category is semisimple: exactly when `t` is not a nonnegative integer.
pub fn category_semisimple(t: &Param) -> bool {
    as_nonneg_int(t).is_none()
}

/// Checks `P_{λ^(i)}(d) = (-1)^i P_{λ^(0)}(d)` for `i ≤ i_max`.
pub fn dim_sign_check(class: &BlockClass, i_max: usize) -> Result<bool> {
    let (min, d) = class.nontrivial()?;
    let t0 = rat(d as i64);
    let base = p_poly(min).eval(&t0);
    for i in 0..=i_max {
        let v = p_poly(&class.member(i)?).eval(&t0);
        let expect = if i % 2 == 0 { base.clone() } else { -base.clone() };
        if v != expect {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The class whose minimal completion moves one box from the last row longer than 1 to a new row.
pub fn block_partner(class: &BlockClass) -> Result<BlockClass> {
    let (_, d) = class.nontrivial()?;
    let comp = class.minimal_completion()?;
    let Some(i) = comp.rows().iter().rposition(|&r| r > 1) else {
        return Err(Error::MinimalClass);
    };
    let mut rows = comp.rows().to_vec();
    rows[i] -= 1;
    rows.push(1);
    let moved = YoungDiagram::new(rows)?;
    let minimal = YoungDiagram::new(moved.rows()[1..].to_vec())?;
    Ok(class_of(&minimal, &Param::At(rat(d as i64))))
}

/// The classes met by diagrams of size at most `max_size`, with those members, in first-seen order.
pub fn classes_up_to(t: &Param, max_size: usize) -> Vec<(BlockClass, Vec<YoungDiagram>)> {
    let mut order: Vec<BlockKind> = Vec::new();
    let mut groups: BTreeMap<BlockKind, (BlockClass, Vec<YoungDiagram>)> = BTreeMap::new();
    for lambda in YoungDiagram::all_up_to(max_size) {
        let c = class_of(&lambda, t);
        let key = c.kind.clone();
        if !groups.contains_key(&key) {
            order.push(key.clone());
            groups.insert(key.clone(), (c, vec![]));
        }
        groups.get_mut(&key).expect("inserted").1.push(lambda);
    }
    order.into_iter().map(|k| groups.remove(&k).expect("present")).collect()
}
