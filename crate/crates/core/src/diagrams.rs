//! Partition diagrams: set partitions of `{1..n} ∪ {1'..m'}` viewed as morphisms `[n] → [m]`.
//!
//! Vertex `j` (unprimed, 1-based) has flat index `j - 1`; vertex `j'` has flat
//! index `n + j - 1`. A diagram stores, for each flat index, the number of its
//! part, with parts numbered in order of their least vertex. That labelling is
//! unique, so equal diagrams have identical storage.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::Limits;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Diagram {
    n: usize,
    m: usize,
    labels: Vec<u8>,
}

/// Part counts of a square diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagramStats {
    /// Number of parts.
    pub a: usize,
    /// Parts containing both `j` and `j'` for some `j`.
    pub b: usize,
    /// Components after joining each `j` to `j'`.
    pub c: usize,
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Relabels arbitrary part keys into first-occurrence order.
fn canonical_labels<K: PartialEq + Copy>(keys: &[K]) -> Vec<u8> {
    let mut seen: Vec<K> = Vec::new();
    keys.iter()
        .map(|k| match seen.iter().position(|s| s == k) {
            Some(i) => i as u8,
            None => {
                seen.push(*k);
                (seen.len() - 1) as u8
            }
        })
        .collect()
}

/// Bell number `B(k)`.
pub fn bell(k: usize) -> u128 {
    let mut row: Vec<u128> = vec![1];
    for _ in 0..k {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().expect("nonempty row"));
        for x in &row {
            let v = next.last().expect("nonempty") + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// All restricted growth strings of length `len`, in lexicographic order.
pub(crate) fn set_partitions(len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if len == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut cur = vec![0u8; len];
    let mut maxes = vec![0u8; len];
    loop {
        out.push(cur.clone());
        let mut i = len - 1;
        loop {
            if i == 0 {
                return out;
            }
            if cur[i] <= maxes[i - 1] {
                cur[i] += 1;
                maxes[i] = maxes[i - 1].max(cur[i]);
                for j in i + 1..len {
                    cur[j] = 0;
                    maxes[j] = maxes[i];
                }
                break;
            }
            i -= 1;
        }
    }
}

impl Diagram {
    /// Builds a diagram from any labelling of the flat vertices by part keys.
    pub fn from_labels<K: PartialEq + Copy>(n: usize, m: usize, keys: &[K]) -> Self {
        assert_eq!(keys.len(), n + m, "label vector length");
        assert!(n + m <= 255, "diagram too large");
        Diagram { n, m, labels: canonical_labels(keys) }
    }

    /// Builds a diagram from parts given as signed vertices: `j` for `j`, `-j` for `j'`.
    pub fn from_signed_parts(n: usize, m: usize, parts: &[Vec<i64>]) -> Result<Self> {
        let mut keys: Vec<Option<usize>> = vec![None; n + m];
        for (p, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::Parse("empty part".into()));
            }
            for &v in part {
                let idx = match v {
                    v if v > 0 && (v as usize) <= n => v as usize - 1,
                    v if v < 0 && (v.unsigned_abs() as usize) <= m => n + v.unsigned_abs() as usize - 1,
                    _ => return Err(Error::Parse(format!("vertex {} outside P_{{{},{}}}", v, n, m))),
                };
                if keys[idx].replace(p).is_some() {
                    return Err(Error::Parse(format!("vertex {} appears twice", v)));
                }
            }
        }
        if keys.iter().any(|k| k.is_none()) {
            return Err(Error::Parse("parts do not cover all vertices".into()));
        }
        if n + m > 255 {
            return Err(Error::ResourceLimit { what: "diagram vertices".into(), limit: 255 });
        }
        Ok(Self::from_labels(n, m, &keys))
    }

    /// The empty partition in `P_{0,0}`.
    pub fn empty() -> Self {
        Diagram { n: 0, m: 0, labels: Vec::new() }
    }

    /// `id_n`, with parts `{j, j'}`.
    pub fn identity(n: usize) -> Self {
        let keys: Vec<usize> = (0..n).chain(0..n).collect();
        Self::from_labels(n, n, &keys)
    }

    /// The diagram `{i, σ(i)'}` of a permutation given as 0-based images.
    pub fn from_permutation(sigma: &[usize]) -> Self {
        let n = sigma.len();
        let mut keys = vec![0usize; 2 * n];
        for (i, &s) in sigma.iter().enumerate() {
            keys[i] = i;
            keys[n + s] = i;
        }
        Self::from_labels(n, n, &keys)
    }

    /// The permutation a diagram represents, if every part is a pair `{i, j'}`.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        if self.n != self.m {
            return None;
        }
        let parts = self.parts();
        let mut sigma = vec![0; self.n];
        if parts.len() != self.n {
            return None;
        }
        for p in parts {
            if p.len() != 2 || p[0] >= self.n || p[1] < self.n {
                return None;
            }
            sigma[p[0]] = p[1] - self.n;
        }
        Some(sigma)
    }

    /// `ev_n ∈ P_{2n,0}` with parts `{j, n+j}`.
    pub fn ev(n: usize) -> Self {
        let keys: Vec<usize> = (0..n).chain(0..n).collect();
        Self::from_labels(2 * n, 0, &keys)
    }

    /// `coev_n ∈ P_{0,2n}` with parts `{j', (n+j)'}`.
    pub fn coev(n: usize) -> Self {
        Self::ev(n).dual()
    }

    /// The diagram with every vertex in its own part.
    pub fn singletons(n: usize, m: usize) -> Self {
        let keys: Vec<usize> = (0..n + m).collect();
        Self::from_labels(n, m, &keys)
    }

    /// The one-part diagram.
    pub fn one_part(n: usize, m: usize) -> Self {
        Self::from_labels(n, m, &vec![0u8; n + m])
    }

    /// Bottom arity (source).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Top arity (target).
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn num_parts(&self) -> usize {
        self.labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    /// Parts as sorted flat vertex indices, ordered by least vertex.
    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.num_parts()];
        for (v, &l) in self.labels.iter().enumerate() {
            parts[l as usize].push(v);
        }
        parts
    }

    /// Parts in signed 1-based notation: `j` for `j`, `-j` for `j'`.
    pub fn signed_parts(&self) -> Vec<Vec<i64>> {
        self.parts()
            .into_iter()
            .map(|p| p.into_iter().map(|v| self.signed_vertex(v)).collect())
            .collect()
    }

    fn signed_vertex(&self, v: usize) -> i64 {
        if v < self.n {
            v as i64 + 1
        } else {
            -((v - self.n) as i64 + 1)
        }
    }

    /// Returns a copy with canonical labels; a no-op for well-formed diagrams.
    pub fn canonicalize(&self) -> Self {
        Self::from_labels(self.n, self.m, &self.labels)
    }

    pub fn dual(&self) -> Self {
        let (n, m) = (self.n, self.m);
        let mut keys = vec![0u8; n + m];
        keys[..m].copy_from_slice(&self.labels[n..n + m]);
        keys[m..].copy_from_slice(&self.labels[..n]);
        Self::from_labels(m, n, &keys)
    }

    /// Horizontal juxtaposition `self ⊗ other`.
    pub fn tensor(&self, other: &Diagram) -> Self {
        let (n1, m1, n2, m2) = (self.n, self.m, other.n, other.m);
        let off = self.num_parts();
        let mut keys = Vec::with_capacity(n1 + n2 + m1 + m2);
        keys.extend(self.labels[..n1].iter().map(|&l| l as usize));
        keys.extend(other.labels[..n2].iter().map(|&l| l as usize + off));
        keys.extend(self.labels[n1..].iter().map(|&l| l as usize));
        keys.extend(other.labels[n2..].iter().map(|&l| l as usize + off));
        Self::from_labels(n1 + n2, m1 + m2, &keys)
    }

    /// Every diagram obtained by merging parts, including `self`.
    pub fn coarsenings(&self) -> Vec<Diagram> {
        set_partitions(self.num_parts())
            .into_iter()
            .map(|rgs| {
                let keys: Vec<u8> = self.labels.iter().map(|&l| rgs[l as usize]).collect();
                Self::from_labels(self.n, self.m, &keys)
            })
            .collect()
    }

    /// Whether `other` is obtained from `self` by merging parts.
    pub fn is_refined_by(&self, other: &Diagram) -> bool {
        if (self.n, self.m) != (other.n, other.m) {
            return false;
        }
        let mut image: Vec<Option<u8>> = vec![None; self.num_parts()];
        for (&a, &b) in self.labels.iter().zip(&other.labels) {
            match image[a as usize] {
                None => image[a as usize] = Some(b),
                Some(x) if x != b => return false,
                _ => {}
            }
        }
        true
    }

    pub fn stats(&self) -> Result<DiagramStats> {
        if self.n != self.m {
            return Err(Error::ArityMismatch { expected: format!("{}→{}", self.n, self.n), found: format!("{}→{}", self.n, self.m) });
        }
        let a = self.num_parts();
        let n = self.n;
        let mut has_pair = vec![false; a];
        let mut uf = UnionFind::new(a);
        for j in 0..n {
            let (x, y) = (self.labels[j] as usize, self.labels[n + j] as usize);
            if x == y {
                has_pair[x] = true;
            }
            uf.union(x, y);
        }
        let b = has_pair.iter().filter(|&&h| h).count();
        let c = (0..a).filter(|&p| uf.find(p) == p).count();
        Ok(DiagramStats { a, b, c })
    }

    /// Number of components of the trace closure.
    pub fn trace_components(&self) -> Result<usize> {
        Ok(self.stats()?.c)
    }
}

/// Enumerates `P_{n,m}` in canonical order.
pub fn all_diagrams(n: usize, m: usize) -> Result<Vec<Diagram>> {
    all_diagrams_with(n, m, &Limits::default())
}

pub fn all_diagrams_with(n: usize, m: usize, limits: &Limits) -> Result<Vec<Diagram>> {
    if n + m > limits.max_arity {
        return Err(Error::ResourceLimit { what: format!("all_diagrams({}, {})", n, m), limit: limits.max_arity as u64 });
    }
    Ok(set_partitions(n + m).into_iter().map(|labels| Diagram { n, m, labels }).collect())
}

/// `(μ·π, ℓ(μ, π))` for `π: [n] → [m]` and `μ: [m] → [l]`.
pub fn compose_star(mu: &Diagram, pi: &Diagram) -> Result<(Diagram, usize)> {
    if mu.n != pi.m {
        return Err(Error::ArityMismatch { expected: format!("{}", pi.m), found: format!("{}", mu.n) });
    }
    Ok(compose_unchecked(mu, pi))
}

pub(crate) fn compose_unchecked(mu: &Diagram, pi: &Diagram) -> (Diagram, usize) {
    let (n, m, l) = (pi.n, pi.m, mu.m);
    let total = n + m + l;
    let mut uf = UnionFind::new(total);
    let mut first = [usize::MAX; 256];
    for (v, &lab) in pi.labels.iter().enumerate() {
        let f = &mut first[lab as usize];
        if *f == usize::MAX {
            *f = v;
        } else {
            uf.union(*f, v);
        }
    }
    let mut first = [usize::MAX; 256];
    for (v, &lab) in mu.labels.iter().enumerate() {
        let f = &mut first[lab as usize];
        if *f == usize::MAX {
            *f = n + v;
        } else {
            uf.union(*f, n + v);
        }
    }
    let mut keys = Vec::with_capacity(n + l);
    for v in (0..n).chain(n + m..total) {
        keys.push(uf.find(v));
    }
    let mut loops: Vec<usize> = Vec::new();
    for v in n..n + m {
        let r = uf.find(v);
        if !keys.contains(&r) && !loops.contains(&r) {
            loops.push(r);
        }
    }
    (Diagram::from_labels(n, l, &keys), loops.len())
}

pub fn tensor_diagram(pi: &Diagram, mu: &Diagram) -> Diagram {
    pi.tensor(mu)
}

pub fn dual_diagram(pi: &Diagram) -> Diagram {
    pi.dual()
}

pub fn coarsenings(pi: &Diagram) -> Vec<Diagram> {
    pi.coarsenings()
}

pub fn stats(pi: &Diagram) -> Result<DiagramStats> {
    pi.stats()
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.labels.is_empty() {
            return write!(f, "∅");
        }
        for part in self.parts() {
            let items: Vec<String> = part
                .iter()
                .map(|&v| if v < self.n { (v + 1).to_string() } else { format!("{}'", v - self.n + 1) })
                .collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        Ok(())
    }
}

/// Parses brace lists such as `{1,3,2',3'}{2,4}{1'}`; the arities are the largest indices present.
impl FromStr for Diagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        let n = parts.iter().flatten().filter(|&&v| v > 0).max().copied().unwrap_or(0) as usize;
        let m = parts.iter().flatten().filter(|&&v| v < 0).map(|v| -v).max().unwrap_or(0) as usize;
        Diagram::from_signed_parts(n, m, &parts)
    }
}

/// Parses the brace syntax against explicit arities.
pub fn parse_diagram(s: &str, n: usize, m: usize) -> Result<Diagram> {
    Diagram::from_signed_parts(n, m, &parse_parts(s)?)
}

fn parse_parts(s: &str) -> Result<Vec<Vec<i64>>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() || s == "∅" || s == "{}" {
        return Ok(Vec::new());
    }
    let bad = |msg: &str| Error::Parse(format!("{} in diagram '{}'", msg, s));
    let mut parts = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let body = rest.strip_prefix('{').ok_or_else(|| bad("expected '{'"))?;
        let close = body.find('}').ok_or_else(|| bad("unclosed '{'"))?;
        let mut part = Vec::new();
        for item in body[..close].split(',') {
            let (digits, primed) = match item.strip_suffix('\'') {
                Some(d) => (d, true),
                None => (item, false),
            };
            let j: i64 = digits.parse().map_err(|_| bad("bad vertex"))?;
            if j <= 0 {
                return Err(bad("vertices are 1-based"));
            }
            part.push(if primed { -j } else { j });
        }
        parts.push(part);
        rest = &body[close + 1..];
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_diagrams(0, 0).unwrap(), vec![Diagram::empty()]);
        assert_eq!(all_diagrams(1, 1).unwrap().len(), 2);
        assert_eq!(all_diagrams(2, 2).unwrap().len(), 15);
        assert_eq!(bell(6), 203);
        assert!(matches!(all_diagrams(7, 6), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn text_round_trip() {
        let p = d("{1,3,2',3'}{2,4}{1'}");
        assert_eq!((p.n(), p.m()), (4, 3));
        assert_eq!(p.to_string(), "{1,3,2',3'}{2,4}{1'}");
        assert_eq!(d("{2',1}{4,2}{3',3}{1'}").to_string(), "{1,2'}{2,4}{3,3'}{1'}");
        assert_eq!(d("∅"), Diagram::empty());
        assert!("{1,1}".parse::<Diagram>().is_err());
        assert!(parse_diagram("{1}", 2, 0).is_err());
    }

    #[test]
    fn composition_examples() {
        let id = Diagram::identity(2);
        assert_eq!(compose_star(&id, &id).unwrap(), (id.clone(), 0));
        let pi = d("{1}{1'}");
        assert_eq!(compose_star(&pi, &pi).unwrap(), (pi.clone(), 1));
        let (e, l) = compose_star(&Diagram::ev(1), &Diagram::coev(1)).unwrap();
        assert_eq!((e, l), (Diagram::empty(), 1));
        assert!(matches!(compose_star(&Diagram::identity(1), &id), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn tensor_and_dual() {
        let pi = d("{1,1'}");
        assert_eq!(pi.tensor(&Diagram::empty()), pi);
        assert_eq!(Diagram::identity(1).tensor(&Diagram::identity(1)), Diagram::identity(2));
        assert_eq!(pi.tensor(&d("{1}{1'}")).to_string(), "{1,1'}{2}{2'}");
        assert_eq!(Diagram::identity(3).dual(), Diagram::identity(3));
        assert_eq!(Diagram::ev(2).dual(), Diagram::coev(2));
        assert_eq!(Diagram::coev(1).to_string(), "{1',2'}");
    }

    #[test]
    fn coarsening_examples() {
        assert_eq!(Diagram::one_part(2, 1).coarsenings(), vec![Diagram::one_part(2, 1)]);
        let c = d("{1}{1'}").coarsenings();
        assert_eq!(c.len(), 2);
        assert!(c.contains(&Diagram::identity(1)));
        assert_eq!(Diagram::singletons(2, 2).coarsenings().len(), 15);
    }

    #[test]
    fn stats_examples() {
        let s = Diagram::identity(3).stats().unwrap();
        assert_eq!((s.a, s.b, s.c), (3, 3, 3));
        let s = d("{1}{1'}").stats().unwrap();
        assert_eq!((s.a, s.b, s.c), (2, 0, 1));
        assert!(d("{1}").stats().is_err());
    }

    #[test]
    fn permutations() {
        let t = Diagram::from_permutation(&[1, 0]);
        assert_eq!(t.to_string(), "{1,2'}{2,1'}");
        assert_eq!(t.as_permutation(), Some(vec![1, 0]));
        assert_eq!(Diagram::from_permutation(&[0, 1, 2]), Diagram::identity(3));
        assert_eq!(d("{1}{1'}").as_permutation(), None);
    }

    #[test]
    fn refinement() {
        let pi = d("{1}{1'}");
        assert!(pi.is_refined_by(&Diagram::identity(1)));
        assert!(!Diagram::identity(1).is_refined_by(&pi));
    }
}
