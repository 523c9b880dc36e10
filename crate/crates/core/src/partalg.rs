//! Linear combinations of diagrams: the Hom spaces `FP_{n,m}` over a scalar ring.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::diagrams::{all_diagrams_with, compose_unchecked, set_partitions, Diagram};
use crate::error::{Error, Result};
use crate::scalars::{
    AtValue, Matrix, PolyRing, Polynomial, Rational, RationalFunction, Ring, ScalarKind, SeriesRing, TruncatedSeries,
};
use crate::Limits;

/// The value of the parameter `t`: an indeterminate or a fixed rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Symbolic,
    At(Rational),
}

/// A finite combination of diagrams `[n] → [m]` with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement<E> {
    n: usize,
    m: usize,
    terms: BTreeMap<Diagram, E>,
}

fn arity_err(expected: (usize, usize), found: (usize, usize)) -> Error {
    Error::ArityMismatch {
        expected: format!("{}→{}", expected.0, expected.1),
        found: format!("{}→{}", found.0, found.1),
    }
}

impl<E: Clone + PartialEq> AlgebraElement<E> {
    pub fn zero(n: usize, m: usize) -> Self {
        AlgebraElement { n, m, terms: BTreeMap::new() }
    }

    pub fn from_diagram<R: Ring<Elem = E>>(ring: &R, d: &Diagram) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(d.clone(), ring.one());
        AlgebraElement { n: d.n(), m: d.m(), terms }
    }

    /// Sums the given terms; zero coefficients are dropped.
    pub fn from_terms<R: Ring<Elem = E>>(
        ring: &R,
        n: usize,
        m: usize,
        terms: impl IntoIterator<Item = (Diagram, E)>,
    ) -> Result<Self> {
        let mut out = Self::zero(n, m);
        for (d, c) in terms {
            if (d.n(), d.m()) != (n, m) {
                return Err(arity_err((n, m), (d.n(), d.m())));
            }
            ring.validate(&c)?;
            out.add_term(ring, d, c);
        }
        Ok(out)
    }

    pub fn identity<R: Ring<Elem = E>>(ring: &R, n: usize) -> Self {
        Self::from_diagram(ring, &Diagram::identity(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &BTreeMap<Diagram, E> {
        &self.terms
    }

    pub fn coeff(&self, d: &Diagram) -> Option<&E> {
        self.terms.get(d)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term<R: Ring<Elem = E>>(&mut self, ring: &R, d: Diagram, c: E) {
        if ring.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(x) => {
                let s = ring.add(x, &c);
                if ring.is_zero(&s) {
                    self.terms.remove(&d);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(d, c);
            }
        }
    }

    fn check_same(&self, o: &Self) -> Result<()> {
        if (self.n, self.m) != (o.n, o.m) {
            return Err(arity_err((self.n, self.m), (o.n, o.m)));
        }
        Ok(())
    }

    pub fn add<R: Ring<Elem = E>>(&self, ring: &R, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        let mut out = self.clone();
        for (d, c) in &o.terms {
            ring.validate(c)?;
            out.add_term(ring, d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub<R: Ring<Elem = E>>(&self, ring: &R, o: &Self) -> Result<Self> {
        self.add(ring, &o.neg(ring))
    }

    pub fn neg<R: Ring<Elem = E>>(&self, ring: &R) -> Self {
        self.map(ring, |c| ring.neg(c))
    }

    pub fn scale<R: Ring<Elem = E>>(&self, ring: &R, c: &E) -> Self {
        self.map(ring, |x| ring.mul(x, c))
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map<R: Ring<Elem = E>>(&self, ring: &R, f: impl Fn(&E) -> E) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(d, c)| {
                let v = f(c);
                (!ring.is_zero(&v)).then(|| (d.clone(), v))
            })
            .collect();
        AlgebraElement { n: self.n, m: self.m, terms }
    }

    /// Changes scalar ring coefficientwise.
    pub fn convert<R2: Ring>(&self, target: &R2, f: impl Fn(&E) -> R2::Elem) -> AlgebraElement<R2::Elem> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(d, c)| {
                let v = f(c);
                (!target.is_zero(&v)).then(|| (d.clone(), v))
            })
            .collect();
        AlgebraElement { n: self.n, m: self.m, terms }
    }

    /// The fallible variant of [`convert`](Self::convert).
    pub fn try_convert<R2: Ring>(
        &self,
        target: &R2,
        f: impl Fn(&E) -> Result<R2::Elem>,
    ) -> Result<AlgebraElement<R2::Elem>> {
        let mut terms = BTreeMap::new();
        for (d, c) in &self.terms {
            let v = f(c)?;
            if !target.is_zero(&v) {
                terms.insert(d.clone(), v);
            }
        }
        Ok(AlgebraElement { n: self.n, m: self.m, terms })
    }

    /// `g ∘ f` for `f = self`.
    pub fn then<R: Ring<Elem = E>>(&self, ring: &R, g: &Self) -> Result<Self> {
        compose(ring, g, self)
    }

    pub fn dual(&self) -> Self {
        AlgebraElement {
            n: self.m,
            m: self.n,
            terms: self.terms.iter().map(|(d, c)| (d.dual(), c.clone())).collect(),
        }
    }
}

impl AlgebraElement<Polynomial> {
    /// Specialises `t` to `t0`.
    pub fn eval(&self, t0: &Rational) -> AlgebraElement<Rational> {
        self.convert(&AtValue::new(t0.clone()), |p| p.eval(t0))
    }
}

impl AlgebraElement<RationalFunction> {
    /// Specialises `t` to `t0`, failing at a pole of any coefficient.
    pub fn eval(&self, t0: &Rational) -> Result<AlgebraElement<Rational>> {
        self.try_convert(&AtValue::new(t0.clone()), |f| f.eval(t0))
    }
}

impl AlgebraElement<Rational> {
    /// Promotes rational coefficients into any ring.
    pub fn lift_into<R: Ring>(&self, ring: &R) -> AlgebraElement<R::Elem> {
        self.convert(ring, |q| ring.from_rational(q))
    }
}

impl AlgebraElement<TruncatedSeries> {
    /// Reduction modulo `u`.
    pub fn constant_part(&self) -> AlgebraElement<Rational> {
        let t0 = self.terms.values().next().map(|s| s.base().clone()).unwrap_or_else(Rational::zero);
        self.convert(&AtValue::new(t0), |s| s.constant_term().clone())
    }
}

/// `g ∘ f`: the bilinear extension of `μ ∘ π = t^ℓ μ·π`.
pub fn compose<R: Ring>(
    ring: &R,
    g: &AlgebraElement<R::Elem>,
    f: &AlgebraElement<R::Elem>,
) -> Result<AlgebraElement<R::Elem>> {
    if g.n != f.m {
        return Err(arity_err((f.m, g.m), (g.n, g.m)));
    }
    for c in g.terms.values().chain(f.terms.values()) {
        ring.validate(c)?;
    }
    let mut weights: Vec<R::Elem> = Vec::new();
    let mut out = AlgebraElement::zero(f.n, g.m);
    for (mu, a) in &g.terms {
        for (pi, b) in &f.terms {
            let (d, l) = compose_unchecked(mu, pi);
            while weights.len() <= l {
                weights.push(ring.param_pow(weights.len()));
            }
            let w = &weights[l];
            if ring.is_zero(w) {
                continue;
            }
            let c = ring.mul(&ring.mul(a, b), w);
            out.add_term(ring, d, c);
        }
    }
    Ok(out)
}

/// Composes a chain `fs[0] ∘ fs[1] ∘ …`, applying the rightmost first.
pub fn compose_all<R: Ring>(ring: &R, fs: &[&AlgebraElement<R::Elem>]) -> Result<AlgebraElement<R::Elem>> {
    let (last, rest) = fs.split_last().expect("nonempty chain");
    let mut acc = (*last).clone();
    for g in rest.iter().rev() {
        acc = compose(ring, g, &acc)?;
    }
    Ok(acc)
}

pub fn tensor<R: Ring>(ring: &R, a: &AlgebraElement<R::Elem>, b: &AlgebraElement<R::Elem>) -> AlgebraElement<R::Elem> {
    let mut out = AlgebraElement::zero(a.n + b.n, a.m + b.m);
    for (d1, c1) in &a.terms {
        for (d2, c2) in &b.terms {
            out.add_term(ring, d1.tensor(d2), ring.mul(c1, c2));
        }
    }
    out
}

/// `tr(π) = t^c` extended linearly.
pub fn trace<R: Ring>(ring: &R, f: &AlgebraElement<R::Elem>) -> Result<R::Elem> {
    if f.n != f.m {
        return Err(arity_err((f.n, f.n), (f.n, f.m)));
    }
    let mut acc = ring.zero();
    for (d, c) in &f.terms {
        let comps = d.trace_components()?;
        acc = ring.add(&acc, &ring.mul(c, &ring.param_pow(comps)));
    }
    Ok(acc)
}

/// Coefficients of `x_π` in the diagram basis, over the rationals.
///
/// `x_π = Σ_{μ ≥ π} m(π, μ) μ` where `m` is the Möbius function of the
/// partition lattice on the parts of `π`: a product of `(-1)^{k-1}(k-1)!` over
/// the blocks of sizes `k` merged to form `μ`.
pub fn x_basis_terms(pi: &Diagram) -> Vec<(Diagram, Rational)> {
    let a = pi.num_parts();
    let mut fact: Vec<Rational> = Vec::with_capacity(a + 1);
    fact.push(Rational::one());
    for k in 1..=a {
        let prev = fact[k - 1].clone();
        fact.push(prev * Rational::from_integer(k.into()));
    }
    set_partitions(a)
        .into_iter()
        .map(|rgs| {
            let mut sizes: Vec<usize> = Vec::new();
            for &b in &rgs {
                let b = b as usize;
                if sizes.len() <= b {
                    sizes.resize(b + 1, 0);
                }
                sizes[b] += 1;
            }
            let mut coeff = Rational::one();
            for k in sizes {
                let v = fact[k - 1].clone();
                coeff *= if k % 2 == 0 { -v } else { v };
            }
            let keys: Vec<u8> = pi.labels().iter().map(|&l| rgs[l as usize]).collect();
            (Diagram::from_labels(pi.n(), pi.m(), &keys), coeff)
        })
        .collect()
}

/// `x_π` as an element over `ring`.
pub fn x_basis<R: Ring>(ring: &R, pi: &Diagram) -> AlgebraElement<R::Elem> {
    let mut out = AlgebraElement::zero(pi.n(), pi.m());
    for (d, c) in x_basis_terms(pi) {
        out.add_term(ring, d, ring.from_rational(&c));
    }
    out
}

/// The permutation diagram `{i, σ(i)'}` as an element.
pub fn from_permutation<R: Ring>(ring: &R, sigma: &[usize]) -> AlgebraElement<R::Elem> {
    AlgebraElement::from_diagram(ring, &Diagram::from_permutation(sigma))
}

/// The idempotent diagram joining the last two strands.
pub fn zeta_diagram(n: usize) -> Result<Diagram> {
    if n < 2 {
        return Err(Error::ArityTooSmall(1));
    }
    let mut keys: Vec<usize> = (0..n).chain(0..n).collect();
    keys[n - 1] = n - 2;
    keys[2 * n - 1] = n - 2;
    Ok(Diagram::from_labels(n, n, &keys))
}

pub fn zeta<R: Ring>(ring: &R, n: usize) -> Result<AlgebraElement<R::Elem>> {
    Ok(AlgebraElement::from_diagram(ring, &zeta_diagram(n)?))
}

/// `ev_n: [2n] → [0]`.
pub fn ev<R: Ring>(ring: &R, n: usize) -> AlgebraElement<R::Elem> {
    AlgebraElement::from_diagram(ring, &Diagram::ev(n))
}

/// `coev_n: [0] → [2n]`.
pub fn coev<R: Ring>(ring: &R, n: usize) -> AlgebraElement<R::Elem> {
    AlgebraElement::from_diagram(ring, &Diagram::coev(n))
}

/// The trace-form Gram matrix of `FP_n(t)` on the canonical diagram basis.
///
/// Entry `(x, y)` is the trace of left multiplication by `x ∘ y`.
pub fn gram_matrix(n: usize, limits: &Limits) -> Result<(Vec<Diagram>, Matrix<Polynomial>)> {
    let basis = all_diagrams_with(n, n, limits)?;
    let mut left_trace: BTreeMap<Diagram, Polynomial> = BTreeMap::new();
    let mut rows = Vec::with_capacity(basis.len());
    for x in &basis {
        let mut row = Vec::with_capacity(basis.len());
        for y in &basis {
            let (p, l1) = compose_unchecked(x, y);
            let tp = left_trace
                .entry(p.clone())
                .or_insert_with(|| {
                    let mut acc = Polynomial::zero();
                    for c in &basis {
                        let (pc, l2) = compose_unchecked(&p, c);
                        if &pc == c {
                            acc = &acc + &PolyRing.param_pow(l2);
                        }
                    }
                    acc
                })
                .clone();
            row.push(&tp * &PolyRing.param_pow(l1));
        }
        rows.push(row);
    }
    Ok((basis, Matrix::from_rows(rows)))
}

/// Whether `tr(h ∘ g)` vanishes for every diagram `g: [m] → [n]`.
pub fn is_negligible(h: &AlgebraElement<Polynomial>, t: &Param) -> Result<bool> {
    let gs = all_diagrams_with(h.m(), h.n(), &Limits::default())?;
    match t {
        Param::Symbolic => negligible_in(&PolyRing, h, &gs),
        Param::At(t0) => negligible_in(&AtValue::new(t0.clone()), &h.eval(t0), &gs),
    }
}

fn negligible_in<R: Ring>(ring: &R, h: &AlgebraElement<R::Elem>, gs: &[Diagram]) -> Result<bool> {
    for g in gs {
        let hg = compose(ring, h, &AlgebraElement::from_diagram(ring, g))?;
        if !ring.is_zero(&trace(ring, &hg)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An element whose scalar kind is only known at run time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyElement {
    Rational { t0: Rational, elem: AlgebraElement<Rational> },
    Polynomial(AlgebraElement<Polynomial>),
    RationalFunction(AlgebraElement<RationalFunction>),
    Series { t0: Rational, order: usize, elem: AlgebraElement<TruncatedSeries> },
}

impl AnyElement {
    pub fn kind(&self) -> ScalarKind {
        match self {
            AnyElement::Rational { .. } => ScalarKind::Rational,
            AnyElement::Polynomial(_) => ScalarKind::Polynomial,
            AnyElement::RationalFunction(_) => ScalarKind::RationalFunction,
            AnyElement::Series { .. } => ScalarKind::Series,
        }
    }

    fn mismatch(&self, o: &Self) -> Error {
        Error::ScalarKindMismatch(self.describe(), o.describe())
    }

    fn describe(&self) -> alloc::string::String {
        match self {
            AnyElement::Rational { t0, .. } => format!("rational at t={}", crate::scalars::fmt_rational(t0)),
            AnyElement::Series { t0, order, .. } => {
                format!("series at t={} mod u^{}", crate::scalars::fmt_rational(t0), order)
            }
            other => other.kind().name().into(),
        }
    }

    /// `self ∘ f`; both operands must share scalar kind, base point and order.
    pub fn compose(&self, f: &AnyElement) -> Result<AnyElement> {
        use AnyElement as A;
        match (self, f) {
            (A::Rational { t0, elem: g }, A::Rational { t0: s0, elem: h }) if t0 == s0 => {
                Ok(A::Rational { t0: t0.clone(), elem: compose(&AtValue::new(t0.clone()), g, h)? })
            }
            (A::Polynomial(g), A::Polynomial(h)) => Ok(A::Polynomial(compose(&PolyRing, g, h)?)),
            (A::RationalFunction(g), A::RationalFunction(h)) => {
                Ok(A::RationalFunction(compose(&crate::scalars::RatFuncField, g, h)?))
            }
            (A::Series { t0, order, elem: g }, A::Series { t0: s0, order: o2, elem: h }) if t0 == s0 && order == o2 => {
                let ring = SeriesRing::new(t0.clone(), *order);
                Ok(A::Series { t0: t0.clone(), order: *order, elem: compose(&ring, g, h)? })
            }
            _ => Err(self.mismatch(f)),
        }
    }
}
