//! JSON documents and string encodings for scalars, diagrams and elements.

use std::collections::BTreeMap;

use partcat_core::blocks::{BlockClass, BlockKind};
use partcat_core::diagrams::Diagram;
use partcat_core::idemlift::LiftDecomposition;
use partcat_core::partalg::{AlgebraElement, AnyElement, Param};
use partcat_core::quiver0::QuiverReport;
use partcat_core::scalars::{
    fmt_rational, parse_rational, Matrix, PolyRing, RatFuncField, Ring, ScalarKind, SeriesRing,
};
use partcat_core::young::YoungDiagram;
use partcat_core::{Error, Polynomial, Rational, RationalFunction, Result, TruncatedSeries};
use serde::{Deserialize, Serialize};

/// Ascending coefficients as `[numerator, denominator]` string pairs.
pub type PolynomialJson = Vec<[String; 2]>;

/// Parts as signed vertices: `j` for `j`, `-j` for `j'`.
pub type DiagramJson = Vec<Vec<i64>>;

/// Row lengths.
pub type YoungJson = Vec<usize>;

pub fn poly_to_json(p: &Polynomial) -> PolynomialJson {
    p.coeffs().iter().map(|c| [c.numer().to_string(), c.denom().to_string()]).collect()
}

pub fn poly_from_json(j: &PolynomialJson) -> Result<Polynomial> {
    let coeffs = j.iter().map(|[a, b]| parse_rational(&format!("{}/{}", a, b))).collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::from_coeffs(coeffs))
}

pub fn diagram_to_json(d: &Diagram) -> DiagramJson {
    d.signed_parts()
}

pub fn diagram_from_json(j: &DiagramJson) -> Result<Diagram> {
    let n = j.iter().flatten().filter(|v| **v > 0).count();
    let m = j.iter().flatten().filter(|v| **v < 0).count();
    Diagram::from_signed_parts(n, m, j)
}

pub fn young_to_json(y: &YoungDiagram) -> YoungJson {
    y.rows().to_vec()
}

pub fn matrix_to_json(m: &Matrix<Rational>) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(fmt_rational).collect()).collect()
}

pub fn matrix_from_json(rows: &[Vec<String>]) -> Result<Matrix<Rational>> {
    let rows = rows.iter().map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
    if rows.windows(2).any(|w| w[0].len() != w[1].len()) {
        return Err(Error::Parse("ragged matrix".into()));
    }
    Ok(Matrix::from_rows(rows))
}

fn split_top_level(s: &str) -> Vec<String> {
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for (i, ch) in s.chars().enumerate() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 && !cur.trim().is_empty() && !cur.trim_end().ends_with('^') => {
                terms.push(cur.trim().to_string());
                cur.clear();
            }
            _ => {}
        }
        if ch != '+' || depth != 0 {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() {
        terms.push(cur.trim().to_string());
    }
    terms
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    if s.starts_with('(') && s.ends_with(')') {
        let inner = &s[1..s.len() - 1];
        let mut depth = 0i32;
        for ch in inner.chars() {
            match ch {
                '(' => depth += 1,
                ')' if depth == 0 => return s,
                ')' => depth -= 1,
                _ => {}
            }
        }
        return inner;
    }
    s
}

/// Splits at `·` or `*` outside parentheses.
fn split_factors(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '·' | '*' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// A single term `c`, `c·t^k`, `(p/q)t^k` or `t^k`.
fn parse_monomial(body: &str, var: char, bad: &dyn Fn() -> Error) -> Result<Polynomial> {
    let (coef, power) = match body.rfind(var).filter(|&i| !body[i..].contains(')')) {
        Some(i) => {
            let exp = &body[i + var.len_utf8()..];
            let k = if exp.is_empty() { 1 } else { exp.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())? };
            let c = strip_parens(body[..i].trim_end_matches(['*', '·']));
            (if c.is_empty() { Rational::from_integer(1.into()) } else { parse_rational(c)? }, k)
        }
        None => (parse_rational(strip_parens(body))?, 0),
    };
    Ok(Polynomial::monomial(coef, power))
}

/// A factor `(…)`, `(…)^k` or a monomial.
fn parse_factor(f: &str, var: char, bad: &dyn Fn() -> Error) -> Result<Polynomial> {
    if f.starts_with('(') {
        let mut depth = 0i32;
        let close = f
            .char_indices()
            .find(|&(_, ch)| {
                match ch {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    _ => {}
                }
                depth == 0
            })
            .map(|(i, _)| i)
            .ok_or_else(bad)?;
        let rest = &f[close + 1..];
        if rest.is_empty() || rest.starts_with('^') {
            let k: usize = if rest.is_empty() { 1 } else { rest[1..].parse().map_err(|_| bad())? };
            return Ok(parse_sum(&f[1..close], var, bad)?.pow(k));
        }
    }
    parse_monomial(f, var, bad)
}

fn parse_sum(s: &str, var: char, bad: &dyn Fn() -> Error) -> Result<Polynomial> {
    let terms = split_top_level(s);
    if terms.is_empty() {
        return Err(bad());
    }
    let mut acc = Polynomial::zero();
    for term in terms {
        let compact: String = term.chars().filter(|c| !c.is_whitespace()).collect();
        let (neg, body) = match compact.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, compact),
        };
        let factors = split_factors(&body);
        let value = if factors.len() == 1 {
            parse_factor(&body, var, bad)?
        } else {
            factors.iter().try_fold(Polynomial::one(), |p, f| Ok::<_, Error>(&p * &parse_factor(f, var, bad)?))?
        };
        acc = if neg { &acc - &value } else { &acc + &value };
    }
    Ok(acc)
}

/// Parses a polynomial in `var` as written by `Display` or in factored form,
/// e.g. `t^2 - 3t + 1`, `-(1/2)t` or `(1/24)·t·(t-1)^2`.
pub fn parse_poly_in(s: &str, var: char) -> Result<Polynomial> {
    let bad = || Error::Parse(format!("invalid polynomial '{}'", s));
    parse_sum(s, var, &bad)
}

pub fn parse_poly(s: &str) -> Result<Polynomial> {
    parse_poly_in(s, 't')
}

/// Parses `num/den` as written by `Display`; a bare polynomial is accepted.
pub fn parse_ratfunc(s: &str) -> Result<RationalFunction> {
    let mut depth = 0i32;
    let mut split = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => split = Some(i),
            _ => {}
        }
    }
    match split {
        Some(i) if s[..i].contains('t') || s[i + 1..].contains('t') => {
            RationalFunction::new(parse_poly(strip_parens(&s[..i]))?, parse_poly(strip_parens(&s[i + 1..]))?)
        }
        _ => Ok(RationalFunction::from_poly(parse_poly(s)?)),
    }
}

/// Parses a series written as by `Display`, e.g. `1 + (2)u + O(u^3)`.
pub fn parse_series(s: &str, base: &Rational, order: usize) -> Result<TruncatedSeries> {
    let body = match s.rfind("O(") {
        Some(i) => s[..i].trim().trim_end_matches('+').trim(),
        None => s.trim(),
    };
    let p = parse_poly_in(body, 'u')?;
    if p.degree().unwrap_or(0) >= order && !p.is_zero() {
        return Err(Error::Parse(format!("series '{}' exceeds order {}", s, order)));
    }
    Ok(TruncatedSeries::new(base.clone(), order, p.coeffs().to_vec()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub diagram: DiagramJson,
    pub scalar: String,
}

/// `{n, m, kind, t0?, order?, terms}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub n: usize,
    pub m: usize,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t0: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub terms: Vec<TermJson>,
}

fn terms_json<E: Clone + PartialEq>(e: &AlgebraElement<E>, f: impl Fn(&E) -> String) -> Vec<TermJson> {
    e.terms().iter().map(|(d, c)| TermJson { diagram: diagram_to_json(d), scalar: f(c) }).collect()
}

pub fn element_to_json(e: &AnyElement) -> ElementJson {
    let kind = e.kind().name().to_string();
    match e {
        AnyElement::Rational { t0, elem } => ElementJson {
            n: elem.n(),
            m: elem.m(),
            kind,
            t0: Some(fmt_rational(t0)),
            order: None,
            terms: terms_json(elem, fmt_rational),
        },
        AnyElement::Polynomial(elem) => {
            ElementJson { n: elem.n(), m: elem.m(), kind, t0: None, order: None, terms: terms_json(elem, |p| p.to_string()) }
        }
        AnyElement::RationalFunction(elem) => {
            ElementJson { n: elem.n(), m: elem.m(), kind, t0: None, order: None, terms: terms_json(elem, |p| p.to_string()) }
        }
        AnyElement::Series { t0, order, elem } => ElementJson {
            n: elem.n(),
            m: elem.m(),
            kind,
            t0: Some(fmt_rational(t0)),
            order: Some(*order),
            terms: terms_json(elem, |s| s.to_string()),
        },
    }
}

fn element_terms<R: Ring>(
    ring: &R,
    j: &ElementJson,
    parse: impl Fn(&str) -> Result<R::Elem>,
) -> Result<AlgebraElement<R::Elem>> {
    let mut terms = Vec::new();
    for t in &j.terms {
        let d = diagram_from_json(&t.diagram)?;
        if (d.n(), d.m()) != (j.n, j.m) {
            return Err(Error::ArityMismatch { expected: format!("{}→{}", j.n, j.m), found: format!("{}→{}", d.n(), d.m()) });
        }
        terms.push((d, parse(&t.scalar)?));
    }
    AlgebraElement::from_terms(ring, j.n, j.m, terms)
}

pub fn element_from_json(j: &ElementJson) -> Result<AnyElement> {
    let t0 = || -> Result<Rational> {
        parse_rational(j.t0.as_deref().ok_or_else(|| Error::Parse("missing t0".into()))?)
    };
    match j.kind.as_str() {
        k if k == ScalarKind::Rational.name() => {
            let t0 = t0()?;
            let ring = partcat_core::scalars::AtValue::new(t0.clone());
            Ok(AnyElement::Rational { t0, elem: element_terms(&ring, j, parse_rational)? })
        }
        k if k == ScalarKind::Polynomial.name() => Ok(AnyElement::Polynomial(element_terms(&PolyRing, j, parse_poly)?)),
        k if k == ScalarKind::RationalFunction.name() => {
            Ok(AnyElement::RationalFunction(element_terms(&RatFuncField, j, parse_ratfunc)?))
        }
        k if k == ScalarKind::Series.name() => {
            let t0 = t0()?;
            let order = j.order.ok_or_else(|| Error::Parse("missing order".into()))?;
            let ring = SeriesRing::new(t0.clone(), order);
            let elem = element_terms(&ring, j, |s| parse_series(s, &t0, order))?;
            Ok(AnyElement::Series { t0, order, elem })
        }
        other => Err(Error::Parse(format!("unknown scalar kind '{}'", other))),
    }
}

pub fn param_to_string(t: &Param) -> String {
    match t {
        Param::Symbolic => "t".into(),
        Param::At(q) => fmt_rational(q),
    }
}

pub fn parse_param(s: &str) -> Result<Param> {
    if s.trim() == "t" {
        Ok(Param::Symbolic)
    } else {
        Ok(Param::At(parse_rational(s)?))
    }
}

/// A block class with the diagrams found in it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockClassJson {
    pub t: String,
    pub trivial: bool,
    /// The unique member of a trivial class.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagram: Option<YoungJson>,
    /// `λ^(0)` of a nontrivial class.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minimal: Option<YoungJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default)]
    pub members: Vec<YoungJson>,
}

pub fn block_class_to_json(c: &BlockClass, members: &[YoungDiagram]) -> BlockClassJson {
    let members = members.iter().map(young_to_json).collect();
    let t = param_to_string(&c.param);
    match &c.kind {
        BlockKind::Trivial(l) => {
            BlockClassJson { t, trivial: true, diagram: Some(young_to_json(l)), minimal: None, d: None, members }
        }
        BlockKind::Nontrivial { minimal, d } => {
            BlockClassJson { t, trivial: false, diagram: None, minimal: Some(young_to_json(minimal)), d: Some(*d), members }
        }
    }
}

pub fn block_class_from_json(j: &BlockClassJson) -> Result<BlockClass> {
    let param = parse_param(&j.t)?;
    let kind = if j.trivial {
        BlockKind::Trivial(YoungDiagram::new(j.diagram.clone().ok_or_else(|| Error::Parse("missing diagram".into()))?)?)
    } else {
        BlockKind::Nontrivial {
            minimal: YoungDiagram::new(j.minimal.clone().ok_or_else(|| Error::Parse("missing minimal".into()))?)?,
            d: j.d.ok_or_else(|| Error::Parse("missing d".into()))?,
        }
    };
    Ok(BlockClass { param, kind })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub id: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimJson {
    pub n: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverReportJson {
    pub n_max: usize,
    pub relation_results: Vec<RelationJson>,
    pub dim_results: Vec<DimJson>,
    pub presentation_holds: bool,
    pub all_hold: bool,
}

pub fn quiver_to_json(r: &QuiverReport) -> QuiverReportJson {
    QuiverReportJson {
        n_max: r.n_max,
        relation_results: r.relation_results.iter().map(|(id, holds)| RelationJson { id: id.clone(), holds: *holds }).collect(),
        dim_results: r.dim_results.iter().map(|&(n, dim)| DimJson { n, dim }).collect(),
        presentation_holds: r.presentation_holds(),
        all_hold: r.all_hold(),
    }
}

pub fn quiver_from_json(j: &QuiverReportJson) -> QuiverReport {
    QuiverReport {
        n_max: j.n_max,
        relation_results: j.relation_results.iter().map(|r| (r.id.clone(), r.holds)).collect(),
        dim_results: j.dim_results.iter().map(|d| (d.n, d.dim)).collect(),
    }
}

/// `{summands, trace_series}` with the lifting parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftJson {
    pub n: usize,
    pub t0: String,
    pub order: usize,
    pub summands: Vec<YoungJson>,
    /// Coefficients of `u^0, u^1, …` as rational strings.
    pub trace_series: Vec<String>,
}

pub fn lift_to_json(l: &LiftDecomposition) -> LiftJson {
    LiftJson {
        n: l.n,
        t0: fmt_rational(&l.t0),
        order: l.order,
        summands: l.summands.iter().map(young_to_json).collect(),
        trace_series: (0..l.order).map(|k| fmt_rational(l.trace_series.coeff(k))).collect(),
    }
}

pub fn lift_from_json(j: &LiftJson) -> Result<LiftDecomposition> {
    let t0 = parse_rational(&j.t0)?;
    let coeffs = j.trace_series.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
    Ok(LiftDecomposition {
        n: j.n,
        order: j.order,
        summands: j.summands.iter().map(|r| YoungDiagram::new(r.clone())).collect::<Result<_>>()?,
        trace_series: TruncatedSeries::new(t0.clone(), j.order, coeffs),
        t0,
    })
}

/// `{error, message}` for domain failures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorJson {
    pub error: String,
    pub message: String,
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::PoleAtPoint(_) => "pole_at_point",
        Error::NotAUnit => "not_a_unit",
        Error::DuplicateAbscissa(_) => "duplicate_abscissa",
        Error::ResourceLimit { .. } => "resource_limit",
        Error::ArityMismatch { .. } => "arity_mismatch",
        Error::ScalarKindMismatch(..) => "scalar_kind_mismatch",
        Error::OrderMismatch => "order_mismatch",
        Error::ArityTooSmall(_) => "arity_too_small",
        Error::CutoffTooSmall { .. } => "cutoff_too_small",
        Error::NotIdempotent => "not_idempotent",
        Error::OrderTooSmall(_) => "order_too_small",
        Error::SeparationFailure(_) => "separation_failure",
        Error::TrivialClass => "trivial_class",
        Error::ParameterMismatch => "parameter_mismatch",
        Error::MinimalClass => "minimal_class",
        Error::InvalidYoungDiagram(_) => "invalid_young_diagram",
        Error::Parse(_) => "parse",
        Error::Internal(_) => "internal",
    }
}

pub fn error_to_json(e: &Error) -> ErrorJson {
    ErrorJson { error: error_kind(e).into(), message: e.to_string() }
}

/// Groups a sorted multiset into `(item, multiplicity)` pairs.
pub fn multiplicities<T: Ord + Clone>(items: &[T]) -> Vec<(T, usize)> {
    let mut m: BTreeMap<T, usize> = BTreeMap::new();
    for x in items {
        *m.entry(x.clone()).or_default() += 1;
    }
    m.into_iter().collect()
}
