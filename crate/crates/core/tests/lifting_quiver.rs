mod common;

use common::*;
use partcat_core::idemlift::{
    antisymmetrizer, conjugator, lift_decompose, newton_lift, primitive_idempotent, symmetric_group, young_symmetrizer,
};
use partcat_core::partalg::{compose, trace, AlgebraElement};
use partcat_core::quiver0::{alpha, beta, end_dim, gamma, s, verify_relations, x_down, x_up, SIGN_SENSITIVE};
use partcat_core::scalars::{rat, ratio, AtValue, RatFuncField, SeriesRing};
use partcat_core::young::{p_poly, YoungDiagram};
use partcat_core::{Error, Limits, Rational, RationalFunction, TruncatedSeries};

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn symmetrizers_are_idempotent() {
    let at = AtValue::new(rat(0));
    for n in 1..=4 {
        assert_eq!(symmetric_group(n).len(), (1..=n).product::<usize>());
        for l in YoungDiagram::all_of_size(n) {
            let e = young_symmetrizer(&l).unwrap();
            assert_eq!(compose(&at, &e, &e).unwrap(), e, "{}", l);
            let id_coeff = e.coeff(&partcat_core::diagrams::Diagram::identity(n)).cloned().unwrap();
            let fact: i64 = (1..=n as i64).product();
            assert_eq!(id_coeff, Rational::from_integer(l.dimension()) / rat(fact));
        }
        assert_eq!(antisymmetrizer(n).unwrap(), young_symmetrizer(&YoungDiagram::new(vec![1; n]).unwrap()).unwrap());
    }
}

#[test]
fn primitive_idempotents_have_dimension_polynomial_trace() {
    let field = RatFuncField;
    for l in YoungDiagram::all_up_to(2) {
        let e = primitive_idempotent(&l, &lim()).unwrap();
        assert_eq!(compose(&field, &e, &e).unwrap(), e, "{}", l);
        assert_eq!(trace(&field, &e).unwrap(), RationalFunction::from_poly(p_poly(&l)), "{}", l);
    }
}

#[test]
fn newton_lift_rejects_non_idempotents() {
    let at = AtValue::new(rat(2));
    let twice = AlgebraElement::identity(&at, 1).scale(&at, &rat(2));
    assert!(matches!(newton_lift(&twice, &rat(2), 4), Err(Error::NotIdempotent)));
}

#[test]
fn conjugator_intertwines_lifts() {
    // Two lifts of the same idempotent at t0 = 1 from different starting points.
    let t0 = rat(1);
    let at = AtValue::new(t0.clone());
    let p: partcat_core::diagrams::Diagram = "{1}{1'}".parse().unwrap();
    let e = AlgebraElement::from_diagram(&at, &p);
    let eps1 = newton_lift(&e, &t0, 6).unwrap();
    let ring = SeriesRing::new(t0.clone(), 6);
    // ε₂ = π / t exactly, an idempotent over F[[u]] with the same reduction.
    let inv_t = TruncatedSeries::new(t0.clone(), 6, vec![rat(1)]).try_add(&TruncatedSeries::new(t0.clone(), 6, vec![rat(0), rat(1)])).unwrap().inverse().unwrap();
    let eps2 = AlgebraElement::from_diagram(&ring, &p).scale(&ring, &inv_t);
    assert_eq!(compose(&ring, &eps2, &eps2).unwrap(), eps2);
    let (a, a_inv) = conjugator(&eps1, &eps2, &ring, &lim()).unwrap();
    assert_eq!(compose(&ring, &eps1, &a).unwrap(), compose(&ring, &a, &eps2).unwrap());
    assert_eq!(compose(&ring, &a, &a_inv).unwrap(), AlgebraElement::identity(&ring, 1));
}

#[test]
fn lift_summand_dimensions_add_up_to_the_trace() {
    for (e, t0) in [
        (AlgebraElement::identity(&AtValue::new(rat(1)), 2), rat(1)),
        (young_symmetrizer(&yd("2")).unwrap(), rat(2)),
        (young_symmetrizer(&yd("2,1")).unwrap(), rat(0)),
        (AlgebraElement::identity(&AtValue::new(ratio(1, 2)), 2), ratio(1, 2)),
    ] {
        let l = lift_decompose(&e, &t0, 8, &lim()).unwrap();
        let total = l.summands.iter().fold(partcat_core::Polynomial::zero(), |acc, s| &acc + &p_poly(s));
        let want = TruncatedSeries::from_polynomial(&total, &t0, l.order);
        assert_eq!(l.trace_series, want, "{:?}", l.summands);
    }
}

#[test]
fn lifts_from_the_examples() {
    let zero = rat(0);
    let ys = |v: &[&str]| -> Vec<YoungDiagram> {
        let mut out: Vec<YoungDiagram> = v.iter().map(|s| if s.is_empty() { YoungDiagram::empty() } else { yd(s) }).collect();
        out.sort();
        out
    };
    let id2 = lift_decompose(&AlgebraElement::identity(&AtValue::new(rat(1)), 2), &rat(1), 8, &lim()).unwrap();
    assert_eq!(id2.summands, ys(&["", "", "1", "1", "1", "1,1", "2"]));
    let y21 = lift_decompose(&young_symmetrizer(&yd("2,1")).unwrap(), &zero, 8, &lim()).unwrap();
    assert_eq!(y21.summands.len(), 9);
    let generic = lift_decompose(&AlgebraElement::identity(&AtValue::new(ratio(1, 2)), 1), &ratio(1, 2), 8, &lim()).unwrap();
    assert_eq!(generic.summands, ys(&["", "1"]));
}

#[test]
fn quiver_elements() {
    assert!(matches!(gamma(0), Err(Error::ArityTooSmall(1))));
    assert_eq!((x_down(2).n(), x_down(2).m()), (3, 2));
    assert_eq!((x_up(2).n(), x_up(2).m()), (2, 3));
    let at = AtValue::new(rat(0));
    for n in 1..=3 {
        let (a, b, g) = (alpha(n).unwrap(), beta(n).unwrap(), gamma(n).unwrap());
        let sn = s(n).unwrap();
        assert_eq!(compose(&at, &a, &sn).unwrap(), a);
        assert_eq!(compose(&at, &sn, &b).unwrap(), b);
        assert!(compose(&at, &g, &g).unwrap().is_zero());
        let ba = compose(&at, &b, &a).unwrap();
        let ab = compose(&at, &alpha(n - 1).unwrap(), &beta(n - 1).unwrap()).unwrap();
        assert_eq!(ba, ab);
        assert_eq!(ba, g.neg(&at));
    }
}

#[test]
fn quiver_report() {
    let report = verify_relations(3, &lim()).unwrap();
    assert!(report.presentation_holds());
    assert!(!report.all_hold());
    assert!(report.failures().iter().all(|id| SIGN_SENSITIVE.iter().any(|s| id.starts_with(s))));
    assert_eq!(report.dim_results, vec![(1, 2), (2, 2), (3, 2)]);
    assert_eq!(end_dim(2, &lim()).unwrap(), 2);
}
