mod common;

use std::collections::BTreeSet;

use common::*;
use partcat_core::diagrams::{all_diagrams, bell, compose_star, Diagram};
use partcat_core::partalg::{coev, compose, ev, tensor, trace, AlgebraElement};
use partcat_core::scalars::{PolyRing, Ring};
use partcat_core::Polynomial;
use proptest::prelude::*;

fn diagram(n: usize, m: usize) -> impl Strategy<Value = Diagram> {
    prop::collection::vec(0..(n + m).max(1), n + m).prop_map(move |keys| Diagram::from_labels(n, m, &keys))
}

fn triple() -> impl Strategy<Value = (Diagram, Diagram, Diagram)> {
    (0usize..4, 0usize..4, 0usize..4, 0usize..4)
        .prop_flat_map(|(a, b, c, d)| (diagram(a, b), diagram(b, c), diagram(c, d)))
}

fn pair() -> impl Strategy<Value = (Diagram, Diagram)> {
    (0usize..5, 0usize..5, 0usize..5).prop_flat_map(|(a, b, c)| (diagram(a, b), diagram(b, c)))
}

fn poly_coeff() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-3i64..4, 0..3).prop_map(|c| Polynomial::from_ints(&c))
}

fn element(n: usize, m: usize) -> impl Strategy<Value = AlgebraElement<Polynomial>> {
    prop::collection::vec((diagram(n, m), poly_coeff()), 0..4)
        .prop_map(move |terms| AlgebraElement::from_terms(&PolyRing, n, m, terms).unwrap())
}

#[test]
fn bell_counts_up_to_eight() {
    for k in 0..=8 {
        for n in 0..=k {
            let ds = all_diagrams(n, k - n).unwrap();
            assert_eq!(ds.len() as u128, bell_oracle(k), "P_{{{},{}}}", n, k - n);
            assert_eq!(bell(k), bell_oracle(k));
            let distinct: BTreeSet<_> = ds.iter().collect();
            assert_eq!(distinct.len(), ds.len());
            assert!(ds.windows(2).all(|w| w[0] < w[1]));
        }
    }
}

#[test]
fn text_syntax() {
    let d: Diagram = "{1,3,2',3'}{2,4}{1'}".parse().unwrap();
    assert_eq!((d.n(), d.m(), d.num_parts()), (4, 3, 3));
    assert_eq!(d.to_string().parse::<Diagram>().unwrap(), d);
    assert_eq!(Diagram::empty().to_string(), "∅");
    assert!("{1,1}".parse::<Diagram>().is_err());
}

#[test]
fn snake_identities() {
    let r = PolyRing;
    for n in 0..=3 {
        let id = AlgebraElement::identity(&r, n);
        let left = compose(&r, &tensor(&r, &ev(&r, n), &id), &tensor(&r, &id, &coev(&r, n))).unwrap();
        assert_eq!(left, id);
        let right = compose(&r, &tensor(&r, &id, &ev(&r, n)), &tensor(&r, &coev(&r, n), &id)).unwrap();
        assert_eq!(right, id);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn composition_matches_graph_search((pi, mu) in pair()) {
        prop_assert_eq!(compose_star(&mu, &pi).unwrap(), compose_bfs(&mu, &pi));
    }

    #[test]
    fn associativity_with_loops((a, b, c) in triple()) {
        let (ba, l1) = compose_star(&b, &a).unwrap();
        let (c_ba, l2) = compose_star(&c, &ba).unwrap();
        let (cb, l3) = compose_star(&c, &b).unwrap();
        let (cb_a, l4) = compose_star(&cb, &a).unwrap();
        prop_assert_eq!(c_ba, cb_a);
        prop_assert_eq!(l1 + l2, l3 + l4);
    }

    #[test]
    fn canonical_labels_are_stable(d in (0usize..5, 0usize..5).prop_flat_map(|(n, m)| diagram(n, m)), shift in 1usize..7) {
        prop_assert_eq!(d.canonicalize(), d.clone());
        let relabelled: Vec<usize> = d.labels().iter().map(|&l| (l as usize + shift) * 3).collect();
        prop_assert_eq!(Diagram::from_labels(d.n(), d.m(), &relabelled), d.clone());
        prop_assert_eq!(Diagram::from_signed_parts(d.n(), d.m(), &d.signed_parts()).unwrap(), d);
    }

    #[test]
    fn dual_reverses_composition((pi, mu) in pair()) {
        let (c, l) = compose_star(&mu, &pi).unwrap();
        let (cd, ld) = compose_star(&pi.dual(), &mu.dual()).unwrap();
        prop_assert_eq!(c.dual(), cd);
        prop_assert_eq!(l, ld);
        prop_assert_eq!(pi.dual().dual(), pi);
    }

    #[test]
    fn tensor_is_a_bifunctor((a, c) in pair(), (b, d) in pair()) {
        let (ca, l1) = compose_star(&c, &a).unwrap();
        let (db, l2) = compose_star(&d, &b).unwrap();
        let (lhs, l3) = compose_star(&c.tensor(&d), &a.tensor(&b)).unwrap();
        prop_assert_eq!(lhs, ca.tensor(&db));
        prop_assert_eq!(l3, l1 + l2);
    }

    #[test]
    fn composition_is_bilinear(
        (f, g1, g2) in (0usize..3, 0usize..3, 0usize..3).prop_flat_map(|(a, b, c)| (element(a, b), element(b, c), element(b, c))),
        k in poly_coeff(),
    ) {
        let r = PolyRing;
        let sum = g1.add(&r, &g2.scale(&r, &k)).unwrap();
        let lhs = compose(&r, &sum, &f).unwrap();
        let rhs = compose(&r, &g1, &f).unwrap().add(&r, &compose(&r, &g2, &f).unwrap().scale(&r, &k)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn trace_through_duality(f in (0usize..4).prop_flat_map(|n| element(n, n))) {
        let r = PolyRing;
        let n = f.n();
        let id = AlgebraElement::identity(&r, n);
        let closed = compose(&r, &ev(&r, n), &compose(&r, &tensor(&r, &f, &id), &coev(&r, n)).unwrap()).unwrap();
        let scalar = closed.coeff(&Diagram::empty()).cloned().unwrap_or_else(|| r.zero());
        prop_assert_eq!(scalar, trace(&r, &f).unwrap());
    }

    #[test]
    fn stats_are_consistent(d in (0usize..5, 0usize..5).prop_flat_map(|(n, _)| diagram(n, n))) {
        let s = d.stats().unwrap();
        let parts = d.signed_parts();
        let paired = parts.iter().filter(|p| p.iter().any(|&v| v > 0 && p.contains(&-v))).count();
        prop_assert_eq!(s.a, parts.len());
        prop_assert_eq!(s.b, paired);
        // Closing j to j' is the trace closure; its component count is the loop count of tr(π).
        let (inner, l1) = compose_bfs(&d.tensor(&Diagram::identity(d.n())), &Diagram::coev(d.n()));
        let (_, l2) = compose_bfs(&Diagram::ev(d.n()), &inner);
        prop_assert_eq!(s.c, l1 + l2);
        prop_assert_eq!(d.trace_components().unwrap(), l1 + l2);
    }
}
