mod common;

use std::cmp::Ordering;

use common::*;
use partcat_core::blocks::{
    block_compare, block_partner, class_of, classes_up_to, equivalent, tensor_box, BlockOrder,
};
use partcat_core::central::character;
use partcat_core::partalg::Param;
use partcat_core::scalars::{rat, Rational};
use partcat_core::young::{p_poly, partition_count, MuSequence, YoungDiagram};
use partcat_core::Polynomial;
use proptest::prelude::*;

fn young(max: usize) -> impl Strategy<Value = YoungDiagram> {
    (0..=max).prop_flat_map(|n| {
        let all = YoungDiagram::all_of_size(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn composition(n: usize) -> Vec<usize> {
    // A cycle type with one part of each size that fits greedily, rest fixed points.
    let mut rho = Vec::new();
    let mut left = n;
    let mut k = 3;
    while left > 0 {
        let p = k.min(left);
        rho.push(p);
        left -= p;
        k = if k > 1 { k - 1 } else { 1 };
    }
    rho
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(l in young(8)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
        prop_assert_eq!(l.conjugate().dimension(), l.dimension());
    }

    #[test]
    fn hook_formula(l in young(8)) {
        prop_assert_eq!(l.dimension(), hook_dimension(l.rows()));
        prop_assert_eq!(character(&l, &vec![1; l.size()]), hook_dimension(l.rows()));
    }

    #[test]
    fn characters_match_the_vandermonde_method(l in young(7)) {
        let rho = composition(l.size());
        prop_assert_eq!(character(&l, &rho), character_frobenius(l.rows(), &rho));
    }

    #[test]
    fn dominance_reverses_under_conjugation(n in 0usize..8, i in 0usize..30, j in 0usize..30) {
        let all = YoungDiagram::all_of_size(n);
        let (a, b) = (&all[i % all.len()], &all[j % all.len()]);
        let fwd = a.dominance(b);
        prop_assert_eq!(fwd.map(Ordering::reverse), b.dominance(a));
        prop_assert_eq!(fwd.map(Ordering::reverse), a.conjugate().dominance(&b.conjugate()));
        prop_assert_eq!(fwd == Some(Ordering::Equal), a == b);
    }

    #[test]
    fn dimension_polynomial_leading_term(l in young(6)) {
        let p = p_poly(&l);
        prop_assert_eq!(p.degree(), Some(l.size()));
        let fact: u64 = (1..=l.size() as u64).product();
        prop_assert_eq!(p.leading(), Rational::from_integer(l.dimension()) / rat(fact as i64));
    }

    #[test]
    fn equivalence_is_an_equivalence(a in young(5), b in young(5), c in young(5), d in 0i64..8) {
        let t = Param::At(rat(d));
        prop_assert!(equivalent(&a, &a, &t));
        prop_assert_eq!(equivalent(&a, &b, &t), equivalent(&b, &a, &t));
        if equivalent(&a, &b, &t) && equivalent(&b, &c, &t) {
            prop_assert!(equivalent(&a, &c, &t));
        }
        prop_assert_eq!(equivalent(&a, &b, &Param::At(rat(d) + Rational::new(1.into(), 2.into()))), a == b);
    }

    #[test]
    fn mu_sequence_tail(l in young(6), d in 0i64..10, i in 1usize..12) {
        let mu = MuSequence::new(&l, &rat(d));
        prop_assert_eq!(mu.get(0), rat(d - l.size() as i64));
        prop_assert_eq!(mu.get(i), rat(l.row(i - 1) as i64 - i as i64));
    }

    #[test]
    fn tensor_box_size(l in young(6)) {
        // |λ ⊗ □| = #addable + Σ_removable (#addable after removal + 1)
        let tb = tensor_box(&l);
        let want = l.addable_rows().len()
            + l.removable_rows().iter().map(|&i| l.remove_box(i).unwrap().addable_rows().len() + 1).sum::<usize>();
        prop_assert_eq!(tb.len(), want);
        prop_assert!(tb.iter().all(|nu| nu.size().abs_diff(l.size()) <= 1));
    }
}

#[test]
fn partition_counts() {
    for n in 0..=12 {
        assert_eq!(partition_count(n), integer_partitions(n));
    }
}

#[test]
fn dominance_is_partial() {
    assert_eq!(yd("3,1,1,1").dominance(&yd("2,2,2")), None);
    assert_eq!(yd("3,1").dominance(&yd("2,2")), Some(Ordering::Greater));
}

#[test]
fn dimension_polynomial_interpolates() {
    for l in YoungDiagram::all_up_to(5) {
        let p = p_poly(&l);
        for d in 0..=12 {
            if let Some(rows) = complete(&l, d) {
                assert_eq!(p.eval(&rat(d as i64)), Rational::from_integer(hook_dimension(&rows)), "{} at {}", l, d);
            }
        }
    }
    assert_eq!(p_poly(&YoungDiagram::empty()), Polynomial::from_ints(&[1]));
}

#[test]
fn block_order_is_dominance_of_completions() {
    for d in 1..=5 {
        let classes: Vec<_> =
            classes_up_to(&Param::At(rat(d)), d as usize).into_iter().filter(|(c, _)| !c.is_trivial()).collect();
        for (a, _) in &classes {
            for (b, _) in &classes {
                let ord = block_compare(a, b).unwrap();
                let via = a.minimal_completion().unwrap().dominance(&b.minimal_completion().unwrap());
                let want = match via {
                    Some(Ordering::Less) => BlockOrder::Less,
                    Some(Ordering::Greater) => BlockOrder::Greater,
                    Some(Ordering::Equal) => BlockOrder::Equal,
                    None => BlockOrder::Incomparable,
                };
                assert_eq!(ord, want);
            }
        }
    }
}

#[test]
fn trivial_classes_have_no_order() {
    let t = Param::At(rat(3));
    let triv = class_of(&yd("1,1,1"), &t);
    assert!(triv.is_trivial());
    assert!(block_compare(&triv, &triv).is_err());
    assert!(class_of(&yd("2"), &Param::Symbolic).is_trivial());
}

#[test]
fn block_partners_stay_at_the_same_parameter() {
    for d in 1..=5i64 {
        for (class, _) in classes_up_to(&Param::At(rat(d)), d as usize) {
            if class.is_trivial() {
                continue;
            }
            if let Ok(p) = block_partner(&class) {
                assert!(!p.is_trivial());
                assert_eq!(p.nontrivial().unwrap().1, d as usize);
                assert_eq!(p.minimal_completion().unwrap().size(), d as usize);
            }
        }
    }
}
