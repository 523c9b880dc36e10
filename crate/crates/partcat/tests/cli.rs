use std::process::Command;

use partcat::json::*;
use partcat_core::blocks::{class_of, classes_up_to};
use partcat_core::diagrams::Diagram;
use partcat_core::idemlift::lift_decompose;
use partcat_core::partalg::{x_basis, AnyElement, Param};
use partcat_core::quiver0::{s, verify_relations};
use partcat_core::scalars::{rat, ratio, PolyRing};
use partcat_core::{Limits, Polynomial, TruncatedSeries};
use proptest::prelude::*;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("partcat").chain(args.iter().copied());
    let code = partcat::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut argv = vec!["--json"];
    argv.extend_from_slice(args);
    let (code, out, err) = run(&argv);
    assert_eq!(code, 0, "{}", err);
    serde_json::from_str(&out).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(run(&["ppoly", "--lambda", "3,2"]).1.trim(), "(1/24)·t·(t-1)·(t-2)·(t-5)·(t-7)");
    assert_eq!(run(&["gram", "--n", "1", "--det"]).1.trim(), "t^2");
    assert_eq!(run(&["semisimple", "--t", "5/2"]).1.trim(), "semisimple: true");
    assert_eq!(run(&["semisimple", "--t", "3"]).1.trim(), "semisimple: false");
    assert_eq!(run(&["semisimple", "--t", "t"]).1.trim(), "semisimple: true");
}

#[test]
fn every_subcommand_succeeds() {
    for args in [
        vec!["gram", "--n", "1"],
        vec!["blocks", "--t", "2", "--max-size", "3"],
        vec!["ppoly", "--lambda", "2,1", "--roots"],
        vec!["tensor-box", "--lambda", "3,1"],
        vec!["omega", "--n", "1", "--r", "2", "--verify-at", "4"],
        vec!["xi", "--lambda", "1", "--r", "2", "--at", "5"],
        vec!["lift", "--idempotent", "id_1", "--t", "0"],
        vec!["verify-zeroblock", "--n-max", "2"],
        vec!["semisimple", "--t", "-1"],
        vec!["interp-rank", "--n", "2", "--m", "2", "--d", "3"],
        vec!["xbasis", "--diagram", "{1,3,2',3'}{2,4}{1'}"],
        vec!["negligible", "--diagram", "{1}{1'}", "--x-basis", "--t", "1"],
    ] {
        let (code, out, err) = run(&args);
        assert_eq!(code, 0, "{:?}: {}", args, err);
        assert!(!out.is_empty(), "{:?}", args);
        let mut with_json = vec!["--json"];
        with_json.extend_from_slice(&args);
        let (code, out, _) = run(&with_json);
        assert_eq!(code, 0);
        serde_json::from_str::<Value>(&out).unwrap_or_else(|e| panic!("{:?}: {}", args, e));
    }
}

#[test]
fn text_outputs() {
    assert!(run(&["omega", "--n", "1", "--r", "2", "--verify-at", "4"]).1.contains("matches r-cycle action at d = 4: true"));
    assert!(run(&["interp-rank", "--n", "2", "--m", "2", "--d", "3"]).1.contains("14"));
    assert!(run(&["negligible", "--diagram", "{1}{1'}", "--x-basis", "--t", "1"]).1.contains("true"));
    assert!(run(&["negligible", "--diagram", "{1}{1'}", "--x-basis", "--t", "3"]).1.contains("false"));
    assert_eq!(run(&["ppoly", "--lambda", "3,2", "--roots"]).0, 0);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec![],
        vec!["gram"],
        vec!["gram", "--n", "1", "--bogus"],
        vec!["ppoly", "--lambda", "3,x"],
        vec!["semisimple", "--t", "1/0"],
        vec!["frobnicate"],
        vec!["lift", "--idempotent", "q_2", "--t", "0"],
    ] {
        let (code, out, err) = run(&args);
        assert_eq!(code, 2, "{:?}", args);
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
    let (_, _, err) = run(&["gram", "--n", "1", "--bogus"]);
    assert!(err.contains("--bogus"));
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
}

#[test]
fn domain_errors_exit_one_with_error_json() {
    let (code, out, err) = run(&["--json", "gram", "--n", "5"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"));
    let e: ErrorJson = serde_json::from_str(&out).unwrap();
    assert_eq!(e.error, "resource_limit");
    let (code, out, _) = run(&["--json", "interp-rank", "--n", "1", "--m", "1", "--d", "20"]);
    assert_eq!(code, 1);
    serde_json::from_str::<ErrorJson>(&out).unwrap();
    let (code, out, _) = run(&["xi", "--lambda", "2", "--r", "2", "--k", "0"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
}

#[test]
fn element_json_round_trips() {
    let d: Diagram = "{1,3,2',3'}{2,4}{1'}".parse().unwrap();
    let v = json(&["xbasis", "--diagram", "{1,3,2',3'}{2,4}{1'}"]);
    let ej: ElementJson = serde_json::from_value(v).unwrap();
    let back = element_from_json(&ej).unwrap();
    assert_eq!(back, AnyElement::Polynomial(x_basis(&PolyRing, &d)));
    assert_eq!(element_to_json(&back), ej);
}

#[test]
fn lift_json_round_trips() {
    let v = json(&["lift", "--idempotent", "s_2", "--t", "0"]);
    let lj: LiftJson = serde_json::from_value(v).unwrap();
    let back = lift_from_json(&lj).unwrap();
    let direct = lift_decompose(&s(2).unwrap(), &rat(0), 8, &Limits::default()).unwrap();
    assert_eq!(back, direct);
    assert_eq!(lift_to_json(&back), lj);
}

#[test]
fn quiver_json_round_trips() {
    let v = json(&["verify-zeroblock", "--n-max", "2"]);
    let qj: QuiverReportJson = serde_json::from_value(v).unwrap();
    let back = quiver_from_json(&qj);
    assert_eq!(back, verify_relations(2, &Limits::default()).unwrap());
    assert!(qj.presentation_holds && !qj.all_hold);
}

#[test]
fn block_class_json_round_trips() {
    let v = json(&["blocks", "--t", "2", "--max-size", "3"]);
    let classes: Vec<BlockClassJson> = serde_json::from_value(v["classes"].clone()).unwrap();
    let direct = classes_up_to(&Param::At(rat(2)), 3);
    assert_eq!(classes.len(), direct.len());
    for (j, (c, members)) in classes.iter().zip(&direct) {
        assert_eq!(&block_class_from_json(j).unwrap(), c);
        assert_eq!(&block_class_to_json(c, members), j);
    }
    let c = class_of(&"2,1".parse().unwrap(), &Param::Symbolic);
    assert_eq!(block_class_from_json(&block_class_to_json(&c, &[])).unwrap(), c);
}

#[test]
fn identical_invocations_are_identical() {
    for args in [
        vec!["--json", "blocks", "--t", "3", "--max-size", "4"],
        vec!["--json", "gram", "--n", "2", "--det"],
        vec!["--json", "lift", "--idempotent", "young 2,1", "--t", "0"],
        vec!["omega", "--n", "2", "--r", "2"],
    ] {
        assert_eq!(run(&args), run(&args), "{:?}", args);
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_partcat");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["gram", "--n", "1", "--det"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "t^2");
    assert_eq!(status(&["gram", "--n", "9"]).status.code(), Some(1));
    assert_eq!(status(&["gram", "--nope"]).status.code(), Some(2));
}

fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-9i64..10, 1i64..5), 0..6)
        .prop_map(|c| Polynomial::from_coeffs(c.into_iter().map(|(a, b)| ratio(a, b)).collect()))
}

proptest! {
    #[test]
    fn polynomial_text_round_trips(p in poly_strategy()) {
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(poly_from_json(&poly_to_json(&p)).unwrap(), p.clone());
        if !p.is_zero() {
            prop_assert_eq!(parse_poly(&p.to_factored_string()).unwrap(), p);
        }
    }

    #[test]
    fn series_text_round_trips(c in prop::collection::vec((-9i64..10, 1i64..5), 0..5), order in 1usize..6) {
        let s = TruncatedSeries::new(rat(2), order, c.into_iter().map(|(a, b)| ratio(a, b)).collect());
        prop_assert_eq!(parse_series(&s.to_string(), &rat(2), order).unwrap(), s);
    }

    #[test]
    fn diagram_json_round_trips(keys in prop::collection::vec(0usize..6, 6), n in 0usize..7) {
        let d = Diagram::from_labels(n, 6 - n, &keys);
        prop_assert_eq!(diagram_from_json(&diagram_to_json(&d)).unwrap(), d);
    }
}
