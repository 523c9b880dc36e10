//! The `partcat` command line.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use partcat_core::blocks::{
    block_compare, category_semisimple, classes_up_to, tensor_box, BlockOrder,
};
use partcat_core::central::{frobenius_xi, omega, xi};
use partcat_core::diagrams::{all_diagrams_with, Diagram};
use partcat_core::idemlift::{antisymmetrizer, lift_decompose, young_symmetrizer};
use partcat_core::interp::{f_poly_element, hom_rank, omega_action_oracle, OneCycleConvention};
use partcat_core::partalg::{gram_matrix, is_negligible, x_basis, AlgebraElement, AnyElement, Param};
use partcat_core::quiver0::verify_relations;
use partcat_core::scalars::{det_bareiss, fmt_rational, parse_rational, AtValue, PolyRing};
use partcat_core::young::{p_poly, p_roots, YoungDiagram};
use partcat_core::{Error, Limits, Rational, Result};
use serde::Serialize;
use serde_json::{json, Value};

use crate::json::*;

/// Exit status for domain errors.
pub const EXIT_DOMAIN: i32 = 1;
/// Exit status for usage errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "partcat", version, about = "Exact computations in the partition category Rep(S_t)")]
struct Cli {
    /// Emit one JSON document on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Largest n + m for diagram enumeration.
    #[arg(long, global = true, default_value_t = 12)]
    max_arity: usize,
    /// Largest d for dense interpolation matrices.
    #[arg(long, global = true, default_value_t = 8)]
    max_d: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Convention {
    PerPoint,
    Identity,
}

impl From<Convention> for OneCycleConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::PerPoint => OneCycleConvention::PerPoint,
            Convention::Identity => OneCycleConvention::Identity,
        }
    }
}

fn young_arg(s: &str) -> std::result::Result<YoungDiagram, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn param_arg(s: &str) -> std::result::Result<Param, String> {
    parse_param(s).map_err(|e| e.to_string())
}

fn diagram_arg(s: &str) -> std::result::Result<Diagram, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Debug)]
enum Idempotent {
    Sign(usize),
    Identity(usize),
    Young(YoungDiagram),
}

fn idempotent_arg(s: &str) -> std::result::Result<Idempotent, String> {
    let s = s.trim();
    let num = |x: &str| x.parse::<usize>().map_err(|_| format!("invalid arity '{}'", x));
    if let Some(rest) = s.strip_prefix("s_") {
        return Ok(Idempotent::Sign(num(rest)?));
    }
    if let Some(rest) = s.strip_prefix("id_") {
        return Ok(Idempotent::Identity(num(rest)?));
    }
    if let Some(rest) = s.strip_prefix("young") {
        let rest = rest.trim_start_matches([':', ' ', '=']);
        return Ok(Idempotent::Young(young_arg(rest)?));
    }
    Err(format!("expected s_N, id_N or 'young L', found '{}'", s))
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Trace-form Gram matrix of FP_n(t).
    Gram(GramArgs),
    /// Block classes among Young diagrams of bounded size.
    Blocks {
        #[arg(long, value_parser = param_arg, allow_hyphen_values = true)]
        t: Param,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
    /// The dimension polynomial P_λ(t).
    Ppoly {
        #[arg(long, value_parser = young_arg)]
        lambda: YoungDiagram,
        /// Print the root multiset instead.
        #[arg(long)]
        roots: bool,
    },
    /// Summands of L(λ) ⊗ L(□) for generic t.
    TensorBox {
        #[arg(long, value_parser = young_arg)]
        lambda: YoungDiagram,
    },
    /// The central element ω_n^r(t).
    Omega {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Compare with the action of all r-cycles of S_D.
        #[arg(long)]
        verify_at: Option<usize>,
        #[arg(long, value_enum, default_value_t = Convention::PerPoint)]
        convention: Convention,
    },
    /// The eigenvalue ξ_{λ,r}(t) of ω^r on L(λ).
    Xi {
        #[arg(long, value_parser = young_arg)]
        lambda: YoungDiagram,
        #[arg(long)]
        r: usize,
        /// Truncation point of the μ-sequence.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        at: Option<Rational>,
    },
    /// Decompose Lift_t([n], e) for an idempotent e at t0.
    Lift {
        #[arg(long, value_parser = idempotent_arg)]
        idempotent: Idempotent,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        t: Rational,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Check the relations of the t = 0 block quiver.
    VerifyZeroblock {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
    /// Whether Rep(S_t) is semisimple.
    Semisimple {
        #[arg(long, value_parser = param_arg, allow_hyphen_values = true)]
        t: Param,
    },
    /// Rank of the interpolation map FP_{n,m}(d) → Hom(V^⊗n, V^⊗m).
    InterpRank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
    },
    /// The element x_π in the diagram basis.
    Xbasis {
        #[arg(long, value_parser = diagram_arg)]
        diagram: Diagram,
    },
    /// Whether a diagram (or x_π) is negligible at t.
    Negligible {
        #[arg(long, value_parser = diagram_arg)]
        diagram: Diagram,
        #[arg(long)]
        x_basis: bool,
        #[arg(long, value_parser = param_arg, allow_hyphen_values = true)]
        t: Param,
    },
}

#[derive(Args, Debug)]
struct GramArgs {
    #[arg(long)]
    n: usize,
    /// Print only the factored determinant.
    #[arg(long)]
    det: bool,
    /// Permit n = 3.
    #[arg(long)]
    allow_large: bool,
}

/// Output of one subcommand: a JSON document and its text rendering.
struct Output {
    json: Value,
    text: String,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

/// Runs the command line `args` (including the program name) and returns the exit status.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e);
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e);
                    EXIT_USAGE
                }
            };
        }
    };
    let limits = Limits { max_arity: cli.max_arity, ..Limits::default() };
    match execute(&cli, &limits) {
        Ok(o) => {
            let res = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("json"))
            } else {
                write!(out, "{}", o.text)
            };
            if res.is_err() {
                return EXIT_DOMAIN;
            }
            0
        }
        Err(e) => {
            if cli.json {
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&error_to_json(&e)).expect("json"));
            }
            let _ = writeln!(err, "error: {}", e);
            EXIT_DOMAIN
        }
    }
}

fn check_d(d: usize, cli: &Cli) -> Result<()> {
    if d > cli.max_d {
        return Err(Error::ResourceLimit { what: format!("d = {}", d), limit: cli.max_d as u64 });
    }
    Ok(())
}

fn element_lines<E: Clone + PartialEq>(e: &AlgebraElement<E>, f: impl Fn(&E) -> String) -> String {
    if e.is_zero() {
        return "0\n".into();
    }
    e.terms().iter().map(|(d, c)| format!("{}  {}\n", f(c), d)).collect()
}

fn execute(cli: &Cli, limits: &Limits) -> Result<Output> {
    match &cli.cmd {
        Cmd::Gram(a) => gram(a, limits),
        Cmd::Blocks { t, max_size } => blocks(t, *max_size),
        Cmd::Ppoly { lambda, roots } => {
            let p = p_poly(lambda);
            let rs = p_roots(lambda);
            let text = if *roots {
                format!("{}\n", rs.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" "))
            } else {
                format!("{}\n", p.to_factored_string())
            };
            Ok(Output {
                json: json!({
                    "lambda": young_to_json(lambda),
                    "polynomial": poly_to_json(&p),
                    "factored": p.to_factored_string(),
                    "roots": rs,
                }),
                text,
            })
        }
        Cmd::TensorBox { lambda } => {
            let parts = tensor_box(lambda);
            let text = multiplicities(&parts)
                .iter()
                .map(|(y, k)| if *k == 1 { format!("{}\n", y) } else { format!("{} x{}\n", y, k) })
                .collect();
            Ok(Output {
                json: json!({ "lambda": young_to_json(lambda), "summands": parts.iter().map(young_to_json).collect::<Vec<_>>() }),
                text,
            })
        }
        Cmd::Omega { n, r, verify_at, convention } => {
            let conv: OneCycleConvention = (*convention).into();
            let w = omega(*n, *r, conv, limits)?;
            let mut text = element_lines(&w.value, |p| format!("[{}]", p));
            let mut doc = json!({
                "n": n,
                "r": r,
                "element": element_to_json(&AnyElement::Polynomial(w.value.clone())),
            });
            if let Some(d) = verify_at {
                check_d(*d, cli)?;
                let lhs = f_poly_element(&w.value, *d, limits)?;
                let rhs = omega_action_oracle(*n, *r, *d, conv, limits)?;
                let ok = lhs.entries == rhs.entries;
                text.push_str(&format!("matches r-cycle action at d = {}: {}\n", d, ok));
                doc["verify"] = json!({ "d": d, "matches": ok });
            }
            Ok(Output { json: doc, text })
        }
        Cmd::Xi { lambda, r, k, at } => {
            let p = match k {
                Some(k) => frobenius_xi(lambda, *r, *k)?.value,
                None => xi(lambda, *r)?,
            };
            let mut text = format!("{}\n", p);
            let mut doc = json!({ "lambda": young_to_json(lambda), "r": r, "polynomial": poly_to_json(&p) });
            if let Some(t0) = at {
                let v = p.eval(t0);
                text.push_str(&format!("at t = {}: {}\n", fmt_rational(t0), fmt_rational(&v)));
                doc["at"] = json!(fmt_rational(t0));
                doc["value"] = json!(fmt_rational(&v));
            }
            Ok(Output { json: doc, text })
        }
        Cmd::Lift { idempotent, t, order } => {
            let e = match idempotent {
                Idempotent::Sign(n) => antisymmetrizer(*n)?,
                Idempotent::Identity(n) => AlgebraElement::identity(&AtValue::new(t.clone()), *n),
                Idempotent::Young(l) => young_symmetrizer(l)?,
            };
            let l = lift_decompose(&e, t, *order, limits)?;
            let names: Vec<String> = l.summands.iter().map(|y| y.to_string()).collect();
            let text = format!("summands: {}\ntrace: {}\n", names.join(" ⊕ "), l.trace_series);
            Ok(Output { json: to_value(&lift_to_json(&l)), text })
        }
        Cmd::VerifyZeroblock { n_max } => {
            let rep = verify_relations(*n_max, limits)?;
            let mut text = String::new();
            for (id, ok) in &rep.relation_results {
                text.push_str(&format!("{:<32} {}\n", id, if *ok { "holds" } else { "fails" }));
            }
            for (n, d) in &rep.dim_results {
                text.push_str(&format!("dim End(L_{}) = {}\n", n, d));
            }
            text.push_str(&format!("presentation holds: {}\n", rep.presentation_holds()));
            Ok(Output { json: to_value(&quiver_to_json(&rep)), text })
        }
        Cmd::Semisimple { t } => {
            let s = category_semisimple(t);
            Ok(Output { json: json!({ "t": param_to_string(t), "semisimple": s }), text: format!("semisimple: {}\n", s) })
        }
        Cmd::InterpRank { n, m, d } => {
            check_d(*d, cli)?;
            let rank = hom_rank(*n, *m, *d, limits)?;
            let bounded = all_diagrams_with(*n, *m, limits)?.iter().filter(|p| p.num_parts() <= *d).count();
            Ok(Output {
                json: json!({ "n": n, "m": m, "d": d, "rank": rank, "diagrams_with_at_most_d_parts": bounded }),
                text: format!("rank: {}\ndiagrams with at most {} parts: {}\n", rank, d, bounded),
            })
        }
        Cmd::Xbasis { diagram } => {
            let elem = x_basis(&PolyRing, diagram);
            Ok(Output {
                json: to_value(&element_to_json(&AnyElement::Polynomial(elem.clone()))),
                text: element_lines(&elem, |p| p.to_string()),
            })
        }
        Cmd::Negligible { diagram, x_basis: use_x, t } => {
            let h = if *use_x { x_basis(&PolyRing, diagram) } else { AlgebraElement::from_diagram(&PolyRing, diagram) };
            let neg = is_negligible(&h, t)?;
            Ok(Output {
                json: json!({ "diagram": diagram_to_json(diagram), "x_basis": use_x, "t": param_to_string(t), "negligible": neg }),
                text: format!("negligible: {}\n", neg),
            })
        }
    }
}

fn gram(a: &GramArgs, limits: &Limits) -> Result<Output> {
    let cap: u64 = if a.allow_large { 3 } else { 2 };
    if a.n as u64 > cap {
        return Err(Error::ResourceLimit { what: format!("gram n = {}", a.n), limit: cap });
    }
    let (basis, m) = gram_matrix(a.n, limits)?;
    let det = det_bareiss(&m);
    let factored = det.to_factored_string();
    let text = if a.det {
        format!("{}\n", factored)
    } else {
        let mut s = String::new();
        for (i, d) in basis.iter().enumerate() {
            s.push_str(&format!("{:>3}  {}\n", i, d));
        }
        for row in m.to_rows() {
            s.push_str(&row.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" | "));
            s.push('\n');
        }
        s.push_str(&format!("det = {}\n", factored));
        s
    };
    let json = json!({
        "n": a.n,
        "basis": basis.iter().map(diagram_to_json).collect::<Vec<_>>(),
        "matrix": m.to_rows().iter().map(|r| r.iter().map(poly_to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "det": poly_to_json(&det),
        "det_factored": factored,
    });
    Ok(Output { json, text })
}

fn order_name(o: BlockOrder) -> &'static str {
    match o {
        BlockOrder::Less => "less",
        BlockOrder::Greater => "greater",
        BlockOrder::Equal => "equal",
        BlockOrder::Incomparable => "incomparable",
    }
}

fn blocks(t: &Param, max_size: usize) -> Result<Output> {
    let classes = classes_up_to(t, max_size);
    let mut text = String::new();
    let mut docs = Vec::new();
    for (c, members) in &classes {
        let names: Vec<String> = members.iter().map(|y| y.to_string()).collect();
        if c.is_trivial() {
            text.push_str(&format!("trivial     {}\n", names.join(" ")));
        } else {
            let (min, _) = c.nontrivial()?;
            text.push_str(&format!("nontrivial  {}  (minimal {})\n", names.join(" "), min));
        }
        docs.push(block_class_to_json(c, members));
    }
    let nontrivial: Vec<usize> = (0..classes.len()).filter(|&i| !classes[i].0.is_trivial()).collect();
    let mut relations = Vec::new();
    for (x, &i) in nontrivial.iter().enumerate() {
        for &j in &nontrivial[x + 1..] {
            let o = block_compare(&classes[i].0, &classes[j].0)?;
            let (a, b) = (classes[i].0.nontrivial()?.0, classes[j].0.nontrivial()?.0);
            text.push_str(&format!("order  {} vs {}: {}\n", a, b, order_name(o)));
            relations.push(json!({ "a": i, "b": j, "relation": order_name(o) }));
        }
    }
    Ok(Output {
        json: json!({ "t": param_to_string(t), "max_size": max_size, "classes": docs, "order": relations }),
        text,
    })
}
