//! Command-line frontend for the `zcross` library.
//!
//! Every command reads and writes exact JSON (see `docs/json-formats.md`
//! in the repository root).  Exit codes: 0 = success / all checks pass,
//! 1 = verification found violations (listed in the JSON output),
//! 2 = input error.

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use zcross::abgroup::Elem;
use zcross::builders::{build_glm, build_ty, epsilon_from_geometry};
use zcross::condense::ty_condense;
use zcross::crossedcat::{CrossedCat, Report};
use zcross::equivariant::{equivariantise, EqLabel};
use zcross::lattice::LatticeData;
use zcross::scalar::{format_rational, CycSum};
use zcross::serialize;

#[derive(Parser)]
#[command(name = "zcross", version, about = "Exact construction, condensation, and verification of braided Z2-crossed extensions of pointed categories", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the discriminant form of an even lattice from its Gram matrix
    Discriminant {
        /// Path to {"gram": [[...]]}
        #[arg(long)]
        gram: String,
    },
    /// Gauss-sum signature mod 8 of a quadratic form
    Gauss {
        /// Path to a quadratic-form JSON file
        #[arg(long)]
        form: String,
    },
    /// Condense a quadratic form by an isotropic subgroup
    Condense {
        #[arg(long)]
        form: String,
        /// Path to {"generators": [[...]]}
        #[arg(long)]
        isotropic: String,
    },
    /// Build the odd-order twisted extension of a pointed category
    Ty {
        #[arg(long)]
        form: String,
        /// Sign choice, +1 or -1
        #[arg(long, allow_hyphen_values = true)]
        eps: String,
    },
    /// Build the lattice-model twisted extension from a strongly even Gram matrix
    Glm {
        #[arg(long)]
        gram: String,
        /// Sign choice, +1 or -1
        #[arg(long, allow_hyphen_values = true)]
        eps: String,
    },
    /// Sign prediction e(-d0/8)·(2/n) from fixed-sublattice geometry
    Epsilon {
        #[arg(long, allow_hyphen_values = true)]
        d0: i64,
        #[arg(long = "gamma-order")]
        gamma_order: i64,
    },
    /// Equivariantise a crossed category and run the modular-data checks
    Equivariantise {
        /// Path to a crossed-category JSON file
        #[arg(long)]
        cat: String,
    },
    /// Verify all coherence axioms of a crossed category
    Verify {
        #[arg(long)]
        cat: String,
        /// Cap on the number of verified tuples per axiom family
        #[arg(long)]
        budget: Option<u64>,
        /// Parallelism degree (accepted for interface stability; the
        /// verifier currently runs sequentially)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Condense a crossed category by an isotropic subgroup of its untwisted sector
    TyCondense {
        #[arg(long)]
        cat: String,
        #[arg(long)]
        isotropic: String,
    },
}

fn main() {
    std::process::exit(run());
}

fn fail(msg: impl std::fmt::Display) -> ! {
    eprintln!("error: {}", msg);
    std::process::exit(2);
}

fn read_json(path: &str) -> Value {
    let text = std::fs::read_to_string(path)
        .unwrap_or_else(|e| fail(format_args!("cannot read {}: {}", path, e)));
    serde_json::from_str(&text)
        .unwrap_or_else(|e| fail(format_args!("cannot parse {}: {}", path, e)))
}

fn parse_eps(s: &str) -> i8 {
    match s {
        "+1" | "1" => 1,
        "-1" => -1,
        _ => fail(format_args!("--eps must be +1 or -1, got {:?}", s)),
    }
}

fn read_cat(path: &str) -> CrossedCat {
    serialize::cat_from_json(&read_json(path)).unwrap_or_else(|e| fail(e))
}

fn read_generators(path: &str) -> Vec<Elem> {
    serialize::generators_from_json(&read_json(path)).unwrap_or_else(|e| fail(e))
}

fn print_json(v: &Value) {
    print!("{}", serialize::to_string(v));
}

fn report_json(r: &Report) -> Value {
    json!({
        "pass": r.pass(),
        "checked": r.checked,
        "complete": r.complete,
        "violations": r.violations,
    })
}

fn cycsum_json(c: &CycSum) -> Value {
    json!({
        "n": c.n,
        "coeffs": c.coeffs.iter().map(|x| format_rational(*x)).collect::<Vec<_>>(),
    })
}

fn run() -> i32 {
    match Cli::parse().command {
        Command::Discriminant { gram } => {
            let g = serialize::gram_from_json(&read_json(&gram)).unwrap_or_else(|e| fail(e));
            let lat = LatticeData::new(g).unwrap_or_else(|e| fail(e));
            let pipe = lat.discriminant().unwrap_or_else(|e| fail(e));
            print_json(&serialize::form_to_json(&pipe.form));
            0
        }
        Command::Gauss { form } => {
            let q = serialize::form_from_json(&read_json(&form)).unwrap_or_else(|e| fail(e));
            let s = q.gauss_signature().unwrap_or_else(|e| fail(e));
            print_json(&json!({ "signature": s }));
            0
        }
        Command::Condense { form, isotropic } => {
            let q = serialize::form_from_json(&read_json(&form)).unwrap_or_else(|e| fail(e));
            let gens = read_generators(&isotropic);
            let c = q.condense(&gens).unwrap_or_else(|e| fail(e));
            print_json(&serialize::form_to_json(&c.induced));
            0
        }
        Command::Ty { form, eps } => {
            let q = serialize::form_from_json(&read_json(&form)).unwrap_or_else(|e| fail(e));
            let cat = build_ty(&q, parse_eps(&eps)).unwrap_or_else(|e| fail(e));
            print_json(&serialize::cat_to_json(&cat));
            0
        }
        Command::Glm { gram, eps } => {
            let g = serialize::gram_from_json(&read_json(&gram)).unwrap_or_else(|e| fail(e));
            let lat = LatticeData::new(g).unwrap_or_else(|e| fail(e));
            let cat = build_glm(&lat, parse_eps(&eps)).unwrap_or_else(|e| fail(e));
            print_json(&serialize::cat_to_json(&cat));
            0
        }
        Command::Epsilon { d0, gamma_order } => {
            let e = epsilon_from_geometry(d0, gamma_order).unwrap_or_else(|e| fail(e));
            print_json(&json!({ "epsilon": e }));
            0
        }
        Command::Equivariantise { cat } => {
            let c = read_cat(&cat);
            let e = equivariantise(&c).unwrap_or_else(|e| fail(e));
            let fusion_report = e.check_fusion();
            let md = e.modular_checks();
            let ribbon = e.ribbon_check();
            let doubling = e.global_dim_sq()
                == zcross::scalar::Rational::from_integer(2) * e.underlying_dim_sq();
            let simples: Vec<Value> = e
                .simples
                .iter()
                .map(|s| match &s.label {
                    EqLabel::Fixed { object, sign } => json!({"fixed": object, "sign": sign}),
                    EqLabel::Free { orbit } => json!({"free": [orbit.0, orbit.1]}),
                })
                .collect();
            let s_tilde: Vec<Vec<Value>> = e
                .s_tilde()
                .iter()
                .map(|row| row.iter().map(|x| cycsum_json(&x.to_cycsum())).collect())
                .collect();
            let pass = fusion_report.pass()
                && md.symmetric
                && md.invertible
                && md.verlinde_ok == Some(true)
                && ribbon.pass()
                && doubling;
            print_json(&json!({
                "simples": simples,
                "fusion": e.fusion,
                "dims": e.dims().iter().map(|d| json!({"m": format_rational(d.m), "r": format_rational(d.phase.exponent())})).collect::<Vec<_>>(),
                "theta": e.thetas().iter().map(|p| format_rational(p.exponent())).collect::<Vec<_>>(),
                "s_tilde": s_tilde,
                "checks": {
                    "fusion_ring": report_json(&fusion_report),
                    "symmetric": md.symmetric,
                    "invertible": md.invertible,
                    "verlinde": md.verlinde_ok,
                    "ribbon": report_json(&ribbon),
                    "global_dim_doubles": doubling,
                    "conductor": md.conductor,
                },
                "pass": pass,
            }));
            if pass {
                0
            } else {
                1
            }
        }
        Command::Verify { cat, budget, jobs: _ } => {
            let c = read_cat(&cat);
            let fusion = c.verify_fusion_ring();
            let pentagon = c.verify_pentagon(budget);
            let braiding = c.verify_crossed_braiding(budget);
            let pass = fusion.pass() && pentagon.pass() && braiding.pass();
            print_json(&json!({
                "fusion_ring": report_json(&fusion),
                "pentagon": report_json(&pentagon),
                "crossed_braiding": report_json(&braiding),
                "pass": pass,
            }));
            if pass {
                0
            } else {
                1
            }
        }
        Command::TyCondense { cat, isotropic } => {
            let c = read_cat(&cat);
            let gens = read_generators(&isotropic);
            let out = ty_condense(&c, &gens).unwrap_or_else(|e| fail(e));
            print_json(&serialize::cat_to_json(&out));
            0
        }
    }
}
