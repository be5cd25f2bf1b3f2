//! `tortkara`: command-line front end of the workbench.
//!
//! Exit status is 0 on success, 1 when a mathematical check fails and 2 on
//! usage, I/O or validation errors.

mod source;

use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tortkara::catalog::{self, Filter, H2tm};
use tortkara::cohomology::{central_extension, cohomology, decompose, Cohomology};
use tortkara::exact::{format_rational, parse_rational, Rational};
use tortkara::format::{
    algebra_to_json, cocycle_from_json, cocycle_to_json, fingerprint_text, fingerprint_to_json,
    matrix_to_json, report_text, report_to_json, AlgebraJson, SCHEMA_VERSION,
};
use tortkara::isomorphism::{
    fingerprint, pairwise_report, search_isomorphism, SearchOutcome, DEFAULT_BUDGET,
};
use tortkara::verify::{self, Options, Status};
use tortkara::{Algebra, Cocycle, Error, Flavor, IdentityCheck, IdentityKind};

use source::{load, parse_query, Loaded};

#[derive(Parser)]
#[command(name = "tortkara", version, about = "Exact computations with nilpotent Tortkara algebras")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Value for the parameter of parametric catalog inputs that do not set it.
    #[arg(long, global = true, value_parser = rational_arg, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Verb {
    /// Check a polynomial identity on a basis.
    Check {
        /// One of anticommutative-consistency, jacobi, tortkara, malcev, metabelian, or all.
        #[arg(long, default_value = "tortkara")]
        identity: String,
        input: String,
    },
    /// Second cohomology dimensions and class representatives.
    Cohomology {
        /// Restrict to one flavor and list representatives.
        #[arg(long)]
        flavor: Option<Flavor>,
        input: String,
    },
    /// Central extension by cocycles, given as Δ combinations or Cocycle JSON files.
    Extend {
        input: String,
        #[arg(long = "theta", required = true)]
        thetas: Vec<String>,
    },
    /// Write the algebra as an extension of its quotient by the annihilator.
    Decompose { input: String },
    /// Isomorphism invariants.
    Fingerprint { input: String },
    /// Isomorphism search for two inputs, or a pairwise report for more.
    Iso {
        #[arg(required = true, num_args = 2..)]
        inputs: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Browse the built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run every verification criterion and print one line per claim.
    VerifyPaper {
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List {
        #[arg(long)]
        dim: Option<usize>,
        /// Only entries with a stored automorphism family.
        #[arg(long)]
        family: bool,
    },
    Show { name: String },
    /// Algebra JSON of an entry, e.g. `T6_09?alpha=1/2`.
    Export { name: String },
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub fn from_error(e: Error) -> Self {
        let code = match e {
            Error::NotACocycle(_)
            | Error::DependentClasses
            | Error::NotMalcev
            | Error::ZeroAnnihilator
            | Error::ZeroQuotient => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Text or JSON output plus the exit status.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(f) = configure_threads() {
        eprintln!("error: {}", f.message);
        return ExitCode::from(f.code);
    }
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("TORTKARA_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::usage(format!("TORTKARA_THREADS must be a positive integer, got `{v}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::usage(e.to_string()))
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let alpha = cli.alpha.as_ref();
    match &cli.verb {
        Verb::Check { identity, input } => check(&load(input, alpha)?, identity),
        Verb::Cohomology { flavor, input } => cohomology_cmd(&load(input, alpha)?, *flavor),
        Verb::Extend { input, thetas } => extend(&load(input, alpha)?, thetas),
        Verb::Decompose { input } => decompose_cmd(&load(input, alpha)?),
        Verb::Fingerprint { input } => {
            let l = load(input, alpha)?;
            let f = fingerprint(&l.algebra);
            Ok(Outcome {
                text: fingerprint_text(&f),
                json: json!({
                    "schema_version": SCHEMA_VERSION,
                    "algebra": l.label,
                    "fingerprint": fingerprint_to_json(&f),
                }),
                ok: true,
            })
        }
        Verb::Iso { inputs, budget } => {
            let loaded = inputs.iter().map(|s| load(s, alpha)).collect::<Result<Vec<_>, _>>()?;
            iso(loaded, *budget)
        }
        Verb::Catalog { action } => catalog_cmd(action, alpha),
        Verb::VerifyPaper { budget } => Ok(verify_cmd(*budget)),
    }
}

fn witness_json(c: &IdentityCheck) -> Value {
    match c.witness() {
        None => Value::Null,
        Some(w) => json!({
            "indices": w.indices.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "lhs": w.lhs.iter().map(format_rational).collect::<Vec<_>>(),
            "rhs": w.rhs.iter().map(format_rational).collect::<Vec<_>>(),
        }),
    }
}

fn check(l: &Loaded, identity: &str) -> Result<Outcome, Failure> {
    let kinds: Vec<IdentityKind> = if identity == "all" {
        IdentityKind::ALL.to_vec()
    } else {
        vec![identity.parse().map_err(Failure::from_error)?]
    };
    let results: Vec<(IdentityKind, IdentityCheck)> =
        kinds.iter().map(|&k| (k, l.algebra.check_identity(k))).collect();
    let line = |c: &IdentityCheck| match c.witness() {
        None => "holds".to_string(),
        Some(w) => format!("fails at {w}"),
    };
    let text = if results.len() == 1 {
        format!("{}\n", line(&results[0].1))
    } else {
        results.iter().map(|(k, c)| format!("{k}: {}\n", line(c))).collect()
    };
    let checks: Vec<Value> = results
        .iter()
        .map(|(k, c)| json!({"identity": k.as_str(), "holds": c.holds(), "witness": witness_json(c)}))
        .collect();
    Ok(Outcome {
        text,
        json: json!({"schema_version": SCHEMA_VERSION, "algebra": l.label, "checks": checks}),
        ok: results.iter().all(|(_, c)| c.holds()),
    })
}

fn cohomology_json(h: &Cohomology) -> Value {
    json!({
        "dim": h.dim(),
        "z2_dim": h.cocycles.dim(),
        "b2_dim": h.coboundaries.dim(),
        "representatives": h.reps.iter().map(cocycle_to_json).collect::<Vec<_>>(),
    })
}

fn cohomology_cmd(l: &Loaded, flavor: Option<Flavor>) -> Result<Outcome, Failure> {
    let a = &l.algebra;
    if let Some(fl) = flavor {
        let h = cohomology(a, fl).map_err(Failure::from_error)?;
        let name = match fl {
            Flavor::Tortkara => "H2_T",
            Flavor::MalcevCompatible => "H2_TM",
        };
        let mut text = format!(
            "{name} dim {} (Z2 dim {}, B2 dim {})\n",
            h.dim(),
            h.cocycles.dim(),
            h.coboundaries.dim()
        );
        for r in &h.reps {
            text += &format!("[{r}]\n");
        }
        return Ok(Outcome {
            text,
            json: json!({
                "schema_version": SCHEMA_VERSION,
                "algebra": l.label,
                "flavor": fl.as_str(),
                "cohomology": cohomology_json(&h),
            }),
            ok: true,
        });
    }
    let t = cohomology(a, Flavor::Tortkara).map_err(Failure::from_error)?;
    let tm = match cohomology(a, Flavor::MalcevCompatible) {
        Ok(h) => Some(h),
        Err(Error::NotMalcev) => None,
        Err(e) => return Err(Failure::from_error(e)),
    };
    let tm_text = tm.as_ref().map_or("undefined".to_string(), |h| h.dim().to_string());
    Ok(Outcome {
        text: format!("H2_TM dim {tm_text}, H2_T dim {}\n", t.dim()),
        json: json!({
            "schema_version": SCHEMA_VERSION,
            "algebra": l.label,
            "tortkara": cohomology_json(&t),
            "malcev_compatible": tm.as_ref().map(cohomology_json),
        }),
        ok: true,
    })
}

fn parse_theta(dim: usize, s: &str) -> Result<Cocycle, Failure> {
    if Path::new(s).is_file() {
        let text = std::fs::read_to_string(s).map_err(|e| Failure::usage(format!("{s}: {e}")))?;
        let c = cocycle_from_json(&text).map_err(|e| Failure::usage(format!("{s}: {e}")))?;
        if c.dim() != dim {
            return Err(Failure::from_error(Error::DimensionMismatch {
                expected: dim,
                found: c.dim(),
            }));
        }
        Ok(c)
    } else {
        Cocycle::parse(dim, s).map_err(Failure::from_error)
    }
}

fn algebra_json(a: &Algebra) -> Value {
    serde_json::to_value(AlgebraJson::from_algebra(a)).expect("serializable")
}

fn extend(l: &Loaded, thetas: &[String]) -> Result<Outcome, Failure> {
    let n = l.algebra.dim();
    let thetas = thetas.iter().map(|s| parse_theta(n, s)).collect::<Result<Vec<_>, _>>()?;
    let ext = central_extension(&l.algebra, &thetas).map_err(Failure::from_error)?;
    Ok(Outcome {
        text: format!("dim {}: {ext}\n", ext.dim()),
        json: json!({"schema_version": SCHEMA_VERSION, "base": l.label, "algebra": algebra_json(&ext)}),
        ok: true,
    })
}

fn decompose_cmd(l: &Loaded) -> Result<Outcome, Failure> {
    let d = decompose(&l.algebra).map_err(Failure::from_error)?;
    let base = d.base();
    let mut text = format!("dim Ann {}\n", l.algebra.dim() - base.dim());
    text += &format!("quotient dim {}: {base}\n", base.dim());
    for (k, t) in d.thetas.iter().enumerate() {
        text += &format!("θ{} = {t}\n", k + 1);
    }
    text += &format!("adapted: {}\n", d.adapted);
    text += &format!("adapted basis {}\n", d.quotient.adapted_basis);
    Ok(Outcome {
        text,
        json: json!({
            "schema_version": SCHEMA_VERSION,
            "algebra": l.label,
            "annihilator_dim": l.algebra.dim() - base.dim(),
            "quotient": algebra_json(base),
            "thetas": d.thetas.iter().map(cocycle_to_json).collect::<Vec<_>>(),
            "adapted": algebra_json(&d.adapted),
            "adapted_basis": matrix_to_json(&d.quotient.adapted_basis),
        }),
        ok: true,
    })
}

fn iso(loaded: Vec<Loaded>, budget: usize) -> Result<Outcome, Failure> {
    if loaded.len() > 2 {
        let items: Vec<(String, Algebra)> = loaded.into_iter().map(|l| (l.label, l.algebra)).collect();
        let report = pairwise_report(&items, budget);
        return Ok(Outcome {
            text: report_text(&report),
            json: report_to_json(&report),
            ok: true,
        });
    }
    let (a, b) = (&loaded[0], &loaded[1]);
    let outcome = search_isomorphism(&a.algebra, &b.algebra, budget);
    let (status, text, witness, ok) = match &outcome {
        SearchOutcome::Witness(m) => ("isomorphic-witnessed", format!("isomorphic\nwitness {m}\n"), Some(m), true),
        SearchOutcome::NotIsomorphic => (
            "distinct-certified",
            "not isomorphic: fingerprints differ\n".to_string(),
            None,
            false,
        ),
        SearchOutcome::NoneFound => (
            "undecided",
            format!("undecided: no witness within budget {budget}\n"),
            None,
            false,
        ),
    };
    let mut j = json!({"schema_version": SCHEMA_VERSION, "a": a.label, "b": b.label, "status": status});
    if let Some(m) = witness {
        j["witness"] = matrix_to_json(m);
    }
    Ok(Outcome { text, json: j, ok })
}

fn catalog_cmd(action: &CatalogAction, alpha: Option<&Rational>) -> Result<Outcome, Failure> {
    match action {
        CatalogAction::List { dim, family } => {
            let names = catalog::list_names(Filter {
                dim: *dim,
                family: family.then_some(true),
            });
            let mut text = String::new();
            for n in &names {
                match catalog::lookup(n) {
                    Ok(e) => text += &format!("{n}\t{}\tdim {}\n", e.display, e.dim),
                    Err(_) => text += &format!("{n}\t𝔑\tzero algebra, needs dim\n"),
                }
            }
            Ok(Outcome {
                text,
                json: json!({"schema_version": SCHEMA_VERSION, "names": names}),
                ok: true,
            })
        }
        CatalogAction::Show { name } => {
            let e = catalog::lookup(name).map_err(Failure::from_error)?;
            let x = &e.expected;
            let h2tm = match x.h2tm {
                Some(H2tm::Dim(d)) => json!(d),
                Some(H2tm::Undefined) => json!("undefined"),
                None => Value::Null,
            };
            let mut text = format!("{} ({})\ndim {}\ntable {}\n", e.display, e.name, e.dim, e.table);
            if !e.params.is_empty() {
                text += &format!("parameters {}\n", e.params.join(", "));
            }
            if let Some(ext) = &e.extension {
                text += &format!("extension of {} by {}\n", ext.base, ext.cocycles.join(", "));
            }
            if x.h2t.is_some() || x.h2tm.is_some() {
                let show = |v: &Value| if v.is_null() { "-".to_string() } else { v.to_string().trim_matches('"').to_string() };
                text += &format!("expected H2_TM dim {}, H2_T dim {}\n", show(&h2tm), show(&json!(x.h2t)));
            }
            if e.family.is_some() {
                text += "automorphism family stored\n";
            }
            if let Some(note) = e.note {
                text += &format!("note: {note}\n");
            }
            Ok(Outcome {
                text,
                json: json!({
                    "schema_version": SCHEMA_VERSION,
                    "name": e.name,
                    "display": e.display,
                    "dim": e.dim,
                    "table": e.table,
                    "params": e.params,
                    "extension": e.extension.map(|x| json!({"base": x.base, "cocycles": x.cocycles})),
                    "expected": {
                        "h2tm": h2tm,
                        "h2t": x.h2t,
                        "h2tm_generators": x.h2tm_gens,
                        "h2t_extra_generators": x.h2t_extra,
                    },
                    "family": e.family.is_some(),
                    "note": e.note,
                }),
                ok: true,
            })
        }
        CatalogAction::Export { name } => {
            let (base, _) = parse_query(name)?;
            let l = load(&format!("catalog:{name}"), alpha)?;
            let a = l.algebra.with_name(base);
            let text = algebra_to_json(&a);
            Ok(Outcome {
                json: serde_json::from_str(&text).expect("valid json"),
                text: text + "\n",
                ok: true,
            })
        }
    }
}

fn verify_cmd(budget: usize) -> Outcome {
    let opts = Options {
        budget,
        ..Options::default()
    };
    let claims = verify::verify_paper(&opts);
    let summary = verify::per_criterion(&claims);
    let mut text: String = claims.iter().map(|c| format!("{c}\n")).collect();
    for (c, status, n) in &summary {
        text += &format!("criterion {c}: {status} ({n} claims)\n");
    }
    let failed = claims.iter().filter(|c| c.status == Status::Fail).count();
    text += &format!("{} claims, {failed} failed\n", claims.len());
    Outcome {
        json: json!({
            "schema_version": SCHEMA_VERSION,
            "claims": claims,
            "criteria": summary.iter().map(|(c, s, n)| json!({"criterion": c, "status": s, "claims": n})).collect::<Vec<_>>(),
        }),
        text,
        ok: verify::all_pass(&claims),
    }
}
