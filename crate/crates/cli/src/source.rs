//! Input sources: a path to an Algebra JSON file, or `catalog:<name>[?k=v,...]`.

use std::collections::BTreeMap;
use std::fs;

use tortkara::exact::{parse_rational, Rational};
use tortkara::format::algebra_from_json;
use tortkara::{catalog, Algebra};

use crate::Failure;

pub struct Loaded {
    pub label: String,
    pub algebra: Algebra,
}

/// `alpha` fills in the parameter of parametric entries that do not set it.
pub fn load(source: &str, alpha: Option<&Rational>) -> Result<Loaded, Failure> {
    match source.strip_prefix("catalog:") {
        Some(rest) => load_catalog(rest, alpha),
        None => {
            let text = fs::read_to_string(source)
                .map_err(|e| Failure::usage(format!("{source}: {e}")))?;
            let algebra =
                algebra_from_json(&text).map_err(|e| Failure::usage(format!("{source}: {e}")))?;
            let label = algebra.name().unwrap_or(source).to_string();
            Ok(Loaded { label, algebra })
        }
    }
}

pub fn parse_query(rest: &str) -> Result<(String, BTreeMap<String, Rational>), Failure> {
    let (name, query) = rest.split_once('?').unwrap_or((rest, ""));
    let mut params = BTreeMap::new();
    for item in query.split(',').filter(|s| !s.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("bad parameter `{item}`, expected key=value")))?;
        let key = match k.trim() {
            "α" => "alpha",
            other => other,
        };
        let value = parse_rational(v).map_err(Failure::from_error)?;
        if params.insert(key.to_string(), value).is_some() {
            return Err(Failure::usage(format!("parameter `{key}` given twice")));
        }
    }
    Ok((name.to_string(), params))
}

fn load_catalog(rest: &str, alpha: Option<&Rational>) -> Result<Loaded, Failure> {
    let (name, mut params) = parse_query(rest)?;
    if let Some(a) = alpha {
        let parametric = catalog::lookup(&name).is_ok_and(|e| e.params.contains(&"alpha"));
        if parametric && !params.contains_key("alpha") {
            params.insert("alpha".into(), a.clone());
        }
    }
    let algebra = catalog::get(&name, &params).map_err(Failure::from_error)?;
    Ok(Loaded {
        label: catalog::display_name(&name, &params),
        algebra,
    })
}
