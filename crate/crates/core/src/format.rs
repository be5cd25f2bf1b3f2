//! JSON and text renderings. Indices in files are 1-based.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::cohomology::Cocycle;
use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, Matrix, Vector};
use crate::isomorphism::{Fingerprint, PairwiseReport};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductJson {
    pub i: usize,
    pub j: usize,
    pub value: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub products: Vec<ProductJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffJson {
    pub i: usize,
    pub j: usize,
    pub c: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleJson {
    pub dim: usize,
    pub coeffs: Vec<CoeffJson>,
}

fn json_error(e: serde_json::Error) -> Error {
    let msg = e.to_string();
    let msg = msg.split(" at line ").next().unwrap_or_default();
    Error::Format(format!("line {} column {}: {msg}", e.line(), e.column()))
}

fn strings(v: &[crate::exact::Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

/// 1-based `(i, j)` to 0-based, rejecting index 0.
fn zero_based(i: usize, j: usize, dim: usize) -> Result<(usize, usize)> {
    for idx in [i, j] {
        if idx == 0 || idx > dim {
            return Err(Error::IndexOutOfRange { index: idx, dim });
        }
    }
    Ok((i - 1, j - 1))
}

impl AlgebraJson {
    pub fn from_algebra(a: &Algebra) -> Self {
        AlgebraJson {
            dim: a.dim(),
            name: a.name().map(str::to_string),
            products: a
                .products()
                .into_iter()
                .map(|((i, j), v)| ProductJson {
                    i: i + 1,
                    j: j + 1,
                    value: strings(v),
                })
                .collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<Algebra> {
        let mut products = Vec::with_capacity(self.products.len());
        for p in &self.products {
            let ij = zero_based(p.i, p.j, self.dim)?;
            let v = p
                .value
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<Vector>>()?;
            products.push((ij, v));
        }
        let a = Algebra::new(self.dim, products)?;
        Ok(match &self.name {
            Some(n) => a.with_name(n.clone()),
            None => a,
        })
    }
}

pub fn algebra_to_json(a: &Algebra) -> String {
    serde_json::to_string_pretty(&AlgebraJson::from_algebra(a)).expect("serializable")
}

/// Parses and validates an algebra file; syntax errors carry line and column.
pub fn algebra_from_json(text: &str) -> Result<Algebra> {
    let raw: AlgebraJson = serde_json::from_str(text).map_err(json_error)?;
    raw.to_algebra()
}

impl CocycleJson {
    pub fn from_cocycle(c: &Cocycle) -> Self {
        CocycleJson {
            dim: c.dim(),
            coeffs: c
                .terms()
                .into_iter()
                .map(|((i, j), x)| CoeffJson {
                    i: i + 1,
                    j: j + 1,
                    c: format_rational(x),
                })
                .collect(),
        }
    }

    pub fn to_cocycle(&self) -> Result<Cocycle> {
        let mut out = Cocycle::zero(self.dim);
        let mut seen = HashSet::new();
        for t in &self.coeffs {
            let (i, j) = zero_based(t.i, t.j, self.dim)?;
            if i >= j {
                return Err(Error::UnorderedPair { i: t.i, j: t.j });
            }
            if !seen.insert((i, j)) {
                return Err(Error::DuplicatePair { i: t.i, j: t.j });
            }
            out.set(i, j, parse_rational(&t.c)?)?;
        }
        Ok(out)
    }
}

pub fn cocycle_to_json(c: &Cocycle) -> Value {
    serde_json::to_value(CocycleJson::from_cocycle(c)).expect("serializable")
}

pub fn cocycle_from_json(text: &str) -> Result<Cocycle> {
    let raw: CocycleJson = serde_json::from_str(text).map_err(json_error)?;
    raw.to_cocycle()
}

/// Rows of rational strings.
pub fn matrix_to_json(m: &Matrix) -> Value {
    json!(m.to_rows().iter().map(|r| strings(r)).collect::<Vec<_>>())
}

pub fn fingerprint_to_json(f: &Fingerprint) -> Value {
    serde_json::to_value(f).expect("serializable")
}

pub fn fingerprint_text(f: &Fingerprint) -> String {
    let seq = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let flag = |b: bool| if b { "yes" } else { "no" };
    let mut out = String::new();
    out += &format!("dim {}\n", f.dim);
    out += &format!("lower central dims {}\n", seq(&f.lower_central));
    out += &format!("derived dims {}\n", seq(&f.derived));
    out += &format!("upper central dims {}\n", seq(&f.upper_central));
    out += &format!("dim Ann {}\n", f.ann);
    out += &format!("dim A2 ∩ Ann {}\n", f.square_meet_ann);
    out += &format!("dim Z2_T {}\n", f.z2t);
    out += &format!("dim B2 {}\n", f.b2);
    out += &format!("dim Der {}\n", f.derivations);
    out += &format!(
        "jacobi {}, malcev {}, tortkara {}, metabelian {}\n",
        flag(f.jacobi),
        flag(f.malcev),
        flag(f.tortkara),
        flag(f.metabelian)
    );
    out += &match f.nilpotency_index {
        Some(k) => format!("nilpotency index {k}\n"),
        None => "not nilpotent\n".to_string(),
    };
    out
}

pub fn report_to_json(r: &PairwiseReport) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "algebras": r.labels,
        "fingerprints": r.fingerprints,
        "groups": r.groups.iter().map(|g| g.iter().map(|&i| &r.labels[i]).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "pairs": r.pairs.iter().map(|p| {
            let mut o = json!({
                "a": r.labels[p.a],
                "b": r.labels[p.b],
                "status": p.status.as_str(),
            });
            if let Some(m) = &p.witness {
                o["witness"] = matrix_to_json(m);
            }
            o
        }).collect::<Vec<_>>(),
    })
}

/// Groups with more than one member, then every pair that is not certified
/// distinct.
pub fn report_text(r: &PairwiseReport) -> String {
    let mut out = format!(
        "{} algebras, {} fingerprint classes\n",
        r.labels.len(),
        r.groups.len()
    );
    for g in r.groups.iter().filter(|g| g.len() > 1) {
        let names: Vec<&str> = g.iter().map(|&i| r.labels[i].as_str()).collect();
        out += &format!("shared fingerprint: {}\n", names.join(", "));
    }
    let mut certified = 0;
    for p in &r.pairs {
        if p.witness.is_none() && p.status == crate::isomorphism::PairStatus::DistinctCertified {
            certified += 1;
            continue;
        }
        out += &format!("{} vs {}: {}", r.labels[p.a], r.labels[p.b], p.status.as_str());
        if let Some(m) = &p.witness {
            out += &format!(" {m}");
        }
        out.push('\n');
    }
    out += &format!("{certified} pairs distinct-certified\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::get_plain;

    #[test]
    fn algebra_round_trip() {
        let a = get_plain("T5_08").unwrap();
        let back = algebra_from_json(&algebra_to_json(&a)).unwrap();
        assert!(back.same_table(&a));
        assert_eq!(back.name(), a.name());
    }

    #[test]
    fn one_based_file() {
        let a = algebra_from_json(r#"{"dim":3,"products":[{"i":1,"j":2,"value":["0","0","1/2"]}]}"#).unwrap();
        assert!(a.same_table(&Algebra::parse(3, "e1e2=1/2e3").unwrap()));
    }

    #[test]
    fn rejects_bad_files() {
        let unordered = r#"{"dim":3,"products":[{"i":2,"j":1,"value":["0","0","1"]}]}"#;
        assert_eq!(algebra_from_json(unordered).unwrap_err(), Error::UnorderedPair { i: 2, j: 1 });
        let same = r#"{"dim":3,"products":[{"i":1,"j":1,"value":["1","0","0"]}]}"#;
        assert_eq!(algebra_from_json(same).unwrap_err(), Error::UnorderedPair { i: 1, j: 1 });
        let dup = r#"{"dim":3,"products":[{"i":1,"j":2,"value":["0","0","1"]},{"i":1,"j":2,"value":["0","0","2"]}]}"#;
        assert_eq!(algebra_from_json(dup).unwrap_err(), Error::DuplicatePair { i: 1, j: 2 });
        let zero = r#"{"dim":3,"products":[{"i":0,"j":2,"value":["0","0","1"]}]}"#;
        assert_eq!(algebra_from_json(zero).unwrap_err(), Error::IndexOutOfRange { index: 0, dim: 3 });
        let short = r#"{"dim":3,"products":[{"i":1,"j":2,"value":["0","1"]}]}"#;
        assert!(matches!(algebra_from_json(short), Err(Error::DimensionMismatch { .. })));
        match algebra_from_json("{\"dim\": 3,\n \"products\": [}") {
            Err(Error::Format(m)) => assert!(m.starts_with("line 2 column"), "{m}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cocycle_round_trip() {
        let c = Cocycle::parse(5, "1/2*D12 + D15 - 2*D24").unwrap();
        let text = cocycle_to_json(&c).to_string();
        assert_eq!(cocycle_from_json(&text).unwrap(), c);
        assert!(text.contains(r#""c":"1/2""#));
    }
}
