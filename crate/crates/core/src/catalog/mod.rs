//! Built-in registry of named algebras, automorphism families, generic
//! cocycle matrices and expected cohomology data.

mod data;

use std::collections::BTreeMap;

use crate::algebra::{parse_table, Algebra};
use crate::cohomology::{ActionTarget, AutFamily, Cocycle, TargetCheck};
use crate::error::{Error, Result};
use crate::exact::{parse_rational, rat, Poly, Rational};

/// Sample values for the parameter of the one-parameter 6-dimensional
/// families; closed under `α ↦ −α−1`.
pub const ALPHA_GRID: [i64; 6] = [0, 1, 2, -1, -2, -3];

/// Dimension of the Malcev-compatible cohomology, where it is defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum H2tm {
    Dim(usize),
    /// The algebra is not Malcev.
    Undefined,
}

#[derive(Debug, Clone, Copy)]
pub struct Expected {
    pub h2tm: Option<H2tm>,
    pub h2t: Option<usize>,
    /// Class generators of `H²_TM`, as Δ combinations.
    pub h2tm_gens: &'static [&'static str],
    /// Generators completing `h2tm_gens` to `H²_T`.
    pub h2t_extra: &'static [&'static str],
    pub tortkara: bool,
    pub malcev: Option<bool>,
    pub metabelian: Option<bool>,
    pub nilpotent: Option<bool>,
    pub ann_dim: Option<usize>,
}

#[derive(Debug, Clone, Copy)]
pub struct Extension {
    pub base: &'static str,
    pub cocycles: &'static [&'static str],
}

#[derive(Debug, Clone, Copy)]
pub struct Target {
    pub label: &'static str,
    /// `(weight, i, j)` with 1-based positions in `φᵀ M φ`.
    pub entries: &'static [(i64, usize, usize)],
    pub expected: &'static str,
}

#[derive(Debug, Clone, Copy)]
pub struct FamilyData {
    pub rows: &'static [&'static [&'static str]],
    /// The determinant as printed; the family is valid where it is nonzero.
    pub det: &'static str,
    /// Upper-triangle entries `((i, j), α-expression)` of the generic cocycle
    /// matrix, 1-based.
    pub generic: &'static [((usize, usize), &'static str)],
    pub targets: &'static [Target],
}

#[derive(Debug, Clone, Copy)]
pub struct Entry {
    pub name: &'static str,
    pub display: &'static str,
    pub dim: usize,
    pub table: &'static str,
    pub params: &'static [&'static str],
    pub expected: Expected,
    pub extension: Option<Extension>,
    pub family: Option<FamilyData>,
    /// Parameter values at which the identity flags are asserted, for
    /// entries whose flags depend on the parameter.
    pub identity_params: &'static [(&'static str, &'static str)],
    pub note: Option<&'static str>,
}

impl Entry {
    pub fn is_parametric(&self) -> bool {
        !self.params.is_empty()
    }

    pub fn algebra(&self, params: &BTreeMap<String, Rational>) -> Result<Algebra> {
        for p in self.params {
            if !params.contains_key(*p) {
                return Err(Error::MissingParameter {
                    name: self.name.to_string(),
                    param: p.to_string(),
                });
            }
        }
        if let Some(k) = params.keys().find(|k| !self.params.contains(&k.as_str())) {
            return Err(Error::Parse {
                input: format!("{}?{k}", self.name),
                reason: "unexpected parameter".into(),
            });
        }
        let products = parse_table(self.dim, self.table)?
            .into_iter()
            .map(|(pair, coeffs)| {
                let v = coeffs.iter().map(|c| c.eval(params)).collect::<Result<Vec<_>>>()?;
                Ok((pair, v))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Algebra::new(self.dim, products)?.with_name(instance_name(self.name, params)))
    }

    /// Cocycles of the stated extension, at `params`.
    pub fn extension_cocycles(&self, params: &BTreeMap<String, Rational>) -> Result<Option<(String, Vec<Cocycle>)>> {
        let Some(ext) = self.extension else {
            return Ok(None);
        };
        let base = lookup(ext.base)?;
        let thetas = ext
            .cocycles
            .iter()
            .map(|s| Cocycle::parse_with(base.dim, s, params))
            .collect::<Result<Vec<_>>>()?;
        Ok(Some((ext.base.to_string(), thetas)))
    }

    /// The parameter point used for identity flags, if the entry needs one.
    pub fn identity_point(&self) -> Result<BTreeMap<String, Rational>> {
        self.identity_params
            .iter()
            .map(|(k, v)| Ok((k.to_string(), parse_rational(v)?)))
            .collect()
    }

    /// Concrete instances: the identity point if set, otherwise the α grid
    /// for parametric entries, otherwise the single table.
    pub fn samples(&self) -> Vec<(BTreeMap<String, Rational>, Algebra)> {
        let points: Vec<BTreeMap<String, Rational>> = if !self.identity_params.is_empty() {
            vec![self.identity_point().expect("stored values parse")]
        } else if self.is_parametric() {
            ALPHA_GRID
                .iter()
                .map(|&a| self.params.iter().map(|p| (p.to_string(), rat(a))).collect())
                .collect()
        } else {
            vec![BTreeMap::new()]
        };
        points
            .into_iter()
            .map(|p| {
                let a = self.algebra(&p).expect("stored tables are valid");
                (p, a)
            })
            .collect()
    }
}

fn instance_name(name: &str, params: &BTreeMap<String, Rational>) -> String {
    if params.is_empty() {
        return name.to_string();
    }
    let args: Vec<String> = params
        .iter()
        .map(|(k, v)| format!("{k}={}", crate::exact::format_rational(v)))
        .collect();
    format!("{name}({})", args.join(","))
}

pub fn entries() -> &'static [Entry] {
    data::ENTRIES
}

/// The entry called `name`. `N` and `N<k>` (zero algebras) have no entry.
pub fn lookup(name: &str) -> Result<&'static Entry> {
    data::ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// `N<k>` → `k`.
fn zero_alias(name: &str) -> Option<usize> {
    name.strip_prefix('N')?.parse().ok()
}

/// A concrete catalog algebra. The zero algebra is available as `N` with a
/// `dim` parameter, or as `N<k>`.
pub fn get(name: &str, params: &BTreeMap<String, Rational>) -> Result<Algebra> {
    if name == "N" {
        let d = params.get("dim").ok_or_else(|| Error::MissingParameter {
            name: "N".into(),
            param: "dim".into(),
        })?;
        let dim = crate::exact::rational::to_i64(d)
            .and_then(|k| usize::try_from(k).ok())
            .ok_or_else(|| Error::Parse {
                input: crate::exact::format_rational(d),
                reason: "dim must be a nonnegative integer".into(),
            })?;
        return Ok(Algebra::zero(dim).with_name(format!("N{dim}")));
    }
    if let Some(dim) = zero_alias(name) {
        if !params.is_empty() {
            return Err(Error::Parse {
                input: name.into(),
                reason: "unexpected parameter".into(),
            });
        }
        return Ok(Algebra::zero(dim).with_name(name));
    }
    lookup(name)?.algebra(params)
}

/// `get` for entries without parameters.
pub fn get_plain(name: &str) -> Result<Algebra> {
    get(name, &BTreeMap::new())
}

/// `get` with the single parameter `alpha`.
pub fn get_alpha(name: &str, alpha: Rational) -> Result<Algebra> {
    get(name, &BTreeMap::from([("alpha".to_string(), alpha)]))
}

pub fn aut_family(name: &str) -> Result<AutFamily> {
    let data = family_data(name)?;
    AutFamily::parse(data.rows, data.det)
}

fn family_data(name: &str) -> Result<FamilyData> {
    lookup(name)?.family.ok_or_else(|| Error::NoFamily(name.to_string()))
}

/// The stored generic cocycle matrix `M` (skew, symbolic α entries).
pub fn generic_cocycle_matrix(name: &str) -> Result<Vec<Vec<Poly>>> {
    let entry = lookup(name)?;
    let data = family_data(name)?;
    let n = entry.dim;
    let mut m = vec![vec![Poly::zero(); n]; n];
    for &((i, j), s) in data.generic {
        let p = Poly::parse(s)?;
        m[j - 1][i - 1] = -&p;
        m[i - 1][j - 1] = p;
    }
    Ok(m)
}

pub fn action_targets(name: &str) -> Result<Vec<ActionTarget>> {
    family_data(name)?
        .targets
        .iter()
        .map(|t| {
            Ok(ActionTarget {
                label: t.label.to_string(),
                entries: t.entries.iter().map(|&(w, i, j)| ((i - 1, j - 1), rat(w))).collect(),
                expected: Poly::parse(t.expected)?,
            })
        })
        .collect()
}

/// Computes `φᵀ M φ` for the stored family and compares every designated
/// entry with its printed formula.
pub fn symbolic_action_check(name: &str) -> Result<Vec<TargetCheck>> {
    let family = aut_family(name)?;
    let m = generic_cocycle_matrix(name)?;
    Ok(family.check_action(&m, &action_targets(name)?))
}

pub fn expected(name: &str) -> Result<Expected> {
    Ok(lookup(name)?.expected)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Filter {
    pub dim: Option<usize>,
    /// Keep only entries with (or without) a stored automorphism family.
    pub family: Option<bool>,
}

/// Sorted names. The dimension-generic `N` is listed only without a
/// dimension filter.
pub fn list_names(filter: Filter) -> Vec<&'static str> {
    let mut out: Vec<&'static str> = data::ENTRIES
        .iter()
        .filter(|e| filter.dim.is_none_or(|d| e.dim == d))
        .filter(|e| filter.family.is_none_or(|f| e.family.is_some() == f))
        .map(|e| e.name)
        .collect();
    if filter.dim.is_none() && filter.family != Some(true) {
        out.push("N");
    }
    out.sort_unstable();
    out
}

/// Pretty name, e.g. `𝕋⁶₀₉(2)`.
pub fn display_name(name: &str, params: &BTreeMap<String, Rational>) -> String {
    let base = match (name, zero_alias(name)) {
        ("N", _) => format!(
            "𝔑{}",
            params
                .get("dim")
                .map(|d| crate::notation::subscript(&crate::exact::format_rational(d)))
                .unwrap_or_default()
        ),
        (_, Some(k)) => format!("𝔑{}", crate::notation::subscript(&k.to_string())),
        _ => lookup(name).map(|e| e.display.to_string()).unwrap_or_else(|_| name.to_string()),
    };
    let vals: Vec<String> = params
        .iter()
        .filter(|(k, _)| k.as_str() != "dim")
        .map(|(_, v)| crate::exact::format_rational(v))
        .collect();
    if vals.is_empty() {
        base
    } else {
        format!("{base}({})", vals.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::unit_vector;

    #[test]
    fn parametric_get() {
        let a = get_alpha("T6_09", rat(2)).unwrap();
        assert_eq!(a.basis_product(0, 4), unit_vector(6, 5).iter().map(|x| x * rat(3)).collect::<Vec<_>>());
        assert_eq!(a.basis_product(1, 3), unit_vector(6, 5).iter().map(|x| x * rat(2)).collect::<Vec<_>>());
        assert_eq!(a.name(), Some("T6_09(alpha=2)"));
        assert!(matches!(
            get_plain("T6_09"),
            Err(Error::MissingParameter { .. })
        ));
        assert!(get_alpha("T5_04", rat(1)).is_err());
    }

    #[test]
    fn plain_get() {
        let a = get_plain("T5_04").unwrap();
        assert!(a.same_table(&Algebra::parse(5, "e1e2=e3; e1e3=e4; e2e3=e5").unwrap()));
        let z = get("N", &BTreeMap::from([("dim".to_string(), rat(4))])).unwrap();
        assert!(z.is_zero_product() && z.dim() == 4);
        assert_eq!(get_plain("N3").unwrap().dim(), 3);
        assert_eq!(get_plain("T7_01"), Err(Error::UnknownName("T7_01".into())));
    }

    #[test]
    fn families() {
        let f = aut_family("T4_02").unwrap();
        assert_eq!(f.condition(), &Poly::parse("x^4*y^3").unwrap());
        assert_eq!(aut_family("T5_09").unwrap().condition(), &Poly::parse("x^15").unwrap());
        assert_eq!(aut_family("T3_01").unwrap_err(), Error::NoFamily("T3_01".into()));
        assert_eq!(list_names(Filter { dim: None, family: Some(true) }).len(), 7);
    }

    #[test]
    fn expected_rows() {
        assert_eq!(expected("T4_02").unwrap().h2t, Some(3));
        assert_eq!(expected("T5_01").unwrap().h2tm, Some(H2tm::Dim(9)));
        assert_eq!(expected("T5_10").unwrap().h2tm, Some(H2tm::Undefined));
    }

    #[test]
    fn listing() {
        assert_eq!(list_names(Filter { dim: Some(3), family: None }), vec!["A1_0", "A2", "T3_01", "g1", "g2", "g3"]);
        assert_eq!(list_names(Filter { dim: Some(6), family: None }).len(), 20);
        let all = list_names(Filter::default());
        assert_eq!(all.len(), entries().len() + 1);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn display_names() {
        assert_eq!(display_name("T6_09", &BTreeMap::from([("alpha".into(), rat(-2))])), "𝕋⁶₀₉(-2)");
        assert_eq!(display_name("N4", &BTreeMap::new()), "𝔑₄");
    }
}
