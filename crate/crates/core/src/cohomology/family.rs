use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Matrix, Poly, Rational};

/// A matrix template with polynomial entries in named parameters, valid
/// where `condition` does not vanish. Columns are the images of the basis.
#[derive(Debug, Clone)]
pub struct AutFamily {
    params: Vec<String>,
    matrix: Vec<Vec<Poly>>,
    condition: Poly,
}

impl AutFamily {
    /// Builds from row strings, e.g. `[["x","0"],["z","y"]]`, and the
    /// condition polynomial (written as the determinant, e.g. `x^4*y^3`).
    pub fn parse<R: AsRef<[&'static str]>>(rows: &[R], condition: &str) -> Result<Self> {
        let n = rows.len();
        let mut matrix = Vec::with_capacity(n);
        for r in rows {
            let r = r.as_ref();
            if r.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: r.len(),
                });
            }
            matrix.push(r.iter().map(|s| Poly::parse(s)).collect::<Result<Vec<_>>>()?);
        }
        let condition = Poly::parse(condition)?;
        let mut params: Vec<String> = matrix
            .iter()
            .flatten()
            .chain(std::iter::once(&condition))
            .flat_map(|p| p.used_vars().into_iter().map(str::to_string))
            .collect();
        params.sort();
        params.dedup();
        let matrix = matrix
            .into_iter()
            .map(|row| row.into_iter().map(|p| p.over(&params)).collect())
            .collect();
        Ok(Self {
            condition: condition.over(&params),
            params,
            matrix,
        })
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.matrix[i][j]
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.matrix
    }

    pub fn condition(&self) -> &Poly {
        &self.condition
    }

    /// Symbolic determinant by cofactor expansion along the first row.
    pub fn determinant(&self) -> Poly {
        fn det(m: &[Vec<Poly>]) -> Poly {
            let n = m.len();
            if n == 0 {
                return Poly::one();
            }
            if n == 1 {
                return m[0][0].clone();
            }
            let mut acc = Poly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &det(&minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
        det(&self.matrix)
    }

    /// Concrete matrix at a point binding every parameter; errors when the
    /// condition vanishes there.
    pub fn specialize(&self, point: &BTreeMap<String, Rational>) -> Result<Matrix> {
        if self.condition.eval(point)?.is_zero() {
            return Err(Error::Singular);
        }
        let rows = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|p| p.eval(point)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(self.dim(), rows)
    }

    /// Parameters occurring alone on the diagonal set to 1, the rest to 0.
    /// The returned point specializes to the identity when the family
    /// contains it in this way.
    pub fn identity_point(&self) -> BTreeMap<String, Rational> {
        let mut point: BTreeMap<String, Rational> = self
            .params
            .iter()
            .map(|p| (p.clone(), Rational::zero()))
            .collect();
        for (i, row) in self.matrix.iter().enumerate() {
            let d = &row[i];
            if let [v] = d.used_vars()[..] {
                if *d == Poly::var(v) {
                    point.insert(v.to_string(), Rational::one());
                }
            }
        }
        point
    }

    /// `φᵀ M φ` for a square matrix `M` of polynomials.
    pub fn conjugate(&self, m: &[Vec<Poly>]) -> Vec<Vec<Poly>> {
        let n = self.dim();
        let mut vars: Vec<String> = self.params.clone();
        for p in m.iter().flatten() {
            vars.extend(p.vars().iter().cloned());
        }
        vars.sort();
        vars.dedup();
        let phi: Vec<Vec<Poly>> = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|p| p.over(&vars)).collect())
            .collect();
        let mm: Vec<Vec<Poly>> = m
            .iter()
            .map(|r| r.iter().map(|p| p.over(&vars)).collect())
            .collect();
        let zero = Poly::zero().over(&vars);
        // t = M φ
        let mut t = vec![vec![zero.clone(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if mm[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !phi[k][j].is_zero() {
                        t[i][j] = &t[i][j] + &(&mm[i][k] * &phi[k][j]);
                    }
                }
            }
        }
        let mut out = vec![vec![zero; n]; n];
        for i in 0..n {
            for k in 0..n {
                if phi[k][i].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !t[k][j].is_zero() {
                        out[i][j] = &out[i][j] + &(&phi[k][i] * &t[k][j]);
                    }
                }
            }
        }
        out
    }
}

/// A named entry of `φᵀ M φ` (or a fixed linear combination of entries) and
/// the polynomial it must equal.
#[derive(Debug, Clone)]
pub struct ActionTarget {
    pub label: String,
    /// 0-based matrix positions with their weights.
    pub entries: Vec<((usize, usize), Rational)>,
    pub expected: Poly,
}

#[derive(Debug, Clone)]
pub struct TargetCheck {
    pub label: String,
    pub expected: Poly,
    pub computed: Poly,
    pub pass: bool,
}

impl AutFamily {
    /// Compares the designated entries of `φᵀ M φ` with their targets.
    pub fn check_action(&self, generic: &[Vec<Poly>], targets: &[ActionTarget]) -> Vec<TargetCheck> {
        let conj = self.conjugate(generic);
        targets
            .iter()
            .map(|t| {
                let mut computed = Poly::zero();
                for ((i, j), w) in &t.entries {
                    computed = &computed + &conj[*i][*j].scale(w);
                }
                let pass = computed == t.expected;
                TargetCheck {
                    label: t.label.clone(),
                    expected: t.expected.clone(),
                    computed,
                    pass,
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn t4_02() -> AutFamily {
        AutFamily::parse(
            &[
                ["x", "0", "0", "0"],
                ["z", "y", "0", "0"],
                ["u", "v", "x*y", "0"],
                ["h", "g", "x*v", "x^2*y"],
            ],
            "x^4*y^3",
        )
        .unwrap()
    }

    #[test]
    fn determinant_matches_condition() {
        let f = t4_02();
        assert_eq!(f.determinant(), f.condition().clone());
        assert_eq!(f.params(), &["g", "h", "u", "v", "x", "y", "z"]);
    }

    #[test]
    fn specialization() {
        let f = t4_02();
        let id = f.identity_point();
        assert_eq!(f.specialize(&id).unwrap(), Matrix::identity(4));
        let mut p = id.clone();
        p.insert("x".into(), rat(2));
        p.insert("y".into(), rat(3));
        assert_eq!(
            f.specialize(&p).unwrap(),
            Matrix::from_i64(&[&[2, 0, 0, 0], &[0, 3, 0, 0], &[0, 0, 6, 0], &[0, 0, 0, 12]])
        );
        p.insert("y".into(), rat(0));
        assert_eq!(f.specialize(&p), Err(Error::Singular));
        p.insert("y".into(), rat(3));
        p.remove("g");
        assert!(matches!(f.specialize(&p), Err(Error::UnboundVariable(_))));
    }

    #[test]
    fn conjugation_by_identity_point() {
        let f = t4_02();
        let m: Vec<Vec<Poly>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| match (i, j) {
                        (0, 3) => Poly::var("a1"),
                        (3, 0) => -Poly::var("a1"),
                        _ => Poly::zero(),
                    })
                    .collect()
            })
            .collect();
        let c = f.conjugate(&m);
        let at = c[0][3].specialize(&f.identity_point());
        assert_eq!(at, Poly::var("a1"));
        // α₁ alone: α₁* = α₁ x³ y
        assert_eq!(c[0][3], Poly::parse("a1*x^3*y").unwrap());
    }
}
