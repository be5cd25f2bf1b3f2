use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{pair_count, pair_index, pairs};
use crate::error::{Error, Result};
use crate::exact::{format_rational, zero_vector, Matrix, Poly, Rational, Vector};

/// A skew-symmetric bilinear form `θ = Σ c_ij Δ_ij` on an `n`-dimensional
/// space, stored by its coordinates over `Δ_12 < Δ_13 < … < Δ_{n-1,n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cocycle {
    dim: usize,
    coeffs: Vector,
}

impl Cocycle {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            coeffs: zero_vector(pair_count(dim)),
        }
    }

    pub fn from_coords(dim: usize, coeffs: Vector) -> Result<Self> {
        if coeffs.len() != pair_count(dim) {
            return Err(Error::DimensionMismatch {
                expected: pair_count(dim),
                found: coeffs.len(),
            });
        }
        Ok(Self { dim, coeffs })
    }

    /// `Δ_ij` for 0-based `i < j`.
    pub fn delta(dim: usize, i: usize, j: usize) -> Result<Self> {
        let mut c = Self::zero(dim);
        c.set(i, j, Rational::one())?;
        Ok(c)
    }

    /// Sets the coefficient of `Δ_ij`; `(j, i)` stores the negated value.
    pub fn set(&mut self, i: usize, j: usize, value: Rational) -> Result<()> {
        if i.max(j) >= self.dim {
            return Err(Error::IndexOutOfRange {
                index: i.max(j) + 1,
                dim: self.dim,
            });
        }
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.coeffs[pair_index(self.dim, i, j)] = value,
            std::cmp::Ordering::Greater => self.coeffs[pair_index(self.dim, j, i)] = -value,
            std::cmp::Ordering::Equal => return Err(Error::UnorderedPair { i: i + 1, j: j + 1 }),
        }
        Ok(())
    }

    /// Parses a combination such as `D14 + D23`, `Δ15 - 2*Δ24` or
    /// `(a+1)*D15 + a*D24` evaluated at `params`.
    pub fn parse_with(dim: usize, s: &str, params: &BTreeMap<String, Rational>) -> Result<Self> {
        let text = s.replace('Δ', "D");
        let poly = Poly::parse(&text)?;
        let bad = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut out = Self::zero(dim);
        let mut rest = poly.clone();
        for (i, j) in pairs(dim) {
            let name = format!("D{}{}", i + 1, j + 1);
            if poly.degree_in(&name) > 1 {
                return Err(bad("not linear in the Δ basis"));
            }
            out.coeffs[pair_index(dim, i, j)] = poly.coefficient(&name, 1).eval(params)?;
            rest = rest.coefficient(&name, 0);
        }
        if !rest.specialize(params).is_zero() {
            return Err(bad("terms outside the Δ basis of this dimension"));
        }
        Ok(out)
    }

    pub fn parse(dim: usize, s: &str) -> Result<Self> {
        Self::parse_with(dim, s, &BTreeMap::new())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `θ(e_i, e_j)` for any 0-based pair.
    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.coeffs[pair_index(self.dim, i, j)].clone(),
            std::cmp::Ordering::Greater => -self.coeffs[pair_index(self.dim, j, i)].clone(),
            std::cmp::Ordering::Equal => Rational::zero(),
        }
    }

    /// Nonzero coefficients as `((i, j), c)`, `i < j`, 0-based.
    pub fn terms(&self) -> Vec<((usize, usize), &Rational)> {
        pairs(self.dim)
            .into_iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Result<Rational> {
        for w in [u, v] {
            if w.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: w.len(),
                });
            }
        }
        let mut acc = Rational::zero();
        for ((i, j), c) in self.terms() {
            acc += c * (&u[i] * &v[j] - &u[j] * &v[i]);
        }
        Ok(acc)
    }

    /// Skew Gram matrix `M` with `M[i][j] = θ(e_i, e_j)`.
    pub fn matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for ((i, j), c) in self.terms() {
            m[(i, j)] = c.clone();
            m[(j, i)] = -c.clone();
        }
        m
    }

    /// Upper triangle of a skew matrix; errors when the matrix is not skew.
    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        let n = m.rows();
        if m.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: m.cols(),
            });
        }
        for i in 0..n {
            for j in i..n {
                if m[(i, j)] != -m[(j, i)].clone() {
                    return Err(Error::Format("matrix is not skew-symmetric".into()));
                }
            }
        }
        let coeffs = pairs(n).into_iter().map(|(i, j)| m[(i, j)].clone()).collect();
        Self::from_coords(n, coeffs)
    }

    pub fn scaled(&self, c: &Rational) -> Cocycle {
        Cocycle {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn plus(&self, other: &Cocycle) -> Result<Cocycle> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(Cocycle {
            dim: self.dim,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }
}

impl fmt::Display for Cocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((i, j), c)) in terms.into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{}", format_rational(&a))?;
            }
            write!(f, "Δ{}{}", i + 1, j + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cocycle({}: {})", self.dim, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio, unit_vector};

    #[test]
    fn parse_and_display() {
        let t = Cocycle::parse(5, "Δ15 - 2*D24 + 1/2*D12").unwrap();
        assert_eq!(t.to_string(), "1/2Δ12 + Δ15 - 2Δ24");
        assert_eq!(t.coeff(3, 1), rat(2));
        assert_eq!(t.coeff(0, 1), ratio(1, 2));
        assert_eq!(Cocycle::zero(3).to_string(), "0");
        assert!(Cocycle::parse(3, "D14").is_err());
        assert!(Cocycle::parse(3, "D12*D13").is_err());
        assert!(Cocycle::parse(3, "D12 + 1").is_err());
        let p = BTreeMap::from([("a".to_string(), rat(2))]);
        let t = Cocycle::parse_with(5, "(a+1)*D15 + a*D24", &p).unwrap();
        assert_eq!(t, Cocycle::parse(5, "3*D15 + 2*D24").unwrap());
    }

    #[test]
    fn matrix_round_trip_and_eval() {
        let t = Cocycle::parse(4, "D12 - 3*D34").unwrap();
        let m = t.matrix();
        assert_eq!(m[(1, 0)], rat(-1));
        assert_eq!(Cocycle::from_matrix(&m).unwrap(), t);
        assert!(Cocycle::from_matrix(&Matrix::identity(2)).is_err());
        let e = |i| unit_vector(4, i);
        assert_eq!(t.eval(&e(3), &e(2)).unwrap(), rat(3));
        assert_eq!(t.eval(&e(1), &e(1)).unwrap(), rat(0));
    }

    #[test]
    fn set_orders_pairs() {
        let mut t = Cocycle::zero(3);
        t.set(2, 0, rat(5)).unwrap();
        assert_eq!(t, Cocycle::parse(3, "-5*D13").unwrap());
        assert!(t.set(1, 1, rat(1)).is_err());
        assert!(Cocycle::delta(3, 0, 3).is_err());
    }
}
