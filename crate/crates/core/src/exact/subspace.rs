use num_traits::Zero;

use super::matrix::{add_scaled, is_zero_vector, Matrix, Vector};
use super::rational::Rational;
use crate::error::{Error, Result};

/// How [`Subspace::combine`] merges two subspaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Combine {
    Sum,
    Intersection,
}

/// A linear subspace of `Q^n` held in canonical form: the nonzero rows of a
/// reduced row-echelon matrix. Two subspaces are equal iff their values are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

/// Accumulates vectors one at a time, keeping only those independent of
/// the ones already seen.
#[derive(Debug, Clone)]
pub struct RowReducer {
    cols: usize,
    rows: Vec<(usize, Vector)>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new() }
    }

    /// Adds `v`; returns whether it enlarged the span.
    pub fn push(&mut self, mut v: Vector) -> bool {
        debug_assert_eq!(v.len(), self.cols);
        for (p, r) in &self.rows {
            if !v[*p].is_zero() {
                let c = -v[*p].clone();
                add_scaled(&mut v, &c, r);
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in &mut v {
            *x *= &inv;
        }
        self.rows.push((p, v));
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub fn into_subspace(self) -> Subspace {
        Matrix::from_rows(self.cols, self.rows.into_iter().map(|(_, r)| r).collect())
            .expect("rows have the right length")
            .row_space()
    }

    /// Solutions `x` of `r · x = 0` for every accumulated row `r`.
    pub fn kernel(self) -> Subspace {
        Matrix::from_rows(self.cols, self.rows.into_iter().map(|(_, r)| r).collect())
            .expect("rows have the right length")
            .kernel()
    }
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Matrix::identity(ambient_dim).row_space()
    }

    pub fn from_spanning(ambient_dim: usize, vectors: Vec<Vector>) -> Result<Self> {
        for v in &vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
        }
        Ok(Matrix::from_rows(ambient_dim, vectors)?.row_space())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates outside the pivot set; the matching unit vectors span a
    /// complement of this subspace.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient_dim)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Normal form of `v` modulo the subspace: the unique representative of
    /// `v + S` that vanishes on every pivot coordinate.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = -r[p].clone();
                add_scaled(&mut r, &c, b);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient_dim && is_zero_vector(&self.reduce(v))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }

    /// Coordinates of a member `v` in the echelon basis.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn combine(&self, other: &Subspace, mode: Combine) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        match mode {
            Combine::Sum => {
                let vs = self.basis.iter().chain(&other.basis).cloned().collect();
                Subspace::from_spanning(self.ambient_dim, vs)
            }
            Combine::Intersection => {
                // Solve sum(l_i a_i) - sum(m_j b_j) = 0 and map the l-part back.
                let k = self.dim();
                let mut columns: Vec<Vector> = self.basis.clone();
                columns.extend(other.basis.iter().map(|b| b.iter().map(|x| -x).collect()));
                let system = Matrix::from_columns(self.ambient_dim, &columns)?;
                let null = system.kernel();
                let vs = null
                    .basis()
                    .iter()
                    .map(|lm| {
                        let mut v = vec![Rational::zero(); self.ambient_dim];
                        for (l, a) in lm[..k].iter().zip(&self.basis) {
                            add_scaled(&mut v, l, a);
                        }
                        v
                    })
                    .collect();
                Subspace::from_spanning(self.ambient_dim, vs)
            }
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.combine(other, Combine::Sum)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.combine(other, Combine::Intersection)
    }

    /// Embeds into a larger ambient space, placing coordinates at `offset`.
    pub fn embed(&self, ambient_dim: usize, offset: usize) -> Result<Subspace> {
        if offset + self.ambient_dim > ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: offset + self.ambient_dim,
            });
        }
        let vs = self
            .basis
            .iter()
            .map(|b| {
                let mut v = vec![Rational::zero(); ambient_dim];
                v[offset..offset + b.len()].clone_from_slice(b);
                v
            })
            .collect();
        Subspace::from_spanning(ambient_dim, vs)
    }
}

impl Matrix {
    /// Canonical row space.
    pub fn row_space(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient_dim: self.cols(),
            basis,
            pivots,
        }
    }
}
