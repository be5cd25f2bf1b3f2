//! Anticommutative algebras given by structure constants.
//!
//! Only products `e_i e_j` with `i < j` are stored; `e_j e_i = -e_i e_j` and
//! `e_i e_i = 0` hold by construction. Indices are 0-based in the API and
//! 1-based in text (`e1e2=e3`) and files.

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{add_scaled, is_zero_vector, unit_vector, zero_vector};
use crate::exact::{Matrix, Poly, Rational, RowReducer, Subspace, Vector};

/// Number of unordered pairs `i < j` in dimension `n`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `(i, j)`, `i < j`, in the lexicographic listing
/// `(0,1) < (0,2) < ... < (n-2,n-1)`.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    name: Option<String>,
    table: Vec<Vector>,
    support: Vec<(usize, usize)>,
}

impl Algebra {
    /// Validated algebra from 0-based products `((i, j), e_i e_j)` with `i < j`.
    /// Pairs that are not listed multiply to zero.
    pub fn new(dim: usize, products: Vec<((usize, usize), Vector)>) -> Result<Self> {
        let mut table = vec![zero_vector(dim); pair_count(dim)];
        let mut seen = vec![false; pair_count(dim)];
        for ((i, j), v) in products {
            for idx in [i, j] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx + 1, dim });
                }
            }
            if i >= j {
                return Err(Error::UnorderedPair { i: i + 1, j: j + 1 });
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
            let k = pair_index(dim, i, j);
            if seen[k] {
                return Err(Error::DuplicatePair { i: i + 1, j: j + 1 });
            }
            seen[k] = true;
            table[k] = v;
        }
        Ok(Self::from_table(dim, table))
    }

    fn from_table(dim: usize, table: Vec<Vector>) -> Self {
        let support = pairs(dim)
            .into_iter()
            .filter(|&(i, j)| !is_zero_vector(&table[pair_index(dim, i, j)]))
            .collect();
        Self {
            dim,
            name: None,
            table,
            support,
        }
    }

    /// The algebra with zero product, `N_n`.
    pub fn zero(dim: usize) -> Self {
        Self::from_table(dim, vec![zero_vector(dim); pair_count(dim)])
    }

    /// Parses a rational table such as `"e1e2=e3; e1e3=e4; e2e4=-1/2*e5"`.
    pub fn parse(dim: usize, table: &str) -> Result<Self> {
        let point = BTreeMap::new();
        let products = parse_table(dim, table)?
            .into_iter()
            .map(|(pair, coeffs)| {
                let v = coeffs
                    .iter()
                    .map(|c| c.eval(&point))
                    .collect::<Result<Vector>>()?;
                Ok((pair, v))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, products)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Pairs `i < j` with a nonzero product.
    pub fn support(&self) -> &[(usize, usize)] {
        &self.support
    }

    /// Nonzero products as `((i, j), e_i e_j)`, `i < j`.
    pub fn products(&self) -> Vec<((usize, usize), &Vector)> {
        self.support
            .iter()
            .map(|&(i, j)| ((i, j), &self.table[pair_index(self.dim, i, j)]))
            .collect()
    }

    pub fn is_zero_product(&self) -> bool {
        self.support.is_empty()
    }

    /// Same product, compared ignoring the name.
    pub fn same_table(&self, other: &Algebra) -> bool {
        self.dim == other.dim && self.table == other.table
    }

    /// `e_i e_j` for any ordered pair.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => zero_vector(self.dim),
            std::cmp::Ordering::Less => self.table[pair_index(self.dim, i, j)].clone(),
            std::cmp::Ordering::Greater => {
                self.table[pair_index(self.dim, j, i)].iter().map(|x| -x).collect()
            }
        }
    }

    pub(crate) fn mul(&self, u: &[Rational], v: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim);
        for &(i, j) in &self.support {
            let c = &u[i] * &v[j] - &u[j] * &v[i];
            if !c.is_zero() {
                add_scaled(&mut out, &c, &self.table[pair_index(self.dim, i, j)]);
            }
        }
        out
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the table.
    pub fn product(&self, u: &[Rational], v: &[Rational]) -> Result<Vector> {
        self.check_len(u)?;
        self.check_len(v)?;
        Ok(self.mul(u, v))
    }

    pub(crate) fn jac(&self, a: &[Rational], b: &[Rational], c: &[Rational]) -> Vector {
        let mut out = self.mul(&self.mul(a, b), c);
        let t = self.mul(&self.mul(b, c), a);
        add_scaled(&mut out, &Rational::one(), &t);
        let t = self.mul(&self.mul(c, a), b);
        add_scaled(&mut out, &Rational::one(), &t);
        out
    }

    /// `J(a,b,c) = (ab)c + (bc)a + (ca)b`.
    pub fn jacobian(&self, a: &[Rational], b: &[Rational], c: &[Rational]) -> Result<Vector> {
        self.check_len(a)?;
        self.check_len(b)?;
        self.check_len(c)?;
        Ok(self.jac(a, b, c))
    }

    fn basis(&self) -> Vec<Vector> {
        (0..self.dim).map(|i| unit_vector(self.dim, i)).collect()
    }

    /// `v e_d`.
    fn mul_basis_right(&self, v: &[Rational], d: usize, prod: &[Vec<Vector>]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                add_scaled(&mut out, x, &prod[i][d]);
            }
        }
        out
    }

    /// Evaluates the multilinear form of `kind` on every basis tuple in
    /// lexicographic order and reports the first tuple where it fails.
    pub fn check_identity(&self, kind: IdentityKind) -> IdentityCheck {
        if kind == IdentityKind::AnticommutativeConsistency {
            return self.check_consistency();
        }
        self.check_identity_with(kind, &Tables::new(self))
    }

    fn check_consistency(&self) -> IdentityCheck {
        let e = self.basis();
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let lhs = self.mul(&e[i], &e[j]);
                let rhs: Vector = self.mul(&e[j], &e[i]).iter().map(|x| -x).collect();
                if lhs != rhs {
                    return IdentityCheck::Fails(Witness {
                        kind: IdentityKind::AnticommutativeConsistency,
                        indices: vec![i, j],
                        lhs,
                        rhs,
                    });
                }
            }
        }
        IdentityCheck::Holds
    }

    pub(crate) fn check_identity_with(&self, kind: IdentityKind, t: &Tables) -> IdentityCheck {
        let n = self.dim;
        let fail = |indices: Vec<usize>, lhs: Vector, rhs: Vector| {
            IdentityCheck::Fails(Witness {
                kind,
                indices,
                lhs,
                rhs,
            })
        };
        match kind {
            IdentityKind::AnticommutativeConsistency => return self.check_consistency(),
            IdentityKind::Jacobi => {
                for i in 0..n {
                    for j in 0..n {
                        for k in 0..n {
                            let lhs = &t.jac[i][j][k];
                            if !is_zero_vector(lhs) {
                                return fail(vec![i, j, k], lhs.clone(), zero_vector(n));
                            }
                        }
                    }
                }
            }
            IdentityKind::Tortkara
            | IdentityKind::Malcev
            | IdentityKind::Metabelian => {
                // Tortkara is symmetric in b, d and metabelian is skew in a, b,
                // in c, d and under (a, b) <-> (c, d); the skipped tuples can
                // never be the lexicographically first failure
                let skip = |a: usize, b: usize, c: usize, d: usize| match kind {
                    IdentityKind::Tortkara => b > d,
                    IdentityKind::Metabelian => a >= b || c >= d || (a, b) > (c, d),
                    _ => false,
                };
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            for d in 0..n {
                                if skip(a, b, c, d) {
                                    continue;
                                }
                                let (lhs, rhs) = t.sides(kind, [a, b, c, d]);
                                if lhs != rhs {
                                    return fail(vec![a, b, c, d], lhs, rhs);
                                }
                            }
                        }
                    }
                }
            }
        }
        IdentityCheck::Holds
    }

    pub fn satisfies(&self, kind: IdentityKind) -> bool {
        self.check_identity(kind).holds()
    }

    /// `Ann(A) = {x : xA = 0}`.
    pub fn annihilator(&self) -> Subspace {
        self.annihilator_modulo(&Subspace::zero(self.dim))
    }

    /// `{x : xA ⊆ z}`.
    pub fn annihilator_modulo(&self, z: &Subspace) -> Subspace {
        // Row (j, k): coefficient of e_k in x e_j mod z, as a function of x.
        let n = self.dim;
        let mut rows = Vec::new();
        for j in 0..n {
            let cols: Vec<Vector> = (0..n).map(|i| z.reduce(&self.basis_product(i, j))).collect();
            for k in 0..n {
                let row: Vector = cols.iter().map(|c| c[k].clone()).collect();
                if !is_zero_vector(&row) {
                    rows.push(row);
                }
            }
        }
        Matrix::from_rows(n, rows).expect("rows have length n").kernel()
    }

    /// `0 ⊂ Z₁ ⊂ Z₂ ⊂ …` with `Z_{k+1} = {x : xA ⊆ Z_k}`, stopping at the first
    /// repeated term.
    pub fn upper_central_series(&self) -> Vec<Subspace> {
        let mut out = vec![Subspace::zero(self.dim)];
        loop {
            let next = self.annihilator_modulo(out.last().expect("nonempty"));
            if &next == out.last().expect("nonempty") {
                return out;
            }
            out.push(next);
        }
    }

    /// Dimension of the space of derivations `D(xy) = D(x)y + xD(y)`.
    pub fn derivation_dim(&self) -> usize {
        // unknown d[r][c] sits at column r*n + c; D e_c = Σ_r d[r][c] e_r
        let n = self.dim;
        let prod: Vec<Vec<Vector>> = (0..n)
            .map(|i| (0..n).map(|j| self.basis_product(i, j)).collect())
            .collect();
        let mut reducer = RowReducer::new(n * n);
        for (i, j) in pairs(n) {
            for k in 0..n {
                let mut row = zero_vector(n * n);
                for (c, x) in prod[i][j].iter().enumerate() {
                    row[k * n + c] += x;
                }
                for r in 0..n {
                    row[r * n + i] -= &prod[r][j][k];
                    row[r * n + j] -= &prod[i][r][k];
                }
                if !is_zero_vector(&row) {
                    reducer.push(row);
                }
            }
        }
        n * n - reducer.rank()
    }

    /// Span of all products `x y` with `x` in `a` and `y` in `b`.
    pub fn product_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                let p = self.mul(x, y);
                if !is_zero_vector(&p) {
                    vs.push(p);
                }
            }
        }
        Subspace::from_spanning(self.dim, vs).expect("products have length n")
    }

    /// `A^2 = AA`.
    pub fn square(&self) -> Subspace {
        let vs = self
            .support
            .iter()
            .map(|&(i, j)| self.table[pair_index(self.dim, i, j)].clone())
            .collect();
        Subspace::from_spanning(self.dim, vs).expect("products have length n")
    }

    /// Terms of the lower central or derived series, starting at `A` and
    /// stopping at zero or at the first repeated term.
    pub fn series(&self, kind: SeriesKind) -> Vec<Subspace> {
        let whole = Subspace::full(self.dim);
        let mut out = vec![whole.clone()];
        loop {
            let last = out.last().expect("nonempty");
            if last.is_zero() {
                break;
            }
            let next = match kind {
                SeriesKind::LowerCentral => self.product_space(&whole, last),
                SeriesKind::Derived => self.product_space(last, last),
            };
            if &next == last {
                break;
            }
            out.push(next);
        }
        out
    }

    /// Least `k` with `A^k = 0`, if the algebra is nilpotent.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let s = self.series(SeriesKind::LowerCentral);
        s.last().filter(|t| t.is_zero()).map(|_| s.len())
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_index().is_some()
    }

    /// Whether a line of the annihilator splits off as a direct ideal summand,
    /// decided by `Ann(A) ⊄ A^2`. An algebra with zero product reports `true`
    /// (every line splits); a zero-dimensional one reports `false`.
    pub fn has_annihilator_component(&self) -> bool {
        !self.annihilator().is_subspace_of(&self.square())
    }

    /// The quotient `A / Ann(A)`, realised on the complement spanned by the
    /// unit vectors at the non-pivot positions of `Ann(A)`.
    pub fn quotient_by_annihilator(&self) -> Result<Quotient> {
        let ann = self.annihilator();
        if ann.is_zero() {
            return Err(Error::ZeroAnnihilator);
        }
        let n = self.dim;
        let complement = ann.non_pivots();
        let m = complement.len();
        let mut columns: Vec<Vector> = complement.iter().map(|&c| unit_vector(n, c)).collect();
        columns.extend(ann.basis().iter().cloned());
        let adapted = Matrix::from_columns(n, &columns)?;
        let inverse = adapted.inverse()?;
        let projection = Matrix::from_rows(n, inverse.to_rows().into_iter().take(m).collect())?;
        let mut products = Vec::new();
        for (a, b) in pairs(m) {
            let p = inverse.mul_vec(&self.mul(&columns[a], &columns[b]))?;
            let v: Vector = p[..m].to_vec();
            if !is_zero_vector(&v) {
                products.push(((a, b), v));
            }
        }
        Ok(Quotient {
            algebra: Algebra::new(m, products)?,
            projection,
            adapted_basis: adapted,
            complement,
            is_zero: m == 0,
        })
    }

    /// The same algebra in the basis given by the columns of `basis`:
    /// `f_i f_j = P^{-1}((P e_i)(P e_j))`.
    pub fn change_basis(&self, basis: &Matrix) -> Result<Algebra> {
        if basis.rows() != self.dim || basis.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: basis.rows().max(basis.cols()),
            });
        }
        let inv = basis.inverse()?;
        let cols: Vec<Vector> = (0..self.dim).map(|j| basis.column(j)).collect();
        let mut table = Vec::with_capacity(pair_count(self.dim));
        for (i, j) in pairs(self.dim) {
            table.push(inv.mul_vec(&self.mul(&cols[i], &cols[j]))?);
        }
        Ok(Self::from_table(self.dim, table))
    }

    /// Whether the linear map with columns `m` (images of this algebra's
    /// basis in `target`) is multiplicative: `m(e_i e_j) = m(e_i) m(e_j)`.
    pub fn is_homomorphism_to(&self, target: &Algebra, m: &Matrix) -> bool {
        if m.rows() != target.dim || m.cols() != self.dim {
            return false;
        }
        let cols: Vec<Vector> = (0..self.dim).map(|j| m.column(j)).collect();
        pairs(self.dim).into_iter().all(|(i, j)| {
            let lhs = m
                .mul_vec(&self.table[pair_index(self.dim, i, j)])
                .expect("shape checked");
            lhs == target.mul(&cols[i], &cols[j])
        })
    }

    /// Whether `s` is an ideal: `A s ⊆ s`.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        self.product_space(&Subspace::full(self.dim), s).is_subspace_of(s)
    }
}

/// Result of [`Algebra::quotient_by_annihilator`].
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: Algebra,
    /// `(n - m) x n` quotient map onto the complement coordinates.
    pub projection: Matrix,
    /// Columns: the complement unit vectors, then the echelon basis of `Ann(A)`.
    pub adapted_basis: Matrix,
    /// 0-based positions of the complement unit vectors.
    pub complement: Vec<usize>,
    /// Set when `Ann(A) = A`.
    pub is_zero: bool,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}: {})", self.dim, self)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return write!(f, "zero product");
        }
        let items: Vec<String> = self
            .products()
            .into_iter()
            .map(|((i, j), v)| format!("e{}e{}={}", i + 1, j + 1, format_combination(v, "e")))
            .collect();
        write!(f, "{}", items.join(", "))
    }
}

/// `2e1 - 1/2e3`-style rendering of a coordinate vector.
pub fn format_combination(v: &[Rational], symbol: &str) -> String {
    use crate::exact::format_rational;
    use num_traits::One;
    let mut out = String::new();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if !a.is_one() {
            out.push_str(&format_rational(&a));
        }
        out.push_str(&format!("{symbol}{}", k + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses `e{i}e{j} = <linear combination of e_k>` items separated by `;`
/// or `,`. Coefficients may be polynomials in free parameters.
pub fn parse_table(dim: usize, table: &str) -> Result<Vec<((usize, usize), Vec<Poly>)>> {
    let bad = |reason: &str| Error::Parse {
        input: table.to_string(),
        reason: reason.to_string(),
    };
    let mut out = Vec::new();
    for item in table.split([';', ',']).map(str::trim).filter(|s| !s.is_empty()) {
        let (lhs, rhs) = item.split_once('=').ok_or_else(|| bad("missing `=`"))?;
        let idx: Vec<usize> = lhs
            .trim()
            .split('e')
            .filter(|s| !s.is_empty())
            .map(|s| s.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad("left side must read e<i>e<j>"))?;
        let [i, j] = idx[..] else {
            return Err(bad("left side must read e<i>e<j>"));
        };
        if i == 0 || j == 0 {
            return Err(bad("basis indices start at 1"));
        }
        let value = Poly::parse(rhs)?;
        let mut coeffs = Vec::with_capacity(dim);
        let mut rest = value.clone();
        for k in 1..=dim {
            let name = format!("e{k}");
            if value.degree_in(&name) > 1 {
                return Err(bad("right side must be linear in the basis"));
            }
            coeffs.push(value.coefficient(&name, 1));
            rest = rest.coefficient(&name, 0);
        }
        if !rest.is_zero() || value.used_vars().iter().any(|v| is_basis_symbol(v, dim, true)) {
            return Err(bad("right side must be a combination of e1..en"));
        }
        if coeffs.iter().any(|c| c.used_vars().iter().any(|v| is_basis_symbol(v, dim, false))) {
            return Err(bad("right side must be linear in the basis"));
        }
        out.push(((i - 1, j - 1), coeffs));
    }
    Ok(out)
}

/// `e<k>`: with `out_of_range`, only indices above `dim` match.
fn is_basis_symbol(v: &str, dim: usize, out_of_range: bool) -> bool {
    match v.strip_prefix('e').and_then(|k| k.parse::<usize>().ok()) {
        Some(k) => !out_of_range || k == 0 || k > dim,
        None => false,
    }
}

/// Basis products `e_a e_b`, `(e_a e_b) e_c`, Jacobians and `(e_a e_b)(e_c e_d)`,
/// cached for identity and cocycle computations.
pub(crate) struct Tables<'a> {
    alg: &'a Algebra,
    pub(crate) prod: Vec<Vec<Vector>>,
    pub(crate) triple: Vec<Vec<Vec<Vector>>>,
    pub(crate) jac: Vec<Vec<Vec<Vector>>>,
    /// `(e_a e_b)(e_c e_d)` for `a < b`, `c < d`, by pair index.
    pp: OnceCell<Vec<Vec<Vector>>>,
}

impl<'a> Tables<'a> {
    pub(crate) fn new(alg: &'a Algebra) -> Self {
        let n = alg.dim;
        let prod: Vec<Vec<Vector>> = (0..n)
            .map(|i| (0..n).map(|j| alg.basis_product(i, j)).collect())
            .collect();
        let triple: Vec<Vec<Vec<Vector>>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| (0..n).map(|c| alg.mul_basis_right(&prod[a][b], c, &prod)).collect())
                    .collect()
            })
            .collect();
        let jac = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        (0..n)
                            .map(|c| {
                                let mut out = triple[a][b][c].clone();
                                add_scaled(&mut out, &Rational::one(), &triple[b][c][a]);
                                add_scaled(&mut out, &Rational::one(), &triple[c][a][b]);
                                out
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Tables {
            alg,
            prod,
            triple,
            jac,
            pp: OnceCell::new(),
        }
    }

    /// `(e_a e_b)(e_c e_d)` as a sign and a cached vector; `None` when zero
    /// because of a repeated index.
    pub(crate) fn prod_prod(&self, a: usize, b: usize, c: usize, d: usize) -> Option<(Rational, &Vector)> {
        if a == b || c == d {
            return None;
        }
        let n = self.alg.dim;
        let sign = if (a < b) == (c < d) { Rational::one() } else { -Rational::one() };
        let pp = self.pp.get_or_init(|| {
            let ps = pairs(n);
            ps.iter()
                .map(|&(a, b)| ps.iter().map(|&(c, d)| self.alg.mul(&self.prod[a][b], &self.prod[c][d])).collect())
                .collect()
        });
        let v = &pp[pair_index(n, a.min(b), a.max(b))][pair_index(n, c.min(d), c.max(d))];
        Some((sign, v))
    }

    /// Both sides of the four-variable identity at a basis tuple.
    pub(crate) fn sides(&self, kind: IdentityKind, [a, b, c, d]: [usize; 4]) -> (Vector, Vector) {
        let alg = self.alg;
        let n = alg.dim;
        let one = Rational::one();
        let pp = |out: &mut Vector, a, b, c, d| {
            if let Some((s, v)) = self.prod_prod(a, b, c, d) {
                add_scaled(out, &s, v);
            }
        };
        match kind {
            IdentityKind::Tortkara => {
                // (ab)(cd) + (ad)(cb) = J(a,b,c)d + J(a,d,c)b
                let mut lhs = zero_vector(n);
                pp(&mut lhs, a, b, c, d);
                pp(&mut lhs, a, d, c, b);
                let mut rhs = alg.mul_basis_right(&self.jac[a][b][c], d, &self.prod);
                add_scaled(&mut rhs, &one, &alg.mul_basis_right(&self.jac[a][d][c], b, &self.prod));
                (lhs, rhs)
            }
            IdentityKind::Malcev => {
                // (wy)(xz) = ((wx)y)z + ((xy)z)w + ((yz)w)x + ((zw)x)y
                let [w, x, y, z] = [a, b, c, d];
                let mut lhs = zero_vector(n);
                pp(&mut lhs, w, y, x, z);
                let mut rhs = zero_vector(n);
                for (p, q, r, s) in [(w, x, y, z), (x, y, z, w), (y, z, w, x), (z, w, x, y)] {
                    add_scaled(&mut rhs, &one, &alg.mul_basis_right(&self.triple[p][q][r], s, &self.prod));
                }
                (lhs, rhs)
            }
            IdentityKind::Metabelian => {
                let mut lhs = zero_vector(n);
                pp(&mut lhs, a, b, c, d);
                (lhs, zero_vector(n))
            }
            _ => unreachable!("three-variable identities are handled by the caller"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityKind {
    AnticommutativeConsistency,
    Jacobi,
    Tortkara,
    Malcev,
    Metabelian,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 5] = [
        IdentityKind::AnticommutativeConsistency,
        IdentityKind::Jacobi,
        IdentityKind::Tortkara,
        IdentityKind::Malcev,
        IdentityKind::Metabelian,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityKind::AnticommutativeConsistency => "anticommutative-consistency",
            IdentityKind::Jacobi => "jacobi",
            IdentityKind::Tortkara => "tortkara",
            IdentityKind::Malcev => "malcev",
            IdentityKind::Metabelian => "metabelian",
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "anticommutative-consistency" | "anticommutative" => {
                Ok(IdentityKind::AnticommutativeConsistency)
            }
            "jacobi" | "lie" => Ok(IdentityKind::Jacobi),
            "tortkara" => Ok(IdentityKind::Tortkara),
            "malcev" => Ok(IdentityKind::Malcev),
            "metabelian" => Ok(IdentityKind::Metabelian),
            _ => Err(Error::Parse {
                input: s.to_string(),
                reason: "unknown identity".into(),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

/// A basis tuple where an identity fails, with both (unequal) sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: IdentityKind,
    /// 0-based basis indices, in the identity's variable order.
    pub indices: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.indices.iter().map(|i| format!("e{}", i + 1)).collect();
        write!(
            f,
            "({}): {} != {}",
            t.join(","),
            format_combination(&self.lhs, "e"),
            format_combination(&self.rhs, "e")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityCheck {
    Holds,
    Fails(Witness),
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        matches!(self, IdentityCheck::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            IdentityCheck::Holds => None,
            IdentityCheck::Fails(w) => Some(w),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivations_and_upper_central() {
        // gl(3) acts on the zero algebra; the Heisenberg algebra has a 6-dim derivation algebra
        assert_eq!(Algebra::zero(3).derivation_dim(), 9);
        let h = Algebra::parse(3, "e1e2=e3").unwrap();
        assert_eq!(h.derivation_dim(), 6);
        let dims: Vec<usize> = h.upper_central_series().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![0, 1, 3]);
    }
    use crate::exact::rat;

    fn alg(dim: usize, t: &str) -> Algebra {
        Algebra::parse(dim, t).unwrap()
    }

    fn e(n: usize, i: usize) -> Vector {
        unit_vector(n, i - 1)
    }

    fn dims(s: &[Subspace]) -> Vec<usize> {
        s.iter().map(Subspace::dim).collect()
    }

    fn t4_02() -> Algebra {
        alg(4, "e1e2=e3; e1e3=e4")
    }

    fn t5_10() -> Algebra {
        alg(5, "e1e2=e3; e1e3=e4; e2e4=e5")
    }

    fn t6_19() -> Algebra {
        alg(6, "e1e2=e3; e1e3=e4; e1e5=e6; e2e4=e5; e3e4=e6")
    }

    #[test]
    fn pair_indexing_is_lexicographic() {
        let n = 5;
        for (k, (i, j)) in pairs(n).into_iter().enumerate() {
            assert_eq!(pair_index(n, i, j), k);
        }
        assert_eq!(pair_count(7), 21);
    }

    #[test]
    fn construction_errors() {
        let a = alg(3, "e1e2=e3");
        assert_eq!(a.basis_product(0, 1), e(3, 3));
        assert!(Algebra::zero(4).is_zero_product());
        assert_eq!(
            Algebra::new(2, vec![((0, 2), vec![rat(0), rat(0)])]),
            Err(Error::IndexOutOfRange { index: 3, dim: 2 })
        );
        assert_eq!(
            Algebra::new(2, vec![((1, 0), vec![rat(1), rat(0)])]),
            Err(Error::UnorderedPair { i: 2, j: 1 })
        );
        assert_eq!(
            Algebra::new(2, vec![((0, 1), vec![rat(1)])]),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        );
        assert!(matches!(
            Algebra::parse(3, "e1e2=e3; e1e2=e1"),
            Err(Error::DuplicatePair { i: 1, j: 2 })
        ));
        assert!(Algebra::parse(3, "e1e2=e4").is_err());
        assert!(Algebra::parse(3, "e1e2=e3*e3").is_err());
        assert!(Algebra::parse(3, "e1e2=e3+1").is_err());
        assert!(Algebra::parse(3, "e1e2=alpha*e3").is_err());
    }

    #[test]
    fn products_in_t4_02() {
        let a = t4_02();
        assert_eq!(a.product(&e(4, 1), &e(4, 2)).unwrap(), e(4, 3));
        assert_eq!(a.product(&e(4, 2), &e(4, 1)).unwrap(), vec![rat(0), rat(0), rat(-1), rat(0)]);
        let s: Vector = e(4, 1).iter().zip(e(4, 2)).map(|(x, y)| x + y).collect();
        assert_eq!(a.product(&s, &e(4, 3)).unwrap(), e(4, 4));
        assert!(a.product(&e(3, 1), &e(4, 1)).is_err());
    }

    #[test]
    fn jacobian_examples() {
        let t3 = alg(3, "e1e2=e3");
        assert!(is_zero_vector(&t3.jacobian(&e(3, 1), &e(3, 2), &e(3, 3)).unwrap()));
        assert!(is_zero_vector(&t4_02().jacobian(&e(4, 1), &e(4, 1), &e(4, 2)).unwrap()));
        // (e3e1)e2 = -e4e2 = e2e4 = e5
        assert_eq!(t5_10().jacobian(&e(5, 1), &e(5, 2), &e(5, 3)).unwrap(), e(5, 5));
    }

    #[test]
    fn identity_witnesses() {
        let meta = t6_19().check_identity(IdentityKind::Metabelian);
        let w = meta.witness().expect("fails");
        assert_eq!(w.indices, vec![0, 1, 0, 2]);
        assert_eq!(w.lhs, e(6, 6));

        let malcev = t5_10().check_identity(IdentityKind::Malcev);
        let w = malcev.witness().expect("fails");
        // lexicographically first failure of the multilinear Malcev form
        assert_eq!(w.indices, vec![0, 0, 1, 1]);
        assert_eq!(w.lhs, zero_vector(5));
        assert_eq!(w.rhs, vec![rat(0), rat(0), rat(0), rat(0), rat(-1)]);

        assert!(t4_02().satisfies(IdentityKind::Malcev));
        assert!(t6_19().satisfies(IdentityKind::Tortkara));
        assert!(t4_02().satisfies(IdentityKind::Jacobi));
        let j = t5_10().check_identity(IdentityKind::Jacobi);
        assert_eq!(j.witness().unwrap().indices, vec![0, 1, 2]);
    }

    #[test]
    fn malcev_sides_at_1212() {
        let a = t5_10();
        let (lhs, rhs) = Tables::new(&a).sides(IdentityKind::Malcev, [0, 1, 0, 1]);
        assert_eq!(lhs, zero_vector(5));
        assert_eq!(rhs, vec![rat(0), rat(0), rat(0), rat(0), rat(2)]);
    }

    #[test]
    fn annihilators() {
        assert_eq!(Algebra::zero(4).annihilator().dim(), 4);
        assert_eq!(t4_02().annihilator(), Subspace::from_spanning(4, vec![e(4, 4)]).unwrap());
        let t6_01 = alg(6, "e1e2=e3; e1e3=e4; e1e4=e5; e2e3=e5; e2e4=e6");
        assert_eq!(
            t6_01.annihilator(),
            Subspace::from_spanning(6, vec![e(6, 5), e(6, 6)]).unwrap()
        );
    }

    #[test]
    fn series_examples() {
        assert_eq!(dims(&t4_02().series(SeriesKind::LowerCentral)), vec![4, 2, 1, 0]);
        assert_eq!(dims(&Algebra::zero(3).series(SeriesKind::LowerCentral)), vec![3, 0]);
        let d = t6_19().series(SeriesKind::Derived);
        assert_eq!(dims(&d), vec![6, 4, 1, 0]);
        assert!(d[2].contains(&e(6, 6)));
    }

    #[test]
    fn nilpotency() {
        assert_eq!(Algebra::zero(5).nilpotency_index(), Some(2));
        assert!(t6_19().is_nilpotent());
        let solvable = alg(2, "e1e2=e1");
        assert_eq!(solvable.nilpotency_index(), None);
        assert_eq!(dims(&solvable.series(SeriesKind::LowerCentral)), vec![2, 1]);
    }

    #[test]
    fn annihilator_components() {
        assert!(!t5_10().has_annihilator_component());
        let t6_00 = alg(6, "e1e2=e3; e1e3=e4; e2e4=e5");
        assert!(t6_00.has_annihilator_component());
        assert!(Algebra::zero(2).has_annihilator_component());
    }

    #[test]
    fn quotients() {
        let q = t4_02().quotient_by_annihilator().unwrap();
        assert!(q.algebra.same_table(&alg(3, "e1e2=e3")));
        assert_eq!(q.complement, vec![0, 1, 2]);

        let q = t5_10().quotient_by_annihilator().unwrap();
        assert!(q.algebra.same_table(&t4_02()));

        let q = Algebra::zero(3).quotient_by_annihilator().unwrap();
        assert!(q.is_zero);
        assert_eq!(q.algebra.dim(), 0);

        assert_eq!(
            alg(2, "e1e2=e1").quotient_by_annihilator().unwrap_err(),
            Error::ZeroAnnihilator
        );
    }

    #[test]
    fn quotient_map_is_multiplicative() {
        let a = alg(6, "e1e2=e3; e1e3=e4; e1e4=e5; e2e3=e5; e2e4=e6");
        let q = a.quotient_by_annihilator().unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let lhs = q.projection.mul_vec(&a.basis_product(i, j)).unwrap();
                let rhs = q.algebra.mul(
                    &q.projection.mul_vec(&e(6, i + 1)).unwrap(),
                    &q.projection.mul_vec(&e(6, j + 1)).unwrap(),
                );
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn change_of_basis_round_trip() {
        let a = t5_10();
        let p = Matrix::from_i64(&[
            &[1, 0, 0, 0, 0],
            &[2, 1, 0, 0, 0],
            &[0, 3, 1, 0, 0],
            &[0, 0, 0, 1, 1],
            &[0, 0, 0, 0, 1],
        ]);
        let b = a.change_basis(&p).unwrap();
        assert!(a.is_homomorphism_to(&b, &p.inverse().unwrap()));
        assert!(b.is_homomorphism_to(&a, &p));
        assert!(b.change_basis(&p.inverse().unwrap()).unwrap().same_table(&a));
    }

    #[test]
    fn display_and_parse_agree() {
        let a = alg(4, "e1e2=e3; e1e3=2*e4 - 1/2*e1");
        assert_eq!(a.to_string(), "e1e2=e3, e1e3=-1/2e1 + 2e4");
        assert_eq!(
            "metabelian".parse::<IdentityKind>().unwrap(),
            IdentityKind::Metabelian
        );
        assert!("foo".parse::<IdentityKind>().is_err());
    }
}
