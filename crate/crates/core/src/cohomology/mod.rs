//! Second cohomology with trivial coefficients for the Tortkara and
//! Malcev-compatible cocycle conditions, and central extensions.

mod cocycle;
mod family;

pub use cocycle::Cocycle;
pub use family::{ActionTarget, AutFamily, TargetCheck};

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::algebra::{pair_count, pair_index, pairs, Algebra, IdentityKind, Quotient, Tables};
use crate::error::{Error, Result};
use crate::exact::{add_scaled, is_zero_vector, zero_vector, Matrix, Rational, RowReducer, Subspace, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Tortkara,
    MalcevCompatible,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Tortkara => "tortkara",
            Flavor::MalcevCompatible => "malcev-compatible",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tortkara" => Ok(Flavor::Tortkara),
            "malcev-compatible" | "malcev" => Ok(Flavor::MalcevCompatible),
            _ => Err(Error::Parse {
                input: s.to_string(),
                reason: "unknown cocycle flavor".into(),
            }),
        }
    }
}

/// Coordinates of the functional `θ ↦ θ(u, v)` over the Δ basis.
fn wedge(n: usize, u: &[Rational], v: &[Rational]) -> Vector {
    let mut row = zero_vector(pair_count(n));
    for p in 0..n {
        if u[p].is_zero() && v[p].is_zero() {
            continue;
        }
        for q in p + 1..n {
            let c = &u[p] * &v[q] - &u[q] * &v[p];
            if !c.is_zero() {
                row[pair_index(n, p, q)] = c;
            }
        }
    }
    row
}

/// Adds `sign · θ(u, e_t)` to `row`.
fn add_wedge_unit(n: usize, u: &[Rational], t: usize, sign: &Rational, row: &mut [Rational]) {
    for (p, x) in u.iter().enumerate() {
        if x.is_zero() || p == t {
            continue;
        }
        // θ(e_p, e_t) is Δ_pt for p < t and -Δ_tp otherwise
        if p < t {
            row[pair_index(n, p, t)] += x * sign;
        } else {
            row[pair_index(n, t, p)] -= x * sign;
        }
    }
}

/// `Z²_T(A)` or `Z²_TM(A)` as a subspace of the Δ coordinates.
pub fn cocycle_space(a: &Algebra, flavor: Flavor) -> Subspace {
    cocycle_space_with(a, flavor, &Tables::new(a))
}

pub(crate) fn cocycle_space_with(a: &Algebra, flavor: Flavor, tables: &Tables) -> Subspace {
    let n = a.dim();
    let big = pair_count(n);
    let prod = &tables.prod;
    // θ(e_a e_b, e_c e_d) for a < b, c < d, by pair index
    let ps = pairs(n);
    let w: Vec<Vec<Vector>> = ps
        .iter()
        .map(|&(p, q)| ps.iter().map(|&(r, s)| wedge(n, &prod[p][q], &prod[r][s])).collect())
        .collect();
    let plus = Rational::one();
    let minus = -Rational::one();
    let ww = |row: &mut Vector, a: usize, b: usize, c: usize, d: usize| {
        if a == b || c == d {
            return;
        }
        let sign = if (a < b) == (c < d) { &plus } else { &minus };
        add_scaled(row, sign, &w[pair_index(n, a.min(b), a.max(b))][pair_index(n, c.min(d), c.max(d))]);
    };

    let mut reducer = RowReducer::new(big);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for t in 0..n {
                    if reducer.is_full() {
                        return reducer.kernel();
                    }
                    // θ(xy,zt) + θ(xt,zy) - θ(J(x,y,z),t) - θ(J(x,t,z),y), symmetric in y, t
                    if y <= t {
                        let mut row = zero_vector(big);
                        ww(&mut row, x, y, z, t);
                        ww(&mut row, x, t, z, y);
                        add_wedge_unit(n, &tables.jac[x][y][z], t, &minus, &mut row);
                        add_wedge_unit(n, &tables.jac[x][t][z], y, &minus, &mut row);
                        if !is_zero_vector(&row) {
                            reducer.push(row);
                        }
                    }
                    if flavor == Flavor::MalcevCompatible {
                        // θ(wy,xz) - θ((wx)y,z) - θ((xy)z,w) - θ((yz)w,x) - θ((zw)x,y)
                        let (w, x, y, z) = (x, y, z, t);
                        let mut row = zero_vector(big);
                        ww(&mut row, w, y, x, z);
                        for (p, q, r, s) in [(w, x, y, z), (x, y, z, w), (y, z, w, x), (z, w, x, y)] {
                            add_wedge_unit(n, &tables.triple[p][q][r], s, &minus, &mut row);
                        }
                        if !is_zero_vector(&row) {
                            reducer.push(row);
                        }
                    }
                }
            }
        }
    }
    reducer.kernel()
}

/// `B²(A)`: the span of `δ(e_k*)`, `δf(x, y) = f(xy)`.
pub fn coboundary_space(a: &Algebra) -> Subspace {
    let n = a.dim();
    let vs = (0..n)
        .map(|k| pairs(n).into_iter().map(|(i, j)| a.basis_product(i, j)[k].clone()).collect())
        .collect();
    Subspace::from_spanning(pair_count(n), vs).expect("coboundaries have pair_count entries")
}

/// `δf` for a linear functional `f` given by its values on the basis.
pub fn coboundary(a: &Algebra, f: &[Rational]) -> Result<Cocycle> {
    if f.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: f.len(),
        });
    }
    let n = a.dim();
    let coeffs = pairs(n)
        .into_iter()
        .map(|(i, j)| {
            a.basis_product(i, j)
                .iter()
                .zip(f)
                .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
        })
        .collect();
    Cocycle::from_coords(n, coeffs)
}

/// `Z²`, `B²` and a canonical basis of representatives for `Z²/B²`.
#[derive(Debug, Clone)]
pub struct Cohomology {
    pub flavor: Flavor,
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    pub reps: Vec<Cocycle>,
}

impl Cohomology {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Whether the classes of `gens` span `Z²/B²`.
    pub fn spanned_by(&self, gens: &[Cocycle]) -> bool {
        let mut vs: Vec<Vector> = gens.iter().map(|g| g.coords().to_vec()).collect();
        vs.extend(self.coboundaries.basis().iter().cloned());
        Subspace::from_spanning(self.cocycles.ambient_dim(), vs)
            .map(|s| s == self.cocycles)
            .unwrap_or(false)
    }

    pub fn is_cocycle(&self, theta: &Cocycle) -> bool {
        self.cocycles.contains(theta.coords())
    }

    pub fn is_coboundary(&self, theta: &Cocycle) -> bool {
        self.coboundaries.contains(theta.coords())
    }
}

/// `H²` of the given flavor. The Malcev-compatible space is only defined for
/// Malcev algebras.
pub fn cohomology(a: &Algebra, flavor: Flavor) -> Result<Cohomology> {
    if flavor == Flavor::MalcevCompatible && !a.satisfies(IdentityKind::Malcev) {
        return Err(Error::NotMalcev);
    }
    let cocycles = cocycle_space(a, flavor);
    let coboundaries = coboundary_space(a);
    let reduced = cocycles.basis().iter().map(|z| coboundaries.reduce(z)).collect();
    let n = a.dim();
    let reps = Subspace::from_spanning(pair_count(n), reduced)?
        .basis()
        .iter()
        .map(|v| Cocycle::from_coords(n, v.clone()))
        .collect::<Result<_>>()?;
    Ok(Cohomology {
        flavor,
        cocycles,
        coboundaries,
        reps,
    })
}

fn check_square(a: &Algebra, m: &Matrix) -> Result<()> {
    if m.rows() != a.dim() || m.cols() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: if m.rows() != a.dim() { m.rows() } else { m.cols() },
        });
    }
    Ok(())
}

/// Columns of `m` are the images of the basis vectors.
pub fn is_automorphism(a: &Algebra, m: &Matrix) -> Result<bool> {
    check_square(a, m)?;
    Ok(m.is_invertible() && a.is_homomorphism_to(a, m))
}

/// `(φθ)(x, y) = θ(φx, φy)`, i.e. the form with matrix `φᵀ M φ`.
pub fn pullback(theta: &Cocycle, m: &Matrix) -> Result<Cocycle> {
    let n = theta.dim();
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.rows(),
        });
    }
    let g = m.transpose().mul(&theta.matrix())?.mul(m)?;
    Cocycle::from_matrix(&g)
}

/// `Ann(θ) = {x : θ(x, A) = 0}`.
pub fn cocycle_annihilator(theta: &Cocycle) -> Subspace {
    theta.matrix().kernel()
}

fn require_cocycles(z: &Cohomology, w: &[Cocycle]) -> Result<()> {
    if w.is_empty() {
        return Err(Error::NoCocycles);
    }
    for t in w {
        if t.dim() * t.dim().saturating_sub(1) / 2 != z.cocycles.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: z.cocycles.ambient_dim(),
                found: t.coords().len(),
            });
        }
        if !z.is_cocycle(t) {
            return Err(Error::NotACocycle(t.to_string()));
        }
    }
    Ok(())
}

/// Whether `⟨[θ₁],…,[θ_s]⟩` lies in `T_s(A)`: the classes are independent in
/// `H²_T` and `Ann(θ₁) ∩ … ∩ Ann(θ_s) ∩ Ann(A) = 0`.
pub fn in_ts(a: &Algebra, w: &[Cocycle]) -> Result<bool> {
    let h = cohomology(a, Flavor::Tortkara)?;
    require_cocycles(&h, w)?;
    let mut vs: Vec<Vector> = h.coboundaries.basis().to_vec();
    vs.extend(w.iter().map(|t| t.coords().to_vec()));
    let span = Subspace::from_spanning(h.cocycles.ambient_dim(), vs)?;
    if span.dim() != h.coboundaries.dim() + w.len() {
        return Err(Error::DependentClasses);
    }
    let mut meet = a.annihilator();
    for t in w {
        meet = meet.intersection(&cocycle_annihilator(t))?;
    }
    Ok(meet.is_zero())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MalcevClass {
    /// Every class has a Malcev-compatible representative.
    R,
    /// Some class does not.
    U,
}

impl fmt::Display for MalcevClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MalcevClass::R => "R",
            MalcevClass::U => "U",
        })
    }
}

pub fn malcev_subspace_class(a: &Algebra, w: &[Cocycle]) -> Result<MalcevClass> {
    if !a.satisfies(IdentityKind::Malcev) {
        return Err(Error::NotMalcev);
    }
    let ht = cohomology(a, Flavor::Tortkara)?;
    require_cocycles(&ht, w)?;
    let htm = cohomology(a, Flavor::MalcevCompatible)?;
    let inside = htm.cocycles.sum(&htm.coboundaries)?;
    Ok(if w.iter().all(|t| inside.contains(t.coords())) {
        MalcevClass::R
    } else {
        MalcevClass::U
    })
}

/// `A_θ` on `A ⊕ ⟨e_{n+1},…,e_{n+s}⟩` without checking the cocycle condition.
pub fn extend_unchecked(a: &Algebra, thetas: &[Cocycle]) -> Result<Algebra> {
    let n = a.dim();
    for t in thetas {
        if t.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: t.dim(),
            });
        }
    }
    let mut products = Vec::new();
    for (i, j) in pairs(n) {
        let mut v = a.basis_product(i, j);
        v.extend(thetas.iter().map(|t| t.coords()[pair_index(n, i, j)].clone()));
        if !is_zero_vector(&v) {
            products.push(((i, j), v));
        }
    }
    Algebra::new(n + thetas.len(), products)
}

/// Central extension by Tortkara cocycles.
pub fn central_extension(a: &Algebra, thetas: &[Cocycle]) -> Result<Algebra> {
    if thetas.is_empty() {
        return Err(Error::NoCocycles);
    }
    let z = cocycle_space(a, Flavor::Tortkara);
    for t in thetas {
        if t.dim() != a.dim() {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                found: t.dim(),
            });
        }
        if !z.contains(t.coords()) {
            return Err(Error::NotACocycle(t.to_string()));
        }
    }
    extend_unchecked(a, thetas)
}

/// `A ≅ A′_θ` with `A′ = A/Ann(A)`.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub quotient: Quotient,
    pub thetas: Vec<Cocycle>,
    /// `A` written in the adapted basis of the quotient.
    pub adapted: Algebra,
}

impl Decomposition {
    pub fn base(&self) -> &Algebra {
        &self.quotient.algebra
    }
}

/// Splits the product into its quotient part and its annihilator components.
pub fn decompose(a: &Algebra) -> Result<Decomposition> {
    let quotient = a.quotient_by_annihilator()?;
    if quotient.is_zero {
        return Err(Error::ZeroQuotient);
    }
    let n = a.dim();
    let m = quotient.complement.len();
    let adapted = a.change_basis(&quotient.adapted_basis)?;
    let mut coords = vec![zero_vector(pair_count(m)); n - m];
    for (p, q) in pairs(m) {
        let v = adapted.basis_product(p, q);
        for (k, c) in coords.iter_mut().enumerate() {
            c[pair_index(m, p, q)] = v[m + k].clone();
        }
    }
    let thetas = coords
        .into_iter()
        .map(|c| Cocycle::from_coords(m, c))
        .collect::<Result<Vec<_>>>()?;
    let rebuilt = extend_unchecked(&quotient.algebra, &thetas)?;
    if !rebuilt.same_table(&adapted) {
        return Err(Error::Format("annihilator decomposition does not reassemble".into()));
    }
    Ok(Decomposition {
        quotient,
        thetas,
        adapted,
    })
}

/// Sum `Σ c_k θ_k` of cocycles in the same dimension.
pub fn combination(terms: &[(Rational, &Cocycle)], dim: usize) -> Cocycle {
    let mut v = zero_vector(pair_count(dim));
    for (c, t) in terms {
        add_scaled(&mut v, c, t.coords());
    }
    Cocycle::from_coords(dim, v).expect("length matches")
}
