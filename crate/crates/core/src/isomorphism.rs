//! Invariant fingerprints, isomorphism witnesses and a bounded witness search.

use std::collections::{BTreeMap, HashSet};

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{pairs, Algebra, IdentityKind, SeriesKind, Tables};
use crate::cohomology::{cocycle_space_with, coboundary_space, Flavor};
use crate::error::{Error, Result};
use crate::exact::{rat, ratio, unit_vector, Matrix, Poly, Rational, Subspace, Vector};

/// Basis-independent invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub lower_central: Vec<usize>,
    pub derived: Vec<usize>,
    pub upper_central: Vec<usize>,
    pub ann: usize,
    pub square_meet_ann: usize,
    pub z2t: usize,
    pub b2: usize,
    pub jacobi: bool,
    pub malcev: bool,
    pub tortkara: bool,
    pub metabelian: bool,
    pub nilpotency_index: Option<usize>,
    pub derivations: usize,
}

pub fn fingerprint(a: &Algebra) -> Fingerprint {
    let dims = |s: Vec<Subspace>| s.iter().map(Subspace::dim).collect();
    let ann = a.annihilator();
    let t = Tables::new(a);
    let holds = |k: IdentityKind| a.check_identity_with(k, &t).holds();
    Fingerprint {
        dim: a.dim(),
        lower_central: dims(a.series(SeriesKind::LowerCentral)),
        derived: dims(a.series(SeriesKind::Derived)),
        upper_central: dims(a.upper_central_series()),
        ann: ann.dim(),
        square_meet_ann: a.square().intersection(&ann).expect("same ambient").dim(),
        z2t: cocycle_space_with(a, Flavor::Tortkara, &t).dim(),
        b2: coboundary_space(a).dim(),
        jacobi: holds(IdentityKind::Jacobi),
        malcev: holds(IdentityKind::Malcev),
        tortkara: holds(IdentityKind::Tortkara),
        metabelian: holds(IdentityKind::Metabelian),
        nilpotency_index: a.nilpotency_index(),
        derivations: a.derivation_dim(),
    }
}

/// Whether the matrix (columns: images of `a`'s basis in `b`) is an
/// isomorphism `a → b`.
pub fn verify_isomorphism(a: &Algebra, b: &Algebra, m: &Matrix) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    if m.rows() != a.dim() || m.cols() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: m.rows(),
        });
    }
    Ok(m.is_invertible() && a.is_homomorphism_to(b, m))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Witness(Matrix),
    /// The search ran out of budget; this proves nothing.
    NoneFound,
    /// Fingerprints differ.
    NotIsomorphic,
}

pub const DEFAULT_BUDGET: usize = 2_000;

/// Values tried when branching, in order.
fn grid(diagonal: bool) -> Vec<Rational> {
    let mut v = if diagonal {
        vec![rat(1), rat(0)]
    } else {
        vec![rat(0), rat(1)]
    };
    v.extend([rat(-1), rat(2), rat(-2), rat(3), rat(-3), ratio(1, 2), ratio(-1, 2)]);
    v
}

/// Searches for an isomorphism `a → b`.
///
/// The images of generators of `a` (unit vectors outside `A²`) are unknowns:
/// a linear block on a complement of `B²` plus coefficients on `B²`. Images
/// of the remaining basis vectors follow from products, and multiplicativity
/// on all basis pairs gives polynomial equations. These are solved by
/// substituting variables that occur linearly with a constant coefficient and
/// branching over a small rational grid otherwise. `budget` caps the number
/// of branch points.
pub fn search_isomorphism(a: &Algebra, b: &Algebra, budget: usize) -> SearchOutcome {
    if fingerprint(a) != fingerprint(b) {
        return SearchOutcome::NotIsomorphic;
    }
    let Some(problem) = Problem::build(a, b) else {
        return SearchOutcome::NoneFound;
    };
    let mut left = budget;
    match problem.solve(problem.equations.clone(), Vec::new(), &mut left) {
        Some(m) => SearchOutcome::Witness(m),
        None => SearchOutcome::NoneFound,
    }
}

struct Problem<'a> {
    a: &'a Algebra,
    b: &'a Algebra,
    vars: Vec<String>,
    /// Linear-block variables; the ones on the block diagonal are tried at 1 first.
    linear: Vec<String>,
    diagonal: HashSet<String>,
    /// `phi[row][col]`, columns are images of `a`'s basis.
    phi: Vec<Vec<Poly>>,
    equations: Vec<Poly>,
}

fn poly_product(b: &Algebra, u: &[Poly], v: &[Poly], zero: &Poly) -> Vec<Poly> {
    let mut out = vec![zero.clone(); b.dim()];
    for ((i, j), w) in b.products() {
        let c = &(&u[i] * &v[j]) - &(&u[j] * &v[i]);
        if c.is_zero() {
            continue;
        }
        for (k, x) in w.iter().enumerate() {
            if !x.is_zero() {
                out[k] = &out[k] + &c.scale(x);
            }
        }
    }
    out
}

impl<'a> Problem<'a> {
    fn build(a: &'a Algebra, b: &'a Algebra) -> Option<Self> {
        let n = a.dim();
        let gens = a.square().non_pivots();
        let b_square = b.square();
        let b_comp = b_square.non_pivots();
        if gens.len() != b_comp.len() {
            return None;
        }
        let mut vars = Vec::new();
        let mut linear = Vec::new();
        let mut diagonal = HashSet::new();
        for g in 0..gens.len() {
            for c in 0..b_comp.len() {
                let v = format!("L{g}_{c}");
                if g == c {
                    diagonal.insert(v.clone());
                }
                linear.push(v.clone());
                vars.push(v);
            }
            for r in 0..b_square.dim() {
                vars.push(format!("C{g}_{r}"));
            }
        }
        let mut sorted = vars.clone();
        sorted.sort();
        let zero = Poly::zero().over(&sorted);
        let var = |s: &str| Poly::var(s).over(&sorted);

        // images of generators
        let mut words: Vec<Vector> = Vec::new();
        let mut images: Vec<Vec<Poly>> = Vec::new();
        for (g, &gi) in gens.iter().enumerate() {
            let mut img = vec![zero.clone(); n];
            for (c, &ci) in b_comp.iter().enumerate() {
                img[ci] = var(&format!("L{g}_{c}"));
            }
            for (r, bv) in b_square.basis().iter().enumerate() {
                let cv = var(&format!("C{g}_{r}"));
                for (k, x) in bv.iter().enumerate() {
                    if !x.is_zero() {
                        img[k] = &img[k] + &cv.scale(x);
                    }
                }
            }
            words.push(unit_vector(n, gi));
            images.push(img);
        }
        // close under left multiplication by generators
        let mut span = Subspace::from_spanning(n, words.clone()).ok()?;
        let mut k = 0;
        while k < words.len() && span.dim() < n {
            for (g, &gi) in gens.iter().enumerate() {
                let w = a.mul(&unit_vector(n, gi), &words[k]);
                if span.contains(&w) {
                    continue;
                }
                let img = poly_product(b, &images[g], &images[k], &zero);
                words.push(w);
                images.push(img);
                span = Subspace::from_spanning(n, words.clone()).ok()?;
            }
            k += 1;
        }
        if span.dim() < n {
            return None;
        }
        // phi(e_j) = Σ_k (W⁻¹)_{kj} image_k
        let w_inv = Matrix::from_columns(n, &words).ok()?.inverse().ok()?;
        let mut phi = vec![vec![zero.clone(); n]; n];
        for j in 0..n {
            for (kk, img) in images.iter().enumerate() {
                let c = &w_inv[(kk, j)];
                if c.is_zero() {
                    continue;
                }
                for row in 0..n {
                    phi[row][j] = &phi[row][j] + &img[row].scale(c);
                }
            }
        }
        let col = |j: usize| -> Vec<Poly> { (0..n).map(|r| phi[r][j].clone()).collect() };
        let mut equations = Vec::new();
        let mut seen = HashSet::new();
        for (i, j) in pairs(n) {
            let lhs = poly_product(b, &col(i), &col(j), &zero);
            let prod = a.basis_product(i, j);
            for r in 0..n {
                let mut rhs = zero.clone();
                for (k, x) in prod.iter().enumerate() {
                    if !x.is_zero() {
                        rhs = &rhs + &phi[r][k].scale(x);
                    }
                }
                let e = &lhs[r] - &rhs;
                if !e.is_zero() && seen.insert(e.to_string()) {
                    equations.push(e);
                }
            }
        }
        Some(Self {
            a,
            b,
            vars: sorted,
            linear,
            diagonal,
            phi,
            equations,
        })
    }

    fn solve(&self, mut eqs: Vec<Poly>, mut elim: Vec<(String, Poly)>, budget: &mut usize) -> Option<Matrix> {
        loop {
            eqs.retain(|e| !e.is_zero());
            if eqs.iter().any(Poly::is_constant) {
                return None;
            }
            let mut order: Vec<usize> = (0..eqs.len()).collect();
            order.sort_by_key(|&i| eqs[i].num_terms());
            let step = order.iter().find_map(|&i| {
                eqs[i]
                    .used_vars()
                    .into_iter()
                    .find_map(|v| eqs[i].solve_linear_for(v).map(|(c, rest)| (v.to_string(), c, rest)))
            });
            let Some((v, c, rest)) = step else { break };
            let expr = rest.scale(&(-c.recip()));
            eqs = eqs.iter().map(|e| e.substitute(&v, &expr)).collect();
            elim.push((v, expr));
        }
        if eqs.is_empty() {
            return self.finish(&elim, budget);
        }
        if *budget == 0 {
            return None;
        }
        let eq = eqs.iter().min_by_key(|e| e.num_terms()).expect("nonempty");
        let used: Vec<String> = eq.used_vars().into_iter().map(str::to_string).collect();
        let branches: Vec<(String, Rational)> = if eq.is_monomial() {
            used.iter().map(|v| (v.clone(), Rational::zero())).collect()
        } else {
            let v = used
                .iter()
                .find(|v| self.linear.contains(v))
                .unwrap_or(&used[0])
                .clone();
            grid(self.diagonal.contains(&v)).into_iter().map(|x| (v.clone(), x)).collect()
        };
        for (v, x) in branches {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            let value = Poly::constant(x);
            let next: Vec<Poly> = eqs.iter().map(|e| e.substitute(&v, &value)).collect();
            let mut el = elim.clone();
            el.push((v, value));
            if let Some(m) = self.solve(next, el, budget) {
                return Some(m);
            }
        }
        None
    }

    /// Assigns the free variables and back-substitutes.
    fn finish(&self, elim: &[(String, Poly)], budget: &mut usize) -> Option<Matrix> {
        let bound: HashSet<&str> = elim.iter().map(|(v, _)| v.as_str()).collect();
        let free: Vec<&String> = self.vars.iter().filter(|v| !bound.contains(v.as_str())).collect();
        let free_linear: Vec<&String> = free.iter().copied().filter(|v| self.linear.contains(v)).collect();
        let small = [rat(0), rat(1), rat(-1)];
        let mut choice = vec![0usize; free_linear.len()];
        loop {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            let mut point: BTreeMap<String, Rational> = BTreeMap::new();
            for v in &free {
                point.insert((*v).clone(), Rational::zero());
            }
            for (k, v) in free_linear.iter().enumerate() {
                // first try: block diagonal 1, rest 0
                let base = if self.diagonal.contains(*v) { 1 } else { 0 };
                let idx = (choice[k] + base) % small.len();
                point.insert((*v).clone(), small[idx].clone());
            }
            for (v, e) in elim.iter().rev() {
                let val = e.eval(&point).ok()?;
                point.insert(v.clone(), val);
            }
            let n = self.a.dim();
            let rows = (0..n)
                .map(|r| (0..n).map(|c| self.phi[r][c].eval(&point)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()
                .ok()?;
            let m = Matrix::from_rows(n, rows).ok()?;
            if verify_isomorphism(self.a, self.b, &m).unwrap_or(false) {
                return Some(m);
            }
            // next combination of free linear values
            let mut k = 0;
            loop {
                if k == choice.len() {
                    return None;
                }
                choice[k] += 1;
                if choice[k] < small.len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairStatus {
    DistinctCertified,
    IsomorphicWitnessed,
    Undecided,
}

impl PairStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            PairStatus::DistinctCertified => "distinct-certified",
            PairStatus::IsomorphicWitnessed => "isomorphic-witnessed",
            PairStatus::Undecided => "undecided",
        }
    }
}

#[derive(Debug, Clone)]
pub struct PairResult {
    pub a: usize,
    pub b: usize,
    pub status: PairStatus,
    pub witness: Option<Matrix>,
}

#[derive(Debug, Clone)]
pub struct PairwiseReport {
    pub labels: Vec<String>,
    pub fingerprints: Vec<Fingerprint>,
    /// Indices grouped by equal fingerprint, in order of first appearance.
    pub groups: Vec<Vec<usize>>,
    /// Every pair `a < b`, in lexicographic order.
    pub pairs: Vec<PairResult>,
}

impl PairwiseReport {
    pub fn status(&self, a: usize, b: usize) -> Option<&PairStatus> {
        let (a, b) = (a.min(b), a.max(b));
        self.pairs.iter().find(|p| p.a == a && p.b == b).map(|p| &p.status)
    }
}

/// Fingerprints every algebra and searches for witnesses inside each group
/// of equal fingerprints.
pub fn pairwise_report(items: &[(String, Algebra)], budget: usize) -> PairwiseReport {
    let fingerprints: Vec<Fingerprint> = items.par_iter().map(|(_, a)| fingerprint(a)).collect();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, f) in fingerprints.iter().enumerate() {
        match groups.iter_mut().find(|g| &fingerprints[g[0]] == f) {
            Some(g) => g.push(i),
            None => groups.push(vec![i]),
        }
    }
    let n = items.len();
    let all: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let pairs = all
        .par_iter()
        .map(|&(i, j)| {
            if fingerprints[i] != fingerprints[j] {
                return PairResult {
                    a: i,
                    b: j,
                    status: PairStatus::DistinctCertified,
                    witness: None,
                };
            }
            match search_isomorphism(&items[i].1, &items[j].1, budget) {
                SearchOutcome::Witness(m) => PairResult {
                    a: i,
                    b: j,
                    status: PairStatus::IsomorphicWitnessed,
                    witness: Some(m),
                },
                _ => PairResult {
                    a: i,
                    b: j,
                    status: PairStatus::Undecided,
                    witness: None,
                },
            }
        })
        .collect();
    PairwiseReport {
        labels: items.iter().map(|(l, _)| l.clone()).collect(),
        fingerprints,
        groups,
        pairs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{get_alpha, get_plain};

    #[test]
    fn fingerprints() {
        let n6 = get_plain("N6").unwrap();
        let t = get_plain("T6_19").unwrap();
        assert_ne!(fingerprint(&n6), fingerprint(&t));
        assert_eq!(fingerprint(&t).lower_central[1], 4);
        assert_eq!(
            fingerprint(&get_alpha("T6_09", rat(1)).unwrap()),
            fingerprint(&get_alpha("T6_09", rat(-2)).unwrap())
        );
    }

    #[test]
    fn verification() {
        let a = get_plain("T4_02").unwrap();
        assert!(verify_isomorphism(&a, &a, &Matrix::identity(4)).unwrap());
        let d = Matrix::from_i64(&[&[2, 0, 0, 0], &[0, 3, 0, 0], &[0, 0, 6, 0], &[0, 0, 0, 12]]);
        assert!(verify_isomorphism(&a, &a, &d).unwrap());
        assert!(verify_isomorphism(&a, &get_plain("T5_10").unwrap(), &d).is_err());
    }

    #[test]
    fn searches() {
        let t3 = get_plain("T3_01").unwrap();
        assert_eq!(search_isomorphism(&t3, &get_plain("N3").unwrap(), 100), SearchOutcome::NotIsomorphic);
        let t = get_plain("T5_10").unwrap();
        assert!(matches!(search_isomorphism(&t, &t, 100), SearchOutcome::Witness(_)));
        let a = get_alpha("T6_09", rat(1)).unwrap();
        let b = get_alpha("T6_09", rat(-2)).unwrap();
        match search_isomorphism(&a, &b, DEFAULT_BUDGET) {
            SearchOutcome::Witness(m) => assert!(verify_isomorphism(&a, &b, &m).unwrap()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn search_through_basis_change() {
        let a = get_plain("T6_15").unwrap();
        let p = Matrix::from_i64(&[
            &[1, 1, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 2, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
        ]);
        let b = a.change_basis(&p).unwrap();
        match search_isomorphism(&a, &b, DEFAULT_BUDGET) {
            SearchOutcome::Witness(m) => assert!(verify_isomorphism(&a, &b, &m).unwrap()),
            other => panic!("{other:?}"),
        }
    }
}
