use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tortkara::algebra::pair_count;
use tortkara::catalog;
use tortkara::cohomology::{
    cocycle_annihilator, cocycle_space, coboundary, coboundary_space, extend_unchecked, is_automorphism,
    pullback,
};
use tortkara::exact::{format_rational, rat, ratio, unit_vector, Matrix, Poly, Rational, Subspace, Vector};
use tortkara::isomorphism::{fingerprint, verify_isomorphism};
use tortkara::verify::sample;
use tortkara::{Algebra, Flavor, IdentityKind, SeriesKind};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(small_rational(), cols), rows)
        .prop_map(move |r| Matrix::from_rows(cols, r).unwrap())
}

fn spanned(n: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), 0..=n)
        .prop_map(move |vs| Subspace::from_spanning(n, vs.into_iter().map(|v| v.into_iter().map(rat).collect()).collect()).unwrap())
}

/// `e_i e_j` in the span of `e_k`, `k > j`: nilpotent, with `e_n` central.
fn nilpotent(n: usize, seed: u64) -> Algebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut products = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v: Vector = (0..n)
                .map(|k| if k > j && rng.gen_bool(0.5) { sample::small(&mut rng, 2) } else { rat(0) })
                .collect();
            products.push(((i, j), v));
        }
    }
    Algebra::new(n, products).unwrap()
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| sample::small(rng, 3)).collect()
}

/// Catalog algebras satisfying the Tortkara identity, with parametric entries at `α = 2`.
fn tortkara_catalog() -> Vec<Algebra> {
    catalog::entries()
        .iter()
        .filter_map(|e| {
            let params: BTreeMap<String, Rational> = e.params.iter().map(|p| (p.to_string(), rat(2))).collect();
            catalog::get(e.name, &params).ok()
        })
        .filter(|a| a.satisfies(IdentityKind::Tortkara))
        .collect()
}

fn big(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn wide() -> impl Strategy<Value = (i64, i64)> {
    let num = prop_oneof![Just(i64::MAX), Just(i64::MIN), Just(i64::MIN + 1), -1000i64..1000, any::<i64>()];
    let den = prop_oneof![Just(i64::MAX), 1i64..50, any::<i64>().prop_filter("nonzero", |d| *d != 0)];
    (num, den)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_matches_bigrational((an, ad) in wide(), (bn, bd) in wide()) {
        let (x, y) = (Rational::new(an.into(), ad.into()), Rational::new(bn.into(), bd.into()));
        let (bx, by) = (big(an, ad), big(bn, bd));
        let show = |r: &BigRational| if r.is_integer() { r.numer().to_string() } else { format!("{}/{}", r.numer(), r.denom()) };
        prop_assert_eq!(format_rational(&(&x + &y)), show(&(&bx + &by)));
        prop_assert_eq!(format_rational(&(&x - &y)), show(&(&bx - &by)));
        prop_assert_eq!(format_rational(&(&x * &y)), show(&(&bx * &by)));
        prop_assert_eq!(format_rational(&-&x), show(&-&bx));
        if by != BigRational::from_integer(0.into()) {
            prop_assert_eq!(format_rational(&(&x / &y)), show(&(&bx / &by)));
        }
        prop_assert_eq!(x.cmp(&y), bx.cmp(&by));
        prop_assert_eq!(x == y, bx == by);
    }

    #[test]
    fn rank_nullity(m in (1usize..5, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        for v in k.basis() {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| *x == rat(0)));
        }
    }

    #[test]
    fn inverse_is_two_sided(seed in any::<u64>(), n in 1usize..6) {
        let p = sample::invertible(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let q = p.inverse().unwrap();
        prop_assert_eq!(p.mul(&q).unwrap(), Matrix::identity(n));
        prop_assert_eq!(q.mul(&p).unwrap(), Matrix::identity(n));
    }

    #[test]
    fn subspace_lattice(u in spanned(4), w in spanned(4), x in spanned(4)) {
        let s = u.sum(&w).unwrap();
        let i = u.intersection(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(i.is_subspace_of(&u) && i.is_subspace_of(&w));
        prop_assert!(u.is_subspace_of(&s) && w.is_subspace_of(&s));
        if u.is_subspace_of(&x) {
            // modular law
            let lhs = u.sum(&w.intersection(&x).unwrap()).unwrap();
            let rhs = u.sum(&w).unwrap().intersection(&x).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn canonical_basis_is_idempotent(u in spanned(5)) {
        let again = Subspace::from_spanning(5, u.basis().to_vec()).unwrap();
        prop_assert_eq!(&again, &u);
        let reversed: Vec<Vector> = u.basis().iter().rev().map(|v| v.iter().map(|x| x * &rat(-3)).collect()).collect();
        prop_assert_eq!(Subspace::from_spanning(5, reversed).unwrap(), u);
    }

    #[test]
    fn poly_ring_laws(
        terms in prop::collection::vec(prop::collection::vec((-3i64..=3, 0u32..3, 0u32..3), 0..4), 3),
        (x0, y0) in (small_rational(), small_rational()),
    ) {
        let build = |ts: &[(i64, u32, u32)]| ts.iter().fold(Poly::zero(), |acc, &(c, ex, ey)| {
            let m = &Poly::var("x").pow(ex) * &Poly::var("y").pow(ey);
            &acc + &m.scale(&rat(c))
        });
        let (p, q, r) = (build(&terms[0]), build(&terms[1]), build(&terms[2]));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p - &p, Poly::zero());
        let pt = BTreeMap::from([("x".to_string(), x0), ("y".to_string(), y0)]);
        let at = |f: &Poly| f.eval(&pt).unwrap();
        prop_assert_eq!(at(&(&p * &q)), &at(&p) * &at(&q));
        prop_assert_eq!(at(&(&p + &q)), &at(&p) + &at(&q));
    }

    #[test]
    fn product_is_bilinear_and_anticommutative(n in 2usize..6, seed in any::<u64>()) {
        let a = nilpotent(n, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        let (u, v, w) = (random_vector(&mut rng, n), random_vector(&mut rng, n), random_vector(&mut rng, n));
        let c = sample::small(&mut rng, 3);
        let uv: Vector = u.iter().zip(&v).map(|(x, y)| x + &(&c * y)).collect();
        let lhs = a.product(&uv, &w).unwrap();
        let rhs: Vector = a.product(&u, &w).unwrap().iter().zip(a.product(&v, &w).unwrap()).map(|(x, y)| x + &(&c * &y)).collect();
        prop_assert_eq!(lhs, rhs);
        let swapped: Vector = a.product(&w, &u).unwrap().iter().map(|x| -x).collect();
        prop_assert_eq!(a.product(&u, &w).unwrap(), swapped);
        let j = a.jacobian(&u, &v, &w).unwrap();
        let j_swapped: Vector = a.jacobian(&v, &u, &w).unwrap().iter().map(|x| -x).collect();
        prop_assert_eq!(j, j_swapped);
    }

    #[test]
    fn series_terms_are_ideals(n in 2usize..6, seed in any::<u64>()) {
        let a = nilpotent(n, seed);
        prop_assert!(a.is_nilpotent());
        for kind in [SeriesKind::LowerCentral, SeriesKind::Derived] {
            let s = a.series(kind);
            for t in &s {
                prop_assert!(a.is_ideal(t));
            }
            for pair in s.windows(2) {
                prop_assert!(pair[1].is_subspace_of(&pair[0]));
            }
        }
        for t in a.upper_central_series() {
            prop_assert!(a.is_ideal(&t));
        }
    }

    #[test]
    fn quotient_projection_is_multiplicative(n in 2usize..6, seed in any::<u64>()) {
        let a = nilpotent(n, seed);
        let q = a.quotient_by_annihilator().unwrap();
        let p = &q.projection;
        for i in 0..n {
            for j in 0..n {
                let (ei, ej) = (unit_vector(n, i), unit_vector(n, j));
                let lhs = p.mul_vec(&a.product(&ei, &ej).unwrap()).unwrap();
                let rhs = q.algebra.product(&p.mul_vec(&ei).unwrap(), &p.mul_vec(&ej).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coboundaries_are_tortkara_cocycles(idx in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let algebras = tortkara_catalog();
        let a = idx.get(&algebras);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_vector(&mut rng, a.dim());
        let theta = coboundary(a, &f).unwrap();
        let z = cocycle_space(a, Flavor::Tortkara);
        prop_assert!(z.contains(theta.coords()));
        prop_assert!(coboundary_space(a).is_subspace_of(&z));
    }

    #[test]
    fn extension_is_tortkara_iff_cocycle(idx in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let algebras = tortkara_catalog();
        let a = idx.get(&algebras);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let theta = if rng.gen_bool(0.5) { sample::cocycle(&mut rng, a) } else { sample::form(&mut rng, a.dim()) };
        let ext = extend_unchecked(a, std::slice::from_ref(&theta)).unwrap();
        prop_assert_eq!(
            ext.satisfies(IdentityKind::Tortkara),
            cocycle_space(a, Flavor::Tortkara).contains(theta.coords())
        );
    }

    #[test]
    fn annihilator_of_extension(idx in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let algebras = tortkara_catalog();
        let a = idx.get(&algebras);
        let n = a.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let theta = sample::cocycle(&mut rng, a);
        let ext = extend_unchecked(a, std::slice::from_ref(&theta)).unwrap();
        let expected = a
            .annihilator()
            .intersection(&cocycle_annihilator(&theta))
            .unwrap()
            .embed(n + 1, 0)
            .unwrap()
            .sum(&Subspace::from_spanning(n + 1, vec![unit_vector(n + 1, n)]).unwrap())
            .unwrap();
        prop_assert_eq!(ext.annihilator(), expected);
    }

    #[test]
    fn fingerprint_is_invariant(idx in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let algebras = tortkara_catalog();
        let a = idx.get(&algebras);
        let p = sample::invertible(&mut ChaCha8Rng::seed_from_u64(seed), a.dim());
        let b = a.change_basis(&p).unwrap();
        prop_assert_eq!(fingerprint(a), fingerprint(&b));
        // P maps the new basis to the old one, so P^{-1} carries A onto B
        prop_assert!(verify_isomorphism(a, &b, &p.inverse().unwrap()).unwrap());
        prop_assert!(verify_isomorphism(&b, a, &p).unwrap());
    }
}

/// Random points of every stored family are automorphisms, and pulling back
/// along them preserves `Z²_T` and `B²`.
#[test]
fn family_specializations_are_automorphisms() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for name in catalog::list_names(catalog::Filter { dim: None, family: Some(true) }) {
        let a = catalog::get_plain(name).unwrap();
        let family = catalog::aut_family(name).unwrap();
        let z = cocycle_space(&a, Flavor::Tortkara);
        let b = coboundary_space(&a);
        let mut hits = 0;
        for _ in 0..40 {
            let point: BTreeMap<String, Rational> =
                family.params().iter().map(|p| (p.clone(), sample::small(&mut rng, 2))).collect();
            let Ok(m) = family.specialize(&point) else { continue };
            hits += 1;
            assert!(is_automorphism(&a, &m).unwrap(), "{name} at {point:?}");
            for v in z.basis() {
                let theta = tortkara::Cocycle::from_coords(a.dim(), v.clone()).unwrap();
                assert!(z.contains(pullback(&theta, &m).unwrap().coords()), "{name}");
            }
            for v in b.basis() {
                let theta = tortkara::Cocycle::from_coords(a.dim(), v.clone()).unwrap();
                assert!(b.contains(pullback(&theta, &m).unwrap().coords()), "{name}");
            }
        }
        assert!(hits > 5, "{name}: too few nonsingular samples");
        assert_eq!(pair_count(a.dim()), z.ambient_dim());
    }
}
