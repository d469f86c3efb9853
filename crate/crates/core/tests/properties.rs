use proptest::prelude::*;

use pmha_core::algebra::Algebra;
use pmha_core::convolution::{check_conv_associativity, random_triples, seeded_rng};
use pmha_core::linalg::{combine, intersection, Echelon};
use pmha_core::mha::MhaInstance;
use pmha_core::scalar::q;
use pmha_core::{tensor, GroupSpec, Scalar, Tensor, Tok, Vector};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| q(n, d))
}

fn vector(keys: i64) -> impl Strategy<Value = Vector> {
    prop::collection::vec((0..keys, scalar()), 0..5).prop_map(|ts| Vector::from_terms(ts.into_iter().map(|(k, c)| (Tok::Int(k), c))))
}

fn s3() -> GroupSpec {
    GroupSpec::symmetric(3)
}

/// A random element of a finite group's algebra, keyed by group elements.
fn group_vector(g: &GroupSpec) -> impl Strategy<Value = Vector> {
    let els: Vec<Tok> = g.window(0);
    prop::collection::vec((0..els.len(), scalar()), 0..4)
        .prop_map(move |ts| Vector::from_terms(ts.into_iter().map(|(i, c)| (els[i].clone(), c))))
}

proptest! {
    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if a != q(0, 1) {
            prop_assert_eq!(&a * &(q(1, 1) / &a), q(1, 1));
        }
    }

    #[test]
    fn finsup_is_a_vector_space(x in vector(6), y in vector(6), c in scalar(), d in scalar()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!((&x + &y).scale(&c), &x.scale(&c) + &y.scale(&c));
        prop_assert_eq!(x.scale(&(&c + &d)), &x.scale(&c) + &x.scale(&d));
        let mut z = x.clone();
        z.axpy(&c, &y);
        prop_assert_eq!(z, &x + &y.scale(&c));
        prop_assert!(x.iter().all(|(_, s)| *s != q(0, 1)));
    }

    #[test]
    fn tensor_is_bilinear(x in vector(4), y in vector(4), z in vector(4), c in scalar()) {
        prop_assert_eq!(tensor(&(&x + &y), &z), &tensor(&x, &z) + &tensor(&y, &z));
        prop_assert_eq!(tensor(&x, &(&y + &z)), &tensor(&x, &y) + &tensor(&x, &z));
        prop_assert_eq!(tensor(&x.scale(&c), &y), tensor(&x, &y.scale(&c)));
    }

    #[test]
    fn echelon_solutions_recombine(gens in prop::collection::vec(vector(5), 1..6), target in vector(5)) {
        let e = Echelon::from_vectors(&gens);
        for rel in e.relations() {
            prop_assert!(combine(rel, &gens).is_zero());
        }
        prop_assert_eq!(e.rank() + e.relations().len(), gens.len());
        match e.solve(&target) {
            Some(c) => prop_assert_eq!(combine(&c, &gens), target),
            None => prop_assert!(!e.contains(&target)),
        }
    }

    #[test]
    fn intersections_lie_in_both(a in prop::collection::vec(vector(4), 1..4), b in prop::collection::vec(vector(4), 1..4)) {
        let (ea, eb) = (Echelon::from_vectors(&a), Echelon::from_vectors(&b));
        let i = intersection(&a, &b);
        for v in &i {
            prop_assert!(ea.contains(v) && eb.contains(v));
        }
        // dim(A ∩ B) = dim A + dim B - dim(A + B)
        let sum = Echelon::from_vectors(a.iter().chain(&b));
        prop_assert_eq!(i.len() + sum.rank(), ea.rank() + eb.rank());
    }

    #[test]
    fn algebras_are_associative(x in group_vector(&s3()), y in group_vector(&s3()), z in group_vector(&s3())) {
        for alg in [Algebra::functions(&s3()), Algebra::group_algebra(&s3())] {
            let l = alg.multiply(&alg.multiply(&x, &y), &z);
            let r = alg.multiply(&x, &alg.multiply(&y, &z));
            prop_assert_eq!(l, r);
        }
    }

    #[test]
    fn coverage_maps_invert(x in group_vector(&s3()), y in group_vector(&s3()), u in group_vector(&s3()), v in group_vector(&s3())) {
        let t: Tensor = &tensor(&x, &y) + &tensor(&u, &v);
        for name in ["A_G:symmetric:3", "kG:symmetric:3"] {
            let m = MhaInstance::parse(name).unwrap();
            prop_assert_eq!(m.t1_inv(&m.t1(&t)), t.clone());
            prop_assert_eq!(m.t2(&m.t2_inv(&t)), t.clone());
        }
    }

    #[test]
    fn multiplicative_counit_and_antipode(x in group_vector(&s3()), y in group_vector(&s3())) {
        for name in ["A_G:symmetric:3", "kG:symmetric:3"] {
            let m = MhaInstance::parse(name).unwrap();
            let xy = m.multiply(&x, &y);
            prop_assert_eq!(m.counit(&xy), m.counit(&x) * m.counit(&y));
            prop_assert_eq!(m.antipode(&xy), m.multiply(&m.antipode(&y), &m.antipode(&x)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn convolution_associative_with_agreeing_routes(seed in any::<u64>()) {
        let g = s3();
        let (m, r) = (MhaInstance::function_algebra(&g), Algebra::group_algebra(&g));
        let mut rng = seeded_rng(seed);
        let triples = random_triples(&m, &r, &mut rng, 2);
        let rep = check_conv_associativity(&m, &r, &triples).unwrap();
        prop_assert!(rep.passed(), "{}", rep.summary());
    }
}
