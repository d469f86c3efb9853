use super::*;
use crate::scalar::q;

fn s3() -> GroupSpec {
    GroupSpec::symmetric(3)
}

fn perm(cs: &[&[u8]]) -> Tok {
    Tok::cycles(3, cs)
}

fn fn_example() -> PartialActionData {
    let g = s3();
    normal_subgroup_corner(&g, &g.alternating_subgroup()).unwrap()
}

fn f_n_times(h: Tok) -> Vector {
    let g = s3();
    let f = crate::algebra::averaging_idempotent(&g.alternating_subgroup());
    Algebra::group_algebra(&g).multiply(&f, &Vector::unit(h))
}

#[test]
fn corner_action_values() {
    let p = fn_example();
    let got = p.act_basis(&perm(&[&[1, 2]]), &f_n_times(perm(&[&[1, 3]])));
    assert_eq!(got, f_n_times(perm(&[&[1, 2]])).scale(&q(1, 3)));
    let zero = p.act_basis(&perm(&[&[1, 2]]), &f_n_times(perm(&[&[1, 2, 3]])));
    assert!(zero.is_zero());
}

#[test]
fn corner_rejects_bad_subgroups() {
    let g = s3();
    let not_closed = [perm(&[]), perm(&[&[1, 2]]), perm(&[&[1, 3]])];
    assert!(matches!(normal_subgroup_corner(&g, &not_closed), Err(Error::Structural(_))));
    let not_normal = [perm(&[]), perm(&[&[1, 2]])];
    assert!(matches!(normal_subgroup_corner(&g, &not_normal), Err(Error::Structural(_))));
}

#[test]
fn trivial_subgroup_is_global() {
    let g = s3();
    let p = normal_subgroup_corner(&g, &[g.identity()]).unwrap();
    let glob = global_pointwise(&g);
    for a in g.window(0) {
        for h in g.window(0) {
            assert_eq!(p.act_basis(&a, &Vector::unit(h.clone())), glob.act_basis(&a, &Vector::unit(h)));
        }
    }
}

#[test]
fn corner_example_is_symmetric_partial() {
    let p = fn_example();
    let w = p.acting.window(0);
    let r = check_partial_action(&p, &w);
    assert!(r.passed(), "{}", r.summary());
    let s = check_symmetric(&p, &w).unwrap();
    assert!(s.passed(), "{}", s.summary());
    let g = check_global(&p, &w, 6).unwrap();
    assert!(!g.item_passed("𝔢(a) = ε(a)·1"));
    assert!(!g.passed());
}

#[test]
fn global_action_passes_and_is_global() {
    let p = global_pointwise(&s3());
    let w = p.acting.window(0);
    assert!(check_partial_action(&p, &w).passed());
    assert!(check_symmetric(&p, &w).unwrap().passed());
    let g = check_global(&p, &w, 6).unwrap();
    assert!(g.passed(), "{}", g.summary());
}

#[test]
fn zeroed_pair_breaks_item_one() {
    let p = fn_example().zeroed_on(&perm(&[]), 0);
    let r = check_partial_action(&p, &p.acting.window(0));
    let item = r.item("(i) a·(x(b·y)) = (a₁·x)(a₂b·y)").unwrap();
    assert_eq!(item.outcome, crate::Outcome::Fail);
    assert!(item.witness.is_some());
}

#[test]
fn mutated_right_multiplier_breaks_item_six() {
    let p = fn_example().with_e_right(|_, x| x.clone());
    let r = check_symmetric(&p, &p.acting.window(0)).unwrap();
    assert!(!r.item_passed("(vi) (b·x)𝔢(a) = a₂·(S⁻¹(a₁)b·x)"));
}

#[test]
fn symmetric_needs_regular() {
    let p = fn_example();
    let broken = PartialActionData { acting: p.acting.without_antipode_inv(), ..p.clone() };
    assert!(matches!(check_symmetric(&broken, &p.acting.window(0)), Err(Error::Capability(_))));
}

#[test]
fn central_projection_induces_the_corner_example() {
    let g = s3();
    let m = ModuleAlgebra::pointwise(&g);
    let f = crate::algebra::averaging_idempotent(&g.alternating_subgroup());
    let pi = AProjection::central_idempotent(&m, &f, "fN").unwrap();
    let w = g.window(0);
    assert!(check_a_projection(&pi, &w, true).passed());
    let induced = induce_from_projection(&pi, &w).unwrap();
    let same = same_partial_action(&induced, &fn_example(), &w);
    assert!(same.passed(), "{}", same.summary());
    assert!(check_partial_action(&induced, &w).passed());
    assert!(check_symmetric(&induced, &w).unwrap().passed());
}

#[test]
fn identity_projection_recovers_global_action() {
    let g = s3();
    let m = ModuleAlgebra::pointwise(&g);
    let pi = AProjection::identity(&m);
    let w = g.window(0);
    assert!(check_a_projection(&pi, &w, true).passed());
    let induced = induce_from_projection(&pi, &w).unwrap();
    assert!(same_partial_action(&induced, &global_pointwise(&g), &w).passed());
}

#[test]
fn non_central_idempotent_fails_symmetry() {
    let g = s3();
    let m = ModuleAlgebra::pointwise(&g);
    let f = &Vector::unit(perm(&[])).scale(&q(1, 2)) + &Vector::unit(perm(&[&[1, 2]])).scale(&q(1, 2));
    let pi = AProjection::left_multiplication(&m, &f, "f12").unwrap();
    let r = check_a_projection(&pi, &g.window(0), true);
    let item = r.item("π(a▷((b▷x)y)) = π(a▷(π(b▷x)y))").unwrap();
    assert_eq!(item.outcome, crate::Outcome::Fail);
    assert!(item.witness.is_some());
    assert!(matches!(induce_from_projection(&pi, &g.window(0)), Err(Error::Rejected(_))));
}

#[test]
fn hom_corner_is_global() {
    let g = GroupSpec::cyclic(3);
    let m = ModuleAlgebra::hom_functions(&g).unwrap();
    let e = g.identity();
    let theta = Vector::indicator(g.window(0).iter().filter(|h| **h != e).map(|h| hom_key(&e, h)).collect::<Vec<_>>().iter());
    let pi = AProjection::central_idempotent(&m, &theta, "theta_e").unwrap();
    let w = g.window(0);
    assert!(check_module_algebra_law(&m, &w, &m.algebra.window(0)).passed());
    let induced = induce_from_projection(&pi, &w).unwrap();
    let r = check_global(&induced, &w, 3).unwrap();
    assert!(r.passed(), "{}", r.summary());
}

#[test]
fn quasi_unit_witnesses() {
    let g = s3();
    let n = vec![perm(&[]), perm(&[&[1, 2]])];
    let r = SubAlgebra::full(&Algebra::group_algebra(&g), 0);
    let p = subgroup_average_action(&g, &n, r).unwrap();
    let w = g.window(0);
    assert!(check_partial_action(&p, &w).passed());
    assert!(check_symmetric(&p, &w).unwrap().passed());
    let (rep, b) = check_quasi_unitary(&p, p.l_basis(), &w, 6);
    assert!(rep.passed());
    assert_eq!(b.unwrap(), Vector::indicator(&n));

    let corner = fn_example();
    let (rep, b) = check_quasi_unitary(&corner, corner.l_basis(), &w, 6);
    assert!(rep.passed());
    assert_eq!(b.unwrap(), Vector::indicator(&w));
    let (rep, b) = check_quasi_unitary(&corner, corner.l_basis(), &w, 2);
    assert_eq!(rep.outcome(), crate::Outcome::Inconclusive);
    assert!(b.is_none());
}

#[test]
fn phi_of_f_n() {
    let p = fn_example();
    let g = s3();
    let w = g.window(0);
    let f = f_n_times(perm(&[]));
    let phi = phi_embed(&p, &f, &w, 6).unwrap();
    for x in &w {
        let expect = if perm_even(x) { f_n_times(x.clone()).scale(&q(1, 3)) } else { Vector::zero() };
        assert_eq!(phi.at(x), expect, "{x}");
    }
    assert!(phi_embed(&p, &Vector::zero(), &w, 6).unwrap().is_zero());
    let x = f_n_times(perm(&[&[1, 2]]));
    let lhs = phi_embed(&p, &p.mul(&x, &x), &w, 6).unwrap();
    let px = phi_embed(&p, &x, &w, 6).unwrap();
    assert_eq!(lhs, crate::convolution::conv_mul(&p.acting, p.ambient(), &px, &px).unwrap());
}

fn perm_even(t: &Tok) -> bool {
    crate::group::perm_sign(t) == 1
}

#[test]
fn phi_does_not_depend_on_witness() {
    let p = fn_example();
    let w = s3().window(0);
    let x = f_n_times(perm(&[&[1, 3]]));
    let (b, _) = find_quasi_unit(&p, std::slice::from_ref(&x), &w, 6);
    let b = b.unwrap();
    let all = Vector::indicator(&w);
    assert_ne!(b, all);
    assert_eq!(
        envelope::phi_with_witness(&p, &x, &b).unwrap(),
        envelope::phi_with_witness(&p, &x, &all).unwrap()
    );
}

#[test]
fn standard_envelope_of_corner_example() {
    let p = fn_example();
    let w = s3().window(0);
    let env = globalize(&p, &w, 6).unwrap();
    let r = check_enveloping(&env, true);
    assert!(r.passed(), "{}", r.summary());
    assert!(check_minimal(&env).unwrap().passed());
    assert!(check_minimal_on(&env, &[]).passed());
    assert!(check_minimal_on(&env, &env.gens).passed());

    let zero_pi = env.with_pi("zero", |_| Flat::zero());
    let broken = check_enveloping(&zero_pi, true);
    assert!(!broken.item_passed("(iv) θ(a·x) = π(a▷θ(x))"));
}

#[test]
fn global_action_envelope_is_identity_on_theta() {
    let p = global_pointwise(&GroupSpec::cyclic(3));
    let w = p.acting.window(0);
    let env = globalize(&p, &w, 3).unwrap();
    assert!(check_enveloping(&env, true).passed());
    for t in env.theta_basis() {
        assert_eq!(env.pi(&t), t);
    }
}

#[test]
fn envelope_comparisons() {
    let p = fn_example();
    let w = s3().window(0);
    let env = globalize(&p, &w, 6).unwrap();
    let same = compare_envelopes(&env, &env).unwrap();
    assert!(same.report.passed(), "{}", same.report.summary());
    let copy = env.relabelled();
    assert!(check_enveloping(&copy, true).passed());
    let iso = compare_envelopes(&env, &copy).unwrap();
    assert!(iso.report.passed(), "{}", iso.report.summary());
    assert_eq!(iso.table.len(), env.gens.len());

    let junk = env.with_junk_summand();
    let minimal = check_minimal(&junk).unwrap();
    assert!(!minimal.passed());
    let epi = compare_envelopes(&junk, &env).unwrap();
    assert!(epi.report.item_passed("well-defined"));
    assert!(epi.report.item_passed("surjective"));
    assert!(!epi.report.item_passed("injective"));
    let witness = junk.act_basis(&perm(&[]), &junk.theta(&f_n_times(perm(&[&[1, 2]]))));
    assert!(!witness.is_zero());
    assert!(Echelon::from_vectors(&epi.kernel).contains(&witness));
}
