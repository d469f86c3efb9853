//! Partial group actions with multiplier data σ_g and the correspondence with
//! symmetric partial actions of the group algebra 𝕜G, which plays the role of Â_G
//! (the basis element g stands for φ(_δ_g)).

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{check_s_unital_left, multiplier_check, named_idempotent, Algebra, CornerAlgebra, Multiplier, SubAlgebra};
use crate::error::{Error, Result};
use crate::finsup::Vector;
use crate::group::{perm_sign, GroupSpec};
use crate::linalg::{combine, intersection, Echelon};
use crate::mha::MhaInstance;
use crate::partial_action::{check_partial_action, check_symmetric, PartialActionData};
use crate::report::{Report, Tally};
use crate::token::Tok;

type GroupRule = Arc<dyn Fn(&Tok, &Vector) -> Vector + Send + Sync>;

/// Ideals R_g = σ_g R and isomorphisms α_g: R_{g⁻¹} → R_g.
#[derive(Clone)]
pub struct PartialGroupAction {
    pub name: String,
    pub group: GroupSpec,
    pub algebra: SubAlgebra,
    pub sigma: BTreeMap<Tok, Multiplier>,
    alpha: GroupRule,
}

impl std::fmt::Debug for PartialGroupAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PartialGroupAction").field("name", &self.name).finish()
    }
}

fn finite_elements(g: &GroupSpec) -> Result<Vec<Tok>> {
    g.elements()
        .map(<[Tok]>::to_vec)
        .ok_or_else(|| Error::Capability(format!("{} is infinite; partial group actions need finitely many corners", g.name())))
}

impl PartialGroupAction {
    pub fn new(
        name: &str,
        group: &GroupSpec,
        algebra: SubAlgebra,
        sigma: BTreeMap<Tok, Multiplier>,
        alpha: impl Fn(&Tok, &Vector) -> Vector + Send + Sync + 'static,
    ) -> Result<Self> {
        for g in finite_elements(group)? {
            if !sigma.contains_key(&g) {
                return Err(Error::Structural(format!("no σ given for {g}")));
            }
        }
        Ok(PartialGroupAction { name: name.to_string(), group: group.clone(), algebra, sigma, alpha: Arc::new(alpha) })
    }

    /// A global action β on all of R: σ_g = 1.
    pub fn global(
        name: &str,
        group: &GroupSpec,
        algebra: SubAlgebra,
        beta: impl Fn(&Tok, &Vector) -> Vector + Send + Sync + 'static,
    ) -> Result<Self> {
        let sigma = finite_elements(group)?
            .into_iter()
            .map(|g| (g, Multiplier::identity(algebra.basis.clone())))
            .collect();
        Self::new(name, group, algebra, sigma, beta)
    }

    /// The restriction of a global action β of G on a finite-dimensional algebra to the
    /// ideal fR of a central idempotent f: R_g = fR ∩ β_g(fR), σ_g = f β_g(f).
    pub fn restrict(
        name: &str,
        group: &GroupSpec,
        ambient: &Algebra,
        f: &Vector,
        beta: impl Fn(&Tok, &Vector) -> Vector + Send + Sync + 'static,
    ) -> Result<Self> {
        let corner = CornerAlgebra::new(ambient, f, name)?.subalgebra();
        let mut sigma = BTreeMap::new();
        for g in finite_elements(group)? {
            let s = ambient.multiply(f, &beta(&g, f));
            sigma.insert(g, Multiplier::from_element(ambient, &s, corner.basis.clone()));
        }
        Self::new(name, group, corner, sigma, beta)
    }

    pub fn alpha(&self, g: &Tok, x: &Vector) -> Vector {
        (self.alpha)(g, x)
    }

    pub fn sigma(&self, g: &Tok) -> &Multiplier {
        &self.sigma[g]
    }

    pub fn elements(&self) -> Vec<Tok> {
        finite_elements(&self.group).unwrap_or_default()
    }

    fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.algebra.multiply(x, y)
    }

    /// A basis of R_g = σ_g R.
    pub fn corner(&self, g: &Tok) -> Vec<Vector> {
        let s = self.sigma(g);
        let images: Vec<Vector> = self.algebra.basis.iter().map(|x| s.left(x)).collect();
        Echelon::from_vectors(&images).basis()
    }

    /// α_g^{-1}(y) for y ∈ R_g, solved on the basis of R_{g⁻¹}.
    pub fn alpha_inverse(&self, g: &Tok, y: &Vector) -> Option<Vector> {
        let src = self.corner(&self.group.inv(g));
        let images: Vec<Vector> = src.iter().map(|x| self.alpha(g, x)).collect();
        Echelon::from_vectors(&images).solve(y).map(|c| combine(&c, &src))
    }

    /// The same data with α_{g0} replaced.
    pub fn with_alpha_at(&self, g0: &Tok, f: impl Fn(&Vector) -> Vector + Send + Sync + 'static) -> Self {
        let old = self.alpha.clone();
        let g0 = g0.clone();
        PartialGroupAction {
            name: format!("{}[α {g0}]", self.name),
            alpha: Arc::new(move |g, x| if *g == g0 { f(x) } else { old(g, x) }),
            ..self.clone()
        }
    }

    pub fn with_sigma(&self, g: &Tok, m: Multiplier) -> Self {
        let mut sigma = self.sigma.clone();
        sigma.insert(g.clone(), m);
        PartialGroupAction { name: format!("{}[σ {g}]", self.name), sigma, ..self.clone() }
    }
}

fn same_span(a: &[Vector], b: &[Vector]) -> bool {
    Echelon::from_vectors(a).same_span(&Echelon::from_vectors(b))
}

fn render_span(v: &[Vector]) -> String {
    format!("⟨{}⟩", v.iter().map(|x| x.render()).collect::<Vec<_>>().join(", "))
}

/// Items (i), (ii′) and (iii) of a partial group action, plus α_g being an algebra
/// isomorphism R_{g⁻¹} → R_g.
pub fn check_pga(p: &PartialGroupAction) -> Report {
    let els = p.elements();
    let rb = &p.algebra.basis;
    let mut report = Report::new("check_pga", &format!("{} over {} with R of dimension {}", p.name, p.group.name(), rb.len()));
    let e = p.group.identity();
    let mut first = Tally::new("(i) R_1 = R and α_1 = id");
    first.case(same_span(&p.corner(&e), rb), || format!("R_1 = {}", render_span(&p.corner(&e))));
    for x in rb {
        first.case(p.alpha(&e, x) == *x, || format!("α_1({}) = {}", x.render(), p.alpha(&e, x).render()));
    }
    report.push(first);

    let mut iso = Tally::new("α_g: R_{g⁻¹} → R_g is an algebra isomorphism");
    for g in &els {
        let src = p.corner(&p.group.inv(g));
        let images: Vec<Vector> = src.iter().map(|x| p.alpha(g, x)).collect();
        iso.case(
            Echelon::from_vectors(&images).rank() == src.len() && same_span(&images, &p.corner(g)),
            || format!("g={g}: α_g(R_g⁻¹) = {} vs R_g = {}", render_span(&images), render_span(&p.corner(g))),
        );
        for x in &src {
            for y in &src {
                let (l, r) = (p.alpha(g, &p.mul(x, y)), p.mul(&p.alpha(g, x), &p.alpha(g, y)));
                iso.case(l == r, || format!("g={g}, x={}, y={}", x.render(), y.render()));
            }
        }
    }
    report.push(iso);

    let mut inter = Tally::new("R_g ∩ R_h = σ_gσ_h R");
    let mut second = Tally::new("(ii′) α_g(R_{g⁻¹} ∩ R_h) = R_g ∩ R_{gh}");
    let mut third = Tally::new("(iii) α_g∘α_h = α_{gh} on α_h⁻¹(R_h ∩ R_{g⁻¹})");
    for g in &els {
        let gi = p.group.inv(g);
        for h in &els {
            let direct = intersection(&p.corner(g), &p.corner(h));
            let via_sigma: Vec<Vector> = rb.iter().map(|x| p.sigma(g).left(&p.sigma(h).left(x))).collect();
            inter.case(same_span(&direct, &via_sigma), || format!("g={g}, h={h}"));

            let dom = intersection(&p.corner(&gi), &p.corner(h));
            let img: Vec<Vector> = dom.iter().map(|x| p.alpha(g, x)).collect();
            let want = intersection(&p.corner(g), &p.corner(&p.group.mul(g, h)));
            second.case(same_span(&img, &want), || {
                format!("g={g}, h={h}: {} vs {}", render_span(&img), render_span(&want))
            });

            let target = intersection(&p.corner(h), &p.corner(&gi));
            let gh = p.group.mul(g, h);
            for y in &target {
                match p.alpha_inverse(h, y) {
                    Some(x) => {
                        let (l, r) = (p.alpha(g, &p.alpha(h, &x)), p.alpha(&gh, &x));
                        third.case(l == r, || format!("g={g}, h={h}, x={}: {} vs {}", x.render(), l.render(), r.render()));
                    }
                    None => {
                        third.case(false, || format!("h={h}: {} has no preimage under α_h", y.render()));
                    }
                }
            }
        }
    }
    report.push(inter);
    report.push(second);
    report.push(third);
    report
}

/// The σ conditions: central idempotents, α_g(σ_{g⁻¹}σ_h) = σ_gσ_{gh},
/// α_g(x) = α_g(x)σ_g and Rσ_g ⊆ R_g.
pub fn check_sigma_conditions(p: &PartialGroupAction) -> Result<Report> {
    let els = p.elements();
    let rb = &p.algebra.basis;
    let mut report = Report::new("check_sigma_conditions", &format!("{} over {}", p.name, p.group.name()));
    let mut first = Tally::new("(i) σ_g central idempotent");
    for g in &els {
        let s = p.sigma(g);
        for x in rb {
            let sx = s.left(x);
            first.case(s.left(&sx) == sx && sx == s.right(x), || format!("σ_{g} at {}", x.render()));
        }
        match multiplier_check(&p.algebra.ambient, s, rb) {
            Ok(r) => {
                let summary = r.summary();
                first.case(r.passed(), || format!("σ_{g}: {summary}"));
            }
            Err(e) => {
                first.case(false, || format!("σ_{g}: {e}"));
            }
        }
    }
    report.push(first);

    let mut second = Tally::new("(ii) α_g(σ_{g⁻¹}σ_h) = σ_gσ_{gh}");
    for g in &els {
        let gi = p.group.inv(g);
        for h in &els {
            let gh = p.group.mul(g, h);
            for y in p.corner(g) {
                // The extension of α_g to multipliers: α_g(m)y = α_g(m α_g⁻¹(y)).
                let x = p.alpha_inverse(g, &y).ok_or_else(|| {
                    Error::Capability(format!("α_{g} does not reach {} in R_g; no extension to multipliers", y.render()))
                })?;
                let l = p.alpha(g, &p.sigma(&gi).left(&p.sigma(h).left(&x)));
                let r = p.sigma(g).left(&p.sigma(&gh).left(&y));
                second.case(l == r, || format!("g={g}, h={h}, y={}: {} vs {}", y.render(), l.render(), r.render()));
            }
        }
    }
    report.push(second);

    let mut third = Tally::new("(iii) α_g(x) = α_g(x)σ_g");
    let mut fourth = Tally::new("(iv) Rσ_g ⊆ R_g");
    for g in &els {
        for x in p.corner(&p.group.inv(g)) {
            let a = p.alpha(g, &x);
            third.case(p.sigma(g).right(&a) == a, || format!("g={g}, x={}", x.render()));
        }
        let corner = Echelon::from_vectors(&p.corner(g));
        for x in rb {
            let y = p.sigma(g).right(x);
            fourth.case(corner.contains(&y), || format!("g={g}: {}σ_g = {}", x.render(), y.render()));
        }
    }
    report.push(third);
    report.push(fourth);
    Ok(report)
}

/// γ_g(x) = α_g(xσ_{g⁻¹}), the multiplier whose right action on R_g must be α_gV_xα_{g⁻¹}.
pub fn gamma(p: &PartialGroupAction, g: &Tok, x: &Vector) -> Vector {
    p.alpha(g, &p.sigma(&p.group.inv(g)).right(x))
}

/// Each R_g is left s-unital, and γ_g(x) satisfies Rγ_g(x) ⊆ R_g and
/// yγ_g(x) = α_g(α_{g⁻¹}(y)x) on R_g.
pub fn check_globalizability(p: &PartialGroupAction) -> Report {
    let els = p.elements();
    let rb = &p.algebra.basis;
    let mut report = Report::new("check_globalizability", &format!("{} over {}", p.name, p.group.name()));
    let mut sunital = Tally::new("(i) R_g left s-unital");
    for g in &els {
        let r = check_s_unital_left(&p.algebra.ambient, &p.corner(g));
        sunital.case(r.passed(), || format!("R_{g}: {}", r.summary()));
    }
    report.push(sunital);
    let mut inside = Tally::new("(ii) Rγ_g(x) ⊆ R_g");
    let mut table = Tally::new("(ii) yγ_g(x) = α_g(α_{g⁻¹}(y)x) on R_g");
    for g in &els {
        let gi = p.group.inv(g);
        let corner_basis = p.corner(g);
        let corner = Echelon::from_vectors(&corner_basis);
        for x in rb {
            let gx = gamma(p, g, x);
            for r in rb {
                let v = p.mul(r, &gx);
                inside.case(corner.contains(&v), || format!("g={g}, x={}, r={}", x.render(), r.render()));
            }
            for y in &corner_basis {
                let l = p.mul(y, &gx);
                let r = p.alpha(g, &p.mul(&p.alpha(&gi, y), x));
                table.case(l == r, || format!("g={g}, x={}, y={}: {} vs {}", x.render(), y.render(), l.render(), r.render()));
            }
        }
    }
    report.push(inside);
    report.push(table);
    report
}

/// g·x = α_g(xσ_{g⁻¹}) with 𝔢(g) = σ_g, as a partial action of 𝕜G.
pub fn to_hopf(p: &PartialGroupAction) -> Result<PartialActionData> {
    let pga = check_pga(p);
    let sig = check_sigma_conditions(p)?;
    if !pga.passed() || !sig.passed() {
        return Err(Error::Rejected(format!("{}: {} / {}", p.name, pga.summary(), sig.summary())));
    }
    let (p1, p2) = (p.clone(), p.clone());
    Ok(PartialActionData::new(
        &format!("hopf:{}", p.name),
        &MhaInstance::group_algebra(&p.group),
        p.algebra.clone(),
        move |g, x| gamma(&p1, g, x),
        move |g| p2.sigma(g).clone(),
    ))
}

/// σ_g = 𝔢(g), R_g = σ_g R and α_g(x) = g·x.
pub fn to_group(q: &PartialActionData) -> Result<PartialGroupAction> {
    let window = q.acting.window(0);
    let r = check_partial_action(q, &window);
    let s = check_symmetric(q, &window)?;
    if !r.passed() || !s.passed() {
        return Err(Error::Rejected(format!("{}: {} / {}", q.name, r.summary(), s.summary())));
    }
    let group = q.acting.group().clone();
    let mut sigma = BTreeMap::new();
    for g in finite_elements(&group)? {
        let m = q.e(&g);
        for x in q.l_basis() {
            let mx = m.left(x);
            if m.left(&mx) != mx {
                return Err(Error::Structural(format!("𝔢({g}) is not idempotent at {}", x.render())));
            }
            if mx != m.right(x) {
                return Err(Error::Structural(format!("𝔢({g}) is not central at {}", x.render())));
            }
        }
        sigma.insert(g, m);
    }
    let q1 = q.clone();
    PartialGroupAction::new(&format!("group:{}", q.name), &group, q.target.clone(), sigma, move |g, x| q1.act_basis(g, x))
}

/// to_group(to_hopf(P)) agrees with P on corners, σ tables and α tables.
pub fn roundtrip_check(p: &PartialGroupAction) -> Result<Report> {
    let back = to_group(&to_hopf(p)?)?;
    let mut report = Report::new("roundtrip_check", &format!("{} through 𝕜{}", p.name, p.group.name()));
    let mut corners = Tally::new("corners");
    let mut sigmas = Tally::new("σ tables");
    let mut alphas = Tally::new("α tables");
    for g in p.elements() {
        corners.case(same_span(&p.corner(&g), &back.corner(&g)), || format!("R_{g}"));
        for x in &p.algebra.basis {
            let (a, b) = (p.sigma(&g), back.sigma(&g));
            sigmas.case(a.left(x) == b.left(x) && a.right(x) == b.right(x), || format!("σ_{g} at {}", x.render()));
        }
        for x in p.corner(&p.group.inv(&g)) {
            let (l, r) = (p.alpha(&g, &x), back.alpha(&g, &x));
            alphas.case(l == r, || format!("α_{g}({}): {} vs {}", x.render(), l.render(), r.render()));
        }
    }
    report.push(corners);
    report.push(sigmas);
    report.push(alphas);
    Ok(report)
}

/// With Δ(g) = g⊗g, the covered expansion in item (i) is the single term (g·x)(gh·y).
pub fn check_grouplike_collapse(q: &PartialActionData) -> Report {
    let w = q.acting.window(0);
    let mut report = Report::new("check_grouplike_collapse", &q.name);
    let mut t = Tally::new("(g₁·x)(g₂h·y) = (g·x)(gh·y)");
    for g in &w {
        for h in &w {
            let cov = q.acting.delta_r(&Vector::unit(g.clone()), &Vector::unit(h.clone()));
            let gh = q.acting.group().mul(g, h);
            for x in q.l_basis() {
                for y in q.l_basis() {
                    let general = cov.linear(|(s, u)| q.mul(&q.act_basis(s, x), &q.act_basis(u, y)));
                    let single = q.mul(&q.act_basis(g, x), &q.act_basis(&gh, y));
                    t.case(general == single, || format!("g={g}, h={h}"));
                }
            }
        }
    }
    report.push(t);
    report
}

/// β_g(h) = s(g,h) ghg⁻¹ on 𝕜G for a symmetric group, where s(g,h) = sgn(h) for odd g
/// and 1 otherwise.
pub fn signed_conjugation(g: &GroupSpec) -> impl Fn(&Tok, &Vector) -> Vector + Send + Sync + Clone + 'static {
    let g = g.clone();
    move |a: &Tok, x: &Vector| {
        let odd = perm_sign(a) == -1;
        x.linear(|h| {
            let c = g.mul(&g.mul(a, h), &g.inv(a));
            let s = if odd { perm_sign(h) } else { 1 };
            Vector::term(c, crate::scalar::int(s))
        })
    }
}

/// Signed conjugation of S3 restricted to the corner (1 - f_sign)𝕜S3.
pub fn signed_conjugation_corner() -> Result<PartialGroupAction> {
    let g = GroupSpec::symmetric(3);
    let alg = Algebra::group_algebra(&g);
    let f = named_idempotent(&alg, "fnotsign")?;
    PartialGroupAction::restrict("signed-conjugation:S3:fnotsign", &g, &alg, &f, signed_conjugation(&g))
}

/// C4 acting on 𝕜C4 through C4 → C2 by inversion.
pub fn inversion_action(n: u32) -> Result<PartialGroupAction> {
    let g = GroupSpec::cyclic(n);
    let alg = Algebra::group_algebra(&g);
    let g1 = g.clone();
    PartialGroupAction::global(&format!("inversion:{}", g.name()), &g, SubAlgebra::full(&alg, 0), move |a, x| {
        let odd = matches!(a, Tok::Int(k) if k % 2 == 1);
        x.linear(|h| Vector::unit(if odd { g1.inv(h) } else { h.clone() }))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partial_action::check_symmetric;
    use crate::scalar::q;

    fn perm(cs: &[&[u8]]) -> Tok {
        Tok::cycles(3, cs)
    }

    #[test]
    fn signed_conjugation_is_an_action() {
        let g = GroupSpec::symmetric(3);
        let b = signed_conjugation(&g);
        let els = g.window(0);
        for a in &els {
            for c in &els {
                for h in &els {
                    let x = Vector::unit(h.clone());
                    assert_eq!(b(a, &b(c, &x)), b(&g.mul(a, c), &x));
                }
            }
        }
    }

    #[test]
    fn corner_scenario_sigma_values() {
        let p = signed_conjugation_corner().unwrap();
        let alg = Algebra::group_algebra(&GroupSpec::symmetric(3));
        let f = named_idempotent(&alg, "fnotsign").unwrap();
        let f_triv = named_idempotent(&alg, "ftriv").unwrap();
        let f2 = &f - &f_triv;
        assert_eq!(p.sigma(&perm(&[&[1, 2]])).left(&f), f2);
        assert_eq!(p.sigma(&perm(&[&[1, 2, 3]])).left(&f), f);
        assert_eq!(p.corner(&perm(&[&[1, 2]])).len(), 4);
        assert_eq!(p.corner(&perm(&[])).len(), 5);
    }

    #[test]
    fn corner_scenario_passes_everything() {
        let p = signed_conjugation_corner().unwrap();
        for r in [check_pga(&p), check_sigma_conditions(&p).unwrap(), check_globalizability(&p)] {
            assert!(r.passed(), "{}", r.summary());
        }
        let q = to_hopf(&p).unwrap();
        let w = q.acting.window(0);
        assert!(check_partial_action(&q, &w).passed());
        assert!(check_symmetric(&q, &w).unwrap().passed());
        assert!(check_grouplike_collapse(&q).passed());
        for x in q.l_basis() {
            assert_eq!(q.act_basis(&perm(&[]), x), *x);
        }
        assert!(roundtrip_check(&p).unwrap().passed());
        let back = to_group(&q).unwrap();
        for r in [check_pga(&back), check_sigma_conditions(&back).unwrap(), check_globalizability(&back)] {
            assert!(r.passed(), "{}", r.summary());
        }
    }

    #[test]
    fn alpha_inverts_on_corners() {
        let p = signed_conjugation_corner().unwrap();
        let q = to_hopf(&p).unwrap();
        let back = to_group(&q).unwrap();
        for g in back.elements() {
            let gi = back.group.inv(&g);
            for y in back.corner(&g) {
                assert_eq!(back.alpha(&g, &back.alpha(&gi, &y)), y);
            }
        }
    }

    #[test]
    fn global_inversion() {
        let p = inversion_action(4).unwrap();
        assert!(check_pga(&p).passed());
        assert!(check_sigma_conditions(&p).unwrap().passed());
        assert!(check_globalizability(&p).passed());
        let q = to_hopf(&p).unwrap();
        for g in p.elements() {
            for x in &p.algebra.basis {
                assert_eq!(q.act_basis(&g, x), p.alpha(&g, x));
                assert_eq!(q.e(&g).left(x), *x);
            }
        }
        let back = to_group(&q).unwrap();
        for g in back.elements() {
            assert_eq!(back.corner(&g).len(), 4);
        }
        assert!(roundtrip_check(&p).unwrap().passed());
    }

    #[test]
    fn trivial_group_roundtrip() {
        let g = GroupSpec::cyclic(1);
        let alg = Algebra::group_algebra(&g);
        let p = PartialGroupAction::global("trivial", &g, SubAlgebra::full(&alg, 0), |_, x| x.clone()).unwrap();
        assert!(roundtrip_check(&p).unwrap().passed());
    }

    #[test]
    fn decoupled_alpha_fails_composition() {
        let p = signed_conjugation_corner().unwrap().with_alpha_at(&perm(&[&[1, 2, 3]]), |x| x.clone());
        let r = check_pga(&p);
        let item = r.item("(iii) α_g∘α_h = α_{gh} on α_h⁻¹(R_h ∩ R_{g⁻¹})").unwrap();
        assert_eq!(item.outcome, crate::Outcome::Fail);
        assert!(item.witness.is_some());
        assert!(matches!(to_hopf(&p), Err(Error::Rejected(_))));
    }

    #[test]
    fn non_central_sigma_fails() {
        let p = signed_conjugation_corner().unwrap();
        let alg = p.algebra.ambient.clone();
        let f = p.algebra.unit.clone().unwrap();
        let half = &Vector::unit(perm(&[])).scale(&q(1, 2)) + &Vector::unit(perm(&[&[1, 2]])).scale(&q(1, 2));
        let e = alg.multiply(&f, &half);
        // Same left action, so the corner is unchanged, but σx ≠ xσ.
        let g = perm(&[&[1, 2]]);
        let m = p.sigma(&g).with_right(move |x| alg.multiply(x, &e));
        let bad = p.with_sigma(&g, m);
        let r = check_sigma_conditions(&bad).unwrap();
        assert!(!r.item_passed("(i) σ_g central idempotent"));
    }

    #[test]
    fn zero_product_corner_is_not_s_unital() {
        let g = GroupSpec::cyclic(1);
        let alg = Algebra::zero_product(2);
        let p = PartialGroupAction::global("zero", &g, SubAlgebra::full(&alg, 0), |_, x| x.clone()).unwrap();
        assert!(!check_globalizability(&p).item_passed("(i) R_g left s-unital"));
    }

    #[test]
    fn to_group_rejects_non_idempotent_multipliers() {
        let p = inversion_action(2).unwrap();
        let q = to_hopf(&p).unwrap();
        let basis = q.target.basis.clone();
        let bad = q.with_multipliers("twice", move |_| Multiplier::scalar(crate::scalar::int(2), basis.clone()));
        assert!(to_group(&bad).is_err());
    }
}
