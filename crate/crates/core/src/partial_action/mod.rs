//! Partial module algebras: an action `a·x` of A on a subalgebra L together with
//! the multiplier map 𝔢: A → M(L), and the checks that make it partial or symmetric.

mod envelope;
mod projection;

pub use envelope::{
    check_enveloping, check_minimal, check_minimal_on, compare_envelopes, globalize, phi_embed, Comparison, Envelope,
    Flat,
};
pub use projection::{check_a_projection, induce_from_projection, AProjection};

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{multiplier_check, Algebra, CornerAlgebra, Multiplier, SubAlgebra};
use crate::error::{Error, Result};
use crate::finsup::Vector;
use crate::group::GroupSpec;
use crate::linalg::{combine, joint_null_space, Echelon};
use crate::mha::{MhaInstance, Pattern};
use crate::report::{Report, Tally};
use crate::scalar::{self, Scalar};
use crate::token::Tok;

/// `(a, x) ↦ a·x` on an A-basis token and an element of L; linear in `x`.
pub type ActRule = Arc<dyn Fn(&Tok, &Vector) -> Vector + Send + Sync>;
pub type MultiplierMap = Arc<dyn Fn(&Tok) -> Multiplier + Send + Sync>;
type BasisAction = Arc<dyn Fn(&Tok, &Tok) -> Vector + Send + Sync>;
type Fixer = Arc<dyn Fn(&Tok) -> Vec<Tok> + Send + Sync>;

/// A global module algebra: A acting on an algebra with a token basis.
#[derive(Clone)]
pub struct ModuleAlgebra {
    pub name: String,
    pub acting: MhaInstance,
    pub algebra: Algebra,
    act: BasisAction,
    fixer: Fixer,
}

impl std::fmt::Debug for ModuleAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ModuleAlgebra").field("name", &self.name).finish()
    }
}

impl ModuleAlgebra {
    /// `fixer(k)` lists A-basis elements whose sum b satisfies b▷k = k.
    pub fn new(
        name: &str,
        acting: &MhaInstance,
        algebra: &Algebra,
        act: impl Fn(&Tok, &Tok) -> Vector + Send + Sync + 'static,
        fixer: impl Fn(&Tok) -> Vec<Tok> + Send + Sync + 'static,
    ) -> Self {
        ModuleAlgebra {
            name: name.to_string(),
            acting: acting.clone(),
            algebra: algebra.clone(),
            act: Arc::new(act),
            fixer: Arc::new(fixer),
        }
    }

    /// A_G acting on 𝕜G by δ_p ▷ h = δ_p(h)h.
    pub fn pointwise(g: &GroupSpec) -> Self {
        Self::new(
            &format!("pointwise:{}", g.name()),
            &MhaInstance::function_algebra(g),
            &Algebra::group_algebra(g),
            |p, h| if p == h { Vector::unit(h.clone()) } else { Vector::zero() },
            |h| vec![h.clone()],
        )
    }

    /// Hom^r(A_G, A_G) for finite G in collapsed form, with basis `g⊗δ_h` written
    /// as the token `h` tagged by `g`, and a▷f(_b) = f(_ab).
    pub fn hom_functions(g: &GroupSpec) -> Result<Self> {
        let els = g
            .elements()
            .ok_or_else(|| Error::Capability("Hom^r(A_G, A_G) needs a finite group".into()))?
            .to_vec();
        let by_label: BTreeMap<String, Tok> = els.iter().map(|x| (x.to_string(), x.clone())).collect();
        let split = move |t: &Tok| -> (Tok, Tok) {
            match t {
                Tok::Tag(l, inner) => (by_label[l].clone(), (**inner).clone()),
                _ => panic!("not a Hom^r basis token: {t}"),
            }
        };
        let mut basis = Vec::new();
        let mut table = BTreeMap::new();
        for a in &els {
            for h in &els {
                basis.push(hom_key(a, h));
            }
        }
        for a in &els {
            for b in &els {
                for h in &els {
                    table.insert((hom_key(a, h), hom_key(b, h)), Vector::unit(hom_key(&g.mul(a, b), h)));
                }
            }
        }
        let one = Vector::indicator(els.iter().map(|h| hom_key(&g.identity(), h)).collect::<Vec<_>>().iter());
        let algebra = Algebra::structure_constants(&format!("hom:functions:{}", g.name()), basis, table, Some(one));
        let (s1, s2) = (split.clone(), split);
        Ok(Self::new(
            &format!("hom:{}", g.name()),
            &MhaInstance::function_algebra(g),
            &algebra,
            move |p, k| if s1(k).0 == *p { Vector::unit(k.clone()) } else { Vector::zero() },
            move |k| vec![s2(k).0],
        ))
    }

    pub fn act(&self, a: &Vector, x: &Vector) -> Vector {
        a.linear(|p| self.act_basis(p, x))
    }

    pub fn act_basis(&self, a: &Tok, x: &Vector) -> Vector {
        x.linear(|k| (self.act)(a, k))
    }

    /// An element b of A with b▷x = x for every listed x.
    pub fn unit_for(&self, xs: &[Vector]) -> Vector {
        let keys: std::collections::BTreeSet<Tok> =
            xs.iter().flat_map(|x| x.keys().flat_map(|k| (self.fixer)(k)).collect::<Vec<_>>()).collect();
        Vector::indicator(&keys)
    }
}

/// The basis token `g⊗δ_h` of collapsed Hom^r(A_G, A_G).
pub fn hom_key(g: &Tok, h: &Tok) -> Tok {
    Tok::tag(&g.to_string(), h.clone())
}

/// a▷(b▷x) = ab▷x and a▷(xy) = Σ (a₁▷x)(a₂▷y), the latter covered by c with c▷y = y.
pub fn check_module_algebra_law(m: &ModuleAlgebra, window: &[Tok], elems: &[Vector]) -> Report {
    let mut report = Report::new(
        "check_module_algebra_law",
        &format!("{} over {} A-basis and {} algebra elements", m.name, window.len(), elems.len()),
    );
    let u = |t: &Tok| Vector::unit(t.clone());
    let mut assoc = Tally::new("a▷(b▷x) = ab▷x");
    let mut law = Tally::new("a▷(xy) = (a₁▷x)(a₂▷y)");
    for a in window {
        for x in elems {
            for b in window {
                let l = m.act_basis(a, &m.act_basis(b, x));
                let r = m.act(&m.acting.multiply(&u(a), &u(b)), x);
                assoc.case(l == r, || format!("a={a}, b={b}, x={}", x.render()));
            }
            for y in elems {
                let l = m.act_basis(a, &m.algebra.multiply(x, y));
                let c = m.unit_for(std::slice::from_ref(y));
                let r = m
                    .acting
                    .delta_r(&u(a), &c)
                    .linear(|(p, q)| m.algebra.multiply(&m.act_basis(p, x), &m.act_basis(q, y)));
                law.case(l == r, || format!("a={a}, x={}, y={}", x.render(), y.render()));
            }
        }
    }
    report.push(assoc);
    report.push(law);
    report
}

/// A partial action of A on the subalgebra `target` with its multiplier map 𝔢.
#[derive(Clone)]
pub struct PartialActionData {
    pub name: String,
    pub acting: MhaInstance,
    pub target: SubAlgebra,
    action: ActRule,
    e_map: MultiplierMap,
}

impl std::fmt::Debug for PartialActionData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PartialActionData").field("name", &self.name).finish()
    }
}

impl PartialActionData {
    pub fn new(
        name: &str,
        acting: &MhaInstance,
        target: SubAlgebra,
        action: impl Fn(&Tok, &Vector) -> Vector + Send + Sync + 'static,
        e_map: impl Fn(&Tok) -> Multiplier + Send + Sync + 'static,
    ) -> Self {
        PartialActionData {
            name: name.to_string(),
            acting: acting.clone(),
            target,
            action: Arc::new(action),
            e_map: Arc::new(e_map),
        }
    }

    pub fn ambient(&self) -> &Algebra {
        &self.target.ambient
    }

    pub fn l_basis(&self) -> &[Vector] {
        &self.target.basis
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.target.multiply(x, y)
    }

    pub fn act(&self, a: &Vector, x: &Vector) -> Vector {
        a.linear(|p| (self.action)(p, x))
    }

    pub fn act_basis(&self, a: &Tok, x: &Vector) -> Vector {
        (self.action)(a, x)
    }

    pub fn e(&self, a: &Tok) -> Multiplier {
        (self.e_map)(a)
    }

    pub fn e_left(&self, a: &Vector, x: &Vector) -> Vector {
        a.linear(|p| self.e(p).left(x))
    }

    pub fn e_right(&self, a: &Vector, x: &Vector) -> Vector {
        a.linear(|p| self.e(p).right(x))
    }

    pub fn action_rule(&self) -> ActRule {
        self.action.clone()
    }

    pub fn multiplier_map(&self) -> MultiplierMap {
        self.e_map.clone()
    }

    pub fn with_action(&self, suffix: &str, action: impl Fn(&Tok, &Vector) -> Vector + Send + Sync + 'static) -> Self {
        PartialActionData { name: format!("{}[{suffix}]", self.name), action: Arc::new(action), ..self.clone() }
    }

    pub fn with_multipliers(&self, suffix: &str, e_map: impl Fn(&Tok) -> Multiplier + Send + Sync + 'static) -> Self {
        PartialActionData { name: format!("{}[{suffix}]", self.name), e_map: Arc::new(e_map), ..self.clone() }
    }

    /// The same data with `a·l_j` set to zero for one basis token `a` and one L-basis index `j`.
    pub fn zeroed_on(&self, a: &Tok, j: usize) -> Self {
        let old = self.action.clone();
        let basis = self.target.basis.clone();
        let ech = Echelon::from_vectors(&basis);
        let (a0, bj) = (a.clone(), basis[j].clone());
        self.with_action("zeroed", move |p, x| {
            let out = old(p, x);
            if *p != a0 {
                return out;
            }
            let coords = ech.solve(x).unwrap_or_default();
            let cj = coords.get(&j);
            if cj.is_zero() {
                out
            } else {
                &out - &old(p, &bj).scale(&cj)
            }
        })
    }

    /// Replaces the right operator of every 𝔢(a).
    pub fn with_e_right(&self, right: impl Fn(&Tok, &Vector) -> Vector + Send + Sync + 'static) -> Self {
        let old = self.e_map.clone();
        let right = Arc::new(right);
        self.with_multipliers("e-right", move |a| {
            let (r, a2) = (right.clone(), a.clone());
            old(a).with_right(move |x| r(&a2, x))
        })
    }
}

fn span_of_action(p: &PartialActionData, window: &[Tok]) -> Echelon<Tok> {
    let mut ech = Echelon::new();
    for a in window {
        for x in p.l_basis() {
            ech.insert(&p.act_basis(a, x));
        }
    }
    ech
}

fn u(t: &Tok) -> Vector {
    Vector::unit(t.clone())
}

/// Sums of distinct window tokens, smallest support first, then lexicographic.
fn subset_candidates(window: &[Tok], max_size: usize) -> Vec<Vector> {
    let mut sorted = window.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut out = Vec::new();
    for size in 1..=max_size.min(sorted.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(Vector::indicator(idx.iter().map(|&i| &sorted[i])));
            let mut i = size;
            while i > 0 && idx[i - 1] == sorted.len() - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for k in i..size {
                idx[k] = idx[k - 1] + 1;
            }
        }
    }
    out
}

/// Searches b with a_i b = a_i = b a_i and a_i·x_j = a_i·(b·x_j) for the whole window at once,
/// which also serves every subfamily.
fn find_local_unit_for_action(p: &PartialActionData, window: &[Tok], max_size: usize) -> (Option<Vector>, usize) {
    let a_vecs: Vec<Vector> = window.iter().map(u).collect();
    let mut candidates: Vec<Vector> = p.acting.local_unit(&a_vecs).into_iter().collect();
    candidates.extend(subset_candidates(window, max_size));
    let n = candidates.len();
    let found = candidates.into_iter().find(|b| {
        a_vecs.iter().all(|a| p.acting.multiply(a, b) == *a && p.acting.multiply(b, a) == *a)
            && a_vecs.iter().all(|a| p.l_basis().iter().all(|x| p.act(a, x) == p.act(a, &p.act(b, x))))
    });
    (found, n)
}

/// Items (i)–(iv) of a partial module algebra over the A-window and the basis of L.
pub fn check_partial_action(p: &PartialActionData, window: &[Tok]) -> Report {
    let lb = p.l_basis();
    let mut report = Report::new(
        "check_partial_action",
        &format!("{} on {}: {} A-basis elements, L of dimension {}", p.acting.name(), p.target.name, window.len(), lb.len()),
    );
    let mut first = Tally::new("(i) a·(x(b·y)) = (a₁·x)(a₂b·y)");
    let mut second = Tally::new("(ii) 𝔢(a)(b·x) = a₁·(S(a₂)b·x)");
    for a in window {
        for b in window {
            let cov_r = p.acting.delta_r(&u(a), &u(b));
            let cov_is = p.acting.sweedler_cov(Pattern::IS, &u(a), &u(b)).unwrap_or_default();
            for x in lb {
                for y in lb {
                    let l = p.act_basis(a, &p.mul(x, &p.act_basis(b, y)));
                    let r = cov_r.linear(|(s, t)| p.mul(&p.act_basis(s, x), &p.act_basis(t, y)));
                    first.case(l == r, || {
                        format!("a={a}, b={b}, x={}, y={}: {} vs {}", x.render(), y.render(), l.render(), r.render())
                    });
                }
                let l = p.e(a).left(&p.act_basis(b, x));
                let r = cov_is.linear(|(s, t)| p.act_basis(s, &p.act_basis(t, x)));
                second.case(l == r, || format!("a={a}, b={b}, x={}: {} vs {}", x.render(), l.render(), r.render()));
            }
        }
    }
    report.push(first);
    report.push(second);

    let span = span_of_action(p, window);
    let mut inside = Tally::new("(ii) 𝔢(A)L ⊆ A·L");
    let mut mult = Tally::new("𝔢(a) is a multiplier of L");
    for a in window {
        for x in lb {
            let y = p.e(a).left(x);
            inside.case(span.contains(&y), || format!("𝔢({a}){} = {}", x.render(), y.render()));
        }
        match multiplier_check(p.ambient(), &p.e(a), lb) {
            Ok(r) => {
                let summary = r.summary();
                mult.case(r.passed(), || format!("𝔢({a}): {summary}"));
            }
            Err(e) => {
                mult.case(false, || format!("𝔢({a}): {e}"));
            }
        }
    }
    report.push(inside);
    report.push(mult);

    let bound = window.len().min(8);
    match find_local_unit_for_action(p, window, bound) {
        (Some(b), _) => report.push(Tally::new("(iii) a_i b = a_i = b a_i, a_i·x_j = a_i·(b·x_j)").note(format!("b = {}", b.render()))),
        (None, n) => report.inconclusive(
            "(iii) a_i b = a_i = b a_i, a_i·x_j = a_i·(b·x_j)",
            format!("no b among {n} candidates of support at most {bound}"),
        ),
    }

    let columns: Vec<Vec<Vector>> = lb.iter().map(|x| window.iter().map(|a| p.act_basis(a, x)).collect()).collect();
    let kernel = joint_null_space(&columns);
    let mut nondeg = Tally::new("(iv) A·x = 0 ⇒ x = 0");
    nondeg.case(kernel.is_empty(), || combine(&kernel[0], lb).render());
    report.push(nondeg);
    report
}

/// Items (v)–(vii) of a symmetric partial module algebra.
pub fn check_symmetric(p: &PartialActionData, window: &[Tok]) -> Result<Report> {
    if !p.acting.is_regular() {
        return Err(Error::Capability(format!("{} is not regular", p.acting.name())));
    }
    let lb = p.l_basis();
    let mut report = Report::new(
        "check_symmetric",
        &format!("{} on {}: {} A-basis elements, L of dimension {}", p.acting.name(), p.target.name, window.len(), lb.len()),
    );
    let mut fifth = Tally::new("(v) a·((b·x)y) = (a₁b·x)(a₂·y)");
    let mut sixth = Tally::new("(vi) (b·x)𝔢(a) = a₂·(S⁻¹(a₁)b·x)");
    for a in window {
        for b in window {
            let cov = p.acting.delta_r_flip(&u(a), &u(b));
            let cov_sinv = p.acting.sweedler_cov(Pattern::SInv, &u(a), &u(b))?;
            for x in lb {
                for y in lb {
                    let l = p.act_basis(a, &p.mul(&p.act_basis(b, x), y));
                    let r = cov.linear(|(s, t)| p.mul(&p.act_basis(s, x), &p.act_basis(t, y)));
                    fifth.case(l == r, || {
                        format!("a={a}, b={b}, x={}, y={}: {} vs {}", x.render(), y.render(), l.render(), r.render())
                    });
                }
                let l = p.e(a).right(&p.act_basis(b, x));
                let r = cov_sinv.linear(|(s, t)| p.act_basis(s, &p.act_basis(t, x)));
                sixth.case(l == r, || format!("a={a}, b={b}, x={}: {} vs {}", x.render(), l.render(), r.render()));
            }
        }
    }
    report.push(fifth);
    report.push(sixth);
    let span = span_of_action(p, window);
    let mut seventh = Tally::new("(vii) L𝔢(A) ⊆ A·L");
    for a in window {
        for x in lb {
            let y = p.e(a).right(x);
            seventh.case(span.contains(&y), || format!("{}𝔢({a}) = {}", x.render(), y.render()));
        }
    }
    report.push(seventh);
    Ok(report)
}

/// Whether 𝔢(a) = ε(a)·1 on L for every windowed a, and whether the action obeys the
/// global module-algebra law there. The law is covered by a quasi-unitary witness.
pub fn check_global(p: &PartialActionData, window: &[Tok], max_size: usize) -> Result<Report> {
    let lb = p.l_basis();
    let mut report = Report::new("check_global", &format!("{} on {}", p.acting.name(), p.target.name));
    let mut counit = Tally::new("𝔢(a) = ε(a)·1");
    for a in window {
        let eps = p.acting.counit_basis(a);
        for x in lb {
            let e = p.e(a);
            counit.case(e.left(x) == x.scale(&eps) && e.right(x) == x.scale(&eps), || format!("a={a}, x={}", x.render()));
        }
    }
    report.push(counit);
    let (witness, _) = find_quasi_unit(p, lb, window, max_size);
    let Some(c) = witness else {
        report.inconclusive("a·(xy) = (a₁·x)(a₂·y)", "no quasi-unitary witness within the bound");
        return Ok(report);
    };
    let mut assoc = Tally::new("ab·x = a·(b·x)");
    let mut law = Tally::new("a·(xy) = (a₁·x)(a₂·y)");
    for a in window {
        let cov = p.acting.delta_r(&u(a), &c);
        for x in lb {
            for b in window {
                let l = p.act(&p.acting.multiply(&u(a), &u(b)), x);
                let r = p.act_basis(a, &p.act_basis(b, x));
                assoc.case(l == r, || format!("a={a}, b={b}, x={}", x.render()));
            }
            for y in lb {
                let l = p.act_basis(a, &p.mul(x, y));
                let r = cov.linear(|(s, t)| p.mul(&p.act_basis(s, x), &p.act_basis(t, y)));
                law.case(l == r, || format!("a={a}, x={}, y={}", x.render(), y.render()));
            }
        }
    }
    report.push(assoc);
    report.push(law);
    Ok(report)
}

fn quasi_unit_holds(p: &PartialActionData, b: &Vector, elems: &[Vector], window: &[Tok]) -> bool {
    elems.iter().all(|x| {
        p.act(b, x) == *x
            && window.iter().all(|a| p.act(&p.acting.multiply(&u(a), b), x) == p.act_basis(a, x))
    })
}

/// The first b (smallest support, then lexicographic) with b·x_i = x_i and ab·x_i = a·x_i.
pub fn find_quasi_unit(p: &PartialActionData, elems: &[Vector], window: &[Tok], max_size: usize) -> (Option<Vector>, usize) {
    let candidates = subset_candidates(window, max_size);
    let n = candidates.len();
    (candidates.into_iter().find(|b| quasi_unit_holds(p, b, elems, window)), n)
}

/// Searches a quasi-unitary witness; an exhausted bound is inconclusive.
pub fn check_quasi_unitary(p: &PartialActionData, elems: &[Vector], window: &[Tok], max_size: usize) -> (Report, Option<Vector>) {
    let mut report = Report::new(
        "check_quasi_unitary",
        &format!("{} elements, a over {} basis elements, support bound {max_size}", elems.len(), window.len()),
    );
    let (found, n) = find_quasi_unit(p, elems, window, max_size);
    match &found {
        Some(b) => report.push(Tally::new("b·x = x and ab·x = a·x").note(format!("b = {}", b.render()))),
        None => report.inconclusive("b·x = x and ab·x = a·x", format!("none of {n} candidates works")),
    }
    (report, found)
}

fn check_normal_subgroup(g: &GroupSpec, n: &[Tok]) -> Result<Vec<Tok>> {
    let mut set = n.to_vec();
    set.sort();
    set.dedup();
    if g.generated_subgroup(&set) != set {
        return Err(Error::Structural(format!("{{{}}} is not a subgroup", render_set(&set))));
    }
    let els = g.elements().ok_or_else(|| Error::Capability("normality needs a finite group".into()))?;
    for x in els {
        for h in &set {
            let c = g.mul(&g.mul(x, h), &g.inv(x));
            if set.binary_search(&c).is_err() {
                return Err(Error::Structural(format!("not normal: {x}·{h}·{x}⁻¹ = {c}")));
            }
        }
    }
    Ok(set)
}

fn render_set(s: &[Tok]) -> String {
    s.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", ")
}

/// L = f_N𝕜G for a normal subgroup N of a finite group G, acted on by
/// δ_p·(f_Nh) = (1/|N|) f_Np when ph⁻¹ ∈ N and 0 otherwise, with
/// 𝔢(δ_p) = ([p∈N]/|N|)·f_N.
pub fn normal_subgroup_corner(g: &GroupSpec, n: &[Tok]) -> Result<PartialActionData> {
    let n = check_normal_subgroup(g, n)?;
    let alg = Algebra::group_algebra(g);
    let f = crate::algebra::averaging_idempotent(&n);
    let corner = CornerAlgebra::new(&alg, &f, "fN")?;
    let target = corner.subalgebra();
    let window = target.basis.clone();
    let size = scalar::q(1, n.len() as i64);
    let (g1, n1, f1, alg1, size1) = (g.clone(), n.clone(), f.clone(), alg.clone(), size.clone());
    let action = move |p: &Tok, x: &Vector| -> Vector {
        // x = f_N x = Σ_h x_h f_N h.
        let c: Scalar = x
            .iter()
            .filter(|(h, _)| n1.binary_search(&g1.mul(p, &g1.inv(h))).is_ok())
            .map(|(_, c)| c.clone())
            .fold(Scalar::zero(), |s, c| s + c);
        alg1.multiply(&f1, &Vector::unit(p.clone())).scale(&(c * &size1))
    };
    let (n2, alg2) = (n.clone(), alg.clone());
    let e_map = move |p: &Tok| -> Multiplier {
        let c = if n2.binary_search(p).is_ok() { size.clone() } else { Scalar::zero() };
        Multiplier::from_element(&alg2, &f.scale(&c), window.clone())
    };
    Ok(PartialActionData::new(
        &format!("fN:{}:{{{}}}", g.name(), render_set(&n)),
        &MhaInstance::function_algebra(g),
        target,
        action,
        e_map,
    ))
}

/// The global action δ_p ▷ h = δ_p(h)h of A_G on 𝕜G with 𝔢 = ε·1.
pub fn global_pointwise(g: &GroupSpec) -> PartialActionData {
    let m = ModuleAlgebra::pointwise(g);
    let target = SubAlgebra::full(&m.algebra, 2);
    let window = target.basis.clone();
    let acting = m.acting.clone();
    let m1 = m.clone();
    PartialActionData::new(
        &format!("global:{}", g.name()),
        &m.acting,
        target,
        move |p, x| m1.act_basis(p, x),
        move |p| Multiplier::scalar(acting.counit_basis(p), window.clone()),
    )
}

/// δ_g·x = λ(δ_g)x with λ(δ_g) = [g∈N]/|N| for a finite subgroup N, on any algebra.
pub fn subgroup_average_action(g: &GroupSpec, n: &[Tok], target: SubAlgebra) -> Result<PartialActionData> {
    let mut set = n.to_vec();
    set.sort();
    set.dedup();
    if g.generated_subgroup(&set) != set {
        return Err(Error::Structural(format!("{{{}}} is not a subgroup", render_set(&set))));
    }
    let size = scalar::q(1, set.len() as i64);
    let lambda = move |p: &Tok| if set.binary_search(p).is_ok() { size.clone() } else { Scalar::zero() };
    let l2 = lambda.clone();
    let window = target.basis.clone();
    Ok(PartialActionData::new(
        &format!("average:{}:{}", g.name(), target.name),
        &MhaInstance::function_algebra(g),
        target,
        move |p, x| x.scale(&lambda(p)),
        move |p| Multiplier::scalar(l2(p), window.clone()),
    ))
}

/// Cross-checks two partial actions on the same L: equal actions and equal 𝔢 on the window.
pub fn same_partial_action(p: &PartialActionData, q: &PartialActionData, window: &[Tok]) -> Report {
    let mut report = Report::new("same_partial_action", &format!("{} vs {}", p.name, q.name));
    let mut act = Tally::new("a·x agree");
    let mut mult = Tally::new("𝔢(a) agree");
    for a in window {
        for x in p.l_basis() {
            let (l, r) = (p.act_basis(a, x), q.act_basis(a, x));
            act.case(l == r, || format!("a={a}, x={}: {} vs {}", x.render(), l.render(), r.render()));
            let (pe, qe) = (p.e(a), q.e(a));
            mult.case(pe.left(x) == qe.left(x) && pe.right(x) == qe.right(x), || format!("a={a}, x={}", x.render()));
        }
    }
    report.push(act);
    report.push(mult);
    report
}

#[cfg(test)]
mod tests;
