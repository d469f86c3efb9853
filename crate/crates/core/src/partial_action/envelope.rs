//! The standard globalization (R, φ, π) of a quasi-unitary symmetric partial action,
//! enlarged and relabelled variants, minimality and comparison of envelopes.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::convolution::{conv_mul, module_act, HomRElem};
use crate::error::{Error, Result};
use crate::finsup::{Tensor, Vector};
use crate::linalg::{combine, joint_null_space, null_space, Echelon};
use crate::mha::Pattern;
use crate::report::{Report, Tally};
use crate::token::Tok;

use super::{check_partial_action, check_symmetric, find_quasi_unit, PartialActionData};

/// An element of an envelope, keyed by (A-coordinate, target basis token).
pub type Flat = Tensor;

type FlatAct = Arc<dyn Fn(&Tok, &Flat) -> Flat + Send + Sync>;
type FlatMul = Arc<dyn Fn(&Flat, &Flat) -> Flat + Send + Sync>;
type FlatMap = Arc<dyn Fn(&Flat) -> Flat + Send + Sync>;
type Embed = Arc<dyn Fn(&Vector) -> Flat + Send + Sync>;
type FlatFixer = Arc<dyn Fn(&Flat) -> Vector + Send + Sync>;

/// A candidate globalization: an A-module algebra spanned by a▷θ(x), an embedding θ
/// of L and a projection π onto θ(L).
#[derive(Clone)]
pub struct Envelope {
    pub name: String,
    pub partial: PartialActionData,
    pub window: Vec<Tok>,
    /// (a, j) for the generator a▷θ(l_j).
    pub labels: Vec<(Tok, usize)>,
    pub gens: Vec<Flat>,
    act: FlatAct,
    mul: FlatMul,
    pi: FlatMap,
    theta: Embed,
    fixer: FlatFixer,
}

impl std::fmt::Debug for Envelope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Envelope").field("name", &self.name).field("generators", &self.gens.len()).finish()
    }
}

impl Envelope {
    #[allow(clippy::too_many_arguments)]
    fn build(
        name: String,
        partial: &PartialActionData,
        window: &[Tok],
        act: FlatAct,
        mul: FlatMul,
        pi: FlatMap,
        theta: Embed,
        fixer: FlatFixer,
    ) -> Self {
        let mut labels = Vec::new();
        let mut gens = Vec::new();
        for a in window {
            for (j, x) in partial.l_basis().iter().enumerate() {
                labels.push((a.clone(), j));
                gens.push(act(a, &theta(x)));
            }
        }
        Envelope { name, partial: partial.clone(), window: window.to_vec(), labels, gens, act, mul, pi, theta, fixer }
    }

    pub fn act(&self, a: &Vector, f: &Flat) -> Flat {
        a.linear(|p| (self.act)(p, f))
    }

    pub fn act_basis(&self, a: &Tok, f: &Flat) -> Flat {
        (self.act)(a, f)
    }

    pub fn mul(&self, f: &Flat, g: &Flat) -> Flat {
        (self.mul)(f, g)
    }

    pub fn pi(&self, f: &Flat) -> Flat {
        (self.pi)(f)
    }

    pub fn theta(&self, x: &Vector) -> Flat {
        (self.theta)(x)
    }

    /// An element b of A with b▷F = F.
    pub fn unit_for(&self, f: &Flat) -> Vector {
        (self.fixer)(f)
    }

    pub fn theta_basis(&self) -> Vec<Flat> {
        self.partial.l_basis().iter().map(|x| self.theta(x)).collect()
    }

    /// The same envelope with π replaced.
    pub fn with_pi(&self, suffix: &str, pi: impl Fn(&Flat) -> Flat + Send + Sync + 'static) -> Self {
        Envelope { name: format!("{}[{suffix}]", self.name), pi: Arc::new(pi), ..self.clone() }
    }

    /// A basis of the smallest subspace containing the generators and closed under
    /// products and the windowed action; more than `bound` dimensions is inconclusive.
    pub fn closure(&self, bound: usize) -> Result<Vec<Flat>> {
        let mut ech = Echelon::from_vectors(&self.gens);
        let mut frontier = ech.basis();
        while !frontier.is_empty() {
            let current = ech.basis();
            let mut next = Vec::new();
            let mut consider = |v: Flat, ech: &mut Echelon<(Tok, Tok)>| {
                if ech.insert(&v) {
                    next.push(v);
                }
            };
            for f in &frontier {
                for g in &current {
                    consider(self.mul(f, g), &mut ech);
                    consider(self.mul(g, f), &mut ech);
                }
                for a in &self.window {
                    consider(self.act_basis(a, f), &mut ech);
                }
            }
            if ech.rank() > bound {
                return Err(Error::Inconclusive(format!("{} exceeds {bound} dimensions", self.name)));
            }
            frontier = next;
        }
        Ok(ech.basis())
    }

    /// A copy of L with trivial action a▷ι(x) = ε(a)ι(x) and zero product is added,
    /// θ′(x) = θ(x) + ι(x) and π′(r + j) = θ′(θ⁻¹(π(r))).
    pub fn with_junk_summand(&self) -> Self {
        let junk = Tok::name("junk");
        let is_junk = {
            let j = junk.clone();
            move |k: &(Tok, Tok)| k.0 == j
        };
        let r_part = {
            let f = is_junk.clone();
            move |v: &Flat| v.filter(|k| !f(k))
        };
        let j_part = {
            let f = is_junk.clone();
            move |v: &Flat| v.filter(|k| f(k))
        };
        let iota = {
            let j = junk.clone();
            move |x: &Vector| -> Flat { x.map_keys(|k| (j.clone(), k.clone())) }
        };
        let acting = self.partial.acting.clone();
        let (old_act, old_mul, old_pi, old_theta, old_fix) =
            (self.act.clone(), self.mul.clone(), self.pi.clone(), self.theta.clone(), self.fixer.clone());
        let (rp1, jp1) = (r_part.clone(), j_part.clone());
        let act = move |a: &Tok, f: &Flat| -> Flat { old_act(a, &rp1(f)) + jp1(f).scale(&acting.counit_basis(a)) };
        let rp2 = r_part.clone();
        let mul = move |f: &Flat, g: &Flat| -> Flat { old_mul(&rp2(f), &rp2(g)) };
        let theta_l = Echelon::from_vectors(&self.theta_basis());
        let l_basis = self.partial.l_basis().to_vec();
        let (rp3, iota1, th1) = (r_part.clone(), iota.clone(), old_theta.clone());
        let pi = move |f: &Flat| -> Flat {
            let p = old_pi(&rp3(f));
            let coords = theta_l.solve(&p).unwrap_or_default();
            let x = combine(&coords, &l_basis);
            th1(&x) + iota1(&x)
        };
        let theta = move |x: &Vector| -> Flat { old_theta(x) + iota(x) };
        let e = self.partial.acting.group().identity();
        let fixer = move |f: &Flat| -> Vector {
            let mut v = old_fix(&r_part(f));
            if !j_part(f).is_zero() || v.is_zero() {
                v = &v + &Vector::unit(e.clone());
                v = Vector::indicator(&v.support());
            }
            v
        };
        Envelope::build(
            format!("{}⊕junk", self.name),
            &self.partial,
            &self.window,
            Arc::new(act),
            Arc::new(mul),
            Arc::new(pi),
            Arc::new(theta),
            Arc::new(fixer),
        )
    }

    /// The envelope transported along the relabelling (g, k) ↦ (g, copy(k)).
    pub fn relabelled(&self) -> Self {
        let to = |f: &Flat| -> Flat { f.map_keys(|(g, k)| (g.clone(), Tok::tag("copy", k.clone()))) };
        let back = |f: &Flat| -> Flat {
            f.map_keys(|(g, k)| match k {
                Tok::Tag(l, inner) if l == "copy" => (g.clone(), (**inner).clone()),
                other => (g.clone(), other.clone()),
            })
        };
        let (a0, m0, p0, t0, f0) = (self.act.clone(), self.mul.clone(), self.pi.clone(), self.theta.clone(), self.fixer.clone());
        Envelope::build(
            format!("{}′", self.name),
            &self.partial,
            &self.window,
            Arc::new(move |a, f| to(&a0(a, &back(f)))),
            Arc::new(move |f, g| to(&m0(&back(f), &back(g)))),
            Arc::new(move |f| to(&p0(&back(f)))),
            Arc::new(move |x| to(&t0(x))),
            Arc::new(move |f| f0(&back(f))),
        )
    }
}

/// φ(x) = f_x(_b) with f_x(a) = a·x, for a quasi-unitary witness b of {x}.
pub fn phi_embed(p: &PartialActionData, x: &Vector, window: &[Tok], max_size: usize) -> Result<HomRElem> {
    let (b, n) = find_quasi_unit(p, std::slice::from_ref(x), window, max_size);
    let b = b.ok_or_else(|| Error::Inconclusive(format!("no quasi-unitary witness for {} among {n} candidates", x.render())))?;
    phi_with_witness(p, x, &b)
}

pub(crate) fn phi_with_witness(p: &PartialActionData, x: &Vector, b: &Vector) -> Result<HomRElem> {
    if !p.acting.is_right_finite() {
        return Err(Error::Capability(format!("{} is not right-finite", p.acting.name())));
    }
    Ok(HomRElem::from_map(&p.acting, p.ambient(), &|g| p.act_basis(g, x), b))
}

/// The standard globalization: R spanned by a▷φ(x) inside Hom^r(A, L), θ = φ and
/// π(F) = φ(Σ_g F(g)).
pub fn globalize(p: &PartialActionData, window: &[Tok], max_size: usize) -> Result<Envelope> {
    let partial = check_partial_action(p, window);
    let symmetric = check_symmetric(p, window)?;
    if !partial.passed() || !symmetric.passed() {
        return Err(Error::Rejected(format!(
            "{} is not a symmetric partial action: {} / {}",
            p.name,
            partial.summary(),
            symmetric.summary()
        )));
    }
    let (b, n) = find_quasi_unit(p, p.l_basis(), window, max_size);
    let b = b.ok_or_else(|| Error::Inconclusive(format!("no quasi-unitary witness for L among {n} candidates")))?;
    let m = p.acting.clone();
    let r = p.ambient().clone();
    let (p1, b1) = (p.clone(), b.clone());
    let theta: Embed = Arc::new(move |x: &Vector| {
        phi_with_witness(&p1, x, &b1).map(|h| h.to_flat()).unwrap_or_default()
    });
    let (m1, r1) = (m.clone(), r.clone());
    let act: FlatAct = Arc::new(move |a: &Tok, f: &Flat| {
        let h = HomRElem::from_flat(&m1, &r1, f);
        module_act(&m1, &Vector::unit(a.clone()), &h).map(|h| h.to_flat()).unwrap_or_default()
    });
    let (m2, r2) = (m.clone(), r.clone());
    let mul: FlatMul = Arc::new(move |f: &Flat, g: &Flat| {
        let (hf, hg) = (HomRElem::from_flat(&m2, &r2, f), HomRElem::from_flat(&m2, &r2, g));
        conv_mul(&m2, &r2, &hf, &hg).map(|h| h.to_flat()).unwrap_or_default()
    });
    let (m3, r3, th) = (m.clone(), r.clone(), theta.clone());
    let pi: FlatMap = Arc::new(move |f: &Flat| th(&HomRElem::from_flat(&m3, &r3, f).total()));
    let fixer: FlatFixer = Arc::new(|f: &Flat| {
        let keys: BTreeSet<Tok> = f.keys().map(|(g, _)| g.clone()).collect();
        Vector::indicator(&keys)
    });
    Ok(Envelope::build(format!("standard:{}", p.name), p, window, act, mul, pi, theta, fixer))
}

fn u(t: &Tok) -> Vector {
    Vector::unit(t.clone())
}

/// Items (i)–(v) of an enveloping action, with the product rule
/// (a▷F)G = a₁▷(F(S(a₂)▷G)) checked on generator pairs.
pub fn check_enveloping(env: &Envelope, symmetric: bool) -> Report {
    let w = &env.window;
    let lb = env.partial.l_basis();
    let m = &env.partial.acting;
    let mut report = Report::new(
        "check_enveloping",
        &format!("{}: {} generators over {} A-basis elements", env.name, env.gens.len(), w.len()),
    );
    let mut assoc = Tally::new("(i) a▷(b▷F) = ab▷F");
    let mut law = Tally::new("(i) a▷(FG) = (a₁▷F)(a₂▷G)");
    let mut rule = Tally::new("(a▷F)G = a₁▷(F(S(a₂)▷G))");
    for a in w {
        for f in &env.gens {
            for b in w {
                let l = env.act_basis(a, &env.act_basis(b, f));
                let r = env.act(&m.multiply(&u(a), &u(b)), f);
                assoc.case(l == r, || format!("a={a}, b={b}, F={}", f.render()));
            }
            for g in &env.gens {
                let c = env.unit_for(g);
                let l = env.act_basis(a, &env.mul(f, g));
                let r = m.delta_r(&u(a), &c).linear(|(s, t)| env.mul(&env.act_basis(s, f), &env.act_basis(t, g)));
                law.case(l == r, || format!("a={a}, F={}, G={}", f.render(), g.render()));
                let l = env.mul(&env.act_basis(a, f), g);
                let r = m
                    .sweedler_cov(Pattern::IS, &u(a), &c)
                    .map(|cov| cov.linear(|(s, t)| env.act_basis(s, &env.mul(f, &env.act_basis(t, g)))))
                    .unwrap_or_default();
                rule.case(l == r, || format!("a={a}, F={}, G={}", f.render(), g.render()));
            }
        }
    }
    report.push(assoc);
    report.push(law);
    report.push(rule);

    let theta_l = env.theta_basis();
    let theta_span = Echelon::from_vectors(&theta_l);
    let mut hom = Tally::new("(ii) θ(xy) = θ(x)θ(y)");
    for x in lb {
        for y in lb {
            let l = env.theta(&env.partial.mul(x, y));
            let r = env.mul(&env.theta(x), &env.theta(y));
            hom.case(l == r, || format!("x={}, y={}", x.render(), y.render()));
        }
    }
    report.push(hom);
    let mut inj = Tally::new("(ii) θ injective");
    inj.case(theta_span.rank() == lb.len(), || format!("rank {} < dim L {}", theta_span.rank(), lb.len()));
    report.push(inj);
    let mut right = Tally::new("(iii) θ(L)R ⊆ θ(L)");
    let mut left = Tally::new("(iii) Rθ(L) ⊆ θ(L)");
    for t in &theta_l {
        for g in &env.gens {
            let v = env.mul(t, g);
            right.case(theta_span.contains(&v), || format!("{} · {}", t.render(), g.render()));
            if symmetric {
                let v = env.mul(g, t);
                left.case(theta_span.contains(&v), || format!("{} · {}", g.render(), t.render()));
            }
        }
    }
    report.push(right);
    if symmetric {
        report.push(left);
    }

    let basis = env.closure(512);
    let sample: Vec<Flat> = match &basis {
        Ok(b) => b.clone(),
        Err(_) => env.gens.clone(),
    };
    let mut idem = Tally::new("(iv) π∘π = π");
    let mut image = Tally::new("(iv) Im π ⊆ θ(L)");
    for f in &sample {
        let pf = env.pi(f);
        idem.case(env.pi(&pf) == pf, || f.render());
        image.case(theta_span.contains(&pf), || format!("π({}) = {}", f.render(), pf.render()));
    }
    let mut fixes = Tally::new("(iv) π = id on θ(L)");
    for t in &theta_l {
        fixes.case(env.pi(t) == *t, || t.render());
    }
    let mut pmul = Tally::new("(iv) π(FG) = π(F)π(G)");
    for f in &sample {
        for g in &sample {
            let l = env.pi(&env.mul(f, g));
            let r = env.mul(&env.pi(f), &env.pi(g));
            pmul.case(l == r, || format!("F={}, G={}", f.render(), g.render()));
        }
    }
    let mut aproj = Tally::new("(iv) π(a▷(X(b▷Y))) = π(a▷(Xπ(b▷Y)))");
    let mut saproj = Tally::new("(iv) π(a▷((b▷X)Y)) = π(a▷(π(b▷X)Y))");
    for a in w {
        for b in w {
            for x in &theta_l {
                for y in &theta_l {
                    let by = env.act_basis(b, y);
                    let l = env.pi(&env.act_basis(a, &env.mul(x, &by)));
                    let r = env.pi(&env.act_basis(a, &env.mul(x, &env.pi(&by))));
                    aproj.case(l == r, || format!("a={a}, b={b}"));
                    let bx = env.act_basis(b, x);
                    let l = env.pi(&env.act_basis(a, &env.mul(&bx, y)));
                    let r = env.pi(&env.act_basis(a, &env.mul(&env.pi(&bx), y)));
                    saproj.case(l == r, || format!("a={a}, b={b}"));
                }
            }
        }
    }
    let mut equiv = Tally::new("(iv) θ(a·x) = π(a▷θ(x))");
    for a in w {
        for x in lb {
            let l = env.theta(&env.partial.act_basis(a, x));
            let r = env.pi(&env.act_basis(a, &env.theta(x)));
            equiv.case(l == r, || format!("a={a}, x={}: {} vs {}", x.render(), l.render(), r.render()));
        }
    }
    report.push(idem);
    report.push(image);
    report.push(fixes);
    report.push(pmul);
    report.push(aproj);
    report.push(saproj);
    report.push(equiv);

    match basis {
        Ok(b) => {
            let gen_span = Echelon::from_vectors(&env.gens);
            let mut gen = Tally::new("(v) R = A▷θ(L)");
            for v in &b {
                gen.case(gen_span.contains(v), || format!("{} is not in the span of a▷θ(x)", v.render()));
            }
            report.push(gen);
        }
        Err(e) => report.inconclusive("(v) R = A▷θ(L)", e.to_string()),
    }
    report
}

/// Elements m of R with π(c▷m) = 0 for every windowed c; minimality requires none.
pub fn check_minimal(env: &Envelope) -> Result<Report> {
    let basis = env.closure(512)?;
    let mut report = Report::new(
        "check_minimal",
        &format!("{}: R of dimension {}, c over {} A-basis elements", env.name, basis.len(), env.window.len()),
    );
    let columns: Vec<Vec<Flat>> =
        basis.iter().map(|m| env.window.iter().map(|c| env.pi(&env.act_basis(c, m))).collect()).collect();
    let kernel = joint_null_space(&columns);
    let mut t = Tally::new("π(A▷m) = 0 ⇒ m = 0");
    t.case(kernel.is_empty(), || format!("m = {}", combine(&kernel[0], &basis).render()));
    report.push(t);
    Ok(report)
}

/// The minimality implication on a battery of cyclic generators.
pub fn check_minimal_on(env: &Envelope, battery: &[Flat]) -> Report {
    let mut report = Report::new("check_minimal_on", &format!("{}: {} generators", env.name, battery.len()));
    let mut t = Tally::new("π(A▷m) = 0 ⇒ m = 0");
    for m in battery {
        let killed = env.window.iter().all(|c| env.pi(&env.act_basis(c, m)).is_zero());
        t.case(!killed || m.is_zero(), || format!("m = {}", m.render()));
    }
    report.push(t);
    report
}

/// The comparison Φ: Σ a_i▷θ₁(x_i) ↦ Σ a_i▷θ₂(x_i) and its table on generators.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub report: Report,
    /// (label, source generator, target generator).
    pub table: Vec<(String, String, String)>,
    /// Nonzero source elements sent to zero.
    pub kernel: Vec<Flat>,
}

fn render_label(env: &Envelope, (a, j): &(Tok, usize)) -> String {
    format!("{a}▷θ({})", env.partial.l_basis()[*j].render())
}

/// Builds Φ on generators and checks well-definedness, the relation criterion
/// Σ ca_i·x_i = 0, multiplicativity, A-linearity, surjectivity and injectivity.
pub fn compare_envelopes(src: &Envelope, dst: &Envelope) -> Result<Comparison> {
    if src.labels != dst.labels || src.partial.name != dst.partial.name {
        return Err(Error::Precondition(format!("{} and {} envelop different data", src.name, dst.name)));
    }
    let mut report = Report::new("compare_envelopes", &format!("Φ: {} → {} on {} generators", src.name, dst.name, src.gens.len()));
    let table = src
        .labels
        .iter()
        .zip(src.gens.iter().zip(&dst.gens))
        .map(|(l, (s, d))| (render_label(src, l), s.render(), d.render()))
        .collect();

    let src_rel = null_space(&src.gens);
    let mut well = Tally::new("well-defined");
    for c in &src_rel {
        let image = combine(c, &dst.gens);
        well.case(image.is_zero(), || format!("relation {} maps to {}", c.render(), image.render()));
    }
    report.push(well);

    let lb = src.partial.l_basis();
    let mut crit = Tally::new("Σ ca_i·x_i = 0 for relations Σ a_i▷θ(x_i) = 0");
    for rel in &src_rel {
        for c in &src.window {
            let mut total = Vector::zero();
            for (i, s) in rel.iter() {
                let (a, j) = &src.labels[*i];
                let ca = src.partial.acting.multiply(&u(c), &u(a));
                total.axpy(s, &src.partial.act(&ca, &lb[*j]));
            }
            crit.case(total.is_zero(), || format!("c={c}, relation {}: {}", rel.render(), total.render()));
        }
    }
    report.push(crit);

    let src_span = Echelon::from_vectors(&src.gens);
    let mut mult = Tally::new("Φ(FG) = Φ(F)Φ(G)");
    let mut outside = 0usize;
    let mut lin = Tally::new("Φ(c▷F) = c▷Φ(F)");
    for (i, f) in src.gens.iter().enumerate() {
        for (j, g) in src.gens.iter().enumerate() {
            match src_span.solve(&src.mul(f, g)) {
                Some(c) => {
                    let l = combine(&c, &dst.gens);
                    let r = dst.mul(&dst.gens[i], &dst.gens[j]);
                    mult.case(l == r, || format!("{} · {}", render_label(src, &src.labels[i]), render_label(src, &src.labels[j])));
                }
                None => outside += 1,
            }
        }
        for c in &src.window {
            if let Some(k) = src_span.solve(&src.act_basis(c, f)) {
                let l = combine(&k, &dst.gens);
                let r = dst.act_basis(c, &dst.gens[i]);
                lin.case(l == r, || format!("c={c}, {}", render_label(src, &src.labels[i])));
            }
        }
    }
    if outside > 0 {
        report.inconclusive(
            "Φ(FG) = Φ(F)Φ(G)",
            format!("{outside} generator products leave the span of a▷θ(x) where Φ is defined"),
        );
    } else {
        report.push(mult);
    }
    report.push(lin);

    let mut surj = Tally::new("surjective");
    match dst.closure(512) {
        Ok(b) => {
            let dst_span = Echelon::from_vectors(&dst.gens);
            for v in &b {
                surj.case(dst_span.contains(v), || v.render());
            }
        }
        Err(e) => {
            surj.case(false, || e.to_string());
        }
    }
    report.push(surj);

    let mut kernel = Vec::new();
    let mut ker_span = Echelon::new();
    for c in null_space(&dst.gens) {
        let v = combine(&c, &src.gens);
        if !v.is_zero() && ker_span.insert(&v) {
            kernel.push(v);
        }
    }
    let mut inj = Tally::new("injective");
    inj.case(kernel.is_empty(), || format!("kernel of dimension {} contains {}", kernel.len(), kernel[0].render()));
    report.push(inj);
    Ok(Comparison { report, table, kernel })
}
