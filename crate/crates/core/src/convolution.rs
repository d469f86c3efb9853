//! The convolution algebra Hom^r(A, R) for A = A_G.
//!
//! An element f(_a) is stored collapsed as the finitely supported function
//! g ↦ f(δ_g a), so equality of representations is equality of maps A → R.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::finsup::{Tensor, Vector};
use crate::mha::{check_antipode, MhaInstance};
use crate::report::{Report, Tally};
use crate::scalar::{int, Scalar};
use crate::token::Tok;

/// A linear map between vector spaces given as a closure.
pub type LinMap<'a> = &'a dyn Fn(&Vector) -> Vector;

/// An element of Hom^r(A_G, R) in collapsed form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomRElem {
    source: String,
    target: String,
    values: BTreeMap<Tok, Vector>,
}

impl HomRElem {
    pub fn new(m: &MhaInstance, r: &Algebra, values: impl IntoIterator<Item = (Tok, Vector)>) -> Self {
        let mut out = HomRElem { source: m.name().to_string(), target: r.name().to_string(), values: BTreeMap::new() };
        for (g, v) in values {
            out.add_at(g, &v);
        }
        out
    }

    pub fn zero(m: &MhaInstance, r: &Algebra) -> Self {
        Self::new(m, r, std::iter::empty())
    }

    /// The element f(_a): g ↦ f(δ_g a) = a_g f(δ_g).
    pub fn from_map(m: &MhaInstance, r: &Algebra, f: &dyn Fn(&Tok) -> Vector, a: &Vector) -> Self {
        Self::new(m, r, a.iter().map(|(g, c)| (g.clone(), f(g).scale(c))))
    }

    fn add_at(&mut self, g: Tok, v: &Vector) {
        let entry = self.values.entry(g.clone()).or_default();
        *entry = &*entry + v;
        if entry.is_zero() {
            self.values.remove(&g);
        }
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn target(&self) -> &str {
        &self.target
    }

    pub fn at(&self, g: &Tok) -> Vector {
        self.values.get(g).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn support(&self) -> Vec<Tok> {
        self.values.keys().cloned().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Tok, &Vector)> {
        self.values.iter()
    }

    /// Evaluation at b ∈ A: f(ba) = Σ_g b_g F(g).
    pub fn eval(&self, b: &Vector) -> Vector {
        b.linear(|g| self.at(g))
    }

    /// Σ_g F(g), the value of the underlying map at the chosen local unit.
    pub fn total(&self) -> Vector {
        self.values.values().cloned().sum()
    }

    /// The same data as a vector keyed by (group element, target basis token).
    pub fn to_flat(&self) -> Tensor {
        let mut out = Tensor::zero();
        for (g, v) in &self.values {
            for (k, c) in v.iter() {
                out.add_term((g.clone(), k.clone()), c.clone());
            }
        }
        out
    }

    pub fn from_flat(m: &MhaInstance, r: &Algebra, t: &Tensor) -> Self {
        Self::new(m, r, t.iter().map(|((g, k), c)| (g.clone(), Vector::term(k.clone(), c.clone()))))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, v) in &other.values {
            out.add_at(g.clone(), v);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = self.clone();
        out.values = self
            .values
            .iter()
            .map(|(g, v)| (g.clone(), v.scale(c)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        out
    }

    /// Applies a linear map to every value.
    pub fn map_values(&self, f: &dyn Fn(&Vector) -> Vector) -> Self {
        let mut out = HomRElem { values: BTreeMap::new(), ..self.clone() };
        for (g, v) in &self.values {
            out.add_at(g.clone(), &f(v));
        }
        out
    }

    pub fn render(&self) -> String {
        if self.values.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self.values.iter().map(|(g, v)| format!("{g}↦{}", v.render())).collect();
        format!("[{}]", parts.join(", "))
    }
}

fn require_right_finite(m: &MhaInstance) -> Result<()> {
    if m.is_right_finite() {
        Ok(())
    } else {
        Err(Error::Capability(format!("{} is not right-finite; Hom^r has no collapsed form", m.name())))
    }
}

fn same_source(f: &HomRElem, g: &HomRElem) -> Result<()> {
    if f.source != g.source || f.target != g.target {
        return Err(Error::Structural(format!(
            "Hom^r mismatch: ({}, {}) vs ({}, {})",
            f.source, f.target, g.source, g.target
        )));
    }
    Ok(())
}

/// (F∗G)(c) = Σ_{pq=c} F(p)G(q).
pub fn conv_mul(m: &MhaInstance, r: &Algebra, f: &HomRElem, g: &HomRElem) -> Result<HomRElem> {
    require_right_finite(m)?;
    same_source(f, g)?;
    let grp = m.group();
    let mut out = HomRElem::zero(m, r);
    for (p, fp) in f.iter() {
        for (q, gq) in g.iter() {
            out.add_at(grp.mul(p, q), &r.multiply(fp, gq));
        }
    }
    Ok(out)
}

/// The same product through coverage: write a⊗b = Σ Δ(p_i)(1⊗q_i) with T1⁻¹,
/// set h_i(x) = μ(f⊗g)(Δ(x)(1⊗q_i)) and return Σ h_i(_p_i).
pub fn conv_mul_generic(m: &MhaInstance, r: &Algebra, f: &HomRElem, g: &HomRElem) -> Result<HomRElem> {
    require_right_finite(m)?;
    same_source(f, g)?;
    if f.is_zero() || g.is_zero() {
        return Ok(HomRElem::zero(m, r));
    }
    let a = Vector::indicator(&f.support());
    let b = Vector::indicator(&g.support());
    let cover = m.t1_inv(&crate::finsup::tensor(&a, &b));
    let mut out = HomRElem::zero(m, r);
    for ((p, q), lam) in cover.iter() {
        // h_i(_p_i) at δ_x is h_i(δ_x p_i), nonzero only for x = p_i.
        let h = m
            .delta_r_basis(p, q)
            .linear(|(u, v)| r.multiply(&f.at(u), &g.at(v)));
        out.add_at(p.clone(), &h.scale(lam));
    }
    Ok(out)
}

/// a▷f(_b) = f(_ab); for A_G, (a▷F)(c) = a_c F(c).
pub fn module_act(m: &MhaInstance, a: &Vector, f: &HomRElem) -> Result<HomRElem> {
    require_right_finite(m)?;
    let mut out = HomRElem { values: BTreeMap::new(), ..f.clone() };
    for (c, v) in f.iter() {
        let ac = a.get(c);
        if !ac.is_zero() {
            out.add_at(c.clone(), &v.scale(&ac));
        }
    }
    Ok(out)
}

/// Σ f(_u) ∗ g(_v) over Δ(a)(b⊗c) = Σ u⊗v, where F = f(_b), G = g(_c).
fn act_on_product_sweedler(m: &MhaInstance, r: &Algebra, a: &Tok, f: &HomRElem, g: &HomRElem) -> Result<HomRElem> {
    if f.is_zero() || g.is_zero() {
        return Ok(HomRElem::zero(m, r));
    }
    let b = Vector::indicator(&f.support());
    let c = Vector::indicator(&g.support());
    let cover = m.t1_inv(&crate::finsup::tensor(&b, &c));
    let mut expansion = Tensor::zero();
    for ((p, q), lam) in cover.iter() {
        let ap = m.multiply(&Vector::unit(a.clone()), &Vector::unit(p.clone()));
        expansion.axpy(lam, &m.delta_r(&ap, &Vector::unit(q.clone())));
    }
    let mut out = HomRElem::zero(m, r);
    for ((u, v), lam) in expansion.iter() {
        let fu = HomRElem::from_map(m, r, &|x| f.at(x), &Vector::unit(u.clone()));
        let gv = HomRElem::from_map(m, r, &|x| g.at(x), &Vector::unit(v.clone()));
        out = out.add(&conv_mul(m, r, &fu, &gv)?.scale(lam));
    }
    Ok(out)
}

/// a▷(b▷F) = ab▷F, e▷F = F for local units, and a▷(F∗G) = (a₁▷F)∗(a₂▷G).
pub fn check_module_algebra(m: &MhaInstance, r: &Algebra, window: &[Tok], samples: &[HomRElem]) -> Result<Report> {
    require_right_finite(m)?;
    let mut report = Report::new(
        "check_module_algebra",
        &format!("{} acting on Hom^r(A, {}); {} basis elements, {} samples", m.name(), r.name(), window.len(), samples.len()),
    );
    let u = |t: &Tok| Vector::unit(t.clone());
    let mut assoc = Tally::new("a▷(b▷F) = ab▷F");
    let mut unit = Tally::new("e▷F = F");
    let mut law = Tally::new("a▷(F∗G) = (a₁▷F)∗(a₂▷G)");
    for f in samples {
        for a in window {
            for b in window {
                let l = module_act(m, &u(a), &module_act(m, &u(b), f)?)?;
                let rr = module_act(m, &m.multiply(&u(a), &u(b)), f)?;
                assoc.case(l == rr, || format!("a={a}, b={b}, F={}", f.render()));
            }
        }
        if !f.is_zero() {
            let e = m.local_unit(&[Vector::indicator(&f.support())])?;
            let ef = module_act(m, &e, f)?;
            unit.case(ef == *f, || format!("F={}", f.render()));
        }
        for g in samples {
            let fg = conv_mul(m, r, f, g)?;
            for a in window {
                let l = module_act(m, &u(a), &fg)?;
                let rr = act_on_product_sweedler(m, r, a, f, g)?;
                law.case(l == rr, || format!("a={a}, F={}, G={}: {} vs {}", f.render(), g.render(), l.render(), rr.render()));
            }
        }
    }
    report.push(assoc);
    report.push(unit);
    report.push(law);
    Ok(report)
}

/// (F∗G)∗H = F∗(G∗H) on each triple, with every product also recomputed through the
/// T1⁻¹ route of [`conv_mul_generic`].
pub fn check_conv_associativity(m: &MhaInstance, r: &Algebra, triples: &[(HomRElem, HomRElem, HomRElem)]) -> Result<Report> {
    let mut report = Report::new(
        "check_conv_associativity",
        &format!("Hom^r({}, {}) on {} triples", m.name(), r.name(), triples.len()),
    );
    let mut assoc = Tally::new("(F∗G)∗H = F∗(G∗H)");
    let mut routes = Tally::new("closed form = T1⁻¹ route");
    for (f, g, h) in triples {
        let fg = conv_mul(m, r, f, g)?;
        let gh = conv_mul(m, r, g, h)?;
        let l = conv_mul(m, r, &fg, h)?;
        let rr = conv_mul(m, r, f, &gh)?;
        assoc.case(l == rr, || format!("F={}, G={}, H={}", f.render(), g.render(), h.render()));
        for (x, y, closed) in [(f, g, &fg), (g, h, &gh), (&fg, h, &l), (f, &gh, &rr)] {
            let generic = conv_mul_generic(m, r, x, y)?;
            routes.case(generic == *closed, || format!("F={}, G={}: {} vs {}", x.render(), y.render(), closed.render(), generic.render()));
        }
    }
    report.push(assoc);
    report.push(routes);
    Ok(report)
}

/// The generator behind every sampled check, seeded explicitly.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` triples of [`random_hom`] samples.
pub fn random_triples(m: &MhaInstance, r: &Algebra, rng: &mut ChaCha8Rng, n: usize) -> Vec<(HomRElem, HomRElem, HomRElem)> {
    (0..n)
        .map(|_| (random_hom(m, r, rng, 3, 2), random_hom(m, r, rng, 3, 2), random_hom(m, r, rng, 3, 2)))
        .collect()
}

/// A random element supported on `points` random group elements with small integer values.
pub fn random_hom(m: &MhaInstance, r: &Algebra, rng: &mut ChaCha8Rng, points: usize, terms: usize) -> HomRElem {
    let els = m.window(3);
    let rb: Vec<Vector> = r.window(3);
    let mut values = Vec::new();
    for _ in 0..points {
        let g = els[rng.gen_range(0..els.len())].clone();
        let mut v = Vector::zero();
        for _ in 0..terms {
            let k = &rb[rng.gen_range(0..rb.len())];
            v.axpy(&int(rng.gen_range(-3..=3)), k);
        }
        values.push((g, v));
    }
    HomRElem::new(m, r, values)
}

/// S(b) with S(b)a = a = aS(b), searched as b = S⁻¹(local unit of a).
pub fn antipode_unit_for(m: &MhaInstance, a: &Vector) -> Result<Vector> {
    let e = m.local_unit(&[a.clone()])?;
    let b = m.antipode_inv(&e)?;
    let sb = m.antipode(&b);
    if m.multiply(&sb, a) != *a || m.multiply(a, &sb) != *a {
        return Err(Error::Capability(format!(
            "no b with S(b)a = a = aS(b) for a = {}: candidate {} fails",
            a.render(),
            b.render()
        )));
    }
    Ok(b)
}

/// (f(_b) ∗ʳ g(_a))(d) = μ(f⊗g)(Δ(d)(b⊗a)).
pub fn conv_r_at(m: &MhaInstance, f: LinMap, g: LinMap, b: &Vector, a: &Vector, d: &Tok) -> Vector {
    let cover = m.t1_inv(&crate::finsup::tensor(b, a));
    let dv = Vector::unit(d.clone());
    let mut expansion = Tensor::zero();
    for ((p, q), lam) in cover.iter() {
        let dp = m.multiply(&dv, &Vector::unit(p.clone()));
        expansion.axpy(lam, &m.delta_r(&dp, &Vector::unit(q.clone())));
    }
    expansion.linear(|(x, y)| m.multiply(&f(&Vector::unit(x.clone())), &g(&Vector::unit(y.clone()))))
}

/// (g(a_) ∗ˡ f(b_))(d) = μ(g⊗f)((a⊗b)Δ(d)).
pub fn conv_l_at(m: &MhaInstance, g: LinMap, f: LinMap, a: &Vector, b: &Vector, d: &Tok) -> Vector {
    let cover = m.t2_inv(&crate::finsup::tensor(a, b));
    let dv = Vector::unit(d.clone());
    let mut expansion = Tensor::zero();
    for ((p, q), lam) in cover.iter() {
        let qd = m.multiply(&Vector::unit(q.clone()), &dv);
        expansion.axpy(lam, &m.delta_l(&Vector::unit(p.clone()), &qd));
    }
    expansion.linear(|(x, y)| m.multiply(&g(&Vector::unit(x.clone())), &f(&Vector::unit(y.clone()))))
}

/// Items (i) f(_b)∗ʳg(_a) = u_a∘ε and (ii) g(a_)∗ˡf(b_) = u_a∘ε, for each test element
/// and every d in the window.
pub fn check_convolutive_inverse(m: &MhaInstance, f: LinMap, g: LinMap, tests: &[Vector], window: &[Tok]) -> Result<Report> {
    if !m.is_regular() {
        return Err(Error::Capability(format!("{} is not regular", m.name())));
    }
    let mut report = Report::new(
        "check_convolutive_inverse",
        &format!("{}: {} test elements, d over {} basis elements", m.name(), tests.len(), window.len()),
    );
    let mut first = Tally::new("(i) f(_b)∗ʳg(_a) = u_a∘ε");
    let mut second = Tally::new("(ii) g(a_)∗ˡf(b_) = u_a∘ε");
    for a in tests {
        let b = antipode_unit_for(m, a)?;
        for d in window {
            let want = a.scale(&m.counit_basis(d));
            let l = conv_r_at(m, f, g, &b, a, d);
            first.case(l == want, || format!("a={}, d={d}: {} vs {}", a.render(), l.render(), want.render()));
            let r = conv_l_at(m, g, f, a, &b, d);
            second.case(r == want, || format!("a={}, d={d}: {} vs {}", a.render(), r.render(), want.render()));
        }
    }
    report.push(first);
    report.push(second);
    Ok(report)
}

/// Whether a candidate S′ behaves as the antipode on the window: it must be an
/// anti-homomorphism, a convolutive inverse of ι with central local units, and
/// satisfy both antipode identities.
pub fn check_antipode_from_inverse(m: &MhaInstance, candidate: LinMap, window: &[Tok]) -> Result<Report> {
    let mut report = Report::new("check_antipode_from_inverse", &format!("{} on {} basis elements", m.name(), window.len()));
    let u = |t: &Tok| Vector::unit(t.clone());
    let mut anti = Tally::new("S′(ab) = S′(b)S′(a)");
    let mut central = Tally::new("local units central");
    for a in window {
        for b in window {
            let l = candidate(&m.multiply(&u(a), &u(b)));
            let r = m.multiply(&candidate(&u(b)), &candidate(&u(a)));
            anti.case(l == r, || format!("({a},{b})"));
        }
        let sb = m.antipode(&antipode_unit_for(m, &u(a))?);
        for c in window {
            central.case(m.multiply(&sb, &u(c)) == m.multiply(&u(c), &sb), || format!("S(b)={} vs {c}", sb.render()));
        }
    }
    report.push(anti);
    report.push(central);
    let tests: Vec<Vector> = window.iter().map(u).collect();
    let id = |x: &Vector| x.clone();
    report.absorb("inverse", check_convolutive_inverse(m, candidate, &id, &tests, window)?);
    let cand = {
        let c = candidate;
        let table: BTreeMap<Tok, Vector> = window.iter().map(|t| (t.clone(), c(&u(t)))).collect();
        table
    };
    let swapped = m.with_antipode(move |t| cand.get(t).cloned().unwrap_or_default());
    report.absorb("identities", check_antipode(&swapped, window));
    Ok(report)
}
