//! Multiplier Hopf algebras in covered form.
//!
//! Δ is never materialized; only `Δ(a)(1⊗b)`, `(a⊗1)Δ(b)`, their flipped
//! versions and the inverses of T1, T2 exist, each as a rule on basis pairs.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::finsup::{tensor, tensor3_left, tensor3_right, Tensor, Tensor3, Vector};
use crate::group::GroupSpec;
use crate::linalg::Echelon;
use crate::report::{Report, Tally};
use crate::scalar::Scalar;
use crate::token::Tok;

pub type PairRule = Arc<dyn Fn(&Tok, &Tok) -> Tensor + Send + Sync>;
pub type CounitRule = Arc<dyn Fn(&Tok) -> Scalar + Send + Sync>;
pub type UnaryRule = Arc<dyn Fn(&Tok) -> Vector + Send + Sync>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// A_G: finitely supported functions on G.
    Functions,
    /// 𝕜G, realizing the dual Â_G.
    GroupAlgebra,
}

/// The four covered Sweedler patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// Σ a₁ ⊗ S(a₂)b
    IS,
    /// Σ a₂ ⊗ S⁻¹(a₁)b
    SInv,
    /// Δ(a)(1⊗b)
    PlainR,
    /// (a⊗1)Δ(b)
    PlainL,
}

/// A multiplier Hopf algebra with covered comultiplication, counit and antipode.
#[derive(Clone)]
pub struct MhaInstance {
    name: String,
    family: Family,
    algebra: Algebra,
    group: GroupSpec,
    delta_r: PairRule,
    delta_l: PairRule,
    delta_r_flip: PairRule,
    delta_l_flip: PairRule,
    t1_inv: PairRule,
    t2_inv: PairRule,
    counit: CounitRule,
    antipode: UnaryRule,
    antipode_inv: Option<UnaryRule>,
    cov_is: PairRule,
    cov_sinv: Option<PairRule>,
}

impl fmt::Debug for MhaInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MhaInstance").field("name", &self.name).finish()
    }
}

fn pair(a: Tok, b: Tok) -> Tensor {
    Tensor::unit((a, b))
}

/// Bilinear extension of a basis-pair rule.
pub fn extend(rule: &PairRule, a: &Vector, b: &Vector) -> Tensor {
    let mut out = Tensor::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            out.axpy(&(c * d), &rule(x, y));
        }
    }
    out
}

/// Linear extension of a pair rule to tensors.
pub fn extend_tensor(rule: &PairRule, v: &Tensor) -> Tensor {
    v.linear(|(a, b)| rule(a, b))
}

impl MhaInstance {
    /// A_G with Δ(f)(p,q) = f(pq), ε(f) = f(1), S(f)(p) = f(p⁻¹).
    pub fn function_algebra(g: &GroupSpec) -> Self {
        let g1 = g.clone();
        let g2 = g.clone();
        let g3 = g.clone();
        let g4 = g.clone();
        let g5 = g.clone();
        let g6 = g.clone();
        let g7 = g.clone();
        let g8 = g.clone();
        let g9 = g.clone();
        let g10 = g.clone();
        let g11 = g.clone();
        MhaInstance {
            name: format!("A_G:{}", g.name()),
            family: Family::Functions,
            algebra: Algebra::functions(g),
            group: g.clone(),
            // Δ(δ_r)(1⊗δ_q) = δ_{rq⁻¹} ⊗ δ_q
            delta_r: Arc::new(move |r, q| pair(g1.mul(r, &g1.inv(q)), q.clone())),
            // (δ_p⊗1)Δ(δ_r) = δ_p ⊗ δ_{p⁻¹r}
            delta_l: Arc::new(move |p, r| pair(p.clone(), g2.mul(&g2.inv(p), r))),
            // Δ(δ_r)(δ_q⊗1) = δ_q ⊗ δ_{q⁻¹r}
            delta_r_flip: Arc::new(move |r, q| pair(q.clone(), g3.mul(&g3.inv(q), r))),
            // (1⊗δ_p)Δ(δ_r) = δ_{rp⁻¹} ⊗ δ_p
            delta_l_flip: Arc::new(move |p, r| pair(g4.mul(r, &g4.inv(p)), p.clone())),
            t1_inv: Arc::new(move |s, q| pair(g5.mul(s, q), q.clone())),
            t2_inv: Arc::new(move |p, s| pair(p.clone(), g6.mul(p, s))),
            counit: Arc::new(move |x| if g7.is_identity(x) { Scalar::one() } else { Scalar::zero() }),
            antipode: Arc::new(move |x| Vector::unit(g8.inv(x))),
            antipode_inv: Some(Arc::new(move |x| Vector::unit(g9.inv(x)))),
            // Σ_{uv=p} δ_u ⊗ δ_{v⁻¹}δ_q: only v = q⁻¹ survives.
            cov_is: Arc::new(move |p, q| pair(g10.mul(p, q), q.clone())),
            // Σ_{uv=p} δ_v ⊗ δ_{u⁻¹}δ_q: only u = q⁻¹ survives, so v = qp.
            cov_sinv: Some(Arc::new(move |p, q| pair(g11.mul(q, p), q.clone()))),
        }
    }

    /// 𝕜G with Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹.
    pub fn group_algebra(g: &GroupSpec) -> Self {
        let g1 = g.clone();
        let g2 = g.clone();
        let g3 = g.clone();
        let g4 = g.clone();
        let g5 = g.clone();
        let g6 = g.clone();
        let g7 = g.clone();
        let g8 = g.clone();
        let g9 = g.clone();
        let g10 = g.clone();
        MhaInstance {
            name: format!("kG:{}", g.name()),
            family: Family::GroupAlgebra,
            algebra: Algebra::group_algebra(g),
            group: g.clone(),
            delta_r: Arc::new(move |a, b| pair(a.clone(), g1.mul(a, b))),
            delta_l: Arc::new(move |a, b| pair(g2.mul(a, b), b.clone())),
            delta_r_flip: Arc::new(move |a, b| pair(g3.mul(a, b), a.clone())),
            delta_l_flip: Arc::new(move |a, b| pair(b.clone(), g4.mul(a, b))),
            t1_inv: Arc::new(move |a, b| pair(a.clone(), g5.mul(&g5.inv(a), b))),
            t2_inv: Arc::new(move |a, b| pair(g6.mul(a, &g6.inv(b)), b.clone())),
            counit: Arc::new(|_| Scalar::one()),
            antipode: Arc::new(move |x| Vector::unit(g7.inv(x))),
            antipode_inv: Some(Arc::new(move |x| Vector::unit(g8.inv(x)))),
            cov_is: Arc::new(move |a, b| pair(a.clone(), g9.mul(&g9.inv(a), b))),
            cov_sinv: Some(Arc::new(move |a, b| pair(a.clone(), g10.mul(&g10.inv(a), b)))),
        }
    }

    /// Parses `A_G:<group>` or `kG:<group>`.
    pub fn parse(spec: &str) -> Result<Self> {
        if let Some(g) = spec.strip_prefix("A_G:") {
            return Ok(Self::function_algebra(&GroupSpec::parse(g)?));
        }
        if let Some(g) = spec.strip_prefix("kG:") {
            return Ok(Self::group_algebra(&GroupSpec::parse(g)?));
        }
        Err(Error::Parse(format!("unknown instance '{spec}'")))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn is_regular(&self) -> bool {
        self.antipode_inv.is_some()
    }

    /// Whether Hom^r(A, R) has the collapsed function representation.
    pub fn is_right_finite(&self) -> bool {
        self.family == Family::Functions
    }

    pub fn is_unital(&self) -> bool {
        self.algebra.identity().is_some()
    }

    /// Basis tokens of a window: all of G when finite, `{-n..=n}` for ℤ.
    pub fn window(&self, n: usize) -> Vec<Tok> {
        self.group.window(n)
    }

    pub fn delta_r(&self, a: &Vector, b: &Vector) -> Tensor {
        extend(&self.delta_r, a, b)
    }

    pub fn delta_l(&self, a: &Vector, b: &Vector) -> Tensor {
        extend(&self.delta_l, a, b)
    }

    /// Δ(a)(b⊗1).
    pub fn delta_r_flip(&self, a: &Vector, b: &Vector) -> Tensor {
        extend(&self.delta_r_flip, a, b)
    }

    /// (1⊗a)Δ(b).
    pub fn delta_l_flip(&self, a: &Vector, b: &Vector) -> Tensor {
        extend(&self.delta_l_flip, a, b)
    }

    pub fn delta_r_basis(&self, a: &Tok, b: &Tok) -> Tensor {
        (self.delta_r)(a, b)
    }

    pub fn delta_l_basis(&self, a: &Tok, b: &Tok) -> Tensor {
        (self.delta_l)(a, b)
    }

    /// T1: a⊗b ↦ Δ(a)(1⊗b).
    pub fn t1(&self, v: &Tensor) -> Tensor {
        extend_tensor(&self.delta_r, v)
    }

    /// T2: a⊗b ↦ (a⊗1)Δ(b).
    pub fn t2(&self, v: &Tensor) -> Tensor {
        extend_tensor(&self.delta_l, v)
    }

    pub fn t1_inv(&self, v: &Tensor) -> Tensor {
        extend_tensor(&self.t1_inv, v)
    }

    pub fn t2_inv(&self, v: &Tensor) -> Tensor {
        extend_tensor(&self.t2_inv, v)
    }

    pub fn counit_basis(&self, a: &Tok) -> Scalar {
        (self.counit)(a)
    }

    pub fn counit(&self, a: &Vector) -> Scalar {
        a.iter().map(|(k, c)| c * self.counit_basis(k)).fold(Scalar::zero(), |x, y| x + y)
    }

    pub fn antipode(&self, a: &Vector) -> Vector {
        a.linear(|k| (self.antipode)(k))
    }

    pub fn antipode_inv(&self, a: &Vector) -> Result<Vector> {
        let s = self.require_sinv()?;
        Ok(a.linear(|k| s(k)))
    }

    fn require_sinv(&self) -> Result<&UnaryRule> {
        self.antipode_inv
            .as_ref()
            .ok_or_else(|| Error::Capability(format!("{} is not regular", self.name)))
    }

    pub fn multiply(&self, a: &Vector, b: &Vector) -> Vector {
        self.algebra.multiply(a, b)
    }

    /// The covered Sweedler expansions needed by partial actions.
    pub fn sweedler_cov(&self, pattern: Pattern, a: &Vector, b: &Vector) -> Result<Tensor> {
        Ok(match pattern {
            Pattern::IS => extend(&self.cov_is, a, b),
            Pattern::SInv => {
                let rule = self
                    .cov_sinv
                    .as_ref()
                    .ok_or_else(|| Error::Capability(format!("{} has no inverse antipode", self.name)))?;
                extend(rule, a, b)
            }
            Pattern::PlainR => self.delta_r(a, b),
            Pattern::PlainL => self.delta_l(a, b),
        })
    }

    /// An element acting as a two-sided unit on each listed element.
    pub fn local_unit(&self, elems: &[Vector]) -> Result<Vector> {
        crate::algebra::local_unit(&self.algebra, elems)
    }

    fn renamed(&self, suffix: &str) -> Self {
        MhaInstance { name: format!("{}[{suffix}]", self.name), ..self.clone() }
    }

    /// Copy with `Δ(a)(1⊗b)` replaced.
    pub fn with_delta_r(&self, f: impl Fn(&Tok, &Tok) -> Tensor + Send + Sync + 'static) -> Self {
        MhaInstance { delta_r: Arc::new(f), ..self.renamed("delta_r") }
    }

    pub fn with_counit(&self, f: impl Fn(&Tok) -> Scalar + Send + Sync + 'static) -> Self {
        MhaInstance { counit: Arc::new(f), ..self.renamed("counit") }
    }

    pub fn with_antipode(&self, f: impl Fn(&Tok) -> Vector + Send + Sync + 'static) -> Self {
        MhaInstance { antipode: Arc::new(f), ..self.renamed("antipode") }
    }

    pub fn with_t2_inv(&self, f: impl Fn(&Tok, &Tok) -> Tensor + Send + Sync + 'static) -> Self {
        MhaInstance { t2_inv: Arc::new(f), ..self.renamed("t2_inv") }
    }

    pub fn without_antipode_inv(&self) -> Self {
        MhaInstance { antipode_inv: None, cov_sinv: None, ..self.renamed("nonregular") }
    }

    /// The three standard corruptions: Δ, ε or S broken at one non-identity element.
    pub fn mutated(&self, what: &str) -> Result<Self> {
        let g = self.group.clone();
        let e = g.identity();
        let target = g
            .window(1)
            .into_iter()
            .find(|x| *x != e)
            .ok_or_else(|| Error::Precondition("mutations need a nontrivial group".into()))?;
        match what {
            "delta" => {
                let orig = self.delta_r.clone();
                let t = target.clone();
                Ok(self.with_delta_r(move |a, b| if *a == t { pair(a.clone(), b.clone()) } else { orig(a, b) }))
            }
            "counit" => {
                let orig = self.counit.clone();
                Ok(self.with_counit(move |a| if *a == target { orig(a) + Scalar::one() } else { orig(a) }))
            }
            "antipode" => {
                let orig = self.antipode.clone();
                Ok(self.with_antipode(move |a| if *a == target { orig(a).scale(&crate::scalar::int(2)) } else { orig(a) }))
            }
            other => Err(Error::Parse(format!("unknown mutation '{other}'"))),
        }
    }
}

fn u(t: &Tok) -> Vector {
    Vector::unit(t.clone())
}

/// Both sides of covered coassociativity for basis elements a, b, c.
///
/// LHS = Σ (a⊗1)Δ(u_i) ⊗ v_i with Δ(b)(1⊗c) = Σ u_i⊗v_i;
/// RHS = Σ s_j ⊗ Δ(t_j)(1⊗c) with (a⊗1)Δ(b) = Σ s_j⊗t_j.
pub fn coassociativity_sides(m: &MhaInstance, a: &Tok, b: &Tok, c: &Tok) -> (Tensor3, Tensor3) {
    let mut lhs = Tensor3::zero();
    for ((ui, vi), k) in m.delta_r_basis(b, c).iter() {
        lhs.axpy(k, &tensor3_right(&m.delta_l_basis(a, ui), &u(vi)));
    }
    let mut rhs = Tensor3::zero();
    for ((sj, tj), k) in m.delta_l_basis(a, b).iter() {
        rhs.axpy(k, &tensor3_left(&u(sj), &m.delta_r_basis(tj, c)));
    }
    (lhs, rhs)
}

pub fn check_coassociativity(m: &MhaInstance, window: &[Tok]) -> Report {
    let mut report = Report::new("check_coassociativity", &format!("{} on {} basis elements", m.name(), window.len()));
    let mut t = Tally::new("coassociativity");
    for a in window {
        for b in window {
            for c in window {
                let (l, r) = coassociativity_sides(m, a, b, c);
                t.case(l == r, || format!("({a},{b},{c}): {} vs {}", l.render(), r.render()));
            }
        }
    }
    report.push(t);
    report
}

/// (ε⊗ι)(Δ(a)(1⊗b)) = ab and (ι⊗ε)((a⊗1)Δ(b)) = ab.
pub fn check_counit(m: &MhaInstance, window: &[Tok]) -> Report {
    let mut report = Report::new("check_counit", &format!("{} on {} basis elements", m.name(), window.len()));
    let mut left = Tally::new("(ε⊗ι)Δ(a)(1⊗b) = ab");
    let mut right = Tally::new("(ι⊗ε)(a⊗1)Δ(b) = ab");
    for a in window {
        for b in window {
            let ab = m.multiply(&u(a), &u(b));
            let l = m.delta_r_basis(a, b).linear(|(x, y)| u(y).scale(&m.counit_basis(x)));
            left.case(l == ab, || format!("({a},{b}): {} vs {}", l.render(), ab.render()));
            let r = m.delta_l_basis(a, b).linear(|(x, y)| u(x).scale(&m.counit_basis(y)));
            right.case(r == ab, || format!("({a},{b}): {} vs {}", r.render(), ab.render()));
        }
    }
    report.push(left);
    report.push(right);
    report
}

/// m(S⊗ι)(Δ(a)(1⊗b)) = ε(a)b and m(ι⊗S)((a⊗1)Δ(b)) = ε(b)a.
pub fn check_antipode(m: &MhaInstance, window: &[Tok]) -> Report {
    antipode_identities(m, window, "check_antipode")
}

pub(crate) fn antipode_identities(m: &MhaInstance, window: &[Tok], label: &str) -> Report {
    let mut report = Report::new(label, &format!("{} on {} basis elements", m.name(), window.len()));
    let mut left = Tally::new("m(S⊗ι)Δ(a)(1⊗b) = ε(a)b");
    let mut right = Tally::new("m(ι⊗S)(a⊗1)Δ(b) = ε(b)a");
    for a in window {
        for b in window {
            let l = m.delta_r_basis(a, b).linear(|(x, y)| m.multiply(&m.antipode(&u(x)), &u(y)));
            let want = u(b).scale(&m.counit_basis(a));
            left.case(l == want, || format!("({a},{b}): {} vs {}", l.render(), want.render()));
            let r = m.delta_l_basis(a, b).linear(|(x, y)| m.multiply(&u(x), &m.antipode(&u(y))));
            let want = u(a).scale(&m.counit_basis(b));
            right.case(r == want, || format!("({a},{b}): {} vs {}", r.render(), want.render()));
        }
    }
    report.push(left);
    report.push(right);
    report
}

/// T1∘T1⁻¹ = id, T1⁻¹∘T1 = id and likewise for T2, on window pairs.
pub fn check_t_roundtrips(m: &MhaInstance, window: &[Tok]) -> Report {
    let mut report = Report::new("check_t_roundtrips", &format!("{} on {} basis elements", m.name(), window.len()));
    let mut items = [
        Tally::new("T1(T1⁻¹(v)) = v"),
        Tally::new("T1⁻¹(T1(v)) = v"),
        Tally::new("T2(T2⁻¹(v)) = v"),
        Tally::new("T2⁻¹(T2(v)) = v"),
    ];
    for a in window {
        for b in window {
            let v = pair(a.clone(), b.clone());
            let results = [
                m.t1(&m.t1_inv(&v)),
                m.t1_inv(&m.t1(&v)),
                m.t2(&m.t2_inv(&v)),
                m.t2_inv(&m.t2(&v)),
            ];
            for (t, r) in items.iter_mut().zip(results.iter()) {
                t.case(*r == v, || format!("{}: got {}", v.render(), r.render()));
            }
        }
    }
    for t in items {
        report.push(t);
    }
    report
}

/// Bijectivity of a⊗b ↦ Δ(a)(b⊗1) and a⊗b ↦ (1⊗a)Δ(b) on the window span, and S∘S⁻¹ = id.
///
/// Surjectivity onto the window pairs is checked only when the window is a
/// whole finite group; otherwise the report records injectivity alone.
pub fn check_regular(m: &MhaInstance, window: &[Tok]) -> Report {
    let mut report = Report::new("check_regular", &format!("{} on {} basis elements", m.name(), window.len()));
    let full = m.group().order() == Some(window.len());
    let pairs: Vec<(Tok, Tok)> = window
        .iter()
        .flat_map(|a| window.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    for (name, flip_r) in [("Δ(a)(b⊗1) bijective", true), ("(1⊗a)Δ(b) bijective", false)] {
        let images: Vec<Tensor> = pairs
            .iter()
            .map(|(a, b)| if flip_r { m.delta_r_flip(&u(a), &u(b)) } else { m.delta_l_flip(&u(a), &u(b)) })
            .collect();
        let ech = Echelon::from_vectors(&images);
        let mut t = Tally::new(name);
        t.case(ech.rank() == pairs.len(), || {
            format!("rank {} < {} (relation {})", ech.rank(), pairs.len(), ech.relations()[0].render())
        });
        if full {
            for (a, b) in &pairs {
                let p = pair(a.clone(), b.clone());
                t.case(ech.contains(&p), || format!("{} not in image", p.render()));
            }
        } else {
            t = t.note("injectivity only: window is not a whole finite group");
        }
        report.push(t);
    }
    let mut s = Tally::new("S∘S⁻¹ = id = S⁻¹∘S");
    match m.require_sinv() {
        Ok(_) => {
            for a in window {
                let x = u(a);
                let ss = m.antipode(&m.antipode_inv(&x).unwrap());
                let ss2 = m.antipode_inv(&m.antipode(&x)).unwrap();
                s.case(ss == x && ss2 == x, || format!("{a}: {} / {}", ss.render(), ss2.render()));
            }
        }
        Err(e) => {
            s.case(false, || e.to_string());
        }
    }
    report.push(s);
    report
}

/// ε is multiplicative and S is an anti-homomorphism on window pairs.
pub fn check_morphisms(m: &MhaInstance, window: &[Tok]) -> Report {
    let mut report = Report::new("check_morphisms", &format!("{} on {} basis elements", m.name(), window.len()));
    let mut eps = Tally::new("ε(ab) = ε(a)ε(b)");
    let mut s = Tally::new("S(ab) = S(b)S(a)");
    for a in window {
        for b in window {
            let ab = m.multiply(&u(a), &u(b));
            let l = m.counit(&ab);
            let r = m.counit_basis(a) * m.counit_basis(b);
            eps.case(l == r, || format!("({a},{b})"));
            let l = m.antipode(&ab);
            let r = m.multiply(&m.antipode(&u(b)), &m.antipode(&u(a)));
            s.case(l == r, || format!("({a},{b}): {} vs {}", l.render(), r.render()));
        }
    }
    report.push(eps);
    report.push(s);
    report
}

/// The full axiom suite: coassociativity, counit, antipode, T1/T2 round trips, regularity.
pub fn check_mha_axioms(m: &MhaInstance, window: &[Tok]) -> Report {
    let mut report = Report::new("mha_axioms", &format!("{} on {} basis elements", m.name(), window.len()));
    report.absorb("coassociativity", check_coassociativity(m, window));
    report.absorb("counit", check_counit(m, window));
    report.absorb("antipode", check_antipode(m, window));
    report.absorb("t_roundtrip", check_t_roundtrips(m, window));
    report.absorb("regular", check_regular(m, window));
    report.absorb("morphisms", check_morphisms(m, window));
    report
}

/// Inverts T1 on `v` by exact linear solving over window pairs.
///
/// This is the generic fallback for instances without a closed-form inverse.
pub fn solve_t1_inv(m: &MhaInstance, v: &Tensor, window: &[Tok]) -> Result<Tensor> {
    let pairs: Vec<Tensor> = window
        .iter()
        .flat_map(|a| window.iter().map(move |b| pair(a.clone(), b.clone())))
        .collect();
    let images: Vec<Tensor> = pairs.iter().map(|p| m.t1(p)).collect();
    let c = Echelon::from_vectors(&images)
        .solve(v)
        .ok_or_else(|| Error::NoSolution(format!("{} has no T1-preimage in the window", v.render())))?;
    Ok(crate::linalg::combine(&c, &pairs))
}

/// Σ m(x⊗y) over a tensor, for a bilinear product on vectors.
pub fn contract(t: &Tensor, f: impl Fn(&Tok, &Tok) -> Vector) -> Vector {
    t.linear(|(a, b)| f(a, b))
}

/// x⊗y for basis tokens.
pub fn basis_pair(a: &Tok, b: &Tok) -> Tensor {
    tensor(&u(a), &u(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn full(m: &MhaInstance) -> Vec<Tok> {
        m.window(0)
    }

    #[test]
    fn a_c4_delta_and_counit_examples() {
        let m = MhaInstance::function_algebra(&GroupSpec::cyclic(4));
        let g = Tok::Int(1);
        assert_eq!(m.delta_r(&u(&g), &u(&g)), pair(Tok::Int(0), g.clone()));
        assert_eq!(m.counit_basis(&Tok::Int(0)), Scalar::one());
        assert!(m.counit_basis(&g).is_zero());
        assert_eq!(m.antipode(&u(&g)), u(&Tok::Int(3)));
    }

    #[test]
    fn kc2_examples() {
        let m = MhaInstance::group_algebra(&GroupSpec::cyclic(2));
        let (e, t) = (Tok::Int(0), Tok::Int(1));
        assert_eq!(m.delta_r(&u(&t), &u(&e)), pair(t.clone(), t.clone()));
        assert_eq!(m.t1_inv(&pair(t.clone(), e.clone())), pair(t.clone(), t.clone()));
        assert_eq!(m.counit_basis(&t), Scalar::one());
    }

    #[test]
    fn shipped_instances_pass() {
        for m in [
            MhaInstance::function_algebra(&GroupSpec::cyclic(2)),
            MhaInstance::function_algebra(&GroupSpec::symmetric(3)),
            MhaInstance::group_algebra(&GroupSpec::cyclic(2)),
            MhaInstance::group_algebra(&GroupSpec::symmetric(3)),
        ] {
            let r = check_mha_axioms(&m, &full(&m));
            assert!(r.passed(), "{}", r.summary());
        }
    }

    #[test]
    fn integers_windowed() {
        let m = MhaInstance::function_algebra(&GroupSpec::integers());
        let w = m.window(2);
        let r = check_mha_axioms(&m, &w);
        assert!(r.passed(), "{}", r.summary());
        assert!(r.item("regular.Δ(a)(b⊗1) bijective").unwrap().note.is_some());
    }

    #[test]
    fn mutations_fail() {
        let m = MhaInstance::function_algebra(&GroupSpec::cyclic(4));
        let w = full(&m);
        for what in ["delta", "counit", "antipode"] {
            let bad = m.mutated(what).unwrap();
            assert!(!check_mha_axioms(&bad, &w).passed(), "{what}");
        }
        let bad = m.mutated("delta").unwrap();
        assert!(!check_coassociativity(&bad, &w).passed());
        assert!(!check_counit(&m.mutated("counit").unwrap(), &w).passed());
    }

    #[test]
    fn doubled_antipode_fails_even_where_s_is_an_involution() {
        let m = MhaInstance::function_algebra(&GroupSpec::cyclic(2)).mutated("antipode").unwrap();
        let r = check_antipode(&m, &full(&m));
        assert!(!r.passed());
        assert!(check_antipode(&m, &[Tok::Int(0)]).passed());
    }

    #[test]
    fn identity_antipode_fails_only_off_identity() {
        let m = MhaInstance::function_algebra(&GroupSpec::cyclic(4)).with_antipode(|a| Vector::unit(a.clone()));
        let w = full(&m);
        let r = check_antipode(&m, &w);
        assert!(!r.passed());
        // S = id gives [pq⁻¹ = q] where [p = e] is required.
        assert_eq!(r.failing()[0].witness.as_deref().unwrap().split(':').next(), Some("(0,1)"));
        assert!(check_antipode(&m, &[Tok::Int(0)]).passed());
    }

    #[test]
    fn broken_t2_inverse_is_not_regular_roundtrip() {
        let m = MhaInstance::function_algebra(&GroupSpec::cyclic(4)).with_t2_inv(|a, b| pair(a.clone(), b.clone()));
        assert!(!check_t_roundtrips(&m, &full(&m)).passed());
        let nr = MhaInstance::function_algebra(&GroupSpec::cyclic(4)).without_antipode_inv();
        assert!(!check_regular(&nr, &full(&nr)).passed());
        assert!(matches!(nr.sweedler_cov(Pattern::SInv, &u(&Tok::Int(0)), &u(&Tok::Int(0))), Err(Error::Capability(_))));
    }

    #[test]
    fn sweedler_examples() {
        let g = GroupSpec::symmetric(3);
        let m = MhaInstance::function_algebra(&g);
        let p = Tok::cycles(3, &[&[1, 2]]);
        let q = Tok::cycles(3, &[&[1, 2, 3]]);
        let is = m.sweedler_cov(Pattern::IS, &u(&p), &u(&q)).unwrap();
        assert_eq!(is, pair(g.mul(&p, &q), q.clone()));
        let kg = MhaInstance::group_algebra(&g);
        let is = kg.sweedler_cov(Pattern::IS, &u(&p), &u(&q)).unwrap();
        assert_eq!(is, pair(p.clone(), g.mul(&g.inv(&p), &q)));
    }

    /// Expands Δ(δ_p) = Σ_{uv=p} δ_u⊗δ_v by enumeration and compares every closed form.
    #[test]
    fn closed_forms_match_brute_force_expansion() {
        let g = GroupSpec::symmetric(3);
        let m = MhaInstance::function_algebra(&g);
        let els = g.elements().unwrap();
        for p in els {
            for q in els {
                let (mut dr, mut dl, mut drf, mut dlf) = (Tensor::zero(), Tensor::zero(), Tensor::zero(), Tensor::zero());
                let (mut is, mut sinv) = (Tensor::zero(), Tensor::zero());
                for x in els {
                    let y = g.mul(&g.inv(x), p); // xy = p
                    dr = dr + tensor(&u(x), &m.multiply(&u(&y), &u(q)));
                    drf = drf + tensor(&m.multiply(&u(x), &u(q)), &u(&y));
                    is = is + tensor(&u(x), &m.multiply(&m.antipode(&u(&y)), &u(q)));
                    sinv = sinv + tensor(&u(&y), &m.multiply(&m.antipode_inv(&u(x)).unwrap(), &u(q)));
                    // (δ_q⊗1)Δ(δ_p) and (1⊗δ_q)Δ(δ_p)
                    dl = dl + tensor(&m.multiply(&u(q), &u(x)), &u(&y));
                    dlf = dlf + tensor(&u(x), &m.multiply(&u(q), &u(&y)));
                }
                assert_eq!(m.delta_r(&u(p), &u(q)), dr);
                assert_eq!(m.delta_r_flip(&u(p), &u(q)), drf);
                assert_eq!(m.delta_l(&u(q), &u(p)), dl);
                assert_eq!(m.delta_l_flip(&u(q), &u(p)), dlf);
                assert_eq!(m.sweedler_cov(Pattern::IS, &u(p), &u(q)).unwrap(), is);
                assert_eq!(m.sweedler_cov(Pattern::SInv, &u(p), &u(q)).unwrap(), sinv);
            }
        }
    }

    #[test]
    fn fallback_inverse_matches_closed_form() {
        let m = MhaInstance::function_algebra(&GroupSpec::symmetric(3));
        let w = full(&m);
        for a in &w {
            for b in &w {
                let v = pair(a.clone(), b.clone());
                assert_eq!(solve_t1_inv(&m, &v, &w).unwrap(), m.t1_inv(&v));
            }
        }
    }
}
