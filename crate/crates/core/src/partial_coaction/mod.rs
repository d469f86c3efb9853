//! Right partial coactions ρ: L → M(L⊗A) with an idempotent E ∈ M(L⊗A), the dual
//! action of A′_c on comodules, generated subcomodule algebras, and the
//! globalization ((Q, ι⊗Δ), θ, π) of a quasi counitary partial comodule algebra.
//!
//! Elements of L⊗A are [`Tensor`]s keyed by (ambient token, A token); all rules are
//! linear maps on the ambient span, so they may be applied coordinatewise.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{Algebra, SubAlgebra};
use crate::error::{Error, Result};
use crate::finsup::{tensor, FinSup, Tensor, Tensor3, Vector};
use crate::group_correspondence::PartialGroupAction;
use crate::linalg::{combine, joint_null_space, Echelon};
use crate::mha::{check_coassociativity, MhaInstance};
use crate::report::{Report, Tally};
use crate::scalar::Scalar;
use crate::token::{BasisKey, Tok};

type CovRule = Arc<dyn Fn(&Vector, &Tok) -> Tensor + Send + Sync>;
type TensorOp = Arc<dyn Fn(&Tensor) -> Tensor + Send + Sync>;

/// Default dimension bound for generated subcomodule algebras.
pub const DEFAULT_BOUND: usize = 512;

/// A partial A-comodule algebra given by ρ(x)(1⊗a), (1⊗a)ρ(x) and E as a pair of
/// operators on L⊗A.
#[derive(Clone)]
pub struct PartialCoactionData {
    pub name: String,
    pub acting: MhaInstance,
    pub target: SubAlgebra,
    rho_r: CovRule,
    rho_l: CovRule,
    e_left: TensorOp,
    e_right: TensorOp,
}

impl std::fmt::Debug for PartialCoactionData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PartialCoactionData").field("name", &self.name).finish()
    }
}

fn a_basis(m: &MhaInstance) -> Result<Vec<Tok>> {
    m.group()
        .elements()
        .map(<[Tok]>::to_vec)
        .ok_or_else(|| Error::Capability(format!("{} is infinite-dimensional; coactions need a finite A", m.name())))
}

fn a_unit(m: &MhaInstance) -> Result<Vector> {
    m.algebra().identity().cloned().ok_or_else(|| Error::Capability(format!("{} has no unit", m.name())))
}

/// Multiplies the A-leg by `a` on the right.
fn a_leg_times(m: &MhaInstance, t: &Tensor, a: &Vector) -> Tensor {
    t.linear(|(k, c)| tensor(&Vector::unit(k.clone()), &m.multiply(&Vector::unit(c.clone()), a)))
}

/// The product of L⊗A.
pub fn la_mul(l: &Algebra, m: &MhaInstance, s: &Tensor, t: &Tensor) -> Tensor {
    let mut out = Tensor::zero();
    for ((x, c), p) in s.iter() {
        for ((y, d), q) in t.iter() {
            let v = tensor(&l.mul_basis(x, y), &m.algebra().mul_basis(c, d));
            out.axpy(&(p * q), &v);
        }
    }
    out
}

fn split_last(t: &Tensor3) -> std::collections::BTreeMap<Tok, Tensor> {
    let mut out: std::collections::BTreeMap<Tok, Tensor> = std::collections::BTreeMap::new();
    for ((x, a, b), c) in t.iter() {
        out.entry(b.clone()).or_default().add_term((x.clone(), a.clone()), c.clone());
    }
    out
}

fn join_last(t: &Tensor, b: &Tok) -> Tensor3 {
    t.map_keys(|(x, a)| (x.clone(), a.clone(), b.clone()))
}

/// Applies an operator on L⊗A to the first two legs.
fn first_two(t: &Tensor3, f: impl Fn(&Tensor) -> Tensor) -> Tensor3 {
    let mut out = Tensor3::zero();
    for (b, part) in split_last(t) {
        out.axpy(&Scalar::one(), &join_last(&f(&part), &b));
    }
    out
}

fn render3(t: &Tensor3) -> String {
    t.render()
}

impl PartialCoactionData {
    pub fn new(
        name: &str,
        acting: &MhaInstance,
        target: SubAlgebra,
        rho_r: impl Fn(&Vector, &Tok) -> Tensor + Send + Sync + 'static,
        rho_l: impl Fn(&Vector, &Tok) -> Tensor + Send + Sync + 'static,
        e_left: impl Fn(&Tensor) -> Tensor + Send + Sync + 'static,
        e_right: impl Fn(&Tensor) -> Tensor + Send + Sync + 'static,
    ) -> Result<Self> {
        a_basis(acting)?;
        Ok(PartialCoactionData {
            name: name.to_string(),
            acting: acting.clone(),
            target,
            rho_r: Arc::new(rho_r),
            rho_l: Arc::new(rho_l),
            e_left: Arc::new(e_left),
            e_right: Arc::new(e_right),
        })
    }

    /// ρ(x) = x⊗δ_1 over A_G, with E = 1⊗δ_1.
    pub fn trivial(target: SubAlgebra, g: &crate::group::GroupSpec) -> Result<Self> {
        let m = MhaInstance::function_algebra(g);
        let e = g.identity();
        let (e1, e2, e3, e4) = (e.clone(), e.clone(), e.clone(), e);
        Self::new(
            &format!("trivial:{}:{}", target.name, g.name()),
            &m,
            target,
            move |x, a| if *a == e1 { tensor(x, &Vector::unit(e1.clone())) } else { Tensor::zero() },
            move |x, a| if *a == e2 { tensor(x, &Vector::unit(e2.clone())) } else { Tensor::zero() },
            move |t| t.filter(|(_, c)| *c == e3),
            move |t| t.filter(|(_, c)| *c == e4),
        )
    }

    /// ρ(x) = Σ_g α_g(xσ_{g⁻¹})⊗δ_g over A_G with E = Σ_g σ_g⊗δ_g.
    pub fn from_group_action(p: &PartialGroupAction) -> Result<Self> {
        let m = MhaInstance::function_algebra(&p.group);
        let (p1, p2, p3, p4) = (p.clone(), p.clone(), p.clone(), p.clone());
        Self::new(
            &format!("coaction:{}", p.name),
            &m,
            p.algebra.clone(),
            move |x, a| tensor(&crate::group_correspondence::gamma(&p1, a, x), &Vector::unit(a.clone())),
            move |x, a| tensor(&crate::group_correspondence::gamma(&p2, a, x), &Vector::unit(a.clone())),
            move |t| t.linear(|(k, c)| tensor(&p3.sigma(c).left(&Vector::unit(k.clone())), &Vector::unit(c.clone()))),
            move |t| t.linear(|(k, c)| tensor(&p4.sigma(c).right(&Vector::unit(k.clone())), &Vector::unit(c.clone()))),
        )
    }

    /// The grading ρ(h) = h⊗h of 𝕜G over itself, a global 𝕜G-comodule algebra.
    pub fn grading(g: &crate::group::GroupSpec) -> Result<Self> {
        let m = MhaInstance::group_algebra(g);
        let alg = Algebra::group_algebra(g);
        let (g1, g2) = (g.clone(), g.clone());
        Self::new(
            &format!("grading:{}", g.name()),
            &m,
            SubAlgebra::full(&alg, 0),
            move |x, a| x.linear(|h| Tensor::unit((h.clone(), g1.mul(h, a)))),
            move |x, a| x.linear(|h| Tensor::unit((h.clone(), g2.mul(a, h)))),
            |t| t.clone(),
            |t| t.clone(),
        )
    }

    /// The same ρ with E replaced.
    pub fn with_e(
        &self,
        suffix: &str,
        e_left: impl Fn(&Tensor) -> Tensor + Send + Sync + 'static,
        e_right: impl Fn(&Tensor) -> Tensor + Send + Sync + 'static,
    ) -> Self {
        PartialCoactionData {
            name: format!("{}[{suffix}]", self.name),
            e_left: Arc::new(e_left),
            e_right: Arc::new(e_right),
            ..self.clone()
        }
    }

    /// E scaled by 2, which is not idempotent unless E = 0.
    pub fn with_doubled_e(&self) -> Self {
        let (l, r) = (self.e_left.clone(), self.e_right.clone());
        let two = Scalar::from_integer(2.into());
        let two2 = two.clone();
        self.with_e("2E", move |t| l(t).scale(&two), move |t| r(t).scale(&two2))
    }

    pub fn l_basis(&self) -> &[Vector] {
        &self.target.basis
    }

    pub fn a_tokens(&self) -> Vec<Tok> {
        a_basis(&self.acting).unwrap_or_default()
    }

    pub fn l_mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.target.multiply(x, y)
    }

    /// ρ(x)(1⊗a).
    pub fn rho_r(&self, x: &Vector, a: &Tok) -> Tensor {
        (self.rho_r)(x, a)
    }

    /// (1⊗a)ρ(x).
    pub fn rho_l(&self, a: &Tok, x: &Vector) -> Tensor {
        (self.rho_l)(x, a)
    }

    /// ρ(x)(1⊗b) for an arbitrary b ∈ A.
    pub fn rho_r_vec(&self, x: &Vector, b: &Vector) -> Tensor {
        let mut out = Tensor::zero();
        for (k, c) in b.iter() {
            out.axpy(c, &self.rho_r(x, k));
        }
        out
    }

    pub fn e_left(&self, t: &Tensor) -> Tensor {
        (self.e_left)(t)
    }

    pub fn e_right(&self, t: &Tensor) -> Tensor {
        (self.e_right)(t)
    }

    pub fn la_mul(&self, s: &Tensor, t: &Tensor) -> Tensor {
        la_mul(&self.target.ambient, &self.acting, s, t)
    }

    /// ρ(x)t for t ∈ L⊗A: each z⊗c contributes ρ(x)(1⊗c)(z⊗1).
    pub fn rho_times(&self, x: &Vector, t: &Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for ((z, c), s) in t.iter() {
            let r = self.rho_r(x, c);
            let shifted = r.linear(|(k, d)| tensor(&self.target.ambient.mul_basis(k, z), &Vector::unit(d.clone())));
            out.axpy(s, &shifted);
        }
        out
    }

    /// (ρ⊗ι)(t)(1⊗a⊗1) for t ∈ L⊗A.
    pub fn rho_id(&self, t: &Tensor, a: &Tok) -> Tensor3 {
        let mut out = Tensor3::zero();
        for ((x, c), s) in t.iter() {
            out.axpy(s, &join_last(&self.rho_r(&Vector::unit(x.clone()), a), c));
        }
        out
    }

    /// (ι⊗Δ)(ρ(x))(1⊗a⊗b), through a⊗b = Σ Δ(a_i)(1⊗b_i).
    pub fn id_delta(&self, x: &Vector, a: &Tok, b: &Tok) -> Tensor3 {
        let split = self.acting.t1_inv(&Tensor::unit((a.clone(), b.clone())));
        let mut out = Tensor3::zero();
        for ((ai, bi), s) in split.iter() {
            for ((k, c), u) in self.rho_r(x, ai).iter() {
                let d = self.acting.delta_r_basis(c, bi);
                for ((p, q), v) in d.iter() {
                    out.add_term((k.clone(), p.clone(), q.clone()), s * u * v);
                }
            }
        }
        out
    }
}

/// Multiplies the L-leg of a three-leg tensor by z on the right.
fn l_leg_times(l: &Algebra, t: &Tensor3, z: &Tok) -> Tensor3 {
    t.linear(|(x, a, b)| {
        l.mul_basis(x, z).map_keys(|k| (k.clone(), a.clone(), b.clone()))
    })
}

/// Whether E acts as the identity on L⊗A.
pub fn is_global(c: &PartialCoactionData) -> bool {
    let a = c.a_tokens();
    c.l_basis().iter().all(|x| {
        a.iter().all(|t| {
            let v = tensor(x, &Vector::unit(t.clone()));
            c.e_left(&v) == v && c.e_right(&v) == v
        })
    })
}

/// The axioms of a (symmetric) partial comodule algebra in covered form, with the
/// consequences Eρ(x) = ρ(x) = ρ(x)E, (ι⊗ε)ρ(x) = x and ρ(L)(1⊗A) = E(L⊗A).
pub fn check_partial_coaction(c: &PartialCoactionData, window: &[Tok]) -> Report {
    let lb = c.l_basis();
    let all_a = c.a_tokens();
    let amb = &c.target.ambient;
    let mut report = Report::new(
        "check_partial_coaction",
        &format!("{}: {} L-basis elements, A-window {}", c.name, lb.len(), window.len()),
    );

    let cols: Vec<Vec<Tensor>> = lb.iter().map(|x| all_a.iter().map(|a| c.rho_r(x, a)).collect()).collect();
    let kernel = joint_null_space(&cols);
    let mut inj = Tally::new("ρ injective");
    inj.case(kernel.is_empty(), || format!("ρ vanishes on {}", combine(&kernel[0], lb).render()));
    report.push(inj);

    let mut idem = Tally::new("E² = E");
    let mut tests = Vec::new();
    for x in lb {
        for a in &all_a {
            tests.push(tensor(x, &Vector::unit(a.clone())));
        }
    }
    for t in &tests {
        let (l, r) = (c.e_left(t), c.e_right(t));
        idem.case(c.e_left(&l) == l, || format!("E(E({})) ≠ E({})", t.render(), t.render()));
        idem.case(c.e_right(&r) == r, || format!("(({})E)E ≠ ({})E", t.render(), t.render()));
    }
    report.push(idem);

    let e_span = Echelon::from_vectors(&tests.iter().map(|t| c.e_left(t)).collect::<Vec<_>>());
    let e_span_r = Echelon::from_vectors(&tests.iter().map(|t| c.e_right(t)).collect::<Vec<_>>());
    let mut first_r = Tally::new("(i) ρ(x)(1⊗a) ∈ E(L⊗A)");
    let mut first_l = Tally::new("(i) (1⊗a)ρ(x) ∈ (L⊗A)E");
    let mut hom = Tally::new("ρ(xy) = ρ(x)ρ(y)");
    let mut lem_l = Tally::new("Eρ(x) = ρ(x)");
    let mut lem_r = Tally::new("ρ(x)E = ρ(x)");
    let mut counit = Tally::new("(ι⊗ε)ρ(x) = x");
    let mut second = Tally::new("(ii) (ρ⊗ι)(ρ(x)(1⊗b)) = (E⊗1)(ι⊗Δ)(ρ(x))(1⊗1⊗b)");
    let mut third = Tally::new("(iii) (ρ⊗ι)(ρ(x)(1⊗b)) = (ι⊗Δ)(ρ(x))(E⊗1)(1⊗1⊗b)");
    for x in lb {
        for a in window {
            let r = c.rho_r(x, a);
            let l = c.rho_l(a, x);
            first_r.case(e_span.contains(&r), || format!("x={}, a={a}: {}", x.render(), r.render()));
            first_l.case(e_span_r.contains(&l), || format!("x={}, a={a}: {}", x.render(), l.render()));
            lem_l.case(c.e_left(&r) == r, || format!("x={}, a={a}", x.render()));
            lem_r.case(c.e_right(&l) == l, || format!("x={}, a={a}", x.render()));
            let eps = r.linear(|(k, d)| Vector::term(k.clone(), c.acting.counit_basis(d)));
            let want = x.scale(&c.acting.counit_basis(a));
            counit.case(eps == want, || format!("x={}, a={a}: {} vs {}", x.render(), eps.render(), want.render()));
            for y in lb {
                let lhs = c.rho_r(&c.l_mul(x, y), a);
                let rhs = c.rho_times(x, &c.rho_r(y, a));
                hom.case(lhs == rhs, || format!("x={}, y={}, a={a}", x.render(), y.render()));
            }
            for b in window {
                let lhs = c.rho_id(&c.rho_r(x, b), a);
                let rhs = first_two(&c.id_delta(x, a, b), |t| c.e_left(t));
                second.case(lhs == rhs, || {
                    format!("x={}, a={a}, b={b}: {} vs {}", x.render(), render3(&lhs), render3(&rhs))
                });
            }
        }
        for b in window {
            let outer = c.rho_r(x, b);
            for y in lb {
                for a in window {
                    let ya = tensor(y, &Vector::unit(a.clone()));
                    // Both sides multiplied on the right by y⊗a⊗1.
                    let mut lhs = Tensor3::zero();
                    for ((k, d), s) in outer.iter() {
                        let inner = c.rho_times(&Vector::unit(k.clone()), &ya);
                        lhs.axpy(s, &join_last(&inner, d));
                    }
                    let mut rhs = Tensor3::zero();
                    for ((z, d), s) in c.e_left(&ya).iter() {
                        rhs.axpy(s, &l_leg_times(amb, &c.id_delta(x, d, b), z));
                    }
                    third.case(lhs == rhs, || {
                        format!("x={}, b={b}, y={}, a={a}: {} vs {}", x.render(), y.render(), render3(&lhs), render3(&rhs))
                    });
                }
            }
        }
    }
    for t in [first_r, first_l, hom, second, third, lem_l, lem_r, counit] {
        report.push(t);
    }

    let rho_span: Vec<Tensor> = lb.iter().flat_map(|x| all_a.iter().map(move |a| (x, a))).map(|(x, a)| c.rho_r(x, a)).collect();
    let mut prop = Tally::new("ρ(L)(1⊗A) = E(L⊗A)");
    let rs = Echelon::from_vectors(&rho_span);
    prop.case(rs.same_span(&e_span), || format!("ranks {} vs {}", rs.rank(), e_span.rank()));
    report.push(prop);

    let global = is_global(c);
    report.push(Tally::new("classification").note(if global { "global (E = 1⊗1)" } else { "partial (E ≠ 1⊗1)" }));
    report
}

/// Whether e is a nonzero central idempotent with Δ(e)(e⊗1) = e⊗e and ε(e) = 1.
pub fn check_quasi_counitary(m: &MhaInstance, e: &Vector) -> Report {
    let mut report = Report::new("check_quasi_counitary", &format!("{} at e = {}", m.name(), e.render()));
    report.fact("e ≠ 0", !e.is_zero(), || "e = 0".into());
    let mut central = Tally::new("e central");
    for a in m.algebra().window(0) {
        let (l, r) = (m.multiply(e, &a), m.multiply(&a, e));
        central.case(l == r, || format!("{}: {} vs {}", a.render(), l.render(), r.render()));
    }
    report.push(central);
    let ee = m.multiply(e, e);
    report.fact("e² = e", ee == *e, || ee.render());
    let lhs = m.delta_r_flip(e, e);
    let rhs = tensor(e, e);
    report.fact("Δ(e)(e⊗1) = e⊗e", lhs == rhs, || format!("{} vs {}", lhs.render(), rhs.render()));
    let eps = m.counit(e);
    report.fact("ε(e) = 1", eps.is_one(), || format!("ε(e) = {eps}"));
    report
}

/// A functional ω(a_b) ∈ A′_c: c ↦ ω(acb), with ω finitely supported on A's basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFunctional {
    pub omega: Vector,
    pub left: Vector,
    pub right: Vector,
}

impl DualFunctional {
    pub fn new(omega: Vector, left: Vector, right: Vector) -> Self {
        DualFunctional { omega, left, right }
    }

    /// The coordinate functional of a basis token, sandwiched by units.
    pub fn coordinate(m: &MhaInstance, k: &Tok) -> Result<Self> {
        let one = a_unit(m)?;
        Ok(DualFunctional::new(Vector::unit(k.clone()), one.clone(), one))
    }

    /// The coordinate functional of `k` sandwiched as ω(1 _ b).
    pub fn coordinate_at(m: &MhaInstance, k: &Tok, b: &Vector) -> Result<Self> {
        Ok(DualFunctional::new(Vector::unit(k.clone()), a_unit(m)?, b.clone()))
    }

    pub fn counit(m: &MhaInstance) -> Result<Self> {
        let one = a_unit(m)?;
        let omega = Vector::from_terms(a_basis(m)?.into_iter().map(|k| {
            let c = m.counit_basis(&k);
            (k, c)
        }));
        Ok(DualFunctional::new(omega, one.clone(), one))
    }

    fn omega_at(&self, v: &Vector) -> Scalar {
        v.iter().map(|(k, c)| c * self.omega.get(k)).fold(Scalar::zero(), |x, y| x + y)
    }

    /// ω(acb).
    pub fn eval(&self, m: &MhaInstance, c: &Vector) -> Scalar {
        self.omega_at(&m.multiply(&m.multiply(&self.left, c), &self.right))
    }

    /// The product of A′_c: (ω·ω′)(c) = (ω⊗ω′)Δ(c), tabulated on a finite A.
    pub fn product(&self, other: &DualFunctional, m: &MhaInstance) -> Result<DualFunctional> {
        let one = a_unit(m)?;
        let omega = Vector::from_terms(a_basis(m)?.into_iter().map(|k| {
            let d = m.delta_r(&Vector::unit(k.clone()), &one);
            let v = d
                .iter()
                .map(|((p, q), s)| {
                    s * self.eval(m, &Vector::unit(p.clone())) * other.eval(m, &Vector::unit(q.clone()))
                })
                .fold(Scalar::zero(), |x, y| x + y);
            (k, v)
        }));
        Ok(DualFunctional::new(omega, one.clone(), one))
    }
}

/// ω(a_b) ▷ρ x = (ι⊗ω(a_))(ρ(x)(1⊗b)) for a comodule given by its covered rule.
pub fn dual_act<K: BasisKey>(
    m: &MhaInstance,
    w: &DualFunctional,
    x: &FinSup<K>,
    rho_r: impl Fn(&FinSup<K>, &Tok) -> FinSup<(K, Tok)>,
) -> FinSup<K> {
    let mut out = FinSup::zero();
    for (b, s) in w.right.iter() {
        for ((k, c), u) in rho_r(x, b).iter() {
            let val = w.omega_at(&m.multiply(&w.left, &Vector::unit(c.clone())));
            if !val.is_zero() {
                out.add_term(k.clone(), s * u * val);
            }
        }
    }
    out
}

/// ρ = ι⊗Δ on L⊗A, covered: ρ(v)(1⊗1⊗a).
pub fn rho_q(m: &MhaInstance, v: &Tensor, a: &Tok) -> FinSup<((Tok, Tok), Tok)> {
    let mut out = FinSup::zero();
    for ((x, c), s) in v.iter() {
        for ((p, q), u) in m.delta_r_basis(c, a).iter() {
            out.add_term(((x.clone(), p.clone()), q.clone()), s * u);
        }
    }
    out
}

fn flatten3(t: &FinSup<((Tok, Tok), Tok)>) -> Tensor3 {
    t.map_keys(|((x, a), b)| (x.clone(), a.clone(), b.clone()))
}

/// A generated subcomodule algebra with the checks run on it.
#[derive(Clone, Debug)]
pub struct Subcomodule<K: Ord> {
    pub basis: Vec<FinSup<K>>,
    pub report: Report,
}

/// ⟨A′_c ▷ρ P⟩_alg: the coordinates x_{i,a} of ρ(u)(1⊗a) over the window, closed
/// under products. Exceeding `bound` dimensions is inconclusive.
pub fn generated_subcomodule<K: BasisKey>(
    m: &MhaInstance,
    gens: &[FinSup<K>],
    rho_r: impl Fn(&FinSup<K>, &Tok) -> FinSup<(K, Tok)>,
    mul: impl Fn(&FinSup<K>, &FinSup<K>) -> FinSup<K>,
    window: &[Tok],
    bound: usize,
) -> Result<Subcomodule<K>> {
    let mut report = Report::new("generated_subcomodule", &format!("{} generators, A-window {}, bound {bound}", gens.len(), window.len()));
    let mut span = Echelon::new();
    let tokens = a_basis(m)?;
    for u in gens {
        for a in window {
            for k in &tokens {
                let w = DualFunctional::coordinate_at(m, k, &Vector::unit(a.clone()))?;
                span.insert(&dual_act(m, &w, u, &rho_r));
            }
        }
    }
    let mut exhausted = false;
    loop {
        if span.rank() > bound {
            exhausted = true;
            break;
        }
        let basis = span.basis();
        let before = span.rank();
        for x in &basis {
            for y in &basis {
                span.insert(&mul(x, y));
            }
        }
        if span.rank() == before {
            break;
        }
    }
    let basis = span.basis();
    if exhausted {
        report.inconclusive("closure", format!("dimension exceeded {bound}"));
        return Ok(Subcomodule { basis, report });
    }
    let mut sub = Tally::new("ρ(Q)(1⊗a) ⊆ Q⊗A");
    for q in &basis {
        for a in window {
            let t = rho_r(q, a);
            let mut parts: std::collections::BTreeMap<Tok, FinSup<K>> = std::collections::BTreeMap::new();
            for ((k, c), s) in t.iter() {
                parts.entry(c.clone()).or_default().add_term(k.clone(), s.clone());
            }
            for (c, part) in parts {
                sub.case(span.contains(&part), || format!("q={}, a={a}: coefficient of {c}", q.render()));
            }
        }
    }
    report.push(sub);
    let mut rec = Tally::new("u = (ι⊗ε)(ρ(u)(1⊗a)) for ε(a) = 1, u ∈ Q");
    for u in gens {
        rec.case(span.contains(u), || format!("{} ∉ Q", u.render()));
        for a in window {
            let eps = m.counit_basis(a);
            let t = rho_r(u, a);
            let got = t.linear(|(k, c)| FinSup::term(k.clone(), m.counit_basis(c)));
            rec.case(got == u.scale(&eps), || format!("u={}, a={a}", u.render()));
        }
    }
    report.push(rec);
    Ok(Subcomodule { basis, report })
}

type QOp = Arc<dyn Fn(&Tensor) -> Tensor + Send + Sync>;

/// ((Q, ι⊗Δ), θ, π) with θ(x) = ρ̄(x)(1⊗e) and π(v) = E(1⊗e)v.
#[derive(Clone)]
pub struct CoactionGlobalization {
    pub name: String,
    pub partial: PartialCoactionData,
    pub e: Vector,
    pub q_basis: Vec<Tensor>,
    pub closure: Report,
    pi_override: Option<QOp>,
}

impl std::fmt::Debug for CoactionGlobalization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CoactionGlobalization").field("name", &self.name).field("dim Q", &self.q_basis.len()).finish()
    }
}

impl CoactionGlobalization {
    pub fn theta(&self, x: &Vector) -> Tensor {
        self.partial.rho_r_vec(x, &self.e)
    }

    pub fn pi(&self, v: &Tensor) -> Tensor {
        match &self.pi_override {
            Some(f) => f(v),
            None => self.partial.e_left(&a_leg_times(&self.partial.acting, v, &self.e)),
        }
    }

    pub fn with_pi(&self, suffix: &str, f: impl Fn(&Tensor) -> Tensor + Send + Sync + 'static) -> Self {
        CoactionGlobalization { name: format!("{}[{suffix}]", self.name), pi_override: Some(Arc::new(f)), ..self.clone() }
    }

    pub fn mul(&self, s: &Tensor, t: &Tensor) -> Tensor {
        self.partial.la_mul(s, t)
    }

    pub fn theta_basis(&self) -> Vec<Tensor> {
        self.partial.l_basis().iter().map(|x| self.theta(x)).collect()
    }

    /// θ⁻¹ on θ(L).
    pub fn theta_inverse(&self, v: &Tensor) -> Option<Vector> {
        let images = self.theta_basis();
        Echelon::from_vectors(&images).solve(v).map(|c| combine(&c, self.partial.l_basis()))
    }

    /// Φ(E)(t) = (θ⊗ι)(E(θ⁻¹⊗ι)(t)) for t ∈ θ(L)⊗A.
    pub fn phi_e(&self, t: &Tensor3) -> Option<Tensor3> {
        let mut out = Tensor3::zero();
        for (b, part) in split_last(t) {
            let x = self.theta_inverse(&part)?;
            let ex = self.partial.e_left(&tensor(&x, &Vector::unit(b.clone())));
            let mut per_a: std::collections::BTreeMap<Tok, Vector> = std::collections::BTreeMap::new();
            for ((k, a), s) in ex.iter() {
                per_a.entry(a.clone()).or_default().add_term(k.clone(), s.clone());
            }
            for (a, y) in per_a {
                out.axpy(&Scalar::one(), &join_last(&self.theta(&y), &a));
            }
        }
        Some(out)
    }

    /// The table θ(x)⊗a ↦ (θ⊗ι)(E(x⊗a)) on the L-basis and A-basis.
    pub fn phi_e_table(&self) -> Vec<(String, String)> {
        let mut rows = Vec::new();
        for x in self.partial.l_basis() {
            for a in self.partial.a_tokens() {
                let t = join_last(&self.theta(x), &a);
                let v = self.phi_e(&t).map(|v| v.render()).unwrap_or_else(|| "undefined".into());
                rows.push((t.render(), v));
            }
        }
        rows
    }

    /// (π⊗ι)(t) on the first two legs.
    fn pi_id(&self, t: &Tensor3) -> Tensor3 {
        first_two(t, |v| self.pi(v))
    }

    fn rho_cov(&self, v: &Tensor, a: &Vector) -> Tensor3 {
        let mut out = Tensor3::zero();
        for (k, s) in a.iter() {
            out.axpy(s, &flatten3(&rho_q(&self.partial.acting, v, k)));
        }
        out
    }
}

/// Builds the globalization of a quasi counitary partial comodule algebra.
pub fn coaction_globalize(c: &PartialCoactionData, e: &Vector, window: &[Tok], bound: usize) -> Result<CoactionGlobalization> {
    let pc = check_partial_coaction(c, window);
    let qc = check_quasi_counitary(&c.acting, e);
    if !pc.passed() || !qc.passed() {
        return Err(Error::Rejected(format!("{}{}", pc.summary(), qc.summary())));
    }
    let mut g = CoactionGlobalization {
        name: format!("coglobal:{}", c.name),
        partial: c.clone(),
        e: e.clone(),
        q_basis: Vec::new(),
        closure: Report::new("generated_subcomodule", ""),
        pi_override: None,
    };
    let m = c.acting.clone();
    let m2 = c.acting.clone();
    let g2 = g.clone();
    let sub = generated_subcomodule(
        &m,
        &g.theta_basis(),
        move |v, a| rho_q(&m2, v, a),
        move |s, t| g2.mul(s, t),
        &c.a_tokens(),
        bound,
    )?;
    if !sub.report.passed() {
        return Err(Error::Inconclusive(sub.report.summary()));
    }
    g.q_basis = sub.basis;
    g.closure = sub.report;
    Ok(g)
}

/// The enveloping coaction items, the E-projection equation and π(Q) = θ(L).
pub fn check_coglobalization(g: &CoactionGlobalization, window: &[Tok]) -> Result<Report> {
    let c = &g.partial;
    let m = &c.acting;
    let lb = c.l_basis();
    let qb = &g.q_basis;
    let mut report = Report::new("check_coglobalization", &format!("{}: dim Q = {}, A-window {}", g.name, qb.len(), window.len()));
    let q_span = Echelon::from_vectors(qb);

    report.absorb("(i) Δ", check_coassociativity(m, window));
    let mut sub = Tally::new("(i) ρ(Q)(1⊗1⊗a) ⊆ Q⊗A");
    let mut counit = Tally::new("(i) (ι⊗ε)ρ(v) = v");
    let mut closed = Tally::new("(i) Q closed under products");
    for v in qb {
        for a in window {
            let t = flatten3(&rho_q(m, v, a));
            for (b, part) in split_last(&t) {
                sub.case(q_span.contains(&part), || format!("v={}, a={a}, leg {b}", v.render()));
            }
            let eps = t.linear(|(x, p, q)| Tensor::term((x.clone(), p.clone()), m.counit_basis(q)));
            counit.case(eps == v.scale(&m.counit_basis(a)), || format!("v={}, a={a}", v.render()));
        }
        for w in qb {
            closed.case(q_span.contains(&g.mul(v, w)), || format!("{} · {}", v.render(), w.render()));
        }
    }
    report.push(sub);
    report.push(counit);
    report.push(closed);

    let thetas = g.theta_basis();
    let theta_span = Echelon::from_vectors(&thetas);
    let mut hom = Tally::new("(ii) θ(xy) = θ(x)θ(y)");
    for x in lb {
        for y in lb {
            let (l, r) = (g.theta(&c.l_mul(x, y)), g.mul(&g.theta(x), &g.theta(y)));
            hom.case(l == r, || format!("x={}, y={}", x.render(), y.render()));
        }
    }
    report.push(hom);
    let ker = crate::linalg::null_space(&thetas);
    report.fact("(ii) θ injective", ker.is_empty(), || format!("θ({}) = 0", combine(&ker[0], lb).render()));
    let mut inside = Tally::new("(ii) θ(L) ⊆ Q");
    for t in &thetas {
        inside.case(q_span.contains(t), || t.render());
    }
    report.push(inside);

    let mut ideal = Tally::new("(iii) θ(L)Q ⊆ θ(L)");
    for t in &thetas {
        for v in qb {
            let p = g.mul(t, v);
            ideal.case(theta_span.contains(&p), || format!("{} · {}", t.render(), v.render()));
        }
    }
    report.push(ideal);

    let mut pipi = Tally::new("(iv) π∘π = π");
    let mut image = Tally::new("(iv) π(Q) = θ(L)");
    let mut pimul = Tally::new("(iv) π(vw) = π(v)π(w)");
    let mut fix = Tally::new("(iv) π∘θ = θ");
    let pis: Vec<Tensor> = qb.iter().map(|v| g.pi(v)).collect();
    for (v, p) in qb.iter().zip(&pis) {
        pipi.case(g.pi(p) == *p, || v.render());
        for (w, pw) in qb.iter().zip(&pis) {
            let (l, r) = (g.pi(&g.mul(v, w)), g.mul(p, pw));
            pimul.case(l == r, || format!("v={}, w={}", v.render(), w.render()));
        }
    }
    image.case(Echelon::from_vectors(&pis).same_span(&theta_span), || {
        format!("rank π(Q) = {}, rank θ(L) = {}", crate::linalg::rank(&pis), theta_span.rank())
    });
    for (x, t) in lb.iter().zip(&thetas) {
        fix.case(g.pi(t) == *t, || x.render());
    }
    for t in [pipi, image, pimul, fix] {
        report.push(t);
    }

    let mut eproj = Tally::new("(iv) (π⊗ι)(ρ(π(y))(1⊗e)) = Φ(E)(π⊗ι)(ρ(y)(1⊗e))");
    for y in qb {
        let lhs = g.pi_id(&g.rho_cov(&g.pi(y), &g.e));
        let inner = g.pi_id(&g.rho_cov(y, &g.e));
        match g.phi_e(&inner) {
            Some(rhs) => {
                eproj.case(lhs == rhs, || format!("y={}: {} vs {}", y.render(), render3(&lhs), render3(&rhs)));
            }
            None => {
                eproj.case(false, || format!("y={}: (π⊗ι)(ρ(y)(1⊗e)) = {} leaves θ(L)⊗A", y.render(), render3(&inner)));
            }
        }
    }
    report.push(eproj);

    let mut compat = Tally::new("(iv) (θ⊗ι)(ρ̄(x)(1⊗e)) = (π⊗ι)(ρ(θ(x))(1⊗e))");
    for x in lb {
        let mut lhs = Tensor3::zero();
        for ((k, a), s) in c.rho_r_vec(x, &g.e).iter() {
            lhs.axpy(s, &join_last(&g.theta(&Vector::unit(k.clone())), a));
        }
        let rhs = g.pi_id(&g.rho_cov(&g.theta(x), &g.e));
        compat.case(lhs == rhs, || format!("x={}: {} vs {}", x.render(), render3(&lhs), render3(&rhs)));
    }
    report.push(compat);

    let m2 = m.clone();
    let g2 = g.clone();
    let gen = generated_subcomodule(m, &thetas, move |v, a| rho_q(&m2, v, a), move |s, t| g2.mul(s, t), &c.a_tokens(), qb.len().max(1) * 4)?;
    let mut generated = Tally::new("(v) Q generated by θ(L)");
    generated.case(Echelon::from_vectors(&gen.basis).same_span(&q_span), || {
        format!("generated dimension {} vs dim Q = {}", gen.basis.len(), qb.len())
    });
    report.push(generated);

    if let (Some(one_l), Some(_)) = (&c.target.unit, m.algebra().identity()) {
        let mut unital = Tally::new("π(v) = θ(1_L)v");
        let t1 = g.theta(one_l);
        for v in qb {
            let (l, r) = (g.pi(v), g.mul(&t1, v));
            unital.case(l == r, || format!("v={}: {} vs {}", v.render(), l.render(), r.render()));
        }
        report.push(unital);
    }
    Ok(report)
}

/// δ_1 for A_G and 1_G for 𝕜G.
pub fn canonical_e(m: &MhaInstance) -> Vector {
    Vector::unit(m.group().identity())
}
