//! Algebras with a token basis, local units, nondegeneracy and multipliers.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::finsup::{FinSup, Vector};
use crate::group::GroupSpec;
use crate::linalg::{combine, joint_null_space, Echelon};
use crate::report::{Report, Tally};
use crate::scalar::{self, Scalar};
use crate::token::Tok;

type BasisProduct = Arc<dyn Fn(&Tok, &Tok) -> Vector + Send + Sync>;
pub type LinOp = Arc<dyn Fn(&Vector) -> Vector + Send + Sync>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    /// Pointwise product of Kronecker functions: δ_a δ_b = [a=b] δ_a.
    Pointwise,
    GroupAlgebra,
    Table,
}

/// An algebra given by a product rule on basis pairs.
#[derive(Clone)]
pub struct Algebra {
    name: String,
    kind: AlgebraKind,
    basis: Option<Vec<Tok>>,
    mul: BasisProduct,
    identity: Option<Vector>,
    group: Option<GroupSpec>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra").field("name", &self.name).finish()
    }
}

impl Algebra {
    /// Finitely supported functions on `g` with pointwise product.
    pub fn functions(g: &GroupSpec) -> Self {
        let identity = g.elements().map(Vector::indicator);
        Algebra {
            name: format!("functions:{}", g.name()),
            kind: AlgebraKind::Pointwise,
            basis: g.elements().map(<[Tok]>::to_vec),
            mul: Arc::new(|a, b| if a == b { Vector::unit(a.clone()) } else { Vector::zero() }),
            identity,
            group: Some(g.clone()),
        }
    }

    /// The group algebra 𝕜G.
    pub fn group_algebra(g: &GroupSpec) -> Self {
        let gg = g.clone();
        Algebra {
            name: format!("groupalg:{}", g.name()),
            kind: AlgebraKind::GroupAlgebra,
            basis: g.elements().map(<[Tok]>::to_vec),
            mul: Arc::new(move |a, b| Vector::unit(gg.mul(a, b))),
            identity: Some(Vector::unit(g.identity())),
            group: Some(g.clone()),
        }
    }

    /// A finite-dimensional algebra from structure constants; missing products are zero.
    pub fn structure_constants(
        name: &str,
        basis: Vec<Tok>,
        table: BTreeMap<(Tok, Tok), Vector>,
        identity: Option<Vector>,
    ) -> Self {
        Algebra {
            name: name.to_string(),
            kind: AlgebraKind::Table,
            basis: Some(basis),
            mul: Arc::new(move |a, b| table.get(&(a.clone(), b.clone())).cloned().unwrap_or_default()),
            identity,
            group: None,
        }
    }

    /// An algebra whose product is identically zero.
    pub fn zero_product(n: usize) -> Self {
        let basis = (0..n).map(|i| Tok::Name(format!("z{i}"))).collect();
        Self::structure_constants(&format!("zero:{n}"), basis, BTreeMap::new(), None)
    }

    /// Parses `functions:<group>`, `groupalg:<group>` or `structconsts:<table>`.
    ///
    /// Inline tables look like `a,b|a*a=a;a*b=b;b*a=b;b*b=a`, with terms such as `2/3*a + -1*b`.
    pub fn parse(spec: &str) -> Result<Self> {
        if let Some(g) = spec.strip_prefix("functions:") {
            return Ok(Self::functions(&GroupSpec::parse(g)?));
        }
        if let Some(g) = spec.strip_prefix("groupalg:") {
            return Ok(Self::group_algebra(&GroupSpec::parse(g)?));
        }
        if let Some(t) = spec.strip_prefix("structconsts:") {
            return parse_table(spec, t);
        }
        Err(Error::Parse(format!("unknown algebra '{spec}'")))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn basis(&self) -> Option<&[Tok]> {
        self.basis.as_deref()
    }

    pub fn group(&self) -> Option<&GroupSpec> {
        self.group.as_ref()
    }

    pub fn identity(&self) -> Option<&Vector> {
        self.identity.as_ref()
    }

    /// Basis vectors within a window: the whole basis when finite.
    pub fn window(&self, n: usize) -> Vec<Vector> {
        match (&self.basis, &self.group) {
            (Some(b), _) => b.iter().cloned().map(Vector::unit).collect(),
            (None, Some(g)) => g.window(n).into_iter().map(Vector::unit).collect(),
            (None, None) => Vec::new(),
        }
    }

    pub fn mul_basis(&self, a: &Tok, b: &Tok) -> Vector {
        (self.mul)(a, b)
    }

    /// Bilinear extension of the basis product.
    pub fn multiply(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (a, c) in x.iter() {
            for (b, d) in y.iter() {
                out.axpy(&(c * d), &self.mul_basis(a, b));
            }
        }
        out
    }

    pub fn multiply3(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        self.multiply(&self.multiply(x, y), z)
    }
}

fn parse_terms(s: &str) -> Result<Vector> {
    let s = s.trim();
    if s == "0" || s.is_empty() {
        return Ok(Vector::zero());
    }
    let mut v = Vector::zero();
    for term in s.split('+') {
        let term = term.trim();
        let (c, k) = match term.split_once('*') {
            Some((c, k)) => (parse_scalar(c.trim())?, k.trim()),
            None => (Scalar::one(), term),
        };
        if k.is_empty() {
            return Err(Error::Parse(format!("empty basis name in '{term}'")));
        }
        v.add_term(Tok::name(k), c);
    }
    Ok(v)
}

pub(crate) fn parse_scalar(s: &str) -> Result<Scalar> {
    let bad = || Error::Parse(format!("bad scalar '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(scalar::q(n, d))
        }
        None => Ok(scalar::int(s.trim().parse().map_err(|_| bad())?)),
    }
}

fn parse_table(full: &str, t: &str) -> Result<Algebra> {
    let (names, entries) = t
        .split_once('|')
        .ok_or_else(|| Error::Parse(format!("table '{full}' needs 'basis|products'")))?;
    let basis: Vec<Tok> = names.split(',').map(|n| Tok::name(n.trim())).collect();
    let mut table = BTreeMap::new();
    for e in entries.split(';').map(str::trim).filter(|e| !e.is_empty()) {
        let (lhs, rhs) = e.split_once('=').ok_or_else(|| Error::Parse(format!("bad entry '{e}'")))?;
        let (a, b) = lhs.split_once('*').ok_or_else(|| Error::Parse(format!("bad product '{lhs}'")))?;
        let (a, b) = (Tok::name(a.trim()), Tok::name(b.trim()));
        let v = parse_terms(rhs)?;
        for k in [&a, &b].into_iter().chain(v.keys()) {
            if !basis.contains(k) {
                return Err(Error::Parse(format!("unknown basis element '{k}' in '{e}'")));
            }
        }
        table.insert((a, b), v);
    }
    Ok(Algebra::structure_constants(full, basis, table, None))
}

/// A finite-dimensional subalgebra of an ambient algebra, given by a spanning basis.
#[derive(Clone, Debug)]
pub struct SubAlgebra {
    pub name: String,
    pub ambient: Algebra,
    pub basis: Vec<Vector>,
    /// A two-sided identity, when the subalgebra has one.
    pub unit: Option<Vector>,
}

impl SubAlgebra {
    /// The whole algebra over a finite window of basis vectors.
    pub fn full(alg: &Algebra, window: usize) -> Self {
        SubAlgebra {
            name: alg.name().to_string(),
            ambient: alg.clone(),
            basis: alg.window(window),
            unit: alg.identity().cloned(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn multiply(&self, x: &Vector, y: &Vector) -> Vector {
        self.ambient.multiply(x, y)
    }

    pub fn echelon(&self) -> Echelon<Tok> {
        Echelon::from_vectors(&self.basis)
    }

    pub fn contains(&self, x: &Vector) -> bool {
        self.echelon().contains(x)
    }
}

/// `fR` for a central idempotent `f` of a finite-dimensional algebra `R`.
#[derive(Clone, Debug)]
pub struct CornerAlgebra {
    pub ambient: Algebra,
    pub idempotent: Vector,
    pub idempotent_name: String,
    pub basis: Vec<Vector>,
}

impl CornerAlgebra {
    pub fn new(ambient: &Algebra, f: &Vector, idem_name: &str) -> Result<Self> {
        let basis = ambient
            .basis()
            .ok_or_else(|| Error::Capability("corners need a finite ambient basis".into()))?;
        if ambient.multiply(f, f) != *f {
            return Err(Error::Structural(format!("{} is not idempotent", f.render())));
        }
        for b in basis {
            let bv = Vector::unit(b.clone());
            if ambient.multiply(f, &bv) != ambient.multiply(&bv, f) {
                return Err(Error::Structural(format!("{} does not commute with {b}", f.render())));
            }
        }
        let images: Vec<Vector> = basis.iter().map(|b| ambient.multiply(f, &Vector::unit(b.clone()))).collect();
        Ok(CornerAlgebra {
            ambient: ambient.clone(),
            idempotent: f.clone(),
            idempotent_name: idem_name.to_string(),
            basis: Echelon::from_vectors(&images).basis(),
        })
    }

    pub fn name(&self) -> String {
        format!("corner:{}:{}", self.ambient.name(), self.idempotent_name)
    }

    pub fn subalgebra(&self) -> SubAlgebra {
        SubAlgebra {
            name: self.name(),
            ambient: self.ambient.clone(),
            basis: self.basis.clone(),
            unit: Some(self.idempotent.clone()),
        }
    }
}

/// Named central idempotents of group algebras of symmetric groups.
///
/// `fN` averages over the alternating subgroup, `ftriv` over the whole group,
/// `fsign` is the sign idempotent and `fnotsign` is `1 - fsign`.
pub fn named_idempotent(alg: &Algebra, name: &str) -> Result<Vector> {
    let g = alg
        .group()
        .filter(|_| alg.kind() == AlgebraKind::GroupAlgebra)
        .ok_or_else(|| Error::Parse(format!("idempotent '{name}' needs a group algebra")))?;
    let els = g.elements().ok_or_else(|| Error::Capability("idempotents need a finite group".into()))?;
    let n = els.len() as i64;
    let sign_part = || -> Vector {
        Vector::from_terms(els.iter().map(|h| (h.clone(), scalar::q(crate::group::perm_sign(h), n))))
    };
    match name {
        "one" => Ok(Vector::unit(g.identity())),
        "fN" => Ok(averaging_idempotent(&g.alternating_subgroup())),
        "ftriv" => Ok(averaging_idempotent(els)),
        "fsign" => Ok(sign_part()),
        "fnotsign" => Ok(&Vector::unit(g.identity()) - &sign_part()),
        _ => Err(Error::Parse(format!("unknown idempotent '{name}'"))),
    }
}

/// `(1/|N|) Σ_{n∈N} n`.
pub fn averaging_idempotent(n: &[Tok]) -> Vector {
    let c = scalar::q(1, n.len() as i64);
    Vector::from_terms(n.iter().map(|h| (h.clone(), c.clone())))
}

/// Parses `corner:<algebra>:<idempotent-name>`.
pub fn parse_corner(spec: &str) -> Result<CornerAlgebra> {
    let rest = spec
        .strip_prefix("corner:")
        .ok_or_else(|| Error::Parse(format!("not a corner name: '{spec}'")))?;
    let (alg, idem) = rest
        .rsplit_once(':')
        .ok_or_else(|| Error::Parse(format!("corner '{spec}' needs an idempotent name")))?;
    let ambient = Algebra::parse(alg)?;
    let f = named_idempotent(&ambient, idem)?;
    CornerAlgebra::new(&ambient, &f, idem)
}

/// An element `e` with `e x = x = x e` for every listed `x`.
pub fn local_unit(a: &Algebra, elems: &[Vector]) -> Result<Vector> {
    if elems.is_empty() {
        return Err(Error::Precondition("local_unit needs at least one element".into()));
    }
    if a.kind() == AlgebraKind::Pointwise {
        let keys: std::collections::BTreeSet<Tok> = elems.iter().flat_map(|x| x.support()).collect();
        return Ok(Vector::indicator(&keys));
    }
    if let Some(one) = a.identity() {
        return Ok(one.clone());
    }
    let basis = a
        .basis()
        .ok_or_else(|| Error::Capability(format!("{} has no finite basis to solve over", a.name())))?;
    // Unknown e = Σ c_b b; each b contributes (b x_i, x_i b)_i.
    let tag = |i: usize, side: usize, v: &Vector| -> FinSup<(usize, Tok)> {
        v.map_keys(|k| (2 * i + side, k.clone()))
    };
    let mut cols = Echelon::new();
    for b in basis {
        let bv = Vector::unit(b.clone());
        let mut col = FinSup::zero();
        for (i, x) in elems.iter().enumerate() {
            col = col + tag(i, 0, &a.multiply(&bv, x)) + tag(i, 1, &a.multiply(x, &bv));
        }
        cols.insert(&col);
    }
    let mut target = FinSup::zero();
    for (i, x) in elems.iter().enumerate() {
        target = target + tag(i, 0, x) + tag(i, 1, x);
    }
    let c = cols
        .solve(&target)
        .ok_or_else(|| Error::NoSolution(format!("no two-sided local unit in {}", a.name())))?;
    let units: Vec<Vector> = basis.iter().cloned().map(Vector::unit).collect();
    Ok(combine(&c, &units))
}

/// Null spaces of `x ↦ (x b)_b` and `b ↦ (a b)_a` on the span of `window`.
pub fn check_nondegenerate(a: &Algebra, window: &[Vector]) -> Report {
    let basis = Echelon::from_vectors(window).basis();
    let mut report = Report::new("check_nondegenerate", &format!("{} on a window of dimension {}", a.name(), basis.len()));
    for (name, left) in [("left", true), ("right", false)] {
        let cols: Vec<Vec<Vector>> = basis
            .iter()
            .map(|x| {
                basis
                    .iter()
                    .map(|b| if left { a.multiply(x, b) } else { a.multiply(b, x) })
                    .collect()
            })
            .collect();
        let kernel = joint_null_space(&cols);
        let mut t = Tally::new(name);
        t.case(kernel.is_empty(), || combine(&kernel[0], &basis).render());
        report.push(t);
    }
    report
}

/// Decides `x ∈ span(window)·x` for each `x` in the window.
pub fn check_s_unital_left(a: &Algebra, window: &[Vector]) -> Report {
    let mut report = Report::new("check_s_unital_left", &format!("{} on {} elements", a.name(), window.len()));
    let mut t = Tally::new("x in Rx");
    for x in window {
        let span = Echelon::from_vectors(window.iter().map(|w| a.multiply(w, x)).collect::<Vec<_>>().iter());
        t.case(span.contains(x), || x.render());
    }
    report.push(t);
    report
}

/// A linear map tabulated on a finite window of basis tokens.
#[derive(Clone, Debug, Default)]
pub struct LinearMapTable {
    table: BTreeMap<Tok, Vector>,
}

impl LinearMapTable {
    pub fn new(table: BTreeMap<Tok, Vector>) -> Self {
        LinearMapTable { table }
    }

    pub fn from_fn<F: Fn(&Tok) -> Vector>(window: &[Tok], f: F) -> Self {
        LinearMapTable { table: window.iter().map(|k| (k.clone(), f(k))).collect() }
    }

    pub fn window(&self) -> impl Iterator<Item = &Tok> {
        self.table.keys()
    }

    pub fn eval(&self, k: &Tok) -> Result<Vector> {
        self.table.get(k).cloned().ok_or_else(|| Error::Window(format!("{k} is not in the declared window")))
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        let mut out = Vector::zero();
        for (k, c) in x.iter() {
            out.axpy(c, &self.eval(k)?);
        }
        Ok(out)
    }
}

/// A multiplier (U, V) with U(a)b = aV(b), valid on the span of `window`.
#[derive(Clone)]
pub struct Multiplier {
    pub name: String,
    left: LinOp,
    right: LinOp,
    pub window: Vec<Vector>,
}

impl fmt::Debug for Multiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Multiplier").field("name", &self.name).finish()
    }
}

impl Multiplier {
    pub fn new(
        name: &str,
        left: impl Fn(&Vector) -> Vector + Send + Sync + 'static,
        right: impl Fn(&Vector) -> Vector + Send + Sync + 'static,
        window: Vec<Vector>,
    ) -> Self {
        Multiplier { name: name.to_string(), left: Arc::new(left), right: Arc::new(right), window }
    }

    pub fn from_ops(name: &str, left: LinOp, right: LinOp, window: Vec<Vector>) -> Self {
        Multiplier { name: name.to_string(), left, right, window }
    }

    /// Left and right multiplication by `z`.
    pub fn from_element(alg: &Algebra, z: &Vector, window: Vec<Vector>) -> Self {
        let (a1, a2) = (alg.clone(), alg.clone());
        let (z1, z2) = (z.clone(), z.clone());
        Multiplier::new(
            &format!("mult({})", z.render()),
            move |x| a1.multiply(&z1, x),
            move |x| a2.multiply(x, &z2),
            window,
        )
    }

    pub fn identity(window: Vec<Vector>) -> Self {
        Multiplier::new("1", |x| x.clone(), |x| x.clone(), window)
    }

    /// `c·1`.
    pub fn scalar(c: Scalar, window: Vec<Vector>) -> Self {
        let d = c.clone();
        Multiplier::new(&format!("{}·1", scalar::render(&c)), move |x| x.scale(&c), move |x| x.scale(&d), window)
    }

    pub fn left(&self, x: &Vector) -> Vector {
        (self.left)(x)
    }

    pub fn right(&self, x: &Vector) -> Vector {
        (self.right)(x)
    }

    pub fn left_op(&self) -> LinOp {
        self.left.clone()
    }

    pub fn right_op(&self) -> LinOp {
        self.right.clone()
    }

    /// Both operators agree with `other` on every window element.
    pub fn agrees_on(&self, other: &Multiplier, window: &[Vector]) -> bool {
        window.iter().all(|x| self.left(x) == other.left(x) && self.right(x) == other.right(x))
    }

    pub fn with_right(&self, right: impl Fn(&Vector) -> Vector + Send + Sync + 'static) -> Self {
        Multiplier { right: Arc::new(right), ..self.clone() }
    }

    pub fn with_left(&self, left: impl Fn(&Vector) -> Vector + Send + Sync + 'static) -> Self {
        Multiplier { left: Arc::new(left), ..self.clone() }
    }
}

/// Verifies U(a)b = aV(b), U(ab) = U(a)b and V(ab) = aV(b) over the window.
pub fn multiplier_check(alg: &Algebra, m: &Multiplier, window: &[Vector]) -> Result<Report> {
    let valid = Echelon::from_vectors(&m.window);
    if let Some(x) = window.iter().find(|x| !valid.contains(x)) {
        return Err(Error::Window(format!("{} lies outside the validity window of {}", x.render(), m.name)));
    }
    let mut report = Report::new("multiplier_check", &format!("{} on {} elements", m.name, window.len()));
    let mut compat = Tally::new("U(a)b = aV(b)");
    let mut lhom = Tally::new("U(ab) = U(a)b");
    let mut rhom = Tally::new("V(ab) = aV(b)");
    for a in window {
        for b in window {
            let l = alg.multiply(&m.left(a), b);
            let r = alg.multiply(a, &m.right(b));
            compat.case(l == r, || format!("a={}, b={}: {} vs {}", a.render(), b.render(), l.render(), r.render()));
            let ab = alg.multiply(a, b);
            lhom.case(m.left(&ab) == l, || format!("a={}, b={}", a.render(), b.render()));
            rhom.case(m.right(&ab) == r, || format!("a={}, b={}", a.render(), b.render()));
        }
    }
    report.push(compat);
    report.push(lhom);
    report.push(rhom);
    Ok(report)
}

/// (U,V)(U′,V′) = (U∘U′, V′∘V).
pub fn multiplier_product(m1: &Multiplier, m2: &Multiplier) -> Result<Multiplier> {
    let (e1, e2) = (Echelon::from_vectors(&m1.window), Echelon::from_vectors(&m2.window));
    if !e1.same_span(&e2) {
        return Err(Error::Structural(format!("validity windows of {} and {} differ", m1.name, m2.name)));
    }
    let (u1, u2, v1, v2) = (m1.left.clone(), m2.left.clone(), m1.right.clone(), m2.right.clone());
    Ok(Multiplier::new(
        &format!("{}·{}", m1.name, m2.name),
        move |x| u1(&u2(x)),
        move |x| v2(&v1(x)),
        m1.window.clone(),
    ))
}

pub fn unit_vectors(keys: &[Tok]) -> Vec<Vector> {
    keys.iter().cloned().map(Vector::unit).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};

    fn c2() -> GroupSpec {
        GroupSpec::cyclic(2)
    }

    fn d(k: i64) -> Vector {
        Vector::unit(Tok::Int(k))
    }

    #[test]
    fn pointwise_products() {
        let a = Algebra::functions(&c2());
        assert_eq!(a.multiply(&d(0), &d(0)), d(0));
        assert!(a.multiply(&d(0), &d(1)).is_zero());
    }

    #[test]
    fn group_law_products() {
        let a = Algebra::group_algebra(&c2());
        assert_eq!(a.multiply(&d(1), &d(1)), d(0));
    }

    #[test]
    fn f_n_is_idempotent() {
        let a = Algebra::group_algebra(&GroupSpec::symmetric(3));
        let f = named_idempotent(&a, "fN").unwrap();
        assert_eq!(a.multiply(&f, &f), f);
        let c = CornerAlgebra::new(&a, &f, "fN").unwrap();
        assert_eq!(c.basis.len(), 2);
    }

    #[test]
    fn local_units() {
        let c4 = Algebra::functions(&GroupSpec::cyclic(4));
        assert_eq!(local_unit(&c4, &[d(1), d(2)]).unwrap(), &d(1) + &d(2));
        let z = Algebra::functions(&GroupSpec::integers());
        assert_eq!(local_unit(&z, &[&d(0) - &d(3)]).unwrap(), &d(0) + &d(3));
        let kg = Algebra::group_algebra(&c2());
        assert_eq!(local_unit(&kg, &[d(1)]).unwrap(), d(0));
    }

    #[test]
    fn local_unit_by_linear_solve() {
        // 2x2 upper triangular matrices without declared identity.
        let t = "structconsts:e11,e12,e22|e11*e11=e11;e11*e12=e12;e12*e22=e12;e22*e22=e22";
        let a = Algebra::parse(t).unwrap();
        let x = Vector::unit(Tok::name("e12"));
        let e = local_unit(&a, &[x.clone()]).unwrap();
        assert_eq!(a.multiply(&e, &x), x);
        assert_eq!(a.multiply(&x, &e), x);
        let z = Algebra::zero_product(1);
        assert!(matches!(local_unit(&z, &[Vector::unit(Tok::name("z0"))]), Err(Error::NoSolution(_))));
    }

    #[test]
    fn nondegeneracy() {
        let s3 = Algebra::functions(&GroupSpec::symmetric(3));
        assert!(check_nondegenerate(&s3, &s3.window(0)).passed());
        let z = Algebra::zero_product(1);
        assert!(!check_nondegenerate(&z, &z.window(0)).passed());
        let kg = Algebra::group_algebra(&c2());
        assert!(check_nondegenerate(&kg, &kg.window(0)).passed());
    }

    #[test]
    fn s_unitality() {
        let kg = Algebra::group_algebra(&c2());
        assert!(check_s_unital_left(&kg, &kg.window(0)).passed());
        let c = parse_corner("corner:groupalg:symmetric:3:fN").unwrap();
        assert!(check_s_unital_left(&c.ambient, &c.basis).passed());
        let z = Algebra::zero_product(1);
        assert!(!check_s_unital_left(&z, &z.window(0)).passed());
    }

    #[test]
    fn multipliers() {
        let a = Algebra::functions(&GroupSpec::cyclic(4));
        let w = a.window(0);
        let z = &d(1).scale(&int(2)) + &d(3);
        let m = Multiplier::from_element(&a, &z, w.clone());
        assert!(multiplier_check(&a, &m, &w).unwrap().passed());
        assert!(multiplier_check(&a, &Multiplier::identity(w.clone()), &w).unwrap().passed());
        let bad = Multiplier::from_element(&a, &z, w.clone()).with_right({
            let a = a.clone();
            move |x| a.multiply(x, &d(0))
        });
        let r = multiplier_check(&a, &bad, &w).unwrap();
        assert!(!r.passed());
        assert!(r.item("U(a)b = aV(b)").unwrap().witness.is_some());
    }

    #[test]
    fn multiplier_products() {
        let a = Algebra::group_algebra(&GroupSpec::symmetric(3));
        let w = a.window(0);
        let x = &Vector::unit(Tok::cycles(3, &[&[1, 2]])) + &Vector::unit(Tok::cycles(3, &[&[1, 2, 3]])).scale(&q(1, 2));
        let y = Vector::unit(Tok::cycles(3, &[&[1, 3]]));
        let mx = Multiplier::from_element(&a, &x, w.clone());
        let my = Multiplier::from_element(&a, &y, w.clone());
        let p = multiplier_product(&mx, &my).unwrap();
        assert!(p.agrees_on(&Multiplier::from_element(&a, &a.multiply(&x, &y), w.clone()), &w));
        let id = multiplier_product(&mx, &Multiplier::identity(w.clone())).unwrap();
        assert!(id.agrees_on(&mx, &w));
        let f = named_idempotent(&a, "fN").unwrap();
        let mf = Multiplier::from_element(&a, &f, w.clone());
        assert!(multiplier_product(&mf, &mf).unwrap().agrees_on(&mf, &w));
        let short = Multiplier::identity(w[..2].to_vec());
        assert!(matches!(multiplier_product(&mx, &short), Err(Error::Structural(_))));
    }

    #[test]
    fn linear_map_table_window() {
        let t = LinearMapTable::from_fn(&[Tok::Int(0)], |k| Vector::unit(k.clone()));
        assert_eq!(t.eval(&Tok::Int(0)).unwrap(), d(0));
        assert!(matches!(t.eval(&Tok::Int(1)), Err(Error::Window(_))));
    }

    #[test]
    fn table_parse_errors() {
        assert!(Algebra::parse("structconsts:a|a*b=a").is_err());
        assert!(Algebra::parse("structconsts:a").is_err());
        assert!(Algebra::parse("nope:1").is_err());
    }
}
