//! A-projections π: R → R onto a subalgebra and the partial actions they induce.

use std::sync::Arc;

use crate::algebra::{CornerAlgebra, LinOp, Multiplier, SubAlgebra};
use crate::error::{Error, Result};
use crate::finsup::Vector;
use crate::linalg::Echelon;
use crate::mha::Pattern;
use crate::report::{Report, Tally};
use crate::token::Tok;

use super::{ModuleAlgebra, PartialActionData};

/// An algebra projection π of a module algebra onto the subalgebra `target`.
#[derive(Clone)]
pub struct AProjection {
    pub name: String,
    pub module: ModuleAlgebra,
    pub target: SubAlgebra,
    pi: LinOp,
}

impl std::fmt::Debug for AProjection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AProjection").field("name", &self.name).finish()
    }
}

impl AProjection {
    pub fn new(name: &str, module: &ModuleAlgebra, target: SubAlgebra, pi: impl Fn(&Vector) -> Vector + Send + Sync + 'static) -> Self {
        AProjection { name: name.to_string(), module: module.clone(), target, pi: Arc::new(pi) }
    }

    /// y ↦ fy onto fR, for any idempotent f; nothing about f is checked here.
    pub fn left_multiplication(module: &ModuleAlgebra, f: &Vector, name: &str) -> Result<Self> {
        let alg = module.algebra.clone();
        let basis = alg
            .basis()
            .ok_or_else(|| Error::Capability(format!("{} has no finite basis", alg.name())))?;
        let images: Vec<Vector> = basis.iter().map(|b| alg.multiply(f, &Vector::unit(b.clone()))).collect();
        let target = SubAlgebra {
            name: format!("{}·{}", name, alg.name()),
            ambient: alg.clone(),
            basis: Echelon::from_vectors(&images).basis(),
            unit: Some(f.clone()),
        };
        let f = f.clone();
        Ok(Self::new(name, module, target, move |y| alg.multiply(&f, y)))
    }

    /// y ↦ fy for a central idempotent f.
    pub fn central_idempotent(module: &ModuleAlgebra, f: &Vector, name: &str) -> Result<Self> {
        let corner = CornerAlgebra::new(&module.algebra, f, name)?;
        let mut p = Self::left_multiplication(module, f, name)?;
        p.target = corner.subalgebra();
        Ok(p)
    }

    pub fn identity(module: &ModuleAlgebra) -> Self {
        Self::new("id", module, SubAlgebra::full(&module.algebra, 2), |y| y.clone())
    }

    pub fn apply(&self, x: &Vector) -> Vector {
        (self.pi)(x)
    }

    fn act(&self, a: &Tok, x: &Vector) -> Vector {
        self.module.act_basis(a, x)
    }
}

/// Idempotence, image, multiplicativity and the A-projection identities over the window.
pub fn check_a_projection(p: &AProjection, window: &[Tok], symmetric: bool) -> Report {
    let alg = &p.module.algebra;
    let r_window = alg.window(2);
    let lb = &p.target.basis;
    let mut report = Report::new(
        "check_a_projection",
        &format!("{} on {}: {} A-basis elements, {} algebra basis elements", p.name, alg.name(), window.len(), r_window.len()),
    );
    let l_span = Echelon::from_vectors(lb);
    let mut idem = Tally::new("π∘π = π");
    let mut image = Tally::new("Im π ⊆ L");
    for r in &r_window {
        let pr = p.apply(r);
        idem.case(p.apply(&pr) == pr, || r.render());
        image.case(l_span.contains(&pr), || format!("π({}) = {}", r.render(), pr.render()));
    }
    let mut fixes = Tally::new("π(x) = x on L");
    for x in lb {
        fixes.case(p.apply(x) == *x, || x.render());
    }
    let mut mult = Tally::new("π(xy) = π(x)π(y)");
    for x in &r_window {
        for y in &r_window {
            let l = p.apply(&alg.multiply(x, y));
            let r = alg.multiply(&p.apply(x), &p.apply(y));
            mult.case(l == r, || format!("x={}, y={}", x.render(), y.render()));
        }
    }
    report.push(idem);
    report.push(image);
    report.push(fixes);
    report.push(mult);
    let mut ident = Tally::new("π(a▷(x(b▷y))) = π(a▷(xπ(b▷y)))");
    let mut sym = Tally::new("π(a▷((b▷x)y)) = π(a▷(π(b▷x)y))");
    for a in window {
        for b in window {
            for x in lb {
                for y in lb {
                    let by = p.act(b, y);
                    let l = p.apply(&p.act(a, &alg.multiply(x, &by)));
                    let r = p.apply(&p.act(a, &alg.multiply(x, &p.apply(&by))));
                    ident.case(l == r, || format!("a={a}, b={b}, x={}, y={}", x.render(), y.render()));
                    if symmetric {
                        let bx = p.act(b, x);
                        let l = p.apply(&p.act(a, &alg.multiply(&bx, y)));
                        let r = p.apply(&p.act(a, &alg.multiply(&p.apply(&bx), y)));
                        sym.case(l == r, || {
                            format!("a={a}, b={b}, x={}, y={}: {} vs {}", x.render(), y.render(), l.render(), r.render())
                        });
                    }
                }
            }
        }
    }
    report.push(ident);
    if symmetric {
        report.push(sym);
    }
    report
}

/// a·x = π(a▷x) on L, with 𝔢(a) given on y = e·y (e▷y = y) by
/// y ↦ π(a₁▷π(S(a₂)e▷y)) on the left and y ↦ π(a₂▷π(S⁻¹(a₁)e▷y)) on the right.
pub fn induce_from_projection(p: &AProjection, window: &[Tok]) -> Result<PartialActionData> {
    let check = check_a_projection(p, window, true);
    if !check.passed() {
        return Err(Error::Rejected(format!("{} is not a symmetric A-projection: {}", p.name, check.summary())));
    }
    let (p1, p2) = (p.clone(), p.clone());
    let validity = p.target.basis.clone();
    let e_map = move |a: &Tok| -> Multiplier {
        let (pl, pr) = (p2.clone(), p2.clone());
        let (al, ar) = (a.clone(), a.clone());
        let side = move |proj: &AProjection, pattern: Pattern, a: &Tok, y: &Vector| -> Vector {
            y.linear(|k| {
                let yk = Vector::unit(k.clone());
                let e = proj.module.unit_for(std::slice::from_ref(&yk));
                let cov = proj
                    .module
                    .acting
                    .sweedler_cov(pattern, &Vector::unit(a.clone()), &e)
                    .expect("regular acting instance");
                cov.linear(|(s, t)| proj.apply(&proj.act(s, &proj.apply(&proj.act(t, &yk)))))
            })
        };
        Multiplier::new(
            &format!("𝔢({a})"),
            move |y| side(&pl, Pattern::IS, &al, y),
            move |y| side(&pr, Pattern::SInv, &ar, y),
            validity.clone(),
        )
    };
    if !p.module.acting.is_regular() {
        return Err(Error::Capability(format!("{} is not regular", p.module.acting.name())));
    }
    Ok(PartialActionData::new(
        &format!("induced:{}:{}", p.module.name, p.name),
        &p.module.acting,
        p.target.clone(),
        move |a, x| p1.apply(&p1.act(a, x)),
        e_map,
    ))
}
