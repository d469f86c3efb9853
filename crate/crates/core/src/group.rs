//! Computable groups with opaque element tokens.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::report::{Report, Tally};
use crate::token::Tok;

type BinOp = Arc<dyn Fn(&Tok, &Tok) -> Tok + Send + Sync>;
type UnOp = Arc<dyn Fn(&Tok) -> Tok + Send + Sync>;

/// A group given by its operations, with an optional finite enumeration.
#[derive(Clone)]
pub struct GroupSpec {
    name: String,
    identity: Tok,
    mul: BinOp,
    inv: UnOp,
    elements: Option<Vec<Tok>>,
}

impl fmt::Debug for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupSpec").field("name", &self.name).finish()
    }
}

fn compose(p: &[u8], q: &[u8]) -> Vec<u8> {
    // (pq)(i) = p(q(i))
    q.iter().map(|&i| p[i as usize]).collect()
}

fn invert(p: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; p.len()];
    for (i, &x) in p.iter().enumerate() {
        out[x as usize] = i as u8;
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    fn rec(prefix: &mut Vec<u8>, left: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let x = left.remove(i);
            prefix.push(x);
            rec(prefix, left, out);
            prefix.pop();
            left.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (0..n as u8).collect(), &mut out);
    out
}

fn as_int(t: &Tok) -> i64 {
    match t {
        Tok::Int(k) => *k,
        other => panic!("expected an integer token, got {other}"),
    }
}

fn as_perm(t: &Tok) -> &[u8] {
    match t {
        Tok::Perm(p) => p,
        other => panic!("expected a permutation token, got {other}"),
    }
}

impl GroupSpec {
    /// A group from arbitrary operations; used for custom and deliberately broken groups.
    pub fn custom(
        name: &str,
        identity: Tok,
        mul: impl Fn(&Tok, &Tok) -> Tok + Send + Sync + 'static,
        inv: impl Fn(&Tok) -> Tok + Send + Sync + 'static,
        elements: Option<Vec<Tok>>,
    ) -> Self {
        GroupSpec { name: name.to_string(), identity, mul: Arc::new(mul), inv: Arc::new(inv), elements }
    }

    /// The cyclic group of order `n`, elements `0..n` under addition.
    pub fn cyclic(n: u32) -> Self {
        assert!(n >= 1, "cyclic group needs n >= 1");
        let m = n as i64;
        GroupSpec {
            name: format!("cyclic:{n}"),
            identity: Tok::Int(0),
            mul: Arc::new(move |a, b| Tok::Int((as_int(a) + as_int(b)).rem_euclid(m))),
            inv: Arc::new(move |a| Tok::Int((-as_int(a)).rem_euclid(m))),
            elements: Some((0..m).map(Tok::Int).collect()),
        }
    }

    /// The symmetric group on `n` letters; products compose right to left.
    pub fn symmetric(n: u8) -> Self {
        assert!((1..=6).contains(&n), "symmetric group supported for 1 <= n <= 6");
        GroupSpec {
            name: format!("symmetric:{n}"),
            identity: Tok::Perm((0..n).collect()),
            mul: Arc::new(|a, b| Tok::Perm(compose(as_perm(a), as_perm(b)))),
            inv: Arc::new(|a| Tok::Perm(invert(as_perm(a)))),
            elements: Some(permutations(n as usize).into_iter().map(Tok::Perm).collect()),
        }
    }

    /// The additive integers. Not enumerable; checks need explicit windows.
    pub fn integers() -> Self {
        GroupSpec {
            name: "integers".to_string(),
            identity: Tok::Int(0),
            mul: Arc::new(|a, b| Tok::Int(as_int(a) + as_int(b))),
            inv: Arc::new(|a| Tok::Int(-as_int(a))),
            elements: None,
        }
    }

    /// Parses `cyclic:n`, `symmetric:n` or `integers`.
    pub fn parse(spec: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown group '{spec}'"));
        let mut it = spec.splitn(2, ':');
        match (it.next(), it.next()) {
            (Some("integers"), None) => Ok(Self::integers()),
            (Some("cyclic"), Some(n)) => {
                let n: u32 = n.parse().map_err(|_| bad())?;
                if n == 0 {
                    return Err(bad());
                }
                Ok(Self::cyclic(n))
            }
            (Some("symmetric"), Some(n)) => {
                let n: u8 = n.parse().map_err(|_| bad())?;
                if !(1..=6).contains(&n) {
                    return Err(bad());
                }
                Ok(Self::symmetric(n))
            }
            _ => Err(bad()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn identity(&self) -> Tok {
        self.identity.clone()
    }

    pub fn mul(&self, a: &Tok, b: &Tok) -> Tok {
        (self.mul)(a, b)
    }

    pub fn inv(&self, a: &Tok) -> Tok {
        (self.inv)(a)
    }

    pub fn is_identity(&self, a: &Tok) -> bool {
        *a == self.identity
    }

    pub fn is_finite(&self) -> bool {
        self.elements.is_some()
    }

    pub fn elements(&self) -> Option<&[Tok]> {
        self.elements.as_deref()
    }

    pub fn order(&self) -> Option<usize> {
        self.elements.as_ref().map(Vec::len)
    }

    /// The full enumeration for finite groups, `{-n..=n}` for the integers.
    pub fn window(&self, n: usize) -> Vec<Tok> {
        match &self.elements {
            Some(els) => els.clone(),
            None => (-(n as i64)..=n as i64).map(Tok::Int).collect(),
        }
    }

    /// Closes a finite set under products and inverses.
    pub fn generated_subgroup(&self, gens: &[Tok]) -> Vec<Tok> {
        let mut set: BTreeSet<Tok> = BTreeSet::new();
        set.insert(self.identity());
        let mut frontier: Vec<Tok> = gens.to_vec();
        while let Some(g) = frontier.pop() {
            if !set.insert(g.clone()) {
                continue;
            }
            let current: Vec<Tok> = set.iter().cloned().collect();
            for h in current {
                frontier.push(self.mul(&g, &h));
                frontier.push(self.mul(&h, &g));
            }
            frontier.push(self.inv(&g));
        }
        set.into_iter().collect()
    }

    /// Even permutations of a symmetric group.
    pub fn alternating_subgroup(&self) -> Vec<Tok> {
        self.elements()
            .unwrap_or(&[])
            .iter()
            .filter(|g| perm_sign(g) == 1)
            .cloned()
            .collect()
    }
}

/// Sign of a permutation token; integers count as even.
pub fn perm_sign(t: &Tok) -> i64 {
    match t {
        Tok::Perm(p) => {
            let mut sign = 1;
            let mut seen = vec![false; p.len()];
            for s in 0..p.len() {
                let mut len = 0;
                let mut i = s;
                while !seen[i] {
                    seen[i] = true;
                    i = p[i] as usize;
                    len += 1;
                }
                if len > 0 && len % 2 == 0 {
                    sign = -sign;
                }
            }
            sign
        }
        _ => 1,
    }
}

/// Checks the group axioms over a window closed under inverses.
pub fn group_check(g: &GroupSpec, window: &[Tok]) -> Result<Report> {
    let set: BTreeSet<&Tok> = window.iter().collect();
    if set.len() != window.len() {
        return Err(Error::Structural(format!(
            "encoding collision in window of {}: duplicate tokens",
            g.name()
        )));
    }
    for x in window {
        if !set.contains(&g.inv(x)) {
            return Err(Error::Precondition(format!("window not closed under inverse at {x}")));
        }
    }
    let mut report = Report::new("group_check", &format!("{} on {} elements", g.name(), window.len()));
    let e = g.identity();
    let mut assoc = Tally::new("associativity");
    for a in window {
        for b in window {
            for c in window {
                let l = g.mul(&g.mul(a, b), c);
                let r = g.mul(a, &g.mul(b, c));
                assoc.case(l == r, || format!("({a},{b},{c}): (ab)c={l}, a(bc)={r}"));
            }
        }
    }
    report.push(assoc);
    let mut ident = Tally::new("identity");
    let mut inverse = Tally::new("inverse");
    for a in window {
        ident.case(g.mul(&e, a) == *a && g.mul(a, &e) == *a, || format!("{a}"));
        let ai = g.inv(a);
        let ok = g.mul(a, &ai) == e && g.mul(&ai, a) == e;
        inverse.case(ok, || format!("({a},{ai},{e}): a·a⁻¹={}", g.mul(a, &ai)));
    }
    report.push(ident);
    report.push(inverse);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_full_window_passes() {
        let g = GroupSpec::cyclic(2);
        let r = group_check(&g, g.elements().unwrap()).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn s3_exhaustive_passes() {
        let g = GroupSpec::symmetric(3);
        assert_eq!(g.order(), Some(6));
        let r = group_check(&g, g.elements().unwrap()).unwrap();
        assert!(r.passed());
        assert_eq!(r.item("associativity").unwrap().tested, 216);
    }

    #[test]
    fn broken_inverse_fails_with_witness() {
        let c2 = GroupSpec::cyclic(2);
        let broken = GroupSpec::custom(
            "broken",
            Tok::Int(0),
            move |a, b| c2.mul(a, b),
            |_| Tok::Int(0),
            Some(vec![Tok::Int(0), Tok::Int(1)]),
        );
        let r = group_check(&broken, broken.elements().unwrap()).unwrap();
        assert!(!r.passed());
        let item = r.item("inverse").unwrap();
        assert!(item.witness.as_deref().unwrap().starts_with("(1,0,0)"));
    }

    #[test]
    fn duplicate_tokens_are_structural_errors() {
        let g = GroupSpec::cyclic(2);
        let w = vec![Tok::Int(0), Tok::Int(0)];
        assert!(matches!(group_check(&g, &w), Err(Error::Structural(_))));
    }

    #[test]
    fn integer_windows() {
        let z = GroupSpec::integers();
        assert!(!z.is_finite());
        let w = z.window(3);
        assert_eq!(w.len(), 7);
        assert!(group_check(&z, &w).unwrap().passed());
    }

    #[test]
    fn permutation_products() {
        let s3 = GroupSpec::symmetric(3);
        let p12 = Tok::cycles(3, &[&[1, 2]]);
        let p13 = Tok::cycles(3, &[&[1, 3]]);
        let p123 = Tok::cycles(3, &[&[1, 2, 3]]);
        assert_eq!(s3.mul(&p12, &s3.inv(&p13)).to_string(), "(132)");
        assert_eq!(s3.mul(&p12, &s3.inv(&p123)).to_string(), "(13)");
        assert_eq!(s3.alternating_subgroup().len(), 3);
        assert_eq!(s3.generated_subgroup(&[p123]).len(), 3);
    }

    #[test]
    fn parse_names() {
        assert_eq!(GroupSpec::parse("cyclic:4").unwrap().order(), Some(4));
        assert_eq!(GroupSpec::parse("symmetric:3").unwrap().name(), "symmetric:3");
        assert!(GroupSpec::parse("integers").is_ok());
        assert!(GroupSpec::parse("dihedral:4").is_err());
        assert!(GroupSpec::parse("cyclic:0").is_err());
    }
}
