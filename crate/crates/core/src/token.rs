//! Opaque, totally ordered basis tokens.

use std::fmt;

/// A basis index or group element.
///
/// Tokens compare structurally, so every support prints in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tok {
    Int(i64),
    /// A permutation of `0..n`, stored as its image list.
    Perm(Vec<u8>),
    Name(String),
    /// A token tagged with a label, used for direct sums and relabelled copies.
    Tag(String, Box<Tok>),
}

impl Tok {
    pub fn name(s: &str) -> Tok {
        Tok::Name(s.to_string())
    }

    pub fn tag(label: &str, inner: Tok) -> Tok {
        Tok::Tag(label.to_string(), Box::new(inner))
    }

    /// Permutation from 1-based cycles, e.g. `cycles(3, &[&[1, 2]])` is (12).
    pub fn cycles(n: usize, cs: &[&[u8]]) -> Tok {
        let mut img: Vec<u8> = (0..n as u8).collect();
        for c in cs {
            for (i, &x) in c.iter().enumerate() {
                let y = c[(i + 1) % c.len()];
                img[(x - 1) as usize] = y - 1;
            }
        }
        Tok::Perm(img)
    }
}

fn render_perm(img: &[u8]) -> String {
    let mut seen = vec![false; img.len()];
    let mut out = String::new();
    for start in 0..img.len() {
        if seen[start] || img[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = img[i] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(k) => write!(f, "{k}"),
            Tok::Perm(img) => f.write_str(&render_perm(img)),
            Tok::Name(s) => f.write_str(s),
            Tok::Tag(l, t) => write!(f, "{l}[{t}]"),
        }
    }
}

/// Keys usable as basis indices of finitely supported vectors.
pub trait BasisKey: Ord + Clone + fmt::Debug {
    fn render(&self) -> String;
}

impl BasisKey for Tok {
    fn render(&self) -> String {
        self.to_string()
    }
}

impl BasisKey for usize {
    fn render(&self) -> String {
        format!("#{self}")
    }
}

impl<A: BasisKey, B: BasisKey> BasisKey for (A, B) {
    fn render(&self) -> String {
        format!("{}⊗{}", self.0.render(), self.1.render())
    }
}

impl<A: BasisKey, B: BasisKey, C: BasisKey> BasisKey for (A, B, C) {
    fn render(&self) -> String {
        format!("{}⊗{}⊗{}", self.0.render(), self.1.render(), self.2.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation() {
        assert_eq!(Tok::cycles(3, &[&[1, 2]]).to_string(), "(12)");
        assert_eq!(Tok::cycles(3, &[&[1, 3, 2]]).to_string(), "(132)");
        assert_eq!(Tok::cycles(3, &[]).to_string(), "()");
    }

    #[test]
    fn tuple_render() {
        let k = (Tok::Int(1), Tok::name("x"));
        assert_eq!(k.render(), "1⊗x");
    }
}
