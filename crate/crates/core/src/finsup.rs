//! Finitely supported vectors over arbitrary ordered index sets.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Scalar;
use crate::token::{BasisKey, Tok};

/// A vector with finitely many nonzero coefficients. Zeros are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinSup<K: Ord> {
    coeffs: BTreeMap<K, Scalar>,
}

/// Elements of an algebra with a token basis.
pub type Vector = FinSup<Tok>;
/// Elements of `V ⊗ W` for token-based `V`, `W`.
pub type Tensor = FinSup<(Tok, Tok)>;
/// Elements of a threefold tensor product.
pub type Tensor3 = FinSup<(Tok, Tok, Tok)>;

impl<K: Ord> Default for FinSup<K> {
    fn default() -> Self {
        FinSup { coeffs: BTreeMap::new() }
    }
}

impl<K: BasisKey> FinSup<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector at `k`.
    pub fn unit(k: K) -> Self {
        Self::term(k, Scalar::one())
    }

    pub fn term(k: K, c: Scalar) -> Self {
        let mut v = Self::zero();
        v.add_term(k, c);
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Scalar)>>(terms: I) -> Self {
        let mut v = Self::zero();
        for (k, c) in terms {
            v.add_term(k, c);
        }
        v
    }

    /// Sum of unit vectors, one per key.
    pub fn indicator<'a, I: IntoIterator<Item = &'a K>>(keys: I) -> Self
    where
        K: 'a,
    {
        Self::from_terms(keys.into_iter().map(|k| (k.clone(), Scalar::one())))
    }

    /// Adds `c` to the coefficient at `k`, dropping the entry if it becomes zero.
    pub fn add_term(&mut self, k: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&k) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.coeffs.remove(&k);
                }
            }
            None => {
                self.coeffs.insert(k, c);
            }
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Scalar, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.coeffs {
            self.add_term(k.clone(), c * v);
        }
    }

    pub fn get(&self, k: &K) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.coeffs.keys()
    }

    pub fn support(&self) -> Vec<K> {
        self.coeffs.keys().cloned().collect()
    }

    /// The smallest key in the support.
    pub fn leading(&self) -> Option<(&K, &Scalar)> {
        self.coeffs.iter().next()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FinSup {
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Relabels the basis; colliding images are summed.
    pub fn map_keys<K2: BasisKey, F: FnMut(&K) -> K2>(&self, mut f: F) -> FinSup<K2> {
        FinSup::from_terms(self.coeffs.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Extends a basis map linearly: `Σ c_k f(k)`.
    pub fn linear<K2: BasisKey, F: FnMut(&K) -> FinSup<K2>>(&self, mut f: F) -> FinSup<K2> {
        let mut out = FinSup::zero();
        for (k, c) in &self.coeffs {
            out.axpy(c, &f(k));
        }
        out
    }

    /// Keeps only the terms whose key satisfies `keep`.
    pub fn filter<F: FnMut(&K) -> bool>(&self, mut keep: F) -> Self {
        FinSup {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Canonical text: `c*k + ...`, or `0`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, c)| {
                if c.is_one() {
                    k.render()
                } else {
                    format!("{}*{}", crate::scalar::render(c), k.render())
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// `x ⊗ y`: supports multiply, coefficients multiply.
pub fn tensor<A: BasisKey, B: BasisKey>(x: &FinSup<A>, y: &FinSup<B>) -> FinSup<(A, B)> {
    let mut out = FinSup::zero();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_term((a.clone(), b.clone()), c * d);
        }
    }
    out
}

/// Appends a third leg: `(Σ c a⊗b) ⊗ z`.
pub fn tensor3_right(t: &Tensor, z: &Vector) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((a, b), c) in t.iter() {
        for (k, d) in z.iter() {
            out.add_term((a.clone(), b.clone(), k.clone()), c * d);
        }
    }
    out
}

/// Prepends a first leg: `z ⊗ (Σ c a⊗b)`.
pub fn tensor3_left(z: &Vector, t: &Tensor) -> Tensor3 {
    let mut out = Tensor3::zero();
    for (k, d) in z.iter() {
        for ((a, b), c) in t.iter() {
            out.add_term((k.clone(), a.clone(), b.clone()), c * d);
        }
    }
    out
}

impl<K: BasisKey> Add for &FinSup<K> {
    type Output = FinSup<K>;
    fn add(self, rhs: &FinSup<K>) -> FinSup<K> {
        let mut out = self.clone();
        out.axpy(&Scalar::one(), rhs);
        out
    }
}

impl<K: BasisKey> Add for FinSup<K> {
    type Output = FinSup<K>;
    fn add(mut self, rhs: FinSup<K>) -> FinSup<K> {
        self.axpy(&Scalar::one(), &rhs);
        self
    }
}

impl<K: BasisKey> Sub for &FinSup<K> {
    type Output = FinSup<K>;
    fn sub(self, rhs: &FinSup<K>) -> FinSup<K> {
        let mut out = self.clone();
        out.axpy(&-Scalar::one(), rhs);
        out
    }
}

impl<K: BasisKey> Sub for FinSup<K> {
    type Output = FinSup<K>;
    fn sub(mut self, rhs: FinSup<K>) -> FinSup<K> {
        self.axpy(&-Scalar::one(), &rhs);
        self
    }
}

impl<K: BasisKey> Neg for &FinSup<K> {
    type Output = FinSup<K>;
    fn neg(self) -> FinSup<K> {
        self.scale(&-Scalar::one())
    }
}

impl<K: BasisKey> Mul<&Scalar> for &FinSup<K> {
    type Output = FinSup<K>;
    fn mul(self, c: &Scalar) -> FinSup<K> {
        self.scale(c)
    }
}

impl<K: BasisKey> std::iter::Sum for FinSup<K> {
    fn sum<I: Iterator<Item = FinSup<K>>>(iter: I) -> Self {
        iter.fold(FinSup::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};

    fn d(k: i64) -> Vector {
        Vector::unit(Tok::Int(k))
    }

    #[test]
    fn zeros_never_stored() {
        let mut v = d(1);
        v.add_term(Tok::Int(1), int(-1));
        assert!(v.is_zero());
        assert_eq!(v.len(), 0);
        assert!(d(2).scale(&int(0)).is_zero());
    }

    #[test]
    fn tensor_of_zero_is_zero() {
        assert!(tensor(&Vector::zero(), &d(3)).is_zero());
    }

    #[test]
    fn tensor_basis_case() {
        let t = tensor(&d(1), &d(2));
        assert_eq!(t, Tensor::unit((Tok::Int(1), Tok::Int(2))));
    }

    #[test]
    fn tensor_expands_bilinearly() {
        // (2δ_p + δ_r) ⊗ 3δ_q = 6 p⊗q + 3 r⊗q
        let x = &d(0).scale(&int(2)) + &d(2);
        let y = d(1).scale(&int(3));
        let t = tensor(&x, &y);
        assert_eq!(t.get(&(Tok::Int(0), Tok::Int(1))), int(6));
        assert_eq!(t.get(&(Tok::Int(2), Tok::Int(1))), int(3));
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn render_is_canonical() {
        let v = &d(2).scale(&q(1, 3)) + &d(-1);
        assert_eq!(v.render(), "-1 + 1/3*2");
        assert_eq!(Vector::zero().render(), "0");
    }
}
