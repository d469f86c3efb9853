//! Exact sparse row reduction over ℚ.
//!
//! Rows are kept in reduced echelon form keyed by their smallest basis key,
//! so reducing a vector is one pass over the pivots in its support.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::finsup::FinSup;
use crate::scalar::Scalar;
use crate::token::BasisKey;

#[derive(Clone, Debug)]
struct Row<K: Ord> {
    v: FinSup<K>,
    /// Combination of inserted generators producing `v`.
    combo: FinSup<usize>,
}

/// Reduced echelon basis of a span, remembering how each row was built.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord> {
    rows: Vec<Row<K>>,
    pivots: BTreeMap<K, usize>,
    inserted: usize,
    relations: Vec<FinSup<usize>>,
}

impl<K: BasisKey> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: Vec::new(), pivots: BTreeMap::new(), inserted: 0, relations: Vec::new() }
    }
}

impl<K: BasisKey> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a FinSup<K>>>(vs: I) -> Self
    where
        K: 'a,
    {
        let mut e = Self::new();
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of vectors inserted so far.
    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Reduces `v` against the basis: returns the remainder and the
    /// generator combination that was subtracted.
    fn reduce_tracked(&self, v: &FinSup<K>) -> (FinSup<K>, FinSup<usize>) {
        let mut rem = v.clone();
        let mut used = FinSup::<usize>::zero();
        let hits: Vec<usize> = v.keys().filter_map(|k| self.pivots.get(k).copied()).collect();
        for i in hits {
            let row = &self.rows[i];
            let (pk, _) = row.v.leading().expect("rows are nonzero");
            let c = rem.get(pk);
            if c.is_zero() {
                continue;
            }
            rem.axpy(&-c.clone(), &row.v);
            used.axpy(&c, &row.combo);
        }
        (rem, used)
    }

    pub fn reduce(&self, v: &FinSup<K>) -> FinSup<K> {
        self.reduce_tracked(v).0
    }

    pub fn contains(&self, v: &FinSup<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts generator number `self.inserted()`. Returns true if it enlarged the span.
    pub fn insert(&mut self, v: &FinSup<K>) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let (rem, used) = self.reduce_tracked(v);
        let mut combo = FinSup::unit(idx);
        combo.axpy(&-Scalar::one(), &used);
        if rem.is_zero() {
            self.relations.push(combo);
            return false;
        }
        let (pk, pc) = rem.leading().map(|(k, c)| (k.clone(), c.clone())).unwrap();
        let inv = Scalar::one() / pc;
        let row = Row { v: rem.scale(&inv), combo: combo.scale(&inv) };
        for other in self.rows.iter_mut() {
            let c = other.v.get(&pk);
            if !c.is_zero() {
                other.v.axpy(&-c.clone(), &row.v);
                other.combo.axpy(&-c, &row.combo);
            }
        }
        self.pivots.insert(pk, self.rows.len());
        self.rows.push(row);
        true
    }

    /// Coefficients `c` with `Σ c_i g_i = v` over the inserted generators, if any.
    pub fn solve(&self, v: &FinSup<K>) -> Option<FinSup<usize>> {
        let (rem, used) = self.reduce_tracked(v);
        if rem.is_zero() {
            Some(used)
        } else {
            None
        }
    }

    /// A basis of the linear relations among the inserted generators.
    pub fn relations(&self) -> &[FinSup<usize>] {
        &self.relations
    }

    /// The reduced basis vectors, ordered by pivot.
    pub fn basis(&self) -> Vec<FinSup<K>> {
        self.pivots.values().map(|&i| self.rows[i].v.clone()).collect()
    }

    pub fn same_span(&self, other: &Echelon<K>) -> bool {
        self.rank() == other.rank() && other.basis().iter().all(|v| self.contains(v))
    }

    pub fn contains_all(&self, other: &Echelon<K>) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }
}

/// Rank of a list of vectors.
pub fn rank<K: BasisKey>(vs: &[FinSup<K>]) -> usize {
    Echelon::from_vectors(vs).rank()
}

/// Null space of the map `e_i ↦ images[i]`: a basis of `{c : Σ c_i images[i] = 0}`.
pub fn null_space<K: BasisKey>(images: &[FinSup<K>]) -> Vec<FinSup<usize>> {
    Echelon::from_vectors(images).relations().to_vec()
}

/// Null space of a stacked family of maps: `c` with `Σ c_i f_j(i) = 0` for every `j`.
pub fn joint_null_space<K: BasisKey>(columns: &[Vec<FinSup<K>>]) -> Vec<FinSup<usize>> {
    let tagged: Vec<FinSup<(usize, K)>> = columns
        .iter()
        .map(|parts| {
            let mut v = FinSup::zero();
            for (j, p) in parts.iter().enumerate() {
                for (k, c) in p.iter() {
                    v.add_term((j, k.clone()), c.clone());
                }
            }
            v
        })
        .collect();
    null_space(&tagged)
}

/// `Σ c_i vs[i]`.
pub fn combine<K: BasisKey>(c: &FinSup<usize>, vs: &[FinSup<K>]) -> FinSup<K> {
    let mut out = FinSup::zero();
    for (i, s) in c.iter() {
        out.axpy(s, &vs[*i]);
    }
    out
}

/// Basis of the intersection of two spans.
pub fn intersection<K: BasisKey>(a: &[FinSup<K>], b: &[FinSup<K>]) -> Vec<FinSup<K>> {
    let ea = Echelon::from_vectors(a).basis();
    let eb = Echelon::from_vectors(b).basis();
    let mut stacked: Vec<FinSup<K>> = ea.clone();
    stacked.extend(eb.iter().map(|v| -v));
    let rels = null_space(&stacked);
    let mut out = Echelon::new();
    for r in rels {
        let part = r.filter(|i| *i < ea.len());
        out.insert(&combine(&part, &ea));
    }
    out.basis()
}
