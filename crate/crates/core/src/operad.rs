//! Tuples of permutations, their contractible simplicial sets, and classes
//! of permutation tuples paired with labelled entries.
//!
//! For fixed arity n, degree k of the tuple object is Sigma_n^{k+1}; faces
//! delete an entry, degeneracies repeat one, the cyclic operator rotates.
//! [`tuples`] exposes that as a carrier for homology.
//!
//! [`BeClass`] quotients pairs (permutation tuple over Sigma_n, n labelled
//! entries some of which may be missing) by the moves
//! `(e, push(alpha, x)) ~ (pull(alpha, e), x)` over all injective maps
//! alpha, where push inserts missing entries outside the image and pull is
//! the levelwise star action. Every class has a unique fully supported
//! representative whose 0th permutation is the identity, which is the
//! stored form:
//!
//! * restricting to the support (pulling back along the order-preserving
//!   injection onto the positions with present entries) removes all
//!   injection freedom, because any move between fully supported
//!   representatives must be a bijection;
//! * the remaining moves by a permutation pi send ((sigma_i), x) to
//!   ((sigma_i pi), x compose pi), and right-dividing by sigma_0 picks the
//!   unique orbit member with first coordinate the identity.
//!
//! Multiplication of classes is levelwise block sum with concatenated
//! entries; on these normal forms it is again a normal form, strictly
//! associative, with the empty class as unit.

use crate::injcat::{star_action, Injection, Permutation};
use crate::simplicial::{Carrier, SimplicialSet};
use std::sync::Arc;

/// Levelwise pullback of a permutation tuple along an injective map.
pub fn pull_tuple(alpha: &Injection, perms: &[Permutation]) -> Vec<Permutation> {
    perms.iter().map(|s| star_action(alpha, s).1).collect()
}

/// Pushforward of entries along an injective map: present entries land at
/// their image positions, everything else is missing.
pub fn push_entries<L: Clone>(alpha: &Injection, entries: &[Option<L>]) -> Vec<Option<L>> {
    assert_eq!(alpha.source(), entries.len());
    let mut out = vec![None; alpha.target()];
    for (j, e) in entries.iter().enumerate() {
        out[alpha.apply(j + 1) - 1] = e.clone();
    }
    out
}

/// Class of a permutation tuple with labelled entries, kept in normal form:
/// all entries present and the 0th permutation the identity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BeClass<L> {
    perms: Vec<Permutation>,
    entries: Vec<L>,
}

impl<L: Clone> BeClass<L> {
    /// Normalize an arbitrary representative. Missing entries are pulled
    /// out of the tuple; the permutation freedom is fixed via the 0th
    /// coordinate.
    pub fn from_raw(perms: Vec<Permutation>, entries: Vec<Option<L>>) -> Self {
        assert!(!perms.is_empty(), "a class needs at least one level");
        let n = entries.len();
        assert!(perms.iter().all(|p| p.degree() == n), "arity mismatch");
        let support: Vec<usize> = (1..=n).filter(|&j| entries[j - 1].is_some()).collect();
        let iota = Injection::new(n, support).expect("ascending support is injective");
        let perms = pull_tuple(&iota, &perms);
        let entries = iota
            .image()
            .iter()
            .map(|&j| entries[j - 1].clone().unwrap())
            .collect();
        BeClass { perms, entries }.normalize()
    }

    /// Right-divide every level by the 0th permutation and reindex the
    /// entries to match. Requires full support.
    fn normalize(mut self) -> Self {
        if self.perms[0].is_identity() {
            return self;
        }
        let pi_inv = self.perms[0].inverse();
        self.entries = (1..=self.entries.len())
            .map(|j| self.entries[pi_inv.apply(j) - 1].clone())
            .collect();
        self.perms = self.perms.iter().map(|s| s.compose(&pi_inv)).collect();
        debug_assert!(self.perms[0].is_identity());
        self
    }

    pub fn basepoint(degree: usize) -> Self {
        BeClass {
            perms: vec![Permutation::identity(0); degree + 1],
            entries: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.perms.len() - 1
    }

    pub fn arity(&self) -> usize {
        self.entries.len()
    }

    pub fn is_basepoint(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn entries(&self) -> &[L] {
        &self.entries
    }

    /// Block sum of tuples, concatenated entries. Normal forms multiply to
    /// a normal form directly.
    pub fn multiply(&self, other: &BeClass<L>) -> BeClass<L> {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        let perms = self
            .perms
            .iter()
            .zip(&other.perms)
            .map(|(a, b)| a.block_sum(b))
            .collect();
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        BeClass { perms, entries }
    }

    /// Delete level i, transforming each entry through `entry_map` first.
    pub fn face_with(&self, i: usize, entry_map: impl Fn(&L) -> L) -> BeClass<L> {
        let k = self.degree();
        assert!(k >= 1 && i <= k);
        let mut perms = self.perms.clone();
        perms.remove(i);
        let entries = self.entries.iter().map(&entry_map).collect();
        BeClass { perms, entries }.normalize()
    }

    pub fn face(&self, i: usize) -> BeClass<L> {
        self.face_with(i, L::clone)
    }

    /// Repeat level i.
    pub fn degeneracy(&self, i: usize) -> BeClass<L> {
        let k = self.degree();
        assert!(i <= k);
        let mut perms = self.perms.clone();
        perms.insert(i, perms[i].clone());
        BeClass {
            perms,
            entries: self.entries.clone(),
        }
    }

    /// Rotate the levels one step (the last becomes first), transforming
    /// each entry through `entry_map`.
    pub fn cyclic_with(&self, entry_map: impl Fn(&L) -> L) -> BeClass<L> {
        let mut perms = self.perms.clone();
        perms.rotate_right(1);
        let entries = self.entries.iter().map(&entry_map).collect();
        BeClass { perms, entries }.normalize()
    }

    pub fn cyclic(&self) -> BeClass<L> {
        self.cyclic_with(L::clone)
    }

    /// Transform entries, dropping those sent to None. The result is
    /// renormalized over the surviving support.
    pub fn map_entries<M: Clone>(&self, f: impl Fn(usize, &L) -> Option<M>) -> BeClass<M> {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(j, e)| f(j, e))
            .collect();
        BeClass::from_raw(self.perms.clone(), entries)
    }
}

// ---------------------------------------------------------------------------
// the tuple object as a simplicial set

/// Degree k holds the (k+1)-tuples over Sigma_n, encoded base n! against
/// the lexicographic permutation list.
pub struct TupleCarrier {
    perms: Vec<Permutation>,
}

impl TupleCarrier {
    pub fn new(n: usize) -> Self {
        TupleCarrier {
            perms: Permutation::all(n),
        }
    }

    fn decode(&self, k: usize, x: usize) -> Vec<usize> {
        let base = self.perms.len();
        let mut out = Vec::with_capacity(k + 1);
        let mut rest = x;
        for _ in 0..=k {
            out.push(rest % base);
            rest /= base;
        }
        out
    }

    fn encode(&self, digits: &[usize]) -> usize {
        let base = self.perms.len();
        digits.iter().rev().fold(0, |acc, &d| acc * base + d)
    }
}

impl Carrier for TupleCarrier {
    fn size(&self, k: usize) -> usize {
        self.perms.len().pow((k + 1) as u32)
    }
    fn face(&self, k: usize, i: usize, x: usize) -> usize {
        let mut t = self.decode(k, x);
        t.remove(i);
        self.encode(&t)
    }
    fn degeneracy(&self, k: usize, i: usize, x: usize) -> usize {
        let mut t = self.decode(k, x);
        t.insert(i, t[i]);
        self.encode(&t)
    }
    fn cyclic(&self, k: usize, x: usize) -> usize {
        let mut t = self.decode(k, x);
        t.rotate_right(1);
        self.encode(&t)
    }
    fn is_cyclic(&self) -> bool {
        true
    }
    fn label(&self, k: usize, x: usize) -> String {
        let t = self.decode(k, x);
        let parts: Vec<String> = t.iter().map(|&d| format!("{:?}", self.perms[d])).collect();
        format!("({})", parts.join("|"))
    }
}

/// The contractible simplicial set of permutation tuples at arity n.
pub fn tuples(n: usize, truncation: usize) -> SimplicialSet {
    SimplicialSet::with_truncation(Arc::new(TupleCarrier::new(n)), truncation)
}
