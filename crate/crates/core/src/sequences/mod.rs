//! (+)-admissible sequences and the combinatorics of their equivalence classes.
//!
//! A sequence `x₁, …, x_s` is (+)-admissible on `(Γ, Λ)` when every `x_k` is a
//! sink of `σ_{x_{k-1}} ⋯ σ_{x₁} Λ`. Two admissible sequences are equivalent
//! exactly when they have the same multiplicity vector, which is what
//! [`AdmissibleSequence::equivalent`] tests; the swap-closure search in
//! [`swap_closure_equivalent`] decides the same relation from its definition
//! and is kept as an independent check.

mod canonical;
mod lattice;
mod principal;

pub use canonical::{canonical_form, realize, CanonicalForm};
pub use lattice::{join, meet, precedes, remainder};
pub use principal::{
    compare_tight, is_principal, is_tight, principal_generator, principal_sequence, PrincipalCoordinate,
};

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::filters::Filter;
use crate::quiver::ValuedQuiver;
use crate::Vertex;

/// `m_S(v)` for every vertex of the base quiver (zeros included).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiplicityVector(BTreeMap<Vertex, u32>);

impl MultiplicityVector {
    pub fn zero(q: &ValuedQuiver) -> Self {
        MultiplicityVector(q.vertices().iter().map(|&v| (v, 0)).collect())
    }

    pub fn from_map(map: BTreeMap<Vertex, u32>) -> Self {
        MultiplicityVector(map)
    }

    pub fn get(&self, v: Vertex) -> u32 {
        self.0.get(&v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, u32)> + '_ {
        self.0.iter().map(|(&v, &m)| (v, m))
    }

    pub fn as_map(&self) -> &BTreeMap<Vertex, u32> {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.values().sum()
    }

    /// The largest entry; this is the size of the canonical form.
    pub fn max_entry(&self) -> u32 {
        self.0.values().copied().max().unwrap_or(0)
    }

    /// Pointwise `<=`.
    pub fn le(&self, other: &Self) -> bool {
        self.iter().all(|(v, m)| m <= other.get(v))
    }

    pub fn pointwise_min(&self, other: &Self) -> Self {
        self.zip(other, u32::min)
    }

    pub fn pointwise_max(&self, other: &Self) -> Self {
        self.zip(other, u32::max)
    }

    /// Pointwise difference; `None` when some entry would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let mut out = BTreeMap::new();
        for (v, m) in self.iter() {
            out.insert(v, m.checked_sub(other.get(v))?);
        }
        Some(MultiplicityVector(out))
    }

    fn zip(&self, other: &Self, f: impl Fn(u32, u32) -> u32) -> Self {
        let keys: BTreeSet<Vertex> = self.0.keys().chain(other.0.keys()).copied().collect();
        MultiplicityVector(keys.into_iter().map(|v| (v, f(self.get(v), other.get(v)))).collect())
    }

    /// `{v : m(v) >= i}`, the `i`-th canonical layer (1-based).
    pub fn layer(&self, i: u32) -> BTreeSet<Vertex> {
        self.iter().filter(|&(_, m)| m >= i).map(|(v, _)| v).collect()
    }
}

impl fmt::Display for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(v, m)| format!("{v}={m}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A vertex list that is (+)-admissible on its base quiver.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdmissibleSequence {
    base: ValuedQuiver,
    verts: Vec<Vertex>,
}

impl AdmissibleSequence {
    pub fn new(base: &ValuedQuiver, verts: &[Vertex]) -> Result<Self> {
        if !is_admissible(base, verts)? {
            return Err(Error::NotAdmissible(verts.to_vec()));
        }
        Ok(AdmissibleSequence { base: base.clone(), verts: verts.to_vec() })
    }

    pub fn empty(base: &ValuedQuiver) -> Self {
        AdmissibleSequence { base: base.clone(), verts: Vec::new() }
    }

    pub(crate) fn from_parts_unchecked(base: ValuedQuiver, verts: Vec<Vertex>) -> Self {
        debug_assert!(is_admissible(&base, &verts).unwrap_or(false));
        AdmissibleSequence { base, verts }
    }

    pub fn base(&self) -> &ValuedQuiver {
        &self.base
    }

    pub fn verts(&self) -> &[Vertex] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    /// `Λ^S = σ_{x_s} ⋯ σ_{x₁} Λ`.
    pub fn end_quiver(&self) -> ValuedQuiver {
        self.verts.iter().fold(self.base.clone(), |q, &x| q.reflect_unchecked(x))
    }

    /// Appends `x`, which must be a sink of `Λ^S`.
    pub fn push(&self, x: Vertex) -> Result<Self> {
        let end = self.end_quiver();
        end.check_vertex(x)?;
        if !end.is_sink(x) {
            return Err(Error::NotASink(x));
        }
        let mut verts = self.verts.clone();
        verts.push(x);
        Ok(AdmissibleSequence { base: self.base.clone(), verts })
    }

    /// Concatenation `S T` where `T` is admissible on `Λ^S`.
    pub fn concat(&self, tail: &AdmissibleSequence) -> Result<Self> {
        if tail.base != self.end_quiver() {
            return Err(Error::BaseMismatch);
        }
        let mut verts = self.verts.clone();
        verts.extend_from_slice(&tail.verts);
        Ok(AdmissibleSequence { base: self.base.clone(), verts })
    }

    /// The tail `x₂, …, x_s` as a sequence on `σ_{x₁} Λ`.
    pub fn tail(&self) -> Option<AdmissibleSequence> {
        let (&first, rest) = self.verts.split_first()?;
        Some(AdmissibleSequence { base: self.base.reflect_unchecked(first), verts: rest.to_vec() })
    }

    pub fn multiplicity(&self) -> MultiplicityVector {
        let mut m = MultiplicityVector::zero(&self.base);
        for &v in &self.verts {
            *m.0.get_mut(&v).expect("vertex of base") += 1;
        }
        m
    }

    /// `Supp S`; always a filter of `(Γ₀, Λ)`.
    pub fn support(&self) -> Filter {
        Filter::from_set_unchecked(self.verts.iter().copied().collect())
    }

    pub(crate) fn check_same_base(&self, other: &AdmissibleSequence) -> Result<()> {
        if self.base == other.base {
            Ok(())
        } else {
            Err(Error::BaseMismatch)
        }
    }

    /// `S ~ T`, decided by comparing multiplicity vectors.
    pub fn equivalent(&self, other: &AdmissibleSequence) -> Result<bool> {
        self.check_same_base(other)?;
        Ok(self.multiplicity() == other.multiplicity())
    }
}

impl fmt::Display for AdmissibleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.verts.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

pub fn is_admissible(q: &ValuedQuiver, verts: &[Vertex]) -> Result<bool> {
    for &v in verts {
        q.check_vertex(v)?;
    }
    let mut cur = q.clone();
    for &x in verts {
        if !cur.is_sink(x) {
            return Ok(false);
        }
        cur = cur.reflect_unchecked(x);
    }
    Ok(true)
}

pub fn equivalent(s: &AdmissibleSequence, t: &AdmissibleSequence) -> Result<bool> {
    s.equivalent(t)
}

/// The class of `S` under adjacent swaps of letters joined by no edge.
pub fn swap_class(s: &AdmissibleSequence) -> BTreeSet<Vec<Vertex>> {
    let graph = s.base.graph();
    let mut seen = BTreeSet::from([s.verts.clone()]);
    let mut queue = VecDeque::from([s.verts.clone()]);
    while let Some(cur) = queue.pop_front() {
        for i in 0..cur.len().saturating_sub(1) {
            let (a, b) = (cur[i], cur[i + 1]);
            if a == b || graph.adjacent(a, b) {
                continue;
            }
            let mut next = cur.clone();
            next.swap(i, i + 1);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// `S ~ T` decided by breadth-first search over the swap graph. Exponential
/// in the worst case; meant as an oracle on small inputs.
pub fn swap_closure_equivalent(s: &AdmissibleSequence, t: &AdmissibleSequence) -> Result<bool> {
    s.check_same_base(t)?;
    if s.len() != t.len() {
        return Ok(false);
    }
    Ok(swap_class(s).contains(&t.verts))
}

/// Every admissible sequence of length at most `max_len`, shortest first and
/// lexicographic within a length.
pub fn enumerate_admissible(q: &ValuedQuiver, max_len: usize) -> Vec<AdmissibleSequence> {
    let mut out = vec![AdmissibleSequence::empty(q)];
    let mut frontier = vec![(Vec::new(), q.clone())];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (verts, cur) in &frontier {
            for x in cur.sinks() {
                let mut v: Vec<Vertex> = verts.clone();
                v.push(x);
                out.push(AdmissibleSequence { base: q.clone(), verts: v.clone() });
                next.push((v, cur.reflect_unchecked(x)));
            }
        }
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn seq(q: &ValuedQuiver, v: &[Vertex]) -> AdmissibleSequence {
        AdmissibleSequence::new(q, v).unwrap()
    }

    #[test]
    fn admissibility() {
        let q = fixtures::a3();
        assert!(is_admissible(&q, &[3, 2, 1]).unwrap());
        assert!(!is_admissible(&q, &[2]).unwrap());
        assert!(is_admissible(&q, &[]).unwrap());
        assert_eq!(is_admissible(&q, &[4]), Err(Error::UnknownVertex(4)));
        assert_eq!(AdmissibleSequence::new(&q, &[2]), Err(Error::NotAdmissible(vec![2])));
    }

    #[test]
    fn multiplicities() {
        let q = fixtures::a3();
        let m = seq(&q, &[3, 2, 3]).multiplicity();
        assert_eq!((m.get(1), m.get(2), m.get(3)), (0, 1, 2));
        assert_eq!(AdmissibleSequence::empty(&q).multiplicity(), MultiplicityVector::zero(&q));
        let m = seq(&q, &[3, 2, 1, 3]).multiplicity();
        assert_eq!((m.get(1), m.get(2), m.get(3)), (1, 1, 2));
    }

    #[test]
    fn supports() {
        let q = fixtures::a3();
        assert_eq!(seq(&q, &[3, 2, 3]).support().into_members(), BTreeSet::from([2, 3]));
        assert_eq!(seq(&q, &[3, 2, 1]).support().into_members(), BTreeSet::from([1, 2, 3]));
        assert!(AdmissibleSequence::empty(&q).support().is_empty());
    }

    #[test]
    fn equivalence_examples() {
        let q = fixtures::a3().reflect(3).unwrap(); // 1->2, 3->2
        let (s, t) = (seq(&q, &[2, 1, 3]), seq(&q, &[2, 3, 1]));
        assert!(s.equivalent(&t).unwrap());
        assert!(swap_closure_equivalent(&s, &t).unwrap());

        let q = fixtures::a3();
        let (s, t) = (seq(&q, &[3, 2, 1]), seq(&q, &[3, 2, 3]));
        assert!(!s.equivalent(&t).unwrap());
        assert!(!swap_closure_equivalent(&s, &t).unwrap());
        assert!(s.equivalent(&s).unwrap());
        assert!(swap_closure_equivalent(&s, &s).unwrap());
        assert!(swap_closure_equivalent(&seq(&q, &[3]), &seq(&q, &[3])).unwrap());
    }

    #[test]
    fn adjacent_letters_do_not_swap() {
        let q = fixtures::a3();
        let s = seq(&q, &[3, 2]);
        assert_eq!(swap_class(&s).len(), 1);
        assert!(AdmissibleSequence::new(&q, &[2, 3]).is_err());
    }

    #[test]
    fn base_mismatch() {
        let a = seq(&fixtures::a3(), &[3]);
        let b = seq(&fixtures::a3().opposite(), &[1]);
        assert_eq!(a.equivalent(&b), Err(Error::BaseMismatch));
        assert_eq!(swap_closure_equivalent(&a, &b), Err(Error::BaseMismatch));
    }

    #[test]
    fn enumeration_on_kronecker_is_a_single_chain() {
        let seqs = enumerate_admissible(&fixtures::k2(), 4);
        let lists: Vec<&[Vertex]> = seqs.iter().map(|s| s.verts()).collect();
        assert_eq!(lists, vec![&[][..], &[2], &[2, 1], &[2, 1, 2], &[2, 1, 2, 1]]);
    }

    #[test]
    fn push_and_tail() {
        let q = fixtures::a3();
        let s = AdmissibleSequence::empty(&q).push(3).unwrap().push(2).unwrap();
        assert_eq!(s.verts(), &[3, 2]);
        assert_eq!(s.push(3).unwrap().verts(), &[3, 2, 3]);
        assert_eq!(s.push(2), Err(Error::NotASink(2)));
        let t = s.tail().unwrap();
        assert_eq!(t.verts(), &[2]);
        assert_eq!(t.base(), &q.reflect(3).unwrap());
    }
}
