//! Filters (up-closed vertex sets) of `(Γ₀, Λ)` and the hull operator.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::poset::VertexPoset;
use crate::quiver::ValuedQuiver;
use crate::Vertex;

/// An up-closed set of vertices. Construct through [`filter_generated`],
/// [`hull`] or [`Filter::new`], all of which check the closure.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filter(BTreeSet<Vertex>);

impl Filter {
    pub fn empty() -> Self {
        Filter(BTreeSet::new())
    }

    /// Wraps `members` after checking that they form a filter of `poset`.
    pub fn new(poset: &VertexPoset, members: BTreeSet<Vertex>) -> Result<Self> {
        if is_filter(poset, &members)? {
            Ok(Filter(members))
        } else {
            Err(Error::NotAFilter(members.into_iter().collect()))
        }
    }

    pub(crate) fn from_set_unchecked(members: BTreeSet<Vertex>) -> Self {
        Filter(members)
    }

    pub fn members(&self) -> &BTreeSet<Vertex> {
        &self.0
    }

    pub fn into_members(self) -> BTreeSet<Vertex> {
        self.0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &Filter) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Intersections of filters are filters.
    pub fn intersection(&self, other: &Filter) -> Filter {
        Filter(self.0.intersection(&other.0).copied().collect())
    }

    /// Unions of filters are filters.
    pub fn union(&self, other: &Filter) -> Filter {
        Filter(self.0.union(&other.0).copied().collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn check_members(poset: &VertexPoset, set: &BTreeSet<Vertex>) -> Result<()> {
    match set.iter().find(|&&v| !poset.contains(v)) {
        Some(&v) => Err(Error::UnknownVertex(v)),
        None => Ok(()),
    }
}

pub fn is_filter(poset: &VertexPoset, set: &BTreeSet<Vertex>) -> Result<bool> {
    check_members(poset, set)?;
    Ok(set.iter().all(|&x| poset.up_set(x).is_subset(set)))
}

/// `⟨X⟩`: the smallest filter containing `X`.
pub fn filter_generated(poset: &VertexPoset, set: &BTreeSet<Vertex>) -> Result<Filter> {
    check_members(poset, set)?;
    let mut out = BTreeSet::new();
    for &x in set {
        out.extend(poset.up_set(x).iter().copied());
    }
    Ok(Filter(out))
}

/// The principal filter `⟨x⟩`.
pub fn principal_filter(poset: &VertexPoset, x: Vertex) -> Result<Filter> {
    filter_generated(poset, &BTreeSet::from([x]))
}

/// `H_Λ(F)`: the filter generated by `F` and every outside vertex adjacent to it.
pub fn hull(q: &ValuedQuiver, f: &Filter) -> Result<Filter> {
    let poset = q.vertex_poset();
    hull_in(q, &poset, f)
}

/// [`hull`] with a precomputed vertex poset.
pub fn hull_in(q: &ValuedQuiver, poset: &VertexPoset, f: &Filter) -> Result<Filter> {
    if !is_filter(poset, f.members())? {
        return Err(Error::NotAFilter(f.iter().collect()));
    }
    let mut gen = f.0.clone();
    for v in f.iter() {
        gen.extend(q.graph().neighbors(v));
    }
    filter_generated(poset, &gen)
}

/// Every filter of the poset by subset enumeration. Exponential; small quivers only.
pub fn all_filters(poset: &VertexPoset) -> Vec<Filter> {
    let elems: Vec<Vertex> = poset.elements().collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << elems.len()) {
        let set: BTreeSet<Vertex> =
            elems.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
        if set.iter().all(|&x| poset.up_set(x).is_subset(&set)) {
            out.insert(Filter(set));
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(v: &[Vertex]) -> BTreeSet<Vertex> {
        v.iter().copied().collect()
    }

    #[test]
    fn filter_membership() {
        let p = fixtures::a3().vertex_poset();
        assert!(is_filter(&p, &set(&[2, 3])).unwrap());
        assert!(!is_filter(&p, &set(&[2])).unwrap());
        assert!(is_filter(&p, &set(&[])).unwrap());
        assert_eq!(is_filter(&p, &set(&[7])), Err(Error::UnknownVertex(7)));
    }

    #[test]
    fn generated_filters() {
        let p = fixtures::a3().vertex_poset();
        assert_eq!(filter_generated(&p, &set(&[1])).unwrap().members(), &set(&[1, 2, 3]));
        assert_eq!(filter_generated(&p, &set(&[3])).unwrap().members(), &set(&[3]));
        let p = fixtures::a3().reflect(3).unwrap().vertex_poset();
        assert_eq!(filter_generated(&p, &set(&[1])).unwrap().members(), &set(&[1, 2]));
    }

    #[test]
    fn hulls_on_a3() {
        let q = fixtures::a3();
        let p = q.vertex_poset();
        let h = |v: &[Vertex]| hull(&q, &Filter::new(&p, set(v)).unwrap()).unwrap().into_members();
        assert_eq!(h(&[3]), set(&[2, 3]));
        assert_eq!(h(&[2, 3]), set(&[1, 2, 3]));
        assert_eq!(h(&[1, 2, 3]), set(&[1, 2, 3]));
        assert_eq!(h(&[]), set(&[]));
    }

    #[test]
    fn hull_rejects_non_filters() {
        let q = fixtures::a3();
        let bogus = Filter::from_set_unchecked(set(&[2]));
        assert!(matches!(hull(&q, &bogus), Err(Error::NotAFilter(_))));
    }

    #[test]
    fn a3_has_four_filters() {
        let p = fixtures::a3().vertex_poset();
        assert_eq!(all_filters(&p).len(), 4);
    }
}
