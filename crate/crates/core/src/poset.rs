//! Finite posets: the vertex poset of a quiver and covering relations.

use std::collections::{BTreeMap, BTreeSet};

use crate::Vertex;

/// The reachability order on the vertices of an acyclic quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPoset {
    /// `up[x]` = every `y` with `x <= y` (reflexive).
    up: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl VertexPoset {
    pub fn from_up_sets(up: BTreeMap<Vertex, BTreeSet<Vertex>>) -> Self {
        VertexPoset { up }
    }

    /// Builds a poset from any relation by reflexive-transitive closure.
    /// Returns `None` if the closure is not antisymmetric.
    pub fn from_relation(elements: &[Vertex], relation: &[(Vertex, Vertex)]) -> Option<Self> {
        let mut up: BTreeMap<Vertex, BTreeSet<Vertex>> =
            elements.iter().map(|&v| (v, BTreeSet::from([v]))).collect();
        let mut changed = true;
        while changed {
            changed = false;
            for &(a, b) in relation {
                let above_b = up.get(&b)?.clone();
                let set = up.get_mut(&a)?;
                let before = set.len();
                set.extend(above_b);
                changed |= set.len() != before;
            }
        }
        for (&x, set) in &up {
            if set.iter().any(|&y| y != x && up[&y].contains(&x)) {
                return None;
            }
        }
        Some(VertexPoset { up })
    }

    pub fn elements(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.up.keys().copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.up.contains_key(&v)
    }

    pub fn leq(&self, x: Vertex, y: Vertex) -> bool {
        self.up.get(&x).is_some_and(|s| s.contains(&y))
    }

    pub fn lt(&self, x: Vertex, y: Vertex) -> bool {
        x != y && self.leq(x, y)
    }

    /// The principal filter `⟨x⟩`.
    pub fn up_set(&self, x: Vertex) -> &BTreeSet<Vertex> {
        &self.up[&x]
    }

    /// Pairs `(x, y)` with `y` covering `x`.
    pub fn covers(&self) -> Vec<(Vertex, Vertex)> {
        let elems: Vec<Vertex> = self.elements().collect();
        covering_pairs(&elems, |a, b| self.leq(*a, *b))
            .into_iter()
            .map(|(a, b)| (elems[a], elems[b]))
            .collect()
    }

    /// `H(P)`: one arrow `x -> y` per covering pair.
    pub fn hasse_diagram(&self) -> Vec<(Vertex, Vertex)> {
        self.covers()
    }
}

/// Covering pairs `(i, j)` (indices into `elements`) of a finite partial order `le`.
pub fn covering_pairs<T>(elements: &[T], le: impl Fn(&T, &T) -> bool) -> Vec<(usize, usize)> {
    let n = elements.len();
    let lt: Vec<Vec<bool>> = (0..n)
        .map(|a| (0..n).map(|b| a != b && le(&elements[a], &elements[b])).collect())
        .collect();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if lt[a][b] && !(0..n).any(|c| lt[a][c] && lt[c][b]) {
                out.push((a, b));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn a3_chain() {
        let p = fixtures::a3().vertex_poset();
        assert!(p.lt(1, 2) && p.lt(2, 3) && p.lt(1, 3));
        assert_eq!(p.covers(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn k2_poset() {
        let p = fixtures::k2().vertex_poset();
        assert!(p.lt(1, 2));
        assert_eq!(p.hasse_diagram(), vec![(1, 2)]);
    }

    #[test]
    fn a3_after_reflection_at_sink() {
        let p = fixtures::a3().reflect(3).unwrap().vertex_poset();
        assert!(p.lt(1, 2) && p.lt(3, 2));
        assert!(!p.leq(1, 3) && !p.leq(3, 1));
    }

    #[test]
    fn antichain_has_no_covers() {
        let p = VertexPoset::from_relation(&[1, 2], &[]).unwrap();
        assert!(p.hasse_diagram().is_empty());
    }

    #[test]
    fn diamond_covers_exclude_the_long_relation() {
        let (a, b, c, d) = (1, 2, 3, 4);
        let p = VertexPoset::from_relation(&[a, b, c, d], &[(a, b), (a, c), (b, d), (c, d), (a, d)]).unwrap();
        let h = p.hasse_diagram();
        assert_eq!(h, vec![(a, b), (a, c), (b, d), (c, d)]);
        assert!(!h.contains(&(a, d)));
    }

    #[test]
    fn cyclic_relation_is_not_a_poset() {
        assert!(VertexPoset::from_relation(&[1, 2], &[(1, 2), (2, 1)]).is_none());
    }
}
