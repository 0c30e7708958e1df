//! Shortest annihilating sequences `S_M`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::knitting::PreprojectiveTag;
use crate::quiver::ValuedQuiver;
use crate::representation::Representation;
use crate::sequences::{join, principal_sequence, AdmissibleSequence, MultiplicityVector, PrincipalCoordinate};

/// Length bound of the search: `|Γ₀| · (total dim + 1)` complete sweeps.
pub fn annihilator_length_cap(rep: &Representation) -> usize {
    let n = rep.quiver().len();
    n * n * (rep.total_dim() + 1)
}

/// Breadth-first search over admissible sequences, expanding every sink in
/// ascending order. Sequences with equal multiplicity vectors are equivalent
/// and yield the same functor, so only the first one reached is kept.
pub fn shortest_annihilator_bfs(rep: &Representation) -> Result<AdmissibleSequence> {
    let base = rep.quiver();
    let cap = annihilator_length_cap(rep);
    let mut seen: BTreeSet<MultiplicityVector> = BTreeSet::new();
    let start = AdmissibleSequence::empty(base);
    seen.insert(start.multiplicity());
    let mut frontier = vec![(start, rep.clone())];
    for _ in 0..=cap {
        let mut next = Vec::new();
        for (s, r) in frontier {
            if r.is_zero() {
                return Ok(s);
            }
            for x in r.quiver().sinks() {
                let t = s.push(x)?;
                if seen.insert(t.multiplicity()) {
                    next.push((t, r.reflect_plus(x)?));
                }
            }
        }
        frontier = next;
    }
    Err(Error::NotPreprojective(cap))
}

/// `S_M ~ S_{ν+1, x}` for `M = (Φ⁻)^ν P_x`.
pub fn s_m_from_tag(q: &ValuedQuiver, tag: PreprojectiveTag) -> Result<AdmissibleSequence> {
    principal_sequence(q, PrincipalCoordinate::new(tag.nu + 1, tag.x)?)
}

/// `S_M` for a direct sum: the join of the summands' sequences.
pub fn s_m_of_sum(q: &ValuedQuiver, tags: &[PreprojectiveTag]) -> Result<AdmissibleSequence> {
    let mut acc = AdmissibleSequence::empty(q);
    for &t in tags {
        acc = join(&acc, &s_m_from_tag(q, t)?)?;
    }
    Ok(acc)
}

/// The representation `(Φ⁻)^ν P_x`. Needs a symmetric valuation.
pub fn preprojective_representation(q: &ValuedQuiver, tag: PreprojectiveTag) -> Result<Representation> {
    let mut rep = Representation::projective(q, tag.x)?;
    for _ in 0..tag.nu {
        rep = rep.coxeter_minus()?;
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use std::collections::BTreeMap;

    fn tag(nu: u32, x: u32) -> PreprojectiveTag {
        PreprojectiveTag { nu, x }
    }

    fn seq(q: &ValuedQuiver, v: &[u32]) -> AdmissibleSequence {
        AdmissibleSequence::new(q, v).unwrap()
    }

    #[test]
    fn bfs_examples() {
        let q = fixtures::a3();
        let l2 = Representation::simple(&q, 2).unwrap();
        assert!(shortest_annihilator_bfs(&l2).unwrap().equivalent(&seq(&q, &[3, 2, 3])).unwrap());
        let p1 = Representation::projective(&q, 1).unwrap();
        assert!(shortest_annihilator_bfs(&p1).unwrap().equivalent(&seq(&q, &[3, 2, 1])).unwrap());
        assert!(shortest_annihilator_bfs(&Representation::zero(&q).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn tags_to_sequences() {
        let q = fixtures::a3();
        assert_eq!(s_m_from_tag(&q, tag(0, 1)).unwrap().verts(), &[3, 2, 1]);
        assert_eq!(s_m_from_tag(&q, tag(1, 3)).unwrap().verts(), &[3, 2, 3]);
        assert_eq!(s_m_from_tag(&fixtures::k2(), tag(1, 2)).unwrap().verts(), &[2, 1, 2]);
    }

    #[test]
    fn sums() {
        let q = fixtures::a3();
        assert!(s_m_of_sum(&q, &[tag(0, 1), tag(0, 3)]).unwrap().equivalent(&seq(&q, &[3, 2, 1])).unwrap());
        assert!(s_m_of_sum(&q, &[tag(0, 3), tag(1, 3)]).unwrap().equivalent(&seq(&q, &[3, 2, 3])).unwrap());
        assert!(s_m_of_sum(&q, &[tag(0, 1), tag(0, 1)]).unwrap().equivalent(&seq(&q, &[3, 2, 1])).unwrap());
        assert!(s_m_of_sum(&q, &[]).unwrap().is_empty());
    }

    #[test]
    fn regular_module_hits_the_cap() {
        // dims (1,1) on the Kronecker quiver are a regular simple
        let q = fixtures::k2();
        let f = crate::linalg::Matrix::from_i64(&[&[1, 1]]);
        let rep = Representation::new(&q, BTreeMap::from([(1, 1), (2, 1)]), BTreeMap::from([((1, 2), f)])).unwrap();
        assert_eq!(shortest_annihilator_bfs(&rep), Err(Error::NotPreprojective(12)));
    }
}
