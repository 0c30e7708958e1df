//! Tight and principal sequences, and the coordinates `S_{r,x}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::filters::{hull_in, principal_filter, Filter};
use crate::quiver::ValuedQuiver;
use crate::sequences::canonical::{canonical_form, realize};
use crate::sequences::AdmissibleSequence;
use crate::Vertex;

/// Names `S_{r,x}`: the principal sequence of size `r` whose last layer is `⟨x⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrincipalCoordinate {
    pub r: u32,
    pub x: Vertex,
}

impl PrincipalCoordinate {
    pub fn new(r: u32, x: Vertex) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroSize);
        }
        Ok(PrincipalCoordinate { r, x })
    }
}

impl fmt::Display for PrincipalCoordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{{{},{}}}", self.r, self.x)
    }
}

/// Nonempty and `Supp S_i = H_Λ(Supp S_{i+1})` for every `i < r`.
pub fn is_tight(s: &AdmissibleSequence) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    let q = s.base();
    let poset = q.vertex_poset();
    let supports = canonical_form(s).supports();
    for pair in supports.windows(2) {
        if hull_in(q, &poset, &pair[1])? != pair[0] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The generator `x` when `Supp S_r = ⟨x⟩`.
fn last_layer_generator(q: &ValuedQuiver, last: &Filter) -> Option<Vertex> {
    let poset = q.vertex_poset();
    last.iter().find(|&x| poset.up_set(x) == last.members())
}

/// Tight with a principal last layer.
pub fn is_principal(s: &AdmissibleSequence) -> Result<bool> {
    Ok(principal_generator(s)?.is_some())
}

/// `Some((r, x))` when `S ~ S_{r,x}`.
pub fn principal_generator(s: &AdmissibleSequence) -> Result<Option<PrincipalCoordinate>> {
    if !is_tight(s)? {
        return Ok(None);
    }
    let c = canonical_form(s);
    let r = c.size();
    Ok(last_layer_generator(s.base(), &c.support(r)).map(|x| PrincipalCoordinate { r: r as u32, x }))
}

/// `S_{r,x}`: realizes `⟨x⟩ = F_r ⊆ H_Λ(F_r) = F_{r-1} ⊆ ⋯`. Its last letter is `x`.
pub fn principal_sequence(q: &ValuedQuiver, coord: PrincipalCoordinate) -> Result<AdmissibleSequence> {
    if coord.r == 0 {
        return Err(Error::ZeroSize);
    }
    q.check_vertex(coord.x)?;
    let poset = q.vertex_poset();
    let mut chain = vec![principal_filter(&poset, coord.x)?];
    for _ in 1..coord.r {
        let next = hull_in(q, &poset, chain.last().unwrap())?;
        chain.push(next);
    }
    chain.reverse();
    realize(q, &chain)
}

/// Decides `T ⪯ S` for tight `T` by comparing a single layer: with sizes `q`
/// and `r`, this holds iff `q <= r` and `Supp T_q ⊆ Supp S_q`.
pub fn compare_tight(t: &AdmissibleSequence, s: &AdmissibleSequence) -> Result<bool> {
    t.check_same_base(s)?;
    if !is_tight(t)? {
        return Err(Error::NotTight);
    }
    let (ct, cs) = (canonical_form(t), canonical_form(s));
    let q = ct.size();
    if q > cs.size() {
        return Ok(false);
    }
    Ok(ct.support(q).is_subset(&cs.support(q)))
}
