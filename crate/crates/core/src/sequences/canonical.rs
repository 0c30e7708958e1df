use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::filters::{hull_in, is_filter, Filter};
use crate::quiver::ValuedQuiver;
use crate::sequences::{AdmissibleSequence, MultiplicityVector};
use crate::Vertex;

/// `S ~ S₁ S₂ ⋯ S_r`: layers of distinct vertices with nested supports.
///
/// Within a layer, vertices are listed in the order produced by repeatedly
/// emitting the smallest-id sink of the current orientation, so two
/// equivalent sequences always have identical canonical forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    base: ValuedQuiver,
    layers: Vec<Vec<Vertex>>,
}

impl CanonicalForm {
    pub fn size(&self) -> usize {
        self.layers.len()
    }

    pub fn layers(&self) -> &[Vec<Vertex>] {
        &self.layers
    }

    /// `Supp S_i` for `i = 1..=r`.
    pub fn supports(&self) -> Vec<Filter> {
        self.layers.iter().map(|l| Filter::from_set_unchecked(l.iter().copied().collect())).collect()
    }

    /// `Supp S_i`, 1-based.
    pub fn support(&self, i: usize) -> Filter {
        Filter::from_set_unchecked(self.layers[i - 1].iter().copied().collect())
    }

    pub fn to_sequence(&self) -> AdmissibleSequence {
        AdmissibleSequence::from_parts_unchecked(self.base.clone(), self.layers.concat())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .layers
            .iter()
            .map(|l| l.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// Orders the vertices of `layer` so that each one is a sink when reached,
/// advancing `cur` through the reflections.
fn order_layer(cur: &mut ValuedQuiver, layer: &BTreeSet<Vertex>) -> Option<Vec<Vertex>> {
    let mut remaining = layer.clone();
    let mut out = Vec::with_capacity(layer.len());
    while !remaining.is_empty() {
        let x = remaining.iter().copied().find(|&v| cur.is_sink(v))?;
        remaining.remove(&x);
        out.push(x);
        *cur = cur.reflect_unchecked(x);
    }
    Some(out)
}

fn realize_chain(q: &ValuedQuiver, chain: &[BTreeSet<Vertex>]) -> Result<CanonicalForm> {
    let poset = q.vertex_poset();
    for (i, layer) in chain.iter().enumerate() {
        if layer.is_empty() {
            return Err(Error::EmptyLayer(i + 1));
        }
        if !is_filter(&poset, layer)? {
            return Err(Error::LayerNotAFilter(i + 1));
        }
    }
    for i in 1..chain.len() {
        let h = hull_in(q, &poset, &Filter::from_set_unchecked(chain[i].clone()))?;
        if !h.members().is_subset(&chain[i - 1]) {
            return Err(Error::HullConditionViolated(i));
        }
    }
    let mut cur = q.clone();
    let mut layers = Vec::with_capacity(chain.len());
    for layer in chain {
        let ordered = order_layer(&mut cur, layer).ok_or_else(|| Error::NotAdmissible(layer.iter().copied().collect()))?;
        layers.push(ordered);
    }
    Ok(CanonicalForm { base: q.clone(), layers })
}

/// Builds the canonical sequence whose layers have supports `F₁ ⊇ ⋯ ⊇ F_r`.
/// Requires nonempty filters with `H_Λ(F_{i+1}) ⊆ F_i`.
pub fn realize(q: &ValuedQuiver, chain: &[Filter]) -> Result<AdmissibleSequence> {
    let sets: Vec<BTreeSet<Vertex>> = chain.iter().map(|f| f.members().clone()).collect();
    Ok(realize_chain(q, &sets)?.to_sequence())
}

/// The canonical form of `S`, with layers `{v : m_S(v) >= i}`.
pub fn canonical_form(s: &AdmissibleSequence) -> CanonicalForm {
    CanonicalForm::from_multiplicity(s.base(), &s.multiplicity())
        .expect("multiplicity vector of an admissible sequence is realizable")
}

impl CanonicalForm {
    /// Realizes the layers of a multiplicity vector, failing if no admissible
    /// sequence has that vector.
    pub fn from_multiplicity(q: &ValuedQuiver, m: &MultiplicityVector) -> Result<CanonicalForm> {
        let chain: Vec<BTreeSet<Vertex>> = (1..=m.max_entry()).map(|i| m.layer(i)).collect();
        realize_chain(q, &chain)
    }
}

impl AdmissibleSequence {
    /// The canonical representative of the class with multiplicity vector `m`.
    pub fn from_multiplicity(q: &ValuedQuiver, m: &MultiplicityVector) -> Result<AdmissibleSequence> {
        Ok(CanonicalForm::from_multiplicity(q, m)?.to_sequence())
    }

    pub fn canonical(&self) -> AdmissibleSequence {
        canonical_form(self).to_sequence()
    }
}
