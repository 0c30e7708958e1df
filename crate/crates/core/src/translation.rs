//! The translation quiver `ℕ(Γ, Λ^op)` and its relation to principal sequences.
//!
//! Every arrow `a: u -> v` of `Λ` contributes `(n, v) -> (n, u)` on each level
//! and `(n, u) -> (n + 1, v)` between levels; the translation is
//! `τ(n, u) = (n − 1, u)`. Finite slices keep the levels `0..=n_max`. Because
//! every path in the full quiver is nondecreasing in `n`, a slice is a
//! down-set and its reachability order and covering relation agree with the
//! infinite quiver's, so comparisons made inside a slice are exact.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Result;
use crate::poset::covering_pairs;
use crate::quiver::ValuedQuiver;
use crate::sequences::{compare_tight, precedes, principal_sequence, AdmissibleSequence, PrincipalCoordinate};
use crate::Vertex;

/// A vertex `(n, u)` of `ℕ × Γ₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LevelVertex {
    pub n: u32,
    pub u: Vertex,
}

impl fmt::Display for LevelVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n, self.u)
    }
}

/// Levels `0..=n_max` of `ℕ(Γ, Λ^op)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationSlice {
    n_max: u32,
    vertices: Vec<LevelVertex>,
    arrows: BTreeSet<(LevelVertex, LevelVertex)>,
    /// `up[v]` = every vertex reachable from `v` (reflexive).
    up: BTreeMap<LevelVertex, BTreeSet<LevelVertex>>,
}

pub fn build_slice(q: &ValuedQuiver, n_max: u32) -> TranslationSlice {
    let mut vertices = Vec::new();
    for n in 0..=n_max {
        for &u in q.vertices() {
            vertices.push(LevelVertex { n, u });
        }
    }
    let mut arrows = BTreeSet::new();
    for (u, v) in q.arrows() {
        for n in 0..=n_max {
            arrows.insert((LevelVertex { n, u: v }, LevelVertex { n, u }));
            if n < n_max {
                arrows.insert((LevelVertex { n, u }, LevelVertex { n: n + 1, u: v }));
            }
        }
    }
    let mut succ: BTreeMap<LevelVertex, Vec<LevelVertex>> = BTreeMap::new();
    for &(a, b) in &arrows {
        succ.entry(a).or_default().push(b);
    }
    // levels ascend along arrows, and within a level arrows follow Λ^op
    let topo = q.opposite().topological_order();
    let mut up: BTreeMap<LevelVertex, BTreeSet<LevelVertex>> = BTreeMap::new();
    for n in (0..=n_max).rev() {
        for &u in topo.iter().rev() {
            let v = LevelVertex { n, u };
            let mut set = BTreeSet::from([v]);
            for w in succ.get(&v).into_iter().flatten() {
                set.extend(up[w].iter().copied());
            }
            up.insert(v, set);
        }
    }
    TranslationSlice { n_max, vertices, arrows, up }
}

impl TranslationSlice {
    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn vertices(&self) -> &[LevelVertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &BTreeSet<(LevelVertex, LevelVertex)> {
        &self.arrows
    }

    pub fn has_arrow(&self, a: LevelVertex, b: LevelVertex) -> bool {
        self.arrows.contains(&(a, b))
    }

    pub fn translation(&self, v: LevelVertex) -> Option<LevelVertex> {
        (v.n > 0).then(|| LevelVertex { n: v.n - 1, u: v.u })
    }

    /// Path order on the slice.
    pub fn leq(&self, a: LevelVertex, b: LevelVertex) -> bool {
        self.up.get(&a).is_some_and(|s| s.contains(&b))
    }

    /// Checks `y -> z` iff `τz -> y` for every `z` in the domain of `τ`.
    pub fn translation_axiom_holds(&self) -> bool {
        self.vertices.iter().filter_map(|&z| self.translation(z).map(|tz| (z, tz))).all(|(z, tz)| {
            self.vertices.iter().all(|&y| self.has_arrow(y, z) == self.has_arrow(tz, y))
        })
    }
}

/// `ψ(S_{r,x}) = (r − 1, x)`.
pub fn psi(coord: PrincipalCoordinate) -> LevelVertex {
    LevelVertex { n: coord.r - 1, u: coord.x }
}

pub fn psi_inverse(v: LevelVertex) -> PrincipalCoordinate {
    PrincipalCoordinate { r: v.n + 1, x: v.u }
}

/// The Hasse diagram of `{S_{r,x} : r <= r_max}` under `⪯`, with translation
/// `S_{r,x} ↦ S_{r−1,x}`.
#[derive(Debug, Clone)]
pub struct PrincipalHasse {
    r_max: u32,
    elements: Vec<PrincipalCoordinate>,
    sequences: BTreeMap<PrincipalCoordinate, AdmissibleSequence>,
    arrows: BTreeSet<(PrincipalCoordinate, PrincipalCoordinate)>,
}

impl PrincipalHasse {
    pub fn r_max(&self) -> u32 {
        self.r_max
    }

    pub fn elements(&self) -> &[PrincipalCoordinate] {
        &self.elements
    }

    pub fn sequence(&self, c: PrincipalCoordinate) -> &AdmissibleSequence {
        &self.sequences[&c]
    }

    pub fn arrows(&self) -> &BTreeSet<(PrincipalCoordinate, PrincipalCoordinate)> {
        &self.arrows
    }

    pub fn translation(&self, c: PrincipalCoordinate) -> Option<PrincipalCoordinate> {
        (c.r > 1).then(|| PrincipalCoordinate { r: c.r - 1, x: c.x })
    }

    pub fn precedes(&self, a: PrincipalCoordinate, b: PrincipalCoordinate) -> bool {
        compare_tight(&self.sequences[&a], &self.sequences[&b]).expect("principal sequences are tight")
    }
}

pub fn principal_hasse(q: &ValuedQuiver, r_max: u32) -> Result<PrincipalHasse> {
    let mut elements = Vec::new();
    let mut sequences = BTreeMap::new();
    for r in 1..=r_max {
        for &x in q.vertices() {
            let c = PrincipalCoordinate::new(r, x)?;
            sequences.insert(c, principal_sequence(q, c)?);
            elements.push(c);
        }
    }
    let mut hasse = PrincipalHasse { r_max, elements, sequences, arrows: BTreeSet::new() };
    let arrows = covering_pairs(&hasse.elements, |a, b| hasse.precedes(*a, *b))
        .into_iter()
        .map(|(a, b)| (hasse.elements[a], hasse.elements[b]))
        .collect();
    hasse.arrows = arrows;
    Ok(hasse)
}

/// Outcome of comparing principal sequences with the translation quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    /// `ψ` is an order isomorphism between the truncations.
    pub order_isomorphism: bool,
    /// `None` when the quiver has a bypass and the check does not apply.
    pub quiver_isomorphism: Option<bool>,
    pub pairs_checked: usize,
    pub mismatches: Vec<String>,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.order_isomorphism && self.quiver_isomorphism != Some(false)
    }
}

/// Checks that `ψ` is an isomorphism of posets, and, when no arrow has a
/// bypass, an isomorphism of translation quivers `H(𝔓) → ℕ(Γ, Λ^op)`.
pub fn verify_principal_correspondence(q: &ValuedQuiver, r_max: u32) -> Result<CorrespondenceReport> {
    let hasse = principal_hasse(q, r_max)?;
    let slice = build_slice(q, r_max.saturating_sub(1));
    let mut mismatches = Vec::new();
    let mut pairs = 0;
    for &a in hasse.elements() {
        for &b in hasse.elements() {
            pairs += 1;
            let by_sequences = hasse.precedes(a, b);
            let by_multiplicity = precedes(hasse.sequence(a), hasse.sequence(b))?;
            let by_slice = slice.leq(psi(a), psi(b));
            if by_sequences != by_slice || by_sequences != by_multiplicity {
                mismatches.push(format!("order {a} vs {b}: sequences {by_sequences}, slice {by_slice}"));
            }
        }
    }
    let order_isomorphism = mismatches.is_empty();

    let quiver_isomorphism = if q.has_bypass() {
        None
    } else {
        let before = mismatches.len();
        let mapped: BTreeSet<(LevelVertex, LevelVertex)> =
            hasse.arrows().iter().map(|&(a, b)| (psi(a), psi(b))).collect();
        for extra in mapped.symmetric_difference(slice.arrows()) {
            mismatches.push(format!("arrow {} -> {} present on one side only", extra.0, extra.1));
        }
        for &c in hasse.elements() {
            if hasse.translation(c).map(psi) != slice.translation(psi(c)) {
                mismatches.push(format!("translation of {c} does not commute with ψ"));
            }
        }
        if !slice.translation_axiom_holds() {
            mismatches.push("slice violates the translation axiom".into());
        }
        Some(mismatches.len() == before)
    };

    Ok(CorrespondenceReport { order_isomorphism, quiver_isomorphism, pairs_checked: pairs, mismatches })
}
