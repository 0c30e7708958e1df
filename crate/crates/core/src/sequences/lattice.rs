//! The order `⪯` on classes of admissible sequences and its lattice operations.
//!
//! Both operations act on canonical layers and re-realize the result, so the
//! returned sequence is always the canonical representative of its class.

use crate::error::{Error, Result};
use crate::filters::Filter;
use crate::sequences::canonical::{canonical_form, realize};
use crate::sequences::AdmissibleSequence;

/// `S ⪯ T` iff `m_S <= m_T` pointwise.
pub fn precedes(s: &AdmissibleSequence, t: &AdmissibleSequence) -> Result<bool> {
    s.check_same_base(t)?;
    Ok(s.multiplicity().le(&t.multiplicity()))
}

/// `S ∧ T`: layerwise intersection of supports, cut at the first empty layer.
pub fn meet(s: &AdmissibleSequence, t: &AdmissibleSequence) -> Result<AdmissibleSequence> {
    s.check_same_base(t)?;
    let (cs, ct) = (canonical_form(s).supports(), canonical_form(t).supports());
    let layers: Vec<Filter> = cs
        .iter()
        .zip(&ct)
        .map(|(a, b)| a.intersection(b))
        .take_while(|f| !f.is_empty())
        .collect();
    realize(s.base(), &layers)
}

/// `S ∨ T`: layerwise union of supports, the longer form supplying the tail.
pub fn join(s: &AdmissibleSequence, t: &AdmissibleSequence) -> Result<AdmissibleSequence> {
    s.check_same_base(t)?;
    let (cs, ct) = (canonical_form(s).supports(), canonical_form(t).supports());
    let n = cs.len().max(ct.len());
    let empty = Filter::empty();
    let layers: Vec<Filter> =
        (0..n).map(|i| cs.get(i).unwrap_or(&empty).union(ct.get(i).unwrap_or(&empty))).collect();
    realize(s.base(), &layers)
}

/// For `R ⪯ S`, the sequence `S'` on `Λ^R` with `S ~ R S'`, unique up to `~`.
pub fn remainder(s: &AdmissibleSequence, prefix: &AdmissibleSequence) -> Result<AdmissibleSequence> {
    s.check_same_base(prefix)?;
    let diff = s.multiplicity().checked_sub(&prefix.multiplicity()).ok_or(Error::NotAPrefix)?;
    AdmissibleSequence::from_multiplicity(&prefix.end_quiver(), &diff)
}
