//! Dimension vectors and the knitting of the preprojective component. Valid for any valuation.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::quiver::ValuedQuiver;
use crate::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DimVector(BTreeMap<Vertex, u64>);

impl DimVector {
    pub fn zero(q: &ValuedQuiver) -> Self {
        DimVector(q.vertices().iter().map(|&v| (v, 0)).collect())
    }

    pub fn from_map(map: BTreeMap<Vertex, u64>) -> Self {
        DimVector(map)
    }

    /// Entries listed by ascending vertex id of `q`.
    pub fn from_entries(q: &ValuedQuiver, entries: &[u64]) -> Option<Self> {
        (entries.len() == q.len()).then(|| DimVector(q.vertices().iter().copied().zip(entries.iter().copied()).collect()))
    }

    pub fn get(&self, v: Vertex) -> u64 {
        self.0.get(&v).copied().unwrap_or(0)
    }

    pub fn set(&mut self, v: Vertex, d: u64) {
        self.0.insert(v, d);
    }

    pub fn as_map(&self) -> &BTreeMap<Vertex, u64> {
        &self.0
    }

    pub fn entries(&self) -> Vec<u64> {
        self.0.values().copied().collect()
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.values().all(|&d| d == 0)
    }

    /// `{i : d_i ≠ 0}`.
    pub fn support(&self) -> Vec<Vertex> {
        self.0.iter().filter(|(_, &d)| d > 0).map(|(&v, _)| v).collect()
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.values().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn reflected_entry(q: &ValuedQuiver, x: Vertex, d: &DimVector) -> Result<u64> {
    let sum: u64 = q.graph().neighbors(x).map(|y| q.graph().b(x, y) as u64 * d.get(y)).sum();
    sum.checked_sub(d.get(x)).ok_or(Error::KillsAtX(x))
}

/// `d'_x = Σ_{y -> x} b_xy d_y − d_x` at a sink.
pub fn dim_reflect(q: &ValuedQuiver, x: Vertex, d: &DimVector) -> Result<DimVector> {
    q.check_vertex(x)?;
    if !q.is_sink(x) {
        return Err(Error::NotASink(x));
    }
    let mut out = d.clone();
    out.set(x, reflected_entry(q, x, d)?);
    Ok(out)
}

/// The same count at a source.
pub fn dim_reflect_minus(q: &ValuedQuiver, x: Vertex, d: &DimVector) -> Result<DimVector> {
    q.check_vertex(x)?;
    if !q.is_source(x) {
        return Err(Error::NotASource(x));
    }
    let mut out = d.clone();
    out.set(x, reflected_entry(q, x, d)?);
    Ok(out)
}

/// Dimension reflections at sources along the complete sequence read backwards.
pub fn dim_coxeter_minus(q: &ValuedQuiver, d: &DimVector) -> Result<DimVector> {
    let mut cur = q.clone();
    let mut d = d.clone();
    for &x in q.complete_sequence().iter().rev() {
        d = dim_reflect_minus(&cur, x, &d)?;
        cur = cur.reflect(x)?;
    }
    Ok(d)
}

/// Dimension reflections at sinks along the complete sequence.
pub fn dim_coxeter_plus(q: &ValuedQuiver, d: &DimVector) -> Result<DimVector> {
    let mut cur = q.clone();
    let mut d = d.clone();
    for x in q.complete_sequence() {
        d = dim_reflect(&cur, x, &d)?;
        cur = cur.reflect(x)?;
    }
    Ok(d)
}

/// `dim P_x`: sum over paths `x -> z` of the product of `b_{e(a) s(a)}` along the path.
pub fn projective_dims(q: &ValuedQuiver, x: Vertex) -> Result<DimVector> {
    q.check_vertex(x)?;
    let mut d = DimVector::zero(q);
    for z in q.topological_order() {
        let v = if z == x {
            1
        } else {
            q.predecessors(z).iter().map(|&y| q.graph().b(z, y) as u64 * d.get(y)).sum()
        };
        d.set(z, v);
    }
    Ok(d)
}

/// Names `(Φ⁻)^ν P_x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PreprojectiveTag {
    pub nu: u32,
    pub x: Vertex,
}

impl fmt::Display for PreprojectiveTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.nu, self.x)
    }
}

/// `(Φ⁻)^ν P_x` for `ν < r_max`, grouped by `ν` and ordered by the complete
/// sequence inside each group. Modules that have died are dropped.
pub fn knit_preprojectives(q: &ValuedQuiver, r_max: u32) -> Vec<(PreprojectiveTag, DimVector)> {
    let order = q.complete_sequence();
    let mut alive: Vec<(Vertex, DimVector)> =
        order.iter().map(|&x| (x, projective_dims(q, x).expect("vertex of q"))).collect();
    let mut out = Vec::new();
    for nu in 0..r_max {
        if nu > 0 {
            alive = alive
                .into_iter()
                .filter_map(|(x, d)| dim_coxeter_minus(q, &d).ok().filter(|d| !d.is_zero()).map(|d| (x, d)))
                .collect();
        }
        out.extend(alive.iter().map(|(x, d)| (PreprojectiveTag { nu, x: *x }, d.clone())));
    }
    out
}
