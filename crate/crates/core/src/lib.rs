//! Computations with valued quivers and (+)-admissible sequences.
//!
//! The crate covers the combinatorial side (sinks, reflections `σ_x`, the
//! vertex poset and its filters, admissible sequences up to equivalence,
//! canonical forms, the lattice of classes, principal sequences and the
//! translation quiver `ℕ(Γ, Λ^op)`), the representation side over the
//! rationals (reflection functors, projectives, Coxeter functors and
//! shortest annihilating sequences), dimension-vector knitting for arbitrary
//! valuations, and reduced words in the Weyl group of the associated
//! symmetrizable Cartan matrix.

pub mod annihilator;
pub mod dot;
pub mod error;
pub mod filters;
pub mod fixtures;
pub mod io;
pub mod knitting;
pub mod linalg;
pub mod poset;
pub mod quiver;
pub mod representation;
pub mod sequences;
pub mod translation;
pub mod verify;
pub mod weyl;

/// Vertex identifier. Ids are arbitrary small integers; order is by id.
pub type Vertex = u32;

pub use error::{Error, Result, Violation, Violations};
pub use filters::Filter;
pub use knitting::{DimVector, PreprojectiveTag};
pub use linalg::Matrix;
pub use poset::VertexPoset;
pub use quiver::{RawQuiver, ValuedGraph, ValuedQuiver};
pub use representation::Representation;
pub use sequences::{AdmissibleSequence, CanonicalForm, MultiplicityVector, PrincipalCoordinate};
pub use weyl::{CartanMatrix, Word};
