//! The Cartan matrix of a valued graph and reduced words in its Weyl group.
//!
//! Simple reflections act on the root lattice by `σ_i(α_j) = α_j − a_ij α_i`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::quiver::{ValuedGraph, ValuedQuiver};
use crate::Vertex;

pub type IntMatrix = Vec<Vec<BigInt>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    vertices: Vec<Vertex>,
    a: Vec<Vec<i64>>,
    d: Vec<u64>,
}

/// `a_ii = 2`, `a_ij = −b_ij`.
pub fn cartan_matrix(g: &ValuedGraph) -> CartanMatrix {
    let vertices = g.vertices().to_vec();
    let a = vertices
        .iter()
        .map(|&i| vertices.iter().map(|&j| if i == j { 2 } else { -(g.b(i, j) as i64) }).collect())
        .collect();
    let d = vertices.iter().map(|&v| g.d(v) as u64).collect();
    CartanMatrix { vertices, a, d }
}

impl CartanMatrix {
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn symmetrizer(&self) -> &[u64] {
        &self.d
    }

    pub fn index_of(&self, v: Vertex) -> Result<usize> {
        self.vertices.binary_search(&v).map_err(|_| Error::UnknownVertex(v))
    }

    pub fn entry(&self, i: Vertex, j: Vertex) -> Result<i64> {
        Ok(self.a[self.index_of(i)?][self.index_of(j)?])
    }

    /// `D·A`.
    pub fn symmetrized(&self) -> IntMatrix {
        self.a
            .iter()
            .zip(&self.d)
            .map(|(row, &d)| row.iter().map(|&x| BigInt::from(d) * x).collect())
            .collect()
    }

    pub fn is_symmetrizable(&self) -> bool {
        let s = self.symmetrized();
        (0..s.len()).all(|i| (0..s.len()).all(|j| s[i][j] == s[j][i]))
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .a
            .iter()
            .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn int_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..n).map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum()).collect())
        .collect()
}

pub fn int_transpose(a: &IntMatrix) -> IntMatrix {
    let n = a.first().map_or(0, Vec::len);
    (0..n).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Matrix of `σ_i` in the basis of simple roots.
pub fn simple_reflection(a: &CartanMatrix, i: Vertex) -> Result<IntMatrix> {
    let k = a.index_of(i)?;
    let mut m = identity(a.vertices.len());
    for (j, entry) in m[k].iter_mut().enumerate() {
        *entry -= a.a[k][j];
    }
    Ok(m)
}

/// `σ_{i₁} σ_{i₂} ⋯ σ_{i_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Vertex>);

impl Word {
    pub fn letters(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn power(&self, m: usize) -> Word {
        Word(self.0.repeat(m))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Tracks a product `w` and whether every letter so far has increased its length.
struct ReducedTracker<'a> {
    a: &'a CartanMatrix,
    product: IntMatrix,
    reduced: bool,
}

impl<'a> ReducedTracker<'a> {
    fn new(a: &'a CartanMatrix) -> Self {
        ReducedTracker { a, product: identity(a.vertices.len()), reduced: true }
    }

    /// `ℓ(w σ_i) > ℓ(w)` iff `w(α_i)` is a positive root.
    fn push(&mut self, letter: Vertex) -> Result<bool> {
        let i = self.a.index_of(letter)?;
        if self.product.iter().any(|row| row[i].is_negative()) {
            self.reduced = false;
        }
        // column j of w σ_i is w(α_j) − a_ij w(α_i)
        let row_i = &self.a.a[i];
        for row in self.product.iter_mut() {
            let wi = row[i].clone();
            for (j, entry) in row.iter_mut().enumerate() {
                if row_i[j] != 0 {
                    *entry -= &wi * row_i[j];
                }
            }
        }
        Ok(self.reduced)
    }
}

pub fn is_reduced(a: &CartanMatrix, w: &Word) -> Result<bool> {
    let mut t = ReducedTracker::new(a);
    for &x in w.letters() {
        t.push(x)?;
    }
    Ok(t.reduced)
}

/// The product of a word as a matrix.
pub fn word_matrix(a: &CartanMatrix, w: &Word) -> Result<IntMatrix> {
    let mut t = ReducedTracker::new(a);
    for &x in w.letters() {
        t.push(x)?;
    }
    Ok(t.product)
}

/// The complete admissible sequence `x₁, …, x_n` of `q` as a word.
pub fn coxeter_word(q: &ValuedQuiver) -> Word {
    Word(q.complete_sequence())
}

/// `(m, is_reduced(c^m))` for `m = 1..=m_max`.
pub fn coxeter_powers_reduced(a: &CartanMatrix, q: &ValuedQuiver, m_max: u32) -> Result<Vec<(u32, bool)>> {
    let c = coxeter_word(q);
    let mut t = ReducedTracker::new(a);
    let mut out = Vec::with_capacity(m_max as usize);
    for m in 1..=m_max {
        if t.reduced {
            for &x in c.letters() {
                t.push(x)?;
            }
        }
        out.push((m, t.reduced));
    }
    Ok(out)
}
