//! Representations over `ℚ` of symmetrically valued quivers and the reflection functors.
//!
//! An arrow `a : i -> j` with valuation `b` carries a matrix of shape
//! `dim V_j × (b · dim V_i)`, the map `f_a : B ⊗ V_i -> V_j`. The basis of
//! `B ⊗ V_i` is lexicographic with the bimodule index major, so column
//! `k · dim V_i + t` is `e_k ⊗ v_t`.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::knitting::DimVector;
use crate::linalg::{rat, Matrix};
use crate::quiver::ValuedQuiver;
use crate::sequences::AdmissibleSequence;
use crate::Vertex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    quiver: ValuedQuiver,
    dims: BTreeMap<Vertex, usize>,
    maps: BTreeMap<(Vertex, Vertex), Matrix>,
}

pub(crate) fn require_symmetric(q: &ValuedQuiver) -> Result<()> {
    match q.graph().symmetry_defect() {
        Some((i, j)) => Err(Error::NonSymmetricValuation(i, j)),
        None => Ok(()),
    }
}

impl Representation {
    /// Missing dimensions default to 0 and missing arrow maps to zero matrices.
    pub fn new(
        q: &ValuedQuiver,
        dims: BTreeMap<Vertex, usize>,
        mut maps: BTreeMap<(Vertex, Vertex), Matrix>,
    ) -> Result<Self> {
        require_symmetric(q)?;
        for &v in dims.keys() {
            q.check_vertex(v)?;
        }
        let dims: BTreeMap<Vertex, usize> =
            q.vertices().iter().map(|&v| (v, dims.get(&v).copied().unwrap_or(0))).collect();
        let arrows = q.arrows();
        if let Some(&(s, e)) = maps.keys().find(|k| !arrows.contains(k)) {
            return Err(Error::ShapeMismatch(format!("{s}->{e} is not an arrow")));
        }
        for (s, e) in arrows {
            let shape = (dims[&e], q.graph().b(s, e) as usize * dims[&s]);
            let m = maps.entry((s, e)).or_insert_with(|| Matrix::zeros(shape.0, shape.1));
            if (m.rows(), m.cols()) != shape {
                return Err(Error::ShapeMismatch(format!(
                    "map {s}->{e} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    shape.0,
                    shape.1
                )));
            }
        }
        Ok(Representation { quiver: q.clone(), dims, maps })
    }

    pub fn zero(q: &ValuedQuiver) -> Result<Self> {
        Representation::new(q, BTreeMap::new(), BTreeMap::new())
    }

    /// `L_x`.
    pub fn simple(q: &ValuedQuiver, x: Vertex) -> Result<Self> {
        q.check_vertex(x)?;
        Representation::new(q, BTreeMap::from([(x, 1)]), BTreeMap::new())
    }

    /// `P_x`: `V_z` has one summand `B_p` per path `p : x -> z`, where `B_p`
    /// is the tensor product of the bimodules along `p`. Each arrow maps
    /// `B_a ⊗ B_p` identically onto the summand of the extended path.
    pub fn projective(q: &ValuedQuiver, x: Vertex) -> Result<Self> {
        require_symmetric(q)?;
        q.check_vertex(x)?;
        // basis of V_z: (path, coefficient indices, outermost arrow first)
        let mut bases: BTreeMap<Vertex, Vec<(Vec<Vertex>, Vec<usize>)>> = BTreeMap::new();
        let mut stack = vec![(vec![x], Vec::new())];
        while let Some((path, coeffs)) = stack.pop() {
            let z = *path.last().unwrap();
            for y in q.successors(z) {
                let b = q.graph().b(y, z) as usize;
                for k in 0..b {
                    let mut p = path.clone();
                    p.push(y);
                    let mut c = vec![k];
                    c.extend_from_slice(&coeffs);
                    stack.push((p, c));
                }
            }
            bases.entry(z).or_default().push((path, coeffs));
        }
        for basis in bases.values_mut() {
            basis.sort();
        }
        let dims: BTreeMap<Vertex, usize> = bases.iter().map(|(&v, b)| (v, b.len())).collect();
        let mut maps = BTreeMap::new();
        for (s, e) in q.arrows() {
            let (Some(src), Some(dst)) = (bases.get(&s), bases.get(&e)) else { continue };
            let b = q.graph().b(e, s) as usize;
            let mut m = Matrix::zeros(dst.len(), b * src.len());
            for (t, (path, coeffs)) in src.iter().enumerate() {
                for k in 0..b {
                    let mut p = path.clone();
                    p.push(e);
                    let mut c = vec![k];
                    c.extend_from_slice(coeffs);
                    let row = dst.binary_search(&(p, c)).expect("extended path is a basis element");
                    m.set(row, k * src.len() + t, rat(1));
                }
            }
            maps.insert((s, e), m);
        }
        Representation::new(q, dims, maps)
    }

    /// Entries drawn uniformly from `-2..=2`.
    pub fn random<R: Rng>(q: &ValuedQuiver, dims: &BTreeMap<Vertex, usize>, rng: &mut R) -> Result<Self> {
        let mut maps = BTreeMap::new();
        for (s, e) in q.arrows() {
            let (ds, de) = (dims.get(&s).copied().unwrap_or(0), dims.get(&e).copied().unwrap_or(0));
            let cols = q.graph().b(s, e) as usize * ds;
            let mut m = Matrix::zeros(de, cols);
            for r in 0..de {
                for c in 0..cols {
                    m.set(r, c, rat(rng.gen_range(-2..=2)));
                }
            }
            maps.insert((s, e), m);
        }
        Representation::new(q, dims.clone(), maps)
    }

    pub fn quiver(&self) -> &ValuedQuiver {
        &self.quiver
    }

    pub fn dim(&self, v: Vertex) -> usize {
        self.dims.get(&v).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &BTreeMap<Vertex, usize> {
        &self.dims
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector::from_map(self.dims.iter().map(|(&v, &d)| (v, d as u64)).collect())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, s: Vertex, e: Vertex) -> Option<&Matrix> {
        self.maps.get(&(s, e))
    }

    pub fn maps(&self) -> &BTreeMap<(Vertex, Vertex), Matrix> {
        &self.maps
    }

    fn b(&self, u: Vertex, v: Vertex) -> usize {
        self.quiver.graph().b(u, v) as usize
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if self.quiver != other.quiver {
            return Err(Error::BaseMismatch);
        }
        let dims = self.dims.iter().map(|(&v, &d)| (v, d + other.dim(v))).collect();
        let mut maps = BTreeMap::new();
        for (&(s, e), m) in &self.maps {
            let n = &other.maps[&(s, e)];
            let b = self.b(s, e);
            let (d1, d2) = (self.dim(s), other.dim(s));
            // interleave the column blocks so the result keeps the lexicographic basis
            let mut blocks = Vec::with_capacity(b);
            for k in 0..b {
                blocks.push(Matrix::block_diagonal(&m.col_block(k * d1, d1), &n.col_block(k * d2, d2)));
            }
            maps.insert((s, e), Matrix::hstack(self.dim(e) + other.dim(e), &blocks));
        }
        Representation::new(&self.quiver, dims, maps)
    }

    /// The incoming map `h : ⊕_i B ⊗ V_{y_i} -> V_x` at a sink, predecessors ascending.
    pub fn incoming_map(&self, x: Vertex) -> Result<Matrix> {
        if !self.quiver.is_sink(x) {
            return Err(Error::NotASink(x));
        }
        let parts: Vec<Matrix> = self.quiver.predecessors(x).iter().map(|&y| self.maps[&(y, x)].clone()).collect();
        Ok(Matrix::hstack(self.dim(x), &parts))
    }

    /// `F_x^+`: replaces `V_x` by `ker h` and reverses the arrows at `x`.
    pub fn reflect_plus(&self, x: Vertex) -> Result<Representation> {
        self.quiver.check_vertex(x)?;
        let h = self.incoming_map(x)?;
        let kernel = h.kernel();
        let w = kernel.cols();
        let target = self.quiver.reflect(x)?;
        let mut maps: BTreeMap<_, _> = self.maps.iter().filter(|(&(_, e), _)| e != x).map(|(k, m)| (*k, m.clone())).collect();
        let mut offset = 0;
        for y in self.quiver.predecessors(x) {
            let (b, dy) = (self.b(y, x), self.dim(y));
            let j = kernel.row_block(offset, b * dy);
            offset += b * dy;
            // j : W_x -> B ⊗ V_y; its adjoint B ⊗ W_x -> V_y collects the row blocks side by side
            let blocks: Vec<Matrix> = (0..b).map(|k| j.row_block(k * dy, dy)).collect();
            maps.insert((x, y), Matrix::hstack(dy, &blocks));
        }
        let mut dims = self.dims.clone();
        dims.insert(x, w);
        Representation::new(&target, dims, maps)
    }

    /// `F_x^-`: replaces `V_x` by the cokernel of the outgoing map and reverses the arrows at `x`.
    pub fn reflect_minus(&self, x: Vertex) -> Result<Representation> {
        self.quiver.check_vertex(x)?;
        if !self.quiver.is_source(x) {
            return Err(Error::NotASource(x));
        }
        let dx = self.dim(x);
        let succs = self.quiver.successors(x);
        let mut parts = Vec::new();
        for &y in &succs {
            let (b, f) = (self.b(x, y), &self.maps[&(x, y)]);
            // adjoint V_x -> B ⊗ V_y: stack the column blocks of f
            for k in 0..b {
                parts.push(f.col_block(k * dx, dx));
            }
        }
        let stacked = Matrix::vstack(dx, &parts);
        let projection = stacked.left_kernel();
        let c = projection.rows();
        let target = self.quiver.reflect(x)?;
        let mut maps: BTreeMap<_, _> = self.maps.iter().filter(|(&(s, _), _)| s != x).map(|(k, m)| (*k, m.clone())).collect();
        let mut offset = 0;
        for &y in &succs {
            let n = self.b(x, y) * self.dim(y);
            maps.insert((y, x), projection.col_block(offset, n));
            offset += n;
        }
        let mut dims = self.dims.clone();
        dims.insert(x, c);
        Representation::new(&target, dims, maps)
    }

    /// `F(S) = F_{x_s}^+ ⋯ F_{x_1}^+`.
    pub fn apply_sequence(&self, s: &AdmissibleSequence) -> Result<Representation> {
        if s.base() != &self.quiver {
            return Err(Error::BaseMismatch);
        }
        self.apply_sinks(s.verts())
    }

    pub(crate) fn apply_sinks(&self, verts: &[Vertex]) -> Result<Representation> {
        let mut rep = self.clone();
        for &x in verts {
            rep = rep.reflect_plus(x)?;
        }
        Ok(rep)
    }

    /// `Φ⁺` along the complete sequence of the current orientation.
    pub fn coxeter_plus(&self) -> Result<Representation> {
        self.apply_sinks(&self.quiver.complete_sequence())
    }

    /// `Φ⁻`: reflects at sources along the complete sequence read backwards.
    pub fn coxeter_minus(&self) -> Result<Representation> {
        let mut rep = self.clone();
        for &x in self.quiver.complete_sequence().iter().rev() {
            rep = rep.reflect_minus(x)?;
        }
        Ok(rep)
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.dims.iter().map(|(v, d)| format!("{v}={d}")).collect();
        writeln!(f, "dim: {}", dims.join(" "))?;
        for ((s, e), m) in &self.maps {
            if m.rows() > 0 && m.cols() > 0 {
                writeln!(f, "map: {s}->{e} = {m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn dims(r: &Representation) -> Vec<usize> {
        r.dims().values().copied().collect()
    }

    fn seq(q: &ValuedQuiver, v: &[Vertex]) -> AdmissibleSequence {
        AdmissibleSequence::new(q, v).unwrap()
    }

    fn k2_generic() -> Representation {
        let q = fixtures::k2();
        let m = Matrix::from_i64(&[&[1, 0, 0, 1], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
        Representation::new(&q, BTreeMap::from([(1, 2), (2, 3)]), BTreeMap::from([((1, 2), m)])).unwrap()
    }

    #[test]
    fn projectives() {
        let p1 = Representation::projective(&fixtures::a3(), 1).unwrap();
        assert_eq!(dims(&p1), [1, 1, 1]);
        assert_eq!(p1.map(1, 2).unwrap(), &Matrix::identity(1));
        assert_eq!(p1.map(2, 3).unwrap(), &Matrix::identity(1));
        let p3 = Representation::projective(&fixtures::a3(), 3).unwrap();
        assert_eq!(p3, Representation::simple(&fixtures::a3(), 3).unwrap());
        let k = Representation::projective(&fixtures::k2(), 1).unwrap();
        assert_eq!(dims(&k), [1, 2]);
        assert_eq!(k.map(1, 2).unwrap(), &Matrix::identity(2));
        assert_eq!(Representation::projective(&fixtures::k2(), 2).unwrap(), Representation::simple(&fixtures::k2(), 2).unwrap());
    }

    #[test]
    fn non_symmetric_rejected() {
        assert_eq!(Representation::projective(&fixtures::b2(), 1), Err(Error::NonSymmetricValuation(1, 2)));
    }

    #[test]
    fn shape_checked() {
        let q = fixtures::k2();
        let bad = Representation::new(&q, BTreeMap::from([(1, 1), (2, 1)]), BTreeMap::from([((1, 2), Matrix::identity(1))]));
        assert!(matches!(bad, Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn reflect_plus_examples() {
        let q = fixtures::a3();
        let p1 = Representation::projective(&q, 1).unwrap();
        assert_eq!(dims(&p1.reflect_plus(3).unwrap()), [1, 1, 0]);
        let l2 = Representation::simple(&q, 2).unwrap().reflect_plus(3).unwrap();
        assert_eq!(dims(&l2), [0, 1, 1]);
        assert!(!l2.map(3, 2).unwrap().is_zero());
        assert_eq!(dims(&k2_generic().reflect_plus(2).unwrap()), [2, 1]);
        assert_eq!(p1.reflect_plus(2), Err(Error::NotASink(2)));
    }

    #[test]
    fn reflect_minus_inverts_reflect_plus() {
        let q = fixtures::a3();
        let q1 = Representation::projective(&q, 1).unwrap().reflect_plus(3).unwrap();
        assert_eq!(dims(&q1.reflect_minus(3).unwrap()), [1, 1, 1]);
        let r = k2_generic();
        let back = r.reflect_plus(2).unwrap().reflect_minus(2).unwrap();
        assert_eq!(back.dims(), r.dims());
        assert_eq!(back.quiver(), r.quiver());
        assert_eq!(r.reflect_minus(2), Err(Error::NotASource(2)));
    }

    #[test]
    fn zero_stays_zero() {
        let q = fixtures::a3();
        let z = Representation::zero(&q).unwrap();
        assert!(z.reflect_minus(1).unwrap().is_zero());
        assert!(z.coxeter_plus().unwrap().is_zero());
    }

    #[test]
    fn sequences_annihilate() {
        let q = fixtures::a3();
        let p1 = Representation::projective(&q, 1).unwrap();
        assert!(p1.apply_sequence(&seq(&q, &[3, 2, 1])).unwrap().is_zero());
        let l2 = Representation::simple(&q, 2).unwrap();
        assert!(l2.apply_sequence(&seq(&q, &[3, 2, 3])).unwrap().is_zero());
        assert_eq!(dims(&l2.apply_sequence(&seq(&q, &[3])).unwrap()), [0, 1, 1]);
        assert_eq!(l2.apply_sequence(&AdmissibleSequence::empty(&q)).unwrap(), l2);
        assert_eq!(l2.apply_sequence(&seq(&fixtures::a2(), &[2])), Err(Error::BaseMismatch));
    }

    #[test]
    fn coxeter_functor_examples() {
        let q = fixtures::a3();
        for x in 1..=3 {
            assert!(Representation::projective(&q, x).unwrap().coxeter_plus().unwrap().is_zero());
        }
        let l2 = Representation::simple(&q, 2).unwrap().coxeter_plus().unwrap();
        assert_eq!(dims(&l2), [0, 0, 1]);
        assert_eq!(l2.quiver(), &q);
        assert_eq!(dims(&k2_generic().coxeter_plus().unwrap()), [0, 1]);
    }

    #[test]
    fn coxeter_minus_of_projectives_on_k2() {
        let q = fixtures::k2();
        let mut r = Representation::projective(&q, 1).unwrap();
        for expected in [[3, 4], [5, 6], [7, 8]] {
            r = r.coxeter_minus().unwrap();
            assert_eq!(dims(&r), expected);
        }
        let back = r.coxeter_plus().unwrap();
        assert_eq!(dims(&back), [5, 6]);
    }

    #[test]
    fn direct_sum_keeps_blocks() {
        let q = fixtures::k2();
        let a = Representation::projective(&q, 1).unwrap();
        let s = a.direct_sum(&k2_generic()).unwrap();
        assert_eq!(dims(&s), [3, 5]);
        assert_eq!(dims(&s.coxeter_plus().unwrap()), [0, 1]);
    }

    #[test]
    fn random_is_reproducible() {
        let q = fixtures::a3();
        let d = BTreeMap::from([(1, 2), (2, 1), (3, 2)]);
        let a = Representation::random(&q, &d, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        let b = Representation::random(&q, &d, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        assert_eq!(a, b);
    }
}
