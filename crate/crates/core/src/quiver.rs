//! Valued graphs, acyclic orientations and the reflections `σ_x`.
//!
//! Vertices are identified by small integers ([`Vertex`]). A [`ValuedGraph`]
//! carries the valuation `b_ij` on every edge together with the symmetrizer
//! weights `d_i`; a [`ValuedQuiver`] adds an acyclic orientation. All values
//! are immutable once validated, so a quiver is cheap to clone (the graph is
//! shared) and safe to send across threads.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::error::{Error, Result, Violation, Violations};
use crate::poset::VertexPoset;
use crate::Vertex;

/// An edge `{i, j}` with `i < j` and its two valuation entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub i: Vertex,
    pub j: Vertex,
    pub b_ij: u32,
    pub b_ji: u32,
}

impl Edge {
    pub fn other(&self, v: Vertex) -> Vertex {
        if v == self.i {
            self.j
        } else {
            self.i
        }
    }

    /// `b_{from,to}` for the ordered pair.
    pub fn b(&self, from: Vertex, to: Vertex) -> u32 {
        if from == self.i && to == self.j {
            self.b_ij
        } else {
            self.b_ji
        }
    }
}

/// Unvalidated quiver data, as read from a file or assembled by hand.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawQuiver {
    pub vertices: Vec<Vertex>,
    pub weights: Vec<(Vertex, u32)>,
    /// `(i, j, b_ij, b_ji)`.
    pub edges: Vec<(Vertex, Vertex, u32, u32)>,
    /// `(start, end)`.
    pub arrows: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValuedGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    weights: BTreeMap<Vertex, u32>,
    /// vertex -> (neighbor, edge index)
    adjacency: BTreeMap<Vertex, Vec<(Vertex, usize)>>,
    labels: BTreeMap<Vertex, String>,
}

impl ValuedGraph {
    /// Checks every graph-level invariant and collects all violations.
    pub fn new(
        vertices: &[Vertex],
        edges: &[(Vertex, Vertex, u32, u32)],
        weights: &[(Vertex, u32)],
    ) -> std::result::Result<Self, Violations> {
        let mut violations = Vec::new();

        let mut vset = BTreeSet::new();
        for &v in vertices {
            if !vset.insert(v) {
                violations.push(Violation::DuplicateVertex(v));
            }
        }
        if vset.len() < 2 {
            violations.push(Violation::SingleVertex);
        }

        let mut d = BTreeMap::new();
        for &(v, w) in weights {
            if !vset.contains(&v) {
                violations.push(Violation::UnknownVertex(v));
            } else if w > 0 {
                d.insert(v, w);
            }
        }
        for &v in &vset {
            if !d.contains_key(&v) {
                violations.push(Violation::MissingWeight(v));
            }
        }

        let mut edge_map: BTreeMap<(Vertex, Vertex), Edge> = BTreeMap::new();
        for &(a, b, b_ab, b_ba) in edges {
            if a == b {
                violations.push(Violation::LoopEdge(a));
                continue;
            }
            let mut ok = true;
            for v in [a, b] {
                if !vset.contains(&v) {
                    violations.push(Violation::UnknownVertex(v));
                    ok = false;
                }
            }
            if !ok {
                continue;
            }
            let e = if a < b {
                Edge { i: a, j: b, b_ij: b_ab, b_ji: b_ba }
            } else {
                Edge { i: b, j: a, b_ij: b_ba, b_ji: b_ab }
            };
            if e.b_ij == 0 || e.b_ji == 0 {
                violations.push(Violation::ZeroValuation(e.i, e.j));
            }
            if let (Some(&di), Some(&dj)) = (d.get(&e.i), d.get(&e.j)) {
                if u64::from(di) * u64::from(e.b_ij) != u64::from(dj) * u64::from(e.b_ji) {
                    violations.push(Violation::SymmetrizabilityViolated(a, b));
                }
            }
            if edge_map.insert((e.i, e.j), e).is_some() {
                violations.push(Violation::DuplicateEdge(e.i, e.j));
            }
        }

        let vertices: Vec<Vertex> = vset.into_iter().collect();
        let edges: Vec<Edge> = edge_map.into_values().collect();
        let mut adjacency: BTreeMap<Vertex, Vec<(Vertex, usize)>> =
            vertices.iter().map(|&v| (v, Vec::new())).collect();
        for (k, e) in edges.iter().enumerate() {
            adjacency.entry(e.i).or_default().push((e.j, k));
            adjacency.entry(e.j).or_default().push((e.i, k));
        }
        for list in adjacency.values_mut() {
            list.sort_unstable();
        }

        let graph = ValuedGraph { vertices, edges, weights: d, adjacency, labels: BTreeMap::new() };
        if graph.vertices.len() >= 2 && !graph.is_connected_on(&graph.vertices) {
            violations.push(Violation::Disconnected);
        }
        if violations.is_empty() {
            Ok(graph)
        } else {
            Err(Violations(violations))
        }
    }

    pub fn with_labels(mut self, labels: BTreeMap<Vertex, String>) -> Self {
        self.labels = labels;
        self
    }

    pub fn label(&self, v: Vertex) -> String {
        self.labels.get(&v).cloned().unwrap_or_else(|| v.to_string())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.weights.contains_key(&v)
    }

    /// Symmetrizer weight `d_v`.
    pub fn d(&self, v: Vertex) -> u32 {
        self.weights[&v]
    }

    /// `b_ij`, zero when `i` and `j` are not adjacent.
    pub fn b(&self, i: Vertex, j: Vertex) -> u32 {
        self.edge_between(i, j).map_or(0, |k| self.edges[k].b(i, j))
    }

    pub fn edge_between(&self, i: Vertex, j: Vertex) -> Option<usize> {
        self.adjacency.get(&i)?.iter().find(|(n, _)| *n == j).map(|&(_, k)| k)
    }

    pub fn adjacent(&self, i: Vertex, j: Vertex) -> bool {
        self.edge_between(i, j).is_some()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency.get(&v).into_iter().flatten().map(|&(n, _)| n)
    }

    pub(crate) fn incident(&self, v: Vertex) -> &[(Vertex, usize)] {
        self.adjacency.get(&v).map_or(&[], Vec::as_slice)
    }

    /// True when `b_ij = b_ji` on every edge and every `d_i = 1`.
    pub fn is_symmetric(&self) -> bool {
        self.symmetry_defect().is_none()
    }

    pub(crate) fn symmetry_defect(&self) -> Option<(Vertex, Vertex)> {
        if let Some(e) = self.edges.iter().find(|e| e.b_ij != e.b_ji) {
            return Some((e.i, e.j));
        }
        self.weights.iter().find(|(_, &w)| w != 1).map(|(&v, _)| (v, v))
    }

    /// Whether the full subgraph on `set` is connected. The empty set counts as connected.
    pub fn is_connected_on<'a>(&self, set: impl IntoIterator<Item = &'a Vertex>) -> bool {
        let set: BTreeSet<Vertex> = set.into_iter().copied().collect();
        let Some(&start) = set.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for n in self.neighbors(v) {
                if set.contains(&n) && seen.insert(n) {
                    stack.push(n);
                }
            }
        }
        seen.len() == set.len()
    }
}

/// Direction of every edge: `forward[k]` means `edges[k].i -> edges[k].j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    forward: Vec<bool>,
}

impl Orientation {
    pub fn from_arrows(
        graph: &ValuedGraph,
        arrows: &[(Vertex, Vertex)],
    ) -> std::result::Result<Self, Violations> {
        let mut violations = Vec::new();
        let mut dir: Vec<Option<bool>> = vec![None; graph.edges.len()];
        for &(s, e) in arrows {
            match graph.edge_between(s, e) {
                None => violations.push(Violation::ArrowWithoutEdge(s, e)),
                Some(k) => {
                    if dir[k].is_some() {
                        violations.push(Violation::DoublyOrientedEdge(graph.edges[k].i, graph.edges[k].j));
                    }
                    dir[k] = Some(graph.edges[k].i == s);
                }
            }
        }
        for (k, d) in dir.iter().enumerate() {
            if d.is_none() {
                violations.push(Violation::UnorientedEdge(graph.edges[k].i, graph.edges[k].j));
            }
        }
        if violations.is_empty() {
            Ok(Orientation { forward: dir.into_iter().map(Option::unwrap).collect() })
        } else {
            Err(Violations(violations))
        }
    }

    pub fn arrows(&self, graph: &ValuedGraph) -> Vec<(Vertex, Vertex)> {
        let mut out: Vec<_> = graph
            .edges
            .iter()
            .zip(&self.forward)
            .map(|(e, &f)| if f { (e.i, e.j) } else { (e.j, e.i) })
            .collect();
        out.sort_unstable();
        out
    }
}

/// A connected valued graph with an orientation that has no oriented cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValuedQuiver {
    graph: Arc<ValuedGraph>,
    orientation: Orientation,
}

impl ValuedQuiver {
    /// Validates raw data, reporting every violation found.
    pub fn validate(raw: &RawQuiver) -> std::result::Result<Self, Violations> {
        let graph = ValuedGraph::new(&raw.vertices, &raw.edges, &raw.weights)?;
        Self::from_parts(Arc::new(graph), &raw.arrows)
    }

    pub fn from_parts(
        graph: Arc<ValuedGraph>,
        arrows: &[(Vertex, Vertex)],
    ) -> std::result::Result<Self, Violations> {
        let orientation = Orientation::from_arrows(&graph, arrows)?;
        let q = ValuedQuiver { graph, orientation };
        match q.find_cycle() {
            Some(cycle) => Err(Violations(vec![Violation::OrientedCycle(cycle)])),
            None => Ok(q),
        }
    }

    pub fn new(
        vertices: &[Vertex],
        edges: &[(Vertex, Vertex, u32, u32)],
        weights: &[(Vertex, u32)],
        arrows: &[(Vertex, Vertex)],
    ) -> std::result::Result<Self, Violations> {
        Self::validate(&RawQuiver {
            vertices: vertices.to_vec(),
            weights: weights.to_vec(),
            edges: edges.to_vec(),
            arrows: arrows.to_vec(),
        })
    }

    pub fn to_raw(&self) -> RawQuiver {
        RawQuiver {
            vertices: self.graph.vertices.clone(),
            weights: self.graph.weights.iter().map(|(&v, &w)| (v, w)).collect(),
            edges: self.graph.edges.iter().map(|e| (e.i, e.j, e.b_ij, e.b_ji)).collect(),
            arrows: self.arrows(),
        }
    }

    pub fn graph(&self) -> &ValuedGraph {
        &self.graph
    }

    pub fn shared_graph(&self) -> &Arc<ValuedGraph> {
        &self.graph
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn vertices(&self) -> &[Vertex] {
        self.graph.vertices()
    }

    pub fn len(&self) -> usize {
        self.graph.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.vertices.is_empty()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.graph.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    /// Same underlying valued graph (orientation may differ).
    pub fn same_graph(&self, other: &ValuedQuiver) -> bool {
        Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph
    }

    pub fn arrows(&self) -> Vec<(Vertex, Vertex)> {
        self.orientation.arrows(&self.graph)
    }

    fn points_away(&self, v: Vertex, k: usize) -> bool {
        let e = &self.graph.edges[k];
        self.orientation.forward[k] == (e.i == v)
    }

    /// Heads of the arrows starting at `v`, ascending.
    pub fn successors(&self, v: Vertex) -> Vec<Vertex> {
        self.graph.incident(v).iter().filter(|&&(_, k)| self.points_away(v, k)).map(|&(n, _)| n).collect()
    }

    /// Tails of the arrows ending at `v`, ascending.
    pub fn predecessors(&self, v: Vertex) -> Vec<Vertex> {
        self.graph.incident(v).iter().filter(|&&(_, k)| !self.points_away(v, k)).map(|&(n, _)| n).collect()
    }

    pub fn is_sink(&self, v: Vertex) -> bool {
        self.graph.incident(v).iter().all(|&(_, k)| !self.points_away(v, k))
    }

    pub fn is_source(&self, v: Vertex) -> bool {
        self.graph.incident(v).iter().all(|&(_, k)| self.points_away(v, k))
    }

    pub fn sinks(&self) -> Vec<Vertex> {
        self.vertices().iter().copied().filter(|&v| self.is_sink(v)).collect()
    }

    pub fn sources(&self) -> Vec<Vertex> {
        self.vertices().iter().copied().filter(|&v| self.is_source(v)).collect()
    }

    /// `σ_x`: reverse every arrow incident with `x`. Sinks and sources always
    /// give an acyclic result; any other vertex is checked.
    pub fn reflect(&self, x: Vertex) -> Result<ValuedQuiver> {
        self.check_vertex(x)?;
        let q = self.reflect_unchecked(x);
        if !self.is_sink(x) && !self.is_source(x) {
            if let Some(cycle) = q.find_cycle() {
                return Err(Error::CycleCreated { vertex: x, cycle });
            }
        }
        Ok(q)
    }

    pub(crate) fn reflect_unchecked(&self, x: Vertex) -> ValuedQuiver {
        let mut forward = self.orientation.forward.clone();
        for &(_, k) in self.graph.incident(x) {
            forward[k] = !forward[k];
        }
        ValuedQuiver { graph: Arc::clone(&self.graph), orientation: Orientation { forward } }
    }

    /// Reverses every arrow.
    pub fn opposite(&self) -> ValuedQuiver {
        let forward = self.orientation.forward.iter().map(|f| !f).collect();
        ValuedQuiver { graph: Arc::clone(&self.graph), orientation: Orientation { forward } }
    }

    /// Returns an oriented cycle if one exists.
    pub fn find_cycle(&self) -> Option<Vec<Vertex>> {
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state: BTreeMap<Vertex, u8> = BTreeMap::new();
        let mut path: Vec<Vertex> = Vec::new();
        for &root in self.vertices() {
            if state.get(&root).copied().unwrap_or(0) != 0 {
                continue;
            }
            let mut stack: Vec<(Vertex, Vec<Vertex>, usize)> = vec![(root, self.successors(root), 0)];
            state.insert(root, 1);
            path.push(root);
            while let Some((v, succ, idx)) = stack.last_mut() {
                if *idx < succ.len() {
                    let n = succ[*idx];
                    *idx += 1;
                    match state.get(&n).copied().unwrap_or(0) {
                        0 => {
                            state.insert(n, 1);
                            path.push(n);
                            let s = self.successors(n);
                            stack.push((n, s, 0));
                        }
                        1 => {
                            let pos = path.iter().position(|&p| p == n).unwrap();
                            let mut cycle = path[pos..].to_vec();
                            cycle.push(n);
                            return Some(cycle);
                        }
                        _ => {}
                    }
                } else {
                    state.insert(*v, 2);
                    path.pop();
                    stack.pop();
                }
            }
        }
        None
    }

    /// A linear extension of the path order: `x` precedes `y` whenever `x -> ... -> y`.
    pub fn topological_order(&self) -> Vec<Vertex> {
        let mut indeg: BTreeMap<Vertex, usize> =
            self.vertices().iter().map(|&v| (v, self.predecessors(v).len())).collect();
        let mut ready: BTreeSet<Vertex> = indeg.iter().filter(|(_, &d)| d == 0).map(|(&v, _)| v).collect();
        let mut out = Vec::with_capacity(self.len());
        while let Some(v) = ready.pop_first() {
            out.push(v);
            for n in self.successors(v) {
                let d = indeg.get_mut(&n).unwrap();
                *d -= 1;
                if *d == 0 {
                    ready.insert(n);
                }
            }
        }
        out
    }

    /// The poset `(Γ₀, Λ)`: `x <= y` iff there is a path from `x` to `y`.
    pub fn vertex_poset(&self) -> VertexPoset {
        let mut up: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
        for &v in self.topological_order().iter().rev() {
            let mut set = BTreeSet::from([v]);
            for n in self.successors(v) {
                set.extend(up[&n].iter().copied());
            }
            up.insert(v, set);
        }
        VertexPoset::from_up_sets(up)
    }

    /// True iff some arrow `u -> v` is paralleled by a path of length > 1.
    pub fn has_bypass(&self) -> bool {
        let poset = self.vertex_poset();
        self.arrows().into_iter().any(|(u, v)| {
            self.successors(u).into_iter().any(|w| w != v && poset.leq(w, v))
        })
    }

    /// The unique complete (+)-admissible sequence picking the smallest available sink each step.
    pub fn complete_sequence(&self) -> Vec<Vertex> {
        let mut q = self.clone();
        let mut remaining: BTreeSet<Vertex> = self.vertices().iter().copied().collect();
        let mut out = Vec::with_capacity(self.len());
        while let Some(x) = remaining.iter().copied().find(|&v| q.is_sink(v)) {
            remaining.remove(&x);
            out.push(x);
            q = q.reflect_unchecked(x);
        }
        debug_assert!(remaining.is_empty());
        out
    }
}
