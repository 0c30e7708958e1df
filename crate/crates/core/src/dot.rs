//! Graphviz output. Nodes and edges are emitted in sorted order.

use std::fmt::Write as _;

use crate::quiver::ValuedQuiver;
use crate::translation::{PrincipalHasse, TranslationSlice};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

/// Arrows carry a `b_vu,b_uv` label unless both valuations are 1.
pub fn quiver_dot(q: &ValuedQuiver) -> String {
    let mut out = String::from("digraph quiver {\n  rankdir=LR;\n");
    for &v in q.vertices() {
        writeln!(out, "  {};", quote(&v.to_string())).unwrap();
    }
    for (u, v) in q.arrows() {
        let (b1, b2) = (q.graph().b(v, u), q.graph().b(u, v));
        let label = if (b1, b2) == (1, 1) { String::new() } else { format!(" [label=\"{b1},{b2}\"]") };
        writeln!(out, "  {} -> {}{label};", quote(&u.to_string()), quote(&v.to_string())).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Translation drawn as dashed edges `(n,u) -> (n−1,u)`.
pub fn slice_dot(s: &TranslationSlice) -> String {
    let mut out = String::from("digraph slice {\n  rankdir=LR;\n");
    let mut vertices = s.vertices().to_vec();
    vertices.sort();
    for v in &vertices {
        writeln!(out, "  {};", quote(&v.to_string())).unwrap();
    }
    for (a, b) in s.arrows() {
        writeln!(out, "  {} -> {};", quote(&a.to_string()), quote(&b.to_string())).unwrap();
    }
    for v in &vertices {
        if let Some(t) = s.translation(*v) {
            writeln!(out, "  {} -> {} [style=dashed];", quote(&v.to_string()), quote(&t.to_string())).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

pub fn hasse_dot(h: &PrincipalHasse) -> String {
    let mut out = String::from("digraph principal {\n  rankdir=LR;\n");
    let mut elements = h.elements().to_vec();
    elements.sort();
    for c in &elements {
        writeln!(out, "  {} [tooltip={}];", quote(&c.to_string()), quote(&h.sequence(*c).to_string())).unwrap();
    }
    for (a, b) in h.arrows() {
        writeln!(out, "  {} -> {};", quote(&a.to_string()), quote(&b.to_string())).unwrap();
    }
    for c in &elements {
        if let Some(t) = h.translation(*c) {
            writeln!(out, "  {} -> {} [style=dashed];", quote(&c.to_string()), quote(&t.to_string())).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::translation::{build_slice, principal_hasse};

    fn count(dot: &str, pat: impl Fn(&str) -> bool) -> usize {
        dot.lines().filter(|l| pat(l)).count()
    }

    fn nodes(dot: &str) -> usize {
        count(dot, |l| l.trim_end().ends_with(';') && !l.contains("->") && !l.contains('='))
            + count(dot, |l| l.contains("tooltip"))
    }

    fn solid(dot: &str) -> usize {
        count(dot, |l| l.contains("->") && !l.contains("dashed"))
    }

    fn dashed(dot: &str) -> usize {
        count(dot, |l| l.contains("dashed"))
    }

    #[test]
    fn quiver_counts() {
        let d = quiver_dot(&fixtures::a3());
        assert_eq!((nodes(&d), solid(&d)), (3, 2));
        assert!(quiver_dot(&fixtures::k2()).contains("\"1\" -> \"2\" [label=\"2,2\"]"));
    }

    #[test]
    fn slice_counts() {
        // two arrows per Λ-arrow on each level, minus the missing level-2 targets
        let d = slice_dot(&build_slice(&fixtures::a3(), 1));
        assert_eq!((nodes(&d), solid(&d), dashed(&d)), (6, 6, 3));
        assert!(d.contains("\"(1,2)\" -> \"(0,2)\" [style=dashed]"));
    }

    #[test]
    fn hasse_matches_slice_edges() {
        let q = fixtures::a3();
        let h = hasse_dot(&principal_hasse(&q, 2).unwrap());
        let s = slice_dot(&build_slice(&q, 1));
        assert_eq!((solid(&h), dashed(&h)), (solid(&s), dashed(&s)));
        assert!(h.contains("\"S_{1,3}\" -> \"S_{1,2}\""));
    }

    #[test]
    fn deterministic() {
        let q = fixtures::triangle();
        assert_eq!(slice_dot(&build_slice(&q, 3)), slice_dot(&build_slice(&q, 3)));
        assert_eq!(hasse_dot(&principal_hasse(&q, 3).unwrap()), hasse_dot(&principal_hasse(&q, 3).unwrap()));
    }
}
