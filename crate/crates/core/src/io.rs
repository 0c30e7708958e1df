//! Line-oriented text formats for quivers, sequences, words and representations.
//!
//! ```text
//! # A3
//! vertices: 1 2 3
//! d: 1=1 2=1 3=1
//! edge: 1 2 b=1,1
//! edge: 2 3 b=1,1
//! arrow: 1 -> 2
//! arrow: 2 -> 3
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::error::{Error, Violations};
use crate::linalg::{Matrix, Rational};
use crate::quiver::{RawQuiver, ValuedQuiver};
use crate::representation::Representation;
use crate::sequences::AdmissibleSequence;
use crate::weyl::Word;
use crate::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `{0}:` section")]
    MissingSection(&'static str),
    #[error("invalid quiver: {0}")]
    Invalid(#[from] Violations),
    #[error(transparent)]
    Rejected(#[from] Error),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

/// Non-empty lines with comments stripped, split at the first `:`.
fn sections(text: &str) -> Result<Vec<(usize, &str, &str)>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(':').ok_or_else(|| syntax(i + 1, format!("expected `key: value`, got `{line}`")))?;
        out.push((i + 1, key.trim(), rest.trim()));
    }
    Ok(out)
}

fn parse_num<T: std::str::FromStr>(line: usize, s: &str) -> Result<T, ParseError> {
    s.trim().parse().map_err(|_| syntax(line, format!("`{s}` is not a nonnegative integer")))
}

fn parse_assignments(line: usize, rest: &str) -> Result<Vec<(Vertex, u64)>, ParseError> {
    rest.split_whitespace()
        .map(|tok| {
            let (v, x) = tok.split_once('=').ok_or_else(|| syntax(line, format!("expected `vertex=value`, got `{tok}`")))?;
            Ok((parse_num(line, v)?, parse_num(line, x)?))
        })
        .collect()
}

fn parse_arrow(line: usize, s: &str) -> Result<(Vertex, Vertex), ParseError> {
    let (a, b) = s.split_once("->").ok_or_else(|| syntax(line, format!("expected `u -> v`, got `{s}`")))?;
    Ok((parse_num(line, a)?, parse_num(line, b)?))
}

pub fn parse_raw_quiver(text: &str) -> Result<RawQuiver, ParseError> {
    let mut vertices = None;
    let mut weights = None;
    let mut edges = Vec::new();
    let mut arrows = Vec::new();
    for (line, key, rest) in sections(text)? {
        match key {
            "vertices" => {
                if vertices.is_some() {
                    return Err(syntax(line, "second `vertices:` line"));
                }
                vertices = Some(rest.split_whitespace().map(|t| parse_num(line, t)).collect::<Result<Vec<Vertex>, _>>()?);
            }
            "d" => {
                if weights.is_some() {
                    return Err(syntax(line, "second `d:` line"));
                }
                let w = parse_assignments(line, rest)?;
                let w = w
                    .into_iter()
                    .map(|(v, x)| u32::try_from(x).map(|x| (v, x)).map_err(|_| syntax(line, "weight out of range")))
                    .collect::<Result<Vec<_>, _>>()?;
                weights = Some(w);
            }
            "edge" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                let [i, j, b] = toks[..] else {
                    return Err(syntax(line, format!("expected `i j b=b_ij,b_ji`, got `{rest}`")));
                };
                let vals = b.strip_prefix("b=").ok_or_else(|| syntax(line, format!("expected `b=..`, got `{b}`")))?;
                let (bij, bji) = vals.split_once(',').ok_or_else(|| syntax(line, format!("expected two valuations, got `{vals}`")))?;
                edges.push((parse_num(line, i)?, parse_num(line, j)?, parse_num(line, bij)?, parse_num(line, bji)?));
            }
            "arrow" => arrows.push(parse_arrow(line, rest)?),
            other => return Err(syntax(line, format!("unknown section `{other}`"))),
        }
    }
    Ok(RawQuiver {
        vertices: vertices.ok_or(ParseError::MissingSection("vertices"))?,
        weights: weights.ok_or(ParseError::MissingSection("d"))?,
        edges,
        arrows,
    })
}

pub fn parse_quiver(text: &str) -> Result<ValuedQuiver, ParseError> {
    Ok(ValuedQuiver::validate(&parse_raw_quiver(text)?)?)
}

pub fn emit_quiver(q: &ValuedQuiver) -> String {
    let raw = q.to_raw();
    let mut out = String::new();
    let verts: Vec<String> = raw.vertices.iter().map(ToString::to_string).collect();
    writeln!(out, "vertices: {}", verts.join(" ")).unwrap();
    let d: Vec<String> = raw.weights.iter().map(|(v, w)| format!("{v}={w}")).collect();
    writeln!(out, "d: {}", d.join(" ")).unwrap();
    for (i, j, bij, bji) in &raw.edges {
        writeln!(out, "edge: {i} {j} b={bij},{bji}").unwrap();
    }
    for (u, v) in &raw.arrows {
        writeln!(out, "arrow: {u} -> {v}").unwrap();
    }
    out
}

/// Comma-separated vertex ids; blank input is the empty list.
pub fn parse_vertex_list(text: &str) -> Result<Vec<Vertex>, ParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|t| parse_num(1, t)).collect()
}

pub fn parse_sequence(q: &ValuedQuiver, text: &str) -> Result<AdmissibleSequence, ParseError> {
    Ok(AdmissibleSequence::new(q, &parse_vertex_list(text)?)?)
}

pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    Ok(Word(parse_vertex_list(text)?))
}

fn parse_matrix(line: usize, s: &str, cols: usize) -> Result<Matrix, ParseError> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| syntax(line, "a matrix is written `[[a,b],[c,d]]`"))?
        .trim();
    let mut rows = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let body = rest.strip_prefix('[').ok_or_else(|| syntax(line, "expected `[` opening a row"))?;
        let end = body.find(']').ok_or_else(|| syntax(line, "unterminated row"))?;
        let row = body[..end].trim();
        let entries = if row.is_empty() {
            Vec::new()
        } else {
            row.split(',')
                .map(|t| t.trim().parse::<Rational>().map_err(|_| syntax(line, format!("`{}` is not a rational", t.trim()))))
                .collect::<Result<Vec<_>, _>>()?
        };
        rows.push(entries);
        rest = body[end + 1..].trim_start().trim_start_matches(',').trim_start();
    }
    Matrix::from_rows(rows, cols).ok_or_else(|| syntax(line, format!("rows must have {cols} entries")))
}

/// `dim: 1=1 2=1` followed by `map: 1->2 = [[1]]` lines; omitted maps are zero.
pub fn parse_representation(q: &ValuedQuiver, text: &str) -> Result<Representation, ParseError> {
    let mut dims = None;
    let mut pending = Vec::new();
    for (line, key, rest) in sections(text)? {
        match key {
            "dim" => {
                let d = parse_assignments(line, rest)?;
                dims = Some(d.into_iter().map(|(v, x)| (v, x as usize)).collect::<BTreeMap<Vertex, usize>>());
            }
            "map" => {
                let (arrow, matrix) = rest.split_once('=').ok_or_else(|| syntax(line, "expected `u->v = [[..]]`"))?;
                pending.push((line, parse_arrow(line, arrow)?, matrix));
            }
            other => return Err(syntax(line, format!("unknown section `{other}`"))),
        }
    }
    let dims = dims.ok_or(ParseError::MissingSection("dim"))?;
    let mut maps = BTreeMap::new();
    for (line, (s, e), matrix) in pending {
        let cols = q.graph().b(s, e) as usize * dims.get(&s).copied().unwrap_or(0);
        maps.insert((s, e), parse_matrix(line, matrix, cols)?);
    }
    Ok(Representation::new(q, dims, maps)?)
}

pub fn emit_representation(rep: &Representation) -> String {
    rep.to_string()
}
