//! Text formats: weighted graph files, shape files and result documents.
//!
//! Graph files are DIMACS-like:
//!
//! ```text
//! c comment
//! p graph <n> <m>
//! v <id> <weight>      (one line per vertex, ids 1..n)
//! e <u> <v>            (m lines)
//! ```
//!
//! Shape files use `p disks <n>` with lines `d <cx> <cy> <r> [w]`, or
//! `p rects <n>` with lines `r <x1> <y1> <x2> <y2> [w]`. Coordinates are
//! decimals. Ids in files are 1-based; in memory they are 0-based.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::approx::{ApproxResult, ClaimedResult, KernelStats, PartStats};
use crate::decimal::Decimal;
use crate::geometry::{Disk, Rect, ShapeKind, ShapeSet, Shapes};
use crate::graph::{WeightedGraph, MAX_TOTAL_WEIGHT};
use crate::lp::HalfInteger;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `p` header line")]
    MissingHeader,
    #[error("duplicate `p` header line")]
    DuplicateHeader,
    #[error("malformed header: {0}")]
    BadHeader(String),
    #[error("unknown line type `{0}`")]
    UnknownLine(String),
    #[error("malformed line: {0}")]
    MalformedLine(String),
    #[error("vertex {0} listed twice")]
    DuplicateVertexLine(u64),
    #[error("vertex {0} has no `v` line")]
    MissingVertexLine(u64),
    #[error("vertex id {0} out of range")]
    VertexOutOfRange(u64),
    #[error("header declares {expected} edges, found {got}")]
    EdgeCountMismatch { expected: u64, got: u64 },
    #[error("header declares {expected} shapes, found {got}")]
    ShapeCountMismatch { expected: u64, got: u64 },
    #[error("invalid weight `{0}`")]
    InvalidWeight(String),
    #[error("total weight exceeds {MAX_TOTAL_WEIGHT}")]
    WeightOverflow,
    #[error("invalid edge: {0}")]
    InvalidEdge(String),
    #[error("`{0}` line in a {1} file")]
    MixedKinds(char, &'static str),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid number `{0}`")]
    InvalidNumber(String),
    #[error("invalid result document: {0}")]
    InvalidDocument(String),
}

/// A parse failure with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn fail<T>(line: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { line, kind })
}

/// Non-blank lines with their 1-based numbers and whitespace-split tokens,
/// comments (`c ...`) removed.
fn tokenized(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, t)| !t.is_empty() && t[0] != "c")
}

fn parse_count(token: &str, line: usize) -> Result<u64, ParseError> {
    token
        .parse::<u64>()
        .or_else(|_| fail(line, ParseErrorKind::InvalidNumber(clip(token))))
}

fn clip(s: &str) -> String {
    s.chars().take(40).collect()
}

/// How vertex weights are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GraphReadOptions {
    /// When set, weights may be decimals; each is multiplied by this factor
    /// and must then be a positive integer.
    pub weight_scale: Option<u64>,
}

fn parse_weight(token: &str, opts: GraphReadOptions, line: usize) -> Result<u64, ParseError> {
    let invalid = || ParseError {
        line,
        kind: ParseErrorKind::InvalidWeight(clip(token)),
    };
    let weight = match opts.weight_scale {
        None => token.parse::<u64>().map_err(|_| invalid())?,
        Some(scale) => {
            let value: Decimal = token.parse().map_err(|_| invalid())?;
            let scaled = value.scaled_to(value.scale()) * BigInt::from(scale);
            let (q, r) = scaled.div_rem(&BigInt::from(10).pow(value.scale()));
            if !r.is_zero() {
                return Err(invalid());
            }
            q.to_u64().ok_or_else(invalid)?
        }
    };
    if weight == 0 {
        return Err(invalid());
    }
    Ok(weight)
}

pub fn parse_graph(text: &str) -> Result<WeightedGraph, ParseError> {
    parse_graph_with(text, GraphReadOptions::default())
}

pub fn parse_graph_with(text: &str, opts: GraphReadOptions) -> Result<WeightedGraph, ParseError> {
    let mut header: Option<(usize, u64, u64)> = None;
    let mut weights: BTreeMap<u64, u64> = BTreeMap::new();
    let mut total: u64 = 0;
    let mut edges = Vec::new();
    let mut edge_lines: u64 = 0;
    for (line, tokens) in tokenized(text) {
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return fail(line, ParseErrorKind::DuplicateHeader);
                }
                if tokens.len() != 4 || tokens[1] != "graph" {
                    return fail(
                        line,
                        ParseErrorKind::BadHeader("expected `p graph <n> <m>`".into()),
                    );
                }
                let n = parse_count(tokens[2], line)?;
                let m = parse_count(tokens[3], line)?;
                header = Some((line, n, m));
            }
            "v" | "e" => {
                let Some((_, n, _)) = header else {
                    return fail(line, ParseErrorKind::MissingHeader);
                };
                if tokens.len() != 3 {
                    return fail(
                        line,
                        ParseErrorKind::MalformedLine(format!(
                            "`{}` line needs 2 fields",
                            tokens[0]
                        )),
                    );
                }
                let id = |token: &str| -> Result<u64, ParseError> {
                    let id = parse_count(token, line)?;
                    if id == 0 || id > n {
                        return fail(line, ParseErrorKind::VertexOutOfRange(id));
                    }
                    Ok(id)
                };
                if tokens[0] == "v" {
                    let v = id(tokens[1])?;
                    let w = parse_weight(tokens[2], opts, line)?;
                    if weights.insert(v, w).is_some() {
                        return fail(line, ParseErrorKind::DuplicateVertexLine(v));
                    }
                    total = match total.checked_add(w).filter(|&t| t <= MAX_TOTAL_WEIGHT) {
                        Some(t) => t,
                        None => return fail(line, ParseErrorKind::WeightOverflow),
                    };
                } else {
                    let (u, v) = (id(tokens[1])?, id(tokens[2])?);
                    if u == v {
                        return fail(
                            line,
                            ParseErrorKind::InvalidEdge(format!("self-loop at {u}")),
                        );
                    }
                    edges.push((u as usize - 1, v as usize - 1));
                    edge_lines += 1;
                }
            }
            other => return fail(line, ParseErrorKind::UnknownLine(clip(other))),
        }
    }
    let Some((header_line, n, m)) = header else {
        return fail(1, ParseErrorKind::MissingHeader);
    };
    if edge_lines != m {
        return fail(
            header_line,
            ParseErrorKind::EdgeCountMismatch {
                expected: m,
                got: edge_lines,
            },
        );
    }
    // Every id in `weights` is in 1..=n, so equal counts mean all present.
    if weights.len() as u64 != n {
        let missing = (1..=n).find(|v| !weights.contains_key(v)).unwrap_or(n);
        return fail(header_line, ParseErrorKind::MissingVertexLine(missing));
    }
    let weights: Vec<u64> = weights.into_values().collect();
    WeightedGraph::new(weights.len(), weights, edges)
        .or_else(|e| fail(header_line, ParseErrorKind::InvalidEdge(e.to_string())))
}

/// Canonical graph file: header, all `v` lines, then edges sorted.
pub fn serialize_graph(graph: &WeightedGraph) -> String {
    let mut out = format!("p graph {} {}\n", graph.num_vertices(), graph.num_edges());
    for (v, w) in graph.weights().iter().enumerate() {
        out.push_str(&format!("v {} {w}\n", v + 1));
    }
    for &(u, v) in graph.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

pub fn parse_shapes(text: &str) -> Result<ShapeSet, ParseError> {
    let mut header: Option<(usize, ShapeKind, u64)> = None;
    let mut disks = Vec::new();
    let mut rects = Vec::new();
    let mut weights = Vec::new();
    for (line, tokens) in tokenized(text) {
        let tag = tokens[0];
        if tag == "p" {
            if header.is_some() {
                return fail(line, ParseErrorKind::DuplicateHeader);
            }
            let kind = match (tokens.len(), tokens.get(1).copied()) {
                (3, Some("disks")) => ShapeKind::Disks,
                (3, Some("rects")) => ShapeKind::Rects,
                _ => {
                    return fail(
                        line,
                        ParseErrorKind::BadHeader("expected `p disks <n>` or `p rects <n>`".into()),
                    )
                }
            };
            header = Some((line, kind, parse_count(tokens[2], line)?));
            continue;
        }
        let (letter, arity) = match tag {
            "d" => ('d', 3),
            "r" => ('r', 4),
            other => return fail(line, ParseErrorKind::UnknownLine(clip(other))),
        };
        let Some((_, kind, _)) = header else {
            return fail(line, ParseErrorKind::MissingHeader);
        };
        let expected_letter = match kind {
            ShapeKind::Disks => 'd',
            ShapeKind::Rects => 'r',
        };
        if letter != expected_letter {
            return fail(line, ParseErrorKind::MixedKinds(letter, kind.as_str()));
        }
        let fields = &tokens[1..];
        if fields.len() != arity && fields.len() != arity + 1 {
            return fail(
                line,
                ParseErrorKind::MalformedLine(format!(
                    "`{letter}` line needs {arity} coordinates and an optional weight"
                )),
            );
        }
        let mut coords = Vec::with_capacity(arity);
        for token in &fields[..arity] {
            match token.parse::<Decimal>() {
                Ok(d) => coords.push(d),
                Err(_) => return fail(line, ParseErrorKind::InvalidNumber(clip(token))),
            }
        }
        let weight = match fields.get(arity) {
            Some(token) => parse_weight(token, GraphReadOptions::default(), line)?,
            None => 1,
        };
        let invalid = |e: crate::geometry::GeometryError| ParseError {
            line,
            kind: ParseErrorKind::InvalidShape(e.to_string()),
        };
        let mut c = coords.into_iter();
        let mut next = || c.next().expect("arity checked");
        if letter == 'd' {
            disks.push(Disk::new(next(), next(), next()).map_err(invalid)?);
        } else {
            rects.push(Rect::new(next(), next(), next(), next()).map_err(invalid)?);
        }
        weights.push(weight);
    }
    let Some((header_line, kind, n)) = header else {
        return fail(1, ParseErrorKind::MissingHeader);
    };
    if weights.len() as u64 != n {
        return fail(
            header_line,
            ParseErrorKind::ShapeCountMismatch {
                expected: n,
                got: weights.len() as u64,
            },
        );
    }
    let shapes = match kind {
        ShapeKind::Disks => Shapes::Disks(disks),
        ShapeKind::Rects => Shapes::Rects(rects),
    };
    ShapeSet::new(shapes, weights)
        .or_else(|e| fail(header_line, ParseErrorKind::InvalidShape(e.to_string())))
}

/// Canonical shape file; weights of 1 are omitted.
pub fn serialize_shapes(set: &ShapeSet) -> String {
    let mut out = format!("p {} {}\n", set.kind().as_str(), set.len());
    let suffix = |w: u64| {
        if w == 1 {
            String::new()
        } else {
            format!(" {w}")
        }
    };
    match set.shapes() {
        Shapes::Disks(disks) => {
            for (d, &w) in disks.iter().zip(set.weights()) {
                out.push_str(&format!("d {} {} {}{}\n", d.cx, d.cy, d.r, suffix(w)));
            }
        }
        Shapes::Rects(rects) => {
            for (r, &w) in rects.iter().zip(set.weights()) {
                out.push_str(&format!(
                    "r {} {} {} {}{}\n",
                    r.x1,
                    r.y1,
                    r.x2,
                    r.y2,
                    suffix(w)
                ));
            }
        }
    }
    out
}

/// Either kind of instance file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Graph(WeightedGraph),
    Shapes(ShapeSet),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceFormat {
    Graph,
    Shapes,
}

/// The format named by the first `p` line, if any.
pub fn detect_format(text: &str) -> Option<InstanceFormat> {
    tokenized(text)
        .find(|(_, t)| t[0] == "p")
        .and_then(|(_, t)| match t.get(1).copied() {
            Some("graph") => Some(InstanceFormat::Graph),
            Some("disks") | Some("rects") => Some(InstanceFormat::Shapes),
            _ => None,
        })
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    match detect_format(text) {
        Some(InstanceFormat::Graph) => parse_graph(text).map(Instance::Graph),
        Some(InstanceFormat::Shapes) => parse_shapes(text).map(Instance::Shapes),
        None => {
            let line = tokenized(text)
                .find(|(_, t)| t[0] == "p")
                .map_or(1, |(l, _)| l);
            fail(line, ParseErrorKind::MissingHeader)
        }
    }
}

/// An exact fraction written as `p/q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fraction {
    pub numer: u64,
    pub denom: u64,
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl Fraction {
    pub fn parse(s: &str) -> Option<Self> {
        let (p, q) = s.split_once('/')?;
        let numer = p.parse().ok()?;
        let denom: u64 = q.parse().ok()?;
        (denom > 0 && !p.starts_with('+') && !q.starts_with('+')).then_some(Self { numer, denom })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartDoc {
    pub size: usize,
    pub weight: u64,
}

/// Kernel part sizes; field order is the serialized key order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KernelDoc {
    pub v0: PartDoc,
    pub v1: PartDoc,
    pub vhalf: PartDoc,
}

impl From<PartStats> for PartDoc {
    fn from(p: PartStats) -> Self {
        Self {
            size: p.size,
            weight: p.weight,
        }
    }
}

impl From<KernelStats> for KernelDoc {
    fn from(k: KernelStats) -> Self {
        Self {
            v0: k.zero.into(),
            v1: k.one.into(),
            vhalf: k.half.into(),
        }
    }
}

/// The serialized form of an [`ApproxResult`]. Fields are declared in key
/// order so the JSON output is sorted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultDocument {
    /// 1-based, sorted.
    pub cover: Vec<u64>,
    pub cover_weight: u64,
    pub eps: f64,
    pub kernel: KernelDoc,
    pub lp_bound: String,
    pub oracle: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio_bound: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub swap_size: Option<usize>,
}

impl From<&ApproxResult> for ResultDocument {
    fn from(res: &ApproxResult) -> Self {
        Self {
            cover: res.cover.members().iter().map(|&v| v as u64 + 1).collect(),
            cover_weight: res.cover_weight(),
            eps: res.eps_requested,
            kernel: res.kernel_stats.into(),
            lp_bound: res.lp_lower_bound.to_string(),
            oracle: res.oracle_name.clone(),
            ratio_bound: res
                .certified_ratio_bound()
                .map(|r| format!("{}/{}", r.numer(), r.denom())),
            swap_size: res.swap_size,
        }
    }
}

impl ResultDocument {
    /// The LP bound as a half-integer; `None` if it is not of the form
    /// `p/1` or `p/2` in lowest terms.
    pub fn lp_bound_value(&self) -> Option<HalfInteger> {
        let f = Fraction::parse(&self.lp_bound)?;
        match f.denom {
            1 => f.numer.checked_mul(2).map(HalfInteger::from_doubled),
            2 if f.numer % 2 == 1 => Some(HalfInteger::from_doubled(f.numer)),
            _ => None,
        }
    }

    /// The claim to verify, with ids converted to 0-based.
    pub fn to_claim(&self) -> Result<ClaimedResult, ParseErrorKind> {
        let lp_bound = self.lp_bound_value().ok_or_else(|| {
            ParseErrorKind::InvalidDocument(format!("lp_bound `{}`", clip(&self.lp_bound)))
        })?;
        let cover = self
            .cover
            .iter()
            .map(|&id| {
                id.checked_sub(1)
                    .and_then(|v| usize::try_from(v).ok())
                    .ok_or(ParseErrorKind::InvalidDocument(format!("cover id {id}")))
            })
            .collect::<Result<_, _>>()?;
        Ok(ClaimedResult {
            cover,
            cover_weight: self.cover_weight,
            lp_bound,
        })
    }
}

/// Pretty-printed JSON with sorted keys and a trailing newline.
pub fn write_result(res: &ApproxResult) -> String {
    let mut out = serde_json::to_string_pretty(&ResultDocument::from(res)).expect("plain data");
    out.push('\n');
    out
}

pub fn parse_result(text: &str) -> Result<ResultDocument, ParseError> {
    let doc: ResultDocument = serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line().max(1),
        kind: ParseErrorKind::InvalidDocument(e.to_string()),
    })?;
    if doc.lp_bound_value().is_none() {
        return fail(
            1,
            ParseErrorKind::InvalidDocument(format!("lp_bound `{}`", clip(&doc.lp_bound))),
        );
    }
    if let Some(ratio) = &doc.ratio_bound {
        if Fraction::parse(ratio).is_none() {
            return fail(
                1,
                ParseErrorKind::InvalidDocument(format!("ratio_bound `{}`", clip(ratio))),
            );
        }
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::approx_vc;
    use crate::oracle::ExactOracle;

    #[test]
    fn graph_examples() {
        let g = parse_graph("p graph 2 1\nv 1 1\nv 2 1\ne 1 2\n").unwrap();
        assert_eq!(g, WeightedGraph::unweighted(2, [(0, 1)]).unwrap());

        let err = parse_graph("p graph 2 2\nv 1 1\nv 2 1\ne 1 2\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert_eq!(
            err.kind,
            ParseErrorKind::EdgeCountMismatch {
                expected: 2,
                got: 1
            }
        );

        let err = parse_graph("p graph 1 0\nv 1 0\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(matches!(err.kind, ParseErrorKind::InvalidWeight(_)));
    }

    #[test]
    fn graph_errors_carry_lines() {
        let cases: &[(&str, usize, ParseErrorKind)] = &[
            ("c hi\nv 1 1\n", 2, ParseErrorKind::MissingHeader),
            ("", 1, ParseErrorKind::MissingHeader),
            (
                "p graph 1 0\np graph 1 0\n",
                2,
                ParseErrorKind::DuplicateHeader,
            ),
            (
                "p graph 2 0\nv 1 1\nv 1 2\n",
                3,
                ParseErrorKind::DuplicateVertexLine(1),
            ),
            (
                "p graph 2 0\nv 1 1\n",
                1,
                ParseErrorKind::MissingVertexLine(2),
            ),
            (
                "p graph 2 0\nv 3 1\n",
                2,
                ParseErrorKind::VertexOutOfRange(3),
            ),
            (
                "p graph 2 1\nv 1 1\nv 2 1\n\ne 1 1\n",
                5,
                ParseErrorKind::InvalidEdge("self-loop at 1".into()),
            ),
            (
                "p graph 1 0\nx 1\n",
                2,
                ParseErrorKind::UnknownLine("x".into()),
            ),
        ];
        for (text, line, kind) in cases {
            let err = parse_graph(text).unwrap_err();
            assert_eq!((&err.line, &err.kind), (line, kind), "{text:?}");
            assert!(err.to_string().starts_with(&format!("line {line}:")));
        }
    }

    #[test]
    fn duplicate_edge_lines_merge() {
        let g = parse_graph("p graph 2 2\nv 1 1\nv 2 1\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(g.num_edges(), 1);
        assert_eq!(serialize_graph(&g), "p graph 2 1\nv 1 1\nv 2 1\ne 1 2\n");
    }

    #[test]
    fn weight_scaling() {
        let opts = GraphReadOptions {
            weight_scale: Some(100),
        };
        let g = parse_graph_with("p graph 2 0\nv 1 1.25\nv 2 3\n", opts).unwrap();
        assert_eq!(g.weights(), &[125, 300]);
        assert!(parse_graph_with("p graph 1 0\nv 1 0.001\n", opts).is_err());
        assert!(parse_graph("p graph 1 0\nv 1 1.5\n").is_err());
    }

    #[test]
    fn shape_examples() {
        let s = parse_shapes("p disks 1\nd 0 0 1\n").unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.weights(), &[1]);

        let err = parse_shapes("p disks 1\nd 0 0 -1\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(matches!(err.kind, ParseErrorKind::InvalidShape(_)));

        let err = parse_shapes("p rects 1\nr 2 0 1 3\n").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::InvalidShape(_)));

        let err = parse_shapes("p rects 1\nd 0 0 1\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MixedKinds('d', "rects"));

        let err = parse_shapes("p disks 2\nd 0 0 1\n").unwrap_err();
        assert_eq!(
            err.kind,
            ParseErrorKind::ShapeCountMismatch {
                expected: 2,
                got: 1
            }
        );

        let s = parse_shapes("p rects 1\nr 0 0 1.5 2 7\n").unwrap();
        assert_eq!(serialize_shapes(&s), "p rects 1\nr 0 0 1.5 2 7\n");
    }

    #[test]
    fn instance_detection() {
        assert!(matches!(
            parse_instance("p graph 0 0\n"),
            Ok(Instance::Graph(_))
        ));
        assert!(matches!(
            parse_instance("c x\np disks 0\n"),
            Ok(Instance::Shapes(_))
        ));
        assert_eq!(parse_instance("p cnf 1 1\n").unwrap_err().line, 1);
        assert_eq!(
            parse_instance("c\n\nc\n").unwrap_err().kind,
            ParseErrorKind::MissingHeader
        );
    }

    fn solve(g: &WeightedGraph) -> ApproxResult {
        approx_vc(g, &ExactOracle::default(), 0.0).unwrap()
    }

    #[test]
    fn result_documents() {
        let star = WeightedGraph::unweighted(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let doc = ResultDocument::from(&solve(&star));
        assert_eq!(doc.cover, vec![1]);
        assert_eq!(doc.cover_weight, 1);
        assert_eq!(doc.lp_bound, "1/1");

        let edgeless = WeightedGraph::unweighted(3, []).unwrap();
        let text = write_result(&solve(&edgeless));
        assert!(!text.contains("ratio_bound"));
        assert!(text.contains("\"cover\": []"));

        let c5 = WeightedGraph::unweighted(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let text = write_result(&solve(&c5));
        let doc = parse_result(&text).unwrap();
        assert_eq!(doc.cover.len(), 3);
        assert_eq!(doc.lp_bound, "5/2");
        assert_eq!(doc.ratio_bound.as_deref(), Some("6/5"));
        assert_eq!(
            doc.to_claim().unwrap().lp_bound,
            HalfInteger::from_doubled(5)
        );

        // Keys appear sorted.
        let keys: Vec<&str> = text
            .lines()
            .filter(|l| l.starts_with("  \""))
            .map(|l| l.trim().split('"').nth(1).unwrap())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn bad_result_documents() {
        assert!(parse_result("{").is_err());
        let good = write_result(&solve(&WeightedGraph::unweighted(2, [(0, 1)]).unwrap()));
        assert!(parse_result(&good.replace("\"1/1\"", "\"2/4\"")).is_err());
        assert!(parse_result(&good.replace("\"oracle\"", "\"oracle2\"")).is_err());
        let mut doc = parse_result(&good).unwrap();
        doc.cover = vec![0];
        assert!(doc.to_claim().is_err());
    }
}
