//! Text and JSON formats for graphs, triangulations and constraint sets.
//!
//! Text graph format: a header `n m`, then `n` lines `x y` and `m` lines
//! `i j`. Coordinates are decimals (`-1.25`, `3e-2`) or rationals (`7/3`).
//! Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cdt::Triangulation;
use crate::constraints::ConstraintSet;
use crate::error::{Error, Result};
use crate::graph::{PlaneGraph, Validation, VertexId};

pub fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty number".into());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let q: BigInt = q.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
        if q.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(BigRational::new(p, q));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = s[i + 1..].parse().map_err(|_| format!("bad exponent in {s:?}"))?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (neg, body) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    let digits_ok = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
    if (int_part.is_empty() && frac_part.is_empty()) || !digits_ok(int_part) || !digits_ok(frac_part) {
        return Err(format!("not a number: {s:?}"));
    }
    if exp.unsigned_abs() > 4096 {
        return Err(format!("exponent out of range in {s:?}"));
    }
    let digits = format!("{int_part}{frac_part}");
    let mut num: BigInt = digits.parse().unwrap_or_default();
    if neg {
        num = -num;
    }
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let r = if scale >= 0 {
        BigRational::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(num, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(r)
}

/// Shortest exact rendering: a terminating decimal when one exists, else `p/q`.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        return r.numer().to_string();
    }
    let mut d = r.denom().clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let (mut twos, mut fives) = (0usize, 0usize);
    while (&d % &two).is_zero() {
        d /= &two;
        twos += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        fives += 1;
    }
    if !d.is_one() {
        return format!("{}/{}", r.numer(), r.denom());
    }
    let places = twos.max(fives);
    let scaled = (r * BigRational::from_integer(num_traits::pow(BigInt::from(10), places))).to_integer();
    let neg = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let digits = format!("{digits:0>width$}", width = places + 1);
    let (int_part, frac_part) = digits.split_at(digits.len() - places);
    format!("{}{}.{}", if neg { "-" } else { "" }, int_part, frac_part)
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(src: &'a str) -> Self {
        Lines { inner: src.lines().enumerate() }
    }

    /// Next meaningful line as (1-based line number, tokens).
    fn next_tokens(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, line) in self.inner.by_ref() {
            let line = line.split('#').next().unwrap_or("");
            let toks: Vec<&str> = line.split_whitespace().collect();
            if !toks.is_empty() {
                return Some((i + 1, toks));
            }
        }
        None
    }

    fn expect(&mut self, what: &str, count: usize, last_line: usize) -> Result<(usize, Vec<&'a str>)> {
        let (line, toks) = self.next_tokens().ok_or_else(|| Error::Parse {
            line: last_line,
            message: format!("unexpected end of input, expected {what}"),
        })?;
        if toks.len() != count {
            return Err(Error::Parse {
                line,
                message: format!("expected {what} ({count} fields), found {} fields", toks.len()),
            });
        }
        Ok((line, toks))
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse { line, message: format!("not a non-negative integer: {tok:?}") })
}

pub fn read_graph_text(src: &str, validation: Validation) -> Result<PlaneGraph> {
    let mut lines = Lines::new(src);
    let (mut at, header) = lines.expect("header `n m`", 2, 1)?;
    let n = parse_usize(header[0], at)?;
    let m = parse_usize(header[1], at)?;
    let mut coords = Vec::with_capacity(n.min(1 << 20));
    for _ in 0..n {
        let (line, t) = lines.expect("a point `x y`", 2, at)?;
        at = line;
        let x = parse_rational(t[0]).map_err(|message| Error::Parse { line, message })?;
        let y = parse_rational(t[1]).map_err(|message| Error::Parse { line, message })?;
        coords.push((x, y));
    }
    let mut edges = Vec::with_capacity(m.min(1 << 20));
    for _ in 0..m {
        let (line, t) = lines.expect("an edge `i j`", 2, at)?;
        at = line;
        edges.push((parse_usize(t[0], line)?, parse_usize(t[1], line)?));
    }
    if let Some((line, _)) = lines.next_tokens() {
        return Err(Error::Parse { line, message: "trailing content after the last edge".into() });
    }
    PlaneGraph::from_rationals(&coords, edges, validation)
}

pub fn write_graph_text(g: &PlaneGraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.edges().len()).unwrap();
    for v in 0..g.n() {
        let (x, y) = g.coordinates(v);
        writeln!(out, "{} {}", format_rational(&x), format_rational(&y)).unwrap();
    }
    for e in g.edges() {
        writeln!(out, "{} {}", e.u, e.v).unwrap();
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    points: Vec<[serde_json::Value; 2]>,
    edges: Vec<[VertexId; 2]>,
}

pub fn read_graph_json(src: &str, validation: Validation) -> Result<PlaneGraph> {
    let doc: GraphJson =
        serde_json::from_str(src).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
    let coord = |v: &serde_json::Value, i: usize| -> Result<BigRational> {
        let text = match v {
            serde_json::Value::String(s) => s.clone(),
            serde_json::Value::Number(n) => n.to_string(),
            other => return Err(Error::Parse { line: 0, message: format!("point {i}: bad coordinate {other}") }),
        };
        parse_rational(&text).map_err(|m| Error::Parse { line: 0, message: format!("point {i}: {m}") })
    };
    let mut coords = Vec::with_capacity(doc.points.len());
    for (i, [x, y]) in doc.points.iter().enumerate() {
        coords.push((coord(x, i)?, coord(y, i)?));
    }
    let edges = doc.edges.iter().map(|[a, b]| (*a, *b)).collect();
    PlaneGraph::from_rationals(&coords, edges, validation)
}

pub fn write_graph_json(g: &PlaneGraph) -> String {
    let doc = GraphJson {
        points: (0..g.n())
            .map(|v| {
                let (x, y) = g.coordinates(v);
                [format_rational(&x).into(), format_rational(&y).into()]
            })
            .collect(),
        edges: g.edges().iter().map(|e| [e.u, e.v]).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

/// Graph text format whose edge lines carry a third column: 1 if constrained.
pub fn write_triangulation_text(g: &PlaneGraph, t: &Triangulation) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), t.edges().len()).unwrap();
    for v in 0..g.n() {
        let (x, y) = g.coordinates(v);
        writeln!(out, "{} {}", format_rational(&x), format_rational(&y)).unwrap();
    }
    for e in t.edges() {
        writeln!(out, "{} {} {}", e.edge.u, e.edge.v, u8::from(e.constrained)).unwrap();
    }
    out
}

/// `k` followed by one `index u v` line per constraint, `index` being the
/// position of the edge in the input.
pub fn write_constraints_text(g: &PlaneGraph, s: &ConstraintSet) -> String {
    let mut out = String::new();
    let rows = constraint_rows(g, s);
    writeln!(out, "{}", rows.len()).unwrap();
    for r in rows {
        writeln!(out, "{} {} {}", r.index, r.u, r.v).unwrap();
    }
    out
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct ConstraintRow {
    pub index: usize,
    pub u: VertexId,
    pub v: VertexId,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct ConstraintsJson {
    pub count: usize,
    pub edges: Vec<ConstraintRow>,
}

fn constraint_rows(g: &PlaneGraph, s: &ConstraintSet) -> Vec<ConstraintRow> {
    let mut rows: Vec<ConstraintRow> = s
        .edges()
        .iter()
        .map(|e| ConstraintRow { index: g.edge_index(*e).expect("constraint edges are input edges"), u: e.u, v: e.v })
        .collect();
    rows.sort_by_key(|r| r.index);
    rows
}

pub fn write_constraints_json(g: &PlaneGraph, s: &ConstraintSet) -> String {
    let edges = constraint_rows(g, s);
    let doc = ConstraintsJson { count: edges.len(), edges };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}
