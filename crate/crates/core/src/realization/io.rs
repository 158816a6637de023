//! Text formats for realizations, colorings and circular angles.
//!
//! A realization file is one JSON object:
//! `{"n": 3, "norm": 2, "dim": 2, "points": [[0, 0], [1, 0], ...]}` where
//! `norm` is a number or `"inf"` and one-dimensional points are `[x]`.
//! Numbers are written with 17 significant digits.

use serde_json::Value;

use super::{Coloring, Realization};
use crate::error::{Error, Result};
use crate::geometry::{NormSpec, Point};

/// Decimal text of `x` with 17 significant digits, trailing zeros removed,
/// positional notation for moderate exponents.
pub fn format_f64(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() { "NaN".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let digits = digits.trim_end_matches('0');
    let sign = if negative { "-" } else { "" };
    if !(-6..=20).contains(&exp) {
        let (head, tail) = digits.split_at(1);
        return if tail.is_empty() { format!("{sign}{head}e{exp}") } else { format!("{sign}{head}.{tail}e{exp}") };
    }
    let point = exp + 1;
    let body = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), digits)
    } else if point as usize >= digits.len() {
        format!("{}{}", digits, "0".repeat(point as usize - digits.len()))
    } else {
        let (int, frac) = digits.split_at(point as usize);
        format!("{int}.{frac}")
    };
    format!("{sign}{body}")
}

pub fn write_realization(r: &Realization) -> String {
    let norm = if r.norm.is_max() { "\"inf\"".to_string() } else { format_f64(r.norm.p) };
    let points: Vec<String> = r
        .points
        .iter()
        .map(|p| {
            if r.norm.dim == 1 {
                format!("[{}]", format_f64(p.x))
            } else {
                format!("[{}, {}]", format_f64(p.x), format_f64(p.y))
            }
        })
        .collect();
    format!(
        "{{\n  \"n\": {},\n  \"norm\": {},\n  \"dim\": {},\n  \"points\": [\n    {}\n  ]\n}}\n",
        r.n(),
        norm,
        r.norm.dim,
        points.join(",\n    ")
    )
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn number(v: &Value, what: &str) -> Result<f64> {
    v.as_f64().ok_or_else(|| parse_err(format!("{what} is not a number")))
}

pub fn read_realization(text: &str) -> Result<Realization> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(format!("realization JSON: {e}")))?;
    let obj = v.as_object().ok_or_else(|| parse_err("realization must be a JSON object"))?;
    let field = |k: &str| obj.get(k).ok_or_else(|| parse_err(format!("missing key \"{k}\"")));

    let n = field("n")?.as_u64().ok_or_else(|| parse_err("\"n\" must be a nonnegative integer"))? as usize;
    let p = match field("norm")? {
        Value::String(s) if s == "inf" => f64::INFINITY,
        other => number(other, "\"norm\"")?,
    };
    let dim = field("dim")?.as_u64().ok_or_else(|| parse_err("\"dim\" must be 1 or 2"))?;
    let norm = NormSpec::new(p, u8::try_from(dim).map_err(|_| parse_err("\"dim\" must be 1 or 2"))?)
        .map_err(|e| parse_err(e.to_string()))?;

    let raw = field("points")?.as_array().ok_or_else(|| parse_err("\"points\" must be an array"))?;
    if raw.len() != n {
        return Err(parse_err(format!("\"n\" is {n} but {} points are listed", raw.len())));
    }
    let mut points = Vec::with_capacity(n);
    for (i, p) in raw.iter().enumerate() {
        let coords = p.as_array().ok_or_else(|| parse_err(format!("point {i} is not an array")))?;
        if coords.len() != dim as usize {
            return Err(parse_err(format!("point {i} has {} coordinates, expected {dim}", coords.len())));
        }
        let x = number(&coords[0], "coordinate")?;
        let y = if dim == 2 { number(&coords[1], "coordinate")? } else { 0.0 };
        points.push(Point::new(x, y));
    }
    Realization::new(points, norm)
}

/// `vertex color` lines sorted by vertex.
pub fn write_coloring(c: &Coloring) -> String {
    c.colors.iter().enumerate().map(|(v, col)| format!("{v} {col}\n")).collect()
}

/// Reads `vertex color` lines; every vertex in `0..n` must appear once.
pub fn read_coloring(text: &str) -> Result<Coloring> {
    let pairs = read_indexed(text, "coloring", |s| s.parse::<usize>().ok())?;
    Ok(Coloring::new(pairs))
}

/// Reads circular angles (radians), either one per line in vertex order or
/// as `vertex angle` lines.
pub fn read_angles(text: &str) -> Result<Vec<f64>> {
    read_indexed(text, "angles", |s| s.parse::<f64>().ok().filter(|a| a.is_finite()))
}

fn read_indexed<T: Clone>(text: &str, what: &str, parse: impl Fn(&str) -> Option<T>) -> Result<Vec<T>> {
    let mut entries: Vec<(usize, T)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || parse_err(format!("{what} line {}: cannot parse {line:?}", lineno + 1));
        let toks: Vec<&str> = line.split_whitespace().collect();
        let (idx, val) = match toks.as_slice() {
            [v] => (entries.len(), parse(v).ok_or_else(bad)?),
            [i, v] => (i.parse::<usize>().map_err(|_| bad())?, parse(v).ok_or_else(bad)?),
            _ => return Err(bad()),
        };
        entries.push((idx, val));
    }
    entries.sort_by_key(|e| e.0);
    for (pos, (idx, _)) in entries.iter().enumerate() {
        if *idx != pos {
            return Err(parse_err(format!("{what}: vertex {pos} missing or listed twice")));
        }
    }
    Ok(entries.into_iter().map(|e| e.1).collect())
}
