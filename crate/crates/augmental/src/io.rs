//! File formats for complexes.
//!
//! JSON: `{"void": bool, "facets": [[ids...]...], "labels": {"id": "text"}}`
//! with `labels` optional.  The canonical form of `{∅}` is
//! `{"void":false,"facets":[[]]}`; an empty facet list with `void:false` is
//! accepted as `{∅}` on input.
//!
//! Text: one facet per line (ids separated by spaces or commas), `#` starts a
//! comment, and the keywords `VOID` / `EMPTY` denote the two degenerate
//! complexes.

use crate::complex::{Complex, Simplex, Vertex};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug)]
pub enum IoError {
    Json(serde_json::Error),
    Complex(crate::complex::ComplexError),
    Parse(String),
    File(std::io::Error),
}

impl fmt::Display for IoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IoError::Json(e) => write!(f, "bad JSON: {e}"),
            IoError::Complex(e) => write!(f, "bad complex: {e}"),
            IoError::Parse(s) => write!(f, "bad input: {s}"),
            IoError::File(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for IoError {}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Json(e)
    }
}

impl From<crate::complex::ComplexError> for IoError {
    fn from(e: crate::complex::ComplexError) -> Self {
        IoError::Complex(e)
    }
}

impl From<std::io::Error> for IoError {
    fn from(e: std::io::Error) -> Self {
        IoError::File(e)
    }
}

/// Serialized complex.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ComplexJson {
    pub void: bool,
    pub facets: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<String, String>,
}

pub fn complex_to_json(c: &Complex) -> ComplexJson {
    if c.is_void() {
        return ComplexJson { void: true, facets: Vec::new(), labels: BTreeMap::new() };
    }
    let facets = c.facets().iter().map(|s| s.vertices().to_vec()).collect();
    let labels = c.labels().iter().map(|(v, l)| (v.to_string(), l.clone())).collect();
    ComplexJson { void: false, facets, labels }
}

pub fn complex_from_json(j: &ComplexJson) -> Result<Complex, IoError> {
    if j.void {
        return Ok(Complex::void());
    }
    let mut gens = Vec::new();
    for f in &j.facets {
        gens.push(Simplex::try_new(f.clone())?);
    }
    let c = if gens.is_empty() {
        Complex::empty()
    } else {
        Complex::try_from_facets(&gens)?
    };
    let mut labels = BTreeMap::new();
    for (k, v) in &j.labels {
        let id: Vertex =
            k.parse().map_err(|_| IoError::Parse(format!("bad label key {k:?}")))?;
        labels.insert(id, v.clone());
    }
    Ok(c.with_labels(labels))
}

pub fn complex_to_json_string(c: &Complex) -> String {
    serde_json::to_string(&complex_to_json(c)).expect("complex serialization cannot fail")
}

pub fn complex_from_json_str(s: &str) -> Result<Complex, IoError> {
    complex_from_json(&serde_json::from_str(s)?)
}

pub fn complex_to_text(c: &Complex) -> String {
    if c.is_void() {
        return "VOID\n".to_string();
    }
    if c.is_empty_complex() {
        return "EMPTY\n".to_string();
    }
    let mut out = String::new();
    for f in c.facets() {
        let line: Vec<String> = f.vertices().iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn complex_from_text(s: &str) -> Result<Complex, IoError> {
    let mut gens: Vec<Simplex> = Vec::new();
    let mut saw_line = false;
    for raw in s.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        saw_line = true;
        match line {
            "VOID" => return Ok(Complex::void()),
            "EMPTY" => {
                gens.push(Simplex::empty());
            }
            _ => {
                let mut ids = Vec::new();
                for tok in line.split(|c: char| c.is_whitespace() || c == ',') {
                    if tok.is_empty() {
                        continue;
                    }
                    let id: Vertex = tok
                        .parse()
                        .map_err(|_| IoError::Parse(format!("bad vertex id {tok:?}")))?;
                    ids.push(id);
                }
                gens.push(Simplex::try_new(ids)?);
            }
        }
    }
    if !saw_line {
        return Err(IoError::Parse("no facets in text input (use VOID or EMPTY)".into()));
    }
    Ok(Complex::try_from_facets(&gens)?)
}

/// Parse either format, sniffing JSON by a leading '{'.
pub fn complex_from_str(s: &str) -> Result<Complex, IoError> {
    if s.trim_start().starts_with('{') {
        complex_from_json_str(s)
    } else {
        complex_from_text(s)
    }
}

pub fn read_complex_file(path: &std::path::Path) -> Result<Complex, IoError> {
    let content = std::fs::read_to_string(path)?;
    complex_from_str(&content)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(facets: &[&[u32]]) -> Complex {
        Complex::from_facet_ids(&facets.iter().map(|f| f.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn json_roundtrip() {
        for x in [
            Complex::void(),
            Complex::empty(),
            Complex::point(4),
            c(&[&[1, 2, 3], &[3, 4]]),
        ] {
            let s = complex_to_json_string(&x);
            assert_eq!(complex_from_json_str(&s).unwrap(), x);
        }
        assert_eq!(
            complex_to_json_string(&Complex::empty()),
            r#"{"void":false,"facets":[[]]}"#
        );
        assert_eq!(
            complex_to_json_string(&Complex::void()),
            r#"{"void":true,"facets":[]}"#
        );
        // Tolerant read: no facets with void:false is {∅}.
        assert_eq!(
            complex_from_json_str(r#"{"void":false,"facets":[]}"#).unwrap(),
            Complex::empty()
        );
    }

    #[test]
    fn labels_roundtrip() {
        let mut x = c(&[&[1, 2]]);
        x.set_label(1, "(0,1)".into());
        let s = complex_to_json_string(&x);
        let y = complex_from_json_str(&s).unwrap();
        assert_eq!(y.labels().get(&1).unwrap(), "(0,1)");
    }

    #[test]
    fn text_roundtrip() {
        let x = c(&[&[1, 2, 3], &[3, 4]]);
        let t = complex_to_text(&x);
        assert_eq!(complex_from_text(&t).unwrap(), x);
        assert_eq!(complex_from_text("VOID").unwrap(), Complex::void());
        assert_eq!(complex_from_text("EMPTY").unwrap(), Complex::empty());
        assert_eq!(
            complex_from_text("# comment\n1 2 3\n3,4 # tail\n").unwrap(),
            x
        );
        assert!(complex_from_text("").is_err());
        assert!(complex_from_text("1 x").is_err());
    }

    #[test]
    fn sniffing() {
        assert_eq!(complex_from_str("  {\"void\":true,\"facets\":[]}").unwrap(), Complex::void());
        assert_eq!(complex_from_str("1 2\n").unwrap(), c(&[&[1, 2]]));
    }
}
