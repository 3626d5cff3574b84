//! The `.tri` facet-list format.
//!
//! ```text
//! # optional comment lines
//! dim 3
//! 1 5 6 9
//! 1 5 6 e
//! ```
//!
//! Serialization writes no comments, then `dim <d>`, then one facet per line
//! with tokens sorted and facets in lexicographic order, each line terminated
//! by `\n`. Parsing a serialized complex and serializing again is
//! byte-identical.

use std::fmt::Write as _;

use crate::complex::{Simplex, SimplicialComplex, VertexLabel};
use crate::error::{Error, Result};

pub fn to_tri_string(c: &SimplicialComplex) -> String {
    let mut out = String::new();
    writeln!(out, "dim {}", c.dim()).unwrap();
    for f in c.facets() {
        let line: Vec<&str> = f.iter().map(|&v| c.label(v).as_str()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_tri(text: &str) -> Result<SimplicialComplex> {
    let mut dim: Option<usize> = None;
    let mut facets = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        if dim.is_none() {
            let mut parts = line.split_whitespace();
            if parts.next() != Some("dim") {
                return Err(err(format!("expected header `dim <d>`, found {line:?}")));
            }
            let value = parts
                .next()
                .ok_or_else(|| err("missing dimension after `dim`".into()))?;
            let d: usize = value
                .parse()
                .map_err(|_| err(format!("invalid dimension {value:?}")))?;
            if parts.next().is_some() {
                return Err(err("trailing tokens after dimension".into()));
            }
            dim = Some(d);
            continue;
        }
        let d = dim.unwrap();
        let labels = line
            .split_whitespace()
            .map(VertexLabel::new)
            .collect::<Result<Vec<_>>>()
            .map_err(|e| err(e.to_string()))?;
        if labels.len() > d + 1 {
            return Err(err(format!(
                "facet has {} vertices but the header declares dimension {d}",
                labels.len()
            )));
        }
        let s = Simplex::new(labels).map_err(|e| err(e.to_string()))?;
        facets.push(s);
    }
    let d = dim.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing `dim <d>` header".into(),
    })?;
    let c = SimplicialComplex::from_facets(facets).map_err(|e| Error::Parse {
        line: text.lines().count().max(1),
        message: e.to_string(),
    })?;
    if c.dim() != d as isize {
        return Err(Error::Parse {
            line: 1,
            message: format!("header declares dimension {d} but facets have dimension {}", c.dim()),
        });
    }
    Ok(c)
}
