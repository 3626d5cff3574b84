//! The `.act` group-action format.
//!
//! ```text
//! # optional comments
//! rank 2
//! gen (a c) (b d)
//! gen b->d d->b
//! ```
//!
//! After the `rank n` header come exactly `n` lines starting with `gen`, one per
//! standard generator `g_1 .. g_n`. A generator is written as cycles `(x y ...)`
//! or as explicit `x->y` pairs (both may be mixed); tokens not mentioned are
//! fixed, and a bare `gen` is the identity. Generators must be involutions and
//! must commute. Serialization writes every generator as sorted transpositions.

use std::fmt::Write as _;

use crate::complex::VertexLabel;
use crate::error::{Error, Result};
use crate::group::action::{GroupAction, LabelPermutation};

pub fn to_action_string(a: &GroupAction) -> String {
    let mut out = String::new();
    writeln!(out, "rank {}", a.rank()).unwrap();
    for g in a.generators() {
        out.push_str("gen");
        for (x, y) in g.transpositions() {
            write!(out, " ({x} {y})").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_action(text: &str) -> Result<GroupAction> {
    let mut rank: Option<usize> = None;
    let mut gens: Vec<LabelPermutation> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let Some(n) = rank else {
            let mut parts = line.split_whitespace();
            if parts.next() != Some("rank") {
                return Err(err(format!("expected header `rank <n>`, found {line:?}")));
            }
            let value = parts.next().ok_or_else(|| err("missing rank".into()))?;
            let n: usize = value
                .parse()
                .map_err(|_| err(format!("invalid rank {value:?}")))?;
            if n == 0 || n > 16 {
                return Err(err(format!("rank {n} outside the supported range 1..=16")));
            }
            if parts.next().is_some() {
                return Err(err("trailing tokens after rank".into()));
            }
            rank = Some(n);
            continue;
        };
        let body = line
            .strip_prefix("gen")
            .filter(|b| b.is_empty() || b.starts_with(char::is_whitespace))
            .ok_or_else(|| err(format!("expected a `gen` line, found {line:?}")))?;
        if gens.len() == n {
            return Err(err(format!("more than {n} generators")));
        }
        let perm = parse_generator(body).map_err(|m| err(m))?;
        if !perm.is_involution() {
            return Err(err(format!("g{} is not an involution", gens.len() + 1)));
        }
        if let Some(j) = gens.iter().position(|h| !h.commutes_with(&perm)) {
            return Err(err(format!(
                "g{} does not commute with g{}",
                gens.len() + 1,
                j + 1
            )));
        }
        gens.push(perm);
    }
    let n = rank.ok_or(Error::Parse {
        line: last_line.max(1),
        message: "missing `rank <n>` header".into(),
    })?;
    if gens.len() != n {
        return Err(Error::Parse {
            line: last_line.max(1),
            message: format!("expected {n} generators, found {}", gens.len()),
        });
    }
    GroupAction::new(gens)
}

fn parse_generator(body: &str) -> std::result::Result<LabelPermutation, String> {
    let mut pairs: Vec<(VertexLabel, VertexLabel)> = Vec::new();
    let mut rest = body.trim();
    let token = |s: &str| VertexLabel::new(s).map_err(|e| e.to_string());
    while !rest.is_empty() {
        if let Some(after) = rest.strip_prefix('(') {
            let close = after
                .find(')')
                .ok_or_else(|| "unclosed cycle".to_string())?;
            let cycle: Vec<VertexLabel> = after[..close]
                .split_whitespace()
                .map(token)
                .collect::<std::result::Result<_, _>>()?;
            if cycle.len() < 2 {
                return Err("a cycle needs at least two tokens".into());
            }
            for k in 0..cycle.len() {
                pairs.push((cycle[k].clone(), cycle[(k + 1) % cycle.len()].clone()));
            }
            rest = after[close + 1..].trim_start();
        } else {
            let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
            let word = &rest[..end];
            let (a, b) = word
                .split_once("->")
                .ok_or_else(|| format!("expected `(a b)` or `a->b`, found {word:?}"))?;
            if a.contains('(') || b.contains('(') || b.contains("->") {
                return Err(format!("malformed pair {word:?}"));
            }
            pairs.push((token(a)?, token(b)?));
            rest = rest[end..].trim_start();
        }
    }
    LabelPermutation::from_pairs(pairs).map_err(|e| e.to_string())
}
