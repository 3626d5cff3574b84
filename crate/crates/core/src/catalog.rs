//! Small equivariant triangulations given by explicit facet lists.
//!
//! The 3-dimensional entries use single-character tokens `1`-`9`, `a`-`e`.
//! The 17-vertex `RP^4` is stored as orbit representatives and expanded under
//! its `Z_2^4` action; its tokens are midpoints `v03`, `v03p`, ..., the fixed
//! corner `v2`, and the lifts `u1, u11, u12, u13` and `u2, u21, u22, u23` of
//! the barycenters of `v0 v1 v2` and `v2 v3 v4`.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex, VertexLabel};
use crate::constructions::action_from_positions;
use crate::error::{Error, Result};
use crate::group::{FacePosition, GroupAction, GroupElement, PositionData};
use crate::verify::Verdict;

pub const IDS: [&str; 5] = ["RP2_6", "RP3_14", "RP3_11A", "RP3_11B", "RP4_17"];

const RP2_6: &str = "123, 134, 145, 156, 126, 235, 346, 245, 356, 246";

const RP3_14: &str = "1569, 156e, 1679, 167e, 1789, 178e, 1589, 158e, 258a, 258c, 268a, 268c, 267a, \
    267c, 257a, 257c, 356b, 356d, 368b, 368d, 378b, 378d, 357b, 357d, 49ab, 49bc, \
    49cd, 49ad, 4abe, 4bce, 4cde, 4ade, 59ab, 5cde, 69bc, 6ade, 79cd, 7abe, 89ad, \
    8bce, 58ce, 589a, 569b, 56de, 67ae, 679c, 78be, 789d, 57ab, 57cd, 68bc, 68ad";

/// `RP3_14` with `1, 2, 3` removed and their stars refilled.
const RP3_11A: &str = "569e, 679e, 789e, 589e, 58ac, 68ac, 67ac, 57ac, 56bd, 68bd, 78bd, 57bd, 49ab, 49bc, \
    49cd, 49ad, 4abe, 4bce, 4cde, 4ade, 59ab, 5cde, 69bc, 6ade, 79cd, 7abe, 89ad, 8bce, \
    58ce, 589a, 569b, 56de, 67ae, 679c, 78be, 789d, 57ab, 57cd, 68bc, 68ad";

/// `RP3_14` with `2, 3, 4` removed and their stars refilled.
const RP3_11B: &str = "1569, 156e, 1679, 167e, 1789, 178e, 1589, 158e, 58ac, 68ac, 67ac, 57ac, 56bd, 68bd, \
    78bd, 57bd, 9abe, 9bce, 9cde, 9ade, 59ab, 5cde, 69bc, 6ade, 79cd, 7abe, 89ad, 8bce, \
    58ce, 589a, 569b, 56de, 67ae, 679c, 78be, 789d, 57ab, 57cd, 68bc, 68ad";

/// Orbit representatives of the 17-vertex `RP^4`, grouped by the cell of the
/// orbit simplex they lie over.
const RP4_17_GENERATORS: [&str; 20] = [
    "v03 u1 u11 v04 v04p",
    "v03 u1 u12 v04 v04p",
    "v14 u1 u12 v13 v13p",
    "v14 u1 u13 v13 v13p",
    "v2 u1 u13 u2 u23",
    "v2 u1 u12 u2 u22",
    "v13 u2 u21 v03 v03p",
    "v13 u2 u23 v03 v03p",
    "v04 u2 u21 v14 v14p",
    "v04 u2 u22 v14 v14p",
    "v04 v14 v13 u1 u2",
    "v03 v13 v04 u1 u2",
    "v04 v14 v13 u1 u12",
    "v03 v04 v13 u1 u12",
    "v13 u1 u13 u2 u23",
    "v14 u1 u13 u2 u22",
    "v03 u1 u11 u2 u23",
    "v04 u1 u11 u2 u22",
    "v04 v14 v13 u2 u21",
    "v03 v04 v13 u2 u21",
];

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub complex: SimplicialComplex,
    /// Present for entries stored as orbit representatives.
    pub action: Option<GroupAction>,
    pub positions: Option<PositionData>,
    pub expected_vertices: usize,
    pub expected_facets: Option<usize>,
    pub target: Verdict,
    pub description: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogSummary {
    pub id: &'static str,
    pub f_vector: Vec<usize>,
    pub target: Verdict,
    pub declared_action: bool,
    pub description: &'static str,
}

impl CatalogEntry {
    pub fn summary(&self) -> CatalogSummary {
        CatalogSummary {
            id: self.id,
            f_vector: self.complex.f_vector().0,
            target: self.target,
            declared_action: self.action.is_some(),
            description: self.description,
        }
    }
}

fn parse_compact(id: &str, list: &str) -> Result<SimplicialComplex> {
    let mut facets = Vec::new();
    for word in list.split(',').map(str::trim) {
        let tokens: Vec<String> = word.chars().map(String::from).collect();
        facets.push(checked_simplex(id, &tokens)?);
    }
    SimplicialComplex::from_facets(facets)
}

fn checked_simplex<S: AsRef<str>>(id: &str, tokens: &[S]) -> Result<Simplex> {
    let set: BTreeSet<&str> = tokens.iter().map(AsRef::as_ref).collect();
    if set.len() != tokens.len() {
        let shown: Vec<&str> = tokens.iter().map(AsRef::as_ref).collect();
        return Err(Error::CatalogData(format!(
            "{id}: facet {} repeats a vertex",
            shown.join(" ")
        )));
    }
    Simplex::from_tokens(tokens)
}

fn rp4_positions() -> Vec<(&'static str, FacePosition)> {
    let g = GroupElement::generator;
    let id = GroupElement::IDENTITY;
    let at = |carrier: &[usize], e: GroupElement| FacePosition::standard(4, carrier.to_vec(), e);
    vec![
        ("v2", at(&[2], id)),
        ("v03", at(&[0, 3], id)),
        ("v03p", at(&[0, 3], g(3))),
        ("v04", at(&[0, 4], id)),
        ("v04p", at(&[0, 4], g(4))),
        ("v13", at(&[1, 3], id)),
        ("v13p", at(&[1, 3], g(1))),
        ("v14", at(&[1, 4], id)),
        ("v14p", at(&[1, 4], g(1))),
        ("u1", at(&[0, 1, 2], id)),
        ("u11", at(&[0, 1, 2], g(1))),
        ("u12", at(&[0, 1, 2], g(2))),
        ("u13", at(&[0, 1, 2], g(1) ^ g(2))),
        ("u2", at(&[2, 3, 4], id)),
        ("u21", at(&[2, 3, 4], g(2))),
        ("u22", at(&[2, 3, 4], g(3))),
        ("u23", at(&[2, 3, 4], g(4))),
    ]
}

/// Expands the orbit representatives of the 17-vertex `RP^4` under `Z_2^4`.
fn expand_rp4() -> Result<(SimplicialComplex, GroupAction, PositionData)> {
    let table = rp4_positions();
    let by_token: HashMap<&str, &FacePosition> = table.iter().map(|(t, p)| (*t, p)).collect();
    let by_position: HashMap<&FacePosition, &str> = table.iter().map(|(t, p)| (p, *t)).collect();
    if by_position.len() != table.len() {
        return Err(Error::CatalogData("RP4_17: two tokens share a position".into()));
    }
    let name = |p: &FacePosition| -> Result<&str> {
        by_position
            .get(p)
            .copied()
            .ok_or_else(|| Error::CatalogData(format!("RP4_17: no token at position {p}")))
    };
    let mut facets = BTreeSet::new();
    for generator in RP4_17_GENERATORS {
        let tokens: Vec<&str> = generator.split_whitespace().collect();
        checked_simplex("RP4_17", &tokens)?;
        let base: Vec<&FacePosition> = tokens
            .iter()
            .map(|t| {
                by_token
                    .get(t)
                    .copied()
                    .ok_or_else(|| Error::CatalogData(format!("RP4_17: unknown token {t}")))
            })
            .collect::<Result<_>>()?;
        for g in GroupElement::all(4) {
            let image: Vec<&str> = base.iter().map(|p| name(&p.translate(g))).collect::<Result<_>>()?;
            facets.insert(checked_simplex("RP4_17", &image)?);
        }
    }
    let complex = SimplicialComplex::from_facets(facets.into_iter().collect())?;
    let positions: std::collections::BTreeMap<VertexLabel, FacePosition> = table
        .iter()
        .map(|(t, p)| Ok((VertexLabel::new(*t)?, p.clone())))
        .collect::<Result<_>>()?;
    let action = action_from_positions(4, &positions, |p| {
        VertexLabel::new(by_position[p]).expect("catalog tokens are valid")
    })?;
    Ok((
        complex,
        action,
        PositionData {
            n: 4,
            positions,
            hidden_fixed_points: Vec::new(),
        },
    ))
}

pub fn load(id: &str) -> Result<CatalogEntry> {
    let (id, complex, action, positions, expected_vertices, expected_facets, target, description) = match id {
        "RP2_6" => (
            "RP2_6",
            parse_compact(id, RP2_6)?,
            None,
            None,
            6,
            Some(10),
            Verdict::ProjectiveSpace(2),
            "the 6-vertex real projective plane",
        ),
        "RP3_14" => (
            "RP3_14",
            parse_compact(id, RP3_14)?,
            None,
            None,
            14,
            Some(52),
            Verdict::ProjectiveSpace(3),
            "14-vertex Z_2^3-equivariant RP^3 from the cross-polytope with antipodal boundary",
        ),
        "RP3_11A" => (
            "RP3_11A",
            parse_compact(id, RP3_11A)?,
            None,
            None,
            11,
            Some(40),
            Verdict::ProjectiveSpace(3),
            "11-vertex Z_2^3-equivariant RP^3, vertices 1 2 3 of RP3_14 removed",
        ),
        "RP3_11B" => (
            "RP3_11B",
            parse_compact(id, RP3_11B)?,
            None,
            None,
            11,
            Some(40),
            Verdict::ProjectiveSpace(3),
            "11-vertex Z_2^3-equivariant RP^3, vertices 2 3 4 of RP3_14 removed",
        ),
        "RP4_17" => {
            let (c, a, p) = expand_rp4()?;
            (
                "RP4_17",
                c,
                Some(a),
                Some(p),
                17,
                None,
                Verdict::ProjectiveSpace(4),
                "17-vertex Z_2^4-equivariant RP^4 expanded from 20 orbit representatives",
            )
        }
        other => return Err(Error::UnknownCatalogId(other.to_string())),
    };
    if complex.num_vertices() != expected_vertices {
        return Err(Error::CatalogData(format!(
            "{id}: {} vertices, expected {expected_vertices}",
            complex.num_vertices()
        )));
    }
    if let Some(f) = expected_facets {
        if complex.num_facets() != f {
            return Err(Error::CatalogData(format!(
                "{id}: {} facets, expected {f}",
                complex.num_facets()
            )));
        }
    }
    Ok(CatalogEntry {
        id,
        complex,
        action,
        positions,
        expected_vertices,
        expected_facets,
        target,
        description,
    })
}

pub fn all() -> Result<Vec<CatalogEntry>> {
    IDS.iter().map(|id| load(id)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        for e in all().unwrap() {
            assert_eq!(e.complex.num_vertices(), e.expected_vertices, "{}", e.id);
        }
        assert!(matches!(load("RP5_1"), Err(Error::UnknownCatalogId(_))));
    }

    #[test]
    fn repeated_vertex_is_rejected() {
        assert!(matches!(parse_compact("X", "123, 1124"), Err(Error::CatalogData(_))));
    }

    #[test]
    fn rp4_orbits() {
        let e = load("RP4_17").unwrap();
        let a = e.action.unwrap();
        let u1 = VertexLabel::new("u1").unwrap();
        let orbit: BTreeSet<String> = GroupElement::all(4)
            .map(|g| a.apply(g, &u1).as_str().to_string())
            .collect();
        assert_eq!(orbit, ["u1", "u11", "u12", "u13"].map(String::from).into());
    }
}
