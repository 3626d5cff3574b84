//! Combinatorial oracles for the structural lemmas on equivariant
//! triangulations of projective space.

use serde::Serialize;

use super::links::{recognize_sphere, LinkStatus};
use crate::complex::{SimplicialComplex, VertexId};
use crate::error::Result;
use crate::group::action::{BoundAction, GroupAction};
use crate::group::element::GroupElement;
use crate::group::position::PositionData;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaOutcome {
    pub status: LemmaStatus,
    pub detail: String,
}

impl LemmaOutcome {
    fn from_bool(ok: bool, detail: String) -> Self {
        Self {
            status: if ok { LemmaStatus::Pass } else { LemmaStatus::Fail },
            detail,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == LemmaStatus::Pass
    }
}

/// The number of non-fixed vertices is even.
pub fn lemma1_parity(c: &SimplicialComplex, a: &GroupAction) -> Result<LemmaOutcome> {
    let fixed = a.bind(c)?.fixed_points().len();
    let moved = c.num_vertices() - fixed;
    Ok(LemmaOutcome::from_bool(
        moved % 2 == 0,
        format!("{} vertices, {fixed} fixed, {moved} moved", c.num_vertices()),
    ))
}

/// Invariant spheres of codimension one have an even number of vertices,
/// at least twice the rank. The spheres examined are the links of fixed
/// vertices and the boundaries of closed stars of edges that every group
/// element maps to themselves.
pub fn lemma3_bound(c: &SimplicialComplex, a: &GroupAction) -> Result<LemmaOutcome> {
    let bound = a.bind(c)?;
    let n = a.rank();
    let d = c.dim();
    if d < 1 {
        return Ok(LemmaOutcome {
            status: LemmaStatus::NotApplicable,
            detail: "complex has no codimension-one spheres".into(),
        });
    }
    let mut spheres: Vec<(String, SimplicialComplex)> = Vec::new();
    for v in bound.fixed_points() {
        spheres.push((format!("link of {}", c.label(v)), c.link_ids(&[v])));
    }
    let perms: Vec<Vec<VertexId>> = (1..=n)
        .map(|k| bound.permutation(GroupElement::generator(k)))
        .collect();
    for e in c.faces(1) {
        let invariant = perms
            .iter()
            .all(|p| BoundAction::apply_to_face(p, e) == *e);
        let fixed_pointwise = perms.iter().all(|p| p[e[0] as usize] == e[0]);
        if invariant && !fixed_pointwise {
            let star = c.star_ids(e);
            spheres.push((
                format!("boundary of the star of {}", c.simplex_of(e)),
                star.boundary_complex(),
            ));
        }
    }
    let mut checked = 0;
    let mut failures = Vec::new();
    for (name, s) in &spheres {
        if recognize_sphere(s, (d - 1) as usize) == LinkStatus::Failed {
            continue;
        }
        checked += 1;
        let v = s.num_vertices();
        if v % 2 != 0 || v < 2 * n {
            failures.push(format!("{name} has {v} vertices"));
        }
    }
    let detail = if failures.is_empty() {
        format!("{checked} invariant spheres, all with an even vertex count >= {}", 2 * n)
    } else {
        failures.join("; ")
    };
    Ok(LemmaOutcome::from_bool(failures.is_empty(), detail))
}

/// A facet through a fixed corner `e_i` has no vertex over the opposite
/// facet `F_i`. Corners hidden at midpoints of edges count as well.
pub fn lemma4_isotropy(c: &SimplicialComplex, positions: Option<&PositionData>) -> LemmaOutcome {
    let Some(data) = positions else {
        return LemmaOutcome {
            status: LemmaStatus::NotApplicable,
            detail: "no position data".into(),
        };
    };
    let carrier_of = |v: VertexId| data.positions.get(c.label(v)).map(|p| p.carrier().to_vec());
    let mut centers: Vec<(usize, Vec<VertexId>)> = Vec::new();
    for (l, p) in &data.positions {
        if p.carrier().len() == 1 && p.orbit_size() == 1 {
            if let Some(v) = c.vertex_id(l) {
                centers.push((p.carrier()[0], vec![v]));
            }
        }
    }
    for h in &data.hidden_fixed_points {
        if let (Some(a), Some(b)) = (c.vertex_id(&h.edge.0), c.vertex_id(&h.edge.1)) {
            centers.push((h.corner, vec![a.min(b), a.max(b)]));
        }
    }
    let mut facets_checked = 0;
    for (i, face) in &centers {
        for f in c.facets().iter().filter(|f| face.iter().all(|v| f.contains(v))) {
            facets_checked += 1;
            for &v in f {
                match carrier_of(v) {
                    Some(carrier) if carrier.contains(i) => {}
                    Some(_) => {
                        return LemmaOutcome::from_bool(
                            false,
                            format!(
                                "facet {} through e{i} has vertex {} over F{i}",
                                c.simplex_of(f),
                                c.label(v)
                            ),
                        )
                    }
                    None => {
                        return LemmaOutcome::from_bool(
                            false,
                            format!("vertex {} has no position", c.label(v)),
                        )
                    }
                }
            }
        }
    }
    LemmaOutcome::from_bool(
        true,
        format!(
            "{} fixed corners, {facets_checked} incident facets checked",
            centers.len()
        ),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub lemma1_parity: LemmaOutcome,
    pub lemma3_bound: LemmaOutcome,
    pub lemma4_isotropy: LemmaOutcome,
}

impl LemmaReport {
    pub fn all_applicable_pass(&self) -> bool {
        [&self.lemma1_parity, &self.lemma3_bound, &self.lemma4_isotropy]
            .iter()
            .all(|o| o.status != LemmaStatus::Fail)
    }
}

pub fn lemma_report(
    c: &SimplicialComplex,
    a: &GroupAction,
    positions: Option<&PositionData>,
) -> Result<LemmaReport> {
    Ok(LemmaReport {
        lemma1_parity: lemma1_parity(c, a)?,
        lemma3_bound: lemma3_bound(c, a)?,
        lemma4_isotropy: lemma4_isotropy(c, positions),
    })
}
