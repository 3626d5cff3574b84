//! Explicit equivariant triangulations: the subdivision `Y^n` of the orbit
//! simplex, its reflection to the cross-polytope, the antipodal quotient
//! `Σ(RP^n)` with `(n+1)^2` vertices, the corner-replaced variant with
//! `n(n+1)` vertices, and two octahedral ball blocks.
//!
//! Token scheme: corners are `e0..en`, edge midpoints `v01..v(n-1)n`. In the
//! cross-polytope a vertex carries one sign per nonzero coordinate, so the
//! copies of `v12` are `v12++`, `v12+-`, `v12-+`, `v12--` (`+` where the
//! reflecting group element has a zero bit). In `Σ(RP^n)` the two preimages
//! of a midpoint are `v01` and `v01p`.

mod d3;
mod hypersimplex;
mod lift;
mod reduced;
mod yn;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

pub use d3::{build_d3_blocks, OCT_CONE, OCT_DIAG};
pub use hypersimplex::{normalized_volume, placing_triangulation, subdivide_hypersimplex};
pub use lift::{antipodal_quotient, build_sigma, lift_to_cross_polytope, sigma_direct};
pub use reduced::build_reduced;
pub use yn::build_yn;

use crate::complex::{Simplex, SimplicialComplex, VertexLabel};
use crate::error::{Error, Result};
use crate::group::{FacePosition, GroupAction, GroupElement, LabelPermutation, PositionData};

/// Largest `n` whose tokens stay unambiguous with single-digit indices.
pub const MAX_DIMENSION: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointRole {
    Corner,
    EdgeMidpoint,
    TriangleBarycenter,
    /// Cone point added at a corner.
    Apex,
}

impl fmt::Display for PointRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointRole::Corner => "corner",
            PointRole::EdgeMidpoint => "edge-midpoint",
            PointRole::TriangleBarycenter => "triangle-barycenter",
            PointRole::Apex => "apex",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPoint {
    pub token: VertexLabel,
    pub position: FacePosition,
    pub role: PointRole,
}

/// A complex together with the action and positions it was built with.
#[derive(Clone, Debug)]
pub struct Constructed {
    pub name: String,
    pub complex: SimplicialComplex,
    pub action: GroupAction,
    pub positions: PositionData,
    pub apexes: BTreeSet<VertexLabel>,
    pub notes: Vec<String>,
    /// Set when a gluing step merged faces it should have kept apart.
    pub defect: Option<IdentificationDefect>,
}

/// Two faces with the same vertex set after a gluing that should have kept
/// them distinct: the result is a simplicial cell complex, and its vertex-set
/// closure has fewer faces than the glued space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentificationDefect {
    pub expected_f_vector: Vec<usize>,
    pub actual_f_vector: Vec<usize>,
    /// Two faces upstairs and their common image.
    pub example: (Simplex, Simplex, Simplex),
}

impl Constructed {
    pub fn points(&self) -> Vec<LabeledPoint> {
        self.positions
            .positions
            .iter()
            .map(|(token, position)| {
                let role = if self.apexes.contains(token) {
                    PointRole::Apex
                } else {
                    match position.carrier_dim() {
                        0 => PointRole::Corner,
                        1 => PointRole::EdgeMidpoint,
                        _ => PointRole::TriangleBarycenter,
                    }
                };
                LabeledPoint {
                    token: token.clone(),
                    position: position.clone(),
                    role,
                }
            })
            .collect()
    }
}

pub(crate) fn corner(i: usize) -> String {
    format!("e{i}")
}

pub(crate) fn midpoint(i: usize, j: usize) -> String {
    let (a, b) = (i.min(j), i.max(j));
    format!("v{a}{b}")
}

fn base_token(carrier: &[usize]) -> String {
    match carrier {
        [i] => corner(*i),
        [i, j] => midpoint(*i, *j),
        _ => format!("b{}", carrier.iter().map(|i| i.to_string()).collect::<String>()),
    }
}

pub(crate) fn check_dimension(n: usize) -> Result<()> {
    if n > MAX_DIMENSION {
        return Err(Error::Unsupported(format!(
            "dimension {n} exceeds {MAX_DIMENSION}; tokens use single-digit indices"
        )));
    }
    Ok(())
}

/// Names a vertex of the orbit simplex `Y^n` or of `Σ(RP^n)`: the second
/// preimage of a midpoint gets a `p` suffix.
pub(crate) fn sigma_token(p: &FacePosition) -> VertexLabel {
    let mut t = base_token(p.carrier());
    if !p.coset().is_identity() {
        t.push('p');
    }
    VertexLabel::new(t).expect("generated tokens are valid")
}

/// Names a vertex of the cross-polytope by the signs of its nonzero
/// coordinates.
pub(crate) fn lift_token(p: &FacePosition) -> VertexLabel {
    let mut t = base_token(p.carrier());
    for &k in p.carrier().iter().filter(|&&k| k > 0) {
        t.push(if p.coset().has_generator(k) { '-' } else { '+' });
    }
    VertexLabel::new(t).expect("generated tokens are valid")
}

/// Builds the complex, position map and generator permutations from facets
/// given as positions. `name_of` must be injective on distinct positions.
pub(crate) fn assemble(
    name: &str,
    n: usize,
    facets: &[Vec<FacePosition>],
    name_of: impl Fn(&FacePosition) -> VertexLabel,
) -> Result<Constructed> {
    let mut positions: BTreeMap<VertexLabel, FacePosition> = BTreeMap::new();
    let mut named: BTreeSet<Vec<VertexLabel>> = BTreeSet::new();
    for f in facets {
        let mut tokens = Vec::with_capacity(f.len());
        for p in f {
            let t = name_of(p);
            if let Some(prev) = positions.insert(t.clone(), p.clone()) {
                if prev != *p {
                    return Err(Error::ConstructionInvariant(format!(
                        "token {t} names two positions {prev} and {p}"
                    )));
                }
            }
            tokens.push(t);
        }
        tokens.sort();
        if tokens.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::ConstructionInvariant(format!(
                "facet {} of {name} repeats a vertex",
                tokens.iter().map(|t| t.as_str()).collect::<Vec<_>>().join(" ")
            )));
        }
        named.insert(tokens);
    }
    let labels: Vec<VertexLabel> = positions.keys().cloned().collect();
    let index: BTreeMap<&VertexLabel, u32> = labels.iter().enumerate().map(|(i, l)| (l, i as u32)).collect();
    let complex = SimplicialComplex::from_indexed(
        &labels,
        named.iter().map(|f| f.iter().map(|t| index[t]).collect()),
    )?;
    let action = action_from_positions(n, &positions, &name_of)?;
    Ok(Constructed {
        name: name.to_string(),
        complex,
        action,
        positions: PositionData {
            n,
            positions,
            hidden_fixed_points: Vec::new(),
        },
        apexes: BTreeSet::new(),
        notes: Vec::new(),
        defect: None,
    })
}

/// The generator permutations induced on tokens by translating positions.
pub fn action_from_positions(
    n: usize,
    positions: &BTreeMap<VertexLabel, FacePosition>,
    name_of: impl Fn(&FacePosition) -> VertexLabel,
) -> Result<GroupAction> {
    let mut gens = Vec::with_capacity(n);
    for k in 1..=n {
        let g = GroupElement::generator(k);
        let pairs = positions
            .iter()
            .map(|(t, p)| (t.clone(), name_of(&p.translate(g))));
        gens.push(LabelPermutation::from_pairs(pairs)?);
    }
    GroupAction::new(gens)
}
