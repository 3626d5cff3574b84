//! Positions of vertices over the orbit simplex.
//!
//! The orbit space of the standard `Z_2^n` action on `RP^n` is the simplex with
//! vertices `e_0, ..., e_n`; `F_i` is the codimension-one face missing `e_i`.
//! The characteristic function assigns `xi_0 = g_1 + ... + g_n` to `F_0` and
//! `xi_i = g_i` to `F_i`. A point over the relative interior of a face `F`
//! (spanned by the vertices in its *carrier*) has isotropy
//! `G_F = < xi_i : F ⊆ F_i > = < xi_i : i ∉ carrier >`, and its orbit is
//! indexed by the cosets of `G_F`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::element::{GroupElement, Subgroup};
use crate::complex::VertexLabel;

/// The characteristic vector `xi_i` of the facet `F_i` of the `n`-simplex.
pub fn characteristic_vector(n: usize, i: usize) -> GroupElement {
    assert!(i <= n, "facet index {i} out of range for dimension {n}");
    if i == 0 {
        GroupElement::all_ones(n)
    } else {
        GroupElement::generator(i)
    }
}

/// `G_F` for the face spanned by `carrier`.
pub fn face_stabilizer(n: usize, carrier: &[usize]) -> Subgroup {
    Subgroup::generated_by(
        n,
        (0..=n)
            .filter(|i| !carrier.contains(i))
            .map(|i| characteristic_vector(n, i)),
    )
}

/// Isotropy of a point of the cross-polytope `P^n` lying over the face spanned
/// by `carrier`: only the coordinate hyperplanes `F_1, ..., F_n` glue, so
/// `xi_0` is left out.
pub fn cross_polytope_stabilizer(n: usize, carrier: &[usize]) -> Subgroup {
    Subgroup::generated_by(
        n,
        (1..=n)
            .filter(|i| !carrier.contains(i))
            .map(|i| characteristic_vector(n, i)),
    )
}

/// Location data of one vertex: carrier face, isotropy subgroup, and which
/// coset of the isotropy subgroup (i.e. which preimage) the vertex is.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FacePosition {
    carrier: Vec<usize>,
    stabilizer: Subgroup,
    coset: GroupElement,
}

impl FacePosition {
    pub fn new(mut carrier: Vec<usize>, stabilizer: Subgroup, g: GroupElement) -> Self {
        carrier.sort_unstable();
        carrier.dedup();
        let coset = stabilizer.coset_rep(g);
        Self {
            carrier,
            stabilizer,
            coset,
        }
    }

    /// Position over `carrier` with the isotropy prescribed by the
    /// characteristic function.
    pub fn standard(n: usize, carrier: Vec<usize>, g: GroupElement) -> Self {
        let stabilizer = face_stabilizer(n, &carrier);
        Self::new(carrier, stabilizer, g)
    }

    /// Indices of the simplex vertices spanning the carrier face.
    pub fn carrier(&self) -> &[usize] {
        &self.carrier
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier.len() - 1
    }

    pub fn stabilizer(&self) -> &Subgroup {
        &self.stabilizer
    }

    pub fn coset(&self) -> GroupElement {
        self.coset
    }

    pub fn orbit_size(&self) -> u64 {
        (1u64 << self.stabilizer.ambient_rank()) / self.stabilizer.order()
    }

    /// The position of `g` applied to this vertex.
    pub fn translate(&self, g: GroupElement) -> Self {
        Self {
            carrier: self.carrier.clone(),
            stabilizer: self.stabilizer.clone(),
            coset: self.stabilizer.coset_rep(self.coset ^ g),
        }
    }

    /// Whether the vertex lies over the facet `F_i`, i.e. in `X_i`.
    pub fn lies_over_facet(&self, i: usize) -> bool {
        !self.carrier.contains(&i)
    }

    /// Same point, coarser gluing: the isotropy is enlarged by `extra`.
    pub fn with_extra_isotropy(&self, extra: GroupElement) -> Self {
        let stabilizer = self
            .stabilizer
            .join(&Subgroup::generated_by(self.stabilizer.ambient_rank(), [extra]));
        Self::new(self.carrier.clone(), stabilizer, self.coset)
    }
}

impl fmt::Display for FacePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let carrier: Vec<String> = self.carrier.iter().map(|i| format!("e{i}")).collect();
        write!(f, "[{}] coset {}", carrier.join(" "), self.coset)
    }
}

/// Serializable summary of a position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositionSummary {
    pub carrier: Vec<usize>,
    pub isotropy_order: u64,
    pub coset: GroupElement,
}

impl From<&FacePosition> for PositionSummary {
    fn from(p: &FacePosition) -> Self {
        Self {
            carrier: p.carrier.clone(),
            isotropy_order: p.stabilizer.order(),
            coset: p.coset,
        }
    }
}

/// A point of the orbit simplex that is fixed by the whole group but is not a
/// vertex: the corner `e_corner` sitting at the midpoint of `edge`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HiddenFixedPoint {
    pub corner: usize,
    pub edge: (VertexLabel, VertexLabel),
}

/// Birth data of a constructed complex: where every vertex lies over the
/// orbit simplex `Δ^n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PositionData {
    pub n: usize,
    pub positions: BTreeMap<VertexLabel, FacePosition>,
    pub hidden_fixed_points: Vec<HiddenFixedPoint>,
}
