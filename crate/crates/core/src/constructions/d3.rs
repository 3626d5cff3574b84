//! Two `Z_2^3`-equivariant triangulations of the 3-ball bounded by the
//! octahedron `x± y± z±`, with `g1`, `g2`, `g3` flipping the signs of `x`,
//! `y`, `z`. Both model a neighbourhood of the corner `e0` of the orbit
//! simplex: the octahedron vertices lie over the edges `e0 e1`, `e0 e2`,
//! `e0 e3`.

use std::collections::BTreeMap;

use super::{action_from_positions, Constructed};
use crate::complex::{Simplex, SimplicialComplex, VertexLabel};
use crate::error::Result;
use crate::group::{FacePosition, GroupElement, HiddenFixedPoint, PositionData};

pub const OCT_DIAG: &str = "OCT_DIAG";
pub const OCT_CONE: &str = "OCT_CONE";

const AXES: [char; 3] = ['x', 'y', 'z'];

fn token(axis: usize, negative: bool) -> String {
    format!("{}{}", AXES[axis], if negative { '-' } else { '+' })
}

fn positions(with_apex: bool) -> BTreeMap<VertexLabel, FacePosition> {
    let mut out = BTreeMap::new();
    for axis in 0..3 {
        for neg in [false, true] {
            let g = if neg { GroupElement::generator(axis + 1) } else { GroupElement::IDENTITY };
            out.insert(
                VertexLabel::new(token(axis, neg)).unwrap(),
                FacePosition::standard(3, vec![0, axis + 1], g),
            );
        }
    }
    if with_apex {
        out.insert(
            VertexLabel::new("o").unwrap(),
            FacePosition::standard(3, vec![0], GroupElement::IDENTITY),
        );
    }
    out
}

fn name_of(p: &FacePosition) -> VertexLabel {
    let t = match p.carrier() {
        [0] => "o".to_string(),
        [0, k] => token(k - 1, !p.coset().is_identity()),
        other => unreachable!("no block vertex over {other:?}"),
    };
    VertexLabel::new(t).unwrap()
}

fn block(name: &str, facets: Vec<Vec<String>>, with_apex: bool) -> Result<Constructed> {
    let complex = SimplicialComplex::from_facets(
        facets
            .iter()
            .map(|f| Simplex::from_tokens(f))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let positions = positions(with_apex);
    let action = action_from_positions(3, &positions, name_of)?;
    let mut data = PositionData {
        n: 3,
        positions,
        hidden_fixed_points: Vec::new(),
    };
    let mut apexes = std::collections::BTreeSet::new();
    if with_apex {
        apexes.insert(VertexLabel::new("o")?);
    } else {
        data.hidden_fixed_points.push(HiddenFixedPoint {
            corner: 0,
            edge: (VertexLabel::new("x+")?, VertexLabel::new("x-")?),
        });
    }
    Ok(Constructed {
        name: name.to_string(),
        complex,
        action,
        positions: data,
        apexes,
        notes: Vec::new(),
        defect: None,
    })
}

/// `OCT_DIAG`: the diagonal `x+ x-` joined to the square `y± z±`, four
/// tetrahedra and no interior vertex. `OCT_CONE`: the cone from the center
/// `o` over the octahedron, eight tetrahedra.
pub fn build_d3_blocks() -> Result<Vec<Constructed>> {
    let mut diag = Vec::new();
    let mut cone = Vec::new();
    for ny in [false, true] {
        for nz in [false, true] {
            diag.push(vec![token(0, false), token(0, true), token(1, ny), token(2, nz)]);
            for nx in [false, true] {
                cone.push(vec!["o".to_string(), token(0, nx), token(1, ny), token(2, nz)]);
            }
        }
    }
    Ok(vec![block(OCT_DIAG, diag, false)?, block(OCT_CONE, cone, true)?])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_vectors() {
        let blocks = build_d3_blocks().unwrap();
        assert_eq!(blocks[0].complex.f_vector().0, vec![6, 13, 12, 4]);
        assert_eq!(blocks[1].complex.f_vector().0, vec![7, 18, 20, 8]);
        for b in &blocks {
            assert_eq!(b.complex.boundary_complex().num_facets(), 8);
        }
    }
}
