use std::collections::BTreeMap;

use super::{check_dimension, corner, lift::build_sigma, midpoint, Constructed};
use crate::complex::{SimplicialComplex, VertexId, VertexLabel};
use crate::error::{Error, Result};
use crate::group::HiddenFixedPoint;

fn label(t: String) -> VertexLabel {
    VertexLabel::new(t).expect("generated tokens are valid")
}

/// The two preimages of the midpoint of `e_i e_j` in `Σ(RP^n)`.
fn pair(i: usize, j: usize) -> (VertexLabel, VertexLabel) {
    let m = midpoint(i, j);
    (label(m.clone()), label(format!("{m}p")))
}

/// `Σ(RP^n)` with every fixed corner removed: the star of `e_i` is an
/// octahedral ball whose boundary has the antipodal pairs
/// `{v_ij, v_ijp}`; it is replaced by the ball that joins one of these pairs
/// (the diagonal, over `v_{i,i+1}`, and over `v_{0n}` for the last corner) to
/// the boundary of the cross-polytope on the remaining pairs. The corner
/// survives only as the midpoint of its diagonal.
pub fn build_reduced(n: usize) -> Result<Constructed> {
    if n < 2 {
        return Err(Error::Unsupported(
            "corner replacement needs n >= 2; a circle cannot have fewer than 3 vertices".into(),
        ));
    }
    check_dimension(n)?;
    let sigma = build_sigma(n)?;
    let c = &sigma.complex;
    let mut facets: Vec<Vec<VertexLabel>> = c
        .facets()
        .iter()
        .filter(|f| {
            !f.iter()
                .any(|&v| c.label(v).as_str().starts_with('e'))
        })
        .map(|f| f.iter().map(|&v| c.label(v).clone()).collect())
        .collect();
    let mut hidden = Vec::new();
    for i in 0..=n {
        let d = if i < n { i + 1 } else { 0 };
        let (a, a2) = pair(i, d);
        let others: Vec<(VertexLabel, VertexLabel)> =
            (0..=n).filter(|&j| j != i && j != d).map(|j| pair(i, j)).collect();
        let corner_label = label(corner(i));
        let old_link = c.link(&crate::complex::Simplex::new(vec![corner_label])?)?;
        if old_link.num_vertices() != 2 * n {
            return Err(Error::ConstructionInvariant(format!(
                "link of e{i} has {} vertices, expected {}",
                old_link.num_vertices(),
                2 * n
            )));
        }
        for mask in 0u64..(1 << others.len()) {
            let mut f = vec![a.clone(), a2.clone()];
            for (k, (p, q)) in others.iter().enumerate() {
                f.push(if mask >> k & 1 == 0 { p.clone() } else { q.clone() });
            }
            facets.push(f);
        }
        hidden.push(HiddenFixedPoint { corner: i, edge: (a, a2) });
    }
    let labels: Vec<VertexLabel> = c
        .labels()
        .iter()
        .filter(|l| !l.as_str().starts_with('e'))
        .cloned()
        .collect();
    let index: BTreeMap<&VertexLabel, VertexId> =
        labels.iter().enumerate().map(|(i, l)| (l, i as VertexId)).collect();
    let ids = facets
        .iter()
        .map(|f| {
            f.iter()
                .map(|t| {
                    index.get(t).copied().ok_or_else(|| {
                        Error::ConstructionInvariant(format!("cavity vertex {t} is not in Σ(RP^{n})"))
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let complex = SimplicialComplex::from_indexed(&labels, ids)?;
    if complex.num_vertices() != n * (n + 1) {
        return Err(Error::ConstructionInvariant(format!(
            "reduced complex has {} vertices, expected {}",
            complex.num_vertices(),
            n * (n + 1)
        )));
    }
    let action = sigma.action.restrict_to(&complex)?;
    let mut positions = sigma.positions.clone();
    positions.positions.retain(|l, _| complex.vertex_id(l).is_some());
    positions.hidden_fixed_points = hidden;
    Ok(Constructed {
        name: format!("reduced-rp{n}"),
        complex,
        action,
        positions,
        apexes: Default::default(),
        notes: sigma.notes.clone(),
        defect: sigma.defect.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_counts() {
        assert!(build_reduced(1).is_err());
        for n in 2..=4 {
            let r = build_reduced(n).unwrap();
            assert_eq!(r.complex.num_vertices(), n * (n + 1));
            assert_eq!(r.positions.hidden_fixed_points.len(), n + 1);
        }
    }
}
