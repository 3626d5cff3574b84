//! The orbit space of an equivariant complex as a simplicial complex.
//!
//! When no facet contains two vertices of one orbit, the quotient is just the
//! image of every facet under the orbit map. Some equivariant triangulations
//! contain facets that are mapped to themselves by a reflection: an edge `u u'`
//! whose endpoints are swapped by a group element. The orbit space then cuts
//! such a facet in half through the midpoint of `u u'`. This module handles
//! that case when the setwise stabilizer of the facet acts on it by disjoint
//! commuting transpositions: each swapped pair `{u, u'}` is replaced by the
//! orbit of `u` and a midpoint vertex `mid(a,b)`, named after the least edge
//! `a b` in the orbit of `u u'`. Any other collision of orbits inside a facet
//! is reported as a non-simplicial quotient.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::action::{check_equivariance, BoundAction, GroupAction};
use super::element::GroupElement;
use crate::complex::{label, Simplex, SimplicialComplex, VertexId, VertexLabel};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub complex: SimplicialComplex,
    /// Number of facets upstairs mapping onto each quotient facet, in facet
    /// order of `complex`.
    pub multiplicities: Vec<u64>,
    /// Orbit representative for every vertex upstairs.
    pub vertex_map: BTreeMap<VertexLabel, VertexLabel>,
    /// One representative edge `(u, u')` per orbit of folded edges.
    pub folded_edges: Vec<(VertexLabel, VertexLabel)>,
}

/// Serializable digest of a quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientSummary {
    pub f_vector: Vec<usize>,
    pub facets: usize,
    pub multiplicity_histogram: BTreeMap<u64, usize>,
    pub folded_edges: Vec<(VertexLabel, VertexLabel)>,
}

impl Quotient {
    pub fn summary(&self) -> QuotientSummary {
        let mut hist = BTreeMap::new();
        for &m in &self.multiplicities {
            *hist.entry(m).or_insert(0) += 1;
        }
        QuotientSummary {
            f_vector: self.complex.f_vector().0,
            facets: self.complex.num_facets(),
            multiplicity_histogram: hist,
            folded_edges: self.folded_edges.clone(),
        }
    }
}

pub fn midpoint_label(a: &VertexLabel, b: &VertexLabel) -> VertexLabel {
    label(&format!("mid({a},{b})"))
}

pub fn quotient_by_action(c: &SimplicialComplex, a: &GroupAction) -> Result<Quotient> {
    check_equivariance(c, a)?.into_result()?;
    let bound = a.bind(c)?;
    let perms = bound.all_permutations();
    let orbit_rep: Vec<VertexId> = (0..c.num_vertices())
        .map(|v| perms.iter().map(|p| p[v]).min().unwrap())
        .collect();

    let mut images: BTreeMap<Vec<VertexLabel>, (u64, u64)> = BTreeMap::new();
    let mut folded: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    for f in c.facets() {
        let (pairs, stab_order) = fold_pairs(c, &perms, f)?;
        let paired: BTreeSet<VertexId> = pairs.iter().flat_map(|&(u, w)| [u, w]).collect();
        let mut image: Vec<VertexLabel> = f
            .iter()
            .filter(|v| !paired.contains(v))
            .map(|&v| c.label(orbit_rep[v as usize]).clone())
            .collect();
        for &(u, w) in &pairs {
            let edge = least_edge_image(&perms, u, w);
            folded.insert(edge);
            image.push(c.label(orbit_rep[u as usize]).clone());
            image.push(midpoint_label(c.label(edge.0), c.label(edge.1)));
        }
        image.sort();
        if image.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NonSimplicialQuotient(format!(
                "facet {} has a degenerate image",
                c.simplex_of(f)
            )));
        }
        let entry = images.entry(image).or_insert((0, perms.len() as u64 / stab_order));
        entry.0 += 1;
        if entry.0 > entry.1 {
            return Err(Error::NonSimplicialQuotient(format!(
                "facet {} has the same image as a facet outside its orbit",
                c.simplex_of(f)
            )));
        }
    }

    let facets = images
        .keys()
        .map(|v| Simplex::new(v.clone()))
        .collect::<Result<Vec<_>>>()?;
    let complex = SimplicialComplex::from_facets(facets)?;
    let multiplicities = complex
        .facet_simplices()
        .iter()
        .map(|s| images[s.vertices()].0)
        .collect();
    let vertex_map = (0..c.num_vertices())
        .map(|v| (c.label(v as VertexId).clone(), c.label(orbit_rep[v]).clone()))
        .collect();
    let folded_edges = folded
        .into_iter()
        .map(|(u, w)| (c.label(u).clone(), c.label(w).clone()))
        .collect();
    Ok(Quotient {
        complex,
        multiplicities,
        vertex_map,
        folded_edges,
    })
}

/// Checks that the group identifies points of the facet `f` only through its
/// setwise stabilizer, acting by disjoint transpositions, and returns those
/// transpositions.
fn fold_pairs(
    c: &SimplicialComplex,
    perms: &[Vec<VertexId>],
    f: &[VertexId],
) -> Result<(Vec<(VertexId, VertexId)>, u64)> {
    let restrict = |p: &Vec<VertexId>| -> Vec<VertexId> { f.iter().map(|&v| p[v as usize]).collect() };
    let setwise: Vec<&Vec<VertexId>> = perms
        .iter()
        .filter(|p| BoundAction::apply_to_face(p, f) == f)
        .collect();
    let stab: Vec<Vec<VertexId>> = setwise
        .iter()
        .map(|p| restrict(p))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    for (g, p) in perms.iter().enumerate() {
        let overlap: Vec<usize> = (0..f.len())
            .filter(|&i| f.binary_search(&p[f[i] as usize]).is_ok())
            .collect();
        let agrees = stab
            .iter()
            .any(|s| overlap.iter().all(|&i| s[i] == p[f[i] as usize]));
        if !agrees {
            return Err(Error::NonSimplicialQuotient(format!(
                "element {} identifies vertices of facet {} in a way its stabilizer does not",
                GroupElement(g as u64),
                c.simplex_of(f)
            )));
        }
    }

    let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
    for s in &stab {
        let moved: Vec<usize> = (0..f.len()).filter(|&i| s[i] != f[i]).collect();
        if moved.len() == 2 {
            pairs.push((f[moved[0]], f[moved[1]]));
        }
    }
    let touched: BTreeSet<VertexId> = pairs.iter().flat_map(|&(u, w)| [u, w]).collect();
    if touched.len() != 2 * pairs.len() || stab.len() != 1 << pairs.len() {
        return Err(Error::NonSimplicialQuotient(format!(
            "stabilizer of facet {} does not act by disjoint reflections",
            c.simplex_of(f)
        )));
    }
    Ok((pairs, setwise.len() as u64))
}

fn least_edge_image(perms: &[Vec<VertexId>], u: VertexId, w: VertexId) -> (VertexId, VertexId) {
    perms
        .iter()
        .map(|p| {
            let (x, y) = (p[u as usize], p[w as usize]);
            (x.min(y), x.max(y))
        })
        .min()
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::action::LabelPermutation;

    fn cx(facets: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(
            facets
                .iter()
                .map(|f| Simplex::from_tokens(f).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_action_gives_input() {
        let c = cx(&[&["a", "b", "c"], &["a", "c", "d"]]);
        let q = quotient_by_action(&c, &GroupAction::identity(2)).unwrap();
        assert_eq!(q.complex, c);
        assert_eq!(q.multiplicities, vec![1, 1]);
    }

    #[test]
    fn folding_a_segment() {
        // the reflection of an edge about its midpoint
        let c = cx(&[&["a", "b"]]);
        let a = GroupAction::new(vec![LabelPermutation::from_transpositions([("a", "b")]).unwrap()])
            .unwrap();
        let q = quotient_by_action(&c, &a).unwrap();
        assert_eq!(q.complex, cx(&[&["a", "mid(a,b)"]]));
        assert_eq!(q.multiplicities, vec![1]);
        assert_eq!(q.folded_edges.len(), 1);
    }

    #[test]
    fn rotation_is_not_a_fold() {
        // a triangle with a half-turn-like swap of two vertices is a fold,
        // but the square with a rotation by a quarter is not an involution;
        // use the double swap of a 4-cycle instead.
        let c = cx(&[&["a", "b"], &["b", "c"], &["c", "d"], &["a", "d"]]);
        let a = GroupAction::new(vec![
            LabelPermutation::from_transpositions([("a", "c"), ("b", "d")]).unwrap(),
        ])
        .unwrap();
        // free action on a 4-cycle: the orbit space is a 2-gon
        assert!(matches!(
            quotient_by_action(&c, &a),
            Err(Error::NonSimplicialQuotient(_))
        ));
        let bad = cx(&[&["a", "b", "c"]]);
        let rot = GroupAction::new(vec![
            LabelPermutation::from_transpositions([("a", "b")]).unwrap(),
            LabelPermutation::from_transpositions([("b", "c")]).unwrap(),
        ]);
        assert!(rot.is_err());
        let swap3 = GroupAction::new(vec![
            LabelPermutation::from_transpositions([("a", "b")]).unwrap(),
            LabelPermutation::from_transpositions([("a", "b")]).unwrap(),
        ])
        .unwrap();
        // both generators act the same way; still a single reflection
        assert!(quotient_by_action(&bad, &swap3).is_ok());
    }

    #[test]
    fn non_equivariant_input_is_rejected() {
        let c = cx(&[&["a", "b", "c"], &["a", "c", "d"]]);
        let a = GroupAction::new(vec![LabelPermutation::from_transpositions([("a", "b")]).unwrap()])
            .unwrap();
        assert!(matches!(
            quotient_by_action(&c, &a),
            Err(Error::NotEquivariant { .. })
        ));
    }
}
