//! Simplicial automorphism groups and their elementary abelian subgroups.
//!
//! The automorphism group is computed as a stabilizer chain along the search
//! order of the isomorphism matcher: level `i` fixes the first `i` base points
//! and collects one automorphism per point of the orbit of the next base point
//! that is not yet reached by the generators already known. Levels are
//! processed deepest first, so the generators of deeper levels are available
//! when orbits of shallower levels are computed, and the group order is the
//! product of the orbit lengths.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use super::action::{GroupAction, LabelPermutation};
use super::quotient::{quotient_by_action, QuotientSummary};
use crate::complex::{SimplicialComplex, VertexId, VertexLabel};
use crate::search::iso::Matcher;
use crate::verify::{recognize, Verdict};

pub type Permutation = Vec<VertexId>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismGroup {
    generators: Vec<Permutation>,
    orbit_lengths: Vec<usize>,
    degree: usize,
}

impl AutomorphismGroup {
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.orbit_lengths.iter().map(|&l| l as u128).product()
    }

    /// Generators as token permutations of `c`.
    pub fn generator_permutations(&self, c: &SimplicialComplex) -> Vec<LabelPermutation> {
        self.generators
            .iter()
            .map(|p| to_label_permutation(c, p))
            .collect()
    }

    /// All elements, sorted, or `None` when the order exceeds `cap`.
    pub fn elements(&self, cap: usize) -> Option<Vec<Permutation>> {
        if self.order() > cap as u128 {
            return None;
        }
        let id: Permutation = (0..self.degree as VertexId).collect();
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = compose(g, &x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<Permutation> = seen.into_iter().collect();
        out.sort();
        debug_assert_eq!(out.len() as u128, self.order());
        Some(out)
    }
}

/// `(a ∘ b)(v) = a(b(v))`.
pub fn compose(a: &[VertexId], b: &[VertexId]) -> Permutation {
    b.iter().map(|&v| a[v as usize]).collect()
}

pub fn inverse(a: &[VertexId]) -> Permutation {
    let mut out = vec![0; a.len()];
    for (i, &v) in a.iter().enumerate() {
        out[v as usize] = i as VertexId;
    }
    out
}

fn to_label_permutation(c: &SimplicialComplex, p: &[VertexId]) -> LabelPermutation {
    LabelPermutation::from_pairs(
        p.iter()
            .enumerate()
            .map(|(v, &w)| (c.label(v as VertexId).clone(), c.label(w).clone())),
    )
    .expect("automorphisms are bijections")
}

pub fn automorphism_group(c: &SimplicialComplex) -> AutomorphismGroup {
    let n = c.num_vertices();
    if c.is_empty() {
        return AutomorphismGroup {
            generators: Vec::new(),
            orbit_lengths: Vec::new(),
            degree: 0,
        };
    }
    let m = Matcher::new(c, c).expect("a complex matches itself");
    let base = m.order().to_vec();
    let mut generators: Vec<Permutation> = Vec::new();
    let mut orbit_lengths = vec![1usize; n];
    for level in (0..n).rev() {
        let b = base[level];
        let mut candidates: Vec<VertexId> = m.candidates_b(m.color_a(b)).to_vec();
        candidates.sort_unstable();
        let mut orbit = orbit_of(b, &generators);
        // Candidates are tried concurrently; results are merged in candidate
        // order so the generating set is deterministic.
        let seed_prefix: Vec<VertexId> = base[..level].to_vec();
        let pending: Vec<VertexId> = candidates
            .into_iter()
            .filter(|x| !orbit.contains(x))
            .collect();
        let found: Vec<(VertexId, Option<Permutation>)> = pending
            .par_iter()
            .map(|&x| {
                let mut seed = seed_prefix.clone();
                seed.push(x);
                let mut hit = None;
                m.search(&seed, &mut |map| {
                    hit = Some(map.to_vec());
                    false
                });
                (x, hit)
            })
            .collect();
        // A candidate without a hit is outside the orbit for good.
        for (x, hit) in found {
            if let Some(p) = hit {
                if !orbit.contains(&x) {
                    generators.push(p);
                    orbit = orbit_of(b, &generators);
                }
            }
        }
        orbit_lengths[level] = orbit.len();
    }
    AutomorphismGroup {
        generators,
        orbit_lengths,
        degree: n,
    }
}

fn orbit_of(b: VertexId, gens: &[Permutation]) -> BTreeSet<VertexId> {
    let mut orbit = BTreeSet::from([b]);
    let mut queue = VecDeque::from([b]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g[x as usize];
            if orbit.insert(y) {
                queue.push_back(y);
            }
        }
    }
    orbit
}

/// A rank-`n` elementary abelian subgroup of automorphisms whose orbit space
/// is a triangulated ball.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Z2nSubaction {
    #[serde(skip)]
    pub action: GroupAction,
    pub generators: Vec<Vec<(VertexLabel, VertexLabel)>>,
    pub fixed_points: Vec<VertexLabel>,
    pub orbit_census: BTreeMap<usize, usize>,
    pub quotient: QuotientSummary,
    pub quotient_verdict: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubactionSearch {
    pub automorphism_group_order: u128,
    /// Conjugacy classes of rank-`n` elementary abelian subgroups examined.
    pub subgroup_classes: usize,
    pub admissible: Vec<Z2nSubaction>,
}

/// Cap on the number of group elements enumerated during subgroup search.
pub const ELEMENT_CAP: usize = 200_000;

/// All admissible subactions, one per conjugacy class of subgroups, in a
/// deterministic order.
pub fn find_z2n_subactions(c: &SimplicialComplex, n: usize) -> SubactionSearch {
    let aut = automorphism_group(c);
    let order = aut.order();
    let elements = aut
        .elements(ELEMENT_CAP)
        .expect("automorphism group too large for subgroup enumeration");
    let classes = elementary_abelian_classes(&elements, n);
    let d = c.dim().max(0) as usize;
    let admissible: Vec<Z2nSubaction> = classes
        .par_iter()
        .filter_map(|sub| admissible_subaction(c, &elements, sub, d))
        .collect();
    SubactionSearch {
        automorphism_group_order: order,
        subgroup_classes: classes.len(),
        admissible,
    }
}

/// The first admissible subaction, if any.
pub fn find_z2n_subaction(c: &SimplicialComplex, n: usize) -> Option<Z2nSubaction> {
    find_z2n_subactions(c, n).admissible.into_iter().next()
}

fn admissible_subaction(
    c: &SimplicialComplex,
    elements: &[Permutation],
    sub: &[usize],
    d: usize,
) -> Option<Z2nSubaction> {
    let basis = basis_of(elements, sub);
    let gens: Vec<LabelPermutation> = basis
        .iter()
        .map(|&i| to_label_permutation(c, &elements[i]))
        .collect();
    let action = GroupAction::new(gens).expect("commuting involutions");
    let q = quotient_by_action(c, &action).ok()?;
    let verdict = recognize(&q.complex);
    if verdict != Verdict::Ball(d) {
        return None;
    }
    let bound = action.bind(c).ok()?;
    let fixed_points = bound
        .fixed_points()
        .into_iter()
        .map(|v| c.label(v).clone())
        .collect();
    let mut orbit_census = BTreeMap::new();
    for o in bound.orbits() {
        *orbit_census.entry(o.len()).or_insert(0) += 1;
    }
    let generators = action
        .generators()
        .iter()
        .map(|g| {
            g.transpositions()
                .into_iter()
                .map(|(a, b)| (a.clone(), b.clone()))
                .collect()
        })
        .collect();
    Some(Z2nSubaction {
        action,
        generators,
        fixed_points,
        orbit_census,
        quotient: q.summary(),
        quotient_verdict: verdict.to_string(),
    })
}

/// A basis of the subgroup (element indices), greedily from the smallest
/// elements.
fn basis_of(elements: &[Permutation], sub: &[usize]) -> Vec<usize> {
    let mut span: BTreeSet<usize> = BTreeSet::new();
    let index: HashMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let id = *sub.iter().min().unwrap();
    span.insert(id);
    let mut basis = Vec::new();
    for &x in sub {
        if span.contains(&x) {
            continue;
        }
        basis.push(x);
        let more: Vec<usize> = span
            .iter()
            .map(|&s| index[&compose(&elements[x], &elements[s])])
            .collect();
        span.extend(more);
    }
    basis
}

/// Representatives of the conjugacy classes of elementary abelian subgroups
/// of rank `n`, each as a sorted list of element indices.
pub(crate) fn elementary_abelian_classes(elements: &[Permutation], n: usize) -> Vec<Vec<usize>> {
    let index: HashMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let id: Permutation = (0..elements[0].len() as VertexId).collect();
    let id_index = index[&id];
    let involutions: Vec<usize> = (0..elements.len())
        .filter(|&i| i != id_index && compose(&elements[i], &elements[i]) == id)
        .collect();
    let inverses: Vec<Permutation> = elements.iter().map(|p| inverse(p)).collect();
    let canonical = |sub: &[usize]| -> Vec<usize> {
        (0..elements.len())
            .map(|g| {
                let mut conj: Vec<usize> = sub
                    .iter()
                    .map(|&h| index[&compose(&compose(&elements[g], &elements[h]), &inverses[g])])
                    .collect();
                conj.sort_unstable();
                conj
            })
            .min()
            .unwrap()
    };
    let mut level: BTreeSet<Vec<usize>> = BTreeSet::from([vec![id_index]]);
    for _ in 0..n {
        let mut next: BTreeSet<Vec<usize>> = BTreeSet::new();
        for sub in &level {
            let members: BTreeSet<usize> = sub.iter().copied().collect();
            for &t in &involutions {
                if members.contains(&t) {
                    continue;
                }
                let commutes = sub.iter().all(|&h| {
                    compose(&elements[t], &elements[h]) == compose(&elements[h], &elements[t])
                });
                if !commutes {
                    continue;
                }
                let mut grown: Vec<usize> = sub.clone();
                grown.extend(
                    sub.iter()
                        .map(|&h| index[&compose(&elements[t], &elements[h])]),
                );
                grown.sort_unstable();
                next.insert(canonical(&grown));
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{simplex_boundary, Simplex};

    fn cx(facets: &[&str]) -> SimplicialComplex {
        SimplicialComplex::from_facets(
            facets
                .iter()
                .map(|f| {
                    let v: Vec<String> = f.chars().map(String::from).collect();
                    Simplex::from_tokens(&v).unwrap()
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn orders_of_small_groups() {
        assert_eq!(automorphism_group(&simplex_boundary(3)).order(), 24);
        assert_eq!(automorphism_group(&simplex_boundary(4)).order(), 120);
        let oct = cx(&["ace", "acf", "ade", "adf", "bce", "bcf", "bde", "bdf"]);
        let g = automorphism_group(&oct);
        assert_eq!(g.order(), 48);
        assert_eq!(g.elements(1000).unwrap().len(), 48);
        let rp2 = cx(&["123", "134", "145", "156", "126", "235", "346", "245", "356", "246"]);
        assert_eq!(automorphism_group(&rp2).order(), 60);
    }

    #[test]
    fn tetrahedron_has_no_rank_three_subgroup() {
        let s = find_z2n_subactions(&simplex_boundary(3), 3);
        assert_eq!(s.subgroup_classes, 0);
        assert!(s.admissible.is_empty());
    }

    #[test]
    fn octahedron_reflections() {
        let oct = cx(&["ace", "acf", "ade", "adf", "bce", "bcf", "bde", "bdf"]);
        // the three coordinate reflections give the octant as quotient
        let s = find_z2n_subactions(&oct, 3);
        assert!(s.subgroup_classes >= 1);
        assert!(s
            .admissible
            .iter()
            .any(|a| a.orbit_census == BTreeMap::from([(2, 3)])));
    }
}
