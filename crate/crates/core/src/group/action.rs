use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::element::{GroupElement, Subgroup};
use crate::complex::{Simplex, SimplicialComplex, VertexId, VertexLabel};
use crate::error::{Error, Result};

/// A permutation of vertex tokens, stored by its moved points only.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LabelPermutation {
    map: BTreeMap<VertexLabel, VertexLabel>,
}

impl LabelPermutation {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Builds a permutation from `(from, to)` pairs. Fixed pairs are dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VertexLabel, VertexLabel)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (from, to) in pairs {
            if let Some(prev) = map.insert(from.clone(), to.clone()) {
                if prev != to {
                    return Err(Error::InvalidAction(format!(
                        "token {from} is sent to both {prev} and {to}"
                    )));
                }
            }
        }
        map.retain(|a, b| a != b);
        let sources: BTreeSet<&VertexLabel> = map.keys().collect();
        let targets: BTreeSet<&VertexLabel> = map.values().collect();
        if sources != targets || targets.len() != map.len() {
            return Err(Error::InvalidAction(
                "pairs do not describe a bijection on their support".into(),
            ));
        }
        Ok(Self { map })
    }

    /// Product of disjoint transpositions.
    pub fn from_transpositions<'a>(
        pairs: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let mut out = Vec::new();
        for (a, b) in pairs {
            let (a, b) = (VertexLabel::new(a)?, VertexLabel::new(b)?);
            out.push((a.clone(), b.clone()));
            out.push((b, a));
        }
        Self::from_pairs(out)
    }

    pub fn apply<'a>(&'a self, v: &'a VertexLabel) -> &'a VertexLabel {
        self.map.get(v).unwrap_or(v)
    }

    pub fn moved(&self) -> impl Iterator<Item = &VertexLabel> {
        self.map.keys()
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    pub fn is_involution(&self) -> bool {
        self.map.iter().all(|(a, b)| self.apply(b) == a)
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.map
            .keys()
            .chain(other.map.keys())
            .all(|x| self.apply(other.apply(x)) == other.apply(self.apply(x)))
    }

    /// The 2-cycles `(a b)` with `a < b`, in order. Only meaningful for
    /// involutions.
    pub fn transpositions(&self) -> Vec<(&VertexLabel, &VertexLabel)> {
        self.map.iter().filter(|(a, b)| a < b).collect()
    }
}

/// A `Z_2^n` action on vertex tokens given by `n` commuting involutions.
/// Generator `i` (0-based here) is `g_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupAction {
    generators: Vec<LabelPermutation>,
}

impl GroupAction {
    pub fn new(generators: Vec<LabelPermutation>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if !g.is_involution() {
                return Err(Error::InvalidAction(format!("g{} is not an involution", i + 1)));
            }
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                if !generators[i].commutes_with(&generators[j]) {
                    return Err(Error::InvalidAction(format!(
                        "g{} and g{} do not commute",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self { generators })
    }

    pub fn identity(rank: usize) -> Self {
        Self {
            generators: vec![LabelPermutation::identity(); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[LabelPermutation] {
        &self.generators
    }

    /// Image of a token under a group element.
    pub fn apply(&self, g: GroupElement, v: &VertexLabel) -> VertexLabel {
        let mut x = v.clone();
        for (k, gen) in self.generators.iter().enumerate() {
            if g.has_generator(k + 1) {
                x = gen.apply(&x).clone();
            }
        }
        x
    }

    /// All tokens moved by some generator.
    pub fn support(&self) -> BTreeSet<&VertexLabel> {
        self.generators.iter().flat_map(|g| g.moved()).collect()
    }

    /// Resolves the action against the vertex ids of `c`.
    pub fn bind<'c>(&self, c: &'c SimplicialComplex) -> Result<BoundAction<'c>> {
        let mut gens = Vec::with_capacity(self.rank());
        for (k, gen) in self.generators.iter().enumerate() {
            let mut perm: Vec<VertexId> = (0..c.num_vertices() as VertexId).collect();
            for (from, to) in &gen.map {
                let a = c.vertex_id(from).ok_or_else(|| {
                    Error::LabelMismatch(format!("g{} moves {from}, which is not a vertex", k + 1))
                })?;
                let b = c.vertex_id(to).ok_or_else(|| {
                    Error::LabelMismatch(format!("g{} moves {to}, which is not a vertex", k + 1))
                })?;
                perm[a as usize] = b;
            }
            gens.push(perm);
        }
        Ok(BoundAction { complex: c, gens })
    }

    /// Applies a token renaming to every generator.
    pub fn relabel<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&VertexLabel) -> VertexLabel,
    {
        let gens = self
            .generators
            .iter()
            .map(|g| LabelPermutation::from_pairs(g.map.iter().map(|(a, b)| (f(a), f(b)))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(gens)
    }

    /// Drops moved points that are not vertices of `c`. Used when a
    /// construction deletes whole orbits.
    pub fn restrict_to(&self, c: &SimplicialComplex) -> Result<Self> {
        let gens = self
            .generators
            .iter()
            .map(|g| {
                LabelPermutation::from_pairs(
                    g.map
                        .iter()
                        .filter(|(a, _)| c.vertex_id(a).is_some())
                        .map(|(a, b)| (a.clone(), b.clone())),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(gens)
    }
}

/// An action resolved to vertex ids of one complex.
#[derive(Clone, Debug)]
pub struct BoundAction<'c> {
    complex: &'c SimplicialComplex,
    gens: Vec<Vec<VertexId>>,
}

impl<'c> BoundAction<'c> {
    /// Wraps explicit id permutations (assumed to be commuting involutions).
    pub fn from_permutations(complex: &'c SimplicialComplex, gens: Vec<Vec<VertexId>>) -> Self {
        Self { complex, gens }
    }

    pub fn complex(&self) -> &'c SimplicialComplex {
        self.complex
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn generator(&self, k: usize) -> &[VertexId] {
        &self.gens[k]
    }

    pub fn image(&self, g: GroupElement, mut v: VertexId) -> VertexId {
        for (k, p) in self.gens.iter().enumerate() {
            if g.has_generator(k + 1) {
                v = p[v as usize];
            }
        }
        v
    }

    pub fn permutation(&self, g: GroupElement) -> Vec<VertexId> {
        (0..self.complex.num_vertices() as VertexId)
            .map(|v| self.image(g, v))
            .collect()
    }

    /// Permutations of every group element, indexed by the element's bits.
    pub fn all_permutations(&self) -> Vec<Vec<VertexId>> {
        GroupElement::all(self.rank())
            .map(|g| self.permutation(g))
            .collect()
    }

    pub fn apply_to_face(perm: &[VertexId], face: &[VertexId]) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = face.iter().map(|&v| perm[v as usize]).collect();
        out.sort_unstable();
        out
    }

    /// Orbits as sorted id lists, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<VertexId>> {
        let n = self.complex.num_vertices();
        let perms = self.all_permutations();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for v in 0..n {
            if seen[v] {
                continue;
            }
            let orbit: BTreeSet<VertexId> = perms.iter().map(|p| p[v]).collect();
            for &w in &orbit {
                seen[w as usize] = true;
            }
            out.push(orbit.into_iter().collect());
        }
        out
    }

    pub fn stabilizer(&self, v: VertexId) -> Subgroup {
        Subgroup::generated_by(
            self.rank(),
            GroupElement::all(self.rank()).filter(|&g| self.image(g, v) == v),
        )
    }

    pub fn fixed_points(&self) -> Vec<VertexId> {
        (0..self.complex.num_vertices() as VertexId)
            .filter(|&v| self.gens.iter().all(|p| p[v as usize] == v))
            .collect()
    }
}

/// A facet whose image under a generator is not a facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivarianceViolation {
    /// 1-based generator index.
    pub generator: usize,
    pub facet: Simplex,
    pub image: Simplex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivarianceReport {
    pub equivariant: bool,
    pub violation: Option<EquivarianceViolation>,
}

impl EquivarianceReport {
    pub fn into_result(self) -> Result<()> {
        match self.violation {
            None => Ok(()),
            Some(v) => Err(Error::NotEquivariant {
                generator: v.generator,
                facet: v.facet.to_string(),
                image: v.image.to_string(),
            }),
        }
    }
}

/// Checks that every generator maps facets to facets and reports the first
/// violation in (generator, facet) order.
pub fn check_equivariance(c: &SimplicialComplex, a: &GroupAction) -> Result<EquivarianceReport> {
    let bound = a.bind(c)?;
    let facets: BTreeSet<&Vec<VertexId>> = c.facets().iter().collect();
    for k in 0..bound.rank() {
        let perm = bound.generator(k);
        for f in c.facets() {
            let image = BoundAction::apply_to_face(perm, f);
            if !facets.contains(&image) {
                return Ok(EquivarianceReport {
                    equivariant: false,
                    violation: Some(EquivarianceViolation {
                        generator: k + 1,
                        facet: c.simplex_of(f),
                        image: c.simplex_of(&image),
                    }),
                });
            }
        }
    }
    Ok(EquivarianceReport {
        equivariant: true,
        violation: None,
    })
}

pub fn orbits(c: &SimplicialComplex, a: &GroupAction) -> Result<Vec<Vec<VertexLabel>>> {
    let bound = a.bind(c)?;
    Ok(bound
        .orbits()
        .into_iter()
        .map(|o| o.into_iter().map(|v| c.label(v).clone()).collect())
        .collect())
}

pub fn fixed_points(c: &SimplicialComplex, a: &GroupAction) -> Result<Vec<VertexLabel>> {
    let bound = a.bind(c)?;
    Ok(bound
        .fixed_points()
        .into_iter()
        .map(|v| c.label(v).clone())
        .collect())
}

pub fn stabilizer(v: &VertexLabel, a: &GroupAction) -> Subgroup {
    Subgroup::generated_by(
        a.rank(),
        GroupElement::all(a.rank()).filter(|&g| &a.apply(g, v) == v),
    )
}

/// Orbit size to number of orbits of that size.
pub fn orbit_census(c: &SimplicialComplex, a: &GroupAction) -> Result<BTreeMap<usize, usize>> {
    let mut census = BTreeMap::new();
    for o in orbits(c, a)? {
        *census.entry(o.len()).or_insert(0) += 1;
    }
    Ok(census)
}

/// `|V| - |fixed points|` is even.
pub fn parity_check(c: &SimplicialComplex, a: &GroupAction) -> Result<bool> {
    let fixed = fixed_points(c, a)?.len();
    Ok((c.num_vertices() - fixed) % 2 == 0)
}
