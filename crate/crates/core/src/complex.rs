//! Finite abstract simplicial complexes stored by their facets.
//!
//! Vertices carry opaque string tokens ([`VertexLabel`]). Internally every
//! complex numbers its vertices `0..f0` in token order, so a facet is a sorted
//! `Vec<VertexId>` and the lexicographic order on id-vectors coincides with the
//! lexicographic order on token-vectors. All derived data (the face lattice by
//! dimension) is memoized on first use; complexes are immutable afterwards.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

/// Index of a vertex inside one complex (rank of its label in token order).
pub type VertexId = u32;

/// Opaque vertex token. Ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexLabel(String);

impl VertexLabel {
    pub fn new(token: impl Into<String>) -> Result<Self> {
        let token = token.into();
        if token.is_empty() || token.chars().any(char::is_whitespace) {
            return Err(Error::InvalidToken(token));
        }
        Ok(Self(token))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Builds a label from a token that is known to be well formed.
pub(crate) fn label(token: &str) -> VertexLabel {
    VertexLabel::new(token).expect("internal tokens are well formed")
}

/// A simplex: a sorted, duplicate-free, nonempty list of labels.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Simplex {
    vertices: Vec<VertexLabel>,
}

impl Simplex {
    pub fn new(mut vertices: Vec<VertexLabel>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::MalformedSimplex("simplex has no vertices".into()));
        }
        vertices.sort();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedSimplex(format!(
                "vertex {} repeated",
                w[0]
            )));
        }
        Ok(Self { vertices })
    }

    pub fn from_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let labels = tokens
            .iter()
            .map(|t| VertexLabel::new(t.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(labels)
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// Face counts `(f0, ..., fd)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str(")")
    }
}

/// A finite simplicial complex given by its inclusion-maximal faces.
///
/// Non-maximal simplices passed to the constructors are absorbed silently: a
/// list such as `{ab, abc}` yields the single facet `abc`. The empty complex
/// (no faces at all) exists and has dimension `-1`; it arises as the link of a
/// facet.
pub struct SimplicialComplex {
    labels: Vec<VertexLabel>,
    facets: Vec<Vec<VertexId>>,
    faces: Vec<OnceLock<Vec<Vec<VertexId>>>>,
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        Self {
            labels: self.labels.clone(),
            facets: self.facets.clone(),
            faces: self.faces.clone(),
        }
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("f_vector", &self.f_vector().0)
            .field("facets", &self.facet_simplices())
            .finish()
    }
}

impl SimplicialComplex {
    /// Builds a complex from a nonempty list of simplices.
    pub fn from_facets(facets: Vec<Simplex>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let labels: Vec<VertexLabel> = facets
            .iter()
            .flat_map(|s| s.vertices.iter().cloned())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: HashMap<&VertexLabel, VertexId> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l, i as VertexId))
            .collect();
        let id_facets: Vec<Vec<VertexId>> = facets
            .iter()
            .map(|s| s.vertices.iter().map(|v| index[v]).collect())
            .collect();
        Ok(Self::normalized(labels, id_facets))
    }

    /// Builds a complex whose facets index into `labels`.
    ///
    /// Labels that no facet uses are dropped; facets may be unsorted but must
    /// not repeat a vertex.
    pub fn from_indexed(
        labels: &[VertexLabel],
        facets: impl IntoIterator<Item = Vec<VertexId>>,
    ) -> Result<Self> {
        let mut facets: Vec<Vec<VertexId>> = facets.into_iter().collect();
        if facets.is_empty() {
            return Err(Error::EmptyComplex);
        }
        for f in &mut facets {
            if f.is_empty() {
                return Err(Error::MalformedSimplex("simplex has no vertices".into()));
            }
            f.sort_unstable();
            if let Some(w) = f.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::MalformedSimplex(format!(
                    "vertex {} repeated",
                    labels[w[0] as usize]
                )));
            }
        }
        let used: BTreeSet<VertexId> = facets.iter().flatten().copied().collect();
        let mut order: Vec<VertexId> = used.into_iter().collect();
        order.sort_by(|a, b| labels[*a as usize].cmp(&labels[*b as usize]));
        for w in order.windows(2) {
            if labels[w[0] as usize] == labels[w[1] as usize] {
                return Err(Error::LabelMismatch(format!(
                    "token {} used for two distinct vertices",
                    labels[w[0] as usize]
                )));
            }
        }
        let mut remap = HashMap::with_capacity(order.len());
        for (new, old) in order.iter().enumerate() {
            remap.insert(*old, new as VertexId);
        }
        let new_labels = order.iter().map(|&v| labels[v as usize].clone()).collect();
        let id_facets = facets
            .into_iter()
            .map(|f| f.into_iter().map(|v| remap[&v]).collect())
            .collect();
        Ok(Self::normalized(new_labels, id_facets))
    }

    /// The complex with no faces.
    pub fn empty() -> Self {
        Self {
            labels: Vec::new(),
            facets: Vec::new(),
            faces: Vec::new(),
        }
    }

    /// `labels` sorted and all used; facets are sorted id lists.
    fn normalized(labels: Vec<VertexLabel>, mut facets: Vec<Vec<VertexId>>) -> Self {
        for f in &mut facets {
            f.sort_unstable();
        }
        facets.sort_unstable();
        facets.dedup();
        // Drop simplices contained in a strictly larger one.
        let max_len = facets.iter().map(Vec::len).max().unwrap_or(0);
        let mut by_size: Vec<&Vec<VertexId>> = facets.iter().collect();
        by_size.sort_by_key(|f| std::cmp::Reverse(f.len()));
        let mut kept: Vec<Vec<VertexId>> = Vec::with_capacity(facets.len());
        for f in by_size {
            let absorbed = f.len() < max_len
                && kept
                    .iter()
                    .any(|g| g.len() > f.len() && is_subset_sorted(f, g));
            if !absorbed {
                kept.push(f.clone());
            }
        }
        kept.sort_unstable();
        let dim = kept.iter().map(Vec::len).max().unwrap_or(0);
        Self {
            labels,
            facets: kept,
            faces: (0..dim).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &VertexLabel {
        &self.labels[v as usize]
    }

    pub fn vertex_id(&self, label: &VertexLabel) -> Option<VertexId> {
        self.labels.binary_search(label).ok().map(|i| i as VertexId)
    }

    pub fn vertex_id_str(&self, token: &str) -> Option<VertexId> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(token))
            .ok()
            .map(|i| i as VertexId)
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Facets as sorted id lists, in lexicographic order.
    pub fn facets(&self) -> &[Vec<VertexId>] {
        &self.facets
    }

    pub fn facet_simplices(&self) -> Vec<Simplex> {
        self.facets.iter().map(|f| self.simplex_of(f)).collect()
    }

    /// Converts a sorted id list into a labelled simplex.
    pub fn simplex_of(&self, ids: &[VertexId]) -> Simplex {
        Simplex {
            vertices: ids.iter().map(|&v| self.label(v).clone()).collect(),
        }
    }

    /// Resolves a simplex to sorted ids, or `None` if a token is unknown.
    pub fn ids_of(&self, s: &Simplex) -> Option<Vec<VertexId>> {
        s.vertices.iter().map(|l| self.vertex_id(l)).collect()
    }

    /// Dimension; `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 1
    }

    /// All `k`-dimensional faces in lexicographic order. Out of range `k`
    /// gives an empty slice.
    pub fn faces(&self, k: usize) -> &[Vec<VertexId>] {
        match self.faces.get(k) {
            None => &[],
            Some(cell) => cell.get_or_init(|| {
                let mut set: HashSet<Vec<VertexId>> = HashSet::new();
                let mut buf = Vec::with_capacity(k + 1);
                for f in &self.facets {
                    if f.len() > k {
                        for_each_subset(f, k + 1, &mut buf, &mut |s| {
                            if !set.contains(s) {
                                set.insert(s.to_vec());
                            }
                        });
                    }
                }
                let mut out: Vec<Vec<VertexId>> = set.into_iter().collect();
                out.sort_unstable();
                out
            }),
        }
    }

    pub fn faces_labeled(&self, k: usize) -> Vec<Simplex> {
        self.faces(k).iter().map(|f| self.simplex_of(f)).collect()
    }

    pub fn contains_face(&self, ids: &[VertexId]) -> bool {
        if ids.is_empty() {
            return !self.is_empty();
        }
        let k = ids.len() - 1;
        self.faces(k).binary_search_by(|f| f.as_slice().cmp(ids)).is_ok()
    }

    pub fn f_vector(&self) -> FVector {
        FVector((0..self.faces.len()).map(|k| self.faces(k).len()).collect())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    fn face_ids(&self, s: &Simplex) -> Result<Vec<VertexId>> {
        let ids = self
            .ids_of(s)
            .ok_or_else(|| Error::NotAFace(s.to_string()))?;
        if !self.contains_face(&ids) {
            return Err(Error::NotAFace(s.to_string()));
        }
        Ok(ids)
    }

    /// Link of a face; the empty complex when `s` is a facet.
    pub fn link(&self, s: &Simplex) -> Result<Self> {
        let ids = self.face_ids(s)?;
        Ok(self.link_ids(&ids))
    }

    /// Link of a face given by sorted ids (assumed to be a face).
    pub fn link_ids(&self, s: &[VertexId]) -> Self {
        let parts: Vec<Vec<VertexId>> = self
            .facets
            .iter()
            .filter(|f| is_subset_sorted(s, f))
            .map(|f| f.iter().copied().filter(|v| s.binary_search(v).is_err()).collect())
            .filter(|f: &Vec<VertexId>| !f.is_empty())
            .collect();
        if parts.is_empty() {
            return Self::empty();
        }
        Self::from_indexed(&self.labels, parts).expect("link of a valid complex is valid")
    }

    /// Closed star: all facets containing `s`.
    pub fn star(&self, s: &Simplex) -> Result<Self> {
        let ids = self.face_ids(s)?;
        Ok(self.star_ids(&ids))
    }

    pub fn star_ids(&self, s: &[VertexId]) -> Self {
        let parts: Vec<Vec<VertexId>> = self
            .facets
            .iter()
            .filter(|f| is_subset_sorted(s, f))
            .cloned()
            .collect();
        if parts.is_empty() {
            return Self::empty();
        }
        Self::from_indexed(&self.labels, parts).expect("star of a valid complex is valid")
    }

    /// Subcomplex generated by the given id lists (need not be faces).
    pub fn subcomplex(&self, facets: impl IntoIterator<Item = Vec<VertexId>>) -> Result<Self> {
        Self::from_indexed(&self.labels, facets)
    }

    /// Closure of the top-dimensional ridges lying in exactly one top facet.
    pub fn boundary_complex(&self) -> Self {
        let d = self.dim();
        if d <= 0 {
            return Self::empty();
        }
        let ridges: Vec<Vec<VertexId>> = ridge_degrees(self)
            .into_iter()
            .filter(|(_, n)| *n == 1)
            .map(|(r, _)| r)
            .collect();
        if ridges.is_empty() {
            return Self::empty();
        }
        Self::from_indexed(&self.labels, ridges).expect("boundary of a valid complex is valid")
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f) => {
                let n = self.faces.len();
                debug_assert!(f.len() <= n);
                self.facets.iter().all(|f| f.len() == n)
            }
        }
    }

    /// Connectivity of the underlying space (facets sharing a vertex).
    pub fn is_connected(&self) -> bool {
        self.connected_components() == 1
    }

    pub fn connected_components(&self) -> usize {
        let mut uf = UnionFind::new(self.num_vertices());
        for f in &self.facets {
            for w in f.windows(2) {
                uf.union(w[0] as usize, w[1] as usize);
            }
        }
        uf.count()
    }

    /// Pure, and the facet graph through shared ridges is connected.
    pub fn is_strongly_connected(&self) -> bool {
        if self.facets.is_empty() || !self.is_pure() {
            return false;
        }
        if self.facets.len() == 1 {
            return true;
        }
        if self.dim() == 0 {
            return false;
        }
        let mut uf = UnionFind::new(self.facets.len());
        let mut first_owner: HashMap<Vec<VertexId>, usize> = HashMap::new();
        for (i, f) in self.facets.iter().enumerate() {
            for skip in 0..f.len() {
                let ridge: Vec<VertexId> = skip_one(f, skip);
                match first_owner.get(&ridge) {
                    Some(&j) => uf.union(i, j),
                    None => {
                        first_owner.insert(ridge, i);
                    }
                }
            }
        }
        uf.count() == 1
    }

    /// Number of edges at a vertex.
    pub fn vertex_degree(&self, v: VertexId) -> usize {
        self.faces(1).iter().filter(|e| e.contains(&v)).count()
    }

    /// Applies an injective relabelling.
    pub fn relabel<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&VertexLabel) -> VertexLabel,
    {
        if self.is_empty() {
            return Ok(Self::empty());
        }
        let labels: Vec<VertexLabel> = self.labels.iter().map(&mut f).collect();
        Self::from_indexed(&labels, self.facets.iter().cloned())
    }
}

/// Every ridge (codimension-one face of a top-dimensional facet) with the
/// number of top facets containing it, in lexicographic order.
pub fn ridge_degrees(c: &SimplicialComplex) -> Vec<(Vec<VertexId>, usize)> {
    let top = c.faces.len();
    let mut counts: HashMap<Vec<VertexId>, usize> = HashMap::new();
    for f in c.facets.iter().filter(|f| f.len() == top) {
        for skip in 0..f.len() {
            *counts.entry(skip_one(f, skip)).or_insert(0) += 1;
        }
    }
    let mut out: Vec<_> = counts.into_iter().collect();
    out.sort_unstable();
    out
}

pub(crate) fn skip_one(f: &[VertexId], skip: usize) -> Vec<VertexId> {
    f.iter()
        .enumerate()
        .filter(|(i, _)| *i != skip)
        .map(|(_, &v)| v)
        .collect()
}

/// `a ⊆ b` for sorted slices.
pub(crate) fn is_subset_sorted(a: &[VertexId], b: &[VertexId]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// Calls `visit` on every `size`-subset of the sorted slice `items`, in
/// lexicographic order.
pub(crate) fn for_each_subset<T: Copy>(
    items: &[T],
    size: usize,
    buf: &mut Vec<T>,
    visit: &mut dyn FnMut(&[T]),
) {
    fn rec<T: Copy>(
        items: &[T],
        start: usize,
        size: usize,
        buf: &mut Vec<T>,
        visit: &mut dyn FnMut(&[T]),
    ) {
        if buf.len() == size {
            visit(buf);
            return;
        }
        let need = size - buf.len();
        for i in start..=items.len().saturating_sub(need) {
            if items.len() < need {
                return;
            }
            buf.push(items[i]);
            rec(items, i + 1, size, buf, visit);
            buf.pop();
        }
    }
    buf.clear();
    if size <= items.len() {
        rec(items, 0, size, buf, visit);
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            components: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
            self.components -= 1;
        }
    }

    pub(crate) fn count(&self) -> usize {
        self.components
    }
}

/// The boundary of the `n`-simplex on vertices `0..=n`, i.e. an
/// `(n-1)`-sphere with `n + 1` vertices.
pub fn simplex_boundary(n: usize) -> SimplicialComplex {
    let labels: Vec<VertexLabel> = (0..=n).map(|i| label(&i.to_string())).collect();
    let all: Vec<VertexId> = (0..=n as VertexId).collect();
    let facets = (0..=n).map(|skip| skip_one(&all, skip));
    SimplicialComplex::from_indexed(&labels, facets).expect("simplex boundary is valid")
}

/// The full `n`-simplex on vertices `0..=n`.
pub fn full_simplex(n: usize) -> SimplicialComplex {
    let labels: Vec<VertexLabel> = (0..=n).map(|i| label(&i.to_string())).collect();
    SimplicialComplex::from_indexed(&labels, [(0..=n as VertexId).collect()])
        .expect("simplex is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn two_triangles_sharing_an_edge() {
        let c = cx(&[&["a", "b", "c"], &["a", "b", "d"]]);
        assert_eq!(c.f_vector(), FVector(vec![4, 5, 2]));
        assert_eq!(c.euler_characteristic(), 1);
    }

    #[test]
    fn non_maximal_input_is_absorbed() {
        let c = cx(&[&["a", "b"], &["a", "b", "c"]]);
        assert_eq!(c.num_facets(), 1);
        assert_eq!(c.f_vector(), FVector(vec![3, 3, 1]));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            Simplex::from_tokens(&["a", "a"]),
            Err(Error::MalformedSimplex(_))
        ));
        assert!(matches!(
            SimplicialComplex::from_facets(vec![]),
            Err(Error::EmptyComplex)
        ));
        assert!(matches!(VertexLabel::new("a b"), Err(Error::InvalidToken(_))));
        assert!(matches!(VertexLabel::new(""), Err(Error::InvalidToken(_))));
    }

    #[test]
    fn tetrahedron_boundary_faces_and_links() {
        let c = simplex_boundary(3);
        assert_eq!(c.faces(1).len(), 6);
        assert_eq!(c.faces(7).len(), 0);
        assert_eq!(c.euler_characteristic(), 2);
        let lk = c.link(&Simplex::from_tokens(&["0"]).unwrap()).unwrap();
        assert_eq!(lk.f_vector(), FVector(vec![3, 3]));
        assert!(lk.boundary_complex().is_empty());
        let facet = Simplex::from_tokens(&["0", "1", "2"]).unwrap();
        assert!(c.link(&facet).unwrap().is_empty());
        let bogus = Simplex::from_tokens(&["0", "1", "2", "3"]).unwrap();
        assert!(matches!(c.link(&bogus), Err(Error::NotAFace(_))));
        assert!(matches!(
            c.link(&Simplex::from_tokens(&["9"]).unwrap()),
            Err(Error::NotAFace(_))
        ));
    }

    #[test]
    fn euler_characteristic_of_three_sphere() {
        assert_eq!(simplex_boundary(4).euler_characteristic(), 0);
    }

    #[test]
    fn boundary_of_ball_and_of_its_boundary() {
        let ball = full_simplex(3);
        let b = ball.boundary_complex();
        assert_eq!(b.f_vector(), FVector(vec![4, 6, 4]));
        assert!(b.boundary_complex().is_empty());
        let path = cx(&[&["a", "b"], &["b", "c"]]);
        assert_eq!(path.boundary_complex().num_vertices(), 2);
    }

    #[test]
    fn connectivity() {
        let c = cx(&[&["a", "b", "c"], &["c", "d", "e"]]);
        assert!(c.is_connected());
        assert!(!c.is_strongly_connected());
        let d = cx(&[&["a", "b"], &["c", "d"]]);
        assert!(!d.is_connected());
        assert!(simplex_boundary(3).is_strongly_connected());
        let mixed = cx(&[&["a", "b", "c"], &["c", "d"]]);
        assert!(!mixed.is_pure());
        assert_eq!(mixed.dim(), 2);
    }

    #[test]
    fn star_contains_only_incident_facets() {
        let c = simplex_boundary(3);
        let st = c.star(&Simplex::from_tokens(&["0"]).unwrap()).unwrap();
        assert_eq!(st.num_facets(), 3);
        assert_eq!(st.boundary_complex().num_facets(), 3);
    }

    #[test]
    fn relabel_reorders_facets() {
        let c = cx(&[&["a", "b", "c"], &["a", "b", "d"]]);
        let r = c
            .relabel(|l| label(&format!("z{}", l.as_str())))
            .unwrap();
        assert_eq!(r.f_vector(), c.f_vector());
        assert!(c.relabel(|_| label("x")).is_err());
    }
}
