//! Backtracking search for simplicial isomorphisms.
//!
//! Vertices are colored by local invariants (facet degree, link f-vector) and
//! the colors are refined along the 1-skeleton until stable. The search maps
//! the vertices of `a` in a connectivity-first order onto equally colored
//! vertices of `b`, keeping the 1-skeleton consistent, and checks every facet
//! of `a` as soon as all of its vertices are mapped. Since both complexes have
//! the same number of facets, an injective facet map is a bijection.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::complex::{SimplicialComplex, VertexId, VertexLabel};

/// Local invariant of a vertex: number of facets through it and the f-vector
/// of its link.
fn vertex_signature(c: &SimplicialComplex, v: VertexId) -> Vec<usize> {
    let mut sig = vec![c.facets().iter().filter(|f| f.contains(&v)).count()];
    sig.extend(c.link_ids(&[v]).f_vector().0);
    sig
}

pub(crate) fn adjacency(c: &SimplicialComplex) -> Vec<Vec<bool>> {
    let n = c.num_vertices();
    let mut adj = vec![vec![false; n]; n];
    for e in c.faces(1) {
        adj[e[0] as usize][e[1] as usize] = true;
        adj[e[1] as usize][e[0] as usize] = true;
    }
    adj
}

/// Stable colorings of several complexes drawn from one shared palette, so
/// that equal colors mean equal invariants across complexes. Color ids are
/// ranks of sorted signatures and thus independent of vertex labels.
pub(crate) fn refined_colors(cs: &[&SimplicialComplex]) -> Vec<Vec<u32>> {
    let adj: Vec<Vec<Vec<bool>>> = cs.iter().map(|c| adjacency(c)).collect();
    let initial: Vec<Vec<Vec<usize>>> = cs
        .iter()
        .map(|c| {
            (0..c.num_vertices() as VertexId)
                .map(|v| vertex_signature(c, v))
                .collect()
        })
        .collect();
    let mut colors = palette(&initial);
    let mut classes = count_classes(&colors);
    loop {
        let sigs: Vec<Vec<Vec<usize>>> = colors
            .iter()
            .zip(&adj)
            .map(|(col, adj)| {
                (0..col.len())
                    .map(|v| {
                        let mut nb: Vec<usize> = (0..col.len())
                            .filter(|&w| adj[v][w])
                            .map(|w| col[w] as usize)
                            .collect();
                        nb.sort_unstable();
                        let mut sig = vec![col[v] as usize];
                        sig.extend(nb);
                        sig
                    })
                    .collect()
            })
            .collect();
        let next = palette(&sigs);
        let next_classes = count_classes(&next);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn palette(sigs: &[Vec<Vec<usize>>]) -> Vec<Vec<u32>> {
    let all: BTreeMap<&Vec<usize>, u32> = sigs
        .iter()
        .flatten()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .enumerate()
        .map(|(i, s)| (s, i as u32))
        .collect();
    sigs.iter()
        .map(|s| s.iter().map(|x| all[x]).collect())
        .collect()
}

fn count_classes(colors: &[Vec<u32>]) -> usize {
    colors
        .iter()
        .flatten()
        .collect::<std::collections::BTreeSet<_>>()
        .len()
}

/// Prepared search for maps `a -> b`.
pub(crate) struct Matcher<'a> {
    a: &'a SimplicialComplex,
    ca: Vec<u32>,
    cb: Vec<u32>,
    adj_a: Vec<Vec<bool>>,
    adj_b: Vec<Vec<bool>>,
    /// Vertices of `a` in search order.
    order: Vec<VertexId>,
    /// Facets of `a` (indices) completed at each position of `order`.
    check_at: Vec<Vec<usize>>,
    facets_b: HashSet<Vec<VertexId>>,
    by_color_b: HashMap<u32, Vec<VertexId>>,
}

impl<'a> Matcher<'a> {
    /// `None` when cheap invariants already rule out any isomorphism.
    pub(crate) fn new(a: &'a SimplicialComplex, b: &'a SimplicialComplex) -> Option<Self> {
        if a.num_vertices() != b.num_vertices()
            || a.num_facets() != b.num_facets()
            || a.f_vector() != b.f_vector()
        {
            return None;
        }
        let colors = refined_colors(&[a, b]);
        let (ca, cb) = (colors[0].clone(), colors[1].clone());
        let mut sa = ca.clone();
        let mut sb = cb.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
        let adj_a = adjacency(a);
        let adj_b = adjacency(b);
        let order = search_order(&ca, &adj_a);
        let mut pos = vec![0usize; a.num_vertices()];
        for (i, &v) in order.iter().enumerate() {
            pos[v as usize] = i;
        }
        let mut check_at = vec![Vec::new(); order.len()];
        for (fi, f) in a.facets().iter().enumerate() {
            let last = f.iter().map(|&v| pos[v as usize]).max().unwrap();
            check_at[last].push(fi);
        }
        let mut by_color_b: HashMap<u32, Vec<VertexId>> = HashMap::new();
        for (v, &c) in cb.iter().enumerate() {
            by_color_b.entry(c).or_default().push(v as VertexId);
        }
        Some(Self {
            a,
            ca,
            cb,
            adj_a,
            adj_b,
            order,
            check_at,
            facets_b: b.facets().iter().cloned().collect(),
            by_color_b,
        })
    }

    pub(crate) fn order(&self) -> &[VertexId] {
        &self.order
    }

    pub(crate) fn color_a(&self, v: VertexId) -> u32 {
        self.ca[v as usize]
    }

    pub(crate) fn candidates_b(&self, color: u32) -> &[VertexId] {
        self.by_color_b.get(&color).map_or(&[], Vec::as_slice)
    }

    /// Depth-first search. The first `seed.len()` positions of the search
    /// order are forced to the given images. `visit` receives each complete
    /// map (indexed by vertex of `a`) and returns whether to continue.
    pub(crate) fn search(&self, seed: &[VertexId], visit: &mut dyn FnMut(&[VertexId]) -> bool) {
        let n = self.order.len();
        let mut map = vec![VertexId::MAX; n];
        let mut used = vec![false; n];
        self.extend(0, seed, &mut map, &mut used, visit);
    }

    fn extend(
        &self,
        depth: usize,
        seed: &[VertexId],
        map: &mut [VertexId],
        used: &mut [bool],
        visit: &mut dyn FnMut(&[VertexId]) -> bool,
    ) -> bool {
        if depth == self.order.len() {
            return visit(map);
        }
        let v = self.order[depth];
        let forced = seed.get(depth).map(std::slice::from_ref);
        let cands = forced.unwrap_or_else(|| self.candidates_b(self.ca[v as usize]));
        for &w in cands {
            if used[w as usize] || self.cb[w as usize] != self.ca[v as usize] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| {
                self.adj_a[v as usize][u as usize] == self.adj_b[w as usize][map[u as usize] as usize]
            });
            if !consistent {
                continue;
            }
            map[v as usize] = w;
            used[w as usize] = true;
            let facets_ok = self.check_at[depth].iter().all(|&fi| {
                let mut img: Vec<VertexId> =
                    self.a.facets()[fi].iter().map(|&x| map[x as usize]).collect();
                img.sort_unstable();
                self.facets_b.contains(&img)
            });
            if facets_ok && !self.extend(depth + 1, seed, map, used, visit) {
                map[v as usize] = VertexId::MAX;
                used[w as usize] = false;
                return false;
            }
            map[v as usize] = VertexId::MAX;
            used[w as usize] = false;
        }
        true
    }
}

/// Start in the rarest color; then always take the vertex with the most
/// already ordered neighbours, breaking ties by rarer color and smaller id.
fn search_order(colors: &[u32], adj: &[Vec<bool>]) -> Vec<VertexId> {
    let n = colors.len();
    let mut class_size: HashMap<u32, usize> = HashMap::new();
    for &c in colors {
        *class_size.entry(c).or_insert(0) += 1;
    }
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), class_size[&colors[v]], v))
            .unwrap();
        placed[v] = true;
        order.push(v as VertexId);
        for w in 0..n {
            if adj[v][w] {
                links[w] += 1;
            }
        }
    }
    order
}

/// A simplicial isomorphism `a -> b` as a token map, or `None` after an
/// exhaustive search.
pub fn iso(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<BTreeMap<VertexLabel, VertexLabel>> {
    if a.is_empty() || b.is_empty() {
        return (a.is_empty() && b.is_empty()).then(BTreeMap::new);
    }
    let m = Matcher::new(a, b)?;
    let mut found: Option<Vec<VertexId>> = None;
    m.search(&[], &mut |map| {
        found = Some(map.to_vec());
        false
    });
    found.map(|map| {
        map.iter()
            .enumerate()
            .map(|(v, &w)| (a.label(v as VertexId).clone(), b.label(w).clone()))
            .collect()
    })
}

pub fn is_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    iso(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{label, simplex_boundary, Simplex};

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
    fn relabelled_copy_is_found() {
        let a = cx(&["123", "134", "145", "156", "126", "235", "346", "245", "356", "246"]);
        let b = a
            .relabel(|l| label(&format!("x{}", 7 - l.as_str().parse::<u32>().unwrap())))
            .unwrap();
        let m = iso(&a, &b).unwrap();
        let image = a.relabel(|l| m[l].clone()).unwrap();
        assert_eq!(image, b);
    }

    #[test]
    fn octahedron_and_stacked_sphere_differ() {
        let oct = cx(&["ace", "acf", "ade", "adf", "bce", "bcf", "bde", "bdf"]);
        let stacked = cx(&["abc", "abd", "acd", "bce", "bde", "cdf", "cef", "def"]);
        assert_eq!(oct.f_vector(), stacked.f_vector());
        assert!(iso(&oct, &stacked).is_none());
        assert!(iso(&oct, &oct).is_some());
        assert!(iso(&simplex_boundary(3), &simplex_boundary(4)).is_none());
    }
}
