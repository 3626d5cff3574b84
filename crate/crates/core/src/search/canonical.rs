//! Canonical forms by individualization and refinement.
//!
//! The canonical form of a complex is the lexicographically least sorted facet
//! list over all relabelings `V -> 0..n` that arise as leaves of the
//! individualization-refinement tree. Every isomorphism maps the tree of one
//! complex onto the tree of the other, so isomorphic complexes have equal
//! forms and the form determines the complex up to relabeling.

use super::iso::{adjacency, refined_colors};
use crate::complex::{SimplicialComplex, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub Vec<Vec<u32>>);

pub fn canonical_form(c: &SimplicialComplex) -> CanonicalForm {
    if c.is_empty() {
        return CanonicalForm(Vec::new());
    }
    let adj = adjacency(c);
    let start = refined_colors(&[c]).remove(0);
    let mut best: Option<Vec<Vec<u32>>> = None;
    explore(c, &adj, start, &mut best);
    CanonicalForm(best.expect("a nonempty complex has at least one leaf"))
}

fn explore(c: &SimplicialComplex, adj: &[Vec<bool>], colors: Vec<u32>, best: &mut Option<Vec<Vec<u32>>>) {
    let colors = refine(adj, colors);
    let n = colors.len();
    let mut size = vec![0usize; n];
    for &k in &colors {
        size[k as usize] += 1;
    }
    let Some(target) = (0..n as u32).find(|&k| size[k as usize] > 1) else {
        let mut facets: Vec<Vec<u32>> = c
            .facets()
            .iter()
            .map(|f| {
                let mut g: Vec<u32> = f.iter().map(|&v| colors[v as usize]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        facets.sort_unstable();
        if best.as_ref().is_none_or(|b| facets < *b) {
            *best = Some(facets);
        }
        return;
    };
    for v in (0..n).filter(|&v| colors[v] == target) {
        let split: Vec<u32> = (0..n)
            .map(|u| {
                let k = 2 * colors[u];
                if colors[u] == target && u != v {
                    k + 1
                } else {
                    k
                }
            })
            .collect();
        explore(c, adj, rerank(&split), best);
    }
}

/// Equitable refinement along the 1-skeleton. Colors stay dense `0..k`.
fn refine(adj: &[Vec<bool>], mut colors: Vec<u32>) -> Vec<u32> {
    colors = rerank(&colors);
    let mut classes = distinct(&colors);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..colors.len())
            .map(|v| {
                let mut nb: Vec<u32> = (0..colors.len())
                    .filter(|&w| adj[v][w])
                    .map(|w| colors[w])
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        colors = sigs
            .iter()
            .map(|s| sorted.binary_search(&s).unwrap() as u32)
            .collect();
        let now = distinct(&colors);
        if now == classes {
            return colors;
        }
        classes = now;
    }
}

fn rerank(colors: &[u32]) -> Vec<u32> {
    let mut values: Vec<u32> = colors.to_vec();
    values.sort_unstable();
    values.dedup();
    colors
        .iter()
        .map(|c| values.binary_search(c).unwrap() as u32)
        .collect()
}

fn distinct(colors: &[u32]) -> usize {
    let mut v = colors.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Relabels a complex by its canonical form (tokens `0..n`).
pub fn canonical_complex(c: &SimplicialComplex) -> SimplicialComplex {
    let form = canonical_form(c);
    let n = c.num_vertices();
    let labels: Vec<_> = (0..n).map(|i| crate::complex::label(&i.to_string())).collect();
    SimplicialComplex::from_indexed(
        &labels,
        form.0
            .into_iter()
            .map(|f| f.into_iter().map(|v| v as VertexId).collect()),
    )
    .expect("canonical relabeling is valid")
}
