//! Exhaustive enumeration of triangulated 2-spheres with few vertices.
//!
//! Facets are added one at a time, always closing the first edge that lies in
//! a single triangle. The third vertex is an existing one or the next unused
//! label, so labels appear in order of first use. Vertex links must stay a
//! disjoint union of paths until they close up into one cycle. Results are
//! deduplicated by canonical form.

use std::collections::BTreeMap;

use serde::Serialize;

use super::budget::{Meter, SearchBudget, SearchStatus};
use super::canonical::{canonical_form, CanonicalForm};
use crate::complex::{SimplicialComplex, VertexLabel};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct SphereEnumeration {
    pub vertices: usize,
    /// One representative per isomorphism class, ordered by canonical form.
    pub spheres: Vec<SimplicialComplex>,
    /// Labeled spheres reached before deduplication.
    pub leaves: u64,
    pub nodes: u64,
    pub status: SearchStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct SphereCensus {
    pub vertices: usize,
    pub count: usize,
    pub leaves: u64,
    pub nodes: u64,
    pub status: SearchStatus,
}

impl SphereEnumeration {
    pub fn census(&self) -> SphereCensus {
        SphereCensus {
            vertices: self.vertices,
            count: self.spheres.len(),
            leaves: self.leaves,
            nodes: self.nodes,
            status: self.status.clone(),
        }
    }
}

fn to_complex(v: usize, triangles: &[[u8; 3]]) -> SimplicialComplex {
    let labels: Vec<VertexLabel> = (1..=v)
        .map(|i| VertexLabel::new(i.to_string()).expect("digits are valid tokens"))
        .collect();
    SimplicialComplex::from_indexed(
        &labels,
        triangles.iter().map(|t| t.iter().map(|&x| x as u32).collect()),
    )
    .expect("enumerated facets are valid")
}

struct State {
    v: usize,
    used: usize,
    triangles: Vec<[u8; 3]>,
    degree: Vec<Vec<u8>>,
}

impl State {
    fn has_triangle(&self, t: [u8; 3]) -> bool {
        self.triangles.contains(&t)
    }

    fn open_edge(&self) -> Option<(u8, u8)> {
        for t in &self.triangles {
            for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                if self.degree[a as usize][b as usize] == 1 {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// The link of `x` is a disjoint union of paths, or a single cycle.
    fn link_ok(&self, x: u8) -> bool {
        let mut adj: Vec<Vec<u8>> = vec![Vec::new(); self.v];
        let mut vertices = 0;
        let mut edges = 0;
        for t in self.triangles.iter().filter(|t| t.contains(&x)) {
            let rest: Vec<u8> = t.iter().copied().filter(|&y| y != x).collect();
            adj[rest[0] as usize].push(rest[1]);
            adj[rest[1] as usize].push(rest[0]);
            edges += 1;
        }
        let mut seen = vec![false; self.v];
        let mut components = 0;
        let mut ends = 0;
        for s in 0..self.v {
            if adj[s].is_empty() || seen[s] {
                continue;
            }
            components += 1;
            let mut stack = vec![s as u8];
            seen[s] = true;
            while let Some(y) = stack.pop() {
                vertices += 1;
                if adj[y as usize].len() == 1 {
                    ends += 1;
                }
                for &z in &adj[y as usize] {
                    if !seen[z as usize] {
                        seen[z as usize] = true;
                        stack.push(z);
                    }
                }
            }
        }
        let has_cycle = edges + components > vertices;
        !has_cycle || (components == 1 && ends == 0)
    }

    fn push(&mut self, t: [u8; 3]) {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            self.degree[a as usize][b as usize] += 1;
            self.degree[b as usize][a as usize] += 1;
        }
        self.triangles.push(t);
    }

    fn pop(&mut self) {
        let t = self.triangles.pop().expect("nonempty");
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            self.degree[a as usize][b as usize] -= 1;
            self.degree[b as usize][a as usize] -= 1;
        }
    }
}

fn sorted(mut t: [u8; 3]) -> [u8; 3] {
    t.sort_unstable();
    t
}

fn extend(
    s: &mut State,
    meter: &mut Meter<'_>,
    found: &mut BTreeMap<CanonicalForm, SimplicialComplex>,
    leaves: &mut u64,
) {
    if !meter.tick() {
        return;
    }
    let Some((a, b)) = s.open_edge() else {
        if s.used == s.v && s.triangles.len() == 2 * s.v - 4 {
            *leaves += 1;
            let c = to_complex(s.v, &s.triangles);
            found.entry(canonical_form(&c)).or_insert(c);
        }
        return;
    };
    if s.triangles.len() == 2 * s.v - 4 {
        return;
    }
    let limit = (s.used + 1).min(s.v);
    for w in 0..limit as u8 {
        if w == a || w == b {
            continue;
        }
        let t = sorted([a, b, w]);
        if s.has_triangle(t)
            || s.degree[a as usize][w as usize] >= 2
            || s.degree[b as usize][w as usize] >= 2
        {
            continue;
        }
        let fresh = w as usize == s.used;
        if fresh {
            s.used += 1;
        }
        s.push(t);
        if s.link_ok(a) && s.link_ok(b) && s.link_ok(w) {
            extend(s, meter, found, leaves);
        }
        s.pop();
        if fresh {
            s.used -= 1;
        }
    }
}

/// All triangulated 2-spheres on exactly `v` vertices, up to isomorphism.
pub fn enumerate_2spheres(v: usize, budget: &SearchBudget) -> Result<SphereEnumeration> {
    if !(4..=budget.max_vertices.min(9)).contains(&v) {
        return Err(Error::Unsupported(format!(
            "2-sphere enumeration covers 4..={} vertices, got {v}",
            budget.max_vertices.min(9)
        )));
    }
    if 2 * v - 4 > budget.max_facets {
        return Err(Error::Unsupported(format!(
            "a {v}-vertex 2-sphere has {} facets, over the budget of {}",
            2 * v - 4,
            budget.max_facets
        )));
    }
    let mut state = State {
        v,
        used: 3,
        triangles: Vec::new(),
        degree: vec![vec![0; v]; v],
    };
    state.push([0, 1, 2]);
    let mut meter = Meter::new(budget);
    let mut found = BTreeMap::new();
    let mut leaves = 0;
    extend(&mut state, &mut meter, &mut found, &mut leaves);
    Ok(SphereEnumeration {
        vertices: v,
        spheres: found.into_values().collect(),
        leaves,
        nodes: meter.nodes,
        status: meter.status(),
    })
}

/// Independent census by brute force over all `(2v-4)`-subsets of the
/// triangles on `v` vertices. Feasible up to `v = 6`.
pub fn brute_force_2sphere_count(v: usize) -> Result<usize> {
    if !(4..=6).contains(&v) {
        return Err(Error::Unsupported(format!(
            "brute-force sphere census covers 4..=6 vertices, got {v}"
        )));
    }
    let mut all = Vec::new();
    for a in 0..v as u8 {
        for b in a + 1..v as u8 {
            for c in b + 1..v as u8 {
                all.push([a, b, c]);
            }
        }
    }
    let k = 2 * v - 4;
    let mut found = BTreeMap::new();
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        let tris: Vec<[u8; 3]> = pick.iter().map(|&i| all[i]).collect();
        if is_sphere(v, &tris) {
            let c = to_complex(v, &tris);
            found.entry(canonical_form(&c)).or_insert(());
        }
        // next combination
        let mut i = k;
        while i > 0 && pick[i - 1] == all.len() - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        pick[i - 1] += 1;
        for j in i..k {
            pick[j] = pick[j - 1] + 1;
        }
    }
    Ok(found.len())
}

fn is_sphere(v: usize, tris: &[[u8; 3]]) -> bool {
    let mut degree = vec![vec![0u8; v]; v];
    for t in tris {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            degree[a as usize][b as usize] += 1;
        }
    }
    if degree.iter().flatten().any(|&d| d != 0 && d != 2) {
        return false;
    }
    let s = State {
        v,
        used: v,
        triangles: tris.to_vec(),
        degree,
    };
    if (0..v as u8).any(|x| !tris.iter().any(|t| t.contains(&x)) || !s.link_ok(x)) {
        return false;
    }
    to_complex(v, tris).is_connected()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let budget = SearchBudget::default();
        let counts: Vec<usize> = (4..=6)
            .map(|v| enumerate_2spheres(v, &budget).unwrap().spheres.len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2]);
    }

    #[test]
    fn brute_force_agrees() {
        assert_eq!(brute_force_2sphere_count(4).unwrap(), 1);
        assert_eq!(brute_force_2sphere_count(5).unwrap(), 1);
    }

    #[test]
    fn exhausted_budget_is_inconclusive() {
        let budget = SearchBudget {
            node_limit: 10,
            ..SearchBudget::default()
        };
        let e = enumerate_2spheres(8, &budget).unwrap();
        assert!(!e.status.is_complete());
    }
}
