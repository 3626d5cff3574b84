//! Edge-path group presentations and a bounded Tietze simplifier.
//!
//! For a connected complex, pick a spanning tree of the 1-skeleton; every
//! non-tree edge `u < v` is a generator and every triangle `a < b < c` gives
//! the relator `ab · bc · (ac)^-1`, tree edges being trivial. The simplifier
//! applies, in this order and always to the shortest eligible relator:
//!
//! 1. free and cyclic reduction, dropping empty and duplicate relators;
//! 2. a relator in which some generator occurs exactly once: solve for that
//!    generator (the lowest-numbered one), substitute everywhere, drop both.
//!
//! It succeeds when no generators remain. Each elimination counts as one step
//! against the budget.

use std::collections::BTreeSet;

use crate::complex::{SimplicialComplex, UnionFind, VertexId};

/// Default rewrite budget.
pub const DEFAULT_STEPS: usize = 10_000;

/// Letters are nonzero: `+g` is generator `g - 1`, `-g` its inverse.
type Word = Vec<i32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: usize,
    pub relators: Vec<Word>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pi1Outcome {
    /// The presentation reduced to the trivial group.
    Trivial { steps: usize },
    /// No rule applies, or the budget ran out, with generators left.
    Stalled { steps: usize, generators: usize },
}

pub fn edge_path_presentation(c: &SimplicialComplex) -> Presentation {
    let edges = c.faces(1);
    let mut uf = UnionFind::new(c.num_vertices());
    let mut generator = vec![None; edges.len()];
    let mut count = 0;
    for (i, e) in edges.iter().enumerate() {
        let (a, b) = (e[0] as usize, e[1] as usize);
        if uf.find(a) == uf.find(b) {
            generator[i] = Some(count);
            count += 1;
        } else {
            uf.union(a, b);
        }
    }
    let letter = |u: VertexId, v: VertexId| -> Option<i32> {
        let i = edges
            .binary_search_by(|e| e.as_slice().cmp(&[u, v][..]))
            .expect("edge of a triangle");
        generator[i].map(|g| g as i32 + 1)
    };
    let relators = c
        .faces(2)
        .iter()
        .map(|t| {
            let mut w = Vec::new();
            w.extend(letter(t[0], t[1]));
            w.extend(letter(t[1], t[2]));
            w.extend(letter(t[0], t[2]).map(|x| -x));
            w
        })
        .collect();
    Presentation {
        generators: count,
        relators,
    }
}

fn free_reduce(w: &mut Word) {
    let mut out: Word = Vec::with_capacity(w.len());
    for &x in w.iter() {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    while out.len() >= 2 && out[0] == -out[out.len() - 1] {
        out.pop();
        out.remove(0);
    }
    *w = out;
}

/// Simplifies the presentation in place within `budget` eliminations.
pub fn simplify(p: &mut Presentation, budget: usize) -> Pi1Outcome {
    let mut alive: BTreeSet<i32> = (1..=p.generators as i32).collect();
    let mut steps = 0;
    loop {
        for w in &mut p.relators {
            free_reduce(w);
        }
        p.relators.retain(|w| !w.is_empty());
        p.relators.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        p.relators.dedup();
        if alive.is_empty() {
            p.generators = 0;
            return Pi1Outcome::Trivial { steps };
        }
        if steps >= budget {
            break;
        }
        let pick = p.relators.iter().enumerate().find_map(|(ri, w)| {
            alive
                .iter()
                .find(|&&g| w.iter().filter(|x| x.abs() == g).count() == 1)
                .map(|&g| (ri, g))
        });
        let Some((ri, g)) = pick else { break };
        let rel = p.relators.remove(ri);
        let pos = rel.iter().position(|x| x.abs() == g).unwrap();
        // rel = A g^s B  ==>  g^s = A^-1 B^-1, so g = (A^-1 B^-1)^s
        let inv = |w: &[i32]| -> Word { w.iter().rev().map(|x| -x).collect() };
        let mut value: Word = inv(&rel[..pos]);
        value.extend(inv(&rel[pos + 1..]));
        if rel[pos] < 0 {
            value = inv(&value);
        }
        let value_inv = inv(&value);
        for w in &mut p.relators {
            if w.iter().any(|x| x.abs() == g) {
                let mut out = Vec::with_capacity(w.len() + value.len());
                for &x in w.iter() {
                    if x == g {
                        out.extend_from_slice(&value);
                    } else if x == -g {
                        out.extend_from_slice(&value_inv);
                    } else {
                        out.push(x);
                    }
                }
                *w = out;
            }
        }
        alive.remove(&g);
        steps += 1;
    }
    p.generators = alive.len();
    Pi1Outcome::Stalled {
        steps,
        generators: alive.len(),
    }
}

/// Attempts to certify that a connected complex is simply connected.
pub fn certify_simply_connected(c: &SimplicialComplex, budget: usize) -> Pi1Outcome {
    let mut p = edge_path_presentation(c);
    simplify(&mut p, budget)
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
    fn sphere_is_simply_connected() {
        assert!(matches!(
            certify_simply_connected(&simplex_boundary(3), DEFAULT_STEPS),
            Pi1Outcome::Trivial { .. }
        ));
        assert!(matches!(
            certify_simply_connected(&simplex_boundary(4), DEFAULT_STEPS),
            Pi1Outcome::Trivial { .. }
        ));
    }

    #[test]
    fn projective_plane_stalls() {
        let rp2 = cx(&["123", "134", "145", "156", "126", "235", "346", "245", "356", "246"]);
        let mut p = edge_path_presentation(&rp2);
        assert_eq!(p.generators, 15 - 5);
        match simplify(&mut p, DEFAULT_STEPS) {
            Pi1Outcome::Stalled { generators, .. } => {
                assert_eq!(generators, 1);
                // one generator with relator x^2
                assert_eq!(p.relators.len(), 1);
                assert_eq!(p.relators[0].len(), 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn circle_stalls() {
        let c = cx(&["12", "23", "13"]);
        assert!(matches!(
            certify_simply_connected(&c, DEFAULT_STEPS),
            Pi1Outcome::Stalled { generators: 1, .. }
        ));
    }
}
