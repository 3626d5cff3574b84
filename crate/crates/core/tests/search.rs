use std::collections::BTreeMap;

use equitri_core::catalog;
use equitri_core::complex::simplex_boundary;
use equitri_core::constructions::build_reduced;
use equitri_core::search::{
    brute_force_2sphere_count, enumerate_2spheres, is_isomorphic, iso, lemma6_combinatorial_check,
    scan_sphere, SearchBudget,
};
use equitri_core::verify::{recognize, Verdict};
use equitri_core::{SimplicialComplex, VertexId, VertexLabel};

fn labels(v: usize) -> Vec<VertexLabel> {
    (0..v).map(|i| VertexLabel::new(format!("x{i}")).unwrap()).collect()
}

/// The link of `x` in a 2-sphere as a cyclic vertex sequence.
fn link_cycle(tris: &[[VertexId; 3]], x: VertexId) -> Vec<VertexId> {
    let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for t in tris.iter().filter(|t| t.contains(&x)) {
        let r: Vec<VertexId> = t.iter().copied().filter(|&y| y != x).collect();
        adj.entry(r[0]).or_default().push(r[1]);
        adj.entry(r[1]).or_default().push(r[0]);
    }
    let start = *adj.keys().next().unwrap();
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = adj[&start][0];
    while cur != start {
        cycle.push(cur);
        let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
        prev = cur;
        cur = next;
    }
    cycle
}

/// Every 2-sphere on `v + 1` vertices is a vertex split of one on `v`
/// vertices. Classes are separated with the isomorphism search, not with
/// canonical forms, so this shares no code with the enumerator's dedup.
fn spheres_by_vertex_splitting(max_v: usize) -> Vec<usize> {
    let mut level: Vec<Vec<[VertexId; 3]>> = vec![vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]];
    let mut counts = vec![1];
    for v in 4..max_v {
        let mut next: Vec<SimplicialComplex> = Vec::new();
        let mut next_tris = Vec::new();
        let y = v as VertexId;
        for tris in &level {
            for x in 0..v as VertexId {
                let cyc = link_cycle(tris, x);
                let k = cyc.len();
                for i in 0..k {
                    for j in i + 1..k {
                        let mut out: Vec<[VertexId; 3]> =
                            tris.iter().filter(|t| !t.contains(&x)).copied().collect();
                        for t in 0..k {
                            let (a, b) = (cyc[t], cyc[(t + 1) % k]);
                            let keep = t >= i && t < j;
                            out.push(if keep { [x, a, b] } else { [y, a, b] });
                        }
                        out.push([x, y, cyc[i]]);
                        out.push([x, y, cyc[j]]);
                        let c = SimplicialComplex::from_indexed(
                            &labels(v + 1),
                            out.iter().map(|t| t.to_vec()),
                        )
                        .unwrap();
                        if !next.iter().any(|d| is_isomorphic(d, &c)) {
                            next.push(c);
                            next_tris.push(out);
                        }
                    }
                }
            }
        }
        counts.push(next.len());
        level = next_tris;
    }
    counts
}

#[test]
fn census_matches_vertex_splitting_oracle() {
    let budget = SearchBudget::default();
    let enumerated: Vec<usize> = (4..=9)
        .map(|v| {
            let e = enumerate_2spheres(v, &budget).unwrap();
            assert!(e.status.is_complete());
            e.spheres.len()
        })
        .collect();
    assert_eq!(enumerated, spheres_by_vertex_splitting(9));
    assert_eq!(enumerated, vec![1, 1, 2, 5, 14, 50]);
}

#[test]
fn census_matches_brute_force() {
    let budget = SearchBudget::default();
    for v in 4..=6 {
        assert_eq!(
            enumerate_2spheres(v, &budget).unwrap().spheres.len(),
            brute_force_2sphere_count(v).unwrap(),
            "v = {v}"
        );
    }
}

#[test]
fn enumerated_spheres_are_spheres() {
    let budget = SearchBudget::default();
    for v in 4..=8 {
        for s in enumerate_2spheres(v, &budget).unwrap().spheres {
            assert_eq!(recognize(&s), Verdict::Sphere(2));
            assert_eq!(s.num_vertices(), v);
        }
    }
}

#[test]
fn out_of_range_vertex_counts_are_rejected() {
    let budget = SearchBudget::default();
    assert!(enumerate_2spheres(3, &budget).is_err());
    assert!(enumerate_2spheres(10, &budget).is_err());
    let tight = SearchBudget {
        max_facets: 10,
        ..SearchBudget::default()
    };
    assert!(enumerate_2spheres(8, &tight).is_err());
}

#[test]
fn lemma6_has_no_counterexample() {
    let r = lemma6_combinatorial_check(&SearchBudget::default()).unwrap();
    assert!(r.status.is_complete());
    assert_eq!(r.spheres, 14);
    assert!(r.counterexamples.is_empty());
    assert!(r.note.contains("strictly weaker"));
}

#[test]
fn lemma6_inconclusive_under_a_tiny_budget() {
    let budget = SearchBudget {
        node_limit: 5,
        ..SearchBudget::default()
    };
    let r = lemma6_combinatorial_check(&budget).unwrap();
    assert!(!r.status.is_complete());
}

#[test]
fn octahedron_has_rank3_subgroups_without_a_single_orbit() {
    let octahedron = enumerate_2spheres(6, &SearchBudget::default())
        .unwrap()
        .spheres
        .into_iter()
        .find(|s| (0..6).all(|v| s.vertex_degree(v) == 4))
        .unwrap();
    let scan = scan_sphere(0, &octahedron);
    assert_eq!(scan.automorphism_group_order, 48);
    assert!(!scan.rank3_classes.is_empty());
    assert!(scan.rank3_classes.iter().any(|c| c.orbit_sizes == [2, 2, 2]));
    assert!(!scan.counterexample());
}

#[test]
fn tetrahedron_has_no_size_eight_orbit() {
    let scan = scan_sphere(0, &simplex_boundary(3));
    assert_eq!(scan.automorphism_group_order, 24);
    assert!(!scan.counterexample());
}

#[test]
fn iso_finds_relabelings_and_is_symmetric() {
    let a = catalog::load("RP3_11A").unwrap().complex;
    let b = a
        .relabel(|l| VertexLabel::new(format!("r{}", l.as_str())).unwrap())
        .unwrap();
    let map = iso(&a, &b).unwrap();
    for f in a.facets() {
        let image: Vec<&str> = f.iter().map(|&v| map[a.label(v)].as_str()).collect();
        let mut ids: Vec<VertexId> = image.iter().map(|t| b.vertex_id_str(t).unwrap()).collect();
        ids.sort_unstable();
        assert!(b.facets().contains(&ids));
    }
    let c = catalog::load("RP3_14").unwrap().complex;
    assert_eq!(is_isomorphic(&a, &c), is_isomorphic(&c, &a));
    assert!(!is_isomorphic(&a, &c));
}

#[test]
fn reduced_rp2_is_the_six_vertex_projective_plane() {
    let r = build_reduced(2).unwrap();
    let rp2 = catalog::load("RP2_6").unwrap();
    assert!(is_isomorphic(&r.complex, &rp2.complex));
}
