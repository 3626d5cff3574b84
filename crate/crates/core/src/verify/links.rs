//! Tiered recognition of spheres and balls.
//!
//! Up to dimension 2 recognition is exact: `S^0` is two points, `S^1` a
//! cycle, `B^1` a path, and a connected closed surface whose vertex links are
//! cycles is `S^2` exactly when its Euler characteristic is 2 (a disk likewise
//! when it has one boundary cycle and Euler characteristic 1). In dimension 3
//! a complex is certified when all vertex links are certified 2-spheres or
//! disks, the boundary (if any) is a certified 2-sphere, the integral homology
//! is that of `S^3` or a point, and the edge-path group simplifies to the
//! trivial group. Everything else that has the right homology is reported as
//! homology-only.

use serde::Serialize;

use super::pi1::{certify_simply_connected, Pi1Outcome, DEFAULT_STEPS};
use crate::complex::{ridge_degrees, SimplicialComplex, VertexId};
use crate::homology::{homology_integer, HomologyProfile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LinkStatus {
    SphereCertified,
    BallCertified,
    /// Right homology, but no combinatorial certificate.
    HomologyOnly,
    Failed,
}

impl LinkStatus {
    pub fn is_failed(self) -> bool {
        self == LinkStatus::Failed
    }

    pub fn as_str(self) -> &'static str {
        match self {
            LinkStatus::SphereCertified => "sphere-certified",
            LinkStatus::BallCertified => "ball-certified",
            LinkStatus::HomologyOnly => "homology-only",
            LinkStatus::Failed => "failed",
        }
    }
}

pub fn is_sphere_homology(h: &HomologyProfile, k: usize) -> bool {
    h.betti.len() == k + 1
        && h.is_torsion_free()
        && h.betti.iter().enumerate().all(|(i, &b)| {
            let want = if k == 0 {
                2 * usize::from(i == 0)
            } else {
                usize::from(i == 0 || i == k)
            };
            b == want
        })
}

pub fn is_point_homology(h: &HomologyProfile) -> bool {
    h.is_torsion_free() && h.betti.iter().enumerate().all(|(i, &b)| b == usize::from(i == 0))
}

/// Integral homology of `RP^d`: `Z` in degree 0, `Z/2` in odd degrees below
/// `d`, and `Z` in degree `d` when `d` is odd.
pub fn is_projective_homology(h: &HomologyProfile, d: usize) -> bool {
    if h.betti.len() != d + 1 || d == 0 {
        return false;
    }
    (0..=d).all(|k| {
        let (betti, torsion): (usize, Vec<u64>) = if k == 0 {
            (1, vec![])
        } else if k < d {
            (0, if k % 2 == 1 { vec![2] } else { vec![] })
        } else {
            (usize::from(d % 2 == 1), vec![])
        };
        h.betti[k] == betti && h.torsion_u64(k) == torsion
    })
}

fn ridge_census(c: &SimplicialComplex) -> (bool, bool) {
    let degs = ridge_degrees(c);
    let closed = degs.iter().all(|(_, d)| *d == 2);
    let with_boundary = degs.iter().all(|(_, d)| *d == 1 || *d == 2);
    (closed, with_boundary)
}

fn is_cycle(c: &SimplicialComplex) -> bool {
    c.dim() == 1
        && c.is_pure()
        && c.is_connected()
        && (0..c.num_vertices() as VertexId).all(|v| c.vertex_degree(v) == 2)
}

fn is_path(c: &SimplicialComplex) -> bool {
    if c.dim() != 1 || !c.is_pure() || !c.is_connected() {
        return false;
    }
    let degs: Vec<usize> = (0..c.num_vertices() as VertexId)
        .map(|v| c.vertex_degree(v))
        .collect();
    degs.iter().all(|&d| d <= 2)
        && degs.iter().filter(|&&d| d == 1).count() == 2
        && c.num_facets() + 1 == c.num_vertices()
}

fn boundary_vertices(c: &SimplicialComplex) -> Vec<bool> {
    let b = c.boundary_complex();
    let mut out = vec![false; c.num_vertices()];
    for l in b.labels() {
        out[c.vertex_id(l).unwrap() as usize] = true;
    }
    out
}

/// Every vertex link is a certified sphere (interior) or ball (boundary).
fn links_certified(c: &SimplicialComplex, k: usize) -> bool {
    let on_boundary = boundary_vertices(c);
    (0..c.num_vertices() as VertexId).all(|v| {
        let link = c.link_ids(&[v]);
        if on_boundary[v as usize] {
            recognize_ball(&link, k - 1) == LinkStatus::BallCertified
        } else {
            recognize_sphere(&link, k - 1) == LinkStatus::SphereCertified
        }
    })
}

fn simply_connected(c: &SimplicialComplex) -> bool {
    matches!(
        certify_simply_connected(c, DEFAULT_STEPS),
        Pi1Outcome::Trivial { .. }
    )
}

/// Is `c` a `k`-sphere?
pub fn recognize_sphere(c: &SimplicialComplex, k: usize) -> LinkStatus {
    use LinkStatus::*;
    if c.dim() != k as isize || !c.is_pure() {
        return Failed;
    }
    match k {
        0 => {
            if c.num_vertices() == 2 {
                SphereCertified
            } else {
                Failed
            }
        }
        1 => {
            if is_cycle(c) {
                SphereCertified
            } else {
                Failed
            }
        }
        _ => {
            let (closed, _) = ridge_census(c);
            if !closed || !c.is_strongly_connected() {
                return Failed;
            }
            if k == 2 {
                let ok = c.euler_characteristic() == 2 && links_certified(c, 2);
                return if ok { SphereCertified } else { Failed };
            }
            if !is_sphere_homology(&homology_integer(c), k) {
                return Failed;
            }
            if k == 3 {
                if !links_certified(c, 3) {
                    return Failed;
                }
                if simply_connected(c) {
                    return SphereCertified;
                }
            }
            HomologyOnly
        }
    }
}

/// Is `c` a `k`-ball?
pub fn recognize_ball(c: &SimplicialComplex, k: usize) -> LinkStatus {
    use LinkStatus::*;
    if c.dim() != k as isize || !c.is_pure() {
        return Failed;
    }
    match k {
        0 => {
            if c.num_vertices() == 1 {
                BallCertified
            } else {
                Failed
            }
        }
        1 => {
            if is_path(c) {
                BallCertified
            } else {
                Failed
            }
        }
        _ => {
            let (closed, with_boundary) = ridge_census(c);
            if closed || !with_boundary || !c.is_strongly_connected() {
                return Failed;
            }
            let boundary = recognize_sphere(&c.boundary_complex(), k - 1);
            if boundary.is_failed() {
                return Failed;
            }
            if k == 2 {
                let ok = c.euler_characteristic() == 1 && links_certified(c, 2);
                return if ok { BallCertified } else { Failed };
            }
            if !is_point_homology(&homology_integer(c)) {
                return Failed;
            }
            if k == 3 {
                if !links_certified(c, 3) {
                    return Failed;
                }
                if boundary == SphereCertified && simply_connected(c) {
                    return BallCertified;
                }
            }
            HomologyOnly
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{full_simplex, simplex_boundary};

    #[test]
    fn simplex_boundaries_and_simplices() {
        for n in 0..=4 {
            let want = if n <= 3 {
                LinkStatus::SphereCertified
            } else {
                LinkStatus::HomologyOnly
            };
            assert_eq!(recognize_sphere(&simplex_boundary(n + 1), n), want, "S^{n}");
            let want = if n <= 3 {
                LinkStatus::BallCertified
            } else {
                LinkStatus::HomologyOnly
            };
            assert_eq!(recognize_ball(&full_simplex(n), n), want, "B^{n}");
        }
        assert_eq!(recognize_ball(&simplex_boundary(3), 2), LinkStatus::Failed);
        assert_eq!(recognize_sphere(&full_simplex(3), 3), LinkStatus::Failed);
    }
}
