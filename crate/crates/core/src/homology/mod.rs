//! Exact simplicial homology over GF(2) and over the integers.

pub mod boundary;
pub mod gf2;
pub mod smith;

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

pub use boundary::{boundary_matrices, ChainBoundary};
pub use gf2::rank_gf2;
pub use smith::{smith_form, SmithForm};

use crate::complex::SimplicialComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Coefficients {
    #[serde(rename = "GF2")]
    Gf2,
    #[serde(rename = "Z")]
    Integers,
}

/// Homology groups `H_0 .. H_d` (unreduced).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub coefficients: Coefficients,
    pub betti: Vec<usize>,
    /// Torsion coefficients per dimension; always empty over GF(2).
    #[serde(serialize_with = "serialize_torsion")]
    pub torsion: Vec<Vec<BigUint>>,
}

fn serialize_torsion<S: Serializer>(t: &[Vec<BigUint>], s: S) -> Result<S::Ok, S::Error> {
    let as_strings: Vec<Vec<String>> = t
        .iter()
        .map(|v| v.iter().map(ToString::to_string).collect())
        .collect();
    as_strings.serialize(s)
}

impl HomologyProfile {
    pub fn dim(&self) -> usize {
        self.betti.len().saturating_sub(1)
    }

    /// Torsion in dimension `k` as machine integers (panics above `u64`).
    pub fn torsion_u64(&self, k: usize) -> Vec<u64> {
        self.torsion
            .get(k)
            .map(|t| {
                t.iter()
                    .map(|x| u64::try_from(x).expect("torsion coefficient exceeds u64"))
                    .collect()
            })
            .unwrap_or_default()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }

    /// Alternating sum of Betti numbers.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = match self.coefficients {
            Coefficients::Gf2 => "Z/2",
            Coefficients::Integers => "Z",
        };
        let mut parts = Vec::new();
        for (k, &b) in self.betti.iter().enumerate() {
            let mut summands = Vec::new();
            match b {
                0 => {}
                1 => summands.push(ring.to_string()),
                _ => summands.push(format!("{ring}^{b}")),
            }
            for t in self.torsion.get(k).into_iter().flatten() {
                summands.push(format!("Z/{t}"));
            }
            let group = if summands.is_empty() {
                "0".to_string()
            } else {
                summands.join("+")
            };
            parts.push(format!("H{k}={group}"));
        }
        f.write_str(&parts.join(" "))
    }
}

fn face_counts(c: &SimplicialComplex) -> Vec<usize> {
    c.f_vector().0
}

/// `betti_k = f_k - rank ∂_k - rank ∂_{k+1}`.
fn assemble(f: &[usize], ranks: &[usize]) -> Vec<usize> {
    // ranks[k] is the rank of ∂_{k+1}
    (0..f.len())
        .map(|k| {
            let out = if k == 0 { 0 } else { ranks[k - 1] };
            let inn = ranks.get(k).copied().unwrap_or(0);
            f[k] - out - inn
        })
        .collect()
}

pub fn homology_gf2(c: &SimplicialComplex) -> HomologyProfile {
    let f = face_counts(c);
    let ranks: Vec<usize> = boundary_matrices(c).par_iter().map(rank_gf2).collect();
    HomologyProfile {
        coefficients: Coefficients::Gf2,
        betti: assemble(&f, &ranks),
        torsion: vec![Vec::new(); f.len()],
    }
}

pub fn homology_integer(c: &SimplicialComplex) -> HomologyProfile {
    let f = face_counts(c);
    let forms: Vec<SmithForm> = boundary_matrices(c).par_iter().map(smith_form).collect();
    let ranks: Vec<usize> = forms.iter().map(|s| s.rank).collect();
    // torsion of H_k comes from the image of ∂_{k+1}
    let torsion = (0..f.len())
        .map(|k| forms.get(k).map(|s| s.torsion.clone()).unwrap_or_default())
        .collect();
    HomologyProfile {
        coefficients: Coefficients::Integers,
        betti: assemble(&f, &ranks),
        torsion,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{full_simplex, simplex_boundary, Simplex};

    fn rp2_6() -> SimplicialComplex {
        let tris = ["123", "134", "145", "156", "126", "235", "346", "245", "356", "246"];
        SimplicialComplex::from_facets(
            tris.iter()
                .map(|t| {
                    let v: Vec<String> = t.chars().map(String::from).collect();
                    Simplex::from_tokens(&v).unwrap()
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn boundary_ranks_of_small_spheres() {
        let tri = simplex_boundary(2);
        let m = boundary_matrices(&tri);
        assert_eq!((m[0].rows, m[0].cols), (3, 3));
        assert_eq!(rank_gf2(&m[0]), 2);
        let tet = simplex_boundary(3);
        let m = boundary_matrices(&tet);
        assert_eq!((m[1].rows, m[1].cols), (6, 4));
        assert_eq!(rank_gf2(&m[1]), 3);
        assert_eq!(m[0].get(0, 0), -1);
    }

    #[test]
    fn spheres_and_balls() {
        assert_eq!(homology_gf2(&simplex_boundary(4)).betti, vec![1, 0, 0, 1]);
        let z = homology_integer(&simplex_boundary(3));
        assert_eq!(z.betti, vec![1, 0, 1]);
        assert!(z.is_torsion_free());
        assert_eq!(homology_integer(&full_simplex(4)).betti, vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn projective_plane() {
        let c = rp2_6();
        assert_eq!(homology_gf2(&c).betti, vec![1, 1, 1]);
        let z = homology_integer(&c);
        assert_eq!(z.betti, vec![1, 0, 0]);
        assert_eq!(z.torsion_u64(1), vec![2]);
        assert_eq!(z.to_string(), "H0=Z H1=Z/2 H2=0");
    }
}
