use super::{assemble, check_dimension, hypersimplex::subdivide_hypersimplex, sigma_token, Constructed};
use crate::error::Result;
use crate::group::{FacePosition, GroupElement, Subgroup};

/// `Y^n`: the corner simplices `C_i = e_i * { v_ij : j != i }` together with
/// the placing triangulation of the middle cell. The group acts trivially on
/// the orbit simplex, so every position has the whole group as isotropy and
/// the attached action is the identity of rank `n`.
pub fn build_yn(n: usize) -> Result<Constructed> {
    check_dimension(n)?;
    let at = |carrier: Vec<usize>| FacePosition::new(carrier, Subgroup::whole(n), GroupElement::IDENTITY);
    let mut facets: Vec<Vec<FacePosition>> = (0..=n)
        .map(|i| {
            let mut f = vec![at(vec![i])];
            f.extend((0..=n).filter(|&j| j != i).map(|j| at(vec![i, j])));
            f
        })
        .collect();
    if n >= 2 {
        for s in subdivide_hypersimplex(n)? {
            facets.push(s.into_iter().map(|(i, j)| at(vec![i, j])).collect());
        }
    }
    assemble(&format!("y{n}"), n, &facets, sigma_token)
}
