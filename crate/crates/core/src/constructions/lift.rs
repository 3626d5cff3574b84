use std::collections::{BTreeMap, BTreeSet};

use super::{assemble, lift_token, sigma_token, yn::build_yn, Constructed, IdentificationDefect};
use crate::complex::{Simplex, VertexLabel};
use crate::error::{Error, Result};
use crate::group::position::cross_polytope_stabilizer;
use crate::group::{characteristic_vector, FacePosition, GroupElement, Subgroup};

fn facet_positions(yn: &Constructed) -> Result<Vec<Vec<&FacePosition>>> {
    yn.complex
        .facets()
        .iter()
        .map(|f| {
            f.iter()
                .map(|&v| {
                    let l = yn.complex.label(v);
                    yn.positions.positions.get(l).ok_or_else(|| {
                        Error::ConstructionInvariant(format!("vertex {l} of {} has no position", yn.name))
                    })
                })
                .collect()
        })
        .collect()
}

/// Reflects `Y^n` through all `2^n` sign patterns. A vertex over the face
/// spanned by `carrier` is fixed by the sign flips of the coordinates it does
/// not use, so copies merge according to those stabilizers.
pub fn lift_to_cross_polytope(yn: &Constructed) -> Result<Constructed> {
    let n = yn.positions.n;
    let base: Vec<Vec<FacePosition>> = facet_positions(yn)?
        .into_iter()
        .map(|f| {
            f.into_iter()
                .map(|p| {
                    let h = cross_polytope_stabilizer(n, p.carrier());
                    FacePosition::new(p.carrier().to_vec(), h, GroupElement::IDENTITY)
                })
                .collect()
        })
        .collect();
    let mut expected = 0u64;
    let mut facets = Vec::new();
    for f in &base {
        let pointwise = f
            .iter()
            .fold(Subgroup::whole(n), |acc, p| intersect(&acc, p.stabilizer()));
        expected += (1u64 << n) / pointwise.order();
        for g in GroupElement::all(n) {
            facets.push(f.iter().map(|p| p.translate(g)).collect());
        }
    }
    let mut c = assemble(&format!("p{n}"), n, &facets, lift_token)?;
    if c.complex.num_facets() as u64 != expected {
        return Err(Error::ConstructionInvariant(format!(
            "lift has {} facets, orbit count predicts {expected}",
            c.complex.num_facets()
        )));
    }
    let want = 2 * n * n + 2 * n + 1;
    if c.complex.num_vertices() != want {
        return Err(Error::ConstructionInvariant(format!(
            "lift has {} vertices, expected {want}",
            c.complex.num_vertices()
        )));
    }
    c.notes.push(format!(
        "cross-polytope lift: {want} vertices = 1 origin + {} axis corners + {} axis midpoints + {} planar midpoints",
        2 * n,
        2 * n,
        2 * n * (n.saturating_sub(1))
    ));
    if n == 3 {
        c.notes.push(
            "the count of 22 vertices quoted for this lift of P^3 disagrees with the orbit census of 25; \
             25 is the count that yields 16 vertices after antipodal identification"
                .into(),
        );
    }
    Ok(c)
}

fn intersect(a: &Subgroup, b: &Subgroup) -> Subgroup {
    Subgroup::generated_by(
        a.ambient_rank(),
        a.elements().into_iter().filter(|g| b.contains(*g)),
    )
}

/// Identifies antipodal vertices on the boundary of the lifted cross-polytope,
/// giving `Σ(RP^n)`.
pub fn antipodal_quotient(pn: &Constructed) -> Result<Constructed> {
    let n = pn.positions.n;
    let xi0 = characteristic_vector(n, 0);
    let boundary: BTreeSet<VertexLabel> = pn.complex.boundary_complex().labels().iter().cloned().collect();
    let over_f0: BTreeSet<VertexLabel> = pn
        .positions
        .positions
        .iter()
        .filter(|(_, p)| p.lies_over_facet(0))
        .map(|(t, _)| t.clone())
        .collect();
    if n > 0 && boundary != over_f0 {
        return Err(Error::ConstructionInvariant(
            "boundary of the lift is not the set of vertices over F0".into(),
        ));
    }
    let glue = |p: &FacePosition| {
        if p.lies_over_facet(0) {
            p.with_extra_isotropy(xi0)
        } else {
            p.clone()
        }
    };
    let facets: Vec<Vec<FacePosition>> = facet_positions(pn)?
        .into_iter()
        .map(|f| f.into_iter().map(glue).collect())
        .collect();
    let mut c = assemble(&format!("sigma-rp{n}"), n, &facets, sigma_token)?;
    if c.complex.num_facets() != pn.complex.num_facets() {
        return Err(Error::ConstructionInvariant(format!(
            "antipodal identification merged facets: {} became {}",
            pn.complex.num_facets(),
            c.complex.num_facets()
        )));
    }
    if c.complex.num_vertices() != (n + 1) * (n + 1) {
        return Err(Error::ConstructionInvariant(format!(
            "Σ(RP^{n}) has {} vertices, expected {}",
            c.complex.num_vertices(),
            (n + 1) * (n + 1)
        )));
    }
    c.notes = pn.notes.clone();
    if let Some(d) = identification_defect(pn, &c, glue) {
        c.notes.push(format!(
            "antipodal identification is not injective on faces: f-vector {:?}, a simplicial quotient needs {:?}; \
             lifted faces {} and {} both become {}, so the identification space is a simplicial cell complex \
             and the complex spanned by its vertex sets is not RP^{n}",
            d.actual_f_vector, d.expected_f_vector, d.example.0, d.example.1, d.example.2
        ));
        c.defect = Some(d);
    }
    Ok(c)
}

/// Faces of the lift that the boundary identification should keep apart
/// but that end up with the same vertex set.
fn identification_defect(
    pn: &Constructed,
    sigma: &Constructed,
    glue: impl Fn(&FacePosition) -> FacePosition,
) -> Option<IdentificationDefect> {
    let lift = pn.complex.f_vector().0;
    let boundary = pn.complex.boundary_complex().f_vector().0;
    let expected: Vec<usize> = lift
        .iter()
        .enumerate()
        .map(|(k, &f)| f - boundary.get(k).copied().unwrap_or(0) / 2)
        .collect();
    let actual = sigma.complex.f_vector().0;
    if actual == expected {
        return None;
    }
    let image = |v: u32| sigma_token(&glue(&pn.positions.positions[pn.complex.label(v)]));
    let on_boundary: BTreeSet<&VertexLabel> = pn.positions.positions.iter()
        .filter(|(_, p)| p.lies_over_facet(0))
        .map(|(t, _)| t)
        .collect();
    let mut seen: BTreeMap<Vec<VertexLabel>, Vec<Simplex>> = BTreeMap::new();
    for k in 1..lift.len() {
        for f in pn.complex.faces(k) {
            let mut key: Vec<VertexLabel> = f.iter().map(|&v| image(v)).collect();
            key.sort();
            seen.entry(key).or_default().push(pn.complex.simplex_of(f));
        }
        for (key, pre) in &seen {
            let antipodal_pair = pre.len() == 2
                && pre.iter().all(|s| s.vertices().iter().all(|v| on_boundary.contains(v)));
            if pre.len() > 1 && !antipodal_pair {
                return Some(IdentificationDefect {
                    expected_f_vector: expected,
                    actual_f_vector: actual,
                    example: (pre[0].clone(), pre[1].clone(), Simplex::new(key.clone()).ok()?),
                });
            }
        }
        seen.clear();
    }
    None
}

/// `Σ(RP^n)` assembled directly as `(Z_2^n × Y^n)/~`, gluing each vertex by
/// its isotropy `G_F`. Serves as an independent route to the antipodal
/// quotient.
pub fn sigma_direct(yn: &Constructed) -> Result<Constructed> {
    let n = yn.positions.n;
    let base = facet_positions(yn)?;
    let mut facets = Vec::new();
    for f in &base {
        for g in GroupElement::all(n) {
            facets.push(
                f.iter()
                    .map(|p| FacePosition::standard(n, p.carrier().to_vec(), g))
                    .collect(),
            );
        }
    }
    assemble(&format!("sigma-rp{n}"), n, &facets, sigma_token)
}

/// `Σ(RP^n)` with `(n+1)^2` vertices.
pub fn build_sigma(n: usize) -> Result<Constructed> {
    if n == 0 {
        return Err(Error::Unsupported("RP^0 is a point; use n >= 1".into()));
    }
    antipodal_quotient(&lift_to_cross_polytope(&build_yn(n)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_dimensional_lifts() {
        let p1 = lift_to_cross_polytope(&build_yn(1).unwrap()).unwrap();
        assert_eq!(p1.complex.f_vector().0, vec![5, 4]);
        let s1 = antipodal_quotient(&p1).unwrap();
        assert_eq!(s1.complex.f_vector().0, vec![4, 4]);
        let p3 = lift_to_cross_polytope(&build_yn(3).unwrap()).unwrap();
        assert_eq!(p3.complex.num_vertices(), 25);
        assert_eq!(p3.complex.num_facets(), 64);
    }

    #[test]
    fn both_routes_agree() {
        for n in 1..=4 {
            let yn = build_yn(n).unwrap();
            let a = antipodal_quotient(&lift_to_cross_polytope(&yn).unwrap()).unwrap();
            let b = sigma_direct(&yn).unwrap();
            assert_eq!(a.complex, b.complex, "n = {n}");
            assert_eq!(a.action, b.action, "n = {n}");
        }
    }
}
