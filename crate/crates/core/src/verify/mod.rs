//! Manifold recognition and the structured verification report.

pub mod lemmas;
pub mod links;
pub mod pi1;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

pub use lemmas::{lemma_report, LemmaOutcome, LemmaReport, LemmaStatus};
pub use links::{recognize_ball, recognize_sphere, LinkStatus};

use crate::complex::{ridge_degrees, Simplex, SimplicialComplex, VertexId, VertexLabel};
use crate::error::Result;
use crate::group::action::{check_equivariance, orbit_census, EquivarianceViolation, GroupAction};
use crate::group::position::PositionData;
use crate::homology::{homology_gf2, homology_integer, HomologyProfile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    ProjectiveSpace(usize),
    Sphere(usize),
    Ball(usize),
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::ProjectiveSpace(d) => write!(f, "RP^{d}"),
            Verdict::Sphere(d) => write!(f, "S^{d}"),
            Verdict::Ball(d) => write!(f, "B^{d}"),
            Verdict::Unknown => f.write_str("unknown"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Every ridge in exactly two facets, and the facets strongly connected.
pub fn check_closed_pseudomanifold(c: &SimplicialComplex) -> bool {
    c.dim() >= 1
        && c.is_pure()
        && ridge_degrees(c).iter().all(|(_, d)| *d == 2)
        && c.is_strongly_connected()
}

/// Ridges in one or two facets, at least one boundary ridge, strongly
/// connected.
pub fn check_pseudomanifold_with_boundary(c: &SimplicialComplex) -> bool {
    let degs = ridge_degrees(c);
    c.dim() >= 1
        && c.is_pure()
        && degs.iter().all(|(_, d)| *d == 1 || *d == 2)
        && degs.iter().any(|(_, d)| *d == 1)
        && c.is_strongly_connected()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkRecord {
    pub vertex: VertexLabel,
    pub status: LinkStatus,
}

/// Status of every vertex link: spheres for interior vertices, balls for
/// vertices on the boundary. Sorted by vertex token.
pub fn check_links(c: &SimplicialComplex) -> Vec<LinkRecord> {
    let d = c.dim();
    if d < 1 {
        return Vec::new();
    }
    let k = (d - 1) as usize;
    let boundary = c.boundary_complex();
    (0..c.num_vertices() as VertexId)
        .into_par_iter()
        .map(|v| {
            let link = c.link_ids(&[v]);
            let status = if boundary.vertex_id(c.label(v)).is_some() {
                recognize_ball(&link, k)
            } else {
                recognize_sphere(&link, k)
            };
            LinkRecord {
                vertex: c.label(v).clone(),
                status,
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RidgeDefect {
    pub ridge: Simplex,
    pub facets: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivarianceBlock {
    pub rank: usize,
    pub equivariant: bool,
    pub violation: Option<EquivarianceViolation>,
    pub orbit_census: BTreeMap<usize, usize>,
    pub fixed_points: Vec<VertexLabel>,
    pub lemmas: LemmaReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub f_vector: Vec<usize>,
    pub dimension: isize,
    pub euler_characteristic: i64,
    pub pure: bool,
    pub closed_pseudomanifold: bool,
    pub pseudomanifold_with_boundary: bool,
    pub strongly_connected: bool,
    /// Ridges in a number of facets other than two (other than one or two
    /// when the complex has boundary).
    pub ridge_defects: Vec<RidgeDefect>,
    pub boundary_status: Option<LinkStatus>,
    pub link_census: BTreeMap<LinkStatus, usize>,
    pub links: Vec<LinkRecord>,
    pub homology_gf2: HomologyProfile,
    pub homology_z: HomologyProfile,
    pub verdict: Verdict,
    pub equivariance: Option<EquivarianceBlock>,
    pub notes: Vec<String>,
}

struct Analysis {
    closed: bool,
    with_boundary: bool,
    links: Vec<LinkRecord>,
    boundary_status: Option<LinkStatus>,
    gf2: HomologyProfile,
    z: HomologyProfile,
    verdict: Verdict,
}

fn analyze(c: &SimplicialComplex) -> Analysis {
    let closed = check_closed_pseudomanifold(c);
    let with_boundary = !closed && check_pseudomanifold_with_boundary(c);
    let links = if closed || with_boundary {
        check_links(c)
    } else {
        Vec::new()
    };
    let (gf2, z) = rayon::join(|| homology_gf2(c), || homology_integer(c));
    let d = c.dim().max(0) as usize;
    let links_ok = links.iter().all(|l| !l.status.is_failed());
    let boundary_status = with_boundary.then(|| recognize_sphere(&c.boundary_complex(), d - 1));
    let verdict = if c.dim() == 0 {
        match c.num_vertices() {
            1 => Verdict::Ball(0),
            2 => Verdict::Sphere(0),
            _ => Verdict::Unknown,
        }
    } else if closed && links_ok {
        // RP^1 is the circle, reported as S^1.
        if d >= 2 && links::is_projective_homology(&z, d) && gf2.betti.iter().all(|&b| b == 1) {
            Verdict::ProjectiveSpace(d)
        } else if links::is_sphere_homology(&z, d) {
            Verdict::Sphere(d)
        } else {
            Verdict::Unknown
        }
    } else if with_boundary
        && links_ok
        && boundary_status.is_some_and(|s| !s.is_failed())
        && links::is_point_homology(&z)
    {
        Verdict::Ball(d)
    } else {
        Verdict::Unknown
    };
    Analysis {
        closed,
        with_boundary,
        links,
        boundary_status,
        gf2,
        z,
        verdict,
    }
}

/// Recognition verdict alone.
pub fn recognize(c: &SimplicialComplex) -> Verdict {
    analyze(c).verdict
}

/// Full certificate. With an action, equivariance and the lemma oracles are
/// included; `positions` enables the isotropy lemma for constructed input.
pub fn verify(
    c: &SimplicialComplex,
    action: Option<&GroupAction>,
    positions: Option<&PositionData>,
) -> Result<VerificationReport> {
    let an = analyze(c);
    let mut notes = Vec::new();
    let ridge_defects: Vec<RidgeDefect> = if c.dim() >= 1 {
        let ok_boundary = an.with_boundary;
        ridge_degrees(c)
            .into_iter()
            .filter(|(_, n)| !(*n == 2 || (ok_boundary && *n == 1)))
            .map(|(r, n)| RidgeDefect {
                ridge: c.simplex_of(&r),
                facets: n,
            })
            .collect()
    } else {
        Vec::new()
    };
    if !ridge_defects.is_empty() && ridge_defects.iter().all(|r| r.facets == 1) {
        notes.push("complex has boundary ridges but is not a pseudomanifold with boundary".into());
    }
    let mut link_census = BTreeMap::new();
    for l in &an.links {
        *link_census.entry(l.status).or_insert(0) += 1;
    }
    if link_census.contains_key(&LinkStatus::HomologyOnly) {
        notes.push(
            "some links are certified by homology only (no combinatorial sphere certificate)"
                .into(),
        );
    }
    let equivariance = match action {
        None => None,
        Some(a) => {
            let eq = check_equivariance(c, a)?;
            let bound = a.bind(c)?;
            Some(EquivarianceBlock {
                rank: a.rank(),
                equivariant: eq.equivariant,
                violation: eq.violation,
                orbit_census: orbit_census(c, a)?,
                fixed_points: bound
                    .fixed_points()
                    .into_iter()
                    .map(|v| c.label(v).clone())
                    .collect(),
                lemmas: lemma_report(c, a, positions)?,
            })
        }
    };
    Ok(VerificationReport {
        f_vector: c.f_vector().0,
        dimension: c.dim(),
        euler_characteristic: c.euler_characteristic(),
        pure: c.is_pure(),
        closed_pseudomanifold: an.closed,
        pseudomanifold_with_boundary: an.with_boundary,
        strongly_connected: c.is_strongly_connected(),
        ridge_defects,
        boundary_status: an.boundary_status,
        link_census,
        links: an.links,
        homology_gf2: an.gf2,
        homology_z: an.z,
        verdict: an.verdict,
        equivariance,
        notes,
    })
}

impl VerificationReport {
    /// Human-readable rendering.
    pub fn to_text(&self) -> String {
        use std::fmt::Write as _;
        let mut s = String::new();
        let fv: Vec<String> = self.f_vector.iter().map(ToString::to_string).collect();
        writeln!(s, "f-vector: ({})", fv.join(", ")).unwrap();
        writeln!(s, "dimension: {}", self.dimension).unwrap();
        writeln!(s, "euler characteristic: {}", self.euler_characteristic).unwrap();
        writeln!(s, "pure: {}", self.pure).unwrap();
        writeln!(s, "closed pseudomanifold: {}", self.closed_pseudomanifold).unwrap();
        writeln!(s, "pseudomanifold with boundary: {}", self.pseudomanifold_with_boundary)
            .unwrap();
        writeln!(s, "strongly connected: {}", self.strongly_connected).unwrap();
        for r in &self.ridge_defects {
            writeln!(s, "ridge {} lies in {} facets", r.ridge, r.facets).unwrap();
        }
        if let Some(b) = self.boundary_status {
            writeln!(s, "boundary: {}", b.as_str()).unwrap();
        }
        let census: Vec<String> = self
            .link_census
            .iter()
            .map(|(k, v)| format!("{} {v}", k.as_str()))
            .collect();
        writeln!(s, "vertex links: {}", census.join(", ")).unwrap();
        writeln!(s, "homology GF(2): {}", self.homology_gf2).unwrap();
        writeln!(s, "homology Z: {}", self.homology_z).unwrap();
        if let Some(e) = &self.equivariance {
            writeln!(s, "action rank: {}", e.rank).unwrap();
            writeln!(s, "equivariant: {}", e.equivariant).unwrap();
            if let Some(v) = &e.violation {
                writeln!(s, "violation: g{} maps {} to {}", v.generator, v.facet, v.image)
                    .unwrap();
            }
            let census: Vec<String> = e
                .orbit_census
                .iter()
                .map(|(size, count)| format!("{count}x{size}"))
                .collect();
            writeln!(s, "orbits: {}", census.join(" ")).unwrap();
            let fixed: Vec<&str> = e.fixed_points.iter().map(VertexLabel::as_str).collect();
            writeln!(s, "fixed points: [{}]", fixed.join(" ")).unwrap();
            for (name, o) in [
                ("lemma parity", &e.lemmas.lemma1_parity),
                ("lemma sphere bound", &e.lemmas.lemma3_bound),
                ("lemma isotropy", &e.lemmas.lemma4_isotropy),
            ] {
                let status = match o.status {
                    LemmaStatus::Pass => "pass",
                    LemmaStatus::Fail => "FAIL",
                    LemmaStatus::NotApplicable => "n/a",
                };
                writeln!(s, "{name}: {status} ({})", o.detail).unwrap();
            }
        }
        for n in &self.notes {
            writeln!(s, "note: {n}").unwrap();
        }
        writeln!(s, "verdict: {}", self.verdict).unwrap();
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{full_simplex, simplex_boundary};

    #[test]
    fn verdicts_for_simplices() {
        assert_eq!(recognize(&simplex_boundary(4)), Verdict::Sphere(3));
        assert_eq!(recognize(&full_simplex(3)), Verdict::Ball(3));
        assert!(check_closed_pseudomanifold(&simplex_boundary(4)));
        assert!(!check_closed_pseudomanifold(&full_simplex(3)));
        assert_eq!(Verdict::ProjectiveSpace(3).to_string(), "RP^3");
    }

    #[test]
    fn report_names_dangling_ridges() {
        let c = SimplicialComplex::from_facets(vec![
            Simplex::from_tokens(&["a", "b", "c"]).unwrap(),
            Simplex::from_tokens(&["a", "b", "d"]).unwrap(),
            Simplex::from_tokens(&["a", "b", "e"]).unwrap(),
        ])
        .unwrap();
        let r = verify(&c, None, None).unwrap();
        assert_eq!(r.verdict, Verdict::Unknown);
        assert!(r.ridge_defects.iter().any(|d| d.facets == 3));
        assert!(r.to_text().contains("ridge [a b] lies in 3 facets"));
    }
}
