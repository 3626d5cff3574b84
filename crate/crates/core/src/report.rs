//! The full certification pipeline as one deterministic report.
//!
//! Nothing time- or machine-dependent goes into the report, so two runs on
//! the same inputs produce byte-identical text and JSON.

use std::fmt::Write as _;

use serde::Serialize;

use crate::catalog::{self, CatalogEntry};
use crate::complex::VertexLabel;
use crate::constructions::{
    build_d3_blocks, build_reduced, build_sigma, build_yn, lift_to_cross_polytope, Constructed,
    IdentificationDefect,
};
use crate::error::Result;
use crate::group::{find_z2n_subactions, quotient_by_action};
use crate::search::{
    brute_force_2sphere_count, enumerate_2spheres, is_isomorphic, lemma6_combinatorial_check,
    SearchBudget, SphereCensus, SearchStatus,
};
use crate::verify::{recognize, verify, Verdict, VerificationReport};

#[derive(Clone, Debug)]
pub struct PipelineOptions {
    /// Largest `n` for the `Σ(RP^n)` and reduced families.
    pub max_n: usize,
    /// Largest `n` whose orbit spaces are computed.
    pub max_quotient_n: usize,
    pub budget: SearchBudget,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        Self {
            max_n: 5,
            max_quotient_n: 4,
            budget: SearchBudget::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitSpaceRecord {
    pub f_vector: Vec<usize>,
    pub verdict: Verdict,
    /// Whether the orbit space is isomorphic to the orbit simplex `Y^n`;
    /// only asked of the `Σ(RP^n)` family.
    pub isomorphic_to_yn: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionRecord {
    pub name: String,
    pub n: usize,
    pub f_vector: Vec<usize>,
    pub verdict: Verdict,
    pub homology_gf2: String,
    pub homology_z: String,
    pub closed_pseudomanifold: bool,
    pub equivariant: bool,
    pub fixed_points: Vec<VertexLabel>,
    pub hidden_fixed_points: usize,
    pub lemmas_pass: bool,
    pub orbit_space: Option<OrbitSpaceRecord>,
    pub defect: Option<IdentificationDefect>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LiftRecord {
    pub n: usize,
    pub yn_f_vector: Vec<usize>,
    pub yn_verdict: Verdict,
    pub lift_vertices: usize,
    pub lift_facets: usize,
    pub sigma_vertices: usize,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubactionRecord {
    pub fixed_points: Vec<VertexLabel>,
    pub orbit_census: Vec<(usize, usize)>,
    pub quotient_verdict: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogRecord {
    pub id: &'static str,
    pub f_vector: Vec<usize>,
    pub target: Verdict,
    pub verdict: Verdict,
    pub homology_z: String,
    pub declared_action_equivariant: Option<bool>,
    pub declared_fixed_points: Option<Vec<VertexLabel>>,
    pub lemmas_pass: Option<bool>,
    pub automorphism_group_order: u128,
    pub subgroup_classes: usize,
    pub admissible_subactions: Vec<SubactionRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoRecord {
    pub left: String,
    pub right: String,
    pub isomorphic: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchCensusRow {
    pub census: SphereCensus,
    pub brute_force_count: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma6Summary {
    pub status: SearchStatus,
    pub spheres: usize,
    pub with_rank3_subgroup: usize,
    pub counterexamples: Vec<usize>,
    pub degree_sum_argument: String,
    pub note: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub lifts: Vec<LiftRecord>,
    pub constructions: Vec<ConstructionRecord>,
    pub catalog: Vec<CatalogRecord>,
    pub isomorphisms: Vec<IsoRecord>,
    pub sphere_census: Vec<SearchCensusRow>,
    pub lemma6: Lemma6Summary,
}

fn construction_record(
    c: &Constructed,
    n: usize,
    orbit_space: Option<OrbitSpaceRecord>,
) -> Result<ConstructionRecord> {
    let r = verify(&c.complex, Some(&c.action), Some(&c.positions))?;
    let eq = r.equivariance.as_ref().expect("an action was supplied");
    Ok(ConstructionRecord {
        name: c.name.clone(),
        n,
        f_vector: r.f_vector.clone(),
        verdict: r.verdict,
        homology_gf2: r.homology_gf2.to_string(),
        homology_z: r.homology_z.to_string(),
        closed_pseudomanifold: r.closed_pseudomanifold,
        equivariant: eq.equivariant,
        fixed_points: eq.fixed_points.clone(),
        hidden_fixed_points: c.positions.hidden_fixed_points.len(),
        lemmas_pass: eq.lemmas.all_applicable_pass(),
        orbit_space,
        defect: c.defect.clone(),
        notes: c.notes.clone(),
    })
}

fn orbit_space(c: &Constructed, yn: Option<&Constructed>) -> Result<OrbitSpaceRecord> {
    let q = quotient_by_action(&c.complex, &c.action)?;
    Ok(OrbitSpaceRecord {
        f_vector: q.complex.f_vector().0,
        verdict: recognize(&q.complex),
        isomorphic_to_yn: yn.map(|y| is_isomorphic(&q.complex, &y.complex)),
    })
}

fn catalog_record(e: &CatalogEntry) -> Result<CatalogRecord> {
    let report: Option<VerificationReport> = match &e.action {
        Some(a) => Some(verify(&e.complex, Some(a), e.positions.as_ref())?),
        None => None,
    };
    let report = match report {
        Some(r) => r,
        None => verify(&e.complex, None, None)?,
    };
    let rank = match e.target {
        Verdict::ProjectiveSpace(d) | Verdict::Sphere(d) | Verdict::Ball(d) => d,
        Verdict::Unknown => 0,
    };
    let search = find_z2n_subactions(&e.complex, rank);
    Ok(CatalogRecord {
        id: e.id,
        f_vector: report.f_vector.clone(),
        target: e.target,
        verdict: report.verdict,
        homology_z: report.homology_z.to_string(),
        declared_action_equivariant: report.equivariance.as_ref().map(|q| q.equivariant),
        declared_fixed_points: report.equivariance.as_ref().map(|q| q.fixed_points.clone()),
        lemmas_pass: report
            .equivariance
            .as_ref()
            .map(|q| q.lemmas.all_applicable_pass()),
        automorphism_group_order: search.automorphism_group_order,
        subgroup_classes: search.subgroup_classes,
        admissible_subactions: search
            .admissible
            .iter()
            .map(|s| SubactionRecord {
                fixed_points: s.fixed_points.clone(),
                orbit_census: s.orbit_census.iter().map(|(a, b)| (*a, *b)).collect(),
                quotient_verdict: s.quotient_verdict.clone(),
            })
            .collect(),
    })
}

/// Builds, verifies and cross-checks everything the library knows about.
pub fn run_pipeline(opts: &PipelineOptions) -> Result<PipelineReport> {
    let mut lifts = Vec::new();
    let mut constructions = Vec::new();
    for n in 1..=opts.max_n {
        let yn = build_yn(n)?;
        let lift = lift_to_cross_polytope(&yn)?;
        let sigma = build_sigma(n)?;
        lifts.push(LiftRecord {
            n,
            yn_f_vector: yn.complex.f_vector().0,
            yn_verdict: recognize(&yn.complex),
            lift_vertices: lift.complex.num_vertices(),
            lift_facets: lift.complex.num_facets(),
            sigma_vertices: sigma.complex.num_vertices(),
            notes: lift.notes.clone(),
        });
        let q = (n <= opts.max_quotient_n)
            .then(|| orbit_space(&sigma, Some(&yn)))
            .transpose()?;
        constructions.push(construction_record(&sigma, n, q)?);
        if n >= 2 {
            let reduced = build_reduced(n)?;
            let q = (n <= opts.max_quotient_n)
                .then(|| orbit_space(&reduced, None))
                .transpose()?;
            constructions.push(construction_record(&reduced, n, q)?);
        }
    }
    for block in build_d3_blocks()? {
        let q = orbit_space(&block, None)?;
        constructions.push(construction_record(&block, 3, Some(q))?);
    }

    let entries = catalog::all()?;
    let catalog = entries.iter().map(catalog_record).collect::<Result<Vec<_>>>()?;
    let mut isomorphisms = Vec::new();
    let find = |id: &str| entries.iter().find(|e| e.id == id).expect("catalog id");
    for (a, b) in [("RP3_11A", "RP3_11B"), ("RP3_11A", "RP3_14")] {
        isomorphisms.push(IsoRecord {
            left: a.into(),
            right: b.into(),
            isomorphic: is_isomorphic(&find(a).complex, &find(b).complex),
        });
    }
    if opts.max_n >= 2 {
        isomorphisms.push(IsoRecord {
            left: "reduced-rp2".into(),
            right: "RP2_6".into(),
            isomorphic: is_isomorphic(&build_reduced(2)?.complex, &find("RP2_6").complex),
        });
    }

    let mut sphere_census = Vec::new();
    for v in 4..=opts.budget.max_vertices.min(9) {
        let e = enumerate_2spheres(v, &opts.budget)?;
        let brute = (v <= 6).then(|| brute_force_2sphere_count(v)).transpose()?;
        sphere_census.push(SearchCensusRow {
            census: e.census(),
            brute_force_count: brute,
        });
    }
    let l6 = lemma6_combinatorial_check(&opts.budget)?;
    Ok(PipelineReport {
        lifts,
        constructions,
        catalog,
        isomorphisms,
        sphere_census,
        lemma6: Lemma6Summary {
            status: l6.status,
            spheres: l6.spheres,
            with_rank3_subgroup: l6.with_rank3_subgroup,
            counterexamples: l6.counterexamples,
            degree_sum_argument: l6.degree_sum_argument,
            note: l6.note,
        },
    })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

impl PipelineReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "== lifts").unwrap();
        for l in &self.lifts {
            writeln!(
                s,
                "n={}: Y f=({}) {}; lift {} vertices, {} facets; sigma {} vertices",
                l.n,
                join(&l.yn_f_vector),
                l.yn_verdict,
                l.lift_vertices,
                l.lift_facets,
                l.sigma_vertices
            )
            .unwrap();
            for note in &l.notes {
                writeln!(s, "  note: {note}").unwrap();
            }
        }
        writeln!(s, "== constructions").unwrap();
        for c in &self.constructions {
            writeln!(s, "{} (n={}): f=({}) verdict {}", c.name, c.n, join(&c.f_vector), c.verdict)
                .unwrap();
            writeln!(s, "  GF(2): {}", c.homology_gf2).unwrap();
            writeln!(s, "  Z: {}", c.homology_z).unwrap();
            let fixed: Vec<&str> = c.fixed_points.iter().map(VertexLabel::as_str).collect();
            writeln!(
                s,
                "  equivariant {}, fixed [{}], hidden fixed {}, lemmas {}",
                c.equivariant,
                fixed.join(" "),
                c.hidden_fixed_points,
                if c.lemmas_pass { "pass" } else { "FAIL" }
            )
            .unwrap();
            if let Some(q) = &c.orbit_space {
                let iso = match q.isomorphic_to_yn {
                    Some(true) => ", isomorphic to Y",
                    Some(false) => ", NOT isomorphic to Y",
                    None => "",
                };
                writeln!(s, "  orbit space f=({}) {}{iso}", join(&q.f_vector), q.verdict).unwrap();
            }
            if let Some(d) = &c.defect {
                writeln!(
                    s,
                    "  defect: f=({}) but a simplicial quotient needs ({})",
                    join(&d.actual_f_vector),
                    join(&d.expected_f_vector)
                )
                .unwrap();
            }
        }
        writeln!(s, "== catalog").unwrap();
        for c in &self.catalog {
            writeln!(
                s,
                "{}: f=({}) target {} verdict {}{}",
                c.id,
                join(&c.f_vector),
                c.target,
                c.verdict,
                if c.verdict == c.target { "" } else { " MISMATCH" }
            )
            .unwrap();
            writeln!(s, "  Z: {}", c.homology_z).unwrap();
            if let (Some(eq), Some(fixed)) = (c.declared_action_equivariant, &c.declared_fixed_points)
            {
                let fixed: Vec<&str> = fixed.iter().map(VertexLabel::as_str).collect();
                writeln!(
                    s,
                    "  declared action: equivariant {eq}, fixed [{}], lemmas {}",
                    fixed.join(" "),
                    if c.lemmas_pass == Some(true) { "pass" } else { "FAIL" }
                )
                .unwrap();
            }
            writeln!(
                s,
                "  |Aut| {}, {} subgroup classes, {} admissible",
                c.automorphism_group_order,
                c.subgroup_classes,
                c.admissible_subactions.len()
            )
            .unwrap();
            for a in &c.admissible_subactions {
                let fixed: Vec<&str> = a.fixed_points.iter().map(VertexLabel::as_str).collect();
                let census: Vec<String> =
                    a.orbit_census.iter().map(|(size, k)| format!("{k}x{size}")).collect();
                writeln!(
                    s,
                    "    fixed [{}], orbits {}, orbit space {}",
                    fixed.join(" "),
                    census.join(" "),
                    a.quotient_verdict
                )
                .unwrap();
            }
        }
        writeln!(s, "== isomorphisms").unwrap();
        for i in &self.isomorphisms {
            let word = if i.isomorphic { "isomorphic" } else { "not isomorphic" };
            writeln!(s, "{} vs {}: {word}", i.left, i.right).unwrap();
        }
        writeln!(s, "== 2-sphere census").unwrap();
        for row in &self.sphere_census {
            let c = &row.census;
            let brute = row
                .brute_force_count
                .map(|b| format!(", brute force {b}"))
                .unwrap_or_default();
            let status = match &c.status {
                SearchStatus::Complete => "complete".to_string(),
                SearchStatus::Inconclusive { reason } => format!("inconclusive ({reason})"),
            };
            writeln!(s, "v={}: {} spheres, {} nodes, {status}{brute}", c.vertices, c.count, c.nodes)
                .unwrap();
        }
        writeln!(s, "== 8-vertex Z_2^3 check").unwrap();
        let l = &self.lemma6;
        writeln!(
            s,
            "{} spheres, {} with a rank-3 elementary abelian subgroup, {} with a single orbit of size 8",
            l.spheres,
            l.with_rank3_subgroup,
            l.counterexamples.len()
        )
        .unwrap();
        writeln!(s, "cross-check: {}", l.degree_sum_argument).unwrap();
        writeln!(s, "note: {}", l.note).unwrap();
        s
    }
}
