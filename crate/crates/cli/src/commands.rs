use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::Serialize;

use equitri_core::catalog;
use equitri_core::constructions::{
    build_d3_blocks, build_reduced, build_sigma, build_yn, lift_to_cross_polytope, Constructed,
    IdentificationDefect,
};
use equitri_core::group::{quotient_by_action, GroupAction};
use equitri_core::homology::{homology_gf2, homology_integer, HomologyProfile};
use equitri_core::io::{parse_action, parse_tri, to_action_string, to_tri_string};
use equitri_core::report::{run_pipeline, PipelineOptions};
use equitri_core::search::{
    enumerate_2spheres, iso as find_iso, lemma6_combinatorial_check, SearchBudget, SearchStatus,
};
use equitri_core::verify::{recognize, verify as certify, Verdict};
use equitri_core::{SimplicialComplex, VertexLabel};

use crate::emit::{emit, read, render, write_files, Format};
use crate::{Block, BudgetArgs, BuildKind, CliError, Coefficients, Dest, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Exact(Verdict),
    /// A ball or sphere of the complex's own dimension.
    AnyBall,
    AnySphere,
}

impl Expectation {
    fn matches(self, v: Verdict, dim: usize) -> bool {
        match self {
            Expectation::Exact(e) => e == v,
            Expectation::AnyBall => v == Verdict::Ball(dim),
            Expectation::AnySphere => v == Verdict::Sphere(dim),
        }
    }
}

pub fn parse_expectation(s: &str) -> Result<Expectation, String> {
    let s = s.to_ascii_lowercase();
    match s.as_str() {
        "ball" => return Ok(Expectation::AnyBall),
        "sphere" => return Ok(Expectation::AnySphere),
        _ => {}
    }
    let (make, digits): (fn(usize) -> Verdict, &str) = if let Some(d) = s.strip_prefix("rp") {
        (Verdict::ProjectiveSpace, d)
    } else if let Some(d) = s.strip_prefix('s') {
        (Verdict::Sphere, d)
    } else if let Some(d) = s.strip_prefix('b') {
        (Verdict::Ball, d)
    } else {
        return Err(format!("unknown expectation {s:?}; use rpK, sK, bK, ball or sphere"));
    };
    digits
        .parse()
        .map(|d| Expectation::Exact(make(d)))
        .map_err(|_| format!("invalid dimension in {s:?}"))
}

fn load_tri(path: &Path) -> Result<SimplicialComplex, CliError> {
    parse_tri(&read(path)?).map_err(|e| located(path, e))
}

fn load_action(path: &Path) -> Result<GroupAction, CliError> {
    parse_action(&read(path)?).map_err(|e| located(path, e))
}

fn located(path: &Path, e: equitri_core::Error) -> CliError {
    match e {
        equitri_core::Error::Parse { .. } => CliError::Input(format!("{}: {e}", path.display())),
        other => other.into(),
    }
}

fn action_path(out: &Path) -> PathBuf {
    out.with_extension("act")
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

#[derive(Serialize)]
struct Artifact<'a> {
    name: &'a str,
    f_vector: Vec<usize>,
    notes: &'a [String],
    defect: Option<&'a IdentificationDefect>,
    files: Vec<PathBuf>,
    tri: String,
    action: Option<String>,
}

/// Writes or prints a complex and its action.
fn deliver(
    format: Format,
    name: &str,
    complex: &SimplicialComplex,
    action: Option<&GroupAction>,
    notes: &[String],
    defect: Option<&IdentificationDefect>,
    dest: &Dest,
) -> Result<(), CliError> {
    let tri = to_tri_string(complex);
    let act = action.map(to_action_string);
    let mut files = Vec::new();
    if let Some(out) = &dest.out {
        files.push((out.clone(), tri.clone()));
        if let Some(a) = &act {
            files.push((action_path(out), a.clone()));
        }
        write_files(&files, dest.force)?;
    }
    let fv = complex.f_vector().0;
    let mut text = format!("{name}: f=({})\n", join(&fv));
    for n in notes {
        writeln!(text, "note: {n}").unwrap();
    }
    if let Some(d) = defect {
        writeln!(
            text,
            "defect: f=({}) but a simplicial quotient needs ({})",
            join(&d.actual_f_vector),
            join(&d.expected_f_vector)
        )
        .unwrap();
    }
    if files.is_empty() {
        text.push_str(&tri);
        if let Some(a) = &act {
            text.push_str(a);
        }
    } else {
        for (p, _) in &files {
            writeln!(text, "wrote {}", p.display()).unwrap();
        }
    }
    let paths: Vec<PathBuf> = files.into_iter().map(|(p, _)| p).collect();
    emit(
        format,
        &text,
        &Artifact {
            name,
            f_vector: fv,
            notes,
            defect,
            files: paths,
            tri,
            action: act,
        },
    );
    Ok(())
}

pub fn build(
    format: Format,
    kind: BuildKind,
    n: Option<usize>,
    block: Block,
    dest: &Dest,
) -> Result<Outcome, CliError> {
    let c: Constructed = if kind == BuildKind::D3Blocks {
        if n.is_some() {
            return Err(CliError::Input("d3-blocks takes no --n".into()));
        }
        let mut blocks = build_d3_blocks()?;
        blocks.swap_remove(if block == Block::Diag { 0 } else { 1 })
    } else {
        let n = n.ok_or_else(|| CliError::Input("--n is required".into()))?;
        match kind {
            BuildKind::SigmaRpn => build_sigma(n)?,
            BuildKind::Reduced => build_reduced(n)?,
            BuildKind::Yn => build_yn(n)?,
            BuildKind::Lift => lift_to_cross_polytope(&build_yn(n)?)?,
            BuildKind::D3Blocks => unreachable!(),
        }
    };
    deliver(
        format,
        &c.name,
        &c.complex,
        Some(&c.action),
        &c.notes,
        c.defect.as_ref(),
        dest,
    )?;
    Ok(Outcome::Success)
}

fn normalize_id(id: &str) -> String {
    id.to_ascii_uppercase().replace('-', "_")
}

pub fn catalog(format: Format, id: Option<&str>, list: bool, dest: &Dest) -> Result<Outcome, CliError> {
    match id {
        Some(id) if !list => {
            let e = catalog::load(&normalize_id(id))?;
            let notes = vec![e.description.to_string()];
            deliver(format, e.id, &e.complex, e.action.as_ref(), &notes, None, dest)?;
        }
        _ => {
            let entries = catalog::all()?;
            let summaries: Vec<_> = entries.iter().map(|e| e.summary()).collect();
            let mut text = String::new();
            for s in &summaries {
                writeln!(text, "{}: f=({}) {}  {}", s.id, join(&s.f_vector), s.target, s.description)
                    .unwrap();
            }
            emit(format, &text, &summaries);
        }
    }
    Ok(Outcome::Success)
}

pub fn verify(
    format: Format,
    file: &Path,
    action: Option<&Path>,
    expect: Option<Expectation>,
) -> Result<Outcome, CliError> {
    let c = load_tri(file)?;
    let a = action.map(load_action).transpose()?;
    let r = certify(&c, a.as_ref(), None)?;
    let dim = c.dim().max(0) as usize;
    let equivariant = r.equivariance.as_ref().map_or(true, |e| e.equivariant);
    let ok = equivariant
        && match expect {
            Some(e) => e.matches(r.verdict, dim),
            None => r.verdict != Verdict::Unknown,
        };
    let mut text = r.to_text();
    if let Some(e) = expect {
        writeln!(
            text,
            "expectation: {}",
            if e.matches(r.verdict, dim) { "met" } else { "NOT met" }
        )
        .unwrap();
    }
    emit(format, &text, &r);
    Ok(if ok { Outcome::Success } else { Outcome::Mismatch })
}

#[derive(Serialize)]
struct HomologyOut {
    gf2: Option<HomologyProfile>,
    z: Option<HomologyProfile>,
}

pub fn homology(format: Format, file: &Path, coefficients: Coefficients) -> Result<Outcome, CliError> {
    let c = load_tri(file)?;
    let gf2 = matches!(coefficients, Coefficients::Gf2 | Coefficients::Both).then(|| homology_gf2(&c));
    let z = matches!(coefficients, Coefficients::Z | Coefficients::Both).then(|| homology_integer(&c));
    let mut text = String::new();
    if let Some(h) = &gf2 {
        writeln!(text, "GF(2): {h}").unwrap();
    }
    if let Some(h) = &z {
        writeln!(text, "Z: {h}").unwrap();
    }
    emit(format, &text, &HomologyOut { gf2, z });
    Ok(Outcome::Success)
}

pub fn quotient(format: Format, file: &Path, action: &Path, dest: &Dest) -> Result<Outcome, CliError> {
    let c = load_tri(file)?;
    let a = load_action(action)?;
    let q = quotient_by_action(&c, &a)?;
    let verdict = recognize(&q.complex);
    let mut notes = vec![format!("orbit space verdict: {verdict}")];
    for (x, y) in &q.summary().folded_edges {
        notes.push(format!("folded edge {x} {y}"));
    }
    deliver(format, "quotient", &q.complex, None, &notes, None, dest)?;
    Ok(Outcome::Success)
}

#[derive(Serialize)]
struct IsoOut {
    isomorphic: bool,
    map: Option<Vec<(VertexLabel, VertexLabel)>>,
}

pub fn iso(format: Format, a: &Path, b: &Path) -> Result<Outcome, CliError> {
    let ca = load_tri(a)?;
    let cb = load_tri(b)?;
    let map = find_iso(&ca, &cb).map(|m| m.into_iter().collect::<Vec<_>>());
    let text = match &map {
        Some(m) => {
            let pairs: Vec<String> = m.iter().map(|(x, y)| format!("{x}->{y}")).collect();
            format!("isomorphic\n{}\n", pairs.join(" "))
        }
        None => "not isomorphic\n".to_string(),
    };
    emit(
        format,
        &text,
        &IsoOut {
            isomorphic: map.is_some(),
            map,
        },
    );
    Ok(Outcome::Success)
}

fn budget(b: &BudgetArgs) -> SearchBudget {
    SearchBudget {
        node_limit: b.node_limit,
        time_limit: Duration::from_secs(b.time_limit),
        ..SearchBudget::default()
    }
}

fn status_text(s: &SearchStatus) -> String {
    match s {
        SearchStatus::Complete => "complete".into(),
        SearchStatus::Inconclusive { reason } => format!("INCONCLUSIVE: {reason}"),
    }
}

#[derive(Serialize)]
struct SpheresOut {
    census: equitri_core::search::SphereCensus,
    spheres: Vec<Vec<Vec<VertexLabel>>>,
}

pub fn enumerate_spheres(format: Format, v: usize, b: &BudgetArgs) -> Result<Outcome, CliError> {
    let e = enumerate_2spheres(v, &budget(b))?;
    let census = e.census();
    let mut text = format!(
        "{} triangulated 2-spheres on {v} vertices ({} nodes, {})\n",
        census.count,
        census.nodes,
        status_text(&census.status)
    );
    let mut spheres = Vec::new();
    for s in &e.spheres {
        let facets: Vec<Vec<VertexLabel>> = s
            .facets()
            .iter()
            .map(|f| f.iter().map(|&x| s.label(x).clone()).collect())
            .collect();
        let words: Vec<String> = facets
            .iter()
            .map(|f| f.iter().map(VertexLabel::as_str).collect::<String>())
            .collect();
        writeln!(text, "{}", words.join(" ")).unwrap();
        spheres.push(facets);
    }
    let complete = census.status.is_complete();
    emit(format, &text, &SpheresOut { census, spheres });
    Ok(if complete { Outcome::Success } else { Outcome::Inconclusive })
}

pub fn lemma6(format: Format, b: &BudgetArgs) -> Result<Outcome, CliError> {
    let r = lemma6_combinatorial_check(&budget(b))?;
    let mut text = format!("{} 8-vertex 2-spheres ({})\n", r.spheres, status_text(&r.status));
    for s in &r.scans {
        let shapes: Vec<String> = s
            .rank3_classes
            .iter()
            .map(|c| format!("[{}]", join(&c.orbit_sizes)))
            .collect();
        writeln!(
            text,
            "sphere {}: |Aut| {}, rank-3 subgroups with orbit sizes {}",
            s.index,
            s.automorphism_group_order,
            if shapes.is_empty() { "none".into() } else { shapes.join(" ") }
        )
        .unwrap();
    }
    writeln!(text, "single orbit of size 8: {} spheres", r.counterexamples.len()).unwrap();
    writeln!(text, "cross-check: {}", r.degree_sum_argument).unwrap();
    writeln!(text, "note: {}", r.note).unwrap();
    let outcome = if !r.status.is_complete() {
        Outcome::Inconclusive
    } else if r.counterexamples.is_empty() {
        Outcome::Success
    } else {
        Outcome::Mismatch
    };
    emit(format, &text, &r);
    Ok(outcome)
}

pub fn report(format: Format, max_n: usize, dest: &Dest) -> Result<Outcome, CliError> {
    let opts = PipelineOptions {
        max_n,
        max_quotient_n: max_n.min(4),
        ..PipelineOptions::default()
    };
    let r = run_pipeline(&opts)?;
    let body = render(format, &r.to_text(), &r);
    match &dest.out {
        Some(out) => {
            write_files(&[(out.clone(), body)], dest.force)?;
            println!("wrote {}", out.display());
        }
        None => print!("{body}"),
    }
    Ok(Outcome::Success)
}
