//! Acceptance criteria 1 to 9, one PASS/FAIL line each. Every check is
//! exact. The process exits nonzero if any criterion fails.

use std::fs;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use equitri_core::catalog;
use equitri_core::complex::simplex_boundary;
use equitri_core::constructions::{
    build_d3_blocks, build_reduced, build_sigma, build_yn, lift_to_cross_polytope, Constructed,
};
use equitri_core::group::{check_equivariance, find_z2n_subactions, quotient_by_action, GroupAction};
use equitri_core::homology::{homology_gf2, homology_integer};
use equitri_core::io::{parse_action, parse_tri, to_action_string, to_tri_string};
use equitri_core::report::{run_pipeline, PipelineOptions};
use equitri_core::search::{
    brute_force_2sphere_count, enumerate_2spheres, is_isomorphic, lemma6_combinatorial_check,
    SearchBudget,
};
use equitri_core::verify::{
    check_closed_pseudomanifold, lemma_report, recognize, LemmaStatus, Verdict,
};
use equitri_core::{SimplicialComplex, VertexLabel};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

/// `(name, complex text, action text)` for every fixture in the manifest.
fn fixtures() -> Vec<(String, String, Option<String>)> {
    let dir = fixtures_dir();
    fs::read_to_string(dir.join("MANIFEST"))
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let name = l.split_whitespace().next().unwrap().to_string();
            let tri = fs::read_to_string(dir.join(format!("{name}.tri"))).unwrap();
            let act = fs::read_to_string(dir.join(format!("{name}.act"))).ok();
            (name, tri, act)
        })
        .collect()
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 2..=5 {
        let s = build_sigma(n).unwrap();
        let c = &s.complex;
        let f0 = c.num_vertices();
        let equivariant = check_equivariance(c, &s.action).unwrap().equivariant;
        let closed = check_closed_pseudomanifold(c);
        let gf2 = homology_gf2(c).betti;
        let z = homology_integer(c);
        let torsion = z.torsion_u64(1);
        let ok = f0 == (n + 1) * (n + 1)
            && equivariant
            && closed
            && gf2 == vec![1; n + 1]
            && torsion == [2];
        if !ok {
            failures.push(format!(
                "n={n}: f0 {f0}, equivariant {equivariant}, closed {closed}, GF(2) betti {gf2:?}, H1 torsion {torsion:?}"
            ));
        }
    }
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(30);
    if !fast {
        failures.push(format!("runtime {elapsed:?}"));
    }
    if failures.is_empty() {
        outcome(true, "n=2..5: (n+1)^2 vertices, equivariant, closed, GF(2) betti all ones, H1 torsion [2], under 30 s")
    } else {
        outcome(false, failures.join("; "))
    }
}

fn criterion2() -> Outcome {
    let mut failures = Vec::new();
    for n in 2..=5 {
        let r = build_reduced(n).unwrap();
        let f0 = r.complex.num_vertices();
        let fixed = r.action.bind(&r.complex).unwrap().fixed_points().len();
        if f0 != n * (n + 1) || fixed != 0 {
            failures.push(format!("n={n}: f0 {f0}, {fixed} fixed points"));
        }
    }
    let rp2 = catalog::load("RP2_6").unwrap();
    if !is_isomorphic(&build_reduced(2).unwrap().complex, &rp2.complex) {
        failures.push("reduced(2) not isomorphic to RP2_6".into());
    }
    if failures.is_empty() {
        outcome(true, "n=2..5: n(n+1) vertices, no fixed points; reduced(2) isomorphic to RP2_6")
    } else {
        outcome(false, failures.join("; "))
    }
}

fn criterion3() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 1..=4 {
        let yn = build_yn(n).unwrap();
        let mut cases = vec![(build_sigma(n).unwrap(), true)];
        if n >= 2 {
            cases.push((build_reduced(n).unwrap(), false));
        }
        for (c, against_yn) in cases {
            checked += 1;
            match quotient_by_action(&c.complex, &c.action) {
                Err(e) => failures.push(format!("{}: {e}", c.name)),
                Ok(q) => {
                    let v = recognize(&q.complex);
                    if v != Verdict::Ball(n) {
                        failures.push(format!("{}: orbit space {v}", c.name));
                    }
                    if against_yn && !is_isomorphic(&q.complex, &yn.complex) {
                        failures.push(format!("{}: orbit space not isomorphic to Y^{n}", c.name));
                    }
                }
            }
        }
    }
    if failures.is_empty() {
        outcome(true, format!("{checked} orbit spaces are simplicial balls with sphere boundary; Sigma orbit spaces isomorphic to Y^n"))
    } else {
        outcome(false, failures.join("; "))
    }
}

fn criterion4() -> Outcome {
    let mut failures = Vec::new();
    let counts = |id: &str| {
        let e = catalog::load(id).unwrap();
        (e.complex.num_vertices(), e.complex.num_facets())
    };
    for (id, want) in [("RP3_14", (14, 52)), ("RP3_11A", (11, 40)), ("RP3_11B", (11, 40))] {
        let got = counts(id);
        if got != want {
            failures.push(format!("{id}: {got:?}"));
        }
    }
    let rp4 = counts("RP4_17");
    if rp4.0 != 17 {
        failures.push(format!("RP4_17 expands to {} vertices", rp4.0));
    }
    for e in catalog::all().unwrap() {
        let v = recognize(&e.complex);
        if v != e.target {
            let z = homology_integer(&e.complex);
            failures.push(format!(
                "{} recognizes as {v}, not {} (closed pseudomanifold {}, H_* {z})",
                e.id,
                e.target,
                check_closed_pseudomanifold(&e.complex)
            ));
        }
    }
    if failures.is_empty() {
        outcome(true, "counts exact and every entry recognizes as its projective space")
    } else {
        outcome(false, failures.join("; "))
    }
}

fn criterion5() -> Outcome {
    let start = Instant::now();
    let a = catalog::load("RP3_11A").unwrap().complex;
    let b = catalog::load("RP3_11B").unwrap().complex;
    let mut failures = Vec::new();
    if is_isomorphic(&a, &b) {
        failures.push("RP3_11A and RP3_11B are isomorphic".to_string());
    }
    for (id, c) in [("RP3_11A", &a), ("RP3_11B", &b)] {
        let s = find_z2n_subactions(c, 3);
        if !s.admissible.iter().any(|x| x.fixed_points.len() == 1) {
            failures.push(format!("{id}: no admissible Z_2^3 subaction with one fixed vertex"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        failures.push(format!("runtime {elapsed:?}"));
    }
    if failures.is_empty() {
        outcome(true, "not isomorphic; each has a Z_2^3 subaction with one fixed vertex")
    } else {
        outcome(false, failures.join("; "))
    }
}

fn lemma_failures(name: &str, c: &SimplicialComplex, a: &GroupAction, with_positions: Option<&Constructed>) -> Vec<String> {
    let r = lemma_report(c, a, with_positions.map(|x| &x.positions)).unwrap();
    let mut out = Vec::new();
    for (label, o) in [("parity", &r.lemma1_parity), ("sphere bound", &r.lemma3_bound)] {
        if o.status == LemmaStatus::Fail {
            out.push(format!("{name}: {label} ({})", o.detail));
        }
    }
    if with_positions.is_some() && r.lemma4_isotropy.status == LemmaStatus::Fail {
        out.push(format!("{name}: isotropy ({})", r.lemma4_isotropy.detail));
    }
    out
}

fn criterion6() -> Outcome {
    let mut failures = Vec::new();
    let mut constructed: Vec<Constructed> = Vec::new();
    for n in 1..=5 {
        let yn = build_yn(n).unwrap();
        if n <= 4 {
            constructed.push(lift_to_cross_polytope(&yn).unwrap());
        }
        constructed.push(yn);
        constructed.push(build_sigma(n).unwrap());
        if n >= 2 {
            constructed.push(build_reduced(n).unwrap());
        }
    }
    constructed.extend(build_d3_blocks().unwrap());
    for c in &constructed {
        failures.extend(lemma_failures(&c.name, &c.complex, &c.action, Some(c)));
    }
    let mut catalog_actions = 0;
    for e in catalog::all().unwrap() {
        let rank = match e.target {
            Verdict::ProjectiveSpace(d) => d,
            _ => unreachable!("catalog targets are projective spaces"),
        };
        let mut actions: Vec<GroupAction> = e.action.iter().cloned().collect();
        actions.extend(find_z2n_subactions(&e.complex, rank).admissible.into_iter().map(|s| s.action));
        for a in &actions {
            catalog_actions += 1;
            failures.extend(lemma_failures(e.id, &e.complex, a, None));
        }
    }
    let budget = SearchBudget::default();
    let counts: Vec<usize> = (4..=6).map(|v| enumerate_2spheres(v, &budget).unwrap().spheres.len()).collect();
    let brute: Vec<usize> = (4..=6).map(|v| brute_force_2sphere_count(v).unwrap()).collect();
    if counts != [1, 1, 2] || counts != brute {
        failures.push(format!("2-sphere counts {counts:?}, brute force {brute:?}"));
    }
    let l6 = lemma6_combinatorial_check(&budget).unwrap();
    if !l6.status.is_complete() || !l6.counterexamples.is_empty() {
        failures.push(format!("lemma6 status {:?}, counterexamples {:?}", l6.status, l6.counterexamples));
    }
    if failures.is_empty() {
        outcome(
            true,
            format!(
                "{} constructed complexes and {catalog_actions} catalog actions pass; {} 8-vertex spheres, none with a single orbit of size 8; counts 1, 1, 2 match brute force",
                constructed.len(),
                l6.spheres
            ),
        )
    } else {
        outcome(false, failures.join("; "))
    }
}

fn criterion7() -> Outcome {
    let mut failures = Vec::new();
    for n in 0..=5 {
        let v = recognize(&simplex_boundary(n + 1));
        if v != Verdict::Sphere(n) {
            failures.push(format!("boundary of the {}-simplex recognizes as {v}", n + 1));
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let suite = fixtures();
    for (name, tri, _) in &suite {
        let c = parse_tri(tri).unwrap();
        let base = recognize(&c);
        let mut ids: Vec<usize> = (0..c.num_vertices()).collect();
        for round in 0..100 {
            ids.shuffle(&mut rng);
            let d = c
                .relabel(|l| {
                    let i = c.vertex_id(l).unwrap() as usize;
                    VertexLabel::new(format!("q{}", ids[i])).unwrap()
                })
                .unwrap();
            let v = recognize(&d);
            if v != base {
                failures.push(format!("{name}: relabeling {round} gives {v}, not {base}"));
                break;
            }
        }
    }
    if failures.is_empty() {
        outcome(
            true,
            format!("boundaries of simplices are S^0..S^5; 100 random relabelings of each of {} fixtures keep their verdicts", suite.len()),
        )
    } else {
        outcome(false, failures.join("; "))
    }
}

fn criterion8() -> Outcome {
    let mut failures = Vec::new();
    let suite = fixtures();
    for (name, tri, act) in &suite {
        let once = to_tri_string(&parse_tri(tri).unwrap());
        let twice = to_tri_string(&parse_tri(&once).unwrap());
        if &once != tri || once != twice {
            failures.push(format!("{name}.tri does not round-trip"));
        }
        if let Some(act) = act {
            let once = to_action_string(&parse_action(act).unwrap());
            if &once != act {
                failures.push(format!("{name}.act does not round-trip"));
            }
        }
    }
    let opts = PipelineOptions::default();
    let render = |r: &equitri_core::report::PipelineReport| format!("{}\n{}", r.to_text(), r.to_json());
    let first = render(&run_pipeline(&opts).unwrap());
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let second = render(&single.install(|| run_pipeline(&opts)).unwrap());
    if first != second {
        failures.push("two pipeline runs differ".into());
    }
    if failures.is_empty() {
        outcome(
            true,
            format!("{} fixtures round-trip byte for byte; two pipeline runs ({} bytes) identical", suite.len(), first.len()),
        )
    } else {
        outcome(false, failures.join("; "))
    }
}

fn criterion9() -> Outcome {
    let lift = lift_to_cross_polytope(&build_yn(3).unwrap()).unwrap();
    let sigma = build_sigma(3).unwrap();
    let lift_vertices = lift.complex.num_vertices();
    let noted = lift.notes.iter().any(|n| n.contains("22 vertices") && n.contains("25"));
    let sigma_vertices = sigma.complex.num_vertices();
    let pass = lift_vertices == 25 && noted && sigma_vertices == 16;
    outcome(
        pass,
        format!("lift has {lift_vertices} vertices, discrepancy note present {noted}, sigma has {sigma_vertices} vertices"),
    )
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 9] = [
        (1, criterion1),
        (2, criterion2),
        (3, criterion3),
        (4, criterion4),
        (5, criterion5),
        (6, criterion6),
        (7, criterion7),
        (8, criterion8),
        (9, criterion9),
    ];
    let mut failed = 0;
    for (k, check) in criteria {
        let o = check();
        println!("criterion {k}: {} {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} of 9 criteria pass", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
