use equitri_core::constructions::{build_d3_blocks, build_reduced, build_sigma, build_yn, OCT_CONE, OCT_DIAG};
use equitri_core::group::{check_equivariance, fixed_points, quotient_by_action};
use equitri_core::homology::homology_gf2;
use equitri_core::search::is_isomorphic;
use equitri_core::verify::{recognize, verify, Verdict};

#[test]
fn yn_is_a_ball() {
    for n in 1..=4 {
        let y = build_yn(n).unwrap();
        assert_eq!(y.complex.num_vertices(), (n + 1) * (n + 2) / 2);
        assert_eq!(recognize(&y.complex), Verdict::Ball(n), "Y^{n}");
    }
}

#[test]
fn sigma_is_projective_space_up_to_the_plane() {
    for n in 1..=2 {
        let s = build_sigma(n).unwrap();
        assert_eq!(s.complex.num_vertices(), (n + 1) * (n + 1));
        assert!(check_equivariance(&s.complex, &s.action).unwrap().equivariant);
        let fixed = fixed_points(&s.complex, &s.action).unwrap();
        assert_eq!(fixed.len(), n + 1);
        let report = verify(&s.complex, Some(&s.action), Some(&s.positions)).unwrap();
        let want = if n == 1 { Verdict::Sphere(1) } else { Verdict::ProjectiveSpace(n) };
        assert_eq!(report.verdict, want, "Σ(RP^{n})");
        assert!(report.equivariance.unwrap().lemmas.all_applicable_pass());
    }
}

// From dimension 3 on, every triangulation of the middle cell has an edge
// v_0j v_kl with disjoint carriers; its reflections through g_k g_l end at
// antipodal boundary points, so two edges of Σ share both endpoints.
#[test]
fn sigma_gluing_defect_is_reported_from_dimension_three() {
    for n in 3..=4 {
        let s = build_sigma(n).unwrap();
        assert_eq!(s.complex.num_vertices(), (n + 1) * (n + 1));
        assert!(check_equivariance(&s.complex, &s.action).unwrap().equivariant);
        let d = s.defect.as_ref().expect("defect detected");
        assert!(d.actual_f_vector[1] < d.expected_f_vector[1]);
        assert_ne!(homology_gf2(&s.complex).betti, vec![1; n + 1]);
    }
    let s3 = build_sigma(3).unwrap();
    let d = s3.defect.unwrap();
    assert_eq!(d.expected_f_vector, vec![16, 80, 128, 64]);
    assert_eq!(d.actual_f_vector, vec![16, 76, 128, 64]);
}

#[test]
fn sigma_quotient_is_yn() {
    for n in 1..=4 {
        let s = build_sigma(n).unwrap();
        let q = quotient_by_action(&s.complex, &s.action).unwrap();
        assert!(is_isomorphic(&q.complex, &build_yn(n).unwrap().complex), "n = {n}");
        assert_eq!(recognize(&q.complex), Verdict::Ball(n));
    }
}

#[test]
fn reduced_family() {
    for n in 2..=4 {
        let r = build_reduced(n).unwrap();
        assert_eq!(r.complex.num_vertices(), n * (n + 1));
        assert!(fixed_points(&r.complex, &r.action).unwrap().is_empty());
        assert_eq!(r.defect.is_some(), n >= 3);
        if n >= 3 {
            continue;
        }
        let report = verify(&r.complex, Some(&r.action), Some(&r.positions)).unwrap();
        assert_eq!(report.verdict, Verdict::ProjectiveSpace(n), "reduced({n})");
        assert!(report.equivariance.unwrap().lemmas.all_applicable_pass());
        let q = quotient_by_action(&r.complex, &r.action).unwrap();
        assert_eq!(recognize(&q.complex), Verdict::Ball(n), "reduced({n}) quotient");
    }
}

#[test]
fn d3_blocks_are_equivariant_balls() {
    for b in build_d3_blocks().unwrap() {
        assert!(b.name == OCT_DIAG || b.name == OCT_CONE);
        assert!(check_equivariance(&b.complex, &b.action).unwrap().equivariant);
        assert_eq!(recognize(&b.complex), Verdict::Ball(3), "{}", b.name);
        let report = verify(&b.complex, Some(&b.action), Some(&b.positions)).unwrap();
        assert!(report.equivariance.unwrap().lemmas.all_applicable_pass(), "{}", b.name);
    }
}
