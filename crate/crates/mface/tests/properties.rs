//! Cross-cutting invariants checked over families of generated complexes.

use mface::bounds::upper_bound_reports;
use mface::complex::{ball_decomposition, SimplicialComplex, VertexSet};
use mface::family::{family_seed_p042, family_seed_qk};
use mface::gale::build_qk;
use mface::generators::{
    choose, cross_polytope, cyclic_boundary, gs8, octahedron, p042, realize_2sphere, simplex_boundary,
    stack_on_facet,
};
use mface::homology::{betti, verify_sphere, Field, VerifyLevel};
use mface::num::pseudopower_upper;
use mface::profile::{dehn_sommerville_check, face_profile, h_to_f, f_to_h, sphere_stacked_degree};
use mface::transforms::{delta_sequence, gamma_sphere_from, sew, stacked_sewing_ball};

fn sample_spheres() -> Vec<SimplicialComplex> {
    let mut out = vec![
        octahedron(),
        cross_polytope(4),
        simplex_boundary(4, &[1, 2, 3, 4, 5]),
        gs8(),
        p042(),
        cyclic_boundary(3, 7).unwrap(),
        cyclic_boundary(4, 8).unwrap(),
        cyclic_boundary(5, 9).unwrap(),
        realize_2sphere(9, 3).unwrap(),
        realize_2sphere(8, 4).unwrap(),
        build_qk(3).unwrap().sphere,
    ];
    out.extend(delta_sequence(9).unwrap());
    out
}

#[test]
fn f_h_round_trip_everywhere() {
    for sphere in sample_spheres() {
        let p = face_profile(&sphere);
        assert_eq!(h_to_f(&f_to_h(&p.f, p.d), p.d), p.f);
    }
}

#[test]
fn missing_faces_reconstruct_every_sample() {
    for sphere in sample_spheres() {
        let rebuilt =
            SimplicialComplex::from_missing_faces(sphere.vertices(), &sphere.missing_faces()).unwrap();
        assert_eq!(rebuilt, sphere);
    }
}

#[test]
fn spheres_satisfy_bounds_and_palindromy() {
    for sphere in sample_spheres() {
        let p = face_profile(&sphere);
        assert!(dehn_sommerville_check(&p));
        for report in upper_bound_reports(&p).unwrap() {
            assert!(report.satisfied, "{}", report.name);
        }
    }
}

#[test]
fn betti_fields_agree_on_samples() {
    for sphere in sample_spheres() {
        if sphere.vertex_count() <= 9 {
            assert_eq!(betti(&sphere, Field::Gf2), betti(&sphere, Field::Rational));
        }
    }
}

#[test]
fn neighborly_sphere_m_pattern() {
    // For a k-neighborly (d-1)-sphere with n >= d+2 vertices, the m-vector
    // vanishes off the middle band, with closed-form middle values.
    let mut cases: Vec<(SimplicialComplex, usize)> = vec![(gs8(), 2), (p042(), 2)];
    for n in 8..=11 {
        cases.push((cyclic_boundary(4, n).unwrap(), 2));
        cases.push((cyclic_boundary(5, n).unwrap(), 2));
    }
    for n in 9..=11 {
        cases.push((cyclic_boundary(6, n).unwrap(), 3));
    }
    cases.push((build_qk(3).unwrap().sphere, 3));
    for (sphere, k) in cases {
        let p = face_profile(&sphere);
        assert!(p.neighborliness >= k);
        let d = p.d;
        let n = p.n;
        for i in 1..k {
            assert_eq!(p.m_at(i), 0, "m_{i} of a {k}-neighborly sphere");
        }
        for i in d - k + 1..=d {
            assert_eq!(p.m_at(i), 0, "m_{i} above the band");
        }
        if d == 2 * k {
            assert_eq!(
                p.m_at(k),
                choose(n - k - 1, k + 1) + choose(n - k - 2, k),
                "even-dimension middle value, n = {n}, d = {d}"
            );
        }
        if d == 2 * k + 1 {
            assert_eq!(p.m_at(k), choose(n - k - 2, k + 1), "odd-dimension middle value");
            assert!(p.m_at(k + 1) <= choose(n - k - 3, k));
        }
    }
}

#[test]
fn stacked_sphere_m_pattern() {
    // Iterated stacking over a simplex boundary: m_1 = g1 up-shadow,
    // m_{d-1} = g1, everything between is zero.
    for d in [3usize, 4, 5] {
        let labels: Vec<u32> = (1..=d as u32 + 1).collect();
        let mut sphere = simplex_boundary(d, &labels);
        for apex in d as u32 + 2..=d as u32 + 5 {
            let facet = sphere.facets()[0];
            sphere = stack_on_facet(&sphere, facet, apex).unwrap();
            let p = face_profile(&sphere);
            let g1 = p.n as i128 - d as i128 - 1;
            assert_eq!(p.m_at(1), pseudopower_upper(g1, 1));
            assert_eq!(p.m_at(d - 1), g1);
            for i in 2..=d - 2 {
                assert_eq!(p.m_at(i), 0);
            }
            assert_eq!(sphere_stacked_degree(&p).unwrap(), Some(1), "d = {d}");
        }
    }
}

#[test]
fn flip_and_sew_outputs_verify_full() {
    let ladder = delta_sequence(9).unwrap();
    for member in &ladder {
        assert!(verify_sphere(member, VerifyLevel::Full).is_ok());
    }
    let gamma = gamma_sphere_from(&ladder[0], 9, 1, 3).unwrap();
    assert!(verify_sphere(&gamma, VerifyLevel::Full).is_ok());
}

#[test]
fn sew_then_link_returns_ball_boundary() {
    let ladder = delta_sequence(10).unwrap();
    let ball = stacked_sewing_ball(10, 5).unwrap();
    let sewn = sew(&ladder[2], &ball, 11).unwrap();
    let link = sewn.link(VertexSet::singleton(11)).unwrap();
    assert_eq!(link, ball_decomposition(&ball).unwrap().boundary);
}

#[test]
fn ladder_members_pairwise_distinct() {
    let ladder = delta_sequence(10).unwrap();
    for (i, a) in ladder.iter().enumerate() {
        for b in ladder.iter().skip(i + 1) {
            assert_ne!(a.m_vector(), b.m_vector());
        }
    }
}

#[test]
fn replacing_ball_by_cone_keeps_every_ridge_doubled() {
    // Sewing over any decomposable ball keeps the pseudomanifold property.
    let sphere = cyclic_boundary(4, 8).unwrap();
    let star: Vec<VertexSet> = sphere
        .facets()
        .iter()
        .copied()
        .filter(|f| f.contains(1))
        .collect();
    let ball = SimplicialComplex::from_facets(star).unwrap();
    // Cannot reuse label 1: the cone over the boundary uses a fresh vertex.
    let sewn = sew(&sphere, &ball, 99).unwrap();
    for (_, count) in sewn.ridge_incidences() {
        assert_eq!(count, 2);
    }
}

#[test]
fn diagram_neighborliness_matches_face_profile() {
    for k in [1usize, 3, 5] {
        let qk = build_qk(k).unwrap();
        let from_diagram = qk.diagram.neighborliness();
        let from_profile = face_profile(&qk.sphere).neighborliness;
        assert_eq!(from_diagram, from_profile + 1, "k = {k}");
    }
}

#[test]
fn certificates_stay_inconclusive_on_polytopal_constructions() {
    use mface::certify::{nonpolytopality_certificate, Verdict};
    // Everything the library constructs as a polytope boundary must never
    // be certified non-polytopal.
    let mut polytopal: Vec<SimplicialComplex> = vec![p042(), build_qk(3).unwrap().sphere];
    for n in 8..=11 {
        polytopal.push(cyclic_boundary(4, n).unwrap());
    }
    for n in 9..=11 {
        polytopal.push(cyclic_boundary(6, n).unwrap());
    }
    let mut state = family_seed_p042().unwrap();
    for _ in 0..2 {
        state = state.step().unwrap();
        polytopal.push(state.sphere().clone());
    }
    for sphere in polytopal {
        let cert = nonpolytopality_certificate(&sphere, None).unwrap();
        assert_eq!(cert.verdict, Verdict::Inconclusive, "{sphere:?}");
    }
}

#[test]
fn single_missing_edge_rule_passes_on_a_bipyramid() {
    use mface::certify::{nonpolytopality_certificate, Verdict};
    use mface::generators::simplex_boundary;
    // S^0 * (boundary of a tetrahedron): a polytopal 3-sphere with exactly
    // one missing edge; the endpoint links carry the forced count.
    let poles = SimplicialComplex::from_facet_labels(&[&[1], &[2]]).unwrap();
    let sphere = poles.join(&simplex_boundary(3, &[3, 4, 5, 6])).unwrap();
    assert_eq!(sphere.m_vector(), vec![1, 0, 1, 0]);
    let cert = nonpolytopality_certificate(&sphere, None).unwrap();
    assert_eq!(cert.verdict, Verdict::Inconclusive);
}

#[test]
fn flag_eulerian_complexes_sit_below_the_edge_cap() {
    use mface::bounds::flag_edge_cap;
    use mface::num::rat;
    use mface::generators::polygon;
    // Double polygon joins are flag 3-spheres; their edge counts stay
    // strictly below the cap.
    for p in 4..=8usize {
        for q in 4..=8usize {
            let ring_a: Vec<u32> = (1..=p as u32).collect();
            let ring_b: Vec<u32> = (p as u32 + 1..=(p + q) as u32).collect();
            let join = polygon(&ring_a).join(&polygon(&ring_b)).unwrap();
            let profile = face_profile(&join);
            assert!(profile.is_flag && profile.is_eulerian);
            let cap = flag_edge_cap(4, profile.n).unwrap();
            assert!(rat(profile.f[2], 1) < cap, "p = {p}, q = {q}");
        }
    }
}

#[test]
fn cyclic_face_counts_match_generated_complexes() {
    use mface::profile::cyclic_face_count;
    for d in 3..=6usize {
        for n in (d + 1)..=10 {
            let generated = cyclic_boundary(d, n).unwrap().face_counts();
            for k in -1..d as i64 {
                assert_eq!(
                    cyclic_face_count(d, n, k),
                    generated[(k + 1) as usize] as i128,
                    "d = {d}, n = {n}, k = {k}"
                );
            }
        }
    }
}

#[test]
fn even_pair_ball_boundary_is_the_smaller_cyclic_sphere() {
    use mface::generators::ball_b;
    // The even-pair ball in ambient dimension 4 has the boundary of the
    // cyclic 3-polytope on its label range [2, n-1].
    for n in 7..=10u32 {
        let ball = ball_b(4, 2, n - 1).unwrap();
        let boundary = ball_decomposition(&ball).unwrap().boundary;
        let smaller = cyclic_boundary(3, n as usize - 2)
            .unwrap()
            .relabel(&|v| v + 1)
            .unwrap();
        assert_eq!(boundary, smaller, "n = {n}");
    }
}

#[test]
fn edge_join_ball_is_2_stacked() {
    use mface::generators::{ball_b, full_simplex};
    for n in 8..=10u32 {
        let ball = full_simplex(&[1, n]).join(&ball_b(4, 2, n - 1).unwrap()).unwrap();
        let bd = ball_decomposition(&ball).unwrap();
        assert!(bd.is_i_stacked(2), "n = {n}");
        assert!(!bd.is_i_stacked(1), "n = {n}");
    }
}

#[test]
fn sewing_ball_stackedness_by_parameter() {
    // The k = 2 fan has only top-dimensional minimal interior faces; the
    // larger fans mix in triangles, so only the monotone predicate holds.
    let b2 = ball_decomposition(&stacked_sewing_ball(9, 2).unwrap()).unwrap();
    assert!(b2.is_exactly_i_stacked(1));
    assert!(b2.is_i_stacked(2));
    let b4 = ball_decomposition(&stacked_sewing_ball(9, 4).unwrap()).unwrap();
    assert!(b4.is_i_stacked(2));
    assert!(!b4.is_i_stacked(1));
}

#[test]
fn values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<SimplicialComplex>();
    assert_send_sync::<VertexSet>();
    assert_send_sync::<mface::FaceProfile>();
    assert_send_sync::<mface::gale::GaleCircle>();
    // Pure functions over immutable values: fan out link computations.
    let sphere = cyclic_boundary(5, 10).unwrap();
    let handles: Vec<_> = sphere
        .vertices()
        .iter()
        .map(|v| {
            let sphere = sphere.clone();
            std::thread::spawn(move || sphere.link(VertexSet::singleton(v)).unwrap().facets().len())
        })
        .collect();
    for handle in handles {
        assert!(handle.join().unwrap() > 0);
    }
}

#[test]
fn family_states_keep_lemma_hypotheses() {
    // Two steps of each engine; the step function itself errors if any
    // hypothesis breaks, so reaching the end is the assertion.
    let mut state = family_seed_qk(3).unwrap();
    for _ in 0..2 {
        state = state.step().unwrap();
    }
    assert_eq!(state.vertex_count(), 12);
    let mut state = family_seed_p042().unwrap();
    for _ in 0..2 {
        state = state.step().unwrap();
    }
    assert_eq!(state.vertex_count(), 11);
}

#[test]
fn family_step_at_k5_runs_the_full_ball_tower() {
    // One step from the 14-vertex seed walks a five-level tower of balls,
    // with every exact-stackedness and skeleton-inducedness clause checked.
    let next = family_seed_qk(5).unwrap().step().unwrap();
    assert_eq!(next.vertex_count(), 15);
    let p = face_profile(next.sphere());
    assert_eq!(p.neighborliness, 5);
    assert!(next.sphere().missing_faces().iter().all(|f| f.len() == 6));
}
