//! Sphere surgery: bistellar flips, shellings, sewing a vertex over a ball,
//! complements, and the edge-preserving flip ladders that walk the cyclic
//! 5-polytope boundary down through every admissible missing-tetrahedron
//! count.

use std::collections::HashSet;

use crate::complex::{ball_decomposition, SimplicialComplex, VertexSet};
use crate::error::TransformError;
use crate::generators::{ball_b, choose, cyclic_boundary, dk_ball_with, full_simplex, squeezed_ball_c};
use crate::homology::{verify_sphere, VerifyLevel};

/// A bistellar exchange: the star of `a` (which must look like the join of
/// the full simplex on `a` with the boundary of the simplex on `b`) is
/// replaced by the mirrored join.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipMove {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl FlipMove {
    pub fn new(a: VertexSet, b: VertexSet) -> FlipMove {
        FlipMove { a, b }
    }

    /// The move undoing this one.
    pub fn inverse(&self) -> FlipMove {
        FlipMove { a: self.b, b: self.a }
    }

    pub fn j(&self) -> usize {
        self.a.len()
    }
}

/// Applies a bistellar flip. Preconditions checked exactly: the two sides
/// partition `d + 1` vertices, the induced subcomplex on their union is the
/// required join, and the star of `a` consists of the expected facets. The
/// output is verified to still be a quick-level sphere.
pub fn bistellar_flip(complex: &SimplicialComplex, mv: &FlipMove) -> Result<SimplicialComplex, TransformError> {
    let d = (complex.dim() + 1) as usize;
    let overlap = mv.a.intersection(&mv.b);
    if !overlap.is_empty() {
        return Err(TransformError::FlipOverlap(overlap));
    }
    if mv.a.is_empty() || mv.b.is_empty() || mv.a.len() + mv.b.len() != d + 1 {
        return Err(TransformError::BadFlipSizes { a: mv.a.len(), b: mv.b.len(), d });
    }
    let w = mv.a.union(&mv.b);
    let expected: Vec<VertexSet> = mv.b.iter().map(|bv| w.remove(bv)).collect();
    let expected_complex = SimplicialComplex::generate(expected.clone());
    if complex.induced(w) != expected_complex {
        return Err(TransformError::NotInduced(w));
    }
    let star: Vec<VertexSet> = complex
        .facets()
        .iter()
        .copied()
        .filter(|f| mv.a.is_subset(f))
        .collect();
    let expected_set: HashSet<VertexSet> = expected.iter().copied().collect();
    if star.len() != expected_set.len() || !star.iter().all(|f| expected_set.contains(f)) {
        return Err(TransformError::NotInduced(w));
    }
    let facets: Vec<VertexSet> = complex
        .facets()
        .iter()
        .copied()
        .filter(|f| !expected_set.contains(f))
        .chain(mv.a.iter().map(|av| w.remove(av)))
        .collect();
    let out = SimplicialComplex::from_facets(facets)?;
    verify_sphere(&out, VerifyLevel::Quick).map_err(|_| TransformError::FlipBroken)?;
    Ok(out)
}

/// An ordered facet list together with its restriction faces: position `i`
/// holds the unique minimal face of facet `i` not covered by the earlier
/// facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingRecord {
    pub facets: Vec<VertexSet>,
    pub restriction_faces: Vec<VertexSet>,
}

/// Checks that the given facet order is a shelling and computes the
/// restriction faces. Errors when the intersection with the earlier facets
/// is not pure of codimension one at some step.
pub fn verify_shelling(facets_in_order: &[VertexSet]) -> Result<ShellingRecord, TransformError> {
    if facets_in_order.is_empty() {
        return Err(TransformError::Complex(crate::error::ComplexError::Empty));
    }
    let size = facets_in_order[0].len();
    if facets_in_order.iter().any(|f| f.len() != size) {
        return Err(TransformError::ShellingNotPure);
    }
    let mut restriction = vec![VertexSet::EMPTY];
    for i in 1..facets_in_order.len() {
        let facet = facets_in_order[i];
        let earlier = &facets_in_order[..i];
        let r = VertexSet::new(
            facet
                .iter()
                .filter(|&v| earlier.iter().any(|g| facet.remove(v).is_subset(g))),
        );
        // Pure codimension one: every earlier intersection must avoid some
        // element of r; in particular r may not be empty.
        if earlier.iter().any(|g| r.is_subset(g)) {
            return Err(TransformError::ShellingStep { position: i, facet });
        }
        restriction.push(r);
    }
    Ok(ShellingRecord { facets: facets_in_order.to_vec(), restriction_faces: restriction })
}

fn neighborliness_degree(complex: &SimplicialComplex) -> usize {
    let counts = complex.face_counts();
    let n = complex.vertex_count();
    let mut deg = 0;
    for i in 1..counts.len() {
        if counts[i] as i128 == choose(n, i) {
            deg = i;
        } else {
            break;
        }
    }
    deg
}

/// Replaces the ball `b` inside the sphere `k` by the cone over its boundary
/// with the fresh apex `new_vertex`. When the ball carries the neighborliness
/// and stackedness hypotheses that make sewing preserve neighborliness, the
/// output is additionally verified neighborly.
pub fn sew(
    sphere: &SimplicialComplex,
    ball: &SimplicialComplex,
    new_vertex: u32,
) -> Result<SimplicialComplex, TransformError> {
    if ball.dim() != sphere.dim() {
        return Err(TransformError::BallDimension { ball: ball.dim(), host: sphere.dim() });
    }
    let host: HashSet<VertexSet> = sphere.facets().iter().copied().collect();
    if let Some(missing) = ball.facets().iter().find(|f| !host.contains(f)) {
        return Err(TransformError::BallNotInHost(*missing));
    }
    if new_vertex == 0 || new_vertex > crate::complex::MAX_LABEL {
        return Err(TransformError::Complex(crate::error::ComplexError::LabelOutOfRange(new_vertex)));
    }
    if sphere.vertices().contains(new_vertex) {
        return Err(TransformError::VertexInUse(new_vertex));
    }
    let decomposition = ball_decomposition(ball)?;
    let ball_facets: HashSet<VertexSet> = ball.facets().iter().copied().collect();
    let facets: Vec<VertexSet> = sphere
        .facets()
        .iter()
        .copied()
        .filter(|f| !ball_facets.contains(f))
        .chain(decomposition.boundary.facets().iter().map(|r| r.insert(new_vertex)))
        .collect();
    let out = SimplicialComplex::from_facets(facets)?;
    verify_sphere(&out, VerifyLevel::Quick).map_err(|e| TransformError::SewNotSphere(e.to_string()))?;
    let half = ((sphere.dim() + 1) / 2) as usize;
    if half >= 1
        && ball.vertices() == sphere.vertices()
        && neighborliness_degree(ball) >= half - 1
        && decomposition.is_i_stacked(half as i32 - 1)
        && neighborliness_degree(&out) < half
    {
        return Err(TransformError::SewNotNeighborly(half));
    }
    Ok(out)
}

/// The subcomplex generated by the facets of `host` that are not facets of
/// `part`; both must be pure of the same dimension.
pub fn complement_ball(
    host: &SimplicialComplex,
    part: &SimplicialComplex,
) -> Result<SimplicialComplex, TransformError> {
    if part.dim() != host.dim() {
        return Err(TransformError::BallDimension { ball: part.dim(), host: host.dim() });
    }
    let host_facets: HashSet<VertexSet> = host.facets().iter().copied().collect();
    if let Some(missing) = part.facets().iter().find(|f| !host_facets.contains(f)) {
        return Err(TransformError::BallNotInHost(*missing));
    }
    let part_facets: HashSet<VertexSet> = part.facets().iter().copied().collect();
    let rest: Vec<VertexSet> = host
        .facets()
        .iter()
        .copied()
        .filter(|f| !part_facets.contains(f))
        .collect();
    if rest.is_empty() {
        return Err(TransformError::EmptyComplement);
    }
    Ok(SimplicialComplex::from_facets(rest)?)
}

fn missing_of_size(complex: &SimplicialComplex, size: usize) -> Vec<VertexSet> {
    complex
        .missing_faces()
        .into_iter()
        .filter(|f| f.len() == size)
        .collect()
}

/// The flip ladder over the cyclic 5-polytope boundary on `n >= 8`
/// vertices: entry `i - 1` holds the `i`-th sphere, a neighborly 4-sphere
/// whose missing tetrahedra number `C(n-4-i, 2)`. Each step flips the star
/// of `{1, i+1, n}` and is re-verified: quick sphere check, neighborliness,
/// the missing-face recurrence, and the closed-form count.
pub fn delta_sequence(n: usize) -> Result<Vec<SimplicialComplex>, TransformError> {
    if n < 8 {
        return Err(TransformError::DeltaTooSmall(n));
    }
    let mut out = vec![cyclic_boundary(5, n)?];
    let mut missing_prev = missing_of_size(&out[0], 4);
    for i in 2..=n - 6 {
        let prev = out.last().unwrap();
        let mv = FlipMove::new(
            VertexSet::new([1, i as u32 + 1, n as u32]),
            VertexSet::new([2, i as u32 + 2, n as u32 - 1]),
        );
        let next = bistellar_flip(prev, &mv)
            .map_err(|e| TransformError::DeltaStep { index: i, reason: e.to_string() })?;
        let step_error = |reason: &str| TransformError::DeltaStep { index: i, reason: reason.to_string() };
        if neighborliness_degree(&next) < 2 {
            return Err(step_error("lost neighborliness"));
        }
        let missing_now = missing_of_size(&next, 4);
        let removed: Vec<VertexSet> = (i as u32 + 3..=n as u32 - 2)
            .map(|j| VertexSet::new([1, i as u32 + 1, j, n as u32]))
            .collect();
        let expected: Vec<VertexSet> = {
            let removed_set: HashSet<VertexSet> = removed.iter().copied().collect();
            missing_prev.iter().copied().filter(|f| !removed_set.contains(f)).collect()
        };
        if missing_now != expected {
            return Err(step_error("missing-face recurrence violated"));
        }
        if missing_now.len() as i128 != choose(n - 4 - i, 2) {
            return Err(step_error("missing-face count off the closed form"));
        }
        missing_prev = missing_now;
        out.push(next);
    }
    Ok(out)
}

/// The two extra flips past the neighborly ladder: the first yields a sphere
/// with a single missing tetrahedron `{2, n-3, n-2, n-1}`, the second
/// removes the edge `{1, n}` and so leaves the neighborly regime. Both facts
/// are re-verified.
pub fn delta_tail(n: usize) -> Result<(SimplicialComplex, SimplicialComplex), TransformError> {
    let ladder = delta_sequence(n)?;
    let last = ladder.last().unwrap();
    let nn = n as u32;
    let mv = FlipMove::new(
        VertexSet::new([1, nn - 4, nn]),
        VertexSet::new([2, nn - 3, nn - 1]),
    );
    let penultimate = bistellar_flip(last, &mv)
        .map_err(|e| TransformError::DeltaStep { index: n - 5, reason: e.to_string() })?;
    let missing = missing_of_size(&penultimate, 4);
    if missing != vec![VertexSet::new([2, nn - 3, nn - 2, nn - 1])] {
        return Err(TransformError::DeltaStep {
            index: n - 5,
            reason: "tail sphere should have the single missing tetrahedron {2,n-3,n-2,n-1}".into(),
        });
    }
    let mv = FlipMove::new(
        VertexSet::new([1, nn]),
        VertexSet::new([2, nn - 3, nn - 2, nn - 1]),
    );
    let final_sphere = bistellar_flip(&penultimate, &mv)
        .map_err(|e| TransformError::DeltaStep { index: n - 4, reason: e.to_string() })?;
    if neighborliness_degree(&final_sphere) >= 2 {
        return Err(TransformError::DeltaStep {
            index: n - 4,
            reason: "the last flip should remove the edge {1,n}".into(),
        });
    }
    Ok((penultimate, final_sphere))
}

/// The higher-dimensional flip ladder over the cyclic `(2k+1)`-polytope
/// boundary, `k >= 3`. Member `i` flips the star of
/// `{1, 3, ..., 2k-3} ∪ {2k-3+i, n}`; the opposite flip side is derived from
/// the link at run time. Each member is verified neighborly, its count of
/// missing `(k+1)`-faces matches `C(n-k-3, k) - Σ_{ℓ<i} (n-2k-1-ℓ)`, and it
/// equals the boundary of the matching ladder ball facet-for-facet.
pub fn delta_sequence_2k(k: usize, n: usize) -> Result<Vec<SimplicialComplex>, TransformError> {
    if k < 3 {
        return Err(TransformError::LadderNeedsK3(k));
    }
    if n < 2 * k + 4 {
        return Err(TransformError::DeltaTooSmall(n));
    }
    let mut out = vec![cyclic_boundary(2 * k + 1, n)?];
    for i in 2..=n - 2 * k - 2 {
        let prev = out.last().unwrap();
        let mut a = VertexSet::new((0..k - 1).map(|t| 2 * t as u32 + 1));
        a = a.insert((2 * k - 3 + i) as u32).insert(n as u32);
        let link = prev
            .link(a)
            .map_err(|e| TransformError::DeltaStep { index: i, reason: e.to_string() })?;
        let b = link.vertices();
        let mv = FlipMove::new(a, b);
        let next = bistellar_flip(prev, &mv)
            .map_err(|e| TransformError::DeltaStep { index: i, reason: e.to_string() })?;
        out.push(next);
    }
    for (idx, member) in out.iter().enumerate() {
        let i = idx + 1;
        let step_error = |reason: String| TransformError::DeltaStep { index: i, reason };
        if neighborliness_degree(member) < k {
            return Err(step_error("lost neighborliness".into()));
        }
        let want: i128 = choose(n - k - 3, k)
            - (1..i as i128).map(|ell| n as i128 - 2 * k as i128 - 1 - ell).sum::<i128>();
        let got = missing_of_size(member, k + 2).len() as i128;
        if got != want {
            return Err(step_error(format!("missing-face count {got}, expected {want}")));
        }
        let ball = dk_ball_with(k, n, squeezed_ball_c(i, k).as_ref())?;
        let boundary = ball_decomposition(&ball)?.boundary;
        if boundary.facets() != member.facets() {
            return Err(step_error("ladder-ball boundary differs from the flip result".into()));
        }
    }
    Ok(out)
}

/// The shellable 2-stacked ball used for sewing over the flip ladder:
/// the fan of facets `{1, j, j+1, j+2, j+3}` closed off by
/// `{j, j+1, j+2, j+3, n}` for `j <= k`. Requires `2 <= k <= n - 4`.
pub fn stacked_sewing_ball(n: usize, k: usize) -> Result<SimplicialComplex, TransformError> {
    if n < 7 || !(2..=n - 4).contains(&k) {
        return Err(TransformError::BallParameter { k, n });
    }
    let nn = n as u32;
    let mut facets = vec![VertexSet::new([1, 2, 3, 4, 5])];
    for j in 3..=nn - 4 {
        facets.push(VertexSet::new([1, j, j + 1, j + 2, j + 3]));
    }
    for j in 2..=k as u32 {
        facets.push(VertexSet::new([j, j + 1, j + 2, j + 3, nn]));
    }
    Ok(SimplicialComplex::from_facets(facets)?)
}

/// Sews vertex `n + 1` over the `k`-th stacked ball inside the `i`-th ladder
/// sphere on `n` vertices, and re-verifies the resulting missing-tetrahedron
/// count `C(n-4-i, 2) + (n-k-4)` (or `+ (n-5)` when `k = 2`).
pub fn gamma_sphere(n: usize, i: usize, k: usize) -> Result<SimplicialComplex, TransformError> {
    let ladder = delta_sequence(n)?;
    let delta = ladder
        .get(i.wrapping_sub(1))
        .ok_or(TransformError::DeltaTooSmall(n))?;
    gamma_sphere_from(delta, n, i, k)
}

/// Same as [`gamma_sphere`] but reusing an already-built ladder member.
pub fn gamma_sphere_from(
    delta: &SimplicialComplex,
    n: usize,
    i: usize,
    k: usize,
) -> Result<SimplicialComplex, TransformError> {
    let ball = stacked_sewing_ball(n, k)?;
    let out = sew(delta, &ball, n as u32 + 1)?;
    let add = if k == 2 { n as i128 - 5 } else { n as i128 - k as i128 - 4 };
    let want = choose(n - 4 - i, 2) + add;
    let got = missing_of_size(&out, 4).len() as i128;
    if got != want {
        return Err(TransformError::DeltaStep {
            index: i,
            reason: format!("sewn sphere has {got} missing tetrahedra, expected {want}"),
        });
    }
    if neighborliness_degree(&out) < 2 {
        return Err(TransformError::DeltaStep { index: i, reason: "sewn sphere lost neighborliness".into() });
    }
    Ok(out)
}

/// The edge-ball identity behind the ladder: the boundary of the join of the
/// edge `{1, n}` with the even-pair ball equals the cyclic 5-polytope
/// boundary.
pub fn edge_ball_boundary(n: usize) -> Result<SimplicialComplex, TransformError> {
    let ball = full_simplex(&[1, n as u32]).join(&ball_b(4, 2, n as u32 - 1)?)?;
    Ok(ball_decomposition(&ball)?.boundary)
}
