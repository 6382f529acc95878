//! Constructors for the spheres and balls the library studies: simplex and
//! cyclic-polytope boundaries, cross-polytopes, the two published seed
//! complexes on 8 and 9 vertices, the Fano-derived equality witness, and the
//! 2-sphere realizer for prescribed missing-triangle counts.

use itertools::Itertools;

use crate::bounds::two_sphere_m_admissible;
use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::TransformError;
use crate::num::binom;

/// Boundary of the `d`-simplex on the given `d + 1` labels.
pub fn simplex_boundary(d: usize, labels: &[u32]) -> SimplicialComplex {
    assert_eq!(labels.len(), d + 1, "simplex boundary needs d+1 labels");
    let facets = labels
        .iter()
        .combinations(d)
        .map(|c| VertexSet::new(c.into_iter().copied()));
    SimplicialComplex::from_facets(facets).expect("simplex boundary is nonempty")
}

/// The full simplex on the given labels, as a complex with one facet.
pub fn full_simplex(labels: &[u32]) -> SimplicialComplex {
    SimplicialComplex::from_facets([VertexSet::new(labels.iter().copied())]).expect("nonempty")
}

/// Cycle (polygon boundary) through the labels in the given order.
pub fn polygon(labels: &[u32]) -> SimplicialComplex {
    assert!(labels.len() >= 3, "polygon needs at least 3 vertices");
    let facets = (0..labels.len()).map(|i| VertexSet::new([labels[i], labels[(i + 1) % labels.len()]]));
    SimplicialComplex::from_facets(facets).expect("nonempty")
}

/// Boundary of the `k`-fold cross-polytope: the join of `k` point pairs
/// `{2j-1, 2j}`, a flag `(k-1)`-sphere on `2k` vertices.
pub fn cross_polytope(k: usize) -> SimplicialComplex {
    assert!(k >= 1);
    let mut facets = vec![VertexSet::EMPTY];
    for j in 1..=k as u32 {
        facets = facets
            .into_iter()
            .flat_map(|f| [f.insert(2 * j - 1), f.insert(2 * j)])
            .collect();
    }
    SimplicialComplex::from_facets(facets).expect("nonempty")
}

/// The octahedron (2-sphere) with antipodal pairs `{1,2}`, `{3,4}`, `{5,6}`.
pub fn octahedron() -> SimplicialComplex {
    cross_polytope(3)
}

/// True iff the `d`-subset `facet` of `1..=n` satisfies the even-separation
/// facet criterion for the cyclic `d`-polytope: any two elements outside the
/// set have an even number of set elements strictly between them.
pub fn gale_evenness(facet: &VertexSet, n: usize) -> bool {
    let inside: Vec<bool> = (1..=n as u32).map(|v| facet.contains(v)).collect();
    let outside: Vec<usize> = (0..n).filter(|&i| !inside[i]).collect();
    for w in outside.windows(2) {
        let between = inside[w[0] + 1..w[1]].iter().filter(|&&b| b).count();
        if between % 2 != 0 {
            return false;
        }
    }
    true
}

/// Boundary complex of the cyclic `d`-polytope on vertices `1..=n`,
/// enumerated through the even-separation facet criterion.
pub fn cyclic_boundary(d: usize, n: usize) -> Result<SimplicialComplex, TransformError> {
    if n <= d || d < 2 {
        return Err(TransformError::BadCyclicParams { d, n });
    }
    if n > crate::complex::MAX_LABEL as usize {
        return Err(TransformError::Complex(crate::error::ComplexError::LabelOutOfRange(n as u32)));
    }
    let facets: Vec<VertexSet> = (1..=n as u32)
        .combinations(d)
        .map(VertexSet::new)
        .filter(|f| gale_evenness(f, n))
        .collect();
    Ok(SimplicialComplex::from_facets(facets)?)
}

/// The ball generated by the facets `{i_1, i_1+1, ..., i_k, i_k+1}` of the
/// cyclic `2k`-polytope boundary with `a <= i_1`, `i_k + 1 <= b`, and
/// consecutive pair starts at least two apart.
pub fn ball_b(two_k: usize, a: u32, b: u32) -> Result<SimplicialComplex, TransformError> {
    assert!(two_k >= 2 && two_k.is_multiple_of(2), "ball family needs an even dimension parameter");
    let k = two_k / 2;
    let mut facets = Vec::new();
    let mut starts = vec![0u32; k];
    fn rec(k: usize, depth: usize, lo: u32, b: u32, starts: &mut Vec<u32>, out: &mut Vec<VertexSet>) {
        if depth == k {
            let mut f = VertexSet::EMPTY;
            for &s in starts.iter() {
                f = f.insert(s).insert(s + 1);
            }
            out.push(f);
            return;
        }
        let mut s = lo;
        while s < b {
            starts[depth] = s;
            rec(k, depth + 1, s + 2, b, starts, out);
            s += 1;
        }
    }
    rec(k, 0, a, b, &mut starts, &mut facets);
    if facets.is_empty() {
        return Err(TransformError::EmptyFamily);
    }
    Ok(SimplicialComplex::from_facets(facets)?)
}

/// The stacked ball with facets `{3, 4, ..., 2k-2} ∪ {2k-3+j, 2k-2+j}` for
/// `2 <= j <= i`. For `i = 1` the family is void and `None` is returned.
pub fn squeezed_ball_c(i: usize, k: usize) -> Option<SimplicialComplex> {
    assert!(k >= 3, "squeezed ball needs k >= 3");
    if i < 2 {
        return None;
    }
    let base: Vec<u32> = (3..=(2 * k - 2) as u32).collect();
    let facets = (2..=i as u32).map(|j| {
        let mut f = VertexSet::new(base.iter().copied());
        f = f.insert((2 * k - 2) as u32 + j - 1);
        f = f.insert((2 * k - 2) as u32 + j);
        f
    });
    Some(SimplicialComplex::from_facets(facets).expect("nonempty for i >= 2"))
}

/// The 20-facet neighborly 3-sphere of Grünbaum and Sreedharan on 8
/// vertices, the smallest non-polytopal neighborly sphere.
pub fn gs8() -> SimplicialComplex {
    SimplicialComplex::from_facet_labels(&[
        &[1, 2, 3, 4],
        &[1, 2, 3, 5],
        &[1, 2, 4, 5],
        &[1, 3, 4, 6],
        &[1, 3, 5, 6],
        &[1, 4, 5, 7],
        &[1, 4, 6, 7],
        &[1, 5, 6, 8],
        &[1, 5, 7, 8],
        &[1, 6, 7, 8],
        &[2, 3, 4, 8],
        &[2, 3, 5, 6],
        &[2, 3, 6, 7],
        &[2, 3, 7, 8],
        &[2, 4, 5, 8],
        &[2, 5, 6, 8],
        &[2, 6, 7, 8],
        &[3, 4, 6, 7],
        &[3, 4, 7, 8],
        &[4, 5, 7, 8],
    ])
    .expect("published facet list")
}

/// The 30-facet boundary of the vertex-minimal neighborly 5-polytope on 9
/// vertices all of whose missing faces are triangles.
pub fn p042() -> SimplicialComplex {
    SimplicialComplex::from_facet_labels(&[
        &[1, 3, 6, 8, 9],
        &[1, 3, 4, 8, 9],
        &[3, 4, 6, 8, 9],
        &[2, 4, 6, 8, 9],
        &[1, 3, 5, 6, 8],
        &[1, 2, 3, 5, 6],
        &[2, 3, 5, 6, 8],
        &[1, 3, 4, 5, 8],
        &[2, 3, 6, 7, 8],
        &[2, 4, 6, 7, 8],
        &[3, 4, 6, 7, 8],
        &[1, 2, 3, 6, 7],
        &[1, 5, 6, 8, 9],
        &[2, 3, 5, 7, 8],
        &[3, 4, 6, 7, 9],
        &[1, 2, 4, 5, 9],
        &[1, 2, 4, 5, 7],
        &[1, 2, 4, 7, 9],
        &[2, 5, 6, 8, 9],
        &[2, 4, 5, 8, 9],
        &[2, 4, 5, 7, 8],
        &[2, 4, 6, 7, 9],
        &[1, 3, 6, 7, 9],
        &[1, 2, 6, 7, 9],
        &[1, 2, 5, 6, 9],
        &[1, 2, 3, 5, 7],
        &[3, 4, 5, 7, 8],
        &[1, 3, 4, 7, 9],
        &[1, 3, 4, 5, 7],
        &[1, 4, 5, 8, 9],
    ])
    .expect("published facet list")
}

/// The seven lines of the Fano plane on `[7]`.
pub fn fano_lines() -> Vec<VertexSet> {
    [
        [1, 2, 3],
        [1, 4, 5],
        [1, 6, 7],
        [2, 4, 6],
        [2, 5, 7],
        [3, 4, 7],
        [3, 5, 6],
    ]
    .iter()
    .map(|l| VertexSet::new(l.iter().copied()))
    .collect()
}

/// The 3-dimensional complex on `[7]` generated by the seven Fano line
/// complements: 2-neighborly, missing triangles exactly the lines, and no
/// missing tetrahedra.
pub fn fano_complex() -> SimplicialComplex {
    let all = VertexSet::new(1..=7);
    let facets = fano_lines().into_iter().map(|l| all.difference(&l));
    SimplicialComplex::from_facets(facets).expect("nonempty")
}

/// Stacks a shallow pyramid over `facet`: the facet is replaced by the cone
/// over its boundary with the fresh `apex`.
pub fn stack_on_facet(
    sphere: &SimplicialComplex,
    facet: VertexSet,
    apex: u32,
) -> Result<SimplicialComplex, TransformError> {
    if sphere.vertices().contains(apex) {
        return Err(TransformError::VertexInUse(apex));
    }
    if !sphere.facets().contains(&facet) {
        return Err(TransformError::Complex(crate::error::ComplexError::NotAFace(facet)));
    }
    let mut facets: Vec<VertexSet> = sphere.facets().iter().copied().filter(|f| *f != facet).collect();
    for v in facet.iter() {
        facets.push(facet.remove(v).insert(apex));
    }
    Ok(SimplicialComplex::from_facets(facets)?)
}

/// Builds a 2-sphere on `n` vertices with exactly `m2` missing triangles,
/// when such a sphere exists: a bipyramid over an `(n - m2 - 2)`-gon
/// followed by `m2` stackings for small `m2`, a fully stacked sphere for the
/// top value `m2 = n - 4`. The value `m2 = n - 5` is unrealizable.
pub fn realize_2sphere(n: usize, m2: u64) -> Result<SimplicialComplex, TransformError> {
    if n < 5 || n > crate::complex::MAX_LABEL as usize {
        return Err(TransformError::Inadmissible2Sphere {
            n,
            m2,
            hint: "; vertex counts must lie in 5..=128".into(),
        });
    }
    if !two_sphere_m_admissible(n, m2) {
        let hint = if n >= 5 && m2 == n as u64 - 5 {
            "; a 2-sphere cannot have exactly one fewer than the stacked count".to_string()
        } else {
            format!("; admissible counts are 0..={} and {}", n as i64 - 6, n - 4)
        };
        return Err(TransformError::Inadmissible2Sphere { n, m2, hint });
    }
    let mut sphere;
    let mut next_label;
    let stackings;
    if m2 == n as u64 - 4 {
        sphere = simplex_boundary(3, &[1, 2, 3, 4]);
        next_label = 5u32;
        stackings = n as u64 - 4;
    } else {
        // Bipyramid over a polygon large enough to be missing-triangle-free.
        let gon = n - m2 as usize - 2;
        let ring: Vec<u32> = (1..=gon as u32).collect();
        let apexes = SimplicialComplex::from_facet_labels(&[&[gon as u32 + 1], &[gon as u32 + 2]]).unwrap();
        sphere = polygon(&ring).join(&apexes)?;
        next_label = gon as u32 + 3;
        stackings = m2;
    }
    // Repeated stacking over a facet of the most recent pyramid keeps every
    // increment of the missing-triangle count at exactly one.
    let mut last_apex = None;
    for _ in 0..stackings {
        let facet = match last_apex {
            None => sphere.facets()[0],
            Some(apex) => *sphere
                .facets()
                .iter()
                .find(|f| f.contains(apex))
                .expect("apex keeps a facet"),
        };
        sphere = stack_on_facet(&sphere, facet, next_label)?;
        last_apex = Some(next_label);
        next_label += 1;
    }
    let m = sphere.m_vector();
    debug_assert_eq!(m[1], m2);
    debug_assert_eq!(m[2], 0);
    Ok(sphere)
}

/// The experimental ladder-ball variant: the edge-join ball over
/// `{1, n}` united with the join of the square `{1, 2, n-1, n}` with a
/// user-supplied complex `t` on labels inside `[3, n-2]`. Nothing is
/// asserted about the result.
pub fn dk_ball_with(
    k: usize,
    n: usize,
    t: Option<&SimplicialComplex>,
) -> Result<SimplicialComplex, TransformError> {
    let edge = full_simplex(&[1, n as u32]);
    let mut facets: Vec<VertexSet> = edge.join(&ball_b(2 * k, 2, n as u32 - 1)?)?.facets().to_vec();
    if let Some(t) = t {
        let square = full_simplex(&[1, 2, n as u32 - 1, n as u32]);
        facets.extend(square.join(t)?.facets());
    }
    Ok(SimplicialComplex::from_facets(facets)?)
}

/// `C(n, k)` as an `i128`, re-exported for callers working with counts.
pub fn choose(n: usize, k: usize) -> i128 {
    binom(n as i64, k as i64)
}
