//! Independent oracles for the derived facts the library relies on.
//!
//! Each oracle recomputes a result through a different route than the
//! implementation: facet lists of small cyclic polytopes come from an exact
//! convex hull over the moment curve, pseudopowers from counting monomials
//! in compressed segments, and the circle relint predicate from exact 2-D
//! convex-hull geometry on a coordinate realization of the diagram.

use itertools::Itertools;
use mface::complex::VertexSet;
use mface::gale::{build_qk, turn, GaleCircle, Turn};
use mface::generators::cyclic_boundary;
use mface::num::{pseudopower_lower, pseudopower_upper};
use mface::profile::face_profile;

// ---------------------------------------------------------------------------
// Moment-curve convex hull.

fn det_i128(mut m: Vec<Vec<i128>>) -> i128 {
    // Fraction-free elimination; exact for integer matrices of this size.
    let n = m.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            sign = -sign;
        }
        for r in col + 1..n {
            for c in col + 1..n {
                m[r][c] = (m[col][col] * m[r][c] - m[r][col] * m[col][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[col][col];
    }
    sign * m[n - 1][n - 1]
}

/// Facets of the convex hull of the points `(t, t^2, ..., t^d)`, `t = 1..n`,
/// by the brute-force sidedness test: a `d`-subset spans a facet iff every
/// other point lies strictly on one common side of its hyperplane.
fn moment_curve_hull_facets(d: usize, n: usize) -> Vec<VertexSet> {
    let point = |t: usize| -> Vec<i128> {
        (1..=d).map(|e| (t as i128).pow(e as u32)).collect()
    };
    let mut facets = Vec::new();
    for subset in (1..=n).combinations(d) {
        let mut positive = false;
        let mut negative = false;
        for q in 1..=n {
            if subset.contains(&q) {
                continue;
            }
            let mut rows: Vec<Vec<i128>> = subset
                .iter()
                .map(|&t| {
                    let mut row = vec![1i128];
                    row.extend(point(t));
                    row
                })
                .collect();
            let mut qrow = vec![1i128];
            qrow.extend(point(q));
            rows.push(qrow);
            match det_i128(rows).signum() {
                1 => positive = true,
                -1 => negative = true,
                _ => panic!("degenerate moment-curve configuration"),
            }
        }
        if positive != negative {
            facets.push(VertexSet::new(subset.iter().map(|&t| t as u32)));
        }
    }
    facets.sort_by_key(|f| f.to_vec());
    facets
}

#[test]
fn cyclic_facets_match_hull() {
    for (d, n) in [(3, 5), (3, 6), (4, 7), (4, 8), (5, 8), (5, 9)] {
        let hull = moment_curve_hull_facets(d, n);
        let even = cyclic_boundary(d, n).unwrap();
        assert_eq!(even.facets(), &hull[..], "d = {d}, n = {n}");
    }
}

#[test]
fn cyclic_4_7_f_vector_from_hull() {
    let hull = mface::SimplicialComplex::from_facets(moment_curve_hull_facets(4, 7)).unwrap();
    assert_eq!(face_profile(&hull).f, vec![1, 7, 21, 28, 14]);
}

#[test]
fn cyclic_5_9_facet_count() {
    assert_eq!(cyclic_boundary(5, 9).unwrap().facets().len(), 30);
}

// ---------------------------------------------------------------------------
// Pseudopowers by segment counting.

/// Degree-`k` monomials (as sorted variable multisets) in the compressed
/// order: sorted by reversed index tuple.
fn monomials(degree: usize, vars: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    fn rec(degree: usize, vars: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == degree {
            out.push(cur.clone());
            return;
        }
        for v in lo..=vars {
            cur.push(v);
            rec(degree, vars, v, cur, out);
            cur.pop();
        }
    }
    rec(degree, vars, 1, &mut Vec::new(), &mut out);
    out.sort_by_key(|m| m.iter().rev().copied().collect::<Vec<_>>());
    out
}

fn divisors(monomial: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..monomial.len())
        .map(|skip| {
            monomial
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

#[test]
fn pseudopowers_match_segment_counting() {
    // The first m degree-k monomials form the extremal multicomplex level;
    // the upper pseudopower counts the degree-(k+1) monomials all of whose
    // divisors stay in the segment, the lower one counts the divisor shadow.
    for k in 1..=4usize {
        for m in 0..=20i128 {
            let vars = m as usize + k + 2;
            let level = monomials(k, vars);
            let segment: std::collections::HashSet<Vec<usize>> =
                level[..m as usize].iter().cloned().collect();
            let above = monomials(k + 1, vars)
                .into_iter()
                .filter(|mon| divisors(mon).iter().all(|d| segment.contains(d)))
                .count() as i128;
            assert_eq!(above, pseudopower_upper(m, k as u32), "up m = {m}, k = {k}");
            let mut shadow: Vec<Vec<usize>> = level[..m as usize]
                .iter()
                .flat_map(|mon| divisors(mon))
                .collect();
            shadow.sort();
            shadow.dedup();
            assert_eq!(shadow.len() as i128, pseudopower_lower(m, k as u32), "down m = {m}, k = {k}");
        }
    }
}

// ---------------------------------------------------------------------------
// Circle relint by exact coordinates.

fn cross(a: (i128, i128), b: (i128, i128)) -> i128 {
    a.0 * b.1 - a.1 * b.0
}

/// Assigns each slot an integer direction vector whose cyclic order, together
/// with the antipodal vectors, reproduces the diagram's diameter order.
fn realize(diagram: &GaleCircle) -> std::collections::HashMap<u32, (i128, i128)> {
    let slots = diagram.slot_turns();
    let mut marks: Vec<Turn> = slots
        .iter()
        .flat_map(|&s| {
            let anti = s + Turn::new(1, 2);
            [s, anti - anti.floor()]
        })
        .collect();
    marks.sort();
    marks.dedup();
    let s = marks.len() / 2;
    let mut by_slot = std::collections::HashMap::new();
    for point in diagram.points() {
        let idx = marks.binary_search(&point.turn).expect("slot is a mark");
        let vec = if idx < s {
            ((s - idx) as i128, 1i128)
        } else {
            (-((2 * s - idx) as i128), -1i128)
        };
        by_slot.insert(point.label, vec);
    }
    by_slot
}

/// Exact 2-D test: the origin lies in the relative interior of the convex
/// hull of the given integer points.
fn origin_in_relint_coords(points: &[(i128, i128)]) -> bool {
    let mut set: Vec<(i128, i128)> = points.to_vec();
    set.sort();
    set.dedup();
    match set.len() {
        0 => false,
        1 => set[0] == (0, 0),
        _ => {
            let p0 = set[0];
            let dir = (set[1].0 - p0.0, set[1].1 - p0.1);
            let collinear = set
                .iter()
                .all(|&p| cross((p.0 - p0.0, p.1 - p0.1), dir) == 0);
            if collinear {
                // Relative interior of a segment: the origin must sit on the
                // line, strictly between the extreme parameters.
                if cross((0 - p0.0, 0 - p0.1), dir) != 0 {
                    return false;
                }
                let param = |p: (i128, i128)| (p.0 - p0.0) * dir.0 + (p.1 - p0.1) * dir.1;
                let zero = param((0, 0));
                let lo = set.iter().map(|&p| param(p)).min().unwrap();
                let hi = set.iter().map(|&p| param(p)).max().unwrap();
                lo < zero && zero < hi
            } else {
                // Monotone-chain hull, then strict containment.
                let hull = convex_hull(&set);
                (0..hull.len()).all(|i| {
                    let a = hull[i];
                    let b = hull[(i + 1) % hull.len()];
                    cross((b.0 - a.0, b.1 - a.1), (-a.0, -a.1)) > 0
                })
            }
        }
    }
}

fn convex_hull(sorted: &[(i128, i128)]) -> Vec<(i128, i128)> {
    let mut lower: Vec<(i128, i128)> = Vec::new();
    for &p in sorted {
        while lower.len() >= 2 {
            let a = lower[lower.len() - 2];
            let b = lower[lower.len() - 1];
            if cross((b.0 - a.0, b.1 - a.1), (p.0 - a.0, p.1 - a.1)) <= 0 {
                lower.pop();
            } else {
                break;
            }
        }
        lower.push(p);
    }
    let mut upper: Vec<(i128, i128)> = Vec::new();
    for &p in sorted.iter().rev() {
        while upper.len() >= 2 {
            let a = upper[upper.len() - 2];
            let b = upper[upper.len() - 1];
            if cross((b.0 - a.0, b.1 - a.1), (p.0 - a.0, p.1 - a.1)) <= 0 {
                upper.pop();
            } else {
                break;
            }
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn check_diagram_against_oracle(diagram: &GaleCircle) {
    let coords = realize(diagram);
    let labels: Vec<u32> = diagram.labels().to_vec();
    assert!(labels.len() <= 14, "oracle sweep is exponential in the point count");
    for mask in 0u32..(1 << labels.len()) {
        let subset = VertexSet::new(
            labels
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &l)| l),
        );
        let points: Vec<(i128, i128)> = subset.iter().map(|l| coords[&l]).collect();
        assert_eq!(
            diagram.origin_in_relint(subset),
            origin_in_relint_coords(&points),
            "subset {subset} of {diagram:?}"
        );
    }
}

#[test]
fn relint_matches_coordinate_oracle_on_polygon_diagrams() {
    for k in [1usize, 3, 5] {
        let qk = build_qk(k).unwrap();
        check_diagram_against_oracle(&qk.diagram);
    }
}

#[test]
fn relint_matches_coordinate_oracle_on_irregular_diagrams() {
    // A rotated variant of the 5-gon diagram.
    let q3 = build_qk(3).unwrap();
    let moved = q3.diagram.rotate_slot(turn(1, 5), turn(23, 110)).unwrap();
    check_diagram_against_oracle(&moved);

    // Mixed multiplicities and uneven spacing.
    let mixed = GaleCircle::new(vec![
        (1, turn(0, 1)),
        (2, turn(0, 1)),
        (3, turn(1, 12)),
        (4, turn(2, 7)),
        (5, turn(3, 7)),
        (6, turn(4, 7)),
        (7, turn(4, 7)),
        (8, turn(9, 11)),
    ])
    .unwrap();
    check_diagram_against_oracle(&mixed);

    // A merged diagram keeps matching.
    let removed: VertexSet = q3.edges[0].union(&q3.edges[1]);
    let rest: Vec<(u32, Turn)> = q3
        .diagram
        .points()
        .iter()
        .filter(|p| !removed.contains(p.label))
        .map(|p| (p.label, p.turn))
        .collect();
    let sub = GaleCircle::new(rest).unwrap();
    check_diagram_against_oracle(&sub);
}

#[test]
fn removed_missing_face_complement_fails_relint() {
    // Deleting a missing face's points (two consecutive double corners)
    // leaves the origin outside the relative interior of the rest.
    let q3 = build_qk(3).unwrap();
    let missing = q3.sphere.missing_faces();
    assert_eq!(missing.len(), 5);
    for m in missing {
        assert!(!q3.diagram.origin_in_relint(q3.diagram.labels().difference(&m)));
        assert!(!q3.diagram.is_face(m));
    }
}
