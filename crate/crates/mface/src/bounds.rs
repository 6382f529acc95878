//! Exact evaluation of the missing-face inequalities: the pseudopower upper
//! bounds, the triangle-count lower bound and its generalization to
//! `m_k`, the nearly-neighborly specializations, the flag edge cap, and the
//! 2-sphere admissibility test. Every value is an exact rational.

use crate::error::BoundsError;
use crate::num::{binom, pseudopower_lower, pseudopower_upper, rat, Rat};
use crate::profile::{cyclic_face_count, FaceProfile};

/// Which way a bound constrains the observed quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Upper,
    Lower,
}

/// One evaluated inequality, with everything needed to re-verify it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    /// Stable identifier, e.g. `m_upper[2]` or `goodman`.
    pub name: String,
    pub kind: BoundKind,
    /// The exact bound value.
    pub value: Rat,
    /// The observed quantity being bounded.
    pub observed: Rat,
    /// `observed - value` for lower bounds, `value - observed` for upper.
    pub slack: Rat,
    pub satisfied: bool,
}

impl BoundReport {
    fn new(name: String, kind: BoundKind, value: Rat, observed: Rat) -> BoundReport {
        let slack = match kind {
            BoundKind::Lower => observed - value,
            BoundKind::Upper => value - observed,
        };
        BoundReport { name, kind, value, observed, slack, satisfied: slack >= rat(0, 1) }
    }
}

fn validate_g(g: &[i128], d: usize) -> Result<(), BoundsError> {
    if g.is_empty() || g[0] != 1 {
        return Err(BoundsError::BadLeadingG(g.first().copied().unwrap_or(0)));
    }
    if g.len() != d / 2 + 1 {
        return Err(BoundsError::BadGLength { got: g.len(), need: d / 2 + 1, d });
    }
    for (index, &value) in g.iter().enumerate() {
        if value < 0 {
            return Err(BoundsError::NegativeG { index, value });
        }
    }
    Ok(())
}

/// The pseudopower upper bounds on the missing-face numbers of a
/// `(d-1)`-sphere with g-vector `g`: for `1 <= k <= ceil(d/2) - 1`,
/// `m_k <= g_k^<k> - g_{k+1}` and `m_{d-k} <= g_k - (g_{k+1})_<k+1>`;
/// for even `d = 2k` additionally `m_k <= g_k^<k> + g_k`.
///
/// Returns `(index, bound)` pairs where `index` is the missing-face
/// dimension being bounded.
pub fn m_upper_bounds(g: &[i128], d: usize) -> Result<Vec<(usize, i128)>, BoundsError> {
    validate_g(g, d)?;
    let g_at = |j: usize| -> i128 {
        if j < g.len() {
            g[j]
        } else {
            // Odd d: the entry just past the middle is zero.
            0
        }
    };
    let mut out = Vec::new();
    for k in 1..=d.div_ceil(2).saturating_sub(1) {
        out.push((k, pseudopower_upper(g_at(k), k as u32) - g_at(k + 1)));
        out.push((d - k, g_at(k) - pseudopower_lower(g_at(k + 1), k as u32 + 1)));
    }
    if d.is_multiple_of(2) && d >= 2 {
        let k = d / 2;
        out.push((k, pseudopower_upper(g_at(k), k as u32) + g_at(k)));
    }
    out.sort();
    Ok(out)
}

/// Evaluates every pseudopower upper bound against the profile's observed
/// missing-face counts.
pub fn upper_bound_reports(profile: &FaceProfile) -> Result<Vec<BoundReport>, BoundsError> {
    let mut reports = Vec::new();
    for (index, bound) in m_upper_bounds(&profile.g, profile.d)? {
        reports.push(BoundReport::new(
            format!("m_upper[{index}]"),
            BoundKind::Upper,
            rat(bound, 1),
            rat(profile.m_at(index), 1),
        ));
    }
    Ok(reports)
}

/// The convex lower bound `f1 (4 f1 - n^2) / (3n)` on the number of
/// 3-cliques of a graph with `n` vertices and `f1` edges.
pub fn goodman_bound(n: usize, f1: i128) -> Rat {
    rat(f1, 1) * rat(4 * f1 - (n as i128) * (n as i128), 1) / rat(3 * n as i128, 1)
}

/// The generalization of the 3-clique bound: a lower bound on `m_k` in terms
/// of `n`, `f_{k-1}`, and `f_k`, valid for every simplicial complex of
/// dimension at least `k - 1`.
pub fn generalized_mk_bound(k: usize, n: usize, f_km1: i128, f_k: i128) -> Rat {
    assert!(k >= 2, "the generalized bound needs k >= 2");
    let kk = k as i128;
    let nn = n as i128;
    let quad = rat(kk * kk, (kk + 1) * binom(nn as i64, kk as i64 - 1)) * rat(f_km1, 1) * rat(f_km1, 1);
    let linear = rat(nn * (kk - 1) - kk * (kk - 2), kk + 1) * rat(f_km1, 1);
    quad - linear - rat(f_k, 1)
}

/// Lower bound on `m_k` for `(k-1)`-neighborly Eulerian complexes of
/// dimension `d - 1` with `d` in `{2k, 2k+1}`: the generalized bound with
/// `f_k` eliminated through the palindromic h-relations, leaving only `n`
/// and `f_{k-1}`.
pub fn nearly_neighborly_bound(k: usize, d: usize, n: usize, f_km1: i128) -> Result<Rat, BoundsError> {
    if d != 2 * k && d != 2 * k + 1 {
        return Err(BoundsError::BadDimensionForK { d, k });
    }
    let kk = k as i128;
    let nn = n as i128;
    let quad = rat(kk * kk, (kk + 1) * binom(nn as i64, kk as i64 - 1)) * rat(f_km1, 1) * rat(f_km1, 1);
    let linear = rat(nn * (kk - 1) - kk * (kk - 2), kk + 1) * rat(f_km1, 1);
    let coeff = (d / 2) as i128 + 1 + if (d - 1).is_multiple_of(2) { 1 } else { -1 };
    let fk_cyclic = cyclic_face_count(d, n, k as i64);
    let defect = rat(coeff, 1) * (rat(binom(nn as i64, kk as i64), 1) - rat(f_km1, 1));
    Ok(quad - linear - rat(fk_cyclic, 1) + defect)
}

/// Edge-count cap for flag Eulerian complexes: `n^2/4 + 3n/2` in dimension
/// three (`d = 4`), `n^2/4 + 3n` in dimension four (`d = 5`). A flag
/// Eulerian complex must have `f1` strictly below the cap.
pub fn flag_edge_cap(d: usize, n: usize) -> Result<Rat, BoundsError> {
    let nn = n as i128;
    match d {
        4 => Ok(rat(nn * nn, 4) + rat(3 * nn, 2)),
        5 => Ok(rat(nn * nn, 4) + rat(3 * nn, 1)),
        _ => Err(BoundsError::BadEdgeCapDimension(d)),
    }
}

/// True iff some 2-sphere on `n >= 5` vertices has exactly `m2` missing
/// triangles: `0 <= m2 <= n-6`, or the stacked value `m2 = n-4`. The value
/// `n-5` is never attained.
pub fn two_sphere_m_admissible(n: usize, m2: u64) -> bool {
    assert!(n >= 5, "2-spheres need at least 5 vertices");
    let g1 = n as i64 - 4;
    let m2 = m2 as i64;
    (0..=g1 - 2).contains(&m2) || m2 == g1
}

/// All lower-bound reports that apply to a profile (the 3-clique bound, its
/// generalizations for `2 <= k <= d/2`, and the nearly-neighborly refinement
/// when the hypotheses hold).
pub fn lower_bound_reports(profile: &FaceProfile) -> Vec<BoundReport> {
    let mut reports = Vec::new();
    let n = profile.n;
    let d = profile.d;
    if d >= 2 {
        let f1 = profile.f[2];
        let f2 = profile.f.get(3).copied().unwrap_or(0);
        reports.push(BoundReport::new(
            "goodman".to_string(),
            BoundKind::Lower,
            goodman_bound(n, f1) - rat(f2, 1),
            rat(profile.m_at(2), 1),
        ));
    }
    for k in 3..=d / 2 {
        let f_km1 = profile.f[k];
        let f_k = profile.f.get(k + 1).copied().unwrap_or(0);
        reports.push(BoundReport::new(
            format!("mk_lower[{k}]"),
            BoundKind::Lower,
            generalized_mk_bound(k, n, f_km1, f_k),
            rat(profile.m_at(k), 1),
        ));
    }
    // Nearly-neighborly refinement, when applicable.
    for k in 2..=d / 2 {
        if (d == 2 * k || d == 2 * k + 1) && profile.neighborliness >= k - 1 && profile.is_eulerian {
            if let Ok(value) = nearly_neighborly_bound(k, d, n, profile.f[k]) {
                reports.push(BoundReport::new(
                    format!("nearly_neighborly[{k}]"),
                    BoundKind::Lower,
                    value,
                    rat(profile.m_at(k), 1),
                ));
            }
        }
    }
    reports
}
