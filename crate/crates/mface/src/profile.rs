//! Face-count vectors and the predicates built on them.
//!
//! For a complex of dimension `d - 1` the profile carries the f-vector
//! `(f_{-1}, ..., f_{d-1})`, its h-transform, the g-differences up to the
//! middle, and the count of missing faces per dimension. Everything is exact
//! integer arithmetic.

use std::collections::HashMap;

use crate::complex::SimplicialComplex;
use crate::error::BoundsError;
use crate::num::binom;

/// The numeric bundle of a complex: face counts, their linear transforms,
/// missing-face counts, and derived flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceProfile {
    /// `f[i]` is the number of `(i-1)`-faces; `f[0] = 1` for the empty face.
    pub f: Vec<i128>,
    /// `h[j]` for `0 <= j <= d`.
    pub h: Vec<i128>,
    /// `g[j] = h[j] - h[j-1]` for `1 <= j <= d/2`, with `g[0] = 1`.
    pub g: Vec<i128>,
    /// `m[i-1]` is the number of missing `i`-faces, `1 <= i <= d`.
    pub m: Vec<i128>,
    /// Dimension plus one.
    pub d: usize,
    /// Vertex count.
    pub n: usize,
    /// Largest `i` with `f_{i-1} = C(n, i)`.
    pub neighborliness: usize,
    /// All missing faces are edges.
    pub is_flag: bool,
    /// Every face link, the empty face included, has the reduced Euler
    /// characteristic of a sphere of the matching dimension.
    pub is_eulerian: bool,
}

impl FaceProfile {
    /// `g_j` with the convention that for odd `d` the entry past the middle
    /// is zero.
    pub fn g_at(&self, j: usize) -> i128 {
        if j < self.g.len() {
            self.g[j]
        } else if self.d % 2 == 1 && j == self.d / 2 + 1 {
            0
        } else {
            panic!("g_{j} undefined for d = {}", self.d)
        }
    }

    /// `m_i` for `1 <= i`; zero past the stored range.
    pub fn m_at(&self, i: usize) -> i128 {
        if i >= 1 && i <= self.m.len() {
            self.m[i - 1]
        } else {
            0
        }
    }

    /// True for a complex of dimension `d-1` that is `floor(d/2)`-neighborly.
    pub fn is_neighborly(&self) -> bool {
        self.neighborliness >= self.d / 2
    }
}

/// h-transform of an f-vector: `h_j = sum_i (-1)^{j-i} C(d-i, d-j) f_{i-1}`.
pub fn f_to_h(f: &[i128], d: usize) -> Vec<i128> {
    (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
                    sign * binom((d - i) as i64, (d - j) as i64) * f[i]
                })
                .sum()
        })
        .collect()
}

/// Inverse transform: `f_{j-1} = sum_i C(d-i, d-j) h_i`.
pub fn h_to_f(h: &[i128], d: usize) -> Vec<i128> {
    (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| binom((d - i) as i64, (d - j) as i64) * h[i])
                .sum()
        })
        .collect()
}

/// Computes the full profile of a complex.
pub fn face_profile(complex: &SimplicialComplex) -> FaceProfile {
    let d = (complex.dim() + 1) as usize;
    let f: Vec<i128> = complex.face_counts().iter().map(|&c| c as i128).collect();
    let n = complex.vertex_count();
    let h = f_to_h(&f, d);
    let mut g = vec![1i128];
    for j in 1..=d / 2 {
        g.push(h[j] - h[j - 1]);
    }
    let missing = complex.missing_faces();
    let mut m = vec![0i128; d];
    for mf in &missing {
        m[mf.len() - 2] += 1;
    }
    let mut neighborliness = 0;
    for i in 1..=d {
        if f[i] == binom(n as i64, i as i64) {
            neighborliness = i;
        } else {
            break;
        }
    }
    let is_flag = missing.iter().all(|mf| mf.len() == 2);
    let is_eulerian = complex.is_pure() && eulerian_check(complex);
    FaceProfile { f, h, g, m, d, n, neighborliness, is_flag, is_eulerian }
}

/// True iff the h-vector is palindromic.
pub fn dehn_sommerville_check(profile: &FaceProfile) -> bool {
    let h = &profile.h;
    (0..h.len()).all(|i| h[i] == h[h.len() - 1 - i])
}

/// Checks that every face link, the empty face included, has reduced Euler
/// characteristic `(-1)^(dim K - dim F - 1)`. Input must be pure.
pub fn is_eulerian(complex: &SimplicialComplex) -> bool {
    complex.is_pure() && eulerian_check(complex)
}

fn eulerian_check(complex: &SimplicialComplex) -> bool {
    // chi~(lk F) = sum over faces H containing F of (-1)^{|H \ F| - 1};
    // accumulate over all (F, H) incidences at once.
    let mut chi: HashMap<u128, i64> = HashMap::new();
    for level in complex.faces_by_size() {
        for h in level {
            for f in h.subsets() {
                let sign = if (h.len() - f.len()) % 2 == 0 { -1 } else { 1 };
                *chi.entry(f.bits()).or_insert(0) += sign;
            }
        }
    }
    let dim = complex.dim();
    for level in complex.faces_by_size() {
        for f in level {
            let want = if (dim - (f.len() as i32 - 1) - 1).rem_euclid(2) == 0 {
                1
            } else {
                -1
            };
            if chi.get(&f.bits()).copied().unwrap_or(0) != want {
                return false;
            }
        }
    }
    true
}

/// The stackedness degree of a sphere profile.
///
/// Over `0 <= i <= d/2 - 1` the two exact criteria (`g_{i+1} = 0` and
/// `m_{d-i} = g_i`) are equivalent for spheres; they are cross-checked at
/// every index and any disagreement is an error in the input data. The least
/// firing index is returned. When none fires and `d` is odd, the degree
/// `floor(d/2)` is reported when the necessary middle condition
/// `m_{(d+1)/2} = g_{(d-1)/2}` holds; otherwise `None`.
pub fn sphere_stacked_degree(profile: &FaceProfile) -> Result<Option<usize>, BoundsError> {
    let d = profile.d;
    let mut found = None;
    for i in 0..d / 2 {
        let by_g = profile.g_at(i + 1) == 0;
        let by_m = profile.m_at(d - i) == profile.g_at(i);
        if by_g != by_m {
            return Err(BoundsError::StackednessMismatch {
                i,
                ip1: i + 1,
                g: profile.g_at(i + 1),
                di: d - i,
                m: profile.m_at(d - i),
                gi: profile.g_at(i),
            });
        }
        if by_g && found.is_none() {
            found = Some(i);
        }
    }
    if found.is_none() && d % 2 == 1 && profile.m_at(d.div_ceil(2)) == profile.g_at((d - 1) / 2) {
        found = Some(d / 2);
    }
    Ok(found)
}

/// h-vector of the boundary of the cyclic `d`-polytope on `n` vertices:
/// `h_i = C(n - d + i - 1, i)` up to the middle, reflected beyond it.
pub fn cyclic_h_vector(d: usize, n: usize) -> Vec<i128> {
    (0..=d)
        .map(|i| {
            let i = i.min(d - i);
            binom((n - d + i - 1) as i64, i as i64)
        })
        .collect()
}

/// Number of `k`-faces of the boundary of the cyclic `d`-polytope on `n`
/// vertices, computed from the h-vector.
pub fn cyclic_face_count(d: usize, n: usize, k: i64) -> i128 {
    if k < -1 || k >= d as i64 {
        return 0;
    }
    h_to_f(&cyclic_h_vector(d, n), d)[(k + 1) as usize]
}
