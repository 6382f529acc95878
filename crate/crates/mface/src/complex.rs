//! Simplicial complexes on integer-labeled vertices, given by their facets.
//!
//! A complex is stored as its list of maximal faces; face membership is a
//! bitmask subset test against that list. All values are immutable: every
//! operation returns a new complex.

use std::collections::HashSet;
use std::fmt;

use crate::error::ComplexError;

/// Largest vertex label a [`VertexSet`] can hold.
pub const MAX_LABEL: u32 = 128;

/// A set of vertex labels in `1..=128`, backed by a `u128` bitmask.
///
/// Iteration is always in ascending label order, so a `VertexSet` doubles as
/// a canonical sorted representation of a face.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// Builds a set from labels, panicking on labels outside `1..=128`.
    /// Use [`VertexSet::checked`] for untrusted input.
    pub fn new<I: IntoIterator<Item = u32>>(labels: I) -> VertexSet {
        Self::checked(labels).expect("vertex label out of supported range")
    }

    pub fn checked<I: IntoIterator<Item = u32>>(labels: I) -> Result<VertexSet, ComplexError> {
        let mut bits = 0u128;
        for v in labels {
            if v == 0 || v > MAX_LABEL {
                return Err(ComplexError::LabelOutOfRange(v));
            }
            bits |= 1u128 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    pub fn singleton(v: u32) -> VertexSet {
        VertexSet::new([v])
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, v: u32) -> bool {
        (1..=MAX_LABEL).contains(&v) && self.0 & (1u128 << (v - 1)) != 0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn insert(&self, v: u32) -> VertexSet {
        debug_assert!((1..=MAX_LABEL).contains(&v));
        VertexSet(self.0 | 1u128 << (v - 1))
    }

    pub fn remove(&self, v: u32) -> VertexSet {
        debug_assert!((1..=MAX_LABEL).contains(&v));
        VertexSet(self.0 & !(1u128 << (v - 1)))
    }

    pub fn min_label(&self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() + 1)
        }
    }

    pub fn max_label(&self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(128 - self.0.leading_zeros())
        }
    }

    /// Labels in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    /// All subsets of this set, including the empty set and the set itself.
    pub fn subsets(&self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut sub = 0u128;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = VertexSet(sub);
            if sub == full {
                done = true;
            } else {
                sub = (sub.wrapping_sub(full)) & full;
            }
            Some(out)
        })
    }

    /// All subsets of the given size.
    pub fn subsets_of_size(&self, size: usize) -> Vec<VertexSet> {
        let labels = self.to_vec();
        if size > labels.len() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut pick = vec![0usize; size];
        fn rec(labels: &[u32], size: usize, start: usize, pick: &mut Vec<usize>, depth: usize, out: &mut Vec<VertexSet>) {
            if depth == size {
                out.push(VertexSet::new(pick[..size].iter().map(|&i| labels[i])));
                return;
            }
            for i in start..labels.len() {
                pick[depth] = i;
                rec(labels, size, i + 1, pick, depth + 1, out);
            }
        }
        rec(&labels, size, 0, &mut pick, 0, &mut out);
        out
    }

    pub(crate) fn bits(&self) -> u128 {
        self.0
    }

    pub(crate) fn from_bits(bits: u128) -> VertexSet {
        VertexSet(bits)
    }
}

impl FromIterator<u32> for VertexSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// An immutable simplicial complex given by its facets (maximal faces).
///
/// The facet list is deduplicated, domination-free, and sorted, so two
/// complexes are equal as values exactly when they have the same faces.
/// The complex `{∅}` (no vertices, only the empty face) can arise from
/// operations such as the link of a facet; it has dimension −1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    facets: Vec<VertexSet>,
    vertices: VertexSet,
    dim: i32,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex[dim {}; ", self.dim)?;
        for (i, fac) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{fac}")?;
        }
        write!(f, "]")
    }
}

impl SimplicialComplex {
    /// The complex generated by the given facets, with duplicates collapsed
    /// and dominated sets removed. Errors on an empty facet list or an empty
    /// member set.
    pub fn from_facets<I: IntoIterator<Item = VertexSet>>(facets: I) -> Result<SimplicialComplex, ComplexError> {
        let raw: Vec<VertexSet> = facets.into_iter().collect();
        if raw.is_empty() {
            return Err(ComplexError::Empty);
        }
        if raw.iter().any(|f| f.is_empty()) {
            return Err(ComplexError::EmptyFacet);
        }
        Ok(Self::generate(raw))
    }

    /// Like `from_facets` but accepts label slices, for readable call sites.
    pub fn from_facet_labels(facets: &[&[u32]]) -> Result<SimplicialComplex, ComplexError> {
        let mut sets = Vec::with_capacity(facets.len());
        for f in facets {
            sets.push(VertexSet::checked(f.iter().copied())?);
        }
        Self::from_facets(sets)
    }

    /// Internal constructor that permits the `{∅}` complex.
    pub(crate) fn generate(mut raw: Vec<VertexSet>) -> SimplicialComplex {
        raw.sort_by_key(|a| a.to_vec());
        raw.dedup();
        let mut facets: Vec<VertexSet> = Vec::with_capacity(raw.len());
        for f in &raw {
            if !raw.iter().any(|g| f != g && f.is_subset(g)) {
                facets.push(*f);
            }
        }
        let mut vertices = VertexSet::EMPTY;
        let mut dim = -1i32;
        for f in &facets {
            vertices = vertices.union(f);
            dim = dim.max(f.len() as i32 - 1);
        }
        SimplicialComplex { facets, vertices, dim }
    }

    pub fn is_trivial(&self) -> bool {
        self.dim == -1
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn dim(&self) -> i32 {
        self.dim
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.len() as i32 - 1 == self.dim)
    }

    /// True iff `face` is contained in some facet. The empty set is always a face.
    pub fn is_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// The faces that stay faces after adjoining `face`; generated by the
    /// facets containing `face`. Errors when `face` is not a face.
    pub fn star(&self, face: VertexSet) -> Result<SimplicialComplex, ComplexError> {
        if face.is_empty() {
            return Ok(self.clone());
        }
        let facets: Vec<VertexSet> = self.facets.iter().copied().filter(|f| face.is_subset(f)).collect();
        if facets.is_empty() {
            return Err(ComplexError::NotAFace(face));
        }
        Ok(Self::generate(facets))
    }

    /// The link of `face`: all faces disjoint from it whose union with it is
    /// a face. `link(∅)` is the complex itself.
    pub fn link(&self, face: VertexSet) -> Result<SimplicialComplex, ComplexError> {
        if face.is_empty() {
            return Ok(self.clone());
        }
        let facets: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|f| face.is_subset(f))
            .map(|f| f.difference(&face))
            .collect();
        if facets.is_empty() {
            return Err(ComplexError::NotAFace(face));
        }
        Ok(Self::generate(facets))
    }

    /// Join with a complex on a disjoint vertex set.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
        let overlap = self.vertices.intersection(&other.vertices);
        if !overlap.is_empty() {
            return Err(ComplexError::JoinOverlap(overlap));
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                facets.push(a.union(b));
            }
        }
        Ok(Self::generate(facets))
    }

    /// The induced subcomplex on `w`: all faces contained in `w`.
    pub fn induced(&self, w: VertexSet) -> SimplicialComplex {
        let facets: Vec<VertexSet> = self.facets.iter().map(|f| f.intersection(&w)).collect();
        Self::generate(facets)
    }

    /// All faces of dimension at most `k`.
    pub fn skeleton(&self, k: i32) -> SimplicialComplex {
        assert!(k >= 0, "skeleton dimension must be non-negative");
        let size = (k + 1) as usize;
        let mut facets = Vec::new();
        for f in &self.facets {
            if f.len() <= size {
                facets.push(*f);
            } else {
                facets.extend(f.subsets_of_size(size));
            }
        }
        Self::generate(facets)
    }

    /// All faces, the empty face included, grouped by cardinality:
    /// `faces_by_size()[s]` holds the faces with `s` vertices.
    pub fn faces_by_size(&self) -> Vec<Vec<VertexSet>> {
        let mut seen: Vec<HashSet<u128>> = vec![HashSet::new(); (self.dim + 2) as usize];
        for f in &self.facets {
            for sub in f.subsets() {
                seen[sub.len()].insert(sub.bits());
            }
        }
        seen.into_iter()
            .map(|level| {
                let mut v: Vec<VertexSet> = level.into_iter().map(VertexSet::from_bits).collect();
                v.sort_by_key(|s| s.to_vec());
                v
            })
            .collect()
    }

    /// Number of faces in each cardinality, `[f_{-1}, f_0, ..., f_dim]`.
    pub fn face_counts(&self) -> Vec<u64> {
        self.faces_by_size().iter().map(|level| level.len() as u64).collect()
    }

    /// Reduced Euler characteristic `-1 + f_0 - f_1 + ...`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        let mut chi = 0i64;
        for (s, count) in self.face_counts().iter().enumerate() {
            let sign = if s % 2 == 0 { -1 } else { 1 };
            chi += sign * *count as i64;
        }
        chi
    }

    /// The minimal non-faces: sets that are not faces although every proper
    /// subset is. Sorted by cardinality, then lexicographically; sizes range
    /// over `2..=dim+2`.
    pub fn missing_faces(&self) -> Vec<VertexSet> {
        let by_size = self.faces_by_size();
        let mut missing = Vec::new();
        for s in 2..=(self.dim + 2) as usize {
            let prev: HashSet<u128> = by_size[s - 1].iter().map(|f| f.bits()).collect();
            let cur: HashSet<u128> = if s < by_size.len() {
                by_size[s].iter().map(|f| f.bits()).collect()
            } else {
                HashSet::new()
            };
            let mut level: Vec<VertexSet> = Vec::new();
            // Every missing face F satisfies: F minus its largest label is a face.
            for g in &by_size[s - 1] {
                let gmax = g.max_label().unwrap_or(0);
                for v in self.vertices.iter() {
                    if v <= gmax || g.contains(v) {
                        continue;
                    }
                    let cand = g.insert(v);
                    if cur.contains(&cand.bits()) {
                        continue;
                    }
                    if cand.iter().all(|u| prev.contains(&cand.remove(u).bits())) {
                        level.push(cand);
                    }
                }
            }
            level.sort_by_key(|f| f.to_vec());
            level.dedup();
            missing.extend(level);
        }
        missing
    }

    /// Counts of missing faces by dimension: `m_vector()[i-1]` is the number
    /// of missing `i`-faces, for `i = 1..=dim+1`.
    pub fn m_vector(&self) -> Vec<u64> {
        let d = (self.dim + 1) as usize;
        let mut m = vec![0u64; d];
        for f in self.missing_faces() {
            m[f.len() - 2] += 1;
        }
        m
    }

    /// Rebuilds the unique complex on `vertices` whose missing faces are
    /// exactly `missing`. Inverse of [`SimplicialComplex::missing_faces`].
    pub fn from_missing_faces(vertices: VertexSet, missing: &[VertexSet]) -> Result<SimplicialComplex, ComplexError> {
        if vertices.is_empty() {
            return Err(ComplexError::Empty);
        }
        // Faces are the subsets of `vertices` containing no missing set.
        let mut facets: Vec<VertexSet> = Vec::new();
        for sub in vertices.subsets() {
            if missing.iter().any(|m| m.is_subset(&sub)) {
                continue;
            }
            facets.push(sub);
        }
        Self::from_facets(facets.into_iter().filter(|f| !f.is_empty()))
    }

    /// Relabels vertices through `map` (old label → new label), which must be
    /// injective on the vertex set.
    pub fn relabel(&self, map: &dyn Fn(u32) -> u32) -> Result<SimplicialComplex, ComplexError> {
        let mut facets = Vec::with_capacity(self.facets.len());
        for f in &self.facets {
            let g = VertexSet::checked(f.iter().map(map))?;
            if g.len() != f.len() {
                return Err(ComplexError::RelabelNotInjective);
            }
            facets.push(g);
        }
        let out = Self::generate(facets);
        if out.facets.len() != self.facets.len() {
            return Err(ComplexError::RelabelNotInjective);
        }
        Ok(out)
    }

    /// True when the 1-skeleton is connected (single-vertex complexes count
    /// as connected).
    pub fn is_connected(&self) -> bool {
        let verts = self.vertices.to_vec();
        if verts.len() <= 1 {
            return true;
        }
        let index = |v: u32| verts.binary_search(&v).unwrap();
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let r = find(parent, parent[i]);
                parent[i] = r;
            }
            parent[i]
        }
        for f in &self.facets {
            let vs = f.to_vec();
            for w in vs.windows(2) {
                let (a, b) = (find(&mut parent, index(w[0])), find(&mut parent, index(w[1])));
                parent[a] = b;
            }
        }
        let root = find(&mut parent, 0);
        (1..verts.len()).all(|i| find(&mut parent, i) == root)
    }

    /// Ridges (codimension-one faces of facets) with the number of facets
    /// containing each; only meaningful for pure complexes.
    pub fn ridge_incidences(&self) -> Vec<(VertexSet, usize)> {
        let mut counts: std::collections::HashMap<u128, usize> = std::collections::HashMap::new();
        for f in &self.facets {
            for v in f.iter() {
                *counts.entry(f.remove(v).bits()).or_insert(0) += 1;
            }
        }
        let mut out: Vec<(VertexSet, usize)> = counts
            .into_iter()
            .map(|(bits, c)| (VertexSet::from_bits(bits), c))
            .collect();
        out.sort_by_key(|(f, _)| f.to_vec());
        out
    }
}

/// A pure full-dimensional subcomplex of a sphere, split into its boundary
/// and interior parts.
#[derive(Clone, Debug)]
pub struct BallDecomposition {
    pub ball: SimplicialComplex,
    /// Ridges lying in exactly one facet, downward-closed.
    pub boundary: SimplicialComplex,
    /// Nonempty faces of `ball` not in `boundary`, sorted by size then lex.
    pub interior_faces: Vec<VertexSet>,
    /// Interior faces containing no other interior face.
    pub minimal_interior_faces: Vec<VertexSet>,
}

impl BallDecomposition {
    /// No interior faces of dimension at most `dim(ball) - i - 1`.
    pub fn is_i_stacked(&self, i: i32) -> bool {
        let d = self.ball.dim();
        self.interior_faces.iter().all(|f| f.len() as i32 - 1 > d - i - 1)
    }

    /// All minimal interior faces have dimension exactly `dim(ball) - i`.
    pub fn is_exactly_i_stacked(&self, i: i32) -> bool {
        let d = self.ball.dim();
        self.minimal_interior_faces.iter().all(|f| f.len() as i32 - 1 == d - i)
    }
}

/// Splits a pure complex with every ridge in at most two facets into its
/// boundary complex and interior faces. Errors on non-pure input, a ridge in
/// three or more facets, or input with no boundary ridge at all.
pub fn ball_decomposition(ball: &SimplicialComplex) -> Result<BallDecomposition, ComplexError> {
    if !ball.is_pure() {
        return Err(ComplexError::NotPure);
    }
    let mut boundary_ridges = Vec::new();
    for (ridge, count) in ball.ridge_incidences() {
        match count {
            1 => boundary_ridges.push(ridge),
            2 => {}
            n => return Err(ComplexError::RidgeMultiplicity(ridge, n)),
        }
    }
    if boundary_ridges.is_empty() {
        return Err(ComplexError::NoBoundary);
    }
    let boundary = SimplicialComplex::generate(boundary_ridges);
    let mut interior: Vec<VertexSet> = Vec::new();
    for level in ball.faces_by_size().iter().skip(1) {
        for f in level {
            if !boundary.is_face(*f) {
                interior.push(*f);
            }
        }
    }
    interior.sort_by_key(|f| (f.len(), f.to_vec()));
    // Interior faces form an up-set, so minimality only needs the
    // codimension-one subsets checked.
    let interior_set: HashSet<u128> = interior.iter().map(|f| f.bits()).collect();
    let minimal: Vec<VertexSet> = interior
        .iter()
        .copied()
        .filter(|f| f.iter().all(|v| !interior_set.contains(&f.remove(v).bits())))
        .collect();
    Ok(BallDecomposition {
        ball: ball.clone(),
        boundary,
        interior_faces: interior,
        minimal_interior_faces: minimal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{octahedron, simplex_boundary};

    fn vs(labels: &[u32]) -> VertexSet {
        VertexSet::new(labels.iter().copied())
    }

    #[test]
    fn from_facets_dedups_and_dominates() {
        let k = SimplicialComplex::from_facet_labels(&[&[1, 2], &[2, 3], &[1, 2]]).unwrap();
        assert_eq!(k.facets(), &[vs(&[1, 2]), vs(&[2, 3])]);

        let k = SimplicialComplex::from_facet_labels(&[&[1, 2, 3], &[1, 2]]).unwrap();
        assert_eq!(k.facets(), &[vs(&[1, 2, 3])]);
        assert_eq!(k.dim(), 2);
    }

    #[test]
    fn from_facets_rejects_empty() {
        assert!(matches!(
            SimplicialComplex::from_facets(std::iter::empty()),
            Err(ComplexError::Empty)
        ));
        assert!(matches!(
            SimplicialComplex::from_facets([VertexSet::EMPTY]),
            Err(ComplexError::EmptyFacet)
        ));
    }

    #[test]
    fn face_membership() {
        let k = simplex_boundary(3, &[1, 2, 3, 4]);
        assert!(k.is_face(vs(&[1, 2, 3])));
        assert!(!k.is_face(vs(&[1, 2, 3, 4])));
        assert!(k.is_face(VertexSet::EMPTY));
    }

    #[test]
    fn octahedron_link_is_4_cycle() {
        let oct = octahedron();
        let lk = oct.link(VertexSet::singleton(1)).unwrap();
        assert_eq!(lk.dim(), 1);
        assert_eq!(lk.facets().len(), 4);
        assert_eq!(lk.vertex_count(), 4);
        assert!(lk.is_pure());
        for (_, c) in lk.ridge_incidences() {
            assert_eq!(c, 2);
        }
    }

    #[test]
    fn link_of_empty_set_is_identity() {
        let oct = octahedron();
        assert_eq!(oct.link(VertexSet::EMPTY).unwrap(), oct);
    }

    #[test]
    fn join_of_two_point_pairs_is_4_cycle() {
        let a = SimplicialComplex::from_facet_labels(&[&[1], &[2]]).unwrap();
        let b = SimplicialComplex::from_facet_labels(&[&[3], &[4]]).unwrap();
        let j = a.join(&b).unwrap();
        assert_eq!(
            j.facets(),
            &[vs(&[1, 3]), vs(&[1, 4]), vs(&[2, 3]), vs(&[2, 4])]
        );
        assert!(a.join(&a).is_err());
    }

    #[test]
    fn induced_on_diagonal_is_two_points() {
        let oct = octahedron();
        // Vertices 1 and 2 are antipodal in the standard labeling.
        let ind = oct.induced(vs(&[1, 2]));
        assert_eq!(ind.facets(), &[vs(&[1]), vs(&[2])]);
    }

    #[test]
    fn skeleton_of_simplex_boundary_is_complete_graph() {
        let s4 = simplex_boundary(4, &[1, 2, 3, 4, 5]);
        let g = s4.skeleton(1);
        assert_eq!(g.facets().len(), 10);
        assert!(g.is_pure());
        assert_eq!(g.dim(), 1);
    }

    #[test]
    fn octahedron_missing_faces_are_three_diagonals() {
        let oct = octahedron();
        let missing = oct.missing_faces();
        assert_eq!(missing, vec![vs(&[1, 2]), vs(&[3, 4]), vs(&[5, 6])]);
        assert_eq!(oct.m_vector(), vec![3, 0, 0]);
    }

    #[test]
    fn simplex_boundary_has_one_missing_face() {
        for d in 2..=6 {
            let labels: Vec<u32> = (1..=d as u32 + 1).collect();
            let k = simplex_boundary(d, &labels);
            let missing = k.missing_faces();
            assert_eq!(missing.len(), 1);
            assert_eq!(missing[0], VertexSet::new(labels.iter().copied()));
        }
    }

    #[test]
    fn missing_face_round_trip() {
        for k in [
            octahedron(),
            simplex_boundary(3, &[1, 2, 3, 4]),
            SimplicialComplex::from_facet_labels(&[&[1, 2, 3], &[2, 3, 4], &[4, 5]]).unwrap(),
        ] {
            let rebuilt = SimplicialComplex::from_missing_faces(k.vertices(), &k.missing_faces()).unwrap();
            assert_eq!(rebuilt, k);
        }
    }

    #[test]
    fn star_link_face_count_relation() {
        // f_i(star(v)) counts faces containing v (link faces coned) plus the
        // faces of the link itself.
        let oct = octahedron();
        for v in oct.vertices().iter() {
            let star = oct.star(VertexSet::singleton(v)).unwrap();
            let link = oct.link(VertexSet::singleton(v)).unwrap();
            let fs = star.face_counts();
            let fl = link.face_counts();
            for s in 0..fs.len() {
                let from_link = fl.get(s).copied().unwrap_or(0) + fl.get(s.wrapping_sub(1)).copied().unwrap_or(0);
                let expect = if s == 0 { 1 } else { from_link };
                assert_eq!(fs[s], expect, "size {s}");
            }
        }
    }

    #[test]
    fn full_simplex_ball_decomposition() {
        let full = SimplicialComplex::from_facet_labels(&[&[1, 2, 3, 4]]).unwrap();
        let bd = ball_decomposition(&full).unwrap();
        assert_eq!(bd.boundary, simplex_boundary(3, &[1, 2, 3, 4]));
        assert_eq!(bd.minimal_interior_faces, vec![vs(&[1, 2, 3, 4])]);
        assert!(bd.is_exactly_i_stacked(0));
    }

    #[test]
    fn ball_decomposition_rejects_triple_ridge() {
        let k = SimplicialComplex::from_facet_labels(&[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]).unwrap();
        assert!(matches!(
            ball_decomposition(&k),
            Err(ComplexError::RidgeMultiplicity(_, 3))
        ));
    }

    #[test]
    fn ball_decomposition_rejects_closed_complex() {
        assert!(matches!(
            ball_decomposition(&octahedron()),
            Err(ComplexError::NoBoundary)
        ));
    }

    #[test]
    fn interior_xor_boundary() {
        let ball = SimplicialComplex::from_facet_labels(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]]).unwrap();
        let bd = ball_decomposition(&ball).unwrap();
        for level in ball.faces_by_size().iter().skip(1) {
            for f in level {
                let interior = bd.interior_faces.contains(f);
                let boundary = bd.boundary.is_face(*f);
                assert!(interior ^ boundary, "face {f}");
            }
        }
    }

    #[test]
    fn subset_enumeration_sizes() {
        let s = vs(&[2, 5, 7, 11]);
        assert_eq!(s.subsets().count(), 16);
        assert_eq!(s.subsets_of_size(2).len(), 6);
        assert_eq!(s.max_label(), Some(11));
        assert_eq!(s.min_label(), Some(2));
    }
}
