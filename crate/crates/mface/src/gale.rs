//! Combinatorial Gale diagrams of simplicial `d`-polytopes with `d + 3`
//! vertices: labeled points at exact rational positions on the circle,
//! face extraction by the origin-in-relative-interior test, the two
//! face-lattice-preserving moves (slot rotation and adjacent-slot merging),
//! and the double-point polygon diagrams yielding the vertex-minimal
//! neighborly odd spheres whose missing faces sit in one dimension.
//!
//! Positions are fractions of a full revolution, so every predicate
//! (antipode placement, semicircle counts, diameter order) is exact integer
//! arithmetic; no floating point anywhere.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_rational::Ratio;
use num_traits::Zero;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::GaleError;
use crate::homology::{verify_sphere, VerifyLevel};

/// A position on the circle, in fractions of a revolution, normalized to
/// `[0, 1)`.
pub type Turn = Ratio<i64>;

pub fn turn(num: i64, den: i64) -> Turn {
    normalize(Ratio::new(num, den))
}

fn normalize(t: Turn) -> Turn {
    t - t.floor()
}

fn half() -> Turn {
    Ratio::new(1, 2)
}

/// Cyclic distance from `a` forward to `b`.
fn arc(a: Turn, b: Turn) -> Turn {
    normalize(b - a)
}

/// One diagram point: a polytope vertex label at a circle position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GalePoint {
    pub label: u32,
    pub turn: Turn,
}

/// Where a slot's antipodal direction falls relative to the slot order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntipodePlacement {
    /// Exactly at another slot (impossible in a simplicial diagram).
    AtSlot(usize),
    /// Strictly inside the arc between two cyclically adjacent slots.
    Between(usize, usize),
}

/// A labeled multiset of directions on the circle: the Gale diagram of a
/// simplicial `d`-polytope with `d + 3` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaleCircle {
    points: Vec<GalePoint>,
}

impl GaleCircle {
    /// Builds and validates a diagram: at least four points, distinct
    /// labels, and no two slots antipodal (the simpliciality condition).
    pub fn new(points: Vec<(u32, Turn)>) -> Result<GaleCircle, GaleError> {
        if points.len() < 4 {
            return Err(GaleError::TooFewPoints(points.len()));
        }
        let mut pts: Vec<GalePoint> = points
            .into_iter()
            .map(|(label, t)| GalePoint { label, turn: normalize(t) })
            .collect();
        pts.sort_by_key(|p| (p.turn, p.label));
        for pair in pts.iter().combinations(2) {
            if pair[0].label == pair[1].label {
                return Err(GaleError::DuplicateLabel(pair[0].label));
            }
        }
        let circle = GaleCircle { points: pts };
        let slots = circle.slot_turns();
        for (i, &a) in slots.iter().enumerate() {
            for &b in &slots[i + 1..] {
                if arc(a, b) == half() {
                    return Err(GaleError::AntipodalSlots(format!("{a}"), format!("{b}")));
                }
            }
        }
        Ok(circle)
    }

    pub fn points(&self) -> &[GalePoint] {
        &self.points
    }

    pub fn labels(&self) -> VertexSet {
        VertexSet::new(self.points.iter().map(|p| p.label))
    }

    /// Distinct slot positions in cyclic order.
    pub fn slot_turns(&self) -> Vec<Turn> {
        self.points.iter().map(|p| p.turn).dedup().collect()
    }

    /// Slot positions with the labels they carry; multiplicity is the label
    /// count.
    pub fn slots(&self) -> Vec<(Turn, Vec<u32>)> {
        let mut map: BTreeMap<Turn, Vec<u32>> = BTreeMap::new();
        for p in &self.points {
            map.entry(p.turn).or_default().push(p.label);
        }
        map.into_iter().collect()
    }

    /// Where the antipode of slot `index` falls in the slot order.
    pub fn antipode_placement(&self, index: usize) -> AntipodePlacement {
        let slots = self.slot_turns();
        let target = normalize(slots[index] + half());
        for (i, &s) in slots.iter().enumerate() {
            if s == target {
                return AntipodePlacement::AtSlot(i);
            }
        }
        for i in 0..slots.len() {
            let next = (i + 1) % slots.len();
            let span = arc(slots[i], slots[next]);
            let offset = arc(slots[i], target);
            if offset > Ratio::zero() && (offset < span || slots.len() == 1) {
                return AntipodePlacement::Between(i, next);
            }
        }
        // A single slot: the antipode is in the lone arc.
        AntipodePlacement::Between(0, 0)
    }

    /// Label pairs sitting at almost-antipodal slots: slot `t` is almost
    /// antipodal to slot `s` when the antipode of `s` falls in an open arc
    /// with `t` as an endpoint. This is exactly the arc relation and nothing
    /// more general.
    pub fn almost_antipodal_label_pairs(&self) -> Vec<(u32, u32)> {
        let slots = self.slots();
        let mut pairs = Vec::new();
        for (index, (_, labels)) in slots.iter().enumerate() {
            if let AntipodePlacement::Between(i, j) = self.antipode_placement(index) {
                for &endpoint in &[i, j] {
                    if endpoint == index {
                        continue;
                    }
                    for &a in labels {
                        for &b in &slots[endpoint].1 {
                            if a < b {
                                pairs.push((a, b));
                            }
                        }
                    }
                }
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        pairs
    }

    /// The origin-in-relative-interior test for the sub-multiset of points
    /// carrying the given labels: true when the selected directions either
    /// span a full antipodal pair on a line, or leave no cyclic gap of half
    /// a revolution or more.
    pub fn origin_in_relint(&self, labels: VertexSet) -> bool {
        let dirs: Vec<Turn> = self
            .points
            .iter()
            .filter(|p| labels.contains(p.label))
            .map(|p| p.turn)
            .dedup()
            .collect();
        relint_of_directions(&dirs)
    }

    /// True when the labels form the vertex set of a proper face of the
    /// polytope: the origin lies in the relative interior of the convex hull
    /// of the complementary points.
    pub fn is_face(&self, face: VertexSet) -> bool {
        self.origin_in_relint(self.labels().difference(&face))
    }

    /// Pairs a candidate vertex subset with the diagram's verdict on it.
    pub fn diagram_face(&self, vertex_subset: VertexSet) -> DiagramFace {
        DiagramFace { vertex_subset, is_face: self.is_face(vertex_subset) }
    }

    /// Boundary complex of the polytope the diagram describes: the facets
    /// are the maximal label sets whose complements capture the origin. The
    /// result is checked to be a closed pseudomanifold of the right
    /// dimension.
    pub fn faces_from_diagram(&self) -> Result<SimplicialComplex, GaleError> {
        let labels = self.labels().to_vec();
        let d = labels.len() - 3;
        let facets: Vec<VertexSet> = labels
            .iter()
            .combinations(d)
            .map(|c| VertexSet::new(c.into_iter().copied()))
            .filter(|f| self.is_face(*f))
            .collect();
        let complex = SimplicialComplex::from_facets(facets)
            .map_err(|e| GaleError::InvalidDiagram(e.to_string()))?;
        if complex.dim() != d as i32 - 1 || !complex.is_pure() {
            return Err(GaleError::InvalidDiagram(format!(
                "facet family has dimension {} instead of {}",
                complex.dim(),
                d - 1
            )));
        }
        verify_sphere(&complex, VerifyLevel::Quick)
            .map_err(|e| GaleError::InvalidDiagram(e.to_string()))?;
        Ok(complex)
    }

    /// The largest `t` such that every open semicircle holds at least `t`
    /// points counted with multiplicity. The polytope's neighborliness
    /// degree is exactly `t - 1`: removing `t - 1` points leaves every open
    /// semicircle inhabited, while a semicircle holding exactly `t` points
    /// names a `t`-set that is not a face.
    pub fn neighborliness(&self) -> usize {
        let mut best = usize::MAX;
        for t in self.slot_turns() {
            let mut side_a = 0usize;
            let mut side_b = 0usize;
            for p in &self.points {
                let offset = arc(t, p.turn);
                if offset > Ratio::zero() && offset < half() {
                    side_a += 1;
                } else if offset > half() {
                    side_b += 1;
                }
            }
            best = best.min(side_a).min(side_b);
        }
        if best == usize::MAX {
            0
        } else {
            best
        }
    }

    /// All diameter marks except those of the slot at `skip`: slot positions
    /// and their antipodes, each tagged with the slot owning the diameter.
    /// The set is closed under the half-revolution shift, so a crossing by
    /// the moving slot's antipode shows up as a crossing by the slot itself.
    fn marks_excluding(&self, skip: Option<Turn>) -> Vec<(Turn, Turn)> {
        let mut marks = Vec::new();
        for s in self.slot_turns() {
            if Some(s) == skip {
                continue;
            }
            marks.push((s, s));
            marks.push((normalize(s + half()), s));
        }
        marks
    }

    /// First foreign mark strictly inside the arc from `a` to `b`, if any.
    fn blocking_mark(marks: &[(Turn, Turn)], a: Turn, b: Turn) -> Option<(Turn, Turn)> {
        let span = arc(a, b);
        marks
            .iter()
            .copied()
            .filter(|&(m, _)| {
                let off = arc(a, m);
                off > Ratio::zero() && off < span
            })
            .min_by_key(|&(m, _)| arc(a, m))
    }

    /// Moves every point of the slot at `from` to `to`. Legal when some
    /// sweep direction crosses no diameter mark of another slot, so the
    /// order of diameters is unchanged; the face lattice is then preserved
    /// exactly.
    pub fn rotate_slot(&self, from: Turn, to: Turn) -> Result<GaleCircle, GaleError> {
        let from = normalize(from);
        let to = normalize(to);
        if !self.slot_turns().contains(&from) {
            return Err(GaleError::InvalidDiagram(format!("no slot at {from}")));
        }
        if from == to {
            return Ok(self.clone());
        }
        let marks = self.marks_excluding(Some(from));
        if let Some(&(_, owner)) = marks.iter().find(|&&(m, _)| m == to) {
            return Err(GaleError::IllegalMove(format!("{owner}")));
        }
        let forward = Self::blocking_mark(&marks, from, to);
        let backward = Self::blocking_mark(&marks, to, from);
        if let (Some((_, owner)), Some(_)) = (forward, backward) {
            return Err(GaleError::IllegalMove(format!("{owner}")));
        }
        let points = self
            .points
            .iter()
            .map(|p| (p.label, if p.turn == from { to } else { p.turn }))
            .collect();
        GaleCircle::new(points)
    }

    /// Merges the slot at `b` into the slot at `a`, summing multiplicities.
    /// Legal when some arc between them holds no other point and crosses no
    /// diameter.
    pub fn merge_slots(&self, a: Turn, b: Turn) -> Result<GaleCircle, GaleError> {
        let a = normalize(a);
        let b = normalize(b);
        let slots = self.slot_turns();
        if !slots.contains(&a) || !slots.contains(&b) || a == b {
            return Err(GaleError::InvalidDiagram("merge endpoints must be two distinct slots".into()));
        }
        // Adjacency first: some arc between the two slots must be free of
        // other points; then that arc must not be crossed by any diameter.
        let slot_marks: Vec<(Turn, Turn)> = slots
            .iter()
            .filter(|&&s| s != a && s != b)
            .map(|&s| (s, s))
            .collect();
        let arcs: Vec<(Turn, Turn)> = [(a, b), (b, a)]
            .into_iter()
            .filter(|&(lo, hi)| Self::blocking_mark(&slot_marks, lo, hi).is_none())
            .collect();
        if arcs.is_empty() {
            let (m, _) = Self::blocking_mark(&slot_marks, a, b).expect("some slot lies between");
            return Err(GaleError::NotAdjacent(format!("the slot at {m}")));
        }
        let diameter_marks: Vec<(Turn, Turn)> = slots
            .iter()
            .map(|&s| (normalize(s + half()), s))
            .collect();
        let mut separator = None;
        for (lo, hi) in arcs {
            match Self::blocking_mark(&diameter_marks, lo, hi) {
                None => {
                    separator = None;
                    break;
                }
                Some((_, owner)) => separator = Some(owner),
            }
        }
        if let Some(owner) = separator {
            return Err(GaleError::SeparatingDiameter(format!("{owner}")));
        }
        let points = self
            .points
            .iter()
            .map(|p| (p.label, if p.turn == b { a } else { p.turn }))
            .collect();
        GaleCircle::new(points)
    }
}

/// The core predicate on a deduplicated cyclically sorted direction list:
/// the origin is a strictly positive combination of unit vectors in these
/// directions iff they are two antipodal directions (the collinear case, an
/// open segment through the origin) or at least three directions with every
/// cyclic gap strictly under half a revolution. Simplicial diagrams never
/// produce the collinear case, but the predicate resolves it by the
/// definition of relative interior for parity with the coordinate oracle.
pub fn relint_of_directions(dirs: &[Turn]) -> bool {
    match dirs.len() {
        0 | 1 => false,
        2 => arc(dirs[0], dirs[1]) == half(),
        _ => (0..dirs.len()).all(|i| {
            let next = dirs[(i + 1) % dirs.len()];
            arc(dirs[i], next) < half()
        }),
    }
}

/// A candidate vertex subset paired with the diagram's verdict on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramFace {
    pub vertex_subset: VertexSet,
    pub is_face: bool,
}

/// The double-point polygon construction: a neighborly `(2k+1)`-polytope
/// boundary on `2k + 4` vertices, all of whose missing faces have dimension
/// `k`, together with the distinguished pairwise-disjoint edge sequence its
/// sewing family starts from.
#[derive(Clone, Debug)]
pub struct QkSphere {
    pub sphere: SimplicialComplex,
    pub edges: Vec<VertexSet>,
    pub diagram: GaleCircle,
}

/// Builds the diagram with double points at the corners of a regular
/// `(2i+1)`-gon, `k = 2i - 1`, and extracts its boundary sphere and edge
/// sequence. Only odd `k` admit this double-point structure.
pub fn build_qk(k: usize) -> Result<QkSphere, GaleError> {
    if k.is_multiple_of(2) || k == 0 {
        return Err(GaleError::EvenK(k));
    }
    let i = k.div_ceil(2);
    let gon = (2 * i + 1) as i64;
    // Labels: x at index ell is 2(ell+i)+1, y is 2(ell+i)+2, ell in -i..=i.
    let x = |ell: i32| -> u32 { (2 * (ell + i as i32) + 1) as u32 };
    let y = |ell: i32| -> u32 { (2 * (ell + i as i32) + 2) as u32 };
    let mut points = Vec::new();
    for ell in -(i as i32)..=i as i32 {
        let t = turn(ell.rem_euclid(gon as i32) as i64, gon);
        points.push((x(ell), t));
        points.push((y(ell), t));
    }
    let diagram = GaleCircle::new(points)?;
    let sphere = diagram.faces_from_diagram()?;
    let ii = i as i32;
    let mut edges = vec![
        VertexSet::new([x(0), x(ii)]),
        VertexSet::new([y(0), x(-ii)]),
    ];
    let mut j = 1i32;
    while edges.len() < k {
        for pair in [
            [x(-j), y(ii - j + 1)],
            [x(j), y(-(ii - j + 1))],
            [y(-j), x(ii - j)],
            [y(j), x(-(ii - j))],
        ] {
            if edges.len() < k {
                edges.push(VertexSet::new(pair));
            }
        }
        j += 1;
    }
    edges.truncate(k);
    Ok(QkSphere { sphere, edges, diagram })
}
