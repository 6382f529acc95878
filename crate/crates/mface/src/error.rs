//! Error types shared across the crate.

use thiserror::Error;

use crate::complex::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("empty complex not supported")]
    Empty,
    #[error("empty facet not supported")]
    EmptyFacet,
    #[error("vertex label {0} outside supported range 1..=128")]
    LabelOutOfRange(u32),
    #[error("{0} is not a face")]
    NotAFace(VertexSet),
    #[error("vertex sets overlap in join: {0}")]
    JoinOverlap(VertexSet),
    #[error("complex is not pure")]
    NotPure,
    #[error("not a pseudomanifold with boundary: ridge {0} lies in {1} facets")]
    RidgeMultiplicity(VertexSet, usize),
    #[error("complex has no boundary ridge")]
    NoBoundary,
    #[error("relabeling map is not injective on the vertex set")]
    RelabelNotInjective,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("g-vector must start with g_0 = 1, got {0}")]
    BadLeadingG(i128),
    #[error("g-vector entry g_{index} = {value} is negative")]
    NegativeG { index: usize, value: i128 },
    #[error("g-vector has {got} entries but a {d}-dimensional profile needs {need}")]
    BadGLength { got: usize, need: usize, d: usize },
    #[error("dimension parameter d = {d} not in {{2k, 2k+1}} for k = {k}")]
    BadDimensionForK { d: usize, k: usize },
    #[error("edge cap is only defined for d in {{4, 5}}, got {0}")]
    BadEdgeCapDimension(usize),
    #[error("stackedness criteria disagree at i = {i}: g_{ip1} = {g} but m_{di} = {m} vs g_i = {gi}")]
    StackednessMismatch { i: usize, ip1: usize, g: i128, di: usize, m: i128, gi: i128 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("flip sides must partition d+1 vertices: |A| = {a}, |B| = {b}, d = {d}")]
    BadFlipSizes { a: usize, b: usize, d: usize },
    #[error("flip sides are not disjoint: {0}")]
    FlipOverlap(VertexSet),
    #[error("the subcomplex induced on {0} is not the required join of a simplex with a simplex boundary")]
    NotInduced(VertexSet),
    #[error("flip result is not a pseudomanifold")]
    FlipBroken,
    #[error("shelling input is not pure")]
    ShellingNotPure,
    #[error("facet {facet} (position {position}) does not meet the earlier facets in a pure codimension-one complex")]
    ShellingStep { position: usize, facet: VertexSet },
    #[error("ball is not a subcomplex of the host: facet {0} missing")]
    BallNotInHost(VertexSet),
    #[error("ball and host dimensions differ: {ball} vs {host}")]
    BallDimension { ball: i32, host: i32 },
    #[error("vertex {0} already used in the host complex")]
    VertexInUse(u32),
    #[error("complement of the ball is empty")]
    EmptyComplement,
    #[error("sewing output failed the sphere check: {0}")]
    SewNotSphere(String),
    #[error("sewing output is not {0}-neighborly although the ball hypotheses hold")]
    SewNotNeighborly(usize),
    #[error("flip sequence needs n >= 8, got {0}")]
    DeltaTooSmall(usize),
    #[error("flip sequence verification failed at step {index}: {reason}")]
    DeltaStep { index: usize, reason: String },
    #[error("generator produced an empty facet family")]
    EmptyFamily,
    #[error("cyclic boundary needs n > d >= 2, got d = {d}, n = {n}")]
    BadCyclicParams { d: usize, n: usize },
    #[error("the higher ladder needs k >= 3, got {0}")]
    LadderNeedsK3(usize),
    #[error("ball parameter k = {k} outside 2..=n-4 for n = {n}")]
    BallParameter { k: usize, n: usize },
    #[error("no 2-sphere on {n} vertices has {m2} missing triangles{hint}")]
    Inadmissible2Sphere { n: usize, m2: u64, hint: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaleError {
    #[error("diagram must have at least 4 points, got {0}")]
    TooFewPoints(usize),
    #[error("diagram is not simplicial: slots at {0} and {1} are antipodal")]
    AntipodalSlots(String, String),
    #[error("duplicate vertex label {0} in diagram")]
    DuplicateLabel(u32),
    #[error("no diagram point carries label {0}")]
    UnknownLabel(u32),
    #[error("move would change the diameter order: crossing the diameter through {0}")]
    IllegalMove(String),
    #[error("points are not adjacent: {0} lies between them")]
    NotAdjacent(String),
    #[error("merge blocked by the diameter through {0}")]
    SeparatingDiameter(String),
    #[error("q_k is only defined for odd k >= 1, got {0}")]
    EvenK(usize),
    #[error("diagram does not describe a polytope boundary: {0}")]
    InvalidDiagram(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("input is not a verified sphere: {0}")]
    NotASphere(String),
    #[error("certificate rules need a sphere of odd dimension 2k-1 with k >= 2, got dimension {0}")]
    BadDimension(i32),
    #[error("need at least {need} vertices, got {got}")]
    TooFewVertices { need: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error("edge list must hold {k} pairwise disjoint edges, got {got}")]
    BadEdgeCount { k: usize, got: usize },
    #[error("edges are not pairwise disjoint")]
    EdgesOverlap,
    #[error("prefix union F_{j} = {face} is not a face")]
    PrefixNotFace { j: usize, face: VertexSet },
    #[error("link of F_{j} is not a verified sphere: {reason}")]
    LinkNotSphere { j: usize, reason: String },
    #[error("link of F_{j} is not {degree}-neighborly on the complementary vertex set")]
    LinkNotNeighborly { j: usize, degree: usize },
    #[error("link of F_{j} has vertex set {got} instead of the complement {want}")]
    LinkVertexSet { j: usize, got: VertexSet, want: VertexSet },
    #[error("link of F_{j} has a missing face of dimension {found} != {want}")]
    LinkMissingDimension { j: usize, found: i32, want: i32 },
    #[error("ball D_{j} is not {degree}-neighborly on the link vertex set")]
    DNotNeighborly { j: usize, degree: usize },
    #[error("ball D_{j} is not exactly {j}-stacked")]
    DNotExactlyStacked { j: usize },
    #[error("ball D_{j} is not induced on its ({jm1})-skeleton in the link")]
    DNotInduced { j: usize, jm1: i32 },
    #[error("ball B_{j} is not {degree}-neighborly on the link vertex set")]
    BNotNeighborly { j: usize, degree: usize },
    #[error("ball B_{j} is not exactly {jp1}-stacked")]
    BNotExactlyStacked { j: usize, jp1: usize },
    #[error("ball B_{j} is not induced on its {j}-skeleton in the link")]
    BNotInduced { j: usize },
    #[error("sewn sphere has a missing face of dimension {found} != {want}")]
    OutputMissingDimension { found: i32, want: i32 },
    #[error("sewn sphere is not {0}-neighborly")]
    OutputNotNeighborly(usize),
    #[error("label {0} exceeds the supported range; relabel the seed lower")]
    LabelOverflow(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("not a facet-list document: {0}")]
    BadShape(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}
