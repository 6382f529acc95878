//! Exact combinatorics of simplicial spheres through their missing faces.
//!
//! The crate builds simplicial spheres (cyclic-polytope boundaries, flip
//! ladders, sewn families, Gale-diagram polytopes), computes their
//! f/h/g/m-vectors with integer arithmetic, evaluates the known inequalities
//! between those vectors as exact rationals, and produces machine-checkable
//! non-polytopality certificates for neighborly odd-dimensional spheres.
//!
//! Everything is deterministic and allocation-light: complexes are immutable
//! facet lists over bitmask vertex sets, and all operations are pure
//! functions, safe to fan out across threads.
//!
//! A guided tour with runnable examples lives in the `book/` directory of
//! the repository.

pub mod bounds;
pub mod canon;
pub mod certify;
pub mod complex;
pub mod error;
pub mod family;
pub mod gale;
pub mod generators;
pub mod homology;
pub mod io;
pub mod num;
pub mod profile;
pub mod report;
pub mod repro;
pub mod transforms;

pub use bounds::{BoundKind, BoundReport};
pub use complex::{ball_decomposition, BallDecomposition, SimplicialComplex, VertexSet};
pub use error::{BoundsError, CertifyError, ComplexError, FamilyError, FormatError, GaleError, TransformError};
pub use num::Rat;
pub use profile::{face_profile, FaceProfile};
