//! Doc-test harness for the book: each chapter is included as module
//! documentation, so `cargo test --doc -p mface-book` compiles and runs
//! every code block under `book/src`, keeping the text in sync with the
//! library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/complexes.md")]
pub mod complexes {}
#[doc = include_str!("../../../book/src/face-vectors.md")]
pub mod face_vectors {}
#[doc = include_str!("../../../book/src/bounds.md")]
pub mod bounds {}
#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
#[doc = include_str!("../../../book/src/certificates.md")]
pub mod certificates {}
#[doc = include_str!("../../../book/src/cyclic-and-flips.md")]
pub mod cyclic_and_flips {}
#[doc = include_str!("../../../book/src/gale-diagrams.md")]
pub mod gale_diagrams {}
#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
