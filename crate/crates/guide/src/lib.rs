//! The book chapters, compiled so that every code listing runs as a doctest.
//!
//! Each chapter gets its own module, which makes a failing listing easy to
//! trace back to its file.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/scalars.md")]
pub mod scalars {}
#[doc = include_str!("../../../book/src/roots.md")]
pub mod roots {}
#[doc = include_str!("../../../book/src/oscillators.md")]
pub mod oscillators {}
#[doc = include_str!("../../../book/src/representations.md")]
pub mod representations {}
#[doc = include_str!("../../../book/src/root-vectors.md")]
pub mod root_vectors {}
#[doc = include_str!("../../../book/src/lweights.md")]
pub mod lweights {}
#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
