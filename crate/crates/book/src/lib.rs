//! The guide under `book/`, one module per chapter, so `cargo test` runs
//! every listing as a doctest.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/fields_and_forms.md")]
pub mod fields_and_forms {}
#[doc = include_str!("../../../book/src/weights.md")]
pub mod weights {}
#[doc = include_str!("../../../book/src/smoothness.md")]
pub mod smoothness {}
#[doc = include_str!("../../../book/src/grassmannian_mu.md")]
pub mod grassmannian_mu {}
#[doc = include_str!("../../../book/src/hilbert_mu.md")]
pub mod hilbert_mu {}
#[doc = include_str!("../../../book/src/alpha_degree_inequality.md")]
pub mod alpha_degree_inequality {}
#[doc = include_str!("../../../book/src/degeneracy_locus.md")]
pub mod degeneracy_locus {}
#[doc = include_str!("../../../book/src/command_line.md")]
pub mod command_line {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
