//! The `ncwitt` book, one module per chapter.
//!
//! mdbook cannot run samples that depend on external crates, so the chapters
//! are pulled in here and `cargo test --doc` runs their code blocks.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/free-algebra.md")]
pub mod free_algebra {}

#[doc = include_str!("../../../book/src/circular-words.md")]
pub mod circular_words {}

#[doc = include_str!("../../../book/src/ghost-map.md")]
pub mod ghost_map {}

#[doc = include_str!("../../../book/src/x-group.md")]
pub mod x_group {}

#[doc = include_str!("../../../book/src/r-map.md")]
pub mod r_map {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
