//! Rhombic tilings of Elnitsky polygons and their forced perimeter tiles.
//!
//! A permutation `w` determines a polygon `X(w)` whose rhombic tilings are in
//! bijection with the commutation classes of reduced words of `w`. This crate
//! enumerates those tilings class-first, embeds them on an exact integer
//! lattice, detects perimeter tiles of the four types, and compares the
//! brute-force forced sets against closed-form 321-pattern predicates.
//!
//! The crate is `no_std` and only needs `alloc`. IO, file formats and the
//! command line live in the `elnitsky-cli` companion crate.
//!
//! Module map:
//!
//! * [`perm`]: permutations, inversions, extrema and 321 machinery.
//! * [`words`]: reduced words and commutation classes.
//! * [`tiling`]: the polygon embedding, tiling enumeration and perimeter detection.
//! * [`forced`]: forced and α-forced perimeter tiles, plus the verification harness.
//! * [`optimal`]: permutations with maximally many forced right-perimeter tiles.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub mod forced;
pub mod optimal;
pub mod perm;
pub mod tiling;
pub mod words;

pub use error::{Error, Result};
pub use forced::{ForcedReport, Theorem, VerifyReport};
pub use perm::{Permutation, ValuePair};
pub use tiling::{PerimeterType, PolygonEmbedding, Tile, Tiling};
pub use words::{CommutationClass, ReducedWord};

/// Caps guarding every exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of tilings (commutation classes) enumerated for one permutation.
    pub max_tilings: usize,
    /// Maximum number of reduced words materialized by [`words::reduced_words`].
    pub max_words: usize,
    /// Maximum number of permutations produced by the enumerations in [`optimal`].
    pub max_permutations: usize,
}

impl Limits {
    pub const DEFAULT_MAX_TILINGS: usize = 1_000_000;
    pub const DEFAULT_MAX_WORDS: usize = 10_000_000;
    pub const DEFAULT_MAX_PERMUTATIONS: usize = 1_000_000;

    pub fn with_max_tilings(mut self, max_tilings: usize) -> Self {
        self.max_tilings = max_tilings;
        self
    }

    pub fn with_max_words(mut self, max_words: usize) -> Self {
        self.max_words = max_words;
        self
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_tilings: Self::DEFAULT_MAX_TILINGS,
            max_words: Self::DEFAULT_MAX_WORDS,
            max_permutations: Self::DEFAULT_MAX_PERMUTATIONS,
        }
    }
}
