//! Normalized noncommutative *-polynomials.
//!
//! Models the dense polynomial *-subalgebra of the unital free product of
//! `n` copies of C[0,1] (optionally one copy of C(T)), generated by the
//! coordinate letters `t_i`, the letters `w_i` standing for sqrt(1 - t_i),
//! and the unitary letter `u`. The fixed relations are
//!
//! * `w_i^2 = 1 - t_i`,
//! * `t_i w_i = w_i t_i` (letters of one copy commute),
//! * `u u* = u* u = 1` (powers of `u` merge),
//!
//! and nothing else. Every element has a unique normal form: a linear
//! combination of alternating syllable words, each syllable `t_i^a w_i^b`
//! with `b <= 1` or a nonzero power of `u`. The rewrite system never
//! increases the total letter count, so degree truncation is coherent.

mod basis;
mod poly;
mod rewrite;
mod text;
mod word;

pub use basis::{enumerate_basis, enumerate_words_in, LetterSet};
pub use poly::Poly;
pub use rewrite::normalize_random;
pub use text::{parse_poly, poly_string, word_string, ParseError};
pub use word::{CopyId, Letter, Syllable, Word};

use thiserror::Error;

/// Ambient configuration: how many C[0,1] copies, and whether the unitary
/// letter is available.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Config {
    copies: u8,
    unitary: bool,
}

impl Config {
    pub fn new(copies: u8, unitary: bool) -> Self {
        Config { copies, unitary }
    }

    pub fn copies(&self) -> u8 {
        self.copies
    }

    pub fn unitary(&self) -> bool {
        self.unitary
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("letter references copy {copy} but only {copies} copies are configured")]
    UnknownCopy { copy: u8, copies: u8 },
    #[error("unitary letter used but the unitary is not enabled")]
    UnitaryDisabled,
    #[error("unitary power must be nonzero")]
    ZeroUnitaryPower,
}
