//! Letters, syllables and normal-form words.

use super::{Config, PolyError};
use std::cmp::Ordering;

/// A primitive generator occurrence. Copy indices are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    /// Coordinate of the i-th C[0,1] copy.
    T(u8),
    /// sqrt(1 - t_i) in the i-th copy.
    W(u8),
    /// Nonzero power of the unitary generator of C(T).
    U(i32),
}

impl Letter {
    /// Total-order key realizing t1 < w1 < t2 < w2 < ... < u < u^-1.
    fn order_key(&self) -> (u8, u32) {
        match *self {
            Letter::T(i) => (0, 2 * u32::from(i)),
            Letter::W(i) => (0, 2 * u32::from(i) + 1),
            Letter::U(z) if z > 0 => (1, 0),
            Letter::U(_) => (1, 1),
        }
    }

    pub fn degree(&self) -> u32 {
        match *self {
            Letter::T(_) | Letter::W(_) => 1,
            Letter::U(z) => z.unsigned_abs(),
        }
    }

    pub fn validate(&self, cfg: &Config) -> Result<(), PolyError> {
        match *self {
            Letter::T(i) | Letter::W(i) => {
                if i == 0 || i > cfg.copies() {
                    Err(PolyError::UnknownCopy { copy: i, copies: cfg.copies() })
                } else {
                    Ok(())
                }
            }
            Letter::U(z) => {
                if !cfg.unitary() {
                    Err(PolyError::UnitaryDisabled)
                } else if z == 0 {
                    Err(PolyError::ZeroUnitaryPower)
                } else {
                    Ok(())
                }
            }
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

/// Which free factor a syllable belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CopyId {
    Var(u8),
    Unitary,
}

/// A maximal same-factor segment of a normal word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Syllable {
    /// `t_copy^t_pow * w_copy^w_pow` with `w_pow <= 1` and
    /// `(t_pow, w_pow) != (0, 0)`.
    Var { copy: u8, t_pow: u32, w_pow: u8 },
    /// `u^z` with `z != 0`.
    Unitary { z: i32 },
}

impl Syllable {
    pub fn degree(&self) -> u32 {
        match *self {
            Syllable::Var { t_pow, w_pow, .. } => t_pow + u32::from(w_pow),
            Syllable::Unitary { z } => z.unsigned_abs(),
        }
    }

    pub fn copy_id(&self) -> CopyId {
        match *self {
            Syllable::Var { copy, .. } => CopyId::Var(copy),
            Syllable::Unitary { .. } => CopyId::Unitary,
        }
    }

    fn letters(&self) -> SyllableLetters {
        match *self {
            Syllable::Var { copy, t_pow, w_pow } => {
                SyllableLetters::Var { copy, t_left: t_pow, w_left: w_pow }
            }
            Syllable::Unitary { z } => {
                SyllableLetters::Unitary { sign: z.signum() as i8, left: z.unsigned_abs() }
            }
        }
    }
}

enum SyllableLetters {
    Var { copy: u8, t_left: u32, w_left: u8 },
    Unitary { sign: i8, left: u32 },
}

impl Iterator for SyllableLetters {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        match self {
            SyllableLetters::Var { copy, t_left, w_left } => {
                if *t_left > 0 {
                    *t_left -= 1;
                    Some(Letter::T(*copy))
                } else if *w_left > 0 {
                    *w_left -= 1;
                    Some(Letter::W(*copy))
                } else {
                    None
                }
            }
            SyllableLetters::Unitary { sign, left } => {
                if *left > 0 {
                    *left -= 1;
                    Some(Letter::U(i32::from(*sign)))
                } else {
                    None
                }
            }
        }
    }
}

/// A normal-form word: alternating syllables; the empty word is the unit.
///
/// Ordered graded-lexicographically: degree first, then the letter sequence
/// under the letter order t1 < w1 < t2 < w2 < ... < u < u^-1.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl Word {
    pub fn unit() -> Self {
        Word { syllables: Vec::new() }
    }

    /// Builds a word from syllables, asserting the alternation invariant.
    pub fn from_syllables(syllables: Vec<Syllable>) -> Self {
        debug_assert!(
            syllables.windows(2).all(|p| p[0].copy_id() != p[1].copy_id()),
            "adjacent syllables from the same factor: {syllables:?}"
        );
        debug_assert!(syllables.iter().all(|s| s.degree() > 0));
        Word { syllables }
    }

    pub fn single(s: Syllable) -> Self {
        Word::from_syllables(vec![s])
    }

    pub fn is_unit(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn degree(&self) -> u32 {
        self.syllables.iter().map(Syllable::degree).sum()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.syllables.iter().flat_map(Syllable::letters)
    }

    /// Word part of the adjoint: reverse the syllables; `t`, `w` letters are
    /// self-adjoint, powers of `u` invert.
    pub fn involute(&self) -> Word {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| match *s {
                Syllable::Var { .. } => *s,
                Syllable::Unitary { z } => Syllable::Unitary { z: -z },
            })
            .collect();
        Word { syllables }
    }

    pub fn validate(&self, cfg: &Config) -> Result<(), PolyError> {
        for s in &self.syllables {
            match *s {
                Syllable::Var { copy, .. } => Letter::T(copy).validate(cfg)?,
                Syllable::Unitary { z } => Letter::U(z).validate(cfg)?,
            }
        }
        Ok(())
    }

    /// True if no letter evaluates to 0 under the character t -> 0, w -> 1,
    /// u -> 1; i.e. the word contains no `t` letters.
    pub fn survives_eval0(&self) -> bool {
        self.syllables.iter().all(|s| match *s {
            Syllable::Var { t_pow, .. } => t_pow == 0,
            Syllable::Unitary { .. } => true,
        })
    }

    /// True if some syllable is a unitary power.
    pub fn has_unitary(&self) -> bool {
        self.syllables.iter().any(|s| matches!(s, Syllable::Unitary { .. }))
    }

    /// Copies whose letters occur in this word.
    pub fn copies_used(&self) -> impl Iterator<Item = u8> + '_ {
        self.syllables.iter().filter_map(|s| match *s {
            Syllable::Var { copy, .. } => Some(copy),
            Syllable::Unitary { .. } => None,
        })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.letters().cmp(other.letters()))
    }
}

/// Concatenates two normal words, returning the normal form of the product
/// as a list of (word, sign) terms. Signs are +-1; the only sign-producing
/// rewrite is `w_i^2 -> 1 - t_i`.
pub(crate) fn concat_terms(a: &[Syllable], b: &[Syllable]) -> Vec<(Word, i8)> {
    let (sa, rest_a) = match a.split_last() {
        None => return vec![(Word::from_syllables(b.to_vec()), 1)],
        Some(x) => x,
    };
    let (sb, rest_b) = match b.split_first() {
        None => return vec![(Word::from_syllables(a.to_vec()), 1)],
        Some(x) => x,
    };

    let glue = |mid: Syllable| -> Word {
        let mut v = Vec::with_capacity(rest_a.len() + rest_b.len() + 1);
        v.extend_from_slice(rest_a);
        v.push(mid);
        v.extend_from_slice(rest_b);
        Word::from_syllables(v)
    };

    match (*sa, *sb) {
        (Syllable::Unitary { z: z1 }, Syllable::Unitary { z: z2 }) => {
            let z = z1 + z2;
            if z == 0 {
                concat_terms(rest_a, rest_b)
            } else {
                vec![(glue(Syllable::Unitary { z }), 1)]
            }
        }
        (
            Syllable::Var { copy: c1, t_pow: t1, w_pow: w1 },
            Syllable::Var { copy: c2, t_pow: t2, w_pow: w2 },
        ) if c1 == c2 => {
            let t = t1 + t2;
            let w = w1 + w2;
            if w <= 1 {
                vec![(glue(Syllable::Var { copy: c1, t_pow: t, w_pow: w }), 1)]
            } else {
                // w_i^2 = 1 - t_i, applied to the merged block t^t w^2.
                let mut out = Vec::new();
                if t == 0 {
                    out.extend(concat_terms(rest_a, rest_b));
                } else {
                    out.push((glue(Syllable::Var { copy: c1, t_pow: t, w_pow: 0 }), 1));
                }
                out.push((glue(Syllable::Var { copy: c1, t_pow: t + 1, w_pow: 0 }), -1));
                out
            }
        }
        _ => {
            let mut v = Vec::with_capacity(a.len() + b.len());
            v.extend_from_slice(a);
            v.extend_from_slice(b);
            vec![(Word::from_syllables(v), 1)]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(copy: u8, t_pow: u32, w_pow: u8) -> Syllable {
        Syllable::Var { copy, t_pow, w_pow }
    }

    #[test]
    fn letter_order_matches_declared_chain() {
        let chain = [
            Letter::T(1),
            Letter::W(1),
            Letter::T(2),
            Letter::W(2),
            Letter::U(1),
            Letter::U(-1),
        ];
        for pair in chain.windows(2) {
            assert!(pair[0] < pair[1], "{:?} !< {:?}", pair[0], pair[1]);
        }
        assert_eq!(Letter::U(3).cmp(&Letter::U(2)), Ordering::Equal);
    }

    #[test]
    fn word_order_is_graded_then_lex() {
        let t1 = Word::single(var(1, 1, 0));
        let w1 = Word::single(var(1, 0, 1));
        let t1t1 = Word::single(var(1, 2, 0));
        let t1w1 = Word::single(var(1, 1, 1));
        let t1t2 = Word::from_syllables(vec![var(1, 1, 0), var(2, 1, 0)]);
        assert!(Word::unit() < t1);
        assert!(t1 < w1);
        assert!(w1 < t1t1, "grading dominates");
        assert!(t1t1 < t1w1);
        assert!(t1w1 < t1t2, "w1 sorts before t2");
    }

    #[test]
    fn concat_merges_same_copy_blocks() {
        // w1 * t1 = t1 w1, one syllable.
        let out = concat_terms(&[var(1, 0, 1)], &[var(1, 1, 0)]);
        assert_eq!(out, vec![(Word::single(var(1, 1, 1)), 1)]);
    }

    #[test]
    fn concat_applies_w_square() {
        // w1 * w1 = 1 - t1.
        let out = concat_terms(&[var(1, 0, 1)], &[var(1, 0, 1)]);
        assert_eq!(out, vec![(Word::unit(), 1), (Word::single(var(1, 1, 0)), -1)]);
    }

    #[test]
    fn concat_cascades_after_collapse() {
        // (t2 w1) * (w1 t2) = t2 (1 - t1) t2 = t2^2 - t2 t1 t2.
        let a = [var(2, 1, 0), var(1, 0, 1)];
        let b = [var(1, 0, 1), var(2, 1, 0)];
        let out = concat_terms(&a, &b);
        let expected_plus = Word::single(var(2, 2, 0));
        let expected_minus =
            Word::from_syllables(vec![var(2, 1, 0), var(1, 1, 0), var(2, 1, 0)]);
        assert_eq!(out, vec![(expected_plus, 1), (expected_minus, -1)]);
    }

    #[test]
    fn unitary_powers_cancel() {
        let out = concat_terms(
            &[Syllable::Unitary { z: 2 }],
            &[Syllable::Unitary { z: -2 }],
        );
        assert_eq!(out, vec![(Word::unit(), 1)]);
    }

    #[test]
    fn involution_reverses_and_inverts_u() {
        let w = Word::from_syllables(vec![var(1, 1, 1), Syllable::Unitary { z: 2 }]);
        let wi = w.involute();
        assert_eq!(
            wi.syllables(),
            &[Syllable::Unitary { z: -2 }, var(1, 1, 1)]
        );
        assert_eq!(wi.involute(), w);
    }
}
