//! Enumeration of normal-form words up to a degree cutoff.

use super::{Config, CopyId, Syllable, Word};
use std::collections::BTreeSet;

/// Restriction of the ambient letter alphabet, used by the subspace-spec
/// language (`C<t1,w1,t2>` style factors enumerate words over a sublist of
/// the letters).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LetterSet {
    t_copies: BTreeSet<u8>,
    w_copies: BTreeSet<u8>,
    unitary: bool,
}

impl LetterSet {
    pub fn full(cfg: &Config) -> Self {
        let mut s = LetterSet::default();
        for i in 1..=cfg.copies() {
            s.t_copies.insert(i);
            s.w_copies.insert(i);
        }
        s.unitary = cfg.unitary();
        s
    }

    pub fn empty() -> Self {
        LetterSet::default()
    }

    pub fn with_t(mut self, i: u8) -> Self {
        self.t_copies.insert(i);
        self
    }

    pub fn with_w(mut self, i: u8) -> Self {
        self.w_copies.insert(i);
        self
    }

    pub fn with_unitary(mut self) -> Self {
        self.unitary = true;
        self
    }

    pub fn allows_t(&self, i: u8) -> bool {
        self.t_copies.contains(&i)
    }

    pub fn allows_w(&self, i: u8) -> bool {
        self.w_copies.contains(&i)
    }

    pub fn allows_unitary(&self) -> bool {
        self.unitary
    }

    fn copies(&self) -> impl Iterator<Item = u8> + '_ {
        self.t_copies.union(&self.w_copies).copied()
    }

    /// All valid syllables for one copy with degree in `1..=max_degree`.
    fn syllables_for_copy(&self, copy: u8, max_degree: u32) -> Vec<Syllable> {
        let mut out = Vec::new();
        for deg in 1..=max_degree {
            // t^deg
            if self.allows_t(copy) {
                out.push(Syllable::Var { copy, t_pow: deg, w_pow: 0 });
            }
            // t^(deg-1) w
            if self.allows_w(copy) && (deg == 1 || self.allows_t(copy)) {
                out.push(Syllable::Var { copy, t_pow: deg - 1, w_pow: 1 });
            }
        }
        out
    }

    fn unitary_syllables(&self, max_degree: u32) -> Vec<Syllable> {
        let mut out = Vec::new();
        if self.unitary {
            for deg in 1..=max_degree as i32 {
                out.push(Syllable::Unitary { z: deg });
                out.push(Syllable::Unitary { z: -deg });
            }
        }
        out
    }
}

/// All normal-form words over letters in `set` with degree at most `d`,
/// in graded-lexicographic order.
pub fn enumerate_words_in(set: &LetterSet, d: u32) -> Vec<Word> {
    let mut out = vec![Word::unit()];
    let mut frontier: Vec<Word> = vec![Word::unit()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            let remaining = d - w.degree();
            if remaining == 0 {
                continue;
            }
            let last = w.syllables().last().map(Syllable::copy_id);
            for copy in set.copies() {
                if last == Some(CopyId::Var(copy)) {
                    continue;
                }
                for s in set.syllables_for_copy(copy, remaining) {
                    let mut sylls = w.syllables().to_vec();
                    sylls.push(s);
                    next.push(Word::from_syllables(sylls));
                }
            }
            if last != Some(CopyId::Unitary) {
                for s in set.unitary_syllables(remaining) {
                    let mut sylls = w.syllables().to_vec();
                    sylls.push(s);
                    next.push(Word::from_syllables(sylls));
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort();
    out
}

/// All normal-form words of the full configuration with degree at most `d`,
/// in graded-lexicographic order.
pub fn enumerate_basis(cfg: &Config, d: u32) -> Vec<Word> {
    enumerate_words_in(&LetterSet::full(cfg), d)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent count of alternating syllable words: a word is a sequence
    /// of (copy, syllable-degree) pairs with adjacent copies distinct, and
    /// each copy has exactly 2 syllable forms per degree g >= 1 (t^g and
    /// t^(g-1)w).
    fn count_words_oracle(copies: u32, d: u32) -> u64 {
        // state: remaining degree, last copy (0 = none); counts words that
        // extend the current prefix, including the empty extension.
        fn go(copies: u32, remaining: u32, last: u32) -> u64 {
            let mut total = 1;
            for copy in 1..=copies {
                if copy == last {
                    continue;
                }
                for deg in 1..=remaining {
                    total += 2 * go(copies, remaining - deg, copy);
                }
            }
            total
        }
        go(copies, d, 0)
    }

    #[test]
    fn small_enumerations_match_oracle_counts() {
        // Frozen values from the combinatorial oracle above.
        assert_eq!(count_words_oracle(2, 1), 5);
        assert_eq!(count_words_oracle(2, 2), 17);
        assert_eq!(count_words_oracle(1, 3), 7);

        let n2 = Config::new(2, false);
        assert_eq!(enumerate_basis(&n2, 1).len(), 5);
        assert_eq!(enumerate_basis(&n2, 2).len(), 17);
        let n1 = Config::new(1, false);
        assert_eq!(enumerate_basis(&n1, 3).len(), 7);
        for d in 0..=5 {
            assert_eq!(enumerate_basis(&n2, d).len() as u64, count_words_oracle(2, d));
        }
    }

    #[test]
    fn degree_one_words_in_declared_order() {
        let cfg = Config::new(2, false);
        let words = enumerate_basis(&cfg, 1);
        let names: Vec<String> = words.iter().map(super::super::word_string).collect();
        assert_eq!(names, vec!["1", "t1", "w1", "t2", "w2"]);
    }

    #[test]
    fn single_copy_degree_three() {
        let cfg = Config::new(1, false);
        let names: Vec<String> = enumerate_basis(&cfg, 3)
            .iter()
            .map(super::super::word_string)
            .collect();
        assert_eq!(names, vec!["1", "t1", "w1", "t1^2", "t1*w1", "t1^3", "t1^2*w1"]);
    }

    #[test]
    fn words_are_distinct_and_sorted() {
        let cfg = Config::new(2, true);
        let words = enumerate_basis(&cfg, 3);
        for pair in words.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn unitary_words_appear_only_when_enabled() {
        let with_u = enumerate_basis(&Config::new(1, true), 2);
        assert!(with_u.iter().any(Word::has_unitary));
        let without_u = enumerate_basis(&Config::new(1, false), 2);
        assert!(!without_u.iter().any(Word::has_unitary));
    }

    #[test]
    fn restricted_sets_drop_letters() {
        // C<t1>: plain powers of t1 only.
        let set = LetterSet::empty().with_t(1);
        let words = enumerate_words_in(&set, 2);
        assert_eq!(words.len(), 3);
        assert!(words.iter().all(|w| w.copies_used().all(|c| c == 1)));
    }
}
