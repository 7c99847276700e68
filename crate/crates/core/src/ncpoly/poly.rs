//! Exact linear combinations of normal-form words.

use super::word::concat_terms;
use super::{Config, Letter, PolyError, Syllable, Word};
use crate::scalar::Scalar;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A *-polynomial in normal form. Two polynomials are equal iff their term
/// maps coincide; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<S: Scalar> {
    cfg: Config,
    terms: BTreeMap<Word, S>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero(cfg: Config) -> Self {
        Poly { cfg, terms: BTreeMap::new() }
    }

    pub fn one(cfg: Config) -> Self {
        Poly::term(cfg, Word::unit(), S::one())
    }

    pub fn constant(cfg: Config, c: S) -> Self {
        Poly::term(cfg, Word::unit(), c)
    }

    pub fn term(cfg: Config, word: Word, coeff: S) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        Poly { cfg, terms }
    }

    /// The letter `t_i`.
    pub fn t(cfg: Config, i: u8) -> Result<Self, PolyError> {
        Letter::T(i).validate(&cfg)?;
        Ok(Poly::term(cfg, Word::single(Syllable::Var { copy: i, t_pow: 1, w_pow: 0 }), S::one()))
    }

    /// The letter `w_i`.
    pub fn w(cfg: Config, i: u8) -> Result<Self, PolyError> {
        Letter::W(i).validate(&cfg)?;
        Ok(Poly::term(cfg, Word::single(Syllable::Var { copy: i, t_pow: 0, w_pow: 1 }), S::one()))
    }

    /// The unitary power `u^z`.
    pub fn u(cfg: Config, z: i32) -> Result<Self, PolyError> {
        Letter::U(z).validate(&cfg)?;
        Ok(Poly::term(cfg, Word::single(Syllable::Unitary { z }), S::one()))
    }

    /// Normal form of `coeff * l_1 l_2 ... l_m` for an arbitrary letter string.
    pub fn normalize(cfg: Config, coeff: S, letters: &[Letter]) -> Result<Self, PolyError> {
        for l in letters {
            l.validate(&cfg)?;
        }
        let mut acc = Poly::constant(cfg, coeff);
        for l in letters {
            let s = match *l {
                Letter::T(i) => Syllable::Var { copy: i, t_pow: 1, w_pow: 0 },
                Letter::W(i) => Syllable::Var { copy: i, t_pow: 0, w_pow: 1 },
                Letter::U(z) => Syllable::Unitary { z },
            };
            acc = acc.mul_word(&Word::single(s));
        }
        Ok(acc)
    }

    pub fn config(&self) -> Config {
        self.cfg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Option<&S> {
        self.terms.get(w)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Greatest word under the graded-lex order, if nonzero.
    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    /// Max word degree among terms; 0 for the zero polynomial by convention.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Word::degree).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.cfg, other.cfg, "mixed polynomial configurations");
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            add_term(&mut terms, w, c.clone());
        }
        Poly { cfg: self.cfg, terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&(-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Poly::zero(self.cfg);
        }
        let terms = self
            .terms
            .iter()
            .map(|(w, x)| (w.clone(), x.clone() * c.clone()))
            .collect();
        Poly { cfg: self.cfg, terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cfg, other.cfg, "mixed polynomial configurations");
        let mut terms = BTreeMap::new();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let c = c1.clone() * c2.clone();
                for (word, sign) in concat_terms(w1.syllables(), w2.syllables()) {
                    let signed = if sign < 0 { -c.clone() } else { c.clone() };
                    add_term(&mut terms, &word, signed);
                }
            }
        }
        Poly { cfg: self.cfg, terms }
    }

    fn mul_word(&self, w: &Word) -> Self {
        let mut terms = BTreeMap::new();
        for (w1, c1) in &self.terms {
            for (word, sign) in concat_terms(w1.syllables(), w.syllables()) {
                let signed = if sign < 0 { -c1.clone() } else { c1.clone() };
                add_term(&mut terms, &word, signed);
            }
        }
        Poly { cfg: self.cfg, terms }
    }

    /// The adjoint: conjugate coefficients, reverse words, invert `u` powers.
    pub fn involute(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| (w.involute(), c.conjugate()))
            .collect();
        Poly { cfg: self.cfg, terms }
    }

    /// The character t -> 0, w -> 1, u -> 1 extended multiplicatively.
    pub fn eval0(&self) -> S {
        let mut acc = S::zero();
        for (w, c) in &self.terms {
            if w.survives_eval0() {
                acc = acc + c.clone();
            }
        }
        acc
    }

    /// True if every word uses only letters of the given copy.
    pub fn uses_only_copy(&self, copy: u8) -> bool {
        self.terms
            .keys()
            .all(|w| !w.has_unitary() && w.copies_used().all(|c| c == copy))
    }

    /// True if constant (a scalar multiple of the unit).
    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    /// Drops terms of degree above `d`.
    pub fn truncate(&self, d: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(w, _)| w.degree() <= d)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        Poly { cfg: self.cfg, terms }
    }
}

fn add_term<S: Scalar>(terms: &mut BTreeMap<Word, S>, word: &Word, c: S) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(word) {
        Some(existing) => {
            *existing = existing.clone() + c;
            if existing.is_zero() {
                terms.remove(word);
            }
        }
        None => {
            terms.insert(word.clone(), c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Coeff;

    type P = Poly<Coeff>;

    fn cfg() -> Config {
        Config::new(2, false)
    }

    fn one() -> Coeff {
        One::one()
    }

    #[test]
    fn normalize_w_square() {
        // w1 w1 -> 1 - t1 (the defining relation).
        let p = P::normalize(cfg(), one(), &[Letter::W(1), Letter::W(1)]).unwrap();
        let expected = P::one(cfg()).sub(&P::t(cfg(), 1).unwrap());
        assert_eq!(p, expected);
    }

    #[test]
    fn normalize_same_copy_commutation() {
        // w1 t1 -> t1 w1 as a single syllable (a=1, b=1).
        let p = P::normalize(cfg(), one(), &[Letter::W(1), Letter::T(1)]).unwrap();
        let q = P::normalize(cfg(), one(), &[Letter::T(1), Letter::W(1)]).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.num_terms(), 1);
        let w = p.leading_word().unwrap();
        assert_eq!(w.syllables(), &[Syllable::Var { copy: 1, t_pow: 1, w_pow: 1 }]);
    }

    #[test]
    fn normalize_keeps_cross_copy_words() {
        // w1 w2 w1 has no rewrite across copies.
        let p = P::normalize(cfg(), one(), &[Letter::W(1), Letter::W(2), Letter::W(1)]).unwrap();
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.degree(), 3);
        assert_eq!(p.leading_word().unwrap().syllables().len(), 3);
    }

    #[test]
    fn normalize_w_t_w() {
        // w1 t1 w1 = t1 w1^2 = t1 - t1^2.
        let p = P::normalize(cfg(), one(), &[Letter::W(1), Letter::T(1), Letter::W(1)]).unwrap();
        let t1 = P::t(cfg(), 1).unwrap();
        let expected = t1.sub(&t1.mul(&t1));
        assert_eq!(p, expected);
    }

    #[test]
    fn additive_cancellation() {
        let t1 = P::t(cfg(), 1).unwrap();
        assert_eq!(t1.add(&P::zero(cfg())), t1);
        assert!(t1.add(&t1.neg()).is_zero());
        let one_minus_t1 = P::one(cfg()).sub(&t1);
        assert_eq!(one_minus_t1.add(&t1), P::one(cfg()));
    }

    #[test]
    fn mul_distributes_and_normalizes() {
        // (t1 + t2)^2 = t1^2 + t1 t2 + t2 t1 + t2^2.
        let t1 = P::t(cfg(), 1).unwrap();
        let t2 = P::t(cfg(), 2).unwrap();
        let s = t1.add(&t2);
        let sq = s.mul(&s);
        assert_eq!(sq.num_terms(), 4);
        let expected = t1
            .mul(&t1)
            .add(&t1.mul(&t2))
            .add(&t2.mul(&t1))
            .add(&t2.mul(&t2));
        assert_eq!(sq, expected);
    }

    #[test]
    fn mul_unit_is_identity() {
        let t1t2 = P::t(cfg(), 1).unwrap().mul(&P::t(cfg(), 2).unwrap());
        assert_eq!(t1t2.mul(&P::one(cfg())), t1t2);
        assert_eq!(P::one(cfg()).mul(&t1t2), t1t2);
    }

    #[test]
    fn involution_examples() {
        let t1 = P::t(cfg(), 1).unwrap();
        let t2 = P::t(cfg(), 2).unwrap();
        assert_eq!(t1.mul(&t2).involute(), t2.mul(&t1));
        let iw1 = P::w(cfg(), 1).unwrap().scale(&Coeff::imaginary_unit());
        assert_eq!(iw1.involute(), P::w(cfg(), 1).unwrap().scale(&(-Coeff::imaginary_unit())));

        let ucfg = Config::new(1, true);
        let u = Poly::<Coeff>::u(ucfg, 1).unwrap();
        assert_eq!(u.involute().mul(&u), Poly::one(ucfg));
    }

    #[test]
    fn degree_conventions() {
        let t1 = P::t(cfg(), 1).unwrap();
        assert_eq!(P::one(cfg()).sub(&t1).degree(), 1);
        let w1t2w1 =
            P::normalize(cfg(), one(), &[Letter::W(1), Letter::T(2), Letter::W(1)]).unwrap();
        assert_eq!(w1t2w1.degree(), 3);
        assert_eq!(P::zero(cfg()).degree(), 0);
    }

    #[test]
    fn relation_consistency_every_copy() {
        for i in 1..=2 {
            let w = P::w(cfg(), i).unwrap();
            let t = P::t(cfg(), i).unwrap();
            assert_eq!(w.mul(&w).add(&t), P::one(cfg()));
        }
    }

    #[test]
    fn eval0_character() {
        let p = P::normalize(cfg(), one(), &[Letter::W(1), Letter::W(2)]).unwrap();
        assert_eq!(p.eval0(), one());
        let q = P::t(cfg(), 1).unwrap();
        assert!(q.eval0().is_zero());
        // w1 t2 w1 evaluates to 0, and 1 - t1 to 1.
        let r = P::normalize(cfg(), one(), &[Letter::W(1), Letter::T(2), Letter::W(1)]).unwrap();
        assert!(r.eval0().is_zero());
    }
}
