//! Synchronized multi-track automata over padded convolution alphabets.
//!
//! A symbol of an arity-`m` alphabet is an `m`-tuple whose entries are
//! letters or the padding symbol. Tuples are packed into a single [`Symbol`]
//! integer (track 0 least significant), so transition rows can stay sparse:
//! any symbol missing from a row leads to an implicit dead state.
//!
//! Every language handled here is a set of padding-legal convolutions: on
//! each track letters never follow padding, and the all-padding tuple never
//! occurs. Complement is taken relative to that universe.

mod dfa;
mod explore;
mod ops;

pub use dfa::{Dfa, Nfa};
pub use explore::{explore_dfa, explore_nfa};
pub use ops::{
    complement, determinize, fix_track, intersect, join, minimize, project, project_all, union,
    JoinTrack,
};

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::words::{ConvSymbol, Letter};

pub type Symbol = u32;
pub type StateId = u32;

/// Shape of a convolution alphabet: arity, digit range `[-bound, bound]`
/// and a number of auxiliary letters shared by all tracks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    arity: usize,
    digit_bound: u32,
    aux: u8,
}

impl Alphabet {
    pub fn new(arity: usize, digit_bound: u32, aux: u8) -> Result<Self> {
        let a = Self { arity, digit_bound, aux };
        let radix = a.radix() as u64;
        let total = (0..arity).try_fold(1u64, |acc, _| acc.checked_mul(radix));
        match total {
            Some(t) if t <= u32::MAX as u64 => Ok(a),
            _ => Err(Error::InvalidParams("convolution alphabet too large".into())),
        }
    }

    /// Alphabet of `arity`-tuples over `Sigma_q` for `|q| = digit_bound + 1`.
    pub fn digits(arity: usize, digit_bound: u32) -> Result<Self> {
        Self::new(arity, digit_bound, 0)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn digit_bound(&self) -> u32 {
        self.digit_bound
    }

    pub fn aux_letters(&self) -> u8 {
        self.aux
    }

    /// Same letters, different arity.
    pub fn with_arity(&self, arity: usize) -> Result<Self> {
        Self::new(arity, self.digit_bound, self.aux)
    }

    /// Letters per track, padding excluded.
    pub fn letter_count(&self) -> u32 {
        2 * self.digit_bound + 1 + self.aux as u32
    }

    /// Per-track index of the padding symbol.
    pub fn pad_index(&self) -> u32 {
        self.letter_count()
    }

    pub fn radix(&self) -> u32 {
        self.letter_count() + 1
    }

    /// Number of symbol codes, legal or not.
    pub fn symbol_space(&self) -> u32 {
        self.radix().pow(self.arity as u32)
    }

    pub fn letter_index(&self, l: Option<Letter>) -> Result<u32> {
        match l {
            None => Ok(self.pad_index()),
            Some(Letter::Digit(d)) if d.unsigned_abs() <= self.digit_bound => {
                Ok((d + self.digit_bound as i32) as u32)
            }
            Some(Letter::Digit(d)) => {
                Err(Error::DigitOutOfRange { digit: d as i64, bound: self.digit_bound })
            }
            Some(Letter::Aux(i)) if i < self.aux => Ok(2 * self.digit_bound + 1 + i as u32),
            Some(Letter::Aux(_)) => Err(Error::AlphabetMismatch),
        }
    }

    pub fn letter_at(&self, index: u32) -> Option<Letter> {
        let b = self.digit_bound;
        if index <= 2 * b {
            Some(Letter::Digit(index as i32 - b as i32))
        } else if index < self.pad_index() {
            Some(Letter::Aux((index - 2 * b - 1) as u8))
        } else {
            None
        }
    }

    pub fn digit_index(&self, d: i32) -> u32 {
        (d + self.digit_bound as i32) as u32
    }

    pub fn encode(&self, letters: &[Option<Letter>]) -> Result<Symbol> {
        if letters.len() != self.arity {
            return Err(Error::DimensionMismatch { expected: self.arity, got: letters.len() });
        }
        let mut s = 0u32;
        for l in letters.iter().rev() {
            s = s * self.radix() + self.letter_index(*l)?;
        }
        Ok(s)
    }

    pub fn decode(&self, sym: Symbol) -> ConvSymbol {
        self.indices(sym).into_iter().map(|i| self.letter_at(i)).collect()
    }

    /// Per-track letter indices of a symbol.
    pub fn indices(&self, mut sym: Symbol) -> Vec<u32> {
        let r = self.radix();
        (0..self.arity)
            .map(|_| {
                let i = sym % r;
                sym /= r;
                i
            })
            .collect()
    }

    pub fn pack(&self, indices: &[u32]) -> Symbol {
        indices.iter().rev().fold(0, |s, &i| s * self.radix() + i)
    }

    pub fn track_index(&self, sym: Symbol, track: usize) -> u32 {
        (sym / self.radix().pow(track as u32)) % self.radix()
    }

    /// Bit `j` set iff track `j` is padded in `sym`.
    pub fn pad_mask(&self, sym: Symbol) -> u32 {
        let pad = self.pad_index();
        self.indices(sym)
            .iter()
            .enumerate()
            .fold(0, |m, (j, &i)| if i == pad { m | 1 << j } else { m })
    }

    pub fn all_pad_mask(&self) -> u32 {
        (1u32 << self.arity) - 1
    }

    /// Every legal symbol whose padded tracks include `ended`.
    pub fn legal_symbols_after(&self, ended: u32) -> Vec<Symbol> {
        (0..self.symbol_space())
            .filter(|&s| {
                let m = self.pad_mask(s);
                m & ended == ended && m != self.all_pad_mask()
            })
            .collect()
    }

    pub fn encode_word(&self, conv: &[ConvSymbol]) -> Result<Vec<Symbol>> {
        conv.iter().map(|s| self.encode(s)).collect()
    }

    pub fn decode_word(&self, word: &[Symbol]) -> Vec<ConvSymbol> {
        word.iter().map(|&s| self.decode(s)).collect()
    }

    /// Packs a tuple of digit strings into a word, checking the digit range.
    pub fn word_of_strings(&self, tracks: &[&crate::words::DigitString]) -> Result<Vec<Symbol>> {
        self.encode_word(&crate::words::convolve_digits(tracks))
    }

    /// Single-track digit word.
    pub fn word_of_digits(&self, digits: &[i32]) -> Result<Vec<Symbol>> {
        digits.iter().map(|&d| self.letter_index(Some(Letter::Digit(d)))).collect()
    }

    /// Reads a single-track word back as digits, or `None` if it holds an
    /// auxiliary letter.
    pub fn digits_of_word(&self, word: &[Symbol]) -> Option<Vec<i32>> {
        word.iter()
            .map(|&s| match self.letter_at(s) {
                Some(Letter::Digit(d)) => Some(d),
                _ => None,
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbol_packing_round_trips() {
        let a = Alphabet::new(3, 2, 1).unwrap();
        assert_eq!(a.radix(), 7);
        let tuple = [Some(Letter::Digit(-2)), None, Some(Letter::Aux(0))];
        let s = a.encode(&tuple).unwrap();
        assert_eq!(a.decode(s), tuple.to_vec());
        assert_eq!(a.pad_mask(s), 0b010);
        assert_eq!(a.track_index(s, 2), 5);
        assert!(a.encode(&[Some(Letter::Digit(3)), None, None]).is_err());
        assert!(a.encode(&[Some(Letter::Aux(1)), None, None]).is_err());
    }

    #[test]
    fn legal_symbol_counts() {
        let a = Alphabet::digits(2, 1).unwrap();
        // 4^2 codes minus the all-pad one.
        assert_eq!(a.legal_symbols_after(0).len(), 15);
        // Track 0 ended: only (pad, d).
        assert_eq!(a.legal_symbols_after(1).len(), 3);
        assert!(Alphabet::digits(8, 20).is_err());
    }
}
