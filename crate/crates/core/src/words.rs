//! Digit strings over `Sigma_q = {-(|q|-1), ..., |q|-1}` and their convolutions.
//!
//! A string `a_0 a_1 ... a_k` stands for the polynomial `a_k x^k + ... + a_0`:
//! the least significant coefficient comes first. The textual form is a
//! bracketed decimal list, `[-2,2,2]`, with `[]` for the empty string.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::Polynomial;

/// A single letter on one track of a convolution.
///
/// Digits come from `Sigma_q`; auxiliary letters form a separate alphabet
/// disjoint from every `Sigma_q` (used for the `Z` factor of semidirect
/// products).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Digit(i32),
    Aux(u8),
}

/// One position of a convolution; `None` is the padding symbol.
pub type ConvSymbol = Vec<Option<Letter>>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DigitString(Vec<i32>);

impl DigitString {
    pub fn new(digits: Vec<i32>) -> Self {
        Self(digits)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Checks every digit against `bound = |q| - 1`.
    pub fn checked(digits: Vec<i32>, bound: u32) -> Result<Self> {
        let s = Self(digits);
        s.check_bound(bound)?;
        Ok(s)
    }

    pub fn check_bound(&self, bound: u32) -> Result<()> {
        match self.0.iter().find(|d| d.unsigned_abs() > bound) {
            Some(&d) => Err(Error::DigitOutOfRange { digit: d as i64, bound }),
            None => Ok(()),
        }
    }

    pub fn digits(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> Vec<Letter> {
        self.0.iter().map(|&d| Letter::Digit(d)).collect()
    }

    /// Number of leading `0` digits.
    pub fn leading_zeros(&self) -> usize {
        self.0.iter().take_while(|&&d| d == 0).count()
    }

    pub fn has_trailing_zero(&self) -> bool {
        self.0.last() == Some(&0)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_coeffs(self.0.iter().map(|&d| d as i64))
    }

    /// Inverse of [`DigitString::to_polynomial`] on polynomials whose
    /// coefficients fit in a digit. Returns `None` otherwise.
    pub fn from_polynomial(f: &Polynomial) -> Option<Self> {
        f.coeffs().iter().map(|c| i32::try_from(c).ok()).collect::<Option<Vec<_>>>().map(Self)
    }

    /// Length-lexicographic comparison: shorter first, then digit by digit.
    pub fn llex_cmp(&self, other: &Self) -> Ordering {
        llex_compare(&self.0, &other.0)
    }
}

impl From<Vec<i32>> for DigitString {
    fn from(v: Vec<i32>) -> Self {
        Self(v)
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for DigitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(String::from(s)))?;
        if inner.trim().is_empty() {
            return Ok(Self::empty());
        }
        inner
            .split(',')
            .map(|tok| {
                let tok = tok.trim().replace('\u{2212}', "-");
                tok.parse::<i32>().map_err(|_| Error::Parse(String::from(s)))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

/// The polynomial a string denotes.
pub fn string_to_poly(w: &DigitString) -> Polynomial {
    w.to_polynomial()
}

/// Length-lexicographic order on `Ord` letters.
pub fn llex_compare<T: Ord>(u: &[T], v: &[T]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| u.cmp(v))
}

/// Stacks the tracks, padding the shorter ones with `None`.
pub fn convolve<T: Clone>(tracks: &[&[T]]) -> Vec<Vec<Option<T>>> {
    let len = tracks.iter().map(|t| t.len()).max().unwrap_or(0);
    (0..len).map(|i| tracks.iter().map(|t| t.get(i).cloned()).collect()).collect()
}

/// Splits a convolution back into its tracks. Fails on illegal padding
/// (a letter after a pad on the same track, or an all-pad position).
pub fn deconvolve<T: Clone>(conv: &[Vec<Option<T>>], arity: usize) -> Result<Vec<Vec<T>>> {
    let mut tracks: Vec<Vec<T>> = (0..arity).map(|_| Vec::new()).collect();
    let mut ended = alloc::vec![false; arity];
    for sym in conv {
        if sym.len() != arity {
            return Err(Error::DimensionMismatch { expected: arity, got: sym.len() });
        }
        if sym.iter().all(Option::is_none) {
            return Err(Error::Parse("all-pad convolution symbol".into()));
        }
        for (j, l) in sym.iter().enumerate() {
            match l {
                Some(_) if ended[j] => return Err(Error::Parse("letter after padding".into())),
                Some(l) => tracks[j].push(l.clone()),
                None => ended[j] = true,
            }
        }
    }
    Ok(tracks)
}

/// Convolution of digit strings as letters.
pub fn convolve_digits(tracks: &[&DigitString]) -> Vec<ConvSymbol> {
    let letters: Vec<Vec<Letter>> = tracks.iter().map(|w| w.letters()).collect();
    let refs: Vec<&[Letter]> = letters.iter().map(Vec::as_slice).collect();
    convolve(&refs)
}

/// All strings over `{-bound..bound}` of length at most `maxlen`, in llex order.
pub fn all_strings(bound: u32, maxlen: usize) -> Vec<DigitString> {
    let b = bound as i32;
    let mut out = alloc::vec![DigitString::empty()];
    let mut layer = alloc::vec![DigitString::empty()];
    for _ in 0..maxlen {
        let mut next = Vec::new();
        for w in &layer {
            for d in -b..=b {
                let mut v = w.0.clone();
                v.push(d);
                next.push(DigitString(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{residue, IntVec, ReprParams};

    fn ds(s: &str) -> DigitString {
        s.parse().unwrap()
    }

    #[test]
    fn string_to_poly_examples() {
        let p = ReprParams::quadratic(1, 3).unwrap();
        assert_eq!(residue(&string_to_poly(&ds("[1]")), &p), IntVec::from_i64s(&[1, 0]));
        assert_eq!(residue(&string_to_poly(&ds("[0,1]")), &p), IntVec::from_i64s(&[0, 1]));
        assert!(string_to_poly(&DigitString::empty()).is_zero());
        assert!(string_to_poly(&ds("[0,0]")).is_zero());
    }

    #[test]
    fn llex_examples() {
        assert_eq!(ds("[1,1,1]").llex_cmp(&ds("[-2,2,2]")), Ordering::Greater);
        assert_eq!(ds("[5]").llex_cmp(&ds("[0,0]")), Ordering::Less);
        assert_eq!(ds("[2,-1]").llex_cmp(&ds("[2,-1]")), Ordering::Equal);
        assert_eq!(DigitString::empty().llex_cmp(&ds("[-2]")), Ordering::Less);
    }

    #[test]
    fn convolve_examples() {
        let c = convolve_digits(&[&ds("[1]"), &ds("[0,1]")]);
        assert_eq!(
            c,
            alloc::vec![
                alloc::vec![Some(Letter::Digit(1)), Some(Letter::Digit(0))],
                alloc::vec![None, Some(Letter::Digit(1))],
            ]
        );
        assert!(convolve_digits(&[&DigitString::empty(), &DigitString::empty()]).is_empty());
        let c = convolve(&[&['a', 'b'][..], &['c'][..]]);
        assert_eq!(c, alloc::vec![alloc::vec![Some('a'), Some('c')], alloc::vec![Some('b'), None]]);
    }

    #[test]
    fn deconvolve_rejects_illegal_padding() {
        let bad = alloc::vec![alloc::vec![None, Some(1)], alloc::vec![Some(2), Some(3)]];
        assert!(deconvolve(&bad, 2).is_err());
        let allpad: Vec<Vec<Option<i32>>> = alloc::vec![alloc::vec![None, None]];
        assert!(deconvolve(&allpad, 2).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(ds("[-2, 2,2]").to_string(), "[-2,2,2]");
        assert_eq!(ds("[]"), DigitString::empty());
        assert_eq!(ds("[\u{2212}2]"), DigitString::new(alloc::vec![-2]));
        assert!("1,2".parse::<DigitString>().is_err());
        assert!("[1,x]".parse::<DigitString>().is_err());
        assert!(DigitString::checked(alloc::vec![3], 2).is_err());
    }

    #[test]
    fn all_strings_counts() {
        let s = all_strings(2, 2);
        assert_eq!(s.len(), 31);
        assert!(s.windows(2).all(|w| w[0].llex_cmp(&w[1]) == Ordering::Less));
    }
}
