//! The compiled presentation of `Z^n`: the equivalence automaton, the
//! addition relation, the canonical domain `Dom` of llex-least
//! representatives and the bijection between `Z^n` and `Dom`.

use alloc::vec::Vec;

use crate::automata::{
    complement, determinize, explore_dfa, fix_track, intersect, join, minimize, project, Alphabet,
    Dfa, JoinTrack, Nfa,
};
use crate::carry::{LinearChecker, Transducer};
use crate::error::{Error, Result};
use crate::ring::{reduce, residue, IntVec, ReprParams};
use crate::words::DigitString;

/// `{(u, v) : f_u ~ f_v}`, minimized.
pub fn build_equiv_automaton(params: &ReprParams, budget: usize) -> Result<Dfa> {
    Ok(minimize(&LinearChecker::equivalence(params)?.to_dfa(budget)?))
}

pub fn build_add_transducer(params: &ReprParams) -> Result<Transducer> {
    Transducer::addition(params)
}

/// The transducer's output on `(u, v)`; equivalent to `f_u + f_v` but not
/// necessarily canonical.
pub fn add_strings(params: &ReprParams, u: &DigitString, v: &DigitString) -> Result<DigitString> {
    let bound = params.digit_bound();
    u.check_bound(bound)?;
    v.check_bound(bound)?;
    Transducer::addition(params)?.add(u, v)
}

/// The graph `R(u, v, w)` of the addition transducer, minimized.
pub fn build_add_relation(params: &ReprParams, budget: usize) -> Result<Dfa> {
    Ok(minimize(&Transducer::addition(params)?.relation_dfa(budget)?))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Llex {
    Equal,
    Less,
    Greater,
    /// `u` ended while `w` continues.
    Shorter,
}

/// `{(u, w) : u <_llex w}` over digit pairs.
pub fn llex_less_tracker(digit_bound: u32) -> Result<Dfa> {
    let alpha = Alphabet::digits(2, digit_bound)?;
    let b = digit_bound as i32;
    let pad = alpha.pad_index();
    explore_dfa(
        alpha,
        Llex::Equal,
        16,
        |s| Ok(matches!(s, Llex::Less | Llex::Shorter)),
        |s, out| {
            for wd in -b..=b {
                let wi = alpha.digit_index(wd);
                out.push((alpha.pack(&[pad, wi]), Llex::Shorter));
                if *s == Llex::Shorter {
                    continue;
                }
                for ud in -b..=b {
                    let next = match s {
                        Llex::Equal => match ud.cmp(&wd) {
                            core::cmp::Ordering::Less => Llex::Less,
                            core::cmp::Ordering::Equal => Llex::Equal,
                            core::cmp::Ordering::Greater => Llex::Greater,
                        },
                        other => *other,
                    };
                    out.push((alpha.pack(&[alpha.digit_index(ud), wi]), next));
                }
            }
            Ok(())
        },
    )
}

/// Strings with no llex-smaller equivalent: the complement of the
/// projection of `~ ∩ <_llex` onto its second track.
pub fn build_dom(equiv: &Dfa, budget: usize) -> Result<Dfa> {
    let tracker = llex_less_tracker(equiv.alphabet().digit_bound())?;
    let smaller = intersect(equiv, &tracker)?;
    let non_canonical = determinize(&project(&Nfa::from(&smaller), 0)?, budget)?;
    Ok(minimize(&complement(&non_canonical)?))
}

/// `Add = {(x, y, z) ∈ Dom^3 : x + y ~ z}`, obtained as
/// `∃w (R(x, y, w) ∧ w ~ z)` restricted to `Dom` on every track.
pub fn build_add_on_dom(pres: &Presentation, budget: usize) -> Result<Dfa> {
    let rel = build_add_relation(&pres.params, budget)?;
    let composed = join(
        &[
            JoinTrack { dfa: &rel, tracks: &[0, 1, 3] },
            JoinTrack { dfa: &pres.equiv, tracks: &[3, 2] },
        ],
        4,
        budget,
    )?;
    let sum = minimize(&determinize(&project(&Nfa::from(&composed), 3)?, budget)?);
    let on_dom = join(
        &[
            JoinTrack { dfa: &sum, tracks: &[0, 1, 2] },
            JoinTrack { dfa: &pres.dom, tracks: &[0] },
            JoinTrack { dfa: &pres.dom, tracks: &[1] },
            JoinTrack { dfa: &pres.dom, tracks: &[2] },
        ],
        3,
        budget,
    )?;
    Ok(minimize(&on_dom))
}

/// The string of the reduced polynomial with residue `v`.
pub fn reduced_string(v: &IntVec, params: &ReprParams) -> Result<DigitString> {
    if v.len() != params.degree() {
        return Err(Error::DimensionMismatch { expected: params.degree(), got: v.len() });
    }
    let f = reduce(&v.to_polynomial(), params)?;
    DigitString::from_polynomial(&f).ok_or_else(|| Error::InvalidParams("reduced digit overflow".into()))
}

/// A compiled presentation `psi_{p,q}`.
#[derive(Clone, Debug)]
pub struct Presentation {
    params: ReprParams,
    equiv: Dfa,
    dom: Dfa,
}

impl Presentation {
    pub fn compile(params: &ReprParams) -> Result<Self> {
        Self::compile_with_budget(params, crate::DEFAULT_STATE_BUDGET)
    }

    pub fn compile_with_budget(params: &ReprParams, budget: usize) -> Result<Self> {
        params.validate()?;
        let equiv = build_equiv_automaton(params, budget)?;
        let dom = build_dom(&equiv, budget)?;
        Ok(Self { params: params.clone(), equiv, dom })
    }

    pub fn params(&self) -> &ReprParams {
        &self.params
    }

    pub fn equiv(&self) -> &Dfa {
        &self.equiv
    }

    pub fn dom(&self) -> &Dfa {
        &self.dom
    }

    pub fn digit_alphabet(&self) -> Alphabet {
        Alphabet::digits(1, self.params.digit_bound()).expect("single track fits")
    }

    fn check(&self, w: &DigitString) -> Result<()> {
        w.check_bound(self.params.digit_bound())
    }

    pub fn decode(&self, w: &DigitString) -> Result<IntVec> {
        self.check(w)?;
        Ok(residue(&w.to_polynomial(), &self.params))
    }

    /// All strings equivalent to `w`, as a single-track automaton.
    pub fn class_of(&self, w: &DigitString) -> Result<Dfa> {
        self.check(w)?;
        fix_track(&self.equiv, 1, &w.letters())
    }

    /// The llex-least string equivalent to `w`.
    pub fn canonicalize(&self, w: &DigitString) -> Result<DigitString> {
        let class = self.class_of(w)?;
        let word = class.llex_least_member().ok_or(Error::CarryCycle)?;
        let digits = class.alphabet().digits_of_word(&word).expect("digit alphabet");
        Ok(DigitString::new(digits))
    }

    pub fn encode(&self, v: &IntVec) -> Result<DigitString> {
        self.canonicalize(&reduced_string(v, &self.params)?)
    }

    pub fn is_canonical(&self, w: &DigitString) -> bool {
        self.digit_alphabet()
            .word_of_digits(w.digits())
            .map_or(false, |word| self.dom.accepts(&word))
    }

    pub fn equivalent(&self, u: &DigitString, v: &DigitString) -> Result<bool> {
        let alpha = *self.equiv.alphabet();
        Ok(self.equiv.accepts(&alpha.word_of_strings(&[u, v])?))
    }

    /// Canonical sum.
    pub fn add(&self, u: &DigitString, v: &DigitString) -> Result<DigitString> {
        self.canonicalize(&add_strings(&self.params, u, v)?)
    }

    /// Canonical strings of length at most `maxlen`, in llex order.
    pub fn dom_members(&self, maxlen: usize) -> Vec<DigitString> {
        let alpha = *self.dom.alphabet();
        self.dom
            .accepted_words(maxlen)
            .into_iter()
            .map(|w| DigitString::new(alpha.digits_of_word(&w).expect("digit alphabet")))
            .collect()
    }

    /// Unit vector `e_i` (the residue of `x^i`).
    pub fn unit(&self, i: usize) -> IntVec {
        IntVec::unit(self.params.degree(), i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(s: &str) -> DigitString {
        s.parse().unwrap()
    }

    #[test]
    fn psi_1_3_examples() {
        let params = ReprParams::quadratic(1, 3).unwrap();
        let pres = Presentation::compile(&params).unwrap();
        assert_eq!(pres.encode(&IntVec::from_i64s(&[4, 0])).unwrap(), ds("[-2,2,2]"));
        assert_eq!(pres.encode(&IntVec::zero(2)).unwrap(), DigitString::empty());
        assert_eq!(pres.decode(&ds("[0,1]")).unwrap(), IntVec::from_i64s(&[0, 1]));
        for w in ["[]", "[1]", "[0,1]", "[2]"] {
            assert!(pres.is_canonical(&ds(w)), "{w}");
        }
        for w in ["[1,1,1]", "[1,0]"] {
            assert!(!pres.is_canonical(&ds(w)), "{w}");
        }
        assert_eq!(pres.add(&ds("[2]"), &ds("[2]")).unwrap(), ds("[-2,2,2]"));
        assert_eq!(pres.add(&ds("[1]"), &ds("[-1]")).unwrap(), DigitString::empty());
    }

    #[test]
    fn llex_tracker_agrees_with_order() {
        let t = llex_less_tracker(1).unwrap();
        let a = *t.alphabet();
        let all = crate::words::all_strings(1, 3);
        for u in &all {
            for w in &all {
                let word = a.word_of_strings(&[u, w]).unwrap();
                assert_eq!(t.accepts(&word), u.llex_cmp(w).is_lt(), "{u} {w}");
            }
        }
    }
}
