//! The group `Z^2 ⋊_A Z` with `(b_1, h_1)(b_2, h_2) = (b_1 + b_2, A^{b_2} h_1 + h_2)`
//! and its Cayley automatic representation by words `uv`, where `u` names the
//! `Z` coordinate over a sign-and-binary alphabet and `v` is the canonical
//! string of `h`.
//!
//! Vectors `h` are residues `(r_0, r_1)` of `h_2 + h_1 x`; matrices act on
//! `(h_1, h_2)` as in [`crate::linmaps::apply_matrix`]. The generators are
//! `g_0 = (1, 0)`, `g_1 = (0, [x])` and `g_2 = (0, [1])`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::automata::{
    determinize, explore_dfa, fix_track, join, minimize, project, Alphabet, Dfa, JoinTrack, Nfa, StateId,
};
use crate::error::{Error, Result};
use crate::linmaps::{apply_matrix, build_phi_g_relation, poly_of_matrix, PolyMap};
use crate::matrix::Mat2;
use crate::presentation::{build_add_relation, Presentation};
use crate::ring::{IntVec, ReprParams};
use crate::words::{DigitString, Letter};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemiElement {
    pub b: i64,
    pub h: IntVec,
}

impl SemiElement {
    pub fn new(b: i64, h: IntVec) -> Self {
        Self { b, h }
    }

    pub fn identity() -> Self {
        Self { b: 0, h: IntVec::zero(2) }
    }

    /// `g_0 = (1, 0)`, `g_1 = (0, [x])`, `g_2 = (0, [1])`.
    pub fn generator(i: usize) -> Result<Self> {
        match i {
            0 => Ok(Self { b: 1, h: IntVec::zero(2) }),
            1 => Ok(Self { b: 0, h: IntVec::unit(2, 1) }),
            2 => Ok(Self { b: 0, h: IntVec::unit(2, 0) }),
            _ => Err(Error::DimensionMismatch { expected: 3, got: i + 1 }),
        }
    }
}

impl core::fmt::Display for SemiElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({}, {})", self.b, self.h)
    }
}

/// `(b_1 + b_2, A^{b_2} h_1 + h_2)`.
pub fn multiply(g1: &SemiElement, g2: &SemiElement, a: &Mat2) -> Result<SemiElement> {
    let moved = apply_matrix(&a.pow(g2.b)?, &g1.h)?;
    Ok(SemiElement { b: g1.b + g2.b, h: &moved + &g2.h })
}

pub fn inverse(g: &SemiElement, a: &Mat2) -> Result<SemiElement> {
    let moved = apply_matrix(&a.pow(-g.b)?, &g.h)?;
    Ok(SemiElement { b: -g.b, h: &IntVec::zero(2) - &moved })
}

/// Letters of the `Z` coordinate: binary digits and the sign.
pub const Z_ZERO: Letter = Letter::Aux(0);
pub const Z_ONE: Letter = Letter::Aux(1);
pub const Z_PLUS: Letter = Letter::Aux(2);
pub const Z_MINUS: Letter = Letter::Aux(3);
pub const Z_LETTERS: u8 = 4;

/// A sign followed by the magnitude in binary, least significant bit first
/// and without trailing zeros; `0` is the bare `+`.
pub fn encode_z(b: i64) -> Vec<Letter> {
    let mut out = vec![if b < 0 { Z_MINUS } else { Z_PLUS }];
    let mut m = b.unsigned_abs();
    while m > 0 {
        out.push(if m & 1 == 1 { Z_ONE } else { Z_ZERO });
        m >>= 1;
    }
    out
}

pub fn decode_z(w: &[Letter]) -> Result<i64> {
    let sign = match w.first() {
        Some(&Z_PLUS) => 1,
        Some(&Z_MINUS) => -1,
        _ => return Err(Error::Parse("integer word must start with a sign".into())),
    };
    let bits = &w[1..];
    if sign == 1 && bits.is_empty() {
        return Ok(0);
    }
    if bits.last() != Some(&Z_ONE) || bits.len() > 63 {
        return Err(Error::Parse("integer word must end in a one bit".into()));
    }
    let mut m = 0i64;
    for (k, l) in bits.iter().enumerate() {
        match *l {
            Z_ONE => m |= 1 << k,
            Z_ZERO => {}
            _ => return Err(Error::Parse("bad bit letter".into())),
        }
    }
    Ok(sign * m)
}

/// Text form of an integer word, such as `+101`, `-1` or `+`.
pub fn z_text(w: &[Letter]) -> String {
    w.iter()
        .map(|l| match *l {
            Z_ZERO => '0',
            Z_ONE => '1',
            Z_PLUS => '+',
            Z_MINUS => '-',
            _ => '?',
        })
        .collect()
}

pub fn parse_z_text(s: &str) -> Result<Vec<Letter>> {
    let w = s
        .chars()
        .map(|c| match c {
            '0' => Ok(Z_ZERO),
            '1' => Ok(Z_ONE),
            '+' => Ok(Z_PLUS),
            '-' => Ok(Z_MINUS),
            _ => Err(Error::Parse(format!("bad integer word {s:?}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    decode_z(&w)?;
    Ok(w)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum ZTrack {
    Start,
    Sign(i8),
    Bits(i8, bool),
    Ended,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct ZState {
    tracks: [ZTrack; 2],
    carry: i64,
}

/// `{(u, u') : value(u') = value(u) + delta}` over the integer letters of
/// `alpha` (an arity-2 alphabet with at least [`Z_LETTERS`] auxiliary letters).
pub fn z_offset_relation(alpha: Alphabet, delta: i64) -> Result<Dfa> {
    if alpha.arity() != 2 || alpha.aux_letters() < Z_LETTERS {
        return Err(Error::AlphabetMismatch);
    }
    let idx = |l: Letter| alpha.letter_index(Some(l)).expect("integer letter");
    let pad = alpha.pad_index();
    let options = |t: ZTrack| -> Vec<(u32, ZTrack, i64)> {
        match t {
            ZTrack::Start => vec![(idx(Z_PLUS), ZTrack::Sign(1), 0), (idx(Z_MINUS), ZTrack::Sign(-1), 0)],
            ZTrack::Sign(s) | ZTrack::Bits(s, _) => {
                let mut v = vec![
                    (idx(Z_ZERO), ZTrack::Bits(s, false), 0),
                    (idx(Z_ONE), ZTrack::Bits(s, true), s as i64),
                ];
                if matches!(t, ZTrack::Bits(_, true) | ZTrack::Sign(1)) {
                    v.push((pad, ZTrack::Ended, 0));
                }
                v
            }
            ZTrack::Ended => vec![(pad, ZTrack::Ended, 0)],
        }
    };
    let finished = |t: ZTrack| matches!(t, ZTrack::Sign(1) | ZTrack::Ended | ZTrack::Bits(_, true));
    explore_dfa(
        alpha,
        ZState { tracks: [ZTrack::Start; 2], carry: -delta },
        1 << 16,
        |s| Ok(finished(s.tracks[0]) && finished(s.tracks[1]) && s.carry == 0),
        |s, out| {
            let at_sign = s.tracks[0] == ZTrack::Start && s.tracks[1] == ZTrack::Start;
            for (i0, t0, v0) in options(s.tracks[0]) {
                for &(i1, t1, v1) in &options(s.tracks[1]) {
                    if i0 == pad && i1 == pad {
                        continue;
                    }
                    let carry = if at_sign {
                        s.carry
                    } else {
                        let t = s.carry + v1 - v0;
                        if t % 2 != 0 {
                            continue;
                        }
                        t / 2
                    };
                    out.push((alpha.pack(&[i0, i1]), ZState { tracks: [t0, t1], carry }));
                }
            }
            Ok(())
        },
    )
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Phase {
    Head,
    Tail,
    Ended,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct CatState {
    phases: [Phase; 2],
    /// State of the head relation, `None` once both heads are over.
    head: Option<StateId>,
    tail: StateId,
    /// A tail letter of one track waiting for the other track's tail.
    pending: Option<(usize, u32)>,
}

/// Pairs `(u v, u' v')` with `(u, u')` in `head` and `(v, v')` in `tail`,
/// where heads use auxiliary letters and tails digits of `alpha`. The heads
/// of a pair may differ in length by at most one.
pub fn concat_relation(head: &Dfa, tail: &Dfa, alpha: Alphabet, budget: usize) -> Result<Dfa> {
    let ta = *tail.alphabet();
    if head.alphabet() != &alpha || ta.arity() != 2 || ta.digit_bound() != alpha.digit_bound() {
        return Err(Error::AlphabetMismatch);
    }
    let pad = alpha.pad_index();
    let tpad = ta.pad_index();
    let digit_top = 2 * alpha.digit_bound();
    let head_letters: Vec<u32> = (0..=pad).collect();
    let tail_letters: Vec<u32> = (0..=digit_top).chain([pad]).collect();
    let letters = |p: Phase| -> &[u32] {
        match p {
            Phase::Head => &head_letters,
            Phase::Tail => &tail_letters,
            Phase::Ended => &head_letters[pad as usize..],
        }
    };
    let tail_pair = |t: usize, l: u32, other: u32| if t == 0 { [l, other] } else { [other, l] };
    let d = explore_dfa(
        alpha,
        CatState { phases: [Phase::Head; 2], head: Some(head.initial()), tail: tail.initial(), pending: None },
        budget,
        |s| {
            if s.head.is_some_and(|h| !head.is_accepting(h)) {
                return Ok(false);
            }
            let end = match s.pending {
                Some((t, l)) if l != tpad => tail.step(s.tail, ta.pack(&tail_pair(t, l, tpad))),
                _ => Some(s.tail),
            };
            Ok(end.is_some_and(|e| tail.is_accepting(e)))
        },
        |s, out| {
            for &x0 in letters(s.phases[0]) {
                for &x1 in letters(s.phases[1]) {
                    if x0 == pad && x1 == pad {
                        continue;
                    }
                    let xs = [x0, x1];
                    let mut next = *s;
                    let mut head_in = [pad; 2];
                    for j in 0..2 {
                        next.phases[j] = match (s.phases[j], xs[j]) {
                            (_, x) if x == pad => Phase::Ended,
                            (Phase::Head, x) if x > digit_top => {
                                head_in[j] = x;
                                Phase::Head
                            }
                            _ => Phase::Tail,
                        };
                    }
                    if let Some(h) = s.head {
                        next.head = if head_in == [pad, pad] {
                            if !head.is_accepting(h) {
                                continue;
                            }
                            None
                        } else {
                            match head.step(h, alpha.pack(&head_in)) {
                                Some(t) => Some(t),
                                None => continue,
                            }
                        };
                    }
                    let contrib: [Option<u32>; 2] = core::array::from_fn(|j| {
                        (next.phases[j] != Phase::Head).then(|| if xs[j] == pad { tpad } else { xs[j] })
                    });
                    let pair = match (s.pending, contrib) {
                        (_, [None, None]) => None,
                        (None, [Some(a), Some(b)]) => Some([a, b]),
                        (None, [Some(a), None]) => {
                            next.pending = Some((0, a));
                            None
                        }
                        (None, [None, Some(b)]) => {
                            next.pending = Some((1, b));
                            None
                        }
                        (Some((t, l)), c) => match (c[t], c[1 - t]) {
                            (Some(a), Some(b)) => {
                                next.pending = Some((t, a));
                                Some(tail_pair(t, l, b))
                            }
                            (Some(a), None) if a == tpad && l == tpad => None,
                            (Some(_), None) => continue,
                            (None, Some(b)) => {
                                next.pending = None;
                                Some(tail_pair(t, l, b))
                            }
                            (None, None) => None,
                        },
                    };
                    if let Some(pair) = pair.filter(|p| *p != [tpad, tpad]) {
                        match tail.step(s.tail, ta.pack(&pair)) {
                            Some(t) => next.tail = t,
                            None => continue,
                        }
                    }
                    out.push((alpha.pack(&xs), next));
                }
            }
            Ok(())
        },
    )?;
    Ok(minimize(&d))
}

/// `{(v, v') ∈ Dom^2 : v' = v + e}`: the addition relation with its second
/// track fixed to the canonical string of `e`, followed by `~` into `Dom`.
pub fn translation_on_dom(pres: &Presentation, e: &IntVec, budget: usize) -> Result<Dfa> {
    let add = build_add_relation(pres.params(), budget)?;
    let fixed = minimize(&fix_track(&add, 1, &pres.encode(e)?.letters())?);
    restrict_to_dom(pres, &fixed, budget)
}

/// `{(v, v') ∈ Dom^2 : (v, w) ∈ rel, w ~ v'}`.
fn restrict_to_dom(pres: &Presentation, rel: &Dfa, budget: usize) -> Result<Dfa> {
    let dom = pres.dom();
    let joined = join(
        &[
            JoinTrack { dfa: rel, tracks: &[0, 2] },
            JoinTrack { dfa: pres.equiv(), tracks: &[2, 1] },
            JoinTrack { dfa: dom, tracks: &[0] },
            JoinTrack { dfa: dom, tracks: &[1] },
        ],
        3,
        budget,
    )?;
    Ok(minimize(&determinize(&project(&Nfa::from(&joined), 2)?, budget)?))
}

/// `phi_g ∩ Dom^2`.
pub fn phi_on_dom(pres: &Presentation, g: &PolyMap, budget: usize) -> Result<Dfa> {
    let phi = build_phi_g_relation(g, pres, budget)?;
    let dom = pres.dom();
    let joined = join(
        &[
            JoinTrack { dfa: &phi, tracks: &[0, 1] },
            JoinTrack { dfa: dom, tracks: &[0] },
            JoinTrack { dfa: dom, tracks: &[1] },
        ],
        2,
        budget,
    )?;
    Ok(minimize(&joined))
}

/// A compiled representation of `Z^2 ⋊_A Z`.
#[derive(Clone, Debug)]
pub struct SemiRepresentation {
    matrix: Mat2,
    g: PolyMap,
    pres: Presentation,
    alphabet: Alphabet,
    r_a: Dfa,
    multipliers: Vec<Dfa>,
}

/// Requires `A` to be multiplication by some `ax + b` with `det A = ±1`.
pub fn build_representation(a: &Mat2, pres: &Presentation, budget: usize) -> Result<SemiRepresentation> {
    let params = pres.params();
    let g = poly_of_matrix(a, params)?
        .ok_or_else(|| Error::NotRecognizable(format!("{a} is not multiplication by a polynomial")))?;
    if !a.is_unimodular() {
        return Err(Error::NotRecognizable(format!("det {a} is not ±1")));
    }
    let alphabet = Alphabet::new(2, params.digit_bound(), Z_LETTERS)?;
    let r_a = phi_on_dom(pres, &g, budget)?;
    let mut multipliers = vec![concat_relation(&z_offset_relation(alphabet, 1)?, &r_a, alphabet, budget)?];
    let same = z_offset_relation(alphabet, 0)?;
    for i in 1..=2 {
        let e = SemiElement::generator(i)?.h;
        let t = translation_on_dom(pres, &e, budget)?;
        multipliers.push(concat_relation(&same, &t, alphabet, budget)?);
    }
    Ok(SemiRepresentation { matrix: a.clone(), g, pres: pres.clone(), alphabet, r_a, multipliers })
}

impl SemiRepresentation {
    pub fn matrix(&self) -> &Mat2 {
        &self.matrix
    }

    pub fn poly(&self) -> &PolyMap {
        &self.g
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn params(&self) -> &ReprParams {
        self.pres.params()
    }

    /// The arity-2 alphabet of the multiplier automata.
    pub fn pair_alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// The single-track alphabet of representatives.
    pub fn word_alphabet(&self) -> Alphabet {
        self.alphabet.with_arity(1).expect("smaller arity fits")
    }

    /// `phi_A ∩ Dom^2`.
    pub fn r_a(&self) -> &Dfa {
        &self.r_a
    }

    /// The multiplier automaton for `g_i`, `i ∈ {0, 1, 2}`.
    pub fn multiplier(&self, i: usize) -> Result<&Dfa> {
        self.multipliers.get(i).ok_or(Error::DimensionMismatch { expected: 3, got: i + 1 })
    }

    pub fn multipliers(&self) -> &[Dfa] {
        &self.multipliers
    }

    pub fn encode(&self, g: &SemiElement) -> Result<Vec<Letter>> {
        let mut w = encode_z(g.b);
        w.extend(self.pres.encode(&g.h)?.letters());
        Ok(w)
    }

    /// Splits a word into its integer and digit parts.
    pub fn split(&self, w: &[Letter]) -> Result<(i64, DigitString)> {
        let cut = w.iter().position(|l| matches!(l, Letter::Digit(_))).unwrap_or(w.len());
        let b = decode_z(&w[..cut])?;
        let digits = w[cut..]
            .iter()
            .map(|l| match l {
                Letter::Digit(d) => Ok(*d),
                Letter::Aux(_) => Err(Error::Parse("integer letter after digits".into())),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((b, DigitString::new(digits)))
    }

    /// Inverse of [`Self::encode`]; rejects words outside the language.
    pub fn decode(&self, w: &[Letter]) -> Result<SemiElement> {
        let (b, v) = self.split(w)?;
        v.check_bound(self.params().digit_bound())?;
        if !self.pres.is_canonical(&v) {
            return Err(Error::Parse(format!("{v} is not canonical")));
        }
        Ok(SemiElement { b, h: self.pres.decode(&v)? })
    }

    pub fn word(&self, w: &[Letter]) -> Result<Vec<u32>> {
        let a = self.word_alphabet();
        w.iter().map(|&l| a.letter_index(Some(l))).collect()
    }

    pub fn pair_word(&self, u: &[Letter], v: &[Letter]) -> Result<Vec<u32>> {
        self.alphabet.encode_word(&crate::words::convolve(&[u, v]))
    }

    /// Whether the multiplier for `g_i` accepts `(encode(x), encode(y))`.
    pub fn accepts_step(&self, i: usize, x: &SemiElement, y: &SemiElement) -> Result<bool> {
        let w = self.pair_word(&self.encode(x)?, &self.encode(y)?)?;
        Ok(self.multiplier(i)?.accepts(&w))
    }

    /// The words `w'` with `(w, w')` accepted by the multiplier for `g_i`.
    pub fn images(&self, i: usize, w: &[Letter]) -> Result<Dfa> {
        Ok(minimize(&fix_track(self.multiplier(i)?, 0, w)?))
    }

    /// `L_{Z^2}`: representatives of elements `(0, h)`, that is `+` followed
    /// by a canonical string.
    pub fn subgroup_language(&self) -> Dfa {
        let dom = self.pres.dom();
        let alpha = self.word_alphabet();
        let n = dom.num_states() as StateId;
        let mut rows = dom.rows().to_vec();
        rows.push(vec![(alpha.letter_index(Some(Z_PLUS)).expect("integer letter"), dom.initial())]);
        let mut accepting = dom.accepting().to_vec();
        accepting.push(false);
        minimize(&Dfa::from_parts(alpha, n, accepting, rows).expect("digit letters keep their indices"))
    }

    /// The whole language of representatives.
    pub fn language(&self) -> Result<Dfa> {
        let alpha = self.word_alphabet();
        let dom = self.pres.dom();
        let idx = |l: Letter| alpha.letter_index(Some(l)).expect("integer letter");
        #[derive(Clone, Copy, PartialEq, Eq, Hash)]
        enum S {
            Start,
            Sign(bool),
            Bits(bool),
            Tail(StateId),
        }
        let d = explore_dfa(
            alpha,
            S::Start,
            usize::MAX,
            |s| {
                Ok(match s {
                    S::Start => false,
                    S::Sign(plus) | S::Bits(plus) => *plus && dom.is_accepting(dom.initial()),
                    S::Tail(t) => dom.is_accepting(*t),
                })
            },
            |s, out| {
                let tail_from = |t: StateId, out: &mut Vec<(u32, S)>| {
                    for &(sym, t2) in dom.row(t) {
                        out.push((sym, S::Tail(t2)));
                    }
                };
                match *s {
                    S::Start => {
                        out.push((idx(Z_PLUS), S::Sign(true)));
                        out.push((idx(Z_MINUS), S::Sign(false)));
                    }
                    S::Sign(_) | S::Bits(_) => {
                        out.push((idx(Z_ZERO), S::Bits(false)));
                        out.push((idx(Z_ONE), S::Bits(true)));
                        if matches!(s, S::Sign(true) | S::Bits(true)) {
                            tail_from(dom.initial(), out);
                        }
                    }
                    S::Tail(t) => tail_from(t, out),
                }
                Ok(())
            },
        )?;
        Ok(minimize(&d))
    }
}

/// A check of property a): `L_{Z^2}` regular and `R_A` recognizable, with
/// spot tests against exact arithmetic.
#[derive(Clone, Debug)]
pub struct PropertyAReport {
    pub subgroup_states: usize,
    pub r_a_states: usize,
    pub multiplier_states: Vec<usize>,
    pub checks: Vec<(String, bool)>,
}

impl PropertyAReport {
    pub fn passed(&self) -> bool {
        self.subgroup_states > 0 && self.r_a_states > 0 && self.checks.iter().all(|c| c.1)
    }
}

/// Builds the report on the given sample vectors (each tested for
/// `(h, A h) ∈ R_A` and membership of `h`'s string in `L_{Z^2}`).
pub fn verify_property_a(rep: &SemiRepresentation, samples: &[IntVec]) -> Result<PropertyAReport> {
    let pres = rep.presentation();
    let sub = rep.subgroup_language();
    let ra = rep.r_a();
    let pair = *ra.alphabet();
    let mut checks = Vec::new();
    for h in samples {
        let v = pres.encode(h)?;
        let image = apply_matrix(rep.matrix(), h)?;
        let w = pres.encode(&image)?;
        let word = rep.word(&rep.encode(&SemiElement::new(0, h.clone()))?)?;
        checks.push((format!("{v} in L_Z2"), !sub.is_empty() && sub.accepts(&word)));
        checks.push((
            format!("R_A accepts ({h}, {image})"),
            ra.accepts(&pair.word_of_strings(&[&v, &w])?),
        ));
        if image != *h {
            checks.push((format!("R_A rejects ({h}, {h})"), !ra.accepts(&pair.word_of_strings(&[&v, &v])?)));
        }
    }
    Ok(PropertyAReport {
        subgroup_states: if sub.is_empty() { 0 } else { sub.num_states() },
        r_a_states: if ra.is_empty() { 0 } else { ra.num_states() },
        multiplier_states: rep.multipliers().iter().map(Dfa::num_states).collect(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_words() {
        for b in -40..=40 {
            assert_eq!(decode_z(&encode_z(b)).unwrap(), b);
        }
        assert_eq!(z_text(&encode_z(6)), "+011");
        assert_eq!(z_text(&encode_z(-1)), "-1");
        assert_eq!(z_text(&encode_z(0)), "+");
        assert!(parse_z_text("+10").is_err());
        assert!(parse_z_text("-").is_err());
        assert!(parse_z_text("").is_err());
    }

    #[test]
    fn successor_relation() {
        let alpha = Alphabet::new(2, 2, Z_LETTERS).unwrap();
        let succ = z_offset_relation(alpha, 1).unwrap();
        for b in -20..=20 {
            for c in -20..=20 {
                let w = crate::words::convolve(&[&encode_z(b)[..], &encode_z(c)[..]]);
                let word = alpha.encode_word(&w).unwrap();
                assert_eq!(succ.accepts(&word), c == b + 1, "{b} {c}");
            }
        }
    }

    #[test]
    fn multiply_examples() {
        let a = Mat2::new(-3, 1, -11, 4);
        let t = SemiElement::new(1, IntVec::zero(2));
        let ti = SemiElement::new(-1, IntVec::zero(2));
        assert_eq!(multiply(&t, &ti, &a).unwrap(), SemiElement::identity());
        let e1 = SemiElement::generator(1).unwrap();
        let got = multiply(&e1, &t, &a).unwrap();
        assert_eq!(got, SemiElement::new(1, IntVec::from_i64s(&[-11, -3])));
        let g = SemiElement::new(3, IntVec::from_i64s(&[5, -2]));
        assert_eq!(multiply(&g, &inverse(&g, &a).unwrap(), &a).unwrap(), SemiElement::identity());
    }
}
