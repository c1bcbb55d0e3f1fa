//! Multiplication-by-`g` relations `phi_g = {(u, v) : f_v ~ g f_u}` and, for
//! `n = 2`, the correspondence between `g = ax + b` and the matrix of
//! multiplication by `g`.
//!
//! Matrices act on coordinates `(h_1, h_2)` of `h = h_1 x + h_2`, that is on
//! `(r_1, r_0)` of an [`IntVec`] `(r_0, r_1)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::automata::{determinize, explore_dfa, join, minimize, project, Dfa, JoinTrack, Nfa};
use crate::carry::{LinearChecker, Transducer};
use crate::error::{Error, Result};
use crate::matrix::Mat2;
use crate::presentation::{build_add_relation, Presentation};
use crate::ring::{residue, IntVec, Polynomial, ReprParams};

/// A multiplier `g = a_0 + a_1 x + ... + a_{n-1} x^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMap(Vec<i64>);

impl PolyMap {
    pub fn new(coeffs: Vec<i64>) -> Self {
        let mut c = coeffs;
        while c.last() == Some(&0) {
            c.pop();
        }
        Self(c)
    }

    /// `g = a x + b`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_coeffs(self.0.iter().copied())
    }

    /// `residue(g f)` for `f` given by its residue.
    pub fn apply(&self, v: &IntVec, params: &ReprParams) -> IntVec {
        residue(&(&self.to_polynomial() * &v.to_polynomial()), params)
    }
}

fn compose(a: &Dfa, b: &Dfa, budget: usize) -> Result<Dfa> {
    let joined = join(
        &[JoinTrack { dfa: a, tracks: &[0, 1] }, JoinTrack { dfa: b, tracks: &[1, 2] }],
        3,
        budget,
    )?;
    Ok(minimize(&determinize(&project(&Nfa::from(&joined), 1)?, budget)?))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Delay {
    Start,
    Hold(i32),
    Flushed,
}

/// `{(u, 0u)}`: the string shifted by one position, for nonempty `u`, and
/// `(ε, ε)`.
pub fn delay_relation(digit_bound: u32) -> Result<Dfa> {
    let alpha = crate::automata::Alphabet::digits(2, digit_bound)?;
    let b = digit_bound as i32;
    let pad = alpha.pad_index();
    explore_dfa(
        alpha,
        Delay::Start,
        64,
        |s| Ok(matches!(s, Delay::Start | Delay::Flushed)),
        |s, out| {
            let held = match s {
                Delay::Start => 0,
                Delay::Hold(d) => *d,
                Delay::Flushed => return Ok(()),
            };
            let hi = alpha.digit_index(held);
            for d in -b..=b {
                out.push((alpha.pack(&[alpha.digit_index(d), hi]), Delay::Hold(d)));
            }
            if matches!(s, Delay::Hold(_)) {
                out.push((alpha.pack(&[pad, hi]), Delay::Flushed));
            }
            Ok(())
        },
    )
}

/// `{(u, v) : f_v ~ x f_u}`: the delay relation composed with `~`.
pub fn shift_relation(pres: &Presentation, budget: usize) -> Result<Dfa> {
    let delay = delay_relation(pres.params().digit_bound())?;
    compose(&delay, pres.equiv(), budget)
}

/// `phi_g` as a single carry machine checking `g f_u - f_v ≡ 0`; an
/// independent construction used to cross-check [`build_phi_g_relation`].
pub fn build_phi_g_direct(g: &PolyMap, pres: &Presentation, budget: usize) -> Result<Dfa> {
    check_len(g, pres)?;
    let checker = LinearChecker::multiplication(pres.params(), g.coeffs())?;
    Ok(minimize(&checker.to_dfa(budget)?))
}

fn check_len(g: &PolyMap, pres: &Presentation) -> Result<()> {
    let n = pres.params().degree();
    if g.coeffs().len() > n {
        return Err(Error::DimensionMismatch { expected: n, got: g.coeffs().len() });
    }
    Ok(())
}

/// `phi_g` for `g = sum_k a_k x^k`, assembled from functional pieces: the
/// delay gives `x^k u`, scalar transducers give `a_k x^k u`, addition
/// transducers sum the terms, and a final `~` lets `v` be any equivalent
/// string. All intermediate tracks are projected away.
pub fn build_phi_g_relation(g: &PolyMap, pres: &Presentation, budget: usize) -> Result<Dfa> {
    check_len(g, pres)?;
    let params = pres.params();
    let delay = delay_relation(params.digit_bound())?;
    let mut parts: Vec<(Dfa, Vec<usize>)> = Vec::new();
    let mut tracks = 2;
    let mut fresh = || {
        tracks += 1;
        tracks - 1
    };
    let mut shifted = 0;
    let mut summands = Vec::new();
    for (k, &a) in g.coeffs().iter().enumerate() {
        if k > 0 {
            let t = fresh();
            parts.push((delay.clone(), vec![shifted, t]));
            shifted = t;
        }
        match a {
            0 => {}
            1 => summands.push(shifted),
            a => {
                let t = fresh();
                let scalar = minimize(&Transducer::scalar(params, a)?.relation_dfa(budget)?);
                parts.push((scalar, vec![shifted, t]));
                summands.push(t);
            }
        }
    }
    let Some((&first, rest)) = summands.split_first() else {
        return build_phi_g_direct(g, pres, budget);
    };
    let add = build_add_relation(params, budget)?;
    let mut total = first;
    for &y in rest {
        let t = fresh();
        parts.push((add.clone(), vec![total, y, t]));
        total = t;
    }
    parts.push((pres.equiv().clone(), vec![total, 1]));
    let arity = fresh();
    let factors: Vec<JoinTrack<'_>> =
        parts.iter().map(|(dfa, tr)| JoinTrack { dfa, tracks: tr }).collect();
    let mut cur = minimize(&join(&factors, arity, budget)?);
    for t in (2..arity).rev() {
        cur = minimize(&determinize(&project(&Nfa::from(&cur), t)?, budget)?);
    }
    Ok(cur)
}

fn require_quadratic(params: &ReprParams) -> Result<i64> {
    match params.p() {
        [p] => Ok(*p),
        _ => Err(Error::DimensionMismatch { expected: 2, got: params.degree() }),
    }
}

/// Matrix of multiplication by `g = ax + b` on `(h_1, h_2)`:
/// `((b - ap, a), (aq, b))`.
pub fn matrix_of_poly(g: &PolyMap, params: &ReprParams) -> Result<Mat2> {
    let p = require_quadratic(params)?;
    if g.coeffs().len() > 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: g.coeffs().len() });
    }
    let (a, b) = (BigInt::from(g.coeff(1)), BigInt::from(g.coeff(0)));
    let q = BigInt::from(params.q());
    Ok(Mat2([[&b - &a * p, a.clone()], [&a * &q, b]]))
}

/// Inverse of [`matrix_of_poly`]: `a = A_12`, `b = A_22`, provided the other
/// two entries match.
pub fn poly_of_matrix(m: &Mat2, params: &ReprParams) -> Result<Option<PolyMap>> {
    let p = require_quadratic(params)?;
    let a = m.entry(0, 1).clone();
    let b = m.entry(1, 1).clone();
    let ok = *m.entry(0, 0) == &b - &a * p && *m.entry(1, 0) == &a * BigInt::from(params.q());
    if !ok {
        return Ok(None);
    }
    match (i64::try_from(&a), i64::try_from(&b)) {
        (Ok(a), Ok(b)) => Ok(Some(PolyMap::linear(a, b))),
        _ => Err(Error::NotRecognizable("entries out of range".into())),
    }
}

/// `A` is multiplication by some `ax + b` and `det A = ±1`.
pub fn is_recognizable_automorphism(m: &Mat2, params: &ReprParams) -> Result<bool> {
    Ok(poly_of_matrix(m, params)?.is_some() && m.is_unimodular())
}

/// `A` applied to an [`IntVec`] `(r_0, r_1)` through `(h_1, h_2) = (r_1, r_0)`.
pub fn apply_matrix(m: &Mat2, v: &IntVec) -> Result<IntVec> {
    if v.len() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: v.len() });
    }
    let c = v.coords();
    let [h1, h2] = m.apply(&[c[1].clone(), c[0].clone()]);
    Ok(IntVec::new(vec![h2, h1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_bridge_examples() {
        let params = ReprParams::quadratic(7, -11).unwrap();
        let m = matrix_of_poly(&PolyMap::linear(1, 4), &params).unwrap();
        assert_eq!(m, Mat2::new(-3, 1, -11, 4));
        assert_eq!(m.det(), BigInt::from(-1));
        assert_eq!(poly_of_matrix(&m, &params).unwrap(), Some(PolyMap::linear(1, 4)));
        assert!(is_recognizable_automorphism(&m, &params).unwrap());
        assert_eq!(matrix_of_poly(&PolyMap::linear(0, 1), &params).unwrap(), Mat2::identity());
        assert_eq!(matrix_of_poly(&PolyMap::new(vec![]), &params).unwrap(), Mat2::zero());
        let t1 = Mat2::new(1, 0, 1, 1);
        assert_eq!(poly_of_matrix(&t1, &params).unwrap(), None);
        assert!(!is_recognizable_automorphism(&t1, &params).unwrap());
        assert!(is_recognizable_automorphism(&(-&Mat2::identity()), &params).unwrap());
        assert_eq!(poly_of_matrix(&Mat2::identity(), &params).unwrap(), Some(PolyMap::linear(0, 1)));
    }

    #[test]
    fn apply_matches_ring() {
        let params = ReprParams::quadratic(7, -11).unwrap();
        let g = PolyMap::linear(1, 4);
        let m = matrix_of_poly(&g, &params).unwrap();
        for v in [[1, 0], [0, 1], [5, -3]] {
            let v = IntVec::from_i64s(&v);
            assert_eq!(apply_matrix(&m, &v).unwrap(), g.apply(&v, &params));
        }
    }

    #[test]
    fn delay_examples() {
        let d = delay_relation(2).unwrap();
        let a = *d.alphabet();
        let w = |u: &str, v: &str| a.word_of_strings(&[&u.parse().unwrap(), &v.parse().unwrap()]).unwrap();
        assert!(d.accepts(&w("[]", "[]")));
        assert!(d.accepts(&w("[1,2]", "[0,1,2]")));
        assert!(!d.accepts(&w("[1,2]", "[1,2]")));
        assert!(!d.accepts(&w("[1,2]", "[0,1]")));
    }
}
