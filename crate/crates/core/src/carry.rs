//! Carry machines reading digit strings least significant digit first.
//!
//! A [`LinearChecker`] decides `sum_j c_j(x) f_{w_j}(x) + K ≡ 0 (mod t)` for
//! a tuple of strings `w_j`. Its state is the pending polynomial `r` with
//! `T ≡ x^k r` where `T` is the part of the sum consumed so far; reading
//! position `k` adds the digit contributions to `r`, which must then have
//! constant term divisible by `q`, and `r + [r_0/q] t` is divided by `x`.
//! The equivalence relation is the checker with coefficients `(1, -1)`.
//!
//! A [`Transducer`] emits the digits of a sum with the same carry
//! update, choosing at each position the digit of the sign of
//! `r_0 + a + b` that is congruent to it modulo `q`.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use crate::automata::{explore_dfa, Alphabet, Dfa};
use crate::error::{Error, Result};
use crate::ring::{IntVec, ReprParams};
use crate::words::DigitString;

/// Declared carry bounds: `|r_{n-1}| <= |q|-1`,
/// `|r_{n-1-k}| <= (|q|-1)(1 + |p_{n-1}| + ... + |p_{n-k}|)` and
/// `|r_0| <= (|q|-1)^2`.
pub fn declared_bounds(params: &ReprParams) -> Vec<i64> {
    let n = params.degree();
    let d = params.digit_bound() as i64;
    let p = params.p();
    let mut b = vec![0i64; n];
    b[n - 1] = d;
    let mut acc = 1i64;
    for k in 1..n - 1 {
        acc += p[n - 1 - k].abs();
        b[n - 1 - k] = d * acc;
    }
    b[0] = d * d;
    b
}

/// Coefficient of `x^l` in `t` (zero past the degree).
fn t_coeff(params: &ReprParams, l: usize) -> i64 {
    let n = params.degree();
    match l {
        0 => -params.q(),
        l if l < n => params.p()[l - 1],
        l if l == n => 1,
        _ => 0,
    }
}

/// Divides `r` (one slot longer than the state) by `x` after clearing the
/// constant term with `k = r_0 / q`; `None` when `q` does not divide `r_0`.
fn carry_shift(params: &ReprParams, mut r: Vec<i64>) -> Option<Vec<i64>> {
    let q = params.q();
    if r[0] % q != 0 {
        return None;
    }
    let k = r[0] / q;
    if k != 0 {
        for (l, slot) in r.iter_mut().enumerate().skip(1).take(params.degree()) {
            *slot += k * t_coeff(params, l);
        }
    }
    r.remove(0);
    Some(r)
}

/// Least box of carry magnitudes containing `initial` and closed under
/// steps whose input adds at most `input(i)` to slot `i`, by monotone
/// iteration.
fn invariant_box(params: &ReprParams, initial: Vec<i64>, input: impl Fn(usize) -> i64) -> Result<Vec<i64>> {
    let len = initial.len();
    let q = params.q().abs();
    let mut b: Vec<i64> = initial.iter().map(|x| x.abs()).collect();
    for _ in 0..100_000 {
        let kmax = (b[0] + input(0)) / q;
        let next: Vec<i64> = (0..len)
            .map(|i| {
                let from_above = b.get(i + 1).copied().unwrap_or(0) + input(i + 1);
                b[i].max(from_above + kmax * t_coeff(params, i + 1).abs())
            })
            .collect();
        if next == b {
            return Ok(b);
        }
        if next.iter().any(|&x| x > 1 << 40) {
            break;
        }
        b = next;
    }
    Err(Error::InvalidParams("carry bounds do not converge".into()))
}

fn within(r: &[i64], bounds: &[i64]) -> bool {
    r.iter().zip(bounds).all(|(v, b)| v.abs() <= *b)
}

/// Checker for `sum_j c_j f_{w_j} + K ≡ 0 (mod t)`.
#[derive(Clone, Debug)]
pub struct LinearChecker {
    params: ReprParams,
    coeffs: Vec<Vec<i64>>,
    initial: Vec<i64>,
    bounds: Vec<i64>,
}

impl LinearChecker {
    /// `coeffs[j]` lists the coefficients of `c_j`, low degree first;
    /// `constant` is `K` as residue coordinates.
    pub fn new(params: &ReprParams, coeffs: Vec<Vec<i64>>, constant: &[i64]) -> Result<Self> {
        params.validate()?;
        let n = params.degree();
        let len = coeffs.iter().map(Vec::len).max().unwrap_or(0).max(n).max(constant.len());
        let mut initial = constant.to_vec();
        initial.resize(len, 0);
        let d = params.digit_bound() as i64;
        let input = |i: usize| -> i64 {
            coeffs.iter().map(|cj| cj.get(i).map_or(0, |x| x.abs()) * d).sum()
        };
        let bounds = invariant_box(params, initial.clone(), input)?;
        Ok(Self { params: params.clone(), coeffs, initial, bounds })
    }

    /// The equivalence relation `f_u ~ f_v`, with the declared bounds.
    pub fn equivalence(params: &ReprParams) -> Result<Self> {
        let mut c = Self::new(params, vec![vec![1], vec![-1]], &[])?;
        c.bounds = declared_bounds(params);
        Ok(c)
    }

    /// `f_v ~ f_u + e`: translation by a fixed vector.
    pub fn translation(params: &ReprParams, e: &IntVec) -> Result<Self> {
        let k: Vec<i64> = e
            .coords()
            .iter()
            .map(|c| i64::try_from(c).map_err(|_| Error::InvalidParams("translation too large".into())))
            .collect::<Result<_>>()?;
        Self::new(params, vec![vec![1], vec![-1]], &k)
    }

    /// `f_v ~ g f_u` for `g` given by its coefficients.
    pub fn multiplication(params: &ReprParams, g: &[i64]) -> Result<Self> {
        Self::new(params, vec![g.to_vec(), vec![-1]], &[])
    }

    pub fn params(&self) -> &ReprParams {
        &self.params
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    pub fn initial(&self) -> &[i64] {
        &self.initial
    }

    pub fn bounds(&self) -> &[i64] {
        &self.bounds
    }

    /// One step on digits `digits[j]` (padding read as 0); `None` is the
    /// dead state.
    pub fn step(&self, r: &[i64], digits: &[i64]) -> Option<Vec<i64>> {
        let mut next = Vec::with_capacity(r.len() + 1);
        next.extend_from_slice(r);
        next.push(0);
        for (c, &d) in self.coeffs.iter().zip(digits) {
            if d != 0 {
                for (i, &ci) in c.iter().enumerate() {
                    next[i] += d * ci;
                }
            }
        }
        carry_shift(&self.params, next)
    }

    /// Whether `r ≡ 0 (mod t)`: zero steps from `r` reach the zero state.
    pub fn zero_closure(&self, r: &[i64]) -> bool {
        let zeros = vec![0; self.arity()];
        let mut seen = HashSet::new();
        let mut cur = r.to_vec();
        loop {
            if cur.iter().all(|&x| x == 0) {
                return true;
            }
            if !seen.insert(cur.clone()) {
                return false;
            }
            match self.step(&cur, &zeros) {
                Some(next) => cur = next,
                None => return false,
            }
        }
    }

    pub fn in_bounds(&self, r: &[i64]) -> bool {
        within(r, &self.bounds)
    }

    /// Runs the checker on a tuple of strings.
    pub fn accepts(&self, words: &[&DigitString]) -> Result<bool> {
        if words.len() != self.arity() {
            return Err(Error::DimensionMismatch { expected: self.arity(), got: words.len() });
        }
        let len = words.iter().map(|w| w.len()).max().unwrap_or(0);
        let mut r = self.initial.clone();
        for i in 0..len {
            let digits: Vec<i64> =
                words.iter().map(|w| w.digits().get(i).map_or(0, |&d| d as i64)).collect();
            match self.step(&r, &digits) {
                Some(next) => r = next,
                None => return Ok(false),
            }
            if !self.in_bounds(&r) {
                return Err(Error::CarryOutOfBounds { state: r });
            }
        }
        Ok(self.zero_closure(&r))
    }

    /// Compiles the checker over `Sigma_q^m`; the state also records which
    /// tracks have ended so that padding stays legal.
    pub fn to_dfa(&self, budget: usize) -> Result<Dfa> {
        let m = self.arity();
        let alpha = Alphabet::digits(m, self.params.digit_bound())?;
        let b = self.params.digit_bound() as i64;
        let pad = alpha.pad_index();
        // Letter choices per ended-mask, as (indices, digits read).
        let masks = 1usize << m;
        let choices: Vec<Vec<(u32, Vec<i64>, u32)>> = (0..masks as u32)
            .map(|ended| {
                alpha
                    .legal_symbols_after(ended)
                    .into_iter()
                    .map(|sym| {
                        let digits = alpha
                            .indices(sym)
                            .iter()
                            .map(|&i| if i == pad { 0 } else { i as i64 - b })
                            .collect();
                        (sym, digits, alpha.pad_mask(sym))
                    })
                    .collect()
            })
            .collect();
        let mut memo: HashMap<Vec<i64>, bool> = HashMap::new();
        explore_dfa(
            alpha,
            (self.initial.clone(), 0u32),
            budget,
            |(r, _)| Ok(*memo.entry(r.clone()).or_insert_with(|| self.zero_closure(r))),
            |(r, ended), out| {
                for (sym, digits, mask) in &choices[*ended as usize] {
                    if let Some(next) = self.step(r, digits) {
                        if !self.in_bounds(&next) {
                            return Err(Error::CarryOutOfBounds { state: next });
                        }
                        out.push((*sym, (next, *mask)));
                    }
                }
                Ok(())
            },
        )
    }
}

/// A digit-emitting carry machine for `sum_j m_j f_{u_j}`; the addition
/// transducer has weights `(1, 1)`.
#[derive(Clone, Debug)]
pub struct Transducer {
    params: ReprParams,
    weights: Vec<i64>,
    bounds: Vec<i64>,
}

impl Transducer {
    /// The addition transducer, with the declared bounds.
    pub fn addition(params: &ReprParams) -> Result<Self> {
        params.validate()?;
        Ok(Self { params: params.clone(), weights: vec![1, 1], bounds: declared_bounds(params) })
    }

    /// Multiplication of one string by the integer `m`.
    pub fn scalar(params: &ReprParams, m: i64) -> Result<Self> {
        Self::weighted(params, vec![m])
    }

    pub fn weighted(params: &ReprParams, weights: Vec<i64>) -> Result<Self> {
        params.validate()?;
        let d = params.digit_bound() as i64;
        let input: i64 = weights.iter().map(|m| m.abs() * d).sum();
        let bounds = invariant_box(params, vec![0; params.degree()], |i| if i == 0 { input } else { 0 })?;
        Ok(Self { params: params.clone(), weights, bounds })
    }

    pub fn params(&self) -> &ReprParams {
        &self.params
    }

    pub fn bounds(&self) -> &[i64] {
        &self.bounds
    }

    pub fn inputs(&self) -> usize {
        self.weights.len()
    }

    /// Emits one digit for the input digits and returns it with the next
    /// carries.
    pub fn step(&self, r: &[i64], inputs: &[i64]) -> (i64, Vec<i64>) {
        let q = self.params.q();
        let s = r[0] + self.weights.iter().zip(inputs).map(|(m, a)| m * a).sum::<i64>();
        // Truncated remainder: same sign as s, magnitude below |q|.
        let c = s % q;
        let mut next = Vec::with_capacity(r.len() + 1);
        next.extend_from_slice(r);
        next.push(0);
        next[0] = s - c;
        let next = carry_shift(&self.params, next).expect("s - c is a multiple of q");
        (c, next)
    }

    pub fn in_bounds(&self, r: &[i64]) -> bool {
        within(r, &self.bounds)
    }

    /// Runs the transducer, continuing on zero inputs until the carries
    /// vanish.
    pub fn run(&self, words: &[&DigitString]) -> Result<DigitString> {
        if words.len() != self.inputs() {
            return Err(Error::DimensionMismatch { expected: self.inputs(), got: words.len() });
        }
        let n = self.params.degree();
        let len = words.iter().map(|w| w.len()).max().unwrap_or(0);
        let mut r = vec![0i64; n];
        let mut out = Vec::with_capacity(len + n + 2);
        let zeros = vec![0i64; self.inputs()];
        let mut seen = HashSet::new();
        let mut i = 0;
        loop {
            let inputs: Vec<i64> = if i < len {
                words.iter().map(|w| w.digits().get(i).map_or(0, |&d| d as i64)).collect()
            } else if r.iter().all(|&x| x == 0) {
                break;
            } else {
                if !seen.insert(r.clone()) {
                    return Err(Error::CarryCycle);
                }
                zeros.clone()
            };
            let (c, next) = self.step(&r, &inputs);
            if !self.in_bounds(&next) {
                return Err(Error::CarryOutOfBounds { state: next });
            }
            out.push(c as i32);
            r = next;
            i += 1;
        }
        Ok(DigitString::new(out))
    }

    pub fn add(&self, u: &DigitString, v: &DigitString) -> Result<DigitString> {
        self.run(&[u, v])
    }

    /// The graph of the transducer: inputs on the first tracks, output on
    /// the last. The output carries the emitted digit at every position
    /// where some input does, and continues alone exactly while the
    /// carries are nonzero.
    pub fn relation_dfa(&self, budget: usize) -> Result<Dfa> {
        let m = self.inputs();
        let alpha = Alphabet::digits(m + 1, self.params.digit_bound())?;
        let b = self.params.digit_bound() as i32;
        let pad = alpha.pad_index();
        let n = self.params.degree();
        // Input letter choices per ended-mask of the inputs.
        let masks = 1u32 << m;
        let choices: Vec<Vec<(Vec<u32>, Vec<i64>, u32)>> = (0..masks)
            .map(|ended| {
                let mut acc: Vec<(Vec<u32>, Vec<i64>, u32)> = vec![(Vec::new(), Vec::new(), 0)];
                for j in 0..m {
                    let opts: Vec<Option<i32>> = if ended & (1 << j) != 0 {
                        vec![None]
                    } else {
                        (-b..=b).map(Some).chain([None]).collect()
                    };
                    acc = acc
                        .into_iter()
                        .flat_map(|(idx, digits, mask)| {
                            opts.iter().map(move |o| {
                                let mut idx = idx.clone();
                                let mut digits = digits.clone();
                                idx.push(o.map_or(pad, |d| alpha.digit_index(d)));
                                digits.push(o.unwrap_or(0) as i64);
                                (idx, digits, mask | (o.is_none() as u32) << j)
                            })
                        })
                        .collect();
                }
                acc
            })
            .collect();
        explore_dfa(
            alpha,
            (vec![0i64; n], 0u32),
            budget,
            |(r, _)| Ok(r.iter().all(|&x| x == 0)),
            |(r, ended), out| {
                let idle = r.iter().all(|&x| x == 0);
                for (idx, digits, mask) in &choices[*ended as usize] {
                    if *mask == masks - 1 && idle {
                        continue;
                    }
                    let (c, next) = self.step(r, digits);
                    if !self.in_bounds(&next) {
                        return Err(Error::CarryOutOfBounds { state: next });
                    }
                    let mut idx = idx.clone();
                    idx.push(alpha.digit_index(c as i32));
                    out.push((alpha.pack(&idx), (next, *mask)));
                }
                Ok(())
            },
        )
    }
}
