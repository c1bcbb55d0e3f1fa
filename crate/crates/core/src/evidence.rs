//! Finite evidence (not proof) for non-regularity: lower bounds on the size
//! of any automaton consistent with a labeled sample, and the zero-prefix
//! witnesses `q^k ~ x^k (x^{n-1} + p_{n-1} x^{n-2} + ... + p_1)^k`.

use alloc::vec;
use core::fmt;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::ring::{reduce, IntVec, Polynomial};
use crate::words::DigitString;

/// Reports are finite evidence, never proofs.
pub const LABEL: &str = "EVIDENCE";

/// Strings of length at most `maxlen` with membership labels; strings not
/// listed are non-members.
#[derive(Clone, Debug)]
pub struct LabeledSample {
    pub maxlen: usize,
    pub entries: Vec<(DigitString, bool)>,
}

impl LabeledSample {
    pub fn members(&self) -> impl Iterator<Item = &DigitString> {
        self.entries.iter().filter(|e| e.1).map(|e| &e.0)
    }

    pub fn member_count(&self) -> usize {
        self.members().count()
    }
}

/// Canonical strings up to `maxlen`, labeled by membership of their value
/// in the cyclic subgroup generated by `generator`.
pub fn subgroup_language_sample(pres: &Presentation, generator: &IntVec, maxlen: usize) -> Result<LabeledSample> {
    let n = pres.params().degree();
    if generator.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: generator.len() });
    }
    let entries = pres
        .dom_members(maxlen)
        .into_iter()
        .map(|w| {
            let v = pres.decode(&w)?;
            Ok((w, v.multiple_of(generator).is_some()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LabeledSample { maxlen, entries })
}

/// The words of a single-track digit automaton up to `maxlen`, all labeled
/// members.
pub fn dfa_sample(dfa: &Dfa, maxlen: usize) -> Result<LabeledSample> {
    let alpha = *dfa.alphabet();
    if alpha.arity() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, got: alpha.arity() });
    }
    let entries = dfa
        .accepted_words(maxlen)
        .into_iter()
        .map(|w| alpha.digits_of_word(&w).map(|d| (DigitString::new(d), true)).ok_or(Error::AlphabetMismatch))
        .collect::<Result<Vec<_>>>()?;
    Ok(LabeledSample { maxlen, entries })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NerodeBound {
    pub maxlen: usize,
    pub suffix_len: usize,
    pub bound: usize,
    /// Length of the separating extensions used for the witnesses; the
    /// witnesses have length at most `maxlen - extension_len`.
    pub extension_len: usize,
    /// Pairwise distinguishable prefixes in llex order.
    pub prefixes: Vec<DigitString>,
}

impl fmt::Display for NerodeBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{LABEL}: at least {} states (maxlen {}, extensions up to {}, separated by length {})",
            self.bound, self.maxlen, self.suffix_len, self.extension_len
        )
    }
}

struct Node {
    member: bool,
    depth: usize,
    children: Vec<(i32, usize)>,
}

type Interner = HashMap<(bool, Vec<(i32, u32)>), u32>;

fn intern(map: &mut Interner, key: (bool, Vec<(i32, u32)>)) -> u32 {
    let next = map.len() as u32;
    *map.entry(key).or_insert(next)
}

/// For each `t <= suffix_len`, counts the prefixes `u` with
/// `|u| <= maxlen - t` whose truncated residuals `{z : |z| <= t, uz in L}`
/// are nonempty and pairwise different, and returns the best `t`. Two such
/// prefixes are separated by an extension keeping both strings within the
/// sampled lengths, so the count is a lower bound on the states of any trim
/// automaton agreeing with the sample. It is non-decreasing in `maxlen` and
/// in `suffix_len`.
pub fn nerode_lower_bound(sample: &LabeledSample, suffix_len: usize) -> NerodeBound {
    let maxlen = sample.maxlen;
    let mut nodes = vec![Node { member: false, depth: 0, children: Vec::new() }];
    for w in sample.members().filter(|w| w.len() <= maxlen) {
        let mut cur = 0;
        for &d in w.digits() {
            cur = match nodes[cur].children.binary_search_by_key(&d, |c| c.0) {
                Ok(i) => nodes[cur].children[i].1,
                Err(i) => {
                    let id = nodes.len();
                    let depth = nodes[cur].depth + 1;
                    nodes.push(Node { member: false, depth, children: Vec::new() });
                    nodes[cur].children.insert(i, (d, id));
                    id
                }
            };
        }
        nodes[cur].member = true;
    }
    // Nodes in llex order of their strings.
    let mut order = vec![0usize];
    let mut i = 0;
    while i < order.len() {
        order.extend(nodes[order[i]].children.iter().map(|c| c.1));
        i += 1;
    }
    let mut interner = Interner::new();
    let empty = intern(&mut interner, (false, Vec::new()));
    let mut ids: Vec<u32> = nodes.iter().map(|n| intern(&mut interner, (n.member, Vec::new()))).collect();
    let mut best: (usize, usize, Vec<usize>) = (0, 0, Vec::new());
    for t in 0..=suffix_len.min(maxlen) {
        if t > 0 {
            ids = nodes
                .iter()
                .map(|n| {
                    let kids = n.children.iter().map(|&(d, c)| (d, ids[c])).filter(|&(_, id)| id != empty).collect();
                    intern(&mut interner, (n.member, kids))
                })
                .collect();
        }
        let mut seen = HashSet::new();
        let chosen: Vec<usize> = order
            .iter()
            .copied()
            .filter(|&u| nodes[u].depth <= maxlen - t && ids[u] != empty && seen.insert(ids[u]))
            .collect();
        if chosen.len() > best.0 {
            best = (chosen.len(), t, chosen);
        }
    }
    let mut parent = vec![(0usize, 0i32); nodes.len()];
    for (i, n) in nodes.iter().enumerate() {
        for &(d, c) in &n.children {
            parent[c] = (i, d);
        }
    }
    let prefixes = best
        .2
        .iter()
        .map(|&u| {
            let mut digits = Vec::with_capacity(nodes[u].depth);
            let mut cur = u;
            while cur != 0 {
                digits.push(parent[cur].1);
                cur = parent[cur].0;
            }
            digits.reverse();
            DigitString::new(digits)
        })
        .collect();
    NerodeBound { maxlen, suffix_len, bound: best.0, extension_len: best.1, prefixes }
}

impl fmt::Display for ZeroPrefixWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.holds { "holds" } else { "FAILS" };
        write!(f, "{LABEL}: k={} canonical {} reduced {} {verdict}", self.k, self.canonical, self.reduced)
    }
}

/// `x^{n-1} + p_{n-1} x^{n-2} + ... + p_1`, so that `q ~ x` times it.
fn q_cofactor(pres: &Presentation) -> Polynomial {
    let mut coeffs = pres.params().p().to_vec();
    coeffs.push(1);
    Polynomial::from_coeffs(coeffs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroPrefixWitness {
    pub k: u32,
    /// Canonical string of `q^k`.
    pub canonical: DigitString,
    /// String of the reduced form of `x^k (x^{n-1} + ... + p_1)^k`.
    pub reduced: DigitString,
    pub holds: bool,
}

/// The canonical string of the integer `q^k`, checked to start with at
/// least `k` zeros, together with the reduced form of its zero-prefixed
/// equivalent.
pub fn zero_prefix_witness(pres: &Presentation, k: u32) -> Result<ZeroPrefixWitness> {
    let params = pres.params();
    let qk = BigInt::from(params.q()).pow(k);
    let canonical = pres.encode(&IntVec::new(constant_vec(params.degree(), qk.clone())))?;
    let prefixed = &Polynomial::monomial(1, k as usize) * &q_cofactor(pres).pow(k);
    if !crate::ring::equivalent(&prefixed, &Polynomial::constant(qk), params) {
        return Err(Error::InvalidParams("q is not equivalent to its zero-prefixed form".into()));
    }
    let reduced = DigitString::from_polynomial(&reduce(&prefixed, params)?)
        .ok_or_else(|| Error::InvalidParams("reduced digit overflow".into()))?;
    let holds = canonical.leading_zeros() >= k as usize && reduced.leading_zeros() >= k as usize;
    Ok(ZeroPrefixWitness { k, canonical, reduced, holds })
}

fn constant_vec(n: usize, c: BigInt) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[0] = c;
    v
}

/// Leading zeros of the canonical string of the integer `m`.
pub fn integer_zeros(pres: &Presentation, m: &BigInt) -> Result<usize> {
    let w = pres.encode(&IntVec::new(constant_vec(pres.params().degree(), m.clone())))?;
    Ok(w.leading_zeros())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CascadeStep {
    pub value: BigInt,
    pub zeros: usize,
}

/// Starting from a nonzero integer, divides by `q` while the canonical
/// string starts with a zero, recording the zero counts. The cascade holds
/// when every division is exact and removes exactly one zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cascade {
    pub steps: Vec<CascadeStep>,
    pub holds: bool,
}

pub fn divisibility_cascade(pres: &Presentation, start: &BigInt) -> Result<Cascade> {
    if start.is_zero() {
        return Err(Error::InvalidParams("the cascade starts from a nonzero integer".into()));
    }
    let q = BigInt::from(pres.params().q());
    let mut steps = vec![CascadeStep { value: start.clone(), zeros: integer_zeros(pres, start)? }];
    let mut holds = true;
    while let Some(last) = steps.last().filter(|s| s.zeros > 0).cloned() {
        let (l, r) = last.value.div_rem(&q);
        if !r.is_zero() {
            holds = false;
            break;
        }
        let zeros = integer_zeros(pres, &l)?;
        holds &= zeros + 1 == last.zeros;
        steps.push(CascadeStep { value: l, zeros });
        if !holds {
            break;
        }
    }
    Ok(Cascade { steps, holds })
}

/// `q`-adic valuation of a nonzero integer.
pub fn q_valuation(q: i64, m: &BigInt) -> usize {
    let q = BigInt::from(q);
    let mut m = m.clone();
    let mut v = 0;
    while !m.is_zero() && (&m % &q).is_zero() && !q.is_one() {
        m /= &q;
        v += 1;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ReprParams;

    fn pres13() -> Presentation {
        Presentation::compile(&ReprParams::quadratic(1, 3).unwrap()).unwrap()
    }

    #[test]
    fn sample_labels() {
        let pres = pres13();
        let xi = IntVec::unit(2, 0);
        let s = subgroup_language_sample(&pres, &xi, 3).unwrap();
        let label = |w: &str| s.entries.iter().find(|e| e.0 == w.parse().unwrap()).map(|e| e.1);
        assert_eq!(label("[1]"), Some(true));
        assert_eq!(label("[2]"), Some(true));
        assert_eq!(label("[0,1]"), Some(false));
        let eta = subgroup_language_sample(&pres, &IntVec::unit(2, 1), 3).unwrap();
        let label = |w: &str| eta.entries.iter().find(|e| e.0 == w.parse().unwrap()).map(|e| e.1);
        assert_eq!(label("[0,1]"), Some(true));
        assert_eq!(label("[1]"), Some(false));
        let triv = subgroup_language_sample(&pres, &IntVec::zero(2), 3).unwrap();
        assert_eq!(triv.members().cloned().collect::<Vec<_>>(), vec![DigitString::empty()]);
    }

    #[test]
    fn witnesses() {
        let pres = pres13();
        let w = zero_prefix_witness(&pres, 1).unwrap();
        assert!(w.holds);
        assert_eq!(w.reduced, "[0,1,1]".parse().unwrap());
        let w0 = zero_prefix_witness(&pres, 0).unwrap();
        assert_eq!(w0.canonical, "[1]".parse().unwrap());
        let c = divisibility_cascade(&pres, &BigInt::from(9)).unwrap();
        assert!(c.holds);
        assert_eq!(c.steps.iter().map(|s| s.zeros).collect::<Vec<_>>(), vec![2, 1, 0]);
    }

    #[test]
    fn bound_on_a_finite_language() {
        let s = LabeledSample {
            maxlen: 3,
            entries: vec![("[1,1]".parse().unwrap(), true), ("[2]".parse().unwrap(), true)],
        };
        let b = nerode_lower_bound(&s, 3);
        // ε, [1], and [2] ~ [1,1] (both accept only the empty extension).
        assert_eq!(b.bound, 3);
        assert_eq!(b.extension_len, 1);
        assert_eq!(b.prefixes[2], "[2]".parse().unwrap());
        assert_eq!(b.prefixes[0], DigitString::empty());
    }
}
