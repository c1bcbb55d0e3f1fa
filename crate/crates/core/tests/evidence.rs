use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::OnceLock;

use num_bigint::BigInt;
use proptest::prelude::*;
use torus_automata_core::automata::minimize;
use torus_automata_core::evidence::*;
use torus_automata_core::presentation::Presentation;
use torus_automata_core::{DigitString, IntVec, ReprParams};

fn pres(p: i64, q: i64) -> &'static Presentation {
    static CACHE: OnceLock<std::sync::Mutex<HashMap<(i64, i64), &'static Presentation>>> = OnceLock::new();
    let mut map = CACHE.get_or_init(Default::default).lock().unwrap();
    map.entry((p, q))
        .or_insert_with(|| Box::leak(Box::new(Presentation::compile(&ReprParams::quadratic(p, q).unwrap()).unwrap())))
}

/// Residual-set computation straight from the definition.
fn oracle_bound(sample: &LabeledSample, suffix_len: usize) -> usize {
    let members: HashSet<Vec<i32>> = sample.members().map(|w| w.digits().to_vec()).collect();
    let mut prefixes: BTreeSet<Vec<i32>> = BTreeSet::new();
    for w in &members {
        for k in 0..=w.len() {
            prefixes.insert(w[..k].to_vec());
        }
    }
    let mut best = 0;
    for t in 0..=suffix_len.min(sample.maxlen) {
        let mut residuals: HashSet<BTreeSet<Vec<i32>>> = HashSet::new();
        for u in prefixes.iter().filter(|u| u.len() <= sample.maxlen - t) {
            let res: BTreeSet<Vec<i32>> = members
                .iter()
                .filter(|w| w.len() <= u.len() + t && w.starts_with(u))
                .map(|w| w[u.len()..].to_vec())
                .collect();
            if !res.is_empty() {
                residuals.insert(res);
            }
        }
        best = best.max(residuals.len());
    }
    best
}

fn restrict(sample: &LabeledSample, maxlen: usize) -> LabeledSample {
    LabeledSample {
        maxlen,
        entries: sample.entries.iter().filter(|e| e.0.len() <= maxlen).cloned().collect(),
    }
}

fn dom_sample(pres: &Presentation, maxlen: usize) -> LabeledSample {
    LabeledSample { maxlen, entries: pres.dom_members(maxlen).into_iter().map(|w| (w, true)).collect() }
}

#[test]
fn bound_matches_definition_on_subgroup_samples() {
    let p = pres(1, 3);
    for g in [[1, 0], [0, 1], [2, 0], [1, 1]] {
        let sample = subgroup_language_sample(p, &IntVec::from_i64s(&g), 6).unwrap();
        for s in 0..=6 {
            let b = nerode_lower_bound(&sample, s);
            assert_eq!(b.bound, oracle_bound(&sample, s), "g={g:?} s={s}");
            assert_eq!(b.prefixes.len(), b.bound);
        }
    }
}

#[test]
fn witness_prefixes_are_distinguishable() {
    let p = pres(1, 3);
    let sample = subgroup_language_sample(p, &IntVec::from_i64s(&[1, 0]), 7).unwrap();
    let members: HashSet<DigitString> = sample.members().cloned().collect();
    let b = nerode_lower_bound(&sample, 5);
    let t = b.extension_len;
    let ext = torus_automata_core::words::all_strings(p.params().digit_bound(), t);
    let cat = |u: &DigitString, z: &DigitString| DigitString::new([u.digits(), z.digits()].concat());
    for (i, u) in b.prefixes.iter().enumerate() {
        assert!(u.len() + t <= 7);
        for v in &b.prefixes[..i] {
            assert!(
                ext.iter().any(|z| members.contains(&cat(u, z)) != members.contains(&cat(v, z))),
                "{u} and {v} not separated"
            );
        }
    }
}

#[test]
fn bound_never_exceeds_state_counts_of_regular_languages() {
    for (pp, q, maxlen) in [(1, 3, 8), (2, 5, 5), (7, -11, 3)] {
        let p = pres(pp, q);
        let states = p.dom().num_states();
        for s in [2, 4, 6] {
            let b = nerode_lower_bound(&dom_sample(p, maxlen), s);
            assert!(b.bound <= states, "({pp},{q}) s={s}: {} > {states}", b.bound);
        }
    }
    let p = pres(1, 3);
    for w in ["[1]", "[0,1]", "[2,-1]", "[1,1,1]"] {
        let class = minimize(&p.class_of(&w.parse().unwrap()).unwrap());
        let sample = torus_automata_core::evidence::dfa_sample(&class, 7).unwrap();
        let b = nerode_lower_bound(&sample, 6);
        assert!(b.bound >= 1);
        assert!(b.bound <= class.num_states(), "{w}: {} > {}", b.bound, class.num_states());
    }
}

#[test]
fn dom_bound_reaches_dom_state_count() {
    let p = pres(1, 3);
    let b = nerode_lower_bound(&dom_sample(p, 10), 6);
    assert_eq!(b.bound, p.dom().num_states());
}

#[test]
fn subgroup_bounds_grow() {
    let p = pres(1, 3);
    for g in [[1, 0], [0, 1], [2, 0]] {
        let sample = subgroup_language_sample(p, &IntVec::from_i64s(&g), 10).unwrap();
        let counts: Vec<usize> = (6..=10).map(|m| nerode_lower_bound(&restrict(&sample, m), 6).bound).collect();
        assert!(counts.windows(2).all(|w| w[0] < w[1]), "g={g:?}: {counts:?}");
    }
}

#[test]
fn zero_prefix_witnesses() {
    for (pp, q) in [(1, 3), (7, -11), (2, 5)] {
        let p = pres(pp, q);
        for k in 1..=5 {
            let w = zero_prefix_witness(p, k).unwrap();
            assert!(w.holds, "({pp},{q}) {w}");
            assert!(w.canonical.leading_zeros() >= k as usize);
            assert_eq!(p.decode(&w.canonical).unwrap(), p.decode(&w.reduced).unwrap());
            assert_eq!(p.encode(&p.decode(&w.reduced).unwrap()).unwrap(), w.canonical);
        }
    }
    let w = zero_prefix_witness(pres(1, 3), 1).unwrap();
    assert_eq!(w.reduced, "[0,1,1]".parse().unwrap());
}

#[test]
fn leading_zeros_count_q_adic_valuation() {
    for (pp, q) in [(1, 3), (7, -11)] {
        let p = pres(pp, q);
        for m in (-300i64..=300).filter(|&m| m != 0) {
            let m = BigInt::from(m);
            assert_eq!(integer_zeros(p, &m).unwrap(), q_valuation(q, &m), "({pp},{q}) m={m}");
        }
    }
}

#[test]
fn divisibility_cascade_from_powers_of_q() {
    let p = pres(1, 3);
    let c = divisibility_cascade(p, &BigInt::from(9)).unwrap();
    assert!(c.holds);
    assert_eq!(c.steps[1].value, BigInt::from(3));
    for (pp, q) in [(1, 3), (7, -11)] {
        let p = pres(pp, q);
        for k in 0..=5u32 {
            for r in [1i64, 2, -1, 5] {
                let start = BigInt::from(q).pow(k) * r;
                let c = divisibility_cascade(p, &start).unwrap();
                assert!(c.holds, "({pp},{q}) start={start}");
                assert_eq!(c.steps[0].zeros, k as usize);
                assert_eq!(c.steps.len(), k as usize + 1);
            }
        }
    }
}

#[test]
fn sample_is_labeled_by_decoding() {
    let p = pres(1, 3);
    let g = IntVec::from_i64s(&[0, 1]);
    let sample = subgroup_language_sample(p, &g, 5).unwrap();
    assert_eq!(sample.entries.len(), p.dom_members(5).len());
    for (w, member) in &sample.entries {
        let v = p.decode(w).unwrap();
        let expected = v.coords()[0] == BigInt::from(0);
        assert_eq!(*member, expected, "{w}");
    }
}

fn small_sample() -> impl Strategy<Value = LabeledSample> {
    proptest::collection::btree_set(proptest::collection::vec(-1i32..=1, 0..=6), 0..40).prop_map(|set| {
        LabeledSample { maxlen: 6, entries: set.into_iter().map(|d| (DigitString::new(d), true)).collect() }
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn bound_agrees_with_definition(sample in small_sample(), s in 0usize..=6) {
        prop_assert_eq!(nerode_lower_bound(&sample, s).bound, oracle_bound(&sample, s));
    }

    #[test]
    fn bound_is_monotone(sample in small_sample(), m in 0usize..6, s in 0usize..6) {
        let b = |m: usize, s: usize| nerode_lower_bound(&restrict(&sample, m), s).bound;
        prop_assert!(b(m, s) <= b(m + 1, s));
        prop_assert!(b(m, s) <= b(m, s + 1));
    }
}
