use std::collections::HashMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use torus_automata_core::automata::fix_track;
use torus_automata_core::carry::{declared_bounds, LinearChecker, Transducer};
use torus_automata_core::presentation::*;
use torus_automata_core::words::all_strings;
use torus_automata_core::{DigitString, IntVec, ReprParams};

/// Remainder of the digit polynomial modulo the monic `t`, in `i64`.
fn remainder(w: &DigitString, params: &ReprParams) -> Vec<i64> {
    let n = params.degree();
    let mut t = vec![-params.q()];
    t.extend_from_slice(params.p());
    t.push(1);
    let mut r: Vec<i64> = w.digits().iter().map(|&d| d as i64).collect();
    for top in (n..r.len()).rev() {
        let k = r[top];
        for (i, &c) in t.iter().enumerate() {
            r[top - n + i] -= k * c;
        }
    }
    r.resize(n, 0);
    r
}

#[test]
fn equivalence_automaton_matches_division_for_7_minus_11() {
    let params = ReprParams::quadratic(7, -11).unwrap();
    let pres = Presentation::compile(&params).unwrap();
    let alpha = *pres.equiv().alphabet();
    let strings = all_strings(params.digit_bound(), 3);
    let rems: Vec<Vec<i64>> = strings.iter().map(|w| remainder(w, &params)).collect();
    let mut mismatches = 0usize;
    let mut positives = 0usize;
    for (u, ru) in strings.iter().zip(&rems) {
        for (v, rv) in strings.iter().zip(&rems) {
            let word = alpha.word_of_strings(&[u, v]).unwrap();
            let expected = ru == rv;
            positives += expected as usize;
            mismatches += (pres.equiv().accepts(&word) != expected) as usize;
        }
    }
    assert_eq!(mismatches, 0);
    assert!(positives > strings.len());
}

#[test]
fn dom_picks_llex_least_member_of_each_class() {
    for (p, q, maxlen) in [(2, 5, 4), (2, -5, 4), (1, 3, 5)] {
        let params = ReprParams::quadratic(p, q).unwrap();
        let pres = Presentation::compile(&params).unwrap();
        let mut least: HashMap<Vec<i64>, DigitString> = HashMap::new();
        for w in all_strings(params.digit_bound(), maxlen) {
            least.entry(remainder(&w, &params)).or_insert(w);
        }
        let members: Vec<DigitString> = pres.dom_members(maxlen);
        let mut seen = HashMap::new();
        for m in &members {
            assert!(seen.insert(remainder(m, &params), m.clone()).is_none(), "({p},{q}) two members for {m}");
        }
        for (class, w) in &least {
            assert_eq!(seen.get(class), Some(w), "({p},{q}) class {class:?}");
            assert!(pres.is_canonical(w));
        }
        assert_eq!(seen.len(), least.len());
    }
}

#[test]
fn cubic_presentation_round_trips() {
    let params = ReprParams::new(vec![1, 1], 5).unwrap();
    let pres = Presentation::compile(&params).unwrap();
    for a in -4..=4i64 {
        for b in -4..=4i64 {
            for c in -4..=4i64 {
                let v = IntVec::from_i64s(&[a, b, c]);
                let w = pres.encode(&v).unwrap();
                assert!(pres.is_canonical(&w));
                assert_eq!(pres.decode(&w).unwrap(), v);
            }
        }
    }
}

#[test]
fn addition_is_total_and_functional_on_dom() {
    let params = ReprParams::quadratic(1, 3).unwrap();
    let pres = Presentation::compile(&params).unwrap();
    let add = build_add_on_dom(&pres, 1_000_000).unwrap();
    let members = pres.dom_members(3);
    for x in &members {
        let fx = fix_track(&add, 0, &x.letters()).unwrap();
        for y in &members {
            let z = fix_track(&fx, 0, &y.letters()).unwrap();
            assert_eq!(z.count_accepted(7), 1u32.into(), "{x} + {y}");
            let word = z.llex_least_member().unwrap();
            let z = DigitString::new(z.alphabet().digits_of_word(&word).unwrap());
            let sum = &pres.decode(x).unwrap() + &pres.decode(y).unwrap();
            assert_eq!(pres.decode(&z).unwrap(), sum);
            assert!(pres.is_canonical(&z));
        }
    }
}

#[test]
fn add_strings_agrees_with_addition_relation() {
    let params = ReprParams::quadratic(2, -5).unwrap();
    let rel = build_add_relation(&params, 1_000_000).unwrap();
    let alpha = *rel.alphabet();
    let strings = all_strings(params.digit_bound(), 2);
    for u in &strings {
        for v in &strings {
            let z = add_strings(&params, u, v).unwrap();
            assert!(rel.accepts(&alpha.word_of_strings(&[u, v, &z]).unwrap()), "{u} + {v} = {z}");
            assert_eq!(remainder(&z, &params), {
                let (a, b) = (remainder(u, &params), remainder(v, &params));
                a.iter().zip(&b).map(|(x, y)| x + y).collect::<Vec<_>>()
            });
        }
    }
}

#[test]
fn random_carry_steps_stay_bounded() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for params in [
        ReprParams::quadratic(1, 3).unwrap(),
        ReprParams::quadratic(7, -11).unwrap(),
        ReprParams::new(vec![1, 1], 5).unwrap(),
    ] {
        let checker = LinearChecker::equivalence(&params).unwrap();
        let declared = declared_bounds(&params);
        let adder = Transducer::addition(&params).unwrap();
        let b = params.digit_bound() as i64;
        let n = params.degree();
        for _ in 0..2_000 {
            let mut r = vec![0i64; n];
            let mut s = vec![0i64; n];
            for _ in 0..20 {
                let d = [rng.gen_range(-b..=b), rng.gen_range(-b..=b)];
                match checker.step(&r, &d) {
                    Some(next) => {
                        assert!(next.iter().zip(&declared).all(|(x, m)| x.abs() <= *m), "{next:?}");
                        r = next;
                    }
                    None => r = vec![0; n],
                }
                let (digit, next) = adder.step(&s, &d);
                assert!(digit.abs() <= b);
                assert!(adder.in_bounds(&next), "{next:?}");
                s = next;
            }
        }
    }
}

#[test]
fn encode_of_unit_vectors() {
    let params = ReprParams::quadratic(1, 3).unwrap();
    let pres = Presentation::compile(&params).unwrap();
    assert_eq!(pres.encode(&IntVec::from_i64s(&[4, 0])).unwrap(), "[-2,2,2]".parse().unwrap());
    assert_eq!(pres.encode(&IntVec::zero(2)).unwrap(), DigitString::empty());
    assert_eq!(pres.encode(&pres.unit(1)).unwrap(), "[0,1]".parse().unwrap());
    let big = IntVec::new(vec![BigInt::from(10).pow(12), BigInt::from(-7)]);
    assert_eq!(pres.decode(&pres.encode(&big).unwrap()).unwrap(), big);
}
