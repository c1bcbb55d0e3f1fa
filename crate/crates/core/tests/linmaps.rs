use proptest::prelude::*;
use torus_automata_core::automata::fix_track;
use torus_automata_core::linmaps::*;
use torus_automata_core::matrix::Mat2;
use torus_automata_core::pell::{enumerate_families, ClassifyBounds};
use torus_automata_core::presentation::Presentation;
use torus_automata_core::ring::residue;
use torus_automata_core::semidirect::phi_on_dom;
use torus_automata_core::{DigitString, IntVec, ReprParams};

const BUDGET: usize = 2_000_000;

/// The unique image of `u` under a functional relation over `Dom`.
fn image(rel: &torus_automata_core::automata::Dfa, u: &DigitString, maxlen: usize) -> Option<DigitString> {
    let imgs = fix_track(rel, 0, &u.letters()).unwrap();
    if imgs.count_accepted(maxlen) != 1u32.into() {
        return None;
    }
    let w = imgs.llex_least_member()?;
    Some(DigitString::new(imgs.alphabet().digits_of_word(&w)?))
}

fn check_family_matrix(p: i64, q: i64, m: &Mat2, maxlen: usize) {
    let params = ReprParams::quadratic(p, q).unwrap();
    let pres = Presentation::compile(&params).unwrap();
    let g = poly_of_matrix(m, &params).unwrap().expect("family matrices are multiplications");
    let rel = phi_on_dom(&pres, &g, BUDGET).unwrap();
    for u in pres.dom_members(maxlen) {
        let v = image(&rel, &u, maxlen + 6).unwrap_or_else(|| panic!("({p},{q}) {m}: no unique image of {u}"));
        let expected = apply_matrix(m, &pres.decode(&u).unwrap()).unwrap();
        assert_eq!(pres.decode(&v).unwrap(), expected, "({p},{q}) {m} u={u}");
    }
}

#[test]
fn classified_matrices_are_realized_by_phi_g() {
    let bounds = ClassifyBounds { max_abs_p: 8, max_abs_c: 12 };
    let mut checked = 0;
    for n in [-4, -3, 1, 5] {
        let mut fams = enumerate_families(n, &bounds).unwrap();
        fams.sort_by_key(|f| f.q.abs());
        for fam in fams.iter().filter(|f| f.q.abs() <= 12).take(2) {
            for fm in fam.matrices.iter().take(1) {
                check_family_matrix(fam.p, fam.q, &fm.matrix, 2);
                checked += 1;
            }
        }
    }
    assert!(checked >= 3, "only {checked} matrices checked");
}

#[test]
fn compositional_and_direct_constructions_agree() {
    for (p, q, g) in [(1, 3, vec![1, 1]), (1, 3, vec![-2, 1]), (7, -11, vec![4, 1]), (2, 5, vec![3]), (2, 5, vec![0, 2])] {
        let params = ReprParams::quadratic(p, q).unwrap();
        let pres = Presentation::compile(&params).unwrap();
        let g = PolyMap::new(g);
        let a = build_phi_g_relation(&g, &pres, BUDGET).unwrap();
        let b = build_phi_g_direct(&g, &pres, BUDGET).unwrap();
        assert_eq!(a, b, "({p},{q}) g={g:?}");
    }
    let params = ReprParams::new(vec![1, 1], 5).unwrap();
    let pres = Presentation::compile(&params).unwrap();
    let g = PolyMap::new(vec![1, 0, 1]);
    assert_eq!(build_phi_g_relation(&g, &pres, BUDGET).unwrap(), build_phi_g_direct(&g, &pres, BUDGET).unwrap());
}

#[test]
fn phi_g_relation_matches_ring_multiplication() {
    let params = ReprParams::quadratic(1, 3).unwrap();
    let pres = Presentation::compile(&params).unwrap();
    let g = PolyMap::linear(1, 2);
    let rel = build_phi_g_relation(&g, &pres, BUDGET).unwrap();
    let alpha = *rel.alphabet();
    let strings = torus_automata_core::words::all_strings(2, 3);
    for u in &strings {
        let target = g.apply(&pres.decode(u).unwrap(), &params);
        for v in &strings {
            let accepted = rel.accepts(&alpha.word_of_strings(&[u, v]).unwrap());
            assert_eq!(accepted, pres.decode(v).unwrap() == target, "u={u} v={v}");
        }
    }
}

#[test]
fn shift_relation_multiplies_by_x() {
    let params = ReprParams::quadratic(1, 3).unwrap();
    let pres = Presentation::compile(&params).unwrap();
    let shift = shift_relation(&pres, BUDGET).unwrap();
    assert_eq!(shift, build_phi_g_direct(&PolyMap::linear(1, 0), &pres, BUDGET).unwrap());
}

fn linear_strategy() -> impl Strategy<Value = (i64, i64)> {
    (-30i64..=30, -30i64..=30)
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn matrix_bridge_is_multiplicative(
        pq in prop_oneof![Just((1i64, 3i64)), Just((7, -11)), Just((2, -5)), Just((-3, 7))],
        g1 in linear_strategy(),
        g2 in linear_strategy(),
    ) {
        let params = ReprParams::quadratic(pq.0, pq.1).unwrap();
        let (g1, g2) = (PolyMap::linear(g1.0, g1.1), PolyMap::linear(g2.0, g2.1));
        let prod = residue(&(&g1.to_polynomial() * &g2.to_polynomial()), &params);
        let c = prod.coords();
        let g12 = PolyMap::linear(i64::try_from(&c[1]).unwrap(), i64::try_from(&c[0]).unwrap());
        let lhs = &matrix_of_poly(&g1, &params).unwrap() * &matrix_of_poly(&g2, &params).unwrap();
        prop_assert_eq!(lhs, matrix_of_poly(&g12, &params).unwrap());
    }

    #[test]
    fn matrix_action_is_ring_multiplication(
        pq in prop_oneof![Just((1i64, 3i64)), Just((7, -11)), Just((2, -5))],
        g in linear_strategy(),
        v in (-1000i64..=1000, -1000i64..=1000),
    ) {
        let params = ReprParams::quadratic(pq.0, pq.1).unwrap();
        let g = PolyMap::linear(g.0, g.1);
        let v = IntVec::from_i64s(&[v.0, v.1]);
        let m = matrix_of_poly(&g, &params).unwrap();
        prop_assert_eq!(apply_matrix(&m, &v).unwrap(), g.apply(&v, &params));
        prop_assert_eq!(poly_of_matrix(&m, &params).unwrap(), Some(g));
    }
}
