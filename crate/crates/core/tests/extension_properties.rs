use proptest::prelude::*;

use thetalie_core::arith::intmat::{self, IntMatrix};
use thetalie_core::extension::{
    brute_force_fixing_automorphisms, character_automorphism, transport_automorphism, Cocycle, ExtAutomorphism, ExtElement,
};
use thetalie_core::f2::{BitMatrix, BitVector, F2QuadraticSpace};
use thetalie_core::heisrep::build_heisrep;
use thetalie_core::lattice::{RootDatum, RootType};

fn cocycle_of(t: RootType) -> (RootDatum, Cocycle) {
    let d = RootDatum::of_type(t).unwrap();
    let c = Cocycle::new(&d.mod2_space().space);
    (d, c)
}

#[test]
fn beta_realizes_q_and_the_pairing() {
    for t in [RootType::E6, RootType::E7, RootType::D(4), RootType::A(3)] {
        let (_, c) = cocycle_of(t);
        let space = c.space();
        for v in BitVector::all(c.dim()) {
            assert_eq!(c.beta(v, v), space.q(v));
            for w in BitVector::all(c.dim()) {
                assert_eq!(c.beta(v, w) ^ c.beta(w, v), space.pairing(v, w));
            }
        }
    }
}

#[test]
fn e6_group_law_is_exhaustively_valid() {
    let (_, c) = cocycle_of(RootType::E6);
    assert_eq!(c.order(), 128);
    c.verify_group_law().unwrap();
}

#[test]
fn e7_squares_and_commutators() {
    let (_, c) = cocycle_of(RootType::E7);
    let zero = BitVector::zero(7);
    let all: Vec<ExtElement> = c.elements().collect();
    assert_eq!(all.len(), 256);
    for &x in &all {
        let sign = if c.space().q(x.v) { -1 } else { 1 };
        assert_eq!(c.mul(x, x), ExtElement::new(sign, zero));
        for &y in &all {
            let sign = if c.space().pairing(x.v, y.v) { -1 } else { 1 };
            assert_eq!(c.commutator(x, y), ExtElement::new(sign, zero));
        }
    }
}

#[test]
fn centers_match_the_representation() {
    let (_, e6) = cocycle_of(RootType::E6);
    let center = e6.center();
    assert_eq!(center, vec![e6.identity(), e6.minus_one()]);

    let (_, e7) = cocycle_of(RootType::E7);
    let center = e7.center();
    let radical = e7.space().radical();
    assert_eq!(radical.len(), 1);
    // The radical class has q = 1, so its lifts have order 4 and the center is cyclic of order 4.
    assert!(e7.space().q(radical[0]));
    assert_eq!(center.len(), 4);
    let lift = e7.canonical_lift(radical[0]);
    assert_eq!(e7.mul(lift, lift), e7.minus_one());
    let rep = build_heisrep(&e7).unwrap();
    assert_eq!(rep.radical_phases(), &[1]);
    let mut phases: Vec<u8> = center.iter().map(|&z| rep.rho(z).as_scalar().expect("central elements act by scalars")).collect();
    phases.sort();
    assert_eq!(phases, vec![0, 1, 2, 3]);
    assert_eq!(rep.rho(lift).as_scalar().map(|k| k % 2), Some(1));
}

#[test]
fn genus_one_fixing_automorphisms_are_characters() {
    for qbasis in 0..4 {
        let c = Cocycle::new(&F2QuadraticSpace::hyperbolic(1, qbasis).unwrap());
        let found = brute_force_fixing_automorphisms(&c).unwrap();
        assert_eq!(found.len(), 4);
        for f in BitVector::all(2) {
            let table: Vec<bool> = BitVector::all(2).map(|v| f.dot(v)).collect();
            assert!(found.contains(&table));
            assert!(character_automorphism(f).is_homomorphism(&c));
        }
    }
}

fn mod2(w: &IntMatrix) -> BitMatrix {
    BitMatrix::from_int_rows(w)
}

fn word(d: &RootDatum, letters: &[usize]) -> IntMatrix {
    let s = d.simple_reflections();
    letters.iter().fold(intmat::identity(d.rank()), |acc, &i| intmat::mul(&acc, &s[i % d.rank()]))
}

/// `a` and `b` lie over the same map and differ by a linear sign function.
fn differ_by_character(a: &ExtAutomorphism, b: &ExtAutomorphism, dim: usize) -> bool {
    let diff = |v: BitVector| a.sign_shift(v) ^ b.sign_shift(v);
    a.map == b.map && BitVector::all(dim).all(|v| BitVector::all(dim).all(|w| diff(v + w) == diff(v) ^ diff(w)))
}

#[test]
fn simple_reflection_lifts_square_to_characters() {
    let (d, c) = cocycle_of(RootType::E6);
    for s in d.simple_reflections() {
        let lift = transport_automorphism(&c, &mod2(&s)).unwrap();
        assert!(lift.is_homomorphism(&c));
        let square = lift.compose(&lift);
        assert!(differ_by_character(&square, &ExtAutomorphism::identity(6), 6));
    }
}

#[test]
fn transport_rejects_maps_not_preserving_q() {
    let (_, c) = cocycle_of(RootType::E6);
    let shear = BitMatrix::from_fn(6, 6, |r, col| r == col || (r == 0 && col == 1));
    assert!(transport_automorphism(&c, &shear).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn transport_is_multiplicative_up_to_characters(
        w1 in prop::collection::vec(0usize..6, 0..16),
        w2 in prop::collection::vec(0usize..6, 0..16),
    ) {
        let (d, c) = cocycle_of(RootType::E6);
        let a = word(&d, &w1);
        let b = word(&d, &w2);
        let ta = transport_automorphism(&c, &mod2(&a)).unwrap();
        let tb = transport_automorphism(&c, &mod2(&b)).unwrap();
        let tab = transport_automorphism(&c, &mod2(&intmat::mul(&a, &b))).unwrap();
        prop_assert!(ta.is_homomorphism(&c));
        prop_assert!(tab.is_homomorphism(&c));
        prop_assert!(differ_by_character(&ta.compose(&tb), &tab, 6));
    }

    #[test]
    fn e7_transport_on_random_words(letters in prop::collection::vec(0usize..7, 0..16)) {
        let (d, c) = cocycle_of(RootType::E7);
        let w = word(&d, &letters);
        let t = transport_automorphism(&c, &mod2(&w)).unwrap();
        prop_assert!(t.is_homomorphism(&c));
        // Roots go to roots, and canonical lifts to lifts of the image root up to sign.
        for (k, gamma) in d.roots().iter().enumerate().step_by(9) {
            let image = t.apply(c.canonical_lift(d.root_class(k)));
            prop_assert_eq!(image.v, BitVector::from_ints(&intmat::mul_vec(&w, gamma)));
        }
    }
}
