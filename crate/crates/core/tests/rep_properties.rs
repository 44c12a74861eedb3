use proptest::prelude::*;

use thetalie_core::arith::{q_frac, Gaussian, GaussianMatrix};
use thetalie_core::extension::Cocycle;
use thetalie_core::f2::{BitVector, SymplecticDecomposition};
use thetalie_core::grouplift::{
    anticommutation_model_identity, extension_closure, is_special_orthogonal, pgl2_to_so3, phi_of_root, sl2_to_so3_derivative,
    verify_comm_relation,
};
use thetalie_core::heisrep::{build_heisrep, build_heisrep_with_basis, form_symmetry, verify_rep, FormSymmetry, HeisRep};
use thetalie_core::lattice::{RootDatum, RootType};
use thetalie_core::liealg::{build_lie, build_r, build_theta, fixed_subalgebra};

fn setup(t: RootType) -> (RootDatum, Cocycle, HeisRep) {
    let d = RootDatum::of_type(t).unwrap();
    let c = Cocycle::new(&d.mod2_space().space);
    let rep = build_heisrep(&c).unwrap();
    (d, c, rep)
}

fn root_classes(d: &RootDatum) -> Vec<BitVector> {
    (0..d.roots().len()).map(|i| d.root_class(i)).collect()
}

#[test]
fn characters_vanish_off_the_radical() {
    for t in [RootType::E6, RootType::E7, RootType::D(4), RootType::A(3)] {
        let (_, c, rep) = setup(t);
        let radical = c.space().radical();
        let in_radical = |v: BitVector| {
            let span: Vec<BitVector> = BitVector::all(radical.len())
                .map(|s| s.ones().fold(BitVector::zero(c.dim()), |acc, i| acc + radical[i]))
                .collect();
            span.contains(&v)
        };
        let full = 1i64 << rep.genus();
        for x in c.elements() {
            let (re, im) = rep.trace(x);
            if !in_radical(x.v) {
                assert_eq!((re, im), (0, 0), "{t}");
            } else if x.v.is_zero() {
                assert_eq!((re.abs(), im), (full, 0), "{t}");
            } else {
                assert_eq!(re * re + im * im, full * full, "{t}");
            }
        }
    }
}

#[test]
fn other_symplectic_bases_give_valid_representations() {
    for t in [RootType::E6, RootType::E7] {
        let (d, c, _) = setup(t);
        let classes = root_classes(&d);
        let greedy = c.space().symplectic_basis();
        let mut reversed = greedy.clone();
        reversed.pairs.reverse();
        let swapped = SymplecticDecomposition {
            pairs: greedy.pairs.iter().map(|&(e, f)| (f, e)).collect(),
            radical: greedy.radical.clone(),
        };
        for decomposition in [greedy, reversed, swapped] {
            let rep = build_heisrep_with_basis(&c, decomposition).unwrap();
            let report = verify_rep(&rep, &classes).unwrap();
            assert_eq!(report.pairs_checked, c.order() * c.order());
            assert_eq!(report.commutant_dim, 1);
            assert!(verify_comm_relation(&rep, &d, false).failures.is_empty());
        }
    }
}

#[test]
fn e6_invariant_form_is_symplectic_and_invariant() {
    let (_, c, rep) = setup(RootType::E6);
    let forms = rep.invariant_forms(BitVector::zero(6));
    assert_eq!(forms.len(), 1);
    let b = &forms[0];
    assert_eq!(form_symmetry(b), FormSymmetry::Antisymmetric);
    assert!(b.inverse().is_some());
    for x in c.elements() {
        let m = rep.rho(x).to_gaussian();
        assert_eq!(&m.transpose().mul(b).mul(&m), b);
    }
}

#[test]
fn lifts_generate_a_copy_of_the_extension() {
    for t in [RootType::E6, RootType::E7] {
        let (d, c, rep) = setup(t);
        let closure = extension_closure(&rep);
        assert_eq!(closure.closure_order as u64, c.order());
        assert!(closure.isomorphic);
        let comm = verify_comm_relation(&rep, &d, t == RootType::E6);
        assert!(comm.failures.is_empty());
    }
}

#[test]
fn order_four_lifts_and_doubled_r_agree_on_e6() {
    let (d, c, rep) = setup(RootType::E6);
    let l = build_lie(&d, &c).unwrap();
    let theta = build_theta(&l).unwrap();
    let g = fixed_subalgebra(&l, &theta).unwrap();
    let r = build_r(&l, &g, &rep).unwrap();
    assert_eq!(r.pairs_checked, 36 * 36);
    for k in 0..d.roots().len() {
        let cert = phi_of_root(&l, &g, &r, &rep, k).unwrap();
        assert!(cert.passed(), "root {:?}", cert.root);
    }
    for k in 0..g.dim() {
        let m = r.matrix(k).scale_q(&q_frac(2, 1));
        assert_eq!(m.mul(&m), GaussianMatrix::identity(8).neg());
    }
}

/// Coordinates of a traceless `[[a, b], [c, −a]]` in the basis
/// `diag(1, −1)`, `[[0, −i], [i, 0]]`, `[[0, 1], [1, 0]]`.
fn coords(x: &GaussianMatrix) -> [Gaussian; 3] {
    let (a, b, c) = (x.get(0, 0).clone(), x.get(0, 1).clone(), x.get(1, 0).clone());
    let half = q_frac(1, 2);
    let i = Gaussian::i();
    [a, (&i * &(&b - &c)).scale(&half), (&b + &c).scale(&half)]
}

fn sl2_basis() -> [GaussianMatrix; 3] {
    [
        GaussianMatrix::from_int_pairs(&[&[(1, 0), (0, 0)], &[(0, 0), (-1, 0)]]),
        GaussianMatrix::from_int_pairs(&[&[(0, 0), (0, -1)], &[(0, 1), (0, 0)]]),
        GaussianMatrix::from_int_pairs(&[&[(0, 0), (1, 0)], &[(1, 0), (0, 0)]]),
    ]
}

fn columns_to_matrix(cols: Vec<[Gaussian; 3]>) -> GaussianMatrix {
    GaussianMatrix::from_fn(3, 3, |r, c| cols[c][r].clone())
}

fn adjoint_oracle(m: &GaussianMatrix) -> GaussianMatrix {
    let inv = m.inverse().unwrap();
    columns_to_matrix(sl2_basis().iter().map(|b| coords(&m.mul(b).mul(&inv))).collect())
}

fn derivative_oracle(a: &GaussianMatrix) -> GaussianMatrix {
    columns_to_matrix(sl2_basis().iter().map(|b| coords(&a.commutator(b))).collect())
}

fn gaussian_2x2() -> impl Strategy<Value = GaussianMatrix> {
    prop::array::uniform4((-4i64..=4, -4i64..=4)).prop_map(|[a, b, c, d]| GaussianMatrix::from_int_pairs(&[&[a, b], &[c, d]]))
}

fn traceless_2x2() -> impl Strategy<Value = GaussianMatrix> {
    prop::array::uniform3((-4i64..=4, -4i64..=4))
        .prop_map(|[a, b, c]| GaussianMatrix::from_int_pairs(&[&[a, b], &[c, (-a.0, -a.1)]]))
}

#[test]
fn appendix_fixed_values() {
    let w = GaussianMatrix::from_int_pairs(&[&[(0, 0), (1, 0)], &[(-1, 0), (0, 0)]]);
    assert_eq!(pgl2_to_so3(&w).unwrap(), adjoint_oracle(&w));
    assert!(anticommutation_model_identity());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn pgl2_to_so3_is_a_homomorphism(a in gaussian_2x2(), b in gaussian_2x2()) {
        let zero = Gaussian::from_ints(0, 0);
        prop_assume!(a.det() != zero && b.det() != zero);
        let fa = pgl2_to_so3(&a).unwrap();
        let fb = pgl2_to_so3(&b).unwrap();
        prop_assert_eq!(pgl2_to_so3(&a.mul(&b)).unwrap(), fa.mul(&fb));
        prop_assert_eq!(&fa, &adjoint_oracle(&a));
        prop_assert!(is_special_orthogonal(&fa));
    }

    #[test]
    fn derivative_matches_the_adjoint_action(a in traceless_2x2(), b in traceless_2x2()) {
        let da = sl2_to_so3_derivative(&a).unwrap();
        let db = sl2_to_so3_derivative(&b).unwrap();
        prop_assert_eq!(&da, &derivative_oracle(&a));
        prop_assert_eq!(sl2_to_so3_derivative(&a.commutator(&b)).unwrap(), da.commutator(&db));
    }
}
