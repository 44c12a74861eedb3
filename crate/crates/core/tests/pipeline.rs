use thetalie_core::extension::Cocycle;
use thetalie_core::f2::BitVector;
use thetalie_core::heisrep::{build_heisrep, verify_rep};
use thetalie_core::lattice::{RootDatum, RootType};
use thetalie_core::liealg::{build_lie, build_r, build_theta, fixed_subalgebra, identify_fixed, FixedKind};

fn run(t: RootType, fixed_dim: usize, kind: FixedKind) {
    let datum = RootDatum::of_type(t).unwrap();
    let cocycle = Cocycle::new(&datum.mod2_space().space);
    let l = build_lie(&datum, &cocycle).unwrap();
    let jacobi = l.verify_jacobi();
    assert!(jacobi.passed(), "{:?}", jacobi.first_failure);
    let theta = build_theta(&l).unwrap();
    assert_eq!(theta.trace(), -(datum.rank() as i64));
    let g = fixed_subalgebra(&l, &theta).unwrap();
    assert_eq!(g.dim(), fixed_dim);
    assert_ne!(g.killing_form().1, thetalie_core::arith::q_int(0));
    assert!(l.killing_form().nondegenerate());
    let rep = build_heisrep(&cocycle).unwrap();
    let classes: Vec<BitVector> = (0..datum.roots().len()).map(|i| datum.root_class(i)).collect();
    let report = verify_rep(&rep, &classes).unwrap();
    assert_eq!(report.pairs_checked, cocycle.order() * cocycle.order());
    let r = build_r(&l, &g, &rep).unwrap();
    assert_eq!(identify_fixed(&g, &r).unwrap().kind, kind);
}

#[test]
fn e6_end_to_end() {
    run(RootType::E6, 36, FixedKind::Symplectic);
}

#[test]
fn e7_end_to_end() {
    run(RootType::E7, 63, FixedKind::Special);
}
