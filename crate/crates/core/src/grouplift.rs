//! Matrix-level checks of the group lift: the explicit `PGL₂ → SO₃`
//! isomorphism and its derivative, the order-4 lifts `ρ(c(γ))`, their
//! commutation relations, and the closure of the lifts inside `GL(W)`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::arith::{q_frac, Field, Gaussian, GaussianMatrix};
use crate::error::{Error, Result};
use crate::f2::BitVector;
use crate::heisrep::{HeisRep, Monomial};
use crate::lattice::RootDatum;
use crate::liealg::{FixedSubalgebra, LieAlgebra, RMap};

fn entries_2x2(m: &GaussianMatrix) -> Result<[Gaussian; 4]> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: m.rows().max(m.cols()) });
    }
    Ok([m.get(0, 0).clone(), m.get(0, 1).clone(), m.get(1, 0).clone(), m.get(1, 1).clone()])
}

fn build_3x3(rows: [[Gaussian; 3]; 3]) -> GaussianMatrix {
    GaussianMatrix::from_fn(3, 3, |r, c| rows[r][c].clone())
}

/// The adjoint action of `[[a, b], [c, d]]` on `sl₂`, written in the
/// orthonormal basis `diag(1, −1)/√2`, `[[0, 1], [−1, 0]]/(i√2)`,
/// `[[0, 1], [1, 0]]/√2`.
pub fn pgl2_to_so3(m: &GaussianMatrix) -> Result<GaussianMatrix> {
    let [a, b, c, d] = entries_2x2(m)?;
    let det = &(&a * &d) - &(&b * &c);
    if Field::is_zero(&det) {
        return Err(Error::SingularMatrix);
    }
    let i = Gaussian::i();
    let half = q_frac(1, 2);
    let sq = |x: &Gaussian| x * x;
    let (a2, b2, c2, d2) = (sq(&a), sq(&b), sq(&c), sq(&d));
    let ad = &a * &d;
    let bc = &b * &c;
    let ac = &a * &c;
    let bd = &b * &d;
    let ab = &a * &b;
    let cd = &c * &d;
    let rows = [
        [&ad + &bc, &i * &(&ac + &bd), &bd - &ac],
        [-&(&i * &(&ab + &cd)), (&(&(&a2 + &b2) + &c2) + &d2).scale(&half), &i * &(&(&(&a2 - &b2) + &c2) - &d2).scale(&half)],
        [-&(&ab - &cd), &i * &(&(&(&c2 + &d2) - &a2) - &b2).scale(&half), (&(&(&a2 - &b2) - &c2) + &d2).scale(&half)],
    ];
    Ok(build_3x3(rows).scale(&det.inv()))
}

/// The derivative `sl₂ → so₃` of [`pgl2_to_so3`].
pub fn sl2_to_so3_derivative(m: &GaussianMatrix) -> Result<GaussianMatrix> {
    let [a, b, c, d] = entries_2x2(m)?;
    if !Field::is_zero(&(&a + &d)) {
        return Err(Error::NonzeroTrace);
    }
    let i = Gaussian::i();
    let zero = <Gaussian as Field>::zero();
    let two_ia = &Gaussian::from_ints(0, 2) * &a;
    let ibc = &i * &(&b + &c);
    let rows = [[zero.clone(), ibc.clone(), &b - &c], [-&ibc, zero.clone(), two_ia.clone()], [&c - &b, -&two_ia, zero]];
    Ok(build_3x3(rows))
}

/// Whether `MᵀM = 1` and `det M = 1`.
pub fn is_special_orthogonal(m: &GaussianMatrix) -> bool {
    m.transpose().mul(m).is_identity() && m.det() == <Gaussian as Field>::one()
}

/// The lift of the squaring map through the first `SO₂ → PGL₂`:
/// `(a, b) ↦ [[a, b/i], [b/i, a]]`.
pub fn so2_lift_first(a: &Gaussian, b: &Gaussian) -> GaussianMatrix {
    let b_over_i = b * &Gaussian::i().inv();
    GaussianMatrix::from_fn(2, 2, |r, c| if r == c { a.clone() } else { b_over_i.clone() })
}

/// The lift through the second embedding: `(a, b) ↦ diag(a − ib, (a − ib)⁻¹)`.
pub fn so2_lift_second(a: &Gaussian, b: &Gaussian) -> GaussianMatrix {
    let z = a - &(&Gaussian::i() * b);
    let zi = z.inv();
    GaussianMatrix::from_fn(2, 2, |r, c| match (r, c) {
        (0, 0) => z.clone(),
        (1, 1) => zi.clone(),
        _ => <Gaussian as Field>::zero(),
    })
}

/// The two lifts of the rotation by a quarter turn anticommute:
/// `[[0, −i], [−i, 0]]·diag(−i, i) = −diag(−i, i)·[[0, −i], [−i, 0]]`.
pub fn anticommutation_model_identity() -> bool {
    let (zero, one) = (Gaussian::from_ints(0, 0), Gaussian::from_ints(1, 0));
    let p = so2_lift_first(&zero, &one);
    let q = so2_lift_second(&zero, &one);
    let expected_p = GaussianMatrix::from_int_pairs(&[&[(0, 0), (0, -1)], &[(0, -1), (0, 0)]]);
    let expected_q = GaussianMatrix::from_int_pairs(&[&[(0, -1), (0, 0)], &[(0, 0), (0, 1)]]);
    p == expected_p && q == expected_q && p.mul(&q) == q.mul(&p).neg()
}

/// `ρ(c(γ))` with its order-4 and intertwining certificates.
#[derive(Clone, Debug)]
pub struct PhiCertificate {
    pub root: Vec<i64>,
    pub matrix: Monomial,
    pub squares_to_minus_id: bool,
    /// `2R(Z_γ) = ρ(c(γ))`, compared as exact matrices.
    pub matches_doubled_r: bool,
}

impl PhiCertificate {
    pub fn passed(&self) -> bool {
        self.squares_to_minus_id && self.matches_doubled_r
    }
}

/// Certificate for one root (by index in the datum's root list).
pub fn phi_of_root(l: &LieAlgebra, g: &FixedSubalgebra, r: &RMap, rep: &HeisRep, root: usize) -> Result<PhiCertificate> {
    let datum = l.datum();
    let gamma = datum.roots().get(root).ok_or(Error::OutOfRange { what: "root index", value: root as i64 })?;
    let positive: Vec<i64> = if RootDatum::height(gamma) > 0 { gamma.clone() } else { gamma.iter().map(|x| -x).collect() };
    let pos_index = datum.index_of(&positive).ok_or(Error::NotRootLattice("root without negative"))?;
    let z = g
        .positive_roots()
        .iter()
        .position(|&k| k == pos_index)
        .ok_or(Error::VerificationFailed(format!("no Z for root {root}")))?;
    let matrix = rep.rho(rep.cocycle().canonical_lift(BitVector::from_ints(gamma)));
    let minus_id = Monomial::scalar(rep.dim(), 2);
    let squares_to_minus_id = matrix.mul(&matrix) == minus_id;
    let doubled = r.matrix(z).scale_q(&q_frac(2, 1));
    let matches_doubled_r = doubled == matrix.to_gaussian();
    Ok(PhiCertificate { root: gamma.clone(), matrix, squares_to_minus_id, matches_doubled_r })
}

/// Outcome of [`verify_comm_relation`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommReport {
    pub pairs_checked: u64,
    pub failures: Vec<(usize, usize)>,
}

/// Checks `ρ(c(γ))ρ(c(δ)) = (−1)^{⟨γ,δ⟩} ρ(c(δ))ρ(c(γ))` on all pairs of
/// simple roots, or of all roots when `all_roots` is set. Pairs are given
/// by root index.
pub fn verify_comm_relation(rep: &HeisRep, datum: &RootDatum, all_roots: bool) -> CommReport {
    let indices: Vec<usize> = if all_roots { (0..datum.roots().len()).collect() } else { datum.simple_indices().to_vec() };
    let lift = |k: usize| rep.rho(rep.cocycle().canonical_lift(BitVector::from_ints(&datum.roots()[k])));
    let mats: Vec<Monomial> = indices.iter().map(|&k| lift(k)).collect();
    let mut report = CommReport::default();
    for (a, &ga) in indices.iter().enumerate() {
        for (b, &gb) in indices.iter().enumerate() {
            let pairing = datum.inner(&datum.roots()[ga], &datum.roots()[gb]);
            let lhs = mats[a].mul(&mats[b]);
            let rhs = mats[b].mul(&mats[a]);
            let rhs = if pairing.rem_euclid(2) == 1 { rhs.neg() } else { rhs };
            report.pairs_checked += 1;
            if lhs != rhs {
                report.failures.push((ga, gb));
            }
        }
    }
    report
}

/// Closure of `{ρ(c(αᵢ))} ∪ {−id}` inside `GL(W)`, compared with the image
/// of `Ṽ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    pub closure_order: usize,
    pub extension_order: u64,
    /// `ρ` is injective and its image is exactly the closure.
    pub isomorphic: bool,
}

pub fn extension_closure(rep: &HeisRep) -> ClosureReport {
    let d = rep.dim();
    let mut gens: Vec<Monomial> = rep.generators().to_vec();
    gens.push(Monomial::scalar(d, 2));
    let mut seen: BTreeSet<Vec<(usize, usize, i64, i64)>> = BTreeSet::new();
    let mut frontier = alloc::vec![Monomial::identity(d)];
    seen.insert(Monomial::identity(d).sparse_entries());
    while let Some(m) = frontier.pop() {
        for g in &gens {
            let p = m.mul(g);
            if seen.insert(p.sparse_entries()) {
                frontier.push(p);
            }
        }
    }
    let image: BTreeSet<_> = rep.cocycle().elements().map(|x| rep.rho(x).sparse_entries()).collect();
    let extension_order = rep.cocycle().order();
    ClosureReport {
        closure_order: seen.len(),
        extension_order,
        isomorphic: image.len() as u64 == extension_order && image == seen,
    }
}
