//! The Lie algebra `L = Λ∨ ⊕ ⨁_γ ℤ·X_γ` attached to a simply laced root
//! lattice and the extension `Ṽ`, its involution `θ`, the fixed algebra
//! `g`, and the representation `R` of `g` on `W`.
//!
//! Basis order: the fundamental coweights `h₁, …, h_r` (dual to the simple
//! roots), then `X_γ` for the roots in canonical order. Every `X_γ` is
//! attached to the canonical lift `c(γ) = (+1, γ mod 2)`; the cocycle only
//! contributes signs.

mod rmap;
mod table;
mod theta;

pub use rmap::{build_r, identify_fixed, FixedIdentification, FixedKind, RMap};
pub use table::{normalize, rational_det, BracketTable, CheckReport, Sparse};
pub use theta::{build_theta, character_adjoint_check, fixed_subalgebra, CharacterReport, FixedSubalgebra, Involution};

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::intmat::{self, IntMatrix};
use crate::arith::{q_int, Q};
use crate::error::{Error, Result};
use crate::extension::Cocycle;
use crate::f2::BitVector;
use crate::lattice::RootDatum;

/// What a basis vector of `L` stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisLabel {
    Coweight(usize),
    Root(usize),
}

/// The integral Lie algebra with its structure constants.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    datum: RootDatum,
    cocycle: Cocycle,
    table: BracketTable,
}

/// `[X_γ, X_δ]` for roots `γ, δ` following the construction rules.
fn root_bracket(datum: &RootDatum, cocycle: &Cocycle, a: usize, b: usize) -> Sparse {
    let r = datum.rank();
    let roots = datum.roots();
    let (g, d) = (&roots[a], &roots[b]);
    let sum: Vec<i64> = g.iter().zip(d).map(|(x, y)| x + y).collect();
    let (gb, db) = (BitVector::from_ints(g), BitVector::from_ints(d));
    if let Some(k) = datum.index_of(&sum) {
        let sign = if cocycle.beta(gb, db) { -1 } else { 1 };
        return vec![(r + k, sign)];
    }
    if sum.iter().all(|&x| x == 0) {
        // c(γ)c(−γ) = (ε, 0); the bracket is ε times the coroot of γ,
        // which has coordinates (Cγ)ᵢ in the coweight basis.
        let eps = if cocycle.mul(cocycle.canonical_lift(gb), cocycle.canonical_lift(db)).negative { -1 } else { 1 };
        let coroot = intmat::mul_vec(datum.cartan(), g);
        return coroot.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, eps * c)).collect();
    }
    Vec::new()
}

/// Assembles `L` from a root datum and the extension of its `Λ/2Λ`.
pub fn build_lie(datum: &RootDatum, cocycle: &Cocycle) -> Result<LieAlgebra> {
    let r = datum.rank();
    if cocycle.dim() != r {
        return Err(Error::DimensionMismatch { expected: r, found: cocycle.dim() });
    }
    if *cocycle.space() != datum.mod2_space().space {
        return Err(Error::TypeMismatch {
            expected: "extension of the lattice's mod-2 space",
            found: String::from("other extension"),
        });
    }
    let roots = datum.roots();
    let dim = r + roots.len();
    let table = BracketTable::from_fn(dim, |i, j| match (i < r, j < r) {
        (true, true) => Vec::new(),
        (true, false) => {
            let c = roots[j - r][i];
            if c == 0 {
                Vec::new()
            } else {
                vec![(j, c)]
            }
        }
        (false, true) => {
            let c = roots[i - r][j];
            if c == 0 {
                Vec::new()
            } else {
                vec![(i, -c)]
            }
        }
        (false, false) => root_bracket(datum, cocycle, i - r, j - r),
    });
    Ok(LieAlgebra { datum: datum.clone(), cocycle: cocycle.clone(), table })
}

/// Killing form with the certificates derived from it.
#[derive(Clone, Debug)]
pub struct KillingReport {
    pub gram: IntMatrix,
    pub determinant: Q,
    /// Whether `K(hᵢ, X_γ) = 0` for all `i, γ`.
    pub grading_ok: bool,
    /// `c` with `K(hᵢ, hⱼ) = c·(C⁻¹)ᵢⱼ` on the coweights, if such `c` exists.
    pub cartan_constant: Option<Q>,
}

impl KillingReport {
    pub fn nondegenerate(&self) -> bool {
        self.determinant != q_int(0)
    }
}

/// Outcome of the checks on the root-space decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub weights_match_roots: bool,
    pub ad_nilpotent: bool,
    pub max_abs_constant: i64,
}

impl LieAlgebra {
    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.cocycle
    }

    pub fn table(&self) -> &BracketTable {
        &self.table
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn label(&self, i: usize) -> BasisLabel {
        if i < self.rank() {
            BasisLabel::Coweight(i)
        } else {
            BasisLabel::Root(i - self.rank())
        }
    }

    /// `h3` for a coweight, `X[1,0,1,…]` for a root vector.
    pub fn label_string(&self, i: usize) -> String {
        match self.label(i) {
            BasisLabel::Coweight(k) => format!("h{}", k + 1),
            BasisLabel::Root(k) => {
                let coords: Vec<String> = self.datum.roots()[k].iter().map(|c| format!("{c}")).collect();
                format!("X[{}]", coords.join(","))
            }
        }
    }

    /// Basis index of `X_γ`.
    pub fn root_vector(&self, gamma: &[i64]) -> Option<usize> {
        self.datum.index_of(gamma).map(|k| self.rank() + k)
    }

    pub fn bracket(&self, x: &[(usize, i64)], y: &[(usize, i64)]) -> Sparse {
        self.table.bracket(x, y)
    }

    pub fn verify_jacobi(&self) -> CheckReport {
        self.table.verify_jacobi()
    }

    pub fn killing_form(&self) -> KillingReport {
        let gram = self.table.killing_form();
        let determinant = rational_det(&gram);
        let r = self.rank();
        let grading_ok = (0..r).all(|i| (r..self.dim()).all(|j| gram[i][j] == 0 && gram[j][i] == 0));
        let inv = cartan_inverse(self.datum.cartan());
        let cartan_constant = if inv[0][0] == q_int(0) {
            None
        } else {
            let c = q_int(gram[0][0]) / &inv[0][0];
            let proportional = (0..r).all(|i| (0..r).all(|j| q_int(gram[i][j]) == &c * &inv[i][j]));
            proportional.then_some(c)
        };
        KillingReport { gram, determinant, grading_ok, cartan_constant }
    }

    /// Checks that the Cartan weights of the `X` basis vectors are exactly
    /// the roots, that `(ad X_γ)⁴ = 0`, and reports the largest structure
    /// constant.
    pub fn decomposition_report(&self) -> DecompositionReport {
        let r = self.rank();
        let mut weights_match_roots = true;
        for k in r..self.dim() {
            let mut weight = vec![0i64; r];
            for (i, w) in weight.iter_mut().enumerate() {
                let b = self.table.basis_bracket(i, k);
                match b.as_slice() {
                    [] => {}
                    [(j, c)] if *j == k => *w = *c,
                    _ => weights_match_roots = false,
                }
            }
            weights_match_roots &= self.datum.is_root(&weight) && self.datum.index_of(&weight) == Some(k - r);
        }
        for i in 0..r {
            for j in 0..r {
                weights_match_roots &= self.table.basis_bracket(i, j).is_empty();
            }
        }
        let ad_nilpotent = (r..self.dim()).all(|x| {
            (0..self.dim()).all(|b| {
                let mut v: Sparse = vec![(b, 1)];
                for _ in 0..4 {
                    v = self.table.bracket(&[(x, 1)], &v);
                }
                v.is_empty()
            })
        });
        DecompositionReport { weights_match_roots, ad_nilpotent, max_abs_constant: self.table.max_abs_constant() }
    }
}

fn cartan_inverse(c: &IntMatrix) -> Vec<Vec<Q>> {
    let n = c.len();
    let mut a: Vec<Vec<Q>> = c.iter().map(|r| r.iter().map(|&x| q_int(x)).collect()).collect();
    let mut inv: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| q_int(i64::from(i == j))).collect()).collect();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| a[r][col] != q_int(0)) else { return vec![vec![q_int(0); n]; n] };
        a.swap(col, p);
        inv.swap(col, p);
        let pv = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &pv;
            inv[col][j] = &inv[col][j] / &pv;
        }
        for r in 0..n {
            if r != col && a[r][col] != q_int(0) {
                let f = a[r][col].clone();
                for j in 0..n {
                    let (x, y) = (&f * &a[col][j], &f * &inv[col][j]);
                    a[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::RootType;

    fn lie(t: RootType) -> LieAlgebra {
        let d = RootDatum::of_type(t).unwrap();
        let c = Cocycle::new(&d.mod2_space().space);
        build_lie(&d, &c).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(lie(RootType::A(2)).dim(), 8);
        assert_eq!(lie(RootType::D(4)).dim(), 28);
        assert_eq!(lie(RootType::E6).dim(), 78);
    }

    #[test]
    fn small_types_satisfy_jacobi() {
        for t in [RootType::A(1), RootType::A(2), RootType::A(3), RootType::D(4)] {
            let l = lie(t);
            assert!(l.table().check_antisymmetry().passed());
            let j = l.verify_jacobi();
            assert!(j.passed(), "{t}: {:?}", j.first_failure);
            assert_eq!(j.checked, (l.dim() as u64).pow(3));
        }
    }

    #[test]
    fn opposite_root_bracket_is_minus_coroot() {
        let l = lie(RootType::A(2));
        let x = l.root_vector(&[1, 1]).unwrap();
        let y = l.root_vector(&[-1, -1]).unwrap();
        // Coroot of α₁ + α₂ in the coweight basis is (1, 1).
        assert_eq!(l.table().basis_bracket(x, y), &vec![(0, -1), (1, -1)]);
    }

    #[test]
    fn killing_form_of_a2() {
        let k = lie(RootType::A(2)).killing_form();
        assert!(k.nondegenerate());
        assert!(k.grading_ok);
        // 2h∨ = 6 for A₂.
        assert_eq!(k.cartan_constant, Some(q_int(6)));
    }

    #[test]
    fn rejects_foreign_extension() {
        let d = RootDatum::of_type(RootType::A(2)).unwrap();
        let other = RootDatum::of_type(RootType::A(3)).unwrap();
        let c = Cocycle::new(&other.mod2_space().space);
        assert!(build_lie(&d, &c).is_err());
    }
}
