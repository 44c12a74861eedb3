//! `R(Z_γ) = ρ(c(γ))/2` and the identification of `g` through `R`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::table::Sparse;
use super::theta::FixedSubalgebra;
use super::LieAlgebra;
use crate::arith::{q_frac, Field, Gaussian, GaussianMatrix, RowReducer};
use crate::error::{Error, Result};
use crate::f2::BitVector;
use crate::heisrep::{form_symmetry, FormSymmetry, HeisRep, Monomial};

/// `R` on the basis `Z_γ` of `g`, stored through `2R(Z_γ) = ρ(c(γ))`.
#[derive(Clone, Debug)]
pub struct RMap {
    doubled: Vec<Monomial>,
    pub pairs_checked: u64,
}

type GaussInt = (i64, i64);

fn dense(m: &Monomial) -> Vec<GaussInt> {
    let d = m.dim();
    let mut out = vec![(0, 0); d * d];
    for j in 0..d {
        let (r, ph) = m.column(j);
        out[r * d + j] = [(1, 0), (0, 1), (-1, 0), (0, -1)][ph as usize];
    }
    out
}

fn dense_combination(terms: &Sparse, mats: &[Vec<GaussInt>], len: usize) -> Vec<GaussInt> {
    let mut out = vec![(0, 0); len];
    for &(k, c) in terms {
        for (o, &(re, im)) in out.iter_mut().zip(&mats[k]) {
            o.0 += c * re;
            o.1 += c * im;
        }
    }
    out
}

impl RMap {
    pub fn dim_g(&self) -> usize {
        self.doubled.len()
    }

    pub fn dim_w(&self) -> usize {
        self.doubled.first().map_or(0, Monomial::dim)
    }

    /// `2R(Z_k) = ρ(c(γ_k))`.
    pub fn doubled(&self, k: usize) -> &Monomial {
        &self.doubled[k]
    }

    /// `R(Z_k)` as an exact matrix.
    pub fn matrix(&self, k: usize) -> GaussianMatrix {
        self.doubled[k].to_gaussian().scale_q(&q_frac(1, 2))
    }
}

/// Builds `R` and checks `R([a, b]) = [R(a), R(b)]` on all basis pairs,
/// in the form `2·Σ c_k·2R(Z_k) = 2R(Z_a)·2R(Z_b) − 2R(Z_b)·2R(Z_a)` over
/// the Gaussian integers.
pub fn build_r(l: &LieAlgebra, g: &FixedSubalgebra, rep: &HeisRep) -> Result<RMap> {
    if rep.cocycle() != l.cocycle() {
        return Err(Error::TypeMismatch {
            expected: "representation of the algebra's extension",
            found: format!("dimension {}", rep.cocycle().dim()),
        });
    }
    let roots = l.datum().roots();
    let doubled: Vec<Monomial> =
        g.positive_roots().iter().map(|&k| rep.rho(rep.cocycle().canonical_lift(BitVector::from_ints(&roots[k])))).collect();
    let d = rep.dim();
    let mats: Vec<Vec<GaussInt>> = doubled.iter().map(dense).collect();
    let n = g.dim();
    let mut pairs_checked = 0;
    for a in 0..n {
        for b in 0..n {
            let ab = doubled[a].mul(&doubled[b]);
            let ba = doubled[b].mul(&doubled[a]);
            let comm: Vec<GaussInt> = dense(&ab).iter().zip(dense(&ba)).map(|(x, y)| (x.0 - y.0, x.1 - y.1)).collect();
            let lhs: Vec<GaussInt> =
                dense_combination(g.table().basis_bracket(a, b), &mats, d * d).iter().map(|&(re, im)| (2 * re, 2 * im)).collect();
            if lhs != comm {
                return Err(Error::VerificationFailed(format!("R is not a homomorphism on the pair ({a}, {b})")));
            }
            pairs_checked += 1;
        }
    }
    Ok(RMap { doubled, pairs_checked })
}

/// Which classical algebra `R` identifies `g` with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixedKind {
    /// `g ≅ sl(W)`.
    Special,
    /// `g ≅ sp(W)`.
    Symplectic,
}

/// The linear-algebra certificate behind [`identify_fixed`].
#[derive(Clone, Debug)]
pub struct FixedIdentification {
    pub kind: FixedKind,
    pub dim_g: usize,
    pub dim_w: usize,
    pub rank_of_r: usize,
    pub kernel_dim: usize,
    pub traceless: bool,
    /// Dimension of `{B : R(Z)ᵀB + B·R(Z) = 0 for all Z}`.
    pub form_space_dim: usize,
    pub form_symmetry: Option<FormSymmetry>,
    pub form_nondegenerate: Option<bool>,
    /// Same solve with `B = Bᵀ` imposed.
    pub symmetric_form_space_dim: usize,
}

fn form_solve(r: &RMap, symmetric: bool) -> Vec<Vec<Gaussian>> {
    let d = r.dim_w();
    let mut rr: RowReducer<Gaussian> = RowReducer::new(d * d);
    for m in &r.doubled {
        for row in 0..d {
            let (pr, ph_r) = m.column(row);
            for col in 0..d {
                // (MᵀB)_{rc} = ph_r B_{perm(r), c};  (BM)_{rc} = B_{r, perm(c)} ph_c.
                let (pc, ph_c) = m.column(col);
                rr.insert([(pr * d + col, Gaussian::i_pow(ph_r)), (row * d + pc, Gaussian::i_pow(ph_c))]);
            }
        }
    }
    if symmetric {
        for row in 0..d {
            for col in row + 1..d {
                rr.insert([(row * d + col, <Gaussian as Field>::one()), (col * d + row, Gaussian::from_ints(-1, 0))]);
            }
        }
    }
    rr.nullspace()
}

/// Certifies `g ≅ sl(W)` (R injective, `dim g = dim W² − 1`, traceless image)
/// or `g ≅ sp(W)` (a unique invariant form, antisymmetric and nondegenerate,
/// with `dim g = d(d+1)/2`).
pub fn identify_fixed(g: &FixedSubalgebra, r: &RMap) -> Result<FixedIdentification> {
    let d = r.dim_w();
    let dim_g = g.dim();
    let mut image: RowReducer<Gaussian> = RowReducer::new(d * d);
    for m in &r.doubled {
        image.insert(m.sparse_entries().into_iter().map(|(row, col, re, im)| (row * d + col, Gaussian::from_ints(re, im))));
    }
    let rank_of_r = image.rank();
    let kernel_dim = dim_g - rank_of_r;
    let traceless = r.doubled.iter().all(|m| m.trace() == (0, 0));
    let forms = form_solve(r, false);
    let (form_symmetry, form_nondegenerate) = match forms.as_slice() {
        [b] => {
            let m = GaussianMatrix::from_fn(d, d, |i, j| b[i * d + j].clone());
            (Some(form_symmetry(&m)), Some(!Field::is_zero(&m.det())))
        }
        _ => (None, None),
    };
    let symmetric_form_space_dim = form_solve(r, true).len();
    let injective = kernel_dim == 0;
    let kind = if injective && traceless && dim_g == d * d - 1 {
        FixedKind::Special
    } else if injective
        && forms.len() == 1
        && form_symmetry == Some(FormSymmetry::Antisymmetric)
        && form_nondegenerate == Some(true)
        && dim_g == d * (d + 1) / 2
    {
        FixedKind::Symplectic
    } else {
        return Err(Error::VerificationFailed(format!(
            "no certificate: dim g = {dim_g}, dim W = {d}, kernel {kernel_dim}, {} invariant forms",
            forms.len()
        )));
    };
    Ok(FixedIdentification {
        kind,
        dim_g,
        dim_w: d,
        rank_of_r,
        kernel_dim,
        traceless,
        form_space_dim: forms.len(),
        form_symmetry,
        form_nondegenerate,
        symmetric_form_space_dim,
    })
}
