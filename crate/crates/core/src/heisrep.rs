//! The representation `ρ` of `Ṽ` with `ρ(−1) = −id` on a space of
//! dimension `2^g`, built from generalized Pauli matrices.
//!
//! Every `ρ(x)` is monomial with entries in `{±1, ±i}`, so matrices are
//! stored as a permutation plus a power of `i` per column.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{Gaussian, GaussianMatrix, RowReducer};
use crate::error::{Error, Result};
use crate::extension::{Cocycle, ExtElement};
use crate::f2::{BitMatrix, BitVector, SymplecticDecomposition};

/// A monomial matrix: column `j` has the single entry `i^{phase[j]}` in row
/// `perm[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    perm: Vec<u32>,
    phase: Vec<u8>,
}

impl Monomial {
    pub fn identity(dim: usize) -> Self {
        Monomial { perm: (0..dim as u32).collect(), phase: vec![0; dim] }
    }

    /// `i^k · id`.
    pub fn scalar(dim: usize, k: u8) -> Self {
        Monomial { perm: (0..dim as u32).collect(), phase: vec![k % 4; dim] }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    /// Row index and phase of the nonzero entry of column `j`.
    pub fn column(&self, j: usize) -> (usize, u8) {
        (self.perm[j] as usize, self.phase[j])
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (perm, phase) = other
            .perm
            .iter()
            .zip(&other.phase)
            .map(|(&p, &ph)| (self.perm[p as usize], (ph + self.phase[p as usize]) % 4))
            .unzip();
        Monomial { perm, phase }
    }

    /// Multiplies by `i^k`.
    pub fn times_i_pow(&self, k: u8) -> Monomial {
        Monomial { perm: self.perm.clone(), phase: self.phase.iter().map(|p| (p + k) % 4).collect() }
    }

    pub fn neg(&self) -> Monomial {
        self.times_i_pow(2)
    }

    pub fn transpose(&self) -> Monomial {
        let mut perm = vec![0; self.dim()];
        let mut phase = vec![0; self.dim()];
        for (j, (&p, &ph)) in self.perm.iter().zip(&self.phase).enumerate() {
            perm[p as usize] = j as u32;
            phase[p as usize] = ph;
        }
        Monomial { perm, phase }
    }

    /// Trace as `(re, im)`.
    pub fn trace(&self) -> (i64, i64) {
        let mut t = (0i64, 0i64);
        for (j, (&p, &ph)) in self.perm.iter().zip(&self.phase).enumerate() {
            if p as usize == j {
                match ph {
                    0 => t.0 += 1,
                    1 => t.1 += 1,
                    2 => t.0 -= 1,
                    _ => t.1 -= 1,
                }
            }
        }
        t
    }

    /// `i^k · id` if this is scalar.
    pub fn as_scalar(&self) -> Option<u8> {
        let k = *self.phase.first()?;
        let scalar = self.perm.iter().enumerate().all(|(j, &p)| p as usize == j) && self.phase.iter().all(|&p| p == k);
        scalar.then_some(k)
    }

    pub fn to_gaussian(&self) -> GaussianMatrix {
        let mut m = GaussianMatrix::zeros(self.dim(), self.dim());
        for (j, (&p, &ph)) in self.perm.iter().zip(&self.phase).enumerate() {
            m.set(p as usize, j, Gaussian::i_pow(ph));
        }
        m
    }

    /// Nonzero entries as `(row, col, re, im)`.
    pub fn sparse_entries(&self) -> Vec<(usize, usize, i64, i64)> {
        let mut out: Vec<_> = self
            .perm
            .iter()
            .zip(&self.phase)
            .enumerate()
            .map(|(j, (&p, &ph))| {
                let (re, im) = [(1, 0), (0, 1), (-1, 0), (0, -1)][ph as usize];
                (p as usize, j, re, im)
            })
            .collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_gaussian())
    }
}

/// `ρ` together with the data it was built from.
#[derive(Clone, Debug)]
pub struct HeisRep {
    cocycle: Cocycle,
    decomposition: SymplecticDecomposition,
    /// `ρ(+1, eᵢ)` for the standard basis.
    generators: Vec<Monomial>,
    /// `ρ(+1, v)` indexed by `v.bits()`.
    table: Vec<Monomial>,
    /// Power of `i` by which each radical basis vector acts.
    radical_phases: Vec<u8>,
}

fn pauli_x(dim: usize, qubit: usize) -> Monomial {
    Monomial { perm: (0..dim as u32).map(|j| j ^ (1 << qubit)).collect(), phase: vec![0; dim] }
}

fn pauli_z(dim: usize, qubit: usize) -> Monomial {
    Monomial { perm: (0..dim as u32).collect(), phase: (0..dim).map(|j| if (j >> qubit) & 1 == 1 { 2 } else { 0 }).collect() }
}

/// Builds `ρ` from the Arf normal symplectic basis of the cocycle's space.
pub fn build_heisrep(cocycle: &Cocycle) -> Result<HeisRep> {
    build_heisrep_with_basis(cocycle, cocycle.space().arf_normal_basis())
}

/// Builds `ρ` from any symplectic decomposition `(eₖ, fₖ)ₖ ⊕ radical`.
/// `eₖ` acts by `X` and `fₖ` by `Z` on tensor factor `k`, each times `i`
/// when `q = 1`; a radical vector `r` acts by `i^{q(r)}`.
pub fn build_heisrep_with_basis(cocycle: &Cocycle, decomposition: SymplecticDecomposition) -> Result<HeisRep> {
    let space = cocycle.space();
    let n = space.dim();
    let g = decomposition.pairs.len();
    for (k, &(e, f)) in decomposition.pairs.iter().enumerate() {
        if !space.pairing(e, f) {
            return Err(Error::InvalidPairing("basis pair is orthogonal"));
        }
        for &(e2, f2) in &decomposition.pairs[k + 1..] {
            if [space.pairing(e, e2), space.pairing(e, f2), space.pairing(f, e2), space.pairing(f, f2)].contains(&true) {
                return Err(Error::InvalidPairing("distinct pairs are not orthogonal"));
            }
        }
    }
    if decomposition.radical.iter().any(|&r| (0..n).any(|i| space.pairing(r, BitVector::unit(n, i)))) {
        return Err(Error::InvalidPairing("radical vector pairs nontrivially"));
    }
    let basis = decomposition.basis();
    if basis.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: basis.len() });
    }
    let change = BitMatrix::from_columns(&basis).inverse().ok_or(Error::SingularMatrix)?;
    let dim = 1usize << g;
    let twist = |v: BitVector| if space.q(v) { 1 } else { 0 };
    let mut basis_images: Vec<Monomial> = Vec::with_capacity(n);
    for (k, &(e, f)) in decomposition.pairs.iter().enumerate() {
        basis_images.push(pauli_x(dim, k).times_i_pow(twist(e)));
        basis_images.push(pauli_z(dim, k).times_i_pow(twist(f)));
    }
    let radical_phases: Vec<u8> = decomposition.radical.iter().map(|&r| twist(r)).collect();
    basis_images.extend(radical_phases.iter().map(|&k| Monomial::scalar(dim, k)));
    let generators: Vec<Monomial> = (0..n)
        .map(|i| {
            let coords = change.mul_vec(BitVector::unit(n, i));
            coords.ones().fold(Monomial::identity(dim), |acc, b| acc.mul(&basis_images[b]))
        })
        .collect();
    // (+1, v) is the product of the generators over supp(v) in descending order.
    let table: Vec<Monomial> = BitVector::all(n)
        .map(|v| {
            let mut m = Monomial::identity(dim);
            for i in (0..n).rev().filter(|&i| v.get(i)) {
                m = m.mul(&generators[i]);
            }
            m
        })
        .collect();
    Ok(HeisRep { cocycle: cocycle.clone(), decomposition, generators, table, radical_phases })
}

/// Outcome of [`verify_rep`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepReport {
    pub group_order: u64,
    pub pairs_checked: u64,
    pub root_squares_checked: usize,
    pub commutant_dim: usize,
    pub minus_one_is_minus_id: bool,
}

impl HeisRep {
    pub fn dim(&self) -> usize {
        self.generators.first().map_or(1, Monomial::dim)
    }

    pub fn genus(&self) -> usize {
        self.decomposition.pairs.len()
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.cocycle
    }

    pub fn decomposition(&self) -> &SymplecticDecomposition {
        &self.decomposition
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn radical_phases(&self) -> &[u8] {
        &self.radical_phases
    }

    /// `M_v = ρ(+1, v)`.
    pub fn matrix(&self, v: BitVector) -> &Monomial {
        &self.table[v.bits() as usize]
    }

    pub fn rho(&self, x: ExtElement) -> Monomial {
        let m = self.matrix(x.v);
        if x.negative {
            m.neg()
        } else {
            m.clone()
        }
    }

    pub fn trace(&self, x: ExtElement) -> (i64, i64) {
        self.rho(x).trace()
    }

    fn check_pairs(&self, xs: &[ExtElement], ys: &[ExtElement]) -> Result<u64> {
        let mut count = 0u64;
        for &x in xs {
            let rx = self.rho(x);
            for &y in ys {
                if rx.mul(&self.rho(y)) != self.rho(self.cocycle.mul(x, y)) {
                    return Err(Error::VerificationFailed(alloc::format!("rho(x)rho(y) != rho(xy) at x = {x}, y = {y}")));
                }
                count += 1;
            }
        }
        Ok(count)
    }

    fn check_all_pairs(&self) -> Result<u64> {
        let all: Vec<ExtElement> = self.cocycle.elements().collect();
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            let counts: Result<Vec<u64>> = all.par_chunks(16).map(|chunk| self.check_pairs(chunk, &all)).collect();
            Ok(counts?.into_iter().sum())
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.check_pairs(&all, &all)
        }
    }

    /// Dimension of `{X : ρ(x) X = X ρ(x) for all x}`, computed from the
    /// generators by exact elimination.
    pub fn commutant_dim(&self) -> usize {
        let d = self.dim();
        let mut rr: RowReducer<Gaussian> = RowReducer::new(d * d);
        let var = |r: usize, c: usize| r * d + c;
        for a in &self.generators {
            let inv_perm = a.transpose();
            for r in 0..d {
                let (j, ph_j) = inv_perm.column(r);
                for c in 0..d {
                    // (AX)_{rc} = ph_j X_{j c} with perm(j) = r; (XA)_{rc} = X_{r perm(c)} ph_c.
                    let (pc, ph_c) = a.column(c);
                    let mut row = vec![(var(j, c), Gaussian::i_pow(ph_j))];
                    let rhs = (var(r, pc), -&Gaussian::i_pow(ph_c));
                    if rhs.0 == row[0].0 {
                        row[0].1 = &row[0].1 + &rhs.1;
                    } else {
                        row.push(rhs);
                    }
                    rr.insert(row);
                }
            }
        }
        d * d - rr.rank()
    }

    /// Basis of `{B : ρ(x)ᵀ B ρ(x) = χ(x) B}` where `χ` is `(−1)^{f(v)}` for
    /// the functional `f`, written as row-major `d × d` matrices.
    pub fn invariant_forms(&self, f: BitVector) -> Vec<GaussianMatrix> {
        let d = self.dim();
        let mut rr: RowReducer<Gaussian> = RowReducer::new(d * d);
        for (i, a) in self.generators.iter().enumerate() {
            let chi = if f.get(i) { 2u8 } else { 0 };
            for r in 0..d {
                let (pr, ph_r) = a.column(r);
                for c in 0..d {
                    // (AᵀBA)_{rc} = ph_r ph_c B_{perm(r) perm(c)}.
                    let (pc, ph_c) = a.column(c);
                    let lhs = (pr * d + pc, Gaussian::i_pow((ph_r + ph_c) % 4));
                    let rhs = (r * d + c, -&Gaussian::i_pow(chi));
                    let row = if lhs.0 == rhs.0 { vec![(lhs.0, &lhs.1 + &rhs.1)] } else { vec![lhs, rhs] };
                    rr.insert(row);
                }
            }
        }
        rr.nullspace().into_iter().map(|x| GaussianMatrix::from_fn(d, d, |r, c| x[r * d + c].clone())).collect()
    }
}

/// Symmetry type of a bilinear form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormSymmetry {
    Symmetric,
    Antisymmetric,
    Neither,
}

pub fn form_symmetry(b: &GaussianMatrix) -> FormSymmetry {
    let t = b.transpose();
    if &t == b {
        FormSymmetry::Symmetric
    } else if t == b.neg() {
        FormSymmetry::Antisymmetric
    } else {
        FormSymmetry::Neither
    }
}

/// Checks the full multiplication table, `ρ(−1) = −id`, `ρ(c(γ))² = −id`
/// for the given root classes, and irreducibility via the commutant.
pub fn verify_rep(rep: &HeisRep, root_classes: &[BitVector]) -> Result<RepReport> {
    let pairs_checked = rep.check_all_pairs()?;
    let minus = rep.rho(rep.cocycle.minus_one());
    let minus_one_is_minus_id = minus == Monomial::scalar(rep.dim(), 2);
    if !minus_one_is_minus_id {
        return Err(Error::VerificationFailed(String::from("rho(-1) is not -id")));
    }
    let minus_id = Monomial::scalar(rep.dim(), 2);
    for &v in root_classes {
        let m = rep.rho(rep.cocycle.canonical_lift(v));
        if m.mul(&m) != minus_id {
            return Err(Error::VerificationFailed(alloc::format!("root lift over {v:?} does not square to -id")));
        }
    }
    let commutant_dim = rep.commutant_dim();
    if commutant_dim != 1 {
        return Err(Error::VerificationFailed(alloc::format!("commutant has dimension {commutant_dim}")));
    }
    Ok(RepReport {
        group_order: rep.cocycle.order(),
        pairs_checked,
        root_squares_checked: root_classes.len(),
        commutant_dim,
        minus_one_is_minus_id,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2::F2QuadraticSpace;

    #[test]
    fn monomial_algebra_matches_dense() {
        let x = pauli_x(4, 1).times_i_pow(1);
        let z = pauli_z(4, 0).times_i_pow(3);
        let dense = x.to_gaussian().mul(&z.to_gaussian());
        assert_eq!(x.mul(&z).to_gaussian(), dense);
        assert_eq!(x.transpose().to_gaussian(), x.to_gaussian().transpose());
        assert_eq!(x.mul(&z).trace(), (0, 0));
        assert_eq!(Monomial::scalar(4, 1).trace(), (0, 4));
    }

    #[test]
    fn genus_one_both_arf_values() {
        for qbasis in 0..4 {
            let space = F2QuadraticSpace::hyperbolic(1, qbasis).unwrap();
            let c = Cocycle::new(&space);
            let rep = build_heisrep(&c).unwrap();
            assert_eq!(rep.dim(), 2);
            let report = verify_rep(&rep, &[]).unwrap();
            assert_eq!(report.pairs_checked, 64);
        }
    }

    #[test]
    fn rejects_bad_basis() {
        let space = F2QuadraticSpace::hyperbolic(1, 0).unwrap();
        let c = Cocycle::new(&space);
        let e = BitVector::unit(2, 0);
        let bad = SymplecticDecomposition { pairs: vec![(e, e)], radical: vec![] };
        assert!(build_heisrep_with_basis(&c, bad).is_err());
    }
}
