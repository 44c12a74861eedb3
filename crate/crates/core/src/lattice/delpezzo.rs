//! The Picard lattice of a degree-2 del Pezzo surface.
//!
//! Classes are written `a·h + Σ bᵢ·eᵢ` and stored as `[a, b₁, …, b₇]`, with
//! `h² = 1`, `eᵢ² = −1` and all mixed products zero.

use alloc::vec;
use alloc::vec::Vec;

use super::{IntLattice, RootDatum, RootType};
use crate::arith::intmat::{self, IntMatrix};
use crate::error::{Error, Result};

/// The rank-8 lattice `⟨1⟩ ⊕ ⟨−1⟩⁷`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DelPezzoPicard;

/// A negative-definite sublattice of the Picard lattice, made positive by
/// negating the form.
#[derive(Clone, Debug)]
pub struct PicardSublattice {
    /// Rows are Picard classes forming a ℤ-basis of the sublattice.
    pub basis: IntMatrix,
    pub datum: RootDatum,
}

impl PicardSublattice {
    /// Picard class of a vector given in simple-root coordinates.
    pub fn to_picard(&self, v: &[i64]) -> Vec<i64> {
        let ambient = self.datum.to_ambient(v);
        (0..DelPezzoPicard::RANK).map(|k| ambient.iter().zip(&self.basis).map(|(c, b)| c * b[k]).sum()).collect()
    }
}

impl DelPezzoPicard {
    pub const RANK: usize = 8;

    pub fn form(&self) -> IntMatrix {
        let mut g = vec![vec![0; Self::RANK]; Self::RANK];
        g[0][0] = 1;
        for (i, row) in g.iter_mut().enumerate().skip(1) {
            row[i] = -1;
        }
        g
    }

    pub fn intersect(&self, x: &[i64], y: &[i64]) -> i64 {
        x[0] * y[0] - x[1..].iter().zip(&y[1..]).map(|(a, b)| a * b).sum::<i64>()
    }

    /// `K = −3h + e₁ + … + e₇`.
    pub fn canonical(&self) -> Vec<i64> {
        let mut k = vec![1; Self::RANK];
        k[0] = -3;
        k
    }

    pub fn h(&self) -> Vec<i64> {
        let mut v = vec![0; Self::RANK];
        v[0] = 1;
        v
    }

    /// `eᵢ` for `i` in `1..=7`.
    pub fn exceptional(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; Self::RANK];
        v[i] = 1;
        v
    }

    pub fn is_line(&self, d: &[i64]) -> bool {
        d.len() == Self::RANK && self.intersect(d, d) == -1 && self.intersect(d, &self.canonical()) == -1
    }

    /// `−K − D`.
    pub fn partner(&self, d: &[i64]) -> Vec<i64> {
        self.canonical().iter().zip(d).map(|(k, x)| -k - x).collect()
    }

    /// All classes with `D² = −1` and `D·K = −1`. These force `Σbᵢ = 1 − 3a`
    /// and `Σbᵢ² = a² + 1`, so Cauchy–Schwarz bounds `0 ≤ a ≤ 3` and
    /// `|bᵢ| ≤ 3`.
    pub fn lines(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for a in 0..=3i64 {
            let mut d = vec![0; Self::RANK];
            d[0] = a;
            self.lines_rec(1, a * a + 1, &mut d, &mut out);
        }
        out
    }

    fn lines_rec(&self, i: usize, norm_left: i64, d: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == Self::RANK {
            if norm_left == 0 && self.is_line(d) {
                out.push(d.clone());
            }
            return;
        }
        for b in -3..=3i64 {
            if b * b <= norm_left {
                d[i] = b;
                self.lines_rec(i + 1, norm_left - b * b, d, out);
            }
        }
        d[i] = 0;
    }

    /// Lines `D` with `D·e = 1` and `D·f = 0`, where `f = −K − e`.
    pub fn lines_meeting(&self, e: &[i64]) -> Result<Vec<Vec<i64>>> {
        if !self.is_line(e) {
            return Err(Error::NotLineClass);
        }
        let f = self.partner(e);
        Ok(self.lines().into_iter().filter(|d| self.intersect(d, e) == 1 && self.intersect(d, &f) == 0).collect())
    }

    fn orthogonal_complement(&self, classes: &[Vec<i64>]) -> Result<PicardSublattice> {
        let form = self.form();
        let rows: IntMatrix = classes.iter().map(|c| intmat::mul_vec(&form, c)).collect();
        let mut basis = intmat::integer_kernel(&rows, Self::RANK);
        let negated: IntMatrix = form.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        intmat::size_reduce(&mut basis, &negated);
        let gram: IntMatrix = basis.iter().map(|x| basis.iter().map(|y| -self.intersect(x, y)).collect()).collect();
        let datum = IntLattice::new(gram)?.enumerate_roots()?;
        Ok(PicardSublattice { basis, datum })
    }

    /// `K⊥` with the negated form: a root lattice of type `E7`.
    pub fn k_perp(&self) -> Result<PicardSublattice> {
        let sub = self.orthogonal_complement(&[self.canonical()])?;
        if sub.datum.root_type() != RootType::E7 {
            return Err(Error::VerificationFailed(alloc::format!("K-perp has type {}", sub.datum.root_type())));
        }
        Ok(sub)
    }

    /// `⟨e, −K − e⟩⊥` with the negated form: a root lattice of type `E6`.
    pub fn bitangent_complement(&self, e: &[i64]) -> Result<PicardSublattice> {
        if !self.is_line(e) {
            return Err(Error::NotLineClass);
        }
        let f = self.partner(e);
        if !self.is_line(&f) || self.intersect(e, &f) != 2 {
            return Err(Error::NotLineClass);
        }
        let sub = self.orthogonal_complement(&[e.to_vec(), f])?;
        if sub.datum.root_type() != RootType::E6 {
            return Err(Error::VerificationFailed(alloc::format!("complement has type {}", sub.datum.root_type())));
        }
        Ok(sub)
    }
}
