//! The real orbit table: for each involution class of `W(E6)`, the number
//! of real bitangents, `#J(ℝ)/2J(ℝ)`, and the number of real orbits.

use alloc::format;
use alloc::vec::Vec;

use crate::arith::intmat::{self, IntMatrix};
use crate::error::{Error, Result};
use crate::f2::{BitMatrix, F2QuadraticSpace};
use crate::lattice::{classify_involutions, weyl_enumerate, InvolutionLabel, RootDatum, RootType, WeylInvolutionClass};

/// One row of the table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub label: InvolutionLabel,
    /// Number of real components (carried, not computed).
    pub n: u32,
    /// Whether the complex points minus the real ones are connected (carried, not computed).
    pub a: u32,
    pub real_bitangents: u64,
    pub j_mod_2j_size: u64,
    pub orbit_count: u64,
    /// `log₂ #J(ℝ)/2J(ℝ)`.
    pub g: u32,
    /// All `w`-invariant refinements, of either Arf invariant.
    pub invariant_refinements: u64,
}

/// `(n(C), a(C))` for each class, in table order.
pub fn carried_metadata(label: InvolutionLabel) -> (u32, u32) {
    match label {
        InvolutionLabel::Identity => (4, 0),
        InvolutionLabel::S1 => (3, 1),
        InvolutionLabel::S1S2 => (2, 1),
        InvolutionLabel::S1S2S3 => (1, 1),
        InvolutionLabel::Tau => (2, 0),
    }
}

/// The published columns `(bitangents, #J(ℝ)/2J(ℝ), orbits)`.
pub fn expected_columns(label: InvolutionLabel) -> (u64, u64, u64) {
    match label {
        InvolutionLabel::Identity => (28, 8, 36),
        InvolutionLabel::S1 => (16, 4, 10),
        InvolutionLabel::S1S2 => (8, 2, 3),
        InvolutionLabel::S1S2S3 => (4, 1, 1),
        InvolutionLabel::Tau => (4, 2, 3),
    }
}

/// `2^{g−1}(2^g + 1)`, which is 1 at `g = 0`.
pub fn orbit_formula(g: u32) -> u64 {
    let s = 1u64 << g;
    s * (s + 1) / 2
}

/// The row for an involution `w` of `W(E6)` acting on simple-root coordinates.
pub fn row_for_matrix(datum: &RootDatum, label: InvolutionLabel, w: &IntMatrix) -> Result<TableRow> {
    if datum.root_type() != RootType::E6 {
        return Err(Error::TypeMismatch { expected: "E6", found: format!("{}", datum.root_type()) });
    }
    let n = datum.rank();
    if intmat::mul(w, w) != intmat::identity(n) || !datum.preserves_form(w) {
        return Err(Error::NotInvolution);
    }
    let w2 = BitMatrix::from_int_rows(w);
    let one_plus: IntMatrix = (0..n).map(|i| (0..n).map(|j| w[i][j] + i64::from(i == j)).collect()).collect();
    let r = BitMatrix::from_int_rows(&one_plus).rank() as u32;
    let g = 3u32.checked_sub(r).ok_or(Error::VerificationFailed(format!("rank of 1 + w is {r}")))?;
    let space = datum.mod2_space().space;
    let mut real_bitangents = 0;
    let mut invariant_refinements = 0;
    for refinement in space.all_refinements() {
        if refinement.is_invariant_under(&w2) {
            invariant_refinements += 1;
            if refinement.arf()? {
                real_bitangents += 1;
            }
        }
    }
    let (n_c, a_c) = carried_metadata(label);
    Ok(TableRow {
        label,
        n: n_c,
        a: a_c,
        real_bitangents,
        j_mod_2j_size: 1 << g,
        orbit_count: orbit_formula(g),
        g,
        invariant_refinements,
    })
}

pub fn row_for_involution(datum: &RootDatum, class: &WeylInvolutionClass) -> Result<TableRow> {
    row_for_matrix(datum, class.label, &class.representative)
}

/// All five rows from precomputed classes, checked against the published
/// columns.
pub fn table_from_classes(datum: &RootDatum, classes: &[WeylInvolutionClass]) -> Result<Vec<TableRow>> {
    let rows = classes.iter().map(|c| row_for_involution(datum, c)).collect::<Result<Vec<_>>>()?;
    if rows.len() != 5 {
        return Err(Error::VerificationFailed(format!("expected 5 classes, found {}", rows.len())));
    }
    for row in &rows {
        let got = (row.real_bitangents, row.j_mod_2j_size, row.orbit_count);
        if got != expected_columns(row.label) {
            return Err(Error::VerificationFailed(format!(
                "row {}: computed {got:?}, expected {:?}",
                row.label,
                expected_columns(row.label)
            )));
        }
    }
    Ok(rows)
}

/// Enumerates `W(E6)`, classifies its involutions and builds the table.
pub fn emit_table(datum: &RootDatum) -> Result<Vec<TableRow>> {
    let group = weyl_enumerate(datum, 51_840)?;
    let classes = classify_involutions(datum, &group)?;
    table_from_classes(datum, &classes)
}

/// `|q⁻¹(0)|` for an Arf-0 refinement on a `2g`-dimensional space, by
/// brute force; 1 for `g = 0`.
pub fn orbit_count_crosscheck(g: usize) -> Result<u64> {
    if g > 3 {
        return Err(Error::OutOfRange { what: "genus g (0..=3)", value: g as i64 });
    }
    if g == 0 {
        return Ok(1);
    }
    let space = F2QuadraticSpace::hyperbolic(g, 0)?;
    debug_assert!(!space.arf()?);
    Ok(space.zero_count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crosscheck_small_genera() {
        assert_eq!(orbit_count_crosscheck(0).unwrap(), 1);
        assert_eq!(orbit_count_crosscheck(1).unwrap(), 3);
        assert_eq!(orbit_count_crosscheck(3).unwrap(), 36);
        for g in 0..=3 {
            assert_eq!(orbit_count_crosscheck(g as usize).unwrap(), orbit_formula(g));
        }
    }

    #[test]
    fn identity_row() {
        let d = RootDatum::of_type(RootType::E6).unwrap();
        let row = row_for_matrix(&d, InvolutionLabel::Identity, &intmat::identity(6)).unwrap();
        assert_eq!((row.real_bitangents, row.j_mod_2j_size, row.orbit_count), (28, 8, 36));
        assert_eq!(row.invariant_refinements, 64);
    }

    #[test]
    fn rejects_non_involutions() {
        let d = RootDatum::of_type(RootType::E6).unwrap();
        let s = d.simple_reflections();
        let w = intmat::mul(&s[0], &s[2]);
        assert!(matches!(row_for_matrix(&d, InvolutionLabel::S1, &w), Err(Error::NotInvolution)));
    }
}
