use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::Field;

/// Incremental sparse row reduction over an exact field.
///
/// Rows are kept in semi-echelon form: each stored row's smallest column is
/// its pivot and no two rows share a pivot.
#[derive(Clone, Debug)]
pub struct RowReducer<F: Field> {
    ncols: usize,
    rows: BTreeMap<usize, Vec<(usize, F)>>,
    inserted: usize,
    /// `(insertion index, pivot)` for rows that were independent on arrival.
    order: Vec<(usize, usize)>,
}

impl<F: Field> RowReducer<F> {
    pub fn new(ncols: usize) -> Self {
        RowReducer { ncols, rows: BTreeMap::new(), inserted: 0, order: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` (any order, duplicate columns summed) against the
    /// stored rows; stores it if independent. Returns whether it was.
    pub fn insert(&mut self, row: impl IntoIterator<Item = (usize, F)>) -> bool {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for (c, v) in row {
            assert!(c < self.ncols, "column {c} out of range");
            let entry = acc.entry(c).or_insert_with(F::zero);
            *entry = entry.add(&v);
        }
        acc.retain(|_, v| !v.is_zero());
        let index = self.inserted;
        self.inserted += 1;
        loop {
            let Some((&col, lead)) = acc.iter().next() else { return false };
            let Some(pivot_row) = self.rows.get(&col) else {
                let stored: Vec<(usize, F)> = acc.into_iter().collect();
                self.order.push((index, col));
                self.rows.insert(col, stored);
                return true;
            };
            let factor = lead.mul(&pivot_row[0].1.inv());
            for (c, v) in pivot_row {
                let entry = acc.entry(*c).or_insert_with(F::zero);
                *entry = entry.sub(&factor.mul(v));
                if entry.is_zero() {
                    acc.remove(c);
                }
            }
        }
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    /// A basis of the solution space of the stored homogeneous system.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.rows.contains_key(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vec![F::zero(); self.ncols];
            x[f] = F::one();
            for (&p, row) in self.rows.iter().rev() {
                let mut s = F::zero();
                for (c, v) in &row[1..] {
                    if !x[*c].is_zero() {
                        s = s.add(&v.mul(&x[*c]));
                    }
                }
                if !s.is_zero() {
                    x[p] = s.mul(&row[0].1.inv()).neg();
                }
            }
            basis.push(x);
        }
        basis
    }

    /// Determinant of the square matrix whose rows were inserted in order.
    /// Only meaningful after exactly `ncols` insertions.
    pub fn determinant(&self) -> F {
        if self.inserted != self.ncols || self.rows.len() != self.ncols {
            return F::zero();
        }
        // Reduction used only "add a multiple of an earlier row", so the
        // determinant is that of the stored rows placed in insertion order.
        let mut perm: Vec<usize> = vec![0; self.ncols];
        for &(index, pivot) in &self.order {
            perm[index] = pivot;
        }
        let mut det = F::one();
        for &(_, pivot) in &self.order {
            det = det.mul(&self.rows[&pivot][0].1);
        }
        if permutation_is_odd(&perm) {
            det = det.neg();
        }
        det
    }
}

fn permutation_is_odd(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut odd = false;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}
