//! Integral structure-constant tables and the checks that only need the
//! table: antisymmetry, Jacobi, Killing form.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{q_int, RowReducer, Q};

/// A sparse integer combination of basis vectors, sorted by index.
pub type Sparse = Vec<(usize, i64)>;

/// Sums terms, dropping zeros.
pub fn normalize(terms: impl IntoIterator<Item = (usize, i64)>) -> Sparse {
    let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
    for (i, c) in terms {
        *acc.entry(i).or_insert(0) += c;
    }
    acc.into_iter().filter(|&(_, c)| c != 0).collect()
}

/// `[eᵢ, eⱼ]` for every ordered pair of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTable {
    dim: usize,
    entries: Vec<Sparse>,
}

/// Outcome of an identity check over many basis tuples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<Vec<usize>>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, ok: bool, at: impl FnOnce() -> Vec<usize>) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(at());
            }
        }
    }

    pub fn merge(mut self, other: CheckReport) -> CheckReport {
        self.checked += other.checked;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
        self
    }
}

/// Scratch accumulator indexed by basis vector.
struct Dense {
    values: Vec<i64>,
    touched: Vec<usize>,
}

impl Dense {
    fn new(dim: usize) -> Self {
        Dense { values: vec![0; dim], touched: Vec::new() }
    }

    fn add(&mut self, i: usize, c: i64) {
        if self.values[i] == 0 {
            self.touched.push(i);
        }
        self.values[i] += c;
    }

    /// Whether everything cancelled; resets the buffer.
    fn drain_is_zero(&mut self) -> bool {
        let mut zero = true;
        for &i in &self.touched {
            zero &= self.values[i] == 0;
            self.values[i] = 0;
        }
        self.touched.clear();
        zero
    }
}

impl BracketTable {
    /// Builds the table from a rule giving `[eᵢ, eⱼ]`.
    pub fn from_fn(dim: usize, mut rule: impl FnMut(usize, usize) -> Sparse) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(rule(i, j));
            }
        }
        BracketTable { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &Sparse {
        &self.entries[i * self.dim + j]
    }

    pub fn bracket(&self, x: &[(usize, i64)], y: &[(usize, i64)]) -> Sparse {
        normalize(x.iter().flat_map(|&(a, ca)| {
            y.iter().flat_map(move |&(b, cb)| self.basis_bracket(a, b).iter().map(move |&(k, c)| (k, ca * cb * c)))
        }))
    }

    /// Coefficient of `e_k` in `[eᵢ, eⱼ]`.
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> i64 {
        self.basis_bracket(i, j).iter().find(|&&(l, _)| l == k).map_or(0, |&(_, c)| c)
    }

    /// Nonzero `(i, j, [eᵢ, eⱼ])` in row-major order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &Sparse)> {
        self.entries.iter().enumerate().filter(|(_, e)| !e.is_empty()).map(move |(n, e)| (n / self.dim, n % self.dim, e))
    }

    pub fn max_abs_constant(&self) -> i64 {
        self.entries.iter().flatten().map(|&(_, c)| c.abs()).max().unwrap_or(0)
    }

    pub fn check_antisymmetry(&self) -> CheckReport {
        let mut report = CheckReport::default();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ok = *self.basis_bracket(i, j) == normalize(self.basis_bracket(j, i).iter().map(|&(k, c)| (k, -c)));
                report.record(ok, || vec![i, j]);
            }
        }
        report
    }

    fn add_bracket_with_basis(&self, x: &Sparse, c: usize, sign: i64, acc: &mut Dense) {
        for &(a, ca) in x {
            for &(k, ck) in self.basis_bracket(a, c) {
                acc.add(k, sign * ca * ck);
            }
        }
    }

    fn jacobi_at(&self, a: usize, b: usize, c: usize, acc: &mut Dense) -> bool {
        self.add_bracket_with_basis(self.basis_bracket(a, b), c, 1, acc);
        self.add_bracket_with_basis(self.basis_bracket(b, c), a, 1, acc);
        self.add_bracket_with_basis(self.basis_bracket(c, a), b, 1, acc);
        acc.drain_is_zero()
    }

    fn jacobi_rows(&self, first: impl Iterator<Item = usize>) -> CheckReport {
        let mut acc = Dense::new(self.dim);
        let mut report = CheckReport::default();
        for a in first {
            for b in 0..self.dim {
                for c in 0..self.dim {
                    let ok = self.jacobi_at(a, b, c, &mut acc);
                    report.record(ok, || vec![a, b, c]);
                }
            }
        }
        report
    }

    /// `[[a,b],c] + [[b,c],a] + [[c,a],b] = 0` for every ordered basis triple.
    pub fn verify_jacobi(&self) -> CheckReport {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            (0..self.dim)
                .into_par_iter()
                .map(|a| self.jacobi_rows(core::iter::once(a)))
                .collect::<Vec<_>>()
                .into_iter()
                .fold(CheckReport::default(), CheckReport::merge)
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.jacobi_rows(0..self.dim)
        }
    }

    /// Jacobi on the given triples only.
    pub fn verify_jacobi_triples(&self, triples: impl IntoIterator<Item = (usize, usize, usize)>) -> CheckReport {
        let mut acc = Dense::new(self.dim);
        let mut report = CheckReport::default();
        for (a, b, c) in triples {
            let ok = self.jacobi_at(a, b, c, &mut acc);
            report.record(ok, || vec![a, b, c]);
        }
        report
    }

    /// `K(eᵢ, eⱼ) = tr(ad eᵢ ∘ ad eⱼ)`.
    pub fn killing_form(&self) -> Vec<Vec<i64>> {
        let n = self.dim;
        let mut k = vec![vec![0i64; n]; n];
        for (i, row) in k.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                let mut t = 0;
                for m in 0..n {
                    for &(l, c) in self.basis_bracket(j, m) {
                        t += c * self.coefficient(i, l, m);
                    }
                }
                *entry = t;
            }
        }
        k
    }
}

/// Exact determinant of an integer matrix.
pub fn rational_det(m: &[Vec<i64>]) -> Q {
    let mut rr: RowReducer<Q> = RowReducer::new(m.len());
    for row in m {
        rr.insert(row.iter().enumerate().filter(|(_, &c)| c != 0).map(|(j, &c)| (j, q_int(c))));
    }
    rr.determinant()
}
