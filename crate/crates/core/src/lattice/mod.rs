//! Positive-definite integral lattices and their root systems.
//!
//! Roots are found by exact Fincke–Pohst enumeration of the vectors of norm
//! 2. A positive system is fixed by lexicographic sign in the ambient basis;
//! its indecomposable elements are the simple roots, and everything
//! downstream works in simple-root coordinates, where the Gram matrix is the
//! Cartan matrix.

mod delpezzo;
mod weyl;

pub use delpezzo::{DelPezzoPicard, PicardSublattice};
pub use weyl::{classify_involutions, tau_class_independence, weyl_enumerate, InvolutionLabel, WeylInvolutionClass};

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::intmat::{self, IntMatrix};
use crate::arith::{q_int, Q};
use crate::error::{Error, Result};
use crate::f2::{BitMatrix, BitVector, F2QuadraticSpace};

/// Irreducible simply laced types, plus a catch-all for everything else.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
    Other { rank: usize, roots: usize },
}

impl RootType {
    pub fn rank(self) -> usize {
        match self {
            RootType::A(n) | RootType::D(n) => n,
            RootType::E6 => 6,
            RootType::E7 => 7,
            RootType::E8 => 8,
            RootType::Other { rank, .. } => rank,
        }
    }

    pub fn root_count(self) -> usize {
        match self {
            RootType::A(n) => n * (n + 1),
            RootType::D(n) => 2 * n * (n - 1),
            RootType::E6 => 72,
            RootType::E7 => 126,
            RootType::E8 => 240,
            RootType::Other { roots, .. } => roots,
        }
    }

    /// Parses `A2`, `A_2`, `D4`, `E6`, … (case-insensitive).
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let unsupported = || Error::UnsupportedType(String::from(t));
        let mut chars = t.chars();
        let letter = chars.next().ok_or_else(unsupported)?.to_ascii_uppercase();
        let rest = chars.as_str().trim_start_matches('_');
        let n: usize = rest.parse().map_err(|_| unsupported())?;
        match (letter, n) {
            ('A', n) if n >= 1 => Ok(RootType::A(n)),
            ('D', n) if n >= 4 => Ok(RootType::D(n)),
            ('E', 6) => Ok(RootType::E6),
            ('E', 7) => Ok(RootType::E7),
            ('E', 8) => Ok(RootType::E8),
            _ => Err(unsupported()),
        }
    }

    /// The Cartan matrix in Bourbaki numbering. For `E_n` the chain is
    /// `1-3-4-…-n` with node 2 attached to node 4.
    pub fn cartan(self) -> Result<IntMatrix> {
        let (n, edges): (usize, Vec<(usize, usize)>) = match self {
            RootType::A(n) if n >= 1 => (n, (1..n).map(|i| (i - 1, i)).collect()),
            RootType::D(n) if n >= 4 => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((n - 3, n - 1));
                (n, e)
            }
            RootType::E6 | RootType::E7 | RootType::E8 => {
                let n = self.rank();
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((3..n).map(|i| (i - 1, i)));
                (n, e)
            }
            _ => return Err(Error::UnsupportedType(format!("{self}"))),
        };
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in edges {
            c[a][b] = -1;
            c[b][a] = -1;
        }
        Ok(c)
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootType::A(n) => write!(f, "A{n}"),
            RootType::D(n) => write!(f, "D{n}"),
            RootType::E6 => f.write_str("E6"),
            RootType::E7 => f.write_str("E7"),
            RootType::E8 => f.write_str("E8"),
            RootType::Other { rank, roots } => write!(f, "rank{rank}_roots{roots}"),
        }
    }
}

/// An integral lattice given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLattice {
    gram: IntMatrix,
}

impl IntLattice {
    pub fn new(gram: IntMatrix) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: gram.iter().map(Vec::len).max().unwrap_or(0) });
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotPositiveDefinite);
                }
            }
        }
        Ok(IntLattice { gram })
    }

    pub fn of_type(t: RootType) -> Result<Self> {
        IntLattice::new(t.cartan()?)
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        intmat::bilinear(&self.gram, x, y)
    }

    /// `Q(x) = Σᵢ dᵢ (xᵢ + Σ_{j>i} μᵢⱼ xⱼ)²`, failing unless every `dᵢ > 0`.
    fn fincke_pohst_form(&self) -> Result<(Vec<Q>, Vec<Vec<Q>>)> {
        let n = self.rank();
        let mut d: Vec<Q> = Vec::with_capacity(n);
        let mut mu = vec![vec![Q::zero(); n]; n];
        for i in 0..n {
            let mut dii = q_int(self.gram[i][i]);
            for k in 0..i {
                dii -= &d[k] * &mu[k][i] * &mu[k][i];
            }
            if !dii.is_positive() {
                return Err(Error::NotPositiveDefinite);
            }
            for j in i + 1..n {
                let mut s = q_int(self.gram[i][j]);
                for k in 0..i {
                    s -= &d[k] * &mu[k][i] * &mu[k][j];
                }
                mu[i][j] = s / &dii;
            }
            d.push(dii);
        }
        Ok((d, mu))
    }

    /// All nonzero vectors with `⟨x, x⟩ ≤ bound`, by exact Fincke–Pohst
    /// enumeration, in no particular order.
    pub fn short_vectors(&self, bound: i64) -> Result<Vec<Vec<i64>>> {
        let (d, mu) = self.fincke_pohst_form()?;
        let n = self.rank();
        let mut out = Vec::new();
        let mut x = vec![0i64; n];
        if n > 0 {
            self.fp_recurse(n - 1, &q_int(bound), &d, &mu, &mut x, &mut out);
        }
        Ok(out)
    }

    fn fp_recurse(&self, i: usize, budget: &Q, d: &[Q], mu: &[Vec<Q>], x: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let n = x.len();
        let mut center = Q::zero();
        for j in i + 1..n {
            center -= &mu[i][j] * q_int(x[j]);
        }
        let term = |xi: i64| -> Q {
            let t = q_int(xi) - &center;
            &d[i] * &t * &t
        };
        let start = center.floor().to_integer();
        let start: i64 = i64::try_from(start).expect("coordinate overflow");
        // Scan outward from floor(center) in both directions.
        for dir in [1i64, -1] {
            let mut xi = if dir == 1 { start } else { start - 1 };
            loop {
                let t = term(xi);
                if &t > budget {
                    break;
                }
                x[i] = xi;
                let rest = budget - &t;
                if i == 0 {
                    if x.iter().any(|&c| c != 0) {
                        out.push(x.clone());
                    }
                } else {
                    self.fp_recurse(i - 1, &rest, d, mu, x, out);
                }
                xi += dir;
            }
        }
        x[i] = 0;
    }

    /// Roots of an even positive-definite lattice, assembled into a root datum.
    pub fn enumerate_roots(&self) -> Result<RootDatum> {
        RootDatum::from_lattice(self.clone())
    }

    /// Invariant factors of `Λ∨/Λ` from the Smith normal form of the Gram
    /// matrix; empty for unimodular lattices.
    pub fn discriminant_group(&self) -> Result<Vec<i64>> {
        intmat::smith_invariants(&self.gram)
    }
}

/// A root lattice with its roots in simple-root coordinates.
#[derive(Clone, Debug)]
pub struct RootDatum {
    ambient: IntLattice,
    /// Simple roots written in the ambient basis.
    simple_ambient: IntMatrix,
    cartan: IntMatrix,
    roots: Vec<Vec<i64>>,
    simple: Vec<usize>,
    index: BTreeMap<Vec<i64>, usize>,
    root_type: RootType,
}

fn lex_positive(v: &[i64]) -> bool {
    v.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
}

fn height_lex(a: &[i64], b: &[i64]) -> Ordering {
    let ha: i64 = a.iter().sum();
    let hb: i64 = b.iter().sum();
    ha.cmp(&hb).then_with(|| a.cmp(b))
}

impl RootDatum {
    pub fn of_type(t: RootType) -> Result<Self> {
        IntLattice::of_type(t)?.enumerate_roots()
    }

    fn from_lattice(ambient: IntLattice) -> Result<Self> {
        let n = ambient.rank();
        for i in 0..n {
            if ambient.gram[i][i] % 2 != 0 {
                return Err(Error::NotRootLattice("lattice is not even"));
            }
        }
        let found = ambient.short_vectors(2)?;
        if found.iter().any(|v| ambient.inner(v, v) != 2) {
            return Err(Error::NotRootLattice("lattice has vectors of norm 1"));
        }
        let positive: Vec<&Vec<i64>> = found.iter().filter(|v| lex_positive(v)).collect();
        let mut simple_ambient: Vec<Vec<i64>> = positive
            .iter()
            .filter(|r| {
                !positive.iter().any(|a| {
                    let diff: Vec<i64> = r.iter().zip(a.iter()).map(|(x, y)| x - y).collect();
                    lex_positive(&diff) && positive.iter().any(|b| **b == diff)
                })
            })
            .map(|r| (*r).clone())
            .collect();
        if simple_ambient.len() != n {
            return Err(Error::NotRootLattice("roots do not span the lattice"));
        }
        simple_ambient.sort_by(|a, b| b.cmp(a));
        // Columns of `basis` are the simple roots.
        let basis = intmat::transpose(&simple_ambient);
        if intmat::det(&basis).abs() != 1 {
            return Err(Error::NotRootLattice("roots generate a proper sublattice"));
        }
        let inv = unimodular_inverse(&basis)?;
        let mut roots: Vec<Vec<i64>> = found.iter().map(|v| intmat::mul_vec(&inv, v)).collect();
        roots.sort_by(|a, b| height_lex(a, b));
        let cartan: IntMatrix =
            simple_ambient.iter().map(|a| simple_ambient.iter().map(|b| ambient.inner(a, b)).collect()).collect();
        RootDatum::assemble(ambient, simple_ambient, cartan, roots)
    }

    fn assemble(ambient: IntLattice, simple_ambient: IntMatrix, cartan: IntMatrix, roots: Vec<Vec<i64>>) -> Result<Self> {
        let n = cartan.len();
        let index: BTreeMap<Vec<i64>, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let simple = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                index.get(&e).copied().ok_or(Error::NotRootLattice("simple root missing"))
            })
            .collect::<Result<Vec<_>>>()?;
        let root_type = detect_type(&cartan, roots.len());
        Ok(RootDatum { ambient, simple_ambient, cartan, roots, simple, index, root_type })
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn root_type(&self) -> RootType {
        self.root_type
    }

    pub fn ambient(&self) -> &IntLattice {
        &self.ambient
    }

    /// Simple roots in the ambient basis of the lattice the datum was built from.
    pub fn simple_in_ambient(&self) -> &IntMatrix {
        &self.simple_ambient
    }

    /// Ambient coordinates of a vector given in simple-root coordinates.
    pub fn to_ambient(&self, v: &[i64]) -> Vec<i64> {
        let dim = self.ambient.rank();
        (0..dim).map(|k| v.iter().zip(&self.simple_ambient).map(|(c, s)| c * s[k]).sum()).collect()
    }

    /// Gram matrix in the simple-root basis.
    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    /// All roots in simple-root coordinates, sorted by height then
    /// lexicographically.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.index.contains_key(v)
    }

    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        intmat::bilinear(&self.cartan, x, y)
    }

    pub fn height(v: &[i64]) -> i64 {
        v.iter().sum()
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = (usize, &Vec<i64>)> {
        self.roots.iter().enumerate().filter(|(_, r)| RootDatum::height(r) > 0)
    }

    /// `s_γ(x) = x − ⟨x, γ⟩ γ`.
    pub fn reflect(&self, root: &[i64], x: &[i64]) -> Vec<i64> {
        let c = self.inner(x, root);
        x.iter().zip(root).map(|(a, b)| a - c * b).collect()
    }

    /// Matrix of `s_γ` acting on column vectors in simple-root coordinates.
    pub fn reflection_matrix(&self, root: &[i64]) -> IntMatrix {
        let n = self.rank();
        let cols: Vec<Vec<i64>> = (0..n)
            .map(|j| {
                let mut e = vec![0; n];
                e[j] = 1;
                self.reflect(root, &e)
            })
            .collect();
        intmat::transpose(&cols)
    }

    pub fn simple_reflections(&self) -> Vec<IntMatrix> {
        self.simple.iter().map(|&i| self.reflection_matrix(&self.roots[i])).collect()
    }

    /// Whether `wᵀ C w = C`.
    pub fn preserves_form(&self, w: &IntMatrix) -> bool {
        intmat::mul(&intmat::mul(&intmat::transpose(w), &self.cartan), w) == self.cartan
    }

    pub fn discriminant_group(&self) -> Result<Vec<i64>> {
        intmat::smith_invariants(&self.cartan)
    }

    /// `Λ/2Λ` with the pairing mod 2 and `q(v) = ⟨v, v⟩/2 mod 2`.
    pub fn mod2_space(&self) -> Mod2Space {
        let n = self.rank();
        let gram = BitMatrix::from_int_rows(&self.cartan);
        let mut qbits = 0u32;
        for i in 0..n {
            if (self.cartan[i][i] / 2).rem_euclid(2) == 1 {
                qbits |= 1 << i;
            }
        }
        let space = F2QuadraticSpace::new(gram, BitVector::truncated(n, qbits))
            .expect("reduction of an even symmetric form is strictly alternating");
        let radical = space.radical();
        let nv_dim = n - radical.len();
        Mod2Space { space, radical, nv_dim }
    }

    /// Reduction of a root mod 2.
    pub fn root_class(&self, i: usize) -> BitVector {
        BitVector::from_ints(&self.roots[i])
    }

    /// A lattice vector (simple-root coordinates, entries in {0, 1}) lifting
    /// a class of `Λ/2Λ`.
    pub fn lift_class(&self, v: BitVector) -> Vec<i64> {
        (0..self.rank()).map(|i| i64::from(v.get(i))).collect()
    }
}

/// `V = Λ/2Λ` together with the radical of the pairing and `dim N_V`.
#[derive(Clone, Debug)]
pub struct Mod2Space {
    pub space: F2QuadraticSpace,
    pub radical: Vec<BitVector>,
    /// Dimension of the image of `V → V∨`.
    pub nv_dim: usize,
}

fn detect_type(cartan: &IntMatrix, root_count: usize) -> RootType {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    if n > 0 {
        seen[0] = true;
    }
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && cartan[i][j] != 0 {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    let other = RootType::Other { rank: n, roots: root_count };
    if n == 0 || seen.iter().any(|s| !s) {
        return other;
    }
    let candidates = [RootType::A(n), RootType::D(n), RootType::E6, RootType::E7, RootType::E8];
    candidates
        .into_iter()
        .find(|t| t.rank() == n && (n >= 4 || !matches!(t, RootType::D(_))) && t.root_count() == root_count)
        .unwrap_or(other)
}

/// Exact inverse of an integer matrix with determinant ±1.
pub fn unimodular_inverse(m: &IntMatrix) -> Result<IntMatrix> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&x| q_int(x)).collect()).collect();
    let mut inv: Vec<Vec<Q>> = (0..n).map(|r| (0..n).map(|c| if r == c { Q::one() } else { Q::zero() }).collect()).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for c in 0..n {
            a[col][c] = &a[col][c] / &p;
            inv[col][c] = &inv[col][c] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let (da, di) = (&f * &a[col][c], &f * &inv[col][c]);
                    a[r][c] -= da;
                    inv[r][c] -= di;
                }
            }
        }
    }
    inv.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| {
                    if x.is_integer() {
                        i64::try_from(x.to_integer()).map_err(|_| Error::SingularMatrix)
                    } else {
                        Err(Error::NotRootLattice("basis change is not unimodular"))
                    }
                })
                .collect()
        })
        .collect()
}

/// A permutation `p` with `a[p[i]][p[j]] = b[i][j]`, found by backtracking.
pub fn gram_equivalence(a: &IntMatrix, b: &IntMatrix) -> Option<Vec<usize>> {
    let n = a.len();
    if b.len() != n {
        return None;
    }
    let profile = |m: &IntMatrix, i: usize| {
        let mut row = m[i].clone();
        row.sort_unstable();
        (m[i][i], row)
    };
    let pa: Vec<_> = (0..n).map(|i| profile(a, i)).collect();
    let pb: Vec<_> = (0..n).map(|i| profile(b, i)).collect();
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(
        a: &IntMatrix,
        b: &IntMatrix,
        pa: &[(i64, Vec<i64>)],
        pb: &[(i64, Vec<i64>)],
        perm: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = perm.len();
        if i == a.len() {
            return true;
        }
        for cand in 0..a.len() {
            if used[cand] || pa[cand] != pb[i] {
                continue;
            }
            if perm.iter().enumerate().all(|(j, &pj)| a[cand][pj] == b[i][j]) {
                used[cand] = true;
                perm.push(cand);
                if go(a, b, pa, pb, perm, used) {
                    return true;
                }
                perm.pop();
                used[cand] = false;
            }
        }
        false
    }
    go(a, b, &pa, &pb, &mut perm, &mut used).then_some(perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: brute force over the coefficient box `[-k, k]ⁿ`.
    fn box_count(gram: &IntMatrix, k: i64) -> usize {
        let n = gram.len();
        let mut count = 0;
        let mut x = vec![-k; n];
        loop {
            if intmat::bilinear(gram, &x, &x) == 2 {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                x[i] += 1;
                if x[i] <= k {
                    break;
                }
                x[i] = -k;
                i += 1;
            }
        }
    }

    #[test]
    fn a2_roots_match_box_oracle() {
        let c = RootType::A(2).cartan().unwrap();
        assert_eq!(box_count(&c, 2), 6);
        let d = RootDatum::of_type(RootType::A(2)).unwrap();
        assert_eq!(d.roots().len(), 6);
        assert_eq!(d.root_type(), RootType::A(2));
    }

    #[test]
    fn e6_e7_roots_match_box_oracle() {
        // Highest-root coefficients are at most 3 (E6) and 4 (E7).
        assert_eq!(box_count(&RootType::E6.cartan().unwrap(), 3), 72);
        assert_eq!(RootDatum::of_type(RootType::E6).unwrap().roots().len(), 72);
        assert_eq!(box_count(&RootType::E7.cartan().unwrap(), 4), 126);
        assert_eq!(RootDatum::of_type(RootType::E7).unwrap().roots().len(), 126);
    }

    #[test]
    fn canonical_order_and_simple_roots() {
        let d = RootDatum::of_type(RootType::E6).unwrap();
        for w in d.roots().windows(2) {
            assert_eq!(height_lex(&w[0], &w[1]), Ordering::Less);
        }
        for (i, &s) in d.simple_indices().iter().enumerate() {
            let mut e = vec![0; 6];
            e[i] = 1;
            assert_eq!(d.roots()[s], e);
        }
        assert_eq!(d.cartan(), &RootType::E6.cartan().unwrap());
        // Highest root of E6 is (1,2,2,3,2,1).
        assert_eq!(d.roots().last().unwrap(), &vec![1, 2, 2, 3, 2, 1]);
    }

    #[test]
    fn discriminant_groups() {
        let disc = |t: RootType| IntLattice::of_type(t).unwrap().discriminant_group().unwrap();
        assert_eq!(disc(RootType::E6), vec![3]);
        assert_eq!(disc(RootType::E7), vec![2]);
        assert_eq!(disc(RootType::E8), Vec::<i64>::new());
        assert_eq!(disc(RootType::A(2)), vec![3]);
        assert_eq!(disc(RootType::D(4)), vec![2, 2]);
    }

    #[test]
    fn reflection_stability() {
        for t in [RootType::A(3), RootType::D(5), RootType::E6, RootType::E7] {
            let d = RootDatum::of_type(t).unwrap();
            for g in d.roots() {
                for x in d.roots() {
                    assert!(d.is_root(&d.reflect(g, x)));
                }
                let s = d.reflection_matrix(g);
                assert!(d.preserves_form(&s));
                assert_eq!(intmat::mul(&s, &s), intmat::identity(d.rank()));
            }
        }
    }

    #[test]
    fn mod2_spaces() {
        let e6 = RootDatum::of_type(RootType::E6).unwrap().mod2_space();
        assert_eq!((e6.space.dim(), e6.radical.len(), e6.nv_dim), (6, 0, 6));
        let e7 = RootDatum::of_type(RootType::E7).unwrap();
        let m = e7.mod2_space();
        assert_eq!((m.space.dim(), m.radical.len(), m.nv_dim), (7, 1, 6));
        for i in 0..e7.roots().len() {
            assert!(m.space.q(e7.root_class(i)));
        }
    }

    #[test]
    fn rejects_bad_lattices() {
        let indefinite = IntLattice::new(vec![vec![2, 3], vec![3, 2]]).unwrap();
        assert!(matches!(indefinite.enumerate_roots(), Err(Error::NotPositiveDefinite)));
        let no_roots = IntLattice::new(vec![vec![4, 0], vec![0, 2]]).unwrap();
        assert!(matches!(no_roots.enumerate_roots(), Err(Error::NotRootLattice(_))));
        // Index-2 overlattice situation: 2·A1 ⊕ A1 spanned by (1,0),(0,1) with norms 8 and 2.
        let scaled = IntLattice::new(vec![vec![8, 0], vec![0, 2]]).unwrap();
        assert!(scaled.enumerate_roots().is_err());
        let odd = IntLattice::new(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert!(odd.enumerate_roots().is_err());
    }

    #[test]
    fn nonstandard_basis_of_a2() {
        // A2 in the basis (α₁, α₁ + α₂).
        let lattice = IntLattice::new(vec![vec![2, 1], vec![1, 2]]).unwrap();
        let d = lattice.enumerate_roots().unwrap();
        assert_eq!(d.roots().len(), 6);
        assert_eq!(d.root_type(), RootType::A(2));
        assert!(gram_equivalence(d.cartan(), &RootType::A(2).cartan().unwrap()).is_some());
    }

    #[test]
    fn parse_types() {
        assert_eq!(RootType::parse("E7").unwrap(), RootType::E7);
        assert_eq!(RootType::parse("a_2").unwrap(), RootType::A(2));
        assert_eq!(RootType::parse("D4").unwrap(), RootType::D(4));
        assert!(RootType::parse("E9").is_err());
        assert!(RootType::parse("D3").is_err());
        assert!(RootType::parse("G2").is_err());
    }
}
