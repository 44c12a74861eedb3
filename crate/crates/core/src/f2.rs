//! Bit-packed linear algebra over F₂.
//!
//! Vectors carry their dimension (at most [`MAX_DIM`]) and are stored in a
//! single word. A quadratic refinement is stored by its values on the
//! standard basis only; every other value is recovered by polarization,
//!
//! ```text
//! q(v) = Σᵢ qᵢ vᵢ + Σ_{i<j} ⟨eᵢ, eⱼ⟩ vᵢ vⱼ,
//! ```
//!
//! so the refinement identity `q(v+w) + q(v) + q(w) = ⟨v, w⟩` holds by
//! construction.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Add;

use crate::error::{Error, Result};

pub const MAX_DIM: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitVector {
    dim: u8,
    bits: u32,
}

impl BitVector {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "BitVector dimension {dim} > {MAX_DIM}");
        BitVector { dim: dim as u8, bits: 0 }
    }

    pub fn new(dim: usize, bits: u32) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge { dim, max: MAX_DIM });
        }
        if bits & !mask(dim) != 0 {
            return Err(Error::OutOfRange { what: "bit pattern", value: bits as i64 });
        }
        Ok(BitVector { dim: dim as u8, bits })
    }

    /// Keeps only the low `dim` bits of `bits`.
    pub fn truncated(dim: usize, bits: u32) -> Self {
        assert!(dim <= MAX_DIM);
        BitVector { dim: dim as u8, bits: bits & mask(dim) }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        assert!(i < dim && dim <= MAX_DIM);
        BitVector { dim: dim as u8, bits: 1 << i }
    }

    /// Reduction mod 2 of an integer vector.
    pub fn from_ints(coords: &[i64]) -> Self {
        let mut bits = 0u32;
        for (i, c) in coords.iter().enumerate() {
            if c.rem_euclid(2) == 1 {
                bits |= 1 << i;
            }
        }
        BitVector::truncated(coords.len(), bits)
    }

    pub fn dim(self) -> usize {
        self.dim as usize
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn get(self, i: usize) -> bool {
        (self.bits >> i) & 1 == 1
    }

    pub fn with(self, i: usize, value: bool) -> Self {
        assert!(i < self.dim());
        let bits = if value { self.bits | (1 << i) } else { self.bits & !(1 << i) };
        BitVector { bits, ..self }
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    /// Standard dot product `Σ vᵢwᵢ`.
    pub fn dot(self, other: BitVector) -> bool {
        debug_assert_eq!(self.dim, other.dim);
        (self.bits & other.bits).count_ones() & 1 == 1
    }

    pub fn ones(self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (0..self.dim()).filter(move |&i| (bits >> i) & 1 == 1)
    }

    /// All `2^dim` vectors in increasing bit order.
    pub fn all(dim: usize) -> impl Iterator<Item = BitVector> {
        assert!(dim <= MAX_DIM);
        (0..(1u32 << dim)).map(move |bits| BitVector { dim: dim as u8, bits })
    }
}

impl Add for BitVector {
    type Output = BitVector;

    fn add(self, rhs: BitVector) -> BitVector {
        debug_assert_eq!(self.dim, rhs.dim, "adding vectors of different dimension");
        BitVector { dim: self.dim, bits: self.bits ^ rhs.bits }
    }
}

fn mask(dim: usize) -> u32 {
    if dim >= 32 {
        u32::MAX
    } else {
        (1u32 << dim) - 1
    }
}

/// Row-packed F₂ matrix with at most 32 columns.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(cols <= 32, "BitMatrix supports at most 32 columns");
        BitMatrix { rows, cols, data: vec![0; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i] = 1 << i;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = BitMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.data[r] |= 1 << c;
                }
            }
        }
        m
    }

    /// Reduction mod 2 of an integer matrix given by rows.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        BitMatrix::from_fn(rows.len(), cols, |r, c| rows[r][c].rem_euclid(2) == 1)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[BitVector]) -> Self {
        let rows = cols.first().map_or(0, |v| v.dim());
        BitMatrix::from_fn(rows, cols.len(), |r, c| cols[c].get(r))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.data[r] >> c) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        if value {
            self.data[r] |= 1 << c;
        } else {
            self.data[r] &= !(1 << c);
        }
    }

    pub fn row_bits(&self, r: usize) -> u32 {
        self.data[r]
    }

    pub fn row(&self, r: usize) -> BitVector {
        BitVector::truncated(self.cols, self.data[r])
    }

    pub fn column(&self, c: usize) -> BitVector {
        let mut bits = 0;
        for r in 0..self.rows {
            if self.get(r, c) {
                bits |= 1 << r;
            }
        }
        BitVector::truncated(self.rows, bits)
    }

    pub fn mul_vec(&self, v: BitVector) -> BitVector {
        debug_assert_eq!(v.dim(), self.cols);
        let mut bits = 0;
        for r in 0..self.rows {
            if (self.data[r] & v.bits).count_ones() & 1 == 1 {
                bits |= 1 << r;
            }
        }
        BitVector::truncated(self.rows, bits)
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows, "incompatible matrix shapes");
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let mut acc = 0;
            for k in 0..self.cols {
                if self.get(r, k) {
                    acc ^= other.data[k];
                }
            }
            out.data[r] = acc;
        }
        out
    }

    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        BitMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a ^ b).collect() }
    }

    pub fn transpose(&self) -> BitMatrix {
        BitMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.rows.min(self.cols)).all(|i| !self.get(i, i))
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.data.clone();
        echelon_in_place(&mut rows)
    }

    /// A basis of `{x : Ax = 0}`.
    pub fn kernel(&self) -> Vec<BitVector> {
        assert!(self.cols <= MAX_DIM);
        let mut rows = self.data.clone();
        let rank = echelon_in_place(&mut rows);
        rows.truncate(rank);
        // After full reduction every pivot column appears in exactly one row.
        let pivots: Vec<usize> = rows.iter().map(|r| r.trailing_zeros() as usize).collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut bits = 1u32 << free;
            for (row, &p) in rows.iter().zip(&pivots) {
                if (row >> free) & 1 == 1 {
                    bits |= 1 << p;
                }
            }
            basis.push(BitVector::truncated(self.cols, bits));
        }
        basis
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<BitMatrix> {
        assert!(self.is_square() && self.cols <= 16);
        let n = self.rows;
        // Augment each row with the identity in the high half-word.
        let mut rows: Vec<u32> = (0..n).map(|r| self.data[r] | (1 << (16 + r))).collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| (rows[r] >> col) & 1 == 1)?;
            rows.swap(col, pivot);
            for r in 0..n {
                if r != col && (rows[r] >> col) & 1 == 1 {
                    rows[r] ^= rows[col];
                }
            }
        }
        let mut inv = BitMatrix::zeros(n, n);
        for r in 0..n {
            inv.data[r] = (rows[r] >> 16) & mask(n);
        }
        Some(inv)
    }
}

/// Reduced row echelon form on packed rows; returns the rank. Nonzero rows
/// are moved to the front, with pivots in increasing column order.
fn echelon_in_place(rows: &mut [u32]) -> usize {
    let mut rank = 0;
    for col in 0..32 {
        let Some(pivot) = (rank..rows.len()).find(|&r| (rows[r] >> col) & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r != rank && (rows[r] >> col) & 1 == 1 {
                rows[r] ^= rows[rank];
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// An echelon basis of the span of `vectors`.
pub fn span_basis(vectors: &[BitVector]) -> Vec<BitVector> {
    let Some(first) = vectors.first() else { return Vec::new() };
    let dim = first.dim();
    let mut rows: Vec<u32> = vectors.iter().map(|v| v.bits()).collect();
    let rank = echelon_in_place(&mut rows);
    rows[..rank].iter().map(|&b| BitVector::truncated(dim, b)).collect()
}

/// A hyperbolic-pair decomposition `V = ⊕ ⟨eᵢ, fᵢ⟩ ⊕ rad`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticDecomposition {
    pub pairs: Vec<(BitVector, BitVector)>,
    pub radical: Vec<BitVector>,
}

impl SymplecticDecomposition {
    /// All basis vectors: `e₁, f₁, …, e_g, f_g`, then the radical basis.
    pub fn basis(&self) -> Vec<BitVector> {
        let mut out: Vec<BitVector> = self.pairs.iter().flat_map(|&(e, f)| [e, f]).collect();
        out.extend_from_slice(&self.radical);
        out
    }
}

/// An F₂ space with a strictly alternating pairing and a quadratic refinement.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct F2QuadraticSpace {
    gram: BitMatrix,
    qbasis: BitVector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct H1Dims {
    pub dim_ker: usize,
    pub rank: usize,
    pub dim_h1: usize,
}

impl F2QuadraticSpace {
    pub fn new(gram: BitMatrix, qbasis: BitVector) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::InvalidPairing("gram matrix is not square"));
        }
        let dim = gram.rows();
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge { dim, max: MAX_DIM });
        }
        if !gram.is_symmetric() {
            return Err(Error::InvalidPairing("gram matrix is not symmetric"));
        }
        if !gram.has_zero_diagonal() {
            return Err(Error::InvalidPairing("pairing is not strictly alternating"));
        }
        if qbasis.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: qbasis.dim() });
        }
        Ok(F2QuadraticSpace { gram, qbasis })
    }

    /// The standard symplectic space of dimension `2g` with basis
    /// `e₁, …, e_g, f₁, …, f_g`, `⟨eᵢ, fᵢ⟩ = 1`, and the given basis values.
    pub fn hyperbolic(g: usize, qbasis: u32) -> Result<Self> {
        let dim = 2 * g;
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge { dim, max: MAX_DIM });
        }
        let gram = BitMatrix::from_fn(dim, dim, |r, c| r.abs_diff(c) == g);
        F2QuadraticSpace::new(gram, BitVector::new(dim, qbasis)?)
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &BitMatrix {
        &self.gram
    }

    pub fn qbasis(&self) -> BitVector {
        self.qbasis
    }

    pub fn with_qbasis(&self, qbasis: BitVector) -> Result<Self> {
        F2QuadraticSpace::new(self.gram.clone(), qbasis)
    }

    fn check_dim(&self, v: BitVector) -> Result<()> {
        if v.dim() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim(), found: v.dim() })
        }
    }

    pub fn pairing(&self, v: BitVector, w: BitVector) -> bool {
        self.gram.mul_vec(w).dot(v)
    }

    pub fn eval_q(&self, v: BitVector) -> Result<bool> {
        self.check_dim(v)?;
        Ok(self.q(v))
    }

    /// `q(v)` without the dimension check.
    pub fn q(&self, v: BitVector) -> bool {
        let mut acc = v.dot(self.qbasis);
        for i in v.ones() {
            // Strictly-upper part of row i restricted to v.
            let upper = self.gram.row_bits(i) & v.bits() & !((2u32 << i) - 1);
            acc ^= upper.count_ones() & 1 == 1;
        }
        acc
    }

    /// Basis of the radical `{v : ⟨v, ·⟩ = 0}`.
    pub fn radical(&self) -> Vec<BitVector> {
        self.gram.kernel()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.dim()
    }

    /// Greedy hyperbolic-pair peeling: take the first remaining basis vector
    /// with a non-orthogonal partner, pair it, and pass to the orthogonal
    /// complement of the pair.
    pub fn symplectic_basis(&self) -> SymplecticDecomposition {
        self.peel(false)
    }

    /// Symplectic decomposition in Arf normal form: every pair except
    /// possibly the last has `q(e) = q(f) = 0`, and the last pair has
    /// `q(e) = q(f)`.
    pub fn arf_normal_basis(&self) -> SymplecticDecomposition {
        self.peel(true)
    }

    fn peel(&self, normal_form: bool) -> SymplecticDecomposition {
        let dim = self.dim();
        let mut rest: Vec<BitVector> = (0..dim).map(|i| BitVector::unit(dim, i)).collect();
        let mut pairs = Vec::new();
        loop {
            let found = if normal_form { self.pick_singular(&rest) } else { self.pick_first(&rest) };
            let Some((e, mut f)) = found else { break };
            if normal_form && !self.q(e) && self.q(f) {
                f = f + e;
            }
            pairs.push((e, f));
            let projected: Vec<BitVector> = rest
                .iter()
                .map(|&x| {
                    let mut y = x;
                    if self.pairing(x, f) {
                        y = y + e;
                    }
                    if self.pairing(x, e) {
                        y = y + f;
                    }
                    y
                })
                .collect();
            rest = span_basis(&projected);
        }
        SymplecticDecomposition { pairs, radical: rest }
    }

    fn pick_first(&self, rest: &[BitVector]) -> Option<(BitVector, BitVector)> {
        rest.iter().find_map(|&e| rest.iter().find(|&&f| self.pairing(e, f)).map(|&f| (e, f)))
    }

    fn pick_singular(&self, rest: &[BitVector]) -> Option<(BitVector, BitVector)> {
        let dim = self.dim();
        let mut fallback = None;
        for combo in 1u32..(1 << rest.len()) {
            let e =
                rest.iter().enumerate().filter(|(i, _)| (combo >> i) & 1 == 1).fold(BitVector::zero(dim), |acc, (_, &v)| acc + v);
            let Some(&f) = rest.iter().find(|&&f| self.pairing(e, f)) else { continue };
            if !self.q(e) {
                return Some((e, f));
            }
            fallback.get_or_insert((e, f));
        }
        fallback
    }

    /// The Arf invariant `Σ q(eᵢ) q(fᵢ)` over a computed symplectic basis.
    pub fn arf(&self) -> Result<bool> {
        if self.dim() % 2 == 1 {
            return Err(Error::OddDimension(self.dim()));
        }
        let decomposition = self.symplectic_basis();
        if !decomposition.radical.is_empty() {
            return Err(Error::DegeneratePairing);
        }
        Ok(arf_of_pairs(self, &decomposition.pairs))
    }

    /// `(v + q)(w) = q(w) + ⟨v, w⟩`.
    pub fn translate(&self, v: BitVector) -> Result<Self> {
        self.check_dim(v)?;
        let shift = self.gram.mul_vec(v);
        Ok(F2QuadraticSpace { gram: self.gram.clone(), qbasis: self.qbasis + shift })
    }

    /// `|q⁻¹(0)|` by enumeration.
    pub fn zero_count(&self) -> u64 {
        BitVector::all(self.dim()).filter(|&v| !self.q(v)).count() as u64
    }

    /// Whether `q(wx) = q(x)` for all `x`.
    pub fn is_invariant_under(&self, w: &BitMatrix) -> bool {
        BitVector::all(self.dim()).all(|x| self.q(w.mul_vec(x)) == self.q(x))
    }

    /// Whether `⟨wx, wy⟩ = ⟨x, y⟩` for all `x, y`, i.e. `wᵀ G w = G`.
    pub fn preserves_pairing(&self, w: &BitMatrix) -> bool {
        w.transpose().mul(&self.gram).mul(w) == self.gram
    }

    /// Every quadratic refinement of the same pairing, i.e. all translates
    /// `q + v`, ordered by `v`.
    pub fn all_refinements(&self) -> impl Iterator<Item = F2QuadraticSpace> + '_ {
        BitVector::all(self.dim())
            .map(move |v| F2QuadraticSpace { gram: self.gram.clone(), qbasis: self.qbasis + self.gram.mul_vec(v) })
    }
}

fn arf_of_pairs(space: &F2QuadraticSpace, pairs: &[(BitVector, BitVector)]) -> bool {
    pairs.iter().fold(false, |acc, &(e, f)| acc ^ (space.q(e) & space.q(f)))
}

/// Counts the refinements of the standard `2g`-dimensional symplectic space
/// by Arf invariant, by brute force over all `2^{2g}` basis-value choices.
pub fn count_refinements_by_arf(g: usize) -> Result<(u64, u64)> {
    if !(1..=4).contains(&g) {
        return Err(Error::OutOfRange { what: "genus g (1..=4)", value: g as i64 });
    }
    let mut counts = (0u64, 0u64);
    for qbasis in 0..(1u32 << (2 * g)) {
        let space = F2QuadraticSpace::hyperbolic(g, qbasis)?;
        if space.arf()? {
            counts.1 += 1;
        } else {
            counts.0 += 1;
        }
    }
    Ok(counts)
}

/// Dimensions of `ker N`, `im N` and `ker N / im N` for `N = 1 + w` over
/// F₂, where `w` is an involution mod 2.
pub fn h1_z2_dims(w: &BitMatrix) -> Result<H1Dims> {
    if !w.is_square() {
        return Err(Error::NotInvolution);
    }
    let n = w.rows();
    if n > MAX_DIM {
        return Err(Error::DimensionTooLarge { dim: n, max: MAX_DIM });
    }
    let id = BitMatrix::identity(n);
    if w.mul(w) != id {
        return Err(Error::NotInvolution);
    }
    let norm = id.add(w);
    let rank = norm.rank();
    let dim_ker = n - rank;
    Ok(H1Dims { dim_ker, rank, dim_h1: dim_ker - rank })
}

/// The symplectic transvection `x ↦ x + ⟨x, v⟩ v`.
pub fn transvection(space: &F2QuadraticSpace, v: BitVector) -> BitMatrix {
    let dim = space.dim();
    let cols: Vec<BitVector> = (0..dim)
        .map(|i| {
            let e = BitVector::unit(dim, i);
            if space.pairing(e, v) {
                e + v
            } else {
                e
            }
        })
        .collect();
    BitMatrix::from_columns(&cols)
}
