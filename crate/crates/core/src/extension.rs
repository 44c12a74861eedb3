//! The central extension `1 → {±1} → Ṽ → V → 1` attached to a quadratic
//! space, realized by the bilinear cocycle `β` with `β(v, v) = q(v)` and
//! `β(v, w) + β(w, v) = ⟨v, w⟩`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::f2::{BitMatrix, BitVector, F2QuadraticSpace};

/// An element `(ε, v)` of `Ṽ`, with `ε = −1` when `negative` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtElement {
    pub negative: bool,
    pub v: BitVector,
}

impl ExtElement {
    pub fn new(sign: i64, v: BitVector) -> Self {
        ExtElement { negative: sign < 0, v }
    }

    pub fn sign(self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn negate(self) -> Self {
        ExtElement { negative: !self.negative, v: self.v }
    }

    /// Whether this is `±1`.
    pub fn is_central_sign(self) -> bool {
        self.v.is_zero()
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.negative { '-' } else { '+' };
        write!(f, "({s}, {:0width$b})", self.v.bits(), width = self.v.dim())
    }
}

/// Upper-triangular cocycle: diagonal `q(eᵢ)`, strictly upper part the
/// pairing `⟨eᵢ, eⱼ⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    space: F2QuadraticSpace,
    beta: BitMatrix,
}

/// A root `λ ∈ Λ` together with a point of `Ṽ` over `λ mod 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootLift {
    pub lambda: Vec<i64>,
    pub ext: ExtElement,
}

impl RootLift {
    pub fn new(lambda: Vec<i64>, ext: ExtElement) -> Result<Self> {
        if BitVector::from_ints(&lambda) != ext.v {
            return Err(Error::VerificationFailed(alloc::string::String::from("lift does not lie over the root class")));
        }
        Ok(RootLift { lambda, ext })
    }

    /// `(λ, (+1, λ mod 2))`.
    pub fn canonical(lambda: &[i64]) -> Self {
        RootLift { lambda: lambda.to_vec(), ext: ExtElement::new(1, BitVector::from_ints(lambda)) }
    }
}

impl Cocycle {
    pub fn new(space: &F2QuadraticSpace) -> Self {
        let n = space.dim();
        let q = space.qbasis();
        let beta = BitMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            core::cmp::Ordering::Equal => q.get(i),
            core::cmp::Ordering::Less => space.gram().get(i, j),
            core::cmp::Ordering::Greater => false,
        });
        Cocycle { space: space.clone(), beta }
    }

    pub fn space(&self) -> &F2QuadraticSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.beta
    }

    /// `|Ṽ| = 2^{dim + 1}`.
    pub fn order(&self) -> u64 {
        1u64 << (self.dim() + 1)
    }

    pub fn beta(&self, v: BitVector, w: BitVector) -> bool {
        v.dot(self.beta.mul_vec(w))
    }

    pub fn identity(&self) -> ExtElement {
        ExtElement::new(1, BitVector::zero(self.dim()))
    }

    pub fn minus_one(&self) -> ExtElement {
        ExtElement::new(-1, BitVector::zero(self.dim()))
    }

    pub fn canonical_lift(&self, v: BitVector) -> ExtElement {
        ExtElement::new(1, v)
    }

    pub fn elements(&self) -> impl Iterator<Item = ExtElement> + '_ {
        BitVector::all(self.dim()).flat_map(|v| [ExtElement::new(1, v), ExtElement::new(-1, v)])
    }

    pub fn mul(&self, x: ExtElement, y: ExtElement) -> ExtElement {
        ExtElement { negative: x.negative ^ y.negative ^ self.beta(x.v, y.v), v: x.v + y.v }
    }

    pub fn checked_mul(&self, x: ExtElement, y: ExtElement) -> Result<ExtElement> {
        for e in [x, y] {
            if e.v.dim() != self.dim() {
                return Err(Error::DimensionMismatch { expected: self.dim(), found: e.v.dim() });
            }
        }
        Ok(self.mul(x, y))
    }

    /// `(ε, v)⁻¹ = (ε·(−1)^{q(v)}, v)`.
    pub fn inv(&self, x: ExtElement) -> ExtElement {
        ExtElement { negative: x.negative ^ self.space.q(x.v), v: x.v }
    }

    /// `x y x⁻¹ y⁻¹`.
    pub fn commutator(&self, x: ExtElement, y: ExtElement) -> ExtElement {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    /// Elements commuting with everything: `{±1}` times lifts of the radical.
    pub fn center(&self) -> Vec<ExtElement> {
        let gens: Vec<ExtElement> = (0..self.dim()).map(|i| self.canonical_lift(BitVector::unit(self.dim(), i))).collect();
        self.elements().filter(|&x| gens.iter().all(|&g| self.mul(x, g) == self.mul(g, x))).collect()
    }

    /// Exhaustive check of associativity, identity, inverses, squares and
    /// commutators. Intended for small dimensions.
    pub fn verify_group_law(&self) -> Result<()> {
        let fail =
            |what: &str, a: ExtElement, b: ExtElement| Err(Error::VerificationFailed(alloc::format!("{what} fails at {a}, {b}")));
        let all: Vec<ExtElement> = self.elements().collect();
        let one = self.identity();
        for &x in &all {
            if self.mul(x, one) != x || self.mul(one, x) != x || self.mul(x, self.inv(x)) != one {
                return fail("identity or inverse", x, x);
            }
            let sq = self.mul(x, x);
            if sq != ExtElement::new(if self.space.q(x.v) { -1 } else { 1 }, BitVector::zero(self.dim())) {
                return fail("square relation", x, x);
            }
            for &y in &all {
                let c = self.commutator(x, y);
                if c.v.is_zero().then_some(c.negative) != Some(self.space.pairing(x.v, y.v)) {
                    return fail("commutator relation", x, y);
                }
                let xy = self.mul(x, y);
                for &z in &all {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return fail("associativity", x, y);
                    }
                }
            }
        }
        Ok(())
    }
}

/// `(ε, v) ↦ (ε·(−1)^{s(v)}, w·v)` with `s(v) = Σ_{i≤j} Tᵢⱼ vᵢvⱼ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtAutomorphism {
    pub map: BitMatrix,
    /// Upper-triangular coefficients of the quadratic sign function.
    pub twist: BitMatrix,
}

impl ExtAutomorphism {
    pub fn identity(dim: usize) -> Self {
        ExtAutomorphism { map: BitMatrix::identity(dim), twist: BitMatrix::zeros(dim, dim) }
    }

    fn twist_from_fn(dim: usize, f: impl Fn(BitVector) -> bool) -> BitMatrix {
        let e = |i| BitVector::unit(dim, i);
        BitMatrix::from_fn(dim, dim, |i, j| match i.cmp(&j) {
            core::cmp::Ordering::Equal => f(e(i)),
            core::cmp::Ordering::Less => f(e(i) + e(j)) ^ f(e(i)) ^ f(e(j)),
            core::cmp::Ordering::Greater => false,
        })
    }

    pub fn sign_shift(&self, v: BitVector) -> bool {
        v.dot(self.twist.mul_vec(v))
    }

    pub fn apply(&self, x: ExtElement) -> ExtElement {
        ExtElement { negative: x.negative ^ self.sign_shift(x.v), v: self.map.mul_vec(x.v) }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ExtAutomorphism) -> ExtAutomorphism {
        let dim = self.map.rows();
        let twist = Self::twist_from_fn(dim, |v| other.sign_shift(v) ^ self.sign_shift(other.map.mul_vec(v)));
        ExtAutomorphism { map: self.map.mul(&other.map), twist }
    }

    /// The functional `f` when this is the character automorphism of `f`.
    pub fn as_character(&self) -> Option<BitVector> {
        let n = self.map.rows();
        let linear = (0..n).all(|i| (i + 1..n).all(|j| !self.twist.get(i, j)));
        (self.map == BitMatrix::identity(n) && linear)
            .then(|| (0..n).fold(BitVector::zero(n), |acc, i| acc.with(i, self.twist.get(i, i))))
    }

    /// Exhaustive homomorphism check on `Ṽ`.
    pub fn is_homomorphism(&self, cocycle: &Cocycle) -> bool {
        let all: Vec<ExtElement> = cocycle.elements().collect();
        all.iter().all(|&x| all.iter().all(|&y| self.apply(cocycle.mul(x, y)) == cocycle.mul(self.apply(x), self.apply(y))))
    }
}

/// `(ε, v) ↦ (ε·(−1)^{f(v)}, v)`.
pub fn character_automorphism(f: BitVector) -> ExtAutomorphism {
    let n = f.dim();
    ExtAutomorphism { map: BitMatrix::identity(n), twist: BitMatrix::from_fn(n, n, |i, j| i == j && f.get(i)) }
}

/// A lift of `w` (acting on `V` by columns) to an automorphism of `Ṽ`.
///
/// The sign function must satisfy `s(v + v′) + s(v) + s(v′) = δ(v, v′)` with
/// `δ(v, v′) = β(v, v′) + β(wv, wv′)`; when `w` preserves `q` the form `δ` is
/// symmetric with zero diagonal and `s(v) = Σ_{i<j} δ(eᵢ, eⱼ) vᵢvⱼ` works.
pub fn transport_automorphism(cocycle: &Cocycle, w: &BitMatrix) -> Result<ExtAutomorphism> {
    let space = cocycle.space();
    let n = cocycle.dim();
    if w.rows() != n || w.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: w.rows() });
    }
    if !space.preserves_pairing(w) || !space.is_invariant_under(w) {
        return Err(Error::NotPairingPreserving);
    }
    let e = |i| BitVector::unit(n, i);
    let delta = |i: usize, j: usize| cocycle.beta(e(i), e(j)) ^ cocycle.beta(w.mul_vec(e(i)), w.mul_vec(e(j)));
    let twist = BitMatrix::from_fn(n, n, |i, j| i < j && delta(i, j));
    Ok(ExtAutomorphism { map: w.clone(), twist })
}

/// Every automorphism of `Ṽ` fixing `±1` and inducing the identity on `V`,
/// found by trying all `2^{2^dim}` sign functions. Each is returned as its
/// truth table indexed by `v.bits()`.
pub fn brute_force_fixing_automorphisms(cocycle: &Cocycle) -> Result<Vec<Vec<bool>>> {
    let n = cocycle.dim();
    if n > 4 {
        return Err(Error::DimensionTooLarge { dim: n, max: 4 });
    }
    let size = 1usize << n;
    let all: Vec<ExtElement> = cocycle.elements().collect();
    let mut found = Vec::new();
    for table in 0u64..(1u64 << size) {
        let s = |v: BitVector| (table >> v.bits()) & 1 == 1;
        let apply = |x: ExtElement| ExtElement { negative: x.negative ^ s(x.v), v: x.v };
        let ok = all.iter().all(|&x| all.iter().all(|&y| apply(cocycle.mul(x, y)) == cocycle.mul(apply(x), apply(y))));
        if ok {
            found.push((0..size).map(|b| (table >> b) & 1 == 1).collect());
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e6_space() -> F2QuadraticSpace {
        let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
        let gram = BitMatrix::from_fn(6, 6, |i, j| edges.iter().any(|&(a, b)| (a, b) == (i, j) || (b, a) == (i, j)));
        F2QuadraticSpace::new(gram, BitVector::truncated(6, 0b111111)).unwrap()
    }

    #[test]
    fn e6_extension_basics() {
        let c = Cocycle::new(&e6_space());
        assert_eq!(c.order(), 128);
        assert_eq!(c.elements().count(), 128);
        assert_eq!(c.center(), vec![c.identity(), c.minus_one()]);
        let a1 = c.canonical_lift(BitVector::unit(6, 0));
        let a3 = c.canonical_lift(BitVector::unit(6, 2));
        assert_eq!(c.mul(a1, a1), c.minus_one());
        assert_eq!(c.inv(a1), a1.negate());
        assert_eq!(c.commutator(a1, a3), c.minus_one());
    }

    #[test]
    fn polarization() {
        let space = e6_space();
        let c = Cocycle::new(&space);
        for v in BitVector::all(6) {
            assert_eq!(c.beta(v, v), space.q(v));
            for w in BitVector::all(6) {
                assert_eq!(c.beta(v, w) ^ c.beta(w, v), space.pairing(v, w));
            }
        }
    }

    #[test]
    fn characters_compose_additively() {
        let c = Cocycle::new(&e6_space());
        let f = BitVector::truncated(6, 0b101100);
        let g = BitVector::truncated(6, 0b011010);
        let (af, ag) = (character_automorphism(f), character_automorphism(g));
        assert!(af.is_homomorphism(&c));
        assert_eq!(af.compose(&ag).as_character(), Some(f + g));
        assert_eq!(character_automorphism(BitVector::zero(6)), ExtAutomorphism::identity(6));
    }

    #[test]
    fn genus_one_fixing_automorphisms() {
        let space = F2QuadraticSpace::hyperbolic(1, 0b11).unwrap();
        let c = Cocycle::new(&space);
        assert_eq!(brute_force_fixing_automorphisms(&c).unwrap().len(), 4);
    }

    #[test]
    fn transport_rejects_non_isometries() {
        let space = e6_space();
        let c = Cocycle::new(&space);
        let mut w = BitMatrix::identity(6);
        w.set(0, 1, true);
        assert!(matches!(transport_automorphism(&c, &w), Err(Error::NotPairingPreserving)));
    }
}
