//! The involution `θ`, its fixed algebra `g`, and the adjoint action of
//! characters of `V`.

use alloc::format;
use alloc::vec::Vec;

use super::table::{normalize, rational_det, BracketTable, Sparse};
use super::LieAlgebra;
use crate::arith::Q;
use crate::error::{Error, Result};
use crate::f2::BitVector;

/// A signed permutation of the basis: `eᵢ ↦ sᵢ·e_{π(i)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    images: Vec<(usize, i64)>,
}

impl Involution {
    pub fn image(&self, i: usize) -> (usize, i64) {
        self.images[i]
    }

    pub fn apply(&self, x: &[(usize, i64)]) -> Sparse {
        normalize(x.iter().map(|&(i, c)| {
            let (j, s) = self.images[i];
            (j, s * c)
        }))
    }

    pub fn trace(&self) -> i64 {
        self.images.iter().enumerate().filter(|(i, (j, _))| i == j).map(|(_, &(_, s))| s).sum()
    }

    /// `(i, π(i), sᵢ)` for every basis vector.
    pub fn triples(&self) -> Vec<(usize, usize, i64)> {
        self.images.iter().enumerate().map(|(i, &(j, s))| (i, j, s)).collect()
    }

    /// Dimensions of the `+1` and `−1` eigenspaces.
    pub fn eigenspace_dims(&self) -> (usize, usize) {
        let (mut plus, mut minus) = (0, 0);
        for (i, &(j, s)) in self.images.iter().enumerate() {
            if i == j {
                if s == 1 {
                    plus += 1;
                } else {
                    minus += 1;
                }
            } else if i < j {
                // A 2-cycle contributes one vector to each eigenspace.
                plus += 1;
                minus += 1;
            }
        }
        (plus, minus)
    }

    fn is_automorphism(&self, table: &BracketTable) -> bool {
        let n = table.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let (ti, si) = self.images[i];
                let (tj, sj) = self.images[j];
                let lhs = self.apply(table.basis_bracket(i, j));
                let rhs = normalize(table.basis_bracket(ti, tj).iter().map(|&(k, c)| (k, si * sj * c)));
                lhs == rhs
            })
        })
    }
}

/// `θ(h) = −h`, `θ(X_γ) = s·X_{−γ}` where `c(γ)⁻¹ = ε′·c(−γ)` and `s = −ε′`.
/// Verified to square to the identity and to be an automorphism.
pub fn build_theta(l: &LieAlgebra) -> Result<Involution> {
    let r = l.rank();
    let cocycle = l.cocycle();
    let mut images: Vec<(usize, i64)> = (0..r).map(|i| (i, -1)).collect();
    for (k, gamma) in l.datum().roots().iter().enumerate() {
        let neg: Vec<i64> = gamma.iter().map(|x| -x).collect();
        let target = l.root_vector(&neg).ok_or(Error::NotRootLattice("roots not closed under negation"))?;
        let inv = cocycle.inv(cocycle.canonical_lift(BitVector::from_ints(gamma)));
        debug_assert_eq!(inv.v, BitVector::from_ints(&neg));
        images.push((target, -inv.sign()));
        debug_assert_eq!(images.len(), r + k + 1);
    }
    let theta = Involution { images };
    for i in 0..theta.images.len() {
        let (j, s) = theta.images[i];
        let (back, t) = theta.images[j];
        if back != i || s * t != 1 {
            return Err(Error::VerificationFailed(format!("theta does not square to 1 at basis vector {i}")));
        }
    }
    if !theta.is_automorphism(l.table()) {
        return Err(Error::VerificationFailed(alloc::string::String::from("theta is not an automorphism")));
    }
    Ok(theta)
}

/// `g = L^θ` with basis `Z_γ = X_γ + θ(X_γ)` for the positive roots.
#[derive(Clone, Debug)]
pub struct FixedSubalgebra {
    /// Root indices (into the datum's root list) of the positive roots.
    positive: Vec<usize>,
    /// `Z_γ` written in the basis of `L`.
    elements: Vec<Sparse>,
    table: BracketTable,
}

impl FixedSubalgebra {
    pub fn dim(&self) -> usize {
        self.positive.len()
    }

    pub fn positive_roots(&self) -> &[usize] {
        &self.positive
    }

    pub fn element(&self, k: usize) -> &Sparse {
        &self.elements[k]
    }

    pub fn table(&self) -> &BracketTable {
        &self.table
    }

    pub fn killing_form(&self) -> (Vec<Vec<i64>>, Q) {
        let gram = self.table.killing_form();
        let det = rational_det(&gram);
        (gram, det)
    }
}

/// Builds `g`, checking `θ(Z) = Z` and closure of the span under brackets.
pub fn fixed_subalgebra(l: &LieAlgebra, theta: &Involution) -> Result<FixedSubalgebra> {
    let r = l.rank();
    let positive: Vec<usize> = l.datum().positive_roots().map(|(k, _)| k).collect();
    let mut z_index = alloc::collections::BTreeMap::new();
    let mut elements = Vec::with_capacity(positive.len());
    for (n, &k) in positive.iter().enumerate() {
        let x = [(r + k, 1)];
        let z = normalize(x.iter().copied().chain(theta.apply(&x)));
        if theta.apply(&z) != z {
            return Err(Error::VerificationFailed(format!("theta does not fix Z for root index {k}")));
        }
        z_index.insert(r + k, n);
        elements.push(z);
    }
    let mut closure_error = None;
    let table = BracketTable::from_fn(positive.len(), |a, b| {
        let br = l.bracket(&elements[a], &elements[b]);
        let coords: Sparse = normalize(br.iter().filter_map(|&(i, c)| z_index.get(&i).map(|&n| (n, c))));
        let rebuilt = normalize(coords.iter().flat_map(|&(n, c)| elements[n].iter().map(move |&(i, d)| (i, c * d))));
        if rebuilt != br && closure_error.is_none() {
            closure_error = Some((a, b));
        }
        coords
    });
    if let Some((a, b)) = closure_error {
        return Err(Error::VerificationFailed(format!("[Z_{a}, Z_{b}] leaves the fixed span")));
    }
    Ok(FixedSubalgebra { positive, elements, table })
}

/// Outcome of [`character_adjoint_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterReport {
    pub pairs_checked: u64,
    pub automorphism: bool,
    pub fixes_cartan: bool,
    pub commutes_with_theta: bool,
}

impl CharacterReport {
    pub fn passed(&self) -> bool {
        self.automorphism && self.fixes_cartan && self.commutes_with_theta
    }
}

/// The map `X_γ ↦ (−1)^{f(γ)} X_γ`, identity on the Cartan part, induced
/// by the character automorphism of `f`.
pub fn character_adjoint_check(l: &LieAlgebra, theta: &Involution, f: BitVector) -> Result<CharacterReport> {
    if f.dim() != l.rank() {
        return Err(Error::DimensionMismatch { expected: l.rank(), found: f.dim() });
    }
    let r = l.rank();
    let roots = l.datum().roots();
    let sign = |i: usize| if i >= r && f.dot(BitVector::from_ints(&roots[i - r])) { -1 } else { 1 };
    let map = Involution { images: (0..l.dim()).map(|i| (i, sign(i))).collect() };
    let n = l.dim();
    let automorphism = map.is_automorphism(l.table());
    let fixes_cartan = (0..r).all(|i| map.image(i) == (i, 1));
    let commutes_with_theta = (0..n).all(|i| {
        let x = [(i, 1)];
        map.apply(&theta.apply(&x)) == theta.apply(&map.apply(&x))
    });
    Ok(CharacterReport { pairs_checked: (n * n) as u64, automorphism, fixes_cartan, commutes_with_theta })
}
