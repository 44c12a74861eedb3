//! Weyl group closure and the involution classes of `W(E6)`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{RootDatum, RootType};
use crate::arith::intmat::{self, IntMatrix};
use crate::error::{Error, Result};
use crate::f2::BitMatrix;

type Flat = Vec<i64>;

fn flatten(m: &IntMatrix) -> Flat {
    m.iter().flatten().copied().collect()
}

fn unflatten(f: &[i64], n: usize) -> IntMatrix {
    f.chunks(n).map(<[i64]>::to_vec).collect()
}

fn flat_mul(a: &[i64], b: &[i64], n: usize) -> Flat {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0 {
                for j in 0..n {
                    out[i * n + j] += x * b[k * n + j];
                }
            }
        }
    }
    out
}

/// Every element of the Weyl group, by breadth-first closure of the simple
/// reflections. Matrices act on column vectors in simple-root coordinates;
/// the identity comes first.
pub fn weyl_enumerate(datum: &RootDatum, cap: usize) -> Result<Vec<IntMatrix>> {
    let n = datum.rank();
    let gens: Vec<Flat> = datum.simple_reflections().iter().map(flatten).collect();
    let id = flatten(&intmat::identity(n));
    let mut seen: BTreeSet<Flat> = BTreeSet::new();
    let mut order: Vec<Flat> = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(w) = queue.pop_front() {
        for s in &gens {
            let sw = flat_mul(s, &w, n);
            if !seen.contains(&sw) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                seen.insert(sw.clone());
                queue.push_back(sw);
            }
        }
        order.push(w);
    }
    Ok(order.iter().map(|f| unflatten(f, n)).collect())
}

/// Conjugacy-class labels for involutions of `W(E6)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InvolutionLabel {
    Identity,
    S1,
    S1S2,
    S1S2S3,
    Tau,
}

impl InvolutionLabel {
    pub const ALL: [InvolutionLabel; 5] =
        [InvolutionLabel::Identity, InvolutionLabel::S1, InvolutionLabel::S1S2, InvolutionLabel::S1S2S3, InvolutionLabel::Tau];

    /// Dimension of the `−1` eigenspace.
    pub fn minus_dim(self) -> usize {
        match self {
            InvolutionLabel::Identity => 0,
            InvolutionLabel::S1 => 1,
            InvolutionLabel::S1S2 => 2,
            InvolutionLabel::S1S2S3 => 3,
            InvolutionLabel::Tau => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            InvolutionLabel::Identity => "1",
            InvolutionLabel::S1 => "s1",
            InvolutionLabel::S1S2 => "s1s2",
            InvolutionLabel::S1S2S3 => "s1s2s3",
            InvolutionLabel::Tau => "tau",
        }
    }
}

impl fmt::Display for InvolutionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One conjugacy class of elements of order dividing 2.
#[derive(Clone, Debug)]
pub struct WeylInvolutionClass {
    pub label: InvolutionLabel,
    pub representative: IntMatrix,
    pub trace: i64,
    /// Rank over F₂ of `1 + w`.
    pub mod2_rank: usize,
    /// Sorted list of all class members.
    pub members: Vec<IntMatrix>,
}

impl WeylInvolutionClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, w: &IntMatrix) -> bool {
        self.members.binary_search(w).is_ok()
    }
}

fn mod2_rank_one_plus(w: &IntMatrix) -> usize {
    let n = w.len();
    let m: IntMatrix = (0..n).map(|i| (0..n).map(|j| w[i][j] + i64::from(i == j)).collect()).collect();
    BitMatrix::from_int_rows(&m).rank()
}

fn require_e6(datum: &RootDatum) -> Result<()> {
    if datum.root_type() != RootType::E6 {
        return Err(Error::TypeMismatch { expected: "E6", found: format!("{}", datum.root_type()) });
    }
    Ok(())
}

fn product(ms: &[IntMatrix], n: usize) -> IntMatrix {
    ms.iter().fold(intmat::identity(n), |acc, m| intmat::mul(&acc, m))
}

/// `−1` on the `D4` spanned by `center` and three orthogonal `legs` that
/// each pair to `−1` with it, `+1` on the orthogonal complement. Built as the
/// product of the reflections in the legs and in the highest root.
pub fn minus_one_on_d4(datum: &RootDatum, center: &[i64], legs: [&[i64]; 3]) -> Result<IntMatrix> {
    let bad = || Error::VerificationFailed(String::from("not a D4 simple system"));
    for (k, a) in legs.iter().enumerate() {
        if datum.inner(a, center) != -1 {
            return Err(bad());
        }
        for b in &legs[k + 1..] {
            if datum.inner(a, b) != 0 {
                return Err(bad());
            }
        }
    }
    let highest: Vec<i64> = (0..center.len()).map(|i| legs[0][i] + legs[1][i] + legs[2][i] + 2 * center[i]).collect();
    let refl: Vec<IntMatrix> =
        legs.iter().map(|l| datum.reflection_matrix(l)).chain(core::iter::once(datum.reflection_matrix(&highest))).collect();
    let w = product(&refl, datum.rank());
    for r in legs.iter().copied().chain(core::iter::once(center)) {
        let image = intmat::mul_vec(&w, r);
        if image.iter().zip(r).any(|(x, y)| *x != -*y) {
            return Err(Error::VerificationFailed(String::from("D4 element is not -1 on its span")));
        }
    }
    Ok(w)
}

fn explicit_representative(datum: &RootDatum, label: InvolutionLabel) -> Result<IntMatrix> {
    let n = datum.rank();
    let simple: Vec<&Vec<i64>> = datum.simple_indices().iter().map(|&i| &datum.roots()[i]).collect();
    if label == InvolutionLabel::Tau {
        let cartan = datum.cartan();
        let center = (0..n)
            .find(|&i| (0..n).filter(|&j| j != i && cartan[i][j] != 0).count() == 3)
            .ok_or(Error::VerificationFailed(String::from("no branch node")))?;
        let legs: Vec<usize> = (0..n).filter(|&j| j != center && cartan[center][j] != 0).collect();
        return minus_one_on_d4(datum, simple[center], [simple[legs[0]], simple[legs[1]], simple[legs[2]]]);
    }
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..n {
        if chosen.len() == label.minus_dim() {
            break;
        }
        if chosen.iter().all(|&j| datum.cartan()[i][j] == 0) {
            chosen.push(i);
        }
    }
    if chosen.len() != label.minus_dim() {
        return Err(Error::VerificationFailed(String::from("too few orthogonal simple roots")));
    }
    let refl: Vec<IntMatrix> = chosen.iter().map(|&i| datum.reflection_matrix(simple[i])).collect();
    Ok(product(&refl, n))
}

/// Partitions the involutions of `W(E6)` (identity included) into
/// conjugacy classes and labels them. `group` must be the full enumeration
/// from [`weyl_enumerate`].
pub fn classify_involutions(datum: &RootDatum, group: &[IntMatrix]) -> Result<Vec<WeylInvolutionClass>> {
    require_e6(datum)?;
    let n = datum.rank();
    let id = intmat::identity(n);
    let gens = datum.simple_reflections();
    let involutions: BTreeSet<&IntMatrix> = group.iter().filter(|w| intmat::mul(w, w) == id).collect();
    let mut assigned: BTreeSet<IntMatrix> = BTreeSet::new();
    let mut by_label: BTreeMap<InvolutionLabel, WeylInvolutionClass> = BTreeMap::new();
    for &start in &involutions {
        if assigned.contains(start) {
            continue;
        }
        let mut members: BTreeSet<IntMatrix> = BTreeSet::new();
        let mut queue = VecDeque::new();
        members.insert(start.clone());
        queue.push_back(start.clone());
        while let Some(w) = queue.pop_front() {
            for s in &gens {
                let c = intmat::mul(&intmat::mul(s, &w), s);
                if members.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
        let trace = intmat::trace(start);
        let mod2_rank = mod2_rank_one_plus(start);
        let m = (n as i64 - trace) / 2;
        let label = InvolutionLabel::ALL
            .into_iter()
            .find(|l| l.minus_dim() as i64 == m)
            .ok_or_else(|| Error::VerificationFailed(format!("unexpected involution trace {trace}")))?;
        if by_label.contains_key(&label) {
            return Err(Error::VerificationFailed(format!("two classes share label {label}")));
        }
        for w in &members {
            if !involutions.contains(w) || intmat::trace(w) != trace || mod2_rank_one_plus(w) != mod2_rank {
                return Err(Error::VerificationFailed(String::from("class invariants are not constant")));
            }
        }
        assigned.extend(members.iter().cloned());
        let members: Vec<IntMatrix> = members.into_iter().collect();
        by_label.insert(label, WeylInvolutionClass { label, representative: start.clone(), trace, mod2_rank, members });
    }
    let mut classes = Vec::new();
    for label in InvolutionLabel::ALL {
        let mut class = by_label.remove(&label).ok_or_else(|| Error::VerificationFailed(format!("no class for {label}")))?;
        let rep = explicit_representative(datum, label)?;
        if !class.contains(&rep) {
            return Err(Error::VerificationFailed(format!("explicit {label} lies outside its class")));
        }
        class.representative = rep;
        classes.push(class);
    }
    Ok(classes)
}

/// Builds `−1` on every `D4` subsystem and checks that all of them lie in
/// the `τ` class and exhaust it. Returns the number of distinct elements
/// produced.
pub fn tau_class_independence(datum: &RootDatum, classes: &[WeylInvolutionClass]) -> Result<usize> {
    require_e6(datum)?;
    let tau = classes
        .iter()
        .find(|c| c.label == InvolutionLabel::Tau)
        .ok_or(Error::VerificationFailed(String::from("no tau class")))?;
    let roots = datum.roots();
    let mut produced: BTreeSet<IntMatrix> = BTreeSet::new();
    for c in roots {
        let nbrs: Vec<&Vec<i64>> = roots.iter().filter(|r| datum.inner(r, c) == -1).collect();
        for (i, a) in nbrs.iter().enumerate() {
            for (j, b) in nbrs.iter().enumerate().skip(i + 1) {
                if datum.inner(a, b) != 0 {
                    continue;
                }
                for d in &nbrs[j + 1..] {
                    if datum.inner(a, d) != 0 || datum.inner(b, d) != 0 {
                        continue;
                    }
                    let w = minus_one_on_d4(datum, c, [a, b, d])?;
                    if !produced.contains(&w) {
                        if !tau.contains(&w) {
                            return Err(Error::VerificationFailed(String::from("D4 element outside the tau class")));
                        }
                        produced.insert(w);
                    }
                }
            }
        }
    }
    if produced.len() != tau.size() {
        return Err(Error::VerificationFailed(format!(
            "D4 elements cover {} of {} tau-class members",
            produced.len(),
            tau.size()
        )));
    }
    Ok(produced.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        let a2 = RootDatum::of_type(RootType::A(2)).unwrap();
        let w = weyl_enumerate(&a2, 100).unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w[0], intmat::identity(2));
        let d4 = RootDatum::of_type(RootType::D(4)).unwrap();
        assert_eq!(weyl_enumerate(&d4, 10_000).unwrap().len(), 192);
        assert!(matches!(weyl_enumerate(&d4, 100), Err(Error::CapExceeded { cap: 100 })));
    }

    #[test]
    fn rejects_non_e6() {
        let a2 = RootDatum::of_type(RootType::A(2)).unwrap();
        let w = weyl_enumerate(&a2, 100).unwrap();
        assert!(matches!(classify_involutions(&a2, &w), Err(Error::TypeMismatch { .. })));
    }
}
