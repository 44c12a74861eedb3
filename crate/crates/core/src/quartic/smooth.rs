//! Smoothness of a quartic over `Q̄`.
//!
//! Singular points are searched for over small prime fields and lifted to
//! exact rational witnesses. Smoothness is certified by reduction modulo a
//! large prime `P`: if `F` has a singular point over `Q̄` then its reduction
//! has one over `F̄_P`, and the absence of common zeros of the partials over
//! `F̄_P` is decided with resultants and gcds after a generic change of
//! coordinates.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::modp::{self, ModPoly};
use super::QuarticCurve;
use crate::arith::{q_int, Q};
use crate::error::{Error, Result};

/// Large primes tried, in order, for the exact certificate.
pub const CERTIFICATE_PRIMES: [u64; 3] = [1_000_003, 1_000_033, 1_000_037];

/// Largest prime accepted for point enumeration.
const MAX_PROBE_PRIME: u64 = 1_000;

/// Number of singular points kept per prime.
const KEPT_POINTS: usize = 16;

/// Invertible coordinate changes tried for the certificate.
const CHARTS: [[[u64; 3]; 3]; 3] =
    [[[3, 1, 4], [1, 5, 9], [2, 6, 5]], [[7, 2, 11], [13, 1, 3], [5, 17, 1]], [[1, 19, 23], [29, 2, 31], [37, 41, 3]]];

/// What the probe concluded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SmoothnessVerdict {
    /// An exact rational point where `F` and its gradient vanish.
    Singular { witness: [Q; 3] },
    /// The reduction mod `prime` is smooth, hence so is the curve.
    Smooth { prime: u64 },
    /// No singular point over any probed `F_p`, but no certificate.
    ProbablySmooth { primes: Vec<u64> },
    /// Singular points mod `p` that did not lift, and no certificate.
    Inconclusive,
}

impl SmoothnessVerdict {
    /// True for `Smooth` and `ProbablySmooth`.
    pub fn passes(&self) -> bool {
        matches!(self, SmoothnessVerdict::Smooth { .. } | SmoothnessVerdict::ProbablySmooth { .. })
    }
}

/// Singular points of the reduction modulo one small prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeProbe {
    pub prime: u64,
    /// Normalized so the last nonzero coordinate is 1; at most 16 are kept.
    pub singular_points: Vec<[u64; 3]>,
    pub singular_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub verdict: SmoothnessVerdict,
    pub probes: Vec<PrimeProbe>,
    /// Certificate primes tried, with whether the certificate succeeded.
    pub certificates: Vec<(u64, bool)>,
}

fn projective_points(p: u64) -> impl Iterator<Item = [u64; 3]> {
    let affine = (0..p).flat_map(move |x| (0..p).map(move |y| [x, y, 1]));
    let infinity = (0..p).map(|x| [x, 1, 0]);
    affine.chain(infinity).chain(core::iter::once([1, 0, 0]))
}

fn centered(r: u64, p: u64) -> Q {
    let r = r as i64;
    let p = p as i64;
    q_int(if r > p / 2 { r - p } else { r })
}

fn normalize_witness(w: [Q; 3]) -> [Q; 3] {
    let last = w.iter().rev().find(|c| !c.is_zero()).cloned().unwrap_or_else(Q::one);
    w.map(|c| c / &last)
}

fn probe_prime(curve: &QuarticCurve, p: u64) -> Result<PrimeProbe> {
    if !modp::is_prime(p) {
        return Err(Error::BadPrime(p));
    }
    if p > MAX_PROBE_PRIME {
        return Err(Error::OutOfRange { what: "probe prime", value: p as i64 });
    }
    let f = ModPoly::reduce(curve.poly(), p).ok_or(Error::BadPrime(p))?;
    if f.is_zero() {
        return Err(Error::BadPrime(p));
    }
    let grad: Vec<ModPoly> =
        curve.poly().gradient().iter().map(|g| ModPoly::reduce(g, p).expect("denominators checked")).collect();
    let mut singular_points = Vec::new();
    let mut singular_count = 0;
    for pt in projective_points(p) {
        if f.eval(&pt) == 0 && grad.iter().all(|g| g.eval(&pt) == 0) {
            singular_count += 1;
            if singular_points.len() < KEPT_POINTS {
                singular_points.push(pt);
            }
        }
    }
    Ok(PrimeProbe { prime: p, singular_points, singular_count })
}

fn lift(curve: &QuarticCurve, probe: &PrimeProbe) -> Option<[Q; 3]> {
    probe.singular_points.iter().find_map(|pt| {
        let candidate = pt.map(|c| centered(c, probe.prime));
        curve.is_singular_at(&candidate).then(|| normalize_witness(candidate))
    })
}

fn apply(a: &[[u64; 3]; 3], x: &[u64; 3], p: u64) -> [u64; 3] {
    core::array::from_fn(|r| (0..3).fold(0, |acc, c| modp::add(acc, modp::mul(a[r][c], x[c], p), p)))
}

/// Whether the partials of `curve` have no common zero over `F̄_p`, checked
/// in the coordinates `x = A·x′`.
fn certify_with(grad: &[ModPoly], a: &[[u64; 3]; 3], p: u64) -> bool {
    let col = |k: usize| -> [u64; 3] { core::array::from_fn(|r| a[r][k]) };
    let (e0, e1, e2) = (col(0), col(1), col(2));

    // Chart z′ = 1: points (s, y, 1) ↦ u(s) + y·e1 with u(s) = s·e0 + e2.
    let samples: Vec<u64> = (0..12).collect();
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let mut common: Vec<u64> = Vec::new();
    for &(i, j) in &pairs {
        let values: Vec<u64> = samples
            .iter()
            .map(|&s| {
                let u: [u64; 3] = core::array::from_fn(|r| modp::add(modp::mul(s, e0[r], p), e2[r], p));
                let gi = grad[i].restrict(&u, &e1);
                let gj = grad[j].restrict(&u, &e1);
                modp::resultant(&gi, &gj, p)
            })
            .collect();
        let res = modp::interpolate(&samples, &values, p);
        common = modp::gcd(common, res, p);
    }
    if common.len() != 1 {
        return false;
    }

    // Line z′ = 0 away from (1:0:0): points (t:1:0) ↦ e1 + t·e0.
    let mut at_infinity: Vec<u64> = Vec::new();
    for g in grad {
        at_infinity = modp::gcd(at_infinity, g.restrict(&e1, &e0), p);
    }
    if at_infinity.len() != 1 {
        return false;
    }

    let corner = apply(a, &[1, 0, 0], p);
    grad.iter().any(|g| g.eval(&corner) != 0)
}

/// Exact certificate of smoothness modulo a large prime `p > 4`.
fn certify(curve: &QuarticCurve, p: u64) -> Option<bool> {
    let f = ModPoly::reduce(curve.poly(), p)?;
    if f.is_zero() {
        return None;
    }
    // Euler's relation 4F = xF_x + yF_y + zF_z makes the gradient alone decisive.
    let grad: Vec<ModPoly> = curve.poly().gradient().iter().map(|g| ModPoly::reduce(g, p)).collect::<Option<_>>()?;
    Some(CHARTS.iter().any(|a| certify_with(&grad, a, p)))
}

/// Searches for singular points mod each of `primes`, lifts any to exact
/// witnesses, and attempts the large-prime certificate.
pub fn smoothness_probe(curve: &QuarticCurve, primes: &[u64]) -> Result<ProbeReport> {
    let probes = primes.iter().map(|&p| probe_prime(curve, p)).collect::<Result<Vec<_>>>()?;
    if let Some(witness) = probes.iter().find_map(|pr| lift(curve, pr)) {
        return Ok(ProbeReport { verdict: SmoothnessVerdict::Singular { witness }, probes, certificates: vec![] });
    }
    let mut certificates = Vec::new();
    for &p in &CERTIFICATE_PRIMES {
        if let Some(ok) = certify(curve, p) {
            certificates.push((p, ok));
            if ok {
                return Ok(ProbeReport { verdict: SmoothnessVerdict::Smooth { prime: p }, probes, certificates });
            }
        }
    }
    let verdict = if probes.iter().all(|pr| pr.singular_count == 0) {
        SmoothnessVerdict::ProbablySmooth { primes: primes.to_vec() }
    } else {
        SmoothnessVerdict::Inconclusive
    };
    Ok(ProbeReport { verdict, probes, certificates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q_frac;
    use crate::quartic::{e6_family, E6Params, HomPoly};

    fn fermat() -> QuarticCurve {
        QuarticCurve::from_int_terms(&[(1, [4, 0, 0]), (1, [0, 4, 0]), (1, [0, 0, 4])]).unwrap()
    }

    #[test]
    fn cusp_has_rational_witness() {
        let c = e6_family(&E6Params::default());
        let report = smoothness_probe(&c, &[5, 7]).unwrap();
        let expected = [Q::zero(), Q::zero(), Q::one()];
        assert_eq!(report.verdict, SmoothnessVerdict::Singular { witness: expected });
        assert_eq!(report.probes[0].singular_points, vec![[0, 0, 1]]);
    }

    #[test]
    fn hyperflex_quartic_is_smooth() {
        // Y³Z − X⁴ − Z⁴
        let c = QuarticCurve::from_int_terms(&[(1, [0, 3, 1]), (-1, [4, 0, 0]), (-1, [0, 0, 4])]).unwrap();
        let report = smoothness_probe(&c, &[5, 7, 11]).unwrap();
        assert_eq!(report.verdict, SmoothnessVerdict::Smooth { prime: CERTIFICATE_PRIMES[0] });
        assert!(report.probes.iter().all(|pr| pr.singular_count == 0));
    }

    #[test]
    fn fermat_is_smooth_despite_bad_reduction_at_two() {
        let report = smoothness_probe(&fermat(), &[2, 3, 5]).unwrap();
        assert!(report.probes[0].singular_count > 0);
        assert!(matches!(report.verdict, SmoothnessVerdict::Smooth { .. }));
    }

    #[test]
    fn node_not_found_by_small_lift_still_blocks_certificate() {
        // (Y²Z − X³ − X²Z)·Z + (X⁴ + Y⁴): a perturbed cubic with a node at (0:0:1).
        let c = QuarticCurve::from_int_terms(&[(1, [0, 2, 2]), (-1, [3, 0, 1]), (-1, [2, 0, 2]), (1, [4, 0, 0]), (1, [0, 4, 0])])
            .unwrap();
        assert!(c.is_singular_at(&[Q::zero(), Q::zero(), Q::one()]));
        let report = smoothness_probe(&c, &[]).unwrap();
        assert!(report.certificates.iter().all(|&(_, ok)| !ok));
        assert_eq!(report.verdict, SmoothnessVerdict::ProbablySmooth { primes: vec![] });
        let report = smoothness_probe(&c, &[5]).unwrap();
        assert!(matches!(report.verdict, SmoothnessVerdict::Singular { .. }));
    }

    #[test]
    fn bad_primes() {
        let half =
            QuarticCurve::new(HomPoly::from_terms(4, [([4, 0, 0], q_frac(1, 7)), ([0, 4, 0], Q::one())]).unwrap()).unwrap();
        assert_eq!(smoothness_probe(&half, &[7]).unwrap_err(), Error::BadPrime(7));
        let seven = QuarticCurve::from_int_terms(&[(7, [4, 0, 0])]).unwrap();
        assert_eq!(smoothness_probe(&seven, &[7]).unwrap_err(), Error::BadPrime(7));
        assert_eq!(smoothness_probe(&fermat(), &[9]).unwrap_err(), Error::BadPrime(9));
    }
}
