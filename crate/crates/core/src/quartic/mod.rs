//! Plane quartic normal forms with a marked point `P = (0:1:0)`, contact
//! orders of lines, and smoothness testing.

mod modp;
mod smooth;

pub use smooth::{smoothness_probe, PrimeProbe, ProbeReport, SmoothnessVerdict, CERTIFICATE_PRIMES};

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{q_int, Q};
use crate::error::{Error, Result};

/// Exponents of `X^a Y^b Z^c`.
pub type Exponent = [u32; 3];

/// A homogeneous polynomial in `X, Y, Z` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomPoly {
    degree: u32,
    terms: BTreeMap<Exponent, Q>,
}

impl HomPoly {
    pub fn zero(degree: u32) -> Self {
        HomPoly { degree, terms: BTreeMap::new() }
    }

    /// Sums the given terms; every exponent must have total `degree`.
    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (Exponent, Q)>) -> Result<Self> {
        let mut acc: BTreeMap<Exponent, Q> = BTreeMap::new();
        for (e, c) in terms {
            if e.iter().sum::<u32>() != degree {
                return Err(Error::OutOfRange { what: "monomial degree", value: i64::from(e.iter().sum::<u32>()) });
            }
            *acc.entry(e).or_insert_with(Q::zero) += c;
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(HomPoly { degree, terms: acc })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: Exponent) -> Q {
        self.terms.get(&e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, p: &[Q; 3]) -> Q {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut v = c.clone();
                for k in 0..3 {
                    for _ in 0..e[k] {
                        v *= &p[k];
                    }
                }
                v
            })
            .fold(Q::zero(), |a, b| a + b)
    }

    /// `∂/∂X`, `∂/∂Y` or `∂/∂Z` for `var` = 0, 1, 2.
    pub fn partial(&self, var: usize) -> HomPoly {
        let terms = self.terms.iter().filter(|(e, _)| e[var] > 0).map(|(e, c)| {
            let mut f = *e;
            f[var] -= 1;
            (f, c * q_int(i64::from(e[var])))
        });
        HomPoly { degree: self.degree.saturating_sub(1), terms: terms.collect() }
    }

    pub fn gradient(&self) -> [HomPoly; 3] {
        [self.partial(0), self.partial(1), self.partial(2)]
    }

    /// Coefficients (lowest power first) of `t ↦ F(p + t·q)`.
    pub fn restrict_to_line(&self, p: &[Q; 3], q: &[Q; 3]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.degree as usize + 1];
        for (e, c) in &self.terms {
            let mut poly = vec![c.clone()];
            for k in 0..3 {
                for _ in 0..e[k] {
                    // Multiply by (p_k + t q_k).
                    let mut next = vec![Q::zero(); poly.len() + 1];
                    for (i, a) in poly.iter().enumerate() {
                        next[i] += a * &p[k];
                        next[i + 1] += a * &q[k];
                    }
                    poly = next;
                }
            }
            for (o, a) in out.iter_mut().zip(poly) {
                *o += a;
            }
        }
        out
    }
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let monomial: Vec<String> = ["X", "Y", "Z"]
                .iter()
                .zip(e)
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { String::from(*v) } else { alloc::format!("{v}^{k}") })
                .collect();
            if !abs.is_one() || monomial.is_empty() {
                write!(f, "{abs}")?;
                if !monomial.is_empty() {
                    f.write_str("*")?;
                }
            }
            f.write_str(&monomial.join("*"))?;
        }
        Ok(())
    }
}

/// A nonzero homogeneous quartic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticCurve {
    poly: HomPoly,
}

impl QuarticCurve {
    pub fn new(poly: HomPoly) -> Result<Self> {
        if poly.degree() != 4 {
            return Err(Error::OutOfRange { what: "curve degree", value: i64::from(poly.degree()) });
        }
        if poly.is_zero() {
            return Err(Error::VerificationFailed(String::from("quartic is identically zero")));
        }
        Ok(QuarticCurve { poly })
    }

    /// From integer terms `(coefficient, [a, b, c])`.
    pub fn from_int_terms(terms: &[(i64, Exponent)]) -> Result<Self> {
        QuarticCurve::new(HomPoly::from_terms(4, terms.iter().map(|&(c, e)| (e, q_int(c))))?)
    }

    pub fn poly(&self) -> &HomPoly {
        &self.poly
    }

    pub fn contains(&self, p: &[Q; 3]) -> bool {
        self.poly.eval(p).is_zero()
    }

    /// Whether `F` and all partials vanish at `p` (a nonzero point).
    pub fn is_singular_at(&self, p: &[Q; 3]) -> bool {
        p.iter().any(|c| !c.is_zero()) && self.contains(p) && self.poly.gradient().iter().all(|g| g.eval(p).is_zero())
    }
}

impl fmt::Display for QuarticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Parameters `(p₂, p₁₀, p₈, p₁₄, p₆, p₁₂, p₁₈)` of the flex family.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct E7Params {
    pub p2: Q,
    pub p10: Q,
    pub p8: Q,
    pub p14: Q,
    pub p6: Q,
    pub p12: Q,
    pub p18: Q,
}

/// Parameters `(p₂, p₅, p₈, p₆, p₉, p₁₂)` of the hyperflex family.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct E6Params {
    pub p2: Q,
    pub p5: Q,
    pub p8: Q,
    pub p6: Q,
    pub p9: Q,
    pub p12: Q,
}

fn take<const N: usize>(values: &[Q]) -> Result<[Q; N]> {
    values.to_vec().try_into().map_err(|_| Error::DimensionMismatch { expected: N, found: values.len() })
}

impl E7Params {
    /// In the order `p₂, p₁₀, p₈, p₁₄, p₆, p₁₂, p₁₈`.
    pub fn from_slice(v: &[Q]) -> Result<Self> {
        let [p2, p10, p8, p14, p6, p12, p18] = take::<7>(v)?;
        Ok(E7Params { p2, p10, p8, p14, p6, p12, p18 })
    }

    pub fn to_vec(&self) -> Vec<Q> {
        vec![
            self.p2.clone(),
            self.p10.clone(),
            self.p8.clone(),
            self.p14.clone(),
            self.p6.clone(),
            self.p12.clone(),
            self.p18.clone(),
        ]
    }
}

impl E6Params {
    /// In the order `p₂, p₅, p₈, p₆, p₉, p₁₂`.
    pub fn from_slice(v: &[Q]) -> Result<Self> {
        let [p2, p5, p8, p6, p9, p12] = take::<6>(v)?;
        Ok(E6Params { p2, p5, p8, p6, p9, p12 })
    }

    pub fn to_vec(&self) -> Vec<Q> {
        vec![self.p2.clone(), self.p5.clone(), self.p8.clone(), self.p6.clone(), self.p9.clone(), self.p12.clone()]
    }
}

/// `Y³Z − X³Y − p₁₀X²Z² − X(p₂Y²Z + p₈YZ² + p₁₄Z³) − p₆Y²Z² − p₁₂YZ³ − p₁₈Z⁴`.
pub fn e7_family(p: &E7Params) -> QuarticCurve {
    let one = Q::one();
    let terms = [
        ([0, 3, 1], one.clone()),
        ([3, 1, 0], -one),
        ([2, 0, 2], -p.p10.clone()),
        ([1, 2, 1], -p.p2.clone()),
        ([1, 1, 2], -p.p8.clone()),
        ([1, 0, 3], -p.p14.clone()),
        ([0, 2, 2], -p.p6.clone()),
        ([0, 1, 3], -p.p12.clone()),
        ([0, 0, 4], -p.p18.clone()),
    ];
    QuarticCurve::new(HomPoly::from_terms(4, terms).expect("quartic monomials")).expect("Y^3 Z term is present")
}

/// `Y³Z − X⁴ − Y(p₂X²Z + p₅XZ² + p₈Z³) − p₆X²Z² − p₉XZ³ − p₁₂Z⁴`.
pub fn e6_family(p: &E6Params) -> QuarticCurve {
    let one = Q::one();
    let terms = [
        ([0, 3, 1], one.clone()),
        ([4, 0, 0], -one),
        ([2, 1, 1], -p.p2.clone()),
        ([1, 1, 2], -p.p5.clone()),
        ([0, 1, 3], -p.p8.clone()),
        ([2, 0, 2], -p.p6.clone()),
        ([1, 0, 3], -p.p9.clone()),
        ([0, 0, 4], -p.p12.clone()),
    ];
    QuarticCurve::new(HomPoly::from_terms(4, terms).expect("quartic monomials")).expect("Y^3 Z term is present")
}

/// Order of vanishing of a curve restricted to a line at a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContactOrder {
    Finite(u32),
    /// The line is a component of the curve.
    Infinite,
}

/// The marked point `(0:1:0)`.
pub fn marked_point() -> [Q; 3] {
    [Q::zero(), Q::one(), Q::zero()]
}

/// The line `Z = 0` as coefficients of `aX + bY + cZ`.
pub fn line_at_infinity() -> [Q; 3] {
    [Q::zero(), Q::zero(), Q::one()]
}

fn proportional(a: &[Q; 3], b: &[Q; 3]) -> bool {
    let cross = [&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]];
    cross.iter().all(Zero::is_zero)
}

/// Vanishing order at `t = 0` of `F(P + tQ)` for a second point `Q` on the
/// line `aX + bY + cZ = 0`.
pub fn tangent_contact_order(curve: &QuarticCurve, point: &[Q; 3], line: &[Q; 3]) -> Result<ContactOrder> {
    if point.iter().all(Zero::is_zero) || !curve.contains(point) {
        return Err(Error::PointNotOnCurve);
    }
    let on_line = (0..3).map(|k| &line[k] * &point[k]).fold(Q::zero(), |a, b| a + b);
    if line.iter().all(Zero::is_zero) || !on_line.is_zero() {
        return Err(Error::PointNotOnLine);
    }
    let [a, b, c] = line.clone();
    let candidates = [[b.clone(), -a.clone(), Q::zero()], [c.clone(), Q::zero(), -a], [Q::zero(), c, -b]];
    let other = candidates
        .into_iter()
        .find(|q| q.iter().any(|x| !x.is_zero()) && !proportional(q, point))
        .ok_or(Error::PointNotOnLine)?;
    let restricted = curve.poly().restrict_to_line(point, &other);
    Ok(restricted.iter().position(|c| !c.is_zero()).map_or(ContactOrder::Infinite, |k| ContactOrder::Finite(k as u32)))
}
