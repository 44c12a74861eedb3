//! Arithmetic in `F_p` for word-sized primes: reduction of rationals,
//! univariate polynomials, resultants and interpolation.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::Q;

use super::{Exponent, HomPoly};

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[inline]
pub(crate) fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

#[inline]
pub(crate) fn add(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

#[inline]
pub(crate) fn sub(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b) % p
}

pub(crate) fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue.
pub(crate) fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow(a, p - 2, p)
}

fn reduce_int(n: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    (((n % &m) + &m) % &m).to_u64().expect("residue fits in u64")
}

/// `None` when `p` divides the denominator.
pub(crate) fn reduce(q: &Q, p: u64) -> Option<u64> {
    let d = reduce_int(q.denom(), p);
    if d == 0 {
        return None;
    }
    Some(mul(reduce_int(q.numer(), p), inv(d, p), p))
}

/// A homogeneous polynomial with coefficients in `F_p`.
#[derive(Clone, Debug)]
pub(crate) struct ModPoly {
    pub p: u64,
    pub degree: u32,
    pub terms: Vec<(Exponent, u64)>,
}

impl ModPoly {
    pub fn reduce(poly: &HomPoly, p: u64) -> Option<ModPoly> {
        let mut terms = Vec::new();
        for (e, c) in poly.terms() {
            let r = reduce(c, p)?;
            if r != 0 {
                terms.push((*e, r));
            }
        }
        Some(ModPoly { p, degree: poly.degree(), terms })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, x: &[u64; 3]) -> u64 {
        let p = self.p;
        self.terms.iter().fold(0, |acc, (e, c)| {
            let v = (0..3).fold(*c, |v, k| mul(v, pow(x[k], u64::from(e[k]), p), p));
            add(acc, v, p)
        })
    }

    /// Coefficients in `t` of the restriction to `u + t·v`, of formal length
    /// `degree + 1`.
    pub fn restrict(&self, u: &[u64; 3], v: &[u64; 3]) -> Vec<u64> {
        let p = self.p;
        let mut out = vec![0; self.degree as usize + 1];
        for (e, c) in &self.terms {
            let mut poly = vec![*c];
            for k in 0..3 {
                for _ in 0..e[k] {
                    let mut next = vec![0; poly.len() + 1];
                    for (i, &a) in poly.iter().enumerate() {
                        next[i] = add(next[i], mul(a, u[k], p), p);
                        next[i + 1] = add(next[i + 1], mul(a, v[k], p), p);
                    }
                    poly = next;
                }
            }
            for (o, a) in out.iter_mut().zip(poly) {
                *o = add(*o, a, p);
            }
        }
        out
    }
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Remainder of `a` by a nonzero trimmed `b`.
fn rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let lead_inv = inv(*b.last().expect("nonzero divisor"), p);
    a = trim(a);
    while a.len() >= b.len() {
        let shift = a.len() - b.len();
        let factor = mul(*a.last().expect("nonempty"), lead_inv, p);
        for (i, &bi) in b.iter().enumerate() {
            a[shift + i] = sub(a[shift + i], mul(factor, bi, p), p);
        }
        a = trim(a);
    }
    a
}

/// Monic gcd, lowest coefficient first; empty for `gcd(0, 0)`.
pub(crate) fn gcd(a: Vec<u64>, b: Vec<u64>, p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = rem(a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let li = inv(lead, p);
        a.iter_mut().for_each(|c| *c = mul(*c, li, p));
    }
    a
}

/// Determinant by elimination mod `p`.
fn det(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut d = 1;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if piv != col {
            m.swap(piv, col);
            d = sub(0, d, p);
        }
        d = mul(d, m[col][col], p);
        let pi = inv(m[col][col], p);
        for r in col + 1..n {
            let f = mul(m[r][col], pi, p);
            if f != 0 {
                for c in col..n {
                    m[r][c] = sub(m[r][c], mul(f, m[col][c], p), p);
                }
            }
        }
    }
    d
}

/// Sylvester resultant with formal degrees `a.len() − 1`, `b.len() − 1`.
pub(crate) fn resultant(a: &[u64], b: &[u64], p: u64) -> u64 {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    if size == 0 {
        return 1;
    }
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![0; size];
        for (i, &c) in a.iter().rev().enumerate() {
            row[shift + i] = c;
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![0; size];
        for (i, &c) in b.iter().rev().enumerate() {
            row[shift + i] = c;
        }
        rows.push(row);
    }
    det(rows, p)
}

/// The polynomial of degree `< xs.len()` through the given points.
pub(crate) fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; xs.len()];
    for (i, (&xi, &yi)) in xs.iter().zip(ys).enumerate() {
        if yi == 0 {
            continue;
        }
        let mut basis = vec![1u64];
        let mut denom = 1;
        for (j, &xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![0; basis.len() + 1];
            for (k, &c) in basis.iter().enumerate() {
                next[k + 1] = add(next[k + 1], c, p);
                next[k] = sub(next[k], mul(c, xj, p), p);
            }
            basis = next;
            denom = mul(denom, sub(xi, xj, p), p);
        }
        let scale = mul(yi, inv(denom, p), p);
        for (o, c) in out.iter_mut().zip(basis) {
            *o = add(*o, mul(c, scale, p), p);
        }
    }
    trim(out)
}
