use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{q_int, Field, Q};

/// `re + im·i` with exact rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gaussian {
    pub re: Q,
    pub im: Q,
}

impl Gaussian {
    pub fn new(re: Q, im: Q) -> Self {
        Gaussian { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Gaussian { re: q_int(re), im: q_int(im) }
    }

    pub fn real(re: Q) -> Self {
        Gaussian { re, im: <Q as Zero>::zero() }
    }

    pub fn i() -> Self {
        Gaussian::from_ints(0, 1)
    }

    /// `iᵏ`.
    pub fn i_pow(k: u8) -> Self {
        match k % 4 {
            0 => Gaussian::from_ints(1, 0),
            1 => Gaussian::from_ints(0, 1),
            2 => Gaussian::from_ints(-1, 0),
            _ => Gaussian::from_ints(0, -1),
        }
    }

    pub fn conj(&self) -> Self {
        Gaussian { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn scale(&self, s: &Q) -> Self {
        Gaussian { re: &self.re * s, im: &self.im * s }
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (Zero::is_zero(&self.re), Zero::is_zero(&self.im)) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}i", self.re, sign, self.im.abs())
            }
        }
    }
}

impl Add for &Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: &Gaussian) -> Gaussian {
        Gaussian { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: &Gaussian) -> Gaussian {
        Gaussian { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: &Gaussian) -> Gaussian {
        Gaussian { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

impl Neg for &Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Field for Gaussian {
    fn zero() -> Self {
        Gaussian { re: <Q as Zero>::zero(), im: <Q as Zero>::zero() }
    }
    fn one() -> Self {
        Gaussian { re: <Q as One>::one(), im: <Q as Zero>::zero() }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        let norm = &self.re * &self.re + &self.im * &self.im;
        assert!(!Zero::is_zero(&norm), "inverse of zero");
        Gaussian { re: &self.re / &norm, im: -(&self.im / &norm) }
    }
}

/// Dense matrix of Gaussian rationals; equality is exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Gaussian>,
}

impl GaussianMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        GaussianMatrix { rows, cols, data: vec![<Gaussian as Field>::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = GaussianMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, <Gaussian as Field>::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Gaussian) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        GaussianMatrix { rows, cols, data }
    }

    /// Square matrix from rows of `(re, im)` integer pairs.
    pub fn from_int_pairs(rows: &[&[(i64, i64)]]) -> Self {
        let n = rows.len();
        let cols = rows.first().map_or(0, |r| r.len());
        GaussianMatrix::from_fn(n, cols, |r, c| Gaussian::from_ints(rows[r][c].0, rows[r][c].1))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Gaussian {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Gaussian) {
        self.data[r * self.cols + c] = value;
    }

    pub fn entries(&self) -> &[Gaussian] {
        &self.data
    }

    pub fn mul(&self, other: &GaussianMatrix) -> GaussianMatrix {
        assert_eq!(self.cols, other.rows, "incompatible shapes");
        let mut out = GaussianMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if Field::is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !Field::is_zero(b) {
                        let idx = r * out.cols + c;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &GaussianMatrix) -> GaussianMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        GaussianMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &GaussianMatrix) -> GaussianMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        GaussianMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, s: &Gaussian) -> GaussianMatrix {
        GaussianMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn scale_q(&self, s: &Q) -> GaussianMatrix {
        GaussianMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.scale(s)).collect() }
    }

    pub fn neg(&self) -> GaussianMatrix {
        GaussianMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    pub fn transpose(&self) -> GaussianMatrix {
        GaussianMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &GaussianMatrix) -> GaussianMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Gaussian {
        (0..self.rows.min(self.cols)).fold(<Gaussian as Field>::zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == GaussianMatrix::identity(self.rows)
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Gaussian {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = <Gaussian as Field>::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !Field::is_zero(&m[r * n + col])) else {
                return <Gaussian as Field>::zero();
            };
            if pivot != col {
                for c in 0..n {
                    m.swap(pivot * n + c, col * n + c);
                }
                det = -&det;
            }
            let p = m[col * n + col].clone();
            det = &det * &p;
            let p_inv = p.inv();
            for r in col + 1..n {
                let factor = &m[r * n + col] * &p_inv;
                if Field::is_zero(&factor) {
                    continue;
                }
                for c in col..n {
                    let sub = &factor * &m[col * n + c];
                    m[r * n + c] = &m[r * n + c] - &sub;
                }
            }
        }
        det
    }

    /// Inverse by Gauss–Jordan elimination, `None` if singular.
    pub fn inverse(&self) -> Option<GaussianMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = GaussianMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !Field::is_zero(a.get(r, col)))?;
            for c in 0..n {
                a.data.swap(pivot * n + c, col * n + c);
                inv.data.swap(pivot * n + c, col * n + c);
            }
            let p_inv = a.get(col, col).inv();
            for c in 0..n {
                a.data[col * n + c] = &a.data[col * n + c] * &p_inv;
                inv.data[col * n + c] = &inv.data[col * n + c] * &p_inv;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col).clone();
                if Field::is_zero(&factor) {
                    continue;
                }
                for c in 0..n {
                    let da = &factor * a.get(col, c);
                    let di = &factor * inv.get(col, c);
                    a.data[r * n + c] = &a.data[r * n + c] - &da;
                    inv.data[r * n + c] = &inv.data[r * n + c] - &di;
                }
            }
        }
        Some(inv)
    }
}

impl fmt::Display for GaussianMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        let i = Gaussian::i();
        assert_eq!(&i * &i, Gaussian::from_ints(-1, 0));
        assert_eq!(Gaussian::i_pow(3), Gaussian::from_ints(0, -1));
    }

    #[test]
    fn inverse_round_trip() {
        let m = GaussianMatrix::from_int_pairs(&[&[(1, 1), (2, 0)], &[(0, -1), (3, 2)]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(m.det(), Gaussian::from_ints(1, 7));
    }
}
