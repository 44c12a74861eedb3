//! Small dense integer matrices (row-major `Vec<Vec<i64>>`).

use alloc::vec::Vec;

use crate::error::{Error, Result};

pub type IntMatrix = Vec<Vec<i64>>;

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|r| (0..n).map(|c| i64::from(r == c)).collect()).collect()
}

pub fn mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "incompatible shapes");
            (0..cols).map(|c| (0..inner).map(|k| row[k] * b[k][c]).sum()).collect()
        })
        .collect()
}

pub fn mul_vec(a: &IntMatrix, v: &[i64]) -> Vec<i64> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

pub fn transpose(a: &IntMatrix) -> IntMatrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|c| a.iter().map(|row| row[c]).collect()).collect()
}

pub fn trace(a: &IntMatrix) -> i64 {
    (0..a.len()).map(|i| a[i][i]).sum()
}

/// `xᵀ G y`.
pub fn bilinear(g: &IntMatrix, x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(g).map(|(xi, row)| xi * row.iter().zip(y).map(|(a, b)| a * b).sum::<i64>()).sum()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(a: &IntMatrix) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else { return 0 };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Invariant factors (> 1 and the zeros excluded) of the Smith normal form;
/// `Err(SingularMatrix)` when the matrix is singular.
pub fn smith_invariants(a: &IntMatrix) -> Result<Vec<i64>> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::SingularMatrix);
    }
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        // Bring the smallest nonzero entry of the trailing block to (t, t)
        // and clear its row and column; repeat until it divides everything.
        loop {
            let mut best: Option<(usize, usize)> = None;
            for r in t..n {
                for c in t..n {
                    if m[r][c] != 0 && best.is_none_or(|(br, bc)| m[r][c].abs() < m[br][bc].abs()) {
                        best = Some((r, c));
                    }
                }
            }
            let Some((br, bc)) = best else { return Err(Error::SingularMatrix) };
            m.swap(t, br);
            for row in m.iter_mut() {
                row.swap(t, bc);
            }
            let p = m[t][t];
            let mut dirty = false;
            for r in t + 1..n {
                let q = m[r][t] / p;
                if q != 0 {
                    for c in t..n {
                        m[r][c] -= q * m[t][c];
                    }
                }
                dirty |= m[r][t] != 0;
            }
            for c in t + 1..n {
                let q = m[t][c] / p;
                if q != 0 {
                    for r in t..n {
                        m[r][c] -= q * m[r][t];
                    }
                }
                dirty |= m[t][c] != 0;
            }
            if dirty {
                continue;
            }
            // Divisibility of the remaining block.
            let bad = (t + 1..n).flat_map(|r| (t + 1..n).map(move |c| (r, c))).find(|&(r, c)| m[r][c] % p != 0);
            match bad {
                Some((r, _)) => {
                    for c in t..n {
                        m[t][c] += m[r][c];
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
    }
    Ok(diag.into_iter().filter(|&d| d > 1).map(|d| d as i64).collect())
}

/// A ℤ-basis of `{x ∈ ℤⁿ : Ax = 0}` computed with unimodular column operations.
pub fn integer_kernel(a: &IntMatrix, ncols: usize) -> IntMatrix {
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..ncols).map(|r| (0..ncols).map(|c| i128::from(r == c)).collect()).collect();
    let mut p = 0;
    for r in 0..m.len() {
        if p == ncols {
            break;
        }
        for c in p + 1..ncols {
            let (x, y) = (m[r][p], m[r][c]);
            if y == 0 {
                continue;
            }
            let (g, s, t) = ext_gcd(x, y);
            let (xa, ya) = (x / g, y / g);
            // (col p, col c) <- (s·p + t·c, −ya·p + xa·c), determinant 1.
            let apply = |rows: &mut Vec<Vec<i128>>| {
                for row in rows.iter_mut() {
                    let (cp, cc) = (row[p], row[c]);
                    row[p] = s * cp + t * cc;
                    row[c] = -ya * cp + xa * cc;
                }
            };
            apply(&mut m);
            apply(&mut u);
        }
        if m[r][p] != 0 {
            p += 1;
        }
    }
    (p..ncols).map(|c| u.iter().map(|row| row[c] as i64).collect()).collect()
}

/// Size-reduces a lattice basis (columns given as rows here) by repeated
/// pairwise reduction against a positive-definite form, yielding short,
/// human-readable basis vectors. The span is unchanged.
pub fn size_reduce(basis: &mut [Vec<i64>], form: &IntMatrix) {
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                let bij = bilinear(form, &basis[i], &basis[j]);
                let bjj = bilinear(form, &basis[j], &basis[j]);
                if bjj == 0 {
                    continue;
                }
                // Nearest integer to bij / bjj.
                let q = (2 * bij + bjj).div_euclid(2 * bjj);
                if q != 0 && 2 * bij.abs() > bjj {
                    let bj = basis[j].clone();
                    for (x, y) in basis[i].iter_mut().zip(&bj) {
                        *x -= q * y;
                    }
                    changed = true;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_determinants() {
        assert_eq!(det(&vec![vec![2, -1], vec![-1, 2]]), 3);
        assert_eq!(det(&vec![vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det(&vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]), -3);
    }

    #[test]
    fn smith_of_small_matrices() {
        assert_eq!(smith_invariants(&vec![vec![2, -1], vec![-1, 2]]).unwrap(), vec![3]);
        assert_eq!(smith_invariants(&vec![vec![2, 0], vec![0, 4]]).unwrap(), vec![2, 4]);
        assert_eq!(smith_invariants(&vec![vec![6, 0], vec![0, 4]]).unwrap(), vec![2, 12]);
        assert_eq!(smith_invariants(&vec![vec![1, 1], vec![1, 1]]), Err(Error::SingularMatrix));
    }

    #[test]
    fn kernel_of_row() {
        let a = vec![vec![-3, -1, -1, -1]];
        let k = integer_kernel(&a, 4);
        assert_eq!(k.len(), 3);
        for v in &k {
            assert_eq!(mul_vec(&a, v), vec![0]);
        }
        // Unimodular completion: together with a preimage of 1 the kernel has index 1.
        let mut full = k.clone();
        full.push(vec![0, -1, 0, 0]);
        assert_eq!(det(&full).abs(), 1);
    }
}
