//! Tiny dense 6×6 helpers for the Kirillov blocks.

use crate::scalar::Real;

pub type Mat6<T> = [[T; 6]; 6];

pub fn zeros6<T: Real>() -> Mat6<T> {
    [[T::zero(); 6]; 6]
}

pub fn identity6<T: Real>() -> Mat6<T> {
    let mut m = zeros6();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = T::one();
    }
    m
}

pub fn matmul6<T: Real>(a: &Mat6<T>, b: &Mat6<T>) -> Mat6<T> {
    let mut out = zeros6();
    for i in 0..6 {
        for j in 0..6 {
            out[i][j] = (0..6).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn transpose6<T: Real>(a: &Mat6<T>) -> Mat6<T> {
    let mut out = zeros6();
    for i in 0..6 {
        for j in 0..6 {
            out[i][j] = a[j][i];
        }
    }
    out
}

pub fn scale6<T: Real>(a: &Mat6<T>, s: T) -> Mat6<T> {
    let mut out = *a;
    out.iter_mut().flatten().for_each(|x| *x *= s);
    out
}

pub fn max_abs_diff6<T: Real>(a: &Mat6<T>, b: &Mat6<T>) -> T {
    let mut worst = T::zero();
    for i in 0..6 {
        for j in 0..6 {
            worst = worst.max((a[i][j] - b[i][j]).abs());
        }
    }
    worst
}

/// Gauss–Jordan with partial pivoting. `None` when a pivot falls below
/// `pivot_tol` (absolute).
pub fn invert6<T: Real>(a: &Mat6<T>, pivot_tol: T) -> Option<Mat6<T>> {
    let mut m = *a;
    let mut inv = identity6();
    for col in 0..6 {
        let piv = (col..6)
            .max_by(|&i, &j| m[i][col].abs().partial_cmp(&m[j][col].abs()).unwrap())
            .unwrap();
        if !(m[piv][col].abs() > pivot_tol) {
            return None;
        }
        m.swap(col, piv);
        inv.swap(col, piv);
        let d = m[col][col];
        for k in 0..6 {
            m[col][k] /= d;
            inv[col][k] /= d;
        }
        for row in 0..6 {
            if row == col {
                continue;
            }
            let f = m[row][col];
            if f == T::zero() {
                continue;
            }
            for k in 0..6 {
                let (mc, ic) = (m[col][k], inv[col][k]);
                m[row][k] -= f * mc;
                inv[row][k] -= f * ic;
            }
        }
    }
    Some(inv)
}
