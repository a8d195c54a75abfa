//! Exact determinants: fraction-free elimination over the integers and
//! memoized minor expansion over polynomial entries.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::polynomials::SparsePoly;

/// Bareiss fraction-free elimination. Every division is exact.
///
/// The empty matrix has determinant 1.
pub fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &m[n - 1][n - 1]
}

/// Determinant of a matrix of polynomials by Laplace expansion along rows,
/// memoized on the set of columns already used.
pub fn poly_determinant(m: &[Vec<SparsePoly>]) -> SparsePoly {
    let n = m.len();
    assert!(n < 64, "minor expansion supports fewer than 64 rows");
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut memo: HashMap<u64, SparsePoly> = HashMap::new();
    minor(m, 0, &mut memo)
}

fn minor(m: &[Vec<SparsePoly>], used: u64, memo: &mut HashMap<u64, SparsePoly>) -> SparsePoly {
    let n = m.len();
    let row = used.count_ones() as usize;
    if row == n {
        return SparsePoly::one();
    }
    if let Some(v) = memo.get(&used) {
        return v.clone();
    }
    let mut acc = SparsePoly::zero();
    let mut position = 0;
    for col in 0..n {
        if used & (1 << col) != 0 {
            continue;
        }
        let entry = &m[row][col];
        if !entry.is_zero() {
            let sub = minor(m, used | (1 << col), memo);
            let term = entry * &sub;
            if position % 2 == 0 {
                acc += &term;
            } else {
                acc += &-&term;
            }
        }
        position += 1;
    }
    memo.insert(used, acc.clone());
    acc
}
