//! Division-free determinants over any commutative [`Coeff`] ring.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ring::Coeff;

/// Determinant of a square matrix given as rows.
///
/// Sizes up to 4 use cofactor expansion along the first row. Larger matrices
/// use Laplace expansion with memoized minors over column subsets, which
/// needs `O(n 2^n)` ring operations and never divides; the truncated Chow
/// rings used here have zero divisors, so elimination is not available.
pub fn det<C: Coeff>(rows: &[Vec<C>]) -> Result<C> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    for row in rows {
        if row.len() != n {
            return Err(Error::NotSquare {
                rows: n,
                cols: row.len(),
            });
        }
    }
    if n <= 4 {
        let cols: Vec<usize> = (0..n).collect();
        Ok(cofactor(rows, 0, &cols))
    } else {
        Ok(memoized_minors(rows))
    }
}

fn cofactor<C: Coeff>(rows: &[Vec<C>], row: usize, cols: &[usize]) -> C {
    if cols.len() == 1 {
        return rows[row][cols[0]].clone();
    }
    let mut acc = rows[row][cols[0]].zero_like();
    for (k, &c) in cols.iter().enumerate() {
        let entry = &rows[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry.mul(&cofactor(rows, row + 1, &rest));
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

fn memoized_minors<C: Coeff>(rows: &[Vec<C>]) -> C {
    let n = rows.len();
    // minors[mask] = det of the last popcount(mask) rows restricted to the columns in mask
    let mut minors: HashMap<u32, C> = HashMap::new();
    minors.insert(0, rows[0][0].one_like());
    for size in 1..=n {
        let row = n - size;
        let mut next = HashMap::new();
        for mask in (0u32..(1 << n)).filter(|m| m.count_ones() as usize == size) {
            let mut acc = rows[0][0].zero_like();
            let mut position = 0;
            for c in 0..n {
                if mask & (1 << c) == 0 {
                    continue;
                }
                let entry = &rows[row][c];
                if !entry.is_zero() {
                    let sub = &minors[&(mask & !(1 << c))];
                    let term = entry.mul(sub);
                    acc = if position % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
                position += 1;
            }
            next.insert(mask, acc);
        }
        minors = next;
    }
    minors.remove(&((1u32 << n) - 1)).expect("full minor")
}
