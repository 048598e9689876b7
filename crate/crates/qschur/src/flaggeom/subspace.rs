//! Subspaces of F_q^r as reduced row echelon bases, plus canonical
//! enumeration of all k-dimensional subspaces.

use super::field::PrimePowerField;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A subspace, stored as its reduced echelon basis (rows). Two subspaces are
/// equal iff the representations are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    pub cols: usize,
    pub rows: Vec<Vec<u8>>,
}

impl Subspace {
    pub fn zero(cols: usize) -> Self {
        Subspace { cols, rows: vec![] }
    }

    pub fn full(cols: usize) -> Self {
        let rows = (0..cols)
            .map(|i| {
                let mut v = vec![0u8; cols];
                v[i] = 1;
                v
            })
            .collect();
        Subspace { cols, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Span of the given vectors, in canonical form.
    pub fn span(cols: usize, vectors: Vec<Vec<u8>>, f: &PrimePowerField) -> Self {
        let mut rows = vectors;
        rref(&mut rows, f);
        Subspace { cols, rows }
    }

    /// Pivot columns of the echelon basis.
    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|&c| c != 0).unwrap())
            .collect()
    }

    pub fn contains_space(&self, other: &Subspace, f: &PrimePowerField) -> bool {
        let mut stacked = self.rows.clone();
        stacked.extend(other.rows.iter().cloned());
        rref(&mut stacked, f);
        stacked.len() == self.dim()
    }

    pub fn intersection_dim(&self, other: &Subspace, f: &PrimePowerField) -> usize {
        let mut stacked = self.rows.clone();
        stacked.extend(other.rows.iter().cloned());
        rref(&mut stacked, f);
        self.dim() + other.dim() - stacked.len()
    }
}

/// In-place reduced row echelon form; drops zero rows.
pub fn rref(rows: &mut Vec<Vec<u8>>, f: &PrimePowerField) {
    if rows.is_empty() {
        return;
    }
    let cols = rows[0].len();
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let inv = f.inv(rows[pivot_row][col]);
        for c in col..cols {
            rows[pivot_row][c] = f.mul(rows[pivot_row][c], inv);
        }
        for i in 0..rows.len() {
            if i != pivot_row && rows[i][col] != 0 {
                let factor = rows[i][col];
                for c in col..cols {
                    let t = f.mul(factor, rows[pivot_row][c]);
                    rows[i][c] = f.sub(rows[i][c], t);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
}

/// The Gaussian binomial [m over k] evaluated at the integer q.
pub fn gaussian_count(m: usize, k: usize, q: u64) -> BigInt {
    if k > m {
        return BigInt::zero();
    }
    // Pascal recurrence [m;k] = [m-1;k-1] + q^k [m-1;k], row by row.
    let q = BigInt::from(q);
    let mut row = vec![BigInt::one()];
    for _ in 1..=m {
        let mut next = vec![BigInt::one()];
        for j in 1..row.len() {
            next.push(&row[j - 1] + q.pow(j as u32) * &row[j]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row[k].clone()
}

/// All k-dimensional subspaces of F_q^r, each exactly once, by enumerating
/// pivot-column sets and free entries of the echelon form.
pub fn enumerate_subspaces(
    r: usize,
    k: usize,
    f: &PrimePowerField,
    budget: u128,
) -> Result<Vec<Subspace>> {
    if k > r {
        return Err(Error::BadParams(format!("k={} exceeds r={}", k, r)));
    }
    let count = gaussian_count(r, k, f.q);
    if count > BigInt::from(budget) {
        return Err(Error::BudgetExceeded {
            needed: num_traits::ToPrimitive::to_u128(&count).unwrap_or(u128::MAX),
            budget,
        });
    }
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        emit_for_pivots(r, &pivots, f, &mut out);
        // next k-combination of 0..r in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if pivots[i] + (k - i) < r {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
        if k == 0 {
            return Ok(out);
        }
    }
}

fn emit_for_pivots(r: usize, pivots: &[usize], f: &PrimePowerField, out: &mut Vec<Subspace>) {
    let k = pivots.len();
    // free positions: (row i, col j) with j > pivots[i] and j not a pivot
    let mut free = Vec::new();
    for (i, &p) in pivots.iter().enumerate() {
        for j in p + 1..r {
            if !pivots.contains(&j) {
                free.push((i, j));
            }
        }
    }
    let q = f.q;
    let total = q.pow(free.len() as u32);
    for mut code in 0..total {
        let mut rows = vec![vec![0u8; r]; k];
        for (i, &p) in pivots.iter().enumerate() {
            rows[i][p] = 1;
        }
        for &(i, j) in &free {
            rows[i][j] = (code % q) as u8;
            code /= q;
        }
        out.push(Subspace { cols: r, rows });
    }
}

/// All subspaces W with lower <= W <= upper and dim(W) = dim(lower) + d,
/// via d-dimensional subspaces of the quotient upper/lower.
pub fn subspaces_between(
    lower: &Subspace,
    upper: &Subspace,
    d: usize,
    f: &PrimePowerField,
    budget: u128,
) -> Result<Vec<Subspace>> {
    debug_assert!(upper.contains_space(lower, f));
    let qdim = upper.dim() - lower.dim();
    if d > qdim {
        return Ok(vec![]);
    }
    // Coordinates on the quotient: lower's rows extend to a basis of upper by
    // the rows of upper whose pivot is not a pivot of lower after reduction.
    let complement = quotient_basis(lower, upper, f);
    debug_assert_eq!(complement.len(), qdim);
    let mut out = Vec::new();
    for small in enumerate_subspaces(qdim, d, f, budget)? {
        let mut vectors = lower.rows.clone();
        for srow in &small.rows {
            let mut v = vec![0u8; lower.cols];
            for (t, &c) in srow.iter().enumerate() {
                if c != 0 {
                    for x in 0..lower.cols {
                        v[x] = f.add(v[x], f.mul(c, complement[t][x]));
                    }
                }
            }
            vectors.push(v);
        }
        out.push(Subspace::span(lower.cols, vectors, f));
    }
    Ok(out)
}

/// Rows of upper that complete lower's basis to a basis of upper.
fn quotient_basis(lower: &Subspace, upper: &Subspace, f: &PrimePowerField) -> Vec<Vec<u8>> {
    let mut basis = Vec::new();
    let mut span = lower.rows.clone();
    for row in &upper.rows {
        let mut trial = span.clone();
        trial.push(row.clone());
        rref(&mut trial, f);
        if trial.len() > span.len() {
            basis.push(row.clone());
            span = trial;
        }
    }
    basis
}
