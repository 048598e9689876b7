//! The index set Theta_r: n x n nonnegative integer matrices with entry sum r,
//! the codimension statistic d_A, and the combinatorial closure order.

use crate::error::{Error, Result};
use std::fmt;

/// An n x n matrix of nonnegative integers, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl ThetaMatrix {
    pub fn new(n: usize, entries: Vec<u32>) -> Result<Self> {
        if n < 1 || entries.len() != n * n {
            return Err(Error::BadParams(format!(
                "expected {} entries for an {0}x{0} matrix, got {}",
                n,
                entries.len()
            )));
        }
        Ok(ThetaMatrix { n, entries })
    }

    pub fn from_rows(rows: &[&[u32]]) -> Self {
        let n = rows.len();
        let entries: Vec<u32> = rows.iter().flat_map(|r| r.iter().cloned()).collect();
        ThetaMatrix::new(n, entries).unwrap()
    }

    pub fn diagonal(diag: &[u32]) -> Self {
        let n = diag.len();
        let mut entries = vec![0; n * n];
        for (i, &d) in diag.iter().enumerate() {
            entries[i * n + i] = d;
        }
        ThetaMatrix { n, entries }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry a_{ij} with 0-based indices.
    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, val: u32) {
        self.entries[i * self.n + j] = val;
    }

    pub fn total(&self) -> u32 {
        self.entries.iter().sum()
    }

    pub fn row_sums(&self) -> Vec<u32> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j)).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<u32> {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self.entry(i, j)).sum())
            .collect()
    }

    /// d_A = sum over pairs with i >= k and j < l of a_{ij} a_{kl}.
    pub fn codim_d(&self) -> u64 {
        let n = self.n;
        let mut total = 0u64;
        for i in 0..n {
            for j in 0..n {
                let a = self.entry(i, j) as u64;
                if a == 0 {
                    continue;
                }
                for k in 0..=i {
                    for l in (j + 1)..n {
                        total += a * self.entry(k, l) as u64;
                    }
                }
            }
        }
        total
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.entry(i, j) == 0))
    }

    /// If the off-diagonal support is a single entry at (i, i+1) or (i+1, i),
    /// return its 0-based position and value. Diagonal matrices return None;
    /// anything else is not generator shaped.
    pub fn generator_offdiag(&self) -> Result<Option<(usize, usize, u32)>> {
        let mut found = None;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && self.entry(i, j) > 0 {
                    if found.is_some() {
                        return Err(Error::BadParams(
                            "matrix has more than one off-diagonal entry".into(),
                        ));
                    }
                    found = Some((i, j, self.entry(i, j)));
                }
            }
        }
        if let Some((i, j, _)) = found {
            if i.abs_diff(j) != 1 {
                return Err(Error::BadParams(
                    "off-diagonal entry is not adjacent to the diagonal".into(),
                ));
            }
        }
        Ok(found)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entry(i, j);
            }
        }
        ThetaMatrix { n, entries }
    }

    /// Entrywise multiple ell * A.
    pub fn scale(&self, ell: u32) -> Self {
        ThetaMatrix {
            n: self.n,
            entries: self.entries.iter().map(|&e| e * ell).collect(),
        }
    }

    /// The matrix B with A = ell * B, if every entry is divisible.
    pub fn try_unscale(&self, ell: u32) -> Option<Self> {
        if ell == 0 {
            return None;
        }
        let mut entries = Vec::with_capacity(self.entries.len());
        for &e in &self.entries {
            if e % ell != 0 {
                return None;
            }
            entries.push(e / ell);
        }
        Some(ThetaMatrix {
            n: self.n,
            entries,
        })
    }

    /// Cache key: rows joined by '|', entries within a row by ','.
    pub fn key(&self) -> String {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.entry(i, j).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("|")
    }

    pub fn parse_key(key: &str) -> Result<Self> {
        let rows: Vec<&str> = key.split('|').collect();
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != n {
                return Err(Error::BadParams(format!("malformed matrix key {:?}", key)));
            }
            for cell in cells {
                entries.push(
                    cell.parse::<u32>()
                        .map_err(|_| Error::BadParams(format!("malformed matrix key {:?}", key)))?,
                );
            }
        }
        ThetaMatrix::new(n, entries)
    }
}

impl fmt::Debug for ThetaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.key())
    }
}

/// The closure order B <= A on orbit matrices: equal marginals, and every
/// "upper right" partial sum of B is bounded by the one for A, together with
/// the symmetric lower-left condition. For n = 2 this is exactly b11 >= a11.
pub fn order_leq(b: &ThetaMatrix, a: &ThetaMatrix) -> bool {
    let n = a.n();
    if b.n() != n || b.row_sums() != a.row_sums() || b.col_sums() != a.col_sums() {
        return false;
    }
    let corner = |m: &ThetaMatrix, s: usize, t: usize, upper: bool| -> u32 {
        let mut sum = 0;
        for i in 0..n {
            for j in 0..n {
                let hit = if upper {
                    i <= s && j >= t
                } else {
                    i >= s && j <= t
                };
                if hit {
                    sum += m.entry(i, j);
                }
            }
        }
        sum
    };
    for s in 0..n {
        for t in (s + 1)..n {
            if corner(b, s, t, true) > corner(a, s, t, true) {
                return false;
            }
            if corner(b, t, s, false) > corner(a, t, s, false) {
                return false;
            }
        }
    }
    true
}

/// All of Theta_r for the given n, in a fixed deterministic order.
pub fn theta_enumerate(n: usize, r: u32) -> Vec<ThetaMatrix> {
    let cells = n * n;
    let mut out = Vec::new();
    let mut current = vec![0u32; cells];
    fn rec(current: &mut Vec<u32>, pos: usize, remaining: u32, n: usize, out: &mut Vec<ThetaMatrix>) {
        if pos + 1 == current.len() {
            current[pos] = remaining;
            out.push(ThetaMatrix::new(n, current.clone()).unwrap());
            return;
        }
        for v in 0..=remaining {
            current[pos] = v;
            rec(current, pos + 1, remaining - v, n, out);
        }
        current[pos] = 0;
    }
    rec(&mut current, 0, r, n, &mut out);
    out.sort();
    out
}
