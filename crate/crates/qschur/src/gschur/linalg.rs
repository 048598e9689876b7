//! Exact row reduction over an arbitrary field: reduced echelon bases of
//! subspaces, membership tests, nullspaces. Everything is dense; the ambient
//! dimensions here are tiny.

use crate::ring::Field;

/// A reduced echelon basis of a subspace of F^width. Every stored row has a
/// unit pivot and zeros in every other row's pivot column.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    width: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Adopt rows that are already reduced (unit pivots, cleared pivot
    /// columns); validated cheaply.
    pub fn from_reduced_rows(width: usize, rows: Vec<Vec<F>>, pivots: Vec<usize>) -> Self {
        assert_eq!(rows.len(), pivots.len());
        for (row, &p) in rows.iter().zip(&pivots) {
            assert_eq!(row.len(), width);
            assert!(row[p] == F::one());
            for &q in &pivots {
                if q != p {
                    assert!(row[q].is_zero());
                }
            }
        }
        Echelon {
            width,
            rows,
            pivots,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The canonical representative of v modulo the row space.
    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        assert_eq!(v.len(), self.width);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for k in 0..self.width {
                if !row[k].is_zero() {
                    v[k] = v[k].clone() - c.clone() * row[k].clone();
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| x.is_zero())
    }

    /// Add a vector to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv();
        let v: Vec<F> = v.into_iter().map(|x| x * inv.clone()).collect();
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for k in 0..self.width {
                if !v[k].is_zero() {
                    row[k] = row[k].clone() - c.clone() * v[k].clone();
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }
}

/// Rank of a list of vectors.
pub fn rank_of<F: Field>(width: usize, vectors: impl IntoIterator<Item = Vec<F>>) -> usize {
    let mut ech = Echelon::new(width);
    for v in vectors {
        ech.insert(v);
    }
    ech.rank()
}

/// A basis of { x : Mx = 0 } where the rows of M are the given constraints.
pub fn nullspace<F: Field>(width: usize, constraints: impl IntoIterator<Item = Vec<F>>) -> Vec<Vec<F>> {
    let mut ech = Echelon::new(width);
    for c in constraints {
        ech.insert(c);
    }
    let mut out = Vec::new();
    for j in 0..width {
        if ech.pivots().contains(&j) {
            continue;
        }
        let mut v = vec![F::zero(); width];
        v[j] = F::one();
        for (row, &p) in ech.rows().iter().zip(ech.pivots()) {
            v[p] = -row[j].clone();
        }
        out.push(v);
    }
    out
}
