//! n-step flags in F_q^r, the orbit invariant of a pair of flags, and
//! canonical representative pairs for a prescribed invariant.

use super::field::PrimePowerField;
use super::subspace::{gaussian_count, subspaces_between, Subspace};
use crate::error::{Error, Result};
use crate::schur::ThetaMatrix;
use num_bigint::BigInt;
use num_traits::One;

/// A chain 0 = F_0 <= F_1 <= ... <= F_n = V. Only F_1..F_n are stored; each
/// step is in canonical echelon form, so flag equality is representation
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flag {
    pub steps: Vec<Subspace>,
}

impl Flag {
    pub fn new(steps: Vec<Subspace>, f: &PrimePowerField) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::BadParams("flag needs at least one step".into()));
        }
        let r = steps[0].cols;
        for w in steps.windows(2) {
            if !w[1].contains_space(&w[0], f) {
                return Err(Error::BadParams("flag steps are not nested".into()));
            }
        }
        if steps.last().unwrap().dim() != r {
            return Err(Error::BadParams("final flag step must be the whole space".into()));
        }
        Ok(Flag { steps })
    }

    pub fn n(&self) -> usize {
        self.steps.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.steps[0].cols
    }

    /// Step dimension increments (the flag type).
    pub fn step_type(&self) -> Vec<usize> {
        let mut prev = 0;
        self.steps
            .iter()
            .map(|s| {
                let d = s.dim() - prev;
                prev = s.dim();
                d
            })
            .collect()
    }

}

/// A pair of flags with its cached orbit invariant.
#[derive(Clone, Debug)]
pub struct FlagPair {
    pub first: Flag,
    pub second: Flag,
    pub invariant: ThetaMatrix,
}

impl FlagPair {
    pub fn new(first: Flag, second: Flag, f: &PrimePowerField) -> Result<Self> {
        let invariant = orbit_invariant(&first, &second, f)?;
        Ok(FlagPair {
            first,
            second,
            invariant,
        })
    }
}

/// The orbit matrix (a_{ij}) of a pair of flags, from the intersection
/// dimension table d_{ij} = dim(F_i /\ F'_j) by inclusion-exclusion.
pub fn orbit_invariant(first: &Flag, second: &Flag, f: &PrimePowerField) -> Result<ThetaMatrix> {
    let n = first.n();
    if second.n() != n {
        return Err(Error::BadParams("flags have different step counts".into()));
    }
    if first.ambient_dim() != second.ambient_dim() {
        return Err(Error::RankMismatch {
            expected: first.ambient_dim(),
            got: second.ambient_dim(),
        });
    }
    let mut d = vec![vec![0i64; n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            d[i][j] = first.steps[i - 1].intersection_dim(&second.steps[j - 1], f) as i64;
        }
    }
    let mut entries = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            let a = d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1];
            debug_assert!(a >= 0);
            entries.push(a as u32);
        }
    }
    ThetaMatrix::new(n, entries)
}

/// A canonical pair of flags with the prescribed invariant: standard basis
/// vectors are handed out cell by cell in row-major order, the first flag
/// collects indices with i <= a, the second those with j <= b.
pub fn representative_pair(c: &ThetaMatrix, f: &PrimePowerField) -> Result<FlagPair> {
    let n = c.n();
    let r = c.total() as usize;
    // position ranges per cell, column-major so early second-flag steps get
    // early coordinates
    let mut cell_positions = vec![vec![Vec::new(); n]; n];
    let mut pos = 0;
    for j in 0..n {
        for i in 0..n {
            for _ in 0..c.entry(i, j) {
                cell_positions[i][j].push(pos);
                pos += 1;
            }
        }
    }
    let coordinate_space = |positions: Vec<usize>| -> Subspace {
        let mut sorted = positions;
        sorted.sort_unstable();
        let rows = sorted
            .iter()
            .map(|&p| {
                let mut v = vec![0u8; r];
                v[p] = 1;
                v
            })
            .collect();
        Subspace { cols: r, rows }
    };
    let mut first_steps = Vec::new();
    let mut second_steps = Vec::new();
    for a in 0..n {
        let mut fpos = Vec::new();
        let mut spos = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i <= a {
                    fpos.extend(cell_positions[i][j].iter().copied());
                }
                if j <= a {
                    spos.extend(cell_positions[i][j].iter().copied());
                }
            }
        }
        first_steps.push(coordinate_space(fpos));
        second_steps.push(coordinate_space(spos));
    }
    let first = Flag::new(first_steps, f)?;
    let second = Flag::new(second_steps, f)?;
    let pair = FlagPair::new(first, second, f)?;
    if &pair.invariant != c {
        return Err(Error::Unrealizable(format!(
            "representative pair has invariant {:?}, wanted {:?}",
            pair.invariant, c
        )));
    }
    Ok(pair)
}

/// Number of flags with the given step increments, as a product of Gaussian
/// binomials along the chain.
pub fn flag_count(step_type: &[usize], q: u64) -> BigInt {
    let r: usize = step_type.iter().sum();
    let mut remaining = r;
    let mut total = BigInt::one();
    for &d in step_type {
        total *= gaussian_count(remaining, d, q);
        remaining -= d;
    }
    total
}

/// All flags with the given step increments. The budget bounds the total
/// number of flags produced.
pub fn enumerate_flags(
    step_type: &[usize],
    f: &PrimePowerField,
    budget: u128,
) -> Result<Vec<Flag>> {
    let r: usize = step_type.iter().sum();
    let total = flag_count(step_type, f.q);
    if total > BigInt::from(budget) {
        return Err(Error::BudgetExceeded {
            needed: num_traits::ToPrimitive::to_u128(&total).unwrap_or(u128::MAX),
            budget,
        });
    }
    let full = Subspace::full(r);
    let mut partial: Vec<Vec<Subspace>> = vec![vec![]];
    for (idx, &d) in step_type.iter().enumerate() {
        let last_step = idx + 1 == step_type.len();
        let mut next = Vec::new();
        for chain in partial {
            let lower = chain.last().cloned().unwrap_or_else(|| Subspace::zero(r));
            if last_step {
                // forced: the final step is the whole space
                debug_assert_eq!(lower.dim() + d, r);
                let mut c = chain.clone();
                c.push(full.clone());
                next.push(c);
            } else {
                for w in subspaces_between(&lower, &full, d, f, budget)? {
                    let mut c = chain.clone();
                    c.push(w);
                    next.push(c);
                }
            }
        }
        partial = next;
    }
    let flags: Vec<Flag> = partial.into_iter().map(|steps| Flag { steps }).collect();
    debug_assert_eq!(BigInt::from(flags.len()), total);
    Ok(flags)
}

/// Both flags pushed through an invertible matrix g (rows act on the right),
/// re-echelonized. Used to test representative independence.
pub fn twist_flag(flag: &Flag, g: &[Vec<u8>], f: &PrimePowerField) -> Flag {
    let r = flag.ambient_dim();
    let steps = flag
        .steps
        .iter()
        .map(|s| {
            let vectors = s
                .rows
                .iter()
                .map(|row| {
                    let mut out = vec![0u8; r];
                    for (i, &c) in row.iter().enumerate() {
                        if c != 0 {
                            for x in 0..r {
                                out[x] = f.add(out[x], f.mul(c, g[i][x]));
                            }
                        }
                    }
                    out
                })
                .collect();
            Subspace::span(r, vectors, f)
        })
        .collect();
    Flag { steps }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m2(e: [u32; 4]) -> ThetaMatrix {
        ThetaMatrix::new(2, e.to_vec()).unwrap()
    }

    #[test]
    fn invariant_of_identical_flags_is_diagonal() {
        let f = PrimePowerField::new(3).unwrap();
        let s1 = Subspace::span(3, vec![vec![1, 2, 0]], &f);
        let s2 = Subspace::span(3, vec![vec![1, 2, 0], vec![0, 0, 1]], &f);
        let flag = Flag::new(vec![s1, s2, Subspace::full(3)], &f).unwrap();
        let inv = orbit_invariant(&flag, &flag, &f).unwrap();
        assert_eq!(inv, ThetaMatrix::diagonal(&[1, 1, 1]));
    }

    #[test]
    fn invariant_antidiagonal_line() {
        // r=1, n=2, F_1 = V, F'_1 = 0
        let f = PrimePowerField::new(2).unwrap();
        let first = Flag::new(vec![Subspace::full(1), Subspace::full(1)], &f).unwrap();
        let second = Flag::new(vec![Subspace::zero(1), Subspace::full(1)], &f).unwrap();
        let inv = orbit_invariant(&first, &second, &f).unwrap();
        assert_eq!(inv, m2([0, 1, 0, 0]));
    }

    #[test]
    fn invariant_full_first_steps() {
        // r=2, n=2, F_1 = F'_1 = V
        let f = PrimePowerField::new(2).unwrap();
        let flag = Flag::new(vec![Subspace::full(2), Subspace::full(2)], &f).unwrap();
        let inv = orbit_invariant(&flag, &flag, &f).unwrap();
        assert_eq!(inv, m2([2, 0, 0, 0]));
    }

    #[test]
    fn representative_examples() {
        let f = PrimePowerField::new(3).unwrap();
        let c = m2([0, 1, 1, 0]);
        let pair = representative_pair(&c, &f).unwrap();
        // F_1 = span(e2), F'_1 = span(e1)
        assert_eq!(pair.first.steps[0], Subspace::span(2, vec![vec![0, 1]], &f));
        assert_eq!(pair.second.steps[0], Subspace::span(2, vec![vec![1, 0]], &f));

        let d = ThetaMatrix::diagonal(&[2, 1]);
        let pd = representative_pair(&d, &f).unwrap();
        assert_eq!(pd.first.steps, pd.second.steps);
        assert_eq!(pd.first.step_type(), vec![2, 1]);
    }

    #[test]
    fn representative_roundtrip_all_theta() {
        let f = PrimePowerField::new(2).unwrap();
        for n in [2usize, 3] {
            for r in 1..=3u32 {
                for c in crate::schur::theta_enumerate(n, r) {
                    let pair = representative_pair(&c, &f).unwrap();
                    assert_eq!(pair.invariant, c);
                }
            }
        }
    }

    #[test]
    fn flag_enumeration_counts() {
        let f = PrimePowerField::new(2).unwrap();
        let flags = enumerate_flags(&[1, 1], &f, 1 << 20).unwrap();
        assert_eq!(flags.len(), 3); // complete flags in F_2^2
        let flags = enumerate_flags(&[1, 1, 1], &f, 1 << 20).unwrap();
        assert_eq!(flags.len(), 21); // complete flags in F_2^3: (q^2+q+1)(q+1)
        let flags = enumerate_flags(&[2, 0, 1], &f, 1 << 20).unwrap();
        assert_eq!(flags.len(), 7); // planes in F_2^3
    }

    #[test]
    fn invariant_marginals_and_gl_invariance() {
        let f = PrimePowerField::new(3).unwrap();
        let flags = enumerate_flags(&[1, 1], &f, 1 << 20).unwrap();
        let g = vec![vec![1u8, 2], vec![1, 1]]; // det = 1 - 2 = -1, invertible mod 3
        for a in &flags {
            for b in &flags {
                let inv = orbit_invariant(a, b, &f).unwrap();
                assert_eq!(
                    inv.row_sums(),
                    a.step_type().iter().map(|&d| d as u32).collect::<Vec<_>>()
                );
                assert_eq!(
                    inv.col_sums(),
                    b.step_type().iter().map(|&d| d as u32).collect::<Vec<_>>()
                );
                let ta = twist_flag(a, &g, &f);
                let tb = twist_flag(b, &g, &f);
                assert_eq!(orbit_invariant(&ta, &tb, &f).unwrap(), inv);
            }
        }
    }
}
