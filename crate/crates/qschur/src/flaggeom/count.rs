//! Middle-flag counting: the fiber count behind every structure constant.
//!
//! count_middle enumerates all candidate middle flags; it is the slow,
//! assumption-free oracle. count_middle_generator handles the matrices that
//! differ from a diagonal by one adjacent off-diagonal entry: there the
//! middle flag varies in a single step, pinched between two steps of the
//! fixed flag, and the count collapses to a product of Gaussian binomials
//! over intersection profiles, evaluated without ever touching the field.

use super::field::PrimePowerField;
use super::flag::{enumerate_flags, orbit_invariant, representative_pair, FlagPair};
use super::subspace::gaussian_count;
use crate::error::Result;
use crate::schur::ThetaMatrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn compatible(a: &ThetaMatrix, b: &ThetaMatrix, c: &ThetaMatrix) -> bool {
    a.n() == b.n()
        && b.n() == c.n()
        && a.col_sums() == b.row_sums()
        && a.row_sums() == c.row_sums()
        && b.col_sums() == c.col_sums()
}

/// #{F'' : (F,F'') in O_A, (F'',F') in O_B} for (F,F') the canonical
/// representative of O_C, by full enumeration of flags of type col(A).
pub fn count_middle(
    a: &ThetaMatrix,
    b: &ThetaMatrix,
    c: &ThetaMatrix,
    f: &PrimePowerField,
    budget: u128,
) -> Result<BigInt> {
    if !compatible(a, b, c) {
        return Ok(BigInt::zero());
    }
    let pair = representative_pair(c, f)?;
    count_middle_over(a, b, &pair, f, budget)
}

/// The same count over an explicitly given representative pair.
pub fn count_middle_over(
    a: &ThetaMatrix,
    b: &ThetaMatrix,
    pair: &FlagPair,
    f: &PrimePowerField,
    budget: u128,
) -> Result<BigInt> {
    let middle_type: Vec<usize> = a.col_sums().iter().map(|&d| d as usize).collect();
    let mut count = BigInt::zero();
    for middle in enumerate_flags(&middle_type, f, budget)? {
        if orbit_invariant(&pair.first, &middle, f)? == *a
            && orbit_invariant(&middle, &pair.second, f)? == *b
        {
            count += 1;
        }
    }
    Ok(count)
}

/// Fast path for generator-shaped A, valid at every prime power q.
///
/// When A = diag + single entry at (i, i+1) or (i+1, i), the orbit condition
/// (F,F'') in O_A forces F''_j = F_j for all j except one index i0, where
/// F'' inserts a subspace W with F_{lo} <= W <= F_{hi}, hi = lo + 1. The
/// flags F'' with (F'',F') in O_B are counted by the profile of W against
/// the trace chain T_t = image of F'_t in F_{hi}/F_{lo}: choosing W layer by
/// layer gives q^{delta_t (t_{t-1} - eps_{t-1})} [g_t over delta_t]_q per
/// layer. Every dimension involved is a partial sum of B or C.
pub fn count_middle_generator(
    a: &ThetaMatrix,
    b: &ThetaMatrix,
    c: &ThetaMatrix,
    q: u64,
) -> Result<BigInt> {
    let gen = a.generator_offdiag()?;
    if !compatible(a, b, c) {
        return Ok(BigInt::zero());
    }
    let Some((ia0, ja0, _)) = gen else {
        // diagonal A: the middle flag is F itself, so B must be C
        return Ok(if b == c { BigInt::one() } else { BigInt::zero() });
    };
    let n = a.n();
    // 1-based step indices: the entry sits in row ia; the varying middle step
    // is i0; the window is F_{ia-1} <= W <= F_{ia}.
    let ia = ia0 + 1;
    let i0 = std::cmp::min(ia0, ja0) + 1;
    let lo = ia - 1;
    let hi = ia;
    // partial-sum tables, 1-based with zero row/column 0
    let psum = |m: &ThetaMatrix, s: usize, t: usize| -> i64 {
        let mut acc = 0i64;
        for i in 0..s.min(n) {
            for j in 0..t.min(n) {
                acc += m.entry(i, j) as i64;
            }
        }
        acc
    };
    let d_c = |s: usize, t: usize| psum(c, s, t);
    let lo_dim = d_c(lo, n);
    let hi_dim = d_c(hi, n);
    let dw: i64 = (0..i0).map(|j| a.col_sums()[j] as i64).sum();
    if dw < lo_dim || dw > hi_dim {
        return Ok(BigInt::zero());
    }
    // The full intersection table of the forced middle flag against F': row
    // i0 is prescribed by B, every other row comes from C. Its
    // inclusion-exclusion must reproduce B exactly.
    let d_mid = |s: usize, t: usize| -> i64 {
        if s == i0 {
            psum(b, i0, t)
        } else {
            d_c(s, t)
        }
    };
    for s in 1..=n {
        for t in 1..=n {
            let m = d_mid(s, t) - d_mid(s - 1, t) - d_mid(s, t - 1) + d_mid(s - 1, t - 1);
            if m < 0 || m as u32 != b.entry(s - 1, t - 1) {
                return Ok(BigInt::zero());
            }
        }
    }
    // profile count in the window quotient
    let qi = BigInt::from(q);
    let mut count = BigInt::one();
    let mut t_prev = 0i64;
    let mut eps_prev = 0i64;
    for t in 1..=n {
        let t_t = d_c(hi, t) - d_c(lo, t);
        let eps_t = psum(b, i0, t) - d_c(lo, t);
        let delta = eps_t - eps_prev;
        let gap = t_t - t_prev;
        if delta < 0 || delta > gap || eps_t < 0 {
            return Ok(BigInt::zero());
        }
        count *= qi.pow((delta * (t_prev - eps_prev)) as u32);
        count *= gaussian_count(gap as usize, delta as usize, q);
        t_prev = t_t;
        eps_prev = eps_t;
    }
    debug_assert_eq!(eps_prev, dw - lo_dim);
    Ok(count)
}
