//! Descent of the Frobenius and its splitting to generalized Schur
//! quotients: for a saturated P at level (n, ell*r) and its image P* at
//! level (n, r), the ideals correspond under the two maps and the induced
//! maps on quotients stay a split surjection.

use super::ideal::{ideal_generated, quotient, QuotientAlgebra};
use super::{dominant_window, from_vec, to_vec};
use crate::cartan::{SaturatedSet, Weight};
use crate::error::{Error, Result};
use crate::frob::FrobeniusPair;
use crate::laurent::{CycloInt, CycloRat, LaurentPoly};
use crate::ring::Field;
use crate::schur::{build_table, Algebra};
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub struct DescentReport {
    pub p_complement: Vec<Vec<i64>>,
    pub dim_source: usize,
    pub dim_ideal: usize,
    pub dim_quotient: usize,
    pub dim_star_quotient: usize,
    pub embed: bool,
    pub fr_surjective: bool,
}

/// The saturated set at star level: lambda is excluded iff ell*lambda
/// fails to lie in P.
pub fn star_saturated(p: &SaturatedSet, n: usize, r: u32, ell: u32) -> Result<SaturatedSet> {
    let window = dominant_window(n, r);
    let complement: Vec<Weight> = window
        .iter()
        .filter(|lam| !p.contains(&lam.scale(ell as i64)))
        .cloned()
        .collect();
    SaturatedSet::from_complement(complement, &window)
}

fn fr_vector(
    v: &[CycloRat],
    src: &Algebra<CycloRat>,
    star: &Algebra<CycloRat>,
    ell: u32,
) -> Vec<CycloRat> {
    let mut out = vec![CycloRat::zero(); star.table.dim()];
    for (ai, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if let Some(b) = src.table.basis[ai].try_unscale(ell) {
            let bi = star.table.index_of(&b).expect("unscaled matrix outside basis");
            out[bi] = out[bi].clone() + c.clone();
        }
    }
    out
}

/// Verify the ideal correspondences and build the induced quotient maps.
/// Returns (matrix of c_P, matrix of Fr_P, report); errors if either ideal
/// containment fails.
pub fn descend_maps(
    pair: &FrobeniusPair,
    p: &SaturatedSet,
) -> Result<(Vec<Vec<CycloRat>>, Vec<Vec<CycloRat>>, DescentReport)> {
    let (n, r, ell, l) = (pair.n, pair.r, pair.ell, pair.l);
    let src = Algebra::generic(build_table(n, ell * r)?)?
        .specialize(move |poly: &LaurentPoly| CycloInt::reduce(poly, l).to_rat());
    let eps = BigInt::from(pair.eps);
    let star = Algebra::generic(build_table(n, r)?)?
        .specialize(move |poly: &LaurentPoly| CycloInt::constant(l, poly.eval_int(&eps)).to_rat());

    let p_star = star_saturated(p, n, r, ell)?;
    let ideal_big = ideal_generated(&src, p)?;
    let ideal_small = ideal_generated(&star, &p_star)?;

    // c carries I_{P*} into I_P
    let c_vecs: Vec<Vec<CycloRat>> = (0..star.table.dim())
        .map(|bi| to_vec(&pair.c_basis(bi).map_coeffs(|x| x.to_rat()), &src.table))
        .collect();
    for row in ideal_small.echelon.rows() {
        let mut img = vec![CycloRat::zero(); src.table.dim()];
        for (bi, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, x) in c_vecs[bi].iter().enumerate() {
                if !x.is_zero() {
                    img[k] = img[k].clone() + c.clone() * x.clone();
                }
            }
        }
        if !ideal_big.echelon.contains(&img) {
            return Err(Error::RelationFailure(
                "splitting map does not preserve the ideal".into(),
            ));
        }
    }
    // Fr maps I_P onto I_{P*}
    let mut fr_rank = super::linalg::Echelon::new(star.table.dim());
    for row in ideal_big.echelon.rows() {
        let img = fr_vector(row, &src, &star, ell);
        if !ideal_small.echelon.contains(&img) {
            return Err(Error::RelationFailure(
                "Frobenius does not preserve the ideal".into(),
            ));
        }
        fr_rank.insert(img);
    }
    if fr_rank.rank() != ideal_small.dim() {
        return Err(Error::RelationFailure(
            "Frobenius image of the ideal is too small".into(),
        ));
    }

    let q_big: QuotientAlgebra<CycloRat> = quotient(&src, p)?;
    let q_small: QuotientAlgebra<CycloRat> = quotient(&star, &p_star)?;

    // induced matrices in quotient coordinates (column-major storage)
    let c_cols: Vec<Vec<CycloRat>> = (0..q_small.dim())
        .map(|j| {
            let bi = q_small.coords[j];
            let red = q_big.ideal.echelon.reduce(c_vecs[bi].clone());
            q_big.coords.iter().map(|&k| red[k].clone()).collect()
        })
        .collect();
    let fr_cols: Vec<Vec<CycloRat>> = (0..q_big.dim())
        .map(|k| {
            let mut unit = vec![CycloRat::zero(); src.table.dim()];
            unit[q_big.coords[k]] = CycloRat::one();
            let img = fr_vector(&unit, &src, &star, ell);
            q_small.project(&from_vec(&img, &star.table), &star)
        })
        .collect();

    let injective = super::linalg::rank_of(q_big.dim(), c_cols.clone()) == q_small.dim();
    let surjective = super::linalg::rank_of(q_small.dim(), fr_cols.clone()) == q_small.dim();

    // Fr_P(c_P(unit_j)) = unit_j, through canonical representatives
    let mut section_ok = true;
    for j in 0..q_small.dim() {
        let bi = q_small.coords[j];
        let rep = q_big.ideal.echelon.reduce(c_vecs[bi].clone());
        let img = fr_vector(&rep, &src, &star, ell);
        let q = q_small.project(&from_vec(&img, &star.table), &star);
        let mut unit = vec![CycloRat::zero(); q_small.dim()];
        unit[j] = CycloRat::one();
        if q != unit {
            section_ok = false;
        }
    }

    let report = DescentReport {
        p_complement: p
            .complement()
            .iter()
            .map(|w| {
                w.lift_with_sum((ell * r) as i64)
                    .unwrap_or_else(|| w.entries().to_vec())
            })
            .collect(),
        dim_source: src.table.dim(),
        dim_ideal: ideal_big.dim(),
        dim_quotient: q_big.dim(),
        dim_star_quotient: q_small.dim(),
        embed: injective && section_ok,
        fr_surjective: surjective,
    };

    // row-major matrices: c_P is (dim Q_big) x (dim Q_small), Fr_P transposed
    let c_mat: Vec<Vec<CycloRat>> = (0..q_big.dim())
        .map(|m| (0..q_small.dim()).map(|j| c_cols[j][m].clone()).collect())
        .collect();
    let fr_mat: Vec<Vec<CycloRat>> = (0..q_small.dim())
        .map(|m| (0..q_big.dim()).map(|k| fr_cols[k][m].clone()).collect())
        .collect();
    Ok((c_mat, fr_mat, report))
}

/// Nested saturated sets give nested ideals, and quotient projection
/// factors through the intermediate quotient.
pub fn check_filtration<F: Field>(
    alg: &Algebra<F>,
    p_inner: &SaturatedSet,
    p_outer: &SaturatedSet,
) -> Result<bool> {
    let i1 = ideal_generated(alg, p_inner)?;
    let i2 = ideal_generated(alg, p_outer)?;
    for row in i1.echelon.rows() {
        if !i2.echelon.contains(row) {
            return Ok(false);
        }
    }
    // reducing first by the smaller ideal does not change the outer class
    for b in 0..alg.table.dim() {
        let mut unit = vec![F::zero(); alg.table.dim()];
        unit[b] = F::one();
        let via = i2.echelon.reduce(i1.echelon.reduce(unit.clone()));
        let direct = i2.echelon.reduce(unit);
        if via != direct {
            return Ok(false);
        }
    }
    Ok(true)
}
