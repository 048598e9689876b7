//! Lagrange interpolation of integer-valued counts into polynomials in q,
//! returned as Laurent polynomials in v via q = v^2.

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// The unique polynomial of degree < points.len() through the given
/// (q, value) points, with an integrality check on the coefficients. The
/// result substitutes v^2 for q.
pub fn interpolate_counts(points: &[(u64, BigInt)]) -> Result<LaurentPoly> {
    let n = points.len();
    assert!(n > 0, "interpolation needs at least one point");
    // coefficients of the interpolating polynomial in q, built by
    // accumulating each Lagrange basis polynomial in coefficient form
    let mut coeffs = vec![BigRational::zero(); n];
    for (i, (qi, vi)) in points.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        // numerator polynomial prod_{j != i} (q - q_j), coefficient form
        let mut num = vec![BigRational::one()];
        let mut denom = BigRational::one();
        let qi_rat = BigRational::from(BigInt::from(*qi));
        for (j, (qj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            let qj_rat = BigRational::from(BigInt::from(*qj));
            denom *= &qi_rat - &qj_rat;
            let mut next = vec![BigRational::zero(); num.len() + 1];
            for (d, c) in num.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * &qj_rat;
            }
            num = next;
        }
        let scale = BigRational::from(vi.clone()) / denom;
        for (d, c) in num.iter().enumerate() {
            coeffs[d] += c * &scale;
        }
    }
    let mut poly = LaurentPoly::zero();
    for (d, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() {
            return Err(Error::IntegralityFailure);
        }
        poly = poly + LaurentPoly::from_coeffs([(2 * d as i64, c.to_integer())]);
    }
    Ok(poly)
}
