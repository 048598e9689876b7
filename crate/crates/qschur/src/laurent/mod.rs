//! Exact coefficient arithmetic: Z[v,v^-1], Gaussian binomials, cyclotomic
//! quotients A_l, prime-field specializations and the field Q(v).

mod cyclo;
mod poly;
mod ratfunc;

pub use cyclo::{cyclotomic, euler_phi, CycloInt, CycloRat};
pub use poly::LaurentPoly;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The balanced quantum integer [n]_d = (v_i^n - v_i^-n)/(v_i - v_i^-1)
/// where v_i = v^d. Defined for any n in Z; [-n] = -[n], [0] = 0.
pub fn quantum_int(n: i64, d: i64) -> LaurentPoly {
    assert!(d >= 1);
    if n == 0 {
        return LaurentPoly::zero();
    }
    if n < 0 {
        return -quantum_int(-n, d);
    }
    // [n] = v^{d(n-1)} + v^{d(n-3)} + ... + v^{-d(n-1)}
    let mut p = LaurentPoly::new();
    let mut e = d * (n - 1);
    for _ in 0..n {
        p.add_term(e, 1);
        e -= 2 * d;
    }
    p
}

/// [n]_d! = [n][n-1]...[1].
pub fn quantum_factorial(n: u64, d: i64) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for k in 1..=n as i64 {
        acc = acc * quantum_int(k, d);
    }
    acc
}

/// The Gaussian binomial [m over k] in v_i = v^d, for m >= 0. Out-of-range k
/// yields zero.
pub fn gauss_binomial(m: i64, k: i64, d: i64) -> LaurentPoly {
    assert!(m >= 0);
    if k < 0 || k > m {
        return LaurentPoly::zero();
    }
    gauss_binomial_general(m, k, d)
}

/// The Gaussian binomial [m over k]_d for arbitrary m in Z and k >= 0,
/// [m over k] = prod_{s=1}^{k} [m-s+1]/[s]. Needed by the commutation
/// relations, where the top entry can be negative.
pub fn gauss_binomial_general(m: i64, k: i64, d: i64) -> LaurentPoly {
    if k < 0 {
        return LaurentPoly::zero();
    }
    let mut acc = LaurentPoly::one();
    for s in 1..=k {
        acc = acc * quantum_int(m - s + 1, d);
        acc = acc
            .exact_div(&quantum_int(s, d))
            .expect("Gaussian binomials are Laurent polynomials");
        if acc.is_zero() {
            return acc;
        }
    }
    acc
}

/// Exact division in Z[v,v^-1]; errors when `y` does not divide `x`.
/// Doubles as an integrality certificate for divided powers.
pub fn exact_divide(x: &LaurentPoly, y: &LaurentPoly) -> Result<LaurentPoly> {
    x.exact_div(y)
}

/// Reduce an element of A into A_l.
pub fn reduce_mod(x: &LaurentPoly, l: u32) -> CycloInt {
    CycloInt::reduce(x, l)
}

/// The allowed values of l for a given ell: l = 2*ell always works; l = ell
/// additionally for odd ell.
pub fn l_choices(ell: u32) -> Vec<u32> {
    if ell % 2 == 0 {
        vec![2 * ell]
    } else {
        vec![ell, 2 * ell]
    }
}

/// Validate an (ell, l) pair.
pub fn check_l_convention(ell: u32, l: u32) -> Result<()> {
    if ell == 0 {
        return Err(Error::BadParams("ell must be positive".into()));
    }
    if !l_choices(ell).contains(&l) {
        return Err(Error::BadParams(format!(
            "l = {} invalid for ell = {} (allowed: {:?})",
            l,
            ell,
            l_choices(ell)
        )));
    }
    Ok(())
}

/// The quasiclassical sign: the image of v^{ell^2} in A_l, computed exactly
/// and asserted to be +-1.
pub fn quasiclassical_sign(ell: u32, l: u32) -> i64 {
    check_l_convention(ell, l).expect("invalid (ell, l)");
    let e = (ell as i64) * (ell as i64);
    let red = CycloInt::reduce(&LaurentPoly::v_pow(e), l);
    let c = red
        .as_constant()
        .expect("v^{ell^2} must be +-1 in A_l");
    assert!(c.abs().is_one());
    num_traits::ToPrimitive::to_i64(&c).unwrap()
}

/// A validated base-change between coefficient domains.
#[derive(Clone, Debug, PartialEq)]
pub enum SpecializationMap {
    /// A -> A_l.
    GenericToCyclo { ell: u32, l: u32 },
    /// A_l -> F_p via v -> 1; requires Phi_l(1) = 0 mod p.
    CycloToPrime { l: u32, p: u64 },
    /// The sign twist v -> v^{ell^2} landing in A_l (quasiclassical).
    SignTwist { ell: u32, l: u32 },
}

impl SpecializationMap {
    pub fn generic_to_cyclo(ell: u32, l: u32) -> Result<Self> {
        check_l_convention(ell, l)?;
        Ok(SpecializationMap::GenericToCyclo { ell, l })
    }

    pub fn cyclo_to_prime(l: u32, p: u64) -> Result<Self> {
        let phi1 = cyclotomic(l).eval_one();
        if (&phi1 % BigInt::from(p)) != BigInt::zero() {
            return Err(Error::DomainMismatch(format!(
                "v -> 1 into F_{} undefined on A_{}: Phi_{}(1) = {} not divisible by {}",
                p, l, l, phi1, p
            )));
        }
        Ok(SpecializationMap::CycloToPrime { l, p })
    }

    pub fn sign_twist(ell: u32, l: u32) -> Result<Self> {
        check_l_convention(ell, l)?;
        Ok(SpecializationMap::SignTwist { ell, l })
    }
}

/// Check the root-of-unity precondition of the binomial lemma: in A_l we have
/// v^{2l} = 1 while v^{2t} != 1 for 0 < t < ell.
pub fn check_root_of_unity_order(ell: u32, l: u32) -> bool {
    let one = CycloInt::constant(l, 1);
    if CycloInt::reduce(&LaurentPoly::v_pow(2 * l as i64), l) != one {
        return false;
    }
    for t in 1..ell as i64 {
        if CycloInt::reduce(&LaurentPoly::v_pow(2 * t), l) == one {
            return false;
        }
    }
    true
}

/// Ordinary binomial coefficient.
pub fn binomial(m: u64, k: u64) -> BigInt {
    if k > m {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for s in 0..k {
        acc = acc * BigInt::from(m - s) / BigInt::from(s + 1);
    }
    acc
}

/// The two root-of-unity reduction identities for Gaussian binomials,
/// checked exactly in A_l for all 0 <= k <= m <= m_max:
/// (a) [m over k] = 0 when ell | m but ell does not divide k;
/// (b) for m = m1*ell + s, k = k1*ell + t with 0 <= s,t < ell,
///     [m over k] = v^{ell(k1 s - m1 t) + (m1+1) k1 ell^2} C(m1,k1) [s over t].
pub fn binomial_lemma_report(ell: u32, l: u32, m_max: i64) -> Result<Vec<(String, bool)>> {
    check_l_convention(ell, l)?;
    let le = ell as i64;
    let mut part_a = true;
    let mut part_b = true;
    for m in 0..=m_max {
        for k in 0..=m {
            let lhs = CycloInt::reduce(&gauss_binomial(m, k, 1), l);
            if m % le == 0 && k % le != 0 && !num_traits::Zero::is_zero(&lhs) {
                part_a = false;
            }
            let (m1, s) = (m / le, m % le);
            let (k1, t) = (k / le, k % le);
            let exp = le * (k1 * s - m1 * t) + (m1 + 1) * k1 * le * le;
            let rhs = CycloInt::reduce(&LaurentPoly::v_pow(exp), l)
                * CycloInt::constant(l, binomial(m1 as u64, k1 as u64))
                * CycloInt::reduce(&gauss_binomial(s, t, 1), l);
            if lhs != rhs {
                part_b = false;
            }
        }
    }
    Ok(vec![
        ("part-a".to_string(), part_a),
        ("part-b".to_string(), part_b),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn gauss_binomial_examples() {
        // [2 over 1] = v + v^-1
        assert_eq!(
            gauss_binomial(2, 1, 1),
            LaurentPoly::v() + LaurentPoly::v_pow(-1)
        );
        // [4 over 2] = v^4 + v^2 + 2 + v^-2 + v^-4
        let expect = LaurentPoly::from_coeffs([
            (4, BigInt::from(1)),
            (2, BigInt::from(1)),
            (0, BigInt::from(2)),
            (-2, BigInt::from(1)),
            (-4, BigInt::from(1)),
        ]);
        assert_eq!(gauss_binomial(4, 2, 1), expect);
        // k > m
        assert!(gauss_binomial(3, 5, 1).is_zero());
    }

    #[test]
    fn gauss_binomial_symmetry_bar_and_value_at_one() {
        for m in 0..=12i64 {
            for k in 0..=m {
                for d in 1..=3i64 {
                    let b = gauss_binomial(m, k, d);
                    assert_eq!(b, gauss_binomial(m, m - k, d), "k <-> m-k symmetry");
                    assert_eq!(b, b.bar(), "bar invariance");
                    assert_eq!(
                        b.eval_one(),
                        binomial(m as u64, k as u64),
                        "value at v=1"
                    );
                }
            }
        }
    }

    #[test]
    fn exact_divide_examples() {
        let two = gauss_binomial(2, 1, 1); // [2]
        let sq = two.clone() * two.clone();
        assert_eq!(exact_divide(&sq, &two).unwrap(), two);
        // [4][3] / [2] = (v^2+v^-2)(v^2+1+v^-2)
        let n = quantum_int(4, 1) * quantum_int(3, 1);
        let q = exact_divide(&n, &two).unwrap();
        let expect = (LaurentPoly::v_pow(2) + LaurentPoly::v_pow(-2))
            * (LaurentPoly::v_pow(2) + LaurentPoly::one() + LaurentPoly::v_pow(-2));
        assert_eq!(q, expect);
        // non-divisible
        let a = LaurentPoly::v() + LaurentPoly::one();
        let b = LaurentPoly::v() - LaurentPoly::one();
        assert!(exact_divide(&a, &b).is_err());
    }

    #[test]
    fn binomial_lemma_part_a_small() {
        // [m over k] = 0 in A_l when ell | m, ell does not divide k
        for ell in 2u32..=4 {
            for l in l_choices(ell) {
                for m in (ell as i64..=3 * ell as i64).step_by(ell as usize) {
                    for k in 0..=m {
                        if k % ell as i64 != 0 {
                            assert!(
                                reduce_mod(&gauss_binomial(m, k, 1), l).is_zero(),
                                "ell={} l={} m={} k={}",
                                ell,
                                l,
                                m,
                                k
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn root_of_unity_orders() {
        for ell in 1u32..=7 {
            for l in l_choices(ell) {
                assert!(check_root_of_unity_order(ell, l), "ell={} l={}", ell, l);
            }
        }
    }

    #[test]
    fn quasiclassical_signs() {
        // l = 2*ell, ell even -> +1; l = 2*ell, ell odd -> -1; l = ell odd -> +1
        assert_eq!(quasiclassical_sign(2, 4), 1);
        assert_eq!(quasiclassical_sign(4, 8), 1);
        assert_eq!(quasiclassical_sign(3, 6), -1);
        assert_eq!(quasiclassical_sign(5, 10), -1);
        assert_eq!(quasiclassical_sign(3, 3), 1);
        assert_eq!(quasiclassical_sign(5, 5), 1);
        assert_eq!(quasiclassical_sign(1, 1), 1);
    }

    #[test]
    fn specialization_validity() {
        assert!(SpecializationMap::cyclo_to_prime(4, 2).is_ok()); // Phi_4(1) = 2
        assert!(SpecializationMap::cyclo_to_prime(3, 3).is_ok()); // Phi_3(1) = 3
        assert!(SpecializationMap::cyclo_to_prime(6, 3).is_err()); // Phi_6(1) = 1
        assert!(SpecializationMap::generic_to_cyclo(2, 2).is_err()); // even ell forces l = 2 ell
        assert!(SpecializationMap::generic_to_cyclo(3, 3).is_ok());
        assert!(SpecializationMap::generic_to_cyclo(3, 6).is_ok());
    }

    #[test]
    fn quantum_int_negative() {
        assert_eq!(quantum_int(-3, 1), -quantum_int(3, 1));
        assert!(quantum_int(0, 2).is_zero());
        assert_eq!(quantum_int(1, 5), LaurentPoly::one());
    }

    #[test]
    fn general_binomial_negative_top() {
        // [-1 over k] = (-1)^k v^{+-...}; check against the recurrence value at v=1
        for k in 0..5i64 {
            let b = gauss_binomial_general(-1, k, 1);
            let at_one = b.eval_one().to_i64().unwrap();
            assert_eq!(at_one, if k % 2 == 0 { 1 } else { -1 });
        }
    }
}
