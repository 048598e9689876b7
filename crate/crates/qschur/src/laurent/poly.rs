//! Sparse exact Laurent polynomials over Z, the coefficient ring A = Z[v, v^-1].

use crate::error::{Error, Result};
use crate::ring::Ring;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element of Z[v, v^-1], stored as a sparse exponent -> coefficient map.
/// Invariant: no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn new() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    /// The monomial c * v^e.
    pub fn term(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut p = LaurentPoly::new();
        if !c.is_zero() {
            p.coeffs.insert(e, c);
        }
        p
    }

    /// The variable v.
    pub fn v() -> Self {
        LaurentPoly::term(1, 1)
    }

    /// v^e.
    pub fn v_pow(e: i64) -> Self {
        LaurentPoly::term(1, e)
    }

    pub fn from_coeffs(it: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = LaurentPoly::new();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiply by v^e.
    pub fn shifted(&self, e: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    /// The bar involution v -> v^-1.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Substitute v -> v^k (k nonzero).
    pub fn stretch(&self, k: i64) -> Self {
        assert!(k != 0);
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// Evaluate at an integer value of v. Negative exponents are only
    /// admissible for v = +-1 (the only integer units).
    pub fn eval_int(&self, v: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, c) in &self.coeffs {
            if *e >= 0 {
                acc += c * v.pow(*e as u32);
            } else {
                assert!(v.abs().is_one(), "negative exponent at non-unit evaluation");
                acc += c * v.pow(e.rem_euclid(2) as u32);
            }
        }
        acc
    }

    /// Evaluate at v^2 = q, i.e. substitute q for v^2. All exponents must be
    /// even and nonnegative.
    pub fn eval_at_v2(&self, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, c) in &self.coeffs {
            assert!(*e >= 0 && e % 2 == 0, "odd or negative exponent in q-polynomial");
            acc += c * q.pow((*e / 2) as u32);
        }
        acc
    }

    /// Evaluate at v = 1.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Evaluate at v = -1.
    pub fn eval_neg_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, c) in &self.coeffs {
            if e.rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Exact division; `Err(NotDivisible)` if `other` does not divide `self`
    /// in Z[v, v^-1]. Division by zero is an error.
    pub fn exact_div(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        if other.is_zero() {
            return Err(Error::NotDivisible);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::new());
        }
        // Normalize both to ordinary polynomials; v-powers are units.
        let a_shift = self.min_exp().unwrap();
        let b_shift = other.min_exp().unwrap();
        let a = self.shifted(-a_shift);
        let b = other.shifted(-b_shift);
        let bd = b.max_exp().unwrap();
        let b_lead = b.coeff(bd);
        let mut rem = a;
        let mut quot = LaurentPoly::new();
        while !rem.is_zero() {
            let rd = rem.max_exp().unwrap();
            if rd < bd {
                return Err(Error::NotDivisible);
            }
            let r_lead = rem.coeff(rd);
            let (q, r) = num_integer::div_rem(r_lead, b_lead.clone());
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            let t = LaurentPoly::term(q, rd - bd);
            rem = rem - t.clone() * b.clone();
            quot = quot + t;
        }
        Ok(quot.shifted(a_shift - b_shift))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*v", c)?,
                _ => write!(f, "{}*v^{}", c, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        for (e, c) in rhs.coeffs {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self + (-rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::new()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::term(1, 0)
    }
}

impl Ring for LaurentPoly {
    fn from_int(n: i64) -> Self {
        LaurentPoly::term(n, 0)
    }
}

impl From<i64> for LaurentPoly {
    fn from(n: i64) -> Self {
        LaurentPoly::term(n, 0)
    }
}

// JSON encoding: {"coeffs": {"<exponent>": <int>, ...}}
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            coeffs: BTreeMap<String, &'a BigInt>,
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(e, c)| (e.to_string(), c))
            .collect();
        Repr { coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            coeffs: BTreeMap<String, BigInt>,
        }
        let repr = Repr::deserialize(d)?;
        let mut p = LaurentPoly::new();
        for (e, c) in repr.coeffs {
            let e: i64 = e.parse().map_err(D::Error::custom)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v() -> LaurentPoly {
        LaurentPoly::v()
    }

    #[test]
    fn ring_basics() {
        let p = v() + LaurentPoly::v_pow(-1);
        let q = p.clone() * p.clone();
        assert_eq!(q.coeff(2), BigInt::from(1));
        assert_eq!(q.coeff(0), BigInt::from(2));
        assert_eq!(q.coeff(-2), BigInt::from(1));
        assert!((p.clone() - p).is_zero());
    }

    #[test]
    fn exact_div_works() {
        let p = v() + LaurentPoly::v_pow(-1);
        let sq = p.clone() * p.clone();
        assert_eq!(sq.exact_div(&p).unwrap(), p);
    }

    #[test]
    fn exact_div_rejects() {
        let a = v() + LaurentPoly::one();
        let b = v() - LaurentPoly::one();
        assert!(a.exact_div(&b).is_err());
    }

    #[test]
    fn bar_and_shift() {
        let p = LaurentPoly::term(3, 2) + LaurentPoly::term(-1, -1);
        assert_eq!(p.bar().bar(), p);
        assert_eq!(p.shifted(2).shifted(-2), p);
    }

    #[test]
    fn json_roundtrip() {
        let p = LaurentPoly::term(5, -3) + LaurentPoly::term(-2, 4);
        let s = serde_json::to_string(&p).unwrap();
        let q: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
    }
}
