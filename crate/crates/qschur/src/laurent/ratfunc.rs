//! The fraction field Q(v), represented as reduced fractions of elements of
//! Z[v,v^-1]. Denominators are kept as primitive polynomials in Z[v] with a
//! nonzero constant term and positive leading coefficient, so equality is
//! structural.

use super::poly::LaurentPoly;
use crate::ring::{Field, Ring};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

fn content(p: &LaurentPoly) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in p.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn scale(p: &LaurentPoly, c: &BigInt) -> LaurentPoly {
    LaurentPoly::from_coeffs(p.iter().map(|(e, k)| (*e, k * c)))
}

fn divide_content(p: &LaurentPoly, c: &BigInt) -> LaurentPoly {
    LaurentPoly::from_coeffs(p.iter().map(|(e, k)| (*e, k / c)))
}

/// Primitive part: divide out the content (sign normalized so the leading
/// coefficient is positive).
fn primitive_part(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let mut c = content(p);
    if p.coeff(p.max_exp().unwrap()).is_negative() {
        c = -c;
    }
    divide_content(p, &c)
}

/// Gcd in Z[v] (inputs are treated up to units v^k), via the primitive
/// polynomial remainder sequence. Result is primitive with positive leading
/// coefficient, constant term nonzero.
fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let norm = |p: &LaurentPoly| -> LaurentPoly {
        if p.is_zero() {
            LaurentPoly::zero()
        } else {
            primitive_part(&p.shifted(-p.min_exp().unwrap()))
        }
    };
    let mut a = norm(a);
    let mut b = norm(b);
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = norm(&r);
    }
    a
}

/// Pseudo-remainder of a by b: rem(lead(b)^(deg a - deg b + 1) * a, b).
fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let da = a.max_exp().unwrap_or(0);
    let db = b.max_exp().unwrap();
    if da < db {
        return a.clone();
    }
    let lead = b.coeff(db);
    let mut rem = scale(a, &lead.pow((da - db + 1) as u32));
    while !rem.is_zero() {
        let dr = rem.max_exp().unwrap();
        if dr < db {
            break;
        }
        let (q, r) = num_integer::div_rem(rem.coeff(dr), lead.clone());
        debug_assert!(r.is_zero());
        rem = rem - LaurentPoly::term(q, dr - db) * b.clone();
    }
    rem
}

/// An element of Q(v).
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in Q(v)");
        Self::normalized(num, den)
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num: LaurentPoly::zero(),
                den: LaurentPoly::one(),
            };
        }
        // fold the denominator's v-power into the numerator
        let dshift = den.min_exp().unwrap();
        let den = den.shifted(-dshift);
        let num = num.shifted(-dshift);
        // cancel the polynomial gcd
        let g = poly_gcd(&num, &den);
        let (mut num, mut den) = if g.max_exp() == Some(0) {
            (num, den)
        } else {
            let nshift = num.min_exp().unwrap();
            let n2 = num.shifted(-nshift).exact_div(&g).unwrap().shifted(nshift);
            let d2 = den.exact_div(&g).unwrap();
            (n2, d2)
        };
        // cancel integer content and fix the denominator's sign
        let cn = content(&num);
        let cd = content(&den);
        let mut c = cn.gcd(&cd);
        if den.coeff(den.max_exp().unwrap()).is_negative() {
            c = -c;
        }
        num = divide_content(&num, &c);
        den = divide_content(&den, &c);
        RatFunc { num, den }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    /// Is this element a Laurent polynomial (denominator 1)?
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        // canonical form makes cross-multiplication unnecessary, but the
        // numerator is only canonical up to nothing further, so compare both
        self.num == other.num && self.den == other.den
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        RatFunc::normalized(
            self.num.clone() * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self + (-rhs)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        RatFunc::normalized(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }
}

impl Ring for RatFunc {
    fn from_int(n: i64) -> Self {
        RatFunc {
            num: LaurentPoly::from_int(n),
            den: LaurentPoly::one(),
        }
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in Q(v)");
        RatFunc::normalized(self.den.clone(), self.num.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v() -> LaurentPoly {
        LaurentPoly::v()
    }

    #[test]
    fn reduction_cancels() {
        // (v^2 - 1)/(v - 1) = v + 1
        let num = LaurentPoly::v_pow(2) - LaurentPoly::one();
        let den = v() - LaurentPoly::one();
        let f = RatFunc::new(num, den);
        assert_eq!(f.as_laurent().unwrap(), v() + LaurentPoly::one());
    }

    #[test]
    fn field_axioms_spotcheck() {
        let a = RatFunc::new(v() + LaurentPoly::one(), LaurentPoly::v_pow(2) + LaurentPoly::from_int(3));
        let b = RatFunc::new(v() - LaurentPoly::from_int(2), v() + LaurentPoly::from_int(5));
        let c = RatFunc::new(LaurentPoly::v_pow(-1), v() + LaurentPoly::one());
        // associativity + distributivity
        assert_eq!(
            (a.clone() + b.clone()) + c.clone(),
            a.clone() + (b.clone() + c.clone())
        );
        assert_eq!(
            a.clone() * (b.clone() + c.clone()),
            a.clone() * b.clone() + a.clone() * c.clone()
        );
        // inverses
        assert_eq!(a.clone() * a.inv(), RatFunc::one());
        assert_eq!(b.clone() - b, RatFunc::zero());
    }

    #[test]
    fn laurent_units_fold() {
        // v^-3 / v^-5 = v^2
        let f = RatFunc::new(LaurentPoly::v_pow(-3), LaurentPoly::v_pow(-5));
        assert_eq!(f.as_laurent().unwrap(), LaurentPoly::v_pow(2));
    }
}
