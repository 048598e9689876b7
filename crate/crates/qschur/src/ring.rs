//! Coefficient-ring abstraction.
//!
//! All algebra machinery (structure tables, monomial recursion, row
//! reduction) is generic over an exact scalar type implementing [`Ring`] or
//! [`Field`]. The concrete scalars are `LaurentPoly` (generic coefficients),
//! `CycloInt` / `CycloRat` (the root-of-unity rings A_l and their fraction
//! fields), `RatFunc` (the field Q(v)) and `Fp` (prime fields).
//!
//! Rings that carry a runtime modulus (`CycloInt`, `CycloRat`, `Fp`) use a
//! "wildcard" convention for the nullary constants required by
//! `num_traits::{Zero, One}`: a zero or one with no modulus attached unifies
//! with any modulus on the first binary operation.

use num_traits::{One, Zero};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

/// An exact commutative ring with decidable equality.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Embed a small integer.
    fn from_int(n: i64) -> Self;
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    fn div(&self, other: &Self) -> Self {
        self.clone() * other.inv()
    }
}

/// A prime-field element, `p = 0` meaning "integer wildcard" (only produced
/// by `zero()`/`one()`; resolved on the first operation with a real modulus).
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
    pub val: u64,
}

impl Fp {
    pub fn new(p: u64, val: i64) -> Self {
        assert!(p >= 2);
        Fp {
            p,
            val: val.rem_euclid(p as i64) as u64,
        }
    }

    fn unify(a: Fp, b: Fp) -> (u64, u64, u64) {
        let p = match (a.p, b.p) {
            (0, 0) => 0,
            (0, p) | (p, 0) => p,
            (p, q) => {
                assert_eq!(p, q, "mixed prime-field moduli");
                p
            }
        };
        if p == 0 {
            (0, a.val, b.val)
        } else {
            (p, a.val % p, b.val % p)
        }
    }

    fn pow(self, mut e: u64) -> Fp {
        assert!(self.p > 0);
        let mut base = self;
        let mut acc = Fp { p: self.p, val: 1 };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        let (p, a, b) = Fp::unify(*self, *other);
        if p == 0 {
            a == b
        } else {
            a % p == b % p
        }
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let (p, a, b) = Fp::unify(self, rhs);
        if p == 0 {
            Fp { p: 0, val: a + b }
        } else {
            Fp {
                p,
                val: (a + b) % p,
            }
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self + (-rhs)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let (p, a, b) = Fp::unify(self, rhs);
        if p == 0 {
            Fp { p: 0, val: a * b }
        } else {
            Fp {
                p,
                val: (a as u128 * b as u128 % p as u128) as u64,
            }
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.p == 0 {
            // only 0 and 1 occur as wildcards; -1 cannot stay a wildcard
            assert_eq!(self.val, 0, "cannot negate a modulus-free nonzero constant");
            self
        } else {
            Fp {
                p: self.p,
                val: (self.p - self.val % self.p) % self.p,
            }
        }
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp { p: 0, val: 0 }
    }
    fn is_zero(&self) -> bool {
        if self.p == 0 {
            self.val == 0
        } else {
            self.val % self.p == 0
        }
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp { p: 0, val: 1 }
    }
}

impl Ring for Fp {
    fn from_int(n: i64) -> Self {
        // wildcard integer; unified on first use
        if n >= 0 {
            Fp { p: 0, val: n as u64 }
        } else {
            panic!("negative modulus-free constant; use Fp::new")
        }
    }
}

impl Field for Fp {
    fn inv(&self) -> Self {
        assert!(self.p >= 2, "cannot invert a modulus-free constant");
        assert!(!self.is_zero(), "division by zero in F_p");
        self.pow(self.p - 2)
    }
}
