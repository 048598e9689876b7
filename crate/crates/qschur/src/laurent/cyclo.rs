//! Cyclotomic polynomials and the quotient rings A_l = Z[v,v^-1]/(Phi_l(v)),
//! together with their fraction-field counterparts over Q.

use super::poly::LaurentPoly;
use crate::ring::{Field, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Euler's totient; the degree of Phi_l.
pub fn euler_phi(l: u32) -> u32 {
    let mut n = l;
    let mut result = l;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The l-th cyclotomic polynomial Phi_l as an element of Z[v].
///
/// Computed by exact division: Phi_l = (v^l - 1) / prod_{d | l, d < l} Phi_d.
pub fn cyclotomic(l: u32) -> LaurentPoly {
    assert!(l >= 1);
    let mut table: Vec<LaurentPoly> = Vec::with_capacity(l as usize + 1);
    table.push(LaurentPoly::zero()); // index 0 unused
    for m in 1..=l {
        let mut num = LaurentPoly::v_pow(m as i64) - LaurentPoly::one();
        for d in 1..m {
            if m % d == 0 {
                num = num.exact_div(&table[d as usize]).expect("cyclotomic division is exact");
            }
        }
        table.push(num);
    }
    table.pop().unwrap()
}

/// Dense coefficient vector of Phi_l, constant term first, length phi(l)+1.
/// Memoized; ring operations in A_l reduce modulo this on every multiply.
fn phi_coeffs(l: u32) -> Vec<BigInt> {
    use std::collections::HashMap;
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&l) {
        return v.clone();
    }
    let p = cyclotomic(l);
    let d = euler_phi(l) as i64;
    let v: Vec<BigInt> = (0..=d).map(|e| p.coeff(e)).collect();
    cache.lock().unwrap().insert(l, v.clone());
    v
}

/// Remainder of a dense polynomial (constant term first) modulo the monic
/// polynomial `m` (constant term first, leading coefficient 1).
fn rem_monic(mut a: Vec<BigInt>, m: &[BigInt]) -> Vec<BigInt> {
    let d = m.len() - 1;
    while a.len() > d {
        let top = a.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let k = a.len() - d; // subtract top * v^k * m
        for i in 0..d {
            let t = &top * &m[i];
            a[k + i] -= t;
        }
    }
    a.resize(d, BigInt::zero());
    a
}

fn rem_monic_rat(mut a: Vec<BigRational>, m: &[BigRational]) -> Vec<BigRational> {
    let d = m.len() - 1;
    while a.len() > d {
        let top = a.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let k = a.len() - d;
        for i in 0..d {
            let t = &top * &m[i];
            a[k + i] -= t;
        }
    }
    a.resize(d, BigRational::zero());
    a
}

/// An element of A_l = Z[v,v^-1]/(Phi_l(v)), reduced to degree < phi(l).
///
/// `l = 0` is the integer-constant wildcard produced by `zero()`/`one()`;
/// it unifies with any modulus on the first binary operation.
#[derive(Clone, Debug)]
pub struct CycloInt {
    pub l: u32,
    coeffs: Vec<BigInt>, // length phi(l) when l > 0, length <= 1 when l == 0
}

impl CycloInt {
    pub fn from_vec(l: u32, coeffs: Vec<BigInt>) -> Self {
        assert!(l >= 1);
        let phi = phi_coeffs(l);
        CycloInt {
            l,
            coeffs: rem_monic(coeffs, &phi),
        }
    }

    pub fn constant(l: u32, n: impl Into<BigInt>) -> Self {
        CycloInt::from_vec(l, vec![n.into()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The representative of v^-1 in A_l: Phi_l(0) = +-1 so
    /// v^-1 = -Phi_l(0)^-1 (c_1 + c_2 v + ... + v^{d-1}).
    pub fn v_inverse(l: u32) -> Self {
        let phi = phi_coeffs(l);
        let c0 = phi[0].clone();
        assert!(c0.abs().is_one());
        let d = phi.len() - 1;
        let coeffs: Vec<BigInt> = (1..=d).map(|i| -&c0 * &phi[i]).collect();
        CycloInt::from_vec(l, coeffs)
    }

    /// The canonical ring map A -> A_l.
    pub fn reduce(x: &LaurentPoly, l: u32) -> Self {
        if x.is_zero() {
            return CycloInt::constant(l, 0);
        }
        let shift = x.min_exp().unwrap().min(0);
        let poly = x.shifted(-shift);
        let deg = poly.max_exp().unwrap();
        let dense: Vec<BigInt> = (0..=deg).map(|e| poly.coeff(e)).collect();
        let mut out = CycloInt::from_vec(l, dense);
        if shift < 0 {
            let vinv = CycloInt::v_inverse(l);
            for _ in 0..(-shift) {
                out = out * vinv.clone();
            }
        }
        out
    }

    /// Promote a wildcard constant to modulus l.
    fn promote(&self, l: u32) -> CycloInt {
        if self.l != 0 {
            assert_eq!(self.l, l, "mixed cyclotomic moduli");
            return self.clone();
        }
        let n = self.coeffs.first().cloned().unwrap_or_else(BigInt::zero);
        CycloInt::constant(l, n)
    }

    fn unify(a: &CycloInt, b: &CycloInt) -> (CycloInt, CycloInt) {
        match (a.l, b.l) {
            (0, 0) => (a.clone(), b.clone()),
            (0, l) => (a.promote(l), b.clone()),
            (l, 0) => (a.clone(), b.promote(l)),
            (l, m) => {
                assert_eq!(l, m, "mixed cyclotomic moduli");
                (a.clone(), b.clone())
            }
        }
    }

    /// Evaluate at v = 1 into F_p. Only well defined when Phi_l(1) = 0 mod p;
    /// the caller (SpecializationMap) checks that once.
    pub fn eval_one_mod(&self, p: u64) -> u64 {
        let s: BigInt = self.coeffs.iter().sum();
        let m = BigInt::from(p);
        let r = ((s % &m) + &m) % m;
        let (_, digits) = r.to_u64_digits();
        *digits.first().unwrap_or(&0)
    }

    /// If the element is an integer constant, return it.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs.first().cloned().unwrap_or_else(BigInt::zero))
        } else {
            None
        }
    }

    pub fn to_rat(&self) -> CycloRat {
        if self.l == 0 {
            let n = self.coeffs.first().cloned().unwrap_or_else(BigInt::zero);
            let mut c = CycloRat {
                l: 0,
                coeffs: vec![],
            };
            if !n.is_zero() {
                c.coeffs = vec![BigRational::from_integer(n)];
            }
            return c;
        }
        CycloRat {
            l: self.l,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }
}

impl PartialEq for CycloInt {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = CycloInt::unify(self, other);
        if a.l == 0 {
            let x = a.coeffs.first().cloned().unwrap_or_else(BigInt::zero);
            let y = b.coeffs.first().cloned().unwrap_or_else(BigInt::zero);
            return x == y;
        }
        a.coeffs == b.coeffs
    }
}

impl Add for CycloInt {
    type Output = CycloInt;
    fn add(self, rhs: CycloInt) -> CycloInt {
        let (mut a, b) = CycloInt::unify(&self, &rhs);
        if a.l == 0 {
            let x = a.coeffs.first().cloned().unwrap_or_else(BigInt::zero);
            let y = b.coeffs.first().cloned().unwrap_or_else(BigInt::zero);
            return CycloInt {
                l: 0,
                coeffs: vec![x + y],
            };
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            a.coeffs[i] += c;
        }
        a
    }
}

impl Sub for CycloInt {
    type Output = CycloInt;
    fn sub(self, rhs: CycloInt) -> CycloInt {
        self + (-rhs)
    }
}

impl Neg for CycloInt {
    type Output = CycloInt;
    fn neg(mut self) -> CycloInt {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for CycloInt {
    type Output = CycloInt;
    fn mul(self, rhs: CycloInt) -> CycloInt {
        let (a, b) = CycloInt::unify(&self, &rhs);
        if a.l == 0 {
            let x = a.coeffs.first().cloned().unwrap_or_else(BigInt::zero);
            let y = b.coeffs.first().cloned().unwrap_or_else(BigInt::zero);
            return CycloInt {
                l: 0,
                coeffs: vec![x * y],
            };
        }
        let mut prod = vec![BigInt::zero(); 2 * a.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        CycloInt::from_vec(a.l, prod)
    }
}

impl Zero for CycloInt {
    fn zero() -> Self {
        CycloInt {
            l: 0,
            coeffs: vec![],
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl One for CycloInt {
    fn one() -> Self {
        CycloInt {
            l: 0,
            coeffs: vec![BigInt::one()],
        }
    }
}

impl Ring for CycloInt {
    fn from_int(n: i64) -> Self {
        CycloInt {
            l: 0,
            coeffs: vec![BigInt::from(n)],
        }
    }
}

/// An element of the field Q[v]/(Phi_l(v)); Phi_l is irreducible over Q.
#[derive(Clone, Debug)]
pub struct CycloRat {
    pub l: u32,
    coeffs: Vec<BigRational>,
}

impl CycloRat {
    pub fn from_vec(l: u32, coeffs: Vec<BigRational>) -> Self {
        assert!(l >= 1);
        let phi: Vec<BigRational> = phi_coeffs(l)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        CycloRat {
            l,
            coeffs: rem_monic_rat(coeffs, &phi),
        }
    }

    fn promote(&self, l: u32) -> CycloRat {
        if self.l != 0 {
            assert_eq!(self.l, l, "mixed cyclotomic moduli");
            return self.clone();
        }
        let n = self
            .coeffs
            .first()
            .cloned()
            .unwrap_or_else(BigRational::zero);
        CycloRat::from_vec(l, vec![n])
    }

    fn unify(a: &CycloRat, b: &CycloRat) -> (CycloRat, CycloRat) {
        match (a.l, b.l) {
            (0, 0) => (a.clone(), b.clone()),
            (0, l) => (a.promote(l), b.clone()),
            (l, 0) => (a.clone(), b.promote(l)),
            (l, m) => {
                assert_eq!(l, m, "mixed cyclotomic moduli");
                (a.clone(), b.clone())
            }
        }
    }
}

impl PartialEq for CycloRat {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = CycloRat::unify(self, other);
        if a.l == 0 {
            let x = a.coeffs.first().cloned().unwrap_or_else(BigRational::zero);
            let y = b.coeffs.first().cloned().unwrap_or_else(BigRational::zero);
            return x == y;
        }
        a.coeffs == b.coeffs
    }
}

impl Add for CycloRat {
    type Output = CycloRat;
    fn add(self, rhs: CycloRat) -> CycloRat {
        let (mut a, b) = CycloRat::unify(&self, &rhs);
        if a.l == 0 {
            let x = a.coeffs.first().cloned().unwrap_or_else(BigRational::zero);
            let y = b.coeffs.first().cloned().unwrap_or_else(BigRational::zero);
            let s = x + y;
            return CycloRat {
                l: 0,
                coeffs: if s.is_zero() { vec![] } else { vec![s] },
            };
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            a.coeffs[i] += c;
        }
        a
    }
}

impl Sub for CycloRat {
    type Output = CycloRat;
    fn sub(self, rhs: CycloRat) -> CycloRat {
        self + (-rhs)
    }
}

impl Neg for CycloRat {
    type Output = CycloRat;
    fn neg(mut self) -> CycloRat {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for CycloRat {
    type Output = CycloRat;
    fn mul(self, rhs: CycloRat) -> CycloRat {
        let (a, b) = CycloRat::unify(&self, &rhs);
        if a.l == 0 {
            let x = a.coeffs.first().cloned().unwrap_or_else(BigRational::zero);
            let y = b.coeffs.first().cloned().unwrap_or_else(BigRational::zero);
            let s = x * y;
            return CycloRat {
                l: 0,
                coeffs: if s.is_zero() { vec![] } else { vec![s] },
            };
        }
        let mut prod = vec![BigRational::zero(); 2 * a.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        CycloRat::from_vec(a.l, prod)
    }
}

impl Zero for CycloRat {
    fn zero() -> Self {
        CycloRat {
            l: 0,
            coeffs: vec![],
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl One for CycloRat {
    fn one() -> Self {
        CycloRat {
            l: 0,
            coeffs: vec![BigRational::one()],
        }
    }
}

impl Ring for CycloRat {
    fn from_int(n: i64) -> Self {
        let q = BigRational::from_integer(BigInt::from(n));
        CycloRat {
            l: 0,
            coeffs: if q.is_zero() { vec![] } else { vec![q] },
        }
    }
}

impl Field for CycloRat {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in Q[v]/Phi_l");
        if self.l == 0 {
            return CycloRat {
                l: 0,
                coeffs: vec![self.coeffs[0].recip()],
            };
        }
        // Extended Euclid in Q[v]: find u with u * self = 1 mod Phi_l.
        let phi: Vec<BigRational> = phi_coeffs(self.l)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let (g, u) = ext_gcd_rat(self.coeffs.clone(), phi.clone());
        // g is a nonzero constant since Phi_l is irreducible and self != 0
        let g0 = g
            .iter()
            .rev()
            .find(|c| !c.is_zero())
            .expect("gcd nonzero")
            .clone();
        assert!(
            g.iter().enumerate().all(|(i, c)| i == 0 || c.is_zero()),
            "Phi_l not coprime to element"
        );
        let scaled: Vec<BigRational> = u.into_iter().map(|c| c / &g0).collect();
        CycloRat::from_vec(self.l, scaled)
    }
}

/// Extended Euclid over Q[v] returning (gcd, u) with u*a = gcd mod b.
fn ext_gcd_rat(
    a: Vec<BigRational>,
    b: Vec<BigRational>,
) -> (Vec<BigRational>, Vec<BigRational>) {
    fn deg(p: &[BigRational]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }
    fn divmod(
        mut a: Vec<BigRational>,
        b: &[BigRational],
    ) -> (Vec<BigRational>, Vec<BigRational>) {
        let db = deg(b).expect("division by zero polynomial");
        let lead = b[db].clone();
        let mut q = vec![BigRational::zero(); a.len()];
        while let Some(da) = deg(&a) {
            if da < db {
                break;
            }
            let f = &a[da] / &lead;
            q[da - db] = f.clone();
            for i in 0..=db {
                let t = &f * &b[i];
                a[da - db + i] -= t;
            }
        }
        (q, a)
    }
    fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        out
    }
    fn sub(mut a: Vec<BigRational>, b: &[BigRational]) -> Vec<BigRational> {
        if a.len() < b.len() {
            a.resize(b.len(), BigRational::zero());
        }
        for (i, y) in b.iter().enumerate() {
            a[i] -= y;
        }
        a
    }

    // invariant: r0 = u0 * a mod (original b), r1 = u1 * a mod (original b)
    let mut r0 = a;
    let mut r1 = b;
    let mut u0 = vec![BigRational::one()];
    let mut u1 = vec![BigRational::zero()];
    while deg(&r1).is_some() {
        let (q, rem) = divmod(r0.clone(), &r1);
        let new_u = sub(u0, &mul(&q, &u1));
        r0 = r1;
        r1 = rem;
        u0 = u1;
        u1 = new_u;
    }
    (r0, u0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_standard_values() {
        // l=4 -> v^2+1, l=6 -> v^2-v+1, l=3 -> v^2+v+1
        let p4 = cyclotomic(4);
        assert_eq!(p4, LaurentPoly::v_pow(2) + LaurentPoly::one());
        let p6 = cyclotomic(6);
        assert_eq!(
            p6,
            LaurentPoly::v_pow(2) - LaurentPoly::v() + LaurentPoly::one()
        );
        let p3 = cyclotomic(3);
        assert_eq!(
            p3,
            LaurentPoly::v_pow(2) + LaurentPoly::v() + LaurentPoly::one()
        );
    }

    #[test]
    fn cyclotomic_product_identity() {
        // prod_{d | l} Phi_d = v^l - 1
        for l in 1u32..=30 {
            let mut prod = LaurentPoly::one();
            for d in 1..=l {
                if l % d == 0 {
                    prod = prod * cyclotomic(d);
                }
            }
            assert_eq!(prod, LaurentPoly::v_pow(l as i64) - LaurentPoly::one());
        }
    }

    #[test]
    fn reduce_examples() {
        // v + v^-1 = 0 mod Phi_4
        let x = LaurentPoly::v() + LaurentPoly::v_pow(-1);
        assert!(CycloInt::reduce(&x, 4).is_zero());
        // v^2 = v - 1 mod Phi_6
        let y = CycloInt::reduce(&LaurentPoly::v_pow(2), 6);
        let expect = CycloInt::reduce(&(LaurentPoly::v() - LaurentPoly::one()), 6);
        assert_eq!(y, expect);
        // 1 -> 1
        assert_eq!(
            CycloInt::reduce(&LaurentPoly::one(), 12),
            CycloInt::constant(12, 1)
        );
    }

    #[test]
    fn reduce_is_ring_hom_and_idempotent() {
        let a = LaurentPoly::term(3, 5) + LaurentPoly::term(-2, -3) + LaurentPoly::one();
        let b = LaurentPoly::term(1, 2) + LaurentPoly::term(4, -1);
        for l in [3u32, 4, 6, 7, 12] {
            let ra = CycloInt::reduce(&a, l);
            let rb = CycloInt::reduce(&b, l);
            assert_eq!(
                CycloInt::reduce(&(a.clone() * b.clone()), l),
                ra.clone() * rb.clone()
            );
            assert_eq!(CycloInt::reduce(&(a.clone() + b.clone()), l), ra + rb);
        }
    }

    #[test]
    fn v_is_unit() {
        for l in 1u32..=14 {
            let v = CycloInt::reduce(&LaurentPoly::v(), l);
            let vinv = CycloInt::v_inverse(l);
            assert_eq!(v * vinv, CycloInt::constant(l, 1));
        }
    }

    #[test]
    fn cyclorat_field_inverse() {
        for l in [3u32, 4, 5, 6, 8, 12] {
            let x = CycloRat::from_vec(
                l,
                vec![
                    BigRational::from_integer(BigInt::from(2)),
                    BigRational::from_integer(BigInt::from(3)),
                ],
            );
            let prod = x.clone() * x.inv();
            assert_eq!(prod, CycloRat::from_int(1));
        }
    }
}
