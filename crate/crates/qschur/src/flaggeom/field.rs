//! Small prime-power fields F_q, q = p^e <= 64, with dense operation tables.
//!
//! Elements are indices 0..q; index 0 is zero and index 1 is one. For e > 1
//! the index is read base p as the coefficient vector of a polynomial which
//! is reduced modulo a monic irreducible of degree e found by search.

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct PrimePowerField {
    pub q: u64,
    pub p: u64,
    pub e: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    for p in 2..=q {
        if is_prime(p) && q % p == 0 {
            let mut e = 0;
            let mut m = q;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            return if m == 1 { Some((p, e)) } else { None };
        }
    }
    None
}

/// Polynomial arithmetic over F_p on coefficient vectors (low degree first).
fn poly_mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // reduce by the monic modulus
    for d in (e..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for k in 0..e {
            let t = (c * modulus[k]) % p;
            prod[d - e + k] = (prod[d - e + k] + p * p - t) % p;
        }
    }
    prod.truncate(e);
    prod.resize(e, 0);
    prod
}

fn idx_to_poly(mut i: u64, p: u64, e: u32) -> Vec<u64> {
    let mut v = Vec::with_capacity(e as usize);
    for _ in 0..e {
        v.push(i % p);
        i /= p;
    }
    v
}

fn poly_to_idx(v: &[u64], p: u64) -> u64 {
    v.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Find a monic irreducible polynomial of degree e over F_p, as the vector of
/// its e lower coefficients (the leading 1 is implicit). Irreducibility is
/// checked by the absence of roots together with trial division by lower
/// degree monic polynomials.
fn find_irreducible(p: u64, e: u32) -> Vec<u64> {
    let count = p.pow(e);
    'candidates: for lower in 0..count {
        let cand: Vec<u64> = idx_to_poly(lower, p, e);
        // full candidate: cand + v^e
        let full: Vec<u64> = cand.iter().cloned().chain(std::iter::once(1)).collect();
        // trial division by all monic polynomials of degree 1..=e/2
        for d in 1..=e / 2 {
            for lowdiv in 0..p.pow(d) {
                let divisor: Vec<u64> = idx_to_poly(lowdiv, p, d)
                    .into_iter()
                    .chain(std::iter::once(1))
                    .collect();
                if poly_divides(&divisor, &full, p) {
                    continue 'candidates;
                }
            }
        }
        return cand;
    }
    unreachable!("irreducible polynomial exists for every (p, e)")
}

fn poly_divides(divisor: &[u64], dividend: &[u64], p: u64) -> bool {
    let dd = divisor.len() - 1;
    let mut rem: Vec<u64> = dividend.to_vec();
    while rem.len() > dd {
        let c = *rem.last().unwrap();
        let top = rem.len() - 1;
        if c != 0 {
            // divisor is monic
            for k in 0..dd {
                let t = (c * divisor[k]) % p;
                rem[top - dd + k] = (rem[top - dd + k] + p * p - t) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

impl PrimePowerField {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 || q > 64 {
            return Err(Error::BadParams(format!("field size {} unsupported", q)));
        }
        let Some((p, e)) = factor_prime_power(q) else {
            return Err(Error::BadParams(format!("{} is not a prime power", q)));
        };
        let n = q as usize;
        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        let mut neg = vec![0u8; n];
        let mut inv = vec![0u8; n];
        if e == 1 {
            for a in 0..q {
                for b in 0..q {
                    add[(a * q + b) as usize] = ((a + b) % p) as u8;
                    mul[(a * q + b) as usize] = ((a * b) % p) as u8;
                }
                neg[a as usize] = ((p - a) % p) as u8;
            }
        } else {
            let modulus: Vec<u64> = find_irreducible(p, e);
            let modulus_full: Vec<u64> = modulus
                .iter()
                .cloned()
                .chain(std::iter::once(1))
                .collect();
            for a in 0..q {
                let pa = idx_to_poly(a, p, e);
                let mut na = pa.clone();
                for c in &mut na {
                    *c = (p - *c) % p;
                }
                neg[a as usize] = poly_to_idx(&na, p) as u8;
                for b in 0..q {
                    let pb = idx_to_poly(b, p, e);
                    let sum: Vec<u64> = pa.iter().zip(&pb).map(|(x, y)| (x + y) % p).collect();
                    add[(a * q + b) as usize] = poly_to_idx(&sum, p) as u8;
                    let prod = poly_mul_mod(&pa, &pb, &modulus_full, p);
                    mul[(a * q + b) as usize] = poly_to_idx(&prod, p) as u8;
                }
            }
        }
        // inverses by scanning the multiplication table
        for a in 1..n {
            let mut found = false;
            for b in 1..n {
                if mul[a * n + b] == 1 {
                    inv[a] = b as u8;
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(Error::BadParams(format!(
                    "no inverse for element {} in F_{}",
                    a, q
                )));
            }
        }
        let f = PrimePowerField {
            q,
            p,
            e,
            add,
            mul,
            neg,
            inv,
        };
        f.verify_axioms()?;
        Ok(f)
    }

    /// Field-axiom verification: exhaustive for q <= 9, sampled beyond.
    fn verify_axioms(&self) -> Result<()> {
        let q = self.q;
        let check = |a: u8, b: u8, c: u8| -> bool {
            self.add(a, b) == self.add(b, a)
                && self.mul(a, b) == self.mul(b, a)
                && self.add(self.add(a, b), c) == self.add(a, self.add(b, c))
                && self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
                && self.mul(a, self.add(b, c)) == self.add(self.mul(a, b), self.mul(a, c))
        };
        let ok = if q <= 9 {
            (0..q as u8).all(|a| {
                (0..q as u8).all(|b| (0..q as u8).all(|c| check(a, b, c)))
            })
        } else {
            // deterministic sample
            let mut state = 0x9e3779b97f4a7c15u64;
            (0..4000).all(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let a = ((state >> 5) % q) as u8;
                let b = ((state >> 23) % q) as u8;
                let c = ((state >> 41) % q) as u8;
                check(a, b, c)
            })
        };
        if !ok {
            return Err(Error::BadParams(format!("field axioms failed for q={}", q)));
        }
        for a in 0..q as u8 {
            if self.add(a, self.neg(a)) != 0 {
                return Err(Error::BadParams("additive inverse failure".into()));
            }
            if a != 0 && self.mul(a, self.inv(a)) != 1 {
                return Err(Error::BadParams("multiplicative inverse failure".into()));
            }
        }
        Ok(())
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }
}
