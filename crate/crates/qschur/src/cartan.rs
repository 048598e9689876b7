//! Cartan data, type A root data, the l-modified datum, dominance order,
//! Weyl reflections and saturated sets.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A weight of the type A root datum X = Z^n / Z(1,...,1), stored as the
/// canonical representative with minimum entry 0, so equality is decidable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(entries: impl Into<Vec<i64>>) -> Self {
        let mut v = entries.into();
        assert!(!v.is_empty());
        let min = *v.iter().min().unwrap();
        for x in &mut v {
            *x -= min;
        }
        Weight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// The pairing with the i-th simple coroot (1-based i < n):
    /// <alpha-check_i, lambda> = lambda_i - lambda_{i+1}. Lift independent.
    pub fn coroot_pairing(&self, i: usize) -> i64 {
        assert!(i >= 1 && i < self.0.len());
        self.0[i - 1] - self.0[i]
    }

    pub fn is_dominant(&self) -> bool {
        (1..self.0.len()).all(|i| self.coroot_pairing(i) >= 0)
    }

    /// Scale by a positive integer (well defined on X).
    pub fn scale(&self, k: i64) -> Weight {
        assert!(k >= 1);
        Weight::new(self.0.iter().map(|x| x * k).collect::<Vec<_>>())
    }

    /// The lift with prescribed coordinate sum, when one exists: lifts differ
    /// by multiples of (1,...,1), so the sum is adjustable by multiples of n.
    pub fn lift_with_sum(&self, total: i64) -> Option<Vec<i64>> {
        let n = self.0.len() as i64;
        let s: i64 = self.0.iter().sum();
        let diff = total - s;
        if diff % n != 0 {
            return None;
        }
        let t = diff / n;
        Some(self.0.iter().map(|x| x + t).collect())
    }
}

/// A Cartan datum: a finite index set with a symmetric integer pairing.
#[derive(Clone, Debug, PartialEq)]
pub struct CartanDatum {
    pairing: Vec<Vec<i64>>,
}

impl CartanDatum {
    pub fn new(pairing: Vec<Vec<i64>>) -> Result<Self> {
        let m = pairing.len();
        if pairing.iter().any(|row| row.len() != m) {
            return Err(Error::BadParams("pairing matrix must be square".into()));
        }
        for i in 0..m {
            let d = pairing[i][i];
            if d < 2 || d % 2 != 0 {
                return Err(Error::BadParams(format!(
                    "i.i = {} not in {{2,4,6,...}} at index {}",
                    d, i
                )));
            }
            for j in 0..m {
                if pairing[i][j] != pairing[j][i] {
                    return Err(Error::BadParams("pairing matrix must be symmetric".into()));
                }
                if i != j {
                    let num = 2 * pairing[i][j];
                    if num > 0 || num % d != 0 {
                        return Err(Error::BadParams(format!(
                            "2(i.j)/(i.i) = 2*{}/{} not a nonpositive integer",
                            pairing[i][j], d
                        )));
                    }
                }
            }
        }
        Ok(CartanDatum { pairing })
    }

    /// The Cartan datum of type A_{n-1} (i.i = 2, adjacent pairing -1).
    pub fn type_a(n: usize) -> Self {
        assert!(n >= 2);
        let m = n - 1;
        let mut pairing = vec![vec![0i64; m]; m];
        for i in 0..m {
            pairing[i][i] = 2;
            if i + 1 < m {
                pairing[i][i + 1] = -1;
                pairing[i + 1][i] = -1;
            }
        }
        CartanDatum { pairing }
    }

    pub fn size(&self) -> usize {
        self.pairing.len()
    }

    pub fn dot(&self, i: usize, j: usize) -> i64 {
        self.pairing[i][j]
    }

    /// The Cartan matrix entry a_{ij} = 2(i.j)/(i.i).
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        2 * self.pairing[i][j] / self.pairing[i][i]
    }
}

/// The smallest positive integer l_i with l_i * (i.i/2) in ell*Z.
pub fn l_factor(datum: &CartanDatum, i: usize, ell: u32) -> u32 {
    let half = (datum.dot(i, i) / 2) as u32;
    let g = num_integer::Integer::gcd(&half, &ell);
    ell / g
}

/// The l-modified Cartan datum (I, o) with i o j = l_i l_j (i.j).
#[derive(Clone, Debug)]
pub struct ModifiedDatum {
    pub base: CartanDatum,
    pub ell: u32,
    pub l_factors: Vec<u32>,
    pub star: CartanDatum,
}

impl ModifiedDatum {
    pub fn new(base: CartanDatum, ell: u32) -> Result<Self> {
        if ell == 0 {
            return Err(Error::BadParams("ell must be positive".into()));
        }
        let m = base.size();
        let l_factors: Vec<u32> = (0..m).map(|i| l_factor(&base, i, ell)).collect();
        let star_pairing: Vec<Vec<i64>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| l_factors[i] as i64 * l_factors[j] as i64 * base.dot(i, j))
                    .collect()
            })
            .collect();
        let star = CartanDatum::new(star_pairing)?;
        Ok(ModifiedDatum {
            base,
            ell,
            l_factors,
            star,
        })
    }
}

/// The type A root datum of rank n: X = Z^n/Z(1,...,1).
#[derive(Clone, Debug)]
pub struct RootDatumTypeA {
    pub n: usize,
}

impl RootDatumTypeA {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2);
        RootDatumTypeA { n }
    }

    pub fn cartan(&self) -> CartanDatum {
        CartanDatum::type_a(self.n)
    }

    /// The simple root alpha_i (1-based, i < n).
    pub fn simple_root(&self, i: usize) -> Weight {
        assert!(i >= 1 && i < self.n);
        let mut v = vec![0i64; self.n];
        v[i - 1] = 1;
        v[i] = -1;
        Weight::new(v)
    }
}

/// Dominance: lambda <= mu iff mu - lambda is a nonnegative combination of
/// simple roots. Solved on lifts with matching coordinate sums via partial
/// sums; the answer does not depend on the chosen lifts.
pub fn dominance_leq(lambda: &Weight, mu: &Weight) -> Result<bool> {
    if lambda.rank() != mu.rank() {
        return Err(Error::RankMismatch {
            expected: lambda.rank(),
            got: mu.rank(),
        });
    }
    let n = lambda.rank() as i64;
    let mu_sum: i64 = mu.entries().iter().sum();
    let Some(lam) = lambda.lift_with_sum(mu_sum) else {
        return Ok(false);
    };
    // need the coordinate sums to agree mod n for comparability
    let _ = n;
    let mut partial = 0i64;
    for i in 0..lam.len() {
        partial += mu.entries()[i] - lam[i];
        if partial < 0 {
            return Ok(false);
        }
    }
    Ok(partial == 0)
}

/// Is lambda in X* = { lambda : <alpha-check_i, lambda> in l_i Z for all i }?
/// For type A (all l_i = ell) this holds iff lambda = ell * mu in X.
pub fn in_xstar(lambda: &Weight, ell: u32) -> bool {
    (1..lambda.rank()).all(|i| lambda.coroot_pairing(i) % ell as i64 == 0)
}

/// The simple reflection s_i(lambda) = lambda - <alpha-check_i, lambda> alpha_i.
pub fn weyl_reflect(i: usize, lambda: &Weight) -> Weight {
    let p = lambda.coroot_pairing(i);
    let mut v: Vec<i64> = lambda.entries().to_vec();
    v[i - 1] -= p;
    v[i] += p;
    Weight::new(v)
}

/// A saturated set P of dominant weights, stored by its finite complement
/// Omega+ = X+ \ P inside a user-supplied window of dominant weights.
/// Upward-closedness of P (equivalently downward-closedness of the
/// complement) is validated only within that window.
#[derive(Clone, Debug, PartialEq)]
pub struct SaturatedSet {
    complement: Vec<Weight>,
}

impl SaturatedSet {
    /// Build from an explicit complement list; validates downward closure of
    /// the complement within the given window.
    pub fn from_complement(complement: Vec<Weight>, window: &[Weight]) -> Result<Self> {
        for w in &complement {
            if !w.is_dominant() {
                return Err(Error::NotDominant(w.entries().to_vec()));
            }
        }
        for w in window {
            if !w.is_dominant() {
                continue;
            }
            for c in &complement {
                // anything in the window below a complement element must also
                // be excluded from P
                if dominance_leq(w, c)? && !complement.contains(w) {
                    return Err(Error::BadParams(format!(
                        "complement not downward closed: {:?} <= {:?} but missing",
                        w, c
                    )));
                }
            }
        }
        let mut complement = complement;
        complement.sort();
        complement.dedup();
        Ok(SaturatedSet { complement })
    }

    pub fn complement(&self) -> &[Weight] {
        &self.complement
    }

    /// Membership in P for a dominant weight.
    pub fn contains(&self, lambda: &Weight) -> bool {
        lambda.is_dominant() && !self.complement.contains(lambda)
    }
}

/// The saturation of a dominant weight lambda relative to a window:
/// P = { mu dominant : mu >= lambda }, represented by its complement within
/// the window.
pub fn saturate(lambda: &Weight, window: &[Weight]) -> Result<SaturatedSet> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.entries().to_vec()));
    }
    let mut complement = Vec::new();
    for w in window {
        if !w.is_dominant() {
            continue;
        }
        if !dominance_leq(lambda, w)? {
            complement.push(w.clone());
        }
    }
    SaturatedSet::from_complement(complement, window)
}
