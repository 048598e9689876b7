//! Two-sided ideals generated by idempotents whose dominant weight lies in a
//! saturated set, the annihilator characterization, and quotient algebras.

use super::linalg::{nullspace, Echelon};
use super::weyl::WeylModule;
use super::{from_vec, to_vec};
use crate::cartan::{SaturatedSet, Weight};
use crate::error::Result;
use crate::ring::Field;
use crate::schur::{Algebra, SchurElement, ThetaMatrix};

/// Dominant representative of an idempotent weight: sort descending.
fn dominant_of(mu: &[u32]) -> Weight {
    let mut v: Vec<i64> = mu.iter().map(|&x| x as i64).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Weight::new(v)
}

pub struct IdealSubspace<F: Field> {
    /// idempotent weights seeding the ideal
    pub seeds: Vec<Vec<u32>>,
    pub echelon: Echelon<F>,
}

impl<F: Field> IdealSubspace<F> {
    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Re-verify closure under one-sided multiplication by every generator.
    pub fn check_two_sided(&self, alg: &Algebra<F>) -> bool {
        let gens: Vec<ThetaMatrix> = alg
            .table
            .ops
            .keys()
            .map(|k| ThetaMatrix::parse_key(k).unwrap())
            .collect();
        for row in self.echelon.rows() {
            let x = from_vec(row, &alg.table);
            for g in &gens {
                let left = alg.apply_generator_key(&g.key(), &x);
                let right = alg.multiply(&x, &SchurElement::basis(g.clone()));
                if !self.echelon.contains(&to_vec(&left, &alg.table))
                    || !self.echelon.contains(&to_vec(&right, &alg.table))
                {
                    return false;
                }
            }
        }
        true
    }
}

/// The two-sided ideal generated by { 1_mu : dominant(mu) in P }.
pub fn ideal_generated<F: Field>(alg: &Algebra<F>, p: &SaturatedSet) -> Result<IdealSubspace<F>> {
    let dim_s = alg.table.dim();
    let mut seeds = Vec::new();
    let mut echelon = Echelon::new(dim_s);
    let mut work: Vec<SchurElement<F>> = Vec::new();
    for mu in alg.table.diagonal_weights() {
        if p.contains(&dominant_of(&mu)) {
            let x = SchurElement::basis(ThetaMatrix::diagonal(&mu));
            if echelon.insert(to_vec(&x, &alg.table)) {
                work.push(x);
            }
            seeds.push(mu);
        }
    }
    let gens: Vec<(String, ThetaMatrix)> = alg
        .table
        .ops
        .keys()
        .map(|k| Ok((k.clone(), ThetaMatrix::parse_key(k)?)))
        .collect::<Result<_>>()?;
    while let Some(x) = work.pop() {
        for (key, g) in &gens {
            for y in [
                alg.apply_generator_key(key, &x),
                alg.multiply(&x, &SchurElement::basis(g.clone())),
            ] {
                if y.is_zero() {
                    continue;
                }
                if echelon.insert(to_vec(&y, &alg.table)) {
                    work.push(y);
                }
            }
        }
    }
    Ok(IdealSubspace { seeds, echelon })
}

/// Verify that the idempotent-generated ideal equals the annihilator of the
/// direct sum of the Weyl modules outside P. The caller supplies the module
/// for each excluded dominant weight (generic, or specialized).
pub fn annihilator_check<F: Field>(
    alg: &Algebra<F>,
    p: &SaturatedSet,
    make_weyl: &dyn Fn(&[u32]) -> Result<WeylModule<F>>,
) -> Result<bool> {
    let dim_s = alg.table.dim();
    let mut constraints: Vec<Vec<F>> = Vec::new();
    for lam in p.complement() {
        // weights are classes mod (1,...,1); recover the degree-r partition
        let Some(lift) = lam.lift_with_sum(alg.table.r as i64) else {
            continue;
        };
        if lift.iter().any(|&x| x < 0) {
            continue;
        }
        let lambda: Vec<u32> = lift.iter().map(|&x| x as u32).collect();
        let w = make_weyl(&lambda)?;
        let d = w.dim();
        let actions: Vec<Vec<Vec<F>>> = (0..dim_s).map(|ai| w.action(alg, ai)).collect();
        for m in 0..d {
            for j in 0..d {
                constraints.push((0..dim_s).map(|ai| actions[ai][m][j].clone()).collect());
            }
        }
    }
    // transpose: rows are constraints on the coefficient vector
    let ann = nullspace(dim_s, constraints);
    let ideal = ideal_generated(alg, p)?;
    if ann.len() != ideal.dim() {
        return Ok(false);
    }
    Ok(ann.iter().all(|v| ideal.echelon.contains(v)))
}

/// At a root of unity the based ideal is by definition the image of the
/// generic one, while the literal annihilator can be strictly larger once
/// Weyl modules become reducible. So the specialized form of the
/// characterization is: the idempotent-generated ideal keeps the generic
/// dimension, and it still annihilates every Weyl module outside P.
pub fn annihilator_check_specialized<F: Field, G: Field>(
    generic: &Algebra<F>,
    alg: &Algebra<G>,
    p: &SaturatedSet,
    make_weyl: &dyn Fn(&[u32]) -> Result<WeylModule<G>>,
) -> Result<bool> {
    let generic_dim = ideal_generated(generic, p)?.dim();
    let ideal = ideal_generated(alg, p)?;
    if ideal.dim() != generic_dim {
        return Ok(false);
    }
    let dim_s = alg.table.dim();
    for lam in p.complement() {
        let Some(lift) = lam.lift_with_sum(alg.table.r as i64) else {
            continue;
        };
        if lift.iter().any(|&x| x < 0) {
            continue;
        }
        let lambda: Vec<u32> = lift.iter().map(|&x| x as u32).collect();
        let w = make_weyl(&lambda)?;
        let actions: Vec<Vec<Vec<G>>> = (0..dim_s).map(|ai| w.action(alg, ai)).collect();
        for row in ideal.echelon.rows() {
            for m in 0..w.dim() {
                for j in 0..w.dim() {
                    let mut s = G::zero();
                    for ai in 0..dim_s {
                        if !row[ai].is_zero() {
                            s = s + row[ai].clone() * actions[ai][m][j].clone();
                        }
                    }
                    if !s.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// S modulo an idempotent-generated ideal, with coordinates given by the
/// basis matrices whose classes survive.
pub struct QuotientAlgebra<F: Field> {
    pub ideal: IdealSubspace<F>,
    pub coords: Vec<usize>,
}

impl<F: Field> QuotientAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn project(&self, x: &SchurElement<F>, alg: &Algebra<F>) -> Vec<F> {
        let red = self.ideal.echelon.reduce(to_vec(x, &alg.table));
        self.coords.iter().map(|&k| red[k].clone()).collect()
    }

    /// Lift quotient coordinates back to a representative in S.
    pub fn section(&self, q: &[F], alg: &Algebra<F>) -> SchurElement<F> {
        let mut x = SchurElement::zero();
        for (&k, c) in self.coords.iter().zip(q) {
            x.add_term(alg.table.basis[k].clone(), c.clone());
        }
        x
    }

    pub fn multiply(&self, a: &[F], b: &[F], alg: &Algebra<F>) -> Vec<F> {
        let x = self.section(a, alg);
        let y = self.section(b, alg);
        self.project(&alg.multiply(&x, &y), alg)
    }

    /// The class of the sum of surviving idempotents, and whether it is a
    /// two-sided identity for the quotient product.
    pub fn check_identity(&self, alg: &Algebra<F>, p: &SaturatedSet) -> bool {
        let mut e = SchurElement::zero();
        for mu in alg.table.diagonal_weights() {
            if !p.contains(&dominant_of(&mu)) {
                e.add_term(ThetaMatrix::diagonal(&mu), F::one());
            }
        }
        let ec = self.project(&e, alg);
        for k in 0..self.dim() {
            let mut unit = vec![F::zero(); self.dim()];
            unit[k] = F::one();
            if self.multiply(&ec, &unit, alg) != unit || self.multiply(&unit, &ec, alg) != unit {
                return false;
            }
        }
        true
    }
}

pub fn quotient<F: Field>(alg: &Algebra<F>, p: &SaturatedSet) -> Result<QuotientAlgebra<F>> {
    let ideal = ideal_generated(alg, p)?;
    let coords: Vec<usize> = (0..alg.table.dim())
        .filter(|k| !ideal.echelon.pivots().contains(k))
        .collect();
    Ok(QuotientAlgebra { ideal, coords })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::saturate;
    use crate::gschur::dominant_window;
    use crate::gschur::weyl::weyl_module;
    use crate::laurent::{LaurentPoly, RatFunc};
    use crate::schur::build_table;

    fn generic_field(n: usize, r: u32) -> Algebra<RatFunc> {
        Algebra::generic(build_table(n, r).unwrap())
            .unwrap()
            .specialize(|p: &LaurentPoly| RatFunc::from(p.clone()))
    }

    #[test]
    fn ideal_dimensions_2_2() {
        let alg = generic_field(2, 2);
        let window = dominant_window(2, 2);
        // saturation of (2,0): excludes only (1,1); ideal is the 3x3 block
        let p = saturate(&Weight::new(vec![2, 0]), &window).unwrap();
        let ideal = ideal_generated(&alg, &p).unwrap();
        assert_eq!(ideal.dim(), 9);
        assert!(ideal.check_two_sided(&alg));
        // everything dominant: the ideal contains the identity
        let all = SaturatedSet::from_complement(vec![], &window).unwrap();
        assert_eq!(ideal_generated(&alg, &all).unwrap().dim(), 10);
        // nothing: zero ideal
        let none = SaturatedSet::from_complement(window.clone(), &window).unwrap();
        assert_eq!(ideal_generated(&alg, &none).unwrap().dim(), 0);
    }

    #[test]
    fn annihilator_matches_ideal_2_2() {
        let alg = generic_field(2, 2);
        let window = dominant_window(2, 2);
        let mk = |l: &[u32]| weyl_module(&alg, l);
        for complement in [
            vec![],
            vec![Weight::new(vec![1, 1])],
            window.clone(),
        ] {
            let p = SaturatedSet::from_complement(complement, &window).unwrap();
            assert!(annihilator_check(&alg, &p, &mk).unwrap());
        }
    }

    #[test]
    fn specialized_annihilator_2_2_l4() {
        use crate::gschur::weyl::{ratfunc_to_cyclo, specialize_weyl};
        use crate::laurent::CycloInt;
        let alg = generic_field(2, 2);
        let cy = Algebra::generic(build_table(2, 2).unwrap())
            .unwrap()
            .specialize(|p: &LaurentPoly| CycloInt::reduce(p, 4).to_rat());
        let window = dominant_window(2, 2);
        let mk = |l: &[u32]| {
            let w = weyl_module(&alg, l)?;
            specialize_weyl(&w, &|f| ratfunc_to_cyclo(f, 4))
        };
        for complement in [vec![], vec![Weight::new(vec![1, 1])], window.clone()] {
            let p = SaturatedSet::from_complement(complement, &window).unwrap();
            assert!(annihilator_check_specialized(&alg, &cy, &p, &mk).unwrap());
        }
        // the literal annihilator is strictly larger for the zero ideal at a
        // root of unity, which is exactly why the specialized form exists
        let none = SaturatedSet::from_complement(window.clone(), &window).unwrap();
        assert!(!annihilator_check(&cy, &none, &mk).unwrap());
    }

    #[test]
    fn quotient_dimensions_and_identity() {
        let alg = generic_field(2, 2);
        let window = dominant_window(2, 2);
        let p = saturate(&Weight::new(vec![2, 0]), &window).unwrap();
        let q = quotient(&alg, &p).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(q.check_identity(&alg, &p));
        let none = SaturatedSet::from_complement(window.clone(), &window).unwrap();
        let q = quotient(&alg, &none).unwrap();
        assert_eq!(q.dim(), 10);
        assert!(q.check_identity(&alg, &none));
    }

    #[test]
    fn nested_ideals_are_nested() {
        let alg = generic_field(2, 4);
        let window = dominant_window(2, 4);
        let p_small = saturate(&Weight::new(vec![4, 0]), &window).unwrap();
        let p_big = saturate(&Weight::new(vec![3, 1]), &window).unwrap();
        let i_small = ideal_generated(&alg, &p_small).unwrap();
        let i_big = ideal_generated(&alg, &p_big).unwrap();
        assert!(i_small.dim() <= i_big.dim());
        for row in i_small.echelon.rows() {
            assert!(i_big.echelon.contains(row));
        }
    }
}
