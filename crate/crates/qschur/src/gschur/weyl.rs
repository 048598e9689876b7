//! Weyl modules realized inside the algebra: the cyclic module S.1_lambda
//! modulo the submodule generated by E_i 1_lambda and the too-high divided
//! powers F_i^{(m_i+1)} 1_lambda. Computed by closing the generator seeds
//! under left multiplication and row-reducing over the coefficient field.

use super::linalg::Echelon;
use super::to_vec;
use crate::error::{Error, Result};
use crate::laurent::{CycloInt, CycloRat, RatFunc};
use crate::ring::Field;
use crate::schur::{psi_matrix, Algebra, GenKind, GeneratorSymbol, SchurElement};
use num_traits::Zero;
use std::collections::BTreeMap;

pub struct WeylModule<F: Field> {
    pub lambda: Vec<u32>,
    /// basis indices with column weight lambda (the ambient cyclic module)
    pub cyclic_coords: Vec<usize>,
    /// echelon basis of the defining submodule, in full S-coordinates
    pub submodule: Echelon<F>,
    /// non-pivot cyclic coordinates: a basis of the quotient
    pub quotient_coords: Vec<usize>,
}

impl<F: Field> WeylModule<F> {
    pub fn dim(&self) -> usize {
        self.quotient_coords.len()
    }

    /// Multiplicity of each row weight in the quotient.
    pub fn weight_multiplicities(&self, alg: &Algebra<F>) -> BTreeMap<Vec<u32>, usize> {
        let mut out = BTreeMap::new();
        for &j in &self.quotient_coords {
            let mu = alg.table.basis[j].row_sums();
            *out.entry(mu).or_insert(0) += 1;
        }
        out
    }

    /// The matrix of left multiplication by basis element ai on the
    /// quotient, columns indexed by quotient_coords.
    pub fn action(&self, alg: &Algebra<F>, ai: usize) -> Vec<Vec<F>> {
        let d = self.dim();
        let mut cols = Vec::with_capacity(d);
        for &j in &self.quotient_coords {
            let y = alg.multiply_basis(ai, &SchurElement::basis(alg.table.basis[j].clone()));
            let red = self.submodule.reduce(to_vec(&y, &alg.table));
            cols.push(
                self.quotient_coords
                    .iter()
                    .map(|&k| red[k].clone())
                    .collect::<Vec<F>>(),
            );
        }
        // transpose to row-major matrix[m][j]
        (0..d)
            .map(|m| (0..d).map(|j| cols[j][m].clone()).collect())
            .collect()
    }
}

/// The highest-weight module for a dominant lambda realizable in the table.
pub fn weyl_module<F: Field>(alg: &Algebra<F>, lambda: &[u32]) -> Result<WeylModule<F>> {
    let n = alg.table.n;
    let r = alg.table.r;
    if lambda.len() != n || lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotDominant(
            lambda.iter().map(|&x| x as i64).collect(),
        ));
    }
    if lambda.iter().sum::<u32>() != r {
        return Err(Error::BadParams(format!(
            "weight {:?} not realizable at degree {}",
            lambda, r
        )));
    }
    let dim_s = alg.table.dim();
    let lam_i64: Vec<i64> = lambda.iter().map(|&x| x as i64).collect();

    let mut seeds: Vec<SchurElement<F>> = Vec::new();
    for i in 1..n {
        for (kind, power) in [
            (GenKind::E, 1),
            (GenKind::F, (lambda[i - 1] - lambda[i]) + 1),
        ] {
            let sym = GeneratorSymbol {
                kind,
                index: i,
                power,
                weight: lam_i64.clone(),
            };
            if let Some(g) = psi_matrix(&sym, n) {
                if alg.table.index_of(&g).is_some() {
                    seeds.push(SchurElement::basis(g));
                }
            }
        }
    }

    let mut submodule = Echelon::new(dim_s);
    let mut work = Vec::new();
    for s in seeds {
        if submodule.insert(to_vec(&s, &alg.table)) {
            work.push(s);
        }
    }
    let keys: Vec<String> = alg.table.ops.keys().cloned().collect();
    while let Some(x) = work.pop() {
        for key in &keys {
            let y = alg.apply_generator_key(key, &x);
            if y.is_zero() {
                continue;
            }
            if submodule.insert(to_vec(&y, &alg.table)) {
                work.push(y);
            }
        }
    }

    let cyclic_coords: Vec<usize> = alg
        .table
        .basis
        .iter()
        .enumerate()
        .filter(|(_, b)| b.col_sums() == lambda)
        .map(|(j, _)| j)
        .collect();
    debug_assert!(submodule.pivots().iter().all(|p| cyclic_coords.contains(p)));
    let quotient_coords: Vec<usize> = cyclic_coords
        .iter()
        .copied()
        .filter(|j| !submodule.pivots().contains(j))
        .collect();
    Ok(WeylModule {
        lambda: lambda.to_vec(),
        cyclic_coords,
        submodule,
        quotient_coords,
    })
}

/// The generic coefficient f(v) = num/den evaluated in the cyclotomic field;
/// errors on a pole (denominator divisible by Phi_l).
pub fn ratfunc_to_cyclo(f: &RatFunc, l: u32) -> Result<CycloRat> {
    let num = CycloInt::reduce(f.num(), l).to_rat();
    let den = CycloInt::reduce(f.den(), l).to_rat();
    if den.is_zero() {
        return Err(Error::DomainMismatch(format!(
            "denominator vanishes at the order-{} root of unity",
            l
        )));
    }
    Ok(num * den.inv())
}

/// Specialize a generically computed module: push the integral submodule
/// basis through the coefficient map. Pivots are unit so the echelon shape
/// survives; the rank therefore cannot drop, and a pole aborts instead.
pub fn specialize_weyl<F2: Field>(
    w: &WeylModule<RatFunc>,
    map: &dyn Fn(&RatFunc) -> Result<F2>,
) -> Result<WeylModule<F2>> {
    let rows: Vec<Vec<F2>> = w
        .submodule
        .rows()
        .iter()
        .map(|row| row.iter().map(map).collect::<Result<Vec<F2>>>())
        .collect::<Result<_>>()?;
    let submodule = Echelon::from_reduced_rows(w.submodule.width(), rows, w.submodule.pivots().to_vec());
    Ok(WeylModule {
        lambda: w.lambda.clone(),
        cyclic_coords: w.cyclic_coords.clone(),
        submodule,
        quotient_coords: w.quotient_coords.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;
    use crate::schur::build_table;

    fn generic_field(n: usize, r: u32) -> Algebra<RatFunc> {
        Algebra::generic(build_table(n, r).unwrap())
            .unwrap()
            .specialize(|p: &LaurentPoly| RatFunc::from(p.clone()))
    }

    #[test]
    fn sl2_degree_two_dimensions() {
        let alg = generic_field(2, 2);
        let top = weyl_module(&alg, &[2, 0]).unwrap();
        assert_eq!(top.dim(), 3);
        let det = weyl_module(&alg, &[1, 1]).unwrap();
        assert_eq!(det.dim(), 1);
        // semisimple block sizes account for the whole algebra
        assert_eq!(alg.dim(), 3 * 3 + 1 * 1);
        // weight multiplicities of the 3-dimensional module are all 1
        let mults = top.weight_multiplicities(&alg);
        assert_eq!(mults.len(), 3);
        assert!(mults.values().all(|&m| m == 1));
    }

    #[test]
    fn degree_four_dimensions() {
        let alg = generic_field(2, 4);
        let dims: Vec<usize> = [[4u32, 0], [3, 1], [2, 2]]
            .iter()
            .map(|l| weyl_module(&alg, l).unwrap().dim())
            .collect();
        assert_eq!(dims, vec![5, 3, 1]);
        assert_eq!(alg.dim(), 25 + 9 + 1);
    }

    #[test]
    fn rejects_bad_weights() {
        let alg = generic_field(2, 2);
        assert!(weyl_module(&alg, &[0, 2]).is_err());
        assert!(weyl_module(&alg, &[3, 0]).is_err());
    }

    #[test]
    fn highest_weight_vector_killed_by_e() {
        let alg = generic_field(2, 2);
        let w = weyl_module(&alg, &[2, 0]).unwrap();
        // E_1 applied to the class of 1_lambda lands in the submodule
        let idem = crate::schur::ThetaMatrix::diagonal(&[2, 0]);
        let x = SchurElement::basis(idem);
        let y = alg.apply_divided(GenKind::E, 1, 1, &x);
        assert!(w.submodule.contains(&to_vec(&y, &alg.table)));
    }

    #[test]
    fn specialization_keeps_rank() {
        let alg = generic_field(2, 2);
        let w = weyl_module(&alg, &[2, 0]).unwrap();
        let sp = specialize_weyl(&w, &|f| ratfunc_to_cyclo(f, 4)).unwrap();
        assert_eq!(sp.dim(), 3);
        assert_eq!(sp.submodule.rank(), w.submodule.rank());
    }
}
