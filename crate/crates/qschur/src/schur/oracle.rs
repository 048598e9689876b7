//! Independent certification of the structure tables: raw convolution
//! counts by full middle-flag enumeration, no fast path, no interpolation.

use super::table::StructureTable;
use super::theta::{theta_enumerate, ThetaMatrix};
use crate::error::Result;
use crate::flaggeom::{count_middle, PrimePowerField};
use crate::laurent::LaurentPoly;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

/// For each C with matching marginals, the counts N_{A,B,C}(q) at the given
/// q values. Rows that vanish at every q are omitted; incompatible (A,B)
/// yield an empty map.
pub fn brute_oracle_product(
    a: &ThetaMatrix,
    b: &ThetaMatrix,
    q_list: &[u64],
    budget: u128,
) -> Result<BTreeMap<ThetaMatrix, Vec<BigInt>>> {
    let mut out = BTreeMap::new();
    if a.col_sums() != b.row_sums() {
        return Ok(out);
    }
    let r = a.total();
    let fields: Vec<PrimePowerField> = q_list
        .iter()
        .map(|&q| PrimePowerField::new(q))
        .collect::<Result<_>>()?;
    for c in theta_enumerate(a.n(), r) {
        if c.row_sums() != a.row_sums() || c.col_sums() != b.col_sums() {
            continue;
        }
        let counts: Vec<BigInt> = fields
            .iter()
            .map(|f| count_middle(a, b, &c, f, budget))
            .collect::<Result<_>>()?;
        if counts.iter().any(|x| !x.is_zero()) {
            out.insert(c, counts);
        }
    }
    Ok(out)
}

fn count_poly_eval(entry: &LaurentPoly, shift: i64, q: u64) -> Option<BigInt> {
    let poly = entry.shifted(shift);
    if poly.iter().any(|(e, _)| *e < 0 || e % 2 != 0) {
        return None;
    }
    Some(poly.eval_at_v2(&BigInt::from(q)))
}

/// Re-verify every stored generator product against full middle-flag
/// enumeration at the held-out sample (never used in interpolation),
/// including the implicit zero entries.
pub fn verify_table_held_out(table: &StructureTable, budget: u128) -> Result<bool> {
    let q = table.provenance.held_out;
    let field = PrimePowerField::new(q)?;
    for (gkey, columns) in &table.ops {
        let g = ThetaMatrix::parse_key(gkey)?;
        let d_g = g.codim_d() as i64;
        for (bi, column) in columns.iter().enumerate() {
            let b = &table.basis[bi];
            if b.row_sums() != g.col_sums() {
                continue;
            }
            let d_b = b.codim_d() as i64;
            for (ci, c) in table.basis.iter().enumerate() {
                if c.row_sums() != g.row_sums() || c.col_sums() != b.col_sums() {
                    continue;
                }
                let entry = column
                    .iter()
                    .find(|(k, _)| *k == ci)
                    .map(|(_, p)| p.clone())
                    .unwrap_or_else(LaurentPoly::zero);
                let d_c = c.codim_d() as i64;
                let predicted = match count_poly_eval(&entry, d_g + d_b - d_c, q) {
                    Some(x) => x,
                    None => return Ok(false),
                };
                if predicted != count_middle(&g, b, c, &field, budget)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Compare an arbitrary product computed through the monomial recursion
/// with brute-force convolution counts at each listed q.
pub fn multiply_matches_counts(
    alg: &crate::schur::Algebra<LaurentPoly>,
    a: &ThetaMatrix,
    b: &ThetaMatrix,
    q_list: &[u64],
    budget: u128,
) -> Result<bool> {
    use crate::schur::SchurElement;
    let z = alg.multiply(&SchurElement::basis(a.clone()), &SchurElement::basis(b.clone()));
    let counts = brute_oracle_product(a, b, q_list, budget)?;
    let d_a = a.codim_d() as i64;
    let d_b = b.codim_d() as i64;
    let mut keys: Vec<ThetaMatrix> = counts.keys().cloned().collect();
    keys.extend(z.support().cloned());
    keys.sort();
    keys.dedup();
    for c in keys {
        let d_c = c.codim_d() as i64;
        let entry = z.coeff(&c);
        for (i, &q) in q_list.iter().enumerate() {
            let predicted = match count_poly_eval(&entry, d_a + d_b - d_c, q) {
                Some(x) => x,
                None => return Ok(false),
            };
            let counted = counts
                .get(&c)
                .map(|v| v[i].clone())
                .unwrap_or_else(BigInt::zero);
            if predicted != counted {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m2(e: [u32; 4]) -> ThetaMatrix {
        ThetaMatrix::new(2, e.to_vec()).unwrap()
    }

    #[test]
    fn r1_product_counts() {
        let map = brute_oracle_product(
            &m2([0, 1, 0, 0]),
            &m2([0, 0, 1, 0]),
            &[2, 3, 4, 5],
            10_000_000,
        )
        .unwrap();
        assert_eq!(map.len(), 1);
        let counts = &map[&m2([1, 0, 0, 0])];
        assert!(counts.iter().all(|c| *c == BigInt::from(1)));
    }

    #[test]
    fn r2_line_counts() {
        let map = brute_oracle_product(
            &m2([1, 1, 0, 0]),
            &m2([1, 0, 1, 0]),
            &[2, 3, 4, 5],
            10_000_000,
        )
        .unwrap();
        let counts = &map[&m2([2, 0, 0, 0])];
        let expected: Vec<BigInt> = [3u64, 4, 5, 6].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(counts, &expected);
    }

    #[test]
    fn incompatible_pair_empty() {
        let map =
            brute_oracle_product(&m2([0, 1, 0, 0]), &m2([1, 0, 0, 0]), &[2], 10_000_000).unwrap();
        assert!(map.is_empty());
    }
}
