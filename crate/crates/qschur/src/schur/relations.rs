//! The defining relations of the idempotented quantum group, checked on the
//! generator operators of a built algebra. Passing this suite certifies
//! that the counted structure constants realize the expected presentation.

use super::algebra::Algebra;
use super::element::SchurElement;
use super::generator::GenKind;
use crate::error::{Error, Result};
use crate::laurent::{gauss_binomial_general, quantum_int};
use crate::ring::Ring;

fn alpha(i: usize, n: usize) -> Vec<i64> {
    let mut a = vec![0i64; n];
    a[i - 1] = 1;
    a[i] = -1;
    a
}

fn add_weight(w: &[i64], a: &[i64], k: i64) -> Vec<i64> {
    w.iter().zip(a).map(|(x, y)| x + k * y).collect()
}

/// Run every applicable relation on every basis element; returns named
/// verdicts. All checks are exact identities of operators on the
/// left-regular representation.
pub fn presentation_report<R: Ring>(alg: &Algebra<R>) -> Vec<(String, bool)> {
    let n = alg.table.n;
    let r = alg.table.r;
    let mut out = Vec::new();
    let basis_elems: Vec<SchurElement<R>> = alg
        .table
        .basis
        .iter()
        .map(|b| SchurElement::basis(b.clone()))
        .collect();
    let weights: Vec<Vec<i64>> = alg
        .table
        .diagonal_weights()
        .iter()
        .map(|w| w.iter().map(|&x| x as i64).collect())
        .collect();

    // (iii) weight shift: E_i^{(a)} 1_zeta = 1_{zeta + a alpha_i} E_i^{(a)}
    let mut ok = true;
    for i in 1..n {
        let al = alpha(i, n);
        for a in 1..=r {
            for zeta in &weights {
                let shifted = add_weight(zeta, &al, a as i64);
                for x in &basis_elems {
                    let lhs =
                        alg.apply_divided(GenKind::E, i, a, &alg.project_weight(zeta, x));
                    let rhs =
                        alg.project_weight(&shifted, &alg.apply_divided(GenKind::E, i, a, x));
                    if lhs != rhs {
                        ok = false;
                    }
                    let lhs_f =
                        alg.apply_divided(GenKind::F, i, a, &alg.project_weight(zeta, x));
                    let shifted_f = add_weight(zeta, &al, -(a as i64));
                    let rhs_f =
                        alg.project_weight(&shifted_f, &alg.apply_divided(GenKind::F, i, a, x));
                    if lhs_f != rhs_f {
                        ok = false;
                    }
                }
            }
        }
    }
    out.push(("weight-shift".to_string(), ok));

    // (i) distinct indices commute: E_i^{(a)} F_j^{(b)} = F_j^{(b)} E_i^{(a)}
    if n >= 3 {
        let mut ok = true;
        for i in 1..n {
            for j in 1..n {
                if i == j {
                    continue;
                }
                for a in 1..=r {
                    for b in 1..=r {
                        for x in &basis_elems {
                            let lhs = alg.apply_divided(
                                GenKind::E,
                                i,
                                a,
                                &alg.apply_divided(GenKind::F, j, b, x),
                            );
                            let rhs = alg.apply_divided(
                                GenKind::F,
                                j,
                                b,
                                &alg.apply_divided(GenKind::E, i, a, x),
                            );
                            if lhs != rhs {
                                ok = false;
                            }
                        }
                    }
                }
            }
        }
        out.push(("ef-distinct-commute".to_string(), ok));
    }

    // (ii) equal indices: E^{(a)} F^{(b)} 1_mu =
    //   sum_t [a - b + <alpha-check_i, mu> over t]_i F^{(b-t)} E^{(a-t)} 1_mu
    // and the mirrored order.
    let mut ok = true;
    for i in 1..n {
        for a in 1..=r {
            for b in 1..=r {
                for x in &alg.table.basis {
                    let xe = SchurElement::basis(x.clone());
                    let mu: Vec<i64> = x.row_sums().iter().map(|&v| v as i64).collect();
                    let pairing = mu[i - 1] - mu[i];
                    let lhs = alg.apply_divided(
                        GenKind::E,
                        i,
                        a,
                        &alg.apply_divided(GenKind::F, i, b, &xe),
                    );
                    let mut rhs = SchurElement::zero();
                    for t in 0..=a.min(b) {
                        let coeff = alg.scalar(&gauss_binomial_general(
                            a as i64 - b as i64 + pairing,
                            t as i64,
                            1,
                        ));
                        let term = alg.apply_divided(
                            GenKind::F,
                            i,
                            b - t,
                            &alg.apply_divided(GenKind::E, i, a - t, &xe),
                        );
                        rhs.add_assign(&term.scaled(&coeff));
                    }
                    if lhs != rhs {
                        ok = false;
                    }
                    let lhs_m = alg.apply_divided(
                        GenKind::F,
                        i,
                        a,
                        &alg.apply_divided(GenKind::E, i, b, &xe),
                    );
                    let mut rhs_m = SchurElement::zero();
                    for t in 0..=a.min(b) {
                        let coeff = alg.scalar(&gauss_binomial_general(
                            a as i64 - b as i64 - pairing,
                            t as i64,
                            1,
                        ));
                        let term = alg.apply_divided(
                            GenKind::E,
                            i,
                            b - t,
                            &alg.apply_divided(GenKind::F, i, a - t, &xe),
                        );
                        rhs_m.add_assign(&term.scaled(&coeff));
                    }
                    if lhs_m != rhs_m {
                        ok = false;
                    }
                }
            }
        }
    }
    out.push(("ef-same-index".to_string(), ok));

    // (iv) quantum Serre for adjacent indices
    if n >= 3 {
        let mut ok = true;
        let two = alg.scalar(&quantum_int(2, 1));
        for (i, j) in [(1usize, 2usize), (2, 1)] {
            for kind in [GenKind::E, GenKind::F] {
                for x in &basis_elems {
                    let ei = |y: &SchurElement<R>| alg.apply_divided(kind, i, 1, y);
                    let ej = |y: &SchurElement<R>| alg.apply_divided(kind, j, 1, y);
                    let mut acc = ei(&ei(&ej(x)));
                    acc.sub_assign(&ei(&ej(&ei(x))).scaled(&two));
                    acc.add_assign(&ej(&ei(&ei(x))));
                    if !acc.is_zero() {
                        ok = false;
                    }
                }
            }
        }
        out.push(("serre".to_string(), ok));
    }

    out
}

/// Error on the first failed relation.
pub fn check_presentation<R: Ring>(alg: &Algebra<R>) -> Result<()> {
    for (name, ok) in presentation_report(alg) {
        if !ok {
            return Err(Error::RelationFailure(format!(
                "{} on S({},{})",
                name, alg.table.n, alg.table.r
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::table::build_table;

    #[test]
    fn presentation_2_2() {
        let alg = Algebra::generic(build_table(2, 2).unwrap()).unwrap();
        check_presentation(&alg).unwrap();
    }

    #[test]
    fn presentation_3_1() {
        let alg = Algebra::generic(build_table(3, 1).unwrap()).unwrap();
        check_presentation(&alg).unwrap();
    }
}
