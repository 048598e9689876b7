//! The left-regular model of S_v(n,r). General products are routed through
//! verified monomials in the generator operators: every basis element [A]
//! equals psi(word) minus a correction supported strictly below A, so the
//! recursion over the closure order terminates and only generator-shaped
//! structure constants are ever needed.

use super::element::SchurElement;
use super::generator::{psi_matrix, GenKind, GeneratorSymbol};
use super::table::StructureTable;
use super::theta::{order_leq, ThetaMatrix};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::ring::Ring;
use num_traits::One;
use std::sync::Arc;

/// A verified monomial for a basis element: generator keys leftmost factor
/// first, ending with the idempotent, plus the exact correction term.
#[derive(Clone, Debug)]
pub struct Monomial<R> {
    pub word: Vec<String>,
    pub correction: SchurElement<R>,
}

pub struct Algebra<R: Ring> {
    pub table: Arc<StructureTable>,
    hom: Arc<dyn Fn(&LaurentPoly) -> R + Send + Sync>,
    ops: std::collections::BTreeMap<String, Vec<Vec<(usize, R)>>>,
    monomials: Vec<Monomial<R>>,
}

impl Algebra<LaurentPoly> {
    /// The generic algebra over Z[v, v^-1]; computes and verifies a monomial
    /// for every basis element.
    pub fn generic(table: StructureTable) -> Result<Self> {
        let table = Arc::new(table);
        let hom: Arc<dyn Fn(&LaurentPoly) -> LaurentPoly + Send + Sync> =
            Arc::new(|p: &LaurentPoly| p.clone());
        let ops = table.ops.clone();
        let mut alg = Algebra {
            table: table.clone(),
            hom,
            ops,
            monomials: Vec::new(),
        };
        let mut monomials = Vec::with_capacity(table.dim());
        for a in &table.basis {
            monomials.push(alg.find_monomial(a)?);
        }
        alg.monomials = monomials;
        Ok(alg)
    }

    /// Push the whole model through a coefficient ring map. Valid because
    /// the defining identities have integral coefficients.
    pub fn specialize<S: Ring>(
        &self,
        hom: impl Fn(&LaurentPoly) -> S + Send + Sync + 'static,
    ) -> Algebra<S> {
        let ops = self
            .ops
            .iter()
            .map(|(k, cols)| {
                let cols = cols
                    .iter()
                    .map(|col| {
                        col.iter()
                            .filter_map(|(ci, p)| {
                                let img = hom(p);
                                if num_traits::Zero::is_zero(&img) {
                                    None
                                } else {
                                    Some((*ci, img))
                                }
                            })
                            .collect()
                    })
                    .collect();
                (k.clone(), cols)
            })
            .collect();
        let monomials = self
            .monomials
            .iter()
            .map(|m| Monomial {
                word: m.word.clone(),
                correction: m.correction.map_coeffs(&hom),
            })
            .collect();
        Algebra {
            table: self.table.clone(),
            hom: Arc::new(hom),
            ops,
            monomials,
        }
    }

    fn find_monomial(&self, a: &ThetaMatrix) -> Result<Monomial<LaurentPoly>> {
        let idem = ThetaMatrix::diagonal(&a.col_sums());
        for cand in candidate_words(a) {
            let Some(mats) = realize_word(&cand, a) else {
                continue;
            };
            let mut word: Vec<String> = mats.iter().map(|m| m.key()).collect();
            word.push(idem.key());
            // evaluate psi(word) on the identity coset of 1_lambda
            let mut z: SchurElement<LaurentPoly> = SchurElement::basis(idem.clone());
            for m in mats.iter().rev() {
                z = self.apply_generator_key(&m.key(), &z);
            }
            if !z.coeff(a).is_one() {
                continue;
            }
            if z.support().any(|b| b != a && !(order_leq(b, a))) {
                continue;
            }
            let mut correction = z;
            correction.add_term(a.clone(), -LaurentPoly::term(1, 0));
            return Ok(Monomial { word, correction });
        }
        Err(Error::LeadingTermFailure(a.key()))
    }
}

impl<R: Ring> Algebra<R> {
    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn scalar(&self, p: &LaurentPoly) -> R {
        (self.hom)(p)
    }

    pub fn monomial(&self, ai: usize) -> &Monomial<R> {
        &self.monomials[ai]
    }

    /// Left multiplication by the generator basis element with the given key.
    pub fn apply_generator_key(&self, key: &str, x: &SchurElement<R>) -> SchurElement<R> {
        let cols = self
            .ops
            .get(key)
            .unwrap_or_else(|| panic!("no generator operator for key {}", key));
        let mut out = SchurElement::zero();
        for (b, c) in x.iter() {
            let bi = self.table.index_of(b).expect("element outside basis");
            for (ci, coeff) in &cols[bi] {
                out.add_term(self.table.basis[*ci].clone(), coeff.clone() * c.clone());
            }
        }
        out
    }

    /// Left multiplication by the divided-power generator summed over all
    /// weights: E_i^{(a)} (kind E), F_i^{(a)} (kind F). Power 0 is the
    /// identity map.
    pub fn apply_divided(&self, kind: GenKind, i: usize, a: u32, x: &SchurElement<R>) -> SchurElement<R> {
        if a == 0 && kind != GenKind::Id {
            return x.clone();
        }
        let mut out = SchurElement::zero();
        for (b, c) in x.iter() {
            let weight: Vec<i64> = b.row_sums().iter().map(|&x| x as i64).collect();
            let sym = GeneratorSymbol {
                kind,
                index: i,
                power: a,
                weight,
            };
            let Some(g) = psi_matrix(&sym, self.table.n) else {
                continue;
            };
            if self.table.index_of(&g).is_none() {
                continue;
            }
            let bi = self.table.index_of(b).unwrap();
            for (ci, coeff) in &self.ops[&g.key()][bi] {
                out.add_term(self.table.basis[*ci].clone(), coeff.clone() * c.clone());
            }
        }
        out
    }

    /// Projection onto terms of row weight lambda (left multiplication by
    /// the idempotent).
    pub fn project_weight(&self, lambda: &[i64], x: &SchurElement<R>) -> SchurElement<R> {
        let mut out = SchurElement::zero();
        for (b, c) in x.iter() {
            let w: Vec<i64> = b.row_sums().iter().map(|&x| x as i64).collect();
            if w == lambda {
                out.add_term(b.clone(), c.clone());
            }
        }
        out
    }

    /// The two-sided identity: the sum of all diagonal basis elements.
    pub fn identity(&self) -> SchurElement<R> {
        let mut out = SchurElement::zero();
        for b in &self.table.basis {
            if b.is_diagonal() {
                out.add_term(b.clone(), R::one());
            }
        }
        out
    }

    pub fn multiply(&self, x: &SchurElement<R>, y: &SchurElement<R>) -> SchurElement<R> {
        let mut out = SchurElement::zero();
        for (a, c) in x.iter() {
            let ai = self.table.index_of(a).expect("element outside basis");
            let prod = self.multiply_basis(ai, y);
            out.add_assign(&prod.scaled(c));
        }
        out
    }

    /// [A] * y via the monomial expansion; recursion descends strictly in
    /// the closure order.
    pub fn multiply_basis(&self, ai: usize, y: &SchurElement<R>) -> SchurElement<R> {
        let m = &self.monomials[ai];
        let mut z = y.clone();
        for key in m.word.iter().rev() {
            z = self.apply_generator_key(key, &z);
        }
        if !m.correction.is_zero() {
            let corr = self.multiply(&m.correction, y);
            z.sub_assign(&corr);
        }
        z
    }
}

type Sym = (GenKind, usize, u32);

/// Deterministic candidate peeling words (leftmost factor first), upper
/// triangle through E factors and lower through F, in a few factor orders.
/// Correctness of the chosen word is enforced by verification, not assumed.
fn candidate_words(a: &ThetaMatrix) -> Vec<Vec<Sym>> {
    let n = a.n();
    let e_words: Vec<Vec<Sym>>;
    let f_words: Vec<Vec<Sym>>;
    match n {
        2 => {
            e_words = vec![vec![(GenKind::E, 1, a.entry(0, 1))]];
            f_words = vec![vec![(GenKind::F, 1, a.entry(1, 0))]];
        }
        3 => {
            let (u12, u13, u23) = (a.entry(0, 1), a.entry(0, 2), a.entry(1, 2));
            let (l21, l31, l32) = (a.entry(1, 0), a.entry(2, 0), a.entry(2, 1));
            e_words = vec![
                vec![
                    (GenKind::E, 2, u23),
                    (GenKind::E, 1, u12 + u13),
                    (GenKind::E, 2, u13),
                ],
                vec![
                    (GenKind::E, 1, u12),
                    (GenKind::E, 2, u13 + u23),
                    (GenKind::E, 1, u13),
                ],
            ];
            f_words = vec![
                vec![
                    (GenKind::F, 2, l31),
                    (GenKind::F, 1, l21 + l31),
                    (GenKind::F, 2, l32),
                ],
                vec![
                    (GenKind::F, 1, l31),
                    (GenKind::F, 2, l31 + l32),
                    (GenKind::F, 1, l21),
                ],
            ];
        }
        _ => panic!("monomial words implemented for n <= 3"),
    }
    let mut out = Vec::new();
    for e in &e_words {
        for f in &f_words {
            let mut ef: Vec<Sym> = e.clone();
            ef.extend(f.iter().cloned());
            let mut fe: Vec<Sym> = f.clone();
            fe.extend(e.iter().cloned());
            for w in [ef, fe] {
                let w: Vec<Sym> = w.into_iter().filter(|&(_, _, p)| p > 0).collect();
                if !out.contains(&w) {
                    out.push(w);
                }
            }
        }
    }
    out
}

/// Chain the word against the marginals of A, right to left, producing the
/// generator matrices. None when some diagonal entry would go negative or
/// the final weight does not match row(A).
fn realize_word(word: &[Sym], a: &ThetaMatrix) -> Option<Vec<ThetaMatrix>> {
    let n = a.n();
    let mut mu: Vec<i64> = a.col_sums().iter().map(|&x| x as i64).collect();
    let mut mats_rl = Vec::with_capacity(word.len());
    for &(kind, i, p) in word.iter().rev() {
        let sym = GeneratorSymbol {
            kind,
            index: i,
            power: p,
            weight: mu.clone(),
        };
        let m = psi_matrix(&sym, n)?;
        mu = m.row_sums().iter().map(|&x| x as i64).collect();
        mats_rl.push(m);
    }
    let target: Vec<i64> = a.row_sums().iter().map(|&x| x as i64).collect();
    if mu != target {
        return None;
    }
    mats_rl.reverse();
    Some(mats_rl)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::quantum_int;
    use crate::schur::table::build_table;

    fn m2(e: [u32; 4]) -> ThetaMatrix {
        ThetaMatrix::new(2, e.to_vec()).unwrap()
    }

    fn generic(n: usize, r: u32) -> Algebra<LaurentPoly> {
        Algebra::generic(build_table(n, r).unwrap()).unwrap()
    }

    #[test]
    fn identity_is_two_sided() {
        let alg = generic(2, 2);
        let one = alg.identity();
        for b in &alg.table.basis {
            let x = SchurElement::basis(b.clone());
            assert_eq!(alg.multiply(&one, &x), x);
            assert_eq!(alg.multiply(&x, &one), x);
        }
    }

    #[test]
    fn diagonal_monomials_are_exact() {
        let alg = generic(2, 2);
        for (ai, a) in alg.table.basis.iter().enumerate() {
            if a.is_diagonal() {
                let m = alg.monomial(ai);
                assert_eq!(m.word, vec![a.key()]);
                assert!(m.correction.is_zero());
            }
        }
    }

    #[test]
    fn monomial_leading_terms_exhaustive() {
        for (n, r) in [(2usize, 1u32), (2, 2), (2, 3), (3, 1), (3, 2)] {
            let alg = generic(n, r);
            for (ai, a) in alg.table.basis.iter().enumerate() {
                let m = alg.monomial(ai);
                for b in m.correction.support() {
                    assert!(b != a);
                    assert!(order_leq(b, a), "correction term not below: {:?} vs {:?}", b, a);
                }
            }
        }
    }

    #[test]
    fn antidiagonal_monomial_example() {
        let alg = generic(2, 2);
        let a = m2([0, 1, 1, 0]);
        let ai = alg.table.index_of(&a).unwrap();
        let m = alg.monomial(ai);
        assert!(!m.word.is_empty());
        // correction supported on the smaller diagonal element
        for b in m.correction.support() {
            assert!(b.is_diagonal());
        }
    }

    #[test]
    fn line_count_product_via_operators() {
        let alg = generic(2, 2);
        let x = SchurElement::basis(m2([1, 1, 0, 0]));
        let y = SchurElement::basis(m2([1, 0, 1, 0]));
        let z = alg.multiply(&x, &y);
        assert_eq!(z, SchurElement::term(m2([2, 0, 0, 0]), quantum_int(2, 1)));
    }

    #[test]
    fn weight_orthogonality() {
        let alg = generic(2, 2);
        for a in &alg.table.basis {
            for b in &alg.table.basis {
                if a.col_sums() != b.row_sums() {
                    let z = alg.multiply(&SchurElement::basis(a.clone()), &SchurElement::basis(b.clone()));
                    assert!(z.is_zero(), "{:?} * {:?} = {:?}", a, b, z);
                }
            }
        }
    }

    #[test]
    fn associativity_sample() {
        let alg = generic(2, 2);
        let basis = &alg.table.basis;
        // deterministic pseudo-random triples
        let mut state = 12345u64;
        for _ in 0..200 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let i = (state >> 16) as usize % basis.len();
            let j = (state >> 32) as usize % basis.len();
            let k = (state >> 48) as usize % basis.len();
            let (x, y, z) = (
                SchurElement::basis(basis[i].clone()),
                SchurElement::basis(basis[j].clone()),
                SchurElement::basis(basis[k].clone()),
            );
            let left = alg.multiply(&alg.multiply(&x, &y), &z);
            let right = alg.multiply(&x, &alg.multiply(&y, &z));
            assert_eq!(left, right);
        }
    }

    #[test]
    fn divided_power_integrality() {
        // operator(E_i)^a = [a]! operator(E_i^{(a)})
        let alg = generic(2, 3);
        for a in 2..=3u32 {
            let fact: LaurentPoly = (1..=a).map(|k| quantum_int(k as i64, 1)).fold(
                LaurentPoly::term(1, 0),
                |acc, x| acc * x,
            );
            for b in &alg.table.basis {
                let x = SchurElement::basis(b.clone());
                let mut powered = x.clone();
                for _ in 0..a {
                    powered = alg.apply_divided(GenKind::E, 1, 1, &powered);
                }
                let divided = alg.apply_divided(GenKind::E, 1, a, &x);
                assert_eq!(powered, divided.scaled(&fact));
            }
        }
    }
}
