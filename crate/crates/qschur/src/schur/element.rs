//! Sparse algebra elements in the normalized [A] basis, generic over the
//! coefficient ring.

use super::theta::ThetaMatrix;
use crate::ring::Ring;
use std::collections::BTreeMap;

/// A finite linear combination of basis matrices. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurElement<R> {
    terms: BTreeMap<ThetaMatrix, R>,
}

impl<R: Ring> SchurElement<R> {
    pub fn zero() -> Self {
        SchurElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(a: ThetaMatrix) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(a, R::one());
        SchurElement { terms }
    }

    pub fn term(a: ThetaMatrix, c: R) -> Self {
        let mut el = SchurElement::zero();
        el.add_term(a, c);
        el
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, a: &ThetaMatrix) -> R {
        self.terms.get(a).cloned().unwrap_or_else(R::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ThetaMatrix, &R)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ThetaMatrix> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, a: ThetaMatrix, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&a) {
            None => {
                self.terms.insert(a, c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(a, sum);
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &SchurElement<R>) {
        for (a, c) in other.iter() {
            self.add_term(a.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &SchurElement<R>) {
        for (a, c) in other.iter() {
            self.add_term(a.clone(), -c.clone());
        }
    }

    pub fn scaled(&self, c: &R) -> Self {
        let mut out = SchurElement::zero();
        for (a, x) in self.iter() {
            out.add_term(a.clone(), c.clone() * x.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = SchurElement::zero();
        for (a, x) in self.iter() {
            out.add_term(a.clone(), -x.clone());
        }
        out
    }

    /// Push coefficients through a ring map.
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> SchurElement<S> {
        let mut out = SchurElement::zero();
        for (a, x) in self.iter() {
            out.add_term(a.clone(), f(x));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;
    use num_traits::Zero;

    #[test]
    fn zero_coefficients_vanish() {
        let a = ThetaMatrix::diagonal(&[1, 1]);
        let mut x: SchurElement<LaurentPoly> = SchurElement::basis(a.clone());
        x.add_term(a.clone(), LaurentPoly::term(-1, 0));
        assert!(x.is_zero());
        assert!(x.coeff(&a).is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = ThetaMatrix::diagonal(&[2, 0]);
        let b = ThetaMatrix::diagonal(&[0, 2]);
        let mut x: SchurElement<LaurentPoly> = SchurElement::basis(a.clone());
        x.add_assign(&SchurElement::basis(b.clone()));
        let y = x.scaled(&LaurentPoly::v());
        assert_eq!(y.coeff(&a), LaurentPoly::v());
        assert_eq!(y.coeff(&b), LaurentPoly::v());
        let mut z = y.clone();
        z.sub_assign(&y);
        assert!(z.is_zero());
    }
}
