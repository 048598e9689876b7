//! Generator symbols E_i^{(a)}1_lambda, F_i^{(a)}1_lambda, 1_lambda and
//! their images in the [A] basis: the unique matrices with at most one
//! off-diagonal entry.

use super::element::SchurElement;
use super::table::StructureTable;
use super::theta::ThetaMatrix;
use crate::laurent::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    E,
    F,
    Id,
}

/// E_i^{(a)}1_lambda (kind E), F_i^{(a)}1_lambda (kind F) or 1_lambda
/// (kind Id, power ignored). The index i is 1-based, 1 <= i < n. The weight
/// is the column weight (the idempotent on the right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSymbol {
    pub kind: GenKind,
    pub index: usize,
    pub power: u32,
    pub weight: Vec<i64>,
}

impl GeneratorSymbol {
    pub fn idempotent(weight: Vec<i64>) -> Self {
        GeneratorSymbol {
            kind: GenKind::Id,
            index: 0,
            power: 0,
            weight,
        }
    }

    pub fn e(index: usize, power: u32, weight: Vec<i64>) -> Self {
        GeneratorSymbol {
            kind: GenKind::E,
            index,
            power,
            weight,
        }
    }

    pub fn f(index: usize, power: u32, weight: Vec<i64>) -> Self {
        GeneratorSymbol {
            kind: GenKind::F,
            index,
            power,
            weight,
        }
    }
}

/// The basis matrix of the symbol's psi-image, or None when some entry
/// would go negative (the image is then zero).
pub fn psi_matrix(g: &GeneratorSymbol, n: usize) -> Option<ThetaMatrix> {
    if g.weight.len() != n {
        return None;
    }
    let mut diag: Vec<i64> = g.weight.clone();
    let mut off: Option<(usize, usize, u32)> = None;
    match g.kind {
        GenKind::Id => {}
        GenKind::E => {
            if g.index == 0 || g.index >= n || g.power == 0 {
                return None;
            }
            // entry a at (i, i+1): column i+1 loses a from its diagonal
            diag[g.index] -= g.power as i64;
            off = Some((g.index - 1, g.index, g.power));
        }
        GenKind::F => {
            if g.index == 0 || g.index >= n || g.power == 0 {
                return None;
            }
            // entry a at (i+1, i): column i loses a from its diagonal
            diag[g.index - 1] -= g.power as i64;
            off = Some((g.index, g.index - 1, g.power));
        }
    }
    if diag.iter().any(|&d| d < 0) {
        return None;
    }
    let mut m = ThetaMatrix::diagonal(&diag.iter().map(|&d| d as u32).collect::<Vec<_>>());
    if let Some((i, j, a)) = off {
        m.set_entry(i, j, a);
    }
    Some(m)
}

/// The psi-image as an element of the algebra (zero when out of range or
/// not of the table's degree).
pub fn psi_generator_image(
    g: &GeneratorSymbol,
    table: &StructureTable,
) -> SchurElement<LaurentPoly> {
    match psi_matrix(g, table.n) {
        Some(m) if table.index_of(&m).is_some() => SchurElement::basis(m),
        _ => SchurElement::zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::table::build_table;

    #[test]
    fn idempotent_images() {
        let t = build_table(2, 2).unwrap();
        let one = psi_generator_image(&GeneratorSymbol::idempotent(vec![1, 1]), &t);
        assert_eq!(one, SchurElement::basis(ThetaMatrix::diagonal(&[1, 1])));
        let out = psi_generator_image(&GeneratorSymbol::idempotent(vec![3, -1]), &t);
        assert!(out.is_zero());
    }

    #[test]
    fn divided_power_images() {
        let t = build_table(2, 2).unwrap();
        let e = psi_generator_image(&GeneratorSymbol::e(1, 2, vec![0, 2]), &t);
        assert_eq!(
            e,
            SchurElement::basis(ThetaMatrix::from_rows(&[&[0, 2], &[0, 0]]))
        );
        // weight that would need a negative diagonal entry
        let dead = psi_generator_image(&GeneratorSymbol::e(1, 2, vec![1, 1]), &t);
        assert!(dead.is_zero());
        let f = psi_generator_image(&GeneratorSymbol::f(1, 1, vec![1, 1]), &t);
        assert_eq!(
            f,
            SchurElement::basis(ThetaMatrix::from_rows(&[&[0, 0], &[1, 1]]))
        );
    }
}
