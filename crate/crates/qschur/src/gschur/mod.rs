//! Weyl modules, idempotent-generated ideals, generalized Schur quotients,
//! and the descent of the Frobenius pair to those quotients.

mod descend;
mod ideal;
mod linalg;
mod weyl;

pub use descend::{check_filtration, descend_maps, star_saturated, DescentReport};
pub use ideal::{
    annihilator_check, annihilator_check_specialized, ideal_generated, quotient, IdealSubspace,
    QuotientAlgebra,
};
pub use linalg::{nullspace, rank_of, Echelon};
pub use weyl::{ratfunc_to_cyclo, specialize_weyl, weyl_module, WeylModule};

use crate::cartan::Weight;
use crate::ring::Ring;
use crate::schur::{SchurElement, StructureTable};
use serde_json::{json, Value};

/// The dominant weights realizable in the degree-r table: classes of the
/// partitions of r into at most n parts (weights normalize mod (1,...,1)).
pub fn dominant_window(n: usize, r: u32) -> Vec<Weight> {
    fn rec(n: usize, rest: u32, max: u32, acc: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if acc.len() == n {
            if rest == 0 {
                out.push(Weight::new(acc.clone()));
            }
            return;
        }
        let hi = rest.min(max);
        for x in (0..=hi).rev() {
            acc.push(x as i64);
            rec(n, rest - x, x, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, r, r, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn to_vec<R: Ring>(x: &SchurElement<R>, table: &StructureTable) -> Vec<R> {
    let mut v = vec![R::zero(); table.dim()];
    for (a, c) in x.iter() {
        let i = table.index_of(a).expect("element outside basis");
        v[i] = c.clone();
    }
    v
}

pub(crate) fn from_vec<R: Ring>(v: &[R], table: &StructureTable) -> SchurElement<R> {
    let mut x = SchurElement::zero();
    for (i, c) in v.iter().enumerate() {
        x.add_term(table.basis[i].clone(), c.clone());
    }
    x
}

/// The module's report format, shared by the verification drivers.
pub fn report_json(
    p_complement: &[Vec<i64>],
    dim_s: usize,
    dim_ideal: usize,
    dim_quotient: usize,
    prop_qschur: bool,
    embed: bool,
    fr_surjective: bool,
) -> Value {
    json!({
        "P_complement": p_complement,
        "dims": { "S": dim_s, "I_P": dim_ideal, "U_P": dim_quotient },
        "checks": {
            "prop_qschur": prop_qschur,
            "embed": embed,
            "fr_surjective": fr_surjective,
        },
    })
}
