//! Finite-field flag geometry: the point-counting layer. Everything the
//! structure tables need reduces to counting middle flags over small fields.

mod count;
mod field;
mod flag;
mod subspace;

pub use count::{count_middle, count_middle_generator, count_middle_over};
pub use field::PrimePowerField;
pub use flag::{
    enumerate_flags, flag_count, orbit_invariant, representative_pair, twist_flag, Flag, FlagPair,
};
pub use subspace::{enumerate_subspaces, gaussian_count, rref, subspaces_between, Subspace};
