//! The q-Schur algebra S_v(n,r): orbit-matrix bookkeeping, structure tables
//! built by counting and interpolation, and the left-regular product.

mod algebra;
mod element;
mod generator;
mod interp;
mod oracle;
mod relations;
mod table;
mod theta;

pub use algebra::{Algebra, Monomial};
pub use element::SchurElement;
pub use generator::{psi_generator_image, psi_matrix, GenKind, GeneratorSymbol};
pub use interp::interpolate_counts;
pub use oracle::{brute_oracle_product, multiply_matches_counts, verify_table_held_out};
pub use relations::{check_presentation, presentation_report};
pub use table::{build_table, OpColumn, Provenance, StructureTable, PRIME_POWERS};
pub use theta::{order_leq, theta_enumerate, ThetaMatrix};
