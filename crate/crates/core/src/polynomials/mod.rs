//! Exact polynomial arithmetic and the generating-function identities
//! for lecture hall and content tableaux.

mod generating;
mod schur;
mod sparse;

pub use generating::{
    entry_identity_sides, h_poly, jacobi_trudi_l, jacobi_trudi_s, l_poly, main_identity_sides, s_poly, single_row_l,
    verify_entry_identity, verify_main_identity, verify_main_identity_at, IdentityCheck,
};
pub use schur::{schur_expand_shifted, shifted_schur, SchurExpansion};
pub use sparse::{Monomial, PolyTermJson, SparsePoly, Var, VarTruncation};
