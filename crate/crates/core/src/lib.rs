//! Bounded lecture hall tableaux: validity predicates, exact enumeration and
//! counting formulas, generating-function identities, lattice-path encodings
//! and the value/mark sorting bijection.

pub mod determinant;
pub mod enumeration;
pub mod error;
pub mod jdt;
pub mod paths;
pub mod polynomials;
pub mod shapes;
pub mod tableaux;

pub use error::{Error, Result};
pub use polynomials::{Monomial, SparsePoly, Var, VarTruncation};
pub use shapes::{Cell, ExcitedDiagram, Partition, SkewShape};
pub use tableaux::{Mark, MarkedEntry, MarkedTableau, Tableau, TableauClass};
