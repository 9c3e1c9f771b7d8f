//! Matrix factorizations of the discriminant of the symmetric group,
//! built from higher Specht polynomials.
//!
//! The crate is layered: exact polynomials ([`poly`], [`symmetric`]),
//! combinatorics ([`tableaux`], [`groupalg`]), bases of the coinvariant
//! algebra ([`specht`]), invariant theory ([`invariant`]) and the matrix
//! factorizations themselves ([`mf`]), with rendering ([`render`]) and the
//! command-line front end ([`cli`]).

pub mod cli;
pub mod error;
pub mod groupalg;
pub mod invariant;
pub mod linalg;
pub mod mf;
pub mod modp;
pub mod poly;
pub mod render;
pub mod specht;
pub mod symmetric;
pub mod tableaux;
pub mod text;

pub use error::{Error, Result};
pub use mf::{verify_mf, MatrixFactorization};
pub use groupalg::{GroupAlgebraElement, Permutation};
pub use poly::{Monomial, MultiPoly, Rational};
pub use symmetric::{BasisKind, InvariantPoly};
pub use tableaux::{MTableau, Partition, Tableau};
