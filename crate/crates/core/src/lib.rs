//! Exact computer algebra for free metabelian Novikov and metabelian
//! Lie-admissible algebras.

pub mod checks;
pub mod cli;
pub mod diffcom;
pub mod enumerate;
pub mod error;
pub mod linalg;
pub mod mlieadm;
pub mod mnov;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod term;

pub use error::{Error, Result};
pub use poly::{Coefficient, Permutation, Polynomial};
pub use term::{OpSymbol, Signature, Term};
