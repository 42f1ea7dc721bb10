//! Flagged key polynomials, (weak) Edelman–Greene insertion and Demazure
//! crystals on reduced factorizations and key tableaux.
//!
//! Conventions used throughout:
//!
//! * tableaux are drawn in French notation (row 1 at the bottom) and may
//!   occupy non-positive rows;
//! * the blocks of a factorization are stored left to right, so the first
//!   stored block is `ρ^(k)` and `block(1)` is the rightmost one;
//! * a chain of operators `π_{i_1} ... π_{i_k}` acts with `π_{i_k}` first.

pub mod combinat;
pub mod crystal;
pub mod eg;
mod error;
pub mod exec;
pub mod flagged;
pub mod poly;
pub mod tableau;
pub mod verify;
pub mod weak_eg;

pub use combinat::{Flag, Permutation, WeakComposition, Word};
pub use eg::IncreasingFactorization;
pub use error::{Error, Result};
pub use exec::Execution;
pub use poly::IntPolynomial;
pub use tableau::Tableau;
