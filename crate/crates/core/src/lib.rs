//! Exact computations in the Hecke algebra of the extended affine Weyl group
//! of type `B~2` (the one attached to `Sp4(C)`): Kazhdan-Lusztig basis, cells,
//! the Bernstein centre, and the products `C_rt * S_lambda` modulo the lowest
//! two-sided cell.

pub mod error;
pub mod coxeter;
pub mod laurent;
pub mod weights;
pub mod hecke;
pub mod klbasis;
pub mod cells;
pub mod bernstein;
pub mod repring;
pub mod phimaps;

pub use error::{Error, Result};
