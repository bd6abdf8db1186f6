//! Combinatorial standard monomial theory for Richardson varieties.
//!
//! The crate is organised bottom-up:
//!
//! - [`weyl`]: root systems, Weyl groups, parabolic quotients and the Bruhat order.
//! - [`lspath`]: Lakshmibai-Seshadri paths, their orders, wedge products and
//!   standard sequences.
//! - [`characters`]: formal characters with the Weyl character formula and
//!   Demazure operators as independent checks.
//! - [`richardson`]: Richardson varieties, standard monomial counts,
//!   boundaries, Pieri-Chevalley filtrations and defining chains.
//! - [`ktheory`]: Pieri-Chevalley coefficients in equivariant K-theory and the
//!   diagonal degeneration identities.
//! - [`pluecker`]: exterior-power models of Grassmannians with exact linear
//!   algebra, used as ground truth in type A.

pub mod characters;
pub mod error;
pub mod ktheory;
pub mod linalg;
pub mod lspath;
pub mod pluecker;
pub mod richardson;
pub mod weyl;

pub use error::{Error, Result};
