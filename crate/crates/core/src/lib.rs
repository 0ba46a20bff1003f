//! Free pre-Lie and free magmatic algebras on rooted trees.
//!
//! Planar trees with the left Butcher product form the free magma on one
//! generator; with left grafting they carry a second magmatic structure, and
//! [`psi`] is the isomorphism between the two. Forgetting planarity lands in
//! the free pre-Lie algebra of rooted trees under grafting, where
//! [`monomials`] builds monomial bases and their expansions.

mod bijection;
pub mod error;
pub mod limits;
pub mod matrix;
pub mod monomials;
pub mod products;
pub mod projection;
pub mod psi;
pub mod report;
pub mod series;
pub mod sum;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
pub use limits::Limits;
pub use matrix::CoeffMatrix;
pub use monomials::{GeneratorOrder, MonomialBasis, MonomialExpr};
pub use products::Product;
pub use projection::Section;
pub use report::{Check, Report, Status};
pub use sum::{NonPlanarSum, PlanarSum, TreeSum};
pub use tree::{BinaryTree, Label, OrderKind, PlanarTree, Tree, VertexId, VertexOrder};
