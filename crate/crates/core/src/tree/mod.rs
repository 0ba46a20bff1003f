//! Planar, non-planar and binary rooted trees, their enumeration, and the
//! vertex statistics the coefficient formulas rely on.

mod binary;
mod enumerate;
mod label;
mod nonplanar;
mod order;
mod planar;

pub use binary::BinaryTree;
pub use enumerate::{
    canonical_cmp, enumerate_binary, enumerate_binary_with, enumerate_nonplanar,
    enumerate_nonplanar_with, enumerate_planar, enumerate_planar_with,
};
pub(crate) use label::is_label_byte;
pub use label::Label;
pub use nonplanar::Tree;
pub use order::{OrderKind, VertexId, VertexOrder};
pub use planar::PlanarTree;

pub(crate) use order::total_order_listing;
