//! The bilinear products on planar and non-planar trees.
//!
//! | product          | flavor     | result                                   |
//! |------------------|------------|------------------------------------------|
//! | `σ ∘↘ τ`         | planar     | `σ` as new leftmost branch of `τ`'s root |
//! | `s ↷ t`          | non-planar | `s` as a new branch of `t`'s root        |
//! | `σ ↘ τ`          | planar     | sum over vertices `v` of `τ` of `σ` grafted leftmost at `v` |
//! | `s → t`          | non-planar | sum over vertices `v` of `t` of `s` grafted at `v` |
//!
//! Labels are carried along untouched.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sum::{bilinear, NonPlanarSum, PlanarSum};
use crate::tree::{BinaryTree, PlanarTree, Tree};

/// Left Butcher product `σ ∘↘ τ`, the free magma product on planar trees.
pub fn left_butcher(sigma: &PlanarTree, tau: &PlanarTree) -> PlanarTree {
    tau.graft_leftmost_at(&[], sigma)
}

/// Butcher product `s ↷ t`.
pub fn butcher(s: &Tree, t: &Tree) -> Tree {
    let mut branches = t.branches();
    branches.push(s.clone());
    Tree::graft_root(t.label().cloned(), branches)
}

/// Left grafting `σ ↘ τ`; one term per vertex of `τ`.
pub fn left_graft(sigma: &PlanarTree, tau: &PlanarTree) -> PlanarSum {
    tau.vertices()
        .iter()
        .map(|v| tau.graft_leftmost_at(v.path(), sigma))
        .collect()
}

/// Pre-Lie grafting `s → t`; one term per vertex of `t`, like terms collected.
pub fn graft(s: &Tree, t: &Tree) -> NonPlanarSum {
    let planar = t.as_planar();
    planar
        .vertices()
        .iter()
        .map(|v| Tree::from_planar(&planar.graft_leftmost_at(v.path(), s.as_planar())))
        .collect()
}

/// `t₁ ∨ t₂`.
pub fn binary_join(t1: BinaryTree, t2: BinaryTree) -> BinaryTree {
    BinaryTree::join(t1, t2)
}

/// The rotation correspondence `Φ`.
pub fn rotation(t: &BinaryTree) -> PlanarTree {
    t.rotate()
}

pub fn left_butcher_sums(a: &PlanarSum, b: &PlanarSum) -> PlanarSum {
    bilinear(a, b, |x, y| PlanarSum::term(left_butcher(x, y)))
}

pub fn butcher_sums(a: &NonPlanarSum, b: &NonPlanarSum) -> NonPlanarSum {
    bilinear(a, b, |x, y| NonPlanarSum::term(butcher(x, y)))
}

pub fn left_graft_sums(a: &PlanarSum, b: &PlanarSum) -> PlanarSum {
    bilinear(a, b, left_graft)
}

pub fn graft_sums(a: &NonPlanarSum, b: &NonPlanarSum) -> NonPlanarSum {
    bilinear(a, b, graft)
}

/// The four tree products, as a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Product {
    /// `→`
    Graft,
    /// `↷`
    Butcher,
    /// `∘↘`
    LeftButcher,
    /// `↘`
    LeftGraft,
}

impl Product {
    pub const ALL: [Product; 4] = [
        Product::Graft,
        Product::Butcher,
        Product::LeftButcher,
        Product::LeftGraft,
    ];

    pub fn is_planar(self) -> bool {
        matches!(self, Product::LeftButcher | Product::LeftGraft)
    }

    pub fn name(self) -> &'static str {
        match self {
            Product::Graft => "graft",
            Product::Butcher => "butcher",
            Product::LeftButcher => "left-butcher",
            Product::LeftGraft => "left-graft",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Product::Graft => "→",
            Product::Butcher => "↷",
            Product::LeftButcher => "∘↘",
            Product::LeftGraft => "↘",
        }
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Product {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Product::ALL
            .into_iter()
            .find(|p| p.name() == s || p.symbol() == s)
            .ok_or_else(|| {
                Error::parse(
                    s,
                    0,
                    "product is one of graft, butcher, left-butcher, left-graft",
                )
            })
    }
}
