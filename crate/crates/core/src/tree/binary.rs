use std::fmt;
use std::str::FromStr;

use super::planar::PlanarTree;
use crate::error::{Error, Result};

/// A planar binary tree. Text form: `.` for the leaf, `[l,r]` for `l ∨ r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    /// The `∨` product: `left` and `right` become the two branches.
    pub fn join(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    /// Number of leaves.
    pub fn degree(&self) -> usize {
        match self {
            BinaryTree::Leaf => 1,
            BinaryTree::Node(l, r) => l.degree() + r.degree(),
        }
    }

    /// The rotation correspondence: `Φ(leaf) = •` and
    /// `Φ(t₁ ∨ t₂) = Φ(t₁) ∘↘ Φ(t₂)`.
    pub fn rotate(&self) -> PlanarTree {
        match self {
            BinaryTree::Leaf => PlanarTree::vertex(),
            BinaryTree::Node(l, r) => crate::products::left_butcher(&l.rotate(), &r.rotate()),
        }
    }

    /// Inverse of [`Self::rotate`]; labels are dropped.
    pub fn unrotate(tree: &PlanarTree) -> Self {
        match tree.decompose() {
            Err(_) => BinaryTree::Leaf,
            Ok((branch, trunk)) => {
                BinaryTree::join(BinaryTree::unrotate(&branch), BinaryTree::unrotate(&trunk))
            }
        }
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => f.write_str("."),
            BinaryTree::Node(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

impl FromStr for BinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bytes = s.as_bytes();
        let mut pos = 0;
        fn node(s: &str, bytes: &[u8], pos: &mut usize) -> Result<BinaryTree> {
            match bytes.get(*pos) {
                Some(b'.') => {
                    *pos += 1;
                    Ok(BinaryTree::Leaf)
                }
                Some(b'[') => {
                    *pos += 1;
                    let l = node(s, bytes, pos)?;
                    eat(s, bytes, pos, b',')?;
                    let r = node(s, bytes, pos)?;
                    eat(s, bytes, pos, b']')?;
                    Ok(BinaryTree::join(l, r))
                }
                _ => Err(Error::parse(s, *pos, "expected '.' or '['")),
            }
        }
        fn eat(s: &str, bytes: &[u8], pos: &mut usize, want: u8) -> Result<()> {
            if bytes.get(*pos) == Some(&want) {
                *pos += 1;
                Ok(())
            } else {
                Err(Error::parse(
                    s,
                    *pos,
                    format!("expected '{}'", want as char),
                ))
            }
        }
        let tree = node(s, bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::parse(s, pos, "trailing input"));
        }
        Ok(tree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BinaryTree {
        s.parse().unwrap()
    }

    #[test]
    fn join_builds_nodes() {
        let y = BinaryTree::join(BinaryTree::Leaf, BinaryTree::Leaf);
        assert_eq!(y, b("[.,.]"));
        assert_eq!(
            BinaryTree::join(BinaryTree::Leaf, y.clone()),
            b("[.,[.,.]]")
        );
        assert_eq!(BinaryTree::join(y.clone(), y).degree(), 4);
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(BinaryTree::Leaf.rotate().to_string(), "()");
        assert_eq!(b("[.,.]").rotate().to_string(), "(())");
        assert_eq!(b("[[.,.],.]").rotate().to_string(), "((()))");
        assert_eq!(b("[.,[.,.]]").rotate().to_string(), "(()())");
    }

    #[test]
    fn unrotate_inverts() {
        for s in ["()", "(()(()))", "((())()())", "(((()))())"] {
            let t: PlanarTree = s.parse().unwrap();
            assert_eq!(BinaryTree::unrotate(&t).rotate(), t);
        }
    }

    #[test]
    fn text_errors() {
        for bad in ["", "[.]", "[.,.", "..", "[.,.]x"] {
            assert!(bad.parse::<BinaryTree>().is_err(), "{bad:?}");
        }
    }
}
