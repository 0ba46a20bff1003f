use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::label::Label;
use super::order::{OrderKind, VertexOrder};
use super::planar::PlanarTree;
use crate::error::{Error, Result};

/// A non-planar rooted tree, stored in canonical form: every vertex keeps its
/// branches sorted in descending order, so equal trees have equal
/// serializations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "PlanarTree", into = "PlanarTree")]
pub struct Tree(PlanarTree);

fn canonical(t: &PlanarTree) -> PlanarTree {
    let mut children: Vec<PlanarTree> = t.children().iter().map(canonical).collect();
    children.sort_unstable_by(|a, b| b.cmp(a));
    PlanarTree::new(t.label().cloned(), children)
}

impl Tree {
    /// Forgets the planar embedding.
    pub fn from_planar(t: &PlanarTree) -> Self {
        Tree(canonical(t))
    }

    pub fn vertex() -> Self {
        Tree(PlanarTree::vertex())
    }

    /// `B₊` on a multiset of branches.
    pub fn graft_root(label: Option<Label>, children: Vec<Tree>) -> Self {
        let mut children: Vec<PlanarTree> = children.into_iter().map(|t| t.0).collect();
        children.sort_unstable_by(|a, b| b.cmp(a));
        Tree(PlanarTree::new(label, children))
    }

    /// The canonical planar embedding (branches in descending order).
    pub fn as_planar(&self) -> &PlanarTree {
        &self.0
    }

    pub fn into_planar(self) -> PlanarTree {
        self.0
    }

    pub fn label(&self) -> Option<&Label> {
        self.0.label()
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn potential_energy(&self) -> usize {
        self.0.potential_energy()
    }

    /// Branches at the root, in canonical order.
    pub fn branches(&self) -> Vec<Tree> {
        self.0.children().iter().cloned().map(Tree).collect()
    }

    /// Number of automorphisms of `(V(s), <)`, via `∏ mᵢ! · sym(tᵢ)^mᵢ`
    /// over the distinct branch classes `tᵢ` of multiplicity `mᵢ`.
    pub fn symmetry_factor(&self) -> BigInt {
        fn sym(t: &PlanarTree) -> BigInt {
            let mut out = BigInt::one();
            let children = t.children();
            let mut i = 0;
            while i < children.len() {
                let mut j = i;
                while j < children.len() && children[j] == children[i] {
                    j += 1;
                }
                let m = j - i;
                let inner = sym(&children[i]);
                for k in 1..=m {
                    out *= BigInt::from(k);
                    out *= &inner;
                }
                i = j;
            }
            out
        }
        sym(&self.0)
    }

    /// All planar trees that forget to `self` (the fiber of the projection).
    pub fn embeddings(&self) -> Vec<PlanarTree> {
        fn all(t: &PlanarTree) -> Vec<PlanarTree> {
            let children = t.children();
            if children.is_empty() {
                return vec![t.clone()];
            }
            let child_embeddings: Vec<Vec<PlanarTree>> = children.iter().map(all).collect();
            let mut out = Vec::new();
            for arrangement in
                distinct_permutations(children.len(), |a, b| children[a] == children[b])
            {
                let mut partial: Vec<Vec<PlanarTree>> = vec![Vec::new()];
                for &slot in &arrangement {
                    let mut next = Vec::with_capacity(partial.len() * child_embeddings[slot].len());
                    for prefix in &partial {
                        for e in &child_embeddings[slot] {
                            let mut p = prefix.clone();
                            p.push(e.clone());
                            next.push(p);
                        }
                    }
                    partial = next;
                }
                out.extend(
                    partial
                        .into_iter()
                        .map(|cs| PlanarTree::new(t.label().cloned(), cs)),
                );
            }
            out
        }
        let mut out = all(&self.0);
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Only the ancestor order `<` exists without an embedding.
    pub fn vertex_order(&self, kind: OrderKind) -> Result<VertexOrder> {
        match kind {
            OrderKind::Tree => Ok(VertexOrder::new(&self.0, kind)),
            other => Err(Error::PlanarOrderRequired(other)),
        }
    }
}

/// Index arrangements of `n` items that are pairwise distinct up to `same`.
/// Equal items are assumed adjacent.
fn distinct_permutations(n: usize, same: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    // Representative of each item's class: the first index it equals.
    let class: Vec<usize> = (0..n)
        .map(|i| (0..=i).find(|&j| same(i, j)).unwrap())
        .collect();
    let mut remaining: Vec<usize> = class.clone();
    remaining.sort_unstable();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn go(remaining: &mut Vec<usize>, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining.is_empty() {
            out.push(current.clone());
            return;
        }
        let mut i = 0;
        while i < remaining.len() {
            let c = remaining.remove(i);
            current.push(c);
            go(remaining, current, out);
            current.pop();
            remaining.insert(i, c);
            while i < remaining.len() && remaining[i] == c {
                i += 1;
            }
        }
    }
    go(&mut remaining, &mut current, &mut out);
    out
}

impl From<PlanarTree> for Tree {
    fn from(t: PlanarTree) -> Self {
        Tree::from_planar(&t)
    }
}

impl From<Tree> for PlanarTree {
    fn from(t: Tree) -> Self {
        t.0
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Tree {
    type Err = Error;

    /// Accepts any embedding and canonicalizes it.
    fn from_str(s: &str) -> Result<Self> {
        Ok(Tree::from_planar(&s.parse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form_sorts_branches_descending() {
        assert_eq!(t("(()(()))").to_string(), "((())())");
        assert_eq!(t("((())())").to_string(), "((())())");
        assert_eq!(t("(()((()))(()))").to_string(), "(((()))(())())");
    }

    #[test]
    fn normalization_is_idempotent() {
        let once = t("(()(()())((())))");
        let twice = Tree::from_planar(once.as_planar());
        assert_eq!(once, twice);
    }

    #[test]
    fn symmetry_factors() {
        assert_eq!(t("()").symmetry_factor(), BigInt::from(1));
        assert_eq!(t("(()())").symmetry_factor(), BigInt::from(2));
        assert_eq!(t("(()()())").symmetry_factor(), BigInt::from(6));
        assert_eq!(t("((()())(()()))").symmetry_factor(), BigInt::from(8));
    }

    #[test]
    fn fibers_of_degree_four() {
        let sizes: Vec<usize> = ["(((())))", "((()()))", "((())())", "(()()())"]
            .iter()
            .map(|s| t(s).embeddings().len())
            .collect();
        assert_eq!(sizes, vec![1, 1, 2, 1]);
        for e in t("((())())").embeddings() {
            assert_eq!(Tree::from_planar(&e), t("((())())"));
        }
    }

    #[test]
    fn only_tree_order_without_embedding() {
        assert!(t("(())").vertex_order(OrderKind::Tree).is_ok());
        assert!(t("(())").vertex_order(OrderKind::LeftRefined).is_err());
        assert!(t("(())").vertex_order(OrderKind::Total).is_err());
    }
}
