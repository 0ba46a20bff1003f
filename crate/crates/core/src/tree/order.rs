use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::planar::PlanarTree;
use crate::error::{Error, Result};

/// A vertex, named by the child indices leading to it from the root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexId(Vec<usize>);

impl VertexId {
    pub fn root() -> Self {
        VertexId(Vec::new())
    }

    pub fn from_path(path: Vec<usize>) -> Self {
        VertexId(path)
    }

    pub fn path(&self) -> &[usize] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    fn child(&self, i: usize) -> Self {
        let mut p = self.0.clone();
        p.push(i);
        VertexId(p)
    }
}

/// `/` is the root, `/0/1` the second child of the first child.
impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("/");
        }
        for i in &self.0 {
            write!(f, "/{i}")?;
        }
        Ok(())
    }
}

impl FromStr for VertexId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "/" {
            return Ok(VertexId::root());
        }
        let rest = s
            .strip_prefix('/')
            .ok_or_else(|| Error::parse(s, 0, "vertex paths start with '/'"))?;
        rest.split('/')
            .map(|part| {
                part.parse::<usize>()
                    .map_err(|_| Error::parse(s, 0, format!("bad path component {part:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(VertexId)
    }
}

/// The three vertex orders on a planar tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    /// `<`: `v < w` when the path from the root to `w` passes through `v`.
    Tree,
    /// `≪`: transitive closure of `<` together with "right sibling before left
    /// sibling".
    LeftRefined,
    /// `⋘`: the total order where, for `σ = σ₁ ∘↘ σ₂`, all of the trunk `σ₂`
    /// precedes all of the leftmost branch `σ₁`.
    Total,
}

impl OrderKind {
    pub const ALL: [OrderKind; 3] = [OrderKind::Tree, OrderKind::LeftRefined, OrderKind::Total];

    pub fn symbol(self) -> &'static str {
        match self {
            OrderKind::Tree => "<",
            OrderKind::LeftRefined => "≪",
            OrderKind::Total => "⋘",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Tree => "tree",
            OrderKind::LeftRefined => "left",
            OrderKind::Total => "total",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.name(), self.symbol())
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tree" | "<" => Ok(OrderKind::Tree),
            "left" | "≪" => Ok(OrderKind::LeftRefined),
            "total" | "⋘" => Ok(OrderKind::Total),
            other => Err(Error::parse(
                other,
                0,
                "order kind is one of tree, left, total",
            )),
        }
    }
}

/// A strict order on the vertices of a tree, stored as a dense relation
/// indexed by preorder position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrder {
    kind: OrderKind,
    vertices: Vec<VertexId>,
    relation: Vec<Vec<bool>>,
}

impl VertexOrder {
    pub(crate) fn new(tree: &PlanarTree, kind: OrderKind) -> Self {
        let vertices = tree.vertices();
        let relation = match kind {
            OrderKind::Tree => ancestor_relation(&vertices),
            OrderKind::LeftRefined => left_refined_relation(&vertices),
            OrderKind::Total => {
                let linear = total_order_listing(tree);
                let rank: Vec<usize> = vertices
                    .iter()
                    .map(|v| linear.iter().position(|w| w == v).expect("same vertex set"))
                    .collect();
                let n = vertices.len();
                (0..n)
                    .map(|i| (0..n).map(|j| rank[i] < rank[j]).collect())
                    .collect()
            }
        };
        VertexOrder {
            kind,
            vertices,
            relation,
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    /// Vertices in preorder; positions index [`Self::precedes_index`].
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn index_of(&self, v: &VertexId) -> Option<usize> {
        self.vertices.iter().position(|w| w == v)
    }

    pub fn precedes(&self, v: &VertexId, w: &VertexId) -> Result<bool> {
        let i = self
            .index_of(v)
            .ok_or_else(|| Error::InvalidVertex(v.to_string()))?;
        let j = self
            .index_of(w)
            .ok_or_else(|| Error::InvalidVertex(w.to_string()))?;
        Ok(self.relation[i][j])
    }

    pub fn precedes_index(&self, i: usize, j: usize) -> bool {
        self.relation[i][j]
    }

    /// All related pairs `(v, w)` with `v` before `w`, in preorder.
    pub fn pairs(&self) -> Vec<(VertexId, VertexId)> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.relation[i][j] {
                    out.push((self.vertices[i].clone(), self.vertices[j].clone()));
                }
            }
        }
        out
    }

    /// The vertices listed in order, when the order is total.
    pub fn linear_extension(&self) -> Option<Vec<VertexId>> {
        let n = self.vertices.len();
        let mut idx: Vec<usize> = (0..n).collect();
        for i in 0..n {
            for j in 0..n {
                if i != j && !self.relation[i][j] && !self.relation[j][i] {
                    return None;
                }
            }
        }
        idx.sort_by_key(|&i| (0..n).filter(|&j| self.relation[j][i]).count());
        Some(idx.into_iter().map(|i| self.vertices[i].clone()).collect())
    }
}

impl PlanarTree {
    pub fn vertex_order(&self, kind: OrderKind) -> VertexOrder {
        VertexOrder::new(self, kind)
    }
}

fn is_proper_prefix(a: &VertexId, b: &VertexId) -> bool {
    a.depth() < b.depth() && b.path().starts_with(a.path())
}

fn ancestor_relation(vertices: &[VertexId]) -> Vec<Vec<bool>> {
    vertices
        .iter()
        .map(|v| vertices.iter().map(|w| is_proper_prefix(v, w)).collect())
        .collect()
}

#[allow(clippy::needless_range_loop)]
fn left_refined_relation(vertices: &[VertexId]) -> Vec<Vec<bool>> {
    let n = vertices.len();
    let mut rel = ancestor_relation(vertices);
    for i in 0..n {
        for j in 0..n {
            let (v, w) = (vertices[i].path(), vertices[j].path());
            let siblings =
                !v.is_empty() && v.len() == w.len() && v[..v.len() - 1] == w[..w.len() - 1];
            if siblings && v[v.len() - 1] > w[w.len() - 1] {
                rel[i][j] = true;
            }
        }
    }
    // Warshall
    for k in 0..n {
        for i in 0..n {
            if rel[i][k] {
                for j in 0..n {
                    if rel[k][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
    }
    rel
}

/// Vertices of `tree` listed by `⋘`, unwinding `σ = σ₁ ∘↘ σ₂` as
/// `list(σ₂) ++ list(σ₁)`.
pub(crate) fn total_order_listing(tree: &PlanarTree) -> Vec<VertexId> {
    fn go(t: &PlanarTree, at: &VertexId, skip: usize, out: &mut Vec<VertexId>) {
        // `t` restricted to its children `skip..` is the current trunk.
        let children = t.children();
        if skip == children.len() {
            out.push(at.clone());
            return;
        }
        go(t, at, skip + 1, out);
        go(&children[skip], &at.child(skip), 0, out);
    }
    let mut out = Vec::with_capacity(tree.degree());
    go(tree, &VertexId::root(), 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PlanarTree {
        s.parse().unwrap()
    }

    fn v(s: &str) -> VertexId {
        s.parse().unwrap()
    }

    #[test]
    fn vertex_id_text() {
        assert_eq!(VertexId::root().to_string(), "/");
        assert_eq!(v("/0/2").to_string(), "/0/2");
        assert!("0/2".parse::<VertexId>().is_err());
    }

    #[test]
    fn ladder_total_order_goes_up() {
        let order = t("((()))").vertex_order(OrderKind::Total);
        assert_eq!(
            order.linear_extension().unwrap(),
            vec![v("/"), v("/0"), v("/0/0")]
        );
    }

    #[test]
    fn total_order_visits_right_branches_first() {
        let order = t("(()(()))").vertex_order(OrderKind::Total);
        assert_eq!(
            order.linear_extension().unwrap(),
            vec![v("/"), v("/1"), v("/1/0"), v("/0")]
        );
    }

    #[test]
    fn left_refined_example() {
        // v1 = root, v3 = left leaf, v2 = right child, v4 = its child
        let order = t("(()(()))").vertex_order(OrderKind::LeftRefined);
        let (v1, v2, v3, v4) = (v("/"), v("/1"), v("/0"), v("/1/0"));
        assert!(order.precedes(&v2, &v3).unwrap());
        assert!(!order.precedes(&v3, &v2).unwrap());
        assert!(order.precedes(&v1, &v3).unwrap());
        assert!(order.precedes(&v2, &v4).unwrap());
        assert!(!order.precedes(&v4, &v3).unwrap());
        assert!(!order.precedes(&v3, &v4).unwrap());
        assert!(order.linear_extension().is_none());
    }

    #[test]
    fn root_is_minimal() {
        let order = t("(()(())())").vertex_order(OrderKind::Tree);
        for w in order.vertices().iter().skip(1) {
            assert!(order.precedes(&VertexId::root(), w).unwrap());
            assert!(!order.precedes(w, &VertexId::root()).unwrap());
        }
        assert!(order.precedes(&v("/9"), &v("/")).is_err());
    }
}
