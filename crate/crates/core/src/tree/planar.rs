use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::label::{is_label_byte, Label};
use super::VertexId;
use crate::error::{Error, Result};

/// An ordered rooted tree: the root carries an optional label and an ordered
/// list of branches, left to right.
///
/// The derived ordering compares labels first (unlabeled before labeled), then
/// the branch lists lexicographically. On serializations this is byte order
/// with `)` ranked below every other symbol, which is the order used for
/// canonical forms and for all tie-breaking in the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanarTree {
    label: Option<Label>,
    children: Vec<PlanarTree>,
}

impl PlanarTree {
    /// The single unlabeled vertex `()`.
    pub fn vertex() -> Self {
        PlanarTree {
            label: None,
            children: Vec::new(),
        }
    }

    pub fn labeled_vertex(label: Label) -> Self {
        PlanarTree {
            label: Some(label),
            children: Vec::new(),
        }
    }

    pub fn new(label: Option<Label>, children: Vec<PlanarTree>) -> Self {
        PlanarTree { label, children }
    }

    /// `B₊`: attach the given branches, in order, to a new unlabeled root.
    pub fn graft_root(children: Vec<PlanarTree>) -> Self {
        PlanarTree {
            label: None,
            children,
        }
    }

    /// The ladder (linear tree) with `n ≥ 1` vertices.
    pub fn ladder(n: usize) -> Self {
        assert!(n >= 1, "a ladder has at least one vertex");
        (1..n).fold(PlanarTree::vertex(), |t, _| PlanarTree::graft_root(vec![t]))
    }

    /// The corolla with `n ≥ 1` vertices: a root with `n - 1` leaves.
    pub fn corolla(n: usize) -> Self {
        assert!(n >= 1, "a corolla has at least one vertex");
        PlanarTree::graft_root(vec![PlanarTree::vertex(); n - 1])
    }

    pub fn label(&self) -> Option<&Label> {
        self.label.as_ref()
    }

    pub fn children(&self) -> &[PlanarTree] {
        &self.children
    }

    pub fn into_parts(self) -> (Option<Label>, Vec<PlanarTree>) {
        (self.label, self.children)
    }

    pub fn is_vertex(&self) -> bool {
        self.children.is_empty()
    }

    /// Number of vertices.
    pub fn degree(&self) -> usize {
        1 + self.children.iter().map(PlanarTree::degree).sum::<usize>()
    }

    /// Sum of vertex depths, the root having depth 0.
    pub fn potential_energy(&self) -> usize {
        fn walk(t: &PlanarTree, depth: usize) -> usize {
            depth + t.children.iter().map(|c| walk(c, depth + 1)).sum::<usize>()
        }
        walk(self, 0)
    }

    pub fn is_unlabeled(&self) -> bool {
        self.label.is_none() && self.children.iter().all(PlanarTree::is_unlabeled)
    }

    /// Vertex identifiers in left-to-right preorder.
    pub fn vertices(&self) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.degree());
        let mut path = Vec::new();
        fn walk(t: &PlanarTree, path: &mut Vec<usize>, out: &mut Vec<VertexId>) {
            out.push(VertexId::from_path(path.clone()));
            for (i, c) in t.children.iter().enumerate() {
                path.push(i);
                walk(c, path, out);
                path.pop();
            }
        }
        walk(self, &mut path, &mut out);
        out
    }

    pub fn subtree(&self, vertex: &VertexId) -> Option<&PlanarTree> {
        vertex
            .path()
            .iter()
            .try_fold(self, |t, &i| t.children.get(i))
    }

    /// Splits `σ = σ₁ ∘↘ σ₂` into its leftmost root branch and the trunk.
    pub fn decompose(&self) -> Result<(PlanarTree, PlanarTree)> {
        let (first, rest) = self.children.split_first().ok_or(Error::SingleVertex)?;
        let trunk = PlanarTree {
            label: self.label.clone(),
            children: rest.to_vec(),
        };
        Ok((first.clone(), trunk))
    }

    /// Inserts `branch` as the new leftmost child of the vertex at `path`.
    pub(crate) fn graft_leftmost_at(&self, path: &[usize], branch: &PlanarTree) -> PlanarTree {
        match path.split_first() {
            None => {
                let mut children = Vec::with_capacity(self.children.len() + 1);
                children.push(branch.clone());
                children.extend(self.children.iter().cloned());
                PlanarTree {
                    label: self.label.clone(),
                    children,
                }
            }
            Some((&i, rest)) => {
                let mut out = self.clone();
                out.children[i] = self.children[i].graft_leftmost_at(rest, branch);
                out
            }
        }
    }

    /// Every elementary left cut `(σ^v, σ_v)`: for each vertex `v` with at
    /// least one child, the leftmost branch starting from `v` and the trunk
    /// left behind. Listed in preorder of `v`.
    pub fn left_cuts(&self) -> Vec<(PlanarTree, PlanarTree)> {
        let mut out = Vec::new();
        for v in self.vertices() {
            let sub = self.subtree(&v).expect("own vertex");
            if let Some(branch) = sub.children.first() {
                out.push((branch.clone(), self.remove_leftmost_at(v.path())));
            }
        }
        out
    }

    fn remove_leftmost_at(&self, path: &[usize]) -> PlanarTree {
        match path.split_first() {
            None => PlanarTree {
                label: self.label.clone(),
                children: self.children[1..].to_vec(),
            },
            Some((&i, rest)) => {
                let mut out = self.clone();
                out.children[i] = self.children[i].remove_leftmost_at(rest);
                out
            }
        }
    }

    fn write(&self, out: &mut String) {
        if let Some(label) = &self.label {
            out.push_str(label.as_str());
        }
        out.push('(');
        for c in &self.children {
            c.write(out);
        }
        out.push(')');
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write(&mut s);
        f.write_str(&s)
    }
}

impl FromStr for PlanarTree {
    type Err = Error;

    /// Parses `Label? "(" PlanarTree* ")"`; surrounding whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let mut parser = Parser {
            input: trimmed,
            bytes: trimmed.as_bytes(),
            pos: 0,
        };
        let tree = parser.tree()?;
        if parser.pos != parser.bytes.len() {
            return Err(Error::parse(trimmed, parser.pos, "trailing input"));
        }
        Ok(tree)
    }
}

struct Parser<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn tree(&mut self) -> Result<PlanarTree> {
        let start = self.pos;
        while self.pos < self.bytes.len() && is_label_byte(self.bytes[self.pos]) {
            self.pos += 1;
        }
        let label = (self.pos > start).then(|| Label(self.input[start..self.pos].to_string()));
        self.expect(b'(')?;
        let mut children = Vec::new();
        loop {
            match self.bytes.get(self.pos) {
                Some(b')') => {
                    self.pos += 1;
                    return Ok(PlanarTree { label, children });
                }
                Some(_) => children.push(self.tree()?),
                None => return Err(Error::parse(self.input, self.pos, "unclosed '('")),
            }
        }
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        match self.bytes.get(self.pos) {
            Some(&b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(&b) => Err(Error::parse(
                self.input,
                self.pos,
                format!("expected '{}', found '{}'", byte as char, b as char),
            )),
            None => Err(Error::parse(
                self.input,
                self.pos,
                format!("expected '{}', found end of input", byte as char),
            )),
        }
    }
}
