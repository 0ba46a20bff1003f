//! Monomials in generators, their evaluation under the four tree products,
//! Agrachev-Gamkrelidze monomial bases, and tree-grounded bases.
//!
//! A monomial `[M,N]` stands for `M ▷ N` with the product left abstract. Under
//! `→` it is an element of the free pre-Lie algebra; under `↷` it collapses to
//! a single tree, its lower-energy term; under `∘↘` to a single planar tree.
//!
//! Generators are ordered by their position in a [`GeneratorOrder`]. Basis
//! elements of higher degree are larger than those of lower degree, and
//! within a degree the construction index decides. Side conditions between
//! composite elements (such as `s₁ ▷ s₂ ≥ s₃ ▷ s₄` in degree five) are read
//! with this induced order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matrix::CoeffMatrix;
use crate::products::{butcher, graft_sums, left_butcher, left_graft_sums, Product};
use crate::projection::Section;
use crate::sum::{NonPlanarSum, PlanarSum};
use crate::tree::{canonical_cmp, enumerate_nonplanar_with, BinaryTree, Label, PlanarTree, Tree};

/// The generator that evaluates to the unlabeled vertex `•`.
pub const DEFAULT_GENERATOR: &str = "g";

/// Text form: a generator name, or `[M,N]` for `M ▷ N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum MonomialExpr {
    Generator(String),
    Product(Box<MonomialExpr>, Box<MonomialExpr>),
}

impl MonomialExpr {
    pub fn generator(name: &str) -> Result<Self> {
        Label::new(name)?;
        Ok(MonomialExpr::Generator(name.to_string()))
    }

    pub fn g() -> Self {
        MonomialExpr::Generator(DEFAULT_GENERATOR.to_string())
    }

    pub fn product(left: MonomialExpr, right: MonomialExpr) -> Self {
        MonomialExpr::Product(Box::new(left), Box::new(right))
    }

    /// Number of generator leaves.
    pub fn degree(&self) -> usize {
        match self {
            MonomialExpr::Generator(_) => 1,
            MonomialExpr::Product(l, r) => l.degree() + r.degree(),
        }
    }

    /// Distinct generator names, sorted.
    pub fn generators(&self) -> Vec<&str> {
        fn walk<'a>(m: &'a MonomialExpr, out: &mut Vec<&'a str>) {
            match m {
                MonomialExpr::Generator(s) => out.push(s),
                MonomialExpr::Product(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Same shape, every generator renamed to [`DEFAULT_GENERATOR`].
    pub fn with_default_generator(&self) -> Self {
        match self {
            MonomialExpr::Generator(_) => MonomialExpr::g(),
            MonomialExpr::Product(l, r) => {
                MonomialExpr::product(l.with_default_generator(), r.with_default_generator())
            }
        }
    }

    /// The shape as a planar binary tree.
    pub fn to_binary(&self) -> BinaryTree {
        match self {
            MonomialExpr::Generator(_) => BinaryTree::Leaf,
            MonomialExpr::Product(l, r) => BinaryTree::join(l.to_binary(), r.to_binary()),
        }
    }

    pub fn from_binary(b: &BinaryTree) -> Self {
        match b {
            BinaryTree::Leaf => MonomialExpr::g(),
            BinaryTree::Node(l, r) => {
                MonomialExpr::product(MonomialExpr::from_binary(l), MonomialExpr::from_binary(r))
            }
        }
    }

    fn fold<T>(&self, leaf: &impl Fn(&str) -> T, node: &impl Fn(T, T) -> T) -> T {
        match self {
            MonomialExpr::Generator(s) => leaf(s),
            MonomialExpr::Product(l, r) => {
                let a = l.fold(leaf, node);
                let b = r.fold(leaf, node);
                node(a, b)
            }
        }
    }
}

fn vertex_for(name: &str) -> PlanarTree {
    if name == DEFAULT_GENERATOR {
        PlanarTree::vertex()
    } else {
        PlanarTree::labeled_vertex(Label(name.to_string()))
    }
}

impl fmt::Display for MonomialExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialExpr::Generator(s) => f.write_str(s),
            MonomialExpr::Product(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

impl FromStr for MonomialExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let bytes = text.as_bytes();
        let mut pos = 0;
        let m = parse_expr(text, bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::parse(text, pos, "trailing input"));
        }
        Ok(m)
    }
}

fn parse_expr(s: &str, bytes: &[u8], pos: &mut usize) -> Result<MonomialExpr> {
    if bytes.get(*pos) == Some(&b'[') {
        *pos += 1;
        let l = parse_expr(s, bytes, pos)?;
        expect(s, bytes, pos, b',')?;
        let r = parse_expr(s, bytes, pos)?;
        expect(s, bytes, pos, b']')?;
        return Ok(MonomialExpr::product(l, r));
    }
    let start = *pos;
    while bytes
        .get(*pos)
        .is_some_and(|&b| crate::tree::is_label_byte(b))
    {
        *pos += 1;
    }
    if start == *pos {
        return Err(Error::parse(s, start, "expected a generator name or '['"));
    }
    Ok(MonomialExpr::Generator(s[start..*pos].to_string()))
}

fn expect(s: &str, bytes: &[u8], pos: &mut usize, want: u8) -> Result<()> {
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

impl TryFrom<String> for MonomialExpr {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<MonomialExpr> for String {
    fn from(m: MonomialExpr) -> String {
        m.to_string()
    }
}

/// The value of a monomial under one of the four products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluated {
    Planar(PlanarSum),
    NonPlanar(NonPlanarSum),
}

impl Evaluated {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Evaluated::Planar(s) => s.to_json(),
            Evaluated::NonPlanar(s) => s.to_json(),
        }
    }
}

impl fmt::Display for Evaluated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evaluated::Planar(s) => s.fmt(f),
            Evaluated::NonPlanar(s) => s.fmt(f),
        }
    }
}

/// Binds the abstract product of `m` to `product`; generators become single
/// vertices.
pub fn evaluate(m: &MonomialExpr, product: Product) -> Evaluated {
    match product {
        Product::Graft => Evaluated::NonPlanar(evaluate_pre_lie(m)),
        Product::Butcher => Evaluated::NonPlanar(NonPlanarSum::term(lower_energy_term(m))),
        Product::LeftButcher => Evaluated::Planar(PlanarSum::term(planar_term(m))),
        Product::LeftGraft => {
            Evaluated::Planar(m.fold(&|s| PlanarSum::term(vertex_for(s)), &|a, b| {
                left_graft_sums(&a, &b)
            }))
        }
    }
}

/// `m(•, →)`.
pub fn evaluate_pre_lie(m: &MonomialExpr) -> NonPlanarSum {
    m.fold(
        &|s| NonPlanarSum::term(Tree::from_planar(&vertex_for(s))),
        &|a, b| graft_sums(&a, &b),
    )
}

/// `m(•, ↷)`.
pub fn lower_energy_term(m: &MonomialExpr) -> Tree {
    m.fold(&|s| Tree::from_planar(&vertex_for(s)), &|a, b| {
        butcher(&a, &b)
    })
}

/// `m(•, ∘↘)`.
pub fn planar_term(m: &MonomialExpr) -> PlanarTree {
    m.fold(&vertex_for, &|a, b| left_butcher(&a, &b))
}

/// The unique monomial with `planar_term(m) = σ`; labels become generators.
pub fn monomial_of_planar(sigma: &PlanarTree) -> MonomialExpr {
    match sigma.decompose() {
        Err(_) => match sigma.label() {
            Some(l) => MonomialExpr::Generator(l.as_str().to_string()),
            None => MonomialExpr::g(),
        },
        Ok((s1, s2)) => MonomialExpr::product(monomial_of_planar(&s1), monomial_of_planar(&s2)),
    }
}

/// A totally ordered generator alphabet, smallest first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct GeneratorOrder(Vec<String>);

impl GeneratorOrder {
    pub fn new(alphabet: Vec<String>) -> Result<Self> {
        if alphabet.is_empty() {
            return Err(Error::parse(
                "",
                0,
                "the alphabet needs at least one generator",
            ));
        }
        for (i, name) in alphabet.iter().enumerate() {
            Label::new(name)?;
            if alphabet[..i].contains(name) {
                return Err(Error::parse(name, 0, "generator listed twice"));
            }
        }
        Ok(GeneratorOrder(alphabet))
    }

    /// The one-generator alphabet `{g}`.
    pub fn single() -> Self {
        GeneratorOrder(vec![DEFAULT_GENERATOR.to_string()])
    }

    pub fn generators(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Default for GeneratorOrder {
    fn default() -> Self {
        GeneratorOrder::single()
    }
}

impl TryFrom<Vec<String>> for GeneratorOrder {
    type Error = Error;
    fn try_from(v: Vec<String>) -> Result<Self> {
        GeneratorOrder::new(v)
    }
}

impl From<GeneratorOrder> for Vec<String> {
    fn from(o: GeneratorOrder) -> Vec<String> {
        o.0
    }
}

/// Comma-separated names, smallest first.
impl FromStr for GeneratorOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GeneratorOrder::new(s.split(',').map(|p| p.trim().to_string()).collect())
    }
}

impl fmt::Display for GeneratorOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(","))
    }
}

/// A monomial basis of one homogeneous component. Serializes as the basis
/// manifest `{degree, generator_order, monomials}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialBasis {
    pub degree: usize,
    pub generator_order: GeneratorOrder,
    pub monomials: Vec<MonomialExpr>,
}

impl MonomialBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn lower_energy_terms(&self) -> Vec<Tree> {
        self.monomials.iter().map(lower_energy_term).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("bases serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let b: MonomialBasis = serde_json::from_str(text)?;
        for m in &b.monomials {
            if m.degree() != b.degree {
                return Err(Error::DegreeMismatch {
                    left: m.degree(),
                    right: b.degree,
                });
            }
        }
        Ok(b)
    }
}

/// Agrachev-Gamkrelidze bases of degrees `1..=n`: in degree `k`, every
/// `u₁ ▷ (u₂ ▷ (⋯ ▷ (u_r ▷ s)))` with `u₁ ≥ ⋯ ≥ u_r` basis elements of total
/// degree `k − 1` and `s` a generator. Words are listed by their letters,
/// higher degree first and lower index first; generators vary fastest.
fn ag_layers(n: usize, order: &GeneratorOrder) -> Vec<Vec<MonomialExpr>> {
    let mut layers: Vec<Vec<MonomialExpr>> = vec![order
        .generators()
        .iter()
        .map(|s| MonomialExpr::Generator(s.clone()))
        .collect()];
    for k in 2..=n {
        let mut words = Vec::new();
        let mut current = Vec::new();
        words_of(&layers, k - 1, None, &mut current, &mut words);
        let mut layer = Vec::with_capacity(words.len() * order.len());
        for word in &words {
            for s in order.generators() {
                let mut m = MonomialExpr::Generator(s.clone());
                for &(deg, idx) in word.iter().rev() {
                    m = MonomialExpr::product(layers[deg - 1][idx].clone(), m);
                }
                layer.push(m);
            }
        }
        layers.push(layer);
    }
    layers
}

/// Weakly decreasing words of `(degree, index)` letters with degrees summing
/// to `remaining`, each letter at most `bound`.
fn words_of(
    layers: &[Vec<MonomialExpr>],
    remaining: usize,
    bound: Option<(usize, usize)>,
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for deg in (1..=remaining.min(layers.len())).rev() {
        for idx in 0..layers[deg - 1].len() {
            if bound.is_some_and(|b| (deg, idx) > b) {
                continue;
            }
            current.push((deg, idx));
            words_of(layers, remaining - deg, Some((deg, idx)), current, out);
            current.pop();
        }
    }
}

pub fn ag_basis(n: usize, order: &GeneratorOrder) -> Result<MonomialBasis> {
    ag_basis_with(n, order, &Limits::default())
}

pub fn ag_basis_with(n: usize, order: &GeneratorOrder, limits: &Limits) -> Result<MonomialBasis> {
    limits.check_degree(n)?;
    if order.len() > 1 && n > limits.multigen_degree {
        return Err(Error::CapExceeded {
            what: "multi-generator",
            degree: n,
            cap: limits.multigen_degree,
        });
    }
    let monomials = ag_layers(n, order).pop().expect("n >= 1");
    Ok(MonomialBasis {
        degree: n,
        generator_order: order.clone(),
        monomials,
    })
}

/// The degree-`n` Agrachev-Gamkrelidze monomials over an ordered alphabet.
pub fn ag_basis_multigen(n: usize, alphabet: &GeneratorOrder) -> Result<Vec<MonomialExpr>> {
    Ok(ag_basis(n, alphabet)?.monomials)
}

/// Reduces a one-generator monomial list to the default generator, checking
/// degrees.
fn single_generator(monomials: &[MonomialExpr], n: usize) -> Result<Vec<MonomialExpr>> {
    let mut names: Vec<&str> = monomials
        .iter()
        .flat_map(MonomialExpr::generators)
        .collect();
    names.sort_unstable();
    names.dedup();
    if names.len() > 1 {
        return Err(Error::MultipleGenerators(names.len()));
    }
    monomials
        .iter()
        .map(|m| {
            if m.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: m.degree(),
                    right: n,
                });
            }
            Ok(m.with_default_generator())
        })
        .collect()
}

/// Columns `m(•, →)` over the canonical tree basis of degree `n`, in the
/// order the monomials are given.
pub fn expand_monomials(monomials: &[MonomialExpr], n: usize) -> Result<CoeffMatrix> {
    expand_monomials_with(monomials, n, &Limits::default())
}

pub fn expand_monomials_with(
    monomials: &[MonomialExpr],
    n: usize,
    limits: &Limits,
) -> Result<CoeffMatrix> {
    let ms = single_generator(monomials, n)?;
    let basis = enumerate_nonplanar_with(n, limits)?;
    let index: HashMap<&Tree, usize> = basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let columns = ms
        .iter()
        .map(|m| {
            let mut col = vec![BigInt::zero(); basis.len()];
            for (t, c) in evaluate_pre_lie(m).iter() {
                col[index[t]] = c.clone();
            }
            col
        })
        .collect();
    Ok(CoeffMatrix::from_columns(
        n,
        basis.iter().map(ToString::to_string).collect(),
        monomials.iter().map(ToString::to_string).collect(),
        columns,
    ))
}

pub fn expand_basis(basis: &MonomialBasis) -> Result<CoeffMatrix> {
    if basis.generator_order.len() > 1 {
        return Err(Error::MultipleGenerators(basis.generator_order.len()));
    }
    expand_monomials(&basis.monomials, basis.degree)
}

/// Column permutation putting monomials in the canonical order of their
/// lower-energy terms.
pub fn canonical_column_order(monomials: &[MonomialExpr]) -> Vec<usize> {
    let lower: Vec<PlanarTree> = monomials
        .iter()
        .map(|m| lower_energy_term(m).into_planar())
        .collect();
    let mut perm: Vec<usize> = (0..monomials.len()).collect();
    perm.sort_by(|&a, &b| canonical_cmp(&lower[a], &lower[b]));
    perm
}

/// Result of comparing lower-energy terms against the tree basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Grounding {
    pub grounded: bool,
    pub missing: Vec<Tree>,
    pub duplicated: Vec<Tree>,
}

/// Whether the lower-energy terms of `monomials` are exactly `T_n`, each
/// once.
pub fn is_tree_grounded(monomials: &[MonomialExpr], n: usize) -> Result<Grounding> {
    is_tree_grounded_with(monomials, n, &Limits::default())
}

pub fn is_tree_grounded_with(
    monomials: &[MonomialExpr],
    n: usize,
    limits: &Limits,
) -> Result<Grounding> {
    let ms = single_generator(monomials, n)?;
    let mut counts: BTreeMap<Tree, usize> = BTreeMap::new();
    for m in &ms {
        *counts.entry(lower_energy_term(m)).or_insert(0) += 1;
    }
    let basis = enumerate_nonplanar_with(n, limits)?;
    let missing: Vec<Tree> = basis
        .iter()
        .filter(|t| !counts.contains_key(t))
        .cloned()
        .collect();
    let duplicated: Vec<Tree> = basis
        .iter()
        .filter(|t| counts.get(t).is_some_and(|&c| c > 1))
        .cloned()
        .collect();
    Ok(Grounding {
        grounded: missing.is_empty() && duplicated.is_empty() && ms.len() == basis.len(),
        missing,
        duplicated,
    })
}

/// `S(m(•, ↷)) = m(•, ∘↘)` for a tree-grounded list.
pub fn section_of_basis(monomials: &[MonomialExpr], n: usize) -> Result<Section> {
    let g = is_tree_grounded(monomials, n)?;
    if !g.grounded {
        return Err(Error::NotTreeGrounded {
            missing: g.missing.iter().map(ToString::to_string).collect(),
            duplicated: g.duplicated.iter().map(ToString::to_string).collect(),
        });
    }
    Section::new(
        single_generator(monomials, n)?
            .iter()
            .map(|m| (lower_energy_term(m), planar_term(m))),
    )
}

/// The tree-grounded monomials of degree `n` induced by `section`, one per
/// tree in canonical order.
pub fn basis_from_section(section: &Section, n: usize) -> Result<Vec<MonomialExpr>> {
    enumerate_nonplanar_with(n, &Limits::default())?
        .iter()
        .map(|t| Ok(monomial_of_planar(section.apply(t)?)))
        .collect()
}

/// One monomial per line; blank lines and `#` comments are skipped.
pub fn parse_monomial_file(text: &str) -> Result<Vec<MonomialExpr>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(line.parse().map_err(|e: Error| Error::File {
            context: "monomials".into(),
            line: i + 1,
            message: e.to_string(),
        })?);
    }
    Ok(out)
}

pub fn format_monomial_file(monomials: &[MonomialExpr]) -> String {
    monomials.iter().map(|m| format!("{m}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> MonomialExpr {
        s.parse().unwrap()
    }
    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    #[test]
    fn text_round_trip() {
        for s in ["g", "[g,g]", "[[a,b],[g,x_1]]"] {
            assert_eq!(m(s).to_string(), s);
        }
        for bad in ["", "[g]", "[g,g", "G", "[g,g]]", "[g, g]"] {
            assert!(bad.parse::<MonomialExpr>().is_err(), "{bad:?}");
        }
        assert_eq!(m("[[a,b],[g,x_1]]").degree(), 4);
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(lower_energy_term(&m("[g,[g,g]]")), t("(()())"));
        assert_eq!(lower_energy_term(&m("[[g,g],g]")), t("((()))"));
        assert_eq!(lower_energy_term(&m("g")), t("()"));
        assert_eq!(
            evaluate_pre_lie(&m("[g,[g,g]]")),
            "((())) + (()())".parse().unwrap()
        );
        assert_eq!(evaluate_pre_lie(&m("[[g,g],g]")), "((()))".parse().unwrap());
        assert_eq!(
            evaluate(&m("[g,[g,g]]"), Product::Butcher).to_string(),
            "1 (()())"
        );
        assert_eq!(
            evaluate(&m("[g,[g,g]]"), Product::LeftGraft).to_string(),
            "1 ((())) + 1 (()())"
        );
        assert_eq!(planar_term(&m("[[g,g],g]")).to_string(), "((()))");
    }

    #[test]
    fn labeled_generators() {
        assert_eq!(planar_term(&m("[a,[b,c]]")).to_string(), "c(a()b())");
        assert_eq!(
            monomial_of_planar(&"c(a()b())".parse().unwrap()),
            m("[a,[b,c]]")
        );
    }

    #[test]
    fn ag_small_degrees() {
        let one = GeneratorOrder::single();
        let counts: Vec<usize> = (1..=6).map(|n| ag_basis(n, &one).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 9, 20]);
        let b3: Vec<String> = ag_basis(3, &one)
            .unwrap()
            .monomials
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(b3, ["[[g,g],g]", "[g,[g,g]]"]);
        let b4: Vec<String> = ag_basis(4, &one)
            .unwrap()
            .monomials
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(
            b4,
            [
                "[[[g,g],g],g]",
                "[[g,[g,g]],g]",
                "[[g,g],[g,g]]",
                "[g,[g,[g,g]]]"
            ]
        );
    }

    #[test]
    fn multigenerator_counts() {
        let ab: GeneratorOrder = "a,b".parse().unwrap();
        assert_eq!(ag_basis_multigen(2, &ab).unwrap().len(), 4);
        assert_eq!(ag_basis_multigen(3, &ab).unwrap().len(), 14);
        assert!(matches!(
            ag_basis_multigen(6, &ab),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            expand_basis(&ag_basis(3, &ab).unwrap()),
            Err(Error::MultipleGenerators(2))
        ));
    }

    #[test]
    fn grounding_and_sections() {
        let b4 = ag_basis(4, &GeneratorOrder::single()).unwrap();
        assert!(is_tree_grounded(&b4.monomials, 4).unwrap().grounded);
        let s = section_of_basis(&b4.monomials, 4).unwrap();
        assert_eq!(basis_from_section(&s, 4).unwrap().len(), 4);
        let bad = vec![m("[g,[g,g]]"), m("[g,[g,g]]")];
        let g = is_tree_grounded(&bad, 3).unwrap();
        assert_eq!(g.missing, [t("((()))")]);
        assert_eq!(g.duplicated, [t("(()())")]);
        assert!(matches!(
            section_of_basis(&bad, 3),
            Err(Error::NotTreeGrounded { .. })
        ));
        assert!(matches!(
            is_tree_grounded(&[m("[g,g]")], 3),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn files_and_manifest() {
        let text = "# basis\n[g,g]\n\n[g,g]  # again\n";
        assert_eq!(parse_monomial_file(text).unwrap().len(), 2);
        assert!(matches!(
            parse_monomial_file("g\n[g,\n"),
            Err(Error::File { line: 2, .. })
        ));
        let b = ag_basis(3, &GeneratorOrder::single()).unwrap();
        let json = b.to_json().to_string();
        assert_eq!(
            json,
            r#"{"degree":3,"generator_order":["g"],"monomials":["[[g,g],g]","[g,[g,g]]"]}"#
        );
        assert_eq!(MonomialBasis::from_json(&json).unwrap(), b);
    }
}
