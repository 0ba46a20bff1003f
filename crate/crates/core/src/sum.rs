//! Finite integer linear combinations of trees.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tree::{PlanarTree, Tree};

/// Whether a sum ranges over planar or non-planar trees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Planar,
    NonPlanar,
}

/// Tree types that can index a [`TreeSum`].
pub trait Term:
    Clone + Ord + fmt::Display + FromStr<Err = Error> + Serialize + DeserializeOwned
{
    const FLAVOR: Flavor;
    fn degree(&self) -> usize;
    fn potential_energy(&self) -> usize;
}

impl Term for PlanarTree {
    const FLAVOR: Flavor = Flavor::Planar;
    fn degree(&self) -> usize {
        PlanarTree::degree(self)
    }
    fn potential_energy(&self) -> usize {
        PlanarTree::potential_energy(self)
    }
}

impl Term for Tree {
    const FLAVOR: Flavor = Flavor::NonPlanar;
    fn degree(&self) -> usize {
        Tree::degree(self)
    }
    fn potential_energy(&self) -> usize {
        Tree::potential_energy(self)
    }
}

/// `Σ cᵢ tᵢ` with exact integer coefficients. Zero coefficients are never
/// stored, so two sums are equal exactly when they are equal as vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeSum<T: Term> {
    terms: BTreeMap<T, BigInt>,
}

pub type PlanarSum = TreeSum<PlanarTree>;
pub type NonPlanarSum = TreeSum<Tree>;

impl<T: Term> Default for TreeSum<T> {
    fn default() -> Self {
        TreeSum {
            terms: BTreeMap::new(),
        }
    }
}

impl<T: Term> TreeSum<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn flavor(&self) -> Flavor {
        T::FLAVOR
    }

    pub fn term(tree: T) -> Self {
        Self::monomial(BigInt::one(), tree)
    }

    pub fn monomial(coeff: BigInt, tree: T) -> Self {
        let mut s = Self::zero();
        s.add_term(coeff, tree);
        s
    }

    pub fn add_term(&mut self, coeff: BigInt, tree: T) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&tree) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&tree);
                }
            }
            None => {
                self.terms.insert(tree, coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, scale: &BigInt, other: &TreeSum<T>) {
        for (t, c) in &other.terms {
            self.add_term(scale * c, t.clone());
        }
    }

    pub fn scaled(&self, scale: &BigInt) -> Self {
        let mut out = Self::zero();
        out.add_scaled(scale, self);
        out
    }

    pub fn coeff(&self, tree: &T) -> BigInt {
        self.terms.get(tree).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending serialization order.
    pub fn iter(&self) -> impl Iterator<Item = (&T, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn trees(&self) -> impl Iterator<Item = &T> {
        self.terms.keys().rev()
    }

    /// Sum of the coefficients: the number of trees counted with multiplicity.
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Applies a tree map termwise and collects like terms.
    pub fn map_terms<U: Term>(&self, f: impl Fn(&T) -> U) -> TreeSum<U> {
        let mut out = TreeSum::zero();
        for (t, c) in &self.terms {
            out.add_term(c.clone(), f(t));
        }
        out
    }

    pub fn min_energy(&self) -> Option<usize> {
        self.terms.keys().map(Term::potential_energy).min()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("sums serialize")
    }
}

impl<T: Term> std::ops::Add for &TreeSum<T> {
    type Output = TreeSum<T>;
    fn add(self, rhs: &TreeSum<T>) -> TreeSum<T> {
        let mut out = self.clone();
        out.add_scaled(&BigInt::one(), rhs);
        out
    }
}

impl<T: Term> std::ops::Sub for &TreeSum<T> {
    type Output = TreeSum<T>;
    fn sub(self, rhs: &TreeSum<T>) -> TreeSum<T> {
        let mut out = self.clone();
        out.add_scaled(&-BigInt::one(), rhs);
        out
    }
}

impl<T: Term> FromIterator<(BigInt, T)> for TreeSum<T> {
    fn from_iter<I: IntoIterator<Item = (BigInt, T)>>(iter: I) -> Self {
        let mut s = Self::zero();
        for (c, t) in iter {
            s.add_term(c, t);
        }
        s
    }
}

impl<T: Term> FromIterator<T> for TreeSum<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        iter.into_iter().map(|t| (BigInt::one(), t)).collect()
    }
}

/// Extends a bilinear operation on trees to sums.
pub fn bilinear<A: Term, B: Term, C: Term>(
    a: &TreeSum<A>,
    b: &TreeSum<B>,
    op: impl Fn(&A, &B) -> TreeSum<C>,
) -> TreeSum<C> {
    let mut out = TreeSum::zero();
    for (ta, ca) in a.iter() {
        for (tb, cb) in b.iter() {
            out.add_scaled(&(ca * cb), &op(ta, tb));
        }
    }
    out
}

/// `c1 T1 + c2 T2 - c3 T3`, highest term first; the empty sum prints as `0`.
impl<T: Term> fmt::Display for TreeSum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, false) => write!(f, "{c} {t}")?,
                (0, true) => write!(f, "-{} {t}", c.abs())?,
                (_, false) => write!(f, " + {c} {t}")?,
                (_, true) => write!(f, " - {} {t}", c.abs())?,
            }
        }
        Ok(())
    }
}

impl<T: Term> FromStr for TreeSum<T> {
    type Err = Error;

    /// Accepts the printed form, plus bare trees (coefficient 1), `+ -c T`,
    /// and `0`.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Self::zero();
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens == ["0"] {
            return Ok(out);
        }
        if tokens.is_empty() {
            return Err(Error::parse(s, 0, "empty sum"));
        }
        let mut i = 0;
        let mut sign = BigInt::one();
        let mut expect_term = true;
        while i < tokens.len() {
            let tok = tokens[i];
            if !expect_term {
                sign = match tok {
                    "+" => BigInt::one(),
                    "-" => -BigInt::one(),
                    _ => {
                        return Err(Error::parse(
                            s,
                            0,
                            format!("expected '+' or '-', found {tok:?}"),
                        ))
                    }
                };
                expect_term = true;
                i += 1;
                continue;
            }
            let (coeff, tree_tok) = if tok.contains('(') {
                (BigInt::one(), tok)
            } else {
                let c: BigInt = tok
                    .parse()
                    .map_err(|_| Error::parse(s, 0, format!("bad coefficient {tok:?}")))?;
                i += 1;
                let t = tokens
                    .get(i)
                    .ok_or_else(|| Error::parse(s, s.len(), "coefficient without a tree"))?;
                (c, *t)
            };
            out.add_term(&sign * coeff, tree_tok.parse()?);
            expect_term = false;
            i += 1;
        }
        if expect_term {
            return Err(Error::parse(s, s.len(), "dangling operator"));
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonTerm<T> {
    coeff: String,
    tree: T,
}

/// JSON form: `[{"coeff": "<decimal>", "tree": <tree>}, ...]`.
impl<T: Term> Serialize for TreeSum<T> {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm<&T>> = self
            .iter()
            .map(|(t, c)| JsonTerm {
                coeff: c.to_string(),
                tree: t,
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de, T: Term> Deserialize<'de> for TreeSum<T> {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let terms: Vec<JsonTerm<T>> = Vec::deserialize(deserializer)?;
        let mut out = Self::zero();
        for term in terms {
            let c: BigInt = term.coeff.parse().map_err(|_| {
                serde::de::Error::custom(format!("bad coefficient {:?}", term.coeff))
            })?;
            out.add_term(c, term.tree);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PlanarSum {
        s.parse().unwrap()
    }

    #[test]
    fn like_terms_collect_and_cancel() {
        let s = p("(()) + 2 (()) - 3 (())");
        assert!(s.is_empty());
        assert_eq!(s.to_string(), "0");
        let s = p("1 (()()) + 1 ((()))");
        assert_eq!(s.to_string(), "1 ((())) + 1 (()())");
        assert_eq!(s.total(), BigInt::from(2));
    }

    #[test]
    fn text_round_trip_with_negatives() {
        let s = p("(()()) - ((()))");
        assert_eq!(s.to_string(), "-1 ((())) + 1 (()())");
        assert_eq!(p(&s.to_string()), s);
        assert_eq!(p("1 (()()) + -1 ((()))"), s);
    }

    #[test]
    fn text_errors() {
        for bad in ["", "2", "(()) +", "(()) (())", "x (())", "+ (())"] {
            assert!(bad.parse::<PlanarSum>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn nonplanar_terms_canonicalize() {
        let s: NonPlanarSum = "(()(())) + ((())())".parse().unwrap();
        assert_eq!(s.to_string(), "2 ((())())");
    }

    #[test]
    fn json_round_trip() {
        let s = p("2 (()) - 1 ()");
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"[{"coeff":"2","tree":{"label":null,"children":[{"label":null,"children":[]}]}},{"coeff":"-1","tree":{"label":null,"children":[]}}]"#
        );
        let back: PlanarSum = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn bilinear_distributes() {
        let a = p("2 ()");
        let b = p("() + (())");
        let out = bilinear(&a, &b, |x, y| {
            PlanarSum::term(PlanarTree::graft_root(vec![x.clone(), y.clone()]))
        });
        assert_eq!(out, p("2 (()()) + 2 (()(()))"));
        assert!(
            bilinear(&PlanarSum::zero(), &b, |x: &PlanarTree, _: &PlanarTree| {
                PlanarSum::term(x.clone())
            })
            .is_empty()
        );
    }
}
