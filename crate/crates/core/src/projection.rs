//! The projection `π: 𝒯^pl → 𝒯`, the composite `Ψ̄ = π ∘ Ψ`, sections of
//! `π`, and the maps `Ψ̃_S = Ψ̄ ∘ S`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bijection::count_bijections;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matrix::CoeffMatrix;
use crate::psi::{coeff_c_recursive, psi};
use crate::sum::NonPlanarSum;
use crate::tree::{enumerate_nonplanar_with, enumerate_planar_with, OrderKind, PlanarTree, Tree};

/// Largest number of sections [`all_sections`] will list.
pub const MAX_SECTIONS: usize = 1 << 16;

/// `π`: forget the planar embedding.
pub fn forget_planarity(sigma: &PlanarTree) -> Tree {
    Tree::from_planar(sigma)
}

/// `Ψ̄(τ) = Σ_s α(s, τ) s`.
pub fn psi_bar(tau: &PlanarTree) -> NonPlanarSum {
    psi(tau).map_terms(forget_planarity)
}

/// `b̃(s, τ)`: bijections `V(s) → V(τ)` increasing from `<` to `⋘` whose
/// inverse is increasing for `<`.
pub fn count_tilde_b(s: &Tree, tau: &PlanarTree) -> Result<BigInt> {
    count_tilde_b_with(s, tau, &Limits::default())
}

pub fn count_tilde_b_with(s: &Tree, tau: &PlanarTree, limits: &Limits) -> Result<BigInt> {
    check_same_degree(s.degree(), tau.degree())?;
    limits.check_brute_force(s.degree())?;
    let order = s.vertex_order(OrderKind::Tree)?;
    Ok(count_bijections(&order, &order, tau).into())
}

/// `α(s, τ) = Σ_{π(σ) = s} c(σ, τ)`.
pub fn alpha(s: &Tree, tau: &PlanarTree) -> Result<BigInt> {
    check_same_degree(s.degree(), tau.degree())?;
    Ok(s.embeddings()
        .iter()
        .map(|sigma| coeff_c_recursive(sigma, tau))
        .sum())
}

fn check_same_degree(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DegreeMismatch { left, right });
    }
    Ok(())
}

/// Rows: non-planar trees of degree `n`; columns: planar trees of degree
/// `n`; both in canonical order.
pub fn alpha_matrix(n: usize) -> Result<CoeffMatrix> {
    alpha_matrix_with(n, &Limits::default())
}

pub fn alpha_matrix_with(n: usize, limits: &Limits) -> Result<CoeffMatrix> {
    let rows = enumerate_nonplanar_with(n, limits)?;
    let cols = enumerate_planar_with(n, limits)?;
    let columns = cols
        .iter()
        .map(|tau| coefficients(&rows, &psi_bar(tau)))
        .collect();
    Ok(CoeffMatrix::from_columns(
        n,
        rows.iter().map(ToString::to_string).collect(),
        cols.iter().map(ToString::to_string).collect(),
        columns,
    ))
}

fn coefficients(basis: &[Tree], sum: &NonPlanarSum) -> Vec<BigInt> {
    basis.iter().map(|t| sum.coeff(t)).collect()
}

/// A choice of planar representative `S(t)` for each tree `t` of the degrees
/// it covers, with `π(S(t)) = t`.
///
/// Text form: one `<tree> => <planar tree>` entry per line; `#` starts a
/// comment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    map: BTreeMap<Tree, PlanarTree>,
    degrees: BTreeSet<usize>,
}

impl Section {
    /// Validates `π(S(t)) = t` for every entry and that each degree present
    /// is covered completely.
    pub fn new(entries: impl IntoIterator<Item = (Tree, PlanarTree)>) -> Result<Self> {
        Self::new_with(entries, &Limits::default())
    }

    pub fn new_with(
        entries: impl IntoIterator<Item = (Tree, PlanarTree)>,
        limits: &Limits,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (t, image) in entries {
            check_entry(&t, &image)?;
            if map.contains_key(&t) {
                return Err(Error::SectionDuplicate(t.to_string()));
            }
            map.insert(t, image);
        }
        let degrees: BTreeSet<usize> = map.keys().map(Tree::degree).collect();
        for &n in &degrees {
            for t in enumerate_nonplanar_with(n, limits)? {
                if !map.contains_key(&t) {
                    return Err(Error::SectionIncomplete {
                        degree: n,
                        missing: t.to_string(),
                    });
                }
            }
        }
        Ok(Section { map, degrees })
    }

    pub fn get(&self, t: &Tree) -> Option<&PlanarTree> {
        self.map.get(t)
    }

    pub fn apply(&self, t: &Tree) -> Result<&PlanarTree> {
        self.get(t).ok_or_else(|| Error::NotCovered(t.to_string()))
    }

    pub fn covers(&self, n: usize) -> bool {
        self.degrees.contains(&n)
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.degrees.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Entries by degree, then in canonical order.
    pub fn entries(&self) -> Vec<(&Tree, &PlanarTree)> {
        let mut out: Vec<(&Tree, &PlanarTree)> = self.map.iter().collect();
        out.sort_by(|a, b| {
            a.0.degree()
                .cmp(&b.0.degree())
                .then_with(|| crate::tree::canonical_cmp(a.0.as_planar(), b.0.as_planar()))
        });
        out
    }

    /// Merges two sections covering disjoint degrees.
    pub fn union(&self, other: &Section) -> Result<Section> {
        if let Some(n) = self.degrees.intersection(&other.degrees).next() {
            return Err(Error::SectionDuplicate(format!("degree {n}")));
        }
        let mut map = self.map.clone();
        map.extend(other.map.iter().map(|(k, v)| (k.clone(), v.clone())));
        Ok(Section {
            map,
            degrees: self.degrees.union(&other.degrees).copied().collect(),
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries()
                .into_iter()
                .map(|(t, s)| serde_json::json!({ "tree": t.to_string(), "planar": s.to_string() }))
                .collect(),
        )
    }
}

fn check_entry(t: &Tree, image: &PlanarTree) -> Result<()> {
    let projected = forget_planarity(image);
    if &projected != t {
        return Err(Error::SectionMismatch {
            tree: t.to_string(),
            image: image.to_string(),
            projected: projected.to_string(),
        });
    }
    Ok(())
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, s) in self.entries() {
            writeln!(f, "{t} => {s}")?;
        }
        Ok(())
    }
}

impl FromStr for Section {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let file_err = |message: String| Error::File {
                context: "section".into(),
                line: i + 1,
                message,
            };
            let (lhs, rhs) = line
                .split_once("=>")
                .ok_or_else(|| file_err("expected `<tree> => <planar tree>`".into()))?;
            let t: PlanarTree = lhs
                .trim()
                .parse()
                .map_err(|e: Error| file_err(e.to_string()))?;
            let s: PlanarTree = rhs
                .trim()
                .parse()
                .map_err(|e: Error| file_err(e.to_string()))?;
            let t = Tree::from_planar(&t);
            check_entry(&t, &s).map_err(|e| file_err(e.to_string()))?;
            entries.push((t, s));
        }
        Section::new(entries)
    }
}

/// `S(t)` = the canonical planar embedding of `t` (children in descending
/// serialization order, recursively).
pub fn default_section(n: usize) -> Result<Section> {
    default_section_with(n, &Limits::default())
}

pub fn default_section_with(n: usize, limits: &Limits) -> Result<Section> {
    let trees = enumerate_nonplanar_with(n, limits)?;
    Ok(Section {
        map: trees
            .into_iter()
            .map(|t| {
                let s = t.as_planar().clone();
                (t, s)
            })
            .collect(),
        degrees: BTreeSet::from([n]),
    })
}

/// Number of sections of degree `n`: the product of the fiber sizes.
pub fn section_count(n: usize) -> Result<BigInt> {
    Ok(enumerate_nonplanar_with(n, &Limits::default())?
        .iter()
        .map(|t| BigInt::from(t.embeddings().len()))
        .product())
}

/// Every section of degree `n`, the first being [`default_section`].
pub fn all_sections(n: usize) -> Result<Vec<Section>> {
    let trees = enumerate_nonplanar_with(n, &Limits::default())?;
    let fibers: Vec<Vec<PlanarTree>> = trees.iter().map(Tree::embeddings).collect();
    let total = fibers
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.len()))
        .filter(|&c| c <= MAX_SECTIONS);
    if total.is_none() {
        return Err(Error::CapExceeded {
            what: "section enumeration",
            degree: n,
            cap: MAX_SECTIONS,
        });
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; fibers.len()];
    loop {
        out.push(Section {
            map: trees
                .iter()
                .zip(&fibers)
                .zip(&choice)
                .map(|((t, f), &c)| (t.clone(), f[c].clone()))
                .collect(),
            degrees: BTreeSet::from([n]),
        });
        let mut k = 0;
        loop {
            if k == fibers.len() {
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < fibers[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// `Ψ̃_S(t) = Ψ̄(S(t))`.
pub fn psi_tilde(section: &Section, t: &Tree) -> Result<NonPlanarSum> {
    Ok(psi_bar(section.apply(t)?))
}

/// `β_S` on degree `n`: column `t` holds the coefficients of `Ψ̃_S(t)`.
pub fn beta_matrix(section: &Section, n: usize) -> Result<CoeffMatrix> {
    beta_matrix_with(section, n, &Limits::default())
}

pub fn beta_matrix_with(section: &Section, n: usize, limits: &Limits) -> Result<CoeffMatrix> {
    let basis = enumerate_nonplanar_with(n, limits)?;
    let index: HashMap<&Tree, usize> = basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut columns = Vec::with_capacity(basis.len());
    for t in &basis {
        let mut col = vec![BigInt::zero(); basis.len()];
        for (s, c) in psi_tilde(section, t)?.iter() {
            col[index[s]] = c.clone();
        }
        columns.push(col);
    }
    let labels: Vec<String> = basis.iter().map(ToString::to_string).collect();
    Ok(CoeffMatrix::from_columns(
        n,
        labels.clone(),
        labels,
        columns,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> PlanarTree {
        s.parse().unwrap()
    }
    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    #[test]
    fn projection_merges_embeddings() {
        assert_eq!(
            forget_planarity(&pt("((())())")),
            forget_planarity(&pt("(()(()))"))
        );
        assert_eq!(forget_planarity(&pt("()")), Tree::vertex());
    }

    #[test]
    fn psi_bar_examples() {
        assert_eq!(psi_bar(&pt("(()())")), "(()()) + ((()))".parse().unwrap());
        let star = psi_bar(&pt("(()()())"));
        assert_eq!(
            star,
            "(()()()) + ((()())) + 3 ((())()) + (((())))"
                .parse()
                .unwrap()
        );
    }

    #[test]
    fn cherry_example() {
        let cherry = t("(()())");
        assert_eq!(count_tilde_b(&cherry, &pt("(()())")).unwrap(), 2.into());
        assert_eq!(cherry.symmetry_factor(), 2.into());
        assert_eq!(alpha(&cherry, &pt("(()())")).unwrap(), 1.into());
        assert!(alpha(&cherry, &pt("()")).is_err());
    }

    #[test]
    fn sections() {
        let s = default_section(4).unwrap();
        assert_eq!(s.apply(&t("(()(()))")).unwrap(), &pt("((())())"));
        assert_eq!(all_sections(4).unwrap().len(), 2);
        assert_eq!(section_count(4).unwrap(), 2.into());
        assert!(psi_tilde(&s, &t("()")).is_err());
    }

    #[test]
    fn section_text_round_trip() {
        for s in all_sections(4).unwrap() {
            assert_eq!(s.to_string().parse::<Section>().unwrap(), s);
        }
        let text = "# degree 3\n(()()) => (()())\n((())) => ((()))  # ladder\n";
        let s: Section = text.parse().unwrap();
        assert!(s.covers(3) && !s.covers(4));
    }

    #[test]
    fn section_errors() {
        let bad = "(()()) => ((()))\n((())) => ((()))\n";
        assert!(matches!(
            bad.parse::<Section>(),
            Err(Error::File { line: 1, .. })
        ));
        assert!(matches!(
            "(()()) => (()())\n".parse::<Section>(),
            Err(Error::SectionIncomplete { degree: 3, .. })
        ));
        assert!(matches!(
            "() => ()\n() => ()\n".parse::<Section>(),
            Err(Error::SectionDuplicate(_))
        ));
        assert!(matches!(
            "() -> ()".parse::<Section>(),
            Err(Error::File { line: 1, .. })
        ));
    }

    #[test]
    fn beta_small() {
        let b3 = beta_matrix(&default_section(3).unwrap(), 3).unwrap();
        assert_eq!(b3.rows, ["((()))", "(()())"]);
        assert_eq!(
            b3.entries,
            vec![vec![1.into(), 1.into()], vec![0.into(), 1.into()]]
        );
        for s in all_sections(4).unwrap() {
            let b = beta_matrix(&s, 4).unwrap();
            assert!(b.is_upper_unitriangular());
            assert_eq!(b.column(3), [1, 1, 3, 1].map(BigInt::from));
        }
    }
}
