//! The magmatic isomorphism `Ψ: (𝒯^pl, ∘↘) → (𝒯^pl, ↘)` and its coefficients.
//!
//! `Ψ(•) = •` and `Ψ(σ₁ ∘↘ σ₂) = Ψ(σ₁) ↘ Ψ(σ₂)`. Writing
//! `Ψ(τ) = Σ c(σ, τ) σ`, the coefficient is computed two ways: by the
//! decomposition recursion over left cuts, and by counting vertex bijections
//! compatible with `≪`, `⋘` and `<`.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bijection::count_bijections;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matrix::CoeffMatrix;
use crate::products::left_graft_sums;
use crate::report::Report;
use crate::series::Series;
use crate::sum::PlanarSum;
use crate::tree::{enumerate_planar_with, OrderKind, PlanarTree};

/// `σ = σ₁ ∘↘ σ₂` with `σ₁` the leftmost root branch and `σ₂` the trunk.
pub fn decompose(sigma: &PlanarTree) -> Result<(PlanarTree, PlanarTree)> {
    sigma.decompose()
}

#[derive(Debug)]
struct Memo<K, V>(RwLock<HashMap<K, V>>);

impl<K, V> Default for Memo<K, V> {
    fn default() -> Self {
        Memo(RwLock::new(HashMap::new()))
    }
}

impl<K: Eq + Hash, V: Clone> Memo<K, V> {
    fn get(&self, k: &K) -> Option<V> {
        self.0.read().expect("memo lock").get(k).cloned()
    }

    fn put(&self, k: K, v: V) {
        self.0.write().expect("memo lock").insert(k, v);
    }

    fn len(&self) -> usize {
        self.0.read().expect("memo lock").len()
    }
}

/// Memo tables for `Ψ`, `Ψ⁻¹` and the recursive coefficient. Safe to share
/// between threads; [`PsiMap::global`] is the instance behind the free
/// functions of this module.
#[derive(Debug, Default)]
pub struct PsiMap {
    psi: Memo<PlanarTree, PlanarSum>,
    inverse: Memo<PlanarTree, PlanarSum>,
    coeff: Memo<(PlanarTree, PlanarTree), BigInt>,
}

impl PsiMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static PsiMap {
        static GLOBAL: OnceLock<PsiMap> = OnceLock::new();
        GLOBAL.get_or_init(PsiMap::new)
    }

    /// Number of memoized entries (`Ψ`, `Ψ⁻¹`, `c`).
    pub fn cache_sizes(&self) -> (usize, usize, usize) {
        (self.psi.len(), self.inverse.len(), self.coeff.len())
    }

    pub fn psi(&self, tau: &PlanarTree) -> PlanarSum {
        if let Some(s) = self.psi.get(tau) {
            return s;
        }
        let out = match tau.decompose() {
            Err(_) => PlanarSum::term(tau.clone()),
            Ok((t1, t2)) => left_graft_sums(&self.psi(&t1), &self.psi(&t2)),
        };
        self.psi.put(tau.clone(), out.clone());
        out
    }

    /// Back-substitution: `Ψ⁻¹(σ) = σ − Σ_{ρ≠σ} c(ρ,σ) Ψ⁻¹(ρ)`, where every
    /// `ρ` has strictly larger potential energy than `σ`.
    pub fn psi_inverse(&self, sigma: &PlanarTree) -> PlanarSum {
        if let Some(s) = self.inverse.get(sigma) {
            return s;
        }
        let mut out = PlanarSum::term(sigma.clone());
        for (rho, c) in self.psi(sigma).iter() {
            if rho != sigma {
                out.add_scaled(&-c, &self.psi_inverse(rho));
            }
        }
        self.inverse.put(sigma.clone(), out.clone());
        out
    }

    /// `c(σ, τ₁ ∘↘ τ₂) = Σ_v c(σᵛ, τ₁) c(σ_v, τ₂)` over the left cuts of `σ`.
    pub fn coeff_c_recursive(&self, sigma: &PlanarTree, tau: &PlanarTree) -> BigInt {
        if sigma.degree() != tau.degree() {
            return BigInt::zero();
        }
        let Ok((t1, t2)) = tau.decompose() else {
            return if sigma.label() == tau.label() {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        };
        let key = (sigma.clone(), tau.clone());
        if let Some(c) = self.coeff.get(&key) {
            return c;
        }
        let mut out = BigInt::zero();
        for (branch, trunk) in sigma.left_cuts() {
            if branch.degree() != t1.degree() {
                continue;
            }
            let left = self.coeff_c_recursive(&branch, &t1);
            if left.is_zero() {
                continue;
            }
            out += left * self.coeff_c_recursive(&trunk, &t2);
        }
        self.coeff.put(key, out.clone());
        out
    }

    /// Columns `Ψ(τ)` over the canonical degree-`n` basis.
    pub fn psi_matrix(&self, n: usize, limits: &Limits) -> Result<CoeffMatrix> {
        let basis = enumerate_planar_with(n, limits)?;
        let index: HashMap<&PlanarTree, usize> =
            basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let columns = basis
            .iter()
            .map(|tau| {
                let mut col = vec![BigInt::zero(); basis.len()];
                for (sigma, c) in self.psi(tau).iter() {
                    col[index[sigma]] = c.clone();
                }
                col
            })
            .collect();
        let labels: Vec<String> = basis.iter().map(ToString::to_string).collect();
        Ok(CoeffMatrix::from_columns(
            n,
            labels.clone(),
            labels,
            columns,
        ))
    }
}

pub fn psi(tau: &PlanarTree) -> PlanarSum {
    PsiMap::global().psi(tau)
}

pub fn psi_inverse(sigma: &PlanarTree) -> PlanarSum {
    PsiMap::global().psi_inverse(sigma)
}

/// `Ψ` extended linearly.
pub fn psi_sum(s: &PlanarSum) -> PlanarSum {
    let mut out = PlanarSum::zero();
    for (t, c) in s.iter() {
        out.add_scaled(c, &psi(t));
    }
    out
}

pub fn psi_inverse_sum(s: &PlanarSum) -> PlanarSum {
    let mut out = PlanarSum::zero();
    for (t, c) in s.iter() {
        out.add_scaled(c, &psi_inverse(t));
    }
    out
}

pub fn coeff_c_recursive(sigma: &PlanarTree, tau: &PlanarTree) -> BigInt {
    PsiMap::global().coeff_c_recursive(sigma, tau)
}

/// `b(σ, τ)`: bijections `V(σ) → V(τ)` increasing from `≪` to `⋘` whose
/// inverse is increasing for `<`.
pub fn coeff_c_bijections(sigma: &PlanarTree, tau: &PlanarTree) -> Result<BigInt> {
    coeff_c_bijections_with(sigma, tau, &Limits::default())
}

pub fn coeff_c_bijections_with(
    sigma: &PlanarTree,
    tau: &PlanarTree,
    limits: &Limits,
) -> Result<BigInt> {
    if sigma.degree() != tau.degree() {
        return Err(Error::DegreeMismatch {
            left: sigma.degree(),
            right: tau.degree(),
        });
    }
    limits.check_brute_force(sigma.degree())?;
    Ok(count_bijections(
        &sigma.vertex_order(OrderKind::LeftRefined),
        &sigma.vertex_order(OrderKind::Tree),
        tau,
    )
    .into())
}

pub fn psi_matrix(n: usize) -> Result<CoeffMatrix> {
    PsiMap::global().psi_matrix(n, &Limits::default())
}

pub fn psi_matrix_with(n: usize, limits: &Limits) -> Result<CoeffMatrix> {
    PsiMap::global().psi_matrix(n, limits)
}

/// `N(σ)`, the number of trees counted with multiplicity in `Ψ(σ)`:
/// `N(•) = 1` and `N(σ₁ ∘↘ σ₂) = N(σ₁) N(σ₂) |σ₂|`.
pub fn n_statistic(sigma: &PlanarTree) -> BigInt {
    match sigma.decompose() {
        Err(_) => BigInt::one(),
        Ok((s1, s2)) => n_statistic(&s1) * n_statistic(&s2) * BigInt::from(s2.degree()),
    }
}

/// `Σ_{σ ∈ T^pl_n} N(σ)` for `n = 1..=max_n`.
pub fn n_sums(max_n: usize, limits: &Limits) -> Result<Vec<BigInt>> {
    (1..=max_n)
        .map(|n| {
            Ok(enumerate_planar_with(n, limits)?
                .iter()
                .map(n_statistic)
                .sum())
        })
        .collect()
}

/// Checks the planar `N` sums against their convolution recursion and the
/// series `A(x) = Σ N(T^pl_{n+1}) xⁿ` against `A = 1 + xA² + x²AA'` through
/// order `max_n − 2`.
pub fn verify_a088716(max_n: usize) -> Result<Report> {
    verify_a088716_with(max_n, &Limits::default())
}

pub fn verify_a088716_with(max_n: usize, limits: &Limits) -> Result<Report> {
    limits.check_degree(max_n)?;
    let sums = n_sums(max_n, limits)?;
    let mut report = Report::new("sequences");
    let shown: Vec<String> = sums.iter().map(ToString::to_string).collect();
    report.check("sequence", true, shown.join(","));

    for n in 2..=max_n {
        let rec: BigInt = (1..n)
            .map(|p| &sums[p - 1] * &sums[n - p - 1] * BigInt::from(n - p))
            .sum();
        report.check(
            format!("recursion n={n}"),
            rec == sums[n - 1],
            format!("convolution {rec}, direct {}", sums[n - 1]),
        );
    }

    let a = Series::new(sums.clone());
    let len = a.len();
    let one = Series::constant(BigInt::one(), len);
    let rhs = one
        .add(&a.mul(&a).shift(1))
        .add(&a.mul(&a.derivative()).shift(2));
    let residual = a.sub(&rhs);
    report.check(
        "order 0",
        a.coeff(0).is_one(),
        format!("A(0) = {}", a.coeff(0)),
    );
    for k in 0..max_n.saturating_sub(1) {
        let r = residual.coeff(k);
        report.check(
            format!("ode order {k}"),
            r.is_zero(),
            format!("residual {r}"),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PlanarTree {
        s.parse().unwrap()
    }

    fn sum(s: &str) -> PlanarSum {
        s.parse().unwrap()
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&t("()")), sum("()"));
        assert_eq!(psi(&t("(()())")), sum("(()()) + ((()))"));
        assert_eq!(
            psi(&t("(()()())")),
            sum("(()()()) + ((())()) + 2 (()(())) + ((()())) + (((())))")
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(psi_inverse(&t("(()())")), sum("(()()) - ((()))"));
        let s = t("(()()())");
        assert_eq!(psi_sum(&psi_inverse(&s)), PlanarSum::term(s));
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(coeff_c_recursive(&t("(()(()))"), &t("(()()())")), 2.into());
        assert_eq!(coeff_c_recursive(&t("(()()())"), &t("(((())))")), 0.into());
        assert_eq!(coeff_c_recursive(&t("()"), &t("(())")), 0.into());
        assert_eq!(
            coeff_c_bijections(&t("(()(()))"), &t("(()()())")).unwrap(),
            2.into()
        );
        assert!(matches!(
            coeff_c_bijections(&t("()"), &t("(())")),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(matches!(
            coeff_c_bijections(&PlanarTree::ladder(9), &PlanarTree::ladder(9)),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn labeled_coefficients_respect_labels() {
        let tau = t("a(b())");
        assert_eq!(coeff_c_recursive(&t("a(b())"), &tau), 1.into());
        assert_eq!(coeff_c_recursive(&t("b(a())"), &tau), 0.into());
    }

    #[test]
    fn small_matrices() {
        let m3 = psi_matrix(3).unwrap();
        assert_eq!(
            m3.entries,
            vec![vec![1.into(), 1.into()], vec![0.into(), 1.into()]]
        );
        let m4 = psi_matrix(4).unwrap();
        assert_eq!(m4.entry_sum(), 14.into());
        assert_eq!(m4.count_of(&2.into()), 1);
        assert!(m4.is_upper_unitriangular());
        assert_eq!(psi_matrix(5).unwrap().entry_sum(), 85.into());
    }

    #[test]
    fn n_values() {
        assert_eq!(n_statistic(&t("()")), 1.into());
        assert_eq!(n_statistic(&t("(()()())")), 6.into());
        let sums = n_sums(5, &Limits::default()).unwrap();
        assert_eq!(sums, [1, 1, 3, 14, 85].map(BigInt::from));
    }

    #[test]
    fn ode_report() {
        let r = verify_a088716(5).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.checks.iter().any(|c| c.name == "ode order 3"));
        assert!(!r.checks.iter().any(|c| c.name == "ode order 4"));
    }
}
