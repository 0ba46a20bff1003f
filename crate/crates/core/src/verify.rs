//! Verification suites: exhaustive and seeded checks of the algebraic
//! identities, sequences, matrix shapes, the two coefficient methods and
//! tree-grounded bases.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::monomials::{
    ag_basis_with, basis_from_section, canonical_column_order, evaluate_pre_lie, expand_basis,
    expand_monomials, is_tree_grounded, lower_energy_term, parse_monomial_file, planar_term,
    section_of_basis, GeneratorOrder, MonomialExpr,
};
use crate::products::{butcher, graft, graft_sums, left_butcher, left_graft};
use crate::projection::{
    all_sections, alpha, alpha_matrix_with, beta_matrix, count_tilde_b_with, forget_planarity,
};
use crate::psi::{
    coeff_c_bijections_with, coeff_c_recursive, n_sums, psi, psi_inverse_sum, psi_matrix_with,
    psi_sum, verify_a088716_with,
};
use crate::report::Report;
use crate::sum::{NonPlanarSum, PlanarSum};
use crate::tree::{
    enumerate_binary_with, enumerate_nonplanar_with, enumerate_planar_with, PlanarTree, Tree,
};

/// Number of random pairs drawn per sampled degree.
pub const SAMPLES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Sequences,
    Matrices,
    Oracle,
    TreeGrounded,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Identities,
        Suite::Sequences,
        Suite::Matrices,
        Suite::Oracle,
        Suite::TreeGrounded,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Sequences => "sequences",
            Suite::Matrices => "matrices",
            Suite::Oracle => "oracle",
            Suite::TreeGrounded => "tree-grounded",
        }
    }

    pub fn default_max_degree(self) -> usize {
        match self {
            Suite::Identities => 7,
            Suite::Sequences => 8,
            Suite::Matrices => 6,
            Suite::Oracle => 6,
            Suite::TreeGrounded => 6,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                Error::parse(
                    s,
                    0,
                    "suite is one of identities, sequences, matrices, oracle, tree-grounded",
                )
            })
    }
}

pub fn run(suite: Suite, max_degree: usize, seed: u64, limits: &Limits) -> Result<Report> {
    match suite {
        Suite::Identities => identities(max_degree, seed, limits),
        Suite::Sequences => sequences(max_degree, limits),
        Suite::Matrices => matrices(max_degree, limits),
        Suite::Oracle => oracle(max_degree, seed, limits),
        Suite::TreeGrounded => tree_grounded(max_degree, limits),
    }
}

/// Non-planar trees of degrees `1..=max`, grouped by degree.
fn nonplanar_upto(max: usize, limits: &Limits) -> Result<Vec<Vec<Tree>>> {
    (1..=max)
        .map(|n| enumerate_nonplanar_with(n, limits))
        .collect()
}

fn planar_upto(max: usize, limits: &Limits) -> Result<Vec<Vec<PlanarTree>>> {
    (1..=max)
        .map(|n| enumerate_planar_with(n, limits))
        .collect()
}

/// Pre-Lie, NAP and projection identities on every triple or pair of total
/// degree at most `max_degree`, plus seeded checks of the `Ψ` morphism.
pub fn identities(max_degree: usize, seed: u64, limits: &Limits) -> Result<Report> {
    let mut report = Report::new("identities");
    if max_degree < 2 {
        return Ok(report);
    }
    limits.check_degree(max_degree)?;
    let trees = nonplanar_upto(max_degree - 1, limits)?;
    let planar = planar_upto(max_degree - 1, limits)?;

    let (mut checked, mut bad) = (0usize, Vec::new());
    let (mut nap_checked, mut nap_bad) = (0usize, Vec::new());
    for (a, ts) in trees.iter().enumerate() {
        for (b, tt) in trees.iter().enumerate() {
            for (c, tu) in trees.iter().enumerate() {
                if a + b + c + 3 > max_degree {
                    continue;
                }
                for s in ts {
                    for t in tt {
                        for u in tu {
                            checked += 1;
                            if !pre_lie_holds(s, t, u) {
                                bad.push(format!("({s},{t},{u})"));
                            }
                            nap_checked += 1;
                            if butcher(s, &butcher(t, u)) != butcher(t, &butcher(s, u)) {
                                nap_bad.push(format!("({s},{t},{u})"));
                            }
                        }
                    }
                }
            }
        }
    }
    report.check("pre-lie", bad.is_empty(), counted(checked, "triples", &bad));
    report.check(
        "nap",
        nap_bad.is_empty(),
        counted(nap_checked, "triples", &nap_bad),
    );

    let (mut pairs, mut proj_bad, mut lead_bad) = (0usize, Vec::new(), Vec::new());
    for (a, sa) in planar.iter().enumerate() {
        for (b, sb) in planar.iter().enumerate() {
            if a + b + 2 > max_degree {
                continue;
            }
            for sigma in sa {
                for tau in sb {
                    pairs += 1;
                    let (ps, pt) = (forget_planarity(sigma), forget_planarity(tau));
                    let lb = left_butcher(sigma, tau);
                    let lg = left_graft(sigma, tau);
                    if forget_planarity(&lb) != butcher(&ps, &pt)
                        || lg.map_terms(forget_planarity) != graft(&ps, &pt)
                    {
                        proj_bad.push(format!("({sigma},{tau})"));
                    }
                    let rest = &lg - &PlanarSum::term(lb.clone());
                    if lg.coeff(&lb) != BigInt::from(1)
                        || rest
                            .min_energy()
                            .is_some_and(|e| e <= lb.potential_energy())
                    {
                        lead_bad.push(format!("({sigma},{tau})"));
                    }
                }
            }
        }
    }
    report.check(
        "projection",
        proj_bad.is_empty(),
        counted(pairs, "pairs", &proj_bad),
    );
    report.check(
        "left-graft leading term",
        lead_bad.is_empty(),
        counted(pairs, "pairs", &lead_bad),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut morph_bad = Vec::new();
    let pool: Vec<(&PlanarTree, usize)> =
        planar.iter().flatten().map(|t| (t, t.degree())).collect();
    let mut sampled = 0;
    while sampled < SAMPLES {
        let (&(s, ds), &(t, dt)) = (
            pool.choose(&mut rng).unwrap(),
            pool.choose(&mut rng).unwrap(),
        );
        if ds + dt > max_degree {
            continue;
        }
        sampled += 1;
        let lhs = psi(&left_butcher(s, t));
        let rhs = crate::products::left_graft_sums(&psi(s), &psi(t));
        if lhs != rhs {
            morph_bad.push(format!("({s},{t})"));
        }
    }
    report.check(
        "psi morphism",
        morph_bad.is_empty(),
        format!(
            "seed {seed}; {}",
            counted(sampled, "sampled pairs", &morph_bad)
        ),
    );

    let mut mono_bad = Vec::new();
    let mut monos = 0;
    let mut images = BTreeSet::new();
    let mut rotation_ok = true;
    for n in 1..=max_degree {
        images.clear();
        for b in enumerate_binary_with(n, limits)? {
            monos += 1;
            let m = MonomialExpr::from_binary(&b);
            if forget_planarity(&planar_term(&m)) != lower_energy_term(&m) {
                mono_bad.push(m.to_string());
            }
            let r = b.rotate();
            rotation_ok &= r.degree() == n && images.insert(r);
        }
    }
    report.check(
        "lower-energy readings agree",
        mono_bad.is_empty(),
        counted(monos, "monomials", &mono_bad),
    );
    report.check(
        "rotation injective",
        rotation_ok,
        format!("degrees 1..={max_degree}"),
    );
    Ok(report)
}

/// `(s→t)→u − s→(t→u) = (t→s)→u − t→(s→u)`.
fn pre_lie_holds(s: &Tree, t: &Tree, u: &Tree) -> bool {
    let one = |x: &Tree| NonPlanarSum::term(x.clone());
    let assoc = |x: &Tree, y: &Tree| {
        &graft_sums(&graft(x, y), &one(u)) - &graft_sums(&one(x), &graft(y, u))
    };
    assoc(s, t) == assoc(t, s)
}

fn counted(total: usize, what: &str, bad: &[String]) -> String {
    if bad.is_empty() {
        format!("{total} {what}, no counterexamples")
    } else {
        let shown: Vec<&str> = bad.iter().take(5).map(String::as_str).collect();
        format!(
            "{total} {what}, {} counterexamples: {}",
            bad.len(),
            shown.join(" ")
        )
    }
}

/// `N` sums, their recursion and the series identity, plus tree counts.
pub fn sequences(max_degree: usize, limits: &Limits) -> Result<Report> {
    let mut report = verify_a088716_with(max_degree, limits)?;
    let mut catalan = vec![BigInt::from(1)];
    for k in 1..max_degree {
        let next = (0..k).map(|i| &catalan[i] * &catalan[k - 1 - i]).sum();
        catalan.push(next);
    }
    for n in 1..=max_degree {
        let got = enumerate_planar_with(n, limits)?.len();
        report.check(
            format!("planar count n={n}"),
            BigInt::from(got) == catalan[n - 1],
            format!("{got} trees, Catalan {}", catalan[n - 1]),
        );
        let nonplanar = enumerate_nonplanar_with(n, limits)?.len();
        let projected: BTreeSet<Tree> = enumerate_planar_with(n, limits)?
            .iter()
            .map(forget_planarity)
            .collect();
        report.check(
            format!("non-planar count n={n}"),
            nonplanar == projected.len(),
            format!("{nonplanar} trees, {} projected classes", projected.len()),
        );
    }
    Ok(report)
}

/// Shapes of the `Ψ`, `α` and `β` matrices.
pub fn matrices(max_degree: usize, limits: &Limits) -> Result<Report> {
    let mut report = Report::new("matrices");
    limits.check_degree(max_degree)?;
    let sums = n_sums(max_degree, limits)?;
    for n in 1..=max_degree {
        let m = psi_matrix_with(n, limits)?;
        report.check(
            format!("psi unitriangular n={n}"),
            m.is_upper_unitriangular(),
            format!("{}x{}", m.nrows(), m.ncols()),
        );
        report.check(
            format!("psi entry sum n={n}"),
            m.entry_sum() == sums[n - 1],
            format!("entry sum {}, N sum {}", m.entry_sum(), sums[n - 1]),
        );
        let inverse_ok = m
            .inverse_unitriangular()
            .and_then(|inv| m.mul(&inv))
            .is_some_and(|id| {
                (0..id.nrows()).all(|i| {
                    (0..id.ncols()).all(|j| *id.entry(i, j) == BigInt::from((i == j) as u8))
                })
            });
        report.check(
            format!("psi inverse n={n}"),
            inverse_ok,
            "integer unitriangular inverse",
        );

        let basis = enumerate_planar_with(n, limits)?;
        let mut support_bad = Vec::new();
        let mut roundtrip_bad = Vec::new();
        for sigma in &basis {
            let rest = &psi(sigma) - &PlanarSum::term(sigma.clone());
            if rest
                .min_energy()
                .is_some_and(|e| e <= sigma.potential_energy())
            {
                support_bad.push(sigma.to_string());
            }
            let back = psi_sum(&psi_inverse_sum(&PlanarSum::term(sigma.clone())));
            if back != PlanarSum::term(sigma.clone()) {
                roundtrip_bad.push(sigma.to_string());
            }
        }
        report.check(
            format!("psi energy support n={n}"),
            support_bad.is_empty(),
            counted(basis.len(), "trees", &support_bad),
        );
        report.check(
            format!("psi inverse round trip n={n}"),
            roundtrip_bad.is_empty(),
            counted(basis.len(), "trees", &roundtrip_bad),
        );

        let a = alpha_matrix_with(n, limits)?;
        report.check(
            format!("alpha column sums n={n}"),
            a.column_sums() == m.column_sums(),
            format!("{}x{}", a.nrows(), a.ncols()),
        );
    }
    for n in 1..=max_degree.min(5) {
        let sections = all_sections(n)?;
        let mut bad = Vec::new();
        for (i, s) in sections.iter().enumerate() {
            let b = beta_matrix(s, n)?;
            if !b.is_upper_unitriangular() || b.determinant() != Some(BigInt::from(1)) {
                bad.push(format!("section {i}"));
            }
        }
        report.check(
            format!("beta unitriangular n={n}"),
            bad.is_empty(),
            counted(sections.len(), "sections", &bad),
        );
    }
    Ok(report)
}

/// `c ≡ b` and `α · sym ≡ b̃`, exhaustively up to degree 6 and on seeded
/// samples above.
pub fn oracle(max_degree: usize, seed: u64, limits: &Limits) -> Result<Report> {
    let mut report = Report::new("oracle");
    limits.check_brute_force(max_degree)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 1..=max_degree {
        let planar = enumerate_planar_with(n, limits)?;
        let nonplanar = enumerate_nonplanar_with(n, limits)?;
        let exhaustive = n <= 6;
        let pairs: Vec<(&PlanarTree, &PlanarTree)> = if exhaustive {
            planar
                .iter()
                .flat_map(|s| planar.iter().map(move |t| (s, t)))
                .collect()
        } else {
            (0..SAMPLES)
                .map(|_| {
                    (
                        planar.choose(&mut rng).unwrap(),
                        planar.choose(&mut rng).unwrap(),
                    )
                })
                .collect()
        };
        let mut bad = Vec::new();
        for &(sigma, tau) in &pairs {
            let c = coeff_c_recursive(sigma, tau);
            let b = coeff_c_bijections_with(sigma, tau, limits)?;
            if c != b {
                bad.push(format!("({sigma},{tau}): c={c} b={b}"));
            }
        }
        let how = if exhaustive { "pairs" } else { "sampled pairs" };
        report.check(
            format!("c = b n={n}"),
            bad.is_empty(),
            counted(pairs.len(), how, &bad),
        );

        let mut bad = Vec::new();
        let mut count = 0;
        let alpha_pairs: Vec<(&Tree, &PlanarTree)> = if exhaustive {
            nonplanar
                .iter()
                .flat_map(|s| planar.iter().map(move |t| (s, t)))
                .collect()
        } else {
            (0..SAMPLES)
                .map(|_| {
                    (
                        nonplanar.choose(&mut rng).unwrap(),
                        planar.choose(&mut rng).unwrap(),
                    )
                })
                .collect()
        };
        for &(s, tau) in &alpha_pairs {
            count += 1;
            let a = alpha(s, tau)?;
            let bt = count_tilde_b_with(s, tau, limits)?;
            if &a * s.symmetry_factor() != bt {
                bad.push(format!("({s},{tau}): alpha={a} b~={bt}"));
            }
        }
        report.check(
            format!("alpha sym = b~ n={n}"),
            bad.is_empty(),
            counted(count, how, &bad),
        );
    }
    Ok(report)
}

/// The four degree-4 example bases with their expected verdicts.
pub fn fixture_bases() -> Vec<(&'static str, Vec<MonomialExpr>, bool)> {
    [
        ("B1", include_str!("../fixtures/b1.monomials"), true),
        ("B2", include_str!("../fixtures/b2.monomials"), true),
        ("B3", include_str!("../fixtures/b3.monomials"), false),
        ("B4", include_str!("../fixtures/b4.monomials"), false),
    ]
    .into_iter()
    .map(|(name, text, expected)| {
        (
            name,
            parse_monomial_file(text).expect("fixture parses"),
            expected,
        )
    })
    .collect()
}

/// Tree-grounded verdicts, and the round trip from a basis to its section
/// and back to the expansion matrix.
pub fn tree_grounded(max_degree: usize, limits: &Limits) -> Result<Report> {
    let mut report = Report::new("tree-grounded");
    limits.check_degree(max_degree)?;
    for (name, monomials, expected) in fixture_bases() {
        let g = is_tree_grounded(&monomials, 4)?;
        let witness: Vec<String> = g
            .missing
            .iter()
            .map(|t| format!("missing {t}"))
            .chain(g.duplicated.iter().map(|t| format!("duplicated {t}")))
            .collect();
        report.check(
            format!("{name} grounded={expected}"),
            g.grounded == expected,
            if witness.is_empty() {
                "lower-energy terms are T_4".to_string()
            } else {
                witness.join(", ")
            },
        );
    }
    let single = GeneratorOrder::single();
    for n in 1..=max_degree {
        let basis = ag_basis_with(n, &single, limits)?;
        let g = is_tree_grounded(&basis.monomials, n)?;
        report.check(
            format!("ag grounded n={n}"),
            g.grounded,
            format!("{} monomials", basis.len()),
        );
        let expansion = expand_basis(&basis)?;
        let reordered = expansion.permute_columns(&canonical_column_order(&basis.monomials));
        report.check(
            format!("ag expansion unitriangular n={n}"),
            reordered.is_upper_unitriangular(),
            "columns ordered by lower-energy term",
        );
        if n <= 5 && g.grounded {
            let section = section_of_basis(&basis.monomials, n)?;
            let beta = beta_matrix(&section, n)?;
            report.check(
                format!("ag section round trip n={n}"),
                beta.entries == reordered.entries,
                "beta of the induced section equals the expansion",
            );
        }
    }
    if max_degree >= 4 {
        for (i, section) in all_sections(4)?.iter().enumerate() {
            let monomials = basis_from_section(section, 4)?;
            let grounded = is_tree_grounded(&monomials, 4)?.grounded;
            let back = section_of_basis(&monomials, 4)?;
            let expansion = expand_monomials(&monomials, 4)?;
            let beta = beta_matrix(&back, 4)?;
            let same_columns = monomials.iter().enumerate().all(|(j, m)| {
                evaluate_pre_lie(m) == crate::projection::psi_bar(&planar_term(m))
                    && beta.column(j) == expansion.column(j)
            });
            report.check(
                format!("section {i} round trip n=4"),
                grounded && &back == section && same_columns,
                format!("{} monomials", monomials.len()),
            );
        }
    }
    Ok(report)
}
