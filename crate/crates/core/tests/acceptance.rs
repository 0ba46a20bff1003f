//! Acceptance criteria, one line per criterion. Exits non-zero on any failure.

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use prelie_core::monomials::{
    ag_basis, basis_from_section, expand_basis, expand_monomials, is_tree_grounded,
    section_of_basis, GeneratorOrder,
};
use prelie_core::products::{butcher, graft, graft_sums};
use prelie_core::projection::{all_sections, alpha, beta_matrix, count_tilde_b};
use prelie_core::psi::{
    coeff_c_bijections, coeff_c_recursive, n_sums, psi, psi_matrix, verify_a088716,
};
use prelie_core::tree::{enumerate_nonplanar, enumerate_planar};
use prelie_core::verify::fixture_bases;
use prelie_core::{Limits, NonPlanarSum, PlanarSum, PlanarTree, Tree};
use serde_json::Value;

fn fixture(name: &str) -> Value {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name]
        .iter()
        .collect();
    serde_json::from_str(&std::fs::read_to_string(path).expect("fixture exists"))
        .expect("fixture is json")
}

fn ints(v: &Value) -> Vec<Vec<BigInt>> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|r| {
            r.as_array()
                .unwrap()
                .iter()
                .map(|x| BigInt::from(x.as_i64().unwrap()))
                .collect()
        })
        .collect()
}

fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

fn pt(s: &str) -> PlanarTree {
    s.parse().unwrap()
}

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ac1() -> Outcome {
    let sums = n_sums(5, &Limits::default()).map_err(|e| e.to_string())?;
    let want: Vec<BigInt> = [1, 1, 3, 14, 85].map(BigInt::from).to_vec();
    ensure(sums == want, format!("got {sums:?}"))?;
    Ok("N sums 1,1,3,14,85".into())
}

fn ac2() -> Outcome {
    let m3 = psi_matrix(3).map_err(|e| e.to_string())?;
    ensure(m3.entries == big(&[&[1, 1], &[0, 1]]), "M3 differs")?;
    ensure(
        m3.entries == ints(&fixture("psi_m3.json")["entries"]),
        "M3 fixture differs",
    )?;

    let m4 = psi_matrix(4).map_err(|e| e.to_string())?;
    let fx = fixture("psi_m4.json");
    let reference = ints(&fx["entries"]);
    let perm: Vec<usize> = fx["permutation"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap() as usize)
        .collect();
    for i in 0..5 {
        for j in 0..5 {
            ensure(
                m4.entries[perm[i]][perm[j]] == reference[i][j],
                format!("M4 entry ({i},{j}) differs under the recorded permutation"),
            )?;
        }
    }
    ensure(m4.entry_sum() == BigInt::from(14), "entry sum")?;
    ensure(
        m4.diagonal().iter().all(|d| *d == BigInt::from(1)),
        "diagonal",
    )?;
    ensure(m4.count_of(&BigInt::from(2)) == 1, "exactly one 2")?;
    ensure(m4.is_upper_triangular(), "upper triangular")?;
    Ok("M3 exact; M4 sum 14, unit diagonal, one 2, triangular".into())
}

fn ac3() -> Outcome {
    let mut checks = 0;
    for n in 1..=6 {
        let trees = enumerate_planar(n).unwrap();
        for s in &trees {
            for t in &trees {
                let c = coeff_c_recursive(s, t);
                let b = coeff_c_bijections(s, t).map_err(|e| e.to_string())?;
                checks += 2;
                ensure(c == b, format!("c({s},{t}) = {c} but b = {b}"))?;
            }
        }
    }
    let spot = coeff_c_recursive(&pt("(()(()))"), &pt("(()()())"));
    ensure(spot == BigInt::from(2), format!("spot value {spot}"))?;
    Ok(format!("{checks} evaluations, 0 mismatches, spot c = 2"))
}

fn ac4() -> Outcome {
    let mut pairs = 0;
    for n in 1..=6 {
        let planar = enumerate_planar(n).unwrap();
        for s in enumerate_nonplanar(n).unwrap() {
            let sym = s.symmetry_factor();
            for tau in &planar {
                let a = alpha(&s, tau).map_err(|e| e.to_string())?;
                let bt = count_tilde_b(&s, tau).map_err(|e| e.to_string())?;
                pairs += 1;
                ensure(
                    &a * &sym == bt,
                    format!("alpha({s},{tau}) = {a}, sym {sym}, b~ {bt}"),
                )?;
            }
        }
    }
    let cherry: Tree = "(()())".parse().unwrap();
    let tau = pt("(()())");
    ensure(
        count_tilde_b(&cherry, &tau).unwrap() == BigInt::from(2),
        "b~ spot",
    )?;
    ensure(cherry.symmetry_factor() == BigInt::from(2), "sym spot")?;
    ensure(
        alpha(&cherry, &tau).unwrap() == BigInt::from(1),
        "alpha spot",
    )?;
    Ok(format!(
        "{pairs} pairs, 0 mismatches, cherry b~=2 sym=2 alpha=1"
    ))
}

fn ac5() -> Outcome {
    let trees: Vec<Vec<Tree>> = (1..=6).map(|n| enumerate_nonplanar(n).unwrap()).collect();
    let all: Vec<&Tree> = trees.iter().flatten().collect();
    let one = |x: &Tree| NonPlanarSum::term(x.clone());
    let mut triples = 0;
    for s in &all {
        for t in &all {
            for u in &all {
                if s.degree() + t.degree() + u.degree() > 8 {
                    continue;
                }
                triples += 1;
                let lhs = &graft_sums(&graft(s, t), &one(u)) - &graft_sums(&one(s), &graft(t, u));
                let rhs = &graft_sums(&graft(t, s), &one(u)) - &graft_sums(&one(t), &graft(s, u));
                ensure(lhs == rhs, format!("pre-Lie fails on ({s},{t},{u})"))?;
                ensure(
                    butcher(s, &butcher(t, u)) == butcher(t, &butcher(s, u)),
                    format!("NAP fails on ({s},{t},{u})"),
                )?;
            }
        }
    }
    Ok(format!("{triples} triples, 0 counterexamples"))
}

fn ac6() -> Outcome {
    let single = GeneratorOrder::single();
    let counts: Vec<usize> = (1..=6)
        .map(|n| ag_basis(n, &single).unwrap().len())
        .collect();
    ensure(counts == [1, 1, 2, 4, 9, 20], format!("counts {counts:?}"))?;

    let e4 = expand_basis(&ag_basis(4, &single).unwrap()).map_err(|e| e.to_string())?;
    let want4 = big(&[&[1, 1, 1, 1], &[0, 1, 0, 1], &[0, 0, 1, 3], &[0, 0, 0, 1]]);
    ensure(e4.entries == want4, "degree-4 expansion differs")?;
    ensure(
        e4.count_of(&BigInt::from(3)) == 1,
        "coefficient 3 appears once",
    )?;

    let fx = fixture("t5_expansion.json");
    let b5 = ag_basis(5, &single).unwrap();
    let got: Vec<String> = b5.monomials.iter().map(ToString::to_string).collect();
    let listed: Vec<String> = fx["monomials"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    ensure(got == listed, "degree-5 monomial order differs")?;
    let e5 = expand_basis(&b5).map_err(|e| e.to_string())?;
    let rows: HashMap<&str, usize> = e5
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| (r.as_str(), i))
        .collect();
    let reference_rows: Vec<usize> = fx["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| Tree::from(pt(v.as_str().unwrap())).to_string())
        .map(|r| rows[r.as_str()])
        .collect();
    for (j, col) in ints(&fx["columns"]).iter().enumerate() {
        for (i, want) in col.iter().enumerate() {
            ensure(
                e5.entries[reference_rows[i]][j] == *want,
                format!("degree-5 column e{} row {i} differs", j + 1),
            )?;
        }
    }
    Ok("counts 1,1,2,4,9,20; e1..e4 and e1..e9 expansions match".into())
}

fn ac7() -> Outcome {
    for (name, monomials, expected) in fixture_bases() {
        let g = is_tree_grounded(&monomials, 4).map_err(|e| e.to_string())?;
        ensure(
            g.grounded == expected,
            format!("{name} verdict {}", g.grounded),
        )?;
    }
    let single = GeneratorOrder::single();
    for n in 1..=6 {
        let b = ag_basis(n, &single).unwrap();
        ensure(
            is_tree_grounded(&b.monomials, n).unwrap().grounded,
            format!("AG n={n} not grounded"),
        )?;
    }
    let sections = all_sections(4).map_err(|e| e.to_string())?;
    ensure(sections.len() == 2, "two degree-4 sections")?;
    for s in &sections {
        let monomials = basis_from_section(s, 4).map_err(|e| e.to_string())?;
        let back = section_of_basis(&monomials, 4).map_err(|e| e.to_string())?;
        ensure(&back == s, "section does not round trip")?;
        let beta = beta_matrix(&back, 4).map_err(|e| e.to_string())?;
        let expansion = expand_monomials(&monomials, 4).map_err(|e| e.to_string())?;
        ensure(
            beta.entries == expansion.entries,
            "beta differs from the expansion",
        )?;
    }
    Ok("B1,B2 grounded; B3,B4 not; AG grounded n<=6; both sections round trip".into())
}

fn ac8() -> Outcome {
    let mut count = 0;
    for n in 1..=5 {
        for s in all_sections(n).map_err(|e| e.to_string())? {
            let b = beta_matrix(&s, n).map_err(|e| e.to_string())?;
            ensure(
                b.is_upper_unitriangular(),
                format!("beta not unitriangular at n={n}"),
            )?;
            count += 1;
        }
    }
    let mut trees = 0;
    for n in 1..=7 {
        for sigma in enumerate_planar(n).unwrap() {
            let rest = &psi(&sigma) - &PlanarSum::term(sigma.clone());
            let d = sigma.potential_energy();
            ensure(
                rest.trees().all(|t| t.potential_energy() > d),
                format!("Psi({sigma}) has a term of energy <= {d}"),
            )?;
            trees += 1;
        }
    }
    Ok(format!(
        "{count} sections unitriangular; {trees} trees with higher-energy support"
    ))
}

fn ac9() -> Outcome {
    let report = verify_a088716(8).map_err(|e| e.to_string())?;
    for k in 0..=6 {
        let name = format!("ode order {k}");
        let check = report
            .checks
            .iter()
            .find(|c| c.name == name)
            .ok_or(format!("{name} missing"))?;
        ensure(
            check.status == prelie_core::Status::Pass,
            format!("{name}: {}", check.detail),
        )?;
    }
    ensure(report.passed(), report.to_string())?;
    Ok("residual zero through order 6".into())
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("sequence 1,1,3,14,85", ac1, Duration::from_secs(1)),
        ("psi matrices M3, M4", ac2, Duration::from_secs(1)),
        ("c = b on all pairs n<=6", ac3, Duration::from_secs(120)),
        (
            "alpha sym = b~ on all pairs n<=6",
            ac4,
            Duration::from_secs(120),
        ),
        (
            "pre-Lie and NAP identities, degree <= 8",
            ac5,
            Duration::from_secs(120),
        ),
        (
            "AG basis counts and expansions",
            ac6,
            Duration::from_secs(120),
        ),
        (
            "tree-grounded fixtures and round trip",
            ac7,
            Duration::from_secs(120),
        ),
        ("unipotence of beta and Psi", ac8, Duration::from_secs(120)),
        (
            "series identity through order 6",
            ac9,
            Duration::from_secs(1),
        ),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= *budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took {elapsed:?}, budget {budget:?}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("AC{} {status} {name}: {detail} [{elapsed:.2?}]", i + 1);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
