//! Execution of parsed commands.

use std::fs;
use std::path::Path;

use prelie_core::monomials::{
    ag_basis_with, basis_from_section, canonical_column_order, evaluate, expand_basis,
    expand_monomials_with, format_monomial_file, is_tree_grounded_with, lower_energy_term,
    monomial_of_planar, parse_monomial_file, planar_term, section_of_basis, Evaluated,
};
use prelie_core::products::{
    butcher, butcher_sums, graft, graft_sums, left_butcher, left_butcher_sums, left_graft,
    left_graft_sums, rotation,
};
use prelie_core::projection::{
    all_sections, alpha, alpha_matrix_with, beta_matrix_with, count_tilde_b_with,
    default_section_with, forget_planarity, psi_bar, psi_tilde, section_count,
};
use prelie_core::psi::{
    coeff_c_bijections_with, coeff_c_recursive, decompose, n_statistic, n_sums, psi, psi_inverse,
    psi_inverse_sum, psi_matrix_with, psi_sum,
};
use prelie_core::tree::{enumerate_binary_with, enumerate_nonplanar_with, enumerate_planar_with};
use prelie_core::{
    verify, BinaryTree, Error, GeneratorOrder, Limits, MonomialBasis, MonomialExpr, NonPlanarSum,
    OrderKind, PlanarSum, PlanarTree, Product, Section, Tree,
};
use serde_json::{json, Value};

use crate::args::{
    Cli, Command, ComputeOp, Format, Kind, Method, MonomialSource, SectionAction, TreeOrDegree,
};
use crate::output::{self, integer};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAP: u8 = 3;
pub const EXIT_DISAGREEMENT: u8 = 4;

/// Everything a run writes, and its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Usage(String),
    /// The output was produced but signals a failed check.
    Output(String, u8, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Run<T = String> = Result<T, Failure>;

/// Exit code for a library error: caps give 3, everything else is an input
/// problem.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::DegreeOutOfRange { degree, .. } if *degree > 0 => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

pub fn execute(cli: &Cli, limits: &Limits) -> Outcome {
    let f = cli.format;
    let result = match &cli.command {
        Command::Enumerate { kind, degree } => enumerate(*kind, *degree, f, limits),
        Command::Compute { op } => compute(op, f, limits),
        Command::Verify {
            suite,
            max_degree,
            seed,
        } => {
            let max = max_degree.unwrap_or(suite.default_max_degree());
            verify::run(*suite, max, *seed, limits)
                .map_err(Failure::from)
                .and_then(|r| {
                    let out = output::report(&r, f);
                    if r.passed() {
                        Ok(out)
                    } else {
                        let failed = r.failures().count();
                        Err(Failure::Output(
                            out,
                            EXIT_CHECK_FAILED,
                            format!("{failed} checks failed"),
                        ))
                    }
                })
        }
        Command::Section { action } => section(action, f, limits),
    };
    match result {
        Ok(stdout) => Outcome::ok(stdout),
        Err(Failure::Core(e)) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: exit_code(&e),
        },
        Err(Failure::Usage(msg)) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_USAGE,
        },
        Err(Failure::Output(stdout, code, msg)) => Outcome {
            stdout,
            stderr: format!("error: {msg}\n"),
            code,
        },
    }
}

fn read(path: &Path) -> Run {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn planar(s: &str) -> Run<PlanarTree> {
    Ok(s.parse()?)
}

fn nonplanar(s: &str) -> Run<Tree> {
    Ok(s.parse()?)
}

fn tree_json(t: &PlanarTree) -> Value {
    serde_json::to_value(t).expect("trees serialize")
}

/// A single tree: its serialization, its JSON form, or a one-row table.
fn one_tree(t: &PlanarTree, f: Format) -> String {
    match f {
        Format::Text => format!("{t}\n"),
        Format::Json => output::to_json(&tree_json(t)),
        Format::Csv => format!("tree\n{t}\n"),
    }
}

fn enumerate(kind: Kind, n: usize, f: Format, limits: &Limits) -> Run {
    let (title, text, items): (&str, Vec<String>, Vec<Value>) = match kind {
        Kind::Planar => {
            let ts = enumerate_planar_with(n, limits)?;
            (
                "planar",
                ts.iter().map(ToString::to_string).collect(),
                ts.iter().map(tree_json).collect(),
            )
        }
        Kind::Nonplanar => {
            let ts = enumerate_nonplanar_with(n, limits)?;
            (
                "nonplanar",
                ts.iter().map(ToString::to_string).collect(),
                ts.iter().map(|t| tree_json(t.as_planar())).collect(),
            )
        }
        Kind::Binary => {
            let ts = enumerate_binary_with(n, limits)?;
            let text: Vec<String> = ts.iter().map(ToString::to_string).collect();
            let items = text.iter().map(|s| json!(s)).collect();
            ("binary", text, items)
        }
    };
    Ok(output::list(title, "tree", &text, items, f))
}

fn checked_tree(s: &str, limits: &Limits) -> Run<PlanarTree> {
    let t = planar(s)?;
    limits.check_degree(t.degree())?;
    Ok(t)
}

fn product(p: Product, left: &str, right: &str, f: Format) -> Run {
    if let (Ok(a), Ok(b)) = (left.parse::<PlanarTree>(), right.parse::<PlanarTree>()) {
        let (na, nb) = (Tree::from_planar(&a), Tree::from_planar(&b));
        return Ok(match p {
            Product::LeftButcher => one_tree(&left_butcher(&a, &b), f),
            Product::LeftGraft => output::sum(&left_graft(&a, &b), f),
            Product::Butcher => one_tree(butcher(&na, &nb).as_planar(), f),
            Product::Graft => output::sum(&graft(&na, &nb), f),
        });
    }
    if p.is_planar() {
        let (a, b): (PlanarSum, PlanarSum) = (left.parse()?, right.parse()?);
        let out = match p {
            Product::LeftButcher => left_butcher_sums(&a, &b),
            _ => left_graft_sums(&a, &b),
        };
        Ok(output::sum(&out, f))
    } else {
        let (a, b): (NonPlanarSum, NonPlanarSum) = (left.parse()?, right.parse()?);
        let out = match p {
            Product::Butcher => butcher_sums(&a, &b),
            _ => graft_sums(&a, &b),
        };
        Ok(output::sum(&out, f))
    }
}

fn psi_op(input: &TreeOrDegree, inverse: bool, f: Format, limits: &Limits) -> Run {
    if let Some(n) = input.degree {
        let m = psi_matrix_with(n, limits)?;
        let m = if inverse {
            m.inverse_unitriangular()
                .ok_or_else(|| Failure::Usage("Ψ matrix is not unitriangular".into()))?
        } else {
            m
        };
        return Ok(output::matrix(&m, f));
    }
    let raw = input.tree.as_deref().unwrap_or_default();
    let out = match raw.parse::<PlanarTree>() {
        Ok(t) => {
            limits.check_degree(t.degree())?;
            if inverse {
                psi_inverse(&t)
            } else {
                psi(&t)
            }
        }
        Err(_) => {
            let s: PlanarSum = raw.parse()?;
            for t in s.trees() {
                limits.check_degree(t.degree())?;
            }
            if inverse {
                psi_inverse_sum(&s)
            } else {
                psi_sum(&s)
            }
        }
    };
    Ok(output::sum(&out, f))
}

fn coeff(sigma: &str, tau: &str, method: Method, f: Format, limits: &Limits) -> Run {
    let (sigma, tau) = (checked_tree(sigma, limits)?, checked_tree(tau, limits)?);
    match method {
        Method::Recursive => Ok(output::record(
            &[("coeff", integer(&coeff_c_recursive(&sigma, &tau)))],
            f,
        )),
        Method::Bijections => Ok(output::record(
            &[(
                "coeff",
                integer(&coeff_c_bijections_with(&sigma, &tau, limits)?),
            )],
            f,
        )),
        Method::Both => {
            let r = coeff_c_recursive(&sigma, &tau);
            let b = coeff_c_bijections_with(&sigma, &tau, limits)?;
            let agree = r == b;
            let out = output::record(
                &[
                    ("recursive", integer(&r)),
                    ("bijections", integer(&b)),
                    ("match", json!(agree)),
                ],
                f,
            );
            if agree {
                Ok(out)
            } else {
                Err(Failure::Output(
                    out,
                    EXIT_DISAGREEMENT,
                    format!("methods disagree: {r} vs {b}"),
                ))
            }
        }
    }
}

fn load_section(path: Option<&Path>, n: usize, limits: &Limits) -> Run<Section> {
    match path {
        Some(p) => Ok(read(p)?.parse()?),
        None => Ok(default_section_with(n, limits)?),
    }
}

/// Monomials and their degree from `--ag`, `--monomials` or `--manifest`.
fn monomials(
    source: &MonomialSource,
    degree: Option<usize>,
    limits: &Limits,
) -> Run<(Vec<MonomialExpr>, usize)> {
    if source.ag {
        let n = degree.ok_or_else(|| Failure::Usage("--ag needs --degree".into()))?;
        return Ok((
            ag_basis_with(n, &GeneratorOrder::single(), limits)?.monomials,
            n,
        ));
    }
    if let Some(p) = &source.manifest {
        let basis = MonomialBasis::from_json(&read(p)?)?;
        let n = basis.degree;
        return Ok((basis.monomials, n));
    }
    let p = source.monomials.as_ref().expect("clap requires one source");
    let ms = parse_monomial_file(&read(p)?)?;
    let n = degree
        .or_else(|| ms.first().map(MonomialExpr::degree))
        .ok_or_else(|| Failure::Usage(format!("{}: no monomials", p.display())))?;
    Ok((ms, n))
}

fn expand(
    source: &MonomialSource,
    degree: Option<usize>,
    canonical: bool,
    f: Format,
    limits: &Limits,
) -> Run {
    let (ms, n) = monomials(source, degree, limits)?;
    limits.check_degree(n)?;
    let m = if source.manifest.is_some() {
        expand_basis(&MonomialBasis {
            degree: n,
            generator_order: GeneratorOrder::single(),
            monomials: ms
                .iter()
                .map(MonomialExpr::with_default_generator)
                .collect(),
        })?
    } else {
        expand_monomials_with(&ms, n, limits)?
    };
    let m = if canonical {
        m.permute_columns(&canonical_column_order(&ms))
    } else {
        m
    };
    Ok(output::matrix(&m, f))
}

fn evaluated(e: &Evaluated, f: Format) -> String {
    match e {
        Evaluated::Planar(s) => output::sum(s, f),
        Evaluated::NonPlanar(s) => output::sum(s, f),
    }
}

fn monomial_list(ms: &[MonomialExpr], f: Format) -> String {
    let text: Vec<String> = ms.iter().map(ToString::to_string).collect();
    match f {
        Format::Text => format_monomial_file(ms),
        _ => output::list(
            "monomials",
            "monomial",
            &text,
            text.iter().map(|s| json!(s)).collect(),
            f,
        ),
    }
}

fn order(tree: &str, kind: OrderKind, f: Format) -> Run {
    let t = planar(tree)?;
    let o = t.vertex_order(kind);
    let pairs = o.pairs();
    let linear = o.linear_extension();
    Ok(match f {
        Format::Text => {
            let mut out: String = pairs
                .iter()
                .map(|(v, w)| format!("{v} {} {w}\n", kind.symbol()))
                .collect();
            if let Some(l) = &linear {
                let names: Vec<String> = l.iter().map(ToString::to_string).collect();
                out.push_str(&format!("linear: {}\n", names.join(" ")));
            }
            out
        }
        Format::Json => output::to_json(&json!({
            "kind": kind.name(),
            "pairs": pairs.iter().map(|(v, w)| json!([v.to_string(), w.to_string()])).collect::<Vec<_>>(),
            "linear": linear.map(|l| l.iter().map(ToString::to_string).collect::<Vec<_>>()),
        })),
        Format::Csv => {
            let mut out = String::from("before,after\n");
            for (v, w) in &pairs {
                out.push_str(&format!("{v},{w}\n"));
            }
            out
        }
    })
}

fn compute(op: &ComputeOp, f: Format, limits: &Limits) -> Run {
    match op {
        ComputeOp::Product {
            product: p,
            left,
            right,
        } => product(*p, left, right, f),
        ComputeOp::Psi { input } => psi_op(input, false, f, limits),
        ComputeOp::PsiInverse { input } => psi_op(input, true, f, limits),
        ComputeOp::PsiBar { tree } => Ok(output::sum(&psi_bar(&checked_tree(tree, limits)?), f)),
        ComputeOp::Coeff { sigma, tau, method } => coeff(sigma, tau, *method, f, limits),
        ComputeOp::Alpha { tree, tau, degree } => match (tree, tau) {
            (Some(s), Some(tau)) => {
                let (s, tau) = (nonplanar(s)?, checked_tree(tau, limits)?);
                Ok(output::record(
                    &[
                        ("alpha", integer(&alpha(&s, &tau)?)),
                        ("tilde_b", integer(&count_tilde_b_with(&s, &tau, limits)?)),
                        ("sym", integer(&s.symmetry_factor())),
                    ],
                    f,
                ))
            }
            _ => {
                let n = degree.ok_or_else(|| {
                    Failure::Usage("alpha needs --tree and --tau, or --degree".into())
                })?;
                Ok(output::matrix(&alpha_matrix_with(n, limits)?, f))
            }
        },
        ComputeOp::Beta { degree, section } => {
            let s = load_section(section.as_deref(), *degree, limits)?;
            Ok(output::matrix(&beta_matrix_with(&s, *degree, limits)?, f))
        }
        ComputeOp::PsiTilde { tree, section } => {
            let t = nonplanar(tree)?;
            limits.check_degree(t.degree())?;
            let s = load_section(section.as_deref(), t.degree(), limits)?;
            Ok(output::sum(&psi_tilde(&s, &t)?, f))
        }
        ComputeOp::Expand {
            source,
            degree,
            canonical,
        } => expand(source, *degree, *canonical, f, limits),
        ComputeOp::Evaluate { monomial, product } => {
            let m: MonomialExpr = monomial.parse()?;
            limits.check_degree(m.degree())?;
            Ok(evaluated(&evaluate(&m, *product), f))
        }
        ComputeOp::LowerEnergy { monomial, planar } => {
            let m: MonomialExpr = monomial.parse()?;
            let t = if *planar {
                planar_term(&m)
            } else {
                lower_energy_term(&m).into_planar()
            };
            Ok(one_tree(&t, f))
        }
        ComputeOp::Monomial { tree } => {
            let m = monomial_of_planar(&planar(tree)?);
            Ok(output::record(&[("monomial", json!(m.to_string()))], f))
        }
        ComputeOp::Basis { degree, alphabet } => {
            let order: GeneratorOrder = alphabet.parse()?;
            let basis = ag_basis_with(*degree, &order, limits)?;
            Ok(match f {
                Format::Json => output::to_json(&basis.to_json()),
                _ => monomial_list(&basis.monomials, f),
            })
        }
        ComputeOp::Grounded { source, degree } => {
            let (ms, n) = monomials(source, *degree, limits)?;
            let g = is_tree_grounded_with(&ms, n, limits)?;
            let names = |ts: &[Tree]| json!(ts.iter().map(ToString::to_string).collect::<Vec<_>>());
            Ok(output::record(
                &[
                    ("grounded", json!(g.grounded)),
                    ("missing", names(&g.missing)),
                    ("duplicated", names(&g.duplicated)),
                ],
                f,
            ))
        }
        ComputeOp::SectionOfBasis { source, degree } => {
            let (ms, n) = monomials(source, *degree, limits)?;
            let s = section_of_basis(&ms, n)?;
            Ok(output::document(&s.to_string(), s.to_json(), f))
        }
        ComputeOp::BasisOfSection { degree, section } => {
            limits.check_degree(*degree)?;
            let s = load_section(section.as_deref(), *degree, limits)?;
            Ok(monomial_list(&basis_from_section(&s, *degree)?, f))
        }
        ComputeOp::Stats { tree } => {
            let t = checked_tree(tree, limits)?;
            let np = forget_planarity(&t);
            Ok(output::record(
                &[
                    ("tree", json!(t.to_string())),
                    ("nonplanar", json!(np.to_string())),
                    ("degree", json!(t.degree())),
                    ("potential_energy", json!(t.potential_energy())),
                    ("symmetry_factor", integer(&np.symmetry_factor())),
                    ("embeddings", json!(np.embeddings().len())),
                    ("n", integer(&n_statistic(&t))),
                ],
                f,
            ))
        }
        ComputeOp::Order { tree, kind } => order(tree, *kind, f),
        ComputeOp::Rotate { binary, tree } => match (binary, tree) {
            (Some(b), _) => Ok(one_tree(&rotation(&b.parse::<BinaryTree>()?), f)),
            (None, Some(t)) => {
                let b = BinaryTree::unrotate(&planar(t)?);
                Ok(output::record(&[("binary", json!(b.to_string()))], f))
            }
            (None, None) => Err(Failure::Usage("rotate needs --binary or --tree".into())),
        },
        ComputeOp::Decompose { tree } => {
            let (a, b) = decompose(&planar(tree)?)?;
            Ok(output::record(
                &[
                    ("left", json!(a.to_string())),
                    ("trunk", json!(b.to_string())),
                ],
                f,
            ))
        }
        ComputeOp::Sequence { max_degree } => {
            let sums = n_sums(*max_degree, limits)?;
            let text: Vec<String> = sums.iter().map(ToString::to_string).collect();
            Ok(output::list(
                "sequence",
                "sum",
                &text,
                sums.iter().map(integer).collect(),
                f,
            ))
        }
    }
}

fn section(action: &SectionAction, f: Format, limits: &Limits) -> Run {
    match action {
        SectionAction::Validate { file } => {
            let s: Section = read(file)?.parse()?;
            let degrees: Vec<usize> = s.degrees().collect();
            Ok(output::record(
                &[
                    ("valid", json!(true)),
                    ("degrees", json!(degrees)),
                    ("entries", json!(s.len())),
                ],
                f,
            ))
        }
        SectionAction::Show { file, degree } => {
            let s = match (file, degree) {
                (Some(p), _) => read(p)?.parse::<Section>()?,
                (None, Some(n)) => {
                    limits.check_degree(*n)?;
                    let mut s = default_section_with(1, limits)?;
                    for k in 2..=*n {
                        s = s.union(&default_section_with(k, limits)?)?;
                    }
                    s
                }
                (None, None) => return Err(Failure::Usage("show needs a file or --degree".into())),
            };
            Ok(output::document(&s.to_string(), s.to_json(), f))
        }
        SectionAction::Count { degree } => {
            limits.check_degree(*degree)?;
            Ok(output::record(
                &[("sections", integer(&section_count(*degree)?))],
                f,
            ))
        }
        SectionAction::List { degree } => {
            limits.check_degree(*degree)?;
            let all = all_sections(*degree)?;
            Ok(match f {
                Format::Json => {
                    output::to_json(&Value::Array(all.iter().map(Section::to_json).collect()))
                }
                _ => all
                    .iter()
                    .enumerate()
                    .map(|(i, s)| format!("# section {}\n{s}", i + 1))
                    .collect::<Vec<_>>()
                    .join("\n"),
            })
        }
    }
}
