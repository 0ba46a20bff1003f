//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use prelie_core::verify::Suite;
use prelie_core::{OrderKind, Product};

#[derive(Debug, Parser)]
#[command(
    name = "prelie",
    version,
    about = "Pre-Lie and magmatic algebras on rooted trees"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the trees of one degree in canonical order.
    Enumerate {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        degree: usize,
    },
    /// Evaluate a library operation.
    Compute {
        #[command(subcommand)]
        op: ComputeOp,
    },
    /// Run a verification suite and report every check.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        /// Largest degree checked; each suite has its own default.
        #[arg(long)]
        max_degree: Option<usize>,
        /// Seed for the sampled checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Inspect section files.
    Section {
        #[command(subcommand)]
        action: SectionAction,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Planar,
    Nonplanar,
    Binary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recursive,
    Bijections,
    Both,
}

/// A single tree, or a whole degree as a matrix.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct TreeOrDegree {
    /// A planar tree or a sum of planar trees.
    #[arg(long)]
    pub tree: Option<String>,
    #[arg(long)]
    pub degree: Option<usize>,
}

/// Where a list of monomials comes from.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct MonomialSource {
    /// The Agrachev-Gamkrelidze basis of `--degree`.
    #[arg(long)]
    pub ag: bool,
    /// A monomial file, one monomial per line.
    #[arg(long)]
    pub monomials: Option<PathBuf>,
    /// A basis manifest.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ComputeOp {
    /// One of the four tree products on trees or sums.
    Product {
        #[arg(long, value_parser = parse_product)]
        product: Product,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Ψ of a tree or sum, or the Ψ matrix of a degree.
    Psi {
        #[command(flatten)]
        input: TreeOrDegree,
    },
    /// Ψ⁻¹ of a tree or sum, or the inverse Ψ matrix of a degree.
    PsiInverse {
        #[command(flatten)]
        input: TreeOrDegree,
    },
    /// π(Ψ(τ)).
    PsiBar {
        #[arg(long)]
        tree: String,
    },
    /// The coefficient of σ in Ψ(τ).
    Coeff {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        tau: String,
        #[arg(long, value_enum, default_value_t = Method::Recursive)]
        method: Method,
    },
    /// α(s, τ), b̃(s, τ) and sym(s) for one pair, or the α matrix of a degree.
    Alpha {
        /// Non-planar tree `s`.
        #[arg(long, requires = "tau", conflicts_with = "degree")]
        tree: Option<String>,
        #[arg(long)]
        tau: Option<String>,
        #[arg(long, required_unless_present = "tree")]
        degree: Option<usize>,
    },
    /// The β matrix of a section; the canonical section by default.
    Beta {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        section: Option<PathBuf>,
    },
    /// Ψ̃_S(t); the canonical section by default.
    PsiTilde {
        #[arg(long)]
        tree: String,
        #[arg(long)]
        section: Option<PathBuf>,
    },
    /// Expansion matrix of monomials over the tree basis.
    Expand {
        #[command(flatten)]
        source: MonomialSource,
        #[arg(long)]
        degree: Option<usize>,
        /// Reorder columns so the matrix is unitriangular.
        #[arg(long)]
        canonical: bool,
    },
    /// Evaluate a monomial under one of the four products.
    Evaluate {
        #[arg(long)]
        monomial: String,
        #[arg(long, value_parser = parse_product)]
        product: Product,
    },
    /// The Butcher-product reading of a monomial.
    LowerEnergy {
        #[arg(long)]
        monomial: String,
        /// Print the planar reading instead.
        #[arg(long)]
        planar: bool,
    },
    /// The monomial whose planar reading is the given tree.
    Monomial {
        #[arg(long)]
        tree: String,
    },
    /// The Agrachev-Gamkrelidze basis as a manifest.
    Basis {
        #[arg(long)]
        degree: usize,
        /// Comma-separated generators, smallest first.
        #[arg(long, default_value = "g")]
        alphabet: String,
    },
    /// Whether monomials are tree-grounded.
    Grounded {
        #[command(flatten)]
        source: MonomialSource,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// The section induced by a tree-grounded basis.
    SectionOfBasis {
        #[command(flatten)]
        source: MonomialSource,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// The monomial basis induced by a section.
    BasisOfSection {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        section: Option<PathBuf>,
    },
    /// Degree, potential energy, symmetry factor, embeddings and N.
    Stats {
        #[arg(long)]
        tree: String,
    },
    /// A vertex order as its list of related pairs.
    Order {
        #[arg(long)]
        tree: String,
        #[arg(long, value_parser = parse_order_kind, default_value = "total")]
        kind: OrderKind,
    },
    /// The rotation correspondence, or its inverse with `--tree`.
    Rotate {
        #[arg(long, conflicts_with = "tree", required_unless_present = "tree")]
        binary: Option<String>,
        #[arg(long)]
        tree: Option<String>,
    },
    /// σ = σ₁ ∘↘ σ₂.
    Decompose {
        #[arg(long)]
        tree: String,
    },
    /// Σ N(σ) over the planar trees of each degree.
    Sequence {
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum SectionAction {
    /// Parse and check a section file.
    Validate { file: PathBuf },
    /// Print a section file, or the canonical section up to `--degree`.
    Show {
        #[arg(required_unless_present = "degree")]
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        degree: Option<usize>,
    },
    /// Number of sections of one degree.
    Count {
        #[arg(long)]
        degree: usize,
    },
    /// Every section of one degree.
    List {
        #[arg(long)]
        degree: usize,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: prelie_core::Error| e.to_string())
}

fn parse_product(s: &str) -> Result<Product, String> {
    s.parse().map_err(|e: prelie_core::Error| e.to_string())
}

fn parse_order_kind(s: &str) -> Result<OrderKind, String> {
    s.parse().map_err(|e: prelie_core::Error| e.to_string())
}
