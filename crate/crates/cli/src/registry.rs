//! Which library functions each subcommand reaches, with a sample
//! invocation. Arguments starting with `@` name files in the core fixtures
//! directory.

pub struct Entry {
    pub args: &'static [&'static str],
    pub reaches: &'static [&'static str],
}

pub const REGISTRY: &[Entry] = &[
    Entry {
        args: &["enumerate", "planar", "--degree", "4"],
        reaches: &["enumerate_planar"],
    },
    Entry {
        args: &["enumerate", "nonplanar", "--degree", "4"],
        reaches: &["enumerate_nonplanar"],
    },
    Entry {
        args: &["enumerate", "binary", "--degree", "3"],
        reaches: &["enumerate_binary"],
    },
    Entry {
        args: &[
            "compute",
            "product",
            "--product",
            "left-butcher",
            "--left",
            "()",
            "--right",
            "(())",
        ],
        reaches: &["left_butcher"],
    },
    Entry {
        args: &[
            "compute",
            "product",
            "--product",
            "left-graft",
            "--left",
            "()",
            "--right",
            "(())",
        ],
        reaches: &["left_graft"],
    },
    Entry {
        args: &[
            "compute",
            "product",
            "--product",
            "butcher",
            "--left",
            "()",
            "--right",
            "(())",
        ],
        reaches: &["butcher"],
    },
    Entry {
        args: &[
            "compute",
            "product",
            "--product",
            "graft",
            "--left",
            "()",
            "--right",
            "(())",
        ],
        reaches: &["graft"],
    },
    Entry {
        args: &[
            "compute",
            "product",
            "--product",
            "left-butcher",
            "--left",
            "() + (())",
            "--right",
            "()",
        ],
        reaches: &["left_butcher_sums", "bilinear"],
    },
    Entry {
        args: &[
            "compute",
            "product",
            "--product",
            "left-graft",
            "--left",
            "2 ()",
            "--right",
            "(())",
        ],
        reaches: &["left_graft_sums", "bilinear"],
    },
    Entry {
        args: &[
            "compute",
            "product",
            "--product",
            "butcher",
            "--left",
            "() - (())",
            "--right",
            "()",
        ],
        reaches: &["butcher_sums", "bilinear"],
    },
    Entry {
        args: &[
            "compute",
            "product",
            "--product",
            "graft",
            "--left",
            "() + (())",
            "--right",
            "()",
        ],
        reaches: &["graft_sums", "bilinear"],
    },
    Entry {
        args: &["compute", "psi", "--tree", "(()(()))"],
        reaches: &["psi"],
    },
    Entry {
        args: &["compute", "psi", "--tree", "(()()) - ((()))"],
        reaches: &["psi_sum"],
    },
    Entry {
        args: &["compute", "psi", "--degree", "4"],
        reaches: &["psi_matrix"],
    },
    Entry {
        args: &["compute", "psi-inverse", "--tree", "(()())"],
        reaches: &["psi_inverse"],
    },
    Entry {
        args: &["compute", "psi-inverse", "--tree", "(()()) + ((()))"],
        reaches: &["psi_inverse_sum"],
    },
    Entry {
        args: &["compute", "psi-inverse", "--degree", "4"],
        reaches: &["psi_matrix"],
    },
    Entry {
        args: &["compute", "psi-bar", "--tree", "(()()())"],
        reaches: &["psi_bar", "forget_planarity"],
    },
    Entry {
        args: &[
            "compute", "coeff", "--sigma", "(()(()))", "--tau", "(()()())", "--method", "both",
        ],
        reaches: &["coeff_c_recursive", "coeff_c_bijections"],
    },
    Entry {
        args: &["compute", "alpha", "--tree", "(()())", "--tau", "(()())"],
        reaches: &["alpha", "count_tilde_b"],
    },
    Entry {
        args: &["compute", "alpha", "--degree", "4"],
        reaches: &["alpha_matrix"],
    },
    Entry {
        args: &["compute", "beta", "--degree", "4"],
        reaches: &["beta_matrix", "default_section"],
    },
    Entry {
        args: &[
            "compute",
            "beta",
            "--degree",
            "4",
            "--section",
            "@degree4_alt.section",
        ],
        reaches: &["beta_matrix"],
    },
    Entry {
        args: &[
            "compute",
            "psi-tilde",
            "--tree",
            "((())())",
            "--section",
            "@degree4_alt.section",
        ],
        reaches: &["psi_tilde"],
    },
    Entry {
        args: &["compute", "expand", "--ag", "--degree", "5", "--canonical"],
        reaches: &["ag_basis", "expand_monomials", "canonical_column_order"],
    },
    Entry {
        args: &["compute", "expand", "--monomials", "@b1.monomials"],
        reaches: &["parse_monomial_file", "expand_monomials"],
    },
    Entry {
        args: &["compute", "expand", "--manifest", "@ag5.json"],
        reaches: &["expand_basis"],
    },
    Entry {
        args: &[
            "compute",
            "evaluate",
            "--monomial",
            "[g,[g,g]]",
            "--product",
            "graft",
        ],
        reaches: &["evaluate", "evaluate_pre_lie"],
    },
    Entry {
        args: &["compute", "lower-energy", "--monomial", "[[g,g],g]"],
        reaches: &["lower_energy_term"],
    },
    Entry {
        args: &[
            "compute",
            "lower-energy",
            "--monomial",
            "[[g,g],g]",
            "--planar",
        ],
        reaches: &["planar_term"],
    },
    Entry {
        args: &["compute", "monomial", "--tree", "((())())"],
        reaches: &["monomial_of_planar"],
    },
    Entry {
        args: &["compute", "basis", "--degree", "3", "--alphabet", "a,b"],
        reaches: &["ag_basis", "format_monomial_file"],
    },
    Entry {
        args: &["compute", "grounded", "--monomials", "@b3.monomials"],
        reaches: &["is_tree_grounded"],
    },
    Entry {
        args: &["compute", "section-of-basis", "--ag", "--degree", "4"],
        reaches: &["section_of_basis"],
    },
    Entry {
        args: &[
            "compute",
            "basis-of-section",
            "--degree",
            "4",
            "--section",
            "@degree4_alt.section",
        ],
        reaches: &["basis_from_section"],
    },
    Entry {
        args: &["compute", "stats", "--tree", "(()(()))"],
        reaches: &["n_statistic"],
    },
    Entry {
        args: &["compute", "order", "--tree", "(()(()))", "--kind", "left"],
        reaches: &[],
    },
    Entry {
        args: &["compute", "rotate", "--binary", "[[.,.],.]"],
        reaches: &["rotation"],
    },
    Entry {
        args: &["compute", "decompose", "--tree", "(()(()))"],
        reaches: &["decompose"],
    },
    Entry {
        args: &["compute", "sequence", "--max-degree", "5"],
        reaches: &["n_sums"],
    },
    Entry {
        args: &["verify", "identities", "--max-degree", "4", "--seed", "1"],
        reaches: &["run", "identities"],
    },
    Entry {
        args: &["verify", "sequences", "--max-degree", "5"],
        reaches: &["sequences", "verify_a088716"],
    },
    Entry {
        args: &["verify", "matrices", "--max-degree", "4"],
        reaches: &["matrices"],
    },
    Entry {
        args: &["verify", "oracle", "--max-degree", "4"],
        reaches: &["oracle"],
    },
    Entry {
        args: &["verify", "tree-grounded", "--max-degree", "4"],
        reaches: &["tree_grounded", "fixture_bases"],
    },
    Entry {
        args: &["section", "validate", "@degree4_alt.section"],
        reaches: &[],
    },
    Entry {
        args: &["section", "show", "--degree", "4"],
        reaches: &["default_section", "canonical_cmp"],
    },
    Entry {
        args: &["section", "count", "--degree", "5"],
        reaches: &["section_count"],
    },
    Entry {
        args: &["section", "list", "--degree", "4"],
        reaches: &["all_sections"],
    },
];

/// Library functions that only forward to another one.
pub const WRAPPERS: &[(&str, &str)] = &[
    ("ag_basis_multigen", "ag_basis"),
    ("binary_join", "BinaryTree::join"),
];

/// Every library function named by some entry.
pub fn reached() -> Vec<&'static str> {
    let mut out: Vec<&str> = REGISTRY
        .iter()
        .flat_map(|e| e.reaches.iter().copied())
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}
