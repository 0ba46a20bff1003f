use num_bigint::BigInt;
use proptest::prelude::*;

use prelie_core::monomials::{evaluate, lower_energy_term, planar_term, MonomialExpr};
use prelie_core::products::{
    butcher, graft, graft_sums, left_butcher, left_graft, left_graft_sums, Product,
};
use prelie_core::projection::{forget_planarity, psi_bar};
use prelie_core::psi::{coeff_c_recursive, psi, psi_inverse, psi_sum};
use prelie_core::{Label, NonPlanarSum, OrderKind, PlanarSum, PlanarTree, Tree};

/// Builds a planar tree from a parent list: vertex `i + 1` becomes the last
/// child of vertex `parents[i] % (i + 1)`. Every planar tree arises this way.
fn from_parents(parents: &[usize], labels: &[Option<u8>]) -> PlanarTree {
    let n = parents.len() + 1;
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &p) in parents.iter().enumerate() {
        children[p % (i + 1)].push(i + 1);
    }
    fn build(v: usize, children: &[Vec<usize>], labels: &[Option<u8>]) -> PlanarTree {
        let label = labels
            .get(v)
            .copied()
            .flatten()
            .map(|c| Label::new(((b'a' + c % 3) as char).to_string()).unwrap());
        PlanarTree::new(
            label,
            children[v]
                .iter()
                .map(|&c| build(c, children, labels))
                .collect(),
        )
    }
    build(0, &children, labels)
}

fn planar(max: usize) -> impl Strategy<Value = PlanarTree> {
    prop::collection::vec(any::<usize>(), 0..max).prop_map(|p| from_parents(&p, &[]))
}

fn labeled(max: usize) -> impl Strategy<Value = PlanarTree> {
    (
        prop::collection::vec(any::<usize>(), 0..max),
        prop::collection::vec(prop::option::of(any::<u8>()), max + 1),
    )
        .prop_map(|(p, l)| from_parents(&p, &l))
}

fn tree(max: usize) -> impl Strategy<Value = Tree> {
    planar(max).prop_map(|t| Tree::from_planar(&t))
}

fn monomial(max_leaves: usize) -> impl Strategy<Value = MonomialExpr> {
    let leaf = Just(MonomialExpr::g());
    leaf.prop_recursive(8, max_leaves as u32, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| MonomialExpr::product(l, r))
    })
    .prop_filter("leaf bound", move |m| m.degree() <= max_leaves)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn text_and_json_round_trip(t in labeled(10)) {
        prop_assert_eq!(t.to_string().parse::<PlanarTree>().unwrap(), t.clone());
        let json = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<PlanarTree>(&json).unwrap(), t.clone());
        let np = Tree::from_planar(&t);
        prop_assert_eq!(np.to_string().parse::<Tree>().unwrap(), np.clone());
        prop_assert_eq!(Tree::from_planar(np.as_planar()), np);
    }

    #[test]
    fn degree_is_one_plus_children(t in planar(12)) {
        let sum: usize = t.children().iter().map(PlanarTree::degree).sum();
        prop_assert_eq!(t.degree(), 1 + sum);
        prop_assert_eq!(t.potential_energy(), forget_planarity(&t).potential_energy());
    }

    #[test]
    fn sums_round_trip(a in planar(6), b in planar(6), c in -5i64..5) {
        let mut s = PlanarSum::term(a);
        s.add_term(BigInt::from(c), b);
        prop_assert_eq!(s.to_string().parse::<PlanarSum>().unwrap(), s.clone());
        let json = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<PlanarSum>(&json).unwrap(), s);
    }

    #[test]
    fn orders_refine_each_other(t in planar(7)) {
        let tree = t.vertex_order(OrderKind::Tree);
        let left = t.vertex_order(OrderKind::LeftRefined);
        let total = t.vertex_order(OrderKind::Total);
        let n = t.degree();
        for i in 0..n {
            prop_assert!(!total.precedes_index(i, i));
            for j in 0..n {
                if tree.precedes_index(i, j) { prop_assert!(left.precedes_index(i, j)); }
                if left.precedes_index(i, j) { prop_assert!(total.precedes_index(i, j)); }
                if i != j { prop_assert!(total.precedes_index(i, j) ^ total.precedes_index(j, i)); }
            }
        }
        prop_assert!((1..n).all(|j| tree.precedes_index(0, j)));
    }

    #[test]
    fn projection_intertwines_products(s in planar(4), t in planar(4)) {
        let (ps, pt) = (forget_planarity(&s), forget_planarity(&t));
        prop_assert_eq!(forget_planarity(&left_butcher(&s, &t)), butcher(&ps, &pt));
        prop_assert_eq!(left_graft(&s, &t).map_terms(forget_planarity), graft(&ps, &pt));
    }

    #[test]
    fn grafting_has_one_term_per_vertex(s in labeled(5), t in labeled(5)) {
        prop_assert_eq!(left_graft(&s, &t).total(), BigInt::from(t.degree()));
        let (a, b) = (Tree::from_planar(&s), Tree::from_planar(&t));
        prop_assert_eq!(graft(&a, &b).total(), BigInt::from(t.degree()));
    }

    #[test]
    fn pre_lie_and_nap(s in tree(3), t in tree(3), u in tree(3)) {
        let one = |x: &Tree| NonPlanarSum::term(x.clone());
        let assoc = |x: &Tree, y: &Tree| {
            &graft_sums(&graft(x, y), &one(&u)) - &graft_sums(&one(x), &graft(y, &u))
        };
        prop_assert_eq!(assoc(&s, &t), assoc(&t, &s));
        prop_assert_eq!(butcher(&s, &butcher(&t, &u)), butcher(&t, &butcher(&s, &u)));
    }

    #[test]
    fn labels_survive_products(s in labeled(4), t in labeled(4)) {
        let count = |x: &PlanarTree| x.to_string().bytes().filter(u8::is_ascii_lowercase).count();
        let want = count(&s) + count(&t);
        prop_assert_eq!(count(&left_butcher(&s, &t)), want);
        prop_assert!(left_graft(&s, &t).trees().all(|x| count(x) == want));
    }

    #[test]
    fn psi_is_a_morphism(s in planar(4), t in planar(4)) {
        prop_assert_eq!(
            psi(&left_butcher(&s, &t)),
            left_graft_sums(&psi(&s), &psi(&t))
        );
    }

    #[test]
    fn psi_is_unipotent_and_invertible(t in planar(7)) {
        let p = psi(&t);
        prop_assert_eq!(p.coeff(&t), BigInt::from(1));
        let d = t.potential_energy();
        prop_assert!(p.trees().filter(|x| *x != &t).all(|x| x.potential_energy() > d));
        prop_assert_eq!(psi_sum(&psi_inverse(&t)), PlanarSum::term(t.clone()));
    }

    #[test]
    fn recursive_coefficients_read_off_psi(t in planar(7)) {
        for (sigma, c) in psi(&t).iter() {
            prop_assert_eq!(&coeff_c_recursive(sigma, &t), c);
        }
        prop_assert_eq!(psi_bar(&t).total(), psi(&t).total());
    }

    #[test]
    fn monomial_readings_agree(m in monomial(8)) {
        prop_assert_eq!(forget_planarity(&planar_term(&m)), lower_energy_term(&m));
        prop_assert_eq!(m.to_string().parse::<MonomialExpr>().unwrap(), m.clone());
        prop_assert_eq!(MonomialExpr::from_binary(&m.to_binary()), m.clone());
        prop_assert_eq!(m.to_binary().rotate(), planar_term(&m));
        let lg = evaluate(&m, Product::LeftGraft).to_string();
        prop_assert_eq!(lg, psi(&planar_term(&m)).to_string());
    }
}
