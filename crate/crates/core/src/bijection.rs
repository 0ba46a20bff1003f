//! Exhaustive counting of order-compatible vertex bijections.

use crate::tree::{total_order_listing, PlanarTree, VertexOrder};

/// Counts bijections `φ: V(source) → V(target)` such that
///
/// * `v ≺ w` in `source_order` implies `φ(v) ⋘ φ(w)`, and
/// * `x < y` in the target implies `φ⁻¹(x) < φ⁻¹(y)` in `source_ancestors`.
///
/// Target vertices are visited in `⋘` order and each receives a preimage.
/// Because `⋘` is total, the first condition holds exactly when every
/// `≺`-predecessor of a chosen source vertex is already used. The second only
/// needs checking along target edges, which pins the root onto the root.
pub(crate) fn count_bijections(
    source_order: &VertexOrder,
    source_ancestors: &VertexOrder,
    target: &PlanarTree,
) -> u64 {
    let n = source_order.vertices().len();
    assert!(n <= 64, "bijection search is limited to 64 vertices");
    if n != target.degree() {
        return 0;
    }
    let preds: Vec<u64> = (0..n)
        .map(|w| {
            (0..n)
                .filter(|&v| source_order.precedes_index(v, w))
                .fold(0, |m, v| m | 1 << v)
        })
        .collect();
    let below: Vec<u64> = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&w| source_ancestors.precedes_index(v, w))
                .fold(0, |m, w| m | 1 << w)
        })
        .collect();

    let listing = total_order_listing(target);
    // parent[i]: position in `listing` of the parent of listing[i]
    let parent: Vec<Option<usize>> = listing
        .iter()
        .map(|v| {
            let p = v.path();
            if p.is_empty() {
                return None;
            }
            let up = &p[..p.len() - 1];
            listing.iter().position(|w| w.path() == up)
        })
        .collect();

    struct Search<'a> {
        preds: &'a [u64],
        below: &'a [u64],
        parent: &'a [Option<usize>],
        image_of: Vec<usize>,
    }

    impl Search<'_> {
        fn run(&mut self, step: usize, used: u64) -> u64 {
            let n = self.preds.len();
            if step == n {
                return 1;
            }
            let mut candidates = !used & mask(n);
            if let Some(p) = self.parent[step] {
                candidates &= self.below[self.image_of[p]];
            }
            let mut total = 0;
            while candidates != 0 {
                let v = candidates.trailing_zeros() as usize;
                candidates &= candidates - 1;
                if self.preds[v] & !used != 0 {
                    continue;
                }
                self.image_of[step] = v;
                total += self.run(step + 1, used | 1 << v);
            }
            total
        }
    }

    let mut search = Search {
        preds: &preds,
        below: &below,
        parent: &parent,
        image_of: vec![0; n],
    };
    search.run(0, 0)
}

fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{OrderKind, Tree};

    fn b(sigma: &str, tau: &str) -> u64 {
        let s: PlanarTree = sigma.parse().unwrap();
        count_bijections(
            &s.vertex_order(OrderKind::LeftRefined),
            &s.vertex_order(OrderKind::Tree),
            &tau.parse().unwrap(),
        )
    }

    #[test]
    fn worked_example() {
        assert_eq!(b("(()(()))", "(()()())"), 2);
        assert_eq!(b("()", "()"), 1);
        assert_eq!(b("(())", "()"), 0);
    }

    #[test]
    fn nonplanar_source() {
        let s: Tree = "(()())".parse().unwrap();
        let order = s.vertex_order(OrderKind::Tree).unwrap();
        assert_eq!(
            count_bijections(&order, &order, &"(()())".parse().unwrap()),
            2
        );
        assert_eq!(
            count_bijections(&order, &order, &"((()))".parse().unwrap()),
            0
        );
    }
}
