use super::{BinaryTree, PlanarTree, Tree};
use crate::error::Result;
use crate::limits::Limits;

/// Canonical basis order: descending potential energy, ties broken by
/// descending serialization order.
pub fn canonical_cmp(a: &PlanarTree, b: &PlanarTree) -> std::cmp::Ordering {
    b.potential_energy()
        .cmp(&a.potential_energy())
        .then_with(|| b.cmp(a))
}

fn sort_canonical(trees: &mut [PlanarTree]) {
    let mut keyed: Vec<(usize, PlanarTree)> = trees
        .iter()
        .map(|t| (t.potential_energy(), t.clone()))
        .collect();
    keyed.sort_unstable_by(|(ea, a), (eb, b)| eb.cmp(ea).then_with(|| b.cmp(a)));
    for (slot, (_, t)) in trees.iter_mut().zip(keyed) {
        *slot = t;
    }
}

/// All planar rooted trees with `n` vertices, in canonical order.
pub fn enumerate_planar(n: usize) -> Result<Vec<PlanarTree>> {
    enumerate_planar_with(n, &Limits::default())
}

pub fn enumerate_planar_with(n: usize, limits: &Limits) -> Result<Vec<PlanarTree>> {
    limits.check_degree(n)?;
    // forests[m]: ordered forests with m vertices in total
    let mut forests: Vec<Vec<Vec<PlanarTree>>> = vec![vec![Vec::new()]];
    let mut trees: Vec<Vec<PlanarTree>> = vec![Vec::new()];
    for k in 1..=n {
        trees.push(
            forests[k - 1]
                .iter()
                .map(|f| PlanarTree::graft_root(f.clone()))
                .collect(),
        );
        if k == n {
            break;
        }
        let mut fk = Vec::new();
        for first in 1..=k {
            for t in &trees[first] {
                for rest in &forests[k - first] {
                    let mut f = Vec::with_capacity(rest.len() + 1);
                    f.push(t.clone());
                    f.extend(rest.iter().cloned());
                    fk.push(f);
                }
            }
        }
        forests.push(fk);
    }
    let mut out = trees.pop().unwrap();
    sort_canonical(&mut out);
    Ok(out)
}

/// All non-planar rooted trees with `n` vertices, in canonical order.
pub fn enumerate_nonplanar(n: usize) -> Result<Vec<Tree>> {
    enumerate_nonplanar_with(n, &Limits::default())
}

pub fn enumerate_nonplanar_with(n: usize, limits: &Limits) -> Result<Vec<Tree>> {
    limits.check_degree(n)?;
    // pool: every tree of size < k, sorted descending, with its size
    let mut pool: Vec<(Tree, usize)> = Vec::new();
    let mut latest = Vec::new();
    for k in 1..=n {
        let mut forests = Vec::new();
        let mut current = Vec::new();
        multisets(&pool, k - 1, 0, &mut current, &mut forests);
        latest = forests
            .into_iter()
            .map(|f| Tree::graft_root(None, f))
            .collect::<Vec<_>>();
        pool.extend(latest.iter().cloned().map(|t| (t, k)));
        pool.sort_unstable_by(|a, b| b.0.cmp(&a.0));
    }
    let mut planar: Vec<PlanarTree> = latest.into_iter().map(Tree::into_planar).collect();
    sort_canonical(&mut planar);
    Ok(planar.into_iter().map(Tree::from).collect())
}

/// Non-increasing sequences drawn from `pool` (already descending) whose
/// sizes sum to `remaining`.
fn multisets(
    pool: &[(Tree, usize)],
    remaining: usize,
    start: usize,
    current: &mut Vec<Tree>,
    out: &mut Vec<Vec<Tree>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for i in start..pool.len() {
        let (t, size) = &pool[i];
        if *size <= remaining {
            current.push(t.clone());
            multisets(pool, remaining - size, i, current, out);
            current.pop();
        }
    }
}

/// All planar binary trees with `n` leaves, ordered by their rotation images.
pub fn enumerate_binary(n: usize) -> Result<Vec<BinaryTree>> {
    enumerate_binary_with(n, &Limits::default())
}

pub fn enumerate_binary_with(n: usize, limits: &Limits) -> Result<Vec<BinaryTree>> {
    Ok(enumerate_planar_with(n, limits)?
        .iter()
        .map(BinaryTree::unrotate)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings<T: ToString>(v: &[T]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn small_planar() {
        assert_eq!(strings(&enumerate_planar(1).unwrap()), ["()"]);
        assert_eq!(strings(&enumerate_planar(3).unwrap()), ["((()))", "(()())"]);
        assert_eq!(
            strings(&enumerate_planar(4).unwrap()),
            ["(((())))", "((()()))", "((())())", "(()(()))", "(()()())"]
        );
    }

    #[test]
    fn small_nonplanar() {
        assert_eq!(strings(&enumerate_nonplanar(1).unwrap()), ["()"]);
        assert_eq!(
            strings(&enumerate_nonplanar(4).unwrap()),
            ["(((())))", "((()()))", "((())())", "(()()())"]
        );
    }

    #[test]
    fn degree_bounds() {
        assert!(enumerate_planar(0).is_err());
        assert!(enumerate_planar(13).is_err());
        assert!(enumerate_nonplanar(0).is_err());
        let wide = Limits {
            max_degree: 13,
            ..Limits::default()
        };
        assert_eq!(enumerate_nonplanar_with(13, &wide).unwrap().len(), 12486);
    }

    #[test]
    fn binary_enumeration_follows_planar_order() {
        let bins = enumerate_binary(3).unwrap();
        assert_eq!(strings(&bins), ["[[.,.],.]", "[.,[.,.]]"]);
    }
}
