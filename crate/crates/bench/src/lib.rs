//! Workloads shared by the benchmarks.

use prelie_core::tree::enumerate_planar;
use prelie_core::PlanarTree;

/// Every ordered pair of planar trees of degree `n`.
pub fn planar_pairs(n: usize) -> Vec<(PlanarTree, PlanarTree)> {
    let trees = enumerate_planar(n).expect("degree within the default cap");
    trees
        .iter()
        .flat_map(|s| trees.iter().map(move |t| (s.clone(), t.clone())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_count_is_square() {
        assert_eq!(planar_pairs(4).len(), 25);
    }
}
