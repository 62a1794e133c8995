//! Trace-hyperplane descent: a component of one more node maps to the
//! component obtained by eliminating the root of its tree.

use crate::ComponentError;
use atlas_forests::{eliminate_root, Forest, ForestShape, Tree, Weight};

/// Image of the descent: the forest below, its mapped weight, and whether
/// the source root ramified (two trees) or not (one tree).
#[derive(Debug, Clone)]
pub struct DescentTarget {
    pub forest: Forest,
    pub weight: Weight,
    /// Tree count of the image: 1 for a non-ramified root, 2 otherwise.
    pub branch: usize,
}

/// Apply root elimination to the weighted tree of a j = 1 component.
pub fn hyperplane_descent(tree: &Tree, w: &Weight) -> Result<DescentTarget, ComponentError> {
    let shape = ForestShape::new(&Forest::new(vec![tree.clone()]));
    let (forest, weight) = eliminate_root(tree, &shape, w)?;
    let branch = forest.tree_count();
    Ok(DescentTarget { forest, weight, branch })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn non_ramified_root_descends_to_one_tree() {
        let t = Tree::chain(3);
        let w = Weight(vec![0, 0, 0]);
        let d = hyperplane_descent(&t, &w).unwrap();
        assert_eq!(d.branch, 1);
        assert_eq!(d.forest.encode(), "(())");
    }

    #[test]
    fn ramified_root_descends_to_two_trees() {
        // Root over chains of 2 and 3 descends to the two chains.
        let t = Tree::node(vec![Tree::chain(2), Tree::chain(3)]);
        let shape = ForestShape::new(&Forest::new(vec![t.clone()]));
        let orbits = atlas_forests::weight_orbits(&shape);
        for rep in &orbits.reps {
            let d = hyperplane_descent(&t, rep).unwrap();
            assert_eq!(d.branch, 2);
            assert_eq!(d.forest, Forest::new(vec![Tree::chain(2), Tree::chain(3)]));
        }
    }
}
