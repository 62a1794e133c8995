//! Flattened view of a forest: node indexing, depths, and the generators
//! of the groups acting on weights.
//!
//! Nodes are indexed in preorder over the canonically sorted trees, so the
//! index layout is itself canonical; weights, automorphism permutations and
//! shifts all speak this indexing.

use crate::tree::{Forest, Tree};

#[derive(Debug, Clone)]
pub struct ForestShape {
    pub forest: Forest,
    /// Depth of each node.
    pub depth: Vec<u32>,
    /// Parent index, None for tree roots.
    pub parent: Vec<Option<usize>>,
    /// Children indices per node (preorder, canonical order).
    pub children: Vec<Vec<usize>>,
    /// Which tree (index into forest.trees()) each node belongs to.
    pub tree_of: Vec<usize>,
    /// Node range [start, end) of each tree.
    pub tree_range: Vec<(usize, usize)>,
    /// Depth of each tree.
    pub tree_depth: Vec<u32>,
    /// Final nodes (leaves) in preorder.
    pub final_nodes: Vec<usize>,
    /// Automorphism generators as node permutations (involutions).
    pub aut_generators: Vec<Vec<usize>>,
}

impl ForestShape {
    pub fn new(forest: &Forest) -> ForestShape {
        let n = forest.node_count();
        let mut depth = vec![0u32; n];
        let mut parent = vec![None; n];
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut tree_of = vec![0usize; n];
        let mut tree_range = Vec::new();
        let mut tree_depth = Vec::new();
        let mut next = 0usize;
        for (ti, t) in forest.trees().iter().enumerate() {
            let start = next;
            flatten(
                t, ti, None, 0, &mut next, &mut depth, &mut parent, &mut children,
                &mut tree_of,
            );
            tree_range.push((start, next));
            tree_depth.push(t.depth());
        }
        let final_nodes: Vec<usize> =
            (0..n).filter(|&u| children[u].is_empty()).collect();
        let mut shape = ForestShape {
            forest: forest.clone(),
            depth,
            parent,
            children,
            tree_of,
            tree_range,
            tree_depth,
            final_nodes,
            aut_generators: Vec::new(),
        };
        shape.aut_generators = shape.build_aut_generators();
        shape
    }

    pub fn node_count(&self) -> usize {
        self.depth.len()
    }

    /// Subtree size rooted at a node (preorder-contiguous).
    fn subtree_size(&self, u: usize) -> usize {
        1 + self.children[u].iter().map(|&c| self.subtree_size(c)).sum::<usize>()
    }

    fn subtree_tree(&self, u: usize) -> Tree {
        Tree::node(self.children[u].iter().map(|&c| self.subtree_tree(c)).collect())
    }

    /// Involutions generating Aut(F): a child-subtree swap at every
    /// ramification node with isomorphic children, plus a block swap for
    /// every adjacent pair of equal trees.
    fn build_aut_generators(&self) -> Vec<Vec<usize>> {
        let n = self.node_count();
        let mut gens = Vec::new();
        for u in 0..n {
            if self.children[u].len() == 2 {
                let c1 = self.children[u][0];
                let c2 = self.children[u][1];
                if self.subtree_tree(c1) == self.subtree_tree(c2) {
                    // Children are adjacent preorder blocks of equal size
                    // and identical canonical structure, so index-shifted
                    // correspondence is an isomorphism.
                    let s = self.subtree_size(c1);
                    debug_assert_eq!(c2, c1 + s);
                    let mut perm: Vec<usize> = (0..n).collect();
                    for k in 0..s {
                        perm[c1 + k] = c2 + k;
                        perm[c2 + k] = c1 + k;
                    }
                    gens.push(perm);
                }
            }
        }
        let trees = self.forest.trees();
        for ti in 0..trees.len().saturating_sub(1) {
            if trees[ti] == trees[ti + 1] {
                let (s1, _) = self.tree_range[ti];
                let (s2, e2) = self.tree_range[ti + 1];
                let s = e2 - s2;
                let mut perm: Vec<usize> = (0..self.node_count()).collect();
                for k in 0..s {
                    perm[s1 + k] = s2 + k;
                    perm[s2 + k] = s1 + k;
                }
                gens.push(perm);
            }
        }
        gens
    }

    /// Order of the shift group: product of 2^{d_alpha}.
    pub fn shift_group_order(&self) -> u64 {
        self.tree_depth.iter().map(|&d| 1u64 << d).product()
    }
}

fn flatten(
    t: &Tree,
    ti: usize,
    par: Option<usize>,
    d: u32,
    next: &mut usize,
    depth: &mut [u32],
    parent: &mut [Option<usize>],
    children: &mut [Vec<usize>],
    tree_of: &mut [usize],
) {
    let me = *next;
    *next += 1;
    depth[me] = d;
    parent[me] = par;
    tree_of[me] = ti;
    for c in t.children() {
        children[me].push(*next);
        flatten(c, ti, Some(me), d + 1, next, depth, parent, children, tree_of);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flatten_preorder() {
        let t = Tree::node(vec![Tree::chain(2), Tree::chain(3)]);
        let shape = ForestShape::new(&Forest::new(vec![t]));
        assert_eq!(shape.depth, vec![0, 1, 2, 1, 2, 3]);
        assert_eq!(shape.final_nodes, vec![2, 5]);
        assert_eq!(shape.parent[3], Some(0));
    }

    #[test]
    fn aut_generators_for_symmetric_shapes() {
        // Complete tree of depth 2: three swap generators.
        let shape = ForestShape::new(&Forest::new(vec![Tree::complete(2)]));
        assert_eq!(shape.aut_generators.len(), 3);
        // Two equal chains: one tree-swap generator.
        let f = Forest::new(vec![Tree::chain(2), Tree::chain(2)]);
        let shape = ForestShape::new(&f);
        assert_eq!(shape.aut_generators.len(), 1);
        assert_eq!(shape.aut_generators[0], vec![2, 3, 0, 1]);
    }
}
