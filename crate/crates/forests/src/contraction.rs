//! Minimal contractions: undoing complete-tree extensions at maximal depth.

use crate::tree::Tree;

/// The minimal contraction of a tree and its depth gamma = d(T) - d(T').
///
/// T is an extension of T' when T is obtained from T' by replacing final
/// nodes at T's truncation depth with complete trees; equivalently, a
/// truncation depth D is valid when every depth-D node that still has
/// children roots a complete subtree. The minimal contraction takes the
/// smallest valid D.
pub fn minimal_contraction(tree: &Tree) -> (Tree, u32) {
    let d = tree.depth();
    for cut in 0..=d {
        if valid_truncation(tree, cut) {
            return (truncate(tree, cut), d - cut);
        }
    }
    unreachable!("cut = d is always valid");
}

fn valid_truncation(t: &Tree, cut: u32) -> bool {
    if cut == 0 {
        return t.children().is_empty() || t.complete_depth().is_some();
    }
    t.children().iter().all(|c| valid_truncation(c, cut - 1))
}

fn truncate(t: &Tree, cut: u32) -> Tree {
    if cut == 0 {
        return Tree::leaf();
    }
    Tree::node(t.children().iter().map(|c| truncate(c, cut - 1)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_tree_contracts_to_a_point() {
        for k in 0..=4u32 {
            let (t, gamma) = minimal_contraction(&Tree::complete(k));
            assert_eq!(gamma, k);
            assert_eq!(t, Tree::leaf());
        }
    }

    #[test]
    fn simple_tree_is_incompressible() {
        for len in 1..=6usize {
            let chain = Tree::chain(len);
            let (t, gamma) = minimal_contraction(&chain);
            assert_eq!(gamma, 0);
            assert_eq!(t, chain);
        }
    }

    #[test]
    fn mixed_example_contracts_by_two() {
        // Root with one child carrying two depth-1 complete subtrees, and a
        // chain of two leading to another such pair: contraction depth 2.
        let pair = Tree::node(vec![Tree::complete(1), Tree::complete(1)]);
        let up = pair.clone();
        let down = Tree::node(vec![pair]);
        let t = Tree::node(vec![up, down]);
        assert_eq!(t.depth(), 4);
        let (t2, gamma) = minimal_contraction(&t);
        assert_eq!(gamma, 2);
        assert_eq!(t2.depth(), 2);
        // The contracted tree: root with a cherry child and a chain of two.
        let expected = Tree::node(vec![
            Tree::node(vec![Tree::leaf(), Tree::leaf()]),
            Tree::chain(2),
        ]);
        assert_eq!(t2, expected);
    }

    #[test]
    fn cherry_on_a_stalk() {
        // Chain of three ending in a cherry contracts once only.
        let t = Tree::node(vec![Tree::node(vec![Tree::node(vec![
            Tree::leaf(),
            Tree::leaf(),
        ])])]);
        let (t2, gamma) = minimal_contraction(&t);
        assert_eq!(gamma, 1);
        assert_eq!(t2, Tree::chain(3));
    }

    #[test]
    fn one_sided_cherry_blocks_deep_contraction() {
        // Root - node with (cherry, leaf): only the cherry level contracts.
        let inner = Tree::node(vec![Tree::node(vec![Tree::leaf(), Tree::leaf()]), Tree::leaf()]);
        let t = Tree::node(vec![inner]);
        assert_eq!(t.depth(), 3);
        let (_, gamma) = minimal_contraction(&t);
        assert_eq!(gamma, 1);
    }
}
