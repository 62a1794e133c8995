//! Weights on forests and the actions that move them.
//!
//! The additive weight of a node at depth k lives in Z/2^k (so the root
//! carries 0). A child at depth k of a node with value v takes v or
//! v + 2^{k-1}; the two children of a ramification node take the two
//! different lifts.

use crate::shape::ForestShape;
use crate::tree::{Forest, Tree};
use crate::ForestError;

/// Additive weight: value per node, indexed like the owning `ForestShape`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<u64>);

impl Weight {
    /// Values at the final nodes, in preorder (the compact external form).
    pub fn final_values(&self, shape: &ForestShape) -> Vec<u64> {
        shape.final_nodes.iter().map(|&u| self.0[u]).collect()
    }

    /// Reconstruct a weight from final-node values (preorder); every
    /// non-final value is forced by its subtree. Fails if the values are
    /// inconsistent with the weight rules.
    pub fn from_final_values(shape: &ForestShape, values: &[u64]) -> Result<Weight, ForestError> {
        if values.len() != shape.final_nodes.len() {
            return Err(ForestError::Domain(format!(
                "expected {} final-node values, got {}",
                shape.final_nodes.len(),
                values.len()
            )));
        }
        let n = shape.node_count();
        let mut vals = vec![u64::MAX; n];
        for (&u, &v) in shape.final_nodes.iter().zip(values) {
            let modulus = 1u64 << shape.depth[u];
            if v >= modulus {
                return Err(ForestError::Domain(format!(
                    "value {v} out of range for a depth-{} node",
                    shape.depth[u]
                )));
            }
            vals[u] = v;
        }
        // Propagate upward in reverse preorder: parent value is the child's
        // value reduced one level.
        for u in (0..n).rev() {
            if shape.children[u].is_empty() {
                continue;
            }
            let k = shape.depth[u];
            let modulus = 1u64 << k;
            let mut v = None;
            for &c in &shape.children[u] {
                let reduced = vals[c] % modulus;
                match v {
                    None => v = Some(reduced),
                    Some(prev) if prev != reduced => {
                        return Err(ForestError::Domain(
                            "children disagree below one node".into(),
                        ))
                    }
                    _ => {}
                }
            }
            vals[u] = v.expect("node has children");
        }
        let w = Weight(vals);
        w.validate(shape)?;
        Ok(w)
    }

    /// Check the child, ramification and root rules.
    pub fn validate(&self, shape: &ForestShape) -> Result<(), ForestError> {
        for u in 0..shape.node_count() {
            let k = shape.depth[u];
            if self.0[u] >= (1u64 << k) {
                return Err(ForestError::Domain(format!("node {u} value out of Z/2^{k}")));
            }
            if shape.parent[u].is_none() && self.0[u] != 0 {
                return Err(ForestError::Domain("root weight must be 0".into()));
            }
            if let Some(p) = shape.parent[u] {
                let pk = shape.depth[p];
                if self.0[u] % (1u64 << pk) != self.0[p] {
                    return Err(ForestError::Domain(format!(
                        "node {u} does not lift its parent's value"
                    )));
                }
            }
            if shape.children[u].len() == 2 {
                let c1 = shape.children[u][0];
                let c2 = shape.children[u][1];
                if self.0[c1] == self.0[c2] {
                    return Err(ForestError::Domain(format!(
                        "ramification children of {u} must differ"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Shift action: add g_alpha (reduced to each node's level) on tree alpha.
    pub fn shift(&self, shape: &ForestShape, g: &[u64]) -> Weight {
        assert_eq!(g.len(), shape.tree_range.len());
        let mut out = self.0.clone();
        for (u, v) in out.iter_mut().enumerate() {
            let k = shape.depth[u];
            let modulus = 1u64 << k;
            let bar = g[shape.tree_of[u]] % modulus;
            *v = (*v + bar) % modulus;
        }
        Weight(out)
    }

    /// Galois action: multiply by an odd residue, reduced to each level.
    pub fn galois(&self, shape: &ForestShape, gamma: u64) -> Result<Weight, ForestError> {
        if gamma % 2 == 0 {
            return Err(ForestError::Domain(format!(
                "galois action needs an odd residue, got {gamma}"
            )));
        }
        let mut out = self.0.clone();
        for (u, v) in out.iter_mut().enumerate() {
            let modulus = 1u64 << shape.depth[u];
            *v = (*v * (gamma % modulus)) % modulus;
        }
        Ok(Weight(out))
    }

    /// Automorphism action by a node permutation: the new value at perm(u)
    /// is the old value at u.
    pub fn permute(&self, perm: &[usize]) -> Weight {
        let mut out = vec![0u64; self.0.len()];
        for (u, &v) in self.0.iter().enumerate() {
            out[perm[u]] = v;
        }
        Weight(out)
    }
}

/// All admissible weights of a forest; the count is exactly 2^{i-l}.
pub fn enumerate_weights(shape: &ForestShape) -> Vec<Weight> {
    let n = shape.node_count();
    let mut out = Vec::new();
    let mut current = vec![0u64; n];
    assign(shape, 0, &mut current, &mut out);
    out.sort();
    out
}

fn assign(shape: &ForestShape, u: usize, current: &mut Vec<u64>, out: &mut Vec<Weight>) {
    if u == shape.node_count() {
        out.push(Weight(current.clone()));
        return;
    }
    match shape.parent[u] {
        None => {
            current[u] = 0;
            assign(shape, u + 1, current, out);
        }
        Some(p) => {
            let k = shape.depth[u];
            let base = current[p];
            let high = base + (1u64 << (k - 1));
            // Second child of a ramification node is forced to differ.
            let sibling = shape.children[p]
                .iter()
                .copied()
                .find(|&c| c < u && shape.children[p].len() == 2);
            let choices: Vec<u64> = match sibling {
                Some(s) => {
                    let taken = current[s];
                    vec![if taken == base { high } else { base }]
                }
                None => vec![base, high],
            };
            for v in choices {
                current[u] = v;
                assign(shape, u + 1, current, out);
            }
        }
    }
}

/// Root elimination: for a tree with at least two nodes, remove the root.
/// A non-ramified root yields one tree with weights (w(u) - w(rbar))/2;
/// a ramified root yields the two descendant trees, each re-based at its
/// own root. Returns the canonical forest, the mapped weight, and whether
/// the root ramified.
pub fn eliminate_root(
    tree: &Tree,
    shape: &ForestShape,
    w: &Weight,
) -> Result<(Forest, Weight), ForestError> {
    if shape.tree_range.len() != 1 || &shape.forest.trees()[0] != tree {
        return Err(ForestError::Domain("shape does not match the given tree".into()));
    }
    if tree.size() < 2 {
        return Err(ForestError::Domain(
            "cannot eliminate the root of a single-node tree".into(),
        ));
    }
    let subtrees: Vec<Tree> = tree.children().to_vec();
    // Preorder blocks of the root's children.
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut start = 1usize;
    for st in &subtrees {
        blocks.push((start, start + st.size()));
        start += st.size();
    }
    // New forest sorts the subtrees canonically; the children of a
    // canonical tree are already sorted, so block order is preserved.
    let forest = Forest::new(subtrees);
    let mut vals = Vec::with_capacity(tree.size() - 1);
    for &(s, e) in &blocks {
        let base = w.0[s];
        for u in s..e {
            // Values in a subtree are congruent to the subtree root's value
            // mod 2, so the halving is exact.
            debug_assert_eq!(w.0[u] % 2, base % 2);
            vals.push((w.0[u] - base) / 2);
        }
    }
    Ok((forest, Weight(vals)))
}
