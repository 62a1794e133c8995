//! Canonical trees and forests, their enumeration and serialization.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// Rooted binary tree in canonical form: the children list is sorted by
/// (size, encoding), so structural equality is isomorphism.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    children: Vec<Tree>,
    size: usize,
    depth: u32,
}

impl Tree {
    pub fn leaf() -> Tree {
        Tree { children: Vec::new(), size: 1, depth: 0 }
    }

    /// Build from children, canonicalizing the order.
    pub fn node(mut children: Vec<Tree>) -> Tree {
        assert!(children.len() <= 2, "binary trees have at most two children");
        children.sort();
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        let depth = children.iter().map(|c| c.depth + 1).max().unwrap_or(0);
        Tree { children, size, depth }
    }

    /// Simple tree (chain) of `len` nodes.
    pub fn chain(len: usize) -> Tree {
        assert!(len >= 1);
        let mut t = Tree::leaf();
        for _ in 1..len {
            t = Tree::node(vec![t]);
        }
        t
    }

    /// Complete tree of the given depth: all final nodes at that depth,
    /// every internal node ramified.
    pub fn complete(depth: u32) -> Tree {
        if depth == 0 {
            Tree::leaf()
        } else {
            let c = Tree::complete(depth - 1);
            Tree::node(vec![c.clone(), c])
        }
    }

    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Number of final nodes (leaves).
    pub fn final_count(&self) -> usize {
        if self.children.is_empty() {
            1
        } else {
            self.children.iter().map(|c| c.final_count()).sum()
        }
    }

    pub fn is_simple(&self) -> bool {
        match self.children.as_slice() {
            [] => true,
            [c] => c.is_simple(),
            _ => false,
        }
    }

    /// Depth k if this is a complete tree of depth k.
    pub fn complete_depth(&self) -> Option<u32> {
        match self.children.as_slice() {
            [] => Some(0),
            [c1, c2] => {
                let d1 = c1.complete_depth()?;
                let d2 = c2.complete_depth()?;
                (d1 == d2).then_some(d1 + 1)
            }
            _ => None,
        }
    }

    /// Bracket encoding, e.g. "(()(()))": a node renders as "(" followed by
    /// its children's encodings in canonical order and ")".
    pub fn encode(&self) -> String {
        let mut s = String::with_capacity(2 * self.size);
        self.encode_into(&mut s);
        s
    }

    fn encode_into(&self, s: &mut String) {
        s.push('(');
        for c in &self.children {
            c.encode_into(s);
        }
        s.push(')');
    }

    /// Parse a bracket encoding (whitespace-free); canonicalizes.
    pub fn decode(s: &str) -> Result<Tree, String> {
        let bytes = s.as_bytes();
        let (t, rest) = Self::decode_at(bytes, 0)?;
        if rest != bytes.len() {
            return Err(format!("trailing input at byte {rest}"));
        }
        Ok(t)
    }

    fn decode_at(bytes: &[u8], pos: usize) -> Result<(Tree, usize), String> {
        if bytes.get(pos) != Some(&b'(') {
            return Err(format!("expected '(' at byte {pos}"));
        }
        let mut children = Vec::new();
        let mut p = pos + 1;
        while bytes.get(p) == Some(&b'(') {
            let (c, np) = Self::decode_at(bytes, p)?;
            children.push(c);
            p = np;
        }
        if bytes.get(p) != Some(&b')') {
            return Err(format!("expected ')' at byte {p}"));
        }
        if children.len() > 2 {
            return Err(format!("node with {} children at byte {pos}", children.len()));
        }
        Ok((Tree::node(children), p + 1))
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.children.cmp(&other.children))
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

/// Unordered multiset of trees, stored sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Forest {
    trees: Vec<Tree>,
}

impl Forest {
    pub fn new(mut trees: Vec<Tree>) -> Forest {
        assert!(!trees.is_empty(), "a forest needs at least one tree");
        trees.sort();
        Forest { trees }
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    /// Total node count i.
    pub fn node_count(&self) -> usize {
        self.trees.iter().map(|t| t.size()).sum()
    }

    /// Tree count j.
    pub fn tree_count(&self) -> usize {
        self.trees.len()
    }

    /// Total final-node count l.
    pub fn final_count(&self) -> usize {
        self.trees.iter().map(|t| t.final_count()).sum()
    }

    /// Depth d (maximum over trees).
    pub fn depth(&self) -> u32 {
        self.trees.iter().map(|t| t.depth()).max().unwrap_or(0)
    }

    /// Distinct trees with multiplicities, in canonical order.
    pub fn grouped(&self) -> Vec<(&Tree, usize)> {
        let mut out: Vec<(&Tree, usize)> = Vec::new();
        for t in &self.trees {
            match out.last_mut() {
                Some((u, c)) if *u == t => *c += 1,
                _ => out.push((t, 1)),
            }
        }
        out
    }

    /// Space-separated bracket encodings in canonical order.
    pub fn encode(&self) -> String {
        self.trees.iter().map(|t| t.encode()).collect::<Vec<_>>().join(" ")
    }

    pub fn decode(s: &str) -> Result<Forest, String> {
        let trees: Result<Vec<Tree>, String> =
            s.split_whitespace().map(Tree::decode).collect();
        let trees = trees?;
        if trees.is_empty() {
            return Err("empty forest".into());
        }
        Ok(Forest::new(trees))
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

/// All trees with `i` nodes, one per isomorphism class, canonically sorted.
pub fn enumerate_trees(i: usize) -> Result<Vec<Tree>, crate::ForestError> {
    if i == 0 {
        return Err(crate::ForestError::Domain("trees need at least one node".into()));
    }
    let mut memo: HashMap<usize, Vec<Tree>> = HashMap::new();
    Ok(trees_memo(i, &mut memo))
}

fn trees_memo(i: usize, memo: &mut HashMap<usize, Vec<Tree>>) -> Vec<Tree> {
    if let Some(v) = memo.get(&i) {
        return v.clone();
    }
    let mut out = Vec::new();
    if i == 1 {
        out.push(Tree::leaf());
    } else {
        // One child subtree.
        for t in trees_memo(i - 1, memo) {
            out.push(Tree::node(vec![t]));
        }
        // Two child subtrees, unordered.
        for s in 1..=(i - 1) / 2 {
            let small = trees_memo(s, memo);
            let large = trees_memo(i - 1 - s, memo);
            for (idx1, t1) in small.iter().enumerate() {
                let start = if s == i - 1 - s { idx1 } else { 0 };
                for t2 in large.iter().skip(start) {
                    out.push(Tree::node(vec![t1.clone(), t2.clone()]));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    memo.insert(i, out.clone());
    out
}

/// All forests with `i` total nodes and exactly `j` trees, one per
/// isomorphism class; empty when infeasible.
pub fn enumerate_forests(i: usize, j: usize) -> Vec<Forest> {
    if j == 0 || j > i {
        return Vec::new();
    }
    // Pool of candidate trees up to the largest possible size, in the
    // canonical total order; pick non-decreasing sequences.
    let max_size = i - (j - 1);
    let mut pool: Vec<Tree> = Vec::new();
    let mut memo = HashMap::new();
    for s in 1..=max_size {
        pool.extend(trees_memo(s, &mut memo));
    }
    pool.sort();
    let mut out = Vec::new();
    let mut chosen: Vec<Tree> = Vec::new();
    pick(&pool, 0, i, j, &mut chosen, &mut out);
    out
}

fn pick(
    pool: &[Tree],
    min_idx: usize,
    nodes_left: usize,
    trees_left: usize,
    chosen: &mut Vec<Tree>,
    out: &mut Vec<Forest>,
) {
    if trees_left == 0 {
        if nodes_left == 0 {
            out.push(Forest::new(chosen.clone()));
        }
        return;
    }
    for (idx, t) in pool.iter().enumerate().skip(min_idx) {
        let s = t.size();
        if s > nodes_left {
            break; // pool is sorted by size first
        }
        // Remaining trees need at least one node each.
        if nodes_left - s < trees_left - 1 {
            continue;
        }
        chosen.push(t.clone());
        pick(pool, idx, nodes_left - s, trees_left - 1, chosen, out);
        chosen.pop();
    }
}
