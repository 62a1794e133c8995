//! The partition of a forest and the inverse construction.
//!
//! The partition is read off by repeatedly trimming the shortest final
//! branches: each round of trimming by h contributes one part per final
//! ramification node that owned a branch of length h, and the surviving
//! simple tree contributes the largest part. The inverse construction
//! grows trees stage by stage, attaching new branches at chosen
//! non-ramification nodes and extending every final branch.

use crate::tree::{Forest, Tree};
use atlas_arith::Partition;
use std::collections::BTreeSet;

/// The partition of a forest: union over its trees of the per-tree
/// trimming partitions.
pub fn jordan_partition(forest: &Forest) -> Partition {
    let mut parts: Vec<u32> = Vec::new();
    for t in forest.trees() {
        parts.extend(tree_partition(t));
    }
    Partition::new(parts)
}

fn tree_partition(tree: &Tree) -> Vec<u32> {
    let mut parts = Vec::new();
    let mut cur = tree.clone();
    let mut cum = 0u32;
    loop {
        if cur.is_simple() {
            parts.push(cum + cur.size() as u32);
            return parts;
        }
        let (h, a) = shortest_final_branch(&cur);
        for _ in 0..a {
            parts.push(cum + h);
        }
        cur = trim(&cur, h).expect("non-simple tree has final branches");
        cum += h;
    }
}

/// Minimum final-branch length h and the number of final ramification
/// nodes owning a branch of that length.
fn shortest_final_branch(tree: &Tree) -> (u32, usize) {
    let mut lengths: Vec<u32> = Vec::new();
    collect_branches(tree, &mut lengths);
    let h = *lengths.iter().min().expect("ramified tree has final branches");
    let mut count = 0usize;
    count_owners(tree, h, &mut count);
    (h, count)
}

fn collect_branches(t: &Tree, lengths: &mut Vec<u32>) {
    if t.children().len() == 2 {
        for c in t.children() {
            if c.is_simple() {
                lengths.push(c.size() as u32);
            }
        }
    }
    for c in t.children() {
        collect_branches(c, lengths);
    }
}

fn count_owners(t: &Tree, h: u32, count: &mut usize) {
    if t.children().len() == 2
        && t.children().iter().any(|c| c.is_simple() && c.size() as u32 == h)
    {
        *count += 1;
    }
    for c in t.children() {
        count_owners(c, h, count);
    }
}

/// Cut h nodes from the end of every final branch (every simple child of a
/// ramification node). Branches of length exactly h disappear.
fn trim(t: &Tree, h: u32) -> Option<Tree> {
    if t.children().len() == 2 {
        let mut kids = Vec::new();
        for c in t.children() {
            if c.is_simple() {
                let len = c.size() as u32;
                debug_assert!(len >= h);
                if len > h {
                    kids.push(Tree::chain((len - h) as usize));
                }
            } else {
                kids.push(trim(c, h).expect("non-simple child survives trimming"));
            }
        }
        Some(Tree::node(kids))
    } else if let [c] = t.children() {
        Some(Tree::node(vec![trim(c, h)?]))
    } else {
        // Bare leaf only occurs below ramification nodes, handled above.
        None
    }
}

/// All groupings of a partition's parts into unordered blocks, each block
/// itself a partition; isomorphic groupings are identified.
pub fn part_groupings(sigma: &Partition) -> Vec<Vec<Partition>> {
    let parts = sigma.parts();
    let mut seen: BTreeSet<Vec<Partition>> = BTreeSet::new();
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    go(parts, 0, &mut blocks, &mut seen);
    seen.into_iter().collect()
}

fn go(
    parts: &[u32],
    idx: usize,
    blocks: &mut Vec<Vec<u32>>,
    seen: &mut BTreeSet<Vec<Partition>>,
) {
    if idx == parts.len() {
        let mut key: Vec<Partition> =
            blocks.iter().map(|b| Partition::new(b.clone())).collect();
        key.sort();
        seen.insert(key);
        return;
    }
    for b in 0..blocks.len() {
        blocks[b].push(parts[idx]);
        go(parts, idx + 1, blocks, seen);
        blocks[b].pop();
    }
    blocks.push(vec![parts[idx]]);
    go(parts, idx + 1, blocks, seen);
    blocks.pop();
}

/// All trees with the given partition, via the stage construction:
/// distinct part values c_1 > ... > c_k with multiplicities a_1, ..., a_k
/// require a_1 = 1; stage gamma >= 2 chooses a_gamma non-ramification
/// nodes for new branches and extends every final node, all by chains of
/// length c_gamma - c_{gamma+1}.
pub fn jordan_preimage_trees(sigma: &Partition) -> Vec<Tree> {
    let mut runs: Vec<(u32, usize)> = Vec::new();
    for &p in sigma.parts() {
        match runs.last_mut() {
            Some((v, c)) if *v == p => *c += 1,
            _ => runs.push((p, 1)),
        }
    }
    if runs.is_empty() || runs[0].1 != 1 {
        return Vec::new();
    }
    let k = runs.len();
    let next_value = |g: usize| if g + 1 < k { runs[g + 1].0 } else { 0 };
    // Stage 1: a chain of c_1 - c_2 nodes.
    let first_len = (runs[0].0 - next_value(0)) as usize;
    let mut current: Vec<Builder> = vec![Builder::chain(first_len)];
    for g in 1..k {
        let (_, a) = runs[g];
        let len = (runs[g].0 - next_value(g)) as usize;
        let mut next: Vec<Builder> = Vec::new();
        for b in &current {
            let eligible: Vec<usize> = b.non_ramification_nodes();
            if eligible.len() < a {
                continue;
            }
            for subset in subsets(&eligible, a) {
                next.push(b.extend_stage(&subset, len));
            }
        }
        current = next;
        if current.is_empty() {
            return Vec::new();
        }
    }
    let mut out: BTreeSet<Tree> = BTreeSet::new();
    for b in current {
        let t = b.to_tree();
        debug_assert_eq!(&Partition::new(tree_partition(&t)), sigma);
        out.insert(t);
    }
    out.into_iter().collect()
}

/// All forests with the given partition: group the parts, take a preimage
/// tree per block, and dedup up to isomorphism.
pub fn jordan_preimage(sigma: &Partition) -> Vec<Forest> {
    let mut out: BTreeSet<Forest> = BTreeSet::new();
    for grouping in part_groupings(sigma) {
        let per_block: Vec<Vec<Tree>> =
            grouping.iter().map(jordan_preimage_trees).collect();
        if per_block.iter().any(|v| v.is_empty()) {
            continue;
        }
        let mut chosen: Vec<Tree> = Vec::new();
        product(&per_block, 0, &mut chosen, &mut out);
    }
    out.into_iter().collect()
}

fn product(
    options: &[Vec<Tree>],
    idx: usize,
    chosen: &mut Vec<Tree>,
    out: &mut BTreeSet<Forest>,
) {
    if idx == options.len() {
        out.insert(Forest::new(chosen.clone()));
        return;
    }
    for t in &options[idx] {
        chosen.push(t.clone());
        product(options, idx + 1, chosen, out);
        chosen.pop();
    }
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(items: &[usize], k: usize, start: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for i in start..items.len() {
            prefix.push(items[i]);
            rec(items, k, i + 1, prefix, out);
            prefix.pop();
        }
    }
    rec(items, k, 0, &mut prefix, &mut out);
    out
}

/// Mutable arena tree used only during the stage construction.
#[derive(Clone)]
struct Builder {
    children: Vec<Vec<usize>>,
}

impl Builder {
    fn chain(len: usize) -> Builder {
        assert!(len >= 1);
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); len];
        for v in 0..len - 1 {
            children[v].push(v + 1);
        }
        Builder { children }
    }

    fn non_ramification_nodes(&self) -> Vec<usize> {
        (0..self.children.len()).filter(|&v| self.children[v].len() < 2).collect()
    }

    fn leaves(&self) -> Vec<usize> {
        (0..self.children.len()).filter(|&v| self.children[v].is_empty()).collect()
    }

    fn attach_chain(&mut self, at: usize, len: usize) {
        let mut prev = at;
        for _ in 0..len {
            let v = self.children.len();
            self.children.push(Vec::new());
            self.children[prev].push(v);
            prev = v;
        }
    }

    /// One construction stage: extend every current leaf by a chain and
    /// attach one new chain at each chosen node.
    fn extend_stage(&self, chosen: &[usize], len: usize) -> Builder {
        let mut b = self.clone();
        for leaf in self.leaves() {
            b.attach_chain(leaf, len);
        }
        for &v in chosen {
            b.attach_chain(v, len);
        }
        b
    }

    fn to_tree(&self) -> Tree {
        fn build(b: &Builder, v: usize) -> Tree {
            Tree::node(b.children[v].iter().map(|&c| build(b, c)).collect())
        }
        build(self, 0)
    }
}
