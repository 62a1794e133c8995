//! Rooted binary trees and forests with weights.
//!
//! A tree is rooted with every node having at most two (unordered)
//! children; a forest is an unordered multiset of trees. Weights are
//! node functions valued in Z/2^depth subject to the child, ramification
//! and root rules; three groups act on them (the per-tree shift group, the
//! forest automorphism group, and the Galois group of the 2-power
//! cyclotomic tower) and their orbits label irreducible components.

mod contraction;
mod jordan;
mod orbits;
mod shape;
mod tree;
mod weights;

pub use contraction::minimal_contraction;
pub use jordan::{jordan_partition, jordan_preimage, jordan_preimage_trees, part_groupings};
pub use orbits::{galois_orbit_and_field, weight_orbits, FieldLabel, WeightOrbits};
pub use shape::ForestShape;
pub use tree::{enumerate_forests, enumerate_trees, Forest, Tree};
pub use weights::{eliminate_root, enumerate_weights, Weight};

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForestError {
    #[error("domain error: {0}")]
    Domain(String),
}

/// Wedderburn-Etherington numbers a(1), a(2), ... by the classical
/// recurrence; a(n) counts ramification types with n final nodes and
/// a(i+1) counts trees with i nodes. Used as the census oracle.
pub fn wedderburn_etherington(upto: usize) -> Vec<BigInt> {
    let mut a: Vec<BigInt> = vec![BigInt::from(0); upto + 1];
    if upto >= 1 {
        a[1] = BigInt::from(1);
    }
    for n in 2..=upto {
        let mut acc = BigInt::from(0);
        if n % 2 == 1 {
            for i in 1..=(n - 1) / 2 {
                acc += &a[i] * &a[n - i];
            }
        } else {
            for i in 1..=(n - 2) / 2 {
                acc += &a[i] * &a[n - i];
            }
            let h = &a[n / 2];
            acc += h * (h + BigInt::from(1)) / BigInt::from(2);
        }
        a[n] = acc;
    }
    a.remove(0);
    a
}

/// Order of the automorphism group of a forest: the product over distinct
/// constituent trees T of |Aut(T)|^c * c! where c is the multiplicity, and
/// per tree the iterated wreath recursion.
pub fn aut_order(forest: &Forest) -> BigInt {
    fn tree_aut(t: &Tree) -> BigInt {
        match t.children() {
            [] => BigInt::from(1),
            [c] => tree_aut(c),
            [c1, c2] => {
                if c1 == c2 {
                    BigInt::from(2) * tree_aut(c1) * tree_aut(c2)
                } else {
                    tree_aut(c1) * tree_aut(c2)
                }
            }
            _ => unreachable!("binary trees have at most two children"),
        }
    }
    let mut acc = BigInt::from(1);
    for (tree, count) in forest.grouped() {
        let a = tree_aut(tree);
        for _ in 0..count {
            acc *= &a;
        }
        acc *= atlas_arith::factorial(count as u64);
    }
    acc
}
