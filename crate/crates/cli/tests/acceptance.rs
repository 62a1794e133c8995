//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Run with
//!   cargo test -p atlas-cli --test acceptance -- --nocapture
//! for the per-criterion report.

use atlas_arith::{CycNum, Integer, Partition};
use atlas_cli::enumerate::{census_i6, diff_against_reference};
use atlas_cli::tables::reference_rows;
use atlas_components::*;
use atlas_forests::*;
use atlas_matrices::*;
use num_traits::Zero;

fn pass(criterion: &str, detail: &str) {
    println!("[pass] {criterion}: {detail}");
}

fn grid(mat: &atlas_arith::Matrix<atlas_arith::ZPoly>) -> Vec<Vec<String>> {
    (0..mat.nrows())
        .map(|i| (0..mat.ncols()).map(|j| mat[(i, j)].to_string()).collect())
        .collect()
}

#[test]
fn criterion_01_matrix_fixtures() {
    let m6 = [
        ["a1", "a3", "a5", "0", "0"],
        ["a0", "a2", "a4", "a6", "0"],
        ["0", "a1", "a3", "a5", "0"],
        ["0", "a0", "a2", "a4", "a6"],
        ["0", "0", "a1", "a3", "a5"],
    ];
    let got = grid(&hurwitz_matrix(6).unwrap());
    for (i, row) in m6.iter().enumerate() {
        assert_eq!(got[i], *row, "degree-6 row {i}");
    }
    let m7 = [
        ["a1", "a3", "a5", "a7", "0", "0"],
        ["a0", "a2", "a4", "a6", "0", "0"],
        ["0", "a1", "a3", "a5", "a7", "0"],
        ["0", "a0", "a2", "a4", "a6", "0"],
        ["0", "0", "a1", "a3", "a5", "a7"],
        ["0", "0", "a0", "a2", "a4", "a6"],
    ];
    let got = grid(&hurwitz_matrix(7).unwrap());
    for (i, row) in m7.iter().enumerate() {
        assert_eq!(got[i], *row, "degree-7 row {i}");
    }
    let m8 = [
        ["a1", "a3", "a5", "a7", "0", "0", "0"],
        ["a0", "a2", "a4", "a6", "a8", "0", "0"],
        ["0", "a1", "a3", "a5", "a7", "0", "0"],
        ["0", "a0", "a2", "a4", "a6", "a8", "0"],
        ["0", "0", "a1", "a3", "a5", "a7", "0"],
        ["0", "0", "a0", "a2", "a4", "a6", "a8"],
        ["0", "0", "0", "a1", "a3", "a5", "a7"],
    ];
    let got = grid(&hurwitz_matrix(8).unwrap());
    for (i, row) in m8.iter().enumerate() {
        assert_eq!(got[i], *row, "degree-8 row {i}");
    }
    let odd4 = [
        ["b0", "b2", "b4", "0", "b1", "b3", "0", "0"],
        ["0", "b1", "b3", "0", "b0", "b2", "b4", "0"],
        ["0", "b0", "b2", "b4", "0", "b1", "b3", "0"],
        ["0", "0", "b1", "b3", "0", "b0", "b2", "b4"],
        ["mu", "0", "0", "0", "-lambda", "0", "0", "0"],
        ["0", "mu", "0", "0", "0", "-lambda", "0", "0"],
        ["0", "0", "mu", "0", "0", "0", "-lambda", "0"],
        ["0", "0", "0", "mu", "0", "0", "0", "-lambda"],
    ];
    let got = grid(&odd_matrix(4).unwrap());
    for (i, row) in odd4.iter().enumerate() {
        assert_eq!(got[i], *row, "odd block row {i}");
    }
    pass("criterion 1", "matrix layouts for degrees 6, 7, 8 and the odd block matrix");
}

#[test]
fn criterion_02_trace_law() {
    for m in 3..=10usize {
        let d = d_system(m).unwrap();
        let vars = hurwitz_vars(m, &[]);
        let mut tr = atlas_arith::ZPoly::zero_over(&vars);
        for idx in 1..m {
            tr = tr + atlas_arith::MPoly::var(&vars, idx);
        }
        let got = d.trace_coefficient().clone();
        assert!(got == tr || got == -tr, "trace law at m = {m}");
    }
    pass("criterion 2", "trace coefficient is +-(a1+...+a_{m-1}) for m = 3..=10, symbolically");
}

#[test]
fn criterion_03_resultant_equivalence() {
    let mut signs = Vec::new();
    for m in 3..=8usize {
        let report = sylvester_resultant_check(m).unwrap();
        assert!(report.equal_up_to_sign, "m = {m}");
        signs.push(report.sign);
    }
    pass(
        "criterion 3",
        &format!("determinant equals the Sylvester resultant up to sign for m=3..=8, signs {signs:?}"),
    );
}

#[test]
fn criterion_04_table_reproduction() {
    // Full agreement for up to five nodes.
    for i in 1..=5usize {
        let mut all = Vec::new();
        for j in 1..=i {
            all.extend(enumerate_components(i, j).unwrap());
        }
        let diff = diff_against_reference(&all, i, None);
        assert!(diff.clean(), "i = {i}: {:?} / {:?} / {:?}", diff.missing, diff.extra, diff.mismatched_fields);
        assert_eq!(diff.matched.len(), reference_rows(i, None).len());
    }
    // Six nodes: all rows match (the tree-count >= 3 rows are flagged as
    // derived in the reference), and the census holds.
    let mut all6 = Vec::new();
    for j in 1..=6usize {
        all6.extend(enumerate_components(6, j).unwrap());
    }
    let diff = diff_against_reference(&all6, 6, None);
    assert!(diff.clean(), "i = 6: {:?} / {:?} / {:?}", diff.missing, diff.extra, diff.mismatched_fields);
    census_i6(&all6).unwrap();
    // The split pair: one forest, two records, conjugate over the level-2
    // field with orbit size 2.
    let pair: Vec<_> = all6.iter().filter(|r| r.galois_orbit == 2).collect();
    assert_eq!(pair.len(), 2);
    assert_eq!(pair[0].field, FieldLabel::Cyclotomic(2));
    assert_eq!(pair[1].field, FieldLabel::Cyclotomic(2));
    assert_eq!(pair[0].forest.encode(), "((())((())))");
    // The printed coefficient vector of the cherry-of-two-chains component.
    let t = Tree::node(vec![Tree::chain(2), Tree::chain(2)]);
    let shape = ForestShape::new(&Forest::new(vec![t]));
    let w = Weight(vec![0, 0, 0, 1, 1]);
    let pv = param_vector(&shape, &w).unwrap();
    let strings: Vec<String> = pv.lambda.iter().map(|p| p.to_string()).collect();
    assert_eq!(
        strings,
        vec![
            "-c1^4",
            "(-1 + zeta2)*c1^3",
            "(1 - zeta2)*c1^3 + (zeta2)*c1^2",
            "(-2*zeta2)*c1^2",
            "(zeta2)*c1^2 + (-1 - zeta2)*c1",
            "(1 + zeta2)*c1",
            "1",
        ]
    );
    pass(
        "criterion 4",
        "tables reproduced for i <= 5 and i = 6 (rows, census, conjugate pair, coefficient fixture)",
    );
}

#[test]
fn criterion_05_balance_identity() {
    for i in 1..=6usize {
        for j in 1..=i {
            let (got, expect) = balance_identity(i, j).unwrap();
            assert_eq!(got, expect, "balance at ({i},{j})");
        }
    }
    let (got, _) = balance_identity(6, 3).unwrap();
    assert_eq!(got, Integer::from(7200));
    pass("criterion 5", "sum of c*mu equals binom(i-1,i-j)*i! for all 1 <= j <= i <= 6 (7200 at (6,3))");
}

#[test]
fn criterion_06_membership() {
    let mut count = 0usize;
    for i in 1..=6usize {
        for j in 1..=i {
            if i == 6 && j == 1 {
                continue;
            }
            for f in enumerate_forests(i, j) {
                let shape = ForestShape::new(&f);
                let orbits = weight_orbits(&shape);
                for rep in &orbits.reps {
                    verify_membership(&shape, rep).unwrap();
                    count += 1;
                }
            }
        }
    }
    pass(
        "criterion 6",
        &format!("exact vanishing of the defining polynomials on all {count} parametrizations (i <= 5 and i = 6, j >= 2)"),
    );
}

#[test]
fn criterion_07_jordan_agreement() {
    let mut count = 0usize;
    for i in 1..=5usize {
        for j in 1..=i {
            for f in enumerate_forests(i, j) {
                let shape = ForestShape::new(&f);
                let orbits = weight_orbits(&shape);
                for rep in &orbits.reps {
                    let p = rank_profile_partition(&shape, rep, 2, 20260808).unwrap();
                    assert_eq!(p, jordan_partition(&f), "forest {f}");
                    count += 1;
                }
            }
        }
    }
    // The 22-node trimming fixture.
    let r1 = Tree::node(vec![Tree::chain(2), Tree::chain(2)]);
    let r2 = Tree::node(vec![Tree::node(vec![r1]), Tree::leaf()]);
    let up = Tree::node(vec![Tree::node(vec![r2])]);
    let r6 = Tree::node(vec![Tree::leaf(), Tree::leaf()]);
    let r5 = Tree::node(vec![Tree::leaf(), Tree::node(vec![r6])]);
    let r4 = Tree::node(vec![Tree::chain(2), Tree::node(vec![r5])]);
    let low = Tree::node(vec![r4]);
    let t = Tree::node(vec![up, low]);
    assert_eq!(
        jordan_partition(&Forest::new(vec![t])),
        Partition::new(vec![8, 7, 2, 2, 1, 1, 1])
    );
    pass(
        "criterion 7",
        &format!("rank profiles match trimming partitions at 2 seeded points for {count} components; 22-node fixture gives 8+7+2+2+1+1+1"),
    );
}

#[test]
fn criterion_08_inverse_jordan_counts() {
    let sigma5 = Partition::new(vec![5, 4, 3, 2, 1]);
    assert_eq!(jordan_preimage_trees(&sigma5).len(), 15);
    let sigma6 = Partition::new(vec![6, 5, 4, 3, 2, 1]);
    assert_eq!(jordan_preimage_trees(&sigma6).len(), 126);
    for (total, part) in [(4u32, 2u32), (6, 3), (6, 2), (5, 1), (4, 1)] {
        let parts: Vec<u32> = std::iter::repeat(part).take((total / part) as usize).collect();
        let forests = jordan_preimage(&Partition::new(parts));
        assert_eq!(forests.len(), 1, "equal parts {part} of {total}");
    }
    pass("criterion 8", "15 preimage trees for 5+4+3+2+1, 126 for 6+...+1, unique forests for equal parts");
}

#[test]
fn criterion_09_tree_census() {
    let a = wedderburn_etherington(11);
    for i in 1..=9usize {
        let n = enumerate_trees(i).unwrap().len();
        assert_eq!(Integer::from(n), a[i].clone(), "trees with {i} nodes");
    }
    pass("criterion 9", "tree counts match the recurrence for i <= 9");
}

#[test]
fn criterion_10_lift_identities() {
    let mut details = Vec::new();
    for m in [4usize, 6, 8, 10] {
        let r = even_interleave_identity(m).unwrap();
        assert!(r.holds, "interleave at m = {m}");
        details.push(format!("interleave m{m} sign {}", r.sign));
    }
    for m in 2..=6usize {
        assert!(even_rank_shift_identity(m, 2, 99).unwrap(), "rank shift at m = {m}");
    }
    details.push("rank shift m<=6".into());
    for alpha in 2..=4usize {
        let r = odd_charpoly_factorization(alpha).unwrap();
        assert!(r.holds, "odd factorization at alpha = {alpha}");
        details.push(format!("odd-factor a{alpha} sign {}", r.sign));
    }
    for alpha in 2..=3usize {
        odd_hsystem_identity(alpha).unwrap();
    }
    details.push("odd coefficient table a<=3 (per-monomial signs)".into());
    for alpha in 2..=5usize {
        let s = hsystem_determinant_factor_identity(alpha).unwrap();
        details.push(format!("det-factor a{alpha} sign {s}"));
    }
    for m in 2..=6usize {
        for i in 1..=2usize.min(m - 1) {
            let r = product_hsystem_identity(m, i).unwrap();
            assert!(r.holds, "product identity at (m,i) = ({m},{i})");
        }
    }
    details.push("product table m<=6 i<=2".into());
    pass("criterion 10", &details.join("; "));
}

#[test]
fn criterion_11_galois_fixtures() {
    let sub = Tree::node(vec![Tree::chain(2), Tree::chain(3)]);
    let t = Tree::node(vec![sub.clone(), sub]);
    let f = Forest::new(vec![t]);
    let shape = ForestShape::new(&f);
    let orbits = weight_orbits(&shape);
    assert_eq!(orbits.count(), 16);
    // Final-node order here: (short, long) per subtree; the reference
    // tuples are (short1, long1, long2, short2).
    let w1 = Weight::from_final_values(&shape, &[3, 1, 6, 0]).unwrap();
    let w2 = Weight::from_final_values(&shape, &[3, 1, 2, 0]).unwrap();
    let (s1, f1) = galois_orbit_and_field(&shape, &orbits, &w1).unwrap();
    assert_eq!((s1, f1), (4, FieldLabel::RealCyclotomic(4)));
    let (s2, f2) = galois_orbit_and_field(&shape, &orbits, &w2).unwrap();
    assert_eq!((s2, f2), (8, FieldLabel::Cyclotomic(4)));
    // Complex conjugation negates final values levelwise.
    let modulus_hi = 16u64;
    let sigma = w1.galois(&shape, modulus_hi - 1).unwrap();
    assert_eq!(sigma.final_values(&shape), vec![5, 15, 2, 0]);
    pass(
        "criterion 11",
        "16 orbit classes; reference weights give orbit 4 over Q(4)+ and orbit 8 over Q(4)",
    );
}

#[test]
fn criterion_aux_rank_examples() {
    // Supporting rank fixtures: generic even-support points of degree 8
    // have rank exactly 3.
    let mut rng = atlas_arith::SplitMix64::new(8);
    for _ in 0..2 {
        let mut a: Vec<CycNum> = Vec::new();
        for idx in 0..=8usize {
            if idx % 2 == 0 {
                a.push(CycNum::from_rational(rng.rational()));
            } else {
                a.push(CycNum::from_int(0));
            }
        }
        let mat = hurwitz_matrix_at(8, &CoeffVector::new(a));
        assert_eq!(mat.rank(), 3);
    }
    // Two-power-support points: rank of powers falls geometrically.
    let ranks = power_ranks(
        &{
            let mut a: Vec<CycNum> = vec![CycNum::from_int(0); 9];
            a[0] = CycNum::from_int(3);
            a[4] = CycNum::from_int(-2);
            a[8] = CycNum::from_int(5);
            a
        },
        3,
    );
    assert_eq!(ranks, vec![3, 1, 1]);
    pass("aux", "rank fixtures at even-support and two-power-support points");
}
