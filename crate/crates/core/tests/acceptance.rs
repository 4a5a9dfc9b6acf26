//! Acceptance suite: one test per criterion, each printing a pass line.
//! Expected values quoted from figures are frozen verbatim; derived values
//! were produced by the brute-force oracles and then frozen.

use std::collections::BTreeSet;

use baxter_core::enumerate::{
    brute_count_with_limit, rot90_fixed_perms, stats_table, FamilySpec,
};
use baxter_core::gentree::{check_isomorphism, expand_rule, explicit_tree, Rule, TreeFamily};
use baxter_core::insertion::{
    admissible_boundary_labels, admissible_largest_gaps, admissible_smallest_gaps,
    insert_boundary, insert_largest, insert_smallest, Side,
};
use baxter_core::pattern::is_baxter;
use baxter_core::perm::{parse_perm, Permutation, Symmetry};
use baxter_core::{baxter_count, brute_count, catalan, fpf_involution_count, quarter_turn_count};
use num_bigint::BigUint;
use num_traits::{One, Zero};

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn perm_set(items: &[&str]) -> BTreeSet<Permutation> {
    items.iter().map(|s| parse_perm(s).unwrap()).collect()
}

#[test]
fn criterion_01_b4_is_22_by_formula_and_brute_force() {
    assert_eq!(baxter_count(4).unwrap(), big(22));
    assert_eq!(brute_count(4, FamilySpec::baxter()).unwrap(), big(22));
    println!("PASS criterion 1: B(4) = 22 by formula and brute force");
}

#[test]
fn criterion_02_formula_matches_brute_force_through_n8() {
    let golden = [1u64, 2, 6, 22, 92, 422, 2074, 10754];
    for (i, &expected) in golden.iter().enumerate() {
        let n = i + 1;
        assert_eq!(baxter_count(n).unwrap(), big(expected), "formula at n = {n}");
        assert_eq!(
            brute_count(n, FamilySpec::baxter()).unwrap(),
            big(expected),
            "brute at n = {n}"
        );
    }
    println!("PASS criterion 2: baxter_count = brute_count = goldens for n = 1..8");
}

#[test]
fn criterion_03_quarter_turn_theorem_three_ways() {
    let expected = [big(1), big(2), big(8), big(40)];
    let tree = explicit_tree(TreeFamily::Quarter, 3).unwrap();
    for (m, want) in expected.iter().enumerate() {
        let n = 4 * m + 1;
        assert_eq!(&quarter_turn_count(n).unwrap(), want, "formula at n = {n}");
        assert_eq!(&big(tree.level_sizes()[m] as u64), want, "tree at n = {n}");
        let brute = rot90_fixed_perms(n).into_iter().filter(is_baxter).count();
        assert_eq!(&big(brute as u64), want, "orbit brute force at n = {n}");
    }
    let level1: BTreeSet<Permutation> = tree.level_perms(1).into_iter().collect();
    assert_eq!(level1, perm_set(&["25314", "41352"]));
    let level2: BTreeSet<Permutation> = tree.level_perms(2).into_iter().collect();
    assert_eq!(
        level2,
        perm_set(&[
            "294753618",
            "349852167",
            "438951276",
            "814753692",
            "296357418",
            "672159834",
            "761258943",
            "816357492",
        ])
    );
    println!("PASS criterion 3: quarter-turn counts 1,2,8,40 by formula, tree, and brute force; node sets match the figures");
}

#[test]
fn criterion_04_quarter_turn_count_zero_off_residue() {
    for n in 1..=16 {
        if n % 4 != 1 {
            assert!(quarter_turn_count(n).unwrap().is_zero(), "formula at n = {n}");
        }
    }
    // independent confirmation: full S_n scan for n <= 9
    for n in (1..=9).filter(|n| n % 4 != 1) {
        let count = Permutation::all(n)
            .filter(|w| w.is_fixed(Symmetry::Rotate90Cw) && is_baxter(w))
            .count();
        assert_eq!(count, 0, "full scan at n = {n}");
    }
    println!("PASS criterion 4: quarter-turn count is 0 for n % 4 != 1 (formula to 16, full scan to 9)");
}

#[test]
fn criterion_05_half_turn_trees_match_figures_and_brute_counts() {
    let even = explicit_tree(TreeFamily::HalfEven, 5).unwrap();
    let odd = explicit_tree(TreeFamily::HalfOdd, 4).unwrap();
    let level = |t: &baxter_core::GenTree, r: usize| -> BTreeSet<Permutation> {
        t.level_perms(r).into_iter().collect()
    };
    assert_eq!(level(&even, 1), perm_set(&["12", "21"]));
    assert_eq!(level(&odd, 1), perm_set(&["123", "321"]));
    assert_eq!(
        level(&even, 2),
        perm_set(&["4321", "3412", "1324", "4231", "2143", "1234"])
    );
    assert_eq!(
        level(&odd, 2),
        perm_set(&[
            "54321", "45312", "41352", "14325", "52341", "25314", "21354", "12345",
        ])
    );
    for n in 1..=10usize {
        let size = if n % 2 == 0 {
            even.level_sizes()[n / 2]
        } else {
            odd.level_sizes()[(n - 1) / 2]
        };
        let brute =
            brute_count_with_limit(n, FamilySpec::baxter_fixed(Symmetry::Rotate180), 10, 1)
                .unwrap();
        assert_eq!(big(size as u64), brute, "n = {n}");
    }
    println!("PASS criterion 5: half-turn tree levels match the figures (n = 2..5) and brute counts (n <= 10)");
}

#[test]
fn criterion_06_admissibility_rules_equal_brute_filters() {
    let mut checked = 0usize;
    for n in 0..=8 {
        for w in Permutation::all(n).filter(is_baxter) {
            let brute_largest: Vec<usize> = (0..=n)
                .filter(|&g| is_baxter(&insert_largest(&w, g).unwrap()))
                .collect();
            assert_eq!(admissible_largest_gaps(&w).unwrap(), brute_largest, "w = {w}");
            let brute_smallest: Vec<usize> = (0..=n)
                .filter(|&g| is_baxter(&insert_smallest(&w, g).unwrap()))
                .collect();
            assert_eq!(admissible_smallest_gaps(&w).unwrap(), brute_smallest, "w = {w}");
            for side in [Side::Front, Side::Back] {
                let brute_labels: Vec<u32> = (1..=n as u32 + 1)
                    .filter(|&j| is_baxter(&insert_boundary(&w, side, j).unwrap()))
                    .collect();
                assert_eq!(
                    admissible_boundary_labels(&w, side).unwrap(),
                    brute_labels,
                    "w = {w}, side = {side:?}"
                );
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 1 + 2 + 6 + 22 + 92 + 422 + 2074 + 10754);
    println!("PASS criterion 6: admissibility rules equal brute filters for all {checked} Baxter permutations with n <= 8");
}

#[test]
fn criterion_07_explicit_trees_are_isomorphic_to_their_rules() {
    for (family, rule, depth) in [
        (TreeFamily::Baxter, Rule::Baxter, 6),
        (TreeFamily::HalfOdd, Rule::HalfOdd, 4),
        (TreeFamily::HalfEven, Rule::HalfEven, 4),
        (TreeFamily::Quarter, Rule::Quarter, 3),
    ] {
        let report = check_isomorphism(family, rule, depth).unwrap();
        assert!(
            report.is_clean(),
            "{family} vs {rule}: {} mismatches, first witness path {:?}",
            report.mismatches.len(),
            report.mismatches.first().map(|m| &m.path)
        );
    }
    println!("PASS criterion 7: explicit trees match their succession rules (baxter depth 6, half n <= 9, quarter n <= 13)");
}

#[test]
fn criterion_08_descent_statistics_concentrate_on_the_diagonal() {
    for n in 1..=8 {
        let table = stats_table(n, FamilySpec::baxter(), 10).unwrap();
        for (&(d, id), &count) in &table {
            assert!(d == id || count == 0, "off-diagonal mass at n = {n}: ({d},{id})");
        }
    }
    println!("PASS criterion 8: descents = inverse descents across all Baxter permutations with n <= 8");
}

#[test]
fn criterion_09_fpf_involution_formula() {
    // 1, 3, 12 stated; 56 frozen from the brute oracle
    let golden = [1u64, 3, 12, 56];
    for (i, &expected) in golden.iter().enumerate() {
        let n = i + 1;
        assert_eq!(fpf_involution_count(n).unwrap(), big(expected), "formula at n = {n}");
        let brute =
            brute_count_with_limit(2 * n, FamilySpec::fpf_involution_baxter(), 10, 1).unwrap();
        assert_eq!(brute, big(expected), "brute at n = {n}");
    }
    for n in 1..=200 {
        fpf_involution_count(n).expect("division must be exact");
        baxter_count(n).expect("division must be exact");
    }
    println!("PASS criterion 9: fpf self-inverse counts match brute force (n = 1..4); closed-form divisions exact to n = 200");
}

#[test]
fn criterion_10_doubled_catalan_expansion() {
    let sizes = expand_rule(Rule::Quarter, 30);
    for (m, size) in sizes.iter().enumerate() {
        assert_eq!(
            size,
            &((BigUint::one() << m) * catalan(m as u64)),
            "rank {m}"
        );
    }
    println!("PASS criterion 10: expand_rule(quarter, 30) equals 2^m * C_m exactly");
}
