//! Property tests for the dihedral group relations, insertion/removal
//! inverses, and the conjugation identities behind the insertion lemmas.

use proptest::prelude::*;

use baxter_core::insertion::{
    insert, insert_boundary, insert_largest, insert_smallest, remove, InsertionKind, RemoveKind,
    Side,
};
use baxter_core::pattern::is_baxter;
use baxter_core::perm::{Permutation, Symmetry};

/// Random permutation of length 0..=max via a Lehmer-style code.
fn perm_strategy(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<u64>(), n).prop_map(move |code| {
            let mut pool: Vec<u32> = (1..=n as u32).collect();
            let word = code
                .into_iter()
                .map(|c| pool.remove((c % pool.len().max(1) as u64) as usize))
                .collect();
            Permutation::from_word(word).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn quarter_turn_has_order_four(w in perm_strategy(10)) {
        let mut v = w.clone();
        for _ in 0..4 {
            v = v.apply_symmetry(Symmetry::Rotate90Cw);
        }
        prop_assert_eq!(v, w);
    }

    #[test]
    fn quarter_turn_squares_to_half_turn(w in perm_strategy(10)) {
        let twice = w
            .apply_symmetry(Symmetry::Rotate90Cw)
            .apply_symmetry(Symmetry::Rotate90Cw);
        prop_assert_eq!(&twice, &w.apply_symmetry(Symmetry::Rotate180));
        prop_assert_eq!(&twice, &w.reverse().complement());
    }

    #[test]
    fn quarter_turn_and_its_inverse_share_fixed_points(w in perm_strategy(10)) {
        prop_assert_eq!(
            w.is_fixed(Symmetry::Rotate90Cw),
            w.is_fixed(Symmetry::Rotate90Ccw)
        );
    }

    #[test]
    fn quarter_fixed_lengths_are_4m_or_4m_plus_1(w in perm_strategy(12)) {
        if w.is_fixed(Symmetry::Rotate90Cw) && !w.is_empty() {
            prop_assert!(w.len() % 4 == 0 || w.len() % 4 == 1);
        }
    }

    #[test]
    fn remove_undoes_every_insertion(w in perm_strategy(8), pick in any::<u64>()) {
        let n = w.len();
        let g = (pick % (n as u64 + 1)) as usize;
        let label = g as u32 + 1;
        for (kind, undo) in [
            (InsertionKind::Largest(g), RemoveKind::Largest),
            (InsertionKind::Smallest(g), RemoveKind::Smallest),
            (InsertionKind::Front(label), RemoveKind::Front),
            (InsertionKind::Back(label), RemoveKind::Back),
        ] {
            let v = insert(&w, kind).unwrap();
            prop_assert_eq!(&remove(&v, undo).unwrap(), &w);
        }
    }

    /// Inserting 1 into gap g is the half-turn conjugate of inserting the
    /// largest label into gap n-g.
    #[test]
    fn smallest_insertion_is_conjugate_of_largest(w in perm_strategy(8), pick in any::<u64>()) {
        let n = w.len();
        let g = (pick % (n as u64 + 1)) as usize;
        let lhs = insert_smallest(&w, g).unwrap();
        let rhs = insert_largest(&w.apply_symmetry(Symmetry::Rotate180), n - g)
            .unwrap()
            .apply_symmetry(Symmetry::Rotate180);
        prop_assert_eq!(lhs, rhs);
    }

    /// Appending j equals conjugating a largest-label insertion by inverse.
    #[test]
    fn back_insertion_is_inverse_conjugate_of_largest(w in perm_strategy(8), pick in any::<u64>()) {
        let n = w.len();
        let j = (pick % (n as u64 + 1)) as u32 + 1;
        let lhs = insert_boundary(&w, Side::Back, j).unwrap();
        let rhs = insert_largest(&w.inverse(), j as usize - 1).unwrap().inverse();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn front_insertion_is_reverse_of_back_on_reverse(w in perm_strategy(8), pick in any::<u64>()) {
        let n = w.len();
        let j = (pick % (n as u64 + 1)) as u32 + 1;
        let lhs = insert_boundary(&w, Side::Front, j).unwrap();
        let rhs = insert_boundary(&w.reverse(), Side::Back, j).unwrap().reverse();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn baxter_is_symmetry_invariant(w in perm_strategy(8)) {
        let b = is_baxter(&w);
        prop_assert_eq!(is_baxter(&w.reverse()), b);
        prop_assert_eq!(is_baxter(&w.complement()), b);
        prop_assert_eq!(is_baxter(&w.inverse()), b);
    }

    #[test]
    fn display_parse_round_trip(w in perm_strategy(12)) {
        prop_assert_eq!(w.to_string().parse::<Permutation>().unwrap(), w);
    }
}
