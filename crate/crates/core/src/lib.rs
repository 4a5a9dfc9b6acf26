//! Baxter permutations and their generating trees: vincular-pattern
//! matching, the dihedral action on permutation matrices, the admissible
//! insertion rules, succession-rule expansion, and exact enumeration of
//! the rotation-fixed subfamilies.

pub mod enumerate;
pub mod error;
pub mod gentree;
pub mod insertion;
pub mod pattern;
pub mod perm;

pub use enumerate::{
    baxter_count, brute_count, catalan, fpf_involution_count, quarter_turn_count, Base,
    CountMethod, CountRow, CountTable, FamilySpec,
};
pub use error::{Error, Result};
pub use gentree::{
    check_isomorphism, expand_rule, explicit_tree, rule_children, GenTree, Rule, RuleLabel,
    TreeFamily,
};
pub use insertion::{
    admissible_boundary_labels, admissible_largest_gaps, admissible_smallest_gaps,
    children_oracle, half_turn_children, insert_boundary, insert_largest, insert_smallest,
    quarter_turn_children, quarter_turn_parent, remove, Family, Gap, InsertionKind, RemoveKind,
    Side,
};
pub use pattern::{is_baxter, vincular_occurrences, VincularPattern};
pub use perm::{parse_perm, PermStats, Permutation, Symmetry};
