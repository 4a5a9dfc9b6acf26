//! Abstract succession rules, explicit permutation-level generating trees,
//! rank-size expansion, and the isomorphism check between the two views.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::insertion::{
    admissible_largest_gaps, half_turn_children, insert_largest, quarter_turn_children,
};
use crate::perm::Permutation;

pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;

/// A node label of a succession rule: a single maxima count, or the pair
/// `(#left-to-right maxima, #right-to-left maxima)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleLabel {
    Single(u64),
    Pair(u64, u64),
}

impl fmt::Display for RuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleLabel::Single(k) => write!(f, "{k}"),
            RuleLabel::Pair(i, j) => write!(f, "({i},{j})"),
        }
    }
}

/// The five succession rules.
///
/// `Catalan` follows the reference tree for 231-avoiding permutations; its
/// root carries the label of the length-1 permutation, which is 2 under the
/// node-labelled-by-child-count convention of the figures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    Catalan,
    Baxter,
    HalfEven,
    HalfOdd,
    Quarter,
}

impl Rule {
    pub const ALL: [Rule; 5] = [
        Rule::Catalan,
        Rule::Baxter,
        Rule::HalfEven,
        Rule::HalfOdd,
        Rule::Quarter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Catalan => "catalan",
            Rule::Baxter => "baxter",
            Rule::HalfEven => "half_even",
            Rule::HalfOdd => "half_odd",
            Rule::Quarter => "quarter",
        }
    }

    pub fn root_label(self) -> RuleLabel {
        match self {
            Rule::Catalan => RuleLabel::Single(2),
            Rule::Baxter => RuleLabel::Pair(1, 1),
            Rule::HalfEven => RuleLabel::Pair(0, 0),
            Rule::HalfOdd => RuleLabel::Pair(1, 1),
            Rule::Quarter => RuleLabel::Single(1),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "catalan" => Ok(Rule::Catalan),
            "baxter" => Ok(Rule::Baxter),
            "half_even" | "half-even" => Ok(Rule::HalfEven),
            "half_odd" | "half-odd" => Ok(Rule::HalfOdd),
            "quarter" => Ok(Rule::Quarter),
            _ => Err(Error::Parse {
                token: s.to_string(),
                reason: "unknown rule".into(),
            }),
        }
    }
}

/// The ordered child-label multiset of a node label under `rule`.
pub fn rule_children(rule: Rule, label: RuleLabel) -> Result<Vec<RuleLabel>> {
    let malformed = || Error::MalformedLabel {
        rule: rule.to_string(),
        label: label.to_string(),
    };
    match (rule, label) {
        (Rule::Catalan, RuleLabel::Single(k)) => {
            if k < 1 {
                return Err(malformed());
            }
            Ok((2..=k + 1).map(RuleLabel::Single).collect())
        }
        (Rule::Quarter, RuleLabel::Single(k)) => {
            if k < 1 {
                return Err(malformed());
            }
            Ok((2..=k + 1)
                .flat_map(|t| [RuleLabel::Single(t), RuleLabel::Single(t)])
                .collect())
        }
        (Rule::Baxter, RuleLabel::Pair(i, j)) => {
            if i < 1 || j < 1 {
                return Err(malformed());
            }
            let mut kids: Vec<RuleLabel> = (1..=i).map(|t| RuleLabel::Pair(t, j + 1)).collect();
            kids.extend((1..=j).rev().map(|t| RuleLabel::Pair(i + 1, t)));
            Ok(kids)
        }
        (Rule::HalfEven | Rule::HalfOdd, RuleLabel::Pair(i, j)) => {
            // (0,0) is the even root; otherwise both coordinates are >= 1
            if (i == 0) != (j == 0) {
                return Err(malformed());
            }
            let mut kids = vec![RuleLabel::Pair(1, j + 2)];
            kids.extend((2..=i).map(|t| RuleLabel::Pair(t, j + 1)));
            kids.extend((2..=j).rev().map(|t| RuleLabel::Pair(i + 1, t)));
            kids.push(RuleLabel::Pair(i + 2, 1));
            Ok(kids)
        }
        _ => Err(malformed()),
    }
}

/// Rank sizes 0..=depth under `rule`, by dynamic programming over label
/// multiplicities so large depths stay cheap.
pub fn expand_rule(rule: Rule, depth: usize) -> Vec<BigUint> {
    let mut level: BTreeMap<RuleLabel, BigUint> = BTreeMap::new();
    level.insert(rule.root_label(), BigUint::one());
    let mut sizes = Vec::with_capacity(depth + 1);
    for _ in 0..=depth {
        let size = level.values().fold(BigUint::zero(), |acc, c| acc + c);
        sizes.push(size);
        let mut next: BTreeMap<RuleLabel, BigUint> = BTreeMap::new();
        for (label, mult) in &level {
            for child in rule_children(rule, *label).expect("reachable labels are well formed") {
                *next.entry(child).or_insert_with(BigUint::zero) += mult;
            }
        }
        level = next;
    }
    sizes
}

/// The four explicit permutation-level tree families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeFamily {
    Baxter,
    HalfEven,
    HalfOdd,
    Quarter,
}

impl TreeFamily {
    pub fn name(self) -> &'static str {
        match self {
            TreeFamily::Baxter => "baxter",
            TreeFamily::HalfEven => "half_even",
            TreeFamily::HalfOdd => "half_odd",
            TreeFamily::Quarter => "quarter",
        }
    }

    pub fn root(self) -> Permutation {
        match self {
            TreeFamily::HalfEven => Permutation::empty(),
            _ => Permutation::identity(1),
        }
    }

    /// Length difference between consecutive ranks.
    pub fn step(self) -> usize {
        match self {
            TreeFamily::Baxter => 1,
            TreeFamily::HalfEven | TreeFamily::HalfOdd => 2,
            TreeFamily::Quarter => 4,
        }
    }

    pub fn matching_rule(self) -> Rule {
        match self {
            TreeFamily::Baxter => Rule::Baxter,
            TreeFamily::HalfEven => Rule::HalfEven,
            TreeFamily::HalfOdd => Rule::HalfOdd,
            TreeFamily::Quarter => Rule::Quarter,
        }
    }

    pub fn children(self, w: &Permutation) -> Result<Vec<Permutation>> {
        match self {
            TreeFamily::Baxter => {
                let mut kids = Vec::new();
                for g in admissible_largest_gaps(w)? {
                    kids.push(insert_largest(w, g)?);
                }
                Ok(kids)
            }
            TreeFamily::HalfEven | TreeFamily::HalfOdd => half_turn_children(w),
            TreeFamily::Quarter => quarter_turn_children(w),
        }
    }

    /// The label the isomorphism identifies a node with: maxima counts from
    /// the permutation's statistics.
    pub fn label_of(self, w: &Permutation) -> RuleLabel {
        let s = w.stats();
        let i = s.ltr_max_positions.len() as u64;
        let j = s.rtl_max_positions.len() as u64;
        match self {
            TreeFamily::Quarter => RuleLabel::Single(i),
            _ => RuleLabel::Pair(i, j),
        }
    }
}

impl fmt::Display for TreeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TreeFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "baxter" => Ok(TreeFamily::Baxter),
            "half_even" | "half-even" => Ok(TreeFamily::HalfEven),
            "half_odd" | "half-odd" => Ok(TreeFamily::HalfOdd),
            "quarter" => Ok(TreeFamily::Quarter),
            _ => Err(Error::Parse {
                token: s.to_string(),
                reason: "unknown tree family".into(),
            }),
        }
    }
}

/// A node of an explicit generating tree; `parent` indexes the previous
/// level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub perm: Permutation,
    pub parent: Option<usize>,
}

/// An explicit generating tree, leveled by rank.
#[derive(Clone, Debug)]
pub struct GenTree {
    pub family: TreeFamily,
    pub levels: Vec<Vec<TreeNode>>,
}

impl GenTree {
    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.len()).collect()
    }

    pub fn level_perms(&self, rank: usize) -> Vec<Permutation> {
        self.levels[rank].iter().map(|n| n.perm.clone()).collect()
    }

    /// Permutations on the path from the root down to a node.
    pub fn path_to(&self, rank: usize, index: usize) -> Vec<Permutation> {
        let mut path = Vec::new();
        let mut r = rank;
        let mut idx = index;
        loop {
            let node = &self.levels[r][idx];
            path.push(node.perm.clone());
            match node.parent {
                Some(p) if r > 0 => {
                    r -= 1;
                    idx = p;
                }
                _ => break,
            }
        }
        path.reverse();
        path
    }
}

pub fn explicit_tree(family: TreeFamily, depth: usize) -> Result<GenTree> {
    explicit_tree_with_budget(family, depth, DEFAULT_NODE_BUDGET)
}

/// Builds the explicit tree down to `depth` ranks below the root, refusing
/// once more than `budget` nodes would be created.
pub fn explicit_tree_with_budget(
    family: TreeFamily,
    depth: usize,
    budget: usize,
) -> Result<GenTree> {
    let mut levels = vec![vec![TreeNode {
        perm: family.root(),
        parent: None,
    }]];
    let mut total = 1usize;
    for _ in 0..depth {
        let last = levels.last().unwrap();
        let mut next = Vec::new();
        for (idx, node) in last.iter().enumerate() {
            for child in family.children(&node.perm)? {
                total += 1;
                if total > budget {
                    return Err(Error::BudgetExceeded { budget });
                }
                next.push(TreeNode {
                    perm: child,
                    parent: Some(idx),
                });
            }
        }
        levels.push(next);
    }
    Ok(GenTree { family, levels })
}

/// A node whose explicit children do not match the succession rule.
#[derive(Clone, Debug)]
pub struct IsoMismatch {
    /// Root-to-witness path.
    pub path: Vec<Permutation>,
    pub label: RuleLabel,
    pub expected: Vec<RuleLabel>,
    pub actual: Vec<RuleLabel>,
}

#[derive(Clone, Debug, Default)]
pub struct IsoReport {
    pub nodes_checked: usize,
    pub mismatches: Vec<IsoMismatch>,
}

impl IsoReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Verifies, for every node of the explicit tree down to `depth`, that the
/// multiset of its children's labels equals `rule_children` of its own
/// label. Mismatches are report content, not errors.
pub fn check_isomorphism(family: TreeFamily, rule: Rule, depth: usize) -> Result<IsoReport> {
    let tree = explicit_tree(family, depth)?;
    let mut report = IsoReport::default();
    for rank in 0..depth {
        // group children of the next level by parent index
        let mut children_of: Vec<Vec<&TreeNode>> = vec![Vec::new(); tree.levels[rank].len()];
        for child in &tree.levels[rank + 1] {
            children_of[child.parent.unwrap()].push(child);
        }
        for (idx, node) in tree.levels[rank].iter().enumerate() {
            report.nodes_checked += 1;
            let label = family.label_of(&node.perm);
            let mut expected = rule_children(rule, label)?;
            let mut actual: Vec<RuleLabel> = children_of[idx]
                .iter()
                .map(|c| family.label_of(&c.perm))
                .collect();
            expected.sort_unstable();
            actual.sort_unstable();
            if expected != actual {
                report.mismatches.push(IsoMismatch {
                    path: tree.path_to(rank, idx),
                    label,
                    expected,
                    actual,
                });
            }
        }
    }
    report.nodes_checked += tree.levels[depth].len();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_perm;
    use std::collections::BTreeSet;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn rule_children_examples() {
        assert_eq!(
            rule_children(Rule::Baxter, RuleLabel::Pair(2, 1)).unwrap(),
            vec![RuleLabel::Pair(1, 2), RuleLabel::Pair(2, 2), RuleLabel::Pair(3, 1)]
        );
        assert_eq!(
            rule_children(Rule::Quarter, RuleLabel::Single(1)).unwrap(),
            vec![RuleLabel::Single(2), RuleLabel::Single(2)]
        );
        assert_eq!(
            rule_children(Rule::HalfEven, RuleLabel::Pair(0, 0)).unwrap(),
            vec![RuleLabel::Pair(1, 2), RuleLabel::Pair(2, 1)]
        );
        assert_eq!(
            rule_children(Rule::HalfOdd, RuleLabel::Pair(1, 1)).unwrap(),
            vec![RuleLabel::Pair(1, 3), RuleLabel::Pair(3, 1)]
        );
        assert!(rule_children(Rule::Catalan, RuleLabel::Pair(1, 1)).is_err());
    }

    #[test]
    fn expand_rule_examples() {
        assert_eq!(
            expand_rule(Rule::Quarter, 4),
            vec![big(1), big(2), big(8), big(40), big(224)]
        );
        assert_eq!(expand_rule(Rule::Catalan, 3), vec![big(1), big(2), big(5), big(14)]);
        assert_eq!(expand_rule(Rule::Baxter, 3), vec![big(1), big(2), big(6), big(22)]);
    }

    #[test]
    fn explicit_tree_examples() {
        let t = explicit_tree(TreeFamily::Quarter, 2).unwrap();
        assert_eq!(t.level_sizes(), vec![1, 2, 8]);
        let level1: BTreeSet<Permutation> = t.level_perms(1).into_iter().collect();
        assert_eq!(
            level1,
            ["25314", "41352"].iter().map(|s| parse_perm(s).unwrap()).collect()
        );

        let t = explicit_tree(TreeFamily::HalfEven, 1).unwrap();
        assert_eq!(t.level_perms(0), vec![Permutation::empty()]);
        let level1: BTreeSet<Permutation> = t.level_perms(1).into_iter().collect();
        assert_eq!(
            level1,
            ["12", "21"].iter().map(|s| parse_perm(s).unwrap()).collect()
        );

        let t = explicit_tree(TreeFamily::Baxter, 2).unwrap();
        assert_eq!(t.level_sizes(), vec![1, 2, 6]);
    }

    #[test]
    fn explicit_tree_budget_refusal() {
        assert!(matches!(
            explicit_tree_with_budget(TreeFamily::Baxter, 4, 10),
            Err(Error::BudgetExceeded { budget: 10 })
        ));
    }

    #[test]
    fn isomorphism_examples() {
        assert!(check_isomorphism(TreeFamily::Baxter, Rule::Baxter, 5).unwrap().is_clean());
        assert!(check_isomorphism(TreeFamily::Quarter, Rule::Quarter, 3).unwrap().is_clean());
        assert!(check_isomorphism(TreeFamily::HalfOdd, Rule::HalfOdd, 3).unwrap().is_clean());
        assert!(check_isomorphism(TreeFamily::HalfEven, Rule::HalfEven, 3).unwrap().is_clean());
    }

    #[test]
    fn mismatch_is_reported_with_witness() {
        // the Catalan rule does not govern the Baxter tree
        let report = check_isomorphism(TreeFamily::Quarter, Rule::Baxter, 1);
        assert!(report.is_err() || !report.unwrap().is_clean());
    }

    #[test]
    fn path_to_walks_parent_links() {
        let t = explicit_tree(TreeFamily::Quarter, 2).unwrap();
        let path = t.path_to(2, 0);
        assert_eq!(path.len(), 3);
        assert_eq!(path[0], Permutation::identity(1));
    }
}
