//! Vincular pattern matching and the Baxter test.
//!
//! A vincular pattern is a classical pattern together with a set of
//! adjacency constraints: if `a` is in the set, pattern positions `a` and
//! `a+1` must occupy adjacent host positions. The two patterns that define
//! Baxter permutations are `3-14-2` and `2-41-3`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{parse_perm, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VincularPattern {
    pattern: Permutation,
    adjacent_pairs: BTreeSet<usize>,
}

impl VincularPattern {
    pub fn new(pattern: Permutation, adjacent_pairs: BTreeSet<usize>) -> Result<Self> {
        let k = pattern.len();
        if let Some(&a) = adjacent_pairs.iter().find(|&&a| a < 1 || a >= k) {
            return Err(Error::OutOfRange(format!(
                "adjacency index {a} not in 1..{}",
                k.max(1) - 1
            )));
        }
        Ok(VincularPattern {
            pattern,
            adjacent_pairs,
        })
    }

    /// The pattern `3-14-2`: `w_j < w_k < w_i < w_{j+1}` on indices
    /// `i < j < j+1 < k`.
    pub fn three_one_four_two() -> Self {
        "3-14-2".parse().unwrap()
    }

    /// The pattern `2-41-3`: `w_{j+1} < w_i < w_k < w_j` on indices
    /// `i < j < j+1 < k`.
    pub fn two_four_one_three() -> Self {
        "2-41-3".parse().unwrap()
    }

    pub fn pattern(&self) -> &Permutation {
        &self.pattern
    }

    pub fn adjacent_pairs(&self) -> &BTreeSet<usize> {
        &self.adjacent_pairs
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in 1..=self.pattern.len() {
            write!(f, "{}", self.pattern.at(a))?;
            if a < self.pattern.len() && !self.adjacent_pairs.contains(&a) {
                write!(f, "-")?;
            }
        }
        Ok(())
    }
}

impl FromStr for VincularPattern {
    type Err = Error;

    /// Dashes separate blocks; letters inside a block must be adjacent in
    /// the host (`"3-14-2"` has word `3142` with positions 2,3 adjacent).
    fn from_str(s: &str) -> Result<Self> {
        let mut word = Vec::new();
        let mut adjacent = BTreeSet::new();
        for block in s.split('-') {
            if block.is_empty() {
                return Err(Error::Parse {
                    token: s.to_string(),
                    reason: "empty pattern block".into(),
                });
            }
            for (k, c) in block.chars().enumerate() {
                let d = c.to_digit(10).ok_or_else(|| Error::Parse {
                    token: c.to_string(),
                    reason: "not a digit".into(),
                })?;
                if k > 0 {
                    adjacent.insert(word.len());
                }
                word.push(d);
            }
        }
        VincularPattern::new(parse_perm(&render(&word))?, adjacent)
    }
}

fn render(word: &[u32]) -> String {
    word.iter().map(|v| v.to_string()).collect()
}

/// Every occurrence of `p` in `w`, as sorted 1-based host index tuples.
pub fn vincular_occurrences(w: &Permutation, p: &VincularPattern) -> Vec<Vec<usize>> {
    let k = p.pattern().len();
    let mut out = Vec::new();
    if k == 0 || k > w.len() {
        return out;
    }
    let mut chosen = Vec::with_capacity(k);
    scan(w, p, &mut chosen, &mut out);
    out
}

fn scan(w: &Permutation, p: &VincularPattern, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let k = p.pattern().len();
    let depth = chosen.len();
    if depth == k {
        out.push(chosen.clone());
        return;
    }
    let (lo, hi) = if depth == 0 {
        (1, w.len() - (k - 1))
    } else if p.adjacent_pairs().contains(&depth) {
        let prev = chosen[depth - 1];
        (prev + 1, (prev + 1).min(w.len() - (k - 1 - depth)))
    } else {
        (chosen[depth - 1] + 1, w.len() - (k - 1 - depth))
    };
    for pos in lo..=hi {
        if order_compatible(w, p, chosen, pos) {
            chosen.push(pos);
            scan(w, p, chosen, out);
            chosen.pop();
        }
    }
}

/// The new host entry must relate to the already-chosen ones exactly the way
/// the pattern entries do.
fn order_compatible(w: &Permutation, p: &VincularPattern, chosen: &[usize], pos: usize) -> bool {
    let d = chosen.len();
    let pv = p.pattern().at(d + 1);
    chosen.iter().enumerate().all(|(t, &q)| {
        let earlier = p.pattern().at(t + 1);
        (earlier < pv) == (w.at(q) < w.at(pos))
    })
}

/// Whether `w` avoids both `3-14-2` and `2-41-3`.
///
/// This is an `O(n^2)` interval scan; `vincular_occurrences` is the
/// exhaustive reference it is tested against. For each adjacent pair
/// `(w_j, w_{j+1})`, an occurrence of `2-41-3` exists iff the smallest
/// earlier entry strictly inside the value interval is smaller than the
/// largest later entry inside it, and dually for `3-14-2`.
pub fn is_baxter(w: &Permutation) -> bool {
    let n = w.len();
    for j in 1..n.saturating_sub(1) {
        let a = w.at(j);
        let b = w.at(j + 1);
        if a > b {
            // 2-41-3: need earlier x and later y with b < x < y < a
            let inside = |v: u32| v > b && v < a;
            let min_left = (1..j).map(|i| w.at(i)).filter(|&v| inside(v)).min();
            let max_right = (j + 2..=n).map(|k| w.at(k)).filter(|&v| inside(v)).max();
            if let (Some(x), Some(y)) = (min_left, max_right) {
                if x < y {
                    return false;
                }
            }
        } else {
            // 3-14-2: need earlier x and later y with a < y < x < b
            let inside = |v: u32| v > a && v < b;
            let max_left = (1..j).map(|i| w.at(i)).filter(|&v| inside(v)).max();
            let min_right = (j + 2..=n).map(|k| w.at(k)).filter(|&v| inside(v)).min();
            if let (Some(x), Some(y)) = (max_left, min_right) {
                if y < x {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        parse_perm(s).unwrap()
    }

    #[test]
    fn pattern_parsing() {
        let pat = VincularPattern::three_one_four_two();
        assert_eq!(pat.pattern(), &p("3142"));
        assert_eq!(pat.adjacent_pairs().iter().copied().collect::<Vec<_>>(), [2]);
        assert_eq!(pat.to_string(), "3-14-2");
        let pat = VincularPattern::two_four_one_three();
        assert_eq!(pat.pattern(), &p("2413"));
        assert_eq!(pat.to_string(), "2-41-3");
    }

    #[test]
    fn occurrence_examples() {
        assert_eq!(
            vincular_occurrences(&p("2413"), &VincularPattern::two_four_one_three()),
            vec![vec![1, 2, 3, 4]]
        );
        assert!(vincular_occurrences(&p("1234"), &VincularPattern::three_one_four_two()).is_empty());
        assert_eq!(
            vincular_occurrences(&p("3142"), &VincularPattern::three_one_four_two()),
            vec![vec![1, 2, 3, 4]]
        );
    }

    #[test]
    fn baxter_examples() {
        assert!(!is_baxter(&p("2413")));
        assert!(!is_baxter(&p("3142")));
        assert!(is_baxter(&p("41352")));
        assert!(is_baxter(&Permutation::empty()));
    }

    /// The fast scan must agree with the exhaustive quadruple scan.
    #[test]
    fn fast_scan_matches_occurrence_oracle() {
        let p3142 = VincularPattern::three_one_four_two();
        let p2413 = VincularPattern::two_four_one_three();
        for n in 0..=7 {
            for w in Permutation::all(n) {
                let slow = vincular_occurrences(&w, &p3142).is_empty()
                    && vincular_occurrences(&w, &p2413).is_empty();
                assert_eq!(is_baxter(&w), slow, "mismatch at {w}");
            }
        }
    }

    #[test]
    fn baxter_count_by_filter_matches_known_values() {
        // 1, 2, 6, 22, 92: the sequence of Baxter numbers
        let counts: Vec<usize> = (1..=5)
            .map(|n| Permutation::all(n).filter(is_baxter_ref).count())
            .collect();
        assert_eq!(counts, vec![1, 2, 6, 22, 92]);
    }

    fn is_baxter_ref(w: &Permutation) -> bool {
        is_baxter(w)
    }
}
