//! Insertion and removal operators on Baxter permutations, the rules for
//! where each insertion is admissible, and the symmetric child
//! constructions behind the half-turn and quarter-turn generating trees.

use crate::enumerate::rot90_fixed_perms;
use crate::error::{Error, Result};
use crate::pattern::is_baxter;
use crate::perm::{Permutation, Symmetry};

/// A gap index: gap `g` sits between positions `g` and `g+1`, so gap 0 is
/// the front and gap `n` the end of a length-`n` permutation.
pub type Gap = usize;

/// Which end a boundary insertion targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Front,
    Back,
}

/// One of the four insertion operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InsertionKind {
    Largest(Gap),
    Smallest(Gap),
    Front(u32),
    Back(u32),
}

/// Which entry `remove` deletes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RemoveKind {
    Largest,
    Smallest,
    Front,
    Back,
}

/// Inserts the new largest label `n+1` into gap `g`.
pub fn insert_largest(w: &Permutation, g: Gap) -> Result<Permutation> {
    let n = w.len();
    if g > n {
        return Err(Error::GapOutOfRange { gap: g, len: n });
    }
    let mut word = w.word().to_vec();
    word.insert(g, n as u32 + 1);
    Ok(Permutation::from_word_unchecked(word))
}

/// Increments every label and inserts a new 1 into gap `g`.
pub fn insert_smallest(w: &Permutation, g: Gap) -> Result<Permutation> {
    let n = w.len();
    if g > n {
        return Err(Error::GapOutOfRange { gap: g, len: n });
    }
    let mut word: Vec<u32> = w.word().iter().map(|&v| v + 1).collect();
    word.insert(g, 1);
    Ok(Permutation::from_word_unchecked(word))
}

/// Increments every label `>= label` and places `label` at the front or
/// back, giving a standard permutation on `[n+1]`.
pub fn insert_boundary(w: &Permutation, side: Side, label: u32) -> Result<Permutation> {
    let n = w.len();
    if label < 1 || label as usize > n + 1 {
        return Err(Error::LabelOutOfRange { label, len: n });
    }
    let mut word: Vec<u32> = w
        .word()
        .iter()
        .map(|&v| if v >= label { v + 1 } else { v })
        .collect();
    match side {
        Side::Front => word.insert(0, label),
        Side::Back => word.push(label),
    }
    Ok(Permutation::from_word_unchecked(word))
}

pub fn insert(w: &Permutation, kind: InsertionKind) -> Result<Permutation> {
    match kind {
        InsertionKind::Largest(g) => insert_largest(w, g),
        InsertionKind::Smallest(g) => insert_smallest(w, g),
        InsertionKind::Front(j) => insert_boundary(w, Side::Front, j),
        InsertionKind::Back(j) => insert_boundary(w, Side::Back, j),
    }
}

/// Deletes the named entry and reduces the rest back to a standard
/// permutation on `[n-1]`; exact inverse of the matching insertion.
pub fn remove(w: &Permutation, which: RemoveKind) -> Result<Permutation> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyPermutation);
    }
    let pos = match which {
        RemoveKind::Largest => (1..=n).find(|&i| w.at(i) == n as u32).unwrap(),
        RemoveKind::Smallest => (1..=n).find(|&i| w.at(i) == 1).unwrap(),
        RemoveKind::Front => 1,
        RemoveKind::Back => n,
    };
    let val = w.at(pos);
    let word: Vec<u32> = (1..=n)
        .filter(|&i| i != pos)
        .map(|i| {
            let v = w.at(i);
            if v > val {
                v - 1
            } else {
                v
            }
        })
        .collect();
    Ok(Permutation::from_word_unchecked(word))
}

fn require_baxter(w: &Permutation) -> Result<()> {
    if is_baxter(w) {
        Ok(())
    } else {
        Err(Error::NotBaxter {
            perm: w.to_string(),
        })
    }
}

/// The gaps where a new largest label keeps a Baxter permutation Baxter:
/// immediately left of each left-to-right maximum and immediately right of
/// each right-to-left maximum. The empty permutation has the single gap 0.
pub fn admissible_largest_gaps(w: &Permutation) -> Result<Vec<Gap>> {
    require_baxter(w)?;
    if w.is_empty() {
        return Ok(vec![0]);
    }
    let s = w.stats();
    Ok(merge_gaps(
        s.ltr_max_positions.iter().map(|&x| x - 1),
        s.rtl_max_positions.iter().map(|&j| j),
    ))
}

/// The gaps where a new smallest label keeps a Baxter permutation Baxter:
/// left of each left-to-right minimum, right of each right-to-left minimum.
pub fn admissible_smallest_gaps(w: &Permutation) -> Result<Vec<Gap>> {
    require_baxter(w)?;
    if w.is_empty() {
        return Ok(vec![0]);
    }
    let s = w.stats();
    Ok(merge_gaps(
        s.ltr_min_positions.iter().map(|&x| x - 1),
        s.rtl_min_positions.iter().map(|&j| j),
    ))
}

fn merge_gaps(
    left: impl IntoIterator<Item = Gap>,
    right: impl IntoIterator<Item = Gap>,
) -> Vec<Gap> {
    let mut gaps: Vec<Gap> = left.into_iter().chain(right).collect();
    gaps.sort_unstable();
    gaps.dedup();
    gaps
}

/// The labels `j` for which `insert_boundary(w, side, j)` stays Baxter.
///
/// Appending `j` to `w` equals `inverse(insert_largest(inverse(w), j-1))`,
/// so the back labels are read off the largest-label rule on the inverse;
/// the front side reduces to the back side of the reversed word.
pub fn admissible_boundary_labels(w: &Permutation, side: Side) -> Result<Vec<u32>> {
    require_baxter(w)?;
    let host = match side {
        Side::Back => w.clone(),
        Side::Front => w.reverse(),
    };
    let gaps = admissible_largest_gaps(&host.inverse())?;
    Ok(gaps.into_iter().map(|g| (g + 1) as u32).collect())
}

/// Children of a 180°-fixed Baxter permutation in the half-turn tree: one
/// per admissible largest gap, obtained by inserting the new largest label
/// and then the new smallest label at the position that restores the
/// symmetry. For even `n` the middle gap admits two symmetric candidates
/// and exactly one of them is Baxter.
pub fn half_turn_children(w: &Permutation) -> Result<Vec<Permutation>> {
    require_baxter(w)?;
    if !w.is_fixed(Symmetry::Rotate180) {
        return Err(Error::NotFixed {
            perm: w.to_string(),
            symmetry: Symmetry::Rotate180.to_string(),
        });
    }
    let n = w.len();
    let mut children = Vec::new();
    for g in admissible_largest_gaps(w)? {
        let u = insert_largest(w, g)?;
        if 2 * g < n {
            children.push(symmetric_child(&u, n + 1 - g));
        } else if 2 * g > n {
            children.push(symmetric_child(&u, n - g));
        } else {
            // middle gap: both sides of the new largest restore the
            // symmetry; keep whichever is Baxter (both, for the root)
            let survivors: Vec<Permutation> = [n - g, n + 1 - g]
                .into_iter()
                .map(|h| symmetric_child(&u, h))
                .filter(is_baxter)
                .collect();
            assert!(
                n == 0 || survivors.len() == 1,
                "middle insertion at {w} should leave a unique Baxter child"
            );
            children.extend(survivors);
        }
    }
    for c in &children {
        assert!(c.is_fixed(Symmetry::Rotate180) && is_baxter(c));
    }
    Ok(children)
}

fn symmetric_child(u: &Permutation, h: Gap) -> Permutation {
    let v = insert_smallest(u, h).expect("complementary gap in range");
    debug_assert!(v.is_fixed(Symmetry::Rotate180));
    v
}

/// Children in the quarter-turn tree: one per admissible largest gap, each
/// of length `n+4`, Baxter, and fixed under the quarter turn.
///
/// A child is pinned down by the position `q` of its new largest label: its
/// outer 4-cycle is `(1, q, n+4, n+5-q)` and its interior is the parent
/// relabelled order-isomorphically. For an insertion right of the
/// right-to-left maximum at position `j`, `q = j+2` when `j <= (n-1)/2` and
/// `q = j+3` otherwise; left-of-maximum insertions reduce to the reversed
/// word.
pub fn quarter_turn_children(w: &Permutation) -> Result<Vec<Permutation>> {
    require_quarter(w)?;
    let n = w.len();
    let s = w.stats();
    let mut flavored: Vec<(Gap, bool)> = s
        .ltr_max_positions
        .iter()
        .map(|&x| (x - 1, true))
        .chain(s.rtl_max_positions.iter().map(|&j| (j, false)))
        .collect();
    flavored.sort_unstable();
    let mut children = Vec::with_capacity(flavored.len());
    for (g, left_of_ltr_max) in flavored {
        let child = if left_of_ltr_max {
            quarter_child_right(&w.reverse(), n - g).reverse()
        } else {
            quarter_child_right(w, g)
        };
        assert!(
            is_baxter(&child) && child.is_fixed(Symmetry::Rotate90Cw),
            "quarter-turn child {child} of {w} lost an invariant"
        );
        children.push(child);
    }
    Ok(children)
}

/// Child for the insertion right of the right-to-left maximum at position
/// `j` (so the new largest is aimed at gap `j` of `w`).
fn quarter_child_right(w: &Permutation, j: usize) -> Permutation {
    let n = w.len();
    let q = if j <= (n - 1) / 2 { j + 2 } else { j + 3 };
    quarter_complete(w, q)
}

/// The unique quarter-turn-symmetric extension of `w` by the 4-cycle
/// `(1, q, n+4, n+5-q)`.
fn quarter_complete(w: &Permutation, q: usize) -> Permutation {
    let n = w.len();
    let big = n + 4;
    debug_assert!(q >= 2 && q <= n + 3 && q != big + 1 - q);
    let mut word = vec![0u32; big];
    word[0] = q as u32;
    word[q - 1] = big as u32;
    word[big - 1] = (big + 1 - q) as u32;
    word[big - q] = 1;
    let interior: Vec<usize> = (2..=big - 1).filter(|&t| t != q && t != big + 1 - q).collect();
    for (idx, &pos) in interior.iter().enumerate() {
        word[pos - 1] = interior[(w.at(idx + 1) - 1) as usize] as u32;
    }
    Permutation::from_word_unchecked(word)
}

/// Removes the largest, smallest, first, and last entries; the parent map
/// of the quarter-turn tree.
pub fn quarter_turn_parent(w: &Permutation) -> Result<Permutation> {
    require_quarter(w)?;
    if w.len() < 5 {
        return Err(Error::OutOfRange(format!(
            "length {} too short for a quarter-turn parent",
            w.len()
        )));
    }
    let mut p = w.clone();
    for kind in [
        RemoveKind::Largest,
        RemoveKind::Smallest,
        RemoveKind::Front,
        RemoveKind::Back,
    ] {
        p = remove(&p, kind)?;
    }
    Ok(p)
}

fn require_quarter(w: &Permutation) -> Result<()> {
    require_baxter(w)?;
    if !w.is_fixed(Symmetry::Rotate90Cw) {
        return Err(Error::NotFixed {
            perm: w.to_string(),
            symmetry: Symmetry::Rotate90Cw.to_string(),
        });
    }
    if w.len() % 4 != 1 {
        return Err(Error::BadQuarterLength { len: w.len() });
    }
    Ok(())
}

/// The three generating-tree families with a brute-force child oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Baxter,
    Half,
    Quarter,
}

/// Exhaustive cross-check for the constructive child operations: all family
/// members of the child length whose family-specific removal gives back
/// `w`. The quarter family enumerates only symmetric completions, so child
/// lengths up to 13 stay feasible.
pub fn children_oracle(w: &Permutation, family: Family) -> Result<Vec<Permutation>> {
    let n = w.len();
    match family {
        Family::Baxter => {
            require_baxter(w)?;
            let mut out = Vec::new();
            for g in 0..=n {
                let c = insert_largest(w, g)?;
                if is_baxter(&c) {
                    out.push(c);
                }
            }
            Ok(out)
        }
        Family::Half => {
            require_baxter(w)?;
            if !w.is_fixed(Symmetry::Rotate180) {
                return Err(Error::NotFixed {
                    perm: w.to_string(),
                    symmetry: Symmetry::Rotate180.to_string(),
                });
            }
            let mut out = Vec::new();
            for g in 0..=n {
                let u = insert_largest(w, g)?;
                for h in 0..=n + 1 {
                    let v = insert_smallest(&u, h)?;
                    if v.is_fixed(Symmetry::Rotate180)
                        && is_baxter(&v)
                        && remove(&remove(&v, RemoveKind::Largest)?, RemoveKind::Smallest)? == *w
                        && !out.contains(&v)
                    {
                        out.push(v);
                    }
                }
            }
            Ok(out)
        }
        Family::Quarter => {
            require_quarter(w)?;
            const LIMIT: usize = 13;
            if n + 4 > LIMIT {
                return Err(Error::LimitExceeded { n: n + 4, limit: LIMIT });
            }
            let mut out = Vec::new();
            for v in rot90_fixed_perms(n + 4) {
                if is_baxter(&v) && quarter_turn_parent(&v)? == *w {
                    out.push(v);
                }
            }
            Ok(out)
        }
    }
}
