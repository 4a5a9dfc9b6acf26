//! Permutations in one-line notation, the dihedral action on permutation
//! matrices, and the maxima/minima/descent statistics.
//!
//! Conventions used throughout the crate: positions and labels are 1-based,
//! the permutation matrix has a 1 in row `i`, column `w_i`, and a clockwise
//! quarter turn sends matrix cell `(r, c)` to `(c, n+1-r)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` in one-line notation. `n = 0` is allowed
/// (the empty permutation, rendered as `∅`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from its one-line word, checking that it is a
    /// rearrangement of `1..=n`.
    pub fn from_word(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v < 1 || v as usize > n {
                return Err(Error::Parse {
                    token: v.to_string(),
                    reason: format!("label outside 1..{n}"),
                });
            }
            if seen[(v - 1) as usize] {
                return Err(Error::Parse {
                    token: v.to_string(),
                    reason: "duplicate label".into(),
                });
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(Permutation { word })
    }

    pub fn empty() -> Self {
        Permutation { word: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.word[i - 1]
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// Internal constructor for words already known to be valid.
    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_word(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn inverse(&self) -> Permutation {
        let n = self.len();
        let mut inv = vec![0u32; n];
        for (i, &v) in self.word.iter().enumerate() {
            inv[(v - 1) as usize] = (i + 1) as u32;
        }
        Permutation { word: inv }
    }

    pub fn reverse(&self) -> Permutation {
        let mut w = self.word.clone();
        w.reverse();
        Permutation { word: w }
    }

    pub fn complement(&self) -> Permutation {
        let n = self.len() as u32;
        Permutation {
            word: self.word.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    pub fn apply_symmetry(&self, s: Symmetry) -> Permutation {
        match s {
            Symmetry::Identity => self.clone(),
            Symmetry::Reverse => self.reverse(),
            Symmetry::Complement => self.complement(),
            Symmetry::Inverse => self.inverse(),
            Symmetry::Rotate180 => self.reverse().complement(),
            Symmetry::Rotate90Cw => self.inverse().complement(),
            Symmetry::Rotate90Ccw => self.complement().inverse(),
            Symmetry::Antidiagonal => self.inverse().reverse().complement(),
        }
    }

    pub fn is_fixed(&self, s: Symmetry) -> bool {
        self.apply_symmetry(s) == *self
    }

    /// Maxima/minima positions and descent counts, all in one pass family.
    pub fn stats(&self) -> PermStats {
        let n = self.len();
        let mut ltr_max_positions = Vec::new();
        let mut ltr_min_positions = Vec::new();
        let mut rtl_max_positions = Vec::new();
        let mut rtl_min_positions = Vec::new();
        let mut max_so_far = 0u32;
        let mut min_so_far = u32::MAX;
        for i in 1..=n {
            let v = self.at(i);
            if v > max_so_far {
                ltr_max_positions.push(i);
                max_so_far = v;
            }
            if v < min_so_far {
                ltr_min_positions.push(i);
                min_so_far = v;
            }
        }
        max_so_far = 0;
        min_so_far = u32::MAX;
        for i in (1..=n).rev() {
            let v = self.at(i);
            if v > max_so_far {
                rtl_max_positions.push(i);
                max_so_far = v;
            }
            if v < min_so_far {
                rtl_min_positions.push(i);
                min_so_far = v;
            }
        }
        rtl_max_positions.reverse();
        rtl_min_positions.reverse();
        let descents = (1..n).filter(|&i| self.at(i) > self.at(i + 1)).count();
        let inv = self.inverse();
        let inverse_descents = (1..n).filter(|&i| inv.at(i) > inv.at(i + 1)).count();
        PermStats {
            ltr_max_positions,
            rtl_max_positions,
            ltr_min_positions,
            rtl_min_positions,
            descents,
            inverse_descents,
        }
    }

    /// For a quarter-turn-fixed permutation, checks that the cycle structure
    /// is exactly 4-cycles `(i, j, n+1-i, n+1-j)` plus, for odd `n`, one
    /// central fixed point.
    pub fn quarter_cycle_check(&self) -> Result<bool> {
        if !self.is_fixed(Symmetry::Rotate90Cw) {
            return Err(Error::NotQuarterTurnFixed);
        }
        let n = self.len();
        let mut visited = vec![false; n + 1];
        for i in 1..=n {
            if visited[i] {
                continue;
            }
            let j = self.at(i) as usize;
            if j == i {
                // only the center may be fixed
                if n % 2 == 0 || i != (n + 1) / 2 {
                    return Ok(false);
                }
                visited[i] = true;
                continue;
            }
            let expect = [i, j, n + 1 - i, n + 1 - j];
            let mut pos = i;
            for step in 0..4 {
                if pos != expect[step] || visited[pos] {
                    return Ok(false);
                }
                visited[pos] = true;
                pos = self.at(pos) as usize;
            }
            if pos != i {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All permutations of length `n` in lexicographic order.
    pub fn all(n: usize) -> AllPerms {
        AllPerms {
            next: Some(Permutation::identity(n)),
        }
    }
}

impl fmt::Display for Permutation {
    /// Compact digit string for `n <= 9`, comma-separated otherwise; the
    /// empty permutation prints as `∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "∅");
        }
        if self.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_perm(s)
    }
}

/// Parses a permutation from its text form: a compact digit string (valid
/// only for `n <= 9`) or a comma/space-separated list of labels.
pub fn parse_perm(text: &str) -> Result<Permutation> {
    let text = text.trim();
    if text == "∅" {
        return Ok(Permutation::empty());
    }
    if text.is_empty() {
        return Err(Error::Parse {
            token: String::new(),
            reason: "empty input".into(),
        });
    }
    let word: Vec<u32> = if text.contains(',') || text.contains(char::is_whitespace) {
        let mut out = Vec::new();
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                return Err(Error::Parse {
                    token: String::new(),
                    reason: "empty token".into(),
                });
            }
            let v: u32 = tok.parse().map_err(|_| Error::Parse {
                token: tok.to_string(),
                reason: "not a positive integer".into(),
            })?;
            out.push(v);
        }
        out
    } else {
        let mut out = Vec::new();
        for c in text.chars() {
            let d = c.to_digit(10).ok_or_else(|| Error::Parse {
                token: c.to_string(),
                reason: "not a digit".into(),
            })?;
            out.push(d);
        }
        out
    };
    Permutation::from_word(word)
}

/// An element of the dihedral group of the square acting on permutation
/// matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Identity,
    /// Horizontal flip of the matrix: reverses the word.
    Reverse,
    /// Vertical flip: replaces each label `v` by `n+1-v`.
    Complement,
    /// Reflection across the main diagonal.
    Inverse,
    Rotate90Cw,
    Rotate90Ccw,
    Rotate180,
    /// Reflection across the antidiagonal.
    Antidiagonal,
}

impl Symmetry {
    pub const ALL: [Symmetry; 8] = [
        Symmetry::Identity,
        Symmetry::Reverse,
        Symmetry::Complement,
        Symmetry::Inverse,
        Symmetry::Rotate90Cw,
        Symmetry::Rotate90Ccw,
        Symmetry::Rotate180,
        Symmetry::Antidiagonal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Symmetry::Identity => "identity",
            Symmetry::Reverse => "reverse",
            Symmetry::Complement => "complement",
            Symmetry::Inverse => "inverse",
            Symmetry::Rotate90Cw => "rotate90cw",
            Symmetry::Rotate90Ccw => "rotate90ccw",
            Symmetry::Rotate180 => "rotate180",
            Symmetry::Antidiagonal => "antidiagonal",
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Symmetry::ALL
            .into_iter()
            .find(|sym| sym.name() == s)
            .ok_or_else(|| Error::Parse {
                token: s.to_string(),
                reason: "unknown symmetry".into(),
            })
    }
}

/// Maxima/minima positions (1-based, sorted) and descent counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermStats {
    pub ltr_max_positions: Vec<usize>,
    pub rtl_max_positions: Vec<usize>,
    pub ltr_min_positions: Vec<usize>,
    pub rtl_min_positions: Vec<usize>,
    pub descents: usize,
    pub inverse_descents: usize,
}

/// Iterator over all of `S_n` in lexicographic order, using the classic
/// in-place successor step.
pub struct AllPerms {
    next: Option<Permutation>,
}

impl Iterator for AllPerms {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut w = current.word.clone();
        if next_lex(&mut w) {
            self.next = Some(Permutation { word: w });
        }
        Some(current)
    }
}

/// Advances `w` to its lexicographic successor; false when `w` was the last.
fn next_lex(w: &mut [u32]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}
