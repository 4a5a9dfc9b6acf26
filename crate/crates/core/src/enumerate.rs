//! Exact closed-form counts, brute-force family counting, symmetric-orbit
//! generation, and the joint descent statistic table.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pattern::is_baxter;
use crate::perm::{Permutation, Symmetry};

/// Default bound on full `S_n` scans. Orbit-completion generators (for the
/// rotation-fixed and involution families) are allowed `SYMMETRIC_HEADROOM`
/// more, since they touch exponentially fewer words.
pub const DEFAULT_BRUTE_LIMIT: usize = 10;
pub const SYMMETRIC_HEADROOM: usize = 6;

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut res = BigUint::one();
    for i in 1..=k {
        res = res * BigUint::from(n - k + i) / BigUint::from(i);
    }
    res
}

/// The Catalan number `C_m = binom(2m, m) / (m+1)`.
pub fn catalan(m: u64) -> BigUint {
    let (q, r) = div_exact(binomial(2 * m, m), BigUint::from(m + 1));
    debug_assert!(r.is_zero());
    q
}

fn div_exact(num: BigUint, den: BigUint) -> (BigUint, BigUint) {
    let q = &num / &den;
    let r = num - &q * den;
    (q, r)
}

/// The number of Baxter permutations of length `n`, by the closed sum
/// `B(n) = sum_k C(n+1,k) C(n+1,k+1) C(n+1,k+2) / (C(n+1,1) C(n+1,2))`.
/// Each summand is divided separately and checked to be an exact integer.
pub fn baxter_count(n: usize) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::OutOfRange("baxter_count requires n >= 1".into()));
    }
    let m = (n + 1) as u64;
    let den = binomial(m, 1) * binomial(m, 2);
    let mut total = BigUint::zero();
    for k in 0..n as u64 {
        let num = binomial(m, k) * binomial(m, k + 1) * binomial(m, k + 2);
        let (q, r) = div_exact(num, den.clone());
        if !r.is_zero() {
            return Err(Error::InexactDivision { n });
        }
        total += q;
    }
    Ok(total)
}

/// The number of Baxter permutations of length `n` fixed under a quarter
/// turn: `2^m C_m` when `n = 4m+1`, zero otherwise.
pub fn quarter_turn_count(n: usize) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::OutOfRange("quarter_turn_count requires n >= 1".into()));
    }
    if n % 4 != 1 {
        return Ok(BigUint::zero());
    }
    let m = ((n - 1) / 4) as u64;
    Ok((BigUint::one() << m) * catalan(m))
}

/// The number of fixed-point-free self-inverse Baxter permutations of
/// length `2n`: `b_n = 3 * 2^(n-1) / ((n+1)(n+2)) * binom(2n, n)`.
pub fn fpf_involution_count(n: usize) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::OutOfRange("fpf_involution_count requires n >= 1".into()));
    }
    let nn = n as u64;
    let num = BigUint::from(3u32) * (BigUint::one() << (nn - 1)) * binomial(2 * nn, nn);
    let den = BigUint::from((nn + 1) * (nn + 2));
    let (q, r) = div_exact(num, den);
    if !r.is_zero() {
        return Err(Error::InexactDivision { n });
    }
    Ok(q)
}

/// Base set a family is drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    All,
    Baxter,
}

/// A family of permutations: a base set, an optional symmetry that members
/// must be fixed by, and an optional fixed-point-free-involution predicate
/// (`w = w^{-1}` with no fixed points).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub base: Base,
    pub symmetry_filter: Option<Symmetry>,
    pub fpf_involution: bool,
}

impl FamilySpec {
    pub fn baxter() -> Self {
        FamilySpec {
            base: Base::Baxter,
            symmetry_filter: None,
            fpf_involution: false,
        }
    }

    pub fn baxter_fixed(s: Symmetry) -> Self {
        FamilySpec {
            base: Base::Baxter,
            symmetry_filter: Some(s),
            fpf_involution: false,
        }
    }

    pub fn fpf_involution_baxter() -> Self {
        FamilySpec {
            base: Base::Baxter,
            symmetry_filter: None,
            fpf_involution: true,
        }
    }

    pub fn matches(&self, w: &Permutation) -> bool {
        if self.fpf_involution {
            let n = w.len();
            if w.inverse() != *w || (1..=n).any(|i| w.at(i) as usize == i) {
                return false;
            }
        }
        if let Some(s) = self.symmetry_filter {
            if !w.is_fixed(s) {
                return false;
            }
        }
        match self.base {
            Base::All => true,
            Base::Baxter => is_baxter(w),
        }
    }
}

/// All permutations of length `n` fixed under a quarter turn, generated by
/// choosing the value 4-cycles `(i, j, n+1-i, n+1-j)` directly; empty for
/// lengths where none exist.
pub fn rot90_fixed_perms(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word = vec![0u32; n];
    complete_rot90(&mut word, &mut out);
    out
}

fn complete_rot90(word: &mut Vec<u32>, out: &mut Vec<Permutation>) {
    let n = word.len();
    let Some(zero) = word.iter().position(|&v| v == 0) else {
        out.push(Permutation::from_word_unchecked(word.clone()));
        return;
    };
    let i = zero + 1;
    for j in 1..=n {
        // the quarter turn forces the full cycle (i, j, n+1-i, n+1-j)
        let assigns = [
            (i, j),
            (j, n + 1 - i),
            (n + 1 - i, n + 1 - j),
            (n + 1 - j, i),
        ];
        if consistent(word, &assigns) {
            let touched: Vec<usize> = assigns
                .iter()
                .filter(|&&(p, _)| word[p - 1] == 0)
                .map(|&(p, _)| p)
                .collect();
            for &(p, v) in &assigns {
                word[p - 1] = v as u32;
            }
            complete_rot90(word, out);
            for &p in &touched {
                word[p - 1] = 0;
            }
        }
    }
}

fn consistent(word: &[u32], assigns: &[(usize, usize)]) -> bool {
    for (t, &(p, v)) in assigns.iter().enumerate() {
        if word[p - 1] != 0 && word[p - 1] != v as u32 {
            return false;
        }
        // the same position may appear twice only with the same value
        for &(p2, v2) in &assigns[..t] {
            if p == p2 && v != v2 {
                return false;
            }
        }
        // a value may not be granted to two different positions
        if word[p - 1] == 0 {
            if word.iter().any(|&x| x == v as u32) {
                return false;
            }
            for &(p2, v2) in &assigns[..t] {
                if p2 != p && v2 == v {
                    return false;
                }
            }
        }
    }
    true
}

/// All permutations of length `n` fixed under a half turn.
pub fn rot180_fixed_perms(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word = vec![0u32; n];
    if n % 2 == 1 {
        word[n / 2] = (n as u32 + 1) / 2;
    }
    complete_rot180(&mut word, 0, &mut out);
    out
}

fn complete_rot180(word: &mut Vec<u32>, i: usize, out: &mut Vec<Permutation>) {
    let n = word.len();
    if i >= n / 2 {
        out.push(Permutation::from_word_unchecked(word.clone()));
        return;
    }
    for v in 1..=n as u32 {
        let mirror = n as u32 + 1 - v;
        if v != mirror && !word.contains(&v) && !word.contains(&mirror) {
            word[i] = v;
            word[n - 1 - i] = mirror;
            complete_rot180(word, i + 1, out);
            word[i] = 0;
            word[n - 1 - i] = 0;
        }
    }
}

/// All involutions of length `n`; with `fpf` set, only those without fixed
/// points.
pub fn involutions(n: usize, fpf: bool) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word = vec![0u32; n];
    complete_involution(&mut word, fpf, &mut out);
    out
}

fn complete_involution(word: &mut Vec<u32>, fpf: bool, out: &mut Vec<Permutation>) {
    let n = word.len();
    let Some(zero) = word.iter().position(|&v| v == 0) else {
        out.push(Permutation::from_word_unchecked(word.clone()));
        return;
    };
    let i = zero + 1;
    if !fpf {
        word[i - 1] = i as u32;
        complete_involution(word, fpf, out);
        word[i - 1] = 0;
    }
    for j in i + 1..=n {
        if word[j - 1] == 0 {
            word[i - 1] = j as u32;
            word[j - 1] = i as u32;
            complete_involution(word, fpf, out);
            word[i - 1] = 0;
            word[j - 1] = 0;
        }
    }
}

/// Visits every member of `family` at length `n`, exploiting the symmetry
/// or involution constraint to avoid a full `S_n` scan where possible.
pub fn for_each_member(
    n: usize,
    family: FamilySpec,
    limit: usize,
    mut f: impl FnMut(&Permutation),
) -> Result<()> {
    let structured: Option<Vec<Permutation>> = if family.fpf_involution {
        Some(involutions(n, true))
    } else {
        match family.symmetry_filter {
            Some(Symmetry::Rotate90Cw) | Some(Symmetry::Rotate90Ccw) => Some(rot90_fixed_perms(n)),
            Some(Symmetry::Rotate180) => Some(rot180_fixed_perms(n)),
            Some(Symmetry::Inverse) => Some(involutions(n, false)),
            _ => None,
        }
    };
    match structured {
        Some(candidates) => {
            if n > limit + SYMMETRIC_HEADROOM {
                return Err(Error::LimitExceeded {
                    n,
                    limit: limit + SYMMETRIC_HEADROOM,
                });
            }
            for w in candidates.iter().filter(|w| family.matches(w)) {
                f(w);
            }
        }
        None => {
            if n > limit {
                return Err(Error::LimitExceeded { n, limit });
            }
            for w in Permutation::all(n).filter(|w| family.matches(w)) {
                f(&w);
            }
        }
    }
    Ok(())
}

/// Exact count of family members of length `n` by exhaustive generation.
pub fn brute_count(n: usize, family: FamilySpec) -> Result<BigUint> {
    brute_count_with_limit(n, family, DEFAULT_BRUTE_LIMIT, 1)
}

/// As `brute_count`, with an explicit full-scan limit and an optional
/// number of worker threads (full scans partition by first entry).
pub fn brute_count_with_limit(
    n: usize,
    family: FamilySpec,
    limit: usize,
    jobs: usize,
) -> Result<BigUint> {
    let full_scan = !family.fpf_involution
        && !matches!(
            family.symmetry_filter,
            Some(Symmetry::Rotate90Cw)
                | Some(Symmetry::Rotate90Ccw)
                | Some(Symmetry::Rotate180)
                | Some(Symmetry::Inverse)
        );
    if jobs > 1 && full_scan && n >= 2 {
        if n > limit {
            return Err(Error::LimitExceeded { n, limit });
        }
        return Ok(parallel_scan_count(n, family, jobs));
    }
    let mut count: u64 = 0;
    for_each_member(n, family, limit, |_| count += 1)?;
    Ok(BigUint::from(count))
}

/// Splits the scan by first entry; each worker walks the suffixes of its
/// share lexicographically.
fn parallel_scan_count(n: usize, family: FamilySpec, jobs: usize) -> BigUint {
    let firsts: Vec<u32> = (1..=n as u32).collect();
    let total = std::sync::atomic::AtomicU64::new(0);
    std::thread::scope(|scope| {
        for chunk in firsts.chunks(n.div_ceil(jobs)) {
            let total = &total;
            scope.spawn(move || {
                let mut local = 0u64;
                for &first in chunk {
                    let rest: Vec<u32> = (1..=n as u32).filter(|&v| v != first).collect();
                    let mut word = Vec::with_capacity(n);
                    let mut suffix = rest.clone();
                    loop {
                        word.clear();
                        word.push(first);
                        word.extend_from_slice(&suffix);
                        let w = Permutation::from_word_unchecked(word.clone());
                        if family.matches(&w) {
                            local += 1;
                        }
                        if !next_lex_slice(&mut suffix) {
                            break;
                        }
                    }
                }
                total.fetch_add(local, std::sync::atomic::Ordering::Relaxed);
            });
        }
    });
    BigUint::from(total.load(std::sync::atomic::Ordering::Relaxed))
}

fn next_lex_slice(w: &mut [u32]) -> bool {
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

/// How a count was produced; rows for the same `(family, n)` must agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    Formula,
    Tree,
    Brute,
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountMethod::Formula => "formula",
            CountMethod::Tree => "tree",
            CountMethod::Brute => "brute",
        })
    }
}

impl FromStr for CountMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formula" => Ok(CountMethod::Formula),
            "tree" => Ok(CountMethod::Tree),
            "brute" => Ok(CountMethod::Brute),
            _ => Err(Error::Parse {
                token: s.to_string(),
                reason: "unknown count method".into(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub n: usize,
    pub count: BigUint,
    pub method: CountMethod,
}

/// Rows of `(n, count, method)`; serializes to `n,count,method` CSV.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    pub rows: Vec<CountRow>,
}

impl CountTable {
    pub fn push(&mut self, n: usize, count: BigUint, method: CountMethod) {
        self.rows.push(CountRow { n, count, method });
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,count,method\n");
        for row in &self.rows {
            s.push_str(&format!("{},{},{}\n", row.n, row.count, row.method));
        }
        s
    }
}

/// Joint distribution of `(descents, inverse_descents)` over the family.
pub fn stats_table(
    n: usize,
    family: FamilySpec,
    limit: usize,
) -> Result<BTreeMap<(usize, usize), u64>> {
    let mut table = BTreeMap::new();
    for_each_member(n, family, limit, |w| {
        let s = w.stats();
        *table.entry((s.descents, s.inverse_descents)).or_insert(0) += 1;
    })?;
    Ok(table)
}
