//! Permutations in one-line notation, words (subsequences with distinct
//! entries), and descent machinery.
//!
//! Positions and values are one-based throughout; conversions to zero-based
//! indices happen only inside method bodies.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

/// A permutation of `[n] = {1, ..., n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    entries: Vec<usize>,
}

/// A sequence of pairwise-distinct positive integers, e.g. a subsequence of a
/// permutation. May be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    entries: Vec<usize>,
}

/// A strictly increasing set of positions, each at least 1. Bounds (such as
/// membership in `[n-1]`) are checked where a length is available.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct DescentSet {
    positions: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("empty input")]
    Empty,
    #[error("invalid token `{0}`")]
    InvalidToken(String),
    #[error("duplicate value {0}")]
    DuplicateValue(usize),
    #[error("value {value} out of range 1..={n}")]
    ValueOutOfRange { value: usize, n: usize },
    #[error("compact digit form is ambiguous for n >= 10; separate entries with spaces or commas")]
    AmbiguousCompact,
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
}

impl Permutation {
    /// Builds a permutation from one-line entries, validating bijectivity.
    pub fn new(entries: Vec<usize>) -> Result<Self, PermError> {
        if entries.is_empty() {
            return Err(PermError::Empty);
        }
        let n = entries.len();
        // Duplicates are reported before range violations: "4,4,1" is a
        // duplicate-4 error even though 4 also exceeds n = 3.
        let mut sorted = entries.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(PermError::DuplicateValue(w[0]));
            }
        }
        for &v in &entries {
            if v == 0 || v > n {
                return Err(PermError::ValueOutOfRange { value: v, n });
            }
        }
        Ok(Permutation { entries })
    }

    /// The identity permutation `1 2 ... n`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations have size at least 1");
        Permutation {
            entries: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Value at one-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn to_word(&self) -> Word {
        Word {
            entries: self.entries.clone(),
        }
    }

    /// The subsequence at the given one-based index set, sorted internally.
    pub fn subsequence(&self, indices: &[usize]) -> Result<Word, PermError> {
        let n = self.n();
        let mut sorted: Vec<usize> = indices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut entries = Vec::with_capacity(sorted.len());
        for i in sorted {
            if i == 0 || i > n {
                return Err(PermError::IndexOutOfRange { index: i, n });
            }
            entries.push(self.entries[i - 1]);
        }
        Ok(Word { entries })
    }

    /// The factor `π(i) π(i+1) ... π(j)` for one-based `i <= j`.
    pub fn factor(&self, i: usize, j: usize) -> Word {
        assert!(1 <= i && i <= j && j <= self.n(), "factor window out of range");
        Word {
            entries: self.entries[i - 1..j].to_vec(),
        }
    }

    /// Reverse the sequence, then replace every value `v` by `n + 1 - v`.
    pub fn reverse_complement(&self) -> Permutation {
        let n = self.n();
        let entries = self.entries.iter().rev().map(|&v| n + 1 - v).collect();
        Permutation { entries }
    }

    pub fn descent_set(&self) -> DescentSet {
        self.to_slice_descents()
    }

    pub fn descent_count(&self) -> usize {
        self.descent_set().len()
    }

    pub fn ascent_count(&self) -> usize {
        self.n() - 1 - self.descent_count()
    }

    fn to_slice_descents(&self) -> DescentSet {
        descents_of(&self.entries)
    }

    /// Successor in lexicographic order on one-line notation, or `None` for
    /// the maximal permutation `n ... 2 1`.
    pub fn lex_successor(&self) -> Option<Permutation> {
        let mut e = self.entries.clone();
        let n = e.len();
        if n < 2 {
            return None;
        }
        let mut i = n - 1;
        while i > 0 && e[i - 1] >= e[i] {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        let mut j = n - 1;
        while e[j] <= e[i - 1] {
            j -= 1;
        }
        e.swap(i - 1, j);
        e[i..].reverse();
        Some(Permutation { entries: e })
    }

    /// The permutation of rank `r` (zero-based) in lexicographic order,
    /// via the factorial number system.
    pub fn unrank(n: usize, mut rank: u64) -> Permutation {
        assert!(n >= 1);
        let mut factorials = vec![1u64; n];
        for i in 1..n {
            factorials[i] = factorials[i - 1] * i as u64;
        }
        let mut available: Vec<usize> = (1..=n).collect();
        let mut entries = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let f = factorials[i];
            let idx = (rank / f) as usize;
            rank %= f;
            entries.push(available.remove(idx));
        }
        Permutation { entries }
    }
}

impl Word {
    pub fn new(entries: Vec<usize>) -> Result<Self, PermError> {
        let mut sorted = entries.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(PermError::DuplicateValue(w[0]));
            }
        }
        if entries.contains(&0) {
            return Err(PermError::ValueOutOfRange {
                value: 0,
                n: entries.len(),
            });
        }
        Ok(Word { entries })
    }

    pub fn empty() -> Self {
        Word { entries: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn descent_set(&self) -> DescentSet {
        descents_of(&self.entries)
    }

    pub fn descent_count(&self) -> usize {
        self.descent_set().len()
    }

    /// Ascent count; zero for words of length at most 1.
    pub fn ascent_count(&self) -> usize {
        if self.entries.is_empty() {
            0
        } else {
            self.entries.len() - 1 - self.descent_count()
        }
    }

    /// Replaces each entry by its rank within the word, yielding a
    /// permutation with the same relative order.
    pub fn standardize(&self) -> Option<Permutation> {
        if self.entries.is_empty() {
            return None;
        }
        let mut sorted: Vec<usize> = self.entries.clone();
        sorted.sort_unstable();
        let entries = self
            .entries
            .iter()
            .map(|v| sorted.binary_search(v).unwrap() + 1)
            .collect();
        Some(Permutation { entries })
    }
}

impl DescentSet {
    /// Builds a set from arbitrary positions; sorts and rejects zeros.
    pub fn new(mut positions: Vec<usize>) -> Result<Self, PermError> {
        positions.sort_unstable();
        positions.dedup();
        if positions.first() == Some(&0) {
            return Err(PermError::ValueOutOfRange { value: 0, n: 0 });
        }
        Ok(DescentSet { positions })
    }

    pub fn empty() -> Self {
        DescentSet::default()
    }

    pub fn from_mask(mask: u64) -> Self {
        let positions = (1..=64)
            .filter(|&i| mask >> (i - 1) & 1 == 1)
            .collect();
        DescentSet { positions }
    }

    /// Bitmask with bit `i - 1` set for each position `i`; positions must
    /// not exceed 64.
    pub fn to_mask(&self) -> u64 {
        self.positions.iter().map(|&i| 1u64 << (i - 1)).sum()
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn contains(&self, i: usize) -> bool {
        self.positions.binary_search(&i).is_ok()
    }

    pub fn min(&self) -> Option<usize> {
        self.positions.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.positions.last().copied()
    }

    /// True when all positions fit in `[n-1]` for a sequence of length `n`.
    pub fn fits(&self, n: usize) -> bool {
        self.max().is_none_or(|m| m + 1 <= n)
    }

    /// The complement within `[n-1]`, i.e. the ascent set of length-`n` words.
    pub fn complement(&self, n: usize) -> DescentSet {
        let positions = (1..n).filter(|i| !self.contains(*i)).collect();
        DescentSet { positions }
    }
}

impl FromStr for DescentSet {
    type Err = PermError;

    /// Parses a comma/whitespace list of positions; empty input is the
    /// empty set.
    fn from_str(s: &str) -> Result<Self, PermError> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(DescentSet::empty());
        }
        let positions = trimmed
            .split([',', ' ', '\t'])
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| PermError::InvalidToken(t.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        DescentSet::new(positions)
    }
}

/// Descent positions `{ i | w(i) > w(i+1) }` of a slice, one-based.
pub fn descents_of(entries: &[usize]) -> DescentSet {
    let positions = entries
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .collect();
    DescentSet { positions }
}

/// Iterates `S_n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    assert!(n >= 1);
    let mut next = Some(Permutation::identity(n));
    std::iter::from_fn(move || {
        let current = next.take()?;
        next = current.lex_successor();
        Some(current)
    })
}

/// `n!` as `u64`; callers guard `n` at desk scale.
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Accepts whitespace/comma-separated integers, or a contiguous digit
    /// string when every value is a single digit.
    fn from_str(s: &str) -> Result<Self, PermError> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(PermError::Empty);
        }
        let entries: Vec<usize> = if trimmed.contains([' ', ',', '\t']) {
            trimmed
                .split([' ', ',', '\t'])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| PermError::InvalidToken(t.to_string()))
                })
                .collect::<Result<_, _>>()?
        } else if trimmed.chars().all(|c| c.is_ascii_digit()) {
            if trimmed.len() >= 10 {
                return Err(PermError::AmbiguousCompact);
            }
            trimmed
                .chars()
                .map(|c| c.to_digit(10).unwrap() as usize)
                .collect()
        } else {
            // A single multi-character token such as "12x".
            return match trimmed.parse::<usize>() {
                Ok(v) => Permutation::new(vec![v]),
                Err(_) => Err(PermError::InvalidToken(trimmed.to_string())),
            };
        };
        Permutation::new(entries)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.entries {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.positions.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_spaced_and_compact() {
        assert_eq!(p("4 3 6 5 1 7 2").entries(), &[4, 3, 6, 5, 1, 7, 2]);
        assert_eq!(p("4365172").entries(), &[4, 3, 6, 5, 1, 7, 2]);
        assert_eq!(p("1").entries(), &[1]);
        assert_eq!(p("10,1,2,3,4,5,6,7,8,9").n(), 10);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            "4,4,1".parse::<Permutation>().unwrap_err(),
            PermError::DuplicateValue(4)
        );
        assert_eq!("".parse::<Permutation>().unwrap_err(), PermError::Empty);
        assert_eq!(
            "1 2 5".parse::<Permutation>().unwrap_err(),
            PermError::ValueOutOfRange { value: 5, n: 3 }
        );
        assert_eq!(
            "1 2 x".parse::<Permutation>().unwrap_err(),
            PermError::InvalidToken("x".to_string())
        );
        assert_eq!(
            "12345678910".parse::<Permutation>().unwrap_err(),
            PermError::AmbiguousCompact
        );
    }

    #[test]
    fn descents() {
        assert_eq!(p("234615").descent_set().positions(), &[4]);
        assert_eq!(p("234615").descent_count(), 1);
        assert!(p("123456").descent_set().is_empty());
        assert_eq!(p("4365172").descent_set().positions(), &[1, 3, 4, 6]);
    }

    #[test]
    fn descent_ascent_split() {
        for q in permutations(5) {
            assert_eq!(q.descent_count() + q.ascent_count(), q.n() - 1);
        }
    }

    #[test]
    fn subsequences() {
        let q = p("234615");
        assert_eq!(q.subsequence(&[2, 4, 5]).unwrap().entries(), &[3, 6, 1]);
        assert_eq!(q.subsequence(&[5, 2, 4]).unwrap().entries(), &[3, 6, 1]);
        assert_eq!(
            q.subsequence(&[1, 2, 3, 4, 5, 6]).unwrap().entries(),
            q.entries()
        );
        assert!(q.subsequence(&[]).unwrap().is_empty());
        assert_eq!(
            q.subsequence(&[7]).unwrap_err(),
            PermError::IndexOutOfRange { index: 7, n: 6 }
        );
    }

    #[test]
    fn reverse_complement_values() {
        assert_eq!(p("34251").reverse_complement(), p("51423"));
        // Two-pass reference: reverse(4365172) = 2715634, then 8 - v.
        assert_eq!(p("4365172").reverse_complement(), p("6173254"));
        for n in 1..=6 {
            let id = Permutation::identity(n);
            assert_eq!(id.reverse_complement(), id);
        }
    }

    #[test]
    fn reverse_complement_involution_exhaustive() {
        for n in 1..=8 {
            for q in permutations(n) {
                assert_eq!(q.reverse_complement().reverse_complement(), q);
            }
        }
    }

    #[test]
    fn descents_reflect_under_rc() {
        for q in permutations(7) {
            let n = q.n();
            let expected: Vec<usize> = {
                let mut v: Vec<usize> =
                    q.descent_set().positions().iter().map(|&i| n - i).collect();
                v.sort_unstable();
                v
            };
            assert_eq!(
                q.reverse_complement().descent_set().positions(),
                expected.as_slice()
            );
        }
    }

    #[test]
    fn standardize_ranks() {
        let w = Word::new(vec![4, 7, 5, 1, 6]).unwrap();
        assert_eq!(w.standardize().unwrap().entries(), &[2, 5, 3, 1, 4]);
        assert!(Word::empty().standardize().is_none());
    }

    #[test]
    fn lex_iteration_and_unrank() {
        let all: Vec<Permutation> = permutations(4).collect();
        assert_eq!(all.len(), 24);
        assert_eq!(all[0], p("1234"));
        assert_eq!(all[23], p("4321"));
        let mut sorted = all.clone();
        sorted.sort_by(|a, b| a.entries().cmp(b.entries()));
        assert_eq!(all, sorted);
        for (r, q) in all.iter().enumerate() {
            assert_eq!(&Permutation::unrank(4, r as u64), q);
        }
    }

    #[test]
    fn descent_set_mask_roundtrip() {
        let d = DescentSet::new(vec![6, 1, 3, 4]).unwrap();
        assert_eq!(d.positions(), &[1, 3, 4, 6]);
        assert_eq!(DescentSet::from_mask(d.to_mask()), d);
        assert!(d.fits(7));
        assert!(!d.fits(6));
    }

    #[test]
    fn display_roundtrip() {
        assert_eq!(p("4365172").to_string(), "4365172");
        let big = Permutation::identity(11);
        assert_eq!(big.to_string(), "1 2 3 4 5 6 7 8 9 10 11");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
    }
}
