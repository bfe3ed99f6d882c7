//! Partitions, standard Young tableaux, chain encodings, and the exact
//! counting formulas `f^λ` (hook lengths) and `s_λ(1^k)` (hook contents).
//!
//! Counts are exact big integers; the hook-content product is formed as an
//! integer quotient that must divide evenly, anything else is a bug.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::perm::DescentSet;

/// A weakly decreasing sequence of positive parts. The empty partition is a
/// first-class value; trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A standard Young tableau: rows and columns strictly increasing, entries
/// exactly `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

/// A chain `∅ = λ^0 ⊂ λ^1 ⊂ ... ⊂ λ^n` where consecutive partitions differ
/// by one box; the chain encoding of a standard tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionChain {
    chain: Vec<Partition>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableauError {
    #[error("parts must be weakly decreasing and positive (offending part {0})")]
    BadPart(usize),
    #[error("invalid token `{0}`")]
    InvalidToken(String),
    #[error("rows must strictly increase (row {0})")]
    RowNotIncreasing(usize),
    #[error("columns must strictly increase (column {0})")]
    ColumnNotIncreasing(usize),
    #[error("row lengths must weakly decrease")]
    RowsNotPartition,
    #[error("entries must be exactly 1..=n (offending entry {0})")]
    BadEntry(usize),
    #[error("chain step {0} does not add exactly one box")]
    BadChainStep(usize),
    #[error("shape size {size} exceeds enumeration cap {cap}")]
    CapExceeded { size: usize, cap: usize },
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, TableauError> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(TableauError::BadPart(w[1]));
            }
        }
        if let Some(&p) = parts.iter().find(|&&p| p == 0) {
            return Err(TableauError::BadPart(p));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// First part, or 0 for the empty partition.
    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part at one-based row `r`, 0 beyond the last row.
    pub fn part(&self, r: usize) -> usize {
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first_part();
        let parts = (1..=cols)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i + 1) >= p)
    }

    /// `(λ_1 + 1, λ_2, ...)`; maps the empty partition to `(1)`.
    pub fn plus_one(&self) -> Partition {
        let mut parts = self.parts.clone();
        if parts.is_empty() {
            parts.push(1);
        } else {
            parts[0] += 1;
        }
        Partition { parts }
    }

    /// Adds one box to row `r` (one-based) if the result is a partition.
    pub fn with_box_in_row(&self, r: usize) -> Option<Partition> {
        let current = self.part(r);
        if r > 1 && self.part(r - 1) < current + 1 {
            return None;
        }
        let mut parts = self.parts.clone();
        if r == parts.len() + 1 {
            parts.push(1);
        } else if r <= parts.len() {
            parts[r - 1] += 1;
        } else {
            return None;
        }
        Some(Partition { parts })
    }

    /// Rows where a box can be added: the corner slots of the diagram.
    pub fn addable_rows(&self) -> Vec<usize> {
        (1..=self.parts.len() + 1)
            .filter(|&r| r == 1 || self.part(r - 1) > self.part(r))
            .collect()
    }

    fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                (1..=len)
                    .map(|c| len - c + conj.part(c) - (i + 1) + 1)
                    .collect()
            })
            .collect()
    }

    /// Number of standard Young tableaux of this shape, `n! / ∏ hooks`.
    pub fn syt_count(&self) -> BigUint {
        let n = self.size();
        let mut numerator = BigUint::from(1u32);
        for k in 1..=n {
            numerator *= BigUint::from(k);
        }
        let mut denominator = BigUint::from(1u32);
        for row in self.hook_lengths() {
            for h in row {
                denominator *= BigUint::from(h);
            }
        }
        assert!(
            (&numerator % &denominator) == BigUint::ZERO,
            "hook product must divide n! exactly"
        );
        numerator / denominator
    }

    /// Number of semistandard tableaux of this shape with entries in `[k]`,
    /// `∏ (k + content) / hook`. Zero when `k` is smaller than the number of
    /// rows.
    pub fn ssyt_count(&self, k: usize) -> BigUint {
        if self.num_parts() > k {
            return BigUint::ZERO;
        }
        let mut numerator = BigUint::from(1u32);
        for (i, &len) in self.parts.iter().enumerate() {
            for c in 1..=len {
                // content c - (i+1) >= 1 - num_parts >= 1 - k, so k + content >= 1
                numerator *= BigUint::from(k + c - (i + 1));
            }
        }
        let mut denominator = BigUint::from(1u32);
        for row in self.hook_lengths() {
            for h in row {
                denominator *= BigUint::from(h);
            }
        }
        assert!(
            (&numerator % &denominator) == BigUint::ZERO,
            "hook-content product must reduce to an integer"
        );
        numerator / denominator
    }
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        for w in rows.windows(2) {
            if w[0].len() < w[1].len() {
                return Err(TableauError::RowsNotPartition);
            }
        }
        if rows.iter().any(|r| r.is_empty()) {
            return Err(TableauError::RowsNotPartition);
        }
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n + 1];
        for (i, row) in rows.iter().enumerate() {
            for w in row.windows(2) {
                if w[0] >= w[1] {
                    return Err(TableauError::RowNotIncreasing(i + 1));
                }
            }
            for &e in row {
                if e == 0 || e > n {
                    return Err(TableauError::BadEntry(e));
                }
                if seen[e] {
                    return Err(TableauError::BadEntry(e));
                }
                seen[e] = true;
            }
        }
        for (i, row) in rows.iter().enumerate().skip(1) {
            for (c, &e) in row.iter().enumerate() {
                if rows[i - 1][c] >= e {
                    return Err(TableauError::ColumnNotIncreasing(c + 1));
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(|r| r.len()).collect(),
        }
    }

    pub fn first_row(&self) -> &[usize] {
        &self.rows[0]
    }

    /// One-based row index of entry `e`.
    pub fn row_of(&self, e: usize) -> usize {
        for (i, row) in self.rows.iter().enumerate() {
            if row.contains(&e) {
                return i + 1;
            }
        }
        panic!("entry {e} not present");
    }

    /// `Des(Q) = {{ i | i + 1 lies in a strictly lower row than i }}`.
    pub fn descent_set(&self) -> DescentSet {
        let n = self.size();
        let mut row_index = vec![0usize; n + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for &e in row {
                row_index[e] = i + 1;
            }
        }
        let positions: Vec<usize> = (1..n)
            .filter(|&i| row_index[i + 1] > row_index[i])
            .collect();
        DescentSet::new(positions).expect("positions are >= 1")
    }

    /// Chain of shapes of the sub-tableaux with entries `<= i`.
    pub fn chain_encode(&self) -> PartitionChain {
        let n = self.size();
        let mut chain = Vec::with_capacity(n + 1);
        chain.push(Partition::empty());
        let mut counts = vec![0usize; self.rows.len()];
        let mut position = vec![(0usize, 0usize); n + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                position[e] = (i, c);
            }
        }
        for e in 1..=n {
            let (r, _) = position[e];
            counts[r] += 1;
            let parts: Vec<usize> = counts.iter().copied().filter(|&c| c > 0).collect();
            chain.push(Partition { parts });
        }
        PartitionChain { chain }
    }
}

impl PartitionChain {
    /// Validates that consecutive partitions differ by adding one box.
    pub fn new(chain: Vec<Partition>) -> Result<Self, TableauError> {
        if chain.first() != Some(&Partition::empty()) {
            return Err(TableauError::BadChainStep(0));
        }
        for (i, w) in chain.windows(2).enumerate() {
            if w[1].size() != w[0].size() + 1 || !w[1].contains(&w[0]) {
                return Err(TableauError::BadChainStep(i + 1));
            }
        }
        Ok(PartitionChain { chain })
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Reconstructs the tableau: entry `i` sits in the box added at step `i`.
    pub fn decode(&self) -> StandardTableau {
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for (e, w) in self.chain.windows(2).enumerate() {
            let r = (1..=w[1].num_parts())
                .find(|&r| w[1].part(r) != w[0].part(r))
                .expect("consecutive chain partitions differ in one row");
            if r > rows.len() {
                rows.push(Vec::new());
            }
            rows[r - 1].push(e + 1);
        }
        StandardTableau { rows }
    }
}

/// All standard Young tableaux of the given shape, or an error when the
/// shape size exceeds `cap`.
pub fn enumerate_syt(shape: &Partition, cap: usize) -> Result<Vec<StandardTableau>, TableauError> {
    let n = shape.size();
    if n > cap {
        return Err(TableauError::CapExceeded { size: n, cap });
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    fill(shape, 1, n, &mut rows, &mut out);
    return Ok(out);

    fn fill(
        shape: &Partition,
        entry: usize,
        n: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if entry > n {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 1..=rows.len() + 1 {
            let len = rows.get(r - 1).map_or(0, |row| row.len());
            if len >= shape.part(r) {
                continue;
            }
            if r > 1 && rows[r - 2].len() <= len {
                continue;
            }
            if r > rows.len() {
                rows.push(vec![entry]);
            } else {
                rows[r - 1].push(entry);
            }
            fill(shape, entry + 1, n, rows, out);
            if rows[r - 1].len() == 1 {
                rows.pop();
            } else {
                rows[r - 1].pop();
            }
        }
    }
}

/// Default cap for [`enumerate_syt`].
pub const SYT_ENUMERATION_CAP: usize = 12;

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, usize::MAX, &mut current, &mut out);
    return out;

    fn descend(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            current.push(part);
            descend(remaining - part, part, current, out);
            current.pop();
        }
    }
}

/// Result of the descent-count bijection audit for one shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionCheck {
    /// SYTs `Q` of the shape with `des(Q) + λ_1 = n`, by enumeration.
    pub direct: u64,
    /// `s_{λ'}(1^{λ_1})` from the hook-content formula.
    pub formula: BigUint,
    /// Every mapped tableau has strictly increasing rows, weakly increasing
    /// columns, and entries in `[λ_1]`.
    pub map_in_family: bool,
    /// No two counted SYTs map to the same filling.
    pub map_injective: bool,
}

impl BijectionCheck {
    pub fn passes(&self) -> bool {
        BigUint::from(self.direct) == self.formula && self.map_in_family && self.map_injective
    }
}

/// Counts SYTs `Q` of `shape` with `des(Q) + λ_1 = n` two ways: direct
/// enumeration and the hook-content formula on the conjugate shape. Also
/// applies the interval-collapse map (entries in `[u_i, u_{i+1} - 1]` become
/// `i`, where `u` is the first row) and audits its image.
pub fn descent_count_bijection_check(
    shape: &Partition,
    cap: usize,
) -> Result<BijectionCheck, TableauError> {
    let n = shape.size();
    let lambda1 = shape.first_part();
    let mut direct = 0u64;
    let mut images: HashSet<Vec<Vec<usize>>> = HashSet::new();
    let mut map_in_family = true;
    for q in enumerate_syt(shape, cap)? {
        if q.descent_set().len() + lambda1 != n {
            continue;
        }
        direct += 1;
        let image = collapse_by_first_row(&q);
        if !in_strict_row_weak_column_family(&image, lambda1) {
            map_in_family = false;
        }
        images.insert(image);
    }
    Ok(BijectionCheck {
        direct,
        formula: shape.conjugate().ssyt_count(lambda1),
        map_in_family,
        map_injective: images.len() as u64 == direct,
    })
}

fn collapse_by_first_row(q: &StandardTableau) -> Vec<Vec<usize>> {
    let n = q.size();
    let first = q.first_row();
    let mut label = vec![0usize; n + 1];
    for (i, w) in first.windows(2).enumerate() {
        for e in w[0]..w[1] {
            label[e] = i + 1;
        }
    }
    for e in first[first.len() - 1]..=n {
        label[e] = first.len();
    }
    q.rows()
        .iter()
        .map(|row| row.iter().map(|&e| label[e]).collect())
        .collect()
}

fn in_strict_row_weak_column_family(rows: &[Vec<usize>], max_entry: usize) -> bool {
    for row in rows {
        for w in row.windows(2) {
            if w[0] >= w[1] {
                return false;
            }
        }
        if row.iter().any(|&e| e == 0 || e > max_entry) {
            return false;
        }
    }
    for i in 1..rows.len() {
        for (c, &e) in rows[i].iter().enumerate() {
            if rows[i - 1][c] > e {
                return false;
            }
        }
    }
    true
}

impl FromStr for Partition {
    type Err = TableauError;

    /// Parses whitespace- or comma-separated parts such as `"3 2 2"`. The
    /// empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self, TableauError> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split([' ', ',', '\t'])
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| TableauError::InvalidToken(t.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition[{self}]")
    }
}

impl FromStr for StandardTableau {
    type Err = TableauError;

    /// Parses the bracketed row format `"[1 3 6][2 4][5 7]"`.
    fn from_str(s: &str) -> Result<Self, TableauError> {
        let trimmed = s.trim();
        if !trimmed.starts_with('[') || !trimmed.ends_with(']') {
            return Err(TableauError::InvalidToken(trimmed.to_string()));
        }
        let mut rows = Vec::new();
        for chunk in trimmed[1..trimmed.len() - 1].split("][") {
            let row = chunk
                .split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| TableauError::InvalidToken(t.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        StandardTableau::new(rows)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StandardTableau({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn tab(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    #[test]
    fn partition_basics() {
        let p = shape("3 2 2");
        assert_eq!(p.size(), 7);
        assert_eq!(p.conjugate(), shape("3 3 1"));
        assert_eq!(p.conjugate().conjugate(), p);
        assert!(p.contains(&shape("2 2")));
        assert!(!shape("2 2").contains(&p));
        assert_eq!(Partition::empty().plus_one(), shape("1"));
        assert_eq!(shape("2 1").plus_one(), shape("3 1"));
        assert!("1 3".parse::<Partition>().is_err());
        assert!("2 0".parse::<Partition>().is_err());
    }

    #[test]
    fn tableau_validation() {
        assert!("[1 3 6][2 4][5 7]".parse::<StandardTableau>().is_ok());
        assert!("[1 3][2 4 5]".parse::<StandardTableau>().is_err());
        assert!("[2 1]".parse::<StandardTableau>().is_err());
        assert!("[1 2][1 3]".parse::<StandardTableau>().is_err());
        assert!("[1 3][2 2]".parse::<StandardTableau>().is_err());
        assert!("[3 4][1 2]".parse::<StandardTableau>().is_err());
    }

    #[test]
    fn chain_encoding_matches_paper_example() {
        // P(4365172) as a chain.
        let p = tab("[1 2 7][3 5][4 6]");
        let chain = p.chain_encode();
        let expected = ["", "1", "2", "2 1", "2 1 1", "2 2 1", "2 2 2", "3 2 2"];
        let got: Vec<Partition> = chain.partitions().to_vec();
        let want: Vec<Partition> = expected.iter().map(|s| s.parse().unwrap()).collect();
        assert_eq!(got, want);
        assert_eq!(chain.decode(), p);
    }

    #[test]
    fn chain_roundtrip_simple() {
        let single = tab("[1]");
        assert_eq!(single.chain_encode().partitions().len(), 2);
        assert_eq!(single.chain_encode().decode(), single);

        let q = tab("[1 2 4][3][5]");
        let expected = ["", "1", "2", "2 1", "3 1", "3 1 1"];
        let want: Vec<Partition> = expected.iter().map(|s| s.parse().unwrap()).collect();
        assert_eq!(q.chain_encode().partitions(), want.as_slice());
    }

    #[test]
    fn tableau_descents() {
        assert_eq!(
            tab("[1 3 6][2 4][5 7]").descent_set().positions(),
            &[1, 3, 4, 6]
        );
        assert!(tab("[1 2 3 4]").descent_set().is_empty());
        assert_eq!(tab("[1 2 4][3][5]").descent_set().positions(), &[2, 4]);
    }

    #[test]
    fn syt_counts() {
        assert_eq!(shape("1").syt_count(), BigUint::from(1u32));
        assert_eq!(shape("2 1").syt_count(), BigUint::from(2u32));
        assert_eq!(shape("3 2").syt_count(), BigUint::from(5u32));
        assert_eq!(shape("2 2").syt_count(), BigUint::from(2u32));
        assert_eq!(Partition::empty().syt_count(), BigUint::from(1u32));
    }

    #[test]
    fn ssyt_counts() {
        for k in 0..6 {
            assert_eq!(shape("1").ssyt_count(k), BigUint::from(k));
        }
        assert_eq!(shape("1 1").ssyt_count(2), BigUint::from(1u32));
        assert_eq!(shape("2 1").ssyt_count(2), BigUint::from(2u32));
        assert_eq!(shape("1 1 1").ssyt_count(2), BigUint::ZERO);
    }

    #[test]
    fn ssyt_count_matches_enumeration() {
        // Oracle: fill cells row-major with entries in [k], rows weakly and
        // columns strictly increasing.
        fn enumerate(shape: &Partition, k: usize) -> u64 {
            fn go(shape: &Partition, k: usize, rows: &mut Vec<Vec<usize>>) -> u64 {
                let r = rows.len();
                let c = rows.last().map_or(0, |row| row.len());
                let (r, c) = if r > 0 && c < shape.part(r) {
                    (r, c)
                } else if r < shape.num_parts() {
                    rows.push(Vec::new());
                    (r + 1, 0)
                } else {
                    return 1;
                };
                let lo = {
                    let left = if c > 0 { rows[r - 1][c - 1] } else { 1 };
                    let above = if r > 1 { rows[r - 2][c] + 1 } else { 1 };
                    left.max(above)
                };
                let mut total = 0;
                for v in lo..=k {
                    rows[r - 1].push(v);
                    total += go(shape, k, rows);
                    rows[r - 1].pop();
                }
                if rows[r - 1].is_empty() {
                    rows.pop();
                }
                total
            }
            if shape.num_parts() == 0 {
                return 1;
            }
            go(shape, k, &mut Vec::new())
        }

        for n in 0..=6 {
            for shape in partitions_of(n) {
                for k in 0..=4 {
                    assert_eq!(
                        shape.ssyt_count(k),
                        BigUint::from(enumerate(&shape, k)),
                        "shape {shape} k {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_matches_hook_counts() {
        assert_eq!(enumerate_syt(&shape("1 1 1"), 12).unwrap().len(), 1);
        assert_eq!(enumerate_syt(&shape("2 1"), 12).unwrap().len(), 2);
        assert_eq!(enumerate_syt(&shape("2 2"), 12).unwrap().len(), 2);
        for n in 1..=8 {
            for shape in partitions_of(n) {
                let tableaux = enumerate_syt(&shape, 12).unwrap();
                assert_eq!(BigUint::from(tableaux.len() as u64), shape.syt_count());
                for t in &tableaux {
                    assert_eq!(t.shape(), shape);
                }
            }
        }
        assert_eq!(
            enumerate_syt(&shape("13"), 12).unwrap_err(),
            TableauError::CapExceeded { size: 13, cap: 12 }
        );
    }

    #[test]
    fn chain_roundtrip_all_small_syt() {
        for n in 1..=10 {
            for shape in partitions_of(n) {
                for t in enumerate_syt(&shape, 12).unwrap() {
                    let chain = t.chain_encode();
                    assert_eq!(chain.partitions().len(), n + 1);
                    assert_eq!(chain.decode(), t);
                    PartitionChain::new(chain.partitions().to_vec()).unwrap();
                }
            }
        }
    }

    #[test]
    fn square_sum_identity() {
        for n in 1..=8 {
            let total: BigUint = partitions_of(n)
                .iter()
                .map(|s| {
                    let f = s.syt_count();
                    &f * &f
                })
                .sum();
            assert_eq!(total, BigUint::from(crate::perm::factorial(n)));
        }
    }

    #[test]
    fn conjugate_preserves_syt_count() {
        for n in 1..=8 {
            for s in partitions_of(n) {
                assert_eq!(s.syt_count(), s.conjugate().syt_count());
            }
        }
    }

    #[test]
    fn bijection_check_examples() {
        // Single row: only the unique one-row SYT, des = 0 = n - λ_1.
        let check = descent_count_bijection_check(&shape("5"), 12).unwrap();
        assert_eq!(check.direct, 1);
        assert_eq!(check.formula, BigUint::from(1u32));
        assert!(check.passes());

        let check = descent_count_bijection_check(&shape("2 2"), 12).unwrap();
        assert_eq!(BigUint::from(check.direct), check.formula);
        assert!(check.passes());
    }

    #[test]
    fn collapse_map_matches_displayed_instance() {
        let q = tab("[1 3 6][2 4][5 7]");
        assert_eq!(
            collapse_by_first_row(&q),
            vec![vec![1, 2, 3], vec![1, 2], vec![2, 3]]
        );
    }

    #[test]
    fn partitions_of_counts() {
        assert_eq!(partitions_of(0).len(), 1);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_of(8).len(), 22);
    }
}
