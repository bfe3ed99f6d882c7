//! Descent-restricted longest-subsequence statistics.
//!
//! `ls_d` is the longest length of a subsequence with exactly `d` descents;
//! `ls_set` restricts the descent set exactly. Both are computed from the
//! triangle of per-factor `(is, ds)` pairs, which in turn is read off one
//! growth diagram. The remaining operations are the alternative routes to
//! the same values: first-row formulas, good pairs, front-peeling, the
//! existence recursion, and the reductions for descent words.
//!
//! Every statistic returns 0 to encode "no such subsequence".

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::growth::{stat_triangle, GrowthDiagram};
use crate::perm::{DescentSet, Permutation, Word};
use crate::rsk::rsk;

/// The pairs `a_{i,j} = (is, ds)` of the factors `π(i)..π(j)` for all
/// `1 <= i <= j <= n`. A sufficient statistic for every `ls_set` query.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StatTriangle {
    n: usize,
    /// Row-major: row `i` holds windows `(i, i) ..= (i, n)`.
    pairs: Vec<(usize, usize)>,
}

/// A composition `(c_1, ..., c_k)` of positive parts; encodes a descent set
/// through the alternating-run correspondence `c -> D_c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    U,
    D,
}

/// A word over `{U, D}`, recording ascent/descent steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DescentWord {
    letters: Vec<Letter>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StatsError {
    #[error("the identity permutation has no descents")]
    IdentityPermutation,
    #[error("precondition violated: no valid cut index exists")]
    NoValidCut,
    #[error("invalid letter `{0}`; descent words use the alphabet {{U, D}}")]
    InvalidLetter(char),
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error("compositions must have at least one part")]
    EmptyComposition,
    #[error("invalid token `{0}`")]
    InvalidToken(String),
}

impl StatTriangle {
    /// Wraps precomputed pairs; row-major over windows `(i, j)`, `i <= j`.
    pub fn from_pairs(n: usize, pairs: Vec<(usize, usize)>) -> Self {
        assert_eq!(pairs.len(), n * (n + 1) / 2);
        StatTriangle { n, pairs }
    }

    pub fn of(p: &Permutation) -> Self {
        stat_triangle(p)
    }

    pub fn of_word(w: &Word) -> Option<Self> {
        w.standardize().as_ref().map(stat_triangle)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i <= j && j <= self.n);
        let r = i - 1;
        r * self.n - (r * r - r) / 2 + (j - i)
    }

    /// `(is, ds)` of the factor window `[i, j]`, one-based.
    pub fn get(&self, i: usize, j: usize) -> (usize, usize) {
        self.pairs[self.index(i, j)]
    }

    /// `is` of the window, with empty windows contributing 0.
    fn is_window(&self, i: usize, j: usize) -> usize {
        if i > j {
            0
        } else {
            self.get(i, j).0
        }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
}

/// Length of a longest strictly increasing subsequence, `O(len log len)`.
pub fn lis_slice(entries: &[usize]) -> usize {
    let mut tails: Vec<usize> = Vec::new();
    for &v in entries {
        let pos = tails.partition_point(|&t| t < v);
        if pos == tails.len() {
            tails.push(v);
        } else {
            tails[pos] = v;
        }
    }
    tails.len()
}

/// Length of a longest strictly decreasing subsequence.
pub fn lds_slice(entries: &[usize]) -> usize {
    let mut tails: Vec<usize> = Vec::new();
    for &v in entries {
        let pos = tails.partition_point(|&t| t > v);
        if pos == tails.len() {
            tails.push(v);
        } else {
            tails[pos] = v;
        }
    }
    tails.len()
}

pub fn lis(w: &Word) -> usize {
    lis_slice(w.entries())
}

pub fn lds(w: &Word) -> usize {
    lds_slice(w.entries())
}

/// `ls_d` for every `d` in `0..n`: index `d` holds the longest length of a
/// subsequence with exactly `d` descents, 0 past `des(π)`.
pub fn ls_d_all(p: &Permutation) -> Vec<usize> {
    let t = StatTriangle::of(p);
    ls_d_all_from_triangle(&t, p.descent_count())
}

fn ls_d_all_from_triangle(t: &StatTriangle, descents: usize) -> Vec<usize> {
    let n = t.n();
    let mut out = vec![0usize; n];
    out[0] = t.get(1, n).0;
    if descents == 0 {
        return out;
    }
    // best[j]: max over cuts i_1 < ... < i_t = j of the sum of window is
    // values; -1 marks unreachable.
    let mut best: Vec<i64> = (0..=n)
        .map(|j| if j == 0 { 0 } else { -1 })
        .collect();
    for d in 1..=descents.min(n - 1) {
        let mut next = vec![-1i64; n + 1];
        for j in d..=n {
            let mut m = -1i64;
            for cut in d - 1..j {
                if best[cut] >= 0 {
                    m = m.max(best[cut] + t.is_window(cut + 1, j) as i64);
                }
            }
            next[j] = m;
        }
        let value = (d..=n)
            .filter(|&j| next[j] >= 0)
            .map(|j| next[j] as usize + t.is_window(j + 1, n))
            .max()
            .unwrap_or(0);
        out[d] = value;
        best = next;
    }
    out
}

/// Longest length of a subsequence with exactly `d` descents.
pub fn ls_d(p: &Permutation, d: usize) -> usize {
    if d >= p.n() {
        return 0;
    }
    ls_d_all(p)[d]
}

/// Same statistic read from growth-diagram break-ups: splitting the base
/// into `d + 1` sub-triangles and summing first parts at the peaks.
pub fn ls_d_via_growth(p: &Permutation, d: usize) -> usize {
    let n = p.n();
    if d > p.descent_count() {
        return 0;
    }
    let g = GrowthDiagram::from_permutation(p);
    let peak = |b: usize, j: usize| g.cell(b, j).first_part() as i64;
    // best[j]: base break points 0 = b_0 < ... < b_t = j, all windows
    // nonempty, summing peak first parts.
    let mut best: Vec<i64> = (0..=n).map(|j| if j == 0 { 0 } else { -1 }).collect();
    for _ in 1..=d + 1 {
        let mut next = vec![-1i64; n + 1];
        for j in 1..=n {
            let mut m = -1i64;
            for b in 0..j {
                if best[b] >= 0 {
                    m = m.max(best[b] + peak(b, j));
                }
            }
            next[j] = m;
        }
        best = next;
    }
    best[n].max(0) as usize
}

/// Longest length of a subsequence whose descent set is exactly `set`,
/// via the composition walk over the `(is, ds)` triangle.
pub fn ls_set(p: &Permutation, set: &DescentSet) -> usize {
    ls_set_from_triangle(&StatTriangle::of(p), set)
}

/// Triangle walk: convert `set` to its composition `c`; block `t` scans for
/// the smallest `j_t >= j_{t-1}` whose (`ds` for descent blocks, `is` for
/// ascent blocks) entry of `a_{j_{t-1}, j_t}` equals `c_t + 1`; the result
/// is `max(set) + is(a_{j_k, n})`, or 0 when some block has no such index.
pub fn ls_set_from_triangle(t: &StatTriangle, set: &DescentSet) -> usize {
    let n = t.n();
    if set.is_empty() {
        return t.get(1, n).0;
    }
    if !set.fits(n) {
        return 0;
    }
    let c = Composition::from_descents(set).expect("set is nonempty");
    let k = c.parts().len();
    let mut cursor = 1usize;
    for (idx, &part) in c.parts().iter().enumerate() {
        // Blocks alternate; the last block is always descents, so block t
        // is a descent run exactly when t ≡ k (mod 2).
        let descent_block = (idx + 1) % 2 == k % 2;
        let target = part + 1;
        let mut found = None;
        for j in cursor..=n {
            let (is_v, ds_v) = t.get(cursor, j);
            let v = if descent_block { ds_v } else { is_v };
            if v == target {
                found = Some(j);
                break;
            }
        }
        match found {
            Some(j) => cursor = j,
            None => return 0,
        }
    }
    set.max().unwrap() + t.get(cursor, n).0
}

/// The full `ls_set` vector, indexed by descent-set bitmask over `[n-1]`.
pub fn ls_profile(p: &Permutation) -> Vec<usize> {
    let t = StatTriangle::of(p);
    let n = p.n();
    (0..1u64 << (n - 1))
        .map(|mask| ls_set_from_triangle(&t, &DescentSet::from_mask(mask)))
        .collect()
}

/// `ls_1` from the first rows of `Q(π)` and `evac(Q(π))`:
/// `max { i + j | Q(1,i) + evac(Q)(1,j) <= n }`. Returns 0 for the identity,
/// whose `ls_1` is 0 by the empty-maximum convention.
pub fn ls1_from_first_rows(p: &Permutation) -> usize {
    if p.is_identity() {
        return 0;
    }
    let n = p.n();
    let q = rsk(p).recording;
    let qe = crate::growth::evacuate(&q);
    let mut best = 0;
    for (i, &u) in q.first_row().iter().enumerate() {
        for (j, &v) in qe.first_row().iter().enumerate() {
            if u + v <= n {
                best = best.max(i + 1 + j + 1);
            }
        }
    }
    best
}

/// `ls_{ {i} }` via good pairs: `max { i + j }` over `j` with
/// `Q(1,i) + Q_e(1,j) <= n` and `Q_e(1,j+1) != Q_e(1,j) + 1` (the final
/// first-row entry counts as good). The empty maximum is 0.
pub fn ls_singleton_good_pairs(p: &Permutation, i: usize) -> usize {
    assert!(i >= 1);
    let n = p.n();
    let q = rsk(p).recording;
    let qe = crate::growth::evacuate(&q);
    let q_row = q.first_row();
    let e_row = qe.first_row();
    if i > q_row.len() {
        return 0;
    }
    let mut best = 0;
    for (jz, &v) in e_row.iter().enumerate() {
        let good = jz + 1 == e_row.len() || e_row[jz + 1] != v + 1;
        if good && q_row[i - 1] + v <= n {
            best = best.max(i + jz + 1);
        }
    }
    best
}

/// Existence threshold for `ls_{ {i} }`: with `k` the last descent and
/// `j = is(π(1)..π(k))`, the statistic is nonzero exactly for `i <= j`, and
/// then at least `i + n - k`.
pub fn ls_singleton_threshold(
    p: &Permutation,
    i: usize,
) -> Result<Option<usize>, StatsError> {
    assert!(i >= 1);
    let last_descent = p
        .descent_set()
        .max()
        .ok_or(StatsError::IdentityPermutation)?;
    let j = lis_slice(&p.entries()[..last_descent]);
    if i <= j {
        Ok(Some(i + p.n() - last_descent))
    } else {
        Ok(None)
    }
}

/// Closed form for a nonzero `ls_{ {i} }`: with `k` the smallest descent
/// whose prefix reaches `is >= i`, the value is `i + is(π(k+1)..π(n))`.
pub fn ls_singleton_formula(p: &Permutation, i: usize) -> Result<usize, StatsError> {
    assert!(i >= 1);
    let entries = p.entries();
    let k = p
        .descent_set()
        .positions()
        .iter()
        .copied()
        .find(|&k| lis_slice(&entries[..k]) >= i)
        .ok_or(StatsError::NoValidCut)?;
    Ok(i + lis_slice(&entries[k..]))
}

/// Recursive existence test for `ls_set != 0`: peel the last run
/// `[i, i+l-1]` off `set`, find the largest `k` whose suffix `π(k)..π(n)`
/// has a decreasing subsequence of `l + 1` elements, and require
/// `i <= ls_set'(π(1)..π(k))`.
pub fn ls_set_exists(p: &Permutation, set: &DescentSet) -> bool {
    if set.is_empty() {
        return true;
    }
    let n = p.n();
    let positions = set.positions();
    let mut start = positions.len() - 1;
    while start > 0 && positions[start - 1] + 1 == positions[start] {
        start -= 1;
    }
    let i = positions[start];
    let run_len = positions.len() - start;
    let entries = p.entries();
    let k = (1..=n)
        .rev()
        .find(|&k| lds_slice(&entries[k - 1..]) >= run_len + 1);
    let Some(k) = k else {
        return false;
    };
    let rest = DescentSet::new(positions[..start].to_vec()).expect("positions stay valid");
    let prefix = p.factor(1, k).standardize().expect("nonempty prefix");
    let value = if rest.is_empty() {
        lis_slice(prefix.entries())
    } else {
        ls_set(&prefix, &rest)
    };
    i <= value
}

/// Front-peeling evaluation of a nonzero `ls_set`: strip the leading run
/// (descents if `1 ∈ set`, else the leading ascent gap), cut at the first
/// index where the prefix attains `ds`/`is` equal to `m + 1`, and recurse on
/// the suffix starting at the cut.
pub fn ls_set_peel(p: &Permutation, set: &DescentSet) -> Result<usize, StatsError> {
    peel(p.entries(), set)
}

fn peel(entries: &[usize], set: &DescentSet) -> Result<usize, StatsError> {
    if set.is_empty() {
        return Ok(lis_slice(entries));
    }
    let n = entries.len();
    let (m, use_ds) = if set.contains(1) {
        let mut m = 1;
        while set.contains(m + 1) {
            m += 1;
        }
        (m, true)
    } else {
        (set.min().unwrap() - 1, false)
    };
    let target = m + 1;
    let cut = (1..=n).find(|&k| {
        let prefix = &entries[..k];
        let v = if use_ds {
            lds_slice(prefix)
        } else {
            lis_slice(prefix)
        };
        v == target
    });
    let Some(k) = cut else {
        return Err(StatsError::NoValidCut);
    };
    let rest = DescentSet::new(
        set.positions()
            .iter()
            .filter(|&&i| i > m)
            .map(|&i| i - m)
            .collect(),
    )
    .expect("shifted positions stay valid");
    Ok(m + peel(&entries[k - 1..], &rest)?)
}

/// Longest alternating subsequence (descent word `DUDU...`). Extracted from
/// `ls_set` over `{1, 3, ..., 2k-1}` for the largest feasible `k`; an
/// increasing permutation only admits singletons, giving 1.
pub fn alternating_length(p: &Permutation) -> usize {
    let n = p.n();
    let t = StatTriangle::of(p);
    for k in (1..=n / 2).rev() {
        let set = DescentSet::new((1..=k).map(|r| 2 * r - 1).collect()).expect("odd positions");
        let v = ls_set_from_triangle(&t, &set);
        if v != 0 {
            return if v == 2 * k { 2 * k } else { 2 * k + 1 };
        }
    }
    1
}

/// Longest length of a subsequence whose descent word is a prefix of
/// `w^∞`. Candidate lengths are scanned downward; a length `L` is feasible
/// exactly when `ls_set` of the `(L-1)`-prefix's descent positions is at
/// least `L` (longer witnesses truncate). The empty word admits only
/// singletons.
pub fn len_word(p: &Permutation, w: &DescentWord) -> usize {
    let n = p.n();
    if w.is_empty() {
        return 1;
    }
    let t = StatTriangle::of(p);
    for len in (2..=n).rev() {
        let set = w.periodic_descent_set(len - 1);
        if ls_set_from_triangle(&t, &set) >= len {
            return len;
        }
    }
    1
}

/// True when some subsequence of length `len(w) + 1` has descent word
/// exactly `w`; reduces to `ls_set(descent positions of w) >= len(w) + 1`.
pub fn has_descent_word(p: &Permutation, w: &DescentWord) -> bool {
    if w.is_empty() {
        return true;
    }
    ls_set(p, &w.descent_positions()) >= w.len() + 1
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, StatsError> {
        if parts.is_empty() {
            return Err(StatsError::EmptyComposition);
        }
        if parts.contains(&0) {
            return Err(StatsError::ZeroPart);
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The set `D_c`: cut `[1, c_1 + ... + c_k]` into consecutive blocks of
    /// the part lengths; blocks alternate and the last block is descents.
    pub fn to_descents(&self) -> DescentSet {
        let k = self.parts.len();
        let mut positions = Vec::new();
        let mut offset = 0;
        for (idx, &part) in self.parts.iter().enumerate() {
            if (idx + 1) % 2 == k % 2 {
                positions.extend(offset + 1..=offset + part);
            }
            offset += part;
        }
        DescentSet::new(positions).expect("positions start at 1")
    }

    /// Inverse of [`Composition::to_descents`]: run lengths of membership in
    /// `set` over `1..=max(set)`. `None` for the empty set, which no
    /// composition encodes.
    pub fn from_descents(set: &DescentSet) -> Option<Composition> {
        let max = set.max()?;
        let mut parts = Vec::new();
        let mut run = 1usize;
        for i in 2..=max {
            if set.contains(i) == set.contains(i - 1) {
                run += 1;
            } else {
                parts.push(run);
                run = 1;
            }
        }
        parts.push(run);
        Some(Composition { parts })
    }
}

impl DescentWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        DescentWord { letters }
    }

    /// The descent word of a sequence: `D` where it falls, `U` where it
    /// rises. A one-letter sequence has the empty word.
    pub fn of_slice(entries: &[usize]) -> Self {
        let letters = entries
            .windows(2)
            .map(|w| if w[0] > w[1] { Letter::D } else { Letter::U })
            .collect();
        DescentWord { letters }
    }

    pub fn of_word(w: &Word) -> Self {
        Self::of_slice(w.entries())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Positions carrying `D`, as a descent set.
    pub fn descent_positions(&self) -> DescentSet {
        let positions = self
            .letters
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == Letter::D)
            .map(|(i, _)| i + 1)
            .collect();
        DescentSet::new(positions).expect("positions start at 1")
    }

    /// Descent positions of the length-`m` prefix of `w^∞`.
    pub fn periodic_descent_set(&self, m: usize) -> DescentSet {
        assert!(!self.letters.is_empty());
        let positions = (1..=m)
            .filter(|&i| self.letters[(i - 1) % self.letters.len()] == Letter::D)
            .collect();
        DescentSet::new(positions).expect("positions start at 1")
    }
}

impl FromStr for DescentWord {
    type Err = StatsError;

    fn from_str(s: &str) -> Result<Self, StatsError> {
        let letters = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' => Ok(Letter::U),
                'D' => Ok(Letter::D),
                other => Err(StatsError::InvalidLetter(other)),
            })
            .collect::<Result<_, _>>()?;
        Ok(DescentWord { letters })
    }
}

impl fmt::Display for DescentWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            match l {
                Letter::U => write!(f, "U")?,
                Letter::D => write!(f, "D")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = StatsError;

    fn from_str(s: &str) -> Result<Self, StatsError> {
        let parts = s
            .trim()
            .split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| StatsError::InvalidToken(t.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Composition::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
