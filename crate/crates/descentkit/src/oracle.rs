//! Exponential-time reference implementations used as ground truth.
//!
//! Everything here is written for obviousness, not speed: plain subset
//! enumeration, quadratic subsequence scans, and no shared state with the
//! fast paths it cross-checks. The only inputs from the rest of the crate
//! are the domain types.

use thiserror::Error;

use crate::perm::{DescentSet, Permutation};
use crate::stats::{DescentWord, Letter, StatTriangle};

/// Per-permutation table of `max { #I | Des(π_I) = D }` for every
/// `D ⊆ [n-1]`, keyed by bitmask, plus the byproduct `max { #I | ds(π_I) <= k }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LsProfile {
    n: usize,
    by_set: Vec<u32>,
    max_len_by_lds: Vec<u32>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("size {n} exceeds the brute-force guard {max}")]
    GuardExceeded { n: usize, max: usize },
}

/// Default guard for the `2^n` subset enumerations.
pub const BRUTE_FORCE_MAX_N: usize = 20;

impl LsProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Max subsequence length with descent set exactly `set`; 0 if none.
    pub fn ls_set(&self, set: &DescentSet) -> usize {
        if !set.fits(self.n) {
            return 0;
        }
        self.by_set[set.to_mask() as usize] as usize
    }

    pub fn ls_set_mask(&self, mask: u64) -> usize {
        self.by_set[mask as usize] as usize
    }

    /// Max subsequence length with exactly `d` descents.
    pub fn ls_d(&self, d: usize) -> usize {
        self.by_set
            .iter()
            .enumerate()
            .filter(|(mask, _)| mask.count_ones() as usize == d)
            .map(|(_, &len)| len as usize)
            .max()
            .unwrap_or(0)
    }

    /// Max subsequence length whose longest decreasing subsequence is at
    /// most `k`; equals Greene's `is_k`.
    pub fn is_k(&self, k: usize) -> usize {
        self.max_len_by_lds[k.min(self.n)] as usize
    }

    /// All values, indexed by descent-set bitmask.
    pub fn values(&self) -> &[u32] {
        &self.by_set
    }
}

fn quadratic_lds(entries: &[usize]) -> usize {
    let mut best = vec![0usize; entries.len()];
    let mut overall = 0;
    for i in 0..entries.len() {
        best[i] = 1;
        for j in 0..i {
            if entries[j] > entries[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
        overall = overall.max(best[i]);
    }
    overall
}

/// Enumerates all `2^n` index subsets of `π`, recording the maximum
/// subsequence length per exact descent set and per `lds` bound.
pub fn brute_profile(p: &Permutation) -> Result<LsProfile, OracleError> {
    brute_profile_with_guard(p, BRUTE_FORCE_MAX_N)
}

pub fn brute_profile_with_guard(p: &Permutation, max: usize) -> Result<LsProfile, OracleError> {
    let n = p.n();
    if n > max {
        return Err(OracleError::GuardExceeded { n, max });
    }
    let entries = p.entries();
    let mut by_set = vec![0u32; 1 << (n - 1)];
    let mut max_len_by_lds = vec![0u32; n + 1];
    let mut sub: Vec<usize> = Vec::with_capacity(n);
    for subset in 1u64..1 << n {
        sub.clear();
        for (pos, &v) in entries.iter().enumerate() {
            if subset >> pos & 1 == 1 {
                sub.push(v);
            }
        }
        let mut descent_mask = 0u64;
        for (i, w) in sub.windows(2).enumerate() {
            if w[0] > w[1] {
                descent_mask |= 1 << i;
            }
        }
        let len = sub.len() as u32;
        let slot = &mut by_set[descent_mask as usize];
        *slot = (*slot).max(len);
        let lds = quadratic_lds(&sub);
        for k in lds..=n {
            max_len_by_lds[k] = max_len_by_lds[k].max(len);
        }
    }
    Ok(LsProfile {
        n,
        by_set,
        max_len_by_lds,
    })
}

/// Max length over all subsequences whose descent word is a prefix of
/// `w^∞`, by direct enumeration. An empty `w` admits only singletons.
pub fn brute_len_word(p: &Permutation, w: &DescentWord) -> Result<usize, OracleError> {
    brute_len_word_with_guard(p, w, BRUTE_FORCE_MAX_N)
}

pub fn brute_len_word_with_guard(
    p: &Permutation,
    w: &DescentWord,
    max: usize,
) -> Result<usize, OracleError> {
    let n = p.n();
    if n > max {
        return Err(OracleError::GuardExceeded { n, max });
    }
    let entries = p.entries();
    let letters = w.letters();
    let mut best = 0usize;
    let mut sub: Vec<usize> = Vec::with_capacity(n);
    'subset: for subset in 1u64..1 << n {
        sub.clear();
        for (pos, &v) in entries.iter().enumerate() {
            if subset >> pos & 1 == 1 {
                sub.push(v);
            }
        }
        if sub.len() <= best {
            continue;
        }
        for (i, pair) in sub.windows(2).enumerate() {
            if letters.is_empty() {
                continue 'subset;
            }
            let expected = letters[i % letters.len()];
            let actual = if pair[0] > pair[1] { Letter::D } else { Letter::U };
            if expected != actual {
                continue 'subset;
            }
        }
        best = sub.len();
    }
    Ok(best)
}

/// Recovers the `(is, ds)` triangle from `ls_set` values alone. For the
/// window `[i, j]` the `is` entry is the largest `k` such that `π` has a
/// subsequence with descent word `w x1 U^{k-1} x2 v`, where `w` and `v` are
/// the descent words of the untouched prefix `π(1)..π(i-1)` and suffix
/// `π(j+1)..π(n)`, `x1, x2` range over both letters, and the boundary
/// letters are omitted at the ends; `ds` uses `D^{k-1}`.
pub fn reconstruct_triangle_from_profile(p: &Permutation, profile: &LsProfile) -> StatTriangle {
    let n = p.n();
    let entries = p.entries();
    let mut pairs = Vec::with_capacity(n * (n + 1) / 2);
    for i in 1..=n {
        for j in i..=n {
            let prefix_word = DescentWord::of_slice(&entries[..i - 1]);
            let suffix_word = DescentWord::of_slice(&entries[j..]);
            let is_entry = largest_run(profile, &prefix_word, &suffix_word, i, j, n, Letter::U);
            let ds_entry = largest_run(profile, &prefix_word, &suffix_word, i, j, n, Letter::D);
            pairs.push((is_entry, ds_entry));
        }
    }
    StatTriangle::from_pairs(n, pairs)
}

fn largest_run(
    profile: &LsProfile,
    prefix: &DescentWord,
    suffix: &DescentWord,
    i: usize,
    j: usize,
    n: usize,
    run_letter: Letter,
) -> usize {
    let x1_choices: &[Option<Letter>] = if i == 1 {
        &[None]
    } else {
        &[Some(Letter::U), Some(Letter::D)]
    };
    let x2_choices: &[Option<Letter>] = if j == n {
        &[None]
    } else {
        &[Some(Letter::U), Some(Letter::D)]
    };
    for k in (1..=j - i + 1).rev() {
        for &x1 in x1_choices {
            for &x2 in x2_choices {
                let mut letters: Vec<Letter> = prefix.letters().to_vec();
                letters.extend(x1);
                letters.extend(std::iter::repeat_n(run_letter, k - 1));
                letters.extend(x2);
                letters.extend_from_slice(suffix.letters());
                let word = DescentWord::new(letters);
                let needed = word.len() + 1;
                if profile.ls_set(&word.descent_positions()) >= needed {
                    return k;
                }
            }
        }
    }
    unreachable!("k = 1 is always realizable for a nonempty window")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::permutations;
    use crate::stats;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(positions: &[usize]) -> DescentSet {
        DescentSet::new(positions.to_vec()).unwrap()
    }

    fn quadratic_lis(entries: &[usize]) -> usize {
        let mut best = vec![0usize; entries.len()];
        let mut overall = 0;
        for i in 0..entries.len() {
            best[i] = 1;
            for j in 0..i {
                if entries[j] < entries[i] {
                    best[i] = best[i].max(best[j] + 1);
                }
            }
            overall = overall.max(best[i]);
        }
        overall
    }

    #[test]
    fn profile_examples() {
        let profile = brute_profile(&p("42783561")).unwrap();
        assert_eq!(profile.ls_set(&set(&[3])), 6);
        assert_eq!(profile.ls_set(&set(&[1, 2, 3])), 0);
        assert_eq!(profile.ls_set(&set(&[1, 3, 4])), 5);

        let id = Permutation::identity(5);
        let profile = brute_profile(&id).unwrap();
        assert_eq!(profile.ls_set(&DescentSet::empty()), 5);
        for mask in 1u64..1 << 4 {
            assert_eq!(profile.ls_set_mask(mask), 0);
        }

        assert_eq!(brute_profile(&p("1573426")).unwrap().ls_d(1), 6);
    }

    #[test]
    fn profile_value_shape() {
        for q in permutations(5) {
            let profile = brute_profile(&q).unwrap();
            assert!(profile.ls_set(&DescentSet::empty()) >= 1);
            for mask in 0u64..1 << 4 {
                let v = profile.ls_set_mask(mask);
                assert!(v <= q.n());
                let d = DescentSet::from_mask(mask);
                if v != 0 {
                    if let Some(m) = d.max() {
                        assert!(v >= m + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn guard_is_enforced() {
        let q = Permutation::identity(6);
        assert_eq!(
            brute_profile_with_guard(&q, 5),
            Err(OracleError::GuardExceeded { n: 6, max: 5 })
        );
    }

    #[test]
    fn len_word_examples() {
        let q = p("31452867");
        assert_eq!(brute_len_word(&q, &"UUD".parse().unwrap()), Ok(6));
        for q in permutations(5) {
            assert_eq!(
                brute_len_word(&q, &"U".parse().unwrap()).unwrap(),
                quadratic_lis(q.entries())
            );
        }
        assert_eq!(brute_len_word(&p("1573426"), &"DU".parse().unwrap()), Ok(5));
    }

    #[test]
    fn is_k_matches_greene() {
        for q in permutations(6) {
            let profile = brute_profile(&q).unwrap();
            for k in 1..=3 {
                assert_eq!(profile.is_k(k), crate::rsk::greene_sums(&q, k));
            }
        }
    }

    #[test]
    fn reconstruction_examples() {
        let q = p("314526");
        let profile = brute_profile(&q).unwrap();
        let triangle = reconstruct_triangle_from_profile(&q, &profile);
        assert_eq!(triangle.get(2, 5), (3, 2));
        for i in 1..=q.n() {
            assert_eq!(triangle.get(i, i), (1, 1));
        }

        let q = p("3247516");
        let profile = brute_profile(&q).unwrap();
        assert_eq!(
            reconstruct_triangle_from_profile(&q, &profile),
            stats::StatTriangle::of(&q)
        );
    }
}
