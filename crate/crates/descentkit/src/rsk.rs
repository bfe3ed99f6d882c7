//! The Robinson–Schensted correspondence for permutations: row insertion,
//! the recording tableau, and Greene's invariants `is_k`.

use crate::perm::Permutation;
use crate::tableau::{Partition, StandardTableau};

/// The insertion/recording pair `(P(π), Q(π))`; both tableaux share a shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RskPair {
    pub insertion: StandardTableau,
    pub recording: StandardTableau,
}

impl RskPair {
    pub fn shape(&self) -> Partition {
        self.insertion.shape()
    }
}

/// Row-inserts the one-line entries in order; `Q` records the box created at
/// each step. Bump positions are found by binary search within rows.
pub fn rsk(p: &Permutation) -> RskPair {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut record: Vec<Vec<usize>> = Vec::new();
    for (step, &value) in p.entries().iter().enumerate() {
        let mut carry = value;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![carry]);
                record.push(vec![step + 1]);
                break;
            }
            let row = &mut rows[r];
            let pos = row.partition_point(|&x| x < carry);
            if pos == row.len() {
                row.push(carry);
                record[r].push(step + 1);
                break;
            }
            std::mem::swap(&mut carry, &mut row[pos]);
            r += 1;
        }
    }
    RskPair {
        insertion: StandardTableau::new(rows).expect("row insertion yields an SYT"),
        recording: StandardTableau::new(record).expect("recording yields an SYT"),
    }
}

/// Greene's `is_k(π)`: the sum of the first `k` parts of the RSK shape,
/// i.e. the longest union of `k` increasing subsequences.
pub fn greene_sums(p: &Permutation, k: usize) -> usize {
    assert!(k >= 1);
    let shape = rsk(p).shape();
    (1..=k).map(|r| shape.part(r)).sum()
}

/// The first row of a recording tableau: entry `i` is the smallest index at
/// which an increasing subsequence of length `i` can end.
pub fn first_row_milestones(q: &StandardTableau) -> Vec<usize> {
    q.first_row().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::permutations;
    use std::collections::HashSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn tab(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let pair = rsk(&p("4365172"));
        assert_eq!(pair.insertion, tab("[1 2 7][3 5][4 6]"));
        assert_eq!(pair.recording, tab("[1 3 6][2 4][5 7]"));
    }

    #[test]
    fn identity_is_one_row() {
        let pair = rsk(&Permutation::identity(5));
        assert_eq!(pair.insertion, tab("[1 2 3 4 5]"));
        assert_eq!(pair.recording, tab("[1 2 3 4 5]"));
    }

    #[test]
    fn shape_of_two_increasing_runs() {
        assert_eq!(rsk(&p("234615")).shape(), "4 2".parse().unwrap());
    }

    #[test]
    fn greene_values() {
        let q = p("4365172");
        assert_eq!(greene_sums(&q, 1), 3);
        assert_eq!(greene_sums(&q, 2), 5);
        assert_eq!(greene_sums(&q, 3), 7);
        assert_eq!(greene_sums(&q, 9), 7);
        assert_eq!(greene_sums(&Permutation::identity(6), 1), 6);
        assert_eq!(greene_sums(&p("234615"), 2), 6);
    }

    #[test]
    fn milestones() {
        assert_eq!(first_row_milestones(&rsk(&p("4365172")).recording), vec![1, 3, 6]);
        assert_eq!(
            first_row_milestones(&rsk(&Permutation::identity(4)).recording),
            vec![1, 2, 3, 4]
        );
        assert_eq!(
            first_row_milestones(&rsk(&p("14567283")).recording),
            vec![1, 2, 3, 4, 5, 7]
        );
    }

    #[test]
    fn milestones_are_first_attainment_indices() {
        // u_i is the smallest m with is(π(1..m)) = i, tracked via the chain.
        for q in permutations(6) {
            let pair = rsk(&q);
            let chain = pair.recording.chain_encode();
            let mut expected = Vec::new();
            let mut best = 0;
            for m in 1..=q.n() {
                let len = chain.partitions()[m].first_part();
                if len > best {
                    best = len;
                    expected.push(m);
                }
            }
            assert_eq!(pair.recording.first_row(), expected.as_slice());
        }
    }

    #[test]
    fn descents_transfer_to_recording() {
        for q in permutations(7) {
            assert_eq!(q.descent_set(), rsk(&q).recording.descent_set());
        }
    }

    #[test]
    fn prefix_shapes_match_recording_chain() {
        for q in permutations(6) {
            let chain = rsk(&q).recording.chain_encode();
            for m in 1..=q.n() {
                let prefix = q.factor(1, m).standardize().unwrap();
                assert_eq!(&rsk(&prefix).shape(), &chain.partitions()[m]);
            }
        }
    }

    #[test]
    fn injective_on_small_sizes() {
        for n in 1..=6 {
            let mut seen = HashSet::new();
            let mut count = 0u64;
            for q in permutations(n) {
                let pair = rsk(&q);
                seen.insert((pair.insertion, pair.recording));
                count += 1;
            }
            assert_eq!(seen.len() as u64, count);
        }
    }
}
