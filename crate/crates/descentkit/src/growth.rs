//! Fomin evacuation growth diagrams.
//!
//! A diagram for a size-`n` recording tableau is a triangle of partitions
//! `Λ_{i,j}` for `0 <= i <= j <= n`, with the matrix indexing of the usual
//! diamond picture rotated 45 degrees clockwise. The top chain `Λ_{0,j}`
//! encodes the tableau, the diagonal `Λ_{i,i}` is empty, and every interior
//! cell is the partition sandwiched between its neighbours that differs from
//! `Λ_{i-1,j-1}` whenever two choices exist. The right edge encodes the
//! evacuation tableau, and `Λ_{i-1,j}` is the RSK shape of the factor
//! `π(i)..π(j)`.

use thiserror::Error;

use crate::perm::Permutation;
use crate::rsk::rsk;
use crate::stats::StatTriangle;
use crate::tableau::{Partition, PartitionChain, StandardTableau};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthDiagram {
    n: usize,
    /// Row-major triangle: row `i` holds `Λ_{i,i} ..= Λ_{i,n}`.
    cells: Vec<Partition>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GrowthError {
    #[error("window ({i},{j}) out of range for size {n}")]
    WindowOutOfRange { i: usize, j: usize, n: usize },
}

/// The at most two partitions `ν` with `μ ⊂ ν ⊂ κ` when `|κ| = |μ| + 2`.
fn sandwich_candidates(mu: &Partition, kappa: &Partition) -> Vec<Partition> {
    debug_assert_eq!(kappa.size(), mu.size() + 2);
    debug_assert!(kappa.contains(mu));
    let mut out = Vec::with_capacity(2);
    for r in 1..=kappa.num_parts() {
        if mu.part(r) < kappa.part(r) {
            if let Some(nu) = mu.with_box_in_row(r) {
                out.push(nu);
            }
        }
    }
    out
}

impl GrowthDiagram {
    /// Builds the diagram of a standard tableau; deterministic.
    pub fn from_tableau(q: &StandardTableau) -> Self {
        let n = q.size();
        let top: Vec<Partition> = q.chain_encode().partitions().to_vec();
        let mut cells: Vec<Partition> = Vec::with_capacity((n + 1) * (n + 2) / 2);
        cells.extend(top);
        for i in 1..=n {
            let row_start = cells.len();
            cells.push(Partition::empty());
            for j in i + 1..=n {
                let mu = cells[row_start + (j - 1 - i)].clone();
                let kappa = Self::cell_at(&cells, n, i - 1, j).clone();
                let diagonal = Self::cell_at(&cells, n, i - 1, j - 1).clone();
                let mut candidates = sandwich_candidates(&mu, &kappa);
                let chosen = match candidates.len() {
                    1 => candidates.pop().unwrap(),
                    2 => {
                        let other = candidates.iter().position(|c| *c != diagonal);
                        match other {
                            Some(idx) => candidates.swap_remove(idx),
                            // Both differ from the diagonal cannot happen:
                            // the diagonal is always a sandwich partition.
                            None => unreachable!("diagonal must be one of two candidates"),
                        }
                    }
                    k => unreachable!("{k} sandwich candidates"),
                };
                cells.push(chosen);
            }
        }
        GrowthDiagram { n, cells }
    }

    /// Builds the diagram of `Q(π)`.
    pub fn from_permutation(p: &Permutation) -> Self {
        Self::from_tableau(&rsk(p).recording)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn index(n: usize, i: usize, j: usize) -> usize {
        debug_assert!(i <= j && j <= n);
        // Row i starts after rows 0..i of lengths (n+1-t).
        i * (n + 1) - (i * i - i) / 2 + (j - i)
    }

    fn cell_at(cells: &[Partition], n: usize, i: usize, j: usize) -> &Partition {
        &cells[Self::index(n, i, j)]
    }

    /// The partition `Λ_{i,j}`, `0 <= i <= j <= n`.
    pub fn cell(&self, i: usize, j: usize) -> &Partition {
        assert!(i <= j && j <= self.n, "cell ({i},{j}) out of range");
        Self::cell_at(&self.cells, self.n, i, j)
    }

    /// The top chain `(Λ_{0,j})_j`, which encodes the source tableau.
    pub fn top_chain(&self) -> PartitionChain {
        let chain = (0..=self.n).map(|j| self.cell(0, j).clone()).collect();
        PartitionChain::new(chain).expect("top chain is a valid chain")
    }

    /// The right edge `(Λ_{n-i,n})_i`, which encodes the evacuation tableau.
    pub fn evacuation_chain(&self) -> PartitionChain {
        let chain = (0..=self.n).map(|i| self.cell(self.n - i, self.n).clone()).collect();
        PartitionChain::new(chain).expect("right edge is a valid chain")
    }

    /// `Λ_{i-1,j}` for a one-based window `[i, j]`: the RSK shape of the
    /// factor `π(i)..π(j)` when the diagram was built from `Q(π)`.
    pub fn factor_shape(&self, i: usize, j: usize) -> Result<&Partition, GrowthError> {
        if i == 0 || i > j || j > self.n {
            return Err(GrowthError::WindowOutOfRange { i, j, n: self.n });
        }
        Ok(self.cell(i - 1, j))
    }

    /// Checks the local rule at every interior cell: the cell is a sandwich
    /// partition and differs from its diagonal predecessor whenever two
    /// sandwich partitions exist. Returns the first offending cell.
    pub fn audit_local_rule(&self) -> Option<(usize, usize)> {
        for i in 1..=self.n {
            if !self.cell(i, i).parts().is_empty() {
                return Some((i, i));
            }
            for j in i + 1..=self.n {
                let mu = self.cell(i, j - 1);
                let kappa = self.cell(i - 1, j);
                let diagonal = self.cell(i - 1, j - 1);
                let candidates = sandwich_candidates(mu, kappa);
                let cell = self.cell(i, j);
                let ok = match candidates.len() {
                    1 => cell == &candidates[0],
                    2 => candidates.contains(cell) && cell != diagonal,
                    _ => false,
                };
                if !ok {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// The Schützenberger involution, read off the right edge of the growth
/// diagram.
pub fn evacuate(q: &StandardTableau) -> StandardTableau {
    GrowthDiagram::from_tableau(q).evacuation_chain().decode()
}

/// The triangle of `(is, ds)` pairs of all factors `π(i)..π(j)`, read off
/// one growth diagram: first part and part count of `Λ_{i-1,j}`.
pub fn stat_triangle(p: &Permutation) -> StatTriangle {
    let diagram = GrowthDiagram::from_permutation(p);
    let n = p.n();
    let mut pairs = Vec::with_capacity(n * (n + 1) / 2);
    for i in 1..=n {
        for j in i..=n {
            let shape = diagram.cell(i - 1, j);
            pairs.push((shape.first_part(), shape.num_parts()));
        }
    }
    StatTriangle::from_pairs(n, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::permutations;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn tab(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn paper_diagram_cells() {
        let g = GrowthDiagram::from_tableau(&tab("[1 2 4][3][5]"));
        assert_eq!(g.cell(1, 5), &part("2 1 1"));
        assert_eq!(g.cell(2, 4), &part("2"));
        assert_eq!(g.cell(0, 5), &part("3 1 1"));
        for i in 0..=5 {
            assert_eq!(g.cell(i, i), &Partition::empty());
        }
        assert!(g.audit_local_rule().is_none());
    }

    #[test]
    fn single_row_tableau_has_forced_cells() {
        let g = GrowthDiagram::from_tableau(&tab("[1 2 3 4]"));
        for i in 0..=4 {
            for j in i..=4 {
                let expected = if j == i {
                    Partition::empty()
                } else {
                    Partition::new(vec![j - i]).unwrap()
                };
                assert_eq!(g.cell(i, j), &expected);
            }
        }
    }

    #[test]
    fn evacuation_examples() {
        assert_eq!(evacuate(&tab("[1 2 4][3][5]")), tab("[1 3 5][2][4]"));
        assert_eq!(evacuate(&tab("[1 2 3]")), tab("[1 2 3]"));
        assert_eq!(evacuate(&tab("[1][2][3]")), tab("[1][2][3]"));
        assert_eq!(
            evacuate(&rsk(&p("5316274")).recording).first_row(),
            &[1, 3, 5]
        );
        assert_eq!(rsk(&p("5316274")).recording.first_row(), &[1, 4, 6]);
    }

    #[test]
    fn right_edge_matches_evacuation_chain() {
        let q = rsk(&p("4365172")).recording;
        let g = GrowthDiagram::from_tableau(&q);
        assert_eq!(g.evacuation_chain(), evacuate(&q).chain_encode());
        assert_eq!(g.top_chain(), q.chain_encode());
    }

    #[test]
    fn evacuation_involution_small_sizes() {
        for n in 1..=8 {
            for shape in crate::tableau::partitions_of(n) {
                for t in crate::tableau::enumerate_syt(&shape, 12).unwrap() {
                    let e = evacuate(&t);
                    assert_eq!(e.shape(), t.shape());
                    assert_eq!(evacuate(&e), t);
                }
            }
        }
    }

    #[test]
    fn evacuation_intertwines_reverse_complement() {
        for q in permutations(7) {
            let pair = rsk(&q);
            let rc_pair = rsk(&q.reverse_complement());
            assert_eq!(evacuate(&pair.recording), rc_pair.recording);
            assert_eq!(evacuate(&pair.insertion), rc_pair.insertion);
        }
    }

    #[test]
    fn factor_shapes() {
        let g = GrowthDiagram::from_permutation(&p("34251"));
        assert_eq!(g.factor_shape(1, 5).unwrap(), &part("3 1 1"));
        assert_eq!(g.factor_shape(2, 4).unwrap(), &part("2 1"));
        assert_eq!(g.factor_shape(3, 3).unwrap(), &part("1"));
        assert_eq!(
            g.factor_shape(0, 3).unwrap_err(),
            GrowthError::WindowOutOfRange { i: 0, j: 3, n: 5 }
        );
        assert!(g.factor_shape(2, 6).is_err());
    }

    #[test]
    fn factor_shapes_match_rsk_of_factor() {
        for q in permutations(6) {
            let g = GrowthDiagram::from_permutation(&q);
            for i in 1..=q.n() {
                for j in i..=q.n() {
                    let factor = q.factor(i, j).standardize().unwrap();
                    assert_eq!(g.factor_shape(i, j).unwrap(), &rsk(&factor).shape());
                }
            }
        }
    }

    #[test]
    fn local_rule_audit_everywhere() {
        for q in permutations(6) {
            assert!(GrowthDiagram::from_permutation(&q).audit_local_rule().is_none());
        }
    }

    #[test]
    fn evac_first_row_gives_largest_start_indices() {
        // n - v_i + 1 is the largest index where an increasing subsequence
        // of length i can start; brute DP over start positions.
        for q in permutations(7) {
            let n = q.n();
            let e = q.entries();
            let mut from = vec![1usize; n];
            for s in (0..n).rev() {
                for t in s + 1..n {
                    if e[t] > e[s] {
                        from[s] = from[s].max(1 + from[t]);
                    }
                }
            }
            let evac_row = evacuate(&rsk(&q).recording).first_row().to_vec();
            for (i, &v) in evac_row.iter().enumerate() {
                let want = (1..=n).rev().find(|&s| from[s - 1] >= i + 1).unwrap();
                assert_eq!(n - v + 1, want, "perm {q} length {}", i + 1);
            }
        }
    }

    #[test]
    fn stat_triangle_examples() {
        let t = stat_triangle(&p("314526"));
        assert_eq!(t.get(2, 5), (3, 2));
        for i in 1..=6 {
            assert_eq!(t.get(i, i), (1, 1));
        }
        let t = stat_triangle(&p("3247516"));
        assert_eq!(t.get(3, 6).1, 3);
        assert_eq!(t.get(1, 7), (4, 3));
        assert_eq!(t.get(1, 3), (2, 2));
    }
}
