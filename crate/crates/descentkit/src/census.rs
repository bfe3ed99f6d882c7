//! Exhaustive enumeration experiments: the counting identities, the
//! profile/triangle equivalence classification, and the sweep harness that
//! drives every invariant suite over `S_1 ..= S_n`.
//!
//! Permutations are iterated in lexicographic order through an explicit
//! successor function, so parallel shards are reproducible contiguous rank
//! ranges and re-running a sweep yields identical reports.

use std::collections::HashMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::growth::{evacuate, stat_triangle, GrowthDiagram};
use crate::oracle::{brute_len_word, brute_profile, reconstruct_triangle_from_profile};
use crate::perm::{factorial, permutations, DescentSet, Permutation};
use crate::rsk::rsk;
use crate::stats::{
    alternating_length, has_descent_word, len_word, lis_slice, ls1_from_first_rows, ls_d_all,
    ls_d_via_growth, ls_profile, ls_set_exists, ls_set_peel, ls_singleton_formula,
    ls_singleton_good_pairs, ls_singleton_threshold, Composition, DescentWord, Letter,
    StatTriangle,
};
use crate::tableau::{enumerate_syt, partitions_of, SYT_ENUMERATION_CAP};

/// Default guard for the `n!`-scanning counting censuses.
pub const CENSUS_MAX_N: usize = 9;
/// Default guard for the `n! * 2^n` equivalence classification.
pub const EQUIVALENCE_MAX_N: usize = 7;
/// Default guard for verification sweeps.
pub const SWEEP_MAX_N: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CensusError {
    #[error("n = {n} exceeds the guard {max} for this census")]
    GuardExceeded { n: usize, max: usize },
    #[error("characterizations disagree at {perm}")]
    CharacterizationMismatch { perm: String },
}

/// A counting identity evaluated two ways.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountingIdentity {
    pub n: usize,
    pub direct: u64,
    /// Formula side, decimal-rendered exact integer.
    pub formula: String,
}

impl CountingIdentity {
    pub fn matches(&self) -> bool {
        self.direct.to_string() == self.formula
    }
}

fn guard(n: usize, max: usize) -> Result<(), CensusError> {
    if n == 0 || n > max {
        return Err(CensusError::GuardExceeded { n, max });
    }
    Ok(())
}

/// Contiguous lexicographic rank ranges covering `S_n`.
fn shard_bounds(n: usize) -> Vec<(u64, u64)> {
    let total = factorial(n);
    let shards = (rayon::current_num_threads() as u64 * 8).clamp(1, total);
    let chunk = total.div_ceil(shards);
    (0..shards)
        .map(|s| (s * chunk, ((s + 1) * chunk).min(total)))
        .filter(|(a, b)| a < b)
        .collect()
}

/// Parallel fold over `S_n` in lexicographic shards.
fn par_perm_fold<T, F, R>(n: usize, make: impl Fn() -> T + Sync, fold: F, reduce: R) -> T
where
    T: Send,
    F: Fn(&mut T, &Permutation) + Sync,
    R: Fn(T, T) -> T + Sync + Send,
{
    shard_bounds(n)
        .into_par_iter()
        .map(|(start, end)| {
            let mut acc = make();
            let mut current = Permutation::unrank(n, start);
            for _ in start..end {
                fold(&mut acc, &current);
                if let Some(next) = current.lex_successor() {
                    current = next;
                }
            }
            acc
        })
        .reduce_with(reduce)
        .unwrap_or_else(make)
}

/// `#{π ∈ S_n | asc(π) = is(π) - 1}` against `Σ_λ f^λ s_{λ'}(1^{λ_1})`.
pub fn count_asc_eq_is_minus_1(n: usize, max: usize) -> Result<CountingIdentity, CensusError> {
    guard(n, max)?;
    let direct = par_perm_fold(
        n,
        || 0u64,
        |acc, p| {
            if p.ascent_count() + 1 == lis_slice(p.entries()) {
                *acc += 1;
            }
        },
        |a, b| a + b,
    );
    let formula: BigUint = partitions_of(n)
        .iter()
        .map(|shape| shape.syt_count() * shape.conjugate().ssyt_count(shape.first_part()))
        .sum();
    Ok(CountingIdentity {
        n,
        direct,
        formula: formula.to_string(),
    })
}

/// `#{π ∈ S_n | ls_{{1}}(π) < is(π) + 1}` against `Σ_{λ ⊢ n-1} f^{λ+1} f^λ`.
/// Each permutation is classified by both characterizations (the
/// singleton-set `ls` deficit and the last first-row entry of `evac(Q)`
/// being `n`); a disagreement is an error, not a count.
pub fn count_ls1_deficient(n: usize, max: usize) -> Result<CountingIdentity, CensusError> {
    guard(n, max)?;
    let singleton = DescentSet::new(vec![1]).expect("valid position");
    let (direct, mismatch) = par_perm_fold(
        n,
        || (0u64, None::<String>),
        |acc, p| {
            let ls1 = crate::stats::ls_set(p, &singleton);
            let by_stat = ls1 < lis_slice(p.entries()) + 1;
            let evac_row = evacuate(&rsk(p).recording);
            let by_evac = *evac_row.first_row().last().unwrap() == p.n();
            if by_stat != by_evac && acc.1.is_none() {
                acc.1 = Some(p.to_string());
            }
            if by_stat {
                acc.0 += 1;
            }
        },
        |a, b| (a.0 + b.0, a.1.or(b.1)),
    );
    if let Some(perm) = mismatch {
        return Err(CensusError::CharacterizationMismatch { perm });
    }
    let formula: BigUint = partitions_of(n - 1)
        .iter()
        .map(|shape| shape.plus_one().syt_count() * shape.syt_count())
        .sum();
    Ok(CountingIdentity {
        n,
        direct,
        formula: formula.to_string(),
    })
}

/// One equivalence class of `S_n` under the full `ls_set` profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassInfo {
    pub representative: String,
    pub size: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub n: usize,
    pub by_profile: usize,
    pub by_triangle: usize,
    /// The two partitions of `S_n` are identical.
    pub identical: bool,
    pub classes: Vec<ClassInfo>,
}

/// Partitions `S_n` by brute-force `ls_set` profile and by `(is, ds)`
/// triangle, and verifies the partitions coincide.
pub fn equivalence_classes(n: usize, max: usize) -> Result<EquivalenceReport, CensusError> {
    guard(n, max)?;
    let mut profile_ids: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut triangle_ids: HashMap<Vec<(usize, usize)>, usize> = HashMap::new();
    let mut classes: Vec<ClassInfo> = Vec::new();
    let mut pairings: HashMap<usize, usize> = HashMap::new();
    let mut reverse: HashMap<usize, usize> = HashMap::new();
    let mut identical = true;
    for p in permutations(n) {
        let profile = brute_profile(&p).expect("guarded size").values().to_vec();
        let triangle = stat_triangle(&p).pairs().to_vec();
        let next_profile_id = profile_ids.len();
        let pid = *profile_ids.entry(profile).or_insert(next_profile_id);
        let next_triangle_id = triangle_ids.len();
        let tid = *triangle_ids.entry(triangle).or_insert(next_triangle_id);
        if pid == classes.len() {
            classes.push(ClassInfo {
                representative: p.to_string(),
                size: 0,
            });
        }
        classes[pid].size += 1;
        if *pairings.entry(pid).or_insert(tid) != tid {
            identical = false;
        }
        if *reverse.entry(tid).or_insert(pid) != pid {
            identical = false;
        }
    }
    Ok(EquivalenceReport {
        n,
        by_profile: profile_ids.len(),
        by_triangle: triangle_ids.len(),
        identical,
        classes,
    })
}

/// Invariant suites runnable by [`sweep_verify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    PermBasics,
    ChainRoundtrip,
    SytCount,
    RskBijection,
    GreeneOracle,
    EvacInvolution,
    EvacRc,
    FirstRowEvac,
    FactorShape,
    LocalRuleAudit,
    TriangleShape,
    LsdOracle,
    LsSetOracle,
    LsdGrowth,
    LsSetPeel,
    LsSetExistence,
    SingletonMethods,
    LenWordOracle,
    AltOracle,
    Bounds,
    Characterization,
    CompositionRoundtrip,
    QDependence,
    ReconstructTriangle,
}

impl Check {
    pub const ALL: [Check; 24] = [
        Check::PermBasics,
        Check::ChainRoundtrip,
        Check::SytCount,
        Check::RskBijection,
        Check::GreeneOracle,
        Check::EvacInvolution,
        Check::EvacRc,
        Check::FirstRowEvac,
        Check::FactorShape,
        Check::LocalRuleAudit,
        Check::TriangleShape,
        Check::LsdOracle,
        Check::LsSetOracle,
        Check::LsdGrowth,
        Check::LsSetPeel,
        Check::LsSetExistence,
        Check::SingletonMethods,
        Check::LenWordOracle,
        Check::AltOracle,
        Check::Bounds,
        Check::Characterization,
        Check::CompositionRoundtrip,
        Check::QDependence,
        Check::ReconstructTriangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::PermBasics => "perm-basics",
            Check::ChainRoundtrip => "chain-roundtrip",
            Check::SytCount => "syt-count",
            Check::RskBijection => "rsk-bijection",
            Check::GreeneOracle => "greene-oracle",
            Check::EvacInvolution => "evac-involution",
            Check::EvacRc => "evac-rc",
            Check::FirstRowEvac => "first-row-evac",
            Check::FactorShape => "factor-shape",
            Check::LocalRuleAudit => "local-rule-audit",
            Check::TriangleShape => "triangle-shape",
            Check::LsdOracle => "lsd-oracle",
            Check::LsSetOracle => "lsD-oracle",
            Check::LsdGrowth => "lsd-growth",
            Check::LsSetPeel => "lsD-peel",
            Check::LsSetExistence => "lsD-existence",
            Check::SingletonMethods => "singleton-methods",
            Check::LenWordOracle => "len-w-oracle",
            Check::AltOracle => "alt-oracle",
            Check::Bounds => "bounds",
            Check::Characterization => "characterization",
            Check::CompositionRoundtrip => "composition-roundtrip",
            Check::QDependence => "q-dependence",
            Check::ReconstructTriangle => "reconstruct-triangle",
        }
    }

    pub fn from_name(name: &str) -> Option<Check> {
        Check::ALL.iter().copied().find(|c| c.name() == name)
    }
}

/// One `(check, n)` sweep outcome. `population` counts the objects scanned;
/// at most five counterexamples are retained.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub n: usize,
    pub population: u64,
    pub failure_count: u64,
    pub failures: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub max_n: usize,
    pub results: Vec<CheckResult>,
}

impl SweepReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(CheckResult::passed)
    }
}

const FAILURE_KEEP: usize = 5;

#[derive(Default)]
struct Failures {
    count: u64,
    kept: Vec<String>,
}

impl Failures {
    fn push(&mut self, message: String) {
        self.count += 1;
        if self.kept.len() < FAILURE_KEEP {
            self.kept.push(message);
        }
    }

    fn merge(mut self, other: Failures) -> Failures {
        self.count += other.count;
        for m in other.kept {
            if self.kept.len() < FAILURE_KEEP {
                self.kept.push(m);
            }
        }
        self
    }
}

/// Runs the selected suites over `S_1 ..= S_max_n`. Failures are data in the
/// report, not errors.
pub fn sweep_verify(max_n: usize, checks: &[Check], max: usize) -> Result<SweepReport, CensusError> {
    guard(max_n, max)?;
    let mut results = Vec::new();
    for &check in checks {
        for n in 1..=max_n {
            results.push(run_check(check, n));
        }
    }
    Ok(SweepReport { max_n, results })
}

fn scan_perms<F>(n: usize, f: F) -> (u64, Failures)
where
    F: Fn(&Permutation, &mut Failures) + Sync,
{
    let failures = par_perm_fold(
        n,
        Failures::default,
        |acc, p| f(p, acc),
        Failures::merge,
    );
    (factorial(n), failures)
}

fn run_check(check: Check, n: usize) -> CheckResult {
    let (population, failures) = dispatch_check(check, n);
    CheckResult {
        check: check.name().to_string(),
        n,
        population,
        failure_count: failures.count,
        failures: failures.kept,
    }
}

/// All descent words of length `1..=max_len`.
fn all_words(max_len: usize) -> Vec<DescentWord> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        for mask in 0u32..1 << len {
            let letters = (0..len)
                .map(|i| if mask >> i & 1 == 1 { Letter::D } else { Letter::U })
                .collect();
            out.push(DescentWord::new(letters));
        }
    }
    out
}

fn dispatch_check(check: Check, n: usize) -> (u64, Failures) {
    match check {
        Check::PermBasics => scan_perms(n, |p, fails| {
            if p.descent_count() + p.ascent_count() != n - 1 {
                fails.push(format!("des+asc != n-1 at {p}"));
            }
            if p.reverse_complement().reverse_complement() != *p {
                fails.push(format!("rc not an involution at {p}"));
            }
            let mut reflected: Vec<usize> =
                p.descent_set().positions().iter().map(|&i| n - i).collect();
            reflected.sort_unstable();
            if p.reverse_complement().descent_set().positions() != reflected {
                fails.push(format!("Des(rc) mismatch at {p}"));
            }
            if DescentWord::of_slice(p.entries()).descent_positions() != p.descent_set() {
                fails.push(format!("descent word/set disagree at {p}"));
            }
        }),
        Check::ChainRoundtrip => {
            let mut fails = Failures::default();
            let mut population = 0;
            for shape in partitions_of(n) {
                for t in enumerate_syt(&shape, SYT_ENUMERATION_CAP).expect("guarded") {
                    population += 1;
                    if t.chain_encode().decode() != t {
                        fails.push(format!("chain roundtrip failed at {t}"));
                    }
                }
            }
            (population, fails)
        }
        Check::SytCount => {
            let mut fails = Failures::default();
            let mut population = 0;
            let mut square_sum = BigUint::ZERO;
            for shape in partitions_of(n) {
                population += 1;
                let count = shape.syt_count();
                square_sum += &count * &count;
                let listed = enumerate_syt(&shape, SYT_ENUMERATION_CAP).expect("guarded").len();
                if BigUint::from(listed as u64) != count {
                    fails.push(format!("enumeration disagrees with f^λ at {shape}"));
                }
                if shape.conjugate().syt_count() != count {
                    fails.push(format!("f^λ != f^λ' at {shape}"));
                }
            }
            if square_sum != BigUint::from(factorial(n)) {
                fails.push(format!("sum of (f^λ)^2 != {n}!"));
            }
            (population, fails)
        }
        Check::RskBijection => {
            let mut fails = Failures::default();
            let mut seen = std::collections::HashSet::new();
            let mut population = 0u64;
            for p in permutations(n) {
                population += 1;
                let pair = rsk(&p);
                if pair.recording.descent_set() != p.descent_set() {
                    fails.push(format!("Des(Q) != Des(π) at {p}"));
                }
                let chain = pair.recording.chain_encode();
                for m in 1..=n {
                    let prefix = p.factor(1, m).standardize().unwrap();
                    if rsk(&prefix).shape() != chain.partitions()[m] {
                        fails.push(format!("prefix shape mismatch at {p} m={m}"));
                    }
                }
                if !seen.insert((pair.insertion, pair.recording)) {
                    fails.push(format!("pair collision at {p}"));
                }
            }
            (population, fails)
        }
        Check::GreeneOracle => scan_perms(n, |p, fails| {
            let profile = brute_profile(p).expect("guarded size");
            for k in 1..=3usize.min(n) {
                if crate::rsk::greene_sums(p, k) != profile.is_k(k) {
                    fails.push(format!("is_{k} mismatch at {p}"));
                }
            }
        }),
        Check::EvacInvolution => {
            let mut fails = Failures::default();
            let mut population = 0;
            for shape in partitions_of(n) {
                for t in enumerate_syt(&shape, SYT_ENUMERATION_CAP).expect("guarded") {
                    population += 1;
                    let e = evacuate(&t);
                    if e.shape() != t.shape() || evacuate(&e) != t {
                        fails.push(format!("evacuation not an involution at {t}"));
                    }
                }
            }
            (population, fails)
        }
        Check::EvacRc => scan_perms(n, |p, fails| {
            let pair = rsk(p);
            let rc_pair = rsk(&p.reverse_complement());
            if evacuate(&pair.recording) != rc_pair.recording {
                fails.push(format!("evac(Q) != Q(rc) at {p}"));
            }
            if evacuate(&pair.insertion) != rc_pair.insertion {
                fails.push(format!("evac(P) != P(rc) at {p}"));
            }
        }),
        Check::FirstRowEvac => scan_perms(n, |p, fails| {
            let entries = p.entries();
            let mut from = vec![1usize; n];
            for s in (0..n).rev() {
                for t in s + 1..n {
                    if entries[t] > entries[s] {
                        from[s] = from[s].max(1 + from[t]);
                    }
                }
            }
            let row = evacuate(&rsk(p).recording).first_row().to_vec();
            for (i, &v) in row.iter().enumerate() {
                let want = (1..=n).rev().find(|&s| from[s - 1] >= i + 1);
                if want != Some(n - v + 1) {
                    fails.push(format!("largest-start mismatch at {p} i={}", i + 1));
                }
            }
        }),
        Check::FactorShape => scan_perms(n, |p, fails| {
            let g = GrowthDiagram::from_permutation(p);
            for i in 1..=n {
                for j in i..=n {
                    let factor = p.factor(i, j).standardize().unwrap();
                    if g.factor_shape(i, j).expect("in range") != &rsk(&factor).shape() {
                        fails.push(format!("factor shape mismatch at {p} [{i},{j}]"));
                    }
                }
            }
        }),
        Check::LocalRuleAudit => scan_perms(n, |p, fails| {
            if let Some((i, j)) = GrowthDiagram::from_permutation(p).audit_local_rule() {
                fails.push(format!("local rule violated at {p} cell ({i},{j})"));
            }
        }),
        Check::TriangleShape => scan_perms(n, |p, fails| {
            let t = StatTriangle::of(p);
            for i in 1..=n {
                if t.get(i, i) != (1, 1) {
                    fails.push(format!("diagonal not (1,1) at {p}"));
                }
                for j in i..=n {
                    let (a, b) = t.get(i, j);
                    let len = j - i + 1;
                    if a < 1 || b < 1 || a > len || b > len || a + b > len + 2 {
                        fails.push(format!("entry bounds violated at {p} ({i},{j})"));
                    }
                    if j < n {
                        let (a2, b2) = t.get(i, j + 1);
                        if a2 < a || b2 < b {
                            fails.push(format!("row monotonicity violated at {p} ({i},{j})"));
                        }
                    }
                    if i > 1 {
                        let (a2, b2) = t.get(i - 1, j);
                        if a2 < a || b2 < b {
                            fails.push(format!("column monotonicity violated at {p} ({i},{j})"));
                        }
                    }
                }
            }
        }),
        Check::LsdOracle => scan_perms(n, |p, fails| {
            let profile = brute_profile(p).expect("guarded size");
            let all = ls_d_all(p);
            for d in 0..n {
                if all[d] != profile.ls_d(d) {
                    fails.push(format!("ls_{d} mismatch at {p}"));
                }
            }
        }),
        Check::LsSetOracle => scan_perms(n, |p, fails| {
            let profile = brute_profile(p).expect("guarded size");
            let algo = ls_profile(p);
            for mask in 0..1u64 << (n - 1) {
                if algo[mask as usize] != profile.ls_set_mask(mask) {
                    fails.push(format!(
                        "ls_set mismatch at {p} D={}",
                        DescentSet::from_mask(mask)
                    ));
                }
            }
        }),
        Check::LsdGrowth => scan_perms(n, |p, fails| {
            let all = ls_d_all(p);
            for d in 0..=p.descent_count() {
                if ls_d_via_growth(p, d) != all[d] {
                    fails.push(format!("growth break-up mismatch at {p} d={d}"));
                }
            }
        }),
        Check::LsSetPeel => scan_perms(n, |p, fails| {
            let profile = brute_profile(p).expect("guarded size");
            for mask in 0..1u64 << (n - 1) {
                let truth = profile.ls_set_mask(mask);
                if truth == 0 {
                    continue;
                }
                let set = DescentSet::from_mask(mask);
                if ls_set_peel(p, &set) != Ok(truth) {
                    fails.push(format!("peel mismatch at {p} D={set}"));
                }
            }
        }),
        Check::LsSetExistence => scan_perms(n, |p, fails| {
            let profile = brute_profile(p).expect("guarded size");
            for mask in 1..1u64 << (n - 1) {
                let set = DescentSet::from_mask(mask);
                if ls_set_exists(p, &set) != (profile.ls_set_mask(mask) != 0) {
                    fails.push(format!("existence mismatch at {p} D={set}"));
                }
            }
        }),
        Check::SingletonMethods => scan_perms(n, |p, fails| {
            let profile = brute_profile(p).expect("guarded size");
            let ls1 = if n == 1 { 0 } else { ls_d_all(p)[1] };
            if ls1_from_first_rows(p) != ls1 {
                fails.push(format!("first-row ls_1 mismatch at {p}"));
            }
            for i in 1..n {
                let truth = profile.ls_set(&DescentSet::new(vec![i]).unwrap());
                if ls_singleton_good_pairs(p, i) != truth {
                    fails.push(format!("good-pair mismatch at {p} i={i}"));
                }
                if truth != 0 && ls_singleton_formula(p, i) != Ok(truth) {
                    fails.push(format!("singleton formula mismatch at {p} i={i}"));
                }
                if !p.is_identity() {
                    match ls_singleton_threshold(p, i).expect("non-identity") {
                        Some(lower) => {
                            if truth == 0 || truth < lower {
                                fails.push(format!("threshold unsound at {p} i={i}"));
                            }
                        }
                        None => {
                            if truth != 0 {
                                fails.push(format!("threshold incomplete at {p} i={i}"));
                            }
                        }
                    }
                }
            }
        }),
        Check::LenWordOracle => {
            let words = all_words(4);
            scan_perms(n, move |p, fails| {
                for w in &words {
                    let fast = len_word(p, w);
                    let slow = brute_len_word(p, w).expect("guarded size");
                    if fast != slow {
                        fails.push(format!("len_w mismatch at {p} w={w}"));
                    }
                    // Direct witness scan for exact-word membership.
                    let exists = has_word_brute(p, w);
                    if has_descent_word(p, w) != exists {
                        fails.push(format!("has_descent_word mismatch at {p} w={w}"));
                    }
                }
            })
        }
        Check::AltOracle => scan_perms(n, |p, fails| {
            let dw: DescentWord = "DU".parse().unwrap();
            let brute = brute_len_word(p, &dw).expect("guarded size");
            if alternating_length(p) != brute {
                fails.push(format!("alternating length mismatch at {p}"));
            }
            if len_word(p, &dw) != brute {
                fails.push(format!("len_DU mismatch at {p}"));
            }
        }),
        Check::Bounds => scan_perms(n, |p, fails| {
            let all = ls_d_all(p);
            let des = p.descent_count();
            let asc = p.ascent_count();
            let is = lis_slice(p.entries());
            let shape = rsk(p).shape();
            for d in 0..=des {
                let v = all[d];
                if v < d + 1 {
                    fails.push(format!("ls_d < d+1 at {p} d={d}"));
                }
                if v < is + d {
                    fails.push(format!("lower bound violated at {p} d={d}"));
                }
                let greene: usize = (1..=d + 1).map(|r| shape.part(r)).sum();
                if v > greene.min(asc + d + 1) {
                    fails.push(format!("upper bound violated at {p} d={d}"));
                }
                if d > 0 && all[d - 1] >= v {
                    fails.push(format!("monotonicity violated at {p} d={d}"));
                }
            }
            for d in des + 1..n {
                if all[d] != 0 {
                    fails.push(format!("ls_d nonzero past des at {p} d={d}"));
                }
            }
        }),
        Check::Characterization => scan_perms(n, |p, fails| {
            let all = ls_d_all(p);
            let des = p.descent_count();
            let asc = p.ascent_count();
            let is = lis_slice(p.entries());
            for d in 1..=des {
                let attains = all[d] == is + d;
                if attains != (asc == is - 1) {
                    fails.push(format!("characterization fails at {p} d={d}"));
                }
                if asc == is && all[d] != is + d + 1 {
                    fails.push(format!("corollary fails at {p} d={d}"));
                }
            }
        }),
        Check::CompositionRoundtrip => {
            let mut fails = Failures::default();
            let mut population = 0u64;
            if n >= 2 {
                for mask in 1..1u64 << (n - 1) {
                    population += 1;
                    let set = DescentSet::from_mask(mask);
                    let c = Composition::from_descents(&set).expect("nonempty");
                    if c.to_descents() != set {
                        fails.push(format!("composition roundtrip failed at D={set}"));
                    }
                }
            }
            (population, fails)
        }
        Check::QDependence => {
            let mut fails = Failures::default();
            let mut by_q: HashMap<Vec<Vec<usize>>, Vec<u32>> = HashMap::new();
            let mut population = 0u64;
            for p in permutations(n) {
                population += 1;
                let profile = brute_profile(&p).expect("guarded size").values().to_vec();
                let q = rsk(&p).recording.rows().to_vec();
                if let Some(previous) = by_q.get(&q) {
                    if previous != &profile {
                        fails.push(format!("profile differs within a Q class at {p}"));
                    }
                } else {
                    by_q.insert(q, profile);
                }
            }
            (population, fails)
        }
        Check::ReconstructTriangle => scan_perms(n, |p, fails| {
            let profile = brute_profile(p).expect("guarded size");
            if reconstruct_triangle_from_profile(p, &profile) != stat_triangle(p) {
                fails.push(format!("triangle reconstruction mismatch at {p}"));
            }
        }),
    }
}

/// Exact-word membership by direct subset scan; used as the independent side
/// of the descent-word reduction check.
fn has_word_brute(p: &Permutation, w: &DescentWord) -> bool {
    let n = p.n();
    let entries = p.entries();
    let target = w.letters();
    let mut sub: Vec<usize> = Vec::with_capacity(n);
    'subset: for subset in 1u64..1 << n {
        if subset.count_ones() as usize != target.len() + 1 {
            continue;
        }
        sub.clear();
        for (pos, &v) in entries.iter().enumerate() {
            if subset >> pos & 1 == 1 {
                sub.push(v);
            }
        }
        for (i, pair) in sub.windows(2).enumerate() {
            let letter = if pair[0] > pair[1] { Letter::D } else { Letter::U };
            if letter != target[i] {
                continue 'subset;
            }
        }
        return true;
    }
    false
}
