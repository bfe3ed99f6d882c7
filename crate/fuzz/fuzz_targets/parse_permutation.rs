#![no_main]
//! Fuzz the permutation parser, then push accepted inputs through the
//! tableau pipeline. Parsing must never panic; small accepted permutations
//! must satisfy the core identities.

use libfuzzer_sys::fuzz_target;

use descentkit::growth::{evacuate, stat_triangle, GrowthDiagram};
use descentkit::perm::Permutation;
use descentkit::rsk::rsk;
use descentkit::stats::ls_set;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(p) = text.parse::<Permutation>() else {
        return;
    };
    if p.n() > 9 {
        return;
    }
    let pair = rsk(&p);
    assert_eq!(pair.recording.descent_set(), p.descent_set());
    assert_eq!(evacuate(&evacuate(&pair.recording)), pair.recording);
    assert!(GrowthDiagram::from_permutation(&p).audit_local_rule().is_none());
    let t = stat_triangle(&p);
    for i in 1..=p.n() {
        assert_eq!(t.get(i, i), (1, 1));
    }
    // The whole permutation witnesses its own descent set.
    assert_eq!(ls_set(&p, &p.descent_set()), p.n());
});
