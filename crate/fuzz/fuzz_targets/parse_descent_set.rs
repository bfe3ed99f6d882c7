#![no_main]
//! Fuzz the descent-set parser; accepted sets round-trip through masks and
//! the composition encoding.

use libfuzzer_sys::fuzz_target;

use descentkit::perm::DescentSet;
use descentkit::stats::Composition;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(set) = text.parse::<DescentSet>() else {
        return;
    };
    if set.max().is_some_and(|m| m <= 64) {
        assert_eq!(DescentSet::from_mask(set.to_mask()), set);
    }
    match Composition::from_descents(&set) {
        Some(c) => assert_eq!(c.to_descents(), set),
        None => assert!(set.is_empty()),
    }
});
