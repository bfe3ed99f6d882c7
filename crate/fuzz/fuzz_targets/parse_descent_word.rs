#![no_main]
//! Fuzz the descent-word parser; accepted words must round-trip through
//! display and agree with their descent positions.

use libfuzzer_sys::fuzz_target;

use descentkit::stats::{DescentWord, Letter};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(w) = text.parse::<DescentWord>() else {
        return;
    };
    let reparsed: DescentWord = w.to_string().parse().expect("display output reparses");
    assert_eq!(reparsed, w);
    let positions = w.descent_positions();
    assert_eq!(
        positions.len(),
        w.letters().iter().filter(|&&l| l == Letter::D).count()
    );
    if !w.is_empty() {
        let set = w.periodic_descent_set(3 * w.len());
        assert!(set.max().is_none_or(|m| m <= 3 * w.len()));
    }
});
