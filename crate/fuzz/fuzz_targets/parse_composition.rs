#![no_main]
//! Fuzz the composition parser; `D_c` must invert back to the composition
//! when the positions stay in range.

use libfuzzer_sys::fuzz_target;

use descentkit::stats::Composition;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(c) = text.parse::<Composition>() else {
        return;
    };
    let total: usize = c.parts().iter().sum();
    if total <= 1 << 16 {
        let set = c.to_descents();
        assert_eq!(set.max(), Some(total));
        assert_eq!(Composition::from_descents(&set), Some(c));
    }
});
