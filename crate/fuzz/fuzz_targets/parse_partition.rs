#![no_main]
//! Fuzz the partition parser; accepted small shapes must satisfy the
//! conjugation and counting identities.

use libfuzzer_sys::fuzz_target;

use descentkit::tableau::{enumerate_syt, Partition};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(shape) = text.parse::<Partition>() else {
        return;
    };
    assert_eq!(shape.conjugate().conjugate(), shape);
    assert_eq!(shape.conjugate().size(), shape.size());
    if shape.size() <= 10 {
        let count = shape.syt_count();
        assert_eq!(shape.conjugate().syt_count(), count);
        let listed = enumerate_syt(&shape, 10).expect("within cap");
        assert_eq!(listed.len().to_string(), count.to_string());
        let _ = shape.ssyt_count(3);
    }
});
