#![no_main]
//! Fuzz the bracketed tableau parser; accepted tableaux must round-trip
//! through chains and evacuate to the same shape.

use libfuzzer_sys::fuzz_target;

use descentkit::growth::evacuate;
use descentkit::tableau::StandardTableau;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(t) = text.parse::<StandardTableau>() else {
        return;
    };
    let chain = t.chain_encode();
    assert_eq!(chain.decode(), t);
    assert_eq!(chain.partitions().len(), t.size() + 1);
    if t.size() <= 10 {
        let e = evacuate(&t);
        assert_eq!(e.shape(), t.shape());
        assert_eq!(evacuate(&e), t);
    }
});
