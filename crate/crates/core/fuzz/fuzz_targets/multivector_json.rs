#![no_main]

use libfuzzer_sys::fuzz_target;
use superch::Multivector;

fuzz_target!(|s: &str| {
    if let Ok(m) = Multivector::from_json(s) {
        assert_eq!(Multivector::from_json(&m.to_json()).unwrap(), m);
    }
});
