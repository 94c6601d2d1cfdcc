#![no_main]

use libfuzzer_sys::fuzz_target;
use superch::SuperMatrix;

fuzz_target!(|s: &str| {
    if let Ok(m) = SuperMatrix::from_json(s) {
        assert_eq!(SuperMatrix::from_json(&m.to_json()).unwrap(), m);
        let _ = m.supertrace();
    }
});
