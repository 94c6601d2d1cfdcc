#![no_main]

use libfuzzer_sys::fuzz_target;
use superch::render;

fuzz_target!(|s: &str| {
    if let Ok(id) = render::from_json(s) {
        assert_eq!(render::from_json(&render::to_json(&id)).unwrap(), id);
    }
});
