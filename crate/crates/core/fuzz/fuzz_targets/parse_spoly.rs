#![no_main]

use libfuzzer_sys::fuzz_target;
use superch::poly::parse_spoly;

// Anything that parses must print back to an equal polynomial.
fuzz_target!(|s: &str| {
    if let Ok(p) = parse_spoly(s, 4) {
        assert_eq!(parse_spoly(&p.to_string(), 4).unwrap(), p);
    }
});
