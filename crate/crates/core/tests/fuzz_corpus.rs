//! Replays the checked-in fuzz seeds through the same invariants the fuzz
//! targets assert.

use std::fs;
use std::path::PathBuf;

use superch::poly::parse_spoly;
use superch::{render, Multivector, SuperMatrix};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| {
            let path = e.unwrap().path();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            (name, fs::read_to_string(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds in {}", dir.display());
    out
}

#[test]
fn polynomial_seeds() {
    for (name, s) in seeds("parse_spoly") {
        match parse_spoly(&s, 4) {
            Ok(p) => assert_eq!(parse_spoly(&p.to_string(), 4).unwrap(), p, "{name}"),
            Err(_) => assert!(
                ["bad_symbol", "zero_denominator"].contains(&name.as_str()),
                "{name} rejected"
            ),
        }
    }
}

#[test]
fn multivector_seeds() {
    for (name, s) in seeds("multivector_json") {
        match Multivector::from_json(&s) {
            Ok(m) => assert_eq!(Multivector::from_json(&m.to_json()).unwrap(), m, "{name}"),
            Err(_) => assert_ne!(name, "even", "{name} rejected"),
        }
    }
}

#[test]
fn supermatrix_seeds() {
    for (name, s) in seeds("supermatrix_json") {
        match SuperMatrix::from_json(&s) {
            Ok(m) => assert_eq!(SuperMatrix::from_json(&m.to_json()).unwrap(), m, "{name}"),
            Err(_) => assert_ne!(name, "one_one", "{name} rejected"),
        }
    }
}

#[test]
fn identity_seeds() {
    for (name, s) in seeds("identity_json") {
        match render::from_json(&s) {
            Ok(id) => assert_eq!(
                render::from_json(&render::to_json(&id)).unwrap(),
                id,
                "{name}"
            ),
            Err(_) => assert_eq!(name, "short", "{name} rejected"),
        }
    }
}
