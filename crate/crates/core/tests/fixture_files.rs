//! The files under `fixtures/` match the in-crate fixtures. Regenerate with
//! `cargo run -p whsg-core --example write_fixtures`.

use std::path::PathBuf;

use whsg::fixtures;
use whsg::structure::{load_structure, structure_to_json};
use whsg::FiniteSemigroup;

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[test]
fn structure_files_are_current() {
    for (name, s) in fixtures::named_structures().unwrap() {
        let path = dir().join(format!("{name}.whs"));
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text, structure_to_json(&s), "{name}");
        assert_eq!(structure_to_json(&load_structure(&path).unwrap()), text, "{name}");
    }
}

#[test]
fn table_files_are_current() {
    for (name, t) in fixtures::named_tables() {
        let text = std::fs::read_to_string(dir().join(format!("{name}.table.json"))).unwrap();
        assert_eq!(FiniteSemigroup::from_json(&text).unwrap(), t, "{name}");
    }
}
