//! Regenerates the files under `fixtures/` from the in-crate fixtures.
//!
//! Usage: `cargo run -p whsg-core --example write_fixtures [dir]`

use std::path::PathBuf;

use whsg::fixtures;
use whsg::structure::save_structure;

const PALINDROMES: &str = r##"{
  "alphabet": ["a", "b"],
  "nonterminals": ["O"],
  "start": "O",
  "productions": [
    ["O", ["a", "O", "a"]],
    ["O", ["b", "O", "b"]],
    ["O", ["a", "#2", "a"]],
    ["O", ["b", "#2", "b"]]
  ]
}
"##;

const UNBALANCED: &str = r##"{
  "alphabet": ["a"],
  "nonterminals": ["O"],
  "start": "O",
  "productions": [
    ["O", ["a", "O", "a"]],
    ["O", ["a", "#2", "a", "a"]]
  ]
}
"##;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"));
    std::fs::create_dir_all(&dir)?;
    for (name, s) in fixtures::named_structures()? {
        save_structure(&s, dir.join(format!("{name}.whs")))?;
    }
    for (name, t) in fixtures::named_tables() {
        std::fs::write(dir.join(format!("{name}.table.json")), t.to_json())?;
    }
    std::fs::write(dir.join("palindromes.grammar.json"), PALINDROMES)?;
    std::fs::write(dir.join("unbalanced.grammar.json"), UNBALANCED)?;
    println!("wrote fixtures to {}", dir.display());
    Ok(())
}
