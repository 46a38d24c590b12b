//! Parses a space-spec file, reports errors by code, and exports a space
//! back to the same format.
//!
//! cargo run --example space_file [path]

use idealtop::{export_space_spec, parse_named_space_spec, Fixture};

fn main() {
    if let Some(path) = std::env::args().nth(1) {
        let text = std::fs::read_to_string(&path).expect("readable file");
        match parse_named_space_spec(&text) {
            Ok(named) => println!(
                "{path}: {} points, {} open sets",
                named.names.len(),
                named.context.topology().opens().len()
            ),
            Err(e) => println!("{path}: [{}] {e}", e.code()),
        }
        return;
    }
    let broken = r#"{
  "points": ["a", "b", "c"],
  "opens": [[], ["a", "c"]],
  "ideal": {"max": ["b"]},
  "gamma": "constant_x"
}"#;
    let err = parse_named_space_spec(broken).unwrap_err();
    println!("[{}] {err}", err.code());

    let exported = export_space_spec(&Fixture::PreGammaIOpenNotGammaOpen.context());
    println!("{}", serde_json::to_string_pretty(&exported).unwrap());
}
