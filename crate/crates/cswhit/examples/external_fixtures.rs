//! Loading a root datum from an explicit fixture file, the same format the
//! CSWHIT_FIXTURES directory override uses: simple roots and coroots as
//! integer coordinate vectors in fixed dual bases.
//!
//! Run with: cargo run --example external_fixtures

use cswhit::fixtures;
use cswhit::rootdata::BuildOptions;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // The B2 fixture written out explicitly: cocharacters in the coweight
    // basis, so coroots are the Cartan columns.
    let dir = std::env::temp_dir().join(format!("cswhit-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("Spin5.json");
    std::fs::write(
        &path,
        r#"{
  "simple_roots": [[1, 0], [0, 1]],
  "simple_coroots": [[2, -1], [-2, 2]]
}"#,
    )?;

    let rd = fixtures::load_explicit_file(&path, "Spin5", &BuildOptions::default())?;
    println!(
        "loaded {}: {} roots, Weyl group of order {}",
        rd.name(),
        rd.num_roots(),
        rd.weyl_order()
    );

    let builtin = fixtures::fixture("B2")?;
    println!(
        "matches the built-in B2 fixture: {}",
        rd.cartan_matrix() == builtin.cartan_matrix()
            && rd.weyl_order() == builtin.weyl_order()
    );

    // Keyed resolution through a directory, as CSWHIT_FIXTURES would do it:
    // a key with a file resolves to the file, anything else falls back to
    // the built-in table.
    let from_dir = fixtures::fixture_with("Spin5", Some(&dir), &BuildOptions::default());
    println!("directory lookup for Spin5 succeeds: {}", from_dir.is_ok());
    let fallback = fixtures::fixture_with("SL2", Some(&dir), &BuildOptions::default())?;
    println!("SL2 falls back to the built-in table: {}", fallback.name() == "SL2");

    std::fs::remove_dir_all(&dir).ok();
    Ok(())
}
