//! Run the full verification matrix over every built-in fixture at the
//! default height bound and print the deterministic text report.
//!
//! Run with: cargo run --release --example verification_matrix

use cswhit::verify::{self, VerifyConfig};
use cswhit::fixtures;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = VerifyConfig::default();
    println!(
        "height bound {}: sequences to length {}, identity checks to height {}, \
         algebra triples to height {}",
        config.max_height,
        config.sequence_length(),
        config.cs_height(),
        config.triple_height()
    );
    let mut reports = Vec::new();
    for rd in fixtures::all_fixtures() {
        reports.push(verify::run(&rd, &config)?);
    }
    print!("{}", verify::render_text(&reports));
    if reports.iter().all(|r| r.all_passed()) {
        Ok(())
    } else {
        Err("verification matrix found failing checks".into())
    }
}
