//! Dominant path enumeration: list the paths for a two-step sequence,
//! validate a hand-built path, and confirm the product counting formula
//! against direct enumeration and tensor multiplicities.
//!
//! Run with: cargo run --example littelmann_paths

use std::collections::BTreeMap;

use cswhit::paths::{self, PathSpec};
use cswhit::rootdata::Coweight;
use cswhit::{fixtures, repcombinat};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rd = fixtures::fixture("A2adj")?;
    let theta = Coweight(vec![1, 1]);
    let seq = [theta.clone(), theta.clone()];

    println!("paths through two adjoint steps ending at {theta}:");
    for path in paths::enumerate_dominant_paths(&rd, &seq, &theta)? {
        let vertices: Vec<String> = path.vertices.iter().map(|v| v.to_string()).collect();
        println!(
            "  vertices {} with zero-step root choices {:?}",
            vertices.join(" -> "),
            path.zero_step_roots
        );
    }

    // Validate one path by hand: step to theta, then a zero step bouncing
    // along the first simple root.
    let spec = PathSpec {
        steps: vec![theta.clone(), Coweight(vec![0, 0])],
        zero_step_roots: BTreeMap::from([(2, 0)]),
    };
    let path = paths::validate(&rd, &seq, &spec)?;
    println!(
        "hand-built path is dominant: {}",
        paths::is_dominant_path(&rd, &path)
    );

    // The product formula refines the count step-sequence by step-sequence.
    println!("\ncounting into every dominant target:");
    let total = theta.scale(2);
    for nu in rd.dominant_below(&total)? {
        let direct = paths::count_dominant_paths(&rd, &seq, &nu)?;
        let mut by_product = 0;
        for steps in paths::dominant_step_sequences(&rd, &seq, &nu)? {
            by_product += paths::count_paths_product(&rd, &seq, &steps.steps)?;
        }
        let mult = repcombinat::tensor_multiplicity(&rd, &seq, &nu)?;
        println!(
            "  target {nu}: {direct} paths = {by_product} by the product formula \
             = multiplicity {mult}"
        );
    }
    Ok(())
}
