//! Minimal dominant cocharacters of each fixture: the minuscule and
//! quasi-minuscule elements that generate everything else, with their
//! conjugacy data and how arbitrary dominant coweights decompose into
//! sums of them.
//!
//! Run with: cargo run --example minimal_cocharacters

use cswhit::fixtures;
use cswhit::repcombinat;
use cswhit::rootdata::MinimalKind;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for rd in fixtures::all_fixtures() {
        println!("== {} ==", rd.name());
        for m in rd.classify_minimal() {
            match m.kind {
                MinimalKind::Minuscule => {
                    println!(
                        "{} is minuscule (pairs within [-1, 1] with every root), height {}",
                        m.value,
                        rd.rho_pairing2(&m.value)
                    );
                }
                MinimalKind::QuasiMinuscule => {
                    let gamma = rd.quasi_minuscule_root(&m.value)?;
                    println!(
                        "{} is quasi-minuscule: its coroot equals the root {:?}, height {}",
                        m.value,
                        gamma.vector,
                        rd.rho_pairing2(&m.value)
                    );
                    let conjugates = rd.delta_conjugates(&m.value)?;
                    println!(
                        "  simple roots Weyl-conjugate to it: indices {conjugates:?}"
                    );
                    for mu in rd.dominant_below(&m.value)? {
                        let admissible = rd.delta_mu(&m.value, &mu)?;
                        println!(
                            "  of those, pairing >= 1 with mu={mu}: indices {admissible:?}"
                        );
                    }
                }
            }
        }
        // Decompose a few dominant coweights into minimal summands.
        for lambda in rd.dominant_up_to_height(4)? {
            let parts = repcombinat::decompose_into_minimal(&rd, &lambda)?;
            let pretty: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
            println!("decompose {lambda} = {}", if pretty.is_empty() {
                "(empty sum)".to_string()
            } else {
                pretty.join(" + ")
            });
        }
        println!();
    }
    Ok(())
}
