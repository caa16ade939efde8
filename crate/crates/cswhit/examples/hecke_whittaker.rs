//! The spherical Hecke algebra acting on Whittaker vectors: Satake-basis
//! products, the trace calculus on graded spaces, both pipelines for the
//! action, and the Casselman-Shalika identity.
//!
//! Run with: cargo run --example hecke_whittaker

use cswhit::hecke::{self, HeckeElt, WhittakerElt};
use cswhit::mvgeom::GradedSpace;
use cswhit::rootdata::Coweight;
use cswhit::fixtures;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rd = fixtures::fixture("SL2")?;
    let alpha_vee = Coweight(vec![1]);
    let origin = Coweight(vec![0]);

    let h1 = HeckeElt::basis(&rd, &alpha_vee)?;
    let square = hecke::hecke_mult(&rd, &h1, &h1)?;
    println!("H(1) * H(1) = {square}");
    let cube = hecke::hecke_mult(&rd, &square, &h1)?;
    println!("H(1)^3 = {cube}");

    println!("\ntrace calculus:");
    for (label, space) in [
        ("one even line, one full twist down", GradedSpace::single(2, 1, -2)),
        ("one odd line, half a twist down", GradedSpace::single(1, 1, -1)),
        ("two lines in degree zero", GradedSpace::single(0, 2, 0)),
    ] {
        println!("  {label}: trace {}", hecke::trace_of_graded(&space));
    }

    println!("\naction on the spherical vector:");
    let phi0 = WhittakerElt::basis(&rd, &origin)?;
    let acted = hecke::whittaker_action(&rd, &phi0, &h1)?;
    println!("  phi(0) * H(1) = {acted}  (the Casselman-Shalika identity)");
    let geometric = hecke::whittaker_action_geometric(&rd, &origin, &alpha_vee)?;
    println!("  same through the graded trace pipeline: {geometric}");

    let phi1 = WhittakerElt::basis(&rd, &alpha_vee)?;
    println!(
        "  phi(1) * H(1) = {}",
        hecke::whittaker_action(&rd, &phi1, &h1)?
    );

    println!("\nidentity check across fixtures at the quasi-minuscule element:");
    for rd in fixtures::all_fixtures() {
        for m in rd.classify_minimal() {
            println!(
                "  {} at {}: {}",
                rd.name(),
                m.value,
                if hecke::verify_cs(&rd, &m.value)? { "holds" } else { "fails" }
            );
        }
    }

    // The PGL2 minuscule case exercises genuinely half-integral powers of q
    // inside the pipeline before they cancel.
    let rd = fixtures::fixture("PGL2")?;
    let mu0 = Coweight(vec![1]);
    let twisted = hecke::whittaker_action_geometric(&rd, &mu0, &mu0)?;
    println!("\nPGL2: phi(1) * H(1) through the ledger = {twisted}");
    Ok(())
}
