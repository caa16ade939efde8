//! The graded-cohomology ledger: cycle dimensions, Schubert cells of the
//! quasi-minuscule cell closure, per-orbit cohomology, the convolution
//! breakdown, and the zero-orbit strata consistency report.
//!
//! Run with: cargo run --example graded_ledger

use cswhit::mvgeom;
use cswhit::rootdata::Coweight;
use cswhit::fixtures;

fn print_space(label: &str, space: &mvgeom::GradedSpace) {
    if space.is_empty() {
        println!("{label}: 0");
        return;
    }
    let rows: Vec<String> = space
        .entries()
        .map(|(degree, e)| {
            format!("degree {degree}: dim {} ({} half-twists)", e.dim, e.half_twists)
        })
        .collect();
    println!("{label}: {}", rows.join(", "));
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rd = fixtures::fixture("A2adj")?;
    let theta = Coweight(vec![1, 1]);
    let zero = Coweight(vec![0, 0]);

    println!("cycle bookkeeping for lambda = {theta}:");
    for nu in rd.dominant_below(&theta)? {
        println!(
            "  target {nu}: nonempty {}, dimension {}, components {}",
            mvgeom::mv_nonempty(&rd, &theta, &nu)?,
            mvgeom::mv_dimension(&rd, &theta, &nu)?,
            mvgeom::mv_component_count(&rd, &theta, &nu)?
        );
    }

    println!("\nSchubert cells of the cell closure at {theta}:");
    for cell in mvgeom::schubert_cells(&rd, &theta)? {
        println!(
            "  coset {:?} -> point {}, side {:?}, dimension {}",
            cell.coset_rep.word, cell.point, cell.side, cell.dim
        );
    }
    print_space(
        "cell-closure cohomology",
        &mvgeom::poincare_gp(&rd, &theta)?,
    );

    println!("\nper-orbit cohomology at the quasi-minuscule step:");
    print_space(
        "  zero orbit, twist theta",
        &mvgeom::coh_zero_orbit(&rd, &theta, &theta)?,
    );
    print_space(
        "  zero orbit, twist 0",
        &mvgeom::coh_zero_orbit(&rd, &theta, &zero)?,
    );
    print_space(
        "  orbit step from the origin",
        &mvgeom::coh_weyl_orbit(&rd, &theta, rd.identity(), &zero)?,
    );

    println!("\nconvolution over [theta, theta]:");
    let seq = [theta.clone(), theta.clone()];
    for nu in rd.dominant_below(&theta.scale(2))? {
        print_space(
            &format!("  total cohomology into {nu}"),
            &mvgeom::convolution_breakdown(&rd, &seq, &nu)?,
        );
    }

    println!("\nmain identity: nonzero exactly on the diagonal");
    print_space(
        "  whittaker cohomology at (theta, theta)",
        &mvgeom::whittaker_cohomology(&rd, &theta, &theta)?,
    );
    print_space(
        "  whittaker cohomology at (theta, 0)",
        &mvgeom::whittaker_cohomology(&rd, &theta, &zero)?,
    );

    let report = mvgeom::zero_orbit_strata_report(&rd, &theta, &theta)?;
    println!(
        "\nzero-orbit strata report at mu = {theta} (shift {}):\n  total {:?}\n  complement {:?}\n  difference {:?}",
        report.shift, report.total, report.complement, report.difference
    );
    Ok(())
}
