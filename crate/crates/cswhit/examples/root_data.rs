//! Tour of the root-datum layer: build every fixture, print its Cartan
//! matrix, root count, Weyl group order, and a few dominance facts.
//!
//! Run with: cargo run --example root_data

use cswhit::fixtures;
use cswhit::rootdata::Coweight;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for rd in fixtures::all_fixtures() {
        println!("== {} ==", rd.name());
        println!("rank {}, {} simple roots", rd.rank(), rd.num_simple());
        print!("Cartan matrix:");
        for row in rd.cartan_matrix() {
            print!("  {row:?}");
        }
        println!();
        println!(
            "{} roots ({} positive), Weyl group of order {}",
            rd.num_roots(),
            rd.positive_roots().count(),
            rd.weyl_order()
        );
        let longest = rd.weyl_group().last().expect("group is nonempty");
        println!(
            "longest element has length {} and sign {}",
            longest.length(),
            longest.sign()
        );

        // Dominance: the doubled sum of positive coroots pairs to twice the
        // number of positive roots against 2 rho.
        let two_rho_co = rd.two_rho_co().clone();
        println!(
            "sum of positive coroots doubled: {two_rho_co}, height {}",
            rd.rho_pairing2(&two_rho_co)
        );
        for coroot_index in 0..rd.num_simple() {
            let alpha_vee = rd.simple_coroot(coroot_index).clone();
            let dominant = rd.dominant_value(&alpha_vee);
            println!(
                "simple coroot {coroot_index}: {alpha_vee} has dominant representative {dominant}"
            );
        }
        println!();
    }

    // Dominance order on one concrete chain.
    let rd = fixtures::fixture("A2adj")?;
    let zero = Coweight(vec![0, 0]);
    let theta = Coweight(vec![1, 1]);
    let twice = theta.scale(2);
    println!("A2adj dominance chain:");
    for (a, b) in [(&zero, &theta), (&theta, &twice), (&twice, &theta)] {
        println!("  {a} <= {b}: {}", rd.dominance_leq(a, b));
    }
    println!(
        "dominant coweights under {twice}: {:?}",
        rd.dominant_below(&twice)?
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
    );
    Ok(())
}
