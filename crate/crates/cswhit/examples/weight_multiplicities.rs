//! Weight-multiplicity tables computed by the Freudenthal recursion,
//! cross-checked against the independent Weyl-character oracle, plus
//! dimensions and a tensor-product decomposition.
//!
//! Run with: cargo run --example weight_multiplicities

use cswhit::rootdata::Coweight;
use cswhit::{fixtures, oracle, repcombinat};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rd = fixtures::fixture("G2")?;
    println!("== {} ==", rd.name());
    // The two smallest nonzero dominant coweights: the short-root side
    // (7-dimensional) and the adjoint (14-dimensional) representations.
    let mut smallest: Vec<Coweight> = rd
        .dominant_up_to_height(10)?
        .into_iter()
        .filter(|v| !v.is_zero())
        .collect();
    smallest.sort_by_key(|v| (rd.rho_pairing2(v), v.clone()));
    for lambda in smallest.into_iter().take(2) {
        println!(
            "highest weight {lambda}: dimension {} (oracle agrees: {})",
            repcombinat::dimension(&rd, &lambda)?,
            oracle::dimension(&rd, &lambda)?
        );
        for (mu, m) in repcombinat::dominant_weight_multiplicities(&rd, &lambda)? {
            let orbit = rd.weyl_orbit(&mu).len();
            let check = oracle::weight_multiplicity(&rd, &lambda, &mu)?;
            println!("  multiplicity at {mu}: {m} (orbit size {orbit}, oracle {check})");
        }
    }

    let rd = fixtures::fixture("A2adj")?;
    let theta = Coweight(vec![1, 1]);
    println!("\n== {} adjoint square ==", rd.name());
    let table = repcombinat::tensor_decomposition(&rd, &[theta.clone(), theta.clone()])?;
    let mut total = 0;
    for (nu, m) in &table {
        let d = repcombinat::dimension(&rd, nu)?;
        total += m * d;
        println!("  {m} x V^{nu} (dimension {d})");
    }
    println!(
        "total {} = {}^2, support of V^theta: {:?}",
        total,
        repcombinat::dimension(&rd, &theta)?,
        repcombinat::omega_set(&rd, &theta)?
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
    );
    Ok(())
}
