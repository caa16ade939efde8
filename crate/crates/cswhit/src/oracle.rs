//! Independent cross-checks through character arithmetic.
//!
//! Everything in this module recomputes quantities that `repcombinat`
//! produces by recursion or reflection, but along a completely different
//! route: characters are built literally from the Weyl character formula as
//! quotients of antisymmetrized orbit sums in an exact multivariate Laurent
//! ring, tensor products are honest polynomial products decomposed by
//! stripping highest terms, and dimensions come from the product formula.
//! The verification harness and the test suite compare the two routes; the
//! code here deliberately shares no arithmetic with the primary one.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::rootdata::{Coweight, RootDatum};

/// Sparse Laurent polynomial in `rank` variables: exponent vector to
/// nonzero coefficient.
type Laurent = BTreeMap<Vec<i64>, i64>;

fn laurent_add_term(p: &mut Laurent, exp: Vec<i64>, coeff: i64) {
    use std::collections::btree_map::Entry;
    if coeff == 0 {
        return;
    }
    match p.entry(exp) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += coeff;
            if *e.get() == 0 {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(coeff);
        }
    }
}

fn laurent_mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let exp: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            laurent_add_term(&mut out, exp, ca * cb);
        }
    }
    out
}

/// Exact division, valid when `den` divides `num` and the lexicographically
/// leading coefficient of `den` is a unit. Panics if a remainder survives,
/// which would mean the character formula itself broke.
fn laurent_divide_exact(mut num: Laurent, den: &Laurent) -> Laurent {
    let (lead_exp, &lead_coeff) = den
        .iter()
        .next_back()
        .expect("division by the zero polynomial");
    assert!(
        lead_coeff == 1 || lead_coeff == -1,
        "leading coefficient must be a unit"
    );
    let mut quotient = Laurent::new();
    while let Some((rexp, rcoeff)) = num.iter().next_back().map(|(k, &v)| (k.clone(), v)) {
        let qexp: Vec<i64> = rexp.iter().zip(lead_exp).map(|(a, b)| a - b).collect();
        let qcoeff = rcoeff * lead_coeff;
        laurent_add_term(&mut quotient, qexp.clone(), qcoeff);
        for (dexp, dcoeff) in den {
            let exp: Vec<i64> = qexp.iter().zip(dexp).map(|(a, b)| a + b).collect();
            laurent_add_term(&mut num, exp, -qcoeff * dcoeff);
        }
    }
    quotient
}

/// `sum_w (-1)^{l(w)} x^{w v}`. For regular `v` the orbit is free, so the
/// sum has exactly `|W|` terms.
fn antisymmetrized(rd: &RootDatum, v: &Coweight) -> Laurent {
    let mut out = Laurent::new();
    for w in rd.weyl_group() {
        laurent_add_term(&mut out, rd.apply_to_coweight(w, v).0, w.sign());
    }
    out
}

/// Full character of `V^lambda` as weight -> multiplicity, straight from
/// the quotient `A(2 lambda + 2 rho^) / A(2 rho^)` of antisymmetrized sums
/// in doubled exponents.
pub fn character(rd: &RootDatum, lambda: &Coweight) -> Result<BTreeMap<Coweight, i64>> {
    if !rd.is_dominant(lambda) {
        return Err(crate::error::Error::NotDominant(lambda.clone()));
    }
    let shifted = lambda.scale(2).add(rd.two_rho_co());
    let num = antisymmetrized(rd, &shifted);
    let den = antisymmetrized(rd, rd.two_rho_co());
    assert_eq!(num.len(), rd.weyl_order(), "shifted weight must be regular");
    assert_eq!(den.len(), rd.weyl_order());
    let quotient = laurent_divide_exact(num, &den);
    Ok(quotient
        .into_iter()
        .map(|(exp, c)| {
            assert!(exp.iter().all(|e| e % 2 == 0), "doubled exponents are even");
            assert!(c > 0, "character coefficients are positive");
            (Coweight(exp.into_iter().map(|e| e / 2).collect()), c)
        })
        .collect())
}

pub fn weight_multiplicity(rd: &RootDatum, lambda: &Coweight, nu: &Coweight) -> Result<i64> {
    Ok(character(rd, lambda)?.get(nu).copied().unwrap_or(0))
}

/// Decompose a product of characters by repeatedly stripping the term with
/// the largest `<2 rho, .>` pairing (ties broken lexicographically). Such a
/// term is dominant, since reflecting a negative wall pairing would raise
/// the rho pairing inside a Weyl-invariant support, and no other support
/// element dominates it, so it is the highest weight of a constituent.
pub fn tensor_decomposition(
    rd: &RootDatum,
    lambda_seq: &[Coweight],
) -> Result<BTreeMap<Coweight, i64>> {
    let mut product = Laurent::new();
    product.insert(vec![0; rd.rank()], 1);
    for lam in lambda_seq {
        let chi: Laurent = character(rd, lam)?
            .into_iter()
            .map(|(v, c)| (v.0, c))
            .collect();
        product = laurent_mul(&product, &chi);
    }
    let mut out = BTreeMap::new();
    while !product.is_empty() {
        let (top, mult) = product
            .iter()
            .map(|(exp, &c)| (Coweight(exp.clone()), c))
            .max_by_key(|(v, _)| (rd.rho_pairing2(v), v.clone()))
            .expect("nonempty product");
        assert!(rd.is_dominant(&top), "stripped term must be dominant");
        assert!(mult > 0, "constituent multiplicities are positive");
        for (v, c) in character(rd, &top)? {
            laurent_add_term(&mut product, v.0, -mult * c);
        }
        out.insert(top, mult);
    }
    Ok(out)
}

/// `dim V^lambda` by the product formula over positive coroots, evaluated
/// with the integral Weyl-invariant form. Exact rational product, asserted
/// integral.
pub fn dimension(rd: &RootDatum, lambda: &Coweight) -> Result<u64> {
    if !rd.is_dominant(lambda) {
        return Err(crate::error::Error::NotDominant(lambda.clone()));
    }
    let shifted = lambda.scale(2).add(rd.two_rho_co());
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for root in rd.positive_roots() {
        num *= rd.invariant_form(&shifted.0, &root.coroot.0) as i128;
        den *= rd.invariant_form(&rd.two_rho_co().0, &root.coroot.0) as i128;
        let g = gcd(num.unsigned_abs(), den.unsigned_abs());
        num /= g as i128;
        den /= g as i128;
    }
    assert_eq!(den, 1, "dimension product must be integral");
    assert!(num > 0);
    Ok(num as u64)
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::repcombinat;

    fn cw(v: &[i64]) -> Coweight {
        Coweight(v.to_vec())
    }

    #[test]
    fn sl2_characters_by_hand() {
        let rd = fixtures::fixture("SL2").unwrap();
        let chi = character(&rd, &cw(&[2])).unwrap();
        let expected: BTreeMap<Coweight, i64> = (-2..=2).map(|k| (cw(&[k]), 1)).collect();
        assert_eq!(chi, expected);
        assert_eq!(dimension(&rd, &cw(&[3])).unwrap(), 7);
    }

    #[test]
    fn sl2_tensor_by_hand() {
        let rd = fixtures::fixture("SL2").unwrap();
        // 3 (x) 3 = 5 + 3 + 1.
        let table = tensor_decomposition(&rd, &[cw(&[1]), cw(&[1])]).unwrap();
        let expected: BTreeMap<Coweight, i64> =
            [(cw(&[0]), 1), (cw(&[1]), 1), (cw(&[2]), 1)].into_iter().collect();
        assert_eq!(table, expected);
    }

    #[test]
    fn characters_agree_with_recursion_on_all_fixtures() {
        for rd in fixtures::all_fixtures() {
            let bound = if rd.is_semisimple() {
                rd.dominant_up_to_height(6).unwrap()
            } else {
                (0..=6).map(|k| cw(&[k])).collect()
            };
            for lambda in bound {
                let chi = character(&rd, &lambda).unwrap();
                let table = repcombinat::dominant_weight_multiplicities(&rd, &lambda).unwrap();
                // Same dominant part.
                for (mu, m) in &table {
                    assert_eq!(
                        chi.get(mu).copied().unwrap_or(0),
                        *m as i64,
                        "{} lambda={:?} mu={:?}",
                        rd.name(),
                        lambda,
                        mu
                    );
                }
                // Same support size and total dimension.
                let total: i64 = chi.values().sum();
                assert_eq!(total as u64, repcombinat::dimension(&rd, &lambda).unwrap());
                assert_eq!(total as u64, dimension(&rd, &lambda).unwrap());
                assert_eq!(
                    chi.keys().cloned().collect::<Vec<_>>(),
                    repcombinat::omega_set(&rd, &lambda).unwrap()
                );
            }
        }
    }

    #[test]
    fn tensor_products_agree_with_reflection_rule() {
        for rd in fixtures::all_fixtures() {
            let bound = if rd.is_semisimple() {
                rd.dominant_up_to_height(4).unwrap()
            } else {
                (0..=4).map(|k| cw(&[k])).collect()
            };
            for lam in &bound {
                for mu in &bound {
                    let seq = [lam.clone(), mu.clone()];
                    let fast = repcombinat::tensor_decomposition(&rd, &seq).unwrap();
                    let slow = tensor_decomposition(&rd, &seq).unwrap();
                    let slow_u: BTreeMap<Coweight, u64> =
                        slow.into_iter().map(|(k, v)| (k, v as u64)).collect();
                    assert_eq!(fast, slow_u, "{} {:?} (x) {:?}", rd.name(), lam, mu);
                }
            }
        }
    }

    #[test]
    fn triple_products_agree_on_sl2() {
        let rd = fixtures::fixture("SL2").unwrap();
        let seq = [cw(&[1]), cw(&[2]), cw(&[1])];
        let fast = repcombinat::tensor_decomposition(&rd, &seq).unwrap();
        let slow = tensor_decomposition(&rd, &seq).unwrap();
        assert_eq!(
            fast,
            slow.into_iter().map(|(k, v)| (k, v as u64)).collect::<BTreeMap<_, _>>()
        );
    }
}
