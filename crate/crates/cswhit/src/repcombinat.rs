//! Weight multiplicities, tensor decompositions, and decompositions into
//! minimal cocharacters, for irreducibles of the dual group indexed by
//! dominant cocharacters.
//!
//! All arithmetic is exact. Multiplicities come from Freudenthal's
//! recursion run in doubled integer coordinates (so `rho` never forces
//! rationals), and tensor products from the alternating reflection rule
//! applied weight by weight, folded left to right over a sequence. Both are
//! cross-checked elsewhere against an independent character-theoretic
//! oracle.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rootdata::{pairing, Coweight, RootDatum};

/// Multiplicities of the dominant weights of `V^lambda`, as a map from each
/// dominant `mu <= lambda` to `m_lambda(mu) >= 1`.
///
/// Freudenthal's recursion, doubled: with `F` the sum over all roots of
/// products of pairings, `A = 2 lambda + 2 rho^` and `B = 2 mu + 2 rho^`,
///
/// ```text
/// (F(A,A) - F(B,B)) m(mu) = 2 sum_{beta^ > 0} sum_{k >= 1}
///                               m(mu + k beta^) F(2 mu + 2k beta^, 2 beta^)
/// ```
///
/// and the left factor is positive for `mu != lambda`, so each `m(mu)` is
/// an exact integer division.
pub fn dominant_weight_multiplicities(
    rd: &RootDatum,
    lambda: &Coweight,
) -> Result<BTreeMap<Coweight, u64>> {
    let below = rd.dominant_below(lambda)?;
    let two_rho_co = rd.two_rho_co().clone();
    let a = lambda.scale(2).add(&two_rho_co);
    let faa = rd.invariant_form(&a.0, &a.0);
    let h_lambda = rd.rho_pairing2(lambda);

    // Process by descending height so every lookup is already resolved.
    let mut order = below;
    order.sort_by_key(|mu| (-rd.rho_pairing2(mu), mu.clone()));

    let mut memo: BTreeMap<Coweight, i64> = BTreeMap::new();
    let lookup = |memo: &BTreeMap<Coweight, i64>, v: &Coweight| -> i64 {
        memo.get(&rd.dominant_value(v)).copied().unwrap_or(0)
    };

    for mu in order {
        if &mu == lambda {
            memo.insert(mu, 1);
            continue;
        }
        let b = mu.scale(2).add(&two_rho_co);
        let d4 = faa - rd.invariant_form(&b.0, &b.0);
        assert!(d4 > 0, "Freudenthal denominator must be positive below lambda");
        let mut s: i64 = 0;
        for root in rd.positive_roots() {
            let step = rd.rho_pairing2(&root.coroot);
            let mut k = 1i64;
            loop {
                let shifted = mu.add(&root.coroot.scale(k));
                if rd.rho_pairing2(&shifted) > h_lambda {
                    break;
                }
                let m = lookup(&memo, &shifted);
                if m != 0 {
                    let u = shifted.scale(2);
                    let v = root.coroot.scale(2);
                    s += m * rd.invariant_form(&u.0, &v.0);
                }
                k += 1;
                debug_assert!(step > 0);
            }
        }
        let twice = 2 * s;
        assert_eq!(twice % d4, 0, "Freudenthal division must be exact");
        let m = twice / d4;
        assert!(m >= 1, "every dominant weight below lambda occurs");
        memo.insert(mu, m);
    }
    Ok(memo.into_iter().map(|(k, v)| (k, v as u64)).collect())
}

/// Multiplicity of the cocharacter `nu` as a weight of `V^lambda`.
pub fn weight_multiplicity(rd: &RootDatum, lambda: &Coweight, nu: &Coweight) -> Result<u64> {
    let table = dominant_weight_multiplicities(rd, lambda)?;
    Ok(table.get(&rd.dominant_value(nu)).copied().unwrap_or(0))
}

/// Whether `nu` lies in the weight support of `V^lambda`. Equivalent to a
/// nonzero `weight_multiplicity`, but needs no recursion: the support is
/// exactly the orbit-saturation of the dominant cone below `lambda`.
pub fn omega_contains(rd: &RootDatum, lambda: &Coweight, nu: &Coweight) -> Result<bool> {
    if !rd.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.clone()));
    }
    Ok(rd.dominance_leq(&rd.dominant_value(nu), lambda))
}

/// The weight support of `V^lambda`: all Weyl translates of the dominant
/// cocharacters below `lambda`, sorted lexicographically.
pub fn omega_set(rd: &RootDatum, lambda: &Coweight) -> Result<Vec<Coweight>> {
    let mut out = std::collections::BTreeSet::new();
    for mu in rd.dominant_below(lambda)? {
        for v in rd.weyl_orbit(&mu) {
            out.insert(v);
        }
    }
    Ok(out.into_iter().collect())
}

/// `dim V^lambda`, by summing orbit sizes against dominant multiplicities.
pub fn dimension(rd: &RootDatum, lambda: &Coweight) -> Result<u64> {
    let table = dominant_weight_multiplicities(rd, lambda)?;
    Ok(table
        .iter()
        .map(|(mu, m)| m * rd.weyl_orbit(mu).len() as u64)
        .sum())
}

/// Decomposition of `V^{lambda_1} (x) ... (x) V^{lambda_n}` into
/// irreducibles: dominant highest weight -> multiplicity. The empty
/// sequence is the trivial representation.
pub fn tensor_decomposition(
    rd: &RootDatum,
    lambda_seq: &[Coweight],
) -> Result<BTreeMap<Coweight, u64>> {
    for lam in lambda_seq {
        if !rd.is_dominant(lam) {
            return Err(Error::NotDominant(lam.clone()));
        }
    }
    let mut table: BTreeMap<Coweight, i64> = BTreeMap::new();
    table.insert(Coweight::zero(rd.rank()), 1);
    for lam in lambda_seq {
        table = reflect_product(rd, &table, lam)?;
    }
    Ok(table
        .into_iter()
        .map(|(k, v)| {
            assert!(v > 0, "genuine tensor products decompose positively");
            (k, v as u64)
        })
        .collect())
}

/// One factor of the fold: decompose `(sum_table) (x) V^lambda` by pushing
/// each weight of `V^lambda` through the shifted dominant chamber. Terms
/// landing on a chamber wall cancel and are dropped; the rest reflect to a
/// strictly dominant vector with a sign given by the length parity of the
/// reflection path.
fn reflect_product(
    rd: &RootDatum,
    table: &BTreeMap<Coweight, i64>,
    lambda: &Coweight,
) -> Result<BTreeMap<Coweight, i64>> {
    let weights = dominant_weight_multiplicities(rd, lambda)?;
    let two_rho_co = rd.two_rho_co().clone();
    let mut out: BTreeMap<Coweight, i64> = BTreeMap::new();
    for (xi, &n) in table {
        for (dom_wt, &m) in &weights {
            for wt in rd.weyl_orbit(dom_wt) {
                let mut v2 = xi.add(&wt).scale(2).add(&two_rho_co);
                let mut sign = 1i64;
                while let Some(i) =
                    (0..rd.num_simple()).find(|&i| pairing(rd.simple_root(i), &v2) < 0)
                {
                    v2 = rd.simple_reflect_coweight(i, &v2);
                    sign = -sign;
                }
                if (0..rd.num_simple()).any(|i| pairing(rd.simple_root(i), &v2) == 0) {
                    continue;
                }
                let mu2 = v2.sub(&two_rho_co);
                assert!(
                    mu2.0.iter().all(|c| c % 2 == 0),
                    "shift by doubled rho must come back out evenly"
                );
                let mu = Coweight(mu2.0.iter().map(|c| c / 2).collect());
                let entry = out.entry(mu).or_insert(0);
                *entry += sign * n * (m as i64);
            }
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// Multiplicity of `V^nu` inside `V^{lambda_1} (x) ... (x) V^{lambda_n}`.
pub fn tensor_multiplicity(rd: &RootDatum, lambda_seq: &[Coweight], nu: &Coweight) -> Result<u64> {
    if !rd.is_dominant(nu) {
        return Err(Error::NotDominant(nu.clone()));
    }
    Ok(tensor_decomposition(rd, lambda_seq)?
        .get(nu)
        .copied()
        .unwrap_or(0))
}

/// `dim Hom(V^nu, V^lambda (x) V^mu)`.
pub fn hom_multiplicity(
    rd: &RootDatum,
    lambda: &Coweight,
    mu: &Coweight,
    nu: &Coweight,
) -> Result<u64> {
    tensor_multiplicity(rd, &[lambda.clone(), mu.clone()], nu)
}

/// Shortest sequence of minimal cocharacters whose tensor product contains
/// `V^lambda`, searched by iterative deepening with sequences of each
/// length tried in lexicographic order. The zero cocharacter decomposes as
/// the empty sequence. Fails with `SearchExhausted` past length
/// `<2 rho, lambda>`, which bounds any conceivable witness.
pub fn decompose_into_minimal(rd: &RootDatum, lambda: &Coweight) -> Result<Vec<Coweight>> {
    if !rd.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.clone()));
    }
    if lambda.is_zero() {
        return Ok(Vec::new());
    }
    let mut minimal = rd.minimal_set();
    minimal.sort();
    if minimal.is_empty() {
        return Err(Error::SearchExhausted(lambda.clone()));
    }
    let cap = rd.rho_pairing2(lambda).max(1);
    for n in 1..=cap {
        let mut seq: Vec<usize> = Vec::with_capacity(n as usize);
        if let Some(found) = search_sequences(rd, lambda, &minimal, n as usize, &mut seq)? {
            return Ok(found);
        }
    }
    Err(Error::SearchExhausted(lambda.clone()))
}

fn search_sequences(
    rd: &RootDatum,
    lambda: &Coweight,
    minimal: &[Coweight],
    n: usize,
    seq: &mut Vec<usize>,
) -> Result<Option<Vec<Coweight>>> {
    if seq.len() == n {
        let candidate: Vec<Coweight> = seq.iter().map(|&i| minimal[i].clone()).collect();
        let total = candidate
            .iter()
            .fold(Coweight::zero(rd.rank()), |acc, v| acc.add(v));
        if !rd.dominance_leq(lambda, &total) {
            return Ok(None);
        }
        if tensor_multiplicity(rd, &candidate, lambda)? > 0 {
            return Ok(Some(candidate));
        }
        return Ok(None);
    }
    for i in 0..minimal.len() {
        seq.push(i);
        if let Some(found) = search_sequences(rd, lambda, minimal, n, seq)? {
            return Ok(Some(found));
        }
        seq.pop();
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    fn cw(v: &[i64]) -> Coweight {
        Coweight(v.to_vec())
    }

    #[test]
    fn sl2_weight_multiplicities() {
        let rd = fixtures::fixture("SL2").unwrap();
        assert_eq!(weight_multiplicity(&rd, &cw(&[1]), &cw(&[0])).unwrap(), 1);
        assert_eq!(weight_multiplicity(&rd, &cw(&[1]), &cw(&[1])).unwrap(), 1);
        assert_eq!(weight_multiplicity(&rd, &cw(&[1]), &cw(&[-1])).unwrap(), 1);
        assert_eq!(weight_multiplicity(&rd, &cw(&[1]), &cw(&[2])).unwrap(), 0);
        // dim V^{k alpha^vee} = 2k + 1.
        for k in 0..5 {
            assert_eq!(dimension(&rd, &cw(&[k])).unwrap(), (2 * k + 1) as u64);
        }
    }

    #[test]
    fn a2_adjoint_zero_weight() {
        let rd = fixtures::fixture("A2adj").unwrap();
        let theta = cw(&[1, 1]);
        assert_eq!(weight_multiplicity(&rd, &theta, &cw(&[0, 0])).unwrap(), 2);
        assert_eq!(dimension(&rd, &theta).unwrap(), 8);
    }

    #[test]
    fn g2_small_representations() {
        let rd = fixtures::fixture("G2").unwrap();
        // The quasi-minuscule cocharacter carries the 7-dimensional
        // representation; the adjoint one is the other dominant coroot.
        let qm = rd.minimal_set()[0].clone();
        assert_eq!(weight_multiplicity(&rd, &qm, &Coweight::zero(2)).unwrap(), 1);
        assert_eq!(dimension(&rd, &qm).unwrap(), 7);
        let adjoint = rd
            .roots()
            .iter()
            .map(|r| r.coroot.clone())
            .filter(|v| rd.is_dominant(v))
            .max_by_key(|v| rd.rho_pairing2(v))
            .unwrap();
        assert_eq!(
            weight_multiplicity(&rd, &adjoint, &Coweight::zero(2)).unwrap(),
            2
        );
        assert_eq!(dimension(&rd, &adjoint).unwrap(), 14);
    }

    #[test]
    fn omega_sets_match_frozen_values() {
        let rd = fixtures::fixture("SL2").unwrap();
        assert_eq!(
            omega_set(&rd, &cw(&[1])).unwrap(),
            vec![cw(&[-1]), cw(&[0]), cw(&[1])]
        );
        let a2 = fixtures::fixture("A2adj").unwrap();
        let omega = omega_set(&a2, &cw(&[1, 1])).unwrap();
        assert_eq!(omega.len(), 7);
        assert!(omega.contains(&cw(&[0, 0])));
        for root in a2.roots() {
            assert!(omega.contains(&root.coroot));
        }
    }

    #[test]
    fn omega_contains_agrees_with_multiplicity() {
        let rd = fixtures::fixture("B2").unwrap();
        let lambda = cw(&[1, 1]);
        for nu in omega_set(&rd, &lambda).unwrap() {
            assert!(omega_contains(&rd, &lambda, &nu).unwrap());
            assert!(weight_multiplicity(&rd, &lambda, &nu).unwrap() >= 1);
        }
        assert!(!omega_contains(&rd, &lambda, &cw(&[3, 0])).unwrap());
    }

    #[test]
    fn sl2_tensor_square() {
        let rd = fixtures::fixture("SL2").unwrap();
        let seq = [cw(&[1]), cw(&[1])];
        let table = tensor_decomposition(&rd, &seq).unwrap();
        let expected: BTreeMap<Coweight, u64> =
            [(cw(&[0]), 1), (cw(&[1]), 1), (cw(&[2]), 1)].into_iter().collect();
        assert_eq!(table, expected);
        assert_eq!(tensor_multiplicity(&rd, &seq, &cw(&[0])).unwrap(), 1);
        assert_eq!(tensor_multiplicity(&rd, &seq, &cw(&[1])).unwrap(), 1);
        // 3 (x) 3 = 5 + 3 + 1.
        let sq = tensor_decomposition(&rd, &[cw(&[1]), cw(&[1]), cw(&[1])]).unwrap();
        let dims: u64 = sq
            .iter()
            .map(|(mu, m)| m * dimension(&rd, mu).unwrap())
            .sum();
        assert_eq!(dims, 27);
    }

    #[test]
    fn pgl2_tensor_of_minuscule() {
        let rd = fixtures::fixture("PGL2").unwrap();
        let table = tensor_decomposition(&rd, &[cw(&[1]), cw(&[1])]).unwrap();
        let expected: BTreeMap<Coweight, u64> =
            [(cw(&[0]), 1), (cw(&[2]), 1)].into_iter().collect();
        assert_eq!(table, expected);
    }

    #[test]
    fn a2_adjoint_square_hom() {
        let rd = fixtures::fixture("A2adj").unwrap();
        let theta = cw(&[1, 1]);
        assert_eq!(hom_multiplicity(&rd, &theta, &theta, &theta).unwrap(), 2);
        let table = tensor_decomposition(&rd, &[theta.clone(), theta.clone()]).unwrap();
        let total: u64 = table
            .iter()
            .map(|(mu, m)| m * dimension(&rd, mu).unwrap())
            .sum();
        assert_eq!(total, 64);
    }

    #[test]
    fn sl2_hom_vanishing() {
        let rd = fixtures::fixture("SL2").unwrap();
        assert_eq!(
            hom_multiplicity(&rd, &cw(&[1]), &cw(&[1]), &cw(&[3])).unwrap(),
            0
        );
    }

    #[test]
    fn decompositions_into_minimal() {
        let sl2 = fixtures::fixture("SL2").unwrap();
        assert_eq!(decompose_into_minimal(&sl2, &cw(&[0])).unwrap(), vec![]);
        assert_eq!(
            decompose_into_minimal(&sl2, &cw(&[1])).unwrap(),
            vec![cw(&[1])]
        );
        assert_eq!(
            decompose_into_minimal(&sl2, &cw(&[2])).unwrap(),
            vec![cw(&[1]), cw(&[1])]
        );
        let pgl2 = fixtures::fixture("PGL2").unwrap();
        assert_eq!(
            decompose_into_minimal(&pgl2, &cw(&[2])).unwrap(),
            vec![cw(&[2])]
        );
        assert_eq!(
            decompose_into_minimal(&pgl2, &cw(&[3])).unwrap(),
            vec![cw(&[1]), cw(&[2])]
        );
        let b2 = fixtures::fixture("B2").unwrap();
        let mins = b2.minimal_set();
        for m in &mins {
            assert_eq!(decompose_into_minimal(&b2, m).unwrap(), vec![m.clone()]);
        }
        // lambda = alpha_1^vee + alpha_2^vee requires the quasi-minuscule.
        let qm = cw(&[0, 1]);
        assert_eq!(decompose_into_minimal(&b2, &qm).unwrap(), vec![qm]);
    }

    #[test]
    fn nondominant_inputs_are_rejected() {
        let rd = fixtures::fixture("A2adj").unwrap();
        let bad = cw(&[-1, 0]);
        assert!(matches!(
            dominant_weight_multiplicities(&rd, &bad).unwrap_err(),
            Error::NotDominant(_)
        ));
        assert!(matches!(
            tensor_decomposition(&rd, std::slice::from_ref(&bad)).unwrap_err(),
            Error::NotDominant(_)
        ));
        assert!(matches!(
            decompose_into_minimal(&rd, &bad).unwrap_err(),
            Error::NotDominant(_)
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        // Tensor dimension is multiplicative and the decomposition is
        // symmetric in its two factors.
        #[test]
        fn tensor_respects_dimension_and_symmetry(
            a in 0i64..=2, b in 0i64..=2, c in 0i64..=2, d in 0i64..=2,
        ) {
            let rd = fixtures::fixture("A2adj").unwrap();
            let lam = cw(&[a, b]);
            let mu = cw(&[c, d]);
            prop_assume!(rd.is_dominant(&lam) && rd.is_dominant(&mu));
            let table = tensor_decomposition(&rd, &[lam.clone(), mu.clone()]).unwrap();
            let swapped = tensor_decomposition(&rd, &[mu.clone(), lam.clone()]).unwrap();
            prop_assert_eq!(&table, &swapped);
            let total: u64 = table
                .iter()
                .map(|(nu, m)| m * dimension(&rd, nu).unwrap())
                .sum();
            prop_assert_eq!(
                total,
                dimension(&rd, &lam).unwrap() * dimension(&rd, &mu).unwrap()
            );
        }

        // Weight multiplicities are Weyl invariant and sum to the dimension.
        #[test]
        fn multiplicities_are_weyl_invariant(a in 0i64..=2, b in 0i64..=2) {
            let rd = fixtures::fixture("B2").unwrap();
            let lambda = cw(&[a, b]);
            prop_assume!(rd.is_dominant(&lambda));
            let table = dominant_weight_multiplicities(&rd, &lambda).unwrap();
            for (mu, m) in &table {
                for v in rd.weyl_orbit(mu) {
                    prop_assert_eq!(weight_multiplicity(&rd, &lambda, &v).unwrap(), *m);
                }
            }
        }
    }
}
