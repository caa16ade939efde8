//! Combinatorial paths attached to sequences of minimal cocharacters.
//!
//! Fix a sequence `lambda_1, ..., lambda_n` of minimal dominant
//! cocharacters. A path is a walk starting at the origin whose `i`-th step
//! is a weight of `V^{lambda_i}`; a step equal to zero (possible only at a
//! quasi-minuscule `lambda_i`) additionally carries a choice of simple root
//! conjugate to the root attached to `lambda_i`. A path is dominant when
//! every vertex is dominant and every zero-step choice pairs at least 1
//! with the vertex it sits at.
//!
//! The count of dominant paths from the origin to a dominant `nu` equals
//! the multiplicity of `V^nu` in the tensor product of the `V^{lambda_i}`;
//! the test suite and the verification harness check that identity against
//! the reflection rule and the character oracle. Grouping paths by their
//! underlying step sequence turns the count into a product of sizes of
//! root sets, which is the form the geometric ledger consumes.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{pairing, Coweight, RootDatum};
use crate::repcombinat;

/// A path as submitted for validation: the steps, and for each zero step
/// (1-based position) the index of the chosen simple root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathSpec {
    pub steps: Vec<Coweight>,
    pub zero_step_roots: BTreeMap<usize, usize>,
}

/// A validated path: the submitted data plus its vertex list `0 = mu_0, ..., mu_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Path {
    pub steps: Vec<Coweight>,
    pub vertices: Vec<Coweight>,
    pub zero_step_roots: BTreeMap<usize, usize>,
}

/// A choiceless step sequence with dominant vertices; the unit the product
/// counting formula and the convolution ledger work with.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepSequence {
    pub steps: Vec<Coweight>,
    pub vertices: Vec<Coweight>,
}

fn check_minimal_sequence(rd: &RootDatum, lambda_seq: &[Coweight]) -> Result<Vec<bool>> {
    let minimal = rd.minimal_set();
    let mut quasi = Vec::with_capacity(lambda_seq.len());
    for lam in lambda_seq {
        if !minimal.contains(lam) {
            return Err(Error::NotMinimal(lam.clone()));
        }
        quasi.push(rd.quasi_minuscule_root(lam).is_ok());
    }
    Ok(quasi)
}

/// Validate a submitted path against a sequence of minimal cocharacters.
/// Checks, in order: the sequence is minimal, lengths agree, every step is
/// a weight of its factor, zero steps carry exactly one root choice each,
/// and each chosen simple root is conjugate to the attached root of its
/// factor. Positions in errors are 1-based.
pub fn validate(rd: &RootDatum, lambda_seq: &[Coweight], spec: &PathSpec) -> Result<Path> {
    check_minimal_sequence(rd, lambda_seq)?;
    if lambda_seq.len() != spec.steps.len() {
        return Err(Error::LengthMismatch {
            left: lambda_seq.len(),
            right: spec.steps.len(),
        });
    }
    let n = spec.steps.len();
    for &pos in spec.zero_step_roots.keys() {
        if pos == 0 || pos > n || !spec.steps[pos - 1].is_zero() {
            return Err(Error::SpuriousRootChoice { index: pos });
        }
    }
    let mut vertices = vec![Coweight::zero(rd.rank())];
    for (idx, step) in spec.steps.iter().enumerate() {
        let pos = idx + 1;
        if !repcombinat::omega_contains(rd, &lambda_seq[idx], step)? {
            return Err(Error::StepNotInOmega { index: pos });
        }
        if step.is_zero() {
            match spec.zero_step_roots.get(&pos) {
                None => return Err(Error::MissingRootChoice { index: pos }),
                Some(&root_idx) => {
                    let conjugates = rd.delta_conjugates(&lambda_seq[idx])?;
                    if !conjugates.contains(&root_idx) {
                        return Err(Error::RootNotConjugate { index: pos });
                    }
                }
            }
        }
        let prev = vertices.last().unwrap().clone();
        vertices.push(prev.add(step));
    }
    Ok(Path {
        steps: spec.steps.clone(),
        vertices,
        zero_step_roots: spec.zero_step_roots.clone(),
    })
}

/// Whether a validated path is dominant: all vertices dominant and each
/// zero-step root pairs at least 1 with the vertex the step leaves from.
pub fn is_dominant_path(rd: &RootDatum, path: &Path) -> bool {
    if !path.vertices.iter().all(|v| rd.is_dominant(v)) {
        return false;
    }
    path.zero_step_roots.iter().all(|(&pos, &root_idx)| {
        pairing(rd.simple_root(root_idx), &path.vertices[pos - 1]) >= 1
    })
}

/// All dominant paths from the origin to `nu`, ordered by traversing the
/// weight supports lexicographically and zero-step choices by ascending
/// simple index.
pub fn enumerate_dominant_paths(
    rd: &RootDatum,
    lambda_seq: &[Coweight],
    nu: &Coweight,
) -> Result<Vec<Path>> {
    let quasi = check_minimal_sequence(rd, lambda_seq)?;
    let supports: Vec<Vec<Coweight>> = lambda_seq
        .iter()
        .map(|lam| repcombinat::omega_set(rd, lam))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut steps: Vec<Coweight> = Vec::new();
    let mut choices: BTreeMap<usize, usize> = BTreeMap::new();
    let mut vertices = vec![Coweight::zero(rd.rank())];
    walk(
        rd, lambda_seq, &quasi, &supports, nu, &mut steps, &mut choices, &mut vertices, &mut out,
    )?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn walk(
    rd: &RootDatum,
    lambda_seq: &[Coweight],
    quasi: &[bool],
    supports: &[Vec<Coweight>],
    nu: &Coweight,
    steps: &mut Vec<Coweight>,
    choices: &mut BTreeMap<usize, usize>,
    vertices: &mut Vec<Coweight>,
    out: &mut Vec<Path>,
) -> Result<()> {
    let idx = steps.len();
    if idx == lambda_seq.len() {
        if vertices.last().unwrap() == nu {
            out.push(Path {
                steps: steps.clone(),
                vertices: vertices.clone(),
                zero_step_roots: choices.clone(),
            });
        }
        return Ok(());
    }
    let here = vertices.last().unwrap().clone();
    for step in &supports[idx] {
        let next = here.add(step);
        if !rd.is_dominant(&next) {
            continue;
        }
        if step.is_zero() {
            debug_assert!(quasi[idx], "zero weight only occurs at quasi-minuscule factors");
            for root_idx in rd.delta_mu(&lambda_seq[idx], &here)? {
                steps.push(step.clone());
                choices.insert(idx + 1, root_idx);
                vertices.push(next.clone());
                walk(rd, lambda_seq, quasi, supports, nu, steps, choices, vertices, out)?;
                vertices.pop();
                choices.remove(&(idx + 1));
                steps.pop();
            }
        } else {
            steps.push(step.clone());
            vertices.push(next);
            walk(rd, lambda_seq, quasi, supports, nu, steps, choices, vertices, out)?;
            vertices.pop();
            steps.pop();
        }
    }
    Ok(())
}

pub fn count_dominant_paths(rd: &RootDatum, lambda_seq: &[Coweight], nu: &Coweight) -> Result<u64> {
    Ok(enumerate_dominant_paths(rd, lambda_seq, nu)?.len() as u64)
}

/// All choiceless step sequences from the origin to `nu` whose vertices are
/// all dominant, in the same traversal order as the full enumeration.
pub fn dominant_step_sequences(
    rd: &RootDatum,
    lambda_seq: &[Coweight],
    nu: &Coweight,
) -> Result<Vec<StepSequence>> {
    check_minimal_sequence(rd, lambda_seq)?;
    let supports: Vec<Vec<Coweight>> = lambda_seq
        .iter()
        .map(|lam| repcombinat::omega_set(rd, lam))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut steps: Vec<Coweight> = Vec::new();
    let mut vertices = vec![Coweight::zero(rd.rank())];
    walk_steps(rd, &supports, nu, &mut steps, &mut vertices, &mut out);
    Ok(out)
}

fn walk_steps(
    rd: &RootDatum,
    supports: &[Vec<Coweight>],
    nu: &Coweight,
    steps: &mut Vec<Coweight>,
    vertices: &mut Vec<Coweight>,
    out: &mut Vec<StepSequence>,
) {
    let idx = steps.len();
    if idx == supports.len() {
        if vertices.last().unwrap() == nu {
            out.push(StepSequence {
                steps: steps.clone(),
                vertices: vertices.clone(),
            });
        }
        return;
    }
    let here = vertices.last().unwrap().clone();
    for step in &supports[idx] {
        let next = here.add(step);
        if !rd.is_dominant(&next) {
            continue;
        }
        steps.push(step.clone());
        vertices.push(next);
        walk_steps(rd, supports, nu, steps, vertices, out);
        vertices.pop();
        steps.pop();
    }
}

/// Count the dominant paths refining one given step sequence: zero if some
/// vertex leaves the dominant cone, otherwise the product over zero steps
/// of the number of admissible simple roots at that vertex.
pub fn count_paths_product(
    rd: &RootDatum,
    lambda_seq: &[Coweight],
    steps: &[Coweight],
) -> Result<u64> {
    check_minimal_sequence(rd, lambda_seq)?;
    if lambda_seq.len() != steps.len() {
        return Err(Error::LengthMismatch {
            left: lambda_seq.len(),
            right: steps.len(),
        });
    }
    let mut vertex = Coweight::zero(rd.rank());
    let mut vertices = vec![vertex.clone()];
    for (idx, step) in steps.iter().enumerate() {
        if !repcombinat::omega_contains(rd, &lambda_seq[idx], step)? {
            return Err(Error::StepNotInOmega { index: idx + 1 });
        }
        vertex = vertex.add(step);
        vertices.push(vertex.clone());
    }
    if !vertices.iter().all(|v| rd.is_dominant(v)) {
        return Ok(0);
    }
    let mut product: u64 = 1;
    for (idx, step) in steps.iter().enumerate() {
        if step.is_zero() {
            product *= rd.delta_mu(&lambda_seq[idx], &vertices[idx])?.len() as u64;
        }
    }
    Ok(product)
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
    fn sl2_double_step_paths() {
        let rd = fixtures::fixture("SL2").unwrap();
        let seq = [cw(&[1]), cw(&[1])];

        let to_zero = enumerate_dominant_paths(&rd, &seq, &cw(&[0])).unwrap();
        assert_eq!(to_zero.len(), 1);
        assert_eq!(to_zero[0].steps, vec![cw(&[1]), cw(&[-1])]);
        assert!(to_zero[0].zero_step_roots.is_empty());

        let to_coroot = enumerate_dominant_paths(&rd, &seq, &cw(&[1])).unwrap();
        assert_eq!(to_coroot.len(), 1);
        assert_eq!(to_coroot[0].steps, vec![cw(&[1]), cw(&[0])]);
        assert_eq!(
            to_coroot[0].zero_step_roots,
            [(2usize, 0usize)].into_iter().collect()
        );

        let to_double = enumerate_dominant_paths(&rd, &seq, &cw(&[2])).unwrap();
        assert_eq!(to_double.len(), 1);
    }

    #[test]
    fn product_formula_kills_early_zero_step() {
        let rd = fixtures::fixture("SL2").unwrap();
        let seq = [cw(&[1]), cw(&[1])];
        // A zero step out of the origin has no admissible root.
        assert_eq!(
            count_paths_product(&rd, &seq, &[cw(&[0]), cw(&[1])]).unwrap(),
            0
        );
        assert_eq!(
            count_paths_product(&rd, &seq, &[cw(&[1]), cw(&[0])]).unwrap(),
            1
        );
        // A step below the cone also kills the product.
        assert_eq!(
            count_paths_product(&rd, &seq, &[cw(&[-1]), cw(&[1])]).unwrap(),
            0
        );
    }

    #[test]
    fn a2_zero_steps_branch_over_two_roots() {
        let rd = fixtures::fixture("A2adj").unwrap();
        let theta = cw(&[1, 1]);
        let paths =
            enumerate_dominant_paths(&rd, &[theta.clone(), theta.clone()], &theta).unwrap();
        assert_eq!(paths.len(), 2);
        for p in &paths {
            assert_eq!(p.steps, vec![theta.clone(), cw(&[0, 0])]);
        }
        let chosen: Vec<usize> = paths.iter().map(|p| p.zero_step_roots[&2]).collect();
        assert_eq!(chosen, vec![0, 1]);
    }

    #[test]
    fn validation_errors() {
        let rd = fixtures::fixture("SL2").unwrap();
        let lam = cw(&[1]);

        let err = validate(
            &rd,
            &[cw(&[2])],
            &PathSpec { steps: vec![cw(&[2])], zero_step_roots: BTreeMap::new() },
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotMinimal(_)));

        let err = validate(
            &rd,
            &[lam.clone(), lam.clone()],
            &PathSpec { steps: vec![cw(&[1])], zero_step_roots: BTreeMap::new() },
        )
        .unwrap_err();
        assert!(matches!(err, Error::LengthMismatch { left: 2, right: 1 }));

        let err = validate(
            &rd,
            std::slice::from_ref(&lam),
            &PathSpec { steps: vec![cw(&[2])], zero_step_roots: BTreeMap::new() },
        )
        .unwrap_err();
        assert!(matches!(err, Error::StepNotInOmega { index: 1 }));

        let err = validate(
            &rd,
            std::slice::from_ref(&lam),
            &PathSpec { steps: vec![cw(&[0])], zero_step_roots: BTreeMap::new() },
        )
        .unwrap_err();
        assert!(matches!(err, Error::MissingRootChoice { index: 1 }));

        let err = validate(
            &rd,
            std::slice::from_ref(&lam),
            &PathSpec {
                steps: vec![cw(&[1])],
                zero_step_roots: [(1, 0)].into_iter().collect(),
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::SpuriousRootChoice { index: 1 }));

        // A minuscule factor has no zero weight at all.
        let pgl2 = fixtures::fixture("PGL2").unwrap();
        let err = validate(
            &pgl2,
            &[cw(&[1])],
            &PathSpec { steps: vec![cw(&[0])], zero_step_roots: BTreeMap::new() },
        )
        .unwrap_err();
        assert!(matches!(err, Error::StepNotInOmega { index: 1 }));

        // Only the long simple root of B2 is conjugate to the attached root.
        let b2 = fixtures::fixture("B2").unwrap();
        let qm = cw(&[0, 1]);
        let err = validate(
            &b2,
            &[qm.clone(), qm.clone()],
            &PathSpec {
                steps: vec![qm.clone(), cw(&[0, 0])],
                zero_step_roots: [(2, 1)].into_iter().collect(),
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::RootNotConjugate { index: 2 }));
        // Conjugacy alone is not enough: at the vertex (0,1) the long
        // simple root pairs to zero, so the path validates but is not
        // dominant.
        let ok = validate(
            &b2,
            &[qm.clone(), qm.clone()],
            &PathSpec {
                steps: vec![qm.clone(), cw(&[0, 0])],
                zero_step_roots: [(2, 0)].into_iter().collect(),
            },
        )
        .unwrap();
        assert!(!is_dominant_path(&b2, &ok));
        // Starting with the minuscule step puts the zero step at a vertex
        // that does pair positively.
        let ok = validate(
            &b2,
            &[cw(&[1, 0]), qm.clone()],
            &PathSpec {
                steps: vec![cw(&[1, 0]), cw(&[0, 0])],
                zero_step_roots: [(2, 0)].into_iter().collect(),
            },
        )
        .unwrap();
        assert!(is_dominant_path(&b2, &ok));
    }

    #[test]
    fn step_sequences_expand_to_path_counts() {
        let rd = fixtures::fixture("A2adj").unwrap();
        let theta = cw(&[1, 1]);
        let seq = [theta.clone(), theta.clone()];
        for nu in crate::repcombinat::omega_set(&rd, &theta).unwrap() {
            if !rd.is_dominant(&nu) {
                continue;
            }
            let direct = count_dominant_paths(&rd, &seq, &nu).unwrap();
            let via_product: u64 = dominant_step_sequences(&rd, &seq, &nu)
                .unwrap()
                .iter()
                .map(|s| count_paths_product(&rd, &seq, &s.steps).unwrap())
                .sum();
            assert_eq!(direct, via_product);
        }
    }

    // The path count from the origin to nu equals the multiplicity of V^nu
    // in the tensor product over the sequence.
    #[test]
    fn path_counts_match_tensor_multiplicities() {
        for rd in fixtures::all_fixtures() {
            let minimal = rd.minimal_set();
            let mut seqs: Vec<Vec<Coweight>> = minimal.iter().map(|m| vec![m.clone()]).collect();
            for a in &minimal {
                for b in &minimal {
                    seqs.push(vec![a.clone(), b.clone()]);
                }
            }
            for seq in seqs {
                let total: Coweight = seq
                    .iter()
                    .fold(Coweight::zero(rd.rank()), |acc, v| acc.add(v));
                for nu in rd.dominant_below(&rd.dominant_value(&total)).unwrap() {
                    let by_paths = count_dominant_paths(&rd, &seq, &nu).unwrap();
                    let by_tensor =
                        crate::repcombinat::tensor_multiplicity(&rd, &seq, &nu).unwrap();
                    assert_eq!(
                        by_paths, by_tensor,
                        "{} seq={:?} nu={:?}",
                        rd.name(),
                        seq,
                        nu
                    );
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        // Triple sequences over the minimal set of PGL2, mixing minuscule
        // and quasi-minuscule factors.
        #[test]
        fn pgl2_triples_match_tensor(picks in proptest::collection::vec(0usize..2, 3)) {
            let rd = fixtures::fixture("PGL2").unwrap();
            let minimal = rd.minimal_set();
            let seq: Vec<Coweight> = picks.iter().map(|&i| minimal[i].clone()).collect();
            let total: Coweight = seq
                .iter()
                .fold(Coweight::zero(rd.rank()), |acc, v| acc.add(v));
            for nu in rd.dominant_below(&total).unwrap() {
                let by_paths = count_dominant_paths(&rd, &seq, &nu).unwrap();
                let by_tensor = crate::repcombinat::tensor_multiplicity(&rd, &seq, &nu).unwrap();
                prop_assert_eq!(by_paths, by_tensor);
            }
        }
    }
}
