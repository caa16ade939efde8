//! The verification matrix: every headline identity the engine is built
//! around, re-checked from scratch against the independent character
//! oracle, with a deterministic report suitable for golden-file pinning.
//!
//! One knob — the height bound — scales every box. At the default bound
//! the boxes match the advertised criteria exactly: minimal-cocharacter
//! sequences of length up to three, Casselman–Shalika and strata checks up
//! to height eight, algebra triples up to height three, and Freudenthal
//! against the oracle up to height four.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::{self, HeckeElt, WhittakerElt};
use crate::laurent::LaurentHalf;
use crate::mvgeom::{self, GradedSpace};
use crate::oracle;
use crate::paths;
use crate::repcombinat;
use crate::rootdata::{Coweight, RootDatum};

/// Fixtures the sequence-box identities (path counting and convolution
/// breakdown) run over.
pub const SEQUENCE_FIXTURES: [&str; 5] = ["SL2", "PGL2", "A2adj", "B2", "G2"];

const DOMINANCE_SAMPLES: usize = 10_000;
const DOMINANCE_SEED: u64 = 0x4353_5748_4954; // "CSWHIT"

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    /// Height bound `<2 rho, lambda>` driving every box below.
    pub max_height: i64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_height: 4 }
    }
}

impl VerifyConfig {
    /// Length bound for minimal-cocharacter sequences.
    pub fn sequence_length(&self) -> usize {
        self.max_height.clamp(1, 3) as usize
    }

    /// Height bound for Casselman–Shalika inputs.
    pub fn cs_height(&self) -> i64 {
        2 * self.max_height
    }

    /// Height bound for the strata-report twist.
    pub fn strata_height(&self) -> i64 {
        2 * self.max_height
    }

    /// Height bound for the Freudenthal-versus-oracle sweep.
    pub fn freudenthal_height(&self) -> i64 {
        self.max_height
    }

    /// Height bound for algebra-law triples.
    pub fn triple_height(&self) -> i64 {
        (self.max_height - 1).max(1)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub inputs: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub fixture: String,
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Outcome of one counting sweep: how many cases agreed, or what the first
/// disagreement looked like.
struct Sweep {
    cases: u64,
    failure: Option<String>,
}

impl Sweep {
    fn new() -> Self {
        Sweep {
            cases: 0,
            failure: None,
        }
    }

    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn into_check(self, name: &str, inputs: String) -> Check {
        let expected = format!("{} cases agree", self.cases);
        let actual = match &self.failure {
            None => expected.clone(),
            Some(f) => f.clone(),
        };
        Check {
            name: name.to_string(),
            inputs,
            pass: self.failure.is_none(),
            expected,
            actual,
        }
    }
}

/// All minimal-cocharacter sequences over `M` with lengths `1..=len`.
fn minimal_sequences(rd: &RootDatum, len: usize) -> Vec<Vec<Coweight>> {
    let minimal = rd.minimal_set();
    let mut out: Vec<Vec<Coweight>> = vec![];
    let mut layer: Vec<Vec<Coweight>> = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for prefix in &layer {
            for m in &minimal {
                let mut seq = prefix.clone();
                seq.push(m.clone());
                next.push(seq);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn check_paths_match_tensor(rd: &RootDatum, config: &VerifyConfig) -> Result<Check> {
    let len = config.sequence_length();
    let mut sweep = Sweep::new();
    for seq in minimal_sequences(rd, len) {
        let total = seq
            .iter()
            .fold(Coweight::zero(rd.rank()), |acc, v| acc.add(v));
        for nu in rd.dominant_below(&total)? {
            let direct = paths::count_dominant_paths(rd, &seq, &nu)?;
            let mut by_product = 0u64;
            for steps in paths::dominant_step_sequences(rd, &seq, &nu)? {
                by_product += paths::count_paths_product(rd, &seq, &steps.steps)?;
            }
            let recursive = repcombinat::tensor_multiplicity(rd, &seq, &nu)?;
            let independent = oracle::tensor_decomposition(rd, &seq)?
                .get(&nu)
                .copied()
                .unwrap_or(0);
            let ok = direct == by_product
                && direct == recursive
                && direct as i64 == independent;
            sweep.case(ok, || {
                format!(
                    "sequence {seq:?}, nu={nu}: paths {direct}, product {by_product}, \
                     recursion {recursive}, oracle {independent}"
                )
            });
        }
    }
    Ok(sweep.into_check(
        "path-count-equals-tensor-multiplicity",
        format!("minimal sequences of length <= {len}, all dominant targets below the total"),
    ))
}

fn check_breakdown_single_degree(rd: &RootDatum, config: &VerifyConfig) -> Result<Check> {
    let len = config.sequence_length();
    let mut sweep = Sweep::new();
    for seq in minimal_sequences(rd, len) {
        let total = seq
            .iter()
            .fold(Coweight::zero(rd.rank()), |acc, v| acc.add(v));
        for nu in rd.dominant_below(&total)? {
            let space = mvgeom::convolution_breakdown(rd, &seq, &nu)?;
            let count = paths::count_dominant_paths(rd, &seq, &nu)?;
            let h2 = rd.rho_pairing2(&nu);
            let ok = if count == 0 {
                space.is_empty()
            } else {
                space.degrees().count() == 1
                    && space
                        .get(h2)
                        .is_some_and(|e| e.dim == count && e.half_twists == -h2)
            };
            sweep.case(ok, || {
                format!(
                    "sequence {seq:?}, nu={nu}: expected dim {count} in degree {h2} \
                     with {} half-twists, got {space:?}",
                    -h2
                )
            });
        }
    }
    Ok(sweep.into_check(
        "breakdown-concentrates-in-one-degree",
        format!("minimal sequences of length <= {len}, all dominant targets below the total"),
    ))
}

fn check_casselman_shalika(rd: &RootDatum, config: &VerifyConfig) -> Result<Check> {
    let bound = config.cs_height();
    let mut sweep = Sweep::new();
    for lambda in rd.dominant_up_to_height(bound)? {
        let ok = hecke::verify_cs(rd, &lambda)?;
        sweep.case(ok, || format!("lambda={lambda}: identity fails"));
    }
    Ok(sweep.into_check(
        "casselman-shalika-identity",
        format!("all dominant lambda with height <= {bound}, geometric and algebraic pipelines"),
    ))
}

fn check_geometric_action_matches(rd: &RootDatum, config: &VerifyConfig) -> Result<Check> {
    let bound = config.triple_height();
    let mut sweep = Sweep::new();
    let box_elems = rd.dominant_up_to_height(bound)?;
    for nu in &box_elems {
        for lambda in &box_elems {
            let geometric = hecke::whittaker_action_geometric(rd, nu, lambda)?;
            let algebraic = hecke::whittaker_action(
                rd,
                &WhittakerElt::basis(rd, nu)?,
                &HeckeElt::basis(rd, lambda)?,
            )?;
            let nonneg = geometric.terms().all(|(_, c)| {
                let constant = c.coeff_half(0);
                constant > 0 && c == &LaurentHalf::constant(constant)
            });
            sweep.case(geometric == algebraic && nonneg, || {
                format!("nu={nu}, lambda={lambda}: geometric {geometric}, algebraic {algebraic}")
            });
        }
    }
    Ok(sweep.into_check(
        "geometric-action-cancels-to-multiplicities",
        format!("all dominant pairs with height <= {bound}"),
    ))
}

fn check_zero_orbit_strata(rd: &RootDatum, config: &VerifyConfig) -> Result<Check> {
    let bound = config.strata_height();
    let mut sweep = Sweep::new();
    for m in rd.classify_minimal() {
        if m.coroot_root.is_none() {
            continue;
        }
        let lambda = m.value;
        for mu in rd.dominant_up_to_height(bound)? {
            let report = mvgeom::zero_orbit_strata_report(rd, &lambda, &mu);
            let ok = match report {
                Err(_) => false,
                Ok(r) => {
                    let expected = rd.delta_mu(&lambda, &mu)?.len() as u64
                        + rd.delta_conjugates(&lambda)?.len() as u64;
                    r.total.get(&0).copied().unwrap_or(0) == expected
                }
            };
            sweep.case(ok, || {
                format!("lambda={lambda}, mu={mu}: strata ledger inconsistent")
            });
        }
    }
    Ok(sweep.into_check(
        "zero-orbit-strata-consistency",
        format!("quasi-minuscule lambda, dominant mu with height <= {bound}"),
    ))
}

fn check_schubert_poincare(rd: &RootDatum) -> Result<Check> {
    let mut sweep = Sweep::new();
    for m in rd.classify_minimal() {
        if m.coroot_root.is_none() {
            continue;
        }
        let lambda = m.value;
        let gp = mvgeom::poincare_gp(rd, &lambda)?;
        let cosets = (rd.weyl_order() / rd.orbit_stabilizer_order(&lambda)) as u64;
        sweep.case(gp.total_dim() == cosets, || {
            format!(
                "lambda={lambda}: total dimension {} but {cosets} cosets",
                gp.total_dim()
            )
        });
        if rd.name() == "SL2" {
            let frozen = GradedSpace::single(0, 1, 0)
                .direct_sum(&GradedSpace::single(2, 1, -2))?;
            sweep.case(gp == frozen, || {
                format!("lambda={lambda}: cell closure cohomology is {gp:?}")
            });
        }
        let d = rd.rho_pairing2(&lambda);
        let gamma = rd.quasi_minuscule_root(&lambda)?;
        for cell in mvgeom::schubert_cells(rd, &lambda)? {
            let image = rd.apply_to_weight(&cell.coset_rep, &gamma.vector);
            let simple = (0..rd.num_simple()).any(|i| rd.simple_root(i) == &image);
            let antisimple = (0..rd.num_simple()).any(|i| rd.simple_root(i) == &image.neg());
            let ok = match cell.side {
                mvgeom::CellSide::Plus => {
                    cell.dim >= d / 2 && (cell.dim == d / 2) == simple
                }
                mvgeom::CellSide::Minus => {
                    cell.dim < d / 2 && (cell.dim == d / 2 - 1) == antisimple
                }
            };
            sweep.case(ok, || {
                format!(
                    "lambda={lambda}, coset {:?}: dim {} violates the middle bound",
                    cell.coset_rep.word, cell.dim
                )
            });
        }
    }
    Ok(sweep.into_check(
        "schubert-cell-dimensions",
        "quasi-minuscule cell closures: coset totals, frozen values, middle bounds".to_string(),
    ))
}

fn check_algebra_laws(rd: &RootDatum, config: &VerifyConfig) -> Result<Check> {
    let bound = config.triple_height();
    let mut sweep = Sweep::new();
    let box_elems = rd.dominant_up_to_height(bound)?;
    for a in &box_elems {
        let ha = HeckeElt::basis(rd, a)?;
        let phi_a = WhittakerElt::basis(rd, a)?;
        for b in &box_elems {
            let hb = HeckeElt::basis(rd, b)?;
            let ab = hecke::hecke_mult(rd, &ha, &hb)?;
            sweep.case(ab == hecke::hecke_mult(rd, &hb, &ha)?, || {
                format!("a={a}, b={b}: product not commutative")
            });
            for c in &box_elems {
                let hc = HeckeElt::basis(rd, c)?;
                let bc = hecke::hecke_mult(rd, &hb, &hc)?;
                sweep.case(
                    hecke::hecke_mult(rd, &ab, &hc)? == hecke::hecke_mult(rd, &ha, &bc)?,
                    || format!("a={a}, b={b}, c={c}: product not associative"),
                );
                let step = hecke::whittaker_action(rd, &phi_a, &hb)?;
                sweep.case(
                    hecke::whittaker_action(rd, &step, &hc)?
                        == hecke::whittaker_action(rd, &phi_a, &bc)?,
                    || format!("a={a}, b={b}, c={c}: module action not associative"),
                );
            }
        }
    }
    Ok(sweep.into_check(
        "hecke-algebra-laws",
        format!("commutativity, associativity, module associativity on height <= {bound} triples"),
    ))
}

fn check_dominance_laws(rd: &RootDatum) -> Result<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(DOMINANCE_SEED);
    let mut sweep = Sweep::new();
    let random_coweight = |rng: &mut ChaCha8Rng| {
        Coweight((0..rd.rank()).map(|_| rng.gen_range(-5..=5)).collect())
    };
    for _ in 0..DOMINANCE_SAMPLES {
        let a = random_coweight(&mut rng);
        let b = random_coweight(&mut rng);
        let c = random_coweight(&mut rng);
        let reflexive = rd.dominance_leq(&a, &a);
        let antisymmetric =
            !(rd.dominance_leq(&a, &b) && rd.dominance_leq(&b, &a)) || a == b;
        let transitive = !(rd.dominance_leq(&a, &b) && rd.dominance_leq(&b, &c))
            || rd.dominance_leq(&a, &c);
        sweep.case(reflexive && antisymmetric && transitive, || {
            format!("triple ({a}, {b}, {c}) breaks a partial-order law")
        });
    }
    Ok(sweep.into_check(
        "dominance-partial-order-laws",
        format!("{DOMINANCE_SAMPLES} seeded random triples with coordinates in [-5, 5]"),
    ))
}

fn check_freudenthal_against_oracle(rd: &RootDatum, config: &VerifyConfig) -> Result<Check> {
    let bound = config.freudenthal_height();
    let mut sweep = Sweep::new();
    for lambda in rd.dominant_up_to_height(bound)? {
        let recursive = repcombinat::dominant_weight_multiplicities(rd, &lambda)?;
        let character = oracle::character(rd, &lambda)?;
        let independent: BTreeMap<Coweight, u64> = character
            .iter()
            .filter(|(w, _)| rd.is_dominant(w))
            .map(|(w, &m)| (w.clone(), m as u64))
            .collect();
        sweep.case(recursive == independent, || {
            format!("lambda={lambda}: recursion table differs from the character oracle")
        });
    }
    Ok(sweep.into_check(
        "freudenthal-matches-character-oracle",
        format!("all dominant highest weights with height <= {bound}"),
    ))
}

fn check_spectral_collapse_guard(
    rd: &RootDatum,
    config: &VerifyConfig,
    run_sequences: bool,
) -> Result<Check> {
    let mut sweep = Sweep::new();
    // Every cell-closure stratification collapses (all degrees even).
    for m in rd.classify_minimal() {
        if m.coroot_root.is_none() {
            continue;
        }
        let strata: Vec<GradedSpace> = mvgeom::schubert_cells(rd, &m.value)?
            .iter()
            .map(|cell| GradedSpace::single(2 * cell.dim, 1, -2 * cell.dim))
            .collect();
        sweep.case(mvgeom::spectral_collapse(&strata).is_ok(), || {
            format!("lambda={}: cell stratification rejected", m.value)
        });
    }
    // Convolution outputs for one sequence share a parity and collapse.
    if run_sequences {
        for seq in minimal_sequences(rd, config.sequence_length()) {
            let total = seq
                .iter()
                .fold(Coweight::zero(rd.rank()), |acc, v| acc.add(v));
            let strata: Vec<GradedSpace> = rd
                .dominant_below(&total)?
                .iter()
                .map(|nu| mvgeom::convolution_breakdown(rd, &seq, nu))
                .collect::<Result<_>>()?;
            sweep.case(mvgeom::spectral_collapse(&strata).is_ok(), || {
                format!("sequence {seq:?}: convolution stratification rejected")
            });
        }
    }
    // A constructed odd/even mix must be refused.
    let mixed = [GradedSpace::single(1, 1, 0), GradedSpace::single(2, 1, 0)];
    sweep.case(
        matches!(mvgeom::spectral_collapse(&mixed), Err(Error::ParityViolation)),
        || "odd/even mix was not rejected".to_string(),
    );
    Ok(sweep.into_check(
        "spectral-collapse-guard",
        "cell and convolution stratifications accepted, constructed parity mix rejected"
            .to_string(),
    ))
}

/// Run the full matrix on one root datum.
pub fn run(rd: &RootDatum, config: &VerifyConfig) -> Result<VerificationReport> {
    let sequences = SEQUENCE_FIXTURES.contains(&rd.name());
    let mut checks = Vec::new();
    if sequences {
        checks.push(check_paths_match_tensor(rd, config)?);
        checks.push(check_breakdown_single_degree(rd, config)?);
    }
    checks.push(check_casselman_shalika(rd, config)?);
    checks.push(check_geometric_action_matches(rd, config)?);
    checks.push(check_zero_orbit_strata(rd, config)?);
    checks.push(check_schubert_poincare(rd)?);
    checks.push(check_algebra_laws(rd, config)?);
    checks.push(check_dominance_laws(rd)?);
    checks.push(check_freudenthal_against_oracle(rd, config)?);
    checks.push(check_spectral_collapse_guard(rd, config, sequences)?);
    let passed = checks.iter().filter(|c| c.pass).count();
    let failed = checks.len() - passed;
    Ok(VerificationReport {
        fixture: rd.name().to_string(),
        checks,
        passed,
        failed,
    })
}

/// Deterministic text rendering: one line per check, one summary line per
/// fixture, one closing line over the whole run.
pub fn render_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    let mut passed = 0;
    let mut failed = 0;
    for report in reports {
        let _ = writeln!(out, "== {} ==", report.fixture);
        for check in &report.checks {
            let status = if check.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status} {} [{}]", check.name, check.inputs);
            if !check.pass {
                let _ = writeln!(out, "     expected: {}", check.expected);
                let _ = writeln!(out, "     actual:   {}", check.actual);
            }
        }
        let _ = writeln!(
            out,
            "   {} passed, {} failed",
            report.passed, report.failed
        );
        passed += report.passed;
        failed += report.failed;
    }
    let verdict = if failed == 0 { "PASS" } else { "FAIL" };
    let _ = writeln!(
        out,
        "overall: {verdict} ({passed} passed, {failed} failed)"
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn default_bounds_match_advertised_numbers() {
        let config = VerifyConfig::default();
        assert_eq!(config.max_height, 4);
        assert_eq!(config.sequence_length(), 3);
        assert_eq!(config.cs_height(), 8);
        assert_eq!(config.strata_height(), 8);
        assert_eq!(config.freudenthal_height(), 4);
        assert_eq!(config.triple_height(), 3);
        let reduced = VerifyConfig { max_height: 1 };
        assert_eq!(reduced.sequence_length(), 1);
        assert_eq!(reduced.triple_height(), 1);
    }

    #[test]
    fn sl2_report_all_green_and_deterministic() {
        let rd = fixtures::fixture("SL2").unwrap();
        let config = VerifyConfig::default();
        let report = run(&rd, &config).unwrap();
        assert!(report.all_passed(), "{}", render_text(&[report]));
        let report = run(&rd, &config).unwrap();
        let again = run(&rd, &config).unwrap();
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            serde_json::to_string(&again).unwrap()
        );
        assert_eq!(report.checks.len(), 10);
    }

    #[test]
    fn reduced_height_reports_pass_everywhere() {
        let config = VerifyConfig { max_height: 1 };
        for rd in fixtures::all_fixtures() {
            let report = run(&rd, &config).unwrap();
            assert!(report.all_passed(), "{}", render_text(&[report]));
        }
    }

    #[test]
    fn text_rendering_shape() {
        let rd = fixtures::fixture("PGL2").unwrap();
        let report = run(&rd, &VerifyConfig { max_height: 1 }).unwrap();
        let text = render_text(&[report]);
        assert!(text.starts_with("== PGL2 ==\n"));
        assert!(text.contains("PASS casselman-shalika-identity"));
        assert!(text.trim_end().ends_with("failed)"));
    }

    #[test]
    fn sequence_fixture_gate() {
        let c2 = fixtures::fixture("C2").unwrap();
        let report = run(&c2, &VerifyConfig { max_height: 1 }).unwrap();
        assert!(report
            .checks
            .iter()
            .all(|c| c.name != "path-count-equals-tensor-multiplicity"));
        assert_eq!(report.checks.len(), 8);
    }
}
