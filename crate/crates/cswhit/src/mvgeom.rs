//! The symbolic graded-cohomology ledger.
//!
//! Cohomology groups are tracked as `GradedSpace` values: finitely many
//! degrees, each carrying a dimension and a Tate twist recorded in
//! half-twist units. The ledger never merges distinct twists in one degree
//! and never collapses a stratification across mixed parities; both
//! situations surface as errors, because silent bookkeeping is exactly how
//! a symbolic computation of this kind goes wrong.
//!
//! The operations fall into four groups: dimension and component counts
//! for the intersection cycles indexed by a dominant pair, Schubert-cell
//! bookkeeping for the partial flag quotient attached to a quasi-minuscule
//! cocharacter, the per-orbit cohomology answers with their convolution
//! assembly, and the stratified consistency report for the zero orbit.

use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::paths;
use crate::repcombinat;
use crate::rootdata::{Coweight, RootDatum, WeylElement};

// ---------------------------------------------------------------------------
// Graded spaces

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GradedEntry {
    pub dim: u64,
    pub half_twists: i64,
}

/// Finitely supported graded vector space with one twist per degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedSpace(BTreeMap<i64, GradedEntry>);

impl GradedSpace {
    pub fn empty() -> Self {
        GradedSpace(BTreeMap::new())
    }

    /// One entry, or the empty space when `dim == 0`.
    pub fn single(degree: i64, dim: u64, half_twists: i64) -> Self {
        let mut out = Self::empty();
        if dim > 0 {
            out.0.insert(degree, GradedEntry { dim, half_twists });
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, degree: i64) -> Option<&GradedEntry> {
        self.0.get(&degree)
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, &GradedEntry)> + '_ {
        self.0.iter().map(|(&d, e)| (d, e))
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.keys().copied()
    }

    pub fn total_dim(&self) -> u64 {
        self.0.values().map(|e| e.dim).sum()
    }

    fn insert(&mut self, degree: i64, dim: u64, half_twists: i64) -> Result<()> {
        use std::collections::btree_map::Entry;
        if dim == 0 {
            return Ok(());
        }
        match self.0.entry(degree) {
            Entry::Vacant(e) => {
                e.insert(GradedEntry { dim, half_twists });
                Ok(())
            }
            Entry::Occupied(mut e) => {
                if e.get().half_twists != half_twists {
                    return Err(Error::TwistClash {
                        degree,
                        left: e.get().half_twists,
                        right: half_twists,
                    });
                }
                e.get_mut().dim += dim;
                Ok(())
            }
        }
    }

    /// Degree-wise sum. Dimensions add; a twist disagreement within one
    /// degree is an error, never a merge.
    pub fn direct_sum(&self, other: &GradedSpace) -> Result<GradedSpace> {
        let mut out = self.clone();
        for (d, e) in other.entries() {
            out.insert(d, e.dim, e.half_twists)?;
        }
        Ok(out)
    }

    /// Tensor product: degrees and twists add, dimensions multiply.
    pub fn tensor(&self, other: &GradedSpace) -> Result<GradedSpace> {
        let mut out = GradedSpace::empty();
        for (d1, e1) in self.entries() {
            for (d2, e2) in other.entries() {
                out.insert(d1 + d2, e1.dim * e2.dim, e1.half_twists + e2.half_twists)?;
            }
        }
        Ok(out)
    }
}

impl Serialize for GradedSpace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Row {
            degree: i64,
            dim: u64,
            half_twists: i64,
        }
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for (degree, e) in self.entries() {
            seq.serialize_element(&Row {
                degree,
                dim: e.dim,
                half_twists: e.half_twists,
            })?;
        }
        seq.end()
    }
}

/// Collapse a stratification into one space. Refuses unless every
/// supported degree across all strata has one common parity; under that
/// condition the degree-wise sum is forced and no boundary maps can
/// interfere.
pub fn spectral_collapse(strata: &[GradedSpace]) -> Result<GradedSpace> {
    let mut parity: Option<i64> = None;
    for s in strata {
        for d in s.degrees() {
            let p = d.rem_euclid(2);
            match parity {
                None => parity = Some(p),
                Some(q) if q == p => {}
                Some(_) => return Err(Error::ParityViolation),
            }
        }
    }
    let mut out = GradedSpace::empty();
    for s in strata {
        out = out.direct_sum(s)?;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Cycle dimensions and components

/// Whether the intersection cycle indexed by `(lambda, nu)` is nonempty:
/// exactly when `nu` is a weight of `V^lambda`.
pub fn mv_nonempty(rd: &RootDatum, lambda: &Coweight, nu: &Coweight) -> Result<bool> {
    repcombinat::omega_contains(rd, lambda, nu)
}

/// Dimension `<rho, nu + lambda>` of the nonempty cycle, exact. The doubled
/// pairing is computed first and an odd value is surfaced, never rounded.
pub fn mv_dimension(rd: &RootDatum, lambda: &Coweight, nu: &Coweight) -> Result<i64> {
    if !mv_nonempty(rd, lambda, nu)? {
        return Err(Error::EmptyMv {
            lambda: lambda.clone(),
            nu: nu.clone(),
        });
    }
    let doubled = rd.rho_pairing2(&nu.add(lambda));
    if doubled % 2 != 0 {
        return Err(Error::NonIntegralDimension(doubled));
    }
    Ok(doubled / 2)
}

/// Number of top-dimensional components: the weight multiplicity.
pub fn mv_component_count(rd: &RootDatum, lambda: &Coweight, nu: &Coweight) -> Result<u64> {
    repcombinat::weight_multiplicity(rd, lambda, nu)
}

// ---------------------------------------------------------------------------
// Schubert cells for the quotient attached to a quasi-minuscule cocharacter

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellSide {
    /// `w lambda^vee` is a positive root.
    Plus,
    /// `w lambda^vee` is a negative root.
    Minus,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchubertCell {
    pub coset_rep: WeylElement,
    pub point: Coweight,
    pub side: CellSide,
    pub dim: i64,
}

/// One cell per coset of the stabilizer of `lambda`, with minimal-length
/// representatives in the canonical group order. The cell dimension is
/// `<rho, lambda + w lambda>`, lowered by one on the plus side.
pub fn schubert_cells(rd: &RootDatum, lambda: &Coweight) -> Result<Vec<SchubertCell>> {
    let gamma = rd.quasi_minuscule_root(lambda)?;
    let mut seen: std::collections::BTreeSet<Coweight> = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for w in rd.weyl_group() {
        let point = rd.apply_to_coweight(w, lambda);
        if !seen.insert(point.clone()) {
            continue;
        }
        let image = rd.apply_to_weight(w, &gamma.vector);
        let root = rd
            .root_by_vector(&image)
            .expect("Weyl image of a root is a root");
        let side = if root.is_positive() {
            CellSide::Plus
        } else {
            CellSide::Minus
        };
        let doubled = rd.rho_pairing2(&lambda.add(&point));
        if doubled % 2 != 0 {
            return Err(Error::NonIntegralDimension(doubled));
        }
        let dim = doubled / 2
            - match side {
                CellSide::Plus => 1,
                CellSide::Minus => 0,
            };
        out.push(SchubertCell {
            coset_rep: w.clone(),
            point,
            side,
            dim,
        });
    }
    Ok(out)
}

/// Cohomology of the cell closure: one line in degree `2 dim` per cell,
/// twisted by `-dim`, assembled through the collapse guard (all degrees
/// even, so it always applies).
pub fn poincare_gp(rd: &RootDatum, lambda: &Coweight) -> Result<GradedSpace> {
    let strata: Vec<GradedSpace> = schubert_cells(rd, lambda)?
        .iter()
        .map(|cell| GradedSpace::single(2 * cell.dim, 1, -2 * cell.dim))
        .collect();
    spectral_collapse(&strata)
}

// ---------------------------------------------------------------------------
// Per-orbit cohomology

/// Cohomology of the stratum of a nonzero orbit weight `w lambda`, twisted
/// by `mu`: one line in degree `<2 rho, w lambda>` with that many negative
/// half-twists. Requires `lambda` minimal and both `mu` and `mu + w lambda`
/// dominant.
pub fn coh_weyl_orbit(
    rd: &RootDatum,
    lambda: &Coweight,
    w: &WeylElement,
    mu: &Coweight,
) -> Result<GradedSpace> {
    if !rd.is_minimal(lambda) {
        return Err(Error::NotMinimal(lambda.clone()));
    }
    let wl = rd.apply_to_coweight(w, lambda);
    if !rd.is_dominant(mu) {
        return Err(Error::PreconditionViolated(format!(
            "orbit stratum needs dominant mu, got {mu}"
        )));
    }
    let target = mu.add(&wl);
    if !rd.is_dominant(&target) {
        return Err(Error::PreconditionViolated(format!(
            "orbit stratum needs dominant mu + w lambda, got {target}"
        )));
    }
    let h2 = rd.rho_pairing2(&wl);
    Ok(GradedSpace::single(h2, 1, -h2))
}

/// Cohomology of the zero-weight stratum at a quasi-minuscule `lambda`:
/// `|Delta^mu_{lambda^vee}|` untwisted lines in degree zero.
pub fn coh_zero_orbit(rd: &RootDatum, lambda: &Coweight, mu: &Coweight) -> Result<GradedSpace> {
    let size = rd.delta_mu(lambda, mu)?.len() as u64;
    Ok(GradedSpace::single(0, size, 0))
}

/// Total vanishing on a non-dominant twist: the empty space, with the
/// preconditions (`mu` non-dominant, `mu + nu` dominant, `lambda`
/// dominant) enforced rather than assumed.
pub fn coh_nondominant(
    rd: &RootDatum,
    lambda: &Coweight,
    nu: &Coweight,
    mu: &Coweight,
) -> Result<GradedSpace> {
    if !rd.is_dominant(lambda) {
        return Err(Error::PreconditionViolated(format!(
            "vanishing statement needs dominant lambda, got {lambda}"
        )));
    }
    if rd.is_dominant(mu) {
        return Err(Error::PreconditionViolated(format!(
            "vanishing statement applies only to non-dominant mu, got {mu}"
        )));
    }
    let target = mu.add(nu);
    if !rd.is_dominant(&target) {
        return Err(Error::PreconditionViolated(format!(
            "vanishing statement needs dominant mu + nu, got {target}"
        )));
    }
    Ok(GradedSpace::empty())
}

/// Assemble the convolution cohomology over a sequence of minimal
/// cocharacters: sum over step sequences with total `nu`, tensoring the
/// per-step strata. Steps from a vertex that has left the dominant cone
/// contribute the zero space, so only all-dominant step sequences appear.
pub fn convolution_breakdown(
    rd: &RootDatum,
    lambda_seq: &[Coweight],
    nu: &Coweight,
) -> Result<GradedSpace> {
    if !rd.is_dominant(nu) {
        return Err(Error::NotDominant(nu.clone()));
    }
    let sequences = paths::dominant_step_sequences(rd, lambda_seq, nu)?;
    let mut total = GradedSpace::empty();
    for seq in &sequences {
        let mut product = GradedSpace::single(0, 1, 0);
        for (idx, step) in seq.steps.iter().enumerate() {
            let here = &seq.vertices[idx];
            let factor = if step.is_zero() {
                coh_zero_orbit(rd, &lambda_seq[idx], here)?
            } else {
                let w = rd
                    .weyl_group()
                    .iter()
                    .find(|w| &rd.apply_to_coweight(w, &lambda_seq[idx]) == step)
                    .expect("nonzero weight of a minimal cocharacter lies in its orbit");
                coh_weyl_orbit(rd, &lambda_seq[idx], w, here)?
            };
            product = product.tensor(&factor)?;
            if product.is_empty() {
                break;
            }
        }
        total = total.direct_sum(&product)?;
    }
    Ok(total)
}

/// The cohomology of the Whittaker intersection: one line in degree
/// `<2 rho, nu>` with twist `-<rho, nu>` when `nu = lambda`, zero
/// otherwise.
pub fn whittaker_cohomology(
    rd: &RootDatum,
    lambda: &Coweight,
    nu: &Coweight,
) -> Result<GradedSpace> {
    if !rd.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.clone()));
    }
    if !rd.is_dominant(nu) {
        return Err(Error::NotDominant(nu.clone()));
    }
    if nu != lambda {
        return Ok(GradedSpace::empty());
    }
    let h2 = rd.rho_pairing2(nu);
    Ok(GradedSpace::single(h2, 1, -h2))
}

/// The conjectured twisted answer: `Hom(V^lambda (x) V^mu, V^{mu+nu})`
/// lines in degree `<2 rho, nu>` with twist `-<rho, nu>` for dominant
/// `mu`, and the zero space for non-dominant `mu`. Needs `lambda` and
/// `mu + nu` dominant.
pub fn conjectural_cohomology(
    rd: &RootDatum,
    lambda: &Coweight,
    nu: &Coweight,
    mu: &Coweight,
) -> Result<GradedSpace> {
    if !rd.is_dominant(lambda) {
        return Err(Error::PreconditionViolated(format!(
            "twisted statement needs dominant lambda, got {lambda}"
        )));
    }
    let target = mu.add(nu);
    if !rd.is_dominant(&target) {
        return Err(Error::PreconditionViolated(format!(
            "twisted statement needs dominant mu + nu, got {target}"
        )));
    }
    if !rd.is_dominant(mu) {
        return Ok(GradedSpace::empty());
    }
    let m = repcombinat::hom_multiplicity(rd, lambda, mu, &target)?;
    let h2 = rd.rho_pairing2(nu);
    Ok(GradedSpace::single(h2, m, -h2))
}

// ---------------------------------------------------------------------------
// Zero-orbit strata report

/// The three graded pieces of the zero-orbit consistency check: the strata
/// total, the complement, and their difference, as dimension-by-degree
/// tables. Constructing the report verifies that the difference equals the
/// zero-orbit cohomology; any mismatch aborts with `ConsistencyFailure`.
#[derive(Debug, Clone, Serialize)]
pub struct StrataReport {
    pub lambda: Coweight,
    pub mu: Coweight,
    pub shift: i64,
    pub total: BTreeMap<i64, u64>,
    pub complement: BTreeMap<i64, u64>,
    pub difference: BTreeMap<i64, u64>,
}

/// Stratify the compactified zero-orbit fiber and check the ledger: in the
/// indexing centered at degree zero, positive degrees see the cell-closure
/// cohomology shifted by `d = <2 rho, lambda>`, negative degrees see it
/// shifted by `d - 2`, and degree zero carries
/// `|Delta^mu_{lambda^vee}| + |Delta_{lambda^vee}|`. Subtracting the
/// complement (shift `d` on the right, `d - 2` on the left) must leave
/// exactly the zero-orbit answer; the identity behind the cancellation at
/// degree zero is `dim H^d = |Delta_{lambda^vee}|`, the count of cells of
/// middle dimension.
pub fn zero_orbit_strata_report(
    rd: &RootDatum,
    lambda: &Coweight,
    mu: &Coweight,
) -> Result<StrataReport> {
    let gp = poincare_gp(rd, lambda)?;
    let delta_mu = rd.delta_mu(lambda, mu)?.len() as u64;
    let delta_all = rd.delta_conjugates(lambda)?.len() as u64;
    let d = rd.rho_pairing2(lambda);

    let betti: BTreeMap<i64, u64> = gp.entries().map(|(deg, e)| (deg, e.dim)).collect();

    let mut total: BTreeMap<i64, u64> = BTreeMap::new();
    let mut complement: BTreeMap<i64, u64> = BTreeMap::new();
    for (&deg, &dim) in &betti {
        // total: H^{i+d} for i > 0, H^{i+d-2} for i < 0.
        let i_pos = deg - d;
        if i_pos > 0 {
            *total.entry(i_pos).or_insert(0) += dim;
        }
        let i_neg = deg - d + 2;
        if i_neg < 0 {
            *total.entry(i_neg).or_insert(0) += dim;
        }
        // complement: H^{i+d} for i >= 0, H^{i+d-2} for i < 0.
        if i_pos >= 0 {
            *complement.entry(i_pos).or_insert(0) += dim;
        }
        if i_neg < 0 {
            *complement.entry(i_neg).or_insert(0) += dim;
        }
    }
    *total.entry(0).or_insert(0) += delta_mu + delta_all;
    total.retain(|_, v| *v != 0);
    complement.retain(|_, v| *v != 0);

    let zero_orbit = coh_zero_orbit(rd, lambda, mu)?;
    let mut difference: BTreeMap<i64, u64> = BTreeMap::new();
    let degrees: std::collections::BTreeSet<i64> =
        total.keys().chain(complement.keys()).copied().collect();
    for &i in &degrees {
        let t = total.get(&i).copied().unwrap_or(0) as i64;
        let c = complement.get(&i).copied().unwrap_or(0) as i64;
        let diff = t - c;
        let expected = zero_orbit.get(i).map(|e| e.dim as i64).unwrap_or(0);
        if diff != expected {
            return Err(Error::ConsistencyFailure(format!(
                "strata ledger for lambda={lambda}, mu={mu} leaves {diff} in degree {i}, expected {expected}"
            )));
        }
        if diff != 0 {
            difference.insert(i, diff as u64);
        }
    }
    Ok(StrataReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        shift: d,
        total,
        complement,
        difference,
    })
}
