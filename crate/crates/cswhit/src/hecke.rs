//! The spherical Hecke algebra in its Satake-transported basis, the
//! Whittaker module it acts on, and the trace calculus that turns graded
//! ledger entries into Hecke/Whittaker coefficients.
//!
//! Products of basis elements decompose through tensor-product
//! multiplicities of the dual group; the action on Whittaker basis vectors
//! goes through `Hom` multiplicities. The geometric action evaluates the
//! twisted cohomology ledger term by term, multiplies in the normalizing
//! sign and half-power of `q`, and relies on nothing cancelling silently:
//! the suite re-proves numerically that signs and `q`-powers cancel to the
//! plain representation-theoretic coefficients.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::LaurentHalf;
use crate::mvgeom::{conjectural_cohomology, GradedSpace};
use crate::repcombinat;
use crate::rootdata::{Coweight, RootDatum};

// ---------------------------------------------------------------------------
// Element types

/// Element of the spherical Hecke algebra in the basis `{H_lambda}`,
/// indexed by dominant cocharacters; coefficients are exact Laurent
/// polynomials in `q^{1/2}` and zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HeckeElt {
    terms: BTreeMap<Coweight, LaurentHalf>,
}

/// Element of the Whittaker module in the basis `{phi_nu}`, indexed by
/// dominant cocharacters; same storage discipline as `HeckeElt`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WhittakerElt {
    terms: BTreeMap<Coweight, LaurentHalf>,
}

macro_rules! basis_element_impl {
    ($ty:ident, $letter:literal) => {
        impl $ty {
            pub fn zero() -> Self {
                Self::default()
            }

            /// The basis vector with coefficient one; errors on a
            /// non-dominant index.
            pub fn basis(rd: &RootDatum, index: &Coweight) -> Result<Self> {
                if !rd.is_dominant(index) {
                    return Err(Error::NotDominant(index.clone()));
                }
                let mut out = Self::zero();
                out.add_term(index.clone(), &LaurentHalf::one());
                Ok(out)
            }

            pub fn is_zero(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn terms(&self) -> impl Iterator<Item = (&Coweight, &LaurentHalf)> + '_ {
                self.terms.iter()
            }

            pub fn coeff(&self, index: &Coweight) -> LaurentHalf {
                self.terms.get(index).cloned().unwrap_or_else(LaurentHalf::zero)
            }

            /// Add `c` times the basis vector at `index`, dropping the term
            /// if the coefficient cancels to zero.
            pub fn add_term(&mut self, index: Coweight, c: &LaurentHalf) {
                if c.is_zero() {
                    return;
                }
                let entry = self.terms.entry(index);
                match entry {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c.clone());
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = e.get().add(c);
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = sum;
                        }
                    }
                }
            }

            pub fn add(&self, other: &Self) -> Self {
                let mut out = self.clone();
                for (k, c) in other.terms() {
                    out.add_term(k.clone(), c);
                }
                out
            }

            pub fn scale(&self, c: &LaurentHalf) -> Self {
                let mut out = Self::zero();
                for (k, v) in self.terms() {
                    out.add_term(k.clone(), &v.mul(c));
                }
                out
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.is_zero() {
                    return write!(f, "0");
                }
                for (i, (k, c)) in self.terms().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    if c == &LaurentHalf::one() {
                        write!(f, "{}{}", $letter, k)?;
                    } else {
                        write!(f, "({}) {}{}", c, $letter, k)?;
                    }
                }
                Ok(())
            }
        }

        impl Serialize for $ty {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                #[derive(Serialize)]
                struct Term<'a> {
                    coweight: &'a Coweight,
                    laurent: Vec<(i64, i64)>,
                }
                let terms: Vec<Term<'_>> = self
                    .terms()
                    .map(|(k, c)| Term {
                        coweight: k,
                        laurent: c.terms().collect(),
                    })
                    .collect();
                let mut s = serializer.serialize_struct("Elt", 2)?;
                s.serialize_field("basis", $letter)?;
                s.serialize_field("terms", &terms)?;
                s.end()
            }
        }
    };
}

basis_element_impl!(HeckeElt, "H");
basis_element_impl!(WhittakerElt, "phi");

// ---------------------------------------------------------------------------
// Algebra and module structure

/// Product in the spherical Hecke algebra: bilinear extension of
/// `H_lambda * H_mu = sum_xi mult(V^xi in V^lambda (x) V^mu) H_xi`.
pub fn hecke_mult(rd: &RootDatum, a: &HeckeElt, b: &HeckeElt) -> Result<HeckeElt> {
    let mut out = HeckeElt::zero();
    for (lam, ca) in a.terms() {
        for (mu, cb) in b.terms() {
            let c = ca.mul(cb);
            let table = repcombinat::tensor_decomposition(rd, &[lam.clone(), mu.clone()])?;
            for (xi, m) in table {
                out.add_term(xi, &c.scale(m as i64));
            }
        }
    }
    Ok(out)
}

/// Trace of Frobenius on a graded ledger entry: degree `i` with `d` lines
/// and `h` half-twists contributes `(-1)^i * d * q^{h/2}`.
pub fn trace_of_graded(space: &GradedSpace) -> LaurentHalf {
    let mut out = LaurentHalf::zero();
    for (degree, e) in space.entries() {
        let sign = if degree.rem_euclid(2) == 0 { 1 } else { -1 };
        out.add_term(e.half_twists, sign * e.dim as i64);
    }
    out
}

/// Action of the Hecke algebra on the Whittaker module: bilinear extension
/// of `phi_nu * H_lambda = sum_mu dim Hom(V^lambda (x) V^nu, V^mu) phi_mu`.
pub fn whittaker_action(rd: &RootDatum, f: &WhittakerElt, h: &HeckeElt) -> Result<WhittakerElt> {
    let mut out = WhittakerElt::zero();
    for (nu, cf) in f.terms() {
        for (lam, ch) in h.terms() {
            let c = cf.mul(ch);
            let table = repcombinat::tensor_decomposition(rd, &[lam.clone(), nu.clone()])?;
            for (mu, m) in table {
                out.add_term(mu, &c.scale(m as i64));
            }
        }
    }
    Ok(out)
}

/// The same action computed through the cohomology ledger: the coefficient
/// of `phi_mu` in `phi_nu * H_lambda` is
/// `(-1)^{<2 rho, lambda>} * q^{<rho, mu - nu>}` times the trace of the
/// twisted ledger entry for the direction `mu - nu` at twist `nu`. The
/// support is finite because the entry vanishes unless
/// `mu <= lambda + nu`. Signs and `q`-powers cancel identically, so every
/// stored coefficient is a plain nonnegative integer.
pub fn whittaker_action_geometric(
    rd: &RootDatum,
    nu: &Coweight,
    lambda: &Coweight,
) -> Result<WhittakerElt> {
    if !rd.is_dominant(nu) {
        return Err(Error::NotDominant(nu.clone()));
    }
    if !rd.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let sign = if rd.rho_pairing2(lambda).rem_euclid(2) == 0 {
        1
    } else {
        -1
    };
    let mut out = WhittakerElt::zero();
    for mu in rd.dominant_below(&lambda.add(nu))? {
        let direction = mu.sub(nu);
        let space = conjectural_cohomology(rd, lambda, &direction, nu)?;
        let prefactor =
            LaurentHalf::monomial_half(rd.rho_pairing2(&direction)).scale(sign);
        let coeff = prefactor.mul(&trace_of_graded(&space));
        out.add_term(mu, &coeff);
    }
    Ok(out)
}

/// The Casselman–Shalika check at `lambda`: the geometric pipeline applied
/// to the spherical vector must return exactly `phi_lambda`, and so must
/// the representation-theoretic action of `H_lambda` on `phi_0`.
pub fn verify_cs(rd: &RootDatum, lambda: &Coweight) -> Result<bool> {
    let origin = Coweight::zero(rd.rank());
    let target = WhittakerElt::basis(rd, lambda)?;
    let geometric = whittaker_action_geometric(rd, &origin, lambda)?;
    let algebraic = whittaker_action(
        rd,
        &WhittakerElt::basis(rd, &origin)?,
        &HeckeElt::basis(rd, lambda)?,
    )?;
    Ok(geometric == target && algebraic == target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    fn cw(v: &[i64]) -> Coweight {
        Coweight(v.to_vec())
    }

    fn h(rd: &RootDatum, v: &[i64]) -> HeckeElt {
        HeckeElt::basis(rd, &cw(v)).unwrap()
    }

    fn phi(rd: &RootDatum, v: &[i64]) -> WhittakerElt {
        WhittakerElt::basis(rd, &cw(v)).unwrap()
    }

    #[test]
    fn trace_reproduces_frozen_values() {
        // One even line twisted by -1 full Tate twist.
        let even = GradedSpace::single(2, 1, -2);
        assert_eq!(trace_of_graded(&even), LaurentHalf::monomial(-1));
        assert!(trace_of_graded(&GradedSpace::empty()).is_zero());
        // One odd line twisted by half a Tate twist.
        let odd = GradedSpace::single(1, 1, -1);
        assert_eq!(trace_of_graded(&odd), LaurentHalf::monomial_half(-1).scale(-1));
        // Negative odd degrees also pick up the sign.
        let neg = GradedSpace::single(-1, 2, 2);
        assert_eq!(trace_of_graded(&neg), LaurentHalf::monomial(1).scale(-2));
    }

    #[test]
    fn sl2_hecke_products() {
        let rd = fixtures::fixture("SL2").unwrap();
        let square = hecke_mult(&rd, &h(&rd, &[1]), &h(&rd, &[1])).unwrap();
        let expected = h(&rd, &[2]).add(&h(&rd, &[1])).add(&h(&rd, &[0]));
        assert_eq!(square, expected);
        // The unit acts trivially.
        let unit = hecke_mult(&rd, &h(&rd, &[0]), &square).unwrap();
        assert_eq!(unit, square);
    }

    #[test]
    fn pgl2_hecke_products() {
        let rd = fixtures::fixture("PGL2").unwrap();
        let square = hecke_mult(&rd, &h(&rd, &[1]), &h(&rd, &[1])).unwrap();
        assert_eq!(square, h(&rd, &[2]).add(&h(&rd, &[0])));
    }

    #[test]
    fn basis_vectors_must_be_dominant() {
        let rd = fixtures::fixture("SL2").unwrap();
        assert!(matches!(
            HeckeElt::basis(&rd, &cw(&[-1])).unwrap_err(),
            Error::NotDominant(_)
        ));
        assert!(matches!(
            WhittakerElt::basis(&rd, &cw(&[-2])).unwrap_err(),
            Error::NotDominant(_)
        ));
    }

    #[test]
    fn whittaker_action_frozen_values() {
        let rd = fixtures::fixture("SL2").unwrap();
        let from_zero = whittaker_action(&rd, &phi(&rd, &[0]), &h(&rd, &[1])).unwrap();
        assert_eq!(from_zero, phi(&rd, &[1]));
        let from_coroot = whittaker_action(&rd, &phi(&rd, &[1]), &h(&rd, &[1])).unwrap();
        let expected = phi(&rd, &[2]).add(&phi(&rd, &[1])).add(&phi(&rd, &[0]));
        assert_eq!(from_coroot, expected);
        let by_unit = whittaker_action(&rd, &from_coroot, &h(&rd, &[0])).unwrap();
        assert_eq!(by_unit, from_coroot);
    }

    #[test]
    fn geometric_action_frozen_values() {
        let rd = fixtures::fixture("SL2").unwrap();
        assert_eq!(
            whittaker_action_geometric(&rd, &cw(&[0]), &cw(&[1])).unwrap(),
            phi(&rd, &[1])
        );
        assert_eq!(
            whittaker_action_geometric(&rd, &cw(&[0]), &cw(&[0])).unwrap(),
            phi(&rd, &[0])
        );
        let twisted = whittaker_action_geometric(&rd, &cw(&[1]), &cw(&[1])).unwrap();
        let expected = phi(&rd, &[2]).add(&phi(&rd, &[1])).add(&phi(&rd, &[0]));
        assert_eq!(twisted, expected);
    }

    #[test]
    fn geometric_handles_half_integral_twists() {
        // The minuscule PGL2 case runs through genuinely half-integral
        // powers of q before they cancel.
        let rd = fixtures::fixture("PGL2").unwrap();
        assert_eq!(
            whittaker_action_geometric(&rd, &cw(&[0]), &cw(&[1])).unwrap(),
            phi(&rd, &[1])
        );
        let twisted = whittaker_action_geometric(&rd, &cw(&[1]), &cw(&[1])).unwrap();
        assert_eq!(twisted, phi(&rd, &[2]).add(&phi(&rd, &[0])));
    }

    #[test]
    fn verify_cs_on_named_cases() {
        let sl2 = fixtures::fixture("SL2").unwrap();
        assert!(verify_cs(&sl2, &cw(&[1])).unwrap());
        assert!(verify_cs(&sl2, &cw(&[0])).unwrap());
        let pgl2 = fixtures::fixture("PGL2").unwrap();
        assert!(verify_cs(&pgl2, &cw(&[1])).unwrap());
        let a2 = fixtures::fixture("A2adj").unwrap();
        assert!(verify_cs(&a2, &cw(&[1, 1])).unwrap());
        assert!(matches!(
            verify_cs(&sl2, &cw(&[-1])).unwrap_err(),
            Error::NotDominant(_)
        ));
    }

    #[test]
    fn geometric_matches_algebraic_in_small_box() {
        for rd in fixtures::all_fixtures() {
            for nu in rd.dominant_up_to_height(3).unwrap() {
                for lam in rd.dominant_up_to_height(3).unwrap() {
                    let geometric = whittaker_action_geometric(&rd, &nu, &lam).unwrap();
                    let algebraic = whittaker_action(
                        &rd,
                        &WhittakerElt::basis(&rd, &nu).unwrap(),
                        &HeckeElt::basis(&rd, &lam).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(geometric, algebraic, "{} nu={nu} lam={lam}", rd.name());
                    for (_, c) in geometric.terms() {
                        let constant = c.coeff_half(0);
                        assert!(constant > 0);
                        assert_eq!(c, &LaurentHalf::constant(constant));
                    }
                }
            }
        }
    }

    #[test]
    fn hecke_commutes_and_associates_at_height_two() {
        for rd in fixtures::all_fixtures() {
            let box2 = rd.dominant_up_to_height(2).unwrap();
            for a in &box2 {
                for b in &box2 {
                    let ha = HeckeElt::basis(&rd, a).unwrap();
                    let hb = HeckeElt::basis(&rd, b).unwrap();
                    assert_eq!(
                        hecke_mult(&rd, &ha, &hb).unwrap(),
                        hecke_mult(&rd, &hb, &ha).unwrap()
                    );
                    for c in &box2 {
                        let hc = HeckeElt::basis(&rd, c).unwrap();
                        let left = hecke_mult(&rd, &hecke_mult(&rd, &ha, &hb).unwrap(), &hc)
                            .unwrap();
                        let right = hecke_mult(&rd, &ha, &hecke_mult(&rd, &hb, &hc).unwrap())
                            .unwrap();
                        assert_eq!(left, right, "{} {a} {b} {c}", rd.name());
                        let phi_a = WhittakerElt::basis(&rd, a).unwrap();
                        let step = whittaker_action(&rd, &phi_a, &hb).unwrap();
                        let module_left = whittaker_action(&rd, &step, &hc).unwrap();
                        let module_right = whittaker_action(
                            &rd,
                            &phi_a,
                            &hecke_mult(&rd, &hb, &hc).unwrap(),
                        )
                        .unwrap();
                        assert_eq!(module_left, module_right, "{} {a} {b} {c}", rd.name());
                    }
                }
            }
        }
    }

    #[test]
    fn element_json_shape() {
        let rd = fixtures::fixture("SL2").unwrap();
        let mut elt = HeckeElt::basis(&rd, &cw(&[1])).unwrap();
        elt.add_term(cw(&[0]), &LaurentHalf::monomial_half(-1).scale(2));
        let json = serde_json::to_value(&elt).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "basis": "H",
                "terms": [
                    {"coweight": [0], "laurent": [[-1, 2]]},
                    {"coweight": [1], "laurent": [[0, 1]]}
                ]
            })
        );
        let phi0 = WhittakerElt::basis(&rd, &cw(&[0])).unwrap();
        assert_eq!(
            serde_json::to_value(&phi0).unwrap()["basis"],
            serde_json::json!("phi")
        );
    }

    #[test]
    fn display_is_readable() {
        let rd = fixtures::fixture("SL2").unwrap();
        let sum = h(&rd, &[2]).add(&h(&rd, &[0]).scale(&LaurentHalf::monomial(-1)));
        assert_eq!(format!("{sum}"), "(q^-1) H(0) + H(2)");
        assert_eq!(format!("{}", HeckeElt::zero()), "0");
        assert_eq!(format!("{}", phi(&rd, &[1])), "phi(1)");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn bilinearity_with_random_coefficients(
            ca in -3i64..=3,
            cb in -3i64..=3,
            ha in 0i64..=2,
            hb in 0i64..=2,
        ) {
            let rd = fixtures::fixture("B2").unwrap();
            let a = h(&rd, &[ha, 0]).scale(&LaurentHalf::monomial_half(ca).scale(ca));
            let b = h(&rd, &[0, hb]).scale(&LaurentHalf::constant(cb));
            let f = phi(&rd, &[1, 0]);
            // (f * a) + (f * b) = f * (a + b)
            let split = whittaker_action(&rd, &f, &a).unwrap()
                .add(&whittaker_action(&rd, &f, &b).unwrap());
            let joint = whittaker_action(&rd, &f, &a.add(&b)).unwrap();
            prop_assert_eq!(split, joint);
            // Products distribute the same way.
            let left = hecke_mult(&rd, &a.add(&b), &a).unwrap();
            let right = hecke_mult(&rd, &a, &a).unwrap()
                .add(&hecke_mult(&rd, &b, &a).unwrap());
            prop_assert_eq!(left, right);
        }
    }
}
