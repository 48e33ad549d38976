//! E-polynomials of the character varieties `M_C` for the five holonomy
//! types, and the identity checks they satisfy.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gluing::SectorVector;
use crate::poly::{poly, two_pow, IntPoly};
use crate::recursion::sector_vectors;
use crate::repring::MonodromyRep2;

/// Holonomy around the puncture.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HolonomyClass {
    /// `Id`
    Id,
    /// `-Id`
    MinusId,
    /// `J+ = [[1,1],[0,1]]`
    #[serde(rename = "jplus")]
    JPlus,
    /// `J- = [[-1,1],[0,-1]]`
    #[serde(rename = "jminus")]
    JMinus,
    /// `ξ_λ = diag(λ, 1/λ)` with `λ ≠ 0, ±1`
    #[serde(rename = "xi")]
    XiLambda,
}

impl HolonomyClass {
    pub const ALL: [HolonomyClass; 5] = [
        HolonomyClass::Id,
        HolonomyClass::MinusId,
        HolonomyClass::JPlus,
        HolonomyClass::JMinus,
        HolonomyClass::XiLambda,
    ];

    /// Stable lowercase tag used on the command line and in serialized output.
    pub fn tag(self) -> &'static str {
        match self {
            HolonomyClass::Id => "id",
            HolonomyClass::MinusId => "minus-id",
            HolonomyClass::JPlus => "jplus",
            HolonomyClass::JMinus => "jminus",
            HolonomyClass::XiLambda => "xi",
        }
    }

    /// Complex dimension of `M_C` for `g >= 2`.
    pub fn dimension(self, g: u32) -> usize {
        let g = g as usize;
        match self {
            HolonomyClass::Id | HolonomyClass::MinusId => 6 * g - 6,
            _ => 6 * g - 4,
        }
    }

    /// Euler characteristic for `g >= 2`.
    pub fn euler_characteristic(self, g: u32) -> BigInt {
        match self {
            HolonomyClass::Id => two_pow(4 * g - 3) - two_pow(2 * g - 2) * 3,
            HolonomyClass::MinusId => -two_pow(4 * g - 3),
            HolonomyClass::JPlus => -two_pow(4 * g - 2),
            HolonomyClass::JMinus => two_pow(4 * g - 2),
            HolonomyClass::XiLambda => BigInt::from(0),
        }
    }

    /// Lowest-degree monomial `(exponent, coefficient)` of `e(M_C)` for `g >= 2`.
    pub fn trailing_term(self, g: u32) -> (usize, BigInt) {
        let four_g = two_pow(2 * g);
        match self {
            HolonomyClass::JPlus => (2 * g as usize - 2, BigInt::from(1) - four_g),
            HolonomyClass::JMinus => (2 * g as usize - 1, (four_g - 1) * (2 * g - 1)),
            _ => (0, BigInt::from(1)),
        }
    }
}

impl fmt::Display for HolonomyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for HolonomyClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        HolonomyClass::ALL
            .into_iter()
            .find(|h| h.tag() == s)
            .ok_or_else(|| Error::UnknownHolonomy(s.to_owned()))
    }
}

fn check_genus(g: u32) -> Result<()> {
    if g == 0 {
        Err(Error::GenusOutOfRange { genus: g, min: 1 })
    } else {
        Ok(())
    }
}

fn q_cubed_minus_q() -> IntPoly {
    poly(&[(3, 1), (1, -1)])
}

fn q_minus_one() -> IntPoly {
    poly(&[(1, 1), (0, -1)])
}

/// The strata of the reducible locus for `C = Id`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibleBreakdown {
    pub genus: u32,
    /// Diagonalizable reducibles away from `±1` eigenvalues.
    pub r1: IntPoly,
    /// Non-split extensions away from `±1` eigenvalues.
    pub r2: IntPoly,
    /// The `2^{2g}` central tuples.
    pub r3: IntPoly,
    /// Jordan-type extensions of central tuples.
    pub r4: IntPoly,
    pub total_r: IntPoly,
    /// E-polynomial of the reducible part of `M_Id`.
    pub red: IntPoly,
    /// E-polynomial of the irreducible part of `M_Id`.
    pub irr: IntPoly,
}

impl ReducibleBreakdown {
    pub fn moduli(&self) -> IntPoly {
        &self.irr + &self.red
    }
}

/// Splits the genus-`g` identity sector `e0` into reducible strata and the
/// irreducible quotient.
pub fn reducible_breakdown_from(v: &SectorVector) -> Result<ReducibleBreakdown> {
    let g = v.genus;
    check_genus(g)?;
    let q = IntPoly::q();
    let plus = poly(&[(1, 1), (0, 1)]);
    let minus = q_minus_one();
    let four_g = IntPoly::constant(two_pow(2 * g));
    let n = 2 * g;

    let r1 = (&q_cubed_minus_q() * &(&plus.pow(n - 1) + &minus.pow(n - 1))).div_exact_int(2)?
        - &four_g * &q.pow(2);
    let r2 = &(&plus * &(q.pow(n - 1) - q.clone())) * &(minus.pow(n) - four_g.clone());
    let r3 = four_g.clone();
    let r4 = &(&four_g * &(q.pow(n) - IntPoly::one())) * &plus;
    let total_r = &(&r1 + &r2) + &(&r3 + &r4);
    let red = (&minus.pow(n) + &plus.pow(n)).div_exact_int(2)?;
    let irr = (&v.e[0] - &total_r).div_exact(&q_cubed_minus_q())?;
    Ok(ReducibleBreakdown {
        genus: g,
        r1,
        r2,
        r3,
        r4,
        total_r,
        red,
        irr,
    })
}

pub fn reducible_breakdown(g: u32) -> Result<ReducibleBreakdown> {
    check_genus(g)?;
    reducible_breakdown_from(&crate::recursion::sector_vector(g))
}

/// `e(M_C)` from genus-`g` sector data by dividing out the stabilizer of `C`;
/// for `Id` via the reducible/irreducible split.
pub fn moduli_epoly_from(c: HolonomyClass, v: &SectorVector) -> Result<IntPoly> {
    check_genus(v.genus)?;
    match c {
        HolonomyClass::Id => Ok(reducible_breakdown_from(v)?.moduli()),
        HolonomyClass::MinusId => v.e[1].div_exact(&q_cubed_minus_q()),
        HolonomyClass::JPlus => v.e[2].div_exact(&IntPoly::q()),
        HolonomyClass::JMinus => v.e[3].div_exact(&IntPoly::q()),
        HolonomyClass::XiLambda => v.rep.fiber_epoly().div_exact(&q_minus_one()),
    }
}

pub fn moduli_epoly(c: HolonomyClass, g: u32) -> Result<IntPoly> {
    check_genus(g)?;
    moduli_epoly_from(c, &crate::recursion::sector_vector(g))
}

/// The expanded closed formula for `e(M_C)`, computed without the recursion.
pub fn closed_form_epoly(c: HolonomyClass, g: u32) -> Result<IntPoly> {
    check_genus(g)?;
    let n1 = 2 * g - 1;
    let n2 = 2 * g - 2;
    let q = IntPoly::q();
    let cubic = q_cubed_minus_q().pow(n2);
    let sq_m1 = poly(&[(2, 1), (0, -1)]);
    let sq_minus_q = poly(&[(2, 1), (1, -1)]).pow(n2);
    let sq_plus_q = poly(&[(2, 1), (1, 1)]).pow(n2);
    let plus = poly(&[(1, 1), (0, 1)]);
    let minus = q_minus_one();
    let four_g = two_pow(2 * g);
    let half = two_pow(2 * g - 1);
    let q_n2 = q.pow(n2);
    let half_m1: BigInt = &half - 1;
    let four_g_m1: BigInt = &four_g - 1;
    let four_g_m2: BigInt = &four_g - 2;

    let out = match c {
        HolonomyClass::Id => {
            let mut twice =
                (&cubic + &sq_m1.pow(n2) - &q * &sq_minus_q - q_n2.scale(four_g.clone())).scale(2);
            twice +=
                &(&q_n2 * &(&q + &IntPoly::constant(four_g_m1))) * &(plus.pow(n2) + minus.pow(n2));
            twice += &q * &(plus.pow(n1) + minus.pow(n1));
            twice.div_exact_int(2)?
        }
        HolonomyClass::MinusId => {
            &cubic + &sq_m1.pow(n2) - sq_plus_q.scale(half.clone())
                + sq_minus_q.scale(half_m1.clone())
        }
        HolonomyClass::JPlus => {
            let mut twice = (&cubic * &sq_m1 + (&minus * &sq_minus_q).scale(half_m1.clone())
                - (&plus * &sq_plus_q).scale(half.clone()))
            .scale(2);
            twice += &(&q_n2 * &minus) * &(minus.pow(n1) - plus.pow(n1));
            twice.div_exact_int(2)?
        }
        HolonomyClass::JMinus => {
            &cubic * &sq_m1
                + (&minus * &sq_minus_q).scale(half_m1.clone())
                + (&plus * &sq_plus_q).scale(half.clone())
        }
        HolonomyClass::XiLambda => {
            &cubic * &poly(&[(2, 1), (1, 1)])
                + &sq_m1.pow(n2) * &plus
                + (&sq_minus_q * &q).scale(four_g_m2)
        }
    };
    Ok(out)
}

/// `(T, N)` split of `e(M_{ξ_λ})` into invariant and non-invariant parts
/// under the monodromy in `λ`, from sector data.
pub fn parabolic_hodge_monodromy_from(v: &SectorVector) -> Result<MonodromyRep2> {
    check_genus(v.genus)?;
    v.rep.push_to_rep2().div_exact(&q_minus_one())
}

pub fn parabolic_hodge_monodromy(g: u32) -> Result<MonodromyRep2> {
    check_genus(g)?;
    parabolic_hodge_monodromy_from(&crate::recursion::sector_vector(g))
}

/// Closed formula for the parabolic `(T, N)` split.
pub fn parabolic_closed_form(g: u32) -> Result<MonodromyRep2> {
    check_genus(g)?;
    let n2 = 2 * g - 2;
    let q = IntPoly::q();
    let sq_minus_q = poly(&[(2, 1), (1, -1)]).pow(n2);
    let t = &q_cubed_minus_q().pow(n2) * &poly(&[(2, 1), (1, 1)])
        + &poly(&[(1, 1), (0, 1)]) * &poly(&[(2, 1), (0, -1)]).pow(n2)
        - &q * &sq_minus_q;
    let n = (&q * &sq_minus_q).scale(two_pow(2 * g) - 1u32);
    Ok(MonodromyRep2::new(t, n))
}

/// One identity evaluated at one genus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub genus: u32,
    pub passed: bool,
    /// Difference of the two sides; zero when the identity holds.
    pub residual: IntPoly,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl IdentityCheck {
    fn residual(identity: impl Into<String>, genus: u32, residual: IntPoly) -> Self {
        Self {
            identity: identity.into(),
            genus,
            passed: residual.is_zero(),
            residual,
            detail: None,
        }
    }

    fn flag(identity: impl Into<String>, genus: u32, passed: bool, detail: String) -> Self {
        Self {
            identity: identity.into(),
            genus,
            passed,
            residual: IntPoly::zero(),
            detail: Some(detail),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub max_genus: u32,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn find(&self, identity: &str, genus: u32) -> Option<&IdentityCheck> {
        self.checks
            .iter()
            .find(|c| c.identity == identity && c.genus == genus)
    }
}

/// Palindromic residual `p - q^d p(1/q)`.
fn palindrome_residual(p: &IntPoly, d: usize) -> Result<IntPoly> {
    Ok(p - &p.reversed(d)?)
}

/// Runs every identity for `1 <= g <= g_max`.
///
/// The Euler characteristic, degree and extreme-monomial checks only hold
/// from genus 2 on and are skipped at genus 1.
pub fn check_identities(g_max: u32) -> Result<IdentityReport> {
    check_genus(g_max)?;
    let vectors = sector_vectors(g_max);
    let mut checks = Vec::new();
    for v in &vectors[1..] {
        checks.extend(identities_at(v)?);
    }
    Ok(IdentityReport {
        max_genus: g_max,
        checks,
    })
}

fn identities_at(v: &SectorVector) -> Result<Vec<IdentityCheck>> {
    let g = v.genus;
    let mut out = Vec::new();
    let moduli: Vec<IntPoly> = HolonomyClass::ALL
        .iter()
        .map(|&c| moduli_epoly_from(c, v))
        .collect::<Result<_>>()?;
    let get = |c: HolonomyClass| &moduli[c as usize];

    for c in HolonomyClass::ALL {
        let residual = get(c) - &closed_form_epoly(c, g)?;
        out.push(IdentityCheck::residual(
            format!("closed-form/{c}"),
            g,
            residual,
        ));
    }

    let hausel = &(get(HolonomyClass::JMinus)
        + &(&poly(&[(1, 1), (0, 1)]) * get(HolonomyClass::MinusId)))
        - get(HolonomyClass::XiLambda);
    out.push(IdentityCheck::residual("hausel", g, hausel));

    let mass = &v.total_mass() - &q_cubed_minus_q().pow(2 * g);
    out.push(IdentityCheck::residual("total-mass", g, mass));

    let closed = crate::recursion::try_closed_form_vector(g)?;
    let (ours, theirs) = (v.components(), closed.components());
    let mismatched: Vec<usize> = (0..8).filter(|&i| ours[i] != theirs[i]).collect();
    out.push(IdentityCheck::flag(
        "sector-closed-form",
        g,
        mismatched.is_empty(),
        if mismatched.is_empty() {
            "all eight components agree".to_owned()
        } else {
            format!("components {mismatched:?} differ")
        },
    ));

    let parabolic = parabolic_hodge_monodromy_from(v)?;
    let parabolic_closed = parabolic_closed_form(g)?;
    out.push(IdentityCheck::residual(
        "parabolic/T",
        g,
        &parabolic.t - &parabolic_closed.t,
    ));
    out.push(IdentityCheck::residual(
        "parabolic/N",
        g,
        &parabolic.n - &parabolic_closed.n,
    ));
    out.push(IdentityCheck::residual(
        "parabolic/sum",
        g,
        &parabolic.fiber_epoly() - get(HolonomyClass::XiLambda),
    ));

    let top = 6 * g as usize;
    out.push(IdentityCheck::residual(
        "palindromic/minus-id",
        g,
        palindrome_residual(get(HolonomyClass::MinusId), top - 6)?,
    ));
    out.push(IdentityCheck::residual(
        "palindromic/xi",
        g,
        palindrome_residual(get(HolonomyClass::XiLambda), top - 4)?,
    ));
    out.push(IdentityCheck::residual(
        "palindromic/xi-T",
        g,
        palindrome_residual(&parabolic.t, top - 4)?,
    ));
    out.push(IdentityCheck::residual(
        "palindromic/xi-N",
        g,
        palindrome_residual(&parabolic.n, top - 4)?,
    ));
    for c in [HolonomyClass::JPlus, HolonomyClass::JMinus] {
        let palindromic = get(c).is_palindromic(top - 4)?;
        out.push(IdentityCheck::flag(
            format!("not-palindromic/{c}"),
            g,
            !palindromic,
            format!("palindromic at degree {}: {palindromic}", top - 4),
        ));
    }

    if g >= 2 {
        for c in HolonomyClass::ALL {
            let p = get(c);
            let chi = p.eval_i64(1);
            let want = c.euler_characteristic(g);
            out.push(IdentityCheck::residual(
                format!("euler/{c}"),
                g,
                IntPoly::constant(chi - want),
            ));

            let dim = c.dimension(g);
            let lead_ok = p.degree() == Some(dim) && p.leading_coeff() == Some(&BigInt::from(1));
            out.push(IdentityCheck::flag(
                format!("leading/{c}"),
                g,
                lead_ok,
                format!(
                    "leading term {:?}, expected q^{dim}",
                    p.leading_term().map(|(e, c)| format!("{c}q^{e}"))
                ),
            ));

            let (exp, coeff) = c.trailing_term(g);
            let got = p
                .trailing_term()
                .map(|(e, c)| IntPoly::monomial(c.clone(), e))
                .unwrap_or_default();
            out.push(IdentityCheck::residual(
                format!("trailing/{c}"),
                g,
                got - IntPoly::monomial(coeff, exp),
            ));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_round_trip() {
        for c in HolonomyClass::ALL {
            assert_eq!(c.tag().parse::<HolonomyClass>().unwrap(), c);
            assert_eq!(serde_json::to_value(c).unwrap(), c.tag());
        }
        assert!(matches!(
            "bogus".parse::<HolonomyClass>(),
            Err(Error::UnknownHolonomy(_))
        ));
    }

    #[test]
    fn genus_two_identity() {
        assert_eq!(
            moduli_epoly(HolonomyClass::Id, 2).unwrap(),
            poly(&[(6, 1), (4, 17), (2, 1), (0, 1)])
        );
    }

    #[test]
    fn genus_two_minus_identity() {
        assert_eq!(
            moduli_epoly(HolonomyClass::MinusId, 2).unwrap(),
            poly(&[(6, 1), (4, -2), (3, -30), (2, -2), (0, 1)])
        );
    }

    #[test]
    fn genus_one_parabolic() {
        assert_eq!(
            moduli_epoly(HolonomyClass::XiLambda, 1).unwrap(),
            poly(&[(2, 1), (1, 4), (0, 1)])
        );
        let r = parabolic_hodge_monodromy(1).unwrap();
        assert_eq!(r.t, poly(&[(2, 1), (1, 1), (0, 1)]));
        assert_eq!(r.n, poly(&[(1, 3)]));
    }

    #[test]
    fn genus_two_parabolic_n_part() {
        let r = parabolic_hodge_monodromy(2).unwrap();
        assert_eq!(r.n, poly(&[(5, 15), (4, -30), (3, 15)]));
        for g in 1..=5 {
            let r = parabolic_hodge_monodromy(g).unwrap();
            assert_eq!(
                r.fiber_epoly(),
                moduli_epoly(HolonomyClass::XiLambda, g).unwrap()
            );
        }
    }

    #[test]
    fn genus_one_jordan() {
        assert_eq!(
            moduli_epoly(HolonomyClass::JPlus, 1).unwrap(),
            poly(&[(2, 1), (1, -2), (0, -3)])
        );
        assert_eq!(
            moduli_epoly(HolonomyClass::JMinus, 1).unwrap(),
            poly(&[(2, 1), (1, 3)])
        );
    }

    #[test]
    fn reducible_strata_genus_one() {
        let b = reducible_breakdown(1).unwrap();
        assert_eq!(b.r3, IntPoly::constant(4));
        assert_eq!(b.red, poly(&[(2, 1), (0, 1)]));
        assert_eq!(b.r4, &poly(&[(2, 4), (0, -4)]) * &poly(&[(1, 1), (0, 1)]));
        assert_eq!(b.total_r, &(&b.r1 + &b.r2) + &(&b.r3 + &b.r4));
        assert_eq!(b.moduli(), closed_form_epoly(HolonomyClass::Id, 1).unwrap());
    }

    #[test]
    fn reducible_total_closed_form() {
        // e(R) = (q^3-q)(½((q+1)^{2g-1} - (q-1)^{2g-1}) + 2^{2g} q^{2g-2} + (q-1)(q^2-q)^{2g-2})
        for g in 1..=6u32 {
            let b = reducible_breakdown(g).unwrap();
            let plus = poly(&[(1, 1), (0, 1)]);
            let minus = poly(&[(1, 1), (0, -1)]);
            let half_diff = (plus.pow(2 * g - 1) - minus.pow(2 * g - 1))
                .div_exact_int(2)
                .unwrap();
            let inner = half_diff
                + IntPoly::monomial(two_pow(2 * g), 2 * g as usize - 2)
                + &minus * &poly(&[(2, 1), (1, -1)]).pow(2 * g - 2);
            assert_eq!(b.total_r, &q_cubed_minus_q() * &inner, "genus {g}");
        }
    }

    #[test]
    fn jordan_trailing_terms_at_genus_two() {
        let jp = moduli_epoly(HolonomyClass::JPlus, 2).unwrap();
        assert_eq!(
            jp.trailing_term().map(|(e, c)| (e, c.clone())),
            Some((2, BigInt::from(-15)))
        );
        let jm = moduli_epoly(HolonomyClass::JMinus, 2).unwrap();
        assert_eq!(
            jm.trailing_term().map(|(e, c)| (e, c.clone())),
            Some((3, BigInt::from(45)))
        );
    }

    #[test]
    fn euler_characteristic_of_parabolic_vanishes() {
        assert_eq!(
            moduli_epoly(HolonomyClass::XiLambda, 4)
                .unwrap()
                .eval_i64(1),
            BigInt::from(0)
        );
        assert_eq!(
            moduli_epoly(HolonomyClass::JMinus, 2).unwrap().eval_i64(1),
            BigInt::from(64)
        );
    }

    #[test]
    fn identities_pass_to_genus_three() {
        let report = check_identities(3).unwrap();
        let failures: Vec<_> = report.failures().collect();
        assert!(failures.is_empty(), "{failures:#?}");
        assert!(report.find("euler/xi", 1).is_none());
        assert!(report.find("euler/xi", 2).is_some());
    }

    #[test]
    fn genus_zero_is_rejected() {
        assert!(moduli_epoly(HolonomyClass::Id, 0).is_err());
        assert!(check_identities(0).is_err());
        assert!(reducible_breakdown(0).is_err());
    }
}
