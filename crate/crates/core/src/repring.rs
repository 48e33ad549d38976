//! Hodge monodromy coefficients: the representation rings `R(Z2 x Z2)[q]`
//! over `C \ {±2}` and `R(Z2)[q]` over `C \ {0, ±1}`.
//!
//! The Klein four-group characters are ordered `(T, S2, S-2, S0)` everywhere,
//! with `S0 = S2 ⊗ S-2`. The order-two group has characters `(T, N)`.

use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::poly::{poly, IntPoly};

/// Element of `R(Z2 x Z2)[q]`, coefficients on `(T, S2, S-2, S0)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonodromyRep4 {
    #[serde(rename = "T")]
    pub t: IntPoly,
    #[serde(rename = "S2")]
    pub s2: IntPoly,
    #[serde(rename = "Sm2")]
    pub sm2: IntPoly,
    #[serde(rename = "S0")]
    pub s0: IntPoly,
}

/// Element of `R(Z2)[q]`, coefficients on `(T, N)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonodromyRep2 {
    #[serde(rename = "T")]
    pub t: IntPoly,
    #[serde(rename = "N")]
    pub n: IntPoly,
}

impl MonodromyRep4 {
    pub fn new(t: IntPoly, s2: IntPoly, sm2: IntPoly, s0: IntPoly) -> Self {
        Self { t, s2, sm2, s0 }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `T`.
    pub fn trivial() -> Self {
        Self::basis(0)
    }

    /// Basis character by slot: 0 = T, 1 = S2, 2 = S-2, 3 = S0.
    pub fn basis(slot: usize) -> Self {
        let mut r = Self::zero();
        *r.slot_mut(slot) = IntPoly::one();
        r
    }

    pub fn slots(&self) -> [&IntPoly; 4] {
        [&self.t, &self.s2, &self.sm2, &self.s0]
    }

    fn slot_mut(&mut self, slot: usize) -> &mut IntPoly {
        match slot {
            0 => &mut self.t,
            1 => &mut self.s2,
            2 => &mut self.sm2,
            3 => &mut self.s0,
            _ => panic!("Klein four-group slot {slot} out of range"),
        }
    }

    /// Product in `R(Z2 x Z2)[q]`.
    ///
    /// Characters multiply by XOR of their slot index, since the slots are
    /// `T = 00, S2 = 01, S-2 = 10, S0 = 11` as characters of `Z2 x Z2`.
    pub fn tensor(&self, other: &Self) -> Self {
        let lhs = self.slots();
        let rhs = other.slots();
        let mut out = Self::zero();
        for (i, x) in lhs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.iter().enumerate() {
                *out.slot_mut(i ^ j) += *x * *y;
            }
        }
        out
    }

    /// Pullback along `λ ↦ -λ`: swaps the `S2` and `S-2` slots.
    pub fn twist(&self) -> Self {
        Self::new(
            self.t.clone(),
            self.sm2.clone(),
            self.s2.clone(),
            self.s0.clone(),
        )
    }

    /// Restriction along the double cover `C \ {0, ±1} → C \ {±2}`:
    /// `T, S0 ↦ T` and `S2, S-2 ↦ N`.
    pub fn push_to_rep2(&self) -> MonodromyRep2 {
        MonodromyRep2 {
            t: &self.t + &self.s0,
            n: &self.s2 + &self.sm2,
        }
    }

    /// E-polynomial of the total space of a fibration over `C \ {±2}` with
    /// this Hodge monodromy: `(q - 2) T - (S2 + S-2 + S0)`.
    pub fn epoly(&self) -> IntPoly {
        let nontrivial = &(&self.s2 + &self.sm2) + &self.s0;
        &(&self.t * &poly(&[(1, 1), (0, -2)])) - &nontrivial
    }

    /// E-polynomial of a fibre: the sum of all four coefficients.
    pub fn fiber_epoly(&self) -> IntPoly {
        self.slots().into_iter().sum()
    }

    /// E-polynomial of `(PGL(2,C)/D × W)/Z2` where `W/Z2` has this Hodge
    /// monodromy: `(q^3 - 2q^2 - q) T - (q^2 + q)(S2 + S-2) - 2q S0`.
    pub fn w4_epoly(&self) -> IntPoly {
        let a = &self.t * &poly(&[(3, 1), (2, -2), (1, -1)]);
        let bc = &(&self.s2 + &self.sm2) * &poly(&[(2, 1), (1, 1)]);
        let d = &self.s0 * &poly(&[(1, -2)]);
        &(&a - &bc) + &d
    }

    /// Multiplies every coefficient by a polynomial.
    pub fn scale(&self, k: &IntPoly) -> Self {
        Self::new(&self.t * k, &self.s2 * k, &self.sm2 * k, &self.s0 * k)
    }

    /// Divides every coefficient exactly by `den`.
    pub fn div_exact(&self, den: &IntPoly) -> Result<Self> {
        Ok(Self::new(
            self.t.div_exact(den)?,
            self.s2.div_exact(den)?,
            self.sm2.div_exact(den)?,
            self.s0.div_exact(den)?,
        ))
    }
}

impl MonodromyRep2 {
    pub fn new(t: IntPoly, n: IntPoly) -> Self {
        Self { t, n }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn trivial() -> Self {
        Self::new(IntPoly::one(), IntPoly::zero())
    }

    pub fn sign() -> Self {
        Self::new(IntPoly::zero(), IntPoly::one())
    }

    /// Product in `R(Z2)[q]` with `N ⊗ N = T`.
    pub fn tensor(&self, other: &Self) -> Self {
        Self::new(
            &(&self.t * &other.t) + &(&self.n * &other.n),
            &(&self.t * &other.n) + &(&self.n * &other.t),
        )
    }

    /// E-polynomial of the total space over `C \ {0, ±1}`: `(q - 3) T - 2 N`.
    pub fn epoly(&self) -> IntPoly {
        &(&self.t * &poly(&[(1, 1), (0, -3)])) - &self.n.scale(2)
    }

    pub fn fiber_epoly(&self) -> IntPoly {
        &self.t + &self.n
    }

    pub fn scale(&self, k: &IntPoly) -> Self {
        Self::new(&self.t * k, &self.n * k)
    }

    pub fn div_exact(&self, den: &IntPoly) -> Result<Self> {
        Ok(Self::new(self.t.div_exact(den)?, self.n.div_exact(den)?))
    }
}

impl<'a> Add<&'a MonodromyRep4> for &'a MonodromyRep4 {
    type Output = MonodromyRep4;
    fn add(self, rhs: &'a MonodromyRep4) -> MonodromyRep4 {
        MonodromyRep4::new(
            &self.t + &rhs.t,
            &self.s2 + &rhs.s2,
            &self.sm2 + &rhs.sm2,
            &self.s0 + &rhs.s0,
        )
    }
}

impl<'a> Sub<&'a MonodromyRep4> for &'a MonodromyRep4 {
    type Output = MonodromyRep4;
    fn sub(self, rhs: &'a MonodromyRep4) -> MonodromyRep4 {
        MonodromyRep4::new(
            &self.t - &rhs.t,
            &self.s2 - &rhs.s2,
            &self.sm2 - &rhs.sm2,
            &self.s0 - &rhs.s0,
        )
    }
}

impl<'a> Mul<&'a MonodromyRep4> for &'a MonodromyRep4 {
    type Output = MonodromyRep4;
    fn mul(self, rhs: &'a MonodromyRep4) -> MonodromyRep4 {
        self.tensor(rhs)
    }
}

impl<'a> Add<&'a MonodromyRep2> for &'a MonodromyRep2 {
    type Output = MonodromyRep2;
    fn add(self, rhs: &'a MonodromyRep2) -> MonodromyRep2 {
        MonodromyRep2::new(&self.t + &rhs.t, &self.n + &rhs.n)
    }
}

impl<'a> Sub<&'a MonodromyRep2> for &'a MonodromyRep2 {
    type Output = MonodromyRep2;
    fn sub(self, rhs: &'a MonodromyRep2) -> MonodromyRep2 {
        MonodromyRep2::new(&self.t - &rhs.t, &self.n - &rhs.n)
    }
}

impl<'a> Mul<&'a MonodromyRep2> for &'a MonodromyRep2 {
    type Output = MonodromyRep2;
    fn mul(self, rhs: &'a MonodromyRep2) -> MonodromyRep2 {
        self.tensor(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn genus_one() -> MonodromyRep4 {
        MonodromyRep4::new(
            poly(&[(3, 1)]),
            poly(&[(1, -3)]),
            poly(&[(2, 3)]),
            poly(&[(0, -1)]),
        )
    }

    #[test]
    fn s2_times_sm2_is_s0() {
        let s2 = MonodromyRep4::basis(1);
        let sm2 = MonodromyRep4::basis(2);
        assert_eq!(s2.tensor(&sm2), MonodromyRep4::basis(3));
        for k in 1..4 {
            let s = MonodromyRep4::basis(k);
            assert_eq!(s.tensor(&s), MonodromyRep4::trivial());
        }
        assert_eq!(
            MonodromyRep4::basis(1).tensor(&MonodromyRep4::basis(3)),
            MonodromyRep4::basis(2)
        );
        assert_eq!(
            MonodromyRep4::basis(2).tensor(&MonodromyRep4::basis(3)),
            MonodromyRep4::basis(1)
        );
    }

    #[test]
    fn trivial_is_unit() {
        let r = genus_one();
        assert_eq!(MonodromyRep4::trivial().tensor(&r), r);
    }

    #[test]
    fn genus_one_square() {
        let r = genus_one();
        let expected = MonodromyRep4::new(
            poly(&[(6, 1), (4, 9), (2, 9), (0, 1)]),
            poly(&[(4, -6), (2, -6)]),
            poly(&[(5, 6), (1, 6)]),
            poly(&[(3, -20)]),
        );
        assert_eq!(r.tensor(&r), expected);
    }

    #[test]
    fn twist_examples() {
        let r = genus_one();
        let t = r.twist();
        assert_eq!(
            t,
            MonodromyRep4::new(
                poly(&[(3, 1)]),
                poly(&[(2, 3)]),
                poly(&[(1, -3)]),
                poly(&[(0, -1)])
            )
        );
        assert_eq!(t.twist(), r);
        assert_eq!(MonodromyRep4::trivial().twist(), MonodromyRep4::trivial());
    }

    #[test]
    fn push_examples() {
        let p = genus_one().push_to_rep2();
        assert_eq!(p.t, poly(&[(3, 1), (0, -1)]));
        assert_eq!(p.n, poly(&[(2, 3), (1, -3)]));
        assert_eq!(
            MonodromyRep4::trivial().push_to_rep2(),
            MonodromyRep2::trivial()
        );
        assert_eq!(
            MonodromyRep4::basis(3).push_to_rep2(),
            MonodromyRep2::trivial()
        );
    }

    #[test]
    fn epoly_examples() {
        assert_eq!(MonodromyRep4::trivial().epoly(), poly(&[(1, 1), (0, -2)]));
        assert_eq!(MonodromyRep4::basis(1).epoly(), poly(&[(0, -1)]));
        assert_eq!(
            genus_one().epoly(),
            poly(&[(4, 1), (3, -2), (2, -3), (1, 3), (0, 1)])
        );
    }

    #[test]
    fn rep2_epoly_examples() {
        assert_eq!(MonodromyRep2::trivial().epoly(), poly(&[(1, 1), (0, -3)]));
        assert_eq!(MonodromyRep2::sign().epoly(), poly(&[(0, -2)]));
        assert_eq!(
            genus_one().push_to_rep2().epoly(),
            poly(&[(4, 1), (3, -3), (2, -6), (1, 5), (0, 3)])
        );
    }

    #[test]
    fn fiber_epoly_examples() {
        assert_eq!(
            genus_one().fiber_epoly(),
            poly(&[(3, 1), (2, 3), (1, -3), (0, -1)])
        );
        assert_eq!(MonodromyRep4::trivial().fiber_epoly(), IntPoly::one());
        let genus_two = MonodromyRep4::new(
            poly(&[(9, 1), (7, -3), (5, 6)]),
            poly(&[(5, -45), (3, -15)]),
            poly(&[(6, 15), (4, 45)]),
            poly(&[(4, -6), (2, 3), (0, -1)]),
        );
        assert_eq!(
            genus_two.fiber_epoly(),
            poly(&[
                (9, 1),
                (7, -3),
                (6, 15),
                (5, -39),
                (4, 39),
                (3, -15),
                (2, 3),
                (0, -1)
            ])
        );
    }

    #[test]
    fn w4_epoly_examples() {
        assert_eq!(
            MonodromyRep4::trivial().w4_epoly(),
            poly(&[(3, 1), (2, -2), (1, -1)])
        );
        assert_eq!(MonodromyRep4::basis(3).w4_epoly(), poly(&[(1, -2)]));
        assert_eq!(
            genus_one().w4_epoly(),
            poly(&[(6, 1), (5, -2), (4, -4), (2, 3), (1, 2)])
        );
    }

    #[test]
    fn json_keys() {
        let v = serde_json::to_value(MonodromyRep4::trivial()).unwrap();
        assert_eq!(v["T"]["coeffs"][0][1], "1");
        assert!(v["Sm2"]["coeffs"].as_array().unwrap().is_empty());
        let r2: MonodromyRep2 = serde_json::from_value(serde_json::json!({
            "T": {"var": "q", "coeffs": [[1, "1"]]},
            "N": {"var": "q", "coeffs": []}
        }))
        .unwrap();
        assert_eq!(r2.t, IntPoly::q());
    }
}
