//! Genus addition: from sector data of surfaces of genus `k` and `h`, the
//! sector data of the connected sum of genus `k + h`.
//!
//! Every formula here is bilinear in the two inputs. The `(T, S2, S-2, S0)`
//! products are computed once per call in [`GlueCoefficients`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::{poly, IntPoly};
use crate::repring::{MonodromyRep2, MonodromyRep4};

/// The four holonomy sectors with a fixed central or Jordan matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sector {
    /// Product of commutators equal to `Id`.
    Identity,
    /// Equal to `-Id`.
    MinusIdentity,
    /// Equal to `J+ = [[1,1],[0,1]]`.
    JordanPlus,
    /// Equal to `J- = [[-1,1],[0,-1]]`.
    JordanMinus,
}

impl Sector {
    pub const ALL: [Sector; 4] = [
        Sector::Identity,
        Sector::MinusIdentity,
        Sector::JordanPlus,
        Sector::JordanMinus,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Sector> {
        Self::ALL.get(i).copied()
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.index())
    }
}

/// The 8-tuple `(e0, e1, e2, e3, a, b, c, d)` for one genus.
///
/// `e0..e3` are the E-polynomials of the sets of `2g`-tuples whose product of
/// commutators is `Id`, `-Id`, `J+`, `J-`. `rep` is the Hodge monodromy of
/// the `ξ_λ` family over `C \ {±2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorVector {
    pub genus: u32,
    pub e: [IntPoly; 4],
    pub rep: MonodromyRep4,
}

impl SectorVector {
    pub fn new(genus: u32, e: [IntPoly; 4], rep: MonodromyRep4) -> Self {
        Self { genus, e, rep }
    }

    /// Builds from the eight components in slot order.
    pub fn from_components(genus: u32, c: [IntPoly; 8]) -> Self {
        let [e0, e1, e2, e3, a, b, cc, d] = c;
        Self::new(genus, [e0, e1, e2, e3], MonodromyRep4::new(a, b, cc, d))
    }

    /// The eight components `(e0, e1, e2, e3, a, b, c, d)`.
    pub fn components(&self) -> [&IntPoly; 8] {
        [
            &self.e[0],
            &self.e[1],
            &self.e[2],
            &self.e[3],
            &self.rep.t,
            &self.rep.s2,
            &self.rep.sm2,
            &self.rep.s0,
        ]
    }

    pub fn sector(&self, s: Sector) -> &IntPoly {
        &self.e[s.index()]
    }

    /// Unit vector in slot `j`, used to read matrix columns off bilinear maps.
    pub fn unit(slot: usize) -> Self {
        let mut c: [IntPoly; 8] = Default::default();
        c[slot] = IntPoly::one();
        Self::from_components(0, c)
    }

    /// The total-mass combination
    /// `e0 + e1 + (q^2-1)(e2 + e3) + (q^3-2q^2-q) a - (q^2+q)(b + c) - 2q d`,
    /// which is the E-polynomial of `SL(2,C)^{2g}`, i.e. `(q^3 - q)^{2g}`.
    pub fn total_mass(&self) -> IntPoly {
        let jordan = &(&self.e[2] + &self.e[3]) * &poly(&[(2, 1), (0, -1)]);
        &(&(&self.e[0] + &self.e[1]) + &jordan) + &self.rep.w4_epoly()
    }

    /// Checks that `e0..e3` and `a` have degree `6g - 3` and leading
    /// coefficient 1. Only meaningful from genus 2 (at genus 1, `e0` has
    /// degree 4); vacuously true below.
    pub fn is_monic_of_expected_degree(&self) -> bool {
        if self.genus < 2 {
            return true;
        }
        let want = 6 * self.genus as usize - 3;
        self.e
            .iter()
            .chain(std::iter::once(&self.rep.t))
            .all(|p| p.degree() == Some(want) && p.leading_coeff().is_some_and(|c| *c == 1.into()))
    }
}

/// Tensor products of the two input monodromies: `untwisted = R_k ⊗ R_h`
/// and `twisted = R_k ⊗ τ*R_h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueCoefficients {
    pub untwisted: MonodromyRep4,
    pub twisted: MonodromyRep4,
}

impl GlueCoefficients {
    pub fn new(left: &MonodromyRep4, right: &MonodromyRep4) -> Self {
        Self {
            untwisted: left.tensor(right),
            twisted: left.tensor(&right.twist()),
        }
    }
}

/// Everything produced by one gluing of genus `k` and `h` data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlueOutput {
    pub genus: u32,
    pub e: [IntPoly; 4],
    pub r4: MonodromyRep2,
}

/// `(q - 3)(A + D) - 2(B + C)`: E-polynomial over `C \ {0, ±1}` after pulling
/// back along the double cover.
fn double_cover_epoly(r: &MonodromyRep4) -> IntPoly {
    r.push_to_rep2().epoly()
}

/// The q-weighted contribution of the strata where both traces avoid `±2`
/// minus the diagonal, shared by sectors 2 and 3:
/// `q (e2 + e3 + E4)_k (e2 + e3 + E4)_h + q (e(Z5) - e(Z5/Z2))`.
fn jordan_bulk(left: &SectorVector, right: &SectorVector, coeffs: &MonodromyRep4) -> IntPoly {
    let q = IntPoly::q();
    let lk = &(&left.e[2] + &left.e[3]) + &left.rep.epoly();
    let lh = &(&right.e[2] + &right.e[3]) + &right.rep.epoly();
    let diag = &double_cover_epoly(coeffs) - &coeffs.epoly();
    &(&(&q * &lk) * &lh) + &(&q * &diag)
}

fn glue_identity(l: &SectorVector, r: &SectorVector, gc: &GlueCoefficients) -> IntPoly {
    let [e0k, e1k, e2k, e3k] = &l.e;
    let [e0h, e1h, e2h, e3h] = &r.e;
    let jordan = &(&(e2k * e2h) + &(e3k * e3h)) * &poly(&[(2, 1), (0, -1)]);
    &(&(&(e0k * e0h) + &(e1k * e1h)) + &jordan) + &gc.untwisted.w4_epoly()
}

fn glue_minus_identity(l: &SectorVector, r: &SectorVector, gc: &GlueCoefficients) -> IntPoly {
    let [e0k, e1k, e2k, e3k] = &l.e;
    let [e0h, e1h, e2h, e3h] = &r.e;
    let jordan = &(&(e2k * e3h) + &(e3k * e2h)) * &poly(&[(2, 1), (0, -1)]);
    &(&(&(e0k * e1h) + &(e1k * e0h)) + &jordan) + &gc.twisted.w4_epoly()
}

fn glue_jordan_plus(l: &SectorVector, r: &SectorVector, gc: &GlueCoefficients) -> IntPoly {
    let [e0k, e1k, e2k, e3k] = &l.e;
    let [e0h, e1h, e2h, e3h] = &r.e;
    let mut out = &(e2k * e0h) + &(e0k * e2h);
    out += &(e3k * e1h);
    out += &(e1k * e3h);
    out -= &(&(e2k * e2h) + &(e3k * e3h)).scale(2);
    out += &jordan_bulk(l, r, &gc.untwisted);
    out
}

// The pairs with one trace 2 and the other -2 contribute
// (q-2) e3_k e2_h + (q-2) e2_k e3_h; the -2 parts of those appear here.
fn glue_jordan_minus(l: &SectorVector, r: &SectorVector, gc: &GlueCoefficients) -> IntPoly {
    let [e0k, e1k, e2k, e3k] = &l.e;
    let [e0h, e1h, e2h, e3h] = &r.e;
    let mut out = &(e2k * e1h) + &(e1k * e2h);
    out += &(e0k * e3h);
    out += &(e3k * e0h);
    out -= &(&(e3k * e2h) + &(e2k * e3h)).scale(2);
    out += &jordan_bulk(l, r, &gc.twisted);
    out
}

fn glue_r4_with(l: &SectorVector, r: &SectorVector) -> MonodromyRep2 {
    let q = IntPoly::q();
    let q_minus_1 = poly(&[(1, 1), (0, -1)]);
    let rk = l.rep.push_to_rep2();
    let rh = r.rep.push_to_rep2();
    let fiber_k = l.rep.fiber_epoly();
    let fiber_h = r.rep.fiber_epoly();

    // two Jordan traces plus both diagonalizable traces, no monodromy
    let bulk_k = &(&l.e[2] + &l.e[3]) + &l.rep.epoly();
    let bulk_h = &(&r.e[2] + &r.e[3]) + &r.rep.epoly();
    let bulk = &(&q_minus_1 * &bulk_k) * &bulk_h;

    // one side central or Jordan, other side carrying the λ-monodromy
    let edge_k = &(&l.e[0] + &l.e[1]) + &(&q_minus_1 * &(&l.e[2] + &l.e[3]));
    let edge_h = &(&r.e[0] + &r.e[1]) + &(&q_minus_1 * &(&r.e[2] + &r.e[3]));

    // the hyperbola stratum, pushed from C* x C* down to the λ line
    let hyper = MonodromyRep2::new(&q_minus_1 * &(&rh.t * &rk.t), &q_minus_1 * &(&rh.n * &rk.n));
    let hyper = &(&hyper - &rh.scale(&fiber_k.scale(2))) - &rk.scale(&fiber_h.scale(2));

    let mut out = MonodromyRep2::new(bulk, IntPoly::zero());
    out = &out + &rh.scale(&edge_k);
    out = &out + &rk.scale(&edge_h);
    &out + &hyper.scale(&q)
}

/// E-polynomial of sector `sector` at genus `left.genus + right.genus`.
pub fn glue_sector(sector: Sector, left: &SectorVector, right: &SectorVector) -> IntPoly {
    let gc = GlueCoefficients::new(&left.rep, &right.rep);
    glue_sector_with(sector, left, right, &gc)
}

/// As [`glue_sector`] with precomputed coefficients.
pub fn glue_sector_with(
    sector: Sector,
    left: &SectorVector,
    right: &SectorVector,
    gc: &GlueCoefficients,
) -> IntPoly {
    match sector {
        Sector::Identity => glue_identity(left, right, gc),
        Sector::MinusIdentity => glue_minus_identity(left, right, gc),
        Sector::JordanPlus => glue_jordan_plus(left, right, gc),
        Sector::JordanMinus => glue_jordan_minus(left, right, gc),
    }
}

/// `(T, N)` Hodge monodromy of the `ξ_λ` family at genus `k + h` over
/// `C \ {0, ±1}`.
pub fn glue_r4(left: &SectorVector, right: &SectorVector) -> MonodromyRep2 {
    glue_r4_with(left, right)
}

/// All four sectors and the `(T, N)` monodromy in one pass.
pub fn glue(left: &SectorVector, right: &SectorVector) -> GlueOutput {
    let gc = GlueCoefficients::new(&left.rep, &right.rep);
    let e = Sector::ALL.map(|s| glue_sector_with(s, left, right, &gc));
    GlueOutput {
        genus: left.genus + right.genus,
        e,
        r4: glue_r4_with(left, right),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recursion::{base_vector, sector_vector};

    #[test]
    fn genus_two_sectors_from_two_tori() {
        let v1 = base_vector(1);
        let v2 = base_vector(2);
        for s in Sector::ALL {
            assert_eq!(glue_sector(s, &v1, &v1), v2.e[s.index()], "sector {s}");
        }
    }

    #[test]
    fn genus_two_sector_literals() {
        let v1 = base_vector(1);
        assert_eq!(
            glue_sector(Sector::Identity, &v1, &v1),
            poly(&[(9, 1), (8, 1), (7, 12), (6, 2), (4, -3), (3, -12), (1, -1)])
        );
        assert_eq!(
            glue_sector(Sector::MinusIdentity, &v1, &v1),
            poly(&[(9, 1), (7, -3), (6, -30), (4, 30), (3, 3), (1, -1)])
        );
        assert_eq!(
            glue_sector(Sector::JordanMinus, &v1, &v1),
            poly(&[(9, 1), (7, -3), (6, 15), (5, 6), (4, 45)])
        );
    }

    #[test]
    fn genus_two_r4() {
        let v1 = base_vector(1);
        let r = glue_r4(&v1, &v1);
        assert_eq!(
            r.t,
            poly(&[(9, 1), (7, -3), (5, 6), (4, -6), (2, 3), (0, -1)])
        );
        assert_eq!(r.n, poly(&[(6, 15), (5, -45), (4, 45), (3, -15)]));
    }

    #[test]
    fn symmetric_in_left_and_right() {
        let v1 = base_vector(1);
        let v2 = base_vector(2);
        let a = glue(&v2, &v1);
        let b = glue(&v1, &v2);
        assert_eq!(a, b);
        assert_eq!(a.r4, sector_vector(3).rep.push_to_rep2());
    }

    #[test]
    fn unit_vectors_are_inert_for_genus() {
        let u = SectorVector::unit(4);
        assert_eq!(u.rep, MonodromyRep4::trivial());
        assert_eq!(u.components().iter().filter(|p| !p.is_zero()).count(), 1);
    }

    #[test]
    fn total_mass_of_torus() {
        let v1 = base_vector(1);
        assert_eq!(v1.total_mass(), poly(&[(3, 1), (1, -1)]).pow(2));
    }
}
