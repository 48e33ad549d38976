//! The genus recursion `v_g = M v_{g-1}` on sector vectors, and the closed
//! forms it solves to.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gluing::{glue_r4, glue_sector, Sector, SectorVector};
use crate::poly::{poly, two_pow, IntPoly};
use crate::repring::MonodromyRep4;

/// Literal sector data for genus 0, 1 and 2.
///
/// # Panics
/// For `g > 2`.
pub fn base_vector(g: u32) -> SectorVector {
    let c = match g {
        0 => [
            poly(&[(0, 1)]),
            IntPoly::zero(),
            IntPoly::zero(),
            IntPoly::zero(),
            IntPoly::zero(),
            IntPoly::zero(),
            IntPoly::zero(),
            IntPoly::zero(),
        ],
        1 => [
            poly(&[(4, 1), (3, 4), (2, -1), (1, -4)]),
            poly(&[(3, 1), (1, -1)]),
            poly(&[(3, 1), (2, -2), (1, -3)]),
            poly(&[(3, 1), (2, 3)]),
            poly(&[(3, 1)]),
            poly(&[(1, -3)]),
            poly(&[(2, 3)]),
            poly(&[(0, -1)]),
        ],
        2 => [
            poly(&[(9, 1), (8, 1), (7, 12), (6, 2), (4, -3), (3, -12), (1, -1)]),
            poly(&[(9, 1), (7, -3), (6, -30), (4, 30), (3, 3), (1, -1)]),
            poly(&[(9, 1), (7, -3), (6, -4), (5, -39), (4, -4), (3, -15)]),
            poly(&[(9, 1), (7, -3), (6, 15), (5, 6), (4, 45)]),
            poly(&[(9, 1), (7, -3), (5, 6)]),
            poly(&[(5, -45), (3, -15)]),
            poly(&[(6, 15), (4, 45)]),
            poly(&[(4, -6), (2, 3), (0, -1)]),
        ],
        _ => panic!("no literal sector data for genus {g}"),
    };
    SectorVector::from_components(g, c)
}

/// 8×8 matrix over `Z[q]` acting on `(e0, e1, e2, e3, a, b, c, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferMatrix {
    entries: [[IntPoly; 8]; 8],
}

fn standard_entries() -> [[IntPoly; 8]; 8] {
    let p = poly;
    [
        [
            p(&[(4, 1), (3, 4), (2, -1), (1, -4)]),
            p(&[(3, 1), (1, -1)]),
            p(&[(5, 1), (4, -2), (3, -4), (2, 2), (1, 3)]),
            p(&[(5, 1), (4, 3), (3, -1), (2, -3)]),
            p(&[(6, 1), (5, -2), (4, -4), (2, 3), (1, 2)]),
            p(&[(5, -1), (4, -4), (2, 4), (1, 1)]),
            p(&[(5, 2), (4, -7), (3, -3), (2, 7), (1, 1)]),
            p(&[(4, -5), (3, -1), (2, 5), (1, 1)]),
        ],
        [
            p(&[(3, 1), (1, -1)]),
            p(&[(4, 1), (3, 4), (2, -1), (1, -4)]),
            p(&[(5, 1), (4, 3), (3, -1), (2, -3)]),
            p(&[(5, 1), (4, -2), (3, -4), (2, 2), (1, 3)]),
            p(&[(6, 1), (5, -2), (4, -4), (2, 3), (1, 2)]),
            p(&[(5, 2), (4, -7), (3, -3), (2, 7), (1, 1)]),
            p(&[(5, -1), (4, -4), (2, 4), (1, 1)]),
            p(&[(4, -5), (3, -1), (2, 5), (1, 1)]),
        ],
        [
            p(&[(3, 1), (2, -2), (1, -3)]),
            p(&[(3, 1), (2, 3)]),
            p(&[(5, 1), (4, 1), (2, 3), (1, 3)]),
            p(&[(5, 1), (3, -3), (2, -6)]),
            p(&[(6, 1), (5, -2), (4, -3), (3, 1), (2, 3)]),
            p(&[(5, -1), (4, 2), (3, -4), (2, 3)]),
            p(&[(5, -1), (4, -1), (3, -4), (2, 6)]),
            p(&[(4, -2), (3, -1), (2, 3)]),
        ],
        [
            p(&[(3, 1), (2, 3)]),
            p(&[(3, 1), (2, -2), (1, -3)]),
            p(&[(5, 1), (3, -3), (2, -6)]),
            p(&[(5, 1), (4, 1), (2, 3), (1, 3)]),
            p(&[(6, 1), (5, -2), (4, -3), (3, 1), (2, 3)]),
            p(&[(5, -1), (4, -1), (3, -4), (2, 6)]),
            p(&[(5, -1), (4, 2), (3, -4), (2, 3)]),
            p(&[(4, -2), (3, -1), (2, 3)]),
        ],
        [
            p(&[(3, 1)]),
            p(&[(3, 1)]),
            p(&[(5, 1), (3, -3)]),
            p(&[(5, 1), (3, -3)]),
            p(&[(6, 1), (5, -2), (4, -2), (3, 4), (2, 1)]),
            p(&[(5, -1), (4, -1), (3, 2)]),
            p(&[(5, -1), (4, -1), (3, 2)]),
            p(&[(4, -2)]),
        ],
        [
            p(&[(1, -3)]),
            p(&[(2, 3)]),
            p(&[(3, 3), (1, 3)]),
            p(&[(2, -6)]),
            p(&[(3, -3), (2, 3)]),
            p(&[(4, 4), (3, -6), (2, 4)]),
            p(&[(3, -8), (2, 6)]),
            p(&[(3, -3), (2, 3)]),
        ],
        [
            p(&[(2, 3)]),
            p(&[(1, -3)]),
            p(&[(2, -6)]),
            p(&[(3, 3), (1, 3)]),
            p(&[(3, -3), (2, 3)]),
            p(&[(3, -8), (2, 6)]),
            p(&[(4, 4), (3, -6), (2, 4)]),
            p(&[(3, -3), (2, 3)]),
        ],
        [
            p(&[(0, -1)]),
            p(&[(0, -1)]),
            p(&[(2, 2)]),
            p(&[(2, 2)]),
            p(&[(2, -4), (0, 2)]),
            p(&[(2, -2), (1, 1), (0, 1)]),
            p(&[(2, -2), (1, 1), (0, 1)]),
            p(&[(4, 1), (2, -2), (1, 2), (0, 1)]),
        ],
    ]
}

/// `(q^3 - q)^2`, the factor by which `M` scales the total mass.
fn mass_factor() -> IntPoly {
    poly(&[(3, 1), (1, -1)]).pow(2)
}

impl TransferMatrix {
    /// Validates `entries` and wraps them.
    ///
    /// Checked: `M v0 = v1`, `M v1 = v2`, `M v2` equals the closed form at
    /// genus 3, the mass functional scales by `(q^3 - q)^2` on every column,
    /// rows 1–4 agree entrywise with the glued coefficients against `v1`, and
    /// the sums of rows 5+8 and 6+7 agree with the glued `(T, N)` monodromy.
    /// Every failure is collected into the error.
    pub fn new(entries: [[IntPoly; 8]; 8]) -> Result<Self> {
        let m = Self { entries };
        let problems = m.problems();
        if problems.is_empty() {
            Ok(m)
        } else {
            Err(Error::MatrixInconsistent {
                location: problems[0].0.clone(),
                detail: problems
                    .iter()
                    .map(|(loc, what)| format!("{loc}: {what}"))
                    .collect::<Vec<_>>()
                    .join("; "),
            })
        }
    }

    /// The validated standard matrix, built once per process.
    pub fn standard() -> &'static TransferMatrix {
        static M: OnceLock<TransferMatrix> = OnceLock::new();
        M.get_or_init(|| {
            TransferMatrix::new(standard_entries())
                .expect("transcribed transfer matrix is inconsistent")
        })
    }

    pub fn entry(&self, row: usize, col: usize) -> &IntPoly {
        &self.entries[row][col]
    }

    pub fn entries(&self) -> &[[IntPoly; 8]; 8] {
        &self.entries
    }

    /// `M v`, tagging the result with genus `v.genus + 1`.
    pub fn apply(&self, v: &SectorVector) -> SectorVector {
        let comps = v.components();
        let out: [IntPoly; 8] = std::array::from_fn(|i| {
            let mut acc = IntPoly::zero();
            for (m, x) in self.entries[i].iter().zip(comps) {
                if !m.is_zero() && !x.is_zero() {
                    acc += m * x;
                }
            }
            acc
        });
        SectorVector::from_components(v.genus + 1, out)
    }

    fn problems(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        let v1 = base_vector(1);

        let mut vector_check = |input: &SectorVector, want: &SectorVector, label: &str| {
            let got = self.apply(input);
            for (i, (g, w)) in got.components().iter().zip(want.components()).enumerate() {
                if *g != w {
                    out.push((
                        format!("row {}", i + 1),
                        format!("{label} residual {}", *g - w),
                    ));
                }
            }
        };
        vector_check(&base_vector(0), &v1, "M·v0 - v1");
        vector_check(&v1, &base_vector(2), "M·v1 - v2");
        vector_check(
            &base_vector(2),
            &closed_form_vector(3),
            "M·v2 - closed form at genus 3",
        );

        let factor = mass_factor();
        for j in 0..8 {
            let unit = SectorVector::unit(j);
            let lhs = self.apply(&unit).total_mass();
            let rhs = &factor * &unit.total_mass();
            if lhs != rhs {
                out.push((
                    format!("column {}", j + 1),
                    format!("mass residual {}", lhs - rhs),
                ));
            }
        }

        for j in 0..8 {
            let unit = SectorVector::unit(j);
            for s in Sector::ALL {
                let want = glue_sector(s, &unit, &v1);
                let got = &self.entries[s.index()][j];
                if *got != want {
                    out.push((
                        format!("row {}, column {}", s.index() + 1, j + 1),
                        format!("entry {got} but gluing gives {want}"),
                    ));
                }
            }
            let r4 = glue_r4(&unit, &v1);
            let sum_t = &self.entries[4][j] + &self.entries[7][j];
            if sum_t != r4.t {
                out.push((
                    format!("rows 5+8, column {}", j + 1),
                    format!("sum {sum_t} but gluing gives {}", r4.t),
                ));
            }
            let sum_n = &self.entries[5][j] + &self.entries[6][j];
            if sum_n != r4.n {
                out.push((
                    format!("rows 6+7, column {}", j + 1),
                    format!("sum {sum_n} but gluing gives {}", r4.n),
                ));
            }
        }
        out
    }

    /// Diagonal of the eigenvalue matrix:
    /// `(q^2-q)^2, (q^2+q)^2, 4(q^2-q)^2, 4(q^2+q)^2, (q^2-1)^2, (q^3-q)^2, (q^2-q)^2, (q^2+q)^2`.
    pub fn eigenvalues() -> [IntPoly; 8] {
        let minus = poly(&[(2, 1), (1, -1)]).pow(2);
        let plus = poly(&[(2, 1), (1, 1)]).pow(2);
        [
            minus.clone(),
            plus.clone(),
            minus.scale(4),
            plus.scale(4),
            poly(&[(2, 1), (0, -1)]).pow(2),
            mass_factor(),
            minus,
            plus,
        ]
    }
}

/// `v_g = M^g v0` by iterated matrix-vector products.
pub fn sector_vector(g: u32) -> SectorVector {
    let m = TransferMatrix::standard();
    let mut v = base_vector(0);
    for _ in 0..g {
        v = m.apply(&v);
    }
    v
}

/// `[v_0, v_1, ..., v_{g_max}]`.
pub fn sector_vectors(g_max: u32) -> Vec<SectorVector> {
    let m = TransferMatrix::standard();
    let mut out = Vec::with_capacity(g_max as usize + 1);
    out.push(base_vector(0));
    for g in 1..=g_max as usize {
        let next = m.apply(&out[g - 1]);
        out.push(next);
    }
    out
}

/// Polynomials shared by the closed forms at one genus.
struct Powers {
    genus: u32,
    q: IntPoly,
    q_minus_1: IntPoly,
    q_plus_1: IntPoly,
}

impl Powers {
    fn new(genus: u32) -> Self {
        Self {
            genus,
            q: IntPoly::q(),
            q_minus_1: poly(&[(1, 1), (0, -1)]),
            q_plus_1: poly(&[(1, 1), (0, 1)]),
        }
    }

    /// `(q^3-q)^n`, `(q^2-1)^n`, `(q^2-q)^n`, `(q^2+q)^n`
    fn cubic(&self, n: u32) -> IntPoly {
        poly(&[(3, 1), (1, -1)]).pow(n)
    }
    fn sq_minus_one(&self, n: u32) -> IntPoly {
        poly(&[(2, 1), (0, -1)]).pow(n)
    }
    fn sq_minus_q(&self, n: u32) -> IntPoly {
        poly(&[(2, 1), (1, -1)]).pow(n)
    }
    fn sq_plus_q(&self, n: u32) -> IntPoly {
        poly(&[(2, 1), (1, 1)]).pow(n)
    }
    fn q_pow(&self, n: u32) -> IntPoly {
        IntPoly::monomial(1, n as usize)
    }
    fn plus_pow(&self, n: u32) -> IntPoly {
        self.q_plus_1.pow(n)
    }
    fn minus_pow(&self, n: u32) -> IntPoly {
        self.q_minus_1.pow(n)
    }
    /// `2^{2g}`
    fn four_g(&self) -> num_bigint::BigInt {
        two_pow(2 * self.genus)
    }
    /// `2^{2g-1}`
    fn half_four_g(&self) -> num_bigint::BigInt {
        two_pow(2 * self.genus - 1)
    }
}

/// The eight closed-form polynomials at genus `g >= 1`.
///
/// Terms carrying a factor `1/2` are assembled doubled and divided exactly
/// by 2, so a transcription slip surfaces as [`Error::NonExactDivision`].
pub fn try_closed_form_vector(g: u32) -> Result<SectorVector> {
    if g == 0 {
        return Err(Error::GenusOutOfRange { genus: g, min: 1 });
    }
    let w = Powers::new(g);
    let n1 = 2 * g - 1;
    let n2 = 2 * g - 2;
    let big = w.four_g();
    let half = w.half_four_g();
    let half_minus_1: num_bigint::BigInt = &half - 1;

    let sum1 = &w.plus_pow(n1) + &w.minus_pow(n1);
    let diff1 = &w.plus_pow(n1) - &w.minus_pow(n1);
    let sum2 = &w.plus_pow(n2) + &w.minus_pow(n2);

    // e0 = (q^3-q)[(q^3-q)^{2g-2} + (q^2-1)^{2g-2} - (q^2-q)^{2g-2}
    //      + ½ q^{2g-2}(q + 2^{2g} - 1)((q+1)^{2g-2} + (q-1)^{2g-2})]
    let e0 = {
        let twice = (&w.cubic(n2) + &w.sq_minus_one(n2) - w.sq_minus_q(n2)).scale(2)
            + &(&w.q_pow(n2) * &(&w.q + &IntPoly::constant(&big - 1))) * &sum2;
        &w.cubic(1) * &twice.div_exact_int(2)?
    };
    let e1 = {
        let inner = &w.cubic(n2) + &w.sq_minus_one(n2) - w.sq_plus_q(n2).scale(half.clone())
            + w.sq_minus_q(n2).scale(half_minus_1.clone());
        &w.cubic(1) * &inner
    };
    let e2 = {
        let twice = (w.cubic(n1) + w.sq_minus_q(n1).scale(half_minus_1.clone())
            - w.sq_plus_q(n1).scale(half.clone()))
        .scale(2)
            - &(&w.q_pow(n1) * &w.q_minus_1) * &diff1;
        twice.div_exact_int(2)?
    };
    let e3 = w.cubic(n1)
        + w.sq_minus_q(n1).scale(half_minus_1.clone())
        + w.sq_plus_q(n1).scale(half.clone());
    let a = (w.cubic(n1).scale(2) + &w.q_pow(n1) * &diff1).div_exact_int(2)?;
    let b = ((w.sq_minus_q(n1) - w.sq_plus_q(n1)).scale(&half * 2) + &w.q_pow(n1) * &diff1)
        .div_exact_int(2)?;
    let c = ((w.sq_minus_q(n1) + w.sq_plus_q(n1)).scale(&half * 2) - &w.q_pow(n1) * &sum1)
        .div_exact_int(2)?;
    let d = (w.sq_minus_one(n1).scale(2) - &w.q_pow(n1) * &sum1).div_exact_int(2)?;

    Ok(SectorVector::new(
        g,
        [e0, e1, e2, e3],
        MonodromyRep4::new(a, b, c, d),
    ))
}

/// As [`try_closed_form_vector`]; panics on `g == 0` or a non-integral half.
pub fn closed_form_vector(g: u32) -> SectorVector {
    try_closed_form_vector(g).expect("closed form evaluation")
}

/// `a + b + c + d` in closed form:
/// `(q^3-q)^{2g-1} + (q^2-1)^{2g-1} + (2^{2g}-2)(q^2-q)^{2g-1}`.
pub fn closed_form_fiber(g: u32) -> Result<IntPoly> {
    if g == 0 {
        return Err(Error::GenusOutOfRange { genus: g, min: 1 });
    }
    let w = Powers::new(g);
    let n1 = 2 * g - 1;
    Ok(w.cubic(n1) + w.sq_minus_one(n1) + w.sq_minus_q(n1).scale(w.four_g() - 2))
}
