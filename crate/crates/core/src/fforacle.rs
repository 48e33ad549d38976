//! Point counts over `F_p` by brute force, as an independent check on the
//! E-polynomials.
//!
//! For `G = SL(2, F_p)` the number of tuples `(A1, B1, ..., Ag, Bg)` with
//! `prod [Ai, Bi] = C` is the `g`-fold convolution of the commutator
//! distribution, read at `C`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::recursion::sector_vectors;

/// Largest prime accepted; the commutator loop is quadratic in `|G| ~ p^3`.
pub const MAX_PRIME: u64 = 31;

const NONE: u32 = u32::MAX;

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// `SL(2, F_p)` with inverse and conjugacy-class tables.
#[derive(Debug)]
pub struct GroupTable {
    p: u32,
    elements: Vec<[u32; 4]>,
    lookup: Vec<u32>,
    inv: Vec<u32>,
    class_of: Vec<u32>,
    class_reps: Vec<u32>,
    class_sizes: Vec<u64>,
    structure: OnceLock<Vec<u32>>,
}

impl GroupTable {
    pub fn build(p: u64) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if p > MAX_PRIME {
            return Err(Error::PrimeTooLarge { p, max: MAX_PRIME });
        }
        let p = p as u32;
        let mut elements = Vec::with_capacity((p * (p * p - 1)) as usize);
        let mut lookup = vec![NONE; (p as usize).pow(4)];
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        if (a * d + p * p - b * c % p) % p == 1 {
                            lookup[key(p, [a, b, c, d])] = elements.len() as u32;
                            elements.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        let inv = elements
            .iter()
            .map(|&[a, b, c, d]| lookup[key(p, [d, (p - b) % p, (p - c) % p, a])])
            .collect();
        let mut table = GroupTable {
            p,
            elements,
            lookup,
            inv,
            class_of: Vec::new(),
            class_reps: Vec::new(),
            class_sizes: Vec::new(),
            structure: OnceLock::new(),
        };
        table.compute_classes();
        Ok(table)
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let mut class_of = vec![NONE; n];
        for x in 0..n {
            if class_of[x] != NONE {
                continue;
            }
            let id = self.class_reps.len() as u32;
            self.class_reps.push(x as u32);
            let mut size = 0;
            for h in 0..n {
                let y = self.mul(self.mul(h, x), self.inv(h));
                if class_of[y] == NONE {
                    class_of[y] = id;
                    size += 1;
                }
            }
            self.class_sizes.push(size);
        }
        self.class_of = class_of;
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> [u32; 4] {
        self.elements[i]
    }

    /// Index of the matrix `[[a, b], [c, d]]` with entries reduced mod `p`.
    pub fn index_of(&self, m: [i64; 4]) -> Result<usize> {
        let p = self.p as i64;
        let r = m.map(|x| x.rem_euclid(p) as u32);
        match self.lookup[key(self.p, r)] {
            NONE => Err(Error::NotInGroup { p: self.p() }),
            i => Ok(i as usize),
        }
    }

    pub fn identity(&self) -> usize {
        self.lookup[key(self.p, [1, 0, 0, 1])] as usize
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        let p = self.p;
        let [a, b, c, d] = self.elements[i];
        let [e, f, g, h] = self.elements[j];
        let m = [
            (a * e + b * g) % p,
            (a * f + b * h) % p,
            (c * e + d * g) % p,
            (c * f + d * h) % p,
        ];
        self.lookup[key(p, m)] as usize
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    pub fn class_count(&self) -> usize {
        self.class_reps.len()
    }

    pub fn class_reps(&self) -> impl Iterator<Item = usize> + '_ {
        self.class_reps.iter().map(|&r| r as usize)
    }

    pub fn class_size(&self, class: usize) -> u64 {
        self.class_sizes[class]
    }

    /// `N[z][c1][c2] = #{x in c1 : x^-1 z in c2}` for `z` the representative
    /// of each class, flattened.
    fn structure(&self) -> &[u32] {
        self.structure.get_or_init(|| {
            let k = self.class_count();
            let mut n = vec![0u32; k * k * k];
            for (cz, &z) in self.class_reps.iter().enumerate() {
                for x in 0..self.order() {
                    let c1 = self.class_of(x);
                    let c2 = self.class_of(self.mul(self.inv(x), z as usize));
                    n[(cz * k + c1) * k + c2] += 1;
                }
            }
            n
        })
    }
}

fn key(p: u32, [a, b, c, d]: [u32; 4]) -> usize {
    let p = p as usize;
    ((a as usize * p + b as usize) * p + c as usize) * p + d as usize
}

/// `f(x) = #{(A, B) : [A, B] = x}` for every group element.
pub fn commutator_counts(t: &GroupTable) -> Vec<u64> {
    let n = t.order();
    (0..n)
        .into_par_iter()
        .fold(
            || vec![0u64; n],
            |mut acc, a| {
                for b in 0..n {
                    acc[t.commutator(a, b)] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; n],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
                x
            },
        )
}

/// An integer-valued function constant on conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    values: Vec<BigInt>,
}

impl ClassFunction {
    pub fn from_values(values: Vec<BigInt>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &BigInt {
        &self.values[class]
    }

    pub fn at(&self, t: &GroupTable, element: usize) -> &BigInt {
        self.value(t.class_of(element))
    }

    /// `sum_x f(x)`.
    pub fn total_mass(&self, t: &GroupTable) -> BigInt {
        self.values
            .iter()
            .enumerate()
            .map(|(c, v)| v * t.class_size(c))
            .sum()
    }

    /// `(f * h)(z) = sum_x f(x) h(x^-1 z)`.
    pub fn convolve(&self, other: &ClassFunction, t: &GroupTable) -> ClassFunction {
        let k = t.class_count();
        let n = t.structure();
        let values = (0..k)
            .map(|cz| {
                let mut acc = BigInt::zero();
                for c1 in 0..k {
                    if self.values[c1].is_zero() {
                        continue;
                    }
                    for c2 in 0..k {
                        let m = n[(cz * k + c1) * k + c2];
                        if m != 0 {
                            acc += &self.values[c1] * &other.values[c2] * m;
                        }
                    }
                }
                acc
            })
            .collect();
        ClassFunction { values }
    }

    /// `f^{*g}` for `g >= 1`.
    pub fn power(&self, g: u32, t: &GroupTable) -> Result<ClassFunction> {
        if g == 0 {
            return Err(Error::GenusOutOfRange { genus: 0, min: 1 });
        }
        let mut out = self.clone();
        for _ in 1..g {
            out = out.convolve(self, t);
        }
        Ok(out)
    }
}

/// Commutator distribution as a class function.
pub fn commutator_distribution(t: &GroupTable) -> ClassFunction {
    let counts = commutator_counts(t);
    let values = t.class_reps().map(|r| BigInt::from(counts[r])).collect();
    ClassFunction { values }
}

/// `#{(A1, B1, ..., Ag, Bg) : prod [Ai, Bi] = rep}`.
pub fn count_solutions(t: &GroupTable, g: u32, rep: usize) -> Result<BigInt> {
    let f = commutator_distribution(t).power(g, t)?;
    Ok(f.at(t, rep).clone())
}

mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

/// One count against its polynomial prediction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountComparison {
    pub holonomy: String,
    pub genus: u32,
    pub p: u64,
    #[serde(with = "decimal")]
    pub expected: BigInt,
    #[serde(with = "decimal")]
    pub actual: BigInt,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub p: u64,
    pub max_genus: u32,
    pub group_order: usize,
    pub class_count: usize,
    pub comparisons: Vec<CountComparison>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.comparisons.iter().all(|c| c.passed)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &CountComparison> {
        self.comparisons.iter().filter(|c| !c.passed)
    }
}

fn pow_mod(x: u64, e: u64, p: u64) -> u64 {
    (0..e).fold(1, |acc, _| acc * x % p)
}

/// Legendre symbol `(x | p)` as `±1`, for `x` prime to `p`.
pub fn legendre(x: u64, p: u64) -> i64 {
    if pow_mod(x, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// `ε P(ε p)`.
fn signed_eval(poly: &crate::poly::IntPoly, epsilon: i64, p: u64) -> BigInt {
    poly.eval_i64(epsilon * p as i64) * epsilon
}

/// Compares `F_p` counts with the sector polynomials at `q = p` for every
/// holonomy representative and genus up to `g_max`.
///
/// For `-Id` and `J-` the prediction is `ε e_i(ε p)` with `ε = (-1|p)`:
/// these sectors count like their polynomial only when `-1` is a square.
/// For `diag(λ, 1/λ)` the prediction is `T(p) + (λ|p) N(p)` where
/// `T = a + d` and `N = b + c`: the non-invariant part of the monodromy
/// picks up the quadratic character of `λ`, so only square `λ` count
/// `a + b + c + d` points.
pub fn verify_counts(p: u64, g_max: u32) -> Result<VerifyReport> {
    let t = GroupTable::build(p)?;
    if p < 5 {
        return Err(Error::PrimeTooSmall { p, min: 5 });
    }
    if g_max == 0 {
        return Err(Error::GenusOutOfRange { genus: 0, min: 1 });
    }
    let pi = p as i64;
    let mut reps = vec![
        ("id".to_owned(), t.identity(), 0usize),
        ("minus-id".to_owned(), t.index_of([-1, 0, 0, -1])?, 1),
        ("jplus".to_owned(), t.index_of([1, 1, 0, 1])?, 2),
        ("jminus".to_owned(), t.index_of([-1, 1, 0, -1])?, 3),
    ];
    for lambda in 2..p - 1 {
        let m = [lambda as i64, 0, 0, pow_mod(lambda, p - 2, p) as i64];
        let slot = if legendre(lambda, p) == 1 { 4 } else { 5 };
        reps.push((format!("xi(lambda={lambda})"), t.index_of(m)?, slot));
    }

    let epsilon = legendre(p - 1, p);
    let f = commutator_distribution(&t);
    let vectors = sector_vectors(g_max);
    let q = BigInt::from(p);
    let order = BigInt::from(t.order());
    let mut comparisons = Vec::new();
    let mut fg = f.clone();
    for g in 1..=g_max {
        if g > 1 {
            fg = fg.convolve(&f, &t);
        }
        let v = &vectors[g as usize];
        let pushed = v.rep.push_to_rep2();
        let (t_p, n_p) = (pushed.t.eval(&q), pushed.n.eval(&q));
        let predictions = [
            v.e[0].eval(&q),
            signed_eval(&v.e[1], epsilon, p),
            v.e[2].eval(&q),
            signed_eval(&v.e[3], epsilon, p),
            &t_p + &n_p,
            &t_p - &n_p,
        ];
        for (name, rep, slot) in &reps {
            let expected = predictions[*slot].clone();
            let actual = fg.at(&t, *rep).clone();
            comparisons.push(CountComparison {
                holonomy: name.clone(),
                genus: g,
                p,
                passed: expected == actual,
                expected,
                actual,
            });
        }
        let mass = fg.total_mass(&t);
        for (name, expected) in [
            ("mass/sectors", v.total_mass().eval_i64(pi)),
            ("mass/group", num_traits::pow(order.clone(), 2 * g as usize)),
        ] {
            comparisons.push(CountComparison {
                holonomy: name.to_owned(),
                genus: g,
                p,
                passed: expected == mass,
                expected,
                actual: mass.clone(),
            });
        }
    }
    Ok(VerifyReport {
        p,
        max_genus: g_max,
        group_order: t.order(),
        class_count: t.class_count(),
        comparisons,
    })
}
