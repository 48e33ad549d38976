//! Univariate polynomials in `q` with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A polynomial in `q` over `Z`.
///
/// Stored sparsely as exponent → coefficient. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: BTreeMap<usize, BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial<T: Into<BigInt>>(c: T, exp: usize) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` terms. Repeated
    /// exponents are summed.
    pub fn from_terms<I, T>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, T)>,
        T: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Builds a polynomial from ascending coefficients `c0 + c1 q + c2 q^2 + ...`.
    pub fn from_coeffs<T: Into<BigInt> + Clone>(ascending: &[T]) -> Self {
        Self::from_terms(ascending.iter().cloned().enumerate())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest exponent with a nonzero coefficient, or `None` for zero.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    pub fn trailing_term(&self) -> Option<(usize, &BigInt)> {
        self.coeffs.iter().next().map(|(e, c)| (*e, c))
    }

    pub fn leading_term(&self) -> Option<(usize, &BigInt)> {
        self.coeffs.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Coefficient of `q^exp` (zero if absent).
    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in descending order of degree.
    pub fn terms_desc(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().rev().map(|(e, c)| (*e, c))
    }

    /// Nonzero terms in ascending order of degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// Dense ascending coefficient list up to the degree (empty for zero).
    pub fn to_dense(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|e| self.coeff(e)).collect(),
        }
    }

    fn add_term(&mut self, exp: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Multiplies every coefficient by an integer.
    pub fn scale<T: Into<BigInt>>(&self, k: T) -> Self {
        let k = k.into();
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * &k)).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact value `p(x)` by Horner's rule.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let Some(deg) = self.degree() else {
            return BigInt::zero();
        };
        let mut acc = BigInt::zero();
        for e in (0..=deg).rev() {
            acc *= x;
            if let Some(c) = self.coeffs.get(&e) {
                acc += c;
            }
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Quotient and remainder of division by `den`, requiring every
    /// intermediate quotient coefficient to be an integer. Fails when the
    /// leading coefficient of `den` does not divide the running leading term.
    fn div_rem_integral(&self, den: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let (dd, lc) = den.leading_term().ok_or(Error::DivisionByZero)?;
        let lc = lc.clone();
        let mut rem = self.clone();
        let mut quo = IntPoly::zero();
        while let Some((rd, rc)) = rem.leading_term() {
            if rd < dd {
                break;
            }
            let (c, r) = rc.div_rem(&lc);
            if !r.is_zero() {
                return Err(Error::NonExactDivision {
                    numerator: self.to_string(),
                    denominator: den.to_string(),
                });
            }
            let t = IntPoly::monomial(c, rd - dd);
            rem -= &(&t * den);
            quo += &t;
        }
        Ok((quo, rem))
    }

    /// Exact quotient `self / den` in `Z[q]`.
    ///
    /// Errors with [`Error::NonExactDivision`] when the remainder is nonzero
    /// or a quotient coefficient would be fractional.
    pub fn div_exact(&self, den: &IntPoly) -> Result<IntPoly> {
        let (quo, rem) = self.div_rem_integral(den)?;
        if rem.is_zero() {
            Ok(quo)
        } else {
            Err(Error::NonExactDivision {
                numerator: self.to_string(),
                denominator: den.to_string(),
            })
        }
    }

    /// Divides every coefficient by an integer, failing unless all are divisible.
    pub fn div_exact_int<T: Into<BigInt>>(&self, k: T) -> Result<IntPoly> {
        self.div_exact(&IntPoly::constant(k))
    }

    /// True iff the coefficient of `q^i` equals that of `q^(d-i)` for all
    /// `0 <= i <= d`, i.e. `q^d p(1/q) = p`. Requires `d >= deg p`.
    pub fn is_palindromic(&self, d: usize) -> Result<bool> {
        if let Some(deg) = self.degree() {
            if d < deg {
                return Err(Error::PalindromeDegree { degree: deg, d });
            }
        }
        Ok(self
            .coeffs
            .iter()
            .all(|(e, c)| self.coeffs.get(&(d - e)) == Some(c)))
    }

    /// `q^d p(1/q)`; requires `d >= deg p`.
    pub fn reversed(&self, d: usize) -> Result<IntPoly> {
        if let Some(deg) = self.degree() {
            if d < deg {
                return Err(Error::PalindromeDegree { degree: deg, d });
            }
        }
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (d - e, c.clone()))
                .collect(),
        })
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    /// Renders like `q^6 - 2q^4 - 30q^3 - 2q^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag.is_one();
            if !unit || e == 0 {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

// JSON form: {"var":"q","coeffs":[[degree,"decimal"],...]} in descending degree.

#[derive(Serialize, Deserialize)]
struct PolyJson {
    var: String,
    coeffs: Vec<(usize, String)>,
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            var: "q".to_owned(),
            coeffs: self.terms_desc().map(|(e, c)| (e, c.to_string())).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        if raw.var != "q" {
            return Err(D::Error::custom(format!(
                "unsupported variable {:?}",
                raw.var
            )));
        }
        let mut p = IntPoly::zero();
        for (e, s) in raw.coeffs {
            let c: BigInt = s
                .parse()
                .map_err(|_| D::Error::custom(format!("invalid coefficient {s:?}")))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> Self {
        IntPoly::constant(c)
    }
}

impl From<BigInt> for IntPoly {
    fn from(c: BigInt) -> Self {
        IntPoly::constant(c)
    }
}

impl<'a> AddAssign<&'a IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &'a IntPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &'a IntPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, -c);
        }
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &'a IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &'a IntPoly) -> IntPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &'a IntPoly) -> IntPoly {
        let (Some(da), Some(db)) = (self.degree(), rhs.degree()) else {
            return IntPoly::zero();
        };
        // dense accumulation, canonicalized on the way out
        let mut acc = vec![BigInt::zero(); da + db + 1];
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                acc[ea + eb] += ca * cb;
            }
        }
        IntPoly {
            coeffs: acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &'a IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<IntPoly> for &'a IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl AddAssign<IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: IntPoly) {
        *self += &rhs;
    }
}

impl SubAssign<IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: IntPoly) {
        *self -= &rhs;
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> Self {
        iter.fold(IntPoly::zero(), |acc, p| acc + p)
    }
}

impl<'a> std::iter::Sum<&'a IntPoly> for IntPoly {
    fn sum<I: Iterator<Item = &'a IntPoly>>(iter: I) -> Self {
        let mut acc = IntPoly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

/// `2^n` as a big integer.
pub(crate) fn two_pow(n: u32) -> BigInt {
    BigInt::from(2u8).pow(n)
}

/// Shorthand `c * q^e` for `i64` coefficients, used by the literal tables.
pub(crate) fn poly(terms: &[(usize, i64)]) -> IntPoly {
    IntPoly::from_terms(terms.iter().copied())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> IntPoly {
        IntPoly::q()
    }

    fn c(k: i64) -> IntPoly {
        IntPoly::constant(k)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!((q() - c(1)) * (q() + c(1)), poly(&[(2, 1), (0, -1)]));
    }

    #[test]
    fn additive_identity() {
        let p = poly(&[(3, 1), (1, -1)]);
        assert_eq!(&p + &IntPoly::zero(), p);
    }

    #[test]
    fn square_expansion() {
        let p = poly(&[(2, 1), (1, -1)]);
        assert_eq!(&p * &p, poly(&[(4, 1), (3, -2), (2, 1)]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(poly(&[(3, 1), (1, -1)]).eval_i64(5), BigInt::from(120));
        assert_eq!(poly(&[(2, 1), (1, 4), (0, 1)]).eval_i64(1), BigInt::from(6));
        assert_eq!(IntPoly::zero().eval_i64(7), BigInt::zero());
    }

    #[test]
    fn exact_division_examples() {
        let num = poly(&[(9, 1), (7, -3), (6, -30), (4, 30), (3, 3), (1, -1)]);
        let den = poly(&[(3, 1), (1, -1)]);
        assert_eq!(
            num.div_exact(&den).unwrap(),
            poly(&[(6, 1), (4, -2), (3, -30), (2, -2), (0, 1)])
        );
        assert_eq!(
            den.div_exact(&(q() - c(1))).unwrap(),
            poly(&[(2, 1), (1, 1)])
        );
        let y2 = poly(&[(9, 1), (7, -3), (6, -4), (5, -39), (4, -4), (3, -15)]);
        assert_eq!(
            y2.div_exact(&q()).unwrap(),
            poly(&[(8, 1), (6, -3), (5, -4), (4, -39), (3, -4), (2, -15)])
        );
    }

    #[test]
    fn inexact_division_is_an_error() {
        let err = poly(&[(2, 1), (0, 1)])
            .div_exact(&(q() - c(1)))
            .unwrap_err();
        assert!(matches!(err, Error::NonExactDivision { .. }));
        let err = poly(&[(1, 1)]).div_exact_int(2).unwrap_err();
        assert!(matches!(err, Error::NonExactDivision { .. }));
        assert!(matches!(
            q().div_exact(&IntPoly::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn palindromes() {
        let m = poly(&[(6, 1), (4, -2), (3, -30), (2, -2), (0, 1)]);
        assert!(m.is_palindromic(6).unwrap());
        assert!(poly(&[(2, 1), (1, 4), (0, 1)]).is_palindromic(2).unwrap());
        assert!(!poly(&[(2, 1), (1, -2), (0, -3)]).is_palindromic(2).unwrap());
        // a padded degree shifts the centre
        assert!(!m.is_palindromic(7).unwrap());
        assert!(poly(&[(3, 1), (1, 1)]).is_palindromic(4).unwrap());
        assert!(IntPoly::zero().is_palindromic(0).unwrap());
        assert!(matches!(
            m.is_palindromic(5),
            Err(Error::PalindromeDegree { degree: 6, d: 5 })
        ));
    }

    #[test]
    fn zero_degree_is_sentinel() {
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(c(5).degree(), Some(0));
        assert_eq!((q() - q()).degree(), None);
        assert!((q() - q()).is_zero());
    }

    #[test]
    fn display() {
        let m = poly(&[(6, 1), (4, -2), (3, -30), (2, -2), (0, 1)]);
        assert_eq!(m.to_string(), "q^6 - 2q^4 - 30q^3 - 2q^2 + 1");
        assert_eq!(poly(&[(3, -1), (1, 1)]).to_string(), "-q^3 + q");
        assert_eq!(c(-1).to_string(), "-1");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_schema() {
        let p = poly(&[(3, 1), (1, -1)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"var":"q","coeffs":[[3,"1"],[1,"-1"]]}"#);
        let back: IntPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<IntPoly>(r#"{"var":"t","coeffs":[]}"#).is_err());
        assert!(serde_json::from_str::<IntPoly>(r#"{"var":"q","coeffs":[[1,"x"]]}"#).is_err());
        let z: IntPoly = serde_json::from_str(r#"{"var":"q","coeffs":[[2,"0"]]}"#).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn big_coefficients_stay_exact() {
        // (q+1)^200 has central coefficient C(200,100) ~ 9e58
        let p = (q() + c(1)).pow(200);
        let central = p.coeff(100);
        let expected: BigInt = "90548514656103281165404177077484163874504589675413336841320"
            .parse()
            .unwrap();
        assert_eq!(central, expected);
        assert_eq!(p.eval_i64(1), two_pow(200));
    }
}
