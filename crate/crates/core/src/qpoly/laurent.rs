use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Laurent polynomial in `q` with arbitrary-precision integer coefficients.
///
/// Only nonzero coefficients are stored, so the zero polynomial is the empty
/// map and structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// Builds `Σ c_i q^(min_exp + i)` from a dense coefficient list.
    pub fn from_dense<C: Into<BigInt>>(min_exp: i64, coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            p.add_term(min_exp + i as i64, c.into());
        }
        p
    }

    /// Generating function `Σ q^e` of a multiset of exponents.
    pub fn from_exponents(exponents: impl IntoIterator<Item = i64>) -> Self {
        let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
        for e in exponents {
            *counts.entry(e).or_default() += 1;
        }
        Self {
            terms: counts
                .into_iter()
                .map(|(e, c)| (e, BigInt::from(c)))
                .collect(),
        }
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Dense coefficients from the minimum exponent to the maximum, zeros included.
    /// Returns `(0, [])` for the zero polynomial.
    pub fn dense(&self) -> (i64, Vec<BigInt>) {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo, (lo..=hi).map(|e| self.coeff(e)).collect()),
            _ => (0, Vec::new()),
        }
    }

    /// Multiplies by `q^s`.
    pub fn shift(&self, s: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + s, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Substitutes `q -> q^-1`.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitutes `q -> q^m` for a positive integer `m`.
    pub fn dilate(&self, m: i64) -> Self {
        assert!(m > 0, "dilation factor must be positive");
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * m, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Value at an integer `q`. Fails with `None` when a negative exponent
    /// would require division by something other than a unit.
    pub fn eval(&self, q: &BigInt) -> Option<BigInt> {
        let unit = q.abs().is_one();
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let term = if *e >= 0 {
                c * num_traits::pow(q.clone(), *e as usize)
            } else if unit {
                c * num_traits::pow(q.clone(), e.unsigned_abs() as usize)
            } else {
                return None;
            };
            acc += term;
        }
        Some(acc)
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact division in the Laurent ring. Errors when the quotient is not a
    /// Laurent polynomial with integer coefficients.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let inexact = || Error::InexactDivision {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        let (Some(d_lo), Some(d_hi)) = (divisor.min_exp(), divisor.max_exp()) else {
            return Err(inexact());
        };
        let lead = divisor.coeff(d_hi);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // long division from the top; the loop ends once the remainder is
        // narrower than the divisor
        while let (Some(r_lo), Some(r_hi)) = (rem.min_exp(), rem.max_exp()) {
            if r_hi - r_lo < d_hi - d_lo {
                return Err(inexact());
            }
            let top = rem.coeff(r_hi);
            if !(&top % &lead).is_zero() {
                return Err(inexact());
            }
            let t = Self::monomial(&top / &lead, r_hi - d_hi);
            rem -= &(&t * divisor);
            quot += &t;
        }
        Ok(quot)
    }

    /// Symmetric: `a_{M+k} = a_{N-k}` for every `k`. Zero counts as symmetric.
    pub fn is_symmetric(&self) -> bool {
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return true;
        };
        self.terms
            .iter()
            .all(|(e, c)| self.coeff(lo + hi - e) == *c)
    }

    /// Unimodal on the dense coefficient sequence, interior zeros included.
    pub fn is_unimodal(&self) -> bool {
        let (_, dense) = self.dense();
        let mut descending = false;
        for w in dense.windows(2) {
            if w[1] > w[0] {
                if descending {
                    return false;
                }
            } else if w[1] < w[0] {
                descending = true;
            }
        }
        true
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

/// Human-readable form with ascending exponents, e.g. `2*q + q^2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let var = match *e {
                0 => String::new(),
                1 => "q".to_string(),
                e => format!("q^{e}"),
            };
            match (mag.is_one(), var.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => f.write_str(&var)?,
                (false, true) => write!(f, "{mag}")?,
                (false, false) => write!(f, "{mag}*{var}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct DenseRepr {
    min_exp: i64,
    coeffs: Vec<i128>,
}

/// Serialized as `{"min_exp": m, "coeffs": [..]}` with dense coefficients from
/// `min_exp` upward. The zero polynomial is `{"min_exp": 0, "coeffs": []}`.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (min_exp, dense) = self.dense();
        let coeffs = dense
            .iter()
            .map(|c| {
                c.to_i128()
                    .ok_or_else(|| S::Error::custom(format!("coefficient {c} exceeds 128 bits")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        DenseRepr { min_exp, coeffs }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = DenseRepr::deserialize(deserializer)?;
        if repr.coeffs.first().is_some_and(|c| *c == 0)
            || repr.coeffs.last().is_some_and(|c| *c == 0)
            || (repr.coeffs.is_empty() && repr.min_exp != 0)
        {
            return Err(D::Error::custom("non-canonical polynomial encoding"));
        }
        Ok(Self::from_dense(repr.min_exp, repr.coeffs))
    }
}
