use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::LaurentPoly;

/// Laurent polynomial in two variables `q` and `z`, keyed by `(q exponent, z exponent)`.
///
/// `z` is used either as the formal symbol `q^x` or as an ordinary second
/// variable, depending on the caller.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct BivariatePoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `c * q^a * z^b`.
    pub fn monomial(c: impl Into<BigInt>, a: i64, b: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(a, b, c.into());
        p
    }

    /// Embeds `f(q) * z^b`.
    pub fn from_laurent(f: &LaurentPoly, b: i64) -> Self {
        let mut p = Self::zero();
        for (a, c) in f.terms() {
            p.add_term(a, b, c.clone());
        }
        p
    }

    /// `Σ_b coeffs[b] z^b` with Laurent coefficients in `q`.
    pub fn from_z_coeffs(coeffs: &[LaurentPoly]) -> Self {
        let mut p = Self::zero();
        for (b, f) in coeffs.iter().enumerate() {
            p += &Self::from_laurent(f, b as i64);
        }
        p
    }

    pub fn add_term(&mut self, a: i64, b: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The `q`-polynomial multiplying `z^b`.
    pub fn z_coeff(&self, b: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for ((a, bb), c) in &self.terms {
            if *bb == b {
                out.add_term(*a, c.clone());
            }
        }
        out
    }

    pub fn max_z_degree(&self) -> Option<i64> {
        self.terms.keys().map(|(_, b)| *b).max()
    }

    /// Substitutes `z -> q^m`.
    pub fn substitute_z(&self, m: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(a + b * m, c.clone());
        }
        out
    }
}

impl AddAssign<&BivariatePoly> for BivariatePoly {
    fn add_assign(&mut self, rhs: &BivariatePoly) {
        for ((a, b), c) in &rhs.terms {
            self.add_term(*a, *b, c.clone());
        }
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for ((a, b), c) in &rhs.terms {
            out.add_term(*a, *b, -c.clone());
        }
        out
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for ((a1, b1), x) in &self.terms {
            for ((a2, b2), y) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, x * y);
            }
        }
        out
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("BivariatePoly(")?;
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*q^{a}*z^{b}")?;
        }
        f.write_str(")")
    }
}
