//! Exact Laurent polynomials in `q` and the q-combinatorial primitives built on them.
//!
//! Everything here is integer-exact; there is no floating point anywhere in
//! the crate's polynomial paths.

mod bivariate;
mod laurent;

pub use bivariate::BivariatePoly;
pub use laurent::LaurentPoly;

use crate::error::{Error, Result};

/// `[k] = (1 - q^k) / (1 - q)`, expanded. Negative `k` gives `-(q^-1 + ... + q^k)`.
pub fn q_bracket(k: i64) -> LaurentPoly {
    if k >= 0 {
        LaurentPoly::from_dense(0, std::iter::repeat_n(1, k as usize))
    } else {
        LaurentPoly::from_dense(k, std::iter::repeat_n(-1, k.unsigned_abs() as usize))
    }
}

/// `[k]! = [1][2]...[k]`.
pub fn q_factorial(k: u32) -> LaurentPoly {
    (1..=k as i64).map(q_bracket).product()
}

/// `(1 - q^e)`
fn one_minus_q_pow(e: i64) -> LaurentPoly {
    &LaurentPoly::one() - &LaurentPoly::q_pow(e)
}

/// Gaussian binomial `[m choose k]` for any integer numerator `m`:
/// `Π_{i<k} (1 - q^{m-i}) / Π_{i=1..k} (1 - q^i)`.
///
/// Zero when `0 <= m < k`. Negative numerators give genuine Laurent polynomials.
pub fn q_binomial(m: i64, k: u32) -> LaurentPoly {
    if k == 0 {
        return LaurentPoly::one();
    }
    let k = k as i64;
    if (0..k).contains(&m) {
        return LaurentPoly::zero();
    }
    let num: LaurentPoly = (0..k).map(|i| one_minus_q_pow(m - i)).product();
    let den: LaurentPoly = (1..=k).map(one_minus_q_pow).product();
    num.div_exact(&den)
        .expect("q-binomial quotient is always a Laurent polynomial")
}

/// `[Σv]! / Π [v_i]!`.
pub fn q_multinomial(v: &[u32]) -> LaurentPoly {
    let n: u32 = v.iter().sum();
    let den: LaurentPoly = v.iter().map(|&vi| q_factorial(vi)).product();
    q_factorial(n)
        .div_exact(&den)
        .expect("q-multinomial quotient is a polynomial")
}

/// q-Stirling number of the second kind via
/// `S_{n+1,k} = q^{k-1} S_{n,k-1} + [k] S_{n,k}`, `S_{0,0} = 1`.
pub fn q_stirling(n: u32, k: i64) -> LaurentPoly {
    if k < 0 || k > n as i64 {
        return LaurentPoly::zero();
    }
    let k = k as usize;
    // row[j] = S_{m, j}
    let mut row = vec![LaurentPoly::one()];
    for m in 0..n as usize {
        let mut next = vec![LaurentPoly::zero(); m + 2];
        for (j, slot) in next.iter_mut().enumerate() {
            if j >= 1 && j - 1 <= m {
                *slot += &row[j - 1].shift(j as i64 - 1);
            }
            if j <= m {
                *slot += &(&q_bracket(j as i64) * &row[j]);
            }
        }
        row = next;
    }
    row.swap_remove(k)
}

/// Minimum plus maximum exponent.
pub fn darga(f: &LaurentPoly) -> Result<i64> {
    match (f.min_exp(), f.max_exp()) {
        (Some(lo), Some(hi)) => Ok(lo + hi),
        _ => Err(Error::DargaOfZero),
    }
}

/// `zsu(d)`: identically zero, or nonnegative, symmetric, unimodal with darga `d`.
pub fn zsu_check(f: &LaurentPoly, d: i64) -> bool {
    if f.is_zero() {
        return true;
    }
    f.has_nonnegative_coeffs()
        && f.is_symmetric()
        && f.is_unimodal()
        && darga(f).is_ok_and(|x| x == d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(min: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_dense(min, c.iter().copied())
    }

    #[test]
    fn brackets() {
        assert!(q_bracket(0).is_zero());
        assert_eq!(q_bracket(3), p(0, &[1, 1, 1]));
        assert_eq!(q_bracket(-1), p(-1, &[-1]));
        // (1 - q^-3)/(1 - q) by exact division
        for k in -5..6 {
            let direct = one_minus_q_pow(k).div_exact(&one_minus_q_pow(1)).unwrap();
            assert_eq!(q_bracket(k), direct, "k = {k}");
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(q_factorial(0), LaurentPoly::one());
        assert_eq!(q_factorial(2), p(0, &[1, 1]));
        assert_eq!(q_factorial(3), p(0, &[1, 2, 2, 1]));
        assert_eq!(q_factorial(6).eval_at_one(), BigInt::from(720));
    }

    #[test]
    fn binomials() {
        assert_eq!(q_binomial(2, 1), p(0, &[1, 1]));
        assert!(q_binomial(3, 5).is_zero());
        assert_eq!(q_binomial(-1, 1), p(-1, &[-1]));
        assert_eq!(q_binomial(-4, 0), LaurentPoly::one());
        // [-1 choose 2] = (1-q^-1)(1-q^-2)/((1-q)(1-q^2)) = q^-3
        assert_eq!(q_binomial(-1, 2), p(-3, &[1]));
    }

    #[test]
    fn multinomials() {
        assert_eq!(q_multinomial(&[1, 1]), p(0, &[1, 1]));
        assert_eq!(q_multinomial(&[5]), LaurentPoly::one());
        assert_eq!(q_multinomial(&[2, 1]), p(0, &[1, 1, 1]));
        assert_eq!(q_multinomial(&[]), LaurentPoly::one());
        // product of binomials as a second route
        let chained = &q_binomial(6, 2) * &q_binomial(4, 3);
        assert_eq!(q_multinomial(&[2, 3, 1]), chained);
    }

    #[test]
    fn stirling() {
        assert_eq!(q_stirling(0, 0), LaurentPoly::one());
        assert!(q_stirling(2, 3).is_zero());
        assert!(q_stirling(3, -1).is_zero());
        assert_eq!(q_stirling(3, 2), p(1, &[2, 1]));
        assert!(q_stirling(3, 0).is_zero());
    }

    #[test]
    fn darga_and_zsu() {
        assert_eq!(darga(&LaurentPoly::q_pow(4)), Ok(8));
        assert_eq!(darga(&p(0, &[1, 1])), Ok(1));
        assert_eq!(darga(&p(1, &[2, 1])), Ok(3));
        assert_eq!(darga(&LaurentPoly::zero()), Err(Error::DargaOfZero));
        assert!(zsu_check(&LaurentPoly::zero(), 17));
        assert!(zsu_check(&p(0, &[1, 3, 1]), 2));
        assert!(!zsu_check(&p(0, &[1, 0, 1]), 1));
        assert!(!zsu_check(&p(0, &[1, 0, 1]), 2));
        assert!(!zsu_check(&p(0, &[-1, -1]), 1));
        assert!(zsu_check(&LaurentPoly::q_pow(3), 6));
    }
}
