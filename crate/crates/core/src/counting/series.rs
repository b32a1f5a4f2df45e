use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Polynomial;
use crate::error::{Error, Result};

/// A rational function `numerator / denominator` read as a formal power
/// series. The denominator's constant term is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalSeries {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if !denominator.coeff(0).is_one() {
            return Err(Error::SeriesDenominator);
        }
        Ok(Self {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    /// Coefficients `a_0..=a_order` via
    /// `a_n = num_n - Σ_{j=1}^{deg den} den_j · a_{n-j}`.
    pub fn expand(&self, order: usize) -> Vec<BigInt> {
        let den = self.denominator.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut a = self.numerator.coeff(n);
            for (j, d) in den.iter().enumerate().skip(1).take(n) {
                if !d.is_zero() {
                    a -= d * &out[n - j];
                }
            }
            out.push(a);
        }
        out
    }

    /// Same rational function, checked by cross-multiplication.
    pub fn same_function(&self, other: &RationalSeries) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator, self.denominator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn geometric() {
        let s = RationalSeries::new(Polynomial::one(), Polynomial::from_i64(&[1, -1])).unwrap();
        assert_eq!(s.expand(4), ints(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn fibonacci() {
        let s = RationalSeries::new(Polynomial::one(), Polynomial::from_i64(&[1, -1, -1])).unwrap();
        assert_eq!(s.expand(7), ints(&[1, 1, 2, 3, 5, 8, 13, 21]));
    }

    #[test]
    fn rejects_bad_denominator() {
        assert_eq!(
            RationalSeries::new(Polynomial::one(), Polynomial::from_i64(&[2, 1])),
            Err(Error::SeriesDenominator)
        );
        assert!(RationalSeries::new(Polynomial::one(), Polynomial::from_i64(&[0, 1])).is_err());
    }

    #[test]
    fn same_function_cross_multiplies() {
        let a = RationalSeries::new(Polynomial::one(), Polynomial::from_i64(&[1, -1])).unwrap();
        let b = RationalSeries::new(
            Polynomial::from_i64(&[1, 1]),
            Polynomial::from_i64(&[1, 0, -1]),
        )
        .unwrap();
        assert!(a.same_function(&b));
    }
}
