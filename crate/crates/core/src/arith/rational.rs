use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ArithError, Field, Scalar};

/// Arbitrary precision fraction, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `numer / denom`.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

impl Field for Rational {
    const ORDER: u32 = 1;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn inv(&self) -> Result<Self, ArithError> {
        if Zero::is_zero(self) {
            Err(ArithError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn from_rational(q: Rational) -> Self {
        q
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn from_scalar(s: &Scalar) -> Result<Self, ArithError> {
        match s {
            Scalar::Rational(q) => Ok(q.clone()),
            other => other
                .to_rational()
                .ok_or(ArithError::IncompatibleFields { left: 1, right: other.order() }),
        }
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Rational(self.clone())
    }

    fn primitive_root(d: u32) -> Option<Self> {
        match d {
            1 => Some(One::one()),
            2 => Some(-<Rational as One>::one()),
            _ => None,
        }
    }

    fn renders_negative(&self) -> bool {
        self.is_negative()
    }

    fn normalizing_factor(coeffs: &[Self]) -> Self {
        let Some(lead) = coeffs.iter().find(|c| !Zero::is_zero(*c)) else {
            return One::one();
        };
        let denom_lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numer_gcd = coeffs.iter().fold(BigInt::zero(), |acc, c| {
            let scaled = c.numer() * (&denom_lcm / c.denom());
            acc.gcd(&scaled)
        });
        let factor = Rational::new(denom_lcm, numer_gcd);
        if lead.is_negative() {
            -factor
        } else {
            factor
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_arithmetic() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
        assert_eq!(rat(-2, 3).inv().unwrap(), rat(-3, 2));
        assert_eq!(<Rational as Field>::zero().inv(), Err(ArithError::DivisionByZero));
        assert_eq!(rat(4, -6), rat(-2, 3));
    }

    #[test]
    fn normalizing_factor_gives_primitive_integers() {
        let coeffs = [rat(-1, 2), rat(3, 4), rat(0, 1), rat(5, 6)];
        let c = Rational::normalizing_factor(&coeffs);
        let scaled: Vec<Rational> = coeffs.iter().map(|x| x * &c).collect();
        assert_eq!(scaled, vec![rat(6, 1), rat(-9, 1), rat(0, 1), rat(-10, 1)]);
    }
}
