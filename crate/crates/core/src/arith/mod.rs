//! Exact scalar arithmetic over ℚ and the cyclotomic fields ℚ(ζₙ), n ∈ {3, 4, 5}.
//!
//! Every algorithm in this crate is generic over [`Field`]. The two concrete
//! families are [`Rational`] (arbitrary precision fractions) and
//! [`Cyclotomic<N>`], elements of ℚ[t]/Φₙ(t) stored in reduced form.
//! [`Scalar`] is the dynamically typed variant used at text boundaries, where
//! the field is only known after parsing.

mod cyclotomic;
pub(crate) mod lex;
mod rational;
mod scalar;

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

pub use cyclotomic::{Cyc3, Cyc4, Cyc5, Cyclotomic};
pub use rational::{rat, Rational};
pub use lex::ParseError;
pub use scalar::Scalar;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("incompatible fields: Q(z{left}) and Q(z{right})")]
    IncompatibleFields { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported cyclotomic order {0}; expected one of 1, 3, 4, 5")]
    UnsupportedOrder(u32),
}

/// An exact field of characteristic zero.
///
/// Arithmetic goes through the std operator traits, with by-reference right
/// operands so that inner loops clone at most once.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    /// Cyclotomic order of the field; 1 for ℚ.
    const ORDER: u32;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn inv(&self) -> Result<Self, ArithError>;

    fn from_rational(q: Rational) -> Self;

    /// `Some(q)` when the element lies in the prime field.
    fn to_rational(&self) -> Option<Rational>;

    /// Embeds a dynamically typed scalar. Rationals embed everywhere;
    /// cyclotomic scalars only into a field of the same order.
    fn from_scalar(s: &Scalar) -> Result<Self, ArithError>;

    fn to_scalar(&self) -> Scalar;

    /// A primitive `d`-th root of unity, if the field contains one.
    fn primitive_root(d: u32) -> Option<Self>;

    /// Factor `c` such that `c * coeffs` is the canonical representative of the
    /// line spanned by `coeffs` (first entry is the leading coefficient).
    fn normalizing_factor(coeffs: &[Self]) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    fn pow(&self, k: i64) -> Result<Self, ArithError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc *= &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.clone() * &sq;
            }
        }
        Ok(acc)
    }

    /// True when the rendered form needs parentheses as a product factor.
    fn is_compound(&self) -> bool {
        false
    }

    /// True when the element renders with a leading minus sign.
    fn renders_negative(&self) -> bool;
}

/// Field name in the ring-descriptor grammar (`Q`, `Q(z5)`, ...).
pub fn field_name(order: u32) -> String {
    if order == 1 {
        "Q".to_string()
    } else {
        format!("Q(z{order})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_pow_matches_repeated_multiplication() {
        let z = Cyc5::zeta();
        let mut acc = Cyc5::one();
        for k in 0..12 {
            assert_eq!(z.pow(k).unwrap(), acc);
            acc *= &z;
        }
        assert_eq!(Field::pow(&rat(2, 1), -2).unwrap(), rat(1, 4));
        assert_eq!(Field::pow(&<Rational as Field>::zero(), -1), Err(ArithError::DivisionByZero));
    }
}
