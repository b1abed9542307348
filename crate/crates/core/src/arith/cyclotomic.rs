use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::Signed;

use super::{ArithError, Field, Rational, Scalar};

/// An element of ℚ(ζₙ) = ℚ[t]/Φₙ(t), stored as its reduced coefficient vector
/// `c₀ + c₁t + … + c_{φ(n)-1} t^{φ(n)-1}` with `t ↦ ζₙ`.
///
/// Only n ∈ {3, 4, 5} are instantiable; other orders fail at compile time.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic<const N: u32> {
    coeffs: Vec<Rational>,
}

pub type Cyc3 = Cyclotomic<3>;
pub type Cyc4 = Cyclotomic<4>;
pub type Cyc5 = Cyclotomic<5>;

/// Coefficients of Φₙ, low degree first, monic.
const fn phi_coeffs(n: u32) -> &'static [i64] {
    match n {
        3 => &[1, 1, 1],
        4 => &[1, 0, 1],
        5 => &[1, 1, 1, 1, 1],
        _ => panic!("unsupported cyclotomic order"),
    }
}

impl<const N: u32> Cyclotomic<N> {
    /// φ(N), the degree of the field over ℚ.
    pub const DEGREE: usize = phi_coeffs(N).len() - 1;

    /// Reduces an arbitrary coefficient vector (low degree first) modulo Φₙ.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        let phi = phi_coeffs(N);
        let deg = Self::DEGREE;
        for k in (deg..coeffs.len()).rev() {
            if coeffs[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut coeffs[k], <Rational as Field>::zero());
            for (j, &p) in phi[..deg].iter().enumerate() {
                if p != 0 {
                    coeffs[k - deg + j] -= &c * Rational::from_integer(p.into());
                }
            }
        }
        coeffs.resize(deg, <Rational as Field>::zero());
        Cyclotomic { coeffs }
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut coeffs = vec![<Rational as Field>::zero(); Self::DEGREE];
        coeffs[0] = q;
        Cyclotomic { coeffs }
    }

    /// The generator ζₙ.
    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    /// ζₙ^k for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        let e = k.rem_euclid(N as i64) as usize;
        let mut coeffs = vec![<Rational as Field>::zero(); e + 1];
        coeffs[e] = <Rational as Field>::one();
        Self::from_coeffs(coeffs)
    }

    /// Reduced coefficients, low degree first; length φ(N).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        let deg = Self::DEGREE;
        let mut prod = vec![<Rational as Field>::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(prod)
    }

    /// Solves `self · x = 1` as a φ(N)×φ(N) rational linear system.
    fn inv_impl(&self) -> Result<Self, ArithError> {
        if self.coeffs.iter().all(Field::is_zero) {
            return Err(ArithError::DivisionByZero);
        }
        let deg = Self::DEGREE;
        // Column j holds self · t^j; augmented with e₀.
        let mut columns = Vec::with_capacity(deg);
        let mut basis = Self::from_rational(<Rational as Field>::one());
        for _ in 0..deg {
            columns.push(self.mul_impl(&basis).coeffs);
            basis = basis.mul_impl(&Self::zeta());
        }
        let mut rows: Vec<Vec<Rational>> = (0..deg)
            .map(|i| {
                let mut row: Vec<Rational> = columns.iter().map(|c| c[i].clone()).collect();
                row.push(if i == 0 { <Rational as Field>::one() } else { <Rational as Field>::zero() });
                row
            })
            .collect();
        for col in 0..deg {
            let pivot = (col..deg)
                .find(|&r| !rows[r][col].is_zero())
                .ok_or(ArithError::DivisionByZero)?;
            rows.swap(col, pivot);
            let p = rows[col][col].recip();
            for x in rows[col].iter_mut() {
                *x *= &p;
            }
            let pivot_row = rows[col].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        Ok(Cyclotomic {
            coeffs: rows.into_iter().map(|mut r| r.pop().unwrap()).collect(),
        })
    }
}

impl<const N: u32> Field for Cyclotomic<N> {
    const ORDER: u32 = N;

    fn zero() -> Self {
        Cyclotomic { coeffs: vec![<Rational as Field>::zero(); Self::DEGREE] }
    }

    fn one() -> Self {
        Self::from_rational(<Rational as Field>::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Field::is_zero)
    }

    fn inv(&self) -> Result<Self, ArithError> {
        self.inv_impl()
    }

    fn from_rational(q: Rational) -> Self {
        Cyclotomic::from_rational(q)
    }

    fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Field::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn from_scalar(s: &Scalar) -> Result<Self, ArithError> {
        match s.promote(N)? {
            Scalar::Rational(q) => Ok(Self::from_rational(q)),
            Scalar::Z3(c) => Ok(Self::from_coeffs(c.coeffs)),
            Scalar::Z4(c) => Ok(Self::from_coeffs(c.coeffs)),
            Scalar::Z5(c) => Ok(Self::from_coeffs(c.coeffs)),
        }
    }

    fn to_scalar(&self) -> Scalar {
        let coeffs = self.coeffs.clone();
        match N {
            3 => Scalar::Z3(Cyclotomic { coeffs }),
            4 => Scalar::Z4(Cyclotomic { coeffs }),
            5 => Scalar::Z5(Cyclotomic { coeffs }),
            _ => unreachable!(),
        }
    }

    fn primitive_root(d: u32) -> Option<Self> {
        match d {
            1 => Some(Self::one()),
            2 => Some(-Self::one()),
            d if d == N => Some(Self::zeta()),
            _ => None,
        }
    }

    fn normalizing_factor(coeffs: &[Self]) -> Self {
        let Some(lead) = coeffs.iter().find(|c| !c.is_zero()) else {
            return Self::one();
        };
        let monic_factor = lead.inv().expect("nonzero leading coefficient");
        let flat: Vec<Rational> = coeffs
            .iter()
            .flat_map(|c| (c.clone() * &monic_factor).coeffs)
            .filter(|q| !q.is_zero())
            .collect();
        let mut rational = Rational::normalizing_factor(&flat);
        if rational.is_negative() {
            rational = -rational;
        }
        monic_factor * &Self::from_rational(rational)
    }

    fn is_compound(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() > 1
    }

    fn renders_negative(&self) -> bool {
        let mut nonzero = self.coeffs.iter().filter(|c| !c.is_zero());
        match (nonzero.next(), nonzero.next()) {
            (Some(c), None) => c.is_negative(),
            _ => false,
        }
    }
}

impl<const N: u32> fmt::Display for Cyclotomic<N> {
    /// Renders in the scalar literal grammar, highest power first: `z5^2 - 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let atom = match k {
                0 => String::new(),
                1 => format!("z{N}"),
                _ => format!("z{N}^{k}"),
            };
            if atom.is_empty() {
                write!(f, "{mag}")?;
            } else if Field::is_one(&mag) {
                write!(f, "{atom}")?;
            } else {
                write!(f, "{mag}*{atom}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<const N: u32> fmt::Debug for Cyclotomic<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic<{N}>({self})")
    }
}

impl<const N: u32> Add<&Cyclotomic<N>> for Cyclotomic<N> {
    type Output = Self;
    fn add(mut self, rhs: &Self) -> Self {
        self += rhs;
        self
    }
}

impl<const N: u32> Add for Cyclotomic<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self + &rhs
    }
}

impl<const N: u32> Sub<&Cyclotomic<N>> for Cyclotomic<N> {
    type Output = Self;
    fn sub(mut self, rhs: &Self) -> Self {
        self -= rhs;
        self
    }
}

impl<const N: u32> Sub for Cyclotomic<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self - &rhs
    }
}

impl<const N: u32> Mul<&Cyclotomic<N>> for Cyclotomic<N> {
    type Output = Self;
    fn mul(self, rhs: &Self) -> Self {
        self.mul_impl(rhs)
    }
}

impl<const N: u32> Mul for Cyclotomic<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_impl(&rhs)
    }
}

impl<const N: u32> Neg for Cyclotomic<N> {
    type Output = Self;
    fn neg(self) -> Self {
        Cyclotomic { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<const N: u32> AddAssign<&Cyclotomic<N>> for Cyclotomic<N> {
    fn add_assign(&mut self, rhs: &Self) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl<const N: u32> SubAssign<&Cyclotomic<N>> for Cyclotomic<N> {
    fn sub_assign(&mut self, rhs: &Self) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl<const N: u32> MulAssign<&Cyclotomic<N>> for Cyclotomic<N> {
    fn mul_assign(&mut self, rhs: &Self) {
        *self = self.mul_impl(rhs);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn powers_of_zeta_sum_to_minus_one() {
        let z = Cyc5::zeta();
        let sum = z.clone() + &z.pow(2).unwrap() + &z.pow(3).unwrap() + &z.pow(4).unwrap();
        assert_eq!(sum, -Cyc5::one());
        assert_eq!(z.pow(5).unwrap(), Cyc5::one());
    }

    #[test]
    fn gaussian_units() {
        let i = Cyc4::zeta();
        assert_eq!(i.clone() * &i, -Cyc4::one());
        assert_eq!(i.pow(3).unwrap(), -i.clone());
        let w = Cyc3::zeta();
        assert_eq!(w.clone() * &w + &w + &Cyc3::one(), Cyc3::zero());
    }

    #[test]
    fn inverses() {
        assert_eq!(Cyc5::zeta().inv().unwrap(), Cyc5::zeta_pow(4));
        // (1 + i)^{-1} = (1 - i)/2, solved independently by hand:
        // (1+i)(x + yi) = 1 gives x - y = 1, x + y = 0.
        let one_plus_i = Cyc4::one() + &Cyc4::zeta();
        let expected = Cyc4::from_coeffs(vec![rat(1, 2), rat(-1, 2)]);
        assert_eq!(one_plus_i.inv().unwrap(), expected);
        assert_eq!(Cyc3::zero().inv(), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn reduction_is_idempotent() {
        let raw: Vec<Rational> = (0..9).map(|k| rat(k * k - 3, k + 1)).collect();
        let once = Cyc5::from_coeffs(raw);
        let twice = Cyc5::from_coeffs(once.coeffs().to_vec());
        assert_eq!(once, twice);
    }

    #[test]
    fn display_uses_literal_grammar() {
        let x = Cyc5::zeta_pow(2) - &Cyc5::from_rational(rat(1, 2));
        assert_eq!(x.to_string(), "z5^2 - 1/2");
        assert_eq!(Cyc4::zero().to_string(), "0");
        assert_eq!((-Cyc3::zeta()).to_string(), "-z3");
        assert_eq!((Cyc3::zeta() * &Cyc3::from_rational(rat(3, 1))).to_string(), "3*z3");
    }
}
