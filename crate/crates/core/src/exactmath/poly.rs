use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Rational;

/// Dense univariate polynomial in `m` over the rationals.
///
/// Coefficients are stored lowest degree first with trailing zeros trimmed,
/// so the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct Poly {
    coeffs: Vec<Rational>,
}

/// Sign of `p(m)` for all sufficiently large `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EventualSign {
    Negative,
    Zero,
    Positive,
}

/// Strict (`≺ 0`) or weak (`⪯ 0`) eventual comparison with zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Strict,
    Weak,
}

impl Poly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The polynomial `m`.
    pub fn monomial_m() -> Self {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `m^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, m: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * m + c)
    }

    pub fn eventual_sign(&self) -> EventualSign {
        match self.leading().map(Rational::signum) {
            None | Some(0) => EventualSign::Zero,
            Some(s) if s > 0 => EventualSign::Positive,
            Some(_) => EventualSign::Negative,
        }
    }

    /// `p ≺ 0` (strict) or `p ⪯ 0` (weak).
    pub fn cmp_zero(&self, mode: Mode) -> bool {
        match (self.eventual_sign(), mode) {
            (EventualSign::Negative, _) => true,
            (EventualSign::Zero, Mode::Weak) => true,
            _ => false,
        }
    }

    /// Total order by values at large `m`.
    pub fn eventual_cmp(&self, other: &Poly) -> Ordering {
        match (self - other).eventual_sign() {
            EventualSign::Negative => Ordering::Less,
            EventualSign::Zero => Ordering::Equal,
            EventualSign::Positive => Ordering::Greater,
        }
    }
}

impl From<Vec<Rational>> for Poly {
    fn from(coeffs: Vec<Rational>) -> Self {
        Poly::new(coeffs)
    }
}

impl From<Poly> for Vec<Rational> {
    fn from(p: Poly) -> Self {
        p.coeffs
    }
}

impl<'a, 'b> Add<&'b Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'b Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a, 'b> Sub<&'b Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'b Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a, 'b> Mul<&'b Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'b Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coeff = if mag.is_one() && k > 0 { String::new() } else { mag.to_string() };
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{coeff}m")?,
                _ => write!(f, "{coeff}m^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::q;

    #[test]
    fn cancellation_trims_to_zero() {
        let a = Poly::from_ints(&[0, 0, 1]);
        let b = Poly::from_ints(&[0, 0, -1]);
        let s = &a + &b;
        assert!(s.is_zero());
        assert_eq!(s.degree(), None);
    }

    #[test]
    fn product_and_scale() {
        let p = &Poly::from_ints(&[1, 1]) * &Poly::from_ints(&[2, 1]);
        assert_eq!(p, Poly::from_ints(&[2, 3, 1]));
        let half_m2 = Poly::new(vec![Rational::zero(), Rational::zero(), q(1, 2)]);
        assert_eq!(
            half_m2.scale(&Rational::from(3)),
            Poly::new(vec![Rational::zero(), Rational::zero(), q(3, 2)])
        );
    }

    #[test]
    fn eventual_sign_examples() {
        assert_eq!(Poly::zero().eventual_sign(), EventualSign::Zero);
        assert_eq!(Poly::from_ints(&[-2]).eventual_sign(), EventualSign::Negative);
        let p = Poly::new(vec![Rational::zero(), Rational::from(-1000), q(3, 2)]);
        assert_eq!(p.eventual_sign(), EventualSign::Positive);
    }

    #[test]
    fn cmp_zero_examples() {
        assert!(Poly::zero().cmp_zero(Mode::Weak));
        assert!(!Poly::zero().cmp_zero(Mode::Strict));
        assert!(Poly::from_ints(&[1_000_000, -1]).cmp_zero(Mode::Strict));
    }

    #[test]
    fn display() {
        let p = Poly::new(vec![Rational::from(1), q(3, 2), q(1, 2)]);
        assert_eq!(p.to_string(), "1/2m^2 + 3/2m + 1");
        assert_eq!(Poly::from_ints(&[-3, 0, -1]).to_string(), "-m^2 - 3");
    }
}
