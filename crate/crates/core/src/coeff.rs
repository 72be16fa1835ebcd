//! Exact Gaussian-rational scalars.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A complex number `re + im*i` with arbitrary-precision rational parts.
///
/// Both parts are always kept in lowest terms with a positive denominator
/// (this is what `BigRational` guarantees), so structural equality is
/// numeric equality and the type can be hashed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Coeff {
    re: BigRational,
    im: BigRational,
}

impl Coeff {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Coeff { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Coeff { re, im: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Coeff::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Coeff::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        Coeff::new(BigRational::from_integer(BigInt::from(re)), BigRational::from_integer(BigInt::from(im)))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Coeff::gaussian(0, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Coeff::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Coeff::new(&self.re / &n, -(&self.im / &n)))
    }

    /// `self * num / den`.
    pub fn scaled_by_ratio(&self, num: i64, den: i64) -> Self {
        self * &Coeff::from_ratio(num, den)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Coeff::one();
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

    /// Renders the scalar in the polynomial input grammar. Values with both
    /// parts nonzero are parenthesised so they can be used as a factor.
    pub(crate) fn write_factor(&self, out: &mut String) {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => out.push_str(&fmt_rational(&self.re)),
            (true, false) => out.push_str(&fmt_imag(&self.im)),
            (false, false) => {
                out.push('(');
                out.push_str(&fmt_rational(&self.re));
                if self.im.is_negative() {
                    out.push_str(" - ");
                    out.push_str(&fmt_imag(&-self.im.clone()));
                } else {
                    out.push_str(" + ");
                    out.push_str(&fmt_imag(&self.im));
                }
                out.push(')');
            }
        }
    }

    /// True when the printed form starts with a minus sign that can be
    /// pulled out into the surrounding sum.
    pub(crate) fn is_negative_display(&self) -> bool {
        (self.im.is_zero() && self.re.is_negative()) || (self.re.is_zero() && self.im.is_negative())
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn fmt_imag(q: &BigRational) -> String {
    if q.is_one() {
        "i".to_string()
    } else if (-q).is_one() {
        "-i".to_string()
    } else {
        format!("{}*i", fmt_rational(q))
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_factor(&mut s);
        f.write_str(&s)
    }
}

impl Zero for Coeff {
    fn zero() -> Self {
        Coeff::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Coeff {
    fn one() -> Self {
        Coeff::from_int(1)
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Self {
        Coeff::from_int(n)
    }
}

impl From<BigRational> for Coeff {
    fn from(q: BigRational) -> Self {
        Coeff::real(q)
    }
}

impl FromStr for Coeff {
    type Err = crate::Error;

    /// Accepts anything the polynomial grammar accepts for a constant,
    /// e.g. `3`, `-1/2`, `1+i`, `(2 - 3*i)/5`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let p = crate::poly::parse_poly(s, &[] as &[&str])?;
        Ok(p.constant_term())
    }
}

impl<'a> Add<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        Coeff::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Add for Coeff {
    type Output = Coeff;
    fn add(self, rhs: Coeff) -> Coeff {
        Coeff::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, rhs: &Coeff) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl<'a> Sub<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        Coeff::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Sub for Coeff {
    type Output = Coeff;
    fn sub(self, rhs: Coeff) -> Coeff {
        Coeff::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl SubAssign<&Coeff> for Coeff {
    fn sub_assign(&mut self, rhs: &Coeff) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Coeff::real(&self.re * &rhs.re);
        }
        Coeff::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
}

impl Mul for Coeff {
    type Output = Coeff;
    fn mul(self, rhs: Coeff) -> Coeff {
        &self * &rhs
    }
}

impl<'a> Div<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    /// Panics on division by zero, like the integer types.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Coeff) -> Coeff {
        let inv = rhs.inv().expect("division by zero coefficient");
        self * &inv
    }
}

impl Div for Coeff {
    type Output = Coeff;
    fn div(self, rhs: Coeff) -> Coeff {
        &self / &rhs
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff::new(-self.re, -self.im)
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff::new(-self.re.clone(), -self.im.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_gaussian() {
        let z = Coeff::gaussian(1, 2);
        let w = z.inv().unwrap();
        assert_eq!(&z * &w, Coeff::one());
        assert_eq!(w, Coeff::new(BigRational::new(1.into(), 5.into()), BigRational::new((-2).into(), 5.into())));
        assert!(Coeff::zero().inv().is_none());
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(Coeff::i().pow(2), Coeff::from_int(-1));
        assert_eq!(Coeff::i().pow(4), Coeff::one());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Coeff::from_ratio(-3, 6).to_string(), "-1/2");
        assert_eq!(Coeff::i().to_string(), "i");
        assert_eq!(Coeff::gaussian(0, -2).to_string(), "-2*i");
        assert_eq!(Coeff::gaussian(1, -1).to_string(), "(1 - i)");
    }
}
