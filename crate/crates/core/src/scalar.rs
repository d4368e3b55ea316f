//! Exact scalars: Gaussian rationals `re + im·i` with arbitrary-precision
//! numerators and denominators.
//!
//! Real mode uses the same type with the imaginary part pinned to zero;
//! [`AlgebraMode::check`] enforces that at the boundaries where it matters.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field selector: `Complex` is ℂ_m, `Real` is ℝ_{0,m}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraMode {
    #[default]
    Complex,
    Real,
}

impl AlgebraMode {
    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraMode::Complex => "complex",
            AlgebraMode::Real => "real",
        }
    }

    /// Rejects scalars that do not belong to this mode's field.
    pub fn check(self, s: &Scalar) -> Result<()> {
        if self == AlgebraMode::Real && !s.im.is_zero() {
            return Err(Error::ImaginaryInRealMode);
        }
        Ok(())
    }
}

impl FromStr for AlgebraMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complex" => Ok(AlgebraMode::Complex),
            "real" => Ok(AlgebraMode::Real),
            other => Err(Error::InvalidArgument(format!(
                "unknown algebra mode `{other}`"
            ))),
        }
    }
}

/// An exact Gaussian rational. Both parts are kept in lowest terms with
/// positive denominators (guaranteed by `BigRational`).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Scalar {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn complex(re: i64, im: i64) -> Self {
        Scalar {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::complex(0, 1)
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True for a real scalar strictly greater than zero.
    pub fn is_positive_real(&self) -> bool {
        self.im.is_zero() && self.re.is_positive()
    }

    pub fn conj(&self) -> Scalar {
        Scalar {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// |z|² = re² + im².
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn re_part(&self) -> Scalar {
        Scalar::real(self.re.clone())
    }

    pub fn im_part(&self) -> Scalar {
        Scalar::real(self.im.clone())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Scalar {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn mul_int(&self, n: i64) -> Scalar {
        let n = BigRational::from_integer(BigInt::from(n));
        Scalar {
            re: &self.re * &n,
            im: &self.im * &n,
        }
    }

    /// Least common multiple of the two denominators.
    pub fn denom_lcm(&self) -> BigInt {
        num_integer::Integer::lcm(self.re.denom(), self.im.denom())
    }

    /// Renders a rational as `p` or `p/q`.
    pub fn rat_to_string(r: &BigRational) -> String {
        if r.is_integer() {
            r.numer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    }

    /// Parses `p`, `-p` or `p/q`.
    pub fn parse_rat(s: &str) -> Result<BigRational> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational `{s}`"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            }
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::real(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re = Scalar::rat_to_string(&self.re);
        if self.im.is_zero() {
            return write!(f, "{re}");
        }
        let im_abs = Scalar::rat_to_string(&self.im.abs());
        let im = if im_abs == "1" {
            "i".to_string()
        } else {
            format!("{im_abs}i")
        };
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-{im}")
            } else {
                write!(f, "{im}")
            }
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "({re}{sign}{im})")
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::real(&self.re * &rhs.re);
        }
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero, like the rational division it wraps.
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        if !rhs.im.is_zero() {
            self.im -= &rhs.im;
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let a = Scalar::complex(1, 2);
        let b = Scalar::complex(3, -1);
        assert_eq!(&a * &b, Scalar::complex(5, 5));
        assert_eq!(&(&a / &b) * &b, a);
        assert_eq!(Scalar::i().pow(2), Scalar::from_int(-1));
        assert!(Scalar::zero().inv().is_none());
    }

    #[test]
    fn lowest_terms() {
        let s = Scalar::ratio(6, -4);
        assert_eq!(s.re().numer(), &BigInt::from(-3));
        assert_eq!(s.re().denom(), &BigInt::from(2));
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Scalar::ratio(-3, 2).to_string(), "-3/2");
        assert_eq!(Scalar::complex(0, -1).to_string(), "-i");
        assert_eq!(Scalar::complex(2, 3).to_string(), "(2+3i)");
        assert_eq!(
            Scalar::parse_rat("-7/14").unwrap(),
            Scalar::ratio(-1, 2).re().clone()
        );
        assert!(Scalar::parse_rat("1/0").is_err());
        assert!(Scalar::parse_rat("x").is_err());
    }

    #[test]
    fn real_mode_rejects_imaginary() {
        assert!(AlgebraMode::Real.check(&Scalar::i()).is_err());
        assert!(AlgebraMode::Complex.check(&Scalar::i()).is_ok());
        assert!(AlgebraMode::Real.check(&Scalar::ratio(1, 3)).is_ok());
    }
}
