use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::intpoly::IntPoly;
use super::series::PowerSeries;
use crate::error::{Error, Result};

/// A reduced quotient of integer polynomials.
///
/// Invariants: the denominator is nonzero, numerator and denominator share no
/// nonconstant factor and no common integer content, and the denominator's
/// lowest-order nonzero coefficient is positive. Two equal rational functions
/// therefore have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            };
        }
        let g = IntPoly::gcd_primitive(&num, &den);
        let (mut num, mut den) = if g.degree().unwrap_or(0) > 0 {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        } else {
            (num, den)
        };
        let mut c = num.content().gcd(&den.content());
        if den.lowest().expect("nonzero").1.is_negative() {
            c = -c;
        }
        if c != BigInt::from(1) {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RatFunc {
            num: p,
            den: IntPoly::one(),
        }
        .renormalized()
    }

    fn renormalized(self) -> Self {
        Self::normalized(self.num, self.den)
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(IntPoly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(IntPoly::one())
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> RatFunc {
        Self::normalized(self.num.shift(k), self.den.clone())
    }

    pub fn scale(&self, c: &BigInt) -> RatFunc {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn recip(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
        .renormalized()
    }

    /// Expansion through `x^order`.
    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        if self.den.coeff(0).is_zero() {
            return Err(Error::Expansion);
        }
        let num = PowerSeries::from_poly(&self.num, order);
        let den = PowerSeries::from_poly(&self.den, order);
        num.div(&den)
    }

    pub fn to_json(&self) -> RatFuncJson {
        RatFuncJson {
            num: self.num.to_strings(),
            den: self.den.to_strings(),
        }
    }

    pub fn from_json(j: &RatFuncJson) -> Result<RatFunc> {
        let parse = |v: &[String]| {
            IntPoly::from_strings(v).ok_or_else(|| Error::Parse {
                what: "polynomial",
                token: v.join(","),
            })
        };
        RatFunc::new(parse(&j.num)?, parse(&j.den)?)
    }
}

/// `{"num": [...], "den": [...]}` with decimal-string coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl From<IntPoly> for RatFunc {
    fn from(p: IntPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::normalized(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::recip`] for a checked form.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RatFunc::normalized(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn r(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn normalization() {
        let a = r(&[1, -1], &[1, -2, 1]);
        assert_eq!(a, r(&[1], &[1, -1]));
        assert_eq!(r(&[-2], &[-4, 2]), r(&[1], &[2, -1]));
        assert_eq!(r(&[2, 4], &[2]), RatFunc::from_poly(p(&[1, 2])));
        assert_eq!(r(&[0], &[5, 1]), RatFunc::zero());
        assert!(r(&[1], &[0, -1]).den().lowest().unwrap().1.is_positive());
        assert!(RatFunc::new(p(&[1]), IntPoly::zero()).is_err());
    }

    #[test]
    fn field_operations() {
        let a = r(&[1, 2, 3], &[1, -1]);
        let b = r(&[2, 0, 1], &[3, 0, 0, 1]);
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(&a * &a.recip().unwrap(), RatFunc::one());
    }

    #[test]
    fn series_examples() {
        let s = r(&[1], &[1, -1]).series(4).unwrap();
        assert_eq!(s.as_i64s().unwrap(), vec![1, 1, 1, 1, 1]);
        let s = r(&[1, -1], &[1, -2]).series(4).unwrap();
        assert_eq!(s.as_i64s().unwrap(), vec![1, 1, 2, 4, 8]);
        let s = r(&[1, -1, -1], &[1, -2, -1, 1]).series(5).unwrap();
        assert_eq!(s.as_i64s().unwrap(), vec![1, 1, 2, 4, 9, 20]);
        assert!(matches!(r(&[1], &[0, 1]).series(3), Err(Error::Expansion)));
    }

    #[test]
    fn json_round_trip() {
        let a = r(&[1, -3, 1, 3, -3], &[1, -4, 3, 4, -4, -2, 1]);
        let j = serde_json::to_string(&a.to_json()).unwrap();
        let back: RatFuncJson = serde_json::from_str(&j).unwrap();
        assert_eq!(RatFunc::from_json(&back).unwrap(), a);
    }
}
