use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::intpoly::IntPoly;
use crate::error::{Error, Result};
use crate::perm::PatternSet;

/// A formal power series known exactly through `x^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    /// `coeffs` holds `x^0..=x^order`, so it must be nonempty.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs at least order 0");
        PowerSeries { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = BigInt>>(coeffs: I) -> Self {
        PowerSeries::new(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        PowerSeries::from_integers(coeffs.iter().map(|&c| BigInt::from(c)))
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries::new(vec![BigRational::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        PowerSeries::from_poly(&IntPoly::one(), order)
    }

    pub fn from_poly(p: &IntPoly, order: usize) -> Self {
        PowerSeries::from_integers((0..=order).map(|i| p.coeff(i)))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> PowerSeries {
        PowerSeries::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    /// All coefficients as integers, if they are integral.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Integral coefficients that fit in `i64`.
    pub fn as_i64s(&self) -> Option<Vec<i64>> {
        self.integer_coeffs()?
            .iter()
            .map(|c| i64::try_from(c).ok())
            .collect()
    }

    pub fn add(&self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries::new((0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect())
    }

    pub fn sub(&self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries::new((0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect())
    }

    pub fn mul(&self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        PowerSeries::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> PowerSeries {
        PowerSeries::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`; the known order grows by `k`.
    pub fn shift(&self, k: usize) -> PowerSeries {
        let mut out = vec![BigRational::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        PowerSeries::new(out)
    }

    pub fn inverse(&self) -> Result<PowerSeries> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Expansion);
        }
        let n = self.order();
        let inv0 = c0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out.push(-acc * &inv0);
        }
        Ok(PowerSeries::new(out))
    }

    pub fn div(&self, rhs: &PowerSeries) -> Result<PowerSeries> {
        Ok(self.mul(&rhs.inverse()?))
    }

    pub fn to_json(&self, pattern_set: &PatternSet) -> SeriesJson {
        SeriesJson {
            pattern_set: pattern_set.iter().map(|p| p.to_string()).collect(),
            order: self.order(),
            coefficients: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn from_json(j: &SeriesJson) -> Result<PowerSeries> {
        if j.coefficients.len() != j.order + 1 {
            return Err(Error::Parse {
                what: "series",
                token: format!(
                    "order {} with {} coefficients",
                    j.order,
                    j.coefficients.len()
                ),
            });
        }
        j.coefficients
            .iter()
            .map(|s| {
                s.parse::<BigRational>().map_err(|_| Error::Parse {
                    what: "coefficient",
                    token: s.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(PowerSeries::new)
    }
}

/// `{"pattern_set": [...], "order": N, "coefficients": ["1", ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub pattern_set: Vec<String>,
    pub order: usize,
    pub coefficients: Vec<String>,
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries[{self}]")
    }
}

impl From<&PowerSeries> for Vec<BigRational> {
    fn from(s: &PowerSeries) -> Self {
        s.coeffs.clone()
    }
}
