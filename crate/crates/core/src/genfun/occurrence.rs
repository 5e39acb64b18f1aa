//! Generating functions for involutions in `I(3412)` with exactly `r`
//! occurrences of a decreasing pattern.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{p_cheb, q_cheb, IntPoly, RatFunc};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    /// Pattern `2k … 21`.
    Even,
    /// Pattern `2k+1 … 21`.
    Odd,
}

/// Exactly `r` occurrences of the decreasing pattern of length `2k`
/// (even) or `2k+1` (odd). `b` bounds the heights used by the path
/// construction; it is derived from `r` unless given.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OccurrenceSpec {
    pub k: usize,
    pub r: u64,
    pub parity: Parity,
    pub b: Option<usize>,
}

impl OccurrenceSpec {
    pub fn new(k: usize, r: u64, parity: Parity) -> Self {
        OccurrenceSpec {
            k,
            r,
            parity,
            b: None,
        }
    }

    /// Spec for the decreasing pattern of the given length (at least 2).
    pub fn for_length(len: usize, r: u64) -> Result<Self> {
        if len < 2 {
            return Err(Error::InvalidSpec(format!(
                "pattern length must be at least 2, got {len}"
            )));
        }
        let parity = if len.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        };
        Ok(OccurrenceSpec::new(len / 2, r, parity))
    }

    pub fn pattern_len(&self) -> usize {
        match self.parity {
            Parity::Even => 2 * self.k,
            Parity::Odd => 2 * self.k + 1,
        }
    }

    pub fn pattern(&self) -> Permutation {
        Permutation::decreasing(self.pattern_len())
    }

    fn weights(&self, i: usize) -> (BigInt, BigInt) {
        let (k, i) = (self.k as i64, i as i64);
        match self.parity {
            Parity::Even => (
                binom(2 * k + 2 * i - 2, 2 * k - 1) + binom(2 * k + 2 * i - 1, 2 * k - 1),
                binom(2 * k + 2 * i, 2 * k - 1),
            ),
            Parity::Odd => (
                binom(2 * k + 2 * i + 1, 2 * k) + binom(2 * k + 2 * i, 2 * k),
                binom(2 * k + 2 * i, 2 * k),
            ),
        }
    }

    fn admits(&self, b: usize) -> bool {
        let (k, b) = (self.k as i64, b as i64);
        let r = BigInt::from(self.r);
        match self.parity {
            Parity::Even => {
                let a = binom(2 * k + 2 * b + 2, 2 * k - 1);
                let c = binom(2 * k + 2 * b, 2 * k - 1) + binom(2 * k + 2 * b + 1, 2 * k - 1);
                r < a.min(c)
            }
            Parity::Odd => binom(2 * k + 2 * b, 2 * k) <= r && r < binom(2 * k + 2 * b + 2, 2 * k),
        }
    }

    /// The block bound: the given one if it satisfies the hypothesis, else
    /// the least admissible one.
    pub fn resolve_b(&self) -> Result<usize> {
        if self.k == 0 || self.r == 0 {
            return Err(Error::InvalidSpec(format!(
                "need k >= 1 and r >= 1, got k = {}, r = {}",
                self.k, self.r
            )));
        }
        match self.b {
            Some(b) if self.admits(b) => Ok(b),
            Some(b) => Err(Error::InvalidSpec(format!(
                "b = {b} violates the bound for r = {}, k = {}",
                self.r, self.k
            ))),
            None => (0..=self.r as usize)
                .find(|&b| self.admits(b))
                .ok_or_else(|| Error::InvalidSpec(format!("no admissible b for r = {}", self.r))),
        }
    }
}

/// `C(a, b)` with `C(a, 0) = 1` and zero when `b < 0` or `b > a`.
fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    if b == 0 {
        return BigInt::one();
    }
    if a < b {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

/// Generating function by length. `r ∈ {1, 2}` use the closed corollaries;
/// other `r` sum the general formula.
pub fn occurrence_gf(spec: &OccurrenceSpec) -> Result<RatFunc> {
    spec.resolve_b()?;
    let k = spec.k as i64;
    let x_pow = |e: i64| IntPoly::monomial(BigInt::one(), e as usize);
    let fast = match (spec.parity, spec.r) {
        (Parity::Even, 1) => Some((x_pow(2 * k), p_cheb(k).pow(2))),
        (Parity::Odd, 1) => Some((x_pow(2 * k + 1), q_cheb(k + 1).pow(2))),
        (Parity::Even, 2) => Some((&x_pow(2 * k + 2) * &p_cheb(k - 1), p_cheb(k).pow(3))),
        (Parity::Odd, 2) => Some((&x_pow(2 * k + 2) * &p_cheb(k), q_cheb(k + 1).pow(3))),
        _ => None,
    };
    match fast {
        Some((num, den)) => RatFunc::new(num, den),
        None => occurrence_gf_general(spec),
    }
}

/// The general sum over all `(d_0..d_b, l_0..l_b)` with weighted total `r`.
pub fn occurrence_gf_general(spec: &OccurrenceSpec) -> Result<RatFunc> {
    let b = spec.resolve_b()?;
    let weights: Vec<(BigInt, BigInt)> = (0..=b).map(|i| spec.weights(i)).collect();
    // (power a, x exponent) -> coefficient of x^e P^{a-1} / Q^{a+1}
    let mut terms: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    let mut d = vec![0u64; b + 1];
    let mut l = vec![0u64; b + 1];
    let r = BigInt::from(spec.r);
    solutions(&weights, 0, &r, &mut d, &mut l, &mut |d, l| {
        let coef = product(spec.parity, d, l);
        if coef.is_zero() {
            return;
        }
        let base = 2 * spec.k;
        let sum: u64 = d.iter().zip(l).map(|(di, li)| 2 * di + li).sum();
        let (a, xe) = match spec.parity {
            Parity::Even => (d[0] as usize, base - 2 + sum as usize),
            Parity::Odd => ((d[0] + l[0]) as usize, base + sum as usize),
        };
        if a == 0 {
            return;
        }
        *terms.entry((a, xe)).or_insert_with(BigInt::zero) += coef;
    });
    let k = spec.k as i64;
    let (p, q) = match spec.parity {
        Parity::Even => (p_cheb(k - 1), p_cheb(k)),
        Parity::Odd => (p_cheb(k), q_cheb(k + 1)),
    };
    let top = terms.keys().map(|&(a, _)| a).max().unwrap_or(0);
    let mut num = IntPoly::zero();
    for (&(a, xe), c) in &terms {
        let t =
            &(&p.pow(a as u32 - 1) * &q.pow((top - a) as u32)) * &IntPoly::monomial(c.clone(), xe);
        num = &num + &t;
    }
    RatFunc::new(num, q.pow(top as u32 + 1))
}

fn product(parity: Parity, d: &[u64], l: &[u64]) -> BigInt {
    let b = d.len() - 1;
    let mut acc = BigInt::one();
    for i in 0..=b {
        let (di, li) = (d[i] as i64, l[i] as i64);
        let f = match parity {
            Parity::Even => {
                let dn = if i < b { d[i + 1] as i64 } else { 0 };
                binom(di + dn + li - 1, dn + li) * binom(dn + li, li)
            }
            Parity::Odd => {
                let dp = if i == 0 { 1 } else { d[i - 1] as i64 };
                binom(di + dp + li - 1, di + li) * binom(di + li, li)
            }
        };
        if f.is_zero() {
            return f;
        }
        acc *= f;
    }
    acc
}

fn solutions<F: FnMut(&[u64], &[u64])>(
    weights: &[(BigInt, BigInt)],
    i: usize,
    rest: &BigInt,
    d: &mut Vec<u64>,
    l: &mut Vec<u64>,
    emit: &mut F,
) {
    if i == weights.len() {
        if rest.is_zero() {
            emit(d, l);
        }
        return;
    }
    let (wd, wl) = &weights[i];
    let mut used_d = BigInt::zero();
    let mut nd = 0u64;
    while &used_d <= rest {
        let after_d = rest - &used_d;
        let mut used_l = BigInt::zero();
        let mut nl = 0u64;
        while used_l <= after_d {
            d[i] = nd;
            l[i] = nl;
            solutions(weights, i + 1, &(&after_d - &used_l), d, l, emit);
            nl += 1;
            used_l += wl;
        }
        nd += 1;
        used_d += wd;
    }
    d[i] = 0;
    l[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(len: usize, r: u64) -> RatFunc {
        occurrence_gf(&OccurrenceSpec::for_length(len, r).unwrap()).unwrap()
    }

    #[test]
    fn corollary_examples() {
        let odd1 = gf(3, 1);
        assert_eq!(
            odd1,
            RatFunc::new(
                IntPoly::from_i64s(&[0, 0, 0, 1]),
                IntPoly::from_i64s(&[1, -1, -1]).pow(2)
            )
            .unwrap()
        );
        assert_eq!(odd1.series(4).unwrap().as_i64s().unwrap()[4], 2);
        let odd2 = gf(3, 2);
        assert_eq!(
            odd2,
            RatFunc::new(
                IntPoly::from_i64s(&[0, 0, 0, 0, 1, -1]),
                IntPoly::from_i64s(&[1, -1, -1]).pow(3)
            )
            .unwrap()
        );
        assert_eq!(odd2.series(5).unwrap().as_i64s().unwrap()[5], 2);
        let even1 = gf(2, 1);
        assert_eq!(
            even1,
            RatFunc::new(
                IntPoly::from_i64s(&[0, 0, 1]),
                IntPoly::from_i64s(&[1, -2, 1])
            )
            .unwrap()
        );
    }

    #[test]
    fn fast_paths_match_general_sum() {
        for len in 2..=7 {
            for r in 1..=2 {
                let s = OccurrenceSpec::for_length(len, r).unwrap();
                assert_eq!(
                    occurrence_gf(&s).unwrap(),
                    occurrence_gf_general(&s).unwrap(),
                    "len {len}, r {r}"
                );
            }
        }
    }

    #[test]
    fn larger_even_bound_is_harmless() {
        for len in [2, 4, 6] {
            for r in 1..=5 {
                let least = OccurrenceSpec::for_length(len, r).unwrap();
                let b = least.resolve_b().unwrap();
                for extra in 1..=2 {
                    let mut wide = least;
                    wide.b = Some(b + extra);
                    if wide.resolve_b().is_ok() {
                        assert_eq!(
                            occurrence_gf_general(&wide).unwrap(),
                            occurrence_gf_general(&least).unwrap(),
                            "len {len}, r {r}, b {}",
                            b + extra
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn block_bound() {
        let s = OccurrenceSpec::for_length(3, 6).unwrap();
        assert_eq!(s.resolve_b().unwrap(), 1);
        let mut bad = s;
        bad.b = Some(0);
        assert!(matches!(occurrence_gf(&bad), Err(Error::InvalidSpec(_))));
        assert!(OccurrenceSpec::for_length(3, 0)
            .unwrap()
            .resolve_b()
            .is_err());
        assert!(OccurrenceSpec::for_length(1, 1).is_err());
        assert_eq!(binom(-1, 0), BigInt::one());
        assert_eq!(binom(5, -1), BigInt::zero());
    }
}
