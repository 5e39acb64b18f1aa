//! Rational closed forms for theorem families, written in the polynomial
//! family `p_k = x^k U_k((1-x)/(2x))` and `q_k = p_k + x p_{k-1}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{PatternSet, Permutation};
use crate::poly::{p_cheb, q_cheb, IntPoly, RatFunc};

fn ratio(num: IntPoly, den: IntPoly) -> RatFunc {
    RatFunc::new(num, den).expect("closed-form denominators have constant term 1")
}

/// `F_{m…21}`: `p_{k-1}/p_k` for `m = 2k` and `q_{k-1}/q_k` for `m = 2k-1`.
pub fn decreasing_closed(m: usize) -> Result<RatFunc> {
    if m == 0 {
        return Err(Error::Domain(
            "decreasing pattern length must be at least 1".into(),
        ));
    }
    let k = m.div_ceil(2) as i64;
    Ok(if m.is_multiple_of(2) {
        ratio(p_cheb(k - 1), p_cheb(k))
    } else {
        ratio(q_cheb(k - 1), q_cheb(k))
    })
}

/// Pattern families with a Chebyshev closed form, indexed by `k ≥ 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedFamily {
    /// `k … 4 3 1 2`
    K312,
    /// `k+1 k … 4 2 3 1`
    K4231,
    /// `k … 4 1 3 2`
    K4132,
    /// `k … 4 2 1 3`
    K4213,
    /// `k … 4 1 2 3`
    K4123,
}

impl ClosedFamily {
    pub const ALL: [ClosedFamily; 5] = [
        ClosedFamily::K312,
        ClosedFamily::K4231,
        ClosedFamily::K4132,
        ClosedFamily::K4213,
        ClosedFamily::K4123,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosedFamily::K312 => "k312",
            ClosedFamily::K4231 => "k4231",
            ClosedFamily::K4132 => "k4132",
            ClosedFamily::K4213 => "k4213",
            ClosedFamily::K4123 => "k4123",
        }
    }

    /// The member of the family with parameter `k`.
    pub fn pattern(self, k: usize) -> Result<Permutation> {
        check_k(k)?;
        let k = k as u16;
        let tail: &[u16] = match self {
            ClosedFamily::K312 => &[3, 1, 2],
            ClosedFamily::K4231 => &[4, 2, 3, 1],
            ClosedFamily::K4132 => &[1, 3, 2],
            ClosedFamily::K4213 => &[2, 1, 3],
            ClosedFamily::K4123 => &[1, 2, 3],
        };
        let top = if self == ClosedFamily::K4231 {
            k + 1
        } else {
            k
        };
        let head_low = tail.iter().max().unwrap() + 1;
        let mut v: Vec<u16> = (head_low..=top).rev().collect();
        v.extend_from_slice(tail);
        Permutation::new(v)
    }

    pub fn closed(self, k: usize) -> Result<RatFunc> {
        check_k(k)?;
        let k = k as i64;
        Ok(match self {
            ClosedFamily::K312 | ClosedFamily::K4231 => ratio(p_cheb(k - 2), p_cheb(k - 1)),
            ClosedFamily::K4132 | ClosedFamily::K4213 => ratio(q_cheb(k - 2), q_cheb(k - 1)),
            ClosedFamily::K4123 => {
                // ((1-x+x^3) p_{k-3} + (x-1) x^2 p_{k-4}) over the same with k+1 for k
                let a = IntPoly::from_i64s(&[1, -1, 0, 1]);
                let b = IntPoly::from_i64s(&[0, 0, -1, 1]);
                let term = |j: i64| &(&a * &p_cheb(j)) + &(&b * &p_cheb(j - 1));
                ratio(term(k - 3), term(k - 2))
            }
        })
    }
}

fn check_k(k: usize) -> Result<()> {
    if k < 3 {
        Err(Error::Domain(format!(
            "family parameter k must be at least 3, got {k}"
        )))
    } else {
        Ok(())
    }
}

impl fmt::Display for ClosedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosedFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ClosedFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse {
                what: "closed-form family",
                token: s.to_string(),
            })
    }
}

/// `F_{[l_1,…,l_m]}` for `m = 2` (any parts) and `m = 3` with all parts even.
pub fn layered_closed(layers: &[usize]) -> Result<RatFunc> {
    if layers.contains(&0) {
        return Err(Error::Domain(format!(
            "layer sizes must be positive, got {layers:?}"
        )));
    }
    match layers {
        [l] => decreasing_closed(*l),
        [k, l] => decreasing_closed(k + l),
        [a, b, c] if a % 2 == 0 && b % 2 == 0 && c % 2 == 0 => {
            let (k1, k2, k3) = ((a / 2) as i64, (b / 2) as i64, (c / 2) as i64);
            let s = k1 + k2 + k3;
            let num = &(&p_cheb(s) * &p_cheb(s - 1))
                + &(&(&p_cheb(k1 + k2 - 1) * &p_cheb(k1 + k3 - 1)) * &p_cheb(k2 + k3 - 1)).shift(2);
            let den = &(&p_cheb(k1 + k2) * &p_cheb(k1 + k3)) * &p_cheb(k2 + k3);
            Ok(ratio(num, den))
        }
        _ => Err(Error::NoClosedForm(format!(
            "layered permutation {layers:?}"
        ))),
    }
}

/// `F_{kT1} = 1 / (1 - x - x^2 F_T)`.
pub fn kt1_closed(f: &RatFunc) -> RatFunc {
    let one = RatFunc::one();
    let lin = RatFunc::from_poly(IntPoly::from_i64s(&[1, -1]));
    let denom = &lin - &f.shift(2);
    &one / &denom
}

/// `F_{k^i T 1^i}` for `F_T = f0/f1`:
/// `(f1 p_{i-1} - x^2 f0 p_{i-2}) / (f1 p_i - x^2 f0 p_{i-1})`.
pub fn kit1i_closed(f0: &IntPoly, f1: &IntPoly, i: usize) -> Result<RatFunc> {
    if i == 0 {
        return Err(Error::Domain("iteration count must be at least 1".into()));
    }
    if f1.is_zero() {
        return Err(Error::Domain("f1 must be nonzero".into()));
    }
    let i = i as i64;
    let x2f0 = f0.shift(2);
    let num = &(f1 * &p_cheb(i - 1)) - &(&x2f0 * &p_cheb(i - 2));
    let den = &(f1 * &p_cheb(i)) - &(&x2f0 * &p_cheb(i - 1));
    RatFunc::new(num, den)
}

/// `{k…21, 12}` wrapped once: `F = 1/(1 - x - … - x^{k+1})`.
pub fn generalized_fibonacci_set(k: usize) -> PatternSet {
    PatternSet::new([Permutation::decreasing(k), Permutation::identity(2)]).kt1()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(IntPoly::from_i64s(n), IntPoly::from_i64s(d)).unwrap()
    }

    fn series(f: &RatFunc, n: usize) -> Vec<i64> {
        f.series(n).unwrap().as_i64s().unwrap()
    }

    #[test]
    fn decreasing_examples() {
        assert_eq!(decreasing_closed(3).unwrap(), r(&[1], &[1, -1, -1]));
        assert_eq!(decreasing_closed(4).unwrap(), r(&[1, -1], &[1, -2]));
        assert_eq!(decreasing_closed(1).unwrap(), RatFunc::one());
        assert_eq!(decreasing_closed(2).unwrap(), r(&[1], &[1, -1]));
        assert!(decreasing_closed(0).is_err());
    }

    #[test]
    fn family_patterns() {
        let p = |f: ClosedFamily, k| f.pattern(k).unwrap().to_string();
        assert_eq!(p(ClosedFamily::K312, 3), "312");
        assert_eq!(p(ClosedFamily::K312, 5), "54312");
        assert_eq!(p(ClosedFamily::K4231, 3), "4231");
        assert_eq!(p(ClosedFamily::K4231, 4), "54231");
        assert_eq!(p(ClosedFamily::K4132, 3), "132");
        assert_eq!(p(ClosedFamily::K4213, 4), "4213");
        assert_eq!(p(ClosedFamily::K4123, 5), "54123");
        assert!(ClosedFamily::K312.closed(2).is_err());
    }

    #[test]
    fn family_examples() {
        assert_eq!(ClosedFamily::K312.closed(3).unwrap(), r(&[1, -1], &[1, -2]));
        assert_eq!(
            series(&ClosedFamily::K4132.closed(3).unwrap(), 6),
            [1, 1, 2, 3, 5, 8, 13]
        );
        assert_eq!(
            series(&ClosedFamily::K4123.closed(3).unwrap(), 5),
            [1, 1, 2, 3, 5, 7]
        );
        let k5 = ClosedFamily::K4123.closed(5).unwrap();
        let expected = RatFunc::new(
            IntPoly::from_i64s(&[1, -3, 1, 3, -3]),
            &IntPoly::from_i64s(&[1, -1]) * &IntPoly::from_i64s(&[1, -3, 0, 4, -2, -1]),
        )
        .unwrap();
        assert_eq!(k5, expected);
    }

    #[test]
    fn layered_examples() {
        assert_eq!(layered_closed(&[2, 2]).unwrap(), r(&[1, -1], &[1, -2]));
        assert_eq!(
            layered_closed(&[2, 3]).unwrap(),
            r(&[1, -1, -1], &[1, -2, -1, 1])
        );
        assert!(layered_closed(&[2, 2, 2]).is_ok());
        assert!(matches!(
            layered_closed(&[1, 2, 2]),
            Err(Error::NoClosedForm(_))
        ));
        assert!(matches!(
            layered_closed(&[1, 1, 1, 1]),
            Err(Error::NoClosedForm(_))
        ));
    }

    #[test]
    fn kt1_examples() {
        let f = RatFunc::from_poly(IntPoly::from_i64s(&[1, 1]));
        let g = kt1_closed(&f);
        assert_eq!(g, r(&[1], &[1, -1, -1, -1]));
        assert_eq!(series(&g, 5), [1, 1, 2, 4, 7, 13]);
        assert_eq!(kt1_closed(&RatFunc::zero()), r(&[1], &[1, -1]));
        let h = kit1i_closed(&IntPoly::from_i64s(&[1, 1]), &IntPoly::one(), 1).unwrap();
        assert_eq!(h, g);
        assert_eq!(generalized_fibonacci_set(2).to_string(), "{4231,4321}");
    }
}
