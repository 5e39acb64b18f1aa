//! The continued fraction
//! `1/(1 - x_1 - x_1^2 x_2/(1 - x_1 x_2^2 x_3 - …))` for
//! `Σ_{π ∈ I(3412)} Π_k x_k^{τ_k(π)}`, evaluated under a specialization of
//! the `x_i` to monomials `x^a q^b` (or zero).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::motzkin::generate_paths;
use crate::oracle::Oracle;

/// Value assigned to one variable `x_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    Zero,
    /// `x^x q^q`.
    Mono {
        x: u32,
        q: i64,
    },
}

impl Var {
    fn mono(x: u32, q: i64) -> Var {
        Var::Mono { x, q }
    }
}

/// Specializations of the variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CfSpec {
    /// Avoiding the decreasing pattern of the given length.
    AvoidDecreasing(usize),
    /// `x_1 = x`, `x_2 = q`, rest 1.
    Inv,
    /// Nonempty decreasing subsequences: `x_1 = xq`, rest `q`.
    M,
    /// `x_1 = xq`, `x_i = q^{(-1)^{i-1}}`; also counts right-to-left minima.
    Lrmax,
    /// `x_1 = xq`, `x_i = q^{(-2)^{i-1}}`.
    Fix,
    /// `q^{Σ λ_k τ_k}`: `x_1 = x q^{λ_1}`, `x_i = q^{λ_i}`, with `λ_i = 0`
    /// past the end of the list.
    Linear(Vec<i64>),
}

impl CfSpec {
    pub fn var(&self, i: usize) -> Var {
        debug_assert!(i >= 1);
        let x = u32::from(i == 1);
        match self {
            CfSpec::AvoidDecreasing(len) => {
                if i >= *len {
                    Var::Zero
                } else {
                    Var::mono(x, 0)
                }
            }
            CfSpec::Inv => Var::mono(x, i64::from(i == 2)),
            CfSpec::M => Var::mono(x, 1),
            CfSpec::Lrmax => Var::mono(x, if i % 2 == 1 { 1 } else { -1 }),
            CfSpec::Fix => Var::mono(x, (-2i64).pow(i as u32 - 1)),
            CfSpec::Linear(l) => Var::mono(x, l.get(i - 1).copied().unwrap_or(0)),
        }
    }

    /// Level `n ≥ 1` numerator `Π_{i ≤ 2n} x_i^{C(2n-2,i-1) + C(2n-1,i-1)}`.
    fn numerator(&self, n: usize) -> Result<Var> {
        self.product((1..=2 * n).map(|i| (i, binom(2 * n - 2, i - 1) + binom(2 * n - 1, i - 1))))
    }

    /// Level `n ≥ 0` monomial `m` in the denominator `1 - m`:
    /// `Π_{i ≤ 2n+1} x_i^{C(2n,i-1)}`.
    fn denominator(&self, n: usize) -> Result<Var> {
        self.product((1..=2 * n + 1).map(|i| (i, binom(2 * n, i - 1))))
    }

    fn product<I: Iterator<Item = (usize, BigInt)>>(&self, exps: I) -> Result<Var> {
        let mut xe = BigInt::zero();
        let mut qe = BigInt::zero();
        for (i, e) in exps {
            if e.is_zero() {
                continue;
            }
            match self.var(i) {
                Var::Zero => return Ok(Var::Zero),
                Var::Mono { x, q } => {
                    xe += &e * x;
                    qe += &e * q;
                }
            }
        }
        let overflow = || Error::Domain("continued-fraction exponent out of range".into());
        Ok(Var::Mono {
            x: xe.to_u32().ok_or_else(overflow)?,
            q: qe.to_i64().ok_or_else(overflow)?,
        })
    }
}

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Laurent polynomial in `q` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPoly(BTreeMap<i64, BigInt>);

impl QPoly {
    pub fn zero() -> Self {
        QPoly(BTreeMap::new())
    }

    pub fn monomial(c: BigInt, e: i64) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(e, c);
        }
        QPoly(m)
    }

    pub fn one() -> Self {
        QPoly::monomial(BigInt::one(), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.0.get(&e).cloned().unwrap_or_default()
    }

    /// `(exponent, coefficient)` pairs in increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.0.iter().map(|(e, c)| (*e, c))
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.0.values().sum()
    }

    /// Dense coefficients from `q^0`; `None` if a negative power occurs.
    pub fn to_dense(&self) -> Option<Vec<BigInt>> {
        if self.0.keys().next().is_some_and(|&e| e < 0) {
            return None;
        }
        let top = self.0.keys().next_back().copied().unwrap_or(-1);
        Some((0..=top).map(|e| self.coeff(e)).collect())
    }

    fn add_assign(&mut self, other: &QPoly, sign: i64) {
        for (e, c) in &other.0 {
            let slot = self.0.entry(*e).or_insert_with(BigInt::zero);
            *slot += c * sign;
            if slot.is_zero() {
                self.0.remove(e);
            }
        }
    }

    fn mul(&self, other: &QPoly) -> QPoly {
        let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.0 {
            for (eb, cb) in &other.0 {
                *out.entry(ea + eb).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        QPoly(out)
    }

    fn shift(&self, by: i64) -> QPoly {
        QPoly(self.0.iter().map(|(e, c)| (e + by, c.clone())).collect())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in &self.0 {
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let mag = c.abs();
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

/// Power series in `x` with Laurent-polynomial coefficients in `q`, known
/// through `x^order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSeries {
    coeffs: Vec<QPoly>,
}

impl QSeries {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &QPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    /// Specialization `q = 1`.
    pub fn at_q_one(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(QPoly::at_one).collect()
    }

    fn constant(c: QPoly, order: usize) -> QSeries {
        let mut coeffs = vec![QPoly::zero(); order + 1];
        coeffs[0] = c;
        QSeries { coeffs }
    }

    fn truncate(&self, order: usize) -> QSeries {
        QSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn mul_mono(&self, xe: usize, qe: i64, order: usize) -> QSeries {
        let mut coeffs = vec![QPoly::zero(); order + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            if n + xe <= order {
                coeffs[n + xe] = c.shift(qe);
            }
        }
        QSeries { coeffs }
    }

    /// `1 / self` when the constant term is `1`.
    fn inverse_unit(&self) -> QSeries {
        debug_assert!(self.coeffs[0] == QPoly::one());
        let n = self.order();
        let mut out: Vec<QPoly> = vec![QPoly::one()];
        for k in 1..=n {
            let mut acc = QPoly::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() || out[k - j].is_zero() {
                    continue;
                }
                acc.add_assign(&self.coeffs[j].mul(&out[k - j]), -1);
            }
            out.push(acc);
        }
        QSeries { coeffs: out }
    }
}

/// Default truncation depth for order `n`.
pub fn default_depth(order: usize) -> usize {
    order.div_ceil(2) + 2
}

/// Expands the specialized continued fraction through `x^order`.
/// `depth` is the deepest level kept (level 0 is `1/(1 - x_1)`).
pub fn cf_series(spec: &CfSpec, order: usize, depth: Option<usize>) -> Result<QSeries> {
    if let CfSpec::AvoidDecreasing(0) = spec {
        return Err(Error::Domain("pattern length must be positive".into()));
    }
    let depth = depth.unwrap_or_else(|| default_depth(order));
    // Each level contributes its numerator's x-degree; find the levels that
    // can influence order `order`.
    let mut nums: Vec<Var> = vec![Var::mono(0, 0)];
    let mut dens: Vec<Var> = Vec::new();
    let mut budget: Vec<usize> = Vec::new();
    let mut used = 0usize;
    let mut needed = 0usize;
    for n in 0.. {
        let den = spec.denominator(n)?;
        match den {
            Var::Mono { x: 0, .. } => {
                return Err(Error::Domain(
                    "x_1 must carry a positive power of x for the expansion to converge".into(),
                ))
            }
            _ => dens.push(den),
        }
        budget.push(order - used);
        needed = n;
        let next = spec.numerator(n + 1)?;
        match next {
            Var::Zero => break,
            Var::Mono { x, .. } => {
                if used + x as usize > order {
                    break;
                }
                used += x as usize;
                nums.push(next);
            }
        }
    }
    if depth < needed {
        return Err(Error::DepthInsufficient { depth, order });
    }
    // bottom-up: v_n = 1 / (1 - m_n - N_{n+1} v_{n+1})
    let mut below: Option<QSeries> = None;
    for n in (0..=needed).rev() {
        let ord = budget[n];
        let mut d = QSeries::constant(QPoly::one(), ord);
        if let Var::Mono { x, q } = dens[n] {
            if x as usize <= ord {
                d.coeffs[x as usize].add_assign(&QPoly::monomial(BigInt::one(), q), -1);
            }
        }
        if let Some(v) = below.take() {
            if let Var::Mono { x, q } = nums[n + 1] {
                let t = v.mul_mono(x as usize, q, ord);
                for (i, c) in t.coeffs.iter().enumerate() {
                    d.coeffs[i].add_assign(c, -1);
                }
            }
        }
        below = Some(d.inverse_unit());
    }
    Ok(below.expect("level 0 always evaluated").truncate(order))
}

/// Compares the multisets `{(τ_1, …, τ_{2n})}` over `I_n(3412)` and over
/// Motzkin paths of length `n`.
pub fn multivariate_tau_check(n: usize) -> Result<bool> {
    let width = 2 * n;
    let mut counts: HashMap<Vec<u64>, i64> = HashMap::new();
    for p in Oracle::default().enumerate_involutions(n)? {
        *counts.entry(p.tau_vector(width)).or_insert(0) += 1;
    }
    for path in generate_paths(n)? {
        *counts.entry(path.tau_vector(width)).or_insert(0) -= 1;
    }
    Ok(counts.values().all(|&c| c == 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> QPoly {
        let mut m = QPoly::zero();
        for (e, &v) in c.iter().enumerate() {
            m.add_assign(&QPoly::monomial(BigInt::from(v), e as i64), 1);
        }
        m
    }

    fn at_one(s: &QSeries) -> Vec<i64> {
        s.at_q_one().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn avoidance_fractions() {
        let s = cf_series(&CfSpec::AvoidDecreasing(4), 5, None).unwrap();
        assert_eq!(at_one(&s), [1, 1, 2, 4, 8, 16]);
        let s = cf_series(&CfSpec::AvoidDecreasing(3), 6, None).unwrap();
        assert_eq!(at_one(&s), [1, 1, 2, 3, 5, 8, 13]);
        let s = cf_series(&CfSpec::AvoidDecreasing(1), 3, None).unwrap();
        assert_eq!(at_one(&s), [1, 0, 0, 0]);
    }

    #[test]
    fn statistic_fractions() {
        let fix = cf_series(&CfSpec::Fix, 5, None).unwrap();
        assert_eq!(at_one(&fix), [1, 1, 2, 4, 9, 21]);
        let inv = cf_series(&CfSpec::Inv, 3, None).unwrap();
        assert_eq!(inv.coeff(3), &q(&[1, 2, 0, 1]));
        assert_eq!(inv.coeff(2), &q(&[1, 1]));
        let lr = cf_series(&CfSpec::Lrmax, 2, None).unwrap();
        assert_eq!(lr.coeff(2), &q(&[0, 1, 1]));
    }

    #[test]
    fn depth_checks() {
        assert!(matches!(
            cf_series(&CfSpec::Inv, 10, Some(2)),
            Err(Error::DepthInsufficient {
                depth: 2,
                order: 10
            })
        ));
        let a = cf_series(&CfSpec::M, 10, Some(5)).unwrap();
        let b = cf_series(&CfSpec::M, 10, Some(9)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn tau_multisets() {
        for n in 0..=5 {
            assert!(multivariate_tau_check(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn qpoly_display() {
        let mut p = q(&[1, -2, 0, 1]);
        p.add_assign(&QPoly::monomial(BigInt::from(3), -1), 1);
        assert_eq!(p.to_string(), "3*q^-1 + 1 - 2*q + q^3");
        assert!(p.to_dense().is_none());
        assert_eq!(
            q(&[0, 1]).to_dense().unwrap(),
            vec![BigInt::zero(), BigInt::one()]
        );
    }
}
