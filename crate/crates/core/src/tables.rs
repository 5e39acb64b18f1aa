//! Expected enumerations of `I_n(3412, σ)` for the tabulated single
//! patterns, loaded from `data/tables.toml`.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::motzkin::motzkin_numbers;
use crate::perm::Permutation;
use crate::poly::{IntPoly, RatFunc};

const DATA: &str = include_str!("../data/tables.toml");

/// Closed expressions in `n` used by the tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Formula {
    /// `(2n² + 7 + (-1)^n) / 8`
    Quadratic,
    /// `F_{n+1}`
    Fibonacci,
    /// `2^{n-1}`
    PowerOfTwo,
    /// `(2n⁴ - 4n³ + 28n² - 2n + 81 - 6n(-1)^n + 15(-1)^n) / 96`
    Quartic,
    /// `(n/5) F_{n+2} + (n/5) F_n - (3/5) F_n + 1`
    FibonacciLinear,
    /// `M_n`
    Motzkin,
    /// `(P_n + P_{n-1} + 1) / 2`
    Pell,
    /// `3·2^{n-1} - (2F_{n+3} + nF_{n+2} + F_{n+1} + nF_n) / 5`
    TwoPowerMinusFibonacci,
    /// `(3n+7) 2^{n-2} / 9 + 1/2 + (-1)^n / 18`
    TwoPowerThirds,
    /// `(5n² - 3n - 100) F_{n+1} / 50 + (12n - 38) F_n / 25 + (2n² + 8n + 23 + (-1)^n) / 8`
    FibonacciQuadratic,
    /// `(F_{n+1} + F_{2n} - F_{2n-2}) / 2`
    FibonacciEvenOdd,
    /// `(2n⁶ - 12n⁵ + 86n⁴ - 168n³ + 731n² - 54n + 1917 + (-1)^n (45n² - 234n + 387)) / 2304`
    Sextic,
}

impl Formula {
    pub fn text(self) -> &'static str {
        match self {
            Formula::Quadratic => "(2n^2+7+(-1)^n)/8",
            Formula::Fibonacci => "F(n+1)",
            Formula::PowerOfTwo => "2^(n-1)",
            Formula::Quartic => "(2n^4-4n^3+28n^2-2n+81-6n(-1)^n+15(-1)^n)/96",
            Formula::FibonacciLinear => "(n/5)F(n+2)+(n/5)F(n)-(3/5)F(n)+1",
            Formula::Motzkin => "M(n)",
            Formula::Pell => "(P(n)+P(n-1)+1)/2",
            Formula::TwoPowerMinusFibonacci => "3*2^(n-1)-(2F(n+3)+nF(n+2)+F(n+1)+nF(n))/5",
            Formula::TwoPowerThirds => "(3n+7)2^(n-2)/9+1/2+(-1)^n/18",
            Formula::FibonacciQuadratic => {
                "(5n^2-3n-100)F(n+1)/50+(12n-38)F(n)/25+(2n^2+8n+23+(-1)^n)/8"
            }
            Formula::FibonacciEvenOdd => "(F(n+1)+F(2n)-F(2n-2))/2",
            Formula::Sextic => {
                "(2n^6-12n^5+86n^4-168n^3+731n^2-54n+1917+(-1)^n(45n^2-234n+387))/2304"
            }
        }
    }

    /// Exact value at `n`; not necessarily an integer outside the range
    /// where the formula is meant to hold.
    pub fn eval(self, n: usize) -> BigRational {
        let ni = n as i64;
        let r = |a: i64| BigRational::from_integer(BigInt::from(a));
        let q = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        let z = |b: BigInt| BigRational::from_integer(b);
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        let poly = |cs: &[i64]| cs.iter().rev().fold(0i64, |acc, &c| acc * ni + c);
        let two_pow = |e: i64| {
            if e >= 0 {
                z(BigInt::one() << e as usize)
            } else {
                BigRational::new(BigInt::one(), BigInt::one() << (-e) as usize)
            }
        };
        let f = |k: i64| z(fibonacci(k));
        match self {
            Formula::Quadratic => q(poly(&[7, 0, 2]) + sign, 8),
            Formula::Fibonacci => f(ni + 1),
            Formula::PowerOfTwo => two_pow(ni - 1),
            Formula::Quartic => q(poly(&[81, -2, 28, -4, 2]) + sign * (15 - 6 * ni), 96),
            Formula::FibonacciLinear => {
                q(ni, 5) * f(ni + 2) + q(ni, 5) * f(ni) - q(3, 5) * f(ni) + r(1)
            }
            Formula::Motzkin => z(motzkin_numbers(n).swap_remove(n)),
            Formula::Pell => (z(pell(ni)) + z(pell(ni - 1)) + r(1)) / r(2),
            Formula::TwoPowerMinusFibonacci => {
                r(3) * two_pow(ni - 1)
                    - (r(2) * f(ni + 3) + r(ni) * f(ni + 2) + f(ni + 1) + r(ni) * f(ni)) / r(5)
            }
            Formula::TwoPowerThirds => {
                r(3 * ni + 7) * two_pow(ni - 2) / r(9) + q(1, 2) + q(sign, 18)
            }
            Formula::FibonacciQuadratic => {
                r(poly(&[-100, -3, 5])) * f(ni + 1) / r(50)
                    + r(12 * ni - 38) * f(ni) / r(25)
                    + q(poly(&[23, 8, 2]) + sign, 8)
            }
            Formula::FibonacciEvenOdd => (f(ni + 1) + f(2 * ni) - f(2 * ni - 2)) / r(2),
            Formula::Sextic => {
                let n = BigInt::from(ni);
                let p = |cs: &[i64]| cs.iter().rev().fold(BigInt::zero(), |acc, &c| acc * &n + c);
                BigRational::new(
                    p(&[1917, -54, 731, -168, 86, -12, 2]) + p(&[387, -234, 45]) * sign,
                    BigInt::from(2304),
                )
            }
        }
    }
}

/// `F_k` with `F_0 = 0`, `F_1 = 1`, extended to negative `k` by
/// `F_{-k} = (-1)^{k+1} F_k`.
pub fn fibonacci(k: i64) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..k.unsigned_abs() {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    if k < 0 && k % 2 == 0 {
        -a
    } else {
        a
    }
}

/// Pell numbers `P_0 = 0`, `P_1 = 1`, `P_k = 2P_{k-1} + P_{k-2}`, extended
/// backwards by the same recurrence.
pub fn pell(k: i64) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    if k >= 0 {
        for _ in 0..k {
            let c = &b * 2 + &a;
            a = std::mem::replace(&mut b, c);
        }
        a
    } else {
        // P_{k-1} = P_{k+1} - 2 P_k
        for _ in 0..-k {
            let c = &b - &a * 2;
            b = std::mem::replace(&mut a, c);
        }
        a
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expected {
    Formula {
        formula: Formula,
        from: usize,
    },
    /// A generating function kept as printed, alongside its reduced form.
    Gf {
        num: IntPoly,
        den: IntPoly,
        reduced: RatFunc,
    },
}

impl Expected {
    /// Printed values for `n = 0..=n_max`, `None` below the formula's range.
    pub fn values(&self, n_max: usize) -> Result<Vec<Option<BigRational>>> {
        match self {
            Expected::Formula { formula, from } => Ok((0..=n_max)
                .map(|n| (n >= *from).then(|| formula.eval(n)))
                .collect()),
            Expected::Gf { reduced, .. } => Ok(reduced
                .series(n_max)?
                .coeffs()
                .iter()
                .cloned()
                .map(Some)
                .collect()),
        }
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Formula { formula, from: 0 } => f.write_str(formula.text()),
            Expected::Formula { formula, from } => write!(f, "{} (n >= {from})", formula.text()),
            Expected::Gf { num, den, .. } => write!(f, "gf ({num}) / ({den})"),
        }
    }
}

/// Patterns sharing one printed enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    pub table: u8,
    pub patterns: Vec<Permutation>,
    pub expected: Expected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tables {
    pub version: u32,
    pub groups: Vec<Group>,
}

impl Tables {
    pub fn rows(&self) -> usize {
        self.groups.iter().map(|g| g.patterns.len()).sum()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTables {
    version: u32,
    group: Vec<RawGroup>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    table: u8,
    patterns: Vec<String>,
    formula: Option<Formula>,
    from: Option<usize>,
    gf: Option<RawGf>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGf {
    num: Vec<i64>,
    den: Vec<i64>,
}

/// Parses table data in the format of the bundled file.
pub fn parse(text: &str) -> Result<Tables> {
    let raw: RawTables = toml::from_str(text).map_err(|e| Error::Data(e.to_string()))?;
    let mut groups = Vec::with_capacity(raw.group.len());
    for g in raw.group {
        let patterns = g
            .patterns
            .iter()
            .map(|s| s.parse::<Permutation>())
            .collect::<Result<Vec<_>>>()?;
        let expected = match (g.formula, g.gf) {
            (Some(formula), None) => Expected::Formula {
                formula,
                from: g.from.unwrap_or(0),
            },
            (None, Some(gf)) if g.from.is_none() => {
                let num = IntPoly::from_i64s(&gf.num);
                let den = IntPoly::from_i64s(&gf.den);
                let reduced = RatFunc::new(num.clone(), den.clone())?;
                Expected::Gf { num, den, reduced }
            }
            _ => {
                return Err(Error::Data(format!(
                    "group {:?} needs exactly one of formula or gf",
                    g.patterns
                )))
            }
        };
        groups.push(Group {
            table: g.table,
            patterns,
            expected,
        });
    }
    Ok(Tables {
        version: raw.version,
        groups,
    })
}

/// The bundled tables.
pub fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| parse(DATA).expect("bundled table data parses"))
}

/// Whether `v` is a nonnegative integer.
pub fn is_count(v: &BigRational) -> bool {
    v.is_integer() && !v.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(f: Formula, n: usize) -> BigRational {
        f.eval(n)
    }

    fn int(a: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(a))
    }

    #[test]
    fn sequences() {
        let fib: Vec<i64> = (-4..=6)
            .map(|k| i64::try_from(fibonacci(k)).unwrap())
            .collect();
        assert_eq!(fib, [-3, 2, -1, 1, 0, 1, 1, 2, 3, 5, 8]);
        let p: Vec<i64> = (-2..=5).map(|k| i64::try_from(pell(k)).unwrap()).collect();
        assert_eq!(p, [-2, 1, 0, 1, 2, 5, 12, 29]);
    }

    #[test]
    fn formula_values() {
        assert_eq!(at(Formula::Quadratic, 4), int(5));
        assert_eq!(at(Formula::PowerOfTwo, 6), int(32));
        assert_eq!(
            at(Formula::PowerOfTwo, 0),
            BigRational::new(1.into(), 2.into())
        );
        assert_eq!(at(Formula::Pell, 4), int(9));
        assert_eq!(at(Formula::Motzkin, 5), int(21));
        assert_eq!(at(Formula::Fibonacci, 5), int(8));
    }

    #[test]
    fn bundled_data() {
        let t = tables();
        assert_eq!(t.version, 1);
        assert_eq!(t.groups.len(), 20);
        let mut all: Vec<String> = t
            .groups
            .iter()
            .flat_map(|g| g.patterns.iter().map(|p| p.to_string()))
            .collect();
        let n = all.len();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), n, "a pattern is listed twice");
        assert!(t.groups.iter().all(|g| (1..=3).contains(&g.table)));
    }

    #[test]
    fn malformed_data() {
        assert!(matches!(
            parse("version = 1\ngroup = []\nextra = 2"),
            Err(Error::Data(_))
        ));
        let both = "version = 1\n[[group]]\ntable = 1\npatterns = [\"12\"]\nformula = \"motzkin\"\ngf = { num = [1], den = [1] }\n";
        assert!(matches!(parse(both), Err(Error::Data(_))));
        let bad = "version = 1\n[[group]]\ntable = 1\npatterns = [\"1x\"]\nformula = \"motzkin\"\n";
        assert!(matches!(parse(bad), Err(Error::Parse { .. })));
    }
}
