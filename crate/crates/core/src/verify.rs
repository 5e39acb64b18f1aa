//! Cross-checks of the tabulated enumerations and the layered symmetry
//! sweep.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::Result;
use crate::genfun::Engine;
use crate::oracle::Oracle;
use crate::perm::{PatternSet, Permutation};
use crate::poly::{IntPoly, RatFunc};
use crate::tables::{tables, Expected, Tables};

/// Order used when fitting a rational function to an engine series.
pub const FIT_ORDER: usize = 40;

#[derive(Debug, Clone)]
pub struct RowCheck {
    pub table: u8,
    pub group: usize,
    pub pattern: Permutation,
    pub oracle: Vec<BigInt>,
    pub engine: Vec<BigInt>,
    pub printed: Vec<Option<BigRational>>,
}

impl RowCheck {
    pub fn engine_agrees(&self) -> bool {
        self.oracle == self.engine
    }

    /// `(n, printed, actual)` wherever the printed value is defined and
    /// differs from the oracle.
    pub fn printed_mismatches(&self) -> Vec<(usize, BigRational, BigInt)> {
        self.printed
            .iter()
            .zip(&self.oracle)
            .enumerate()
            .filter_map(|(n, (p, o))| match p {
                Some(p) if *p != BigRational::from_integer(o.clone()) => {
                    Some((n, p.clone(), o.clone()))
                }
                _ => None,
            })
            .collect()
    }
}

/// A printed enumeration that disagrees with the computed one.
#[derive(Debug, Clone)]
pub struct Erratum {
    pub table: u8,
    pub patterns: Vec<Permutation>,
    pub printed: Expected,
    pub mismatches: Vec<(usize, BigRational, BigInt)>,
    /// Rational function fitted to the engine series, if one of small
    /// degree reproduces it through [`FIT_ORDER`].
    pub corrected: Option<RatFunc>,
}

#[derive(Debug, Clone)]
pub struct TablesReport {
    pub n_max: usize,
    pub rows: Vec<RowCheck>,
    pub errata: Vec<Erratum>,
}

impl TablesReport {
    /// Engine and oracle agree on every row; printed values do not matter.
    pub fn success(&self) -> bool {
        self.rows.iter().all(RowCheck::engine_agrees)
    }

    pub fn to_json(&self) -> Value {
        let ints = |v: &[BigInt]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "table": r.table,
                    "pattern": r.pattern.to_string(),
                    "engine_matches_oracle": r.engine_agrees(),
                    "printed_matches": r.printed_mismatches().is_empty(),
                    "oracle": ints(&r.oracle),
                })
            })
            .collect();
        let errata: Vec<Value> = self
            .errata
            .iter()
            .map(|e| {
                json!({
                    "table": e.table,
                    "patterns": e.patterns.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "printed": e.printed.to_string(),
                    "mismatches": e.mismatches.iter().map(|(n, p, a)| json!({
                        "n": n, "printed": p.to_string(), "actual": a.to_string(),
                    })).collect::<Vec<_>>(),
                    "corrected": e.corrected.as_ref().map(|f| f.to_json()),
                })
            })
            .collect();
        json!({
            "n_max": self.n_max,
            "success": self.success(),
            "rows": rows,
            "errata": errata,
        })
    }
}

impl fmt::Display for TablesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "table  pattern  engine=oracle  printed")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<6} {:<8} {:<14} {}",
                r.table,
                r.pattern.to_string(),
                if r.engine_agrees() { "PASS" } else { "FAIL" },
                if r.printed_mismatches().is_empty() {
                    "ok"
                } else {
                    "erratum"
                },
            )?;
        }
        let pass = self.rows.iter().filter(|r| r.engine_agrees()).count();
        writeln!(
            f,
            "{pass}/{} rows: engine = oracle for n <= {}",
            self.rows.len(),
            self.n_max
        )?;
        if self.errata.is_empty() {
            return writeln!(f, "errata: none");
        }
        writeln!(f, "errata:")?;
        for e in &self.errata {
            let names: Vec<String> = e.patterns.iter().map(|p| p.to_string()).collect();
            writeln!(
                f,
                "  table {} [{}]: printed {}",
                e.table,
                names.join(" "),
                e.printed
            )?;
            for (n, p, a) in e.mismatches.iter().take(4) {
                writeln!(f, "    n = {n}: printed {p}, actual {a}")?;
            }
            if e.mismatches.len() > 4 {
                writeln!(f, "    ... {} mismatches in all", e.mismatches.len())?;
            }
            if let Some(c) = &e.corrected {
                writeln!(f, "    engine series fits {c}")?;
            }
        }
        Ok(())
    }
}

/// Checks the bundled tables for `n = 0..=n_max`.
pub fn verify_tables(n_max: usize, oracle: &Oracle, engine: &mut Engine) -> Result<TablesReport> {
    verify_with(tables(), n_max, oracle, engine)
}

pub fn verify_with(
    data: &Tables,
    n_max: usize,
    oracle: &Oracle,
    engine: &mut Engine,
) -> Result<TablesReport> {
    let mut rows = Vec::new();
    let mut errata = Vec::new();
    for (gi, g) in data.groups.iter().enumerate() {
        let printed = g.expected.values(n_max)?;
        let mut mismatched: Vec<(usize, BigRational, BigInt)> = Vec::new();
        let mut first_bad: Option<PatternSet> = None;
        for p in &g.patterns {
            let t = PatternSet::single(p.clone());
            let oracle_counts = oracle
                .avoider_counts(&t, n_max)?
                .into_iter()
                .map(BigInt::from)
                .collect();
            let row = RowCheck {
                table: g.table,
                group: gi,
                pattern: p.clone(),
                oracle: oracle_counts,
                engine: engine.coefficients(&t, n_max)?,
                printed: printed.clone(),
            };
            let bad = row.printed_mismatches();
            if !bad.is_empty() && first_bad.is_none() {
                mismatched = bad;
                first_bad = Some(t);
            }
            rows.push(row);
        }
        if let Some(t) = first_bad {
            let order = FIT_ORDER.min(engine.limit());
            let series = engine.coefficients(&t, order)?;
            errata.push(Erratum {
                table: g.table,
                patterns: g.patterns.clone(),
                printed: g.expected.clone(),
                mismatches: mismatched,
                corrected: fit_rational(&series),
            });
        }
    }
    Ok(TablesReport {
        n_max,
        rows,
        errata,
    })
}

/// Shortest linear recurrence of `s` over the rationals, returned as the
/// connection polynomial `c` with `c[0] = 1`.
fn berlekamp_massey(s: &[BigRational]) -> Vec<BigRational> {
    let mut c = vec![BigRational::one()];
    let mut b = vec![BigRational::one()];
    let mut len = 0usize;
    let mut shift = 1usize;
    let mut last = BigRational::one();
    for n in 0..s.len() {
        let mut d = s[n].clone();
        for i in 1..=len.min(c.len() - 1) {
            d += &c[i] * &s[n - i];
        }
        if d.is_zero() {
            shift += 1;
            continue;
        }
        let coef = &d / &last;
        let old = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, BigRational::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + shift] -= &coef * bi;
        }
        if 2 * len <= n {
            len = n + 1 - len;
            b = old;
            last = d;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    c.truncate(len + 1);
    c.resize(len + 1, BigRational::zero());
    c
}

/// A rational function whose expansion is `s`, provided the recurrence
/// found is short enough to have been confirmed by at least eight extra
/// terms.
pub fn fit_rational(s: &[BigInt]) -> Option<RatFunc> {
    let q: Vec<BigRational> = s.iter().cloned().map(BigRational::from_integer).collect();
    let c = berlekamp_massey(&q);
    let len = c.len() - 1;
    if 2 * len + 8 > s.len() {
        return None;
    }
    let scale = c.iter().fold(BigInt::one(), |acc, x| {
        num_integer::lcm(acc, x.denom().clone())
    });
    let den: Vec<BigInt> = c.iter().map(|x| (x * &scale).to_integer()).collect();
    let num: Vec<BigInt> = (0..len)
        .map(|n| (0..=n).map(|i| &den[i] * &s[n - i]).sum())
        .collect();
    let f = RatFunc::new(IntPoly::new(num), IntPoly::new(den)).ok()?;
    let check = f.series(s.len() - 1).ok()?.integer_coeffs()?;
    (check == s).then_some(f)
}

/// Result of comparing `F_{[l_1,…,l_m]}` across reorderings.
#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub m: usize,
    pub l_max: usize,
    pub order: usize,
    pub compositions: usize,
    pub classes: usize,
    /// Pairs of reorderings with different series, with the first degree
    /// where they differ.
    pub violations: Vec<(Vec<usize>, Vec<usize>, usize)>,
}

impl ConjectureReport {
    pub fn symmetric(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "l_max": self.l_max,
            "order": self.order,
            "compositions": self.compositions,
            "classes": self.classes,
            "symmetric": self.symmetric(),
            "violations": self.violations.iter().map(|(a, b, n)| json!({
                "layers": a, "reordered": b, "first_difference": n,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "m = {}, parts <= {}, order {}: {} compositions in {} classes",
            self.m, self.l_max, self.order, self.compositions, self.classes
        )?;
        if self.symmetric() {
            return writeln!(f, "all symmetric");
        }
        for (a, b, n) in &self.violations {
            writeln!(f, "counterexample: {a:?} vs {b:?} differ at x^{n}")?;
        }
        Ok(())
    }
}

/// Compares the layered series for every composition of `m` parts in
/// `1..=l_max` against the one for its sorted reordering.
pub fn conjecture_sweep(
    m: usize,
    l_max: usize,
    order: usize,
    engine: &mut Engine,
) -> Result<ConjectureReport> {
    let mut classes: BTreeMap<Vec<usize>, Vec<BigInt>> = BTreeMap::new();
    let mut violations = Vec::new();
    let mut compositions = 0;
    let mut parts = vec![1usize; m];
    if m == 0 || l_max == 0 {
        return Ok(ConjectureReport {
            m,
            l_max,
            order,
            compositions,
            classes: 0,
            violations,
        });
    }
    loop {
        compositions += 1;
        let t = PatternSet::single(Permutation::layered(&parts)?);
        let series = engine.coefficients(&t, order)?;
        let mut key = parts.clone();
        key.sort_unstable();
        match classes.get(&key) {
            Some(reference) if *reference != series => {
                let n = reference
                    .iter()
                    .zip(&series)
                    .position(|(a, b)| a != b)
                    .unwrap_or(0);
                violations.push((key.clone(), parts.clone(), n));
            }
            Some(_) => {}
            None => {
                classes.insert(key, series);
            }
        }
        let mut j = 0;
        while j < m && parts[j] == l_max {
            parts[j] = 1;
            j += 1;
        }
        if j == m {
            break;
        }
        parts[j] += 1;
    }
    Ok(ConjectureReport {
        m,
        l_max,
        order,
        compositions,
        classes: classes.len(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn fit_recovers_fibonacci() {
        let mut s = vec![1i64, 1];
        while s.len() < 30 {
            s.push(s[s.len() - 1] + s[s.len() - 2]);
        }
        let f = fit_rational(&ints(&s)).unwrap();
        assert_eq!(
            f,
            RatFunc::new(IntPoly::one(), IntPoly::from_i64s(&[1, -1, -1])).unwrap()
        );
        let f = fit_rational(&ints(&[3; 20])).unwrap();
        assert_eq!(
            f,
            RatFunc::new(IntPoly::from_i64s(&[3]), IntPoly::from_i64s(&[1, -1])).unwrap()
        );
        assert!(fit_rational(&ints(&[1, 2, 3, 5])).is_none());
    }

    #[test]
    fn fit_handles_polynomial_part() {
        // 1 + 2x + 2x^2 + ... = (1 + x)/(1 - x)
        let mut s = vec![2i64; 20];
        s[0] = 1;
        let f = fit_rational(&ints(&s)).unwrap();
        assert_eq!(
            f,
            RatFunc::new(IntPoly::from_i64s(&[1, 1]), IntPoly::from_i64s(&[1, -1])).unwrap()
        );
    }

    #[test]
    fn small_sweep() {
        let mut e = Engine::default();
        let r = conjecture_sweep(2, 3, 8, &mut e).unwrap();
        assert_eq!(r.compositions, 9);
        assert_eq!(r.classes, 6);
        assert!(r.symmetric());
        let one = conjecture_sweep(1, 4, 6, &mut e).unwrap();
        assert!(one.symmetric());
        assert_eq!(one.classes, 4);
    }
}
