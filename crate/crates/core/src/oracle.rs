//! Brute-force ground truth.
//!
//! Involutions avoiding 3412 are built from their recursive structure
//! (`1 π^{+1}` or `π_1 * π_2`) rather than by filtering all of `S_n`, so the
//! default limit of 14 (113,634 objects) stays cheap.

use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::perm::{PatternSet, Permutation};
use crate::poly::{Family, IntPoly};

pub const DEFAULT_ORACLE_LIMIT: usize = 14;

/// Lengths whose full lists are kept in memory.
const CACHE_MAX: usize = 10;

/// Statistics with a distribution over `I_n(3412)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    Inv,
    Lrmax,
    Rlmin,
    Fix,
    /// Number of nonempty decreasing subsequences.
    M,
}

impl Statistic {
    pub const ALL: [Statistic; 5] = [
        Statistic::Inv,
        Statistic::Lrmax,
        Statistic::Rlmin,
        Statistic::Fix,
        Statistic::M,
    ];

    pub fn of(self, p: &Permutation) -> u64 {
        match self {
            Statistic::M => p.decreasing_subsequences(),
            _ => {
                let s = p.classic_stats();
                match self {
                    Statistic::Inv => s.inv,
                    Statistic::Lrmax => s.lrmax,
                    Statistic::Rlmin => s.rlmin,
                    Statistic::Fix => s.fix,
                    Statistic::M => unreachable!(),
                }
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Inv => "inv",
            Statistic::Lrmax => "lrmax",
            Statistic::Rlmin => "rlmin",
            Statistic::Fix => "fix",
            Statistic::M => "m",
        }
    }
}

impl FromStr for Statistic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::Parse {
                what: "statistic",
                token: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    limit: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            limit: DEFAULT_ORACLE_LIMIT,
        }
    }
}

impl Oracle {
    pub fn new(limit: usize) -> Self {
        Oracle { limit }
    }

    /// Default limit, overridden by `PATTERNLAB_LIMIT` when it parses.
    pub fn from_env() -> Self {
        std::env::var("PATTERNLAB_LIMIT")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Oracle::new)
            .unwrap_or_default()
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.limit {
            Err(Error::LimitExceeded {
                requested: n,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    /// Every element of `I_n(3412)` exactly once.
    pub fn enumerate_involutions(
        &self,
        n: usize,
    ) -> Result<Box<dyn Iterator<Item = Permutation> + Send>> {
        self.check(n)?;
        Ok(stream(n))
    }

    /// `|I_n(3412, T)|`.
    pub fn count_avoiders(&self, t: &PatternSet, n: usize) -> Result<u64> {
        Ok(self
            .enumerate_involutions(n)?
            .filter(|p| p.avoids_all(t))
            .count() as u64)
    }

    /// `|I_n(3412, T)|` for `n = 0..=n_max`.
    pub fn avoider_counts(&self, t: &PatternSet, n_max: usize) -> Result<Vec<u64>> {
        (0..=n_max).map(|n| self.count_avoiders(t, n)).collect()
    }

    /// Involutions in `I_n(3412)` with exactly `r` occurrences of `pattern`.
    pub fn count_with_occurrences(&self, pattern: &Permutation, r: u64, n: usize) -> Result<u64> {
        Ok(self
            .enumerate_involutions(n)?
            .filter(|p| p.occurrence_count(pattern) == r)
            .count() as u64)
    }

    /// `Σ_{π ∈ I_n(3412)} q^{stat(π)}`.
    pub fn statistic_distribution(&self, stat: Statistic, n: usize) -> Result<IntPoly> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for p in self.enumerate_involutions(n)? {
            let s = stat.of(&p) as usize;
            if coeffs.len() <= s {
                coeffs.resize(s + 1, BigInt::from(0));
            }
            coeffs[s] += 1;
        }
        Ok(IntPoly::new(coeffs))
    }
}

/// Paths of length `len` from height `r` to height `s` inside `[0, k]` with
/// the family's level-step restriction, by dynamic programming over height.
pub fn brute_bounded_paths(family: Family, r: usize, s: usize, k: usize, len: usize) -> BigInt {
    if r > k || s > k {
        return BigInt::from(0);
    }
    let mut ways = vec![BigInt::from(0); k + 1];
    ways[r] = BigInt::from(1);
    for _ in 0..len {
        let mut next = vec![BigInt::from(0); k + 1];
        for (h, w) in ways.iter().enumerate() {
            if *w == BigInt::from(0) {
                continue;
            }
            if family.level_allowed(h, k) {
                next[h] += w;
            }
            if h < k {
                next[h + 1] += w;
            }
            if h > 0 {
                next[h - 1] += w;
            }
        }
        ways = next;
    }
    ways.swap_remove(s)
}

fn cache() -> &'static [Vec<Permutation>] {
    static CACHE: OnceLock<Vec<Vec<Permutation>>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut lists: Vec<Vec<Permutation>> = Vec::with_capacity(CACHE_MAX + 1);
        lists.push(vec![Permutation::empty()]);
        for n in 1..=CACHE_MAX {
            let mut cur: Vec<Permutation> =
                lists[n - 1].iter().map(Permutation::prepend_one).collect();
            for j in 2..=n {
                for p1 in &lists[j - 2] {
                    for p2 in &lists[n - j] {
                        cur.push(Permutation::star(p1, p2));
                    }
                }
            }
            lists.push(cur);
        }
        lists
    })
}

fn stream(n: usize) -> Box<dyn Iterator<Item = Permutation> + Send> {
    if n <= CACHE_MAX {
        return Box::new(cache()[n].iter().cloned());
    }
    let leveled = stream(n - 1).map(|p| Permutation::prepend_one(&p));
    let starred = (2..=n).flat_map(move |j| {
        stream(j - 2).flat_map(move |p1| stream(n - j).map(move |p2| Permutation::star(&p1, &p2)))
    });
    Box::new(leveled.chain(starred))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motzkin::motzkin_numbers;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_matches_motzkin() {
        let o = Oracle::default();
        let m = motzkin_numbers(12);
        for (n, m_n) in m.iter().enumerate() {
            let all: Vec<Permutation> = o.enumerate_involutions(n).unwrap().collect();
            assert_eq!(BigInt::from(all.len()), *m_n, "n = {n}");
            let threefour = perm("3412");
            assert!(all
                .iter()
                .all(|p| p.is_involution() && p.avoids(&threefour)));
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), all.len());
        }
    }

    #[test]
    fn small_enumerations() {
        let o = Oracle::default();
        let mut i3: Vec<String> = o
            .enumerate_involutions(3)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        i3.sort();
        assert_eq!(i3, ["123", "132", "213", "321"]);
        assert_eq!(
            o.enumerate_involutions(0).unwrap().collect::<Vec<_>>(),
            vec![Permutation::empty()]
        );
        assert!(matches!(
            o.enumerate_involutions(15),
            Err(Error::LimitExceeded {
                requested: 15,
                limit: 14
            })
        ));
    }

    #[test]
    fn avoider_examples() {
        let o = Oracle::default();
        let t = |s: &str| s.parse::<PatternSet>().unwrap();
        assert_eq!(o.count_avoiders(&t("321"), 5).unwrap(), 8);
        assert_eq!(o.count_avoiders(&t("4231,4321"), 4).unwrap(), 7);
        assert_eq!(o.count_avoiders(&t(""), 6).unwrap(), 51);
        assert_eq!(o.count_avoiders(&t("()"), 0).unwrap(), 0);
    }

    #[test]
    fn occurrence_examples() {
        let o = Oracle::default();
        let p = perm("321");
        assert_eq!(o.count_with_occurrences(&p, 1, 4).unwrap(), 2);
        assert_eq!(o.count_with_occurrences(&p, 2, 4).unwrap(), 1);
        assert_eq!(o.count_with_occurrences(&p, 1, 3).unwrap(), 1);
    }

    #[test]
    fn distributions() {
        let o = Oracle::default();
        let d = |s, n| o.statistic_distribution(s, n).unwrap();
        // 123, 132, 213, 321 have 0, 1, 1, 3 inversions
        assert_eq!(d(Statistic::Inv, 3), IntPoly::from_i64s(&[1, 2, 0, 1]));
        assert_eq!(d(Statistic::Fix, 2), IntPoly::from_i64s(&[1, 0, 1]));
        assert_eq!(d(Statistic::Lrmax, 2), IntPoly::from_i64s(&[0, 1, 1]));
        assert_eq!("rlmin".parse::<Statistic>().unwrap(), Statistic::Rlmin);
        assert!("foo".parse::<Statistic>().is_err());
    }

    #[test]
    fn bounded_path_examples() {
        assert_eq!(brute_bounded_paths(Family::M, 0, 0, 0, 5), BigInt::from(1));
        assert_eq!(brute_bounded_paths(Family::M, 0, 0, 1, 4), BigInt::from(8));
        assert_eq!(brute_bounded_paths(Family::O, 0, 0, 1, 2), BigInt::from(1));
    }
}
