//! Permutations in one-line notation, classical pattern containment, the
//! decreasing-subsequence statistics, and the structural maps used by the
//! generating-function engine.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}` in one-line notation. The empty permutation
/// is a valid value.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Permutation(Vec<u16>);

impl Permutation {
    /// Validates that `values` is a permutation of `1..=values.len()`.
    pub fn new(values: Vec<u16>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::Parse {
                    what: "permutation",
                    token: format!("{values:?}"),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub(crate) fn from_vec_unchecked(values: Vec<u16>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    /// Rank-normalizes an arbitrary sequence of distinct integers.
    pub fn standardize(seq: &[u16]) -> Self {
        let mut idx: Vec<usize> = (0..seq.len()).collect();
        idx.sort_by_key(|&i| seq[i]);
        let mut out = vec![0u16; seq.len()];
        for (rank, &i) in idx.iter().enumerate() {
            out[i] = rank as u16 + 1;
        }
        Permutation(out)
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u16).collect())
    }

    /// `n n-1 … 1`.
    pub fn decreasing(n: usize) -> Self {
        Permutation((1..=n as u16).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u16] {
        &self.0
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn is_involution(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &v)| self.0[v as usize - 1] as usize == i + 1)
    }

    pub(crate) fn shifted(&self, by: u16) -> impl Iterator<Item = u16> + '_ {
        self.0.iter().map(move |&v| v + by)
    }

    /// Number of subsequences of `self` order-isomorphic to `pattern`. The
    /// empty pattern occurs exactly once.
    pub fn occurrence_count(&self, pattern: &Permutation) -> u64 {
        if pattern.len() > self.len() {
            return 0;
        }
        if pattern.is_empty() {
            return 1;
        }
        let matcher = Matcher::new(pattern);
        let mut chosen = vec![0usize; pattern.len()];
        matcher.count(&self.0, 0, 0, &mut chosen)
    }

    pub fn contains(&self, pattern: &Permutation) -> bool {
        if pattern.len() > self.len() {
            return false;
        }
        if pattern.is_empty() {
            return true;
        }
        let matcher = Matcher::new(pattern);
        let mut chosen = vec![0usize; pattern.len()];
        matcher.exists(&self.0, 0, 0, &mut chosen)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains(pattern)
    }

    pub fn avoids_all(&self, patterns: &PatternSet) -> bool {
        patterns.iter().all(|p| self.avoids(p))
    }

    /// Number of strictly decreasing subsequences of length `k`; zero for
    /// `k <= 0`.
    pub fn tau_k(&self, k: i64) -> u64 {
        if k <= 0 {
            return 0;
        }
        let k = k as usize;
        if k > self.len() {
            return 0;
        }
        // ending[i] = decreasing subsequences of the current length ending at i
        let n = self.len();
        let mut ending = vec![1u64; n];
        for _ in 1..k {
            ending = (0..n)
                .map(|i| {
                    (0..i)
                        .filter(|&j| self.0[j] > self.0[i])
                        .map(|j| ending[j])
                        .sum()
                })
                .collect();
        }
        ending.iter().sum()
    }

    /// All `τ_k` for `k = 1..=max_k`.
    pub fn tau_vector(&self, max_k: usize) -> Vec<u64> {
        (1..=max_k as i64).map(|k| self.tau_k(k)).collect()
    }

    /// Number of nonempty decreasing subsequences.
    pub fn decreasing_subsequences(&self) -> u64 {
        (1..=self.len() as i64).map(|k| self.tau_k(k)).sum()
    }

    pub fn classic_stats(&self) -> ClassicStats {
        let n = self.len();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.0[i] > self.0[j] {
                    inv += 1;
                }
            }
        }
        let mut lrmax = 0;
        let mut best = 0;
        for &v in &self.0 {
            if v > best {
                lrmax += 1;
                best = v;
            }
        }
        let mut rlmin = 0;
        let mut low = u16::MAX;
        for &v in self.0.iter().rev() {
            if v < low {
                rlmin += 1;
                low = v;
            }
        }
        let fix = self
            .0
            .iter()
            .enumerate()
            .filter(|(i, &v)| v as usize == i + 1)
            .count() as u64;
        ClassicStats {
            inv,
            lrmax,
            rlmin,
            fix,
        }
    }

    /// `|p1|+2, p1^{+1}, 1, p2^{+|p1|+2}`.
    pub fn star(p1: &Permutation, p2: &Permutation) -> Permutation {
        let top = p1.len() as u16 + 2;
        let mut out = Vec::with_capacity(p1.len() + p2.len() + 2);
        out.push(top);
        out.extend(p1.shifted(1));
        out.push(1);
        out.extend(p2.shifted(top));
        Permutation(out)
    }

    /// `1, p^{+1}`.
    pub fn prepend_one(p: &Permutation) -> Permutation {
        let mut out = Vec::with_capacity(p.len() + 1);
        out.push(1);
        out.extend(p.shifted(1));
        Permutation(out)
    }

    /// `|p|+2, p^{+1}, 1`: a new maximum in front and a new 1 at the end.
    pub fn wrap_k1(&self) -> Permutation {
        Permutation::star(self, &Permutation::empty())
    }

    /// Splits into complete blocks `α_1 | … | α_k`, each rank-normalized.
    pub fn complete_decompose(&self) -> Vec<Permutation> {
        let mut blocks = Vec::new();
        let mut start = 0usize;
        let mut max = 0u16;
        for (i, &v) in self.0.iter().enumerate() {
            max = max.max(v);
            if max as usize == i + 1 {
                let offset = start as u16;
                blocks.push(Permutation(
                    self.0[start..=i].iter().map(|&x| x - offset).collect(),
                ));
                start = i + 1;
            }
        }
        blocks
    }

    /// Inverse of [`Permutation::complete_decompose`]: `α_1 | α_2 | …`.
    pub fn concat_blocks<'a, I>(blocks: I) -> Permutation
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut out = Vec::new();
        for b in blocks {
            let offset = out.len() as u16;
            out.extend(b.shifted(offset));
        }
        Permutation(out)
    }

    /// True when no proper nonempty prefix is `{1, …, k}`.
    pub fn is_complete(&self) -> bool {
        !self.is_empty() && self.complete_decompose().len() == 1
    }

    /// Strips a leading maximum and/or a trailing 1, in the five cases:
    /// `∅ ↦ ∅`, `1 ↦ ∅`, `n σ^{+1} 1 ↦ σ`, `n σ ↦ σ` (σ not ending in 1),
    /// `σ^{+1} 1 ↦ σ` (not beginning with n), and identity otherwise.
    pub fn overline(&self) -> Permutation {
        let n = self.len();
        if n <= 1 {
            return Permutation::empty();
        }
        let starts_max = self.0[0] as usize == n;
        let ends_one = self.0[n - 1] == 1;
        match (starts_max, ends_one) {
            (true, true) => Permutation(self.0[1..n - 1].iter().map(|&v| v - 1).collect()),
            (true, false) => Permutation(self.0[1..].to_vec()),
            (false, true) => Permutation(self.0[..n - 1].iter().map(|&v| v - 1).collect()),
            (false, false) => self.clone(),
        }
    }

    /// Drops a leading fixed block `1`, so that `1 π^{+1}` contains `p` iff
    /// `π` contains `beta(p)`.
    pub fn beta(&self) -> Permutation {
        match self.0.first() {
            Some(1) => Permutation(self.0[1..].iter().map(|&v| v - 1).collect()),
            _ => self.clone(),
        }
    }

    pub fn reverse_complement(&self) -> Permutation {
        let n = self.len() as u16;
        Permutation(self.0.iter().rev().map(|&v| n + 1 - v).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0u16; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            out[v as usize - 1] = i as u16 + 1;
        }
        Permutation(out)
    }

    /// The layered permutation `[l_1, …, l_m]`: decreasing runs of the given
    /// sizes, each run above the previous one.
    pub fn layered(layers: &[usize]) -> Result<Permutation> {
        if layers.is_empty() || layers.contains(&0) {
            return Err(Error::Domain(format!(
                "layer sizes must be positive and nonempty, got {layers:?}"
            )));
        }
        let mut out = Vec::with_capacity(layers.iter().sum());
        let mut offset = 0u16;
        for &l in layers {
            let l = l as u16;
            out.extend((offset + 1..=offset + l).rev());
            offset += l;
        }
        Ok(Permutation(out))
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("()");
        }
        if self.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(" "))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"3 4 1 2"`, the compact `"3412"` (length ≤ 9), and `"()"` or
    /// `"∅"` for the empty permutation.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse {
            what: "permutation",
            token: s.to_string(),
        };
        if s == "()" || s == "∅" {
            return Ok(Permutation::empty());
        }
        if s.is_empty() {
            return Err(bad());
        }
        let values: Vec<u16> = if s.contains(char::is_whitespace) {
            s.split_whitespace()
                .map(|t| t.parse::<u16>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            if s.len() > 9 || !s.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            s.bytes().map(|b| (b - b'0') as u16).collect()
        };
        Permutation::new(values).map_err(|_| bad())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassicStats {
    pub inv: u64,
    pub lrmax: u64,
    pub rlmin: u64,
    pub fix: u64,
}

/// Backtracking matcher. For each pattern position `j` it keeps the earlier
/// positions holding the nearest smaller and nearest larger pattern values,
/// which bounds the admissible host value window.
struct Matcher<'a> {
    pattern: &'a [u16],
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl<'a> Matcher<'a> {
    fn new(pattern: &'a Permutation) -> Self {
        let p = &pattern.0;
        let mut below = Vec::with_capacity(p.len());
        let mut above = Vec::with_capacity(p.len());
        for j in 0..p.len() {
            let lo = (0..j).filter(|&i| p[i] < p[j]).max_by_key(|&i| p[i]);
            let hi = (0..j).filter(|&i| p[i] > p[j]).min_by_key(|&i| p[i]);
            below.push(lo);
            above.push(hi);
        }
        Matcher {
            pattern: p,
            below,
            above,
        }
    }

    fn fits(&self, host: &[u16], j: usize, pos: usize, chosen: &[usize]) -> bool {
        let v = host[pos];
        if let Some(i) = self.below[j] {
            if v <= host[chosen[i]] {
                return false;
            }
        }
        if let Some(i) = self.above[j] {
            if v >= host[chosen[i]] {
                return false;
            }
        }
        true
    }

    fn count(&self, host: &[u16], j: usize, from: usize, chosen: &mut [usize]) -> u64 {
        let m = self.pattern.len();
        if j == m {
            return 1;
        }
        let last = host.len() - (m - j);
        let mut total = 0;
        for pos in from..=last {
            if self.fits(host, j, pos, chosen) {
                chosen[j] = pos;
                total += self.count(host, j + 1, pos + 1, chosen);
            }
        }
        total
    }

    fn exists(&self, host: &[u16], j: usize, from: usize, chosen: &mut [usize]) -> bool {
        let m = self.pattern.len();
        if j == m {
            return true;
        }
        let last = host.len() - (m - j);
        for pos in from..=last {
            if self.fits(host, j, pos, chosen) {
                chosen[j] = pos;
                if self.exists(host, j + 1, pos + 1, chosen) {
                    return true;
                }
            }
        }
        false
    }
}

/// A finite set of patterns, stored sorted by (length, one-line values)
/// without duplicates.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct PatternSet(Vec<Permutation>);

impl PatternSet {
    pub fn new<I: IntoIterator<Item = Permutation>>(patterns: I) -> Self {
        let mut v: Vec<Permutation> = patterns.into_iter().collect();
        v.sort();
        v.dedup();
        PatternSet(v)
    }

    pub fn empty() -> Self {
        PatternSet(Vec::new())
    }

    pub fn single(p: Permutation) -> Self {
        PatternSet(vec![p])
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.0
    }

    pub fn contains_pattern(&self, p: &Permutation) -> bool {
        self.0.binary_search(p).is_ok()
    }

    /// Drops every member that contains another member; avoidance of the
    /// remaining patterns implies avoidance of the dropped ones.
    pub fn canonicalize(&self) -> PatternSet {
        let mut kept: Vec<Permutation> = Vec::with_capacity(self.0.len());
        // sorted by length, so any pattern a member could contain comes first
        for p in &self.0 {
            if !kept.iter().any(|q| p.contains(q)) {
                kept.push(p.clone());
            }
        }
        PatternSet(kept)
    }

    /// Deterministic serialization: members in (length, lexicographic) order
    /// joined by commas.
    pub fn canonical_key(&self) -> String {
        self.0
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn map<F: Fn(&Permutation) -> Permutation>(&self, f: F) -> PatternSet {
        PatternSet::new(self.0.iter().map(f))
    }

    /// Replaces every `π` by `|π|+2, π^{+1}, 1`.
    pub fn kt1(&self) -> PatternSet {
        self.map(Permutation::wrap_k1)
    }

    /// `kt1` applied `times` times.
    pub fn kt1_iter(&self, times: usize) -> PatternSet {
        (0..times).fold(self.clone(), |acc, _| acc.kt1())
    }
}

impl FromIterator<Permutation> for PatternSet {
    fn from_iter<T: IntoIterator<Item = Permutation>>(iter: T) -> Self {
        PatternSet::new(iter)
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.canonical_key())
    }
}

impl fmt::Debug for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PatternSet{self}")
    }
}

impl FromStr for PatternSet {
    type Err = Error;

    /// Comma-separated permutations; the empty string is the empty set.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(PatternSet::empty());
        }
        s.split(',')
            .map(|t| t.parse::<Permutation>())
            .collect::<Result<Vec<_>>>()
            .map(PatternSet::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Exhaustive subsequence oracle.
    fn brute_occurrences(host: &Permutation, pattern: &Permutation) -> u64 {
        let n = host.len();
        let m = pattern.len();
        let mut count = 0;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != m {
                continue;
            }
            let sub: Vec<u16> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| host.values()[i])
                .collect();
            if Permutation::standardize(&sub) == *pattern {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn occurrence_examples() {
        let host = p("214538769");
        assert!(host.occurrence_count(&p("1324")) >= 1);
        assert!(host.contains(&p("1324")));
        assert_eq!(host.occurrence_count(&p("312")), 0);
        assert!(host.avoids(&p("2413")));
        assert!(host.contains(&p("1243")));
        assert_eq!(Permutation::identity(7).occurrence_count(&p("21")), 0);
        assert_eq!(host.occurrence_count(&Permutation::empty()), 1);
        assert_eq!(
            Permutation::empty().occurrence_count(&Permutation::empty()),
            1
        );
    }

    #[test]
    fn occurrence_matches_brute_force() {
        let hosts = ["52431687", "214538769", "3412", "7654321", "1"];
        let pats = ["1", "21", "12", "321", "132", "2413", "3412", "4321"];
        for h in hosts {
            for q in pats {
                let (h, q) = (p(h), p(q));
                assert_eq!(h.occurrence_count(&q), brute_occurrences(&h, &q), "{h} {q}");
                assert_eq!(h.contains(&q), brute_occurrences(&h, &q) > 0);
            }
        }
    }

    #[test]
    fn tau_examples() {
        let x = p("52431687");
        assert_eq!(x.tau_k(2), 9);
        assert_eq!(x.tau_k(4), 1);
        assert_eq!(x.tau_k(1), 8);
        assert_eq!(x.tau_k(0), 0);
        assert_eq!(x.tau_k(-3), 0);
        // 5431 is the only decreasing subsequence of length 4
        assert_eq!(x.tau_k(4), brute_occurrences(&x, &p("4321")));
        assert_eq!(x.tau_k(3), brute_occurrences(&x, &p("321")));
    }

    #[test]
    fn classic_stats_examples() {
        let s = p("52431687").classic_stats();
        assert_eq!((s.inv, s.lrmax, s.rlmin, s.fix), (9, 3, 3, 2));
        for n in 0..8 {
            let id = Permutation::identity(n).classic_stats();
            let n = n as u64;
            assert_eq!((id.inv, id.lrmax, id.rlmin, id.fix), (0, n, n, n));
            let rev = Permutation::decreasing(n as usize).classic_stats();
            let lr = if n == 0 { 0 } else { 1 };
            assert_eq!(
                (rev.inv, rev.lrmax, rev.rlmin, rev.fix),
                (n * n.saturating_sub(1) / 2, lr, lr, n % 2)
            );
        }
    }

    #[test]
    fn star_examples() {
        let e = Permutation::empty();
        assert_eq!(Permutation::star(&e, &e), p("21"));
        assert_eq!(Permutation::star(&p("1"), &e), p("321"));
        assert_eq!(Permutation::star(&e, &p("1")), p("213"));
        assert_eq!(Permutation::star(&p("132"), &p("21")), p("5243176"));
    }

    #[test]
    fn complete_decompose_examples() {
        assert_eq!(p("123").complete_decompose(), vec![p("1"), p("1"), p("1")]);
        assert_eq!(p("213").complete_decompose(), vec![p("21"), p("1")]);
        assert_eq!(
            p("52431687").complete_decompose(),
            vec![p("52431"), p("1"), p("21")]
        );
        assert!(Permutation::empty().complete_decompose().is_empty());
        let blocks = p("52431687").complete_decompose();
        assert_eq!(Permutation::concat_blocks(&blocks), p("52431687"));
    }

    #[test]
    fn overline_cases() {
        assert_eq!(Permutation::empty().overline(), Permutation::empty());
        assert_eq!(p("1").overline(), Permutation::empty());
        assert_eq!(p("21").overline(), Permutation::empty());
        assert_eq!(p("4231").overline(), p("12"));
        assert_eq!(p("3412").overline(), p("3412"));
        assert_eq!(p("312").overline(), p("12"));
        assert_eq!(p("231").overline(), p("12"));
        assert_eq!(p("12").overline(), p("12"));
    }

    #[test]
    fn overline_characterizes_wrapped_avoidance() {
        // |π|+2 π^{+1} 1 avoids σ iff π avoids overline(σ)
        let hosts = ["", "1", "12", "21", "132", "213", "2143", "1324"];
        let pats = ["1", "12", "21", "231", "312", "321", "4231", "3412", "2143"];
        for h in hosts {
            let h: Permutation = if h.is_empty() {
                Permutation::empty()
            } else {
                p(h)
            };
            for s in pats {
                let s = p(s);
                assert_eq!(h.wrap_k1().avoids(&s), h.avoids(&s.overline()), "{h} {s}");
            }
        }
    }

    #[test]
    fn beta_examples() {
        assert_eq!(p("123").beta(), p("12"));
        assert_eq!(p("21").beta(), p("21"));
        assert_eq!(p("1").beta(), Permutation::empty());
    }

    #[test]
    fn kt1_examples() {
        let t: PatternSet = "21,12".parse().unwrap();
        assert_eq!(t.kt1(), "4321,4231".parse().unwrap());
        assert_eq!(
            PatternSet::single(Permutation::empty()).kt1(),
            "21".parse().unwrap()
        );
        let one = PatternSet::single(p("1"));
        assert_eq!(one.kt1_iter(1), "321".parse().unwrap());
        assert_eq!(one.kt1_iter(2), "54321".parse().unwrap());
    }

    #[test]
    fn layered_examples() {
        assert_eq!(Permutation::layered(&[2, 2]).unwrap(), p("2143"));
        assert_eq!(Permutation::layered(&[1, 1, 1]).unwrap(), p("123"));
        assert_eq!(Permutation::layered(&[3, 2]).unwrap(), p("32154"));
        assert!(Permutation::layered(&[]).is_err());
        assert!(Permutation::layered(&[2, 0]).is_err());
    }

    #[test]
    fn symmetry_maps() {
        assert_eq!(p("3412").reverse_complement(), p("3412"));
        assert_eq!(
            Permutation::identity(6).reverse_complement(),
            Permutation::identity(6)
        );
        assert_eq!(p("2143").inverse(), p("2143"));
        assert_eq!(p("2341").inverse(), p("4123"));
    }

    #[test]
    fn canonicalize_examples() {
        let c = |s: &str| s.parse::<PatternSet>().unwrap().canonicalize();
        assert_eq!(c("21,4321"), "21".parse().unwrap());
        assert_eq!(c("3412"), "3412".parse().unwrap());
        assert_eq!(c("12,21,12"), "12,21".parse().unwrap());
        assert_eq!(c("12,21,12").canonical_key(), "12,21");
        assert_eq!(c("21,12").canonical_key(), c("12,21").canonical_key());
        assert_eq!(c("(),321"), PatternSet::single(Permutation::empty()));
    }

    #[test]
    fn parsing() {
        assert_eq!(p("3 4 1 2"), p("3412"));
        assert_eq!(p("()"), Permutation::empty());
        let long: Permutation = "10 9 8 7 6 5 4 3 2 1".parse().unwrap();
        assert_eq!(long, Permutation::decreasing(10));
        assert_eq!(long.to_string(), "10 9 8 7 6 5 4 3 2 1");
        assert!("3413".parse::<Permutation>().is_err());
        assert!("12a".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert!("".parse::<PatternSet>().unwrap().is_empty());
        match "12,x".parse::<PatternSet>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "x"),
            other => panic!("{other:?}"),
        }
    }
}
