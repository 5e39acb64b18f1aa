//! Motzkin paths, the binomial step statistics `τ_k`, and the label-swapping
//! bijection onto 3412-avoiding involutions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_PATH_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
    Level,
}

impl Step {
    fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
            Step::Level => 'L',
        }
    }
}

/// A lattice path of Up/Down/Level steps that never goes below height 0 and
/// ends at height 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MotzkinPath(Vec<Step>);

impl MotzkinPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h = 0i64;
        for &s in &steps {
            h += match s {
                Step::Up => 1,
                Step::Down => -1,
                Step::Level => 0,
            };
            if h < 0 {
                break;
            }
        }
        if h != 0 {
            let token: String = steps.iter().map(|s| s.letter()).collect();
            return Err(Error::Parse {
                what: "Motzkin path",
                token,
            });
        }
        Ok(MotzkinPath(steps))
    }

    pub fn empty() -> Self {
        MotzkinPath(Vec::new())
    }

    pub fn level(n: usize) -> Self {
        MotzkinPath(vec![Step::Level; n])
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `L π`.
    pub fn prepend_level(&self) -> MotzkinPath {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(Step::Level);
        v.extend_from_slice(&self.0);
        MotzkinPath(v)
    }

    /// `U π_1 D π_2`.
    pub fn star(p1: &MotzkinPath, p2: &MotzkinPath) -> MotzkinPath {
        let mut v = Vec::with_capacity(p1.len() + p2.len() + 2);
        v.push(Step::Up);
        v.extend_from_slice(&p1.0);
        v.push(Step::Down);
        v.extend_from_slice(&p2.0);
        MotzkinPath(v)
    }

    /// Starting height of every step.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = 0usize;
        self.0
            .iter()
            .map(|s| {
                let start = h;
                match s {
                    Step::Up => h += 1,
                    Step::Down => h -= 1,
                    Step::Level => {}
                }
                start
            })
            .collect()
    }

    /// `Σ C(2h, k-1)` over up and level steps plus `Σ C(2h-1, k-1)` over down
    /// steps, `h` the starting height.
    pub fn tau_k(&self, k: i64) -> u64 {
        self.0
            .iter()
            .zip(self.heights())
            .map(|(s, h)| {
                let top = match s {
                    Step::Down => 2 * h as i64 - 1,
                    _ => 2 * h as i64,
                };
                binomial_u64(top, k - 1)
            })
            .sum()
    }

    pub fn tau_vector(&self, max_k: usize) -> Vec<u64> {
        (1..=max_k as i64).map(|k| self.tau_k(k)).collect()
    }

    /// Numbers the steps `1..n`, swaps the labels of each up step and its
    /// matching down step, and reads the labels off.
    pub fn phi(&self) -> Permutation {
        let mut labels: Vec<u16> = (1..=self.len() as u16).collect();
        let mut open = Vec::new();
        for (i, s) in self.0.iter().enumerate() {
            match s {
                Step::Up => open.push(i),
                Step::Down => {
                    let j = open.pop().expect("valid Motzkin path");
                    labels.swap(i, j);
                }
                Step::Level => {}
            }
        }
        Permutation::from_vec_unchecked(labels)
    }

    /// Inverse of [`MotzkinPath::phi`] on 3412-avoiding involutions.
    pub fn phi_inverse(q: &Permutation) -> Result<MotzkinPath> {
        if !q.is_involution() || q.contains(&Permutation::from_vec_unchecked(vec![3, 4, 1, 2])) {
            return Err(Error::Domain(format!(
                "{q} is not a 3412-avoiding involution"
            )));
        }
        let steps = q
            .values()
            .iter()
            .enumerate()
            .map(|(i, &v)| match (v as usize).cmp(&(i + 1)) {
                std::cmp::Ordering::Equal => Step::Level,
                std::cmp::Ordering::Greater => Step::Up,
                std::cmp::Ordering::Less => Step::Down,
            })
            .collect();
        Ok(MotzkinPath(steps))
    }

    /// Reverses the steps and swaps Up with Down.
    pub fn rc(&self) -> MotzkinPath {
        MotzkinPath(
            self.0
                .iter()
                .rev()
                .map(|s| match s {
                    Step::Up => Step::Down,
                    Step::Down => Step::Up,
                    Step::Level => Step::Level,
                })
                .collect(),
        )
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MotzkinPath({self})")
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let steps = s
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Down),
                'L' => Ok(Step::Level),
                _ => Err(Error::Parse {
                    what: "Motzkin path",
                    token: s.to_string(),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        MotzkinPath::new(steps)
    }
}

/// Binomial coefficient with `C(n, k) = 0` for `k < 0` or `k > n`.
pub(crate) fn binomial_u64(n: i64, k: i64) -> u64 {
    if k < 0 || k > n || n < 0 {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All paths of length `n` via `L π` and `U π_1 D π_2`, lazily.
pub fn generate_paths(n: usize) -> Result<Box<dyn Iterator<Item = MotzkinPath>>> {
    generate_paths_with_limit(n, DEFAULT_PATH_LIMIT)
}

pub fn generate_paths_with_limit(
    n: usize,
    limit: usize,
) -> Result<Box<dyn Iterator<Item = MotzkinPath>>> {
    if n > limit {
        return Err(Error::LimitExceeded {
            requested: n,
            limit,
        });
    }
    Ok(paths_of(n))
}

fn paths_of(n: usize) -> Box<dyn Iterator<Item = MotzkinPath>> {
    if n == 0 {
        return Box::new(std::iter::once(MotzkinPath::empty()));
    }
    let leveled = paths_of(n - 1).map(|p| p.prepend_level());
    let starred = (2..=n).flat_map(move |j| {
        paths_of(j - 2)
            .flat_map(move |p1| paths_of(n - j).map(move |p2| MotzkinPath::star(&p1, &p2)))
    });
    Box::new(leveled.chain(starred))
}

/// `M_0 = 1`, `M_n = M_{n-1} + Σ_{i=2}^{n} M_{i-2} M_{n-i}`.
pub fn motzkin_numbers(upto: usize) -> Vec<num_bigint::BigInt> {
    let mut m: Vec<num_bigint::BigInt> = vec![1.into()];
    for n in 1..=upto {
        let mut v = m[n - 1].clone();
        for i in 2..=n {
            v += &m[i - 2] * &m[n - i];
        }
        m.push(v);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn path(s: &str) -> MotzkinPath {
        s.parse().unwrap()
    }

    #[test]
    fn rejects_invalid_paths() {
        assert!("UDD".parse::<MotzkinPath>().is_err());
        assert!("DU".parse::<MotzkinPath>().is_err());
        assert!("UUD".parse::<MotzkinPath>().is_err());
        assert!("UXD".parse::<MotzkinPath>().is_err());
        assert!("".parse::<MotzkinPath>().unwrap().is_empty());
    }

    #[test]
    fn generation_counts() {
        let m = motzkin_numbers(10);
        assert_eq!(
            generate_paths(0).unwrap().collect::<Vec<_>>(),
            vec![MotzkinPath::empty()]
        );
        assert_eq!(generate_paths(3).unwrap().count(), 4);
        assert_eq!(generate_paths(4).unwrap().count(), 9);
        for (n, m_n) in m.iter().enumerate().take(11) {
            let all: HashSet<MotzkinPath> = generate_paths(n).unwrap().collect();
            assert_eq!(num_bigint::BigInt::from(all.len()), *m_n);
        }
        assert!(matches!(
            generate_paths(17),
            Err(Error::LimitExceeded {
                requested: 17,
                limit: 16
            })
        ));
    }

    #[test]
    fn tau_example() {
        let p = path("ULUUDLDDLUD");
        let taus: Vec<u64> = (1..=8).map(|k| p.tau_k(k)).collect();
        assert_eq!(taus, vec![11, 22, 27, 19, 7, 1, 0, 0]);
        assert_eq!(MotzkinPath::level(5).tau_k(1), 5);
        assert_eq!(MotzkinPath::level(5).tau_k(2), 0);
        assert_eq!(path("UD").tau_k(2), 1);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(path("ULUDDLUD").phi().to_string(), "52431687");
        assert_eq!(MotzkinPath::level(4).phi(), Permutation::identity(4));
        assert_eq!(path("UD").phi().to_string(), "21");
    }

    #[test]
    fn phi_inverse_examples() {
        let q: Permutation = "52431687".parse().unwrap();
        assert_eq!(MotzkinPath::phi_inverse(&q).unwrap(), path("ULUDDLUD"));
        assert_eq!(
            MotzkinPath::phi_inverse(&Permutation::identity(3)).unwrap(),
            MotzkinPath::level(3)
        );
        assert_eq!(
            MotzkinPath::phi_inverse(&"21".parse().unwrap()).unwrap(),
            path("UD")
        );
        assert!(MotzkinPath::phi_inverse(&"3412".parse().unwrap()).is_err());
        assert!(MotzkinPath::phi_inverse(&"231".parse().unwrap()).is_err());
    }

    #[test]
    fn rc_examples() {
        assert_eq!(path("ULUUDLUUDDLLDDLUD").rc(), path("UDLUULLUUDDLUDDLD"));
        assert_eq!(MotzkinPath::level(3).rc(), MotzkinPath::level(3));
        assert_eq!(path("UD").rc(), path("UD"));
    }

    #[test]
    fn motzkin_recurrence() {
        let m: Vec<u64> = motzkin_numbers(10)
            .iter()
            .map(|v| v.try_into().unwrap())
            .collect();
        assert_eq!(m, vec![1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188]);
    }

    #[test]
    fn tau_recurrences_on_decompositions() {
        for n in 0..=8usize {
            for p in generate_paths(n).unwrap() {
                let lp = p.prepend_level();
                for k in 1..=16i64 {
                    assert_eq!(lp.tau_k(k), binomial_u64(0, k - 1) + p.tau_k(k));
                }
            }
        }
        for n1 in 0..=4usize {
            for n2 in 0..=4usize {
                for p1 in generate_paths(n1).unwrap() {
                    for p2 in generate_paths(n2).unwrap() {
                        let s = MotzkinPath::star(&p1, &p2);
                        for k in 1..=16i64 {
                            let expect = binomial_u64(0, k - 1)
                                + binomial_u64(1, k - 1)
                                + if k >= 3 { p1.tau_k(k - 2) } else { 0 }
                                + 2 * if k >= 2 { p1.tau_k(k - 1) } else { 0 }
                                + p1.tau_k(k)
                                + p2.tau_k(k);
                            assert_eq!(s.tau_k(k), expect);
                        }
                    }
                }
            }
        }
    }
}
