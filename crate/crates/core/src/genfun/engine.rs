use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::perm::{PatternSet, Permutation};
use crate::poly::PowerSeries;

pub const DEFAULT_ORDER_LIMIT: usize = 60;

/// Memoized evaluator of `F_T(x) = Σ |I_n(3412, T)| x^n` as a truncated
/// series.
///
/// Each distinct canonical pattern set becomes a node. A node stores the id
/// of `β(T)` and, for the `x²` part of the recurrence, a list of groups
/// `(Σ c_i F_{L_i}) · F_R` keyed by the right-hand set `R`. Coefficients are
/// filled in increasing degree for every reachable node at once, so a node
/// may refer to itself.
///
/// The table is plain mutable state; share an engine across threads only
/// behind a lock.
#[derive(Debug)]
pub struct Engine {
    limit: usize,
    ids: HashMap<PatternSet, usize>,
    nodes: Vec<Node>,
}

#[derive(Debug)]
struct Node {
    set: PatternSet,
    rule: Rule,
    coeffs: Vec<BigInt>,
}

#[derive(Debug)]
enum Rule {
    Pending,
    /// The set contains the empty pattern.
    Zero,
    Recur {
        beta: usize,
        groups: Vec<Group>,
    },
}

#[derive(Debug)]
struct Group {
    left: Vec<(i64, usize)>,
    right: usize,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(DEFAULT_ORDER_LIMIT)
    }
}

impl Engine {
    pub fn new(limit: usize) -> Self {
        Engine {
            limit,
            ids: HashMap::new(),
            nodes: Vec::new(),
        }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    /// Number of distinct pattern sets memoized so far.
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// `F_T` through `x^order`.
    pub fn ft_series(&mut self, t: &PatternSet, order: usize) -> Result<PowerSeries> {
        Ok(PowerSeries::from_integers(self.coefficients(t, order)?))
    }

    /// `|I_n(3412, T)|` for `n = 0..=order`.
    pub fn coefficients(&mut self, t: &PatternSet, order: usize) -> Result<Vec<BigInt>> {
        if order > self.limit {
            return Err(Error::LimitExceeded {
                requested: order,
                limit: self.limit,
            });
        }
        let root = self.intern(t);
        self.build();
        self.fill(root, order);
        Ok(self.nodes[root].coeffs[..=order].to_vec())
    }

    fn intern(&mut self, t: &PatternSet) -> usize {
        let key = normalize(t);
        if let Some(&id) = self.ids.get(&key) {
            return id;
        }
        let id = self.nodes.len();
        self.nodes.push(Node {
            set: key.clone(),
            rule: Rule::Pending,
            coeffs: Vec::new(),
        });
        self.ids.insert(key, id);
        id
    }

    /// Expands every pending node; interning children may add more.
    fn build(&mut self) {
        let mut next = 0;
        while next < self.nodes.len() {
            if matches!(self.nodes[next].rule, Rule::Pending) {
                let set = self.nodes[next].set.clone();
                let rule = self.rule_for(&set);
                self.nodes[next].rule = rule;
            }
            next += 1;
        }
    }

    fn rule_for(&mut self, t: &PatternSet) -> Rule {
        if t.iter().any(|p| p.is_empty()) {
            return Rule::Zero;
        }
        let beta = self.intern(&t.map(Permutation::beta));
        let blocks: Vec<Vec<Permutation>> = t.iter().map(|p| p.complete_decompose()).collect();
        // bar[j][i] = overline of the first i blocks of pattern j
        let bar: Vec<Vec<Permutation>> = blocks
            .iter()
            .map(|b| {
                (0..=b.len())
                    .map(|i| Permutation::concat_blocks(&b[..i]).overline())
                    .collect()
            })
            .collect();
        let m = blocks.len();
        let mut groups: Vec<Group> = Vec::new();
        let mut by_right: HashMap<usize, usize> = HashMap::new();
        let mut idx = vec![1usize; m];
        loop {
            let right_set: PatternSet = (0..m)
                .map(|j| Permutation::concat_blocks(&blocks[j][idx[j] - 1..]))
                .collect();
            let right = self.intern(&right_set);
            let mut left: HashMap<usize, i64> = HashMap::new();
            for y in 0u64..(1u64 << m) {
                let ty: PatternSet = (0..m)
                    .map(|j| {
                        if y >> j & 1 == 1 {
                            bar[j][idx[j] - 1].clone()
                        } else {
                            bar[j][idx[j]].clone()
                        }
                    })
                    .collect();
                let id = self.intern(&ty);
                let sign = if y.count_ones() % 2 == 0 { 1 } else { -1 };
                *left.entry(id).or_insert(0) += sign;
            }
            let left: Vec<(i64, usize)> = left
                .into_iter()
                .filter(|&(id, c)| c != 0 && !is_zero_set(&self.nodes[id].set))
                .map(|(id, c)| (c, id))
                .collect();
            if !left.is_empty() && !is_zero_set(&self.nodes[right].set) {
                let g = *by_right.entry(right).or_insert_with(|| {
                    groups.push(Group {
                        left: Vec::new(),
                        right,
                    });
                    groups.len() - 1
                });
                merge(&mut groups[g].left, &left);
            }
            // next index tuple, odometer style
            let mut j = 0;
            while j < m {
                if idx[j] < blocks[j].len() {
                    idx[j] += 1;
                    break;
                }
                idx[j] = 1;
                j += 1;
            }
            if j == m {
                break;
            }
        }
        for g in &mut groups {
            g.left.retain(|&(c, _)| c != 0);
            g.left.sort_by_key(|&(_, id)| id);
        }
        groups.retain(|g| !g.left.is_empty());
        Rule::Recur { beta, groups }
    }

    fn reachable(&self, root: usize) -> Vec<usize> {
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![root];
        let mut out = Vec::new();
        while let Some(v) = stack.pop() {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            out.push(v);
            if let Rule::Recur { beta, groups } = &self.nodes[v].rule {
                stack.push(*beta);
                for g in groups {
                    stack.push(g.right);
                    stack.extend(g.left.iter().map(|&(_, id)| id));
                }
            }
        }
        out
    }

    fn fill(&mut self, root: usize, order: usize) {
        if self.nodes[root].coeffs.len() > order {
            return;
        }
        let live = self.reachable(root);
        for n in 0..=order {
            for &v in &live {
                if self.nodes[v].coeffs.len() != n {
                    continue;
                }
                let c = self.coefficient(v, n);
                self.nodes[v].coeffs.push(c);
            }
        }
    }

    /// Degree-`n` coefficient of node `v`, given degrees `< n` everywhere.
    fn coefficient(&self, v: usize, n: usize) -> BigInt {
        let (beta, groups) = match &self.nodes[v].rule {
            Rule::Zero => return BigInt::zero(),
            Rule::Recur { beta, groups } => (*beta, groups),
            Rule::Pending => unreachable!("nodes are built before filling"),
        };
        if n == 0 {
            return BigInt::from(1);
        }
        let mut acc = self.nodes[beta].coeffs[n - 1].clone();
        if n >= 2 {
            let top = n - 2;
            for g in groups {
                let right = &self.nodes[g.right].coeffs;
                for a in 0..=top {
                    let r = &right[top - a];
                    if r.is_zero() {
                        continue;
                    }
                    let mut l = BigInt::zero();
                    for &(c, id) in &g.left {
                        l += &self.nodes[id].coeffs[a] * c;
                    }
                    if !l.is_zero() {
                        acc += l * r;
                    }
                }
            }
        }
        acc
    }
}

/// Canonical form used as the memo key. Besides the usual canonicalization,
/// patterns containing 3412 are dropped since nothing counted here contains
/// them.
fn normalize(t: &PatternSet) -> PatternSet {
    let forbidden = Permutation::from_vec_unchecked(vec![3, 4, 1, 2]);
    PatternSet::new(t.iter().filter(|p| !p.contains(&forbidden)).cloned()).canonicalize()
}

fn is_zero_set(t: &PatternSet) -> bool {
    t.iter().any(|p| p.is_empty())
}

fn merge(into: &mut Vec<(i64, usize)>, add: &[(i64, usize)]) {
    for &(c, id) in add {
        match into.iter_mut().find(|(_, j)| *j == id) {
            Some(e) => e.0 += c,
            None => into.push((c, id)),
        }
    }
}
