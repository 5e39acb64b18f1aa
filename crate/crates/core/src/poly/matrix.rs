use super::intpoly::IntPoly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Which corner of the all-`x` tridiagonal band is zeroed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    /// Full band.
    A,
    /// Lower-right corner zero: no level step at the top height.
    B,
    /// Upper-left corner zero: no level step at height 0.
    C,
}

/// Path families bounded between heights `0` and `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Unrestricted level steps.
    M,
    /// No level steps at height `k`.
    N,
    /// No level steps at height 0.
    O,
}

impl Family {
    pub fn matrix_kind(self) -> MatrixKind {
        match self {
            Family::M => MatrixKind::A,
            Family::N => MatrixKind::B,
            Family::O => MatrixKind::C,
        }
    }

    /// Whether a level step is allowed at height `h` in a strip of height `k`.
    pub fn level_allowed(self, h: usize, k: usize) -> bool {
        match self {
            Family::M => true,
            Family::N => h != k,
            Family::O => h != 0,
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M" | "m" => Ok(Family::M),
            "N" | "n" => Ok(Family::N),
            "O" | "o" => Ok(Family::O),
            _ => Err(Error::Parse {
                what: "path family",
                token: s.to_string(),
            }),
        }
    }
}

/// The `(k+1) × (k+1)` tridiagonal matrix with every band entry `x`, with one
/// corner zeroed according to `kind`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriMatrix {
    pub kind: MatrixKind,
    pub k: usize,
}

impl TriMatrix {
    pub fn new(kind: MatrixKind, k: usize) -> Self {
        TriMatrix { kind, k }
    }

    pub fn size(&self) -> usize {
        self.k + 1
    }

    pub fn entry(&self, i: usize, j: usize) -> IntPoly {
        let n = self.size();
        if i.abs_diff(j) > 1 {
            return IntPoly::zero();
        }
        let zeroed = match self.kind {
            MatrixKind::A => false,
            MatrixKind::B => i == n - 1 && j == n - 1,
            MatrixKind::C => i == 0 && j == 0,
        };
        if zeroed {
            IntPoly::zero()
        } else {
            IntPoly::x()
        }
    }

    pub fn dense(&self) -> Vec<Vec<IntPoly>> {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// `I - M` as a dense matrix.
    pub fn identity_minus(&self) -> Vec<Vec<IntPoly>> {
        let n = self.size();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let e = -&self.entry(i, j);
                        if i == j {
                            &e + &IntPoly::one()
                        } else {
                            e
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// `det(I - M)` and the minor of `I - M` with row `s` and column `r`
    /// deleted.
    pub fn det_and_minor(&self, s: usize, r: usize) -> Result<(IntPoly, IntPoly)> {
        let n = self.size();
        if s >= n || r >= n {
            return Err(Error::IndexOutOfRange {
                row: s,
                col: r,
                size: n,
            });
        }
        let full = self.identity_minus();
        let minor: Vec<Vec<IntPoly>> = full
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != s)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != r)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        Ok((det(full), det(minor)))
    }
}

/// Fraction-free (Bareiss) determinant over `Z[x]`.
pub fn det(mut m: Vec<Vec<IntPoly>>) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return IntPoly::one();
    }
    let mut prev = IntPoly::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return IntPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Length generating function of paths from height `r` to height `s` that
/// stay within `[0, k]`, with the family's level-step restriction:
/// `(-1)^{r+s} det(I - M; s, r) / det(I - M)`.
pub fn bounded_path_gf(family: Family, r: usize, s: usize, k: usize) -> Result<RatFunc> {
    let m = TriMatrix::new(family.matrix_kind(), k);
    let (d, minor) = m.det_and_minor(s, r)?;
    let signed = if (r + s).is_multiple_of(2) {
        minor
    } else {
        -minor
    };
    RatFunc::new(signed, d)
}
