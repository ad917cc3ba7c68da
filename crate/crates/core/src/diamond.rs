//! Diamonds of Dynkin type A_n.
//!
//! A diamond is a two-column array `a_{1,j}`, `a_{2,j}` (`1 <= j <= n`)
//! bounded by the implicit constants `a_{2,0} = a_{1,n+1} = 1` and subject to
//! the unimodular rule
//!
//! ```text
//! a_{1,j} * a_{2,j} - a_{2,j-1} * a_{1,j+1} = 1      (1 <= j <= n)
//! ```
//!
//! The first column determines the second: solving the rule for `a_{2,j}`
//! from left to right gives the completion performed by [`complete_diamond`].
//! Two diamonds are coupled when the second column of one is the first column
//! of the next, and iterating the coupling always returns to the start after
//! a number of steps dividing `n + 3`.

use std::fmt;
use std::str::FromStr;

use crate::scalar::{self, Entry, Overflow};

/// Columns are indexed `1..=n` in errors, matching the rule above.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiamondError {
    #[error("a diamond vector needs at least one entry")]
    Empty,
    #[error("entry {j} is not a positive integer")]
    NonPositiveEntry { j: usize },
    #[error("a_(1,{j}) does not divide 1 + a_(2,{prev}) * a_(1,{next})", prev = .j - 1, next = .j + 1)]
    NonExactDivision { j: usize },
    #[error("columns have different lengths ({left} and {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("unimodular rule fails at row {j}")]
    RuleViolation { j: usize },
    #[error("no recurrence after {limit} couplings")]
    CycleOverrun { limit: usize },
    #[error("could not parse vector entry {0:?}")]
    Parse(String),
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// The first column of a diamond, `(a_1, ..., a_n)` with every `a_j >= 1`.
///
/// Holding a `DiamondVector` does not mean a diamond exists for it; that is
/// decided by [`complete_diamond`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiamondVector<T> {
    entries: Vec<T>,
}

impl<T: Entry> DiamondVector<T> {
    pub fn new(entries: Vec<T>) -> Result<Self, DiamondError> {
        if entries.is_empty() {
            return Err(DiamondError::Empty);
        }
        if let Some(pos) = entries.iter().position(|x| !scalar::is_positive(x)) {
            return Err(DiamondError::NonPositiveEntry { j: pos + 1 });
        }
        Ok(Self { entries })
    }

    pub fn from_u64s(entries: &[u64]) -> Result<Self, DiamondError> {
        let entries = entries
            .iter()
            .map(|&x| T::from_u64(x).ok_or(Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(entries)
    }

    /// The rank `n`.
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    /// `a_j`, 1-based.
    pub fn get(&self, j: usize) -> &T {
        &self.entries[j - 1]
    }

    pub fn complete(&self) -> Result<Diamond<T>, DiamondError> {
        complete_diamond(self)
    }
}

impl<T: fmt::Display> fmt::Display for DiamondVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl<T: Entry + FromStr> FromStr for DiamondVector<T> {
    type Err = DiamondError;

    /// Parses the comma-separated form, e.g. `"2,3,4,1"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<T>().map_err(|_| DiamondError::Parse(tok.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(entries)
    }
}

/// A positive integral diamond: both columns, satisfying the unimodular rule.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diamond<T> {
    col1: Vec<T>,
    col2: Vec<T>,
}

impl<T: Entry> Diamond<T> {
    /// Builds a diamond from explicit columns, checking positivity and every
    /// instance of the rule.
    pub fn from_columns(col1: Vec<T>, col2: Vec<T>) -> Result<Self, DiamondError> {
        if col1.len() != col2.len() {
            return Err(DiamondError::LengthMismatch { left: col1.len(), right: col2.len() });
        }
        DiamondVector::new(col1.clone())?;
        DiamondVector::new(col2.clone())?;
        let d = Self { col1, col2 };
        if let Some(j) = d.first_rule_violation()? {
            return Err(DiamondError::RuleViolation { j });
        }
        Ok(d)
    }

    pub fn rank(&self) -> usize {
        self.col1.len()
    }

    pub fn col1(&self) -> &[T] {
        &self.col1
    }

    pub fn col2(&self) -> &[T] {
        &self.col2
    }

    /// `a_{1,j}` for `1 <= j <= n + 1`; `a_{1,n+1}` is the boundary 1.
    pub fn a1(&self, j: usize) -> T {
        if j == self.rank() + 1 {
            T::one()
        } else {
            self.col1[j - 1].clone()
        }
    }

    /// `a_{2,j}` for `0 <= j <= n`; `a_{2,0}` is the boundary 1.
    pub fn a2(&self, j: usize) -> T {
        if j == 0 {
            T::one()
        } else {
            self.col2[j - 1].clone()
        }
    }

    pub fn first_column(&self) -> DiamondVector<T> {
        DiamondVector { entries: self.col1.clone() }
    }

    pub fn second_column(&self) -> DiamondVector<T> {
        DiamondVector { entries: self.col2.clone() }
    }

    /// Evaluates the rule at every row, returning the first row where it fails.
    pub fn first_rule_violation(&self) -> Result<Option<usize>, Overflow> {
        for j in 1..=self.rank() {
            let lhs = scalar::mul(&self.a1(j), &self.a2(j))?;
            let rhs = scalar::add(&scalar::mul(&self.a2(j - 1), &self.a1(j + 1))?, &T::one())?;
            if lhs != rhs {
                return Ok(Some(j));
            }
        }
        Ok(None)
    }

    pub fn couple_next(&self) -> Result<Diamond<T>, DiamondError> {
        couple_next(self)
    }

    pub fn satisfies_d3(&self) -> bool {
        check_d3(self)
    }
}

/// Completes a first column into a diamond.
///
/// `a_{2,j} = (1 + a_{2,j-1} * a_{1,j+1}) / a_{1,j}`, left to right, with
/// `a_{2,0} = a_{1,n+1} = 1`. Fails as soon as a division is not exact.
pub fn complete_diamond<T: Entry>(v: &DiamondVector<T>) -> Result<Diamond<T>, DiamondError> {
    let n = v.rank();
    let mut col2 = Vec::with_capacity(n);
    let mut prev = T::one();
    for j in 1..=n {
        let next = if j == n { T::one() } else { v.get(j + 1).clone() };
        let num = scalar::add(&scalar::mul(&prev, &next)?, &T::one())?;
        let (q, r) = num.div_rem(v.get(j));
        if !r.is_zero() {
            return Err(DiamondError::NonExactDivision { j });
        }
        if !scalar::is_positive(&q) {
            return Err(DiamondError::NonPositiveEntry { j });
        }
        col2.push(q.clone());
        prev = q;
    }
    Ok(Diamond { col1: v.entries.clone(), col2 })
}

/// The bound conditions on the top corner of a diamond of rank `n`.
///
/// `{a11, a21}` is read as the unordered pair `{a, a + m}`, so `a` is the
/// smaller entry and `m` the difference. Then `a12 = a^2 + a*m - 1`,
/// `1 <= a <= (n + 2) / 2`, and `1 <= m <= n` when `a = 1`,
/// `0 <= m <= n + 2(1 - a)` otherwise.
pub fn d3_holds<T: Entry>(n: usize, a11: &T, a21: &T, a12: &T) -> bool {
    let (a, b) = if a11 <= a21 { (a11, a21) } else { (a21, a11) };
    if !scalar::is_positive(a) {
        return false;
    }
    let m = b.clone() - a.clone();
    let Some(expected) = a
        .checked_mul(&(a.clone() + m.clone()))
        .and_then(|x| x.checked_sub(&T::one()))
    else {
        return false;
    };
    if expected != *a12 {
        return false;
    }
    let (Some(a), Some(m)) = (a.to_usize(), m.to_usize()) else {
        return false;
    };
    if a > (n + 2) / 2 {
        return false;
    }
    if a == 1 {
        (1..=n).contains(&m)
    } else {
        // n + 2(1 - a) >= m  <=>  n + 2 >= m + 2a
        n + 2 >= m + 2 * a
    }
}

/// Optional validator for the corner conditions; see [`d3_holds`].
///
/// For `n = 1` the entry below `a_{1,1}` is the boundary 1.
pub fn check_d3<T: Entry>(d: &Diamond<T>) -> bool {
    d3_holds(d.rank(), &d.a1(1), &d.a2(1), &d.a1(2))
}

/// The diamond whose first column is the second column of `d`.
pub fn couple_next<T: Entry>(d: &Diamond<T>) -> Result<Diamond<T>, DiamondError> {
    complete_diamond(&d.second_column())
}

/// `A^0, A^1, ..., A^{p-1}` with `A^{t}` coupled to `A^{t+1}` and `A^{p-1}`
/// coupled back to `A^0`; `p` is minimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle<T> {
    diamonds: Vec<Diamond<T>>,
}

impl<T: Entry> Cycle<T> {
    pub fn period(&self) -> usize {
        self.diamonds.len()
    }

    pub fn rank(&self) -> usize {
        self.diamonds[0].rank()
    }

    pub fn members(&self) -> &[Diamond<T>] {
        &self.diamonds
    }

    /// First entry of every member; see [`cycle_heads`].
    pub fn heads(&self) -> Vec<T> {
        cycle_heads(self)
    }

    /// The heads repeated `(n + 3) / p` times: one full row of the frieze.
    pub fn quiddity(&self) -> Vec<T> {
        let n3 = self.rank() + 3;
        self.heads().into_iter().cycle().take(n3).collect()
    }

    /// True when `other` lists the same diamonds from a different start.
    pub fn is_rotation_of(&self, other: &Cycle<T>) -> bool {
        let p = self.period();
        p == other.period()
            && (0..p).any(|k| (0..p).all(|t| self.diamonds[(t + k) % p] == other.diamonds[t]))
    }
}

/// Iterates [`couple_next`] from `d0` until `d0` recurs.
pub fn minimal_cycle<T: Entry>(d0: &Diamond<T>) -> Result<Cycle<T>, DiamondError> {
    let limit = d0.rank() + 3;
    let mut diamonds = vec![d0.clone()];
    loop {
        let next = couple_next(diamonds.last().unwrap())?;
        if next == *d0 {
            return Ok(Cycle { diamonds });
        }
        if diamonds.len() >= limit {
            return Err(DiamondError::CycleOverrun { limit });
        }
        diamonds.push(next);
    }
}

/// `(a^0_{1,1}, ..., a^{p-1}_{1,1})`.
pub fn cycle_heads<T: Entry>(c: &Cycle<T>) -> Vec<T> {
    c.diamonds.iter().map(|d| d.col1[0].clone()).collect()
}
