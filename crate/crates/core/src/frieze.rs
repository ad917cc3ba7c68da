//! Closed positive integral frieze patterns.
//!
//! A frieze of order `N` has `N + 1` rows: a row of 0s, a row of 1s, the
//! band of `N - 3` rows of positive integers (the first band row being the
//! quiddity), a closing row of 1s and a row of 0s. Every row is `N`-periodic
//! so only one fundamental domain of `N` columns is stored.
//!
//! Row `r`, column `c` sits at horizontal position `c + r/2`. With this
//! convention every diamond of neighbours
//!
//! ```text
//!            top = e[r-1][c+1]
//! left = e[r][c]          right = e[r][c+1]
//!           bottom = e[r+1][c]
//! ```
//!
//! satisfies `left * right - top * bottom = 1`, and the glide reflection
//! reads `e[r][c] = e[N-r][c+r]`. A down-right diagonal is a fixed column
//! `c`, which is where the first columns of a cycle of diamonds sit.

use std::fmt::Write as _;

use crate::diamond::Cycle;
use crate::scalar::{self, Entry, Overflow};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FriezeError {
    #[error("a frieze with a non-trivial row needs order at least 4, got {0}")]
    OrderTooSmall(usize),
    #[error("entry at row {row}, column {col} is not an integer")]
    NonIntegralEntry { row: usize, col: usize },
    #[error("entry at row {row}, column {col} is not positive")]
    NonPositiveEntry { row: usize, col: usize },
    #[error("row {row} is not a row of 1s")]
    FailsToClose { row: usize },
    #[error("assembled frieze failed verification: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// A single failed check reported by [`FriezePattern::verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation<T> {
    /// Wrong number of rows, or a row not of length `order`.
    Shape,
    /// Rows 0 and `N` must be 0s, rows 1 and `N - 1` must be 1s.
    Border { row: usize, col: usize },
    NonPositive { row: usize, col: usize },
    /// `left * right - top * bottom != 1` for the diamond whose left entry
    /// is at `(row, col)`.
    Rule { row: usize, col: usize, left: T, top: T, right: T, bottom: T },
    Glide { row: usize, col: usize },
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FriezePattern<T> {
    order: usize,
    rows: Vec<Vec<T>>,
}

impl<T: Entry> FriezePattern<T> {
    /// Wraps raw rows without checking them; see [`FriezePattern::verify`].
    pub fn from_rows_unchecked(rows: Vec<Vec<T>>) -> Self {
        let order = rows.len().saturating_sub(1);
        Self { order, rows }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn quiddity(&self) -> &[T] {
        &self.rows[2]
    }

    /// Entry at row `r`, column `c` of the infinite strip.
    pub fn entry(&self, r: usize, c: isize) -> &T {
        let n = self.order as isize;
        &self.rows[r][c.rem_euclid(n) as usize]
    }

    pub fn is_valid(&self) -> bool {
        self.verify().is_empty()
    }

    /// Checks the border rows, positivity of the band, the unimodular rule on
    /// every diamond, and glide reflection. Periodicity holds by storage.
    pub fn verify(&self) -> Vec<Violation<T>> {
        let n = self.order;
        if n < 4 || self.rows.len() != n + 1 || self.rows.iter().any(|r| r.len() != n) {
            return vec![Violation::Shape];
        }
        let mut out = Vec::new();
        for (row, want) in [(0, T::zero()), (1, T::one()), (n - 1, T::one()), (n, T::zero())] {
            for col in 0..n {
                if self.rows[row][col] != want {
                    out.push(Violation::Border { row, col });
                }
            }
        }
        for row in 2..=n - 2 {
            for col in 0..n {
                if !scalar::is_positive(&self.rows[row][col]) {
                    out.push(Violation::NonPositive { row, col });
                }
            }
        }
        for row in 1..n {
            for col in 0..n {
                let c = col as isize;
                let left = self.entry(row, c).clone();
                let right = self.entry(row, c + 1).clone();
                let top = self.entry(row - 1, c + 1).clone();
                let bottom = self.entry(row + 1, c).clone();
                let (Ok(lr), Ok(tb)) = (scalar::mul(&left, &right), scalar::mul(&top, &bottom)) else {
                    out.push(Violation::Overflow);
                    continue;
                };
                if scalar::add(&tb, &T::one()).map_or(true, |rhs| rhs != lr) {
                    out.push(Violation::Rule { row, col, left, top, right, bottom });
                }
            }
        }
        for row in 0..=n {
            for col in 0..n {
                if self.rows[row][col] != *self.entry(n - row, (col + row) as isize) {
                    out.push(Violation::Glide { row, col });
                }
            }
        }
        out
    }

    /// Minimal horizontal period of the quiddity row; divides the order.
    pub fn period(&self) -> usize {
        let q = self.quiddity();
        let n = q.len();
        (1..=n)
            .filter(|&p| n.is_multiple_of(p))
            .find(|&p| (0..n).all(|i| q[i] == q[(i + p) % n]))
            .unwrap_or(n)
    }

    /// Staggered text grid: line `r` is row `r`, odd rows shifted by half a
    /// cell, the fundamental domain repeated `repetitions` times.
    pub fn render_ascii(&self, repetitions: usize) -> String {
        render_ascii(self, repetitions)
    }
}

/// Builds the frieze whose first non-trivial row is `q`.
///
/// Rows are produced top-down by `bottom = (left * right - 1) / top`. The band
/// rows must be positive integers and row `N - 1` must be all 1s, which
/// happens exactly when `q` is the quiddity of a triangulated `N`-gon.
pub fn from_quiddity<T: Entry>(q: &[T]) -> Result<FriezePattern<T>, FriezeError> {
    let n = q.len();
    if n < 4 {
        return Err(FriezeError::OrderTooSmall(n));
    }
    if let Some(col) = q.iter().position(|x| !scalar::is_positive(x)) {
        return Err(FriezeError::NonPositiveEntry { row: 2, col });
    }
    let mut rows = vec![vec![T::zero(); n], vec![T::one(); n], q.to_vec()];
    for row in 3..n {
        let (cur, above) = (&rows[row - 1], &rows[row - 2]);
        let mut next = Vec::with_capacity(n);
        for col in 0..n {
            let product = scalar::mul(&cur[col], &cur[(col + 1) % n])?;
            // both factors are >= 1, so this cannot underflow
            let num = product - T::one();
            // entries are continuants of q, so this is exact for integer q
            let (value, rem) = num.div_rem(&above[(col + 1) % n]);
            if !rem.is_zero() {
                return Err(FriezeError::NonIntegralEntry { row, col });
            }
            if row < n - 1 && !scalar::is_positive(&value) {
                return Err(FriezeError::NonPositiveEntry { row, col });
            }
            next.push(value);
        }
        if row == n - 1 && next.iter().any(|x| !x.is_one()) {
            return Err(FriezeError::FailsToClose { row });
        }
        rows.push(next);
    }
    rows.push(vec![T::zero(); n]);
    Ok(FriezePattern { order: n, rows })
}

/// Lays the cycle's first columns down consecutive diagonals, bordered by
/// 1s, repeating every `p` columns.
pub fn from_cycle<T: Entry>(c: &Cycle<T>) -> Result<FriezePattern<T>, FriezeError> {
    let rank = c.rank();
    let n = rank + 3;
    let members = c.members();
    let mut rows = vec![vec![T::zero(); n], vec![T::one(); n]];
    for j in 1..=rank {
        rows.push((0..n).map(|col| members[col % members.len()].col1()[j - 1].clone()).collect());
    }
    rows.push(vec![T::one(); n]);
    rows.push(vec![T::zero(); n]);
    let fp = FriezePattern { order: n, rows };
    let violations = fp.verify();
    if let Some(first) = violations.first() {
        return Err(FriezeError::InvariantViolation(format!("{first:?}")));
    }
    Ok(fp)
}

pub fn period<T: Entry>(fp: &FriezePattern<T>) -> usize {
    fp.period()
}

pub fn verify<T: Entry>(fp: &FriezePattern<T>) -> bool {
    fp.is_valid()
}

pub fn render_ascii<T: Entry>(fp: &FriezePattern<T>, repetitions: usize) -> String {
    let repetitions = repetitions.max(1);
    let n = fp.order();
    let widest = fp.rows.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
    // even cell width so that half a cell is a whole number of spaces
    let cell = (widest + 2) & !1;
    let mut out = String::new();
    for (r, _) in fp.rows.iter().enumerate() {
        let mut line = " ".repeat((r % 2) * cell / 2);
        for k in 0..n * repetitions {
            let value = fp.entry(r, k as isize + 1 - (r / 2) as isize);
            let _ = write!(line, "{value:>cell$}");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diamond::{minimal_cycle, DiamondVector};
    use num_bigint::BigUint;

    fn cycle_of(xs: &[u64]) -> Cycle<u64> {
        minimal_cycle(&DiamondVector::from_u64s(xs).unwrap().complete().unwrap()).unwrap()
    }

    // Reads a rendered grid back into its fundamental domain.
    fn parse_ascii(text: &str) -> Vec<Vec<u64>> {
        let lines: Vec<&str> = text.lines().collect();
        let n = lines.len() - 1;
        lines
            .iter()
            .enumerate()
            .map(|(r, line)| {
                let cells: Vec<u64> = line.split_whitespace().map(|t| t.parse().unwrap()).collect();
                let mut row = vec![0; n];
                for (k, v) in cells.iter().enumerate().take(n) {
                    row[(k + n * n + 1 - r / 2) % n] = *v;
                }
                row
            })
            .collect()
    }

    #[test]
    fn example_band_rows() {
        let fp = from_quiddity(&[2u64, 3, 1, 2, 3, 1]).unwrap();
        assert_eq!(fp.order(), 6);
        assert_eq!(fp.rows()[3], [5, 2, 1, 5, 2, 1]);
        assert_eq!(fp.rows()[4], [3, 1, 2, 3, 1, 2]);
        assert_eq!(fp.rows()[5], [1; 6]);
        assert!(fp.is_valid());
        assert_eq!(fp.period(), 3);
    }

    #[test]
    fn square() {
        let fp = from_quiddity(&[1u64, 2, 1, 2]).unwrap();
        assert_eq!(fp.rows().len(), 5);
        assert!(fp.is_valid());
        assert_eq!(fp.period(), 2);
    }

    #[test]
    fn rejects_non_quiddities() {
        assert_eq!(from_quiddity(&[1u64, 1, 1]), Err(FriezeError::OrderTooSmall(3)));
        assert_eq!(from_quiddity(&[1u64, 1, 1, 1]), Err(FriezeError::FailsToClose { row: 3 }));
        assert_eq!(from_quiddity(&[1u64, 1, 1, 1, 1]), Err(FriezeError::NonPositiveEntry { row: 3, col: 0 }));
        assert_eq!(from_quiddity(&[2u64, 2, 2, 2]), Err(FriezeError::FailsToClose { row: 3 }));
        assert_eq!(from_quiddity(&[1u64, 3, 1, 3, 1]), Err(FriezeError::NonPositiveEntry { row: 3, col: 4 }));
        assert_eq!(from_quiddity(&[3u64, 3, 1, 2, 1]), Err(FriezeError::FailsToClose { row: 4 }));
        assert_eq!(from_quiddity(&[0u64, 3, 1, 3]), Err(FriezeError::NonPositiveEntry { row: 2, col: 0 }));
    }

    #[test]
    fn tampered_entry_is_reported() {
        let fp = from_quiddity(&[2u64, 3, 1, 2, 3, 1]).unwrap();
        let mut rows = fp.rows().to_vec();
        rows[3][1] += 1;
        let bad = FriezePattern::from_rows_unchecked(rows);
        let v = bad.verify();
        assert!(!bad.is_valid());
        assert!(v.contains(&Violation::Rule { row: 3, col: 1, left: 3, top: 1, right: 1, bottom: 1 }));
        assert!(v.iter().any(|x| matches!(x, Violation::Glide { .. })));
        assert_eq!(FriezePattern::<u64>::from_rows_unchecked(vec![vec![0; 2]]).verify(), vec![Violation::Shape]);
    }

    #[test]
    fn frieze_from_cycles() {
        let fp = from_cycle(&cycle_of(&[1])).unwrap();
        assert_eq!(fp.quiddity(), [1, 2, 1, 2]);
        assert!(fp.is_valid());

        let c = cycle_of(&[1, 2, 3]);
        let fp = from_cycle(&c).unwrap();
        assert_eq!(fp.quiddity(), [1, 3, 2, 1, 3, 2]);
        assert_eq!(fp.rows()[3], [2, 5, 1, 2, 5, 1]);
        assert_eq!(fp.rows()[4], [3, 2, 1, 3, 2, 1]);
        assert_eq!(fp.period(), 3);
        assert_eq!(fp, from_quiddity(&c.quiddity()).unwrap());

        let c = cycle_of(&[1, 1, 1]);
        assert_eq!(c.period(), 6);
        assert_eq!(c.heads(), vec![1, 2, 2, 2, 1, 4]);
        let fp = from_cycle(&c).unwrap();
        assert_eq!(fp, from_quiddity(&[1u64, 2, 2, 2, 1, 4]).unwrap());
    }

    #[test]
    fn big_integers_work_the_same() {
        let q: Vec<BigUint> = [2u32, 3, 1, 2, 3, 1].into_iter().map(BigUint::from).collect();
        let fp = from_quiddity(&q).unwrap();
        assert!(fp.is_valid());
        assert_eq!(fp.rows()[3][0], BigUint::from(5u32));
    }

    #[test]
    fn renders_staggered_grid() {
        let fp = from_quiddity(&[1u64, 2, 1, 2]).unwrap();
        let text = fp.render_ascii(1);
        assert_eq!(text.lines().count(), 5);
        assert_eq!(text, " 0 0 0 0\n  1 1 1 1\n 1 2 1 2\n  1 1 1 1\n 0 0 0 0\n");
        assert_eq!(text, fp.render_ascii(1));

        let fp = from_quiddity(&[1u64, 2, 2, 2, 1, 4]).unwrap();
        for reps in 1..=3 {
            assert_eq!(parse_ascii(&fp.render_ascii(reps)), fp.rows());
        }
    }
}
