//! Seed vectors, the expansion move, and exhaustive generation of every
//! diamond vector of a given rank.
//!
//! The seed `v_{n,z}` is `(z, z-1, ..., 2, 1, ..., 1)`; its completed second
//! column is the companion `(1, ..., 1, 2, 3, ..., n+2-z)`. The expansion
//! move inserts `a_i + a_{i+1}` after position `i` of a vector ending in 1 and
//! drops that final 1. Closing the seeds under expansion reaches all
//! `catalan(n + 1)` diamond vectors.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::diamond::{minimal_cycle, DiamondError, DiamondVector};
use crate::dyck::{t_map, DyckError, DyckPath};
use crate::scalar::{self, Entry, Overflow};
use crate::triangulation::{full_map, same_rotation_orbit, TriangulationError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerateError {
    #[error("z = {z} is outside 1..={max}")]
    RangeError { z: usize, max: usize },
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("the last entry is not 1")]
    LastEntryNotOne,
    #[error("expansion index {index} is outside 1..{rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error(transparent)]
    Diamond(#[from] DiamondError),
    #[error(transparent)]
    Dyck(#[from] DyckError),
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

fn check_z(n: usize, z: usize) -> Result<(), EnumerateError> {
    if n == 0 {
        return Err(EnumerateError::ZeroRank);
    }
    if z == 0 || z > n + 1 {
        return Err(EnumerateError::RangeError { z, max: n + 1 });
    }
    Ok(())
}

/// `a_i = z + 1 - i` for `i < z`, else 1.
pub fn seed_vector<T: Entry>(n: usize, z: usize) -> Result<DiamondVector<T>, EnumerateError> {
    check_z(n, z)?;
    let entries = (1..=n)
        .map(|i| scalar::from_usize(if i < z { z + 1 - i } else { 1 }))
        .collect::<Result<Vec<T>, _>>()?;
    Ok(DiamondVector::new(entries)?)
}

/// `b_i = 1` for `i < z`, else `i + 2 - z`.
pub fn companion_vector<T: Entry>(n: usize, z: usize) -> Result<DiamondVector<T>, EnumerateError> {
    check_z(n, z)?;
    let entries = (1..=n)
        .map(|i| scalar::from_usize(if i < z { 1 } else { i + 2 - z }))
        .collect::<Result<Vec<T>, _>>()?;
    Ok(DiamondVector::new(entries)?)
}

/// `(a_1, ..., a_i, a_i + a_{i+1}, a_{i+1}, ..., a_{n-1})` for `1 <= i < n`.
pub fn expand<T: Entry>(v: &DiamondVector<T>, i: usize) -> Result<DiamondVector<T>, EnumerateError> {
    let n = v.rank();
    let a = v.entries();
    if !a[n - 1].is_one() {
        return Err(EnumerateError::LastEntryNotOne);
    }
    if i == 0 || i >= n {
        return Err(EnumerateError::IndexOutOfRange { index: i, rank: n });
    }
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&a[..i]);
    out.push(scalar::add(&a[i - 1], &a[i])?);
    out.extend_from_slice(&a[i..n - 1]);
    Ok(DiamondVector::new(out)?)
}

/// Breadth-first closure of the seeds under [`expand`], sorted
/// lexicographically.
pub fn enumerate_all<T: Entry>(n: usize) -> Result<Vec<DiamondVector<T>>, EnumerateError> {
    if n == 0 {
        return Err(EnumerateError::ZeroRank);
    }
    let mut seen: HashSet<DiamondVector<T>> = HashSet::new();
    let mut queue = VecDeque::new();
    for z in 1..=n + 1 {
        let s = seed_vector(n, z)?;
        if seen.insert(s.clone()) {
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        if !v.entries()[n - 1].is_one() {
            continue;
        }
        for i in 1..n {
            let w = expand(&v, i)?;
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Ballot numbers from the expansion-count recurrence:
/// `f_{1,1} = f_{1,2} = 1`, `f_{n,1} = sum_{i=1}^{n} f_{n-1,i}` and
/// `f_{n,z} = sum_{i=z-1}^{n} f_{n-1,i}` for `z > 1`.
pub fn f_count<T: Entry>(n: usize, z: usize) -> Result<T, EnumerateError> {
    check_z(n, z)?;
    Ok(f_row::<T>(n)?[z - 1].clone())
}

/// `(f_{n,1}, ..., f_{n,n+1})`.
pub fn f_row<T: Entry>(n: usize) -> Result<Vec<T>, EnumerateError> {
    if n == 0 {
        return Err(EnumerateError::ZeroRank);
    }
    let mut row = vec![T::one(), T::one()];
    for m in 2..=n {
        // row holds f_{m-1, 1..=m}; suffix[i] = sum of f_{m-1, i+1..=m}
        let mut suffix = vec![T::zero(); m + 1];
        for i in (0..m).rev() {
            suffix[i] = scalar::add(&suffix[i + 1], &row[i])?;
        }
        let mut next = Vec::with_capacity(m + 1);
        next.push(suffix[0].clone());
        for z in 2..=m + 1 {
            next.push(suffix[z - 2].clone());
        }
        row = next;
    }
    Ok(row)
}

/// The Dyck paths of every member of a minimal cycle, as a multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleObject {
    summands: Vec<DyckPath>,
}

impl CycleObject {
    /// Summands in cycle order, starting from the requested vector.
    pub fn summands(&self) -> &[DyckPath] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn as_multiset(&self) -> Vec<DyckPath> {
        let mut s = self.summands.clone();
        s.sort();
        s
    }

    /// Whether the triangulations realised by all summands share one
    /// rotation orbit.
    pub fn single_orbit(&self) -> Result<bool, EnumerateError> {
        let tris = self
            .summands
            .iter()
            .map(|p| crate::triangulation::realize(&p.to_lambda()?))
            .collect::<Result<Vec<_>, TriangulationError>>()?;
        for t in &tris[1..] {
            if !same_rotation_orbit(&tris[0], t)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn cycle_object<T: Entry>(v: &DiamondVector<T>) -> Result<CycleObject, EnumerateError> {
    let cycle = minimal_cycle(&v.complete()?)?;
    let summands = cycle
        .members()
        .iter()
        .map(|d| t_map(&d.first_column()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CycleObject { summands })
}

/// Partitions the diamond vectors of rank `n` into minimal cycles, each
/// listed from its lexicographically smallest member.
pub fn all_cycles<T: Entry>(n: usize) -> Result<Vec<Vec<DiamondVector<T>>>, EnumerateError> {
    let mut covered = BTreeSet::new();
    let mut out = Vec::new();
    for v in enumerate_all::<T>(n)? {
        if covered.contains(&v) {
            continue;
        }
        let cycle = minimal_cycle(&v.complete()?)?;
        let members: Vec<_> = cycle.members().iter().map(|d| d.first_column()).collect();
        covered.extend(members.iter().cloned());
        out.push(members);
    }
    Ok(out)
}

/// Distinct rotation orbits of the triangulations realised by each cycle.
pub fn orbit_of_cycle<T: Entry>(
    members: &[DiamondVector<T>],
) -> Result<BTreeSet<crate::triangulation::Triangulation>, EnumerateError> {
    Ok(members.iter().map(full_map).collect::<Result<_, _>>()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::{catalan, parse_path};

    fn v(xs: &[u64]) -> DiamondVector<u64> {
        DiamondVector::from_u64s(xs).unwrap()
    }

    const N3_LIST: [[u64; 3]; 14] = [
        [1, 1, 1], [1, 1, 2], [1, 2, 1], [1, 2, 3], [1, 3, 2], [2, 1, 1], [2, 1, 2],
        [2, 3, 1], [2, 3, 4], [2, 5, 3], [3, 2, 1], [3, 2, 3], [3, 5, 2], [4, 3, 2],
    ];

    #[test]
    fn seeds_and_companions() {
        assert_eq!(seed_vector::<u64>(3, 1).unwrap(), v(&[1, 1, 1]));
        assert_eq!(seed_vector::<u64>(3, 4).unwrap(), v(&[4, 3, 2]));
        assert_eq!(seed_vector::<u64>(1, 1).unwrap(), v(&[1]));
        assert_eq!(seed_vector::<u64>(1, 2).unwrap(), v(&[2]));
        assert_eq!(seed_vector::<u64>(4, 3).unwrap(), v(&[3, 2, 1, 1]));
        assert_eq!(companion_vector::<u64>(4, 3).unwrap(), v(&[1, 1, 2, 3]));
        assert_eq!(companion_vector::<u64>(1, 1).unwrap(), v(&[2]));
        assert_eq!(seed_vector::<u64>(3, 5), Err(EnumerateError::RangeError { z: 5, max: 4 }));
        assert_eq!(companion_vector::<u64>(3, 0), Err(EnumerateError::RangeError { z: 0, max: 4 }));
    }

    #[test]
    fn seed_and_companion_couple() {
        for n in 1..=8 {
            for z in 1..=n + 1 {
                let d = seed_vector::<u64>(n, z).unwrap().complete().unwrap();
                assert_eq!(d.second_column(), companion_vector(n, z).unwrap(), "n={n} z={z}");
            }
        }
    }

    #[test]
    fn expansions() {
        assert_eq!(expand(&v(&[1, 2, 1]), 2).unwrap(), v(&[1, 2, 3]));
        assert_eq!(expand(&v(&[2, 3, 1]), 1).unwrap(), v(&[2, 5, 3]));
        assert_eq!(expand(&v(&[1, 1, 1]), 1).unwrap(), v(&[1, 2, 1]));
        assert_eq!(expand(&v(&[1, 2, 3]), 1), Err(EnumerateError::LastEntryNotOne));
        assert_eq!(expand(&v(&[1, 2, 1]), 3), Err(EnumerateError::IndexOutOfRange { index: 3, rank: 3 }));
        assert!(expand(&v(&[1, 2, 1]), 2).unwrap().complete().is_ok());
    }

    #[test]
    fn enumerates_rank_three_exactly() {
        let all = enumerate_all::<u64>(3).unwrap();
        let got: Vec<Vec<u64>> = all.iter().map(|v| v.entries().to_vec()).collect();
        assert_eq!(got, N3_LIST.map(|a| a.to_vec()).to_vec());
        assert_eq!(enumerate_all::<u64>(1).unwrap(), vec![v(&[1]), v(&[2])]);
        assert_eq!(enumerate_all::<u64>(5).unwrap().len(), 132);
    }

    #[test]
    fn ballot_rows() {
        assert_eq!(f_row::<u64>(1).unwrap(), [1, 1]);
        // (f_{3,1}, f_{3,2}, f_{3,3}, f_{3,4})
        assert_eq!(f_row::<u64>(3).unwrap(), [5, 5, 3, 1]);
        assert_eq!(f_count::<u64>(3, 2).unwrap(), 5);
        for n in 1..=10 {
            let s: u64 = f_row::<u64>(n).unwrap().iter().sum();
            assert_eq!(s, catalan::<u64>(n + 1).unwrap());
        }
        assert_eq!(f_count::<u64>(2, 4), Err(EnumerateError::RangeError { z: 4, max: 3 }));
    }

    #[test]
    fn cycle_objects() {
        let obj = cycle_object(&v(&[1, 2, 3])).unwrap();
        assert_eq!(obj.len(), 3);
        assert!(obj.summands().iter().all(|p| p.len() == 8));
        assert!(obj.single_orbit().unwrap());

        let obj = cycle_object(&v(&[1])).unwrap();
        assert_eq!(obj.summands(), [parse_path("UDUD").unwrap(), parse_path("UUDD").unwrap()]);
    }

    #[test]
    fn cycles_partition_the_enumeration() {
        for n in 1..=6 {
            let cycles = all_cycles::<u64>(n).unwrap();
            let total: usize = cycles.iter().map(Vec::len).sum();
            assert_eq!(total, enumerate_all::<u64>(n).unwrap().len());
            for c in &cycles {
                assert_eq!((n + 3) % c.len(), 0);
                assert_eq!(orbit_of_cycle(c).unwrap().len(), c.len());
            }
        }
    }
}
