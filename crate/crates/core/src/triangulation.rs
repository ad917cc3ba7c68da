//! Triangulations of a convex polygon with labelled vertices `0..N`.
//!
//! A triangulation is stored as its set of diagonals. The realisation of a
//! lambda-vector keeps the not-yet-cut vertices in an ordered list of
//! original labels: step `i` joins the vertices sitting at positions `l_i`
//! and `l_i + 2` and cuts off the ear at position `l_i + 1`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::diamond::DiamondVector;
use crate::dyck::{t_map, DyckError, LambdaVector};
use crate::scalar::Entry;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TriangulationError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("expected {expected} diagonals, got {found}")]
    WrongCount { expected: usize, found: usize },
    #[error("{0}-{1} is not a diagonal of the polygon")]
    NotADiagonal(usize, usize),
    #[error("diagonals {0:?} and {1:?} cross")]
    Crossing((usize, usize), (usize, usize)),
    #[error("step {step}: position {position} is outside a polygon of {size} vertices")]
    PositionOutOfRange { step: usize, position: usize, size: usize },
    #[error("polygons of different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("cannot parse triangulation: {0}")]
    Parse(String),
    #[error(transparent)]
    Dyck(#[from] DyckError),
}

/// `N - 3` pairwise non-crossing diagonals of a convex `N`-gon.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    size: usize,
    diagonals: BTreeSet<(usize, usize)>,
}

fn norm(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Strict interleaving on the circle; shared endpoints do not cross.
pub fn crosses(d: (usize, usize), e: (usize, usize)) -> bool {
    let (a, b) = norm(d.0, d.1);
    let inside = |x: usize| a < x && x < b;
    let (c, e2) = e;
    if c == a || c == b || e2 == a || e2 == b {
        return false;
    }
    inside(c) != inside(e2)
}

impl Triangulation {
    pub fn new(
        size: usize,
        diagonals: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, TriangulationError> {
        if size < 3 {
            return Err(TriangulationError::TooSmall(size));
        }
        let list: Vec<(usize, usize)> = diagonals.into_iter().map(|(a, b)| norm(a, b)).collect();
        for &(a, b) in &list {
            let gap = b - a;
            if b >= size || gap <= 1 || gap == size - 1 {
                return Err(TriangulationError::NotADiagonal(a, b));
            }
        }
        let set: BTreeSet<_> = list.iter().copied().collect();
        if list.len() != size - 3 || set.len() != list.len() {
            return Err(TriangulationError::WrongCount { expected: size - 3, found: set.len() });
        }
        let v: Vec<_> = set.iter().copied().collect();
        for (i, &d) in v.iter().enumerate() {
            for &e in &v[i + 1..] {
                if crosses(d, e) {
                    return Err(TriangulationError::Crossing(d, e));
                }
            }
        }
        Ok(Self { size, diagonals: set })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn diagonals(&self) -> &BTreeSet<(usize, usize)> {
        &self.diagonals
    }

    pub fn quiddity(&self) -> Vec<usize> {
        quiddity(self)
    }

    pub fn rotate(&self, k: isize) -> Triangulation {
        rotate(self, k)
    }

    /// All distinct rotations of `self`.
    pub fn orbit(&self) -> BTreeSet<Triangulation> {
        (0..self.size as isize).map(|k| rotate(self, k)).collect()
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={};", self.size)?;
        for (i, (a, b)) in self.diagonals.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { "," })?;
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

impl FromStr for Triangulation {
    type Err = TriangulationError;

    /// Parses `"N=6; 1-5,2-4,2-5"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || TriangulationError::Parse(s.to_string());
        let (head, tail) = s.split_once(';').ok_or_else(bad)?;
        let size = head.trim().strip_prefix("N=").ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let mut diagonals = Vec::new();
        for tok in tail.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = tok.split_once('-').ok_or_else(bad)?;
            diagonals.push((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?));
        }
        Triangulation::new(size, diagonals)
    }
}

/// Triangulation of the `(n + 3)`-gon realised by a lambda-vector of length `n`.
pub fn realize(lambda: &LambdaVector) -> Result<Triangulation, TriangulationError> {
    let n = lambda.0.len();
    let mut active: Vec<usize> = (0..n + 3).collect();
    let mut diagonals = Vec::with_capacity(n);
    for (step, &pos) in lambda.0.iter().enumerate() {
        if pos + 2 >= active.len() {
            return Err(TriangulationError::PositionOutOfRange {
                step: step + 1,
                position: pos + 2,
                size: active.len(),
            });
        }
        diagonals.push(norm(active[pos], active[pos + 2]));
        active.remove(pos + 1);
    }
    Triangulation::new(n + 3, diagonals)
}

/// Number of triangles at each vertex: one more than its diagonal count.
pub fn quiddity(t: &Triangulation) -> Vec<usize> {
    let mut q = vec![1; t.size];
    for &(a, b) in &t.diagonals {
        q[a] += 1;
        q[b] += 1;
    }
    q
}

/// Relabels vertex `l` as `l + k (mod N)`. `k = -1` is one anti-clockwise
/// rotation.
pub fn rotate(t: &Triangulation, k: isize) -> Triangulation {
    let n = t.size as isize;
    let shift = |x: usize| (x as isize + k).rem_euclid(n) as usize;
    Triangulation {
        size: t.size,
        diagonals: t.diagonals.iter().map(|&(a, b)| norm(shift(a), shift(b))).collect(),
    }
}

pub fn same_rotation_orbit(t1: &Triangulation, t2: &Triangulation) -> Result<bool, TriangulationError> {
    if t1.size != t2.size {
        return Err(TriangulationError::SizeMismatch(t1.size, t2.size));
    }
    Ok((0..t1.size as isize).any(|k| rotate(t1, k) == *t2))
}

/// Diamond vector, to Dyck path, to lambda-vector, to triangulation.
pub fn full_map<T: Entry>(v: &DiamondVector<T>) -> Result<Triangulation, TriangulationError> {
    let path = t_map(v)?;
    realize(&path.to_lambda()?)
}

/// Every triangulation of the `N`-gon, generated independently of the
/// lambda realisation by splitting on the triangle over the edge `0-(N-1)`.
pub fn all_triangulations(size: usize) -> Vec<Triangulation> {
    type Memo = HashMap<(usize, usize), Vec<Vec<(usize, usize)>>>;

    // Diagonal sets triangulating the sub-polygon on vertices i..=j.
    fn sub(i: usize, j: usize, memo: &mut Memo) -> Vec<Vec<(usize, usize)>> {
        if j - i < 2 {
            return vec![Vec::new()];
        }
        if let Some(v) = memo.get(&(i, j)) {
            return v.clone();
        }
        let mut out = Vec::new();
        for apex in i + 1..j {
            let left = sub(i, apex, memo);
            let right = sub(apex, j, memo);
            for l in &left {
                for r in &right {
                    let mut d = Vec::with_capacity(l.len() + r.len() + 2);
                    d.extend_from_slice(l);
                    d.extend_from_slice(r);
                    if apex - i > 1 {
                        d.push((i, apex));
                    }
                    if j - apex > 1 {
                        d.push((apex, j));
                    }
                    out.push(d);
                }
            }
        }
        memo.insert((i, j), out.clone());
        out
    }

    if size < 3 {
        return Vec::new();
    }
    let mut memo = Memo::new();
    let mut all: Vec<Triangulation> = sub(0, size - 1, &mut memo)
        .into_iter()
        .map(|d| Triangulation { size, diagonals: d.into_iter().collect() })
        .collect();
    all.sort();
    all
}
