//! Dyck words, their vector encodings, and the map from diamond vectors to
//! Dyck paths.
//!
//! A Dyck word is a balanced word over `{U, D}` in which no prefix has more
//! `D`s than `U`s. Two encodings are used:
//!
//! * the *v-vector* `(v_1, ..., v_{k-1})` of a path of length `2k`, with
//!   `v_i = m_i - i + 1` where `m_i` counts the `U`s before the `i`-th `D`
//!   (the final `D` is not encoded);
//! * the *lambda-vector* `(l_1, ..., l_n)` of a path of length `2(n + 1)`,
//!   where `l_i` counts the `D`s before the `(n + 2 - i)`-th `U`.
//!
//! [`t_map`] sends a diamond vector `u` to the path whose v-vector is
//! `(T_1(u), ..., T_n(u))`, see [`t_component`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::diamond::DiamondVector;
use crate::enumerate::{enumerate_all, EnumerateError};
use crate::scalar::{self, Entry, Overflow};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DyckError {
    #[error("unequal numbers of U and D")]
    NotBalanced,
    #[error("prefix ending at position {position} has more D than U")]
    PrefixViolation { position: usize },
    #[error("symbol at position {position} is neither U nor D")]
    BadSymbol { position: usize },
    #[error("path of half-length {half_length} is too short for this operation")]
    TooShort { half_length: usize },
    #[error("block index {index} is out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("not a valid v-vector: {0:?}")]
    InvalidVG(Vec<usize>),
    #[error("path has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("no diamond vector maps to {0}")]
    NotInRange(String),
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
}

/// A validated Dyck word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn from_steps(steps: Vec<Step>) -> Result<Self, DyckError> {
        let mut height = 0isize;
        for (i, s) in steps.iter().enumerate() {
            height += if *s == Step::U { 1 } else { -1 };
            if height < 0 {
                return Err(DyckError::PrefixViolation { position: i + 1 });
            }
        }
        if height != 0 {
            return Err(DyckError::NotBalanced);
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn half_length(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn peaks(&self) -> usize {
        peaks(self)
    }

    pub fn to_v_vector(&self) -> Result<VGVector, DyckError> {
        to_v_vector(self)
    }

    pub fn to_lambda(&self) -> Result<LambdaVector, DyckError> {
        to_lambda(self)
    }
}

/// Parses a word over `{U, D}` (either case).
///
/// Checks run left to right, so a bad symbol or an early dip below the
/// diagonal is reported before an overall imbalance.
pub fn parse_path(text: &str) -> Result<DyckPath, DyckError> {
    let steps = text
        .chars()
        .enumerate()
        .map(|(i, c)| match c {
            'U' | 'u' => Ok(Step::U),
            'D' | 'd' => Ok(Step::D),
            _ => Err(DyckError::BadSymbol { position: i + 1 }),
        })
        .collect::<Result<Vec<_>, _>>()?;
    DyckPath::from_steps(steps)
}

impl FromStr for DyckPath {
    type Err = DyckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_path(s)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::U => "U",
                Step::D => "D",
            })?;
        }
        Ok(())
    }
}

/// All Dyck paths of length `2k`, in lexicographic order with `U < D`.
pub fn all_paths(k: usize) -> Vec<DyckPath> {
    fn go(k: usize, ups: usize, downs: usize, word: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if downs == k {
            out.push(DyckPath { steps: word.clone() });
            return;
        }
        if ups < k {
            word.push(Step::U);
            go(k, ups + 1, downs, word, out);
            word.pop();
        }
        if downs < ups {
            word.push(Step::D);
            go(k, ups, downs + 1, word, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    go(k, 0, 0, &mut Vec::with_capacity(2 * k), &mut out);
    out
}

/// The Catalan number `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan<T: Entry>(n: usize) -> Result<T, Overflow> {
    // C_{k+1} = C_k * 2(2k + 1) / (k + 2); the division is exact.
    let mut c = T::one();
    for k in 0..n {
        let num = scalar::mul(&c, &scalar::from_usize(2 * (2 * k + 1))?)?;
        c = num / scalar::from_usize(k + 2)?;
    }
    Ok(c)
}

/// Number of `UD` factors.
pub fn peaks(p: &DyckPath) -> usize {
    p.steps.windows(2).filter(|w| w == &[Step::U, Step::D]).count()
}

fn check_blocks(p: &DyckPath) -> Result<usize, DyckError> {
    let n = p.half_length();
    if n < 2 {
        return Err(DyckError::TooShort { half_length: n });
    }
    Ok(n - 1)
}

// Block w_q (1-based) of the factorisation U w_1 ... w_{n-1} D.
fn block(p: &DyckPath, q: usize) -> [Step; 2] {
    [p.steps[2 * q - 1], p.steps[2 * q]]
}

/// Indices `q` whose block `w_q` in `U w_1 ... w_{n-1} D` is `UD` or `UU`,
/// i.e. starts with `U`.
pub fn support(p: &DyckPath) -> Result<BTreeSet<usize>, DyckError> {
    let blocks = check_blocks(p)?;
    Ok((1..=blocks).filter(|&q| block(p, q)[0] == Step::U).collect())
}

/// Reverses block `w_i`.
///
/// The height entering a block is odd, hence at least 1, so the result is
/// again a Dyck path.
pub fn unitary_shift(p: &DyckPath, i: usize) -> Result<DyckPath, DyckError> {
    let blocks = check_blocks(p)?;
    if i == 0 || i > blocks {
        return Err(DyckError::IndexOutOfRange { index: i, max: blocks });
    }
    let mut steps = p.steps.clone();
    steps.swap(2 * i - 1, 2 * i);
    let shifted = DyckPath::from_steps(steps);
    debug_assert!(shifted.is_ok(), "unitary shift left the Dyck set");
    shifted
}

/// `(v_1, ..., v_{k-1})` for a path of length `2k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VGVector(pub Vec<usize>);

/// `(l_1, ..., l_n)` for a path of length `2(n + 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LambdaVector(pub Vec<usize>);

impl VGVector {
    pub fn entries(&self) -> &[usize] {
        &self.0
    }
}

impl LambdaVector {
    pub fn entries(&self) -> &[usize] {
        &self.0
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for VGVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl fmt::Display for LambdaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

pub fn to_v_vector(p: &DyckPath) -> Result<VGVector, DyckError> {
    let k = p.half_length();
    if k == 0 {
        return Err(DyckError::TooShort { half_length: 0 });
    }
    let mut out = Vec::with_capacity(k - 1);
    let mut ups = 0;
    for s in &p.steps {
        match s {
            Step::U => ups += 1,
            Step::D => {
                if out.len() == k - 1 {
                    break;
                }
                let i = out.len() + 1;
                out.push(ups + 1 - i);
            }
        }
    }
    Ok(VGVector(out))
}

/// Inverse of [`to_v_vector`]: `m_i - m_{i-1}` `U`s before the `i`-th `D`,
/// then the remaining `U`s and the final `D`.
pub fn from_v_vector(v: &VGVector) -> Result<DyckPath, DyckError> {
    let k = v.0.len() + 1;
    let invalid = || DyckError::InvalidVG(v.0.clone());
    let mut steps = Vec::with_capacity(2 * k);
    let mut prev = 0usize;
    for (idx, &vi) in v.0.iter().enumerate() {
        let m = vi + idx;
        if vi == 0 || m < prev || m > k {
            return Err(invalid());
        }
        steps.extend(std::iter::repeat_n(Step::U, m - prev));
        steps.push(Step::D);
        prev = m;
    }
    steps.extend(std::iter::repeat_n(Step::U, k - prev));
    steps.push(Step::D);
    DyckPath::from_steps(steps).map_err(|_| invalid())
}

/// `l_i` = number of `D`s before the `(n + 2 - i)`-th `U`.
pub fn to_lambda(p: &DyckPath) -> Result<LambdaVector, DyckError> {
    let half = p.half_length();
    if half < 2 {
        return Err(DyckError::TooShort { half_length: half });
    }
    let n = half - 1;
    // downs_before_up[r] = D count before the (r+1)-th U
    let mut downs_before_up = Vec::with_capacity(half);
    let mut downs = 0;
    for s in &p.steps {
        match s {
            Step::U => downs_before_up.push(downs),
            Step::D => downs += 1,
        }
    }
    Ok(LambdaVector((1..=n).map(|i| downs_before_up[n + 1 - i]).collect()))
}

/// `T_i(u)` for 1-based `i`.
///
/// Starting from `r = u_i`, subtract `u_l` for the largest `l <= i` with
/// `r - u_l > 0`, and repeat until no such `l` remains. After `t`
/// subtractions the value is `r + t`; with no subtraction it is `u_i`.
///
/// Runs of subtractions against the same `l` are taken in one division:
/// once `l` is the largest admissible index, every larger index already has
/// `u_l' >= r`, and `r` only decreases.
pub fn t_component<T: Entry>(u: &[T], i: usize) -> T {
    assert!(i >= 1 && i <= u.len(), "index {i} out of range 1..={}", u.len());
    let prefix = &u[..i];
    let mut r = prefix[i - 1].clone();
    let mut t = T::zero();
    let mut l = i;
    while l > 0 {
        let a = &prefix[l - 1];
        if r > *a {
            // k = number of subtractions keeping r > a after each one, plus the
            // last one that brings r into (0, a].
            let k = (r.clone() - T::one()) / a.clone();
            r = r - k.clone() * a.clone();
            t = t + k;
        }
        l -= 1;
    }
    r + t
}

/// Map from diamond vectors to Dyck paths of length `2(n + 1)`.
pub fn t_map<T: Entry>(v: &DiamondVector<T>) -> Result<DyckPath, DyckError> {
    let u = v.entries();
    let vg = (1..=u.len())
        .map(|i| t_component(u, i).to_usize().ok_or(Overflow))
        .collect::<Result<Vec<_>, _>>()?;
    from_v_vector(&VGVector(vg))
}

/// Precomputed inverse of [`t_map`] for one rank.
#[derive(Debug, Clone)]
pub struct TMapInverse<T> {
    rank: usize,
    table: HashMap<DyckPath, DiamondVector<T>>,
}

impl<T: Entry> TMapInverse<T> {
    pub fn new(n: usize) -> Result<Self, DyckError> {
        let vectors = enumerate_all::<T>(n).map_err(|e| match e {
            EnumerateError::Overflow(o) => DyckError::Overflow(o),
            other => DyckError::NotInRange(other.to_string()),
        })?;
        let mut table = HashMap::with_capacity(vectors.len());
        for v in vectors {
            table.insert(t_map(&v)?, v);
        }
        Ok(Self { rank: n, table })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, p: &DyckPath) -> Result<DiamondVector<T>, DyckError> {
        let expected = 2 * (self.rank + 1);
        if p.len() != expected {
            return Err(DyckError::LengthMismatch { expected, found: p.len() });
        }
        self.table.get(p).cloned().ok_or_else(|| DyckError::NotInRange(p.to_string()))
    }
}

pub fn inverse_t_map<T: Entry>(p: &DyckPath, n: usize) -> Result<DiamondVector<T>, DyckError> {
    let expected = 2 * (n + 1);
    if p.len() != expected {
        return Err(DyckError::LengthMismatch { expected, found: p.len() });
    }
    TMapInverse::new(n)?.get(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn path(s: &str) -> DyckPath {
        parse_path(s).unwrap()
    }

    const FIG41: &str = "UUUUUDDDUDUUUDDDDD";

    // The subtraction loop exactly as worded: one subtraction per step,
    // always against the largest admissible index.
    fn t_literal(u: &[u64], i: usize) -> u64 {
        let prefix = &u[..i];
        let mut r = u[i - 1];
        let mut t = 0;
        while let Some(l) = (0..i).rev().find(|&l| r > prefix[l]) {
            r -= prefix[l];
            t += 1;
        }
        r + t
    }

    #[test]
    fn parses_and_rejects() {
        let p = path("UDUDUUDD");
        assert_eq!(p.half_length(), 4);
        assert_eq!(path("ud").to_string(), "UD");
        assert_eq!(parse_path("UDDU"), Err(DyckError::PrefixViolation { position: 3 }));
        assert_eq!(parse_path("UUD"), Err(DyckError::NotBalanced));
        assert_eq!(parse_path("UXD"), Err(DyckError::BadSymbol { position: 2 }));
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan::<u64>(0), Ok(1));
        assert_eq!(catalan::<u64>(4), Ok(14));
        assert_eq!(catalan::<u64>(9), Ok(4862));
        assert_eq!(catalan::<u8>(9), Err(Overflow));
        assert_eq!(catalan::<BigUint>(30).unwrap(), BigUint::from(3814986502092304u64));
    }

    #[test]
    fn exhaustive_path_counts_match_catalan() {
        for k in 0..=10 {
            assert_eq!(all_paths(k).len() as u64, catalan::<u64>(k).unwrap());
        }
        let six: Vec<String> = all_paths(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(six, ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]);
    }

    #[test]
    fn peak_counts() {
        assert_eq!(peaks(&path("UDUDUD")), 3);
        assert_eq!(peaks(&path("UUUDDD")), 1);
        assert_eq!(all_paths(3).iter().filter(|p| peaks(p) == 2).count(), 3);
    }

    #[test]
    fn supports() {
        assert_eq!(support(&path("UUDD")).unwrap(), BTreeSet::from([1]));
        assert!(support(&path("UDUDUD")).unwrap().is_empty());
        assert_eq!(support(&path("UUDUDD")).unwrap(), BTreeSet::from([1, 2]));
        assert_eq!(support(&path("UD")), Err(DyckError::TooShort { half_length: 1 }));
    }

    #[test]
    fn shifts() {
        assert_eq!(unitary_shift(&path("UUDD"), 1).unwrap(), path("UDUD"));
        assert_eq!(unitary_shift(&path("UDUDUD"), 1).unwrap(), path("UUDDUD"));
        assert_eq!(
            unitary_shift(&path("UDUDUD"), 3),
            Err(DyckError::IndexOutOfRange { index: 3, max: 2 })
        );
        assert!(matches!(unitary_shift(&path("UDUD"), 0), Err(DyckError::IndexOutOfRange { .. })));
    }

    #[test]
    fn v_vectors() {
        assert_eq!(path(FIG41).to_v_vector().unwrap(), VGVector(vec![5, 4, 3, 3, 5, 4, 3, 2]));
        assert_eq!(from_v_vector(&VGVector(vec![5, 4, 3, 3, 5, 4, 3, 2])).unwrap(), path(FIG41));
        assert_eq!(path("UDUD").to_v_vector().unwrap(), VGVector(vec![1]));
        assert_eq!(path("UD").to_v_vector().unwrap(), VGVector(vec![]));
        assert!(matches!(from_v_vector(&VGVector(vec![3])), Err(DyckError::InvalidVG(_))));
        assert!(matches!(from_v_vector(&VGVector(vec![2, 0])), Err(DyckError::InvalidVG(_))));
        // m = (3, 2) decreases
        assert!(matches!(from_v_vector(&VGVector(vec![3, 1])), Err(DyckError::InvalidVG(_))));
        for k in 1..=6 {
            for p in all_paths(k) {
                assert_eq!(from_v_vector(&p.to_v_vector().unwrap()).unwrap(), p);
            }
        }
    }

    #[test]
    fn lambda_vectors() {
        assert_eq!(path(FIG41).to_lambda().unwrap(), LambdaVector(vec![4, 4, 4, 3, 0, 0, 0, 0]));
        assert_eq!(path("UDUDUUDD").to_lambda().unwrap(), LambdaVector(vec![2, 2, 1]));
        assert_eq!(path("UUUUDDDD").to_lambda().unwrap(), LambdaVector(vec![0, 0, 0]));
        for k in 2..=8 {
            for p in all_paths(k) {
                let l = p.to_lambda().unwrap().0;
                assert!(l.windows(2).all(|w| w[0] >= w[1]));
                assert!(l.iter().all(|&x| x <= k));
            }
        }
    }

    #[test]
    fn t_components() {
        let u = [14u64, 52, 4, 23, 9, 2];
        let t: Vec<u64> = (1..=6).map(|i| t_component(&u, i)).collect();
        assert_eq!(t, [14, 13, 4, 8, 3, 2]);
        assert!((1..=3).all(|i| t_component(&[1u64, 1, 1], i) == 1));
        let u = [2u64, 3, 4, 1, 1];
        let t: Vec<u64> = (1..=5).map(|i| t_component(&u, i)).collect();
        assert_eq!(t, [2, 2, 2, 1, 1]);
    }

    #[test]
    fn t_map_examples() {
        let v = |xs: &[u64]| DiamondVector::<u64>::from_u64s(xs).unwrap();
        assert_eq!(t_map(&v(&[2, 3, 4, 1])).unwrap(), path("UUDUDUDDUD"));
        assert_eq!(t_map(&v(&[1, 1, 1, 1])).unwrap(), path("UDUDUDUDUD"));
        assert_eq!(t_map(&v(&[1])).unwrap(), path("UDUD"));
        assert_eq!(t_map(&v(&[2])).unwrap(), path("UUDD"));
    }

    #[test]
    fn inverse_t_map_examples() {
        let inv = inverse_t_map::<u64>(&path("UUDUDUDDUD"), 4).unwrap();
        assert_eq!(inv.entries(), &[2, 3, 4, 1]);
        let inv = inverse_t_map::<u64>(&path("UDUDUDUDUDUD"), 5).unwrap();
        assert_eq!(inv.entries(), &[1, 1, 1, 1, 1]);
        assert_eq!(
            inverse_t_map::<u64>(&path("UDUD"), 4),
            Err(DyckError::LengthMismatch { expected: 10, found: 4 })
        );
    }

    proptest! {
        #[test]
        fn batched_t_matches_literal_loop(u in prop::collection::vec(1u64..200, 1..8)) {
            for i in 1..=u.len() {
                prop_assert_eq!(t_component(&u, i), t_literal(&u, i));
            }
        }

        #[test]
        fn shift_is_an_involution(k in 2usize..9, seed in any::<prop::sample::Index>(), q in any::<prop::sample::Index>()) {
            let paths = all_paths(k);
            let p = &paths[seed.index(paths.len())];
            let i = 1 + q.index(k - 1);
            let s = unitary_shift(p, i).unwrap();
            prop_assert_eq!(unitary_shift(&s, i).unwrap(), p.clone());
        }
    }
}
