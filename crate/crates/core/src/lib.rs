//! Coxeter frieze patterns built from diamonds of Dynkin type A_n, and the
//! bijections between diamond vectors, Dyck paths of length `2(n + 1)` and
//! triangulations of the `(n + 3)`-gon.
//!
//! The arithmetic is generic over [`Entry`]; [`Natural`] (arbitrary
//! precision) is the default instantiation and the `*64` aliases use checked
//! `u64` arithmetic.

pub mod diamond;
pub mod dyck;
pub mod enumerate;
pub mod frieze;
pub mod report;
pub mod scalar;
pub mod triangulation;

pub use diamond::{
    check_d3, complete_diamond, couple_next, cycle_heads, minimal_cycle, Cycle, Diamond, DiamondError,
    DiamondVector,
};
pub use dyck::{
    all_paths, catalan, from_v_vector, inverse_t_map, parse_path, peaks, support, t_component, t_map,
    to_lambda, to_v_vector, unitary_shift, DyckError, DyckPath, LambdaVector, Step, TMapInverse, VGVector,
};
pub use enumerate::{
    companion_vector, cycle_object, enumerate_all, expand, f_count, f_row, seed_vector, CycleObject,
    EnumerateError,
};
pub use frieze::{from_cycle, from_quiddity, FriezeError, FriezePattern, Violation};
pub use scalar::{Entry, Overflow};
pub use triangulation::{
    all_triangulations, full_map, quiddity, realize, rotate, same_rotation_orbit, Triangulation,
    TriangulationError,
};

/// Arbitrary-precision entries; never overflow.
pub type Natural = num_bigint::BigUint;

pub type BigDiamondVector = DiamondVector<Natural>;
pub type BigDiamond = Diamond<Natural>;
pub type BigCycle = Cycle<Natural>;
pub type BigFrieze = FriezePattern<Natural>;

pub type DiamondVector64 = DiamondVector<u64>;
pub type Diamond64 = Diamond<u64>;
pub type Cycle64 = Cycle<u64>;
pub type Frieze64 = FriezePattern<u64>;
