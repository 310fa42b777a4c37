//! Exact rational linear algebra: scalars, matrices, canonical subspaces,
//! and the closure operators (`spin`, `envelope`) used by the algebra
//! modules. Everything is immutable after construction and pure.

pub mod matrix;
pub mod poly;
pub mod rat;
pub mod subspace;
pub mod trilinear;

pub use matrix::{solve_linear, RatMatrix, Rref, Solution};
pub use rat::{ParseRatError, Rat};
pub use subspace::{envelope, spin, QuotientMap, SpanBuilder, Subspace};
pub use trilinear::Trilinear;

use alloc::vec;
use alloc::vec::Vec;

pub fn vec_zero(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

/// Standard basis vector e_i in dimension n.
pub fn basis_vec(n: usize, i: usize) -> Vec<Rat> {
    assert!(i < n);
    let mut v = vec_zero(n);
    v[i] = Rat::one();
    v
}

pub fn vec_from_ints(xs: &[i64]) -> Vec<Rat> {
    xs.iter().map(|&n| Rat::from(n)).collect()
}

pub fn vec_is_zero(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_neg(a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| -x).collect()
}

pub fn vec_scale(c: &Rat, a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| c * x).collect()
}
