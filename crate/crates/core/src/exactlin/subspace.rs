//! Subspaces canonicalized to reduced row-echelon bases, plus the two
//! closure operators the whole crate leans on: `spin` (smallest invariant
//! subspace) and `envelope` (smallest unital operator algebra).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::matrix::RatMatrix;
use super::rat::Rat;
use super::{vec_is_zero, vec_zero};

/// Incrementally maintained RREF basis. Rows are kept sorted by pivot
/// column, pivots are 1, and pivot columns are cleared in all other rows,
/// so the accumulated basis is always the canonical one.
pub struct SpanBuilder {
    ambient: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl SpanBuilder {
    pub fn new(ambient: usize) -> Self {
        SpanBuilder {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current basis in place.
    fn reduce(&self, v: &mut [Rat]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &(&c * r);
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        vec_is_zero(&w)
    }

    /// Inserts `v` into the span. Returns `true` when the dimension grew.
    pub fn insert(&mut self, v: Vec<Rat>) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let mut v = v;
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        // Clear the new pivot column in the existing rows.
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    if !r.is_zero() {
                        *x -= &(&c * r);
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace {
            ambient: self.ambient,
            rows: self.rows,
            pivots: self.pivots,
        }
    }
}

/// A linear subspace of Q^n held as its unique reduced row-echelon basis.
/// Two subspaces are equal exactly when their basis matrices coincide.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        SpanBuilder::new(ambient).into_subspace()
    }

    pub fn full(ambient: usize) -> Self {
        let mut b = SpanBuilder::new(ambient);
        for i in 0..ambient {
            let mut v = vec_zero(ambient);
            v[i] = Rat::one();
            b.insert(v);
        }
        b.into_subspace()
    }

    pub fn from_rows<I>(ambient: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rat>>,
    {
        let mut b = SpanBuilder::new(ambient);
        for r in rows {
            b.insert(r);
        }
        b.into_subspace()
    }

    pub fn from_int_rows(ambient: usize, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            ambient,
            rows.iter()
                .map(|r| r.iter().map(|&n| Rat::from(n)).collect()),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis_rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its pivot-coordinate combination of basis rows; zero iff
    /// `v` lies in the subspace.
    pub fn reduce_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let c = w[p].clone();
                for (x, r) in w.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &(&c * r);
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        vec_is_zero(&self.reduce_vec(v))
    }

    /// Coordinates of `v` in the RREF basis, when `v` is a member.
    pub fn coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut b = SpanBuilder::new(self.ambient);
        for r in self.rows.iter().chain(&other.rows) {
            b.insert(r.clone());
        }
        b.into_subspace()
    }

    /// Intersection via the kernel of the system expressing a common vector
    /// as a combination of both bases.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let (da, db) = (self.dim(), other.dim());
        if da == 0 || db == 0 {
            return Subspace::zero(self.ambient);
        }
        // Columns are the basis vectors of both subspaces.
        let mut m = RatMatrix::zero(self.ambient, da + db);
        for (j, r) in self.rows.iter().enumerate() {
            for i in 0..self.ambient {
                *m.at_mut(i, j) = r[i].clone();
            }
        }
        for (j, r) in other.rows.iter().enumerate() {
            for i in 0..self.ambient {
                *m.at_mut(i, da + j) = r[i].clone();
            }
        }
        let mut b = SpanBuilder::new(self.ambient);
        for k in m.kernel() {
            let mut w = vec_zero(self.ambient);
            for (j, r) in self.rows.iter().enumerate() {
                if !k[j].is_zero() {
                    for i in 0..self.ambient {
                        if !r[i].is_zero() {
                            w[i] += &(&k[j] * &r[i]);
                        }
                    }
                }
            }
            b.insert(w);
        }
        b.into_subspace()
    }

    /// Ambient coordinates that are not pivot columns; these index a
    /// complement basis used for quotient constructions.
    pub fn complement_coords(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.dim());
        let mut next = 0;
        for c in 0..self.ambient {
            if next < self.pivots.len() && self.pivots[next] == c {
                next += 1;
            } else {
                out.push(c);
            }
        }
        out
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of {}; basis ", self.dim(), self.ambient)?;
        f.debug_list()
            .entries(self.rows.iter().map(|r| alloc::format!("{r:?}")))
            .finish()?;
        write!(f, ")")
    }
}

/// Projection onto the complement-of-pivot coordinates modulo a subspace,
/// with the canonical section back. `project . section = id`.
#[derive(Clone)]
pub struct QuotientMap {
    sub: Subspace,
    complement: Vec<usize>,
}

impl QuotientMap {
    pub fn new(sub: Subspace) -> Self {
        let complement = sub.complement_coords();
        QuotientMap { sub, complement }
    }

    pub fn subspace(&self) -> &Subspace {
        &self.sub
    }

    pub fn ambient_dim(&self) -> usize {
        self.sub.ambient_dim()
    }

    pub fn quotient_dim(&self) -> usize {
        self.complement.len()
    }

    pub fn project(&self, v: &[Rat]) -> Vec<Rat> {
        let r = self.sub.reduce_vec(v);
        self.complement.iter().map(|&c| r[c].clone()).collect()
    }

    /// Canonical representative of a quotient vector: supported on the
    /// complement coordinates.
    pub fn section(&self, q: &[Rat]) -> Vec<Rat> {
        assert_eq!(q.len(), self.complement.len());
        let mut v = vec_zero(self.sub.ambient_dim());
        for (x, &c) in q.iter().zip(&self.complement) {
            v[c] = x.clone();
        }
        v
    }
}

/// Smallest subspace containing `seeds` and invariant under every operator.
///
/// Panics if the closure fails to stabilize within `ambient + 1` rounds,
/// which is impossible when the arithmetic is sound.
pub fn spin(ambient: usize, seeds: &[Vec<Rat>], ops: &[RatMatrix]) -> Subspace {
    for op in ops {
        assert_eq!(op.rows(), ambient, "operator shape mismatch");
        assert_eq!(op.cols(), ambient, "operator shape mismatch");
    }
    let mut b = SpanBuilder::new(ambient);
    let mut frontier: Vec<Vec<Rat>> = Vec::new();
    for s in seeds {
        if b.insert(s.clone()) {
            frontier.push(s.clone());
        }
    }
    let mut rounds = 0;
    while !frontier.is_empty() {
        rounds += 1;
        assert!(rounds <= ambient + 1, "spin closure failed to stabilize");
        let mut next = Vec::new();
        for v in &frontier {
            for op in ops {
                let w = op.mat_vec(v);
                if b.insert(w.clone()) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    b.into_subspace()
}

/// Basis of the smallest unital subalgebra of End(Q^dim) containing the
/// operators, as a subspace of the dim^2-dimensional operator space
/// (row-major flattening). Every word in the generators is a left extension
/// of a shorter word, so closing left multiplication from the identity
/// reaches the whole algebra.
pub fn envelope(ops: &[RatMatrix], dim: usize) -> Subspace {
    for op in ops {
        assert_eq!(op.rows(), dim, "operator shape mismatch");
        assert_eq!(op.cols(), dim, "operator shape mismatch");
    }
    let n2 = dim * dim;
    let mut b = SpanBuilder::new(n2);
    let id = RatMatrix::identity(dim);
    b.insert(id.flatten());
    let mut frontier = vec![id];
    let mut rounds = 0;
    while !frontier.is_empty() {
        rounds += 1;
        assert!(rounds <= n2 + 1, "envelope closure failed to stabilize");
        let mut next = Vec::new();
        for w in &frontier {
            for g in ops {
                let m = g.mul(w);
                if b.insert(m.flatten()) {
                    next.push(m);
                }
            }
        }
        frontier = next;
    }
    b.into_subspace()
}
