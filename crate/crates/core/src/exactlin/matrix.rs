//! Dense rational matrices and exact Gaussian elimination.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::rat::Rat;

/// Dense matrix of rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            entries.extend(r);
        }
        RatMatrix {
            rows: nrows,
            cols: ncols,
            entries,
        }
    }

    /// Test/table convenience: build from integer rows.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| Rat::from(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = RatMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    /// Matrix applied to a column vector.
    pub fn mat_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = vec![Rat::zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    out[i] += a * &v[j];
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a += b;
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a *= c;
        }
        out
    }

    /// Adds `c` to every diagonal entry in place.
    pub fn add_diag(&mut self, c: &Rat) {
        assert_eq!(self.rows, self.cols);
        for i in 0..self.rows {
            *self.at_mut(i, i) += c;
        }
    }

    pub fn trace(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "trace of non-square matrix");
        let mut t = Rat::zero();
        for i in 0..self.rows {
            t += self.at(i, i);
        }
        t
    }

    /// Flattens row-major into a vector of length rows*cols.
    pub fn flatten(&self) -> Vec<Rat> {
        self.entries.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        RatMatrix {
            rows,
            cols,
            entries,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, c: &Rat) {
        for j in 0..self.cols {
            let e = self.at_mut(i, j);
            if !e.is_zero() {
                *e *= c;
            }
        }
    }

    /// row_i -= c * row_k
    fn sub_scaled_row(&mut self, i: usize, k: usize, c: &Rat) {
        for j in 0..self.cols {
            let v = self.at(k, j).clone();
            if !v.is_zero() {
                *self.at_mut(i, j) -= &(&v * c);
            }
        }
    }

    /// Unique reduced row-echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.at(r, c).recip();
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let factor = m.at(i, c).clone();
                    m.sub_scaled_row(i, r, &factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            rank: r,
            pivots,
            mat: m,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel {x : Mx = 0}, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let red = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in red.pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &pc) in red.pivots.iter().enumerate() {
                v[pc] = -red.mat.at(row, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = RatMatrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = Rat::one();
        }
        let red = aug.rref();
        if red.rank < n || red.pivots.iter().enumerate().any(|(r, &c)| r != c) {
            return None;
        }
        let mut inv = RatMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                *inv.at_mut(i, j) = red.mat.at(i, n + j).clone();
            }
        }
        Some(inv)
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Result of row reduction.
pub struct Rref {
    pub mat: RatMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Exact description of the solution set of `a x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Infeasible,
    Solved {
        particular: Vec<Rat>,
        kernel: Vec<Vec<Rat>>,
    },
}

/// Solves `a x = b`, returning one particular solution together with a basis
/// of the homogeneous kernel, or `Infeasible`.
pub fn solve_linear(a: &RatMatrix, b: &[Rat]) -> Solution {
    assert_eq!(a.rows(), b.len(), "solve shape mismatch");
    let n = a.cols();
    let mut aug = RatMatrix::zero(a.rows(), n + 1);
    for i in 0..a.rows() {
        for j in 0..n {
            *aug.at_mut(i, j) = a.at(i, j).clone();
        }
        *aug.at_mut(i, n) = b[i].clone();
    }
    let red = aug.rref();
    if red.pivots.contains(&n) {
        return Solution::Infeasible;
    }
    let mut particular = vec![Rat::zero(); n];
    for (row, &c) in red.pivots.iter().enumerate() {
        particular[c] = red.mat.at(row, n).clone();
    }
    // The kernel can be read off the same reduction restricted to the first
    // n columns, whose pivots coincide with `red.pivots`.
    let mut is_pivot = vec![false; n];
    for &c in &red.pivots {
        is_pivot[c] = true;
    }
    let mut kernel = Vec::new();
    for free in 0..n {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Rat::zero(); n];
        v[free] = Rat::one();
        for (row, &pc) in red.pivots.iter().enumerate() {
            v[pc] = -red.mat.at(row, free);
        }
        kernel.push(v);
    }
    Solution::Solved { particular, kernel }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::vec_from_ints;

    #[test]
    fn rref_identity() {
        let id = RatMatrix::identity(2);
        let red = id.rref();
        assert_eq!(red.mat, id);
        assert_eq!(red.rank, 2);
        assert_eq!(red.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_proportional_rows() {
        let m = RatMatrix::from_int_rows(&[&[2, 4], &[1, 2]]);
        let red = m.rref();
        assert_eq!(red.mat, RatMatrix::from_int_rows(&[&[1, 2], &[0, 0]]));
        assert_eq!(red.rank, 1);
        assert_eq!(red.pivots, vec![0]);
    }

    #[test]
    fn rref_zero() {
        let m = RatMatrix::zero(3, 3);
        let red = m.rref();
        assert!(red.mat.is_zero());
        assert_eq!(red.rank, 0);
    }

    #[test]
    fn rref_idempotent() {
        let m = RatMatrix::from_int_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let once = m.rref().mat;
        let twice = once.rref().mat;
        assert_eq!(once, twice);
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = RatMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.mat_vec(&k[0]).iter().all(Rat::is_zero));
    }

    #[test]
    fn solve_identity() {
        let b = vec_from_ints(&[3, -4]);
        match solve_linear(&RatMatrix::identity(2), &b) {
            Solution::Solved { particular, kernel } => {
                assert_eq!(particular, b);
                assert!(kernel.is_empty());
            }
            Solution::Infeasible => panic!("should be feasible"),
        }
    }

    #[test]
    fn solve_infeasible() {
        let a = RatMatrix::zero(2, 2);
        let b = vec_from_ints(&[1, 0]);
        assert_eq!(solve_linear(&a, &b), Solution::Infeasible);
    }

    #[test]
    fn solve_underdetermined() {
        let a = RatMatrix::from_int_rows(&[&[1, 1]]);
        let b = vec_from_ints(&[2]);
        match solve_linear(&a, &b) {
            Solution::Solved { particular, kernel } => {
                assert_eq!(particular, vec_from_ints(&[2, 0]));
                assert_eq!(kernel, vec![vec_from_ints(&[-1, 1])]);
            }
            Solution::Infeasible => panic!("should be feasible"),
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = RatMatrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(2));
        assert!(RatMatrix::from_int_rows(&[&[1, 2], &[2, 4]])
            .inverse()
            .is_none());
    }
}
