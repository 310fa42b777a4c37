//! Structure-constant tables for bilinear operations.

use alloc::vec;
use alloc::vec::Vec;

use super::matrix::RatMatrix;
use super::rat::Rat;

/// Structure constants of a bilinear map V_left x V_right -> V_out:
/// `c[i][j][k]` is the k-th output coordinate of (b_i, b_j).
#[derive(Clone, PartialEq, Eq)]
pub struct Trilinear {
    dl: usize,
    dr: usize,
    dout: usize,
    c: Vec<Rat>,
}

impl Trilinear {
    pub fn zero(dl: usize, dr: usize, dout: usize) -> Self {
        Trilinear {
            dl,
            dr,
            dout,
            c: vec![Rat::zero(); dl * dr * dout],
        }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.dl, self.dr, self.dout)
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.dl && j < self.dr && k < self.dout);
        (i * self.dr + j) * self.dout + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.c[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rat) {
        let at = self.idx(i, j, k);
        self.c[at] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, v: &Rat) {
        let at = self.idx(i, j, k);
        self.c[at] += v;
    }

    /// Output vector of the basis pair (i, j).
    pub fn product_of_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        let at = self.idx(i, j, 0);
        self.c[at..at + self.dout].to_vec()
    }

    /// Assigns the whole output vector of the basis pair (i, j).
    pub fn set_product(&mut self, i: usize, j: usize, out: &[Rat]) {
        assert_eq!(out.len(), self.dout);
        let at = self.idx(i, j, 0);
        self.c[at..at + self.dout].clone_from_slice(out);
    }

    /// Bilinear evaluation on coordinate vectors.
    pub fn apply(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.dl, "left argument dimension mismatch");
        assert_eq!(y.len(), self.dr, "right argument dimension mismatch");
        let mut out = vec![Rat::zero(); self.dout];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coeff = xi * yj;
                let at = self.idx(i, j, 0);
                for k in 0..self.dout {
                    let v = &self.c[at + k];
                    if !v.is_zero() {
                        out[k] += &(&coeff * v);
                    }
                }
            }
        }
        out
    }

    /// Matrix of y -> (b_i, y), shape dout x dr.
    pub fn left_op(&self, i: usize) -> RatMatrix {
        let mut m = RatMatrix::zero(self.dout, self.dr);
        for j in 0..self.dr {
            for k in 0..self.dout {
                *m.at_mut(k, j) = self.get(i, j, k).clone();
            }
        }
        m
    }

    /// Matrix of x -> (x, b_j), shape dout x dl.
    pub fn right_op(&self, j: usize) -> RatMatrix {
        let mut m = RatMatrix::zero(self.dout, self.dl);
        for i in 0..self.dl {
            for k in 0..self.dout {
                *m.at_mut(k, i) = self.get(i, j, k).clone();
            }
        }
        m
    }

    /// Matrix of the operator Σ x_i (b_i, -), shape dout x dr.
    pub fn left_op_of(&self, x: &[Rat]) -> RatMatrix {
        assert_eq!(x.len(), self.dl);
        let mut m = RatMatrix::zero(self.dout, self.dr);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dr {
                for k in 0..self.dout {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        *m.at_mut(k, j) += &(xi * v);
                    }
                }
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rat::is_zero)
    }

    /// Nonzero entries in lexicographic (i, j, k) order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rat)> {
        let (dr, dout) = (self.dr, self.dout);
        self.c.iter().enumerate().filter_map(move |(flat, v)| {
            if v.is_zero() {
                None
            } else {
                let k = flat % dout;
                let j = (flat / dout) % dr;
                let i = flat / (dout * dr);
                Some((i, j, k, v))
            }
        })
    }
}

impl core::fmt::Debug for Trilinear {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Trilinear{:?}[", self.dims())?;
        for (n, (i, j, k, v)) in self.entries().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({i},{j},{k})={v}")?;
        }
        write!(f, "]")
    }
}
