//! Unital commutative associative algebras by structure constants: axiom
//! checking, ideals, the trace-form radical, locality, and a bounded
//! idempotent search.

use alloc::format;
use alloc::vec::Vec;

use crate::exactlin::poly::{charpoly, rational_roots};
use crate::exactlin::{
    basis_vec, solve_linear, vec_zero, QuotientMap, Rat, RatMatrix, Solution, Subspace, Trilinear,
};
use crate::report::AxiomViolation;

/// Unital commutative associative algebra over the rationals, modelling a
/// complex algebra with rational structure constants. `unit` holds the
/// coordinates of the identity element.
#[derive(Clone, PartialEq, Eq)]
pub struct CommAlg {
    dim: usize,
    unit: Vec<Rat>,
    mul: Trilinear,
}

impl CommAlg {
    /// Panics on shape mismatches or `dim == 0`; an algebra must contain 1.
    pub fn new(dim: usize, unit: Vec<Rat>, mul: Trilinear) -> Self {
        assert!(dim >= 1, "a unital algebra has dimension at least 1");
        assert_eq!(unit.len(), dim, "unit vector dimension mismatch");
        assert_eq!(mul.dims(), (dim, dim, dim), "product table shape mismatch");
        CommAlg { dim, unit, mul }
    }

    /// One-dimensional algebra spanned by its identity.
    pub fn scalar() -> Self {
        let mut mul = Trilinear::zero(1, 1, 1);
        mul.set(0, 0, 0, Rat::one());
        CommAlg::new(1, alloc::vec![Rat::one()], mul)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Rat] {
        &self.unit
    }

    pub fn table(&self) -> &Trilinear {
        &self.mul
    }

    pub fn mul_vec(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        self.mul.apply(x, y)
    }

    /// Matrix of left multiplication by `x`.
    pub fn left_mult(&self, x: &[Rat]) -> RatMatrix {
        self.mul.left_op_of(x)
    }

    /// Commutativity, associativity, and two-sided unit law on all basis
    /// tuples. An empty result means the table is a valid algebra.
    pub fn check(&self) -> Vec<AxiomViolation> {
        self.check_budget(usize::MAX)
    }

    pub fn is_valid(&self) -> bool {
        self.check_budget(1).is_empty()
    }

    pub(crate) fn check_budget(&self, budget: usize) -> Vec<AxiomViolation> {
        let mut out = Vec::new();
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                if out.len() >= budget {
                    return out;
                }
                let lhs = self.mul.product_of_basis(i, j);
                let rhs = self.mul.product_of_basis(j, i);
                if lhs != rhs {
                    out.push(AxiomViolation::new("commutativity", &[i, j], lhs, rhs));
                }
            }
        }
        for i in 0..n {
            if out.len() >= budget {
                return out;
            }
            let b = basis_vec(n, i);
            let lhs = self.mul_vec(&self.unit, &b);
            if lhs != b {
                out.push(AxiomViolation::new("unit-left", &[i], lhs, b.clone()));
            }
            if out.len() >= budget {
                return out;
            }
            let rhs = self.mul_vec(&b, &self.unit);
            if rhs != b {
                out.push(AxiomViolation::new("unit-right", &[i], rhs, b));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul.product_of_basis(i, j);
                for k in 0..n {
                    if out.len() >= budget {
                        return out;
                    }
                    let bk = basis_vec(n, k);
                    let lhs = self.mul_vec(&ij, &bk);
                    let jk = self.mul.product_of_basis(j, k);
                    let bi = basis_vec(n, i);
                    let rhs = self.mul_vec(&bi, &jk);
                    if lhs != rhs {
                        out.push(AxiomViolation::new("associativity", &[i, j, k], lhs, rhs));
                    }
                }
            }
        }
        out
    }

    /// Radical of the trace form {x : tr(L_x L_b) = 0 for every basis b}.
    /// In characteristic zero this is the Jacobson radical (= nilradical).
    pub fn jacobson_radical(&self) -> Subspace {
        let n = self.dim;
        let mut gram = RatMatrix::zero(n, n);
        let left_ops: Vec<RatMatrix> = (0..n).map(|i| self.mul.left_op(i)).collect();
        for i in 0..n {
            for j in 0..=i {
                let t = left_ops[i].mul(&left_ops[j]).trace();
                *gram.at_mut(i, j) = t.clone();
                *gram.at_mut(j, i) = t;
            }
        }
        Subspace::from_rows(n, gram.kernel())
    }

    /// Local over the complex numbers: the semisimple quotient is one
    /// dimensional. Rational structure constants extend scalars faithfully,
    /// so this decides locality of the complexified algebra.
    pub fn is_local(&self) -> bool {
        self.dim - self.jacobson_radical().dim() == 1
    }

    /// a * s is contained in s for every basis element a.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        assert_eq!(s.ambient_dim(), self.dim, "ambient dimension mismatch");
        (0..self.dim).all(|i| {
            let b = basis_vec(self.dim, i);
            s.basis_rows()
                .iter()
                .all(|w| s.contains(&self.mul_vec(&b, w)))
        })
    }

    /// Quotient algebra by an ideal, with the projection map.
    /// The caller must supply an actual ideal.
    pub fn quotient_by(&self, ideal: &Subspace) -> (CommAlg, QuotientMap) {
        assert!(self.is_ideal(ideal), "quotient by a non-ideal");
        let qm = QuotientMap::new(ideal.clone());
        let qd = qm.quotient_dim();
        assert!(qd >= 1, "quotient algebra must retain the unit");
        let mut mul = Trilinear::zero(qd, qd, qd);
        for i in 0..qd {
            let si = qm.section(&basis_vec(qd, i));
            for j in 0..qd {
                let sj = qm.section(&basis_vec(qd, j));
                mul.set_product(i, j, &qm.project(&self.mul_vec(&si, &sj)));
            }
        }
        let unit = qm.project(&self.unit);
        (CommAlg::new(qd, unit, mul), qm)
    }

    /// Does `s` contain every idempotent of the algebra?
    ///
    /// Local algebras have only 0 and 1, so the answer is decided by the
    /// unit alone. Otherwise the semisimple quotient is split into common
    /// rational eigenlines, its primitive idempotents are lifted through the
    /// radical, and each lift is tested. When the splitting needs irrational
    /// eigenvalues (or exceeds the bounded root search) the honest answer is
    /// `Undetermined`.
    pub fn idempotents_in(&self, s: &Subspace) -> IdempotentsAnswer {
        assert_eq!(s.ambient_dim(), self.dim, "ambient dimension mismatch");
        let rad = self.jacobson_radical();
        if self.dim - rad.dim() == 1 {
            return if s.contains(&self.unit) {
                IdempotentsAnswer::Contained
            } else {
                IdempotentsAnswer::Escapes(self.unit.clone())
            };
        }
        let (q, qm) = self.quotient_by(&rad);
        let Some(prims) = q.split_primitive_idempotents() else {
            return IdempotentsAnswer::Undetermined;
        };
        for e in &prims {
            let Some(lift) = self.lift_idempotent(&qm, e) else {
                return IdempotentsAnswer::Undetermined;
            };
            if !s.contains(&lift) {
                return IdempotentsAnswer::Escapes(lift);
            }
        }
        // Every idempotent is a sum of a subset of the lifted primitives,
        // and subspaces are closed under sums.
        IdempotentsAnswer::Contained
    }

    /// Primitive idempotents of a (semisimple) algebra that splits over the
    /// rationals, found by refining common eigenspaces of the commuting
    /// left-multiplication operators.
    fn split_primitive_idempotents(&self) -> Option<Vec<Vec<Rat>>> {
        let n = self.dim;
        let mut blocks = alloc::vec![Subspace::full(n)];
        for i in 0..n {
            let op = self.mul.left_op(i);
            let mut refined = Vec::new();
            for w in blocks {
                if w.dim() == 1 {
                    refined.push(w);
                    continue;
                }
                match refine_block(&op, &w) {
                    Some(parts) => refined.extend(parts),
                    None => refined.push(w),
                }
            }
            blocks = refined;
        }
        if blocks.iter().any(|w| w.dim() != 1) {
            return None;
        }
        let lines: Vec<Vec<Rat>> = blocks.iter().map(|w| w.basis_rows()[0].clone()).collect();
        // Solve e * v_j = delta_ij v_j for each block line v_j.
        let mut prims = Vec::with_capacity(lines.len());
        for i in 0..lines.len() {
            let mut rows = Vec::new();
            let mut rhs = Vec::new();
            for (j, v) in lines.iter().enumerate() {
                // x -> x * v_j as a matrix in x.
                let m = self.mul_by_vector_matrix(v);
                for r in 0..n {
                    rows.push(m.row(r).to_vec());
                    rhs.push(if i == j { v[r].clone() } else { Rat::zero() });
                }
            }
            match solve_linear(&RatMatrix::from_rows(rows), &rhs) {
                Solution::Solved { particular, kernel } if kernel.is_empty() => {
                    prims.push(particular)
                }
                _ => return None,
            }
        }
        // Guard the construction: orthogonal idempotents summing to the unit.
        let mut total = vec_zero(n);
        for e in &prims {
            if self.mul_vec(e, e) != *e {
                return None;
            }
            for (t, x) in total.iter_mut().zip(e) {
                *t += x;
            }
        }
        if total != self.unit {
            return None;
        }
        Some(prims)
    }

    /// Matrix of x -> x * v.
    fn mul_by_vector_matrix(&self, v: &[Rat]) -> RatMatrix {
        let n = self.dim;
        let mut m = RatMatrix::zero(n, n);
        for (t, vt) in v.iter().enumerate() {
            if vt.is_zero() {
                continue;
            }
            let col = self.mul.right_op(t);
            for r in 0..n {
                for c in 0..n {
                    let a = col.at(r, c);
                    if !a.is_zero() {
                        *m.at_mut(r, c) += &(vt * a);
                    }
                }
            }
        }
        m
    }

    /// Newton lift of an idempotent of the semisimple quotient back into the
    /// algebra: x <- 3x^2 - 2x^3 squares the nilpotence order killed each
    /// round.
    fn lift_idempotent(&self, qm: &QuotientMap, e: &[Rat]) -> Option<Vec<Rat>> {
        let mut x = qm.section(e);
        for _ in 0..(2 * self.dim + 4) {
            let x2 = self.mul_vec(&x, &x);
            if x2 == x {
                return Some(x);
            }
            let x3 = self.mul_vec(&x2, &x);
            x = x2
                .iter()
                .zip(&x3)
                .map(|(a, b)| &(&Rat::from(3) * a) - &(&Rat::from(2) * b))
                .collect();
        }
        None
    }
}

/// Splits a block into eigenspaces of the operator when its spectrum inside
/// the block is rational and complete; `None` leaves the block untouched.
fn refine_block(op: &RatMatrix, w: &Subspace) -> Option<Vec<Subspace>> {
    let wd = w.dim();
    let n = w.ambient_dim();
    // Restriction of op to w in the basis of w.
    let mut restr = RatMatrix::zero(wd, wd);
    for (c, row) in w.basis_rows().iter().enumerate() {
        let img = op.mat_vec(row);
        let coords = w.coords(&img)?;
        for r in 0..wd {
            *restr.at_mut(r, c) = coords[r].clone();
        }
    }
    let roots = rational_roots(&charpoly(&restr))?;
    let mut parts = Vec::new();
    let mut covered = 0;
    for lam in &roots {
        let mut shifted = restr.clone();
        shifted.add_diag(&-lam);
        let eig = shifted.kernel();
        if eig.is_empty() {
            continue;
        }
        covered += eig.len();
        let rows: Vec<Vec<Rat>> = eig
            .iter()
            .map(|k| {
                let mut v = vec_zero(n);
                for (c, row) in w.basis_rows().iter().enumerate() {
                    if !k[c].is_zero() {
                        for t in 0..n {
                            if !row[t].is_zero() {
                                v[t] += &(&k[c] * &row[t]);
                            }
                        }
                    }
                }
                v
            })
            .collect();
        parts.push(Subspace::from_rows(n, rows));
    }
    // Only accept a refinement that diagonalizes the whole block into more
    // than one piece; anything else leaves the block for later operators.
    if covered == wd && parts.len() > 1 {
        Some(parts)
    } else {
        None
    }
}

/// Outcome of the idempotent containment test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IdempotentsAnswer {
    /// Every idempotent of the algebra lies in the subspace.
    Contained,
    /// A concrete idempotent outside the subspace.
    Escapes(Vec<Rat>),
    /// The bounded search could not enumerate the idempotents.
    Undetermined,
}

impl IdempotentsAnswer {
    pub fn is_contained(&self) -> bool {
        matches!(self, IdempotentsAnswer::Contained)
    }
}

pub(crate) fn describe_violations(violations: &[AxiomViolation]) -> alloc::string::String {
    if violations.is_empty() {
        alloc::string::String::from("no violations")
    } else {
        format!(
            "{} violation(s), first: {}",
            violations.len(),
            violations[0]
        )
    }
}

impl core::fmt::Debug for CommAlg {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "CommAlg(dim {})", self.dim)
    }
}

#[cfg(test)]
pub(crate) mod test_algebras {
    use super::*;

    /// Span of 1, x0, x1 with all products of the x's equal to zero.
    pub fn nilpotent_pair_algebra() -> CommAlg {
        let dim = 3;
        let mut mul = Trilinear::zero(dim, dim, dim);
        for t in 0..dim {
            mul.set(0, t, t, Rat::one());
            if t != 0 {
                mul.set(t, 0, t, Rat::one());
            }
        }
        CommAlg::new(dim, basis_vec(dim, 0), mul)
    }

    /// Two-dimensional split algebra with componentwise product.
    pub fn split_pair_algebra() -> CommAlg {
        let mut mul = Trilinear::zero(2, 2, 2);
        mul.set(0, 0, 0, Rat::one());
        mul.set(1, 1, 1, Rat::one());
        CommAlg::new(2, crate::exactlin::vec_from_ints(&[1, 1]), mul)
    }

    /// 1, x with x*x = 0.
    pub fn dual_numbers() -> CommAlg {
        let mut mul = Trilinear::zero(2, 2, 2);
        mul.set(0, 0, 0, Rat::one());
        mul.set(0, 1, 1, Rat::one());
        mul.set(1, 0, 1, Rat::one());
        CommAlg::new(2, basis_vec(2, 0), mul)
    }
}

#[cfg(test)]
mod tests {
    use super::test_algebras::*;
    use super::*;
    use crate::exactlin::vec_from_ints;

    #[test]
    fn family_algebra_is_valid() {
        assert!(nilpotent_pair_algebra().check().is_empty());
        assert!(CommAlg::scalar().check().is_empty());
    }

    #[test]
    fn perturbed_product_breaks_associativity() {
        let a = nilpotent_pair_algebra();
        // x0 * x1 := 1 (both orders, to keep commutativity clean)
        let mut mul = a.table().clone();
        mul.set(1, 2, 0, Rat::one());
        mul.set(2, 1, 0, Rat::one());
        let a = CommAlg::new(3, a.unit().to_vec(), mul);
        let violations = a.check();
        assert!(violations
            .iter()
            .any(|v| v.axiom == "associativity" && v.witness == [1, 2, 2]));
    }

    #[test]
    fn radical_of_family_algebra() {
        let a = nilpotent_pair_algebra();
        let j = a.jacobson_radical();
        assert_eq!(j, Subspace::from_int_rows(3, &[&[0, 1, 0], &[0, 0, 1]]));
        assert!(a.is_ideal(&j));
        // Basis vectors of the radical act nilpotently.
        for row in j.basis_rows() {
            let l = a.left_mult(row);
            let mut p = RatMatrix::identity(3);
            for _ in 0..3 {
                p = l.mul(&p);
            }
            assert!(p.is_zero());
        }
    }

    #[test]
    fn radical_trivial_cases() {
        assert!(CommAlg::scalar().jacobson_radical().is_zero());
        let d = dual_numbers();
        assert_eq!(d.jacobson_radical(), Subspace::from_int_rows(2, &[&[0, 1]]));
    }

    #[test]
    fn locality() {
        assert!(nilpotent_pair_algebra().is_local());
        assert!(dual_numbers().is_local());
        assert!(!split_pair_algebra().is_local());
    }

    #[test]
    fn ideals_of_family_algebra() {
        let a = nilpotent_pair_algebra();
        assert!(a.is_ideal(&Subspace::from_int_rows(3, &[&[0, 1, 0], &[0, 0, 1]])));
        assert!(!a.is_ideal(&Subspace::from_int_rows(3, &[&[1, 0, 0]])));
        assert!(a.is_ideal(&Subspace::zero(3)));
    }

    #[test]
    fn idempotent_containment() {
        let a = nilpotent_pair_algebra();
        let ker = Subspace::from_int_rows(3, &[&[1, 0, 0]]);
        assert_eq!(a.idempotents_in(&ker), IdempotentsAnswer::Contained);

        let s = split_pair_algebra();
        assert_eq!(
            s.idempotents_in(&Subspace::full(2)),
            IdempotentsAnswer::Contained
        );
        match s.idempotents_in(&Subspace::from_int_rows(2, &[&[1, 1]])) {
            IdempotentsAnswer::Escapes(w) => {
                assert!(w == vec_from_ints(&[1, 0]) || w == vec_from_ints(&[0, 1]));
            }
            other => panic!("expected an escaping idempotent, got {other:?}"),
        }
    }

    #[test]
    fn split_idempotents_found_through_radical() {
        // Q[e,x]/(e^2 - e, x^2, ex - x) with basis 1, e, x: split quotient
        // of dimension 2 over a one-dimensional radical.
        let mut mul = Trilinear::zero(3, 3, 3);
        mul.set(0, 0, 0, Rat::one());
        mul.set(0, 1, 1, Rat::one());
        mul.set(1, 0, 1, Rat::one());
        mul.set(0, 2, 2, Rat::one());
        mul.set(2, 0, 2, Rat::one());
        mul.set(1, 1, 1, Rat::one());
        mul.set(1, 2, 2, Rat::one());
        mul.set(2, 1, 2, Rat::one());
        let a = CommAlg::new(3, basis_vec(3, 0), mul);
        assert!(a.check().is_empty());
        assert!(!a.is_local());
        match a.idempotents_in(&Subspace::from_int_rows(3, &[&[1, 0, 0]])) {
            IdempotentsAnswer::Escapes(w) => {
                assert_eq!(a.mul_vec(&w, &w), w);
            }
            other => panic!("expected escape, got {other:?}"),
        }
        assert_eq!(
            a.idempotents_in(&Subspace::full(3)),
            IdempotentsAnswer::Contained
        );
    }

    #[test]
    fn irrational_splitting_is_undetermined() {
        // The quadratic field with x*x = 2: semisimple of dimension 2 but
        // split only by irrational eigenvalues, so the bounded search
        // answers honestly.
        let mut mul = Trilinear::zero(2, 2, 2);
        mul.set(0, 0, 0, Rat::one());
        mul.set(0, 1, 1, Rat::one());
        mul.set(1, 0, 1, Rat::one());
        mul.set(1, 1, 0, Rat::from(2));
        let a = CommAlg::new(2, basis_vec(2, 0), mul);
        assert!(a.check().is_empty());
        assert!(!a.is_local());
        assert!(a.jacobson_radical().is_zero());
        assert_eq!(
            a.idempotents_in(&Subspace::full(2)),
            IdempotentsAnswer::Undetermined
        );
    }

    #[test]
    fn local_algebras_have_trivial_idempotents() {
        // Invariant: when is_local holds, the only idempotents the split
        // search can produce are 0 and 1.
        for a in [nilpotent_pair_algebra(), dual_numbers()] {
            assert!(a.is_local());
            let unit_line = Subspace::from_rows(a.dim(), [a.unit().to_vec()]);
            assert_eq!(a.idempotents_in(&unit_line), IdempotentsAnswer::Contained);
        }
    }
}
