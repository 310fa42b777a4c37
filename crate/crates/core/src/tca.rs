//! 1-truncated conformal algebras: a graded space C0 + C1 with a map
//! d: C0 -> C1 and products u_i v of degree -i-1 subject to derivation,
//! commutativity, and associativity axioms. Degree-illegal products are
//! structurally zero and never stored; the mixed product a_0 u is held
//! implicitly as -(u_0 a).

use alloc::vec::Vec;

use crate::error::Error;
use crate::exactlin::{
    basis_vec, vec_add, vec_is_zero, vec_neg, vec_sub, vec_zero, Rat, RatMatrix, Trilinear,
};
use crate::leibniz::{LeibnizAlg, LeibnizModule};
use crate::report::{AxiomViolation, Report};
use crate::valgd::VertexAlgebroid;

/// Element of C0 + C1 as a pair of coordinate vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graded {
    pub c0: Vec<Rat>,
    pub c1: Vec<Rat>,
}

/// 1-truncated conformal algebra by structure constants.
///
/// Stored tables: `act0` for u_0 a (C1 x C0 -> C0), `brk0` for u_0 v
/// (C1 x C1 -> C1), `pair1` for u_1 v (C1 x C1 -> C0), and the matrix of
/// the boundary map d. Everything else is forced by degree bookkeeping.
#[derive(Clone, PartialEq, Eq)]
pub struct Tca {
    d0: usize,
    d1: usize,
    partial: RatMatrix,
    act0: Trilinear,
    brk0: Trilinear,
    pair1: Trilinear,
}

impl Tca {
    pub fn new(
        d0: usize,
        d1: usize,
        partial: RatMatrix,
        act0: Trilinear,
        brk0: Trilinear,
        pair1: Trilinear,
    ) -> Self {
        assert_eq!((partial.rows(), partial.cols()), (d1, d0), "map shape");
        assert_eq!(act0.dims(), (d1, d0, d0), "act0 shape");
        assert_eq!(brk0.dims(), (d1, d1, d1), "brk0 shape");
        assert_eq!(pair1.dims(), (d1, d1, d0), "pair1 shape");
        Tca {
            d0,
            d1,
            partial,
            act0,
            brk0,
            pair1,
        }
    }

    /// Everything zero.
    pub fn trivial(d0: usize, d1: usize) -> Self {
        Tca::new(
            d0,
            d1,
            RatMatrix::zero(d1, d0),
            Trilinear::zero(d1, d0, d0),
            Trilinear::zero(d1, d1, d1),
            Trilinear::zero(d1, d1, d0),
        )
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.d0, self.d1)
    }

    pub fn partial(&self) -> &RatMatrix {
        &self.partial
    }

    pub fn act0_table(&self) -> &Trilinear {
        &self.act0
    }

    pub fn brk0_table(&self) -> &Trilinear {
        &self.brk0
    }

    pub fn pair1_table(&self) -> &Trilinear {
        &self.pair1
    }

    pub fn deg0(&self, i: usize) -> Graded {
        Graded {
            c0: basis_vec(self.d0, i),
            c1: vec_zero(self.d1),
        }
    }

    pub fn deg1(&self, i: usize) -> Graded {
        Graded {
            c0: vec_zero(self.d0),
            c1: basis_vec(self.d1, i),
        }
    }

    /// The 0-product of general graded elements. The component a_0 u is
    /// -(u_0 a) per the first commutativity identity, which is therefore
    /// built into the representation rather than checked.
    pub fn op0(&self, x: &Graded, y: &Graded) -> Graded {
        let c0 = vec_sub(
            &self.act0.apply(&x.c1, &y.c0),
            &self.act0.apply(&y.c1, &x.c0),
        );
        let c1 = self.brk0.apply(&x.c1, &y.c1);
        Graded { c0, c1 }
    }

    /// The 1-product: only C1 x C1 survives the degree count.
    pub fn op1(&self, x: &Graded, y: &Graded) -> Graded {
        Graded {
            c0: self.pair1.apply(&x.c1, &y.c1),
            c1: vec_zero(self.d1),
        }
    }

    /// The boundary map applied to a degree-0 coordinate vector.
    pub fn partial_vec(&self, a: &[Rat]) -> Vec<Rat> {
        self.partial.mat_vec(a)
    }

    fn graded_eq(x: &Graded, y: &Graded) -> bool {
        x.c0 == y.c0 && x.c1 == y.c1
    }

    fn flatten(x: &Graded) -> Vec<Rat> {
        let mut v = x.c0.clone();
        v.extend(x.c1.iter().cloned());
        v
    }

    /// The derivation, commutativity, and associativity axioms on all basis
    /// tuples. Witness indices run over the combined basis: 0..d0 are
    /// degree-0 elements, d0..d0+d1 are degree-1.
    pub fn check(&self) -> Vec<AxiomViolation> {
        self.check_budget(usize::MAX)
    }

    pub fn is_valid(&self) -> bool {
        self.check_budget(1).is_empty()
    }

    pub(crate) fn check_budget(&self, budget: usize) -> Vec<AxiomViolation> {
        let mut out = Vec::new();
        let (d0, d1) = (self.d0, self.d1);
        macro_rules! bail {
            () => {
                if out.len() >= budget {
                    return out;
                }
            };
        }
        // Derivation: (d a)_0 = 0 on every element, (d a)_1 u = -(a_0 u),
        // and d(u_0 a) = u_0 (d a).
        for a in 0..d0 {
            let da = Graded {
                c0: vec_zero(d0),
                c1: self.partial.mat_vec(&basis_vec(d0, a)),
            };
            for t in 0..d0 + d1 {
                bail!();
                let x = self.elt(t);
                let lhs = self.op0(&da, &x);
                if !vec_is_zero(&lhs.c0) || !vec_is_zero(&lhs.c1) {
                    out.push(AxiomViolation::new(
                        "derivation-zero-action",
                        &[a, t],
                        Self::flatten(&lhs),
                        vec_zero(d0 + d1),
                    ));
                }
            }
            for u in 0..d1 {
                bail!();
                // (d a)_1 u = -(a_0 u) = u_0 a
                let lhs = self.op1(&da, &self.deg1(u));
                let rhs = self.act0.product_of_basis(u, a);
                if lhs.c0 != rhs {
                    out.push(AxiomViolation::new(
                        "derivation-pairing",
                        &[a, u],
                        lhs.c0,
                        rhs,
                    ));
                }
                bail!();
                // d(u_0 a) = u_0 (d a)
                let lhs = self.partial.mat_vec(&self.act0.product_of_basis(u, a));
                let rhs = self
                    .brk0
                    .apply(&basis_vec(d1, u), &self.partial.mat_vec(&basis_vec(d0, a)));
                if lhs != rhs {
                    out.push(AxiomViolation::new(
                        "derivation-commutes",
                        &[u, a],
                        lhs,
                        rhs,
                    ));
                }
            }
        }
        // Commutativity: u_0 v = -(v_0 u) + d(u_1 v) and u_1 v = v_1 u.
        // The identity u_0 a = -(a_0 u) holds by representation.
        for u in 0..d1 {
            for v in 0..d1 {
                bail!();
                let lhs = self.brk0.product_of_basis(u, v);
                let rhs = vec_add(
                    &vec_neg(&self.brk0.product_of_basis(v, u)),
                    &self.partial.mat_vec(&self.pair1.product_of_basis(u, v)),
                );
                if lhs != rhs {
                    out.push(AxiomViolation::new("commutativity-0", &[u, v], lhs, rhs));
                }
                bail!();
                let lhs = self.pair1.product_of_basis(u, v);
                let rhs = self.pair1.product_of_basis(v, u);
                if lhs != rhs {
                    out.push(AxiomViolation::new("commutativity-1", &[u, v], lhs, rhs));
                }
            }
        }
        // Associativity: alpha_0 (beta_i gamma) = beta_i (alpha_0 gamma)
        //                + (alpha_0 beta)_i gamma, for i = 0, 1.
        let total = d0 + d1;
        for a in 0..total {
            let ea = self.elt(a);
            for b in 0..total {
                let eb = self.elt(b);
                let ab = self.op0(&ea, &eb);
                for c in 0..total {
                    let ec = self.elt(c);
                    for i in 0..2 {
                        bail!();
                        let opi = |x: &Graded, y: &Graded| {
                            if i == 0 {
                                self.op0(x, y)
                            } else {
                                self.op1(x, y)
                            }
                        };
                        let lhs = self.op0(&ea, &opi(&eb, &ec));
                        let rhs_1 = opi(&eb, &self.op0(&ea, &ec));
                        let rhs_2 = opi(&ab, &ec);
                        let rhs = Graded {
                            c0: vec_add(&rhs_1.c0, &rhs_2.c0),
                            c1: vec_add(&rhs_1.c1, &rhs_2.c1),
                        };
                        if !Self::graded_eq(&lhs, &rhs) {
                            out.push(AxiomViolation::new(
                                if i == 0 {
                                    "associativity-0"
                                } else {
                                    "associativity-1"
                                },
                                &[a, b, c],
                                Self::flatten(&lhs),
                                Self::flatten(&rhs),
                            ));
                        }
                    }
                }
            }
        }
        out
    }

    fn elt(&self, combined: usize) -> Graded {
        if combined < self.d0 {
            self.deg0(combined)
        } else {
            self.deg1(combined - self.d0)
        }
    }

    /// The equivalent module-theoretic characterization, verified clause by
    /// clause: C1 is Leibniz, C0 is a C1-module, the boundary map and the
    /// pairing are module homomorphisms, the boundary image annihilates
    /// everything, and the four displayed compatibility identities hold.
    /// Passes exactly when `check` is empty; the two routes cross-validate
    /// each other.
    pub fn check_module_view(&self) -> Report {
        let mut report = Report::new();
        let (d0, d1) = (self.d0, self.d1);

        let c1_alg = LeibnizAlg::new(d1, self.brk0.clone());
        let violations = c1_alg.check();
        report.check(
            "c1-leibniz",
            violations.is_empty(),
            &crate::calg::describe_violations(&violations),
        );

        let module = LeibnizModule::new(c1_alg, d0, self.act0.clone());
        let violations = module.check();
        report.check(
            "c0-module",
            violations.is_empty(),
            &crate::calg::describe_violations(&violations),
        );

        // d(u_0 a) = [u, d a]: the boundary map intertwines the action on
        // C0 with the adjoint action on C1.
        let mut ok = true;
        let mut note = alloc::string::String::new();
        'outer_hom: for u in 0..d1 {
            for a in 0..d0 {
                let lhs = self.partial.mat_vec(&self.act0.product_of_basis(u, a));
                let rhs = self
                    .brk0
                    .apply(&basis_vec(d1, u), &self.partial.mat_vec(&basis_vec(d0, a)));
                if lhs != rhs {
                    ok = false;
                    note = alloc::format!("fails at (u={u}, a={a})");
                    break 'outer_hom;
                }
            }
        }
        report.check("partial-module-hom", ok, &note);

        // The boundary image annihilates C0 + C1 under the 0-action.
        let mut ok = true;
        let mut note = alloc::string::String::new();
        'outer_ann: for a in 0..d0 {
            let da = Graded {
                c0: vec_zero(d0),
                c1: self.partial.mat_vec(&basis_vec(d0, a)),
            };
            for t in 0..d0 + d1 {
                let img = self.op0(&da, &self.elt(t));
                if !vec_is_zero(&img.c0) || !vec_is_zero(&img.c1) {
                    ok = false;
                    note = alloc::format!("image of basis element {a} acts on element {t}");
                    break 'outer_ann;
                }
            }
        }
        report.check("partial-image-annihilates", ok, &note);

        // The pairing is a module homomorphism:
        // u_0 <v,w> = <[u,v], w> + <v, [u,w]>.
        let mut ok = true;
        let mut note = alloc::string::String::new();
        'outer_pair: for u in 0..d1 {
            let eu = basis_vec(d1, u);
            for v in 0..d1 {
                for w in 0..d1 {
                    let lhs = self.act0.apply(&eu, &self.pair1.product_of_basis(v, w));
                    let rhs = vec_add(
                        &self
                            .pair1
                            .apply(&self.brk0.product_of_basis(u, v), &basis_vec(d1, w)),
                        &self
                            .pair1
                            .apply(&basis_vec(d1, v), &self.brk0.product_of_basis(u, w)),
                    );
                    if lhs != rhs {
                        ok = false;
                        note = alloc::format!("fails at (u={u}, v={v}, w={w})");
                        break 'outer_pair;
                    }
                }
            }
        }
        report.check("pairing-module-hom", ok, &note);

        // <d a, u> = -(a_0 u) = u_0 a.
        let mut ok = true;
        for a in 0..d0 {
            let da = self.partial.mat_vec(&basis_vec(d0, a));
            for u in 0..d1 {
                let lhs = self.pair1.apply(&da, &basis_vec(d1, u));
                let rhs = self.act0.product_of_basis(u, a);
                if lhs != rhs {
                    ok = false;
                }
            }
        }
        report.check("pairing-of-partial", ok, "");

        // [u,v] + [v,u] = d<u,v> and <u,v> = <v,u>.
        let mut symmetrized = true;
        let mut symmetric = true;
        for u in 0..d1 {
            for v in 0..d1 {
                let s = vec_add(
                    &self.brk0.product_of_basis(u, v),
                    &self.brk0.product_of_basis(v, u),
                );
                if s != self.partial.mat_vec(&self.pair1.product_of_basis(u, v)) {
                    symmetrized = false;
                }
                if self.pair1.product_of_basis(u, v) != self.pair1.product_of_basis(v, u) {
                    symmetric = false;
                }
            }
        }
        report.check("bracket-symmetrization", symmetrized, "");
        report.check("pairing-symmetric", symmetric, "");
        report
    }

    /// Forgetful image of a vertex algebroid: C0 = A, C1 = the algebroid,
    /// with u_0 a the anchor action, u_0 v the bracket, u_1 v the pairing.
    pub fn from_algebroid(b: &VertexAlgebroid) -> Tca {
        Tca::new(
            b.adim(),
            b.gdim(),
            b.partial_matrix().clone(),
            b.act_table().clone(),
            b.brk_table().clone(),
            b.pair_table().clone(),
        )
    }
}

/// 1-truncated conformal algebra built from a Lie algebra with a symmetric
/// invariant form, a pair of isomorphic modules M and A_M, and the
/// connecting isomorphism phi: C0 = scalars + A_M, C1 = g + M, with
/// [g+m, g'+m'] = [g,g'] + g.m', (g+m).(q+a) = g.a, d(q+a) = phi(a),
/// g_1 g' = <g,g'>, g_1 phi(a) = g.a, and all other products zero.
pub fn from_lie_pair(
    g: &LeibnizAlg,
    form: &Trilinear,
    m: &LeibnizModule,
    a_m: &LeibnizModule,
    phi: &RatMatrix,
) -> Result<Tca, Error> {
    if !g.is_lie() || !g.is_valid() {
        return Err(Error::NotLie);
    }
    let gd = g.dim();
    assert_eq!(form.dims(), (gd, gd, 1), "form shape mismatch");
    for x in 0..gd {
        for y in 0..gd {
            if form.get(x, y, 0) != form.get(y, x, 0) {
                return Err(Error::FormNotSymmetric);
            }
        }
    }
    // Invariance <[x,y], z> = <x, [y,z]> on basis triples.
    for x in 0..gd {
        let ex = basis_vec(gd, x);
        for y in 0..gd {
            for z in 0..gd {
                let ez = basis_vec(gd, z);
                let lhs = form.apply(&g.table().product_of_basis(x, y), &ez);
                let rhs = form.apply(&ex, &g.table().product_of_basis(y, z));
                if lhs != rhs {
                    return Err(Error::FormNotInvariant);
                }
            }
        }
    }
    if m.alg() != g || a_m.alg() != g {
        return Err(Error::ModuleAlgebraMismatch);
    }
    if !m.check().is_empty() || !a_m.check().is_empty() {
        return Err(Error::InvalidModule);
    }
    let md = m.dim();
    if a_m.dim() != md {
        return Err(Error::NotIsomorphism);
    }
    assert_eq!((phi.rows(), phi.cols()), (md, md), "phi shape mismatch");
    let Some(phi_inv) = phi.inverse() else {
        return Err(Error::NotIsomorphism);
    };
    // Equivariance: phi(u.a) = u.phi(a).
    for u in 0..gd {
        let eu = basis_vec(gd, u);
        for a in 0..md {
            let lhs = phi.mat_vec(&a_m.act(&eu, &basis_vec(md, a)));
            let rhs = m.act(&eu, &phi.mat_vec(&basis_vec(md, a)));
            if lhs != rhs {
                return Err(Error::NotEquivariant);
            }
        }
    }

    let d0 = 1 + md;
    let d1 = gd + md;
    // C0 basis: scalar line first, then A_M. C1 basis: g first, then M.
    let mut act0 = Trilinear::zero(d1, d0, d0);
    for u in 0..gd {
        let eu = basis_vec(gd, u);
        for a in 0..md {
            let img = a_m.act(&eu, &basis_vec(md, a));
            for (k, v) in img.iter().enumerate() {
                if !v.is_zero() {
                    act0.set(u, 1 + a, 1 + k, v.clone());
                }
            }
        }
    }
    let mut brk0 = Trilinear::zero(d1, d1, d1);
    for (i, j, k, v) in g.table().entries() {
        brk0.set(i, j, k, v.clone());
    }
    for u in 0..gd {
        let eu = basis_vec(gd, u);
        for x in 0..md {
            let img = m.act(&eu, &basis_vec(md, x));
            for (k, v) in img.iter().enumerate() {
                if !v.is_zero() {
                    brk0.set(u, gd + x, gd + k, v.clone());
                }
            }
        }
    }
    let mut pair1 = Trilinear::zero(d1, d1, d0);
    for x in 0..gd {
        for y in 0..gd {
            let v = form.get(x, y, 0);
            if !v.is_zero() {
                pair1.set(x, y, 0, v.clone());
            }
        }
    }
    for u in 0..gd {
        let eu = basis_vec(gd, u);
        for x in 0..md {
            // g_1 m = g . phi^{-1}(m) inside A_M.
            let img = a_m.act(&eu, &phi_inv.mat_vec(&basis_vec(md, x)));
            for (k, v) in img.iter().enumerate() {
                if !v.is_zero() {
                    pair1.set(u, gd + x, 1 + k, v.clone());
                    pair1.set(gd + x, u, 1 + k, v.clone());
                }
            }
        }
    }
    let mut partial = RatMatrix::zero(d1, d0);
    for a in 0..md {
        let img = phi.mat_vec(&basis_vec(md, a));
        for (k, v) in img.iter().enumerate() {
            if !v.is_zero() {
                *partial.at_mut(gd + k, 1 + a) = v.clone();
            }
        }
    }
    let out = Tca::new(d0, d1, partial, act0, brk0, pair1);
    debug_assert!(out.check().is_empty());
    Ok(out)
}

/// The degenerate case of `from_lie_pair` with M = 0: the scalar line plus
/// a Lie algebra with an invariant form, and the zero boundary map.
pub fn from_lie_with_form(g: &LeibnizAlg, form: &Trilinear) -> Result<Tca, Error> {
    let empty = LeibnizModule::new(g.clone(), 0, Trilinear::zero(g.dim(), 0, 0));
    from_lie_pair(g, form, &empty, &empty, &RatMatrix::zero(0, 0))
}

impl core::fmt::Debug for Tca {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Tca(dims {} + {})", self.d0, self.d1)
    }
}

#[cfg(test)]
pub(crate) mod test_fixtures {
    use super::*;

    /// Trace-proportional invariant form on sl2 with <e,f> = 1, <h,h> = 2.
    pub fn sl2_form() -> Trilinear {
        let mut form = Trilinear::zero(3, 3, 1);
        form.set(0, 1, 0, Rat::one());
        form.set(1, 0, 0, Rat::one());
        form.set(2, 2, 0, Rat::from(2));
        form
    }
}
