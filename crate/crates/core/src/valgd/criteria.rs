//! Hypothesis checker for the two indecomposability / non-simplicity
//! criteria. Each clause is evaluated with a witness and reported
//! separately; a conclusion is drawn only when every clause a route needs
//! has passed.
//!
//! Route 1 (locality): a local degree-0 algebra together with one of three
//! degeneracies — a nonzero pairing radical, or A failing to be a simple
//! module over the quotient Lie algebroid by the annihilator or by A.d(A).
//!
//! Route 2 (sl2 Levi): a nontrivial action with a nonzero square, an sl2
//! Levi factor with e_1 f a nonzero multiple of the unit, and the degree-1
//! space a simple (or semisimple, with ker d equal to the joint action
//! kernel) Leibniz algebra.
//!
//! Generation of the ambient graded algebra by degrees 0 and 1 cannot be
//! computed from algebroid data; it holds by construction for
//! algebroid-generated algebras and is recorded as an assumption clause.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::exactlin::{vec_add, vec_is_zero, vec_scale, Rat, RatMatrix, Subspace};
use crate::report::{Clause, ClauseStatus, Report};

use super::{QuotientIdeal, VertexAlgebroid};

/// Branches of the locality route.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LocalityBranch {
    PairingRadicalNonzero,
    NotSimpleOverAnnihilatorQuotient,
    NotSimpleOverAPartialAQuotient,
}

/// Branches of the sl2-Levi route.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sl2LeviBranch {
    SimpleLeibniz,
    SemisimpleLeibniz,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Route {
    Locality(LocalityBranch),
    Sl2Levi(Sl2LeviBranch),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Conclusion {
    NoVerdict,
    IndecomposableNonSimple(Route),
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conclusion::NoVerdict => write!(f, "NoVerdict"),
            Conclusion::IndecomposableNonSimple(route) => {
                write!(f, "IndecomposableNonSimple via ")?;
                match route {
                    Route::Locality(b) => {
                        write!(f, "locality criterion, branch ")?;
                        match b {
                            LocalityBranch::PairingRadicalNonzero => {
                                write!(f, "pairing-radical-nonzero")
                            }
                            LocalityBranch::NotSimpleOverAnnihilatorQuotient => {
                                write!(f, "not-simple-over-annihilator-quotient")
                            }
                            LocalityBranch::NotSimpleOverAPartialAQuotient => {
                                write!(f, "not-simple-over-a-partial-a-quotient")
                            }
                        }
                    }
                    Route::Sl2Levi(b) => {
                        write!(f, "sl2-levi criterion, branch ")?;
                        match b {
                            Sl2LeviBranch::SimpleLeibniz => write!(f, "simple-leibniz"),
                            Sl2LeviBranch::SemisimpleLeibniz => write!(f, "semisimple-leibniz"),
                        }
                    }
                }
            }
        }
    }
}

/// Clause-by-clause evaluation with the final verdict. The conclusion is
/// `NoVerdict` unless every clause required by some route passed.
#[derive(Clone, Debug)]
pub struct CriteriaVerdict {
    pub clauses: Vec<Clause>,
    pub conclusion: Conclusion,
}

impl CriteriaVerdict {
    pub fn report(&self) -> Report {
        Report {
            clauses: self.clauses.clone(),
        }
    }

    pub fn clause_passed(&self, id: &str) -> bool {
        self.clauses
            .iter()
            .any(|c| c.id == id && c.status == ClauseStatus::Pass)
    }
}

/// Evaluates every clause of both criteria on a valid vertex algebroid.
///
/// `levi` optionally supplies the ordered rows (e, f, h) of an sl2 Levi
/// candidate inside the degree-1 space; without it the sl2-Levi route is
/// skipped. When both routes succeed the sl2-Levi conclusion is preferred
/// (with the simple branch before the semisimple one); the locality
/// branches remain visible in the clause list.
pub fn evaluate_criteria(b: &VertexAlgebroid, levi: Option<&RatMatrix>) -> CriteriaVerdict {
    let mut report = Report::new();
    let adim = b.adim();
    let gdim = b.gdim();

    let dims_ok = adim >= 2 && gdim >= 1;
    report.check(
        "dims",
        dims_ok,
        &format!("dim A = {adim} (needs >= 2), dim degree-1 = {gdim} (needs >= 1)"),
    );
    report.pass(
        "generated-by-degrees-0-1",
        "assumption: holds by construction for algebroid-generated algebras",
    );

    // Locality route.
    let local = b.algebra().is_local();
    report.check("local-algebra", local, "");

    let rad = b.rad_pairing();
    let rad_nonzero = !rad.is_zero();
    report.check(
        "branch-pairing-radical-nonzero",
        rad_nonzero,
        &format!("pairing radical has dim {}", rad.dim()),
    );

    let ann_witness = quotient_module_not_simple(b, QuotientIdeal::Annihilator, &mut report);
    let ada_witness = quotient_module_not_simple(b, QuotientIdeal::APartialA, &mut report);

    // sl2-Levi route.
    let lb = b.leibniz();
    let action_nontrivial = !b.act_table().is_zero();
    report.check(
        "action-nontrivial",
        action_nontrivial,
        "A is not a trivial module of the degree-1 space",
    );

    // u_0 u is not identically zero: the quadratic form u -> [u,u]
    // vanishes iff all diagonal products and all polarizations vanish.
    let mut square_nonzero = false;
    let mut square_note = String::from("[u,u] = 0 for all u");
    'square: for i in 0..gdim {
        for j in 0..=i {
            let s = vec_add(
                &b.brk_table().product_of_basis(i, j),
                &b.brk_table().product_of_basis(j, i),
            );
            if !vec_is_zero(&s) {
                square_nonzero = true;
                square_note = format!("polarization at basis pair ({i},{j}) is nonzero");
                break 'square;
            }
        }
    }
    report.check("square-nonzero", square_nonzero, &square_note);

    let levi_ok = match levi {
        None => {
            report.skip("levi-sl2", "no Levi candidate supplied");
            false
        }
        Some(rows) => {
            let ok = check_levi_sl2(b, rows, &mut report);
            report.check("levi-sl2", ok, "");
            ok
        }
    };

    let simple = lb.is_simple();
    report.check("branch-simple-leibniz", simple, "");
    let semisimple = lb.is_semisimple();
    let ker_eq = b.ker_partial() == b.action_kernel();
    report.check(
        "branch-semisimple-leibniz",
        semisimple && ker_eq,
        &format!("semisimple: {semisimple}, ker d = action kernel: {ker_eq}"),
    );

    let mut conclusion = Conclusion::NoVerdict;
    if dims_ok && action_nontrivial && square_nonzero && levi_ok {
        if simple {
            conclusion =
                Conclusion::IndecomposableNonSimple(Route::Sl2Levi(Sl2LeviBranch::SimpleLeibniz));
        } else if semisimple && ker_eq {
            conclusion = Conclusion::IndecomposableNonSimple(Route::Sl2Levi(
                Sl2LeviBranch::SemisimpleLeibniz,
            ));
        }
    }
    if conclusion == Conclusion::NoVerdict && dims_ok && local {
        if rad_nonzero {
            conclusion = Conclusion::IndecomposableNonSimple(Route::Locality(
                LocalityBranch::PairingRadicalNonzero,
            ));
        } else if ann_witness {
            conclusion = Conclusion::IndecomposableNonSimple(Route::Locality(
                LocalityBranch::NotSimpleOverAnnihilatorQuotient,
            ));
        } else if ada_witness {
            conclusion = Conclusion::IndecomposableNonSimple(Route::Locality(
                LocalityBranch::NotSimpleOverAPartialAQuotient,
            ));
        }
    }
    CriteriaVerdict {
        clauses: report.clauses,
        conclusion,
    }
}

/// Clause: A is NOT a simple module over the chosen quotient Lie algebroid
/// (passing means non-simplicity, which is what the branch needs).
fn quotient_module_not_simple(
    b: &VertexAlgebroid,
    which: QuotientIdeal,
    report: &mut Report,
) -> bool {
    let id = match which {
        QuotientIdeal::Annihilator => "branch-not-simple-over-annihilator-quotient",
        QuotientIdeal::APartialA => "branch-not-simple-over-a-partial-a-quotient",
    };
    match b.quotient_lie_algebroid(which) {
        Err(e) => {
            report.fail(id, &format!("quotient construction failed: {e}"));
            false
        }
        Ok((_, module)) => {
            let (simple, witness) = module.simple_over_c();
            let note = match (&simple, &witness) {
                (false, Some(w)) => format!(
                    "invariant subspace witness of dim {} (basis {:?})",
                    w.dim(),
                    w.basis_rows()
                ),
                (false, None) => String::from("envelope deficient, no rational witness"),
                (true, _) => String::from("A is a simple module over the quotient"),
            };
            report.check(id, !simple, &note);
            !simple
        }
    }
}

/// The supplied (e, f, h) rows span a Levi subalgebra with the sl2 table
/// and e_1 f = k 1 for nonzero k.
fn check_levi_sl2(b: &VertexAlgebroid, rows: &RatMatrix, report: &mut Report) -> bool {
    let gdim = b.gdim();
    if rows.rows() != 3 || rows.cols() != gdim {
        report.fail("levi-shape", &format!("expected 3 rows of length {gdim}"));
        return false;
    }
    let e = rows.row(0).to_vec();
    let f = rows.row(1).to_vec();
    let h = rows.row(2).to_vec();
    let span = Subspace::from_rows(gdim, [e.clone(), f.clone(), h.clone()]);
    if span.dim() != 3 {
        report.fail("levi-shape", "candidate rows are linearly dependent");
        return false;
    }
    let lb = b.leibniz();
    let levi_ok = lb.verify_levi(&span);
    report.check("levi-complement", levi_ok, "");
    let table_ok = b.brk_vec(&e, &f) == h
        && b.brk_vec(&h, &e) == vec_scale(&Rat::from(2), &e)
        && b.brk_vec(&h, &f) == vec_scale(&Rat::from(-2), &f);
    report.check("levi-sl2-table", table_ok, "");
    // e_1 f = k 1 with k nonzero.
    let ef = b.pair_vec(&e, &f);
    let unit = b.algebra().unit();
    let k = scalar_multiple_of(&ef, unit);
    let k_ok = matches!(&k, Some(c) if !c.is_zero());
    report.check(
        "levi-pairing-scalar",
        k_ok,
        &match &k {
            Some(c) => format!("e_1 f = {c} * unit"),
            None => String::from("e_1 f is not a multiple of the unit"),
        },
    );
    levi_ok && table_ok && k_ok
}

/// When v = c * w for a scalar c, returns that scalar.
fn scalar_multiple_of(v: &[Rat], w: &[Rat]) -> Option<Rat> {
    assert_eq!(v.len(), w.len());
    if vec_is_zero(v) {
        return Some(Rat::zero());
    }
    let i = w.iter().position(|x| !x.is_zero())?;
    let c = &v[i] / &w[i];
    if *v == vec_scale(&c, w) {
        Some(c)
    } else {
        None
    }
}
