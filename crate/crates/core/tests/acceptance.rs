//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Everything is exact equality — no tolerances anywhere.

mod common;

use algebroids::exactlin::basis_vec;
use algebroids::tca::{from_lie_pair, from_lie_with_form};
use algebroids::{
    envelope, evaluate_criteria, hemisemidirect, probe_dim1_extension, probe_reference,
    simple_leibniz_sl2, sl2, sl2_module, CommAlg, Conclusion, FamilySpec, ProbeVariant,
    QuotientIdeal, Rat, RatMatrix, Route, Sl2LeviBranch, Subspace, Tca, Trilinear, VertexAlgebroid,
};

use common::{sl2_killing_algebroid, trivial_algebroid, zero_pairing_algebroid};

fn family(l: usize) -> (FamilySpec, VertexAlgebroid) {
    let spec = FamilySpec::new(l).unwrap();
    let b = spec.build();
    (spec, b)
}

fn sl2_form() -> Trilinear {
    let mut form = Trilinear::zero(3, 3, 1);
    form.set(0, 1, 0, Rat::one());
    form.set(1, 0, 0, Rat::one());
    form.set(2, 2, 0, Rat::from(2));
    form
}

#[test]
fn criterion_01_family_certification() {
    for l in 1..=4 {
        let (_, b) = family(l);
        let violations = b.check();
        assert!(
            violations.is_empty(),
            "l = {l}: {} violation(s), first: {}",
            violations.len(),
            violations[0]
        );
    }
    println!("acceptance 01 family-certification: PASS");
}

#[test]
fn criterion_02_simple_family_reproduction() {
    let (spec, b) = family(1);
    let g = spec.gdim();
    let n = spec.adim();
    let e = basis_vec(g, 0);
    let f = basis_vec(g, 1);
    let h = basis_vec(g, 2);
    let unit = b.algebra().unit().to_vec();

    // k = 1 and h_1 h = 2, with the four zero pairings on the Levi triple.
    assert_eq!(b.pair_vec(&e, &f), unit);
    let two_unit: Vec<Rat> = unit.iter().map(|x| x * &Rat::from(2)).collect();
    assert_eq!(b.pair_vec(&h, &h), two_unit);
    for (x, y) in [(&e, &e), (&f, &f), (&e, &h), (&f, &h)] {
        assert!(b.pair_vec(x, y).iter().all(Rat::is_zero));
    }

    assert_eq!(b.ker_partial(), Subspace::from_rows(n, [unit]));

    let lb = b.leibniz();
    let leib = lb.leib_ideal();
    assert_eq!(leib.dim(), 2);
    assert!(b.algebra().is_local());

    let da = b.partial_image();
    let ann = b.annihilator();
    assert_eq!(ann, da);
    assert_eq!(da, leib);
    assert!(b.rad_pairing().is_zero());

    let (algd, _) = b
        .quotient_lie_algebroid(QuotientIdeal::Annihilator)
        .unwrap();
    assert_eq!(algd.ldim(), 3);
    assert_eq!(algd.lie_table(), sl2().table());

    println!("acceptance 02 simple-family-reproduction: PASS");
}

#[test]
fn criterion_03_semisimple_family_reproduction() {
    for l in [2usize, 3] {
        let (spec, b) = family(l);
        let n = spec.adim();
        assert_eq!(b.leibniz().leib_ideal().dim(), 2 * l, "l = {l}");
        assert_eq!(
            b.ker_partial(),
            Subspace::from_rows(n, [b.algebra().unit().to_vec()]),
            "l = {l}"
        );
        let (_, module) = b
            .quotient_lie_algebroid(QuotientIdeal::Annihilator)
            .unwrap();
        for j in 1..=l {
            let nj = Subspace::from_rows(
                n,
                [
                    basis_vec(n, spec.a_index(j, 0)),
                    basis_vec(n, spec.a_index(j, 1)),
                ],
            );
            assert_eq!(nj.dim(), 2);
            assert!(b.algebra().is_ideal(&nj), "l = {l}, j = {j}");
            assert!(nj.dim() < n);
            let restricted = module.restrict(&nj).expect("summand is invariant");
            assert_eq!(
                envelope(&restricted.action_ops(), 2).dim(),
                4,
                "l = {l}, j = {j}: envelope must be the full operator algebra"
            );
            let (simple, _) = restricted.simple_over_c();
            assert!(simple, "l = {l}, j = {j}");
        }
    }
    println!("acceptance 03 semisimple-family-reproduction: PASS");
}

#[test]
fn criterion_04_criteria_engine_verdicts() {
    // l = 1: simple branch of the sl2-Levi route.
    let (spec, b) = family(1);
    let verdict = evaluate_criteria(&b, Some(&spec.levi_rows()));
    assert_eq!(
        verdict.conclusion,
        Conclusion::IndecomposableNonSimple(Route::Sl2Levi(Sl2LeviBranch::SimpleLeibniz))
    );
    // The same fixture also triggers the annihilator-quotient branch of
    // the locality route, with the span of the a's as witness.
    assert!(verdict.clause_passed("branch-not-simple-over-annihilator-quotient"));
    assert!(verdict.clause_passed("local-algebra"));
    let (_, module) = b
        .quotient_lie_algebroid(QuotientIdeal::Annihilator)
        .unwrap();
    let (simple, witness) = module.simple_over_c();
    assert!(!simple);
    assert_eq!(
        witness.unwrap(),
        Subspace::from_int_rows(3, &[&[0, 1, 0], &[0, 0, 1]])
    );

    // l >= 2: semisimple branch, witness inside the span of the a's.
    for l in [2usize, 3] {
        let (spec, b) = family(l);
        let verdict = evaluate_criteria(&b, Some(&spec.levi_rows()));
        assert_eq!(
            verdict.conclusion,
            Conclusion::IndecomposableNonSimple(Route::Sl2Levi(Sl2LeviBranch::SemisimpleLeibniz)),
            "l = {l}"
        );
        assert!(verdict.clause_passed("branch-not-simple-over-annihilator-quotient"));
        let (_, module) = b
            .quotient_lie_algebroid(QuotientIdeal::Annihilator)
            .unwrap();
        let (simple, witness) = module.simple_over_c();
        assert!(!simple);
        let w = witness.unwrap();
        let n = spec.adim();
        let a_span = Subspace::from_rows(n, (1..n).map(|i| basis_vec(n, i)));
        assert!(a_span.contains_subspace(&w));
        assert!(w.dim() > 0 && w.dim() < n);
    }

    // One-dimensional A: no verdict, the dimension clause fails.
    let verdict = evaluate_criteria(&sl2_killing_algebroid(), None);
    assert_eq!(verdict.conclusion, Conclusion::NoVerdict);
    assert!(!verdict.clause_passed("dims"));

    println!("acceptance 04 criteria-engine-verdicts: PASS");
}

#[test]
fn criterion_05_dim1_probe() {
    for variant in [ProbeVariant::Unit, ProbeVariant::Nil] {
        let outcome = probe_dim1_extension(variant);
        assert!(outcome.is_infeasible(), "{variant:?} must be infeasible");
        assert!(!outcome.trace().is_empty());
        assert!(outcome
            .trace()
            .iter()
            .any(|line| line.contains("INFEASIBLE")));
        // Deterministic replay.
        let again = probe_dim1_extension(variant);
        assert_eq!(outcome.trace(), again.trace());
    }
    let reference = probe_reference();
    assert!(!reference.is_infeasible());
    assert!(reference
        .trace()
        .iter()
        .any(|line| line.contains("FEASIBLE")));
    println!("acceptance 05 dim1-probe: PASS");
}

#[test]
fn criterion_06_leibniz_suite() {
    for dim_v in 2..=5usize {
        let l = simple_leibniz_sl2(dim_v).unwrap();
        let total = 3 + dim_v;
        let module_span = Subspace::from_rows(total, (3..total).map(|i| basis_vec(total, i)));
        assert_eq!(l.leib_ideal(), module_span, "dim V = {dim_v}");
        assert!(l.is_simple(), "dim V = {dim_v}");
        // Inside the Leib ideal the bracket vanishes, so its derived
        // series reaches zero in one step.
        let inner = l.restrict(&l.leib_ideal()).unwrap();
        let series = inner.derived_series();
        assert_eq!(series.len(), 2);
        assert!(series[1].is_zero());
    }

    let doubled = hemisemidirect(&sl2(), &sl2_module(1).direct_sum(&sl2_module(1))).unwrap();
    assert!(doubled.is_semisimple());
    assert!(!doubled.is_simple());

    println!("acceptance 06 leibniz-suite: PASS");
}

#[test]
fn criterion_07_tca_equivalence_corpus() {
    let m = sl2_module(1);
    let l1 = family(1).1;
    let base = Tca::from_algebroid(&l1);

    let mut corpus: Vec<(String, Tca)> = vec![
        ("family-l1".into(), base.clone()),
        ("family-l2".into(), Tca::from_algebroid(&family(2).1)),
        ("family-l3".into(), Tca::from_algebroid(&family(3).1)),
        (
            "scalar-plus-sl2".into(),
            from_lie_with_form(&sl2(), &sl2_form()).unwrap(),
        ),
        ("zero-2-2".into(), Tca::trivial(2, 2)),
        ("zero-1-0".into(), Tca::trivial(1, 0)),
        (
            "lie-pair-weight1".into(),
            from_lie_pair(&sl2(), &sl2_form(), &m, &m, &RatMatrix::identity(2)).unwrap(),
        ),
        (
            "zero-pairing".into(),
            Tca::from_algebroid(&zero_pairing_algebroid()),
        ),
    ];

    // Mutants: break the pairing symmetry.
    {
        let mut pair = base.pair1_table().clone();
        pair.set(1, 0, 0, Rat::zero());
        corpus.push((
            "mutant-pair-asymmetric".into(),
            Tca::new(
                3,
                5,
                base.partial().clone(),
                base.act0_table().clone(),
                base.brk0_table().clone(),
                pair,
            ),
        ));
    }
    // Mutants: zero a column of the boundary map.
    {
        let mut partial = base.partial().clone();
        for r in 0..5 {
            *partial.at_mut(r, 1) = Rat::zero();
        }
        corpus.push((
            "mutant-partial-column".into(),
            Tca::new(
                3,
                5,
                partial,
                base.act0_table().clone(),
                base.brk0_table().clone(),
                base.pair1_table().clone(),
            ),
        ));
    }
    // Mutants: rewire the bracket so [e,f] = e.
    {
        let mut brk = base.brk0_table().clone();
        brk.set(0, 1, 2, Rat::zero());
        brk.set(0, 1, 0, Rat::one());
        corpus.push((
            "mutant-bracket".into(),
            Tca::new(
                3,
                5,
                base.partial().clone(),
                base.act0_table().clone(),
                brk,
                base.pair1_table().clone(),
            ),
        ));
    }
    // Mutants: kill one action entry.
    {
        let mut act = base.act0_table().clone();
        act.set(0, 2, 1, Rat::zero());
        corpus.push((
            "mutant-action".into(),
            Tca::new(
                3,
                5,
                base.partial().clone(),
                act,
                base.brk0_table().clone(),
                base.pair1_table().clone(),
            ),
        ));
    }

    assert!(corpus.len() >= 10);
    let mut mutants_caught = 0;
    for (name, t) in &corpus {
        let direct = t.check().is_empty();
        let module_view = t.check_module_view().all_passed();
        assert_eq!(
            direct, module_view,
            "{name}: axiom route and module route disagree"
        );
        if !direct {
            mutants_caught += 1;
        }
    }
    assert_eq!(mutants_caught, 4, "all four mutants must be invalid");
    println!(
        "acceptance 07 tca-equivalence-corpus: PASS ({} fixtures, {} mutants)",
        corpus.len(),
        mutants_caught
    );
}

#[test]
fn criterion_08_mutation_kill_rate() {
    let (_, b) = family(1);
    let n = b.adim();
    let g = b.gdim();
    let mut total = 0usize;
    let mut killed = 0usize;
    let mut survivors: Vec<String> = Vec::new();

    let mut run = |label: String, mutant: VertexAlgebroid| {
        total += 1;
        if mutant.first_violation().is_some() {
            killed += 1;
        } else {
            survivors.push(label);
        }
    };

    // Algebra product.
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut mul = b.algebra().table().clone();
                let bumped = mul.get(i, j, k) + &Rat::one();
                mul.set(i, j, k, bumped);
                let a = CommAlg::new(n, b.algebra().unit().to_vec(), mul);
                run(
                    format!("mul[{i}][{j}][{k}]"),
                    VertexAlgebroid::new(
                        a,
                        g,
                        b.mact_table().clone(),
                        b.brk_table().clone(),
                        b.pair_table().clone(),
                        b.act_table().clone(),
                        b.partial_matrix().clone(),
                    ),
                );
            }
        }
    }
    // A-action on the degree-1 space.
    for i in 0..n {
        for j in 0..g {
            for k in 0..g {
                let mut mact = b.mact_table().clone();
                let bumped = mact.get(i, j, k) + &Rat::one();
                mact.set(i, j, k, bumped);
                run(
                    format!("mact[{i}][{j}][{k}]"),
                    VertexAlgebroid::new(
                        b.algebra().clone(),
                        g,
                        mact,
                        b.brk_table().clone(),
                        b.pair_table().clone(),
                        b.act_table().clone(),
                        b.partial_matrix().clone(),
                    ),
                );
            }
        }
    }
    // Bracket.
    for i in 0..g {
        for j in 0..g {
            for k in 0..g {
                let mut brk = b.brk_table().clone();
                let bumped = brk.get(i, j, k) + &Rat::one();
                brk.set(i, j, k, bumped);
                run(
                    format!("brk[{i}][{j}][{k}]"),
                    VertexAlgebroid::new(
                        b.algebra().clone(),
                        g,
                        b.mact_table().clone(),
                        brk,
                        b.pair_table().clone(),
                        b.act_table().clone(),
                        b.partial_matrix().clone(),
                    ),
                );
            }
        }
    }
    // Pairing.
    for i in 0..g {
        for j in 0..g {
            for k in 0..n {
                let mut pair = b.pair_table().clone();
                let bumped = pair.get(i, j, k) + &Rat::one();
                pair.set(i, j, k, bumped);
                run(
                    format!("pair[{i}][{j}][{k}]"),
                    VertexAlgebroid::new(
                        b.algebra().clone(),
                        g,
                        b.mact_table().clone(),
                        b.brk_table().clone(),
                        pair,
                        b.act_table().clone(),
                        b.partial_matrix().clone(),
                    ),
                );
            }
        }
    }
    // Anchor.
    for i in 0..g {
        for j in 0..n {
            for k in 0..n {
                let mut act = b.act_table().clone();
                let bumped = act.get(i, j, k) + &Rat::one();
                act.set(i, j, k, bumped);
                run(
                    format!("act[{i}][{j}][{k}]"),
                    VertexAlgebroid::new(
                        b.algebra().clone(),
                        g,
                        b.mact_table().clone(),
                        b.brk_table().clone(),
                        b.pair_table().clone(),
                        act,
                        b.partial_matrix().clone(),
                    ),
                );
            }
        }
    }
    // Boundary map.
    for i in 0..g {
        for j in 0..n {
            let mut partial = b.partial_matrix().clone();
            let bumped = partial.at(i, j) + &Rat::one();
            *partial.at_mut(i, j) = bumped;
            run(
                format!("partial[{i}][{j}]"),
                VertexAlgebroid::new(
                    b.algebra().clone(),
                    g,
                    b.mact_table().clone(),
                    b.brk_table().clone(),
                    b.pair_table().clone(),
                    b.act_table().clone(),
                    partial,
                ),
            );
        }
    }

    assert_eq!(
        total,
        n * n * n + n * g * g + g * g * g + g * g * n + g * n * n + g * n
    );
    assert_eq!(killed, total, "surviving mutants: {survivors:?}");
    println!("acceptance 08 mutation-kill-rate: PASS ({killed}/{total} killed)");
}

#[test]
fn criterion_09_containment_invariants() {
    let fixtures: Vec<(&str, VertexAlgebroid)> = vec![
        ("family-l1", family(1).1),
        ("family-l2", family(2).1),
        ("family-l3", family(3).1),
        ("family-l4", family(4).1),
        ("sl2-killing", sl2_killing_algebroid()),
        ("zero-pairing", zero_pairing_algebroid()),
        ("trivial", trivial_algebroid()),
    ];
    for (name, b) in &fixtures {
        assert!(b.check().is_empty(), "{name} must be valid");
        let rad = b.rad_pairing();
        let ann = b.annihilator();
        let da = b.partial_image();
        let ada = b.a_partial_a();
        let leib = b.leibniz().leib_ideal();
        let ker = b.ker_partial();
        assert!(ann.contains_subspace(&rad), "{name}: rad in ann");
        assert!(da.contains_subspace(&leib), "{name}: leib in dA");
        assert!(ann.contains_subspace(&da), "{name}: dA in ann");
        assert!(ann.contains_subspace(&ada), "{name}: A dA in ann");
        assert!(ker.contains(b.algebra().unit()), "{name}: unit in ker d");
    }
    println!("acceptance 09 containment-invariants: PASS");
}
