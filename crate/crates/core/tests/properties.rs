//! Property tests for the linear substrate: canonicalization, lattice
//! arithmetic, and the closure operators.

use algebroids::{envelope, spin, Rat, RatMatrix, Subspace};
use proptest::prelude::*;

fn rat_matrix(rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |entries| {
        RatMatrix::from_flat(rows, cols, entries.into_iter().map(Rat::from).collect())
    })
}

fn any_matrix() -> impl Strategy<Value = RatMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| rat_matrix(r, c))
}

fn subspace(ambient: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, ambient), 0..=3).prop_map(move |rows| {
        Subspace::from_rows(
            ambient,
            rows.into_iter()
                .map(|r| r.into_iter().map(Rat::from).collect()),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in any_matrix()) {
        let once = m.rref().mat;
        prop_assert_eq!(once.rref().mat, once);
    }

    #[test]
    fn kernel_vectors_annihilate(m in any_matrix()) {
        for k in m.kernel() {
            prop_assert!(m.mat_vec(&k).iter().all(Rat::is_zero));
        }
    }

    #[test]
    fn dimension_formula(u in subspace(4), v in subspace(4)) {
        let s = u.sum(&v);
        let i = u.intersect(&v);
        prop_assert_eq!(u.dim() + v.dim(), s.dim() + i.dim());
        prop_assert!(s.contains_subspace(&u));
        prop_assert!(s.contains_subspace(&v));
        prop_assert!(u.contains_subspace(&i));
        prop_assert!(v.contains_subspace(&i));
    }

    #[test]
    fn spin_is_a_closure(
        seeds in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 0..=2),
        ops in prop::collection::vec(rat_matrix(3, 3), 1..=2),
    ) {
        let seeds: Vec<Vec<Rat>> = seeds
            .into_iter()
            .map(|r| r.into_iter().map(Rat::from).collect())
            .collect();
        let closed = spin(3, &seeds, &ops);
        // monotone
        for s in &seeds {
            prop_assert!(closed.contains(s));
        }
        // invariant
        for row in closed.basis_rows() {
            for op in &ops {
                prop_assert!(closed.contains(&op.mat_vec(row)));
            }
        }
        // idempotent
        let again = spin(3, closed.basis_rows(), &ops);
        prop_assert_eq!(again, closed);
    }

    #[test]
    fn envelope_contains_identity_and_is_closed(
        ops in prop::collection::vec(rat_matrix(3, 3), 0..=2),
    ) {
        let env = envelope(&ops, 3);
        prop_assert!(env.dim() >= 1);
        prop_assert!(env.dim() <= 9);
        prop_assert!(env.contains(&RatMatrix::identity(3).flatten()));
        for op in &ops {
            prop_assert!(env.contains(&op.flatten()));
        }
        // closed under composition: all basis pairs
        for x in env.basis_rows() {
            for y in env.basis_rows() {
                let mx = RatMatrix::from_flat(3, 3, x.clone());
                let my = RatMatrix::from_flat(3, 3, y.clone());
                prop_assert!(env.contains(&mx.mul(&my).flatten()));
            }
        }
    }

    #[test]
    fn rational_display_parse_round_trip(n in -1000i64..=1000, d in 1i64..=60) {
        let r = Rat::new(n, d);
        let s = r.to_string();
        prop_assert_eq!(s.parse::<Rat>().unwrap(), r);
    }
}

// Route equivalence as a metamorphic property: random single-entry
// mutations of the classified family's degree-0/1 structure never split
// the direct axiom sweep from the module-theoretic characterization.
proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tca_check_routes_agree_under_mutation(
        table in 0usize..4,
        i in 0usize..5,
        j in 0usize..5,
        k in 0usize..5,
        delta in prop_oneof![Just(-2i64), Just(-1), Just(1), Just(2)],
    ) {
        use algebroids::{FamilySpec, Tca};
        let base = Tca::from_algebroid(&FamilySpec::new(1).unwrap().build());
        let (d0, d1) = base.dims();
        let mut partial = base.partial().clone();
        let mut act0 = base.act0_table().clone();
        let mut brk0 = base.brk0_table().clone();
        let mut pair1 = base.pair1_table().clone();
        let d = Rat::from(delta);
        match table {
            0 => {
                let (a, b, c) = (i % d1, j % d0, k % d0);
                let v = act0.get(a, b, c) + &d;
                act0.set(a, b, c, v);
            }
            1 => {
                let (a, b, c) = (i % d1, j % d1, k % d1);
                let v = brk0.get(a, b, c) + &d;
                brk0.set(a, b, c, v);
            }
            2 => {
                let (a, b, c) = (i % d1, j % d1, k % d0);
                let v = pair1.get(a, b, c) + &d;
                pair1.set(a, b, c, v);
            }
            _ => {
                let (a, b) = (i % d1, j % d0);
                let v = partial.at(a, b) + &d;
                *partial.at_mut(a, b) = v;
            }
        }
        let mutated = Tca::new(d0, d1, partial, act0, brk0, pair1);
        prop_assert_eq!(
            mutated.check().is_empty(),
            mutated.check_module_view().all_passed()
        );
    }
}
