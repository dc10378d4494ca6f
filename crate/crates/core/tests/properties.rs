use proptest::prelude::*;
use proptest::sample::select;

use moisil::boolalg::{ultrafilters, Elem, FiniteBooleanAlgebra, Ideal};
use moisil::construct::{
    build_j, build_t, disjoint_tuples, lambda_functor, monotone_tuples, sigma, DisjointTuple,
    IdealSequenceObject, MonotoneTuple,
};
use moisil::lm::{canonical, check_axioms, j_to_phi, phi_to_j, AxiomSystem, LMAlgebra};
use moisil::mutation::mutants;
use moisil::mvn::{check_mv_axioms, mv_chain};
use moisil::stone::{theta_a, theta_t};

fn algebra_and_elements(
    max_atoms: usize,
) -> impl Strategy<Value = (FiniteBooleanAlgebra, Elem, Elem, Elem)> {
    (0..=max_atoms).prop_flat_map(|k| {
        let top: Elem = (1 << k) - 1;
        (Just(k), 0..=top, 0..=top, 0..=top)
            .prop_map(|(k, a, b, c)| (FiniteBooleanAlgebra::with_atoms(k).unwrap(), a, b, c))
    })
}

/// A φ-signature instance: a chain, `T(B)`, or `J(B)` converted.
fn lm_instance() -> impl Strategy<Value = LMAlgebra> {
    prop_oneof![
        (1usize..=6).prop_map(|n| canonical(n).unwrap()),
        (0usize..=2, 1usize..=4).prop_map(|(k, n)| {
            build_t(&FiniteBooleanAlgebra::with_atoms(k).unwrap(), n)
                .unwrap()
                .into_algebra()
        }),
        (0usize..=2, 1usize..=4).prop_map(|(k, n)| {
            let j = build_j(&FiniteBooleanAlgebra::with_atoms(k).unwrap(), n).unwrap();
            j_to_phi(j.algebra()).unwrap()
        }),
    ]
}

fn symmetric_object() -> impl Strategy<Value = IdealSequenceObject> {
    (0usize..=3, 1usize..=6).prop_flat_map(|(k, n)| {
        let b = FiniteBooleanAlgebra::with_atoms(k).unwrap();
        select(IdealSequenceObject::all_symmetric(&b, n))
    })
}

proptest! {
    #[test]
    fn powerset_laws((b, x, y, z) in algebra_and_elements(6)) {
        prop_assert_eq!(b.join(x, b.meet(y, z)), b.meet(b.join(x, y), b.join(x, z)));
        prop_assert_eq!(b.complement(b.join(x, y)), b.meet(b.complement(x), b.complement(y)));
        prop_assert_eq!(b.join(x, b.complement(x)), b.top());
        prop_assert_eq!(b.meet(x, b.complement(x)), b.bottom());
        prop_assert_eq!(b.leq(x, y), b.meet(x, y) == x);
    }

    #[test]
    fn principal_ideal_has_two_to_the_popcount_members((b, a, x, _) in algebra_and_elements(6)) {
        let ideal = Ideal::principal(&b, a).unwrap();
        prop_assert_eq!(ideal.members().len(), 1usize << a.count_ones());
        prop_assert_eq!(ideal.contains(x), x & !a == 0);
    }

    #[test]
    fn ultrafilters_split_the_algebra_in_half(k in 1usize..=6) {
        let b = FiniteBooleanAlgebra::with_atoms(k).unwrap();
        let us = ultrafilters(&b).unwrap();
        prop_assert_eq!(us.len(), k);
        for u in &us {
            prop_assert_eq!(b.elements().filter(|&e| u.contains(e)).count(), 1usize << (k - 1));
        }
    }

    #[test]
    fn tuple_counts_and_prefix_joins(k in 0usize..=3, n in 1usize..=5) {
        let b = FiniteBooleanAlgebra::with_atoms(k).unwrap();
        let mono = monotone_tuples(&b, n);
        prop_assert_eq!(mono.len(), (n + 1).pow(k as u32));
        prop_assert_eq!(disjoint_tuples(&b, n).len(), mono.len());
        for x in mono {
            let d = MonotoneTuple::new(&b, x.clone()).unwrap().to_disjoint();
            let y = d.entries();
            for i in 0..n {
                let prefix = y[..=i].iter().fold(0, |acc, &e| acc | e);
                prop_assert_eq!(prefix, x[i]);
                for j in 0..i {
                    prop_assert_eq!(y[i] & y[j], 0);
                }
            }
            let back = DisjointTuple::new(&b, y.to_vec()).unwrap().to_monotone();
            prop_assert_eq!(back.entries(), x.as_slice());
        }
    }

    #[test]
    fn canonical_unary_table(n in 1usize..=8) {
        let c = canonical(n).unwrap();
        for (i, j) in unary_cells(n) {
            let expected = if i + j > n { c.one() } else { c.zero() };
            prop_assert_eq!(c.op(i, j), expected);
        }
        prop_assert!(check_axioms(&c, AxiomSystem::L).unwrap().passes());
    }

    #[test]
    fn conversions_round_trip_and_match_definitions(l in lm_instance()) {
        let j = phi_to_j(&l).unwrap();
        prop_assert_eq!(&j_to_phi(&j).unwrap(), &l);
        let n = l.n();
        for x in l.elements() {
            prop_assert_eq!(j.op(n, x), l.op(1, x));
            for i in 1..n {
                prop_assert_eq!(j.op(i, x), l.meet(l.op(n - i + 1, x), l.star(l.op(n - i, x))));
            }
            for i in 1..=n {
                let joined = l.join_all((n - i + 1..=n).map(|k| j.op(k, x)));
                prop_assert_eq!(l.op(i, x), joined);
            }
        }
        prop_assert!(check_axioms(&j, AxiomSystem::J).unwrap().passes());
    }

    #[test]
    fn determination_principle(l in lm_instance()) {
        for x in l.elements() {
            for y in l.elements() {
                let same_nuances = (1..=l.n()).all(|i| l.op(i, x) == l.op(i, y));
                prop_assert_eq!(same_nuances, x == y);
            }
        }
    }

    #[test]
    fn single_entry_mutants_fail(n in 1usize..=5, seed in any::<u64>()) {
        let c = canonical(n).unwrap();
        for (m, mutant) in mutants(&c, 10, seed).unwrap() {
            prop_assert!(!check_axioms(&mutant, AxiomSystem::L).unwrap().passes(), "{:?}", m);
        }
    }

    #[test]
    fn sigma_then_lambda_keeps_ideal_sizes(obj in symmetric_object()) {
        let s = sigma(&obj).unwrap();
        prop_assert!(check_axioms(s.algebra(), AxiomSystem::J).unwrap().passes());
        let back = lambda_functor(s.algebra()).unwrap();
        prop_assert_eq!(back.n(), obj.n());
        prop_assert_eq!(back.base().atom_count(), obj.base().atom_count());
        let sizes = |o: &IdealSequenceObject| o.generators().iter().map(|g| g.count_ones()).collect::<Vec<_>>();
        prop_assert_eq!(sizes(&back), sizes(&obj));
    }

    #[test]
    fn stone_round_trip_keeps_generators(obj in symmetric_object()) {
        let x = theta_a(&obj).unwrap();
        prop_assert_eq!(x.point_count(), obj.base().atom_count());
        let back = theta_t(&x).unwrap();
        prop_assert_eq!(back.generators(), obj.generators());
        let again = theta_a(&back).unwrap();
        prop_assert_eq!(again.opens(), x.opens());
    }

    #[test]
    fn mv_chain_is_truncated_addition(n in 1usize..=8) {
        let a = mv_chain(n).unwrap();
        prop_assert_eq!(a.size(), n + 1);
        for x in 0..=n {
            prop_assert_eq!(a.star(x), n - x);
            for y in 0..=n {
                prop_assert_eq!(a.oplus(x, y), (x + y).min(n));
                prop_assert_eq!(a.odot(x, y), (x + y).saturating_sub(n));
            }
        }
        prop_assert!(check_mv_axioms(&a).passes());
    }
}

fn unary_cells(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (0..=n).map(move |j| (i, j))).collect()
}
