use std::collections::HashMap;
use std::fmt;

use itertools::iproduct;
use serde::Serialize;

use super::{LMAlgebra, Signature};
use crate::report::{AxiomReport, Witness};
use crate::Result;

/// The three axiom systems an algebra can be checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum AxiomSystem {
    /// De Morgan laws plus (L1)–(L6).
    L,
    /// De Morgan laws plus (L1)–(L5), (L7), (L8).
    LAlt,
    /// De Morgan laws plus (J1)–(J6).
    J,
}

impl AxiomSystem {
    pub fn signature(self) -> Signature {
        match self {
            AxiomSystem::L | AxiomSystem::LAlt => Signature::Phi,
            AxiomSystem::J => Signature::J,
        }
    }
}

impl fmt::Display for AxiomSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AxiomSystem::L => "L_SYSTEM",
            AxiomSystem::LAlt => "L_ALT",
            AxiomSystem::J => "J_SYSTEM",
        })
    }
}

pub fn check_axioms(l: &LMAlgebra, system: AxiomSystem) -> Result<AxiomReport> {
    l.require_signature(system.signature())?;
    let mut report = AxiomReport::new(system.to_string());
    de_morgan(l, &mut report);
    match system {
        AxiomSystem::L => {
            l1_to_l5(l, &mut report);
            determination(l, "L6", &mut report);
        }
        AxiomSystem::LAlt => {
            l1_to_l5(l, &mut report);
            l7_l8(l, &mut report);
        }
        AxiomSystem::J => j_system(l, &mut report),
    }
    Ok(report)
}

fn de_morgan(l: &LMAlgebra, r: &mut AxiomReport) {
    let el = || l.elements();
    let pairs = || iproduct!(el(), el());
    let triples = || iproduct!(el(), el(), el());
    let w2 = |(x, y): (usize, usize)| Witness::elements([x, y]);
    let w3 = |(x, y, z): (usize, usize, usize)| Witness::elements([x, y, z]);

    r.law(
        "DM-join-comm",
        pairs(),
        |&(x, y)| l.join(x, y) == l.join(y, x),
        w2,
    );
    r.law(
        "DM-meet-comm",
        pairs(),
        |&(x, y)| l.meet(x, y) == l.meet(y, x),
        w2,
    );
    r.law(
        "DM-join-assoc",
        triples(),
        |&(x, y, z)| l.join(x, l.join(y, z)) == l.join(l.join(x, y), z),
        w3,
    );
    r.law(
        "DM-meet-assoc",
        triples(),
        |&(x, y, z)| l.meet(x, l.meet(y, z)) == l.meet(l.meet(x, y), z),
        w3,
    );
    r.law(
        "DM-absorption",
        pairs(),
        |&(x, y)| l.join(x, l.meet(x, y)) == x && l.meet(x, l.join(x, y)) == x,
        w2,
    );
    r.law(
        "DM-distributive",
        triples(),
        |&(x, y, z)| l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z)),
        w3,
    );
    r.law(
        "DM-bounds",
        el(),
        |&x| l.join(x, l.zero) == x && l.meet(x, l.one) == x,
        |x| Witness::elements([x]),
    );
    r.law(
        "DM-involution",
        el(),
        |&x| l.star(l.star(x)) == x,
        |x| Witness::elements([x]),
    );
    r.law(
        "DM-de-morgan",
        pairs(),
        |&(x, y)| l.star(l.join(x, y)) == l.meet(l.star(x), l.star(y)),
        w2,
    );
}

fn l1_to_l5(l: &LMAlgebra, r: &mut AxiomReport) {
    let n = l.n;
    let el = || l.elements();
    r.law(
        "L1",
        iproduct!(1..=n, el(), el()),
        |&(i, x, y)| l.op(i, l.join(x, y)) == l.join(l.op(i, x), l.op(i, y)),
        |(i, x, y)| Witness::new([i], [x, y]),
    );
    r.law(
        "L2",
        iproduct!(1..=n, el()),
        |&(i, x)| l.join(l.op(i, x), l.star(l.op(i, x))) == l.one,
        |(i, x)| Witness::new([i], [x]),
    );
    r.law(
        "L3",
        iproduct!(1..=n, 1..=n, el()),
        |&(i, j, x)| l.op(i, l.op(j, x)) == l.op(j, x),
        |(i, j, x)| Witness::new([i, j], [x]),
    );
    r.law(
        "L4",
        iproduct!(1..=n, el()),
        |&(i, x)| l.op(i, l.star(x)) == l.star(l.op(n + 1 - i, x)),
        |(i, x)| Witness::new([i], [x]),
    );
    r.law(
        "L5",
        iproduct!(1..=n, 1..=n, el()).filter(|&(i, j, _)| i <= j),
        |&(i, j, x)| l.leq(l.op(i, x), l.op(j, x)),
        |(i, j, x)| Witness::new([i, j], [x]),
    );
}

fn l7_l8(l: &LMAlgebra, r: &mut AxiomReport) {
    let n = l.n;
    r.law(
        "L7",
        l.elements(),
        |&x| l.leq(x, l.op(n, x)),
        |x| Witness::elements([x]),
    );
    r.law(
        "L8",
        iproduct!(1..n, l.elements(), l.elements()),
        |&(i, x, y)| {
            let lhs = l.meet(l.meet(x, l.star(l.op(i, x))), l.op(i + 1, y));
            l.leq(lhs, y)
        },
        |(i, x, y)| Witness::new([i], [x, y]),
    );
}

/// Injectivity of `x ↦ (op_1(x), …, op_n(x))`.
fn determination(l: &LMAlgebra, law: &str, r: &mut AxiomReport) {
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut checked = 0;
    for x in l.elements() {
        checked += 1;
        if let Some(&y) = seen.get(&l.nuances(x)) {
            r.record(law, false, checked, Some(Witness::elements([y, x])));
            return;
        }
        seen.insert(l.nuances(x), x);
    }
    r.record(law, true, checked, None);
}

fn j_system(l: &LMAlgebra, r: &mut AxiomReport) {
    let n = l.n;
    let el = || l.elements();
    let upper_join = |i: usize, f: &dyn Fn(usize) -> usize| l.join_all((n - i + 1..=n).map(f));

    r.law(
        "J1",
        iproduct!(1..=n, el(), el()),
        |&(i, x, y)| {
            let xy = l.join(x, y);
            upper_join(i, &|k| l.op(k, xy)) == upper_join(i, &|k| l.join(l.op(k, x), l.op(k, y)))
        },
        |(i, x, y)| Witness::new([i], [x, y]),
    );
    r.annotate_last(format!("tested for i in 1..={n}"));
    r.law(
        "J2",
        iproduct!(1..=n, el()),
        |&(i, x)| l.join(l.op(i, x), l.star(l.op(i, x))) == l.one,
        |(i, x)| Witness::new([i], [x]),
    );
    r.law(
        "J3.1",
        iproduct!(1..n, 1..=n, el()),
        |&(k, i, x)| l.op(k, l.op(i, x)) == l.zero,
        |(k, i, x)| Witness::new([k, i], [x]),
    );
    r.law(
        "J3.2",
        iproduct!(1..=n, el()),
        |&(i, x)| l.op(n, l.op(i, x)) == l.op(i, x),
        |(i, x)| Witness::new([i], [x]),
    );
    r.law(
        "J4.1",
        iproduct!(1..n, el()),
        |&(k, x)| l.op(k, l.star(x)) == l.op(n - k, x),
        |(k, x)| Witness::new([k], [x]),
    );
    r.law(
        "J4.2",
        el(),
        |&x| l.op(n, l.star(x)) == l.meet_all((1..=n).map(|i| l.star(l.op(i, x)))),
        |x| Witness::elements([x]),
    );
    r.law(
        "J5",
        iproduct!(2..=n, el()),
        |&(j, x)| l.leq(l.op(j, x), l.star(l.join_all((1..j).map(|k| l.op(k, x))))),
        |(j, x)| Witness::new([j], [x]),
    );
    determination(l, "J6", r);
}

/// Basic consequences of the axioms and the center characterizations for φ
/// algebras;
/// pairwise disjointness of the J's for J algebras.
pub fn check_derived_props(l: &LMAlgebra) -> Result<AxiomReport> {
    l.require_valid("check_derived_props")?;
    let n = l.n;
    let el = || l.elements();
    let mut r = AxiomReport::new(format!("derived-{}", l.signature));
    match l.signature {
        Signature::Phi => {
            r.law(
                "phi-preserves-meet",
                iproduct!(1..=n, el(), el()),
                |&(i, x, y)| l.op(i, l.meet(x, y)) == l.meet(l.op(i, x), l.op(i, y)),
                |(i, x, y)| Witness::new([i], [x, y]),
            );
            r.law(
                "phi-meets-star-in-zero",
                iproduct!(1..=n, el()),
                |&(i, x)| l.meet(l.op(i, x), l.star(l.op(i, x))) == l.zero,
                |(i, x)| Witness::new([i], [x]),
            );
            r.law(
                "phi-fixes-starred-nuances",
                iproduct!(1..=n, 1..=n, el()),
                |&(i, j, x)| l.op(i, l.star(l.op(j, x))) == l.star(l.op(j, x)),
                |(i, j, x)| Witness::new([i, j], [x]),
            );
            r.law(
                "order-by-nuances",
                iproduct!(el(), el()),
                |&(x, y)| l.leq(x, y) == (1..=n).all(|i| l.leq(l.op(i, x), l.op(i, y))),
                |(x, y)| Witness::elements([x, y]),
            );
            r.annotate_last("x <= y iff phi_i(x) <= phi_i(y) for all i");
            r.informational(
                "order-by-nuances-one-element",
                "one-element reading: x <= y iff phi_i(x) <= phi_j(x), for all i, j",
                iproduct!(1..=n, 1..=n, el(), el()),
                |&(i, j, x, y)| l.leq(x, y) == l.leq(l.op(i, x), l.op(j, x)),
                |(i, j, x, y)| Witness::new([i, j], [x, y]),
            );
            r.law(
                "phi-brackets-element",
                el(),
                |&x| l.leq(l.op(1, x), x) && l.leq(x, l.op(n, x)),
                |x| Witness::elements([x]),
            );
            let complemented = |x: usize| l.join(x, l.star(x)) == l.one;
            let some_fixed = |x: usize| (1..=n).any(|i| l.op(i, x) == x);
            let all_fixed = |x: usize| (1..=n).all(|i| l.op(i, x) == x);
            let in_image = |x: usize| iproduct!(1..=n, el()).any(|(i, y)| l.op(i, y) == x);
            r.law(
                "center-characterizations",
                el(),
                |&x| {
                    let c = complemented(x);
                    c == some_fixed(x) && c == all_fixed(x) && c == in_image(x)
                },
                |x| Witness::elements([x]),
            );
        }
        Signature::J => {
            r.law(
                "disjoint",
                iproduct!(1..=n, 1..=n, el()).filter(|&(i, j, _)| i != j),
                |&(i, j, x)| l.meet(l.op(i, x), l.op(j, x)) == l.zero,
                |(i, j, x)| Witness::new([i, j], [x]),
            );
            if n == 1 {
                r.annotate_last("vacuous: a single J");
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lm::{canonical, phi_to_j};
    use crate::Error;

    fn swap_phi(l: &LMAlgebra, a: usize, b: usize) -> LMAlgebra {
        let mut unary = l.unary_tables().to_vec();
        unary.swap(a - 1, b - 1);
        l.with_unary(Signature::Phi, unary)
    }

    #[test]
    fn canonical_three_passes_every_phi_system() {
        let c3 = canonical(3).unwrap();
        assert!(check_axioms(&c3, AxiomSystem::L).unwrap().passes());
        assert!(check_axioms(&c3, AxiomSystem::LAlt).unwrap().passes());
    }

    #[test]
    fn swapped_phi_fails_l5() {
        let c3 = canonical(3).unwrap();
        let swapped = swap_phi(&c3, 1, 3);
        let report = check_axioms(&swapped, AxiomSystem::L).unwrap();
        assert!(!report.passes());
        let l5 = report.result("L5").unwrap();
        assert!(!l5.passed);
        // Scan oracle: the first (i, j, x) in (i, j, x) order with i <= j and
        // φ'_i(x) > φ'_j(x) where φ'_1 = φ_3, φ'_3 = φ_1.
        let phi = |i: usize, x: usize| c3.op(i, x);
        let swapped_phi = |i: usize, x: usize| match i {
            1 => phi(3, x),
            3 => phi(1, x),
            k => phi(k, x),
        };
        let expected = iproduct!(1..=3usize, 1..=3usize, 0..4usize)
            .find(|&(i, j, x)| i <= j && swapped_phi(i, x) > swapped_phi(j, x))
            .unwrap();
        assert_eq!(
            l5.witness,
            Some(Witness::new([expected.0, expected.1], [expected.2]))
        );
    }

    #[test]
    fn signature_mismatch_is_an_error() {
        let c3 = canonical(3).unwrap();
        assert!(matches!(
            check_axioms(&c3, AxiomSystem::J),
            Err(Error::SignatureMismatch { .. })
        ));
    }

    #[test]
    fn canonical_one_passes_j_after_conversion() {
        let j = phi_to_j(&canonical(1).unwrap()).unwrap();
        assert!(check_axioms(&j, AxiomSystem::J).unwrap().passes());
    }

    #[test]
    fn derived_props_on_canonical() {
        let c3 = canonical(3).unwrap();
        let report = check_derived_props(&c3).unwrap();
        assert!(report.passes(), "{report}");
        // The one-element reading is false already at x = y with i > j.
        assert!(
            !report
                .result("order-by-nuances-one-element")
                .unwrap()
                .passed
        );
        for x in 0..4 {
            assert!(c3.leq(c3.op(1, x), x) && c3.leq(x, c3.op(3, x)));
        }

        let j3 = phi_to_j(&c3).unwrap();
        assert_eq!(j3.meet(j3.op(1, 1), j3.op(2, 1)), j3.zero());
        assert!(check_derived_props(&j3).unwrap().passes());

        let j1 = phi_to_j(&canonical(1).unwrap()).unwrap();
        let r1 = check_derived_props(&j1).unwrap();
        assert!(r1.passes());
        assert_eq!(r1.result("disjoint").unwrap().checked, 0);
    }

    #[test]
    fn derived_props_requires_valid_input() {
        let bad = swap_phi(&canonical(3).unwrap(), 1, 3);
        assert!(matches!(
            check_derived_props(&bad),
            Err(Error::Precondition { .. })
        ));
    }
}
