//! The adjunction `C ⊣ T` between LM algebras and Boolean algebras, with unit
//! `η_L(x)(i) = φ_i(x)` and counit `ε_B(u) = u(1)`.

use super::{build_t, TupleAlgebra};
use crate::boolalg::{BooleanHom, FiniteBooleanAlgebra};
use crate::lm::{check_lm_hom, CenterView, LMAlgebra, LMHom, Signature};
use crate::report::{AxiomReport, Witness};
use crate::{Error, Result};

/// `η_L : L → T(C(L))`, with `C(L)` in its powerset coordinates.
#[derive(Debug, Clone)]
pub struct Eta {
    pub center: CenterView,
    pub target: TupleAlgebra,
    pub hom: LMHom,
    pub report: AxiomReport,
}

pub fn eta(l: &LMAlgebra) -> Result<Eta> {
    l.require_signature(Signature::Phi)?;
    l.require_valid("eta")?;
    let center = crate::lm::boolean_center(l)?;
    let target = build_t(center.algebra(), l.n())?;
    let mut map = Vec::with_capacity(l.size());
    for x in l.elements() {
        let tuple = (1..=l.n())
            .map(|i| center.to_bool(l.op(i, x)))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Verification {
                what: format!("a nuance of element {x} is not central"),
                report: None,
            })?;
        map.push(target.lookup(&tuple)?);
    }
    let hom = LMHom::new(map);
    let mut report = AxiomReport::new("eta");
    report.summarize("morphism", &check_lm_hom(l, target.algebra(), &hom.map));
    report.record("injective", hom.is_injective(), l.size() as u64, None);
    if !report.passes() {
        return Err(Error::verification("eta is not an LM embedding", report));
    }
    Ok(Eta {
        center,
        target,
        hom,
        report,
    })
}

/// `ε_B : C(T(B)) → B`.
#[derive(Debug, Clone)]
pub struct Epsilon {
    pub t: TupleAlgebra,
    pub center: CenterView,
    /// From the powerset coordinates of `C(T(B))` to `B`.
    pub hom: BooleanHom,
    pub report: AxiomReport,
}

pub fn epsilon(base: &FiniteBooleanAlgebra, n: usize) -> Result<Epsilon> {
    let t = build_t(base, n)?;
    let center = crate::lm::boolean_center(t.algebra())?;
    let map = center
        .algebra()
        .elements()
        .map(|e| t.tuple(center.element(e))[0])
        .collect();
    let hom = BooleanHom::new(center.algebra().clone(), base.clone(), map)?;
    let mut report = AxiomReport::new("epsilon");
    report.summarize("boolean-hom", &hom.validate());
    report.record("bijective", hom.is_bijective(), 1, None);
    if !report.passes() {
        return Err(Error::verification(
            "epsilon is not a Boolean isomorphism",
            report,
        ));
    }
    Ok(Epsilon {
        t,
        center,
        hom,
        report,
    })
}

/// Unit, counit and both triangle identities for `L` and `B = C(L)`:
/// `ε_{C(L)} ∘ C(η_L) = id` and `T(ε_B) ∘ η_{T(B)} = id`.
pub fn check_adjunction(l: &LMAlgebra) -> Result<AxiomReport> {
    let eta_l = eta(l)?;
    let base = eta_l.center.algebra().clone();
    let eps = epsilon(&base, l.n())?;
    let mut report = AxiomReport::new("adjunction");
    report.absorb("eta", eta_l.report.clone());
    report.absorb("epsilon", eps.report.clone());

    // ε_{C(L)} ∘ C(η_L): follow a central element through η_L into the
    // center of T(C(L)) and back down with ε.
    let center = &eta_l.center;
    report.law(
        "triangle-C",
        center.elements().iter().copied(),
        |&c| {
            let u = eta_l.hom.apply(c);
            match eps.center.to_bool(u) {
                Some(e) => Some(eps.hom.apply(e)) == center.to_bool(c),
                None => false,
            }
        },
        |c| Witness::elements([c]),
    );

    // T(ε_B) ∘ η_{T(B)} on T(B) = eps.t.
    let tb = &eps.t;
    let eta_t = eta(tb.algebra())?;
    if eta_t.center != eps.center {
        return Err(Error::Verification {
            what: "two computations of C(T(B)) disagree".into(),
            report: None,
        });
    }
    report.law(
        "triangle-T",
        tb.algebra().elements(),
        |&u| {
            let lifted = eta_t.target.tuple(eta_t.hom.apply(u));
            let pushed: Vec<_> = lifted.iter().map(|&e| eps.hom.apply(e)).collect();
            tb.index_of(&pushed) == Some(u)
        },
        |u| Witness::elements([u]),
    );
    Ok(report)
}
