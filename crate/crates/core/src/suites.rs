//! Instance families and the verification suites run over them.
//!
//! Each suite returns one [`AxiomReport`] whose laws are per-instance
//! summaries, so a failure names the instance and carries its witness.

use itertools::iproduct;

use crate::boolalg::FiniteBooleanAlgebra;
use crate::construct::{
    build_j, build_t, check_adjunction, check_complemented_star, check_lm_side, check_object_side,
    disjoint_tuples, monotone_tuples, sigma, DisjointTuple, IdealSequenceObject, MonotoneTuple,
    NaturalityConfig,
};
use crate::lm::{
    canonical, check_axioms, j_to_phi, moisil_represent, phi_to_j, AxiomSystem, LMAlgebra,
};
use crate::mutation::{mutants, mv_mutants};
use crate::mvn::{
    check_l_proper, check_mv_axioms, check_mvn_axioms, check_somv_condition, mv_chain, SomvInput,
};
use crate::report::{AxiomReport, Witness};
use crate::stone::{check_space_roundtrip, check_stone_roundtrip, theta_a, FiniteSpaceWithOpens};
use crate::Result;

/// Bounds for the generated LM instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Family {
    pub canonical_n: usize,
    pub tuple_atoms: usize,
    pub tuple_n: usize,
    pub sigma_atoms: usize,
    pub sigma_n: usize,
}

impl Family {
    /// Canonical chains up to 6, `T(B)`/`J(B)` up to 3 atoms and `n = 5`,
    /// every `Σ(obj)` up to 2 atoms and `n = 5`.
    pub fn standard() -> Self {
        Family {
            canonical_n: 6,
            tuple_atoms: 3,
            tuple_n: 5,
            sigma_atoms: 2,
            sigma_n: 5,
        }
    }

    /// Every family capped by the same atom and `n` limits.
    pub fn bounded(max_atoms: usize, max_n: usize) -> Self {
        Family {
            canonical_n: max_n,
            tuple_atoms: max_atoms,
            tuple_n: max_n,
            sigma_atoms: max_atoms,
            sigma_n: max_n,
        }
    }
}

/// A generated LM algebra in both signatures.
#[derive(Debug, Clone)]
pub struct Instance {
    pub label: String,
    pub phi: LMAlgebra,
    pub j: LMAlgebra,
    /// Atoms of the base algebra, for tuple and Σ instances.
    pub atoms: Option<usize>,
    pub kind: InstanceKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceKind {
    Canonical,
    T,
    J,
    Sigma,
}

pub fn instances(family: &Family) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 1..=family.canonical_n {
        let phi = canonical(n)?;
        out.push(Instance {
            label: format!("canonical({n})"),
            j: phi_to_j(&phi)?,
            phi,
            atoms: None,
            kind: InstanceKind::Canonical,
        });
    }
    for (k, n) in iproduct!(0..=family.tuple_atoms, 1..=family.tuple_n) {
        let b = FiniteBooleanAlgebra::with_atoms(k)?;
        let phi = build_t(&b, n)?.into_algebra();
        out.push(Instance {
            label: format!("T(2^{k},{n})"),
            j: phi_to_j(&phi)?,
            phi,
            atoms: Some(k),
            kind: InstanceKind::T,
        });
        let j = build_j(&b, n)?.into_algebra();
        out.push(Instance {
            label: format!("J(2^{k},{n})"),
            phi: j_to_phi(&j)?,
            j,
            atoms: Some(k),
            kind: InstanceKind::J,
        });
    }
    for (k, n) in iproduct!(0..=family.sigma_atoms, 1..=family.sigma_n) {
        let b = FiniteBooleanAlgebra::with_atoms(k)?;
        for obj in IdealSequenceObject::all_symmetric(&b, n) {
            let j = sigma(&obj)?.into_algebra();
            out.push(Instance {
                label: format!("Sigma(2^{k},{n},{:?})", obj.generators()),
                phi: j_to_phi(&j)?,
                j,
                atoms: Some(k),
                kind: InstanceKind::Sigma,
            });
        }
    }
    Ok(out)
}

/// Canonical chains pass all three axiom systems, and every seeded
/// single-entry mutant fails the native system.
pub fn axioms(max_n: usize, mutants_per_n: usize, seed: u64) -> Result<AxiomReport> {
    let mut report = AxiomReport::new("suite-axioms");
    for n in 1..=max_n {
        let c = canonical(n)?;
        report.summarize(
            &format!("canonical({n})/L"),
            &check_axioms(&c, AxiomSystem::L)?,
        );
        report.summarize(
            &format!("canonical({n})/Lalt"),
            &check_axioms(&c, AxiomSystem::LAlt)?,
        );
        let j = phi_to_j(&c)?;
        report.summarize(
            &format!("canonical({n})/J"),
            &check_axioms(&j, AxiomSystem::J)?,
        );
        for (label, base, system) in [("phi", &c, AxiomSystem::L), ("j", &j, AxiomSystem::J)] {
            let all = mutants(base, mutants_per_n, seed.wrapping_add(n as u64))?;
            let mut caught = 0;
            let mut escaped = None;
            for (m, mutant) in &all {
                if check_axioms(mutant, system)?.passes() {
                    escaped.get_or_insert(*m);
                } else {
                    caught += 1;
                }
            }
            report.record(
                &format!("canonical({n})/{label}-mutants-caught"),
                escaped.is_none(),
                all.len() as u64,
                escaped.map(|m| Witness::new([m.row, m.col], [m.value])),
            );
            report.annotate_last(format!("{caught}/{} mutants rejected", all.len()));
        }
    }
    Ok(report)
}

/// Both conversion round trips are table identities and each converted
/// structure passes the other signature's axioms.
pub fn definitions(instances: &[Instance]) -> Result<AxiomReport> {
    let mut report = AxiomReport::new("suite-definitions");
    for inst in instances {
        let l = &inst.label;
        report.record(
            &format!("{l}/phi-j-phi"),
            j_to_phi(&phi_to_j(&inst.phi)?)? == inst.phi,
            1,
            None,
        );
        report.record(
            &format!("{l}/j-phi-j"),
            phi_to_j(&j_to_phi(&inst.j)?)? == inst.j,
            1,
            None,
        );
        report.summarize(
            &format!("{l}/phi-passes-L"),
            &check_axioms(&inst.phi, AxiomSystem::L)?,
        );
        report.summarize(
            &format!("{l}/j-passes-J"),
            &check_axioms(&inst.j, AxiomSystem::J)?,
        );
    }
    Ok(report)
}

/// `|T(B)| = |J(B)| = (n+1)^k`, and `f`, `g` are mutually inverse.
pub fn cardinality(max_atoms: usize, max_n: usize) -> Result<AxiomReport> {
    let mut report = AxiomReport::new("suite-cardinality");
    for (k, n) in iproduct!(0..=max_atoms, 1..=max_n) {
        let b = FiniteBooleanAlgebra::with_atoms(k)?;
        let expected = (n + 1).pow(k as u32);
        let label = format!("2^{k},n={n}");
        let mono = monotone_tuples(&b, n);
        let disj = disjoint_tuples(&b, n);
        report.record(
            &format!("{label}/T-size"),
            build_t(&b, n)?.size() == expected,
            1,
            None,
        );
        report.record(
            &format!("{label}/J-size"),
            build_j(&b, n)?.size() == expected,
            1,
            None,
        );
        report.record(
            &format!("{label}/enumeration-size"),
            mono.len() == expected && disj.len() == expected,
            1,
            None,
        );
        report.law(
            &format!("{label}/g-after-f"),
            disj.iter().enumerate(),
            |(_, y)| {
                let y = DisjointTuple::new(&b, y.to_vec()).expect("enumerated tuple");
                y.to_monotone().to_disjoint() == y
            },
            |(u, _)| Witness::elements([u]),
        );
        report.law(
            &format!("{label}/f-after-g"),
            mono.iter().enumerate(),
            |(_, x)| {
                let x = MonotoneTuple::new(&b, x.to_vec()).expect("enumerated tuple");
                x.to_disjoint().to_monotone() == x
            },
            |(u, _)| Witness::elements([u]),
        );
    }
    Ok(report)
}

pub fn adjunction(instances: &[Instance]) -> Result<AxiomReport> {
    let mut report = AxiomReport::new("suite-adjunction");
    for inst in instances {
        report.summarize(
            &format!("{}/adjunction", inst.label),
            &check_adjunction(&inst.phi)?,
        );
    }
    Ok(report)
}

/// Both halves of the equivalence: the LM side on every instance and the
/// object side on every symmetric ideal sequence within the bounds.
pub fn equivalence(
    instances: &[Instance],
    max_atoms: usize,
    max_n: usize,
    cfg: &NaturalityConfig,
) -> Result<AxiomReport> {
    let mut report = AxiomReport::new("suite-equivalence");
    for inst in instances {
        report.summarize(
            &format!("{}/lm-side", inst.label),
            &check_lm_side(&inst.j, cfg)?,
        );
    }
    for (k, n) in iproduct!(0..=max_atoms, 1..=max_n) {
        let b = FiniteBooleanAlgebra::with_atoms(k)?;
        for obj in IdealSequenceObject::all_symmetric(&b, n) {
            report.summarize(
                &format!("obj(2^{k},{n},{:?})/object-side", obj.generators()),
                &check_object_side(&obj, cfg)?,
            );
        }
    }
    Ok(report)
}

/// The transported star on `J(B)` is an involution satisfying De Morgan,
/// and the complemented star formula fails involution on `J(2^2, 2)`.
/// The closed forms for `J_i` and join are verified when `J(B)` is built.
pub fn closed_forms(max_atoms: usize, max_n: usize) -> Result<AxiomReport> {
    let mut report = AxiomReport::new("suite-closed-forms");
    for (k, n) in iproduct!(0..=max_atoms, 1..=max_n) {
        let b = FiniteBooleanAlgebra::with_atoms(k)?;
        let j = build_j(&b, n)?;
        let l = j.algebra();
        let label = format!("J(2^{k},{n})");
        report.record(
            &format!("{label}/closed-forms"),
            true,
            l.size() as u64,
            None,
        );
        report.law(
            &format!("{label}/star-involution"),
            l.elements(),
            |&u| l.star(l.star(u)) == u,
            |u| Witness::elements([u]),
        );
        report.law(
            &format!("{label}/star-de-morgan"),
            iproduct!(l.elements(), l.elements()),
            |&(u, v)| {
                l.star(l.join(u, v)) == l.meet(l.star(u), l.star(v))
                    && l.star(l.meet(u, v)) == l.join(l.star(u), l.star(v))
            },
            |(u, v)| Witness::elements([u, v]),
        );
    }
    let b = FiniteBooleanAlgebra::with_atoms(2)?;
    let complemented = check_complemented_star(&build_j(&b, 2)?);
    let involution = complemented
        .result("involution")
        .expect("law is always evaluated");
    report.record(
        "J(2^2,2)/complemented-star-breaks-involution",
        !involution.passed,
        involution.checked,
        involution.witness.clone(),
    );
    Ok(report)
}

/// Round trips from every symmetric ideal sequence and every symmetric open
/// family within the bounds.
pub fn duality(max_atoms: usize, max_n: usize, cfg: &NaturalityConfig) -> Result<AxiomReport> {
    let mut report = AxiomReport::new("suite-duality");
    for (k, n) in iproduct!(0..=max_atoms, 1..=max_n) {
        let b = FiniteBooleanAlgebra::with_atoms(k)?;
        for obj in IdealSequenceObject::all_symmetric(&b, n) {
            report.summarize(
                &format!("obj(2^{k},{n},{:?})", obj.generators()),
                &check_stone_roundtrip(&obj, cfg)?,
            );
        }
        for x in FiniteSpaceWithOpens::all_symmetric(k, n) {
            report.summarize(
                &format!("space({k},{n},{:?})", x.opens()),
                &check_space_roundtrip(&x, cfg)?,
            );
        }
    }
    Ok(report)
}

/// Chains pass MV and MV_n, the 3-chain fails MV_2, ⊕ mutants are caught,
/// the non-proper `n = 6` sequence fails at `(4, 2)` on both sides of the
/// duality, and the two conditions agree on every small instance.
pub fn mv(max_n: usize, max_atoms: usize, seed: u64) -> Result<AxiomReport> {
    let mut report = AxiomReport::new("suite-mv");
    for n in 1..=max_n {
        let a = mv_chain(n)?;
        report.summarize(&format!("chain({n})/MV"), &check_mv_axioms(&a));
        report.summarize(&format!("chain({n})/MV_{n}"), &check_mvn_axioms(&a, n));
        let escaped = mv_mutants(&a, 20, seed.wrapping_add(n as u64))
            .into_iter()
            .find(|(_, m)| check_mv_axioms(m).passes());
        report.record(
            &format!("chain({n})/oplus-mutants-caught"),
            escaped.is_none(),
            20,
            escaped.map(|((x, y, v), _)| Witness::new([x, y], [v])),
        );
    }
    let three = check_mvn_axioms(&mv_chain(3)?, 2);
    let fail = three.first_failure();
    report.record(
        "chain(3)/fails-MV_2",
        fail.is_some_and(|f| f.witness.is_some()),
        three.laws_checked(),
        fail.and_then(|f| f.witness.clone()),
    );

    let b = FiniteBooleanAlgebra::with_atoms(2)?;
    let (p, q) = (0b01, 0b10);
    let obj = IdealSequenceObject::new(b, 6, &[0, p, q, p, 0])?;
    let at = |r: &AxiomReport| {
        r.first_failure()
            .and_then(|f| f.witness.as_ref())
            .map(|w| w.indices.clone())
    };
    let proper = check_l_proper(&obj);
    report.record(
        "non-proper-6/l-proper-fails-at-(4,2)",
        at(&proper) == Some(vec![4, 2]),
        proper.laws_checked(),
        proper.first_failure().and_then(|f| f.witness.clone()),
    );
    let somv = check_somv_condition(SomvInput::Space(&theta_a(&obj)?));
    report.record(
        "non-proper-6/somv-fails-at-(4,2)",
        at(&somv) == Some(vec![4, 2]),
        somv.laws_checked(),
        somv.first_failure().and_then(|f| f.witness.clone()),
    );

    for (k, n) in iproduct!(0..=max_atoms, 1..=max_n.max(6)) {
        let b = FiniteBooleanAlgebra::with_atoms(k)?;
        let objs = IdealSequenceObject::all_symmetric(&b, n);
        let mut disagreement = None;
        for obj in &objs {
            let left = check_l_proper(obj).passes();
            let right = check_somv_condition(SomvInput::Space(&theta_a(obj)?)).passes();
            if left != right {
                disagreement.get_or_insert(obj.generators());
            }
        }
        report.record(
            &format!("2^{k},n={n}/proper-iff-somv"),
            disagreement.is_none(),
            objs.len() as u64,
            disagreement
                .map(|g| Witness::elements(g.iter().map(|&e| e as usize).collect::<Vec<_>>())),
        );
    }
    Ok(report)
}

/// The Moisil representation on every instance; for `T(B)` it must be onto
/// the full power of the chain.
pub fn represent(instances: &[Instance]) -> Result<AxiomReport> {
    let mut report = AxiomReport::new("suite-represent");
    for inst in instances {
        let rep = moisil_represent(&inst.phi)?;
        report.summarize(&format!("{}/verified", inst.label), &rep.report);
        if inst.kind == InstanceKind::T {
            let k = inst.atoms.unwrap_or(0);
            report.record(
                &format!("{}/onto-chain-power", inst.label),
                rep.is_onto_full_power() && rep.ultrafilters.len() == k,
                1,
                None,
            );
        }
    }
    Ok(report)
}
