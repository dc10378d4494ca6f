//! The functors `Λ : LM → BoolI` and `Σ : BoolI → LM` and concrete checks
//! that they form an equivalence, naturality included.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{sigma, IdealSequenceObject, TupleAlgebra};
use crate::boolalg::{
    all_atom_maps, check_ideal, hom_from_atom_map, BooleanHom, Elem, FiniteBooleanAlgebra,
};
use crate::lm::{
    boolean_center, canonical, check_lm_hom, j_to_phi, moisil_represent, phi_to_j, CenterView,
    LMAlgebra, Signature,
};
use crate::report::{AxiomReport, Witness};
use crate::{Error, Result};

/// Controls the sampled arrow family used for naturality squares.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NaturalityConfig {
    pub seed: u64,
    /// Sampled arrows per check, on top of the fixed identity and collapse arrows.
    pub max_arrows: usize,
}

impl Default for NaturalityConfig {
    fn default() -> Self {
        NaturalityConfig {
            seed: 0,
            max_arrows: 6,
        }
    }
}

/// `Λ(L) = (C(L), J_{n-1}(L), …, J_1(L))`, with `C(L)` in powerset coordinates.
pub fn lambda_functor(l: &LMAlgebra) -> Result<IdealSequenceObject> {
    Ok(lambda_with_center(l)?.0)
}

fn lambda_with_center(l: &LMAlgebra) -> Result<(IdealSequenceObject, CenterView)> {
    l.require_signature(Signature::J)?;
    l.require_valid("lambda_functor")?;
    let center = boolean_center(l)?;
    let n = l.n();
    let mut generators = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut image = BTreeSet::new();
        for x in l.elements() {
            let e = center
                .to_bool(l.op(i, x))
                .ok_or_else(|| Error::Verification {
                    what: format!("J_{i}({x}) is not central"),
                    report: None,
                })?;
            image.insert(e);
        }
        let checked = check_ideal(center.algebra(), &image);
        match checked.ideal {
            Some(ideal) => generators.push(ideal.generator()),
            None => {
                return Err(Error::verification(
                    format!("the image of J_{i} is not an ideal"),
                    checked.report,
                ))
            }
        }
    }
    let obj = IdealSequenceObject::new(center.algebra().clone(), n, &generators)?;
    Ok((obj, center))
}

/// `L` together with `Λ(L)`, `ΣΛ(L)` and `α_L(x) = (J_n x, …, J_1 x)`.
struct LmSide {
    center: CenterView,
    obj: IdealSequenceObject,
    sigma: TupleAlgebra,
    /// `None` where the nuance tuple is missing from `ΣΛ(L)`.
    alpha: Vec<Option<usize>>,
}

impl LmSide {
    fn new(l: &LMAlgebra) -> Result<Self> {
        let (obj, center) = lambda_with_center(l)?;
        let sigma = sigma(&obj)?;
        let n = l.n();
        let alpha = l
            .elements()
            .map(|x| {
                let tuple: Option<Vec<Elem>> =
                    (1..=n).rev().map(|i| center.to_bool(l.op(i, x))).collect();
                tuple.and_then(|t| sigma.index_of(&t))
            })
            .collect();
        Ok(LmSide {
            center,
            obj,
            sigma,
            alpha,
        })
    }
}

/// `Σ(g)`: apply a Boolean hom componentwise. `None` if a tuple leaves the target.
fn sigma_arrow(g: &BooleanHom, from: &TupleAlgebra, to: &TupleAlgebra) -> Option<Vec<usize>> {
    (0..from.size())
        .map(|u| {
            let image: Vec<Elem> = from.tuple(u).iter().map(|&e| g.apply(e)).collect();
            to.index_of(&image)
        })
        .collect()
}

fn trivial_j(n: usize) -> LMAlgebra {
    LMAlgebra::from_tables(
        Signature::J,
        n,
        0,
        0,
        vec![vec![0]],
        vec![vec![0]],
        vec![0],
        vec![vec![0]; n],
    )
    .expect("one-element tables are well formed")
}

/// Part (a) and naturality on the LM side: `α_L : L → ΣΛ(L)` is an
/// isomorphism and `α_{L'} ∘ f = ΣΛ(f) ∘ α_L` for the arrow family.
pub fn check_lm_side(l: &LMAlgebra, cfg: &NaturalityConfig) -> Result<AxiomReport> {
    let side = LmSide::new(l)?;
    let mut report = AxiomReport::new("equivalence-lm");
    report.law(
        "alpha-into-sigma",
        l.elements(),
        |&x| side.alpha[x].is_some(),
        |x| Witness::elements([x]),
    );
    if !report.passes() {
        return Ok(report);
    }
    let alpha: Vec<usize> = side.alpha.iter().map(|a| a.unwrap()).collect();
    report.summarize(
        "alpha-morphism",
        &check_lm_hom(l, side.sigma.algebra(), &alpha),
    );
    let bijective = alpha.len() == side.sigma.size()
        && alpha.iter().collect::<BTreeSet<_>>().len() == alpha.len();
    report.record("alpha-bijective", bijective, alpha.len() as u64, None);

    for (name, target, f) in lm_arrows(l, cfg)? {
        naturality_lm(&mut report, &name, l, &side, &target, &f)?;
    }
    Ok(report)
}

/// Identity, the collapse onto the one-element algebra, and a seeded sample
/// of Moisil components into the chain.
fn lm_arrows(
    l: &LMAlgebra,
    cfg: &NaturalityConfig,
) -> Result<Vec<(String, LMAlgebra, Vec<usize>)>> {
    let n = l.n();
    let mut arrows = vec![
        ("id".to_string(), l.clone(), l.elements().collect()),
        ("collapse".to_string(), trivial_j(n), vec![0; l.size()]),
    ];
    if l.size() > 1 {
        let rep = moisil_represent(&j_to_phi(l)?)?;
        let chain = phi_to_j(&canonical(n)?)?;
        let mut picks: Vec<usize> = (0..rep.components.len()).collect();
        picks.shuffle(&mut ChaCha8Rng::seed_from_u64(cfg.seed));
        picks.truncate(cfg.max_arrows);
        picks.sort_unstable();
        for u in picks {
            arrows.push((format!("h{u}"), chain.clone(), rep.components[u].clone()));
        }
    }
    Ok(arrows)
}

fn naturality_lm(
    report: &mut AxiomReport,
    name: &str,
    l: &LMAlgebra,
    side: &LmSide,
    target: &LMAlgebra,
    f: &[usize],
) -> Result<()> {
    let hom = check_lm_hom(l, target, f);
    report.summarize(&format!("{name}/is-hom"), &hom);
    if !hom.passes() {
        return Ok(());
    }
    let other = LmSide::new(target)?;
    let (c, c2) = (&side.center, &other.center);

    // Λ(f): the restriction of f to the centers.
    let map: Option<Vec<Elem>> = c
        .algebra()
        .elements()
        .map(|e| c2.to_bool(f[c.element(e)]))
        .collect();
    let Some(map) = map else {
        report.record(&format!("{name}/center-preserved"), false, 1, None);
        return Ok(());
    };
    let g = BooleanHom::new(c.algebra().clone(), c2.algebra().clone(), map)?;
    report.summarize(&format!("{name}/lambda-boolean-hom"), &g.validate());
    let n = l.n();
    report.law(
        &format!("{name}/lambda-ideals"),
        1..n,
        |&i| {
            let gen = side.obj.ideal(i).generator();
            other.obj.ideal(i).contains(g.apply(gen))
        },
        |i| Witness::indices([i]),
    );

    let Some(sf) = sigma_arrow(&g, &side.sigma, &other.sigma) else {
        report.record(&format!("{name}/sigma-lambda-total"), false, 1, None);
        return Ok(());
    };
    report.summarize(
        &format!("{name}/sigma-lambda-hom"),
        &check_lm_hom(side.sigma.algebra(), other.sigma.algebra(), &sf),
    );
    report.law(
        &format!("{name}/square"),
        l.elements(),
        |&x| match (other.alpha[f[x]], side.alpha[x]) {
            (Some(a), Some(b)) => a == sf[b],
            _ => false,
        },
        |x| Witness::elements([x]),
    );
    Ok(())
}

/// Part (b) and naturality on the Boolean side: `β(b) = (b, 0, …, 0)` is an
/// isomorphism `B → C(Σ(obj))` carrying each `I_i` onto the recovered ideal,
/// and `β' ∘ g = ΛΣ(g) ∘ β` for Boolean arrows built from atom maps.
pub fn check_object_side(obj: &IdealSequenceObject, cfg: &NaturalityConfig) -> Result<AxiomReport> {
    let mut report = AxiomReport::new("equivalence-object");
    let s = sigma(obj)?;
    let (back, center) = lambda_with_center(s.algebra())?;
    let Some(beta) = beta_map(obj, &s, &center) else {
        report.record("beta-central", false, obj.base().size() as u64, None);
        return Ok(report);
    };
    let beta = BooleanHom::new(obj.base().clone(), back.base().clone(), beta)?;
    report.summarize("beta-boolean-hom", &beta.validate());
    report.record("beta-bijective", beta.is_bijective(), 1, None);
    let n = obj.n();
    report.law(
        "beta-generators",
        1..n,
        |&i| beta.apply(obj.ideal(i).generator()) == back.ideal(i).generator(),
        |i| Witness::indices([i]),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let k = obj.base().atom_count();
    let mut arrows = vec![("id".to_string(), BooleanHom::identity(obj.base()))];
    let mut candidates = Vec::new();
    for j in 0..=k {
        let target = FiniteBooleanAlgebra::with_atoms(j)?;
        for m in all_atom_maps(k, j) {
            candidates.push((format!("m{j}:{m:?}"), target.clone(), m));
        }
    }
    candidates.shuffle(&mut rng);
    for (name, target, m) in candidates.into_iter().take(cfg.max_arrows) {
        arrows.push((name, hom_from_atom_map(obj.base(), &target, &m)?));
    }
    for (name, g) in arrows {
        naturality_object(&mut report, &name, obj, &s, &center, &beta, &g)?;
    }
    Ok(report)
}

fn beta_map(obj: &IdealSequenceObject, s: &TupleAlgebra, center: &CenterView) -> Option<Vec<Elem>> {
    let n = obj.n();
    obj.base()
        .elements()
        .map(|b| {
            let mut tuple = vec![0; n];
            tuple[0] = b;
            s.index_of(&tuple).and_then(|u| center.to_bool(u))
        })
        .collect()
}

fn naturality_object(
    report: &mut AxiomReport,
    name: &str,
    obj: &IdealSequenceObject,
    s: &TupleAlgebra,
    center: &CenterView,
    beta: &BooleanHom,
    g: &BooleanHom,
) -> Result<()> {
    let n = obj.n();
    let gens: Vec<Elem> = obj.generators().iter().map(|&e| g.apply(e)).collect();
    let obj2 = IdealSequenceObject::new(g.target.clone(), n, &gens)?;
    let s2 = sigma(&obj2)?;
    let (_, center2) = lambda_with_center(s2.algebra())?;
    let Some(beta2) = beta_map(&obj2, &s2, &center2) else {
        report.record(&format!("{name}/beta-central"), false, 1, None);
        return Ok(());
    };
    let Some(sg) = sigma_arrow(g, s, &s2) else {
        report.record(&format!("{name}/sigma-total"), false, 1, None);
        return Ok(());
    };
    report.summarize(
        &format!("{name}/sigma-hom"),
        &check_lm_hom(s.algebra(), s2.algebra(), &sg),
    );
    // ΛΣ(g) on centers, compared through β and β'.
    report.law(
        &format!("{name}/square"),
        obj.base().elements(),
        |&b| {
            let around = center2.to_bool(sg[center.element(beta.apply(b))]);
            around == Some(beta2[g.apply(b) as usize])
        },
        |b| Witness::elements([b as usize]),
    );
    Ok(())
}

/// Both sides of the equivalence for an LM algebra and an ideal-sequence object.
pub fn check_cat_equivalence(
    l: &LMAlgebra,
    obj: &IdealSequenceObject,
    cfg: &NaturalityConfig,
) -> Result<AxiomReport> {
    let mut report = AxiomReport::new("equivalence");
    report.absorb("lm", check_lm_side(l, cfg)?);
    report.absorb("object", check_object_side(obj, cfg)?);
    Ok(report)
}
