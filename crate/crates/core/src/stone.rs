//! Finite Stone duality and its extension to symmetric ideal sequences and
//! symmetric open families.
//!
//! Point sets are bitmasks over point indices. The spectrum of a powerset
//! algebra has one point per atom, in atom order.

use std::collections::BTreeSet;

use itertools::iproduct;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::boolalg::{
    all_atom_maps, check_ideal, hom_from_atom_map, ultrafilters, BooleanHom, Elem,
    FiniteBooleanAlgebra, Ideal, Ultrafilter, DEFAULT_MAX_ATOMS,
};
use crate::construct::{IdealSequenceObject, NaturalityConfig};
use crate::report::{AxiomReport, Witness};
use crate::{Error, Result};

/// A finite (discrete) space with a symmetric family `O_1, …, O_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteSpaceWithOpens {
    n: usize,
    point_names: Vec<String>,
    opens: Vec<Elem>,
}

impl FiniteSpaceWithOpens {
    /// `opens[i - 1]` is `O_i`, as a point mask.
    pub fn new(point_names: Vec<String>, n: usize, opens: Vec<Elem>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Malformed("n must be at least 1".into()));
        }
        if point_names.len() > DEFAULT_MAX_ATOMS {
            return Err(Error::BoundExceeded {
                what: "points",
                count: point_names.len(),
                bound: DEFAULT_MAX_ATOMS,
            });
        }
        let unique: BTreeSet<&String> = point_names.iter().collect();
        if unique.len() != point_names.len() {
            let dup = point_names
                .iter()
                .enumerate()
                .find(|(i, p)| point_names[..*i].contains(p))
                .map(|(_, p)| p.clone())
                .unwrap_or_default();
            return Err(Error::DuplicateAtom(dup));
        }
        if opens.len() != n - 1 {
            return Err(Error::Malformed(format!(
                "expected {} open sets for n = {n}, got {}",
                n - 1,
                opens.len()
            )));
        }
        let all = full_mask(point_names.len());
        if let Some(&bad) = opens.iter().find(|&&o| o & !all != 0) {
            return Err(Error::ElementOutOfRange {
                element: bad as usize,
                size: point_names.len(),
            });
        }
        for i in 1..n {
            if opens[i - 1] != opens[n - i - 1] {
                return Err(Error::AsymmetricOpens { i, j: n - i });
            }
        }
        Ok(FiniteSpaceWithOpens {
            n,
            point_names,
            opens,
        })
    }

    /// Points named `x1, x2, …`.
    pub fn with_points(count: usize, n: usize, opens: Vec<Elem>) -> Result<Self> {
        Self::new((1..=count).map(|i| format!("x{i}")).collect(), n, opens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn point_count(&self) -> usize {
        self.point_names.len()
    }

    pub fn point_names(&self) -> &[String] {
        &self.point_names
    }

    pub fn all_points(&self) -> Elem {
        full_mask(self.point_count())
    }

    /// `O_i` for `1 ≤ i ≤ n - 1`.
    pub fn open(&self, i: usize) -> Elem {
        self.opens[i - 1]
    }

    pub fn opens(&self) -> &[Elem] {
        &self.opens
    }

    /// Every symmetric family on `count` points.
    pub fn all_symmetric(count: usize, n: usize) -> Vec<Self> {
        let free = n / 2;
        let all = full_mask(count);
        let mut out = Vec::new();
        let mut choice = vec![0 as Elem; free];
        loop {
            let opens = (1..n).map(|i| choice[i.min(n - i) - 1]).collect();
            out.push(Self::with_points(count, n, opens).expect("symmetric"));
            let mut k = free;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if choice[k] < all {
                    choice[k] += 1;
                    choice[k + 1..].fill(0);
                    break;
                }
            }
        }
    }
}

fn full_mask(count: usize) -> Elem {
    if count == 0 {
        0
    } else {
        Elem::MAX >> (Elem::BITS as usize - count)
    }
}

fn members(mask: Elem) -> impl Iterator<Item = usize> {
    (0..Elem::BITS as usize).filter(move |&i| mask & (1 << i) != 0)
}

/// The ultrafilter space of a Boolean algebra.
#[derive(Debug, Clone)]
pub struct Spectrum {
    algebra: FiniteBooleanAlgebra,
    points: Vec<Ultrafilter>,
    point_names: Vec<String>,
}

impl Spectrum {
    pub fn algebra(&self) -> &FiniteBooleanAlgebra {
        &self.algebra
    }

    pub fn points(&self) -> &[Ultrafilter] {
        &self.points
    }

    pub fn point_names(&self) -> &[String] {
        &self.point_names
    }

    /// `N_b = {U | b ∈ U}`.
    pub fn n_of_element(&self, b: Elem) -> Elem {
        self.points
            .iter()
            .enumerate()
            .filter(|(_, u)| u.contains(b))
            .fold(0, |acc, (p, _)| acc | (1 << p))
    }

    /// `N_I = ⋃ {N_a | a ∈ I}`.
    pub fn n_of_ideal(&self, ideal: &Ideal) -> Elem {
        ideal
            .members()
            .into_iter()
            .fold(0, |acc, a| acc | self.n_of_element(a))
    }

    /// The space carrying the given opens.
    pub fn with_opens(&self, n: usize, opens: Vec<Elem>) -> Result<FiniteSpaceWithOpens> {
        FiniteSpaceWithOpens::new(self.point_names.clone(), n, opens)
    }
}

pub fn spectrum(algebra: &FiniteBooleanAlgebra) -> Result<Spectrum> {
    let points = ultrafilters(algebra)?;
    Ok(spectrum_of(algebra, points))
}

/// The trivial algebra has the empty spectrum.
fn spectrum_total(algebra: &FiniteBooleanAlgebra) -> Spectrum {
    let points = if algebra.is_trivial() {
        Vec::new()
    } else {
        ultrafilters(algebra).expect("nontrivial")
    };
    spectrum_of(algebra, points)
}

fn spectrum_of(algebra: &FiniteBooleanAlgebra, points: Vec<Ultrafilter>) -> Spectrum {
    let point_names = points
        .iter()
        .map(|u| format!("U_{}", algebra.atom_names()[u.atom_index()]))
        .collect();
    Spectrum {
        algebra: algebra.clone(),
        points,
        point_names,
    }
}

pub fn n_of_ideal(algebra: &FiniteBooleanAlgebra, ideal: &Ideal) -> Elem {
    spectrum_total(algebra).n_of_ideal(ideal)
}

/// All subsets of a finite discrete space are clopen.
pub fn clopen_algebra(space: &FiniteSpaceWithOpens) -> FiniteBooleanAlgebra {
    FiniteBooleanAlgebra::powerset(space.point_names.iter().cloned())
        .expect("point names are distinct and bounded")
}

/// `I_O = {b ∈ co(X) | N_b ⊆ O}`; in the clopen algebra `N_b` is `b` itself.
pub fn ideal_of_open(space: &FiniteSpaceWithOpens, open: Elem) -> Result<Ideal> {
    let clopens = clopen_algebra(space);
    let set: BTreeSet<Elem> = clopens.elements().filter(|&b| b & !open == 0).collect();
    let checked = check_ideal(&clopens, &set);
    checked
        .ideal
        .ok_or_else(|| Error::verification("I_O is not an ideal", checked.report))
}

/// `Θ^a`: the spectrum with `O_i = N_{I_i}`.
pub fn theta_a(obj: &IdealSequenceObject) -> Result<FiniteSpaceWithOpens> {
    let spec = spectrum_total(obj.base());
    let opens = (1..obj.n())
        .map(|i| spec.n_of_ideal(&obj.ideal(i)))
        .collect();
    spec.with_opens(obj.n(), opens)
}

/// `Θ^a` with the displayed reversed order, `O_i = N_{I_{n-i}}`.
fn theta_a_reversed(obj: &IdealSequenceObject) -> Result<FiniteSpaceWithOpens> {
    let spec = spectrum_total(obj.base());
    let n = obj.n();
    let opens = (1..n).map(|i| spec.n_of_ideal(&obj.ideal(n - i))).collect();
    spec.with_opens(n, opens)
}

/// `Θ^t`: the clopen algebra with `I_i = I_{O_i}`.
pub fn theta_t(space: &FiniteSpaceWithOpens) -> Result<IdealSequenceObject> {
    let generators = (1..space.n())
        .map(|i| ideal_of_open(space, space.open(i)).map(|ideal| ideal.generator()))
        .collect::<Result<Vec<_>>>()?;
    IdealSequenceObject::new(clopen_algebra(space), space.n(), &generators)
}

/// A Boolean hom `g : B → B'` with `g(I_i) ⊆ I'_i`.
#[derive(Debug, Clone)]
pub struct BoolIArrow {
    pub source: IdealSequenceObject,
    pub target: IdealSequenceObject,
    pub hom: BooleanHom,
}

impl BoolIArrow {
    pub fn validate(&self) -> AxiomReport {
        let mut report = AxiomReport::new("booli-arrow");
        report.record(
            "endpoints",
            self.hom.source == *self.source.base()
                && self.hom.target == *self.target.base()
                && self.source.n() == self.target.n(),
            1,
            None,
        );
        if !report.passes() {
            return report;
        }
        report.summarize("boolean-hom", &self.hom.validate());
        report.law(
            "ideals",
            1..self.source.n(),
            |&i| {
                let g = self.hom.apply(self.source.ideal(i).generator());
                self.target.ideal(i).contains(g)
            },
            |i| Witness::indices([i]),
        );
        report
    }
}

/// A point map `f : X → Y` with `f⁻¹(U_i) ⊆ O_i`.
#[derive(Debug, Clone)]
pub struct SpaceMorphism {
    pub source: FiniteSpaceWithOpens,
    pub target: FiniteSpaceWithOpens,
    pub map: Vec<usize>,
}

impl SpaceMorphism {
    pub fn preimage(&self, set: Elem) -> Elem {
        self.map
            .iter()
            .enumerate()
            .filter(|(_, &y)| set & (1 << y) != 0)
            .fold(0, |acc, (x, _)| acc | (1 << x))
    }

    pub fn validate(&self) -> AxiomReport {
        let mut report = AxiomReport::new("space-morphism");
        report.record(
            "endpoints",
            self.map.len() == self.source.point_count()
                && self.map.iter().all(|&y| y < self.target.point_count())
                && self.source.n() == self.target.n(),
            1,
            None,
        );
        if !report.passes() {
            return report;
        }
        report.law(
            "opens",
            1..self.source.n(),
            |&i| self.preimage(self.target.open(i)) & !self.source.open(i) == 0,
            |i| Witness::indices([i]),
        );
        report
    }
}

#[derive(Debug, Clone)]
pub enum Arrow {
    Bool(BoolIArrow),
    Space(SpaceMorphism),
}

/// `Θ^a(g)(U) = g⁻¹(U)` and `Θ^t(f)(N) = f⁻¹(N)`, each validated on both ends.
pub fn dual_morphism(arrow: &Arrow) -> Result<Arrow> {
    match arrow {
        Arrow::Bool(g) => dual_of_bool(g).map(Arrow::Space),
        Arrow::Space(f) => dual_of_space(f).map(Arrow::Bool),
    }
}

fn dual_of_bool(g: &BoolIArrow) -> Result<SpaceMorphism> {
    let input = g.validate();
    if !input.passes() {
        return Err(Error::precondition("invalid BoolI arrow", input));
    }
    let from = spectrum_total(g.target.base());
    let to = spectrum_total(g.source.base());
    let mut map = Vec::with_capacity(from.points.len());
    for u in &from.points {
        // g⁻¹(U) is the ultrafilter of the unique source atom sent into U.
        let preimage: Vec<usize> = to
            .points
            .iter()
            .enumerate()
            .filter(|(_, v)| u.contains(g.hom.apply(v.atom())))
            .map(|(p, _)| p)
            .collect();
        match preimage.as_slice() {
            [p] => map.push(*p),
            _ => {
                return Err(Error::Verification {
                    what: "preimage of an ultrafilter is not an ultrafilter".into(),
                    report: None,
                })
            }
        }
    }
    let f = SpaceMorphism {
        source: theta_a(&g.target)?,
        target: theta_a(&g.source)?,
        map,
    };
    let output = f.validate();
    if !output.passes() {
        return Err(Error::verification("dual space morphism", output));
    }
    Ok(f)
}

fn dual_of_space(f: &SpaceMorphism) -> Result<BoolIArrow> {
    let input = f.validate();
    if !input.passes() {
        return Err(Error::precondition("invalid space morphism", input));
    }
    let source = theta_t(&f.target)?;
    let target = theta_t(&f.source)?;
    let map = source.base().elements().map(|n| f.preimage(n)).collect();
    let hom = BooleanHom::new(source.base().clone(), target.base().clone(), map)?;
    let g = BoolIArrow {
        source,
        target,
        hom,
    };
    let output = g.validate();
    if !output.passes() {
        return Err(Error::verification("dual BoolI arrow", output));
    }
    Ok(g)
}

/// Items (a) through (d) for one Boolean algebra and its ideals.
fn check_basics(report: &mut AxiomReport, base: &FiniteBooleanAlgebra) -> Result<Spectrum> {
    let spec = spectrum_total(base);
    let space = spec.with_opens(1, Vec::new())?;
    let clopens = clopen_algebra(&space);
    let map = base.elements().map(|b| spec.n_of_element(b)).collect();
    let n_map = BooleanHom::new(base.clone(), clopens.clone(), map)?;
    report.summarize("n-boolean-hom", &n_map.validate());
    report.record("n-bijective", n_map.is_bijective(), 1, None);

    let ufs: BTreeSet<Vec<Elem>> = spec
        .points
        .iter()
        .map(|u| base.elements().filter(|&b| u.contains(b)).collect())
        .collect();
    report.law(
        "points-principal",
        spec.points.iter().enumerate(),
        |(p, u)| {
            base.elements()
                .all(|b| (spec.n_of_element(b) & (1 << p) != 0) == base.leq(u.atom(), b))
        },
        |(p, _)| Witness::indices([p]),
    );
    report.record(
        "points-bijective",
        ufs.len() == spec.points.len() && spec.points.len() == base.atom_count(),
        1,
        None,
    );

    let ideals: Vec<Ideal> = base
        .elements()
        .map(|g| Ideal::principal(base, g))
        .collect::<Result<_>>()?;
    report.law(
        "membership",
        iproduct!(base.elements(), ideals.iter()),
        |&(b, ideal)| ideal.contains(b) == (spec.n_of_element(b) & !spec.n_of_ideal(ideal) == 0),
        |(b, ideal)| Witness::elements([b as usize, ideal.generator() as usize]),
    );
    // I_{N_I} = I, reading N_I back through the isomorphism b ↦ N_b.
    report.law(
        "ideal-of-n",
        ideals.iter(),
        |ideal| {
            let recovered = ideal_of_open(&space, spec.n_of_ideal(ideal));
            recovered.is_ok_and(|r| {
                let members: BTreeSet<Elem> =
                    ideal.members().iter().map(|&b| n_map.apply(b)).collect();
                let back: BTreeSet<Elem> = r.members().into_iter().collect();
                members == back
            })
        },
        |ideal| Witness::elements([ideal.generator() as usize]),
    );
    report.law(
        "n-of-ideal-of-open",
        0..=space.all_points(),
        |&o| {
            ideal_of_open(&space, o)
                .is_ok_and(|ideal| spectrum_total(&clopens).n_of_ideal(&ideal) == o)
        },
        |o| Witness::elements([o as usize]),
    );
    Ok(spec)
}

/// Seeded Boolean arrows out of `obj`: the identity plus atom-map homs into
/// smaller or equal algebras, with target ideals `↓g(gen_i)`.
fn bool_arrows(
    obj: &IdealSequenceObject,
    rng: &mut ChaCha8Rng,
    count: usize,
) -> Result<Vec<BoolIArrow>> {
    let k = obj.base().atom_count();
    let mut candidates = Vec::new();
    for j in 0..=k.max(1) {
        for m in all_atom_maps(k, j) {
            candidates.push((j, m));
        }
    }
    candidates.shuffle(rng);
    let mut arrows = vec![BoolIArrow {
        source: obj.clone(),
        target: obj.clone(),
        hom: BooleanHom::identity(obj.base()),
    }];
    for (j, m) in candidates.into_iter().take(count) {
        let target_base = FiniteBooleanAlgebra::with_atoms(j)?;
        let hom = hom_from_atom_map(obj.base(), &target_base, &m)?;
        let gens: Vec<Elem> = obj.generators().iter().map(|&g| hom.apply(g)).collect();
        let target = IdealSequenceObject::new(target_base, obj.n(), &gens)?;
        arrows.push(BoolIArrow {
            source: obj.clone(),
            target,
            hom,
        });
    }
    Ok(arrows)
}

/// Seeded space morphisms out of `space`: the identity plus random point maps
/// into spaces of at most the same size, with the largest admissible opens
/// `U_i = {y | f⁻¹(y) ⊆ O_i}`.
fn space_arrows(
    space: &FiniteSpaceWithOpens,
    rng: &mut ChaCha8Rng,
    count: usize,
) -> Result<Vec<SpaceMorphism>> {
    let p = space.point_count();
    let n = space.n();
    let mut arrows = vec![SpaceMorphism {
        source: space.clone(),
        target: space.clone(),
        map: (0..p).collect(),
    }];
    for _ in 0..count {
        let q = rng.gen_range(p.min(1)..=p.max(1));
        let map: Vec<usize> = (0..p).map(|_| rng.gen_range(0..q)).collect();
        let preimage = |y: usize| {
            map.iter()
                .enumerate()
                .filter(|(_, &t)| t == y)
                .fold(0 as Elem, |acc, (x, _)| acc | (1 << x))
        };
        let opens = (1..n)
            .map(|i| {
                (0..q)
                    .filter(|&y| preimage(y) & !space.open(i) == 0)
                    .fold(0, |acc, y| acc | (1 << y))
            })
            .collect();
        let target = FiniteSpaceWithOpens::with_points(q, n, opens)?;
        arrows.push(SpaceMorphism {
            source: space.clone(),
            target,
            map,
        });
    }
    Ok(arrows)
}

/// Verifies the dual equivalence starting from an ideal-sequence object.
pub fn check_stone_roundtrip(
    obj: &IdealSequenceObject,
    cfg: &NaturalityConfig,
) -> Result<AxiomReport> {
    let mut report = AxiomReport::new("stone-roundtrip");
    let spec = check_basics(&mut report, obj.base())?;
    let n = obj.n();

    let x = theta_a(obj)?;
    report.record(
        "reversed-binding-agrees",
        theta_a_reversed(obj)? == x,
        1,
        None,
    );
    let back = theta_t(&x)?;
    report.law(
        "theta-t-theta-a",
        1..n,
        |&i| spec.n_of_element(obj.ideal(i).generator()) == back.ideal(i).generator(),
        |i| Witness::indices([i]),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let arrows = bool_arrows(obj, &mut rng, cfg.max_arrows)?;
    for (a, g) in arrows.iter().enumerate() {
        let name = format!("arrow{a}");
        let f = match dual_of_bool(g) {
            Ok(f) => f,
            Err(_) => {
                report.record(
                    &format!("{name}/dual"),
                    false,
                    1,
                    Some(Witness::indices([a])),
                );
                continue;
            }
        };
        let gg = dual_of_space(&f)?;
        // Θ^tΘ^a(g) ∘ N = N' ∘ g.
        let spec2 = spectrum_total(g.target.base());
        report.law(
            &format!("{name}/square"),
            obj.base().elements(),
            |&b| gg.hom.apply(spec.n_of_element(b)) == spec2.n_of_element(g.hom.apply(b)),
            |b| Witness::elements([b as usize]),
        );
    }
    // Contravariance on composable pairs g2 ∘ g1.
    for (a, g1) in arrows.iter().enumerate() {
        let Some(g2) = bool_arrows(&g1.target, &mut rng, 1)?.pop() else {
            continue;
        };
        let composite = BoolIArrow {
            source: g1.source.clone(),
            target: g2.target.clone(),
            hom: g1.hom.then(&g2.hom),
        };
        let (f1, f2, f) = (
            dual_of_bool(g1)?,
            dual_of_bool(&g2)?,
            dual_of_bool(&composite)?,
        );
        report.law(
            &format!("arrow{a}/contravariant"),
            0..f.map.len(),
            |&p| f.map[p] == f1.map[f2.map[p]],
            |p| Witness::indices([p]),
        );
    }
    Ok(report)
}

/// Verifies the dual equivalence starting from a space with opens.
pub fn check_space_roundtrip(
    space: &FiniteSpaceWithOpens,
    cfg: &NaturalityConfig,
) -> Result<AxiomReport> {
    let mut report = AxiomReport::new("space-roundtrip");
    let obj = theta_t(space)?;
    let spec = check_basics(&mut report, obj.base())?;
    let n = space.n();
    let y = theta_a(&obj)?;
    // x ↦ {N | x ∈ N}, the principal ultrafilter of the clopen {x}.
    let eps: Vec<Option<usize>> = (0..space.point_count())
        .map(|x| spec.points.iter().position(|u| u.contains(1 << x)))
        .collect();
    report.law(
        "points-to-ultrafilters",
        0..space.point_count(),
        |&x| eps[x].is_some_and(|p| eps.iter().filter(|&&q| q == Some(p)).count() == 1),
        |x| Witness::indices([x]),
    );
    let image =
        |set: Elem| members(set).fold(0 as Elem, |acc, x| acc | eps[x].map_or(0, |p| 1 << p));
    report.law(
        "theta-a-theta-t",
        1..n,
        |&i| image(space.open(i)) == y.open(i),
        |i| Witness::indices([i]),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let arrows = space_arrows(space, &mut rng, cfg.max_arrows)?;
    for (a, f) in arrows.iter().enumerate() {
        let name = format!("arrow{a}");
        let g = match dual_of_space(f) {
            Ok(g) => g,
            Err(_) => {
                report.record(
                    &format!("{name}/dual"),
                    false,
                    1,
                    Some(Witness::indices([a])),
                );
                continue;
            }
        };
        let ff = dual_of_bool(&g)?;
        let spec_t = spectrum_total(g.source.base());
        let eps_t: Vec<Option<usize>> = (0..f.target.point_count())
            .map(|y| spec_t.points.iter().position(|u| u.contains(1 << y)))
            .collect();
        // Θ^aΘ^t(f) ∘ ε_X = ε_Y ∘ f.
        report.law(
            &format!("{name}/square"),
            0..space.point_count(),
            |&x| match (eps[x], eps_t[f.map[x]]) {
                (Some(p), Some(q)) => ff.map[p] == q,
                _ => false,
            },
            |x| Witness::indices([x]),
        );
        let Some(f2) = space_arrows(&f.target, &mut rng, 1)?.pop() else {
            continue;
        };
        let composite = SpaceMorphism {
            source: f.source.clone(),
            target: f2.target.clone(),
            map: f.map.iter().map(|&y| f2.map[y]).collect(),
        };
        let (g1, g2, gc) = (
            dual_of_space(f)?,
            dual_of_space(&f2)?,
            dual_of_space(&composite)?,
        );
        report.law(
            &format!("{name}/contravariant"),
            gc.source.base().elements(),
            |&c| gc.hom.apply(c) == g1.hom.apply(g2.hom.apply(c)),
            |c| Witness::elements([c as usize]),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(k: usize) -> FiniteBooleanAlgebra {
        FiniteBooleanAlgebra::with_atoms(k).unwrap()
    }

    #[test]
    fn spectrum_examples() {
        assert_eq!(spectrum(&b(1)).unwrap().points().len(), 1);
        let s = spectrum(&b(2)).unwrap();
        assert_eq!(s.n_of_element(0b01), 0b01);
        assert_eq!(s.point_names(), &["U_p", "U_q"]);
        assert_eq!(s.n_of_element(0b11), 0b11);
        assert_eq!(s.n_of_element(0), 0);
        assert!(matches!(spectrum(&b(0)), Err(Error::TrivialAlgebra)));
    }

    #[test]
    fn clopen_examples() {
        let empty = FiniteSpaceWithOpens::with_points(0, 1, vec![]).unwrap();
        assert!(clopen_algebra(&empty).is_trivial());
        let two = FiniteSpaceWithOpens::with_points(2, 1, vec![]).unwrap();
        assert_eq!(clopen_algebra(&two).size(), 4);
    }

    #[test]
    fn ideal_open_examples() {
        let base = b(2);
        assert_eq!(n_of_ideal(&base, &Ideal::zero(&base)), 0);
        assert_eq!(n_of_ideal(&base, &Ideal::improper(&base)), 0b11);
        assert_eq!(
            n_of_ideal(&base, &Ideal::principal(&base, 0b01).unwrap()),
            0b01
        );

        let two = FiniteSpaceWithOpens::with_points(2, 1, vec![]).unwrap();
        assert_eq!(ideal_of_open(&two, 0).unwrap().generator(), 0);
        assert_eq!(ideal_of_open(&two, 0b11).unwrap().generator(), 0b11);
        assert_eq!(ideal_of_open(&two, 0b01).unwrap().members(), vec![0, 0b01]);
    }

    #[test]
    fn theta_examples() {
        let base = b(2);
        let obj = IdealSequenceObject::new(base.clone(), 3, &[0b01, 0b01]).unwrap();
        let x = theta_a(&obj).unwrap();
        assert_eq!(x.opens(), &[0b01, 0b01]);
        let zero = IdealSequenceObject::new(base.clone(), 3, &[0, 0]).unwrap();
        assert_eq!(theta_a(&zero).unwrap().opens(), &[0, 0]);
        let full = IdealSequenceObject::new(base, 3, &[3, 3]).unwrap();
        assert_eq!(theta_a(&full).unwrap().opens(), &[3, 3]);

        let space = FiniteSpaceWithOpens::with_points(2, 3, vec![0b01, 0b01]).unwrap();
        assert_eq!(theta_t(&space).unwrap().generators(), vec![0b01, 0b01]);
        let none = FiniteSpaceWithOpens::with_points(2, 3, vec![0, 0]).unwrap();
        assert_eq!(theta_t(&none).unwrap().generators(), vec![0, 0]);
        assert_eq!(theta_t(&x).unwrap().generators(), obj.generators());
    }

    #[test]
    fn asymmetric_opens_are_rejected() {
        assert!(matches!(
            FiniteSpaceWithOpens::with_points(2, 3, vec![1, 0]),
            Err(Error::AsymmetricOpens { i: 1, j: 2 })
        ));
    }

    #[test]
    fn collapse_dualizes_to_an_embedding() {
        let base = b(2);
        let one = b(1);
        let obj = IdealSequenceObject::new(base.clone(), 2, &[0]).unwrap();
        let hom = hom_from_atom_map(&base, &one, &[1]).unwrap();
        let target = IdealSequenceObject::new(one, 2, &[0]).unwrap();
        let g = BoolIArrow {
            source: obj,
            target,
            hom,
        };
        let Arrow::Space(f) = dual_morphism(&Arrow::Bool(g)).unwrap() else {
            panic!("expected a space morphism");
        };
        assert_eq!(f.map, vec![1]);
        assert_eq!(f.target.point_count(), 2);
    }

    #[test]
    fn identity_dualizes_to_identity() {
        let base = b(2);
        let obj = IdealSequenceObject::new(base.clone(), 3, &[1, 1]).unwrap();
        let g = BoolIArrow {
            source: obj.clone(),
            target: obj,
            hom: BooleanHom::identity(&base),
        };
        let Arrow::Space(f) = dual_morphism(&Arrow::Bool(g)).unwrap() else {
            panic!("expected a space morphism");
        };
        assert_eq!(f.map, vec![0, 1]);
    }

    #[test]
    fn roundtrips_pass() {
        let cfg = NaturalityConfig::default();
        for obj in IdealSequenceObject::all_symmetric(&b(2), 4) {
            let r = check_stone_roundtrip(&obj, &cfg).unwrap();
            assert!(r.passes(), "{r}");
        }
        let zero = IdealSequenceObject::new(b(0), 3, &[0, 0]).unwrap();
        assert!(check_stone_roundtrip(&zero, &cfg).unwrap().passes());
        for x in FiniteSpaceWithOpens::all_symmetric(2, 3) {
            let r = check_space_roundtrip(&x, &cfg).unwrap();
            assert!(r.passes(), "{r}");
        }
    }
}
