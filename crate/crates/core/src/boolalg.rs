//! Finite powerset Boolean algebras.
//!
//! An element is a bit mask over the atom set: bit `i` is set iff atom `i`
//! belongs to the subset. `0` is ⊥ and `2^k - 1` is ⊤. Every finite Boolean
//! algebra is isomorphic to one of these, every ideal is principal and every
//! ultrafilter is the up-set of an atom, which is what lets the rest of the
//! crate store ideals by generator and points by atom index.

use std::collections::{BTreeSet, HashSet};

use itertools::iproduct;

use crate::report::{AxiomReport, Witness};
use crate::{Error, Result};

/// A Boolean element encoded as an atom bit mask.
pub type Elem = u32;

pub const DEFAULT_MAX_ATOMS: usize = 16;

const DEFAULT_NAMES: [&str; 8] = ["p", "q", "r", "s", "t", "u", "v", "w"];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteBooleanAlgebra {
    atom_names: Vec<String>,
}

impl FiniteBooleanAlgebra {
    /// The powerset algebra on the given atom labels.
    pub fn powerset<I, S>(atom_names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::powerset_bounded(atom_names, DEFAULT_MAX_ATOMS)
    }

    pub fn powerset_bounded<I, S>(atom_names: I, max_atoms: usize) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let atom_names: Vec<String> = atom_names.into_iter().map(Into::into).collect();
        let bound = max_atoms.min(31);
        if atom_names.len() > bound {
            return Err(Error::BoundExceeded {
                what: "atom",
                count: atom_names.len(),
                bound,
            });
        }
        let mut seen = HashSet::new();
        for name in &atom_names {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateAtom(name.clone()));
            }
        }
        Ok(FiniteBooleanAlgebra { atom_names })
    }

    /// A powerset algebra with `k` atoms named `p, q, r, …`.
    pub fn with_atoms(k: usize) -> Result<Self> {
        Self::powerset((0..k).map(|i| match DEFAULT_NAMES.get(i) {
            Some(name) => name.to_string(),
            None => format!("a{i}"),
        }))
    }

    pub fn atom_count(&self) -> usize {
        self.atom_names.len()
    }

    pub fn atom_names(&self) -> &[String] {
        &self.atom_names
    }

    pub fn size(&self) -> usize {
        1usize << self.atom_count()
    }

    pub fn is_trivial(&self) -> bool {
        self.atom_count() == 0
    }

    pub fn bottom(&self) -> Elem {
        0
    }

    pub fn top(&self) -> Elem {
        ((1u64 << self.atom_count()) - 1) as Elem
    }

    pub fn contains(&self, e: Elem) -> bool {
        e & !self.top() == 0
    }

    pub fn check(&self, e: Elem) -> Result<Elem> {
        if self.contains(e) {
            Ok(e)
        } else {
            Err(Error::ElementOutOfRange {
                element: e as usize,
                size: self.size(),
            })
        }
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        a | b
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        a & b
    }

    pub fn complement(&self, a: Elem) -> Elem {
        !a & self.top()
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        a & !b == 0
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        0..=self.top()
    }

    pub fn atoms(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.atom_count()).map(|i| 1 << i)
    }

    pub fn atom(&self, index: usize) -> Elem {
        debug_assert!(index < self.atom_count());
        1 << index
    }

    /// All elements below `a`, in increasing encoding order.
    pub fn below(&self, a: Elem) -> impl Iterator<Item = Elem> + Clone {
        self.elements().filter(move |&b| b & !a == 0)
    }

    /// Human-readable form: `0`, `1`, an atom label, or `{p,q}`.
    pub fn render(&self, e: Elem) -> String {
        if e == 0 {
            return "0".into();
        }
        if e == self.top() {
            return "1".into();
        }
        let names: Vec<&str> = (0..self.atom_count())
            .filter(|i| e & (1 << i) != 0)
            .map(|i| self.atom_names[i].as_str())
            .collect();
        if names.len() == 1 {
            names[0].to_string()
        } else {
            format!("{{{}}}", names.join(","))
        }
    }
}

/// An ideal of a finite Boolean algebra, stored by its generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ideal {
    top: Elem,
    generator: Elem,
}

impl Ideal {
    /// The principal ideal `{b | b ≤ a}`.
    pub fn principal(algebra: &FiniteBooleanAlgebra, a: Elem) -> Result<Self> {
        algebra.check(a)?;
        Ok(Ideal {
            top: algebra.top(),
            generator: a,
        })
    }

    pub fn zero(algebra: &FiniteBooleanAlgebra) -> Self {
        Ideal {
            top: algebra.top(),
            generator: 0,
        }
    }

    pub fn improper(algebra: &FiniteBooleanAlgebra) -> Self {
        Ideal {
            top: algebra.top(),
            generator: algebra.top(),
        }
    }

    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn contains(&self, b: Elem) -> bool {
        b & !self.top == 0 && b & !self.generator == 0
    }

    pub fn members(&self) -> Vec<Elem> {
        (0..=self.top).filter(|&b| self.contains(b)).collect()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.generator & !other.generator == 0
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        Ideal {
            top: self.top,
            generator: self.generator & other.generator,
        }
    }
}

/// `ideal_from_generator`.
pub fn ideal_from_generator(algebra: &FiniteBooleanAlgebra, a: Elem) -> Result<Ideal> {
    Ideal::principal(algebra, a)
}

/// Outcome of validating an explicit set against the ideal laws.
#[derive(Debug, Clone)]
pub struct IdealCheck {
    pub report: AxiomReport,
    /// Present iff the report passes; its generator is the join of the set.
    pub ideal: Option<Ideal>,
}

/// Checks that `set` contains 0 and is downward closed and join closed.
pub fn check_ideal(algebra: &FiniteBooleanAlgebra, set: &BTreeSet<Elem>) -> IdealCheck {
    let mut report = AxiomReport::new("ideal");
    let members: Vec<Elem> = set.iter().copied().collect();
    report.law(
        "carrier",
        members.iter().copied(),
        |&b| algebra.contains(b),
        |b| Witness::elements([b as usize]),
    );
    report.law(
        "zero",
        std::iter::once(()),
        |_| set.contains(&0),
        |_| Witness::elements([0]),
    );
    report.law(
        "down-closed",
        iproduct!(members.iter().copied(), algebra.elements()),
        |&(x, y)| !algebra.leq(y, x) || set.contains(&y),
        |(x, y)| Witness::elements([x as usize, y as usize]),
    );
    report.law(
        "join-closed",
        iproduct!(members.iter().copied(), members.iter().copied()),
        |&(x, y)| set.contains(&algebra.join(x, y)),
        |(x, y)| Witness::elements([x as usize, y as usize]),
    );
    let ideal = report.passes().then(|| Ideal {
        top: algebra.top(),
        generator: members.iter().fold(0, |acc, &b| acc | b),
    });
    IdealCheck { report, ideal }
}

/// The principal ultrafilter `{b | atom ≤ b}` of an atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ultrafilter {
    atom_index: usize,
}

impl Ultrafilter {
    pub fn atom_index(&self) -> usize {
        self.atom_index
    }

    pub fn atom(&self) -> Elem {
        1 << self.atom_index
    }

    pub fn contains(&self, b: Elem) -> bool {
        b & self.atom() != 0
    }

    /// Membership as a homomorphism onto the two-element algebra.
    pub fn indicator(&self, algebra: &FiniteBooleanAlgebra) -> BooleanHom {
        let two = FiniteBooleanAlgebra::powerset(["*"]).expect("one atom");
        let map = algebra
            .elements()
            .map(|b| self.contains(b) as Elem)
            .collect();
        BooleanHom {
            source: algebra.clone(),
            target: two,
            map,
        }
    }
}

/// One ultrafilter per atom, in atom order.
pub fn ultrafilters(algebra: &FiniteBooleanAlgebra) -> Result<Vec<Ultrafilter>> {
    if algebra.is_trivial() {
        return Err(Error::TrivialAlgebra);
    }
    Ok((0..algebra.atom_count())
        .map(|atom_index| Ultrafilter { atom_index })
        .collect())
}

/// A total map between finite Boolean algebras, indexed by source element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanHom {
    pub source: FiniteBooleanAlgebra,
    pub target: FiniteBooleanAlgebra,
    pub map: Vec<Elem>,
}

impl BooleanHom {
    pub fn new(
        source: FiniteBooleanAlgebra,
        target: FiniteBooleanAlgebra,
        map: Vec<Elem>,
    ) -> Result<Self> {
        if map.len() != source.size() {
            return Err(Error::Malformed(format!(
                "map has {} entries for a source of size {}",
                map.len(),
                source.size()
            )));
        }
        for &b in &map {
            target.check(b)?;
        }
        Ok(BooleanHom {
            source,
            target,
            map,
        })
    }

    pub fn identity(algebra: &FiniteBooleanAlgebra) -> Self {
        BooleanHom {
            source: algebra.clone(),
            target: algebra.clone(),
            map: algebra.elements().collect(),
        }
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a as usize]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &BooleanHom) -> BooleanHom {
        BooleanHom {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&b| other.apply(b)).collect(),
        }
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.size() != self.target.size() {
            return false;
        }
        let image: HashSet<Elem> = self.map.iter().copied().collect();
        image.len() == self.map.len()
    }

    /// Exhaustively checks preservation of 0, 1, ∨, ∧ and complement.
    pub fn validate(&self) -> AxiomReport {
        validate_hom(self)
    }
}

pub fn validate_hom(h: &BooleanHom) -> AxiomReport {
    let (a, b) = (&h.source, &h.target);
    let mut report = AxiomReport::new("boolean-hom");
    report.law(
        "zero",
        std::iter::once(a.bottom()),
        |&x| h.apply(x) == b.bottom(),
        |x| Witness::elements([x as usize]),
    );
    report.law(
        "one",
        std::iter::once(a.top()),
        |&x| h.apply(x) == b.top(),
        |x| Witness::elements([x as usize]),
    );
    report.law(
        "join",
        iproduct!(a.elements(), a.elements()),
        |&(x, y)| h.apply(a.join(x, y)) == b.join(h.apply(x), h.apply(y)),
        |(x, y)| Witness::elements([x as usize, y as usize]),
    );
    report.law(
        "meet",
        iproduct!(a.elements(), a.elements()),
        |&(x, y)| h.apply(a.meet(x, y)) == b.meet(h.apply(x), h.apply(y)),
        |(x, y)| Witness::elements([x as usize, y as usize]),
    );
    report.law(
        "complement",
        a.elements(),
        |&x| h.apply(a.complement(x)) == b.complement(h.apply(x)),
        |x| Witness::elements([x as usize]),
    );
    report
}

/// The homomorphism `A → B` dual to a map on atoms `m : atoms(B) → atoms(A)`:
/// `h(a) = { β | m(β) ≤ a }`.
pub fn hom_from_atom_map(
    source: &FiniteBooleanAlgebra,
    target: &FiniteBooleanAlgebra,
    atom_map: &[usize],
) -> Result<BooleanHom> {
    if atom_map.len() != target.atom_count() {
        return Err(Error::Malformed(format!(
            "atom map has {} entries for {} target atoms",
            atom_map.len(),
            target.atom_count()
        )));
    }
    if let Some(&bad) = atom_map.iter().find(|&&m| m >= source.atom_count()) {
        return Err(Error::ElementOutOfRange {
            element: bad,
            size: source.atom_count(),
        });
    }
    let map = source
        .elements()
        .map(|a| {
            atom_map
                .iter()
                .enumerate()
                .filter(|&(_, &m)| a & (1 << m) != 0)
                .fold(0, |acc, (beta, _)| acc | (1 << beta))
        })
        .collect();
    Ok(BooleanHom {
        source: source.clone(),
        target: target.clone(),
        map,
    })
}

/// All atom maps `atoms(target) → atoms(source)` in lexicographic order.
pub fn all_atom_maps(source_atoms: usize, target_atoms: usize) -> Vec<Vec<usize>> {
    if source_atoms == 0 {
        return if target_atoms == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut maps = vec![Vec::new()];
    for _ in 0..target_atoms {
        maps = maps
            .into_iter()
            .flat_map(|prefix| {
                (0..source_atoms).map(move |m| {
                    let mut next = prefix.clone();
                    next.push(m);
                    next
                })
            })
            .collect();
    }
    maps
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two() -> FiniteBooleanAlgebra {
        FiniteBooleanAlgebra::powerset(["p", "q"]).unwrap()
    }

    #[test]
    fn powerset_examples() {
        let empty = FiniteBooleanAlgebra::powerset(Vec::<String>::new()).unwrap();
        assert_eq!(empty.size(), 1);
        assert_eq!(empty.top(), empty.bottom());

        let one = FiniteBooleanAlgebra::powerset(["p"]).unwrap();
        assert_eq!(one.elements().collect::<Vec<_>>(), vec![0, 1]);

        let b = two();
        assert_eq!(b.size(), 4);
        assert_eq!(b.render(0b01), "p");
        assert_eq!(b.top(), 0b11);
    }

    #[test]
    fn powerset_errors() {
        assert!(matches!(
            FiniteBooleanAlgebra::powerset(["p", "p"]),
            Err(Error::DuplicateAtom(_))
        ));
        assert!(matches!(
            FiniteBooleanAlgebra::powerset_bounded(["a", "b", "c"], 2),
            Err(Error::BoundExceeded { .. })
        ));
        assert!(FiniteBooleanAlgebra::with_atoms(17).is_err());
    }

    #[test]
    fn ideal_examples() {
        let b = two();
        assert_eq!(Ideal::principal(&b, 0).unwrap().members(), vec![0]);
        assert_eq!(Ideal::principal(&b, 3).unwrap().members(), vec![0, 1, 2, 3]);
        assert_eq!(Ideal::principal(&b, 1).unwrap().members(), vec![0, 1]);
        assert!(Ideal::principal(&b, 4).is_err());
    }

    #[test]
    fn check_ideal_examples() {
        let b = two();
        let zero = check_ideal(&b, &BTreeSet::from([0]));
        assert!(zero.report.passes());
        assert_eq!(zero.ideal.unwrap().generator(), 0);

        let bad = check_ideal(&b, &BTreeSet::from([0, 1, 2]));
        assert!(!bad.report.passes());
        let fail = bad.report.first_failure().unwrap();
        assert_eq!(fail.law, "join-closed");
        assert_eq!(fail.witness, Some(Witness::elements([1, 2])));
        assert!(bad.ideal.is_none());

        let full = check_ideal(&b, &BTreeSet::from([0, 1, 2, 3]));
        assert!(full.report.passes());
        assert_eq!(full.ideal.unwrap().generator(), 3);

        let not_down = check_ideal(&b, &BTreeSet::from([0, 3]));
        assert_eq!(not_down.report.first_failure().unwrap().law, "down-closed");
    }

    #[test]
    fn ultrafilter_examples() {
        assert!(matches!(
            ultrafilters(&FiniteBooleanAlgebra::with_atoms(0).unwrap()),
            Err(Error::TrivialAlgebra)
        ));
        for k in 1..=3 {
            let b = FiniteBooleanAlgebra::with_atoms(k).unwrap();
            let us = ultrafilters(&b).unwrap();
            assert_eq!(us.len(), k);
            for (i, u) in us.iter().enumerate() {
                assert_eq!(u.atom(), 1 << i);
                assert!(u.indicator(&b).validate().passes());
            }
        }
    }

    #[test]
    fn validate_hom_examples() {
        let b = two();
        assert!(BooleanHom::identity(&b).validate().passes());

        let one = FiniteBooleanAlgebra::powerset(["p"]).unwrap();
        let constant = BooleanHom::new(one.clone(), one.clone(), vec![0, 0]).unwrap();
        let report = constant.validate();
        let fail = report.first_failure().unwrap();
        assert_eq!(fail.law, "one");
        assert_eq!(fail.witness, Some(Witness::elements([1])));

        // b ↦ 1 iff q ≤ b
        let by_q = BooleanHom::new(b.clone(), one, vec![0, 0, 1, 1]).unwrap();
        assert!(by_q.validate().passes());
    }

    #[test]
    fn hom_from_atom_map_examples() {
        let b = two();
        let id = hom_from_atom_map(&b, &b, &[0, 1]).unwrap();
        assert_eq!(id, BooleanHom::identity(&b));

        let one = FiniteBooleanAlgebra::powerset(["p"]).unwrap();
        let h = hom_from_atom_map(&b, &one, &[1]).unwrap();
        assert_eq!(h.apply(0b10), 1);
        assert_eq!(h.apply(0b01), 0);

        let diag = hom_from_atom_map(&one, &b, &[0, 0]).unwrap();
        assert_eq!(diag.map, vec![0, 3]);
    }

    #[test]
    fn every_atom_map_gives_a_hom() {
        for k in 0..=4 {
            for j in 0..=4 {
                let a = FiniteBooleanAlgebra::with_atoms(k).unwrap();
                let b = FiniteBooleanAlgebra::with_atoms(j).unwrap();
                for m in all_atom_maps(k, j) {
                    let h = hom_from_atom_map(&a, &b, &m).unwrap();
                    assert!(h.validate().passes(), "k={k} j={j} m={m:?}");
                }
            }
        }
    }

    #[test]
    fn ideals_round_trip_through_check_ideal() {
        for k in 0..=4 {
            let b = FiniteBooleanAlgebra::with_atoms(k).unwrap();
            for a in b.elements() {
                let ideal = Ideal::principal(&b, a).unwrap();
                let set: BTreeSet<Elem> = ideal.members().into_iter().collect();
                let check = check_ideal(&b, &set);
                assert!(check.report.passes());
                assert_eq!(check.ideal.unwrap().generator(), a);
            }
        }
    }

    #[test]
    fn every_ideal_is_principal() {
        for k in 0..=4usize {
            let b = FiniteBooleanAlgebra::with_atoms(k).unwrap();
            let size = b.size();
            // Subsets of the carrier as masks over element indices.
            for subset in 0u64..(1u64 << size) {
                if subset & 1 == 0 {
                    continue;
                }
                let set: BTreeSet<Elem> = (0..size)
                    .filter(|i| subset >> i & 1 == 1)
                    .map(|i| i as Elem)
                    .collect();
                let check = check_ideal(&b, &set);
                if let Some(ideal) = check.ideal {
                    let join = set.iter().fold(0, |acc, &x| acc | x);
                    assert_eq!(ideal, Ideal::principal(&b, join).unwrap());
                    assert_eq!(ideal.members(), set.iter().copied().collect::<Vec<_>>());
                }
            }
            if k == 4 {
                break;
            }
        }
    }
}
