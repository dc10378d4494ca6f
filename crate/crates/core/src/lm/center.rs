use itertools::iproduct;

use super::LMAlgebra;
use crate::boolalg::{Elem, FiniteBooleanAlgebra};
use crate::report::{AxiomReport, Witness};
use crate::{Error, Result};

/// The Boolean center `C(L) = {x | x ∨ x* = 1}` together with an
/// isomorphism onto a powerset algebra whose atoms are the center's atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterView {
    elements: Vec<usize>,
    atoms: Vec<usize>,
    algebra: FiniteBooleanAlgebra,
    to_bool: Vec<Option<Elem>>,
    from_bool: Vec<usize>,
}

impl CenterView {
    /// Center elements as carrier indices, ascending.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Atoms of the center as carrier indices, ascending; atom `i` of
    /// [`algebra`](Self::algebra) is `atoms()[i]`.
    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    pub fn algebra(&self) -> &FiniteBooleanAlgebra {
        &self.algebra
    }

    pub fn contains(&self, x: usize) -> bool {
        self.to_bool.get(x).is_some_and(Option::is_some)
    }

    /// The image of a center element in the powerset algebra.
    pub fn to_bool(&self, x: usize) -> Option<Elem> {
        self.to_bool.get(x).copied().flatten()
    }

    /// The carrier element corresponding to a powerset element.
    pub fn element(&self, e: Elem) -> usize {
        self.from_bool[e as usize]
    }
}

pub fn boolean_center(l: &LMAlgebra) -> Result<CenterView> {
    l.require_valid("boolean_center")?;
    center_unchecked(l)
}

pub(crate) fn center_unchecked(l: &LMAlgebra) -> Result<CenterView> {
    let in_center: Vec<bool> = l
        .elements()
        .map(|x| l.join(x, l.star(x)) == l.one())
        .collect();
    let elements: Vec<usize> = l.elements().filter(|&x| in_center[x]).collect();

    let mut report = AxiomReport::new("center");
    report.law(
        "closed",
        iproduct!(elements.iter().copied(), elements.iter().copied()),
        |&(x, y)| in_center[l.join(x, y)] && in_center[l.meet(x, y)] && in_center[l.star(x)],
        |(x, y)| Witness::elements([x, y]),
    );
    if !report.passes() {
        return Err(Error::verification("Boolean center is not closed", report));
    }

    let atoms: Vec<usize> = elements
        .iter()
        .copied()
        .filter(|&a| {
            a != l.zero()
                && elements
                    .iter()
                    .all(|&y| y == a || y == l.zero() || !l.leq(y, a))
        })
        .collect();
    let algebra = FiniteBooleanAlgebra::powerset(atoms.iter().map(|a| format!("e{a}")))?;

    let mut to_bool = vec![None; l.size()];
    for &x in &elements {
        let mask = atoms
            .iter()
            .enumerate()
            .filter(|&(_, &a)| l.leq(a, x))
            .fold(0, |acc, (i, _)| acc | (1 << i));
        to_bool[x] = Some(mask);
    }
    let mut from_bool = vec![usize::MAX; algebra.size()];
    report.law(
        "iso-bijective",
        elements.iter().copied(),
        |&x| {
            let e = to_bool[x].unwrap() as usize;
            let fresh = from_bool[e] == usize::MAX;
            from_bool[e] = x;
            fresh
        },
        |x| Witness::elements([x]),
    );
    report.record("iso-onto", elements.len() == algebra.size(), 1, None);
    let iso = |x: usize| to_bool[x].unwrap();
    report.law(
        "iso-hom",
        iproduct!(elements.iter().copied(), elements.iter().copied()),
        |&(x, y)| {
            iso(l.join(x, y)) == algebra.join(iso(x), iso(y))
                && iso(l.meet(x, y)) == algebra.meet(iso(x), iso(y))
                && iso(l.star(x)) == algebra.complement(iso(x))
        },
        |(x, y)| Witness::elements([x, y]),
    );
    report.record(
        "iso-bounds",
        iso(l.zero()) == algebra.bottom() && iso(l.one()) == algebra.top(),
        1,
        None,
    );
    if !report.passes() {
        return Err(Error::verification(
            "center is not isomorphic to the powerset of its atoms",
            report,
        ));
    }
    Ok(CenterView {
        elements,
        atoms,
        algebra,
        to_bool,
        from_bool,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lm::{canonical, Signature};

    #[test]
    fn chain_center_is_two_element() {
        let c = boolean_center(&canonical(3).unwrap()).unwrap();
        assert_eq!(c.elements(), &[0, 3]);
        assert_eq!(c.algebra().atom_count(), 1);
        assert_eq!(c.to_bool(3), Some(1));
        assert_eq!(c.to_bool(1), None);
        assert_eq!(c.element(0), 0);
    }

    #[test]
    fn trivial_algebra_center_is_everything() {
        let trivial = LMAlgebra::from_tables(
            Signature::Phi,
            2,
            0,
            0,
            vec![vec![0]],
            vec![vec![0]],
            vec![0],
            vec![vec![0], vec![0]],
        )
        .unwrap();
        let c = boolean_center(&trivial).unwrap();
        assert_eq!(c.elements(), &[0]);
        assert!(c.algebra().is_trivial());
    }
}
