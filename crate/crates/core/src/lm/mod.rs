//! Łukasiewicz–Moisil algebras of order `n + 1` as finite operation tables.
//!
//! One type, [`LMAlgebra`], carries both signatures: the unary tables are
//! either the Chrysippian endomorphisms `φ_1..φ_n` or the mutually exclusive
//! nuances `J_1..J_n`, tagged by [`Signature`]. Unary operations are indexed
//! from 1 so that the index arithmetic in the axioms (`n + 1 - i`,
//! `n - i + 1`, …) needs no offset.

mod axioms;
mod center;
mod convert;
mod represent;
mod subalgebra;

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use itertools::iproduct;
use serde::{Deserialize, Serialize};

use crate::report::{AxiomReport, Witness};
use crate::{Error, Result};

pub use axioms::{check_axioms, check_derived_props, AxiomSystem};
pub use center::{boolean_center, CenterView};
pub(crate) use convert::phi_to_j_unchecked;
pub use convert::{j_to_phi, phi_to_j};
pub use represent::{moisil_represent, MoisilRepresentation};
pub use subalgebra::subalgebra_generated;

pub const DEFAULT_MAX_N: usize = 16;

/// Which family of unary operations an [`LMAlgebra`] carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Signature {
    Phi,
    J,
}

impl Signature {
    pub fn name(self) -> &'static str {
        match self {
            Signature::Phi => "phi",
            Signature::J => "j",
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
pub struct LMAlgebra {
    signature: Signature,
    n: usize,
    size: usize,
    zero: usize,
    one: usize,
    join: Vec<usize>,
    meet: Vec<usize>,
    star: Vec<usize>,
    unary: Vec<Vec<usize>>,
    // Verdict of the signature's own axiom suite, computed on demand.
    valid: OnceLock<bool>,
}

impl PartialEq for LMAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.signature == other.signature
            && self.n == other.n
            && self.size == other.size
            && self.zero == other.zero
            && self.one == other.one
            && self.join == other.join
            && self.meet == other.meet
            && self.star == other.star
            && self.unary == other.unary
    }
}

impl Eq for LMAlgebra {}

impl LMAlgebra {
    /// Builds an algebra from square `join`/`meet` tables, a `star` table and
    /// `n` unary tables. Only the shape and ranges are validated here; the
    /// laws are the business of [`check_axioms`].
    #[allow(clippy::too_many_arguments)]
    pub fn from_tables(
        signature: Signature,
        n: usize,
        zero: usize,
        one: usize,
        join: Vec<Vec<usize>>,
        meet: Vec<Vec<usize>>,
        star: Vec<usize>,
        unary: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let size = star.len();
        let flatten = |name: &str, rows: Vec<Vec<usize>>| -> Result<Vec<usize>> {
            if rows.len() != size || rows.iter().any(|r| r.len() != size) {
                return Err(Error::Malformed(format!(
                    "{name} table must be {size}x{size}"
                )));
            }
            Ok(rows.into_iter().flatten().collect())
        };
        let join = flatten("join", join)?;
        let meet = flatten("meet", meet)?;
        Self::from_flat(signature, n, zero, one, join, meet, star, unary)
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_flat(
        signature: Signature,
        n: usize,
        zero: usize,
        one: usize,
        join: Vec<usize>,
        meet: Vec<usize>,
        star: Vec<usize>,
        unary: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let size = star.len();
        if size == 0 {
            return Err(Error::Malformed("empty carrier".into()));
        }
        if n == 0 {
            return Err(Error::Malformed("n must be at least 1".into()));
        }
        if unary.len() != n {
            return Err(Error::Malformed(format!(
                "expected {n} unary tables, got {}",
                unary.len()
            )));
        }
        if join.len() != size * size || meet.len() != size * size {
            return Err(Error::Malformed(format!(
                "binary tables must be {size}x{size}"
            )));
        }
        if unary.iter().any(|t| t.len() != size) {
            return Err(Error::Malformed(format!(
                "unary tables must have {size} entries"
            )));
        }
        let bad = join
            .iter()
            .chain(&meet)
            .chain(&star)
            .chain(unary.iter().flatten())
            .chain([&zero, &one])
            .find(|&&v| v >= size)
            .copied();
        if let Some(bad) = bad {
            return Err(Error::ElementOutOfRange { element: bad, size });
        }
        if zero == one && size > 1 {
            return Err(Error::Malformed(
                "zero and one coincide in a nontrivial carrier".into(),
            ));
        }
        Ok(LMAlgebra {
            signature,
            n,
            size,
            zero,
            one,
            join,
            meet,
            star,
            unary,
            valid: OnceLock::new(),
        })
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.size + y]
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size + y]
    }

    #[inline]
    pub fn star(&self, x: usize) -> usize {
        self.star[x]
    }

    /// The `i`-th unary operation, `1 ≤ i ≤ n`.
    #[inline]
    pub fn op(&self, i: usize, x: usize) -> usize {
        self.unary[i - 1][x]
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.meet(x, y) == x
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items
            .into_iter()
            .fold(self.zero, |acc, x| self.join(acc, x))
    }

    pub fn meet_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.one, |acc, x| self.meet(acc, x))
    }

    /// The nuance vector `(op_1(x), …, op_n(x))`.
    pub fn nuances(&self, x: usize) -> Vec<usize> {
        (1..=self.n).map(|i| self.op(i, x)).collect()
    }

    pub fn join_rows(&self) -> Vec<Vec<usize>> {
        self.join.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    pub fn meet_rows(&self) -> Vec<Vec<usize>> {
        self.meet.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    pub fn star_table(&self) -> &[usize] {
        &self.star
    }

    pub fn unary_tables(&self) -> &[Vec<usize>] {
        &self.unary
    }

    /// Same lattice and involution, new unary tables.
    pub(crate) fn with_unary(&self, signature: Signature, unary: Vec<Vec<usize>>) -> Self {
        debug_assert_eq!(unary.len(), self.n);
        LMAlgebra {
            signature,
            unary,
            valid: OnceLock::new(),
            ..self.clone()
        }
    }

    /// The native axiom suite: (L1)–(L6) for φ, (J1)–(J6) for J.
    pub fn native_system(&self) -> AxiomSystem {
        match self.signature {
            Signature::Phi => AxiomSystem::L,
            Signature::J => AxiomSystem::J,
        }
    }

    /// Whether the algebra passes its native suite. Cached after the first call.
    pub fn is_lm_algebra(&self) -> bool {
        *self.valid.get_or_init(|| {
            check_axioms(self, self.native_system())
                .map(|r| r.passes())
                .unwrap_or(false)
        })
    }

    pub(crate) fn require_valid(&self, op: &str) -> Result<()> {
        if self.is_lm_algebra() {
            return Ok(());
        }
        let report = check_axioms(self, self.native_system())?;
        Err(Error::precondition(
            format!("{op} needs an algebra passing {}", self.native_system()),
            report,
        ))
    }

    pub(crate) fn require_signature(&self, signature: Signature) -> Result<()> {
        if self.signature == signature {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                expected: signature.name(),
            })
        }
    }

    /// Restricts every table to `subset`, which must be closed under all
    /// operations. Returns the subalgebra (elements renumbered in the order of
    /// `subset` sorted ascending) and the inclusion map.
    pub fn restrict(&self, subset: &[usize]) -> Result<(LMAlgebra, Vec<usize>)> {
        let mut inclusion: Vec<usize> = subset.to_vec();
        inclusion.sort_unstable();
        inclusion.dedup();
        if let Some(&bad) = inclusion.iter().find(|&&x| x >= self.size) {
            return Err(Error::ElementOutOfRange {
                element: bad,
                size: self.size,
            });
        }
        let mut position = vec![usize::MAX; self.size];
        for (k, &x) in inclusion.iter().enumerate() {
            position[x] = k;
        }
        let local = |x: usize, what: &str| -> Result<usize> {
            match position[x] {
                usize::MAX => Err(Error::NotClosed(what.to_string())),
                k => Ok(k),
            }
        };
        let zero = local(self.zero, "zero")?;
        let one = local(self.one, "one")?;
        let m = inclusion.len();
        let mut join = Vec::with_capacity(m * m);
        let mut meet = Vec::with_capacity(m * m);
        for (&x, &y) in iproduct!(&inclusion, &inclusion) {
            join.push(local(self.join(x, y), "join")?);
            meet.push(local(self.meet(x, y), "meet")?);
        }
        let star = inclusion
            .iter()
            .map(|&x| local(self.star(x), "star"))
            .collect::<Result<Vec<_>>>()?;
        let unary = (1..=self.n)
            .map(|i| {
                inclusion
                    .iter()
                    .map(|&x| local(self.op(i, x), "a unary operation"))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let sub = LMAlgebra::from_flat(self.signature, self.n, zero, one, join, meet, star, unary)?;
        Ok((sub, inclusion))
    }
}

/// The canonical chain `{0, 1/n, …, 1}` with `φ_i(j/n) = 1` iff `i + j ≥ n + 1`.
/// Element `j` of the carrier is `j/n`.
pub fn canonical(n: usize) -> Result<LMAlgebra> {
    canonical_bounded(n, DEFAULT_MAX_N)
}

pub fn canonical_bounded(n: usize, max_n: usize) -> Result<LMAlgebra> {
    if n == 0 {
        return Err(Error::Malformed("n must be at least 1".into()));
    }
    if n > max_n {
        return Err(Error::BoundExceeded {
            what: "n",
            count: n,
            bound: max_n,
        });
    }
    let size = n + 1;
    let join = iproduct!(0..size, 0..size).map(|(x, y)| x.max(y)).collect();
    let meet = iproduct!(0..size, 0..size).map(|(x, y)| x.min(y)).collect();
    let star = (0..size).map(|j| n - j).collect();
    let unary = (1..=n)
        .map(|i| (0..size).map(|j| if i + j > n { n } else { 0 }).collect())
        .collect();
    LMAlgebra::from_flat(Signature::Phi, n, 0, n, join, meet, star, unary)
}

/// A map between carriers, checked against a source and target algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LMHom {
    pub map: Vec<usize>,
}

impl LMHom {
    pub fn new(map: Vec<usize>) -> Self {
        LMHom { map }
    }

    pub fn identity(algebra: &LMAlgebra) -> Self {
        LMHom {
            map: algebra.elements().collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn then(&self, other: &LMHom) -> LMHom {
        LMHom {
            map: self.map.iter().map(|&y| other.apply(y)).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        let image: HashSet<usize> = self.map.iter().copied().collect();
        image.len() == self.map.len()
    }

    pub fn is_bijective_onto(&self, target: &LMAlgebra) -> bool {
        self.map.len() == target.size() && self.is_injective()
    }

    pub fn validate(&self, source: &LMAlgebra, target: &LMAlgebra) -> AxiomReport {
        check_lm_hom(source, target, &self.map)
    }
}

/// Exhaustively checks that `map` preserves 0, 1, ∨, ∧, * and every unary
/// operation of the shared signature.
pub fn check_lm_hom(source: &LMAlgebra, target: &LMAlgebra, map: &[usize]) -> AxiomReport {
    let mut report = AxiomReport::new("lm-hom");
    let shape_ok = source.signature == target.signature
        && source.n == target.n
        && map.len() == source.size
        && map.iter().all(|&y| y < target.size);
    report.record("shape", shape_ok, 1, None);
    if !shape_ok {
        report.annotate_last("signatures, n, or map domain/range disagree");
        return report;
    }
    let f = |x: usize| map[x];
    let s = source;
    let t = target;
    report.law(
        "zero",
        [s.zero],
        |&x| f(x) == t.zero,
        |x| Witness::elements([x]),
    );
    report.law(
        "one",
        [s.one],
        |&x| f(x) == t.one,
        |x| Witness::elements([x]),
    );
    report.law(
        "join",
        iproduct!(s.elements(), s.elements()),
        |&(x, y)| f(s.join(x, y)) == t.join(f(x), f(y)),
        |(x, y)| Witness::elements([x, y]),
    );
    report.law(
        "meet",
        iproduct!(s.elements(), s.elements()),
        |&(x, y)| f(s.meet(x, y)) == t.meet(f(x), f(y)),
        |(x, y)| Witness::elements([x, y]),
    );
    report.law(
        "star",
        s.elements(),
        |&x| f(s.star(x)) == t.star(f(x)),
        |x| Witness::elements([x]),
    );
    report.law(
        "unary",
        iproduct!(1..=s.n, s.elements()),
        |&(i, x)| f(s.op(i, x)) == t.op(i, f(x)),
        |(i, x)| Witness::new([i], [x]),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_examples() {
        let c3 = canonical(3).unwrap();
        assert_eq!(c3.size(), 4);
        assert_eq!(c3.op(2, 2), 3, "φ_2(2/3) = 1");
        assert_eq!(c3.op(1, 1), 0, "φ_1(1/3) = 0");
        assert_eq!(c3.star(1), 2);

        let c1 = canonical(1).unwrap();
        assert_eq!(c1.size(), 2);
        assert_eq!(c1.unary_tables()[0], vec![0, 1]);

        assert!(matches!(canonical(17), Err(Error::BoundExceeded { .. })));
        assert!(canonical(0).is_err());
    }

    #[test]
    fn from_tables_rejects_bad_shapes() {
        let c = canonical(1).unwrap();
        let bad = LMAlgebra::from_tables(
            Signature::Phi,
            1,
            0,
            1,
            c.join_rows(),
            c.meet_rows(),
            vec![1, 2],
            vec![vec![0, 1]],
        );
        assert!(matches!(
            bad,
            Err(Error::ElementOutOfRange { element: 2, .. })
        ));
        let zero_is_one = LMAlgebra::from_tables(
            Signature::Phi,
            1,
            0,
            0,
            c.join_rows(),
            c.meet_rows(),
            vec![1, 0],
            vec![vec![0, 1]],
        );
        assert!(zero_is_one.is_err());
    }

    #[test]
    fn restrict_requires_closure() {
        let c3 = canonical(3).unwrap();
        assert!(matches!(c3.restrict(&[0, 1, 3]), Err(Error::NotClosed(_))));
        let (sub, inc) = c3.restrict(&[3, 0]).unwrap();
        assert_eq!(inc, vec![0, 3]);
        assert_eq!(sub.size(), 2);
        assert!(check_lm_hom(&sub, &c3, &inc).passes());
    }
}
