//! Tuple constructions over a Boolean algebra and the functors relating LM
//! algebras to Boolean algebras.
//!
//! `T(B)` is the algebra of monotone `n`-tuples with componentwise lattice
//! operations. `J(B)` has pairwise disjoint tuples as carrier and gets every
//! operation by transport along the prefix-join bijection `f : J(B) → T(B)`
//! and its inverse `g`. `Σ` cuts `J(B)` down by a symmetric ideal sequence.

mod adjunction;
mod equivalence;
mod tuples;

use std::collections::HashMap;

use itertools::iproduct;

use crate::boolalg::{Elem, FiniteBooleanAlgebra, Ideal};
use crate::lm::{phi_to_j_unchecked, LMAlgebra, Signature};
use crate::{Error, Result};

pub use adjunction::{check_adjunction, epsilon, eta, Epsilon, Eta};
pub use equivalence::{
    check_cat_equivalence, check_lm_side, check_object_side, lambda_functor, NaturalityConfig,
};
pub use tuples::{DisjointTuple, MonotoneTuple};

/// Largest carrier a tuple construction will build.
pub const DEFAULT_MAX_CARRIER: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TupleKind {
    Monotone,
    Disjoint,
}

/// An LM algebra whose elements are `n`-tuples over a Boolean algebra.
#[derive(Debug, Clone)]
pub struct TupleAlgebra {
    base: FiniteBooleanAlgebra,
    kind: TupleKind,
    tuples: Vec<Vec<Elem>>,
    index: HashMap<Vec<Elem>, usize>,
    algebra: LMAlgebra,
}

impl TupleAlgebra {
    pub fn base(&self) -> &FiniteBooleanAlgebra {
        &self.base
    }

    pub fn kind(&self) -> TupleKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.algebra.n()
    }

    pub fn algebra(&self) -> &LMAlgebra {
        &self.algebra
    }

    pub fn into_algebra(self) -> LMAlgebra {
        self.algebra
    }

    pub fn size(&self) -> usize {
        self.tuples.len()
    }

    pub fn tuples(&self) -> &[Vec<Elem>] {
        &self.tuples
    }

    pub fn tuple(&self, x: usize) -> &[Elem] {
        &self.tuples[x]
    }

    pub fn index_of(&self, tuple: &[Elem]) -> Option<usize> {
        self.index.get(tuple).copied()
    }

    /// `(a,b)`-style rendering using the base algebra's atom labels.
    pub fn render(&self, x: usize) -> String {
        let parts: Vec<String> = self.tuples[x]
            .iter()
            .map(|&e| self.base.render(e))
            .collect();
        format!("({})", parts.join(","))
    }

    fn from_tuples(
        base: &FiniteBooleanAlgebra,
        kind: TupleKind,
        tuples: Vec<Vec<Elem>>,
        algebra: LMAlgebra,
    ) -> Self {
        let index = tuples
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        TupleAlgebra {
            base: base.clone(),
            kind,
            tuples,
            index,
            algebra,
        }
    }

    fn lookup(&self, tuple: &[Elem]) -> Result<usize> {
        self.index_of(tuple)
            .ok_or_else(|| Error::InvalidTuple(tuple.to_vec()))
    }
}

fn carrier_bound(base: &FiniteBooleanAlgebra, n: usize, max_carrier: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Malformed("n must be at least 1".into()));
    }
    let count = (n + 1)
        .checked_pow(base.atom_count() as u32)
        .unwrap_or(usize::MAX);
    if count > max_carrier {
        return Err(Error::BoundExceeded {
            what: "carrier",
            count,
            bound: max_carrier,
        });
    }
    Ok(())
}

/// Monotone tuples `x_1 ≤ … ≤ x_n` in lexicographic order of the encoding.
pub fn monotone_tuples(base: &FiniteBooleanAlgebra, n: usize) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    fn extend(
        base: &FiniteBooleanAlgebra,
        n: usize,
        prefix: &mut Vec<Elem>,
        out: &mut Vec<Vec<Elem>>,
    ) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let lower = prefix.last().copied().unwrap_or(0);
        for x in base.elements().filter(|&x| base.leq(lower, x)) {
            prefix.push(x);
            extend(base, n, prefix, out);
            prefix.pop();
        }
    }
    extend(base, n, &mut prefix, &mut out);
    out
}

/// Pairwise disjoint tuples in lexicographic order of the encoding.
pub fn disjoint_tuples(base: &FiniteBooleanAlgebra, n: usize) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    fn extend(
        base: &FiniteBooleanAlgebra,
        n: usize,
        used: Elem,
        prefix: &mut Vec<Elem>,
        out: &mut Vec<Vec<Elem>>,
    ) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for y in base.elements().filter(|&y| y & used == 0) {
            prefix.push(y);
            extend(base, n, used | y, prefix, out);
            prefix.pop();
        }
    }
    extend(base, n, 0, &mut prefix, &mut out);
    out
}

/// `T(B)` with `(x_1,…,x_n)* = (x̄_n,…,x̄_1)` and `φ_i(x) = (x_i,…,x_i)`.
pub fn build_t(base: &FiniteBooleanAlgebra, n: usize) -> Result<TupleAlgebra> {
    build_t_bounded(base, n, DEFAULT_MAX_CARRIER)
}

pub fn build_t_bounded(
    base: &FiniteBooleanAlgebra,
    n: usize,
    max_carrier: usize,
) -> Result<TupleAlgebra> {
    carrier_bound(base, n, max_carrier)?;
    let tuples = monotone_tuples(base, n);
    let index: HashMap<Vec<Elem>, usize> = tuples
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    let m = tuples.len();
    let mut buf = vec![0; n];
    let look = |buf: &[Elem]| index[buf];

    let mut join = Vec::with_capacity(m * m);
    let mut meet = Vec::with_capacity(m * m);
    for (x, y) in iproduct!(&tuples, &tuples) {
        for k in 0..n {
            buf[k] = x[k] | y[k];
        }
        join.push(look(&buf));
        for k in 0..n {
            buf[k] = x[k] & y[k];
        }
        meet.push(look(&buf));
    }
    let star = tuples
        .iter()
        .map(|x| {
            for k in 0..n {
                buf[k] = base.complement(x[n - 1 - k]);
            }
            look(&buf)
        })
        .collect();
    let unary = (0..n)
        .map(|i| {
            tuples
                .iter()
                .map(|x| {
                    buf.fill(x[i]);
                    look(&buf)
                })
                .collect()
        })
        .collect();
    let zero = look(&vec![0; n]);
    let one = look(&vec![base.top(); n]);
    let algebra = LMAlgebra::from_flat(Signature::Phi, n, zero, one, join, meet, star, unary)?;
    Ok(TupleAlgebra {
        base: base.clone(),
        kind: TupleKind::Monotone,
        tuples,
        index,
        algebra,
    })
}

/// `J(B)`: disjoint tuples with every operation transported from `T(B)`
/// (`op(u, …) = g(op_T(f(u), …))`). The closed forms
/// `J_i(y) = (y_{n-i+1}, 0, …, 0)`, `J_n(y) = (y_1, 0, …, 0)` and the
/// join formula are verified against the transported tables.
pub fn build_j(base: &FiniteBooleanAlgebra, n: usize) -> Result<TupleAlgebra> {
    build_j_bounded(base, n, DEFAULT_MAX_CARRIER)
}

pub fn build_j_bounded(
    base: &FiniteBooleanAlgebra,
    n: usize,
    max_carrier: usize,
) -> Result<TupleAlgebra> {
    let t = build_t_bounded(base, n, max_carrier)?;
    let t_j = phi_to_j_unchecked(t.algebra());
    let tuples = disjoint_tuples(base, n);
    if tuples.len() != t.size() {
        return Err(Error::Verification {
            what: format!("|J(B)| = {} but |T(B)| = {}", tuples.len(), t.size()),
            report: None,
        });
    }
    let top = base.top();
    let mut j_to_t = Vec::with_capacity(tuples.len());
    for y in &tuples {
        let x = DisjointTuple::from_raw(top, y.clone()).to_monotone();
        j_to_t.push(t.lookup(x.entries())?);
    }
    let index: HashMap<Vec<Elem>, usize> = tuples
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    let mut t_to_j = vec![usize::MAX; t.size()];
    for (tx, x) in t.tuples().iter().enumerate() {
        let y = MonotoneTuple::from_raw(top, x.clone()).to_disjoint();
        let jy = *index
            .get(y.entries())
            .ok_or_else(|| Error::InvalidTuple(y.entries().to_vec()))?;
        if j_to_t[jy] != tx {
            return Err(Error::Verification {
                what: format!("f and g are not mutually inverse at {x:?}"),
                report: None,
            });
        }
        t_to_j[tx] = jy;
    }

    let m = tuples.len();
    let ta = t.algebra();
    let mut join = Vec::with_capacity(m * m);
    let mut meet = Vec::with_capacity(m * m);
    for (u, v) in iproduct!(0..m, 0..m) {
        join.push(t_to_j[ta.join(j_to_t[u], j_to_t[v])]);
        meet.push(t_to_j[ta.meet(j_to_t[u], j_to_t[v])]);
    }
    let star = (0..m).map(|u| t_to_j[ta.star(j_to_t[u])]).collect();
    let unary: Vec<Vec<usize>> = (1..=n)
        .map(|i| (0..m).map(|u| t_to_j[t_j.op(i, j_to_t[u])]).collect())
        .collect();
    let algebra = LMAlgebra::from_flat(
        Signature::J,
        n,
        t_to_j[ta.zero()],
        t_to_j[ta.one()],
        join,
        meet,
        star,
        unary,
    )?;
    let j = TupleAlgebra::from_tuples(base, TupleKind::Disjoint, tuples, algebra);
    verify_closed_forms(&j)?;
    Ok(j)
}

fn verify_closed_forms(j: &TupleAlgebra) -> Result<()> {
    let n = j.n();
    let l = j.algebra();
    let base = j.base();
    for u in l.elements() {
        let y = j.tuple(u);
        for i in 1..=n {
            let lead = if i == n { y[0] } else { y[n - i] };
            let mut expected = vec![0; n];
            expected[0] = lead;
            if j.tuple(l.op(i, u)) != expected.as_slice() {
                return Err(Error::ClosedFormMismatch {
                    what: format!("J_{i}"),
                    tuple: y.to_vec(),
                });
            }
        }
    }
    for (u, v) in iproduct!(l.elements(), l.elements()) {
        let (y, z) = (j.tuple(u), j.tuple(v));
        let w: Vec<Elem> = (0..n)
            .map(|i| {
                (0..i).fold(y[i] | z[i], |acc, k| {
                    base.meet(acc, base.complement(y[k] | z[k]))
                })
            })
            .collect();
        if j.tuple(l.join(u, v)) != w.as_slice() {
            let mut both = y.to_vec();
            both.extend_from_slice(z);
            return Err(Error::ClosedFormMismatch {
                what: "join".into(),
                tuple: both,
            });
        }
    }
    Ok(())
}

/// The star formula `(y_1,…,y_n)* = (⋀ ȳ_i, ȳ_n, …, ȳ_2)`, which is
/// not the transported star `(⋀ ȳ_i, y_n, …, y_2)`.
pub fn complemented_star(base: &FiniteBooleanAlgebra, y: &[Elem]) -> Vec<Elem> {
    let n = y.len();
    let first = y
        .iter()
        .fold(base.top(), |acc, &e| acc & base.complement(e));
    std::iter::once(first)
        .chain((1..n).rev().map(|k| base.complement(y[k])))
        .collect()
}

/// Compares the complemented star formula with the transported star on `J(B)`:
/// agreement, disjointness of its result, and involution.
pub fn check_complemented_star(j: &TupleAlgebra) -> crate::AxiomReport {
    use crate::report::Witness;
    let base = j.base();
    let l = j.algebra();
    let mut report = crate::AxiomReport::new("complemented-star");
    report.law(
        "matches-transported",
        l.elements(),
        |&u| complemented_star(base, j.tuple(u)) == j.tuple(l.star(u)),
        |u| Witness::elements([u]),
    );
    report.law(
        "stays-disjoint",
        l.elements(),
        |&u| j.index_of(&complemented_star(base, j.tuple(u))).is_some(),
        |u| Witness::elements([u]),
    );
    report.law(
        "involution",
        l.elements(),
        |&u| {
            let once = complemented_star(base, j.tuple(u));
            complemented_star(base, &once) == j.tuple(u)
        },
        |u| Witness::elements([u]),
    );
    report.note("transported star is (meet of complements, y_n, ..., y_2)");
    report
}

/// An object `(B, I_{n-1}, …, I_1)`: a Boolean algebra with a symmetric
/// sequence of ideals, `I_i = I_{n-i}`. Stored index-addressed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSequenceObject {
    base: FiniteBooleanAlgebra,
    n: usize,
    ideals: Vec<Ideal>,
}

impl IdealSequenceObject {
    /// `generators[i - 1]` generates `I_i`.
    pub fn new(base: FiniteBooleanAlgebra, n: usize, generators: &[Elem]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Malformed("n must be at least 1".into()));
        }
        if generators.len() != n - 1 {
            return Err(Error::Malformed(format!(
                "expected {} generators for n = {n}, got {}",
                n - 1,
                generators.len()
            )));
        }
        let ideals = generators
            .iter()
            .map(|&g| Ideal::principal(&base, g))
            .collect::<Result<Vec<_>>>()?;
        for i in 1..n {
            if ideals[i - 1] != ideals[n - i - 1] {
                return Err(Error::AsymmetricIdeals { i, j: n - i });
            }
        }
        Ok(IdealSequenceObject { base, n, ideals })
    }

    pub fn base(&self) -> &FiniteBooleanAlgebra {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `I_i` for `1 ≤ i ≤ n - 1`.
    pub fn ideal(&self, i: usize) -> Ideal {
        self.ideals[i - 1]
    }

    pub fn generators(&self) -> Vec<Elem> {
        self.ideals.iter().map(Ideal::generator).collect()
    }

    /// Every symmetric sequence on `base`, in lexicographic order of the
    /// free generators `g_1, …, g_⌈(n-1)/2⌉`.
    pub fn all_symmetric(base: &FiniteBooleanAlgebra, n: usize) -> Vec<Self> {
        let free = n / 2;
        let mut out = Vec::new();
        let mut choice = vec![0; free];
        loop {
            let gens: Vec<Elem> = (1..n).map(|i| choice[i.min(n - i) - 1]).collect();
            out.push(IdealSequenceObject::new(base.clone(), n, &gens).expect("symmetric"));
            // odometer over choice
            let mut k = free;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if choice[k] < base.top() {
                    choice[k] += 1;
                    choice[k + 1..].fill(0);
                    break;
                }
            }
        }
    }
}

/// `Σ(B, I_{n-1}, …, I_1)`: disjoint tuples with `y_i ∈ I_{n-i+1}` for
/// `i ≥ 2` (position 1 is unconstrained), operations restricted from `J(B)`.
pub fn sigma(obj: &IdealSequenceObject) -> Result<TupleAlgebra> {
    let j = build_j(obj.base(), obj.n())?;
    sigma_within(obj, &j)
}

pub(crate) fn sigma_within(obj: &IdealSequenceObject, j: &TupleAlgebra) -> Result<TupleAlgebra> {
    let n = obj.n();
    let keep: Vec<usize> = (0..j.size())
        .filter(|&u| {
            let y = j.tuple(u);
            (2..=n).all(|i| obj.ideal(n - i + 1).contains(y[i - 1]))
        })
        .collect();
    let (algebra, inclusion) = j.algebra().restrict(&keep)?;
    let tuples = inclusion.iter().map(|&u| j.tuple(u).to_vec()).collect();
    Ok(TupleAlgebra::from_tuples(
        obj.base(),
        TupleKind::Disjoint,
        tuples,
        algebra,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lm::{canonical, check_axioms, AxiomSystem};

    fn b(k: usize) -> FiniteBooleanAlgebra {
        FiniteBooleanAlgebra::with_atoms(k).unwrap()
    }

    #[test]
    fn t_of_two_is_the_chain() {
        for n in 1..=5 {
            let t = build_t(&b(1), n).unwrap();
            // Monotone 0/1 tuples in lex order are (0..0), (0..01), …, (1..1),
            // and the j-th has j ones, i.e. it is j/n.
            assert_eq!(t.algebra(), &canonical(n).unwrap());
        }
    }

    #[test]
    fn t_examples() {
        let t = build_t(&b(1), 2).unwrap();
        let x = t.index_of(&[0, 1]).unwrap();
        let l = t.algebra();
        assert_eq!(t.tuple(l.op(1, x)), &[0, 0]);
        assert_eq!(t.tuple(l.star(x)), &[0, 1]);
        assert!(check_axioms(l, AxiomSystem::L).unwrap().passes());
    }

    #[test]
    fn j_examples() {
        let base = b(2);
        let (a, bb) = (0b01, 0b10);
        let j = build_j(&base, 2).unwrap();
        let l = j.algebra();
        let u = j.index_of(&[a, bb]).unwrap();
        assert_eq!(j.tuple(l.op(1, u)), &[bb, 0]);
        let v = j.index_of(&[bb, a]).unwrap();
        assert_eq!(j.tuple(l.join(u, v)), &[0b11, 0]);
        assert_eq!(j.tuple(l.zero()), &[0, 0]);
        assert!((1..=2).all(|i| l.op(i, l.zero()) == l.zero()));
        assert!(check_axioms(l, AxiomSystem::J).unwrap().passes());
        assert_eq!(j.render(u), "(p,q)");
    }

    #[test]
    fn complemented_star_breaks_involution() {
        let base = b(2);
        let j = build_j(&base, 2).unwrap();
        let (a, bb) = (0b01, 0b10);
        assert_eq!(complemented_star(&base, &[a, bb]), vec![0, a]);
        assert_eq!(complemented_star(&base, &[0, a]), vec![bb, bb]);
        let report = check_complemented_star(&j);
        assert!(!report.result("involution").unwrap().passed);
        assert!(!report.result("stays-disjoint").unwrap().passed);
        let u = j.index_of(&[a, bb]).unwrap();
        assert_eq!(j.tuple(j.algebra().star(u)), &[0, bb]);
    }

    #[test]
    fn cardinalities() {
        for k in 0..=3 {
            for n in 1..=4 {
                let expected = (n + 1usize).pow(k as u32);
                assert_eq!(build_t(&b(k), n).unwrap().size(), expected);
                assert_eq!(build_j(&b(k), n).unwrap().size(), expected);
            }
        }
        assert!(matches!(
            build_t(&b(4), 16),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn ideal_sequences() {
        let base = b(2);
        assert!(IdealSequenceObject::new(base.clone(), 3, &[1, 1]).is_ok());
        assert!(matches!(
            IdealSequenceObject::new(base.clone(), 3, &[1, 0]),
            Err(Error::AsymmetricIdeals { i: 1, j: 2 })
        ));
        assert!(IdealSequenceObject::new(base.clone(), 3, &[1]).is_err());
        assert!(IdealSequenceObject::new(base.clone(), 1, &[]).is_ok());
        // n = 5: free generators g_1 = g_4, g_2 = g_3.
        assert_eq!(IdealSequenceObject::all_symmetric(&base, 5).len(), 16);
        assert_eq!(IdealSequenceObject::all_symmetric(&base, 4).len(), 16);
        assert_eq!(IdealSequenceObject::all_symmetric(&base, 1).len(), 1);
        assert_eq!(IdealSequenceObject::all_symmetric(&b(0), 6).len(), 1);
    }

    #[test]
    fn sigma_examples() {
        let base = b(2);
        let a = 0b01;
        // n = 2: y_2 ∈ I_1 = ↓a, y_1 ∧ y_2 = 0.
        let obj = IdealSequenceObject::new(base.clone(), 2, &[a]).unwrap();
        let s = sigma(&obj).unwrap();
        assert_eq!(s.size(), 6);
        assert!(s
            .tuples()
            .iter()
            .all(|y| y[1] & !a == 0 && y[0] & y[1] == 0));
        assert!(check_axioms(s.algebra(), AxiomSystem::J).unwrap().passes());

        for n in 1..=4 {
            let full = IdealSequenceObject::new(base.clone(), n, &vec![3; n - 1]).unwrap();
            assert_eq!(sigma(&full).unwrap().size(), (n + 1).pow(2));
            let zero = IdealSequenceObject::new(base.clone(), n, &vec![0; n - 1]).unwrap();
            let s = sigma(&zero).unwrap();
            assert_eq!(s.size(), 4);
            assert!(s.tuples().iter().all(|y| y[1..].iter().all(|&e| e == 0)));
        }
    }
}
