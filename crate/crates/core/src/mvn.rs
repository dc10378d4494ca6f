//! MV and MV_n algebras on finite tables, and the inclusion condition on
//! ideal sequences and open families that singles out Łukasiewicz-proper
//! LM algebras.

use itertools::iproduct;
use serde::Serialize;

use crate::boolalg::Elem;
use crate::construct::IdealSequenceObject;
use crate::lm::DEFAULT_MAX_N;
use crate::report::{AxiomReport, Witness};
use crate::stone::FiniteSpaceWithOpens;
use crate::{Error, Result};

/// `(A, ⊕, *, 0)` with `1 = 0*` and `x ⊙ y = (x* ⊕ y*)*`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MVAlgebra {
    size: usize,
    zero: usize,
    oplus: Vec<usize>,
    star: Vec<usize>,
}

impl MVAlgebra {
    pub fn from_tables(zero: usize, oplus: Vec<Vec<usize>>, star: Vec<usize>) -> Result<Self> {
        let size = star.len();
        if size == 0 {
            return Err(Error::Malformed("empty carrier".into()));
        }
        if oplus.len() != size || oplus.iter().any(|row| row.len() != size) {
            return Err(Error::Malformed(format!(
                "oplus must be a {size}x{size} table"
            )));
        }
        let flat: Vec<usize> = oplus.into_iter().flatten().collect();
        if let Some(&bad) = flat
            .iter()
            .chain(&star)
            .chain([&zero])
            .find(|&&e| e >= size)
        {
            return Err(Error::ElementOutOfRange { element: bad, size });
        }
        Ok(MVAlgebra {
            size,
            zero,
            oplus: flat,
            star,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.star[self.zero]
    }

    pub fn oplus(&self, x: usize, y: usize) -> usize {
        self.oplus[x * self.size + y]
    }

    pub fn star(&self, x: usize) -> usize {
        self.star[x]
    }

    pub fn odot(&self, x: usize, y: usize) -> usize {
        self.star(self.oplus(self.star(x), self.star(y)))
    }

    /// `kx`: `0x = 0`, `(k+1)x = (kx) ⊕ x`.
    pub fn scalar(&self, k: usize, x: usize) -> usize {
        (0..k).fold(self.zero, |acc, _| self.oplus(acc, x))
    }

    /// `x^k`: `x^0 = 1`, `x^{k+1} = x^k ⊙ x`.
    pub fn power(&self, x: usize, k: usize) -> usize {
        (0..k).fold(self.one(), |acc, _| self.odot(acc, x))
    }

    pub fn oplus_rows(&self) -> Vec<Vec<usize>> {
        self.oplus
            .chunks(self.size)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn star_table(&self) -> &[usize] {
        &self.star
    }

    pub(crate) fn with_oplus_entry(&self, x: usize, y: usize, value: usize) -> Self {
        let mut out = self.clone();
        out.oplus[x * self.size + y] = value;
        out
    }
}

/// The Łukasiewicz chain `{0, 1/n, …, 1}`, element `j` standing for `j/n`.
pub fn mv_chain(n: usize) -> Result<MVAlgebra> {
    if n == 0 {
        return Err(Error::Malformed("n must be at least 1".into()));
    }
    if n > DEFAULT_MAX_N {
        return Err(Error::BoundExceeded {
            what: "n",
            count: n,
            bound: DEFAULT_MAX_N,
        });
    }
    let oplus = (0..=n)
        .map(|x| (0..=n).map(|y| (x + y).min(n)).collect())
        .collect();
    let star = (0..=n).map(|x| n - x).collect();
    MVAlgebra::from_tables(0, oplus, star)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MvTerm {
    Odot,
    Scalar(usize),
    Power(usize),
}

pub fn mv_term(a: &MVAlgebra, term: MvTerm, args: &[usize]) -> Result<usize> {
    let (name, arity) = match term {
        MvTerm::Odot => ("odot", 2),
        MvTerm::Scalar(_) => ("scalar", 1),
        MvTerm::Power(_) => ("power", 1),
    };
    if args.len() != arity {
        return Err(Error::Arity {
            term: name,
            expected: arity,
            got: args.len(),
        });
    }
    if let Some(&bad) = args.iter().find(|&&x| x >= a.size()) {
        return Err(Error::ElementOutOfRange {
            element: bad,
            size: a.size(),
        });
    }
    Ok(match term {
        MvTerm::Odot => a.odot(args[0], args[1]),
        MvTerm::Scalar(k) => a.scalar(k, args[0]),
        MvTerm::Power(k) => a.power(args[0], k),
    })
}

pub fn check_mv_axioms(a: &MVAlgebra) -> AxiomReport {
    let mut r = AxiomReport::new("MV");
    let el = || a.elements();
    r.law(
        "MV1-comm",
        iproduct!(el(), el()),
        |&(x, y)| a.oplus(x, y) == a.oplus(y, x),
        |(x, y)| Witness::elements([x, y]),
    );
    r.law(
        "MV2-assoc",
        iproduct!(el(), el(), el()),
        |&(x, y, z)| a.oplus(x, a.oplus(y, z)) == a.oplus(a.oplus(x, y), z),
        |(x, y, z)| Witness::elements([x, y, z]),
    );
    r.law(
        "MV3-unit",
        el(),
        |&x| a.oplus(x, a.zero()) == x,
        |x| Witness::elements([x]),
    );
    r.law(
        "MV4-involution",
        el(),
        |&x| a.star(a.star(x)) == x,
        |x| Witness::elements([x]),
    );
    r.law(
        "MV5-absorbing",
        el(),
        |&x| a.oplus(x, a.one()) == a.one(),
        |x| Witness::elements([x]),
    );
    r.law(
        "MV6-lukasiewicz",
        iproduct!(el(), el()),
        |&(x, y)| {
            a.oplus(a.star(a.oplus(a.star(x), y)), y) == a.oplus(a.star(a.oplus(a.star(y), x)), x)
        },
        |(x, y)| Witness::elements([x, y]),
    );
    r
}

/// `(n+1)x = nx` and `[(jx) ⊙ (x* ⊕ ((j-1)x)*)]^n = 0` for `1 < j < n`, `j ∤ n`.
pub fn check_mvn_axioms(a: &MVAlgebra, n: usize) -> AxiomReport {
    let mut r = AxiomReport::new(format!("MV_{n}"));
    r.law(
        "MVn-saturation",
        a.elements(),
        |&x| a.scalar(n + 1, x) == a.scalar(n, x),
        |x| Witness::elements([x]),
    );
    let js: Vec<usize> = (2..n).filter(|&j| !n.is_multiple_of(j)).collect();
    if js.is_empty() {
        r.note(format!("divisibility schema is vacuous for n = {n}"));
    }
    for j in js {
        r.law(
            &format!("MVn-divisibility-j{j}"),
            a.elements(),
            |&x| {
                let left = a.scalar(j, x);
                let right = a.oplus(a.star(x), a.star(a.scalar(j - 1, x)));
                a.power(a.odot(left, right), n) == a.zero()
            },
            |x| Witness::new([j], [x]),
        );
    }
    r
}

/// The index pairs `(i, k)` with `3 ≤ i ≤ n-2`, `1 ≤ k ≤ n-4`, `k < i`.
pub fn condition_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 3..=n.saturating_sub(2) {
        for k in 1..=n.saturating_sub(4).min(i - 1) {
            out.push((i, k));
        }
    }
    out
}

/// `family[i-1] ∧ family[k-1] ≤ family[n-i+k-2]` over [`condition_pairs`],
/// for a symmetric family of bitmasks.
fn mv_condition(system: &str, symbol: &str, n: usize, family: &[Elem]) -> AxiomReport {
    let mut r = AxiomReport::new(system);
    let get = |i: usize| family[i - 1];
    let pairs = condition_pairs(n);
    if pairs.is_empty() {
        r.note(format!("vacuous for n = {n}: no index pairs in range"));
    }
    let rep = |i: usize| i.min(n - i);
    for (i, k) in pairs {
        let m = n - i + k - 1;
        r.law(
            &format!("{symbol}{i}&{symbol}{k}<={symbol}{m}"),
            std::iter::once(()),
            |_| get(i) & get(k) & !get(m) == 0,
            |_| Witness::indices([i, k]),
        );
        if rep(m) == rep(i) || rep(m) == rep(k) {
            r.annotate_last("implied by symmetry");
        }
    }
    let wide: Vec<(usize, usize)> = (2..=n.saturating_sub(2))
        .flat_map(|i| (1..i).map(move |k| (i, k)))
        .collect();
    r.informational(
        "wide-range-variant",
        "J_i & J_(i-k) <= J_i for 2 <= i <= n-2, k < i; reported for comparison only",
        wide,
        |&(i, k)| get(i) & get(i - k) & !get(i) == 0,
        |(i, k)| Witness::indices([i, k]),
    );
    r
}

/// Whether `Σ(obj)` is Łukasiewicz-proper, decided by the ideal condition.
pub fn check_l_proper(obj: &IdealSequenceObject) -> AxiomReport {
    mv_condition("L-proper", "I", obj.n(), &obj.generators())
}

#[derive(Debug, Clone, Copy)]
pub enum SomvInput<'a> {
    Ideals(&'a IdealSequenceObject),
    Space(&'a FiniteSpaceWithOpens),
}

pub fn check_somv_condition(input: SomvInput<'_>) -> AxiomReport {
    match input {
        SomvInput::Ideals(obj) => mv_condition("BoolIMV", "I", obj.n(), &obj.generators()),
        SomvInput::Space(x) => mv_condition("BoolSOMV", "O", x.n(), x.opens()),
    }
}
