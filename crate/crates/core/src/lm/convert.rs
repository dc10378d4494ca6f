//! Translation between the φ and J signatures.
//!
//! `J_n = φ_1`, `J_i = φ_{n-i+1} ∧ φ_{n-i}*` for `i < n`, and back
//! `φ_i = J_{n-i+1} ∨ … ∨ J_n`.

use super::{LMAlgebra, Signature};
use crate::Result;

pub fn phi_to_j(l: &LMAlgebra) -> Result<LMAlgebra> {
    l.require_signature(Signature::Phi)?;
    l.require_valid("phi_to_j")?;
    Ok(phi_to_j_unchecked(l))
}

pub fn j_to_phi(l: &LMAlgebra) -> Result<LMAlgebra> {
    l.require_signature(Signature::J)?;
    l.require_valid("j_to_phi")?;
    Ok(j_to_phi_unchecked(l))
}

pub(crate) fn phi_to_j_unchecked(l: &LMAlgebra) -> LMAlgebra {
    let n = l.n();
    let unary = (1..=n)
        .map(|i| {
            l.elements()
                .map(|x| {
                    if i == n {
                        l.op(1, x)
                    } else {
                        l.meet(l.op(n - i + 1, x), l.star(l.op(n - i, x)))
                    }
                })
                .collect()
        })
        .collect();
    l.with_unary(Signature::J, unary)
}

pub(crate) fn j_to_phi_unchecked(l: &LMAlgebra) -> LMAlgebra {
    let n = l.n();
    let unary = (1..=n)
        .map(|i| {
            l.elements()
                .map(|x| l.join_all((n - i + 1..=n).map(|k| l.op(k, x))))
                .collect()
        })
        .collect();
    l.with_unary(Signature::Phi, unary)
}
