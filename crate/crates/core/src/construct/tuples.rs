use crate::boolalg::{Elem, FiniteBooleanAlgebra};
use crate::{Error, Result};

/// `x_1 ≤ x_2 ≤ … ≤ x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonotoneTuple {
    top: Elem,
    entries: Vec<Elem>,
}

/// `y_i ∧ y_j = 0` for `i ≠ j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DisjointTuple {
    top: Elem,
    entries: Vec<Elem>,
}

impl MonotoneTuple {
    pub fn new(base: &FiniteBooleanAlgebra, entries: Vec<Elem>) -> Result<Self> {
        let ok = entries.iter().all(|&e| base.contains(e))
            && entries.windows(2).all(|w| base.leq(w[0], w[1]));
        if !ok {
            return Err(Error::InvalidTuple(entries));
        }
        Ok(MonotoneTuple::from_raw(base.top(), entries))
    }

    pub(crate) fn from_raw(top: Elem, entries: Vec<Elem>) -> Self {
        MonotoneTuple { top, entries }
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    /// `g(x) = (x_1, x_2 ∧ x̄_1, …, x_n ∧ x̄_{n-1})`.
    pub fn to_disjoint(&self) -> DisjointTuple {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, &x)| match i {
                0 => x,
                _ => x & !self.entries[i - 1] & self.top,
            })
            .collect();
        DisjointTuple {
            top: self.top,
            entries,
        }
    }
}

impl DisjointTuple {
    pub fn new(base: &FiniteBooleanAlgebra, entries: Vec<Elem>) -> Result<Self> {
        let mut used = 0;
        for &e in &entries {
            if !base.contains(e) || e & used != 0 {
                return Err(Error::InvalidTuple(entries));
            }
            used |= e;
        }
        Ok(DisjointTuple::from_raw(base.top(), entries))
    }

    pub(crate) fn from_raw(top: Elem, entries: Vec<Elem>) -> Self {
        DisjointTuple { top, entries }
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    /// `f(y) = (y_1, y_1 ∨ y_2, …, y_1 ∨ … ∨ y_n)`.
    pub fn to_monotone(&self) -> MonotoneTuple {
        let entries = self
            .entries
            .iter()
            .scan(0, |acc, &y| {
                *acc |= y;
                Some(*acc)
            })
            .collect();
        MonotoneTuple {
            top: self.top,
            entries,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{disjoint_tuples, monotone_tuples};

    #[test]
    fn bijection_examples() {
        let b = FiniteBooleanAlgebra::with_atoms(2).unwrap();
        let (a, bb) = (0b01, 0b10);
        let y = DisjointTuple::new(&b, vec![a, bb]).unwrap();
        assert_eq!(y.to_monotone().entries(), &[a, 0b11]);
        let x = MonotoneTuple::new(&b, vec![a, 0b11]).unwrap();
        assert_eq!(x.to_disjoint().entries(), &[a, bb]);
        let zero = DisjointTuple::new(&b, vec![0, 0, 0]).unwrap();
        assert_eq!(zero.to_monotone().entries(), &[0, 0, 0]);
    }

    #[test]
    fn invariant_violations() {
        let b = FiniteBooleanAlgebra::with_atoms(2).unwrap();
        assert!(DisjointTuple::new(&b, vec![0b01, 0b11]).is_err());
        assert!(MonotoneTuple::new(&b, vec![0b11, 0b01]).is_err());
        assert!(MonotoneTuple::new(&b, vec![0, 4]).is_err());
    }

    #[test]
    fn f_and_g_are_inverse() {
        for k in 0..=4 {
            let b = FiniteBooleanAlgebra::with_atoms(k).unwrap();
            for n in 1..=5 {
                if (n + 1usize).pow(k as u32) > 1296 {
                    continue;
                }
                for y in disjoint_tuples(&b, n) {
                    let y = DisjointTuple::new(&b, y).unwrap();
                    let x = y.to_monotone();
                    assert!(MonotoneTuple::new(&b, x.entries().to_vec()).is_ok());
                    assert_eq!(x.to_disjoint(), y);
                }
                for x in monotone_tuples(&b, n) {
                    let x = MonotoneTuple::new(&b, x).unwrap();
                    assert_eq!(x.to_disjoint().to_monotone(), x);
                }
            }
        }
    }
}
