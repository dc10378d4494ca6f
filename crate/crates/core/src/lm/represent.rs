use std::collections::BTreeSet;

use itertools::iproduct;

use super::{canonical_bounded, center::center_unchecked, check_lm_hom, LMAlgebra, Signature};
use crate::report::{AxiomReport, Witness};
use crate::{Error, Result};

/// A subdirect representation of an LM algebra by maps into the canonical
/// chain, one per ultrafilter of its Boolean center.
#[derive(Debug, Clone)]
pub struct MoisilRepresentation {
    pub n: usize,
    /// The center atom (carrier index) generating each ultrafilter.
    pub ultrafilters: Vec<usize>,
    /// `components[u][x]` is `h_U(x)` as an index `0..=n` of the chain.
    pub components: Vec<Vec<usize>>,
    /// The image of each component, a subalgebra of the chain.
    pub images: Vec<Vec<usize>>,
    pub report: AxiomReport,
}

impl MoisilRepresentation {
    pub fn product(&self, x: usize) -> Vec<usize> {
        self.components.iter().map(|h| h[x]).collect()
    }

    /// Whether the product map is a bijection onto the full power of the chain.
    pub fn is_onto_full_power(&self) -> bool {
        let size = self.components.first().map_or(1, Vec::len);
        let images: BTreeSet<Vec<usize>> = (0..size).map(|x| self.product(x)).collect();
        let full = (self.n + 1).checked_pow(self.ultrafilters.len() as u32);
        images.len() == size && full == Some(size)
    }
}

/// Maps `x` to `h_U(x) = |{ j : φ_j(x) ∈ U }|` for every ultrafilter `U` of
/// the center and verifies the result: every `h_U` is an LM morphism into the
/// chain with a subalgebra as image, and the product map is injective.
pub fn moisil_represent(l: &LMAlgebra) -> Result<MoisilRepresentation> {
    l.require_signature(Signature::Phi)?;
    l.require_valid("moisil_represent")?;
    let center = center_unchecked(l)?;
    let n = l.n();
    let chain = canonical_bounded(n, usize::MAX)?;
    let ultrafilters = center.atoms().to_vec();
    let components: Vec<Vec<usize>> = ultrafilters
        .iter()
        .map(|&atom| {
            l.elements()
                .map(|x| (1..=n).filter(|&j| l.leq(atom, l.op(j, x))).count())
                .collect()
        })
        .collect();

    let mut report = AxiomReport::new("moisil-representation");
    let mut images = Vec::new();
    for (u, h) in components.iter().enumerate() {
        report.summarize(&format!("h{u}-morphism"), &check_lm_hom(l, &chain, h));
        let image: BTreeSet<usize> = h.iter().copied().collect();
        report.law(
            &format!("h{u}-image-subalgebra"),
            iproduct!(image.iter().copied(), image.iter().copied()),
            |&(a, b)| {
                image.contains(&chain.join(a, b))
                    && image.contains(&chain.meet(a, b))
                    && image.contains(&chain.star(a))
                    && (1..=n).all(|i| image.contains(&chain.op(i, a)))
            },
            |(a, b)| Witness::elements([a, b]),
        );
        images.push(image.into_iter().collect());
    }
    let mut rep = MoisilRepresentation {
        n,
        ultrafilters,
        components,
        images,
        report: AxiomReport::default(),
    };
    let mut seen = std::collections::HashMap::new();
    report.law(
        "product-injective",
        l.elements(),
        |&x| seen.insert(rep.product(x), x).is_none(),
        |x| Witness::elements([x]),
    );
    if !report.passes() {
        return Err(Error::verification("Moisil representation", report));
    }
    rep.report = report;
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lm::canonical;

    #[test]
    fn chain_is_represented_by_the_identity() {
        for n in 1..=6 {
            let c = canonical(n).unwrap();
            let rep = moisil_represent(&c).unwrap();
            assert_eq!(rep.ultrafilters, vec![n]);
            assert_eq!(rep.components, vec![(0..=n).collect::<Vec<_>>()]);
            assert!(rep.is_onto_full_power());
        }
    }

    #[test]
    fn zero_maps_to_zero() {
        let c = canonical(4).unwrap();
        let rep = moisil_represent(&c).unwrap();
        assert!(rep.components.iter().all(|h| h[c.zero()] == 0));
    }

    #[test]
    fn one_element_algebra_maps_onto_the_empty_power() {
        let b = crate::boolalg::FiniteBooleanAlgebra::with_atoms(0).unwrap();
        let t = crate::construct::build_t(&b, 3).unwrap().into_algebra();
        let rep = moisil_represent(&t).unwrap();
        assert!(rep.ultrafilters.is_empty());
        assert_eq!(rep.product(0), Vec::<usize>::new());
        assert!(rep.is_onto_full_power());
    }

    #[test]
    fn j_signature_is_rejected() {
        let j = crate::lm::phi_to_j(&canonical(2).unwrap()).unwrap();
        assert!(matches!(
            moisil_represent(&j),
            Err(Error::SignatureMismatch { .. })
        ));
    }
}
