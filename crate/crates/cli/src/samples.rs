//! Seeded document generation for round-trip testing.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use moisil::boolalg::FiniteBooleanAlgebra;
use moisil::construct::{build_j, build_t, sigma, IdealSequenceObject};
use moisil::lm::{canonical, phi_to_j};
use moisil::mvn::mv_chain;
use moisil::stone::{theta_a, FiniteSpaceWithOpens};
use moisil::Result;

use crate::document::Document;

/// `count` documents drawn from every kind with small random parameters.
pub fn sample_documents(count: usize, seed: u64) -> Result<Vec<Document>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| sample_one(&mut rng)).collect()
}

fn sample_one(rng: &mut ChaCha8Rng) -> Result<Document> {
    let n = rng.gen_range(1..=4);
    let atoms = rng.gen_range(0..=2);
    let base = FiniteBooleanAlgebra::with_atoms(atoms)?;
    Ok(match rng.gen_range(0..8) {
        0 => Document::Bool(FiniteBooleanAlgebra::with_atoms(rng.gen_range(0..=4))?),
        1 => Document::lm(canonical(rng.gen_range(1..=6))?),
        2 => Document::lm(phi_to_j(&canonical(n)?)?),
        3 => Document::lm(build_t(&base, n)?.into_algebra()),
        4 => Document::lm(build_j(&base, n)?.into_algebra()),
        5 => {
            let obj = random_object(rng, &base, n + 1)?;
            Document::lm(sigma(&obj)?.into_algebra())
        }
        6 => {
            let obj = random_object(rng, &base, n + 1)?;
            if rng.gen_bool(0.5) {
                Document::Space(theta_a(&obj)?)
            } else {
                Document::BoolIdeals(obj)
            }
        }
        _ => {
            if rng.gen_bool(0.5) {
                Document::Mv(mv_chain(n)?)
            } else {
                let spaces = FiniteSpaceWithOpens::all_symmetric(atoms, n + 1);
                Document::Space(spaces.choose(rng).expect("at least one space").clone())
            }
        }
    })
}

fn random_object(
    rng: &mut ChaCha8Rng,
    base: &FiniteBooleanAlgebra,
    n: usize,
) -> Result<IdealSequenceObject> {
    let all = IdealSequenceObject::all_symmetric(base, n);
    Ok(all
        .choose(rng)
        .expect("at least one symmetric object")
        .clone())
}
