//! Single-entry table perturbations for mutation testing of the checkers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::lm::LMAlgebra;
use crate::mvn::MVAlgebra;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Table {
    Join,
    Meet,
    Star,
    /// The `i`-th unary operation, 1-based.
    Unary(usize),
}

/// One changed entry: `table[row][col] := value` (`col` is 0 for unary tables).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Mutation {
    pub table: Table,
    pub row: usize,
    pub col: usize,
    pub value: usize,
}

pub fn mutate(l: &LMAlgebra, m: &Mutation) -> Result<LMAlgebra> {
    let mut join = l.join_rows();
    let mut meet = l.meet_rows();
    let mut star = l.star_table().to_vec();
    let mut unary = l.unary_tables().to_vec();
    match m.table {
        Table::Join => join[m.row][m.col] = m.value,
        Table::Meet => meet[m.row][m.col] = m.value,
        Table::Star => star[m.row] = m.value,
        Table::Unary(i) => unary[i - 1][m.row] = m.value,
    }
    LMAlgebra::from_tables(
        l.signature(),
        l.n(),
        l.zero(),
        l.one(),
        join,
        meet,
        star,
        unary,
    )
}

/// `count` seeded mutations, each replacing an entry with a different value.
/// Requires at least two elements.
pub fn mutations(l: &LMAlgebra, count: usize, seed: u64) -> Vec<Mutation> {
    let size = l.size();
    assert!(size > 1, "mutation needs at least two elements");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let table = match rng.gen_range(0..3 + l.n()) {
                0 => Table::Join,
                1 => Table::Meet,
                2 => Table::Star,
                k => Table::Unary(k - 2),
            };
            let row = rng.gen_range(0..size);
            let (col, current) = match table {
                Table::Join => {
                    let c = rng.gen_range(0..size);
                    (c, l.join(row, c))
                }
                Table::Meet => {
                    let c = rng.gen_range(0..size);
                    (c, l.meet(row, c))
                }
                Table::Star => (0, l.star(row)),
                Table::Unary(i) => (0, l.op(i, row)),
            };
            let value = (current + rng.gen_range(1..size)) % size;
            Mutation {
                table,
                row,
                col,
                value,
            }
        })
        .collect()
}

pub fn mutants(l: &LMAlgebra, count: usize, seed: u64) -> Result<Vec<(Mutation, LMAlgebra)>> {
    mutations(l, count, seed)
        .into_iter()
        .map(|m| Ok((m, mutate(l, &m)?)))
        .collect()
}

/// Seeded single-entry perturbations of the `⊕` table.
pub fn mv_mutants(
    a: &MVAlgebra,
    count: usize,
    seed: u64,
) -> Vec<((usize, usize, usize), MVAlgebra)> {
    let size = a.size();
    assert!(size > 1, "mutation needs at least two elements");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let (x, y) = (rng.gen_range(0..size), rng.gen_range(0..size));
            let value = (a.oplus(x, y) + rng.gen_range(1..size)) % size;
            ((x, y, value), a.with_oplus_entry(x, y, value))
        })
        .collect()
}
