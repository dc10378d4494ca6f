use super::LMAlgebra;
use crate::{Error, Result};

/// The least subalgebra containing `seed`, with its inclusion into `l`.
pub fn subalgebra_generated(l: &LMAlgebra, seed: &[usize]) -> Result<(LMAlgebra, Vec<usize>)> {
    if let Some(&bad) = seed.iter().find(|&&x| x >= l.size()) {
        return Err(Error::ElementOutOfRange {
            element: bad,
            size: l.size(),
        });
    }
    let mut member = vec![false; l.size()];
    let mut members = Vec::new();
    let mut queue = Vec::new();
    let add = |x: usize, member: &mut Vec<bool>, queue: &mut Vec<usize>| {
        if !member[x] {
            member[x] = true;
            queue.push(x);
        }
    };
    for &x in seed.iter().chain([&l.zero(), &l.one()]) {
        add(x, &mut member, &mut queue);
    }
    while let Some(x) = queue.pop() {
        members.push(x);
        add(l.star(x), &mut member, &mut queue);
        for i in 1..=l.n() {
            add(l.op(i, x), &mut member, &mut queue);
        }
        for &y in &members {
            for z in [l.join(x, y), l.join(y, x), l.meet(x, y), l.meet(y, x)] {
                add(z, &mut member, &mut queue);
            }
        }
    }
    l.restrict(&members)
}
