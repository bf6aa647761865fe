//! Exhaustive cocycle enumeration and orbit counting.

use std::collections::HashMap;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_STATES: u128 = 10_000_000;

/// `base^exp`, saturating.
pub(crate) fn power(base: usize, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base as u128))
}

pub(crate) fn check_cap(states: u128, cap: u128) -> Result<()> {
    if states > cap {
        return Err(Error::CapExceeded { states, cap });
    }
    Ok(())
}

/// Odometer over `radix^len` digit vectors in lexicographic order.
pub(crate) fn for_each_tuple(radix: usize, len: usize, mut f: impl FnMut(&[usize])) {
    let mut t = vec![0usize; len];
    loop {
        f(&t);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < radix {
                break;
            }
            t[i] = 0;
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so roots are first members
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Orbits of `states` (given in enumeration order) under generator moves.
/// Returns the index of the first member of each orbit, ascending.
pub(crate) fn orbit_representatives(
    states: &[Vec<usize>],
    generators: usize,
    act: impl Fn(&[usize], usize) -> Vec<usize>,
) -> Result<Vec<usize>> {
    let lookup: HashMap<&[usize], usize> = states.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let mut uf = UnionFind((0..states.len()).collect());
    for (i, s) in states.iter().enumerate() {
        for g in 0..generators {
            let moved = act(s, g);
            let j = *lookup.get(moved.as_slice()).ok_or(Error::NotACocycle)?;
            uf.union(i, j);
        }
    }
    Ok((0..states.len()).filter(|&i| uf.find(i) == i).collect())
}
