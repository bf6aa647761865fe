use super::{FgAbGroup, GroupElem, GroupHom};
use crate::error::Result;

/// Index view of a finite group: element `k` is the `k`-th element in
/// lexicographic order of reduced coordinates (mixed radix, last coordinate
/// fastest). Addition works digitwise, so no tables are built.
#[derive(Debug, Clone)]
pub struct FiniteAbelian {
    group: FgAbGroup,
    radix: Vec<usize>,
    order: usize,
}

impl FiniteAbelian {
    pub fn new(group: &FgAbGroup) -> Result<Self> {
        let order = group.require_finite()?;
        Ok(FiniteAbelian {
            group: group.clone(),
            radix: group.invariant_factors().iter().map(|&d| d as usize).collect(),
            order: order as usize,
        })
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn index_of(&self, x: &GroupElem) -> usize {
        self.index_of_coords(x.coords())
    }

    pub fn index_of_coords(&self, coords: &[i64]) -> usize {
        coords.iter().zip(&self.radix).fold(0, |acc, (&c, &r)| acc * r + c.rem_euclid(r as i64) as usize)
    }

    pub fn coords(&self, mut k: usize) -> Vec<i64> {
        let mut c = vec![0i64; self.radix.len()];
        for i in (0..self.radix.len()).rev() {
            c[i] = (k % self.radix[i]) as i64;
            k /= self.radix[i];
        }
        c
    }

    pub fn element(&self, k: usize) -> GroupElem {
        self.group.elem_unchecked(self.coords(k))
    }

    pub fn add(&self, mut x: usize, mut y: usize) -> usize {
        let mut out = 0;
        let mut place = 1;
        for &r in self.radix.iter().rev() {
            out += ((x % r + y % r) % r) * place;
            place *= r;
            x /= r;
            y /= r;
        }
        out
    }

    pub fn neg(&self, mut x: usize) -> usize {
        let mut out = 0;
        let mut place = 1;
        for &r in self.radix.iter().rev() {
            out += ((r - x % r) % r) * place;
            place *= r;
            x /= r;
        }
        out
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    /// Table of `f` on indices, `source` and `target` given as views.
    pub fn map_table(f: &GroupHom, source: &FiniteAbelian, target: &FiniteAbelian) -> Vec<usize> {
        (0..source.order).map(|k| target.index_of_coords(&f.apply_coords(&source.coords(k)))).collect()
    }
}
