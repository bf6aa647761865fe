//! Total complex of Čech cochains with coefficients in a complex.
//!
//! `T^n = ⊕_{p+q=n} K^q(V_p)` with differential `D = δ + (−1)^p d_K`, where
//! `(δx)(τ) = Σ_i (−1)^i x(d_i τ)`. Only `T^{-1} → T^0 → T^1` is built, which
//! is all that degree-0 classification needs.

use super::nerve::{Nerve, TOP_LEVEL};
use super::SheafSections;
use crate::abelian::presentation::{homology_of, reduce, Lifter};
use crate::abelian::{FgAbGroup, Matrix};
use crate::complex::Complex;
use crate::error::{Error, Result};

/// A summand `K^q(V_p)` of one total degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub level: usize,
    pub degree: i32,
    pub group: FgAbGroup,
    pub offset: usize,
}

#[derive(Debug, Clone)]
pub struct TotalComplex {
    nerve: Nerve,
    coefficients: Complex,
    /// Blocks of `T^{-1}`, `T^0`, `T^1`.
    blocks: [Vec<Block>; 3],
    moduli: [Vec<i64>; 3],
    /// `D: T^{-1} → T^0` and `D: T^0 → T^1`.
    d: [Matrix; 2],
}

/// A cochain of the total complex given block by block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalCocycle {
    pub total_degree: i32,
    pub components: Vec<SheafSections>,
}

impl TotalComplex {
    pub fn new(nerve: &Nerve, coefficients: &Complex) -> Result<Self> {
        if coefficients.len() > TOP_LEVEL {
            return Err(Error::InvalidComplex(format!(
                "coefficient complexes of length {} need nerve levels beyond {TOP_LEVEL}",
                coefficients.len()
            )));
        }
        let blocks = [-1, 0, 1].map(|n| layout(nerve, coefficients, n));
        let moduli = [0, 1, 2].map(|k| {
            let mut m = vec![];
            for b in &blocks[k] {
                let gm = b.group.moduli();
                for _ in 0..nerve.size(b.level) {
                    m.extend_from_slice(&gm);
                }
            }
            m
        });
        let d = [0, 1].map(|k| differential(nerve, coefficients, &blocks[k], &blocks[k + 1], moduli[k + 1].len()));
        let mut tc = TotalComplex { nerve: nerve.clone(), coefficients: coefficients.clone(), blocks, moduli, d };
        for k in 0..2 {
            let m = tc.moduli[k + 1].clone();
            crate::abelian::presentation::reduce_matrix(&m, &mut tc.d[k]);
        }
        Ok(tc)
    }

    pub fn nerve(&self) -> &Nerve {
        &self.nerve
    }

    pub fn coefficients(&self) -> &Complex {
        &self.coefficients
    }

    pub fn blocks(&self, total_degree: i32) -> &[Block] {
        &self.blocks[(total_degree + 1) as usize]
    }

    pub fn rank(&self, total_degree: i32) -> usize {
        self.moduli[(total_degree + 1) as usize].len()
    }

    /// `H^0` of the total complex.
    pub fn h0(&self) -> FgAbGroup {
        homology_of(&self.moduli[1], Some(&self.d[0]), Some((&self.moduli[2], &self.d[1]))).group
    }

    /// `D` applied to coordinates in degree `-1` or `0`.
    pub fn apply_d(&self, total_degree: i32, x: &[i64]) -> Vec<i64> {
        let k = (total_degree + 1) as usize;
        let mut y = self.d[k].mul_vec(x);
        reduce(&self.moduli[k + 1], &mut y);
        y
    }

    pub fn is_cocycle(&self, x: &[i64]) -> bool {
        self.apply_d(0, x).iter().all(|&c| c == 0)
    }

    /// Some `β ∈ T^{-1}` with `Dβ = x`, if `x` is a coboundary.
    pub fn solve_coboundary(&self, x: &[i64]) -> Option<Vec<i64>> {
        let mut beta = Lifter::new(&self.d[0], &self.moduli[1]).lift(x)?;
        reduce(&self.moduli[0], &mut beta);
        Some(beta)
    }

    pub fn to_coords(&self, c: &TotalCocycle) -> Result<Vec<i64>> {
        let blocks = self.blocks(c.total_degree);
        if blocks.len() != c.components.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} components for {} blocks",
                c.components.len(),
                blocks.len()
            )));
        }
        let mut x = vec![];
        for (b, s) in blocks.iter().zip(&c.components) {
            if s.group != b.group || s.level != b.level || s.values.len() != self.nerve.size(b.level) {
                return Err(Error::GroupMismatch(format!("component at level {} degree {}", b.level, b.degree)));
            }
            for v in &s.values {
                x.extend_from_slice(v.coords());
            }
        }
        Ok(x)
    }

    pub fn from_coords(&self, total_degree: i32, x: &[i64]) -> TotalCocycle {
        let components = self
            .blocks(total_degree)
            .iter()
            .map(|b| {
                let r = b.group.rank();
                let values = (0..self.nerve.size(b.level))
                    .map(|cell| b.group.elem_unchecked(x[b.offset + cell * r..b.offset + (cell + 1) * r].to_vec()))
                    .collect();
                SheafSections { group: b.group.clone(), level: b.level, values }
            })
            .collect();
        TotalCocycle { total_degree, components }
    }
}

fn layout(nerve: &Nerve, k: &Complex, n: i32) -> Vec<Block> {
    let mut out = vec![];
    let mut offset = 0;
    for q in k.degrees() {
        let p = n - q;
        if !(0..=TOP_LEVEL as i32).contains(&p) {
            continue;
        }
        let group = k.term(q).expect("degree in range").clone();
        let width = group.rank() * nerve.size(p as usize);
        out.push(Block { level: p as usize, degree: q, group, offset });
        offset += width;
    }
    out
}

fn differential(nerve: &Nerve, k: &Complex, from: &[Block], to: &[Block], rows: usize) -> Matrix {
    let cols = from.iter().map(|b| b.group.rank() * nerve.size(b.level)).sum();
    let mut m = Matrix::zeros(rows, cols);
    for b in from {
        let r = b.group.rank();
        // Čech part into K^q(V_{p+1})
        if let Some(t) = to.iter().find(|t| t.degree == b.degree && t.level == b.level + 1) {
            for tau in 0..nerve.size(t.level) {
                for i in 0..=t.level {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    let x = nerve.face(t.level, i, tau);
                    for c in 0..r {
                        m[(t.offset + tau * r + c, b.offset + x * r + c)] += sign;
                    }
                }
            }
        }
        // complex part into K^{q+1}(V_p)
        if let Some(t) = to.iter().find(|t| t.degree == b.degree + 1 && t.level == b.level) {
            let dk = k.differential(b.degree).expect("degree in range").expect("not the last degree").matrix();
            let sign = if b.level % 2 == 0 { 1 } else { -1 };
            let rt = t.group.rank();
            for cell in 0..nerve.size(b.level) {
                m.add_block(t.offset + cell * rt, b.offset + cell * r, dk, sign);
            }
        }
    }
    m
}

impl TotalCocycle {
    pub fn component(&self, level: usize) -> Option<&SheafSections> {
        self.components.iter().find(|s| s.level == level)
    }
}
