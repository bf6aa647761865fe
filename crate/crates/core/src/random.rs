//! Seeded samplers for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::abelian::{FgAbGroup, GroupHom, Matrix};
use crate::complex::{Complex2, Complex3};
use crate::crossed::{CrossedModule, FiniteGroup};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Finite group with order at most `max_order`, built from up to three cyclic
/// factors.
pub fn finite_group(rng: &mut impl Rng, max_order: i64) -> FgAbGroup {
    loop {
        let k = rng.gen_range(0..=3);
        let moduli: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=max_order)).collect();
        let g = FgAbGroup::from_moduli(&moduli);
        if g.order().is_some_and(|n| n <= max_order as u128) {
            return g;
        }
    }
}

/// Uniformly chosen well-defined homomorphism: entry `(i, j)` is a multiple
/// of `e_i / gcd(d_j, e_i)` for generator order `d_j` and target modulus `e_i`.
pub fn hom(rng: &mut impl Rng, source: &FgAbGroup, target: &FgAbGroup) -> GroupHom {
    let (d, e) = (source.moduli(), target.moduli());
    let mut m = Matrix::zeros(e.len(), d.len());
    for (i, &ei) in e.iter().enumerate() {
        for (j, &dj) in d.iter().enumerate() {
            m[(i, j)] = match (ei, dj) {
                (0, 0) => rng.gen_range(-3..=3),
                (0, _) => 0,
                _ => ei / gcd(dj, ei) * rng.gen_range(0..ei),
            };
        }
    }
    GroupHom::new(source.clone(), target.clone(), m).expect("sampled matrix is well defined")
}

pub fn complex2(rng: &mut impl Rng, max_order: i64) -> Complex2 {
    let (a, b) = (finite_group(rng, max_order), finite_group(rng, max_order));
    Complex2::new(hom(rng, &a, &b))
}

/// `λ` factors through the cokernel of `δ`, so `λδ = 0`.
pub fn complex3(rng: &mut impl Rng, max_order: i64) -> Complex3 {
    let (a, b, c) = (finite_group(rng, max_order), finite_group(rng, max_order), finite_group(rng, max_order));
    let delta = hom(rng, &a, &b);
    let coker = delta.cokernel();
    let lambda = hom(rng, &coker.group, &c).compose(&coker.projection).expect("composable");
    Complex3::new(delta, lambda).expect("λδ = 0 by construction")
}

pub fn matrix(rng: &mut impl Rng, max_dim: usize, bound: i64) -> Matrix {
    let (r, c) = (rng.gen_range(1..=max_dim), rng.gen_range(1..=max_dim));
    let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
    Matrix::from_rows(r, c, &rows).expect("rectangular")
}

fn small_group(rng: &mut impl Rng, max_order: usize) -> FiniteGroup {
    let mut pool: Vec<FiniteGroup> = (1..=max_order).map(FiniteGroup::cyclic).collect();
    pool.extend([
        FiniteGroup::symmetric3(),
        FiniteGroup::dihedral(4),
        FiniteGroup::quaternion(),
        FiniteGroup::alternating4(),
        FiniteGroup::dihedral(6),
        FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2)),
        FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(6)),
    ]);
    pool.retain(|g| g.order() <= max_order);
    pool.choose(rng).expect("nonempty pool").clone()
}

/// Valid crossed module with `|G|, |H| ≤ max_order`, drawn from three
/// families: normal subgroup inclusions with conjugation, cyclic groups with
/// zero boundary and a unit-power action, and abelian maps with trivial action.
pub fn crossed_module(rng: &mut impl Rng, max_order: usize) -> CrossedModule {
    loop {
        let x = match rng.gen_range(0..3) {
            0 => {
                let h = small_group(rng, max_order);
                let gens: Vec<usize> = (0..rng.gen_range(0..=2)).map(|_| rng.gen_range(0..h.order())).collect();
                let sub = h.generated(&gens);
                if !h.is_normal(&sub) {
                    continue;
                }
                CrossedModule::normal_inclusion(&h, &sub)
            }
            1 => {
                let (n, m) = (rng.gen_range(1..=max_order), rng.gen_range(1..=max_order));
                let units: Vec<usize> = (1..=n).filter(|&u| gcd(u as i64, n as i64) == 1 && pow_mod(u, m, n) == 1 % n).collect();
                let u = *units.choose(rng).unwrap_or(&1);
                let action = (0..m).map(|h| (0..n).map(|g| g * pow_mod(u, h, n) % n).collect()).collect();
                CrossedModule::new(FiniteGroup::cyclic(n), FiniteGroup::cyclic(m), vec![0; n], action)
            }
            _ => {
                let (n, m) = (rng.gen_range(1..=max_order), rng.gen_range(1..=max_order));
                let step = m / gcd(n as i64, m as i64) as usize;
                let k = step * rng.gen_range(0..=m);
                let boundary = (0..n).map(|g| g * k % m).collect();
                CrossedModule::with_trivial_action(FiniteGroup::cyclic(n), FiniteGroup::cyclic(m), boundary)
            }
        };
        if let Ok(x) = x {
            if x.verify().passed() {
                return x;
            }
        }
    }
}

fn pow_mod(base: usize, exp: usize, m: usize) -> usize {
    (0..exp).fold(1 % m, |acc, _| acc * base % m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn samplers_respect_bounds() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let x = complex2(&mut rng, 36);
            assert!(x.a().order().unwrap() <= 36 && x.b().order().unwrap() <= 36);
            let y = complex3(&mut rng, 16);
            assert!(y.lambda().compose(y.delta()).unwrap().is_zero());
            let c = crossed_module(&mut rng, 12);
            assert!(c.source().order() <= 12 && c.target().order() <= 12);
        }
    }
}
