//! Unit cocycle triples `(g, g′, h)` with `g ∈ G(V_1)`, `g′ ∈ G(V_0)`,
//! `h ∈ H(V_0)`, and their group law.
//!
//! Validity is checked in the standard semidirect product `G ⋉ H`: with
//! `k(v) = (g′(v), h(v))` and `∂(g) = (g^{-1}, λ(g))`,
//! - `λ(g′)·h = 1` at every vertex,
//! - `∂(g(σ)) = k(d_0σ)^{-1}·k(d_1σ)` at every edge,
//! - `g(d_1τ) = g(d_0τ)·g(d_2τ)` at every triangle.

use super::module::{CrossedModule, CrossedPointModel, NonabelianUnit};
use crate::cech::classes::{check_cap, for_each_tuple, power};
use crate::cech::Nerve;
use crate::error::{Error, Result};
use crate::report::Verification;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitTriple {
    pub g: Vec<usize>,
    pub g_prime: Vec<usize>,
    pub h: Vec<usize>,
}

impl UnitTriple {
    pub fn identity(x: &CrossedModule, nerve: &Nerve) -> Self {
        UnitTriple {
            g: vec![x.source().identity(); nerve.size(1)],
            g_prime: vec![x.source().identity(); nerve.size(0)],
            h: vec![x.target().identity(); nerve.size(0)],
        }
    }

    /// Constant triple on the point nerve.
    pub fn point(g: usize, g_prime: usize, h: usize) -> Self {
        UnitTriple { g: vec![g], g_prime: vec![g_prime], h: vec![h] }
    }
}

pub fn validate_triple(x: &CrossedModule, nerve: &Nerve, t: &UnitTriple) -> Result<()> {
    let (g, h) = (x.source(), x.target());
    if t.g.len() != nerve.size(1) || t.g_prime.len() != nerve.size(0) || t.h.len() != nerve.size(0) {
        return Err(Error::InvalidTriple("triple does not match the nerve".into()));
    }
    if t.g.iter().chain(&t.g_prime).any(|&a| a >= g.order()) || t.h.iter().any(|&b| b >= h.order()) {
        return Err(Error::InvalidTriple("element out of range".into()));
    }
    for v in 0..nerve.size(0) {
        if h.mul(x.lambda(t.g_prime[v]), t.h[v]) != h.identity() {
            return Err(Error::InvalidTriple(format!("λ(g′)·h = 1 fails at vertex {v}")));
        }
    }
    let k = |v: usize| (t.g_prime[v], t.h[v]);
    for e in 0..nerve.size(1) {
        let a = t.g[e];
        let lhs = (g.inv(a), x.lambda(a));
        let rhs = x.semidirect_mul(x.semidirect_inv(k(nerve.face(1, 0, e))), k(nerve.face(1, 1, e)));
        if lhs != rhs {
            return Err(Error::InvalidTriple(format!("(g^{{-1}}, λ(g)) = k(d_0σ)^{{-1}}·k(d_1σ) fails at edge {e}")));
        }
    }
    for tau in 0..nerve.size(2) {
        let gf = |i| t.g[nerve.face(2, i, tau)];
        if gf(1) != g.mul(gf(0), gf(2)) {
            return Err(Error::InvalidTriple(format!("g(d_1τ) = g(d_0τ)·g(d_2τ) fails at triangle {tau}")));
        }
    }
    Ok(())
}

/// `(g_1,g′_1,h_1)(g_2,g′_2,h_2) = (g_1^{d_0^*h_2}·g_2, g′_1^{h_2}·g′_2, h_1·h_2)`,
/// evaluated without validating the operands.
pub fn triple_product(x: &CrossedModule, nerve: &Nerve, t1: &UnitTriple, t2: &UnitTriple) -> UnitTriple {
    let (g, h) = (x.source(), x.target());
    UnitTriple {
        g: (0..t1.g.len()).map(|e| g.mul(x.act(t1.g[e], t2.h[nerve.face(1, 0, e)]), t2.g[e])).collect(),
        g_prime: (0..t1.g_prime.len()).map(|v| g.mul(x.act(t1.g_prime[v], t2.h[v]), t2.g_prime[v])).collect(),
        h: (0..t1.h.len()).map(|v| h.mul(t1.h[v], t2.h[v])).collect(),
    }
}

/// Group law on valid triples; the product is validated as well.
pub fn h0_group_law(x: &CrossedModule, nerve: &Nerve, t1: &UnitTriple, t2: &UnitTriple) -> Result<UnitTriple> {
    validate_triple(x, nerve, t1)?;
    validate_triple(x, nerve, t2)?;
    let p = triple_product(x, nerve, t1, t2);
    validate_triple(x, nerve, &p)?;
    Ok(p)
}

/// All valid triples, in lexicographic order. `g′` ranges over `G(V_0)`;
/// `h` and `g` are then determined because `∂` is injective.
pub fn enumerate_triples(x: &CrossedModule, nerve: &Nerve, max_states: u128) -> Result<Vec<UnitTriple>> {
    x.require_valid()?;
    let (g, h) = (x.source(), x.target());
    let (v0, v1) = (nerve.size(0), nerve.size(1));
    check_cap(power(g.order(), v0), max_states)?;
    let mut out = vec![];
    for_each_tuple(g.order(), v0, |gp| {
        let hs: Vec<usize> = gp.iter().map(|&a| h.inv(x.lambda(a))).collect();
        let k = |v: usize| (gp[v], hs[v]);
        let mut gs = Vec::with_capacity(v1);
        for e in 0..v1 {
            let (ginv, lam) = x.semidirect_mul(x.semidirect_inv(k(nerve.face(1, 0, e))), k(nerve.face(1, 1, e)));
            let a = g.inv(ginv);
            if x.lambda(a) != lam {
                return;
            }
            gs.push(a);
        }
        let t = UnitTriple { g: gs, g_prime: gp.to_vec(), h: hs };
        if validate_triple(x, nerve, &t).is_ok() {
            out.push(t);
        }
    });
    out.sort();
    Ok(out)
}

/// Exhaustive group-axiom check of the law on all valid triples.
pub fn verify_group_law(x: &CrossedModule, nerve: &Nerve, max_states: u128) -> Result<Verification> {
    let triples = enumerate_triples(x, nerve, max_states)?;
    let index = |t: &UnitTriple| triples.binary_search(t).ok();
    let n = triples.len();
    let mut table = vec![vec![usize::MAX; n]; n];
    let mut closed = None;
    for i in 0..n {
        for j in 0..n {
            match index(&triple_product(x, nerve, &triples[i], &triples[j])) {
                Some(k) => table[i][j] = k,
                None => {
                    closed.get_or_insert((i, j));
                }
            }
        }
    }
    let mut v = Verification::new();
    v.record("triples_nonempty", n > 0, format!("{n} triples"));
    v.record(
        "closure",
        closed.is_none(),
        closed.map_or("all pairs".into(), |(i, j)| format!("product of {:?} and {:?} is invalid", triples[i], triples[j])),
    );
    if closed.is_some() {
        return Ok(v);
    }
    let assoc = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .find(|&(i, j, k)| table[table[i][j]][k] != table[i][table[j][k]]);
    v.record(
        "associativity",
        assoc.is_none(),
        assoc.map_or(format!("{} triples of triples", n.pow(3)), |(i, j, k)| format!("fails at indices ({i},{j},{k})")),
    );
    let e = index(&UnitTriple::identity(x, nerve));
    let unital = e.is_some_and(|e| (0..n).all(|i| table[i][e] == i && table[e][i] == i));
    v.record("identity", unital, "(1,1,1)");
    let no_inverse = e.and_then(|e| (0..n).find(|&i| !(0..n).any(|j| table[i][j] == e && table[j][i] == e)));
    v.record(
        "inverses",
        e.is_some() && no_inverse.is_none(),
        no_inverse.map_or("found by search".into(), |i| format!("{:?} has no inverse", triples[i])),
    );
    Ok(v)
}

/// Unit attached to a point-nerve triple: `(e, g_φ) = (h, g′^{-1})`.
pub fn unit_of_point_triple(x: &CrossedModule, t: &UnitTriple) -> NonabelianUnit {
    NonabelianUnit { e: t.h[0], g_phi: x.source().inv(t.g_prime[0]) }
}

/// On the point nerve: `t ↦ (h, g′^{-1})` is a bijection onto units, and the
/// unit morphism `U_{t_2} → U_{t_1·t_2}` equals the one from the canonical
/// unit to `U_{t_1}`, so the law is composition of unit morphisms.
pub fn verify_point_law_matches_composition(x: &CrossedModule) -> Result<Verification> {
    let nerve = Nerve::point();
    let m = CrossedPointModel::new(x)?;
    let triples = enumerate_triples(x, &nerve, u128::MAX)?;
    let mut units: Vec<_> = triples.iter().map(|t| unit_of_point_triple(x, t)).collect();
    units.sort();
    let mut v = Verification::new();
    v.record(
        "triples_biject_with_units",
        units == m.enumerate_units(),
        format!("{} triples, {} units", triples.len(), m.enumerate_units().len()),
    );
    let can = m.canonical_unit();
    let mut bad = None;
    'outer: for t1 in &triples {
        for t2 in &triples {
            let p = h0_group_law(x, &nerve, t1, t2)?;
            let (u1, u2, u12) = (unit_of_point_triple(x, t1), unit_of_point_triple(x, t2), unit_of_point_triple(x, &p));
            let translated = m.unique_morphism(u2, u12) == m.unique_morphism(can, u1);
            let composite = m.compose(m.unique_morphism(can, u2), m.unique_morphism(u2, u12)) == m.unique_morphism(can, u12);
            if !(translated && composite) {
                bad = Some(format!("{t1:?}·{t2:?}"));
                break 'outer;
            }
        }
    }
    v.record("law_matches_composition", bad.is_none(), bad.unwrap_or_else(|| format!("{} pairs", triples.len().pow(2))));
    Ok(v)
}
