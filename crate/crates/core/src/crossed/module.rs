use super::group::FiniteGroup;
use crate::error::{Error, Result};
use crate::report::Verification;

/// `λ: G → H` with a right action of `H` on `G`, `action[h][g] = g^h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedModule {
    g: FiniteGroup,
    h: FiniteGroup,
    boundary: Vec<usize>,
    action: Vec<Vec<usize>>,
}

impl CrossedModule {
    /// Checks table shapes only; the axioms are checked by [`CrossedModule::verify`].
    pub fn new(g: FiniteGroup, h: FiniteGroup, boundary: Vec<usize>, action: Vec<Vec<usize>>) -> Result<Self> {
        if boundary.len() != g.order() || boundary.iter().any(|&x| x >= h.order()) {
            return Err(Error::InvalidCrossedModule(format!("boundary must map 0..{} into 0..{}", g.order(), h.order())));
        }
        if action.len() != h.order() || action.iter().any(|row| row.len() != g.order() || row.iter().any(|&x| x >= g.order())) {
            return Err(Error::InvalidCrossedModule(format!(
                "action must be a {}×{} table into 0..{}",
                h.order(),
                g.order(),
                g.order()
            )));
        }
        Ok(CrossedModule { g, h, boundary, action })
    }

    /// `H` acting trivially.
    pub fn with_trivial_action(g: FiniteGroup, h: FiniteGroup, boundary: Vec<usize>) -> Result<Self> {
        let action = vec![g.elements().collect(); h.order()];
        Self::new(g, h, boundary, action)
    }

    /// Inclusion of a normal subgroup with conjugation `g^h = h^{-1}gh`.
    pub fn normal_inclusion(h: &FiniteGroup, normal: &[usize]) -> Result<Self> {
        if !h.is_normal(normal) {
            return Err(Error::InvalidCrossedModule("subgroup is not normal".into()));
        }
        let g = h.subgroup(normal)?;
        let pos = |x: usize| normal.iter().position(|&y| y == x).expect("closed under conjugation");
        let action = h.elements().map(|y| normal.iter().map(|&n| pos(h.conj(n, y))).collect()).collect();
        Self::new(g, h.clone(), normal.to_vec(), action)
    }

    /// `id: G → G` with conjugation.
    pub fn identity(g: &FiniteGroup) -> Self {
        Self::normal_inclusion(g, &g.elements().collect::<Vec<_>>()).expect("whole group is normal")
    }

    pub fn trivial() -> Self {
        Self::identity(&FiniteGroup::trivial())
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.g
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.h
    }

    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn action_table(&self) -> &[Vec<usize>] {
        &self.action
    }

    pub fn lambda(&self, g: usize) -> usize {
        self.boundary[g]
    }

    /// `g^h`
    pub fn act(&self, g: usize, h: usize) -> usize {
        self.action[h][g]
    }

    /// Exhaustive check of the axioms; each failing check names its first
    /// violating instance.
    pub fn verify(&self) -> Verification {
        let (g, h) = (&self.g, &self.h);
        let mut v = Verification::new();
        let pairs = || g.elements().flat_map(|x| g.elements().map(move |y| (x, y)));
        let hom = g.hom_failure(h, &self.boundary);
        v.record(
            "boundary_homomorphism",
            hom.is_none(),
            hom.map_or("all pairs".into(), |(x, y)| format!("λ(g·g′) = λ(g)·λ(g′) fails at g={x}, g′={y}")),
        );
        let auto = h.elements().find_map(|y| {
            if let Some((a, b)) = g.hom_failure(g, &self.action[y]) {
                return Some(format!("(g·g′)^h = g^h·g′^h fails at g={a}, g′={b}, h={y}"));
            }
            let mut seen = vec![false; g.order()];
            self.action[y].iter().find(|&&x| std::mem::replace(&mut seen[x], true)).map(|_| format!("g ↦ g^h is not bijective for h={y}"))
        });
        v.record("action_by_automorphisms", auto.is_none(), auto.unwrap_or_else(|| "all h".into()));
        let right = g.elements().find_map(|x| {
            if self.act(x, h.identity()) != x {
                return Some(format!("g^1 = g fails at g={x}"));
            }
            h.elements().flat_map(|a| h.elements().map(move |b| (a, b))).find_map(|(a, b)| {
                (self.act(x, h.mul(a, b)) != self.act(self.act(x, a), b))
                    .then(|| format!("g^(h·h′) = (g^h)^h′ fails at g={x}, h={a}, h′={b}"))
            })
        });
        v.record("right_action", right.is_none(), right.unwrap_or_else(|| "all triples".into()));
        let eq = g.elements().flat_map(|x| h.elements().map(move |y| (x, y))).find(|&(x, y)| {
            self.lambda(self.act(x, y)) != h.conj(self.lambda(x), y)
        });
        v.record(
            "equivariance",
            eq.is_none(),
            eq.map_or("all pairs".into(), |(x, y)| format!("λ(g^h) = h^{{-1}}·λ(g)·h fails at g={x}, h={y}")),
        );
        let peiffer = pairs().find(|&(x, y)| self.act(x, self.lambda(y)) != g.conj(x, y));
        v.record(
            "peiffer",
            peiffer.is_none(),
            peiffer.map_or("all pairs".into(), |(x, y)| format!("g^λ(g′) = g′^{{-1}}·g·g′ fails at g={x}, g′={y}")),
        );
        v
    }

    pub fn require_valid(&self) -> Result<()> {
        match self.verify().first_failure() {
            Some(c) => Err(Error::InvalidCrossedModule(format!("{}: {}", c.name, c.witness))),
            None => Ok(()),
        }
    }

    pub fn kernel(&self) -> Vec<usize> {
        self.g.elements().filter(|&x| self.lambda(x) == self.h.identity()).collect()
    }

    /// `|π_0| = |H / λ(G)|` and `|π_1| = |ker λ|`.
    pub fn homotopy_orders(&self) -> (usize, usize) {
        let mut image: Vec<usize> = self.boundary.clone();
        image.sort_unstable();
        image.dedup();
        (self.h.order() / image.len(), self.kernel().len())
    }

    /// Standard right semidirect product on `G × H`:
    /// `(g_1,h_1)(g_2,h_2) = (g_1^{h_2}·g_2, h_1·h_2)`.
    pub fn semidirect_mul(&self, a: (usize, usize), b: (usize, usize)) -> (usize, usize) {
        (self.g.mul(self.act(a.0, b.1), b.0), self.h.mul(a.1, b.1))
    }

    pub fn semidirect_inv(&self, a: (usize, usize)) -> (usize, usize) {
        let hi = self.h.inv(a.1);
        (self.g.inv(self.act(a.0, hi)), hi)
    }
}

/// The crossed module `G → {(g,h) : λ(g) = h}`, `g ↦ (g, λg)`, acting on
/// `G` through the second coordinate.
#[derive(Debug, Clone)]
pub struct UnitCrossedModule {
    pub module: CrossedModule,
    /// Element `i` of the target group is `pairs[i] = (g, h)`.
    pub pairs: Vec<(usize, usize)>,
}

/// Product on `{(g,h) : λ(g) = h}`: `(g_1,h_1)(g_2,h_2) = (g_2·g_1^{h_2}, h_1·h_2)`.
/// `(g,h) ↦ (g^{-1},h)` identifies it with `{(g,h) : λ(g)·h = 1}` inside the
/// standard semidirect product.
pub fn unit_crossed_module(x: &CrossedModule) -> Result<UnitCrossedModule> {
    x.require_valid()?;
    let (g, h) = (x.source(), x.target());
    let pairs: Vec<(usize, usize)> = g.elements().map(|a| (a, x.lambda(a))).collect();
    let index = |p: (usize, usize)| pairs.iter().position(|&q| q == p);
    let mut table = vec![];
    for &(g1, h1) in &pairs {
        let row = pairs
            .iter()
            .map(|&(g2, h2)| index((g.mul(g2, x.act(g1, h2)), h.mul(h1, h2))))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidCrossedModule("λ(g) = h is not closed under the product".into()))?;
        table.push(row);
    }
    let k = FiniteGroup::from_table(table)?;
    let boundary = g.elements().map(|a| index((a, x.lambda(a))).expect("pair present")).collect();
    let action = pairs.iter().map(|&(_, hp)| g.elements().map(|a| x.act(a, hp)).collect()).collect();
    Ok(UnitCrossedModule { module: CrossedModule::new(g.clone(), k, boundary, action)?, pairs })
}

/// Point-model unit: an object `e ∈ H` with `g_φ: e·e → e`, i.e. `λ(g_φ) = e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NonabelianUnit {
    pub e: usize,
    pub g_phi: usize,
}

#[derive(Debug, Clone)]
pub struct NonabelianContractibility {
    pub units: Vec<NonabelianUnit>,
    /// Units with `e = 1`, paired with their element of `ker λ`.
    pub kernel_units: Vec<(NonabelianUnit, usize)>,
    pub verification: Verification,
}

/// Groupoid with objects `H` and arrows `g: h → λ(g)^{-1}·h`; composing `g`
/// then `g′` gives `g·g′`, and `g_1 ⊗ g_2 = g_2^{h_1^{-1}}·g_1` over objects `h_1, h_2`.
pub struct CrossedPointModel<'a> {
    x: &'a CrossedModule,
}

impl<'a> CrossedPointModel<'a> {
    pub fn new(x: &'a CrossedModule) -> Result<Self> {
        x.require_valid()?;
        Ok(CrossedPointModel { x })
    }

    pub fn arrow_target(&self, g: usize, source: usize) -> usize {
        let h = self.x.target();
        h.mul(h.inv(self.x.lambda(g)), source)
    }

    pub fn compose(&self, first: usize, then: usize) -> usize {
        self.x.source().mul(first, then)
    }

    pub fn tensor(&self, g1: usize, h1: usize, g2: usize) -> usize {
        let g = self.x.source();
        g.mul(self.x.act(g2, self.x.target().inv(h1)), g1)
    }

    pub fn canonical_unit(&self) -> NonabelianUnit {
        NonabelianUnit { e: self.x.target().identity(), g_phi: self.x.source().identity() }
    }

    pub fn enumerate_units(&self) -> Vec<NonabelianUnit> {
        let mut units: Vec<_> = self.x.source().elements().map(|g| NonabelianUnit { e: self.x.lambda(g), g_phi: g }).collect();
        units.sort();
        units
    }

    /// `u: e_s → e_t` with `φ_s` then `u` equal to `u ⊗ u` then `φ_t`.
    pub fn is_unit_morphism(&self, s: NonabelianUnit, t: NonabelianUnit, u: usize) -> bool {
        self.arrow_target(u, s.e) == t.e
            && self.compose(s.g_phi, u) == self.compose(self.tensor(u, s.e, u), t.g_phi)
    }

    pub fn unit_morphisms(&self, s: NonabelianUnit, t: NonabelianUnit) -> Vec<usize> {
        self.x.source().elements().filter(|&u| self.is_unit_morphism(s, t, u)).collect()
    }

    /// `u = g_φ(s)·g_φ(t)^{-1}`.
    pub fn unique_morphism(&self, s: NonabelianUnit, t: NonabelianUnit) -> usize {
        let g = self.x.source();
        g.mul(s.g_phi, g.inv(t.g_phi))
    }
}

pub fn enumerate_units_nonabelian(x: &CrossedModule) -> Result<NonabelianContractibility> {
    let m = CrossedPointModel::new(x)?;
    let units = m.enumerate_units();
    let mut v = Verification::new();
    v.record("units_nonempty", !units.is_empty(), format!("{} units", units.len()));
    v.record(
        "unit_count_equals_order_of_G",
        units.len() == x.source().order(),
        format!("{} units, |G| = {}", units.len(), x.source().order()),
    );
    v.record(
        "canonical_unit_present",
        units.contains(&m.canonical_unit()),
        format!("(e, g_φ) = ({}, {})", m.canonical_unit().e, m.canonical_unit().g_phi),
    );
    let mut bad = None;
    'outer: for &s in &units {
        for &t in &units {
            let found = m.unit_morphisms(s, t);
            if found != [m.unique_morphism(s, t)] {
                bad = Some(format!("{} unit morphisms from {s:?} to {t:?}", found.len()));
                break 'outer;
            }
        }
    }
    v.record("unique_unit_morphism", bad.is_none(), bad.unwrap_or_else(|| format!("{} pairs", units.len().pow(2))));
    let mut incoherent = None;
    'coh: for &a in &units {
        for &b in &units {
            for &c in &units {
                if m.compose(m.unique_morphism(a, b), m.unique_morphism(b, c)) != m.unique_morphism(a, c) {
                    incoherent = Some((a, b, c));
                    break 'coh;
                }
            }
        }
    }
    v.record(
        "composition_coherence",
        incoherent.is_none(),
        incoherent.map_or("all triples".into(), |t| format!("composite differs at {t:?}")),
    );
    let kernel_units: Vec<_> = units.iter().filter(|u| u.e == x.target().identity()).map(|&u| (u, u.g_phi)).collect();
    let kernel = x.kernel();
    let mut image: Vec<usize> = kernel_units.iter().map(|&(_, k)| k).collect();
    image.sort_unstable();
    v.record(
        "kernel_bijection",
        image == kernel,
        format!("{} units with e = 1, |ker λ| = {}", kernel_units.len(), kernel.len()),
    );
    Ok(NonabelianContractibility { units, kernel_units, verification: v })
}
