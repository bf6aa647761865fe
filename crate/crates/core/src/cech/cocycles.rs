use std::fmt;

use super::classes::{check_cap, for_each_tuple, orbit_representatives, power};
use super::nerve::Nerve;
use super::total::{TotalCocycle, TotalComplex};
use crate::abelian::{FgAbGroup, FiniteAbelian, GroupElem, GroupHom};
use crate::complex::{unit_complex_1, unit_complex_2, Complex, Complex2, Complex3, UnitComplex1, UnitComplex2};
use crate::error::{Error, Result};
use crate::picard::{JkUnit, SaavedraUnit};

/// Sections of a constant sheaf over one level of a nerve: one group
/// element per cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SheafSections {
    pub group: FgAbGroup,
    pub level: usize,
    pub values: Vec<GroupElem>,
}

impl SheafSections {
    pub fn zero(group: &FgAbGroup, level: usize, nerve: &Nerve) -> Self {
        Self::constant(&group.zero(), level, nerve)
    }

    pub fn constant(value: &GroupElem, level: usize, nerve: &Nerve) -> Self {
        SheafSections { group: value.group().clone(), level, values: vec![value.clone(); nerve.size(level)] }
    }

    pub fn at(&self, cell: usize) -> &GroupElem {
        &self.values[cell]
    }

    /// `d_i^*`: sections one level up, `(d_i^* x)(τ) = x(d_i τ)`.
    pub fn pullback(&self, nerve: &Nerve, i: usize) -> SheafSections {
        let up = self.level + 1;
        let values = (0..nerve.size(up)).map(|t| self.values[nerve.face(up, i, t)].clone()).collect();
        SheafSections { group: self.group.clone(), level: up, values }
    }

    /// `Σ_i (−1)^i d_i^*`
    pub fn coboundary(&self, nerve: &Nerve) -> Result<SheafSections> {
        let mut acc = SheafSections::zero(&self.group, self.level + 1, nerve);
        for i in 0..=self.level + 1 {
            let p = self.pullback(nerve, i);
            acc = if i % 2 == 0 { acc.add(&p)? } else { acc.sub(&p)? };
        }
        Ok(acc)
    }

    pub fn map(&self, f: &GroupHom) -> Result<SheafSections> {
        let values = self.values.iter().map(|v| f.apply(v)).collect::<Result<_>>()?;
        Ok(SheafSections { group: f.target().clone(), level: self.level, values })
    }

    fn zip(&self, other: &SheafSections, op: impl Fn(&GroupElem, &GroupElem) -> Result<GroupElem>) -> Result<Self> {
        if self.level != other.level || self.values.len() != other.values.len() {
            return Err(Error::DimensionMismatch("sections over different levels".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(x, y)| op(x, y)).collect::<Result<_>>()?;
        Ok(SheafSections { group: self.group.clone(), level: self.level, values })
    }

    pub fn add(&self, other: &SheafSections) -> Result<Self> {
        self.zip(other, GroupElem::add)
    }

    pub fn sub(&self, other: &SheafSections) -> Result<Self> {
        self.zip(other, GroupElem::sub)
    }

    pub fn neg(&self) -> Self {
        SheafSections { group: self.group.clone(), level: self.level, values: self.values.iter().map(GroupElem::neg).collect() }
    }

    fn check_shape(&self, group: &FgAbGroup, level: usize, nerve: &Nerve, name: &str) -> Result<()> {
        if &self.group != group || self.level != level || self.values.len() != nerve.size(level) {
            return Err(Error::GroupMismatch(format!("{name} must be a section of {group} over level {level}")));
        }
        Ok(())
    }
}

/// First cell where two sections differ.
fn first_difference(lhs: &SheafSections, rhs: &SheafSections) -> Option<usize> {
    lhs.values.iter().zip(&rhs.values).position(|(x, y)| x != y)
}

/// Relations defining a Saavedra unit cocycle `(a, a_φ, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitRelation {
    Cocycle,
    Torsor,
    Trivialization,
    Idempotent,
}

impl fmt::Display for UnitRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnitRelation::Cocycle => "d_0^*(a)+d_2^*(a)=d_1^*(a)",
            UnitRelation::Torsor => "d_0^*(b)=d_1^*(b)+λ(a)",
            UnitRelation::Trivialization => "a=d_0^*(a_φ)−d_1^*(a_φ)",
            UnitRelation::Idempotent => "λ(a_φ)=b",
        })
    }
}

/// `a ∈ A(V_1)`, `a_φ ∈ A(V_0)`, `b ∈ B(V_0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitCocycle1 {
    pub a: SheafSections,
    pub a_phi: SheafSections,
    pub b: SheafSections,
}

impl UnitCocycle1 {
    pub fn validate(&self, nerve: &Nerve, x: &Complex2) -> Result<()> {
        self.a.check_shape(x.a(), 1, nerve, "a")?;
        self.a_phi.check_shape(x.a(), 0, nerve, "a_φ")?;
        self.b.check_shape(x.b(), 0, nerve, "b")?;
        let fail = |relation, simplex| Err(Error::UnitCocycle { relation, simplex });
        let lhs = self.a.pullback(nerve, 0).add(&self.a.pullback(nerve, 2))?;
        if let Some(t) = first_difference(&lhs, &self.a.pullback(nerve, 1)) {
            return fail(UnitRelation::Cocycle, t);
        }
        let rhs = self.b.pullback(nerve, 1).add(&self.a.map(x.lambda())?)?;
        if let Some(t) = first_difference(&self.b.pullback(nerve, 0), &rhs) {
            return fail(UnitRelation::Torsor, t);
        }
        let rhs = self.a_phi.pullback(nerve, 0).sub(&self.a_phi.pullback(nerve, 1))?;
        if let Some(t) = first_difference(&self.a, &rhs) {
            return fail(UnitRelation::Trivialization, t);
        }
        if let Some(t) = first_difference(&self.a_phi.map(x.lambda())?, &self.b) {
            return fail(UnitRelation::Idempotent, t);
        }
        Ok(())
    }

    /// Effect of re-choosing the local section by `α ∈ A(V_0)`:
    /// `a_φ + α`, `b + λα`, `a + d_0^*α − d_1^*α`.
    pub fn act(&self, alpha: &SheafSections, nerve: &Nerve, x: &Complex2) -> Result<UnitCocycle1> {
        Ok(UnitCocycle1 {
            a: self.a.add(&alpha.coboundary(nerve)?)?,
            a_phi: self.a_phi.add(alpha)?,
            b: self.b.add(&alpha.map(x.lambda())?)?,
        })
    }

    /// Degree-0 cochain of the total complex of `unit_complex_1(X)`.
    pub fn to_total(&self, u: &UnitComplex1) -> Result<TotalCocycle> {
        let mut k_values = vec![];
        for (v, (ap, b)) in self.a_phi.values.iter().zip(&self.b.values).enumerate() {
            let pair = u.sum.pair(ap, b)?;
            let k = u.witness.preimage(&pair)?.ok_or(Error::UnitCocycle { relation: UnitRelation::Idempotent, simplex: v })?;
            k_values.push(k);
        }
        let k = SheafSections { group: u.complex.b().clone(), level: 0, values: k_values };
        Ok(TotalCocycle { total_degree: 0, components: vec![self.a.clone(), k] })
    }

    pub fn from_total(c: &TotalCocycle, u: &UnitComplex1) -> Result<UnitCocycle1> {
        let a = c.component(1).ok_or(Error::NotACocycle)?.clone();
        let k = c.component(0).ok_or(Error::NotACocycle)?;
        let pairs = k.values.iter().map(|v| u.pair_of(v)).collect::<Result<Vec<_>>>()?;
        let (a_phi, b): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        Ok(UnitCocycle1 {
            a,
            a_phi: SheafSections { group: u.sum.proj[0].target().clone(), level: 0, values: a_phi },
            b: SheafSections { group: u.sum.proj[1].target().clone(), level: 0, values: b },
        })
    }
}

/// Relations defining a Joyal-Kock unit cocycle `(f, s, c, g, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JkRelation {
    Associativity,
    TorsorS,
    TorsorC,
    Trivialization,
    Section,
    Idempotent,
}

impl fmt::Display for JkRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JkRelation::Associativity => "d_0^*(f)−d_1^*(f)+d_2^*(f)−d_3^*(f)=0",
            JkRelation::TorsorS => "d_0^*(s)−d_1^*(s)+d_2^*(s)=−δ(f)",
            JkRelation::TorsorC => "d_0^*(c)=d_1^*(c)+λ(s)",
            JkRelation::Trivialization => "d_0^*(g)−d_1^*(g)+d_2^*(g)=−f",
            JkRelation::Section => "d_0^*(t)−d_1^*(t)=s−δ(g)",
            JkRelation::Idempotent => "λ(t)=c",
        })
    }
}

/// `f ∈ A(V_2)`, `s ∈ B(V_1)`, `c ∈ C(V_0)` describe the torsor,
/// `g ∈ A(V_1)`, `t ∈ B(V_0)` the unit structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JkCocycle {
    pub f: SheafSections,
    pub s: SheafSections,
    pub c: SheafSections,
    pub g: SheafSections,
    pub t: SheafSections,
}

impl JkCocycle {
    pub fn validate(&self, nerve: &Nerve, x: &Complex3) -> Result<()> {
        self.f.check_shape(x.a(), 2, nerve, "f")?;
        self.s.check_shape(x.b(), 1, nerve, "s")?;
        self.c.check_shape(x.c(), 0, nerve, "c")?;
        self.g.check_shape(x.a(), 1, nerve, "g")?;
        self.t.check_shape(x.b(), 0, nerve, "t")?;
        let fail = |relation, simplex| Err(Error::JkCocycle { relation, simplex });
        let zero3 = SheafSections::zero(x.a(), 3, nerve);
        if let Some(t) = first_difference(&self.f.coboundary(nerve)?, &zero3) {
            return fail(JkRelation::Associativity, t);
        }
        let rhs = self.f.map(x.delta())?.neg();
        if let Some(t) = first_difference(&self.s.coboundary(nerve)?, &rhs) {
            return fail(JkRelation::TorsorS, t);
        }
        let rhs = self.c.pullback(nerve, 1).add(&self.s.map(x.lambda())?)?;
        if let Some(t) = first_difference(&self.c.pullback(nerve, 0), &rhs) {
            return fail(JkRelation::TorsorC, t);
        }
        if let Some(t) = first_difference(&self.g.coboundary(nerve)?, &self.f.neg()) {
            return fail(JkRelation::Trivialization, t);
        }
        let rhs = self.s.sub(&self.g.map(x.delta())?)?;
        if let Some(t) = first_difference(&self.t.coboundary(nerve)?, &rhs) {
            return fail(JkRelation::Section, t);
        }
        if let Some(t) = first_difference(&self.t.map(x.lambda())?, &self.c) {
            return fail(JkRelation::Idempotent, t);
        }
        Ok(())
    }

    /// Degree-0 cochain of the total complex of `unit_complex_2(X)`:
    /// `f` in `A(V_2)`, `(s, g)` in `(B⊕A)(V_1)`, `(t, c)` in `K(V_0)`.
    pub fn to_total(&self, u: &UnitComplex2) -> Result<TotalCocycle> {
        let mid = self
            .s
            .values
            .iter()
            .zip(&self.g.values)
            .map(|(s, g)| u.middle.pair(s, g))
            .collect::<Result<Vec<_>>>()?;
        let mut last = vec![];
        for (v, (t, c)) in self.t.values.iter().zip(&self.c.values).enumerate() {
            let pair = u.ambient.pair(t, c)?;
            let k = u.witness.preimage(&pair)?.ok_or(Error::JkCocycle { relation: JkRelation::Idempotent, simplex: v })?;
            last.push(k);
        }
        Ok(TotalCocycle {
            total_degree: 0,
            components: vec![
                self.f.clone(),
                SheafSections { group: u.middle.sum.clone(), level: 1, values: mid },
                SheafSections { group: u.complex.c().clone(), level: 0, values: last },
            ],
        })
    }

    pub fn from_total(tc: &TotalCocycle, u: &UnitComplex2) -> Result<JkCocycle> {
        let f = tc.component(2).ok_or(Error::NotACocycle)?.clone();
        let mid = tc.component(1).ok_or(Error::NotACocycle)?;
        let last = tc.component(0).ok_or(Error::NotACocycle)?;
        let (s, g): (Vec<_>, Vec<_>) = mid.values.iter().map(|m| u.middle.split(m)).collect::<Result<Vec<_>>>()?.into_iter().unzip();
        let (t, c): (Vec<_>, Vec<_>) = last
            .values
            .iter()
            .map(|k| u.ambient.split(&u.witness.apply(k)?))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .unzip();
        let b = u.middle.proj[0].target().clone();
        let a = u.middle.proj[1].target().clone();
        let cg = u.ambient.proj[1].target().clone();
        Ok(JkCocycle {
            f,
            s: SheafSections { group: b.clone(), level: 1, values: s },
            c: SheafSections { group: cg, level: 0, values: c },
            g: SheafSections { group: a, level: 1, values: g },
            t: SheafSections { group: b, level: 0, values: t },
        })
    }
}

/// `(a, b)` with `δa = 0` and `d_0^*b − d_1^*b = λa`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsorCocycle {
    pub a: SheafSections,
    pub b: SheafSections,
}

#[derive(Debug, Clone)]
pub struct TorsorClasses {
    pub count: usize,
    /// Lexicographically smallest cocycle of each class, in order.
    pub representatives: Vec<TorsorCocycle>,
    pub cocycles: usize,
}

/// Indexed arithmetic shared by the enumerations.
struct Tables {
    a: FiniteAbelian,
    b: FiniteAbelian,
    lambda: Vec<usize>,
    a_gens: Vec<usize>,
}

impl Tables {
    fn new(x: &Complex2) -> Result<Self> {
        let a = FiniteAbelian::new(x.a())?;
        let b = FiniteAbelian::new(x.b())?;
        let lambda = FiniteAbelian::map_table(x.lambda(), &a, &b);
        let a_gens = x.a().generators().iter().map(|g| a.index_of(g)).collect();
        Ok(Tables { a, b, lambda, a_gens })
    }

    fn sections(&self, view: &FiniteAbelian, level: usize, digits: &[usize]) -> SheafSections {
        SheafSections { group: view.group().clone(), level, values: digits.iter().map(|&d| view.element(d)).collect() }
    }
}

/// All torsor cocycles `(a, b)` modulo `α ∈ A(V_0)` acting by
/// `a ↦ a + d_0^*α − d_1^*α`, `b ↦ b + λα`. Exhaustive, so the search space
/// `|A|^{|V_1|} · |B|^{|V_0|}` must not exceed `max_states`.
pub fn torsor_classes(nerve: &Nerve, x: &Complex2, max_states: u128) -> Result<TorsorClasses> {
    let tab = Tables::new(x)?;
    let (v0, v1, v2) = (nerve.size(0), nerve.size(1), nerve.size(2));
    check_cap(power(tab.a.order(), v1).saturating_mul(power(tab.b.order(), v0)), max_states)?;
    let (ta, tb) = (&tab.a, &tab.b);
    let mut states: Vec<Vec<usize>> = vec![];
    for_each_tuple(ta.order(), v1, |a| {
        let closed = (0..v2).all(|t| {
            let (x0, x1, x2) = (a[nerve.face(2, 0, t)], a[nerve.face(2, 1, t)], a[nerve.face(2, 2, t)]);
            ta.add(x0, x2) == x1
        });
        if !closed {
            return;
        }
        for_each_tuple(tb.order(), v0, |b| {
            let ok = (0..v1).all(|s| b[nerve.face(1, 0, s)] == tb.add(b[nerve.face(1, 1, s)], tab.lambda[a[s]]));
            if ok {
                let mut st = a.to_vec();
                st.extend_from_slice(b);
                states.push(st);
            }
        });
    });
    let gens = tab.a_gens.len();
    let reps = orbit_representatives(&states, v0 * gens, |st, k| {
        let (v, g) = (k / gens, tab.a_gens[k % gens]);
        let mut out = st.to_vec();
        for s in 0..v1 {
            if nerve.face(1, 0, s) == v {
                out[s] = ta.add(out[s], g);
            }
            if nerve.face(1, 1, s) == v {
                out[s] = ta.sub(out[s], g);
            }
        }
        out[v1 + v] = tb.add(out[v1 + v], tab.lambda[g]);
        out
    })?;
    let representatives = reps
        .iter()
        .map(|&i| TorsorCocycle { a: tab.sections(ta, 1, &states[i][..v1]), b: tab.sections(tb, 0, &states[i][v1..]) })
        .collect();
    Ok(TorsorClasses { count: reps.len(), representatives, cocycles: states.len() })
}

#[derive(Debug, Clone)]
pub struct UnitClasses {
    pub count: usize,
    pub representatives: Vec<UnitCocycle1>,
    pub cocycles: usize,
    /// Class group, computed as `H^0` of the total complex of the unit
    /// complex.
    pub group: FgAbGroup,
}

/// All Saavedra unit cocycles modulo re-choice of the local section.
/// Relations `a = d_0^*a_φ − d_1^*a_φ` and `b = λa_φ` determine `a` and `b`,
/// so cocycles are generated from `a_φ ∈ A(V_0)` and then validated.
pub fn unit_cocycles(nerve: &Nerve, x: &Complex2, max_states: u128) -> Result<UnitClasses> {
    let tab = Tables::new(x)?;
    let (v0, v1) = (nerve.size(0), nerve.size(1));
    check_cap(power(tab.a.order(), v0), max_states)?;
    let (ta, tb) = (&tab.a, &tab.b);
    let mut states: Vec<Vec<usize>> = vec![];
    let mut first_error = None;
    for_each_tuple(ta.order(), v0, |ap| {
        let a: Vec<usize> = (0..v1).map(|s| ta.sub(ap[nerve.face(1, 0, s)], ap[nerve.face(1, 1, s)])).collect();
        let b: Vec<usize> = ap.iter().map(|&x| tab.lambda[x]).collect();
        let cocycle = UnitCocycle1 { a: tab.sections(ta, 1, &a), a_phi: tab.sections(ta, 0, ap), b: tab.sections(tb, 0, &b) };
        if let Err(e) = cocycle.validate(nerve, x) {
            first_error.get_or_insert(e);
            return;
        }
        let mut st = a;
        st.extend_from_slice(ap);
        st.extend(b);
        states.push(st);
    });
    if let Some(e) = first_error {
        return Err(e);
    }
    states.sort();
    let gens = tab.a_gens.len();
    let reps = orbit_representatives(&states, v0 * gens, |st, k| {
        let (v, g) = (k / gens, tab.a_gens[k % gens]);
        let mut out = st.to_vec();
        for s in 0..v1 {
            if nerve.face(1, 0, s) == v {
                out[s] = ta.add(out[s], g);
            }
            if nerve.face(1, 1, s) == v {
                out[s] = ta.sub(out[s], g);
            }
        }
        out[v1 + v] = ta.add(out[v1 + v], g);
        out[v1 + v0 + v] = tb.add(out[v1 + v0 + v], tab.lambda[g]);
        out
    })?;
    let representatives = reps
        .iter()
        .map(|&i| {
            let st = &states[i];
            UnitCocycle1 {
                a: tab.sections(ta, 1, &st[..v1]),
                a_phi: tab.sections(ta, 0, &st[v1..v1 + v0]),
                b: tab.sections(tb, 0, &st[v1 + v0..]),
            }
        })
        .collect();
    let group = classify_h0(nerve, unit_complex_1(x)?.complex.complex())?;
    Ok(UnitClasses { count: reps.len(), representatives, cocycles: states.len(), group })
}

/// Degree-0 cohomology of the total complex `Č(N; X)`.
pub fn classify_h0(nerve: &Nerve, x: &Complex) -> Result<FgAbGroup> {
    Ok(TotalComplex::new(nerve, x)?.h0())
}

/// Constant cocycle of a unit: `a = 0`, `a_φ` constant, `b = λ(a_φ)`.
pub fn cocycle_of_unit_1(s: &SaavedraUnit, nerve: &Nerve, x: &Complex2) -> Result<UnitCocycle1> {
    let c = UnitCocycle1 {
        a: SheafSections::zero(x.a(), 1, nerve),
        a_phi: SheafSections::constant(&s.a_phi, 0, nerve),
        b: SheafSections::constant(&s.e, 0, nerve),
    };
    c.validate(nerve, x)?;
    Ok(c)
}

/// Unit read off at cell 0 of level 0, with `α` such that
/// `c = act(cocycle_of_unit(unit), α)`.
pub fn unit_of_cocycle_1(c: &UnitCocycle1, nerve: &Nerve, x: &Complex2) -> Result<(SaavedraUnit, SheafSections)> {
    c.validate(nerve, x)?;
    let unit = SaavedraUnit { e: c.b.at(0).clone(), a_phi: c.a_phi.at(0).clone() };
    let base = cocycle_of_unit_1(&unit, nerve, x)?;
    let alpha = c.a_phi.sub(&base.a_phi)?;
    if &base.act(&alpha, nerve, x)? != c {
        return Err(Error::NotACocycle);
    }
    Ok((unit, alpha))
}

/// Constant cocycle of a Joyal-Kock unit: `t = φ`, `c = e`, rest zero.
pub fn cocycle_of_unit_2(s: &JkUnit, nerve: &Nerve, x: &Complex3) -> Result<JkCocycle> {
    let c = JkCocycle {
        f: SheafSections::zero(x.a(), 2, nerve),
        s: SheafSections::zero(x.b(), 1, nerve),
        c: SheafSections::constant(&s.e, 0, nerve),
        g: SheafSections::zero(x.a(), 1, nerve),
        t: SheafSections::constant(&s.phi, 0, nerve),
    };
    c.validate(nerve, x)?;
    Ok(c)
}

/// Unit read off at cell 0 of level 0, with a degree −1 cochain `β` of the
/// total complex of `unit_complex_2(X)` such that `c − cocycle_of_unit(unit) = Dβ`.
pub fn unit_of_cocycle_2(c: &JkCocycle, nerve: &Nerve, x: &Complex3) -> Result<(JkUnit, TotalCocycle)> {
    c.validate(nerve, x)?;
    let unit = JkUnit { e: c.c.at(0).clone(), phi: c.t.at(0).clone() };
    let base = cocycle_of_unit_2(&unit, nerve, x)?;
    let u = unit_complex_2(x)?;
    let tc = TotalComplex::new(nerve, u.complex.complex())?;
    let xc = tc.to_coords(&c.to_total(&u)?)?;
    let bc = tc.to_coords(&base.to_total(&u)?)?;
    let diff: Vec<i64> = xc.iter().zip(&bc).map(|(p, q)| p - q).collect();
    let beta = tc.solve_coboundary(&diff).ok_or(Error::NotACocycle)?;
    Ok((unit, tc.from_coords(-1, &beta)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cech::classes::DEFAULT_MAX_STATES;
    use crate::cech::nerve::{cech_nerve, Cover};
    use crate::picard::{PicardModel1, PicardModel2};

    fn z(n: i64) -> FgAbGroup {
        FgAbGroup::cyclic(n)
    }

    fn x2(k: i64, a: i64, b: i64) -> Complex2 {
        Complex2::new(GroupHom::scalar(&z(a), &z(b), k).unwrap())
    }

    #[test]
    fn torsors_on_point_are_cokernel() {
        let x = x2(2, 2, 4);
        let r = torsor_classes(&Nerve::point(), &x, DEFAULT_MAX_STATES).unwrap();
        assert_eq!(r.count, 2);
        assert_eq!(r.count as u128, x.homology(0).unwrap().group.order().unwrap());
        assert!(r.representatives.iter().all(|t| t.a.values.iter().all(GroupElem::is_zero)));
    }

    #[test]
    fn torsors_on_circle() {
        let r = torsor_classes(&Nerve::circle3(), &x2(0, 2, 2), DEFAULT_MAX_STATES).unwrap();
        assert_eq!(r.count, 4);
        assert_eq!(r.cocycles, 16);
        let r = torsor_classes(&Nerve::circle3(), &x2(1, 3, 3), DEFAULT_MAX_STATES).unwrap();
        assert_eq!(r.count, 1);
    }

    #[test]
    fn cap_is_enforced() {
        let err = torsor_classes(&Nerve::circle3(), &x2(0, 16, 16), DEFAULT_MAX_STATES).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn unit_classes_are_trivial() {
        for nerve in [Nerve::point(), Nerve::circle3(), cech_nerve(&Cover::disjoint(2)).unwrap()] {
            for x in [x2(2, 2, 4), x2(0, 3, 3), x2(1, 4, 2)] {
                let r = unit_cocycles(&nerve, &x, DEFAULT_MAX_STATES).unwrap();
                assert_eq!(r.count, 1);
                assert!(r.group.is_trivial());
            }
        }
        let t = FgAbGroup::trivial();
        let r = unit_cocycles(&Nerve::circle3(), &Complex2::new(GroupHom::zero(&t, &z(3))), DEFAULT_MAX_STATES).unwrap();
        assert_eq!((r.count, r.cocycles), (1, 1));
    }

    #[test]
    fn classify_examples() {
        let point = Nerve::point();
        let x = Complex2::new(GroupHom::zero(&FgAbGroup::trivial(), &z(2)));
        assert_eq!(classify_h0(&point, &x).unwrap(), z(2));
        let x3 = Complex3::new(GroupHom::zero(&z(2), &z(2)), GroupHom::identity(&z(2))).unwrap();
        assert!(classify_h0(&point, unit_complex_2(&x3).unwrap().complex.complex()).unwrap().is_trivial());
    }

    #[test]
    fn saavedra_round_trip() {
        let x = x2(2, 2, 4);
        let m = PicardModel1::new(x.clone());
        let nerve = Nerve::point();
        let s = m.unit(z(4).element(&[2]).unwrap(), z(2).element(&[1]).unwrap()).unwrap();
        let c = cocycle_of_unit_1(&s, &nerve, &x).unwrap();
        assert_eq!((c.a.at(0).coords(), c.a_phi.at(0).coords(), c.b.at(0).coords()), (&[0][..], &[1][..], &[2][..]));
        let (back, alpha) = unit_of_cocycle_1(&c, &nerve, &x).unwrap();
        assert!(m.unique_morphism(&back, &s).unwrap().u.is_zero());
        assert!(alpha.values.iter().all(GroupElem::is_zero));
        let zero = cocycle_of_unit_1(&m.canonical_unit(), &nerve, &x).unwrap();
        assert!(zero.a_phi.values.iter().chain(&zero.b.values).all(GroupElem::is_zero));
    }

    #[test]
    fn broken_idempotent_relation_is_named() {
        let x = x2(2, 2, 4);
        let nerve = Nerve::point();
        let mut c = cocycle_of_unit_1(&PicardModel1::new(x.clone()).canonical_unit(), &nerve, &x).unwrap();
        c.b.values[0] = z(4).element(&[2]).unwrap();
        c.a_phi.values[0] = z(2).element(&[0]).unwrap();
        // the torsor relation is vacuous on the point nerve
        let err = c.validate(&nerve, &x).unwrap_err();
        assert_eq!(err, Error::UnitCocycle { relation: UnitRelation::Idempotent, simplex: 0 });
        assert!(err.to_string().contains("λ(a_φ)=b"));
    }

    #[test]
    fn non_constant_unit_cocycle_trivializes() {
        let x = x2(1, 4, 2);
        let nerve = Nerve::circle3();
        let r = unit_cocycles(&nerve, &x, DEFAULT_MAX_STATES).unwrap();
        assert_eq!(r.cocycles, 64);
        let a_phi = SheafSections { group: z(4), level: 0, values: [1, 2, 3].map(|k| z(4).element(&[k]).unwrap()).to_vec() };
        let base = cocycle_of_unit_1(&PicardModel1::new(x.clone()).canonical_unit(), &nerve, &x).unwrap();
        let c = base.act(&a_phi, &nerve, &x).unwrap();
        c.validate(&nerve, &x).unwrap();
        let (unit, alpha) = unit_of_cocycle_1(&c, &nerve, &x).unwrap();
        assert_eq!(unit.a_phi.coords(), &[1]);
        assert_eq!(alpha.at(2).coords(), &[2]);
        let u = unit_complex_1(&x).unwrap();
        let tc = TotalComplex::new(&nerve, u.complex.complex()).unwrap();
        let total = c.to_total(&u).unwrap();
        assert!(tc.is_cocycle(&tc.to_coords(&total).unwrap()));
        assert_eq!(UnitCocycle1::from_total(&total, &u).unwrap(), c);
    }

    #[test]
    fn jk_round_trip() {
        let x = Complex3::new(GroupHom::scalar(&z(2), &z(4), 2).unwrap(), GroupHom::scalar(&z(4), &z(2), 1).unwrap()).unwrap();
        let m = PicardModel2::new(x.clone());
        let u = unit_complex_2(&x).unwrap();
        for nerve in [Nerve::point(), Nerve::circle3()] {
            let tc = TotalComplex::new(&nerve, u.complex.complex()).unwrap();
            for s in m.enumerate_units().unwrap() {
                let c = cocycle_of_unit_2(&s, &nerve, &x).unwrap();
                let total = c.to_total(&u).unwrap();
                assert!(tc.is_cocycle(&tc.to_coords(&total).unwrap()));
                assert_eq!(JkCocycle::from_total(&total, &u).unwrap(), c);
                let (back, beta) = unit_of_cocycle_2(&c, &nerve, &x).unwrap();
                assert_eq!(back, s);
                assert!(tc.apply_d(-1, &tc.to_coords(&beta).unwrap()).iter().all(|&v| v == 0));
            }
        }
    }

    #[test]
    fn jk_validation_names_relation() {
        let x = Complex3::new(GroupHom::zero(&z(2), &z(2)), GroupHom::identity(&z(2))).unwrap();
        let nerve = Nerve::point();
        let mut c = cocycle_of_unit_2(&PicardModel2::new(x.clone()).canonical_unit(), &nerve, &x).unwrap();
        c.c.values[0] = z(2).element(&[1]).unwrap();
        let err = c.validate(&nerve, &x).unwrap_err();
        assert_eq!(err, Error::JkCocycle { relation: JkRelation::Idempotent, simplex: 0 });
        assert!(err.to_string().contains("λ(t)=c"));
    }

    #[test]
    fn total_cocycles_of_unit_complex_2_are_jk_cocycles() {
        // every degree-0 cocycle of the total complex satisfies the JK relations
        let x = Complex3::new(GroupHom::zero(&z(2), &z(2)), GroupHom::identity(&z(2))).unwrap();
        let u = unit_complex_2(&x).unwrap();
        let nerve = Nerve::point();
        let tc = TotalComplex::new(&nerve, u.complex.complex()).unwrap();
        let moduli: Vec<i64> = tc.blocks(0).iter().flat_map(|b| b.group.moduli()).collect();
        let mut count = 0;
        for_each_tuple(2, moduli.len(), |d| {
            let v: Vec<i64> = d.iter().map(|&k| k as i64).collect();
            if v.iter().zip(&moduli).any(|(x, m)| x >= m) || !tc.is_cocycle(&v) {
                return;
            }
            count += 1;
            let jk = JkCocycle::from_total(&tc.from_coords(0, &v), &u).unwrap();
            jk.validate(&nerve, &x).unwrap();
        });
        assert!(count > 1);
    }
}
