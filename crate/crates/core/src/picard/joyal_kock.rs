//! The Picard 2-groupoid of `A --δ--> B --λ--> C` over a point.
//!
//! Objects are elements of `C`; a 1-morphism `c → c'` is `b ∈ B` with
//! `λb = c − c'`; a 2-morphism `b ⇒ b'` is `α ∈ A` with `δα = b − b'`.
//! A Joyal-Kock unit is `(e, φ)` with `λφ = e`. A unit 1-morphism
//! `(f, θ)` carries a 2-cell `θ: (f ⊗ f) ; φ_t ⇒ φ_s ; f`, so that
//! `δθ = f + φ_t − φ_s`.

use crate::abelian::{FiniteAbelian, GroupElem};
use crate::complex::Complex3;
use crate::error::{Error, Result};
use crate::report::Verification;

#[derive(Debug, Clone)]
pub struct PicardModel2 {
    base: Complex3,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JkUnit {
    pub e: GroupElem,
    pub phi: GroupElem,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnitMorphism2 {
    pub source: JkUnit,
    pub target: JkUnit,
    pub f: GroupElem,
    pub theta: GroupElem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unit2Morphism {
    pub source: UnitMorphism2,
    pub target: UnitMorphism2,
    pub gamma: GroupElem,
}

#[derive(Debug, Clone)]
pub struct Contractibility2 {
    pub units: usize,
    pub one_morphisms: usize,
    pub parallel_pairs: usize,
    pub verification: Verification,
}

impl PicardModel2 {
    pub fn new(base: Complex3) -> Self {
        PicardModel2 { base }
    }

    pub fn base(&self) -> &Complex3 {
        &self.base
    }

    pub fn is_unit(&self, e: &GroupElem, phi: &GroupElem) -> Result<bool> {
        Ok(&self.base.lambda().apply(phi)? == e)
    }

    pub fn unit(&self, e: GroupElem, phi: GroupElem) -> Result<JkUnit> {
        if !self.is_unit(&e, &phi)? {
            return Err(Error::InvalidUnit(format!("λ(φ) = e fails for e = {e}, φ = {phi}")));
        }
        Ok(JkUnit { e, phi })
    }

    pub fn canonical_unit(&self) -> JkUnit {
        JkUnit { e: self.base.c().zero(), phi: self.base.b().zero() }
    }

    /// All units ordered lexicographically by `(e, φ)`.
    pub fn enumerate_units(&self) -> Result<Vec<JkUnit>> {
        let mut units = self
            .base
            .b()
            .elements()?
            .into_iter()
            .map(|b| Ok(JkUnit { e: self.base.lambda().apply(&b)?, phi: b }))
            .collect::<Result<Vec<_>>>()?;
        units.sort_by(|x, y| (x.e.coords(), x.phi.coords()).cmp(&(y.e.coords(), y.phi.coords())));
        Ok(units)
    }

    /// Both pasted 2-cells `2f + φ_t ⇒ φ_s + f` as elements of `A`-labelled
    /// cells: returns `(source 1-cell, target 1-cell)` so that `θ` is a
    /// 2-cell between them iff `δθ = source − target`.
    fn unit_square(&self, s: &JkUnit, t: &JkUnit, f: &GroupElem) -> Result<(GroupElem, GroupElem)> {
        let path1 = f.add(f)?.add(&t.phi)?;
        let path2 = s.phi.add(f)?;
        Ok((path1, path2))
    }

    pub fn is_unit_1morphism(&self, s: &JkUnit, t: &JkUnit, f: &GroupElem, theta: &GroupElem) -> Result<bool> {
        if self.base.lambda().apply(f)? != s.e.sub(&t.e)? {
            return Ok(false);
        }
        let (p1, p2) = self.unit_square(s, t, f)?;
        Ok(self.base.delta().apply(theta)? == p1.sub(&p2)?)
    }

    /// All `(f, θ)` from `s` to `t`, lexicographic in `(f, θ)`.
    pub fn unit_1morphisms(&self, s: &JkUnit, t: &JkUnit) -> Result<Vec<UnitMorphism2>> {
        let thetas = self.base.a().elements()?;
        let mut out = vec![];
        for f in self.base.b().elements()? {
            for theta in &thetas {
                if self.is_unit_1morphism(s, t, &f, theta)? {
                    out.push(UnitMorphism2 { source: s.clone(), target: t.clone(), f: f.clone(), theta: theta.clone() });
                }
            }
        }
        Ok(out)
    }

    /// The two pastings of the 2-morphism diagram for `γ: f ⇒ g`, as
    /// composite 2-cells `2f + φ_t ⇒ φ_s + g`:
    /// `(γ ⊗ γ) ; φ_t` then `θ_g`, and `θ_f` then `φ_s ; γ`.
    pub fn pastings(&self, m1: &UnitMorphism2, m2: &UnitMorphism2, gamma: &GroupElem) -> Result<(GroupElem, GroupElem)> {
        let lhs = gamma.add(gamma)?.add(&m2.theta)?;
        let rhs = m1.theta.add(gamma)?;
        Ok((lhs, rhs))
    }

    /// Every `γ` with `δγ = f − g` whose two pastings agree.
    pub fn unit_2morphisms(&self, m1: &UnitMorphism2, m2: &UnitMorphism2) -> Result<Vec<Unit2Morphism>> {
        if m1.source != m2.source || m1.target != m2.target {
            return Err(Error::InvalidUnit("unit 2-morphisms need parallel unit 1-morphisms".into()));
        }
        let diff = m1.f.sub(&m2.f)?;
        let mut out = vec![];
        for gamma in self.base.a().elements()? {
            if self.base.delta().apply(&gamma)? != diff {
                continue;
            }
            let (l, r) = self.pastings(m1, m2, &gamma)?;
            if l == r {
                out.push(Unit2Morphism { source: m1.clone(), target: m2.clone(), gamma });
            }
        }
        Ok(out)
    }

    /// `(φ_s − φ_t, 0)`, which always exists.
    pub fn witness_1morphism(&self, s: &JkUnit, t: &JkUnit) -> Result<UnitMorphism2> {
        let f = s.phi.sub(&t.phi)?;
        let theta = self.base.a().zero();
        if !self.is_unit_1morphism(s, t, &f, &theta)? {
            return Err(Error::InvalidUnit("(φ_s − φ_t, 0) is not a unit 1-morphism".into()));
        }
        Ok(UnitMorphism2 { source: s.clone(), target: t.clone(), f, theta })
    }

    pub fn tensor_units(&self, s: &JkUnit, t: &JkUnit) -> Result<JkUnit> {
        self.unit(s.e.add(&t.e)?, s.phi.add(&t.phi)?)
    }

    /// Units nonempty, a unit 1-morphism between every ordered pair, exactly
    /// one unit 2-morphism between parallel unit 1-morphisms, and
    /// `γ(m1,m2) + γ(m2,m3) = γ(m1,m3)`.
    pub fn verify_contractible(&self) -> Result<Contractibility2> {
        let ta = FiniteAbelian::new(self.base.a())?;
        let tb = FiniteAbelian::new(self.base.b())?;
        let tc = FiniteAbelian::new(self.base.c())?;
        let delta = FiniteAbelian::map_table(self.base.delta(), &ta, &tb);
        let lambda = FiniteAbelian::map_table(self.base.lambda(), &tb, &tc);
        let mut delta_pre = vec![Vec::new(); tb.order()];
        for (a, &b) in delta.iter().enumerate() {
            delta_pre[b].push(a);
        }
        let units = self.enumerate_units()?;
        let idx: Vec<(usize, usize)> = units.iter().map(|u| (tc.index_of(&u.e), tb.index_of(&u.phi))).collect();

        let mut v = Verification::new();
        v.record("units_nonempty", !units.is_empty(), format!("{} units", units.len()));
        v.record(
            "unit_count_equals_order_of_B",
            units.len() == tb.order(),
            format!("{} units, |B| = {}", units.len(), tb.order()),
        );
        v.record("canonical_unit_present", units.contains(&self.canonical_unit()), "(0, 0)");

        let mut one_total = 0usize;
        let mut pairs_total = 0usize;
        let mut missing = None;
        let mut witness_missing = None;
        let mut not_unique = None;
        let mut incoherent = None;
        for (i, &(es, ps)) in idx.iter().enumerate() {
            for (j, &(et, pt)) in idx.iter().enumerate() {
                let want = tc.sub(es, et);
                let mut ones: Vec<(usize, usize)> = vec![];
                for f in (0..tb.order()).filter(|&f| lambda[f] == want) {
                    // δθ = f + φ_t − φ_s
                    let rhs = tb.sub(tb.add(f, pt), ps);
                    ones.extend(delta_pre[rhs].iter().map(|&th| (f, th)));
                }
                one_total += ones.len();
                if ones.is_empty() && missing.is_none() {
                    missing = Some(format!("no unit 1-morphism from unit {i} to unit {j}"));
                }
                if !ones.contains(&(tb.sub(ps, pt), 0)) && witness_missing.is_none() {
                    witness_missing = Some(format!("(φ_s − φ_t, 0) missing for units {i}, {j}"));
                }
                let n = ones.len();
                pairs_total += n * n;
                let mut gamma = vec![0usize; n * n];
                for (p, &(f, tf)) in ones.iter().enumerate() {
                    for (q, &(g, tg)) in ones.iter().enumerate() {
                        // δγ = f − g, 2γ + θ_g = θ_f + γ
                        let sols: Vec<usize> = delta_pre[tb.sub(f, g)]
                            .iter()
                            .copied()
                            .filter(|&c| ta.add(ta.add(c, c), tg) == ta.add(tf, c))
                            .collect();
                        if sols.len() == 1 {
                            gamma[p * n + q] = sols[0];
                        } else if not_unique.is_none() {
                            not_unique = Some(format!(
                                "{} unit 2-morphisms between (f, θ) = {:?} and {:?} over units {i}, {j}",
                                sols.len(),
                                (tb.coords(f), ta.coords(tf)),
                                (tb.coords(g), ta.coords(tg))
                            ));
                        }
                    }
                }
                if not_unique.is_none() && incoherent.is_none() {
                    'tri: for p in 0..n {
                        for q in 0..n {
                            for r in 0..n {
                                if ta.add(gamma[p * n + q], gamma[q * n + r]) != gamma[p * n + r] {
                                    incoherent = Some(format!("1-morphisms {p}, {q}, {r} over units {i}, {j}"));
                                    break 'tri;
                                }
                            }
                        }
                    }
                }
            }
        }
        let n_units = units.len();
        v.record(
            "unit_1morphisms_exist",
            missing.is_none(),
            missing.unwrap_or_else(|| format!("{} ordered pairs, {one_total} unit 1-morphisms", n_units * n_units)),
        );
        v.record(
            "witness_1morphism",
            witness_missing.is_none(),
            witness_missing.unwrap_or_else(|| "(φ_s − φ_t, 0) present for every pair".into()),
        );
        v.record(
            "unique_unit_2morphism",
            not_unique.is_none(),
            not_unique.clone().unwrap_or_else(|| format!("{pairs_total} parallel pairs, one 2-morphism each")),
        );
        let coherence_note = if not_unique.is_some() { Some("skipped: 2-morphisms not unique".to_string()) } else { incoherent };
        v.record(
            "two_morphism_coherence",
            coherence_note.is_none(),
            coherence_note.unwrap_or_else(|| "γ(m1,m2) + γ(m2,m3) = γ(m1,m3)".into()),
        );
        Ok(Contractibility2 { units: n_units, one_morphisms: one_total, parallel_pairs: pairs_total, verification: v })
    }
}
