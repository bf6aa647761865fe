//! The Picard groupoid of a 2-term complex `λ: A → B` over a point.
//!
//! Objects are elements of `B`, a morphism `b → b'` is an `a ∈ A` with
//! `λa = b − b'`, and both composition and tensor are addition. A Saavedra
//! unit is an object `e` with an isomorphism `e ⊗ e → e`, i.e. `a_φ` with
//! `λ(a_φ) = e`.

use crate::abelian::{FiniteAbelian, GroupElem};
use crate::complex::Complex2;
use crate::error::{Error, Result};
use crate::report::Verification;

#[derive(Debug, Clone)]
pub struct PicardModel1 {
    base: Complex2,
}

/// A morphism `source → target` labelled by `label ∈ A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub source: GroupElem,
    pub target: GroupElem,
    pub label: GroupElem,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SaavedraUnit {
    pub e: GroupElem,
    pub a_phi: GroupElem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitMorphism1 {
    pub source: SaavedraUnit,
    pub target: SaavedraUnit,
    pub u: GroupElem,
}

#[derive(Debug, Clone)]
pub struct Contractibility1 {
    pub units: Vec<SaavedraUnit>,
    /// Number of ordered unit pairs checked.
    pub morphisms: usize,
    pub verification: Verification,
}

impl PicardModel1 {
    pub fn new(base: Complex2) -> Self {
        PicardModel1 { base }
    }

    pub fn base(&self) -> &Complex2 {
        &self.base
    }

    pub fn arrow(&self, source: &GroupElem, target: &GroupElem, label: &GroupElem) -> Result<Arrow> {
        if self.base.lambda().apply(label)? != source.sub(target)? {
            return Err(Error::InvalidUnit(format!("λ({label}) = {source} − {target} fails")));
        }
        Ok(Arrow { source: source.clone(), target: target.clone(), label: label.clone() })
    }

    pub fn identity(&self, x: &GroupElem) -> Arrow {
        Arrow { source: x.clone(), target: x.clone(), label: self.base.a().zero() }
    }

    /// `g ∘ f`
    pub fn compose(&self, f: &Arrow, g: &Arrow) -> Result<Arrow> {
        if f.target != g.source {
            return Err(Error::InvalidUnit("composing arrows with mismatched endpoints".into()));
        }
        Ok(Arrow { source: f.source.clone(), target: g.target.clone(), label: f.label.add(&g.label)? })
    }

    pub fn tensor(&self, f: &Arrow, g: &Arrow) -> Result<Arrow> {
        Ok(Arrow {
            source: f.source.add(&g.source)?,
            target: f.target.add(&g.target)?,
            label: f.label.add(&g.label)?,
        })
    }

    /// `(x ⊗ y) ⊗ z → x ⊗ (y ⊗ z)`; strict, so labelled by 0.
    pub fn associator(&self, x: &GroupElem, y: &GroupElem, z: &GroupElem) -> Result<Arrow> {
        let s = x.add(y)?.add(z)?;
        self.arrow(&s, &x.add(&y.add(z)?)?, &self.base.a().zero())
    }

    pub fn braiding(&self, x: &GroupElem, y: &GroupElem) -> Result<Arrow> {
        self.arrow(&x.add(y)?, &y.add(x)?, &self.base.a().zero())
    }

    /// `Hom(x, y) = {a : λa = x − y}` in lexicographic order.
    pub fn hom(&self, x: &GroupElem, y: &GroupElem) -> Result<Vec<GroupElem>> {
        let diff = x.sub(y)?;
        let mut out = vec![];
        for a in self.base.a().elements()? {
            if self.base.lambda().apply(&a)? == diff {
                out.push(a);
            }
        }
        Ok(out)
    }

    pub fn is_unit(&self, e: &GroupElem, a_phi: &GroupElem) -> Result<bool> {
        Ok(&self.base.lambda().apply(a_phi)? == e)
    }

    pub fn unit(&self, e: GroupElem, a_phi: GroupElem) -> Result<SaavedraUnit> {
        if !self.is_unit(&e, &a_phi)? {
            return Err(Error::InvalidUnit(format!("λ(a_φ) = e fails for e = {e}, a_φ = {a_phi}")));
        }
        Ok(SaavedraUnit { e, a_phi })
    }

    /// The structure isomorphism `φ: e ⊗ e → e`.
    pub fn phi(&self, s: &SaavedraUnit) -> Result<Arrow> {
        self.arrow(&s.e.add(&s.e)?, &s.e, &s.a_phi)
    }

    pub fn canonical_unit(&self) -> SaavedraUnit {
        SaavedraUnit { e: self.base.b().zero(), a_phi: self.base.a().zero() }
    }

    /// All units, ordered lexicographically by `(e, a_φ)`.
    pub fn enumerate_units(&self) -> Result<Vec<SaavedraUnit>> {
        let mut units = self
            .base
            .a()
            .elements()?
            .into_iter()
            .map(|a| Ok(SaavedraUnit { e: self.base.lambda().apply(&a)?, a_phi: a }))
            .collect::<Result<Vec<_>>>()?;
        units.sort_by(|x, y| (x.e.coords(), x.a_phi.coords()).cmp(&(y.e.coords(), y.a_phi.coords())));
        Ok(units)
    }

    /// The two composites `e_s ⊗ e_s → e_t` of the unit-morphism square:
    /// `(u ⊗ u) ; φ_t` and `φ_s ; u`.
    pub fn square_paths(&self, s: &SaavedraUnit, t: &SaavedraUnit, u: &GroupElem) -> Result<(Arrow, Arrow)> {
        let f = self.arrow(&s.e, &t.e, u)?;
        let path1 = self.compose(&self.tensor(&f, &f)?, &self.phi(t)?)?;
        let path2 = self.compose(&self.phi(s)?, &f)?;
        Ok((path1, path2))
    }

    /// Every `u ∈ Hom(e_s, e_t)` whose square commutes.
    pub fn unit_morphisms(&self, s: &SaavedraUnit, t: &SaavedraUnit) -> Result<Vec<UnitMorphism1>> {
        let mut out = vec![];
        for u in self.hom(&s.e, &t.e)? {
            let (p1, p2) = self.square_paths(s, t, &u)?;
            if p1 == p2 {
                out.push(UnitMorphism1 { source: s.clone(), target: t.clone(), u });
            }
        }
        Ok(out)
    }

    /// `u = a_φ(s) − a_φ(t)`, checked against the square.
    pub fn unique_morphism(&self, s: &SaavedraUnit, t: &SaavedraUnit) -> Result<UnitMorphism1> {
        let u = s.a_phi.sub(&t.a_phi)?;
        let (p1, p2) = self.square_paths(s, t, &u)?;
        if p1 != p2 {
            return Err(Error::InvalidUnit("unit square fails for u = a_φ(s) − a_φ(t)".into()));
        }
        Ok(UnitMorphism1 { source: s.clone(), target: t.clone(), u })
    }

    pub fn tensor_units(&self, s: &SaavedraUnit, t: &SaavedraUnit) -> Result<SaavedraUnit> {
        self.unit(s.e.add(&t.e)?, s.a_phi.add(&t.a_phi)?)
    }

    /// Tensor of units through the full composite
    /// `(e⊗e')⊗(e⊗e') → e⊗(e'⊗(e⊗e')) → e⊗((e'⊗e)⊗e') → e⊗((e⊗e')⊗e')
    ///  → e⊗(e⊗(e'⊗e')) → (e⊗e)⊗(e'⊗e') → e⊗e'`.
    pub fn tensor_units_reference(&self, s: &SaavedraUnit, t: &SaavedraUnit) -> Result<SaavedraUnit> {
        let (x, y) = (&s.e, &t.e);
        let xy = x.add(y)?;
        let steps = [
            self.associator(x, y, &xy)?,
            self.tensor(&self.identity(x), &self.inverse(&self.associator(y, x, y)?))?,
            self.tensor(&self.identity(x), &self.tensor(&self.braiding(y, x)?, &self.identity(y))?)?,
            self.tensor(&self.identity(x), &self.associator(x, y, y)?)?,
            self.inverse(&self.associator(x, x, &y.add(y)?)?),
            self.tensor(&self.phi(s)?, &self.phi(t)?)?,
        ];
        let mut total = self.identity(&xy.add(&xy)?);
        for step in &steps {
            total = self.compose(&total, step)?;
        }
        self.unit(total.target, total.label)
    }

    pub fn inverse(&self, f: &Arrow) -> Arrow {
        Arrow { source: f.target.clone(), target: f.source.clone(), label: f.label.neg() }
    }

    /// Nonempty unit set, exactly one morphism between any ordered pair of
    /// units, and coherence `u(s,t) + u(t,r) = u(s,r)`.
    pub fn verify_contractible(&self) -> Result<Contractibility1> {
        let units = self.enumerate_units()?;
        let ta = FiniteAbelian::new(self.base.a())?;
        let tb = FiniteAbelian::new(self.base.b())?;
        let lambda = FiniteAbelian::map_table(self.base.lambda(), &ta, &tb);
        let mut v = Verification::new();
        v.record("units_nonempty", !units.is_empty(), format!("{} units", units.len()));
        v.record(
            "unit_count_equals_order_of_A",
            units.len() == ta.order(),
            format!("{} units, |A| = {}", units.len(), ta.order()),
        );
        let canonical = self.canonical_unit();
        v.record("canonical_unit_present", units.contains(&canonical), "(0, 0)");

        let idx: Vec<(usize, usize)> = units.iter().map(|u| (tb.index_of(&u.e), ta.index_of(&u.a_phi))).collect();
        let n = idx.len();
        // hom solutions per pair, found by scanning A
        let mut unique = vec![usize::MAX; n * n];
        let mut bad: Option<String> = None;
        for (i, &(es, as_)) in idx.iter().enumerate() {
            for (j, &(et, at)) in idx.iter().enumerate() {
                let want = tb.sub(es, et);
                let mut sols = vec![];
                for u in 0..ta.order() {
                    // λu = e_s − e_t and 2u + a_t = a_s + u
                    if lambda[u] == want && ta.add(ta.add(u, u), at) == ta.add(as_, u) {
                        sols.push(u);
                    }
                }
                if sols.len() == 1 {
                    unique[i * n + j] = sols[0];
                } else if bad.is_none() {
                    bad = Some(format!(
                        "{} morphisms from {:?} to {:?}",
                        sols.len(),
                        (units[i].e.coords(), units[i].a_phi.coords()),
                        (units[j].e.coords(), units[j].a_phi.coords())
                    ));
                }
            }
        }
        v.record(
            "unique_unit_morphism",
            bad.is_none(),
            bad.unwrap_or_else(|| format!("{} ordered pairs, one morphism each", n * n)),
        );
        let mut incoherent = None;
        if unique.iter().all(|&u| u != usize::MAX) {
            'outer: for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if ta.add(unique[i * n + j], unique[j * n + k]) != unique[i * n + k] {
                            incoherent = Some(format!("units {i}, {j}, {k}"));
                            break 'outer;
                        }
                    }
                }
            }
        } else {
            incoherent = Some("skipped: morphisms not unique".into());
        }
        v.record(
            "composition_coherence",
            incoherent.is_none(),
            incoherent.unwrap_or_else(|| format!("{} composable triples", n * n * n)),
        );
        Ok(Contractibility1 { units, morphisms: n * n, verification: v })
    }
}
