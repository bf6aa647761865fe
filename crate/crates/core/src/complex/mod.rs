//! Bounded cochain complexes of finitely generated abelian groups ending in
//! degree 0, with the 2- and 3-term special cases used throughout.
//!
//! A complex of length `n` has terms in degrees `-(n-1), …, 0`; the
//! differential out of degree `k` goes to degree `k+1`.

mod morphism;
mod units;

use std::ops::Deref;

pub use morphism::{is_quasi_isomorphism, QuasiIsoReport, StrictMorphism};
pub use units::{
    alternate_identity_1, alternate_kernel_1, alternate_kernel_2, alternate_sum_2, cone, cone_truncation_comparison,
    forgetful_morphism_1, forgetful_morphism_2, truncate_shift, unit_complex_1, unit_complex_2, Alternate, Cone,
    Truncation, UnitComplex1, UnitComplex2,
};

use crate::abelian::presentation::homology_of;
use crate::abelian::{FgAbGroup, GroupElem, GroupHom, Matrix};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex {
    terms: Vec<FgAbGroup>,
    diffs: Vec<GroupHom>,
}

impl Complex {
    /// `diffs[i]` maps `terms[i]` to `terms[i+1]`; consecutive composites
    /// must vanish.
    pub fn new(terms: Vec<FgAbGroup>, diffs: Vec<GroupHom>) -> Result<Self> {
        if terms.is_empty() || diffs.len() + 1 != terms.len() {
            return Err(Error::InvalidComplex(format!("{} terms and {} differentials", terms.len(), diffs.len())));
        }
        for (i, d) in diffs.iter().enumerate() {
            if d.source() != &terms[i] || d.target() != &terms[i + 1] {
                return Err(Error::InvalidComplex(format!("differential {i} has the wrong source or target")));
            }
        }
        for (i, w) in diffs.windows(2).enumerate() {
            let comp = w[1].compose(&w[0])?;
            if let Some(j) = (0..comp.source().rank()).find(|&j| comp.matrix().column(j).iter().any(|&x| x != 0)) {
                return Err(Error::InvalidComplex(format!(
                    "composite of differentials {i} and {} nonzero at generator {j}",
                    i + 1
                )));
            }
        }
        Ok(Complex { terms, diffs })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min_degree(&self) -> i32 {
        -(self.terms.len() as i32 - 1)
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> {
        self.min_degree()..=0
    }

    fn index(&self, degree: i32) -> Result<usize> {
        if degree > 0 || degree < self.min_degree() {
            return Err(Error::DegreeOutOfRange { degree, length: self.len() });
        }
        Ok((degree - self.min_degree()) as usize)
    }

    pub fn term(&self, degree: i32) -> Result<&FgAbGroup> {
        Ok(&self.terms[self.index(degree)?])
    }

    /// Differential leaving `degree`; `None` at degree 0.
    pub fn differential(&self, degree: i32) -> Result<Option<&GroupHom>> {
        let i = self.index(degree)?;
        Ok(self.diffs.get(i))
    }

    pub fn terms(&self) -> &[FgAbGroup] {
        &self.terms
    }

    pub fn differentials(&self) -> &[GroupHom] {
        &self.diffs
    }

    pub fn homology(&self, degree: i32) -> Result<Homology> {
        let i = self.index(degree)?;
        let mid = self.terms[i].moduli();
        let incoming = i.checked_sub(1).map(|j| self.diffs[j].matrix());
        let tgt_moduli = self.diffs.get(i).map(|d| d.target().moduli());
        let outgoing = self.diffs.get(i).zip(tgt_moduli.as_deref()).map(|(d, t)| (t, d.matrix()));
        let h = homology_of(&mid, incoming, outgoing);
        let inclusion = GroupHom::from_parts(h.cycles.clone(), self.terms[i].clone(), h.inclusion);
        let projection = GroupHom::from_parts(h.cycles.clone(), h.group.clone(), h.projection);
        Ok(Homology { degree, group: h.group, cycles: h.cycles, inclusion, projection, section: h.section })
    }

    pub fn is_acyclic(&self) -> Result<bool> {
        for d in self.degrees() {
            if !self.homology(d)?.group.is_trivial() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn zero(len: usize) -> Self {
        let terms = vec![FgAbGroup::trivial(); len.max(1)];
        let diffs = (1..terms.len()).map(|_| GroupHom::zero(&FgAbGroup::trivial(), &FgAbGroup::trivial())).collect();
        Complex { terms, diffs }
    }
}

/// `H^k = ker(d^k) / im(d^{k-1})` with the maps needed to move classes
/// around.
#[derive(Debug, Clone)]
pub struct Homology {
    pub degree: i32,
    pub group: FgAbGroup,
    pub cycles: FgAbGroup,
    /// Cycles into the term.
    pub inclusion: GroupHom,
    /// Cycles onto homology.
    pub projection: GroupHom,
    /// `rank(cycles) × rank(group)`: a lift of each homology generator.
    /// Not a homomorphism in general.
    pub section: Matrix,
}

impl Homology {
    /// Cycle representing `class`: the lexicographically smallest reduced
    /// coordinate vector in the term when the cycles are finite, the
    /// section's lift otherwise.
    pub fn representative(&self, class: &GroupElem) -> Result<GroupElem> {
        if class.group() != &self.group {
            return Err(Error::GroupMismatch("class of another homology group".into()));
        }
        if self.cycles.is_finite() {
            let mut best: Option<GroupElem> = None;
            for z in self.cycles.elements()? {
                if &self.projection.apply(&z)? == class {
                    let x = self.inclusion.apply(&z)?;
                    if best.as_ref().is_none_or(|b| x.coords() < b.coords()) {
                        best = Some(x);
                    }
                }
            }
            return Ok(best.expect("projection onto homology is surjective"));
        }
        let z = self.cycles.elem_unchecked(self.section.mul_vec(class.coords()));
        self.inclusion.apply(&z)
    }
}

/// `A --λ--> B` with `A` in degree −1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex2(Complex);

impl Complex2 {
    pub fn new(lambda: GroupHom) -> Self {
        let terms = vec![lambda.source().clone(), lambda.target().clone()];
        Complex2(Complex { terms, diffs: vec![lambda] })
    }

    pub fn a(&self) -> &FgAbGroup {
        &self.0.terms[0]
    }

    pub fn b(&self) -> &FgAbGroup {
        &self.0.terms[1]
    }

    pub fn lambda(&self) -> &GroupHom {
        &self.0.diffs[0]
    }

    pub fn complex(&self) -> &Complex {
        &self.0
    }
}

impl TryFrom<Complex> for Complex2 {
    type Error = Error;
    fn try_from(c: Complex) -> Result<Self> {
        if c.len() != 2 {
            return Err(Error::InvalidComplex(format!("expected 2 terms, got {}", c.len())));
        }
        Ok(Complex2(c))
    }
}

impl Deref for Complex2 {
    type Target = Complex;
    fn deref(&self) -> &Complex {
        &self.0
    }
}

/// `A --δ--> B --λ--> C` with `A` in degree −2 and `λδ = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex3(Complex);

impl Complex3 {
    pub fn new(delta: GroupHom, lambda: GroupHom) -> Result<Self> {
        let terms = vec![delta.source().clone(), delta.target().clone(), lambda.target().clone()];
        Ok(Complex3(Complex::new(terms, vec![delta, lambda])?))
    }

    pub fn a(&self) -> &FgAbGroup {
        &self.0.terms[0]
    }

    pub fn b(&self) -> &FgAbGroup {
        &self.0.terms[1]
    }

    pub fn c(&self) -> &FgAbGroup {
        &self.0.terms[2]
    }

    pub fn delta(&self) -> &GroupHom {
        &self.0.diffs[0]
    }

    pub fn lambda(&self) -> &GroupHom {
        &self.0.diffs[1]
    }

    pub fn complex(&self) -> &Complex {
        &self.0
    }
}

impl TryFrom<Complex> for Complex3 {
    type Error = Error;
    fn try_from(c: Complex) -> Result<Self> {
        if c.len() != 3 {
            return Err(Error::InvalidComplex(format!("expected 3 terms, got {}", c.len())));
        }
        Ok(Complex3(c))
    }
}

impl Deref for Complex3 {
    type Target = Complex;
    fn deref(&self) -> &Complex {
        &self.0
    }
}
