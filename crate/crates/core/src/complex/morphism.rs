use super::Complex;
use crate::abelian::{GroupHom, Matrix};
use crate::error::{Error, Result};

/// Degreewise maps `maps[i]: source.terms[i] → target.terms[i]` commuting
/// with the differentials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictMorphism {
    source: Complex,
    target: Complex,
    maps: Vec<GroupHom>,
}

impl StrictMorphism {
    pub fn new(source: Complex, target: Complex, maps: Vec<GroupHom>) -> Result<Self> {
        if source.len() != target.len() || maps.len() != source.len() {
            return Err(Error::InvalidMorphism(format!(
                "lengths {} → {} with {} components",
                source.len(),
                target.len(),
                maps.len()
            )));
        }
        for (i, f) in maps.iter().enumerate() {
            if f.source() != &source.terms[i] || f.target() != &target.terms[i] {
                return Err(Error::InvalidMorphism(format!(
                    "component in degree {} has the wrong source or target",
                    source.min_degree() + i as i32
                )));
            }
        }
        for i in 0..source.diffs.len() {
            let lhs = maps[i + 1].compose(&source.diffs[i])?;
            let rhs = target.diffs[i].compose(&maps[i])?;
            if lhs != rhs {
                return Err(Error::InvalidMorphism(format!(
                    "square leaving degree {} does not commute",
                    source.min_degree() + i as i32
                )));
            }
        }
        Ok(StrictMorphism { source, target, maps })
    }

    pub fn identity(x: &Complex) -> Self {
        let maps = x.terms.iter().map(GroupHom::identity).collect();
        StrictMorphism { source: x.clone(), target: x.clone(), maps }
    }

    pub fn zero(source: &Complex, target: &Complex) -> Result<Self> {
        let maps = source.terms.iter().zip(&target.terms).map(|(s, t)| GroupHom::zero(s, t)).collect();
        Self::new(source.clone(), target.clone(), maps)
    }

    pub fn source(&self) -> &Complex {
        &self.source
    }

    pub fn target(&self) -> &Complex {
        &self.target
    }

    pub fn maps(&self) -> &[GroupHom] {
        &self.maps
    }

    pub fn component(&self, degree: i32) -> Result<&GroupHom> {
        Ok(&self.maps[self.source.index(degree)?])
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &StrictMorphism) -> Result<StrictMorphism> {
        if inner.target != self.source {
            return Err(Error::InvalidMorphism("composing morphisms with mismatched complexes".into()));
        }
        let maps = self.maps.iter().zip(&inner.maps).map(|(f, g)| f.compose(g)).collect::<Result<_>>()?;
        Ok(StrictMorphism { source: inner.source.clone(), target: self.target.clone(), maps })
    }

    /// Every component is a group isomorphism.
    pub fn is_isomorphism(&self) -> bool {
        self.maps.iter().all(GroupHom::is_isomorphism)
    }

    /// Map induced on `H^degree`.
    pub fn induced(&self, degree: i32) -> Result<GroupHom> {
        let hx = self.source.homology(degree)?;
        let hy = self.target.homology(degree)?;
        let f = self.component(degree)?;
        let on_cycles = f.compose(&hx.inclusion)?.factor_through(&hy.inclusion)?;
        let to_homology = hy.projection.compose(&on_cycles)?;
        let m: Matrix = to_homology.matrix() * &hx.section;
        GroupHom::new(hx.group, hy.group, m)
    }
}

#[derive(Debug, Clone)]
pub struct QuasiIsoReport {
    /// `(degree, induced map)` for every degree.
    pub induced: Vec<(i32, GroupHom)>,
    pub is_quasi_isomorphism: bool,
}

impl QuasiIsoReport {
    /// Degrees where the induced map fails to be an isomorphism.
    pub fn failing_degrees(&self) -> Vec<i32> {
        self.induced.iter().filter(|(_, h)| !h.is_isomorphism()).map(|(d, _)| *d).collect()
    }
}

pub fn is_quasi_isomorphism(f: &StrictMorphism) -> Result<QuasiIsoReport> {
    let induced = f.source.degrees().map(|d| Ok((d, f.induced(d)?))).collect::<Result<Vec<_>>>()?;
    let ok = induced.iter().all(|(_, h)| h.is_isomorphism());
    Ok(QuasiIsoReport { induced, is_quasi_isomorphism: ok })
}

#[cfg(test)]
mod tests {
    use super::super::Complex2;
    use super::*;
    use crate::abelian::FgAbGroup;

    fn z(n: i64) -> FgAbGroup {
        FgAbGroup::cyclic(n)
    }

    #[test]
    fn identity_is_quasi_iso() {
        let x = Complex2::new(GroupHom::scalar(&z(2), &z(4), 2).unwrap());
        let r = is_quasi_isomorphism(&StrictMorphism::identity(&x)).unwrap();
        assert!(r.is_quasi_isomorphism);
        assert_eq!(r.induced.len(), 2);
    }

    #[test]
    fn zero_to_trivial_is_not() {
        let x = Complex2::new(GroupHom::zero(&FgAbGroup::trivial(), &z(2)));
        let y = Complex2::new(GroupHom::zero(&FgAbGroup::trivial(), &FgAbGroup::trivial()));
        let f = StrictMorphism::zero(&x, &y).unwrap();
        let r = is_quasi_isomorphism(&f).unwrap();
        assert!(!r.is_quasi_isomorphism);
        assert_eq!(r.failing_degrees(), vec![0]);
    }

    #[test]
    fn non_commuting_square_rejected() {
        let x = Complex2::new(GroupHom::identity(&z(2)));
        let y = Complex2::new(GroupHom::zero(&z(2), &z(2)));
        let maps = vec![GroupHom::identity(&z(2)), GroupHom::identity(&z(2))];
        assert!(StrictMorphism::new(x.complex().clone(), y.complex().clone(), maps).is_err());
    }

    #[test]
    fn reduction_mod_two_induces_iso() {
        // (Z --2--> Z) → (0 → Z/2), reduction mod 2 in degree 0
        let x = Complex2::new(GroupHom::scalar(&z(0), &z(0), 2).unwrap());
        let y = Complex2::new(GroupHom::zero(&FgAbGroup::trivial(), &z(2)));
        let maps = vec![
            GroupHom::zero(&z(0), &FgAbGroup::trivial()),
            GroupHom::scalar(&z(0), &z(2), 1).unwrap(),
        ];
        let f = StrictMorphism::new(x.complex().clone(), y.complex().clone(), maps).unwrap();
        assert!(is_quasi_isomorphism(&f).unwrap().is_quasi_isomorphism);
    }
}
