//! The complexes representing unit stacks, the mapping cone, soft
//! truncation and the comparison morphisms between them.

use super::{Complex, Complex2, Complex3, StrictMorphism};
use crate::abelian::{direct_sum, DirectSum, GroupElem, GroupHom};
use crate::error::{Error, Result};

/// `A → ker(λ − id_B)` with the kernel realized inside `A ⊕ B`.
#[derive(Debug, Clone)]
pub struct UnitComplex1 {
    pub complex: Complex2,
    /// `A ⊕ B` with its structure maps.
    pub sum: DirectSum,
    /// `ker(λ − id_B) ↪ A ⊕ B`.
    pub witness: GroupHom,
}

/// `A → B ⊕ A → ker(λ − id_C)` with the last kernel inside `B ⊕ C`.
#[derive(Debug, Clone)]
pub struct UnitComplex2 {
    pub complex: Complex3,
    /// `B ⊕ A`, the middle term.
    pub middle: DirectSum,
    /// `B ⊕ C`, ambient of the last term.
    pub ambient: DirectSum,
    /// `ker(λ − id_C) ↪ B ⊕ C`.
    pub witness: GroupHom,
}

pub fn unit_complex_1(x: &Complex2) -> Result<UnitComplex1> {
    let (a, b, lambda) = (x.a(), x.b(), x.lambda());
    let sum = direct_sum(a, b);
    // (a, b) ↦ λa − b
    let test = sum.out_of_sum(lambda, &GroupHom::identity(b).neg())?;
    let k = test.kernel();
    // a ↦ (a, λa)
    let graph = sum.into_sum(&GroupHom::identity(a), lambda)?;
    let d = graph.factor_through(&k.inclusion)?;
    Ok(UnitComplex1 { complex: Complex2::new(d), sum, witness: k.inclusion })
}

pub fn unit_complex_2(x: &Complex3) -> Result<UnitComplex2> {
    let (a, b, c) = (x.a(), x.b(), x.c());
    let (delta, lambda) = (x.delta(), x.lambda());
    let middle = direct_sum(b, a);
    let ambient = direct_sum(b, c);
    let test = ambient.out_of_sum(lambda, &GroupHom::identity(c).neg())?;
    let k = test.kernel();
    // a ↦ (δa, a)
    let first = middle.into_sum(delta, &GroupHom::identity(a))?;
    // (b, a) ↦ (b − δa, λb)
    let pr_b = &middle.proj[0];
    let pr_a = &middle.proj[1];
    let b_part = pr_b.sub(&delta.compose(pr_a)?)?;
    let c_part = lambda.compose(pr_b)?;
    let second = ambient.into_sum(&b_part, &c_part)?.factor_through(&k.inclusion)?;
    Ok(UnitComplex2 { complex: Complex3::new(first, second)?, middle, ambient, witness: k.inclusion })
}

/// Mapping cone of a morphism of 2-term complexes `f: X → Y`:
/// `X^{-1} → X^0 ⊕ Y^{-1} → Y^0`, `x ↦ (−d_X x, f x)`, `(x, y) ↦ f x + d_Y y`.
#[derive(Debug, Clone)]
pub struct Cone {
    pub complex: Complex3,
    /// `X^0 ⊕ Y^{-1}`
    pub middle: DirectSum,
}

pub fn cone(f: &StrictMorphism) -> Result<Cone> {
    if f.source().len() != 2 {
        return Err(Error::InvalidMorphism("cone is built for morphisms of 2-term complexes".into()));
    }
    let (x, y) = (f.source(), f.target());
    let (dx, dy) = (&x.differentials()[0], &y.differentials()[0]);
    let (f1, f0) = (&f.maps()[0], &f.maps()[1]);
    let middle = direct_sum(&x.terms()[1], &y.terms()[0]);
    let first = middle.into_sum(&dx.neg(), f1)?;
    let second = middle.out_of_sum(f0, dy)?;
    Ok(Cone { complex: Complex3::new(first, second)?, middle })
}

/// `A → ker(B → C)`, the soft truncation at −1 shifted to end in degree 0.
#[derive(Debug, Clone)]
pub struct Truncation {
    pub complex: Complex2,
    /// `ker(B → C) ↪ B`
    pub inclusion: GroupHom,
}

pub fn truncate_shift(x: &Complex3) -> Result<Truncation> {
    let k = x.lambda().kernel();
    let d = x.delta().factor_through(&k.inclusion)?;
    Ok(Truncation { complex: Complex2::new(d), inclusion: k.inclusion })
}

/// Isomorphism `truncate_shift(cone(id_X)) → unit_complex_1(X)`:
/// `id_A` in degree −1 and `(b, a) ↦ (a, −b)` in degree 0.
pub fn cone_truncation_comparison(x: &Complex2) -> Result<StrictMorphism> {
    let c = cone(&StrictMorphism::identity(x))?;
    let t = truncate_shift(&c.complex)?;
    let u = unit_complex_1(x)?;
    let swap = u.sum.into_sum(&c.middle.proj[1], &c.middle.proj[0].neg())?;
    let deg0 = swap.compose(&t.inclusion)?.factor_through(&u.witness)?;
    StrictMorphism::new(
        t.complex.complex().clone(),
        u.complex.complex().clone(),
        vec![GroupHom::identity(x.a()), deg0],
    )
}

/// `unit_complex_1(X) → X`: `id_A` and `pr_B` restricted to the kernel.
pub fn forgetful_morphism_1(x: &Complex2) -> Result<StrictMorphism> {
    let u = unit_complex_1(x)?;
    let deg0 = u.sum.proj[1].compose(&u.witness)?;
    StrictMorphism::new(u.complex.complex().clone(), x.complex().clone(), vec![GroupHom::identity(x.a()), deg0])
}

/// `unit_complex_2(X) → X`: `id_A`, `pr_B` and `pr_C` restricted to the kernel.
pub fn forgetful_morphism_2(x: &Complex3) -> Result<StrictMorphism> {
    let u = unit_complex_2(x)?;
    let maps = vec![GroupHom::identity(x.a()), u.middle.proj[0].clone(), u.ambient.proj[1].compose(&u.witness)?];
    StrictMorphism::new(u.complex.complex().clone(), x.complex().clone(), maps)
}

/// Another complex representing the same unit stack, with a strict
/// quasi-isomorphism into the unit complex.
#[derive(Debug, Clone)]
pub struct Alternate {
    pub complex: Complex,
    pub to_unit: StrictMorphism,
}

/// `(A --id--> A) → unit_complex_1(X)`: `a ↦ a`, `a ↦ (a, λa)`.
pub fn alternate_identity_1(x: &Complex2) -> Result<Alternate> {
    let a = x.a();
    let u = unit_complex_1(x)?;
    let alt = Complex2::new(GroupHom::identity(a));
    let graph = u.sum.into_sum(&GroupHom::identity(a), x.lambda())?.factor_through(&u.witness)?;
    let to_unit = StrictMorphism::new(alt.complex().clone(), u.complex.complex().clone(), vec![GroupHom::identity(a), graph])?;
    Ok(Alternate { complex: alt.complex().clone(), to_unit })
}

/// `(ker λ --id--> ker λ) → unit_complex_1(X)`: `k ↦ k`, `k ↦ (k, 0)`.
pub fn alternate_kernel_1(x: &Complex2) -> Result<Alternate> {
    let u = unit_complex_1(x)?;
    let k = x.lambda().kernel();
    let alt = Complex2::new(GroupHom::identity(&k.group));
    let deg0 = u.sum.inj[0].compose(&k.inclusion)?.factor_through(&u.witness)?;
    let to_unit = StrictMorphism::new(alt.complex().clone(), u.complex.complex().clone(), vec![k.inclusion, deg0])?;
    Ok(Alternate { complex: alt.complex().clone(), to_unit })
}

/// `A → B ⊕ A → B` with `a ↦ (δa, a)` and `(b, a) ↦ b − δa`, mapped to the
/// unit complex by `id, id, b ↦ (b, λb)`.
pub fn alternate_sum_2(x: &Complex3) -> Result<Alternate> {
    let u = unit_complex_2(x)?;
    let m = &u.middle;
    let first = u.complex.delta().clone();
    let second = m.proj[0].sub(&x.delta().compose(&m.proj[1])?)?;
    let alt = Complex3::new(first, second)?;
    let last = u.ambient.into_sum(&GroupHom::identity(x.b()), x.lambda())?.factor_through(&u.witness)?;
    let maps = vec![GroupHom::identity(x.a()), GroupHom::identity(&m.sum), last];
    let to_unit = StrictMorphism::new(alt.complex().clone(), u.complex.complex().clone(), maps)?;
    Ok(Alternate { complex: alt.complex().clone(), to_unit })
}

/// `A → ker λ ⊕ A → ker λ` with `a ↦ (δa, a)` and `(k, a) ↦ k − δa`, mapped
/// to the unit complex by `id`, `(k, a) ↦ (k, a)` and `k ↦ (k, 0)`.
pub fn alternate_kernel_2(x: &Complex3) -> Result<Alternate> {
    let u = unit_complex_2(x)?;
    let k = x.lambda().kernel();
    let delta_k = x.delta().factor_through(&k.inclusion)?;
    let sum = direct_sum(&k.group, x.a());
    let first = sum.into_sum(&delta_k, &GroupHom::identity(x.a()))?;
    let second = sum.proj[0].sub(&delta_k.compose(&sum.proj[1])?)?;
    let alt = Complex3::new(first, second)?;
    let mid = u.middle.into_sum(&k.inclusion.compose(&sum.proj[0])?, &sum.proj[1])?;
    let last = u.ambient.inj[0].compose(&k.inclusion)?.factor_through(&u.witness)?;
    let maps = vec![GroupHom::identity(x.a()), mid, last];
    let to_unit = StrictMorphism::new(alt.complex().clone(), u.complex.complex().clone(), maps)?;
    Ok(Alternate { complex: alt.complex().clone(), to_unit })
}

impl UnitComplex1 {
    /// Element `(a, b)` of `A ⊕ B` for a degree-0 element of the unit complex.
    pub fn pair_of(&self, k: &GroupElem) -> Result<(GroupElem, GroupElem)> {
        self.sum.split(&self.witness.apply(k)?)
    }
}

#[cfg(test)]
mod tests {
    use super::super::is_quasi_isomorphism;
    use super::*;
    use crate::abelian::FgAbGroup;

    fn z(n: i64) -> FgAbGroup {
        FgAbGroup::cyclic(n)
    }

    fn times(k: i64, a: i64, b: i64) -> GroupHom {
        GroupHom::scalar(&z(a), &z(b), k).unwrap()
    }

    /// All `(a, b)` with `λa = b`, by enumeration.
    fn brute_graph(x: &Complex2) -> Vec<(GroupElem, GroupElem)> {
        let mut out = vec![];
        for a in x.a().elements().unwrap() {
            for b in x.b().elements().unwrap() {
                if x.lambda().apply(&a).unwrap() == b {
                    out.push((a.clone(), b));
                }
            }
        }
        out
    }

    #[test]
    fn unit_complex_1_examples() {
        let x = Complex2::new(times(2, 2, 4));
        let u = unit_complex_1(&x).unwrap();
        assert_eq!(u.complex.b(), &z(2));
        assert!(u.complex.lambda().is_isomorphism());
        assert!(u.complex.is_acyclic().unwrap());
        let g = u.complex.b().generator(0);
        let (a, b) = u.pair_of(&g).unwrap();
        assert_eq!((a.coords(), b.coords()), (&[1][..], &[2][..]));
        assert_eq!(brute_graph(&x).len(), 2);

        let x = Complex2::new(GroupHom::zero(&FgAbGroup::trivial(), &z(5)));
        let u = unit_complex_1(&x).unwrap();
        assert!(u.complex.a().is_trivial() && u.complex.b().is_trivial());

        let x = Complex2::new(GroupHom::zero(&z(3), &z(2)));
        let u = unit_complex_1(&x).unwrap();
        assert_eq!(u.complex.b(), &z(3));
        assert!(u.complex.lambda().is_isomorphism());
    }

    #[test]
    fn unit_complex_2_examples() {
        let x = Complex3::new(times(0, 2, 2), times(1, 2, 2)).unwrap();
        assert!(unit_complex_2(&x).unwrap().complex.is_acyclic().unwrap());
        let x = Complex3::new(times(1, 4, 4), times(0, 4, 2)).unwrap();
        assert!(unit_complex_2(&x).unwrap().complex.is_acyclic().unwrap());
        let t = FgAbGroup::trivial();
        let x = Complex3::new(GroupHom::zero(&t, &t), GroupHom::zero(&t, &t)).unwrap();
        let u = unit_complex_2(&x).unwrap();
        assert!(u.complex.terms().iter().all(FgAbGroup::is_trivial));
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        for x in [Complex2::new(times(2, 2, 4)), Complex2::new(GroupHom::zero(&FgAbGroup::trivial(), &z(3)))] {
            let c = cone(&StrictMorphism::identity(&x)).unwrap();
            assert!(c.complex.is_acyclic().unwrap());
        }
    }

    #[test]
    fn cone_of_zero_from_zero_complex() {
        let t = FgAbGroup::trivial();
        let zero = Complex2::new(GroupHom::zero(&t, &t));
        let x = Complex2::new(times(2, 2, 4));
        let c = cone(&StrictMorphism::zero(&zero, &x).unwrap()).unwrap();
        assert!(c.complex.homology(-2).unwrap().group.is_trivial());
        for d in [-1, 0] {
            assert_eq!(c.complex.homology(d).unwrap().group, x.homology(d).unwrap().group);
        }
    }

    #[test]
    fn truncation_examples() {
        let x = Complex3::new(times(0, 2, 2), times(0, 2, 3)).unwrap();
        let t = truncate_shift(&x).unwrap();
        assert_eq!(t.complex.b(), &z(2));
        let x = Complex3::new(times(0, 2, 2), times(1, 2, 2)).unwrap();
        assert!(truncate_shift(&x).unwrap().complex.b().is_trivial());
    }

    #[test]
    fn comparison_is_isomorphism() {
        for x in [
            Complex2::new(times(2, 2, 4)),
            Complex2::new(times(0, 3, 3)),
            Complex2::new(times(1, 6, 3)),
            Complex2::new(GroupHom::scalar(&z(0), &z(4), 1).unwrap()),
        ] {
            let m = cone_truncation_comparison(&x).unwrap();
            assert!(m.is_isomorphism());
        }
    }

    #[test]
    fn forgetful_examples() {
        let x = Complex2::new(times(2, 2, 4));
        let f = forgetful_morphism_1(&x).unwrap();
        let u = unit_complex_1(&x).unwrap();
        let g = u.complex.b().generator(0);
        assert_eq!(f.maps()[1].apply(&g).unwrap().coords(), &[2]);
        let x3 = Complex3::new(times(0, 2, 2), times(1, 2, 2)).unwrap();
        forgetful_morphism_2(&x3).unwrap();
        let t = FgAbGroup::trivial();
        let f = forgetful_morphism_1(&Complex2::new(GroupHom::zero(&t, &t))).unwrap();
        assert!(f.maps().iter().all(GroupHom::is_zero));
    }

    #[test]
    fn alternates_are_quasi_isomorphic() {
        let x = Complex2::new(times(2, 2, 4));
        for alt in [alternate_identity_1(&x).unwrap(), alternate_kernel_1(&x).unwrap()] {
            assert!(is_quasi_isomorphism(&alt.to_unit).unwrap().is_quasi_isomorphism);
        }
        let x3 = Complex3::new(times(2, 2, 4), times(1, 4, 2)).unwrap();
        for alt in [alternate_sum_2(&x3).unwrap(), alternate_kernel_2(&x3).unwrap()] {
            assert!(alt.complex.is_acyclic().unwrap());
            assert!(is_quasi_isomorphism(&alt.to_unit).unwrap().is_quasi_isomorphism);
        }
    }
}
