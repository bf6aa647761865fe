//! Finitely generated abelian groups in invariant-factor form, their
//! elements and homomorphisms.
//!
//! A group `Z/d_1 ⊕ … ⊕ Z/d_k ⊕ Z^r` is stored with `2 ≤ d_1 | d_2 | … | d_k`.
//! Elements are coordinate vectors on the canonical generators (torsion
//! first, then free), and a homomorphism is an integer matrix whose columns
//! are the images of the source generators.

mod finite;
mod matrix;
pub(crate) mod presentation;
mod smith;

use std::fmt;
use std::sync::Arc;

pub use finite::FiniteAbelian;
pub use matrix::Matrix;
pub use smith::{kernel_lattice, smith_normal_form, solve, Smith};

use crate::error::{Error, Result};
use presentation::{canonicalize, canonicalize_moduli, cokernel_of, is_zero_mod, kernel_of, reduce, reduce_matrix, subgroup, Lifter};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FgAbGroup {
    factors: Arc<[i64]>,
    free_rank: usize,
}

impl FgAbGroup {
    /// Validates that `factors` is already an invariant-factor chain.
    pub fn new(factors: Vec<i64>, free_rank: usize) -> Result<Self> {
        let chain_ok = factors.iter().all(|&d| d >= 2) && factors.windows(2).all(|w| w[1] % w[0] == 0);
        if !chain_ok {
            return Err(Error::NonCanonical(factors));
        }
        Ok(Self::from_canonical_parts(factors, free_rank))
    }

    pub(crate) fn from_canonical_parts(factors: Vec<i64>, free_rank: usize) -> Self {
        FgAbGroup { factors: factors.into(), free_rank }
    }

    /// Canonical form of `⊕ Z/m_i` for arbitrary moduli (`0` means `Z`).
    pub fn from_moduli(moduli: &[i64]) -> Self {
        canonicalize_moduli(&moduli.iter().map(|m| m.abs()).collect::<Vec<_>>()).group
    }

    pub fn trivial() -> Self {
        Self::from_canonical_parts(vec![], 0)
    }

    /// `Z/n`; `n = 0` gives `Z` and `n = 1` the trivial group.
    pub fn cyclic(n: i64) -> Self {
        Self::from_moduli(&[n])
    }

    pub fn free(rank: usize) -> Self {
        Self::from_canonical_parts(vec![], rank)
    }

    pub fn invariant_factors(&self) -> &[i64] {
        &self.factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Number of canonical generators.
    pub fn rank(&self) -> usize {
        self.factors.len() + self.free_rank
    }

    /// Moduli of the canonical coordinates, `0` for free ones.
    pub fn moduli(&self) -> Vec<i64> {
        let mut m = self.factors.to_vec();
        m.resize(self.rank(), 0);
        m
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.rank() == 0
    }

    /// `None` for infinite groups.
    pub fn order(&self) -> Option<u128> {
        self.is_finite().then(|| self.factors.iter().map(|&d| d as u128).product())
    }

    pub(crate) fn require_finite(&self) -> Result<u128> {
        self.order().ok_or(Error::InfiniteGroup { free_rank: self.free_rank })
    }

    pub fn zero(&self) -> GroupElem {
        GroupElem { group: self.clone(), coords: vec![0; self.rank()] }
    }

    pub fn generator(&self, i: usize) -> GroupElem {
        let mut e = self.zero();
        e.coords[i] = 1;
        e.normalize()
    }

    pub fn generators(&self) -> Vec<GroupElem> {
        (0..self.rank()).map(|i| self.generator(i)).collect()
    }

    /// Element with the given coordinates, reduced.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElem> {
        if coords.len() != self.rank() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for a group of rank {}",
                coords.len(),
                self.rank()
            )));
        }
        let mut c = coords.to_vec();
        reduce(&self.moduli(), &mut c);
        Ok(GroupElem { group: self.clone(), coords: c })
    }

    pub(crate) fn elem_unchecked(&self, coords: Vec<i64>) -> GroupElem {
        debug_assert_eq!(coords.len(), self.rank());
        let mut e = GroupElem { group: self.clone(), coords };
        reduce(&self.factors, &mut e.coords);
        e
    }

    /// All elements in lexicographic order of reduced coordinates.
    pub fn elements(&self) -> Result<Vec<GroupElem>> {
        self.require_finite()?;
        let mut out = Vec::new();
        let mut digits = vec![0i64; self.rank()];
        loop {
            out.push(GroupElem { group: self.clone(), coords: digits.clone() });
            let mut i = digits.len();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < self.factors[i] {
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> DirectSum {
        direct_sum(self, other)
    }
}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FgAbGroup({self})")
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

impl fmt::Display for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} → {} {:?}", self.source, self.target, self.matrix.row_vecs())
    }
}

/// An element of a [`FgAbGroup`] in reduced canonical coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElem {
    group: FgAbGroup,
    coords: Vec<i64>,
}

impl GroupElem {
    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn normalize(mut self) -> Self {
        reduce(&self.group.factors, &mut self.coords);
        self
    }

    fn same_group(&self, other: &GroupElem) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(format!("{} vs {}", self.group, other.group)));
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupElem) -> Result<GroupElem> {
        self.same_group(other)?;
        let c = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(self.group.elem_unchecked(c))
    }

    pub fn sub(&self, other: &GroupElem) -> Result<GroupElem> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GroupElem {
        self.group.elem_unchecked(self.coords.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, k: i64) -> GroupElem {
        self.group.elem_unchecked(self.coords.iter().map(|c| c * k).collect())
    }
}

impl fmt::Debug for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.coords.as_slice() {
            [c] => write!(f, "{c}"),
            cs => write!(f, "{cs:?}"),
        }
    }
}

/// Homomorphism between canonical groups; `matrix` is
/// `rank(target) × rank(source)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupHom {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: Matrix,
}

impl GroupHom {
    /// Checks shape and well-definedness, then reduces the matrix.
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.rank() || matrix.cols() != source.rank() {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {}×{}, expected {}×{}",
                matrix.rows(),
                matrix.cols(),
                target.rank(),
                source.rank()
            )));
        }
        let tmod = target.moduli();
        for (i, &d) in source.factors.iter().enumerate() {
            let image: Vec<i64> = matrix.column(i).iter().map(|c| c * d).collect();
            if !is_zero_mod(&tmod, &image) {
                return Err(Error::IllDefinedHom { generator: i });
            }
        }
        Ok(Self::from_parts(source, target, matrix))
    }

    pub(crate) fn from_parts(source: FgAbGroup, target: FgAbGroup, mut matrix: Matrix) -> Self {
        reduce_matrix(&target.moduli(), &mut matrix);
        GroupHom { source, target, matrix }
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> Self {
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            matrix: Matrix::zeros(target.rank(), source.rank()),
        }
    }

    pub fn identity(g: &FgAbGroup) -> Self {
        GroupHom { source: g.clone(), target: g.clone(), matrix: Matrix::identity(g.rank()) }
    }

    /// Multiplication by `k` on a cyclic source/target pair, e.g. `Z/2 → Z/4, x ↦ 2x`.
    pub fn scalar(source: &FgAbGroup, target: &FgAbGroup, k: i64) -> Result<Self> {
        let mut m = Matrix::zeros(target.rank(), source.rank());
        for i in 0..source.rank().min(target.rank()) {
            m[(i, i)] = k;
        }
        Self::new(source.clone(), target.clone(), m)
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &GroupElem) -> Result<GroupElem> {
        if x.group != self.source {
            return Err(Error::GroupMismatch(format!(
                "applying a map from {} to an element of {}",
                self.source, x.group
            )));
        }
        Ok(self.target.elem_unchecked(self.matrix.mul_vec(&x.coords)))
    }

    pub(crate) fn apply_coords(&self, x: &[i64]) -> Vec<i64> {
        let mut y = self.matrix.mul_vec(x);
        reduce(&self.target.factors, &mut y);
        y
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &GroupHom) -> Result<GroupHom> {
        if inner.target != self.source {
            return Err(Error::GroupMismatch(format!(
                "cannot compose {} → {} after {} → {}",
                self.source, self.target, inner.source, inner.target
            )));
        }
        Ok(Self::from_parts(inner.source.clone(), self.target.clone(), &self.matrix * &inner.matrix))
    }

    fn same_shape(&self, other: &GroupHom) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::GroupMismatch("homomorphisms with different source or target".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupHom) -> Result<GroupHom> {
        self.same_shape(other)?;
        Ok(Self::from_parts(self.source.clone(), self.target.clone(), self.matrix.add(&other.matrix)))
    }

    pub fn sub(&self, other: &GroupHom) -> Result<GroupHom> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GroupHom {
        Self::from_parts(self.source.clone(), self.target.clone(), self.matrix.scale(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn kernel(&self) -> Kernel {
        let (group, incl) = kernel_of(&self.source.moduli(), &self.target.moduli(), &self.matrix);
        Kernel { inclusion: GroupHom::from_parts(group.clone(), self.source.clone(), incl), group }
    }

    pub fn image(&self) -> Kernel {
        let (group, incl) = subgroup(&self.matrix, &self.target.moduli());
        Kernel { inclusion: GroupHom::from_parts(group.clone(), self.target.clone(), incl), group }
    }

    pub fn cokernel(&self) -> Cokernel {
        let p = cokernel_of(&self.target.moduli(), &self.matrix);
        Cokernel {
            projection: GroupHom::from_parts(self.target.clone(), p.group.clone(), p.to_canon),
            section: p.from_canon,
            group: p.group,
        }
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().group.is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().group.is_trivial()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Factors `self` through an injective `incl`: returns `h` with
    /// `incl ∘ h = self`. Fails if some image is outside `im(incl)`.
    pub fn factor_through(&self, incl: &GroupHom) -> Result<GroupHom> {
        if incl.target != self.target {
            return Err(Error::GroupMismatch("factor_through needs a common target".into()));
        }
        let lifter = Lifter::new(&incl.matrix, &self.target.moduli());
        let mut cols = Vec::with_capacity(self.source.rank());
        for j in 0..self.source.rank() {
            let w = lifter.lift(&self.matrix.column(j)).ok_or_else(|| {
                Error::GroupMismatch(format!("generator {j} does not map into the subgroup"))
            })?;
            cols.push(w);
        }
        GroupHom::new(self.source.clone(), incl.source.clone(), Matrix::from_columns(incl.source.rank(), &cols))
    }

    /// Preimage of one element under `self`, if it lies in the image.
    pub fn preimage(&self, y: &GroupElem) -> Result<Option<GroupElem>> {
        if y.group != self.target {
            return Err(Error::GroupMismatch("preimage of an element of another group".into()));
        }
        let lifter = Lifter::new(&self.matrix, &self.target.moduli());
        Ok(lifter.lift(&y.coords).map(|w| self.source.elem_unchecked(w)))
    }
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupHom({} → {}, {:?})", self.source, self.target, self.matrix)
    }
}

#[derive(Debug, Clone)]
pub struct Kernel {
    pub group: FgAbGroup,
    pub inclusion: GroupHom,
}

#[derive(Debug, Clone)]
pub struct Cokernel {
    pub group: FgAbGroup,
    pub projection: GroupHom,
    /// Lift of each canonical generator of the quotient into the target.
    pub section: Matrix,
}

/// `G ⊕ H` with its structure maps.
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub sum: FgAbGroup,
    pub inj: [GroupHom; 2],
    pub proj: [GroupHom; 2],
}

impl DirectSum {
    /// The element `inj_G(x) + inj_H(y)`.
    pub fn pair(&self, x: &GroupElem, y: &GroupElem) -> Result<GroupElem> {
        self.inj[0].apply(x)?.add(&self.inj[1].apply(y)?)
    }

    pub fn split(&self, s: &GroupElem) -> Result<(GroupElem, GroupElem)> {
        Ok((self.proj[0].apply(s)?, self.proj[1].apply(s)?))
    }

    /// `f ⊕ g`-style map into the sum: `x ↦ inj_G(f x) + inj_H(g x)`.
    pub fn into_sum(&self, f: &GroupHom, g: &GroupHom) -> Result<GroupHom> {
        self.inj[0].compose(f)?.add(&self.inj[1].compose(g)?)
    }

    /// `(x, y) ↦ f x + g y` out of the sum.
    pub fn out_of_sum(&self, f: &GroupHom, g: &GroupHom) -> Result<GroupHom> {
        f.compose(&self.proj[0])?.add(&g.compose(&self.proj[1])?)
    }
}

pub fn direct_sum(g: &FgAbGroup, h: &FgAbGroup) -> DirectSum {
    let mut moduli = g.moduli();
    moduli.extend(h.moduli());
    let p = canonicalize(moduli.len(), &Matrix::diagonal(&moduli));
    let (ng, nh) = (g.rank(), h.rank());
    let sum = p.group.clone();
    let inj_g = GroupHom::from_parts(g.clone(), sum.clone(), p.to_canon.select_columns(&(0..ng).collect::<Vec<_>>()));
    let inj_h =
        GroupHom::from_parts(h.clone(), sum.clone(), p.to_canon.select_columns(&(ng..ng + nh).collect::<Vec<_>>()));
    let proj_g = GroupHom::from_parts(sum.clone(), g.clone(), p.from_canon.select_rows(&(0..ng).collect::<Vec<_>>()));
    let proj_h =
        GroupHom::from_parts(sum.clone(), h.clone(), p.from_canon.select_rows(&(ng..ng + nh).collect::<Vec<_>>()));
    DirectSum { sum, inj: [inj_g, inj_h], proj: [proj_g, proj_h] }
}
