//! Computations on groups given in "diagonal" coordinates: `⊕ Z/m_i` with
//! `m_i = 0` standing for a free coordinate. Canonical groups are the special
//! case where the moduli form an invariant-factor chain, but the total Čech
//! complexes are built from direct sums that are not canonical, so the kernel,
//! cokernel and homology routines all work on raw moduli lists.

use super::matrix::Matrix;
use super::smith::{kernel_lattice, smith_normal_form, solve_with, Smith};
use super::FgAbGroup;

/// A canonical group together with coordinate changes to and from a
/// presentation `Z^n / relations`.
#[derive(Debug, Clone)]
pub(crate) struct Presented {
    pub group: FgAbGroup,
    /// `rank(group) × n`: presentation coordinates to canonical coordinates.
    pub to_canon: Matrix,
    /// `n × rank(group)`: lifts of the canonical generators.
    pub from_canon: Matrix,
}

/// Reduces torsion coordinates into `[0, m)`; free coordinates are kept.
pub(crate) fn reduce(moduli: &[i64], coords: &mut [i64]) {
    for (c, &m) in coords.iter_mut().zip(moduli) {
        if m != 0 {
            *c = c.rem_euclid(m);
        }
    }
}

pub(crate) fn reduce_matrix(moduli: &[i64], m: &mut Matrix) {
    for i in 0..m.rows() {
        let md = moduli[i];
        if md != 0 {
            for j in 0..m.cols() {
                m[(i, j)] = m[(i, j)].rem_euclid(md);
            }
        }
    }
}

pub(crate) fn is_zero_mod(moduli: &[i64], coords: &[i64]) -> bool {
    coords.iter().zip(moduli).all(|(&c, &m)| if m == 0 { c == 0 } else { c % m == 0 })
}

/// Canonical form of `Z^n / im(relations)` where `relations` is `n × k`.
pub(crate) fn canonicalize(n: usize, relations: &Matrix) -> Presented {
    assert_eq!(relations.rows(), n, "relation matrix must have one row per generator");
    let s = smith_normal_form(relations);
    let diag = s.diagonal();
    let modulus = |i: usize| if i < diag.len() { diag[i] } else { 0 };
    let kept: Vec<usize> = (0..n).filter(|&i| modulus(i) != 1).collect();
    let factors: Vec<i64> = kept.iter().map(|&i| modulus(i)).filter(|&d| d != 0).collect();
    let free_rank = kept.len() - factors.len();
    let group = FgAbGroup::from_canonical_parts(factors, free_rank);
    let mut to_canon = s.u.select_rows(&kept);
    reduce_matrix(&group.moduli(), &mut to_canon);
    let from_canon = s.u_inv.select_columns(&kept);
    Presented { group, to_canon, from_canon }
}

/// Canonical form of the group `⊕ Z/m_i`.
pub(crate) fn canonicalize_moduli(moduli: &[i64]) -> Presented {
    canonicalize(moduli.len(), &Matrix::diagonal(moduli))
}

/// The subgroup of `⊕ Z/ambient_i` generated by the columns of `gens`.
/// Returns the canonical subgroup and its inclusion matrix (`n × rank`).
pub(crate) fn subgroup(gens: &Matrix, ambient: &[i64]) -> (FgAbGroup, Matrix) {
    let n = ambient.len();
    let t = gens.cols();
    assert_eq!(gens.rows(), n);
    // Relations among generators: {c : gens·c ∈ im diag(ambient)}.
    let stacked = gens.hstack(&Matrix::diagonal(ambient).scale(-1));
    let lattice = kernel_lattice(&stacked);
    let relations = lattice.select_rows(&(0..t).collect::<Vec<_>>());
    let p = canonicalize(t, &relations);
    let mut incl = gens * &p.from_canon;
    reduce_matrix(ambient, &mut incl);
    (p.group, incl)
}

/// Kernel of the map `⊕ Z/src_i → ⊕ Z/tgt_j` given by `m`.
pub(crate) fn kernel_of(src: &[i64], tgt: &[i64], m: &Matrix) -> (FgAbGroup, Matrix) {
    let n = src.len();
    let stacked = m.hstack(&Matrix::diagonal(tgt).scale(-1));
    let lattice = kernel_lattice(&stacked);
    let lifts = lattice.select_rows(&(0..n).collect::<Vec<_>>());
    subgroup(&lifts, src)
}

/// Cokernel of the map into `⊕ Z/tgt_j` given by `m`.
pub(crate) fn cokernel_of(tgt: &[i64], m: &Matrix) -> Presented {
    let rel = Matrix::diagonal(tgt).hstack(m);
    canonicalize(tgt.len(), &rel)
}

/// Solves `incl·w ≡ y (mod ambient)` for many right-hand sides.
pub(crate) struct Lifter {
    smith: Smith,
    width: usize,
}

impl Lifter {
    pub fn new(incl: &Matrix, ambient: &[i64]) -> Self {
        let stacked = incl.hstack(&Matrix::diagonal(ambient));
        Lifter { smith: smith_normal_form(&stacked), width: incl.cols() }
    }

    pub fn lift(&self, y: &[i64]) -> Option<Vec<i64>> {
        solve_with(&self.smith, y).map(|mut w| {
            w.truncate(self.width);
            w
        })
    }
}

/// Homology `ker(outgoing) / im(incoming)` at a term with moduli `mid`.
#[derive(Debug, Clone)]
pub(crate) struct HomologyData {
    pub cycles: FgAbGroup,
    /// `mid.len() × rank(cycles)`
    pub inclusion: Matrix,
    pub group: FgAbGroup,
    /// `rank(group) × rank(cycles)`
    pub projection: Matrix,
    /// `rank(cycles) × rank(group)`: a lift of each homology generator.
    pub section: Matrix,
}

pub(crate) fn homology_of(
    mid: &[i64],
    incoming: Option<&Matrix>,
    outgoing: Option<(&[i64], &Matrix)>,
) -> HomologyData {
    let n = mid.len();
    let (cycles, inclusion) = match outgoing {
        Some((tgt, m)) => kernel_of(mid, tgt, m),
        None => {
            let p = canonicalize_moduli(mid);
            (p.group, p.from_canon)
        }
    };
    let zmod = cycles.moduli();
    let boundaries = match incoming {
        Some(m) if m.cols() > 0 => {
            assert_eq!(m.rows(), n);
            let lifter = Lifter::new(&inclusion, mid);
            let cols: Vec<Vec<i64>> = (0..m.cols())
                .map(|j| lifter.lift(&m.column(j)).expect("boundaries are cycles"))
                .collect();
            Matrix::from_columns(zmod.len(), &cols)
        }
        _ => Matrix::zeros(zmod.len(), 0),
    };
    let q = cokernel_of(&zmod, &boundaries);
    HomologyData {
        cycles,
        inclusion,
        group: q.group,
        projection: q.to_canon,
        section: q.from_canon,
    }
}
