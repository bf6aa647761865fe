use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Largest accepted group order.
pub const MAX_GROUP_ORDER: usize = 64;

/// A finite group stored as a multiplication table over `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order())
    }
}

impl FiniteGroup {
    /// Validates closure, identity, inverses and associativity.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty multiplication table".into()));
        }
        if n > MAX_GROUP_ORDER {
            return Err(Error::InvalidGroup(format!("order {n} exceeds {MAX_GROUP_ORDER}")));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::InvalidGroup(format!("row {i} is not a map into 0..{n}")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for x in 0..n {
            inverse[x] = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {x} has no inverse")))?;
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if table[table[x][y]][z] != table[x][table[y][z]] {
                        return Err(Error::InvalidGroup(format!("(x·y)·z = x·(y·z) fails at ({x},{y},{z})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { table, inverse, identity })
    }

    /// Group generated by permutations of `0..degree`, elements ordered by
    /// breadth-first discovery from the identity.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<(Self, Vec<Vec<usize>>)> {
        for g in generators {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::InvalidGroup(format!("{g:?} is not a permutation of 0..{degree}")));
            }
        }
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { (0..degree).map(|i| q[p[i]]).collect() };
        let id: Vec<usize> = (0..degree).collect();
        let mut index = BTreeMap::from([(id.clone(), 0)]);
        let mut elems = vec![id];
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let p = compose(&elems[i], g);
                if !index.contains_key(&p) {
                    if elems.len() == MAX_GROUP_ORDER {
                        return Err(Error::InvalidGroup(format!("order exceeds {MAX_GROUP_ORDER}")));
                    }
                    index.insert(p.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(p);
                }
            }
        }
        // product x·y applies x first, then y
        let table = elems.iter().map(|x| elems.iter().map(|y| index[&compose(x, y)]).collect()).collect();
        Ok((Self::from_table(table)?, elems))
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z/n` with element `k` the residue `k`.
    pub fn cyclic(n: usize) -> Self {
        assert!((1..=MAX_GROUP_ORDER).contains(&n), "cyclic order out of range");
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::from_table(table).expect("cyclic table is a group")
    }

    pub fn symmetric3() -> Self {
        Self::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).expect("S_3").0
    }

    /// Dihedral group of order `2n`.
    pub fn dihedral(n: usize) -> Self {
        let r: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let s: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        Self::from_permutations(n, &[r, s]).expect("dihedral").0
    }

    pub fn alternating4() -> Self {
        Self::from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]).expect("A_4").0
    }

    pub fn quaternion() -> Self {
        // left regular representation of Q_8 on {±1, ±i, ±j, ±k}
        let i = vec![2, 3, 1, 0, 6, 7, 5, 4];
        let j = vec![4, 5, 7, 6, 1, 0, 2, 3];
        Self::from_permutations(8, &[i, j]).expect("Q_8").0
    }

    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.order();
        let table = (0..self.order() * m)
            .map(|x| (0..self.order() * m).map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m)).collect())
            .collect();
        Self::from_table(table).expect("product of groups")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, x))
    }

    /// `y^{-1}·x·y`
    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(y), x), y)
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|x| self.elements().all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn element_order(&self, x: usize) -> usize {
        (1..=self.order()).find(|&k| self.pow(x, k) == self.identity).expect("finite order")
    }

    /// Subgroup generated by `gens`, as a sorted list of elements.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !std::mem::replace(&mut seen[y], true) {
                    queue.push_back(y);
                }
            }
        }
        self.elements().filter(|&x| seen[x]).collect()
    }

    pub fn is_normal(&self, subset: &[usize]) -> bool {
        subset.iter().all(|&n| self.elements().all(|y| subset.contains(&self.conj(n, y))))
    }

    /// Subgroup on `elements` with the induced table; element `i` of the
    /// result is `elements[i]`.
    pub fn subgroup(&self, elements: &[usize]) -> Result<FiniteGroup> {
        let pos: BTreeMap<usize, usize> = elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut table = vec![];
        for &x in elements {
            let row = elements
                .iter()
                .map(|&y| pos.get(&self.mul(x, y)).copied())
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::InvalidGroup("subset not closed under multiplication".into()))?;
            table.push(row);
        }
        Self::from_table(table)
    }

    /// Whether `f` (a table from `self` into `target`) is a homomorphism;
    /// returns the first failing pair otherwise.
    pub fn hom_failure(&self, target: &FiniteGroup, f: &[usize]) -> Option<(usize, usize)> {
        for x in self.elements() {
            for y in self.elements() {
                if f[self.mul(x, y)] != target.mul(f[x], f[y]) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_groups() {
        let s3 = FiniteGroup::symmetric3();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.identity(), 0);
        assert_eq!(FiniteGroup::dihedral(4).order(), 8);
        assert_eq!(FiniteGroup::dihedral(6).order(), 12);
        assert_eq!(FiniteGroup::alternating4().order(), 12);
        let q = FiniteGroup::quaternion();
        assert_eq!(q.order(), 8);
        assert_eq!(q.elements().filter(|&x| q.element_order(x) == 2).count(), 1);
        assert!(FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2)).is_abelian());
    }

    #[test]
    fn rejects_non_groups() {
        assert!(FiniteGroup::from_table(vec![vec![0, 0], vec![0, 1]]).is_err());
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 2]]).is_err());
        // a Latin square with identity that is not associative
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(loop5).unwrap_err();
        assert!(err.to_string().contains("(x·y)·z = x·(y·z)"));
        assert!(FiniteGroup::from_permutations(3, &[vec![0, 0, 1]]).is_err());
    }

    #[test]
    fn subgroups() {
        let s3 = FiniteGroup::symmetric3();
        let rot = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        let a3 = s3.generated(&[rot]);
        assert_eq!(a3.len(), 3);
        assert!(s3.is_normal(&a3));
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        assert!(!s3.is_normal(&s3.generated(&[t])));
        assert!(s3.subgroup(&a3).unwrap().is_abelian());
    }
}
