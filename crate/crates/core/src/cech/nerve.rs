//! Nerves truncated at level 3, and the Čech nerve of a finite cover.
//!
//! Cells of level `n` of a Čech nerve are non-decreasing `(n+1)`-tuples of
//! part indices whose intersection is nonempty, one cell per connected
//! component of that intersection. Degenerate tuples such as `(0, 0)` are
//! included. The face `d_i` drops position `i`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};

pub const TOP_LEVEL: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nerve {
    sizes: [usize; 4],
    /// `faces[n][x][i] = d_i(x)` for `x` in level `n + 1`.
    faces: [Vec<Vec<usize>>; 3],
    labels: [Vec<String>; 4],
}

impl Nerve {
    /// Validates index ranges and the identities `d_i d_j = d_{j-1} d_i`
    /// for `i < j`.
    pub fn new(sizes: [usize; 4], faces: [Vec<Vec<usize>>; 3]) -> Result<Self> {
        let labels = [0, 1, 2, 3].map(|n| (0..sizes[n]).map(|x| format!("{n}:{x}")).collect());
        Self::with_labels(sizes, faces, labels)
    }

    pub fn with_labels(sizes: [usize; 4], faces: [Vec<Vec<usize>>; 3], labels: [Vec<String>; 4]) -> Result<Self> {
        if sizes[0] == 0 {
            return Err(Error::InvalidNerve("level 0 is empty".into()));
        }
        for n in 0..3 {
            if faces[n].len() != sizes[n + 1] {
                return Err(Error::InvalidNerve(format!("level {} has {} face lists", n + 1, faces[n].len())));
            }
            for (x, f) in faces[n].iter().enumerate() {
                if f.len() != n + 2 {
                    return Err(Error::InvalidNerve(format!("cell {x} of level {} needs {} faces", n + 1, n + 2)));
                }
                if let Some(&bad) = f.iter().find(|&&y| y >= sizes[n]) {
                    return Err(Error::InvalidNerve(format!("face {bad} out of range at level {n}")));
                }
            }
        }
        for n in 0..4 {
            if labels[n].len() != sizes[n] {
                return Err(Error::InvalidNerve(format!("level {n} has {} labels", labels[n].len())));
            }
        }
        let nerve = Nerve { sizes, faces, labels };
        nerve.check_simplicial_identities()?;
        Ok(nerve)
    }

    pub fn check_simplicial_identities(&self) -> Result<()> {
        // x in level m = n + 2, faces to level n
        for m in 2..=TOP_LEVEL {
            for x in 0..self.sizes[m] {
                for j in 1..=m {
                    for i in 0..j {
                        let lhs = self.face(m - 1, i, self.face(m, j, x));
                        let rhs = self.face(m - 1, j - 1, self.face(m, i, x));
                        if lhs != rhs {
                            return Err(Error::InvalidNerve(format!(
                                "d_{i} d_{j} ≠ d_{} d_{i} on cell {x} of level {m}",
                                j - 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self, level: usize) -> usize {
        self.sizes[level]
    }

    pub fn sizes(&self) -> [usize; 4] {
        self.sizes
    }

    /// Total number of cells over all levels.
    pub fn cells(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// `d_i(x)` for `x` in `level ≥ 1`.
    pub fn face(&self, level: usize, i: usize, x: usize) -> usize {
        self.faces[level - 1][x][i]
    }

    pub fn faces(&self) -> &[Vec<Vec<usize>>; 3] {
        &self.faces
    }

    pub fn label(&self, level: usize, x: usize) -> &str {
        &self.labels[level][x]
    }

    /// One cell at each level.
    pub fn point() -> Self {
        cech_nerve(&Cover::single()).expect("point cover is valid")
    }

    /// Circle covered by three arcs: pairwise overlaps connected, no triple
    /// overlap.
    pub fn circle3() -> Self {
        cech_nerve(&Cover::circle3()).expect("circle cover is valid")
    }

    /// Same nerve with cells renumbered: new index of old cell `x` at level
    /// `n` is `perms[n][x]`.
    pub fn relabel(&self, perms: &[Vec<usize>; 4]) -> Result<Nerve> {
        for n in 0..4 {
            let mut seen = perms[n].clone();
            seen.sort_unstable();
            if seen != (0..self.sizes[n]).collect::<Vec<_>>() {
                return Err(Error::InvalidNerve(format!("relabeling of level {n} is not a permutation")));
            }
        }
        let mut faces: [Vec<Vec<usize>>; 3] = Default::default();
        for n in 0..3 {
            faces[n] = vec![vec![]; self.sizes[n + 1]];
            for x in 0..self.sizes[n + 1] {
                faces[n][perms[n + 1][x]] = self.faces[n][x].iter().map(|&y| perms[n][y]).collect();
            }
        }
        let mut labels: [Vec<String>; 4] = Default::default();
        for n in 0..4 {
            labels[n] = vec![String::new(); self.sizes[n]];
            for x in 0..self.sizes[n] {
                labels[n][perms[n][x]] = self.labels[n][x].clone();
            }
        }
        Nerve::with_labels(self.sizes, faces, labels)
    }
}

/// Nonempty intersection of the parts in `parts` (as a set), with its
/// connected components. `parents[i][c]` is the component of the
/// intersection without part `i` that contains component `c`; it may be
/// omitted when that smaller intersection is connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Intersection {
    pub parts: Vec<usize>,
    pub components: usize,
    pub parents: BTreeMap<usize, Vec<usize>>,
}

impl Intersection {
    pub fn connected(parts: Vec<usize>) -> Self {
        Intersection { parts, components: 1, parents: BTreeMap::new() }
    }
}

/// A finite cover: named parts plus the table of nonempty intersections of
/// two or more parts. Single parts are nonempty and connected unless listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    pub parts: Vec<String>,
    pub intersections: Vec<Intersection>,
}

impl Cover {
    pub fn single() -> Self {
        Cover { parts: vec!["U".into()], intersections: vec![] }
    }

    pub fn circle3() -> Self {
        Cover {
            parts: vec!["U0".into(), "U1".into(), "U2".into()],
            intersections: vec![
                Intersection::connected(vec![0, 1]),
                Intersection::connected(vec![0, 2]),
                Intersection::connected(vec![1, 2]),
            ],
        }
    }

    pub fn disjoint(n: usize) -> Self {
        Cover { parts: (0..n).map(|i| format!("U{i}")).collect(), intersections: vec![] }
    }
}

type Key = BTreeSet<usize>;

pub fn cech_nerve(cover: &Cover) -> Result<Nerve> {
    let k = cover.parts.len();
    if k == 0 {
        return Err(Error::InvalidNerve("cover has no parts".into()));
    }
    let mut table: HashMap<Key, &Intersection> = HashMap::new();
    for int in &cover.intersections {
        let key: Key = int.parts.iter().copied().collect();
        if key.is_empty() || key.iter().any(|&p| p >= k) {
            return Err(Error::InvalidNerve(format!("intersection {:?} names unknown parts", int.parts)));
        }
        if int.components == 0 {
            return Err(Error::InvalidNerve(format!("intersection {:?} is listed with no components", int.parts)));
        }
        if table.insert(key, int).is_some() {
            return Err(Error::InvalidNerve(format!("intersection {:?} listed twice", int.parts)));
        }
    }
    let components = |s: &Key| -> usize {
        match table.get(s) {
            Some(int) => int.components,
            None if s.len() == 1 => 1,
            None => 0,
        }
    };
    // closure under subsets and parent maps
    for (key, int) in &table {
        if key.len() < 2 {
            continue;
        }
        for &i in key {
            let mut sub = key.clone();
            sub.remove(&i);
            let sub_c = components(&sub);
            if sub_c == 0 {
                return Err(Error::InvalidNerve(format!(
                    "inconsistent table: {:?} is nonempty but {:?} is empty",
                    int.parts,
                    sub.iter().collect::<Vec<_>>()
                )));
            }
            match int.parents.get(&i) {
                Some(p) if p.len() != int.components || p.iter().any(|&c| c >= sub_c) => {
                    return Err(Error::InvalidNerve(format!("bad parent map of {:?} dropping part {i}", int.parts)));
                }
                None if sub_c > 1 => {
                    return Err(Error::InvalidNerve(format!(
                        "{:?} needs a parent map dropping part {i}: the smaller intersection is disconnected",
                        int.parts
                    )));
                }
                _ => {}
            }
        }
    }
    let parent = |s: &Key, c: usize, dropped: usize| -> usize {
        table.get(s).and_then(|int| int.parents.get(&dropped)).map_or(0, |p| p[c])
    };

    let mut cells: [Vec<(Vec<usize>, usize)>; 4] = Default::default();
    let mut index: [HashMap<(Vec<usize>, usize), usize>; 4] = Default::default();
    for n in 0..=TOP_LEVEL {
        for tuple in non_decreasing(k, n + 1) {
            let key: Key = tuple.iter().copied().collect();
            for c in 0..components(&key) {
                index[n].insert((tuple.clone(), c), cells[n].len());
                cells[n].push((tuple.clone(), c));
            }
        }
    }
    let mut faces: [Vec<Vec<usize>>; 3] = Default::default();
    for n in 1..=TOP_LEVEL {
        for (tuple, c) in &cells[n] {
            let key: Key = tuple.iter().copied().collect();
            let fs = (0..=n)
                .map(|i| {
                    let mut t = tuple.clone();
                    let dropped = t.remove(i);
                    let sub: Key = t.iter().copied().collect();
                    let c2 = if sub == key { *c } else { parent(&key, *c, dropped) };
                    index[n - 1][&(t, c2)]
                })
                .collect();
            faces[n - 1].push(fs);
        }
    }
    let sizes = [0, 1, 2, 3].map(|n| cells[n].len());
    let labels = [0, 1, 2, 3].map(|n| {
        cells[n]
            .iter()
            .map(|(t, c)| {
                let names: Vec<&str> = t.iter().map(|&i| cover.parts[i].as_str()).collect();
                let multi = components(&t.iter().copied().collect()) > 1;
                if multi {
                    format!("({})#{c}", names.join(","))
                } else {
                    format!("({})", names.join(","))
                }
            })
            .collect()
    });
    Nerve::with_labels(sizes, faces, labels)
}

fn non_decreasing(k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut t = vec![0usize; len];
    loop {
        out.push(t.clone());
        // next non-decreasing tuple in lexicographic order
        let Some(pos) = (0..len).rev().find(|&p| t[p] + 1 < k) else { return out };
        let v = t[pos] + 1;
        for q in pos..len {
            t[q] = v;
        }
    }
}
