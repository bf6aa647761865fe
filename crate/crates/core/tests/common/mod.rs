//! Brute-force oracles. They use only element enumeration and the group
//! operations, never the library's enumerators or normal forms.

#![allow(dead_code)]

use std::collections::BTreeSet;

use unital_core::{Complex, Complex2, Complex3, FgAbGroup, GroupElem, GroupHom, Matrix, Nerve};

pub fn elems(g: &FgAbGroup) -> Vec<GroupElem> {
    g.elements().expect("finite group")
}

pub fn brute_kernel(f: &GroupHom) -> Vec<GroupElem> {
    elems(f.source()).into_iter().filter(|x| f.apply(x).unwrap().is_zero()).collect()
}

pub fn brute_image(f: &GroupHom) -> BTreeSet<Vec<i64>> {
    elems(f.source()).iter().map(|x| f.apply(x).unwrap().coords().to_vec()).collect()
}

/// `|ker d_out| / |im d_in|` at `degree`, by enumeration.
pub fn brute_homology_order(x: &Complex, degree: i32) -> u128 {
    let term = x.term(degree).unwrap();
    let cycles = match x.differential(degree).unwrap() {
        Some(d) => brute_kernel(d).len(),
        None => elems(term).len(),
    };
    let boundaries = if degree > x.min_degree() { brute_image(x.differential(degree - 1).unwrap().unwrap()).len() } else { 1 };
    assert_eq!(cycles % boundaries, 0);
    (cycles / boundaries) as u128
}

/// Saavedra units `(e, a)` with `λa = e`, and for every ordered pair the
/// number of `u` with `λu = e_s − e_t` and `2u + a_t = a_s + u`.
pub fn brute_saavedra(x: &Complex2) -> (usize, Vec<usize>) {
    let lam = x.lambda();
    let mut units = vec![];
    for e in elems(x.b()) {
        for a in elems(x.a()) {
            if lam.apply(&a).unwrap() == e {
                units.push((e.clone(), a));
            }
        }
    }
    let mut counts = vec![];
    for (es, as_) in &units {
        for (et, at) in &units {
            let n = elems(x.a())
                .iter()
                .filter(|u| {
                    lam.apply(u).unwrap() == es.sub(et).unwrap()
                        && u.scale(2).add(at).unwrap() == as_.add(u).unwrap()
                })
                .count();
            counts.push(n);
        }
    }
    (units.len(), counts)
}

/// Joyal-Kock units `(e, φ)` with `λφ = e`.
pub fn brute_jk_units(x: &Complex3) -> usize {
    let lam = x.lambda();
    elems(x.c()).iter().map(|e| elems(x.b()).iter().filter(|p| &lam.apply(p).unwrap() == e).count()).sum()
}

/// Torsor cocycles `(a, b)` on `nerve` modulo the full group `A(V_0)`,
/// counted by canonical forms (minimum over the whole orbit).
pub fn brute_torsor_classes(nerve: &Nerve, x: &Complex2) -> (usize, usize) {
    let (a_el, b_el) = (elems(x.a()), elems(x.b()));
    let lam = x.lambda();
    let (v0, v1, v2) = (nerve.size(0), nerve.size(1), nerve.size(2));
    let tuples = |n: usize, len: usize| -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out.into_iter().flat_map(|t: Vec<usize>| (0..n).map(move |k| [t.clone(), vec![k]].concat())).collect();
        }
        out
    };
    let mut cocycles = vec![];
    for a in tuples(a_el.len(), v1) {
        let av = |s: usize| &a_el[a[s]];
        let closed = (0..v2).all(|t| {
            av(nerve.face(2, 0, t)).add(av(nerve.face(2, 2, t))).unwrap() == *av(nerve.face(2, 1, t))
        });
        if !closed {
            continue;
        }
        for b in tuples(b_el.len(), v0) {
            let ok = (0..v1).all(|s| {
                b_el[b[nerve.face(1, 0, s)]] == b_el[b[nerve.face(1, 1, s)]].add(&lam.apply(av(s)).unwrap()).unwrap()
            });
            if ok {
                let av: Vec<GroupElem> = (0..v1).map(|s| av(s).clone()).collect();
                let bv: Vec<GroupElem> = b.iter().map(|&k| b_el[k].clone()).collect();
                cocycles.push((av, bv));
            }
        }
    }
    let key = |(a, b): &(Vec<GroupElem>, Vec<GroupElem>)| -> Vec<i64> {
        a.iter().chain(b).flat_map(|e| e.coords().to_vec()).collect()
    };
    let alphas = tuples(a_el.len(), v0);
    let classes: BTreeSet<Vec<i64>> = cocycles
        .iter()
        .map(|(a, b)| {
            alphas
                .iter()
                .map(|al| {
                    let na: Vec<GroupElem> = (0..v1)
                        .map(|s| {
                            a[s].add(&a_el[al[nerve.face(1, 0, s)]]).unwrap().sub(&a_el[al[nerve.face(1, 1, s)]]).unwrap()
                        })
                        .collect();
                    let nb: Vec<GroupElem> =
                        (0..v0).map(|v| b[v].add(&lam.apply(&a_el[al[v]]).unwrap()).unwrap()).collect();
                    key(&(na, nb))
                })
                .min()
                .unwrap()
        })
        .collect();
    (classes.len(), cocycles.len())
}

/// `|Z^r / (im M + n Z^r)|` by closing the column span inside `(Z/n)^r`.
pub fn brute_coker_mod(m: &Matrix, n: i64) -> u128 {
    let r = m.rows();
    let gens: Vec<Vec<i64>> = (0..m.cols()).map(|j| m.column(j).iter().map(|x| x.rem_euclid(n)).collect()).collect();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::from([vec![0; r]]);
    let mut stack = vec![vec![0; r]];
    while let Some(v) = stack.pop() {
        for g in &gens {
            let w: Vec<i64> = v.iter().zip(g).map(|(a, b)| (a + b) % n).collect();
            if seen.insert(w.clone()) {
                stack.push(w);
            }
        }
    }
    (n as u128).pow(r as u32) / seen.len() as u128
}

pub type BigMatrix = Vec<Vec<num_bigint::BigInt>>;

pub fn to_big(m: &Matrix) -> BigMatrix {
    m.row_vecs().into_iter().map(|r| r.into_iter().map(num_bigint::BigInt::from).collect()).collect()
}

pub fn big_mul(a: &BigMatrix, b: &BigMatrix, inner: usize, cols: usize) -> BigMatrix {
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum()).collect())
        .collect()
}

/// Exact determinant by fraction-free elimination.
pub fn big_det(m: &Matrix) -> num_bigint::BigInt {
    use num_traits::{One, Zero};
    let n = m.rows();
    assert_eq!(n, m.cols());
    let mut a = to_big(m);
    let mut sign = num_bigint::BigInt::one();
    let mut prev = num_bigint::BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else { return num_bigint::BigInt::zero() };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return num_bigint::BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}
