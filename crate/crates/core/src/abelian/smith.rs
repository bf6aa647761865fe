//! Smith normal form over the integers.
//!
//! The elimination works on a copy of the input and records every row
//! operation in `u` (and its inverse in `u_inv`) and every column operation
//! in `v`, so that `u * m * v == d` at the end.

use super::matrix::Matrix;

/// Result of [`smith_normal_form`].
#[derive(Debug, Clone)]
pub struct Smith {
    pub u: Matrix,
    pub u_inv: Matrix,
    pub d: Matrix,
    pub v: Matrix,
    pub rank: usize,
}

impl Smith {
    /// Diagonal entries `d_1 | d_2 | ...` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)]).collect()
    }
}

/// Computes `(U, D, V)` with `U·M·V = D`, `D` diagonal with non-negative
/// entries forming a divisibility chain, `U` and `V` unimodular.
///
/// Alternates row and column Hermite reductions (entries above each pivot
/// reduced modulo it) until the matrix is diagonal up to a column
/// permutation, then repairs the divisibility chain pairwise. The Hermite
/// reductions keep intermediate entries bounded by the pivots.
pub fn smith_normal_form(m: &Matrix) -> Smith {
    let rows = m.rows();
    let cols = m.cols();
    let mut st = State { a: Wide::from_matrix(m), u: Wide::identity(rows), u_inv: Wide::identity(rows), v: Wide::identity(cols) };
    loop {
        st.row_hermite();
        st.reduce_kernels();
        if st.is_monomial() {
            break;
        }
        st.col_hermite();
        st.reduce_kernels();
        if st.is_monomial() {
            break;
        }
    }
    // bring the pivot of row r into column r
    let mut rank = 0;
    for r in 0..rows {
        if let Some(c) = (0..cols).find(|&c| st.a.at(r, c) != 0) {
            st.swap_rows(rank, r);
            st.swap_cols(rank, c);
            rank += 1;
        }
    }
    for i in 0..rank {
        for j in i + 1..rank {
            st.fix_divisibility(i, j);
        }
    }
    for i in 0..rank {
        if st.a.at(i, i) < 0 {
            st.negate_row(i);
        }
    }
    Smith { u: st.u.to_matrix(), u_inv: st.u_inv.to_matrix(), d: st.a.to_matrix(), v: st.v.to_matrix(), rank }
}

/// Basis of the integer kernel lattice `{x : m·x = 0}` as the columns of the
/// returned matrix.
pub fn kernel_lattice(m: &Matrix) -> Matrix {
    let s = smith_normal_form(m);
    let idx: Vec<usize> = (s.rank..m.cols()).collect();
    s.v.select_columns(&idx)
}

/// One integer solution of `m·x = b`, if any exists.
pub fn solve(m: &Matrix, b: &[i64]) -> Option<Vec<i64>> {
    assert_eq!(b.len(), m.rows(), "right-hand side length");
    let s = smith_normal_form(m);
    solve_with(&s, b)
}

pub(crate) fn solve_with(s: &Smith, b: &[i64]) -> Option<Vec<i64>> {
    let c = s.u.mul_vec(b);
    let mut y = vec![0i64; s.v.rows()];
    for (i, &ci) in c.iter().enumerate() {
        if i < s.rank {
            let d = s.d[(i, i)];
            if ci % d != 0 {
                return None;
            }
            y[i] = ci / d;
        } else if ci != 0 {
            return None;
        }
    }
    Some(s.v.mul_vec(&y))
}

/// `(g, x, y)` with `g = gcd(a, b) > 0` and `x·a + y·b = g`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i128, 0i128);
    let (mut y0, mut y1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// Nearest integer to `a / b`.
fn round_div(a: i128, b: i128) -> i128 {
    let q = a / b;
    let r = a - q * b;
    if 2 * r.abs() > b.abs() {
        q + if (a < 0) == (b < 0) { 1 } else { -1 }
    } else {
        q
    }
}

const OVERFLOW: &str = "integer overflow in exact matrix arithmetic";

fn mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect(OVERFLOW)
}

fn add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect(OVERFLOW)
}

/// Dense row-major working matrix with 128-bit entries.
#[derive(Clone)]
struct Wide {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl Wide {
    fn from_matrix(m: &Matrix) -> Self {
        let data = (0..m.rows()).flat_map(|i| m.row(i).iter().map(|&x| x as i128).collect::<Vec<_>>()).collect();
        Wide { rows: m.rows(), cols: m.cols(), data }
    }

    fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Wide { rows: n, cols: n, data }
    }

    fn to_matrix(&self) -> Matrix {
        let rows: Vec<Vec<i64>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| i64::try_from(self.at(i, j)).expect(OVERFLOW)).collect())
            .collect();
        Matrix::from_rows(self.rows, self.cols, &rows).expect("rectangular")
    }

    fn at(&self, i: usize, j: usize) -> i128 {
        self.data[i * self.cols + j]
    }

    fn row(&self, i: usize) -> Vec<i128> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    fn column(&self, j: usize) -> Vec<i128> {
        (0..self.rows).map(|i| self.at(i, j)).collect()
    }

    fn max_abs(&self) -> i128 {
        self.data.iter().map(|x| x.abs()).max().unwrap_or(0)
    }

    fn row_is_zero(&self, i: usize) -> bool {
        (0..self.cols).all(|j| self.at(i, j) == 0)
    }

    fn col_is_zero(&self, j: usize) -> bool {
        (0..self.rows).all(|i| self.at(i, j) == 0)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn combine_cols(&mut self, i: usize, j: usize, [x, y, z, w]: [i128; 4]) {
        for k in 0..self.rows {
            let (p, q) = (self.at(k, i), self.at(k, j));
            self.data[k * self.cols + i] = add(mul(x, p), mul(y, q));
            self.data[k * self.cols + j] = add(mul(z, p), mul(w, q));
        }
    }

    /// row[dst] += k·row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: i128) {
        for c in 0..self.cols {
            let v = add(self.at(dst, c), mul(k, self.at(src, c)));
            self.data[dst * self.cols + c] = v;
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, k: i128) {
        for r in 0..self.rows {
            let v = add(self.at(r, dst), mul(k, self.at(r, src)));
            self.data[r * self.cols + dst] = v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            self.data[i * self.cols + c] = -self.data[i * self.cols + c];
        }
    }

    fn negate_col(&mut self, j: usize) {
        for r in 0..self.rows {
            self.data[r * self.cols + j] = -self.data[r * self.cols + j];
        }
    }
}

struct State {
    a: Wide,
    u: Wide,
    u_inv: Wide,
    v: Wide,
}

impl State {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
    }

    /// row[dst] += k·row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: i128) {
        if k == 0 {
            return;
        }
        self.a.add_row(dst, src, k);
        self.u.add_row(dst, src, k);
        self.u_inv.add_col(src, dst, -k);
    }

    fn add_col(&mut self, dst: usize, src: usize, k: i128) {
        if k == 0 {
            return;
        }
        self.a.add_col(dst, src, k);
        self.v.add_col(dst, src, k);
    }

    /// Columns `(i, j)` replaced by `[[x, y], [z, w]]` combinations; determinant 1.
    fn transform_cols(&mut self, i: usize, j: usize, c: [i128; 4]) {
        self.a.combine_cols(i, j, c);
        self.v.combine_cols(i, j, c);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    fn negate_col(&mut self, j: usize) {
        self.a.negate_col(j);
        self.v.negate_col(j);
    }

    /// Row echelon form with positive pivots and the entries above each
    /// pivot reduced into `0..pivot`. Each column is cleared by Euclid steps
    /// on the smallest entry, with nearest-integer quotients.
    fn row_hermite(&mut self) {
        let (rows, cols) = (self.a.rows, self.a.cols);
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            loop {
                let Some(p) = (r..rows).filter(|&i| self.a.at(i, c) != 0).min_by_key(|&i| self.a.at(i, c).abs())
                else {
                    break;
                };
                if p != r {
                    self.swap_rows(r, p);
                }
                let mut done = true;
                for i in r + 1..rows {
                    if self.a.at(i, c) != 0 {
                        self.add_row(i, r, -round_div(self.a.at(i, c), self.a.at(r, c)));
                        done &= self.a.at(i, c) == 0;
                    }
                }
                if done {
                    break;
                }
            }
            if self.a.at(r, c) == 0 {
                continue;
            }
            if self.a.at(r, c) < 0 {
                self.negate_row(r);
            }
            let p = self.a.at(r, c);
            for i in 0..r {
                self.add_row(i, r, -self.a.at(i, c).div_euclid(p));
            }
            r += 1;
        }
    }

    /// Column analogue of [`State::row_hermite`].
    fn col_hermite(&mut self) {
        let (rows, cols) = (self.a.rows, self.a.cols);
        let mut c = 0;
        for r in 0..rows {
            if c == cols {
                break;
            }
            loop {
                let Some(p) = (c..cols).filter(|&j| self.a.at(r, j) != 0).min_by_key(|&j| self.a.at(r, j).abs())
                else {
                    break;
                };
                if p != c {
                    self.swap_cols(c, p);
                }
                let mut done = true;
                for j in c + 1..cols {
                    if self.a.at(r, j) != 0 {
                        self.add_col(j, c, -round_div(self.a.at(r, j), self.a.at(r, c)));
                        done &= self.a.at(r, j) == 0;
                    }
                }
                if done {
                    break;
                }
            }
            if self.a.at(r, c) == 0 {
                continue;
            }
            if self.a.at(r, c) < 0 {
                self.negate_col(c);
            }
            let p = self.a.at(r, c);
            for j in 0..c {
                self.add_col(j, c, -self.a.at(r, j).div_euclid(p));
            }
            c += 1;
        }
    }

    /// Rows of `u` whose row of `a` vanishes span the left kernel; they may
    /// be recombined, and added to any other row, without changing `a`.
    /// Likewise for columns of `v`. Once entries pass [`REDUCE_THRESHOLD`],
    /// both kernel blocks are LLL-reduced and the remaining rows (columns)
    /// are size-reduced against them.
    fn reduce_kernels(&mut self) {
        let (rows, cols) = (self.a.rows, self.a.cols);
        if self.u.max_abs().max(self.u_inv.max_abs()) > REDUCE_THRESHOLD {
            let zero: Vec<usize> = (0..rows).filter(|&i| self.a.row_is_zero(i)).collect();
            let basis = |st: &State| zero.iter().map(|&i| st.u.row(i)).collect::<Vec<_>>();
            for op in lll(basis(self)) {
                match op {
                    Op::Add { dst, src, k } => self.add_row(zero[dst], zero[src], k),
                    Op::Swap(i, j) => self.swap_rows(zero[i], zero[j]),
                }
            }
            let b = basis(self);
            for i in (0..rows).filter(|i| !zero.contains(i)) {
                for (j, k) in nearest_plane(&b, &self.u.row(i)) {
                    self.add_row(i, zero[j], -k);
                }
            }
        }
        if self.v.max_abs() > REDUCE_THRESHOLD {
            let zero: Vec<usize> = (0..cols).filter(|&j| self.a.col_is_zero(j)).collect();
            let basis = |st: &State| zero.iter().map(|&j| st.v.column(j)).collect::<Vec<_>>();
            for op in lll(basis(self)) {
                match op {
                    Op::Add { dst, src, k } => self.add_col(zero[dst], zero[src], k),
                    Op::Swap(i, j) => self.swap_cols(zero[i], zero[j]),
                }
            }
            let b = basis(self);
            for j in (0..cols).filter(|j| !zero.contains(j)) {
                for (l, k) in nearest_plane(&b, &self.v.column(j)) {
                    self.add_col(j, zero[l], -k);
                }
            }
        }
    }

    /// At most one nonzero entry in every row and every column.
    fn is_monomial(&self) -> bool {
        let (rows, cols) = (self.a.rows, self.a.cols);
        (0..rows).all(|i| (0..cols).filter(|&j| self.a.at(i, j) != 0).count() <= 1)
            && (0..cols).all(|j| (0..rows).filter(|&i| self.a.at(i, j) != 0).count() <= 1)
    }

    /// Turns `diag(a, b)` at `(i, j)` into `diag(gcd, lcm)` when `a ∤ b`.
    fn fix_divisibility(&mut self, i: usize, j: usize) {
        let (a, b) = (self.a.at(i, i), self.a.at(j, j));
        if b % a == 0 {
            return;
        }
        let (g, x, y) = ext_gcd(a, b);
        self.add_row(i, j, 1);
        self.transform_cols(i, j, [x, y, -(b / g), a / g]);
        let k = self.a.at(j, i) / g;
        self.add_row(j, i, -k);
    }
}

/// Largest transform entry tolerated before kernel blocks are reduced.
const REDUCE_THRESHOLD: i128 = 1 << 20;

enum Op {
    Add { dst: usize, src: usize, k: i128 },
    Swap(usize, usize),
}

fn gram_schmidt(b: &[Vec<i128>]) -> (Vec<Vec<f64>>, Vec<f64>) {
    let n = b.len();
    let mut star: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut mu = vec![vec![0.0; n]; n];
    let mut norms = vec![0.0; n];
    for i in 0..n {
        let mut v: Vec<f64> = b[i].iter().map(|&x| x as f64).collect();
        for j in 0..i {
            let dot: f64 = b[i].iter().zip(&star[j]).map(|(&x, y)| x as f64 * y).sum();
            mu[i][j] = if norms[j] > 0.0 { dot / norms[j] } else { 0.0 };
            for (vk, sk) in v.iter_mut().zip(&star[j]) {
                *vk -= mu[i][j] * sk;
            }
        }
        norms[i] = v.iter().map(|x| x * x).sum();
        star.push(v);
    }
    (mu, norms)
}

/// Float multiplier rounded to an integer, or `None` when it is zero or too
/// large to trust.
fn multiplier(x: f64) -> Option<i128> {
    let q = x.round();
    (q != 0.0 && q.abs() < 1e30).then_some(q as i128)
}

/// LLL reduction (δ = 3/4) of independent integer vectors, returned as the
/// list of unimodular operations that performs it. Gram-Schmidt data is kept
/// in floating point; it only guides the exact integer operations.
fn lll(mut b: Vec<Vec<i128>>) -> Vec<Op> {
    let n = b.len();
    let mut ops = vec![];
    if n < 2 {
        return ops;
    }
    let (mut mu, mut norms) = gram_schmidt(&b);
    let mut k = 1;
    let mut budget = 1000 * n * n;
    while k < n && budget > 0 {
        budget -= 1;
        let mut changed = false;
        for j in (0..k).rev() {
            if let Some(q) = multiplier(mu[k][j]) {
                let bj = b[j].clone();
                for (x, y) in b[k].iter_mut().zip(&bj) {
                    *x = add(*x, mul(-q, *y));
                }
                ops.push(Op::Add { dst: k, src: j, k: -q });
                changed = true;
            }
        }
        if changed {
            (mu, norms) = gram_schmidt(&b);
        }
        if norms[k] >= (0.75 - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1] {
            k += 1;
        } else {
            b.swap(k, k - 1);
            ops.push(Op::Swap(k, k - 1));
            (mu, norms) = gram_schmidt(&b);
            k = (k - 1).max(1);
        }
    }
    ops
}

/// Multipliers `(j, k)` such that `v − Σ k·b_j` is size-reduced against the
/// basis `b`.
fn nearest_plane(b: &[Vec<i128>], v: &[i128]) -> Vec<(usize, i128)> {
    let n = b.len();
    if n == 0 {
        return vec![];
    }
    let mut ext = b.to_vec();
    ext.push(v.to_vec());
    let (mu, norms) = gram_schmidt(&ext);
    let mut coeff: Vec<f64> = mu[n][..n].to_vec();
    let mut out = vec![];
    for j in (0..n).rev() {
        if norms[j] == 0.0 {
            continue;
        }
        if let Some(q) = multiplier(coeff[j]) {
            out.push((j, q));
            coeff[j] -= q as f64;
            for l in 0..j {
                coeff[l] -= q as f64 * mu[j][l];
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &Matrix) -> Smith {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d, "U·M·V = D for {m:?}");
        assert_eq!(&s.u * &s.u_inv, Matrix::identity(m.rows()));
        assert_eq!(s.u.determinant().abs(), 1);
        assert_eq!(s.v.determinant().abs(), 1);
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert_eq!(s.d[(i, j)], 0);
                }
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(w[0] >= 0 && w[1] >= 0);
            if w[0] == 0 {
                assert_eq!(w[1], 0);
            } else {
                assert_eq!(w[1] % w[0], 0, "divisibility chain {diag:?}");
            }
        }
        s
    }

    #[test]
    fn one_by_one() {
        let s = check(&Matrix::from_rows(1, 1, &[vec![1]]).unwrap());
        assert_eq!(s.u, Matrix::identity(1));
        assert_eq!(s.v, Matrix::identity(1));
        assert_eq!(s.diagonal(), vec![1]);
        let z = check(&Matrix::from_rows(1, 1, &[vec![0]]).unwrap());
        assert_eq!(z.diagonal(), vec![0]);
        assert_eq!(z.rank, 0);
    }

    #[test]
    fn two_by_two_example() {
        let m = Matrix::from_rows(2, 2, &[vec![2, 4], vec![-2, 6]]).unwrap();
        assert_eq!(check(&m).diagonal(), vec![2, 10]);
    }

    #[test]
    fn empty_shapes() {
        check(&Matrix::zeros(0, 3));
        check(&Matrix::zeros(3, 0));
        check(&Matrix::zeros(0, 0));
    }

    #[test]
    fn needs_divisibility_fix() {
        let m = Matrix::diagonal(&[2, 3]);
        assert_eq!(check(&m).diagonal(), vec![1, 6]);
        let m = Matrix::diagonal(&[4, 6, 0]);
        assert_eq!(check(&m).diagonal(), vec![2, 12, 0]);
    }

    #[test]
    fn kernel_and_solve() {
        let m = Matrix::from_rows(1, 3, &[vec![2, 4, 6]]).unwrap();
        let k = kernel_lattice(&m);
        assert_eq!(k.cols(), 2);
        assert!((&m * &k).is_zero());
        assert_eq!(solve(&m, &[3]), None);
        let x = solve(&m, &[8]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![8]);
    }
}
