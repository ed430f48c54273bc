//! Exact linear algebra over the rationals.
//!
//! Sparse vectors are sorted `(column, value)` lists. [`Echelon`] keeps an
//! incrementally built row-echelon basis whose pivot is always the leftmost
//! nonzero column, so reduced forms are independent of insertion order.

use std::fmt;

use crate::rational::Rational;

pub type SparseVec = Vec<(u32, Rational)>;

/// Scratch accumulator indexed by column that remembers which slots it touched.
pub(crate) struct Accumulator {
    vals: Vec<Rational>,
    touched: Vec<u32>,
    mark: Vec<bool>,
}

impl Accumulator {
    pub fn new(width: usize) -> Self {
        Accumulator {
            vals: vec![Rational::ZERO; width],
            touched: Vec::new(),
            mark: vec![false; width],
        }
    }

    #[inline]
    pub fn add(&mut self, col: u32, v: &Rational) {
        let c = col as usize;
        if !self.mark[c] {
            self.mark[c] = true;
            self.touched.push(col);
        }
        self.vals[c] += v;
    }

    pub fn add_scaled(&mut self, row: &[(u32, Rational)], scale: &Rational) {
        for (c, v) in row {
            let p = scale * v;
            self.add(*c, &p);
        }
    }

    #[inline]
    pub fn get(&self, col: u32) -> &Rational {
        &self.vals[col as usize]
    }

    /// Drains the accumulator into a sorted sparse vector.
    pub fn take(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &c in &self.touched {
            let v = std::mem::take(&mut self.vals[c as usize]);
            self.mark[c as usize] = false;
            if !v.is_zero() {
                out.push((c, v));
            }
        }
        self.touched.clear();
        out
    }
}

/// Incremental echelon basis of a subspace of `Q^width`.
pub struct Echelon {
    width: usize,
    /// Row with leading entry 1 at the given column, if that column is a pivot.
    rows: Vec<Option<SparseVec>>,
    rank: usize,
    acc: Accumulator,
    reduced: bool,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: vec![None; width],
            rank: 0,
            acc: Accumulator::new(width),
            reduced: true,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows[col].is_some()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.as_ref().map(|_| i))
    }

    /// Reduces `v` against the current rows, eliminating every pivot column.
    fn reduce_full(&mut self, v: &[(u32, Rational)]) -> SparseVec {
        if v.is_empty() {
            return Vec::new();
        }
        for (c, x) in v {
            self.acc.add(*c, x);
        }
        let start = v[0].0 as usize;
        for col in start..self.width {
            if let Some(row) = &self.rows[col] {
                let coeff = self.acc.get(col as u32).clone();
                if !coeff.is_zero() {
                    let neg = -coeff;
                    self.acc.add_scaled(row, &neg);
                }
            }
        }
        self.acc.take()
    }

    /// Inserts `v`; returns the new pivot column, or `None` if `v` was dependent.
    pub fn insert(&mut self, v: &[(u32, Rational)]) -> Option<usize> {
        let r = self.reduce_full(v);
        let (lead, lv) = r.first()?.clone();
        let inv = lv.recip();
        let row: SparseVec = r.into_iter().map(|(c, x)| (c, &x * &inv)).collect();
        self.rows[lead as usize] = Some(row);
        self.rank += 1;
        self.reduced = false;
        Some(lead as usize)
    }

    /// Brings every row to reduced form (zeros in all other pivot columns).
    pub fn make_reduced(&mut self) {
        if self.reduced {
            return;
        }
        for col in (0..self.width).rev() {
            let Some(row) = self.rows[col].take() else {
                continue;
            };
            // Later pivot rows are already reduced, so one sweep suffices.
            for (c, x) in &row {
                self.acc.add(*c, x);
            }
            for &(c, _) in row.iter().skip(1) {
                if let Some(prow) = &self.rows[c as usize] {
                    let coeff = self.acc.get(c).clone();
                    if !coeff.is_zero() {
                        let neg = -coeff;
                        self.acc.add_scaled(prow, &neg);
                    }
                }
            }
            self.rows[col] = Some(self.acc.take());
        }
        self.reduced = true;
    }

    /// Normal form of `v` modulo the row space; requires [`Echelon::make_reduced`].
    pub fn normal_form(&mut self, v: &[(u32, Rational)]) -> SparseVec {
        assert!(self.reduced, "normal_form needs a reduced echelon basis");
        for (c, x) in v {
            match &self.rows[*c as usize] {
                None => self.acc.add(*c, x),
                Some(row) => {
                    for (rc, rx) in row.iter().skip(1) {
                        let p = x * rx;
                        self.acc.add(*rc, &(-p));
                    }
                }
            }
        }
        self.acc.take()
    }

    /// Whether `v` lies in the row space.
    pub fn contains(&mut self, v: &[(u32, Rational)]) -> bool {
        self.reduce_full(v).is_empty()
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseVec> {
        self.rows[pivot].as_ref()
    }
}

/// Dense matrix over the rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Parses rows of `p/q` strings.
    pub fn from_strs(rows: &[&[&str]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| s.parse().expect("bad rational")).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(i, j)] += p;
                    }
                }
            }
        }
        out
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)].is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self[(i, j)].is_zero()))
    }

    pub fn has_nonzero_diagonal(&self) -> bool {
        (0..self.rows.min(self.cols)).all(|i| !self[(i, i)].is_zero())
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.cols);
        for i in 0..self.rows {
            ech.insert(&dense_to_sparse(self.row(i)));
        }
        ech.rank()
    }

    /// Inverse by Gauss–Jordan elimination, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if piv != col {
                a.swap_rows(piv, col);
                inv.swap_rows(piv, col);
            }
            let s = a[(col, col)].recip();
            a.scale_row(col, &s);
            inv.scale_row(col, &s);
            for r in 0..n {
                if r != col && !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone();
                    a.sub_row_multiple(r, col, &f);
                    inv.sub_row_multiple(r, col, &f);
                }
            }
        }
        Some(inv)
    }

    /// Solves `x · self = b` for a row vector `x`, or `None` when the system
    /// is inconsistent. Free unknowns are set to zero.
    pub fn solve_left(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.cols, "right-hand side has the wrong length");
        // Columns of the augmented system `selfᵀ | bᵀ`.
        let mut a = Matrix::zeros(self.cols, self.rows + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                a[(j, i)] = self[(i, j)].clone();
            }
        }
        for (j, bj) in b.iter().enumerate() {
            a[(j, self.rows)] = bj.clone();
        }
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.rows {
            let Some(p) = (r..a.rows).find(|&i| !a[(i, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let s = a[(r, col)].recip();
            a.scale_row(r, &s);
            for i in 0..a.rows {
                if i != r && !a[(i, col)].is_zero() {
                    let f = a[(i, col)].clone();
                    a.sub_row_multiple(i, r, &f);
                }
            }
            pivots.push(col);
            r += 1;
        }
        if (r..a.rows).any(|i| !a[(i, self.rows)].is_zero()) {
            return None;
        }
        let mut x = vec![Rational::ZERO; self.rows];
        for (i, &col) in pivots.iter().enumerate() {
            x[col] = a[(i, self.rows)].clone();
        }
        Some(x)
    }

    /// Basis of `{x : self · x = 0}`, one vector per free column, in
    /// increasing order of that column; each has a 1 at its free column.
    pub fn null_space(&self) -> Vec<Vec<Rational>> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            let Some(p) = (r..a.rows).find(|&i| !a[(i, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let s = a[(r, col)].recip();
            a.scale_row(r, &s);
            for i in 0..a.rows {
                if i != r && !a[(i, col)].is_zero() {
                    let f = a[(i, col)].clone();
                    a.sub_row_multiple(i, r, &f);
                }
            }
            pivots.push(col);
            r += 1;
        }
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![Rational::ZERO; self.cols];
                v[free] = Rational::ONE;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = -a[(i, free)].clone();
                }
                v
            })
            .collect()
    }

    /// Rows `rows` and columns `cols` as a new matrix.
    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        Matrix::from_rows_sized(
            rows.len(),
            cols.len(),
            rows.flat_map(|i| cols.clone().map(move |j| (i, j)))
                .map(|ij| self[ij].clone())
                .collect(),
        )
    }

    fn from_rows_sized(rows: usize, cols: usize, data: Vec<Rational>) -> Matrix {
        Matrix { rows, cols, data }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Rational) {
        for j in 0..self.cols {
            let v = &self[(r, j)] * s;
            self[(r, j)] = v;
        }
    }

    fn sub_row_multiple(&mut self, r: usize, src: usize, f: &Rational) {
        for j in 0..self.cols {
            let s = &self[(src, j)];
            if !s.is_zero() {
                let v = &self[(r, j)] - &(f * s);
                self[(r, j)] = v;
            }
        }
    }

    /// Rows as `p/q` strings, comma separated, one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|x| format!("{x:>6}")).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

pub fn dense_to_sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i as u32, x.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &[(u32, Rational)], width: usize) -> Vec<Rational> {
    let mut out = vec![Rational::ZERO; width];
    for (c, x) in v {
        out[*c as usize] = x.clone();
    }
    out
}

/// Arithmetic modulo a 61-bit prime, used for fast full-rank certificates:
/// a matrix of full rank modulo `p` has full rank over `Q`.
pub mod modp {
    pub const PRIME: u64 = (1 << 61) - 1;

    #[inline]
    pub fn mul(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 * b as u128) % p as u128) as u64
    }

    #[inline]
    pub fn sub(a: u64, b: u64, p: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + p - b
        }
    }

    pub fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1u64;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b, p);
            }
            b = mul(b, b, p);
            e >>= 1;
        }
        r
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        assert!(a % p != 0, "inverse of zero mod p");
        pow(a, p - 2, p)
    }

    /// Rank of a dense matrix of residues.
    pub fn rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for col in 0..ncols {
            let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, piv);
            let inv_p = inv(rows[rank][col], p);
            for x in &mut rows[rank][col..ncols] {
                *x = mul(*x, inv_p, p);
            }
            let (head, tail) = rows.split_at_mut(rank + 1);
            let prow = &head[rank];
            for r in tail.iter_mut() {
                let f = r[col];
                if f != 0 {
                    for j in col..ncols {
                        r[j] = sub(r[j], mul(f, prow[j], p), p);
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn echelon_detects_dependence() {
        let mut e = Echelon::new(3);
        assert_eq!(e.insert(&[(0, q(1)), (1, q(2))]), Some(0));
        assert_eq!(e.insert(&[(1, q(1)), (2, q(1))]), Some(1));
        assert_eq!(e.insert(&[(0, q(1)), (1, q(3)), (2, q(1))]), None);
        assert_eq!(e.rank(), 2);
        e.make_reduced();
        // (0,0,1) reduces to itself since column 2 is free.
        assert_eq!(e.normal_form(&[(2, q(1))]), vec![(2, q(1))]);
        // e_1 = (1,2,0) - 2*(0,1,1) + 2 e_3  ->  normal form 2 e_3
        assert_eq!(e.normal_form(&[(0, q(1))]), vec![(2, q(2))]);
    }

    #[test]
    fn inverse_and_solve() {
        let m = Matrix::from_strs(&[&["2", "1"], &["1", "1"]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        let x = m.solve_left(&[q(3), q(2)]).unwrap();
        // x * m = (3, 2)  ->  x = (1, 1)
        assert_eq!(x, vec![q(1), q(1)]);
        assert!(Matrix::from_strs(&[&["1", "2"], &["2", "4"]])
            .inverse()
            .is_none());
    }

    #[test]
    fn modular_rank_matches_exact() {
        let m = Matrix::from_strs(&[&["1", "2", "3"], &["4", "5", "6"], &["7", "8", "9"]]);
        let p = modp::PRIME;
        let rows = (0..3)
            .map(|i| m.row(i).iter().map(|x| x.mod_prime(p).unwrap()).collect())
            .collect();
        assert_eq!(modp::rank(rows, p), 2);
        assert_eq!(m.rank(), 2);
    }
}
