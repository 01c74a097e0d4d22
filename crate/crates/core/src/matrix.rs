//! Dense matrices and subspaces over F_p.
//!
//! Matrices are row-major. Vectors are plain `Vec<u32>` columns. Every
//! operation that performs arithmetic takes the field explicitly, so a
//! `Matrix` is only a table of residues and carries no characteristic.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::Fp;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]({}x{})", self.rows, self.cols)
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row-major data. Panics if the length is wrong.
    pub fn from_data(rows: usize, cols: usize, data: Vec<u32>) -> Matrix {
        assert_eq!(rows * cols, data.len(), "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    /// Builds a matrix whose rows are the given vectors (all of length `cols`).
    pub fn from_rows(cols: usize, rows: &[Vec<u32>]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, cols: &[Vec<u32>]) -> Matrix {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &v) in c.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [u32] {
        &mut self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix, fp: Fp) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        let p = fp.p() as u64;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.data[idx] = ((out.data[idx] as u64 + a * rhs.get(k, j) as u64) % p) as u32;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[u32], fp: Fp) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(0u32, |acc, (&a, &b)| fp.add(acc, fp.mul(a, b))))
            .collect()
    }

    pub fn add(&self, rhs: &Matrix, fp: Fp) -> Matrix {
        assert_eq!(self.shape(), rhs.shape());
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| fp.add(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Matrix, fp: Fp) -> Matrix {
        assert_eq!(self.shape(), rhs.shape());
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| fp.sub(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: u32, fp: Fp) -> Matrix {
        let data = self.data.iter().map(|&a| fp.mul(a, s)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self + s * rhs`
    pub fn add_scaled(&self, rhs: &Matrix, s: u32, fp: Fp) -> Matrix {
        assert_eq!(self.shape(), rhs.shape());
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| fp.add(a, fp.mul(s, b))).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows);
        let mut m = Matrix::zeros(self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c));
            }
            for c in 0..rhs.cols {
                m.set(r, self.cols + c, rhs.get(r, c));
            }
        }
        m
    }

    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Matrix { rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn blocks(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
        a.hstack(b).vstack(&c.hstack(d))
    }

    pub fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
        Matrix::blocks(a, &Matrix::zeros(a.rows, b.cols), &Matrix::zeros(b.rows, a.cols), b)
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, self.get(r0 + r, c0 + c));
            }
        }
        m
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self, fp: Fp) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if piv != row {
                for c in 0..m.cols {
                    m.data.swap(piv * m.cols + c, row * m.cols + c);
                }
            }
            let inv = fp.inv(m.get(row, col));
            for c in col..m.cols {
                let v = fp.mul(m.get(row, c), inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = fp.sub(m.get(r, c), fp.mul(factor, m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, fp: Fp) -> usize {
        self.rref(fp).1.len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn nullspace(&self, fp: Fp) -> Vec<Vec<u32>> {
        let (r, pivots) = self.rref(fp);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = fp.neg(r.get(i, free));
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self, fp: Fp) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n));
        let (r, pivots) = aug.rref(fp);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.submatrix(0, n, n, n))
    }

    pub fn is_invertible(&self, fp: Fp) -> bool {
        self.is_square() && self.rank(fp) == self.rows
    }

    pub fn pow(&self, k: usize, fp: Fp) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self, fp);
        }
        acc
    }
}

/// A linear subspace of `F_p^n`, stored as an RREF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn span<'a, I>(ambient: usize, vectors: I, fp: Fp) -> Subspace
    where
        I: IntoIterator<Item = &'a [u32]>,
    {
        let rows: Vec<Vec<u32>> = vectors.into_iter().map(|v| v.to_vec()).collect();
        Subspace::from_row_matrix(Matrix::from_rows(ambient, &rows), fp)
    }

    /// The row space of `m`.
    pub fn from_row_matrix(m: Matrix, fp: Fp) -> Subspace {
        let ambient = m.cols();
        let (r, pivots) = m.rref(fp);
        let basis = r.submatrix(0, 0, pivots.len(), ambient);
        Subspace { ambient, basis, pivots }
    }

    /// The column space of `m`.
    pub fn column_space(m: &Matrix, fp: Fp) -> Subspace {
        Subspace::from_row_matrix(m.transpose(), fp)
    }

    /// The kernel of `m`, a subspace of its source.
    pub fn kernel(m: &Matrix, fp: Fp) -> Subspace {
        let ns = m.nullspace(fp);
        Subspace::span(m.cols(), ns.iter().map(|v| v.as_slice()), fp)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors (rows of the RREF basis).
    pub fn basis(&self) -> Vec<Vec<u32>> {
        (0..self.dim()).map(|i| self.basis.row(i).to_vec()).collect()
    }

    /// Basis as the columns of an `ambient x dim` matrix.
    pub fn basis_columns(&self) -> Matrix {
        self.basis.transpose()
    }

    /// Normal form of `v` modulo this subspace: pivot coordinates are zero.
    pub fn reduce(&self, v: &[u32], fp: Fp) -> Vec<u32> {
        let mut w = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let f = w[pc];
            if f == 0 {
                continue;
            }
            for (c, wc) in w.iter_mut().enumerate() {
                *wc = fp.sub(*wc, fp.mul(f, self.basis.get(i, c)));
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32], fp: Fp) -> bool {
        self.reduce(v, fp).iter().all(|&x| x == 0)
    }

    pub fn contains_space(&self, other: &Subspace, fp: Fp) -> bool {
        other.basis().iter().all(|v| self.contains(v, fp))
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[u32], fp: Fp) -> Option<Vec<u32>> {
        if !self.contains(v, fp) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    /// Indices of the standard basis vectors spanning a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Coordinates of the class of `v` in the quotient `F^n / self`, with
    /// respect to the complement basis from [`Subspace::complement_indices`].
    pub fn quotient_coords(&self, v: &[u32], fp: Fp) -> Vec<u32> {
        let r = self.reduce(v, fp);
        self.complement_indices().into_iter().map(|c| r[c]).collect()
    }

    pub fn sum(&self, other: &Subspace, fp: Fp) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_row_matrix(self.basis.vstack(&other.basis), fp)
    }

    /// Linear forms cutting out this subspace.
    pub fn annihilator(&self, fp: Fp) -> Matrix {
        let ns = self.basis.nullspace(fp);
        Matrix::from_rows(self.ambient, &ns)
    }

    pub fn intersection(&self, other: &Subspace, fp: Fp) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let constraints = self.annihilator(fp).vstack(&other.annihilator(fp));
        Subspace::kernel(&constraints, fp)
    }

    /// Image of this subspace under `m` (a subspace of the target of `m`).
    pub fn image_under(&self, m: &Matrix, fp: Fp) -> Subspace {
        let imgs: Vec<Vec<u32>> = self.basis().iter().map(|v| m.apply(v, fp)).collect();
        Subspace::span(m.rows(), imgs.iter().map(|v| v.as_slice()), fp)
    }
}

/// Calls `f` on every vector of `F_p^n`, in lexicographic order.
pub fn for_each_vector(n: usize, fp: Fp, mut f: impl FnMut(&[u32]) -> bool) {
    let mut v = vec![0u32; n];
    loop {
        if !f(&v) {
            return;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < fp.p() {
                break;
            }
            v[i] = 0;
        }
    }
}

/// All subspaces of `F_p^n`, enumerated via their RREF bases.
pub fn all_subspaces(n: usize, fp: Fp) -> Vec<Subspace> {
    let mut out = Vec::new();
    for k in 0..=n {
        // choose pivot set
        let mut pivots: Vec<usize> = (0..k).collect();
        loop {
            // free positions: for row i, columns > pivots[i] that are not pivots
            let mut free = Vec::new();
            for (i, &pc) in pivots.iter().enumerate() {
                for c in pc + 1..n {
                    if !pivots.contains(&c) {
                        free.push((i, c));
                    }
                }
            }
            for_each_vector(free.len(), fp, |vals| {
                let mut m = Matrix::zeros(k, n);
                for (i, &pc) in pivots.iter().enumerate() {
                    m.set(i, pc, 1);
                }
                for (&(i, c), &v) in free.iter().zip(vals) {
                    m.set(i, c, v);
                }
                out.push(Subspace { ambient: n, basis: m, pivots: pivots.clone() });
                true
            });
            // next combination
            if !next_combination(&mut pivots, n) {
                break;
            }
        }
    }
    out
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn rref_and_rank() {
        let fp = Fp::new(3).unwrap();
        let m = Matrix::from_data(2, 3, vec![1, 2, 0, 2, 1, 0]);
        // second row = 2 * first row mod 3
        assert_eq!(m.rank(fp), 1);
        let ns = m.nullspace(fp);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.apply(v, fp).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let fp = Fp::new(5).unwrap();
        let m = Matrix::from_data(2, 2, vec![2, 1, 1, 4]);
        let inv = m.inverse(fp).unwrap();
        assert_eq!(m.mul(&inv, fp), Matrix::identity(2));
        assert!(Matrix::from_data(2, 2, vec![1, 2, 2, 4]).inverse(fp).is_none());
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        // number of subspaces of F_2^3 is 1 + 7 + 7 + 1
        assert_eq!(all_subspaces(3, f2()).len(), 16);
        // F_3^2: 1 + 4 + 1
        assert_eq!(all_subspaces(2, Fp::new(3).unwrap()).len(), 6);
        assert_eq!(all_subspaces(0, f2()).len(), 1);
    }

    #[test]
    fn intersection_and_sum() {
        let fp = f2();
        let a = Subspace::span(3, [&[1u32, 0, 0][..], &[0, 1, 0][..]], fp);
        let b = Subspace::span(3, [&[0u32, 1, 0][..], &[0, 0, 1][..]], fp);
        assert_eq!(a.intersection(&b, fp).dim(), 1);
        assert!(a.sum(&b, fp).is_full());
        assert!(a.intersection(&b, fp).contains(&[0, 1, 0], fp));
    }

    #[test]
    fn quotient_coords_kill_subspace() {
        let fp = f2();
        let a = Subspace::span(3, [&[1u32, 1, 0][..]], fp);
        assert!(a.quotient_coords(&[1, 1, 0], fp).iter().all(|&x| x == 0));
        assert_eq!(a.quotient_coords(&[0, 0, 1], fp).len(), 2);
    }
}
