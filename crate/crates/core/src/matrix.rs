//! Dense matrices over a [`Field`], stored row-major as element indices.

use std::fmt;

use crate::gf::Field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
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

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: &[Vec<u32>]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix { rows: rows.len(), cols, data: rows.concat() }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<u32>) -> Matrix {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
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

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
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

    pub fn add(&self, other: &Matrix, f: &Field) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix, f: &Field) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: u32, f: &Field) -> Matrix {
        let data = self.data.iter().map(|&a| f.mul(s, a)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Matrix, f: &Field) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Row vector times matrix: `v · self`.
    pub fn left_mul_vec(&self, v: &[u32], f: &Field) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0u32; self.cols];
        for (r, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(a, self.get(r, c)));
            }
        }
        out
    }

    /// Matrix times column vector: `self · v`.
    pub fn mul_vec(&self, v: &[u32], f: &Field) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
            .collect()
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let data = rows.iter().flat_map(|&r| self.row(r).iter().copied()).collect();
        Matrix { rows: rows.len(), cols: self.cols, data }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c));
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert!(self.rows == 0 || other.rows == 0 || self.cols == other.cols);
        let cols = if self.rows == 0 { other.cols } else { self.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols, data }
    }

    /// Block-diagonal sum `[self 0; 0 other]`.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let top = self.hstack(&Matrix::zeros(self.rows, other.cols));
        let bottom = Matrix::zeros(other.rows, self.cols).hstack(other);
        top.vstack(&bottom)
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref_in_place(&mut self, f: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            if inv != 1 {
                for j in c..self.cols {
                    let v = f.mul(inv, self.get(r, j));
                    self.set(r, j, v);
                }
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self, f: &Field) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(f);
        (m, pivots)
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.rref(f).1.len()
    }

    /// Basis of `{x : self · x = 0}`, as the rows of the result.
    pub fn nullspace(&self, f: &Field) -> Matrix {
        let (r, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(k, pc, f.neg(r.get(i, fc)));
            }
        }
        out
    }

    /// Rows of the reduced echelon form that are nonzero (a basis of the row space).
    pub fn row_basis(&self, f: &Field) -> Matrix {
        let (r, pivots) = self.rref(f);
        r.select_rows(&(0..pivots.len()).collect::<Vec<_>>())
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self, f: &Field) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Matrix::identity(n)).rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(r.select_columns(&cols))
    }

    /// Solves `x · self = v` for a row vector `x`, if a solution exists.
    pub fn solve_left(&self, v: &[u32], f: &Field) -> Option<Vec<u32>> {
        assert_eq!(v.len(), self.cols);
        // transpose: self^T x^T = v^T
        let aug = self.transpose().hstack(&Matrix::from_vec(self.cols, 1, v.to_vec()));
        let (r, pivots) = aug.rref(f);
        if pivots.last() == Some(&self.rows) {
            return None;
        }
        let mut x = vec![0u32; self.rows];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(i, self.rows);
        }
        Some(x)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Field {
        Field::from_order(q).unwrap()
    }

    #[test]
    fn rank_examples() {
        let f = gf(2);
        assert_eq!(Matrix::zeros(2, 2).rank(&f), 0);
        assert_eq!(Matrix::identity(2).rank(&f), 2);
        assert_eq!(Matrix::from_rows(&[vec![1, 1], vec![1, 1]]).rank(&f), 1);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let f = gf(4);
        let m = Matrix::from_rows(&[vec![1, 2, 3, 0, 1], vec![0, 1, 1, 2, 3], vec![1, 3, 2, 2, 2]]);
        let ns = m.nullspace(&f);
        assert_eq!(ns.rows() + m.rank(&f), m.cols());
        assert!(m.mul(&ns.transpose(), &f).is_zero());
        assert_eq!(ns.rank(&f), ns.rows());
    }

    #[test]
    fn inverse_roundtrip_gf8() {
        let f = gf(8);
        let m = Matrix::from_rows(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 0, 1]]);
        if let Some(inv) = m.inverse(&f) {
            assert_eq!(m.mul(&inv, &f), Matrix::identity(3));
        } else {
            assert!(m.rank(&f) < 3);
        }
        let singular = Matrix::from_rows(&[vec![1, 2], vec![1, 2]]);
        assert!(singular.inverse(&f).is_none());
    }

    #[test]
    fn solve_left_recovers_combination() {
        let f = gf(3);
        let m = Matrix::from_rows(&[vec![1, 0, 2, 1], vec![0, 1, 1, 1]]);
        let v = m.left_mul_vec(&[2, 1], &f);
        assert_eq!(m.solve_left(&v, &f), Some(vec![2, 1]));
        assert_eq!(m.solve_left(&[0, 0, 1, 0], &f), None);
    }

    #[test]
    fn rank_matches_exhaustive_span_size() {
        // |row space| = q^rank, counted by enumerating all combinations
        let f = gf(3);
        let m = Matrix::from_rows(&[vec![1, 2, 0], vec![2, 1, 0], vec![0, 1, 1]]);
        let mut span = std::collections::HashSet::new();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    span.insert(m.left_mul_vec(&[a, b, c], &f));
                }
            }
        }
        assert_eq!(span.len(), 3usize.pow(m.rank(&f) as u32));
    }
}
