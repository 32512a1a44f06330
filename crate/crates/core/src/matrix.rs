//! Dense exact matrices and Gaussian elimination.
//!
//! Matrices act on column vectors. All reductions skip zero entries, which
//! matters: the systems built for hom spaces are extremely sparse.

use std::fmt;

use crate::field::{Field, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Row echelon data: the reduced rows and the pivot column of each.
pub struct Echelon {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

/// Reduces `rows` in place to reduced row echelon form; returns pivot columns.
pub fn rref_rows(rows: &mut Vec<Vec<Scalar>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].inv();
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, tail) = tail.split_first_mut().unwrap();
        let nz: Vec<usize> = (c..ncols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for row in head.iter_mut().chain(tail.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &j in &nz {
                row[j].sub_mul(&factor, &pivot_row[j]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>, cols: usize) -> Matrix {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix {
            rows: nrows,
            cols,
            field,
            data,
        }
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, field, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, nrows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        Matrix::from_fn(field, nrows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let na = -a;
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.data[i * rhs.cols + j].sub_mul(&na, b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    pub fn trace(&self) -> Scalar {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn hstack(field: Field, rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "hstack row mismatch");
            for i in 0..rows {
                for j in 0..m.cols {
                    out.set(i, off + j, m.get(i, j).clone());
                }
            }
            off += m.cols;
        }
        out
    }

    pub fn vstack(field: Field, cols: usize, parts: &[&Matrix]) -> Matrix {
        let rows: usize = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            assert_eq!(m.cols, cols, "vstack column mismatch");
            data.extend(m.data.iter().cloned());
        }
        Matrix { rows, cols, field, data }
    }

    pub fn block_diag(field: Field, parts: &[&Matrix]) -> Matrix {
        let rows: usize = parts.iter().map(|m| m.rows).sum();
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            for i in 0..m.rows {
                for j in 0..m.cols {
                    out.set(r0 + i, c0 + j, m.get(i, j).clone());
                }
            }
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn submatrix(&self, r0: usize, nr: usize, c0: usize, nc: usize) -> Matrix {
        Matrix::from_fn(self.field, nr, nc, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn echelon(&self) -> Echelon {
        let mut rows = self.to_rows();
        let pivots = rref_rows(&mut rows, self.cols);
        Echelon { rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Columns form a basis of the null space.
    pub fn kernel(&self) -> Matrix {
        let ech = self.echelon();
        kernel_from_echelon(self.field, &ech, self.cols)
    }

    /// A subset of the columns of `self` forming a basis of its column space.
    pub fn column_space(&self) -> Matrix {
        let ech = self.echelon();
        self.select_columns(&ech.pivots)
    }

    /// Solves `self * x = rhs`; `None` when inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve shape mismatch");
        let aug = Matrix::hstack(self.field, self.rows, &[self, rhs]);
        let ech = aug.echelon();
        if ech.pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (r, &c) in ech.pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(c, j, ech.rows[r][self.cols + j].clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&Matrix::identity(self.field, self.rows))?;
        if self.rank() == self.rows {
            Some(x)
        } else {
            None
        }
    }

    /// Unit vectors that extend the columns of `self` (assumed independent)
    /// to a basis of the ambient space.
    pub fn complement_units(&self) -> Vec<usize> {
        let t = self.transpose();
        let ech = t.echelon();
        (0..self.rows).filter(|c| !ech.pivots.contains(c)).collect()
    }
}

pub fn kernel_from_echelon(field: Field, ech: &Echelon, ncols: usize) -> Matrix {
    let free: Vec<usize> = (0..ncols).filter(|c| !ech.pivots.contains(c)).collect();
    let mut k = Matrix::zeros(field, ncols, free.len());
    for (j, &f) in free.iter().enumerate() {
        k.set(f, j, field.one());
        for (r, &pc) in ech.pivots.iter().enumerate() {
            let v = &ech.rows[r][f];
            if !v.is_zero() {
                k.set(pc, j, -v);
            }
        }
    }
    k
}

/// Incremental row-reduced basis of a subspace, used to test membership and
/// to reduce vectors to normal form.
#[derive(Clone, Debug)]
pub struct RowSpace {
    ncols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(ncols: usize) -> RowSpace {
        RowSpace {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the current basis.
    pub fn reduce(&self, v: &mut [Scalar]) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if v[pc].is_zero() {
                continue;
            }
            let factor = v[pc].clone();
            for (j, x) in row.iter().enumerate().skip(pc) {
                if !x.is_zero() {
                    v[j].sub_mul(&factor, x);
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ncols);
        let mut w = v;
        self.reduce(&mut w);
        let Some(pc) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[pc].inv();
        for x in w.iter_mut().skip(pc) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[pc].is_zero() {
                continue;
            }
            let factor = row[pc].clone();
            for (j, x) in w.iter().enumerate().skip(pc) {
                if !x.is_zero() {
                    row[j].sub_mul(&factor, x);
                }
            }
        }
        let pos = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(pos, pc);
        self.rows.insert(pos, w);
        true
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }
}

/// Sparse row echelon form built one equation at a time. Used for the large,
/// very sparse linear systems behind hom spaces.
pub struct SparseEchelon {
    field: Field,
    ncols: usize,
    /// Pivot rows keyed by leading column; each row is sorted by column and
    /// normalised to a leading one.
    rows: std::collections::BTreeMap<usize, Vec<(usize, Scalar)>>,
}

fn axpy_sparse(row: &[(usize, Scalar)], factor: &Scalar, pivot: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
    // row - factor * pivot
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, -(factor * &pivot[j].1)));
            j += 1;
        } else {
            let mut v = row[i].1.clone();
            v.sub_mul(factor, &pivot[j].1);
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl SparseEchelon {
    pub fn new(field: Field, ncols: usize) -> SparseEchelon {
        SparseEchelon { field, ncols, rows: Default::default() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds an equation given as (column, coefficient) pairs in any order.
    pub fn push(&mut self, mut row: Vec<(usize, Scalar)>) {
        row.retain(|(_, v)| !v.is_zero());
        row.sort_by_key(|e| e.0);
        // merge duplicate columns
        let mut merged: Vec<(usize, Scalar)> = Vec::with_capacity(row.len());
        for (c, v) in row {
            match merged.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += &v,
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|(_, v)| !v.is_zero());
        let mut row = merged;
        loop {
            let Some((lead, coeff)) = row.first().cloned() else { return };
            match self.rows.get(&lead) {
                Some(p) => row = axpy_sparse(&row, &coeff, p),
                None => {
                    let inv = coeff.inv();
                    for e in row.iter_mut() {
                        e.1 = &e.1 * &inv;
                    }
                    self.rows.insert(lead, row);
                    return;
                }
            }
        }
    }

    /// Basis of the solution space of all pushed equations (dense vectors).
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.rows.contains_key(c)).collect();
        let mut out = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vec![self.field.zero(); self.ncols];
            x[f] = self.field.one();
            for (&c, row) in self.rows.iter().rev() {
                if c > f {
                    continue;
                }
                let mut acc = self.field.zero();
                for (j, v) in row.iter().skip(1) {
                    if !x[*j].is_zero() {
                        acc.sub_mul(v, &x[*j]);
                    }
                }
                x[c] = acc;
            }
            out.push(x);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        let f = Field::Rationals;
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(f, rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect(), cols)
    }

    #[test]
    fn sparse_kernel_matches_dense() {
        let m = q(&[&[1, 2, 0, -1], &[0, 0, 1, 3], &[1, 2, 1, 2]]);
        let mut se = SparseEchelon::new(Field::Rationals, 4);
        for i in 0..3 {
            se.push(m.row(i).iter().cloned().enumerate().collect());
        }
        assert_eq!(se.rank(), 2);
        let k = se.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn rank_and_kernel() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn solve_and_inverse() {
        let m = q(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let b = q(&[&[3], &[2]]);
        let x = m.solve(&b).unwrap();
        assert_eq!(x, q(&[&[1], &[1]]));
        let singular = q(&[&[1, 1], &[1, 1]]);
        assert!(singular.inverse().is_none());
        assert!(singular.solve(&q(&[&[1], &[0]])).is_none());
    }

    #[test]
    fn rowspace_membership() {
        let f = Field::Prime(3);
        let mut rs = RowSpace::new(3);
        assert!(rs.insert(vec![f.from_i64(1), f.from_i64(1), f.from_i64(0)]));
        assert!(rs.insert(vec![f.from_i64(0), f.from_i64(1), f.from_i64(1)]));
        assert!(!rs.insert(vec![f.from_i64(1), f.from_i64(2), f.from_i64(1)]));
        assert!(rs.contains(&[f.from_i64(1), f.from_i64(0), f.from_i64(2)]));
        assert!(!rs.contains(&[f.from_i64(1), f.from_i64(0), f.from_i64(0)]));
    }

    #[test]
    fn complement_extends_to_basis() {
        let m = q(&[&[1], &[1], &[0]]);
        let units = m.complement_units();
        assert_eq!(units.len(), 2);
        let mut cols = vec![m.column(0)];
        for u in units {
            let mut e = vec![Field::Rationals.zero(); 3];
            e[u] = Field::Rationals.one();
            cols.push(e);
        }
        assert_eq!(Matrix::from_columns(Field::Rationals, 3, &cols).rank(), 3);
    }
}
