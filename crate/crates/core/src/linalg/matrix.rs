use std::fmt;

use super::{FieldSpec, LinalgError, Scalar};

/// A dense row-major matrix with entries in a single field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_entries(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch { op: "from_entries", left: (rows, cols), right: (data.len(), 1) });
        }
        if let Some(bad) = data.iter().find(|s| !field.contains(s)) {
            return Err(LinalgError::InvalidField(format!("entry {bad} does not lie in {field}")));
        }
        Ok(Matrix { field, rows, cols, data })
    }

    /// Convenience constructor from integer rows, mostly for tests and fixtures.
    pub fn from_i64_rows(field: FieldSpec, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.iter().flatten().map(|&v| field.from_i64(v)).collect();
        Matrix { field, rows: r, cols: c, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch { op: "mul", left: self.shape(), right: rhs.shape() });
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Matrix product; panics on a shape mismatch.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product shape mismatch")
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| -a).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: &Scalar, other: &Matrix) {
        assert_eq!(self.shape(), other.shape());
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a = &*a + &(s * b);
            }
        }
    }

    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + rhs.cols);
        out.paste(0, 0, self);
        out.paste(0, self.cols, rhs);
        out
    }

    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    pub fn block_diag(field: FieldSpec, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(Matrix::rows).sum();
        let cols = blocks.iter().map(Matrix::cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.paste(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend(self.row(r).iter().cloned());
        }
        Matrix { field: self.field, rows: rows.len(), cols: self.cols, data }
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        let cols = m.cols;
        for c in 0..cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..cols {
                let idx = r * cols + j;
                if !m.data[idx].is_zero() {
                    m.data[idx] = &m.data[idx] * &inv;
                }
            }
            let pivot_row: Vec<Scalar> = m.data[r * cols + c..(r + 1) * cols].to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for (k, pv) in pivot_row.iter().enumerate() {
                    if pv.is_zero() {
                        continue;
                    }
                    let idx = i * cols + c + k;
                    m.data[idx] = &m.data[idx] - &(&f * pv);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns form a basis of the null space.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.field, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.set(f, j, self.field.one());
            for (i, &p) in pivots.iter().enumerate() {
                let v = r.get(i, f);
                if !v.is_zero() {
                    k.set(p, j, -v);
                }
            }
        }
        k
    }

    /// Some `x` with `self * x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>, LinalgError> {
        if self.rows != b.rows {
            return Err(LinalgError::DimensionMismatch { op: "solve", left: self.shape(), right: b.shape() });
        }
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, r.get(i, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let (r, pivots) = self.hstack(&Matrix::identity(self.field, self.rows)).rref();
        if pivots.iter().filter(|&&p| p < self.cols).count() < self.rows {
            return None;
        }
        Some(r.submatrix(0..self.rows, self.cols..2 * self.cols))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// A basis (as columns) of the column space, chosen among the original columns.
    pub fn column_space(&self) -> Matrix {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }

    /// Flattens row-major into a single column vector.
    pub fn to_vec(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    pub fn power(&self, k: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        self.power(self.rows).is_zero()
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        let mut t = self.field.zero();
        for i in 0..self.rows {
            t = &t + self.get(i, i);
        }
        t
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Coordinates on `K^n / U` for a subspace `U`, with a section back into `K^n`.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    /// `dim(K^n/U) x n`, kills `U`.
    pub projection: Matrix,
    /// `n x dim(K^n/U)`, standard basis vectors completing a basis of `U`.
    pub section: Matrix,
    /// Basis of `U` as columns.
    pub subspace: Matrix,
}

impl QuotientSpace {
    /// `span` holds spanning columns of `U` inside `K^n` (`n = span.rows()`).
    pub fn new(span: &Matrix) -> Self {
        let field = span.field();
        let n = span.rows();
        let sub = span.column_space();
        let k = sub.cols();
        let (_, pivots) = sub.hstack(&Matrix::identity(field, n)).rref();
        let complement: Vec<usize> = pivots.iter().filter(|&&p| p >= k).map(|p| p - k).collect();
        let section = Matrix::identity(field, n).select_columns(&complement);
        let basis = sub.hstack(&section);
        let inv = basis.inverse().expect("subspace plus complement is a basis");
        let projection = inv.submatrix(k..n, 0..n);
        QuotientSpace { projection, section, subspace: sub }
    }

    pub fn dim(&self) -> usize {
        self.section.cols()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(Q, 3).rank(), 3);
        assert_eq!(Matrix::zeros(Q, 2, 5).rank(), 0);
        assert_eq!(Matrix::from_i64_rows(Q, &[vec![1, 2], vec![2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(Q, 2).kernel_basis().cols(), 0);
        assert_eq!(Matrix::zeros(Q, 2, 2).kernel_basis().rank(), 2);
        let k = Matrix::from_i64_rows(Q, &[vec![1, 1]]).kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.get(0, 0), &(-k.get(1, 0)));
        assert!(!k.get(0, 0).is_zero());
    }

    #[test]
    fn solve_examples() {
        let b = Matrix::from_i64_rows(Q, &[vec![3], vec![-1]]);
        assert_eq!(Matrix::identity(Q, 2).solve(&b).unwrap(), Some(b.clone()));
        assert_eq!(Matrix::zeros(Q, 2, 2).solve(&b).unwrap(), None);
        let x = Matrix::from_i64_rows(Q, &[vec![2]]).solve(&Matrix::from_i64_rows(Q, &[vec![1]])).unwrap().unwrap();
        assert_eq!(x.get(0, 0), &Q.parse("1/2").unwrap());
        assert!(Matrix::identity(Q, 2).solve(&Matrix::zeros(Q, 3, 1)).is_err());
    }

    #[test]
    fn quotient_kills_subspace() {
        let u = Matrix::from_i64_rows(Q, &[vec![1], vec![1], vec![0]]);
        let qs = QuotientSpace::new(&u);
        assert_eq!(qs.dim(), 2);
        assert!(qs.projection.mul(&u).is_zero());
        assert_eq!(qs.projection.mul(&qs.section), Matrix::identity(Q, 2));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_i64_rows(Q, &[vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(Q, 2));
        assert!(Matrix::from_i64_rows(Q, &[vec![1, 2], vec![2, 4]]).inverse().is_none());
    }
}
