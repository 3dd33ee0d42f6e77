//! Exact matrices with sparse row storage.
//!
//! Semantically a matrix is a dense `rows × cols` array in row-major
//! layout over one [`FieldSpec`]; the storage only records nonzero
//! entries because almost every morphism in this crate is a Kronecker
//! product of structure constants and permutations. The index convention
//! for [`Matrix::kron`] places the tensor factor indices in row-major
//! ("big-endian") order, which makes the tensor product strictly
//! associative and strictly unital at the matrix level.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// A `rows × cols` matrix over `field`. Rows store sorted `(col, value)`
/// pairs with no explicit zeros; this normal form makes equality a plain
/// structural comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Vec<(usize, Scalar)>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: FieldSpec) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Matrix {
        let mut m = Matrix::zeros(n, n, field);
        let one = field.one();
        for i in 0..n {
            m.data[i].push((i, one.clone()));
        }
        m
    }

    /// Builds from dense rows; zero entries are dropped.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::shape("from_rows", format!("{c} columns per row"), "ragged rows"));
        }
        let mut m = Matrix::zeros(r, c, field);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                if !v.is_zero() {
                    m.data[i].push((j, v));
                }
            }
        }
        Ok(m)
    }

    /// Builds from dense integer rows (convenient in tests and builtins).
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Matrix {
        let converted = rows
            .iter()
            .map(|row| row.iter().map(|&n| field.from_i64(n)).collect())
            .collect();
        Matrix::from_rows(field, converted).expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols);
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => {
                if v.is_zero() {
                    self.data[i].remove(k);
                } else {
                    self.data[i][k].1 = v;
                }
            }
            Err(k) => {
                if !v.is_zero() {
                    self.data[i].insert(k, (j, v));
                }
            }
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self
                .data
                .iter()
                .enumerate()
                .all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1.is_one())
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch)
        } else {
            Ok(())
        }
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::shape(
                "matrix product",
                format!("inner dimension {}", self.cols),
                format!("{}", other.rows),
            ));
        }
        let f = self.field;
        let mut out = Matrix::zeros(self.rows, other.cols, f);
        let mut acc: Vec<Scalar> = Vec::new();
        let mut touched: Vec<usize> = Vec::new();
        let mut mark = vec![false; other.cols];
        acc.resize(other.cols, f.zero());
        for i in 0..self.rows {
            for (k, a) in &self.data[i] {
                for (j, b) in &other.data[*k] {
                    let t = f.mul(a, b);
                    if !mark[*j] {
                        mark[*j] = true;
                        touched.push(*j);
                        acc[*j] = t;
                    } else {
                        acc[*j] = f.add(&acc[*j], &t);
                    }
                }
            }
            touched.sort_unstable();
            for &j in &touched {
                let v = std::mem::replace(&mut acc[j], f.zero());
                if !v.is_zero() {
                    out.data[i].push((j, v));
                }
                mark[j] = false;
            }
            touched.clear();
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::shape(
                "matrix sum",
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", other.rows, other.cols),
            ));
        }
        let f = self.field;
        let mut out = Matrix::zeros(self.rows, self.cols, f);
        for i in 0..self.rows {
            let (a, b) = (&self.data[i], &other.data[i]);
            let (mut x, mut y) = (0, 0);
            while x < a.len() || y < b.len() {
                let next = match (a.get(x), b.get(y)) {
                    (Some((ja, va)), Some((jb, _))) if ja < jb => {
                        x += 1;
                        (*ja, va.clone())
                    }
                    (Some((ja, _)), Some((jb, vb))) if jb < ja => {
                        y += 1;
                        (*jb, vb.clone())
                    }
                    (Some((ja, va)), Some((_, vb))) => {
                        let s = f.add(va, vb);
                        x += 1;
                        y += 1;
                        (*ja, s)
                    }
                    (Some((ja, va)), None) => {
                        x += 1;
                        (*ja, va.clone())
                    }
                    (None, Some((jb, vb))) => {
                        y += 1;
                        (*jb, vb.clone())
                    }
                    (None, None) => unreachable!(),
                };
                if !next.1.is_zero() {
                    out.data[i].push(next);
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Matrix {
        let f = self.field;
        let mut out = self.clone();
        for row in &mut out.data {
            for (_, v) in row {
                *v = f.neg(v);
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let f = self.field;
        if c.is_zero() {
            return Matrix::zeros(self.rows, self.cols, f);
        }
        let mut out = self.clone();
        for row in &mut out.data {
            for (_, v) in row {
                *v = f.mul(v, c);
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for (j, v) in &self.data[i] {
                out.data[*j].push((i, v.clone()));
            }
        }
        // Column-major traversal already yields sorted rows.
        out
    }

    /// Kronecker product: entry at row `i·b.rows + k`, col `j·b.cols + l`
    /// is `a[i,j] · b[k,l]`. Strictly associative and unital for the 1×1
    /// identity under this indexing.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        let f = self.field;
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols, f);
        for i in 0..self.rows {
            for k in 0..other.rows {
                let dst = &mut out.data[i * other.rows + k];
                for (j, a) in &self.data[i] {
                    for (l, b) in &other.data[k] {
                        dst.push((j * other.cols + l, f.mul(a, b)));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Dense copy, row-major.
    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![self.field.zero(); self.cols]; self.rows];
        for i in 0..self.rows {
            for (j, v) in &self.data[i] {
                out[i][*j] = v.clone();
            }
        }
        out
    }

    /// Reduced row echelon form of a dense copy; returns (rref, pivot columns).
    fn rref(&self) -> (Vec<Vec<Scalar>>, Vec<usize>) {
        let f = self.field;
        let mut m = self.to_dense();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = f.inv(&m[row][col]).expect("pivot nonzero");
            for j in col..self.cols {
                m[row][j] = f.mul(&m[row][j], &inv);
            }
            for r in 0..self.rows {
                if r != row && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for j in col..self.cols {
                        let t = f.mul(&factor, &m[row][j]);
                        m[r][j] = f.sub(&m[r][j], &t);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Exact row rank.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Echelon-normalized basis of `{v : self·v = 0}`, one column vector
    /// per free column, each with a `1` in its free position.
    pub fn nullspace(&self) -> Vec<Matrix> {
        let f = self.field;
        let (m, pivots) = self.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = Matrix::zeros(self.cols, 1, f);
            v.set(free, 0, f.one());
            for (r, &p) in pivots.iter().enumerate() {
                let c = &m[r][free];
                if !c.is_zero() {
                    v.set(p, 0, f.neg(c));
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Two-sided inverse of a square matrix.
    pub fn invert(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::shape(
                "invert",
                "square matrix".to_string(),
                format!("{}x{}", self.rows, self.cols),
            ));
        }
        let f = self.field;
        let n = self.rows;
        let mut m = self.to_dense();
        for (i, row) in m.iter_mut().enumerate() {
            row.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
        }
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..n).find(|&r| !m[r][col].is_zero()) else {
                return Err(Error::SingularMatrix);
            };
            m.swap(row, p);
            let inv = f.inv(&m[row][col])?;
            for j in col..2 * n {
                m[row][j] = f.mul(&m[row][j], &inv);
            }
            for r in 0..n {
                if r != row && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for j in col..2 * n {
                        let t = f.mul(&factor, &m[row][j]);
                        m[r][j] = f.sub(&m[r][j], &t);
                    }
                }
            }
            row += 1;
        }
        let inverse_rows = m.into_iter().map(|r| r[n..].to_vec()).collect();
        Matrix::from_rows(f, inverse_rows)
    }

    /// Column-major flattening of the matrix into a single column, i.e.
    /// stacking entries row by row ("vec" with the row-major convention).
    pub fn vec_rows(&self) -> Matrix {
        let mut out = Matrix::zeros(self.rows * self.cols, 1, self.field);
        for i in 0..self.rows {
            for (j, v) in &self.data[i] {
                out.data[i * self.cols + j].push((0, v.clone()));
            }
        }
        out
    }

    /// Iterates nonzero entries as `(row, col, value)`.
    pub fn iter_nonzero(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }
}

/// The `(mn)×(mn)` permutation matrix sending basis index `i·n + j` to
/// `j·m + i`; the symmetry `X⊗Y → Y⊗X` for `dim X = m`, `dim Y = n`.
pub fn swap_perm(m: usize, n: usize, field: FieldSpec) -> Matrix {
    let mut out = Matrix::zeros(m * n, n * m, field);
    let one = field.one();
    for i in 0..m {
        for j in 0..n {
            out.set(j * m + i, i * n + j, one.clone());
        }
    }
    out
}

/// Kronecker product of a slice of matrices (left to right).
pub fn kron_all(mats: &[&Matrix]) -> Result<Matrix> {
    let (first, rest) = mats.split_first().expect("nonempty");
    let mut acc = (*first).clone();
    for m in rest {
        acc = acc.kron(m)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    #[test]
    fn kron_identity_cases() {
        let i2 = Matrix::identity(2, q());
        let i3 = Matrix::identity(3, q());
        assert_eq!(i2.kron(&i3).unwrap(), Matrix::identity(6, q()));
        let m = Matrix::from_i64(q(), &[&[1, 2], &[3, 4]]);
        let two = Matrix::from_i64(q(), &[&[2]]);
        assert_eq!(two.kron(&m).unwrap(), m.scale(&q().from_i64(2)));
    }

    #[test]
    fn kron_elementwise() {
        let a = Matrix::from_i64(q(), &[&[1, 2]]);
        let b = Matrix::from_i64(q(), &[&[3], &[4]]);
        let expect = Matrix::from_i64(q(), &[&[3, 6], &[4, 8]]);
        assert_eq!(a.kron(&b).unwrap(), expect);
    }

    #[test]
    fn swap_perm_cases() {
        assert_eq!(swap_perm(1, 4, q()), Matrix::identity(4, q()));
        let s22 = swap_perm(2, 2, q());
        let expect = Matrix::from_i64(
            q(),
            &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]],
        );
        assert_eq!(s22, expect);
        let prod = swap_perm(3, 2, q()).mul(&swap_perm(2, 3, q())).unwrap();
        assert_eq!(prod, Matrix::identity(6, q()));
    }

    #[test]
    fn nullspace_cases() {
        assert!(Matrix::identity(4, q()).nullspace().is_empty());
        let z = Matrix::zeros(3, 2, q());
        let basis = z.nullspace();
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0], Matrix::from_i64(q(), &[&[1], &[0]]));
        assert_eq!(basis[1], Matrix::from_i64(q(), &[&[0], &[1]]));
        let m = Matrix::from_i64(q(), &[&[1, 2]]);
        let basis = m.nullspace();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], Matrix::from_i64(q(), &[&[-2], &[1]]));
    }

    #[test]
    fn rank_and_invert() {
        assert_eq!(Matrix::identity(3, q()).rank(), 3);
        let two = Matrix::from_i64(q(), &[&[2]]);
        let half = two.invert().unwrap();
        assert_eq!(half.get(0, 0), q().from_ratio(1, 2).unwrap());
        let s = swap_perm(2, 2, q());
        assert_eq!(s.invert().unwrap(), s);
        let sing = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]);
        assert!(matches!(sing.invert(), Err(Error::SingularMatrix)));
    }

    #[test]
    fn nullspace_rank_complement() {
        let m = Matrix::from_i64(q(), &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let basis = m.nullspace();
        assert_eq!(m.rank() + basis.len(), m.cols());
        for v in &basis {
            assert!(m.mul(v).unwrap().is_zero());
        }
    }

    #[test]
    fn gf5_arithmetic() {
        let f = FieldSpec::Prime(5);
        let m = Matrix::from_i64(f, &[&[2, 3], &[1, 3]]);
        let inv = m.invert().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2, f));
    }
}
