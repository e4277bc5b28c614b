//! Dense exact linear algebra over any [`Field`].
//!
//! Elimination is fraction-free (Bareiss) down to row echelon form and then
//! normalised to the reduced row echelon form, which is unique. Pivots are the
//! first nonzero entry in column order. Vectors are columns: a matrix acts
//! on the left.

use std::fmt;
use std::ops::Index;

use thiserror::Error;

use crate::fields::{Field, FieldError, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("descriptor mismatch: {0} vs {1}")]
    DescriptorMismatch(String, String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("no solution")]
    NoSolution,
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn new(field: &Field, entries: Vec<Scalar>) -> Result<Vector, LinalgError> {
        if let Some(bad) = entries.iter().find(|e| e.field() != field) {
            return Err(LinalgError::DescriptorMismatch(field.to_string(), bad.field().to_string()));
        }
        Ok(Vector { field: field.clone(), entries })
    }

    pub fn zero(field: &Field, n: usize) -> Vector {
        Vector { field: field.clone(), entries: vec![field.zero(); n] }
    }

    pub fn unit(field: &Field, n: usize, i: usize) -> Vector {
        let mut v = Vector::zero(field, n);
        v.entries[i] = field.one();
        v
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, o: &Vector) -> Vector {
        assert_eq!(self.len(), o.len(), "vector length mismatch");
        Vector {
            field: self.field.clone(),
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Vector) -> Vector {
        assert_eq!(self.len(), o.len(), "vector length mismatch");
        Vector {
            field: self.field.clone(),
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector { field: self.field.clone(), entries: self.entries.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> Vector {
        Vector { field: self.field.clone(), entries: self.entries.iter().map(|a| -a).collect() }
    }

    pub fn dot(&self, o: &Vector) -> Scalar {
        self.entries.iter().zip(&o.entries).fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
    }

    /// `sum_i coeffs[i] * vectors[i]`; all vectors must have length `n`.
    pub fn combination(field: &Field, n: usize, coeffs: &[Scalar], vectors: &[Vector]) -> Vector {
        let mut acc = Vector::zero(field, n);
        for (c, v) in coeffs.iter().zip(vectors) {
            if !c.is_zero() {
                acc = acc.add(&v.scale(c));
            }
        }
        acc
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch("ragged rows".into()));
            }
            data.extend(r);
        }
        if let Some(bad) = data.iter().find(|e| e.field() != field) {
            return Err(LinalgError::DescriptorMismatch(field.to_string(), bad.field().to_string()));
        }
        Ok(Matrix { field: field.clone(), rows: nrows, cols, data })
    }

    /// Matrix whose columns are `columns`, each of length `rows`.
    pub fn from_columns(field: &Field, rows: usize, columns: &[Vector]) -> Result<Matrix, LinalgError> {
        let mut m = Matrix::zero(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(LinalgError::DimensionMismatch(format!(
                    "column {j} has length {}, expected {rows}",
                    c.len()
                )));
            }
            if c.field() != field {
                return Err(LinalgError::DescriptorMismatch(field.to_string(), c.field().to_string()));
            }
            for i in 0..rows {
                m.set(i, j, c[i].clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Vector {
        Vector { field: self.field.clone(), entries: self.data[r * self.cols..(r + 1) * self.cols].to_vec() }
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector { field: self.field.clone(), entries: (0..self.rows).map(|r| self.get(r, c).clone()).collect() }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    fn check_field(&self, other: &Field) -> Result<(), LinalgError> {
        if &self.field == other {
            Ok(())
        } else {
            Err(LinalgError::DescriptorMismatch(self.field.to_string(), other.to_string()))
        }
    }

    pub fn mul(&self, o: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_field(&o.field)?;
        if self.cols != o.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut m = Matrix::zero(&self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = m.get(i, j) + &(a * b);
                        m.set(i, j, v);
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector, LinalgError> {
        self.check_field(v.field())?;
        if self.cols != v.len() {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let entries = (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(self.field.zero(), |acc, k| {
                    let a = self.get(i, k);
                    if a.is_zero() || v[k].is_zero() {
                        acc
                    } else {
                        &acc + &(a * &v[k])
                    }
                })
            })
            .collect();
        Ok(Vector { field: self.field.clone(), entries })
    }

    pub fn add(&self, o: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_field(&o.field)?;
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(LinalgError::DimensionMismatch("matrix sum".into()));
        }
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, o: &Matrix) -> Result<Matrix, LinalgError> {
        self.add(&o.scale(&-self.field.one()))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// `self - c * I` for a square matrix.
    pub fn shift(&self, c: &Scalar) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let v = m.get(i, i) - c;
            m.set(i, i, v);
        }
        m
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut acc = Matrix::identity(&self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self).expect("square");
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| {
                let v = self.get(i, j);
                if i == j { v.is_one() } else { v.is_zero() }
            }))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// Fraction-free row echelon form and its pivot columns.
    fn bareiss_echelon(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut prev = self.field.one();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(p, r);
            let piv = a.get(r, c).clone();
            let prev_inv = prev.inv().expect("previous pivot is nonzero");
            for i in r + 1..a.rows {
                let lead = a.get(i, c).clone();
                for j in c + 1..a.cols {
                    let v = &(&(&piv * a.get(i, j)) - &(&lead * a.get(r, j))) * &prev_inv;
                    a.set(i, j, v);
                }
                a.set(i, c, self.field.zero());
            }
            prev = piv;
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    /// Reduced row echelon form (unique) with pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let (mut a, pivots) = self.bareiss_echelon();
        for (k, &c) in pivots.iter().enumerate().rev() {
            let inv = a.get(k, c).inv().expect("pivot is nonzero");
            for j in c..a.cols {
                let v = a.get(k, j) * &inv;
                a.set(k, j, v);
            }
            for i in 0..k {
                let f = a.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..a.cols {
                    let v = a.get(i, j) - &(&f * a.get(k, j));
                    a.set(i, j, v);
                }
            }
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.bareiss_echelon().1.len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zero(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zero(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{}", self.row(r))?;
        }
        Ok(())
    }
}

/// Echelon-canonical basis of the kernel: one vector per free column, with a
/// one in that column and zeros in the other free columns.
pub fn nullspace(m: &Matrix) -> Vec<Vector> {
    let (r, pivots) = m.rref();
    let field = m.field();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = Vector::unit(field, m.cols(), f);
            for (k, &pc) in pivots.iter().enumerate() {
                v.entries[pc] = -r.get(k, f);
            }
            v
        })
        .collect()
}

/// A solution of `m x = b`, free variables set to zero.
pub fn solve(m: &Matrix, b: &Vector) -> Result<Vector, LinalgError> {
    m.check_field(b.field())?;
    if b.len() != m.rows() {
        return Err(LinalgError::DimensionMismatch(format!(
            "{} rows but right-hand side of length {}",
            m.rows(),
            b.len()
        )));
    }
    let mut aug = Matrix::zero(m.field(), m.rows(), m.cols() + 1);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, m.cols(), b[i].clone());
    }
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&m.cols()) {
        return Err(LinalgError::NoSolution);
    }
    let mut x = Vector::zero(m.field(), m.cols());
    for (k, &c) in pivots.iter().enumerate() {
        x.entries[c] = r.get(k, m.cols()).clone();
    }
    Ok(x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// Coefficients `c` with `v = sum c_i B_i`.
    InSpan(Vec<Scalar>),
    /// A functional `y` with `y . B_i = 0` for all `i` and `y . v != 0`.
    NotInSpan { certificate: Vector },
}

impl Membership {
    pub fn coefficients(&self) -> Option<&[Scalar]> {
        match self {
            Membership::InSpan(c) => Some(c),
            Membership::NotInSpan { .. } => None,
        }
    }

    pub fn is_member(&self) -> bool {
        matches!(self, Membership::InSpan(_))
    }
}

/// Decides `v in span(basis)`.
pub fn span_membership(basis: &[Vector], v: &Vector) -> Result<Membership, LinalgError> {
    let field = v.field();
    let b = Matrix::from_columns(field, v.len(), basis)?;
    match solve(&b, v) {
        Ok(x) => Ok(Membership::InSpan(x.into_entries())),
        Err(LinalgError::NoSolution) => {
            let certificate = nullspace(&b.transpose())
                .into_iter()
                .find(|y| !y.dot(v).is_zero())
                .expect("a vector outside the column space is detected by the left kernel");
            Ok(Membership::NotInSpan { certificate })
        }
        Err(e) => Err(e),
    }
}

/// Reduced-echelon basis of `span(vectors)`, as row vectors.
pub fn row_basis(field: &Field, n: usize, vectors: &[Vector]) -> Vec<Vector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(field, vectors.iter().map(|v| v.entries().to_vec()).collect())
        .expect("vectors share the field");
    debug_assert_eq!(m.cols(), n);
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|k| r.row(k)).collect()
}

#[cfg(test)]
mod tests;
